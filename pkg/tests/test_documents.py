import pytest

from soclekit.documents import (
    AntichainDocument,
    DocumentError,
    document_for,
    format_document,
    parse_document,
)
from soclekit.lattice import Antichain, NotAntichainError


SAMPLE = """\
# the worked three-variable instance
d=3
role=socle
2,2,3
3,3,2
"""


def test_parse_sample():
    doc = parse_document(SAMPLE)
    assert doc.dimension == 3
    assert doc.role == "socle"
    assert doc.vectors == ((2, 2, 3), (3, 3, 2))


def test_round_trip():
    doc = parse_document(SAMPLE)
    assert parse_document(format_document(doc)) == doc


def test_round_trip_preserves_antichains():
    ac = Antichain([(0, -2, 5), (1, 3, -1)])
    doc = document_for(ac, "points")
    assert parse_document(format_document(doc)).antichain() == ac


def test_vectors_written_sorted():
    doc = AntichainDocument(2, "points", ((5, 0), (1, 2)))
    assert format_document(doc).splitlines()[2:] == ["1,2", "5,0"]


def test_comments_and_blank_lines_ignored():
    text = "\n# leading comment\nd=2\n\nrole=generators\n1,2  # trailing\n\n2,1\n"
    doc = parse_document(text)
    assert doc.vectors == ((1, 2), (2, 1))
    assert doc.role == "generators"


def test_missing_header():
    with pytest.raises(DocumentError) as err:
        parse_document("1,2,3\n")
    assert err.value.line == 1


def test_bad_dimension():
    with pytest.raises(DocumentError):
        parse_document("d=zero\n1\n")
    with pytest.raises(DocumentError):
        parse_document("d=0\n")


def test_bad_vector_reports_line():
    with pytest.raises(DocumentError) as err:
        parse_document("d=2\n1,2\n1,x\n")
    assert err.value.line == 3


def test_wrong_arity_reports_line():
    with pytest.raises(DocumentError) as err:
        parse_document("d=3\n1,2\n")
    assert err.value.line == 2


def test_unknown_role():
    with pytest.raises(DocumentError):
        parse_document("d=2\nrole=mystery\n1,2\n")


def test_empty_document():
    with pytest.raises(DocumentError):
        parse_document("# nothing here\n")


def test_comparable_vectors_parse_but_fail_antichain():
    doc = parse_document("d=2\n1,1\n2,2\n")
    with pytest.raises(NotAntichainError):
        doc.antichain()


def test_default_role():
    assert parse_document("d=1\n4\n").role == "points"
