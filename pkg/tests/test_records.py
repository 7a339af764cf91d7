from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from wcn.arith import Factorization, factorize
from wcn.classify import profile
from wcn.records import OutputRecord, tags_for

TAGS = ["prime", "prime-power", "weak-carmichael", "carmichael", "k-number", "giuga", "weak-giuga"]


@st.composite
def records(draw):
    n = draw(st.integers(min_value=2, max_value=(1 << 64) - 1))
    f = factorize(n)
    flags = tuple(draw(st.lists(st.sampled_from(TAGS), unique=True, max_size=4)))
    opt = lambda s: draw(st.none() | s)  # noqa: E731
    F = opt(st.integers(min_value=1, max_value=10**12))
    frac = opt(st.fractions(min_value=Fraction(1, 10**6), max_value=1))
    return OutputRecord(n, f, flags, F, frac, opt(st.integers(1, 10**9)), opt(st.integers(1, 10**9)))


@settings(max_examples=200, deadline=None)
@given(records())
def test_json_round_trip(rec):
    assert OutputRecord.from_json(rec.to_json()) == rec


@settings(max_examples=200, deadline=None)
@given(records())
def test_tsv_round_trip(rec):
    assert OutputRecord.from_tsv(rec.to_tsv()) == rec


def test_factorization_string_reparses():
    for n in (9, 561, 45441, 2**61 - 1, 3**40):
        f = factorize(n)
        assert Factorization.parse(OutputRecord.from_member(n, f).to_dict()["factorization"]) == f


def test_profile_record():
    rec = OutputRecord.from_profile(profile(45))
    assert rec.to_dict() == {
        "n": "45", "factorization": "3^2·5", "flags": ["weak-carmichael"],
        "F": 8, "f": "1/3", "c_w": 4, "lambda": 12,
    }
    assert rec.to_tsv() == "45\t3^2*5\tweak-carmichael\t8\t1/3\t4\t12"


def test_member_record_drops_empty_columns():
    rec = OutputRecord.from_member(561, factorize(561))
    assert rec.to_tsv() == "561\t3*11*17\tweak-carmichael,carmichael,k-number"
    assert tags_for(factorize(9)) == ("prime-power", "weak-carmichael")
