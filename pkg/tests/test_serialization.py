import random
from fractions import Fraction

import pytest

from src.bost_connes.crossed_product import BCElem, RationalBCElem
from src.cyclotomic.polynomials import IntPoly, cyclotomic_factorize
from src.cyclotomic.qz import QZ
from src.dynamical.graded_endo import GradedEndo
from src.dynamical.spectrum import quasi_unipotent_check
from src.equivariant.bold_k0 import BoldK0Elem
from src.equivariant.orbit_sum import OrbitSum
from src.expectation.hodge import HodgeTable
from src.group_ring.group_ring import GroupRingElem, in_fixed_subring, pi_n
from src.scissors.assembler import finite_set_assembler, k0_from_presentation
from src.serialization import codec
from src.utils.errors import SchemaError
from src.witt.truncation import TruncationSet
from src.witt.witt_vector import WittVector


def round_trip(encode, decode, value):
    return decode(codec.loads(codec.dumps(encode(value))))


def test_compact_output_keeps_insertion_order():
    x = GroupRingElem.basis("2/3")
    assert codec.dumps(codec.encode_group_ring(x)) == '[{"r":"2/3","c":1}]'
    assert codec.dumps({"b": 1, "a": 2}) == '{"b":1,"a":2}'
    assert codec.dumps([1], pretty=True) == "[\n  1\n]"


def test_group_ring_round_trip():
    rng = random.Random(0)
    for _ in range(50):
        x = GroupRingElem.from_dict({QZ.make(rng.randrange(30), rng.randint(1, 30)): rng.randint(-9, 9) for _ in range(5)})
        assert round_trip(codec.encode_group_ring, codec.decode_group_ring, x) == x


def test_rational_coefficients():
    assert codec.encode_group_ring(pi_n(2)) == [{"r": "0/1", "c": "1/2"}, {"r": "1/2", "c": "1/2"}]
    decoded = codec.decode_group_ring([{"r": "0/1", "c": "1/2"}, {"r": "1/3", "c": 2}])
    assert decoded.rational
    assert decoded.coefficient(QZ.make(1, 3)) == Fraction(2)


@pytest.mark.parametrize("payload, field", [
    ({"r": "1/3"}, "elem"),
    ([{"r": "1/3"}], "elem[0].c"),
    ([{"c": 1}], "elem[0].r"),
    ([{"r": 3, "c": 1}], "elem[0].r"),
    ([{"r": "1/0", "c": 1}], "elem[0].r"),
    ([{"r": "1/3", "c": "x"}], "elem[0].c"),
    ([{"r": "1/3", "c": 1.5}], "elem[0].c"),
    ([{"r": "1/3", "c": True}], "elem[0].c"),
])
def test_group_ring_schema_errors_name_the_field(payload, field):
    with pytest.raises(SchemaError) as info:
        codec.decode_group_ring(payload)
    assert info.value.field == field


def test_invalid_json():
    with pytest.raises(SchemaError) as info:
        codec.loads("[{", "elem")
    assert info.value.field == "elem"


def test_normal_forms():
    u = BCElem.mu_tilde(2) * BCElem.inject(GroupRingElem.basis("1/3")) + BCElem.mu_star(5)
    payload = codec.encode_normal_form(u)
    assert payload[0] == {"a": 1, "b": 5, "x": [{"r": "0/1", "c": 1}]}
    assert codec.decode_bc(payload) == u
    rational = codec.decode_bc([{"a": 2, "b": 1, "x": [{"r": "0/1", "c": "1/2"}]}])
    assert isinstance(rational, RationalBCElem)
    with pytest.raises(SchemaError) as info:
        codec.decode_bc([{"a": 0, "b": 1, "x": []}])
    assert info.value.field == "elem[0].a"


def test_orbit_sums_and_bold_elements():
    x = OrbitSum.from_dict({1: 2, 6: -1})
    assert codec.encode_orbit_sum(x) == {"orbits": {"1": 2, "6": -1}}
    assert round_trip(codec.encode_orbit_sum, codec.decode_orbit_sum, x) == x
    bold = codec.decode_bold([{"a": 2, "b": 2, "x": {"orbits": {"1": 1}}}])
    assert bold == BoldK0Elem.inject(OrbitSum.orbit(2))
    with pytest.raises(SchemaError) as info:
        codec.decode_orbit_sum({"orbits": {"two": 1}})
    assert info.value.field == "elem.orbits.two"
    with pytest.raises(SchemaError):
        codec.decode_orbit_sum({"orbits": {"0": 1}})


def test_witt_vectors():
    w = WittVector(TruncationSet.of_level(6), (1, -2, 0, 3))
    payload = codec.encode_witt(w)
    assert payload == {"trunc": [1, 2, 3, 6], "coords": {"1": 1, "2": -2, "3": 0, "6": 3}}
    assert round_trip(codec.encode_witt, codec.decode_witt, w) == w
    assert codec.decode_witt({"trunc": 6, "coords": {"2": 5}}) == WittVector(TruncationSet.of_level(6), (0, 5, 0, 0))
    with pytest.raises(SchemaError) as info:
        codec.decode_witt({"trunc": [1, 2], "coords": {"3": 1}})
    assert info.value.field == "elem.coords.3"
    with pytest.raises(SchemaError) as info:
        codec.decode_witt({"trunc": [1, 4], "coords": {}})
    assert info.value.field == "elem.trunc"
    assert codec.decode_ghosts({"1": 1, "2": 1}) == {1: 1, 2: 1}


def test_graded_endomorphisms():
    g = GradedEndo(((0, [[1]]), (1, [[0, -1], [1, 0]])))
    payload = codec.encode_graded(g)
    assert payload == {"blocks": [{"degree": 0, "matrix": [[1]]}, {"degree": 1, "matrix": [[0, -1], [1, 0]]}]}
    assert round_trip(codec.encode_graded, codec.decode_graded, g) == g
    with pytest.raises(SchemaError) as info:
        codec.decode_graded({"blocks": [{"degree": 0, "matrix": [[1, 2]]}]})
    assert info.value.field == "elem.blocks[0].matrix[0]"
    empty = codec.decode_graded({"blocks": [{"degree": 0, "matrix": []}, {"degree": 1, "matrix": [[1]]}]})
    assert empty == GradedEndo(((1, [[1]]),))


def test_certificates_and_factorizations():
    certificate = codec.encode_certificate(quasi_unipotent_check(GradedEndo.single([[0, -1], [1, 0]])))
    assert certificate == {
        "quasi_unipotent": True,
        "degrees": [{"degree": 0, "zero_mult": 0, "cyclo": {"4": 1}, "remainder": [1]}],
    }
    assert codec.encode_factorization(cyclotomic_factorize(IntPoly((-2, 0, 1))))["remainder"] == [-2, 0, 1]
    assert codec.decode_poly([1, 0, 1]) == IntPoly((1, 0, 1))


def test_membership():
    payload = codec.encode_membership(in_fixed_subring(GroupRingElem.from_dict({"0/1": 1, "1/2": 1})))
    assert payload == {"member": True, "coefficients": {"2": 1}, "reason": ""}


def test_hodge_tables():
    table = HodgeTable.from_dict({(1, 0): GroupRingElem.basis("1/2"), (0, 0): GroupRingElem.one()})
    payload = codec.encode_hodge_table(table)
    assert [(item["p"], item["q"]) for item in payload] == [(0, 0), (1, 0)]
    assert codec.decode_hodge_table(payload) == table


def test_presentations():
    p = finite_set_assembler(3)
    assert round_trip(codec.encode_presentation, codec.decode_presentation, p) == p
    k0 = codec.encode_k0(k0_from_presentation(codec.decode_presentation({"objects": ["a"]})))
    assert k0 == {"rank": 1, "torsion": [], "basis_map": {"a": [1]}}
    with pytest.raises(SchemaError) as info:
        codec.decode_presentation({"objects": ["a"], "families": [{"target": "b", "parts": []}]})
    assert info.value.field == "elem"


def test_truncations():
    assert codec.decode_truncation(4) == TruncationSet((1, 2, 4))
    assert codec.decode_truncation([1, 2, 3]) == TruncationSet((1, 2, 3))
    with pytest.raises(SchemaError):
        codec.decode_truncation(0)
    with pytest.raises(SchemaError):
        codec.decode_truncation("6")
