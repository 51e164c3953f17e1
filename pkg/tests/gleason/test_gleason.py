import pytest

from extremal_enumerators.gleason import (
    CodeType,
    InadmissibleLengthError,
    admissible,
    extremal_enumerator,
    extremal_minimum_weight,
    type_params,
)
from extremal_enumerators.oracle import basis_element
from extremal_enumerators.polyarith import (
    StepPoly,
    densify,
    eval_at_ones,
    macwilliams_transform,
    poly_add_scaled,
    poly_scale,
)

PROPERTY_CAP = 200
MACWILLIAMS_CAP = 120


def lengths(code_type: CodeType, cap: int) -> list[int]:
    return [n for n in range(1, cap + 1) if admissible(code_type, n)]


def test_type_params_tables():
    iii = type_params(CodeType.III)
    assert (iii.w, iii.R, iii.S) == (3, 3, 4)
    assert iii.f == StepPoly(4, 3, (1, 8))
    assert iii.g.coeffs == (0, 1, -3, 3, -1)

    ii = type_params(CodeType.II)
    assert (ii.w, ii.R, ii.S) == (4, 3, 8)
    assert ii.g.degree == 24
    assert ii.g.leading_slot == 1
    assert ii.g.coeffs[1] == 1

    iv = type_params(CodeType.IV)
    assert iv.q == 4
    assert iv.f == StepPoly(2, 2, (1, 3))

    i = type_params(CodeType.I)
    assert (i.q, i.w, i.R, i.S) == (2, 2, 4, 2)
    assert densify(i.g).coeffs == (0, 0, 1, 0, -2, 0, 1, 0, 0)


@pytest.mark.parametrize("code_type", list(CodeType))
def test_generator_degrees_and_unit_diagonal(code_type):
    params = type_params(code_type)
    assert params.f.degree == params.S
    assert params.g.degree == params.R * params.S
    assert params.f.coeffs[0] == 1
    assert params.g.leading_slot == 1
    assert params.g.coeffs[1] == 1
    assert eval_at_ones(params.g) == 0
    assert eval_at_ones(params.f) ** 2 == params.q**params.S


def test_symmetry_is_derived_from_generators():
    assert type_params(CodeType.I).symmetric
    assert type_params(CodeType.II).symmetric
    assert not type_params(CodeType.III).symmetric
    assert not type_params(CodeType.IV).symmetric


def test_code_type_tags():
    assert CodeType.from_tag("III") is CodeType.III
    assert CodeType.from_tag("2") is CodeType.II
    assert CodeType.from_tag(" iv ") is CodeType.IV
    with pytest.raises(ValueError):
        CodeType.from_tag("v")


@pytest.mark.parametrize(
    "code_type, n, expected",
    [
        (CodeType.III, 12, True),
        (CodeType.III, 10, False),
        (CodeType.II, 24, True),
        (CodeType.II, 12, False),
        (CodeType.I, 6, True),
        (CodeType.IV, 6, True),
        (CodeType.IV, 7, False),
        (CodeType.I, 0, False),
    ],
)
def test_admissible(code_type, n, expected):
    assert admissible(code_type, n) is expected


@pytest.mark.parametrize(
    "code_type, n, d",
    [(CodeType.III, 72, 21), (CodeType.II, 24, 8), (CodeType.I, 8, 4), (CodeType.II, 48, 12), (CodeType.IV, 6, 4)],
)
def test_extremal_minimum_weight(code_type, n, d):
    assert extremal_minimum_weight(code_type, n) == d


def test_inadmissible_length_names_the_rule():
    with pytest.raises(InadmissibleLengthError, match=r"4\|n"):
        extremal_minimum_weight(CodeType.III, 10)
    with pytest.raises(InadmissibleLengthError, match=r"8\|n"):
        extremal_enumerator(CodeType.II, 12)


@pytest.mark.parametrize("code_type", list(CodeType))
def test_nonpositive_length_is_inadmissible(code_type):
    for n in (0, -8):
        with pytest.raises(InadmissibleLengthError, match=r"n >= 1"):
            extremal_minimum_weight(code_type, n)
        with pytest.raises(InadmissibleLengthError, match=r"n >= 1"):
            extremal_enumerator(code_type, n)


def test_ternary_length_12():
    enumerator = extremal_enumerator(CodeType.III, 12)
    assert enumerator.a == (1, -24)
    assert (enumerator.j, enumerator.m) == (3, 1)
    assert enumerator.nonzero_items() == [(0, 1), (6, 264), (9, 440), (12, 24)]
    assert enumerator.coefficient(3) == 0
    assert enumerator.coefficient(7) == 0


def test_golay_length_24():
    enumerator = extremal_enumerator(CodeType.II, 24)
    assert enumerator.a == (1, -42)
    assert enumerator.nonzero_items() == [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)]
    assert enumerator.minimum_weight == 8
    assert enumerator.forced_zero_slots == frozenset({1, 5})


def test_type_one_length_8():
    enumerator = extremal_enumerator(CodeType.I, 8)
    assert enumerator.a == (1, -4)
    assert enumerator.poly == StepPoly(8, 2, (1, 0, 14, 0, 1))


def test_hexacode_length_6():
    enumerator = extremal_enumerator(CodeType.IV, 6)
    assert enumerator.a == (1, -9)
    assert enumerator.poly.coeffs == (1, 0, 45, 18)


@pytest.mark.parametrize("code_type", list(CodeType))
def test_defining_properties(code_type):
    params = type_params(code_type)
    for n in lengths(code_type, PROPERTY_CAP):
        enumerator = extremal_enumerator(code_type, n)
        coeffs = enumerator.poly.coeffs
        assert enumerator.poly.degree == n
        assert enumerator.poly.step == params.w
        assert enumerator.a[0] == 1
        assert len(enumerator.a) == enumerator.m + 1
        assert enumerator.m == n // (params.R * params.S)
        assert coeffs[0] == 1
        assert not any(coeffs[1 : enumerator.m + 1])
        assert eval_at_ones(enumerator.poly) == params.q ** (n // 2)


@pytest.mark.parametrize("code_type", list(CodeType))
def test_macwilliams_invariance(code_type):
    params = type_params(code_type)
    for n in lengths(code_type, MACWILLIAMS_CAP):
        dense = densify(extremal_enumerator(code_type, n).poly)
        assert macwilliams_transform(dense, params.q) == poly_scale(dense, params.q ** (n // 2))


@pytest.mark.slow
@pytest.mark.parametrize("code_type", list(CodeType))
def test_macwilliams_invariance_to_200(code_type):
    params = type_params(code_type)
    for n in lengths(code_type, PROPERTY_CAP):
        if n <= MACWILLIAMS_CAP:
            continue
        dense = densify(extremal_enumerator(code_type, n).poly)
        assert macwilliams_transform(dense, params.q) == poly_scale(dense, params.q ** (n // 2))


@pytest.mark.parametrize("code_type, n", [(CodeType.III, 48), (CodeType.II, 72), (CodeType.I, 40), (CodeType.IV, 24)])
def test_perturbed_coefficients_break_extremality(code_type, n):
    enumerator = extremal_enumerator(code_type, n)
    assert enumerator.m >= 2
    for i in range(1, enumerator.m + 1):
        perturbed = poly_add_scaled(enumerator.poly, 1, basis_element(code_type, n, i))
        assert any(perturbed.coeffs[1 : enumerator.m + 1])
        assert perturbed.coeffs[i] == 1


def test_symmetric_types_vanish_on_mirrored_slots():
    for code_type, n in [(CodeType.II, 72), (CodeType.I, 40)]:
        enumerator = extremal_enumerator(code_type, n)
        for slot in enumerator.forced_zero_slots:
            assert enumerator.slot(slot) == 0
        assert enumerator.slot(enumerator.top_slot) == 1


if __name__ == "__main__":
    pytest.main(["-v", __file__])
