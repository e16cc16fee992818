import random
from fractions import Fraction

import pytest

from auslab.preproj import AlgebraElement, NFMonomial, nf_basis
from auslab.quiver import QuiverA
from auslab.smash import (
    MixedDegreeError,
    SmashElement,
    WindowTooLargeError,
    auslander_verdict,
    build_ideal,
    default_cutoff,
    eval_auslander_map,
    first_zero_degree,
    growth_classify,
    identity_component_dims,
    naive_ideal_dimension,
    theorem_bound,
)
from auslab.symmetry import (
    dihedral_group,
    generate_group,
    reflection,
    rotation,
    scalar_automorphism,
    trivial_group,
    w_subgroup,
)


def minus_ones_group(n=3):
    q = QuiverA(n)
    sigma = scalar_automorphism(q, [Fraction(-1)] * n, [Fraction(-1)] * n)
    return generate_group([sigma])


def test_group_part_multiplication():
    q = QuiverA(3)
    dn = dihedral_group(q)
    one = AlgebraElement.one(q)
    for gi in range(len(dn)):
        for hi in range(len(dn)):
            x = SmashElement.from_algebra(dn, one, gi)
            y = SmashElement.from_algebra(dn, one, hi)
            assert x * y == SmashElement.from_algebra(dn, one, dn.table[gi][hi])


def test_idempotent_cut_of_group_sum():
    q = QuiverA(3)
    dn = dihedral_group(q)
    f_g = SmashElement.group_sum(dn)
    e0 = SmashElement.from_algebra(dn, AlgebraElement.idempotent(q, 0))
    f1 = e0 * f_g * e0
    r0 = dn.index(reflection(q, 0))
    expected = SmashElement(
        dn,
        {
            (NFMonomial(0, 0, 0), dn.identity_index): Fraction(1),
            (NFMonomial(0, 0, 0), r0): Fraction(1),
        },
    )
    assert f1 == expected


def test_twisted_product_example():
    q = QuiverA(3)
    dn = dihedral_group(q)
    rho = dn.index(rotation(q, 1))
    a0 = AlgebraElement.monomial(q, NFMonomial(0, 1, 0))
    x = SmashElement.from_algebra(dn, a0, rho)
    y = SmashElement.from_algebra(dn, a0)
    # rho(alpha_0) = alpha_1, then alpha_0 alpha_1 # rho
    assert x * y == SmashElement.from_algebra(
        dn, AlgebraElement.monomial(q, NFMonomial(0, 2, 0)), rho
    )


def test_monomial_times_group_sum_absorbs_group_part():
    q = QuiverA(4)
    dn = dihedral_group(q)
    f_g = SmashElement.group_sum(dn)
    rng = random.Random(3)
    mons = [m for d in range(3) for m in nf_basis(q, d)]
    for _ in range(30):
        m = rng.choice(mons)
        gi = rng.randrange(len(dn))
        p = AlgebraElement.monomial(q, m)
        lhs = SmashElement.from_algebra(dn, p, gi) * f_g
        rhs = SmashElement.from_algebra(dn, p) * f_g
        assert lhs == rhs


def test_smash_associativity_random():
    q = QuiverA(3)
    dn = dihedral_group(q)
    rng = random.Random(17)
    mons = [m for d in range(3) for m in nf_basis(q, d)]

    def rand_elem():
        terms = {}
        for _ in range(2):
            terms[(rng.choice(mons), rng.randrange(len(dn)))] = Fraction(rng.randint(1, 4))
        return SmashElement(dn, terms)

    for _ in range(60):
        x, y, z = rand_elem(), rand_elem(), rand_elem()
        assert (x * y) * z == x * (y * z)


def test_unit_of_smash():
    q = QuiverA(3)
    dn = dihedral_group(q)
    one = SmashElement.unit(dn)
    x = SmashElement.from_algebra(dn, AlgebraElement.monomial(q, NFMonomial(1, 2, 0)), 3)
    assert one * x == x
    assert x * one == x


def test_eval_auslander_map():
    q = QuiverA(3)
    dn = dihedral_group(q)
    one = AlgebraElement.one(q)
    x = AlgebraElement.monomial(q, NFMonomial(0, 1, 0))
    assert eval_auslander_map(dn, one, dn.identity_index, x) == x
    # e_0 * r(alpha_0) = alpha_{n-1}*
    e0 = AlgebraElement.idempotent(q, 0)
    r = reflection(q, 0)
    assert eval_auslander_map(dn, e0, r, x) == AlgebraElement.monomial(
        q, NFMonomial(0, 0, 1)
    )


def test_eval_auslander_is_multiplicative():
    q = QuiverA(4)
    dn = dihedral_group(q)
    rng = random.Random(23)
    mons = [m for d in range(3) for m in nf_basis(q, d)]
    for _ in range(50):
        a = AlgebraElement.monomial(q, rng.choice(mons))
        b = AlgebraElement.monomial(q, rng.choice(mons))
        c = AlgebraElement.monomial(q, rng.choice(mons))
        gi, hi = rng.randrange(len(dn)), rng.randrange(len(dn))
        inner = eval_auslander_map(dn, b, hi, c)
        lhs = eval_auslander_map(dn, a, gi, inner)
        prod = SmashElement.from_algebra(dn, a, gi) * SmashElement.from_algebra(dn, b, hi)
        rhs = AlgebraElement.zero(q)
        for (m, ki), coeff in prod.terms.items():
            rhs = rhs + eval_auslander_map(
                dn, AlgebraElement.monomial(q, m, coeff), ki, c
            )
        assert lhs == rhs


# ---------------------------------------------------------------------------
# Ideal truncations
# ---------------------------------------------------------------------------


def test_trivial_group_ideal_is_everything():
    q = QuiverA(3)
    triv = trivial_group(q)
    trunc = build_ideal(triv, 6)
    for d in range(7):
        assert trunc.ideal_dimension(d) == trunc.smash_dimension(d)
    assert identity_component_dims(trunc, 6) == [0] * 7


def test_rho_ideal_saturates():
    q = QuiverA(3)
    grp = generate_group([rotation(q, 1)])
    trunc = build_ideal(grp, 8)
    assert trunc.ideal_dimension(7) == 3 * 8 * 3 == trunc.smash_dimension(7)


@pytest.mark.parametrize(
    "make_group,degree",
    [
        (lambda: dihedral_group(QuiverA(3)), 4),
        (lambda: generate_group([rotation(QuiverA(3), 1)]), 4),
        (lambda: w_subgroup(QuiverA(4)), 3),
        (minus_ones_group, 4),
    ],
)
def test_incremental_ideal_matches_naive_spanning(make_group, degree):
    group = make_group()
    trunc = build_ideal(group, degree)
    for d in range(degree + 1):
        assert trunc.ideal_dimension(d) == naive_ideal_dimension(group, d)


def test_identity_component_dims_examples():
    q = QuiverA(3)
    dims_rho = identity_component_dims(generate_group([rotation(q, 1)]), 10)
    assert all(v == 0 for v in dims_rho[7:])
    dims_d3 = identity_component_dims(dihedral_group(q), 16)
    assert dims_d3[:4] == [3, 6, 9, 9]
    assert max(dims_d3) == 9 and dims_d3[-1] > 0


def test_ideal_rows_stay_in_ideal_under_multiplication():
    q = QuiverA(3)
    dn = dihedral_group(q)
    trunc = build_ideal(dn, 8)
    f_g = SmashElement.group_sum(dn)
    e1 = SmashElement.from_algebra(dn, AlgebraElement.idempotent(q, 1))
    f1 = e1 * f_g * e1
    seeds = [f_g, f1, e1 * f_g]
    rng = random.Random(31)
    for seed in seeds:
        x = seed
        for _ in range(5):
            m = AlgebraElement.monomial(q, rng.choice(nf_basis(q, 1)))
            gi = rng.randrange(len(dn))
            if rng.random() < 0.5:
                x = SmashElement.from_algebra(dn, m) * x
            else:
                x = x * SmashElement.from_algebra(dn, m, gi)
            if x.is_zero():
                break
            assert trunc.contains(x)


def test_membership_certificates():
    q = QuiverA(3)
    dn = dihedral_group(q)
    trunc = build_ideal(dn, 4)
    p = AlgebraElement.monomial(q, NFMonomial(0, 3, 0))
    qq = AlgebraElement.monomial(q, NFMonomial(0, 0, 3))
    assert trunc.contains(SmashElement.from_algebra(dn, p - qq))
    assert not trunc.contains(SmashElement.from_algebra(dn, p))
    assert trunc.contains(SmashElement.group_sum(dn))


def test_membership_scalar_case():
    group = minus_ones_group()
    q = group.quiver
    trunc = build_ideal(group, 2)
    prod = AlgebraElement.monomial(q, NFMonomial(0, 2, 0))  # alpha_0 alpha_1
    assert trunc.contains(SmashElement.from_algebra(group, prod))


def test_membership_requires_homogeneous():
    q = QuiverA(3)
    dn = dihedral_group(q)
    trunc = build_ideal(dn, 2)
    mixed = SmashElement.from_algebra(
        dn,
        AlgebraElement.idempotent(q, 0) + AlgebraElement.monomial(q, NFMonomial(0, 1, 0)),
    )
    with pytest.raises(MixedDegreeError):
        trunc.contains(mixed)


# ---------------------------------------------------------------------------
# Growth classification and verdicts
# ---------------------------------------------------------------------------


def test_first_zero_degree():
    assert first_zero_degree([0, 0, 0]) == 0
    assert first_zero_degree([3, 2, 0, 0]) == 2
    assert first_zero_degree([3, 2, 0, 1]) == -1
    assert first_zero_degree([]) == 0


def test_growth_classify_kinds():
    zeros = [3, 2, 1] + [0] * 9
    assert growth_classify(zeros, 4).kind == "finite_dim"
    bounded = [3, 6, 9] + [9] * 9
    assert growth_classify(bounded, 4).kind == "gk1"
    linear = [3 * (d + 1) for d in range(12)]
    verdict = growth_classify(linear, 4, expected_increment=3)
    assert verdict.kind == "gk2_likely"
    assert verdict.evidence["increment"] == 3
    assert growth_classify(linear, 4, expected_increment=5).kind != "gk2_likely"
    erratic = [1, 9, 1, 4, 4, 9, 1, 1, 2, 3, 5, 30]
    assert growth_classify(erratic, 3).kind == "inconclusive"
    with pytest.raises(WindowTooLargeError):
        growth_classify([1, 2, 3], 2)


def test_theorem_bounds():
    q = QuiverA(3)
    assert theorem_bound(3, generate_group([rotation(q, 1)])) == (
        7,
        "missing_vertex_fixing_reflection",
    )
    assert theorem_bound(3, dihedral_group(q)) == (None, None)
    assert theorem_bound(3, minus_ones_group())[0] == 7  # 4*2 - 1


def test_default_cutoff_policy():
    q = QuiverA(4)
    assert default_cutoff(4, dihedral_group(q)) == 20
    grp = minus_ones_group()
    assert default_cutoff(3, grp) >= theorem_bound(3, grp)[0]


def test_auslander_verdicts():
    q = QuiverA(3)
    rep = auslander_verdict(3, generate_group([rotation(q, 1)]), 14)
    assert (rep.verdict, rep.pertinency, rep.classifier_agrees) == ("iso", 2, True)
    rep = auslander_verdict(3, dihedral_group(q), 16)
    assert (rep.verdict, rep.pertinency, rep.growth.kind) == ("not_iso", 1, "gk1")
    rep = auslander_verdict(4, w_subgroup(QuiverA(4)), 20)
    assert (rep.verdict, rep.pertinency) == ("not_iso", 1)
    rep = auslander_verdict(3, minus_ones_group(), 16)
    assert (rep.verdict, rep.verdict_basis) == ("iso", "theorem_bound")
    assert rep.classifier is None and rep.classifier_agrees is None


def test_verdict_payload_shape():
    q = QuiverA(3)
    rep = auslander_verdict(3, dihedral_group(q), 12, label="rot(1),refl(0)")
    payload = rep.payload()
    assert payload["group"] == "rot(1),refl(0)"
    assert payload["verdict_empirical"] == "not_iso"
    assert isinstance(payload["identity_component_dims"], list)


def test_mixed_group_uses_window_verdict():
    q = QuiverA(3)
    sigma = scalar_automorphism(q, [Fraction(-1)] * 3, [Fraction(-1)] * 3)
    mixed = generate_group([rotation(q, 1), sigma])
    assert not mixed.is_dihedral_subgroup and len(mixed) == 6
    rep = auslander_verdict(3, mixed, 14)
    assert rep.classifier is None and rep.classifier_agrees is None
    assert theorem_bound(3, mixed) == (None, None)
    assert rep.verdict == "iso" and rep.verdict_basis == "window"


def test_mixed_group_ideal_matches_naive_spanning():
    # exercises orbit transfers carrying nontrivial scalar multipliers
    from auslab.scalars import get_context, make_root_of_unity

    q = QuiverA(3)
    sigma = scalar_automorphism(q, [Fraction(-1)] * 3, [Fraction(-1)] * 3)
    mixed = generate_group([rotation(q, 1), sigma])
    trunc = build_ideal(mixed, 3)
    for d in range(4):
        assert trunc.ideal_dimension(d) == naive_ideal_dimension(mixed, d)
    z = make_root_of_unity(get_context(4), 1)
    sig4 = scalar_automorphism(q, [z] * 3, [z.inverse()] * 3)
    mixed4 = generate_group([rotation(q, 1), sig4])
    trunc4 = build_ideal(mixed4, 2)
    for d in range(3):
        assert trunc4.ideal_dimension(d) == naive_ideal_dimension(mixed4, d)
