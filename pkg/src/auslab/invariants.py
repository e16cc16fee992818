"""Invariant rings R^G: bases by averaging, orbit-sum structure, and the
presentations of the two maximal fixed rings.

The basis of each graded piece of R^G is computed by row-reducing Reynolds
images of the monomial basis -- independently of the orbit-sum bookkeeping,
which is then verified against it.  For the full dihedral group the fixed
ring is a commutative polynomial ring on one generator in degree 1 and one
in degree 2; for the index-two reflection subgroup (n even) it is the path
algebra of a two-vertex quiver with degree-1 arrows u1, u2 and degree-2
loops v1, v2 modulo (v1 u1 - u1 v2, v2 u2 - u2 v1).  Both claims are
machine-checked degreewise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import FieldEchelon
from .preproj import AlgebraElement, NFMonomial, nf_basis
from .quiver import QuiverA
from .symmetry import FiniteGroup, apply


class ScalarGroupOrbitNotMonomialError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Orbit sums
# ---------------------------------------------------------------------------


def orbit_monomials(q: QuiverA, l: int, k: int, parity: int | None = None) -> list[NFMonomial]:
    """The set B_{l,k}: all monomials with arrow counts {l, k}, optionally
    restricted to sources of one parity (n even)."""
    if l < k:
        raise ValueError("orbit labels require l >= k >= 0")
    if parity is not None and q.n % 2:
        raise ValueError("source parity only makes sense for even n")
    sources = range(q.n) if parity is None else range(parity % 2, q.n, 2)
    out = [NFMonomial(i, l, k) for i in sources]
    if l != k:
        out += [NFMonomial(i, k, l) for i in sources]
    return out


def orbit_sum(q: QuiverA, l: int, k: int, parity: int | None = None) -> AlgebraElement:
    return AlgebraElement(
        q, {m: Fraction(1) for m in orbit_monomials(q, l, k, parity)}
    )


def s_elements(q: QuiverA, parity: int | None = None) -> tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
    """The generators (s0, s1, s2) = (O(0,0), O(1,0), O(2,0)), optionally
    parity-restricted."""
    return (
        orbit_sum(q, 0, 0, parity),
        orbit_sum(q, 1, 0, parity),
        orbit_sum(q, 2, 0, parity),
    )


def reynolds(group: FiniteGroup, x: AlgebraElement) -> AlgebraElement:
    """Average over the group; a projection onto the invariants since the
    coefficient field has characteristic zero."""
    acc = AlgebraElement.zero(x.quiver)
    for g in group.elements:
        acc = acc + apply(g, x)
    return acc.scale(Fraction(1, len(group)))


def orbit_of(m: NFMonomial, group: FiniteGroup) -> set[NFMonomial]:
    """The set of images of a monomial; refuses groups whose action leaves
    non-unit coefficients behind."""
    out = set()
    for g in group.elements:
        coeff, img = g.monomial_image(m)
        if coeff != 1:
            raise ScalarGroupOrbitNotMonomialError(
                f"image of {m} under {g} carries coefficient {coeff}"
            )
        out.add(img)
    return out


# ---------------------------------------------------------------------------
# Invariant bases
# ---------------------------------------------------------------------------


def _coords(q: QuiverA, d: int):
    basis = nf_basis(q, d)
    return basis, {m: i for i, m in enumerate(basis)}


def _row(x: AlgebraElement, index: dict[NFMonomial, int]) -> dict[int, object]:
    return {index[m]: c for m, c in x.terms.items()}


def _element(q: QuiverA, row: dict[int, object], basis: list[NFMonomial]) -> AlgebraElement:
    return AlgebraElement(q, {basis[i]: c for i, c in row.items()})


@dataclass
class InvariantBasis:
    """Row-reduced bases of (R^G)_d for d = 0..D."""

    group: FiniteGroup
    degree: int
    vectors: list[list[AlgebraElement]]

    @property
    def dims(self) -> list[int]:
        return [len(v) for v in self.vectors]

    def matrix_dims(self, d: int) -> list[list[int]]:
        """Parity-block dimensions (source parity, target parity) of the
        degree-d invariants; meaningful when the group preserves parity."""
        q = self.group.quiver
        n = q.n
        out = [[0, 0], [0, 0]]
        basis, index = _coords(q, d)
        for p in (0, 1):
            for t in (0, 1):
                ech = FieldEchelon()
                for v in self.vectors[d]:
                    row = {
                        index[m]: c
                        for m, c in v.terms.items()
                        if m.source % 2 == p and m.target(n) % 2 == t
                    }
                    if row:
                        ech.insert(row)
                out[p][t] = ech.rank
        return out


def invariant_basis(group: FiniteGroup, D: int) -> InvariantBasis:
    q = group.quiver
    vectors = []
    for d in range(D + 1):
        basis, index = _coords(q, d)
        ech = FieldEchelon()
        for m in basis:
            img = reynolds(group, AlgebraElement.monomial(q, m))
            if not img.is_zero():
                ech.insert(_row(img, index))
        rows = [ech.pivots[lead] for lead in sorted(ech.pivots)]
        vectors.append([_element(q, row, basis) for row in rows])
    return InvariantBasis(group, D, vectors)


def series_coefficients(denominator_degrees: list[int], D: int, numerator: int = 1) -> list[int]:
    """Coefficients of numerator / prod (1 - t^k) through degree D."""
    coeffs = [numerator] + [0] * D
    for k in denominator_degrees:
        for d in range(k, D + 1):
            coeffs[d] += coeffs[d - k]
    return coeffs


# ---------------------------------------------------------------------------
# Orbit-sum relations
# ---------------------------------------------------------------------------


@dataclass
class RelationCheck:
    name: str
    holds: bool
    detail: str = ""


@dataclass
class RelationReport:
    n: int
    degree: int
    checks: list[RelationCheck] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def first_failure(self) -> RelationCheck | None:
        return next((c for c in self.checks if not c.holds), None)

    def add(self, name: str, lhs: AlgebraElement, rhs: AlgebraElement):
        ok = lhs == rhs
        detail = "" if ok else f"lhs = {lhs} ; rhs = {rhs}"
        self.checks.append(RelationCheck(name, ok, detail))


def _degree_shift_product(q: QuiverA, l: int, k: int, parity: int | None) -> AlgebraElement:
    """Expected value of O(1,0) * O(l,k).

    At the boundary l = k + 1 the two middle summands agree, so O(l, k+1)
    appears with multiplicity two; the result keeps the left factor's source
    parity when a parity restriction is in play.
    """
    out = orbit_sum(q, l + 1, k, parity)
    if l == k:
        return out
    weight = Fraction(2) if l == k + 1 else Fraction(1)
    return out + orbit_sum(q, max(l, k + 1), min(l, k + 1), parity).scale(weight)


def check_orbit_sum_relations(n: int, D: int) -> RelationReport:
    """Verify the multiplication rules of orbit sums up to total degree D by
    exact closed-form products: degree-shift products, diagonal powers, the
    commutation of s1 and s2, and (n even) their parity-graded refinements."""
    q = QuiverA(n)
    report = RelationReport(n, D)
    s0, s1, s2 = s_elements(q)
    o11 = orbit_sum(q, 1, 1)
    report.add("s1*s2 = s2*s1", s1 * s2, s2 * s1)
    report.add("s1^2 = s2 + 2*O(1,1)", s1 * s1, s2 + o11.scale(Fraction(2)))

    for total in range(0, D):
        for k in range(0, total // 2 + 1):
            l = total - k
            report.add(
                f"O(1,0)*O({l},{k})",
                s1 * orbit_sum(q, l, k),
                _degree_shift_product(q, l, k, None),
            )
    power = AlgebraElement.one(q)
    for m in range(1, D // 2 + 1):
        power = power * o11
        report.add(f"O(1,1)^{m} = O({m},{m})", power, orbit_sum(q, m, m))

    if n % 2 == 0:
        even, odd = 0, 1
        s0e, s1e, s2e = s_elements(q, even)
        s0o, s1o, s2o = s_elements(q, odd)
        o11e = orbit_sum(q, 1, 1, even)
        o11o = orbit_sum(q, 1, 1, odd)
        report.add("s2*s1 = s1*s2'", s2e * s1e, s1e * s2o)
        report.add("s2'*s1' = s1'*s2", s2o * s1o, s1o * s2e)
        report.add(
            "s1*s1' = s2 + 2*O(1,1)^even", s1e * s1o, s2e + o11e.scale(Fraction(2))
        )
        report.add(
            "s1'*s1 = s2' + 2*O(1,1)^odd", s1o * s1e, s2o + o11o.scale(Fraction(2))
        )
        for p in (even, odd):
            opp = 1 - p
            s1p = s_elements(q, p)[1]
            for total in range(0, D):
                for k in range(0, total // 2 + 1):
                    l = total - k
                    report.add(
                        f"O(1,0)^{p}*O({l},{k})^{opp}",
                        s1p * orbit_sum(q, l, k, opp),
                        _degree_shift_product(q, l, k, p),
                    )
                    report.add(
                        f"O(1,0)^{p}*O({l},{k})^{p} = 0",
                        s1p * orbit_sum(q, l, k, p),
                        AlgebraElement.zero(q),
                    )
            powerp = s_elements(q, p)[0]
            o11p = orbit_sum(q, 1, 1, p)
            for m in range(1, D // 2 + 1):
                powerp = powerp * o11p
                report.add(
                    f"(O(1,1)^{p})^{m} = O({m},{m})^{p}",
                    powerp,
                    orbit_sum(q, m, m, p),
                )
    return report


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------


@dataclass
class PresentationReport:
    target: str                       # polynomial_two_vars | two_vertex_quiver
    well_defined: bool
    bijective_through: int            # last degree with a degreewise bijection
    dims_match_series: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.well_defined and self.dims_match_series and not self.failures


def verify_presentation_dihedral(n: int, D: int, basis: InvariantBasis | None = None) -> PresentationReport:
    """Check that s1, s2 generate the full fixed ring freely as a commutative
    polynomial ring: the monomials s1^a s2^b of each degree map onto a basis
    of the invariants, whose dimensions match 1/((1-t)(1-t^2))."""
    q = QuiverA(n)
    from .symmetry import dihedral_group

    group = dihedral_group(q)
    basis = basis or invariant_basis(group, D)
    _, s1, s2 = s_elements(q)
    well_defined = s1 * s2 == s2 * s1
    expected = series_coefficients([1, 2], D)
    failures = []
    bij = -1
    s2_pows = [AlgebraElement.one(q)]
    for _ in range(D // 2):
        s2_pows.append(s2_pows[-1] * s2)
    for d in range(D + 1):
        mons = [(d - 2 * b, b) for b in range(d // 2 + 1)]
        ech = FieldEchelon()
        nf, index = _coords(q, d)
        for a, b in mons:
            x = s2_pows[b]
            for _ in range(a):
                x = s1 * x
            ech.insert(_row(x, index))
        inv_dim = len(basis.vectors[d])
        if not (ech.rank == len(mons) == inv_dim == expected[d]):
            failures.append(
                f"degree {d}: image rank {ech.rank}, free dim {len(mons)}, "
                f"invariant dim {inv_dim}, series {expected[d]}"
            )
        elif bij == d - 1:
            bij = d
    return PresentationReport(
        target="polynomial_two_vars",
        well_defined=well_defined,
        bijective_through=bij,
        dims_match_series=basis.dims[: D + 1] == expected,
        failures=failures,
    )


def swap_matrix_series_coefficient(d: int) -> list[list[int]]:
    """Degree-d coefficient of (I - swap*t)^-1 (I - I*t^2)^-1."""
    c = d // 2 + 1
    return [[c, 0], [0, c]] if d % 2 == 0 else [[0, c], [c, 0]]


def verify_presentation_two_vertex(n: int, D: int, basis: InvariantBasis | None = None) -> PresentationReport:
    """Check the fixed ring of the vertex-reflection subgroup (n even)
    against the two-vertex quiver presentation: the defining relations map
    to zero and the quotient's normal words (u-chain then loop power) map
    degreewise onto the invariants, matching the swap-matrix series."""
    if n % 2:
        raise ValueError("the two-vertex presentation needs n even")
    q = QuiverA(n)
    from .symmetry import w_subgroup

    group = w_subgroup(q)
    basis = basis or invariant_basis(group, D)
    s = {0: s_elements(q, 0), 1: s_elements(q, 1)}

    rel1 = s[0][2] * s[0][1] - s[0][1] * s[1][2]      # v1 u1 - u1 v2
    rel2 = s[1][2] * s[1][1] - s[1][1] * s[0][2]      # v2 u2 - u2 v1
    well_defined = rel1.is_zero() and rel2.is_zero()

    failures = []
    bij = -1
    totals = series_coefficients([1, 2], D, numerator=2)
    dims_ok = basis.dims[: D + 1] == totals
    for d in range(D + 1):
        nf, index = _coords(q, d)
        ech = FieldEchelon()
        count = 0
        block_counts = [[0, 0], [0, 0]]
        for p in (0, 1):
            for b in range(d // 2 + 1):
                a = d - 2 * b
                x = s[p][0]
                parity = p
                for _ in range(a):
                    x = x * s[parity][1]
                    parity = 1 - parity
                for _ in range(b):
                    x = x * s[parity][2]
                if not x.is_zero():
                    ech.insert(_row(x, index))
                count += 1
                block_counts[p][parity] += 1
        inv_dim = len(basis.vectors[d])
        matrix = basis.matrix_dims(d)
        swap = swap_matrix_series_coefficient(d)
        if matrix != swap:
            failures.append(f"degree {d}: invariant matrix dims {matrix} != {swap}")
        if block_counts != swap:
            failures.append(f"degree {d}: quotient block dims {block_counts} != {swap}")
        if not (ech.rank == count == inv_dim):
            failures.append(
                f"degree {d}: image rank {ech.rank}, quotient dim {count}, "
                f"invariant dim {inv_dim}"
            )
        elif not failures and bij == d - 1:
            bij = d
    return PresentationReport(
        target="two_vertex_quiver",
        well_defined=well_defined,
        bijective_through=bij,
        dims_match_series=dims_ok,
        failures=failures,
    )


# ---------------------------------------------------------------------------
# Module structure of R over R^G
# ---------------------------------------------------------------------------


@dataclass
class ModuleCheck:
    degree: int
    ok: bool
    detail: str = ""


def verify_free_module(group: FiniteGroup, D: int, basis: InvariantBasis | None = None) -> list[ModuleCheck]:
    """Degreewise check that {e_0..e_{n-1}, alpha_0..alpha_{n-1}} is a basis
    of R over R^G: the vectors e_i * (R^G)_d and alpha_i * (R^G)_{d-1}
    jointly have full rank n(d+1) and their individual ranks add up to it
    (so the sum is direct)."""
    q = group.quiver
    n = q.n
    basis = basis or invariant_basis(group, D)
    out = []
    for d in range(D + 1):
        nf, index = _coords(q, d)
        total = FieldEchelon()
        part_sum = 0
        for i in range(n):
            e_i = AlgebraElement.idempotent(q, i)
            alpha_i = AlgebraElement.arrow(q, i)
            for mult, vecs in ((e_i, basis.vectors[d]), (alpha_i, basis.vectors[d - 1] if d else [])):
                part = FieldEchelon()
                for v in vecs:
                    w = mult * v
                    if not w.is_zero():
                        row = _row(w, index)
                        part.insert(row)
                        total.insert(row)
                part_sum += part.rank
        ok = total.rank == n * (d + 1) == part_sum
        out.append(
            ModuleCheck(
                d,
                ok,
                "" if ok else f"rank {total.rank}, direct-sum count {part_sum}, "
                f"expected {n * (d + 1)}",
            )
        )
    return out


def verify_shift_summand(group: FiniteGroup, D: int, basis: InvariantBasis | None = None) -> list[ModuleCheck]:
    """Witness the degree-shift isomorphism e_0 R^G -> alpha_{n-1} R^G given
    by left multiplication with alpha_{n-1} (injective in every degree, onto
    by construction): the endomorphism ring of R over R^G therefore contains
    a map of negative degree."""
    q = group.quiver
    n = q.n
    basis = basis or invariant_basis(group, D)
    e0 = AlgebraElement.idempotent(q, 0)
    alpha = AlgebraElement.arrow(q, n - 1)
    out = []
    for d in range(D + 1):
        nf_d, index_d = _coords(q, d)
        nf_d1, index_d1 = _coords(q, d + 1)
        dom = FieldEchelon()
        img = FieldEchelon()
        for v in basis.vectors[d]:
            u = e0 * v
            if not u.is_zero():
                dom.insert(_row(u, index_d))
            w = alpha * v
            if not w.is_zero():
                img.insert(_row(w, index_d1))
        ok = dom.rank == img.rank
        out.append(
            ModuleCheck(
                d, ok, "" if ok else f"domain rank {dom.rank} != image rank {img.rank}"
            )
        )
    return out
