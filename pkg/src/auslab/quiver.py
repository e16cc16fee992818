"""The doubled quiver of A-tilde_n and its free path combinatorics.

Vertices are residues 0..n-1.  The nonstar arrow alpha_i runs i -> i+1 and
the star arrow alpha_i* runs i+1 -> i, indices mod n.  For n >= 3 the double
is schurian (at most one arrow between any ordered vertex pair), which is
what lets automorphisms act arrow-by-arrow; n <= 2 is rejected.

Words multiply by concatenation, left factor first.  A non-composable
product is the explicit null value `None`, kept distinct from the zero of
any quotient algebra built on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple


class ArrowRef(NamedTuple):
    index: int
    starred: bool

    def __str__(self):
        return f"a{self.index}*" if self.starred else f"a{self.index}"


@dataclass(frozen=True)
class Word:
    """A composable path: a source vertex and a tuple of arrows."""

    source: int
    arrows: tuple[ArrowRef, ...]

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        if not self.arrows:
            return f"e{self.source}"
        return "".join(str(a) for a in self.arrows)


class QuiverA:
    """The double of the extended Dynkin quiver A-tilde_n, n >= 3."""

    __slots__ = ("n",)

    def __init__(self, n: int):
        if n < 3:
            raise ValueError("n >= 3 required: the doubled quiver must be schurian")
        self.n = n

    def __eq__(self, other):
        return isinstance(other, QuiverA) and self.n == other.n

    def __hash__(self):
        return hash(("QuiverA", self.n))

    def __repr__(self):
        return f"QuiverA(n={self.n})"

    # -- arrows ------------------------------------------------------------

    def arrow_source(self, a: ArrowRef) -> int:
        return (a.index + 1) % self.n if a.starred else a.index

    def arrow_target(self, a: ArrowRef) -> int:
        return a.index if a.starred else (a.index + 1) % self.n

    def arrows(self) -> list[ArrowRef]:
        return [ArrowRef(i, False) for i in range(self.n)] + [
            ArrowRef(i, True) for i in range(self.n)
        ]

    def arrow_between(self, src: int, dst: int) -> ArrowRef:
        """The unique arrow src -> dst (schurian); raises if none exists."""
        if dst == (src + 1) % self.n:
            return ArrowRef(src, False)
        if dst == (src - 1) % self.n:
            return ArrowRef(dst, True)
        raise ValueError(f"no arrow {src} -> {dst} in the double of A~{self.n}")

    def arrows_from(self, v: int) -> tuple[ArrowRef, ArrowRef]:
        return ArrowRef(v, False), ArrowRef((v - 1) % self.n, True)

    def arrows_into(self, v: int) -> tuple[ArrowRef, ArrowRef]:
        return ArrowRef((v - 1) % self.n, False), ArrowRef(v, True)

    # -- words -------------------------------------------------------------

    def word(self, source: int, arrows) -> Word:
        """Validated word: consecutive arrows must compose from `source`."""
        source %= self.n
        arrows = tuple(arrows)
        at = source
        for a in arrows:
            if self.arrow_source(a) != at:
                raise ValueError(f"arrow {a} does not start at vertex {at}")
            at = self.arrow_target(a)
        return Word(source, arrows)

    def trivial_word(self, i: int) -> Word:
        return Word(i % self.n, ())

    def word_target(self, w: Word) -> int:
        at = w.source
        for a in w.arrows:
            at = self.arrow_target(a)
        return at

    def compose(self, w1: Word, w2: Word) -> Word | None:
        """Concatenation when target(w1) = source(w2); None otherwise."""
        if self.word_target(w1) != w2.source:
            return None
        return Word(w1.source, w1.arrows + w2.arrows)

    def free_basis(self, d: int) -> list[Word]:
        """All composable words of length d, each once."""
        if d < 0:
            raise ValueError("degree must be nonnegative")
        return [w for i in range(self.n) for w in self._words_from(i, d)]

    def _words_from(self, source: int, d: int) -> Iterator[Word]:
        if d == 0:
            yield Word(source, ())
            return
        stack = [(source, ())]
        while stack:
            at, arrows = stack.pop()
            if len(arrows) == d:
                yield Word(source, arrows)
                continue
            for a in self.arrows_from(at):
                stack.append((self.arrow_target(a), arrows + (a,)))

    # -- adjacency ---------------------------------------------------------

    def adjacency_matrix(self) -> list[list[int]]:
        """0/1 circulant with ones at j = i +- 1 mod n."""
        n = self.n
        return [
            [1 if (j - i) % n in (1, n - 1) else 0 for j in range(n)]
            for i in range(n)
        ]

    def path_count_matrix(self, d: int) -> list[list[int]]:
        """d-th power of the adjacency matrix: (i, j) counts words i -> j."""
        n = self.n
        out = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        m = self.adjacency_matrix()
        for _ in range(d):
            out = mat_mul(out, m)
        return out


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def apply_word_automorphism(g, w: Word) -> tuple[object, Word]:
    """Image of a word under a quiver automorphism with per-arrow scalars.

    `g` carries the quiver, a vertex map, and an arrow map returning
    (scalar, image arrow); the image word is composable whenever `w` is,
    and the returned scalar is the product of the per-arrow scalars.
    """
    q = g.quiver
    scalar = g.unit_scalar()
    arrows = []
    for a in w.arrows:
        c, img = g.arrow_image(a)
        scalar = scalar * c
        arrows.append(img)
    return scalar, q.word(g.vertex_image(w.source), arrows)
