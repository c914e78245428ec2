"""The two-row parametric construction and its admissibility calculus.

Every [n, 2] code is equivalent to a code C(a1, .., a5) generated by

    ( 1 0 | 0 .. 0 | 0 .. 0 | 1 .. 1 | 1 .. 1 | 1  .. 1  | 1  .. 1  )
    ( 0 1 | 0 .. 0 | 1 .. 1 | 0 .. 0 | 1 .. 1 | w  .. w  | w2 .. w2 )
            a0        a1        a2        a3       a4         a5

with column-block multiplicities a0..a5, n = 2 + sum(a_i).  With the
normalisation that the first row has minimum weight d, i.e.

    1 + a2 + a3 + a4 + a5 = d,

the code is Hermitian LCD iff four arithmetic conditions on the a_i
hold; in the transformed coordinates b_i = (n - d) - a_i the same test
depends only on b3, b4, b5 and the parity of d, and the slack parameter
delta = 4n - 5d confines the search for distance-optimal codes to a
cube 0 <= b3 <= b4, b5 <= delta.  ``enumerate_optimal`` performs that
search; ``family_catalog`` is the known closed-form answer (49 one-
parameter families in m = n div 5), kept as data so the two can be
cross-validated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Mat


@dataclass(frozen=True)
class ATuple:
    """Column multiplicities (a1..a5) of the construction, plus optional a0."""

    a1: int
    a2: int
    a3: int
    a4: int
    a5: int
    a0: int = 0

    def __post_init__(self) -> None:
        if min(self.a1, self.a2, self.a3, self.a4, self.a5, self.a0) < 0:
            raise ValueError(f"negative multiplicity in {self!r}")

    @property
    def entries(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a5)

    @property
    def n(self) -> int:
        return 2 + self.a0 + sum(self.entries)


@dataclass(frozen=True)
class BTuple:
    """Image of an ATuple under b_i = (n - d) - a_i, with its slack delta."""

    b1: int
    b2: int
    b3: int
    b4: int
    b5: int
    delta: int
    n: int
    d: int

    @property
    def entries(self) -> tuple[int, int, int, int, int]:
        return (self.b1, self.b2, self.b3, self.b4, self.b5)


def build_generator(a: ATuple) -> Mat:
    """Generator matrix of C(a): identity pair then the six column blocks."""
    top = [1, 0] + [0] * a.a0 + [0] * a.a1 + [1] * a.a2 + [1] * a.a3 + [1] * a.a4 + [1] * a.a5
    bot = [0, 1] + [0] * a.a0 + [1] * a.a1 + [0] * a.a2 + [1] * a.a3 + [2] * a.a4 + [3] * a.a5
    return Mat((tuple(top), tuple(bot)), len(top))


def dmax(n: int) -> int:
    """Largest minimum weight of a Hermitian LCD [n, 2] code.

    floor(4n/5) when n = 1, 2, 3 (mod 5), one less otherwise; attained
    for every n >= 2.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2 (no [n, 2] code exists for n = {n})")
    base = 4 * n // 5
    return base if n % 5 in (1, 2, 3) else base - 1


def delta(n: int, d: int) -> int:
    """Slack 4n - 5d; equals {5, 4, 3, 2, 6} at d = dmax(n) by residue of n."""
    return 4 * n - 5 * d


def a_to_b(a: ATuple, n: int, d: int) -> BTuple:
    if a.a0 != 0:
        raise ValueError("b-coordinates are defined for a0 = 0")
    if a.n != n:
        raise ValueError(f"inconsistent length: tuple gives n = {a.n}, got {n}")
    t = n - d
    b1, b2, b3, b4, b5 = (t - ai for ai in a.entries)
    return BTuple(b1, b2, b3, b4, b5, delta(n, d), n, d)


def b_to_a(b: BTuple) -> ATuple:
    t = b.n - b.d
    return ATuple(*(t - bi for bi in b.entries))


def _require_reduced(a: ATuple, d: int) -> None:
    if a.a0 != 0:
        raise ValueError(f"precondition violated: a0 = {a.a0}, expected 0")
    if 1 + a.a2 + a.a3 + a.a4 + a.a5 != d:
        raise ValueError(
            f"precondition violated: 1 + a2 + a3 + a4 + a5 = "
            f"{1 + a.a2 + a.a3 + a.a4 + a.a5}, expected d = {d}"
        )


def check_lcd_conditions_a(a: ATuple, n: int, d: int) -> bool:
    """LCD test in a-coordinates for a reduced tuple of an [n, 2, d] code.

    Requires a0 = 0 and the first row to realise the minimum weight
    (1 + a2 + a3 + a4 + a5 = d); violations raise ValueError.  The test
    matches the Gram determinant exactly when d really is the minimum
    weight of the constructed code of length n.
    """
    _require_reduced(a, d)
    t = n - d
    if a.a1 != t - 1:
        return False
    if a.a2 > t - 1:
        return False
    if a.a3 > t or a.a4 > t or a.a5 > t:
        return False
    prods = a.a3 * a.a4 + a.a4 * a.a5 + a.a5 * a.a3
    if d % 2 == 0:
        return (a.a3 + a.a4 + a.a5 + prods) % 2 != 0
    return prods % 2 != t % 2


def check_lcd_conditions_b(b: BTuple, d: int | None = None) -> bool:
    """LCD test in b-coordinates; equivalent to the a-side test."""
    if d is None:
        d = b.d
    if b.b1 != 1:
        return False
    if b.b2 < 1:
        return False
    if b.b3 < 0 or b.b4 < 0 or b.b5 < 0:
        return False
    prods = b.b3 * b.b4 + b.b4 * b.b5 + b.b5 * b.b3
    if d % 2 == 0:
        return (b.b3 + b.b4 + b.b5 + prods) % 2 != 0
    return prods % 2 != 0


def enumerate_optimal(n: int) -> list[ATuple]:
    """All reduced parameter tuples of optimal Hermitian LCD [n, 2] codes.

    Scans the cube 0 <= b3 <= b4, b5 <= delta (the a3 >= a4, a5
    normalisation), applies the parity condition for d = dmax(n), fixes
    b1 = 1 and b2 = delta + 1 - (b3 + b4 + b5), and keeps tuples whose
    a-coordinates are nonnegative.  Output is in ascending lexicographic
    order on (a1, .., a5).
    """
    d = dmax(n)
    dl = delta(n, d)
    t = n - d
    out = []
    for b3 in range(dl + 1):
        for b4 in range(b3, dl + 1):
            for b5 in range(b3, dl + 1):
                prods = b3 * b4 + b4 * b5 + b5 * b3
                if d % 2 == 0:
                    if (b3 + b4 + b5 + prods) % 2 == 0:
                        continue
                elif prods % 2 == 0:
                    continue
                b2 = dl + 1 - (b3 + b4 + b5)
                if b2 < 1:
                    continue
                entries = (t - 1, t - b2, t - b3, t - b4, t - b5)
                if min(entries) < 0:
                    continue
                out.append(ATuple(*entries))
    out.sort(key=lambda a: a.entries)
    return out


def move_swap345(a: ATuple) -> ATuple:
    """Equivalence move (a3, a4, a5) -> (a5, a3, a4).

    Realised by scaling the second generator row by w and renormalising
    columns; applying it three times is the identity.
    """
    if a.a0 != 0:
        raise ValueError("move requires a0 = 0")
    return ATuple(a.a1, a.a2, a.a5, a.a3, a.a4)


def move_add_row(a: ATuple) -> ATuple:
    """Equivalence move a -> (a1, a3 - 1, a2 + 1, a5, a4); needs a3 >= 1.

    Realised by adding the second generator row to the first and
    renormalising columns.
    """
    if a.a0 != 0:
        raise ValueError("move requires a0 = 0")
    if a.a3 < 1:
        raise ValueError(f"move requires a3 >= 1, got a3 = {a.a3}")
    return ATuple(a.a1, a.a3 - 1, a.a2 + 1, a.a5, a.a4)


def move_swap_rows(a: ATuple, d: int) -> ATuple:
    """Equivalence move a -> (a2, a1, a3, a5, a4).

    Realised by swapping the two generator rows; valid when the second
    row also has weight d, i.e. 1 + a1 + a3 + a4 + a5 = d.
    """
    if a.a0 != 0:
        raise ValueError("move requires a0 = 0")
    if 1 + a.a1 + a.a3 + a.a4 + a.a5 != d:
        raise ValueError(
            f"precondition violated: 1 + a1 + a3 + a4 + a5 = "
            f"{1 + a.a1 + a.a3 + a.a4 + a.a5}, expected d = {d}"
        )
    return ATuple(a.a2, a.a1, a.a3, a.a5, a.a4)


@dataclass(frozen=True)
class Family:
    """One-parameter family m -> (m + c1, .., m + c5) of optimal tuples."""

    label: str
    residue: int
    index: int
    offsets: tuple[int, int, int, int, int]
    m_min: int

    def tuple_at(self, m: int) -> ATuple | None:
        """Instantiate at m, or None when some multiplicity would go negative."""
        if m < self.m_min:
            return None
        return ATuple(*(m + c for c in self.offsets))

    def n_at(self, m: int) -> int:
        return 5 * m + self.residue


# Offsets per residue class of n, in catalog order.  Row i of residue r is
# the family named C_{5m+r, i}; sum(offsets) = residue - 2 so that
# n = 2 + sum(a_i) = 5m + residue.
_FAMILY_OFFSETS: dict[int, list[tuple[int, int, int, int, int]]] = {
    0: [
        (0, 0, 0, 0, -2),
        (0, 0, 0, -2, 0),
        (0, -1, 1, 0, -2),
        (0, -1, 1, -2, 0),
        (0, -1, 0, 0, -1),
        (0, -1, 0, -1, 0),
        (0, -2, 0, 0, 0),
        (0, -3, 1, 0, 0),
    ],
    1: [
        (0, 0, 1, 0, -2),
        (0, 0, 1, -2, 0),
        (0, 0, 0, 0, -1),
        (0, 0, 0, -1, 0),
        (0, -1, 1, 1, -2),
        (0, -1, 1, 0, -1),
        (0, -1, 1, -1, 0),
        (0, -1, 1, -2, 1),
        (0, -2, 1, 0, 0),
        (0, -3, 1, 1, 0),
        (0, -3, 1, 0, 1),
    ],
    2: [
        (0, 0, 0, 0, 0),
        (0, -1, 1, 0, 0),
    ],
    3: [
        (0, -1, 1, 1, 0),
        (0, 0, 1, 0, 0),
        (0, -1, 1, 0, 1),
    ],
    4: [
        (1, 1, 1, 1, -2),
        (1, 1, 1, 0, -1),
        (1, 1, 1, -1, 0),
        (1, 1, 1, -2, 1),
        (1, 1, 2, 1, -3),
        (1, 1, 2, -1, -1),
        (1, 1, 2, -3, 1),
        (1, 0, 1, 0, 0),
        (1, 0, 2, 1, -2),
        (1, 0, 2, 2, -3),
        (1, 0, 2, 0, -1),
        (1, 0, 2, -1, 0),
        (1, 0, 2, -2, 1),
        (1, 0, 2, -3, 2),
        (1, -1, 1, 1, 0),
        (1, -1, 1, 0, 1),
        (1, -1, 2, 1, -1),
        (1, -1, 2, -1, 1),
        (1, -2, 2, 1, 0),
        (1, -2, 2, 2, -1),
        (1, -2, 2, 0, 1),
        (1, -2, 2, -1, 2),
        (1, -3, 2, 1, 1),
        (1, -4, 2, 1, 2),
        (1, -4, 2, 2, 1),
    ],
}


def _family_label(residue: int, index: int) -> str:
    stem = "5m" if residue == 0 else f"5m+{residue}"
    return f"C_{{{stem},{index}}}"


def _build_catalog() -> tuple[Family, ...]:
    fams = []
    for residue, rows in _FAMILY_OFFSETS.items():
        for index, offsets in enumerate(rows, start=1):
            m_min = max(0, -min(offsets))
            fams.append(Family(_family_label(residue, index), residue, index, offsets, m_min))
    return tuple(fams)


_CATALOG = _build_catalog()


def family_catalog() -> tuple[Family, ...]:
    """The 49 one-parameter families of optimal tuples, in catalog order."""
    return _CATALOG


def family_by_label(label: str) -> Family:
    for fam in _CATALOG:
        if fam.label == label:
            return fam
    raise KeyError(label)


def family_tuples(n: int) -> list[tuple[Family, ATuple]]:
    """Catalog rows valid at length n, instantiated at m = (n - residue) / 5."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    m, residue = divmod(n, 5)
    out = []
    for fam in _CATALOG:
        if fam.residue != residue:
            continue
        a = fam.tuple_at(m)
        if a is not None:
            out.append((fam, a))
    return out


def format_atuple(a: ATuple) -> str:
    """Text form "a1,a2,a3,a4,a5", prefixed by "a0=K;" when a0 > 0."""
    body = ",".join(str(x) for x in a.entries)
    return f"a0={a.a0};{body}" if a.a0 else body


def parse_atuple(text: str) -> ATuple:
    """Inverse of format_atuple; raises ValueError on malformed input."""
    t = text.strip()
    a0 = 0
    if ";" in t:
        head, t = t.split(";", 1)
        head = head.strip()
        if not head.startswith("a0="):
            raise ValueError(f"expected 'a0=K;' prefix, got {head!r}")
        a0 = int(head[3:])
    parts = t.split(",")
    if len(parts) != 5:
        raise ValueError(f"expected 5 multiplicities, got {len(parts)}")
    values = [int(p) for p in parts]
    return ATuple(*values, a0=a0)
