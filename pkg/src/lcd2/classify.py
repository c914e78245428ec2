"""Equivalence classification of dimension-2 quaternary codes.

Up to column scaling, every nonzero column of a 2 x n generator matrix
is one of the five points of the projective line over GF(4).  A code of
dimension 2 is therefore captured, up to column order and scaling, by a
multiplicity vector: the number of zero columns plus the five point
multiplicities.  Changing the generator basis acts on the points
through the 60-element group induced by invertible 2 x 2 matrices, so
two codes are equivalent exactly when their multiplicity vectors agree
up to that action on the points.  ``canonical_form`` takes the
lexicographically minimal image, a complete invariant.

``census`` enumerates every multiplicity vector of a given length,
filters (all / Hermitian LCD / distance-optimal Hermitian LCD) and
groups by canonical form.  The default path is vectorised: minimum
weight is n - m0 - max(mp) (each nonzero message class zeroes exactly
one point type), and the Gram determinant reduces to a parity formula
in the multiplicities.  The ``enumerate`` method recomputes everything
from actual codewords and serves as the cross-validating oracle.

``verify_classification`` replays the known classification data
(catalog, equivalence chains, weight enumerator forms, class counts)
against the independent census and returns a structured report.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, replace

import numpy as np

from . import code as codeops
from . import family as fam
from . import gf4
from .code import LinearCode, WeightEnumerator
from .family import ATuple, Family, build_generator, dmax
from .linalg import Mat

# Projective points of the line over GF(4), in fixed order.  A column
# (x, y) is normalised so that its first nonzero entry is 1.
POINTS = ((1, 0), (0, 1), (1, 1), (1, 2), (1, 3))
_POINT_INDEX = {p: i for i, p in enumerate(POINTS)}

VALID_FILTERS = ("all", "lcd", "optimal_lcd")


@dataclass(frozen=True)
class MultVector:
    """Zero-column count plus the five projective column multiplicities."""

    m0: int
    mp: tuple[int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.mp) != 5:
            raise ValueError(f"expected 5 point multiplicities, got {len(self.mp)}")
        if self.m0 < 0 or min(self.mp) < 0:
            raise ValueError(f"negative multiplicity in {self!r}")

    @property
    def n(self) -> int:
        return self.m0 + sum(self.mp)

    def spans(self) -> bool:
        """True iff at least two point types occur (the code has rank 2)."""
        return sum(1 for x in self.mp if x) >= 2


@dataclass(frozen=True)
class EquivClass:
    """One equivalence class of a census, keyed by its canonical form."""

    canon: MultVector
    n: int
    d: int
    we: WeightEnumerator
    zero_col: bool
    label: str | None = None


def _normalize_column(col: tuple[int, int]) -> tuple[int, int]:
    x, y = col
    if x:
        s = gf4.INV[x]
    elif y:
        s = gf4.INV[y]
    else:
        return (0, 0)
    return (gf4.MUL[s][x], gf4.MUL[s][y])


def code_to_multvector(c: LinearCode) -> MultVector:
    """Column type counts of a generator matrix of a dimension-2 code."""
    if c.k != 2:
        raise ValueError(f"multiplicity vectors are defined for k = 2, got k = {c.k}")
    m0 = 0
    mp = [0, 0, 0, 0, 0]
    for j in range(c.n):
        p = _normalize_column((c.gen.rows[0][j], c.gen.rows[1][j]))
        if p == (0, 0):
            m0 += 1
        else:
            mp[_POINT_INDEX[p]] += 1
    return MultVector(m0, tuple(mp))


def multvector_to_code(mv: MultVector) -> LinearCode:
    """A code whose generator matrix realises the given column counts."""
    if not mv.spans():
        raise ValueError(f"{mv!r} has rank < 2 (fewer than two point types)")
    cols = [(0, 0)] * mv.m0
    for i, count in enumerate(mv.mp):
        cols.extend([POINTS[i]] * count)
    top = tuple(x for x, _ in cols)
    bot = tuple(y for _, y in cols)
    return LinearCode(Mat((top, bot), len(cols)))


def multvector_of_atuple(a: ATuple) -> MultVector:
    """Column counts of the parametric generator: mp = (1+a2, 1+a1, a3, a4, a5)."""
    return MultVector(a.a0, (1 + a.a2, 1 + a.a1, a.a3, a.a4, a.a5))


@functools.lru_cache(maxsize=1)
def induced_point_permutations() -> tuple[tuple[int, ...], ...]:
    """Permutations of the 5 points induced by invertible 2 x 2 matrices.

    All 180 invertible matrices induce exactly 60 permutations (scalar
    matrices act trivially); the set is a group and every element is an
    even permutation.
    """
    perms = set()
    for a, b, c, d in itertools.product(gf4.ELEMENTS, repeat=4):
        if gf4.MUL[a][d] ^ gf4.MUL[b][c] == 0:
            continue
        image = tuple(
            _POINT_INDEX[
                _normalize_column(
                    (gf4.MUL[a][x] ^ gf4.MUL[b][y], gf4.MUL[c][x] ^ gf4.MUL[d][y])
                )
            ]
            for (x, y) in POINTS
        )
        perms.add(image)
    return tuple(sorted(perms))


def canonical_form(mv: MultVector) -> MultVector:
    """Lexicographically minimal point-multiplicity image over the group.

    Two dimension-2 codes are equivalent iff their canonical forms are
    equal; the zero-column count is invariant.
    """
    mp = mv.mp
    best = min(tuple(mp[p[i]] for i in range(5)) for p in induced_point_permutations())
    return MultVector(mv.m0, best)


def are_equivalent(c1: LinearCode, c2: LinearCode) -> bool:
    """Equivalence under coordinate permutation and nonzero scaling."""
    return canonical_form(code_to_multvector(c1)) == canonical_form(code_to_multvector(c2))


def representative_atuple(mv: MultVector) -> ATuple:
    """A parameter tuple generating a member of the class of ``mv``.

    Taken from the lexicographically smallest orbit image that carries
    both unit points, so the result is deterministic.
    """
    mp = mv.mp
    best = None
    for p in induced_point_permutations():
        img = tuple(mp[p[i]] for i in range(5))
        if img[0] >= 1 and img[1] >= 1 and (best is None or img < best):
            best = img
    if best is None:
        raise ValueError(f"{mv!r} has rank < 2")
    return ATuple(best[1] - 1, best[0] - 1, best[2], best[3], best[4], a0=mv.m0)


# ---------------------------------------------------------------------------
# census: fast multiplicity path and enumerated oracle path


def _lcd_from_mult(mp: tuple[int, ...]) -> bool:
    """Gram determinant test from multiplicity parities.

    Column (x, y) contributes (x conj(x), x conj(y); y conj(x), y conj(y))
    to the Gram matrix and scaling leaves that contribution fixed, so only
    the parities e_i of the five multiplicities matter:

        det = (e1+e3+e4+e5)(e2+e3+e4+e5) + norm(e3 + e4*w2 + e5*w)

    over GF(2), where the norm term vanishes iff e3 = e4 = e5.
    """
    e = [x & 1 for x in mp]
    a = (e[0] + e[2] + e[3] + e[4]) & 1
    d = (e[1] + e[2] + e[3] + e[4]) & 1
    norm_b = 0 if e[2] == e[3] == e[4] else 1
    return ((a & d) ^ norm_b) == 1


def _min_weight_from_mult(n: int, m0: int, mp: tuple[int, ...]) -> int:
    """d = n - m0 - max(mp): each message class zeroes one point type."""
    return n - m0 - max(mp)


def _we_from_mult(n: int, m0: int, mp: tuple[int, ...]) -> WeightEnumerator:
    counts = {0: 1}
    for p in mp:
        w = n - m0 - p
        counts[w] = counts.get(w, 0) + 3
    return WeightEnumerator.from_dict(counts)


def _class_from_mult(n: int, m0: int, mp: tuple[int, ...]) -> EquivClass:
    return EquivClass(
        canon=MultVector(m0, mp),
        n=n,
        d=_min_weight_from_mult(n, m0, mp),
        we=_we_from_mult(n, m0, mp),
        zero_col=m0 > 0,
    )


def _compositions_array(total: int) -> np.ndarray:
    """All 5-part compositions of ``total`` as an (M, 5) int64 array, lex order."""
    m = math.comb(total + 4, 4)
    bars = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(total + 4), 4)),
        dtype=np.int64,
        count=4 * m,
    ).reshape(m, 4)
    parts = np.empty((m, 5), dtype=np.int64)
    parts[:, 0] = bars[:, 0]
    parts[:, 1] = bars[:, 1] - bars[:, 0] - 1
    parts[:, 2] = bars[:, 2] - bars[:, 1] - 1
    parts[:, 3] = bars[:, 3] - bars[:, 2] - 1
    parts[:, 4] = total + 3 - bars[:, 3]
    return parts


def _enc_bits(n: int) -> int:
    # 5 fields of `bits` each must fit an int64 and hold values up to n.
    bits = max(6, int(n).bit_length())
    if 5 * bits > 62:
        raise ValueError(f"length {n} too large for the packed canonical encoding")
    return bits


@functools.lru_cache(maxsize=8)
def _canon_matrix(bits: int) -> np.ndarray:
    """5 x 60 matrix S with (mp @ S)[j] = packed image of mp under perm j."""
    perms = induced_point_permutations()
    shifts = [1 << (bits * (4 - i)) for i in range(5)]
    s = np.zeros((5, len(perms)), dtype=np.int64)
    for j, p in enumerate(perms):
        for i, k in enumerate(p):
            s[k, j] = shifts[i]
    return s


def _decode_canon(value: int, bits: int) -> tuple[int, int, int, int, int]:
    mask = (1 << bits) - 1
    return tuple((value >> (bits * (4 - i))) & mask for i in range(5))


def _canon_codes_for(n: int, m0: int, filt: str, mp: np.ndarray) -> np.ndarray:
    """Sorted unique packed canonical forms of the filtered rows of ``mp``."""
    if mp.shape[0] == 0:
        return np.empty(0, dtype=np.int64)
    keep = (mp != 0).sum(axis=1) >= 2
    if filt in ("lcd", "optimal_lcd"):
        eps = mp & 1
        a = eps[:, 0] ^ eps[:, 2] ^ eps[:, 3] ^ eps[:, 4]
        d = eps[:, 1] ^ eps[:, 2] ^ eps[:, 3] ^ eps[:, 4]
        same = (eps[:, 2] == eps[:, 3]) & (eps[:, 3] == eps[:, 4])
        norm_b = np.where(same, 0, 1)
        keep &= ((a & d) ^ norm_b) == 1
    if filt == "optimal_lcd":
        keep &= (n - m0 - mp.max(axis=1)) == dmax(n)
    mp = mp[keep]
    if mp.shape[0] == 0:
        return np.empty(0, dtype=np.int64)
    bits = _enc_bits(n)
    s = _canon_matrix(bits)
    chunks = []
    step = 250_000
    for lo in range(0, mp.shape[0], step):
        chunks.append((mp[lo : lo + step] @ s).min(axis=1))
    return np.unique(np.concatenate(chunks))


def _shard_canon_codes(args: tuple[int, int, str, np.ndarray]) -> np.ndarray:
    n, m0, filt, mp = args
    return _canon_codes_for(n, m0, filt, mp)


def _census_fast(n: int, filt: str, include_zero_columns: bool, jobs: int) -> list[EquivClass]:
    m0_values = list(range(0, n - 1)) if include_zero_columns else [0]
    tasks: list[tuple[int, int, str, np.ndarray]] = []
    for m0 in m0_values:
        arr = _compositions_array(n - m0)
        if jobs > 1:
            tasks.extend((n, m0, filt, shard) for shard in np.array_split(arr, jobs))
        else:
            tasks.append((n, m0, filt, arr))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_shard_canon_codes, tasks))
    else:
        results = [_canon_codes_for(*t) for t in tasks]

    by_m0: dict[int, list[np.ndarray]] = {}
    for (_, m0, _, _), res in zip(tasks, results):
        by_m0.setdefault(m0, []).append(res)

    bits = _enc_bits(n)
    classes = []
    for m0 in m0_values:
        codes = np.unique(np.concatenate(by_m0[m0]))
        for value in codes.tolist():
            classes.append(_class_from_mult(n, m0, _decode_canon(value, bits)))
    return classes


def _iter_compositions(total: int):
    for c1 in range(total + 1):
        for c2 in range(total - c1 + 1):
            for c3 in range(total - c1 - c2 + 1):
                for c4 in range(total - c1 - c2 - c3 + 1):
                    yield (c1, c2, c3, c4, total - c1 - c2 - c3 - c4)


def _census_enumerated(n: int, filt: str, include_zero_columns: bool) -> list[EquivClass]:
    """Oracle path: build every code and measure it by codeword enumeration."""
    m0_values = range(0, n - 1) if include_zero_columns else (0,)
    classes: dict[tuple[int, tuple[int, ...]], EquivClass] = {}
    for m0 in m0_values:
        for mp in _iter_compositions(n - m0):
            mv = MultVector(m0, mp)
            if not mv.spans():
                continue
            c = multvector_to_code(mv)
            lcd = codeops.is_hermitian_lcd(c)
            d = codeops.min_weight(c)
            if filt in ("lcd", "optimal_lcd") and not lcd:
                continue
            if filt == "optimal_lcd" and d != dmax(n):
                continue
            canon = canonical_form(mv)
            we = codeops.weight_enumerator(c)
            key = (canon.m0, canon.mp)
            prev = classes.get(key)
            if prev is None:
                classes[key] = EquivClass(canon, n, d, we, m0 > 0)
            elif prev.d != d or prev.we != we:
                raise AssertionError(f"orbit invariant mismatch at {mv!r}")
    return [classes[key] for key in sorted(classes)]


def census(
    n: int,
    filter: str = "lcd",
    include_zero_columns: bool = False,
    jobs: int = 1,
    method: str = "fast",
) -> list[EquivClass]:
    """All equivalence classes of [n, 2] codes passing the filter.

    Iterates every multiplicity vector with m0 + sum(mp) = n (m0 = 0
    unless ``include_zero_columns``), keeps rank-2 vectors passing the
    filter, and groups them by canonical form.  Classes come back sorted
    by (m0, canonical mp) and the result is identical for any ``jobs``.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if filter not in VALID_FILTERS:
        raise ValueError(f"filter must be one of {VALID_FILTERS}, got {filter!r}")
    if method == "fast":
        return _census_fast(n, filter, include_zero_columns, max(1, jobs))
    if method == "enumerate":
        return _census_enumerated(n, filter, include_zero_columns)
    raise ValueError(f"method must be 'fast' or 'enumerate', got {method!r}")


# ---------------------------------------------------------------------------
# known classification data and the verification report

_FAM_BY_KEY: dict[tuple[int, int], Family] = {
    (f.residue, f.index): f for f in fam.family_catalog()
}

# Chains of catalog rows known to be pairwise equivalent (by the three
# moves); indices refer to rows within the residue class.
EQUIV_CHAINS: dict[int, tuple[tuple[int, ...], ...]] = {
    0: ((7, 6, 5), (8, 3, 2, 1, 4)),
    1: ((9, 6, 4, 3, 7), (11, 5, 1, 2, 8, 10)),
    2: ((1, 2),),
    3: ((1, 2, 3),),
    4: (
        (8, 16, 15),
        (6, 22, 20),
        (21, 17, 12, 2, 3, 11, 19, 18),
        (23, 9, 4, 1, 13),
        (24, 10, 5, 7, 14, 25),
    ),
}

# Designated class representatives per residue, in classification order.
CLASS_REPRESENTATIVE_LABELS: dict[int, tuple[str, ...]] = {
    0: ("C_{5m,7}", "C_{5m,8}"),
    1: ("C_{5m+1,9}", "C_{5m+1,1}"),
    2: ("C_{5m+2,1}",),
    3: ("C_{5m+3,1}",),
    4: ("C_{5m+4,8}", "C_{5m+4,6}", "C_{5m+4,21}", "C_{5m+4,23}", "C_{5m+4,24}"),
}

# Closed-form weight enumerators of the representatives: (offset, count)
# pairs meaning count codewords of weight 4m + offset, plus the zero word.
# The C_{5m+2,1} row is stored as recomputed from the construction
# (1 + 6y^(4m+1) + 9y^(4m+2)); the variant with a 4m+3 term sometimes
# quoted for it cannot be right, since at m = 0 the code has length 2.
REPRESENTATIVE_WEIGHT_FORMS: dict[str, tuple[tuple[int, int], ...]] = {
    "C_{5m,7}": ((-1, 3), (0, 9), (1, 3)),
    "C_{5m,8}": ((-1, 6), (0, 6), (2, 3)),
    "C_{5m+1,9}": ((0, 6), (1, 6), (2, 3)),
    "C_{5m+1,1}": ((0, 9), (1, 3), (3, 3)),
    "C_{5m+2,1}": ((1, 6), (2, 9)),
    "C_{5m+3,1}": ((2, 9), (3, 6)),
    "C_{5m+4,8}": ((2, 3), (3, 6), (4, 6)),
    "C_{5m+4,6}": ((2, 9), (5, 6)),
    "C_{5m+4,21}": ((2, 6), (3, 3), (4, 3), (5, 3)),
    "C_{5m+4,23}": ((2, 6), (3, 6), (6, 3)),
    "C_{5m+4,24}": ((2, 9), (3, 3), (7, 3)),
}

_RESIDUE2_FORM_NOTE = (
    "C_{5m+2,1} form recomputed as 1+6y^(4m+1)+9y^(4m+2); the commonly quoted "
    "variant with a 4m+3 term is impossible at m=0 (length 2)"
)


def representative_weight_form(label: str, m: int) -> WeightEnumerator:
    counts = {0: 1}
    for off, cnt in REPRESENTATIVE_WEIGHT_FORMS[label]:
        counts[4 * m + off] = counts.get(4 * m + off, 0) + cnt
    return WeightEnumerator.from_dict(counts)


def expected_optimal_class_count(n: int) -> int:
    """Known number of optimal classes with no zero column at length n."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    m, residue = divmod(n, 5)
    if residue in (0, 1):
        return 1 if m == 1 else 2
    if residue in (2, 3):
        return 1
    return {0: 1, 1: 3, 2: 4}.get(m, 5)


def _label_map(n: int) -> dict[tuple[int, tuple[int, ...]], str]:
    """Canonical form -> catalog label for the classes present at length n."""
    by_canon: dict[tuple[int, tuple[int, ...]], list[Family]] = {}
    for family_row, a in fam.family_tuples(n):
        canon = canonical_form(multvector_of_atuple(a))
        by_canon.setdefault((canon.m0, canon.mp), []).append(family_row)
    priority = CLASS_REPRESENTATIVE_LABELS[n % 5]
    out = {}
    for key, rows in by_canon.items():
        chosen = next((lbl for lbl in priority if any(r.label == lbl for r in rows)), None)
        out[key] = chosen if chosen is not None else rows[0].label
    return out


def classify_optimal(
    n: int,
    include_zero_columns: bool = False,
    jobs: int = 1,
    method: str = "fast",
) -> list[EquivClass]:
    """Census of optimal Hermitian LCD classes, labelled from the catalog.

    A class gets a label when some catalog tuple lies in its orbit;
    zero-column classes never do (the catalog has no zero columns).
    """
    classes = census(n, "optimal_lcd", include_zero_columns, jobs, method)
    labels = _label_map(n)
    return [
        replace(cls, label=labels.get((cls.canon.m0, cls.canon.mp)))
        for cls in classes
    ]


@dataclass(frozen=True)
class CheckResult:
    id: str
    n: int
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    n_max: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_jsonable(self) -> dict:
        return {
            "n_max": self.n_max,
            "checks": [
                {"id": c.id, "n": c.n, "pass": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def _check_catalog(n: int) -> CheckResult:
    enumerated = {a.entries for a in fam.enumerate_optimal(n)}
    catalog = {a.entries for _, a in fam.family_tuples(n)}
    if enumerated == catalog:
        detail = f"{len(enumerated)} parameter tuples; cube enumeration matches catalog"
        return CheckResult("T1", n, True, detail)
    missing = sorted(catalog - enumerated)
    extra = sorted(enumerated - catalog)
    return CheckResult("T1", n, False, f"missing={missing} extra={extra}")


def _check_chains(n: int) -> CheckResult:
    m, residue = divmod(n, 5)
    problems = []
    chain_canons = []
    for chain in EQUIV_CHAINS[residue]:
        canons = set()
        for index in chain:
            a = _FAM_BY_KEY[(residue, index)].tuple_at(m)
            if a is not None:
                canons.add(canonical_form(multvector_of_atuple(a)))
        if not canons:
            continue
        if len(canons) > 1:
            problems.append(f"chain {chain} splits into {len(canons)} classes")
        chain_canons.append(min((c.m0, c.mp) for c in canons))
    if len(set(chain_canons)) != len(chain_canons):
        problems.append("two chains share a canonical form")
    expected = expected_optimal_class_count(n)
    if len(chain_canons) != expected:
        problems.append(f"{len(chain_canons)} nonempty chains, expected {expected}")
    if problems:
        return CheckResult("T2", n, False, "; ".join(problems))
    return CheckResult(
        "T2", n, True, f"{len(chain_canons)} chains collapse to distinct classes"
    )


def _check_weight_forms(n: int) -> CheckResult:
    m, residue = divmod(n, 5)
    problems = []
    seen: list[WeightEnumerator] = []
    checked = 0
    for label in CLASS_REPRESENTATIVE_LABELS[residue]:
        a = fam.family_by_label(label).tuple_at(m)
        if a is None:
            continue
        computed = codeops.weight_enumerator(LinearCode(build_generator(a)))
        expected = representative_weight_form(label, m)
        if computed != expected:
            problems.append(f"{label}: computed {computed} != form {expected}")
        if computed in seen:
            problems.append(f"{label}: weight enumerator repeats at n={n}")
        seen.append(computed)
        checked += 1
    if problems:
        return CheckResult("T3", n, False, "; ".join(problems))
    detail = f"{checked} representative enumerators match their closed forms"
    if residue == 2:
        detail += f" ({_RESIDUE2_FORM_NOTE})"
    return CheckResult("T3", n, True, detail)


def _check_classification(
    n: int, classes_plain: list[EquivClass], classes_zero: list[EquivClass]
) -> CheckResult:
    expected = expected_optimal_class_count(n)
    expected_extra = 1 if n % 5 == 4 else 0
    problems = []
    if len(classes_plain) != expected:
        problems.append(f"{len(classes_plain)} classes, expected {expected}")
    zero_classes = [c for c in classes_zero if c.zero_col]
    if len(classes_zero) != expected + expected_extra:
        problems.append(
            f"{len(classes_zero)} classes with zero columns allowed, "
            f"expected {expected + expected_extra}"
        )
    if len(zero_classes) != expected_extra:
        problems.append(f"{len(zero_classes)} zero-column classes, expected {expected_extra}")
    unlabelled = [c for c in classes_plain if c.label is None]
    if unlabelled:
        problems.append(f"{len(unlabelled)} classes without a catalog label")
    plain_keys = {(c.canon.m0, c.canon.mp) for c in classes_plain}
    embedded = {(c.canon.m0, c.canon.mp) for c in classes_zero if not c.zero_col}
    if plain_keys != embedded:
        problems.append("zero-column census disagrees on the m0 = 0 classes")
    if problems:
        return CheckResult("T4", n, False, "; ".join(problems))
    return CheckResult(
        "T4",
        n,
        True,
        f"{len(classes_plain)} classes (+{expected_extra} with a zero column), all labelled",
    )


def _check_headline(
    n: int, classes_plain: list[EquivClass], classes_zero: list[EquivClass]
) -> CheckResult | None:
    m, residue = divmod(n, 5)
    if residue in (0, 1):
        if m < 2:
            return None
        ok = len(classes_plain) == 2
        detail = f"{len(classes_plain)} classes, headline count 2"
    elif residue in (2, 3):
        ok = len(classes_plain) == 1
        detail = f"{len(classes_plain)} classes, headline count 1"
    else:
        if m < 3:
            return None
        zero_classes = [c for c in classes_zero if c.zero_col]
        ok = len(classes_zero) == 6 and len(zero_classes) == 1
        detail = (
            f"{len(classes_zero)} classes including zero columns "
            f"({len(zero_classes)} with a zero coordinate), headline count 6 (1)"
        )
    return CheckResult("THM", n, ok, detail)


def verify_classification(n_max: int, jobs: int = 1) -> VerificationReport:
    """Re-derive and cross-check the known classification up to n_max.

    Runs, for every n in 2..n_max: T1 catalog vs fresh enumeration, T2
    equivalence-chain collapse, T3 weight enumerator forms, T4 class
    counts against the census (with and without zero columns), and THM
    headline counts where applicable.  Failures become report entries,
    never exceptions.
    """
    if n_max < 7:
        raise ValueError(f"n_max must be >= 7, got {n_max}")
    checks: list[CheckResult] = []
    for n in range(2, n_max + 1):
        checks.append(_check_catalog(n))
        checks.append(_check_chains(n))
        checks.append(_check_weight_forms(n))
        classes_plain = classify_optimal(n, include_zero_columns=False, jobs=jobs)
        classes_zero = classify_optimal(n, include_zero_columns=True, jobs=jobs)
        checks.append(_check_classification(n, classes_plain, classes_zero))
        headline = _check_headline(n, classes_plain, classes_zero)
        if headline is not None:
            checks.append(headline)
    return VerificationReport(n_max, tuple(checks))
