"""Brute-force ideal oracle for restricted matching field ideals.

The degree-two generators of the matching field ideal are found by grouping
all products of two Pluecker variables by their image under the signed
monomial map: monomials in one fiber differ by an element of the kernel.
Restricting by a permutation w sets the variables indexed by the vanishing
set S_w to zero; what survives of each fiber decides the classification

    zero        no generators survive,
    binomial    only two-sided relations survive,
    nonbinomial some fiber contains both a vanishing and a surviving
                monomial, so a monomial lies in the ideal.

The linear-algebra half of the module computes the degree-two piece of the
full flag ideal by exact integer elimination, restricts it to X(w), and
extracts the span of lowest-weight initial forms.  This is the reference
object the fiber combinatorics is checked against.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from mfl import exactla
from mfl.matchfield import variable_image_key, weight_key
from mfl.permcomb import Permutation, all_index_keys, vanishing_keys

Key = tuple[int, ...]
MonoKey = tuple[Key, Key]

#: classify_oracle refuses larger n unless overridden.
ORACLE_BOUND_DEFAULT = 7
#: degree2_flag_ideal refuses larger n unless overridden (env MFL_LA_CAP).
LA_CAP_DEFAULT = 5

ZERO = "zero"
BINOMIAL = "binomial"
NONBINOMIAL = "nonbinomial"


class CapabilityError(Exception):
    """A request exceeded a configured size cap."""


def la_cap() -> int:
    env = os.environ.get("MFL_LA_CAP")
    return int(env) if env else LA_CAP_DEFAULT


class QuadraticRelation(NamedTuple):
    """A binomial ``P_I P_J - sign * P_I' P_J'`` in the kernel of the map.

    ``lhs``/``rhs`` are unordered pairs of sorted member tuples, with the
    lexicographically smaller pair stored first; ``sign`` is the product of
    the two image signs, so the relation vanishes under the signed map.
    """

    lhs: MonoKey
    rhs: MonoKey
    sign: int

    def text(self) -> str:
        op = "-" if self.sign == 1 else "+"
        return f"{mono_text(self.lhs)} {op} {mono_text(self.rhs)}"

    def to_json_obj(self) -> dict:
        return {
            "lhs": [key_text(k) for k in self.lhs],
            "rhs": [key_text(k) for k in self.rhs],
            "sign": self.sign,
        }


def key_text(key: Key) -> str:
    if key and key[-1] <= 9:
        return "".join(str(m) for m in key)
    return ",".join(str(m) for m in key)


def mono_text(mono: MonoKey) -> str:
    return "*".join(f"P_{key_text(k)}" for k in mono)


def _key_order(k: Key) -> tuple[int, Key]:
    return (len(k), k)


def mono_key(a: Key, b: Key) -> MonoKey:
    """Unordered pair of variables, smaller (size, lex) key first."""
    return (a, b) if _key_order(a) <= _key_order(b) else (b, a)


def _mono_order(m: MonoKey) -> tuple:
    return tuple(_key_order(k) for k in m)


# ---------------------------------------------------------------------------
# Fibers of the signed monomial map in degree two


@lru_cache(maxsize=None)
def _fibers(n: int, ell: int) -> tuple[tuple[tuple[MonoKey, int], ...], ...]:
    """Fibers of size >= 2 of the degree-two monomials, as sorted tuples of
    (monomial key, image sign)."""
    variables = all_index_keys(n)
    images = {v: variable_image_key(n, ell, v) for v in variables}
    groups: dict[tuple, list[tuple[MonoKey, int]]] = {}
    for a, b in itertools.combinations_with_replacement(variables, 2):
        ca, sa = images[a]
        cb, sb = images[b]
        groups.setdefault(tuple(sorted(ca + cb)), []).append((mono_key(a, b), sa * sb))
    return tuple(
        tuple(sorted(members, key=lambda ms: _mono_order(ms[0])))
        for _, members in sorted(groups.items())
        if len(members) >= 2
    )


@lru_cache(maxsize=None)
def quadratic_relations(n: int, ell: int, all_pairs: bool = False) -> tuple[QuadraticRelation, ...]:
    """Degree-two binomial generators of the matching field ideal.

    Spanning mode (default) emits, for each fiber, every member against the
    fiber's smallest monomial; ``all_pairs`` emits every within-fiber pair.
    Relations are sorted by (lhs, rhs) so output is deterministic.

    >>> quadratic_relations(3, 0)[0].text()
    'P_1*P_23 - P_2*P_13'
    """
    relations = []
    for fiber in _fibers(n, ell):
        if all_pairs:
            pairs = itertools.combinations(fiber, 2)
        else:
            rep, rest = fiber[0], fiber[1:]
            pairs = ((rep, other) for other in rest)
        for (m1, s1), (m2, s2) in pairs:
            lhs, rhs = (
                (m1, m2) if _mono_order(m1) <= _mono_order(m2) else (m2, m1)
            )
            relations.append(QuadraticRelation(lhs, rhs, s1 * s2))
    return tuple(
        sorted(relations, key=lambda r: (_mono_order(r.lhs), _mono_order(r.rhs)))
    )


# ---------------------------------------------------------------------------
# Restriction by a permutation


@dataclass(frozen=True)
class ClassificationOutcome:
    """Surviving generators of a restricted matching field ideal.

    ``surviving_monomials`` lists the surviving monomials whose fiber also
    contains a vanishing monomial; these lie in the restricted ideal, and the
    list does not depend on the choice of spanning set.  ``degree2_rank`` is
    the dimension of the degree-two span of the ideal's generators.
    """

    n: int
    ell: int | None
    w: tuple[int, ...] | None
    verdict: str
    surviving_binomials: tuple[QuadraticRelation, ...]
    surviving_monomials: tuple[MonoKey, ...]
    degree2_rank: int

    @property
    def monomial_free(self) -> bool:
        return self.verdict in (ZERO, BINOMIAL)

    def to_json_obj(self) -> dict:
        if self.w is None:
            w_str = None
        else:
            sep = "" if self.n <= 9 else ","
            w_str = sep.join(str(v) for v in self.w)
        return {
            "schema": "mfl/1",
            "n": self.n,
            "ell": self.ell,
            "w": w_str,
            "verdict": self.verdict,
            "generators": [r.to_json_obj() for r in self.surviving_binomials],
            "monomials": [[key_text(k) for k in m] for m in self.surviving_monomials],
            "degree2_rank": self.degree2_rank,
        }


def _outcome_from_components(
    components: Iterable[Sequence[MonoKey]],
    relations: Iterable[QuadraticRelation],
    vanset: frozenset[Key],
    n: int,
    ell: int | None,
    w_entries: tuple[int, ...] | None,
) -> ClassificationOutcome:
    def alive(mono: MonoKey) -> bool:
        return mono[0] not in vanset and mono[1] not in vanset

    monomials: list[MonoKey] = []
    rank = 0
    for comp in components:
        survivors = [m for m in comp if alive(m)]
        if not survivors:
            continue
        if len(survivors) < len(comp):
            monomials.extend(survivors)
            rank += len(survivors)
        else:
            rank += len(survivors) - 1
    binomials = tuple(r for r in relations if alive(r.lhs) and alive(r.rhs))
    monomials_t = tuple(sorted(set(monomials), key=_mono_order))
    if monomials_t:
        verdict = NONBINOMIAL
    elif binomials:
        verdict = BINOMIAL
    else:
        verdict = ZERO
    return ClassificationOutcome(
        n, ell, w_entries, verdict, binomials, monomials_t, rank
    )


def restrict(
    relations: Sequence[QuadraticRelation],
    w: Permutation,
    ell: int | None = None,
) -> ClassificationOutcome:
    """Set the variables of S_w to zero in a relation list.

    A relation survives as a binomial when neither side vanishes; fibers are
    recovered as connected components of the relation list, and a surviving
    monomial is recorded whenever its fiber lost a member.
    """
    parent: dict[MonoKey, MonoKey] = {}

    def find(x: MonoKey) -> MonoKey:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for rel in relations:
        for m in (rel.lhs, rel.rhs):
            parent.setdefault(m, m)
        a, b = find(rel.lhs), find(rel.rhs)
        if a != b:
            parent[a] = b
    groups: dict[MonoKey, list[MonoKey]] = {}
    for m in parent:
        groups.setdefault(find(m), []).append(m)
    vanset = vanishing_keys(w.entries)
    return _outcome_from_components(
        groups.values(), relations, vanset, w.n, ell, w.entries
    )


def classify_oracle(
    n: int,
    ell: int,
    w: Permutation,
    *,
    all_pairs: bool = False,
    bound: int | None = None,
) -> ClassificationOutcome:
    """Restricted-ideal classification for (n, ell, w); memoizes per (n, ell).

    >>> classify_oracle(4, 2, Permutation((3, 2, 1, 4))).verdict
    'binomial'
    """
    bound = ORACLE_BOUND_DEFAULT if bound is None else bound
    if n < 3:
        raise ValueError(f"classification needs n >= 3, got {n}")
    if n > bound:
        raise CapabilityError(f"oracle bound is n <= {bound}, got n = {n}")
    if w.n != n:
        raise ValueError(f"permutation length {w.n} does not match n = {n}")
    if not 0 <= ell <= n - 1:
        raise ValueError(f"ell must be in 0..{n - 1}, got {ell}")
    relations = quadratic_relations(n, ell, all_pairs)
    vanset = vanishing_keys(w.entries)
    return _outcome_from_components(
        _fiber_components(n, ell), relations, vanset, n, ell, w.entries
    )


@lru_cache(maxsize=None)
def _fiber_components(n: int, ell: int) -> tuple[tuple[MonoKey, ...], ...]:
    return tuple(tuple(m for m, _ in fiber) for fiber in _fibers(n, ell))


def verdicts_for_all_w(n: int, ell: int, bound: int | None = None) -> dict[tuple[int, ...], str]:
    """Verdict of every w in S_n at once; the bulk path used by the sweeps."""
    bound = ORACLE_BOUND_DEFAULT if bound is None else bound
    if n > bound:
        raise CapabilityError(f"oracle bound is n <= {bound}, got n = {n}")
    fibers = _fibers(n, ell)
    mono_ids: dict[MonoKey, int] = {}
    fiber_ids = []
    for fiber in fibers:
        ids = []
        for m, _ in fiber:
            if m not in mono_ids:
                mono_ids[m] = len(mono_ids)
            ids.append(mono_ids[m])
        fiber_ids.append(ids)
    mono_list = list(mono_ids)
    out = {}
    for entries in itertools.permutations(range(1, n + 1)):
        vanset = vanishing_keys(entries)
        alive = [m[0] not in vanset and m[1] not in vanset for m in mono_list]
        saw_monomial = False
        saw_binomial = False
        for ids in fiber_ids:
            live = 0
            for i in ids:
                if alive[i]:
                    live += 1
            if live == 0:
                continue
            if live < len(ids):
                saw_monomial = True
                break
            saw_binomial = True
        out[entries] = (
            NONBINOMIAL if saw_monomial else BINOMIAL if saw_binomial else ZERO
        )
    return out


# ---------------------------------------------------------------------------
# Exact degree-two linear algebra


@dataclass(frozen=True)
class DegreeTwoSpace:
    """A subspace of the span of degree-two Pluecker monomials.

    ``monomials`` fixes the coordinate order; ``rows`` is the canonical
    reduced echelon basis with primitive integer entries (column index,
    coefficient).
    """

    monomials: tuple[MonoKey, ...]
    rows: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def rank(self) -> int:
        return len(self.rows)


def _parity(perm: Sequence[int]) -> int:
    inv = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def _det_terms(members: Key) -> tuple[tuple[tuple[tuple[int, int], ...], int], ...]:
    """Terms of the top-|J| minor on columns J: (sorted cells, sign)."""
    s = len(members)
    terms = []
    for rows in itertools.permutations(range(1, s + 1)):
        cells = tuple(sorted((rows[k], members[k]) for k in range(s)))
        terms.append((cells, _parity(rows)))
    return tuple(terms)


def _product_row(a: Key, b: Key) -> dict[tuple[tuple[int, int], ...], int]:
    """Expansion of the product of two minors into grid monomials."""
    out: dict[tuple[tuple[int, int], ...], int] = {}
    for cells_a, sign_a in _det_terms(a):
        for cells_b, sign_b in _det_terms(b):
            key = tuple(sorted(cells_a + cells_b))
            coeff = out.get(key, 0) + sign_a * sign_b
            if coeff:
                out[key] = coeff
            else:
                out.pop(key, None)
    return out


def degree2_flag_ideal(n: int, cap: int | None = None) -> DegreeTwoSpace:
    """Degree-two piece of the full flag ideal, by exact elimination.

    Rows of the coefficient matrix are products of two minors of the generic
    matrix; the left kernel is assembled blockwise (two products share a grid
    monomial only if their column multisets and size multisets agree) and put
    in reduced echelon form.
    """
    cap = la_cap() if cap is None else cap
    if n > cap:
        raise CapabilityError(f"linear-algebra cap is n <= {cap}, got n = {n}")
    return _degree2_flag_ideal_cached(n)


@lru_cache(maxsize=None)
def _degree2_flag_ideal_cached(n: int) -> DegreeTwoSpace:
    variables = all_index_keys(n)
    monomials = tuple(itertools.combinations_with_replacement(variables, 2))
    index = {m: i for i, m in enumerate(monomials)}
    blocks: dict[tuple, list[MonoKey]] = {}
    for a, b in monomials:
        key = (tuple(sorted(a + b)), tuple(sorted((len(a), len(b)))))
        blocks.setdefault(key, []).append((a, b))
    global_rows: list[exactla.Row] = []
    for members in blocks.values():
        if len(members) < 2:
            continue
        rows = [_product_row(a, b) for a, b in members]
        for coeffs in exactla.left_kernel(rows):
            global_rows.append(
                {index[m]: c for m, c in zip(members, coeffs) if c != 0}
            )
    basis = exactla.rref(global_rows)
    return DegreeTwoSpace(monomials, basis.canonical())


def initial_degree2(
    n: int, ell: int, w: Permutation, cap: int | None = None
) -> DegreeTwoSpace:
    """Degree-two span of initial forms of the Schubert ideal of X(w).

    Vanishing variables are set to zero in the flag ideal (column deletion
    plus re-reduction); columns are then ordered by total weight and each
    echelon row is truncated to its lowest-weight stratum.  Coordinates of
    the result are the surviving monomials in increasing (weight, key) order.
    """
    flag = degree2_flag_ideal(n, cap)
    vanset = vanishing_keys(w.entries)

    def alive(mono: MonoKey) -> bool:
        return mono[0] not in vanset and mono[1] not in vanset

    surviving = [i for i, m in enumerate(flag.monomials) if alive(m)]
    weights = {
        i: weight_key(n, ell, flag.monomials[i][0]) + weight_key(n, ell, flag.monomials[i][1])
        for i in surviving
    }
    order = sorted(surviving, key=lambda i: (weights[i], flag.monomials[i]))
    col_pos = {i: p for p, i in enumerate(order)}

    projected = []
    for row in flag.rows:
        proj = {c: v for c, v in row if c in col_pos}
        if proj:
            projected.append(proj)
    schubert = exactla.rref(projected, col_pos)
    initial_rows = []
    for pivot, row in zip(schubert.pivots, schubert.rows):
        stratum = weights[pivot]
        initial_rows.append({c: v for c, v in row.items() if weights[c] == stratum})
    basis = exactla.rref(initial_rows, col_pos)
    new_monos = tuple(flag.monomials[i] for i in order)
    rows = tuple(
        tuple(sorted((col_pos[c], v) for c, v in row.items()))
        for row in basis.rows
    )
    return DegreeTwoSpace(new_monos, tuple(sorted(rows)))


def surviving_binomial_space(
    n: int, ell: int, w: Permutation, coords: DegreeTwoSpace
) -> DegreeTwoSpace:
    """Span of the surviving fiber binomials, in the coordinates of ``coords``."""
    col_of = {m: i for i, m in enumerate(coords.monomials)}
    vanset = vanishing_keys(w.entries)
    rows = []
    for fiber in _fibers(n, ell):
        survivors = [
            (m, s) for m, s in fiber
            if m[0] not in vanset and m[1] not in vanset
        ]
        for (m1, s1), (m2, s2) in zip(survivors, survivors[1:]):
            rows.append({col_of[m1]: 1, col_of[m2]: -s1 * s2})
    basis = exactla.rref(rows)
    return DegreeTwoSpace(coords.monomials, basis.canonical())


def matches_initial_degree2(
    n: int, ell: int, w: Permutation, cap: int | None = None
) -> bool:
    """True iff the surviving binomials span the initial degree-two space.

    Precondition: the oracle verdict for (n, ell, w) is monomial-free.
    """
    outcome = classify_oracle(n, ell, w)
    if not outcome.monomial_free:
        raise ValueError(f"(n={n}, ell={ell}, w={w}) is not monomial-free")
    init = initial_degree2(n, ell, w, cap)
    gs = surviving_binomial_space(n, ell, w, init)
    return gs.rows == init.rows
