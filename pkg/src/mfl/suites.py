"""Named exhaustive verification suites, shared by the CLI and the tests.

Each suite runs a family of checks over a configurable range and returns a
:class:`SuiteReport`; nothing raises on a mathematical mismatch, so a failing
suite can be inspected as data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from mfl.matchfield import BlockDiagonalMF, verify_coherence
from mfl.permcomb import (
    Permutation,
    all_permutations,
    has_descending_property,
    in_zero_family,
    is_312_free,
    restriction,
    vanishing_keys,
)
from mfl.quadideal import (
    BINOMIAL,
    NONBINOMIAL,
    ZERO,
    classify_oracle,
    la_cap,
    matches_initial_degree2,
    verdicts_for_all_w,
)
from mfl.tableaux import (
    enumerate_ssyt2,
    is_standard,
    min_defining_chain2,
    min_defining_chain2_exhaustive,
    verify_bijection,
)
from mfl.theoremsets import (
    TAG_A1,
    binomial_family,
    cross_validate,
    in_pattern_family,
)

SUITES = ("coherence", "theoremB", "theoremC", "P", "theoremA", "tableaux", "all")


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def record(self, **info) -> None:
        self.mismatches.append(info)

    def merge(self, other: "SuiteReport") -> None:
        self.checked += other.checked
        self.mismatches.extend(
            dict(m, suite=other.suite) for m in other.mismatches
        )

    def to_json_obj(self) -> dict:
        return {
            "schema": "mfl/1",
            "suite": self.suite,
            "ok": self.ok,
            "checked": self.checked,
            "mismatches": self.mismatches,
        }


def run_coherence(n_max: int = 7) -> SuiteReport:
    """Unique-minimum checks for every field with n <= n_max, plus the
    demonstration that the uncorrected placement rule is not induced by the
    weight matrix at (4, 1)."""
    report = SuiteReport("coherence")
    for n in range(2, n_max + 1):
        for ell in range(n):
            result = verify_coherence(BlockDiagonalMF(n, ell))
            report.checked += result.checked
            if not result.ok:
                first = result.first_failure()
                report.record(
                    n=n, ell=ell, members=first.members, tie=first.tie,
                    expected=first.expected_rows, minimal=first.minimal_rows,
                )
    literal = verify_coherence(BlockDiagonalMF(4, 1), rule="literal")
    report.checked += 1
    bad = {f.members for f in literal.failures}
    if literal.ok or (3, 4) not in bad:
        report.record(
            n=4, ell=1, detail="literal placement rule unexpectedly coherent"
        )
    return report


def run_theorem_b(n_max: int = 6) -> SuiteReport:
    """Oracle verdict zero iff membership in the zero family, for every cut."""
    report = SuiteReport("theoremB")
    for n in range(3, n_max + 1):
        for ell in range(n):
            for entries, verdict in verdicts_for_all_w(n, ell).items():
                report.checked += 1
                if (verdict == ZERO) != in_zero_family(Permutation(entries)):
                    report.record(n=n, ell=ell, w=entries, verdict=verdict)
    return report


def run_theorem_c(n_max: int = 6, combinatorial_n_max: int = 7) -> SuiteReport:
    """Binomial family against the oracle, the descending-property exception,
    and the oracle-free set identities up to combinatorial_n_max."""
    report = SuiteReport("theoremC")
    for n in range(3, n_max + 1):
        result = cross_validate(n)
        report.checked += sum(sum(c.values()) for _, c in result.counts)
        for m in result.mismatches:
            if m["kind"] in ("class", "descending-exception"):
                report.record(n=n, **m)
    for n in range(3, combinatorial_n_max + 1):
        for ell in range(n):
            family = binomial_family(n, ell)
            for w in all_permutations(n):
                report.checked += 1
                in_t = w.entries in family
                in_z = in_zero_family(w)
                if in_t and in_z:
                    report.record(n=n, ell=ell, w=w.to_string(),
                                  detail="binomial and zero families overlap")
                if (in_t or in_z) != in_pattern_family(w, ell):
                    report.record(n=n, ell=ell, w=w.to_string(),
                                  detail="T union Z differs from pattern family")
    return report


def run_pattern(n_max: int = 6, combinatorial_n_max: int = 7) -> SuiteReport:
    """Monomial-freeness iff pattern family membership, plus the structural
    facts about 312 patterns inside the pattern family."""
    report = SuiteReport("P")
    for n in range(3, n_max + 1):
        for ell in range(n):
            for entries, verdict in verdicts_for_all_w(n, ell).items():
                report.checked += 1
                w = Permutation(entries)
                if in_pattern_family(w, ell) != (verdict != NONBINOMIAL):
                    report.record(n=n, ell=ell, w=w.to_string(), verdict=verdict)
    for n in range(3, combinatorial_n_max + 1):
        for w in all_permutations(n):
            e = w.entries
            for ell in range(1, n):
                if not in_pattern_family(w, ell):
                    continue
                report.checked += 1
                for i, j, k in itertools.combinations(range(n), 3):
                    if e[j] < e[k] < e[i]:
                        if i != 0 or e[j] != ell:
                            report.record(
                                n=n, ell=ell, w=w.to_string(),
                                detail="312 pattern not anchored at (w_1, ell)",
                            )
                if not is_312_free(e):
                    head = restriction(w, e[0]).entries
                    expected = (e[0], ell) + tuple(
                        v for v in range(e[0] - 1, 0, -1) if v != ell
                    )
                    if head != expected:
                        report.record(
                            n=n, ell=ell, w=w.to_string(),
                            detail="restriction to w_1 has unexpected shape",
                        )
    return report


def run_theorem_a(n_max: int = 4, cap: int | None = None) -> SuiteReport:
    """Surviving binomial span equals the initial degree-two span for every
    monomial-free case up to n_max."""
    report = SuiteReport("theoremA")
    cap = la_cap() if cap is None else cap
    if n_max > cap:
        raise ValueError(f"n_max {n_max} exceeds the linear-algebra cap {cap}")
    for n in range(3, n_max + 1):
        for ell in range(n):
            for entries, verdict in verdicts_for_all_w(n, ell).items():
                if verdict == NONBINOMIAL:
                    continue
                report.checked += 1
                w = Permutation(entries)
                if not matches_initial_degree2(n, ell, w, cap=cap):
                    report.record(n=n, ell=ell, w=w.to_string())
    return report


def run_tableaux(n_max: int = 5) -> SuiteReport:
    """Bijection suite over the pattern family, two-column standardness
    against column domination for 312-free w, and agreement of the two
    defining-chain computations."""
    report = SuiteReport("tableaux")
    for n in range(3, n_max + 1):
        for ell in range(n):
            for w in all_permutations(n):
                if not in_pattern_family(w, ell):
                    continue
                result = verify_bijection(n, ell, w)
                report.checked += 1
                if not result.ok:
                    report.record(n=n, ell=ell, w=w.to_string(),
                                  failures=result.failures[:3])
        tableaux = enumerate_ssyt2(n)
        chains = {}
        for t in tableaux:
            chains[t] = min_defining_chain2(t)
            report.checked += 1
            if chains[t].perms != min_defining_chain2_exhaustive(t).perms:
                report.record(n=n, columns=t.columns,
                              detail="constructive chain differs from exhaustive")
        for w in all_permutations(n):
            if not is_312_free(w.entries):
                continue
            vanset = vanishing_keys(w.entries)
            for t in tableaux:
                report.checked += 1
                dominated_cols = all(c not in vanset for c in t.columns)
                if is_standard(t, w) != dominated_cols:
                    report.record(n=n, w=w.to_string(), columns=t.columns,
                                  detail="standardness differs from domination")
    return report


def run_a1_rank(n_max: int = 6) -> SuiteReport:
    """Every member of the A1 clause has a principal (rank one) ideal."""
    report = SuiteReport("a1_rank")
    for n in range(4, n_max + 1):
        for ell in range(n):
            family = binomial_family(n, ell)
            for entries, tags in family.items():
                if TAG_A1 not in tags:
                    continue
                report.checked += 1
                outcome = classify_oracle(n, ell, Permutation(entries))
                if outcome.verdict != BINOMIAL or outcome.degree2_rank != 1:
                    report.record(n=n, ell=ell, w=entries,
                                  verdict=outcome.verdict,
                                  rank=outcome.degree2_rank)
    return report


_RUNNERS = {
    "coherence": run_coherence,
    "theoremB": run_theorem_b,
    "theoremC": run_theorem_c,
    "P": run_pattern,
    "theoremA": run_theorem_a,
    "tableaux": run_tableaux,
}


def run_suite(name: str, n_max: int | None = None, cap: int | None = None) -> SuiteReport:
    """Run one named suite (or "all") with its default range unless n_max is
    given; caps apply to the linear-algebra suite only."""
    if name == "all":
        combined = SuiteReport("all")
        for sub in _RUNNERS:
            combined.merge(run_suite(sub, n_max=None, cap=cap))
        combined.merge(run_a1_rank())
        return combined
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    runner = _RUNNERS[name]
    kwargs = {}
    if n_max is not None:
        kwargs["n_max"] = n_max
    if name == "theoremA" and cap is not None:
        kwargs["cap"] = cap
    return runner(**kwargs)
