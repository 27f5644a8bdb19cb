"""Exhaustive checks of the degree bound and the Hilbertian property over S_n."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial

from . import diagram
from .groth import grothendieck, pipe_dream_table
from .hilbert import (
    AmbientSpec,
    empirical_postulation,
    hilbert_function,
    hilbert_polynomial,
    k_polynomial,
    postulation,
)
from .ideal import TooLarge, cross_check
from .perm import Permutation, coxeter_length, enumerate_permutations, normalize
from .poly import total_degree

__all__ = ["CHECKS", "CheckResult", "VerificationJob", "check_permutation", "run_verification"]

CHECKS = (
    "engine-agreement",
    "degree-bound",
    "binomial-bound",
    "hilbertian-full",
    "hilbertian-effective",
    "length-diagram",
    "oracle",
)

ORACLE_K_MAX = 4
ORACLE_MAX_EFFECTIVE_VARS = 6


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    skipped: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.counterexamples)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "counterexamples": self.counterexamples,
        }


@dataclass
class VerificationJob:
    n: int
    checks: tuple[str, ...]
    parallelism: int = 1
    results: dict[str, CheckResult] = field(default_factory=dict)
    dominant_count: int = 0

    @property
    def total(self) -> int:
        return factorial(self.n)

    @property
    def passed(self) -> bool:
        return all(r.failed == 0 for r in self.results.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "permutations": self.total,
            "dominant": self.dominant_count,
            "passed": self.passed,
            "checks": {name: self.results[name].to_json() for name in self.checks},
        }

    def format(self) -> str:
        lines = [f"S_{self.n}: {self.total} permutations, {self.dominant_count} dominant"]
        for name in self.checks:
            r = self.results[name]
            line = f"{name}: {r.passed}/{self.total - r.skipped} permutations pass"
            if r.skipped:
                line += f" ({r.skipped} not applicable or intractable)"
            lines.append(line)
            for ce in r.counterexamples:
                lines.append("  counterexample:")
                lines.extend(f"    {k}: {v}" for k, v in ce.items())
        lines.append("ALL PASS" if self.passed else "FAILURES FOUND")
        return "\n".join(lines)


def _diagnostics(w: Permutation) -> dict:
    return {
        "permutation": ",".join(map(str, w.word)),
        "length": coxeter_length(w),
        "rothe_diagram": diagram.rothe_diagram(w).to_json(),
        "effective_region": diagram.effective_region(w).to_json(),
        "grothendieck": str(grothendieck(w)),
    }


def check_permutation(w: Permutation, n: int, checks: tuple[str, ...]) -> dict[str, str | dict]:
    """Run the selected checks on one w in S_n.

    Returns check name -> "pass", "skip", or a counterexample dict.
    """
    out: dict[str, str | dict] = {}
    w = normalize(w)
    G = grothendieck(w)
    deg = total_degree(G)
    lam = diagram.effective_region(w)
    dominant = diagram.is_dominant(w)

    def fail(name: str, reason: str, **extra):
        info = _diagnostics(w)
        info["reason"] = reason
        info.update({k: str(v) for k, v in extra.items()})
        out[name] = info

    for name in checks:
        if name == "engine-agreement":
            other = pipe_dream_table(n).get(w.word)
            if other == G:
                out[name] = "pass"
            else:
                fail(name, "engines disagree", pipe_dream=other)
        elif name == "degree-bound":
            if deg <= len(lam) and ((deg == len(lam)) == dominant):
                out[name] = "pass"
            else:
                fail(name, "deg G_w vs |lambda(w)|", degree=deg, effective_size=len(lam), dominant=dominant)
        elif name == "binomial-bound":
            if deg <= n * (n - 1) // 2:
                out[name] = "pass"
            else:
                fail(name, "deg G_w > n choose 2", degree=deg)
        elif name == "hilbertian-full":
            if n < 2:
                out[name] = "skip"
                continue
            K = k_polynomial(w)
            N = n * n
            post = postulation(K, N)
            seen = empirical_postulation(K, N)
            if post < 0 and seen == post:
                out[name] = "pass"
            else:
                fail(name, "full ambient not Hilbertian or scan mismatch", closed_form=post, scan=seen)
        elif name == "hilbertian-effective":
            if not len(lam):
                out[name] = "skip"
                continue
            K = k_polynomial(w)
            N = len(lam)
            post = postulation(K, N)
            seen = empirical_postulation(K, N)
            ok = seen == post and ((post < 0) == (not dominant))
            if dominant:
                hp = hilbert_polynomial(K, N)
                ok = ok and post == 0 and hilbert_function(K, N, 0) == 1 and hp(0) == 0
            if ok:
                out[name] = "pass"
            else:
                fail(name, "effective Hilbertian iff not dominant", closed_form=post, scan=seen, dominant=dominant)
        elif name == "length-diagram":
            if coxeter_length(w) == len(diagram.rothe_diagram(w)):
                out[name] = "pass"
            else:
                fail(name, "l(w) != |D(w)|")
        elif name == "oracle":
            if n <= 3:
                ambient = AmbientSpec.full(n)
            elif 0 < len(lam) <= ORACLE_MAX_EFFECTIVE_VARS:
                ambient = AmbientSpec.effective(w)
            else:
                out[name] = "skip"
                continue
            try:
                report = cross_check(w, ambient, ORACLE_K_MAX)
            except TooLarge:
                out[name] = "skip"
                continue
            if report.passed:
                out[name] = "pass"
            else:
                fail(name, "; ".join(report.mismatches))
        else:
            raise ValueError(f"unknown check {name!r}")
    return out


def _run_chunk(args) -> list[tuple[tuple[int, ...], bool, dict]]:
    words, n, checks = args
    rows = []
    for word in words:
        w = Permutation(word)
        rows.append((word, diagram.is_dominant(w), check_permutation(w, n, checks)))
    return rows


def run_verification(n: int, checks=CHECKS, jobs: int = 1) -> VerificationJob:
    """Check every w in S_n.  Results are aggregated in lexicographic order
    regardless of ``jobs``."""
    checks = tuple(checks)
    for c in checks:
        if c not in CHECKS:
            raise ValueError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
    words = [w.word for w in enumerate_permutations(n)]
    if jobs > 1:
        size = max(1, len(words) // (jobs * 4))
        chunks = [(words[i:i + size], n, checks) for i in range(0, len(words), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = [row for part in pool.map(_run_chunk, chunks) for row in part]
    else:
        rows = _run_chunk((words, n, checks))
    rows.sort(key=lambda r: r[0])
    job = VerificationJob(n, checks, jobs)
    job.results = {c: CheckResult(c) for c in checks}
    for _, dominant, outcome in rows:
        job.dominant_count += dominant
        for c, res in outcome.items():
            r = job.results[c]
            if res == "pass":
                r.passed += 1
            elif res == "skip":
                r.skipped += 1
            else:
                r.counterexamples.append(res)
    return job
