"""Self-verification suites run by ``plethyon verify``.

Each suite compares two independent routes over a bounded family of
inputs and reports the first few mismatches.  The budget bounds ``|la|``
(``max_size``) and wall-clock time per suite.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Tuple

from . import characters, plethysm, quotient_a, quotient_b
from .characters import GroupLabel
from .partitions import enumerate_partitions, format_partition as fp, length, size


@dataclass
class Budget:
    max_size: int = 3
    timeout: float = 120.0


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    timed_out: bool = False
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> Dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "failures": self.failures[:5], "timed_out": self.timed_out}


def _shapes(max_size: int) -> Iterator[Tuple[int, ...]]:
    for k in range(max_size + 1):
        yield from enumerate_partitions(k)


def _worked_examples(budget: Budget) -> Iterator[Tuple[str, bool]]:
    q = quotient_a.ell_quotient_a((6, 6, 4, 4, 4, 3, 2, 1), 3, 8)
    yield "ell-quotient example", (q.sign, q.quotient) == (-1, ((1, 1), (2, 2, 1), (2, 1)))
    d = quotient_b.sign_levi_weight((9, 7, 6, 5, 5, 2), 2, 6)
    yield "even type-B example", (d.sign, d.raw_weights, d.alphas) == (1, ((-5, -2, -1, 3, 3, 3),), (2,))
    d = quotient_b.sign_levi_weight((9, 7, 6, 5, 5, 1), 3, 6)
    yield "odd type-B example", (d.sign, d.raw_weights, d.raw_so_weight, d.gl_blocks, d.so_block) == (
        1, ((-2, -2, 3, 3),), (0, 1), (4,), 5)
    seq = [quotient_b.sign_levi_weight((9, 6, 5, 5, 1), 2, n).raw_weights[0] for n in (5, 6, 7)]
    yield "non-stable sequence", seq == [(-1, 2, 4, 4, 5), (-5, -4, -4, -2, -2, 1), (-1, 2, 2, 2, 4, 4, 5)]


def _gl_oracle(budget: Budget):
    for ell in (2, 3):
        for la in _shapes(budget.max_size):
            n = max(ell * size(la), 2) + 1
            got = quotient_a.psi_gl(la, ell).restricted(n)
            want = characters.psi_oracle(GroupLabel("gl", n), la, ell)
            yield f"gl l={ell} la={fp(la)}", dict(got) == dict(want)


def _classical_oracle(budget: Budget):
    for family, group in (("so", "so_odd"), ("so", "so_even"), ("sp", "sp")):
        for ell in (2, 3):
            for la in _shapes(budget.max_size):
                n = max(ell * size(la), 2) + 1
                got = plethysm.psi(la, ell, family).restricted(n)
                want = characters.psi_oracle(GroupLabel(group, n), la, ell)
                yield f"{group} l={ell} la={fp(la)}", dict(got) == dict(want)


def _levi_l2(budget: Budget):
    for la in _shapes(budget.max_size + 1):
        n = 2 * size(la) + 1
        for mu in plethysm.candidate_partitions(la, 2):
            if length(mu) <= n:
                yield (f"la={fp(la)} mu={fp(mu)}",
                       plethysm.a_so(la, mu, 2) == plethysm.a_so_via_levi(la, mu, 2, n))


def _duality(budget: Budget):
    for ell in range(1, 5):
        for la in _shapes(budget.max_size + 1):
            ok = all(plethysm.a_sp(la, mu, ell) == plethysm.a_sp_dual(la, mu, ell)
                     for mu in plethysm.candidate_partitions(la, ell))
            yield f"l={ell} la={fp(la)}", ok


def _basis_inversion(budget: Budget):
    for family in ("so", "sp"):
        for la in _shapes(2 * budget.max_size):
            back = plethysm.convert(plethysm.convert({la: 1}, family, "gl"), "gl", family)
            yield f"{family} la={fp(la)}", dict(back) == {la: 1}


def _split_square(budget: Budget):
    for family in ("gl", "so", "sp"):
        for la in _shapes(budget.max_size):
            a = plethysm.split_square(la, family)
            b = plethysm.split_square_closed_form(la, family)
            yield f"{family} la={fp(la)}", dict(a.plus) == dict(b.plus) and dict(a.minus) == dict(b.minus)


SUITES: Dict[str, Callable] = {
    "worked-examples": _worked_examples,
    "gl-oracle": _gl_oracle,
    "classical-oracle": _classical_oracle,
    "levi-l2": _levi_l2,
    "duality": _duality,
    "basis-inversion": _basis_inversion,
    "split-square": _split_square,
}


def run_suite(name: str, budget: Budget) -> SuiteReport:
    report = SuiteReport(name)
    start = time.monotonic()
    for label, ok in SUITES[name](budget):
        report.checked += 1
        if not ok:
            report.failures.append(label)
        if time.monotonic() - start > budget.timeout:
            report.timed_out = True
            break
    report.seconds = time.monotonic() - start
    return report


def run_all(budget: Budget, jobs: int = 1, names=None) -> List[SuiteReport]:
    names = list(names or SUITES)
    if jobs <= 1:
        return [run_suite(name, budget) for name in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_suite, name, budget) for name in names]
        return [f.result() for f in futures]
