"""Chinese Remainder solvers built on the Dayan extended inverse.

* :func:`solve_coprime` - Garner-style iteration for pairwise co-prime moduli.
* :func:`solve_pair` - two congruences with arbitrary moduli; the gcd falls
  out of the same division chain that produces the answer.
* :func:`solve_general` - any number of congruences, merged pairwise in a
  balanced tree of ``ceil(log2 n)`` rounds.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .dayan import ALL_PLUS, SignStrategy, ext_mod_inverse


class NonCoprimeModuliError(ValueError):
    """Raised by :func:`solve_coprime`; use solve_pair/solve_general instead."""

    def __init__(self, modulus: int, gcd: int):
        super().__init__(
            f"modulus {modulus} shares factor {gcd} with earlier moduli; "
            "use solve_pair or solve_general for non-coprime systems"
        )
        self.modulus = modulus
        self.gcd = gcd


class IncompatibleCongruencesError(ArithmeticError):
    """No integer satisfies the system.

    ``indices`` names two original congruences that already conflict,
    ``moduli`` their moduli and ``gcd`` the gcd that fails to divide the
    difference of their residues.
    """

    def __init__(self, indices: tuple[int, int], moduli: tuple[int, int], gcd: int):
        super().__init__(
            f"no solution: moduli {moduli[0]},{moduli[1]} (gcd {gcd}) incompatible"
        )
        self.indices = indices
        self.moduli = moduli
        self.gcd = gcd


@dataclass(frozen=True)
class Congruence:
    """``x = residue (mod modulus)``, residue canonicalized into [0, modulus)."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus <= 1:
            raise ValueError(f"modulus must exceed 1, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"

    def holds(self, x: int) -> bool:
        return x % self.modulus == self.residue


@dataclass(frozen=True)
class CrtSolution:
    residue: int
    modulus: int

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"

    def as_congruence(self) -> Congruence:
        return Congruence(self.residue, self.modulus)

    def satisfies(self, system: Sequence[Congruence]) -> bool:
        return all(c.holds(self.residue) for c in system)


def solve_coprime(
    system: Sequence[Congruence], strategy: SignStrategy = ALL_PLUS
) -> CrtSolution:
    """Iterate ``x_k = M * ((a_k - x) * M^-1 mod m_k) + x`` over the system.

    Co-primality is not checked up front: a shared factor shows up as a
    nontrivial gcd in the inverse computation and raises
    :class:`NonCoprimeModuliError`.
    """
    if not system:
        raise ValueError("empty congruence system")
    x, big_m = system[0].residue, system[0].modulus
    for cong in system[1:]:
        out = ext_mod_inverse(cong.residue - x, big_m, cong.modulus, strategy)
        if out.gcd != 1:
            raise NonCoprimeModuliError(cong.modulus, out.gcd)
        x += big_m * out.value
        big_m *= cong.modulus
    return CrtSolution(x, big_m)


def _merge(c1: Congruence, c2: Congruence, strategy: SignStrategy) -> Optional[CrtSolution]:
    out = ext_mod_inverse(c2.residue - c1.residue, c1.modulus, c2.modulus, strategy)
    if not out.defined:
        return None
    # value < m2/d and a1 < m1, so the sum is already below m1*m2/d
    return CrtSolution(c1.modulus * out.value + c1.residue, c1.modulus * out.reduced_modulus)


def solve_pair(
    c1: Congruence, c2: Congruence, strategy: SignStrategy = ALL_PLUS
) -> CrtSolution:
    """Solve two congruences whose moduli need not be co-prime.

    Returns the least non-negative solution modulo ``lcm(m1, m2)``.
    """
    sol = _merge(c1, c2, strategy)
    if sol is None:
        raise IncompatibleCongruencesError(
            (0, 1), (c1.modulus, c2.modulus), math.gcd(c1.modulus, c2.modulus)
        )
    return sol


def pairing_schedule(n: int) -> list[list[tuple[int, int]]]:
    """Rounds of the balanced reduction tree over ``n`` leaves.

    Round ``k`` lists the index pairs merged in that round, indices referring
    to the node list at the start of the round.  An odd last node passes
    through untouched.  There are ``ceil(log2 n)`` rounds.
    """
    if n < 1:
        raise ValueError("need at least one leaf")
    rounds = []
    while n > 1:
        rounds.append([(j, j + 1) for j in range(0, n - 1, 2)])
        n = (n + 1) // 2
    return rounds


def _find_conflict(system: Sequence[Congruence], left: Sequence[int], right: Sequence[int]):
    for i in left:
        for j in right:
            a, b = system[i], system[j]
            d = math.gcd(a.modulus, b.modulus)
            if (a.residue - b.residue) % d:
                return (i, j), (a.modulus, b.modulus), d
    # unreachable for consistent halves: pairwise compatibility is sufficient
    raise AssertionError("merge failed without a pairwise conflict")


def solve_general(
    system: Sequence[Congruence],
    strategy: SignStrategy = ALL_PLUS,
    *,
    parallel: bool = False,
    max_workers: Optional[int] = None,
) -> CrtSolution:
    """Solve an arbitrary system by pairwise merges in a balanced tree.

    Merges inside a round are independent; ``parallel=True`` runs them on a
    thread pool.  The result is the same either way.  On failure the error
    names the first conflicting pair of original congruences in tree order.
    """
    if not system:
        raise ValueError("empty congruence system")
    nodes = [(c, (i,)) for i, c in enumerate(system)]
    pool = ThreadPoolExecutor(max_workers=max_workers) if parallel else None
    try:
        for pairs in pairing_schedule(len(nodes)):
            jobs = [(nodes[i], nodes[j]) for i, j in pairs]
            if pool is not None:
                merged = list(pool.map(lambda job: _merge(job[0][0], job[1][0], strategy), jobs))
            else:
                merged = [_merge(left[0], right[0], strategy) for left, right in jobs]
            next_nodes = []
            for (left, right), sol in zip(jobs, merged):
                if sol is None:
                    raise IncompatibleCongruencesError(*_find_conflict(system, left[1], right[1]))
                next_nodes.append((sol.as_congruence(), left[1] + right[1]))
            if len(nodes) % 2:
                next_nodes.append(nodes[-1])
            nodes = next_nodes
    finally:
        if pool is not None:
            pool.shutdown()
    root = nodes[0][0]
    return CrtSolution(root.residue, root.modulus)
