"""Generalized Dayan engine for extended modular inverses.

Given ``p > q > 0`` and ``0 <= a < p`` the engine runs a signed division
chain on the remainders and, in lockstep, on a second sequence seeded with
``a``::

    r[i-1] = c[i+1]*r[i] + s[i+1]*r[i+1]          0 <= r[i+1] < r[i]
    g[i]   = b[i]*r[i]   - s[i+1]*g[i+1]          0 <= g[i+1] < r[i]
    f[i]   = c[i]*f[i-1] + s[i-1]*f[i-2]          f[-1] = 0, f[0] = 1

with ``r[-1] = p``, ``r[0] = q``, ``g[0] = a``.  Each sign ``s`` is picked
freely by a :class:`SignStrategy`.  Once ``r[n] == 1`` or ``g[m+1] == 0`` the
solution of ``q*x = a (mod p)`` is ``sum(f[i]*b[i])`` over the rows seen so
far, or equivalently ``sum(p*g[i] / (r[i-1]*r[i]))``.

If the chain hits ``r == 0`` instead, the last nonzero remainder is
``gcd(p, q)``; the sums then solve the reduced congruence modulo ``p/gcd``
provided the ``g`` sequence reached zero first, and there is no solution
otherwise.

Here ``g`` and ``b`` are the gamma/beta columns; the public field names spell
them out.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .modmath import NotCoprimeError, floor_mod, inv


class NoSolutionError(ArithmeticError):
    """The congruence ``q*x = a (mod p)`` has no solution (gcd does not divide a)."""

    def __init__(self, message: str, gcd: int):
        super().__init__(message)
        self.gcd = gcd


class StrategyExhaustedError(ValueError):
    pass


class StrategyKind(enum.Enum):
    ALL_PLUS = "plus"
    ALL_MINUS = "minus"
    LEAST_ABSOLUTE = "least-abs"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class SignStrategy:
    """Policy picking ``s[i+1]`` in {-1, +1} for each division step.

    ``EXPLICIT`` strategies carry ``signs[j]`` for ``s[j+1]``.
    """

    kind: StrategyKind
    signs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind is StrategyKind.EXPLICIT:
            if any(s not in (1, -1) for s in self.signs):
                raise ValueError("explicit signs must be +1 or -1")
        elif self.signs:
            raise ValueError(f"{self.kind.value} strategy takes no signs")

    @classmethod
    def explicit(cls, signs) -> "SignStrategy":
        return cls(StrategyKind.EXPLICIT, tuple(int(s) for s in signs))

    @classmethod
    def parse(cls, text: str) -> "SignStrategy":
        """Parse ``plus``, ``minus``, ``least-abs`` or ``explicit:-1,+1,...``."""
        text = text.strip().lower()
        if text.startswith("explicit"):
            _, _, body = text.partition(":")
            signs = [s for s in body.replace(" ", "").split(",") if s]
            if not signs:
                raise ValueError("explicit strategy needs at least one sign")
            return cls.explicit(int(s) for s in signs)
        aliases = {
            "plus": StrategyKind.ALL_PLUS,
            "all-plus": StrategyKind.ALL_PLUS,
            "+": StrategyKind.ALL_PLUS,
            "minus": StrategyKind.ALL_MINUS,
            "all-minus": StrategyKind.ALL_MINUS,
            "-": StrategyKind.ALL_MINUS,
            "least-abs": StrategyKind.LEAST_ABSOLUTE,
            "leastabs": StrategyKind.LEAST_ABSOLUTE,
        }
        try:
            return cls(aliases[text])
        except KeyError:
            raise ValueError(f"unknown sign strategy {text!r}") from None

    def __str__(self) -> str:
        if self.kind is StrategyKind.EXPLICIT:
            return "explicit:" + ",".join(f"{s:+d}" for s in self.signs)
        return self.kind.value

    def sign(self, index: int, prev: int, cur: int) -> int:
        """Sign ``s[index]`` for dividing ``prev`` (= r[index-2]) by ``cur``."""
        kind = self.kind
        if kind is StrategyKind.ALL_PLUS:
            return 1
        if kind is StrategyKind.ALL_MINUS:
            return -1
        if kind is StrategyKind.LEAST_ABSOLUTE:
            plus = prev % cur
            # ties go to +1
            return 1 if plus <= cur - plus or plus == 0 else -1
        if index - 1 >= len(self.signs):
            raise StrategyExhaustedError(
                f"explicit strategy has {len(self.signs)} signs, s_{index} requested"
            )
        return self.signs[index - 1]


ALL_PLUS = SignStrategy(StrategyKind.ALL_PLUS)
ALL_MINUS = SignStrategy(StrategyKind.ALL_MINUS)
LEAST_ABSOLUTE = SignStrategy(StrategyKind.LEAST_ABSOLUTE)
BUILTIN_STRATEGIES = (ALL_PLUS, ALL_MINUS, LEAST_ABSOLUTE)


class Termination(enum.Enum):
    REMAINDER_ONE = "remainder-one"
    GAMMA_ZERO = "gamma-zero"
    REMAINDER_ZERO = "remainder-zero"


@dataclass(frozen=True)
class DayanStep:
    """One column of a trace table.

    Columns that do not exist at a given index are ``None``: ``gamma`` and
    ``beta`` at ``i = -1``, ``c`` and ``s`` at ``i <= 0``.  Rows produced only
    to finish the gcd after the sum is complete carry ``r``, ``c`` and ``s``.
    """

    i: int
    r: int
    gamma: Optional[int] = None
    c: Optional[int] = None
    beta: Optional[int] = None
    s: Optional[int] = None
    f: Optional[int] = None


@dataclass(frozen=True)
class DayanTrace:
    p: int
    q: int
    a: int
    strategy: SignStrategy
    steps: tuple[DayanStep, ...]
    termination: Termination
    # gcd(p, q) once the remainder chain reached 1 or 0; None if it was cut short
    gcd: Optional[int]
    sum_index: int

    @property
    def solvable(self) -> bool:
        return self.termination is not Termination.REMAINDER_ZERO

    @property
    def sum_divisions(self) -> int:
        """Division steps needed before the sum was complete."""
        return self.sum_index + 1

    @property
    def divisions(self) -> int:
        """Division steps performed in total, gcd continuation included.

        Reaching ``r == 1`` counts the trivial last quotient, so an all-plus
        trace counts exactly like the classical Euclidean loop.
        """
        last = self.steps[-1]
        return last.i + 1 if last.r == 1 else last.i

    def step(self, i: int) -> DayanStep:
        return self.steps[i + 1]

    def column(self, name: str) -> list:
        return [getattr(s, name) for s in self.steps]

    @property
    def value(self) -> int:
        return ext_inverse_sum_f(self)


def _columns(p: int, q: int, a: int, strategy: SignStrategy, find_gcd: bool):
    """Core recurrence; returns the raw column lists (indexed by i + 1)."""
    kind = strategy.kind
    fixed = 1 if kind is StrategyKind.ALL_PLUS else -1 if kind is StrategyKind.ALL_MINUS else 0
    r = [p, q]
    gam = [None, a]
    c = [None, None]
    beta = [None, None]
    s = [None, None]
    f = [0, 1]
    gcd = None

    if a == 0:
        beta[1] = 0
        termination, m = Termination.GAMMA_ZERO, -1
    else:
        i = 0
        s_i = 1  # s_0; multiplies f[-1] = 0
        while True:
            ri = r[i + 1]
            gi = gam[i + 1]
            if ri == 1:
                beta[i + 1] = gi
                termination, m, gcd = Termination.REMAINDER_ONE, i, 1
                break
            prev = r[i]
            si = fixed or strategy.sign(i + 1, prev, ri)
            quo, r_next = divmod(si * prev, ri)
            g_next = (-si * gi) % ri
            beta[i + 1] = -si * ((-si * gi) // ri)
            r.append(r_next)
            gam.append(g_next)
            c.append(si * quo)
            s.append(si)
            f.append(si * quo * f[i + 1] + s_i * f[i])
            s_i = si
            if g_next == 0:
                beta.append(0)
                termination, m = Termination.GAMMA_ZERO, i
                if r_next == 0:
                    gcd = ri
                break
            beta.append(None)
            if r_next == 0:
                termination, m, gcd = Termination.REMAINDER_ZERO, i, ri
                break
            i += 1

    if gcd is None and find_gcd:
        i = len(r) - 2
        while True:
            ri = r[i + 1]
            if ri == 1:
                gcd = 1
                break
            prev = r[i]
            si = fixed or strategy.sign(i + 1, prev, ri)
            r_next = (si * prev) % ri
            r.append(r_next)
            s.append(si)
            if r_next == 0:
                gcd = ri
                break
            i += 1
    return r, gam, c, beta, s, f, termination, m, gcd


def _check_trace_args(p: int, q: int, a: int) -> None:
    if not 0 < q < p:
        raise ValueError(f"need 0 < q < p, got p={p}, q={q}")
    if not 0 <= a < p:
        raise ValueError(f"need 0 <= a < p, got a={a}, p={p}")


def run_trace(
    p: int,
    q: int,
    a: int,
    strategy: SignStrategy = ALL_PLUS,
    *,
    find_gcd: bool = True,
) -> DayanTrace:
    """Run the division chain for ``(a * q^-1) mod p``.

    The sum part stops at ``r == 1`` or ``gamma == 0``.  With ``find_gcd`` the
    remainder chain then keeps going (only r and s recorded) until it
    reaches 1 or 0, so the gcd is known even when the answer came early.
    """
    _check_trace_args(p, q, a)
    r, gam, c, beta, s, f, termination, m, gcd = _columns(p, q, a, strategy, find_gcd)
    n_g, n_c, n_b, n_f = len(gam), len(c), len(beta), len(f)
    steps = tuple(
        DayanStep(
            i=k - 1,
            r=r[k],
            gamma=gam[k] if k < n_g else None,
            c=c[k] if k < n_c else None,
            beta=beta[k] if k < n_b else None,
            s=s[k],
            f=f[k] if k < n_f else None,
        )
        for k in range(len(r))
    )
    return DayanTrace(p, q, a, strategy, steps, termination, gcd, m)


def _require_solution(trace: DayanTrace) -> None:
    if not trace.solvable:
        raise NoSolutionError(
            f"gcd {trace.gcd} of {trace.p} and {trace.q} does not divide {trace.a}",
            trace.gcd,
        )


def ext_inverse_sum_f(trace: DayanTrace) -> int:
    """``sum(f[i] * beta[i])`` over the rows that contribute to the answer."""
    _require_solution(trace)
    return sum(st.f * st.beta for st in trace.steps[1 : trace.sum_index + 2])


def ext_inverse_sum_fraction(trace: DayanTrace) -> int:
    """``sum(p * gamma[i] / (r[i-1] * r[i]))``, evaluated exactly."""
    _require_solution(trace)
    steps = trace.steps
    total = Fraction(0)
    for k in range(1, trace.sum_index + 2):
        total += Fraction(trace.p * steps[k].gamma, steps[k - 1].r * steps[k].r)
    if total.denominator != 1:
        raise ArithmeticError(f"series did not sum to an integer: {total}")
    return total.numerator


class ExtInverseStatus(enum.Enum):
    DEFINED = "defined"
    NO_SOLUTION = "no-solution"


@dataclass(frozen=True)
class ExtInverseOutcome:
    status: ExtInverseStatus
    value: Optional[int]
    reduced_modulus: int
    gcd: int
    trace: Optional[DayanTrace] = field(default=None, compare=False, repr=False)

    @property
    def defined(self) -> bool:
        return self.status is ExtInverseStatus.DEFINED


def ext_mod_inverse(
    b: int,
    a: int,
    m: int,
    strategy: SignStrategy = ALL_PLUS,
    *,
    with_trace: bool = False,
) -> ExtInverseOutcome:
    """Canonical solution of ``a*x = b (mod m)``.

    With ``d = gcd(a, m)`` the answer lives modulo ``m/d``; when ``d`` does not
    divide ``b`` the outcome is ``NO_SOLUTION``.  ``d`` falls out of the same
    division chain, no separate gcd is computed.  ``with_trace`` keeps the
    full :class:`DayanTrace` on the outcome.
    """
    if m <= 1:
        raise ValueError(f"modulus must exceed 1, got {m}")
    if a == 0:
        raise ValueError("a must be nonzero")
    q = floor_mod(a, m)
    g0 = floor_mod(b, m)
    if q == 0:
        # m | a: every x works iff m | b
        if g0 == 0:
            return ExtInverseOutcome(ExtInverseStatus.DEFINED, 0, 1, m)
        return ExtInverseOutcome(ExtInverseStatus.NO_SOLUTION, None, 1, m)
    if with_trace:
        trace = run_trace(m, q, g0, strategy, find_gcd=True)
        solvable, d = trace.solvable, trace.gcd
        value = ext_inverse_sum_f(trace) if solvable else None
    else:
        trace = None
        _, _, _, beta, _, f, termination, k, d = _columns(m, q, g0, strategy, True)
        solvable = termination is not Termination.REMAINDER_ZERO
        value = sum(f[j] * beta[j] for j in range(1, k + 2)) if solvable else None
    if not solvable:
        return ExtInverseOutcome(ExtInverseStatus.NO_SOLUTION, None, m // d, d, trace)
    return ExtInverseOutcome(ExtInverseStatus.DEFINED, value, m // d, d, trace)


def extended_reciprocity(p: int, q: int, a: int, sign: int) -> tuple[Fraction, Fraction]:
    """Both closed forms of ``(a * q^-1) mod p`` from one signed division step.

    Writing ``p = c*q + s*r`` and ``a = beta*q - s*gamma`` with
    ``0 <= r, gamma < q``::

        a/q + (p/q) * ((gamma * inv(r, q)) mod q)
        a/q + (p/q) * ((-(s*a mod q) * inv(s*p, q)) mod q)

    Returned as exact fractions so callers can check they are integers.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not 0 < q < p or not 0 <= a < p:
        raise ValueError("need 0 < q < p and 0 <= a < p")
    g = math.gcd(p, q)
    if g != 1:
        raise NotCoprimeError(p, q, g)
    if q == 1:
        return Fraction(a), Fraction(a)
    r = (sign * p) % q
    gamma = (-sign * a) % q
    head = Fraction(a, q)
    first = head + Fraction(p, q) * ((gamma * inv(r, q)) % q)
    second = head + Fraction(p, q) * ((-((sign * a) % q) * inv(sign * p, q)) % q)
    return first, second


def _coprime_pair(p: int, q: int) -> None:
    if not 1 < q < p:
        raise ValueError(f"need 1 < q < p, got p={p}, q={q}")
    g = math.gcd(p, q)
    if g != 1:
        raise NotCoprimeError(q, p, g)


def remainder_chain(p: int, q: int, sign: int) -> tuple[list[int], list[int]]:
    """Remainders ``r[-1..n]`` and quotients ``c[1..n]`` of the fixed-sign chain.

    Index ``k`` of either list holds the value for ``i = k - 1``; the first
    two quotient slots are ``0`` placeholders.  Stops at ``r[n] == 1``.
    """
    r = [p, q]
    c = [0, 0]
    while r[-1] != 1:
        quo, rem = divmod(sign * r[-2], r[-1])
        if rem == 0:
            raise NotCoprimeError(q, p, r[-1])
        r.append(rem)
        c.append(sign * quo)
    return r, c


def series_first_type_raw(p: int, q: int) -> tuple[int, int]:
    """``(raw, n)`` where ``raw = p * sum((-1)^i / (r[i-1]*r[i]))``.

    ``raw`` is the inverse when ``n`` is even and the inverse minus ``p``
    when ``n`` is odd.
    """
    _coprime_pair(p, q)
    r, _ = remainder_chain(p, q, 1)
    n = len(r) - 2
    total = sum(Fraction((-1) ** i, r[i] * r[i + 1]) for i in range(n + 1))
    raw = p * total
    assert raw.denominator == 1
    return raw.numerator, n


def inverse_series_first_type(p: int, q: int) -> int:
    """``q^-1 mod p`` from the alternating series over plain remainders."""
    raw, n = series_first_type_raw(p, q)
    return raw + p if n % 2 else raw


def inverse_series_first_type_condensed(p: int, q: int) -> int:
    """Pairwise-condensed alternating series.

    Adjacent terms merge into ``-c[2i+1] / (r[2i-1]*r[2i+1])``; an even
    chain length leaves the last term ``p / r[n-1]`` unpaired and an odd one
    needs the ``+p`` correction.
    """
    _coprime_pair(p, q)
    r, c = remainder_chain(p, q, 1)
    n = len(r) - 2
    # r[i] lives at r[i + 1], c[i] at c[i + 1]
    total = -p * sum(
        Fraction(c[2 * i + 2], r[2 * i] * r[2 * i + 2]) for i in range((n - 1) // 2 + 1)
    )
    total += Fraction(p, r[n]) if n % 2 == 0 else p
    assert total.denominator == 1
    return total.numerator


def inverse_series_second_type(p: int, q: int, condensed: bool = False) -> int:
    """``q^-1 mod p`` from the all-positive series over negated remainders.

    Uses ``r[i] = (-r[i-2]) mod r[i-1]``.  The plain form is
    ``p * sum(1 / (r[i-1]*r[i]))``; the condensed form pairs terms into
    ``c[2i+1] / (r[2i-1]*r[2i+1])`` plus ``p / r[n-1]`` for even ``n``.
    """
    _coprime_pair(p, q)
    r, c = remainder_chain(p, q, -1)
    n = len(r) - 2
    if not condensed:
        total = p * sum(Fraction(1, r[i] * r[i + 1]) for i in range(n + 1))
    else:
        total = p * sum(
            Fraction(c[2 * i + 2], r[2 * i] * r[2 * i + 2]) for i in range((n - 1) // 2 + 1)
        )
        if n % 2 == 0:
            total += Fraction(p, r[n])
    assert total.denominator == 1
    return total.numerator


def convergent_inverse_check(p: int, q: int) -> list[tuple[int, int]]:
    """Pairs ``(r[j], f[j])`` of the all-minus chain for ``a = 1``.

    Each satisfies ``r[j] * q^-1 = f[j] (mod p)``; the last pair is
    ``(1, q^-1 mod p)``.
    """
    _coprime_pair(p, q)
    trace = run_trace(p, q, 1, ALL_MINUS)
    return [(st.r, st.f) for st in trace.steps[1 : trace.sum_index + 2]]
