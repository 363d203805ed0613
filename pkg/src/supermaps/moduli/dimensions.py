"""Dimension bookkeeping for moduli of stable maps into split targets over P^m."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..sheafcalc import q_rank
from ..superscheme import SplitScheme, canonical_degree, sdim, tau_b
from .graphs import moduli_exists


@dataclass(frozen=True)
class ModuliProblem:
    """Stable maps of genus ``g`` with ``n`` markings in the class ``d`` times a line."""

    g: int
    n: int
    target: SplitScheme
    d: int

    def __post_init__(self):
        for name in ("g", "n", "d"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative, got {getattr(self, name)}")
        if not isinstance(self.target, SplitScheme):
            raise TypeError("target must be a SplitScheme over P^m")

    def bosonic(self) -> "ModuliProblem":
        return ModuliProblem(self.g, self.n, tau_b(self.target), self.d)

    def forget(self) -> "ModuliProblem":
        return ModuliProblem(self.g, self.n - 1, self.target, self.d)


def vsdim(problem: ModuliProblem) -> int:
    """``(1 - g)(sdim X - 3) - d * deg(omega_X) + n``."""
    X = problem.target
    return (1 - problem.g) * (sdim(X) - 3) - problem.d * canonical_degree(X) + problem.n


def fermionic_euler_characteristic(problem: ModuliProblem) -> int:
    """``chi(C, phi^* V^dual) = rank(V)(1 - g) - d * sum(a_i)`` by Riemann-Roch."""
    X = problem.target
    return X.rank * (1 - problem.g) - problem.d * sum(X.twists)


def witten_count(p: int, q: int, d: int) -> Tuple[int, int]:
    """Dimensions of the irreducible-map chart of ``M_{0,0}(P^{p|q}, d)``.

    The coefficients of a degree-``d`` parametrized map span
    ``C^{(p+1)(d+1) | q(d+1)}``; projectivizing and dividing by ``PGL(2)``
    removes ``1 + 3`` even directions.

    >>> witten_count(3, 4, 1)
    (4, 8)
    """
    if p < 1 or d < 1:
        raise ValueError(f"the chart needs p >= 1 and d >= 1, got p={p}, d={d}")
    if q < 0:
        raise ValueError(f"q must be non-negative, got {q}")
    return (p + 1) * (d + 1) - 1 - 3, q * (d + 1)


@dataclass
class TruncationReport:
    super_vsdim: int
    bosonic: int
    fermionic: int
    truncated_vsdim: int
    q_rank: Optional[int]
    consistent: bool
    notes: List[str] = field(default_factory=list)


def taub_consistency(problem: ModuliProblem) -> TruncationReport:
    """Compare the super count with the count for the bosonic truncation of the target.

    The super dimension splits as ``bosonic - fermionic`` where ``bosonic`` is
    ``vsdim`` for ``tau_b(X)`` and ``fermionic`` is ``chi(phi^* V^dual)``.
    """
    total = vsdim(problem)
    bos = vsdim(problem.bosonic())
    ferm = fermionic_euler_characteristic(problem)
    notes = []
    ok = total == bos - ferm
    rank = None
    if problem.g == 0:
        rank = q_rank(problem.target, problem.d)
        # Q has rank chi exactly when H^1 vanishes
        if rank == ferm:
            notes.append("fermionic count equals rank of Q")
        else:
            notes.append("target not fermionically convex in this degree; rank of Q differs from chi")
    if problem.g == 0 and problem.n == 0 and problem.target.is_projective_superspace() and problem.target.m >= 1 and problem.d >= 1:
        wb, wf = witten_count(problem.target.m, problem.target.rank, problem.d)
        ok = ok and (wb, wf) == (bos, ferm)
        notes.append("matches the irreducible-map chart count")
    return TruncationReport(total, bos, ferm, bos, rank, ok, notes)


@dataclass
class NaturalMaps:
    evaluation: List[str]
    kappa_defined: bool
    kappa_target: Optional[str]
    kappa_target_dim: Optional[int]
    forget_defined: bool
    forget_target: Optional[str]


def natural_maps(problem: ModuliProblem) -> NaturalMaps:
    """Which of the evaluation, stabilization and forgetful maps exist (metadata only)."""
    g, n, d = problem.g, problem.n, problem.d
    evs = [f"ev_{i}" for i in range(1, n + 1)]
    kappa = n + 2 * g >= 3
    forget = n >= 1 and moduli_exists(g, n, d) and moduli_exists(g, n - 1, d)
    return NaturalMaps(
        evaluation=evs,
        kappa_defined=kappa,
        kappa_target=f"M_{g},{n}" if kappa else None,
        kappa_target_dim=3 * g - 3 + n if kappa else None,
        forget_defined=forget,
        forget_target=f"M_{g},{n - 1}({problem.target}, {d})" if forget else None,
    )
