"""Default parameter grids, shared by the CLI and the acceptance suite.

``verify --all`` and the acceptance tests iterate exactly these tuples, so
there is a single source of truth for what "the full grid" means.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

ODD_SMALL = (1, 3, 5, 7)
ODD_WIDE = (1, 3, 5, 7, 9)

DEFAULTS: dict[str, dict[str, tuple]] = {
    "thm1": {"w1": ODD_SMALL, "w2": ODD_SMALL, "n": tuple(range(9)), "m": (1, 2, 3)},
    "thm4": {"w1": ODD_SMALL, "w2": ODD_SMALL, "n": tuple(range(9)), "m": (1, 2, 3)},
    "thm2": {"w1": ODD_WIDE, "w2": ODD_WIDE, "n": tuple(range(11))},
    "cor3": {"w1": ODD_WIDE, "n": tuple(range(11))},
    "cor5": {"w1": ODD_WIDE, "w2": ODD_WIDE, "n": tuple(range(11))},
    "multformula": {"w1": ODD_WIDE, "n": tuple(range(11))},
    "eq13": {"n": tuple(range(1, 10)), "m": tuple(range(11))},
    "eq17": {"n": (1, 3, 5, 7), "order": (8,)},
    "kernel-sym": {"w1": ODD_SMALL, "w2": ODD_SMALL, "m": (1, 2, 3), "order": (6,)},
}

# Identities whose hypotheses carry a parity constraint (and therefore
# accept the allow_even override).
PARITY_CONSTRAINED = frozenset(
    {"thm1", "thm2", "cor3", "thm4", "cor5", "multformula", "eq17", "kernel-sym"}
)


def identity_grid(identity: str, overrides: dict | None = None) -> list[dict]:
    """Sorted parameter dicts for one identity, with per-axis overrides."""
    if identity not in DEFAULTS:
        raise ValueError(f"unknown identity {identity!r}")
    axes = dict(DEFAULTS[identity])
    for key, values in (overrides or {}).items():
        if values is None:
            continue
        if key not in axes:
            raise ValueError(f"identity {identity!r} has no parameter {key!r}")
        axes[key] = tuple(values)
    names = list(axes)
    return [
        dict(zip(names, combo))
        for combo in sorted(product(*(axes[name] for name in names)))
    ]


def padic_eq10_grid() -> list[dict]:
    """The congruence grid: every (p, N, lam, n, r) checked by default."""
    cases = []
    for p, max_level in ((3, 6), (5, 4), (7, 4)):
        lams = [Fraction(0), Fraction(1), Fraction(2)]
        if p != 3:
            lams.append(Fraction(1, 3))
        for level in range(1, max_level + 1):
            for lam in lams:
                for r in (1, 2):
                    for n in range(7):
                        cases.append(
                            {"p": p, "N": level, "lam": lam, "n": n, "r": r}
                        )
    return cases
