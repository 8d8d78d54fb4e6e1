"""Work caps for the enumeration layers."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


class CapExceeded(Exception):
    """An enumeration would overrun the configured work cap."""


@dataclass(frozen=True)
class Caps:
    """Feasibility limits for lattice and power-set enumeration.

    lattice: largest ring order whose ideal lattice may be enumerated.
    submodule: largest component size for R_e-submodule enumeration.
    powerset: largest component size for subset quantifiers (colon sets and
        the x/Y containment test); above it the singleton fallback is used.
    systems: largest size of h(R)-{0} for weakly-system enumeration.
    """

    lattice: int = 1024
    submodule: int = 64
    powerset: int = 12
    systems: int = 16

    def override(self, **kw) -> Caps:
        return replace(self, **kw)


DEFAULT_CAPS = Caps()

ENV_VAR = "GRADEALG_CAPS"


def caps_from_env(base: Caps | None = None) -> Caps:
    """Read cap overrides from the GRADEALG_CAPS environment variable.

    Format: comma-separated key=value pairs, e.g. "lattice=2048,systems=12".
    """
    caps = base if base is not None else DEFAULT_CAPS
    raw = os.environ.get(ENV_VAR, "").strip()
    if not raw:
        return caps
    kw = {}
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in ("lattice", "submodule", "powerset", "systems"):
            raise ValueError(f"bad entry {part!r} in {ENV_VAR}")
        try:
            kw[key] = int(value.strip())
        except ValueError:
            raise ValueError(f"bad value for {key!r} in {ENV_VAR}") from None
    return caps.override(**kw)
