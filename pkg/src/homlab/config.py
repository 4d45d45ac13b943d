"""Guard configuration for exhaustive computations.

Caps come from three layers, later ones winning: built-in defaults, ``HOMLAB_*``
environment variables (a ``.env`` file is honoured through python-dotenv) and
explicit overrides such as CLI flags.
"""

import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Dict, Optional

from dotenv import load_dotenv

from homlab.errors import GuardExceededError

logger = logging.getLogger(__name__)

POWERSET_HARD_LIMIT = 16

ENV_VARIABLES: Dict[str, str] = {
    "max_domain": "HOMLAB_CAP_DOMAIN",
    "max_powerset_domain": "HOMLAB_CAP_POWERSET",
    "max_arity": "HOMLAB_CAP_ARITY",
    "max_states": "HOMLAB_CAP_STATES",
    "max_solutions": "HOMLAB_CAP_SOLUTIONS",
    "max_pp_states": "HOMLAB_CAP_PP_STATES",
}


@dataclass(frozen=True)
class Guards:
    """Caps for exhaustive searches and materialisations.

    Attributes:
        max_domain: Largest structure for automorphism, isomorphism and core search
        max_powerset_domain: Largest domain whose powerset structure may be built
        max_arity: Largest arity of an indicator power block
        max_states: Largest search space / number of materialised tuples
        max_solutions: Solutions enumerated by all-solutions searches before giving up
        max_pp_states: Largest B^w built by the pp-definability witness construction
    """

    max_domain: int = 12
    max_powerset_domain: int = 10
    max_arity: int = 6
    max_states: int = 2_000_000
    max_solutions: int = 10_000
    max_pp_states: int = 1_000_000

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) < 1:
                raise ValueError(f"Guard {f.name} must be positive, got {getattr(self, f.name)}")
        if self.max_powerset_domain > POWERSET_HARD_LIMIT:
            raise ValueError(
                f"max_powerset_domain cannot exceed {POWERSET_HARD_LIMIT}, got {self.max_powerset_domain}"
            )
        if self.max_powerset_domain > 10:
            logger.warning(
                "Powerset guard raised to %d: P(B) may have up to %d elements",
                self.max_powerset_domain, 2 ** self.max_powerset_domain - 1,
            )

    @classmethod
    def from_env(cls, dotenv: bool = True) -> "Guards":
        """Build guards from ``HOMLAB_*`` environment variables.

        Args:
            dotenv: Whether to load a ``.env`` file first

        Returns:
            Guards with environment values applied over the defaults
        """
        if dotenv:
            load_dotenv()
        values = {}
        for name, variable in ENV_VARIABLES.items():
            raw = os.environ.get(variable)
            if raw is None or raw.strip() == "":
                continue
            try:
                values[name] = int(raw)
            except ValueError:
                raise ValueError(f"{variable} must be an integer, got {raw!r}")
        return cls(**values)

    def merged(self, **overrides: Optional[int]) -> "Guards":
        """Return a copy with the non-None overrides applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def check(self, guard: str, size: int, what: str = "") -> None:
        """Raise GuardExceededError if size exceeds the named cap."""
        limit = getattr(self, guard)
        if size > limit:
            raise GuardExceededError(guard, size, limit, what)


DEFAULT_GUARDS = Guards()
