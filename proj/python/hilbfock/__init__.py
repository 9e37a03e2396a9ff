"""Exact Betti numbers of punctual Hilbert schemes of a fourfold and the
Fock-space representation of its Heisenberg algebra."""

import os
from pathlib import Path

from ._core import (
    ConsistencyError,
    FockVector,
    Manifold,
    ValidationError,
    apply_q,
    character_from_fock,
    character_from_series,
    enumerate_basis,
    goettsche_series,
    gram_determinants,
    monomial,
    super_commutator,
    verify_character,
    verify_commutators,
)

__all__ = [
    "ConsistencyError",
    "FockVector",
    "Manifold",
    "ValidationError",
    "apply_q",
    "character_from_fock",
    "character_from_series",
    "enumerate_basis",
    "goettsche_series",
    "gram_determinants",
    "manifold_path",
    "monomial",
    "super_commutator",
    "verify_character",
    "verify_commutators",
]

__version__ = "0.1.0"


def manifold_path(name):
    """Path of a bundled manifold document (cp2_like, k3_like, torus_like)."""
    env = os.environ.get("HILBFOCK_MANIFOLD_DIR")
    base = Path(env) if env else Path(__file__).parent / "manifolds"
    path = base / f"{name}.json"
    if not path.exists():
        raise FileNotFoundError(f"no bundled manifold named {name!r} under {base}")
    return str(path)
