# tests/fixtures/sample_groups.py

from pathlib import Path

from src.application.services.surface_builder import punctured_torus, thrice_punctured_sphere
from src.core.entities.marked_group import MarkedGroup, MarkedIsomorphism

GROUPS_DIR = Path(__file__).resolve().parents[2] / "data" / "groups"

TORUS_SOURCE = "builtin:torus:3,3,plus"
TORUS_TARGET = "builtin:torus:4,3,plus"
TPS = "builtin:tps"


def torus(x: float = 3.0, y: float = 3.0, root: str = "plus") -> MarkedGroup:
    return punctured_torus(x, y, root)


def tps() -> MarkedGroup:
    return thrice_punctured_sphere()


def torus_pair() -> MarkedIsomorphism:
    """Marking torus(3,3,plus) → torus(4,3,plus) used across estimator tests."""
    return MarkedIsomorphism(torus(3.0, 3.0), torus(4.0, 3.0))


def identity_pair(group: MarkedGroup = None) -> MarkedIsomorphism:
    group = group if group is not None else torus()
    return MarkedIsomorphism(group, group)


def group_payload() -> dict:
    """Unnormalized torus(3,3,plus) payload in the group file format."""
    return {
        "label": "torus-payload",
        "rank": 2,
        "generators": [
            [[3.0, 1.0], [-1.0, 0.0]],
            [[2.618033988749895, 0.0], [-1.854101966249685, 0.3819660112501051]],
        ],
        "peripherals": [[1, 2, -1, -2]],
    }
