# src/application/services/surface_builder.py

import logging
import math
from typing import Union

from src.core.entities.marked_group import MarkedGroup
from src.core.entities.word import Word
from src.core.value_objects.moebius_map import MoebiusMap, commutator_trace
from src.shared.constants import RootChoice
from src.shared.utils.exceptions import CalculationError, NonRealRootError, ValidationError

logger = logging.getLogger(__name__)

COMMUTATOR = Word.of(1, 2, -1, -2)


def fricke_trace(x: float, y: float, root: Union[RootChoice, str] = RootChoice.PLUS) -> float:
    """Root z of z² - xyz + x² + y² = 0 (the trace of AB)."""
    root = RootChoice(root) if not isinstance(root, RootChoice) else root
    discriminant = x * x * y * y - 4.0 * (x * x + y * y)
    if discriminant < 0:
        raise NonRealRootError(x, y, discriminant)
    offset = math.sqrt(discriminant)
    if root == RootChoice.PLUS:
        return (x * y + offset) / 2.0
    return (x * y - offset) / 2.0


def punctured_torus(x: float, y: float, root: Union[RootChoice, str] = RootChoice.PLUS) -> MarkedGroup:
    """
    Once-punctured torus with tr A = x, tr B = y, tr AB = z.

    A = [[x, 1], [-1, 0]] and B = [[p, 0], [r, 1/p]] with p + 1/p = y and
    xp + r = z. The commutator is the puncture; the result is normalized.
    """
    if x <= 2 or y <= 2:
        raise ValidationError(f"traces must exceed 2, got ({x}, {y})", field="traces")
    root = RootChoice(root) if not isinstance(root, RootChoice) else root
    z = fricke_trace(x, y, root)

    p = (y + math.sqrt(y * y - 4.0)) / 2.0
    first = MoebiusMap(x, 1.0, -1.0, 0.0)
    second = MoebiusMap(p, 0.0, z - x * p, 1.0 / p)

    commutator = commutator_trace(first, second)
    if abs(commutator + 2.0) > 1e-9 * max(1.0, z * z):
        raise CalculationError(
            f"Commutator trace {commutator:.12g} is not -2 for (x, y, z) = ({x}, {y}, {z})"
        )

    group = MarkedGroup(
        rank=2,
        generators=(first, second),
        peripherals=(COMMUTATOR,),
        label=f"torus({x:g},{y:g},{root.value})",
    )
    group.check_jorgensen()
    logger.info(f"Built punctured torus x={x}, y={y}, z={z:.12g}")
    return group.normalize()


def thrice_punctured_sphere() -> MarkedGroup:
    """
    Level-two congruence group generated by z ↦ z + 2 and z ↦ z/(1 - 2z).

    Both generators and their product are parabolic; the cusps are the
    words 1, 2 and (12)⁻¹.
    """
    first = MoebiusMap(1.0, 2.0, 0.0, 1.0)
    second = MoebiusMap(1.0, 0.0, -2.0, 1.0)
    group = MarkedGroup(
        rank=2,
        generators=(first, second),
        peripherals=(Word.of(1), Word.of(2), Word.of(-2, -1)),
        label="tps",
    )
    group.check_jorgensen()
    return group.normalize()
