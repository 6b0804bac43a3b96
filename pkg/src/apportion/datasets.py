"""Bundled golden datasets: 2011 Eurostat population snapshot.

The status-quo seat numbers are the historically negotiated allocation,
used as a comparison baseline only; no formula produces them.
"""

from __future__ import annotations

from .core import MemberState
from .data import PopulationDataset

# (name, population, status-quo seats or None)
_EU27_ROWS = (
    ("Germany", 81802257, 99),
    ("France", 64714074, 74),
    ("UK", 62008048, 73),
    ("Italy", 60340328, 73),
    ("Spain", 45989016, 54),
    ("Poland", 38167329, 51),
    ("Romania", 21462186, 33),
    ("Netherlands", 16574989, 26),
    ("Greece", 11305118, 22),
    ("Belgium", 10839905, 22),
    ("Portugal", 10637713, 22),
    ("Czech Rep.", 10506813, 22),
    ("Hungary", 10014324, 22),
    ("Sweden", 9340682, 20),
    ("Austria", 8375290, 19),
    ("Bulgaria", 7563710, 18),
    ("Denmark", 5534738, 13),
    ("Slovakia", 5424925, 13),
    ("Finland", 5351427, 13),
    ("Ireland", 4467854, 12),
    ("Lithuania", 3329039, 12),
    ("Latvia", 2248374, 9),
    ("Slovenia", 2046976, 8),
    ("Estonia", 1340127, 6),
    ("Cyprus", 803147, 6),
    ("Luxembourg", 502066, 6),
    ("Malta", 412970, 6),
)

CROATIA = MemberState("Croatia", 4425747)
ICELAND = MemberState("Iceland", 317630)

_SOURCE = "Eurostat population snapshot"
_DATE = "2011"


def _dataset(rows, label):
    states = tuple(MemberState(name, pop) for name, pop, _ in rows)
    now = {name: seats for name, _, seats in rows if seats is not None}
    return PopulationDataset(states, now, label, _DATE)


def eu27() -> PopulationDataset:
    return _dataset(_EU27_ROWS, f"EU-27 ({_SOURCE})")


def eu28() -> PopulationDataset:
    rows = _EU27_ROWS + ((CROATIA.name, CROATIA.population, None),)
    return _dataset(rows, f"EU-28 with Croatia ({_SOURCE})")


def eu29() -> PopulationDataset:
    rows = _EU27_ROWS + (
        (CROATIA.name, CROATIA.population, None),
        (ICELAND.name, ICELAND.population, None),
    )
    return _dataset(rows, f"EU-29 with Croatia and Iceland ({_SOURCE})")


PRESETS = {"eu27": eu27, "eu28": eu28, "eu29": eu29}
