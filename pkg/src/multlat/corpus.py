"""Stock lattice instances used by the verification sweeps.

The six-element "kite" lattice with the trivial multiplication is the
standing small example (one coatom, so the trivial multiplication is legal,
and every element squares to bottom). Chains carry either the trivial or the
meet multiplication; ideal lattices come from the ring bridge.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .multiplicative import MultiplicativeLattice, meet_mult, trivial_mult
from .order import lattice_from_pairs
from .ringbridge import ideal_lattice_product, ideal_lattice_zn

KITE_LABELS = ("0", "a", "b", "c", "d", "1")
KITE_COVERS = ((0, 1), (1, 2), (2, 4), (0, 3), (3, 4), (4, 5))


@lru_cache(maxsize=None)
def kite_lattice() -> MultiplicativeLattice:
    """Six elements 0 < a < b < d < 1 and 0 < c < d, trivial multiplication."""
    lattice = lattice_from_pairs(6, KITE_COVERS, KITE_LABELS)
    return trivial_mult(lattice, name="K")


@lru_cache(maxsize=None)
def chain_lattice(n: int, mult: str = "trivial") -> MultiplicativeLattice:
    """A chain c0 < c1 < ... with trivial or meet multiplication."""
    if n < 1:
        raise ValueError("chain needs at least one element")
    labels = tuple(f"c{i}" for i in range(n))
    lattice = lattice_from_pairs(n, [(i, i + 1) for i in range(n - 1)], labels)
    name = f"chain-{mult}:{n}"
    if mult == "trivial":
        return trivial_mult(lattice, name=name)
    if mult == "meet":
        return meet_mult(lattice, name=name)
    raise ValueError(f"unknown chain multiplication {mult!r}")


def zn_instances(lo: int, hi: int) -> Iterator[MultiplicativeLattice]:
    for n in range(lo, hi + 1):
        yield ideal_lattice_zn(n)[0]


def product_instances(moduli: tuple[int, ...]) -> Iterator[MultiplicativeLattice]:
    for m in moduli:
        for n in moduli:
            yield ideal_lattice_product(m, n)[0]


PRODUCT_MODULI = (2, 3, 4, 8, 9, 25)


def acceptance_corpus(zn_hi: int = 200) -> Iterator[MultiplicativeLattice]:
    """zn:2..zn_hi, the stock product pairs, trivial chains to 8, and K."""
    yield from zn_instances(2, zn_hi)
    yield from product_instances(PRODUCT_MODULI)
    for n in range(2, 9):
        yield chain_lattice(n, "trivial")
    yield kite_lattice()
