from pathlib import Path

import pytest

from multlat import ideal_lattice_zn, kite_lattice

LATTICE_DIR = Path(__file__).resolve().parent.parent / "lattices"


@pytest.fixture(scope="session")
def kite():
    return kite_lattice()


@pytest.fixture(scope="session")
def z12():
    return ideal_lattice_zn(12)[0]


@pytest.fixture(scope="session")
def z15():
    return ideal_lattice_zn(15)[0]


@pytest.fixture(scope="session")
def lattice_dir():
    return LATTICE_DIR


def div_index(M, label: str) -> int:
    """Index of a labelled element, for readable assertions."""
    return M.lattice.index_of(label)


def brute_force_axioms_hold(lattice, rows) -> bool:
    """Triple-loop check of the four defining identities, no shortcuts."""
    n = lattice.size
    R = range(n)
    for a in R:
        if rows[a][lattice.top] != a or rows[a][lattice.bottom] != lattice.bottom:
            return False
        for b in R:
            if rows[a][b] != rows[b][a]:
                return False
            for c in R:
                if rows[a][rows[b][c]] != rows[rows[a][b]][c]:
                    return False
                if rows[a][lattice.join(b, c)] != lattice.join(rows[a][b], rows[a][c]):
                    return False
    return True
