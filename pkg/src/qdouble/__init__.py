"""Irreducible representations of quantum doubles of small finite groups,
the R-matrices they carry, and the spectral-parameter solutions and spin
chains obtained from them.

The modules are layered bottom up:

- scalars: complex and sparse Laurent-polynomial arithmetic
- groups: multiplication tables and conjugacy data for the supported groups
- doubles: the quantum double as an abstract algebra, with exact Hopf checks
- reps: base irreps of the relevant centralizers and the induced double irreps
- ybe: constant R-matrices, Yang-Baxter and quasi-triangularity checks
- baxter: spectral-parameter families and the eigenvalue ansatz
- chains: local Hamiltonians, global symmetry and transfer matrices
- cli: command line entry point
"""

from .scalars import DEFAULT_TOL, Tolerances, root_of_unity

__all__ = ["DEFAULT_TOL", "Tolerances", "root_of_unity"]

__version__ = "0.1.0"
