"""Exact-arithmetic calculus on quantum toroidal Fock modules.

Everything here is computed over exact fields (rationals with fourth-root
closure, or univariate rational functions): Macdonald and Hall-Littlewood
symmetric functions, free-boson vertex-operator algebra, generalized
Macdonald bases, Kac determinants, Nekrasov partition functions and their
crystal (q -> 0) limits, and R-matrices with Yang-Baxter checks.
"""

__version__ = "0.1.0"
