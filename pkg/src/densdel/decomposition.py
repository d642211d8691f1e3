"""Dense decomposition and threshold preprocessing.

The dense decomposition peels the maximal densest set, contracts it,
and repeats on the marginal function.  The block densities are strictly
decreasing and the decomposition is unique.  Preprocessing to a
threshold keeps the union R of all blocks whose density exceeds it;
every remaining vertex then has last-marginal at least the threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidOracle, InvariantViolation
from .oracles import SupermodOracle, marginal


@dataclass(frozen=True)
class DenseDecomposition:
    blocks: tuple  # ((frozenset, Fraction density), ...) densities strictly decreasing

    def union_above(self, rho) -> frozenset:
        rho = Fraction(rho)
        out = frozenset()
        for verts, dens in self.blocks:
            if dens > rho:
                out |= verts
        return out


def dense_decomposition(f: SupermodOracle) -> DenseDecomposition:
    if f.eval(frozenset()) != 0:
        raise InvalidOracle("oracle is not normalized: f(empty) != 0")
    blocks = []
    current = f
    prev = None
    while current.ground:
        dens, wit = current.max_density()
        if dens <= 0:
            # Everything left has zero marginal density: one final block.
            blocks.append((current.ground, Fraction(0)))
            break
        if not wit:
            raise InvariantViolation("positive density with empty witness")
        if prev is not None and dens >= prev:
            raise InvariantViolation("block densities not strictly decreasing")
        blocks.append((wit, dens))
        prev = dens
        current = current.contract(wit)
    return DenseDecomposition(blocks=tuple(blocks))


@dataclass(frozen=True)
class PreprocessResult:
    kept: frozenset
    oracle: SupermodOracle
    decomposition: DenseDecomposition


def preprocess(f: SupermodOracle, rho_prime) -> PreprocessResult:
    """Restrict f to the union R of decomposition blocks denser than rho_prime.

    Checks the per-vertex marginal guarantee f(v | R - v) >= rho_prime
    for every kept vertex before returning.
    """
    rho_prime = Fraction(rho_prime)
    decomp = dense_decomposition(f)
    kept = decomp.union_above(rho_prime)
    restricted = f.restrict(kept)
    for v in kept:
        if marginal(restricted, v, kept - {v}) < rho_prime:
            raise InvariantViolation(
                f"kept vertex {v} has last-marginal below the threshold"
            )
    return PreprocessResult(kept=kept, oracle=restricted, decomposition=decomp)
