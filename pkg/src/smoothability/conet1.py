"""Graded T^1 of the cone over a finite point configuration.

For the cone O over r points, the normalisation K is a product of r
polynomial rings in one variable, so K_ell is identified with k^r (one
coefficient per line) in every degree, and a form of degree ell becomes its
vector of values at the chosen point representatives.  O_ell is then the
row space of the Veronese matrix, O_ell = 0 for ell < 0, and multiplication
in K is componentwise.  With W_m the annihilator of O_m (all of k^r when
m < 0), the four-term sequence

    0 -> Hom(m, O)_ell -> K_ell -> (ker df)_ell -> T^1_ell -> 0

turns T^1_ell into two kernel computations over the rationals:

* Hom(m, O)_ell = {a : (a * x_i) is killed by W_{ell+1} for all i};
* (ker df)_ell  = {(b_i) in (K_{ell+1}/O_{ell+1})^n :
                   sum_i (df_j/dx_i) * b_i is killed by W_{ell+q_j} for all j}.

Each rank has a proven upper bound from the sequence itself (O_ell lies in
Hom(m, O)_ell and K_ell maps into ker df), which lets a prime-field rank
settle it when the bound is attained; otherwise the rank is computed over Q.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, gcd
from typing import Sequence

from .errors import DegenerateConfig
from .exactmat import EchelonBasis, certified_rank, nullspace, rank, rref
from .pointset import PointConfiguration, monomials

__all__ = ["GradedConeModel", "build", "T1Report"]

log = logging.getLogger(__name__)


def _primitive_integer(vec: Sequence[Fraction]) -> tuple[int, ...]:
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g > 1 else tuple(ints)


@dataclass
class T1Report:
    t1: dict[int, int]
    window: tuple[int, int]
    delta: int
    type: int
    deligne_e: int
    moduli: int
    checks: dict[str, object] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.t1.values())

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "type": self.type,
            "e": self.deligne_e,
            "moduli": self.moduli,
            "window": list(self.window),
            "t1": {str(k): v for k, v in sorted(self.t1.items())},
            "t1_total": self.total,
            "checks": dict(self.checks),
        }


class GradedConeModel:
    """Per-degree data of the cone over a configuration, built once."""

    def __init__(self, config: PointConfiguration, exact: bool = False):
        if rank(config.coords) != config.n:
            raise DegenerateConfig("points do not span the ambient space")
        self.config = config
        self.n = config.n
        self.r = config.r
        # integer representative of each point, fixed once
        self.points = [_primitive_integer(p) for p in config.points]
        self.exact = exact
        self.generators = self._ideal_generators()
        self.jacobian = [self._jacobian_values(q, f) for q, f in self.generators]

    # -- graded pieces of O and K --------------------------------------------

    @cached_property
    def saturation_degree(self) -> int:
        return self.config.saturation_degree

    def hilbert(self, ell: int) -> int:
        return self.config.hilbert_function(ell)

    @lru_cache(maxsize=None)
    def evaluations(self, deg: int) -> tuple[tuple[int, ...], ...]:
        """Values of the degree-``deg`` monomials at the integer points."""
        out = []
        for mono in monomials(self.n, deg):
            row = []
            for p in self.points:
                v = 1
                for i in mono:
                    v *= p[i]
                row.append(v)
            out.append(tuple(row))
        return tuple(out)

    @lru_cache(maxsize=None)
    def O_basis(self, ell: int) -> tuple[tuple[Fraction, ...], ...]:
        """Reduced echelon basis of O_ell inside k^r."""
        if ell < 0:
            return ()
        if ell >= self.saturation_degree:
            return tuple(tuple(Fraction(int(i == j)) for j in range(self.r)) for i in range(self.r))
        R, piv = rref(self.evaluations(ell))
        return tuple(R.row(k) for k in range(len(piv)))

    @lru_cache(maxsize=None)
    def O_pivots(self, ell: int) -> tuple[int, ...]:
        basis = self.O_basis(ell)
        return tuple(next(j for j, x in enumerate(row) if x) for row in basis)

    @lru_cache(maxsize=None)
    def complement(self, ell: int) -> tuple[int, ...]:
        """Positions whose unit vectors span a complement of O_ell in K_ell."""
        piv = set(self.O_pivots(ell))
        return tuple(c for c in range(self.r) if c not in piv)

    @lru_cache(maxsize=None)
    def annihilator(self, ell: int) -> tuple[tuple[int, ...], ...]:
        """Basis of W_ell = {w : w . o = 0 for all o in O_ell}, as integer rows."""
        if ell < 0:
            return tuple(tuple(int(i == j) for j in range(self.r)) for i in range(self.r))
        if ell >= self.saturation_degree:
            return ()
        N = nullspace(self.O_basis(ell))
        return tuple(_primitive_integer(N.row(i)) for i in range(N.rows))

    # -- ideal generators and Jacobian -------------------------------------------

    def _ideal_basis(self, deg: int) -> list[tuple[int, ...]]:
        """Coefficient vectors (over monomials of degree deg) spanning I_deg."""
        if self.hilbert(deg) == comb(self.n + deg - 1, deg):
            return []
        N = nullspace([tuple(Fraction(x) for x in col) for col in zip(*self.evaluations(deg))])
        return [_primitive_integer(N.row(i)) for i in range(N.rows)]

    def _ideal_generators(self) -> list[tuple[int, tuple[int, ...]]]:
        """Homogeneous generators (degree, coefficients), degree by degree.

        In each degree the new generators complete x_1 I_{d-1} + ... + x_n I_{d-1}
        to a basis of I_d; the ideal of points is generated in degrees up to
        one more than the saturation degree.
        """
        gens = []
        prev: list[tuple[int, ...]] = []
        for deg in range(1, self.saturation_degree + 2):
            basis = self._ideal_basis(deg)
            if not basis:
                prev = []
                continue
            index = {m: k for k, m in enumerate(monomials(self.n, deg))}
            span = EchelonBasis(len(index))
            if prev:
                pmonos = monomials(self.n, deg - 1)
                products = []
                for f in prev:
                    for i in range(self.n):
                        v = [0] * len(index)
                        for m, c in zip(pmonos, f):
                            if c:
                                v[index[tuple(sorted(m + (i,)))]] += c
                        products.append(v)
                # products lie in I_deg, so dim I_deg bounds their rank
                if certified_rank(products, len(basis)) == len(basis):
                    prev = basis
                    continue
                for v in products:
                    span.add(v)
                    if len(span) == len(basis):
                        break
            for f in basis:
                if len(span) == len(basis):
                    break
                if span.add(f):
                    gens.append((deg, f))
            prev = basis
        return gens

    def _jacobian_values(self, q: int, f: tuple[int, ...]) -> list[tuple[int, ...]]:
        """For each variable i, the values of df/dx_i at the points."""
        monos = monomials(self.n, q)
        lower = {m: k for k, m in enumerate(monomials(self.n, q - 1))}
        ev = self.evaluations(q - 1)
        out = []
        for i in range(self.n):
            vals = [0] * self.r
            for m, c in zip(monos, f):
                e = m.count(i)
                if not (c and e):
                    continue
                dm = list(m)
                dm.remove(i)
                row = ev[lower[tuple(dm)]]
                ce = c * e
                for k in range(self.r):
                    vals[k] += ce * row[k]
            out.append(tuple(vals))
        return out

    @property
    def generator_degrees(self) -> list[int]:
        return [q for q, _ in self.generators]

    # -- the exact sequence ---------------------------------------------------------

    def _rank(self, rows, upper: int) -> int:
        if not rows:
            return 0
        if self.exact:
            return rank(rows)
        return certified_rank(rows, upper)

    def hom_m_O_dim(self, ell: int) -> int:
        """dim {a in K_ell : a * x_i in O_{ell+1} for all i}."""
        W = self.annihilator(ell + 1)
        if not W:
            return self.r
        rows = [tuple(w[c] * p[i] for c, p in enumerate(self.points))
                for w in W for i in range(self.n)]
        # O_ell sits inside Hom(m, O)_ell
        return self.r - self._rank(rows, self.r - self.hilbert(ell))

    def ker_df_dim(self, ell: int, hom: int | None = None) -> int:
        """dim of the kernel of df on (K/O)^n in degree ell."""
        comp = self.complement(ell + 1)
        unknowns = [(i, c) for i in range(self.n) for c in comp]
        if not unknowns:
            return 0
        rows = []
        for (q, _), jac in zip(self.generators, self.jacobian):
            for w in self.annihilator(ell + q):
                rows.append(tuple(w[c] * jac[i][c] for i, c in unknowns))
        if hom is None:
            hom = self.hom_m_O_dim(ell)
        # the image of K_ell, of dimension r - hom, lies in the kernel
        upper = len(unknowns) - (self.r - hom)
        return len(unknowns) - self._rank(rows, upper)

    def t1_dim(self, ell: int) -> int:
        hom = self.hom_m_O_dim(ell)
        ker = self.ker_df_dim(ell, hom)
        t1 = ker - (self.r - hom)
        if t1 < 0:
            raise AssertionError(f"negative T^1 in degree {ell}: ker={ker}, hom={hom}")
        return t1

    # -- dualising module --------------------------------------------------------------

    def omega_dim(self, ell: int) -> int:
        """dim omega_ell; omega_{-m} is the annihilator of O_{m-1}."""
        return len(self.annihilator(-ell - 1))

    @cached_property
    def type(self) -> int:
        """Number of generators of the dualising module."""
        t = 0
        for m in range(self.saturation_degree, -1, -1):
            # omega_{-m} modulo x_1 omega_{-m-1} + ... + x_n omega_{-m-1}
            below = self.annihilator(m)
            dim = len(self.annihilator(m - 1))
            if not below:
                t += dim
                continue
            images = [tuple(w[c] * p[i] for c, p in enumerate(self.points))
                      for w in below for i in range(self.n)]
            t += dim - rank(images)
        return t

    # -- report ------------------------------------------------------------------------

    def default_window(self) -> tuple[int, int]:
        d = self.saturation_degree
        return -d - 2, d + 1

    def t1_report(self, lo: int | None = None, hi: int | None = None,
                  widen: bool = True) -> T1Report:
        """T^1 by degree over [lo, hi] plus delta, type, e and consistency checks."""
        dlo, dhi = self.default_window()
        lo = dlo if lo is None else lo
        hi = dhi if hi is None else hi
        if lo > hi:
            raise ValueError("empty window")
        dims = {ell: self.t1_dim(ell) for ell in range(lo, hi + 1)}
        while widen and (dims[lo] or dims[hi]):
            if dims[lo]:
                lo -= 1
                dims[lo] = self.t1_dim(lo)
            if dims[hi]:
                hi += 1
                dims[hi] = self.t1_dim(hi)
        delta = self.config.delta_cone()
        t = self.type
        checks: dict[str, object] = {}
        # T^1_ell vanishes whenever K_{ell+1} = O_{ell+1}
        checks["tplusnul"] = all(
            v == 0 for ell, v in dims.items() if self.hilbert(ell + 1) == self.r
        )
        if self.r == 2 * self.n and t == 1:
            checks["negatively_graded"] = all(v == 0 for ell, v in dims.items() if ell >= 1)
        else:
            checks["negatively_graded"] = "n/a"
        checks["window_boundary_zero"] = dims[lo] == 0 and dims[hi] == 0
        return T1Report(
            t1={k: v for k, v in sorted(dims.items()) if v},
            window=(lo, hi),
            delta=delta,
            type=t,
            deligne_e=2 * delta - self.r + t,
            moduli=(self.r - self.n - 1) * (self.n - 1),
            checks=checks,
        )


def build(config: PointConfiguration, exact: bool = False) -> GradedConeModel:
    return GradedConeModel(config, exact=exact)
