"""Orientation LP relaxation of graph density deletion, an exact
rational simplex solver, and the threshold-rounding algorithm.

The relaxation has a deletion variable x_u per vertex and a slack
variable z_{e,u} per edge endpoint:

    minimize  sum_u c(u) x_u
    s.t.      x_u + x_v + z_{e,u} + z_{e,v} >= 1   for every edge e = uv
              rho x_u + sum_{e in delta(u)} z_{e,u} <= rho   for every u
              0 <= x_u <= 1,  z >= 0

A self-loop e = uu has a single variable z_{e,u} with coefficient 2 in
its edge constraint and coefficient 1 in u's vertex constraint.

Rounding S = {u : x_u > eps} for eps strictly inside (0, 1/2) gives
c(S) <= lp_value / eps and density(G - S) <= rho / (1 - 2 eps); the
scaled slacks z' = z / (1 - 2 eps) witness the second bound (per-edge
sums >= 1 on the residual graph, per-vertex loads <= rho / (1 - 2 eps)).

The simplex solver is a two-phase dense tableau over Fraction with
Bland's anti-cycling rule; no floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .densest import densest_subgraph
from .errors import InvalidEpsilon, InvariantViolation, NotFeasible
from .graph import MultiGraph
from .rational import Cost, COST_ONE, total_cost

GE, LE = ">=", "<="


def solve_lp_min(costs, rows, upper_bounds):
    """Minimize costs . x subject to rows [(coeffs dict, sense, rhs)] and
    0 <= x_j <= upper_bounds[j] (None = no upper bound).  All data exact.

    Returns (value, assignment list); raises NotFeasible when there is
    no feasible point or the objective is unbounded below.
    """
    nvar = len(costs)
    norm = [(dict(coeffs), sense, Fraction(rhs)) for coeffs, sense, rhs in rows]
    for j, ub in enumerate(upper_bounds):
        if ub is not None:
            norm.append(({j: Fraction(1)}, LE, Fraction(ub)))

    ncon = len(norm)
    ncols = nvar
    slack_of = {}
    for i in range(ncon):
        slack_of[i] = ncols
        ncols += 1
    a_mat = []
    b_vec = []
    flipped = []
    for i, (coeffs, sense, rhs) in enumerate(norm):
        row = [Fraction(0)] * ncols
        for j, c in coeffs.items():
            row[j] = Fraction(c)
        row[slack_of[i]] = Fraction(1) if sense == LE else Fraction(-1)
        if rhs < 0:
            row = [-c for c in row]
            rhs = -rhs
        a_mat.append(row)
        b_vec.append(rhs)

    basis = [None] * ncon
    for i in range(ncon):
        sj = slack_of[i]
        if a_mat[i][sj] == 1:
            basis[i] = sj
    art_of = {}
    total_cols = ncols
    for i in range(ncon):
        if basis[i] is None:
            art_of[i] = total_cols
            total_cols += 1
    for i in range(ncon):
        a_mat[i].extend([Fraction(0)] * (total_cols - ncols))
        if i in art_of:
            a_mat[i][art_of[i]] = Fraction(1)
            basis[i] = art_of[i]

    def pivot(obj, obj_rhs, r, c):
        piv = a_mat[r][c]
        a_mat[r] = [x / piv for x in a_mat[r]]
        b_vec[r] /= piv
        for i in range(ncon):
            if i != r and a_mat[i][c] != 0:
                fac = a_mat[i][c]
                a_mat[i] = [a - fac * b for a, b in zip(a_mat[i], a_mat[r])]
                b_vec[i] -= fac * b_vec[r]
        if obj[c] != 0:
            fac = obj[c]
            for j in range(total_cols):
                obj[j] -= fac * a_mat[r][j]
            obj_rhs[0] -= fac * b_vec[r]
        basis[r] = c

    def run_simplex(obj, obj_rhs, allowed):
        while True:
            col = None
            for j in range(allowed):
                if obj[j] < 0:
                    col = j  # Bland: lowest-index improving column
                    break
            if col is None:
                return
            row = None
            best = None
            for i in range(ncon):
                if a_mat[i][col] > 0:
                    ratio = b_vec[i] / a_mat[i][col]
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[row]
                    ):
                        best = ratio
                        row = i
            if row is None:
                raise NotFeasible("LP objective is unbounded")
            pivot(obj, obj_rhs, row, col)

    if art_of:
        obj1 = [Fraction(0)] * total_cols
        rhs1 = [Fraction(0)]
        for aj in art_of.values():
            obj1[aj] = Fraction(1)
        for i in art_of:
            for j in range(total_cols):
                obj1[j] -= a_mat[i][j]
            rhs1[0] -= b_vec[i]
        run_simplex(obj1, rhs1, total_cols)
        if -rhs1[0] != 0:
            raise NotFeasible("LP has no feasible point")
        arts = set(art_of.values())
        for i in range(ncon):
            if basis[i] in arts:
                for j in range(ncols):
                    if a_mat[i][j] != 0:
                        pivot(obj1, rhs1, i, j)
                        break

    obj2 = [Fraction(0)] * total_cols
    for j in range(nvar):
        obj2[j] = Fraction(costs[j])
    rhs2 = [Fraction(0)]
    for i in range(ncon):
        bj = basis[i]
        if bj is not None and obj2[bj] != 0:
            fac = obj2[bj]
            for j in range(total_cols):
                obj2[j] -= fac * a_mat[i][j]
            rhs2[0] -= fac * b_vec[i]
    run_simplex(obj2, rhs2, ncols)

    assign = [Fraction(0)] * nvar
    for i in range(ncon):
        if basis[i] is not None and basis[i] < nvar:
            assign[basis[i]] = b_vec[i]
    value = sum(Fraction(costs[j]) * assign[j] for j in range(nvar))
    return value, assign


@dataclass(frozen=True)
class OrientationLP:
    """The LP data: variable layout plus constraint rows."""

    g: MultiGraph
    rho: Fraction
    objective: tuple  # per-variable cost
    rows: tuple  # ((coeffs dict, sense, rhs), ...)
    upper_bounds: tuple
    n_x: int  # x variables come first, one per vertex
    z_index: tuple  # per edge, (index of z_{e,u}, index of z_{e,v} or None)


@dataclass(frozen=True)
class LPSolution:
    status: str  # "Optimal" or "Infeasible"
    objective: Fraction
    assignment: tuple


def build_orientation_lp(g: MultiGraph, rho, costs=None, surrogate=None) -> OrientationLP:
    """Build the relaxation.  Infinite vertex costs are replaced by the
    given finite surrogate (callers pick M from their epsilon)."""
    rho = Fraction(rho)
    if costs is None:
        costs = tuple(COST_ONE for _ in range(g.n))
    if surrogate is None:
        surrogate = sum(
            (c.value for c in costs if not c.is_infinite()), Fraction(0)
        ) + 1
    n = g.n
    z_index = []
    nz = 0
    for (a, b) in g.edges:
        iu = n + nz
        nz += 1
        if a != b:
            z_index.append((iu, n + nz))
            nz += 1
        else:
            z_index.append((iu, None))
    obj = []
    for u in range(n):
        c = costs[u]
        obj.append(Fraction(surrogate) if c.is_infinite() else Fraction(c.value))
    obj.extend([Fraction(0)] * nz)
    rows = []
    for i, (a, b) in enumerate(g.edges):
        iu, iv = z_index[i]
        if iv is None:
            rows.append(({a: Fraction(2), iu: Fraction(2)}, GE, Fraction(1)))
        else:
            rows.append((
                {a: Fraction(1), b: Fraction(1), iu: Fraction(1), iv: Fraction(1)},
                GE, Fraction(1),
            ))
    for u in range(n):
        coeffs = {u: rho}
        for i, (a, b) in enumerate(g.edges):
            iu, iv = z_index[i]
            if a == u:
                coeffs[iu] = coeffs.get(iu, Fraction(0)) + 1
            if b == u and iv is not None:
                coeffs[iv] = coeffs.get(iv, Fraction(0)) + 1
        rows.append((coeffs, LE, rho))
    ubs = tuple([Fraction(1)] * n + [None] * nz)
    return OrientationLP(
        g=g, rho=rho, objective=tuple(obj), rows=tuple(rows),
        upper_bounds=ubs, n_x=n, z_index=tuple(z_index),
    )


def solve_lp(lp: OrientationLP) -> LPSolution:
    try:
        value, assign = solve_lp_min(
            list(lp.objective), list(lp.rows), list(lp.upper_bounds)
        )
    except NotFeasible:
        return LPSolution(status="Infeasible", objective=Fraction(0), assignment=())
    for coeffs, sense, rhs in lp.rows:
        lhs = sum(Fraction(c) * assign[j] for j, c in coeffs.items())
        ok = lhs >= rhs if sense == GE else lhs <= rhs
        if not ok:
            raise InvariantViolation("LP optimum violates a constraint")
    return LPSolution(status="Optimal", objective=value, assignment=tuple(assign))


@dataclass(frozen=True)
class RoundedSolution:
    deleted: frozenset
    cost: Cost
    lp_value: Fraction
    epsilon: Fraction
    rho: Fraction
    residual_density: Fraction
    scaled_z: tuple  # per kept edge of g, (edge index, z'_{e,u}, z'_{e,v})
    infeasible_with_finite_cost: bool

    @property
    def cost_bound(self):
        return self.lp_value / self.epsilon

    @property
    def density_bound(self):
        return self.rho / (1 - 2 * self.epsilon)


def round_threshold(g: MultiGraph, costs, rho, epsilon) -> RoundedSolution:
    """Solve the relaxation and round S = {u : x_u > epsilon}.

    Both guarantees are certified before returning: the residual
    density bound via an exact densest-subgraph computation plus the
    scaled-slack witness, and the cost bound against the LP value.
    """
    rho = Fraction(rho)
    epsilon = Fraction(epsilon)
    if not (0 < epsilon < Fraction(1, 2)):
        raise InvalidEpsilon("epsilon must lie strictly between 0 and 1/2")
    if costs is None:
        costs = tuple(COST_ONE for _ in range(g.n))
    finite_sum = sum((c.value for c in costs if not c.is_infinite()), Fraction(0))
    surrogate = finite_sum * math.ceil(1 / epsilon) + 1
    lp = build_orientation_lp(g, rho, costs, surrogate)
    sol = solve_lp(lp)
    if sol.status != "Optimal":
        raise InvariantViolation("orientation LP reported infeasible")
    x = sol.assignment[: g.n]
    deleted = frozenset(u for u in range(g.n) if x[u] > epsilon)
    infeasible_finite = any(costs[u].is_infinite() for u in deleted)

    residual = g.delete_vertices(deleted)
    if residual.n == 0 or residual.m == 0:
        res_density = Fraction(0)
    else:
        res_density = densest_subgraph(residual).lambda_star
    scale = 1 / (1 - 2 * epsilon)
    density_bound = rho * scale
    # With the coefficient-2 self-loop convention a kept loop carries
    # slack only 1/2 after scaling, so the provable residual bound for
    # loopy graphs is twice the loopless one.
    has_loops = any(a == b for (a, b) in g.edges)
    certified = 2 * density_bound if has_loops else density_bound
    if res_density > certified:
        raise InvariantViolation("rounded residual density exceeds its bound")

    # Scaled-slack witness on surviving edges.
    scaled = []
    loads = {u: Fraction(0) for u in range(g.n) if u not in deleted}
    for i, (a, b) in enumerate(g.edges):
        if a in deleted or b in deleted:
            continue
        iu, iv = lp.z_index[i]
        zu = sol.assignment[iu] * scale
        zv = sol.assignment[iv] * scale if iv is not None else zu
        if zu + zv < 1:
            raise InvariantViolation("scaled slacks do not cover a kept edge")
        loads[a] += sol.assignment[iu] * scale
        if iv is not None:
            loads[b] += sol.assignment[iv] * scale
        scaled.append((i, zu, zv))
    for u, load in loads.items():
        if load > density_bound:
            raise InvariantViolation("scaled slack load exceeds the density bound")

    cost = total_cost(dict(enumerate(costs)), deleted)
    if not cost.is_infinite() and cost.value * epsilon > sol.objective:
        raise InvariantViolation("rounded cost exceeds lp_value / epsilon")
    return RoundedSolution(
        deleted=deleted,
        cost=cost,
        lp_value=sol.objective,
        epsilon=epsilon,
        rho=rho,
        residual_density=res_density,
        scaled_z=tuple(scaled),
        infeasible_with_finite_cost=infeasible_finite,
    )
