"""Exact linear programming over the rationals: two-phase tableau simplex with Bland's rule."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional, Sequence

from turanlab.errors import SolverError

logger = logging.getLogger(__name__)

Relation = Literal["eq", "ge"]


@dataclass(frozen=True)
class Constraint:
    """sum_j coefficients[j] * x[j]  (== or >=)  rhs, over x >= 0."""

    coefficients: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction

    @classmethod
    def of(cls, coefficients: Sequence, relation: Relation, rhs) -> "Constraint":
        if relation not in ("eq", "ge"):
            raise SolverError(f"unknown relation '{relation}'")
        return cls(tuple(Fraction(c) for c in coefficients), relation, Fraction(rhs))


@dataclass
class LPResult:
    feasible: bool
    solution: Optional[list[Fraction]] = None
    # One multiplier per constraint; only set when infeasible
    farkas: Optional[list[Fraction]] = None
    pivots: int = 0
    objective_values: list[Fraction] = field(default_factory=list)


class _Tableau:
    """Rows hold B^-1 [A | -I_surplus | I_artificial | b]."""

    def __init__(self, constraints: Sequence[Constraint], variable_count: int):
        ge_rows = [i for i, c in enumerate(constraints) if c.relation == "ge"]
        surplus_of = {row: variable_count + i for i, row in enumerate(ge_rows)}
        self.variable_count = variable_count
        self.artificial_start = variable_count + len(ge_rows)
        self.width = self.artificial_start + len(constraints)
        self.rows: list[list[Fraction]] = []
        self.signs: list[int] = []
        for i, constraint in enumerate(constraints):
            if len(constraint.coefficients) != variable_count:
                raise SolverError(
                    f"constraint {i} has {len(constraint.coefficients)} coefficients, expected {variable_count}"
                )
            row = [Fraction(0)] * (self.width + 1)
            row[:variable_count] = constraint.coefficients
            if i in surplus_of:
                row[surplus_of[i]] = Fraction(-1)
            row[-1] = constraint.rhs
            sign = -1 if constraint.rhs < 0 else 1
            if sign < 0:
                row = [-entry for entry in row]
            row[self.artificial_start + i] = Fraction(1)
            self.rows.append(row)
            self.signs.append(sign)
        self.basis = [self.artificial_start + i for i in range(len(constraints))]
        self.allowed = list(range(self.width))
        self.pivots = 0

    def pivot(self, r: int, c: int) -> None:
        pivot_row = self.rows[r]
        value = pivot_row[c]
        pivot_row[:] = [entry / value for entry in pivot_row]
        for i, row in enumerate(self.rows):
            if i != r and row[c]:
                factor = row[c]
                row[:] = [a - factor * b for a, b in zip(row, pivot_row)]
        self.basis[r] = c
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction]) -> list[Fraction]:
        return [
            cost[j] - sum((cost[b] * row[j] for b, row in zip(self.basis, self.rows)), Fraction(0))
            for j in range(self.width)
        ]

    def value(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * row[-1] for b, row in zip(self.basis, self.rows)), Fraction(0))

    def minimize(self, cost: Sequence[Fraction]) -> list[Fraction]:
        """Pivot to optimality over the allowed columns; returns the final reduced costs."""
        while True:
            reduced = self.reduced_costs(cost)
            entering = next((j for j in self.allowed if reduced[j] < 0), None)
            if entering is None:
                return reduced
            ratios = [
                (row[-1] / row[entering], self.basis[i], i)
                for i, row in enumerate(self.rows)
                if row[entering] > 0
            ]
            if not ratios:
                raise SolverError("objective is unbounded below")
            _, _, leaving = min(ratios)
            logger.debug(f"Pivot {self.pivots}: column {entering} enters, row {leaving} leaves")
            self.pivot(leaving, entering)

    def farkas(self, cost: Sequence[Fraction]) -> list[Fraction]:
        """y = c_B B^-1 read off the artificial columns, in the original row signs."""
        return [
            sign * sum(
                (cost[b] * row[self.artificial_start + i] for b, row in zip(self.basis, self.rows)),
                Fraction(0),
            )
            for i, sign in enumerate(self.signs)
        ]

    def drive_out_artificials(self) -> None:
        redundant = []
        for r, b in enumerate(self.basis):
            if b < self.artificial_start:
                continue
            column = next((j for j in range(self.artificial_start) if self.rows[r][j] != 0), None)
            if column is None:
                redundant.append(r)
            else:
                self.pivot(r, column)
        for r in reversed(redundant):
            del self.rows[r]
            del self.basis[r]
        self.allowed = [j for j in range(self.artificial_start)]

    def solution(self) -> list[Fraction]:
        x = [Fraction(0)] * self.width
        for b, row in zip(self.basis, self.rows):
            x[b] = row[-1]
        return x[: self.variable_count]


def farkas_certifies_infeasibility(constraints: Sequence[Constraint], y: Sequence[Fraction]) -> bool:
    """y^T A <= 0 on every variable, y >= 0 on '>=' rows and y^T b > 0."""
    if len(y) != len(constraints):
        return False
    if any(weight < 0 for weight, c in zip(y, constraints) if c.relation == "ge"):
        return False
    variable_count = len(constraints[0].coefficients) if constraints else 0
    for j in range(variable_count):
        if sum((weight * c.coefficients[j] for weight, c in zip(y, constraints)), Fraction(0)) > 0:
            return False
    return sum((weight * c.rhs for weight, c in zip(y, constraints)), Fraction(0)) > 0


def lexicographic_minimum(
    constraints: Sequence[Constraint],
    variable_count: int,
    objectives: Optional[Sequence[Sequence]] = None,
) -> LPResult:
    """
    Exact feasibility and lexicographic minimization over x >= 0.

    Args:
        constraints: Equality and '>=' rows
        variable_count: Number of unknowns
        objectives: Cost vectors minimized in turn, each over the optimal face of the previous;
            defaults to sum(x), then x[0], x[1], ...

    Returns:
        LPResult with the exact solution, or with Farkas multipliers when infeasible
    """
    if objectives is None:
        objectives = [[1] * variable_count] + [
            [int(i == j) for j in range(variable_count)] for i in range(variable_count)
        ]
    tableau = _Tableau(constraints, variable_count)

    phase_one = [Fraction(int(j >= tableau.artificial_start)) for j in range(tableau.width)]
    tableau.minimize(phase_one)
    infeasibility = tableau.value(phase_one)
    if infeasibility > 0:
        y = tableau.farkas(phase_one)
        if not farkas_certifies_infeasibility(constraints, y):
            raise SolverError("phase one produced an invalid infeasibility certificate")
        logger.info(f"Infeasible after {tableau.pivots} pivots (phase one value {infeasibility})")
        return LPResult(feasible=False, farkas=y, pivots=tableau.pivots)

    tableau.drive_out_artificials()
    values = []
    for objective in objectives:
        cost = [Fraction(c) for c in objective] + [Fraction(0)] * (tableau.width - variable_count)
        reduced = tableau.minimize(cost)
        values.append(tableau.value(cost))
        basic = set(tableau.basis)
        tableau.allowed = [j for j in tableau.allowed if j in basic or reduced[j] == 0]
    solution = tableau.solution()
    logger.info(f"Feasible after {tableau.pivots} pivots, objective values {[str(v) for v in values]}")
    return LPResult(feasible=True, solution=solution, pivots=tableau.pivots, objective_values=values)
