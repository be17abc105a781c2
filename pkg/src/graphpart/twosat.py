"""Linear-time 2-CNF satisfiability via strongly connected components."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

Literal = tuple[int, bool]  # (variable, True for the positive literal)


@dataclass
class TwoSatFormula:
    """A conjunction of two-literal clauses over variables ``0 .. var_count - 1``."""

    var_count: int
    clauses: list[tuple[Literal, Literal]] = field(default_factory=list)

    def add_clause(self, a: Literal, b: Literal) -> None:
        for var, _ in (a, b):
            if not 0 <= var < self.var_count:
                raise ValueError(f"literal references undeclared variable {var}")
        self.clauses.append((a, b))

    def satisfied_by(self, assignment) -> bool:
        return all(assignment[x] == px or assignment[y] == py for (x, px), (y, py) in self.clauses)


def _node(lit: Literal) -> int:
    var, positive = lit
    return 2 * var + (0 if positive else 1)


def solve_twosat(formula: TwoSatFormula) -> Optional[list[bool]]:
    """Return a satisfying assignment, or ``None`` if the formula is unsatisfiable.

    Each clause ``a or b`` contributes the implications ``not a -> b`` and
    ``not b -> a``. Tarjan's algorithm numbers components in reverse
    topological order, so a variable is set true exactly when its positive
    literal's component comes first.
    """
    size = 2 * formula.var_count
    succ: list[list[int]] = [[] for _ in range(size)]
    for a, b in formula.clauses:
        na, nb = _node(a), _node(b)
        succ[na ^ 1].append(nb)
        succ[nb ^ 1].append(na)

    index = [-1] * size
    low = [0] * size
    comp = [-1] * size
    on_stack = [False] * size
    stack: list[int] = []
    counter = 0
    comp_count = 0
    for root in range(size):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            u, i = work.pop()
            if i == 0:
                index[u] = low[u] = counter
                counter += 1
                stack.append(u)
                on_stack[u] = True
            edges = succ[u]
            while i < len(edges):
                w = edges[i]
                i += 1
                if index[w] == -1:
                    work.append((u, i))
                    work.append((w, 0))
                    break
                if on_stack[w] and index[w] < low[u]:
                    low[u] = index[w]
            else:
                if low[u] == index[u]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp[w] = comp_count
                        if w == u:
                            break
                    comp_count += 1
                if work:
                    parent = work[-1][0]
                    if low[u] < low[parent]:
                        low[parent] = low[u]
    assignment = []
    for var in range(formula.var_count):
        pos, neg = comp[2 * var], comp[2 * var + 1]
        if pos == neg:
            return None
        assignment.append(pos < neg)
    return assignment
