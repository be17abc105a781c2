"""Search-tree instrumentation shared by the branching recognizers."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

from .errors import InvariantViolation

log = logging.getLogger("graphpart")


@dataclass
class SearchStats:
    """Counters accumulated over every search tree a recognizer builds.

    ``path_max`` keeps, per counter name, the largest value reached along a
    single root-to-leaf path; ``widths`` keeps the widest branching per rule.
    """

    steps: int = 0
    nodes: int = 0
    leaves: int = 0
    exhausted_leaves: int = 0
    max_depth: int = 0
    max_leaves_per_tree: int = 0
    initial_constraints_max: int = 0
    rule_counts: Counter = field(default_factory=Counter)
    path_max: Counter = field(default_factory=Counter)
    widths: Counter = field(default_factory=Counter)
    soft_violations: list[str] = field(default_factory=list)

    def note_path(self, name: str, value: int, cap: int | None = None) -> None:
        if value > self.path_max[name]:
            self.path_max[name] = value
        if cap is not None and value > cap:
            raise InvariantViolation(f"{name} reached {value} on one path, bound is {cap}")

    def note_width(self, rule: str, width: int, cap: int | None = None) -> None:
        if width > self.widths[rule]:
            self.widths[rule] = width
        if cap is not None and width > cap:
            raise InvariantViolation(f"{rule} branched {width} ways, bound is {cap}")

    def note_depth(self, depth: int, cap: int | None = None) -> None:
        if depth > self.max_depth:
            self.max_depth = depth
        if cap is not None and depth > cap:
            raise InvariantViolation(f"search depth {depth} exceeds bound {cap}")

    def soft(self, message: str) -> None:
        """Record a bound the analysis suggests but does not pin down; never raises."""
        self.soft_violations.append(message)
        log.warning(message)

    def as_lines(self) -> list[str]:
        lines = [
            f"steps={self.steps}",
            f"nodes={self.nodes}",
            f"leaves={self.leaves}",
            f"exhausted_leaves={self.exhausted_leaves}",
            f"max_depth={self.max_depth}",
            f"max_leaves_per_tree={self.max_leaves_per_tree}",
            f"initial_constraints_max={self.initial_constraints_max}",
        ]
        lines += [f"rule.{name}={count}" for name, count in sorted(self.rule_counts.items())]
        lines += [f"path_max.{name}={count}" for name, count in sorted(self.path_max.items())]
        lines += [f"width_max.{name}={count}" for name, count in sorted(self.widths.items())]
        if self.soft_violations:
            lines.append(f"soft_violations={len(self.soft_violations)}")
        return lines
