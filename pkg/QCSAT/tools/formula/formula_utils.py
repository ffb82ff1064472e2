"""
Core types for CNF formulas: literals, clauses, clause sets, assignments and
the index-set family that parameterises the Boolean polynomial f_A.

Bit convention used everywhere an assignment is packed into an integer:
x_1 is the most significant of the n bits, x_n the least significant.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Tuple

from ..errors import InputError


@dataclass(frozen=True, order=True)
class Literal:
    """x_k (negated=False) or its negation (negated=True)."""

    var_index: int
    negated: bool = False

    def __post_init__(self):
        if isinstance(self.var_index, bool) or not isinstance(self.var_index, int):
            raise InputError(f"var_index must be an integer, got {self.var_index!r}")
        if self.var_index < 1:
            raise InputError(f"var_index must be >= 1, got {self.var_index}")

    @classmethod
    def from_dimacs(cls, value: int) -> "Literal":
        """-k means the negation of x_k."""
        if value == 0:
            raise InputError("0 is a clause terminator, not a literal")
        return cls(abs(value), value < 0)

    def to_dimacs(self) -> int:
        return -self.var_index if self.negated else self.var_index

    def evaluate(self, value: bool) -> bool:
        return (not value) if self.negated else bool(value)

    def __str__(self):
        return f"~x{self.var_index}" if self.negated else f"x{self.var_index}"


@dataclass(frozen=True)
class Clause:
    """A disjunction of literals with set semantics; may be empty."""

    literals: FrozenSet[Literal] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "literals", frozenset(self.literals))

    @classmethod
    def of(cls, *values: int) -> "Clause":
        """Build a clause from DIMACS-style integers, e.g. Clause.of(1, -2)."""
        return cls(frozenset(Literal.from_dimacs(v) for v in values))

    @property
    def max_var(self) -> int:
        return max((lit.var_index for lit in self.literals), default=0)

    def is_tautology(self) -> bool:
        return any(Literal(lit.var_index, not lit.negated) in self.literals for lit in self.literals)

    def sorted_literals(self) -> List[Literal]:
        return sorted(self.literals, key=lambda lit: (lit.var_index, lit.negated))

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.sorted_literals())

    def __len__(self):
        return len(self.literals)

    def __str__(self):
        if not self.literals:
            return "()"
        return "(" + " v ".join(str(lit) for lit in self) + ")"


@dataclass(frozen=True)
class ClauseSet:
    """A CNF formula in product-of-sums form over num_vars variables."""

    num_vars: int
    clauses: Tuple[Clause, ...] = ()

    def __post_init__(self):
        if isinstance(self.num_vars, bool) or not isinstance(self.num_vars, int) or self.num_vars < 1:
            raise InputError(f"num_vars must be a positive integer, got {self.num_vars!r}")
        object.__setattr__(self, "clauses", tuple(self.clauses))
        for position, clause in enumerate(self.clauses):
            if clause.max_var > self.num_vars:
                raise InputError(
                    f"clause {position + 1} references x{clause.max_var} "
                    f"but the formula has only {self.num_vars} variables"
                )

    @classmethod
    def from_lists(cls, num_vars: int, clauses: Iterable[Iterable[int]]) -> "ClauseSet":
        return cls(num_vars, tuple(Clause.of(*c) for c in clauses))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def to_lists(self) -> List[List[int]]:
        return [[lit.to_dimacs() for lit in clause] for clause in self.clauses]

    def canonical(self) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
        """(num_vars, sorted clause multiset); literal order inside a clause is ignored."""
        return self.num_vars, tuple(sorted(tuple(c) for c in self.to_lists()))

    def __str__(self):
        if not self.clauses:
            return "(empty formula)"
        return " ^ ".join(str(c) for c in self.clauses)


@dataclass(frozen=True)
class Assignment:
    """Truth values (t(x_1), ..., t(x_n))."""

    values: Tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(bool(v) for v in self.values))

    @classmethod
    def from_index(cls, index: int, n: int) -> "Assignment":
        if not 0 <= index < (1 << n):
            raise InputError(f"assignment index {index} outside 0..2^{n}-1")
        return cls(tuple(bool((index >> (n - k)) & 1) for k in range(1, n + 1)))

    def to_index(self) -> int:
        index = 0
        for v in self.values:
            index = (index << 1) | int(v)
        return index

    def value_of(self, var_index: int) -> bool:
        if not 1 <= var_index <= len(self.values):
            raise InputError(
                f"x{var_index} is not covered by an assignment of length {len(self.values)}"
            )
        return self.values[var_index - 1]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class IndexSetFamily:
    """The data A = {S_1..S_N, T_1..T_N} indexing the Boolean polynomial f_A."""

    n: int
    entries: Tuple[Tuple[FrozenSet[int], FrozenSet[int]], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"n must be positive, got {self.n}")
        entries = tuple((frozenset(s), frozenset(t)) for s, t in self.entries)
        for s, t in entries:
            for index in s | t:
                if not 1 <= index <= self.n:
                    raise InputError(f"index {index} outside 1..{self.n}")
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)


def ensure_assignment_covers(a: Assignment, num_vars: int) -> None:
    if len(a) != num_vars:
        raise InputError(f"assignment has length {len(a)}, formula has {num_vars} variables")
