"""One-in-three satisfiability instances.

File format: a header ``p o3sat <n> <m>`` followed by ``m`` lines of three
signed variable indices. Lines starting with ``c`` are comments.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class SatFormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class SatInstance:
    variable_count: int
    clauses: tuple

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.variable_count < 1:
            raise SatFormatError("need at least one variable")
        if not self.clauses:
            raise SatFormatError("need at least one clause")
        for j, c in enumerate(self.clauses):
            if len(c) != 3:
                raise SatFormatError(f"clause {j + 1} has {len(c)} literals, expected 3")
            for lit in c:
                if lit == 0:
                    raise SatFormatError(f"clause {j + 1} contains a zero literal")
                if abs(lit) > self.variable_count:
                    raise SatFormatError(
                        f"clause {j + 1} uses variable {abs(lit)} > {self.variable_count}")

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def occurrences(self, literal: int) -> list[int]:
        """Clause indices (0-based) in which ``literal`` occurs, with repetition."""
        return [j for j, c in enumerate(self.clauses) for lit in c if lit == literal]


def parse_sat(text) -> SatInstance:
    if isinstance(text, bytes):
        text = text.decode()
    header = None
    clauses = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4 or parts[:2] != ["p", "o3sat"]:
                raise SatFormatError("expected header 'p o3sat <n> <m>'", number)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise SatFormatError("header counts must be integers", number) from None
            if header[0] < 1 or header[1] < 1:
                raise SatFormatError("need n >= 1 and m >= 1", number)
            continue
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError:
            raise SatFormatError("literals must be integers", number) from None
        if len(lits) != 3:
            raise SatFormatError(f"clause has {len(lits)} literals, expected 3", number)
        for lit in lits:
            if lit == 0:
                raise SatFormatError("zero literal", number)
            if abs(lit) > header[0]:
                raise SatFormatError(f"variable {abs(lit)} exceeds n = {header[0]}", number)
        clauses.append(tuple(lits))
    if header is None:
        raise SatFormatError("missing header")
    if len(clauses) != header[1]:
        raise SatFormatError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return SatInstance(header[0], tuple(clauses))


def serialize_sat(inst: SatInstance) -> str:
    lines = [f"p o3sat {inst.variable_count} {inst.clause_count}"]
    lines += [" ".join(str(lit) for lit in c) for c in inst.clauses]
    return "\n".join(lines) + "\n"


def literal_value(lit: int, assignment) -> bool:
    v = assignment[abs(lit) - 1]
    return v if lit > 0 else not v


def true_literal_counts(inst: SatInstance, assignment) -> list[int]:
    if len(assignment) != inst.variable_count:
        raise ValueError(f"assignment has {len(assignment)} values, "
                         f"expected {inst.variable_count}")
    return [sum(literal_value(lit, assignment) for lit in c) for c in inst.clauses]


def is_one_in_three(inst: SatInstance, assignment) -> bool:
    return all(k == 1 for k in true_literal_counts(inst, assignment))


MAX_BRUTE_FORCE_VARIABLES = 24


def solve_one_in_three(inst: SatInstance, max_variables: int = MAX_BRUTE_FORCE_VARIABLES):
    """First satisfying assignment in lexicographic order with True < False.

    Returns a tuple of booleans or None.
    """
    if inst.variable_count > max_variables:
        raise ValueError(f"{inst.variable_count} variables exceeds the brute-force "
                         f"limit of {max_variables}")
    for assignment in product((True, False), repeat=inst.variable_count):
        if is_one_in_three(inst, assignment):
            return assignment
    return None


def format_assignment(assignment) -> str:
    return "".join("T" if v else "F" for v in assignment)


def parse_assignment(text: str, n: int):
    text = text.strip()
    table = {"T": True, "1": True, "F": False, "0": False}
    if len(text) != n or any(ch not in table for ch in text.upper()):
        raise ValueError(f"assignment must be {n} characters from T/F/1/0")
    return tuple(table[ch] for ch in text.upper())
