from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass
class WorkCounters:
    """Elementary-operation counts collected by the linear-time pipeline."""

    label_touches: int = 0  # initial labelling: one per vertex + one per adjacency entry
    bin_moves: int = 0  # vertex relocations B_k -> B_k+1
    pivot_pushes: int = 0
    refine_moves: int = 0  # neighbor relocations inside refined classes
    segment_splits: int = 0
    reorder_touches: int = 0

    def core_total(self) -> int:
        """The four counters the linearity bound is stated over."""
        return self.label_touches + self.bin_moves + self.pivot_pushes + self.refine_moves

    def as_dict(self) -> dict[str, int]:
        return asdict(self)
