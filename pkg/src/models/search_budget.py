import json
from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class SearchBudget(BaseModel):
    """
    Limits of a bounded minimization run.

    Attributes
    ----------
    max_depth : int
        Longest move script explored
    max_diagrams : int
        Most distinct diagrams visited before giving up
    netchi_cap : Optional[int]
        The cap x on netchi of visited diagrams, None for no cap
    width_tracking : bool
        Minimize width as well as net extent; needs the width hypothesis flags
    beam_width : int
        Diagrams kept per depth, best first with canonical tie-break
    parallel : bool
        Expand the frontier in a process pool
    num_workers : Optional[int]
        Pool size, CPU count when None
    seed : int
        Seed of the random corpus generators
    heegaard_genus_bound : Optional[int]
        Asserted g(M); the cap must then be at least 2g(M) - 2
    enumeration_limits : tuple[int, int, int]
        (max genus, max punctures, max minus components) for body enumeration
    """
    max_depth: int = Field(default=2, ge=1)
    max_diagrams: int = Field(default=5000, ge=1)
    netchi_cap: Optional[int] = None
    width_tracking: bool = False
    beam_width: int = Field(default=64, ge=1)
    parallel: bool = False
    num_workers: Optional[int] = Field(default=None, ge=1)
    seed: int = 0
    heegaard_genus_bound: Optional[int] = Field(default=None, ge=0)
    enumeration_limits: Tuple[int, int, int] = (2, 6, 3)


    @model_validator(mode="after")
    def check_cap(self) -> "SearchBudget":
        if self.netchi_cap is not None and self.heegaard_genus_bound is not None:
            floor = 2 * self.heegaard_genus_bound - 2
            if self.netchi_cap < floor:
                raise ValueError(f"netchi cap {self.netchi_cap} is below 2g(M) - 2 = {floor}")
        if any(limit < 0 for limit in self.enumeration_limits):
            raise ValueError("enumeration limits must be non-negative")
        return self


    @classmethod
    def from_json(cls, path: str, **overrides) -> "SearchBudget":
        """
        Load a preset and apply overrides; overrides of None are ignored.
        """
        with open(path, "r") as f:
            data = json.load(f)
        data.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**data)


    def admits(self, netchi) -> bool:
        return self.netchi_cap is None or Fraction(netchi) <= self.netchi_cap
