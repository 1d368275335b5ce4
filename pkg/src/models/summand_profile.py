from typing import List, Optional

from pydantic import BaseModel, Field, model_validator


class SummandProfile(BaseModel):
    """
    Classical data of the prime summands of a knot.

    The first ``j`` summands are the m-small ones.
    """
    n: int = Field(ge=1)
    j: int = Field(default=0, ge=0)
    tunnel_numbers: List[int] = Field(default_factory=list)
    genera: List[int] = Field(default_factory=list)
    bridge_numbers: Optional[List[int]] = None


    @model_validator(mode="after")
    def check_counts(self) -> "SummandProfile":
        if self.j > self.n:
            raise ValueError(f"j={self.j} exceeds n={self.n}")
        if len(self.tunnel_numbers) != self.n:
            raise ValueError(f"expected {self.n} tunnel numbers, got {len(self.tunnel_numbers)}")
        for name, values in (("tunnel_numbers", self.tunnel_numbers), ("genera", self.genera),
                             ("bridge_numbers", self.bridge_numbers or [])):
            if any(value < 0 for value in values):
                raise ValueError(f"{name} must be non-negative")
        return self
