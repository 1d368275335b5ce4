from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union


class SurfaceRole(Enum):
    THICK = "thick"
    THIN = "thin"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class SurfacePart:
    """
    Abstract (genus, punctures) data of one component produced by a compression.

    Attributes
    ----------
    genus : int
        Genus of the component
    punctures : int
        Number of points in which the component meets T
    """
    genus: int
    punctures: int


    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus


    @property
    def extent(self) -> Fraction:
        return Fraction(self.punctures - self.euler_characteristic, 2)


    def is_sphere(self) -> bool:
        return self.genus == 0


@dataclass(frozen=True)
class SurfaceComp:
    """
    One component of the thick, thin or boundary surfaces of a diagram.

    Surfaces are abstract: only genus and the number of punctures are stored.
    The Euler characteristic and extent are derived.

    Attributes
    ----------
    id : str
        Identifier unique within the diagram
    genus : int
        Genus of the closed orientable surface
    punctures : int
        Number of points of intersection with T
    role : SurfaceRole
        Whether the component is thick, thin or part of the boundary of M
    drilled : bool
        Boundary sphere standing for an interior vertex of T with valence punctures
    """
    id: str
    genus: int
    punctures: int
    role: SurfaceRole
    drilled: bool = False


    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus


    @property
    def extent(self) -> Fraction:
        return Fraction(self.punctures - self.euler_characteristic, 2)


    @property
    def part(self) -> SurfacePart:
        return SurfacePart(self.genus, self.punctures)


    def is_sphere(self) -> bool:
        return self.genus == 0


    def is_unpunctured_sphere(self) -> bool:
        return self.genus == 0 and self.punctures == 0


    def with_part(self, part: SurfacePart) -> "SurfaceComp":
        return SurfaceComp(self.id, part.genus, part.punctures, self.role, self.drilled)


    def __str__(self):
        return f"{self.id}({self.role.value}, g={self.genus}, p={self.punctures})"


def ext(surfaces: Union[SurfaceComp, SurfacePart, Iterable]) -> Fraction:
    """
    Extent of a surface, summed over components.

    Parameters
    ----------
    surfaces : SurfaceComp, SurfacePart or iterable of them
        A single component or a collection of components

    Returns
    -------
    Fraction
        (punctures - euler characteristic) / 2, added up component by component
    """
    if isinstance(surfaces, (SurfaceComp, SurfacePart)):
        return surfaces.extent
    return sum((surface.extent for surface in surfaces), Fraction(0))


def ext_squared(surfaces: Iterable) -> Fraction:
    return sum((surface.extent ** 2 for surface in surfaces), Fraction(0))


def euler_characteristic(surfaces: Iterable) -> int:
    return sum(surface.euler_characteristic for surface in surfaces)
