from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from models.compressionbody import Compressionbody
from models.surface import SurfacePart


class MoveKind(Enum):
    UNTELESCOPE = "untelescope"
    CONSOLIDATE = "consolidate"
    DESTABILIZE = "destabilize"
    UNPERTURB = "unperturb"
    REMOVE_REMOVABLE_ARC = "remove_removable_arc"


class DestabilizationKind(Enum):
    PLAIN = "plain"
    MERIDIONAL = "meridional"
    BOUNDARY = "boundary"
    MERIDIONAL_BOUNDARY = "meridional_boundary"
    GHOST_BOUNDARY = "ghost_boundary"
    GHOST_MERIDIONAL_BOUNDARY = "ghost_meridional_boundary"


    @property
    def is_meridional(self) -> bool:
        return self in (DestabilizationKind.MERIDIONAL, DestabilizationKind.MERIDIONAL_BOUNDARY,
                        DestabilizationKind.GHOST_MERIDIONAL_BOUNDARY)


    @property
    def discards_component(self) -> bool:
        return self not in (DestabilizationKind.PLAIN, DestabilizationKind.MERIDIONAL)


    @property
    def is_ghost(self) -> bool:
        return self in (DestabilizationKind.GHOST_BOUNDARY, DestabilizationKind.GHOST_MERIDIONAL_BOUNDARY)


@dataclass(frozen=True)
class Decorations:
    """
    Arc decorations of one body, used by certificates.

    ``minus_ids`` of None keeps the negative boundary of the body it is applied to.
    """
    minus_ids: Optional[Tuple[str, ...]] = None
    bridge_arcs: int = 0
    vertical_arcs: Dict[str, int] = field(default_factory=dict)
    ghost_edges: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)
    core_loops: int = 0
    pocket_trees: int = 0


    def __hash__(self):
        return hash((self.minus_ids, self.bridge_arcs, tuple(sorted(self.vertical_arcs.items())),
                     self.ghost_edges, self.core_loops, self.pocket_trees))


    @classmethod
    def of(cls, body: Compressionbody, keep_minus: bool = True) -> "Decorations":
        return cls(
            minus_ids=body.minus_ids if keep_minus else None,
            bridge_arcs=body.bridge_arcs,
            vertical_arcs=dict(body.vertical_arcs),
            ghost_edges=body.ghost_edges,
            core_loops=body.core_loops,
            pocket_trees=body.pocket_trees,
        )


    def to_body(self, body_id: str, plus_id: str, minus_ids: Tuple[str, ...] = None) -> Compressionbody:
        return Compressionbody(
            id=body_id,
            plus_id=plus_id,
            minus_ids=tuple(minus_ids if minus_ids is not None else (self.minus_ids or ())),
            bridge_arcs=self.bridge_arcs,
            vertical_arcs=dict(self.vertical_arcs),
            ghost_edges=tuple(self.ghost_edges),
            core_loops=self.core_loops,
            pocket_trees=self.pocket_trees,
        )


@dataclass(frozen=True)
class UntelescopeSpec:
    """
    Certificate for untelescoping one thick surface along a weak reducing pair.

    D- lies in the source body of the thick surface and meets T in ``j``
    points, D+ lies in the target body and meets T in ``i`` points. When a
    compression separates, part 0 of its split is the component away from the
    other disc. ``split_f`` may be left empty; it is then derived.

    Attributes
    ----------
    thick_id : str
        Thick surface being untelescoped
    i : int
        |D+ cap T|, 0 or 1
    j : int
        |D- cap T|, 0 or 1
    split_plus : tuple[SurfacePart, ...]
        Components of H+ (H compressed along D+)
    split_minus : tuple[SurfacePart, ...]
        Components of H- (H compressed along D-)
    split_f : tuple[SurfacePart, ...]
        Components of F (H compressed along both)
    source_pieces : tuple[Decorations, ...]
        Decorations of the pieces of the source body, one per part of split_minus
    target_pieces : tuple[Decorations, ...]
        Decorations of the pieces of the target body, one per part of split_plus
    """
    thick_id: str
    i: int
    j: int
    split_plus: Tuple[SurfacePart, ...]
    split_minus: Tuple[SurfacePart, ...]
    split_f: Tuple[SurfacePart, ...] = field(default_factory=tuple)
    source_pieces: Tuple[Decorations, ...] = field(default_factory=tuple)
    target_pieces: Tuple[Decorations, ...] = field(default_factory=tuple)


    @property
    def separating_minus(self) -> bool:
        return len(self.split_minus) == 2


    @property
    def separating_plus(self) -> bool:
        return len(self.split_plus) == 2


    @property
    def hypothesis(self) -> str:
        if self.separating_minus or self.separating_plus:
            return "separating"
        if len(self.split_f) == 2:
            return "disconnected"
        return "joint_nonseparating"


@dataclass(frozen=True)
class MoveSpec:
    """
    A fully parameterized rewrite move.

    Attributes
    ----------
    kind : MoveKind
        Which move
    thick_id : Optional[str]
        Thick surface the move acts on
    thin_id : Optional[str]
        Thin surface of a consolidation
    untelescope : Optional[UntelescopeSpec]
        Certificate of an untelescoping
    destabilization : Optional[DestabilizationKind]
        Variant of a destabilization
    keep : Optional[SurfacePart]
        Surviving component of a boundary-type destabilization
    discard : Optional[SurfacePart]
        Discarded component of a boundary-type destabilization
    side : Optional[str]
        Body holding the bridge disc of an unperturbing or removable arc
    overrides : tuple[tuple[str, Decorations], ...]
        New decorations for the bodies adjacent to the thick surface
    """
    kind: MoveKind
    thick_id: Optional[str] = None
    thin_id: Optional[str] = None
    untelescope: Optional[UntelescopeSpec] = None
    destabilization: Optional[DestabilizationKind] = None
    keep: Optional[SurfacePart] = None
    discard: Optional[SurfacePart] = None
    side: Optional[str] = None
    overrides: Tuple[Tuple[str, Decorations], ...] = field(default_factory=tuple)


    @classmethod
    def untelescoping(cls, spec: UntelescopeSpec) -> "MoveSpec":
        return cls(kind=MoveKind.UNTELESCOPE, thick_id=spec.thick_id, untelescope=spec)


    @classmethod
    def consolidation(cls, thin_id: str, thick_id: str) -> "MoveSpec":
        return cls(kind=MoveKind.CONSOLIDATE, thin_id=thin_id, thick_id=thick_id)


    @classmethod
    def destabilize(cls, kind: DestabilizationKind, thick_id: str, keep: SurfacePart = None,
                    discard: SurfacePart = None, overrides: Dict[str, Decorations] = None) -> "MoveSpec":
        return cls(kind=MoveKind.DESTABILIZE, thick_id=thick_id, destabilization=kind, keep=keep,
                   discard=discard, overrides=tuple(sorted((overrides or {}).items())))


    @classmethod
    def unperturb(cls, thick_id: str, side: str = None, overrides: Dict[str, Decorations] = None) -> "MoveSpec":
        return cls(kind=MoveKind.UNPERTURB, thick_id=thick_id, side=side,
                   overrides=tuple(sorted((overrides or {}).items())))


    @classmethod
    def remove_removable_arc(cls, thick_id: str, side: str = None,
                             overrides: Dict[str, Decorations] = None) -> "MoveSpec":
        return cls(kind=MoveKind.REMOVE_REMOVABLE_ARC, thick_id=thick_id, side=side,
                   overrides=tuple(sorted((overrides or {}).items())))


    @property
    def override_map(self) -> Dict[str, Decorations]:
        return dict(self.overrides)


    def __str__(self):
        if self.kind == MoveKind.CONSOLIDATE:
            return f"consolidate({self.thin_id}, {self.thick_id})"
        if self.kind == MoveKind.DESTABILIZE:
            return f"destabilize[{self.destabilization.value}]({self.thick_id})"
        if self.kind == MoveKind.UNTELESCOPE:
            return f"untelescope({self.thick_id}, i={self.untelescope.i}, j={self.untelescope.j})"
        return f"{self.kind.value}({self.thick_id})"
