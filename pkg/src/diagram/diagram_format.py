"""
Line-oriented text format for diagrams and move scripts.

Diagram records::

    meta tkind=<empty|link|graph> valences=[..] flags=<irr?,ssep?,csep?> gbound=<int|none>
    surface <id> role=<thick|thin|boundary> genus=<int> punctures=<int> [drilled=yes]
    body <id> plus=<sid> minus=[<sid>,...] bridge=<int> vertical={<sid>:<int>,...} ghost=[(<sid>,<sid>),...] loops=<int> pockets=<int>
    orient <sid> <bodyid> <bodyid>

Move records::

    untelescope thick=<sid> i=<0|1> j=<0|1> minus=[(g,p),..] plus=[(g,p),..] [f=[(g,p),..]]
                [source_pieces=[<decorations>;..]] [target_pieces=[<decorations>;..]]
    consolidate thin=<sid> thick=<sid>
    destabilize kind=<kind> thick=<sid> [keep=(g,p) discard=(g,p)] [set.<bodyid>=<decorations>]
    unperturb thick=<sid> [side=<bodyid>] [set.<bodyid>=<decorations>]
    remove_removable_arc thick=<sid> [side=<bodyid>] [set.<bodyid>=<decorations>]

where ``<decorations>`` is ``minus=[..]/bridge=../vertical={..}/ghost=[..]/loops=../pockets=..``.
Comments start with ``#``; whitespace inside brackets and around ``=`` is ignored.
"""
import re
from typing import Dict, List, Optional, Tuple

from exceptions.exceptions import DiagramParseException
from models.compressionbody import Compressionbody
from models.diagram import Diagram
from models.graph_pair_meta import GraphPairMeta, TKind
from models.move_spec import Decorations, DestabilizationKind, MoveKind, MoveSpec, UntelescopeSpec
from models.surface import SurfaceComp, SurfacePart, SurfaceRole

OPENERS = "([{"
CLOSERS = ")]}"
FLAG_NAMES = {"irr": "irreducible_flag", "ssep": "every_sphere_separates_flag", "csep": "every_surface_separates_flag"}


def _tokenize(line: str, line_no: int) -> List[str]:
    # "key = value" is one token; "key= other=value" leaves key empty
    line = re.sub(r"\s+=", "=", line.strip())
    line = re.sub(r"=\s+(?![\w.:-]+=)", "=", line)
    tokens, current, depth = [], [], 0
    for char in line:
        if char in OPENERS:
            depth += 1
        elif char in CLOSERS:
            depth -= 1
            if depth < 0:
                raise DiagramParseException(line_no, f"unbalanced '{char}'")
        if char.isspace():
            if depth == 0 and current:
                tokens.append("".join(current))
                current = []
            continue
        current.append(char)
    if depth != 0:
        raise DiagramParseException(line_no, "unbalanced brackets")
    if current:
        tokens.append("".join(current))
    return tokens


def _split_top(text: str, separator: str) -> List[str]:
    parts, current, depth = [], [], 0
    for char in text:
        if char in OPENERS:
            depth += 1
        elif char in CLOSERS:
            depth -= 1
        if char == separator and depth == 0:
            parts.append("".join(current))
            current = []
            continue
        current.append(char)
    parts.append("".join(current))
    return [part for part in parts if part != ""]


def _key_values(tokens: List[str], line_no: int) -> Dict[str, str]:
    values = {}
    for token in tokens:
        if "=" not in token:
            raise DiagramParseException(line_no, f"expected key=value, got '{token}'")
        key, value = token.split("=", 1)
        if key in values:
            raise DiagramParseException(line_no, f"repeated key '{key}'")
        values[key] = value
    return values


def _strip(text: str, opener: str, closer: str, line_no: int) -> str:
    if not (text.startswith(opener) and text.endswith(closer)):
        raise DiagramParseException(line_no, f"expected {opener}...{closer}, got '{text}'")
    return text[1:-1]


def _int(text: str, line_no: int, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise DiagramParseException(line_no, f"{name} must be an integer, got '{text}'")


def _id_list(text: str, line_no: int) -> Tuple[str, ...]:
    return tuple(item for item in _strip(text, "[", "]", line_no).split(",") if item)


def _int_list(text: str, line_no: int) -> Tuple[int, ...]:
    return tuple(_int(item, line_no, "list entry") for item in _id_list(text, line_no))


def _int_map(text: str, line_no: int) -> Dict[str, int]:
    result = {}
    for item in _strip(text, "{", "}", line_no).split(","):
        if not item:
            continue
        if ":" not in item:
            raise DiagramParseException(line_no, f"expected <id>:<int>, got '{item}'")
        key, value = item.rsplit(":", 1)
        result[key] = _int(value, line_no, f"vertical[{key}]")
    return result


def _pairs(text: str, line_no: int) -> List[Tuple[str, str]]:
    inner = _strip(text, "[", "]", line_no)
    pairs = []
    for item in _split_top(inner, ","):
        values = _strip(item, "(", ")", line_no).split(",")
        if len(values) != 2:
            raise DiagramParseException(line_no, f"expected a pair, got '{item}'")
        pairs.append((values[0], values[1]))
    return pairs


def _part(text: str, line_no: int) -> SurfacePart:
    values = _strip(text, "(", ")", line_no).split(",")
    if len(values) != 2:
        raise DiagramParseException(line_no, f"expected (genus,punctures), got '{text}'")
    return SurfacePart(_int(values[0], line_no, "genus"), _int(values[1], line_no, "punctures"))


def _parts(text: str, line_no: int) -> Tuple[SurfacePart, ...]:
    return tuple(SurfacePart(_int(g, line_no, "genus"), _int(p, line_no, "punctures"))
                 for g, p in _pairs(text, line_no))


def _parse_meta(values: Dict[str, str], line_no: int) -> GraphPairMeta:
    try:
        t_kind = TKind(values.get("tkind", "link"))
    except ValueError:
        raise DiagramParseException(line_no, f"unknown tkind '{values.get('tkind')}'")
    flags = {}
    for flag in values.get("flags", "none").split(","):
        if flag in ("", "none"):
            continue
        if flag not in FLAG_NAMES:
            raise DiagramParseException(line_no, f"unknown flag '{flag}'")
        flags[FLAG_NAMES[flag]] = True
    gbound = values.get("gbound", "none")
    return GraphPairMeta(
        t_kind=t_kind,
        vertex_valences=_int_list(values.get("valences", "[]"), line_no),
        heegaard_genus_bound=None if gbound in ("", "none") else _int(gbound, line_no, "gbound"),
        **flags,
    )


def _parse_surface(tokens: List[str], line_no: int) -> SurfaceComp:
    if len(tokens) < 2:
        raise DiagramParseException(line_no, "surface record needs an id")
    values = _key_values(tokens[2:], line_no)
    for key in ("role", "genus", "punctures"):
        if key not in values:
            raise DiagramParseException(line_no, f"surface {tokens[1]} is missing {key}")
    try:
        role = SurfaceRole(values["role"])
    except ValueError:
        raise DiagramParseException(line_no, f"unknown role '{values['role']}'")
    return SurfaceComp(
        id=tokens[1],
        genus=_int(values["genus"], line_no, "genus"),
        punctures=_int(values["punctures"], line_no, "punctures"),
        role=role,
        drilled=values.get("drilled", "no") == "yes",
    )


def _parse_decorations(values: Dict[str, str], line_no: int) -> Decorations:
    return Decorations(
        minus_ids=_id_list(values["minus"], line_no) if "minus" in values else None,
        bridge_arcs=_int(values.get("bridge", "0"), line_no, "bridge"),
        vertical_arcs=_int_map(values.get("vertical", "{}"), line_no),
        ghost_edges=tuple(_pairs(values.get("ghost", "[]"), line_no)),
        core_loops=_int(values.get("loops", "0"), line_no, "loops"),
        pocket_trees=_int(values.get("pockets", "0"), line_no, "pockets"),
    )


def _parse_body(tokens: List[str], line_no: int) -> Compressionbody:
    if len(tokens) < 2:
        raise DiagramParseException(line_no, "body record needs an id")
    values = _key_values(tokens[2:], line_no)
    if "plus" not in values:
        raise DiagramParseException(line_no, f"body {tokens[1]} is missing plus")
    decorations = _parse_decorations(values, line_no)
    return decorations.to_body(tokens[1], values["plus"], decorations.minus_ids or ())


def parse_diagram(text: str) -> Diagram:
    """
    Parse the textual diagram format.

    Raises
    ------
    DiagramParseException
        With the offending line number
    """
    meta = GraphPairMeta()
    surfaces, bodies, orientation = {}, {}, {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = _tokenize(line, line_no)
        record = tokens[0]
        if record == "meta":
            meta = _parse_meta(_key_values(tokens[1:], line_no), line_no)
        elif record == "surface":
            surface = _parse_surface(tokens, line_no)
            if surface.id in surfaces:
                raise DiagramParseException(line_no, f"duplicate surface id {surface.id}")
            surfaces[surface.id] = surface
        elif record == "body":
            body = _parse_body(tokens, line_no)
            if body.id in bodies:
                raise DiagramParseException(line_no, f"duplicate body id {body.id}")
            bodies[body.id] = body
        elif record == "orient":
            if len(tokens) != 4:
                raise DiagramParseException(line_no, "orient record is: orient <sid> <bodyid> <bodyid>")
            orientation[tokens[1]] = (tokens[2], tokens[3])
        else:
            raise DiagramParseException(line_no, f"unknown record '{record}'")
    return Diagram(meta=meta, surfaces=surfaces, bodies=bodies, orientation=orientation)


def _format_ids(ids) -> str:
    return "[" + ",".join(ids) + "]"


def _format_map(values: Dict[str, int]) -> str:
    return "{" + ",".join(f"{key}:{value}" for key, value in sorted(values.items())) + "}"


def _format_pairs(pairs) -> str:
    return "[" + ",".join(f"({a},{b})" for a, b in pairs) + "]"


def _format_part(part: SurfacePart) -> str:
    return f"({part.genus},{part.punctures})"


def _format_parts(parts) -> str:
    return "[" + ",".join(_format_part(part) for part in parts) + "]"


def format_meta(meta: GraphPairMeta) -> str:
    flags = ",".join(meta.flags) or "none"
    gbound = "none" if meta.heegaard_genus_bound is None else str(meta.heegaard_genus_bound)
    valences = "[" + ",".join(str(v) for v in meta.vertex_valences) + "]"
    return f"meta tkind={meta.t_kind.value} valences={valences} flags={flags} gbound={gbound}"


def format_surface(surface: SurfaceComp) -> str:
    line = f"surface {surface.id} role={surface.role.value} genus={surface.genus} punctures={surface.punctures}"
    return line + " drilled=yes" if surface.drilled else line


def format_body(body: Compressionbody) -> str:
    return (f"body {body.id} plus={body.plus_id} minus={_format_ids(body.minus_ids)} bridge={body.bridge_arcs} "
            f"vertical={_format_map(body.vertical_arcs)} ghost={_format_pairs(body.ghost_edges)} "
            f"loops={body.core_loops} pockets={body.pocket_trees}")


def format_diagram(diagram: Diagram) -> str:
    lines = [format_meta(diagram.meta)]
    lines += [format_surface(surface) for _, surface in sorted(diagram.surfaces.items())]
    lines += [format_body(body) for _, body in sorted(diagram.bodies.items())]
    lines += [f"orient {sid} {source} {target}" for sid, (source, target) in sorted(diagram.orientation.items())]
    return "\n".join(lines) + "\n"


def format_decorations(decorations: Decorations) -> str:
    fields = []
    if decorations.minus_ids is not None:
        fields.append(f"minus={_format_ids(decorations.minus_ids)}")
    fields.append(f"bridge={decorations.bridge_arcs}")
    fields.append(f"vertical={_format_map(decorations.vertical_arcs)}")
    fields.append(f"ghost={_format_pairs(decorations.ghost_edges)}")
    fields.append(f"loops={decorations.core_loops}")
    fields.append(f"pockets={decorations.pocket_trees}")
    return "/".join(fields)


def _parse_decoration_text(text: str, line_no: int) -> Decorations:
    values = {}
    for field_text in _split_top(text, "/"):
        if "=" not in field_text:
            raise DiagramParseException(line_no, f"expected key=value in decorations, got '{field_text}'")
        key, value = field_text.split("=", 1)
        values[key] = value
    return _parse_decorations(values, line_no)


def _parse_pieces(text: str, line_no: int) -> Tuple[Decorations, ...]:
    inner = _strip(text, "[", "]", line_no)
    return tuple(_parse_decoration_text(piece, line_no) for piece in _split_top(inner, ";"))


def _overrides(values: Dict[str, str], line_no: int) -> Dict[str, Decorations]:
    return {key[len("set."):]: _parse_decoration_text(value, line_no)
            for key, value in values.items() if key.startswith("set.")}


def _require(values: Dict[str, str], key: str, line_no: int, move: str) -> str:
    if key not in values:
        raise DiagramParseException(line_no, f"{move} is missing {key}")
    return values[key]


def parse_move(line: str, line_no: int = 1) -> MoveSpec:
    tokens = _tokenize(line, line_no)
    move, values = tokens[0], _key_values(tokens[1:], line_no)
    if move == MoveKind.UNTELESCOPE.value:
        spec = UntelescopeSpec(
            thick_id=_require(values, "thick", line_no, move),
            i=_int(_require(values, "i", line_no, move), line_no, "i"),
            j=_int(_require(values, "j", line_no, move), line_no, "j"),
            split_plus=_parts(_require(values, "plus", line_no, move), line_no),
            split_minus=_parts(_require(values, "minus", line_no, move), line_no),
            split_f=_parts(values.get("f", "[]"), line_no),
            source_pieces=_parse_pieces(values.get("source_pieces", "[]"), line_no),
            target_pieces=_parse_pieces(values.get("target_pieces", "[]"), line_no),
        )
        return MoveSpec.untelescoping(spec)
    if move == MoveKind.CONSOLIDATE.value:
        return MoveSpec.consolidation(_require(values, "thin", line_no, move), _require(values, "thick", line_no, move))
    if move == MoveKind.DESTABILIZE.value:
        try:
            kind = DestabilizationKind(_require(values, "kind", line_no, move))
        except ValueError:
            raise DiagramParseException(line_no, f"unknown destabilization kind '{values['kind']}'")
        return MoveSpec.destabilize(
            kind,
            _require(values, "thick", line_no, move),
            keep=_part(values["keep"], line_no) if "keep" in values else None,
            discard=_part(values["discard"], line_no) if "discard" in values else None,
            overrides=_overrides(values, line_no),
        )
    if move == MoveKind.UNPERTURB.value:
        return MoveSpec.unperturb(_require(values, "thick", line_no, move), values.get("side"),
                                  _overrides(values, line_no))
    if move == MoveKind.REMOVE_REMOVABLE_ARC.value:
        return MoveSpec.remove_removable_arc(_require(values, "thick", line_no, move), values.get("side"),
                                             _overrides(values, line_no))
    raise DiagramParseException(line_no, f"unknown move '{move}'")


def parse_moves(text: str) -> List[MoveSpec]:
    moves = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            moves.append(parse_move(line, line_no))
    return moves


def _format_overrides(move: MoveSpec) -> List[str]:
    return [f"set.{body_id}={format_decorations(decorations)}" for body_id, decorations in move.overrides]


def format_move(move: MoveSpec) -> str:
    if move.kind == MoveKind.UNTELESCOPE:
        spec = move.untelescope
        fields = [f"untelescope thick={spec.thick_id} i={spec.i} j={spec.j}",
                  f"minus={_format_parts(spec.split_minus)}", f"plus={_format_parts(spec.split_plus)}"]
        if spec.split_f:
            fields.append(f"f={_format_parts(spec.split_f)}")
        if spec.source_pieces:
            fields.append("source_pieces=[" + ";".join(format_decorations(p) for p in spec.source_pieces) + "]")
        if spec.target_pieces:
            fields.append("target_pieces=[" + ";".join(format_decorations(p) for p in spec.target_pieces) + "]")
        return " ".join(fields)
    if move.kind == MoveKind.CONSOLIDATE:
        return f"consolidate thin={move.thin_id} thick={move.thick_id}"
    if move.kind == MoveKind.DESTABILIZE:
        fields = [f"destabilize kind={move.destabilization.value} thick={move.thick_id}"]
        if move.keep is not None:
            fields.append(f"keep={_format_part(move.keep)}")
        if move.discard is not None:
            fields.append(f"discard={_format_part(move.discard)}")
        return " ".join(fields + _format_overrides(move))
    fields = [f"{move.kind.value} thick={move.thick_id}"]
    if move.side is not None:
        fields.append(f"side={move.side}")
    return " ".join(fields + _format_overrides(move))


def format_moves(moves: List[MoveSpec]) -> str:
    return "".join(format_move(move) + "\n" for move in moves)


def _read_text(path: str) -> str:
    with open(path, "rb") as f:
        data = f.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise DiagramParseException(data[:e.start].count(b"\n") + 1, f"invalid UTF-8 byte 0x{data[e.start]:02x}")


def read_diagram(path: str) -> Diagram:
    return parse_diagram(_read_text(path))


def write_diagram(diagram: Diagram, path: str):
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_diagram(diagram))


def read_moves(path: str) -> List[MoveSpec]:
    return parse_moves(_read_text(path))


def write_moves(moves: List[MoveSpec], path: str):
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_moves(moves))
