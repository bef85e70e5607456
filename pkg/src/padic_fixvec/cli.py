"""Command-line surface.

Subcommands take a representation spec (a JSON file path or an inline JSON
string), dispatch to the closed-form computations, and print either a
human-readable key/value listing or, with --json, a canonical JSON object
(UTF-8, keys sorted, byte-identical across identical invocations).

Exit codes: 0 success, 1 input error, 2 verification failure.

Spec schema::

    {
      "field": {"p": <prime>, "f": <residue degree, default 1>},
      "rep":   {"type": "induced",
                "blocks": [{"n": <size>, "conductor": <c>}, ...]}
             | {"type": "principal-series", "c1": <c>, "c2": <c>}
             | {"type": "steinberg-twist", "c_chi": <c>}
             | {"type": "supercuspidal",
                "minimal_conductor": <s >= 2>, "twist_conductor": <c>}
    }
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Union

from . import verify
from .budget import parse_budget
from .finite_ring import LocalFieldParams, is_prime
from .characters import num_classes_exact
from .gl2_dims import (
    GL2Representation,
    PrincipalSeries,
    SteinbergTwist,
    Supercuspidal,
    dim_gl2,
    dim_induced_general,
    kirillov_basis_count,
    kirillov_support_interval,
)
from .global_bounds import conductor_bounds, factorize, local_conductor_window
from .representations import (
    GenericRepresentation,
    conductor,
    depth_esi,
    depth_supercuspidal_gl2,
    has_fixed_vector,
    min_level,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2


class SpecError(ValueError):
    """Invalid representation spec; the message carries the field path."""


@dataclass(frozen=True)
class ParsedSpec:
    field: LocalFieldParams
    rep: Union[GenericRepresentation, GL2Representation]


def _as_object(value, path: str) -> dict:
    if not isinstance(value, dict):
        raise SpecError(f"{path}: expected an object, got {type(value).__name__}")
    return value


def _get_int(obj: dict, key: str, path: str, minimum: int, default=None) -> int:
    if key not in obj:
        if default is not None:
            return default
        raise SpecError(f"{path}.{key}: missing required integer")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(
            f"{path}.{key}: expected an integer, got {json.dumps(value)}"
        )
    if value < minimum:
        raise SpecError(f"{path}.{key}: must be >= {minimum}, got {value}")
    return value


def _reject_extra_keys(obj: dict, allowed: set[str], path: str) -> None:
    extra = sorted(set(obj) - allowed)
    if extra:
        raise SpecError(f"{path}: unexpected key(s) {', '.join(extra)}")


def parse_spec(data) -> ParsedSpec:
    """Validate a decoded spec object and build the in-memory representation."""
    root = _as_object(data, "spec")
    _reject_extra_keys(root, {"field", "rep"}, "spec")
    if "field" not in root:
        raise SpecError("spec.field: missing")
    if "rep" not in root:
        raise SpecError("spec.rep: missing")

    field_obj = _as_object(root["field"], "field")
    _reject_extra_keys(field_obj, {"p", "f"}, "field")
    p = _get_int(field_obj, "p", "field", minimum=2)
    if not is_prime(p):
        raise SpecError(f"field.p: must be prime, got {p}")
    f = _get_int(field_obj, "f", "field", minimum=1, default=1)
    field = LocalFieldParams(p, f)

    rep_obj = _as_object(root["rep"], "rep")
    rep_type = rep_obj.get("type")
    if rep_type == "induced":
        _reject_extra_keys(rep_obj, {"type", "blocks"}, "rep")
        blocks = rep_obj.get("blocks")
        if not isinstance(blocks, list) or not blocks:
            raise SpecError("rep.blocks: expected a nonempty array")
        pairs = []
        for i, block in enumerate(blocks):
            block_obj = _as_object(block, f"rep.blocks[{i}]")
            _reject_extra_keys(block_obj, {"n", "conductor"}, f"rep.blocks[{i}]")
            pairs.append((
                _get_int(block_obj, "n", f"rep.blocks[{i}]", minimum=1),
                _get_int(block_obj, "conductor", f"rep.blocks[{i}]", minimum=0),
            ))
        return ParsedSpec(field, GenericRepresentation.from_pairs(pairs))
    if rep_type == "principal-series":
        _reject_extra_keys(rep_obj, {"type", "c1", "c2"}, "rep")
        return ParsedSpec(field, PrincipalSeries(
            _get_int(rep_obj, "c1", "rep", minimum=0),
            _get_int(rep_obj, "c2", "rep", minimum=0),
        ))
    if rep_type == "steinberg-twist":
        _reject_extra_keys(rep_obj, {"type", "c_chi"}, "rep")
        return ParsedSpec(field, SteinbergTwist(
            _get_int(rep_obj, "c_chi", "rep", minimum=0)
        ))
    if rep_type == "supercuspidal":
        _reject_extra_keys(
            rep_obj, {"type", "minimal_conductor", "twist_conductor"}, "rep"
        )
        return ParsedSpec(field, Supercuspidal(
            _get_int(rep_obj, "minimal_conductor", "rep", minimum=2),
            _get_int(rep_obj, "twist_conductor", "rep", minimum=0, default=0),
        ))
    raise SpecError(
        "rep.type: expected one of induced, principal-series, steinberg-twist,"
        f" supercuspidal; got {json.dumps(rep_type)}"
    )


def load_spec(argument: str) -> ParsedSpec:
    """Read a spec from a file path or from an inline JSON string."""
    stripped = argument.strip()
    if stripped.startswith("{"):
        text = stripped
    elif os.path.exists(argument):
        with open(argument, encoding="utf-8") as handle:
            text = handle.read()
    else:
        raise SpecError(
            f"spec: {argument!r} is neither an existing file nor inline JSON"
        )
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec: invalid JSON ({exc})") from exc
    return parse_spec(data)


def spec_to_dict(parsed: ParsedSpec) -> dict:
    """Canonical JSON form of a parsed spec; reparsing it reproduces parsed."""
    rep = parsed.rep
    if isinstance(rep, GenericRepresentation):
        rep_obj = {
            "type": "induced",
            "blocks": [
                {"n": b.n, "conductor": b.conductor} for b in rep.blocks
            ],
        }
    elif isinstance(rep, PrincipalSeries):
        rep_obj = {"type": "principal-series", "c1": rep.c1, "c2": rep.c2}
    elif isinstance(rep, SteinbergTwist):
        rep_obj = {"type": "steinberg-twist", "c_chi": rep.c_chi}
    else:
        rep_obj = {
            "type": "supercuspidal",
            "minimal_conductor": rep.s,
            "twist_conductor": rep.c_chi,
        }
    return {"field": {"p": parsed.field.p, "f": parsed.field.f}, "rep": rep_obj}


def _print_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, ensure_ascii=False))


def _print_table(rows: list[tuple[str, object]]) -> None:
    width = max(len(key) for key, _ in rows)
    for key, value in rows:
        print(f"{key.ljust(width)}  {value}")


def _emit(args, payload: dict, rows: list[tuple[str, object]]) -> int:
    if args.json:
        _print_json(payload)
    else:
        _print_table(rows)
    return EXIT_OK


def _maybe_emit_spec(args, parsed: ParsedSpec) -> bool:
    if getattr(args, "emit_spec", False):
        _print_json(spec_to_dict(parsed))
        return True
    return False


def _bool_str(value: bool) -> str:
    return "true" if value else "false"


def _induced_dim(rep: GenericRepresentation, q: int, m: int) -> int:
    for i, block in enumerate(rep.blocks):
        if block.n >= 2:
            raise SpecError(
                f"rep.blocks[{i}]: dimension of an induced representation "
                f"needs the inner fixed-space dimension of each block, which "
                f"a size-{block.n} block's conductor alone does not determine;"
                " use principal-series, steinberg-twist or supercuspidal for"
                " the GL_2 fine types"
            )
    block_dims = [1 if b.conductor <= m else 0 for b in rep.blocks]
    return dim_induced_general(rep.partition, q, m, block_dims)


def cmd_dim(args) -> int:
    parsed = load_spec(args.spec)
    if _maybe_emit_spec(args, parsed):
        return EXIT_OK
    q, m = parsed.field.q, args.level
    rep = parsed.rep
    if isinstance(rep, GenericRepresentation):
        dim = _induced_dim(rep, q, m)
        branch = "induced from characters: coset index times indicators"
    else:
        dim = dim_gl2(rep, q, m)
        branch = {
            PrincipalSeries: "principal series closed form",
            SteinbergTwist: "Steinberg twist closed form",
            Supercuspidal: "supercuspidal closed form",
        }[type(rep)]
    payload = {"branch": branch, "dimension": dim, "level": m, "q": q}
    rows = [("dimension", dim), ("level", m), ("q", q), ("branch", branch)]
    return _emit(args, payload, rows)


def cmd_has_fixed(args) -> int:
    parsed = load_spec(args.spec)
    if _maybe_emit_spec(args, parsed):
        return EXIT_OK
    q, m = parsed.field.q, args.level
    rep = parsed.rep
    if isinstance(rep, GenericRepresentation):
        answer = has_fixed_vector(rep, m)
    else:
        answer = dim_gl2(rep, q, m) > 0
    payload = {"has_fixed_vector": answer, "level": m, "q": q}
    rows = [("has_fixed_vector", _bool_str(answer)), ("level", m), ("q", q)]
    return _emit(args, payload, rows)


def _gl2_min_level(rep: GL2Representation) -> int:
    if isinstance(rep, PrincipalSeries):
        return max(rep.c1, rep.c2)
    if isinstance(rep, SteinbergTwist):
        return max(rep.c_chi, 1)
    return -(-rep.effective_conductor // 2)


def cmd_min_level(args) -> int:
    parsed = load_spec(args.spec)
    if _maybe_emit_spec(args, parsed):
        return EXIT_OK
    rep = parsed.rep
    if isinstance(rep, GenericRepresentation):
        level = min_level(rep)
    else:
        level = _gl2_min_level(rep)
    payload = {"min_level": level, "q": parsed.field.q}
    rows = [("min_level", level), ("q", parsed.field.q)]
    return _emit(args, payload, rows)


def cmd_conductor(args) -> int:
    parsed = load_spec(args.spec)
    if _maybe_emit_spec(args, parsed):
        return EXIT_OK
    rep = parsed.rep
    if isinstance(rep, GenericRepresentation):
        value = conductor(rep)
        convention = "sum of block conductors"
    elif isinstance(rep, PrincipalSeries):
        value = rep.c1 + rep.c2
        convention = "sum of the two character conductors"
    elif isinstance(rep, Supercuspidal):
        value = rep.effective_conductor
        convention = "max(minimal_conductor, 2 * twist_conductor)"
    else:
        raise SpecError(
            "rep: the conductor of a Steinberg twist is not determined by"
            " the twist conductor carried here; not supported"
        )
    payload = {"conductor": value, "convention": convention}
    rows = [("conductor", value), ("convention", convention)]
    return _emit(args, payload, rows)


def cmd_depth(args) -> int:
    parsed = load_spec(args.spec)
    if _maybe_emit_spec(args, parsed):
        return EXIT_OK
    rep = parsed.rep
    if isinstance(rep, GenericRepresentation):
        if len(rep.blocks) != 1:
            raise SpecError(
                "rep.blocks: depth is computed for a single square-integrable"
                f" block; got {len(rep.blocks)} blocks"
            )
        block = rep.blocks[0]
        depth = depth_esi(block.n, block.conductor)
    elif isinstance(rep, Supercuspidal):
        depth = depth_supercuspidal_gl2(rep.effective_conductor)
    else:
        raise SpecError(
            "rep: depth is supported for induced single-block and"
            " supercuspidal specs only"
        )
    payload = {"depth": str(depth)}
    rows = [("depth", depth)]
    return _emit(args, payload, rows)


def cmd_global_bounds(args) -> int:
    level = factorize(args.level_N)
    bounds = conductor_bounds(args.n, args.level_N)
    windows = [
        {"p": p, "e": e, **dict(zip(("lo", "hi"),
                                    local_conductor_window(args.n, e)))}
        for p, e in level.factorization
    ]
    payload = {
        "N": level.N,
        "factorization": [[p, e] for p, e in level.factorization],
        "local_windows": windows,
        "lower": bounds.lower,
        "n": args.n,
        "upper": bounds.upper,
    }
    factor_str = " * ".join(
        f"{p}^{e}" if e > 1 else str(p) for p, e in level.factorization
    ) or "1"
    window_str = "; ".join(
        f"p={w['p']}: [{w['lo']}, {w['hi']}]" for w in windows
    ) or "(none)"
    rows = [
        ("N", f"{level.N} = {factor_str}"),
        ("n", args.n),
        ("lower", bounds.lower),
        ("upper", bounds.upper),
        ("local windows", window_str),
    ]
    return _emit(args, payload, rows)


def cmd_kirillov_basis(args) -> int:
    parsed = load_spec(args.spec)
    if _maybe_emit_spec(args, parsed):
        return EXIT_OK
    rep = parsed.rep
    if not isinstance(rep, Supercuspidal):
        raise SpecError("rep.type: kirillov-basis needs a supercuspidal spec")
    if rep.c_chi != 0:
        raise SpecError(
            "rep.twist_conductor: kirillov-basis supports minimal"
            " supercuspidals only (twist_conductor 0); twisted conductors of"
            " individual classes are not determined by conductors alone"
        )
    q, r = parsed.field.q, args.level
    dimension = kirillov_basis_count(q, rep.s, args.c_psi, r)
    groups = []
    for i in range(max(r + 1, 0)):
        lo, hi = kirillov_support_interval(rep.s, i, args.c_psi, r)
        classes = num_classes_exact(q, i)
        if lo > hi or classes == 0:
            continue
        groups.append({
            "twist_conductor": i,
            "num_classes": classes,
            "support_min": lo,
            "support_max": hi,
            "count": classes * (hi - lo + 1),
        })
    payload = {
        "c_psi": args.c_psi,
        "dimension": dimension,
        "groups": groups,
        "level": r,
        "q": q,
    }
    rows: list[tuple[str, object]] = [
        ("dimension", dimension), ("level", r),
        ("q", q), ("c_psi", args.c_psi),
    ]
    for g in groups:
        rows.append((
            f"twist conductor {g['twist_conductor']}",
            f"classes {g['num_classes']}, supports "
            f"[{g['support_min']}..{g['support_max']}], count {g['count']}",
        ))
    if not groups:
        rows.append(("basis", "(empty)"))
    return _emit(args, payload, rows)


def cmd_verify(args) -> int:
    budget = parse_budget(args.budget) if args.budget else None
    if args.suite == "all":
        reports = verify.run_all(budget)
    else:
        reports = [verify.SUITES[args.suite](budget)]
    if args.json:
        payload = [
            {
                "suite": r.suite,
                "passed": r.passed,
                "checks": [
                    {"name": c.name, "ok": c.ok, "detail": c.detail}
                    for c in r.checks
                ],
                "notes": r.notes,
            }
            for r in reports
        ]
        _print_json(payload)
    else:
        for r in reports:
            for check in r.checks:
                status = "ok" if check.ok else "FAIL"
                print(f"[{r.suite}] {check.name}: {status} ({check.detail})")
            for note in r.notes:
                print(f"[{r.suite}] NOTE: {note}")
            print(f"[{r.suite}] {'passed' if r.passed else 'FAILED'}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


class _Parser(argparse.ArgumentParser):
    """argparse reports usage errors with exit code 2; this CLI reserves 2
    for verification failures and uses 1 for every input error."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_spec_command(subparsers, name: str, func, help_text: str,
                      with_level: bool):
    sub = subparsers.add_parser(name, help=help_text)
    sub.add_argument("spec", help="path to a spec JSON file, or inline JSON")
    if with_level:
        sub.add_argument("--level", type=int, required=True, metavar="M",
                         help="principal congruence level m >= 0")
    sub.add_argument("--json", action="store_true",
                     help="emit a canonical JSON object")
    sub.add_argument("--emit-spec", action="store_true",
                     help="print the normalized spec JSON and exit")
    sub.set_defaults(func=func)
    return sub


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="padic-fixvec",
        description="Fixed vectors of admissible GL_n representations under"
                    " principal congruence subgroups: dimensions, conductors,"
                    " depths, levels and identity verification.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    _add_spec_command(
        subparsers, "dim", cmd_dim,
        "fixed-space dimension at a level", with_level=True,
    )
    _add_spec_command(
        subparsers, "has-fixed", cmd_has_fixed,
        "whether a nonzero fixed vector exists at a level", with_level=True,
    )
    _add_spec_command(
        subparsers, "min-level", cmd_min_level,
        "least level with a nonzero fixed vector", with_level=False,
    )
    _add_spec_command(
        subparsers, "conductor", cmd_conductor,
        "conductor of the represented data", with_level=False,
    )
    _add_spec_command(
        subparsers, "depth", cmd_depth,
        "depth, printed as an exact fraction", with_level=False,
    )

    bounds = subparsers.add_parser(
        "global-bounds",
        help="conductor bounds from a minimal principal congruence level N",
    )
    bounds.add_argument("--n", type=int, required=True,
                        help="group size n >= 1")
    bounds.add_argument("--level-N", dest="level_N", type=int, required=True,
                        metavar="N", help="minimal level, 1 <= N <= 10^18")
    bounds.add_argument("--json", action="store_true",
                        help="emit a canonical JSON object")
    bounds.set_defaults(func=cmd_global_bounds)

    kirillov = _add_spec_command(
        subparsers, "kirillov-basis", cmd_kirillov_basis,
        "fixed-space basis counts in the Kirillov realization",
        with_level=True,
    )
    kirillov.add_argument("--c-psi", dest="c_psi", type=int, default=0,
                          help="additive character conductor (default 0)")

    ver = subparsers.add_parser(
        "verify", help="run the identity-verification suites",
    )
    ver.add_argument(
        "--suite", default="all",
        choices=["all", "cosets", "characters", "supercuspidal", "windows"],
    )
    ver.add_argument("--budget", default=None,
                     help="enumeration budget, e.g. 10^8, 1e8 or 100000000")
    ver.add_argument("--json", action="store_true",
                     help="emit the reports as a canonical JSON array")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
