"""
hopfcase command line: structure files in, exact reports out.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical error.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from bounds import (
    RuleContext,
    dim14_conclusion,
    enumerate_shapes,
    evaluate_shape,
    pq_checker,
    pq_sweep,
    reports_frame,
    semisimple_dimensions,
    semisimple_shapes,
)
from cli.formats import (
    Structure,
    format_vector,
    json_default,
    parse_vector,
    read_structure,
    write_structure,
)
from coalgebra import (
    Coalgebra,
    SplittingSettings,
    check_algebra,
    check_coalgebra,
    coradical,
    coradical_filtration,
    grouplikes,
    nichols_data,
    skew_primitives,
)
from config import Config
from exactmath.linalg import Subspace
from hopf import (
    HopfAlgebra,
    antipode_order,
    check_bialgebra,
    compute_antipode,
    generated_hopf_subalgebra,
    stable_coalgebra_search,
)
from matrixlike import MatrixLikeSpan, classify
from utils.exceptions import HopfCaseError, InternalInvariantError, MathematicalError, ValidationError
from utils.logger import configure_algebra_logger, get_algebra_logger
from zoo import HOPF_FAMILIES, ZooFamily, build, parse_zoo_spec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors raised instead of exiting with status 2."""

    def error(self, message: str):
        raise ValidationError(f"{self.prog}: {message}", {"usage": self.format_usage().strip()})


@dataclass
class Runtime:
    config: Config
    settings: SplittingSettings
    as_json: bool

    @property
    def json_indent(self) -> int:
        return int(self.config.get("reports", "json_indent", 2))


@dataclass
class CommandResult:
    payload: Dict[str, Any]
    text: str


def _coalgebra(obj: Structure) -> Coalgebra:
    return obj.coalgebra if isinstance(obj, HopfAlgebra) else obj


def _hopf(obj: Structure, command: str) -> HopfAlgebra:
    if not isinstance(obj, HopfAlgebra):
        raise ValidationError(f"{command} needs a structure file with multiplication and unit", {"command": command})
    return obj


def _vectors(text: str, c: Coalgebra) -> List[np.ndarray]:
    return [parse_vector(part, c) for part in text.split("|") if part.strip()]


# -- commands -------------------------------------------------------------------------

def cmd_check(args, runtime: Runtime) -> CommandResult:
    obj = read_structure(args.file)
    c = _coalgebra(obj)
    reports = [check_coalgebra(c)]
    payload: Dict[str, Any] = {"dim": c.dim}
    if isinstance(obj, HopfAlgebra):
        reports += [check_algebra(obj.algebra), check_bialgebra(obj)]
        if all(r.ok for r in reports):
            compute_antipode(obj)
            payload["antipode"] = "verified"
    payload["reports"] = [r.to_dict() for r in reports]
    payload["ok"] = all(r.ok for r in reports)
    lines = [f"{r.checked}: {'ok' if r.ok else f'{len(r.violations)} violations'}" for r in reports]
    if "antipode" in payload:
        lines.append("antipode: verified two-sided")
    return CommandResult(payload, "\n".join(lines))


def _components_frame(components, c: Coalgebra) -> pd.DataFrame:
    rows = [
        {"index": comp.index, "d": comp.d, "dim": comp.dim,
         "grouplike": format_vector(comp.grouplike, c.basis_names) if comp.is_grouplike else ""}
        for comp in components
    ]
    return pd.DataFrame(rows, columns=["index", "d", "dim", "grouplike"])


def cmd_coradical(args, runtime: Runtime) -> CommandResult:
    c = _coalgebra(read_structure(args.file))
    c0, components = coradical(c, runtime.settings)
    frame = _components_frame(components, c)
    payload = {"dim": c.dim, "coradical_dim": c0.dim, "components": frame.to_dict(orient="records")}
    return CommandResult(payload, f"C_0 dim {c0.dim}\n{frame.to_string(index=False)}")


def cmd_filtration(args, runtime: Runtime) -> CommandResult:
    c = _coalgebra(read_structure(args.file))
    layers = coradical_filtration(c, int(runtime.config.get("nichols", "max_layers", 64)))
    dims = [layer.dim for layer in layers]
    parts = [f"C_{n} dim {d}" for n, d in enumerate(dims)]
    parts[-1] += " = H" if dims[-1] == c.dim else ""
    return CommandResult({"dim": c.dim, "filtration": dims}, ", ".join(parts))


def cmd_nichols(args, runtime: Runtime) -> CommandResult:
    c = _coalgebra(read_structure(args.file))
    verify = bool(runtime.config.get("nichols", "verify_identity", True))
    nd = nichols_data(c, args.seed, runtime.settings, verify=verify)
    table = pd.DataFrame(
        [{"tau": tau, "gamma": gamma, "dim": dim} for (tau, gamma), dim in sorted(nd.isotypic.items())],
        columns=["tau", "gamma", "dim"],
    )
    payload = {
        "seed": args.seed,
        "coradical_dim": nd.coradical.dim,
        "kernel_dim": nd.I.dim,
        "P": [space.dim for space in nd.P],
        "components": [{"index": comp.index, "d": comp.d} for comp in nd.components],
        "isotypic": table.to_dict(orient="records"),
    }
    text = [
        f"C_0 dim {nd.coradical.dim}, ker π dim {nd.I.dim}",
        "P_n dims: " + ", ".join(f"P_{n} {space.dim}" for n, space in enumerate(nd.P, start=1)),
        table.to_string(index=False) if len(table) else "P_1 = 0",
    ]
    return CommandResult(payload, "\n".join(text))


def cmd_grouplikes(args, runtime: Runtime) -> CommandResult:
    c = _coalgebra(read_structure(args.file))
    group = [format_vector(g, c.basis_names) for g in grouplikes(c, runtime.settings)]
    return CommandResult({"count": len(group), "grouplikes": group},
                         "\n".join(f"g{i} = {g}" for i, g in enumerate(group)) or "no grouplikes")


def cmd_skewprim(args, runtime: Runtime) -> CommandResult:
    c = _coalgebra(read_structure(args.file))
    group = grouplikes(c, runtime.settings)
    for name, index in (("g", args.g), ("h", args.h)):
        if not 0 <= index < len(group):
            raise ValidationError(f"--{name} is not a grouplike index", {name: index, "count": len(group)})
    space = skew_primitives(c, group[args.g], group[args.h], runtime.settings)
    payload = {"g": args.g, "h": args.h, "dim": space.dim, "trivial_dim": space.trivial.dim,
               "nontrivial_dim": space.nontrivial_dim, "nontrivial": space.nontrivial}
    text = f"P_{{g{args.g},g{args.h}}} dim {space.dim}, nontrivial part dim {space.nontrivial_dim}"
    return CommandResult(payload, text)


def cmd_antipode(args, runtime: Runtime) -> CommandResult:
    h = _hopf(read_structure(args.file), "antipode")
    s = compute_antipode(h)
    order = antipode_order(h, runtime.settings)
    names = h.coalgebra.basis_names
    images = {names[j]: format_vector(s[:, j], names) for j in range(h.dim)}
    payload = {"images": images, "order": order.to_dict()}
    lines = [f"S({name}) = {image}" for name, image in images.items()]
    lines.append(f"order {order.order}, bound {order.bound}" + ("" if order.certified else " (uncertified)"))
    return CommandResult(payload, "\n".join(lines))


def cmd_subalgebra(args, runtime: Runtime) -> CommandResult:
    h = _hopf(read_structure(args.file), "subalgebra")
    seed = Subspace.span(_vectors(args.seed_basis, h.coalgebra), h.dim, h.field)
    sub = generated_hopf_subalgebra(h, seed)
    basis = [format_vector(v, h.coalgebra.basis_names) for v in sub.vectors()]
    return CommandResult({"dim": sub.dim, "basis": basis},
                         f"generated Hopf subalgebra dim {sub.dim}\n" + "\n".join(basis))


def cmd_classify2x2(args, runtime: Runtime) -> CommandResult:
    c = _coalgebra(read_structure(args.file))
    vectors = _vectors(args.span, c)
    if len(vectors) != 4:
        raise ValidationError("--span needs four vectors e11|e12|e21|e22", {"given": len(vectors)})
    result = classify(MatrixLikeSpan(c, vectors))
    return CommandResult(result.to_dict(), f"{result.label} ({result.case})")


def cmd_stable_search(args, runtime: Runtime) -> CommandResult:
    h = _hopf(read_structure(args.file), "stable-search")
    _, components = coradical(h.coalgebra, runtime.settings)
    for name, index in (("c", args.c), ("d", args.d)):
        if not 0 <= index < len(components):
            raise ValidationError(f"--{name} is not a component index", {name: index, "count": len(components)})
    result = stable_coalgebra_search(h, components[args.c], components[args.d])
    payload = result.to_dict()
    checks = ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in result.checks.items())
    return CommandResult(payload, f"{result.outcome.value}: dim E {payload['dim_E']}, dim F {payload['dim_F']}\n{checks}")


def cmd_bounds(args, runtime: Runtime) -> CommandResult:
    context = RuleContext(
        assert_no_skew_primitive=args.assert_no_skew_primitive
        or bool(runtime.config.get("bounds", "assert_no_skew_primitive", False))
    )
    include_pointed = args.include_pointed or bool(runtime.config.get("bounds", "include_pointed", False))
    reports = [evaluate_shape(shape, context) for shape in enumerate_shapes(args.dim, include_pointed)]
    payload: Dict[str, Any] = {
        "dim": args.dim,
        "reports": [r.to_dict() for r in reports],
        "semisimple_branch": semisimple_shapes(args.dim),
        "open": sum(r.open for r in reports),
    }
    text = reports_frame(reports).to_string(index=False)
    if args.dim == 14 and payload["open"] == 0:
        payload["conclusion"] = dim14_conclusion()
        text += f"\n{payload['conclusion']}"
    return CommandResult(payload, text)


def cmd_pq(args, runtime: Runtime) -> CommandResult:
    if args.sweep:
        verdicts = pq_sweep()
        dims = semisimple_dimensions()
        frame = pd.DataFrame(
            [{"p": v.p, "q": v.q, "dim": v.dim, "outcome": v.outcome.value} for v in verdicts],
            columns=["p", "q", "dim", "outcome"],
        )
        payload = {"verdicts": [v.to_dict() for v in verdicts], "semisimple_dimensions": dims}
        return CommandResult(payload, f"{frame.to_string(index=False)}\nsemisimple: {', '.join(map(str, dims))}")
    if args.p is None or args.q is None:
        raise ValidationError("pq needs --p and --q, or --sweep")
    verdict = pq_checker(args.p, args.q)
    lines = [f"dim {verdict.dim}: {verdict.outcome.value}"]
    lines += [f"  {s.case}: needs {s.requirement}; contradiction={s.contradiction}" for s in verdict.steps]
    return CommandResult(verdict.to_dict(), "\n".join(lines))


def cmd_zoo(args, runtime: Runtime) -> CommandResult:
    if args.action == "list":
        families = [{"family": f.value, "hopf": f in HOPF_FAMILIES} for f in ZooFamily]
        frame = pd.DataFrame(families, columns=["family", "hopf"])
        return CommandResult({"families": families}, frame.to_string(index=False))
    zoo_spec = parse_zoo_spec(args.tokens)
    conductor = args.conductor
    if conductor is None:
        conductor = math.lcm(zoo_spec.default_conductor(), int(runtime.config.get("field", "default_conductor", 1)))
    zoo_spec = type(zoo_spec)(zoo_spec.family, zoo_spec.params, zoo_spec.parts, conductor)
    obj = build(zoo_spec)
    if not args.out:
        raise ValidationError("zoo emit needs --out")
    write_structure(obj, args.out, name=zoo_spec.label)
    c = _coalgebra(obj)
    return CommandResult({"family": zoo_spec.label, "dim": c.dim, "conductor": c.field.conductor, "out": args.out},
                         f"wrote {zoo_spec.label} (dim {c.dim}) to {args.out}")


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hopfcase", description="Exact coalgebra and Hopf algebra case analysis")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--config", help="YAML file overlaid on the default configuration")
    parser.add_argument("--log-level", help="override logging.level")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def with_file(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="structure file")
        p.set_defaults(handler=handler)
        return p

    with_file("check", cmd_check, "verify the axioms")
    with_file("coradical", cmd_coradical, "simple components of the coradical")
    with_file("filtration", cmd_filtration, "coradical filtration dimensions")
    p = with_file("nichols", cmd_nichols, "Nichols projection, P_n and isotypic table")
    p.add_argument("--seed", type=int, default=None, help="randomized lift seed (default: canonical lift)")
    with_file("grouplikes", cmd_grouplikes, "grouplike elements")
    p = with_file("skewprim", cmd_skewprim, "(g, h)-skew-primitives")
    p.add_argument("--g", type=int, required=True, help="grouplike index")
    p.add_argument("--h", type=int, required=True, help="grouplike index")
    with_file("antipode", cmd_antipode, "antipode and its order")
    p = with_file("subalgebra", cmd_subalgebra, "Hopf subalgebra generated by vectors")
    p.add_argument("--seed-basis", required=True, help="vectors separated by '|'")
    p = with_file("classify2x2", cmd_classify2x2, "classify a matrix-like spanning set")
    p.add_argument("--span", required=True, help="e11|e12|e21|e22")
    p = with_file("stable-search", cmd_stable_search, "S-stable coalgebra search on two swapped components")
    p.add_argument("--c", type=int, required=True, help="component index of C")
    p.add_argument("--d", type=int, required=True, help="component index of D")

    p = sub.add_parser("bounds", help="coradical shape exclusion report")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--assert-no-skew-primitive", action="store_true")
    p.add_argument("--include-pointed", action="store_true")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("pq", help="semisimplicity in odd dimension pq")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--sweep", action="store_true")
    p.set_defaults(handler=cmd_pq)

    p = sub.add_parser("zoo", help="example structures")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("tokens", nargs="*", help="family and parameters")
    p.add_argument("--out", help="structure file to write")
    p.add_argument("--conductor", type=int, help="build over Q(ζ_n)")
    p.set_defaults(handler=cmd_zoo)
    return parser


def _emit_error(error: HopfCaseError, code: int) -> int:
    sys.stderr.write(json.dumps({**error.to_dict(), "exit_code": code}, default=json_default, ensure_ascii=False) + "\n")
    return code


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        config = Config.load(args.config)
        logging_settings = config.section("logging")
        if args.log_level:
            logging_settings["level"] = args.log_level
        configure_algebra_logger(logging_settings)
        runtime = Runtime(config, SplittingSettings.from_config(config), args.json)
        result = args.handler(args, runtime)
    except MathematicalError as e:
        return _emit_error(e, EXIT_MATH)
    except InternalInvariantError as e:
        get_algebra_logger().log_error(e, "internal invariant", e.details)
        return _emit_error(e, EXIT_MATH)
    except HopfCaseError as e:
        return _emit_error(e, EXIT_USAGE)
    if runtime.as_json:
        print(json.dumps(result.payload, indent=runtime.json_indent, default=json_default, ensure_ascii=False))
    else:
        print(result.text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
