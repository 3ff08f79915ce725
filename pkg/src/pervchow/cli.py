"""Command-line surface: JSON in, verdicts and values out.

Every subcommand reads inline JSON, @-free file paths or shorthand strings,
runs one library operation, and emits a deterministic report.  Exit code 0
means every verdict passed, 1 means a check failed, 2 means the input was
malformed or a precondition was violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import abgroup, cocycles, cones, cycles, serialize
from .perversity import GeneralizedBound
from .serialize import SCHEMA_VERSION, InputError
from .strata import Stratification
from .strata import suspend as suspend_strata


@dataclass
class Verdict:
    check: str
    ok: bool
    explanation: str


@dataclass
class Report:
    command: str
    verdicts: list[Verdict] = field(default_factory=list)
    values: dict[str, Any] = field(default_factory=dict)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(v.ok for v in self.verdicts)

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return 2
        return 0 if self.ok else 1

    def to_json(self) -> dict:
        doc: dict[str, Any] = {"schema": SCHEMA_VERSION, "command": self.command, "ok": self.ok}
        if self.error is not None:
            doc["error"] = {"message": self.error}
        else:
            doc["verdicts"] = [
                {"check": v.check, "ok": v.ok, "explanation": v.explanation}
                for v in self.verdicts
            ]
            doc["values"] = self.values
        return doc

    def render(self, pretty: bool) -> str:
        if not pretty:
            return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"
        lines = [f"command: {self.command}"]
        if self.error is not None:
            lines.append(f"error: {self.error}")
        else:
            for v in self.verdicts:
                lines.append(f"[{'PASS' if v.ok else 'FAIL'}] {v.check}: {v.explanation}")
            if self.values:
                lines.append(json.dumps(self.values, indent=2, sort_keys=True))
        lines.append(f"result: {'ok' if self.ok else 'failed'} (exit {self.exit_code})")
        return "\n".join(lines) + "\n"


def _load(text: str) -> Any:
    """Inline JSON, a path to a JSON file, or a shorthand string."""
    s = text.strip()
    if s.startswith(("{", "[")):
        try:
            return json.loads(s)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
    path = Path(s)
    if path.suffix == ".json" or path.is_file():
        try:
            return json.loads(path.read_text())
        except OSError as exc:
            raise InputError(f"cannot read {s!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON in {s!r}: {exc}") from exc
    return s


def _strata(args: argparse.Namespace) -> Stratification:
    return serialize.parse_stratification(_load(args.strata))


def _bound(text: str, *, perversity: bool = False) -> GeneralizedBound:
    return serialize.parse_bound(_load(text), perversity=perversity)


# -- command handlers ----------------------------------------------------


def _cmd_validate(args: argparse.Namespace, report: Report) -> None:
    provided = False
    checks: list[tuple[str, Any]] = [
        ("perversity", lambda: serialize.parse_bound(_load(args.perversity), perversity=True)),
        ("bound", lambda: serialize.parse_bound(_load(args.bound))),
        ("strata", lambda: serialize.parse_stratification(_load(args.strata))),
        ("ring", lambda: serialize.parse_ring(_load(args.ring))),
    ]
    for name, thunk in checks:
        if getattr(args, name.replace("-", "_")) is None:
            continue
        provided = True
        try:
            thunk()
            report.verdicts.append(Verdict(f"valid-{name}", True, f"{name} document is valid"))
        except InputError as exc:
            report.verdicts.append(Verdict(f"valid-{name}", False, str(exc)))
    if args.pattern is not None or args.cocycle is not None or args.joint is not None:
        if args.strata is None:
            raise InputError("--strata is required to validate patterns")
        strata = _strata(args)
        for name, parser in (
            ("pattern", serialize.parse_pattern),
            ("cocycle", serialize.parse_cocycle),
            ("joint", serialize.parse_joint),
        ):
            raw = getattr(args, name)
            if raw is None:
                continue
            provided = True
            try:
                parser(_load(raw), strata)
                report.verdicts.append(Verdict(f"valid-{name}", True, f"{name} document is valid"))
            except InputError as exc:
                report.verdicts.append(Verdict(f"valid-{name}", False, str(exc)))
    if not provided:
        raise InputError("nothing to validate; pass at least one document")


def _summarize(rows: list[tuple], passed: bool) -> str:
    return "; ".join(text for *_, text in rows) if rows else ("ok" if passed else "failed")


def _cmd_check_cycle(args: argparse.Namespace, report: Report) -> None:
    strata = _strata(args)
    pattern = serialize.parse_pattern(_load(args.pattern), strata)
    bound = _bound(args.perversity)
    rows = cycles.perversity_report(pattern, bound)
    ok = all(r[1] for r in rows)
    report.verdicts.append(Verdict("check-cycle", ok, _summarize(rows, ok)))
    report.values["pattern"] = serialize.pattern_to_json(pattern)
    report.values["perversity"] = serialize.bound_to_json(bound)


def _cmd_check_cocycle(args: argparse.Namespace, report: Report) -> None:
    strata = _strata(args)
    pattern = serialize.parse_cocycle(_load(args.cocycle), strata)
    bound = _bound(args.perversity)
    rows = cocycles.cocycle_report(pattern, bound)
    ok = all(r[1] for r in rows)
    report.verdicts.append(Verdict("check-cocycle", ok, _summarize(rows, ok)))
    report.values["cocycle"] = serialize.cocycle_to_json(pattern)
    report.values["perversity"] = serialize.bound_to_json(bound)


def _cmd_check_star(args: argparse.Namespace, report: Report) -> None:
    strata = _strata(args)
    joint = serialize.parse_joint(_load(args.joint), strata)
    c = _bound(args.c)
    rows = cycles.star_report(joint, c)
    ok = all(r[1] for r in rows)
    report.verdicts.append(Verdict("check-star", ok, _summarize(rows, ok)))
    report.values["joint"] = serialize.joint_to_json(joint)
    report.values["c"] = serialize.bound_to_json(c)


def _cmd_push(args: argparse.Namespace, report: Report) -> None:
    strata = _strata(args)
    pattern = serialize.parse_pattern(_load(args.pattern), strata)
    c = _bound(args.c, perversity=True)
    out = cycles.proper_pushforward(pattern, c)
    report.values["pattern"] = serialize.pattern_to_json(out)
    report.values["strata"] = serialize.stratification_to_json(out.strata)


def _cmd_pull(args: argparse.Namespace, report: Report) -> None:
    strata = _strata(args)
    pattern = serialize.parse_pattern(_load(args.pattern), strata)
    out = cycles.flat_pullback(pattern, args.e)
    report.values["pattern"] = serialize.pattern_to_json(out)
    report.values["strata"] = serialize.stratification_to_json(out.strata)


def _cmd_suspend(args: argparse.Namespace, report: Report) -> None:
    strata = _strata(args)
    if args.pattern is not None:
        out = cycles.suspend_pattern(serialize.parse_pattern(_load(args.pattern), strata))
        report.values["pattern"] = serialize.pattern_to_json(out)
        report.values["strata"] = serialize.stratification_to_json(out.strata)
    else:
        report.values["strata"] = serialize.stratification_to_json(suspend_strata(strata))


def _cmd_join(args: argparse.Namespace, report: Report) -> None:
    strata = _strata(args)
    a = serialize.parse_cocycle(_load(args.a), strata)
    b = serialize.parse_cocycle(_load(args.b), strata)
    out = cocycles.join(a, b)
    report.values["cocycle"] = serialize.cocycle_to_json(out)


def _cmd_slice(args: argparse.Namespace, report: Report) -> None:
    strata = _strata(args)
    pattern = serialize.parse_cocycle(_load(args.cocycle), strata)
    count = args.count if args.count is not None else pattern.t
    out = cocycles.slice_with_hyperplanes(pattern, count)
    report.values["pattern"] = serialize.pattern_to_json(out)
    if args.against is not None:
        other = serialize.parse_pattern(_load(args.against), strata)
        report.values["joint"] = serialize.joint_to_json(cocycles.slice_against(pattern, other))


def _cmd_cap(args: argparse.Namespace, report: Report) -> None:
    strata = _strata(args)
    a = serialize.parse_cocycle(_load(args.cocycle), strata)
    b = serialize.parse_pattern(_load(args.pattern), strata)
    out = cocycles.cap_pattern(a, b)
    report.values["pattern"] = serialize.pattern_to_json(out)


def _cmd_groups(args: argparse.Namespace, report: Report) -> None:
    cone = serialize.parse_cone(_load(args.cone))
    group = cones.chow_group(cone, args.r, args.p)
    report.values["group"] = serialize.group_to_json(group)


def _cmd_intersect(args: argparse.Namespace, report: Report) -> None:
    cone = serialize.parse_cone(_load(args.cone))
    a = serialize.parse_cone_class(_load(args.a), cone)
    b = serialize.parse_cone_class(_load(args.b), cone)
    out = cones.intersect(a, b)
    report.values["class"] = serialize.cone_class_to_json(out)


def _pairing_value(result: cones.ConeClass) -> Any:
    from . import chow

    if result.r == 0:
        return chow.degree(result.payload)
    coeffs = list(result.payload.coeffs)
    return coeffs[0] if len(coeffs) == 1 else coeffs


def _cmd_pairing(args: argparse.Namespace, report: Report) -> None:
    cone = serialize.parse_cone(_load(args.cone))
    a = serialize.parse_cone_class(_load(args.a), cone)
    b = serialize.parse_cone_class(_load(args.b), cone)
    result = cones.intersect(a, b)
    report.values["class"] = serialize.cone_class_to_json(result)
    report.values["value"] = _pairing_value(result)


def _cmd_compare(args: argparse.Namespace, report: Report) -> None:
    cone = serialize.parse_cone(_load(args.cone))
    m = cones.comparison_map(cone, args.r, args.p_from, args.p_to)
    report.values["map"] = serialize.map_to_json(m)


def _cmd_snf(args: argparse.Namespace, report: Report) -> None:
    matrix = serialize.parse_matrix(_load(args.matrix))
    form = abgroup.smith_normal_form(matrix, ncols=args.ncols)
    report.verdicts.append(
        Verdict("snf-contract", True, "U*M*V = S with unimodular U, V and a divisibility chain")
    )
    report.values["snf"] = serialize.smith_to_json(form)


def _cmd_exact(args: argparse.Namespace, report: Report) -> None:
    f = serialize.parse_group_map(_load(args.f))
    g = serialize.parse_group_map(_load(args.g))
    try:
        verdict = abgroup.is_exact_at_middle(f, g)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report.verdicts.append(
        Verdict(
            "exact-at-middle",
            verdict,
            "image(f) == kernel(g) in the middle group"
            if verdict
            else "image(f) != kernel(g) in the middle group",
        )
    )
    report.values["exact"] = verdict


def _catalog_values(catalog: cones.ZobelCatalog) -> dict[str, Any]:
    values: dict[str, Any] = {"cone": "zobel", "base": catalog.cone.base.name}
    values["groups"] = {
        f"r={r},p={p}": serialize.group_to_json(cones.chow_group(catalog.cone, r, p))
        for (r, p) in sorted(catalog.expected_groups)
    }
    comparisons = {}
    for key in sorted(catalog.expected_comparisons):
        r_part, move = key.split(":")
        r = int(r_part[1:])
        p_from, p_to = (int(x) for x in move.split("->"))
        m = cones.comparison_map(catalog.cone, r, p_from, p_to)
        comparisons[key] = [list(row) for row in m.matrix]
    values["comparisons"] = comparisons
    values["classes"] = {
        name: serialize.cone_class_to_json(cls) for name, cls in sorted(catalog.classes.items())
    }
    pairings: dict[str, Any] = {}
    for key in sorted(catalog.expected_pairings):
        expected = catalog.expected_pairings[key]
        if expected["kind"] == "rejected":
            a = catalog.cone.cls(2, 2, [1, 0])
            b = catalog.cone.cls(1, 2, [1])
            try:
                cones.intersect(a, b)
                pairings[key] = {"kind": "unexpected-success"}
            except cones.ConeProductError as exc:
                pairings[key] = {"kind": "rejected", "message": str(exc)}
            continue
        left, right = key.split("*")
        a, b = catalog.classes[left], catalog.classes[right]
        if expected["kind"] == "degree":
            pairings[key] = {"kind": "degree", "value": cones.degree_pairing(a, b)}
        else:
            result = cones.intersect(a, b)
            doc = serialize.cone_class_to_json(result)
            doc["kind"] = "class"
            pairings[key] = doc
    values["pairings"] = pairings
    return values


def _catalog_verdicts(catalog: cones.ZobelCatalog, values: dict[str, Any]) -> list[Verdict]:
    verdicts = []
    for (r, p), (free, torsion) in sorted(catalog.expected_groups.items()):
        got = values["groups"][f"r={r},p={p}"]
        ok = got["free_rank"] == free and tuple(got["torsion"]) == tuple(torsion)
        verdicts.append(
            Verdict(
                f"group[r={r},p={p}]",
                ok,
                f"expected free rank {free}, torsion {list(torsion)}; got {got['name']}",
            )
        )
    for key, matrix in sorted(catalog.expected_comparisons.items()):
        got = values["comparisons"][key]
        ok = [list(row) for row in matrix] == got
        verdicts.append(Verdict(f"comparison[{key}]", ok, f"expected {[list(r) for r in matrix]}, got {got}"))
    for key, expected in sorted(catalog.expected_pairings.items()):
        got = values["pairings"][key]
        if expected["kind"] == "rejected":
            ok = got["kind"] == "rejected"
            text = "undefined pairing rejected" if ok else f"expected rejection, got {got}"
        elif expected["kind"] == "degree":
            ok = got["kind"] == "degree" and got["value"] == expected["value"]
            text = f"expected degree {expected['value']}, got {got.get('value')}"
        else:
            ok = (
                got["kind"] == "class"
                and got["mode"] == expected["mode"]
                and got["r"] == expected["r"]
                and got["p"] == expected["p"]
                and got["payload"] == list(expected["payload"])
            )
            text = f"expected {expected['mode']} payload {list(expected['payload'])}, got {got.get('payload')}"
        verdicts.append(Verdict(f"pairing[{key}]", ok, text))
    return verdicts


def _cmd_catalog(args: argparse.Namespace, report: Report) -> None:
    if args.name != "zobel":
        raise InputError(f"unknown catalog {args.name!r}; available: zobel")
    catalog = cones.zobel()
    values = _catalog_values(catalog)
    report.values.update(values)
    if args.verify:
        report.verdicts.extend(_catalog_verdicts(catalog, values))


COMMAND_SCHEMAS: dict[str, dict] = {
    "validate": {
        "description": "Validate any provided documents against their schemas.",
        "inputs": {
            "--perversity": "integer array [p_1, ..., p_d], p_1 = 0, unit steps",
            "--bound": "nondecreasing array of nonnegative integers",
            "--strata": "stratification object {dim, strata: [{i, codim, label}], model} or vertex<d>",
            "--pattern": "cycle pattern {dim, incidence: {\"1\": int|\"empty\", ...}} (needs --strata)",
            "--cocycle": "cocycle {t, targetDim, excess: {\"1\": int, ...}} (needs --strata)",
            "--joint": "joint pattern {a, b, joint, total} (needs --strata)",
            "--ring": "ring presentation object or built-in name",
        },
    },
    "check-cycle": {
        "description": "Check a cycle pattern against a perversity-style bound.",
        "inputs": {
            "--pattern": "cycle pattern {dim, incidence: {\"1\": int|\"empty\", ...}}",
            "--perversity": "integer array bound",
            "--strata": "stratification document or vertex<d>",
        },
    },
    "check-cocycle": {
        "description": "Check a cocycle excess profile against a bound.",
        "inputs": {
            "--cocycle": "cocycle {t, targetDim, excess: {\"1\": int, ...}}",
            "--perversity": "integer array bound",
            "--strata": "stratification document or vertex<d>",
        },
    },
    "check-star": {
        "description": "Check the pairwise intersection condition for two patterns.",
        "inputs": {
            "--joint": "joint pattern {a: pattern, b: pattern, joint: {\"1\": int|\"empty\"}, total: int|\"empty\"}",
            "--c": "integer array shift bound c",
            "--strata": "stratification document or vertex<d>",
        },
    },
    "push": {
        "description": "Proper pushforward of a cycle pattern along collapse data.",
        "inputs": {
            "--pattern": "cycle pattern",
            "--c": "collapse perversity [c_1, ..., c_d]",
            "--strata": "stratification document or vertex<d>",
        },
    },
    "pull": {
        "description": "Flat pullback of a cycle pattern by relative dimension e.",
        "inputs": {
            "--pattern": "cycle pattern",
            "--e": "relative dimension (nonnegative integer)",
            "--strata": "stratification document or vertex<d>",
        },
    },
    "suspend": {
        "description": "Suspend a stratification, and a pattern if provided.",
        "inputs": {
            "--strata": "stratification document or vertex<d>",
            "--pattern": "optional cycle pattern",
        },
    },
    "join": {
        "description": "Fiberwise join of two projective-space valued cocycles.",
        "inputs": {
            "--a": "cocycle with t == targetDim",
            "--b": "cocycle with t == targetDim",
            "--strata": "stratification document or vertex<d>",
        },
    },
    "slice": {
        "description": "Slice a cocycle with t generic hyperplanes into a cycle pattern.",
        "inputs": {
            "--cocycle": "cocycle with t == targetDim",
            "--count": "optional hyperplane count (defaults to t; must equal t)",
            "--against": "optional cycle pattern; adds a properness joint-pattern certificate",
            "--strata": "stratification document or vertex<d>",
        },
    },
    "cap": {
        "description": "Cap product of a cocycle with a cycle pattern.",
        "inputs": {
            "--cocycle": "cocycle with t == targetDim",
            "--pattern": "cycle pattern of dimension >= t",
            "--strata": "stratification document or vertex<d>",
        },
    },
    "groups": {
        "description": "Cycle class group of a cone in dimension r at vertex bound p.",
        "inputs": {
            "--cone": "'zobel', a built-in base name, or {base: <ring>}",
            "--r": "cycle dimension",
            "--p": "vertex excess bound",
        },
    },
    "intersect": {
        "description": "Three-case intersection product of two cone classes.",
        "inputs": {
            "--cone": "'zobel', a built-in base name, or {base: <ring>}",
            "--a": "cone class {r, p, payload} or mode:r[:p]:(coeffs)",
            "--b": "cone class {r, p, payload} or mode:r[:p]:(coeffs)",
        },
    },
    "pairing": {
        "description": "Intersection pairing value (degree when the product has dimension 0).",
        "inputs": {
            "--cone": "'zobel', a built-in base name, or {base: <ring>}",
            "--a": "cone class document or compact spec",
            "--b": "cone class document or compact spec",
        },
    },
    "compare": {
        "description": "Canonical comparison map between vertex bounds p-from <= p-to.",
        "inputs": {
            "--cone": "'zobel', a built-in base name, or {base: <ring>}",
            "--r": "cycle dimension",
            "--p-from": "smaller vertex bound",
            "--p-to": "larger vertex bound",
        },
    },
    "snf": {
        "description": "Smith normal form of an integer matrix.",
        "inputs": {
            "--matrix": "array of integer rows",
            "--ncols": "optional column count for matrices with no rows",
        },
    },
    "exact": {
        "description": "Exactness of A -f-> B -g-> C at the middle group.",
        "inputs": {
            "--f": "group map {source: {rank, relations}, target: {...}, matrix}",
            "--g": "group map {source: {rank, relations}, target: {...}, matrix}",
        },
    },
    "catalog": {
        "description": "Print the group/comparison/pairing table of a named catalog.",
        "inputs": {
            "name": "catalog name (zobel)",
            "--verify": "also check the table against its frozen expectations",
        },
    },
    "schema": {
        "description": "Print the input schema for a command.",
        "inputs": {"name": "command name"},
    },
}


def emit_schema(command: str) -> dict:
    """The input schema document for ``command``."""
    if command not in COMMAND_SCHEMAS:
        raise InputError(f"unknown command {command!r}")
    doc = {"schema": SCHEMA_VERSION, "command": command}
    doc.update(COMMAND_SCHEMAS[command])
    return doc


def _cmd_schema(args: argparse.Namespace, report: Report) -> None:
    report.values["schema_of"] = args.name
    report.values.update(emit_schema(args.name))


_HANDLERS = {
    "validate": _cmd_validate,
    "check-cycle": _cmd_check_cycle,
    "check-cocycle": _cmd_check_cocycle,
    "check-star": _cmd_check_star,
    "push": _cmd_push,
    "pull": _cmd_pull,
    "suspend": _cmd_suspend,
    "join": _cmd_join,
    "slice": _cmd_slice,
    "cap": _cmd_cap,
    "groups": _cmd_groups,
    "intersect": _cmd_intersect,
    "pairing": _cmd_pairing,
    "compare": _cmd_compare,
    "snf": _cmd_snf,
    "exact": _cmd_exact,
    "catalog": _cmd_catalog,
    "schema": _cmd_schema,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pervchow",
        description="Exact checks and products for perversity incidence data on stratified varieties.",
    )
    parser.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate documents")
    for flag in ("--perversity", "--bound", "--strata", "--pattern", "--cocycle", "--joint", "--ring"):
        p.add_argument(flag)

    p = sub.add_parser("check-cycle", help="perversity membership of a cycle pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--perversity", required=True)
    p.add_argument("--strata", required=True)

    p = sub.add_parser("check-cocycle", help="membership of a cocycle excess profile")
    p.add_argument("--cocycle", required=True)
    p.add_argument("--perversity", required=True)
    p.add_argument("--strata", required=True)

    p = sub.add_parser("check-star", help="pairwise intersection condition")
    p.add_argument("--joint", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--strata", required=True)

    p = sub.add_parser("push", help="proper pushforward of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--strata", required=True)

    p = sub.add_parser("pull", help="flat pullback of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--strata", required=True)

    p = sub.add_parser("suspend", help="suspend strata (and optionally a pattern)")
    p.add_argument("--strata", required=True)
    p.add_argument("--pattern")

    p = sub.add_parser("join", help="fiberwise join of cocycles")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--strata", required=True)

    p = sub.add_parser("slice", help="slice a cocycle into a cycle pattern")
    p.add_argument("--cocycle", required=True)
    p.add_argument("--count", type=int)
    p.add_argument("--against")
    p.add_argument("--strata", required=True)

    p = sub.add_parser("cap", help="cap product of a cocycle with a pattern")
    p.add_argument("--cocycle", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--strata", required=True)

    p = sub.add_parser("groups", help="cone cycle class group")
    p.add_argument("--cone", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("intersect", help="intersection product of cone classes")
    p.add_argument("--cone", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("pairing", help="intersection pairing value")
    p.add_argument("--cone", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("compare", help="comparison map between vertex bounds")
    p.add_argument("--cone", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p-from", dest="p_from", type=int, required=True)
    p.add_argument("--p-to", dest="p_to", type=int, required=True)

    p = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--ncols", type=int)

    p = sub.add_parser("exact", help="exactness of a two-step sequence of group maps")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)

    p = sub.add_parser("catalog", help="named catalog of groups and pairings")
    p.add_argument("name")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("schema", help="input schema of a command")
    p.add_argument("name")

    return parser


def run(argv: list[str]) -> Report:
    """Parse arguments, dispatch, and return the report (no printing)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    report = Report(command=args.command)
    try:
        _HANDLERS[args.command](args, report)
    except ValueError as exc:  # covers InputError and precondition violations
        report.error = str(exc)
    return report


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else argv
    pretty = "--pretty" in argv
    if pretty:
        argv = [a for a in argv if a != "--pretty"]
    report = run(argv)
    sys.stdout.write(report.render(pretty))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
