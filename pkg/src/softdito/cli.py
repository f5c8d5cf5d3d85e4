"""Command line front end: parse a declaration file, run one command,
emit a human summary and a machine-readable JSON record.

Exit status: 0 when every requested check passes, 1 when a check
reports false or a violation, 2 on parse or usage errors.

The JSON record has the fixed key order {command, inputs, verdict,
witness, timing} and is byte-identical across runs: the timing field is
pinned to 0.0 so reports can serve as diffable regression artifacts;
wall-clock time is printed on the human side only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .core import SoftDomainError
from .cotopology import check_cotopology, check_kappa_axiom, closure, is_kappa_continuous
from .counterexamples import PROPERTIES, find_counterexample
from .ditopology import check_dito_axiom, check_ditopology, is_dito_continuous
from .dsl import SpecDocument, SpecError, parse
from .enumeration import (
    BoundsError,
    EnumBounds,
    enumerate_cotopologies,
    enumerate_maps,
    enumerate_soft_sets,
    enumerate_topologies,
)
from .results import AXIOMS
from .theorems import run_theorem_suite
from .topology import check_tau_axiom, check_topology, format_soft_set, interior, is_tau_continuous

COMMANDS = (
    "check",
    "interior",
    "closure",
    "axioms",
    "continuity",
    "enumerate",
    "verify-theorems",
)


class UsageError(ValueError):
    pass


@dataclass
class CommandReport:
    command: str
    inputs: dict
    verdict: object
    witness: object
    human: str
    exit_code: int

    def record(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "witness": self.witness,
            "timing": 0.0,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.record(), indent=2, ensure_ascii=True) + "\n"


def _space(document: SpecDocument, name: str):
    for kind, table in (
        ("topology", document.topologies),
        ("cotopology", document.cotopologies),
        ("ditopology", document.ditopologies),
    ):
        if name in table:
            return kind, table[name]
    raise UsageError(f"unknown space {name!r}")


def _require(value, message: str):
    if value is None:
        raise UsageError(message)
    return value


def _run_check(document: SpecDocument, inputs: dict) -> CommandReport:
    verdict: dict = {}
    witness: dict = {}
    lines = []
    ok_all = True
    for name, tau in document.topologies.items():
        report = check_topology(tau.ctx, tau.members)
        verdict[name] = {"kind": "topology", "ok": report.ok}
        if not report.ok:
            witness[name] = report.to_json()["violations"]
            ok_all = False
        lines.append(f"topology {name}: {'ok' if report.ok else f'{len(report.violations)} violations'}")
    for name, kappa in document.cotopologies.items():
        report = check_cotopology(kappa.ctx, kappa.members)
        verdict[name] = {"kind": "cotopology", "ok": report.ok}
        if not report.ok:
            witness[name] = report.to_json()["violations"]
            ok_all = False
        lines.append(f"cotopology {name}: {'ok' if report.ok else f'{len(report.violations)} violations'}")
    for name, dito in document.ditopologies.items():
        report = check_ditopology(dito.ctx, dito.tau.members, dito.kappa.members)
        verdict[name] = {"kind": "ditopology", "ok": report.ok}
        if not report.ok:
            witness[name] = report.to_json()
            ok_all = False
        lines.append(f"ditopology {name}: {'ok' if report.ok else 'violations'}")
    if not lines:
        lines.append("nothing to check: no spaces declared")
    return CommandReport(
        "check", inputs, verdict, witness or None, "\n".join(lines), 0 if ok_all else 1
    )


def _run_interior(document: SpecDocument, set_name: str, space_name: str, inputs: dict) -> CommandReport:
    soft_set = document.softsets.get(set_name) or _usage_unknown_set(set_name)
    kind, space = _space(document, space_name)
    if kind == "ditopology":
        space = space.tau
    elif kind != "topology":
        raise UsageError(f"interior needs a topology, {space_name!r} is a {kind}")
    result = interior(space, soft_set)
    human = f"interior of {set_name} in {space_name} = {format_soft_set(result)}"
    return CommandReport("interior", inputs, result.to_json(), None, human, 0)


def _run_closure(document: SpecDocument, set_name: str, space_name: str, inputs: dict) -> CommandReport:
    soft_set = document.softsets.get(set_name) or _usage_unknown_set(set_name)
    kind, space = _space(document, space_name)
    if kind == "ditopology":
        space = space.kappa
    elif kind != "cotopology":
        raise UsageError(f"closure needs a cotopology, {space_name!r} is a {kind}")
    result = closure(space, soft_set)
    human = f"closure of {set_name} in {space_name} = {format_soft_set(result)}"
    return CommandReport("closure", inputs, result.to_json(), None, human, 0)


def _usage_unknown_set(name: str):
    raise UsageError(f"unknown soft set {name!r}")


def _run_axioms(document: SpecDocument, space_name: str, inputs: dict) -> CommandReport:
    kind, space = _space(document, space_name)
    checker = {
        "topology": check_tau_axiom,
        "cotopology": check_kappa_axiom,
        "ditopology": check_dito_axiom,
    }[kind]
    verdict = {}
    witness = {}
    lines = [f"{kind} {space_name}:"]
    for axiom in AXIOMS:
        result = checker(space, axiom)
        verdict[axiom] = result.holds
        if not result.holds and result.witness:
            witness[axiom] = result.witness.to_json()
        detail = ""
        if not result.holds and result.witness:
            w = result.witness
            who = ", ".join(p for p in (w.x, w.y) if p)
            domain = "{" + ", ".join(w.domain) + "}"
            detail = f"  [{who} at {domain}] {w.detail}" if who else f"  [{domain}] {w.detail}"
        lines.append(f"  {axiom}: {str(result.holds).lower()}{detail}")
    ok = all(verdict.values())
    return CommandReport(
        "axioms", inputs, verdict, witness or None, "\n".join(lines), 0 if ok else 1
    )


def _run_continuity(document: SpecDocument, map_name: str, space_names: list[str], inputs: dict) -> CommandReport:
    soft_map = document.maps.get(map_name)
    if soft_map is None:
        raise UsageError(f"unknown map {map_name!r}")
    if len(space_names) != 2:
        raise UsageError("continuity needs exactly two --space arguments")
    (kind1, s1), (kind2, s2) = _space(document, space_names[0]), _space(document, space_names[1])
    if kind1 != kind2:
        raise UsageError(f"cannot compare a {kind1} with a {kind2}")
    if s1.ctx != soft_map.source or s2.ctx != soft_map.target:
        raise UsageError("spaces do not match the map's source and target contexts")
    if kind1 == "topology":
        value = is_tau_continuous(soft_map, s1, s2)
        verdict = {"tau_continuous": value}
    elif kind1 == "cotopology":
        value = is_kappa_continuous(soft_map, s1, s2)
        verdict = {"kappa_continuous": value}
    else:
        tau_value = is_tau_continuous(soft_map, s1.tau, s2.tau)
        kappa_value = is_kappa_continuous(soft_map, s1.kappa, s2.kappa)
        value = tau_value and kappa_value
        verdict = {
            "continuous": value,
            "tau_continuous": tau_value,
            "kappa_continuous": kappa_value,
        }
    human = "\n".join(f"{k}: {str(v).lower()}" for k, v in verdict.items())
    return CommandReport("continuity", inputs, verdict, None, human, 0 if value else 1)


def _run_enumerate(bounds: EnumBounds, inputs: dict) -> CommandReport:
    ctx = bounds.context()
    n_sets = len(enumerate_soft_sets(ctx))
    n_topo = len(enumerate_topologies(ctx, bounds))
    n_coto = len(enumerate_cotopologies(ctx, bounds))
    n_maps = len(enumerate_maps(ctx, ctx))
    verdict = {
        "soft_sets": n_sets,
        "topologies": n_topo,
        "cotopologies": n_coto,
        "self_maps": n_maps,
    }
    human = "\n".join(f"{k.replace('_', ' ')}: {v}" for k, v in verdict.items())
    return CommandReport("enumerate", inputs, verdict, None, human, 0)


def _run_verify_theorems(bounds: EnumBounds, inputs: dict) -> CommandReport:
    reports = run_theorem_suite(bounds)
    witnesses = {}
    lines = []
    for report in reports:
        lines.append(f"{report.theorem}: {report.status} ({report.instances} instances)")
        if report.note:
            lines.append(f"    {report.note}")
    counter = {}
    missing = []
    for prop in PROPERTIES:
        witness = find_counterexample(prop)
        counter[prop] = witness
        if witness is None:
            missing.append(prop)
            lines.append(f"{prop}: no witness found within default bounds")
        else:
            lines.append(f"{prop}: witness found")
    verdict = {
        "reports": [r.to_json() for r in reports],
        "counterexamples": {p: (w is not None) for p, w in counter.items()},
    }
    witnesses = {p: w for p, w in counter.items() if w is not None}
    return CommandReport(
        "verify-theorems",
        inputs,
        verdict,
        witnesses or None,
        "\n".join(lines),
        0 if not missing else 1,
    )


def run(
    command: str,
    document: Optional[SpecDocument],
    *,
    spaces: tuple[str, ...] = (),
    set_name: Optional[str] = None,
    map_name: Optional[str] = None,
    bounds: Optional[EnumBounds] = None,
    spec_path: Optional[str] = None,
) -> CommandReport:
    """Execute one command against a parsed document."""
    inputs = {
        "spec": spec_path,
        "spaces": list(spaces),
        "set": set_name,
        "map": map_name,
        "bounds": bounds.to_json() if bounds else None,
    }
    if command in ("check", "interior", "closure", "axioms", "continuity"):
        if document is None:
            raise UsageError(f"{command} needs --spec FILE")
    if command == "check":
        return _run_check(document, inputs)
    if command == "interior":
        _require(set_name, "interior needs --set NAME")
        if len(spaces) != 1:
            raise UsageError("interior needs exactly one --space NAME")
        return _run_interior(document, set_name, spaces[0], inputs)
    if command == "closure":
        _require(set_name, "closure needs --set NAME")
        if len(spaces) != 1:
            raise UsageError("closure needs exactly one --space NAME")
        return _run_closure(document, set_name, spaces[0], inputs)
    if command == "axioms":
        if len(spaces) != 1:
            raise UsageError("axioms needs exactly one --space NAME")
        return _run_axioms(document, spaces[0], inputs)
    if command == "continuity":
        _require(map_name, "continuity needs --map NAME")
        return _run_continuity(document, map_name, list(spaces), inputs)
    if command == "enumerate":
        return _run_enumerate(bounds or EnumBounds(), inputs)
    if command == "verify-theorems":
        return _run_verify_theorems(bounds or EnumBounds(), inputs)
    raise UsageError(f"unknown command {command!r}")


def _parse_bounds(text: str) -> EnumBounds:
    parts = text.split(",")
    if len(parts) not in (2, 3):
        raise UsageError("--bounds expects U,E or U,E,M")
    try:
        numbers = [int(p) for p in parts]
    except ValueError as exc:
        raise UsageError(f"--bounds expects integers: {exc}") from None
    if len(numbers) == 2:
        numbers.append(6)
    try:
        return EnumBounds(*numbers)
    except BoundsError as exc:
        raise UsageError(str(exc)) from None


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="softdito",
        description="Verify finite soft ditopological structures described in a "
        "declaration file, or run the exhaustive theorem suite.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--spec", help="declaration file to load")
    parser.add_argument(
        "--space",
        action="append",
        default=[],
        metavar="NAME",
        help="space name; repeat for commands taking two spaces",
    )
    parser.add_argument("--set", dest="set_name", metavar="NAME")
    parser.add_argument("--map", dest="map_name", metavar="NAME")
    parser.add_argument("--bounds", metavar="U,E[,M]", help="enumeration bounds")
    parser.add_argument("--json", dest="json_path", metavar="PATH", help="write the JSON record here")
    args = parser.parse_args(argv)

    started = time.monotonic()
    try:
        document = None
        if args.spec is not None:
            try:
                with open(args.spec, "r", encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
            document = parse(text)
        bounds = _parse_bounds(args.bounds) if args.bounds else None
        report = run(
            args.command,
            document,
            spaces=tuple(args.space),
            set_name=args.set_name,
            map_name=args.map_name,
            bounds=bounds,
            spec_path=args.spec,
        )
    except SpecError as exc:
        for error in exc.errors:
            print(f"error: {error}", file=sys.stderr)
        return 2
    except (UsageError, SoftDomainError, BoundsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    print(report.human, flush=True)
    elapsed = time.monotonic() - started
    print(f"({elapsed:.3f}s)", file=sys.stderr)
    if args.json_path:
        with open(args.json_path, "w", encoding="utf-8") as handle:
            handle.write(report.to_json_text())
    return report.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
