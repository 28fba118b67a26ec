"""JSON, DOT and CSV formats.  Rationals always travel as strings like ``"2/3"``."""

from __future__ import annotations

import csv
import io as _io
import json
from fractions import Fraction
from typing import Any, Sequence

from .chains import Chain
from .intervals import Interval, context, parse_module
from .lattice import TorsLattice, is_torsion_class
from .slices import NerveComplex
from .stability import CentralCharge, ChainMho, ChainOmega, WeakStability


class FormatError(ValueError):
    """Malformed input; ``path`` names the offending field, e.g. ``classes[1][0]``."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


def rational_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rational(value: Any, path: str = "") -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise FormatError(path, f"expected a rational string like '1/3', got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(path, f"cannot read {value!r} as a rational") from exc


def interval_from_str(text: Any, n: int, path: str) -> Interval:
    if not isinstance(text, str):
        raise FormatError(path, f"expected an interval string, got {text!r}")
    try:
        m = parse_module(text, n)
    except ValueError as exc:
        raise FormatError(path, str(exc)) from exc
    if len(m.summands) != 1 or m.summands[0][1] != 1:
        raise FormatError(path, f"expected a single interval, got {text!r}")
    return m.summands[0][0]


# --- lattices ----------------------------------------------------------------


def lattice_to_json(lat: TorsLattice) -> dict:
    ctx = context(lat.n)
    return {
        "n": lat.n,
        "classes": [
            {"id": k, "members": [str(iv) for iv in ctx.members(bits)]}
            for k, bits in enumerate(lat.classes)
        ],
        "hasse": [{"upper": e.upper, "lower": e.lower, "brick": str(e.brick)} for e in lat.hasse],
    }


def lattice_to_dot(lat: TorsLattice) -> str:
    ctx = context(lat.n)
    lines = [f"digraph tors_A{lat.n} {{", "  rankdir=TB;"]
    for k, bits in enumerate(lat.classes):
        label = "{" + ",".join(str(iv) for iv in ctx.members(bits)) + "}"
        lines.append(f'  c{k} [label="{label}"];')
    for e in lat.hasse:
        lines.append(f'  c{e.upper} -> c{e.lower} [label="{e.brick}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- chains ------------------------------------------------------------------


def chain_to_json(c: Chain) -> dict:
    ctx = context(c.n)
    out: dict[str, Any] = {
        "n": c.n,
        "classes": [[str(iv) for iv in ctx.members(bits)] for bits in c.classes],
        "breakpoints": [rational_str(x) for x in c.breakpoints],
    }
    if any(c.lower_at):
        out["lower_at"] = list(c.lower_at)
    return out


def chain_from_json(obj: Any, path: str = "") -> Chain:
    def at(field: str) -> str:
        return f"{path}.{field}" if path else field

    if not isinstance(obj, dict):
        raise FormatError(path, "expected an object")
    n = obj.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise FormatError(at("n"), f"expected a positive integer, got {n!r}")
    ctx = context(n)
    raw = obj.get("classes")
    if not isinstance(raw, list):
        raise FormatError(at("classes"), "expected a list of member lists")
    classes = []
    for k, members in enumerate(raw):
        p = f"{at('classes')}[{k}]"
        if not isinstance(members, list):
            raise FormatError(p, "expected a list of interval strings")
        bits = 0
        for i, text in enumerate(members):
            bits |= ctx.bit(interval_from_str(text, n, f"{p}[{i}]"))
        if not is_torsion_class(bits, n):
            raise FormatError(p, "not a torsion class")
        classes.append(bits)
    bps = obj.get("breakpoints")
    if not isinstance(bps, list):
        raise FormatError(at("breakpoints"), "expected a list of rational strings")
    values = [parse_rational(v, f"{at('breakpoints')}[{k}]") for k, v in enumerate(bps)]
    flags = obj.get("lower_at", [])
    if not isinstance(flags, list) or not all(isinstance(f, bool) for f in flags):
        raise FormatError(at("lower_at"), "expected a list of booleans")
    try:
        return Chain(n, tuple(classes), tuple(values), tuple(flags))
    except ValueError as exc:
        raise FormatError(path, str(exc)) from exc


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError("", f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError("", f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc


def load_chain(path: str) -> Chain:
    return chain_from_json(load_json(path))


# --- weak stability conditions ---------------------------------------------


def wsc_to_json(phi: WeakStability) -> dict:
    if isinstance(phi, CentralCharge):
        return {"kind": "central_charge", "theta": list(phi.theta), "delta": list(phi.delta)}
    kind = "chain_mho" if isinstance(phi, ChainMho) else "chain_omega"
    return {"kind": kind, "chain": chain_to_json(phi.chain)}


def wsc_from_json(obj: Any) -> WeakStability:
    if not isinstance(obj, dict):
        raise FormatError("", "expected an object")
    kind = obj.get("kind")
    if kind == "central_charge":
        vecs = {}
        for key in ("theta", "delta"):
            v = obj.get(key)
            if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
                raise FormatError(key, "expected a list of integers")
            vecs[key] = v
        try:
            return CentralCharge(tuple(vecs["theta"]), tuple(vecs["delta"]))
        except ValueError as exc:
            raise FormatError("delta", str(exc)) from exc
    if kind in ("chain_mho", "chain_omega"):
        chain = chain_from_json(obj.get("chain"), "chain")
        return ChainMho(chain) if kind == "chain_mho" else ChainOmega(chain)
    raise FormatError("kind", f"unknown kind {kind!r}")


# --- nerve and distance matrices --------------------------------------------


def nerve_to_json(cx: NerveComplex) -> dict:
    return {"f_vector": list(cx.f_vector), "facets": [list(f) for f in cx.facets]}


def distance_csv(names: Sequence[str], matrix: Sequence[Sequence[Fraction]]) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + list(names))
    for name, row in zip(names, matrix):
        w.writerow([name] + [rational_str(x) for x in row])
    return buf.getvalue()


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


__all__ = [
    "FormatError",
    "chain_from_json",
    "chain_to_json",
    "distance_csv",
    "dumps",
    "lattice_to_dot",
    "lattice_to_json",
    "load_chain",
    "load_json",
    "nerve_to_json",
    "parse_rational",
    "rational_str",
    "wsc_from_json",
    "wsc_to_json",
]
