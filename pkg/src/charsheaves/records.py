"""JSON and CSV record shapes for the command line.

Field names here are a public contract; change them only with a version bump.

Sheaf records use the central-character order for ``m``.  For ``"odd"``
records that is also the stratum's ``m``; an ``"even"`` record with
``m = 2k`` lives on the stratum ``(k, l, empty)``.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable

from .classify import (
    CharacterSheaf,
    EvenSheaf,
    LeviDatum,
    OddSheaf,
    OrbitalComplex,
    is_cuspidal,
)
from .combinat import Bipartition, CyclicCharacter, Partition
from .orbits import (
    PairContext,
    SignedYoungDiagram,
    d_lambda,
    format_diagram,
    is_richardson,
    orbit_dimension,
    parse_diagram,
)
from .strata import DualStratumLabel, merged_diagram, pi1_data


class RecordError(ValueError):
    pass


def _mu_out(mu: SignedYoungDiagram) -> str | None:
    return None if mu.is_empty else format_diagram(mu)


def _mu_in(value: Any) -> SignedYoungDiagram:
    if value is None:
        return SignedYoungDiagram(())
    if not isinstance(value, str) or value == "":
        raise RecordError(f"mu must be a diagram string or null, got {value!r}")
    return parse_diagram(value)


KINDS = ("orbit", "orbital-complex", "sheaf", "stratum", "levi", "verification")


def tag(kind: str, payload: dict) -> dict:
    """Prefix a payload with its ``kind`` so mixed streams stay self-describing."""
    if kind not in KINDS:
        raise ValueError(f"unknown record kind {kind!r}")
    return {"kind": kind, **payload}


def _check_kind(record: dict, kind: str) -> None:
    if not isinstance(record, dict):
        raise RecordError(f"expected a JSON object, got {record!r}")
    if record.get("kind", kind) != kind:
        raise RecordError(f"expected a {kind!r} record, got kind {record['kind']!r}")


def _int(record: dict, key: str) -> int:
    try:
        value = record[key]
    except KeyError:
        raise RecordError(f"missing field {key!r}") from None
    if not isinstance(value, int) or isinstance(value, bool):
        raise RecordError(f"field {key!r} must be an integer, got {value!r}")
    return value


# --- orbits ----------------------------------------------------------------

ORBIT_FIELDS = ["diagram", "d_lambda", "dimension", "richardson"]


def orbit_record(lam: SignedYoungDiagram, ctx: PairContext) -> dict:
    return {
        "diagram": format_diagram(lam),
        "d_lambda": d_lambda(lam),
        "dimension": orbit_dimension(lam, ctx),
        "richardson": is_richardson(lam),
    }


def parse_orbit_record(record: dict) -> SignedYoungDiagram:
    _check_kind(record, "orbit")
    return parse_diagram(record["diagram"])


# --- characters and orbital complexes ------------------------------------


def character_record(chi: CyclicCharacter) -> dict:
    return {"modulus": chi.modulus, "exponent": chi.exponent}


def parse_character(record: Any) -> CyclicCharacter:
    if not isinstance(record, dict):
        raise RecordError(f"character must be an object, got {record!r}")
    try:
        return CyclicCharacter(_int(record, "modulus"), _int(record, "exponent"))
    except RecordError:
        raise
    except ValueError as exc:
        raise RecordError(str(exc)) from None


COMPLEX_FIELDS = ["orbit", "modulus", "exponent", "order"]


def complex_record(c: OrbitalComplex) -> dict:
    return {
        "orbit": format_diagram(c.orbit),
        "character": character_record(c.character),
        "order": c.central_order,
    }


def parse_complex_record(record: dict) -> OrbitalComplex:
    _check_kind(record, "orbital-complex")
    if "orbit" not in record or "character" not in record:
        raise RecordError("orbital-complex record needs 'orbit' and 'character'")
    lam = parse_diagram(record["orbit"])
    chi = parse_character(record["character"])
    try:
        c = OrbitalComplex(lam, chi)
    except ValueError as exc:
        raise RecordError(str(exc)) from None
    if "order" in record and record["order"] != c.central_order:
        raise RecordError(f"stated order {record['order']} but the character has order {c.central_order}")
    return c


# --- strata ------------------------------------------------------------------

STRATUM_FIELDS = ["m", "l", "mu", "diagram", "braid_rank", "cyclic_modulus"]


def stratum_record(label: DualStratumLabel) -> dict:
    return {"m": label.m, "l": label.l, "mu": _mu_out(label.mu)}


def stratum_listing_record(label: DualStratumLabel) -> dict:
    pi1 = pi1_data(label)
    return {
        **stratum_record(label),
        "diagram": format_diagram(merged_diagram(label)),
        "braid_rank": pi1.braid_rank,
        "cyclic_modulus": pi1.cyclic_modulus,
    }


def parse_stratum_record(record: dict) -> DualStratumLabel:
    _check_kind(record, "stratum")
    try:
        return DualStratumLabel(_int(record, "m"), _int(record, "l"), _mu_in(record.get("mu")))
    except RecordError:
        raise
    except ValueError as exc:
        raise RecordError(str(exc)) from None


# --- sheaves ----------------------------------------------------------------

SHEAF_FIELDS = [
    "type",
    "m",
    "l",
    "mu",
    "tau",
    "rho",
    "psi_modulus",
    "psi_exponent",
    "cuspidal",
    "nilpotent_support",
]


def sheaf_record(s: CharacterSheaf, ctx: PairContext) -> dict:
    return {
        "type": s.kind,
        "m": s.central_order,
        "l": s.l,
        "mu": _mu_out(s.stratum.mu),
        "tau": list(s.tau.parts) if isinstance(s, OddSheaf) else None,
        "rho": [list(s.rho.first.parts), list(s.rho.second.parts)] if isinstance(s, EvenSheaf) else None,
        "psi": character_record(s.psi),
        "cuspidal": is_cuspidal(s, ctx),
        "nilpotent_support": s.is_nilpotent_support,
    }


def _partition(value: Any, name: str) -> Partition:
    if not isinstance(value, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in value):
        raise RecordError(f"{name} must be a list of integers, got {value!r}")
    try:
        return Partition(tuple(value))
    except ValueError as exc:
        raise RecordError(f"{name}: {exc}") from None


def parse_sheaf_record(record: dict) -> CharacterSheaf:
    """Rebuild a sheaf label; the ``cuspidal`` and ``nilpotent_support`` flags are derived, not read."""
    _check_kind(record, "sheaf")
    kind = record.get("type")
    m = _int(record, "m")
    l = _int(record, "l")
    psi = parse_character(record.get("psi"))
    try:
        if kind == "odd":
            if record.get("rho") is not None:
                raise RecordError("odd record must have rho = null")
            stratum = DualStratumLabel(m, l, _mu_in(record.get("mu")))
            return OddSheaf(stratum, _partition(record.get("tau"), "tau"), psi)
        if kind == "even":
            if record.get("tau") is not None or record.get("mu") is not None:
                raise RecordError("even record must have tau = null and mu = null")
            if m % 2:
                raise RecordError(f"even record needs even m, got {m}")
            rho = record.get("rho")
            if not isinstance(rho, list) or len(rho) != 2:
                raise RecordError(f"rho must be a pair of lists, got {rho!r}")
            bip = Bipartition(_partition(rho[0], "rho[0]"), _partition(rho[1], "rho[1]"))
            return EvenSheaf(DualStratumLabel(m // 2, l), bip, psi)
    except RecordError:
        raise
    except ValueError as exc:
        raise RecordError(str(exc)) from None
    raise RecordError(f"type must be 'odd' or 'even', got {kind!r}")


# --- Levi data ---------------------------------------------------------------


def levi_record(datum: LeviDatum | None) -> dict:
    if datum is None:
        return {"induced": False}
    return {
        "induced": True,
        "construction": datum.construction,
        "m": datum.m,
        "block_sizes": list(datum.block_sizes),
        "theta_blocks": [list(b) for b in datum.theta_blocks],
        "source_orbits": [format_diagram(d) for d in datum.source_orbits],
        "l_sequence": list(datum.l_sequence),
        "signs": "".join(datum.signs),
    }


# --- CSV ------------------------------------------------------------------


def _flatten(record: dict) -> dict:
    flat = {}
    for key, value in record.items():
        if key in ("psi", "character"):
            flat["psi_modulus" if key == "psi" else "modulus"] = value["modulus"]
            flat["psi_exponent" if key == "psi" else "exponent"] = value["exponent"]
        elif isinstance(value, bool):
            flat[key] = "true" if value else "false"
        elif value is None:
            flat[key] = ""
        elif isinstance(value, list):
            flat[key] = json.dumps(value, separators=(",", ":"))
        else:
            flat[key] = value
    return flat


def to_csv(records: Iterable[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(_flatten(record))
    return buf.getvalue()


def _cell(value: str, kind: str) -> Any:
    if kind == "int":
        return int(value)
    if kind == "bool":
        if value not in ("true", "false"):
            raise RecordError(f"expected true/false, got {value!r}")
        return value == "true"
    if kind == "json":
        return None if value == "" else json.loads(value)
    if kind == "opt-str":
        return None if value == "" else value
    return value


_SHEAF_CELLS = {
    "type": "str",
    "m": "int",
    "l": "int",
    "mu": "opt-str",
    "tau": "json",
    "rho": "json",
    "cuspidal": "bool",
    "nilpotent_support": "bool",
}


def _kind_prefix(row: dict) -> dict:
    return {"kind": row["kind"]} if row.get("kind") else {}


def sheaf_records_from_csv(text: str) -> list[dict]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        record = {k: _cell(row[k], kind) for k, kind in _SHEAF_CELLS.items()}
        record["psi"] = {"modulus": int(row["psi_modulus"]), "exponent": int(row["psi_exponent"])}
        order = ["type", "m", "l", "mu", "tau", "rho", "psi", "cuspidal", "nilpotent_support"]
        out.append({**_kind_prefix(row), **{k: record[k] for k in order}})
    return out


def orbit_records_from_csv(text: str) -> list[dict]:
    cells = {"diagram": "str", "d_lambda": "int", "dimension": "int", "richardson": "bool"}
    return [
        {**_kind_prefix(row), **{k: _cell(row[k], kind) for k, kind in cells.items()}}
        for row in csv.DictReader(io.StringIO(text))
    ]


def stratum_records_from_csv(text: str) -> list[dict]:
    cells = {
        "m": "int",
        "l": "int",
        "mu": "opt-str",
        "diagram": "str",
        "braid_rank": "int",
        "cyclic_modulus": "int",
    }
    return [
        {**_kind_prefix(row), **{k: _cell(row[k], kind) for k, kind in cells.items()}}
        for row in csv.DictReader(io.StringIO(text))
    ]
