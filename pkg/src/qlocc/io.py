"""Reading and writing ensemble documents and sweep CSV files.

The on-disk ensemble format is a single JSON document: each state is four
[re, im] amplitude pairs in the basis order |00>, |01>, |10>, |11>, with
optional per-state labels and tolerance overrides.  Parse failures carry the
path of the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .ensembles import OrthogonalSet, Tolerances
from .errors import QloccError
from .states import PureState, make_state


class DocumentError(QloccError):
    """Malformed ensemble document; message names the offending field."""


@dataclass(frozen=True)
class EnsembleDocument:
    ensemble: OrthogonalSet
    labels: tuple[str, ...]


def _parse_amplitude(value, path):
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(x, (int, float)) for x in value)
    ):
        raise DocumentError(f"{path}: expected [re, im] pair, got {value!r}")
    return complex(value[0], value[1])


def parse_document(text: str) -> EnsembleDocument:
    """Parse and validate an ensemble document from JSON text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "states" not in doc:
        raise DocumentError("top level must be an object with a 'states' list")
    raw_states = doc["states"]
    if not isinstance(raw_states, list) or not raw_states:
        raise DocumentError("states: expected a nonempty list")

    states = []
    for i, raw in enumerate(raw_states):
        if not isinstance(raw, list) or len(raw) != 4:
            raise DocumentError(f"states[{i}]: expected four amplitude pairs")
        amps = [_parse_amplitude(a, f"states[{i}][{k}]") for k, a in enumerate(raw)]
        states.append(make_state(amps))

    labels = doc.get("labels")
    if labels is None:
        labels = [f"state{i}" for i in range(len(states))]
    elif not isinstance(labels, list) or len(labels) != len(states):
        raise DocumentError("labels: must match the number of states")

    tol_kwargs = {}
    overrides = doc.get("tolerances", {})
    if not isinstance(overrides, dict):
        raise DocumentError("tolerances: expected an object")
    for key in ("eps_orth", "eps_zero", "tau_overlap"):
        if key in overrides:
            if not isinstance(overrides[key], (int, float)):
                raise DocumentError(f"tolerances.{key}: expected a number")
            tol_kwargs[key] = float(overrides[key])
    unknown = set(overrides) - {"eps_orth", "eps_zero", "tau_overlap"}
    if unknown:
        raise DocumentError(f"tolerances: unknown keys {sorted(unknown)}")

    ensemble = OrthogonalSet(tuple(states), tolerances=Tolerances(**tol_kwargs))
    return EnsembleDocument(ensemble=ensemble, labels=tuple(labels))


def amplitude_pairs(state: PureState) -> list[list[float]]:
    return [[float(a.real), float(a.imag)] for a in state.amps]


def emit_document(ensemble: OrthogonalSet, labels=None) -> str:
    """Serialize an ensemble back to the JSON document format."""
    doc = {
        "states": [amplitude_pairs(s) for s in ensemble.states],
        "labels": list(labels) if labels else [f"state{i}" for i in range(len(ensemble))],
    }
    return json.dumps(doc, indent=2) + "\n"


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def sweep_csv(records) -> str:
    """Render sweep records with deterministic, byte-stable formatting."""
    lines = ["lambda1,lambda3,class,unidentifiable,avg_entanglement,is_ueb"]
    for rec in records:
        lam3 = _fmt(rec["lambda3"]) if rec["lambda3"] is not None else ""
        bad = ";".join(str(i) for i in rec["unidentifiable"])
        lines.append(
            ",".join(
                [
                    _fmt(rec["lambda1"]),
                    lam3,
                    rec["class"],
                    bad,
                    _fmt(rec["avg_entanglement"]),
                    "true" if rec["is_ueb"] else "false",
                ]
            )
        )
    return "\n".join(lines) + "\n"
