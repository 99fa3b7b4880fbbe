"""Report documents and plain-text tables for axiom-check results.

A report document is a JSON-serializable dict with a fixed schema:

* ``format`` / ``format_version`` identify the schema;
* ``config`` echoes every knob of the suite that produced the results;
* ``results`` maps index tokens to their descriptor data (label, nu,
  orientation), the *documented* property claims published with each
  index, and the *empirical* per-property verdicts with any witnesses.

Serialization is deliberately timestamp-free and key-sorted so the same
run produces byte-identical output, and ``doc_to_report`` restores the
full report object losslessly. Witness positions are 1-based, matching
the CLI and matrix files.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import __version__
from .harness import (
    PROPERTIES,
    AxiomReport,
    PropertyVerdict,
    SuiteConfig,
    VerdictStatus,
    Witness,
)
from .indices import IndexId, descriptor

DOC_FORMAT = "pcm-axiom-report"
DOC_VERSION = 1

_STATUS_SYMBOL = {
    VerdictStatus.NO_VIOLATION_FOUND: "+",
    VerdictStatus.VIOLATION_FOUND: "X",
    VerdictStatus.HEURISTIC: "~",
    VerdictStatus.NOT_APPLICABLE: "-",
}
_CLAIM_SYMBOL = {True: "+", False: "X", None: "?"}


def _witness_to_doc(w: Witness | None):
    if w is None:
        return None
    return {"matrix": [list(row) for row in w.matrix],
            "params": dict(w.params),
            "observed": dict(w.observed),
            "note": w.note}


def _witness_from_doc(d) -> Witness | None:
    if d is None:
        return None
    return Witness(matrix=tuple(tuple(float(x) for x in row)
                                for row in d["matrix"]),
                   params=dict(d["params"]),
                   observed=dict(d["observed"]),
                   note=d.get("note", ""))


def report_to_doc(report: AxiomReport) -> dict:
    """Flatten a report into the JSON document schema."""
    cfg = report.config
    results = {}
    for idx, props in report.verdicts.items():
        desc = descriptor(idx)
        results[idx.value] = {
            "label": desc.label,
            "nu": desc.nu,
            "orientation": desc.orientation.value,
            "documented": {p: ("holds" if c else "fails") if c is not None
                           else "open"
                           for p, c in desc.documented.items()},
            "properties": {p: {"status": v.status.value,
                               "trials": v.trials,
                               "witness": _witness_to_doc(v.witness)}
                           for p, v in props.items()},
        }
    return {
        "format": DOC_FORMAT,
        "format_version": DOC_VERSION,
        "generator": {"name": "pcmkit", "version": __version__},
        "config": {
            "seed": cfg.seed,
            "trials_per_check": cfg.trials_per_check,
            "orders": list(cfg.orders),
            "b_grid": list(cfg.b_grid),
            "delta_grid": list(cfg.delta_grid),
            "nu_tolerance": cfg.nu_tolerance,
            "equality_tolerance": cfg.equality_tolerance,
            "monotonicity_slack": cfg.monotonicity_slack,
        },
        "results": results,
    }


def doc_to_report(doc: dict) -> AxiomReport:
    """Rebuild the report object a document was generated from."""
    if doc.get("format") != DOC_FORMAT:
        raise ValueError(f"not a {DOC_FORMAT} document")
    if doc.get("format_version") != DOC_VERSION:
        raise ValueError(f"unsupported format_version "
                         f"{doc.get('format_version')!r}")
    c = doc["config"]
    cfg = SuiteConfig(seed=c["seed"],
                      trials_per_check=c["trials_per_check"],
                      orders=tuple(c["orders"]),
                      b_grid=tuple(c["b_grid"]),
                      delta_grid=tuple(c["delta_grid"]),
                      nu_tolerance=c["nu_tolerance"],
                      equality_tolerance=c["equality_tolerance"],
                      monotonicity_slack=c["monotonicity_slack"])
    verdicts = {}
    for token, entry in doc["results"].items():
        idx = IndexId(token)
        verdicts[idx] = {
            p: PropertyVerdict(status=VerdictStatus(pv["status"]),
                               trials=pv["trials"],
                               witness=_witness_from_doc(pv["witness"]))
            for p, pv in entry["properties"].items()
        }
    return AxiomReport(config=cfg, verdicts=verdicts)


def dumps_doc(doc: dict) -> str:
    """Canonical serialization: sorted keys, two-space indent, newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_doc(doc: dict, path) -> None:
    Path(path).write_text(dumps_doc(doc), encoding="utf-8")


def load_doc(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def render_table(report: AxiomReport) -> str:
    """Two fixed-width grids: empirical verdicts, then documented claims.

    The legend spells out that empirical results are searches, not proofs;
    a cell where the two grids disagree means either an unlucky search or
    an error in the published claim.
    """
    ids = list(report.verdicts)
    width = max([len("index")] + [len(descriptor(i).label) for i in ids]) + 2
    header = "index".ljust(width) + "".join(p.rjust(4) for p in PROPERTIES)
    lines = ["empirical verdicts "
             f"(seed={report.config.seed}, "
             f"trials_per_check={report.config.trials_per_check}):",
             header]
    for idx in ids:
        desc = descriptor(idx)
        row = desc.label.ljust(width)
        row += "".join(_STATUS_SYMBOL[report.verdicts[idx][p].status].rjust(4)
                       for p in PROPERTIES)
        lines.append(row)
    lines.append("")
    lines.append("documented claims (published property table):")
    lines.append(header)
    for idx in ids:
        desc = descriptor(idx)
        row = desc.label.ljust(width)
        row += "".join(_CLAIM_SYMBOL[desc.documented[p]].rjust(4)
                       for p in PROPERTIES)
        lines.append(row)
    lines.append("")
    lines.append("empirical: + no violation found   X violation found "
                 "(witness in the report)")
    lines.append("           ~ heuristic pass only  - not checked")
    lines.append("documented: + claimed to hold  X claimed to fail  ? open")
    lines.append("a search that finds nothing is evidence, not proof; where "
                 "the grids disagree,")
    lines.append("either the search got unlucky or the published claim is "
                 "wrong - the witness decides.")
    return "\n".join(lines) + "\n"
