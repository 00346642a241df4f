"""Serialization schema for solution reports.

One flat record per weighted projective space, shared by every output
format.  All integers serialize as decimal strings in JSON so that
consumers with 53-bit number types cannot corrupt large products; the CSV
form quotes per RFC 4180 via the csv module and joins multiple rigid-point
notations with '|'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .singular import smoothability_report
from .weights import (
    NonIntegralDegreeError,
    WeightTuple,
    anticanonical_volume,
    moduli_component_dimension,
)

CSV_HEADER = [
    "weights",
    "sum",
    "product",
    "volume_num",
    "volume_den",
    "classification",
    "rigid_points",
    "verdict_text",
    "moduli_dim",
]


@dataclass(frozen=True)
class SolutionRecord:
    weights: tuple[int, ...]
    sum: int
    product: int
    volume_num: int
    volume_den: int
    classification: str | None
    rigid_points: tuple[str, ...]
    verdict_text: str
    moduli_dim: int | None = None


def _base_fields(w: WeightTuple) -> dict:
    volume = anticanonical_volume(w)
    return {
        "weights": tuple(w),
        "sum": w.total,
        "product": w.product,
        "volume_num": volume.numerator,
        "volume_den": volume.denominator,
    }


def record_for_solution(weights, degree: int | None = None,
                        q: int | None = None) -> SolutionRecord:
    """Full record for a well-formed solution; moduli_dim when degree given.

    q defaults to dim+1.  A divisor degree that is not integral for these
    weights leaves moduli_dim as None rather than failing the whole record.
    """
    w = WeightTuple(weights)
    report = smoothability_report(w)
    moduli_dim = None
    if degree is not None:
        if q is None:
            q = w.dim + 1
        try:
            moduli_dim = moduli_component_dimension(w, degree, q)
        except NonIntegralDegreeError:
            moduli_dim = None
    return SolutionRecord(
        classification=str(report.classification) if report.classification else None,
        rigid_points=tuple(s.transverse.notation() for s in report.rigid_points),
        verdict_text=report.verdict_text,
        moduli_dim=moduli_dim,
        **_base_fields(w),
    )


def record_for_non_solution(weights) -> SolutionRecord:
    """Record for a tuple that fails the degeneration equation."""
    w = WeightTuple(weights)
    return SolutionRecord(
        classification=None,
        rigid_points=(),
        verdict_text="not a solution",
        moduli_dim=None,
        **_base_fields(w),
    )


def to_json_obj(record: SolutionRecord) -> dict:
    """JSON-ready dict, every integer as a decimal string, fixed key order."""
    obj = {
        "weights": [str(a) for a in record.weights],
        "sum": str(record.sum),
        "product": str(record.product),
        "volume_num": str(record.volume_num),
        "volume_den": str(record.volume_den),
        "classification": record.classification,
        "rigid_points": list(record.rigid_points),
        "verdict_text": record.verdict_text,
    }
    if record.moduli_dim is not None:
        obj["moduli_dim"] = str(record.moduli_dim)
    return obj


def from_json_obj(obj: dict) -> SolutionRecord:
    moduli = obj.get("moduli_dim")
    return SolutionRecord(
        weights=tuple(int(a) for a in obj["weights"]),
        sum=int(obj["sum"]),
        product=int(obj["product"]),
        volume_num=int(obj["volume_num"]),
        volume_den=int(obj["volume_den"]),
        classification=obj["classification"],
        rigid_points=tuple(obj["rigid_points"]),
        verdict_text=obj["verdict_text"],
        moduli_dim=None if moduli is None else int(moduli),
    )


def to_csv_row(record: SolutionRecord) -> list[str]:
    return [
        ",".join(str(a) for a in record.weights),
        str(record.sum),
        str(record.product),
        str(record.volume_num),
        str(record.volume_den),
        record.classification or "",
        "|".join(record.rigid_points),
        record.verdict_text,
        "" if record.moduli_dim is None else str(record.moduli_dim),
    ]


def from_csv_row(row: list[str]) -> SolutionRecord:
    return SolutionRecord(
        weights=tuple(int(a) for a in row[0].split(",")),
        sum=int(row[1]),
        product=int(row[2]),
        volume_num=int(row[3]),
        volume_den=int(row[4]),
        classification=row[5] or None,
        rigid_points=tuple(row[6].split("|")) if row[6] else (),
        verdict_text=row[7],
        moduli_dim=int(row[8]) if row[8] else None,
    )
