"""Polygon rendering and JSON, CSV and text serialization of analysis results."""

import json
import logging
from typing import Dict, Iterable, List, Optional, Sequence

import pandas as pd

try:
    from .config import SCHEMA_PATH, SCHEMA_VERSION
    from .idealfactor import DedekindReport, PhiRecord, PrimeAnalysis, PrimeFactorShape
    from .monogeny import AnalysisReport, IndexDivisorWitness, RangeScanner, ScanRow, Verdict
    from .polygon import NewtonPolygon, ResidualPolynomial
except ImportError:
    from config import SCHEMA_PATH, SCHEMA_VERSION
    from idealfactor import DedekindReport, PhiRecord, PrimeAnalysis, PrimeFactorShape
    from monogeny import AnalysisReport, IndexDivisorWitness, RangeScanner, ScanRow, Verdict
    from polygon import NewtonPolygon, ResidualPolynomial


LOGGER = logging.getLogger(__name__)

SCAN_COLUMNS = ["m", "squarefree", "verdict", "witness_prime", "witness_f", "P_f", "N_f", "notes"]

COUNTED, VERTEX, ON_SIDE, ABOVE, EMPTY = "X", "o", "+", "*", "."

LEGEND = "X counted lattice point   o side endpoint   + point on a side   * point above   . empty"


def render_polygon(polygon: NewtonPolygon) -> str:
    """Monospace drawing of a principal polygon with its counted lattice points."""
    if polygon.is_empty:
        return "no sides of negative slope"
    vertices = polygon.vertices
    width = vertices[-1][0] + 1
    top = vertices[0][1]
    grid = [[EMPTY] * width for _ in range(top + 1)]
    for x, y in polygon.cloud:
        if x < width and y <= top:
            grid[y][x] = ABOVE
    for x, y in polygon.on_side_points():
        grid[y][x] = ON_SIDE
    for x, y in vertices:
        grid[y][x] = VERTEX
    counted = polygon.counted_points()
    for x, y in counted:
        grid[y][x] = COUNTED

    label = len(str(top))
    lines = [f"{y:>{label}} | " + " ".join(grid[y]) for y in range(top, -1, -1)]
    lines.append(" " * label + " +-" + "--" * width)
    ticks = [" "] * (2 * width)
    for x in range(0, width, 5):
        for k, ch in enumerate(str(x)):
            if 2 * x + k < len(ticks):
                ticks[2 * x + k] = ch
    lines.append(" " * label + "   " + "".join(ticks).rstrip())
    for n, side in enumerate(polygon.sides, 1):
        lines.append(f"side {n}: {side.start} to {side.end}, slope {side.slope}, degree {side.degree}")
    lines.append(f"counted points: {len(counted)}")
    lines.append(LEGEND)
    return "\n".join(lines)


def load_schema(path: str = SCHEMA_PATH) -> Dict:
    """Read the published JSON schema of analysis reports."""
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _big(n: Optional[int]) -> Optional[str]:
    return None if n is None else str(n)


class ReportBuilder:
    """Build report documents and serialize them."""

    def __init__(self, schema_version: str = SCHEMA_VERSION):
        self.schema_version = schema_version

    def polygon_record(self, polygon: NewtonPolygon, multiplicity: Optional[int] = None) -> Dict:
        """Vertices, slopes, sides and index of one polygon."""
        return {
            "phi": str(polygon.phi),
            "prime": _big(polygon.prime),
            "multiplicity": multiplicity,
            "vertices": [list(v) for v in polygon.vertices],
            "slopes": [side.slope_text for side in polygon.sides],
            "sides": [
                {
                    "start": list(side.start),
                    "end": list(side.end),
                    "slope": side.slope_text,
                    "length": side.length,
                    "height": side.height,
                    "e": side.e,
                    "degree": side.degree,
                }
                for side in polygon.sides
            ],
            "index": polygon.index(),
        }

    def residual_record(self, phi: str, residual: ResidualPolynomial, seed: int = 0) -> Dict:
        """A residual polynomial with its factorization over the residue field."""
        return {
            "phi": phi,
            "slope": residual.side.slope_text,
            "polynomial": str(residual),
            "squarefree": residual.is_squarefree(),
            "factors": [
                {"factor": psi.to_text("y"), "multiplicity": k} for psi, k in residual.factor(seed)
            ],
        }

    def dedekind_record(self, report: DedekindReport) -> Dict:
        """Factors mod p, the quotient M and the factors that make the test fail."""
        return {
            "passes": report.passes,
            "factors": [{"phi": str(phi), "multiplicity": l} for phi, l in report.factors],
            "quotient": str(report.quotient),
            "failing_factors": [{"phi": str(phi), "multiplicity": l} for phi, l in report.failing_factors],
        }

    def shape_record(self, shape: PrimeFactorShape) -> Dict:
        """Shape entries (e, f, count) and whether the shape is complete."""
        return {
            "complete": shape.complete,
            "unresolved_degree": shape.unresolved_degree,
            "entries": [{"e": s.e, "f": s.f, "count": s.count} for s in shape.entries],
        }

    def prime_record(self, analysis: PrimeAnalysis, seed: int = 0) -> Dict:
        """Everything computed at one prime."""
        records: Sequence[PhiRecord] = analysis.records
        return {
            "prime": _big(analysis.prime),
            "dedekind": self.dedekind_record(analysis.dedekind),
            "polygons": [self.polygon_record(r.polygon, r.multiplicity) for r in records],
            "residuals": [self.residual_record(str(r.phi), res, seed) for r in records for res in r.residuals],
            "shape": self.shape_record(analysis.shape),
            "index_valuation": {
                "lower_bound": analysis.index_valuation.lower_bound,
                "exact": analysis.index_valuation.exact,
            },
            "discriminant": {
                "polynomial": analysis.discriminant.polynomial,
                "field": analysis.discriminant.field,
            },
            "eisenstein": analysis.eisenstein,
        }

    def witness_record(self, witness: IndexDivisorWitness) -> Dict:
        """An index divisor witness with big integers as strings."""
        return {
            "prime": _big(witness.prime),
            "f": witness.f,
            "P_f": witness.ideal_count,
            "N_f": _big(witness.irreducible_count),
            "lower_bound": witness.lower_bound,
        }

    def verdict_record(self, verdict: Verdict, computed: Optional[str] = None) -> Dict:
        """The verdict, its congruence checks and witnesses."""
        return {
            "kind": verdict.kind.value,
            "computed": computed,
            "checks": [
                {"modulus": c.modulus, "residues": list(c.residues), "residue": c.residue, "hit": c.hit}
                for c in verdict.checks
            ],
            "witnesses": [self.witness_record(w) for w in verdict.witnesses],
            "reasons": list(verdict.reasons),
            "reduction": None if verdict.reduction is None else [_big(v) for v in verdict.reduction],
        }

    def document(self, report: AnalysisReport, seed: int = 0) -> Dict:
        """The full JSON report document of an analysis."""
        a, u = report.power if report.power is not None else (None, None)
        return {
            "schema_version": self.schema_version,
            "input": {
                "polynomial": str(report.polynomial),
                "source": None if report.source is None else str(report.source),
                "m": _big(report.m),
                "a": _big(a),
                "u": _big(u),
                "seed": seed,
            },
            "primes": [self.prime_record(analysis, seed) for analysis in report.primes],
            "verdict": self.verdict_record(report.verdict, report.computed.value),
            "notes": list(report.notes),
        }

    @staticmethod
    def to_json(document: Dict) -> str:
        """Deterministic JSON text: sorted keys, two-space indent."""
        return json.dumps(document, sort_keys=True, indent=2) + "\n"

    def to_text(self, report: AnalysisReport) -> str:
        """Human readable report, one block per prime."""
        lines = [f"F = {report.polynomial}"]
        if report.source is not None and report.source != report.polynomial:
            lines.append(f"input = {report.source}")
        for analysis in report.primes:
            index = analysis.index_valuation
            relation = "=" if index.exact else ">="
            lines.append("")
            lines.append(f"p = {analysis.prime}")
            lines.append(f"  Dedekind: {'passes' if analysis.dedekind.passes else 'fails'}")
            if analysis.eisenstein:
                lines.append("  Eisenstein")
            for record in analysis.records:
                lines.append(f"  phi = {record.phi} (multiplicity {record.multiplicity}), "
                             f"vertices {record.polygon.vertices}, ind = {record.index}")
                for residual in record.residuals:
                    squarefree = "squarefree" if residual.is_squarefree() else "not squarefree"
                    lines.append(f"    slope {residual.side.slope}: R(y) = {residual} ({squarefree})")
            entries = ", ".join(f"(e={s.e}, f={s.f}) x{s.count}" for s in analysis.shape.entries)
            status = "complete" if analysis.shape.complete else f"partial, {analysis.shape.unresolved_degree} unresolved"
            lines.append(f"  shape ({status}): {entries}")
            lines.append(f"  nu_p(index) {relation} {index.lower_bound}")
        lines.append("")
        lines.append(f"verdict: {report.verdict.kind.value}")
        for reason in report.verdict.reasons:
            lines.append(f"  {reason}")
        for witness in report.verdict.witnesses:
            lines.append(f"  witness {witness}")
        for note in report.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def scan_record(row: ScanRow) -> Dict:
        """One scan row as a flat dict keyed by SCAN_COLUMNS."""
        w = row.witness
        return {
            "m": row.m,
            "squarefree": row.squarefree,
            "verdict": row.verdict.value if row.verdict is not None else "",
            "witness_prime": w.prime if w else None,
            "witness_f": w.f if w else None,
            "P_f": w.ideal_count if w else None,
            "N_f": w.irreducible_count if w else None,
            "notes": "; ".join(row.notes),
        }

    def scan_frame(self, rows: Iterable[ScanRow]) -> pd.DataFrame:
        """Scan rows as a DataFrame with nullable integer witness columns."""
        df = pd.DataFrame([self.scan_record(row) for row in rows], columns=SCAN_COLUMNS)
        for column in ("witness_prime", "witness_f", "P_f", "N_f"):
            df[column] = df[column].astype("Int64")
        return df

    def scan_csv(self, rows: Iterable[ScanRow]) -> str:
        """Scan rows as CSV with a header line."""
        return self.scan_frame(rows).to_csv(index=False)

    def scan_document(self, rows: List[ScanRow], low: int, high: int) -> Dict:
        """JSON scan document; m and the range bounds are strings."""
        return {
            "schema_version": self.schema_version,
            "range": [str(low), str(high)],
            "rows": [dict(self.scan_record(row), m=str(row.m)) for row in rows],
            "summary": RangeScanner.summary(rows),
        }

    def scan_text(self, rows: List[ScanRow]) -> str:
        """Scan table followed by the verdict counts."""
        table = self.scan_frame(rows).to_string(index=False)
        summary = ", ".join(f"{k}: {v}" for k, v in RangeScanner.summary(rows).items())
        return f"{table}\n{summary}\n"
