import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from sage_qht.scalars.gaussian import GaussianRational

from .algebra import commutator_table

logger = logging.getLogger(__name__)

REFERENCE_PATH = Path(__file__).resolve().parent.parent / "data" / "reference_tables.json"


@lru_cache(maxsize=None)
def load_reference_tables():
    with REFERENCE_PATH.open(encoding="utf-8") as handle:
        return json.load(handle)


def reference_table(name):
    """Printed table ``name`` as ``{(i, j): {k: GaussianRational}}``."""
    raw = load_reference_tables()[str(name)]
    table = {}
    for key, result in raw["pairs"].items():
        i, j = (int(part) for part in key.split(","))
        table[(i, j)] = {int(k): GaussianRational.from_string(v) for k, v in result.items()}
    return table


@dataclass(frozen=True)
class DiscrepancyEntry:
    pair: tuple
    oracle: dict
    reference: dict

    @property
    def match(self):
        return self.oracle == self.reference

    def to_dict(self):
        return {
            "i": self.pair[0],
            "j": self.pair[1],
            "oracle": {str(k): str(v) for k, v in sorted(self.oracle.items())},
            "reference": {str(k): str(v) for k, v in sorted(self.reference.items())},
            "match": self.match,
        }


@dataclass(frozen=True)
class DiscrepancyReport:
    """Entry-by-entry comparison of a computed table with a printed one."""

    catalog: str
    reference: str
    entries: tuple
    notes: tuple = ()

    @property
    def matched(self):
        return sum(entry.match for entry in self.entries)

    @property
    def total(self):
        return len(self.entries)

    @property
    def mismatches(self):
        return [entry for entry in self.entries if not entry.match]

    @property
    def is_clean(self):
        return self.matched == self.total

    def to_dict(self):
        return {
            "catalog": str(self.catalog),
            "reference": str(self.reference),
            "matched": self.matched,
            "total": self.total,
            "entries": [entry.to_dict() for entry in self.entries],
            "notes": list(self.notes),
        }


def compare_tables(catalog, table, reference_name):
    """Report ``table`` (a ``CommutatorTable``) against the printed table."""
    printed = reference_table(reference_name)
    entries = []
    for pair in sorted(printed):
        computed = table.get(*pair).coefficients
        entries.append(DiscrepancyEntry(pair, dict(computed), printed[pair]))
    report = DiscrepancyReport(
        catalog,
        reference_name,
        tuple(entries),
        tuple(load_reference_tables()[str(reference_name)].get("notes", ())),
    )
    for entry in report.mismatches:
        logger.warning(
            "%s%s differs from the printed table: computed %s, printed %s",
            catalog,
            entry.pair,
            entry.to_dict()["oracle"],
            entry.to_dict()["reference"],
        )
    logger.info("%s: %d/%d entries match", catalog, report.matched, report.total)
    return report


def verify_against_reference(catalog):
    return compare_tables(catalog, commutator_table(catalog), catalog)
