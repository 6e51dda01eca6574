import argparse
import logging
import sys

import numpy as np
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError, CommandParser

from sage_qht.helpers.choices import Catalog, MatrixCatalog, OutputFormat
from sage_qht.helpers.exceptions import NonInvertible, NotClosed, NotInX, QhtError, UnknownIndex
from sage_qht.helpers.validators import (
    load_json,
    parse_expression,
    parse_matrix,
    parse_quaternion,
    parse_transform,
)
from sage_qht.holomorphy import classify_holomorphy, sample_points
from sage_qht.matgroup import (
    algebra_generator,
    classify,
    exp_generator,
    exp_series,
    matrix_basis,
    verify_matrix_table,
)
from sage_qht.qht import apply, fixed_points
from sage_qht.symop import (
    adjoint_rep,
    jacobi_violations,
    structure_constants,
    verify_against_reference,
)
from sage_qht.utils.encoders import dumps

logger = logging.getLogger(__name__)

INPUT_ERROR = 1
INVARIANT_FAILURE = 2
DOMAIN_VIOLATION = 3


class QhtCommandParser(CommandParser):
    """Sub-command parser whose usage errors exit with the input-error code."""

    def error(self, message):
        if self.called_from_command_line:
            self.print_usage(sys.stderr)
            self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")
        raise CommandError(f"Error: {message}", returncode=INPUT_ERROR)


def _messages(error):
    return "; ".join(error.messages) if isinstance(error, ValidationError) else str(error)


def _format_complex(value):
    value = complex(value)
    return f"{value.real:.12g}{value.imag:+.12g}i"


def _format_matrix(matrix):
    return "\n".join(
        "  [" + ", ".join(_format_complex(value) for value in row) + "]" for row in matrix
    )


class Command(BaseCommand):
    help = (
        "Verify the QHT algebra tables, classify group elements, apply QHTs, "
        "check holomorphy and evaluate exponentials."
    )

    def add_arguments(self, parser):
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument(
            "--format",
            choices=OutputFormat.values,
            default=OutputFormat.TEXT,
            help="Output format (default: text).",
        )
        common.add_argument(
            "--tol", type=float, default=None, help="Tolerance override for this run."
        )
        common.add_argument(
            "--seed", type=int, default=None, help="Sampling seed (default: QHT_SAMPLE_SEED)."
        )

        subparsers = parser.add_subparsers(
            dest="command", required=True, parser_class=QhtCommandParser
        )
        subparsers.add_parser(
            "verify-tables", parents=[common], help="Compare computed and printed commutator tables."
        )
        classify_parser = subparsers.add_parser(
            "classify", parents=[common], help="Report the subgroups a 3x3 matrix belongs to."
        )
        classify_parser.add_argument("file", help="Matrix JSON file with a 'rows' key.")
        apply_parser = subparsers.add_parser(
            "apply", parents=[common], help="Apply a QHT to a quaternion."
        )
        apply_parser.add_argument("file", help="Transform JSON file with keys 'u' and 'v'.")
        apply_parser.add_argument("--point", required=True, help="Quaternion JSON.")
        holo_parser = subparsers.add_parser(
            "holo-check", parents=[common], help="Classify an expression in q and qbar."
        )
        holo_parser.add_argument("expr", help="For example 'q*i + j'.")
        exp_parser = subparsers.add_parser(
            "exp", parents=[common], help="exp(t x_i) in closed form and by series."
        )
        exp_parser.add_argument("--generator", type=int, required=True, help="Index 1..6.")
        exp_parser.add_argument("--t", type=float, required=True, help="Real parameter.")

        # Django 4.2 does not forward this flag to sub-parsers
        for subparser in subparsers.choices.values():
            subparser.called_from_command_line = parser.called_from_command_line

    def handle(self, *args, **options):
        handlers = {
            "verify-tables": self.verify_tables,
            "classify": self.classify_matrix,
            "apply": self.apply_transform,
            "holo-check": self.holo_check,
            "exp": self.exponential,
        }
        payload, text = handlers[options["command"]](options)
        if options["format"] == OutputFormat.JSON:
            self.stdout.write(dumps(payload))
        else:
            self.stdout.write(text)

    def _read(self, path):
        try:
            with open(path, encoding="utf-8") as handle:
                return load_json(handle.read())
        except OSError as error:
            raise CommandError(f"Cannot read {path}: {error}", returncode=INPUT_ERROR) from error
        except ValidationError as error:
            raise CommandError(_messages(error), returncode=INPUT_ERROR) from error

    def verify_tables(self, options):
        try:
            reports = [verify_against_reference(catalog) for catalog in Catalog]
            reports += [verify_matrix_table(catalog) for catalog in MatrixCatalog]
        except NotClosed as error:
            raise CommandError(str(error), returncode=INVARIANT_FAILURE) from error

        failures = []
        for catalog in Catalog:
            for triple in jacobi_violations(catalog):
                failures.append(f"Jacobi identity fails for {catalog}{triple}")
        failures += self._adjoint_failures(Catalog.X)
        for catalog in MatrixCatalog:
            failures += self._matrix_jacobi_failures(catalog)

        payload = {
            "reports": [report.to_dict() for report in reports],
            "invariant_failures": failures,
        }
        lines = []
        for report in reports:
            lines.append(f"{report.catalog}: {report.matched}/{report.total} entries match")
            for entry in report.mismatches:
                row = entry.to_dict()
                lines.append(
                    f"  [{entry.pair[0]},{entry.pair[1]}] computed {row['oracle']} printed {row['reference']}"
                )
            lines.extend(f"  note: {note}" for note in report.notes)
        lines.extend(f"FAILED: {failure}" for failure in failures)

        if failures:
            self.stdout.write(dumps(payload) if options["format"] == OutputFormat.JSON else "\n".join(lines))
            raise CommandError("Internal invariants failed.", returncode=INVARIANT_FAILURE)
        logger.info("Verified %d tables", len(reports))
        return payload, "\n".join(lines)

    @staticmethod
    def _adjoint_failures(catalog):
        adjoint = adjoint_rep(catalog)
        constants = structure_constants(catalog)
        constants_rows = range(len(adjoint))
        failures = []
        for i in constants_rows:
            for j in constants_rows:
                bracket = adjoint[i].dot(adjoint[j]) - adjoint[j].dot(adjoint[i])
                expected = sum(
                    (constants[i, j, k] * adjoint[k] for k in constants_rows),
                    np.zeros_like(bracket),
                )
                if any(value for value in (bracket - expected).flat):
                    failures.append(f"ad representation fails for {catalog}({i + 1},{j + 1})")
        return failures

    @staticmethod
    def _matrix_jacobi_failures(catalog):
        matrices = matrix_basis(catalog, exact=True)

        def bracket(a, b):
            return a.dot(b) - b.dot(a)

        failures = []
        n = len(matrices)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    a, b, c = matrices[i], matrices[j], matrices[k]
                    total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(
                        c, bracket(a, b)
                    )
                    if any(value for value in total.flat):
                        failures.append(f"Jacobi identity fails for {catalog}{(i + 1, j + 1, k + 1)}")
        return failures

    def classify_matrix(self, options):
        try:
            matrix = parse_matrix(self._read(options["file"]))
        except ValidationError as error:
            raise CommandError(_messages(error), returncode=INPUT_ERROR) from error
        try:
            classification = classify(matrix, tol=options["tol"])
        except NotInX as error:
            raise CommandError(str(error), returncode=DOMAIN_VIOLATION) from error
        payload = classification.to_dict()
        return payload, "flags: " + ", ".join(payload["flags"])

    def apply_transform(self, options):
        try:
            transform = parse_transform(self._read(options["file"]))
            point = parse_quaternion(load_json(options["point"]))
        except ValidationError as error:
            raise CommandError(_messages(error), returncode=INPUT_ERROR) from error

        if not transform.is_invertible:
            warning = str(NonInvertible("u = 0: the transform is a constant map."))
            logger.warning("Applying a non-invertible transform %s", transform)
            self.stderr.write(f"NonInvertible: {warning}")
        result = apply(transform, point)
        fixed = fixed_points(transform)
        payload = {
            "result": result.to_dict(),
            "fixed_points": fixed.to_dict(),
            "invertible": transform.is_invertible,
        }
        text = [f"G(q) = {result}", f"fixed points: {fixed.kind.value}"]
        if fixed.finite_point is not None:
            text.append(f"finite fixed point: {fixed.finite_point}")
        return payload, "\n".join(text)

    def holo_check(self, options):
        try:
            expression = parse_expression(options["expr"])
        except ValidationError as error:
            raise CommandError(_messages(error), returncode=INPUT_ERROR) from error
        try:
            verdict = classify_holomorphy(
                expression, sample_points(seed=options["seed"]), tol=options["tol"]
            )
        except QhtError as error:
            raise CommandError(str(error), returncode=DOMAIN_VIOLATION) from error
        payload = {"expression": str(expression), **verdict.to_dict()}
        text = (
            f"{expression}: {verdict.verdict.value} "
            f"(max residual {verdict.max_residual:.3e} at {verdict.worst_point})"
        )
        return payload, text

    def exponential(self, options):
        index, t = options["generator"], options["t"]
        try:
            closed = exp_generator(index, t)
        except UnknownIndex as error:
            raise CommandError(str(error), returncode=INPUT_ERROR) from error
        series = exp_series(t * algebra_generator(MatrixCatalog.XHAT, index), tol=None)
        difference = float(np.abs(closed.to_matrix() - series).max())
        classification = classify(closed, tol=options["tol"])
        payload = {
            "generator": index,
            "t": t,
            "closed_form": closed.to_dict(),
            "series": {"rows": [[[v.real, v.imag] for v in row] for row in series.tolist()]},
            "max_difference": difference,
            "flags": classification.to_dict()["flags"],
        }
        text = "\n".join(
            [
                f"exp({t} x{index}) =",
                _format_matrix(closed.to_matrix()),
                f"series agreement: {difference:.3e}",
                "flags: " + ", ".join(payload["flags"]),
            ]
        )
        return payload, text
