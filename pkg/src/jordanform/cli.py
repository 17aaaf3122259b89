"""Command-line front end: matrix ingestion, subcommands, exit codes.

Exit code contract: 0 success, 1 negative answer from ``similar`` or
``validate``, 2 parse or usage error, 3 irrational spectrum, 4 dimension
or shape error. Diagnostics go to stderr; stdout stays clean on errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .jordan import (
    DimensionMismatch,
    IrrationalSpectrum,
    JordanDecomposition,
    char_poly,
    generalized_eigenspace,
    jordan_form,
    jordan_structure,
    matrix_exp,
    restrict,
    similar,
    validate_decomposition,
)
from .matrices import Mat
from .nilpotent import block_sizes, d_sequence
from .polynomials import Poly
from .rationals import parse_rational

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_IRRATIONAL = 3
EXIT_SHAPE = 4


class ParseError(Exception):
    """Matrix input that does not conform to the text or JSON format."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None,
                 column: int | None = None):
        position = source
        if line is not None:
            position += f":{line}"
            if column is not None:
                position += f":{column}"
        super().__init__(f"{position}: {message}")


class RaggedRows(ParseError):
    """Rows of different lengths."""


class EmptyInput(ParseError):
    """No matrix rows at all."""


class ShapeError(Exception):
    """Input matrices with unusable dimensions for the requested command."""


@dataclass(frozen=True)
class MatrixDocument:
    matrix: Mat
    source: str


def parse_matrix_text(text: str, source: str = "<input>") -> MatrixDocument:
    """Whitespace-separated rational tokens, one row per line, ``#`` comments."""
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        column = 1
        for token in line.split():
            try:
                row.append(parse_rational(token))
            except ValueError:
                column = line.index(token) + 1
                raise ParseError(
                    f"bad rational token {token!r}", source, lineno, column
                ) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise RaggedRows(
                f"row has {len(row)} entries, expected {width}", source, lineno
            )
        rows.append(row)
    if not rows:
        raise EmptyInput("no matrix rows found", source)
    return MatrixDocument(matrix=Mat(rows), source=source)


def parse_matrix_json(text: str, source: str = "<input>") -> MatrixDocument:
    """Object with key ``matrix``: array of arrays of ints or rational strings."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", source) from None
    if not isinstance(payload, dict) or "matrix" not in payload:
        raise ParseError('expected an object with a "matrix" key', source)
    raw = payload["matrix"]
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise ParseError('"matrix" must be an array of arrays', source)
    if not raw or not any(raw):
        raise EmptyInput("no matrix rows found", source)
    width = len(raw[0])
    rows = []
    for i, raw_row in enumerate(raw, start=1):
        if len(raw_row) != width:
            raise RaggedRows(f"row has {len(raw_row)} entries, expected {width}", source, i)
        row = []
        for entry in raw_row:
            if isinstance(entry, int) and not isinstance(entry, bool):
                row.append(parse_rational(str(entry)))
            elif isinstance(entry, str):
                try:
                    row.append(parse_rational(entry))
                except ValueError:
                    raise ParseError(f"bad rational entry {entry!r}", source, i) from None
            else:
                raise ParseError(f"entry {entry!r} is not an integer or string", source, i)
        rows.append(row)
    return MatrixDocument(matrix=Mat(rows), source=source)


def format_matrix_json(m: Mat) -> str:
    """Serialize a matrix in the JSON input format (rationals as strings)."""
    return json.dumps({"matrix": [[str(x) for x in m.row(i)] for i in range(m.nrows)]})


def _load_document(path: str, fmt: str | None) -> MatrixDocument:
    if path == "-":
        text = sys.stdin.read()
        source = "<stdin>"
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
        source = path
    use_json = fmt == "json" or (fmt is None and path.endswith(".json"))
    parser = parse_matrix_json if use_json else parse_matrix_text
    return parser(text, source)


def _require_square(doc: MatrixDocument) -> Mat:
    if not doc.matrix.is_square or doc.matrix.nrows == 0:
        raise ShapeError(
            f"{doc.source}: matrix is {doc.matrix.nrows}x{doc.matrix.ncols}, "
            "expected square and nonempty"
        )
    return doc.matrix


def _matrix_rows(m: Mat) -> list[list[str]]:
    return [[str(x) for x in m.row(i)] for i in range(m.nrows)]


def _cmd_jordan(args) -> int:
    a = _require_square(_load_document(args.file, args.format))
    dec = jordan_form(a)
    if args.json:
        payload = {
            "eigenvalues": [
                {"value": str(lam), "blocks": list(sizes)}
                for lam, sizes in dec.spectrum_blocks
            ],
            "J": _matrix_rows(dec.j),
            "P": _matrix_rows(dec.p),
        }
        print(json.dumps(payload))
    else:
        for lam, sizes in dec.spectrum_blocks:
            print(f"eigenvalue {lam}: blocks {list(sizes)}")
        print("J =")
        print(dec.j)
        print("P =")
        print(dec.p)
    return EXIT_OK


def _cmd_blocks(args) -> int:
    a = _require_square(_load_document(args.file, args.format))
    try:
        lam = parse_rational(args.eigenvalue)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    p = char_poly(a)
    mult = 0
    factor = Poly([-lam, 1])
    while p.degree >= 1 and p(lam) == 0:
        p = divmod(p, factor)[0]
        mult += 1
    if mult == 0:
        raise ShapeError(f"{lam} is not an eigenvalue")
    basis = generalized_eigenspace(a, lam, mult)
    shifted = restrict(a, basis) - lam * Mat.identity(mult)
    seq = d_sequence(shifted)
    sizes = block_sizes(shifted)
    print("d-sequence:", " ".join(str(v) for v in seq.values))
    print("block sizes:", " ".join(str(s) for s in sizes))
    return EXIT_OK


def _cmd_similar(args) -> int:
    a = _require_square(_load_document(args.file_a, args.format))
    b = _require_square(_load_document(args.file_b, args.format))
    if a.nrows != b.nrows:
        raise ShapeError(f"dimensions differ: {a.nrows} vs {b.nrows}")
    witness = similar(a, b)
    if witness is None:
        print("not similar")
        return EXIT_NEGATIVE
    print("similar")
    if args.witness:
        print("S =")
        print(witness)
    return EXIT_OK


def _cmd_expm(args) -> int:
    a = _require_square(_load_document(args.file, args.format))
    exp = matrix_exp(a)
    for lam, coeff in exp.terms:
        print(f"exp({lam}*t) *")
        for row in coeff:
            print("[" + ", ".join(entry.format("t") for entry in row) + "]")
    return EXIT_OK


def _cmd_validate(args) -> int:
    a = _require_square(_load_document(args.file, args.format))
    p = _require_square(_load_document(args.p, args.format))
    j = _require_square(_load_document(args.j, args.format))
    n = a.nrows
    if p.nrows != n or j.nrows != n:
        raise ShapeError(f"matrices must all be {n}x{n}")
    structure = jordan_structure(j) or ()
    dec = JordanDecomposition(spectrum_blocks=structure, j=j, p=p)
    if validate_decomposition(a, dec):
        print("valid")
        return EXIT_OK
    print("invalid")
    return EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jordanform",
        description="Exact Jordan canonical forms of rational matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=["text", "json"], default=None,
                       help="input format (default: by file extension)")

    p_jordan = sub.add_parser("jordan", help="Jordan form, transition matrix and blocks")
    p_jordan.add_argument("file", help="matrix file, or - for stdin")
    p_jordan.add_argument("--json", action="store_true", help="machine-readable output")
    add_common(p_jordan)
    p_jordan.set_defaults(handler=_cmd_jordan)

    p_blocks = sub.add_parser("blocks", help="invariants of one eigenvalue")
    p_blocks.add_argument("file")
    p_blocks.add_argument("--eigenvalue", required=True, metavar="Q")
    add_common(p_blocks)
    p_blocks.set_defaults(handler=_cmd_blocks)

    p_similar = sub.add_parser("similar", help="similarity test with optional witness")
    p_similar.add_argument("file_a")
    p_similar.add_argument("file_b")
    p_similar.add_argument("--witness", action="store_true", help="print the conjugator")
    add_common(p_similar)
    p_similar.set_defaults(handler=_cmd_similar)

    p_expm = sub.add_parser("expm", help="closed-form exp(tA)")
    p_expm.add_argument("file")
    add_common(p_expm)
    p_expm.set_defaults(handler=_cmd_expm)

    p_validate = sub.add_parser("validate", help="check a proposed decomposition")
    p_validate.add_argument("file")
    p_validate.add_argument("--p", required=True, help="transition matrix file")
    p_validate.add_argument("--j", required=True, help="Jordan matrix file")
    add_common(p_validate)
    p_validate.set_defaults(handler=_cmd_validate)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Execute one command line; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IrrationalSpectrum as exc:
        print(
            f"error: eigenvalues are not all rational (residual: {exc.residual})",
            file=sys.stderr,
        )
        return EXIT_IRRATIONAL
    except (ShapeError, DimensionMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SHAPE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
