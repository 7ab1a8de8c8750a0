"""Matrix Market reader/writer for the dense matrices this library eats.

Supports the text format's ``array`` and ``coordinate`` layouts with
``real``/``complex``/``integer`` fields and ``general``/``symmetric``/
``hermitian`` symmetry.  Symmetric and hermitian files must store only
the lower triangle; they come back fully expanded.  ``pattern`` files
carry no values and are rejected.  Every malformed-input path raises
:class:`MatrixMarketError` with a message naming the offence and, where
it helps, the line number.
"""

from __future__ import annotations

import cmath
import numpy as np

_FORMATS = ("array", "coordinate")
_FIELDS = ("real", "complex", "integer")
_SYMMETRIES = ("general", "symmetric", "hermitian")


class MatrixMarketError(ValueError):
    """Raised for any malformed or unsupported Matrix Market input."""


def _fail(msg: str, lineno: int | None = None):
    where = f" (line {lineno})" if lineno is not None else ""
    raise MatrixMarketError(msg + where)


def _data_lines(lines):
    """Yield (lineno, stripped_line) skipping comments and blanks."""
    for lineno, raw in lines:
        s = raw.strip()
        if not s or s.startswith("%"):
            continue
        yield lineno, s


def _parse_value(tokens, field, lineno):
    if field == "complex" and len(tokens) != 2:
        _fail(f"complex entry needs 2 values, got {len(tokens)}", lineno)
    if field != "complex" and len(tokens) != 1:
        _fail(f"{field} entry needs 1 value, got {len(tokens)}", lineno)
    try:
        if field == "complex":
            return complex(float(tokens[0]), float(tokens[1]))
        return int(tokens[0]) if field == "integer" else float(tokens[0])
    except ValueError:
        _fail(f"cannot parse {field} value from {' '.join(tokens)!r}", lineno)


def read_matrix_market(path) -> np.ndarray:
    """Read a Matrix Market file into a dense ndarray.

    Real and integer files give float64, complex files complex128.
    Symmetric/hermitian inputs are expanded to full storage; a hermitian
    file whose diagonal carries a nonzero imaginary part is rejected.
    """
    with open(path, "r", encoding="ascii") as fh:
        lines = list(enumerate(fh, start=1))
    if not lines:
        _fail("empty file")
    header = lines[0][1].strip().split()
    if len(header) != 5 or header[0] != "%%MatrixMarket":
        _fail(f"malformed header {lines[0][1].strip()!r}: expected "
              "'%%MatrixMarket matrix <format> <field> <symmetry>'", 1)
    obj, fmt, field, symmetry = (t.lower() for t in header[1:])
    if obj != "matrix":
        _fail(f"unsupported object {obj!r}: only 'matrix'", 1)
    if fmt not in _FORMATS:
        _fail(f"unsupported format {fmt!r}: choose from {_FORMATS}", 1)
    if field == "pattern":
        _fail("'pattern' field carries no numeric values and is "
              "unsupported", 1)
    if field not in _FIELDS:
        _fail(f"unsupported field {field!r}: choose from {_FIELDS}", 1)
    if symmetry == "skew-symmetric":
        _fail("unsupported symmetry 'skew-symmetric'", 1)
    if symmetry not in _SYMMETRIES:
        _fail(f"unsupported symmetry {symmetry!r}: choose from "
              f"{_SYMMETRIES}", 1)

    body = _data_lines(lines[1:])
    try:
        lineno, size_line = next(body)
    except StopIteration:
        _fail("missing size line")
    size_tokens = size_line.split()
    if not all(t.lstrip("-").isdigit() for t in size_tokens):
        _fail(f"size line must hold integers, got {size_line!r}", lineno)
    dtype = np.complex128 if field == "complex" else np.float64

    if fmt == "array":
        if len(size_tokens) != 2:
            _fail(f"array size line needs 'rows cols', got {size_line!r}",
                  lineno)
        rows, cols = (int(t) for t in size_tokens)
        if rows < 0 or cols < 0:
            _fail(f"negative dimensions {rows}x{cols}", lineno)
        if symmetry != "general" and rows != cols:
            _fail(f"{symmetry} matrix must be square, got {rows}x{cols}",
                  lineno)
        a = np.zeros((rows, cols), dtype=dtype)
        # Column-major; symmetric/hermitian store the lower triangle only.
        if symmetry == "general":
            slots = [(i, j) for j in range(cols) for i in range(rows)]
        else:
            slots = [(i, j) for j in range(cols) for i in range(j, rows)]
        filled = 0
        for lineno, s in body:
            if filled >= len(slots):
                _fail(f"more entries than the {rows}x{cols} {symmetry} "
                      f"array holds", lineno)
            i, j = slots[filled]
            val = _parse_value(s.split(), field, lineno)
            _store(a, i, j, val, symmetry, lineno)
            filled += 1
        if filled != len(slots):
            _fail(f"array body ended after {filled} of {len(slots)} entries")
        return a

    if len(size_tokens) != 3:
        _fail(f"coordinate size line needs 'rows cols nnz', got "
          f"{size_line!r}", lineno)
    rows, cols, nnz = (int(t) for t in size_tokens)
    if rows < 0 or cols < 0 or nnz < 0:
        _fail(f"negative size line values {size_line!r}", lineno)
    if symmetry != "general" and rows != cols:
        _fail(f"{symmetry} matrix must be square, got {rows}x{cols}", lineno)
    a = np.zeros((rows, cols), dtype=dtype)
    seen = set()
    count = 0
    for lineno, s in body:
        tokens = s.split()
        if len(tokens) < 3:
            _fail(f"coordinate entry needs 'i j value...', got {s!r}", lineno)
        try:
            i, j = int(tokens[0]) - 1, int(tokens[1]) - 1
        except ValueError:
            _fail(f"cannot parse entry indices from {s!r}", lineno)
        if not (0 <= i < rows and 0 <= j < cols):
            _fail(f"entry index ({i + 1}, {j + 1}) outside declared "
                  f"{rows}x{cols} shape", lineno)
        if symmetry != "general" and i < j:
            _fail(f"{symmetry} file must store the lower triangle only, "
                  f"found entry ({i + 1}, {j + 1})", lineno)
        if (i, j) in seen:
            _fail(f"duplicate entry at ({i + 1}, {j + 1})", lineno)
        seen.add((i, j))
        val = _parse_value(tokens[2:], field, lineno)
        _store(a, i, j, val, symmetry, lineno)
        count += 1
    if count != nnz:
        _fail(f"size line declared {nnz} entries but body held {count}")
    return a


def _store(a, i, j, val, symmetry, lineno):
    if not cmath.isfinite(complex(val)):
        _fail(f"non-finite entry {val!r} at ({i + 1}, {j + 1})", lineno)
    a[i, j] = val
    if symmetry == "general" or i == j:
        if symmetry == "hermitian" and i == j and complex(val).imag != 0.0:
            _fail(f"hermitian matrix has complex diagonal entry {val!r} "
                  f"at ({i + 1}, {j + 1})", lineno)
        return
    a[j, i] = val.conjugate() if symmetry == "hermitian" else val


def write_matrix_market(path, a, comment: str | None = None) -> None:
    """Write a dense matrix as 'array general' with 17 significant
    digits, enough for float64 values to round-trip exactly."""
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError(f"need a 2-D matrix, got shape {a.shape}")
    is_complex = np.iscomplexobj(a)
    field = "complex" if is_complex else "real"
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"%%MatrixMarket matrix array {field} general\n")
        if comment:
            for line in comment.splitlines():
                fh.write(f"% {line}\n")
        rows, cols = a.shape
        fh.write(f"{rows} {cols}\n")
        for j in range(cols):
            for i in range(rows):
                v = a[i, j]
                if is_complex:
                    fh.write(f"{v.real:.17g} {v.imag:.17g}\n")
                else:
                    fh.write(f"{float(v):.17g}\n")
