"""Matrix Market array-format I/O.

The canonical form written here is the dense array format with a complex
general header, entries in column-major order, one "re im" pair per line
formatted with the shortest exact decimal representation.  Reading a
canonical file and writing it back reproduces the bytes exactly.  Real
and integer files are accepted on input and widened to complex.
"""

from __future__ import annotations

import numpy as np

from .linalg import as_matrix

__all__ = [
    "format_matrix",
    "parse_matrix",
    "write_matrix",
    "read_matrix",
    "write_vector",
    "read_vector",
]

_HEADER = "%%MatrixMarket matrix array complex general"


def format_matrix(A) -> str:
    """Render a matrix in the canonical Matrix Market array form."""
    A = as_matrix(A)
    m, n = A.shape
    lines = [_HEADER, f"{m} {n}"]
    for j in range(n):
        for i in range(m):
            z = complex(A[i, j])
            lines.append(f"{z.real!r} {z.imag!r}")
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    """Parse Matrix Market array-format text into a complex matrix."""
    lines = iter(text.splitlines())
    try:
        header = next(lines)
    except StopIteration:
        raise ValueError("empty Matrix Market input") from None
    tokens = header.split()
    if len(tokens) != 5 or tokens[0] != "%%MatrixMarket":
        raise ValueError("malformed Matrix Market header")
    _, obj, fmt, field, symmetry = (t.lower() for t in tokens)
    if obj != "matrix" or fmt != "array":
        raise ValueError("only dense matrix array files are supported")
    if field not in ("real", "complex", "integer"):
        raise ValueError(f"unsupported field {field!r}")
    if symmetry != "general":
        raise ValueError(f"unsupported symmetry {symmetry!r}")

    body = (line for line in lines if line.strip() and not line.lstrip().startswith("%"))
    try:
        size_tokens = next(body).split()
    except StopIteration:
        raise ValueError("missing size line") from None
    if len(size_tokens) != 2:
        raise ValueError("malformed size line")
    m, n = (int(t) for t in size_tokens)
    if m < 1 or n < 1:
        raise ValueError("matrix dimensions must be positive")

    values = np.zeros(m * n, dtype=np.complex128)
    count = 0
    for line in body:
        if count >= m * n:
            raise ValueError("too many entries")
        parts = line.split()
        if field == "complex":
            if len(parts) != 2:
                raise ValueError(f"expected 're im' on line: {line!r}")
            values[count] = complex(float(parts[0]), float(parts[1]))
        else:
            if len(parts) != 1:
                raise ValueError(f"expected one value on line: {line!r}")
            values[count] = float(parts[0])
        count += 1
    if count != m * n:
        raise ValueError(f"expected {m * n} entries, found {count}")
    return values.reshape((n, m)).T.copy()


def write_matrix(path, A) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_matrix(A))


def read_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="ascii") as fh:
        return parse_matrix(fh.read())


def write_vector(path, v) -> None:
    v = np.asarray(v, dtype=np.complex128)
    if v.ndim == 1:
        v = v[:, None]
    write_matrix(path, v)


def read_vector(path) -> np.ndarray:
    """Read an n-by-1 matrix file as a vector."""
    mat = read_matrix(path)
    if mat.shape[1] != 1:
        raise ValueError(f"expected an n-by-1 vector file, got shape {mat.shape}")
    return mat[:, 0]
