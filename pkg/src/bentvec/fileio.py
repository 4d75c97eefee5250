"""Bit-exact file formats for truth tables and vectorial lookup tables.

BF format (Boolean function):

    BF n=<int> field=<hex modulus>
    <2^n bits packed 4 per hex character>

The payload character at position p carries table indices 4p..4p+3, index
4p in the least significant bit of the nibble.  A single payload line,
lowercase hex on write, either case accepted on read.

VF format (vectorial function):

    VF n=<int> m=<int> t=<int> field=<hex modulus>
    <2^n lines of output values>

Each output line is the subfield value in hex, followed by "." and the
extra bits in hex when t > 0.

The field model is reconstructed from the header modulus: the shipped
generator when the modulus matches the built-in table, otherwise the
least primitive element for that modulus.  Writes are atomic
(temp file + rename) and carry no timestamps.
"""

from __future__ import annotations

import os
import tempfile

import numpy as np

from .boolfun import BooleanFunction
from .errors import ParseError
from .gf2n import PRIMITIVE_POLYNOMIALS, FieldSpec
from .vectorial import VectorialFunction


def field_from_modulus(n, modulus):
    """FieldSpec for a header modulus, deterministic generator choice."""
    if PRIMITIVE_POLYNOMIALS.get(n) == modulus:
        return FieldSpec.default(n)
    return FieldSpec.with_least_generator(n, modulus)


def atomic_write_text(path, text):
    """Write text to path atomically (same-directory temp + rename)."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".bentvec-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _pack_bits(table):
    chars = []
    bits = np.asarray(table, dtype=np.uint8)
    padded = np.zeros((len(bits) + 3) // 4 * 4, dtype=np.uint8)
    padded[: len(bits)] = bits
    for p in range(0, len(padded), 4):
        nib = padded[p] | (padded[p + 1] << 1) | (padded[p + 2] << 2) | (padded[p + 3] << 3)
        chars.append(f"{nib:x}")
    return "".join(chars)


def bf_to_text(f: BooleanFunction):
    header = f"BF n={f.n} field={f.field.modulus:x}"
    return header + "\n" + _pack_bits(f.table) + "\n"


def write_bf(path, f: BooleanFunction):
    atomic_write_text(path, bf_to_text(f))


def parse_header(line, expected_tag, keys):
    tokens = line.split()
    if not tokens or tokens[0] != expected_tag:
        raise ParseError(f"expected header tag {expected_tag!r}", line=1, column=1)
    values = {}
    col = len(expected_tag) + 1
    for token in tokens[1:]:
        col = line.index(token, col - 1) + 1
        if "=" not in token:
            raise ParseError(f"malformed header field {token!r}", line=1, column=col)
        key, _, raw = token.partition("=")
        if key not in keys:
            raise ParseError(f"unknown header field {key!r}", line=1, column=col)
        try:
            values[key] = int(raw, 16 if key == "field" else 10)
        except ValueError:
            raise ParseError(
                f"bad value for header field {key!r}", line=1, column=col
            ) from None
        col += len(token) + 1
    missing = [k for k in keys if k not in values]
    if missing:
        raise ParseError(f"missing header fields {missing}", line=1, column=1)
    return values


def bf_from_text(text, field=None):
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty file", line=1, column=1)
    header = parse_header(lines[0], "BF", ("n", "field"))
    n = header["n"]
    if not 1 <= n <= 24:
        raise ParseError(f"n={n} out of range", line=1, column=1)
    spec = field if field is not None else field_from_modulus(n, header["field"])
    if spec.n != n:
        raise ParseError("field override degree mismatch", line=1, column=1)
    if len(lines) < 2:
        raise ParseError("missing truth-table payload", line=2, column=1)
    payload = lines[1].strip()
    size = 1 << n
    expect = (size + 3) // 4
    if len(payload) != expect:
        raise ParseError(
            f"payload must be {expect} hex characters, got {len(payload)}",
            line=2,
            column=len(payload) + 1,
        )
    table = np.zeros(size, dtype=np.uint8)
    for p, ch in enumerate(payload):
        try:
            nib = int(ch, 16)
        except ValueError:
            raise ParseError(f"bad hex character {ch!r}", line=2, column=p + 1) from None
        for j in range(4):
            idx = 4 * p + j
            if idx < size:
                table[idx] = (nib >> j) & 1
            elif (nib >> j) & 1:
                raise ParseError("padding bits must be zero", line=2, column=p + 1)
    for extra, line in enumerate(lines[2:], start=3):
        if line.strip():
            raise ParseError("unexpected trailing content", line=extra, column=1)
    return BooleanFunction(spec, table)


def read_bf(path, field=None):
    with open(path, "r") as handle:
        return bf_from_text(handle.read(), field=field)


def vf_to_text(F: VectorialFunction):
    header = f"VF n={F.n} m={F.m} t={F.t} field={F.field.modulus:x}"
    lines = [header]
    if F.t:
        for value, extra in zip(F.values, F.extra):
            lines.append(f"{int(value):x}.{int(extra):x}")
    else:
        lines.extend(f"{int(value):x}" for value in F.values)
    return "\n".join(lines) + "\n"


def write_vf(path, F: VectorialFunction):
    atomic_write_text(path, vf_to_text(F))


def vf_from_text(text, field=None):
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty file", line=1, column=1)
    header = parse_header(lines[0], "VF", ("n", "m", "t", "field"))
    n, m, t = header["n"], header["m"], header["t"]
    if not 1 <= n <= 24:
        raise ParseError(f"n={n} out of range", line=1, column=1)
    spec = field if field is not None else field_from_modulus(n, header["field"])
    if spec.n != n:
        raise ParseError("field override degree mismatch", line=1, column=1)
    size = 1 << n
    body = lines[1:]
    if len([ln for ln in body if ln.strip()]) != size:
        raise ParseError(
            f"expected {size} output lines, got {len([l for l in body if l.strip()])}",
            line=len(lines) + 1,
            column=1,
        )
    values = np.zeros(size, dtype=np.int64)
    extra = np.zeros(size, dtype=np.int64)
    row = 0
    for lineno, line in enumerate(body, start=2):
        entry = line.strip()
        if not entry:
            continue
        value_part, dot, extra_part = entry.partition(".")
        if t == 0 and dot:
            raise ParseError("t=0 entries must not carry extra bits", line=lineno, column=len(value_part) + 1)
        if t > 0 and not dot:
            raise ParseError("entry is missing its extra bits", line=lineno, column=len(entry) + 1)
        try:
            values[row] = int(value_part, 16)
        except ValueError:
            raise ParseError(f"bad hex value {value_part!r}", line=lineno, column=1) from None
        if t:
            try:
                extra[row] = int(extra_part, 16)
            except ValueError:
                raise ParseError(
                    f"bad hex extra bits {extra_part!r}",
                    line=lineno,
                    column=len(value_part) + 2,
                ) from None
        row += 1
    try:
        return VectorialFunction(spec, m, values, extra, t)
    except Exception as exc:
        raise ParseError(f"inconsistent table: {exc}", line=2, column=1) from None


def read_vf(path, field=None):
    with open(path, "r") as handle:
        return vf_from_text(handle.read(), field=field)


def read_any(path, field=None):
    """Read a BF or VF file, dispatching on the header tag."""
    with open(path, "r") as handle:
        text = handle.read()
    tag = text.split(None, 1)[0] if text.split() else ""
    if tag == "BF":
        return bf_from_text(text, field=field)
    if tag == "VF":
        return vf_from_text(text, field=field)
    raise ParseError(f"unrecognized header tag {tag!r}", line=1, column=1)
