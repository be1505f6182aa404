"""Reading and writing masks as netpbm bitmap files (PBM).

Both the plain-text (P1) and raw (P4) variants are supported.  Bit 1 is a
patch pixel, which PBM renders as black.  P4 rasters pack each row into
ceil(W / 8) bytes, most significant bit first, exactly as ``np.packbits``
does.  Writes go through a temp-file-then-rename so readers never observe
a half-written file.
"""

import os
import tempfile

import numpy as np

from .masks import as_mask

__all__ = [
    "PBMFormatError",
    "encode_pbm",
    "decode_pbm",
    "read_pbm",
    "write_pbm",
    "atomic_write_bytes",
    "atomic_write_text",
]

_WHITESPACE = b" \t\n\r\x0b\x0c"


class PBMFormatError(ValueError):
    """Raised when bytes do not form a well-formed PBM file."""


def encode_pbm(mask, fmt="P4") -> bytes:
    """Serialize a mask as PBM bytes in the requested format (P1 or P4)."""
    m = as_mask(mask)
    H, W = m.shape
    fmt = fmt.upper()
    header = f"{fmt}\n{W} {H}\n".encode("ascii")
    if fmt == "P4":
        return header + np.packbits(m, axis=1).tobytes()
    if fmt == "P1":
        lines = []
        for row in m:
            digits = "".join("1" if v else "0" for v in row)
            # keep plain-format lines within the traditional 70-char limit
            lines.extend(digits[k : k + 64] for k in range(0, len(digits), 64))
        return header + "\n".join(lines).encode("ascii") + b"\n"
    raise ValueError(f"format must be 'P1' or 'P4', got {fmt!r}")


class _Scanner:
    """Tokenizer for PBM headers: skips whitespace and # comments."""

    def __init__(self, data):
        self.data = data
        self.pos = 0

    def _skip_filler(self):
        data, n = self.data, len(self.data)
        while self.pos < n:
            ch = data[self.pos : self.pos + 1]
            if ch == b"#":
                while self.pos < n and data[self.pos : self.pos + 1] != b"\n":
                    self.pos += 1
            elif ch in _WHITESPACE:
                self.pos += 1
            else:
                return

    def token(self) -> bytes:
        self._skip_filler()
        start = self.pos
        n = len(self.data)
        while self.pos < n:
            ch = self.data[self.pos : self.pos + 1]
            if ch in _WHITESPACE or ch == b"#":
                break
            self.pos += 1
        if self.pos == start:
            raise PBMFormatError("unexpected end of header")
        return self.data[start : self.pos]

    def int_token(self) -> int:
        tok = self.token()
        if not tok.isdigit():
            raise PBMFormatError(f"expected an integer in header, got {tok!r}")
        return int(tok)


def decode_pbm(data: bytes) -> np.ndarray:
    """Parse PBM bytes (P1 or P4) into an H×W uint8 mask."""
    scanner = _Scanner(bytes(data))
    magic = scanner.token()
    if magic not in (b"P1", b"P4"):
        raise PBMFormatError(f"not a PBM file (magic {magic!r})")
    width = scanner.int_token()
    height = scanner.int_token()
    if width < 1 or height < 1:
        raise PBMFormatError(f"bad dimensions {width}x{height}")

    if magic == b"P1":
        bits = []
        raster = data[scanner.pos :]
        i, n = 0, len(raster)
        while i < n:
            ch = raster[i : i + 1]
            if ch == b"#":
                while i < n and raster[i : i + 1] != b"\n":
                    i += 1
            elif ch in b"01":
                bits.append(ch == b"1")
                i += 1
            elif ch in _WHITESPACE:
                i += 1
            else:
                raise PBMFormatError(f"unexpected byte {ch!r} in P1 raster")
        if len(bits) != width * height:
            raise PBMFormatError(
                f"P1 raster holds {len(bits)} bits, expected {width * height}"
            )
        return np.array(bits, dtype=np.uint8).reshape(height, width)

    # P4: a single whitespace byte separates the header from the raster.
    sep = data[scanner.pos : scanner.pos + 1]
    if sep not in (b" ", b"\t", b"\n", b"\r"):
        raise PBMFormatError("P4 header must end with one whitespace byte")
    raster = data[scanner.pos + 1 :]
    row_bytes = (width + 7) // 8
    expected = row_bytes * height
    if len(raster) != expected:
        raise PBMFormatError(
            f"P4 raster holds {len(raster)} bytes, expected {expected}"
        )
    packed = np.frombuffer(raster, dtype=np.uint8).reshape(height, row_bytes)
    return np.unpackbits(packed, axis=1)[:, :width]


def atomic_write_bytes(path, data: bytes):
    """Write bytes to ``path`` via a temp file + rename in the same dir."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def atomic_write_text(path, text: str):
    atomic_write_bytes(path, text.encode("utf-8"))


def read_pbm(path) -> np.ndarray:
    """Load a mask from a PBM file."""
    with open(path, "rb") as fh:
        return decode_pbm(fh.read())


def write_pbm(mask, path, fmt="P4"):
    """Write a mask to a PBM file atomically."""
    atomic_write_bytes(path, encode_pbm(mask, fmt=fmt))
