"""Group elements: permutations of {1..n} and invertible matrices over GF(p).

Permutations compose left to right: ``(a * b)(i) == b(a(i))``, so
``(1 2) * (1 3) == (1 2 3)``.  Matrices multiply row-by-column modulo p.

Every element has a canonical ``key`` (a tuple of ints).  Two elements are
equal iff their shapes and keys agree, and elements of one shape sort by key.
"""
from __future__ import annotations

import re
from functools import total_ordering

from .errors import DefinitionError, IncompatibleElementsError
from .numtheory import is_prime

__all__ = [
    "GroupElement",
    "Permutation",
    "MatrixElement",
    "multiply",
    "inverse",
    "element_order",
    "parse_cycles",
]


@total_ordering
class GroupElement:
    """Common behaviour of the two element kinds.

    Subclasses provide ``shape``, ``key``, ``_mul``, ``inverse`` and
    ``identity_like``.
    """

    __slots__ = ()
    kind = ""

    @property
    def shape(self) -> tuple:
        raise NotImplementedError

    @property
    def key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.shape == other.shape and self.key == other.key

    def __hash__(self):
        return hash((self.shape, self.key))

    def __lt__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (self.shape, self.key) < (other.shape, other.key)

    def check_compatible(self, other):
        if not isinstance(other, GroupElement) or self.shape != other.shape:
            raise IncompatibleElementsError(
                f"cannot combine {self.shape!r} with {getattr(other, 'shape', type(other))!r}"
            )

    def __mul__(self, other):
        self.check_compatible(other)
        return self._mul(other)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.identity_like()
        base = self
        while k:
            if k & 1:
                result = result._mul(base)
            base = base._mul(base)
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return self == self.identity_like()

    def order(self) -> int:
        """Smallest k >= 1 with g**k == 1, found by repeated multiplication."""
        one = self.identity_like()
        g, k = self, 1
        while g != one:
            g = g._mul(self)
            k += 1
        return k

    def conjugate(self, h: GroupElement) -> GroupElement:
        """Return h * self * h^-1."""
        return h * self * h.inverse()


class Permutation(GroupElement):
    __slots__ = ("images",)
    kind = "permutation"

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DefinitionError(f"images {images} are not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> Permutation:
        """Build from a cycle string such as ``"(1 2 3)(4 5)"`` or a list of tuples."""
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles, degree)
        images = list(range(1, degree + 1))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise DefinitionError(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise DefinitionError(f"point {pt} appears in more than one cycle")
                seen.add(pt)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def shape(self):
        return ("permutation", len(self.images))

    @property
    def key(self):
        return self.images

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def _mul(self, other):
        b = other.images
        return Permutation._raw(tuple(b[i - 1] for i in self.images))

    @classmethod
    def _raw(cls, images):
        obj = object.__new__(cls)
        obj.images = images
        return obj

    def inverse(self):
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images, 1):
            inv[img - 1] = i
        return Permutation._raw(tuple(inv))

    def identity_like(self):
        return Permutation._raw(tuple(range(1, len(self.images) + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        out, seen = [], set()
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc, pt = [], start
            while pt not in seen:
                seen.add(pt)
                cyc.append(pt)
                pt = self(pt)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"

    def __repr__(self):
        return f"Permutation({self}, degree={self.degree})"


class MatrixElement(GroupElement):
    """A d x d matrix over GF(p) with nonzero determinant."""

    __slots__ = ("dimension", "modulus", "entries")
    kind = "matrix"

    def __init__(self, rows, modulus: int):
        rows = [list(r) for r in rows]
        d = len(rows)
        if d == 0 or any(len(r) != d for r in rows):
            raise DefinitionError("matrix must be square and non-empty")
        if not is_prime(modulus):
            raise DefinitionError(f"modulus {modulus} is not prime")
        entries = tuple(int(x) for r in rows for x in r)
        if any(not 0 <= x < modulus for x in entries):
            raise DefinitionError(f"matrix entries must lie in [0, {modulus})")
        self.dimension, self.modulus, self.entries = d, modulus, entries
        if self.determinant() == 0:
            raise DefinitionError("matrix is singular mod %d" % modulus)

    @classmethod
    def _raw(cls, d, p, entries):
        obj = object.__new__(cls)
        obj.dimension, obj.modulus, obj.entries = d, p, entries
        return obj

    @classmethod
    def identity(cls, dimension: int, modulus: int) -> MatrixElement:
        return cls([[int(i == j) for j in range(dimension)] for i in range(dimension)], modulus)

    @property
    def shape(self):
        return ("matrix", self.dimension, self.modulus)

    @property
    def key(self):
        return (self.dimension, self.modulus) + self.entries

    def rows(self) -> list[list[int]]:
        d = self.dimension
        return [list(self.entries[i * d:(i + 1) * d]) for i in range(d)]

    def _mul(self, other):
        d, p = self.dimension, self.modulus
        a, b = self.entries, other.entries
        out = tuple(
            sum(a[i * d + k] * b[k * d + j] for k in range(d)) % p
            for i in range(d)
            for j in range(d)
        )
        return MatrixElement._raw(d, p, out)

    def determinant(self) -> int:
        d, p = self.dimension, self.modulus
        m = self.rows()
        det = 1
        for c in range(d):
            pivot = next((r for r in range(c, d) if m[r][c] % p), None)
            if pivot is None:
                return 0
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det = det * m[c][c] % p
            inv = pow(m[c][c], -1, p)
            for r in range(c + 1, d):
                f = m[r][c] * inv % p
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
        return det % p

    def inverse(self):
        # Gauss-Jordan on [M | I] mod p
        d, p = self.dimension, self.modulus
        aug = [row + [int(i == j) for j in range(d)] for i, row in enumerate(self.rows())]
        for c in range(d):
            pivot = next(r for r in range(c, d) if aug[r][c] % p)
            aug[c], aug[pivot] = aug[pivot], aug[c]
            inv = pow(aug[c][c], -1, p)
            aug[c] = [x * inv % p for x in aug[c]]
            for r in range(d):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[c])]
        return MatrixElement._raw(d, p, tuple(x for row in aug for x in row[d:]))

    def identity_like(self):
        d = self.dimension
        return MatrixElement._raw(d, self.modulus, tuple(int(i == j) for i in range(d) for j in range(d)))

    def __str__(self):
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows()) + "]"

    def __repr__(self):
        return f"MatrixElement({self}, modulus={self.modulus})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> list[tuple[int, ...]]:
    """Parse disjoint-cycle notation.

    Grammar: zero or more cycles, each ``(`` points ``)`` with points separated
    by whitespace (commas are also accepted).  ``"()"`` is the identity.
    Points must lie in 1..degree and no point may repeat.
    """
    stripped = text.strip()
    if not stripped:
        raise DefinitionError("empty cycle string; write '()' for the identity")
    pos, cycles = 0, []
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise DefinitionError(f"unexpected text {stripped[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            pts = tuple(int(x) for x in body)
        except ValueError:
            raise DefinitionError(f"non-integer point in cycle {m.group(0)!r}") from None
        if len(pts) > 1:
            cycles.append(pts)
        elif len(pts) == 1 and not 1 <= pts[0] <= degree:
            raise DefinitionError(f"point {pts[0]} outside 1..{degree}")
    if stripped[pos:].strip():
        raise DefinitionError(f"unexpected text {stripped[pos:]!r} in {text!r}")
    seen = set()
    for cyc in cycles:
        for pt in cyc:
            if not 1 <= pt <= degree:
                raise DefinitionError(f"point {pt} outside 1..{degree}")
            if pt in seen:
                raise DefinitionError(f"point {pt} repeated in {text!r}")
            seen.add(pt)
    return cycles


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b


def inverse(a: GroupElement) -> GroupElement:
    return a.inverse()


def element_order(g: GroupElement) -> int:
    return g.order()
