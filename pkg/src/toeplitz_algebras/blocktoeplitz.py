"""Block Toeplitz matrices, cyclic diagonals and their products.

A block Toeplitz matrix of block order ``n`` is stored by its ``2n - 1``
diagonal blocks ``A[j]``, ``j = -(n-1), ..., n-1``, where the ``(i, j)``
block of the full matrix is ``A[i - j]``.  A cyclic diagonal of order
``k >= 1`` lives on offsets ``k`` and ``k - n``; order 0 is the main
diagonal.
"""


from .errors import InvalidPermutation, OrderOutOfRange, ShapeMismatch
from .matrixcore import MatrixD, PMElement


def _entry_signature(e):
    if isinstance(e, PMElement):
        return ("pm", e.modulus)
    if isinstance(e, MatrixD):
        return ("matrix", e.dim)
    raise ShapeMismatch(f"unsupported block entry type {type(e).__name__}")


class BlockToeplitz:
    """n x n block Toeplitz matrix stored as its 2n-1 diagonal blocks."""

    __slots__ = ("n", "blocks")

    def __init__(self, n, blocks, zero=None):
        if n < 1:
            raise ShapeMismatch("block order n must be >= 1")
        blocks = {int(k): v for k, v in blocks.items()}
        bad = [k for k in blocks if not -(n - 1) <= k <= n - 1]
        if bad:
            raise ShapeMismatch(f"offsets {bad} out of range for n={n}")
        if zero is None:
            if not blocks:
                raise ShapeMismatch("need at least one block or an explicit zero entry")
            zero = next(iter(blocks.values())).zero_like()
        sig = _entry_signature(zero)
        for v in blocks.values():
            if _entry_signature(v) != sig:
                raise ShapeMismatch("all blocks must share entry type and dimension")
        self.n = n
        self.blocks = {j: blocks.get(j, zero) for j in range(-(n - 1), n)}

    @classmethod
    def _make(cls, n, blocks):
        obj = object.__new__(cls)
        obj.n = n
        obj.blocks = blocks
        return obj

    @classmethod
    def diagonal(cls, n, entry):
        return cls(n, {0: entry})

    @classmethod
    def identity_like(cls, n, entry):
        return cls(n, {0: entry.one_like()})

    @property
    def zero_entry(self):
        return self.blocks[0].zero_like()

    @property
    def d(self):
        return self.blocks[0].dim

    @property
    def entry_signature(self):
        return _entry_signature(self.blocks[0])

    def __getitem__(self, j):
        return self.blocks[j]

    def offsets(self):
        return range(-(self.n - 1), self.n)

    def _check(self, other):
        if not isinstance(other, BlockToeplitz):
            raise ShapeMismatch(f"expected BlockToeplitz, got {type(other).__name__}")
        if other.n != self.n or other.entry_signature != self.entry_signature:
            raise ShapeMismatch("block Toeplitz shapes differ")

    def __add__(self, other):
        self._check(other)
        return BlockToeplitz._make(self.n, {j: self.blocks[j] + other.blocks[j] for j in self.blocks})

    def __sub__(self, other):
        self._check(other)
        return BlockToeplitz._make(self.n, {j: self.blocks[j] - other.blocks[j] for j in self.blocks})

    def scale(self, c):
        return BlockToeplitz._make(self.n, {j: b.scale(c) for j, b in self.blocks.items()})

    def __eq__(self, other):
        if not isinstance(other, BlockToeplitz):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, tuple(self.blocks[j] for j in self.offsets())))

    def is_zero(self):
        return all(b.is_zero() for b in self.blocks.values())

    def is_diagonal(self):
        return all(b.is_zero() for j, b in self.blocks.items() if j != 0)

    def __repr__(self):
        inner = ", ".join(f"{j}: {self.blocks[j]!r}" for j in self.offsets() if not self.blocks[j].is_zero())
        return f"BlockToeplitz(n={self.n}, {{{inner}}})"


class CyclicDiagonal:
    """Order-k cyclic diagonal: ``top`` at offset k, ``bottom`` at offset k - n."""

    __slots__ = ("n", "k", "top", "bottom")

    def __init__(self, n, k, top, bottom=None):
        if not 0 <= k <= n - 1:
            raise OrderOutOfRange(f"order {k} outside 0..{n - 1}")
        if k == 0:
            if bottom is not None and not bottom.is_zero():
                raise ShapeMismatch("order-0 cyclic diagonal carries a single entry")
            bottom = None
        elif bottom is None:
            bottom = top.zero_like()
        self.n, self.k, self.top, self.bottom = n, k, top, bottom

    @property
    def d(self):
        return self.top.dim

    def to_toeplitz(self):
        blocks = {self.k: self.top}
        if self.k:
            blocks[self.k - self.n] = self.bottom
        return BlockToeplitz(self.n, blocks, zero=self.top.zero_like())

    def is_zero(self):
        return self.top.is_zero() and (self.bottom is None or self.bottom.is_zero())

    def __eq__(self, other):
        if not isinstance(other, CyclicDiagonal):
            return NotImplemented
        return (self.n, self.k, self.top, self.bottom) == (other.n, other.k, other.top, other.bottom)

    def __repr__(self):
        return f"CyclicDiagonal(n={self.n}, k={self.k}, top={self.top!r}, bottom={self.bottom!r})"


class BlockMatrix:
    """Full n x n array of blocks; used for products before Toeplitzness is known."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ShapeMismatch("block matrix must be square and nonempty")
        self.n = n
        self.rows = rows

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @property
    def d(self):
        return self.rows[0][0].dim

    def __eq__(self, other):
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return f"BlockMatrix(n={self.n})"


def to_full(A):
    n = A.n
    return BlockMatrix([[A.blocks[i - j] for j in range(n)] for i in range(n)])


def is_block_toeplitz(C):
    """True iff every block diagonal of ``C`` is constant."""
    n = C.n
    for i in range(1, n):
        for j in range(1, n):
            if C.rows[i][j] != C.rows[i - 1][j - 1]:
                return False
    return True


def toeplitz_reading(C):
    """BlockToeplitz with the blocks of the first column and first row of ``C``."""
    n = C.n
    blocks = {i: C.rows[i][0] for i in range(n)}
    blocks.update({-j: C.rows[0][j] for j in range(1, n)})
    return BlockToeplitz(n, blocks)


def compatible(A, B):
    """Whether ``A @ B`` is block Toeplitz, via ``A_i B_{j-n} == A_{i-n} B_j`` for i, j >= 1."""
    A._check(B)
    n = A.n
    for i in range(1, n):
        ai, ain = A.blocks[i], A.blocks[i - n]
        if ai.is_zero() and ain.is_zero():
            continue
        for j in range(1, n):
            if ai * B.blocks[j - n] != ain * B.blocks[j]:
                return False
    return True


def full_product(A, B):
    """Blockwise product of two full block matrices (or Toeplitz operands)."""
    if isinstance(A, BlockToeplitz):
        A = to_full(A)
    if isinstance(B, BlockToeplitz):
        B = to_full(B)
    if A.n != B.n:
        raise ShapeMismatch("block orders differ")
    n = A.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = None
            for t in range(n):
                a, b = A.rows[i][t], B.rows[t][j]
                if a.is_zero() or b.is_zero():
                    continue
                term = a * b
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else A.rows[0][0].zero_like())
        out.append(row)
    return BlockMatrix(out)


def product(A, B):
    """Return ``(full_product, toeplitz_flag, toeplitz_or_None)``."""
    A._check(B)
    C = full_product(A, B)
    if is_block_toeplitz(C):
        return C, True, toeplitz_reading(C)
    return C, False, None


def toeplitz_product(A, B):
    """Product of a compatible pair, computed from first row and column only."""
    A._check(B)
    n = A.n
    zero = A.zero_entry
    blocks = {}
    for r in range(-(n - 1), n):
        i, j = (r, 0) if r >= 0 else (0, -r)
        acc = zero
        for t in range(n):
            a, b = A.blocks[i - t], B.blocks[t - j]
            if not a.is_zero() and not b.is_zero():
                acc = acc + a * b
        blocks[r] = acc
    return BlockToeplitz._make(n, blocks)


def _as_cyclic(D):
    if isinstance(D, CyclicDiagonal):
        return D
    raise ShapeMismatch(f"expected CyclicDiagonal, got {type(D).__name__}")


def cyclic_product(D, E):
    """Product of two Toeplitz cyclic diagonals from the case formulas.

    Returns ``(order, C)`` with ``C`` the full product as a BlockMatrix; it
    is a cyclic diagonal of order ``(k + l) mod n`` but in general not
    block Toeplitz.
    """
    D, E = _as_cyclic(D), _as_cyclic(E)
    if D.n != E.n or _entry_signature(D.top) != _entry_signature(E.top):
        raise ShapeMismatch("cyclic diagonal shapes differ")
    n, k, l = D.n, D.k, E.k
    zero = D.top.zero_like()
    Ak, Akn = D.top, D.bottom if k else zero
    Bl, Bln = E.top, E.bottom if l else zero
    rows = [[zero] * n for _ in range(n)]

    def put(i, j, value):
        rows[i][j] = rows[i][j] + value

    for j in range(n):
        if k + l <= n - 1:
            if j + k + l <= n - 1:
                put(j + k + l, j, Ak * Bl)
            elif j + l <= n - 1:
                put(j + k + l - n, j, Akn * Bl)
            else:
                put(j + k + l - n, j, Ak * Bln)
        else:
            if j + l <= n - 1:
                put(j + k + l - n, j, Akn * Bl)
            elif j + k + l <= 2 * n - 1:
                put(j + k + l - n, j, Ak * Bln)
            else:
                put(j + k + l - 2 * n, j, Akn * Bln)
    order = k + l if k + l <= n - 1 else k + l - n
    return order, BlockMatrix(rows)


def project_Ek(A, k):
    """Keep only the cyclic diagonal of order ``k`` (offsets ``k`` and ``k - n``)."""
    n = A.n
    if not 0 <= k <= n - 1:
        raise OrderOutOfRange(f"order {k} outside 0..{n - 1}")
    if isinstance(A, BlockToeplitz):
        return CyclicDiagonal(n, k, A.blocks[k], A.blocks[k - n] if k else None)
    zero = A.rows[0][0].zero_like()
    rows = [
        [A.rows[i][j] if i - j in (k, k - n) else zero for j in range(n)]
        for i in range(n)
    ]
    return BlockMatrix(rows)


def _normalize_sigma(sigma, n):
    if isinstance(sigma, dict):
        mapping = {int(a): int(b) for a, b in sigma.items()}
    else:
        mapping = {i + 1: int(s) for i, s in enumerate(sigma)}
    domain = set(range(1, n))
    if set(mapping) != domain or set(mapping.values()) != domain:
        raise InvalidPermutation(f"sigma must be a bijection of {{1..{n - 1}}}")
    return mapping


def permute(A, sigma):
    """Move the order-k cyclic data of ``A`` to order ``sigma(k)``.

    ``sigma`` is a mapping ``k -> sigma(k)`` or a sequence whose entry
    ``k - 1`` is ``sigma(k)``.  The main diagonal is left unchanged.
    """
    n = A.n
    s = _normalize_sigma(sigma, n)
    blocks = {0: A.blocks[0]}
    for k, sk in s.items():
        blocks[sk] = A.blocks[k]
        blocks[sk - n] = A.blocks[k - n]
    return BlockToeplitz._make(n, blocks)


def powers_toeplitz(A):
    """Whether every power of ``A`` is block Toeplitz.

    Checks ``A_i A_0^m A_{j-n} == A_{i-n} A_0^m A_j`` for ``i, j >= 1`` and
    ``m < d``; higher powers of ``A_0`` are combinations of lower ones.
    """
    n = A.n
    d = A.d
    power = A.blocks[0].one_like()
    for _ in range(d):
        for i in range(1, n):
            left, right = A.blocks[i] * power, A.blocks[i - n] * power
            for j in range(1, n):
                if left * A.blocks[j - n] != right * A.blocks[j]:
                    return False
        power = power * A.blocks[0]
    return True


def matrix_power(A, k):
    """Full block-matrix power ``A^k`` (k >= 1)."""
    C = to_full(A)
    P = C
    for _ in range(k - 1):
        P = full_product(P, C)
    return P
