"""Partition-count polynomials and the signed count.

Every n >= 1 factors through its Zeckendorf 2-partition: split the index
set into maximal equal-parity blocks ("simple components"), convert gaps
to an associated vector, and the number of ways to write n as a sum of
distinct Fibonacci numbers with h parts is the t^h coefficient of a
product of tridiagonal-determinant polynomials, one per block.

Polynomials are plain dense coefficient lists: index = degree, trailing
zeros trimmed, the zero polynomial is [].  All arithmetic is exact.
"""

from .fibcore import zeckendorf

# ---------------------------------------------------------------------------
# polynomial helpers

def poly_trim(coeffs):
    """Drop trailing zero coefficients in place and return the list."""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_eval(coeffs, x):
    v = 0
    for c in reversed(coeffs):
        v = v * x + c
    return v


def phi_poly(alpha: int) -> list:
    """t + t^2 + ... + t^alpha."""
    if alpha < 1:
        raise ValueError("phi_poly needs alpha >= 1, got %r" % (alpha,))
    return [0] + [1] * alpha


# ---------------------------------------------------------------------------
# canonical decomposition of a 2-partition

def _check_two_partition(I):
    prev = None
    for i in I:
        if i < 1:
            raise ValueError("partition indices must be >= 1, got %r" % (i,))
        if prev is not None and i - prev < 2:
            raise ValueError("not a 2-partition: gap %d -> %d is < 2" % (prev, i))
        prev = i


def canonical_form(I) -> list:
    """Split a 2-partition into its simple components.

    A simple component is a maximal run of indices of one parity; runs are
    separated by odd (hence >= 3) gaps.  Raises on the empty partition,
    which has no canonical form; callers treat 0 specially.
    """
    if not I:
        raise ValueError("the empty partition has no canonical form")
    _check_two_partition(I)
    blocks = []
    cur = [I[0]]
    for i in I[1:]:
        if (i - cur[-1]) % 2 == 0:
            cur.append(i)
        else:
            blocks.append(tuple(cur))
            cur = [i]
    blocks.append(tuple(cur))
    return blocks


def assoc_vector(I) -> tuple:
    """Gap vector of a 2-partition: ((i_1-1)//2 + 1, then gap//2 + 1 each)."""
    if not I:
        raise ValueError("the empty partition has no associated vector")
    _check_two_partition(I)
    out = [(I[0] - 1) // 2 + 1]
    for prev, i in zip(I, I[1:]):
        out.append((i - prev) // 2 + 1)
    return tuple(out)


def assoc_multivector(I) -> tuple:
    """Associated vector sliced along the simple-component boundaries."""
    if not I:
        return ()
    alphas = assoc_vector(I)
    sizes = [len(b) for b in canonical_form(I)]
    out = []
    pos = 0
    for s in sizes:
        out.append(alphas[pos:pos + s])
        pos += s
    return tuple(out)


def multivector_of(n: int) -> tuple:
    """Associated multivector of the Zeckendorf partition of n."""
    return assoc_multivector(zeckendorf(n))


# ---------------------------------------------------------------------------
# determinant polynomials

def poly_D(A) -> list:
    """Determinant polynomial of an integer vector.

    D() = 1, D(a) = phi_a, and each further entry a appends
    phi_a * D(prefix) - t^(a+1) * D(prefix-but-one).
    """
    dm2, dm1 = None, [1]
    for r, a in enumerate(A):
        if a < 1:
            raise ValueError("vector entries must be >= 1, got %r" % (a,))
        cur = poly_mul(phi_poly(a), dm1)
        if r >= 1:
            shift = a + 1
            need = shift + len(dm2)
            if len(cur) < need:
                cur.extend([0] * (need - len(cur)))
            for j, y in enumerate(dm2):
                cur[shift + j] -= y
        dm2, dm1 = dm1, poly_trim(cur)
    return dm1


def continuant(A) -> int:
    """D(A) at t = 1: the continued-fraction denominator a1 - 1/(a2 - ...)."""
    dm2, dm1 = 0, 1
    for a in A:
        if a < 1:
            raise ValueError("vector entries must be >= 1, got %r" % (a,))
        dm2, dm1 = dm1, a * dm1 - dm2
    return dm1


def fib_poly(n: int) -> list:
    """Counting polynomial of n: coefficient of t^h counts the partitions
    of n into h distinct Fibonacci numbers.  fib_poly(0) == [1]."""
    out = [1]
    for A in multivector_of(n):
        out = poly_mul(out, poly_D(A))
    return out


def count_F(n: int) -> int:
    """Number of partitions of n into distinct Fibonacci numbers."""
    out = 1
    for A in multivector_of(n):
        out *= continuant(A)
    return out


def count_Fh(n: int, h: int) -> int:
    """Number of such partitions with exactly h parts."""
    if h < 1:
        raise ValueError("part count must be >= 1, got %r" % (h,))
    coeffs = fib_poly(n)
    return coeffs[h] if h < len(coeffs) else 0


# ---------------------------------------------------------------------------
# the signed count chi(n) = fib_poly(n) at t = -1, three ways

def chi(n: int) -> int:
    """Signed partition count, always 0 or +-1.

    Product formula over the simple components: a component with vector A
    contributes 0 when D(A) is even, else +1/-1 by the parity of the
    shifted continuant D(A[1:]).  Only parities are carried.
    """
    sign = 1
    for A in multivector_of(n):
        # p tracks D(A[:r]) mod 2, q tracks D(A[1:r]) mod 2
        p0, p1 = 1, A[0] & 1
        q0, q1 = 0, 1
        for a in A[1:]:
            a &= 1
            p0, p1 = p1, (a & p1) ^ p0
            q0, q1 = q1, (a & q1) ^ q0
        if p1 == 0:
            return 0
        if q1:
            sign = -sign
    return sign


def chi_via_poly(n: int) -> int:
    """chi by evaluating the full counting polynomial at t = -1."""
    return poly_eval(fib_poly(n), -1)


def _d_at_minus1(A) -> int:
    """D(A) at t = -1 by tail reduction.

    While the vector is longer than 2: an even last entry drops the last
    two; an odd last entry after an odd one drops the last three; an odd
    last entry after an even one folds into bumping that entry by 1.
    """
    A = list(A)
    while len(A) > 2:
        if A[-1] % 2 == 0:
            del A[-2:]
        elif A[-2] % 2 == 1:
            del A[-3:]
        else:
            A[-2] += 1
            del A[-1]
    if not A:
        return 1
    if len(A) == 1:
        return -(A[0] % 2)
    a1, a2 = A
    return (a1 % 2) * (a2 % 2) + (1 if a2 % 2 == 0 else -1)


def chi_via_reduction(n: int) -> int:
    """chi by the tail-reduction rules applied per simple component."""
    sign = 1
    for A in multivector_of(n):
        v = _d_at_minus1(A)
        if v == 0:
            return 0
        sign *= v
    return sign
