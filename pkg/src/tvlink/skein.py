#
# skein.py
#
# Admissibility predicates and the closed-form coefficient kernel used by
# the state sums: bracket values of Chebyshev elements, trihedral (theta)
# coefficients and tetrahedral coefficients (quantum 6j-symbols), each in
# two normalizations ("section2" with the big factorial upstairs and the
# edge factorials downstairs, "appendix" with the bare alternating z-sum).

from functools import lru_cache

from .qarith import quantum_factorial, quantum_int


def colors(ctx):
    """The color palette I_r = {0, ..., r-2}."""
    return range(ctx.r - 1)


def colors_even(ctx):
    """The even palette I'_r = {0, 2, ..., r-3} (odd r)."""
    return range(0, ctx.r - 2, 2)


def _check_range(ctx, cs):
    for c in cs:
        if not 0 <= c <= ctx.r - 2:
            raise ValueError("color %d out of range [0, %d]" % (c, ctx.r - 2))


def is_admissible_triple(ctx, triple, so3=False):
    """True iff (i,j,k) satisfies the triangle inequalities, has even sum,
    and i+j+k <= 2(r-2).  With so3 set, additionally all entries even."""
    i, j, k = triple
    _check_range(ctx, triple)
    if so3 and (i % 2 or j % 2 or k % 2):
        return False
    return (i + j >= k and j + k >= i and k + i >= j
            and (i + j + k) % 2 == 0
            and i + j + k <= 2 * (ctx.r - 2))


def is_admissible_six(ctx, six, so3=False):
    """True iff all four face triples of the 6-tuple (i,j,k,l,m,n) are admissible."""
    i, j, k, l, m, n = six
    return all(is_admissible_triple(ctx, t, so3)
               for t in ((i, j, k), (j, l, n), (i, m, n), (k, l, m)))


def bracket_cheby(ctx, i):
    """Bracket of the i-th Chebyshev element: <e_i> = (-1)^i [i+1]."""
    return (-1) ** i * quantum_int(ctx, i + 1)


# The circle value |i| attached to a colored edge is the same quantity.
edge_weight = bracket_cheby


def _sign_half_sum(i, j, k):
    # (-1)^(-(i+j+k)/2); the sum is even for admissible triples so the
    # exponent is an integer and only its parity matters.
    return -1 if ((i + j + k) // 2) % 2 else 1


@lru_cache(maxsize=None)
def theta(ctx, triple):
    """Trihedral coefficient in the section-2 normalization:

    (-1)^(-(i+j+k)/2) * [(i+j-k)/2]! [(j+k-i)/2]! [(k+i-j)/2]! [(i+j+k)/2+1]!
                        / ([i]! [j]! [k]!)
    """
    i, j, k = triple
    if not is_admissible_triple(ctx, triple):
        raise ValueError("inadmissible triple %s at level %d" % (triple, ctx.r))
    num = (quantum_factorial(ctx, (i + j - k) // 2)
           * quantum_factorial(ctx, (j + k - i) // 2)
           * quantum_factorial(ctx, (k + i - j) // 2)
           * quantum_factorial(ctx, (i + j + k) // 2 + 1))
    den = (quantum_factorial(ctx, i) * quantum_factorial(ctx, j)
           * quantum_factorial(ctx, k))
    return _sign_half_sum(i, j, k) * num / den


@lru_cache(maxsize=None)
def theta_appendix(ctx, triple):
    """Trihedral coefficient |i,j,k| in the appendix normalization:

    (-1)^(-(i+j+k)/2) * [(i+j-k)/2]! [(j+k-i)/2]! [(k+i-j)/2]! / [(i+j+k)/2+1]!
    """
    i, j, k = triple
    if not is_admissible_triple(ctx, triple):
        raise ValueError("inadmissible triple %s at level %d" % (triple, ctx.r))
    num = (quantum_factorial(ctx, (i + j - k) // 2)
           * quantum_factorial(ctx, (j + k - i) // 2)
           * quantum_factorial(ctx, (k + i - j) // 2))
    return _sign_half_sum(i, j, k) * num / quantum_factorial(ctx, (i + j + k) // 2 + 1)


def _tq(six):
    i, j, k, l, m, n = six
    ts = ((i + j + k) // 2, (i + m + n) // 2, (j + l + n) // 2, (k + l + m) // 2)
    qs = ((i + j + l + m) // 2, (i + k + l + n) // 2, (j + k + m + n) // 2)
    return ts, qs


def _zsum(ctx, six):
    # Alternating z-sum shared by both 6j normalizations.  Terms with
    # z+1 >= r vanish through [z+1]! = 0 exactly (the denominator
    # factorial arguments are bounded by r-2 for admissible input, so
    # 0/0 never arises).
    ts, qs = _tq(six)
    total = 0.0
    for z in range(max(ts), min(qs) + 1):
        num = (-1) ** z * quantum_factorial(ctx, z + 1)
        if num == 0.0:
            continue
        den = 1.0
        for t in ts:
            den *= quantum_factorial(ctx, z - t)
        for q in qs:
            den *= quantum_factorial(ctx, q - z)
        total += num / den
    return total


@lru_cache(maxsize=None)
def sixj(ctx, six, normalization="appendix"):
    """Tetrahedral coefficient of an admissible 6-tuple (i,j,k,l,m,n).

    normalization "appendix": the bare alternating z-sum.
    normalization "section2": the same sum with the prefactor
    prod_{a,b} [Q_b - T_a]! / ([i]![j]![k]![l]![m]![n]!).
    """
    if not is_admissible_six(ctx, six):
        raise ValueError("inadmissible 6-tuple %s at level %d" % (six, ctx.r))
    total = _zsum(ctx, six)
    if normalization == "appendix":
        return total
    if normalization != "section2":
        raise ValueError("unknown normalization %r" % normalization)
    ts, qs = _tq(six)
    pre = 1.0
    for q in qs:
        for t in ts:
            pre *= quantum_factorial(ctx, q - t)
    for c in six:
        pre /= quantum_factorial(ctx, c)
    return pre * total
