"""Slow, independent re-derivations used only as test oracles."""
from collections import Counter
from itertools import permutations
from math import factorial


def diagram(lam):
    return {(i, j) for i, x in enumerate(lam) for j in range(x)}


def conjugate_by_diagram(lam):
    cells = diagram(lam)
    cols = Counter(j for _, j in cells)
    return tuple(cols[j] for j in range(len(cols)))


def hook_lengths_by_counting(lam):
    cells = diagram(lam)
    out = []
    for i, j in sorted(cells):
        arm = sum(1 for (a, b) in cells if a == i and b > j)
        leg = sum(1 for (a, b) in cells if b == j and a > i)
        out.append(arm + leg + 1)
    return out


def partition_count(n):
    """Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def frobenius_character(lam, t):
    """chi^lam(t) as the coefficient of x^(lam+delta) in a_delta * prod p_{t_r}.

    Polynomials are dicts from exponent tuples to integer coefficients, in
    len(lam) variables.
    """
    k = len(lam)
    if k == 0:
        return 1
    poly = {}
    for perm in permutations(range(k)):
        inversions = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        poly[tuple(k - 1 - perm[i] for i in range(k))] = (-1) ** inversions
    for r in t:
        nxt = Counter()
        for exps, c in poly.items():
            for i in range(k):
                e = list(exps)
                e[i] += r
                nxt[tuple(e)] += c
        poly = {e: c for e, c in nxt.items() if c}
    target = tuple(x + k - 1 - i for i, x in enumerate(lam))
    return poly.get(target, 0)


def cycle_type_of(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        length, x = 0, s
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def class_sizes_by_enumeration(n):
    return Counter(cycle_type_of(p) for p in permutations(range(n)))


def nu(x, p):
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def factorial_nu(n, p):
    return nu(factorial(n), p) if n else 0
