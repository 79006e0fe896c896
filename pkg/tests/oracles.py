"""Deliberately naive reference computations used to cross-check the library."""
from fractions import Fraction
import itertools


def dense_rank(rows, p=None):
    """Textbook Gaussian elimination on a dense list-of-lists copy."""
    m = [[(Fraction(x) if p is None else x % p) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = (1 / m[rank][c]) if p is None else pow(m[rank][c], p - 2, p)
        m[rank] = [(x * inv) if p is None else (x * inv) % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c]
                m[r] = [(a - f * b) if p is None else (a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def mat_mul(a, b, p):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(m)] for i in range(n)]


def product(c, x, y, p):
    """Product of coordinate vectors from nested structure constants ``c[i][j]``."""
    n = len(x)
    out = [0] * n
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] == 0:
                continue
            for k in range(n):
                out[k] = (out[k] + x[i] * y[j] * c[i][j][k]) % p
    return out


def all_vectors(p, n):
    return [list(v) for v in itertools.product(range(p), repeat=n)]


def brute_leibniz_kernel_dim(c, p):
    """Rank of the set of all squares, enumerated element by element."""
    n = len(c)
    squares = [product(c, x, x, p) for x in all_vectors(p, n)]
    return dense_rank(squares, p)


def brute_invariant_lines(ops, p, n):
    """Nonzero vectors (up to scalars) spanning lines invariant under all ``ops``."""
    found = []
    for v in all_vectors(p, n):
        if not any(v):
            continue
        first = next(x for x in v if x)
        if first != 1:
            continue
        ok = True
        for op in ops:
            w = [sum(op[i][j] * v[j] for j in range(n)) % p for i in range(n)]
            if dense_rank([v, w], p) > 1:
                ok = False
                break
        if ok:
            found.append(v)
    return found


def brute_subspaces(p, n):
    """All subspaces of GF(p)^n as frozensets of vectors."""
    vecs = [tuple(v) for v in all_vectors(p, n)]
    seen = set()
    for k in range(n + 1):
        for gens in itertools.combinations(vecs, k):
            span = {tuple([0] * n)}
            for g in gens:
                span = {tuple((a + t * b) % p for a, b in zip(s, g)) for s in span for t in range(p)}
            seen.add(frozenset(span))
    return seen


def brute_invariant_subspaces(ops, p, n):
    out = []
    for s in brute_subspaces(p, n):
        if all(tuple(sum(op[i][j] * v[j] for j in range(n)) % p for i in range(n)) in s
               for op in ops for v in s):
            out.append(s)
    return out


def naive_coboundary(c, lam, rho, n, p=None, flip_right=False, flip_insert=False, constant_signs=False):
    """Dense matrix of d^n built by evaluating the defining formula on every
    basis tensor.  The flip flags negate one group of terms, producing the
    deliberately broken variants used by the mutation tests;
    ``constant_signs`` drops the alternation of the left-action and insertion
    signs."""
    d = len(c)
    dm = len(lam[0]) if lam else 0

    def norm(x):
        return Fraction(x) if p is None else x % p

    def idx(t):
        k = 0
        for i in t:
            k = k * d + i
        return k

    rows = dm * d ** (n + 1)
    cols = dm * d ** n
    mat = [[norm(0)] * cols for _ in range(rows)]
    rs = (-1) ** (n + 1) * (-1 if flip_right else 1)
    for t in itertools.product(range(d), repeat=n + 1):
        r0 = idx(t) * dm
        for j in range(n):
            s = t[:j] + t[j + 1:]
            c0 = idx(s) * dm
            for a in range(dm):
                for b in range(dm):
                    mat[r0 + a][c0 + b] += (1 if constant_signs else (-1) ** j) * lam[t[j]][a][b]
        c0 = idx(t[:n]) * dm
        for a in range(dm):
            for b in range(dm):
                mat[r0 + a][c0 + b] += rs * rho[t[n]][a][b]
        for i in range(n + 1):
            sign = (-1 if constant_signs else (-1) ** (i + 1)) * (-1 if flip_insert else 1)
            rest = t[:i] + t[i + 1:]
            for j in range(i + 1, n + 1):
                for k, ck in enumerate(c[t[i]][t[j]]):
                    if not ck:
                        continue
                    s = rest[:j - 1] + (k,) + rest[j:]
                    c0 = idx(s) * dm
                    for b in range(dm):
                        mat[r0 + b][c0 + b] += sign * ck
    return [[norm(x) for x in row] for row in mat]


def naive_hl_dims(c, lam, rho, n_max, p=None, **signs):
    d = len(c)
    dm = len(lam[0]) if lam else 0
    ranks = [dense_rank(naive_coboundary(c, lam, rho, n, p, **signs), p) for n in range(n_max + 1)]
    out = []
    for n in range(n_max + 1):
        prev = ranks[n - 1] if n else 0
        out.append(dm * d ** n - ranks[n] - prev)
    return out
