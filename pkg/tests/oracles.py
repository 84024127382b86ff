"""Independent reference implementations used only by the tests.

Nothing here imports the package's incremental code paths.
"""

from fractions import Fraction


def var_exact(values):
    """Population variance in exact rational arithmetic, returned as float."""
    vals = [Fraction(v) for v in values]
    mean = sum(vals) / len(vals)
    return float(sum((v - mean) ** 2 for v in vals) / len(vals))


def edit_distance_table(x, y):
    """Full (len(x)+1) x (len(y)+1) Levenshtein table."""
    t = [[0] * (len(y) + 1) for _ in range(len(x) + 1)]
    for i in range(len(x) + 1):
        t[i][0] = i
    for j in range(len(y) + 1):
        t[0][j] = j
    for i in range(1, len(x) + 1):
        for j in range(1, len(y) + 1):
            t[i][j] = min(
                t[i - 1][j] + 1,
                t[i][j - 1] + 1,
                t[i - 1][j - 1] + (0 if x[i - 1] == y[j - 1] else 1),
            )
    return t[len(x)][len(y)]


def dis_exact(strings):
    return sum(
        edit_distance_table(strings[i], strings[j])
        for i in range(len(strings))
        for j in range(i + 1, len(strings))
    )


def all_swap_gains(slots, candidate, div):
    base = div(slots)
    return [div(slots[:j] + [candidate] + slots[j + 1:]) - base for j in range(len(slots))]


def brute_pdg(slots, candidate, div):
    """(gain, slot) by enumerating every swap and recomputing diversity from scratch."""
    gains = all_swap_gains(list(slots), candidate, div)
    best = max(gains)
    return best, gains.index(best)


def first_m_distinct(stream, m):
    out, reads = [], 0
    for x in stream:
        reads += 1
        if x not in out:
            out.append(x)
        if len(out) == m:
            return out, reads
    raise ValueError("not enough distinct elements")


def two_pass_selection(slots, window, k, div):
    """Reference stopping rule: score everything first, then pick."""
    scores = [brute_pdg(slots, x, div)[0] for x in window]
    threshold = max(scores[:k])
    for p in range(k, len(window)):
        if scores[p] > threshold:
            return p + 1, False
    return len(window), True


def harmonic(n, k):
    return Fraction(k, n) * sum(Fraction(1, i) for i in range(k, n))
