"""Pure-Python word-tree kernels; same contract and float operation order
as the compiled ``_ckernels`` module."""
import numpy as np


def tree_size(ngens, depth):
    """Number of nonempty reduced words of length <= depth on ngens generators."""
    if ngens <= 0 or depth <= 0:
        return 0
    total, level = 0, 2 * ngens
    for _ in range(depth):
        total += level
        level *= 2 * ngens - 1
    return total


def _letters(gens):
    out = []
    for a, b, c, d in gens:
        out.append((a, b, c, d))
        out.append((d, -b, -c, a))
    return out


def _signed(k):
    return (k // 2 + 1) if k % 2 == 0 else -(k // 2 + 1)


def word_products(gens, depth):
    """Enumerate reduced words of length 1..depth in DFS preorder.

    Letters are ordered 1, -1, 2, -2, ...  Returns ``(words, mats)`` where
    ``words[n]`` holds signed generator indices padded with zeros and
    ``mats[n]`` the raw product (a, b, c, d).
    """
    gens = np.ascontiguousarray(gens, dtype=np.float64).reshape(-1, 4)
    g = gens.shape[0]
    n = tree_size(g, depth)
    words = np.zeros((n, max(depth, 0)), dtype=np.int32)
    mats = np.empty((n, 4), dtype=np.float64)
    if n == 0:
        return words, mats
    letters = _letters(gens.tolist())
    nl = 2 * g
    prefix = [(1.0, 0.0, 0.0, 1.0)] * (depth + 1)
    choice = [-1] * depth
    word = [0] * depth
    level = 0
    row = 0
    while level >= 0:
        choice[level] += 1
        k = choice[level]
        if k >= nl:
            level -= 1
            continue
        if level > 0 and k == (word[level - 1] ^ 1):
            continue
        word[level] = k
        a, b, c, d = prefix[level]
        e, f, gg, h = letters[k]
        m = (a * e + b * gg, a * f + b * h, c * e + d * gg, c * f + d * h)
        for j in range(level + 1):
            words[row, j] = _signed(word[j])
        mats[row] = m
        row += 1
        if level + 1 < depth:
            prefix[level + 1] = m
            choice[level + 1] = -1
            level += 1
    return words, mats


def limit_tree(gens, discs, depth):
    """Nested circles of the reduced words of length 1..depth (DFS preorder).

    ``discs[k]`` are the feet of the disc attached to letter k (order
    1, -1, 2, -2, ...).  The circle of s_1...s_m is the image of the disc of
    s_m under the product s_1...s_{m-1}.  Returns ``(words, lo, hi)`` with
    the left and right feet of each circle.
    """
    gens = np.ascontiguousarray(gens, dtype=np.float64).reshape(-1, 4)
    discs = np.ascontiguousarray(discs, dtype=np.float64).reshape(-1, 2)
    g = gens.shape[0]
    if discs.shape[0] != 2 * g:
        raise ValueError("need one disc per letter")
    n = tree_size(g, depth)
    words = np.zeros((n, max(depth, 0)), dtype=np.int32)
    lo = np.empty(n, dtype=np.float64)
    hi = np.empty(n, dtype=np.float64)
    if n == 0:
        return words, lo, hi
    letters = _letters(gens.tolist())
    feet = discs.tolist()
    nl = 2 * g
    prefix = [(1.0, 0.0, 0.0, 1.0)] * (depth + 1)
    choice = [-1] * depth
    word = [0] * depth
    level = 0
    row = 0
    while level >= 0:
        choice[level] += 1
        k = choice[level]
        if k >= nl:
            level -= 1
            continue
        if level > 0 and k == (word[level - 1] ^ 1):
            continue
        word[level] = k
        a, b, c, d = prefix[level]
        u, v = feet[k]
        u2 = (a * u + b) / (c * u + d)
        v2 = (a * v + b) / (c * v + d)
        for j in range(level + 1):
            words[row, j] = _signed(word[j])
        if u2 <= v2:
            lo[row], hi[row] = u2, v2
        else:
            lo[row], hi[row] = v2, u2
        row += 1
        if level + 1 < depth:
            e, f, gg, h = letters[k]
            prefix[level + 1] = (a * e + b * gg, a * f + b * h, c * e + d * gg, c * f + d * h)
            choice[level + 1] = -1
            level += 1
    return words, lo, hi
