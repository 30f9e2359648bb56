"""Row reduction over F_p on small integer matrices."""
import numpy as np


def rref(M, p):
    """Return (R, pivots) with R the reduced row-echelon form of M mod p."""
    R = np.array(M, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        s = r + nz[0]
        R[[r, s]] = R[[s, r]]
        R[r] = R[r] * pow(int(R[r, c]), -1, p) % p
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        R[others] = (R[others] - np.outer(R[others, c], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M, p):
    return len(rref(M, p)[1])


def independent_rows(M, p):
    """Indices of the first maximal independent subset of rows, scanning top-down."""
    M = np.asarray(M, dtype=np.int64) % p
    chosen = []
    for i in range(M.shape[0]):
        if rank(M[chosen + [i]], p) == len(chosen) + 1:
            chosen.append(i)
    return chosen
