"""Regenerate the golden files for the 48-dimensional glued structure.

Everything numeric here is recomputed from first principles: the
six-element permutation group, its sign-twisted doubling to a
twelve-element loop, and the closed-form product/antipode rules of the
glued 48-dimensional structure are all written out directly rather
than imported, so the goldens are an independent cross-check of the
library.  Only the text layout helpers are shared with ``hqg.cli`` —
byte-identical rendering requires one formatter, and the formatter
carries no algebra.

Outputs (under --outdir, default tests/golden):
  dcp48_table.txt        labeled symbolic product table + antipode list
  dcp48_numeric.json.gz  {"product": 48x2304, "antipode": 48x48} int matrices
"""

from __future__ import annotations

import argparse
import gzip
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hqg.cli import render_hopf_tables  # layout only; no algebra imported

# the permutation group on {0,1,2}: fixed enumeration, labels s0..s5,
# composition (p*q)(k) = p(q(k))
PERMS = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
G_LABELS = [f"s{i}" for i in range(6)]


def g_mul(i: int, j: int) -> int:
    p, q = PERMS[i], PERMS[j]
    return PERMS.index(tuple(p[q[k]] for k in range(3)))


def g_inv(i: int) -> int:
    p = PERMS[i]
    return PERMS.index(tuple(p.index(k) for k in range(3)))


# doubled loop on 12 = 6 * 2 elements; index g + 6*flag.  Writing gu for
# the flagged copy of g, the product splits into four cases:
#   g * h = gh,   g * hu = (hg)u,   gu * h = (g h^-1)u,   gu * hu = h^-1 g
def l_elt(g: int, flag: int) -> int:
    return g + 6 * flag


def l_mul(i: int, j: int) -> int:
    g, b1 = i % 6, i // 6
    h, b2 = j % 6, j // 6
    if b1 == 0 and b2 == 0:
        return l_elt(g_mul(g, h), 0)
    if b1 == 0 and b2 == 1:
        return l_elt(g_mul(h, g), 1)
    if b1 == 1 and b2 == 0:
        return l_elt(g_mul(g, g_inv(h)), 1)
    return l_elt(g_mul(g_inv(h), g), 0)


def l_inv(i: int) -> int:
    g, flag = i % 6, i // 6
    return l_elt(g if flag else g_inv(g), flag)


L_LABELS = G_LABELS + [f"{l}u" for l in G_LABELS]

# the 4-dimensional piece has basis 1, x, y, w; the glued 48-dim basis is
# (loop element, piece element) with the loop factor most significant.
H_LABELS = ["1", "x", "y", "w"]
LABELS = [f"{la}.{lh}" for la in L_LABELS for lh in H_LABELS]

# x acts on the piece basis as the involution 1<->x, y<->w
X_TWIST = {0: 1, 1: 0, 2: 3, 3: 2}


def product_term(i: int, j: int):
    """The single signed basis term of (basis i) * (basis j), or None.

    Writing i = a (x) z and j = b (x) t with a, b loop indices and
    z, t piece indices, the product is carried by the loop product ab:
    a 1-leg or x-leg on the left multiplies the piece factors directly,
    while a y- or w-leg pairs only with t in {1, x}, twisting y<->w and
    picking up the sign (-1)^(flag(b) + t).
    """
    a, z = i // 4, i % 4
    b, t = j // 4, j % 4
    ab = l_mul(a, b)
    if z == 0:
        return ab * 4 + t, 1
    if z == 1:
        return ab * 4 + X_TWIST[t], 1
    if t >= 2:
        return None
    out = {2: (2, 3), 3: (3, 2)}[z][t]
    sign = -1 if (b // 6 + t) % 2 else 1
    return ab * 4 + out, sign

# antipode: on a (x) z the loop leg inverts; the piece leg fixes 1 and x,
# sends y to w and w to -y, with an extra (-1)^flag(a) on the y/w legs
ANTIPODE_CASES = {0: (0, 0), 1: (1, 0), 2: (3, 0), 3: (2, 1)}


def antipode_term(i: int):
    a, z = i // 4, i % 4
    out, extra = ANTIPODE_CASES[z]
    exponent = extra + (a // 6 if z >= 2 else 0)
    sign = -1 if exponent % 2 else 1
    return l_inv(a) * 4 + out, sign


def symbolic_table() -> str:
    def product_terms(i, j):
        term = product_term(i, j)
        return [] if term is None else [(term[0], str(term[1]))]

    def antipode_terms(i):
        idx, sign = antipode_term(i)
        return [(idx, str(sign))]

    return render_hopf_tables(LABELS, product_terms, antipode_terms)


def numeric_matrices() -> dict:
    n = len(LABELS)
    product = [[0] * (n * n) for _ in range(n)]
    for i in range(n):
        for j in range(n):
            term = product_term(i, j)
            if term is not None:
                product[term[0]][i * n + j] = term[1]
    antipode = [[0] * n for _ in range(n)]
    for i in range(n):
        idx, sign = antipode_term(i)
        antipode[idx][i] = sign
    return {"product": product, "antipode": antipode}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    default_dir = os.path.join(os.path.dirname(__file__), "..", "tests", "golden")
    ap.add_argument("--outdir", default=default_dir)
    args = ap.parse_args()
    os.makedirs(args.outdir, exist_ok=True)

    table_path = os.path.join(args.outdir, "dcp48_table.txt")
    with open(table_path, "w", encoding="utf-8") as fh:
        fh.write(symbolic_table())
    print(f"wrote {table_path}")

    numeric_path = os.path.join(args.outdir, "dcp48_numeric.json.gz")
    payload = json.dumps(numeric_matrices(), separators=(",", ":")).encode()
    # fixed mtime keeps the archive reproducible
    with gzip.GzipFile(numeric_path, "wb", mtime=0) as fh:
        fh.write(payload)
    print(f"wrote {numeric_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
