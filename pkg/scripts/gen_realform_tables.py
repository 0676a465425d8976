#!/usr/bin/env python3
"""Regenerate src/flagdom/data/realforms.tbl.

Derives the Cartan-involution data for every supported real form (su(p,q)
with p+q <= 9, sl(n,R) with 2 <= n <= 9) and writes the checksummed table the
library loads at runtime.  Run from the repository root after any change to
the derivations, then review the diff.
"""

from __future__ import annotations

import hashlib
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from flagdom.rootsys import build_root_system  # noqa: E402

HEADER = """\
flagdom-realforms/1
# Cartan involution data for the supported real forms.  Regenerate with
# scripts/gen_realform_tables.py; the sha256 line covers every line below it.
#
# Per record:
#   form <family> <params...>     su p q | sl_r n
#   complex A <rank>              complexified simple type
#   theta                         rank x rank integer matrix on the weight
#                                 lattice (fundamental coordinates)
#   compact <bits>                one flag per positive root of the complex
#                                 type, graded-lex root order; 1 = root space
#                                 lies in k
#   kfactor <family> <rank>       simple factors of K (zero or more lines)
#   torus <t>                     central torus rank of K
#   restrict <rows> <cols>        weight restriction matrix: G fundamental
#                                 coordinates -> (factor fundamental
#                                 coordinates..., torus charges)
#   endform
"""


def eps_matrix(rank):
    # fundamental -> epsilon coordinates with c_n = 0: c_i = sum_{k>=i} lam_k
    return [[1 if k >= i else 0 for k in range(rank)] for i in range(rank + 1)]


def su_record(p, q):
    n, rank = p + q, p + q - 1
    rs = build_root_system("A", rank)
    E = eps_matrix(rank)
    rows = []
    for i in range(p - 1):
        rows.append([E[i][t] - E[i + 1][t] for t in range(rank)])
    for j in range(q - 1):
        rows.append([E[p + j][t] - E[p + j + 1][t] for t in range(rank)])
    rows.append([q * sum(E[i][t] for i in range(p)) - p * sum(E[i][t] for i in range(p, n))
                 for t in range(rank)])
    flags = []
    for root in rs.positive_roots:
        support = [j for j, c in enumerate(root) if c]
        i, j = min(support), max(support) + 1  # root = eps_{i+1} - eps_{j+1}, 0-based i
        flags.append("1" if (j < p or i >= p) else "0")
    factors = []
    if p >= 2:
        factors.append(("A", p - 1))
    if q >= 2:
        factors.append(("A", q - 1))
    theta = [[1 if i == j else 0 for j in range(rank)] for i in range(rank)]
    return ("su", (p, q), rank, theta, "".join(flags), factors, 1, rows)


def sl_record(n):
    rank = n - 1
    rs = build_root_system("A", rank)
    E = eps_matrix(rank)
    m = n // 2
    f = [[E[j][t] - E[m + j][t] for t in range(rank)] for j in range(m)]

    def sub(u, v):
        return [a - b for a, b in zip(u, v)]

    def add(u, v):
        return [a + b for a, b in zip(u, v)]

    if n == 2:
        factors, rows = [], [f[0]]
    elif n == 3:
        factors, rows = [("A", 1)], [[2 * x for x in f[0]]]
    elif n == 4:
        factors, rows = [("A", 1), ("A", 1)], [sub(f[0], f[1]), add(f[0], f[1])]
    else:
        chain = [sub(f[j], f[j + 1]) for j in range(m - 1)]
        if n % 2:
            factors, rows = [("B", m)], chain + [[2 * x for x in f[m - 1]]]
        else:
            factors, rows = [("D", m)], chain + [add(f[m - 2], f[m - 1])]
    torus = 1 if n == 2 else 0
    theta = [[-1 if i == j else 0 for j in range(rank)] for i in range(rank)]
    flags = "0" * rs.num_positive_roots
    return ("sl_r", (n,), rank, theta, flags, factors, torus, rows)


def format_record(rec):
    family, params, rank, theta, flags, factors, torus, rows = rec
    out = [f"form {family} {' '.join(str(v) for v in params)}",
           f"complex A {rank}", "theta"]
    out += [" ".join(str(v) for v in row) for row in theta]
    out.append(f"compact {flags}")
    out += [f"kfactor {fam} {r}" for fam, r in factors]
    out.append(f"torus {torus}")
    out.append(f"restrict {len(rows)} {rank}")
    out += [" ".join(str(v) for v in row) for row in rows]
    out.append("endform")
    return "\n".join(out)


def main():
    records = []
    for total in range(2, 10):
        for p in range(1, total):
            records.append(su_record(p, total - p))
    for n in range(2, 10):
        records.append(sl_record(n))
    body = "\n\n".join(format_record(r) for r in records) + "\n"
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    text = HEADER + f"sha256 {digest}\n" + body
    target = pathlib.Path(__file__).resolve().parents[1] / "src/flagdom/data/realforms.tbl"
    target.write_text(text, "utf-8")
    print(f"wrote {target} ({len(records)} records, sha256 {digest[:12]}...)")


if __name__ == "__main__":
    main()
