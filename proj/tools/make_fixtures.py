#!/usr/bin/env python3
"""Generate the fixture corpus (groups, extensions, homs, graphs, pi1 files,
scenarios) as JSON, verifying every structural fact along the way.

The script is self-checking: it recomputes group invariants, homology values
(via a 2-cocycle counting oracle) and graph facts independently, and aborts if
anything disagrees with the values frozen into the C++ test suite.

Run from the repository root:  python3 tools/make_fixtures.py
"""

import json
import os
import sys
from itertools import product

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIX = os.path.join(ROOT, "fixtures")


# ---------------------------------------------------------------------------
# permutation and table utilities
# ---------------------------------------------------------------------------

def pcompose(p, q):
    """(p*q)(x) = p(q(x))  -- apply q first."""
    return tuple(p[q[i]] for i in range(len(p)))


def pinv(p):
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


def closure(gens):
    """BFS closure under right multiplication, generator index order."""
    n = len(gens[0])
    ident = tuple(range(n))
    elems = [ident]
    seen = {ident: 0}
    queue = [ident]
    while queue:
        nxt = []
        for x in queue:
            for g in gens:
                y = pcompose(x, g)
                if y not in seen:
                    seen[y] = len(elems)
                    elems.append(y)
                    nxt.append(y)
        queue = nxt
    return elems, seen


def table_from_perms(elems, seen):
    n = len(elems)
    return [[seen[pcompose(elems[a], elems[b])] for b in range(n)] for a in range(n)]


def check_group(table):
    n = len(table)
    assert all(len(r) == n for r in table)
    assert table[0] == list(range(n)) and [r[0] for r in table] == list(range(n))
    for r in table:
        assert sorted(r) == list(range(n))
    for c in range(n):
        assert sorted(r[c] for r in table) == list(range(n))
    for a in range(n):
        for b in range(n):
            tab = table[a][b]
            for c in range(n):
                assert table[tab][c] == table[a][table[b][c]], "assoc"
    for a in range(n):
        assert 0 in table[a], "inverse"


def inv_of(table, a):
    return table[a].index(0)


def elt_order(table, a):
    o, x = 1, a
    while x != 0:
        x = table[x][a]
        o += 1
    return o


def center(table):
    n = len(table)
    return [z for z in range(n) if all(table[z][g] == table[g][z] for g in range(n))]


def sub_closure(table, gens):
    elems = {0}
    queue = [0]
    gens = list(gens)
    while queue:
        x = queue.pop()
        for g in gens:
            y = table[x][g]
            if y not in elems:
                elems.add(y)
                queue.append(y)
            z = table[x][inv_of(table, g)]
            if z not in elems:
                elems.add(z)
                queue.append(z)
    return sorted(elems)


def commutator_subgroup(table, H=None, K=None):
    n = len(table)
    H = H if H is not None else range(n)
    K = K if K is not None else range(n)
    gens = set()
    for h in H:
        for k in K:
            c = table[table[inv_of(table, h)][inv_of(table, k)]][table[h][k]]
            gens.add(c)
    return sub_closure(table, gens)


def is_hom(tdom, tcod, m):
    return all(m[tdom[a][b]] == tcod[m[a]][m[b]] for a in range(len(tdom)) for b in range(len(tdom)))


def kernel(m):
    return sorted(i for i, v in enumerate(m) if v == 0)


def quotient(table, N):
    """Quotient by normal N; cosets labeled by minimal member."""
    n = len(table)
    nset = set(N)
    for g in range(n):
        gi = inv_of(table, g)
        for x in N:
            assert table[table[g][x]][gi] in nset, "not normal"
    coset_of = [-1] * n
    reps = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        mem = sorted(table[x][k] for k in N)
        for y in mem:
            coset_of[y] = len(reps)
        reps.append(mem[0])
    order = sorted(range(len(reps)), key=lambda i: reps[i])
    rank = [0] * len(reps)
    for newi, oldi in enumerate(order):
        rank[oldi] = newi
    proj = [rank[coset_of[x]] for x in range(n)]
    reps_sorted = [reps[i] for i in order]
    qtab = [[proj[table[reps_sorted[a]][reps_sorted[b]]] for b in range(len(reps))]
            for a in range(len(reps))]
    return qtab, proj


def abelian_invariants(table):
    n = len(table)
    if n == 1:
        return []
    for a in range(n):
        for b in range(n):
            assert table[a][b] == table[b][a], "not abelian"
    orders = [elt_order(table, a) for a in range(n)]

    def nfac(m):
        return sum(1 for o in orders if m % o == 0)

    fac = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            fac[p] = fac.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        fac[m] = fac.get(m, 0) + 1
    per_prime = {}
    for p, vmax in fac.items():
        prev = 1
        rs = []
        for j in range(1, vmax + 1):
            cnt = nfac(p ** j)
            r = 0
            q = cnt // prev
            while q > 1:
                q //= p
                r += 1
            rs.append(r)
            prev = cnt
        powers = []
        rs.append(0)
        for j in range(1, vmax + 1):
            powers += [p ** j] * (rs[j - 1] - rs[j])
        per_prime[p] = sorted(powers, reverse=True)
    k = max(len(v) for v in per_prime.values())
    out = []
    for i in range(k):
        d = 1
        for p, lst in per_prime.items():
            if i < len(lst):
                d *= lst[i]
        out.append(d)
    out.reverse()
    prodv = 1
    for d in out:
        prodv *= d
    assert prodv == n
    for i in range(len(out) - 1):
        assert out[i + 1] % out[i] == 0
    return out


# ---------------------------------------------------------------------------
# group constructions
# ---------------------------------------------------------------------------

def cyclic(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def direct_product(t1, t2):
    n2 = len(t2)
    return [[t1[a1][b1] * n2 + t2[a2][b2] for (b1, b2) in product(range(len(t1)), range(n2))]
            for (a1, a2) in product(range(len(t1)), range(n2))]


def q8_table():
    # elements 1,-1,i,-i,j,-j,k,-k as (sign, axis) with axis 0=1,1=i,2=j,3=k
    names = [(1, 0), (-1, 0), (1, 1), (-1, 1), (1, 2), (-1, 2), (1, 3), (-1, 3)]
    idx = {v: i for i, v in enumerate(names)}
    mul_axis = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 1): (-1, 3),
        (2, 3): (1, 1), (3, 2): (-1, 1),
        (3, 1): (1, 2), (1, 3): (-1, 2),
    }
    tab = []
    for (s1, a1) in names:
        row = []
        for (s2, a2) in names:
            s3, a3 = mul_axis[(a1, a2)]
            row.append(idx[(s1 * s2 * s3, a3)])
        tab.append(row)
    return tab


def dic3_table():
    # a^i b^j, i mod 3, j mod 4, b a b^-1 = a^-1; index = i*4+j, identity 0
    def mul(x, y):
        i, j = x
        k, l = y
        return ((i + (k if j % 2 == 0 else -k)) % 3, (j + l) % 4)

    names = [(i, j) for i in range(3) for j in range(4)]
    idx = {v: n for n, v in enumerate(names)}
    return [[idx[mul(x, y)] for y in names] for x in names]


def semidirect_check():
    t = dic3_table()
    check_group(t)
    assert len(center(t)) == 2
    invol = [a for a in range(12) if a != 0 and elt_order(t, a) == 2]
    assert len(invol) == 1  # dicyclic: unique involution
    return t


def gl2_perm_group(q, mats):
    """Permutation rep of <mats> in SL(2,q) acting on nonzero vectors of F_q^2."""
    vecs = [(x, y) for x in range(q) for y in range(q) if (x, y) != (0, 0)]
    vidx = {v: i for i, v in enumerate(vecs)}

    def act(m, v):
        a, b, c, d = m
        x, y = v
        return ((a * x + b * y) % q, (c * x + d * y) % q)

    perms = [tuple(vidx[act(m, v)] for v in vecs) for m in mats]
    return perms


# ---------------------------------------------------------------------------
# homology oracle (2-cocycle counting)
# ---------------------------------------------------------------------------

def solcount_mod_pk(rows, nvars, p, k):
    """log_p of the number of solutions of A x = 0 over Z/p^k.

    Two-sided local Smith elimination: the global minimal-valuation entry is
    the pivot, so every entry in the active block is divisible by it."""
    import numpy as np
    mod = p ** k
    if not rows:
        return nvars * k
    A = np.array(rows, dtype=np.int64) % mod
    A = A[np.any(A, axis=1)]
    if A.size == 0:
        return nvars * k
    row_act = np.ones(A.shape[0], dtype=bool)
    col_act = np.ones(A.shape[1], dtype=bool)
    vals = []
    while True:
        ri = np.where(row_act)[0]
        ci = np.where(col_act)[0]
        if len(ri) == 0 or len(ci) == 0:
            break
        sub = A[np.ix_(ri, ci)]
        if not sub.any():
            break
        # valuation of each entry (k where zero)
        V = np.full(sub.shape, k, dtype=np.int64)
        t = sub.copy()
        nz = t != 0
        v = 0
        while nz.any() and v < k:
            V[nz & (t % p != 0)] = v
            keep = nz & (t % p == 0)
            t = np.where(keep, t // p, 0)
            nz = keep
            v += 1
        pv = int(V.min())
        assert pv < k
        pi, pj = np.unravel_index(int(V.argmin()), V.shape)
        i, j = int(ri[pi]), int(ci[pj])
        unit = int(A[i, j]) // p ** pv
        A[i, ci] = (A[i, ci] * pow(unit, -1, mod)) % mod
        f = A[ri, j] // p ** pv
        A[np.ix_(ri, ci)] = (A[np.ix_(ri, ci)] - np.outer(f, A[i, ci])) % mod
        # the pivot column is now zero except at the pivot; clearing the pivot
        # row by column ops only changes row i, which leaves the active block
        A[i, ci] = 0
        vals.append(pv)
        row_act[i] = False
        col_act[j] = False
    return (nvars - len(vals)) * k + sum(min(v, k) for v in vals)


def h2_cocycle_oracle(table):
    """H2(G,Z) invariant factors via counting H^2(G, Z/p^k) and UCT."""
    n = len(table)
    nz = [g for g in range(n) if g != 0]
    vidx = {(g, h): i for i, (g, h) in enumerate(product(nz, nz))}
    nvars = len(vidx)

    def var(g, h):
        if g == 0 or h == 0:
            return None
        return vidx[(g, h)]

    rows = []
    for g in nz:
        for h in nz:
            for kx in nz:
                row = [0] * nvars
                for coef, key in ((1, (g, h)), (1, (table[g][h], kx)),
                                  (-1, (h, kx)), (-1, (g, table[h][kx]))):
                    v = var(*key)
                    if v is not None:
                        row[v] += coef
                if any(row):
                    rows.append(row)
    # H1 via abelianization
    com = commutator_subgroup(table)
    qtab, _ = quotient(table, com)
    h1 = abelian_invariants(qtab)

    fac = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            fac[p] = fac.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        fac[m] = fac.get(m, 0) + 1

    per_prime = {}
    for p, vmax in fac.items():
        K = vmax + 1
        s = []
        for k in range(1, K + 1):
            # |Z^2| = p^z2
            z2 = solcount_mod_pk(rows, nvars, p, k)
            # |B^2| = p^{k*(n-1)} / |Hom(G, Z/p^k)|; Hom(G,A)=Hom(H1,A)
            hom_g = sum(min(k, valp(d, p)) for d in h1)
            b2 = k * (n - 1) - hom_g
            # |H^2(G,Z/p^k)| = p^{z2-b2}; Ext(H1, Z/p^k) = prod gcd-parts
            ext = sum(min(k, valp(d, p)) for d in h1)
            homh2 = z2 - b2 - ext  # log_p |Hom(H2, Z/p^k)|
            s.append(homh2)
        # recover multiset of p-power exponents: #{e_i >= k} = s_k - s_{k-1}
        s = [0] + s
        counts = [s[k] - s[k - 1] for k in range(1, K + 1)]
        assert counts[-1] == 0, f"H2 p-part not bounded at p={p}"
        exps = []
        for k in range(1, K + 1):
            ge_k = counts[k - 1]
            ge_k1 = counts[k] if k < K else 0
            exps += [k] * (ge_k - ge_k1)
        per_prime[p] = sorted((p ** e for e in exps), reverse=True)

    k = max((len(v) for v in per_prime.values()), default=0)
    out = []
    for i in range(k):
        d = 1
        for p, lst in per_prime.items():
            if i < len(lst):
                d *= lst[i]
        out.append(d)
    out.reverse()
    return out


def valp(dd, p):
    v = 0
    while dd % p == 0:
        dd //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------

def cycle_graph(n):
    """C_n: vertices 0..n-1, darts 2i: i->i+1, 2i+1: i+1->i."""
    darts = []
    for i in range(n):
        darts.append({"id": 2 * i, "reverse": 2 * i + 1, "source": i})
        darts.append({"id": 2 * i + 1, "reverse": 2 * i, "source": (i + 1) % n})
    return {"vertices": n, "darts": darts, "basepoint": 0}


def fig8_graph():
    darts = [
        {"id": 0, "reverse": 1, "source": 0},  # a
        {"id": 1, "reverse": 0, "source": 0},
        {"id": 2, "reverse": 3, "source": 0},  # b
        {"id": 3, "reverse": 2, "source": 0},
    ]
    return {"vertices": 1, "darts": darts, "basepoint": 0}


def wedge_cover_from_monodromy(base, perms):
    """Cover of the one-vertex wedge graph: sheet s, base dart pair (2e,2e+1)
    acted on by perms[e]; dart 'a' lifted at sheet s goes to perms[e][s]."""
    nsheets = len(perms[0])
    nedges = len(base["darts"]) // 2
    darts = []
    dmap = []
    for e in range(nedges):
        sigma = perms[e]
        for s in range(nsheets):
            fwd = len(darts)
            darts.append({"id": fwd, "reverse": fwd + 1, "source": s})
            darts.append({"id": fwd + 1, "reverse": fwd, "source": sigma[s]})
            dmap += [2 * e, 2 * e + 1]
    total = {"vertices": nsheets, "darts": darts, "basepoint": 0}
    vmap = [0] * nsheets
    return total, vmap, dmap


def validate_cover(total, base, vmap, dmap):
    for d in total["darts"]:
        bd = dmap[d["id"]]
        assert base["darts"][bd]["source"] == vmap[d["source"]]
        assert dmap[d["reverse"]] == base["darts"][bd]["reverse"]
    for v in range(total["vertices"]):
        star = [d["id"] for d in total["darts"] if d["source"] == v]
        bstar = [d["id"] for d in base["darts"] if d["source"] == vmap[v]]
        assert sorted(dmap[d] for d in star) == sorted(bstar), f"star at {v}"
    assert vmap[total["basepoint"]] == base["basepoint"]


# ---------------------------------------------------------------------------
# main build
# ---------------------------------------------------------------------------

def wjson(path, obj):
    full = os.path.join(FIX, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w") as f:
        json.dump(obj, f, separators=(",", ":"))
        f.write("\n")
    print("wrote", os.path.relpath(full, ROOT))


def group_json(name, table):
    return {"name": name, "order": len(table), "table": table}


def main():
    groups = {}

    def add(name, table):
        check_group(table)
        groups[name] = table
        wjson(f"groups/{name}.json", group_json(name, table))

    add("z2", cyclic(2))
    add("z3", cyclic(3))
    add("z4", cyclic(4))
    add("z6", cyclic(6))
    add("z12", cyclic(12))
    add("v4", [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])
    add("z2z4", direct_product(cyclic(2), cyclic(4)))
    add("z2cube", direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)))

    s3_el, s3_seen = closure([(1, 2, 0), (1, 0, 2)])  # (012), (01)
    assert len(s3_el) == 6
    add("s3", table_from_perms(s3_el, s3_seen))

    d4_el, d4_seen = closure([(1, 2, 3, 0), (0, 3, 2, 1)])  # (0123), (13)
    assert len(d4_el) == 8
    add("d4", table_from_perms(d4_el, d4_seen))

    add("q8", q8_table())
    add("dic3", semidirect_check())

    a4_el, a4_seen = closure([(1, 2, 0, 3), (1, 0, 3, 2)])  # (012), (01)(23)
    assert len(a4_el) == 12
    add("a4", table_from_perms(a4_el, a4_seen))

    a5_el, a5_seen = closure([(1, 2, 3, 4, 0), (1, 2, 0, 3, 4)])  # (01234), (012)
    assert len(a5_el) == 60
    add("a5", table_from_perms(a5_el, a5_seen))

    # SL(2,3) on the 8 nonzero vectors of F_3^2; SL(2,5) on the 24 of F_5^2
    sl23_gens = gl2_perm_group(3, [(0, 2, 1, 0), (1, 1, 0, 1)])  # S=[[0,-1],[1,0]], T=[[1,1],[0,1]]
    sl23_el, sl23_seen = closure(sl23_gens)
    assert len(sl23_el) == 24, len(sl23_el)
    add("sl23", table_from_perms(sl23_el, sl23_seen))

    sl25_gens = gl2_perm_group(5, [(0, 4, 1, 0), (1, 1, 0, 1)])
    sl25_el, sl25_seen = closure(sl25_gens)
    assert len(sl25_el) == 120, len(sl25_el)
    sl25 = table_from_perms(sl25_el, sl25_seen)
    add("sl25", sl25)
    wjson("groups/sl25_gens.json",
          {"name": "sl25_gens", "degree": 24,
           "generators": [cycles_of(sl25_gens[0]), cycles_of(sl25_gens[1])]})

    # products used by scenarios
    add("a5xz2", direct_product(groups["a5"], cyclic(2)))
    add("sl25xz2", direct_product(sl25, cyclic(2)))
    add("d4xz2", direct_product(groups["d4"], cyclic(2)))
    add("v4xz2", direct_product(groups["v4"], cyclic(2)))

    # ---- frozen structural facts -------------------------------------------
    t = groups["s3"]
    assert len(commutator_subgroup(t)) == 3
    assert len(center(t)) == 1
    t = groups["a5"]
    assert len(commutator_subgroup(t)) == 60
    t = groups["q8"]
    assert center(t) == sorted(center(t)) and len(center(t)) == 2
    qq, _ = quotient(groups["q8"], center(groups["q8"]))
    assert abelian_invariants(qq) == [2, 2]
    assert len(center(groups["d4"])) == 2
    assert len(center(sl25)) == 2
    assert len(commutator_subgroup(sl25)) == 120  # perfect
    assert len(commutator_subgroup(groups["sl23"])) == 8  # = Q8
    assert abelian_invariants(quotient(groups["dic3"], sub_closure(groups["dic3"], [4]))[0]) == [4]

    # End(S3) has 10 elements (hom-count oracle freeze)
    s3 = groups["s3"]
    cnt = 0
    for m in product(range(6), repeat=6):
        if m[0] == 0 and is_hom(s3, s3, m):
            cnt += 1
    assert cnt == 10, cnt
    # |Hom(V4,Z2)| = 4
    v4, z2 = groups["v4"], groups["z2"]
    cnt = sum(1 for m in product(range(2), repeat=4) if m[0] == 0 and is_hom(v4, z2, m))
    assert cnt == 4

    # ---- extensions / homs ---------------------------------------------------
    exts = {}

    def add_ext(name, dom, cod, mp, surjective=True):
        assert is_hom(groups[dom], groups[cod], mp)
        if surjective:
            assert sorted(set(mp)) == list(range(len(groups[cod])))
        exts[name] = (dom, cod, mp)
        wjson(f"exts/{name}.json",
              {"name": name, "dom": {"file": f"../groups/{dom}.json"},
               "cod": {"file": f"../groups/{cod}.json"}, "map": mp})

    def quot_map_into(dom, modgens, cod, gen_assign=None):
        """Quotient of groups[dom] by normal closure of modgens, then match to
        groups[cod]: returns a surjective hom dom->cod (first iso found)."""
        N = sub_closure(groups[dom], modgens)
        # normal closure
        changed = True
        while changed:
            changed = False
            tt = groups[dom]
            for g in range(len(tt)):
                gi = inv_of(tt, g)
                for x in list(N):
                    y = tt[tt[g][x]][gi]
                    if y not in N:
                        N = sub_closure(tt, set(N) | {y})
                        changed = True
        qtab, proj = quotient(groups[dom], N)
        iso = find_iso(qtab, groups[cod])
        assert iso is not None
        return [iso[proj[x]] for x in range(len(groups[dom]))]

    def find_iso(t1, t2):
        n = len(t1)
        if n != len(t2):
            return None
        if n == 1:
            return [0]
        o1 = [elt_order(t1, a) for a in range(n)]
        o2 = [elt_order(t2, a) for a in range(n)]
        if sorted(o1) != sorted(o2):
            return None
        gens = []
        got = {0}
        for a in range(n):
            if a not in got:
                gens.append(a)
                got = set(sub_closure(t1, gens))
                if len(got) == n:
                    break

        def extend(assign):
            m = {0: 0}
            frontier = [0]
            while frontier:
                nf = []
                for x in frontier:
                    for gi, g in enumerate(gens):
                        y = t1[x][g]
                        img = t2[m[x]][assign[gi]]
                        if y in m:
                            if m[y] != img:
                                return None
                        else:
                            m[y] = img
                            nf.append(y)
                frontier = nf
            if len(m) != n or len(set(m.values())) != n:
                return None
            mm = [m[i] for i in range(n)]
            return mm if is_hom(t1, t2, mm) else None

        def rec(i, assign):
            if i == len(gens):
                return extend(assign)
            for b in range(n):
                if o2[b] == o1[gens[i]]:
                    r = rec(i + 1, assign + [b])
                    if r:
                        return r
            return None

        return rec(0, [])

    add_ext("z4_to_z2", "z4", "z2", [i % 2 for i in range(4)])
    add_ext("z6_to_z2", "z6", "z2", [i % 2 for i in range(6)])
    add_ext("z6_to_z3", "z6", "z3", [i % 3 for i in range(6)])
    add_ext("v4_to_z2", "v4", "z2", [0, 0, 1, 1])
    # s3 sign: parity of permutation
    sgn = [0 if parity(p) == 0 else 1 for p in s3_el]
    add_ext("s3_to_z2", "s3", "z2", sgn)
    add_ext("q8_to_v4", "q8", "v4", quot_map_into("q8", center(groups["q8"]), "v4"))
    add_ext("d4_to_v4", "d4", "v4", quot_map_into("d4", center(groups["d4"]), "v4"))
    add_ext("a4_to_z3", "a4", "z3", quot_map_into("a4", [a for a in range(12) if elt_order(groups["a4"], a) == 2], "z3"))
    add_ext("dic3_to_z4", "dic3", "z4", [j % 4 for i in range(3) for j in range(4)])

    # sl23 -> a4 via conjugation on the four Sylow 3-subgroups
    m = conj_action_map(groups["sl23"], 3, groups["a4"], a4_el)
    add_ext("sl23_to_a4", "sl23", "a4", m)
    # sl25 -> a5 via conjugation on the five Sylow 2-subgroups
    m = conj_action_map(sl25, 8, groups["a5"], a5_el)
    add_ext("sl25_to_a5", "sl25", "a5", m)
    assert kernel(m) == sorted([0, [elt_order(sl25, a) for a in range(120)].index(2)])

    # product-projection extensions (element (a, z) has index a*2+z)
    u5 = exts["sl25_to_a5"][2]
    add_ext("a5xz2_to_a5", "a5xz2", "a5", [i // 2 for i in range(120)])
    add_ext("sl25xz2_to_a5", "sl25xz2", "a5", [u5[i // 2] for i in range(240)])
    u4 = exts["d4_to_v4"][2]
    add_ext("v4xz2_to_v4", "v4xz2", "v4", [i // 2 for i in range(8)])
    add_ext("d4xz2_to_v4", "d4xz2", "v4", [u4[i // 2] for i in range(16)])

    # inclusions (not surjective; kind=hom)
    a4_in_a5 = [a5_seen[p + (4,)] for p in a4_el]
    assert is_hom(groups["a4"], groups["a5"], a4_in_a5)
    wjson("homs/a4_into_a5.json",
          {"name": "a4_into_a5", "dom": {"file": "../groups/a4.json"},
           "cod": {"file": "../groups/a5.json"}, "map": a4_in_a5})
    v4_perms = [(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
    v4_in_a4 = [a4_seen[p] for p in v4_perms]
    assert is_hom(groups["v4"], groups["a4"], v4_in_a4)
    wjson("homs/v4_into_a4.json",
          {"name": "v4_into_a4", "dom": {"file": "../groups/v4.json"},
           "cod": {"file": "../groups/a4.json"}, "map": v4_in_a4})
    z2_in_v4 = [0, 1]
    wjson("homs/z2_into_v4.json",
          {"name": "z2_into_v4", "dom": {"file": "../groups/z2.json"},
           "cod": {"file": "../groups/v4.json"}, "map": z2_in_v4})

    # ---- Galois-group facts frozen in tests ---------------------------------
    def gal_intersection(ext):
        dom, cod, mp = exts[ext]
        K = kernel(mp)
        com = commutator_subgroup(groups[dom])
        return sorted(set(K) & set(com))

    assert len(gal_intersection("q8_to_v4")) == 2
    assert len(gal_intersection("z4_to_z2")) == 1
    assert len(gal_intersection("sl25_to_a5")) == 2
    assert len(gal_intersection("d4_to_v4")) == 2
    assert len(gal_intersection("sl23_to_a4")) == 2
    assert len(gal_intersection("sl25xz2_to_a5")) == 2
    assert len(gal_intersection("d4xz2_to_v4")) == 2
    assert len(gal_intersection("a5xz2_to_a5")) == 1

    # no hom D4 -> Q8 compatible with the two covers (NoLifting fixture fact)
    d4, q8 = groups["d4"], groups["q8"]
    pq, pd = exts["q8_to_v4"][2], exts["d4_to_v4"][2]
    found = False
    for im0 in range(8):
        for im1 in range(8):
            mm = try_extend_two_gen(d4, q8, d4_seen[(1, 2, 3, 0)], d4_seen[(0, 3, 2, 1)], im0, im1)
            if mm and all(pq[mm[x]] == pd[x] for x in range(8)):
                found = True
    assert not found, "unexpected lifting D4 -> Q8 over V4"

    # ---- homology oracle values ---------------------------------------------
    # sl23 (order 24) is too big for the python cocycle path; its H2 is
    # checked in the C++ suite against the sparse-mode bar computation.
    litH2 = {"z2": [], "z3": [], "z4": [], "z6": [], "z12": [],
             "v4": [2], "z2z4": [2], "z2cube": [2, 2, 2],
             "s3": [], "d4": [2], "q8": [], "dic3": [], "a4": [2]}
    for name, expect in litH2.items():
        got = h2_cocycle_oracle(groups[name])
        assert got == expect, (name, got, expect)
        print(f"H2({name}) = {got}  ok")
    h1lit = {"z2": [2], "z3": [3], "z4": [4], "z6": [6], "v4": [2, 2],
             "s3": [2], "d4": [2, 2], "q8": [2, 2], "a4": [3], "a5": [],
             "sl25": []}
    for name, expect in h1lit.items():
        com = commutator_subgroup(groups[name])
        qtab, _ = quotient(groups[name], com)
        assert abelian_invariants(qtab) == expect, name
    print("H1 table ok")

    # ---- graphs ---------------------------------------------------------------
    c3 = cycle_graph(3)
    c6 = cycle_graph(6)
    wjson("graphs/c3.json", {"name": "c3", **c3})
    wjson("graphs/c6.json", {"name": "c6", **c6})
    vmap = [v % 3 for v in range(6)]
    dmap = []
    for d in c6["darts"]:
        e = d["id"] // 2
        dmap.append(2 * (e % 3) + (d["id"] % 2))
    validate_cover(c6, c3, vmap, dmap)
    wjson("graphs/c6_to_c3.json",
          {"name": "c6_to_c3", "total": {"file": "c6.json"}, "base": {"file": "c3.json"},
           "vmap": vmap, "dmap": dmap})

    f8 = fig8_graph()
    wjson("graphs/fig8.json", {"name": "fig8", **f8})
    tot, vm, dm = wedge_cover_from_monodromy(f8, [(1, 0), (0, 1)])  # a swaps, b fixes
    validate_cover(tot, f8, vm, dm)
    wjson("graphs/fig8_double.json", {"name": "fig8_double", **tot})
    wjson("graphs/fig8_double_cover.json",
          {"name": "fig8_double_cover", "total": {"file": "fig8_double.json"},
           "base": {"file": "fig8.json"}, "vmap": vm, "dmap": dm})

    tot3, vm3, dm3 = wedge_cover_from_monodromy(f8, [(1, 0, 2), (0, 2, 1)])  # a=(01), b=(12)
    validate_cover(tot3, f8, vm3, dm3)
    wjson("graphs/fig8_irr3.json", {"name": "fig8_irr3", **tot3})
    wjson("graphs/fig8_irr3_cover.json",
          {"name": "fig8_irr3_cover", "total": {"file": "fig8_irr3.json"},
           "base": {"file": "fig8.json"}, "vmap": vm3, "dmap": dm3})

    # disconnected C3 ⊔ C3 -> C3
    dd = []
    for copy in range(2):
        for d in c3["darts"]:
            dd.append({"id": d["id"] + 6 * copy, "reverse": d["reverse"] + 6 * copy,
                       "source": d["source"] + 3 * copy})
    c3disj = {"vertices": 6, "darts": dd, "basepoint": 0}
    vmapd = [v % 3 for v in range(6)]
    dmapd = [d["id"] % 6 for d in dd]
    validate_cover(c3disj, c3, vmapd, dmapd)
    wjson("graphs/c3disj.json", {"name": "c3disj", **c3disj})
    wjson("graphs/c3disj_to_c3.json",
          {"name": "c3disj_to_c3", "total": {"file": "c3disj.json"},
           "base": {"file": "c3.json"}, "vmap": vmapd, "dmap": dmapd})

    # ---- pi1 fixtures ----------------------------------------------------------
    def pi1_file(name, base, uext, family):
        wjson(f"pi1/{name}.json",
              {"name": name, "base": {"file": f"../groups/{base}.json"},
               "universal": {"file": f"../exts/{uext}.json"} if uext else {"identity": True},
               "family": family})

    trivial = lambda g: {"trivial_cover": {"file": f"../groups/{g}.json"}}
    prodwith = lambda g: {"product_with": {"file": f"../groups/{g}.json"}}
    pi1_file("pi1_a5", "a5", "sl25_to_a5",
             [{"identity": True}, {"file": "../exts/sl25_to_a5.json"},
              trivial("z2"), trivial("z3"), prodwith("z2")])
    pi1_file("pi1_a4", "a4", "sl23_to_a4",
             [{"identity": True}, {"file": "../exts/sl23_to_a4.json"},
              trivial("z2"), trivial("z3"), prodwith("z2")])
    pi1_file("pi1_v4_d4", "v4", "d4_to_v4",
             [{"identity": True}, {"file": "../exts/d4_to_v4.json"},
              trivial("z2"), trivial("z3"), prodwith("z2")])
    pi1_file("pi1_v4_q8", "v4", "q8_to_v4",
             [{"identity": True}, {"file": "../exts/q8_to_v4.json"},
              trivial("z2"), trivial("z3"), prodwith("z2")])
    pi1_file("pi1_z2", "z2", None,
             [{"identity": True}, trivial("z2"), trivial("z3")])

    # ---- scenarios ------------------------------------------------------------
    os.makedirs(os.path.join(ROOT, "scenarios", "mutated"), exist_ok=True)

    sl25_m1 = [elt_order(sl25, a) for a in range(120)].index(2)  # the unique -1
    gal_u = [0, sl25_m1]
    # morphism maps (element (a,z) of a product has index a*2+z)
    h1 = [u5[s] * 2 + 0 for s in range(120)]          # SL25 -> A5 x Z2
    h2 = [s * 2 + 0 for s in range(120)]              # SL25 -> SL25 x Z2
    f3 = [u5[i // 2] * 2 + (i % 2) for i in range(240)]  # SL25xZ2 -> A5xZ2
    ida5 = list(range(60))

    a5_base = {"name": "a5", "group": {"file": "../fixtures/groups/a5.json"},
               "universal": {"file": "../fixtures/exts/sl25_to_a5.json"},
               "family": [{"identity": True}, {"file": "../fixtures/exts/sl25_to_a5.json"},
                          {"trivial_cover": {"file": "../fixtures/groups/z2.json"}},
                          {"trivial_cover": {"file": "../fixtures/groups/z3.json"}},
                          {"product_with": {"file": "../fixtures/groups/z2.json"}}]}
    scen = {"name": "a5_kan", "kind": "kan",
            "bases": [a5_base],
            "extensions": [
                {"name": "u", "file": "../fixtures/exts/sl25_to_a5.json", "base": "a5"},
                {"name": "p_triv", "file": "../fixtures/exts/a5xz2_to_a5.json", "base": "a5"},
                {"name": "p_cent", "file": "../fixtures/exts/sl25xz2_to_a5.json", "base": "a5"}],
            "morphisms": [
                {"name": "m1", "from": "u", "to": "p_triv", "f": h1, "b": ida5, "Fb": [0, 1]},
                {"name": "m2", "from": "u", "to": "p_cent", "f": h2, "b": ida5, "Fb": [0, 1]},
                {"name": "m3", "from": "p_cent", "to": "p_triv", "f": f3, "b": ida5, "Fb": [0, 1]}],
            "functor": {"a5": {"table": [[0, 1], [1, 0]]}},
            "gamma": {"u": gal_u, "p_triv": [0, 0], "p_cent": [0, sl25_m1 * 2]}}
    with open(os.path.join(ROOT, "scenarios", "a5_kan.json"), "w") as f:
        json.dump(scen, f, indent=1)
    print("wrote scenarios/a5_kan.json")

    mut = json.loads(json.dumps(scen).replace("../fixtures", "../../fixtures"))
    mut["name"] = "a5_kan_mutated"
    mut["morphisms"] = [m for m in mut["morphisms"] if m["name"] == "m1"]
    mut["gamma"]["p_cent"] = [0, 0]
    with open(os.path.join(ROOT, "scenarios", "mutated", "a5_kan_mutated.json"), "w") as f:
        json.dump(mut, f, indent=1)
    print("wrote scenarios/mutated/a5_kan_mutated.json")

    # V4 scenario
    d4r2 = center(groups["d4"])[1] if center(groups["d4"])[0] == 0 else center(groups["d4"])[0]
    g1 = [u4[x] * 2 for x in range(8)]       # D4 -> V4 x Z2
    g2 = [x * 2 for x in range(8)]           # D4 -> D4 x Z2
    g3 = [u4[i // 2] * 2 + (i % 2) for i in range(16)]  # D4xZ2 -> V4xZ2
    idv4 = list(range(4))
    v4_base = {"name": "v4", "group": {"file": "../fixtures/groups/v4.json"},
               "universal": {"file": "../fixtures/exts/d4_to_v4.json"},
               "family": [{"identity": True}, {"file": "../fixtures/exts/d4_to_v4.json"},
                          {"trivial_cover": {"file": "../fixtures/groups/z2.json"}},
                          {"trivial_cover": {"file": "../fixtures/groups/z3.json"}},
                          {"product_with": {"file": "../fixtures/groups/z2.json"}}]}
    scenv = {"name": "v4_kan", "kind": "kan",
             "bases": [v4_base],
             "extensions": [
                 {"name": "u", "file": "../fixtures/exts/d4_to_v4.json", "base": "v4"},
                 {"name": "p_triv", "file": "../fixtures/exts/v4xz2_to_v4.json", "base": "v4"},
                 {"name": "p_cent", "file": "../fixtures/exts/d4xz2_to_v4.json", "base": "v4"}],
             "morphisms": [
                 {"name": "m1", "from": "u", "to": "p_triv", "f": g1, "b": idv4, "Fb": [0, 1]},
                 {"name": "m2", "from": "u", "to": "p_cent", "f": g2, "b": idv4, "Fb": [0, 1]},
                 {"name": "m3", "from": "p_cent", "to": "p_triv", "f": g3, "b": idv4, "Fb": [0, 1]}],
             "functor": {"v4": {"table": [[0, 1], [1, 0]]}},
             "gamma": {"u": [0, d4r2], "p_triv": [0, 0], "p_cent": [0, d4r2 * 2]}}
    with open(os.path.join(ROOT, "scenarios", "v4_kan.json"), "w") as f:
        json.dump(scenv, f, indent=1)
    print("wrote scenarios/v4_kan.json")

    # ker-kind scenario over A5 (gamma into kernels)
    scenk = {"name": "a5_ker", "kind": "ker",
             "bases": [a5_base],
             "extensions": scen["extensions"],
             "morphisms": scen["morphisms"],
             "functor": {"a5": {"table": [[0, 1], [1, 0]]}},
             "gamma": {"u": gal_u, "p_triv": [0, 0], "p_cent": [0, sl25_m1 * 2]}}
    with open(os.path.join(ROOT, "scenarios", "a5_ker.json"), "w") as f:
        json.dump(scenk, f, indent=1)
    print("wrote scenarios/a5_ker.json")

    # escape fixture: gamma hits Ker(p) outside Ker(eta)
    escape = {"name": "z2_ker_escape", "kind": "ker",
              "bases": [{"name": "z2", "group": {"file": "../../fixtures/groups/z2.json"},
                         "universal": {"identity": True},
                         "family": [{"identity": True},
                                    {"trivial_cover": {"file": "../../fixtures/groups/z2.json"}}]}],
              "extensions": [
                  {"name": "u", "dom": {"file": "../../fixtures/groups/z2.json"},
                   "cod": {"file": "../../fixtures/groups/z2.json"}, "map": [0, 1], "base": "z2"},
                  {"name": "p", "file": "../../fixtures/exts/z4_to_z2.json", "base": "z2"}],
              "morphisms": [],
              "functor": {"z2": {"table": [[0, 1], [1, 0]]}},
              "gamma": {"u": [0, 0], "p": [0, 2]}}
    with open(os.path.join(ROOT, "scenarios", "mutated", "z2_ker_escape.json"), "w") as f:
        json.dump(escape, f, indent=1)
    print("wrote scenarios/mutated/z2_ker_escape.json")

    print("\nall fixture checks passed")


def parity(p):
    seen = [False] * len(p)
    par = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        l = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            l += 1
        par ^= (l - 1) & 1
    return par


def cycles_of(p):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(cyc)
    return out


def try_extend_two_gen(t1, t2, g0, g1, im0, im1):
    n = len(t1)
    m = {0: 0, g0: im0, g1: im1}
    frontier = [0, g0, g1]
    while frontier:
        nf = []
        for x in frontier:
            for g, im in ((g0, im0), (g1, im1)):
                y = t1[x][g]
                img = t2[m[x]][im]
                if y in m:
                    if m[y] != img:
                        return None
                else:
                    m[y] = img
                    nf.append(y)
        frontier = nf
    if len(m) != n:
        return None
    mm = [m[i] for i in range(n)]
    return mm if is_hom(t1, t2, mm) else None


def conj_action_map(table, sylow_order, target_table, target_elems):
    """Map each g to its conjugation permutation of the Sylow subgroups of the
    given order, located as an element of the target permutation group."""
    n = len(table)
    subs = set()
    for a in range(n):
        if sylow_order % elt_order(table, a) == 0:
            for b in range(n):
                if sylow_order % elt_order(table, b) == 0:
                    s = tuple(sub_closure(table, [a, b]))
                    if len(s) == sylow_order:
                        subs.add(s)
    subs = sorted(subs)
    assert len(subs) == len(target_elems[0]), (len(subs), "sylow count")
    tidx = {p: i for i, p in enumerate(target_elems)}
    out = []
    for g in range(n):
        gi = inv_of(table, g)
        perm = []
        for s in subs:
            img = tuple(sorted(table[table[g][x]][gi] for x in s))
            perm.append(subs.index(img))
        out.append(tidx[tuple(perm)])
    return out


if __name__ == "__main__":
    sys.exit(main())
