"""Independent brute-force oracle for catalog group statistics.

Groups are realised either from presentations (sympy coset enumeration ->
regular permutation representation) or from explicit permutations, then all
statistics are computed by brute force over element tuples.
"""
import itertools, json, sys
from math import gcd
from sympy.combinatorics.free_groups import free_group
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics import Permutation, PermutationGroup


def from_presentation(names, rels):
    F, *gens = free_group(names)
    env = dict(zip(names.split(), gens))
    G = FpGroup(F, [eval(r, {}, env) for r in rels])
    P, _ = G._to_perm_group()
    return [tuple(g.array_form) for g in P.generators], P.degree


def perms(degree, cycles_list):
    out = []
    for cyc in cycles_list:
        p = list(range(degree))
        for c in cyc:
            for i in range(len(c)):
                p[c[i]] = c[(i + 1) % len(c)]
        out.append(tuple(p))
    return out, degree


def compose(p, q):  # apply p then q
    return tuple(q[p[i]] for i in range(len(p)))


def closure(gens, degree):
    e = tuple(range(degree))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def direct(a, b):
    (ga, da), (gb, db) = a, b
    gens = []
    for g in ga:
        gens.append(tuple(list(g) + list(range(da, da + db))))
    for g in gb:
        gens.append(tuple(list(range(da)) + [da + v for v in g]))
    return gens, da + db


def cyclic(n):
    return perms(n, [[list(range(n))]]) if n > 1 else ([tuple([0])], 1)


def sym(n):
    if n < 2:
        return [tuple([0])], 1
    return perms(n, [[list(range(n))], [[0, 1]]])


def alt(n):
    if n < 3:
        return [tuple(range(max(n, 1)))], max(n, 1)
    return perms(n, [[[0, 1, i]] for i in range(2, n)])


def stats(gens, degree):
    els = closure(gens, degree)
    n = len(els)
    idx = {x: i for i, x in enumerate(els)}
    e = tuple(range(degree))

    def powers(x):
        out = [e]
        y = x
        while y != e:
            out.append(y)
            y = compose(y, x)
        return out

    cyc = {x: frozenset(powers(x)) for x in els}
    order = {x: len(cyc[x]) for x in els}
    spectrum = {}
    for x in els:
        spectrum[order[x]] = spectrum.get(order[x], 0) + 1
    hexes = sorted({cyc[x] for x in els if order[x] == 6}, key=lambda s: sorted(idx[v] for v in s))
    pair = sorted(len(a & b) for a, b in itertools.combinations(hexes, 2))
    common = len(frozenset.intersection(*hexes)) if hexes else 0
    octs = {cyc[x] for x in els if order[x] == 8}
    center = [x for x in els if all(compose(x, y) == compose(y, x) for y in els)]
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    prime_subgroups = {p: spectrum.get(p, 0) // (p - 1) for p in primes}
    edges = set()
    for x in els:
        for y in cyc[x]:
            if y != x:
                edges.add(frozenset((x, y)))
    sub = set(spectrum) <= {1, 2, 3, 4, 6}
    cond = sub and len(hexes) == 3 and 3 in pair
    return {
        "order": n,
        "spectrum": {str(k): spectrum[k] for k in sorted(spectrum)},
        "hexagons": len(hexes),
        "pairwise": pair,
        "common": common,
        "octagons": len(octs),
        "involutions": spectrum.get(2, 0),
        "center": len(center),
        "prime_subgroups": {str(p): c for p, c in prime_subgroups.items()},
        "power_graph_edges": len(edges),
        "three_hexagon_conditions": cond,
    }


GROUPS = {
    "[1,1]": lambda: ([tuple([0])], 1),
    "[2,1]": lambda: cyclic(2),
    "[3,1]": lambda: cyclic(3),
    "[4,1]": lambda: cyclic(4),
    "[4,2]": lambda: direct(cyclic(2), cyclic(2)),
    "[5,1]": lambda: cyclic(5),
    "[6,1]": lambda: sym(3),
    "[6,2]": lambda: cyclic(6),
    "[7,1]": lambda: cyclic(7),
    "[8,1]": lambda: cyclic(8),
    "[8,2]": lambda: direct(cyclic(4), cyclic(2)),
    "[8,3]": lambda: from_presentation("r s", ["r**4", "s**2", "(s*r)**2"]),
    "[8,4]": lambda: from_presentation("a x", ["a**4", "x**2*a**-2", "x**-1*a*x*a"]),
    "[8,5]": lambda: direct(direct(cyclic(2), cyclic(2)), cyclic(2)),
    "[9,1]": lambda: cyclic(9),
    "[9,2]": lambda: direct(cyclic(3), cyclic(3)),
    "[10,1]": lambda: from_presentation("r s", ["r**5", "s**2", "(s*r)**2"]),
    "[10,2]": lambda: cyclic(10),
    "[12,1]": lambda: from_presentation("a x", ["a**6", "x**2*a**-3", "x**-1*a*x*a"]),
    "[12,2]": lambda: cyclic(12),
    "[12,3]": lambda: alt(4),
    "[12,4]": lambda: from_presentation("r s", ["r**6", "s**2", "(s*r)**2"]),
    "[12,5]": lambda: direct(cyclic(2), cyclic(6)),
    "[14,1]": lambda: from_presentation("r s", ["r**7", "s**2", "(s*r)**2"]),
    "[15,1]": lambda: cyclic(15),
    "[16,1]": lambda: cyclic(16),
    "[16,2]": lambda: direct(cyclic(4), cyclic(4)),
    "[16,3]": lambda: from_presentation("a b c", ["a**4", "b**2", "c**2", "a*b*a**-1*b**-1", "b*c*b*c", "c*a*c*b**-1*a**-1"]),
    "[16,4]": lambda: from_presentation("a b", ["a**4", "b**4", "b**-1*a*b*a"]),
    "[16,5]": lambda: direct(cyclic(8), cyclic(2)),
    "[16,6]": lambda: from_presentation("a b", ["a**8", "b**2", "b*a*b*a**-5"]),
    "[16,7]": lambda: from_presentation("r s", ["r**8", "s**2", "(s*r)**2"]),
    "[16,8]": lambda: from_presentation("a b", ["a**8", "b**2", "b*a*b*a**-3"]),
    "[16,9]": lambda: from_presentation("x y", ["x**4*y**-2", "x**8", "y**-1*x*y*x"]),
    "[16,10]": lambda: direct(direct(cyclic(4), cyclic(2)), cyclic(2)),
    "[16,11]": lambda: direct(cyclic(2), from_presentation("r s", ["r**4", "s**2", "(s*r)**2"])),
    "[16,12]": lambda: direct(cyclic(2), from_presentation("a x", ["a**4", "x**2*a**-2", "x**-1*a*x*a"])),
    "[16,13]": lambda: from_presentation("x z w", ["x**2", "z**2", "w**4", "x*w*x*w**-1", "z*w*z*w**-1", "(x*z)**2*w**-2"]),
    "[16,14]": lambda: direct(direct(cyclic(2), cyclic(2)), direct(cyclic(2), cyclic(2))),
    "[18,1]": lambda: from_presentation("r s", ["r**9", "s**2", "(s*r)**2"]),
    "[18,2]": lambda: cyclic(18),
    "[18,3]": lambda: direct(cyclic(3), sym(3)),
    "[18,4]": lambda: from_presentation("a b t", ["a**3", "b**3", "a*b*a**-1*b**-1", "t**2", "t*a*t*a", "t*b*t*b"]),
    "[18,5]": lambda: direct(cyclic(3), cyclic(6)),
    "[21,1]": lambda: from_presentation("a b", ["a**7", "b**3", "b**-1*a*b*a**-2"]),
    "[24,1]": lambda: from_presentation("a b", ["a**3", "b**8", "b**-1*a*b*a"]),
    "[24,2]": lambda: cyclic(24),
    # SL(2,3) acting on the 8 nonzero vectors of F_3^2
    "[24,3]": lambda: sl23(),
    "[24,4]": lambda: from_presentation("a x", ["a**12", "x**2*a**-6", "x**-1*a*x*a"]),
    "[24,5]": lambda: direct(cyclic(4), sym(3)),
    "[24,6]": lambda: from_presentation("r s", ["r**12", "s**2", "(s*r)**2"]),
    "[24,7]": lambda: direct(cyclic(2), from_presentation("a x", ["a**6", "x**2*a**-3", "x**-1*a*x*a"])),
    # C3 : D8 with D8 acting through a quotient of order 2 whose kernel is a Klein four group
    "[24,8]": lambda: from_presentation("c u w t", ["c**3", "u**2", "w**2", "t**2", "c*u*c**-1*u", "c*w*c**-1*w", "u*w*u*w", "t*c*t*c", "t*u*t*w"]),
    "[24,9]": lambda: direct(cyclic(12), cyclic(2)),
    "[24,10]": lambda: direct(cyclic(3), from_presentation("r s", ["r**4", "s**2", "(s*r)**2"])),
    "[24,11]": lambda: direct(cyclic(3), from_presentation("a x", ["a**4", "x**2*a**-2", "x**-1*a*x*a"])),
    "[24,12]": lambda: sym(4),
    "[24,13]": lambda: direct(cyclic(2), alt(4)),
    "[24,14]": lambda: direct(direct(cyclic(2), cyclic(2)), sym(3)),
    "[24,15]": lambda: direct(direct(cyclic(6), cyclic(2)), cyclic(2)),
    "[25,2]": lambda: direct(cyclic(5), cyclic(5)),
    "[36,1]": lambda: from_presentation("a x", ["a**18", "x**2*a**-9", "x**-1*a*x*a"]),
    "[36,2]": lambda: cyclic(36),
    "[36,3]": lambda: from_presentation("a b c", ["a**2", "b**2", "(a*b)**2", "c**9", "c**-1*a*c*b**-1", "c**-1*b*c*(a*b)**-1"]),
    "[36,4]": lambda: from_presentation("r s", ["r**18", "s**2", "(s*r)**2"]),
    "[36,5]": lambda: direct(cyclic(18), cyclic(2)),
    "[36,6]": lambda: direct(cyclic(3), from_presentation("a x", ["a**6", "x**2*a**-3", "x**-1*a*x*a"])),
    "[36,7]": lambda: from_presentation("a b c", ["a**3", "b**3", "a*b*a**-1*b**-1", "c**4", "c**-1*a*c*a", "c**-1*b*c*b"]),
    "[36,8]": lambda: direct(cyclic(12), cyclic(3)),
    "[36,9]": lambda: from_presentation("a b c", ["a**3", "b**3", "a*b*a**-1*b**-1", "c**4", "c**-1*a*c*b**-1", "c**-1*b*c*a"]),
    "[36,10]": lambda: direct(sym(3), sym(3)),
    "[36,11]": lambda: direct(cyclic(3), alt(4)),
    "[36,12]": lambda: direct(cyclic(6), sym(3)),
    "[36,13]": lambda: direct(cyclic(2), from_presentation("a b t", ["a**3", "b**3", "a*b*a**-1*b**-1", "t**2", "t*a*t*a", "t*b*t*b"])),
    "[36,14]": lambda: direct(cyclic(6), cyclic(6)),
    "[49,2]": lambda: direct(cyclic(7), cyclic(7)),
    "[60,5]": lambda: alt(5),
    # C3 : S4 with S4 acting on C3 through the sign character
    "[72,43]": lambda: perms(7, [[[0, 1, 2]], [[3, 4, 5]], [[3, 4], [5, 6]], [[1, 2], [3, 4]]]),
}


def sl23():
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}
    mats = [((1, 1), (0, 1)), ((1, 0), (1, 1))]
    gens = []
    for m in mats:
        p = []
        for v in vecs:
            w = ((m[0][0] * v[0] + m[0][1] * v[1]) % 3, (m[1][0] * v[0] + m[1][1] * v[1]) % 3)
            p.append(idx[w])
        gens.append(tuple(p))
    return gens, 8


if __name__ == "__main__":
    want = sys.argv[1:] or list(GROUPS)
    out = {}
    for label in want:
        g, d = GROUPS[label]()
        out[label] = stats(g, d)
    json.dump(out, sys.stdout, indent=1)
