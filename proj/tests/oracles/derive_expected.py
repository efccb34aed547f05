#!/usr/bin/env python3
"""Independent brute-force oracle for the frozen expected values in the C++ tests.

Formulas are nested tuples: ('v', name) | ('not', f) | ('and', a, b) | ('or', a, b) | ('imp', a, b).
Everything here is computed by enumerating valuations and subsets directly.
"""
from itertools import product, combinations


def V(n): return ('v', n)
def N(f): return ('not', f)
def A(a, b): return ('and', a, b)
def O(a, b): return ('or', a, b)
def I(a, b): return ('imp', a, b)


def variables(f):
    if f[0] == 'v':
        return {f[1]}
    return set().union(*(variables(c) for c in f[1:]))


def ev(f, v):
    k = f[0]
    if k == 'v': return v[f[1]]
    if k == 'not': return not ev(f[1], v)
    if k == 'and': return ev(f[1], v) and ev(f[2], v)
    if k == 'or': return ev(f[1], v) or ev(f[2], v)
    return (not ev(f[1], v)) or ev(f[2], v)


def sat(fs):
    vs = sorted(set().union(set(), *(variables(f) for f in fs)))
    for bits in product([False, True], repeat=len(vs)):
        v = dict(zip(vs, bits))
        if all(ev(f, v) for f in fs):
            return True
    return False


def entails(fs, g):
    return not sat(list(fs) + [N(g)])


def render(f, parent=0, right=False):
    prec = {'imp': 1, 'or': 2, 'and': 3, 'not': 4, 'v': 5}
    k = f[0]
    if k == 'v': return f[1]
    if k == 'not': s = '~' + render(f[1], 4)
    else:
        op = {'and': ' & ', 'or': ' | ', 'imp': ' -> '}[k]
        p = prec[k]
        if k == 'imp':
            l = render(f[1], p + 1); r = render(f[2], p)
        else:
            l = render(f[1], p); r = render(f[2], p + 1)
        s = l + op + r
    return '(' + s + ')' if prec[k] < parent else s


def size(f): return 1 if f[0] == 'v' else 1 + sum(size(c) for c in f[1:])


def subformulas(f):
    out = [f]
    for c in f[1:] if f[0] != 'v' else []:
        out += subformulas(c)
    return out


def universe(seed, flags):
    items = []
    def add(f):
        if f not in items: items.append(f)
    for f in seed: add(f)
    if 'subformulas' in flags:
        for f in list(items):
            for g in subformulas(f): add(g)
    if 'with_falsum' in flags:
        p0 = V(min(set().union(*(variables(f) for f in seed))))
        add(A(p0, N(p0)))
    if 'negations' in flags:
        for f in list(items): add(N(f))
    if 'conjunctions' in flags:
        base = list(items)
        for i, j in combinations(range(len(base)), 2):
            add(A(base[i], base[j]))
    return sorted(items, key=lambda f: (size(f), render(f)))


def mcs(fs):
    n = len(fs)
    sats = [m for m in range(1 << n) if sat([fs[i] for i in range(n) if m >> i & 1])]
    maxi = [m for m in sats if not any(o != m and (o & m) == m for o in sats)]
    key = lambda m: (-bin(m).count('1'), [-(m >> i & 1) for i in range(n)])
    return [[render(fs[i]) for i in range(n) if m >> i & 1] for m in sorted(maxi, key=key)]


p, q, r = V('p'), V('q'), V('r')

print('# build_universe')
for seed, flags in [([p, N(p)], {'subformulas', 'negations', 'with_falsum'}),
                    ([p], set()),
                    ([p, q], {'conjunctions'}),
                    ([p, N(p)], {'subformulas', 'negations', 'conjunctions', 'with_falsum'})]:
    u = universe(seed, flags)
    print(sorted(flags), [render(f) for f in u], len(u))

print('# maximal consistent subsets')
for fs in [[p, N(p)], [p, q], [p, N(p), q]]:
    print([render(f) for f in fs], '->', mcs(fs))

print('# misc classical')
print('sat {p|q, ~p}:', sat([O(p, q), N(p)]))
print('contradiction ~(p->p):', not sat([N(I(p, p))]))

print('# classical restriction of U = {p, ~p, p & ~p}')
U = [p, N(p), A(p, N(p))]
for m in range(8):
    sub = [U[i] for i in range(3) if m >> i & 1]
    cn = [render(g) for g in U if entails(sub, g)]
    print([render(f) for f in sub], '->', cn)

print('# paraconsistentization of the 2-atom structure, literal enumeration')
X = 0b11
cn = {0: 0, 1: 1, 2: 2, 3: 3}
def cnp(a):
    out = 0
    for s in range(4):
        if s & a == s and cn[s] != X: out |= cn[s]
    return out
print({a: cnp(a) for a in range(4)})

print('# monotonicity counterexample, Cn(0)=0, Cn(a)=ab, Cn(b)=b, Cn(ab)=a')
cn2 = {0: 0, 1: 3, 2: 2, 3: 1}
for a in range(4):
    for b in range(4):
        if a & b == a and cn2[a] & ~cn2[b]:
            print('first violation (A,B) =', a, b); break
    else: continue
    break

print('# classical restriction of the {p, ~p} universe: hypotheses by brute force')
U = universe([p, N(p)], {'subformulas', 'negations', 'conjunctions', 'with_falsum'})
n = len(U)
table = []
for m in range(1 << n):
    sub = [U[i] for i in range(n) if m >> i & 1]
    vs = sat(sub)
    table.append(sum(1 << i for i in range(n) if (not vs) or entails(sub, U[i])))
full = (1 << n) - 1
print('n =', n, 'Cn(empty) =', [render(U[i]) for i in range(n) if table[0] >> i & 1])
