"""Brute-force reference for the frozen constants in the C++ tests.

Soft sets are tuples of frozensets (one per parameter); nothing here shares
code or encoding with the C++ library.
"""
from itertools import permutations, product


def all_sets(X, m):
    subsets = [frozenset(c for c, keep in zip(X, bits) if keep)
               for bits in product([0, 1], repeat=len(X))]
    return [tuple(s) for s in product(subsets, repeat=m)]


def sub(a, b):
    return all(x <= y for x, y in zip(a, b))


def meet(a, b):
    return tuple(x & y for x, y in zip(a, b))


def join(a, b):
    return tuple(x | y for x, y in zip(a, b))


class Space:
    def __init__(self, X, m, opens):
        self.X, self.m = frozenset(X), m
        self.opens = set(opens)
        self.opens.add(tuple(frozenset() for _ in range(m)))
        self.opens.add(tuple(self.X for _ in range(m)))
        self.closeds = {tuple(self.X - s for s in o) for o in self.opens}

    def int(self, F):
        r = tuple(frozenset() for _ in range(self.m))
        for o in self.opens:
            if sub(o, F):
                r = join(r, o)
        return r

    def cl(self, F):
        r = tuple(self.X for _ in range(self.m))
        for c in self.closeds:
            if sub(F, c):
                r = meet(r, c)
        return r

    def beta_open(self, F):
        return sub(F, self.cl(self.int(self.cl(F))))


def fs(*xs):
    return frozenset(xs)


def preimage(p, G):
    return tuple(frozenset(x for x in p if p[x] in g) for g in G)


def continuous(p, sx, sy, target):
    return all(target(sx, preimage(p, G)) for G in sy)


def main():
    # two-point space of ex36.space
    X = ["x1", "x2"]
    ex36 = Space(X, 2, [(fs("x1"), fs("x2")), (fs("x1", "x2"), fs("x2")),
                        (fs("x1"), fs("x1", "x2"))])
    sets36 = all_sets(X, 2)
    beta36 = [F for F in sets36 if ex36.beta_open(F)]
    print("ex36 beta-open count", len(beta36))

    def tags(space, sets, p):
        inv = {v: k for k, v in p.items()}
        out = []
        cont = lambda q: all(preimage(q, G) in space.opens for G in space.opens)
        if cont(p) and cont(inv):
            out.append("soft-homeo")
        bcont = lambda q: all(space.beta_open(preimage(q, G)) for G in space.opens)
        if bcont(p) and bcont(inv):
            out.append("beta-homeo")
        betas = [F for F in sets if space.beta_open(F)]
        birr = lambda q: all(space.beta_open(preimage(q, G)) for G in betas)
        if birr(p) and birr(inv):
            out.append("beta-irresolute-homeo")
        return out

    print("ex36 swap tags", tags(ex36, sets36, {"x1": "x2", "x2": "x1"}))

    X3 = ["x1", "x2", "x3"]
    ex33 = Space(X3, 2, [
        (fs("x1", "x2"), fs("x1", "x2")), (fs("x2"), fs("x1", "x3")),
        (fs("x2", "x3"), fs("x1")), (fs("x2"), fs("x1")),
        (fs("x1", "x2"), fs(*X3)), (fs(*X3), fs("x1", "x2")),
        (fs("x2", "x3"), fs("x1", "x3"))])
    sets33 = all_sets(X3, 2)
    print("ex33 beta-open count", sum(ex33.beta_open(F) for F in sets33))
    for kind in ["soft-homeo", "beta-homeo", "beta-irresolute-homeo"]:
        n = 0
        for perm in permutations(X3):
            p = dict(zip(X3, perm))
            if kind in tags(ex33, sets33, p):
                n += 1
        print("ex33", kind, "order", n)
    # ex44 X space for regression
    ex44 = Space(X3, 2, [(fs("x1"), fs("x1")), (fs("x2"), fs("x2")),
                         (fs("x1", "x2"), fs("x1", "x2"))])
    print("ex44X beta-open count", sum(ex44.beta_open(F) for F in sets33))
    for kind in ["soft-homeo", "beta-homeo", "beta-irresolute-homeo"]:
        n = sum(kind in tags(ex44, sets33, dict(zip(X3, perm))) for perm in permutations(X3))
        print("ex44X", kind, "order", n)


    for seed in (0, 1, 42):
        print("random space seed", seed, random_space_masks(3, 2, seed, 0.5))


class MT19937_64:
    """Reference mt19937_64, written from the published recurrence."""

    def __init__(self, seed):
        self.mt = [0] * 312
        self.mt[0] = seed & MASK64
        for i in range(1, 312):
            self.mt[i] = (6364136223846793005 * (self.mt[i - 1] ^ (self.mt[i - 1] >> 62)) + i) & MASK64
        self.index = 312

    def __call__(self):
        if self.index >= 312:
            for i in range(312):
                x = (self.mt[i] & 0xFFFFFFFF80000000) | (self.mt[(i + 1) % 312] & 0x7FFFFFFF)
                xa = x >> 1
                if x & 1:
                    xa ^= 0xB5026F5AA96619E9
                self.mt[i] = self.mt[(i + 156) % 312] ^ xa
            self.index = 0
        y = self.mt[self.index]
        self.index += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & MASK64


MASK64 = (1 << 64) - 1


def random_space_masks(n, m, seed, density):
    rng = MT19937_64(seed)
    cells = n * m
    gens = 1 + rng() % 4
    fam = {0, (1 << cells) - 1}
    for _ in range(gens):
        mask = 0
        for c in range(cells):
            if (rng() >> 11) * 2.0 ** -53 < density:
                mask |= 1 << c
        fam.add(mask)
    while True:
        new = {a | b for a in fam for b in fam} | {a & b for a in fam for b in fam}
        if new <= fam:
            return sorted(fam)
        fam |= new


if __name__ == "__main__":
    main()
