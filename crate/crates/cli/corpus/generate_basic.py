"""Writes basic_abc.json: seeded f0, f1 pairs with expected verdicts and
the degree of R(f0 f1 (f0 + f1)) computed independently by sympy."""
import json, os, random
from sympy import symbols, Poly, gcd, expand, factor_list

random.seed(20261016)
names = ["x", "y", "w"]

def terms(expr, gens, p=None):
    P = Poly(expr, *gens, modulus=p) if p else Poly(expr, *gens)
    out = []
    for mon, c in P.terms():
        if p:
            c = int(c) % p
            out.append([list(mon), str(c)])
        else:
            out.append([list(mon), str(c)])
    return out

def coprime(a, b, gens, p=None):
    if p:
        g = gcd(Poly(a, *gens, modulus=p), Poly(b, *gens, modulus=p))
    else:
        g = gcd(Poly(a, *gens), Poly(b, *gens))
    return g.total_degree() == 0

def rand_poly(gens, deg, nterms, p=None):
    e = 0
    for _ in range(nterms):
        mon = 1
        d = random.randint(0, deg)
        for _ in range(d):
            mon *= random.choice(gens)
        c = random.randint(1, p - 1) if p else random.choice([-3, -2, -1, 1, 2, 3, 5, -7])
        e += c * mon
    return expand(e)

def nonzero(e, gens, p=None):
    P = Poly(e, *gens, modulus=p) if p else Poly(e, *gens)
    return not P.is_zero

def rad_degree(f0, f1, gens, p=None):
    F = expand(f0 * f1 * (f0 + f1))
    if p is None:
        _, facs = factor_list(F, *gens)
        return sum(Poly(q, *gens).total_degree() for q, _ in facs)
    P = Poly(F, *gens, modulus=p)
    hs = []
    for g in gens:
        d = P.diff(g)
        if not d.is_zero:
            hs.append(P.exquo(P.gcd(d)))
    if not hs:
        return 0
    r = hs[0]
    for h in hs[1:]:
        r = r.lcm(h)
    return r.total_degree()

items = []
def add(id_, kind, p, m, f0, f1, expect, extra=None):
    gens = symbols(names[:m])
    mod = p if kind == "PRIME_FIELD" else None
    params = {"expect": expect, "rad_degree": rad_degree(f0, f1, gens, mod)}
    if extra:
        params.update(extra)
    items.append({
        "id": id_,
        "field": {"kind": kind, "p": p},
        "vars": names[:m],
        "polys": [terms(f0, gens, mod), terms(f1, gens, mod)],
        "params": params,
    })

x, y, w = symbols("x y w")
# char 0: named cases first
add("q-z2-plus-2z", "RATIONAL_P_ADIC", 3, 1, x**2 + 2*x, 1, "HOLDS", {"slack": 0})
add("q-z-plus-1", "RATIONAL_P_ADIC", 2, 1, x, 1, "HOLDS", {"slack": 0})
add("q-cubes", "RATIONAL_P_ADIC", 5, 1, x**3, -(x + 1)**3, "HOLDS")
add("q-binomial", "RATIONAL_P_ADIC", 2, 1, (x + 1)**4, -(x - 1)**4, "HOLDS")
add("q-two-vars", "RATIONAL_P_ADIC", 3, 2, x**2, y**2 - x**2 + 1, "HOLDS")
add("q-power-sum", "RATIONAL_P_ADIC", 5, 2, x**5, y**3, "HOLDS")
count = 0
while len(items) < 50:
    p = random.choice([2, 3, 5])
    m = random.randint(1, 3)
    gens = symbols(names[:m])
    f0 = rand_poly(gens, random.randint(1, 4), random.randint(1, 3))
    f1 = rand_poly(gens, random.randint(0, 4), random.randint(1, 3))
    if random.random() < 0.3:
        f0 = expand(f0 ** 2)
    if not (nonzero(f0, gens) and nonzero(f1, gens) and nonzero(f0 + f1, gens)):
        continue
    if Poly(f0, *gens).total_degree() == 0 and Poly(f1, *gens).total_degree() == 0:
        continue
    if not coprime(f0, f1, gens):
        continue
    count += 1
    add(f"q-rand-{count:02d}", "RATIONAL_P_ADIC", p, m, f0, f1, "HOLDS")

# char p: Fermat-type hypothesis violations
for p in [2, 3, 5]:
    add(f"fp{p}-fermat-xy", "PRIME_FIELD", p, 2, x**p, y**p, "HYPOTHESIS_VIOLATED")
    add(f"fp{p}-fermat-x1", "PRIME_FIELD", p, 1, x**p, 1, "HYPOTHESIS_VIOLATED")
    add(f"fp{p}-fermat-high", "PRIME_FIELD", p, 2, x**(2 * p) + y**p, x**p, "HYPOTHESIS_VIOLATED")
add("fp2-frobenius-sum", "PRIME_FIELD", 2, 1, x + 1, x**2, "HOLDS")
add("fp3-z-plus-1", "PRIME_FIELD", 3, 1, x, 1, "HOLDS", {"slack": 0})
add("fp5-near-power", "PRIME_FIELD", 5, 1, x**5 + x, 1, "HOLDS")
count = 0
while len(items) < 80:
    p = random.choice([2, 3, 5])
    m = random.randint(1, 2)
    gens = symbols(names[:m])
    f0 = rand_poly(gens, random.randint(1, 4), random.randint(1, 3), p)
    f1 = rand_poly(gens, random.randint(0, 3), random.randint(1, 3), p)
    if random.random() < 0.3:
        f0 = expand(f0 ** p)
    if not (nonzero(f0, gens, p) and nonzero(f1, gens, p) and nonzero(f0 + f1, gens, p)):
        continue
    P0, P1 = Poly(f0, *gens, modulus=p), Poly(f1, *gens, modulus=p)
    pth = lambda P: all(e % p == 0 for mon in P.monoms() for e in mon)
    if pth(P0) and pth(P1):
        continue
    if not coprime(f0, f1, gens, p):
        continue
    count += 1
    add(f"fp{p}-rand-{count:02d}", "PRIME_FIELD", p, m, f0, f1, "HOLDS")

char0 = sum(1 for i in items if i["field"]["kind"] == "RATIONAL_P_ADIC")
print(char0, len(items) - char0)
out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "basic_abc.json")
json.dump(items, open(out, "w"), indent=1)
