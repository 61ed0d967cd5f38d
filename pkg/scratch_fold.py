import time
from itertools import accumulate, chain
from gmpy2 import mpz
import random

random.seed(2)
N_STATES = 27405
BITS = 224
# synthetic dense table of ~45-coeff values
table = [mpz(random.getrandbits(45 * BITS)) for _ in range(N_STATES)]

# synthetic fibers: partition ranks into runs of ~7
ranks = list(range(N_STATES))
fibers = []
i = 0
while i < N_STATES:
    j = min(N_STATES, i + random.randint(3, 11))
    fibers.append(tuple(ranks[i:j]))
    i = j
prog = tuple(fibers)


def fold_current(table, prog, bits):
    out = [0] * len(table)
    for fiber in prog:
        vals = [table[rk] for rk in fiber]
        if any(vals):
            for rk, v, s in zip(fiber, vals, accumulate(vals, initial=0)):
                out[rk] = v + (s << bits) if s else v
    return out


FLAT = tuple(chain.from_iterable(prog))
SEGS = []
pos = 0
for fiber in prog:
    SEGS.append((pos, pos + len(fiber)))
    pos += len(fiber)


def fold_chunked(table, flat, segs, bits):
    gv = [table[rk] for rk in flat]
    chunks = []
    ext = chunks.extend
    for s, e in segs:
        seg = gv[s:e]
        ext(
            v + (p << bits) if p else v
            for v, p in zip(seg, accumulate(seg, initial=0))
        )
    out = [0] * len(table)
    for rk, v in zip(flat, chunks):
        out[rk] = v
    return out


t0 = time.perf_counter()
o1 = fold_current(table, prog, BITS)
t1 = time.perf_counter() - t0
t0 = time.perf_counter()
o2 = fold_chunked(table, FLAT, SEGS, BITS)
t2 = time.perf_counter() - t0
print(f"current: {t1*1000:.0f} ms   chunked: {t2*1000:.0f} ms   equal: {o1 == o2}")

# variant: accumulate over shifted values, then single add
def fold_shift_first(table, prog, bits):
    out = [0] * len(table)
    for fiber in prog:
        vals = [table[rk] for rk in fiber]
        if any(vals):
            sh = accumulate((v << bits for v in vals), initial=0)
            for rk, v, s in zip(fiber, vals, sh):
                out[rk] = v + s if s else v
    return out

t0 = time.perf_counter()
o3 = fold_shift_first(table, prog, BITS)
t3 = time.perf_counter() - t0
print(f"shift-first: {t3*1000:.0f} ms   equal: {o1 == o3}")
EOF
