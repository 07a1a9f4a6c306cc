from jax.numpy import *

def f(a):
    b = sum(a, axis=(0,))
    c = max(a, axis=(0, 1))
    d = min(a, axis=(1,))
    e = prod(a, axis=(1,))
    f = asarray(argmax(a, axis=1), dtype=int32)
    g = asarray(argmin(a, axis=0), dtype=int32)
    h = a > (-3.0)
    i = all(h, axis=(0, 1))
    j = a > 1.0
    k = any(j, axis=(0,))
    return b, c, d, e, f, g, i, k
