from jax.numpy import *

def fn_0(d, e, f):
    g = e + 1
    h = f * d
    i = asarray(e, dtype=float32)
    j = h + i
    return g, j

def f(a, b):
    _, c = 0, a
    for i in range(5):
        _, c = fn_0(b, _, c)
    return c
