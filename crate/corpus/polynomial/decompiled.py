from jax.numpy import *

def fn_0(a, j, k):
    l = asarray(j, dtype=float32)
    m = maximum(l, a)
    n = asarray(k, dtype=float32)
    i = minimum(n, m)
    return i

def f(a):
    b = a ** 4
    c = 3.0 * b
    d = a ** 2
    e = 2.0 * d
    f = c - e
    g = a ** (-1)
    h = f + g
    i = fn_0(a, -1.0, 1.0)
    o = h + i
    return o
