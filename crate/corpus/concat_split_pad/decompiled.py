from jax import lax
from jax.numpy import *

def fn_0(a, h):
    i = asarray(h, dtype=float32)
    g = pad(a, ((1, 2),), constant_values=i)
    return g

def fn_1(a, k):
    l = asarray(k, dtype=float32)
    j = pad(a, ((2, 0),), constant_values=l)
    return j

def f(a):
    b, c, d = split(a, (2, 5), axis=0)
    e = a * 2.0
    f = concatenate((a, e), axis=0)
    g = fn_0(a, 0)
    j = fn_1(a, 7.0)
    m = lax.pad(a, 0.0, ((-1, 1, 1),))
    return f, b, c, d, g, j, m
