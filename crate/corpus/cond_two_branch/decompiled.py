from jax.numpy import *

def fn_0(f):
    g = cos(f)
    return g

def fn_1(h):
    i = sin(h)
    return i

def f(a, b):
    c = a > 0.0
    d = asarray(c, dtype=int32)
    e = (fn_0, fn_1)[d](b)
    return e
