from jax.numpy import *

def fn_0(e, f):
    g = sin(e)
    h = cos(e)
    i = cos(g)
    j = broadcast_to(f, (3,))
    k = j * i
    l = k * h
    return l

def f(a):
    b = sin(a)
    c = sin(b)
    _ = sum(c, axis=(0,))
    d = fn_0(a, 1.0)
    return d
