from jax.numpy import *

def fn_0(b, a):
    d = arange(4, dtype=int32)
    perm = lexsort((b, a), axis=0)
    _, _1, c = take_along_axis(a, perm, axis=0), take_along_axis(b, perm, axis=0), take_along_axis(d, perm, axis=0)
    return c

def f(a, b):
    c = fn_0(b, a)
    return c
