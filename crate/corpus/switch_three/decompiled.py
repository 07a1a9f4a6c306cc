from jax.numpy import *

def fn_0(e):
    f = sin(e)
    return f

def fn_1(g):
    h = cos(g)
    return h

def fn_2(i):
    j = i * 2.0
    return j

def f(a, b):
    c = clip(a, 0, 2)
    d = (fn_0, fn_1, fn_2)[c](b)
    return d
