from jax.numpy import *

def fn_0(c):
    d = sin(c)
    e = sin(d)
    f = e * c
    return f

def f(a):
    b = fn_0(a)
    return b
