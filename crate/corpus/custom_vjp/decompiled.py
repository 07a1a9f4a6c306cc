from jax.numpy import *

def fn_0(c):
    d = sin(c)
    return d

def f(a):
    b = fn_0(a)
    return b
