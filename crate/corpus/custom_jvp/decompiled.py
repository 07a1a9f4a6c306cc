from jax.numpy import *

def fn_0(c):
    d = tanh(c)
    e = d * 2.0
    return e

def f(a):
    b = fn_0(a)
    return b
