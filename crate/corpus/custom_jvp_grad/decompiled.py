from jax.numpy import *

def fn_0(c):
    d = tanh(c)
    e = d * 2.0
    return e

def f(a):
    b = fn_0(a)
    f = tanh(a)
    g = f ** 2
    h = 1.0 - g
    _ = sum(b, axis=(0,))
    i = broadcast_to(1.0, (4,))
    j = i * h
    k = j * 2.0
    return k
