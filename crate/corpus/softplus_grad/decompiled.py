from jax.numpy import *

def f(a):
    b = exp(a)
    c = 1.0 + b
    _ = log(c)
    d = 1.0 / c
    e = d * b
    return e
