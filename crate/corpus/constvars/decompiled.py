from jax.numpy import *

def f(c, a, b):
    d = a
    e = matmul(d, c)
    f = e + b
    return f
