from jax.numpy import *

def f(a, b):
    c = matmul(a, a)
    d = matmul(a, b)
    e = transpose(b, (1, 0))
    f = matmul(e, a)
    return c, d, f
