from jax.numpy import *

def f(a, b, c, d, e):
    f = matmul(e, a)
    g = broadcast_to(expand_dims(b, (0,)), (1, 16))
    h = f + g
    i = tanh(h)
    j = matmul(i, c)
    k = broadcast_to(expand_dims(d, (0,)), (1, 2))
    l = j + k
    return l
