from jax.numpy import *

def f(a):
    b = arange(5, dtype=int32)
    c = arange(6, dtype=float32)
    d = c * a
    e = broadcast_to(reshape(arange(3, dtype=int32), (1, 3)), (2, 3))
    f = broadcast_to(reshape(arange(3, dtype=int32), (3, 1)), (3, 3))
    g = broadcast_to(reshape(arange(3, dtype=int32), (1, 3)), (3, 3))
    h = f + 0
    i = h == g
    j = asarray(i, dtype=float32)
    return b, d, e, j
