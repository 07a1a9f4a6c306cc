from jax import lax
from jax.numpy import *

def f(a):
    b = asarray(a, dtype=int32)
    c = a > 0.0
    d = asarray(c, dtype=float32)
    e = asarray(a, dtype=bool_)
    f = asarray(a, dtype=float16)
    g = asarray(f, dtype=float32)
    h = asarray(a, dtype=int8)
    i = asarray(h, dtype=int32)
    j = 3 + i
    k = lax.stop_gradient(a)
    return b, d, e, g, j, k
