from jax import lax
from jax.numpy import *

def f(a, b):
    c = lax.div(a, b)
    d = fmod(a, b)
    e = left_shift(a, 2)
    f = right_shift(a, 1)
    g = lax.shift_right_logical(a, 1)
    h = bitwise_and(a, b)
    i = bitwise_or(a, b)
    j = bitwise_xor(a, b)
    k = bitwise_not(a)
    l = a * b
    m = asarray(a, dtype=float32)
    n = 1.5 * m
    return c, d, e, f, g, h, i, j, k, l, n
