from jax.numpy import *

def fn_0(c, a, b):
    o = where(c, a, b)
    return o

def f(a, b):
    c = a > 0.0
    d = b > 0.0
    e = a == b
    f = a != b
    g = a < b
    h = a <= b
    i = a > b
    j = a >= b
    k = bitwise_and(c, d)
    l = bitwise_or(c, d)
    m = bitwise_not(c)
    n = bitwise_xor(c, d)
    o = fn_0(c, a, b)
    p = bitwise_not(d)
    return e, f, g, h, i, j, k, l, m, n, o, p
