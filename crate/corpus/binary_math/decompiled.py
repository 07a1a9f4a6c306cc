from jax.numpy import *

def fn_0(a, b):
    l = fmod(a, b)
    return l

def f(a, b):
    c = a + b
    d = a - b
    e = a * b
    f = a / b
    g = abs(a)
    h = g ** b
    i = maximum(a, b)
    j = minimum(a, b)
    k = arctan2(a, b)
    l = fn_0(a, b)
    m = a ** 3
    n = 1.0 / a
    o = nextafter(a, b)
    return c, d, e, f, h, i, j, k, l, m, n, o
