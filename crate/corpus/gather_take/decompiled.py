from jax.numpy import *

def fn_0(i, j, b):
    k = where(i, j, b)
    return k

def fn_1(a, b):
    i = b < 0
    j = b + 6
    k = fn_0(i, j, b)
    l = broadcast_to(expand_dims(k, (1,)), (3, 1))
    h = take(a, l[..., 0], axis=0, mode='fill', fill_value=nan)
    return h

def f(a, b):
    c = b < 0
    d = b + 6
    e = where(c, d, b)
    f = broadcast_to(expand_dims(e, (1,)), (3, 1))
    g = take(a, f[..., 0], axis=0, mode='clip')
    h = fn_1(a, b)
    m = b < 0
    n = b + 6
    o = where(m, n, b)
    p = broadcast_to(expand_dims(o, (1,)), (3, 1))
    q = take(a, p[..., 0], axis=0, mode='clip')
    r = broadcast_to(expand_dims(q, (1,)), (3, 1))
    s = r * 2.0
    return g, h, s
