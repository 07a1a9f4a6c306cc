from jax.numpy import *

def fn_0(a):
    c = arange(7, dtype=int32)
    perm = argsort(a, axis=0)
    _, b = take_along_axis(a, perm, axis=0), take_along_axis(c, perm, axis=0)
    return b

def fn_1(a):
    i = sort(a, axis=0)
    return i

def f(a):
    b = fn_0(a)
    d = b < 0
    e = b + 7
    f = where(d, e, b)
    g = broadcast_to(expand_dims(f, (1,)), (7, 1))
    h = take(a, g[..., 0], axis=0, mode='clip')
    i = fn_1(a)
    return b, h, i
