from jax.numpy import *

def f(a):
    b = reshape(a, (4, 3))
    c = transpose(a, (1, 0))
    d = broadcast_to(expand_dims(a, (1,)), (3, 1, 4))
    e = a[0:1, 0:4]
    f = squeeze(e, (0,))
    g = a[0:1, 0:4]
    h = squeeze(g, (0,))
    i = broadcast_to(expand_dims(h, (0,)), (5, 4))
    j = reshape(a, (3, 2, 2))
    k = transpose(j, (2, 0, 1))
    l = transpose(a, (1, 0))
    m = reshape(l, (12,))
    return b, c, d, f, i, k, m
