from jax import lax
from jax.numpy import *

def f(a, b):
    c = a[1:4]
    d = arange(4, dtype=int32)
    e = 2 * d
    f = 0 + e
    g = broadcast_to(expand_dims(f, (1,)), (4, 1))
    h = take(a, g[..., 0], axis=0, mode='clip')
    i = b < 0
    j = b + 8
    k = where(i, j, b)
    l = lax.dynamic_slice(a, (k,), (1,))
    m = squeeze(l, (0,))
    n = b < 0
    o = b + 8
    p = where(n, o, b)
    q = lax.dynamic_slice(a, (p,), (3,))
    r = broadcast_to(1.0, (2,))
    s = b < 0
    t = b + 8
    u = where(s, t, b)
    v = lax.dynamic_update_slice(a, r, (u,))
    w = flip(a, (0,))
    return c, h, m, q, v, w
