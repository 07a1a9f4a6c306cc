from jax import lax
from jax.numpy import *

def f(a):
    b = max(a, axis=(1,))
    c = maximum(-inf, b)
    d = broadcast_to(expand_dims(c, (1,)), (2, 1))
    e = lax.stop_gradient(d)
    f = a - e
    g = exp(f)
    h = sum(g, axis=(1,))
    i = broadcast_to(expand_dims(h, (1,)), (2, 1))
    j = g / i
    k = max(a, axis=(1,))
    l = maximum(-inf, k)
    m = isfinite(l)
    n = broadcast_to(0.0, (2,))
    o = where(m, l, n)
    p = lax.stop_gradient(o)
    q = broadcast_to(expand_dims(p, (1,)), (2, 1))
    r = a - q
    s = exp(r)
    t = sum(s, axis=(1,))
    _ = sign(t)
    u = abs(t)
    v = log(u)
    w = v + p
    return j, w
