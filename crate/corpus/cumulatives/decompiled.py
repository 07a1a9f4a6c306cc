from jax import lax
from jax.numpy import *

def fn_0(a):
    b = cumsum(a, axis=0)
    return b

def fn_1(a):
    c = cumprod(a, axis=0)
    return c

def f(a):
    b = fn_0(a)
    c = fn_1(a)
    d = lax.cummax(a, axis=0, reverse=False)
    e = lax.cummin(a, axis=0, reverse=True)
    f = flip(cumsum(flip(a, 0), axis=0), 0)
    g = lax.cumlogsumexp(a, axis=0, reverse=False)
    return b, c, d, e, f, g
