from jax import lax
from jax.numpy import *

def fn_0(a):
    o = round(a)
    return o

def fn_1(bb):
    bc = arccosh(bb)
    return bc

def f(a):
    b = abs(a)
    c = b + 0.5
    d = sin(a)
    e = cos(a)
    f = tan(a)
    g = tanh(a)
    h = exp(a)
    i = log(c)
    j = sqrt(c)
    k = lax.rsqrt(c)
    l = sign(a)
    m = floor(a)
    n = ceil(a)
    o = fn_0(a)
    p = sign(a) * floor(abs(a) + 0.5)
    q = lax.logistic(a)
    r = expm1(a)
    s = log1p(c)
    t = a / 4.0
    u = arcsin(t)
    v = a / 4.0
    w = arccos(v)
    x = arctan(a)
    y = sinh(a)
    z = cosh(a)
    ba = arcsinh(a)
    bb = c + 1.0
    bc = fn_1(bb)
    bd = a / 4.0
    be = arctanh(bd)
    bf = cbrt(a)
    bg = exp2(a)
    bh = square(a)
    bi = -a
    bj = isfinite(a)
    return d, e, f, g, h, i, j, k, l, m, n, o, p, q, r, s, u, w, x, y, z, ba, bc, be, bf, bg, bh, bi, bj
