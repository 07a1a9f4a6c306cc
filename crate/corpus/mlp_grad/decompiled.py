from jax.numpy import *

def f(a, b, c, d, e, f):
    g = matmul(e, a)
    h = broadcast_to(expand_dims(b, (0,)), (1, 16))
    i = g + h
    j = tanh(i)
    k = 1.0 - j
    l = matmul(j, c)
    m = broadcast_to(expand_dims(d, (0,)), (1, 2))
    n = l + m
    o = n - f
    p = o ** 2
    q = o ** 1
    r = 2.0 * q
    s = sum(p, axis=(0, 1))
    _ = s / 16.0
    t = 1.0 / 16.0
    u = broadcast_to(t, (8, 2))
    v = u * r
    w = sum(v, axis=(0,))
    x = reshape(w, (1, 2))
    y = sum(x, axis=(0,))
    z = tensordot(v, j, axes=((0,), (0,)))
    ba = transpose(z, (1, 0))
    bb = tensordot(v, c, axes=((1,), (1,)))
    bc = bb * k
    bd = bc * j
    be = bc + bd
    bf = sum(be, axis=(0,))
    bg = reshape(bf, (1, 16))
    bh = sum(bg, axis=(0,))
    bi = tensordot(be, e, axes=((0,), (0,)))
    bj = transpose(bi, (1, 0))
    return bj, bh, ba, y
