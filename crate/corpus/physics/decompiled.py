def fn_0(e, f, g):
    h = e + 1
    i = -f
    j = 0.10000000149011612 * g
    k = i - j
    l = 0.009999999776482582 * k
    m = g + l
    n = 0.009999999776482582 * m
    o = f + n
    return h, o, m

def f(a, b):
    _, c, d = 0, a, b
    for i in range(20):
        _, c, d = fn_0(_, c, d)
    return c, d
