def fn_0(d, e):
    f = d + 1
    g = e * 1.100000023841858
    return f, g

def fn_1(h, i):
    j = h < 10
    return j

def f(a):
    b, c = 0, a
    while fn_1(b, c):
        b, c = fn_0(b, c)
    return b, c
