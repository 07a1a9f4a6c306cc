from jax import vmap
from jax.numpy import *

def fn_0(c):
    d = sort(c, axis=0)
    return d

def fn_1(c):
    d = fn_0(c)
    e = d[0:3]
    return e

def f(a):
    # parallel map over 4 devices, evaluated on one device
    b = vmap(fn_1, in_axes=(0,), out_axes=0, axis_name='i')(a)
    return b
