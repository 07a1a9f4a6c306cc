from jax import lax
from jax.numpy import *

def f(a, b):
    c = b < 0
    d = b + 5
    e = where(c, d, b)
    f = broadcast_to(expand_dims(e, (1,)), (3, 1))
    g = take(a, f[..., 0], axis=0, mode='clip')
    h = g ** 2
    i = g ** 1
    j = 2.0 * i
    _ = sum(h, axis=(0,))
    k = broadcast_to(1.0, (3,))
    l = k * j
    m = sum(l, axis=())
    n = broadcast_to(0.0, (5,))
    o = lax.scatter_add(n, f, m, dimension_numbers=lax.ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()), indices_are_sorted=False, unique_indices=False, mode=lax.GatherScatterMode.PROMISE_IN_BOUNDS)
    return o
