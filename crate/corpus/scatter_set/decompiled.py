from jax import lax
from jax.numpy import *

def f(a, b):
    c = b < 0
    d = b + 5
    e = where(c, d, b)
    f = broadcast_to(expand_dims(e, (1,)), (2, 1))
    g = broadcast_to(0.0, (2,))
    h = lax.scatter(a, f, g, dimension_numbers=lax.ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()), indices_are_sorted=False, unique_indices=False, mode=lax.GatherScatterMode.FILL_OR_DROP)
    i = b < 0
    j = b + 5
    k = where(i, j, b)
    l = broadcast_to(expand_dims(k, (1,)), (2, 1))
    m = broadcast_to(2.0, (2,))
    n = lax.scatter_mul(a, l, m, dimension_numbers=lax.ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()), indices_are_sorted=False, unique_indices=False, mode=lax.GatherScatterMode.FILL_OR_DROP)
    return h, n
