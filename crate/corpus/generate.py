"""Regenerate the Jaxpr fixtures in this directory.

Each case is written to ``<case>/program.jaxpr``. The dumps are pinned to
the jax version they were produced with; rerun this script only when the
fixtures should follow a new jax release.

    python corpus/generate.py            # all cases
    python corpus/generate.py scan_cumsum mlp_grad
"""

import os
import sys

os.environ.setdefault("XLA_FLAGS", "--xla_force_host_platform_device_count=4")

import jax  # noqa: E402
import jax.numpy as jnp  # noqa: E402
import numpy as np  # noqa: E402
from jax import lax  # noqa: E402

HERE = os.path.dirname(os.path.abspath(__file__))

# Hand-written: the softplus gradient in the flush-left layout with untyped
# literals that older jax releases printed.
SOFTPLUS_GRAD_LISTING = """\
{ lambda ; a:f32[]. let
b:f32[] = exp a
c:f32[] = add 1.0 b
_:f32[] = log c
d:f32[] = div 1.0 c
e:f32[] = mul d b
in (e,) }
"""

rng = np.random.RandomState(0)


def f32(*shape):
    return rng.standard_normal(shape).astype(np.float32)


def mlp_params():
    return (f32(3, 16) * 0.5, f32(16) * 0.1, f32(16, 2) * 0.5, f32(2) * 0.1)


def mlp(params, x):
    w1, b1, w2, b2 = params
    h = jnp.tanh(x @ w1 + b1)
    return h @ w2 + b2


def mlp_loss(params, x, y):
    return jnp.mean((mlp(params, x) - y) ** 2)


def train_step(params, x, y):
    grads = jax.grad(mlp_loss)(params, x, y)
    return tuple(p - 0.1 * g for p, g in zip(params, grads))


def reductions(x):
    return (
        jnp.sum(x, axis=0),
        jnp.max(x),
        jnp.min(x, axis=1),
        jnp.prod(x, axis=1),
        jnp.argmax(x, axis=1),
        jnp.argmin(x, axis=0),
        jnp.all(x > -3.0),
        jnp.any(x > 1.0, axis=0),
    )


def cumulatives(v):
    return (
        jnp.cumsum(v),
        jnp.cumprod(v),
        lax.cummax(v),
        lax.cummin(v, reverse=True),
        lax.cumsum(v, reverse=True),
        lax.cumlogsumexp(v),
    )


def unary_math(x):
    p = jnp.abs(x) + 0.5
    return (
        jnp.sin(x), jnp.cos(x), jnp.tan(x), jnp.tanh(x), jnp.exp(x), jnp.log(p), jnp.sqrt(p),
        lax.rsqrt(p), jnp.sign(x), jnp.floor(x), jnp.ceil(x), jnp.round(x), lax.round(x),
        jax.nn.sigmoid(x), jnp.expm1(x), jnp.log1p(p), jnp.arcsin(x / 4), jnp.arccos(x / 4),
        jnp.arctan(x), jnp.sinh(x), jnp.cosh(x), jnp.arcsinh(x), jnp.arccosh(p + 1),
        jnp.arctanh(x / 4), jnp.cbrt(x), jnp.exp2(x), jnp.square(x), -x, jnp.isfinite(x),
    )


def special_math(x):
    p = jnp.abs(x) + 0.5
    return (
        jax.scipy.special.erf(x),
        jax.scipy.special.erfc(x),
        jax.scipy.special.erfinv(x / 4),
        jax.scipy.special.gammaln(p),
        jax.scipy.special.digamma(p),
    )


def binary_math(x, y):
    return (
        x + y, x - y, x * y, x / y, jnp.abs(x) ** y, jnp.maximum(x, y), jnp.minimum(x, y),
        jnp.arctan2(x, y), jnp.fmod(x, y), x ** 3, 1.0 / x, lax.nextafter(x, y),
    )


def logic(x, y):
    a, b = x > 0, y > 0
    return (
        x == y, x != y, x < y, x <= y, x > y, x >= y, a & b, a | b, ~a, a ^ b,
        jnp.where(a, x, y), jnp.logical_not(b),
    )


def int_ops(i, j):
    return (
        lax.div(i, j), lax.rem(i, j), i << 2, i >> 1, lax.shift_right_logical(i, 1),
        i & j, i | j, i ^ j, ~i, i * j, jnp.float32(1.5) * i.astype(jnp.float32),
    )


def shapes(x):
    return (
        x.reshape(4, 3),
        x.T,
        jnp.expand_dims(x, 1),
        jnp.squeeze(x[:1]),
        jnp.broadcast_to(x[0], (5, 4)),
        jnp.transpose(x.reshape(3, 2, 2), (2, 0, 1)),
        jnp.ravel(x.T),
    )


def slicing(v, i):
    return (
        v[1:4],
        v[::2],
        v[i],
        lax.dynamic_slice(v, (i,), (3,)),
        lax.dynamic_update_slice(v, jnp.ones(2, jnp.float32), (i,)),
        v[::-1],
    )


def concat_split_pad(v):
    a, b, c = jnp.split(v, [2, 5])
    return (
        jnp.concatenate([v, v * 2]),
        a, b, c,
        jnp.pad(v, (1, 2)),
        jnp.pad(v, (2, 0), constant_values=7.0),
        lax.pad(v, 0.0, ((-1, 1, 1),)),
    )


def iota_arange(x):
    return (
        jnp.arange(5),
        jnp.arange(6, dtype=jnp.float32) * x,
        lax.broadcasted_iota(jnp.int32, (2, 3), 1),
        jnp.eye(3),
    )


def converts(x):
    return (
        x.astype(jnp.int32),
        (x > 0).astype(jnp.float32),
        x.astype(jnp.bool_),
        x.astype(jnp.float16).astype(jnp.float32),
        jnp.int32(3) + x.astype(jnp.int8).astype(jnp.int32),
        lax.stop_gradient(x),
    )


def scan_in_cond(p, v):
    def summed(u):
        return lax.scan(lambda c, x: (c + x, c * x), 0.0, u)[1]

    return lax.cond(p > 0, summed, lambda u: -u, v)


@jax.custom_jvp
def soft_clip(x):
    return jnp.tanh(x) * 2.0


@soft_clip.defjvp
def soft_clip_jvp(primals, tangents):
    (x,), (t,) = primals, tangents
    return soft_clip(x), t * 2.0 * (1 - jnp.tanh(x) ** 2)


@jax.custom_vjp
def clipped_sin(x):
    return jnp.sin(x)


def clipped_sin_fwd(x):
    return clipped_sin(x), jnp.cos(x)


def clipped_sin_bwd(cos_x, g):
    return (jnp.clip(g * cos_x, -0.5, 0.5),)


clipped_sin.defvjp(clipped_sin_fwd, clipped_sin_bwd)

MIXING = np.array([[0.5, 0.25, 0.0], [0.25, 0.5, 0.25], [0.0, 0.25, 0.5]], dtype=np.float32)
OFFSET = np.array([1.0, -1.0, 0.5], dtype=np.float32)


def constvars(v):
    return jnp.asarray(MIXING) @ v + OFFSET


def physics(pos, vel):
    """Leapfrog integration of unit masses on springs."""

    def step(_, state):
        x, v = state
        a = -x - 0.1 * v
        v = v + 0.01 * a
        return x + 0.01 * v, v

    return lax.fori_loop(0, 20, step, (pos, vel))


def while_loop(x):
    return lax.while_loop(lambda s: s[0] < 10, lambda s: (s[0] + 1, s[1] * 1.1), (0, x))


def fori_loop_consts(x, k):
    return lax.fori_loop(0, 5, lambda i, acc: acc * k + i, x)


def softmax(x):
    return jax.nn.softmax(x, axis=-1), jax.nn.logsumexp(x, axis=-1)


def vmapped(x, w):
    return jax.vmap(lambda r: jnp.dot(w, r) + jnp.sin(r).sum())(x)


def polynomial(x):
    return 3 * x ** 4 - 2 * x ** 2 + x ** -1 + jnp.clip(x, -1.0, 1.0)


def argsort(v):
    idx = jnp.argsort(v)
    return idx, v[idx], jnp.sort(v)


def lexsort(a, b):
    return jnp.lexsort((b, a))


def pmap_sort_take3(x):
    return jax.pmap(lambda r: jnp.sort(r)[:3], axis_name="i")(x)


def pmap_psum(x):
    return jax.pmap(lambda r: r / lax.psum(r, "i") + lax.axis_index("i"), axis_name="i")(x)


def gather_take(v, idx):
    return v[idx], jnp.take(v, idx), v[idx, None] * 2.0


def scatter_add_grad(v, idx):
    return jax.grad(lambda u: jnp.sum(u[idx] ** 2))(v)


def scatter_set(v, idx):
    return v.at[idx].set(0.0), v.at[idx].mul(2.0)


def batched_dot(a, b):
    return jnp.einsum("bij,bjk->bik", a, b), jnp.tensordot(a, b.transpose(0, 2, 1), axes=([0, 2], [0, 2]))


def vector_dot(u, m):
    return jnp.dot(u, u), u @ m, m.T @ u


CASES = {
    "softplus_grad": (jax.grad(lambda x: jnp.log(1 + jnp.exp(x))), lambda: (np.float32(1.0),)),
    "identity": (lambda x: x, lambda: (np.float32(3.0),)),
    "mlp_forward": (mlp, lambda: (mlp_params(), f32(8, 3))),
    "mlp_grad": (jax.grad(mlp_loss), lambda: (mlp_params(), f32(8, 3), f32(8, 2))),
    "train_step": (train_step, lambda: (mlp_params(), f32(8, 3), f32(8, 2))),
    "cond_two_branch": (lambda p, x: lax.cond(p > 0, jnp.sin, jnp.cos, x), lambda: (np.float32(0.5), f32(4))),
    "switch_three": (
        lambda i, x: lax.switch(i, [jnp.sin, jnp.cos, lambda u: u * 2.0], x),
        lambda: (np.int32(2), f32(4)),
    ),
    "scan_cumsum": (lambda v: lax.scan(lambda c, x: (c + x, c + x), 0.0, v)[1], lambda: (f32(6),)),
    "scan_reverse_consts": (
        lambda k, v: lax.scan(lambda c, x: (c * k + x, c), 1.0, v, reverse=True),
        lambda: (np.float32(0.5), f32(5)),
    ),
    "scan_in_cond": (scan_in_cond, lambda: (np.float32(1.0), f32(5))),
    "while_loop": (while_loop, lambda: (f32(3),)),
    "fori_loop_consts": (fori_loop_consts, lambda: (f32(3), np.float32(0.9))),
    "physics": (physics, lambda: (f32(4), f32(4))),
    "pmap_sort_take3": (pmap_sort_take3, lambda: (f32(4, 10),)),
    "pmap_psum": (pmap_psum, lambda: (np.abs(f32(4)) + 1.0,)),
    "argsort": (argsort, lambda: (f32(7),)),
    "lexsort": (lexsort, lambda: (np.array([1, 0, 1, 0], np.int32), np.array([3, 2, 1, 0], np.int32))),
    "gather_take": (gather_take, lambda: (f32(6), np.array([0, 5, 2], np.int32))),
    "scatter_add_grad": (scatter_add_grad, lambda: (f32(5), np.array([0, 2, 2], np.int32))),
    "scatter_set": (scatter_set, lambda: (f32(5), np.array([1, 3], np.int32))),
    "batched_dot": (batched_dot, lambda: (f32(2, 3, 4), f32(2, 4, 5))),
    "vector_dot": (vector_dot, lambda: (f32(3), f32(3, 2))),
    "reductions": (reductions, lambda: (f32(3, 4),)),
    "cumulatives": (cumulatives, lambda: (f32(6),)),
    "unary_math": (unary_math, lambda: (f32(5),)),
    "special_math": (special_math, lambda: (f32(5),)),
    "binary_math": (binary_math, lambda: (f32(5), np.abs(f32(5)) + 0.5)),
    "logic": (logic, lambda: (f32(5), f32(5))),
    "int_ops": (int_ops, lambda: (np.array([7, -7, 9, 100], np.int32), np.array([2, 2, -4, 7], np.int32))),
    "shapes": (shapes, lambda: (f32(3, 4),)),
    "slicing": (slicing, lambda: (f32(8), np.int32(3))),
    "concat_split_pad": (concat_split_pad, lambda: (f32(7),)),
    "iota_arange": (iota_arange, lambda: (np.float32(2.0),)),
    "converts": (converts, lambda: (f32(5) * 3,)),
    "remat": (jax.checkpoint(lambda x: jnp.sin(jnp.sin(x)) * x), lambda: (f32(3),)),
    "remat_grad": (jax.grad(jax.checkpoint(lambda x: jnp.sum(jnp.sin(jnp.sin(x))))), lambda: (f32(3),)),
    "custom_jvp": (soft_clip, lambda: (f32(4),)),
    "custom_jvp_grad": (jax.grad(lambda x: soft_clip(x).sum()), lambda: (f32(4),)),
    "custom_vjp": (clipped_sin, lambda: (f32(4),)),
    "constvars": (constvars, lambda: (f32(3),)),
    "softmax": (softmax, lambda: (f32(2, 5),)),
    "vmapped": (vmapped, lambda: (f32(4, 3), f32(3))),
    "polynomial": (polynomial, lambda: (np.abs(f32(5)) + 0.5,)),
}


def dump(name):
    fn, make_args = CASES[name]
    return str(jax.make_jaxpr(fn)(*make_args())) + "\n"


def write(name, text):
    os.makedirs(os.path.join(HERE, name), exist_ok=True)
    with open(os.path.join(HERE, name, "program.jaxpr"), "w") as f:
        f.write(text)


def main(names):
    if not names:
        write("softplus_grad_listing", SOFTPLUS_GRAD_LISTING)
        names = list(CASES)
    for name in names:
        rng.seed(0)
        write(name, dump(name))
        print(name)


if __name__ == "__main__":
    main(sys.argv[1:])
