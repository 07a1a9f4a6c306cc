// One translation case per built-in primitive (some have several).
// Included by the translator unit tests and by the CLI acceptance suite.

pub struct TranslationCase {
    pub primitive: &'static str,
    /// `framework-numpy` or `plain-numpy`.
    pub dialect: &'static str,
    pub source: &'static str,
    /// Consecutive whole lines that must appear in the output.
    pub expected: &'static str,
}

const fn case(
    primitive: &'static str,
    dialect: &'static str,
    source: &'static str,
    expected: &'static str,
) -> TranslationCase {
    TranslationCase {
        primitive,
        dialect,
        source,
        expected,
    }
}

const FW: &str = "framework-numpy";
const NP: &str = "plain-numpy";

pub const TRANSLATION_CASES: &[TranslationCase] = &[
    // element-wise
    case("add", FW, "{ lambda ; b:f32[]. let c:f32[] = add 1.0 b in (c,) }", "    c = 1.0 + b"),
    case("add", FW, "{ lambda ; b:f32[]. let c:f32[] = add b -1.0 in (c,) }", "    c = b + (-1.0)"),
    case("add_any", FW, "{ lambda ; a:f32[3] b:f32[3]. let c:f32[3] = add_any a b in (c,) }", "    c = a + b"),
    case("sub", FW, "{ lambda ; a:f32[] b:f32[]. let c:f32[] = sub a b in (c,) }", "    c = a - b"),
    case("mul", FW, "{ lambda ; d:f32[] b:f32[]. let e:f32[] = mul d b in (e,) }", "    e = d * b"),
    case("div", FW, "{ lambda ; c:f32[]. let d:f32[] = div 1.0 c in (d,) }", "    d = 1.0 / c"),
    case("div", FW, "{ lambda ; a:i32[] b:i32[]. let c:i32[] = div a b in (c,) }", "    c = lax.div(a, b)"),
    case("div", NP, "{ lambda ; a:i32[] b:i32[]. let c:i32[] = div a b in (c,) }", "    c = asarray(trunc(a / b), dtype=int32)"),
    case("neg", FW, "{ lambda ; a:f32[]. let b:f32[] = neg a in (b,) }", "    b = -a"),
    case("exp", FW, "{ lambda ; a:f32[]. let b:f32[] = exp a in (b,) }", "    b = exp(a)"),
    case("exp2", FW, "{ lambda ; a:f32[]. let b:f32[] = exp2 a in (b,) }", "    b = exp2(a)"),
    case("log", FW, "{ lambda ; c:f32[]. let _:f32[] = log c in (c,) }", "    _ = log(c)"),
    case("log1p", FW, "{ lambda ; a:f32[]. let b:f32[] = log1p a in (b,) }", "    b = log1p(a)"),
    case("expm1", FW, "{ lambda ; a:f32[]. let b:f32[] = expm1 a in (b,) }", "    b = expm1(a)"),
    case("sin", FW, "{ lambda ; a:f32[]. let b:f32[] = sin a in (b,) }", "    b = sin(a)"),
    case("cos", FW, "{ lambda ; a:f32[]. let b:f32[] = cos a in (b,) }", "    b = cos(a)"),
    case("tan", FW, "{ lambda ; a:f32[]. let b:f32[] = tan a in (b,) }", "    b = tan(a)"),
    case("asin", FW, "{ lambda ; a:f32[]. let b:f32[] = asin a in (b,) }", "    b = arcsin(a)"),
    case("acos", FW, "{ lambda ; a:f32[]. let b:f32[] = acos a in (b,) }", "    b = arccos(a)"),
    case("atan", FW, "{ lambda ; a:f32[]. let b:f32[] = atan a in (b,) }", "    b = arctan(a)"),
    case("sinh", FW, "{ lambda ; a:f32[]. let b:f32[] = sinh a in (b,) }", "    b = sinh(a)"),
    case("cosh", FW, "{ lambda ; a:f32[]. let b:f32[] = cosh a in (b,) }", "    b = cosh(a)"),
    case("tanh", FW, "{ lambda ; a:f32[]. let b:f32[] = tanh a in (b,) }", "    b = tanh(a)"),
    case("asinh", FW, "{ lambda ; a:f32[]. let b:f32[] = asinh a in (b,) }", "    b = arcsinh(a)"),
    case("acosh", FW, "{ lambda ; a:f32[]. let b:f32[] = acosh a in (b,) }", "    b = arccosh(a)"),
    case("atanh", FW, "{ lambda ; a:f32[]. let b:f32[] = atanh a in (b,) }", "    b = arctanh(a)"),
    case("logistic", FW, "{ lambda ; a:f32[]. let b:f32[] = logistic a in (b,) }", "    b = lax.logistic(a)"),
    case("logistic", NP, "{ lambda ; a:f32[]. let b:f32[] = logistic a in (b,) }", "    b = 1.0 / (1.0 + exp(-a))"),
    case("sqrt", FW, "{ lambda ; a:f32[]. let b:f32[] = sqrt a in (b,) }", "    b = sqrt(a)"),
    case("cbrt", FW, "{ lambda ; a:f32[]. let b:f32[] = cbrt a in (b,) }", "    b = cbrt(a)"),
    case("rsqrt", FW, "{ lambda ; a:f32[]. let b:f32[] = rsqrt a in (b,) }", "    b = lax.rsqrt(a)"),
    case("rsqrt", NP, "{ lambda ; a:f32[]. let b:f32[] = rsqrt a in (b,) }", "    b = 1.0 / sqrt(a)"),
    case("integer_pow", FW, "{ lambda ; a:f32[]. let b:f32[] = integer_pow[y=2] a in (b,) }", "    b = a ** 2"),
    case("integer_pow", FW, "{ lambda ; a:f32[]. let b:f32[] = integer_pow[y=-2] a in (b,) }", "    b = a ** (-2)"),
    case("pow", FW, "{ lambda ; a:f32[] b:f32[]. let c:f32[] = pow a b in (c,) }", "    c = a ** b"),
    case("square", FW, "{ lambda ; a:f32[]. let b:f32[] = square a in (b,) }", "    b = square(a)"),
    case("abs", FW, "{ lambda ; a:f32[]. let b:f32[] = abs a in (b,) }", "    b = abs(a)"),
    case("sign", FW, "{ lambda ; a:f32[]. let b:f32[] = sign a in (b,) }", "    b = sign(a)"),
    case("floor", FW, "{ lambda ; a:f32[]. let b:f32[] = floor a in (b,) }", "    b = floor(a)"),
    case("ceil", FW, "{ lambda ; a:f32[]. let b:f32[] = ceil a in (b,) }", "    b = ceil(a)"),
    case("round", FW, "{ lambda ; a:f32[]. let b:f32[] = round[rounding_method=RoundingMethod.TO_NEAREST_EVEN] a in (b,) }", "    b = round(a)"),
    case("round", FW, "{ lambda ; a:f32[]. let b:f32[] = round[rounding_method=0] a in (b,) }", "    b = sign(a) * floor(abs(a) + 0.5)"),
    case("is_finite", FW, "{ lambda ; a:f32[]. let b:bool[] = is_finite a in (b,) }", "    b = isfinite(a)"),
    case("max", FW, "{ lambda ; a:f32[] b:f32[]. let c:f32[] = max a b in (c,) }", "    c = maximum(a, b)"),
    case("min", FW, "{ lambda ; a:f32[] b:f32[]. let c:f32[] = min a b in (c,) }", "    c = minimum(a, b)"),
    case("atan2", FW, "{ lambda ; a:f32[] b:f32[]. let c:f32[] = atan2 a b in (c,) }", "    c = arctan2(a, b)"),
    case("nextafter", FW, "{ lambda ; a:f32[] b:f32[]. let c:f32[] = nextafter a b in (c,) }", "    c = nextafter(a, b)"),
    case("rem", FW, "{ lambda ; a:f32[] b:f32[]. let c:f32[] = rem a b in (c,) }", "    c = fmod(a, b)"),
    case("and", FW, "{ lambda ; a:bool[] b:bool[]. let c:bool[] = and a b in (c,) }", "    c = bitwise_and(a, b)"),
    case("or", FW, "{ lambda ; a:bool[] b:bool[]. let c:bool[] = or a b in (c,) }", "    c = bitwise_or(a, b)"),
    case("xor", FW, "{ lambda ; a:i32[] b:i32[]. let c:i32[] = xor a b in (c,) }", "    c = bitwise_xor(a, b)"),
    case("not", FW, "{ lambda ; a:bool[]. let b:bool[] = not a in (b,) }", "    b = bitwise_not(a)"),
    case("shift_left", FW, "{ lambda ; a:i32[] b:i32[]. let c:i32[] = shift_left a b in (c,) }", "    c = left_shift(a, b)"),
    case("shift_right_arithmetic", FW, "{ lambda ; a:i32[] b:i32[]. let c:i32[] = shift_right_arithmetic a b in (c,) }", "    c = right_shift(a, b)"),
    case("shift_right_logical", FW, "{ lambda ; a:i32[] b:i32[]. let c:i32[] = shift_right_logical a b in (c,) }", "    c = lax.shift_right_logical(a, b)"),
    case("shift_right_logical", NP, "{ lambda ; a:i32[] b:i32[]. let c:i32[] = shift_right_logical a 1:i32[] in (c,) }", "    c = right_shift(asarray(a, dtype=int32).view(uint32), asarray(1, dtype=int32).view(uint32)).view(int32)"),
    case("eq", FW, "{ lambda ; a:f32[] b:f32[]. let c:bool[] = eq a b in (c,) }", "    c = a == b"),
    case("ne", FW, "{ lambda ; a:f32[] b:f32[]. let c:bool[] = ne a b in (c,) }", "    c = a != b"),
    case("lt", FW, "{ lambda ; a:i32[]. let c:bool[] = lt a 0:i32[] in (c,) }", "    c = a < 0"),
    case("le", FW, "{ lambda ; a:f32[] b:f32[]. let c:bool[] = le a b in (c,) }", "    c = a <= b"),
    case("gt", FW, "{ lambda ; a:f32[] b:f32[]. let c:bool[] = gt a b in (c,) }", "    c = a > b"),
    case("ge", FW, "{ lambda ; a:f32[] b:f32[]. let c:bool[] = ge a b in (c,) }", "    c = a >= b"),
    case("select_n", FW, "{ lambda ; p:bool[] a:f32[] b:f32[]. let c:f32[] = select_n p a b in (c,) }", "    c = where(p, b, a)"),
    case("select_n", FW, "{ lambda ; p:i32[] a:f32[] b:f32[] c:f32[]. let d:f32[] = select_n p a b c in (d,) }", "    d = lax.select_n(p, a, b, c)"),
    case("select_n", NP, "{ lambda ; p:i32[] a:f32[] b:f32[] c:f32[]. let d:f32[] = select_n p a b c in (d,) }", "    d = choose(p, (a, b, c))"),
    case("clamp", FW, "{ lambda ; c:i32[]. let d:i32[] = clamp 0:i32[] c 2:i32[] in (d,) }", "    d = clip(c, 0, 2)"),
    case("convert_element_type", FW, "{ lambda ; a:i32[]. let b:f32[] = convert_element_type[new_dtype=float32 weak_type=False] a in (b,) }", "    b = asarray(a, dtype=float32)"),
    case("convert_element_type", FW, "{ lambda ; a:f32[]. let b:bool[] = convert_element_type[new_dtype=bool weak_type=False] a in (b,) }", "    b = asarray(a, dtype=bool_)"),
    case("stop_gradient", FW, "{ lambda ; a:f32[]. let b:f32[] = stop_gradient a in (b,) }", "    b = lax.stop_gradient(a)"),
    case("stop_gradient", NP, "{ lambda ; a:f32[]. let b:f32[] = stop_gradient a in (b,) }", "    b = a"),
    case("device_put", FW, "{ lambda ; a:f32[3]. let b:f32[3] = device_put[copy_semantics=(<CopySemantics.ALIAS: 1>,) devices=(None,) srcs=(None,)] a in (b,) }", "    b = a"),
    case("device_put", NP, "{ lambda ; a:f32[3] c:i32[]. let b:f32[3] d:i32[] = device_put[copy_semantics=(<CopySemantics.ALIAS: 1>, <CopySemantics.ALIAS: 1>) devices=(None, None) srcs=(None, None)] a c in (b, d) }", "    b, d = a, c"),
    case("copy", FW, "{ lambda ; a:f32[3]. let b:f32[3] = copy a in (b,) }", "    b = copy(a)"),
    case("copy_p", FW, "{ lambda ; a:f32[3]. let b:f32[3] = copy_p a in (b,) }", "    b = copy(a)"),
    case("erf", FW, "{ lambda ; a:f32[]. let b:f32[] = erf a in (b,) }", "from jax.scipy.special import erf\n\ndef f(a):\n    b = erf(a)"),
    case("erf", NP, "{ lambda ; a:f32[]. let b:f32[] = erf a in (b,) }", "from scipy.special import erf\n\ndef f(a):\n    b = erf(a)"),
    case("erfc", FW, "{ lambda ; a:f32[]. let b:f32[] = erfc a in (b,) }", "    b = erfc(a)"),
    case("erf_inv", FW, "{ lambda ; a:f32[]. let b:f32[] = erf_inv a in (b,) }", "    b = erfinv(a)"),
    case("lgamma", FW, "{ lambda ; a:f32[]. let b:f32[] = lgamma a in (b,) }", "    b = gammaln(a)"),
    case("digamma", FW, "{ lambda ; a:f32[]. let b:f32[] = digamma a in (b,) }", "    b = digamma(a)"),
    // tensor manipulation
    case("dot_general", FW, "{ lambda ; a:f32[2,3] b:f32[3,4]. let c:f32[2,4] = dot_general[dimension_numbers=(([1], [0]), ([], [])) preferred_element_type=float32] a b in (c,) }", "    c = matmul(a, b)"),
    case("dot_general", FW, "{ lambda ; a:f32[3,2] b:f32[3,4]. let c:f32[2,4] = dot_general[dimension_numbers=(((0,), (0,)), ((), ())) preferred_element_type=float32] a b in (c,) }", "    c = tensordot(a, b, axes=((0,), (0,)))"),
    case("dot_general", FW, "{ lambda ; a:f32[2,3,4] b:f32[2,4,5]. let c:f32[2,3,5] = dot_general[dimension_numbers=(([2], [1]), ([0], [0])) preferred_element_type=float32] a b in (c,) }", "    c = einsum('abc,acd->abd', a, b)"),
    case("transpose", FW, "{ lambda ; b:f32[2,3]. let c:f32[3,2] = transpose[permutation=(1, 0)] b in (c,) }", "    c = transpose(b, (1, 0))"),
    case("reshape", FW, "{ lambda ; b:f32[2,3]. let d:f32[3,2] = reshape[dimensions=None new_sizes=(3, 2) sharding=None] b in (d,) }", "    d = reshape(b, (3, 2))"),
    case("broadcast_in_dim", FW, "{ lambda ; . let j:f32[2] = broadcast_in_dim[broadcast_dimensions=() shape=(2,) sharding=None] 1.0:f32[] in (j,) }", "    j = broadcast_to(1.0, (2,))"),
    case("broadcast_in_dim", FW, "{ lambda ; i:f32[2]. let j:f32[1,2] = broadcast_in_dim[broadcast_dimensions=(1,) shape=(1, 2) sharding=None] i in (j,) }", "    j = broadcast_to(expand_dims(i, (0,)), (1, 2))"),
    case("reduce_sum", FW, "{ lambda ; b:f32[2,3]. let e:f32[3] = reduce_sum[axes=(0,)] b in (e,) }", "    e = sum(b, axis=(0,))"),
    case("reduce_max", FW, "{ lambda ; b:f32[2,3]. let f:f32[] = reduce_max[axes=(0, 1)] b in (f,) }", "    f = max(b, axis=(0, 1))"),
    case("reduce_min", FW, "{ lambda ; b:f32[2,3]. let f:f32[2] = reduce_min[axes=(1,)] b in (f,) }", "    f = min(b, axis=(1,))"),
    case("reduce_prod", FW, "{ lambda ; b:f32[2,3]. let f:f32[2] = reduce_prod[axes=(1,)] b in (f,) }", "    f = prod(b, axis=(1,))"),
    case("reduce_and", FW, "{ lambda ; b:bool[3]. let f:bool[] = reduce_and[axes=(0,)] b in (f,) }", "    f = all(b, axis=(0,))"),
    case("reduce_or", FW, "{ lambda ; b:bool[3]. let f:bool[] = reduce_or[axes=(0,)] b in (f,) }", "    f = any(b, axis=(0,))"),
    case("argmax", FW, "{ lambda ; b:f32[2,3]. let g:i32[2] = argmax[axes=(1,) index_dtype=int32] b in (g,) }", "    g = asarray(argmax(b, axis=1), dtype=int32)"),
    case("argmin", FW, "{ lambda ; b:f32[2,3]. let g:i32[3] = argmin[axes=(0,) index_dtype=int32] b in (g,) }", "    g = asarray(argmin(b, axis=0), dtype=int32)"),
    case("cumsum", FW, "{ lambda ; a:f32[5]. let c:f32[5] = cumsum[axis=0 reverse=False] a in (c,) }", "    c = cumsum(a, axis=0)"),
    case("cumsum", FW, "{ lambda ; a:f32[5]. let c:f32[5] = cumsum[axis=0 reverse=True] a in (c,) }", "    c = flip(cumsum(flip(a, 0), axis=0), 0)"),
    case("cumprod", FW, "{ lambda ; a:f32[5]. let d:f32[5] = cumprod[axis=0 reverse=False] a in (d,) }", "    d = cumprod(a, axis=0)"),
    case("cummax", FW, "{ lambda ; a:f32[5]. let e:f32[5] = cummax[axis=0 reverse=False] a in (e,) }", "    e = lax.cummax(a, axis=0, reverse=False)"),
    case("cummax", NP, "{ lambda ; a:f32[5]. let e:f32[5] = cummax[axis=0 reverse=False] a in (e,) }", "    e = maximum.accumulate(a, axis=0)"),
    case("cummin", NP, "{ lambda ; a:f32[5]. let e:f32[5] = cummin[axis=0 reverse=True] a in (e,) }", "    e = flip(minimum.accumulate(flip(a, 0), axis=0), 0)"),
    case("cumlogsumexp", NP, "{ lambda ; a:f32[5]. let e:f32[5] = cumlogsumexp[axis=0 reverse=False] a in (e,) }", "    e = logaddexp.accumulate(a, axis=0)"),
    case("sort", FW, "{ lambda ; c:f32[5]. let d:f32[5] = sort[dimension=0 is_stable=True num_keys=1] c in (d,) }", "    d = sort(c, axis=0)"),
    case("sort", FW, "{ lambda ; a:f32[5] b:i32[5]. let c:f32[5] d:i32[5] = sort[dimension=0 is_stable=True num_keys=1] a b in (d,) }", "    perm = argsort(a, axis=0)\n    c, d = take_along_axis(a, perm, axis=0), take_along_axis(b, perm, axis=0)"),
    case("sort", NP, "{ lambda ; a:f32[5] b:i32[5]. let c:f32[5] d:i32[5] = sort[dimension=0 is_stable=True num_keys=1] a b in (d,) }", "    perm = argsort(a, axis=0, kind='stable')"),
    case("concatenate", FW, "{ lambda ; a:f32[5]. let p:f32[10] = concatenate[dimension=0] a a in (p,) }", "    p = concatenate((a, a), axis=0)"),
    case("split", FW, "{ lambda ; a:f32[5]. let q:f32[2] r:f32[3] = split[axis=0 sizes=(np.int64(2), np.int64(3))] a in (q, r) }", "    q, r = split(a, (2,), axis=0)"),
    case("slice", FW, "{ lambda ; a:f32[5]. let j:f32[3] = slice[limit_indices=(4,) start_indices=(1,) strides=None] a in (j,) }", "    j = a[1:4]"),
    case("slice", FW, "{ lambda ; a:f32[5,4]. let j:f32[3,2] = slice[limit_indices=(5, 4) start_indices=(0, 0) strides=(2, 2)] a in (j,) }", "    j = a[0:5:2, 0:4:2]"),
    case("dynamic_slice", FW, "{ lambda ; b:f32[5] g:i32[]. let h:f32[1] = dynamic_slice[slice_sizes=(1,)] b g in (h,) }", "    h = lax.dynamic_slice(b, (g,), (1,))"),
    case("dynamic_update_slice", FW, "{ lambda ; b:f32[5] j:f32[2] n:i32[]. let o:f32[5] = dynamic_update_slice b j n in (o,) }", "    o = lax.dynamic_update_slice(b, j, (n,))"),
    case("squeeze", FW, "{ lambda ; h:f32[1]. let i:f32[] = squeeze[dimensions=(0,)] h in (i,) }", "    i = squeeze(h, (0,))"),
    case("expand_dims", FW, "{ lambda ; h:f32[3]. let i:f32[1,3] = expand_dims[dimensions=(0,)] h in (i,) }", "    i = expand_dims(h, (0,))"),
    case("rev", FW, "{ lambda ; a:f32[5]. let f:f32[5] = rev[dimensions=(0,)] a in (f,) }", "    f = flip(a, (0,))"),
    case("pad", FW, "{ lambda ; a:f32[5] i:f32[]. let g:f32[8] = pad[padding_config=((np.int64(1), np.int64(2), 0),)] a i in (g,) }", "    g = pad(a, ((1, 2),), constant_values=i)"),
    case("pad", FW, "{ lambda ; a:f32[5]. let g:f32[8] = pad[padding_config=((-1, 0, 1),)] a 0.0:f32[] in (g,) }", "    g = lax.pad(a, 0.0, ((-1, 0, 1),))"),
    case("iota", FW, "{ lambda ; . let k:i32[3] = iota[dimension=0 dtype=int32 shape=(3,) sharding=None]  in (k,) }", "    k = arange(3, dtype=int32)"),
    case("iota", FW, "{ lambda ; . let z:i32[2,3] = iota[dimension=1 dtype=int32 shape=(2, 3) sharding=None]  in (z,) }", "    z = broadcast_to(reshape(arange(3, dtype=int32), (1, 3)), (2, 3))"),
    case("gather", FW, "{ lambda ; b:f32[5] s:i32[2,1]. let t:f32[2] = gather[dimension_numbers=GatherDimensionNumbers(offset_dims=(), collapsed_slice_dims=(0,), start_index_map=(0,), operand_batching_dims=(), start_indices_batching_dims=()) fill_value=None indices_are_sorted=False mode=GatherScatterMode.PROMISE_IN_BOUNDS slice_sizes=(1,) unique_indices=False] b s in (t,) }", "    t = take(b, s[..., 0], axis=0, mode='clip')"),
    case("gather", FW, "{ lambda ; a:f32[5] h:i32[1]. let i:f32[2] = gather[dimension_numbers=GatherDimensionNumbers(offset_dims=(0,), collapsed_slice_dims=(), start_index_map=(0,), operand_batching_dims=(), start_indices_batching_dims=()) fill_value=None indices_are_sorted=True mode=GatherScatterMode.PROMISE_IN_BOUNDS slice_sizes=(2,) unique_indices=True] a h in (i,) }", "    i = lax.gather(a, h, dimension_numbers=lax.GatherDimensionNumbers(offset_dims=(0,), collapsed_slice_dims=(), start_index_map=(0,), operand_batching_dims=(), start_indices_batching_dims=()), slice_sizes=(2,), indices_are_sorted=True, unique_indices=True, mode=lax.GatherScatterMode.PROMISE_IN_BOUNDS, fill_value=None)"),
    case("scatter-add", FW, "{ lambda ; n:f32[5] f:i32[2,1] m:f32[2]. let o:f32[5] = scatter-add[dimension_numbers=ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()) indices_are_sorted=False mode=GatherScatterMode.PROMISE_IN_BOUNDS unique_indices=False update_consts=() update_jaxpr={ lambda ; p:f32[] q:f32[]. let r:f32[] = add p q in (r,) }] n f m in (o,) }", "    o = lax.scatter_add(n, f, m, dimension_numbers=lax.ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()), indices_are_sorted=False, unique_indices=False, mode=lax.GatherScatterMode.PROMISE_IN_BOUNDS)"),
    case("gather", FW, "{ lambda ; a:f32[6] l:i32[3,1]. let h:f32[3] = gather[dimension_numbers=GatherDimensionNumbers(offset_dims=(), collapsed_slice_dims=(0,), start_index_map=(0,), operand_batching_dims=(), start_indices_batching_dims=()) fill_value=nan indices_are_sorted=False mode=GatherScatterMode.FILL_OR_DROP slice_sizes=(1,) unique_indices=False] a l in (h,) }", "    h = take(a, l[..., 0], axis=0, mode='fill', fill_value=nan)"),
    case("scatter-mul", FW, "{ lambda ; n:f32[5] f:i32[2,1] m:f32[2]. let o:f32[5] = scatter-mul[dimension_numbers=ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()) indices_are_sorted=True mode=GatherScatterMode.FILL_OR_DROP unique_indices=True update_consts=() update_jaxpr=None] n f m in (o,) }", "    o = lax.scatter_mul(n, f, m, dimension_numbers=lax.ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()), indices_are_sorted=True, unique_indices=True, mode=lax.GatherScatterMode.FILL_OR_DROP)"),
    case("scatter-min", FW, "{ lambda ; n:f32[5] f:i32[2,1] m:f32[2]. let o:f32[5] = scatter-min[dimension_numbers=ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()) indices_are_sorted=True mode=GatherScatterMode.FILL_OR_DROP unique_indices=True update_consts=() update_jaxpr=None] n f m in (o,) }", "    o = lax.scatter_min(n, f, m, dimension_numbers=lax.ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()), indices_are_sorted=True, unique_indices=True, mode=lax.GatherScatterMode.FILL_OR_DROP)"),
    case("scatter-max", FW, "{ lambda ; n:f32[5] f:i32[2,1] m:f32[2]. let o:f32[5] = scatter-max[dimension_numbers=ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()) indices_are_sorted=True mode=GatherScatterMode.FILL_OR_DROP unique_indices=True update_consts=() update_jaxpr=None] n f m in (o,) }", "    o = lax.scatter_max(n, f, m, dimension_numbers=lax.ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()), indices_are_sorted=True, unique_indices=True, mode=lax.GatherScatterMode.FILL_OR_DROP)"),
    case("scatter", FW, "{ lambda ; b:f32[5] f:i32[1,1] g:f32[1]. let h:f32[5] = scatter[dimension_numbers=ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()) indices_are_sorted=False mode=GatherScatterMode.FILL_OR_DROP unique_indices=False update_consts=() update_jaxpr=None] b f g in (h,) }", "    h = lax.scatter(b, f, g, dimension_numbers=lax.ScatterDimensionNumbers(update_window_dims=(), inserted_window_dims=(0,), scatter_dims_to_operand_dims=(0,), operand_batching_dims=(), scatter_indices_batching_dims=()), indices_are_sorted=False, unique_indices=False, mode=lax.GatherScatterMode.FILL_OR_DROP)"),
    // higher-order
    case("cond", FW, "{ lambda ; d:i32[] b:f32[5]. let e:f32[5] = cond[branches=(\n  { lambda ; f:f32[5]. let g:f32[5] = sin f in (g,) }\n  { lambda ; h:f32[5]. let i:f32[5] = cos h in (i,) }\n)] d b in (e,) }", "def fn_0(f):\n    g = sin(f)\n    return g\n\ndef fn_1(h):\n    i = cos(h)\n    return i\n\ndef f(d, b):\n    e = (fn_0, fn_1)[d](b)\n    return e"),
    case("while", FW, "{ lambda ; a:f32[5]. let b:i32[] c:f32[5] = while[body_jaxpr={ lambda ; d:i32[] e:f32[5]. let f:i32[] = add d 1:i32[]; g:f32[5] = mul e 2.0:f32[] in (f, g) } body_nconsts=0 cond_jaxpr={ lambda ; h:i32[] i:f32[5]. let j:bool[] = lt h 10:i32[] in (j,) } cond_nconsts=0] 0:i32[] a in (b, c) }", "def f(a):\n    b, c = 0, a\n    while fn_1(b, c):\n        b, c = fn_0(b, c)\n    return b, c"),
    case("scan", FW, "{ lambda ; a:f32[3]. let b:f32[] c:f32[3] = scan[jaxpr={ lambda ; d:f32[] e:f32[]. let f:f32[] = add d e in (f, f) } length=3 linear=(False, False) num_carry=1 num_consts=0 reverse=True unroll=1 _split_transpose=False] 0.0:f32[] a in (c,) }", "    b = 0.0\n    c = [None] * 3\n    for i in reversed(range(3)):\n        b, c[i] = fn_0(b, a[i])\n    c = stack(c)"),
    case("pjit", FW, "{ lambda ; a:f32[5]. let b:f32[5] = pjit[name=sort jaxpr={ lambda ; a:f32[5]. let b:f32[5] = sort[dimension=0 is_stable=True num_keys=1] a in (b,) }] a in (b,) }", "    b = fn_0(a)"),
    case("closed_call", FW, "{ lambda ; a:f32[]. let b:f32[] = closed_call[call_jaxpr={ lambda ; c:f32[]. let d:f32[] = sin c in (d,) }] a in (b,) }", "    b = fn_0(a)"),
    case("core_call", FW, "{ lambda ; a:f32[]. let b:f32[] = core_call[call_jaxpr={ lambda ; c:f32[]. let d:f32[] = sin c in (d,) } name=g] a in (b,) }", "    b = fn_0(a)"),
    case("remat2", FW, "{ lambda ; a:f32[]. let b:f32[] = remat2[differentiated=False jaxpr={ lambda ; c:f32[]. let d:f32[] = sin c; e:f32[] = sin d in (e,) } policy=None prevent_cse=True] a in (b,) }", "def fn_0(c):\n    d = sin(c)\n    e = sin(d)\n    return e"),
    case("checkpoint", FW, "{ lambda ; a:f32[]. let b:f32[] = checkpoint[jaxpr={ lambda ; c:f32[]. let d:f32[] = sin c in (d,) } prevent_cse=True] a in (b,) }", "    b = fn_0(a)"),
    case("custom_jvp_call", FW, "{ lambda ; a:f32[]. let b:f32[] = custom_jvp_call[name=g call_jaxpr={ lambda ; c:f32[]. let d:f32[] = sin c in (d,) } jvp=<lambda> symbolic_zeros=False] a in (b,) }", "    b = fn_0(a)"),
    case("custom_vjp_call", FW, "{ lambda ; a:f32[]. let b:f32[] = custom_vjp_call[name=h bwd=<lambda> call_jaxpr={ lambda ; c:f32[]. let d:f32[] = sin c in (d,) } fwd=<lambda> symbolic_zeros=False] a in (b,) }", "    b = fn_0(a)"),
    case("custom_vjp_call_jaxpr", FW, "{ lambda ; a:f32[]. let b:f32[] = custom_vjp_call_jaxpr[fun_jaxpr={ lambda ; c:f32[]. let d:f32[] = sin c in (d,) } num_consts=0] a in (b,) }", "    b = fn_0(a)"),
    case("xla_pmap", FW, "{ lambda ; a:f32[4]. let b:f32[4] = xla_pmap[axis_name=i axis_size=4 backend=None call_jaxpr={ lambda ; c:f32[]. let d:f32[] = psum[axes=('i',) axis_index_groups=None] c in (d,) } devices=None donated_invars=(False,) global_axis_size=4 in_axes=(0,) is_explicit_global_axis_size=False name=<lambda> out_axes=(0,)] a in (b,) }", "    # parallel map over 4 devices, evaluated on one device\n    b = vmap(fn_0, in_axes=(0,), out_axes=0, axis_name='i')(a)"),
    case("xla_pmap", NP, "{ lambda ; a:f32[4,5]. let b:f32[4,5] = xla_pmap[axis_name=i axis_size=4 call_jaxpr={ lambda ; c:f32[5]. let d:f32[5] = sin c in (d,) } in_axes=(0,) out_axes=(0,)] a in (b,) }", "    b = stack([fn_0(a[k]) for k in range(4)])"),
    case("psum", FW, "{ lambda ; c:f32[]. let d:f32[] = psum[axes=('i',) axis_index_groups=None] c in (d,) }", "    d = lax.psum(c, ('i',))"),
    case("pmax", FW, "{ lambda ; c:f32[]. let d:f32[] = pmax[axes=(i,) axis_index_groups=None] c in (d,) }", "    d = lax.pmax(c, ('i',))"),
    case("pmin", FW, "{ lambda ; c:f32[]. let d:f32[] = pmin[axes=('i',) axis_index_groups=None] c in (d,) }", "    d = lax.pmin(c, ('i',))"),
    case("axis_index", FW, "{ lambda ; . let d:i32[] = axis_index[axis_name=i] in (d,) }", "    d = lax.axis_index('i')"),
];
