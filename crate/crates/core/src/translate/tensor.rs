//! Shape manipulation, reductions, contractions, sorting and indexing.

use crate::emit::Dialect;
use crate::ir::{Equation, ParamValue};

use super::elementwise::arity;
use super::params::{self, py_tuple};
use super::{OperatorRule, Registry, TranslateError, TranslationContext};

type Out = Result<Vec<String>, TranslateError>;

const REDUCTIONS: &[(&str, &str)] = &[
    ("reduce_sum", "sum"),
    ("reduce_max", "max"),
    ("reduce_min", "min"),
    ("reduce_prod", "prod"),
    ("reduce_and", "all"),
    ("reduce_or", "any"),
];

pub(super) fn register(reg: &mut Registry) {
    for &(prim, func) in REDUCTIONS {
        reg.register(OperatorRule::new(prim, move |eq, ctx| {
            let [a] = arity(eq, 1)? else { unreachable!() };
            let axes = params::ints(eq, "axes")?;
            let a = ctx.atom(a)?;
            let expr = ctx.call(func, &[a, format!("axis={}", py_tuple(&axes))]);
            Ok(vec![ctx.assign(expr)])
        }));
    }
    reg.register(OperatorRule::new("argmax", |eq, ctx| arg_reduction(eq, ctx, "argmax")));
    reg.register(OperatorRule::new("argmin", |eq, ctx| arg_reduction(eq, ctx, "argmin")));
    reg.register(OperatorRule::new("cumsum", |eq, ctx| cumulative(eq, ctx, "cumsum")));
    reg.register(OperatorRule::new("cumprod", |eq, ctx| cumulative(eq, ctx, "cumprod")));
    reg.register(OperatorRule::new("cummax", |eq, ctx| cumulative(eq, ctx, "cummax")));
    reg.register(OperatorRule::new("cummin", |eq, ctx| cumulative(eq, ctx, "cummin")));
    reg.register(OperatorRule::new("cumlogsumexp", |eq, ctx| cumulative(eq, ctx, "cumlogsumexp")));
    reg.register(OperatorRule::new("dot_general", dot_general));
    reg.register(OperatorRule::new("transpose", transpose));
    reg.register(OperatorRule::new("reshape", reshape));
    reg.register(OperatorRule::new("broadcast_in_dim", broadcast_in_dim));
    reg.register(OperatorRule::new("squeeze", |eq, ctx| axes_call(eq, ctx, "squeeze")));
    reg.register(OperatorRule::new("expand_dims", |eq, ctx| axes_call(eq, ctx, "expand_dims")));
    reg.register(OperatorRule::new("rev", |eq, ctx| axes_call(eq, ctx, "flip")));
    reg.register(OperatorRule::new("concatenate", concatenate));
    reg.register(OperatorRule::new("split", split));
    reg.register(OperatorRule::new("slice", slice));
    reg.register(OperatorRule::new("dynamic_slice", dynamic_slice));
    reg.register(OperatorRule::new("dynamic_update_slice", dynamic_update_slice));
    reg.register(OperatorRule::new("pad", pad));
    reg.register(OperatorRule::new("iota", iota));
    reg.register(OperatorRule::new("sort", sort));
    reg.register(OperatorRule::new("gather", gather));
    reg.register(OperatorRule::new("scatter-add", |eq, ctx| scatter(eq, ctx, "scatter_add")));
    reg.register(OperatorRule::new("scatter", |eq, ctx| scatter(eq, ctx, "scatter")));
    reg.register(OperatorRule::new("scatter-mul", |eq, ctx| scatter(eq, ctx, "scatter_mul")));
    reg.register(OperatorRule::new("scatter-min", |eq, ctx| scatter(eq, ctx, "scatter_min")));
    reg.register(OperatorRule::new("scatter-max", |eq, ctx| scatter(eq, ctx, "scatter_max")));
}

fn arg_reduction(eq: &Equation, ctx: &mut TranslationContext<'_>, func: &str) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let axes = params::ints(eq, "axes")?;
    let [axis] = axes[..] else {
        return Err(TranslateError::unsupported(eq, "expected exactly one axis"));
    };
    let dtype = params::dtype(eq, "index_dtype")?;
    let dtype = ctx.dtype(eq, dtype)?;
    let a = ctx.atom(a)?;
    let inner = ctx.call(func, &[a, format!("axis={axis}")]);
    let expr = ctx.call("asarray", &[inner, format!("dtype={dtype}")]);
    Ok(vec![ctx.assign(expr)])
}

enum Scan {
    Function(&'static str),
    Accumulate(&'static str),
}

/// Scans along one axis; `reverse` accumulates from the far end.
fn cumulative(eq: &Equation, ctx: &mut TranslationContext<'_>, prim: &str) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let axis = params::int(eq, "axis")?;
    let reverse = params::flag(eq, "reverse", false)?;
    let a = ctx.atom(a)?;
    let scan = match prim {
        "cumsum" => Scan::Function("cumsum"),
        "cumprod" => Scan::Function("cumprod"),
        "cummax" => Scan::Accumulate("maximum"),
        "cummin" => Scan::Accumulate("minimum"),
        _ => Scan::Accumulate("logaddexp"),
    };
    if let (Scan::Accumulate(_), Dialect::FrameworkNumpy) = (&scan, ctx.dialect()) {
        let args = [a, format!("axis={axis}"), format!("reverse={}", py_bool(reverse))];
        let expr = ctx.lax_call(eq, prim, &args)?;
        return Ok(vec![ctx.assign(expr)]);
    }
    let apply = |ctx: &mut TranslationContext<'_>, x: String| match scan {
        Scan::Function(func) => ctx.call(func, &[x, format!("axis={axis}")]),
        Scan::Accumulate(ufunc) => {
            ctx.array_namespace();
            format!("{ufunc}.accumulate({x}, axis={axis})")
        }
    };
    let expr = if reverse {
        let flipped = ctx.call("flip", &[a, axis.to_string()]);
        let scanned = apply(ctx, flipped);
        ctx.call("flip", &[scanned, axis.to_string()])
    } else {
        apply(ctx, a)
    };
    Ok(vec![ctx.assign(expr)])
}

fn py_bool(b: bool) -> &'static str {
    if b {
        "True"
    } else {
        "False"
    }
}

fn dimension_numbers(eq: &Equation) -> Result<[Vec<i64>; 4], TranslateError> {
    let bad = || TranslateError::unsupported(eq, "malformed dimension_numbers");
    let ParamValue::Tuple(outer) = params::get(eq, "dimension_numbers")? else {
        return Err(bad());
    };
    let [ParamValue::Tuple(contract), ParamValue::Tuple(batch)] = &outer[..] else {
        return Err(bad());
    };
    let pair = |items: &[ParamValue]| -> Option<(Vec<i64>, Vec<i64>)> {
        match items {
            [l, r] => Some((params::as_ints(l)?, params::as_ints(r)?)),
            _ => None,
        }
    };
    let (lc, rc) = pair(contract).ok_or_else(bad)?;
    let (lb, rb) = pair(batch).ok_or_else(bad)?;
    Ok([lc, rc, lb, rb])
}

/// Matrix product for the plain `(..., k) x (k, ...)` pattern, `tensordot`
/// for other contractions and `einsum` when batch dimensions are present.
fn dot_general(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a, b] = arity(eq, 2)? else { unreachable!() };
    let [lc, rc, lb, rb] = dimension_numbers(eq)?;
    let (lr, rr) = (ctx.rank(a), ctx.rank(b));
    let (x, y) = (ctx.atom(a)?, ctx.atom(b)?);
    if lb.is_empty() && rb.is_empty() {
        let matmul = match (lr, rr) {
            (Some(lr), Some(rr)) => {
                (1..=2).contains(&lr)
                    && (1..=2).contains(&rr)
                    && lc == [lr as i64 - 1]
                    && rc == [0]
            }
            _ => false,
        };
        let expr = if matmul {
            ctx.call("matmul", &[x, y])
        } else {
            ctx.call("tensordot", &[x, y, format!("axes=({}, {})", py_tuple(&lc), py_tuple(&rc))])
        };
        return Ok(vec![ctx.assign(expr)]);
    }
    let (Some(lr), Some(rr)) = (lr, rr) else {
        return Err(TranslateError::unsupported(eq, "batch dimensions require annotated operand ranks"));
    };
    let subscripts = einsum_subscripts(lr, rr, &lc, &rc, &lb, &rb)
        .ok_or_else(|| TranslateError::unsupported(eq, "inconsistent dimension_numbers"))?;
    let expr = ctx.call("einsum", &[params::py_str(&subscripts), x, y]);
    Ok(vec![ctx.assign(expr)])
}

/// Einsum subscripts in dot_general's output order: batch, lhs free, rhs free.
/// Letters are assigned in operand position order.
pub(crate) fn einsum_subscripts(
    lr: usize,
    rr: usize,
    lc: &[i64],
    rc: &[i64],
    lb: &[i64],
    rb: &[i64],
) -> Option<String> {
    if lc.len() != rc.len() || lb.len() != rb.len() || lr + rr > 52 {
        return None;
    }
    // For each lhs dimension, the rhs dimension it is paired with.
    let mut partner: Vec<Option<usize>> = vec![None; lr];
    let mut paired = vec![false; rr];
    for (&l, &r) in lb.iter().zip(rb).chain(lc.iter().zip(rc)) {
        let (l, r) = (usize::try_from(l).ok()?, usize::try_from(r).ok()?);
        if l >= lr || r >= rr || partner[l].is_some() || paired[r] {
            return None;
        }
        partner[l] = Some(r);
        paired[r] = true;
    }
    let mut letters = ('a'..='z').chain('A'..='Z');
    let lhs: Vec<char> = (0..lr).map(|_| letters.next()).collect::<Option<_>>()?;
    let mut rhs: Vec<Option<char>> = vec![None; rr];
    for (l, r) in partner.iter().enumerate() {
        if let Some(r) = r {
            rhs[*r] = Some(lhs[l]);
        }
    }
    for slot in &mut rhs {
        if slot.is_none() {
            *slot = Some(letters.next()?);
        }
    }
    let rhs: Vec<char> = rhs.into_iter().flatten().collect();
    let batch = lb.iter().map(|&l| lhs[l as usize]);
    let lhs_free = (0..lr).filter(|&l| partner[l].is_none()).map(|l| lhs[l]);
    let rhs_free = (0..rr).filter(|&r| !paired[r]).map(|r| rhs[r]);
    let out: String = batch.chain(lhs_free).chain(rhs_free).collect();
    let lhs: String = lhs.into_iter().collect();
    let rhs: String = rhs.into_iter().collect();
    Some(format!("{lhs},{rhs}->{out}"))
}

fn transpose(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let perm = params::ints(eq, "permutation")?;
    let a = ctx.atom(a)?;
    let expr = ctx.call("transpose", &[a, py_tuple(&perm)]);
    Ok(vec![ctx.assign(expr)])
}

fn reshape(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let sizes = params::ints(eq, "new_sizes")?;
    let mut a = ctx.atom(a)?;
    if let Some(dims) = params::opt_ints(eq, "dimensions")? {
        a = ctx.call("transpose", &[a, py_tuple(&dims)]);
    }
    let expr = ctx.call("reshape", &[a, py_tuple(&sizes)]);
    Ok(vec![ctx.assign(expr)])
}

/// Inserts the axes missing from `broadcast_dimensions`, then broadcasts.
fn broadcast_in_dim(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let shape = params::ints(eq, "shape")?;
    let dims = params::ints(eq, "broadcast_dimensions")?;
    if dims.windows(2).any(|w| w[0] >= w[1]) {
        return Err(TranslateError::unsupported(eq, "broadcast_dimensions must be increasing"));
    }
    if dims.iter().any(|&d| d < 0 || d as usize >= shape.len()) {
        return Err(TranslateError::unsupported(eq, "broadcast dimension out of range"));
    }
    let missing: Vec<i64> = (0..shape.len() as i64).filter(|d| !dims.contains(d)).collect();
    let mut a = ctx.atom(a)?;
    if !dims.is_empty() && !missing.is_empty() {
        a = ctx.call("expand_dims", &[a, py_tuple(&missing)]);
    }
    let expr = ctx.call("broadcast_to", &[a, py_tuple(&shape)]);
    Ok(vec![ctx.assign(expr)])
}

fn axes_call(eq: &Equation, ctx: &mut TranslationContext<'_>, func: &str) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let dims = params::ints(eq, "dimensions")?;
    let a = ctx.atom(a)?;
    let expr = ctx.call(func, &[a, py_tuple(&dims)]);
    Ok(vec![ctx.assign(expr)])
}

fn concatenate(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    if eq.inputs.is_empty() {
        return Err(TranslateError::unsupported(eq, "expected at least one input"));
    }
    let dim = params::int(eq, "dimension")?;
    let parts = ctx.atoms(&eq.inputs)?;
    let seq = match parts.len() {
        1 => format!("({},)", parts[0]),
        _ => format!("({})", parts.join(", ")),
    };
    let expr = ctx.call("concatenate", &[seq, format!("axis={dim}")]);
    Ok(vec![ctx.assign(expr)])
}

/// `split` takes sizes; the array functions take cut points.
fn split(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let axis = params::int(eq, "axis")?;
    let sizes = params::ints(eq, "sizes")?;
    if sizes.len() != eq.outputs.len() {
        return Err(TranslateError::unsupported(eq, "one output per size expected"));
    }
    let cuts: Vec<i64> = sizes
        .iter()
        .scan(0, |acc, s| {
            *acc += s;
            Some(*acc)
        })
        .take(sizes.len().saturating_sub(1))
        .collect();
    let a = ctx.atom(a)?;
    let expr = ctx.call("split", &[a, py_tuple(&cuts), format!("axis={axis}")]);
    Ok(vec![match ctx.outputs() {
        [one] => format!("{one}, = {expr}"),
        _ => ctx.assign(expr),
    }])
}

fn slice(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let start = params::ints(eq, "start_indices")?;
    let limit = params::ints(eq, "limit_indices")?;
    let strides = params::opt_ints(eq, "strides")?;
    if start.len() != limit.len() || strides.as_ref().is_some_and(|s| s.len() != start.len()) {
        return Err(TranslateError::unsupported(eq, "index lists differ in length"));
    }
    let parts: Vec<String> = start
        .iter()
        .zip(&limit)
        .enumerate()
        .map(|(i, (lo, hi))| match strides.as_ref().map(|s| s[i]) {
            Some(step) if step != 1 => format!("{lo}:{hi}:{step}"),
            _ => format!("{lo}:{hi}"),
        })
        .collect();
    let a = ctx.array(a)?;
    let index = match parts.len() {
        0 => "()".to_owned(),
        _ => parts.join(", "),
    };
    Ok(vec![ctx.assign(format!("{a}[{index}]"))])
}

fn dynamic_slice(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let Some((a, starts)) = eq.inputs.split_first() else {
        return Err(TranslateError::unsupported(eq, "expected an operand"));
    };
    let sizes = params::ints(eq, "slice_sizes")?;
    let a = ctx.atom(a)?;
    let starts = tuple_of(ctx.atoms(starts)?);
    let expr = ctx.lax_call(eq, "dynamic_slice", &[a, starts, py_tuple(&sizes)])?;
    Ok(vec![ctx.assign(expr)])
}

fn dynamic_update_slice(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a, update, starts @ ..] = &eq.inputs[..] else {
        return Err(TranslateError::unsupported(eq, "expected an operand and an update"));
    };
    let (a, update) = (ctx.atom(a)?, ctx.atom(update)?);
    let starts = tuple_of(ctx.atoms(starts)?);
    let expr = ctx.lax_call(eq, "dynamic_update_slice", &[a, update, starts])?;
    Ok(vec![ctx.assign(expr)])
}

fn tuple_of(items: Vec<String>) -> String {
    match items.len() {
        1 => format!("({},)", items[0]),
        _ => format!("({})", items.join(", ")),
    }
}

fn padding_config(eq: &Equation) -> Result<Vec<(i64, i64, i64)>, TranslateError> {
    let bad = || TranslateError::unsupported(eq, "malformed padding_config");
    let ParamValue::Tuple(dims) = params::get(eq, "padding_config")? else {
        return Err(bad());
    };
    dims.iter()
        .map(|d| match params::as_ints(d).as_deref() {
            Some(&[lo, hi, interior]) => Ok((lo, hi, interior)),
            _ => Err(bad()),
        })
        .collect()
}

/// Edge padding maps onto `pad`; negative or interior padding needs `lax.pad`.
fn pad(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a, value] = arity(eq, 2)? else { unreachable!() };
    let config = padding_config(eq)?;
    let (a, value) = (ctx.atom(a)?, ctx.atom(value)?);
    let simple = config.iter().all(|&(lo, hi, interior)| lo >= 0 && hi >= 0 && interior == 0);
    let expr = if simple {
        let widths = tuple_of(config.iter().map(|(lo, hi, _)| format!("({lo}, {hi})")).collect());
        ctx.call("pad", &[a, widths, format!("constant_values={value}")])
    } else {
        let widths = tuple_of(
            config
                .iter()
                .map(|(lo, hi, interior)| format!("({lo}, {hi}, {interior})"))
                .collect(),
        );
        ctx.lax_call(eq, "pad", &[a, value, widths])?
    };
    Ok(vec![ctx.assign(expr)])
}

fn iota(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    arity(eq, 0)?;
    let shape = params::ints(eq, "shape")?;
    let dim = params::usize(eq, "dimension")?;
    if dim >= shape.len() {
        return Err(TranslateError::unsupported(eq, "dimension out of range"));
    }
    let dtype = params::dtype(eq, "dtype")?;
    let dtype = ctx.dtype(eq, dtype)?;
    let range = ctx.call("arange", &[shape[dim].to_string(), format!("dtype={dtype}")]);
    let expr = if shape.len() == 1 {
        range
    } else {
        let column: Vec<i64> = (0..shape.len()).map(|i| if i == dim { shape[dim] } else { 1 }).collect();
        let reshaped = ctx.call("reshape", &[range, py_tuple(&column)]);
        ctx.call("broadcast_to", &[reshaped, py_tuple(&shape)])
    };
    Ok(vec![ctx.assign(expr)])
}

/// Single operands sort directly. With several operands the leading
/// `num_keys` of them define a stable permutation applied to all.
fn sort(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    if eq.inputs.is_empty() || eq.inputs.len() != eq.outputs.len() {
        return Err(TranslateError::unsupported(eq, "expected one output per operand"));
    }
    let dim = params::int(eq, "dimension")?;
    let num_keys = params::usize(eq, "num_keys")?;
    if num_keys == 0 || num_keys > eq.inputs.len() {
        return Err(TranslateError::unsupported(eq, "num_keys out of range"));
    }
    let operands = ctx.atoms(&eq.inputs)?;
    if operands.len() == 1 {
        let expr = ctx.call("sort", &[operands[0].clone(), format!("axis={dim}")]);
        return Ok(vec![ctx.assign(expr)]);
    }
    let perm = ctx.temp("perm");
    let order = if num_keys == 1 {
        let mut args = vec![operands[0].clone(), format!("axis={dim}")];
        if ctx.dialect() == Dialect::PlainNumpy {
            args.push("kind='stable'".to_owned());
        }
        ctx.call("argsort", &args)
    } else {
        let keys: Vec<String> = operands[..num_keys].iter().rev().cloned().collect();
        ctx.call("lexsort", &[tuple_of(keys), format!("axis={dim}")])
    };
    let taken: Vec<String> = operands
        .iter()
        .map(|op| ctx.call("take_along_axis", &[op.clone(), perm.clone(), format!("axis={dim}")]))
        .collect();
    Ok(vec![format!("{perm} = {order}"), ctx.assign(taken.join(", "))])
}

fn lax_qualify(name: &str) -> String {
    format!("lax.{name}")
}

fn call_fields(v: &ParamValue) -> Option<Vec<(&str, &ParamValue)>> {
    match v {
        ParamValue::Call { args, .. } => args.iter().map(|(k, v)| Some((k.as_deref()?, v))).collect(),
        _ => None,
    }
}

/// Row lookups `operand[indices[..., 0]]` along axis 0, the form produced
/// by integer-array indexing.
fn gather_is_take(eq: &Equation, ctx: &TranslationContext<'_>) -> Option<TakeMode> {
    let op_rank = ctx.rank(&eq.inputs[0])?;
    let idx_rank = ctx.rank(&eq.inputs[1])?;
    let op_ty = ctx.type_of(&eq.inputs[0])?;
    let fields = eq.param("dimension_numbers").and_then(call_fields)?;
    let field = |key: &str| fields.iter().find(|(k, _)| *k == key).and_then(|(_, v)| params::as_ints(v));
    let batch = idx_rank as i64 - 1;
    let offset: Vec<i64> = (batch..batch + op_rank as i64 - 1).collect();
    let mut expected_sizes = vec![1];
    expected_sizes.extend(op_ty.dims.iter().skip(1).map(|&d| d as i64));
    let mode = match eq.param("mode") {
        Some(ParamValue::Symbol(m)) if m.ends_with("PROMISE_IN_BOUNDS") || m.ends_with("CLIP") => TakeMode::Clip,
        Some(ParamValue::Symbol(m)) if m.ends_with("FILL_OR_DROP") => TakeMode::Fill,
        _ => return None,
    };
    let matches = idx_rank >= 1
        && op_rank >= 1
        && ctx.type_of(&eq.inputs[1]).is_some_and(|t| t.dims.last() == Some(&1))
        && field("offset_dims") == Some(offset)
        && field("collapsed_slice_dims").as_deref() == Some(&[0])
        && field("start_index_map").as_deref() == Some(&[0])
        && field("operand_batching_dims").is_none_or(|v| v.is_empty())
        && params::opt_ints(eq, "slice_sizes").ok().flatten() == Some(expected_sizes);
    matches.then_some(mode)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TakeMode {
    Clip,
    Fill,
}

/// Row lookups become `take`; other gathers need `lax.gather`.
fn gather(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a, idx] = arity(eq, 2)? else { unreachable!() };
    match gather_is_take(eq, ctx) {
        Some(TakeMode::Clip) => {
            let (a, idx) = (ctx.atom(a)?, ctx.atom(idx)?);
            let expr = ctx.call("take", &[a, format!("{idx}[..., 0]"), "axis=0".to_owned(), "mode='clip'".to_owned()]);
            return Ok(vec![ctx.assign(expr)]);
        }
        // Only the framework's take can fill out-of-bounds rows.
        Some(TakeMode::Fill) if ctx.dialect() == Dialect::FrameworkNumpy => {
            let (a, idx) = (ctx.atom(a)?, ctx.atom(idx)?);
            let mut args = vec![a, format!("{idx}[..., 0]"), "axis=0".to_owned(), "mode='fill'".to_owned()];
            args.extend(keyword_params(eq, &["fill_value"]));
            let expr = ctx.call("take", &args);
            return Ok(vec![ctx.assign(expr)]);
        }
        _ => {}
    }
    ctx.require_lax(eq)?;
    let (a, idx) = (ctx.atom(a)?, ctx.atom(idx)?);
    let mut args = vec![
        a,
        idx,
        format!("dimension_numbers={}", params::py_value(params::get(eq, "dimension_numbers")?, &lax_qualify)),
        format!("slice_sizes={}", py_tuple(&params::ints(eq, "slice_sizes")?)),
    ];
    args.extend(keyword_params(eq, &["indices_are_sorted", "unique_indices", "mode", "fill_value"]));
    let expr = ctx.lax_call(eq, "gather", &args)?;
    Ok(vec![ctx.assign(expr)])
}

fn keyword_params(eq: &Equation, keys: &[&str]) -> Vec<String> {
    keys.iter()
        .filter_map(|&k| eq.param(k).map(|v| format!("{k}={}", params::py_value(v, &lax_qualify))))
        .collect()
}

/// The update computation is implied by the primitive and not emitted.
fn scatter(eq: &Equation, ctx: &mut TranslationContext<'_>, func: &str) -> Out {
    let [a, idx, updates] = arity(eq, 3)? else { unreachable!() };
    ctx.require_lax(eq)?;
    let mut args = vec![
        ctx.atom(a)?,
        ctx.atom(idx)?,
        ctx.atom(updates)?,
        format!("dimension_numbers={}", params::py_value(params::get(eq, "dimension_numbers")?, &lax_qualify)),
    ];
    args.extend(keyword_params(eq, &["indices_are_sorted", "unique_indices", "mode"]));
    let expr = ctx.lax_call(eq, func, &args)?;
    Ok(vec![ctx.assign(expr)])
}
