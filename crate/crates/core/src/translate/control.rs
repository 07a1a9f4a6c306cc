//! Higher-order primitives. Every nested program is lifted into a helper
//! and the equation becomes a call, a dispatch or a loop over helpers.

use crate::emit::Dialect;
use crate::ir::{Atom, Equation, ParamValue, Program};

use super::params::{self, py_tuple};
use super::{OperatorRule, Registry, TranslateError, TranslationContext};

type Out = Result<Vec<String>, TranslateError>;

/// Call-like primitives and the parameter holding the called program.
const CALLS: &[(&str, &[&str])] = &[
    ("pjit", &["jaxpr"]),
    ("closed_call", &["call_jaxpr"]),
    ("core_call", &["call_jaxpr"]),
    ("remat2", &["jaxpr"]),
    ("checkpoint", &["jaxpr"]),
    ("custom_jvp_call", &["call_jaxpr"]),
    ("custom_vjp_call", &["call_jaxpr", "fun_jaxpr"]),
    ("custom_vjp_call_jaxpr", &["fun_jaxpr", "call_jaxpr"]),
];

pub(super) fn register(reg: &mut Registry) {
    for &(prim, keys) in CALLS {
        reg.register(OperatorRule::new(prim, move |eq, ctx| call(eq, ctx, keys)));
    }
    reg.register(OperatorRule::new("cond", cond));
    reg.register(OperatorRule::new("while", while_loop));
    reg.register(OperatorRule::new("scan", scan));
    reg.register(OperatorRule::new("xla_pmap", pmap));
    for prim in ["psum", "pmax", "pmin"] {
        reg.register(OperatorRule::new(prim, move |eq, ctx| collective(eq, ctx, prim)));
    }
    reg.register(OperatorRule::new("axis_index", axis_index));
}

/// Lifts a nested program. Its constants would have no value at the call
/// site, so only programs without constvars are accepted.
fn lift(eq: &Equation, ctx: &mut TranslationContext<'_>, program: &Program) -> Result<String, TranslateError> {
    if !program.constvars.is_empty() {
        return Err(TranslateError::unsupported(eq, "nested program with constants"));
    }
    ctx.lift_program(program)
}

fn call_expr(func: &str, args: &[String]) -> String {
    format!("{func}({})", args.join(", "))
}

fn call(eq: &Equation, ctx: &mut TranslationContext<'_>, keys: &[&str]) -> Out {
    let program = keys
        .iter()
        .find_map(|k| match eq.param(k) {
            Some(ParamValue::Program(p)) => Some(p.as_ref()),
            _ => None,
        })
        .ok_or_else(|| TranslateError::unsupported(eq, format!("missing parameter `{}`", keys[0])))?;
    check_arity(eq, program)?;
    let helper = lift(eq, ctx, program)?;
    let args = ctx.atoms(&eq.inputs)?;
    Ok(vec![ctx.assign(call_expr(&helper, &args))])
}

fn check_arity(eq: &Equation, program: &Program) -> Result<(), TranslateError> {
    if program.invars.len() != eq.inputs.len() || program.outputs.len() != eq.outputs.len() {
        return Err(TranslateError::unsupported(eq, "nested program arity does not match the equation"));
    }
    Ok(())
}

/// `(fn_0, fn_1, ...)[index](operands)`.
fn cond(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let Some((index, operands)) = eq.inputs.split_first() else {
        return Err(TranslateError::unsupported(eq, "expected a branch index"));
    };
    let branches = match params::get(eq, "branches")? {
        ParamValue::Tuple(items) | ParamValue::List(items) if !items.is_empty() => items,
        _ => return Err(TranslateError::unsupported(eq, "`branches` is not a non-empty tuple of programs")),
    };
    let mut names = Vec::with_capacity(branches.len());
    for branch in branches {
        let ParamValue::Program(program) = branch else {
            return Err(TranslateError::unsupported(eq, "`branches` holds a non-program value"));
        };
        if program.invars.len() != operands.len() || program.outputs.len() != eq.outputs.len() {
            return Err(TranslateError::unsupported(eq, "branch arity does not match the equation"));
        }
        names.push(lift(eq, ctx, program)?);
    }
    let table = match names.len() {
        1 => format!("({},)", names[0]),
        _ => format!("({})", names.join(", ")),
    };
    let index = ctx.atom(index)?;
    let args = ctx.atoms(operands)?;
    Ok(vec![ctx.assign(format!("{table}[{index}]({})", args.join(", ")))])
}

/// Splits `items` into consecutive groups of the given sizes.
fn groups<'a>(eq: &Equation, items: &'a [Atom], sizes: &[usize]) -> Result<Vec<&'a [Atom]>, TranslateError> {
    if sizes.iter().sum::<usize>() > items.len() {
        return Err(TranslateError::unsupported(eq, "fewer inputs than the declared constants and carries"));
    }
    let mut rest = items;
    let mut out = Vec::with_capacity(sizes.len() + 1);
    for &n in sizes {
        let (head, tail) = rest.split_at(n);
        out.push(head);
        rest = tail;
    }
    out.push(rest);
    Ok(out)
}

fn tuple_assign(targets: &[String], values: &[String]) -> String {
    format!("{} = {}", targets.join(", "), values.join(", "))
}

/// ```text
/// carry = init
/// while fn_cond(cond_consts, carry):
///     carry = fn_body(body_consts, carry)
/// ```
fn while_loop(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let body = params::program(eq, "body_jaxpr")?;
    let cond = params::program(eq, "cond_jaxpr")?;
    let body_n = params::usize(eq, "body_nconsts")?;
    let cond_n = params::usize(eq, "cond_nconsts")?;
    let parts = groups(eq, &eq.inputs, &[cond_n, body_n])?;
    let (cond_consts, body_consts, init) = (parts[0], parts[1], parts[2]);
    if init.is_empty() || init.len() != eq.outputs.len() {
        return Err(TranslateError::unsupported(eq, "one output per loop carry expected"));
    }
    if cond.invars.len() != cond_n + init.len()
        || cond.outputs.len() != 1
        || body.invars.len() != body_n + init.len()
        || body.outputs.len() != init.len()
    {
        return Err(TranslateError::unsupported(eq, "loop program arity does not match the equation"));
    }
    // Lifted in parameter order: body first.
    let body_fn = lift(eq, ctx, body)?;
    let cond_fn = lift(eq, ctx, cond)?;
    let carry = ctx.outputs().to_vec();
    let init = ctx.atoms(init)?;
    let mut cond_args = ctx.atoms(cond_consts)?;
    cond_args.extend(carry.iter().cloned());
    let mut body_args = ctx.atoms(body_consts)?;
    body_args.extend(carry.iter().cloned());
    let indent = ctx.indent().to_owned();
    Ok(vec![
        tuple_assign(&carry, &init),
        format!("while {}:", call_expr(&cond_fn, &cond_args)),
        format!("{indent}{} = {}", carry.join(", "), call_expr(&body_fn, &body_args)),
    ])
}

/// ```text
/// carry = init
/// ys = [None] * length
/// for i in range(length):
///     carry, ys[i] = fn_body(consts, carry, xs[i])
/// ys = stack(ys)
/// ```
fn scan(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let body = params::program(eq, "jaxpr")?;
    let length = params::usize(eq, "length")?;
    let num_consts = params::usize(eq, "num_consts")?;
    let num_carry = params::usize(eq, "num_carry")?;
    let reverse = params::flag(eq, "reverse", false)?;
    let parts = groups(eq, &eq.inputs, &[num_consts, num_carry])?;
    let (consts, init, xs) = (parts[0], parts[1], parts[2]);
    if eq.outputs.len() < num_carry {
        return Err(TranslateError::unsupported(eq, "fewer outputs than loop carries"));
    }
    if body.invars.len() != eq.inputs.len() || body.outputs.len() != eq.outputs.len() {
        return Err(TranslateError::unsupported(eq, "scan body arity does not match the equation"));
    }
    let outputs = ctx.outputs().to_vec();
    let (carry, ys) = outputs.split_at(num_carry);
    let init = ctx.atoms(init)?;
    let mut lines = Vec::new();
    if !carry.is_empty() {
        lines.push(tuple_assign(carry, &init));
    }
    if length == 0 {
        for (name, binder) in ys.iter().zip(&eq.outputs[num_carry..]) {
            let Some(ty) = &binder.ty else {
                return Err(TranslateError::unsupported(eq, "zero-length scan needs annotated outputs"));
            };
            let dims: Vec<i64> = ty.dims.iter().map(|&d| d as i64).collect();
            let dtype = ctx.dtype(eq, ty.dtype)?;
            lines.push(format!("{name} = {}", ctx.call("zeros", &[py_tuple(&dims), format!("dtype={dtype}")])));
        }
        // The body is still lifted so helper numbering does not depend on
        // the trip count.
        lift(eq, ctx, body)?;
        return Ok(lines);
    }
    let helper = lift(eq, ctx, body)?;
    let i = ctx.temp("i");
    let mut args = ctx.atoms(consts)?;
    args.extend(carry.iter().cloned());
    for x in xs {
        args.push(format!("{}[{i}]", ctx.array(x)?));
    }
    for y in ys {
        lines.push(format!("{y} = [None] * {length}"));
    }
    let range = if reverse {
        format!("reversed(range({length}))")
    } else {
        format!("range({length})")
    };
    lines.push(format!("for {i} in {range}:"));
    let targets: Vec<String> = carry
        .iter()
        .cloned()
        .chain(ys.iter().map(|y| format!("{y}[{i}]")))
        .collect();
    let call = call_expr(&helper, &args);
    let indent = ctx.indent().to_owned();
    lines.push(match targets.len() {
        0 => format!("{indent}{call}"),
        _ => format!("{indent}{} = {call}", targets.join(", ")),
    });
    for y in ys {
        lines.push(format!("{y} = {}", ctx.call("stack", std::slice::from_ref(y))));
    }
    Ok(lines)
}

fn mapped_axes(eq: &Equation, key: &str) -> Result<Vec<Option<i64>>, TranslateError> {
    let bad = || TranslateError::unsupported(eq, format!("parameter `{key}` is not a tuple of axes"));
    match params::get(eq, key)? {
        ParamValue::Tuple(items) | ParamValue::List(items) => items
            .iter()
            .map(|v| match v {
                v if params::is_none(v) => Ok(None),
                v => params::as_int(v).map(Some).ok_or_else(bad),
            })
            .collect(),
        _ => Err(bad()),
    }
}

fn axis_text(axis: Option<i64>) -> String {
    axis.map_or_else(|| "None".to_owned(), |a| a.to_string())
}

/// A parallel map evaluated on one device: `vmap` over the mapped axis in
/// the framework dialect, a stacked Python loop in plain numpy.
fn pmap(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let body = params::program(eq, "call_jaxpr")?;
    check_arity(eq, body)?;
    let size = params::usize(eq, "axis_size")?;
    let in_axes = mapped_axes(eq, "in_axes")?;
    let out_axes = mapped_axes(eq, "out_axes")?;
    if in_axes.len() != eq.inputs.len() || out_axes.len() != eq.outputs.len() {
        return Err(TranslateError::unsupported(eq, "one axis per input and output expected"));
    }
    let axis_name = eq.param("axis_name").and_then(params::axis_name);
    let helper = lift(eq, ctx, body)?;
    let args = ctx.atoms(&eq.inputs)?;
    let comment = format!("# parallel map over {size} devices, evaluated on one device");
    match ctx.dialect() {
        Dialect::FrameworkNumpy => {
            ctx.require("from jax import vmap");
            let ins: Vec<String> = in_axes.into_iter().map(axis_text).collect();
            let outs: Vec<String> = out_axes.into_iter().map(axis_text).collect();
            let mut options = vec![
                format!("in_axes=({})", match ins.len() {
                    1 => format!("{},", ins[0]),
                    _ => ins.join(", "),
                }),
                format!("out_axes={}", match outs.len() {
                    1 => outs[0].clone(),
                    _ => format!("({})", outs.join(", ")),
                }),
            ];
            if let Some(name) = axis_name {
                options.push(format!("axis_name={name}"));
            }
            let mapped = format!("vmap({helper}, {})", options.join(", "));
            Ok(vec![comment, ctx.assign(call_expr(&mapped, &args))])
        }
        Dialect::PlainNumpy => {
            if out_axes.iter().any(|&a| a != Some(0)) || in_axes.iter().any(|&a| a.is_some_and(|a| a != 0)) {
                return Err(TranslateError::unsupported(eq, "only leading-axis mapping has a plain-numpy form"));
            }
            let k = ctx.temp("k");
            let per_device: Vec<String> = args
                .iter()
                .zip(&in_axes)
                .map(|(a, axis)| match axis {
                    Some(_) => format!("{a}[{k}]"),
                    None => a.clone(),
                })
                .collect();
            let results = format!("[{} for {k} in range({size})]", call_expr(&helper, &per_device));
            let expr = match eq.outputs.len() {
                1 => ctx.call("stack", &[results]),
                _ => {
                    ctx.array_namespace();
                    format!("map(stack, zip(*{results}))")
                }
            };
            Ok(vec![comment, ctx.assign(expr)])
        }
    }
}

fn collective(eq: &Equation, ctx: &mut TranslationContext<'_>, prim: &str) -> Out {
    if eq.inputs.is_empty() {
        return Err(TranslateError::unsupported(eq, "expected at least one operand"));
    }
    if eq.param("axis_index_groups").is_some_and(|v| !params::is_none(v)) {
        return Err(TranslateError::unsupported(eq, "axis_index_groups is not supported"));
    }
    let axes = match params::get(eq, "axes")? {
        ParamValue::Tuple(items) => items
            .iter()
            .map(|v| params::axis_name(v).or_else(|| params::as_int(v).map(|i| i.to_string())))
            .collect::<Option<Vec<_>>>(),
        _ => None,
    }
    .ok_or_else(|| TranslateError::unsupported(eq, "parameter `axes` is not a tuple of axis names"))?;
    let axes = match axes.len() {
        1 => format!("({},)", axes[0]),
        _ => format!("({})", axes.join(", ")),
    };
    let operands = ctx.atoms(&eq.inputs)?;
    let operand = match operands.len() {
        1 => operands[0].clone(),
        _ => format!("({})", operands.join(", ")),
    };
    let expr = ctx.lax_call(eq, prim, &[operand, axes])?;
    Ok(vec![ctx.assign(expr)])
}

fn axis_index(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let name = params::axis_name(params::get(eq, "axis_name")?)
        .ok_or_else(|| TranslateError::unsupported(eq, "axis name has no usable spelling"))?;
    let expr = ctx.lax_call(eq, "axis_index", &[name])?;
    Ok(vec![ctx.assign(expr)])
}
