//! Element-wise primitives: arithmetic, comparisons, bitwise logic,
//! transcendental functions, selection and dtype conversion.

use crate::emit::Dialect;
use crate::ir::{Atom, DType, Equation, ParamValue};

use super::params;
use super::{OperatorRule, Registry, TranslateError, TranslationContext};

type Out = Result<Vec<String>, TranslateError>;

pub(super) fn arity(eq: &Equation, n: usize) -> Result<&[Atom], TranslateError> {
    if eq.inputs.len() == n {
        Ok(&eq.inputs)
    } else {
        Err(TranslateError::unsupported(
            eq,
            format!("expected {n} inputs, found {}", eq.inputs.len()),
        ))
    }
}

const OPERATORS: &[(&str, &str)] = &[
    ("add", "+"),
    ("add_any", "+"),
    ("sub", "-"),
    ("mul", "*"),
    ("pow", "**"),
    ("eq", "=="),
    ("ne", "!="),
    ("lt", "<"),
    ("le", "<="),
    ("gt", ">"),
    ("ge", ">="),
];

const BINARY_FUNCTIONS: &[(&str, &str)] = &[
    ("max", "maximum"),
    ("min", "minimum"),
    ("atan2", "arctan2"),
    ("nextafter", "nextafter"),
    ("rem", "fmod"),
    ("and", "bitwise_and"),
    ("or", "bitwise_or"),
    ("xor", "bitwise_xor"),
    ("shift_left", "left_shift"),
    ("shift_right_arithmetic", "right_shift"),
];

const UNARY_FUNCTIONS: &[(&str, &str)] = &[
    ("exp", "exp"),
    ("exp2", "exp2"),
    ("log", "log"),
    ("log1p", "log1p"),
    ("expm1", "expm1"),
    ("sin", "sin"),
    ("cos", "cos"),
    ("tan", "tan"),
    ("asin", "arcsin"),
    ("acos", "arccos"),
    ("atan", "arctan"),
    ("sinh", "sinh"),
    ("cosh", "cosh"),
    ("tanh", "tanh"),
    ("asinh", "arcsinh"),
    ("acosh", "arccosh"),
    ("atanh", "arctanh"),
    ("sqrt", "sqrt"),
    ("cbrt", "cbrt"),
    ("abs", "abs"),
    ("sign", "sign"),
    ("floor", "floor"),
    ("ceil", "ceil"),
    ("is_finite", "isfinite"),
    ("square", "square"),
    ("not", "bitwise_not"),
    ("copy", "copy"),
    ("copy_p", "copy"),
];

const SPECIAL_FUNCTIONS: &[(&str, &str)] = &[
    ("erf", "erf"),
    ("erfc", "erfc"),
    ("erf_inv", "erfinv"),
    ("lgamma", "gammaln"),
    ("digamma", "digamma"),
];

pub(super) fn register(reg: &mut Registry) {
    for &(prim, op) in OPERATORS {
        reg.register(OperatorRule::new(prim, move |eq, ctx| binary_operator(eq, ctx, op)));
    }
    for &(prim, func) in BINARY_FUNCTIONS {
        reg.register(OperatorRule::new(prim, move |eq, ctx| {
            let [a, b] = arity(eq, 2)? else { unreachable!() };
            let args = vec![ctx.atom(a)?, ctx.atom(b)?];
            let expr = ctx.call(func, &args);
            Ok(vec![ctx.assign(expr)])
        }));
    }
    for &(prim, func) in UNARY_FUNCTIONS {
        reg.register(OperatorRule::new(prim, move |eq, ctx| {
            let [a] = arity(eq, 1)? else { unreachable!() };
            let arg = ctx.atom(a)?;
            let expr = ctx.call(func, &[arg]);
            Ok(vec![ctx.assign(expr)])
        }));
    }
    for &(prim, func) in SPECIAL_FUNCTIONS {
        reg.register(OperatorRule::new(prim, move |eq, ctx| {
            let [a] = arity(eq, 1)? else { unreachable!() };
            let arg = ctx.atom(a)?;
            ctx.special(func);
            Ok(vec![ctx.assign(format!("{func}({arg})"))])
        }));
    }
    reg.register(OperatorRule::new("div", div));
    reg.register(OperatorRule::new("neg", neg));
    reg.register(OperatorRule::new("integer_pow", integer_pow));
    reg.register(OperatorRule::new("logistic", logistic));
    reg.register(OperatorRule::new("rsqrt", rsqrt));
    reg.register(OperatorRule::new("round", round));
    reg.register(OperatorRule::new("stop_gradient", stop_gradient));
    reg.register(OperatorRule::new("device_put", device_put));
    reg.register(OperatorRule::new("convert_element_type", convert_element_type));
    reg.register(OperatorRule::new("select_n", select_n));
    reg.register(OperatorRule::new("clamp", clamp));
    reg.register(OperatorRule::new("shift_right_logical", shift_right_logical));
}

fn binary_operator(eq: &Equation, ctx: &mut TranslationContext<'_>, op: &str) -> Out {
    let [a, b] = arity(eq, 2)? else { unreachable!() };
    let (a, b) = (ctx.operand(a)?, ctx.operand(b)?);
    Ok(vec![ctx.assign(format!("{a} {op} {b}"))])
}

/// Integer division truncates toward zero, unlike Python's `/`.
fn div(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let int_dtype = eq
        .outputs
        .first()
        .and_then(|b| b.ty.as_ref())
        .map(|t| t.dtype)
        .filter(|d| d.is_integer());
    let Some(int_dtype) = int_dtype else {
        return binary_operator(eq, ctx, "/");
    };
    let [a, b] = arity(eq, 2)? else { unreachable!() };
    let (a, b) = (ctx.atom(a)?, ctx.atom(b)?);
    let expr = match ctx.dialect() {
        Dialect::FrameworkNumpy => ctx.lax_call(eq, "div", &[a, b])?,
        Dialect::PlainNumpy => {
            let dtype = ctx.dtype(eq, int_dtype)?;
            let quotient = ctx.call("trunc", &[format!("{a} / {b}")]);
            ctx.call("asarray", &[quotient, format!("dtype={dtype}")])
        }
    };
    Ok(vec![ctx.assign(expr)])
}

fn neg(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let a = ctx.operand(a)?;
    Ok(vec![ctx.assign(format!("-{a}"))])
}

fn integer_pow(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let y = params::int(eq, "y")?;
    let a = ctx.operand(a)?;
    let y = if y < 0 { format!("({y})") } else { y.to_string() };
    Ok(vec![ctx.assign(format!("{a} ** {y}"))])
}

fn logistic(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let expr = match ctx.dialect() {
        Dialect::FrameworkNumpy => {
            let a = ctx.atom(a)?;
            ctx.lax_call(eq, "logistic", &[a])?
        }
        Dialect::PlainNumpy => {
            let a = ctx.operand(a)?;
            let e = ctx.call("exp", &[format!("-{a}")]);
            format!("1.0 / (1.0 + {e})")
        }
    };
    Ok(vec![ctx.assign(expr)])
}

fn rsqrt(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let a = ctx.atom(a)?;
    let expr = match ctx.dialect() {
        Dialect::FrameworkNumpy => ctx.lax_call(eq, "rsqrt", &[a])?,
        Dialect::PlainNumpy => format!("1.0 / {}", ctx.call("sqrt", &[a])),
    };
    Ok(vec![ctx.assign(expr)])
}

fn round(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let to_even = match eq.param("rounding_method") {
        None => false,
        Some(ParamValue::Symbol(s)) if s.ends_with("TO_NEAREST_EVEN") => true,
        Some(ParamValue::Symbol(s)) if s.ends_with("AWAY_FROM_ZERO") => false,
        Some(v) => match params::as_int(v) {
            Some(0) => false,
            Some(1) => true,
            _ => return Err(TranslateError::unsupported(eq, format!("unknown rounding method `{v}`"))),
        },
    };
    let a = ctx.atom(a)?;
    let expr = if to_even {
        ctx.call("round", &[a])
    } else {
        let sign = ctx.call("sign", std::slice::from_ref(&a));
        let abs = ctx.call("abs", &[a]);
        let floor = ctx.call("floor", &[format!("{abs} + 0.5")]);
        format!("{sign} * {floor}")
    };
    Ok(vec![ctx.assign(expr)])
}

fn stop_gradient(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let a = ctx.atom(a)?;
    let expr = match ctx.dialect() {
        Dialect::FrameworkNumpy => ctx.lax_call(eq, "stop_gradient", &[a])?,
        Dialect::PlainNumpy => a,
    };
    Ok(vec![ctx.assign(expr)])
}

/// Placement is meaningless once decompiled, so values pass through.
fn device_put(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    if eq.inputs.len() != eq.outputs.len() {
        return Err(TranslateError::unsupported(eq, "expected one output per input"));
    }
    let atoms = ctx.atoms(&eq.inputs)?;
    Ok(vec![ctx.assign(atoms.join(", "))])
}

fn convert_element_type(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a] = arity(eq, 1)? else { unreachable!() };
    let dtype = params::dtype(eq, "new_dtype")?;
    let dtype = ctx.dtype(eq, dtype)?;
    let a = ctx.atom(a)?;
    let expr = ctx.call("asarray", &[a, format!("dtype={dtype}")]);
    Ok(vec![ctx.assign(expr)])
}

/// `select_n(p, *cases)` picks `cases[p]`.
fn select_n(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let Some((pred, cases)) = eq.inputs.split_first() else {
        return Err(TranslateError::unsupported(eq, "expected a predicate and at least one case"));
    };
    if cases.is_empty() {
        return Err(TranslateError::unsupported(eq, "expected at least one case"));
    }
    let pred = ctx.atom(pred)?;
    let cases = ctx.atoms(cases)?;
    let expr = match cases.as_slice() {
        [only] => only.clone(),
        [on_false, on_true] => ctx.call("where", &[pred, on_true.clone(), on_false.clone()]),
        _ => match ctx.dialect() {
            Dialect::FrameworkNumpy => {
                let mut args = vec![pred];
                args.extend(cases);
                ctx.lax_call(eq, "select_n", &args)?
            }
            Dialect::PlainNumpy => ctx.call("choose", &[pred, format!("({})", cases.join(", "))]),
        },
    };
    Ok(vec![ctx.assign(expr)])
}

/// `clamp(lo, x, hi)`.
fn clamp(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [lo, x, hi] = arity(eq, 3)? else { unreachable!() };
    let args = vec![ctx.atom(x)?, ctx.atom(lo)?, ctx.atom(hi)?];
    let expr = ctx.call("clip", &args);
    Ok(vec![ctx.assign(expr)])
}

/// Plain numpy shifts the unsigned view, then reinterprets the bits.
fn shift_right_logical(eq: &Equation, ctx: &mut TranslationContext<'_>) -> Out {
    let [a, b] = arity(eq, 2)? else { unreachable!() };
    if ctx.dialect() == Dialect::FrameworkNumpy {
        let args = vec![ctx.atom(a)?, ctx.atom(b)?];
        let expr = ctx.lax_call(eq, "shift_right_logical", &args)?;
        return Ok(vec![ctx.assign(expr)]);
    }
    let dtype = eq.outputs.first().and_then(|o| o.ty.as_ref()).map(|t| t.dtype);
    let unsigned = match dtype {
        Some(DType::I8 | DType::U8) => DType::U8,
        Some(DType::I16 | DType::U16) => DType::U16,
        Some(DType::I32 | DType::U32) => DType::U32,
        Some(DType::I64 | DType::U64) => DType::U64,
        _ => return Err(TranslateError::unsupported(eq, "logical shift needs an integer output type")),
    };
    let dtype = dtype.expect("matched above");
    let (unsigned, signed) = (ctx.dtype(eq, unsigned)?, ctx.dtype(eq, dtype)?);
    let mut views = Vec::with_capacity(2);
    for x in [a, b] {
        let x = ctx.atom(x)?;
        let cast = ctx.call("asarray", &[x, format!("dtype={signed}")]);
        views.push(format!("{cast}.view({unsigned})"));
    }
    let shifted = ctx.call("right_shift", &views);
    Ok(vec![ctx.assign(format!("{shifted}.view({signed})"))])
}
