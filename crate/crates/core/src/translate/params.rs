//! Typed access to equation parameters and their Python spelling.

use crate::ir::{DType, Equation, LiteralValue, ParamValue, Program};

use super::TranslateError;

pub fn get<'e>(eq: &'e Equation, key: &str) -> Result<&'e ParamValue, TranslateError> {
    eq.param(key)
        .ok_or_else(|| TranslateError::unsupported(eq, format!("missing parameter `{key}`")))
}

fn bad(eq: &Equation, key: &str, what: &str) -> TranslateError {
    TranslateError::unsupported(eq, format!("parameter `{key}` is not {what}"))
}

pub fn is_none(v: &ParamValue) -> bool {
    matches!(v, ParamValue::Symbol(s) if s == "None")
}

/// Integer value, looking through wrappers such as `np.int64(3)`.
pub fn as_int(v: &ParamValue) -> Option<i64> {
    match v {
        ParamValue::Literal(lit) => match lit.value {
            LiteralValue::Int(i) => i64::try_from(i).ok(),
            _ => None,
        },
        ParamValue::Call { args, .. } if args.len() == 1 && args[0].0.is_none() => as_int(&args[0].1),
        _ => None,
    }
}

pub fn as_ints(v: &ParamValue) -> Option<Vec<i64>> {
    match v {
        ParamValue::Tuple(items) | ParamValue::List(items) => items.iter().map(as_int).collect(),
        _ => None,
    }
}

pub fn as_bool(v: &ParamValue) -> Option<bool> {
    match v {
        ParamValue::Literal(lit) => match lit.value {
            LiteralValue::Bool(b) => Some(b),
            _ => None,
        },
        _ => None,
    }
}

pub fn int(eq: &Equation, key: &str) -> Result<i64, TranslateError> {
    as_int(get(eq, key)?).ok_or_else(|| bad(eq, key, "an integer"))
}

pub fn usize(eq: &Equation, key: &str) -> Result<usize, TranslateError> {
    usize::try_from(int(eq, key)?).map_err(|_| bad(eq, key, "a non-negative integer"))
}

pub fn ints(eq: &Equation, key: &str) -> Result<Vec<i64>, TranslateError> {
    as_ints(get(eq, key)?).ok_or_else(|| bad(eq, key, "an integer tuple"))
}

/// An integer tuple, or `None` when absent or spelled `None`.
pub fn opt_ints(eq: &Equation, key: &str) -> Result<Option<Vec<i64>>, TranslateError> {
    match eq.param(key) {
        None => Ok(None),
        Some(v) if is_none(v) => Ok(None),
        Some(v) => as_ints(v).map(Some).ok_or_else(|| bad(eq, key, "an integer tuple")),
    }
}

/// Boolean flag, `default` when absent.
pub fn flag(eq: &Equation, key: &str, default: bool) -> Result<bool, TranslateError> {
    match eq.param(key) {
        None => Ok(default),
        Some(v) => as_bool(v).ok_or_else(|| bad(eq, key, "a boolean")),
    }
}

pub fn dtype(eq: &Equation, key: &str) -> Result<DType, TranslateError> {
    match get(eq, key)? {
        ParamValue::Symbol(s) => DType::from_long_name(s)
            .ok_or_else(|| TranslateError::unsupported(eq, format!("unknown dtype `{s}`"))),
        _ => Err(bad(eq, key, "a dtype name")),
    }
}

pub fn program<'e>(eq: &'e Equation, key: &str) -> Result<&'e Program, TranslateError> {
    match get(eq, key)? {
        ParamValue::Program(p) => Ok(p),
        _ => Err(bad(eq, key, "a program")),
    }
}

/// Python tuple literal for a list of integers.
pub fn py_tuple(values: &[i64]) -> String {
    match values {
        [one] => format!("({one},)"),
        _ => format!(
            "({})",
            values.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
        ),
    }
}

/// Python text for a parameter value. `qualify` rewrites bare and dotted
/// names (for example to add a module prefix); integer wrappers such as
/// `np.int64(1)` collapse to the plain integer.
pub fn py_value(v: &ParamValue, qualify: &dyn Fn(&str) -> String) -> String {
    match v {
        ParamValue::Literal(lit) => lit.text.clone(),
        ParamValue::Symbol(s) if s == "None" => "None".to_owned(),
        ParamValue::Symbol(s) => qualify(s),
        ParamValue::Str(s) => py_str(s),
        ParamValue::Tuple(items) => {
            let parts: Vec<_> = items.iter().map(|v| py_value(v, qualify)).collect();
            match parts.len() {
                1 => format!("({},)", parts[0]),
                _ => format!("({})", parts.join(", ")),
            }
        }
        ParamValue::List(items) => {
            let parts: Vec<_> = items.iter().map(|v| py_value(v, qualify)).collect();
            format!("[{}]", parts.join(", "))
        }
        ParamValue::Call { .. } if as_int(v).is_some() => as_int(v).unwrap_or_default().to_string(),
        ParamValue::Call { name, args } => {
            let parts: Vec<_> = args
                .iter()
                .map(|(k, v)| match k {
                    Some(k) => format!("{k}={}", py_value(v, qualify)),
                    None => py_value(v, qualify),
                })
                .collect();
            format!("{}({})", qualify(name), parts.join(", "))
        }
        ParamValue::Program(_) => "None".to_owned(),
    }
}

/// Python string literal for an axis name given as a bare symbol or string.
/// Opaque reprs such as `<axis 0x...>` have no usable spelling.
pub fn axis_name(v: &ParamValue) -> Option<String> {
    match v {
        ParamValue::Symbol(s) if s.starts_with('<') => None,
        ParamValue::Symbol(s) | ParamValue::Str(s) => Some(py_str(s)),
        _ => None,
    }
}

/// Single-quoted Python string literal.
pub fn py_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('\'');
    for c in s.chars() {
        match c {
            '\\' | '\'' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 || c as u32 == 0x7f => out.push_str(&format!("\\x{:02x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('\'');
    out
}
