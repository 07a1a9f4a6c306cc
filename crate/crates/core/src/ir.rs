//! In-memory model of a parsed Jaxpr program.
//!
//! A [`Program`] is the `{ lambda consts ; inputs. let ... in (outputs) }`
//! term printed by the framework. Every statement inside it is an
//! [`Equation`] made of output binders, a primitive name, a parameter map
//! and input atoms. Nested programs live inside parameter values
//! (conditional branches, loop bodies, called functions).
//!
//! The `Display` impls form a debug printer whose output parses back to a
//! structurally identical `Program`.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

/// Scalar element kind of an array type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DType {
    F16,
    BF16,
    F32,
    F64,
    I8,
    I16,
    I32,
    I64,
    U8,
    U16,
    U32,
    U64,
    Bool,
    C64,
    C128,
}

impl DType {
    pub const ALL: [DType; 15] = [
        DType::F16,
        DType::BF16,
        DType::F32,
        DType::F64,
        DType::I8,
        DType::I16,
        DType::I32,
        DType::I64,
        DType::U8,
        DType::U16,
        DType::U32,
        DType::U64,
        DType::Bool,
        DType::C64,
        DType::C128,
    ];

    /// Parses the short spelling used in type annotations (`f32`, `bool`, ...).
    pub fn from_short_name(name: &str) -> Option<DType> {
        DType::ALL.iter().copied().find(|d| d.short_name() == name)
    }

    pub fn short_name(self) -> &'static str {
        match self {
            DType::F16 => "f16",
            DType::BF16 => "bf16",
            DType::F32 => "f32",
            DType::F64 => "f64",
            DType::I8 => "i8",
            DType::I16 => "i16",
            DType::I32 => "i32",
            DType::I64 => "i64",
            DType::U8 => "u8",
            DType::U16 => "u16",
            DType::U32 => "u32",
            DType::U64 => "u64",
            DType::Bool => "bool",
            DType::C64 => "c64",
            DType::C128 => "c128",
        }
    }

    /// Parses the long spelling used in parameters (`float32`, `int32`, ...).
    pub fn from_long_name(name: &str) -> Option<DType> {
        DType::ALL.iter().copied().find(|d| d.long_name() == name)
    }

    pub fn long_name(self) -> &'static str {
        match self {
            DType::F16 => "float16",
            DType::BF16 => "bfloat16",
            DType::F32 => "float32",
            DType::F64 => "float64",
            DType::I8 => "int8",
            DType::I16 => "int16",
            DType::I32 => "int32",
            DType::I64 => "int64",
            DType::U8 => "uint8",
            DType::U16 => "uint16",
            DType::U32 => "uint32",
            DType::U64 => "uint64",
            DType::Bool => "bool",
            DType::C64 => "complex64",
            DType::C128 => "complex128",
        }
    }

    pub fn is_integer(self) -> bool {
        matches!(
            self,
            DType::I8
                | DType::I16
                | DType::I32
                | DType::I64
                | DType::U8
                | DType::U16
                | DType::U32
                | DType::U64
        )
    }
}

impl fmt::Display for DType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// Element type plus dimensions; an empty `dims` is a scalar.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapedType {
    pub dtype: DType,
    pub dims: Vec<u64>,
}

impl ShapedType {
    pub fn new(dtype: DType, dims: Vec<u64>) -> Self {
        Self { dtype, dims }
    }

    pub fn scalar(dtype: DType) -> Self {
        Self::new(dtype, Vec::new())
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }
}

impl fmt::Display for ShapedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.dtype)?;
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{d}")?;
        }
        f.write_char(']')
    }
}

/// A variable introduction. Dropped binders are the `_` placeholder.
#[derive(Debug, Clone, PartialEq)]
pub struct Binder {
    pub name: String,
    pub ty: Option<ShapedType>,
    pub dropped: bool,
}

impl Binder {
    pub fn new(name: impl Into<String>, ty: Option<ShapedType>) -> Self {
        Self {
            name: name.into(),
            ty,
            dropped: false,
        }
    }

    pub fn dropped(ty: Option<ShapedType>) -> Self {
        Self {
            name: "_".to_owned(),
            ty,
            dropped: true,
        }
    }
}

impl fmt::Display for Binder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.dropped { "_" } else { &self.name })?;
        if let Some(ty) = &self.ty {
            write!(f, ":{ty}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
pub enum LiteralValue {
    Int(i128),
    Float(f64),
    Bool(bool),
}

/// An inline constant. `text` keeps the original spelling (without any
/// type annotation) so that emission reproduces the dump exactly.
#[derive(Debug, Clone)]
pub struct Literal {
    pub value: LiteralValue,
    pub text: String,
    pub ty: Option<ShapedType>,
}

impl Literal {
    /// Builds a literal from its source spelling, e.g. `1.0`, `-inf`, `True`.
    pub fn parse(text: &str) -> Option<Literal> {
        let value = match text {
            "True" => LiteralValue::Bool(true),
            "False" => LiteralValue::Bool(false),
            _ => {
                let body = text.strip_prefix('-').unwrap_or(text);
                let negative = body.len() != text.len();
                match body {
                    "inf" => LiteralValue::Float(if negative {
                        f64::NEG_INFINITY
                    } else {
                        f64::INFINITY
                    }),
                    "nan" => LiteralValue::Float(f64::NAN),
                    _ if body.bytes().all(|b| b.is_ascii_digit()) && !body.is_empty() => {
                        LiteralValue::Int(text.parse().ok()?)
                    }
                    _ => {
                        if !body.starts_with(|c: char| c.is_ascii_digit()) {
                            return None;
                        }
                        LiteralValue::Float(text.parse().ok()?)
                    }
                }
            }
        };
        Some(Literal {
            value,
            text: text.to_owned(),
            ty: None,
        })
    }

    pub fn with_type(mut self, ty: Option<ShapedType>) -> Self {
        self.ty = ty;
        self
    }

    pub fn is_negative(&self) -> bool {
        self.text.starts_with('-')
    }
}

impl PartialEq for Literal {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text && self.ty == other.ty
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)?;
        if let Some(ty) = &self.ty {
            write!(f, ":{ty}")?;
        }
        Ok(())
    }
}

/// An equation input: a variable reference or an inline literal.
#[derive(Debug, Clone, PartialEq)]
pub enum Atom {
    Var(String),
    Lit(Literal),
}

impl Atom {
    pub fn var(name: impl Into<String>) -> Self {
        Atom::Var(name.into())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Var(name) => f.write_str(name),
            Atom::Lit(lit) => lit.fmt(f),
        }
    }
}

/// Value of a bracketed equation parameter.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Literal(Literal),
    /// Bare or dotted name (`float32`, `None`, `GatherScatterMode.CLIP`) or
    /// an opaque `<...>` blob.
    Symbol(String),
    /// Quoted string, stored unescaped.
    Str(String),
    Tuple(Vec<ParamValue>),
    List(Vec<ParamValue>),
    /// Constructor-like value such as `np.int64(1)` or
    /// `GatherDimensionNumbers(offset_dims=(1,), ...)`.
    Call {
        name: String,
        args: Vec<(Option<String>, ParamValue)>,
    },
    Program(Box<Program>),
}

impl ParamValue {
    /// Nesting depth of brackets, parentheses and braces.
    pub fn depth(&self) -> usize {
        match self {
            ParamValue::Literal(_) | ParamValue::Symbol(_) | ParamValue::Str(_) => 0,
            ParamValue::Tuple(items) | ParamValue::List(items) => {
                1 + items.iter().map(ParamValue::depth).max().unwrap_or(0)
            }
            ParamValue::Call { args, .. } => {
                1 + args.iter().map(|(_, v)| v.depth()).max().unwrap_or(0)
            }
            ParamValue::Program(_) => 1,
        }
    }

    /// Collects every nested program, in textual order.
    pub fn programs(&self) -> Vec<&Program> {
        let mut out = Vec::new();
        self.collect_programs(&mut out);
        out
    }

    fn collect_programs<'a>(&'a self, out: &mut Vec<&'a Program>) {
        match self {
            ParamValue::Program(p) => out.push(p),
            ParamValue::Tuple(items) | ParamValue::List(items) => {
                items.iter().for_each(|v| v.collect_programs(out))
            }
            ParamValue::Call { args, .. } => args.iter().for_each(|(_, v)| v.collect_programs(out)),
            _ => {}
        }
    }

    fn write(&self, out: &mut String, indent: usize) {
        match self {
            ParamValue::Literal(lit) => {
                let _ = write!(out, "{lit}");
            }
            ParamValue::Symbol(s) => out.push_str(s),
            ParamValue::Str(s) => {
                out.push('\'');
                for c in s.chars() {
                    if c == '\'' || c == '\\' {
                        out.push('\\');
                    }
                    out.push(c);
                }
                out.push('\'');
            }
            ParamValue::Tuple(items) => {
                out.push('(');
                write_seq(out, items.iter().map(|v| (None, v)), indent);
                if items.len() == 1 {
                    out.push(',');
                }
                out.push(')');
            }
            ParamValue::List(items) => {
                out.push('[');
                write_seq(out, items.iter().map(|v| (None, v)), indent);
                out.push(']');
            }
            ParamValue::Call { name, args } => {
                out.push_str(name);
                out.push('(');
                write_seq(out, args.iter().map(|(k, v)| (k.as_deref(), v)), indent);
                out.push(')');
            }
            ParamValue::Program(p) => p.write(out, indent),
        }
    }
}

fn write_seq<'a>(
    out: &mut String,
    items: impl Iterator<Item = (Option<&'a str>, &'a ParamValue)>,
    indent: usize,
) {
    for (i, (key, value)) in items.enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        if let Some(key) = key {
            out.push_str(key);
            out.push('=');
        }
        value.write(out, indent);
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s, 0);
        f.write_str(&s)
    }
}

/// One IR statement: `outputs = primitive[params] inputs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Equation {
    pub outputs: Vec<Binder>,
    pub primitive: String,
    pub params: Vec<(String, ParamValue)>,
    pub inputs: Vec<Atom>,
}

impl Equation {
    pub fn new(
        outputs: Vec<Binder>,
        primitive: impl Into<String>,
        params: Vec<(String, ParamValue)>,
        inputs: Vec<Atom>,
    ) -> Self {
        Self {
            outputs,
            primitive: primitive.into(),
            params,
            inputs,
        }
    }

    /// Looks up a parameter by key. Keys are unique in printed dumps; the
    /// first match wins otherwise.
    pub fn param(&self, key: &str) -> Option<&ParamValue> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    fn write(&self, out: &mut String, indent: usize) {
        for (i, b) in self.outputs.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{b}");
        }
        let _ = write!(out, " = {}", self.primitive);
        if !self.params.is_empty() {
            out.push('[');
            for (i, (k, v)) in self.params.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(k);
                out.push('=');
                v.write(out, indent + 2);
            }
            out.push(']');
        }
        for atom in &self.inputs {
            let _ = write!(out, " {atom}");
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s, 0);
        f.write_str(&s)
    }
}

/// A `{ lambda consts ; inputs. let equations in (outputs) }` term.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Program {
    pub constvars: Vec<Binder>,
    pub invars: Vec<Binder>,
    pub equations: Vec<Equation>,
    pub outputs: Vec<Atom>,
}

impl Program {
    fn write(&self, out: &mut String, indent: usize) {
        let pad = " ".repeat(indent);
        out.push_str("{ lambda ");
        for (i, b) in self.constvars.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{b}");
        }
        out.push_str("; ");
        for (i, b) in self.invars.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{b}");
        }
        out.push_str(". let\n");
        for eq in &self.equations {
            out.push_str(&pad);
            out.push_str("    ");
            eq.write(out, indent + 4);
            out.push('\n');
        }
        out.push_str(&pad);
        out.push_str("  in (");
        for (i, a) in self.outputs.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{a}");
        }
        if self.outputs.len() == 1 {
            out.push(',');
        }
        out.push_str(") }");
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s, 0);
        f.write_str(&s)
    }
}

/// A broken structural invariant found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Index of the offending equation; `None` for binders and outputs.
    pub equation: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Checks def-before-use and per-scope binder uniqueness, recursing into
/// nested programs. Returns every violation found, in program order.
pub fn validate(program: &Program) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    check_scope(program, &mut violations);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

fn check_scope(program: &Program, violations: &mut Vec<Violation>) {
    let mut bound: HashSet<&str> = HashSet::new();

    for b in program.constvars.iter().chain(&program.invars) {
        if !b.dropped && !bound.insert(&b.name) {
            violations.push(Violation {
                equation: None,
                message: format!("duplicate binder {} in program inputs", b.name),
            });
        }
    }

    for (idx, eq) in program.equations.iter().enumerate() {
        for atom in &eq.inputs {
            if let Atom::Var(name) = atom {
                if !bound.contains(name.as_str()) {
                    violations.push(Violation {
                        equation: Some(idx),
                        message: format!("undefined variable {name} at equation {idx}"),
                    });
                }
            }
        }
        for (_, value) in &eq.params {
            for nested in value.programs() {
                let mut inner = Vec::new();
                check_scope(nested, &mut inner);
                violations.extend(inner.into_iter().map(|v| Violation {
                    equation: Some(idx),
                    message: format!("in program nested at equation {idx}: {}", v.message),
                }));
            }
        }
        for b in &eq.outputs {
            if !b.dropped && !bound.insert(&b.name) {
                violations.push(Violation {
                    equation: Some(idx),
                    message: format!("duplicate binder {} at equation {idx}", b.name),
                });
            }
        }
    }

    for atom in &program.outputs {
        if let Atom::Var(name) = atom {
            if !bound.contains(name.as_str()) {
                violations.push(Violation {
                    equation: None,
                    message: format!("undefined variable {name} in program outputs"),
                });
            }
        }
    }
}
