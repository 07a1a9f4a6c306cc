//! Equation-by-equation translation into Python statements.
//!
//! Each primitive is handled by an [`OperatorRule`] looked up by exact name
//! in a [`Registry`]. Rules read the equation's inputs and parameters
//! through a [`TranslationContext`], which owns the naming state of the
//! function being emitted, the shared [`ImportSet`] and the list of lifted
//! helper functions.
//!
//! Nested programs (conditional branches, loop bodies, called functions)
//! are lifted into top-level helpers named `fn_0`, `fn_1`, ... in the order
//! their translation completes, so an inner helper is always defined before
//! the helper that calls it.

mod control;
mod elementwise;
pub(crate) mod params;
mod tensor;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::emit::{Dialect, EmitConfig};
use crate::imports::ImportSet;
use crate::ir::{Atom, Binder, DType, Equation, Program, ShapedType};
use crate::rename::{NameEnv, HELPER_PREFIX};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("unknown operator `{primitive}`: no translation rule is registered for this Jaxpr primitive")]
    UnknownOperator { primitive: String },
    #[error("cannot translate `{primitive}`: {reason}")]
    Unsupported { primitive: String, reason: String },
    #[error("reference to unbound variable `{name}`")]
    UnboundVariable { name: String },
}

impl TranslateError {
    pub fn unsupported(eq: &Equation, reason: impl Into<String>) -> Self {
        TranslateError::Unsupported {
            primitive: eq.primitive.clone(),
            reason: reason.into(),
        }
    }

    /// The primitive the error is about, if any.
    pub fn primitive(&self) -> Option<&str> {
        match self {
            TranslateError::UnknownOperator { primitive }
            | TranslateError::Unsupported { primitive, .. } => Some(primitive),
            TranslateError::UnboundVariable { .. } => None,
        }
    }
}

pub type RenderFn =
    dyn Fn(&Equation, &mut TranslationContext<'_>) -> Result<Vec<String>, TranslateError> + Send + Sync;

/// Translation of one primitive into a list of statement lines.
///
/// Lines are relative to the enclosing function body; nested blocks carry
/// their own extra indentation. Imports are recorded through the context.
#[derive(Clone)]
pub struct OperatorRule {
    primitive: String,
    render: Arc<RenderFn>,
}

impl OperatorRule {
    pub fn new<F>(primitive: impl Into<String>, render: F) -> Self
    where
        F: Fn(&Equation, &mut TranslationContext<'_>) -> Result<Vec<String>, TranslateError>
            + Send
            + Sync
            + 'static,
    {
        Self {
            primitive: primitive.into(),
            render: Arc::new(render),
        }
    }

    pub fn primitive(&self) -> &str {
        &self.primitive
    }
}

impl fmt::Debug for OperatorRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OperatorRule").field("primitive", &self.primitive).finish_non_exhaustive()
    }
}

/// Primitive name to rule table.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    rules: HashMap<String, OperatorRule>,
}

impl Registry {
    pub fn empty() -> Self {
        Self::default()
    }

    /// A registry holding every built-in rule.
    pub fn builtin() -> Self {
        let mut reg = Self::empty();
        elementwise::register(&mut reg);
        tensor::register(&mut reg);
        control::register(&mut reg);
        reg
    }

    /// Adds a rule, replacing and returning any earlier rule for the same
    /// primitive.
    pub fn register(&mut self, rule: OperatorRule) -> Option<OperatorRule> {
        assert!(!rule.primitive.is_empty(), "operator rule with empty primitive name");
        self.rules.insert(rule.primitive.clone(), rule)
    }

    pub fn get(&self, primitive: &str) -> Option<&OperatorRule> {
        self.rules.get(primitive)
    }

    pub fn contains(&self, primitive: &str) -> bool {
        self.rules.contains_key(primitive)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Registered primitive names, sorted.
    pub fn primitives(&self) -> Vec<&str> {
        let mut names: Vec<_> = self.rules.keys().map(String::as_str).collect();
        names.sort_unstable();
        names
    }
}

/// The shared built-in registry.
pub fn default_registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(Registry::builtin)
}

/// Parameters and body of one emitted function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionBody {
    pub params: Vec<String>,
    /// Statement lines without the function's own indentation.
    pub body: Vec<String>,
}

impl FunctionBody {
    pub fn render(&self, name: &str, indent: &str) -> Vec<String> {
        let mut lines = Vec::with_capacity(self.body.len() + 1);
        lines.push(format!("def {name}({}):", self.params.join(", ")));
        lines.extend(self.body.iter().map(|l| format!("{indent}{l}")));
        lines
    }
}

/// State of one decompilation.
pub struct TranslationContext<'r> {
    registry: &'r Registry,
    config: &'r EmitConfig,
    env: NameEnv,
    types: HashMap<String, ShapedType>,
    outputs: Vec<String>,
    helpers: Vec<String>,
    helper_counter: usize,
    imports: ImportSet,
    unsupported: Vec<String>,
}

impl<'r> TranslationContext<'r> {
    pub fn new(registry: &'r Registry, config: &'r EmitConfig) -> Self {
        Self {
            registry,
            config,
            env: NameEnv::new(),
            types: HashMap::new(),
            outputs: Vec::new(),
            helpers: Vec::new(),
            helper_counter: 0,
            imports: ImportSet::new(),
            unsupported: Vec::new(),
        }
    }

    pub fn config(&self) -> &EmitConfig {
        self.config
    }

    pub fn dialect(&self) -> Dialect {
        self.config.dialect
    }

    pub fn indent(&self) -> &str {
        &self.config.indent
    }

    pub fn env(&self) -> &NameEnv {
        &self.env
    }

    pub fn imports(&self) -> &ImportSet {
        &self.imports
    }

    pub fn require(&mut self, line: impl Into<String>) {
        self.imports.require(line);
    }

    /// Helper definitions lifted so far, in definition order.
    pub fn helpers(&self) -> &[String] {
        &self.helpers
    }

    pub fn helper_count(&self) -> usize {
        self.helper_counter
    }

    /// Primitives replaced by placeholders in lenient mode, first occurrence
    /// order.
    pub fn unsupported(&self) -> &[String] {
        &self.unsupported
    }

    pub fn into_parts(self) -> (ImportSet, Vec<String>, Vec<String>) {
        (self.imports, self.helpers, self.unsupported)
    }

    /// Emitted names of the outputs of the equation being translated.
    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    /// `targets = expr`, a tuple target for several outputs, or a bare
    /// expression statement when there are none.
    pub fn assign(&self, expr: impl fmt::Display) -> String {
        match self.outputs.len() {
            0 => expr.to_string(),
            _ => format!("{} = {expr}", self.outputs.join(", ")),
        }
    }

    /// Requires the array namespace import and renders `func(args)`.
    pub fn call(&mut self, func: &str, args: &[String]) -> String {
        self.imports.require(self.config.dialect.array_import());
        format!("{func}({})", args.join(", "))
    }

    /// Renders `lax.func(args)`; only available in the framework dialect.
    pub fn lax_call(&mut self, eq: &Equation, func: &str, args: &[String]) -> Result<String, TranslateError> {
        self.require_lax(eq)?;
        Ok(format!("lax.{func}({})", args.join(", ")))
    }

    pub fn require_lax(&mut self, eq: &Equation) -> Result<(), TranslateError> {
        match self.config.dialect {
            Dialect::FrameworkNumpy => {
                self.imports.require("from jax import lax");
                Ok(())
            }
            Dialect::PlainNumpy => Err(TranslateError::unsupported(
                eq,
                "no portable equivalent in the plain-numpy dialect",
            )),
        }
    }

    /// Requires the array namespace without emitting a call.
    pub fn array_namespace(&mut self) {
        self.imports.require(self.config.dialect.array_import());
    }

    /// Imports a function from the dialect's special-function module.
    pub fn special(&mut self, func: &str) {
        self.imports.require(format!("from {} import {func}", self.config.dialect.special_module()));
    }

    /// Python text for an atom: the emitted variable name or the literal's
    /// original spelling.
    pub fn atom(&mut self, atom: &Atom) -> Result<String, TranslateError> {
        match atom {
            Atom::Var(name) => self
                .env
                .lookup(name)
                .map(str::to_owned)
                .ok_or_else(|| TranslateError::UnboundVariable { name: name.clone() }),
            Atom::Lit(lit) => {
                if matches!(lit.text.trim_start_matches('-'), "inf" | "nan") {
                    self.array_namespace();
                }
                Ok(lit.text.clone())
            }
        }
    }

    /// Like [`atom`](Self::atom), parenthesizing negative literals so the
    /// result can sit next to a binary operator.
    pub fn operand(&mut self, atom: &Atom) -> Result<String, TranslateError> {
        let text = self.atom(atom)?;
        Ok(match atom {
            Atom::Lit(lit) if lit.is_negative() => format!("({text})"),
            _ => text,
        })
    }

    /// Like [`atom`](Self::atom), wrapping literals in `asarray` so the
    /// result supports indexing and array methods.
    pub fn array(&mut self, atom: &Atom) -> Result<String, TranslateError> {
        let text = self.atom(atom)?;
        Ok(match atom {
            Atom::Lit(_) => self.call("asarray", &[text]),
            Atom::Var(_) => text,
        })
    }

    pub fn atoms(&mut self, atoms: &[Atom]) -> Result<Vec<String>, TranslateError> {
        atoms.iter().map(|a| self.atom(a)).collect()
    }

    /// The annotated type of an atom, if known.
    pub fn type_of<'a>(&'a self, atom: &'a Atom) -> Option<&'a ShapedType> {
        match atom {
            Atom::Var(name) => self.types.get(name),
            Atom::Lit(lit) => lit.ty.as_ref(),
        }
    }

    /// Rank of an atom; literals are scalars.
    pub fn rank(&self, atom: &Atom) -> Option<usize> {
        match atom {
            Atom::Lit(_) => Some(0),
            Atom::Var(_) => self.type_of(atom).map(ShapedType::rank),
        }
    }

    /// Array-namespace spelling of a dtype for the active dialect.
    pub fn dtype(&mut self, eq: &Equation, dtype: DType) -> Result<String, TranslateError> {
        let name = match dtype {
            DType::Bool => "bool_",
            DType::BF16 if self.config.dialect == Dialect::PlainNumpy => {
                return Err(TranslateError::unsupported(eq, "bfloat16 has no plain-numpy equivalent"));
            }
            other => other.long_name(),
        };
        self.array_namespace();
        Ok(name.to_owned())
    }

    /// A fresh local for values the IR does not name, such as loop indices.
    pub fn temp(&mut self, base: &str) -> String {
        self.env.fresh_temp(base)
    }

    fn bind(&mut self, binder: &Binder) -> String {
        if binder.dropped {
            return self.env.fresh_dropped();
        }
        if let Some(ty) = &binder.ty {
            self.types.insert(binder.name.clone(), ty.clone());
        }
        self.env.sanitize(&binder.name)
    }

    /// Translates one equation into statement lines, binding its outputs.
    pub fn translate_equation(&mut self, eq: &Equation) -> Result<Vec<String>, TranslateError> {
        let outputs = eq.outputs.iter().map(|b| self.bind(b)).collect();
        let saved = std::mem::replace(&mut self.outputs, outputs);
        let registry = self.registry;
        let result = match registry.get(&eq.primitive) {
            Some(rule) => (rule.render)(eq, self),
            None => Err(TranslateError::UnknownOperator {
                primitive: eq.primitive.clone(),
            }),
        };
        let result = match result {
            Err(err @ (TranslateError::UnknownOperator { .. } | TranslateError::Unsupported { .. }))
                if !self.config.strict =>
            {
                Ok(self.placeholder(eq, &err))
            }
            other => other,
        };
        self.outputs = saved;
        result
    }

    fn placeholder(&mut self, eq: &Equation, err: &TranslateError) -> Vec<String> {
        if !self.unsupported.contains(&eq.primitive) {
            self.unsupported.push(eq.primitive.clone());
        }
        let reason = match err {
            TranslateError::Unsupported { reason, .. } => reason.as_str(),
            _ => "no translation rule",
        };
        vec![
            format!("# UNSUPPORTED primitive `{}`: {reason}", eq.primitive),
            format!("raise NotImplementedError({})", params::py_str(&eq.primitive)),
        ]
    }

    /// Translates a whole program as a function body in a fresh naming scope.
    /// Parameters are the inputs followed by the constants.
    pub fn function(&mut self, program: &Program) -> Result<FunctionBody, TranslateError> {
        let saved_env = std::mem::take(&mut self.env);
        let saved_types = std::mem::take(&mut self.types);
        let names: HashSet<&str> = program
            .constvars
            .iter()
            .chain(&program.invars)
            .chain(program.equations.iter().flat_map(|e| &e.outputs))
            .filter(|b| !b.dropped)
            .map(|b| b.name.as_str())
            .collect();
        self.env.avoid(names);
        let result = self.function_in_scope(program);
        self.env = saved_env;
        self.types = saved_types;
        result
    }

    fn function_in_scope(&mut self, program: &Program) -> Result<FunctionBody, TranslateError> {
        let params = program
            .invars
            .iter()
            .chain(&program.constvars)
            .map(|b| self.bind(b))
            .collect();
        let mut body = Vec::new();
        for eq in &program.equations {
            body.extend(self.translate_equation(eq)?);
        }
        let outs = self.atoms(&program.outputs)?;
        if !outs.is_empty() {
            body.push(format!("return {}", outs.join(", ")));
        }
        if body.is_empty() {
            body.push("pass".to_owned());
        }
        Ok(FunctionBody { params, body })
    }

    /// Decompiles a nested program into a top-level helper and returns its
    /// name. Helpers are numbered in completion order.
    pub fn lift_program(&mut self, program: &Program) -> Result<String, TranslateError> {
        let body = self.function(program)?;
        let name = format!("{HELPER_PREFIX}{}", self.helper_counter);
        self.helper_counter += 1;
        let indent = self.config.indent.clone();
        self.helpers.push(body.render(&name, &indent).join("\n"));
        Ok(name)
    }
}
