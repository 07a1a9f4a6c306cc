//! Assembly of the output module: imports, lifted helpers, main function.

use std::fmt;
use std::str::FromStr;

use crate::ir::Program;
use crate::rename::{is_identifier, is_reserved};
use crate::translate::{default_registry, Registry, TranslationContext};
use crate::Error;

/// Which array library the emitted code targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Dialect {
    /// `jax.numpy`, with `jax.lax` for primitives that have no numpy spelling.
    #[default]
    FrameworkNumpy,
    /// Plain `numpy` and `scipy`.
    PlainNumpy,
}

impl Dialect {
    pub const ALL: [Dialect; 2] = [Dialect::FrameworkNumpy, Dialect::PlainNumpy];

    pub fn name(self) -> &'static str {
        match self {
            Dialect::FrameworkNumpy => "framework-numpy",
            Dialect::PlainNumpy => "plain-numpy",
        }
    }

    /// The wildcard import providing the array namespace.
    pub fn array_import(self) -> &'static str {
        match self {
            Dialect::FrameworkNumpy => "from jax.numpy import *",
            Dialect::PlainNumpy => "from numpy import *",
        }
    }

    pub fn special_module(self) -> &'static str {
        match self {
            Dialect::FrameworkNumpy => "jax.scipy.special",
            Dialect::PlainNumpy => "scipy.special",
        }
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Dialect {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Dialect::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| format!("unknown dialect `{s}` (expected framework-numpy or plain-numpy)"))
    }
}

/// Everything that parameterizes the output text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmitConfig {
    pub function_name: String,
    pub dialect: Dialect,
    /// One level of indentation.
    pub indent: String,
    /// Fail on untranslatable primitives instead of emitting placeholders.
    pub strict: bool,
}

impl Default for EmitConfig {
    fn default() -> Self {
        Self {
            function_name: "f".to_owned(),
            dialect: Dialect::default(),
            indent: "    ".to_owned(),
            strict: true,
        }
    }
}

impl EmitConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !is_identifier(&self.function_name) || is_reserved(&self.function_name) {
            return Err(Error::Config(format!(
                "`{}` cannot be used as the function name",
                self.function_name
            )));
        }
        if self.indent.is_empty() || !self.indent.chars().all(|c| c == ' ' || c == '\t') {
            return Err(Error::Config("indent must be a non-empty run of spaces or tabs".to_owned()));
        }
        Ok(())
    }
}

/// What a decompilation left out or produced besides the main function.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecompileReport {
    /// Primitives replaced by placeholders in lenient mode, in order of
    /// first occurrence. Always empty in strict mode.
    pub unsupported: Vec<String>,
    /// Number of lifted helper functions.
    pub helpers: usize,
}

/// Emits `program` as a Python module using the built-in rules.
pub fn emit_module(program: &Program, config: &EmitConfig) -> Result<String, Error> {
    emit_module_with(program, config, default_registry()).map(|(text, _)| text)
}

/// Emits `program` with a caller-supplied rule registry.
pub fn emit_module_with(
    program: &Program,
    config: &EmitConfig,
    registry: &Registry,
) -> Result<(String, DecompileReport), Error> {
    config.validate()?;
    let mut ctx = TranslationContext::new(registry, config);
    let main = ctx.function(program)?;
    let helper_count = ctx.helper_count();
    let (imports, helpers, unsupported) = ctx.into_parts();

    let mut sections = Vec::new();
    if !imports.is_empty() {
        sections.push(imports.emit().join("\n"));
    }
    sections.extend(helpers);
    sections.push(main.render(&config.function_name, &config.indent).join("\n"));
    let mut text = sections.join("\n\n");
    text.push('\n');
    Ok((
        text,
        DecompileReport {
            unsupported,
            helpers: helper_count,
        },
    ))
}

/// Text to text: tokenize, parse, validate, translate and emit.
pub fn decompile(source: &str, config: &EmitConfig) -> Result<(String, DecompileReport), Error> {
    decompile_with(source, config, default_registry())
}

pub fn decompile_with(
    source: &str,
    config: &EmitConfig,
    registry: &Registry,
) -> Result<(String, DecompileReport), Error> {
    config.validate()?;
    let program = crate::parse_source(source)?;
    emit_module_with(&program, config, registry)
}
