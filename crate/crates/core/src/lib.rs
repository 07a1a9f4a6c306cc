//! Decompiler from textual Jaxpr to editable Python.
//!
//! ```
//! use jaxpr_decompiler::{decompile, EmitConfig};
//!
//! let src = "{ lambda ; a:f32[]. let b:f32[] = exp a in (b,) }";
//! let (python, _) = decompile(src, &EmitConfig::default()).unwrap();
//! assert_eq!(python, "from jax.numpy import *\n\ndef f(a):\n    b = exp(a)\n    return b\n");
//! ```
//!
//! The pipeline is [`lexer::tokenize`], [`parser::parse_program`],
//! [`ir::validate`], then translation of each equation through a
//! [`Registry`] of [`OperatorRule`]s, and finally [`emit_module`].

pub mod emit;
pub mod imports;
pub mod ir;
pub mod lexer;
pub mod parser;
pub mod rename;
pub mod translate;

use thiserror::Error;

pub use emit::{decompile, decompile_with, emit_module, emit_module_with, DecompileReport, Dialect, EmitConfig};
pub use imports::ImportSet;
pub use ir::Program;
pub use lexer::LexError;
pub use parser::ParseError;
pub use translate::{default_registry, OperatorRule, Registry, TranslateError, TranslationContext};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("lex error at {0}")]
    Lex(#[from] LexError),
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Translate(#[from] TranslateError),
    #[error("invalid configuration: {0}")]
    Config(String),
}

/// Parses a complete dump holding exactly one program.
pub fn parse_source(source: &str) -> Result<Program, Error> {
    let tokens = lexer::tokenize(source)?;
    let (program, end) = parser::parse_program(&tokens, 0)?;
    let tok = &tokens[end];
    if tok.kind != lexer::TokenKind::Eof {
        return Err(Error::Parse(ParseError {
            line: tok.line,
            col: tok.col,
            offset: tok.offset,
            message: format!("unexpected `{}` after the program", tok.text),
            expected: vec!["end of input"],
        }));
    }
    Ok(program)
}
