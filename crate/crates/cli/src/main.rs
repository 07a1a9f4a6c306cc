//! `decomp`: decompile a textual Jaxpr dump into Python.
//!
//! Exit codes: 0 success, 1 lex or parse error, 2 untranslatable primitive,
//! 3 usage, configuration or I/O error.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use jaxpr_decompiler::{decompile, Dialect, EmitConfig, Error};

#[derive(Debug, Parser)]
#[command(name = "decomp", version, about = "Decompile a textual Jaxpr dump into Python source")]
struct Cli {
    /// Input dump, or `-` for standard input.
    #[arg(long = "in", value_name = "PATH|-")]
    input: String,

    /// Output file; standard output when omitted.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Name of the emitted function.
    #[arg(long, value_name = "IDENT", default_value = "f")]
    fn_name: String,

    /// Target array library.
    #[arg(long, value_name = "DIALECT", default_value = "framework-numpy")]
    dialect: Dialect,

    /// Emit placeholders for untranslatable primitives instead of failing.
    #[arg(long)]
    lenient: bool,

    /// Spaces per indentation level.
    #[arg(long, value_name = "N", default_value_t = 4)]
    indent: usize,
}

const EXIT_SYNTAX: u8 = 1;
const EXIT_TRANSLATE: u8 = 2;
const EXIT_USAGE: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            eprintln!("decomp: {message}");
            ExitCode::from(code)
        }
    }
}

fn read_input(input: &str) -> io::Result<String> {
    if input == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(input)
    }
}

fn run(cli: &Cli) -> Result<(), (u8, String)> {
    let source = read_input(&cli.input).map_err(|e| (EXIT_USAGE, format!("cannot read {}: {e}", cli.input)))?;
    let config = EmitConfig {
        function_name: cli.fn_name.clone(),
        dialect: cli.dialect,
        indent: " ".repeat(cli.indent),
        strict: !cli.lenient,
    };
    let origin = if cli.input == "-" { "<stdin>" } else { cli.input.as_str() };
    let (text, report) = decompile(&source, &config).map_err(|err| {
        let code = match err {
            Error::Lex(_) | Error::Parse(_) => EXIT_SYNTAX,
            Error::Translate(_) => EXIT_TRANSLATE,
            Error::Config(_) => EXIT_USAGE,
        };
        (code, diagnostic(origin, &err))
    })?;
    if !report.unsupported.is_empty() {
        eprintln!(
            "decomp: warning: placeholders emitted for unsupported primitives: {}",
            report.unsupported.join(", ")
        );
    }
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| (EXIT_USAGE, format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| (EXIT_USAGE, format!("cannot write output: {e}")))
        }
    }
}

fn diagnostic(origin: &str, err: &Error) -> String {
    match err {
        Error::Lex(e) => format!("{origin}:{}:{}: lex error: {}", e.line, e.col, e.message),
        Error::Parse(e) => format!("{origin}:{}:{}: parse error: {}", e.line, e.col, e.message),
        Error::Translate(e) => format!("{origin}: {e}"),
        Error::Config(m) => format!("invalid configuration: {m}"),
    }
}
