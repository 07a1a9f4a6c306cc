//! Mapping from IR identifiers to legal Python identifiers.
//!
//! Reserved names are uppercased (`in` becomes `IN`); any remaining clash
//! with a name already emitted in the same function is broken by appending
//! underscores.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

/// Python keywords and soft keywords.
const KEYWORDS: &[&str] = &[
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class",
    "continue", "def", "del", "elif", "else", "except", "finally", "for", "from", "global",
    "if", "import", "in", "is", "lambda", "nonlocal", "not", "or", "pass", "raise", "return",
    "try", "while", "with", "yield", "match", "case", "type",
];

/// Every global name that translated code may reference. A local variable
/// with one of these names would shadow it for the whole function body.
pub const EMITTED_GLOBALS: &[&str] = &[
    // builtins
    "range", "reversed", "zip", "map",
    // module and transform handles
    "lax", "vmap",
    // special functions
    "erf", "erfc", "erfinv", "gammaln", "digamma",
    // array namespace
    "abs", "all", "any", "arange", "arccos", "arccosh", "arcsin", "arcsinh", "arctan",
    "arctan2", "arctanh", "argmax", "argmin", "argsort", "asarray", "bitwise_and",
    "bitwise_not", "bitwise_or", "bitwise_xor", "broadcast_to", "cbrt", "ceil", "choose",
    "clip", "concatenate", "copy", "cos", "cosh", "cumprod", "cumsum", "einsum", "exp",
    "exp2", "expand_dims", "expm1", "flip", "floor", "fmod", "inf", "isfinite",
    "left_shift", "lexsort", "log", "log1p", "logaddexp", "matmul", "max", "maximum", "min", "minimum",
    "nan", "nextafter", "pad", "prod", "reshape", "right_shift", "round", "sign", "sin",
    "sinh", "sort", "split", "sqrt", "square", "squeeze", "stack", "sum", "take",
    "take_along_axis", "tan", "tanh", "tensordot", "transpose", "trunc", "where", "zeros",
    // dtypes
    "float16", "bfloat16", "float32", "float64", "int8", "int16", "int32", "int64", "uint8",
    "uint16", "uint32", "uint64", "bool_", "complex64", "complex128",
];

/// Prefix of lifted helper functions.
pub const HELPER_PREFIX: &str = "fn_";

fn reserved_set() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| KEYWORDS.iter().chain(EMITTED_GLOBALS).copied().collect())
}

/// True if `name` may not be used as a local variable in emitted code.
pub fn is_reserved(name: &str) -> bool {
    reserved_set().contains(name) || name.starts_with(HELPER_PREFIX)
}

/// True if `name` is a syntactically valid Python identifier (ASCII subset).
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Per-function naming state.
#[derive(Debug, Clone, Default)]
pub struct NameEnv {
    taken: HashSet<String>,
    mapping: HashMap<String, String>,
    /// IR names of the scope; temporaries steer clear of them.
    avoid: HashSet<String>,
    dropped: usize,
}

impl NameEnv {
    pub fn new() -> Self {
        Self::default()
    }

    /// Marks IR names that will be bound later in this scope so that
    /// temporaries do not force them to be renamed.
    pub fn avoid<'a>(&mut self, names: impl IntoIterator<Item = &'a str>) {
        self.avoid.extend(names.into_iter().map(str::to_owned));
    }

    /// Binds an IR name and returns the identifier to emit for it.
    pub fn sanitize(&mut self, name: &str) -> String {
        let base: String = name
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '_' })
            .collect();
        let mut candidate = if is_reserved(&base) {
            base.to_uppercase()
        } else {
            base
        };
        while self.taken.contains(&candidate) || is_reserved(&candidate) || !is_identifier(&candidate) {
            candidate.push('_');
        }
        self.taken.insert(candidate.clone());
        self.mapping.insert(name.to_owned(), candidate.clone());
        candidate
    }

    /// Name for the next dropped binder: `_`, then `_1`, `_2`, ...
    pub fn fresh_dropped(&mut self) -> String {
        loop {
            let candidate = match self.dropped {
                0 => "_".to_owned(),
                k => format!("_{k}"),
            };
            self.dropped += 1;
            if self.taken.insert(candidate.clone()) {
                return candidate;
            }
        }
    }

    /// A fresh local name derived from `base` for emitter-introduced values
    /// such as loop indices.
    pub fn fresh_temp(&mut self, base: &str) -> String {
        let mut candidate = base.to_owned();
        while self.taken.contains(&candidate) || self.avoid.contains(&candidate) || is_reserved(&candidate) {
            candidate.push('_');
        }
        self.taken.insert(candidate.clone());
        candidate
    }

    /// The emitted identifier for an already bound IR name.
    pub fn lookup(&self, name: &str) -> Option<&str> {
        self.mapping.get(name).map(String::as_str)
    }

    /// True if `name` has been emitted in this scope.
    pub fn is_taken(&self, name: &str) -> bool {
        self.taken.contains(name)
    }
}
