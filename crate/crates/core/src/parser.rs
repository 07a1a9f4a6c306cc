//! Recursive-descent parser from tokens to [`Program`].
//!
//! ```text
//! program  = "{" "lambda" {binder} ";" {binder} "." "let" {equation} "in" "(" [atoms] ")" "}" ;
//! binder   = (ident | "_") [":" dtype "[" [dims] "]"] ;
//! equation = binder {binder} "=" ident [params] {atom} ;
//! params   = "[" {ident "=" pvalue} "]" ;
//! pvalue   = literal | string | opaque | name ["(" args ")"] | "(" items ")" | "[" items "]" | program ;
//! atom     = (ident | literal) [":" dtype "[" [dims] "]"] ;
//! ```
//!
//! Items inside `( )` and `[ ]` may be separated by commas or whitespace,
//! since conditional branch tuples are printed one program per line.

use std::collections::HashSet;

use thiserror::Error;

use crate::ir::{self, Atom, Binder, DType, Equation, Literal, ParamValue, Program, ShapedType};
use crate::lexer::{Keyword, Token, TokenKind};

/// Nested programs and parameter tuples deeper than this are rejected.
pub const MAX_NESTING: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    /// Byte offset into the source text.
    pub offset: usize,
    pub message: String,
    /// Token descriptions that would have been accepted here, if known.
    pub expected: Vec<&'static str>,
}

/// Parses a program starting at `cursor`, which must point at `{`.
/// Returns the program and the index of the first token after it.
pub fn parse_program(tokens: &[Token<'_>], cursor: usize) -> Result<(Program, usize), ParseError> {
    let mut p = Parser::new(tokens, cursor)?;
    let program = p.program()?;
    Ok((program, p.pos))
}

/// Parses one equation starting at its first output binder.
pub fn parse_equation(tokens: &[Token<'_>], cursor: usize) -> Result<(Equation, usize), ParseError> {
    let mut p = Parser::new(tokens, cursor)?;
    p.scopes.push(HashSet::new());
    let eq = p.equation()?;
    Ok((eq, p.pos))
}

/// Parses a bracketed parameter list starting at `[`.
pub fn parse_params(
    tokens: &[Token<'_>],
    cursor: usize,
) -> Result<(Vec<(String, ParamValue)>, usize), ParseError> {
    let mut p = Parser::new(tokens, cursor)?;
    let params = p.params()?;
    Ok((params, p.pos))
}

struct Parser<'t, 'a> {
    tokens: &'t [Token<'a>],
    pos: usize,
    depth: usize,
    /// Names bound so far in each enclosing program, innermost last. Used
    /// to tell a variable called `inf` or `nan` from the literal.
    scopes: Vec<HashSet<String>>,
}

fn describe(tok: &Token<'_>) -> String {
    match tok.kind {
        TokenKind::Eof => "end of input".to_owned(),
        _ => format!("`{}`", tok.text),
    }
}

impl<'t, 'a> Parser<'t, 'a> {
    fn new(tokens: &'t [Token<'a>], pos: usize) -> Result<Self, ParseError> {
        match tokens.last() {
            Some(t) if t.kind == TokenKind::Eof && pos < tokens.len() => Ok(Self {
                tokens,
                pos,
                depth: 0,
                scopes: Vec::new(),
            }),
            Some(t) => Err(ParseError {
                line: t.line,
                col: t.col,
                offset: t.offset,
                message: "token stream must end with EOF and the cursor must lie inside it".into(),
                expected: vec![],
            }),
            None => Err(ParseError {
                line: 1,
                col: 1,
                offset: 0,
                message: "empty token stream".into(),
                expected: vec![],
            }),
        }
    }

    fn peek(&self) -> &Token<'a> {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, n: usize) -> &Token<'a> {
        let last = self.tokens.len() - 1;
        &self.tokens[(self.pos + n).min(last)]
    }

    fn kind(&self) -> TokenKind {
        self.peek().kind
    }

    fn advance(&mut self) -> Token<'a> {
        let tok = *self.peek();
        if tok.kind != TokenKind::Eof {
            self.pos += 1;
        }
        tok
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let tok = self.peek();
        ParseError {
            line: tok.line,
            col: tok.col,
            offset: tok.offset,
            message: message.into(),
            expected: vec![],
        }
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        let found = describe(self.peek());
        let mut err = self.error_here(format!("expected {}, found {found}", expected.join(" or ")));
        err.expected = expected.to_vec();
        err
    }

    fn expect(&mut self, kind: TokenKind, what: &'static str) -> Result<Token<'a>, ParseError> {
        if self.kind() == kind {
            Ok(self.advance())
        } else {
            Err(self.unexpected(&[what]))
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(self.error_here(format!("nesting deeper than {MAX_NESTING} levels")));
        }
        Ok(())
    }

    fn leave(&mut self) {
        self.depth -= 1;
    }

    fn is_name(tok: &Token<'_>) -> bool {
        match tok.kind {
            TokenKind::Ident | TokenKind::Keyword(_) => true,
            TokenKind::Float => matches!(tok.text, "inf" | "nan"),
            _ => false,
        }
    }

    /// `in (` closes the equation list; a bare `in` is a variable name.
    fn at_terminator(&self) -> bool {
        self.kind() == TokenKind::Keyword(Keyword::In) && self.peek_at(1).kind == TokenKind::LParen
    }

    fn bind(&mut self, name: &str) {
        if let Some(scope) = self.scopes.last_mut() {
            scope.insert(name.to_owned());
        }
    }

    fn is_bound(&self, name: &str) -> bool {
        self.scopes.last().is_some_and(|s| s.contains(name))
    }

    fn program(&mut self) -> Result<Program, ParseError> {
        self.enter()?;
        let start = *self.peek();
        self.expect(TokenKind::LBrace, "'{'")?;
        self.expect(TokenKind::Keyword(Keyword::Lambda), "'lambda'")?;
        let mut constvars = Vec::new();
        while self.kind() != TokenKind::Semi {
            constvars.push(self.binder(&["';'", "binder"])?);
        }
        self.advance();
        let mut invars = Vec::new();
        while self.kind() != TokenKind::Dot {
            invars.push(self.binder(&["'.'", "binder"])?);
        }
        self.advance();
        self.expect(TokenKind::Keyword(Keyword::Let), "'let'")?;

        let scope = constvars
            .iter()
            .chain(&invars)
            .filter(|b| !b.dropped)
            .map(|b| b.name.clone())
            .collect();
        self.scopes.push(scope);

        let mut equations = Vec::new();
        let mut eq_starts = Vec::new();
        while !self.at_terminator() {
            let tok = self.peek();
            if !(Self::is_name(tok) || tok.kind == TokenKind::Underscore) {
                return Err(self.unexpected(&["'in'", "equation"]));
            }
            eq_starts.push(*tok);
            equations.push(self.equation()?);
            // Short bodies print several equations on one line.
            if self.kind() == TokenKind::Semi {
                self.advance();
            }
        }
        self.advance();
        self.expect(TokenKind::LParen, "'('")?;
        let mut outputs = Vec::new();
        while self.kind() != TokenKind::RParen {
            outputs.push(self.atom()?);
            match self.kind() {
                TokenKind::Comma => {
                    self.advance();
                }
                TokenKind::RParen => {}
                _ => return Err(self.unexpected(&["','", "')'"])),
            }
        }
        self.advance();
        self.expect(TokenKind::RBrace, "'}'")?;
        self.scopes.pop();
        self.leave();

        let program = Program {
            constvars,
            invars,
            equations,
            outputs,
        };
        if let Err(violations) = ir::validate(&program) {
            let first = &violations[0];
            let at = first.equation.map_or(start, |i| eq_starts[i]);
            return Err(ParseError {
                line: at.line,
                col: at.col,
                offset: at.offset,
                message: format!("invalid program: {}", first.message),
                expected: vec![],
            });
        }
        Ok(program)
    }

    fn binder(&mut self, expected: &[&'static str]) -> Result<Binder, ParseError> {
        let tok = *self.peek();
        let dropped = tok.kind == TokenKind::Underscore;
        if !dropped && !Self::is_name(&tok) {
            return Err(self.unexpected(expected));
        }
        self.advance();
        let ty = self.opt_type()?;
        Ok(if dropped {
            Binder::dropped(ty)
        } else {
            Binder::new(tok.text, ty)
        })
    }

    fn opt_type(&mut self) -> Result<Option<ShapedType>, ParseError> {
        if self.kind() != TokenKind::Colon {
            return Ok(None);
        }
        self.advance();
        let dtype_tok = self.expect(TokenKind::Ident, "dtype")?;
        let dtype = DType::from_short_name(dtype_tok.text).ok_or_else(|| ParseError {
            line: dtype_tok.line,
            col: dtype_tok.col,
            offset: dtype_tok.offset,
            message: format!("unknown dtype `{}`", dtype_tok.text),
            expected: vec!["dtype"],
        })?;
        self.expect(TokenKind::LBrack, "'['")?;
        let mut dims = Vec::new();
        while self.kind() != TokenKind::RBrack {
            let tok = *self.peek();
            let dim = match tok.kind {
                TokenKind::Int => tok.text.parse::<u64>().ok(),
                _ => None,
            };
            let Some(dim) = dim else {
                return Err(self.unexpected(&["non-negative dimension", "']'"]));
            };
            self.advance();
            dims.push(dim);
            match self.kind() {
                TokenKind::Comma => {
                    self.advance();
                    if self.kind() == TokenKind::RBrack {
                        return Err(self.unexpected(&["dimension"]));
                    }
                }
                TokenKind::RBrack => {}
                _ => return Err(self.unexpected(&["','", "']'"])),
            }
        }
        self.advance();
        Ok(Some(ShapedType::new(dtype, dims)))
    }

    fn equation(&mut self) -> Result<Equation, ParseError> {
        let mut outputs = Vec::new();
        while self.kind() != TokenKind::Equals {
            if !outputs.is_empty() && self.kind() == TokenKind::Eof {
                return Err(self.unexpected(&["'='"]));
            }
            outputs.push(self.binder(&["'='", "binder"])?);
        }
        self.advance();
        let prim = self.expect(TokenKind::Ident, "primitive name")?;
        let params = if self.kind() == TokenKind::LBrack {
            self.params()?
        } else {
            Vec::new()
        };
        let mut inputs = Vec::new();
        while self.at_atom() {
            inputs.push(self.atom()?);
        }
        for b in &outputs {
            if !b.dropped {
                self.bind(&b.name);
            }
        }
        Ok(Equation::new(outputs, prim.text, params, inputs))
    }

    /// Decides whether the current token continues the input list of the
    /// equation being parsed, or begins the next equation.
    fn at_atom(&self) -> bool {
        let tok = self.peek();
        match tok.kind {
            TokenKind::Int | TokenKind::Bool => true,
            TokenKind::Float if !Self::is_name(tok) => true,
            _ if self.at_terminator() => false,
            _ if Self::is_name(tok) => {
                // Variables are never annotated in input position.
                if self.peek_at(1).kind == TokenKind::Colon {
                    return false;
                }
                !self.untyped_equation_start()
            }
            _ => false,
        }
    }

    /// For dumps without type annotations: the current name starts a new
    /// equation if a run of names leads to `=`, and it either begins a new
    /// line or is the sole binder.
    fn untyped_equation_start(&self) -> bool {
        let mut n = 0;
        while Self::is_name(self.peek_at(n)) || self.peek_at(n).kind == TokenKind::Underscore {
            n += 1;
        }
        if self.peek_at(n).kind != TokenKind::Equals {
            return false;
        }
        let prev_line = self.tokens[self.pos.saturating_sub(1)].line;
        n == 1 || self.peek().line > prev_line
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let tok = *self.peek();
        let atom = match tok.kind {
            TokenKind::Int | TokenKind::Float | TokenKind::Bool
                if !(Self::is_name(&tok) && self.is_bound(tok.text)) =>
            {
                self.advance();
                let lit = Literal::parse(tok.text)
                    .ok_or_else(|| self.error_here(format!("malformed literal `{}`", tok.text)))?;
                Atom::Lit(lit.with_type(self.opt_type()?))
            }
            _ if Self::is_name(&tok) => {
                self.advance();
                Atom::Var(tok.text.to_owned())
            }
            _ => return Err(self.unexpected(&["variable", "literal"])),
        };
        Ok(atom)
    }

    fn params(&mut self) -> Result<Vec<(String, ParamValue)>, ParseError> {
        self.enter()?;
        self.expect(TokenKind::LBrack, "'['")?;
        let mut params = Vec::new();
        while self.kind() != TokenKind::RBrack {
            let key = self.expect(TokenKind::Ident, "parameter name")?;
            self.expect(TokenKind::Equals, "'='")?;
            let value = self.pvalue()?;
            params.push((key.text.to_owned(), value));
        }
        self.advance();
        self.leave();
        Ok(params)
    }

    fn pvalue(&mut self) -> Result<ParamValue, ParseError> {
        let tok = *self.peek();
        match tok.kind {
            TokenKind::LBrace => {
                let saved = std::mem::take(&mut self.scopes);
                let program = self.program();
                self.scopes = saved;
                Ok(ParamValue::Program(Box::new(program?)))
            }
            TokenKind::LParen => Ok(ParamValue::Tuple(self.items(TokenKind::RParen, "')'")?)),
            TokenKind::LBrack => Ok(ParamValue::List(self.items(TokenKind::RBrack, "']'")?)),
            TokenKind::Int | TokenKind::Float | TokenKind::Bool => {
                self.advance();
                Literal::parse(tok.text)
                    .map(ParamValue::Literal)
                    .ok_or_else(|| self.error_here(format!("malformed literal `{}`", tok.text)))
            }
            TokenKind::Str => {
                self.advance();
                Ok(ParamValue::Str(unquote(tok.text)))
            }
            TokenKind::Opaque => {
                self.advance();
                Ok(ParamValue::Symbol(tok.text.to_owned()))
            }
            TokenKind::Ident | TokenKind::Underscore | TokenKind::Keyword(_) => self.symbol_or_call(),
            _ => Err(self.unexpected(&["parameter value"])),
        }
    }

    fn adjacent(&self) -> bool {
        self.pos > 0 && self.tokens[self.pos - 1].end() == self.peek().offset
    }

    fn symbol_or_call(&mut self) -> Result<ParamValue, ParseError> {
        let mut name = self.advance().text.to_owned();
        while self.kind() == TokenKind::Dot
            && self.adjacent()
            && self.peek_at(1).kind == TokenKind::Ident
            && self.tokens[self.pos].end() == self.peek_at(1).offset
        {
            self.advance();
            name.push('.');
            name.push_str(self.advance().text);
        }
        if !(self.kind() == TokenKind::LParen && self.adjacent()) {
            return Ok(ParamValue::Symbol(name));
        }
        self.enter()?;
        self.advance();
        let mut args = Vec::new();
        while self.kind() != TokenKind::RParen {
            let key = if self.kind() == TokenKind::Ident && self.peek_at(1).kind == TokenKind::Equals {
                let key = self.advance().text.to_owned();
                self.advance();
                Some(key)
            } else {
                None
            };
            args.push((key, self.pvalue()?));
            match self.kind() {
                TokenKind::Comma => {
                    self.advance();
                }
                TokenKind::RParen => {}
                _ => return Err(self.unexpected(&["','", "')'"])),
            }
        }
        self.advance();
        self.leave();
        Ok(ParamValue::Call { name, args })
    }

    fn items(&mut self, close: TokenKind, what: &'static str) -> Result<Vec<ParamValue>, ParseError> {
        self.enter()?;
        self.advance();
        let mut items = Vec::new();
        while self.kind() != close {
            if self.kind() == TokenKind::Eof {
                return Err(self.unexpected(&[what]));
            }
            items.push(self.pvalue()?);
            if self.kind() == TokenKind::Comma {
                self.advance();
            }
        }
        self.advance();
        self.leave();
        Ok(items)
    }
}

fn unquote(text: &str) -> String {
    let inner = &text[1..text.len() - 1];
    let mut out = String::with_capacity(inner.len());
    let mut chars = inner.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            if let Some(next) = chars.next() {
                out.push(next);
            }
        } else {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexer::tokenize;

    const GF: &str = "{ lambda ; a:f32[]. let
b:f32[] = exp a
c:f32[] = add 1.0 b
_:f32[] = log c
d:f32[] = div 1.0 c
e:f32[] = mul d b
in (e,) }";

    fn program(src: &str) -> Result<Program, ParseError> {
        let tokens = tokenize(src).unwrap();
        let (p, end) = parse_program(&tokens, 0)?;
        assert_eq!(tokens[end].kind, TokenKind::Eof);
        Ok(p)
    }

    fn equation(src: &str) -> Equation {
        let tokens = tokenize(src).unwrap();
        parse_equation(&tokens, 0).unwrap().0
    }

    fn params(src: &str) -> Vec<(String, ParamValue)> {
        let tokens = tokenize(src).unwrap();
        let (params, end) = parse_params(&tokens, 0).unwrap();
        assert_eq!(tokens[end].kind, TokenKind::Eof);
        params
    }

    #[test]
    fn softplus_gradient_listing() {
        let p = program(GF).unwrap();
        assert!(p.constvars.is_empty());
        assert_eq!(p.invars, vec![Binder::new("a", Some(ShapedType::scalar(DType::F32)))]);
        assert_eq!(p.equations.len(), 5);
        assert_eq!(p.outputs, vec![Atom::var("e")]);
        let prims: Vec<_> = p.equations.iter().map(|e| e.primitive.as_str()).collect();
        assert_eq!(prims, ["exp", "add", "log", "div", "mul"]);
    }

    #[test]
    fn identity_and_empty_programs() {
        let p = program("{ lambda ; a:f32[]. let in (a,) }").unwrap();
        assert!(p.equations.is_empty());
        assert_eq!(p.outputs, vec![Atom::var("a")]);

        let p = program("{ lambda ; . let in ( ) }").unwrap();
        assert_eq!(p, Program::default());
    }

    #[test]
    fn dropped_output() {
        let eq = equation("_:f32[] = log c");
        assert_eq!(eq.outputs, vec![Binder::dropped(Some(ShapedType::scalar(DType::F32)))]);
        assert_eq!(eq.primitive, "log");
        assert_eq!(eq.inputs, vec![Atom::var("c")]);
    }

    #[test]
    fn binary_equation() {
        let eq = equation("e:f32[] = mul d b");
        assert_eq!(eq.primitive, "mul");
        assert_eq!(eq.inputs, vec![Atom::var("d"), Atom::var("b")]);
    }

    #[test]
    fn multiple_outputs() {
        let eq = equation("c:f32[2,3] b:i32[] = some_op x y");
        assert_eq!(
            eq.outputs,
            vec![
                Binder::new("c", Some(ShapedType::new(DType::F32, vec![2, 3]))),
                Binder::new("b", Some(ShapedType::scalar(DType::I32))),
            ]
        );
        assert_eq!(eq.inputs.len(), 2);
    }

    #[test]
    fn typed_literals_keep_their_spelling() {
        let eq = equation("c:f32[] = add 1.0:f32[] b");
        let Atom::Lit(lit) = &eq.inputs[0] else { panic!() };
        assert_eq!(lit.text, "1.0");
        assert_eq!(lit.ty, Some(ShapedType::scalar(DType::F32)));
    }

    #[test]
    fn dot_dimension_numbers() {
        let ps = params("[dimension_numbers=(((1,), (0,)), ((), ()))]");
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].0, "dimension_numbers");
        assert_eq!(ps[0].1.to_string(), "(((1,), (0,)), ((), ()))");
        assert_eq!(ps[0].1.depth(), 3);
    }

    #[test]
    fn branches_hold_nested_programs() {
        let ps = params("[branches=( { lambda ; a:f32[]. let b:f32[] = exp a in (b,) } )]");
        let ParamValue::Tuple(items) = &ps[0].1 else { panic!() };
        assert_eq!(items.len(), 1);
        let ParamValue::Program(p) = &items[0] else { panic!() };
        assert_eq!(p.equations[0].primitive, "exp");
        assert_eq!(ir::validate(p), Ok(()));
    }

    #[test]
    fn semicolon_separated_equations() {
        let p = program("{ lambda ; c:f32[]. let d:f32[] = sin c; e:f32[] = sin d in (e,) }").unwrap();
        assert_eq!(p.equations.len(), 2);
        assert_eq!(p.equations[1].inputs, vec![Atom::var("d")]);
    }

    #[test]
    fn empty_params() {
        assert!(params("[]").is_empty());
    }

    #[test]
    fn structured_parameter_values() {
        let ps = params(
            "[dimension_numbers=GatherDimensionNumbers(offset_dims=(1,), collapsed_slice_dims=(0,)) \
             mode=GatherScatterMode.PROMISE_IN_BOUNDS pad=((np.int64(1), 2, 0),) axes=('i',) \
             name=<lambda> dims=([1], []) fill_value=None _split=False]",
        );
        let keys: Vec<_> = ps.iter().map(|(k, _)| k.as_str()).collect();
        assert_eq!(keys, ["dimension_numbers", "mode", "pad", "axes", "name", "dims", "fill_value", "_split"]);
        assert!(matches!(&ps[0].1, ParamValue::Call { name, args } if name == "GatherDimensionNumbers" && args.len() == 2));
        assert_eq!(ps[1].1, ParamValue::Symbol("GatherScatterMode.PROMISE_IN_BOUNDS".into()));
        assert_eq!(ps[3].1, ParamValue::Tuple(vec![ParamValue::Str("i".into())]));
        assert_eq!(ps[4].1, ParamValue::Symbol("<lambda>".into()));
    }

    #[test]
    fn whitespace_separated_branches() {
        let p = program(
            "{ lambda ; a:f32[] b:i32[]. let
    d:f32[] = cond[
      branches=(
        { lambda ; e:f32[]. let f:f32[] = cos e in (f,) }
        { lambda ; g:f32[]. let h:f32[] = sin g in (h,) }
      )
    ] b a
  in (d,) }",
        )
        .unwrap();
        let ParamValue::Tuple(items) = &p.equations[0].params[0].1 else { panic!() };
        assert_eq!(items.len(), 2);
        assert_eq!(p.equations[0].inputs, vec![Atom::var("b"), Atom::var("a")]);
    }

    #[test]
    fn untyped_dumps_split_on_lines() {
        let p = program("{ lambda ; a. let\n b = exp a\n c = sin b\n in (c,) }").unwrap();
        assert_eq!(p.equations.len(), 2);
        assert_eq!(p.equations[0].inputs, vec![Atom::var("a")]);
        let p = program("{ lambda ; a. let b = exp a c = sin b in (c,) }").unwrap();
        assert_eq!(p.equations.len(), 2);
    }

    #[test]
    fn reserved_looking_variable_names() {
        let p = program("{ lambda ; in:f32[] inf:f32[]. let is:f32[] = add in inf in (is, inf,) }").unwrap();
        assert_eq!(p.equations[0].inputs, vec![Atom::var("in"), Atom::var("inf")]);
        assert_eq!(p.outputs, vec![Atom::var("is"), Atom::var("inf")]);
        let p = program("{ lambda ; a:f32[]. let b:f32[] = max a -inf in (b,) }").unwrap();
        assert!(matches!(&p.equations[0].inputs[1], Atom::Lit(l) if l.text == "-inf"));
    }

    #[test]
    fn truncated_program_fails_at_end() {
        let src = "{ lambda ; a:f32[]. let";
        let err = program(src).unwrap_err();
        assert_eq!(err.offset, src.len());
        assert!(err.message.contains("end of input"), "{}", err.message);
    }

    #[test]
    fn undefined_variable_promoted_to_parse_error() {
        let err = program("{ lambda ; a:f32[]. let\n  b:f32[] = exp z\n  in (b,) }").unwrap_err();
        assert_eq!((err.line, err.col), (2, 3));
        assert!(err.message.contains("undefined variable z at equation 0"));
    }

    #[test]
    fn malformed_inputs() {
        for src in [
            "{ lambda ; a:q32[]. let in (a,) }",
            "{ lambda ; a:f32[-1]. let in (a,) }",
            "{ lambda ; a:f32[2,]. let in (a,) }",
            "{ lambda ; a:f32[]. let b:f32[] exp a in (b,) }",
            "{ lambda ; a:f32[]. let b:f32[] = cond[branches=(] a in (b,) }",
            "{ lambda ; a:f32[]. let in (a }",
            "( lambda ; . let in () }",
        ] {
            let tokens = tokenize(src).unwrap();
            let err = parse_program(&tokens, 0).unwrap_err();
            assert!(err.offset <= src.len(), "{src}");
        }
    }

    #[test]
    fn deep_nesting_is_rejected() {
        let src = format!("[k={}1{}]", "(".repeat(500), ")".repeat(500));
        let tokens = tokenize(&src).unwrap();
        let err = parse_params(&tokens, 0).unwrap_err();
        assert!(err.message.contains("nesting"));
    }

    #[test]
    fn cursor_outside_stream_is_an_error() {
        let tokens = tokenize("{").unwrap();
        assert!(parse_program(&tokens, 5).is_err());
        assert!(parse_program(&[], 0).is_err());
    }
}
