//! Tokenizer for Jaxpr dump text.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keyword {
    Lambda,
    Let,
    In,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    LBrace,
    RBrace,
    LBrack,
    RBrack,
    LParen,
    RParen,
    Colon,
    Semi,
    Dot,
    Comma,
    Equals,
    Ident,
    Int,
    Float,
    Bool,
    Keyword(Keyword),
    Underscore,
    /// Quoted string such as the axis name in `axes=('i',)`.
    Str,
    /// Angle-bracketed repr such as `<lambda>` or `<function f at 0x..>`.
    Opaque,
    Eof,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    /// Byte offset of `text` in the source.
    pub offset: usize,
    pub line: usize,
    pub col: usize,
}

impl Token<'_> {
    pub fn end(&self) -> usize {
        self.offset + self.text.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {message}")]
pub struct LexError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

/// Splits `source` into tokens, ending with a single `Eof` token.
pub fn tokenize(source: &str) -> Result<Vec<Token<'_>>, LexError> {
    Lexer::new(source).run()
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_at(&self, n: usize) -> Option<char> {
        self.src[self.pos..].chars().nth(n)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, line: usize, col: usize, message: String) -> LexError {
        LexError { line, col, message }
    }

    fn run(mut self) -> Result<Vec<Token<'a>>, LexError> {
        let mut tokens = Vec::new();
        loop {
            while matches!(self.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (start, line, col) = (self.pos, self.line, self.col);
            let Some(c) = self.peek() else {
                tokens.push(Token {
                    kind: TokenKind::Eof,
                    text: "",
                    offset: start,
                    line,
                    col,
                });
                return Ok(tokens);
            };
            let kind = match c {
                '{' | '}' | '[' | ']' | '(' | ')' | ':' | ';' | '.' | ',' | '=' => {
                    self.bump();
                    match c {
                        '{' => TokenKind::LBrace,
                        '}' => TokenKind::RBrace,
                        '[' => TokenKind::LBrack,
                        ']' => TokenKind::RBrack,
                        '(' => TokenKind::LParen,
                        ')' => TokenKind::RParen,
                        ':' => TokenKind::Colon,
                        ';' => TokenKind::Semi,
                        '.' => TokenKind::Dot,
                        ',' => TokenKind::Comma,
                        _ => TokenKind::Equals,
                    }
                }
                '0'..='9' => self.number(),
                '-' => self.negative(line, col)?,
                '\'' | '"' => self.string(c, line, col)?,
                '<' => self.opaque(line, col)?,
                c if is_ident_start(c) => self.word(),
                other => {
                    return Err(self.error(line, col, format!("unexpected character {other:?}")));
                }
            };
            tokens.push(Token {
                kind,
                text: &self.src[start..self.pos],
                offset: start,
                line,
                col,
            });
        }
    }

    fn digits(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
    }

    fn number(&mut self) -> TokenKind {
        let mut kind = TokenKind::Int;
        self.digits();
        if self.peek() == Some('.') && !matches!(self.peek_at(1), Some(c) if is_ident_start(c)) {
            self.bump();
            self.digits();
            kind = TokenKind::Float;
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            let digit_at = if matches!(self.peek_at(1), Some('+' | '-')) { 2 } else { 1 };
            if matches!(self.peek_at(digit_at), Some(c) if c.is_ascii_digit()) {
                for _ in 0..digit_at {
                    self.bump();
                }
                self.digits();
                kind = TokenKind::Float;
            }
        }
        kind
    }

    fn negative(&mut self, line: usize, col: usize) -> Result<TokenKind, LexError> {
        match self.peek_at(1) {
            Some(c) if c.is_ascii_digit() => {
                self.bump();
                Ok(self.number())
            }
            _ => {
                let rest = &self.src[self.pos + 1..];
                for word in ["inf", "nan"] {
                    if rest.starts_with(word)
                        && !rest[word.len()..].starts_with(is_ident_continue)
                    {
                        for _ in 0..=word.len() {
                            self.bump();
                        }
                        return Ok(TokenKind::Float);
                    }
                }
                Err(self.error(line, col, "unexpected character '-'".to_owned()))
            }
        }
    }

    fn string(&mut self, quote: char, line: usize, col: usize) -> Result<TokenKind, LexError> {
        self.bump();
        loop {
            match self.bump() {
                None => return Err(self.error(line, col, "unterminated string".to_owned())),
                Some('\\') => {
                    if self.bump().is_none() {
                        return Err(self.error(line, col, "unterminated string".to_owned()));
                    }
                }
                Some(c) if c == quote => return Ok(TokenKind::Str),
                Some(_) => {}
            }
        }
    }

    fn opaque(&mut self, line: usize, col: usize) -> Result<TokenKind, LexError> {
        let mut depth = 0usize;
        loop {
            match self.bump() {
                None => return Err(self.error(line, col, "unterminated '<' value".to_owned())),
                Some('<') => depth += 1,
                Some('>') => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(TokenKind::Opaque);
                    }
                }
                Some(_) => {}
            }
        }
    }

    fn word(&mut self) -> TokenKind {
        let start = self.pos;
        loop {
            match self.peek() {
                Some(c) if is_ident_continue(c) => {
                    self.bump();
                }
                // Hyphenated primitive names such as `scatter-add`.
                Some('-') if matches!(self.peek_at(1), Some(c) if c.is_ascii_alphabetic()) => {
                    self.bump();
                }
                _ => break,
            }
        }
        match &self.src[start..self.pos] {
            "_" => TokenKind::Underscore,
            "True" | "False" => TokenKind::Bool,
            "lambda" => TokenKind::Keyword(Keyword::Lambda),
            "let" => TokenKind::Keyword(Keyword::Let),
            "in" => TokenKind::Keyword(Keyword::In),
            "inf" | "nan" => TokenKind::Float,
            _ => TokenKind::Ident,
        }
    }
}
