use std::fmt;

use thiserror::Error;

use super::ast::{GroupExpr, RingExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    Bound,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Lexical => "lexical",
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::Bound => "bound",
        })
    }
}

/// Parse failure with the byte offset it was detected at.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} error at offset {offset}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
    pub message: String,
    /// Tokens that would have been accepted (syntax errors only).
    pub expected: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kw {
    Z,
    Gf,
    M,
    Ut,
    Te,
    Bt,
    Nil,
    PolyQ,
    Gr,
    ModJ,
    Corner,
    Quot,
    C,
    S3,
    D4,
    Q8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Kw(Kw),
    Int(usize),
    Slash,
    LParen,
    RParen,
    Comma,
    LBracket,
    RBracket,
    Times,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Kw(k) => format!("`{}`", kw_text(*k)),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Times => "`x`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

const KEYWORDS: [(&str, Kw); 16] = [
    ("Z", Kw::Z),
    ("GF", Kw::Gf),
    ("M", Kw::M),
    ("UT", Kw::Ut),
    ("TE", Kw::Te),
    ("BT", Kw::Bt),
    ("NIL", Kw::Nil),
    ("POLYQ", Kw::PolyQ),
    ("GR", Kw::Gr),
    ("MODJ", Kw::ModJ),
    ("CORNER", Kw::Corner),
    ("QUOT", Kw::Quot),
    ("C", Kw::C),
    ("S3", Kw::S3),
    ("D4", Kw::D4),
    ("Q8", Kw::Q8),
];

fn kw_text(k: Kw) -> &'static str {
    KEYWORDS.iter().find(|(_, kw)| *kw == k).unwrap().0
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    let lexical = |offset: usize, message: String| ParseError {
        kind: ParseErrorKind::Lexical,
        offset,
        message,
        expected: Vec::new(),
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let simple = match c {
            b'/' => Some(Tok::Slash),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            b'x' => Some(Tok::Times),
            _ => None,
        };
        if let Some(tok) = simple {
            toks.push((tok, start));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = text[start..i].parse::<usize>().map_err(|_| ParseError {
                kind: ParseErrorKind::Bound,
                offset: start,
                message: format!("integer `{}` is too large", &text[start..i]),
                expected: Vec::new(),
            })?;
            toks.push((Tok::Int(n), start));
        } else if c.is_ascii_uppercase() {
            while i < bytes.len() && bytes[i].is_ascii_uppercase() {
                i += 1;
            }
            // S3, D4 and Q8 carry their digit
            if matches!(&text[start..i], "S" | "D" | "Q")
                && i < bytes.len()
                && bytes[i].is_ascii_digit()
            {
                i += 1;
            }
            let word = &text[start..i];
            match KEYWORDS.iter().find(|(w, _)| *w == word) {
                Some((_, kw)) => toks.push((Tok::Kw(*kw), start)),
                None => return Err(lexical(start, format!("unknown keyword `{word}`"))),
            }
        } else {
            let ch = text[start..].chars().next().unwrap();
            return Err(lexical(start, format!("unexpected character `{ch}`")));
        }
    }
    toks.push((Tok::Eof, text.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

const TERM_START: [&str; 13] = [
    "`Z`", "`GF`", "`M`", "`UT`", "`TE`", "`BT`", "`NIL`", "`POLYQ`", "`GR`", "`MODJ`", "`CORNER`",
    "`QUOT`", "`(`",
];
const GTERM_START: [&str; 5] = ["`C`", "`S3`", "`D4`", "`Q8`", "`(`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn unexpected<T>(&self, expected: &[&str]) -> PResult<T> {
        Err(ParseError {
            kind: ParseErrorKind::Syntax,
            offset: self.offset(),
            message: format!(
                "expected {}, found {}",
                expected.join(" or "),
                self.peek().describe()
            ),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&[&tok.describe()])
        }
    }

    fn int(&mut self) -> PResult<(usize, usize)> {
        let offset = self.offset();
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.bump();
                Ok((n, offset))
            }
            _ => self.unexpected(&["integer"]),
        }
    }

    fn int_at_least(&mut self, min: usize, what: &str) -> PResult<usize> {
        let (n, offset) = self.int()?;
        if n < min {
            return Err(ParseError {
                kind: ParseErrorKind::Bound,
                offset,
                message: format!("{what} must be at least {min}, got {n}"),
                expected: Vec::new(),
            });
        }
        Ok(n)
    }

    fn int_list(&mut self, min_len: usize, what: &str) -> PResult<Vec<usize>> {
        let offset = self.offset();
        self.expect(Tok::LBracket)?;
        let mut items = vec![self.int()?.0];
        while *self.peek() == Tok::Comma {
            self.bump();
            items.push(self.int()?.0);
        }
        if *self.peek() != Tok::RBracket {
            return self.unexpected(&["`,`", "`]`"]);
        }
        self.bump();
        if items.len() < min_len {
            return Err(ParseError {
                kind: ParseErrorKind::Bound,
                offset,
                message: format!("{what} needs at least {min_len} entries"),
                expected: Vec::new(),
            });
        }
        Ok(items)
    }

    fn expr(&mut self) -> PResult<RingExpr> {
        let mut terms = vec![self.term()?];
        while *self.peek() == Tok::Times {
            self.bump();
            terms.push(self.term()?);
        }
        let mut acc = terms.pop().unwrap();
        while let Some(t) = terms.pop() {
            acc = RingExpr::product(t, acc);
        }
        Ok(acc)
    }

    fn boxed_arg(&mut self) -> PResult<Box<RingExpr>> {
        Ok(Box::new(self.expr()?))
    }

    fn term(&mut self) -> PResult<RingExpr> {
        let kw = match self.peek() {
            Tok::Kw(k) => *k,
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                return Ok(e);
            }
            _ => return self.unexpected(&TERM_START),
        };
        if matches!(kw, Kw::C | Kw::S3 | Kw::D4 | Kw::Q8) {
            return self.unexpected(&TERM_START);
        }
        self.bump();
        if kw == Kw::Z {
            self.expect(Tok::Slash)?;
            return Ok(RingExpr::Zmod(self.int_at_least(2, "modulus")?));
        }
        self.expect(Tok::LParen)?;
        let e = match kw {
            Kw::Gf => {
                let (first, offset) = self.int()?;
                if *self.peek() == Tok::RParen {
                    // `GF(q)` shorthand for a prime power q
                    match prime_power(first) {
                        Some((p, k)) => RingExpr::Gf(p, k),
                        None => {
                            return Err(ParseError {
                                kind: ParseErrorKind::Bound,
                                offset,
                                message: format!("field order {first} is not a prime power"),
                                expected: Vec::new(),
                            })
                        }
                    }
                } else if first < 2 {
                    return Err(ParseError {
                        kind: ParseErrorKind::Bound,
                        offset,
                        message: format!("characteristic must be at least 2, got {first}"),
                        expected: Vec::new(),
                    });
                } else {
                    if *self.peek() != Tok::Comma {
                        return self.unexpected(&["`,`", "`)`"]);
                    }
                    self.bump();
                    RingExpr::Gf(first, self.int_at_least(1, "degree")?)
                }
            }
            Kw::M | Kw::Ut => {
                let min = if kw == Kw::M { 1 } else { 2 };
                let m = self.int_at_least(min, "matrix size")?;
                self.expect(Tok::Comma)?;
                let inner = self.boxed_arg()?;
                if kw == Kw::M {
                    RingExpr::Matrix(m, inner)
                } else {
                    RingExpr::UpperTri(m, inner)
                }
            }
            Kw::Te => RingExpr::TrivialExt(self.boxed_arg()?),
            Kw::Bt => RingExpr::Bt(self.boxed_arg()?),
            Kw::ModJ => RingExpr::ModJ(self.boxed_arg()?),
            Kw::Nil => {
                let inner = self.boxed_arg()?;
                self.expect(Tok::Comma)?;
                RingExpr::Nil(inner, self.int_at_least(1, "nilpotency index")?)
            }
            Kw::PolyQ => {
                let inner = self.boxed_arg()?;
                self.expect(Tok::Comma)?;
                RingExpr::PolyQ(inner, self.int_list(2, "modulus")?)
            }
            Kw::Gr => {
                let inner = self.boxed_arg()?;
                self.expect(Tok::Comma)?;
                RingExpr::GroupRing(inner, self.gexpr()?)
            }
            Kw::Corner => {
                let inner = self.boxed_arg()?;
                self.expect(Tok::Comma)?;
                RingExpr::Corner(inner, self.int()?.0)
            }
            Kw::Quot => {
                let inner = self.boxed_arg()?;
                self.expect(Tok::Comma)?;
                RingExpr::Quot(inner, self.int_list(1, "generator list")?)
            }
            Kw::Z | Kw::C | Kw::S3 | Kw::D4 | Kw::Q8 => unreachable!(),
        };
        self.expect(Tok::RParen)?;
        Ok(e)
    }

    fn gexpr(&mut self) -> PResult<GroupExpr> {
        let mut terms = vec![self.gterm()?];
        while *self.peek() == Tok::Times {
            self.bump();
            terms.push(self.gterm()?);
        }
        let mut acc = terms.pop().unwrap();
        while let Some(t) = terms.pop() {
            acc = GroupExpr::product(t, acc);
        }
        Ok(acc)
    }

    fn gterm(&mut self) -> PResult<GroupExpr> {
        let g = match self.peek() {
            Tok::Kw(Kw::C) => {
                self.bump();
                return Ok(GroupExpr::Cyclic(self.int_at_least(1, "cyclic order")?));
            }
            Tok::Kw(Kw::S3) => GroupExpr::S3,
            Tok::Kw(Kw::D4) => GroupExpr::D4,
            Tok::Kw(Kw::Q8) => GroupExpr::Q8,
            Tok::LParen => {
                self.bump();
                let g = self.gexpr()?;
                self.expect(Tok::RParen)?;
                return Ok(g);
            }
            _ => return self.unexpected(&GTERM_START),
        };
        self.bump();
        Ok(g)
    }

    fn finish<T>(&mut self, value: T) -> PResult<T> {
        if *self.peek() == Tok::Eof {
            Ok(value)
        } else {
            self.unexpected(&["`x`", "end of input"])
        }
    }
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Parses a ring expression.
pub fn parse(text: &str) -> Result<RingExpr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    p.finish(e)
}

/// Parses a group expression such as `C2 x C2`.
pub fn parse_group(text: &str) -> Result<GroupExpr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let g = p.gexpr()?;
    p.finish(g)
}
