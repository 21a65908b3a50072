//! Parser for relation expressions.
//!
//! Grammar (documented for presentation files):
//!
//! ```text
//! expr   := [ '-' ] term { ( '+' | '-' ) term }
//! term   := factor { [ '*' ] factor }
//! factor := atom [ '^' nat ]
//! atom   := rational | name | '(' expr ')'
//! rational := int [ '/' nat ]
//! ```
//!
//! Multiplication of generators is word concatenation and is not
//! commutative; the optional parameter commutes with everything and becomes
//! a polynomial coefficient.

use super::{NCPoly, NcgbError, Word};
use crate::exactnum::{Field, Int, Rat, RatFunc, UniPoly};

/// Parse a relation expression over the given alphabet. The optional
/// `parameter` name is read as the commuting deformation parameter.
pub fn parse_ncpoly(
    text: &str,
    alphabet: &[String],
    parameter: Option<&str>,
) -> Result<NCPoly<RatFunc>, NcgbError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        alphabet,
        parameter,
    };
    let e = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(NcgbError::Parse {
            pos: p.tokens[p.pos].pos,
            msg: format!("unexpected `{}`", p.tokens[p.pos].kind.describe()),
        });
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq)]
enum TokKind {
    Num(Int),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl TokKind {
    fn describe(&self) -> String {
        match self {
            TokKind::Num(n) => n.to_string(),
            TokKind::Ident(s) => s.clone(),
            TokKind::Plus => "+".into(),
            TokKind::Minus => "-".into(),
            TokKind::Star => "*".into(),
            TokKind::Caret => "^".into(),
            TokKind::Slash => "/".into(),
            TokKind::LParen => "(".into(),
            TokKind::RParen => ")".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Tok {
    kind: TokKind,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Tok>, NcgbError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                out.push(Tok {
                    kind: TokKind::Plus,
                    pos,
                });
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push(Tok {
                    kind: TokKind::Minus,
                    pos,
                });
                i += 1;
            }
            '*' => {
                out.push(Tok {
                    kind: TokKind::Star,
                    pos,
                });
                i += 1;
            }
            '^' => {
                out.push(Tok {
                    kind: TokKind::Caret,
                    pos,
                });
                i += 1;
            }
            '/' => {
                out.push(Tok {
                    kind: TokKind::Slash,
                    pos,
                });
                i += 1;
            }
            '(' => {
                out.push(Tok {
                    kind: TokKind::LParen,
                    pos,
                });
                i += 1;
            }
            ')' => {
                out.push(Tok {
                    kind: TokKind::RParen,
                    pos,
                });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: Int = text[start..i].parse().expect("digits");
                out.push(Tok {
                    kind: TokKind::Num(n),
                    pos,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Tok {
                    kind: TokKind::Ident(text[start..i].to_string()),
                    pos,
                });
            }
            // the unicode minus arm above needs char-boundary care; handle
            // any other multibyte char here
            _ => {
                let ch: char = text[i..].chars().next().unwrap();
                if ch == '\u{2212}' {
                    out.push(Tok {
                        kind: TokKind::Minus,
                        pos,
                    });
                    i += ch.len_utf8();
                } else {
                    return Err(NcgbError::Parse {
                        pos,
                        msg: format!("unexpected character `{ch}`"),
                    });
                }
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    alphabet: &'a [String],
    parameter: Option<&'a str>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&TokKind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|t| t.pos)
            .unwrap_or_else(|| self.tokens.last().map(|t| t.pos + 1).unwrap_or(0))
    }

    fn expr(&mut self) -> Result<NCPoly<RatFunc>, NcgbError> {
        let mut negate = false;
        if self.peek() == Some(&TokKind::Minus) {
            self.pos += 1;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(TokKind::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(TokKind::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly<RatFunc>, NcgbError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(TokKind::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                // juxtaposition
                Some(TokKind::Ident(_)) | Some(TokKind::LParen) | Some(TokKind::Num(_)) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<NCPoly<RatFunc>, NcgbError> {
        let base = self.atom()?;
        if self.peek() == Some(&TokKind::Caret) {
            self.pos += 1;
            let pos = self.here();
            match self.peek().cloned() {
                Some(TokKind::Num(n)) => {
                    self.pos += 1;
                    let e: usize = n.to_string().parse().map_err(|_| NcgbError::Parse {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(NcgbError::Parse {
                    pos,
                    msg: "expected integer exponent after `^`".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<NCPoly<RatFunc>, NcgbError> {
        let pos = self.here();
        match self.peek().cloned() {
            Some(TokKind::Num(n)) => {
                self.pos += 1;
                // optional rational literal p/q
                let mut r = Rat::from_integer(n);
                if self.peek() == Some(&TokKind::Slash) {
                    if let Some(TokKind::Num(q)) =
                        self.tokens.get(self.pos + 1).map(|t| t.kind.clone())
                    {
                        self.pos += 2;
                        r = r / Rat::from_integer(q);
                    }
                }
                Ok(NCPoly::from_term(Word::one(), RatFunc::from_rat(&r)))
            }
            Some(TokKind::Ident(name)) => {
                self.pos += 1;
                if let Some(g) = self.alphabet.iter().position(|a| *a == name) {
                    return Ok(NCPoly::generator(g as u8));
                }
                if self.parameter == Some(name.as_str()) {
                    return Ok(NCPoly::from_term(
                        Word::one(),
                        RatFunc::from_poly(UniPoly::var()),
                    ));
                }
                Err(NcgbError::UnknownSymbol(name, pos))
            }
            Some(TokKind::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() == Some(&TokKind::RParen) {
                    self.pos += 1;
                    Ok(e)
                } else {
                    Err(NcgbError::Parse {
                        pos: self.here(),
                        msg: "expected `)`".into(),
                    })
                }
            }
            _ => Err(NcgbError::Parse {
                pos,
                msg: "expected a term".into(),
            }),
        }
    }
}
