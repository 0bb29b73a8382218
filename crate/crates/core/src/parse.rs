//! Reading ideals from text.
//!
//! Two input forms are accepted:
//!
//! ```text
//! vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3
//! {"vars": ["x","y","z"], "gens": [[4,0,0],[2,0,3],[0,4,0],[0,3,3]]}
//! ```
//!
//! A term is `1`, `0` (contributes nothing; lets the zero ideal round-trip),
//! or a `*`-separated product of `name` / `name^exp` factors. Exponents are
//! capped at `2^31 - 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;

pub const MAX_EXPONENT: u64 = (1 << 31) - 1;

/// Parses either input form; JSON is recognised by a leading `{`.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        Parser::new(text).ideal()
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    vars: Vec<String>,
    gens: Vec<Vec<serde_json::Number>>,
}

/// JSON form of an ideal, generators in canonical order.
pub fn ideal_to_json(ideal: &MonomialIdeal) -> serde_json::Value {
    serde_json::json!({
        "vars": ideal.names(),
        "gens": ideal.exponent_vectors(),
    })
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let line_start: usize = text
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum();
    line_start + column.saturating_sub(1)
}

fn parse_json(text: &str) -> Result<MonomialIdeal> {
    let raw: IdealJson = serde_json::from_str(text).map_err(|e| Error::Syntax {
        pos: byte_offset(text, e.line(), e.column()),
        msg: e.to_string(),
    })?;
    check_names(&raw.vars, 0)?;
    let n = raw.vars.len();
    let mut gens = Vec::with_capacity(raw.gens.len());
    for g in &raw.gens {
        if g.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: g.len(),
            });
        }
        let mut exps = Vec::with_capacity(n);
        for e in g {
            if let Some(v) = e.as_u64() {
                if v > MAX_EXPONENT {
                    return Err(Error::ExponentOverflow { pos: 0 });
                }
                exps.push(v as u32);
            } else if e.as_i64().is_some() {
                return Err(Error::NegativeExponent { pos: 0 });
            } else {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: format!("exponent `{e}` is not an integer"),
                });
            }
        }
        gens.push(Monomial::new(exps));
    }
    Ok(minimalize(n, gens)?.with_names(Some(raw.vars)))
}

fn check_names(names: &[String], pos: usize) -> Result<()> {
    for (i, name) in names.iter().enumerate() {
        let ok = name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::Syntax {
                pos,
                msg: format!("invalid variable name `{name}`"),
            });
        }
        if names[..i].contains(name) {
            return Err(Error::Syntax {
                pos,
                msg: format!("variable `{name}` declared twice"),
            });
        }
    }
    Ok(())
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn ident(&mut self) -> Result<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_alphabetic() || c == '_' || (i > 0 && c.is_ascii_digit())))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return self.err("expected a variable name");
        }
        self.pos += len;
        Ok((rest[..len].to_string(), start))
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err("expected a non-negative integer");
        }
        self.pos += len;
        let mut v: u64 = 0;
        for b in rest[..len].bytes() {
            v = v * 10 + (b - b'0') as u64;
            if v > MAX_EXPONENT {
                return Err(Error::ExponentOverflow { pos: start });
            }
        }
        Ok(v)
    }

    fn ideal(mut self) -> Result<MonomialIdeal> {
        let (kw, _) = self.ident()?;
        if kw != "vars" {
            self.pos -= kw.len();
            return self.err("expected `vars`");
        }
        let decl_pos = self.pos;
        let mut names = vec![self.ident()?.0];
        while self.eat(',') {
            names.push(self.ident()?.0);
        }
        check_names(&names, decl_pos)?;
        self.expect(';')?;
        let n = names.len();
        let mut gens = Vec::new();
        loop {
            if let Some(m) = self.term(&names)? {
                gens.push(m);
            }
            if !self.eat(',') {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(minimalize(n, gens)?.with_names(Some(names)))
    }

    fn term(&mut self, names: &[String]) -> Result<Option<Monomial>> {
        let n = names.len();
        match self.peek() {
            Some('1') | Some('0') => {
                let at = self.pos;
                return match self.number()? {
                    1 => Ok(Some(Monomial::one(n))),
                    0 => Ok(None),
                    _ => {
                        self.pos = at;
                        self.err("a constant term must be 1 or 0")
                    }
                };
            }
            None => return self.err("expected a term"),
            _ => {}
        }
        let mut exps = vec![0u64; n];
        loop {
            let (name, at) = self.ident()?;
            let idx = names
                .iter()
                .position(|v| *v == name)
                .ok_or(Error::UnknownVariable { name, pos: at })?;
            let e = if self.eat('^') {
                if self.peek() == Some('-') {
                    return Err(Error::NegativeExponent { pos: self.pos });
                }
                self.number()?
            } else {
                1
            };
            exps[idx] += e;
            if exps[idx] > MAX_EXPONENT {
                return Err(Error::ExponentOverflow { pos: at });
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok(Some(Monomial::new(
            exps.into_iter().map(|e| e as u32).collect::<Vec<_>>(),
        )))
    }
}
