//! Expressions in `H^*(Q^n, Z)`.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary | unary)*        juxtaposition multiplies
//! unary := '-' unary | power
//! power := atom ('^' integer)?
//! atom  := integer | h | L | L1 | L2 | pt | '(' expr ')'
//!        | c(bundle) | c<i>(bundle) | deg(expr) | swap(expr)
//! ```
//!
//! `L` is `Λ` on odd quadrics, `L1`, `L2` the two rulings on even ones.
//! `bundle` is any sum accepted by `BundleSpec`, e.g. `S'(1)` or `O(-1)^2 + O(1)`.

use num_bigint::BigInt;
use quadscroll_core::chern::BundleSpec;
use quadscroll_core::chow::{ChowClass, MiddlePairing};
use quadscroll_core::{Error, Result};

pub struct Evaluator {
    n: usize,
    pairing: MiddlePairing,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ev: &'a Evaluator,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl Evaluator {
    pub fn new(n: usize, pairing: MiddlePairing) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        Ok(Self { n, pairing })
    }

    pub fn eval(&self, src: &str) -> Result<ChowClass> {
        let mut p = Parser { src, pos: 0, ev: self };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != src.len() {
            return Err(parse_err(format!("unexpected `{}` at offset {}", &src[p.pos..], p.pos)));
        }
        Ok(v)
    }

    fn mul(&self, a: &ChowClass, b: &ChowClass) -> Result<ChowClass> {
        a.cup_with(b, self.pairing)
    }

    fn constant(&self, k: BigInt) -> ChowClass {
        ChowClass::one(self.n).scale(&k)
    }
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
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
            Err(parse_err(format!("expected `{c}` at offset {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<ChowClass> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.checked_add(&self.term()?.neg())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '(')
    }

    fn term(&mut self) -> Result<ChowClass> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') || self.starts_atom() {
                let rhs = self.unary()?;
                acc = self.ev.mul(&acc, &rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ChowClass> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| parse_err("exponent out of range"))?;
            return Ok(base.pow_with(e, self.ev.pairing));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| parse_err(format!("expected an integer at offset {start}")))
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    /// The raw text up to the matching `)`, which is consumed.
    fn balanced(&mut self) -> Result<&str> {
        let start = self.pos;
        let mut depth = 1usize;
        for (i, c) in self.src[start..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        self.pos = start + i + 1;
                        return Ok(&self.src[start..start + i]);
                    }
                }
                _ => {}
            }
        }
        Err(parse_err("unbalanced parentheses"))
    }

    fn atom(&mut self) -> Result<ChowClass> {
        let ev = self.ev;
        let n = ev.n;
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(ev.constant(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                let name = self.ident().to_string();
                match name.as_str() {
                    "h" => Ok(ChowClass::h(n)),
                    "pt" => Ok(ChowClass::point(n)),
                    "L" if n % 2 == 1 => ChowClass::lambda_h(n, 0),
                    "L" => Err(parse_err("use L1 or L2 on an even quadric")),
                    "L1" => ChowClass::ruling(n, 1),
                    "L2" => ChowClass::ruling(n, 2),
                    "deg" | "swap" => {
                        self.expect('(')?;
                        let inner = self.expr()?;
                        self.expect(')')?;
                        if name == "deg" {
                            Ok(ev.constant(inner.degree()?))
                        } else {
                            Ok(inner.swap_rulings())
                        }
                    }
                    _ if name.starts_with('c') => {
                        let index = &name[1..];
                        let which: Option<usize> = if index.is_empty() {
                            None
                        } else {
                            Some(index.parse().map_err(|_| parse_err(format!("unknown name `{name}` at offset {at}")))?)
                        };
                        self.expect('(')?;
                        let spec: BundleSpec = self.balanced()?.parse()?;
                        let series = spec.chern(n)?;
                        Ok(match which {
                            None => series.total().clone(),
                            Some(i) if i <= n => series.c(i),
                            Some(_) => ChowClass::zero(n),
                        })
                    }
                    _ => Err(parse_err(format!("unknown name `{name}` at offset {at}"))),
                }
            }
            Some(c) => Err(parse_err(format!("unexpected `{c}` at offset {}", self.pos))),
            None => Err(parse_err("unexpected end of expression")),
        }
    }
}
