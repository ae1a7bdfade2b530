//! Polynomials in the classes `L, e_1, e_2, y_1, y_2, y_3` of a scroll
//! `X = P(E) -> Y`, with coefficients in `Q[d]`.
//!
//! Products whose base degree (total weight of the `e` and `y` factors)
//! exceeds `dim Y` vanish, since they are pulled back from `Y`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::{RatPoly, Rational};
use crate::{Error, Result};

/// Generators, in exponent order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    L,
    E1,
    E2,
    Y1,
    Y2,
    Y3,
}

const NAMES: [&str; 6] = ["L", "e1", "e2", "y1", "y2", "y3"];
const WEIGHTS: [u32; 6] = [1, 1, 2, 1, 2, 3];

/// Exponent vector over `(L, e1, e2, y1, y2, y3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [u8; 6]);

impl Monomial {
    pub const ONE: Self = Self([0; 6]);

    pub fn of(g: Gen) -> Self {
        let mut e = [0; 6];
        e[g as usize] = 1;
        Self(e)
    }

    /// Product of the listed generators, e.g. `[L, L, e1]` for `L²e1`.
    pub fn product(gens: &[Gen]) -> Self {
        gens.iter().fold(Self::ONE, |m, &g| m.times(Self::of(g)))
    }

    pub fn times(self, other: Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Self(e)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().zip(WEIGHTS).map(|(&e, w)| u32::from(e) * w).sum()
    }

    pub fn base_degree(&self) -> u32 {
        self.weight() - u32::from(self.0[0])
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (k, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(NAMES[k]),
                _ => s.push_str(&alloc::format!("{}^{}", NAMES[k], e)),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

/// Element of the truncated class ring of a scroll over a base of
/// dimension `base_dim`.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassPoly {
    base_dim: u32,
    terms: BTreeMap<Monomial, RatPoly>,
}

impl ClassPoly {
    pub fn zero(base_dim: u32) -> Self {
        Self { base_dim, terms: BTreeMap::new() }
    }

    pub fn term(base_dim: u32, m: Monomial, c: RatPoly) -> Self {
        let mut p = Self::zero(base_dim);
        p.push(m, c);
        p
    }

    pub fn constant(base_dim: u32, c: RatPoly) -> Self {
        Self::term(base_dim, Monomial::ONE, c)
    }

    pub fn one(base_dim: u32) -> Self {
        Self::constant(base_dim, RatPoly::one())
    }

    pub fn gen(base_dim: u32, g: Gen) -> Self {
        Self::term(base_dim, Monomial::of(g), RatPoly::one())
    }

    /// Builds `Σ c_k m_k` from integer coefficients.
    pub fn from_terms(base_dim: u32, terms: &[(i64, &[Gen])]) -> Self {
        let mut p = Self::zero(base_dim);
        for (c, gens) in terms {
            p.push(Monomial::product(gens), RatPoly::from_integers(&[*c]));
        }
        p
    }

    fn push(&mut self, m: Monomial, c: RatPoly) {
        if m.base_degree() > self.base_dim || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(RatPoly::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> RatPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.push(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatPoly::from_integers(&[-1]))
    }

    pub fn scale(&self, c: &RatPoly) -> Self {
        let mut out = Self::zero(self.base_dim);
        for (m, v) in &self.terms {
            out.push(*m, v * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&RatPoly::from_integers(&[c]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.base_dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.push(a.times(*b), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.base_dim), |acc, _| acc.mul(self))
    }

    /// Homogeneous part of the given weight.
    pub fn part(&self, weight: u32) -> Self {
        let mut out = Self::zero(self.base_dim);
        for (m, c) in &self.terms {
            if m.weight() == weight {
                out.push(*m, c.clone());
            }
        }
        out
    }

    /// Coefficients against `vars`; fails if another monomial survives.
    pub fn coefficients_in(&self, vars: &[Monomial]) -> Result<Vec<RatPoly>> {
        if let Some(m) = self.terms.keys().find(|m| !vars.contains(m)) {
            return Err(Error::InvalidInput(alloc::format!("monomial {} is not a variable", m.render())));
        }
        Ok(vars.iter().map(|m| self.coeff(m)).collect())
    }

    /// Evaluates the coefficients at `d`.
    pub fn at(&self, d: &Rational) -> Self {
        let mut out = Self::zero(self.base_dim);
        for (m, c) in &self.terms {
            out.push(*m, RatPoly::constant(c.eval(d)));
        }
        out
    }
}

impl fmt::Display for ClassPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (core::cmp::Reverse(m.0[0]), core::cmp::Reverse(**m)));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({}){}", c.display_in("d"), if *m == Monomial::ONE { String::new() } else { m.render() })?;
        }
        Ok(())
    }
}

impl fmt::Debug for ClassPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
