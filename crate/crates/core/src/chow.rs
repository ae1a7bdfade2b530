//! Integral cohomology ring of a smooth quadric `Q^n`.
//!
//! Basis, with `m = floor(n / 2)`:
//!
//! * odd `n = 2m + 1`: `h^i` for `i <= m`, then `Λ h^j` for `j = 0..=m`
//!   (codimension `m + 1 + j`), with `h^{m+1} = 2Λ`;
//! * even `n = 2m`: `h^i` for `i < m`, the two rulings `Λ1`, `Λ2` in the
//!   middle with `h^m = Λ1 + Λ2`, then `Λ h^j` for `j = 1..=m` where
//!   `Λ h^j = Λ1 h^j = Λ2 h^j`.
//!
//! In both cases `Λ h^m` is the class of a point and `deg h^n = 2`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::Rational;
use crate::{Error, Result};

/// Intersection form on the two middle classes of an even quadric `Q^{2m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MiddlePairing {
    /// `Λi·Λj = δij` when `m` is even and `1 - δij` when `m` is odd. This is
    /// the pairing of the two families of maximal linear subspaces.
    #[default]
    Parity,
    /// `Λi·Λj = δij` for every `m`. Kept only to reproduce the regression
    /// against the literal Kronecker statement; wrong for odd `m`.
    Kronecker,
}

impl MiddlePairing {
    fn pair(self, m: usize, i: usize, j: usize) -> bool {
        match self {
            MiddlePairing::Kronecker => i == j,
            MiddlePairing::Parity => (i == j) == m.is_multiple_of(2),
        }
    }
}

/// A basis element in codimension `codim`, slot `slot` (slot 1 only exists
/// for `Λ2` in the middle of an even quadric).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Basis {
    /// `h^a` below the middle.
    H(usize),
    /// A ruling class (even quadrics, middle): 0 for `Λ1`, 1 for `Λ2`.
    Ruling(usize),
    /// `Λ h^j` (odd: `j >= 0`, even: `j >= 1`).
    LambdaH(usize),
}

/// An element of `H^*(Q^n, Z)`, stored as one coefficient vector per
/// codimension `0..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChowClass {
    n: usize,
    parts: Vec<Vec<BigInt>>,
}

fn half(n: usize) -> usize {
    n / 2
}

fn basis_len(n: usize, codim: usize) -> usize {
    if n.is_multiple_of(2) && codim == n / 2 {
        2
    } else {
        1
    }
}

fn basis_of(n: usize, codim: usize, slot: usize) -> Basis {
    let m = half(n);
    if n % 2 == 1 {
        if codim <= m {
            Basis::H(codim)
        } else {
            Basis::LambdaH(codim - m - 1)
        }
    } else if codim < m {
        Basis::H(codim)
    } else if codim == m {
        Basis::Ruling(slot)
    } else {
        Basis::LambdaH(codim - m)
    }
}

fn codim_of(n: usize, b: Basis) -> usize {
    let m = half(n);
    match b {
        Basis::H(a) => a,
        Basis::Ruling(_) => m,
        Basis::LambdaH(j) => {
            if n % 2 == 1 {
                m + 1 + j
            } else {
                m + j
            }
        }
    }
}

impl ChowClass {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "quadrics of dimension 0 are not supported");
        Self { n, parts: (0..=n).map(|i| vec![BigInt::zero(); basis_len(n, i)]).collect() }
    }

    pub fn one(n: usize) -> Self {
        let mut c = Self::zero(n);
        c.parts[0][0] = BigInt::one();
        c
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn basis(n: usize, b: Basis) -> Self {
        let mut c = Self::zero(n);
        let codim = codim_of(n, b);
        let slot = if let Basis::Ruling(s) = b { s } else { 0 };
        c.parts[codim][slot] = BigInt::one();
        c
    }

    /// `h^e`, written in the basis (zero for `e > n`).
    pub fn h_power(n: usize, e: usize) -> Self {
        let m = half(n);
        if e > n {
            return Self::zero(n);
        }
        if n % 2 == 1 {
            if e <= m {
                Self::basis(n, Basis::H(e))
            } else {
                Self::basis(n, Basis::LambdaH(e - m - 1)).scale(&BigInt::from(2))
            }
        } else if e < m {
            Self::basis(n, Basis::H(e))
        } else if e == m {
            Self::basis(n, Basis::Ruling(0)).add(&Self::basis(n, Basis::Ruling(1)))
        } else {
            Self::basis(n, Basis::LambdaH(e - m)).scale(&BigInt::from(2))
        }
    }

    pub fn h(n: usize) -> Self {
        Self::h_power(n, 1)
    }

    /// `Λ h^j`: on odd quadrics `j >= 0`; on even quadrics `j >= 1`
    /// (use [`ChowClass::ruling`] for the middle).
    pub fn lambda_h(n: usize, j: usize) -> Result<Self> {
        let m = half(n);
        let ok = if n % 2 == 1 { j <= m } else { (1..=m).contains(&j) };
        if !ok {
            return Err(Error::NotOnQuadric { what: alloc::format!("Λh^{j}"), n });
        }
        Ok(Self::basis(n, Basis::LambdaH(j)))
    }

    /// `Λ1` (`which = 1`) or `Λ2` (`which = 2`) on an even quadric.
    pub fn ruling(n: usize, which: usize) -> Result<Self> {
        if n % 2 == 1 || !(1..=2).contains(&which) {
            return Err(Error::NotOnQuadric { what: alloc::format!("Λ{which}"), n });
        }
        Ok(Self::basis(n, Basis::Ruling(which - 1)))
    }

    /// The class of a point.
    pub fn point(n: usize) -> Self {
        Self::basis(n, Basis::LambdaH(half(n)))
    }

    /// `Σ c_i h^i`.
    pub fn from_h_polynomial(n: usize, coeffs: &[BigInt]) -> Self {
        coeffs.iter().enumerate().fold(Self::zero(n), |acc, (i, c)| acc.add(&Self::h_power(n, i).scale(c)))
    }

    /// Raw coefficient of the `slot`-th basis element in codimension `codim`.
    pub fn coefficient(&self, codim: usize, slot: usize) -> BigInt {
        self.parts.get(codim).and_then(|p| p.get(slot)).cloned().unwrap_or_default()
    }

    pub fn part(&self, codim: usize) -> &[BigInt] {
        &self.parts[codim]
    }

    /// The homogeneous component in codimension `codim`.
    pub fn component(&self, codim: usize) -> Self {
        let mut c = Self::zero(self.n);
        if codim <= self.n {
            c.parts[codim] = self.parts[codim].clone();
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().flatten().all(Zero::is_zero)
    }

    /// Codimensions carrying a non-zero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..=self.n).filter(|&i| self.parts[i].iter().any(|c| !c.is_zero())).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self { n: self.n, parts: self.parts.iter().map(|p| p.iter().map(|c| c * k).collect()).collect() }
    }

    fn zip(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        assert_eq!(self.n, other.n, "classes on different quadrics");
        Self {
            n: self.n,
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect()).collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::QuadricMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.add(other))
    }

    /// Cup product with the geometric middle pairing.
    pub fn cup(&self, other: &Self) -> Result<Self> {
        self.cup_with(other, MiddlePairing::Parity)
    }

    pub fn cup_with(&self, other: &Self, pairing: MiddlePairing) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..=n {
            for (si, a) in self.parts[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..=(n - i) {
                    for (sj, b) in other.parts[j].iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        let prod = basis_product(n, basis_of(n, i, si), basis_of(n, j, sj), pairing);
                        out = out.add(&prod.scale(&(a * b)));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.n), |acc, _| acc.cup(self).expect("same quadric"))
    }

    pub fn pow_with(&self, e: u32, pairing: MiddlePairing) -> Self {
        (0..e).fold(Self::one(self.n), |acc, _| acc.cup_with(self, pairing).expect("same quadric"))
    }

    /// Exchanges `Λ1` and `Λ2` (identity on odd quadrics).
    pub fn swap_rulings(&self) -> Self {
        let mut c = self.clone();
        if self.n.is_multiple_of(2) {
            c.parts[self.n / 2].swap(0, 1);
        }
        c
    }

    /// Degree of a class concentrated in top codimension.
    pub fn degree(&self) -> Result<BigInt> {
        if self.support().iter().any(|&i| i != self.n) {
            return Err(Error::NotTopDegree);
        }
        Ok(self.parts[self.n][0].clone())
    }

    /// If the codimension-`codim` component is a rational multiple of `h^codim`,
    /// return that multiple.
    pub fn h_coefficient(&self, codim: usize) -> Option<Rational> {
        if codim > self.n {
            return Some(Rational::zero());
        }
        let part = &self.parts[codim];
        let m = half(self.n);
        let two = BigInt::from(2);
        if self.n.is_multiple_of(2) && codim == m {
            return (part[0] == part[1]).then(|| Rational::from_integer(part[0].clone()));
        }
        let above = codim > m;
        if above {
            Some(Rational::new(part[0].clone(), two))
        } else {
            Some(Rational::from_integer(part[0].clone()))
        }
    }

    /// All `h`-coefficients `c_0, ..., c_n`, if every component is a multiple
    /// of a power of `h`.
    pub fn h_coefficients(&self) -> Option<Vec<Rational>> {
        (0..=self.n).map(|i| self.h_coefficient(i)).collect()
    }

    /// Renders the class in the `h` / `Λ` basis, e.g. `1 + 3h + 6h^2 + 18Λ`.
    pub fn render(&self) -> String {
        let mut terms: Vec<(bool, String)> = Vec::new();
        for i in 0..=self.n {
            for (slot, c) in self.parts[i].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let name = basis_name(basis_of(self.n, i, slot));
                let mag = c.abs();
                let body = if name.is_empty() {
                    alloc::format!("{mag}")
                } else if mag.is_one() {
                    name
                } else {
                    alloc::format!("{mag}{name}")
                };
                terms.push((c.is_negative(), body));
            }
        }
        if terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, (neg, body)) in terms.into_iter().enumerate() {
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

fn basis_name(b: Basis) -> String {
    match b {
        Basis::H(0) => String::new(),
        Basis::H(1) => String::from("h"),
        Basis::H(a) => alloc::format!("h^{a}"),
        Basis::Ruling(s) => alloc::format!("Λ{}", s + 1),
        Basis::LambdaH(0) => String::from("Λ"),
        Basis::LambdaH(1) => String::from("Λh"),
        Basis::LambdaH(j) => alloc::format!("Λh^{j}"),
    }
}

fn basis_product(n: usize, a: Basis, b: Basis, pairing: MiddlePairing) -> ChowClass {
    let m = half(n);
    if codim_of(n, a) + codim_of(n, b) > n {
        return ChowClass::zero(n);
    }
    match (a, b) {
        (Basis::H(x), Basis::H(y)) => ChowClass::h_power(n, x + y),
        (Basis::H(0), other) | (other, Basis::H(0)) => ChowClass::basis(n, other),
        (Basis::H(x), Basis::Ruling(_)) | (Basis::Ruling(_), Basis::H(x)) => ChowClass::basis(n, Basis::LambdaH(x)),
        (Basis::H(x), Basis::LambdaH(j)) | (Basis::LambdaH(j), Basis::H(x)) => ChowClass::basis(n, Basis::LambdaH(j + x)),
        (Basis::Ruling(i), Basis::Ruling(j)) => {
            if pairing.pair(m, i, j) {
                ChowClass::point(n)
            } else {
                ChowClass::zero(n)
            }
        }
        // two classes from the upper half always land beyond the top
        _ => ChowClass::zero(n),
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[Q^{}] {}", self.n, self.render())
    }
}

/// Result of [`balanced_class_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceReport {
    pub balanced: bool,
    /// `deg(cls · h^{n-2})`.
    pub degree: BigInt,
    /// True when `n >= 5`, where every codimension-two class is a multiple
    /// of `h^2` and therefore has even degree.
    pub degree_must_be_even: bool,
}

/// Decides whether a codimension-two class can be the class of a hyperplane
/// section of a codimension-two subvariety of the next quadric up: below the
/// middle it must be a multiple of `h^2`, in the middle of `Q^4` it must have
/// equal `Λ1` and `Λ2` coefficients.
pub fn balanced_class_check(cls: &ChowClass) -> Result<BalanceReport> {
    let n = cls.dim();
    if n < 2 || cls.support().iter().any(|&i| i != 2) {
        return Err(Error::InvalidInput("expected a codimension-two class".into()));
    }
    let part = cls.part(2);
    let balanced = part.len() == 1 || part[0] == part[1];
    let degree = cls.cup(&ChowClass::h_power(n, n - 2))?.degree()?;
    Ok(BalanceReport { balanced, degree, degree_must_be_even: n >= 5 })
}

/// The class `(d/2) h^2` of a degree-`d` codimension-two subvariety of `Q^n`,
/// `n >= 5`. Odd degrees are rejected because `H^4(Q^n, Z) = Z h^2` and
/// `deg h^n = 2`.
pub fn codim_two_class(n: usize, d: i64) -> Result<ChowClass> {
    if n < 5 {
        return Err(Error::InvalidInput(alloc::format!("codimension-two classes are not multiples of h^2 on Q^{n}")));
    }
    if d % 2 != 0 {
        return Err(Error::InvalidInput(alloc::format!("degree {d} is odd; codimension-two subvarieties of Q^{n} have even degree")));
    }
    Ok(ChowClass::h_power(n, 2).scale(&BigInt::from(d / 2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn odd_quadric_relations() {
        // Q^5: h^3 = 2Λ, deg h^5 = 2, deg Λh^2 = 1
        let n = 5;
        let h = ChowClass::h(n);
        let h2 = ChowClass::h_power(n, 2);
        assert_eq!(h.cup(&h2).unwrap(), ChowClass::lambda_h(n, 0).unwrap().scale(&big(2)));
        assert_eq!(h2.cup(&ChowClass::h_power(n, 3)).unwrap().degree().unwrap(), big(2));
        assert_eq!(ChowClass::lambda_h(n, 2).unwrap().degree().unwrap(), big(1));
        assert_eq!(h.pow(5), ChowClass::point(n).scale(&big(2)));
    }

    #[test]
    fn even_quadric_middle() {
        let n = 6;
        let l1 = ChowClass::ruling(n, 1).unwrap();
        let l2 = ChowClass::ruling(n, 2).unwrap();
        assert_eq!(l1.cup(&l2).unwrap().degree().unwrap(), big(1));
        assert!(l1.cup(&l1).unwrap().is_zero());
        let literal = l1.cup_with(&l1, MiddlePairing::Kronecker).unwrap();
        assert_eq!(literal.degree().unwrap(), big(1));
        // Q^4: m even, Kronecker and parity coincide
        let a = ChowClass::ruling(4, 1).unwrap();
        assert_eq!(a.cup(&a).unwrap().degree().unwrap(), big(1));
        assert!(a.cup(&ChowClass::ruling(4, 2).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn top_degree_of_h_is_two_both_parities() {
        for n in 1..=9 {
            assert_eq!(ChowClass::h(n).pow(n as u32).degree().unwrap(), big(2), "n = {n}");
        }
        for m in [2usize, 3] {
            let n = 2 * m;
            let mid = ChowClass::ruling(n, 1).unwrap().add(&ChowClass::ruling(n, 2).unwrap());
            assert_eq!(mid, ChowClass::h_power(n, m));
            assert_eq!(mid.cup(&mid).unwrap().degree().unwrap(), big(2));
            assert_eq!(mid.cup(&ChowClass::h_power(n, m)).unwrap().degree().unwrap(), big(2));
        }
    }

    #[test]
    fn degree_rejects_lower_classes() {
        assert_eq!(ChowClass::h(5).degree(), Err(Error::NotTopDegree));
        assert!(matches!(ChowClass::h(5).cup(&ChowClass::h(6)), Err(Error::QuadricMismatch(5, 6))));
    }

    #[test]
    fn rendering() {
        assert_eq!(ChowClass::h_power(5, 3).render(), "2Λ");
        assert_eq!(ChowClass::h_power(6, 3).render(), "Λ1 + Λ2");
        let c = ChowClass::one(5).add(&ChowClass::h(5).scale(&big(-3)));
        assert_eq!(c.render(), "1 - 3h");
        assert_eq!(ChowClass::zero(3).render(), "0");
    }

    #[test]
    fn h_coefficients_read_back() {
        let coeffs: Vec<BigInt> = [1, 3, 6, 9, 9].iter().map(|&x| big(x)).collect();
        let c = ChowClass::from_h_polynomial(5, &coeffs);
        let back = c.h_coefficients().unwrap();
        assert_eq!(back[..5], coeffs.iter().map(|x| Rational::from_integer(x.clone())).collect::<Vec<_>>()[..]);
        assert!(ChowClass::ruling(6, 1).unwrap().h_coefficient(3).is_none());
    }

    #[test]
    fn balance() {
        let mid = ChowClass::ruling(4, 1).unwrap().scale(&big(3)).add(&ChowClass::ruling(4, 2).unwrap().scale(&big(3)));
        let r = balanced_class_check(&mid).unwrap();
        assert!(r.balanced);
        assert_eq!(r.degree, big(6));
        let lop = ChowClass::ruling(4, 1).unwrap().scale(&big(4)).add(&ChowClass::ruling(4, 2).unwrap().scale(&big(2)));
        assert!(!balanced_class_check(&lop).unwrap().balanced);
        let on5 = codim_two_class(5, 12).unwrap();
        let r5 = balanced_class_check(&on5).unwrap();
        assert!(r5.balanced && r5.degree_must_be_even);
        assert_eq!(r5.degree, big(12));
        assert!(codim_two_class(5, 7).is_err());
    }

    fn class_strategy(n: usize) -> impl Strategy<Value = ChowClass> {
        let len: usize = (0..=n).map(|i| basis_len(n, i)).sum();
        proptest::collection::vec(-4i64..5, len).prop_map(move |v| {
            let mut c = ChowClass::zero(n);
            let mut it = v.into_iter();
            for i in 0..=n {
                for s in 0..basis_len(n, i) {
                    c.parts[i][s] = BigInt::from(it.next().unwrap());
                }
            }
            c
        })
    }

    fn triple() -> impl Strategy<Value = (ChowClass, ChowClass, ChowClass)> {
        (1usize..=8).prop_flat_map(|n| (class_strategy(n), class_strategy(n), class_strategy(n)))
    }

    proptest! {
        #[test]
        fn cup_is_commutative_and_associative((a, b, c) in triple()) {
            prop_assert_eq!(a.cup(&b).unwrap(), b.cup(&a).unwrap());
            prop_assert_eq!(a.cup(&b).unwrap().cup(&c).unwrap(), a.cup(&b.cup(&c).unwrap()).unwrap());
            prop_assert_eq!(a.cup(&b.add(&c)).unwrap(), a.cup(&b).unwrap().add(&a.cup(&c).unwrap()));
        }
    }
}
