//! Total Chern classes on quadrics, the spinor and Cayley bundles, and the
//! passage from a two-term resolution to the Chern classes of an ideal sheaf.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chow::{ChowClass, MiddlePairing};
use crate::exact::{binom, Rational};
use crate::{Error, Result};

/// Rank together with the total Chern class `1 + c_1 + ... + c_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChernSeries {
    rank: i64,
    total: ChowClass,
}

impl ChernSeries {
    /// Fails unless `total` starts with `1`.
    pub fn new(rank: i64, total: ChowClass) -> Result<Self> {
        if !total.coefficient(0, 0).is_one() {
            return Err(Error::InvalidInput("total Chern class must start with 1".into()));
        }
        Ok(Self { rank, total })
    }

    pub fn trivial(n: usize, rank: i64) -> Self {
        Self { rank, total: ChowClass::one(n) }
    }

    /// `c(O(a)) = 1 + a h`.
    pub fn line(n: usize, a: i64) -> Self {
        let total = ChowClass::one(n).add(&ChowClass::h(n).scale(&BigInt::from(a)));
        Self { rank: 1, total }
    }

    /// Series `1 + Σ c_i h^i` with integer coefficients.
    pub fn from_h_coefficients(n: usize, rank: i64, coeffs: &[BigInt]) -> Self {
        let mut all = Vec::with_capacity(coeffs.len() + 1);
        all.push(BigInt::one());
        all.extend_from_slice(coeffs);
        Self { rank, total: ChowClass::from_h_polynomial(n, &all) }
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn total(&self) -> &ChowClass {
        &self.total
    }

    /// `c_i`, zero beyond the dimension.
    pub fn c(&self, i: usize) -> ChowClass {
        self.total.component(i)
    }

    /// `c_i` as multiples of `h^i`, when every class is such a multiple.
    pub fn h_coefficients(&self) -> Option<Vec<Rational>> {
        self.total.h_coefficients()
    }

    pub fn whitney(&self, other: &Self) -> Result<Self> {
        Ok(Self { rank: self.rank + other.rank, total: self.total.cup(&other.total)? })
    }

    /// `E(l)`: `c_k(E(l)) = Σ_{i<=k} B(r-i, k-i) (l h)^{k-i} c_i(E)`.
    pub fn twist(&self, l: i64) -> Self {
        let n = self.dim();
        let mut total = ChowClass::zero(n);
        for k in 0..=n {
            for i in 0..=k {
                let coeff = binom(self.rank - i as i64, (k - i) as i64) * BigInt::from(l).pow((k - i) as u32);
                if coeff.is_zero() {
                    continue;
                }
                let term = self.c(i).cup(&ChowClass::h_power(n, k - i)).expect("same quadric");
                total = total.add(&term.scale(&coeff));
            }
        }
        Self { rank: self.rank, total }
    }

    /// `c_i(E^∨) = (-1)^i c_i(E)`.
    pub fn dual(&self) -> Self {
        let n = self.dim();
        let total = (0..=n).fold(ChowClass::zero(n), |acc, i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            acc.add(&self.c(i).scale(&BigInt::from(sign)))
        });
        Self { rank: self.rank, total }
    }

    /// The formal inverse `1 / c`, of rank `-r`.
    pub fn inverse(&self) -> Self {
        let n = self.dim();
        let x = self.total.sub(&ChowClass::one(n));
        let minus_x = x.neg();
        let mut acc = ChowClass::one(n);
        let mut power = ChowClass::one(n);
        for _ in 0..n {
            power = power.cup(&minus_x).expect("same quadric");
            acc = acc.add(&power);
        }
        Self { rank: -self.rank, total: acc }
    }

    /// Exchanges the rulings `Λ1`, `Λ2`.
    pub fn swap_rulings(&self) -> Self {
        Self { rank: self.rank, total: self.total.swap_rulings() }
    }
}

impl fmt::Display for ChernSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.total.fmt(f)
    }
}

/// Indecomposable bundles known to the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BundleTerm {
    /// `O(a)` on any quadric.
    Line(i64),
    /// Spinor bundle `S(l)` on `Q^5`.
    Spinor(i64),
    /// Spinor bundle `S'(l)` on `Q^6`.
    SpinorPrime(i64),
    /// Spinor bundle `S''(l)` on `Q^6`.
    SpinorDoublePrime(i64),
    /// Cayley bundle `C(l)` on `Q^5`.
    Cayley(i64),
    /// `C^∨(l)` on `Q^5`.
    CayleyDual(i64),
    /// `Ψ_i`: only the rank is known.
    Psi { index: u32, rank: u32 },
}

/// Rank of `Ψ_i`, for the indices that occur.
pub fn psi_rank(index: u32) -> Option<u32> {
    match index {
        1 => Some(6),
        3 => Some(26),
        _ => None,
    }
}

impl BundleTerm {
    pub fn rank(&self) -> i64 {
        match self {
            BundleTerm::Line(_) => 1,
            BundleTerm::Spinor(_) | BundleTerm::SpinorPrime(_) | BundleTerm::SpinorDoublePrime(_) => 4,
            BundleTerm::Cayley(_) | BundleTerm::CayleyDual(_) => 2,
            BundleTerm::Psi { rank, .. } => i64::from(*rank),
        }
    }
}

impl fmt::Display for BundleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, twist) = match self {
            BundleTerm::Line(a) => ("O", *a),
            BundleTerm::Spinor(l) => ("S", *l),
            BundleTerm::SpinorPrime(l) => ("S'", *l),
            BundleTerm::SpinorDoublePrime(l) => ("S''", *l),
            BundleTerm::Cayley(l) => ("C", *l),
            BundleTerm::CayleyDual(l) => ("Cv", *l),
            BundleTerm::Psi { index, .. } => return write!(f, "Psi{index}"),
        };
        if twist == 0 {
            f.write_str(name)
        } else {
            write!(f, "{name}({twist})")
        }
    }
}

fn poly_in(l: i64, coeffs: &[i64]) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, &c| acc * BigInt::from(l) + BigInt::from(c))
}

/// `c(S(l))` on `Q^5`, as `[c_1, .., c_4]` multiples of `h^i`.
///
/// `c_4` is `l^4 - 2l^3 + 2l^2 - l`, the value forced by the twist formula.
pub fn spinor_q5_coefficients(l: i64) -> [BigInt; 4] {
    [poly_in(l, &[-2, 4]), poly_in(l, &[2, -6, 6]), poly_in(l, &[-1, 4, -6, 4]), poly_in(l, &[0, -1, 2, -2, 1])]
}

/// The garbled printed form of `c_4(S(l))`, `l^4 - 2l^2 + 2l^2 - l`.
pub fn spinor_q5_c4_printed(l: i64) -> BigInt {
    poly_in(l, &[0, -1, -2 + 2, 0, 1])
}

fn spinor_prime(l: i64) -> ChernSeries {
    let n = 6;
    let lam1 = ChowClass::ruling(n, 1).expect("even quadric");
    let h_part = [BigInt::one(), poly_in(l, &[-2, 4]), poly_in(l, &[2, -6, 6]), poly_in(l, &[0, 4, -6, 4]), poly_in(l, &[0, 0, 2, -2, 1])];
    let lambda_part = lam1.scale(&BigInt::from(-2)).add(&lam1.cup(&ChowClass::h(n)).expect("same quadric").scale(&BigInt::from(-2 * l)));
    let total = ChowClass::from_h_polynomial(n, &h_part).add(&lambda_part);
    ChernSeries { rank: 4, total }
}

fn cayley(l: i64) -> ChernSeries {
    ChernSeries::from_h_coefficients(5, 2, &[poly_in(l, &[-1, 2]), poly_in(l, &[1, -1, 1])])
}

/// Chern series of a catalog term on `Q^n`.
pub fn catalog(n: usize, term: BundleTerm) -> Result<ChernSeries> {
    let needs = |m: usize| -> Result<()> {
        if n == m {
            Ok(())
        } else {
            Err(Error::NotOnQuadric { what: term.to_string(), n })
        }
    };
    match term {
        BundleTerm::Line(a) => Ok(ChernSeries::line(n, a)),
        BundleTerm::Spinor(l) => {
            needs(5)?;
            Ok(ChernSeries::from_h_coefficients(5, 4, &spinor_q5_coefficients(l)))
        }
        BundleTerm::SpinorPrime(l) => {
            needs(6)?;
            Ok(spinor_prime(l))
        }
        BundleTerm::SpinorDoublePrime(l) => {
            needs(6)?;
            Ok(spinor_prime(l).swap_rulings())
        }
        BundleTerm::Cayley(l) => {
            needs(5)?;
            Ok(cayley(l))
        }
        BundleTerm::CayleyDual(l) => {
            needs(5)?;
            Ok(cayley(0).dual().twist(l))
        }
        BundleTerm::Psi { .. } => Err(Error::NoChernData(term.to_string())),
    }
}

/// A direct sum of catalog terms with multiplicities, e.g. `O(-1)^2 + O(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BundleSpec {
    pub terms: Vec<(u32, BundleTerm)>,
}

impl BundleSpec {
    pub fn new(terms: Vec<(u32, BundleTerm)>) -> Self {
        Self { terms }
    }

    pub fn single(term: BundleTerm) -> Self {
        Self { terms: alloc::vec![(1, term)] }
    }

    pub fn rank(&self) -> i64 {
        self.terms.iter().map(|(k, t)| i64::from(*k) * t.rank()).sum()
    }

    pub fn has_chern_data(&self) -> bool {
        !self.terms.iter().any(|(_, t)| matches!(t, BundleTerm::Psi { .. }))
    }

    pub fn chern(&self, n: usize) -> Result<ChernSeries> {
        let mut acc = ChernSeries::trivial(n, 0);
        for (k, term) in &self.terms {
            let c = catalog(n, *term)?;
            for _ in 0..*k {
                acc = acc.whitney(&c)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for BundleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, t)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *k == 1 {
                write!(f, "{t}")?;
            } else {
                write!(f, "{t}^{k}")?;
            }
        }
        Ok(())
    }
}

fn parse_term(raw: &str) -> Result<(u32, BundleTerm)> {
    let err = || Error::Parse(alloc::format!("cannot read bundle term `{raw}`"));
    let s = raw.trim();
    let digits = s.chars().take_while(char::is_ascii_digit).count();
    let (mut mult, s) = if digits > 0 { (s[..digits].parse::<u32>().map_err(|_| err())?, s[digits..].trim_start()) } else { (1, s) };
    let (s, power) = match s.rsplit_once('^') {
        Some((head, tail)) if !tail.is_empty() && tail.chars().all(|c| c.is_ascii_digit()) => {
            (head, tail.parse::<u32>().map_err(|_| err())?)
        }
        _ => (s, 1),
    };
    mult *= power;
    let (name, twist) = match s.find('(') {
        Some(open) => {
            let close = s.rfind(')').filter(|&c| c > open && c == s.len() - 1).ok_or_else(err)?;
            let arg = s[open + 1..close].trim();
            (s[..open].trim(), arg.trim_start_matches('+').parse::<i64>().map_err(|_| err())?)
        }
        None => (s.trim(), 0),
    };
    let term = match name {
        "O" => BundleTerm::Line(twist),
        "S" => BundleTerm::Spinor(twist),
        "S'" => BundleTerm::SpinorPrime(twist),
        "S''" => BundleTerm::SpinorDoublePrime(twist),
        "C" => BundleTerm::Cayley(twist),
        "Cv" | "C^v" | "C*" | "C∨" | "C^∨" => BundleTerm::CayleyDual(twist),
        _ if name.starts_with("Psi") || name.starts_with("Ψ") => {
            let idx = name.trim_start_matches("Psi").trim_start_matches('Ψ');
            let index: u32 = idx.parse().map_err(|_| err())?;
            if twist != 0 {
                return Err(err());
            }
            let rank = psi_rank(index).ok_or_else(err)?;
            BundleTerm::Psi { index, rank }
        }
        _ => return Err(err()),
    };
    if mult == 0 {
        return Err(err());
    }
    Ok((mult, term))
}

impl FromStr for BundleSpec {
    type Err = Error;

    /// Accepts sums such as `O(-1)^2 + O(1)`, `3O`, `S(1) + O(1)`,
    /// `Cv(-2)`, `Psi3 + O^3`. `0` is the zero sheaf.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::default());
        }
        let mut terms = Vec::new();
        let mut depth = 0usize;
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                '+' | '⊕' if depth == 0 => {
                    terms.push(parse_term(&s[start..i])?);
                    start = i + ch.len_utf8();
                }
                _ => {}
            }
        }
        terms.push(parse_term(&s[start..])?);
        Ok(Self { terms })
    }
}

/// `c(I_X(l))` for `0 -> E -> F -> I_X(l) -> 0`, that is `c(F) / c(E)`.
pub fn ideal_chern_from_resolution(n: usize, e: &BundleSpec, f: &BundleSpec) -> Result<ChernSeries> {
    if f.rank() - e.rank() != 1 {
        return Err(Error::InvalidInput(alloc::format!("rank {} - rank {} is not 1", f.rank(), e.rank())));
    }
    for spec in [e, f] {
        if let Some((_, t)) = spec.terms.iter().find(|(_, t)| matches!(t, BundleTerm::Psi { .. })) {
            return Err(Error::NoChernData(t.to_string()));
        }
    }
    f.chern(n)?.whitney(&e.chern(n)?.inverse())
}

/// `d`, `K·L²`, `K²·L`, `K³` of a threefold in `Q^5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaInvariants {
    pub d: Rational,
    pub kl2: Rational,
    pub k2l: Rational,
    pub k3: Rational,
}

/// Recovers `d` and the canonical intersection numbers of a threefold
/// `X ⊂ Q^5` from `c(I_X(l)) = 1 + γ_1 h + ... + γ_5 h^5` using
/// `γ_2 = d/2`, `γ_3 = (K + aL)L²/2`, `γ_4 = (K + aL)²L/2`,
/// `γ_5 = (K + aL)³/2` with `a = 5 - l`.
pub fn gamma_invert(c: &ChernSeries, l: i64) -> Result<GammaInvariants> {
    if c.dim() != 5 {
        return Err(Error::UnsupportedDimension(c.dim() as u32));
    }
    let g = c.h_coefficients().ok_or_else(|| Error::InvalidInput("Chern classes are not multiples of powers of h".into()))?;
    let l_r = Rational::from_integer(BigInt::from(l));
    if g[1] != l_r {
        return Err(Error::TwistMismatch { expected: l.to_string(), found: crate::exact::fmt_rational(&g[1]) });
    }
    let two = Rational::from_integer(BigInt::from(2));
    let three = Rational::from_integer(BigInt::from(3));
    let a = Rational::from_integer(BigInt::from(5 - l));
    let d = &two * &g[2];
    let kl2 = &two * &g[3] - &a * &d;
    let k2l = &two * &g[4] - &two * &a * &kl2 - &a * &a * &d;
    let k3 = &two * &g[5] - &three * &a * &k2l - &three * &a * &a * &kl2 - &a * &a * &a * &d;
    Ok(GammaInvariants { d, kl2, k2l, k3 })
}

/// Shape of a degeneracy locus `D_k(φ)` for `φ: O^m -> E`, `rank E = target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PorteousShape {
    pub source: usize,
    pub target: usize,
    pub k: usize,
}

impl PorteousShape {
    /// Three sections of a rank-four bundle, dropping rank to at most one.
    pub const THREE_SECTIONS_RANK_FOUR: Self = Self { source: 3, target: 4, k: 1 };
}

/// `[D_1(φ)] = c_3² - c_2 c_4` for three sections of a rank-four bundle.
pub fn porteous_d1(series: &ChernSeries, shape: PorteousShape, pairing: MiddlePairing) -> Result<ChowClass> {
    if shape != PorteousShape::THREE_SECTIONS_RANK_FOUR || series.rank() != 4 {
        return Err(Error::Unsupported(alloc::format!(
            "degeneracy class for shape {}x{} with k = {} and rank {}",
            shape.source,
            shape.target,
            shape.k,
            series.rank()
        )));
    }
    let c3sq = series.c(3).cup_with(&series.c(3), pairing)?;
    let c2c4 = series.c(2).cup_with(&series.c(4), pairing)?;
    Ok(c3sq.sub(&c2c4))
}

/// Renders `c` as `1 + 3h + ...` using `h`-multiples where possible.
pub fn render_h_series(c: &ChernSeries) -> String {
    match c.h_coefficients() {
        None => c.to_string(),
        Some(coeffs) => {
            let n = c.dim();
            let mut s = String::new();
            for (i, k) in coeffs.iter().enumerate().take(n + 1) {
                if k.is_zero() {
                    continue;
                }
                let neg = crate::exact::is_negative(k);
                let mag = crate::exact::fmt_rational(&if neg { -k.clone() } else { k.clone() });
                let var = match i {
                    0 => String::new(),
                    1 => "h".into(),
                    _ => alloc::format!("h^{i}"),
                };
                let body = if i > 0 && mag == "1" {
                    var
                } else if mag.contains('/') && i > 0 {
                    alloc::format!("({mag}){var}")
                } else {
                    alloc::format!("{mag}{var}")
                };
                match (s.is_empty(), neg) {
                    (true, true) => s.push('-'),
                    (true, false) => {}
                    (false, true) => s.push_str(" - "),
                    (false, false) => s.push_str(" + "),
                }
                s.push_str(&body);
            }
            if s.is_empty() {
                s.push('0');
            }
            s
        }
    }
}
