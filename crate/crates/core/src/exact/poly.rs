use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{fmt_rational, Rational};

/// Univariate polynomial with rational coefficients; `coeffs[i]` multiplies
/// `x^i`. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `a + b x`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `a + b x` for `x`.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Self {
        let inner = Self::linear(a.clone(), b.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * &inner) + &Self::constant(c.clone()))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor.leading().expect("division by the zero polynomial").clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Rational roots, each listed once, in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots: Vec<Rational> = Vec::new();
        if self.is_zero() {
            return roots;
        }
        // clear denominators, then rational root theorem on the primitive part
        let mut p = self.clone();
        while p.coeff(0).is_zero() && !p.is_zero() {
            if !roots.iter().any(Zero::is_zero) {
                roots.push(Rational::zero());
            }
            p = Self::from_coeffs(p.coeffs[1..].to_vec());
        }
        let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        if ints.len() > 1 {
            let a0 = ints[0].abs();
            let an = ints[ints.len() - 1].abs();
            for num in divisors(&a0) {
                for den in divisors(&an) {
                    for sign in [1i32, -1] {
                        let cand = Rational::new(num.clone() * BigInt::from(sign), den.clone());
                        if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// `B(x + shift, k)` as a polynomial in `x`, i.e.
    /// `(x + shift)(x + shift - 1)...(x + shift - k + 1) / k!`.
    pub fn binomial_shifted(shift: i64, k: u32) -> Self {
        let mut acc = Self::one();
        let mut fact = BigInt::one();
        for j in 0..k {
            acc = &acc * &Self::linear(Rational::from_integer(BigInt::from(shift - j as i64)), Rational::one());
            fact *= BigInt::from(j + 1);
        }
        acc.scale(&Rational::new(BigInt::one(), fact))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Renders with the given indeterminate name, highest power first.
    pub fn display_in(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            if k == 0 || !unit {
                if k > 0 && !mag.is_integer() {
                    let _ = write!(out, "({})", fmt_rational(&mag));
                } else {
                    out.push_str(&fmt_rational(&mag));
                }
            }
            match k {
                0 => {}
                1 => {
                    let _ = write!(out, "{}", var);
                }
                _ => {
                    let _ = write!(out, "{}^{}", var, k);
                }
            }
        }
        out
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            out.push(i.clone());
            let other = n / &i;
            if other != i {
                out.push(other);
            }
        }
        i += 1;
    }
    out
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl From<Rational> for RatPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn poly_strategy() -> impl Strategy<Value = RatPoly> {
        proptest::collection::vec((-20i64..20, 1i64..6), 0..6)
            .prop_map(|cs| RatPoly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    #[test]
    fn trims_and_evaluates() {
        let p = RatPoly::from_integers(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.eval(&int(3)), int(7));
        assert!(RatPoly::from_integers(&[0, 0]).is_zero());
    }

    #[test]
    fn binomial_shifted_counts() {
        // B(t + 4, 4) at t = 4 is B(8, 4) = 70
        let p = RatPoly::binomial_shifted(4, 4);
        assert_eq!(p.eval(&int(4)), int(70));
        assert_eq!(p.eval(&int(9)), int(715));
    }

    #[test]
    fn division_and_roots() {
        // (x + 1)(x - 1)(x - 2)
        let p = RatPoly::from_integers(&[2, -1, -2, 1]);
        let (q, r) = p.div_rem(&RatPoly::from_integers(&[-2, 1]));
        assert!(r.is_zero());
        assert_eq!(q, RatPoly::from_integers(&[-1, 0, 1]));
        assert_eq!(p.rational_roots(), vec![int(-1), int(1), int(2)]);
        let half = RatPoly::from_integers(&[-1, 2]);
        assert_eq!(half.rational_roots(), vec![rat(1, 2)]);
    }

    #[test]
    fn display() {
        let p = RatPoly::from_coeffs(vec![int(-1), rat(59, 60), int(0), int(-1)]);
        assert_eq!(p.display_in("t"), "-t^3 + (59/60)t - 1");
        assert_eq!(RatPoly::zero().display_in("d"), "0");
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_map(p in poly_strategy(), q in poly_strategy(), x in -10i64..10) {
            let x = int(x);
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        }

        #[test]
        fn div_rem_reconstructs(p in poly_strategy(), q in poly_strategy()) {
            prop_assume!(!q.is_zero());
            let (quot, rem) = p.div_rem(&q);
            prop_assert_eq!(&(&quot * &q) + &rem, p);
            prop_assert!(rem.degree() < q.degree() || rem.is_zero());
        }
    }
}
