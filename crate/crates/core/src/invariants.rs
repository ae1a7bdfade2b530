//! Numerical invariants of codimension-two subvarieties of quadrics: double
//! point relations, intersection numbers of a threefold in `Q^5`, Hilbert
//! polynomials and Hilbert-scheme dimensions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::{binom, int, rat, RatPoly, Rational};
use crate::{Error, Result};

/// Degree, sectional genus and Euler characteristics of a codimension-two
/// subvariety `X ⊂ Q^n` and of its surface section `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantRecord {
    pub n: u32,
    pub d: i64,
    pub g: i64,
    pub chi_s: i64,
    pub chi_x: i64,
    pub q: Option<i64>,
    pub p_g: Option<i64>,
}

impl InvariantRecord {
    pub fn new(n: u32, d: i64, g: i64, chi_s: i64, chi_x: i64) -> Result<Self> {
        if n >= 5 && d % 2 != 0 {
            return Err(Error::InvalidInput(alloc::format!("degree {d} is odd on Q^{n}")));
        }
        if d <= 0 {
            return Err(Error::InvalidInput(alloc::format!("degree {d} is not positive")));
        }
        Ok(Self { n, d, g, chi_s, chi_x, q: None, p_g: None })
    }

    /// Attaches `q` and `p_g` of the surface section, checking
    /// `χ(O_S) = 1 - q + p_g`.
    pub fn with_surface_hodge(mut self, q: i64, p_g: i64) -> Result<Self> {
        if 1 - q + p_g != self.chi_s {
            return Err(Error::InvalidInput(alloc::format!("1 - q + p_g = {} but χ(O_S) = {}", 1 - q + p_g, self.chi_s)));
        }
        self.q = Some(q);
        self.p_g = Some(p_g);
        Ok(self)
    }

    fn require_q5(&self) -> Result<()> {
        if self.n != 5 {
            return Err(Error::UnsupportedDimension(self.n));
        }
        Ok(())
    }
}

/// Intersection numbers of a threefold `X ⊂ Q^5` with `K = K_X` and `L` the
/// hyperplane class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DerivedInvariants {
    pub kl2: Rational,
    pub k2l: Rational,
    pub k3: Rational,
    pub c2l: Rational,
    pub c3: Rational,
}

/// Closed formulas in `d`, `g`, `χ(O_S)`, `χ(O_X)`.
pub fn derived_invariants(r: &InvariantRecord) -> Result<DerivedInvariants> {
    r.require_q5()?;
    let d = int(r.d);
    let gm1 = int(r.g - 1);
    let chi_s = int(r.chi_s);
    let chi_x = int(r.chi_x);
    let d2 = &d * &d;
    let kl2 = int(2) * &gm1 - int(2) * &d;
    let k2l = &d2 / int(4) + rat(3, 2) * &d - int(8) * &gm1 + int(6) * &chi_s;
    let c2l = -&d2 / int(4) + rat(5, 2) * &d + int(2) * &gm1 + int(6) * &chi_s;
    let c3 = &d2 / int(4) - &d / int(2) - int(10) * &gm1 + int(r.g) * &d - int(30) * &chi_s + int(24) * &chi_x;
    let k3 = (&d / int(2) - int(11)) * &kl2 - int(5) * &k2l - int(24) * &chi_x;
    Ok(DerivedInvariants { kl2, k2l, k3, c2l, c3 })
}

/// The same numbers obtained by intersecting the double point relations
/// with `L` and `K` (using `c_1 = -K` and `c_1 c_2 = 24 χ(O_X)`), taking
/// only `K·L²` and `K²·L` from the closed formulas.
pub fn derived_invariants_by_cutting(r: &InvariantRecord) -> Result<DerivedInvariants> {
    r.require_q5()?;
    let base = derived_invariants(r)?;
    let (kl2, k2l) = (base.kl2, base.k2l);
    let n = 5;
    let dpf2 = Dpf2::for_n(n);
    let dpf3 = Dpf3::for_n(n);
    let d = int(r.d);
    let chi_x = int(r.chi_x);
    let c1c2 = int(24) * &chi_x;
    // c1 = -K, so c1·L² = -KL², c1²·L = K²L, c1³ = -K³
    // L·(dpf2): d²/2 = a d + b (-KL²) + K²L - c2L
    let c2l = &dpf2.l2 * &d - &dpf2.c1_l * &kl2 + &k2l - &d * &d / int(2);
    // K·(dpf2): (d/2) KL² = a KL² + b (-K²L) + K³ + c1c2
    let k3 = &d / int(2) * &kl2 - &dpf2.l2 * &kl2 + &dpf2.c1_l * &k2l - &c1c2;
    let c3 = &dpf3.l3 * &d - &dpf3.c1_l2 * &kl2 + &dpf3.c1sq_minus_c2_l * (&k2l - &c2l) + &dpf3.c1_c2 * &c1c2 - &dpf3.c1_cubed * &k3;
    Ok(DerivedInvariants { kl2, k2l, k3, c2l, c3 })
}

/// `c_3` with the printed coefficients `24χ(O_S) - 30χ(O_X)`; these are
/// swapped, and the error `54(χ(O_X) - χ(O_S))` only vanishes when the two
/// Euler characteristics agree.
pub fn printed_c3(r: &InvariantRecord) -> Rational {
    let (d, g) = (int(r.d), int(r.g));
    &d * &d / int(4) - &d / int(2) - int(10) * (&g - int(1)) + &g * &d + int(24) * int(r.chi_s) - int(30) * int(r.chi_x)
}

/// `K³` exactly as the long closed formula is printed; it disagrees with
/// both routes above and is kept only for the errata report.
pub fn printed_k3(r: &InvariantRecord) -> Rational {
    let d = int(r.d);
    let gm1 = int(r.g - 1);
    rat(-9, 2) * &d * &d + rat(27, 2) * &d + int(r.g) * &d + int(18) * &gm1 - int(30) * int(r.chi_s) - int(24) * int(r.chi_x)
}

/// Coefficients of the degree-two double point relation on `X ⊂ Q^n`:
/// `(d/2) L² = l2 L² + c1_l c_1 L + (c_1² - c_2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dpf2 {
    pub l2: Rational,
    pub c1_l: Rational,
}

impl Dpf2 {
    pub fn for_n(n: i64) -> Self {
        Self { l2: rat(n * n - n + 2, 2), c1_l: int(-n) }
    }
}

/// Coefficients of the degree-three relation:
/// `c_3 = l3 L³ + c1_l2 c_1 L² + c1sq_minus_c2_l (c_1² - c_2) L + c1_c2 c_1 c_2 + c1_cubed c_1³`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dpf3 {
    pub l3: Rational,
    pub c1_l2: Rational,
    pub c1sq_minus_c2_l: Rational,
    pub c1_c2: Rational,
    pub c1_cubed: Rational,
}

impl Dpf3 {
    pub fn for_n(n: i64) -> Self {
        Self {
            l3: rat(n * n * n - 3 * n * n + 8 * n - 12, 6),
            c1_l2: rat(-n * n + n - 2, 2),
            c1sq_minus_c2_l: int(n),
            c1_c2: int(2),
            c1_cubed: int(-1),
        }
    }
}

/// Coefficients of the degree-four relation, used for fourfolds in `Q^6`:
/// `c_4 = 22L⁴ - 24L³c_1 + 16L²(c_1² - c_2) + 12Lc_1c_2 - 6Lc_1³ - 6Lc_3
/// + 2c_1c_3 + (c_1² - c_2)² - c_1²c_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dpf4 {
    pub l4: i64,
    pub l3_c1: i64,
    pub l2_c1sq_minus_c2: i64,
    pub l_c1_c2: i64,
    pub l_c1_cubed: i64,
    pub l_c3: i64,
    pub c1_c3: i64,
    pub c1sq_minus_c2_squared: i64,
    pub c1sq_c2: i64,
}

pub const DPF4: Dpf4 = Dpf4 {
    l4: 22,
    l3_c1: -24,
    l2_c1sq_minus_c2: 16,
    l_c1_c2: 12,
    l_c1_cubed: -6,
    l_c3: -6,
    c1_c3: 2,
    c1sq_minus_c2_squared: 1,
    c1sq_c2: -1,
};

/// Which `t²` coefficient to use in the Hilbert polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum HilbertVariant {
    /// `d/2 - (g-1)/2`, the Riemann-Roch coefficient `-K·L²/4`.
    #[default]
    Corrected,
    /// `1/2 - (g-1)/2`, as printed.
    Printed,
}

/// `χ(O_X(t))` for a threefold `X ⊂ Q^5`.
pub fn hilbert_polynomial(r: &InvariantRecord) -> Result<RatPoly> {
    hilbert_polynomial_variant(r, HilbertVariant::Corrected)
}

pub fn hilbert_polynomial_variant(r: &InvariantRecord, variant: HilbertVariant) -> Result<RatPoly> {
    r.require_q5()?;
    let d = int(r.d);
    let gm1 = int(r.g - 1);
    let t2 = match variant {
        HilbertVariant::Corrected => &d / int(2) - &gm1 / int(2),
        HilbertVariant::Printed => rat(1, 2) - &gm1 / int(2),
    };
    let t1 = &d / int(3) - &gm1 / int(2) + int(r.chi_s);
    Ok(RatPoly::from_coeffs(alloc::vec![int(r.chi_x), t1, t2, &d / int(6)]))
}

/// `χ(O_{Q^n}(t)) = B(t+n+1, n+1) - B(t+n-1, n+1)`.
pub fn quadric_hilbert_polynomial(n: u32) -> RatPoly {
    let k = n + 1;
    RatPoly::binomial_shifted(i64::from(n) + 1, k) - RatPoly::binomial_shifted(i64::from(n) - 1, k)
}

/// `χ(I_X(t)) = χ(O_{Q^5}(t)) - χ(O_X(t))`.
pub fn ideal_hilbert_polynomial(r: &InvariantRecord) -> Result<RatPoly> {
    Ok(quadric_hilbert_polynomial(5) - hilbert_polynomial(r)?)
}

/// `χ(N_{X,Q^5}) = -5d²/4 + 10d + 10(g-1) + 5χ(O_S)`.
pub fn chi_normal_bundle(r: &InvariantRecord) -> Result<Rational> {
    r.require_q5()?;
    let d = int(r.d);
    Ok(rat(-5, 4) * &d * &d + int(10) * &d + int(10) * int(r.g - 1) + int(5) * int(r.chi_s))
}

/// `χ(N_{X,Q^n}) = (n+2)χ(O_X(1)) - χ(O_X) - χ(O_X(2)) - χ(T_X)`, from the
/// tangent sequences of `X ⊂ Q^n ⊂ P^{n+1}` and the Euler sequence.
pub fn chi_normal_via_restriction(n: u32, chi_o: &Rational, chi_o1: &Rational, chi_o2: &Rational, chi_tx: &Rational) -> Rational {
    int(i64::from(n) + 2) * chi_o1 - chi_o - chi_o2 - chi_tx
}

/// `χ(N)` for `X = P^{a_1} × ... × P^{a_k}` embedded in `Q^n` by
/// `O(1, ..., 1)`.
pub fn chi_normal_segre_product(n: u32, dims: &[i64]) -> Rational {
    let chi = |t: i64| -> Rational { dims.iter().fold(int(1), |acc, &a| acc * Rational::from_integer(binom(t + a, a))) };
    let chi_tx: i64 = dims.iter().map(|&a| a * a + 2 * a).sum();
    chi_normal_via_restriction(n, &chi(0), &chi(1), &chi(2), &int(chi_tx))
}

/// Dimension of the Hilbert scheme of complete intersections of type
/// `(2, i, j)` in `P^{n+1}`: `P(n; i, j)` for `i < j`, `Q(n; i)` for `i = j`.
pub fn ci_dimension(n: i64, i: i64, j: i64) -> Result<BigInt> {
    if i < 1 || j < i {
        return Err(Error::InvalidInput(alloc::format!("need 1 <= i <= j, got ({i}, {j})")));
    }
    let first = |i: i64| binom(n + 1 + i, n + 1) - binom(n - 1 + i, n + 1);
    if i == j {
        Ok(BigInt::from(2) * (first(i) - BigInt::from(2)))
    } else {
        let second = binom(n + j, n) - binom(n + j - 2, n);
        Ok(first(i) - BigInt::from(1) + second - BigInt::from(1))
    }
}

/// Sectional genus of a complete intersection of hypersurfaces of degrees
/// `a, b, c`, from `2g - 2 = abc (a + b + c - 5)`.
pub fn ci_sectional_genus(degrees: [i64; 3]) -> Result<i64> {
    if degrees.iter().any(|&x| x < 1) {
        return Err(Error::InvalidInput("degrees must be positive".into()));
    }
    let [a, b, c] = degrees;
    let two_g_minus_two = a * b * c * (a + b + c - 5);
    if two_g_minus_two % 2 != 0 {
        return Err(Error::InvalidInput("non-integral genus".into()));
    }
    Ok(two_g_minus_two / 2 + 1)
}

/// `χ(O_Y(t))` for a complete intersection `Y ⊂ P^N` of the given degrees,
/// from the Koszul complex.
pub fn ci_hilbert_polynomial(ambient: u32, degrees: &[i64]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for mask in 0u32..(1 << degrees.len()) {
        let shift: i64 = degrees.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &x)| x).sum();
        let term = RatPoly::binomial_shifted(i64::from(ambient) - shift, ambient);
        if mask.count_ones() % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    acc
}

/// Invariants of the complete intersection `Q^n ∩ (a) ∩ (b)` given as the
/// full degree triple, one entry of which is the quadric.
pub fn ci_record(n: u32, degrees: [i64; 3]) -> Result<InvariantRecord> {
    if !degrees.contains(&2) {
        return Err(Error::InvalidInput("a complete intersection on a quadric has a degree-2 entry".into()));
    }
    if n < 5 {
        return Err(Error::UnsupportedDimension(n));
    }
    let d = degrees.iter().product();
    let g = ci_sectional_genus(degrees)?;
    let chi_x = ci_hilbert_polynomial(n + 1, &degrees).eval(&Rational::zero());
    let chi_s = ci_hilbert_polynomial(5, &degrees).eval(&Rational::zero());
    let to_i = |x: Rational| -> i64 { i64::try_from(x.to_integer()).expect("small value") };
    let chi_s = to_i(chi_s);
    // complete intersection surfaces are regular
    InvariantRecord::new(n, d, g, chi_s, to_i(chi_x))?.with_surface_hodge(0, chi_s - 1)
}

/// Topological Euler number of the complete intersection `Q^n ∩ (a) ∩ (b)`
/// in `P^{n+1}`: the degree of the top part of
/// `(1 + h)^{n+2} / ((1 + 2h)(1 + ah)(1 + bh))`.
pub fn ci_euler_number(n: u32, degrees: [i64; 3]) -> Result<BigInt> {
    if degrees.iter().any(|&x| x < 1) {
        return Err(Error::InvalidInput("degrees must be positive".into()));
    }
    let top = n as usize - 2;
    let mut series: alloc::vec::Vec<BigInt> = (0..=top).map(|k| binom(i64::from(n) + 2, k as i64)).collect();
    for &a in &degrees {
        // divide by 1 + a h
        for k in 1..=top {
            let prev = series[k - 1].clone();
            series[k] -= prev * a;
        }
    }
    Ok(&series[top] * degrees.iter().product::<i64>())
}

/// The Hilbert-scheme dimension of a complete intersection given by its
/// full degree triple.
pub fn ci_hilbert_dimension(n: u32, degrees: [i64; 3]) -> Result<BigInt> {
    let mut rest: alloc::vec::Vec<i64> = degrees.to_vec();
    let pos = rest.iter().position(|&x| x == 2).ok_or_else(|| Error::InvalidInput("no quadric".into()))?;
    rest.remove(pos);
    rest.sort_unstable();
    ci_dimension(i64::from(n), rest[0], rest[1])
}

/// Checks `n_2 · L = (d/2) L³` given the two intersection numbers.
pub fn self_intersection_holds(n: u32, d: i64, n2_dot_l: &Rational, l_cubed: &Rational) -> Result<bool> {
    if n < 5 {
        return Err(Error::UnsupportedDimension(n));
    }
    Ok(*n2_dot_l == rat(d, 2) * l_cubed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(d: i64, g: i64, chi_s: i64, chi_x: i64) -> InvariantRecord {
        InvariantRecord::new(5, d, g, chi_s, chi_x).unwrap()
    }

    #[test]
    fn type_o_numbers() {
        let r = rec(12, 10, 2, 2);
        let inv = derived_invariants(&r).unwrap();
        assert_eq!((inv.kl2.clone(), inv.k2l.clone(), inv.k3.clone(), inv.c2l.clone()), (int(-6), int(-6), int(12), int(24)));
        assert_eq!(derived_invariants_by_cutting(&r).unwrap(), inv);
        assert_eq!(printed_k3(&r), int(-312));
    }

    #[test]
    fn type_f_numbers() {
        // X = P(T_{P²}), K = -2L: K³ = -8d, Euler number 6
        let r = rec(6, 1, 1, 1);
        let inv = derived_invariants(&r).unwrap();
        assert_eq!(inv.kl2, int(-12));
        assert_eq!(inv.k2l, int(24));
        assert_eq!(inv.k3, int(-48));
        assert_eq!(inv.c3, int(6));
        assert_eq!(derived_invariants_by_cutting(&r).unwrap(), inv);
        assert_eq!(printed_k3(&r), int(-129));
    }

    #[test]
    fn genus_zero_probe() {
        let inv = derived_invariants(&rec(2, 1, 1, 1)).unwrap();
        assert_eq!(inv.kl2, int(-4));
        assert!(derived_invariants(&InvariantRecord::new(6, 4, 0, 1, 1).unwrap()).is_err());
    }

    #[test]
    fn hilbert_polynomial_of_type_a_matches_q3() {
        let p = hilbert_polynomial(&rec(2, 0, 1, 1)).unwrap();
        let q3 = quadric_hilbert_polynomial(3);
        for t in 0..8 {
            assert_eq!(p.eval(&int(t)), q3.eval(&int(t)));
        }
        assert_eq!(p.eval(&int(1)), int(5));
        assert_eq!(p.eval(&int(2)), int(14));
        let printed = hilbert_polynomial_variant(&rec(2, 0, 1, 1), HilbertVariant::Printed).unwrap();
        assert_eq!(printed.eval(&int(1)), rat(9, 2));
    }

    #[test]
    fn type_o_ideal_polynomial() {
        let r = rec(12, 10, 2, 2);
        assert_eq!(hilbert_polynomial(&r).unwrap().eval(&int(1)), int(7));
        assert_eq!(hilbert_polynomial(&r).unwrap().eval(&int(0)), int(2));
        let ip = ideal_hilbert_polynomial(&r).unwrap();
        let printed = RatPoly::from_coeffs(alloc::vec![int(-1), rat(59, 60), rat(19, 24), int(-1), rat(5, 24), rat(1, 60)]);
        assert_eq!(ip, printed);
        assert_eq!(ip.rational_roots(), alloc::vec![int(-1), int(1), int(2)]);
        assert_eq!(ip.eval(&int(3)), int(3));
    }

    #[test]
    fn quadric_polynomial_counts_sections() {
        // h⁰(O_{Q^n}(t)) = B(n+1+t, t) - B(n-1+t, t-2)
        for n in 1..8u32 {
            let p = quadric_hilbert_polynomial(n);
            for t in 0..6i64 {
                let direct = binom(i64::from(n) + 1 + t, t) - binom(i64::from(n) - 1 + t, t - 2);
                assert_eq!(p.eval(&int(t)), Rational::from_integer(direct));
            }
        }
    }

    #[test]
    fn ideal_polynomials_of_small_types() {
        assert_eq!(ideal_hilbert_polynomial(&rec(2, 0, 1, 1)).unwrap().eval(&int(1)), int(2));
        let i = ci_record(5, [2, 2, 2]).unwrap();
        assert_eq!(ideal_hilbert_polynomial(&i).unwrap().eval(&int(2)), int(2));
    }

    #[test]
    fn normal_bundle_dimensions() {
        for (d, g, chi_s, dim) in [(4, 0, 1, 15), (10, 8, 3, 60), (6, 1, 1, 20), (6, 2, 1, 30), (8, 4, 1, 35)] {
            assert_eq!(chi_normal_bundle(&rec(d, g, chi_s, 1)).unwrap(), int(dim));
        }
    }

    #[test]
    fn ci_dimensions_and_genera() {
        assert_eq!(ci_dimension(5, 1, 1).unwrap(), BigInt::from(10));
        assert_eq!(ci_dimension(5, 1, 2).unwrap(), BigInt::from(25));
        assert_eq!(ci_dimension(5, 2, 2).unwrap(), ci_dimension(5, 2, 2).unwrap());
        assert!(ci_dimension(5, 2, 1).is_err());
        assert_eq!(ci_sectional_genus([1, 2, 3]).unwrap(), 4);
        assert_eq!(ci_sectional_genus([2, 2, 2]).unwrap(), 5);
        assert_eq!(ci_sectional_genus([1, 1, 2]).unwrap(), 0);
        assert_eq!(ci_sectional_genus([1, 2, 4]).unwrap(), 9);
        assert_eq!(ci_sectional_genus([1, 2, 5]).unwrap(), 16);
        assert_eq!(ci_sectional_genus([1, 2, 2]).unwrap(), 1);
    }

    #[test]
    fn euler_numbers_of_complete_intersections() {
        // degrees (2, a, b) in P^6, hand-expanded from (1+h)^7 / ((1+2h)(1+ah)(1+bh))
        for (degs, e) in [([1, 1, 2], 4), ([1, 2, 2], 0), ([1, 2, 3], -36), ([1, 2, 4], -176), ([2, 2, 2], -24), ([1, 2, 5], -540)] {
            assert_eq!(ci_euler_number(5, degs).unwrap(), BigInt::from(e), "{degs:?}");
            let r = ci_record(5, degs).unwrap();
            let inv = derived_invariants(&r).unwrap();
            assert_eq!(inv.c3, int(e), "{degs:?}");
            assert_eq!(derived_invariants_by_cutting(&r).unwrap().c3, int(e), "{degs:?}");
        }
        let m = ci_record(5, [1, 2, 5]).unwrap();
        assert_eq!(printed_c3(&m), int(540));
        assert_eq!(printed_c3(&rec(12, 10, 2, 2)), int(48));
    }

    proptest::proptest! {
        #[test]
        fn both_routes_agree(half_d in 1i64..40, g in -5i64..200, chi_s in -20i64..60, chi_x in -20i64..60) {
            let r = rec(2 * half_d, g, chi_s, chi_x);
            proptest::prop_assert_eq!(derived_invariants(&r).unwrap(), derived_invariants_by_cutting(&r).unwrap());
        }
    }

    #[test]
    fn ci_records_and_normal_bundle_cross_check() {
        // χ(N) agrees with the Hilbert-scheme dimension up to degree 8
        for (degs, chi_s, p_g, chi_x) in
            [([1, 1, 2], 1, 0, 1), ([1, 2, 2], 1, 0, 1), ([1, 2, 3], 2, 1, 1), ([1, 2, 4], 6, 5, 0), ([2, 2, 2], 2, 1, 1)]
        {
            let r = ci_record(5, degs).unwrap();
            assert_eq!((r.chi_s, r.p_g, r.chi_x), (chi_s, Some(p_g), chi_x), "{degs:?}");
            let dim = ci_hilbert_dimension(5, degs).unwrap();
            assert_eq!(chi_normal_bundle(&r).unwrap(), Rational::from_integer(dim), "{degs:?}");
        }
        let m = ci_record(5, [1, 2, 5]).unwrap();
        assert_eq!((m.g, m.chi_s, m.p_g), (16, 15, Some(14)));
        assert_eq!(chi_normal_bundle(&m).unwrap(), int(200));
        assert_eq!(ci_hilbert_dimension(5, [1, 2, 5]).unwrap(), BigInt::from(201));
    }

    #[test]
    fn consistency_of_hilbert_polynomials() {
        for r in [rec(12, 10, 2, 2), rec(6, 1, 1, 1), rec(10, 8, 3, 1)] {
            let sum = ideal_hilbert_polynomial(&r).unwrap() + hilbert_polynomial(&r).unwrap();
            assert_eq!(sum, quadric_hilbert_polynomial(5));
        }
    }

    #[test]
    fn self_intersection() {
        assert!(self_intersection_holds(5, 12, &int(72), &int(12)).unwrap());
        assert!(!self_intersection_holds(5, 13, &int(72), &int(12)).unwrap());
        assert!(self_intersection_holds(4, 12, &int(72), &int(12)).is_err());
    }

    #[test]
    fn record_validation() {
        assert!(InvariantRecord::new(5, 7, 0, 1, 1).is_err());
        assert!(rec(4, 0, 1, 1).with_surface_hodge(0, 1).is_err());
        assert_eq!(rec(12, 10, 2, 2).with_surface_hodge(0, 1).unwrap().p_g, Some(1));
    }

    #[test]
    fn dpf_coefficients_at_five() {
        assert_eq!(Dpf2::for_n(5).l2, int(11));
        assert_eq!(Dpf3::for_n(5).l3, int(13));
        assert_eq!(Dpf3::for_n(5).c1_l2, int(-11));
        assert_eq!(Dpf2::for_n(6).l2, int(16));
        assert_eq!(DPF4.l4, 22);
    }

    #[test]
    fn normal_bundle_by_restriction() {
        assert_eq!(chi_normal_segre_product(6, &[1, 3]), int(15));
        // Q^3 as a linear section of Q^5: T has χ = dim SO(5) = 10.
        let chi = |t: i64| Rational::from_integer(binom(t + 4, 4) - binom(t + 2, 4));
        let via = chi_normal_via_restriction(5, &chi(0), &chi(1), &chi(2), &int(10));
        assert_eq!(Rational::from_integer(ci_dimension(5, 1, 1).unwrap()), via);
    }
}
