//! Genus bounds for curves on `Q^3`, the lifting criterion, the Segre-class
//! inequality, and the degree cascade for threefold scrolls in `Q^5`.
//!
//! Throughout, `C` is a curve of degree `d` and genus `g` on `Q^3` lying on
//! a surface of degree `2k` (a section of `Q^3` by a hypersurface of degree
//! `k`).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::{fmt_rational, int, rat, RatPoly, Rational};
use crate::scrolls::{scroll_invariants, surface_scroll_solve_symbolic};
use crate::{Error, Result};

/// Which regime of the genus bound applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `d > 2k(k-1)`: bound in terms of `n0` and `ε` for `k` itself.
    Main,
    /// `d <= 2k(k-1)`: the bound for `θ0 = ⌊(d-1)/2k⌋ + 1` is used.
    SmallDegree,
}

/// `d`, `k` and the derived residue data. In the small-degree regime
/// `k_used = θ0` and `eps` is taken modulo `2θ0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundContext {
    pub d: i64,
    pub k: i64,
    pub regime: Regime,
    pub k_used: i64,
    pub n0: i64,
    pub eps: i64,
}

impl BoundContext {
    pub fn new(d: i64, k: i64) -> Result<Self> {
        if k <= 0 {
            return Err(Error::InvalidInput(alloc::format!("k must be positive, got {k}")));
        }
        if d <= 0 {
            return Err(Error::InvalidInput(alloc::format!("d must be positive, got {d}")));
        }
        let (regime, k_used) = if d > 2 * k * (k - 1) { (Regime::Main, k) } else { (Regime::SmallDegree, (d - 1) / (2 * k) + 1) };
        Ok(Self { d, k, regime, k_used, n0: (d - 1) / (2 * k_used) + 1, eps: residue(d, k_used) })
    }
}

/// `ε` with `d + ε ≡ 0 (mod 2k)` and `0 <= ε <= 2k - 1`.
pub fn residue(d: i64, k: i64) -> i64 {
    (-d).rem_euclid(2 * k)
}

/// Both branch corrections of `π` at residue `eps`, whatever its range:
/// `-ε²/4k - ε(k-ε)/2` and `-(k-ε')(ε'/2 - ε'/4k + 1/4)` with `ε' = ε - k`.
pub fn branch_corrections(eps: i64, k: i64) -> (Rational, Rational) {
    let (e, kk) = (int(eps), int(k));
    let low = -(&e * &e) / (int(4) * &kk) - &e * (&kk - &e) / int(2);
    let et = int(eps - k);
    let high = -(&kk - &et) * (&et / int(2) - &et / (int(4) * &kk) + rat(1, 4));
    (low, high)
}

/// `d²/4k + (k-3)d/2`.
pub fn easy_bound(d: i64, k: i64) -> Rational {
    int(d * d) / int(4 * k) + int((k - 3) * d) / int(2)
}

/// Bound on `g - 1` for curves on no surface of degree below `2k`:
/// `d²/2k + (k-4)d/2`.
pub fn not_on_small_surface_bound(d: i64, k: i64) -> Rational {
    int(d * d) / int(2 * k) + int((k - 4) * d) / int(2)
}

/// `π` evaluated literally at `k` with `ε ≡ -d (mod 2k)`.
fn pi_at(d: i64, k: i64) -> (Rational, i64) {
    let eps = residue(d, k);
    let (low, high) = branch_corrections(eps, k);
    let corr = if eps <= k { low } else { high };
    (easy_bound(d, k) + corr, eps)
}

/// `Ξ = 0` iff `ε ∈ {0, 1, 2, 2k - 1}`.
pub fn xi(eps: i64, k: i64) -> i64 {
    if matches!(eps, 0..=2) || eps == 2 * k - 1 {
        0
    } else {
        1
    }
}

/// The genus bound `g - 1 <= π - Ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiBound {
    pub context: BoundContext,
    pub pi: Rational,
    pub xi: i64,
}

impl PiBound {
    /// `π - Ξ`.
    pub fn bound(&self) -> Rational {
        &self.pi - int(self.xi)
    }

    /// `g - 1` attains the bound with `ε = 0`: the curve is then linked
    /// to the empty curve, i.e. a complete intersection on `Q^3`.
    pub fn is_maximal_complete_intersection(&self, genus: i64) -> bool {
        int(genus - 1) == self.bound() && self.context.eps == 0
    }
}

pub fn pi_bound(d: i64, k: i64) -> Result<PiBound> {
    let context = BoundContext::new(d, k)?;
    let (pi, eps) = pi_at(d, context.k_used);
    debug_assert_eq!(eps, context.eps);
    Ok(PiBound { context, pi, xi: xi(eps, context.k_used) })
}

/// `d > 2σ²`: a curve on a surface of degree `2σ` lifts to the threefold.
pub fn lifting_applicable(d: i64, sigma: i64) -> bool {
    d > 2 * sigma * sigma
}

/// Largest real `d` with `d(d-6)/8 <= a d² + b d`, when `a < 1/8`.
pub fn degree_ceiling(a: &Rational, b: &Rational) -> Option<Rational> {
    let gap = rat(1, 8) - a;
    (gap > int(0)).then(|| (b + rat(3, 4)) / gap)
}

/// Contribution `[½ d L² - (K + 5L)²] · D` of the residual scheme `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResidualTerm {
    Empty,
    Value(Rational),
    /// Scroll substitution in terms of `L e1 D` and `D f`.
    Scroll {
        le1d: Rational,
        df: Rational,
    },
}

impl ResidualTerm {
    fn value(&self, d: &Rational) -> Rational {
        match self {
            ResidualTerm::Empty => int(0),
            ResidualTerm::Value(t) => t.clone(),
            ResidualTerm::Scroll { le1d, df } => {
                let six = d + int(6);
                -(&six / int(2)) * le1d - d * (d - int(12)) * &six / int(24) * df
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub satisfied: bool,
}

/// `χ(O_S) >= (1/6σ)[(d - 12σ)(g-1) + (σ/4 + 3/2)d² - (13/2)σ d] - (1/6σ) T`.
pub fn segre_inequality(sigma: i64, d: &Rational, g: &Rational, chi_s: &Rational, residual: &ResidualTerm) -> Result<SegreCheck> {
    if sigma < 1 {
        return Err(Error::InvalidInput(alloc::format!("σ must be positive, got {sigma}")));
    }
    let s = int(sigma);
    let bracket = (d - int(12) * &s) * (g - int(1)) + (&s / int(4) + rat(3, 2)) * d * d - rat(13, 2) * &s * d;
    let rhs = (bracket - residual.value(d)) / (int(6) * &s);
    Ok(SegreCheck { satisfied: chi_s >= &rhs, lhs: chi_s.clone(), rhs })
}

/// `g - 1` and `χ` of a threefold scroll in `Q^5` as polynomials in `d`,
/// read off the symbolic solution.
pub fn scroll_genus_and_chi() -> Result<(RatPoly, RatPoly)> {
    let sol = surface_scroll_solve_symbolic()?;
    let gm1 = (sol.le1_sq() - sol.le1y1()).scale(&rat(1, 2));
    let chi = (sol.ly1_sq() + sol.ly2()).scale(&rat(1, 12));
    Ok((gm1, chi))
}

/// `χ - (1/12)[(d-24)(g-1) + 2d² - 13d]` under the scroll substitutions.
pub fn segre_margin() -> Result<RatPoly> {
    let (gm1, chi) = scroll_genus_and_chi()?;
    let bracket = &(&RatPoly::linear(int(-24), int(1)) * &gm1) + &RatPoly::from_integers(&[0, -13, 2]);
    Ok(&chi - &bracket.scale(&rat(1, 12)))
}

/// Segre check for a threefold scroll of degree `d` with `σ = 2`. Fails at
/// `d = 8`, where the linear system does not determine `g` and `χ`.
pub fn scroll_segre_check(d: i64, residual: &ResidualTerm) -> Result<SegreCheck> {
    let inv = scroll_invariants(&int(d))?;
    segre_inequality(2, &inv.d, &inv.g, &inv.chi, residual)
}

/// Where a candidate pair comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CandidateSource {
    /// Integral `g` and `χ` from the unique solution of the linear system.
    Formula,
    /// The one-parameter family at `d = 8`, with the parameter fixed by `χ = 1`.
    DegreeEightFamily,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub d: i64,
    pub g: i64,
    pub chi: i64,
    pub source: CandidateSource,
}

/// Even `d` in `6..=42` with integral `g` and `χ`, plus `d = 8`.
pub fn candidate_pairs() -> Vec<Candidate> {
    let mut out = Vec::new();
    for d in (6..=42).step_by(2) {
        if d == 8 {
            out.push(Candidate { d, g: 4, chi: 1, source: CandidateSource::DegreeEightFamily });
            continue;
        }
        let inv = scroll_invariants(&int(d)).expect("nonsingular away from d = 8");
        if let (Some(g), Some(chi)) = (small_integer(&inv.g), small_integer(&inv.chi)) {
            out.push(Candidate { d, g, chi, source: CandidateSource::Formula });
        }
    }
    out
}

fn small_integer(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    r.is_integer().then(|| r.numer().to_i64()).flatten()
}

/// One line of the cascade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeStep {
    pub k: i64,
    pub method: CascadeMethod,
    /// Real ceiling on `d`, when the step produces one.
    pub ceiling: Option<Rational>,
    pub note: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CascadeMethod {
    /// No surface of degree below `2k`.
    NotOnSmallerSurface,
    /// Genus bound for curves on a surface of degree `2k`.
    EasyBound,
    /// Lifting to a second quadric, then the Segre inequality.
    LiftingAndSegre,
    /// `C` on a hyperplane section forces a complete intersection.
    CompleteIntersection,
}

impl fmt::Display for CascadeStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = if self.method == CascadeMethod::LiftingAndSegre {
            alloc::format!("k={} branch", self.k)
        } else {
            alloc::format!("k={}", self.k)
        };
        match &self.ceiling {
            Some(c) => write!(f, "{label} → d ≤ {}", fmt_rational(c))?,
            None => write!(f, "{label} → contradiction")?,
        }
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeTrace {
    pub steps: Vec<CascadeStep>,
    /// Bound holding with no assumption on `C`.
    pub unconditional: i64,
    /// Bound when `C` lies on a second quadric section.
    pub sigma_two: i64,
}

impl CascadeTrace {
    pub fn lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self.steps.iter().map(|s| alloc::format!("{s}")).collect();
        out.push(alloc::format!("unconditional: d ≤ {}", self.unconditional));
        out.push(alloc::format!("σ=2 branch: d ≤ {}", self.sigma_two));
        out
    }
}

fn floor(r: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    r.floor().to_integer().to_i64().expect("small")
}

/// Largest even `d <= 42` at which the Segre inequality with `σ = 2` holds
/// with `D` empty. For `d > 12` both residual terms are nonnegative, so an
/// empty `D` is the most favourable case.
fn sigma_two_ceiling() -> i64 {
    (2..=42)
        .rev()
        .step_by(2)
        .find(|&d| !lifting_applicable(d, 2) || scroll_segre_check(d, &ResidualTerm::Empty).map(|c| c.satisfied).unwrap_or(false))
        .unwrap_or(0)
}

/// Runs the argument bounding the degree of a threefold scroll in `Q^5`
/// through a general hyperplane-section curve `C ⊂ Q^3`, `g - 1 = d(d-6)/8`.
pub fn degree_cascade() -> CascadeTrace {
    let mut steps = Vec::new();
    let ceiling_of = |bound: fn(i64, i64) -> Rational, k: i64| {
        // bound(d, k) = a d² + b d, recovered from two evaluations.
        let b1 = bound(1, k);
        let b2 = bound(2, k);
        let a = (&b2 - int(2) * &b1) / int(2);
        let b = &b1 - &a;
        degree_ceiling(&a, &b).expect("a < 1/8")
    };
    let top = ceiling_of(not_on_small_surface_bound, 7);
    steps.push(CascadeStep { k: 7, method: CascadeMethod::NotOnSmallerSurface, ceiling: Some(top.clone()), note: String::new() });
    let unconditional = floor(&top);
    let candidates = candidate_pairs();
    for k in (3..=6).rev() {
        let c = ceiling_of(easy_bound, k);
        let mut note = String::new();
        if !c.is_integer() {
            note = alloc::format!("so d ≤ {}", floor(&c));
        }
        if c > int(18) {
            let skipped: Vec<i64> = candidates.iter().map(|p| p.d).filter(|&d| int(d) > int(18) && int(d) <= c).collect();
            if skipped.is_empty() {
                if !note.is_empty() {
                    note.push_str("; ");
                }
                note.push_str("exceeds 18 but no candidate degree lies in (18, ceiling]");
            }
        }
        steps.push(CascadeStep { k, method: CascadeMethod::EasyBound, ceiling: Some(c), note });
    }
    let sigma_two = sigma_two_ceiling();
    steps.push(CascadeStep {
        k: 2,
        method: CascadeMethod::LiftingAndSegre,
        ceiling: Some(int(sigma_two)),
        note: alloc::format!("lifting for d > {}; -d(d+6)(d-12) ≥ 12(d+6)Le1D + d(d+6)(d-12)Df; D empty at d = 12", 2 * 2 * 2),
    });
    steps.push(CascadeStep {
        k: 1,
        method: CascadeMethod::CompleteIntersection,
        ceiling: None,
        note: String::from("C on a hyperplane section of Q^3 makes X a complete intersection"),
    });
    CascadeTrace { steps, unconditional, sigma_two }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pi_at_eighteen_three() {
        let b = pi_bound(18, 3).unwrap();
        assert_eq!(b.context.eps, 0);
        assert_eq!(b.context.regime, Regime::Main);
        assert_eq!(b.pi, int(27));
        assert_eq!(b.xi, 0);
        assert!(b.is_maximal_complete_intersection(28));
        assert!(!b.is_maximal_complete_intersection(27));
    }

    #[test]
    fn small_degree_regime_substitutes_theta() {
        let b = pi_bound(18, 4).unwrap();
        assert_eq!(b.context.regime, Regime::SmallDegree);
        assert_eq!(b.context.k_used, 3);
        assert_eq!(b.pi, pi_bound(18, 3).unwrap().pi);
    }

    #[test]
    fn branch_continuity() {
        for k in 1..30 {
            let (low, high) = branch_corrections(k, k);
            assert_eq!(low, high);
            assert_eq!(low, -int(k) / int(4));
        }
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi(0, 3), 0);
        assert_eq!(xi(2, 3), 0);
        assert_eq!(xi(5, 3), 0);
        assert_eq!(xi(3, 3), 1);
        assert_eq!(xi(4, 3), 1);
    }

    #[test]
    fn bad_k_is_rejected() {
        assert!(pi_bound(10, 0).is_err());
        assert!(pi_bound(10, -2).is_err());
    }

    #[test]
    fn easy_bound_dominates_sampled_pi() {
        for (d, k) in [(18, 3), (30, 4), (41, 5), (50, 2), (13, 1)] {
            assert!(pi_bound(d, k).unwrap().pi <= easy_bound(d, k));
        }
    }

    #[test]
    fn ceilings_of_the_cascade() {
        let trace = degree_cascade();
        let c: Vec<_> = trace.steps.iter().map(|s| s.ceiling.clone()).collect();
        assert_eq!(c[0], Some(int(42)));
        assert_eq!(c[1], Some(int(27)));
        assert_eq!(c[2], Some(rat(70, 3)));
        assert_eq!(c[3], Some(int(20)));
        assert_eq!(c[4], Some(int(18)));
        assert_eq!(c[5], Some(int(12)));
        assert_eq!(c[6], None);
        assert_eq!((trace.unconditional, trace.sigma_two), (42, 12));
        let lines = trace.lines();
        for needle in ["k=7 → d ≤ 42", "k=6 → d ≤ 27", "k=2 branch → d ≤ 12", "complete intersection"] {
            assert!(lines.iter().any(|l| l.contains(needle)), "{needle}");
        }
        assert_eq!(trace, degree_cascade());
    }

    #[test]
    fn pi_minus_xi_below_easy_bound() {
        for k in 1..=10 {
            for d in (2 * k * (k - 1) + 1)..=60 {
                let b = pi_bound(d, k).unwrap();
                assert_eq!(b.context.regime, Regime::Main);
                assert!(b.bound() <= easy_bound(d, k), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn lifting() {
        assert!(lifting_applicable(12, 2));
        assert!(!lifting_applicable(8, 2));
        assert!(lifting_applicable(9, 2));
    }

    #[test]
    fn scroll_genus_and_chi_match_closed_forms() {
        let (gm1, chi) = scroll_genus_and_chi().unwrap();
        for d in (2..60).step_by(2) {
            let dd = int(d);
            assert_eq!(gm1.eval(&dd), int(d * (d - 6)) / int(8));
            assert_eq!(chi.eval(&dd), int(d * d * d - 18 * d * d + 96 * d) / int(144));
        }
    }

    #[test]
    fn segre_margin_decreases_past_twelve() {
        let m = segre_margin().unwrap();
        for d in 13..200 {
            assert!(m.eval(&int(d + 1)) < m.eval(&int(d)));
            assert!(m.eval(&int(d)) < int(0));
        }
    }

    #[test]
    fn segre_margin_factors() {
        let m = segre_margin().unwrap();
        let expect = RatPoly::from_integers(&[0, -72, -6, 1]).scale(&rat(-1, 288));
        assert_eq!(m, expect);
    }

    #[test]
    fn segre_reduced_form() {
        // 288 (χ - rhs) = -d(d+6)(d-12) - 12(d+6)Le1D - d(d+6)(d-12)Df.
        for d in [6i64, 10, 12, 14, 20, 30] {
            for (le1d, df) in [(0i64, 0i64), (1, 0), (0, 1), (3, 2)] {
                let c = scroll_segre_check(d, &ResidualTerm::Scroll { le1d: int(le1d), df: int(df) }).unwrap();
                let lhs = (&c.lhs - &c.rhs) * int(288);
                let want = -d * (d + 6) * (d - 12) - 12 * (d + 6) * le1d - d * (d + 6) * (d - 12) * df;
                assert_eq!(lhs, int(want));
            }
        }
    }

    #[test]
    fn segre_at_twelve_and_fourteen() {
        let at12 = scroll_segre_check(12, &ResidualTerm::Empty).unwrap();
        assert!(at12.satisfied);
        assert_eq!(at12.lhs, at12.rhs);
        assert!(!scroll_segre_check(14, &ResidualTerm::Empty).unwrap().satisfied);
    }

    #[test]
    fn candidates() {
        let pairs: Vec<(i64, i64)> = candidate_pairs().iter().map(|c| (c.d, c.g)).collect();
        assert_eq!(pairs, [(6, 1), (8, 4), (12, 10), (18, 28), (24, 55), (30, 91), (36, 136), (42, 190)]);
        let inv = scroll_invariants(&int(14)).unwrap();
        assert_eq!(inv.chi, rat(560, 144));
    }

    proptest! {
        #[test]
        fn residue_reconstructs(d in 1i64..500, k in 1i64..20) {
            let c = BoundContext::new(d, k).unwrap();
            prop_assert_eq!((d + c.eps).rem_euclid(2 * c.k_used), 0);
            prop_assert!(c.eps >= 0 && c.eps < 2 * c.k_used);
            prop_assert_eq!(c.n0, (d - 1) / (2 * c.k_used) + 1);
        }
    }
}
