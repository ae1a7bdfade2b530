//! Hilbert-function arguments excluding the large candidate degrees of
//! threefold scrolls in `Q^5`.
//!
//! `C ⊂ Q^3 ⊂ P^4` is a general curve section, `Γ` a general hyperplane
//! section of `C`, and `h_C(i) = h^0(O_{P^4}(i)) - h^0(I_C(i))`.

use alloc::vec::Vec;
use num_traits::ToPrimitive;

use crate::bounds::{candidate_pairs, degree_cascade, pi_bound, PiBound};
use crate::exact::binom;
use crate::{Error, Result};

/// Lower bound for `h_Γ(5)` when `Γ` is 24 general points of a curve of
/// genus 55 on `Q^2`; imported, not recomputed.
pub const H_GAMMA_FIVE_LOWER: i64 = 16;

/// `h^0(O_C(i)) = d i + 1 - g`, valid only for `d i > 2g - 2`.
pub fn curve_h0(d: i64, g: i64, i: i64) -> Result<i64> {
    if d * i <= 2 * g - 2 {
        return Err(Error::InvalidInput(alloc::format!("O_C({i}) may be special: d·i = {} ≤ 2g - 2 = {}", d * i, 2 * g - 2)));
    }
    Ok(d * i + 1 - g)
}

fn b4(a: i64) -> i64 {
    binom(a, 4).to_i64().expect("small")
}

/// `B(i+4, 4) - B(i-s+4, 4)`: the value of `h_C(i)` when every form of
/// degree `i` through `C` is a multiple of the degree-`s` equation of `Q^3`.
pub fn hc_under_containment(i: i64, s: i64) -> i64 {
    b4(i + 4) - b4(i - s + 4)
}

/// `h_C(i+1) >= h_C(i) + h_Γ(i+1)`.
pub fn monotone_step(hc_i: i64, h_gamma_lower: i64) -> i64 {
    debug_assert!(hc_i >= 0 && h_gamma_lower >= 0);
    hc_i + h_gamma_lower
}

/// Why `C` lies on no integral surface of degree `2k` of `Q^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    /// `k = 1`: a hyperplane section would make `X` a complete intersection.
    CompleteIntersection,
    /// `k = 2`: lifting applies and the Segre inequality bounds `d`.
    LiftingAndSegre {
        ceiling: i64,
    },
    /// `g - 1 > π - Ξ`.
    ExceedsGenusBound(PiBound),
    /// `g - 1 = π - Ξ` with `ε = 0`: `C` and then `X` would be complete
    /// intersections.
    MaximalGenus(PiBound),
    Unjustified(PiBound),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssumptionCheck {
    pub k: i64,
    pub justification: Justification,
}

impl AssumptionCheck {
    pub fn holds(&self) -> bool {
        !matches!(self.justification, Justification::Unjustified(_))
    }
}

fn check_assumption(d: i64, g: i64, k: i64, sigma_two: i64) -> AssumptionCheck {
    let justification = match k {
        1 => Justification::CompleteIntersection,
        2 if d > sigma_two => Justification::LiftingAndSegre { ceiling: sigma_two },
        _ => {
            let b = pi_bound(d, k).expect("positive d, k");
            let gm1 = crate::exact::int(g - 1);
            if gm1 > b.bound() {
                Justification::ExceedsGenusBound(b)
            } else if b.is_maximal_complete_intersection(g) {
                Justification::MaximalGenus(b)
            } else {
                Justification::Unjustified(b)
            }
        }
    };
    AssumptionCheck { k, justification }
}

/// How the contradicting lower bound on `h_C` is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// `h_C(i)` directly from containment.
    Direct { i: i64 },
    /// `h_C(i+1) >= h_C(i) + h_Γ(i+1)`, with `cited` marking an imported
    /// lower bound on `h_Γ`.
    Step { i: i64, h_gamma_lower: i64, cited: bool },
}

impl Route {
    fn containment_index(self) -> i64 {
        match self {
            Route::Direct { i } | Route::Step { i, .. } => i,
        }
    }

    pub fn index(self) -> i64 {
        match self {
            Route::Direct { i } => i,
            Route::Step { i, .. } => i + 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `lower <= h_C(i) <= upper = h^0(O_C(i))` fails.
    Excluded {
        index: i64,
        lower: i64,
        upper: i64,
    },
    NotExcluded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExclusionCase {
    pub d: i64,
    pub g: i64,
    pub route: Route,
    /// One entry for each `k` from 1 to the containment index.
    pub assumptions: Vec<AssumptionCheck>,
    /// `(i, h^0(O_C(i)))` at the contradicting index.
    pub h0: (i64, i64),
    /// `(i, lower bound for h_C(i))`.
    pub hc: Vec<(i64, i64)>,
    /// A differing value of `h_C` at the containment index found in print.
    pub printed_hc: Option<i64>,
    pub verdict: Verdict,
}

const PLANS: [(i64, i64, Route, Option<i64>); 5] = [
    (18, 28, Route::Direct { i: 4 }, None),
    (24, 55, Route::Step { i: 4, h_gamma_lower: H_GAMMA_FIVE_LOWER, cited: true }, None),
    (30, 91, Route::Direct { i: 7 }, Some(140)),
    (36, 136, Route::Direct { i: 8 }, Some(289)),
    // Γ is nonempty, so h_Γ(10) >= 1.
    (42, 190, Route::Step { i: 9, h_gamma_lower: 1, cited: false }, None),
];

pub fn exclusion_case(d: i64, g: i64, route: Route, printed_hc: Option<i64>, sigma_two: i64) -> Result<ExclusionCase> {
    let ci = route.containment_index();
    let assumptions: Vec<_> = (1..=ci).map(|k| check_assumption(d, g, k, sigma_two)).collect();
    let at_ci = hc_under_containment(ci, 2);
    let mut hc = alloc::vec![(ci, at_ci)];
    let lower = match route {
        Route::Direct { .. } => at_ci,
        Route::Step { i, h_gamma_lower, .. } => {
            let next = monotone_step(at_ci, h_gamma_lower);
            hc.push((i + 1, next));
            next
        }
    };
    let index = route.index();
    let upper = curve_h0(d, g, index)?;
    let verdict = if assumptions.iter().all(AssumptionCheck::holds) && lower > upper {
        Verdict::Excluded { index, lower, upper }
    } else {
        Verdict::NotExcluded
    };
    Ok(ExclusionCase { d, g, route, assumptions, h0: (index, upper), hc, printed_hc, verdict })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExclusionReport {
    pub cases: Vec<ExclusionCase>,
    /// Candidate degrees not excluded.
    pub survivors: Vec<i64>,
}

pub fn exclude_all_candidates() -> ExclusionReport {
    let sigma_two = degree_cascade().sigma_two;
    let cases: Vec<_> =
        PLANS.iter().map(|&(d, g, route, printed)| exclusion_case(d, g, route, printed, sigma_two).expect("nonspecial index")).collect();
    let excluded = |d: i64| cases.iter().any(|c| c.d == d && matches!(c.verdict, Verdict::Excluded { .. }));
    let survivors = candidate_pairs().into_iter().map(|c| c.d).filter(|&d| !excluded(d)).collect();
    ExclusionReport { cases, survivors }
}
