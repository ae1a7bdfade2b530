//! Runs every applicable numerical check on a catalog entry.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Display;

use super::{Ambient, Description, HilbertDimension, ScrollBase, TypeEntry};
use crate::chern::{gamma_invert, ideal_chern_from_resolution};
use crate::chow::ChowClass;
use crate::exact::{int, RatPoly, Rational};
use crate::invariants::{
    chi_normal_bundle, chi_normal_segre_product, ci_euler_number, ci_hilbert_dimension, ci_record, ci_sectional_genus, derived_invariants,
    derived_invariants_by_cutting, InvariantRecord,
};
use crate::scrolls::{
    base_surface_classify, d8_family_at, d8_parameter_from_chi, fiber_cut_degree, fourfold_system, scroll_invariants, solvable_at,
    FiberCase, ScrollInvariants,
};
use crate::Result;

/// One named check with the formula it exercises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub formula: &'static str,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

impl Check {
    fn eq<T: PartialEq + Display>(name: &'static str, formula: &'static str, expected: T, computed: T) -> Self {
        Self { name, formula, passed: expected == computed, expected: expected.to_string(), computed: computed.to_string() }
    }

    fn from_result<T: PartialEq + Display>(name: &'static str, formula: &'static str, expected: T, computed: Result<T>) -> Self {
        match computed {
            Ok(v) => Self::eq(name, formula, expected, v),
            Err(e) => Self { name, formula, expected: expected.to_string(), computed: alloc::format!("error: {e}"), passed: false },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub label: super::TypeLabel,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Whether a check with this name ran and passed.
    pub fn covers(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && c.passed)
    }
}

fn record(e: &TypeEntry, n: u32) -> Result<InvariantRecord> {
    InvariantRecord::new(n, e.d, e.g, e.chi_s(), e.chi_x)?.with_surface_hodge(e.q, e.p_g)
}

fn triple(r: &InvariantRecord) -> String {
    alloc::format!("(d, g, χ_S, χ_X) = ({}, {}, {}, {})", r.d, r.g, r.chi_s, r.chi_x)
}

fn intersections_string(kl2: &Rational, k2l: &Rational, k3: &Rational) -> String {
    alloc::format!("KL² = {kl2}, K²L = {k2l}, K³ = {k3}")
}

pub fn verify_type(e: &TypeEntry) -> VerificationReport {
    let mut checks = Vec::new();
    let n = e.ambient.check_dimension();
    checks.push(Check::eq("degree parity", "d ≡ 0 (mod 2) for n ≥ 5", true, n < 5 || e.d % 2 == 0));
    let rec = record(e, n);
    if let Err(err) = &rec {
        checks.push(Check::eq("record", "χ(O_S) = 1 - q + p_g", String::new(), err.to_string()));
    }

    if let Description::CompleteIntersection(degrees) = e.description {
        checks.push(Check::from_result("sectional genus", "2g - 2 = abc(a + b + c - 5)", e.g, ci_sectional_genus(degrees)));
        if let Ok(r) = &rec {
            checks.push(Check::from_result(
                "complete-intersection invariants",
                "Koszul resolution of the complete intersection",
                triple(r),
                ci_record(n, degrees).map(|c| triple(&c)),
            ));
        }
        checks.push(Check::from_result(
            "Hilbert-scheme dimension",
            "P(n; i, j) or Q(n; i)",
            true,
            ci_hilbert_dimension(n, degrees).map(|v| v > num_bigint::BigInt::from(0)),
        ));
    }

    if let (Ok(r), 5) = (&rec, n) {
        match (derived_invariants(r), derived_invariants_by_cutting(r)) {
            (Ok(a), Ok(b)) => {
                let full = |x: &crate::invariants::DerivedInvariants| {
                    alloc::format!("{}, c₂L = {}, c₃ = {}", intersections_string(&x.kl2, &x.k2l, &x.k3), x.c2l, x.c3)
                };
                checks.push(Check::eq(
                    "derived invariants",
                    "closed formulas against double point relations cut by K and L",
                    full(&a),
                    full(&b),
                ));
                if let Description::CompleteIntersection(degrees) = e.description {
                    checks.push(Check::from_result(
                        "Euler number",
                        "c₃ against (1+h)^{n+2} / Π(1 + d_i h)",
                        a.c3.to_string(),
                        ci_euler_number(n, degrees).map(|v| v.to_string()),
                    ));
                }
                if let Some([kl2, k2l, k3, c2l]) = e.intersections {
                    checks.push(Check::eq(
                        "intersection numbers",
                        "KL², K²L, K³, c₂L from d, g, χ_S, χ_X",
                        alloc::format!("{kl2}, {k2l}, {k3}, {c2l}"),
                        alloc::format!("{}, {}, {}, {}", a.kl2, a.k2l, a.k3, a.c2l),
                    ));
                }
            }
            (Err(err), _) | (_, Err(err)) => checks.push(Check::eq("derived invariants", "", String::new(), err.to_string())),
        }
    }

    for p in &e.presentations {
        if !p.source.has_chern_data() || !p.target.has_chern_data() {
            checks.push(Check::eq("presentation rank", "rank F - rank E = 1", 1, p.target.rank() - p.source.rank()));
            continue;
        }
        let series = ideal_chern_from_resolution(n as usize, &p.source, &p.target);
        let degree = series
            .as_ref()
            .map_err(Clone::clone)
            .and_then(|c| c.c(2).cup(&ChowClass::h_power(n as usize, n as usize - 2))?.degree().map(|v| v.to_string()));
        checks.push(Check::from_result("presentation degree", "d = deg c₂(I_X(l)) · h^{n-2}", e.d.to_string(), degree));
        if let (5, Ok(c), Ok(r)) = (n, &series, &rec) {
            let l = c.h_coefficients().map(|h| h[1].clone()).unwrap_or_else(|| int(0));
            let l = l.to_integer().try_into().unwrap_or(0i64);
            let computed = gamma_invert(c, l).map(|g| alloc::format!("d = {}, {}", g.d, intersections_string(&g.kl2, &g.k2l, &g.k3)));
            let expected = derived_invariants(r)
                .map(|a| alloc::format!("d = {}, {}", e.d, intersections_string(&a.kl2, &a.k2l, &a.k3)))
                .unwrap_or_default();
            checks.push(Check::from_result("presentation invariants", "inversion of c(I_X(l)) against γ_2..γ_5", expected, computed));
        }
    }

    if let HilbertDimension::Number(dim) = e.hilbert {
        let computed = match (n, &e.description) {
            (5, _) => rec.as_ref().map_err(Clone::clone).and_then(chi_normal_bundle),
            (6, Description::Scroll { over: ScrollBase::Curve, .. }) if e.d == 4 => Ok(chi_normal_segre_product(6, &[1, 3])),
            _ => Err(crate::Error::UnsupportedDimension(n)),
        };
        checks.push(Check::from_result("Hilbert-scheme dimension", "χ(N_{X,Q^n})", int(dim), computed));
    }

    if let Description::Scroll { over, .. } = &e.description {
        scroll_checks(e, n, *over, &mut checks);
    }
    VerificationReport { label: e.label, checks }
}

fn scroll_checks(e: &TypeEntry, n: u32, over: ScrollBase, checks: &mut Vec<Check>) {
    match (over, e.ambient) {
        (ScrollBase::Curve, Ambient::Exactly(5)) => {
            checks.push(Check::eq(
                "fiber cut",
                "degree-two relation on a fiber P^2",
                int(e.d),
                fiber_cut_degree(FiberCase::ThreefoldOverCurve),
            ));
        }
        (ScrollBase::Curve, Ambient::Exactly(6)) => {
            checks.push(Check::eq(
                "fiber cut",
                "degree-two relation on a fiber P^3",
                int(e.d),
                fiber_cut_degree(FiberCase::FourfoldOverCurve),
            ));
            checks.push(Check::eq(
                "Segre-product invariants",
                "χ(O_X(t)) = (t+1)B(t+3,3), sections by finite differences",
                alloc::format!("d = {}, g = {}, χ_S = {}", e.d, e.g, e.chi_s()),
                segre_product_invariants(&[1, 3]),
            ));
            let sys = fourfold_system();
            checks.push(Check::eq("fourfold system", "twenty relations in seventeen unknowns", true, solvable_at(&sys, &int(e.d))));
        }
        (ScrollBase::Surface, Ambient::Exactly(5)) => {
            let inv = if e.d == 8 {
                let t = d8_parameter_from_chi(&int(e.chi_s()));
                Ok(ScrollInvariants::from_solution(&d8_family_at(&t)))
            } else {
                scroll_invariants(&int(e.d))
            };
            checks.push(Check::from_result(
                "scroll invariants",
                "surface-scroll linear system",
                alloc::format!("g = {}, χ = {}", e.g, e.chi_s()),
                inv.as_ref().map(|i| alloc::format!("g = {}, χ = {}", i.g, i.chi)).map_err(Clone::clone),
            ));
            if let (Some((c1sq, c2)), Ok(i)) = (e.bundle_classes, &inv) {
                checks.push(Check::eq(
                    "bundle classes",
                    "c₁(E)² = Le₁², c₂(E) = Le₂",
                    alloc::format!("{c1sq}, {c2}"),
                    alloc::format!("{}, {}", i.e1_sq, i.e2_deg),
                ));
            }
            checks.push(Check::eq("base surface", "K_Y from the solution", true, base_surface_classify(e.d).is_ok()));
        }
        _ => checks.push(Check::eq("scroll", "", String::from("supported"), alloc::format!("n = {n}"))),
    }
}

/// `d`, sectional genus and `χ(O_S)` of `P^{a_1} × ... × P^{a_k}` under
/// `O(1, ..., 1)`: `χ(O_X(t)) = Π B(t + a_i, a_i)`, and each hyperplane
/// section replaces `χ(t)` by `χ(t) - χ(t - 1)`.
fn segre_product_invariants(dims: &[i64]) -> String {
    let dim: i64 = dims.iter().sum();
    let chi = dims.iter().fold(RatPoly::one(), |acc, &a| &acc * &RatPoly::binomial_shifted(a, a as u32));
    let diff = |p: &RatPoly| p - &p.compose_linear(&int(-1), &int(1));
    let mut sections = alloc::vec![chi];
    for _ in 0..dim - 1 {
        let next = diff(sections.last().expect("nonempty"));
        sections.push(next);
    }
    let curve = &sections[dim as usize - 1];
    let surface = &sections[dim as usize - 2];
    let d = curve.coeff(1);
    let g = int(1) - curve.coeff(0);
    alloc::format!("d = {d}, g = {g}, χ_S = {}", surface.coeff(0))
}

/// Reports for the whole built-in catalog.
pub fn verify_all() -> Vec<VerificationReport> {
    super::catalog().iter().map(verify_type).collect()
}

#[cfg(test)]
mod tests {
    use super::super::{entry, TypeLabel};
    use super::*;

    #[test]
    fn every_catalog_entry_passes() {
        for r in verify_all() {
            let fails: Vec<_> = r.failures().collect();
            assert!(fails.is_empty(), "{}: {fails:#?}", r.label);
        }
    }

    #[test]
    fn type_l_dimension() {
        let r = verify_type(&entry(TypeLabel::L));
        let c = r.checks.iter().find(|c| c.name == "Hilbert-scheme dimension").unwrap();
        assert_eq!(c.computed, "35");
    }

    #[test]
    fn type_o_block() {
        let r = verify_type(&entry(TypeLabel::O));
        assert!(r.covers("intersection numbers"));
        assert!(r.covers("bundle classes"));
        assert!(r.covers("presentation invariants"));
        assert!(r.covers("presentation rank"));
    }

    #[test]
    fn wrong_genus_is_caught() {
        let mut h = entry(TypeLabel::H);
        h.g = 8;
        let r = verify_type(&h);
        assert!(!r.passed());
        assert!(r.failures().any(|c| c.name == "sectional genus"));
        let mut f = entry(TypeLabel::F);
        f.d = 8;
        assert!(r.failures().count() > 0 && !verify_type(&f).passed());
    }
}
