//! Formulas whose printed form disagrees with an independent computation,
//! with the evidence recomputed on every call.

use alloc::string::String;
use alloc::vec::Vec;

use crate::chern::{catalog, porteous_d1, spinor_q5_c4_printed, spinor_q5_coefficients, BundleTerm, PorteousShape};
use crate::chow::MiddlePairing;
use crate::exact::{fmt_rational, int};
use crate::hilbfn::exclude_all_candidates;
use crate::invariants::{
    ci_euler_number, ci_record, derived_invariants, hilbert_polynomial_variant, printed_c3, printed_k3, HilbertVariant, InvariantRecord,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub id: &'static str,
    pub topic: &'static str,
    pub printed: String,
    pub corrected: String,
    /// Values supporting the correction.
    pub evidence: Vec<String>,
    /// The printed and corrected forms really do differ on the evidence.
    pub confirmed: bool,
}

fn k3_entry() -> Erratum {
    let f = InvariantRecord::new(5, 6, 1, 1, 1).expect("valid");
    let o = InvariantRecord::new(5, 12, 10, 2, 2).expect("valid");
    let (kf, ko) = (derived_invariants(&f).expect("n = 5").k3, derived_invariants(&o).expect("n = 5").k3);
    let (pf, po) = (printed_k3(&f), printed_k3(&o));
    Erratum {
        id: "k3",
        topic: "K³ of a threefold in Q^5",
        printed: "-9d²/2 + 27d/2 + gd + 18(g-1) - 30χ(O_S) - 24χ(O_X)".into(),
        corrected: "(d/2 - 11)KL² - 5K²L - 24χ(O_X)".into(),
        evidence: alloc::vec![
            alloc::format!("Type F: corrected {}, printed {}", fmt_rational(&kf), fmt_rational(&pf)),
            alloc::format!("Type O: corrected {}, printed {}", fmt_rational(&ko), fmt_rational(&po)),
        ],
        confirmed: kf == int(-48) && ko == int(12) && pf != kf && po != ko,
    }
}

fn c3_entry() -> Erratum {
    let mut evidence = Vec::new();
    let mut confirmed = true;
    for (label, degrees) in [("H", [1, 2, 4]), ("M", [1, 2, 5])] {
        let r = ci_record(5, degrees).expect("complete intersection");
        let fixed = derived_invariants(&r).expect("n = 5").c3;
        let printed = printed_c3(&r);
        let euler = crate::exact::Rational::from_integer(ci_euler_number(5, degrees).expect("positive degrees"));
        evidence.push(alloc::format!(
            "Type {label}: corrected {}, printed {}, Euler number of the complete intersection {}",
            fmt_rational(&fixed),
            fmt_rational(&printed),
            fmt_rational(&euler)
        ));
        confirmed &= fixed == euler && printed != euler;
    }
    Erratum {
        id: "c3",
        topic: "c₃ of a threefold in Q^5",
        printed: "d²/4 - d/2 - 10(g-1) + gd + 24χ(O_S) - 30χ(O_X)".into(),
        corrected: "d²/4 - d/2 - 10(g-1) + gd - 30χ(O_S) + 24χ(O_X)".into(),
        evidence,
        confirmed,
    }
}

fn hilbert_entry() -> Erratum {
    let a = InvariantRecord::new(5, 2, 0, 1, 1).expect("valid");
    let good = hilbert_polynomial_variant(&a, HilbertVariant::Corrected).expect("n = 5").eval(&int(1));
    let bad = hilbert_polynomial_variant(&a, HilbertVariant::Printed).expect("n = 5").eval(&int(1));
    Erratum {
        id: "chi-t2",
        topic: "t² coefficient of χ(O_X(t))",
        printed: "1/2 - (g-1)/2".into(),
        corrected: "d/2 - (g-1)/2".into(),
        evidence: alloc::vec![alloc::format!(
            "Type A (a quadric threefold, h^0(O_X(1)) = 5): corrected {}, printed {}",
            fmt_rational(&good),
            fmt_rational(&bad)
        )],
        confirmed: good == int(5) && bad != good,
    }
}

fn spinor_entry() -> Erratum {
    let mut evidence = Vec::new();
    let mut differs = false;
    let mut twist_ok = true;
    let base = catalog(5, BundleTerm::Spinor(0)).expect("Q^5");
    for l in [1, 2, 3] {
        let fixed = spinor_q5_coefficients(l)[3].clone();
        let printed = spinor_q5_c4_printed(l);
        let twisted = base.twist(l).c(4).h_coefficient(4);
        twist_ok &= twisted == Some(crate::exact::Rational::from_integer(fixed.clone()));
        differs |= fixed != printed;
        evidence.push(alloc::format!("l = {l}: twist formula {fixed}, printed {printed}"));
    }
    Erratum {
        id: "spinor-c4",
        topic: "c₄(S(l)) of the spinor bundle on Q^5",
        printed: "l⁴ - l".into(),
        corrected: "l⁴ - 2l³ + 2l² - l".into(),
        evidence,
        confirmed: differs && twist_ok,
    }
}

fn pairing_entry() -> Erratum {
    let s = catalog(6, BundleTerm::SpinorPrime(1)).expect("Q^6");
    let shape = PorteousShape::THREE_SECTIONS_RANK_FOUR;
    let deg = |p| porteous_d1(&s, shape, p).and_then(|c| c.degree()).map(|v| alloc::format!("{v}")).unwrap_or_default();
    let (parity, kronecker) = (deg(MiddlePairing::Parity), deg(MiddlePairing::Kronecker));
    Erratum {
        id: "lambda-pairing",
        topic: "intersection of the two rulings Λ1, Λ2 in the middle degree of Q^{2m}",
        printed: "Λi · Λj = δij".into(),
        corrected: "Λi · Λj = δij for m even, 1 - δij for m odd".into(),
        evidence: alloc::vec![alloc::format!("degree of c₃² - c₂c₄ for S'(1) on Q^6 (expected empty): parity {parity}, δij {kronecker}")],
        confirmed: parity == "0" && kronecker == "4",
    }
}

fn hc_entry() -> Erratum {
    let report = exclude_all_candidates();
    let mut evidence = Vec::new();
    let mut confirmed = true;
    for c in report.cases.iter().filter(|c| c.printed_hc.is_some()) {
        let printed = c.printed_hc.expect("filtered");
        let (i, value) = c.hc[0];
        evidence.push(alloc::format!(
            "(d, g) = ({}, {}): h_C({i}) = {value}, printed {printed}; both exceed h^0(O_C({i})) = {}",
            c.d,
            c.g,
            c.h0.1
        ));
        confirmed &= value != printed && value > c.h0.1 && printed > c.h0.1;
    }
    Erratum {
        id: "hc-values",
        topic: "h_C(i) under containment in Q^3 alone",
        printed: "140 at (30, 91) and 289 at (36, 136)".into(),
        corrected: "B(i+4, 4) - B(i+2, 4): 204 and 285".into(),
        evidence,
        confirmed,
    }
}

pub fn errata() -> Vec<Erratum> {
    alloc::vec![k3_entry(), c3_entry(), hilbert_entry(), spinor_entry(), pairing_entry(), hc_entry()]
}
