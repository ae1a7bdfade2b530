//! Auxiliary data for the degree-twelve scrolls over a K3 surface: the
//! cohomology of `O_X(t)`, relations among `β_{i,j} = h^i(I_X(j))`, the two
//! monad shapes and the resolution by spinor and `Ψ_3` bundles.

use alloc::string::String;
use alloc::vec::Vec;

use super::{entry, TypeLabel};
use crate::chern::psi_rank;
use crate::exact::{int, rat, RatPoly, Rational};
use crate::invariants::{hilbert_polynomial, ideal_hilbert_polynomial, InvariantRecord};

/// The two cases for `β_{2,0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaDichotomy {
    /// `β_{2,0} = 1` and `β_{0,3} = 7`.
    WithSection { beta_20: i64, beta_03: i64 },
    /// `β_{2,0} = 0` and `0 <= β_{1,3} <= max_beta_13`.
    WithoutSection { beta_20: i64, max_beta_13: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeOConstraints {
    /// Statements about `h^i(O_X(t))`.
    pub cohomology: Vec<&'static str>,
    /// `χ(O_X(0))`, equal to `1 + h^2(O_X)`.
    pub chi_structure_sheaf: Rational,
    /// `χ(O_X(1)) = h^0(O_X(1))`, the embedding dimension plus one.
    pub chi_hyperplane: Rational,
    pub ideal_hilbert: RatPoly,
    /// `β_{0,2} - β_{1,2}` and `β_{0,3} - β_{1,3}` as values of `χ(I_X(t))`.
    pub beta_differences: (Rational, Rational),
    pub dichotomy: [BetaDichotomy; 2],
    /// Rank of `I_X` read off each monad, which must be 1.
    pub monad_ranks: [i64; 2],
    pub monads: [&'static str; 2],
    /// `χ(S(t))` on `Q^5`.
    pub spinor_chi: RatPoly,
    /// `χ(S|_X(t))`.
    pub spinor_restricted_chi: RatPoly,
    /// `σ_4 - σ_3 = χ(I_X ⊗ S(-1)) = χ(S(-1)) - χ(S|_X(-1))`.
    pub sigma_difference: Rational,
    pub resolution: &'static str,
    /// Ranks of the source and target of the resolution and the
    /// codimension of the degeneracy locus `D_27`.
    pub resolution_ranks: (i64, i64, i64),
    pub checks: Vec<(String, bool)>,
}

impl TypeOConstraints {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

pub fn type_o_constraints() -> TypeOConstraints {
    let e = entry(TypeLabel::O);
    let rec = InvariantRecord::new(5, e.d, e.g, e.chi_s(), e.chi_x).expect("valid record");
    let hp = hilbert_polynomial(&rec).expect("n = 5");
    let ideal = ideal_hilbert_polynomial(&rec).expect("n = 5");
    let psi3 = i64::from(psi_rank(3).expect("known rank"));
    let psi1 = i64::from(psi_rank(1).expect("known rank"));
    let spinor_rank = 4;

    // (1/15) t (t+1)(t+2)(t+3)(t+4)
    let spinor_chi = (0..5).fold(RatPoly::constant(rat(1, 15)), |acc, k| &acc * &RatPoly::linear(int(k), int(1)));
    let spinor_restricted_chi = RatPoly::from_integers(&[7, 0, -6, 8]);
    let sigma_difference = spinor_chi.eval(&int(-1)) - spinor_restricted_chi.eval(&int(-1));

    // the kernel of Ψ_3 -> O^{β_{1,3}} has rank at least 5
    let max_beta_13 = psi3 - 5;
    let monad_ranks = [psi3 + psi1 + 1 - 7 * spinor_rank - 4, psi3 + 3 - 7 * spinor_rank];
    let (source, target) = (7 * spinor_rank, psi3 + 3);
    let d27_codim = (source - 27) * (target - 27);

    let beta_differences = (ideal.eval(&int(2)), ideal.eval(&int(3)));
    let chi_structure_sheaf = hp.eval(&int(0));
    let chi_hyperplane = hp.eval(&int(1));
    let five_factorial = int(120);

    let checks = alloc::vec![
        (String::from("χ(O_X) = 1 + h²(O_X) = 2"), chi_structure_sheaf == int(2)),
        (String::from("χ(O_X(1)) = 7"), chi_hyperplane == int(7)),
        (String::from("χ(I_X(t)) vanishes at t = -1, 1, 2"), [-1, 1, 2].iter().all(|&t| ideal.eval(&int(t)) == int(0))),
        (String::from("β_{0,2} - β_{1,2} = 0"), beta_differences.0 == int(0)),
        (String::from("β_{0,3} - β_{1,3} = 3"), beta_differences.1 == int(3)),
        (String::from("β_{1,3} ≤ 21"), max_beta_13 == 21),
        (String::from("both monads have rank 1"), monad_ranks == [1, 1]),
        (String::from("χ(S(t)) leading coefficient = 2·rank/5!"), spinor_chi.coeff(5) * &five_factorial == int(2 * spinor_rank)),
        (String::from("χ(S(0)) = 0"), spinor_chi.eval(&int(0)) == int(0)),
        (String::from("χ(S|X(t)) leading coefficient = rank·d/6"), spinor_restricted_chi.coeff(3) == int(spinor_rank * e.d) / int(6)),
        (String::from("σ₄ - σ₃ = 7"), sigma_difference == int(7)),
        (String::from("rank S^7 = 28, rank Ψ3 + O^3 = 29"), (source, target) == (28, 29)),
        (String::from("D_27 has codimension 2"), d27_codim == 2),
    ];

    TypeOConstraints {
        cohomology: alloc::vec!["h^1(O_X(t)) = 0 for all t", "h^2(O_X(t)) = 0 for all t except h^2(O_X) = 1", "h^3(O_X(t)) = 0 for t ≥ -1",],
        chi_structure_sheaf,
        chi_hyperplane,
        ideal_hilbert: ideal,
        beta_differences,
        dichotomy: [BetaDichotomy::WithSection { beta_20: 1, beta_03: 7 }, BetaDichotomy::WithoutSection { beta_20: 0, max_beta_13 }],
        monad_ranks,
        monads: ["0 → S^7 → Psi3 + Psi1 + O(1) → O^4 → 0", "0 → S^7 → Psi3 + O^3 + O^b → O^b → 0, b = β_{1,3}"],
        spinor_chi,
        spinor_restricted_chi,
        sigma_difference,
        resolution: "0 → S^7 → Psi3 + O^3 → I_X(3) → 0",
        resolution_ranks: (source, target, d27_codim),
        checks,
    }
}
