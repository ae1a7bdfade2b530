//! Scrolls `p: X = P(E) -> Y` of codimension two on `Q^5` and `Q^6`, with
//! `E` of rank two and `L` the tautological class.
//!
//! Chern classes of `X` come from the relative Euler sequence; substituting
//! them into the double point relations and intersecting with classes of
//! complementary degree gives linear systems in the intersection numbers,
//! with the degree `d` kept as an indeterminate.

mod fourfold;
pub mod ring;
mod surface;

pub use fourfold::{fourfold_relations, fourfold_system, fourfold_variables, solvable_at, solvable_degrees, FourfoldSystem};
pub use surface::{
    d8_chi, d8_family, d8_family_at, d8_parameter_from_chi, hodge_index_holds, scroll_invariants, surface_relations, surface_scroll_matrix,
    surface_scroll_solve, surface_scroll_solve_symbolic, surface_scroll_system, surface_variables, ScrollInvariants, ScrollSolution,
    SURFACE_VARIABLE_NAMES,
};

use alloc::vec::Vec;

use crate::exact::{binom, int, rat, RatPoly, Rational};
use crate::invariants::{Dpf2, Dpf3, DPF4};
use crate::{Error, Result};
use ring::{ClassPoly, Gen};

/// `d` as an element of `Q[d]`.
pub(crate) fn d_poly() -> RatPoly {
    RatPoly::x()
}

fn r(c: Rational) -> RatPoly {
    RatPoly::constant(c)
}

/// `c_0, ..., c_{b+1}` of `T_X` for a scroll over a `b`-dimensional base:
/// `c(T_X) = (1 + 2L - e1) · c(T_Y)`. The degree-two part of
/// `c(E^∨ ⊗ L)` is the tautological relation and drops out.
pub fn euler_sequence_chern(base_dim: u32) -> Vec<ClassPoly> {
    let b = base_dim;
    let first = ClassPoly::from_terms(b, &[(1, &[]), (2, &[Gen::L]), (-1, &[Gen::E1])]);
    let ys = [Gen::Y1, Gen::Y2, Gen::Y3];
    let mut cy = ClassPoly::one(b);
    for g in ys.iter().take(b as usize) {
        cy = cy.add(&ClassPoly::gen(b, *g));
    }
    let total = first.mul(&cy);
    (0..=b + 1).map(|k| total.part(k)).collect()
}

/// `L² - L e1 + e2`.
pub fn tautological(base_dim: u32) -> ClassPoly {
    ClassPoly::from_terms(base_dim, &[(1, &[Gen::L, Gen::L]), (-1, &[Gen::L, Gen::E1]), (1, &[Gen::E2])])
}

fn chern(base_dim: u32, k: usize) -> ClassPoly {
    euler_sequence_chern(base_dim).get(k).cloned().unwrap_or_else(|| ClassPoly::zero(base_dim))
}

/// The degree-two double point relation on `X ⊂ Q^n`, written as
/// `right side - left side = 0`.
pub fn dpf2_relation(n: i64, base_dim: u32) -> ClassPoly {
    let b = base_dim;
    let coeffs = Dpf2::for_n(n);
    let l = ClassPoly::gen(b, Gen::L);
    let l2 = l.mul(&l);
    let c1 = chern(b, 1);
    let c2 = chern(b, 2);
    l2.scale(&r(coeffs.l2)).add(&c1.mul(&l).scale(&r(coeffs.c1_l))).add(&c1.mul(&c1)).sub(&c2).sub(&l2.scale(&d_poly().scale(&rat(1, 2))))
}

/// The degree-three relation as `right side - c_3`.
pub fn dpf3_relation(n: i64, base_dim: u32) -> ClassPoly {
    let b = base_dim;
    let k = Dpf3::for_n(n);
    let l = ClassPoly::gen(b, Gen::L);
    let (c1, c2, c3) = (chern(b, 1), chern(b, 2), chern(b, 3));
    let c1sq_c2 = c1.mul(&c1).sub(&c2);
    l.pow(3)
        .scale(&r(k.l3))
        .add(&c1.mul(&l.pow(2)).scale(&r(k.c1_l2)))
        .add(&c1sq_c2.mul(&l).scale(&r(k.c1sq_minus_c2_l)))
        .add(&c1.mul(&c2).scale(&r(k.c1_c2)))
        .add(&c1.pow(3).scale(&r(k.c1_cubed)))
        .sub(&c3)
}

/// The degree-four relation as `right side - c_4`.
pub fn dpf4_relation(base_dim: u32) -> ClassPoly {
    let b = base_dim;
    let k = DPF4;
    let l = ClassPoly::gen(b, Gen::L);
    let (c1, c2, c3, c4) = (chern(b, 1), chern(b, 2), chern(b, 3), chern(b, 4));
    let q = c1.mul(&c1).sub(&c2);
    l.pow(4)
        .scale_int(k.l4)
        .add(&l.pow(3).mul(&c1).scale_int(k.l3_c1))
        .add(&l.pow(2).mul(&q).scale_int(k.l2_c1sq_minus_c2))
        .add(&l.mul(&c1).mul(&c2).scale_int(k.l_c1_c2))
        .add(&l.mul(&c1.pow(3)).scale_int(k.l_c1_cubed))
        .add(&l.mul(&c3).scale_int(k.l_c3))
        .add(&c1.mul(&c3).scale_int(k.c1_c3))
        .add(&q.mul(&q).scale_int(k.c1sq_minus_c2_squared))
        .add(&c1.mul(&c1).mul(&c2).scale_int(k.c1sq_c2))
        .sub(&c4)
}

/// Where the fiber `F ≅ P^r` of a scroll sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberCase {
    ThreefoldOverCurve,
    FourfoldOverCurve,
    FourfoldOverSurface,
}

impl FiberCase {
    /// `(n, r)`: ambient quadric and fiber dimension.
    pub fn shape(self) -> (i64, i64) {
        match self {
            FiberCase::ThreefoldOverCurve => (5, 2),
            FiberCase::FourfoldOverCurve => (6, 3),
            FiberCase::FourfoldOverSurface => (6, 2),
        }
    }
}

/// Intersects the degree-two relation with `F · L^{n-5}`: on `F ≅ P^r`
/// the normal bundle is trivial, so `c_1 = (r+1)H`, `c_2 = B(r+1, 2)H²`,
/// and the relation becomes linear in `d`.
pub fn fiber_cut_degree(case: FiberCase) -> Rational {
    let (n, rr) = case.shape();
    let k = Dpf2::for_n(n);
    let c1 = int(rr + 1);
    let c2 = Rational::from_integer(binom(rr + 1, 2));
    let half_d = k.l2 + k.c1_l * &c1 + &c1 * &c1 - c2;
    half_d * int(2)
}

/// The base of a threefold scroll over a surface in `Q^5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseSurface {
    ProjectivePlane,
    Quadric,
    K3,
}

/// Numbers supporting the identification of the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseIdentification {
    pub d: i64,
    pub base: BaseSurface,
    pub k_squared: Rational,
    pub chi: Rational,
    /// Coefficient `q` with `K_Y ≡ q e1`.
    pub ky_coeff: Rational,
    /// Second Betti number, fixed by the one-parameter family at `d = 8`.
    pub b2: Option<Rational>,
}

/// `d = 6`: `K_Y ≡ -e1` is anti-ample with `K² = 9`, a del Pezzo surface
/// of degree 9. `d = 8`: `3K_Y ≡ -2e1` forces a del Pezzo surface on which
/// `3K_Y` is divisible by 2, hence `Q^2`, and `b2 = t = 4`. `d = 12`: `K_Y ≡ 0`
/// and `χ = 2`, a minimal K3 surface.
pub fn base_surface_classify(d: i64) -> Result<BaseIdentification> {
    match d {
        6 | 12 => {
            let inv = scroll_invariants(&int(d))?;
            let sol = surface_scroll_solve(&int(d))?;
            let base = if d == 6 { BaseSurface::ProjectivePlane } else { BaseSurface::K3 };
            Ok(BaseIdentification { d, base, k_squared: sol.ly1_sq().clone(), chi: inv.chi, ky_coeff: inv.ky_coeff, b2: None })
        }
        8 => {
            let t = d8_parameter_from_chi(&int(1));
            let sol = d8_family_at(&t);
            Ok(BaseIdentification {
                d,
                base: BaseSurface::Quadric,
                k_squared: sol.ly1_sq().clone(),
                chi: int(1),
                ky_coeff: rat(-2, 3),
                b2: Some(t),
            })
        }
        _ => Err(Error::InvalidInput(alloc::format!("no base identification for d = {d}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring::Monomial;
    use Gen::*;

    fn p(terms: &[(i64, &[Gen])]) -> ClassPoly {
        ClassPoly::from_terms(2, terms)
    }

    #[test]
    fn euler_sequence_classes() {
        let c = euler_sequence_chern(2);
        assert_eq!(c[1], p(&[(2, &[L]), (-1, &[E1]), (1, &[Y1])]));
        assert_eq!(c[2], p(&[(2, &[L, Y1]), (-1, &[E1, Y1]), (1, &[Y2])]));
        assert_eq!(c[3], p(&[(2, &[L, Y2])]));
        let c3 = euler_sequence_chern(3);
        assert_eq!(c3[4], ClassPoly::from_terms(3, &[(2, &[L, Y3])]));
    }

    #[test]
    fn degree_two_relation_on_q5_matches_equation_a() {
        let a = dpf2_relation(5, 2);
        let expect = p(&[(5, &[L, L]), (1, &[L, E1]), (-3, &[L, Y1]), (1, &[E1, E1]), (1, &[Y1, Y1]), (-1, &[E1, Y1]), (-1, &[Y2])])
            .sub(&ClassPoly::term(2, Monomial::product(&[L, L]), d_poly().scale(&rat(1, 2))));
        assert_eq!(a, expect);
    }

    #[test]
    fn fiber_cuts() {
        assert_eq!(fiber_cut_degree(FiberCase::ThreefoldOverCurve), int(4));
        assert_eq!(fiber_cut_degree(FiberCase::FourfoldOverCurve), int(4));
        assert_eq!(fiber_cut_degree(FiberCase::FourfoldOverSurface), int(8));
    }

    #[test]
    fn bases() {
        let six = base_surface_classify(6).unwrap();
        assert_eq!((six.base, six.k_squared.clone(), six.chi.clone()), (BaseSurface::ProjectivePlane, int(9), int(1)));
        assert_eq!(six.ky_coeff, rat(-1, 1));
        let twelve = base_surface_classify(12).unwrap();
        assert_eq!((twelve.base, twelve.chi.clone(), twelve.ky_coeff.clone()), (BaseSurface::K3, int(2), int(0)));
        let eight = base_surface_classify(8).unwrap();
        assert_eq!((eight.base, eight.b2.clone(), eight.k_squared.clone()), (BaseSurface::Quadric, Some(int(4)), int(8)));
        assert!(base_surface_classify(10).is_err());
    }
}
