//! Threefold scrolls over surfaces in `Q^5`: the eight-by-eight system.

use alloc::vec::Vec;

use super::ring::{ClassPoly, Gen, Monomial};
use super::{d_poly, dpf2_relation, dpf3_relation, tautological};
use crate::exact::{int, rat, PolyMatrix, RatMatrix, RatPoly, Rational, SolutionSpace};
use crate::{Error, Result};

use Gen::{E1, E2, L, Y1, Y2};

pub const SURFACE_VARIABLE_NAMES: [&str; 8] = ["L^3", "L^2e1", "L^2y1", "Le1^2", "Le1y1", "Ly1^2", "Le2", "Ly2"];

/// `(L³, L²e1, L²y1, Le1², Le1y1, Ly1², Le2, Ly2)`.
pub fn surface_variables() -> [Monomial; 8] {
    [
        Monomial::product(&[L, L, L]),
        Monomial::product(&[L, L, E1]),
        Monomial::product(&[L, L, Y1]),
        Monomial::product(&[L, E1, E1]),
        Monomial::product(&[L, E1, Y1]),
        Monomial::product(&[L, Y1, Y1]),
        Monomial::product(&[L, E2]),
        Monomial::product(&[L, Y2]),
    ]
}

/// The two double point relations and the tautological relation.
///
/// The first is the degree-two relation itself. The second is the
/// degree-three relation reduced by `(L + 2e1 - 2y1)` times the first,
/// which removes the `d`-free part of its `L³` and `L²e1` terms.
pub fn surface_relations() -> (ClassPoly, ClassPoly, ClassPoly) {
    let a = dpf2_relation(5, 2);
    let raw = dpf3_relation(5, 2);
    let m = ClassPoly::from_terms(2, &[(1, &[L]), (2, &[E1]), (-2, &[Y1])]);
    let b = raw.sub(&a.mul(&m));
    (a, b, tautological(2))
}

/// Rows: the first relation cut with `L, e1, y1`; the second relation; the
/// tautological relation cut with `L, e1, y1`; `L³ = d`.
pub fn surface_scroll_system() -> (PolyMatrix, Vec<RatPoly>) {
    let (a, b, taut) = surface_relations();
    let vars = surface_variables();
    let cuts = [ClassPoly::gen(2, L), ClassPoly::gen(2, E1), ClassPoly::gen(2, Y1)];
    let mut rows: Vec<ClassPoly> = cuts.iter().map(|c| a.mul(c)).collect();
    rows.push(b);
    rows.extend(cuts.iter().map(|c| taut.mul(c)));
    rows.push(ClassPoly::term(2, vars[0], RatPoly::one()));
    let matrix = rows.iter().map(|r| r.coefficients_in(&vars).expect("all terms have weight three")).collect();
    let mut rhs = alloc::vec![RatPoly::zero(); 7];
    rhs.push(d_poly());
    (PolyMatrix::from_rows(matrix).expect("square"), rhs)
}

/// The system at a given degree.
pub fn surface_scroll_matrix(d: &Rational) -> (RatMatrix, Vec<Rational>) {
    let (m, rhs) = surface_scroll_system();
    (m.eval(d), rhs.iter().map(|p| p.eval(d)).collect())
}

/// Values of the eight intersection numbers, in variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollSolution<T> {
    pub values: [T; 8],
}

impl<T> ScrollSolution<T> {
    pub fn l3(&self) -> &T {
        &self.values[0]
    }
    pub fn l2e1(&self) -> &T {
        &self.values[1]
    }
    pub fn l2y1(&self) -> &T {
        &self.values[2]
    }
    pub fn le1_sq(&self) -> &T {
        &self.values[3]
    }
    pub fn le1y1(&self) -> &T {
        &self.values[4]
    }
    pub fn ly1_sq(&self) -> &T {
        &self.values[5]
    }
    pub fn le2(&self) -> &T {
        &self.values[6]
    }
    pub fn ly2(&self) -> &T {
        &self.values[7]
    }
}

impl ScrollSolution<Rational> {
    /// `L³ - L²e1 + Le2`.
    pub fn tautological_residual(&self) -> Rational {
        self.l3() - self.l2e1() + self.le2()
    }
}

impl ScrollSolution<RatPoly> {
    pub fn tautological_residual(&self) -> RatPoly {
        &(self.l3() - self.l2e1()) + self.le2()
    }

    pub fn eval(&self, x: &Rational) -> ScrollSolution<Rational> {
        ScrollSolution { values: self.values.clone().map(|p| p.eval(x)) }
    }
}

fn to_array<T: core::fmt::Debug>(v: Vec<T>) -> [T; 8] {
    v.try_into().expect("eight values")
}

/// Solution with `d` symbolic, by Cramer's rule; every component is a
/// polynomial in `d` although the determinant is `72 - 9d`.
pub fn surface_scroll_solve_symbolic() -> Result<ScrollSolution<RatPoly>> {
    let (m, rhs) = surface_scroll_system();
    Ok(ScrollSolution { values: to_array(m.solve_polynomial(&rhs)?) })
}

pub fn surface_scroll_solve(d: &Rational) -> Result<ScrollSolution<Rational>> {
    if *d == int(8) {
        return Err(Error::SingularAtDegreeEight);
    }
    let (m, rhs) = surface_scroll_matrix(d);
    match m.solve(&rhs)? {
        SolutionSpace::Unique(x) => Ok(ScrollSolution { values: to_array(x) }),
        _ => Err(Error::SingularAtDegreeEight),
    }
}

/// The solutions at `d = 8`, parametrized by `t = Ly2`.
pub fn d8_family() -> ScrollSolution<RatPoly> {
    let (m, rhs) = surface_scroll_matrix(&int(8));
    let SolutionSpace::Family { particular, nullspace, .. } = m.solve(&rhs).expect("shape") else {
        unreachable!("the system at d = 8 has a one-parameter family of solutions");
    };
    assert_eq!(nullspace.len(), 1);
    let v = &nullspace[0];
    // x = p + s v with t = p_7 + s v_7
    let s = RatPoly::linear(-&particular[7] / &v[7], Rational::from_integer(1.into()) / &v[7]);
    let values: Vec<RatPoly> = particular.iter().zip(v).map(|(p, vi)| &RatPoly::constant(p.clone()) + &s.scale(vi)).collect();
    ScrollSolution { values: to_array(values) }
}

pub fn d8_family_at(t: &Rational) -> ScrollSolution<Rational> {
    d8_family().eval(t)
}

/// `χ(O_Y)` along the `d = 8` family, by Noether's formula
/// `12χ = K_Y² + c_2(Y) = Ly1² + Ly2`.
pub fn d8_chi() -> RatPoly {
    let f = d8_family();
    (f.ly1_sq() + f.ly2()).scale(&rat(1, 12))
}

/// The value of `t` at which the family has the given `χ(O_Y)`.
pub fn d8_parameter_from_chi(chi: &Rational) -> Rational {
    let p = d8_chi();
    // p is linear in t
    (chi - p.coeff(0)) / p.coeff(1)
}

/// Numerical data of a threefold scroll over a surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollInvariants {
    pub d: Rational,
    pub g: Rational,
    /// `χ(O_X) = χ(O_Y) = χ(O_S)`.
    pub chi: Rational,
    pub e1_sq: Rational,
    pub e2_deg: Rational,
    /// `q` with `K_Y ≡ q e1`.
    pub ky_coeff: Rational,
}

impl ScrollInvariants {
    /// Reads the invariants off a solution vector. The genus is the
    /// arithmetic genus of `e1` on `Y` and `χ` comes from Noether's formula.
    pub fn from_solution(sol: &ScrollSolution<Rational>) -> Self {
        let two_g_minus_two = sol.le1_sq() - sol.le1y1();
        Self {
            d: sol.l3().clone(),
            g: two_g_minus_two / int(2) + int(1),
            chi: (sol.ly1_sq() + sol.ly2()) / int(12),
            e1_sq: sol.le1_sq().clone(),
            e2_deg: sol.le2().clone(),
            ky_coeff: -sol.le1y1() / sol.le1_sq(),
        }
    }
}

pub fn scroll_invariants(d: &Rational) -> Result<ScrollInvariants> {
    Ok(ScrollInvariants::from_solution(&surface_scroll_solve(d)?))
}

/// `K_Y² e1² = (K_Y · e1)²` with `K_Y = -y1`.
pub fn hodge_index_holds(sol: &ScrollSolution<Rational>) -> bool {
    sol.ly1_sq() * sol.le1_sq() == sol.le1y1() * sol.le1y1()
}
