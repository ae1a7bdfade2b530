//! Fourfold scrolls over threefolds in `Q^6`: twenty relations in seventeen
//! intersection numbers.

use alloc::vec::Vec;

use super::ring::{ClassPoly, Gen, Monomial};
use super::{dpf2_relation, dpf3_relation, dpf4_relation, tautological};
use crate::exact::{int, PolyMatrix, RatMatrix, RatPoly, Rational};

use Gen::{E1, E2, L, Y1, Y2, Y3};

/// The seventeen top-degree monomials with base degree at most three.
pub fn fourfold_variables() -> [Monomial; 17] {
    let m = Monomial::product;
    [
        m(&[L, L, L, L]),
        m(&[L, L, L, E1]),
        m(&[L, L, L, Y1]),
        m(&[L, L, E1, E1]),
        m(&[L, L, E1, Y1]),
        m(&[L, L, E2]),
        m(&[L, L, Y1, Y1]),
        m(&[L, L, Y2]),
        m(&[L, E1, E1, E1]),
        m(&[L, E1, E1, Y1]),
        m(&[L, E1, E2]),
        m(&[L, E1, Y1, Y1]),
        m(&[L, E1, Y2]),
        m(&[L, E2, Y1]),
        m(&[L, Y1, Y1, Y1]),
        m(&[L, Y1, Y2]),
        m(&[L, Y3]),
    ]
}

/// The degree-two, three and four relations with the Euler-sequence
/// classes substituted. The degree-two one is negated to match the sign in
/// which it is usually written.
pub fn fourfold_relations() -> (ClassPoly, ClassPoly, ClassPoly) {
    (dpf2_relation(6, 3).neg(), dpf3_relation(6, 3), dpf4_relation(3))
}

/// The homogeneous system (without `L⁴ = d`) and its generic rank.
#[derive(Clone, Debug)]
pub struct FourfoldSystem {
    pub matrix: PolyMatrix,
    pub generic_rank: usize,
}

/// Rows: the tautological relation and the degree-two relation cut with
/// `L², Le1, Ly1, e1², y1², e1y1, e2, y2`; the degree-three relation cut
/// with `L, e1, y1`; the degree-four relation.
pub fn fourfold_system() -> FourfoldSystem {
    let (n2, n3, n4) = fourfold_relations();
    let taut = tautological(3);
    let p = |gens: &[Gen]| ClassPoly::term(3, Monomial::product(gens), RatPoly::one());
    let quad_cuts = [p(&[L, L]), p(&[L, E1]), p(&[L, Y1]), p(&[E1, E1]), p(&[Y1, Y1]), p(&[E1, Y1]), p(&[E2]), p(&[Y2])];
    let lin_cuts = [p(&[L]), p(&[E1]), p(&[Y1])];
    let mut rows: Vec<ClassPoly> = quad_cuts.iter().map(|c| taut.mul(c)).collect();
    rows.extend(quad_cuts.iter().map(|c| n2.mul(c)));
    rows.extend(lin_cuts.iter().map(|c| n3.mul(c)));
    rows.push(n4);
    let vars = fourfold_variables();
    let matrix = PolyMatrix::from_rows(rows.iter().map(|r| r.coefficients_in(&vars).expect("all terms are variables")).collect())
        .expect("rectangular");
    let generic_rank = matrix.generic_rank();
    FourfoldSystem { matrix, generic_rank }
}

/// Whether the system at `d`, together with `L⁴ = d`, is consistent.
pub fn solvable_at(system: &FourfoldSystem, d: &Rational) -> bool {
    let m = system.matrix.eval(d);
    let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut l4 = alloc::vec![int(0); m.cols()];
    l4[0] = int(1);
    rows.push(l4);
    let mut rhs = alloc::vec![int(0); m.rows()];
    rhs.push(d.clone());
    RatMatrix::from_rows(rows).expect("rectangular").solve(&rhs).expect("shape").is_consistent()
}

/// Even degrees in `2..=max_d` at which a solution with `L⁴ = d` exists.
pub fn solvable_degrees(max_d: i64) -> Vec<i64> {
    let system = fourfold_system();
    (1..=max_d / 2).map(|k| 2 * k).filter(|&d| solvable_at(&system, &int(d))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(terms: &[(i64, &[Gen])]) -> ClassPoly {
        ClassPoly::from_terms(3, terms)
    }

    #[test]
    fn relations_match_the_written_forms() {
        let (n2, n3, n4) = fourfold_relations();
        let d_half = ClassPoly::term(3, Monomial::product(&[L, L]), RatPoly::linear(int(0), rat(1, 2)));
        let n2_expect =
            p(&[(-8, &[L, L]), (4, &[L, Y1]), (-2, &[L, E1]), (-1, &[E1, E1]), (1, &[E1, Y1]), (-1, &[Y1, Y1]), (1, &[Y2])]).add(&d_half);
        assert_eq!(n2, n2_expect);
        let n3_expect = p(&[
            (8, &[L, L, L]),
            (4, &[L, L, E1]),
            (-8, &[L, L, Y1]),
            (-2, &[L, E1, Y1]),
            (4, &[L, Y1, Y1]),
            (-4, &[L, Y2]),
            (1, &[E1, E1, E1]),
            (-1, &[E1, E1, Y1]),
            (1, &[E1, Y1, Y1]),
            (-1, &[E1, Y2]),
            (-1, &[Y1, Y1, Y1]),
            (2, &[Y1, Y2]),
            (-1, &[Y3]),
        ]);
        assert_eq!(n3, n3_expect);
        let n4_expect = p(&[
            (6, &[L, L, L, L]),
            (-8, &[L, L, L, Y1]),
            (4, &[L, L, E1, E1]),
            (-4, &[L, L, E1, Y1]),
            (8, &[L, L, Y1, Y1]),
            (-8, &[L, L, Y2]),
            (-2, &[L, E1, E1, E1]),
            (2, &[L, E1, Y1, Y1]),
            (-2, &[L, E1, Y2]),
            (-4, &[L, Y1, Y1, Y1]),
            (8, &[L, Y1, Y2]),
            (-4, &[L, Y3]),
        ]);
        assert_eq!(n4, n4_expect);
    }

    #[test]
    fn shape_and_generic_rank() {
        let s = fourfold_system();
        assert_eq!((s.matrix.rows(), s.matrix.cols()), (20, 17));
        assert_eq!(s.generic_rank, 17);
        assert_eq!(s.matrix.eval(&int(4)).rank(), 16);
    }

    #[test]
    fn only_degree_four_is_solvable() {
        assert_eq!(solvable_degrees(40), alloc::vec![4]);
    }
}
