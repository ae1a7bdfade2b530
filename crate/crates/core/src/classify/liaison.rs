//! Linkage by complete intersections of type `(a, b)` on `Q^n`.

use alloc::vec::Vec;

use super::{entry, TypeLabel};

/// `source ~(a,b)~ target`: every variety of the source type is linked to
/// one of the target type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiaisonLink {
    pub source: TypeLabel,
    pub a: i64,
    pub b: i64,
    pub target: TypeLabel,
}

const fn link(source: TypeLabel, a: i64, b: i64, target: TypeLabel) -> LiaisonLink {
    LiaisonLink { source, a, b, target }
}

/// The listed links among types of degree at most ten, followed by the
/// pair between Types F and O.
pub fn liaison_links() -> Vec<LiaisonLink> {
    use TypeLabel::*;
    alloc::vec![
        link(A, 1, 2, A),
        link(A, 1, 3, B),
        link(A, 1, 4, E),
        link(A, 2, 2, G),
        link(A, 1, 5, H),
        link(A, 1, 6, M),
        link(A, 2, 3, N),
        link(B, 2, 2, B),
        link(B, 2, 3, I),
        link(G, 2, 2, A),
        link(G, 2, 3, G),
        link(G, 2, 4, N),
        link(I, 2, 3, B),
        link(I, 2, 4, I),
        link(I, 3, 3, N),
        link(N, 3, 3, I),
        link(F, 3, 3, O),
        link(O, 3, 3, F),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiaisonResult {
    pub link: LiaisonLink,
    /// `2ab - d`.
    pub d: i64,
    /// `g - ½(d - d')(a + b - 3)`, if integral.
    pub g: Option<i64>,
    pub degree_ok: bool,
    pub genus_ok: bool,
}

impl LiaisonResult {
    pub fn passed(&self) -> bool {
        self.degree_ok && self.genus_ok
    }
}

/// Checks `d' = 2ab - d` and `g - g' = ½(d - d')(a + b - 3)` against the
/// catalog.
pub fn liaison_check(l: LiaisonLink) -> LiaisonResult {
    let (s, t) = (entry(l.source), entry(l.target));
    let d = 2 * l.a * l.b - s.d;
    let twice = (s.d - d) * (l.a + l.b - 3);
    let g = (twice % 2 == 0).then(|| s.g - twice / 2);
    LiaisonResult { link: l, d, g, degree_ok: d == t.d, genus_ok: g == Some(t.g) }
}
