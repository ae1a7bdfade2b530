//! The classification catalog of codimension-two subvarieties of quadrics of
//! degree at most ten and of codimension-two scrolls, with verification,
//! liaison checks and table emission.

mod liaison;
mod table;
mod type_o;
mod verify;

pub use liaison::{liaison_check, liaison_links, LiaisonLink, LiaisonResult};
pub use table::{classification_table, Cell, CellStatus, Table, TableRow, TableScope};
pub use type_o::{type_o_constraints, BetaDichotomy, TypeOConstraints};
pub use verify::{verify_all, verify_type, Check, VerificationReport};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::chern::{BundleSpec, BundleTerm};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    L,
    M,
    N,
    O,
}

impl TypeLabel {
    pub const ALL: [TypeLabel; 13] = [
        TypeLabel::A,
        TypeLabel::B,
        TypeLabel::C,
        TypeLabel::D,
        TypeLabel::E,
        TypeLabel::F,
        TypeLabel::G,
        TypeLabel::H,
        TypeLabel::I,
        TypeLabel::L,
        TypeLabel::M,
        TypeLabel::N,
        TypeLabel::O,
    ];
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_end_matches(')');
        TypeLabel::ALL
            .into_iter()
            .find(|l| alloc::format!("{l}").eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::Parse(alloc::format!("unknown type label `{s}`")))
    }
}

/// The quadrics on which a type occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    Exactly(u32),
    AtLeast(u32),
}

impl Ambient {
    /// The dimension used for numerical checks.
    pub fn check_dimension(self) -> u32 {
        match self {
            Ambient::Exactly(n) | Ambient::AtLeast(n) => n,
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Exactly(n) => write!(f, "{n}"),
            Ambient::AtLeast(n) => write!(f, "≥{n}"),
        }
    }
}

/// Whether a scroll sits over a curve or a surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScrollBase {
    Curve,
    Surface,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Description {
    /// `Q^n` cut by hypersurfaces; the full degree triple includes the 2.
    CompleteIntersection([i64; 3]),
    Scroll {
        over: ScrollBase,
        text: String,
    },
    Other(String),
}

impl fmt::Display for Description {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Description::CompleteIntersection([a, b, c]) => write!(f, "complete intersection ({a},{b},{c})"),
            Description::Scroll { text, .. } | Description::Other(text) => f.write_str(text),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HilbertDimension {
    /// `P(n; i, j)` or `Q(n; i)` of the complete-intersection degrees.
    CompleteIntersection,
    Number(i64),
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rationality {
    Rational,
    Unirational,
    Unknown,
}

/// `0 -> E -> F -> I_X(l) -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub source: BundleSpec,
    pub target: BundleSpec,
}

impl Presentation {
    pub fn new(source: &[(u32, BundleTerm)], target: &[(u32, BundleTerm)]) -> Self {
        Self { source: BundleSpec::new(source.to_vec()), target: BundleSpec::new(target.to_vec()) }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → {}", self.source, self.target)
    }
}

/// Intersection numbers `K·L², K²·L, K³, c_2·L` of a threefold.
pub type Intersections = [i64; 4];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeEntry {
    pub label: TypeLabel,
    pub ambient: Ambient,
    pub d: i64,
    pub description: Description,
    pub g: i64,
    pub q: i64,
    pub p_g: i64,
    /// `χ(O_X)`; not part of the printed rows.
    pub chi_x: i64,
    pub hilbert: HilbertDimension,
    /// Number of components of the Hilbert scheme, when more than one.
    pub components: u32,
    pub presentations: Vec<Presentation>,
    pub rationality: Rationality,
    pub intersections: Option<Intersections>,
    /// `c_1(E)²` and `c_2(E)` for a scroll `P(E)` over a surface.
    pub bundle_classes: Option<(i64, i64)>,
    pub notes: Vec<String>,
}

impl TypeEntry {
    /// `χ(O_S) = 1 - q + p_g`.
    pub fn chi_s(&self) -> i64 {
        1 - self.q + self.p_g
    }

    pub fn is_scroll(&self) -> bool {
        matches!(self.description, Description::Scroll { .. })
    }
}

fn line(a: i64) -> BundleTerm {
    BundleTerm::Line(a)
}

#[allow(clippy::too_many_arguments)]
fn ci(label: TypeLabel, degrees: [i64; 3], g: i64, p_g: i64, chi_x: i64, source: i64, target: [i64; 2]) -> TypeEntry {
    let target =
        if target[0] == target[1] { alloc::vec![(2, line(target[0]))] } else { alloc::vec![(1, line(target[0])), (1, line(target[1]))] };
    TypeEntry {
        label,
        ambient: Ambient::AtLeast(5),
        d: degrees.iter().product(),
        description: Description::CompleteIntersection(degrees),
        g,
        q: 0,
        p_g,
        chi_x,
        hilbert: HilbertDimension::CompleteIntersection,
        components: 1,
        presentations: alloc::vec![Presentation { source: BundleSpec::single(line(source)), target: BundleSpec::new(target) }],
        rationality: Rationality::Rational,
        intersections: None,
        bundle_classes: None,
        notes: Vec::new(),
    }
}

#[allow(clippy::too_many_arguments)]
fn special(
    label: TypeLabel,
    n: u32,
    d: i64,
    description: Description,
    g: i64,
    p_g: i64,
    hilbert: HilbertDimension,
    presentations: Vec<Presentation>,
) -> TypeEntry {
    TypeEntry {
        label,
        ambient: Ambient::Exactly(n),
        d,
        description,
        g,
        q: 0,
        p_g,
        chi_x: 1,
        hilbert,
        components: 1,
        presentations,
        rationality: Rationality::Unirational,
        intersections: None,
        bundle_classes: None,
        notes: Vec::new(),
    }
}

fn scroll(over: ScrollBase, text: &str) -> Description {
    Description::Scroll { over, text: text.into() }
}

/// The built-in catalog, in label order.
pub fn catalog() -> Vec<TypeEntry> {
    use BundleTerm::*;
    use TypeLabel as T;
    let mut c_entry = special(
        T::C,
        6,
        4,
        scroll(ScrollBase::Curve, "P^1 × P^3, O(1,1)"),
        0,
        0,
        HilbertDimension::Number(15),
        alloc::vec![
            Presentation::new(&[(3, Line(0))], &[(1, SpinorPrime(1))]),
            Presentation::new(&[(3, Line(0))], &[(1, SpinorDoublePrime(1))]),
        ],
    );
    c_entry.components = 2;
    c_entry.notes.push("two connected components, one for each spinor bundle".into());
    let mut o_entry = special(
        T::O,
        5,
        12,
        scroll(ScrollBase::Surface, "scroll over a minimal K3 surface"),
        10,
        1,
        HilbertDimension::Unknown,
        alloc::vec![
            Presentation::new(&[(1, Cayley(-1))], &[(3, Line(0))]),
            Presentation::new(&[(7, Spinor(0))], &[(1, Psi { index: 3, rank: 26 }), (3, Line(0))]),
        ],
    );
    o_entry.chi_x = 2;
    o_entry.rationality = Rationality::Unknown;
    o_entry.intersections = Some([-6, -6, 12, 24]);
    o_entry.bundle_classes = Some((18, 6));
    o_entry.notes.push("whether other families exist is open".into());
    alloc::vec![
        ci(T::A, [1, 1, 2], 0, 0, 1, -1, [0, 0]),
        ci(T::B, [1, 2, 2], 1, 0, 1, -1, [1, 0]),
        c_entry,
        special(
            T::D,
            5,
            4,
            scroll(ScrollBase::Curve, "P(O(1)^2 + O(2)) over P^1"),
            0,
            0,
            HilbertDimension::Number(15),
            alloc::vec![Presentation::new(&[(3, Line(0))], &[(1, Spinor(1))])],
        ),
        ci(T::E, [1, 2, 3], 4, 1, 1, -1, [2, 0]),
        special(
            T::F,
            5,
            6,
            scroll(ScrollBase::Surface, "P(T_{P^2})"),
            1,
            0,
            HilbertDimension::Number(20),
            alloc::vec![Presentation::new(&[(1, Line(0))], &[(1, Cayley(2))])],
        ),
        special(
            T::G,
            5,
            6,
            Description::Other("double cover of P^1 × P^2 branched along a (2,2) divisor".into()),
            2,
            0,
            HilbertDimension::Number(30),
            alloc::vec![Presentation::new(&[(2, Line(-1))], &[(3, Line(0))])],
        ),
        ci(T::H, [1, 2, 4], 9, 5, 0, -1, [3, 0]),
        ci(T::I, [2, 2, 2], 5, 1, 1, -2, [0, 0]),
        special(
            T::L,
            5,
            8,
            scroll(ScrollBase::Surface, "P(E) over Q^2"),
            4,
            0,
            HilbertDimension::Number(35),
            alloc::vec![Presentation::new(&[(4, Line(0))], &[(1, Spinor(1)), (1, Line(1))])],
        ),
        ci(T::M, [1, 2, 5], 16, 14, -5, -1, [4, 0]),
        special(
            T::N,
            5,
            10,
            Description::Other("del Pezzo fibration over P^1, K_F² = 4".into()),
            8,
            2,
            HilbertDimension::Number(60),
            alloc::vec![Presentation::new(&[(2, Line(-1))], &[(1, Line(1)), (2, Line(0))])],
        ),
        o_entry,
    ]
}

pub fn entry(label: TypeLabel) -> TypeEntry {
    catalog().into_iter().find(|e| e.label == label).expect("every label is in the catalog")
}
