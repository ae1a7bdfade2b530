//! One report builder per subcommand.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use quadscroll_core::bounds::{candidate_pairs, degree_cascade, easy_bound, pi_bound, segre_margin, CandidateSource, Regime};
use quadscroll_core::chern::{gamma_invert, ideal_chern_from_resolution, render_h_series, BundleSpec};
use quadscroll_core::chow::{ChowClass, MiddlePairing};
use quadscroll_core::classify::{
    catalog, classification_table, liaison_check, liaison_links, type_o_constraints, verify_type, BetaDichotomy, CellStatus, TableScope,
    TypeEntry, TypeLabel,
};
use quadscroll_core::errata::errata;
use quadscroll_core::exact::fmt_rational;
use quadscroll_core::hilbfn::{exclude_all_candidates, Justification, Route, Verdict};
use quadscroll_core::invariants::{
    chi_normal_bundle, derived_invariants, derived_invariants_by_cutting, hilbert_polynomial, hilbert_polynomial_variant,
    ideal_hilbert_polynomial, printed_k3, quadric_hilbert_polynomial, HilbertVariant, InvariantRecord,
};
use quadscroll_core::scrolls::{
    base_surface_classify, d8_family, d8_family_at, d8_parameter_from_chi, fiber_cut_degree, fourfold_system, hodge_index_holds,
    solvable_at, surface_scroll_solve, surface_scroll_solve_symbolic, surface_scroll_system, FiberCase, ScrollInvariants, ScrollSolution,
    SURFACE_VARIABLE_NAMES,
};
use quadscroll_core::{int, Error, Rational};
use serde_json::{json, Value};

use crate::expr::Evaluator;
use crate::report::Report;

pub type Outcome = Result<Report, Error>;

fn r(v: &Rational) -> Value {
    match v.is_integer().then(|| v.numer().to_i64()).flatten() {
        Some(i) => json!(i),
        None => json!(fmt_rational(v)),
    }
}

fn verdict(ok: bool) -> Value {
    json!(if ok { "pass" } else { "FAIL" })
}

fn pairing_name(p: MiddlePairing) -> &'static str {
    match p {
        MiddlePairing::Parity => "parity",
        MiddlePairing::Kronecker => "kronecker",
    }
}

pub fn chow(expr: &str, n: usize, pairing: MiddlePairing) -> Outcome {
    let class = Evaluator::new(n, pairing)?.eval(expr)?;
    let mut rep = Report::new(format!("class in H*(Q^{n})"));
    let degree = class.degree().ok().map(|d| json!(d.to_string()));
    let h_coeffs = class.h_coefficients().map(|c| json!(c.iter().map(fmt_rational).collect::<Vec<_>>()));
    rep.fields(
        None,
        vec![
            ("expression", json!(expr)),
            ("n", json!(n)),
            ("pairing", json!(pairing_name(pairing))),
            ("class", json!(class.render())),
            ("degree", degree.unwrap_or(Value::Null)),
            ("h-coefficients", h_coeffs.unwrap_or(Value::Null)),
        ],
    );
    Ok(rep)
}

pub fn invariants(d: i64, g: i64, chi_s: i64, chi_x: i64, with_errata: bool) -> Outcome {
    let rec = InvariantRecord::new(5, d, g, chi_s, chi_x)?;
    let a = derived_invariants(&rec)?;
    let b = derived_invariants_by_cutting(&rec)?;
    let agree = a == b;
    let mut rep = Report::new(format!("invariants of a threefold in Q^5 with (d, g, χ_S, χ_X) = ({d}, {g}, {chi_s}, {chi_x})"));
    rep.fields(
        Some("intersection numbers"),
        vec![("KL²", r(&a.kl2)), ("K²L", r(&a.k2l)), ("K³", r(&a.k3)), ("c₂L", r(&a.c2l)), ("c₃", r(&a.c3))],
    );
    rep.fields(
        Some("polynomials"),
        vec![
            ("χ(O_X(t))", json!(hilbert_polynomial(&rec)?.display_in("t"))),
            ("χ(I_X(t))", json!(ideal_hilbert_polynomial(&rec)?.display_in("t"))),
            ("χ(O_Q5(t))", json!(quadric_hilbert_polynomial(5).display_in("t"))),
            ("χ(N_X)", r(&chi_normal_bundle(&rec)?)),
        ],
    );
    rep.fields(Some("cross-check"), vec![("double point relations cut by K and L", verdict(agree))]);
    rep.require(agree);
    if with_errata {
        let printed = hilbert_polynomial_variant(&rec, HilbertVariant::Printed)?;
        rep.fields(
            Some("printed formulas"),
            vec![("K³ (printed)", r(&printed_k3(&rec))), ("χ(O_X(t)) (printed t² coefficient)", json!(printed.display_in("t")))],
        );
    }
    Ok(rep)
}

fn solution_rows<T>(sol: &ScrollSolution<T>, show: impl Fn(&T) -> Value) -> Vec<Vec<Value>> {
    SURFACE_VARIABLE_NAMES.iter().zip(&sol.values).map(|(name, v)| vec![json!(name), show(v)]).collect()
}

fn scroll_fields(rep: &mut Report, sol: &ScrollSolution<Rational>) {
    let inv = ScrollInvariants::from_solution(sol);
    let residual = sol.tautological_residual();
    rep.fields(
        Some("invariants"),
        vec![
            ("e1²", r(&inv.e1_sq)),
            ("e2", r(&inv.e2_deg)),
            ("g", r(&inv.g)),
            ("χ", r(&inv.chi)),
            ("K_Y / e1", r(&inv.ky_coeff)),
            ("tautological residual", r(&residual)),
            ("Hodge index", verdict(hodge_index_holds(sol))),
        ],
    );
    rep.require(residual == int(0));
}

pub fn scroll_solve(d: i64, t: Option<i64>) -> Outcome {
    let mut rep = Report::new(format!("threefold scroll over a surface in Q^5, d = {d}"));
    let sol = match surface_scroll_solve(&int(d)) {
        Ok(sol) => sol,
        Err(Error::SingularAtDegreeEight) => {
            let t = t.map(int).unwrap_or_else(|| d8_parameter_from_chi(&int(1)));
            rep.lines(None, vec![format!("det M = 0 at d = 8; one-parameter family evaluated at t = {}", fmt_rational(&t))]);
            let family = d8_family();
            rep.table(Some("family in t"), &["class", "value"], solution_rows(&family, |p| json!(p.display_in("t"))));
            d8_family_at(&t)
        }
        Err(e) => return Err(e),
    };
    rep.table(Some("solution"), &["class", "value"], solution_rows(&sol, r));
    scroll_fields(&mut rep, &sol);
    if let Ok(base) = base_surface_classify(d) {
        rep.fields(
            Some("base surface"),
            vec![
                ("base", json!(format!("{:?}", base.base))),
                ("K_Y²", r(&base.k_squared)),
                ("χ(O_Y)", r(&base.chi)),
                ("b₂", base.b2.as_ref().map(r).unwrap_or(Value::Null)),
            ],
        );
    }
    Ok(rep)
}

pub fn scroll_system() -> Outcome {
    let (m, _) = surface_scroll_system();
    let det = m.determinant()?;
    let sol = surface_scroll_solve_symbolic()?;
    let mut rep = Report::new("surface-scroll linear system");
    let roots: Vec<String> = det.rational_roots().iter().map(fmt_rational).collect();
    rep.fields(None, vec![("det M", json!(det.display_in("d"))), ("singular at", json!(roots))]);
    rep.table(Some("solution in d"), &["class", "value"], solution_rows(&sol, |p| json!(p.display_in("d"))));
    let residual = sol.tautological_residual();
    rep.fields(None, vec![("tautological residual", json!(residual.display_in("d")))]);
    rep.require(residual.is_zero());
    Ok(rep)
}

pub fn fourfold_scan(max: i64) -> Outcome {
    if max < 2 {
        return Err(Error::InvalidInput(format!("--max must be at least 2, got {max}")));
    }
    let sys = fourfold_system();
    let solvable: Vec<i64> = (1..=max / 2).map(|k| 2 * k).filter(|&d| solvable_at(&sys, &int(d))).collect();
    let mut rep = Report::new(format!("fourfold scrolls over a threefold in Q^6, even d in [2, {max}]"));
    rep.fields(
        None,
        vec![
            ("relations", json!(sys.matrix.rows())),
            ("unknowns", json!(sys.matrix.cols())),
            ("generic rank", json!(sys.generic_rank)),
            ("solvable degrees", json!(solvable)),
        ],
    );
    Ok(rep)
}

pub fn fiber_cuts() -> Outcome {
    let mut rep = Report::new("degree forced by the degree-two relation on a fiber");
    let rows = [
        ("threefold over a curve", FiberCase::ThreefoldOverCurve),
        ("fourfold over a curve", FiberCase::FourfoldOverCurve),
        ("fourfold over a surface", FiberCase::FourfoldOverSurface),
    ]
    .into_iter()
    .map(|(name, case)| {
        let (n, rr) = case.shape();
        vec![json!(name), json!(n), json!(rr), r(&fiber_cut_degree(case))]
    })
    .collect();
    rep.table(None, &["case", "n", "fiber dimension", "d"], rows);
    Ok(rep)
}

pub fn bounds_cascade() -> Outcome {
    let trace = degree_cascade();
    let mut rep = Report::new("degree bound for threefold scrolls over a surface in Q^5");
    rep.lines(Some("cascade"), trace.lines());
    let rows = candidate_pairs()
        .into_iter()
        .map(|c| {
            let source = match c.source {
                CandidateSource::Formula => "linear system",
                CandidateSource::DegreeEightFamily => "d = 8 family",
            };
            vec![json!(c.d), json!(c.g), json!(c.chi), json!(source)]
        })
        .collect();
    rep.table(Some("candidates"), &["d", "g", "χ", "source"], rows);
    rep.fields(None, vec![("Segre margin (σ = 2, D empty)", json!(segre_margin()?.display_in("d")))]);
    Ok(rep)
}

pub fn bounds_pi(d: i64, k: i64) -> Outcome {
    let b = pi_bound(d, k)?;
    let c = b.context;
    let mut rep = Report::new(format!("genus bound for a curve of degree {d} in Q^3 on no surface of degree below 2·{k}"));
    rep.fields(
        None,
        vec![
            ("regime", json!(if c.regime == Regime::Main { "d > 2k(k-1)" } else { "d ≤ 2k(k-1)" })),
            ("k used", json!(c.k_used)),
            ("n₀", json!(c.n0)),
            ("ε", json!(c.eps)),
            ("π", r(&b.pi)),
            ("Ξ", json!(b.xi)),
            ("g - 1 ≤", r(&b.bound())),
            ("d²/4k + (k-3)d/2", r(&easy_bound(d, c.k_used))),
        ],
    );
    Ok(rep)
}

fn justification_text(j: &Justification) -> String {
    match j {
        Justification::CompleteIntersection => "complete intersection".into(),
        Justification::LiftingAndSegre { ceiling } => format!("lifting + Segre, d > {ceiling}"),
        Justification::ExceedsGenusBound(b) => format!("g - 1 > {}", fmt_rational(&b.bound())),
        Justification::MaximalGenus(b) => format!("g - 1 = {} with ε = 0", fmt_rational(&b.bound())),
        Justification::Unjustified(b) => format!("unjustified (π - Ξ = {})", fmt_rational(&b.bound())),
    }
}

pub fn exclude_pairs() -> Outcome {
    let report = exclude_all_candidates();
    let mut rep = Report::new("Hilbert-function exclusions of candidate (d, g)");
    let mut rows = Vec::new();
    let mut all = true;
    for c in &report.cases {
        let route = match c.route {
            Route::Direct { i } => format!("h_C({i}) directly"),
            Route::Step { i, h_gamma_lower, cited } => {
                format!("h_C({}) ≥ h_C({i}) + {h_gamma_lower}{}", i + 1, if cited { " (imported)" } else { "" })
            }
        };
        let hc: Vec<String> = c.hc.iter().map(|(i, v)| format!("h_C({i}) ≥ {v}")).collect();
        let assumptions: Vec<String> =
            c.assumptions.iter().map(|a| format!("k={}: {}", a.k, justification_text(&a.justification))).collect();
        let excluded = matches!(c.verdict, Verdict::Excluded { .. });
        all &= excluded;
        rows.push(vec![
            json!(format!("({}, {})", c.d, c.g)),
            json!(route),
            json!(hc.join("; ")),
            json!(format!("h⁰(O_C({})) = {}", c.h0.0, c.h0.1)),
            c.printed_hc.map(|p| json!(p)).unwrap_or(Value::Null),
            json!(assumptions.join("; ")),
            json!(if excluded { "excluded" } else { "not excluded" }),
        ]);
    }
    rep.table(None, &["(d, g)", "route", "lower bound", "upper bound", "printed h_C", "surfaces of degree 2k", "verdict"], rows);
    rep.fields(None, vec![("survivors", json!(report.survivors))]);
    rep.require(all);
    Ok(rep)
}

fn verification(e: &TypeEntry) -> Report {
    let v = verify_type(e);
    let mut rep = Report::new(format!("Type {}", e.label));
    let rows =
        v.checks.iter().map(|c| vec![json!(c.name), json!(c.formula), json!(c.expected), json!(c.computed), verdict(c.passed)]).collect();
    rep.table(None, &["check", "formula", "expected", "computed", "result"], rows);
    rep.require(v.passed());
    rep
}

pub fn verify_types(label: &str, entries: &[TypeEntry]) -> Outcome {
    if label.eq_ignore_ascii_case("all") {
        let mut rep = Report::new("verification of every catalog type");
        for e in entries {
            rep.append(verification(e));
        }
        let failed: Vec<String> = verify_summary(entries);
        rep.fields(None, vec![("types", json!(entries.len())), ("failed", json!(failed))]);
        return Ok(rep);
    }
    let label: TypeLabel = label.parse()?;
    let e = entries.iter().find(|e| e.label == label).ok_or_else(|| Error::InvalidInput(format!("type {label} is not in the catalog")))?;
    Ok(verification(e))
}

fn verify_summary(entries: &[TypeEntry]) -> Vec<String> {
    entries.iter().filter(|e| !verify_type(e).passed()).map(|e| e.label.to_string()).collect()
}

/// Splits `E -> F` (or `E → F`).
fn split_presentation(spec: &str) -> Result<(BundleSpec, BundleSpec), Error> {
    let (e, f) =
        spec.split_once("->").or_else(|| spec.split_once('→')).ok_or_else(|| Error::Parse(format!("expected `E -> F`, got `{spec}`")))?;
    Ok((e.parse()?, f.parse()?))
}

pub fn verify_presentation(spec: &str, n: usize) -> Outcome {
    let (e, f) = split_presentation(spec)?;
    let mut rep = Report::new(format!("presentation 0 → {e} → {f} → I_X(l) → 0 on Q^{n}"));
    let rank_ok = f.rank() - e.rank() == 1;
    rep.fields(None, vec![("rank F - rank E", json!(f.rank() - e.rank())), ("rank check", verdict(rank_ok))]);
    rep.require(rank_ok);
    if !rank_ok || !e.has_chern_data() || !f.has_chern_data() {
        if rank_ok {
            rep.lines(None, vec!["no Chern data for some term; only the rank is checked".into()]);
        }
        return Ok(rep);
    }
    let c = ideal_chern_from_resolution(n, &e, &f)?;
    let degree = c.c(2).cup(&ChowClass::h_power(n, n - 2))?.degree()?;
    let positive_even = degree > BigInt::from(0) && (n < 5 || &degree % 2 == BigInt::from(0));
    rep.fields(
        None,
        vec![
            ("c(I_X(l))", json!(render_h_series(&c))),
            ("d = c₂·h^(n-2)", json!(degree.to_string())),
            ("degree check", verdict(positive_even)),
        ],
    );
    rep.require(positive_even);
    if n == 5 {
        let l = c.h_coefficients().and_then(|h| h[1].to_integer().to_i64()).unwrap_or(0);
        let gi = gamma_invert(&c, l)?;
        let g = (&gi.kl2 + &gi.d * int(2)) / int(2) + int(1);
        rep.fields(
            Some("inverted invariants"),
            vec![("l", json!(l)), ("d", r(&gi.d)), ("KL²", r(&gi.kl2)), ("K²L", r(&gi.k2l)), ("K³", r(&gi.k3)), ("g", r(&g))],
        );
        let d_i = gi.d.to_integer().to_i64();
        let matches: Vec<String> = catalog()
            .iter()
            .filter(|t| t.ambient.check_dimension() == 5 && Some(t.d) == d_i && int(t.g) == g)
            .map(|t| t.label.to_string())
            .collect();
        let listed: Vec<String> = catalog()
            .iter()
            .filter(|t| t.presentations.iter().any(|p| p.source == e && p.target == f))
            .map(|t| t.label.to_string())
            .collect();
        let consistent = listed.iter().all(|l| matches.contains(l));
        rep.fields(
            None,
            vec![
                ("catalog types with this (d, g)", json!(matches)),
                ("catalog types listing this presentation", json!(listed)),
                ("catalog check", verdict(consistent)),
            ],
        );
        rep.require(consistent);
    }
    Ok(rep)
}

fn status_cell(text: &str, status: CellStatus) -> Value {
    let status = match status {
        CellStatus::Verified => "verified",
        CellStatus::Errata => "errata",
        CellStatus::Recorded => "recorded",
    };
    json!({ "text": text, "status": status })
}

pub fn table(scope: TableScope) -> Outcome {
    let t = classification_table(scope);
    let mut rep = Report::new(t.title);
    let rows: Vec<Vec<Value>> = t.rows.iter().map(|row| row.cells.iter().map(|c| status_cell(&c.text, c.status)).collect()).collect();
    let errata_cells = t.rows.iter().flat_map(|r| &r.cells).filter(|c| c.status == CellStatus::Errata).count();
    rep.table(None, &t.columns, rows);
    rep.lines(None, vec!["✓ verified by a check that ran and passed; ✗ contradicted by a check; unmarked cells are recorded data".into()]);
    rep.require(errata_cells == 0);
    Ok(rep)
}

pub fn errata_report() -> Outcome {
    let entries = errata();
    let mut rep = Report::new("repaired formulas");
    let rows =
        entries.iter().map(|e| vec![json!(e.id), json!(e.topic), json!(e.printed), json!(e.corrected), verdict(e.confirmed)]).collect();
    rep.table(None, &["id", "topic", "printed", "corrected", "confirmed"], rows);
    for e in &entries {
        rep.lines(Some(&format!("evidence: {}", e.id)), e.evidence.clone());
    }
    rep.require(entries.iter().all(|e| e.confirmed));
    Ok(rep)
}

pub fn liaison() -> Outcome {
    let mut rep = Report::new("liaison inside Q^5");
    let mut all = true;
    let rows = liaison_links()
        .into_iter()
        .map(|l| {
            let res = liaison_check(l);
            all &= res.passed();
            vec![
                json!(l.source.to_string()),
                json!(format!("({}, {})", l.a, l.b)),
                json!(l.target.to_string()),
                json!(res.d),
                res.g.map(|g| json!(g)).unwrap_or(Value::Null),
                verdict(res.degree_ok),
                verdict(res.genus_ok),
            ]
        })
        .collect();
    rep.table(None, &["source", "(a, b)", "target", "d'", "g'", "degree", "genus"], rows);
    rep.require(all);
    Ok(rep)
}

pub fn type_o() -> Outcome {
    let t = type_o_constraints();
    let mut rep = Report::new("auxiliary data for the degree-twelve scroll over a K3 surface");
    rep.lines(Some("cohomology"), t.cohomology.iter().map(|s| s.to_string()).collect());
    let dichotomy: Vec<String> = t
        .dichotomy
        .iter()
        .map(|b| match b {
            BetaDichotomy::WithSection { beta_20, beta_03 } => format!("β_(2,0) = {beta_20} and β_(0,3) = {beta_03}"),
            BetaDichotomy::WithoutSection { beta_20, max_beta_13 } => format!("β_(2,0) = {beta_20} and 0 ≤ β_(1,3) ≤ {max_beta_13}"),
        })
        .collect();
    rep.fields(
        None,
        vec![
            ("χ(O_X)", r(&t.chi_structure_sheaf)),
            ("χ(O_X(1))", r(&t.chi_hyperplane)),
            ("χ(I_X(t))", json!(t.ideal_hilbert.display_in("t"))),
            ("β_(0,2) - β_(1,2)", r(&t.beta_differences.0)),
            ("β_(0,3) - β_(1,3)", r(&t.beta_differences.1)),
            ("dichotomy", json!(dichotomy.join(" or "))),
            ("monads", json!(t.monads.to_vec())),
            ("monad ranks", json!(t.monad_ranks.to_vec())),
            ("χ(S(t))", json!(t.spinor_chi.display_in("t"))),
            ("χ(S|X(t))", json!(t.spinor_restricted_chi.display_in("t"))),
            ("σ₄ - σ₃", r(&t.sigma_difference)),
            ("resolution", json!(t.resolution)),
            ("ranks and codimension of D_27", json!([t.resolution_ranks.0, t.resolution_ranks.1, t.resolution_ranks.2])),
        ],
    );
    let rows = t.checks.iter().map(|(name, ok)| vec![json!(name), verdict(*ok)]).collect();
    rep.table(Some("checks"), &["check", "result"], rows);
    rep.require(t.passed());
    Ok(rep)
}
