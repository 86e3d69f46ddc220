//! The aggregated verification suite behind `check-all`: every desk-checkable
//! consequence of the construction that applies to a parameter pair, run in a
//! fixed order with deterministic PASS/FAIL reporting.
//!
//! Checks that do not apply to the given parameters (the plane-curve
//! comparison for `n ≥ 2`, the finite-order oracle away from the known finite
//! groups) and checks whose cost would explode on huge lattices report
//! `skipped` in their detail line and count as passed; a check that cannot
//! run because of an unexpected error fails with the error text.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::abelian::abelianize;
use crate::coset::{enumerate_cosets, CosetResult};
use crate::critical::{
    core_family_gradient, hl_critical_values, CoreFamilyPoint, DEFAULT_TOL,
};
use crate::degrees::{degree_report, euler_identities};
use crate::lattice::{enumerate, pairing, Graph, Params, MAX_DENSE_VERTICES};
use crate::presentation::{
    present, present_with, present_zariski, PresentOptions, RelationTag, Variant,
};
use crate::smoothing::{smooth, SmoothingKind};
use crate::{Error, Result};

/// Outcome of a single named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// All outcomes for one parameter pair, in the fixed suite order.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub params: Params,
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    /// One `PASS name: detail` / `FAIL name: detail` line per check plus a
    /// closing summary line.
    pub fn to_text(&self) -> String {
        let mut out = format!("check-all (n, d) = ({}, {})\n", self.params.n, self.params.d);
        for o in &self.outcomes {
            let verdict = if o.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict} {}: {}\n", o.name, o.detail));
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed).count();
        if failed == 0 {
            out.push_str(&format!("all {} checks passed\n", self.outcomes.len()));
        } else {
            out.push_str(&format!(
                "{failed} of {} checks FAILED\n",
                self.outcomes.len()
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

fn outcome(name: &str, run: impl FnOnce() -> Result<(bool, String)>) -> CheckOutcome {
    let (passed, detail) = match run() {
        Ok(pair) => pair,
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn skipped(reason: &str) -> Result<(bool, String)> {
    Ok((true, format!("skipped: {reason}")))
}

/// Runs the whole suite for `(n, d)`.
pub fn run_all_checks(params: Params) -> Result<CheckReport> {
    let dense = params.vertex_count() <= MAX_DENSE_VERTICES;
    let outcomes = vec![
        outcome("graph_structure", || check_graph(params, dense)),
        outcome("enumeration_orders", || check_enumerations(params, dense)),
        outcome("presentation_counts", || check_presentations(params, dense)),
        outcome("zariski_coincidence", || check_zariski(params)),
        outcome("abelianization", || check_abelianization(params)),
        outcome("finite_order", || check_finite_order(params)),
        outcome("smoothing_cusp", || check_smoothing_cusp(params)),
        outcome("smoothing_node", || check_smoothing_node(params)),
        outcome("degree_identities", || check_degrees(params)),
        outcome("euler_identities", || check_euler(params)),
        outcome("hl_numerics", || check_hl_numerics(params)),
        outcome("core_family_gradient", || check_gradient(params)),
    ];
    Ok(CheckReport { params, outcomes })
}

fn check_graph(params: Params, dense: bool) -> Result<(bool, String)> {
    if !dense {
        return skipped("lattice too large for dense pair enumeration");
    }
    let graph = Graph::build(params)?;
    let v = graph.vertex_count();
    let mut ok = graph.edges.len() == Graph::expected_edge_count(params)
        && graph.triangles.len() == Graph::expected_triangle_count(params)
        && graph.edges.len() + graph.non_edges.len() == v * (v.saturating_sub(1)) / 2
        && graph.is_connected();
    if params.n == 1 {
        // The one-variable graph must be the path 1 − 2 − ⋯ − (d−1).
        ok &= graph.triangles.is_empty()
            && graph.edges.len() + 1 == v.max(1)
            && graph
                .edges
                .iter()
                .enumerate()
                .all(|(k, &(a, b))| (a, b) == (k as u32 + 1, k as u32 + 2));
    }
    Ok((
        ok,
        format!(
            "{v} vertices, {} edges, {} triangles, {} non-edges, connected",
            graph.edges.len(),
            graph.triangles.len(),
            graph.non_edges.len()
        ),
    ))
}

fn check_enumerations(params: Params, dense: bool) -> Result<(bool, String)> {
    if !dense {
        return skipped("lattice too large for full enumeration comparison");
    }
    let natural = params.points();
    let mut reversed = natural.clone();
    reversed.reverse();
    let mut ok = enumerate(params, 0)? == reversed;
    for kappa in 0..=params.n {
        let order = enumerate(params, kappa)?;
        let mut sorted = order.clone();
        sorted.sort();
        ok &= order.len() == natural.len() && sorted == natural;
    }
    Ok((
        ok,
        format!(
            "{} enumeration orders are permutations; the base order reverses the natural order",
            params.n + 1
        ),
    ))
}

fn check_presentations(params: Params, dense: bool) -> Result<(bool, String)> {
    if !dense {
        return skipped("lattice too large for presentation construction");
    }
    let graph = Graph::build(params)?;
    let v = graph.vertex_count();
    let affine = present(params, Variant::Affine)?;
    let projective = present(params, Variant::Projective)?;
    affine.validate()?;
    projective.validate()?;

    let counts = |p: &crate::presentation::Presentation, tag| p.relations_with_tag(tag).len();
    let mut ok = affine.gen_count() == v
        && projective.gen_count() == v
        && counts(&affine, RelationTag::Commutation) == graph.non_edges.len()
        && counts(&affine, RelationTag::Braid) == graph.edges.len()
        && counts(&affine, RelationTag::Triangle) == graph.triangles.len()
        && counts(&affine, RelationTag::Asymptote) == v
        && counts(&affine, RelationTag::Projective) == 0
        && counts(&projective, RelationTag::Projective) == 1
        && projective.relations.len() == affine.relations.len() + 1;

    // Commutation relations must join non-intersecting cycles, braid
    // relations intersecting ones.
    for rel in affine.relations_with_tag(RelationTag::Commutation) {
        let (a, b) = (rel.lhs[0] as usize, rel.lhs[1] as usize);
        ok &= pairing(params, &affine.generators[a - 1], &affine.generators[b - 1])? == 0;
    }
    for rel in affine.relations_with_tag(RelationTag::Braid) {
        let (a, b) = (rel.lhs[0] as usize, rel.lhs[1] as usize);
        ok &= pairing(params, &affine.generators[a - 1], &affine.generators[b - 1])? == -1;
    }

    // Every asymptote relation must be the freely reduced form of
    // (t_g⁻¹ δ₀)^{d-1} = (δ₀ t_g⁻¹)^{d-1}, in ascending generator order; the
    // projective relation multiplies n+1 words of length V.
    let delta0 = crate::presentation::delta(params, 0)?;
    let asymptotes = affine.relations_with_tag(RelationTag::Asymptote);
    for (k, rel) in asymptotes.iter().enumerate() {
        let g = k as i32 + 1;
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for _ in 1..params.d {
            lhs.push(-g);
            lhs.extend_from_slice(&delta0);
            rhs.extend_from_slice(&delta0);
            rhs.push(-g);
        }
        ok &= rel.lhs == crate::word::reduce(&lhs) && rel.rhs == crate::word::reduce(&rhs);
    }
    let proj_rel = projective.relations_with_tag(RelationTag::Projective)[0];
    ok &= proj_rel.lhs.len() == (params.n as usize + 1) * v && proj_rel.rhs.is_empty();

    // The six-fold triangle variant emits each triangle in all orderings.
    let sixfold = present_with(
        params,
        Variant::Affine,
        &PresentOptions {
            all_triangle_orderings: true,
            ..PresentOptions::default()
        },
    )?;
    ok &= counts(&sixfold, RelationTag::Triangle) == 6 * graph.triangles.len();

    Ok((
        ok,
        format!(
            "{} generators; {} commutation, {} braid, {} triangle, {} asymptote relations",
            v,
            graph.non_edges.len(),
            graph.edges.len(),
            graph.triangles.len(),
            v
        ),
    ))
}

fn check_zariski(params: Params) -> Result<(bool, String)> {
    if params.n != 1 {
        return skipped("plane-curve comparison is defined for n = 1 only");
    }
    let zariski = present_zariski(params.d)?;
    let affine = present(params, Variant::Affine)?;
    let tags = [RelationTag::Commutation, RelationTag::Braid];
    let mut ok = zariski.relations_with_tag(RelationTag::Triangle).is_empty()
        && affine.relations_with_tag(RelationTag::Triangle).is_empty()
        && zariski.relations_with_tag(RelationTag::Zariski).len() == 1;
    for tag in tags {
        let a: Vec<_> = affine.relations_with_tag(tag).into_iter().cloned().collect();
        let z: Vec<_> = zariski.relations_with_tag(tag).into_iter().cloned().collect();
        ok &= a == z;
    }
    Ok((
        ok,
        "commutation and braid families coincide with the plane-curve presentation".into(),
    ))
}

/// Abelianizations stay cheap only while the relator matrix is small.
const MAX_ABELIAN_VERTICES: usize = 64;

fn expected_projective_order(params: Params) -> BigInt {
    BigInt::from(params.n + 1) * BigInt::from(params.d - 1).pow(params.n)
}

fn check_abelianization(params: Params) -> Result<(bool, String)> {
    if params.vertex_count() > MAX_ABELIAN_VERTICES {
        return skipped("lattice too large for exact Smith normal form");
    }
    let order = expected_projective_order(params);
    let proj = abelianize(&present(params, Variant::Projective)?)?;
    let affine = abelianize(&present(params, Variant::Affine)?)?;
    let mut ok = proj.invariants.free_rank == 0
        && proj.invariants.torsion == vec![order.clone()]
        && affine.invariants.free_rank == 1
        && affine.invariants.torsion.is_empty();
    let mut detail = format!(
        "projective {}, affine {}",
        proj.invariants, affine.invariants
    );
    if params.n == 1 {
        let zariski = abelianize(&present_zariski(params.d)?)?;
        ok &= zariski.invariants.free_rank == 0
            && zariski.invariants.torsion == vec![BigInt::from(2 * (params.d - 1))];
        detail.push_str(&format!(", plane-curve {}", zariski.invariants));
    }
    Ok((ok, detail))
}

/// Group orders known to be finite, with the coset bound of the oracle.
const MAX_COSETS: usize = 10_000;

fn check_finite_order(params: Params) -> Result<(bool, String)> {
    let expected: u64 = match (params.n, params.d) {
        (1, 3) => 12,
        (n, 2) if n <= 8 => u64::from(n) + 1,
        _ => return skipped("no finite-order oracle for these parameters"),
    };
    let proj = present(params, Variant::Projective)?;
    match enumerate_cosets(&proj, &[], MAX_COSETS)? {
        CosetResult::Complete { order, .. } if order == expected => {
            Ok((true, format!("order {order} within {MAX_COSETS} cosets")))
        }
        CosetResult::Complete { order, .. } => {
            Ok((false, format!("order {order}, expected {expected}")))
        }
        CosetResult::BoundExceeded { .. } => {
            Ok((false, format!("enumeration exceeded {MAX_COSETS} cosets")))
        }
    }
}

fn check_smoothing_cusp(params: Params) -> Result<(bool, String)> {
    if params.vertex_count() > MAX_ABELIAN_VERTICES {
        return skipped("lattice too large for the quotient pipeline");
    }
    let s = smooth(params, SmoothingKind::Cusp)?;
    let order = expected_projective_order(params);
    let n: usize = order.to_string().parse().map_err(|_| {
        Error::Internal("cyclic order does not fit in a machine word".into())
    })?;
    let ok = s.presentation.gen_count() == 1
        && s.presentation.relators() == vec![vec![1i32; n]]
        && !s.certificates.is_empty();
    Ok((
        ok,
        format!(
            "quotient is cyclic of order {order} with {} certificates",
            s.certificates.len()
        ),
    ))
}

fn check_smoothing_node(params: Params) -> Result<(bool, String)> {
    if params.vertex_count() > MAX_ABELIAN_VERTICES {
        return skipped("lattice too large for the quotient pipeline");
    }
    match smooth(params, SmoothingKind::Node) {
        Ok(s) => {
            s.presentation.validate()?;
            let ok = !s.certificates.is_empty();
            Ok((
                ok,
                format!(
                    "quotient on {} generators, {} relations, {} certificates",
                    s.presentation.gen_count(),
                    s.presentation.relations.len(),
                    s.certificates.len()
                ),
            ))
        }
        Err(Error::Unsupported(reason)) => skipped(&reason),
        Err(Error::Invalid(reason)) if params.vertex_count() < 2 => skipped(&reason),
        Err(e) => Err(e),
    }
}

fn check_degrees(params: Params) -> Result<(bool, String)> {
    let report = degree_report(params)?;
    Ok((
        true,
        format!(
            "deg p = {}, deg q = {}, cross-identities verified",
            report.deg_p, report.deg_q
        ),
    ))
}

fn check_euler(params: Params) -> Result<(bool, String)> {
    let identities = euler_identities(params)?;
    let ok = !identities.is_empty() && identities.iter().all(|c| c.holds);
    Ok((
        ok,
        format!("{} Euler-number identities hold exactly", identities.len()),
    ))
}

/// Pair-quadratic set checks stay fast only on moderate lattices.
const MAX_NUMERIC_VERTICES: usize = 4096;

fn check_hl_numerics(params: Params) -> Result<(bool, String)> {
    if params.vertex_count() > MAX_NUMERIC_VERTICES {
        return skipped("too many critical values for pairwise matching");
    }
    // The parameters form the ladder v_κ = 10^{-2(κ-1)}. The closest pair of
    // values then sits on the smallest circle, at chord length
    // 2(d−1)·sin(π/(d−1))·|v_n|^{d/(d−1)}; once that drops toward the
    // relative tolerance the distinctness check would fail for purely
    // floating-point reasons, so it is skipped instead.
    if params.d >= 3 && params.n >= 2 {
        let fan = f64::from(params.d - 1);
        let smallest = 10f64.powi(-2 * (params.n as i32 - 1));
        let chord = 2.0
            * fan
            * (std::f64::consts::PI / fan).sin()
            * smallest.powf(f64::from(params.d) / fan);
        if chord <= 1e-6 * fan {
            return skipped("parameter ladder collapses below the numeric tolerance");
        }
    }
    let v: Vec<Complex64> = (0..params.n)
        .map(|k| Complex64::new(10f64.powi(-2 * k as i32), 0.0))
        .collect();
    let set = hl_critical_values(params.d, &v)?;
    let mut ok = set.values.len() == params.vertex_count() && set.check_distinct(DEFAULT_TOL);
    if params.n >= 2 {
        ok &= set.check_circles(DEFAULT_TOL)?;
        for kappa in 1..=params.n {
            ok &= set.check_twist(kappa, DEFAULT_TOL)?;
        }
    }
    Ok((
        ok,
        format!(
            "{} distinct values; circle and twist symmetries at {:e} tolerance",
            set.values.len(),
            DEFAULT_TOL
        ),
    ))
}

fn check_gradient(params: Params) -> Result<(bool, String)> {
    let rat = |num: i64, den: i64| BigRational::new(num.into(), den.into());
    let n = params.n as i64;
    // Five exact parameter choices; each must have zero gradient at the
    // distinguished point.
    let choices: [(BigRational, BigRational, Box<dyn Fn(i64) -> BigRational>); 5] = [
        (rat(1, 1), rat(1, 1), Box::new(move |k| rat(k, 1))),
        (rat(1, 1), rat(0, 1), Box::new(move |k| rat(k, 2))),
        (rat(0, 1), rat(1, 1), Box::new(move |k| rat(2 * k + 1, 3))),
        (rat(7, 3), rat(-2, 11), Box::new(move |k| rat(k * k, 5))),
        (rat(-5, 4), rat(9, 7), Box::new(move |k| rat(k - 3, 2))),
    ];
    let mut ok = true;
    for (zeta, eta, coords) in &choices {
        let lambda_coords: Vec<BigRational> = (1..=n).map(|k| coords(k)).collect();
        let point = CoreFamilyPoint {
            d: params.d,
            zeta: zeta.clone(),
            eta: eta.clone(),
            lambda: BigRational::zero(),
            lambda_coords: lambda_coords.clone(),
            x: lambda_coords,
        };
        ok &= core_family_gradient(&point)?.iter().all(|g| g.is_zero());
    }
    // Control: moving the first coordinate off the distinguished point must
    // be detected.
    let lambda_coords: Vec<BigRational> = (1..=n).map(|k| rat(k, 1)).collect();
    let mut x = lambda_coords.clone();
    x[0] += rat(1, 1);
    let moved = CoreFamilyPoint {
        d: params.d,
        zeta: rat(1, 1),
        eta: rat(0, 1),
        lambda: BigRational::zero(),
        lambda_coords,
        x,
    };
    ok &= !core_family_gradient(&moved)?[0].is_zero();
    Ok((
        ok,
        "5 exact zero gradients at the distinguished point, perturbation detected".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(n: u32, d: u32) -> CheckReport {
        run_all_checks(Params::new(n, d).unwrap()).unwrap()
    }

    #[test]
    fn full_suite_passes_on_small_parameters() {
        for (n, d) in [(1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let report = run(n, d);
            assert!(
                report.all_passed(),
                "(n, d) = ({n}, {d}):\n{}",
                report.to_text()
            );
            assert_eq!(report.outcomes.len(), 12);
        }
    }

    #[test]
    fn text_report_shape() {
        let report = run(2, 3);
        let text = report.to_text();
        assert!(text.starts_with("check-all (n, d) = (2, 3)\n"));
        assert!(text.contains("PASS graph_structure: 4 vertices, 5 edges, 2 triangles"));
        assert!(text.contains("PASS finite_order: skipped"));
        assert!(text.contains("PASS smoothing_node: quotient on 2 generators"));
        assert!(text.ends_with("all 12 checks passed\n"));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run(2, 3);
        let b = run(2, 3);
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_text(), b.to_text());
        assert!(a.to_json().contains("\"name\": \"hl_numerics\""));
    }

    #[test]
    fn skips_are_reported_for_large_parameters() {
        // (d-1)^n = 3^5 = 243 exceeds the abelianization bound but not the
        // dense bound: quotient checks skip, structural checks run.
        let report = run(5, 4);
        assert!(report.all_passed(), "{}", report.to_text());
        let by_name = |name: &str| {
            report
                .outcomes
                .iter()
                .find(|o| o.name == name)
                .unwrap()
                .detail
                .clone()
        };
        assert!(by_name("abelianization").starts_with("skipped"));
        assert!(by_name("smoothing_cusp").starts_with("skipped"));
        assert!(!by_name("graph_structure").starts_with("skipped"));
        assert!(!by_name("degree_identities").starts_with("skipped"));
    }

    #[test]
    fn zariski_check_skips_in_higher_dimension() {
        let report = run(2, 2);
        let zariski = report
            .outcomes
            .iter()
            .find(|o| o.name == "zariski_coincidence")
            .unwrap();
        assert!(zariski.passed);
        assert!(zariski.detail.starts_with("skipped"));
    }
}
