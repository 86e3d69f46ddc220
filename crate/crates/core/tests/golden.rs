//! Frozen expected output for the small classical cases: the cubic plane
//! curve `(n, d) = (2, 3)`, the cubic surface `(3, 3)`, and the low-degree
//! line cases. Every value here was worked out by hand from the lattice
//! combinatorics and is asserted byte-for-byte, so any drift in enumeration
//! order, labelling, or relation emission fails loudly.

use discgroup::presentation::{self, delta, AsymptoteForm, PresentOptions};
use discgroup::smoothing::{smooth, SmoothingKind};
use discgroup::word;
use discgroup::{Params, Relation, RelationTag, Variant};

fn pairs(p: &discgroup::Presentation, tag: RelationTag) -> Vec<(i32, i32)> {
    p.relations_with_tag(tag)
        .iter()
        .map(|r| (r.lhs[0], r.lhs[1]))
        .collect()
}

#[test]
fn cubic_curve_relations_are_exactly_the_classical_list() {
    let params = Params::new(2, 3).unwrap();
    let p = presentation::present(params, Variant::Projective).unwrap();
    assert_eq!(p.gen_count(), 4);

    let comm = p.relations_with_tag(RelationTag::Commutation);
    assert_eq!(comm.len(), 1);
    assert_eq!(comm[0].lhs, vec![2, 3]);
    assert_eq!(comm[0].rhs, vec![3, 2]);

    let braid = pairs(&p, RelationTag::Braid);
    assert_eq!(braid, vec![(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]);
    for r in p.relations_with_tag(RelationTag::Braid) {
        let (a, b) = (r.lhs[0], r.lhs[1]);
        assert_eq!(r.lhs, vec![a, b, a]);
        assert_eq!(r.rhs, vec![b, a, b]);
    }

    let tri = p.relations_with_tag(RelationTag::Triangle);
    assert_eq!(tri.len(), 2);
    assert_eq!(tri[0].lhs, vec![4, 2, 1, 4]);
    assert_eq!(tri[0].rhs, vec![2, 1, 4, 2]);
    assert_eq!(tri[1].lhs, vec![4, 3, 1, 4]);
    assert_eq!(tri[1].rhs, vec![3, 1, 4, 3]);

    // Asymptote relations with δ0 = t4 t3 t2 t1 and exponent d − 1 = 2,
    // after free reduction of each side.
    let asym = p.relations_with_tag(RelationTag::Asymptote);
    assert_eq!(asym.len(), 4);
    assert_eq!(asym[0].lhs, vec![-1, 4, 3, 2, 4, 3, 2, 1]);
    assert_eq!(asym[0].rhs, vec![4, 3, 2, 4, 3, 2]);
    assert_eq!(asym[1].lhs, vec![-2, 4, 3, 2, 1, -2, 4, 3, 2, 1]);
    assert_eq!(asym[1].rhs, vec![4, 3, 2, 1, -2, 4, 3, 2, 1, -2]);
    assert_eq!(asym[2].lhs, vec![-3, 4, 3, 2, 1, -3, 4, 3, 2, 1]);
    assert_eq!(asym[2].rhs, vec![4, 3, 2, 1, -3, 4, 3, 2, 1, -3]);
    assert_eq!(asym[3].lhs, vec![3, 2, 1, 3, 2, 1]);
    assert_eq!(asym[3].rhs, vec![4, 3, 2, 1, 3, 2, 1, -4]);

    let proj = p.relations_with_tag(RelationTag::Projective);
    assert_eq!(proj.len(), 1);
    assert_eq!(proj[0].lhs, vec![4, 3, 2, 1, 2, 1, 4, 3, 3, 1, 4, 2]);
    assert!(proj[0].rhs.is_empty());

    assert_eq!(p.relations.len(), 13);
    p.validate().unwrap();
}

/// The classical way to write the first and last cubic-curve asymptote
/// relations moves one generator across the equality sign:
/// `t4 t3 t2 t4 t3 t2 t1 = t1 t4 t3 t2 t4 t3 t2` and
/// `t3 t2 t1 t3 t2 t1 t4 = t4 t3 t2 t1 t3 t2 t1`. Both must define the same
/// relator as the emitted power-swap form, up to cyclic rotation.
#[test]
fn cubic_curve_asymptotes_match_the_classical_rearrangement() {
    let params = Params::new(2, 3).unwrap();
    let p = presentation::present(params, Variant::Projective).unwrap();
    let asym = p.relations_with_tag(RelationTag::Asymptote);

    let printed_first = Relation::new(
        RelationTag::Asymptote,
        vec![4, 3, 2, 4, 3, 2, 1],
        vec![1, 4, 3, 2, 4, 3, 2],
    );
    assert!(word::cyclic_equivalent(
        &asym[0].relator(),
        &printed_first.relator()
    ));

    let printed_last = Relation::new(
        RelationTag::Asymptote,
        vec![3, 2, 1, 3, 2, 1, 4],
        vec![4, 3, 2, 1, 3, 2, 1],
    );
    assert!(word::cyclic_equivalent(
        &asym[3].relator(),
        &printed_last.relator()
    ));
}

#[test]
fn cubic_curve_text_output_is_stable() {
    let params = Params::new(2, 3).unwrap();
    let p = presentation::present(params, Variant::Projective).unwrap();
    let text = p.to_text();
    assert!(text.starts_with("presentation (n=2, d=3, projective)\n"));
    assert!(text.contains("generators: t1=(1,1) t2=(1,2) t3=(2,1) t4=(2,2)\n"));
    assert!(text.contains("relations (13):\n"));
    assert!(text.contains("  commutation: t2 t3 = t3 t2\n"));
    assert!(text.contains("  braid: t1 t2 t1 = t2 t1 t2\n"));
    assert!(text.contains("  triangle: t4 t2 t1 t4 = t2 t1 t4 t2\n"));
    assert!(text.contains("  triangle: t4 t3 t1 t4 = t3 t1 t4 t3\n"));
    assert!(text.contains("  projective: t4 t3 t2 t1 t2 t1 t4 t3^2 t1 t4 t2 = 1\n"));
}

#[test]
fn cubic_surface_commutations_braids_and_triples() {
    let params = Params::new(3, 3).unwrap();
    let p = presentation::present(params, Variant::Projective).unwrap();
    assert_eq!(p.gen_count(), 8);

    let comm = pairs(&p, RelationTag::Commutation);
    assert_eq!(
        comm,
        vec![
            (2, 3),
            (2, 5),
            (2, 7),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (4, 7),
            (6, 7),
        ]
    );

    // The classical account prints only the braid row t1 tj t1 = tj t1 tj
    // for j = 2..8 and leaves the rest implicit; the full edge set has 19.
    let braid = pairs(&p, RelationTag::Braid);
    assert_eq!(braid.len(), 19);
    for j in 2..=8 {
        assert!(braid.contains(&(1, j)), "missing braid pair (1, {j})");
    }

    let tri: Vec<Vec<i32>> = p
        .relations_with_tag(RelationTag::Triangle)
        .iter()
        .map(|r| {
            let mut v = r.lhs[..3].to_vec();
            v.sort();
            v
        })
        .collect();
    let expected: Vec<Vec<i32>> = [
        [1, 2, 4],
        [1, 2, 6],
        [1, 2, 8],
        [1, 3, 4],
        [1, 3, 7],
        [1, 3, 8],
        [1, 4, 8],
        [1, 5, 6],
        [1, 5, 7],
        [1, 5, 8],
        [1, 6, 8],
        [1, 7, 8],
        [2, 4, 8],
        [2, 6, 8],
        [3, 4, 8],
        [3, 7, 8],
        [5, 6, 8],
        [5, 7, 8],
    ]
    .iter()
    .map(|t| t.to_vec())
    .collect();
    assert_eq!(tri, expected);
}

/// The cubic-surface asymptote relations are classically written as
/// `t_i (t_i⁻¹ δ0)² = (t_i⁻¹ δ0)² t_i`; that word commutation has the same
/// normal closure as the emitted power swap (its relator is the inverse).
#[test]
fn cubic_surface_asymptotes_match_the_commutation_form() {
    let params = Params::new(3, 3).unwrap();
    let p = presentation::present(params, Variant::Projective).unwrap();
    let d0 = delta(params, 0).unwrap();
    assert_eq!(d0, vec![8, 7, 6, 5, 4, 3, 2, 1]);

    let asym = p.relations_with_tag(RelationTag::Asymptote);
    assert_eq!(asym.len(), 8);
    for (k, rel) in asym.iter().enumerate() {
        let g = (k + 1) as i32;
        let mut block = vec![-g];
        block.extend_from_slice(&d0);
        let square = word::concat(&block, &block);
        let printed_lhs = word::concat(&[g], &square);
        let printed_rhs = word::concat(&square, &[g]);
        let printed = word::relator(&printed_lhs, &printed_rhs);
        let mine = rel.relator();
        assert!(
            word::cyclic_equivalent(&mine, &printed)
                || word::cyclic_equivalent(&word::invert(&mine), &printed),
            "asymptote for t{g} is not the printed commutation form"
        );
    }
}

#[test]
fn cubic_surface_projective_word_is_the_delta_product() {
    let params = Params::new(3, 3).unwrap();
    let p = presentation::present(params, Variant::Projective).unwrap();
    let proj = p.relations_with_tag(RelationTag::Projective);
    assert_eq!(proj.len(), 1);
    let expected: Vec<i32> = vec![
        8, 7, 6, 5, 4, 3, 2, 1, // δ0
        4, 3, 2, 1, 8, 7, 6, 5, // δ1
        6, 5, 2, 1, 8, 7, 4, 3, // δ2
        7, 5, 3, 1, 8, 6, 4, 2, // δ3
    ];
    assert_eq!(proj[0].lhs, expected);
    assert!(proj[0].rhs.is_empty());

    let mut product = Vec::new();
    for kappa in 0..=3 {
        product.extend(delta(params, kappa).unwrap());
    }
    assert_eq!(proj[0].lhs, product);
}

#[test]
fn line_case_deltas_and_path_shape() {
    let params = Params::new(1, 4).unwrap();
    assert_eq!(delta(params, 0).unwrap(), vec![3, 2, 1]);
    assert_eq!(delta(params, 1).unwrap(), vec![1, 2, 3]);

    let p = presentation::present(params, Variant::Affine).unwrap();
    assert_eq!(pairs(&p, RelationTag::Braid), vec![(1, 2), (2, 3)]);
    assert_eq!(pairs(&p, RelationTag::Commutation), vec![(1, 3)]);
    assert!(p.relations_with_tag(RelationTag::Triangle).is_empty());
}

/// For every degree the two plane-curve presentations — the lattice one for
/// `n = 1` and the classical one with the sphere relation — must list the
/// same commutation and braid relations verbatim.
#[test]
fn plane_curve_presentations_coincide_through_degree_six() {
    for d in 2..=6 {
        let params = Params::new(1, d).unwrap();
        let lattice = presentation::present(params, Variant::Affine).unwrap();
        let classical = presentation::present_zariski(d).unwrap();

        let lc = lattice.relations_with_tag(RelationTag::Commutation);
        let cc = classical.relations_with_tag(RelationTag::Commutation);
        assert_eq!(lc, cc, "commutation mismatch at d = {d}");
        let lb = lattice.relations_with_tag(RelationTag::Braid);
        let cb = classical.relations_with_tag(RelationTag::Braid);
        assert_eq!(lb, cb, "braid mismatch at d = {d}");

        assert!(lattice.relations_with_tag(RelationTag::Triangle).is_empty());
        assert_eq!(classical.relations_with_tag(RelationTag::Zariski).len(), 1);
    }
}

#[test]
fn single_edge_triples_for_smoothing() {
    let g = discgroup::Graph::build(Params::new(1, 5).unwrap()).unwrap();
    assert_eq!(g.find_single_edge_triple(), Some((1, 2, 4)));

    let g = discgroup::Graph::build(Params::new(2, 4).unwrap()).unwrap();
    assert_eq!(g.find_single_edge_triple(), Some((1, 2, 7)));

    // Whatever triple is chosen must span exactly one edge.
    for (n, d) in [(1, 5), (2, 4), (3, 3), (2, 5)] {
        let params = Params::new(n, d).unwrap();
        let g = discgroup::Graph::build(params).unwrap();
        let (a, b, c) = g.find_single_edge_triple().unwrap();
        let pts = params.points();
        let edge_count = [(a, b), (a, c), (b, c)]
            .iter()
            .filter(|(x, y)| {
                discgroup::lattice::pairing(
                    params,
                    &pts[*x as usize - 1],
                    &pts[*y as usize - 1],
                )
                .unwrap()
                    != 0
            })
            .count();
        assert_eq!(edge_count, 1, "triple for (n, d) = ({n}, {d})");
    }
}

#[test]
fn cusp_quotient_of_the_quintic_line_is_cyclic_of_order_eight() {
    let s = smooth(Params::new(1, 5).unwrap(), SmoothingKind::Cusp).unwrap();
    assert_eq!(s.presentation.gen_count(), 1);
    assert_eq!(s.presentation.relators(), vec![vec![1; 8]]);
}

#[test]
fn node_quotient_of_the_cubic_curve_is_the_braid_group_modulo_center_squared() {
    let s = smooth(Params::new(2, 3).unwrap(), SmoothingKind::Node).unwrap();
    let p = &s.presentation;
    assert_eq!(p.gen_count(), 2);
    assert_eq!(p.relations.len(), 2);
    assert_eq!(p.relations[0].lhs, vec![1, 2, 1]);
    assert_eq!(p.relations[0].rhs, vec![2, 1, 2]);
    assert_eq!(p.relations[1].lhs, [2, 1].repeat(6));
    assert!(p.relations[1].rhs.is_empty());

    let names: Vec<&str> = s.certificates.iter().map(|c| c.name.as_str()).collect();
    assert!(names.contains(&"final_sl2z"));
    assert!(names.contains(&"abelianization_stable"));
}

#[test]
fn node_quotient_of_the_quartic_line_carries_a_mod_sign_certificate() {
    let s = smooth(Params::new(1, 4).unwrap(), SmoothingKind::Node).unwrap();
    assert_eq!(s.presentation.gen_count(), 2);
    let names: Vec<&str> = s.certificates.iter().map(|c| c.name.as_str()).collect();
    assert!(names.contains(&"matrix_mod_sign"));
    assert!(names.contains(&"final_permutation"));
}

/// Both labelling conventions and all asymptote forms must produce valid
/// presentations with the same relation counts on the cubic curve.
#[test]
fn alternative_options_agree_on_relation_counts() {
    let params = Params::new(2, 3).unwrap();
    let base = presentation::present(params, Variant::Projective).unwrap();

    for labeling in [
        presentation::Labeling::ReverseEnumeration,
        presentation::Labeling::EnumerationOrder,
    ] {
        for form in [AsymptoteForm::PowerSwap, AsymptoteForm::Centralizer] {
            let opts = PresentOptions {
                labeling,
                asymptote_form: form,
                all_triangle_orderings: false,
            };
            let p = presentation::present_with(params, Variant::Projective, &opts).unwrap();
            p.validate().unwrap();
            assert_eq!(p.relations.len(), base.relations.len());
        }
    }

    let both = PresentOptions {
        asymptote_form: AsymptoteForm::Both,
        ..Default::default()
    };
    let p = presentation::present_with(params, Variant::Projective, &both).unwrap();
    assert_eq!(
        p.relations_with_tag(RelationTag::Asymptote).len(),
        2 * base.relations_with_tag(RelationTag::Asymptote).len()
    );

    let six = PresentOptions {
        all_triangle_orderings: true,
        ..Default::default()
    };
    let p = presentation::present_with(params, Variant::Projective, &six).unwrap();
    assert_eq!(p.relations_with_tag(RelationTag::Triangle).len(), 12);
}
