//! Construction of the fundamental-group presentations.
//!
//! All presentations share one generator scheme: one generator `t_k` per
//! lattice point of `{1, …, d-1}^n`. The relation families are read off the
//! intersection graph `Γ_{n,d}`:
//!
//! 1. **commutation** `t_i t_j = t_j t_i` for every non-edge `{i, j}`,
//! 2. **braid** `t_i t_j t_i = t_j t_i t_j` for every edge `{i, j}`,
//! 3. **triangle** `t_i t_j t_k t_i = t_j t_k t_i t_j` for every triangle
//!    `{i, j, k}` of the graph, with the vertices taken in `≺_0` order,
//! 4. **asymptote** `(t_i⁻¹ δ₀)^{d-1} = (δ₀ t_i⁻¹)^{d-1}` for every
//!    generator, where `δ₀` is the product of all generators in the `≺_0`
//!    enumeration order,
//! 5. **projective** `δ₀ δ₁ ⋯ δ_n = 1`, where `δ_κ` is the product in the
//!    `≺_κ` order.
//!
//! The affine variant consists of families 1–4; the projective variant adds
//! family 5. The classical braid-monodromy presentation for plane curves
//! (`present_zariski`) is included for cross-checking: its commutation and
//! braid relations coincide verbatim with families 1–2 at `n = 1`.

use serde::{Deserialize, Serialize};

use crate::lattice::{enumerate, Graph, MultiIndex, Params};
use crate::word::{self, Word};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Affine,
    Projective,
    Zariski,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Variant::Affine => "affine",
            Variant::Projective => "projective",
            Variant::Zariski => "zariski",
        };
        f.write_str(s)
    }
}

/// Which family a relation belongs to. `Identification` marks relations
/// introduced by generator identification (quotient constructions);
/// `Zariski` marks the sphere relation of the classical plane-curve
/// presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationTag {
    Commutation,
    Braid,
    Triangle,
    Asymptote,
    Projective,
    Zariski,
    Identification,
}

impl std::fmt::Display for RelationTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RelationTag::Commutation => "commutation",
            RelationTag::Braid => "braid",
            RelationTag::Triangle => "triangle",
            RelationTag::Asymptote => "asymptote",
            RelationTag::Projective => "projective",
            RelationTag::Zariski => "zariski",
            RelationTag::Identification => "identification",
        };
        f.write_str(s)
    }
}

/// A relation `lhs = rhs`, both sides freely reduced words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub tag: RelationTag,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(tag: RelationTag, lhs: Word, rhs: Word) -> Relation {
        Relation {
            tag,
            lhs: word::reduce(&lhs),
            rhs: word::reduce(&rhs),
        }
    }

    /// The relator `lhs · rhs⁻¹`, freely reduced.
    pub fn relator(&self) -> Word {
        word::relator(&self.lhs, &self.rhs)
    }

    /// True when the relation is freely trivial (empty relator).
    pub fn is_trivial(&self) -> bool {
        self.relator().is_empty()
    }
}

/// Generator labelling scheme.
///
/// * `ReverseEnumeration` (default): `t_k` is the k-th lattice point in
///   ascending natural lexicographic order, i.e. the enumeration `≺_0`
///   read backwards, so that `δ_0 = t_V ⋯ t_2 t_1`.
/// * `EnumerationOrder`: `t_k` is the k-th point of the `≺_0` enumeration
///   itself, so that `δ_0 = t_1 t_2 ⋯ t_V`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Labeling {
    #[default]
    ReverseEnumeration,
    EnumerationOrder,
}

/// Shape of the asymptote relations.
///
/// * `PowerSwap` (default): `(t_i⁻¹ δ₀)^{d-1} = (δ₀ t_i⁻¹)^{d-1}`.
/// * `Centralizer`: `t_i (t_i δ₀)^{d-1} = (t_i δ₀)^{d-1} t_i`.
/// * `Both`: both forms, PowerSwap first, per generator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AsymptoteForm {
    #[default]
    PowerSwap,
    Centralizer,
    Both,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PresentOptions {
    pub labeling: Labeling,
    pub asymptote_form: AsymptoteForm,
    /// Emit all six vertex orderings of each triangle relation instead of
    /// the single ≺_0-ordered one.
    pub all_triangle_orderings: bool,
}

/// A finite presentation with labelled generators. `generators[k-1]` is the
/// lattice point of generator `t_k`; after quotient constructions the list
/// shrinks but stays in ascending label order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub params: Params,
    pub variant: Variant,
    pub generators: Vec<MultiIndex>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn gen_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> Vec<Word> {
        self.relations.iter().map(|r| r.relator()).collect()
    }

    pub fn relations_with_tag(&self, tag: RelationTag) -> Vec<&Relation> {
        self.relations.iter().filter(|r| r.tag == tag).collect()
    }

    /// Checks structural soundness: every letter names an existing generator.
    pub fn validate(&self) -> Result<()> {
        let g = self.gen_count() as i32;
        for (idx, rel) in self.relations.iter().enumerate() {
            for &x in rel.lhs.iter().chain(&rel.rhs) {
                if x == 0 || x.abs() > g {
                    return Err(Error::Internal(format!(
                        "relation {idx} uses letter {x} outside generators 1..={g}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Plain-text rendering, one relation per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "presentation (n={}, d={}, {})\n",
            self.params.n, self.params.d, self.variant
        ));
        out.push_str("generators:");
        for (pos, i) in self.generators.iter().enumerate() {
            let comps: Vec<String> = i.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!(" t{}=({})", pos + 1, comps.join(",")));
        }
        out.push('\n');
        out.push_str(&format!("relations ({}):\n", self.relations.len()));
        for rel in &self.relations {
            out.push_str(&format!(
                "  {}: {} = {}\n",
                rel.tag,
                word::format_word(&rel.lhs),
                word::format_word(&rel.rhs)
            ));
        }
        out
    }

    /// JSON rendering (pretty-printed, deterministic field order).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serializes")
    }

    /// A GAP-pasteable snippet defining the group. Freely trivial relators
    /// (possible for `d = 2`, where the asymptote words collapse) are
    /// skipped, since an empty relator has no GAP spelling.
    pub fn to_cas(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# fundamental-group presentation, n={}, d={}, {} variant\n",
            self.params.n, self.params.d, self.variant
        ));
        out.push_str(&format!("F := FreeGroup({});;\n", self.gen_count()));
        out.push_str("t := GeneratorsOfGroup(F);;\n");
        out.push_str("rels := [\n");
        let mut lines = Vec::new();
        for rel in &self.relations {
            let r = rel.relator();
            if r.is_empty() {
                continue;
            }
            let factors: Vec<String> = r
                .iter()
                .map(|&x| {
                    if x > 0 {
                        format!("t[{x}]")
                    } else {
                        format!("t[{}]^-1", -x)
                    }
                })
                .collect();
            lines.push(format!("  {}", factors.join("*")));
        }
        out.push_str(&lines.join(",\n"));
        if !lines.is_empty() {
            out.push('\n');
        }
        out.push_str("];;\nG := F / rels;;\n");
        out
    }
}

/// Labels (1-based) for all lattice points, indexed by natural position.
fn label_map(params: Params, labeling: Labeling) -> Result<Vec<u32>> {
    let v = params.vertex_count();
    match labeling {
        Labeling::ReverseEnumeration => Ok((1..=v as u32).collect()),
        Labeling::EnumerationOrder => {
            let order = enumerate(params, 0)?;
            let mut map = vec![0u32; v];
            for (k, i) in order.iter().enumerate() {
                map[params.position(i)] = k as u32 + 1;
            }
            Ok(map)
        }
    }
}

/// The word `δ_κ`: the product of all generators in `≺_κ` order (the
/// enumeration's first point contributes the leftmost factor).
pub fn delta(params: Params, kappa: u32) -> Result<Word> {
    delta_with(params, kappa, Labeling::default())
}

pub fn delta_with(params: Params, kappa: u32, labeling: Labeling) -> Result<Word> {
    let map = label_map(params, labeling)?;
    let order = enumerate(params, kappa)?;
    Ok(order
        .iter()
        .map(|i| map[params.position(i)] as i32)
        .collect())
}

/// The factor of `δ_0` associated with a fixed prefix `i'` of length `n-1`:
/// the product `t_{(i', d-1)} ⋯ t_{(i', 1)}` (last coordinate descending).
/// Concatenating these over all `i'` in the `≺_0` order of the
/// `(n-1)`-dimensional lattice yields `δ_0` itself.
pub fn bundle_expansion(params: Params, i_prime: &[u32]) -> Result<Word> {
    if i_prime.len() != params.n as usize - 1 {
        return Err(Error::Invalid(format!(
            "prefix must have n-1 = {} components",
            params.n - 1
        )));
    }
    if i_prime.iter().any(|&c| c < 1 || c > params.d - 1) {
        return Err(Error::Invalid(format!(
            "prefix components must lie in 1..={}",
            params.d - 1
        )));
    }
    let map = label_map(params, Labeling::default())?;
    let mut out = Vec::with_capacity(params.d as usize - 1);
    let mut full = i_prime.to_vec();
    full.push(0);
    for c in (1..=params.d - 1).rev() {
        *full.last_mut().unwrap() = c;
        out.push(map[params.position(&full)] as i32);
    }
    Ok(out)
}

/// Relabels a word along a permutation of the lattice components: the letter
/// for the point `i` becomes the letter for `i ∘ perm` (component `ν` of the
/// new point is component `perm[ν]` of the old one, 1-based). Signs are
/// preserved. Uses the default labelling.
pub fn component_relabel(params: Params, w: &[i32], perm: &[u32]) -> Result<Word> {
    let n = params.n as usize;
    if perm.len() != n {
        return Err(Error::Invalid(format!("permutation must have {n} entries")));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p < 1 || p as usize > n || seen[p as usize - 1] {
            return Err(Error::Invalid(
                "expected a permutation of 1..=n".to_string(),
            ));
        }
        seen[p as usize - 1] = true;
    }
    let points = params.points();
    let v = points.len() as i32;
    let mut out = Vec::with_capacity(w.len());
    for &x in w {
        if x == 0 || x.abs() > v {
            return Err(Error::Invalid(format!("letter {x} outside 1..={v}")));
        }
        let i = &points[x.unsigned_abs() as usize - 1];
        let permuted: MultiIndex = perm.iter().map(|&p| i[p as usize - 1]).collect();
        let label = params.position(&permuted) as i32 + 1;
        out.push(if x > 0 { label } else { -label });
    }
    Ok(out)
}

/// Builds the affine or projective presentation with default options.
pub fn present(params: Params, variant: Variant) -> Result<Presentation> {
    present_with(params, variant, &PresentOptions::default())
}

/// Builds the affine or projective presentation.
///
/// Relations appear in family order (commutation, braid, triangle,
/// asymptote, then the single projective relation), each family ordered by
/// ascending generator labels. Note the asymptote relations for `d = 2` are
/// freely trivial and are kept to preserve the per-family count `(d-1)^n`.
pub fn present_with(
    params: Params,
    variant: Variant,
    opts: &PresentOptions,
) -> Result<Presentation> {
    if variant == Variant::Zariski {
        return Err(Error::Invalid(
            "use present_zariski for the plane-curve braid-monodromy presentation".into(),
        ));
    }
    let graph = Graph::build(params)?;
    let map = label_map(params, opts.labeling)?;
    let v = graph.vertex_count();

    // generators in label order
    let mut generators: Vec<MultiIndex> = vec![Vec::new(); v];
    for (pos, i) in graph.vertices.iter().enumerate() {
        generators[map[pos] as usize - 1] = i.clone();
    }

    let relabel_pair = |(a, b): (u32, u32)| -> (u32, u32) {
        let (x, y) = (map[a as usize - 1], map[b as usize - 1]);
        (x.min(y), x.max(y))
    };
    let mut edges: Vec<(u32, u32)> = graph.edges.iter().copied().map(relabel_pair).collect();
    let mut non_edges: Vec<(u32, u32)> =
        graph.non_edges.iter().copied().map(relabel_pair).collect();
    // Triangle vertices are emitted in ≺_0 order. Natural-position labels
    // ascend in natural lexicographic order and ≺_0 is its exact reversal,
    // so descending natural position is the ≺_0 order of the three points.
    let mut triangles: Vec<((u32, u32, u32), [i32; 3])> = graph
        .triangles
        .iter()
        .map(|&(a, b, c)| {
            let emit = [c, b, a].map(|o| map[o as usize - 1] as i32);
            let mut t = [
                map[a as usize - 1],
                map[b as usize - 1],
                map[c as usize - 1],
            ];
            t.sort_unstable();
            ((t[0], t[1], t[2]), emit)
        })
        .collect();
    edges.sort_unstable();
    non_edges.sort_unstable();
    triangles.sort_unstable_by_key(|&(key, _)| key);

    let mut relations = Vec::new();
    for (a, b) in non_edges {
        let (a, b) = (a as i32, b as i32);
        relations.push(Relation::new(
            RelationTag::Commutation,
            vec![a, b],
            vec![b, a],
        ));
    }
    for (a, b) in edges {
        let (a, b) = (a as i32, b as i32);
        relations.push(Relation::new(
            RelationTag::Braid,
            vec![a, b, a],
            vec![b, a, b],
        ));
    }
    for (_, [x, y, z]) in triangles {
        let orderings: &[[i32; 3]] = if opts.all_triangle_orderings {
            &[
                [x, y, z],
                [x, z, y],
                [y, x, z],
                [y, z, x],
                [z, x, y],
                [z, y, x],
            ]
        } else {
            &[[x, y, z]]
        };
        for &[x, y, z] in orderings {
            relations.push(Relation::new(
                RelationTag::Triangle,
                vec![x, y, z, x],
                vec![y, z, x, y],
            ));
        }
    }

    let delta0 = delta_with(params, 0, opts.labeling)?;
    let reps = (params.d - 1) as usize;
    for g in 1..=v as i32 {
        if matches!(opts.asymptote_form, AsymptoteForm::PowerSwap | AsymptoteForm::Both) {
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for _ in 0..reps {
                lhs.push(-g);
                lhs.extend_from_slice(&delta0);
                rhs.extend_from_slice(&delta0);
                rhs.push(-g);
            }
            relations.push(Relation::new(RelationTag::Asymptote, lhs, rhs));
        }
        if matches!(opts.asymptote_form, AsymptoteForm::Centralizer | AsymptoteForm::Both) {
            let mut pow = Vec::new();
            for _ in 0..reps {
                pow.push(g);
                pow.extend_from_slice(&delta0);
            }
            let mut lhs = vec![g];
            lhs.extend_from_slice(&pow);
            let mut rhs = pow;
            rhs.push(g);
            relations.push(Relation::new(RelationTag::Asymptote, lhs, rhs));
        }
    }

    if variant == Variant::Projective {
        let mut lhs = Vec::new();
        for kappa in 0..=params.n {
            lhs.extend_from_slice(&delta_with(params, kappa, opts.labeling)?);
        }
        relations.push(Relation::new(RelationTag::Projective, lhs, Vec::new()));
    }

    let p = Presentation {
        params,
        variant,
        generators,
        relations,
    };
    p.validate()?;
    Ok(p)
}

/// The classical braid-monodromy presentation of the fundamental group for
/// plane curves (`n = 1`): generators `σ_1, …, σ_{d-1}`, far-apart generators
/// commute, neighbours braid, plus the sphere relation
/// `σ_1 ⋯ σ_{d-2} σ_{d-1}² σ_{d-2} ⋯ σ_1 = 1` (which degenerates to
/// `σ_1² = 1` when `d = 2`).
pub fn present_zariski(d: u32) -> Result<Presentation> {
    let params = Params::new(1, d)?;
    let v = (d - 1) as usize;
    let generators: Vec<MultiIndex> = (1..=v as u32).map(|k| vec![k]).collect();
    let mut relations = Vec::new();
    for a in 1..=v as i32 {
        for b in (a + 2)..=v as i32 {
            relations.push(Relation::new(
                RelationTag::Commutation,
                vec![a, b],
                vec![b, a],
            ));
        }
    }
    for a in 1..v as i32 {
        let b = a + 1;
        relations.push(Relation::new(
            RelationTag::Braid,
            vec![a, b, a],
            vec![b, a, b],
        ));
    }
    let mut sphere = Vec::new();
    for k in 1..v as i32 {
        sphere.push(k);
    }
    sphere.push(v as i32);
    sphere.push(v as i32);
    for k in (1..v as i32).rev() {
        sphere.push(k);
    }
    relations.push(Relation::new(RelationTag::Zariski, sphere, Vec::new()));
    let p = Presentation {
        params,
        variant: Variant::Zariski,
        generators,
        relations,
    };
    p.validate()?;
    Ok(p)
}
