//! Generator identification and Tietze simplification.
//!
//! [`identify_generators`] imposes `t_i = t_j` identifications and eliminates
//! the second generator of each pair. [`tietze_simplify`] cleans up a
//! presentation using three length-reducing moves, applied deterministically
//! until none fires:
//!
//! * normalization — free/cyclic reduction, removal of freely trivial
//!   relations, deduplication of relators equal up to rotation and inversion;
//! * substring shortening — if more than half of a relator `S` appears as a
//!   contiguous cyclic subword of another relator `R`, the occurrence in `R`
//!   is replaced by the complementary (shorter) side of `S`;
//! * single-occurrence elimination — a relator containing a generator exactly
//!   once expresses that generator as a word in the others, which is then
//!   substituted everywhere and the generator dropped.
//!
//! Every move strictly decreases `(generator count, total relator length)`
//! lexicographically, so the loop terminates. No completion-style rewriting
//! is attempted: relators that are consequences of the others but not
//! discoverable by these local moves are left in place.

use std::collections::BTreeSet;

use crate::presentation::{Presentation, Relation};
use crate::word::{self, Word};
use crate::{Error, Result};

/// Imposes `t_a = t_b` for every pair `(a, b)`, eliminating `t_b` (pairs are
/// chased through earlier identifications, so chains like `(1,2), (2,3)` work
/// as expected). Resulting relations are freely reduced; freely trivial ones
/// are dropped and duplicates up to rotation/inversion removed. Surviving
/// generators are relabelled consecutively in ascending old-label order.
pub fn identify_generators(p: &Presentation, pairs: &[(u32, u32)]) -> Result<Presentation> {
    p.validate()?;
    let gens = p.gen_count() as u32;
    let mut rep: Vec<u32> = (0..=gens).collect();
    fn find(rep: &mut [u32], x: u32) -> u32 {
        let mut root = x;
        while rep[root as usize] != root {
            root = rep[root as usize];
        }
        let mut cur = x;
        while rep[cur as usize] != cur {
            let next = rep[cur as usize];
            rep[cur as usize] = root;
            cur = next;
        }
        root
    }
    for &(a, b) in pairs {
        if a == 0 || b == 0 || a > gens || b > gens {
            return Err(Error::Invalid(format!(
                "identification ({a},{b}) outside generators 1..={gens}"
            )));
        }
        if a == b {
            return Err(Error::Invalid(format!(
                "identification ({a},{b}) is degenerate"
            )));
        }
        let (ra, rb) = (find(&mut rep, a), find(&mut rep, b));
        if ra != rb {
            let keep = ra.min(rb);
            rep[ra.max(rb) as usize] = keep;
        }
    }

    // survivors in ascending label order, compact relabelling
    let mut new_label = vec![0u32; gens as usize + 1];
    let mut generators = Vec::new();
    for g in 1..=gens {
        if find(&mut rep, g) == g {
            generators.push(p.generators[g as usize - 1].clone());
            new_label[g as usize] = generators.len() as u32;
        }
    }
    let map_word = |w: &[i32], rep: &mut Vec<u32>| -> Word {
        let mapped: Word = w
            .iter()
            .map(|&x| {
                let lbl = new_label[find(rep, x.unsigned_abs()) as usize] as i32;
                if x > 0 {
                    lbl
                } else {
                    -lbl
                }
            })
            .collect();
        word::reduce(&mapped)
    };

    let mut relations = Vec::new();
    for r in &p.relations {
        let rel = Relation {
            tag: r.tag,
            lhs: map_word(&r.lhs, &mut rep),
            rhs: map_word(&r.rhs, &mut rep),
        };
        relations.push(rel);
    }
    dedup_relations(&mut relations);

    Ok(Presentation {
        params: p.params,
        variant: p.variant,
        generators,
        relations,
    })
}

/// Drops freely trivial relations and deduplicates relators equal up to
/// cyclic rotation and inversion, keeping the first occurrence.
fn dedup_relations(relations: &mut Vec<Relation>) {
    let mut seen = BTreeSet::new();
    relations.retain(|r| {
        let relator = r.relator();
        if relator.is_empty() {
            return false;
        }
        seen.insert(word::canonical_cyclic(&relator))
    });
}

/// One shortening opportunity: relation `target` can be rewritten using
/// relation `source`.
struct Shortening {
    target: usize,
    replacement: Word,
}

/// Looks for the first pair `(target, source)` where more than half of the
/// source relator matches a cyclic subword of the target relator (or of its
/// inverse source), and returns the shortened target relator.
fn find_shortening(relators: &[Word]) -> Option<Shortening> {
    for (ti, r) in relators.iter().enumerate() {
        if r.is_empty() {
            continue;
        }
        for (si, s) in relators.iter().enumerate() {
            if ti == si || s.is_empty() || s.len() > 2 * r.len() {
                continue;
            }
            // best match for this (target, source) pair
            let mut best: Option<(usize, usize, usize, bool)> = None; // (len, r_rot, s_rot, use_inverse)
            let s_inv = word::invert(s);
            for (use_inv, src) in [(false, s), (true, &s_inv)] {
                for r_rot in 0..r.len() {
                    for s_rot in 0..src.len() {
                        let max_l = r.len().min(src.len());
                        let mut l = 0;
                        while l < max_l && r[(r_rot + l) % r.len()] == src[(s_rot + l) % src.len()]
                        {
                            l += 1;
                        }
                        if best.is_none_or(|(bl, ..)| l > bl) {
                            best = Some((l, r_rot, s_rot, use_inv));
                        }
                    }
                }
            }
            let (l, r_rot, s_rot, use_inv) = best?;
            if 2 * l <= s.len() {
                continue;
            }
            // rotate target and source so the match is a prefix
            let src = if use_inv { word::invert(s) } else { s.clone() };
            let rot = |w: &[i32], k: usize| -> Word {
                let mut out = Vec::with_capacity(w.len());
                out.extend_from_slice(&w[k..]);
                out.extend_from_slice(&w[..k]);
                out
            };
            let r_rotated = rot(r, r_rot);
            let s_rotated = rot(&src, s_rot);
            // r = M · r_rest, s = M · s_rest (cyclically), M ≡ s_rest⁻¹
            let r_rest = &r_rotated[l..];
            let s_rest = &s_rotated[l..];
            let mut new_rel = word::invert(s_rest);
            new_rel.extend_from_slice(r_rest);
            let new_rel = word::cyclically_reduce(&new_rel);
            debug_assert!(new_rel.len() < r.len());
            return Some(Shortening {
                target: ti,
                replacement: new_rel,
            });
        }
    }
    None
}

/// Looks for the best single-occurrence elimination: a relator containing
/// some generator exactly once. Returns `(relation index, generator,
/// replacement word)`, preferring short relators, then early relations, then
/// large generator labels (so low labels survive).
fn find_elimination(relators: &[Word]) -> Option<(usize, u32, Word)> {
    let mut best: Option<(usize, usize, u32)> = None; // (len, index, gen) — gen stored negated-order via max
    for (idx, r) in relators.iter().enumerate() {
        if r.is_empty() {
            continue;
        }
        let mut counts = std::collections::BTreeMap::new();
        for &x in r {
            *counts.entry(x.unsigned_abs()).or_insert(0usize) += 1;
        }
        for (&g, &c) in &counts {
            if c != 1 {
                continue;
            }
            let better = match best {
                None => true,
                Some((bl, bi, bg)) => {
                    (r.len(), idx, std::cmp::Reverse(g)) < (bl, bi, std::cmp::Reverse(bg))
                }
            };
            if better {
                best = Some((r.len(), idx, g));
            }
        }
    }
    let (_, idx, g) = best?;
    let r = &relators[idx];
    let pos = r.iter().position(|&x| x.unsigned_abs() == g).unwrap();
    let mut rotated: Word = Vec::with_capacity(r.len());
    rotated.extend_from_slice(&r[pos..]);
    rotated.extend_from_slice(&r[..pos]);
    let tail = &rotated[1..];
    let replacement = if rotated[0] > 0 {
        word::invert(tail)
    } else {
        tail.to_vec()
    };
    Some((idx, g, replacement))
}

/// Removes generator `g` from the presentation state: substitutes
/// `replacement` for it in every relation and shifts higher labels down.
fn eliminate(
    generators: &mut Vec<crate::lattice::MultiIndex>,
    relations: &mut [Relation],
    g: u32,
    replacement: &[i32],
) {
    for rel in relations.iter_mut() {
        rel.lhs = word::substitute(&rel.lhs, g, replacement);
        rel.rhs = word::substitute(&rel.rhs, g, replacement);
        let shift = |w: &Word| -> Word {
            w.iter()
                .map(|&x| {
                    if x.unsigned_abs() > g {
                        if x > 0 {
                            x - 1
                        } else {
                            x + 1
                        }
                    } else {
                        x
                    }
                })
                .collect()
        };
        rel.lhs = shift(&rel.lhs);
        rel.rhs = shift(&rel.rhs);
    }
    generators.remove(g as usize - 1);
}

/// Simplifies a presentation with the moves described in the module docs.
/// The result presents the same group (every move is a Tietze
/// transformation). Deterministic.
pub fn tietze_simplify(p: &Presentation) -> Result<Presentation> {
    p.validate()?;
    let mut generators = p.generators.clone();
    let mut relations = p.relations.clone();
    loop {
        dedup_relations(&mut relations);
        let relators: Vec<Word> = relations
            .iter()
            .map(|r| word::cyclically_reduce(&r.relator()))
            .collect();
        if let Some(s) = find_shortening(&relators) {
            relations[s.target] = Relation {
                tag: relations[s.target].tag,
                lhs: s.replacement,
                rhs: Vec::new(),
            };
            continue;
        }
        if let Some((idx, g, replacement)) = find_elimination(&relators) {
            relations.remove(idx);
            eliminate(&mut generators, &mut relations, g, &replacement);
            continue;
        }
        break;
    }
    let out = Presentation {
        params: p.params,
        variant: p.variant,
        generators,
        relations,
    };
    out.validate()?;
    Ok(out)
}
