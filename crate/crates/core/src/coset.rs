//! Todd–Coxeter coset enumeration.
//!
//! A deterministic relator-scanning (HLT-style, with row filling)
//! implementation: cosets are scanned in definition order, relators in
//! presentation order, and coincidences are processed through a union-find
//! keeping the smallest coset index alive. When the enumeration completes,
//! the live coset count is the index of the given subgroup — the group order
//! when the subgroup is trivial. Exceeding the coset bound is an explicit
//! outcome, not an error: it means the bound was too small (or the index is
//! infinite), and nothing more.

use crate::presentation::Presentation;
use crate::word::Word;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CosetResult {
    /// The table closed: `order` live cosets, and the compacted table
    /// (`table[c][col]` is the 1-based target of coset `c+1` under column
    /// `col`; columns alternate `t_g`, `t_g⁻¹` for `g = 1, 2, …`).
    Complete { order: u64, table: Vec<Vec<u32>> },
    /// More than `max_cosets` cosets would have been defined.
    BoundExceeded { max_cosets: usize },
}

struct Table {
    cols: usize,
    /// rows[0] is a dummy so cosets are 1-based; 0 marks an undefined entry
    rows: Vec<Vec<u32>>,
    parent: Vec<u32>,
    live: usize,
    max_cosets: usize,
}

impl Table {
    fn new(gens: usize, max_cosets: usize) -> Table {
        let cols = 2 * gens;
        let mut t = Table {
            cols,
            rows: vec![vec![0; cols]],
            parent: vec![0],
            live: 0,
            max_cosets,
        };
        t.define().expect("max_cosets must allow at least one coset");
        t
    }

    fn define(&mut self) -> Result<u32> {
        if self.rows.len() > self.max_cosets {
            return Err(Error::TooLarge("coset bound exceeded".into()));
        }
        let c = self.rows.len() as u32;
        self.rows.push(vec![0; self.cols]);
        self.parent.push(c);
        self.live += 1;
        Ok(c)
    }

    fn find(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != cur {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn col(letter: i32) -> usize {
        if letter > 0 {
            2 * (letter as usize - 1)
        } else {
            2 * ((-letter) as usize - 1) + 1
        }
    }

    fn set(&mut self, a: u32, col: usize, b: u32) {
        debug_assert_eq!(self.rows[a as usize][col], 0);
        debug_assert_eq!(self.rows[b as usize][col ^ 1], 0);
        self.rows[a as usize][col] = b;
        self.rows[b as usize][col ^ 1] = a;
    }

    /// Merges the classes of `a` and `b` and transfers table entries,
    /// queueing any induced coincidences (Holt's coincidence procedure).
    fn coincide(&mut self, a: u32, b: u32) {
        let mut queue: Vec<u32> = Vec::new();
        self.merge(a, b, &mut queue);
        let mut head = 0;
        while head < queue.len() {
            let dead = queue[head];
            head += 1;
            for c in 0..self.cols {
                let delta = self.rows[dead as usize][c];
                if delta == 0 {
                    continue;
                }
                // remove the back-reference to the dead row
                self.rows[delta as usize][c ^ 1] = 0;
                let mu = self.find(dead);
                let nu = self.find(delta);
                let mu_entry = self.rows[mu as usize][c];
                if mu_entry != 0 {
                    self.merge(nu, mu_entry, &mut queue);
                } else {
                    let nu_entry = self.rows[nu as usize][c ^ 1];
                    if nu_entry != 0 {
                        self.merge(mu, nu_entry, &mut queue);
                    } else {
                        self.rows[mu as usize][c] = nu;
                        self.rows[nu as usize][c ^ 1] = mu;
                    }
                }
            }
        }
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        let (keep, dead) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[dead as usize] = keep;
        self.live -= 1;
        queue.push(dead);
    }

    /// Scans the word `w` at coset `alpha`, defining cosets as needed so the
    /// scan closes (or produces a coincidence).
    fn scan_and_fill(&mut self, alpha: u32, w: &[i32]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        loop {
            let start = self.find(alpha);
            // forward scan
            let mut f = start;
            let mut i = 0;
            while i < w.len() {
                let next = self.rows[f as usize][Self::col(w[i])];
                if next == 0 {
                    break;
                }
                f = self.find(next);
                i += 1;
            }
            if i == w.len() {
                if f != start {
                    self.coincide(f, start);
                }
                return Ok(());
            }
            // backward scan
            let mut b = start;
            let mut j = w.len();
            while j > i {
                let next = self.rows[b as usize][Self::col(w[j - 1]) ^ 1];
                if next == 0 {
                    break;
                }
                b = self.find(next);
                j -= 1;
            }
            if j == i {
                self.coincide(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, Self::col(w[i]), b);
                return Ok(());
            }
            // gap of two or more: define the next transition and re-scan
            let fresh = self.define()?;
            self.set(f, Self::col(w[i]), fresh);
        }
    }
}

/// Enumerates cosets of the subgroup generated by `subgroup` (trivial when
/// empty) in the group given by `p`. With the trivial subgroup, a completed
/// enumeration yields the group order.
pub fn enumerate_cosets(
    p: &Presentation,
    subgroup: &[Word],
    max_cosets: usize,
) -> Result<CosetResult> {
    p.validate()?;
    if max_cosets == 0 {
        return Err(Error::Invalid("max_cosets must be positive".into()));
    }
    let gens = p.gen_count();
    if gens == 0 {
        return Ok(CosetResult::Complete {
            order: 1,
            table: vec![Vec::new()],
        });
    }
    let relators: Vec<Word> = p
        .relations
        .iter()
        .map(|r| r.relator())
        .filter(|r| !r.is_empty())
        .collect();
    for w in subgroup {
        for &x in w {
            if x == 0 || x.unsigned_abs() as usize > gens {
                return Err(Error::Invalid(format!(
                    "subgroup word uses letter {x} outside generators 1..={gens}"
                )));
            }
        }
    }

    let mut t = Table::new(gens, max_cosets);
    let run = (|| -> Result<()> {
        for w in subgroup {
            t.scan_and_fill(1, w)?;
        }
        let mut alpha = 1u32;
        while (alpha as usize) < t.rows.len() {
            if t.find(alpha) == alpha {
                for w in &relators {
                    t.scan_and_fill(alpha, w)?;
                    if t.find(alpha) != alpha {
                        break;
                    }
                }
                if t.find(alpha) == alpha {
                    for c in 0..t.cols {
                        if t.rows[alpha as usize][c] == 0 {
                            let fresh = t.define()?;
                            t.set(alpha, c, fresh);
                        }
                    }
                }
            }
            alpha += 1;
        }
        Ok(())
    })();
    match run {
        Ok(()) => {}
        Err(Error::TooLarge(_)) => return Ok(CosetResult::BoundExceeded { max_cosets }),
        Err(e) => return Err(e),
    }

    // compact: renumber live cosets in ascending order
    let total = t.rows.len();
    let mut new_index = vec![0u32; total];
    let mut live_order = Vec::new();
    for c in 1..total as u32 {
        if t.find(c) == c {
            live_order.push(c);
            new_index[c as usize] = live_order.len() as u32;
        }
    }
    let mut table = Vec::with_capacity(live_order.len());
    for &c in &live_order {
        let row: Vec<u32> = (0..t.cols)
            .map(|col| {
                let target = t.rows[c as usize][col];
                debug_assert_ne!(target, 0, "completed table must be total");
                new_index[t.find(target) as usize]
            })
            .collect();
        table.push(row);
    }
    Ok(CosetResult::Complete {
        order: live_order.len() as u64,
        table,
    })
}

/// CSV rendering of a completed coset table: header
/// `coset,t1,t1^-1,t2,t2^-1,…`, one row per coset.
pub fn coset_table_csv(table: &[Vec<u32>]) -> String {
    let gens = table.first().map_or(0, |r| r.len() / 2);
    let mut out = String::from("coset");
    for g in 1..=gens {
        out.push_str(&format!(",t{g},t{g}^-1"));
    }
    out.push('\n');
    for (idx, row) in table.iter().enumerate() {
        out.push_str(&(idx + 1).to_string());
        for entry in row {
            out.push(',');
            out.push_str(&entry.to_string());
        }
        out.push('\n');
    }
    out
}
