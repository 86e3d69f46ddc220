//! Integer Smith normal form and abelianization of presentations.
//!
//! The Smith normal form here returns a full transformation certificate:
//! unimodular `U`, `V` with `U·A·V = D` diagonal and the diagonal entries in
//! a divisibility chain. `U` and `V` are products of elementary integer row
//! and column operations, so they are unimodular by construction; their
//! determinant signs are tracked through the operations and exposed.
//! [`Snf::verify`] re-multiplies `U·A·V` and checks it against `D` — every
//! abelianization call runs that verification.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::presentation::Presentation;
use crate::word;
use crate::{Error, Result};

pub type Matrix = Vec<Vec<BigInt>>;

/// Smith normal form certificate: `u * a * v = d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Snf {
    pub d: Matrix,
    pub u: Matrix,
    pub v: Matrix,
    /// Determinant of `u` (`±1`), tracked through the elementary operations.
    pub det_u: i8,
    /// Determinant of `v` (`±1`).
    pub det_v: i8,
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.len();
    let inner = if rows == 0 { 0 } else { a[0].len() };
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    debug_assert_eq!(inner, b.len());
    let mut out = vec![vec![BigInt::zero(); cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                let prod = &a[i][k] * &b[k][j];
                out[i][j] += prod;
            }
        }
    }
    out
}

/// Computes the Smith normal form of an integer matrix.
///
/// Pivots are chosen deterministically (smallest absolute value, row-major
/// tie-break), so the certificate is reproducible.
pub fn smith_normal_form(a: &Matrix) -> Snf {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m = a.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut det_u: i8 = 1;
    let mut det_v: i8 = 1;

    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the trailing submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => m[i][j].abs() < m[pi][pj].abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != t {
            m.swap(t, pi);
            u.swap(t, pi);
            det_u = -det_u;
        }
        if pj != t {
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            det_v = -det_v;
        }

        'fix: loop {
            // alternately clear column t and row t by Euclidean steps
            loop {
                for i in (t + 1)..rows {
                    while !m[i][t].is_zero() {
                        let q = &m[i][t] / &m[t][t];
                        if !q.is_zero() {
                            for j in 0..cols {
                                let sub = &q * &m[t][j];
                                m[i][j] -= sub;
                            }
                            for j in 0..rows {
                                let sub = &q * &u[t][j];
                                u[i][j] -= sub;
                            }
                        }
                        if !m[i][t].is_zero() {
                            m.swap(t, i);
                            u.swap(t, i);
                            det_u = -det_u;
                        }
                    }
                }
                for j in (t + 1)..cols {
                    while !m[t][j].is_zero() {
                        let q = &m[t][j] / &m[t][t];
                        if !q.is_zero() {
                            for i in 0..rows {
                                let sub = &q * &m[i][t];
                                m[i][j] -= sub;
                            }
                            for i in 0..cols {
                                let sub = &q * &v[i][t];
                                v[i][j] -= sub;
                            }
                        }
                        if !m[t][j].is_zero() {
                            for row in m.iter_mut() {
                                row.swap(t, j);
                            }
                            for row in v.iter_mut() {
                                row.swap(t, j);
                            }
                            det_v = -det_v;
                        }
                    }
                }
                let col_clear = ((t + 1)..rows).all(|i| m[i][t].is_zero());
                let row_clear = ((t + 1)..cols).all(|j| m[t][j].is_zero());
                if col_clear && row_clear {
                    break;
                }
            }
            if m[t][t].is_negative() {
                for j in 0..cols {
                    m[t][j] = -m[t][j].clone();
                }
                for j in 0..rows {
                    u[t][j] = -u[t][j].clone();
                }
                det_u = -det_u;
            }
            // enforce the divisibility chain: the pivot must divide the
            // whole trailing submatrix
            let mut bad: Option<usize> = None;
            'scan: for i in (t + 1)..rows {
                for j in (t + 1)..cols {
                    if !(&m[i][j] % &m[t][t]).is_zero() {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => {
                    for j in 0..cols {
                        let add = m[i][j].clone();
                        m[t][j] += add;
                    }
                    for j in 0..rows {
                        let add = u[i][j].clone();
                        u[t][j] += add;
                    }
                }
                None => break 'fix,
            }
        }
        t += 1;
    }

    Snf {
        d: m,
        u,
        v,
        det_u,
        det_v,
    }
}

impl Snf {
    /// Re-multiplies the certificate and checks the shape of `D`:
    /// `U·A·V = D`, `D` diagonal, diagonal nonnegative with nonzero entries
    /// leading and forming a divisibility chain.
    pub fn verify(&self, a: &Matrix) -> bool {
        let ua = mat_mul(&self.u, a);
        let uav = mat_mul(&ua, &self.v);
        if uav != self.d {
            return false;
        }
        if self.det_u.abs() != 1 || self.det_v.abs() != 1 {
            return false;
        }
        let mut prev: Option<&BigInt> = None;
        let mut seen_zero = false;
        for (i, row) in self.d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j && !x.is_zero() {
                    return false;
                }
                if i == j {
                    if x.is_negative() {
                        return false;
                    }
                    if x.is_zero() {
                        seen_zero = true;
                    } else {
                        if seen_zero {
                            return false;
                        }
                        if let Some(p) = prev {
                            if !(x % p).is_zero() {
                                return false;
                            }
                        }
                        prev = Some(x);
                    }
                }
            }
        }
        true
    }

    /// The nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for (i, row) in self.d.iter().enumerate() {
            if i < row.len() && !row[i].is_zero() {
                out.push(row[i].clone());
            }
        }
        out
    }
}

/// Isomorphism type of a finitely generated abelian group:
/// `Z^free_rank × Z/t_1 × ⋯ × Z/t_k` with `t_1 | t_2 | ⋯` and every `t_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            f.write_str("trivial")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

/// Result of abelianizing a presentation: the relator exponent matrix, its
/// verified SNF certificate, and the resulting invariants.
#[derive(Clone, Debug, Serialize)]
pub struct Abelianization {
    pub matrix: Matrix,
    pub snf: Snf,
    pub invariants: AbelianInvariants,
}

/// Abelianizes a presentation via the Smith normal form of its relator
/// exponent matrix (zero rows dropped, duplicate rows deduplicated — neither
/// changes the quotient). The SNF certificate is verified by multiplication;
/// failure is an internal error.
pub fn abelianize(p: &Presentation) -> Result<Abelianization> {
    let gens = p.gen_count();
    let mut seen = std::collections::BTreeSet::new();
    let mut matrix: Matrix = Vec::new();
    for rel in &p.relations {
        let sums = word::exponent_sums(&rel.relator(), gens);
        if sums.iter().all(|&s| s == 0) {
            continue;
        }
        if seen.insert(sums.clone()) {
            matrix.push(sums.into_iter().map(BigInt::from).collect());
        }
    }
    let snf = smith_normal_form(&matrix);
    if !snf.verify(&matrix) {
        return Err(Error::Internal(
            "Smith normal form certificate failed verification".into(),
        ));
    }
    let factors = snf.invariant_factors();
    let rank = factors.len();
    let torsion: Vec<BigInt> = factors
        .into_iter()
        .filter(|f| f.abs() > BigInt::from(1))
        .collect();
    let invariants = AbelianInvariants {
        free_rank: gens - rank,
        torsion,
    };
    Ok(Abelianization {
        matrix,
        snf,
        invariants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Params;
    use crate::presentation::{present, Variant};

    fn big(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn snf_small_matrices() {
        let a = big(&[&[1, 2], &[3, 4]]);
        let snf = smith_normal_form(&a);
        assert!(snf.verify(&a));
        assert_eq!(snf.invariant_factors(), vec![BigInt::from(1), BigInt::from(2)]);

        let a = big(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let snf = smith_normal_form(&a);
        assert!(snf.verify(&a));
        // |det| = product of the invariant factors
        let prod: BigInt = snf.invariant_factors().iter().product();
        assert_eq!(prod, BigInt::from(156 * 2 * 2));

        // a rank-deficient example
        let a = big(&[&[1, 1, 1], &[2, 2, 2]]);
        let snf = smith_normal_form(&a);
        assert!(snf.verify(&a));
        assert_eq!(snf.invariant_factors(), vec![BigInt::from(1)]);
    }

    #[test]
    fn snf_empty_and_zero() {
        let a: Matrix = Vec::new();
        let snf = smith_normal_form(&a);
        assert!(snf.verify(&a));
        assert!(snf.invariant_factors().is_empty());

        let a = big(&[&[0, 0], &[0, 0]]);
        let snf = smith_normal_form(&a);
        assert!(snf.verify(&a));
        assert!(snf.invariant_factors().is_empty());
    }

    #[test]
    fn snf_divisibility_chain_is_enforced() {
        // gcd of all entries is 1 but no entry is ±1
        let a = big(&[&[2, 0], &[0, 3]]);
        let snf = smith_normal_form(&a);
        assert!(snf.verify(&a));
        assert_eq!(
            snf.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(6)]
        );
    }

    #[test]
    fn abelianization_projective_and_affine() {
        let params = Params::new(2, 3).unwrap();
        let proj = abelianize(&present(params, Variant::Projective).unwrap()).unwrap();
        assert_eq!(proj.invariants.free_rank, 0);
        assert_eq!(proj.invariants.torsion, vec![BigInt::from(12)]);
        assert_eq!(proj.invariants.to_string(), "Z/12");

        let aff = abelianize(&present(params, Variant::Affine).unwrap()).unwrap();
        assert_eq!(aff.invariants.free_rank, 1);
        assert!(aff.invariants.torsion.is_empty());
        assert_eq!(aff.invariants.to_string(), "Z");
    }

    #[test]
    fn abelianization_matches_formula() {
        for (n, d) in [(1, 2), (1, 5), (2, 4), (3, 3), (4, 2)] {
            let params = Params::new(n, d).unwrap();
            let expected = BigInt::from(n + 1) * BigInt::from((d - 1) as i64).pow(n);
            let ab = abelianize(&present(params, Variant::Projective).unwrap()).unwrap();
            assert_eq!(ab.invariants.free_rank, 0, "({n},{d})");
            assert_eq!(ab.invariants.torsion, vec![expected], "({n},{d})");
        }
    }
}
