//! Evaluating words in concrete groups to certify quotient maps.
//!
//! Used to verify that an explicit assignment of generator images extends to
//! a homomorphism (every relator maps to the identity), and — when the target
//! presentation is an isomorphism onto the image group — to prove individual
//! relators redundant by evaluating them. Targets supported: 2×2 integer
//! matrices (optionally up to sign, for central quotients) and permutations.

use serde::Serialize;

use crate::presentation::Presentation;
use crate::{Error, Result};

/// 2×2 integer matrix, row major. Arithmetic is overflow-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2 { a, b, c, d }
    }

    pub fn det(&self) -> Result<i64> {
        let ad = self.a.checked_mul(self.d);
        let bc = self.b.checked_mul(self.c);
        match (ad, bc) {
            (Some(ad), Some(bc)) => ad
                .checked_sub(bc)
                .ok_or_else(|| Error::TooLarge("matrix determinant overflow".into())),
            _ => Err(Error::TooLarge("matrix determinant overflow".into())),
        }
    }

    pub fn mul(&self, o: &Mat2) -> Result<Mat2> {
        let dot = |x: i64, y: i64, z: i64, w: i64| -> Result<i64> {
            x.checked_mul(y)
                .zip(z.checked_mul(w))
                .and_then(|(p, q)| p.checked_add(q))
                .ok_or_else(|| Error::TooLarge("matrix product overflow".into()))
        };
        Ok(Mat2 {
            a: dot(self.a, o.a, self.b, o.c)?,
            b: dot(self.a, o.b, self.b, o.d)?,
            c: dot(self.c, o.a, self.d, o.c)?,
            d: dot(self.c, o.b, self.d, o.d)?,
        })
    }

    /// Inverse of a matrix with determinant ±1.
    pub fn inverse(&self) -> Result<Mat2> {
        match self.det()? {
            1 => Ok(Mat2::new(self.d, -self.b, -self.c, self.a)),
            -1 => Ok(Mat2::new(-self.d, self.b, self.c, -self.a)),
            det => Err(Error::Invalid(format!(
                "matrix with determinant {det} has no integer inverse"
            ))),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::IDENTITY
    }

    /// True for ±identity — equality in the quotient by the centre {±1}.
    pub fn is_identity_up_to_sign(&self) -> bool {
        self.is_identity() || *self == Mat2::new(-1, 0, 0, -1)
    }
}

/// Evaluates a word under `images[k-1]` for letter `k` (negative letters use
/// the inverse image).
pub fn eval_mat2(w: &[i32], images: &[Mat2]) -> Result<Mat2> {
    let mut acc = Mat2::IDENTITY;
    for &x in w {
        let k = x.unsigned_abs() as usize;
        if k == 0 || k > images.len() {
            return Err(Error::Invalid(format!(
                "letter {x} outside the {} generator images",
                images.len()
            )));
        }
        let m = if x > 0 {
            images[k - 1]
        } else {
            images[k - 1].inverse()?
        };
        acc = acc.mul(&m)?;
    }
    Ok(acc)
}

/// True when every relator of `p` evaluates to the identity (or ±identity
/// when `up_to_sign`), i.e. the images define a homomorphism.
pub fn check_mat2_homomorphism(
    p: &Presentation,
    images: &[Mat2],
    up_to_sign: bool,
) -> Result<bool> {
    if images.len() != p.gen_count() {
        return Err(Error::Invalid(format!(
            "{} images given for {} generators",
            images.len(),
            p.gen_count()
        )));
    }
    for rel in &p.relations {
        let m = eval_mat2(&rel.relator(), images)?;
        let ok = if up_to_sign {
            m.is_identity_up_to_sign()
        } else {
            m.is_identity()
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Permutation of `{0, …, n-1}`, stored as the image vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Perm(pub Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u32).collect())
    }

    /// Transposition swapping `i` and `j` (0-based) in `{0, …, n-1}`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        let mut v: Vec<u32> = (0..n as u32).collect();
        v.swap(i, j);
        Perm(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::Invalid("permutation degree mismatch".into()));
        }
        Ok(Perm(
            other.0.iter().map(|&x| self.0[x as usize]).collect(),
        ))
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u32; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x as usize] = i as u32;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }
}

/// Evaluates a word under permutation images, letters acting left to right.
pub fn eval_perm(w: &[i32], images: &[Perm]) -> Result<Perm> {
    let degree = images.first().map_or(0, Perm::degree);
    let mut acc = Perm::identity(degree);
    for &x in w {
        let k = x.unsigned_abs() as usize;
        if k == 0 || k > images.len() {
            return Err(Error::Invalid(format!(
                "letter {x} outside the {} generator images",
                images.len()
            )));
        }
        let m = if x > 0 {
            images[k - 1].clone()
        } else {
            images[k - 1].inverse()
        };
        acc = acc.compose(&m)?;
    }
    Ok(acc)
}

/// True when every relator of `p` maps to the identity permutation.
pub fn check_perm_homomorphism(p: &Presentation, images: &[Perm]) -> Result<bool> {
    if images.len() != p.gen_count() {
        return Err(Error::Invalid(format!(
            "{} images given for {} generators",
            images.len(),
            p.gen_count()
        )));
    }
    for rel in &p.relations {
        if !eval_perm(&rel.relator(), images)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Standard generator images for the group of 2×2 integer matrices of
/// determinant one: the two elementary matrices whose braid relation and
/// twelfth-power relation present it.
pub fn sl2_standard() -> (Mat2, Mat2) {
    (Mat2::new(1, 1, 0, 1), Mat2::new(1, 0, -1, 1))
}
