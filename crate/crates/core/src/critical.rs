//! Critical values of the linearly perturbed Fermat polynomial and the exact
//! gradient of the core deformation family.
//!
//! The polynomial `f = Σ_κ (x_κ^d − d·v_κ·x_κ)` has `(d-1)^n` nondegenerate
//! critical points, one for each multi-index `i ∈ {1, …, d-1}^n`: the point
//! with coordinates `x_κ = ω^{i_κ}·v_κ^{1/(d-1)}`, `ω = e^{2πi/(d-1)}`. Its
//! critical values
//!
//! ```text
//!     value(i) = −(d−1)·Σ_κ ω^{i_κ}·v_κ^{d/(d−1)}
//! ```
//!
//! are the discriminant points of the pencil `f − z`. Fractional powers are
//! taken on the principal branch, so every `v_κ` must be nonzero; the
//! geometric setup behind the Hefez–Lazzeri basis assumes positive real
//! parameters of well separated moduli `|v_n| ≪ … ≪ |v_1|`, and under that
//! assumption the values are pairwise distinct ([`CriticalValueSet::check_distinct`]),
//! they sit on circles of radius `(d−1)·|v_n|^{d/(d−1)}` around the values of
//! the `(n−1)`-parameter polynomial ([`CriticalValueSet::check_circles`]), and
//! the whole set is invariant under twisting any `v_κ` by a `d`-th root of
//! unity ([`CriticalValueSet::check_twist`]).
//!
//! The second half of the module evaluates, in exact rational arithmetic, the
//! gradient of the two-parameter interpolation family
//!
//! ```text
//!     ζ·( y^d − d·λ_n^{d−1}·y + Σ_{κ<n} (x_κ^d − d·λ_κ^{d−1}·x_κ) )
//!   + η·( (d−1)²·y^d − d(d−1)·λ_n·y^{d−1} + Σ_{κ<n} ((d−1)·x_κ^d − d·λ_κ·x_κ^{d−1}) )
//!   − λ·d(d−1)·( Σ_{κ<n} λ_κ^{d−1}·x_κ )·y^{d−1}
//! ```
//!
//! (`y = x_n`), which interpolates between the perturbed Fermat polynomial at
//! `(ζ, η, λ) = (1, 0, 0)` and a polynomial with a single dominant critical
//! point. On the slice `λ = 0` the point `x = (λ_1, …, λ_n)` is a critical
//! point of every member, and [`core_family_gradient`] certifies this exactly.

pub use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::lattice::{MultiIndex, Params};
use crate::{Error, Result};

/// Default relative tolerance for the floating-point set checks.
pub const DEFAULT_TOL: f64 = 1e-9;

/// The critical values of `Σ_κ (x_κ^d − d·v_κ·x_κ)`, one per multi-index,
/// in ascending natural order of the indices.
#[derive(Clone, Debug)]
pub struct CriticalValueSet {
    pub params: Params,
    /// The perturbation parameters `v_1, …, v_n`, all nonzero.
    pub v: Vec<Complex64>,
    /// All multi-indices in ascending natural lexicographic order.
    pub indices: Vec<MultiIndex>,
    /// `values[k]` is the critical value at the critical point labelled by
    /// `indices[k]`.
    pub values: Vec<Complex64>,
}

/// `ω^k` for `ω = e^{2πi/order}`, computed from polar coordinates so that
/// powers of small order stay accurate.
fn unit_root_power(order: u32, k: u32) -> Complex64 {
    let turn = f64::from(k % order) / f64::from(order);
    Complex64::from_polar(1.0, std::f64::consts::TAU * turn)
}

/// Critical values of the linearly perturbed Fermat polynomial of degree `d`
/// with perturbation parameters `v`.
///
/// Fails with an invalid-input error when some `v_κ` is zero or non-finite
/// (the principal branch of `v^{d/(d−1)}` is undefined at the origin).
pub fn hl_critical_values(d: u32, v: &[Complex64]) -> Result<CriticalValueSet> {
    let params = Params::new(v.len() as u32, d)?;
    for (pos, value) in v.iter().enumerate() {
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::Invalid(format!(
                "perturbation parameter v_{} must be finite",
                pos + 1
            )));
        }
        if value.norm() == 0.0 {
            return Err(Error::Invalid(format!(
                "perturbation parameter v_{} must be nonzero",
                pos + 1
            )));
        }
    }

    let exponent = f64::from(d) / f64::from(d - 1);
    let powers: Vec<Complex64> = v.iter().map(|&p| p.powf(exponent)).collect();
    let scale = -f64::from(d - 1);

    let indices = params.points();
    let values = indices
        .iter()
        .map(|i| {
            let sum: Complex64 = i
                .iter()
                .zip(&powers)
                .map(|(&digit, &w)| unit_root_power(d - 1, digit) * w)
                .sum();
            scale * sum
        })
        .collect();

    Ok(CriticalValueSet {
        params,
        v: v.to_vec(),
        indices,
        values,
    })
}

impl CriticalValueSet {
    /// Largest value modulus, floored at 1; the reference scale for the
    /// relative tolerances below.
    fn scale(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(1.0, f64::max)
    }

    /// Whether all critical values are pairwise distinct up to the relative
    /// tolerance `tol`.
    pub fn check_distinct(&self, tol: f64) -> bool {
        let threshold = tol * self.scale();
        for (k, a) in self.values.iter().enumerate() {
            for b in &self.values[k + 1..] {
                if (a - b).norm() <= threshold {
                    return false;
                }
            }
        }
        true
    }

    /// Whether every critical value lies at distance `(d−1)·|v_n|^{d/(d−1)}`
    /// (up to the relative tolerance `tol`) from the value of the
    /// `(n−1)`-parameter polynomial labelled by the first `n−1` digits of its
    /// multi-index.
    ///
    /// Needs `n ≥ 2`; the one-parameter set has no circle structure to check.
    pub fn check_circles(&self, tol: f64) -> Result<bool> {
        let n = self.params.n as usize;
        if n < 2 {
            return Err(Error::Invalid(
                "circle structure needs at least two parameters".into(),
            ));
        }
        let parent = hl_critical_values(self.params.d, &self.v[..n - 1])?;
        let radius =
            f64::from(self.params.d - 1) * self.v[n - 1].norm().powf(
                f64::from(self.params.d) / f64::from(self.params.d - 1),
            );
        let fan = (self.params.d - 1) as usize;
        let threshold = tol * radius.max(1.0);
        Ok(self.values.iter().enumerate().all(|(k, value)| {
            let distance = (value - parent.values[k / fan]).norm();
            (distance - radius).abs() <= threshold
        }))
    }

    /// Whether the multiset of critical values is unchanged (up to the
    /// relative tolerance `tol`) when `v_κ` is multiplied by the primitive
    /// `d`-th root of unity `e^{2πi/d}`, matching values greedily by nearest
    /// neighbour.
    ///
    /// `kappa` is 1-based.
    pub fn check_twist(&self, kappa: u32, tol: f64) -> Result<bool> {
        if kappa < 1 || kappa > self.params.n {
            return Err(Error::Invalid(format!(
                "kappa must lie in 1..={}",
                self.params.n
            )));
        }
        let mut twisted = self.v.clone();
        twisted[kappa as usize - 1] *= unit_root_power(self.params.d, 1);
        let other = hl_critical_values(self.params.d, &twisted)?;

        let threshold = tol * self.scale();
        let mut used = vec![false; self.values.len()];
        for value in &other.values {
            let nearest = self
                .values
                .iter()
                .enumerate()
                .filter(|(k, _)| !used[*k])
                .min_by(|(_, a), (_, b)| {
                    (value - *a).norm().total_cmp(&(value - *b).norm())
                });
            match nearest {
                Some((k, original)) if (value - original).norm() <= threshold => {
                    used[k] = true;
                }
                _ => return Ok(false),
            }
        }
        Ok(used.iter().all(|&u| u))
    }

    /// CSV rendering with header `index,re,im`, one row per critical value in
    /// ascending index order. Index digits are concatenated when `d ≤ 10` and
    /// joined with `-` otherwise.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,re,im\n");
        for (index, value) in self.indices.iter().zip(&self.values) {
            let digits: Vec<String> = index.iter().map(|c| c.to_string()).collect();
            let label = if self.params.d <= 10 {
                digits.concat()
            } else {
                digits.join("-")
            };
            out.push_str(&format!("{label},{:e},{:e}\n", value.re, value.im));
        }
        out
    }
}

/// A member of the core deformation family together with an evaluation point.
///
/// All data is exact: the family coefficients `ζ, η, λ`, the distinguished
/// critical point coordinates `λ_1, …, λ_n`, and the evaluation point `x` are
/// arbitrary-precision rationals.
#[derive(Clone, Debug)]
pub struct CoreFamilyPoint {
    pub d: u32,
    pub zeta: BigRational,
    pub eta: BigRational,
    pub lambda: BigRational,
    /// The distinguished point `(λ_1, …, λ_n)`.
    pub lambda_coords: Vec<BigRational>,
    /// The point at which the gradient is evaluated.
    pub x: Vec<BigRational>,
}

fn rpow(x: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

fn rint(k: u32) -> BigRational {
    BigRational::from_integer(k.into())
}

/// The `n` gradient components of the core family member at `point.x`,
/// in exact rational arithmetic.
///
/// The last variable plays a distinguished role: its plain power term carries
/// the coefficient `(d−1)²` instead of `(d−1)`, and the coupling term `−λ·(…)`
/// links it to all other variables. At `λ = 0` the gradient vanishes
/// identically at `x = (λ_1, …, λ_n)`, whatever `ζ` and `η` are.
pub fn core_family_gradient(point: &CoreFamilyPoint) -> Result<Vec<BigRational>> {
    let n = point.x.len();
    if n == 0 {
        return Err(Error::Invalid("the family needs at least one variable".into()));
    }
    if point.lambda_coords.len() != n {
        return Err(Error::Invalid(format!(
            "λ has {} coordinates but x has {}",
            point.lambda_coords.len(),
            n
        )));
    }
    if point.d < 2 {
        return Err(Error::Invalid("d must be at least 2".into()));
    }

    let d = point.d;
    let df = rint(d);
    let dm1 = rint(d - 1);

    // Coupling sum Σ_{κ<n} λ_κ^{d−1}·x_κ; empty (zero) when n = 1.
    let coupling: BigRational = point
        .lambda_coords
        .iter()
        .zip(&point.x)
        .take(n - 1)
        .map(|(l, x)| rpow(l, d - 1) * x)
        .fold(BigRational::zero(), |acc, term| acc + term);

    let y = &point.x[n - 1];
    let mut gradient = Vec::with_capacity(n);
    for kappa in 0..n {
        let x = &point.x[kappa];
        let l = &point.lambda_coords[kappa];
        let zeta_part = &point.zeta * &df * (rpow(x, d - 1) - rpow(l, d - 1));
        let component = if kappa < n - 1 {
            let eta_part =
                &point.eta * &df * &dm1 * (rpow(x, d - 1) - l * rpow(x, d - 2));
            let coupling_part =
                &point.lambda * &df * &dm1 * rpow(l, d - 1) * rpow(y, d - 1);
            zeta_part + eta_part - coupling_part
        } else {
            let eta_part = &point.eta * &df * &dm1 * &dm1
                * (rpow(x, d - 1) - l * rpow(x, d - 2));
            let coupling_part =
                &point.lambda * &df * &dm1 * &dm1 * &coupling * rpow(y, d - 2);
            zeta_part + eta_part - coupling_part
        };
        gradient.push(component);
    }
    Ok(gradient)
}
