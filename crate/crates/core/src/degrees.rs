//! Degrees and Euler-number invariants of the discriminant polynomial.
//!
//! The discriminant of degree-`d` hypersurfaces in `Pⁿ` is a polynomial
//! `p` in the coefficients; fixing the coefficient `z` of `x₀^d` as the
//! distinguished variable yields the bifurcation polynomial `q = discr_z p`
//! and the leading coefficient `ℓ`. All their degrees have closed forms in
//! `n` and `d`, reproduced here in exact integers together with the identity
//! checks tying them to Euler numbers of smooth hypersurfaces and complete
//! intersections. Every report is self-verified: the cross-identities between
//! the closed forms are recomputed on construction, and a mismatch is an
//! internal error (it can only mean the formulas were transcribed wrong).

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::lattice::Params;
use crate::{Error, Result};

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn bpow(base: i64, exp: u32) -> BigInt {
    let mut r = big(1);
    let b = big(base);
    for _ in 0..exp {
        r *= &b;
    }
    r
}

/// Exact quotient; raises an internal error if the division has a remainder.
fn exact_div(num: BigInt, den: i64, what: &str) -> Result<BigInt> {
    let d = big(den);
    let (q, r) = num_integer::Integer::div_rem(&num, &d);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{what} is not divisible by {den}")));
    }
    Ok(q)
}

/// Degrees of the discriminant polynomial `p`, the bifurcation polynomial
/// `q = discr_z p`, and the coefficient `c` of the reduced discriminant,
/// in the plain, `z`-, weighted, and linear-coefficient gradings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub params: Params,
    /// total degree of `p`: `(n+1)(d-1)^n`
    pub deg_p: BigInt,
    /// degree of `p` in the distinguished coefficient `z`: `(d-1)^n`
    pub deg_z_p: BigInt,
    /// exponent of the leading coefficient `ℓ` of `p` in `z`: `d-1`
    pub lead_exponent: BigInt,
    /// total degree of `q`: `(2n+1)(d-1)^n((d-1)^n - 1)`
    pub deg_q: BigInt,
    /// weighted degree of `p`: `d(d-1)^n`
    pub wdeg_p: BigInt,
    /// weighted degree of `q`: `d(d-1)^n((d-1)^n - 1)`
    pub wdeg_q: BigInt,
    /// degree of `q` in the linear coefficients: `d(d-1)^{n-1}((d-1)^n - 1)`
    pub deg_v_q: BigInt,
    /// degree of the coefficient `c`: `(2n(d-1) - 1)(d-1)^{n-1}((d-1)^n - 1)`
    pub deg_c: BigInt,
}

impl DegreeReport {
    pub fn to_text(&self) -> String {
        format!(
            "degrees for (n={}, d={})\n\
             deg p        = {}\n\
             deg_z p      = {}\n\
             lead exponent = {}\n\
             deg q        = {}\n\
             w-deg p      = {}\n\
             w-deg q      = {}\n\
             deg_v q      = {}\n\
             deg c        = {}\n",
            self.params.n,
            self.params.d,
            self.deg_p,
            self.deg_z_p,
            self.lead_exponent,
            self.deg_q,
            self.wdeg_p,
            self.wdeg_q,
            self.deg_v_q,
            self.deg_c
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("degree report serializes")
    }
}

/// Computes all degree invariants for `(n, d)` and verifies the identities
/// linking them before returning.
pub fn degree_report(params: Params) -> Result<DegreeReport> {
    let n = params.n;
    let d = params.d as i64;
    let v = bpow(d - 1, n); // (d-1)^n
    let v_minus = &v - 1;
    let v_lower = bpow(d - 1, n - 1); // (d-1)^{n-1}, n ≥ 1 by Params

    let report = DegreeReport {
        params,
        deg_p: big(n as i64 + 1) * &v,
        deg_z_p: v.clone(),
        lead_exponent: big(d - 1),
        deg_q: big(2 * n as i64 + 1) * &v * &v_minus,
        wdeg_p: big(d) * &v,
        wdeg_q: big(d) * &v * &v_minus,
        deg_v_q: big(d) * &v_lower * &v_minus,
        deg_c: big(2 * n as i64 * (d - 1) - 1) * &v_lower * &v_minus,
    };

    // lead_exponent k is pinned by k·n(d-1)^{n-1} + (d-1)^n = deg p
    let lead_check = &report.lead_exponent * big(n as i64) * &v_lower + &v;
    if lead_check != report.deg_p {
        return Err(Error::Internal(
            "leading-coefficient exponent fails its defining identity".into(),
        ));
    }
    // deg q = (deg_z p - 1)(2 deg p - deg_z p)
    if report.deg_q != (&report.deg_z_p - 1) * (big(2) * &report.deg_p - &report.deg_z_p) {
        return Err(Error::Internal("deg q cross-identity failed".into()));
    }
    // w-deg q = d · deg_z p · (deg_z p - 1)
    if report.wdeg_q != big(d) * &report.deg_z_p * (&report.deg_z_p - 1) {
        return Err(Error::Internal("w-deg q cross-identity failed".into()));
    }
    // deg c = deg q - deg_v q
    if report.deg_c != &report.deg_q - &report.deg_v_q {
        return Err(Error::Internal("deg c cross-identity failed".into()));
    }
    Ok(report)
}

/// Euler number of a smooth degree-`d` hypersurface in `Pⁿ`:
/// `e = n+1 + ((1-d)^{n+1} - 1)/d`. Accepts `n = 0` (the empty hypersurface
/// in a point, `e = 0`), which the identity checks below need.
pub fn euler_smooth(n: u32, d: u32) -> Result<BigInt> {
    if d < 1 {
        return Err(Error::Invalid("euler_smooth requires d ≥ 1".into()));
    }
    let frac = exact_div(bpow(1 - d as i64, n + 1) - 1, d as i64, "(1-d)^{n+1} - 1")?;
    Ok(big(n as i64 + 1) + frac)
}

/// Euler number of a smooth complete intersection of two degree-`d`
/// hypersurfaces in `Pⁿ`:
/// `e = n+1 + (1-d)^n(n-1) + 2((1-d)^n - 1)/d`.
pub fn euler_ci(n: u32, d: u32) -> Result<BigInt> {
    if n < 1 || d < 1 {
        return Err(Error::Invalid("euler_ci requires n ≥ 1 and d ≥ 1".into()));
    }
    let pw = bpow(1 - d as i64, n);
    let frac = exact_div(&pw - 1, d as i64, "(1-d)^n - 1")?;
    Ok(big(n as i64 + 1) + pw * big(n as i64 - 1) + big(2) * frac)
}

/// One exact integer identity, with both evaluated sides.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub description: String,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(name: &str, description: &str, lhs: BigInt, rhs: BigInt) -> IdentityCheck {
        let holds = lhs == rhs;
        IdentityCheck {
            name: name.to_string(),
            description: description.to_string(),
            lhs,
            rhs,
            holds,
        }
    }
}

/// The two Euler-number identities behind the degree formulas: counting the
/// singular members of a generic pencil gives `deg p`, and of a pencil with
/// one fixed smooth member gives `deg_z p`. Both are exact integer checks;
/// the returned details carry the evaluated sides.
pub fn euler_identities(params: Params) -> Result<Vec<IdentityCheck>> {
    let n = params.n;
    let d = params.d;
    let sign = if n % 2 == 0 { big(1) } else { big(-1) };
    let e_nd = euler_smooth(n, d)?;
    let e_ci = euler_ci(n, d)?;
    let e_prev = euler_smooth(n - 1, d)?;

    let first = IdentityCheck::new(
        "generic_pencil_count",
        "(-1)^n((n+1) - 2e_{n,d} + e_{n;d,d}) = (n+1)(d-1)^n",
        &sign * (big(n as i64 + 1) - big(2) * &e_nd + &e_ci),
        big(n as i64 + 1) * bpow(d as i64 - 1, n),
    );
    let second = IdentityCheck::new(
        "fixed_member_pencil_count",
        "(-1)^n(1 - e_{n,d} + e_{n-1,d}) = (d-1)^n",
        &sign * (big(1) - &e_nd + &e_prev),
        bpow(d as i64 - 1, n),
    );
    Ok(vec![first, second])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32, d: u32) -> Params {
        Params::new(n, d).unwrap()
    }

    #[test]
    fn classical_degrees() {
        // Zariski's sextic and the duodectic
        assert_eq!(degree_report(p(1, 4)).unwrap().deg_p, big(6));
        let r = degree_report(p(2, 3)).unwrap();
        assert_eq!(r.deg_p, big(12));
        assert_eq!(r.deg_z_p, big(4));
        assert_eq!(r.lead_exponent, big(2));
        assert_eq!(r.deg_q, big(60));
        assert_eq!(r.wdeg_p, big(12));
        assert_eq!(r.wdeg_q, big(36));
        assert_eq!(r.deg_v_q, big(18));
        assert_eq!(r.deg_c, big(42));
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_smooth(2, 3).unwrap(), big(0)); // elliptic curve
        assert_eq!(euler_smooth(3, 4).unwrap(), big(24)); // quartic surface
        assert_eq!(euler_smooth(1, 4).unwrap(), big(4)); // four points
        assert_eq!(euler_smooth(0, 5).unwrap(), big(0));
        assert_eq!(euler_ci(2, 3).unwrap(), big(9)); // two cubics meet in 9 points
        assert_eq!(euler_ci(1, 4).unwrap(), big(0));
    }

    #[test]
    fn identities_hold_on_grid() {
        for n in 1..=6 {
            for d in 2..=9 {
                let checks = euler_identities(p(n, d)).unwrap();
                assert_eq!(checks.len(), 2);
                for c in &checks {
                    assert!(c.holds, "({n},{d}) {}: {} ≠ {}", c.name, c.lhs, c.rhs);
                }
                degree_report(p(n, d)).unwrap();
            }
        }
        // a large pair exercises the arbitrary-precision path
        let r = degree_report(p(6, 9)).unwrap();
        assert_eq!(r.deg_z_p, bpow(8, 6));
        for c in euler_identities(p(4, 5)).unwrap() {
            assert!(c.holds);
        }
    }

    #[test]
    fn report_text_is_stable() {
        let text = degree_report(p(2, 3)).unwrap().to_text();
        assert!(text.contains("deg p        = 12"));
        assert!(text.contains("deg q        = 60"));
    }
}
