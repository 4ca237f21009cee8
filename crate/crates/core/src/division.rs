//! Division with remainder on ℤ[i].
//!
//! [`gauss_divide`] rounds each coordinate of `a·b̄ / Nm(b)` to the nearest
//! integer, ties toward the floor. [`minimal_divide`] starts from that Gauss
//! remainder `r` and, when `φ(r) ≥ φ(b)`, replaces it by `r - (u_b/u_r)·b` or
//! `r - (i·u_b/(s(r)·u_r))·b` so that the remainder always has smaller φ.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::arith::{GInt, Unit};
use crate::error::{Error, Result};
use crate::phi::{phi, w};

/// How the final remainder was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// The Gauss remainder already decreases φ.
    Gauss,
    /// Remainder `r - (u_b/u_r)·b`.
    SubtractU,
    /// Remainder `r - (i·u_b/(s(r)·u_r))·b`.
    SubtractIu,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Gauss => "gauss",
            Strategy::SubtractU => "subtract_u",
            Strategy::SubtractIu => "subtract_iu",
        }
    }
}

/// Which adjustment condition fired, in evaluation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `Im(u_b·b)·Im(u_r·r) ≥ 0`.
    Cond1,
    /// `m(r) + m(b) ≤ ℓ∞(r)`.
    Cond2,
    /// `m(b) < ℓ∞(r) < m(b) + m(r)` and `ℓ∞(b) - m(r) > w(n-1) - 2^(v2(b)+1)`.
    Cond3,
    /// None of the three held.
    ElseBranch,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Cond1 => "cond1",
            Condition::Cond2 => "cond2",
            Condition::Cond3 => "cond3",
            Condition::ElseBranch => "else_branch",
        }
    }
}

/// Result of [`minimal_divide`]. `a = quotient·b + remainder` always holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisionOutcome {
    pub quotient: GInt,
    pub remainder: GInt,
    pub strategy: Strategy,
    pub condition: Option<Condition>,
    pub phi_b: u64,
    /// φ(remainder), absent when the remainder is zero.
    pub phi_r: Option<u64>,
    pub gauss_quotient: GInt,
    pub gauss_remainder: GInt,
}

/// Nearest integer to `t/d`, ties toward the floor: `⌈(2t - d) / 2d⌉`.
pub fn nint_ratio(t: &BigInt, d: &BigInt) -> Result<BigInt> {
    if !d.is_positive() {
        return Err(Error::NonPositiveDivisor);
    }
    let num: BigInt = (t << 1u32) - d;
    Ok(num.div_ceil(&(d << 1u32)))
}

/// Gauss's division: quotient from rounding `a·b̄ / Nm(b)` coordinatewise.
/// The remainder satisfies `Nm(r) ≤ Nm(b)/2`.
pub fn gauss_divide(a: &GInt, b: &GInt) -> Result<(GInt, GInt)> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let nm = BigInt::from(b.norm());
    let num = a * &b.conj();
    let q = GInt { x: nint_ratio(&num.x, &nm)?, y: nint_ratio(&num.y, &nm)? };
    let r = a - &q * b;
    Ok((q, r))
}

fn signed(u: BigUint) -> BigInt {
    BigInt::from(u)
}

/// Picks the adjusted remainder for a Gauss remainder `r ≠ 0` with
/// `φ(r) ≥ φ(b) = n`. Returns the unit `c` to add to the quotient (the new
/// remainder is `r - c·b`) and the condition that selected it.
pub fn select_adjustment(b: &GInt, r: &GInt, n: u64) -> Result<(Unit, Condition)> {
    let ub = b.canonical_unit()?;
    let ur = r.canonical_unit()?;
    let ub_b = ub.apply(b);
    let ur_r = ur.apply(r);

    let (m_b, m_r) = (signed(b.m_min()), signed(r.m_min()));
    let (linf_b, linf_r) = (signed(b.linf()), signed(r.linf()));

    let condition = if (&ub_b.y * &ur_r.y).sign() != num_bigint::Sign::Minus {
        Some(Condition::Cond1)
    } else if &m_r + &m_b <= linf_r {
        Some(Condition::Cond2)
    } else {
        // n ≥ 1 here: φ(b) = 0 means b is a unit, whose Gauss remainder is 0
        let n1 = n.checked_sub(1).expect("phi(b) >= 1 when the Gauss remainder is nonzero");
        let cap = signed(w(n1)) - (BigInt::one() << (b.v2()? + 1));
        let band = m_b < linf_r && linf_r < &m_b + &m_r;
        (band && &linf_b - &m_r > cap).then_some(Condition::Cond3)
    };

    Ok(match condition {
        Some(c) => (ub.div(ur), c),
        None => {
            // cond1 failed, so Im(u_r·r) ≠ 0 and s(r) = ±1
            let s = r.s_sign()?;
            debug_assert_ne!(s, 0);
            let su_r = if s > 0 { ur } else { ur.mul(Unit::NegOne) };
            (Unit::I.mul(ub).div(su_r), Condition::ElseBranch)
        }
    })
}

/// Division whose remainder is zero or has φ strictly below φ(b).
///
/// `a = 0` returns quotient and remainder 0.
pub fn minimal_divide(a: &GInt, b: &GInt) -> Result<DivisionOutcome> {
    let (q, r) = gauss_divide(a, b)?;
    let phi_b = phi(b)?;
    if r.is_zero() {
        return Ok(DivisionOutcome {
            quotient: q.clone(),
            remainder: r.clone(),
            strategy: Strategy::Gauss,
            condition: None,
            phi_b,
            phi_r: None,
            gauss_quotient: q,
            gauss_remainder: r,
        });
    }
    let phi_gauss = phi(&r)?;
    if phi_gauss < phi_b {
        return Ok(DivisionOutcome {
            quotient: q.clone(),
            remainder: r.clone(),
            strategy: Strategy::Gauss,
            condition: None,
            phi_b,
            phi_r: Some(phi_gauss),
            gauss_quotient: q,
            gauss_remainder: r,
        });
    }

    let (unit, condition) = select_adjustment(b, &r, phi_b)?;
    let quotient = &q + &unit.to_gint();
    let remainder = &r - &unit.apply(b);
    let phi_r = if remainder.is_zero() { None } else { Some(phi(&remainder)?) };
    let strategy = match condition {
        Condition::ElseBranch => Strategy::SubtractIu,
        _ => Strategy::SubtractU,
    };
    Ok(DivisionOutcome {
        quotient,
        remainder,
        strategy,
        condition: Some(condition),
        phi_b,
        phi_r,
        gauss_quotient: q,
        gauss_remainder: r,
    })
}

/// `v2(a) ≤ v2(b)`: the literal hypothesis under which the Gauss remainder is
/// claimed to need no adjustment. [`minimal_divide`] never relies on it.
pub fn adjustment_unnecessary(a: &GInt, b: &GInt) -> Result<bool> {
    Ok(a.v2()? <= b.v2()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GInt {
        s.parse().unwrap()
    }

    fn nint(t: i64, d: i64) -> Result<BigInt> {
        nint_ratio(&BigInt::from(t), &BigInt::from(d))
    }

    #[test]
    fn nint_examples() {
        assert_eq!(nint(1, 2), Ok(BigInt::from(0)));
        assert_eq!(nint(-1, 2), Ok(BigInt::from(-1)));
        assert_eq!(nint(36, 17), Ok(BigInt::from(2)));
        assert_eq!(nint(-9, 17), Ok(BigInt::from(-1)));
        assert_eq!(nint(7, 2), Ok(BigInt::from(3)));
        assert_eq!(nint(1, 0), Err(Error::NonPositiveDivisor));
        assert_eq!(nint(1, -3), Err(Error::NonPositiveDivisor));
    }

    #[test]
    fn nint_against_floor_rule() {
        // ⌊t/d⌋ unless the fractional part exceeds 1/2
        for d in 1i64..40 {
            for t in -200i64..200 {
                let fl = t.div_euclid(d);
                let frac2 = 2 * (t - fl * d);
                let expected = if frac2 <= d { fl } else { fl + 1 };
                assert_eq!(nint(t, d).unwrap(), BigInt::from(expected), "{t}/{d}");
            }
        }
    }

    #[test]
    fn gauss_examples() {
        assert_eq!(gauss_divide(&g("9"), &g("4+i")), Ok((g("2-i"), g("2i"))));
        assert_eq!(gauss_divide(&g("6+4i"), &g("2")), Ok((g("3+2i"), g("0"))));
        assert_eq!(gauss_divide(&g("7"), &g("2")), Ok((g("3"), g("1"))));
        assert_eq!(gauss_divide(&g("7"), &g("0")), Err(Error::DivisionByZero));
    }

    #[test]
    fn minimal_divide_nine_by_four_plus_i() {
        let out = minimal_divide(&g("9"), &g("4+i")).unwrap();
        assert_eq!(out.gauss_remainder, g("2i"));
        assert_eq!(out.quotient, g("2"));
        assert_eq!(out.remainder, g("1-2i"));
        assert_eq!(out.strategy, Strategy::SubtractU);
        assert_eq!(out.condition, Some(Condition::Cond1));
        assert_eq!((out.phi_b, out.phi_r), (2, Some(1)));
    }

    #[test]
    fn minimal_divide_trivial_cases() {
        let out = minimal_divide(&g("6+4i"), &g("2")).unwrap();
        assert_eq!((out.quotient, out.remainder), (g("3+2i"), g("0")));
        assert_eq!(out.strategy, Strategy::Gauss);
        assert_eq!(out.phi_r, None);

        let out = minimal_divide(&g("0"), &g("5")).unwrap();
        assert_eq!((out.quotient, out.remainder), (g("0"), g("0")));
        assert_eq!(minimal_divide(&g("3"), &g("0")), Err(Error::DivisionByZero));
    }

    #[test]
    fn adjustment_predicate_is_literal() {
        assert_eq!(adjustment_unnecessary(&g("9"), &g("4+i")), Ok(true));
        assert_eq!(adjustment_unnecessary(&g("2"), &g("1+i")), Ok(false));
        assert_eq!(adjustment_unnecessary(&g("3"), &g("7")), Ok(true));
        assert!(adjustment_unnecessary(&g("0"), &g("7")).is_err());
    }
}
