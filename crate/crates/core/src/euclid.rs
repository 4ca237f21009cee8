//! Euclidean algorithm on ℤ[i] with full step traces.
//!
//! Two engines: [`Engine::Minimal`] divides with [`minimal_divide`] and tracks
//! φ of each divisor; [`Engine::Norm`] divides with [`gauss_divide`] and tracks
//! the norm. Gcds are normalized to the canonical associate `u_g·g`.

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::GInt;
use crate::division::{gauss_divide, minimal_divide, Strategy};
use crate::error::{Error, Result};
use crate::phi::phi;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    Minimal,
    Norm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EuclidStep {
    pub dividend: GInt,
    pub divisor: GInt,
    pub quotient: GInt,
    pub remainder: GInt,
    /// φ(divisor) for the minimal engine, Nm(divisor) for the norm engine.
    #[serde(serialize_with = "crate::arith::ser_display")]
    pub measure_divisor: BigUint,
    pub strategy: Strategy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EuclidTrace {
    pub engine: Engine,
    pub steps: Vec<EuclidStep>,
    pub gcd_raw: GInt,
    pub gcd_canonical: GInt,
}

impl EuclidTrace {
    /// True when the divisor measure strictly decreases step to step.
    pub fn measure_descends(&self) -> bool {
        self.steps.windows(2).all(|p| p[1].measure_divisor < p[0].measure_divisor)
    }
}

fn run(a: &GInt, b: &GInt, engine: Engine) -> Result<EuclidTrace> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let mut steps = Vec::new();
    let (mut dividend, mut divisor) = (a.clone(), b.clone());
    while !divisor.is_zero() {
        let (quotient, remainder, measure, strategy) = match engine {
            Engine::Minimal => {
                let out = minimal_divide(&dividend, &divisor)?;
                (out.quotient, out.remainder, BigUint::from(out.phi_b), out.strategy)
            }
            Engine::Norm => {
                let (q, r) = gauss_divide(&dividend, &divisor)?;
                (q, r, divisor.norm(), Strategy::Gauss)
            }
        };
        steps.push(EuclidStep {
            dividend: dividend.clone(),
            divisor: divisor.clone(),
            quotient,
            remainder: remainder.clone(),
            measure_divisor: measure,
            strategy,
        });
        dividend = divisor;
        divisor = remainder;
    }
    Ok(EuclidTrace {
        engine,
        steps,
        gcd_canonical: dividend.canonical_associate(),
        gcd_raw: dividend,
    })
}

/// Euclid's algorithm driven by [`minimal_divide`]; φ of the divisors
/// strictly decreases.
pub fn gcd_minimal(a: &GInt, b: &GInt) -> Result<EuclidTrace> {
    run(a, b, Engine::Minimal)
}

/// Euclid's algorithm driven by [`gauss_divide`]; norms strictly decrease.
pub fn gcd_norm(a: &GInt, b: &GInt) -> Result<EuclidTrace> {
    run(a, b, Engine::Norm)
}

pub fn gcd_trace(a: &GInt, b: &GInt, engine: Engine) -> Result<EuclidTrace> {
    run(a, b, engine)
}

/// Bezout data: `s·a + t·b = g` with `g` the canonical gcd.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bezout {
    pub g: GInt,
    pub s: GInt,
    pub t: GInt,
}

/// Extended Euclid over a trace of the chosen engine.
pub fn xgcd_with(a: &GInt, b: &GInt, engine: Engine) -> Result<Bezout> {
    let trace = run(a, b, engine)?;
    // invariant: dividend_k = s0·a + t0·b, divisor_k = s1·a + t1·b
    let (mut s0, mut s1) = (GInt::one(), GInt::zero());
    let (mut t0, mut t1) = (GInt::zero(), GInt::one());
    for step in &trace.steps {
        let s2 = &s0 - &(&step.quotient * &s1);
        let t2 = &t0 - &(&step.quotient * &t1);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    let u = trace.gcd_raw.canonical_unit()?;
    Ok(Bezout { g: trace.gcd_canonical, s: u.apply(&s0), t: u.apply(&t0) })
}

/// Extended Euclid using the minimal engine.
pub fn xgcd(a: &GInt, b: &GInt) -> Result<Bezout> {
    xgcd_with(a, b, Engine::Minimal)
}

/// φ measures of a trace's divisors, for display.
pub fn divisor_phis(trace: &EuclidTrace) -> Result<Vec<u64>> {
    trace.steps.iter().map(|s| phi(&s.divisor)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GInt {
        s.parse().unwrap()
    }

    #[test]
    fn gcd_examples() {
        let t = gcd_minimal(&g("9"), &g("4+i")).unwrap();
        assert_eq!(t.gcd_canonical, g("1"));
        assert_eq!(t.steps[0].quotient, g("2"));
        assert_eq!(t.steps[0].remainder, g("1-2i"));
        assert!(t.measure_descends());

        assert_eq!(gcd_minimal(&g("6"), &g("4")).unwrap().gcd_canonical, g("2"));
        assert_eq!(gcd_minimal(&g("2"), &g("1+i")).unwrap().gcd_canonical, g("1+i"));

        assert_eq!(gcd_norm(&g("9"), &g("4+i")).unwrap().gcd_canonical, g("1"));
        assert_eq!(gcd_norm(&g("0"), &g("-3i")).unwrap().gcd_canonical, g("3"));
        assert_eq!(gcd_norm(&g("6+4i"), &g("2")).unwrap().gcd_canonical, g("2"));
        assert_eq!(gcd_norm(&g("6+4i"), &g("2")).unwrap().steps.len(), 1);
        assert_eq!(gcd_minimal(&g("0"), &g("0")), Err(Error::BothZero));
        assert_eq!(gcd_norm(&g("0"), &g("0")), Err(Error::BothZero));
    }

    #[test]
    fn trace_chains() {
        let t = gcd_minimal(&g("37+11i"), &g("-8+5i")).unwrap();
        for pair in t.steps.windows(2) {
            assert_eq!(pair[1].dividend, pair[0].divisor);
            assert_eq!(pair[1].divisor, pair[0].remainder);
        }
        for s in &t.steps {
            assert_eq!(&s.quotient * &s.divisor + &s.remainder, s.dividend);
        }
        assert!(t.steps.last().unwrap().remainder.is_zero());
    }

    #[test]
    fn xgcd_examples() {
        for (a, b, gg) in [("2", "1+i", "1+i"), ("9", "4+i", "1"), ("6", "4", "2"), ("5+3i", "5+3i", "5+3i")] {
            let (a, b) = (g(a), g(b));
            let bz = xgcd(&a, &b).unwrap();
            assert_eq!(bz.g, g(gg));
            assert_eq!(&bz.s * &a + &bz.t * &b, bz.g);
        }
        assert_eq!(xgcd(&g("0"), &g("0")), Err(Error::BothZero));
        let bz = xgcd(&g("0"), &g("-7")).unwrap();
        assert_eq!((bz.g, bz.s, bz.t), (g("7"), g("0"), g("-1")));
    }
}
