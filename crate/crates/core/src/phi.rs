//! The minimal Euclidean function φ on ℤ[i] and the threshold sequence `w`.
//!
//! `w(2k) = 3·2^k` and `w(2k+1) = 4·2^k`. For `z = x + yi ≠ 0` with
//! `j = v2(z)`, let `n` be the least index with `|x|/2^j, |y|/2^j ≤ w(n) - 2`.
//! Then `φ(z) = n + 2j` when `(|x| + |y|)/2^j ≤ w(n+1) - 3`, and `n + 2j + 1`
//! otherwise.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::GInt;
use crate::error::{Error, Result};

/// `w(m)`: `3·2^k` for `m = 2k`, `4·2^k` for `m = 2k + 1`.
pub fn w(m: u64) -> BigUint {
    let k = m / 2;
    if m.is_multiple_of(2) {
        BigUint::from(3u32) << k
    } else {
        BigUint::one() << (k + 2)
    }
}

/// Which branch of the formula produced the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PhiBranch {
    /// `ℓ₁(z)/2^j ≤ w(n+1) - 3`, so φ = n + 2j.
    Within,
    /// φ = n + 2j + 1.
    Beyond,
}

/// The pieces of the closed-form evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiParts {
    pub value: u64,
    pub j: u64,
    pub n: u64,
    pub branch: PhiBranch,
}

/// Least `n` with `bound ≤ w(n) - 2`, found from the bit length of `bound + 2`.
fn least_index(bound: &BigUint) -> u64 {
    let target = bound + 2u32;
    let bits = target.bits();
    // w(2b-3) = 2^b > target, and every w(n) with n < 2b-5 is below 2^(b-1)
    let mut n = (2 * bits).saturating_sub(5);
    while w(n) < target {
        n += 1;
    }
    n
}

/// Evaluates φ and reports `j`, `n` and the branch taken.
pub fn phi_parts(z: &GInt) -> Result<PhiParts> {
    let j = z.v2().map_err(|_| Error::ZeroInput("phi"))?;
    let x = z.x.magnitude() >> j;
    let y = z.y.magnitude() >> j;
    let n = least_index(if x > y { &x } else { &y });
    let within = x + y + 3u32 <= w(n + 1);
    let (value, branch) = if within {
        (n + 2 * j, PhiBranch::Within)
    } else {
        (n + 2 * j + 1, PhiBranch::Beyond)
    };
    Ok(PhiParts { value, j, n, branch })
}

/// The minimal Euclidean function φ(z). Zero is a domain error.
pub fn phi(z: &GInt) -> Result<u64> {
    phi_parts(z).map(|p| p.value)
}

/// Decides `φ(z) ≤ n` from the bounds `ℓ∞(z) ≤ w(n) - 2^(v2+1)` and
/// `ℓ₁(z) ≤ w(n+1) - 3·2^v2`, without locating the least index.
pub fn phi_le(z: &GInt, n: u64) -> Result<bool> {
    let v = z.v2().map_err(|_| Error::ZeroInput("phi_le"))?;
    let linf_cap = BigInt::from(w(n)) - (BigInt::one() << (v + 1));
    let l1_cap = BigInt::from(w(n + 1)) - (BigInt::from(3) << v);
    Ok(BigInt::from(z.linf()) <= linf_cap && BigInt::from(z.l1()) <= l1_cap)
}

/// φ on ℤ: `⌊log₂ |x|⌋`, read off the bit length.
pub fn phi_int(x: &BigInt) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::ZeroInput("phi_int"));
    }
    Ok(x.bits() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GInt {
        s.parse().unwrap()
    }

    #[test]
    fn w_sequence() {
        let head: Vec<u64> = (0..8).map(|m| u64::try_from(w(m)).unwrap()).collect();
        assert_eq!(head, [3, 4, 6, 8, 12, 16, 24, 32]);
        assert_eq!(w(10), BigUint::from(96u32));
        for m in 0..200 {
            assert_eq!(w(m + 2), w(m) * 2u32);
            assert!(w(m + 1) > w(m));
        }
    }

    #[test]
    fn least_index_matches_linear_scan() {
        for b in 0u32..5000 {
            let bound = BigUint::from(b);
            let scan = (0..).find(|&n| bound.clone() + 2u32 <= w(n)).unwrap();
            assert_eq!(least_index(&bound), scan, "bound {b}");
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&g("4+i")), Ok(2));
        assert_eq!(phi(&g("2i")), Ok(2));
        assert_eq!(phi(&g("1")), Ok(0));
        assert_eq!(phi(&g("i")), Ok(0));
        assert_eq!(phi(&g("2+i")), Ok(1));
        assert_eq!(phi(&g("3+2i")), Ok(2));
        assert_eq!(phi(&g("1-2i")), Ok(1));
        assert_eq!(phi(&GInt::zero()), Err(Error::ZeroInput("phi")));
    }

    #[test]
    fn phi_parts_report_branch() {
        let p = phi_parts(&g("2i")).unwrap();
        assert_eq!((p.j, p.n, p.branch), (1, 0, PhiBranch::Within));
        let p = phi_parts(&g("2+i")).unwrap();
        assert_eq!((p.j, p.n, p.branch), (0, 1, PhiBranch::Within));
        // 3+2i: n = 2 (3 > w(1) - 2), and 5 ≤ w(3) - 3
        let p = phi_parts(&g("3+2i")).unwrap();
        assert_eq!((p.j, p.n, p.branch), (0, 2, PhiBranch::Within));
        // 1+i: n = 0, ℓ₁ = 2 > w(1) - 3 = 1
        let p = phi_parts(&g("1+i")).unwrap();
        assert_eq!((p.value, p.branch), (1, PhiBranch::Beyond));
    }

    #[test]
    fn phi_le_examples() {
        assert_eq!(phi_le(&g("2i"), 2), Ok(true));
        assert_eq!(phi_le(&g("4+i"), 1), Ok(false));
        assert_eq!(phi_le(&g("1"), 0), Ok(true));
        assert!(phi_le(&GInt::zero(), 3).is_err());
    }

    #[test]
    fn phi_le_agrees_with_phi() {
        for x in -30i64..=30 {
            for y in -30i64..=30 {
                let z = GInt::new(x, y);
                if z.is_zero() {
                    continue;
                }
                let value = phi(&z).unwrap();
                for n in 0..=value + 3 {
                    assert_eq!(phi_le(&z, n).unwrap(), value <= n, "{z} n={n}");
                }
            }
        }
    }

    #[test]
    fn phi_int_examples() {
        assert_eq!(phi_int(&BigInt::from(1)), Ok(0));
        assert_eq!(phi_int(&BigInt::from(8)), Ok(3));
        assert_eq!(phi_int(&BigInt::from(-5)), Ok(2));
        assert!(phi_int(&BigInt::zero()).is_err());
    }
}
