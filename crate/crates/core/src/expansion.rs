//! (1+i)-ary expansions `z = Σ u_j (1+i)^j` with digits in `{0, ±1, ±i}`.
//!
//! The least attainable degree of such an expansion equals φ(z).
//! [`minimal_expansion`] builds one of least degree by letting φ pick each
//! digit; [`min_degree_bfs`] is an independent breadth-first search over
//! digit choices used as an oracle for the closed-form φ.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::arith::{GInt, Unit};
use crate::error::{Error, Result};
use crate::phi::phi;

/// Largest norm [`min_degree_bfs`] accepts.
pub const BFS_NORM_CAP: u64 = 1 << 40;

/// Little-endian digits; position `j` carries weight `(1+i)^j`. `None` is the
/// zero digit. The top digit is nonzero, and the empty expansion is 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Expansion {
    digits: Vec<Option<Unit>>,
}

impl Expansion {
    /// Builds an expansion, dropping zero digits from the top.
    pub fn new(mut digits: Vec<Option<Unit>>) -> Expansion {
        while digits.last() == Some(&None) {
            digits.pop();
        }
        Expansion { digits }
    }

    pub fn digits(&self) -> &[Option<Unit>] {
        &self.digits
    }

    /// `len - 1`; `None` for the empty expansion.
    pub fn degree(&self) -> Option<u64> {
        (self.digits.len() as u64).checked_sub(1)
    }

    /// Horner evaluation in base `1+i`.
    pub fn eval(&self) -> GInt {
        self.digits.iter().rev().fold(GInt::zero(), |acc, d| {
            let shifted = acc.mul_one_plus_i();
            match d {
                Some(u) => shifted + u.to_gint(),
                None => shifted,
            }
        })
    }
}

pub fn eval_expansion(e: &Expansion) -> GInt {
    e.eval()
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.digits.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            match d {
                Some(u) => write!(f, "{u}")?,
                None => f.write_str("0")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Expansion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Expansion> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Expansion::default());
        }
        let digits = s
            .split(',')
            .map(|t| match t.trim() {
                "0" => Ok(None),
                other => other
                    .parse::<Unit>()
                    .map(Some)
                    .map_err(|_| Error::Parse { kind: "expansion", input: s.to_string() }),
            })
            .collect::<Result<Vec<_>>>()?;
        if digits.last() == Some(&None) {
            return Err(Error::Parse { kind: "expansion", input: s.to_string() });
        }
        Ok(Expansion { digits })
    }
}

impl serde::Serialize for Expansion {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A least-degree expansion of `z`.
///
/// A digit is 0 exactly when `(1+i)` divides the running value; otherwise the
/// first unit in `[1, i, -1, -i]` whose quotient `(v - d)/(1+i)` has φ one
/// below φ(v) is taken.
pub fn minimal_expansion(z: &GInt) -> Result<Expansion> {
    let mut level = phi(z).map_err(|_| Error::ZeroInput("minimal_expansion"))?;
    let mut cur = z.clone();
    let mut digits = Vec::with_capacity(level as usize + 1);
    loop {
        if let Some(u) = Unit::from_gint(&cur) {
            digits.push(Some(u));
            break;
        }
        if let Some(next) = cur.div_one_plus_i() {
            digits.push(None);
            cur = next;
        } else {
            let (u, next) = Unit::ALL
                .into_iter()
                .map(|u| (u, (&cur - &u.to_gint()).div_one_plus_i().expect("units are ≡ 1 mod 1+i")))
                .find(|(_, next)| phi(next).ok() == level.checked_sub(1))
                .unwrap_or_else(|| panic!("no unit digit lowers phi at {cur}"));
            digits.push(Some(u));
            cur = next;
        }
        level -= 1;
    }
    Ok(Expansion { digits })
}

/// Least expansion degree of `z` by breadth-first search over digit choices.
///
/// From `v`, the only move is `v/(1+i)` when `(1+i) | v`; otherwise each unit
/// `d` moves to `(v - d)/(1+i)`. The degree is one less than the number of
/// moves needed to reach 0. Operands with norm above [`BFS_NORM_CAP`] are
/// refused.
pub fn min_degree_bfs(z: &GInt) -> Result<u64> {
    if z.is_zero() {
        return Err(Error::ZeroInput("min_degree_bfs"));
    }
    let norm = z.norm();
    if norm > BigUint::from(BFS_NORM_CAP) {
        return Err(Error::NormCapExceeded { norm: norm.to_string(), cap: BFS_NORM_CAP });
    }
    let start = (z.x.to_i64().expect("capped"), z.y.to_i64().expect("capped"));

    const UNITS: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    let halve = |(x, y): (i64, i64)| -> Option<(i64, i64)> {
        ((x + y) % 2 == 0).then(|| ((x + y) / 2, (y - x) / 2))
    };

    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([(start, 0u64)]);
    while let Some((v, moves)) = queue.pop_front() {
        let children: Vec<(i64, i64)> = match halve(v) {
            Some(next) => vec![next],
            None => UNITS
                .iter()
                .map(|&(dx, dy)| halve((v.0 - dx, v.1 - dy)).expect("odd class"))
                .collect(),
        };
        for child in children {
            if child == (0, 0) {
                return Ok(moves);
            }
            if seen.insert(child) {
                queue.push_back((child, moves + 1));
            }
        }
    }
    unreachable!("every nonzero Gaussian integer has a (1+i)-ary expansion")
}
