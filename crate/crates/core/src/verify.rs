//! Exhaustive and randomized property suites.
//!
//! Every suite walks a box of the lattice, evaluates a list of named checks,
//! and returns a [`VerifyReport`]. A check counts the cases where its
//! hypothesis held (`matched`) and where its conclusion then failed. A check
//! whose hypothesis never held is reported as vacuous, never as passed.
//!
//! Work is partitioned over rayon workers by the first operand; partial
//! results merge associatively and counterexamples are kept sorted by case
//! index, so reports do not depend on scheduling.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{GInt, Unit};
use crate::division::{gauss_divide, minimal_divide, select_adjustment, Condition, Strategy};
use crate::error::{Error, Result};
use crate::euclid::{gcd_minimal, gcd_norm, xgcd_with, Engine, EuclidTrace};
use crate::expansion::{min_degree_bfs, minimal_expansion};
use crate::phi::{phi, phi_le, w};
use crate::sample::random_pairs;

/// Largest number of cases any suite will enumerate.
pub const MAX_CASES: u128 = 100_000_000;

/// Counterexamples kept per report; the total is always counted.
pub const MAX_RECORDED: usize = 100;

/// Scaling factors used for the scaling-law check.
pub const SCALE_FACTORS: [(i64, i64); 4] = [(1, 1), (2, 0), (0, 1), (2, -1)];

/// The box `|x|, |y| ≤ bound` for per-element suites and
/// `|x|, |y| ≤ pair_bound` for both operands of pair suites. A bound of 0 is
/// the box `{0}`, in which every suite has no cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoxSpec {
    pub bound: u32,
    pub pair_bound: u32,
}

impl BoxSpec {
    pub fn new(bound: u32, pair_bound: u32) -> BoxSpec {
        BoxSpec { bound, pair_bound }
    }

    pub fn element_cases(&self) -> u128 {
        (2 * self.bound as u128 + 1).pow(2)
    }

    pub fn pair_cases(&self) -> u128 {
        (2 * self.pair_bound as u128 + 1).pow(4)
    }

    fn guard(cases: u128) -> Result<()> {
        if cases > MAX_CASES {
            return Err(Error::BoxTooLarge { cases, limit: MAX_CASES });
        }
        Ok(())
    }
}

/// Lattice points with `|x|, |y| ≤ bound`, `y` outer and `x` inner, both
/// ascending.
pub fn box_points(bound: u32) -> Vec<GInt> {
    let b = i64::from(bound);
    (-b..=b).flat_map(|y| (-b..=b).map(move |x| GInt::new(x, y))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub check: String,
    /// Position of the case in the suite's enumeration order.
    pub index: u64,
    pub input: String,
    pub observed: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub name: String,
    pub matched: u64,
    pub failed: u64,
}

impl CheckTally {
    pub fn is_vacuous(&self) -> bool {
        self.matched == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Failed,
    /// No failures, but at least one check never had its hypothesis met.
    Vacuous,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: u64,
    pub checks: Vec<CheckTally>,
    pub failure_count: u64,
    pub failures: Vec<Counterexample>,
    /// Frequency counts, e.g. division strategies.
    pub tallies: BTreeMap<String, u64>,
    /// First input (in enumeration order) seen for selected tallies.
    pub first_seen: BTreeMap<String, String>,
    /// Reporting suites list counterexamples without treating them as
    /// verification failures.
    pub reporting_only: bool,
    #[serde(serialize_with = "ser_millis")]
    pub elapsed: Duration,
}

fn ser_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn status(&self) -> Status {
        if !self.passed() {
            Status::Failed
        } else if self.checks.iter().any(CheckTally::is_vacuous) {
            Status::Vacuous
        } else {
            Status::Passed
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn vacuous_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| c.is_vacuous()).map(|c| c.name.as_str()).collect()
    }
}

/// Partial results of one worker.
#[derive(Clone, Debug, Default)]
struct Acc {
    cases: u64,
    checks: Vec<(u64, u64)>,
    failure_count: u64,
    failures: Vec<Counterexample>,
    tallies: BTreeMap<String, u64>,
    first_seen: BTreeMap<String, (u64, String)>,
}

impl Acc {
    fn new(n_checks: usize) -> Acc {
        Acc { checks: vec![(0, 0); n_checks], ..Acc::default() }
    }

    /// Records one hypothesis hit for check `k`.
    fn record(&mut self, names: &[&str], k: usize, index: u64, input: &dyn Fn() -> String, outcome: Outcome) {
        self.checks[k].0 += 1;
        if let Err((observed, expected)) = outcome {
            self.checks[k].1 += 1;
            self.failure_count += 1;
            self.failures.push(Counterexample {
                check: names[k].to_string(),
                index,
                input: input(),
                observed,
                expected,
            });
            if self.failures.len() > 4 * MAX_RECORDED {
                self.trim();
            }
        }
    }

    fn tally(&mut self, key: &str, index: u64, input: &dyn Fn() -> String) {
        *self.tallies.entry(key.to_string()).or_default() += 1;
        let slot = self.first_seen.entry(key.to_string()).or_insert_with(|| (index, input()));
        if index < slot.0 {
            *slot = (index, input());
        }
    }

    fn trim(&mut self) {
        self.failures.sort_by(|a, b| (a.index, &a.check).cmp(&(b.index, &b.check)));
        self.failures.truncate(MAX_RECORDED);
    }

    fn merge(mut self, other: Acc) -> Acc {
        self.cases += other.cases;
        for (mine, theirs) in self.checks.iter_mut().zip(other.checks) {
            mine.0 += theirs.0;
            mine.1 += theirs.1;
        }
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self.trim();
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
        for (k, v) in other.first_seen {
            let slot = self.first_seen.entry(k).or_insert_with(|| v.clone());
            if v.0 < slot.0 {
                *slot = v;
            }
        }
        self
    }

    fn into_report(mut self, suite: &str, names: &[&str], reporting_only: bool, elapsed: Duration) -> VerifyReport {
        self.trim();
        VerifyReport {
            suite: suite.to_string(),
            cases: self.cases,
            checks: names
                .iter()
                .zip(&self.checks)
                .map(|(n, &(matched, failed))| CheckTally { name: n.to_string(), matched, failed })
                .collect(),
            failure_count: self.failure_count,
            failures: self.failures,
            tallies: self.tallies,
            first_seen: self.first_seen.into_iter().map(|(k, (_, s))| (k, s)).collect(),
            reporting_only,
            elapsed,
        }
    }
}

/// `Ok` when a conclusion holds, otherwise `(observed, expected)`.
type Outcome = std::result::Result<(), (String, String)>;

fn expect_eq<T: PartialEq + std::fmt::Display>(observed: T, expected: T) -> Outcome {
    if observed == expected {
        Ok(())
    } else {
        Err((observed.to_string(), expected.to_string()))
    }
}

fn expect(ok: bool, observed: impl FnOnce() -> String, expected: &str) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err((observed(), expected.to_string()))
    }
}

fn int(u: BigUint) -> BigInt {
    BigInt::from(u)
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// Runs `body(index, a, b, acc)` over every ordered pair of box points with
/// `b ≠ 0`, partitioned by `a`.
fn for_pairs<F>(pair_bound: u32, n_checks: usize, body: F) -> Acc
where
    F: Fn(u64, &GInt, &GInt, &mut Acc) + Sync,
{
    let points = box_points(pair_bound);
    let len = points.len() as u64;
    points
        .par_iter()
        .enumerate()
        .fold(
            || Acc::new(n_checks),
            |mut acc, (ia, a)| {
                for (ib, b) in points.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    acc.cases += 1;
                    body(ia as u64 * len + ib as u64, a, b, &mut acc);
                }
                acc
            },
        )
        .reduce(|| Acc::new(n_checks), Acc::merge)
}

/// Runs `body(index, z, acc)` over every nonzero box point.
fn for_points<F>(bound: u32, n_checks: usize, body: F) -> Acc
where
    F: Fn(u64, &GInt, &mut Acc) + Sync,
{
    box_points(bound)
        .par_iter()
        .enumerate()
        .filter(|(_, z)| !z.is_zero())
        .fold(
            || Acc::new(n_checks),
            |mut acc, (k, z)| {
                acc.cases += 1;
                body(k as u64, z, &mut acc);
                acc
            },
        )
        .reduce(|| Acc::new(n_checks), Acc::merge)
}

const PHI_ORACLE_CHECKS: [&str; 1] = ["phi_equals_bfs"];

/// φ against the brute-force least expansion degree on every nonzero point.
pub fn check_phi_oracle(spec: &BoxSpec) -> Result<VerifyReport> {
    BoxSpec::guard(spec.element_cases())?;
    let start = Instant::now();
    let names = &PHI_ORACLE_CHECKS;
    let acc = for_points(spec.bound, names.len(), |k, z, acc| {
        let outcome = match (phi(z), min_degree_bfs(z)) {
            (Ok(f), Ok(o)) => expect_eq(f, o),
            (f, o) => Err((format!("{f:?}"), format!("{o:?}"))),
        };
        acc.record(names, 0, k, &|| z.to_string(), outcome);
    });
    Ok(acc.into_report("phi-oracle", names, false, start.elapsed()))
}

const PHI_PROPERTY_CHECKS: [&str; 7] = [
    "unit_invariance",
    "double_adds_two",
    "times_one_plus_i_adds_one",
    "oracle_double_adds_two",
    "oracle_times_one_plus_i_adds_one",
    "phi_le_agrees",
    "phi_le_m_bound",
];

/// Unit invariance and shift laws of φ, the same shift laws on the oracle,
/// agreement of `phi_le` with φ, and the bound `m(z) ≤ w(n-1) - 2^(v2+1)`
/// whenever `φ(z) ≤ n`.
pub fn check_phi_properties(spec: &BoxSpec) -> Result<VerifyReport> {
    BoxSpec::guard(spec.element_cases())?;
    let start = Instant::now();
    let names = &PHI_PROPERTY_CHECKS;
    let acc = for_points(spec.bound, names.len(), |k, z, acc| {
        let input = || z.to_string();
        let f = phi(z).expect("nonzero");
        let rotated: Vec<u64> = Unit::ALL.iter().map(|u| phi(&u.apply(z)).expect("nonzero")).collect();
        acc.record(
            names,
            0,
            k,
            &input,
            expect(rotated.iter().all(|&v| v == f), || format!("{rotated:?}"), "all equal to phi(z)"),
        );
        let doubled = z + z;
        acc.record(names, 1, k, &input, expect_eq(phi(&doubled).unwrap(), f + 2));
        let shifted = z.mul_one_plus_i();
        acc.record(names, 2, k, &input, expect_eq(phi(&shifted).unwrap(), f + 1));
        let o = min_degree_bfs(z).unwrap();
        acc.record(names, 3, k, &input, expect_eq(min_degree_bfs(&doubled).unwrap(), o + 2));
        acc.record(names, 4, k, &input, expect_eq(min_degree_bfs(&shifted).unwrap(), o + 1));
        let answers: Vec<bool> = (0..=f + 2).map(|n| phi_le(z, n).unwrap()).collect();
        let truth: Vec<bool> = (0..=f + 2).map(|n| f <= n).collect();
        acc.record(names, 5, k, &input, expect(answers == truth, || format!("{answers:?}"), "phi(z) <= n"));
        if f >= 1 {
            // w(n-1) grows with n, so n = φ(z) is the tightest instance
            let cap = int(w(f - 1)) - pow2(z.v2().unwrap() + 1);
            let m = int(z.m_min());
            acc.record(names, 6, k, &input, expect(m <= cap, || m.to_string(), &format!("<= {cap}")));
        }
    });
    Ok(acc.into_report("phi-properties", names, false, start.elapsed()))
}

const EXPANSION_CHECKS: [&str; 4] = ["round_trip", "degree_equals_phi", "degree_equals_bfs", "zero_digit_iff_divisible"];

/// Greedy expansions: round trip, optimal degree, and zero digits exactly at
/// the positions where `1+i` divides the partial quotient.
pub fn check_expansion(spec: &BoxSpec) -> Result<VerifyReport> {
    BoxSpec::guard(spec.element_cases())?;
    let start = Instant::now();
    let names = &EXPANSION_CHECKS;
    let acc = for_points(spec.bound, names.len(), |k, z, acc| {
        let input = || z.to_string();
        let e = minimal_expansion(z).expect("nonzero");
        let degree = e.degree().expect("nonempty");
        acc.record(names, 0, k, &input, expect_eq(e.eval(), z.clone()));
        acc.record(names, 1, k, &input, expect_eq(degree, phi(z).unwrap()));
        acc.record(names, 2, k, &input, expect_eq(degree, min_degree_bfs(z).unwrap()));
        let mut partial = z.clone();
        let mut ok = true;
        for d in e.digits() {
            let divisible = partial.div_one_plus_i().is_some();
            ok &= divisible == d.is_none();
            let digit = d.map(Unit::to_gint).unwrap_or_default();
            partial = (&partial - &digit).div_one_plus_i().expect("digit matches class");
        }
        ok &= partial.is_zero();
        acc.record(names, 3, k, &input, expect(ok, || e.to_string(), "zero digits exactly at (1+i)-divisible steps"));
    });
    Ok(acc.into_report("expansion", names, false, start.elapsed()))
}

const DIVISION_CHECKS: [&str; 5] = [
    "reconstruction",
    "strict_descent",
    "gauss_reconstruction",
    "adjustment_is_unit",
    "else_branch_sign_defined",
];

/// `minimal_divide` on every ordered pair: reconstruction, strict φ descent,
/// and the shape of the adjustment. Tallies strategies and conditions.
pub fn check_division(spec: &BoxSpec) -> Result<VerifyReport> {
    BoxSpec::guard(spec.pair_cases())?;
    let start = Instant::now();
    let names = &DIVISION_CHECKS;
    let acc = for_pairs(spec.pair_bound, names.len(), |k, a, b, acc| {
        let input = || format!("a={a}, b={b}");
        let out = minimal_divide(a, b).expect("b nonzero");
        acc.record(names, 0, k, &input, expect_eq(&out.quotient * b + &out.remainder, a.clone()));
        let descends = match out.phi_r {
            None => out.remainder.is_zero(),
            Some(pr) => pr < out.phi_b && phi(&out.remainder).ok() == Some(pr),
        };
        acc.record(
            names,
            1,
            k,
            &input,
            expect(descends, || format!("phi(r)={:?}, r={}", out.phi_r, out.remainder), &format!("r = 0 or phi(r) < {}", out.phi_b)),
        );
        acc.record(names, 2, k, &input, expect_eq(&out.gauss_quotient * b + &out.gauss_remainder, a.clone()));
        if out.strategy != Strategy::Gauss {
            let delta = &out.quotient - &out.gauss_quotient;
            acc.record(names, 3, k, &input, expect(delta.is_unit(), || delta.to_string(), "a unit"));
        }
        if out.strategy == Strategy::SubtractIu {
            let s = out.gauss_remainder.s_sign().unwrap();
            acc.record(names, 4, k, &input, expect(s != 0, || s.to_string(), "s(r) = ±1"));
        }
        acc.tally(&format!("strategy:{}", out.strategy.as_str()), k, &input);
        if let Some(c) = out.condition {
            acc.tally(&format!("condition:{}", c.as_str()), k, &input);
        }
    });
    Ok(acc.into_report("division", names, false, start.elapsed()))
}

const LEMMA_CHECKS: [&str; 17] = [
    "gauss_norm_half",
    "gauss_l1_bound",
    "gauss_linf_bound",
    "strict_bounds_when_phi_not_lower",
    "scaling_law",
    "valuation_fast_path",
    "diff_is_less",
    "val_nmid_adjusts",
    "remainder_properties",
    "big_diff",
    "im_align",
    "twisted_forms",
    "m_b_geq_linf_r",
    "m_sum_leq_linf_r",
    "band_small_gap",
    "band_large_gap",
    "adjustment_descends",
];

/// The intermediate inequalities behind minimal division, each checked on the
/// pairs satisfying its hypothesis. Scaling is checked for every factor in
/// [`SCALE_FACTORS`].
pub fn check_lemma_bounds(spec: &BoxSpec) -> Result<VerifyReport> {
    BoxSpec::guard(spec.pair_cases() * (SCALE_FACTORS.len() as u128 + 1))?;
    let start = Instant::now();
    let names = &LEMMA_CHECKS;
    let scales: Vec<GInt> = SCALE_FACTORS.iter().map(|&p| GInt::from(p)).collect();
    let acc = for_pairs(spec.pair_bound, names.len(), |k, a, b, acc| {
        let input = || format!("a={a}, b={b}");
        let (q, r) = gauss_divide(a, b).expect("b nonzero");
        let n = phi(b).unwrap();
        let (l1_b, linf_b, m_b) = (int(b.l1()), int(b.linf()), int(b.m_min()));
        let (l1_r, linf_r, m_r) = (int(r.l1()), int(r.linf()), int(r.m_min()));
        let v2_b = b.v2().unwrap();

        let (nm_r, nm_b) = (r.norm(), b.norm());
        acc.record(names, 0, k, &input, expect(&nm_r * 2u32 <= nm_b, || nm_r.to_string(), &format!("<= {nm_b}/2")));
        let w_n = int(w(n));
        acc.record(
            names,
            1,
            k,
            &input,
            expect(l1_r <= linf_b && linf_b < w_n, || format!("l1(r)={l1_r}, linf(b)={linf_b}"), &format!("l1(r) <= linf(b) < {w_n}")),
        );
        let w_prev = (n >= 1).then(|| int(w(n - 1)));
        let linf_ok = &linf_r * 2 <= l1_b && w_prev.as_ref().is_none_or(|wp| l1_b < wp * 2);
        acc.record(names, 2, k, &input, expect(linf_ok, || format!("linf(r)={linf_r}, l1(b)={l1_b}"), "linf(r) <= l1(b)/2 < w(n-1)"));

        for z in &scales {
            let scaled = gauss_divide(&(z * a), &(z * b)).unwrap();
            let want = (q.clone(), z * &r);
            acc.record(
                names,
                4,
                k,
                &|| format!("a={a}, b={b}, z={z}"),
                expect(scaled == want, || format!("({}, {})", scaled.0, scaled.1), &format!("({}, {})", want.0, want.1)),
            );
        }

        if r.is_zero() {
            return;
        }
        let phi_r = phi(&r).unwrap();
        let v2_r = r.v2().unwrap();
        if v2_r <= v2_b {
            acc.record(names, 5, k, &input, expect(phi_r < n, || phi_r.to_string(), &format!("< {n}")));
        }
        if phi_r < n {
            return;
        }

        // φ(r) ≥ φ(b) = n from here on, which forces n ≥ 1
        acc.record(
            names,
            3,
            k,
            &input,
            expect(&linf_r * 2 < l1_b && l1_r < linf_b, || format!("linf(r)={linf_r}, l1(r)={l1_r}"), "2 linf(r) < l1(b) and l1(r) < linf(b)"),
        );
        let three_2v2b = BigInt::from(3) * pow2(v2_b);
        acc.record(
            names,
            6,
            k,
            &input,
            expect(&linf_b - &m_b <= &w_n - &three_2v2b, || (&linf_b - &m_b).to_string(), &format!("<= {}", &w_n - &three_2v2b)),
        );

        let w_prev = w_prev.expect("n >= 1");
        let ub = b.canonical_unit().unwrap();
        let ur = r.canonical_unit().unwrap();
        let ub_b = ub.apply(b);
        let ur_r = ur.apply(&r);
        let after_u = &r - &ub.div(ur).apply(b);
        let phi_or_zero = |z: &GInt| if z.is_zero() { None } else { phi(z).ok() };
        let descends = |z: &GInt| phi_or_zero(z).is_none_or(|p| p < n);
        let cap_b = &w_prev - pow2(v2_b + 1);
        let pow_r = pow2(v2_r);
        let divides_w_prev = (&w_prev % &pow_r).is_zero();

        if !divides_w_prev {
            acc.record(
                names,
                7,
                k,
                &input,
                expect(m_r.is_zero() && descends(&after_u), || format!("m(r)={m_r}, phi={:?}", phi_or_zero(&after_u)), "m(r) = 0 and phi(r - u_b/u_r b) < n"),
            );
        } else {
            let w_gap = &w_n - &w_prev;
            let at_top = linf_r == &w_prev - &pow_r;
            let props = (at_top || l1_r >= &w_n - pow2(v2_r + 1))
                && linf_r >= w_gap
                && l1_r >= &w_prev - &pow_r
                && (at_top || m_r >= w_gap);
            acc.record(names, 8, k, &input, expect(props, || format!("linf(r)={linf_r}, l1(r)={l1_r}, m(r)={m_r}"), "remainder lower bounds"));
            let big = m_r <= cap_b && linf_r <= cap_b && &linf_b - &linf_r <= cap_b;
            acc.record(
                names,
                9,
                k,
                &input,
                expect(big, || format!("m(r)={m_r}, linf(r)={linf_r}, linf(b)-linf(r)={}", &linf_b - &linf_r), &format!("all <= {cap_b}")),
            );
        }

        let s = r.s_sign().unwrap();
        let twist_unit = (s != 0).then(|| {
            let su_r = if s > 0 { ur } else { ur.mul(Unit::NegOne) };
            Unit::I.mul(ub).div(su_r)
        });
        let after_iu = twist_unit.map(|c| &r - &c.apply(b));
        let aligned = (&ub_b.y * &ur_r.y) >= BigInt::zero();
        let observe = |z: &GInt| format!("{z} (phi {:?})", phi_or_zero(z));
        if aligned {
            acc.record(names, 10, k, &input, expect(descends(&after_u), || observe(&after_u), "phi < n"));
        } else {
            let after_iu = after_iu.expect("s(r) != 0 when imaginary parts disagree");
            let d1 = &ub_b - &ur_r;
            // u_b·b + s(r)·i·u_r·r
            let rot = Unit::I.apply(&ur_r);
            let d2 = if s > 0 { &ub_b + &rot } else { &ub_b - &rot };
            let forms = d1.x == &linf_b - &linf_r
                && int(d1.y.magnitude().clone()) == &m_b + &m_r
                && d2.x == &linf_b - &m_r
                && d2.y.magnitude() == (&m_b - &linf_r).magnitude();
            acc.record(names, 11, k, &input, expect(forms, || format!("{d1}, {d2}"), "twisted coordinate forms"));
            if m_b >= linf_r {
                acc.record(names, 12, k, &input, expect(descends(&after_iu), || observe(&after_iu), "phi < n"));
            }
            if &m_r + &m_b <= linf_r {
                acc.record(names, 13, k, &input, expect(descends(&after_u), || observe(&after_u), "phi < n"));
            }
            if m_b < linf_r && linf_r < &m_b + &m_r {
                if &linf_b - &m_r <= cap_b {
                    acc.record(names, 14, k, &input, expect(descends(&after_iu), || observe(&after_iu), "phi < n"));
                } else {
                    acc.record(names, 15, k, &input, expect(descends(&after_u), || observe(&after_u), "phi < n"));
                }
            }
        }

        let (unit, condition) = select_adjustment(b, &r, n).unwrap();
        let chosen = &r - &unit.apply(b);
        let expected_unit = if condition == Condition::ElseBranch { twist_unit } else { Some(ub.div(ur)) };
        acc.record(
            names,
            16,
            k,
            &input,
            expect(descends(&chosen) && expected_unit == Some(unit), || observe(&chosen), "phi < n via the selected unit"),
        );
    });
    Ok(acc.into_report("lemmas", names, false, start.elapsed()))
}

const COROLLARY4_CHECKS: [&str; 1] = ["v2_a_le_v2_b_implies_descent"];

/// Tests, literally, whether `v2(a) ≤ v2(b)` forces the Gauss remainder to
/// have φ below φ(b). Counterexamples are reported, not treated as failures
/// of this library.
pub fn check_corollary4(spec: &BoxSpec) -> Result<VerifyReport> {
    BoxSpec::guard(spec.pair_cases())?;
    let start = Instant::now();
    let names = &COROLLARY4_CHECKS;
    let acc = for_pairs(spec.pair_bound, names.len(), |k, a, b, acc| {
        if a.is_zero() || a.v2().unwrap() > b.v2().unwrap() {
            return;
        }
        let (_, r) = gauss_divide(a, b).unwrap();
        let n = phi(b).unwrap();
        let phi_r = (!r.is_zero()).then(|| phi(&r).unwrap());
        let outcome = expect(
            phi_r.is_none_or(|p| p < n),
            || format!("r={r}, phi(r)={}", phi_r.unwrap_or_default()),
            &format!("r = 0 or phi(r) < {n}"),
        );
        acc.record(names, 0, k, &|| format!("a={a}, b={b}"), outcome);
    });
    Ok(acc.into_report("corollary4", names, true, start.elapsed()))
}

const GCD_CHECKS: [&str; 5] = ["engines_agree", "minimal_descends", "norm_descends", "bezout_identity", "gcd_divides_inputs"];

fn gcd_case(a: &GInt, b: &GInt, k: u64, acc: &mut Acc) {
    let names = &GCD_CHECKS;
    let input = || format!("a={a}, b={b}");
    let tm: EuclidTrace = gcd_minimal(a, b).unwrap();
    let tn: EuclidTrace = gcd_norm(a, b).unwrap();
    acc.record(names, 0, k, &input, expect_eq(&tm.gcd_canonical, &tn.gcd_canonical));
    acc.record(names, 1, k, &input, expect(tm.measure_descends(), || format!("{} steps", tm.steps.len()), "strictly decreasing phi"));
    acc.record(names, 2, k, &input, expect(tn.measure_descends(), || format!("{} steps", tn.steps.len()), "strictly decreasing norm"));
    for engine in [Engine::Minimal, Engine::Norm] {
        let bz = xgcd_with(a, b, engine).unwrap();
        let lhs = &bz.s * a + &bz.t * b;
        acc.record(names, 3, k, &input, expect(lhs == bz.g && bz.g == tm.gcd_canonical, || lhs.to_string(), &bz.g.to_string()));
    }
    let g = &tm.gcd_canonical;
    acc.record(names, 4, k, &input, expect(g.divides(a) && g.divides(b), || g.to_string(), "a common divisor"));
    *acc.tallies.entry("steps:minimal".into()).or_default() += tm.steps.len() as u64;
    *acc.tallies.entry("steps:norm".into()).or_default() += tn.steps.len() as u64;
}

/// Both gcd engines on every ordered pair that is not `(0, 0)`.
pub fn check_gcd(spec: &BoxSpec) -> Result<VerifyReport> {
    BoxSpec::guard(spec.pair_cases())?;
    let start = Instant::now();
    let points = box_points(spec.pair_bound);
    let zero = GInt::zero();
    let acc = for_pairs(spec.pair_bound, GCD_CHECKS.len(), |k, a, b, acc| gcd_case(a, b, k, acc));
    // pairs (a, 0) are skipped by the pair walker
    let tail = points
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .fold(Acc::new(GCD_CHECKS.len()), |mut acc, (ia, a)| {
            acc.cases += 1;
            gcd_case(a, &zero, (points.len() * points.len() + ia) as u64, &mut acc);
            acc
        });
    Ok(acc.merge(tail).into_report("gcd", &GCD_CHECKS, false, start.elapsed()))
}

/// Both gcd engines on `count` seeded random pairs of `bits`-bit operands.
pub fn check_gcd_random(count: usize, bits: u64, seed: u64) -> Result<VerifyReport> {
    BoxSpec::guard(count as u128)?;
    let start = Instant::now();
    let pairs = random_pairs(count, bits, seed);
    let acc = pairs
        .par_iter()
        .enumerate()
        .fold(
            || Acc::new(GCD_CHECKS.len()),
            |mut acc, (k, (a, b))| {
                acc.cases += 1;
                gcd_case(a, b, k as u64, &mut acc);
                acc
            },
        )
        .reduce(|| Acc::new(GCD_CHECKS.len()), Acc::merge);
    Ok(acc.into_report("gcd-random", &GCD_CHECKS, false, start.elapsed()))
}

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 7] = ["phi-oracle", "phi-properties", "expansion", "division", "lemmas", "corollary4", "gcd"];

pub fn run_suite(name: &str, spec: &BoxSpec) -> Option<Result<VerifyReport>> {
    Some(match name {
        "phi-oracle" => check_phi_oracle(spec),
        "phi-properties" => check_phi_properties(spec),
        "expansion" => check_expansion(spec),
        "division" => check_division(spec),
        "lemmas" => check_lemma_bounds(spec),
        "corollary4" => check_corollary4(spec),
        "gcd" => check_gcd(spec),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_order_and_size() {
        let pts = box_points(1);
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0], GInt::new(-1, -1));
        assert_eq!(pts[1], GInt::new(0, -1));
        assert_eq!(pts[8], GInt::new(1, 1));
        assert_eq!(BoxSpec::new(40, 25).element_cases(), 6561);
        assert_eq!(BoxSpec::new(40, 25).pair_cases(), 51u128.pow(4));
    }

    #[test]
    fn guards_refuse_huge_boxes() {
        let spec = BoxSpec::new(10, 60);
        assert!(matches!(check_division(&spec), Err(Error::BoxTooLarge { .. })));
        assert!(matches!(check_phi_oracle(&BoxSpec::new(6000, 1)), Err(Error::BoxTooLarge { .. })));
    }

    #[test]
    fn phi_oracle_small_boxes() {
        let r = check_phi_oracle(&BoxSpec::new(1, 1)).unwrap();
        assert_eq!(r.cases, 8);
        assert!(r.passed());
        let r = check_phi_oracle(&BoxSpec::new(8, 1)).unwrap();
        assert_eq!((r.cases, r.failure_count), (288, 0));
        assert_eq!(r.status(), Status::Passed);
    }

    #[test]
    fn empty_box_has_no_cases() {
        let r = check_corollary4(&BoxSpec::new(0, 0)).unwrap();
        assert_eq!(r.cases, 0);
        assert_eq!(r.status(), Status::Vacuous);
        assert_eq!(r.vacuous_checks(), vec!["v2_a_le_v2_b_implies_descent"]);
    }

    #[test]
    fn merge_is_order_independent() {
        let names = ["c"];
        let mk = |idx: &[u64]| {
            let mut acc = Acc::new(1);
            for &i in idx {
                acc.record(&names, 0, i, &|| i.to_string(), Err(("x".into(), "y".into())));
                acc.tally("t", i, &|| i.to_string());
            }
            acc
        };
        let left = mk(&[5, 1]).merge(mk(&[3])).into_report("s", &names, false, Duration::ZERO);
        let right = mk(&[3]).merge(mk(&[5, 1])).into_report("s", &names, false, Duration::ZERO);
        let ids = |r: &VerifyReport| r.failures.iter().map(|f| f.index).collect::<Vec<_>>();
        assert_eq!(ids(&left), vec![1, 3, 5]);
        assert_eq!(ids(&left), ids(&right));
        assert_eq!(left.first_seen, right.first_seen);
        assert_eq!(left.first_seen["t"], "1");
    }
}
