//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use gaussphi::verify::{self, BoxSpec, VerifyReport};
use gaussphi::{gauss_divide, minimal_divide, minimal_expansion, phi, GInt, Strategy};
use gaussphi_cli::bench;

fn g(s: &str) -> GInt {
    s.parse().unwrap()
}

struct Line {
    ok: bool,
    detail: String,
}

fn suite_ok(r: &VerifyReport, checks: &[&str], limit: Option<Duration>) -> Line {
    let mut ok = r.failure_count == 0;
    let mut parts = vec![format!("{} cases, {} failures, {:.1}s", r.cases, r.failure_count, r.elapsed.as_secs_f64())];
    for name in checks {
        let c = r.check(name).unwrap_or_else(|| panic!("no check {name} in {}", r.suite));
        ok &= c.failed == 0 && c.matched > 0;
        parts.push(format!("{name}={}", c.matched));
    }
    if let Some(limit) = limit {
        ok &= r.elapsed < limit;
    }
    Line { ok, detail: parts.join(", ") }
}

fn criterion_1() -> Line {
    let r = verify::check_phi_oracle(&BoxSpec::new(40, 0)).unwrap();
    let mut line = suite_ok(&r, &["phi_equals_bfs"], Some(Duration::from_secs(60)));
    line.ok &= r.cases == 6560;
    line
}

fn criterion_2() -> Line {
    let r = verify::check_division(&BoxSpec::new(0, 25)).unwrap();
    let mut line = suite_ok(&r, &["reconstruction", "strict_descent"], Some(Duration::from_secs(600)));
    let else_cases = r.tallies.get("condition:else_branch").copied().unwrap_or(0);
    line.ok &= else_cases > 0;
    line.detail.push_str(&format!(", else_branch={else_cases}"));
    line
}

fn criterion_3() -> Line {
    let mut bad = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            bad.push(name.to_string());
        }
    };
    check("phi(4+i)=2", phi(&g("4+i")).unwrap() == 2);
    check("phi(2i)=2", phi(&g("2i")).unwrap() == 2);
    check("gauss(9,4+i)", gauss_divide(&g("9"), &g("4+i")).unwrap() == (g("2-i"), g("2i")));
    let out = minimal_divide(&g("9"), &g("4+i")).unwrap();
    check(
        "minimal(9,4+i)",
        out.phi_r == Some(1) && out.phi_b == 2 && out.strategy == Strategy::SubtractU && &out.quotient * &g("4+i") + &out.remainder == g("9"),
    );
    check("expand(2+i)", minimal_expansion(&g("2+i")).unwrap().to_string() == "1,1");
    check("expand(2)", minimal_expansion(&g("2")).unwrap().to_string() == "0,0,-i");
    Line { ok: bad.is_empty(), detail: if bad.is_empty() { "6 fixtures".into() } else { format!("failed: {}", bad.join(", ")) } }
}

fn criterion_4() -> Line {
    let r = verify::check_lemma_bounds(&BoxSpec::new(0, 25)).unwrap();
    let checks = ["gauss_norm_half", "gauss_l1_bound", "gauss_linf_bound", "strict_bounds_when_phi_not_lower"];
    let mut line = suite_ok(&r, &checks, None);
    // the same run covers every other lemma check; none may fail
    line.ok &= r.failure_count == 0;
    line
}

fn criterion_5() -> Line {
    let r = verify::check_lemma_bounds(&BoxSpec::new(0, 15)).unwrap();
    suite_ok(&r, &["scaling_law", "valuation_fast_path", "diff_is_less", "remainder_properties", "big_diff"], None)
}

fn criterion_6() -> Line {
    let checks = ["engines_agree", "minimal_descends", "norm_descends", "bezout_identity", "gcd_divides_inputs"];
    let boxed = suite_ok(&verify::check_gcd(&BoxSpec::new(0, 12)).unwrap(), &checks, None);
    let random = verify::check_gcd_random(1000, 256, 2024).unwrap();
    let rand_line = suite_ok(&random, &checks, None);
    Line {
        ok: boxed.ok && rand_line.ok && random.cases == 1000,
        detail: format!("box: {}; random 256-bit: {}", boxed.detail, rand_line.detail),
    }
}

fn criterion_7() -> Line {
    let r = verify::check_expansion(&BoxSpec::new(32, 0)).unwrap();
    let mut line = suite_ok(&r, &["round_trip", "degree_equals_phi"], None);
    line.ok &= r.cases == 65 * 65 - 1;
    line
}

fn criterion_8() -> Line {
    let r = verify::check_phi_properties(&BoxSpec::new(40, 0)).unwrap();
    suite_ok(&r, &["unit_invariance", "double_adds_two", "times_one_plus_i_adds_one"], None)
}

fn criterion_9() -> Line {
    let seed = 7;
    let first = bench::run(100_000, 5, seed, &bench::DEFAULT_SIZES);
    let second = bench::run(100_000, 5, seed, &bench::DEFAULT_SIZES);
    let digests = |r: &bench::BenchReport| {
        std::iter::once(&r.requested).chain(&r.scaling).map(|t| t.operand_digest.clone()).collect::<Vec<_>>()
    };
    let sizes: Vec<u64> = first.scaling.iter().map(|t| t.bits).collect();
    let table = bench::render(&first);
    let phi_median = first.requested.ops.iter().find(|o| o.op == "phi").unwrap().median_us;
    Line {
        ok: digests(&first) == digests(&second) && sizes == bench::DEFAULT_SIZES && table.lines().count() == 2 + 3 + 3 + 9,
        detail: format!("deterministic operands, table over {sizes:?}, phi median at 1e5 bits {phi_median:.1}us (measured)"),
    }
}

type Criterion = (&'static str, fn() -> Line);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 phi equals oracle, bound 40", criterion_1),
        ("2 minimal division, pair bound 25", criterion_2),
        ("3 fixtures", criterion_3),
        ("4 Gauss remainder bounds, pair bound 25", criterion_4),
        ("5 lemma suite, pair bound 15", criterion_5),
        ("6 gcd engines and Bezout", criterion_6),
        ("7 expansion, bound 32", criterion_7),
        ("8 invariance, bound 40", criterion_8),
        ("9 bench determinism and scaling table", criterion_9),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let line = run();
        if !line.ok {
            failed += 1;
        }
        println!(
            "{} criterion {name}: {} [{:.1}s]",
            if line.ok { "PASS" } else { "FAIL" },
            line.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
