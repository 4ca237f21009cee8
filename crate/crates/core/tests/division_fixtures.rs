use gaussphi::verify::{self, BoxSpec};
use gaussphi::{gauss_divide, min_degree_bfs, minimal_divide, Condition, GInt, Strategy};

fn g(s: &str) -> GInt {
    s.parse().unwrap()
}

#[test]
fn else_branch_pair() {
    let (a, b) = (g("-25-25i"), g("-8-25i"));
    assert_eq!(gauss_divide(&a, &b).unwrap(), (g("1-i"), g("8-8i")));
    let out = minimal_divide(&a, &b).unwrap();
    assert_eq!(out.strategy, Strategy::SubtractIu);
    assert_eq!(out.condition, Some(Condition::ElseBranch));
    assert_eq!((out.quotient.clone(), out.remainder.clone()), (g("1"), g("-17")));
    assert_eq!(min_degree_bfs(&b).unwrap(), 7);
    assert_eq!(min_degree_bfs(&g("8-8i")).unwrap(), 7);
    assert_eq!(min_degree_bfs(&out.remainder).unwrap(), 6);
    assert_eq!((out.phi_b, out.phi_r), (7, Some(6)));
}

#[test]
fn third_condition_pair() {
    let (a, b) = (g("-25-25i"), g("-9-19i"));
    let out = minimal_divide(&a, &b).unwrap();
    assert_eq!(out.condition, Some(Condition::Cond3));
    assert_eq!((out.quotient.clone(), out.remainder.clone()), (g("2"), g("-7+13i")));
    assert_eq!((out.phi_b, out.phi_r), (6, Some(5)));
    assert_eq!(min_degree_bfs(&out.remainder).unwrap(), 5);
}

#[test]
fn second_condition_pair() {
    let out = minimal_divide(&g("-11-12i"), &g("-4-9i")).unwrap();
    assert_eq!(out.condition, Some(Condition::Cond2));
    assert_eq!(&out.quotient * &g("-4-9i") + &out.remainder, g("-11-12i"));
    assert!(min_degree_bfs(&out.remainder).unwrap() < min_degree_bfs(&g("-4-9i")).unwrap());
}

#[test]
fn division_tallies_are_pinned() {
    let r = verify::check_division(&BoxSpec::new(0, 12)).unwrap();
    assert!(r.passed());
    assert_eq!(r.cases, 390_000);
    let tally = |k: &str| r.tallies.get(k).copied().unwrap_or(0);
    assert_eq!(tally("strategy:gauss"), 372_432);
    assert_eq!(tally("strategy:subtract_u"), 14_048);
    assert_eq!(tally("strategy:subtract_iu"), 3_520);
    assert_eq!(tally("condition:cond1"), 13_632);
    assert_eq!(tally("condition:cond2"), 416);
    assert_eq!(tally("condition:cond3"), 0);
    assert_eq!(r.first_seen["condition:else_branch"], "a=-12-12i, b=-1-6i");
}

#[test]
fn scaling_by_one_plus_i_at_bound_ten() {
    let r = verify::check_lemma_bounds(&BoxSpec::new(0, 10)).unwrap();
    assert!(r.passed(), "{:?}", r.failures.first());
    assert!(r.check("scaling_law").unwrap().matched > 0);
}

#[test]
fn empty_box_is_vacuous() {
    let r = verify::check_corollary4(&BoxSpec::new(0, 0)).unwrap();
    assert_eq!(r.cases, 0);
    assert_eq!(r.status(), verify::Status::Vacuous);
    let r = verify::check_phi_oracle(&BoxSpec::new(1, 0)).unwrap();
    assert_eq!(r.cases, 8);
    assert!(r.passed());
}

#[test]
fn oversized_box_is_rejected() {
    assert!(verify::check_division(&BoxSpec::new(0, 100)).is_err());
}
