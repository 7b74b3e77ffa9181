use cspkit::actions::{cycle_lengths, permutation, ActionId, ActionSpec};
use cspkit::csp::*;
use cspkit::families::FamilySpec;
use cspkit::qpoly::{eval_at_root, IntPoly};
use cspkit::Params;
use num_bigint::BigInt;

#[test]
fn every_triple_passes_at_small_n() {
    for info in TRIPLES {
        let mut checked = 0;
        for p in instances(info.id, 5) {
            let r = verify_triple(info.id, &p).unwrap();
            assert!(r.pass, "{r}");
            checked += 1;
        }
        assert!(checked > 0, "{} has no instances", info.id);
    }
}

#[test]
fn fixed_point_examples() {
    let rot = |o| ActionSpec::new(ActionId::Rot, o);
    assert_eq!(count_fixed(&FamilySpec::Ncm { n: 3 }, &rot(6), 3).unwrap(), 3);
    assert_eq!(count_fixed(&FamilySpec::Tri { n: 6 }, &rot(6), 2).unwrap(), 2);
    for spec in [FamilySpec::Ncm { n: 4 }, FamilySpec::Ncp { n: 4 }, FamilySpec::Ncc { n: 5 }] {
        let a = if matches!(spec, FamilySpec::Ncm { .. }) { rot(8) } else { rot(4) };
        let all = spec.enumerate().unwrap().len();
        assert_eq!(count_fixed(&spec, &a, a.order).unwrap(), all);
    }
}

#[test]
fn reduced_counts_agree_for_non_divisors() {
    let cases = [
        (FamilySpec::Ncm { n: 4 }, ActionSpec::new(ActionId::Rot, 8)),
        (FamilySpec::Syt { n: 3 }, ActionSpec::new(ActionId::Promotion, 6)),
        (FamilySpec::Ncc { n: 6 }, ActionSpec::new(ActionId::Twist, 10)),
        (FamilySpec::Tri { n: 7 }, ActionSpec::new(ActionId::Rot, 7)),
    ];
    for (spec, a) in cases {
        for d in 1..=2 * a.order + 1 {
            assert_eq!(count_fixed(&spec, &a, d).unwrap(), count_fixed_reduced(&spec, &a, d).unwrap(), "{spec} {a} d={d}");
        }
    }
}

#[test]
fn twist_triple_at_five() {
    let r = verify_triple("T14", &Params::n(5)).unwrap();
    assert!(r.pass);
    assert_eq!(r.size, 132);
    let full = r.rows.iter().find(|row| row.d == 10).unwrap();
    assert_eq!(full.fixed, 132);
    assert_eq!(full.eval, "132");
}

#[test]
fn ear_triple_at_six() {
    let t = triple("T2", &Params::nk(6, 2)).unwrap();
    assert_eq!(t.polynomial.eval_one(), BigInt::from(12));
    assert!(verify_instance(&t).unwrap().pass);
}

#[test]
fn short_edge_triple_at_two() {
    let t = triple("T6", &Params::nk(2, 2)).unwrap();
    assert_eq!(t.polynomial, IntPoly::from_i64s(&[1, 0, 1]));
    let r = verify_instance(&t).unwrap();
    assert!(r.pass);
    assert_eq!(r.size, 2);
}

#[test]
fn out_of_domain_is_an_error() {
    assert!(triple("T2", &Params::nk(6, 4)).is_err());
    assert!(triple("T99", &Params::n(3)).is_err());
    assert!(triple("T4", &Params::n(0)).is_err());
    assert!(triple("T6", &Params::n(3)).is_err());
}

#[test]
fn registered_refinements_hold() {
    for &(parent, child) in REFINEMENTS {
        for n in 2..=5i64 {
            let grid = parameter_grid(parent, n as usize);
            for p in grid {
                let (par, kids) = refinement(parent, child, &p).unwrap();
                if kids.is_empty() {
                    continue;
                }
                let r = verify_refinement(&par, &kids).unwrap();
                assert!(r.pass, "{parent}->{child} n={n}: {:?}", r.witness);
            }
        }
    }
}

#[test]
fn refinement_of_catalan_by_short_edges_up_to_eight() {
    for n in 2..=8 {
        let (par, kids) = refinement("T4", "T6", &Params::n(n)).unwrap();
        assert!(verify_refinement(&par, &kids).unwrap().pass, "n={n}");
    }
}

#[test]
fn single_child_refinement_is_trivial() {
    let t = triple("T4", &Params::n(4)).unwrap();
    assert!(verify_refinement(&t, std::slice::from_ref(&t)).unwrap().pass);
}

#[test]
fn broken_refinement_reports_witness() {
    let parent = triple("T4", &Params::n(4)).unwrap();
    let child = triple("T6", &Params::nk(4, 2)).unwrap();
    let r = verify_refinement(&parent, &[child]).unwrap();
    assert!(!r.pass);
    assert!(!r.disjoint_union);
    assert!(r.witness.is_some());
}

#[test]
fn negative_controls_fail() {
    let mut n1 = false;
    for n in 1..=6 {
        for p in parameter_grid("N1", n).into_iter().chain(parameter_grid("N1b", n)) {
            for id in ["N1", "N1b"] {
                if let Ok(t) = triple(id, &p) {
                    n1 |= !verify_instance(&t).unwrap().pass;
                }
            }
        }
    }
    assert!(n1);
    let r = verify_triple("N2", &Params::n(2)).unwrap();
    assert!(!r.pass);
    assert_eq!(r.size, 6);
    let row = r.first_failure().unwrap();
    assert_eq!((row.d, row.fixed, row.eval.as_str()), (1, 2, "0"));
}

#[test]
fn orbit_profile_matches_fixed_counts() {
    let cases = [
        (FamilySpec::Ncp { n: 5 }, ActionSpec::new(ActionId::Kreweras, 10)),
        (FamilySpec::Ssyt { n: 5, k: 2 }, ActionSpec::new(ActionId::KPromotion, 5)),
        (FamilySpec::Oi { n: 3, s: 3 }, ActionSpec::new(ActionId::Rowmotion, 6)),
    ];
    for (spec, a) in cases {
        let profile = orbit_profile(&spec, &a).unwrap();
        let total: usize = profile.iter().map(|(s, c)| s * c).sum();
        assert_eq!(total, spec.enumerate().unwrap().len());
        for d in divisors(a.order) {
            let from_profile: usize = profile.iter().filter(|(s, _)| d % **s == 0).map(|(s, c)| s * c).sum();
            assert_eq!(from_profile, count_fixed(&spec, &a, d).unwrap());
        }
    }
}

#[test]
fn rows_follow_divisors() {
    let r = verify_triple("T4", &Params::n(6)).unwrap();
    assert_eq!(r.rows.iter().map(|row| row.d).collect::<Vec<_>>(), divisors(12));
    for row in &r.rows {
        assert_eq!(row.order, 12 / row.d as u64);
    }
    let objs = FamilySpec::Ncm { n: 6 }.enumerate().unwrap();
    let cyc = cycle_lengths(&permutation(&ActionSpec::new(ActionId::Rot, 12), &objs).unwrap());
    assert_eq!(fixed_from_cycles(&cyc, 12), objs.len());
    let poly = triple("T4", &Params::n(6)).unwrap().polynomial;
    assert_eq!(eval_at_root(&poly, 12, 5).value, eval_at_root(&poly, 12, 1).value);
}

#[test]
fn report_serialises_without_timing() {
    let r = verify_triple("T5", &Params::n(3)).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert!(v.get("millis").is_none());
    assert_eq!(v["triple"], "T5");
    assert_eq!(v["rows"].as_array().unwrap().len(), divisors(6).len());
}

#[test]
fn manifest_covers_registry() {
    let m = manifest();
    assert_eq!(m.schema, 1);
    for info in TRIPLES {
        let max = m.max_n.get(info.id).copied().unwrap_or_else(|| panic!("{} missing", info.id));
        assert!(max >= min_n(info.id));
    }
}

#[test]
fn t16_note_is_reported() {
    let r = verify_triple("T16", &Params::n(3)).unwrap();
    assert!(r.pass);
    assert!(r.note.is_some());
}
