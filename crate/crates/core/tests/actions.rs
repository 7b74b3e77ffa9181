use cspkit::actions::*;
use cspkit::csp::orbit_profile;
use cspkit::families::{CombObject, FamilySpec};
use cspkit::stats::{statistic, StatId};

fn a(id: ActionId, order: usize) -> ActionSpec {
    ActionSpec::new(id, order)
}

#[test]
fn twist_example() {
    let c = CombObject::ncc_from(12, &[(3, 4), (7, 12), (8, 10)], &[5, 6]);
    let img = act(&a(ActionId::Twist, 24), &c).unwrap();
    assert_eq!(img, CombObject::ncc_from(12, &[(4, 5), (1, 8), (9, 11)], &[2, 6, 7]));
}

#[test]
fn twist_is_rotation_after_flip() {
    for n in 1..=7 {
        for x in (FamilySpec::Nccb { n: n + 1 }).enumerate().unwrap() {
            let flipped = act(&a(ActionId::Flip, 2), &x).unwrap();
            let expected = act(&a(ActionId::Rot, n), &flipped).unwrap();
            assert_eq!(act(&a(ActionId::Twist, 2 * n), &x).unwrap(), expected);
        }
    }
}

#[test]
fn flip_ignores_proper_edges_at_vertex_one() {
    let c = CombObject::ncc_from(4, &[(1, 3)], &[2]);
    assert_eq!(act(&a(ActionId::Flip, 2), &c).unwrap(), c);
    let iso = CombObject::ncc_from(4, &[(2, 3)], &[]);
    let looped = act(&a(ActionId::Flip, 2), &iso).unwrap();
    assert_eq!(looped, CombObject::ncc_from(4, &[(2, 3)], &[1]));
    assert_eq!(act(&a(ActionId::Flip, 2), &looped).unwrap(), iso);
}

#[test]
fn squared_twist_keeps_the_mark() {
    for n in 1..=6 {
        for x in (FamilySpec::Nccb { n: n + 1 }).enumerate().unwrap() {
            let y = act(&a(ActionId::TwistSquared, n), &x).unwrap();
            let (CombObject::Ncc { marked: m0, .. }, CombObject::Ncc { marked: m1, .. }) = (&x, &y) else {
                unreachable!()
            };
            assert_eq!(m0.is_some(), m1.is_some());
        }
    }
}

#[test]
fn two_column_increment_example() {
    let t = CombObject::Ssyt2Col { max: 7, rows: vec![(1, 2), (2, 3), (3, 4), (7, 7)] };
    let img = act(&a(ActionId::PhiSsyt, 8), &t).unwrap();
    assert_eq!(img, CombObject::Ssyt2Col { max: 7, rows: vec![(1, 3), (2, 4), (3, 5), (4, 7)] });
}

#[test]
fn promotion_full_power_is_identity() {
    let n = 4;
    let p = a(ActionId::Promotion, 2 * n);
    for x in (FamilySpec::Syt { n }).enumerate().unwrap() {
        assert_eq!(act_pow(&p, &x, 2 * n).unwrap(), x);
    }
}

#[test]
fn promotion_agrees_with_jeu_de_taquin() {
    for n in 1..=5 {
        for x in (FamilySpec::Syt { n }).enumerate().unwrap() {
            assert_eq!(
                act(&a(ActionId::Promotion, 2 * n), &x).unwrap(),
                act(&a(ActionId::JdtPromotion, 2 * n), &x).unwrap()
            );
        }
    }
}

#[test]
fn skew_k_promotion_orbit_has_size_three() {
    // rows of the skew shape (2,2,1)/(1) with entries at most 4, as (column, entry)
    let start: SkewCells = vec![vec![(1, 3)], vec![(0, 1), (1, 4)], vec![(0, 2)]];
    let second: SkewCells = vec![vec![(1, 1)], vec![(0, 2), (1, 4)], vec![(0, 3)]];
    let third: SkewCells = vec![vec![(1, 2)], vec![(0, 1), (1, 3)], vec![(0, 4)]];
    let mut orbit = vec![start.clone()];
    let mut cur = k_promotion_cells(&start, 4);
    while cur != start {
        orbit.push(cur.clone());
        cur = k_promotion_cells(&cur, 4);
    }
    assert_eq!(orbit.len(), 3);
    assert_eq!(orbit, vec![start, second, third]);
}

#[test]
fn declared_orders() {
    let check = |act_spec: ActionSpec, spec: FamilySpec, declared: usize| {
        let o = order_check(&act_spec, &spec).unwrap();
        assert_eq!(declared % o, 0, "{act_spec} on {spec} has order {o}");
        o
    };
    assert_eq!(check(a(ActionId::Twist, 10), FamilySpec::Ncc { n: 6 }, 10), 10);
    assert_eq!(check(a(ActionId::Shift, 4), FamilySpec::Bw { n: 4, k: 2 }, 4), 4);
    for n in 1..=4 {
        check(a(ActionId::Rowmotion, 2 * n), FamilySpec::Oi { n, s: n }, 2 * n);
    }
    for n in 2..=7 {
        assert_eq!(check(a(ActionId::Twist, 2 * n), FamilySpec::Nccb { n: n + 1 }, 2 * n), 2 * n);
        assert_eq!(check(a(ActionId::RotB, n), FamilySpec::Ncpb { n }, n), n);
        assert_eq!(check(a(ActionId::RotB, n), FamilySpec::Ncmb { n }, n), n);
        assert_eq!(check(a(ActionId::RotB, n + 1), FamilySpec::Trib { n }, n + 1), n + 1);
        check(a(ActionId::Rot, n + 2), FamilySpec::Tri { n: n + 2 }, n + 2);
        check(a(ActionId::Kreweras, 2 * n), FamilySpec::Ncp { n }, 2 * n);
        check(a(ActionId::KPromotion, n), FamilySpec::Ssyt { n, k: 2 }, n);
        check(a(ActionId::PhiSsyt, n + 1), FamilySpec::Ssyt { n, k: 2 }, n + 1);
    }
}

#[test]
fn rowmotion_extremes() {
    let n = 3;
    let all = CombObject::RootIdeal { n, path: vec![0; 2 * n] };
    let empty = CombObject::RootIdeal { n, path: vec![0, 1, 0, 1, 0, 1] };
    let r = a(ActionId::Rowmotion, 2 * n);
    assert_eq!(act(&r, &all).unwrap(), empty);
    // the empty ideal goes to the ideal of all minimal roots
    let CombObject::RootIdeal { path, .. } = act(&r, &empty).unwrap() else { unreachable!() };
    assert_eq!(path, vec![0, 0, 1, 0, 1, 0]);
}

#[test]
fn invariant_statistics() {
    for n in 1..=8 {
        let rot_half = a(ActionId::Rot, n);
        for x in (FamilySpec::Ncm { n }).enumerate().unwrap() {
            let y = act(&rot_half, &x).unwrap();
            assert_eq!(statistic(StatId::EvenEdges, &x).unwrap(), statistic(StatId::EvenEdges, &y).unwrap());
            let z = act(&a(ActionId::Rot, 2 * n), &x).unwrap();
            assert_eq!(statistic(StatId::ShortEdges, &x).unwrap(), statistic(StatId::ShortEdges, &z).unwrap());
        }
    }
    for n in 1..=6 {
        for x in (FamilySpec::Bw { n: 2 * n, k: n }).enumerate().unwrap() {
            let y = act(&a(ActionId::Shift, 2 * n), &x).unwrap();
            assert_eq!(statistic(StatId::CdesWord, &x).unwrap(), statistic(StatId::CdesWord, &y).unwrap());
        }
        for x in (FamilySpec::Ncc { n: n + 1 }).enumerate().unwrap() {
            let y = act(&a(ActionId::Rot, n), &x).unwrap();
            for s in [StatId::Loops, StatId::ProperEdges] {
                assert_eq!(statistic(s, &x).unwrap(), statistic(s, &y).unwrap());
            }
        }
    }
    for n in 4..=9 {
        for x in (FamilySpec::Tri { n }).enumerate().unwrap() {
            let y = act(&a(ActionId::Rot, n), &x).unwrap();
            assert_eq!(statistic(StatId::Ears, &x).unwrap(), statistic(StatId::Ears, &y).unwrap());
        }
    }
}

#[test]
fn orbit_profiles() {
    let p = orbit_profile(&FamilySpec::NccK { n: 4, k: 2 }, &a(ActionId::Rot, 3)).unwrap();
    assert_eq!(p.into_iter().collect::<Vec<_>>(), vec![(3, 2)]);
    let syt = orbit_profile(&FamilySpec::Syt { n: 3 }, &a(ActionId::Promotion, 6)).unwrap();
    assert_eq!(syt.iter().map(|(size, count)| size * count).sum::<usize>(), 5);
    let id = orbit_profile(&FamilySpec::Ncp { n: 5 }, &a(ActionId::Identity, 1)).unwrap();
    assert_eq!(id.into_iter().collect::<Vec<_>>(), vec![(1, 42)]);
}

#[test]
fn order_must_divide_points() {
    let m = CombObject::matching_from_edges(6, &[(1, 2), (3, 4), (5, 6)]);
    assert!(matches!(act(&a(ActionId::Rot, 4), &m), Err(cspkit::Error::PreconditionViolated(_))));
    assert!(matches!(act(&a(ActionId::Shift, 2), &m), Err(cspkit::Error::FamilyMismatch { .. })));
}
