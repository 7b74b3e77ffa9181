//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout. The
//! process exits nonzero only when a criterion fails that is not listed in
//! `KNOWN_FAILURES`, or when a listed one unexpectedly passes.

use std::time::{Duration, Instant};

use cspkit::actions::*;
use cspkit::bijections::*;
use cspkit::csp::*;
use cspkit::families::{validate, CombObject, FamilySpec};
use cspkit::qpoly::*;
use cspkit::stats::StatId;
use cspkit::Params;
use num_bigint::BigInt;

const IDENTITY_BUDGET: Duration = Duration::from_secs(10);
const FULL_VERIFICATION_BUDGET: Duration = Duration::from_secs(300);
const NAR_SUM_MAX_N: i64 = 30;
const CDES_FORMS_MAX_N: i64 = 30;
const LOOP_REFINEMENT_MAX_N: i64 = 25;
const EAR_REFINEMENT_MAX_N: i64 = 30;
const BLOCK_POLY_MAX_N: i64 = 25;
const TWIST_FORM_MAX_N: i64 = 25;
const ORDER_IDEAL_MAX_N: usize = 10;
const NEGATIVE_CONTROL_MAX_N: usize = 6;
const PROMOTION_MAX_N: usize = 5;
const KREWERAS_MAX_N: usize = 6;
const ROUND_TRIP_MAX_N: usize = 8;
const CHAIN_MAX_N: usize = 8;
const ROWMOTION_MAX_N: usize = 4;
const TYPE_B_ORDER_MAX_N: usize = 7;
const Q_LUCAS_MAX_N: u64 = 40;

/// Criteria expected to fail, with the reason.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    2,
    "printed Tri_q(6,2)=1+q^4+q^5+q^8 sums to 4; the defining formula, the 12 two-ear hexagon \
     triangulations and the ear refinement of Cat_q(4) all give (1+q^2+q^4)(1+q^4+q^5+q^8)",
)];

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn np(p: NamedPoly) -> IntPoly {
    named_polynomial(&p).expect("in-domain polynomial")
}

fn cat(n: i64) -> IntPoly {
    np(NamedPoly::Cat { n })
}

fn polynomial_identities() -> Outcome {
    let start = Instant::now();
    for n in 0..=NAR_SUM_MAX_N {
        let central = q_binomial(2 * n, n);
        let (quot, rem) = central.div_rem(&q_int(n + 1));
        let diff = &central - &q_binomial(2 * n, n - 1).shift(1);
        ensure(rem.is_zero() && quot == cat(n) && diff == cat(n), || format!("Catalan forms differ at n={n}"))?;
        let nar: IntPoly = (0..=n + 1).map(|k| np(NamedPoly::Nar { n, k })).sum();
        ensure(nar == cat(n), || format!("Narayana sum at n={n}"))?;
        let narb: IntPoly = (0..=n + 1).map(|k| np(NamedPoly::NarB { n, k })).sum();
        ensure(narb == np(NamedPoly::CatB { n }), || format!("type B Narayana sum at n={n}"))?;
    }
    for n in 2..=CDES_FORMS_MAX_N {
        for k in 2..=n + 1 {
            ensure(np(NamedPoly::GCdes { n, k }) == g_cdes_three_term(n, k), || format!("cdes forms n={n} k={k}"))?;
        }
    }
    for n in 0..=LOOP_REFINEMENT_MAX_N {
        for k in 0..=n {
            let s: IntPoly = (0..=k).map(|e| np(NamedPoly::Qncc { n, e, l: k - e })).sum();
            ensure(s == np(NamedPoly::Nar { n: n + 1, k: k + 1 }), || format!("loop/edge refinement n={n} k={k}"))?;
        }
    }
    for n in 4..=EAR_REFINEMENT_MAX_N {
        let s: IntPoly = (2..=n / 2).map(|k| np(NamedPoly::TriEar { n, k })).sum();
        ensure(s == cat(n - 2), || format!("ear refinement n={n}"))?;
    }
    for n in 1..=BLOCK_POLY_MAX_N {
        let total: IntPoly = pi_b(n).iter().sum();
        ensure(total == q_binomial(2 * n, n), || format!("block polynomial at t=1, n={n}"))?;
    }
    for n in 0..=TWIST_FORM_MAX_N {
        let (quot, rem) = (q_int(2) * q_binomial(2 * n + 1, n)).div_rem(&q_int(n + 2));
        ensure(rem.is_zero() && quot == np(NamedPoly::TwistCat { n }), || format!("twist polynomial n={n}"))?;
    }
    for n in 1..=ORDER_IDEAL_MAX_N {
        let ni = n as i64;
        for s in 0..=ni {
            let spec = FamilySpec::Oi { n, s: s as usize };
            let pmaj = q_binomial(2 * ni, ni) - q_binomial(2 * ni, ni - s - 1);
            let mut maj = q_binomial(2 * ni, ni) - q_binomial(2 * ni, ni - s - 1).shift(1);
            for d in 1..=s {
                let t = q_binomial(2 * ni, ni - d);
                maj += &t;
                maj -= &t.shift(1);
            }
            let objs = spec.enumerate().map_err(|e| e.to_string())?;
            let got_p = cspkit::stats::distribution_of(&objs, StatId::Pmaj, 0).map_err(|e| e.to_string())?;
            let got_m = cspkit::stats::distribution_of(&objs, StatId::Maj, 0).map_err(|e| e.to_string())?;
            ensure(got_p == pmaj && got_m == maj, || format!("order ideal distributions n={n} s={s}"))?;
        }
    }
    let took = start.elapsed();
    ensure(took <= IDENTITY_BUDGET, || format!("took {took:.2?}, budget {IDENTITY_BUDGET:?}"))?;
    Ok(format!("all identities exact in {took:.2?}"))
}

fn golden_values() -> Outcome {
    let mut failed = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failed.push(name.to_string());
        }
    };
    check("Tri_q(6,2) = 1+q^4+q^5+q^8", np(NamedPoly::TriEar { n: 6, k: 2 }) == IntPoly::from_i64s(&[1, 0, 0, 0, 1, 1, 0, 0, 1]));
    let a = np(NamedPoly::Qncc { n: 4, e: 2, l: 0 });
    let b = np(NamedPoly::Qncc { n: 4, e: 1, l: 1 });
    let c = np(NamedPoly::Qncc { n: 4, e: 0, l: 2 });
    check("qNCC(4,2,0)", a == IntPoly::from_i64s(&[1, 0, 1]).shift(6));
    check("qNCC(4,1,1)", b == IntPoly::from_i64s(&[1, 2, 3, 3, 2, 1]).shift(7));
    check("qNCC(4,0,2)", c == IntPoly::from_i64s(&[1, 1, 2, 1, 1]).shift(10));
    let nar = np(NamedPoly::Nar { n: 5, k: 3 });
    check("Nar_q(5,3)", nar == IntPoly::from_i64s(&[1, 1, 3, 3, 4, 3, 3, 1, 1]).shift(6) && &(&a + &b) + &c == nar);
    check("Y_{2,1}", np(NamedPoly::Yns { n: 2, s: 1 }) == IntPoly::from_i64s(&[1, 1, 1, 1, 1]));
    let count = |s: FamilySpec| s.enumerate().map(|v| v.len()).unwrap_or(0);
    check("Cat(3)=5", cat(3).eval_one() == BigInt::from(5) && count(FamilySpec::Ncm { n: 3 }) == 5);
    check("CatB(2)=6", np(NamedPoly::CatB { n: 2 }).eval_one() == BigInt::from(6) && count(FamilySpec::Ncpb { n: 2 }) == 6);
    check("|OI(3,3)|=20", count(FamilySpec::Oi { n: 3, s: 3 }) == 20);
    let t = CombObject::Ssyt2Col { max: 7, rows: vec![(1, 2), (2, 3), (3, 4), (7, 7)] };
    let phi = act(&ActionSpec::new(ActionId::PhiSsyt, 8), &t).ok();
    let part = BijectionId::SsytToNcp.apply(&t).ok();
    check(
        "two-column tableau and its increment",
        phi == Some(CombObject::Ssyt2Col { max: 7, rows: vec![(1, 3), (2, 4), (3, 5), (4, 7)] })
            && part == Some(CombObject::partition(8, vec![vec![1, 4], vec![2], vec![3], vec![7], vec![5, 6, 8]])),
    );
    let top_row = |top: &[usize]| {
        let mut w = vec![1u8; 10];
        for &i in top {
            w[i - 1] = 0;
        }
        w
    };
    let alpha = CombObject::LatticePath { steps: top_row(&[2, 5, 7, 8, 10]) };
    check(
        "phi squared path",
        BijectionId::PhiRootIdeal.apply(&alpha).ok()
            == Some(CombObject::RootIdeal { n: 5, path: top_row(&[1, 2, 4, 5, 7, 8, 10]) }),
    );
    let drawn = [1u8, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0];
    let path = CombObject::LatticePath { steps: drawn.iter().map(|b| 1 - b).collect() };
    check(
        "laser image",
        BijectionId::DyckToNcc.apply(&path).ok() == Some(CombObject::ncc_from(5, &[(3, 5)], &[1, 4])),
    );
    let p = CombObject::partition(6, vec![vec![1, 2, 4, 5], vec![3], vec![6]]);
    check(
        "fattened partition",
        BijectionId::NcpToNcm.apply(&p).ok()
            == Some(CombObject::matching_from_edges(12, &[(1, 2), (3, 6), (4, 5), (7, 8), (9, 12), (10, 11)])),
    );
    if failed.is_empty() {
        Ok("13 values reproduced".into())
    } else {
        Err(format!("mismatch: {}", failed.join("; ")))
    }
}

fn full_verification() -> Outcome {
    let start = Instant::now();
    let jobs = manifest_jobs(None);
    let reports = verify_batch(&jobs);
    let mut objects = 0usize;
    for ((id, p), r) in jobs.iter().zip(reports) {
        let r = r.map_err(|e| format!("{id} [{p}]: {e}"))?;
        ensure(r.pass, || format!("{id} [{p}] failed: {:?}", r.first_failure()))?;
        objects = objects.max(r.size);
    }
    for info in TRIPLES {
        ensure(jobs.iter().any(|(id, _)| *id == info.id), || format!("{} has no instances", info.id))?;
    }
    let took = start.elapsed();
    ensure(took <= FULL_VERIFICATION_BUDGET, || format!("took {took:.2?}"))?;
    Ok(format!("{} instances of {} triples, largest family {objects}, {took:.2?}", jobs.len(), TRIPLES.len()))
}

fn negative_controls() -> Outcome {
    let mut witness = None;
    'outer: for n in 1..=NEGATIVE_CONTROL_MAX_N {
        for id in ["N1", "N1b"] {
            for p in parameter_grid(id, n) {
                let r = verify_triple(id, &p).map_err(|e| e.to_string())?;
                if !r.pass {
                    witness = Some(format!("{id} [{p}]"));
                    break 'outer;
                }
            }
        }
    }
    let w = witness.ok_or("no loop-weighted type B instance failed")?;
    let r = verify_triple("N2", &Params::n(2)).map_err(|e| e.to_string())?;
    let row = r.first_failure().ok_or("unsquared twist passed at n=2")?;
    ensure(r.size == 6 && row.fixed == 2 && row.eval == "0", || format!("unexpected row {row:?}"))?;
    Ok(format!("{w} fails; unsquared twist at n=2: {} fixed vs {}", row.fixed, row.eval))
}

fn round_trip(id: BijectionId, source: FamilySpec, target: FamilySpec) -> Result<(), String> {
    let src = source.enumerate().map_err(|e| e.to_string())?;
    let mut images = Vec::with_capacity(src.len());
    for x in &src {
        let y = id.apply(x).map_err(|e| e.to_string())?;
        ensure(validate(&y) && id.inverse(&y).ok().as_ref() == Some(x), || format!("{id} at {x:?}"))?;
        images.push(y);
    }
    images.sort();
    ensure(images == target.enumerate().map_err(|e| e.to_string())?, || format!("{id} not onto {target}"))
}

fn equivariance() -> Outcome {
    let intertwines = |id, a: ActionSpec, b: ActionSpec, spec: FamilySpec| -> Result<(), String> {
        let bad = check_equivariance(id, &a, &b, &spec).map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("{id} fails on {spec} at {:?}", bad[0]))
    };
    for n in 1..=PROMOTION_MAX_N {
        let spec = FamilySpec::Syt { n };
        let pro = ActionSpec::new(ActionId::Promotion, 2 * n);
        intertwines(BijectionId::SytToNcm, pro, ActionSpec::new(ActionId::Rot, 2 * n), spec)?;
        let jdt = ActionSpec::new(ActionId::JdtPromotion, 2 * n);
        for x in spec.enumerate().map_err(|e| e.to_string())? {
            ensure(act(&pro, &x).ok() == act(&jdt, &x).ok(), || format!("promotion forms differ at {x:?}"))?;
        }
    }
    for n in 1..=KREWERAS_MAX_N {
        intertwines(
            BijectionId::NcpToNcm,
            ActionSpec::new(ActionId::Kreweras, 2 * n),
            ActionSpec::new(ActionId::Rot, 2 * n),
            FamilySpec::Ncp { n },
        )?;
    }
    for n in 1..=ROUND_TRIP_MAX_N {
        round_trip(BijectionId::NcmToDyck, FamilySpec::Ncm { n }, FamilySpec::Dyck { n })?;
        round_trip(BijectionId::SytToNcm, FamilySpec::Syt { n }, FamilySpec::Ncm { n })?;
        round_trip(BijectionId::SytToDyck, FamilySpec::Syt { n }, FamilySpec::Dyck { n })?;
        round_trip(BijectionId::NcpToNcm, FamilySpec::Ncp { n }, FamilySpec::Ncm { n })?;
        round_trip(BijectionId::NcpToDyck, FamilySpec::Ncp { n }, FamilySpec::Dyck { n })?;
        round_trip(BijectionId::DyckToNcc, FamilySpec::Dyck { n }, FamilySpec::Ncc { n })?;
        round_trip(BijectionId::BwToNcmSym { period: 2 * n, vertices: 4 * n }, FamilySpec::Bw { n: 2 * n, k: n }, FamilySpec::Ncmb { n })?;
        for s in 0..=n {
            round_trip(BijectionId::PhiRootIdeal, FamilySpec::PathsS { n, s }, FamilySpec::Oi { n, s })?;
        }
        for k in 1..n {
            round_trip(BijectionId::SsytToNcp, FamilySpec::Ssyt { n: n - 1, k }, FamilySpec::NcpBlocks { n, k: k + 1 })?;
        }
    }
    Ok(format!(
        "promotion n<={PROMOTION_MAX_N}, Kreweras n<={KREWERAS_MAX_N}, round trips n<={ROUND_TRIP_MAX_N}"
    ))
}

fn mapped_sorted(id: BijectionId, xs: &[CombObject]) -> Result<Vec<CombObject>, String> {
    let mut out = xs.iter().map(|x| id.apply(x).map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>()?;
    out.sort();
    Ok(out)
}

fn statistic_transport() -> Outcome {
    let en = |s: FamilySpec| s.enumerate().map_err(|e| e.to_string());
    for n in 1..=CHAIN_MAX_N {
        for k in 1..=n {
            let parts = en(FamilySpec::NcpBlocks { n, k })?;
            if k >= 2 {
                let from_tableaux = mapped_sorted(BijectionId::SsytToNcp, &en(FamilySpec::Ssyt { n: n - 1, k: k - 1 })?)?;
                ensure(from_tableaux == parts, || format!("tableaux to partitions n={n} k={k}"))?;
            }
            ensure(mapped_sorted(BijectionId::NcpToNcm, &parts)? == en(FamilySpec::NcmEven { n, k: k - 1 })?, || {
                format!("blocks to even edges + 1, n={n} k={k}")
            })?;
            let paths = mapped_sorted(BijectionId::NcpToDyck, &parts)?;
            ensure(paths == en(FamilySpec::DyckPeaks { n, k })?, || format!("blocks to peaks n={n} k={k}"))?;
            ensure(mapped_sorted(BijectionId::DyckToNcc, &paths)? == en(FamilySpec::NccK { n, k })?, || {
                format!("valleys to edges + loops, n={n} k={k}")
            })?;
        }
        for (id, spec) in [
            (BijectionId::SytToNcm, FamilySpec::Syt { n }),
            (BijectionId::NcpToNcm, FamilySpec::Ncp { n }),
            (BijectionId::NcpToDyck, FamilySpec::Ncp { n }),
            (BijectionId::DyckToNcc, FamilySpec::Dyck { n }),
            (BijectionId::PhiRootIdeal, FamilySpec::Paths { n }),
        ] {
            let bad = check_transport(id, &spec).map_err(|e| e.to_string())?;
            ensure(bad.is_empty(), || format!("{id} transport fails on {spec}"))?;
        }
    }
    Ok(format!("chain and declared transports exhaustive for n<={CHAIN_MAX_N}"))
}

fn order_declarations() -> Outcome {
    let order = |a: ActionSpec, s: FamilySpec| order_check(&a, &s).map_err(|e| e.to_string());
    let mut flagged = Vec::new();
    ensure(order(ActionSpec::new(ActionId::Twist, 10), FamilySpec::Ncc { n: 6 })? == 10, || "TWIST on NCC(6)".into())?;
    for n in 2..=TYPE_B_ORDER_MAX_N {
        ensure(order(ActionSpec::new(ActionId::Twist, 2 * n), FamilySpec::Nccb { n: n + 1 })? == 2 * n, || {
            format!("TWIST on NCC^B({})", n + 1)
        })?;
        // one-vertex rotation of half-turn symmetric objects
        for spec in [FamilySpec::Ncpb { n }, FamilySpec::Ncmb { n }] {
            let o = order(ActionSpec::new(ActionId::RotB, n), spec)?;
            ensure((2 * n) % o == 0, || format!("ROT_B on {spec} has order {o}"))?;
            if o != 2 * n {
                flagged.push(o);
            }
        }
        let o = order(ActionSpec::new(ActionId::RotB, n + 1), FamilySpec::Trib { n })?;
        ensure(o == n + 1, || format!("ROT_B on TRI^B({n}) has order {o}"))?;
    }
    for n in 1..=ROWMOTION_MAX_N {
        let o = order(ActionSpec::new(ActionId::Rowmotion, 2 * n), FamilySpec::Oi { n, s: n })?;
        ensure((2 * n) % o == 0, || format!("rowmotion on OI({n},{n}) has order {o}"))?;
    }
    let start: SkewCells = vec![vec![(1, 3)], vec![(0, 1), (1, 4)], vec![(0, 2)]];
    let mut cur = k_promotion_cells(&start, 4);
    let mut size = 1;
    while cur != start && size < 8 {
        cur = k_promotion_cells(&cur, 4);
        size += 1;
    }
    ensure(size == 3, || format!("skew k-promotion orbit has size {size}"))?;
    let flag = if flagged.is_empty() {
        String::new()
    } else {
        "; ROT_B order n divides declared 2n (flagged)".to_string()
    };
    Ok(format!("TWIST 2n, TRI^B n+1, rowmotion | 2n, skew orbit of size 3{flag}"))
}

fn q_lucas() -> Outcome {
    let mut checked = 0u64;
    for n in 1..=Q_LUCAS_MAX_N {
        for o in (1..=2 * n).filter(|o| (2 * n) % o == 0) {
            for k in 0..=n {
                let direct = eval_at_primitive(&q_binomial(n as i64, k as i64), o);
                ensure(q_lucas_eval(n, k, o).value == direct, || format!("n={n} k={k} o={o}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} evaluations agree"))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 8] = [
        (1, "polynomial identities", polynomial_identities),
        (2, "golden values", golden_values),
        (3, "full CSP verification", full_verification),
        (4, "negative controls", negative_controls),
        (5, "equivariance", equivariance),
        (6, "statistic transport", statistic_transport),
        (7, "order declarations", order_declarations),
        (8, "q-Lucas vs cyclotomic", q_lucas),
    ];
    let mut unexpected = 0;
    for (num, name, run) in criteria {
        let outcome = run();
        let known = KNOWN_FAILURES.iter().find(|(c, _)| *c == num);
        match (&outcome, known) {
            (Ok(detail), None) => println!("criterion {num} PASS {name}: {detail}"),
            (Err(detail), Some((_, why))) => println!("criterion {num} FAIL {name}: {detail} (known: {why})"),
            (Err(detail), None) => {
                unexpected += 1;
                println!("criterion {num} FAIL {name}: {detail}");
            }
            (Ok(detail), Some(_)) => {
                unexpected += 1;
                println!("criterion {num} PASS {name}: {detail} (listed as a known failure)");
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
