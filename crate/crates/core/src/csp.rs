//! Registry of cyclic sieving triples and the fixed-point verifier.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::actions::{act, act_pow, cycle_lengths, permutation, ActionId, ActionSpec};
use crate::families::{CombObject, FamilySpec};
use crate::qpoly::{eval_at_root, named_polynomial, q_binomial, q_int, IntPoly, NamedPoly, RootValue};
use crate::{Error, Params};

/// One row of the registry.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TripleInfo {
    pub id: &'static str,
    pub family: &'static str,
    pub action: &'static str,
    pub polynomial: &'static str,
    /// Extra remark carried into reports.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

const fn info(id: &'static str, family: &'static str, action: &'static str, polynomial: &'static str) -> TripleInfo {
    TripleInfo { id, family, action, polynomial, note: None }
}

pub const TRIPLES: &[TripleInfo] = &[
    info("T1", "TRI(n)", "ROT order n", "CAT(n-2)"),
    info("T2", "TRI_EAR(n,k)", "ROT order n", "TRI_EAR(n,k)"),
    info("T4", "NCM(n)", "ROT order 2n", "CAT(n)"),
    info("T5", "NCP(n)", "KREWERAS order 2n", "CAT(n)"),
    info("T6", "NCM_SH(n,k)", "ROT order 2n", "G_CDES(n,k)"),
    info("T7", "SYT_CDES(n,k)", "PROMOTION order 2n", "G_CDES(n,k)"),
    info("T8", "NCP_BLOCKS(n,k)", "ROT order n", "NAR(n,k)"),
    info("T9", "NCM_EVEN(n,k)", "ROT order n", "NAR(n,k+1)"),
    info("T10", "NCC(n+1)", "ROT order n", "CAT(n+1)"),
    info("T11", "NCC_EL(n+1,e,l)", "ROT order n", "QNCC(n,e,l)"),
    info("T12", "NCC_K(n+1,k)", "ROT order n", "NAR(n+1,k)"),
    info("T13", "SSYT(n-1,k)", "K_PROMOTION order n-1", "NAR(n,k+1)"),
    info("T13b", "SSYT(n-1,k)", "PHI_SSYT order n", "NAR(n,k+1)"),
    info("T14", "NCC(n+1)", "TWIST order 2n", "TWIST_CAT(n)"),
    info("T15", "BW(2n,n)", "SHIFT order 2n", "CATB(n)"),
    TripleInfo {
        id: "T16",
        family: "SKEW_SYT(n,n)",
        action: "PROMOTION_SKEW order 2n",
        polynomial: "X_NS(n,n)",
        note: Some("promotion acts through the row word by cyclic shift, so this restates T15"),
    },
    info("T17", "OI(n,n)", "ROWMOTION order 2n", "CATB(n)"),
    info("T18", "NCPB(n)", "ROT_B order n", "CATB(n)"),
    info("T19", "BW_CDES(n,k)", "SHIFT order 2n", "QBW(n,k)"),
    info("T20", "NCCB(n+1)", "TWIST_SQUARED order n", "CATB(n)"),
    info("T21", "NCCB_EL(n+1,e,l)", "ROT order n", "(1+[e])·QNCC(n,e,l)"),
    info("T22", "NCCB_K(n+1,k)", "ROT order n", "U_NK(n,k)"),
    info("T23a", "NCPB_BLOCKS(n,k)", "ROT_B order n", "PI_B_COEFF(n,k)"),
    info("T23b", "NCPB_PAIRED(n,k)", "ROT_B order n", "NARB_PAIRED(n,k)"),
    info("T23c", "NCMB_EVEN(n,k)", "ROT_B order n", "PI_B_COEFF(n,k+1)"),
    info("T23d", "NCMB_PAIRED(n,k)", "ROT_B order n", "NARB_PAIRED(n,k)"),
    info("T24", "TRIB(n)", "ROT_B order n+1", "CATB(n)"),
    info("T25", "NCM_MARKED_EVEN(n,k,r)", "ROT order n", "MARKED_NCM(n,k,r)"),
];

/// Triples that must fail, kept as controls.
pub const NEGATIVE_CONTROLS: &[TripleInfo] = &[
    info("N1", "NCCB_E(n+1,e)", "TWIST_SQUARED order n", "sum over l of QNCCB(n,e,l)"),
    info("N1b", "NCCB_EL(n+1,e,l)", "ROT order n", "QNCCB(n,e,l)"),
    info("N2", "NCCB(n+1)", "TWIST order 2n", "CATB(n)"),
];

pub fn triple_info(id: &str) -> Option<&'static TripleInfo> {
    TRIPLES.iter().chain(NEGATIVE_CONTROLS).find(|t| t.id.eq_ignore_ascii_case(id))
}

/// A fully instantiated triple.
#[derive(Clone, Debug)]
pub struct Triple {
    pub id: &'static str,
    pub params: Params,
    pub family: FamilySpec,
    pub action: ActionSpec,
    pub polynomial: IntPoly,
    pub note: Option<&'static str>,
}

fn poly(p: NamedPoly) -> Result<IntPoly, Error> {
    Ok(named_polynomial(&p)?)
}

fn u(v: i64, name: &str) -> Result<usize, Error> {
    usize::try_from(v).map_err(|_| crate::error::out_of_domain(name, format!("{name}={v} is negative")))
}

/// Instantiate a registered triple or negative control.
pub fn triple(id: &str, p: &Params) -> Result<Triple, Error> {
    use ActionId as A;
    use FamilySpec as F;
    let info = triple_info(id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
    let n = p.get("n")?;
    let nu = u(n, "n")?;
    if nu == 0 {
        return Err(crate::error::out_of_domain(info.id, "need n >= 1"));
    }
    let k = || p.get("k");
    let ku = || -> Result<usize, Error> { u(k()?, "k") };
    let e = || p.get("e");
    let l = || p.get("l");
    let a = ActionSpec::new;
    let (family, action, polynomial) = match info.id {
        "T1" => (F::Tri { n: nu }, a(A::Rot, nu), poly(NamedPoly::Cat { n: n - 2 })?),
        "T2" => (F::TriEar { n: nu, k: ku()? }, a(A::Rot, nu), poly(NamedPoly::TriEar { n, k: k()? })?),
        "T4" => (F::Ncm { n: nu }, a(A::Rot, 2 * nu), poly(NamedPoly::Cat { n })?),
        "T5" => (F::Ncp { n: nu }, a(A::Kreweras, 2 * nu), poly(NamedPoly::Cat { n })?),
        "T6" => (F::NcmSh { n: nu, k: ku()? }, a(A::Rot, 2 * nu), poly(NamedPoly::GCdes { n, k: k()? })?),
        "T7" => (F::SytCdes { n: nu, k: ku()? }, a(A::Promotion, 2 * nu), poly(NamedPoly::GCdes { n, k: k()? })?),
        "T8" => (F::NcpBlocks { n: nu, k: ku()? }, a(A::Rot, nu), poly(NamedPoly::Nar { n, k: k()? })?),
        "T9" => (F::NcmEven { n: nu, k: ku()? }, a(A::Rot, nu), poly(NamedPoly::Nar { n, k: k()? + 1 })?),
        "T10" => (F::Ncc { n: nu + 1 }, a(A::Rot, nu), poly(NamedPoly::Cat { n: n + 1 })?),
        "T11" => (
            F::NccEl { n: nu + 1, e: u(e()?, "e")?, l: u(l()?, "l")? },
            a(A::Rot, nu),
            poly(NamedPoly::Qncc { n, e: e()?, l: l()? })?,
        ),
        "T12" => (F::NccK { n: nu + 1, k: ku()? }, a(A::Rot, nu), poly(NamedPoly::Nar { n: n + 1, k: k()? })?),
        "T13" | "T13b" => {
            if nu < 2 {
                return Err(crate::error::out_of_domain(info.id, "need n >= 2"));
            }
            let act_id = if info.id == "T13" { a(A::KPromotion, nu - 1) } else { a(A::PhiSsyt, nu) };
            (F::Ssyt { n: nu - 1, k: ku()? }, act_id, poly(NamedPoly::Nar { n, k: k()? + 1 })?)
        }
        "T14" => (F::Ncc { n: nu + 1 }, a(A::Twist, 2 * nu), poly(NamedPoly::TwistCat { n })?),
        "T15" => (F::Bw { n: 2 * nu, k: nu }, a(A::Shift, 2 * nu), poly(NamedPoly::CatB { n })?),
        "T16" => (F::SkewSyt { n: nu, s: nu }, a(A::PromotionSkew, 2 * nu), poly(NamedPoly::Xns { n, s: n })?),
        "T17" => (F::Oi { n: nu, s: nu }, a(A::Rowmotion, 2 * nu), poly(NamedPoly::CatB { n })?),
        "T18" => (F::Ncpb { n: nu }, a(A::RotB, nu), poly(NamedPoly::CatB { n })?),
        "T19" => (F::BwCdes { n: nu, k: ku()? }, a(A::Shift, 2 * nu), poly(NamedPoly::Qbw { n, k: k()? })?),
        "T20" => (F::Nccb { n: nu + 1 }, a(A::TwistSquared, nu), poly(NamedPoly::CatB { n })?),
        "T21" => {
            let (ev, lv) = (e()?, l()?);
            let base = poly(NamedPoly::Qncc { n, e: ev, l: lv })?;
            (
                F::NccbEl { n: nu + 1, e: u(ev, "e")?, l: u(lv, "l")? },
                a(A::Rot, nu),
                (IntPoly::one() + q_int(ev)) * base,
            )
        }
        "T22" => (F::NccbK { n: nu + 1, k: ku()? }, a(A::Rot, nu), poly(NamedPoly::Unk { n, k: k()? })?),
        "T23a" => (F::NcpbBlocks { n: nu, k: ku()? }, a(A::RotB, nu), poly(NamedPoly::PiBCoeff { n, k: k()? })?),
        "T23b" => (F::NcpbPaired { n: nu, k: ku()? }, a(A::RotB, nu), poly(NamedPoly::NarBPaired { n, k: k()? })?),
        "T23c" => (F::NcmbEven { n: nu, k: ku()? }, a(A::RotB, nu), poly(NamedPoly::PiBCoeff { n, k: k()? + 1 })?),
        "T23d" => (F::NcmbPaired { n: nu, k: ku()? }, a(A::RotB, nu), poly(NamedPoly::NarBPaired { n, k: k()? })?),
        "T24" => (F::Trib { n: nu }, a(A::RotB, nu + 1), poly(NamedPoly::CatB { n })?),
        "T25" => {
            let r = p.get("r")?;
            (
                F::NcmMarkedEven { n: nu, k: ku()?, r: u(r, "r")? },
                a(A::Rot, nu),
                poly(NamedPoly::MarkedNcm { n, k: k()?, r })?,
            )
        }
        "N1" => {
            let ev = e()?;
            let sum: IntPoly = (0..=n).map(|lv| named_polynomial(&NamedPoly::Qnccb { n, e: ev, l: lv })).sum::<Result<_, _>>()?;
            (F::NccbE { n: nu + 1, e: u(ev, "e")? }, a(A::TwistSquared, nu), sum)
        }
        "N1b" => (
            F::NccbEl { n: nu + 1, e: u(e()?, "e")?, l: u(l()?, "l")? },
            a(A::Rot, nu),
            poly(NamedPoly::Qnccb { n, e: e()?, l: l()? })?,
        ),
        "N2" => (F::Nccb { n: nu + 1 }, a(A::Twist, 2 * nu), q_binomial(2 * n, n)),
        _ => unreachable!(),
    };
    family.check_domain()?;
    Ok(Triple { id: info.id, params: p.clone(), family, action, polynomial, note: info.note })
}

/// Every in-domain parameter choice of a triple for one value of `n`.
pub fn parameter_grid(id: &str, n: usize) -> Vec<Params> {
    let n64 = n as i64;
    let base = Params::n(n64);
    let Some(info) = triple_info(id) else { return Vec::new() };
    let candidates: Vec<Params> = match info.id {
        "T2" | "T6" | "T7" | "T8" | "T9" | "T12" | "T13" | "T13b" | "T19" | "T22" | "T23b" | "T23d" => {
            (0..=n64 + 1).map(|k| base.clone().with_k(k)).collect()
        }
        "T23a" | "T23c" => (0..=2 * n64 + 1).map(|k| base.clone().with_k(k)).collect(),
        "T11" | "T21" | "N1b" => (0..=n64)
            .flat_map(|e| (0..=n64).map(move |l| (e, l)))
            .filter(|&(e, l)| 2 * e + l <= n64)
            .map(|(e, l)| base.clone().with_e(e).with_l(l))
            .collect(),
        "N1" => (0..=n64 / 2).map(|e| base.clone().with_e(e)).collect(),
        "T25" => (0..=n64)
            .flat_map(|k| (0..=n64 + 1).map(move |r| (k, r)))
            .map(|(k, r)| base.clone().with_k(k).with_r(r))
            .collect(),
        _ => vec![base],
    };
    candidates
        .into_iter()
        .filter(|p| triple(info.id, p).is_ok_and(|t| t.family.cardinality().is_ok_and(|c| c > BigInt::from(0))))
        .collect()
}

// ---------------------------------------------------------------------------
// counting

/// Objects fixed by `d` applications of the generator, by direct iteration.
pub fn count_fixed(spec: &FamilySpec, a: &ActionSpec, d: usize) -> Result<usize, Error> {
    let mut count = 0;
    for x in spec.enumerate()? {
        if act_pow(a, &x, d)? == x {
            count += 1;
        }
    }
    Ok(count)
}

/// Same count with `d` replaced by `gcd(d, order)`.
pub fn count_fixed_reduced(spec: &FamilySpec, a: &ActionSpec, d: usize) -> Result<usize, Error> {
    count_fixed(spec, a, d.gcd(&a.order))
}

/// Fixed points of the `d`-th power of a permutation with these cycle lengths.
pub fn fixed_from_cycles(cycles: &[usize], d: usize) -> usize {
    cycles.iter().filter(|&&l| d % l == 0).sum()
}

pub fn divisors(m: usize) -> Vec<usize> {
    (1..=m).filter(|d| m % d == 0).collect()
}

/// Multiset of orbit sizes, as `size -> count`.
pub fn orbit_profile(spec: &FamilySpec, a: &ActionSpec) -> Result<BTreeMap<usize, usize>, Error> {
    let objects = spec.enumerate()?;
    let perm = permutation(a, &objects)?;
    let mut out = BTreeMap::new();
    for l in cycle_lengths(&perm) {
        *out.entry(l).or_insert(0) += 1;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// reports

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub d: usize,
    /// Order of `ξ^d`.
    pub order: u64,
    pub fixed: usize,
    pub eval: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub triple: String,
    pub params: String,
    pub family: String,
    pub action: String,
    pub size: usize,
    pub rows: Vec<Row>,
    /// One non-divisor exponent, checked but kept apart from the divisor rows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spot_check: Option<Row>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Wall time, kept out of serialized rows.
    #[serde(skip)]
    pub millis: u128,
}

impl VerificationReport {
    pub fn first_failure(&self) -> Option<&Row> {
        self.rows.iter().chain(&self.spot_check).find(|r| !r.ok)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} [{}] {} under {}: {} objects, {}",
            self.triple,
            self.params,
            self.family,
            self.action,
            self.size,
            if self.pass { "pass" } else { "FAIL" }
        )?;
        for r in &self.rows {
            writeln!(f, "  d={:<3} o={:<3} fixed={:<8} eval={:<12} {}", r.d, r.order, r.fixed, r.eval, if r.ok { "ok" } else { "MISMATCH" })?;
        }
        if let Some(r) = &self.spot_check {
            writeln!(f, "  spot check d={} fixed={} eval={} {}", r.d, r.fixed, r.eval, if r.ok { "ok" } else { "MISMATCH" })?;
        }
        Ok(())
    }
}

/// Which exponents `d` a verification evaluates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Sweep {
    /// Divisors of the order, plus one non-divisor spot check.
    #[default]
    Divisors,
    /// Every `d` in `1..=order`.
    Full,
}

/// Smallest `d` in `2..m` that does not divide `m`.
fn spot_check_exponent(m: usize) -> Option<usize> {
    (2..m).find(|d| m % d != 0)
}

fn row(t: &Triple, cycles: &[usize], d: usize) -> Row {
    let m = t.action.order;
    let fixed = fixed_from_cycles(cycles, d);
    let value = eval_at_root(&t.polynomial, m as u64, d as i64);
    let ok = matches!(&value.value, RootValue::Integer(v) if *v == BigInt::from(fixed));
    Row { d, order: value.reduced_order(), fixed, eval: value.value.to_string(), ok }
}

/// Compare fixed-point counts with root-of-unity evaluations for every divisor
/// of the action order.
pub fn verify_instance(t: &Triple) -> Result<VerificationReport, Error> {
    verify_instance_with(t, Sweep::Divisors)
}

pub fn verify_instance_with(t: &Triple, sweep: Sweep) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let objects = t.family.enumerate()?;
    let perm = permutation(&t.action, &objects)?;
    let cycles = cycle_lengths(&perm);
    let m = t.action.order;
    let (ds, spot) = match sweep {
        Sweep::Divisors => (divisors(m), spot_check_exponent(m)),
        Sweep::Full => ((1..=m).collect(), None),
    };
    let rows = ds.into_iter().map(|d| row(t, &cycles, d)).collect::<Vec<_>>();
    let spot_check = spot.map(|d| row(t, &cycles, d));
    let pass = rows.iter().chain(&spot_check).all(|r| r.ok);
    Ok(VerificationReport {
        triple: t.id.to_string(),
        params: t.params.to_string(),
        family: t.family.to_string(),
        action: t.action.to_string(),
        size: objects.len(),
        rows,
        spot_check,
        pass,
        note: t.note.map(str::to_string),
        millis: start.elapsed().as_millis(),
    })
}

pub fn verify_triple(id: &str, params: &Params) -> Result<VerificationReport, Error> {
    verify_instance(&triple(id, params)?)
}

// ---------------------------------------------------------------------------
// refinements

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RefinementReport {
    pub parent: String,
    pub children: Vec<String>,
    pub disjoint_union: bool,
    pub polynomial_sum: bool,
    pub children_invariant: bool,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Check that the children split the parent set, their polynomials sum to the
/// parent's, and the action keeps each child set.
pub fn verify_refinement(parent: &Triple, children: &[Triple]) -> Result<RefinementReport, Error> {
    let mut witness = None;
    let parent_objs = parent.family.enumerate()?;
    let mut union: Vec<CombObject> = Vec::new();
    let mut sum = IntPoly::zero();
    let mut invariant = true;
    for c in children {
        let objs = c.family.enumerate()?;
        for x in &objs {
            let y = act(&c.action, x)?;
            if objs.binary_search(&y).is_err() {
                invariant = false;
                witness.get_or_insert_with(|| format!("{} leaves {} at {x:?}", c.action, c.family));
            }
        }
        union.extend(objs);
        sum += &c.polynomial;
    }
    union.sort_unstable();
    let disjoint = union == parent_objs;
    if !disjoint {
        witness.get_or_insert_with(|| format!("children cover {} objects, parent has {}", union.len(), parent_objs.len()));
    }
    let poly_ok = sum == parent.polynomial;
    if !poly_ok {
        witness.get_or_insert_with(|| format!("children sum to {sum}, parent is {}", parent.polynomial));
    }
    Ok(RefinementReport {
        parent: format!("{} [{}]", parent.id, parent.params),
        children: children.iter().map(|c| format!("{} [{}]", c.id, c.params)).collect(),
        disjoint_union: disjoint,
        polynomial_sum: poly_ok,
        children_invariant: invariant,
        pass: disjoint && poly_ok && invariant,
        witness,
    })
}

/// Registered refinement pairs, as `(parent id, child id)`.
pub const REFINEMENTS: &[(&str, &str)] =
    &[("T4", "T6"), ("T1", "T2"), ("T10", "T11"), ("T12", "T11"), ("T15", "T19"), ("T18", "T23a"), ("T22", "T21")];

/// Build the parent and children of a registered refinement. Parents indexed
/// by `k` take it from `parent_params`; children are filtered to match.
pub fn refinement(parent_id: &str, child_id: &str, parent_params: &Params) -> Result<(Triple, Vec<Triple>), Error> {
    let parent = triple(parent_id, parent_params)?;
    let n = u(parent_params.get("n")?, "n")?;
    let mut grid = parameter_grid(child_id, n);
    if let Ok(k) = parent_params.get("k") {
        grid.retain(|p| match parent.id {
            "T12" => p.get("e").unwrap_or(-1) + p.get("l").unwrap_or(-1) == k - 1,
            _ => p.get("e").unwrap_or(-1) + p.get("l").unwrap_or(-1) == k,
        });
    }
    let children = grid.iter().map(|p| triple(child_id, p)).collect::<Result<Vec<_>, _>>()?;
    Ok((parent, children))
}

// ---------------------------------------------------------------------------
// manifest

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub schema: u32,
    /// Default largest `n` per triple for batch runs.
    pub max_n: BTreeMap<String, usize>,
}

/// Shipped default bounds.
pub fn manifest() -> &'static Manifest {
    static M: OnceLock<Manifest> = OnceLock::new();
    M.get_or_init(|| serde_json::from_str(include_str!("../manifest.json")).expect("shipped manifest parses"))
}

/// Smallest `n` at which a triple has in-domain parameters.
pub fn min_n(id: &str) -> usize {
    (1..=8).find(|&n| !parameter_grid(id, n).is_empty()).unwrap_or(1)
}

/// All registered instances with `n` between the triple's minimum and `max_n`.
pub fn instances(id: &str, max_n: usize) -> Vec<Params> {
    (min_n(id)..=max_n).flat_map(|n| parameter_grid(id, n)).collect()
}

/// Every registered instance up to the manifest bound, or up to `cap` when
/// that is smaller, ordered by triple then parameters.
pub fn manifest_jobs(cap: Option<usize>) -> Vec<(&'static str, Params)> {
    let m = manifest();
    TRIPLES
        .iter()
        .flat_map(|info| {
            let bound = m.max_n.get(info.id).copied().unwrap_or(0);
            let bound = cap.map_or(bound, |c| c.min(bound));
            instances(info.id, bound).into_iter().map(move |p| (info.id, p))
        })
        .collect()
}

/// Verify many instances on the current rayon pool. Output order follows `jobs`.
pub fn verify_batch(jobs: &[(&'static str, Params)]) -> Vec<Result<VerificationReport, Error>> {
    verify_batch_with(jobs, Sweep::Divisors)
}

pub fn verify_batch_with(jobs: &[(&'static str, Params)], sweep: Sweep) -> Vec<Result<VerificationReport, Error>> {
    jobs.par_iter().map(|(id, p)| verify_instance_with(&triple(id, p)?, sweep)).collect()
}
