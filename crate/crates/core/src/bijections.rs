//! Bijections between the families, each with its inverse.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::actions::{act, ActionSpec};
use crate::error::mismatch;
use crate::families::{matching_from_dyck, ncc_proper_edges, normalize_blocks, CombObject, FamilySpec};
use crate::stats::{self, StatId};
use crate::Error;

// ---------------------------------------------------------------------------
// raw maps

/// `0` at starting vertices, `1` at end vertices.
pub fn ncm_to_dyck(partner: &[usize]) -> Vec<u8> {
    (1..=partner.len()).map(|i| u8::from(partner[i - 1] < i)).collect()
}

/// Row word of a two-row tableau: `0` for the top row.
pub fn syt_to_dyck(top: &[usize]) -> Vec<u8> {
    let mut w = vec![1u8; 2 * top.len()];
    for &t in top {
        w[t - 1] = 0;
    }
    w
}

pub fn dyck_to_syt(w: &[u8]) -> Vec<usize> {
    (1..=w.len()).filter(|&i| w[i - 1] == 0).collect()
}

pub fn syt_to_ncm(top: &[usize]) -> Vec<usize> {
    matching_from_dyck(&syt_to_dyck(top))
}

pub fn ncm_to_syt(partner: &[usize]) -> Vec<usize> {
    (1..=partner.len()).filter(|&i| partner[i - 1] > i).collect()
}

/// Fattening of a non-crossing partition of `[n]` into a matching on `2n`
/// vertices: new vertex `2j-1` sits just after `j` and `2j-2` just before it,
/// and consecutive members `b < b'` of a block give the edge `2b-1 to 2b'-2`,
/// with the block closed cyclically.
pub fn ncp_to_ncm(n: usize, blocks: &[Vec<usize>]) -> Vec<usize> {
    let m = 2 * n;
    let mut partner = vec![0; m];
    let wrap = |v: usize| if v == 0 { m } else { v };
    for block in blocks {
        let len = block.len();
        for i in 0..len {
            let a = 2 * block[i] - 1;
            let b = wrap(2 * block[(i + 1) % len] - 2);
            partner[a - 1] = b;
            partner[b - 1] = a;
        }
    }
    partner
}

/// Inverse of [`ncp_to_ncm`]: the block successor of `j` is read off the
/// partner of vertex `2j-1`.
pub fn ncm_to_ncp_blocks(partner: &[usize]) -> Vec<Vec<usize>> {
    let n = partner.len() / 2;
    let next = |j: usize| (partner[2 * j - 2] / 2) % n + 1;
    let mut seen = vec![false; n + 1];
    let mut blocks = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut block = Vec::new();
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            block.push(j);
            j = next(j);
        }
        blocks.push(block);
    }
    normalize_blocks(blocks)
}

/// Blocks ordered by maxima; each contributes `max - previous max` north steps
/// followed by `|block|` east steps.
pub fn ncp_to_dyck(_n: usize, blocks: &[Vec<usize>]) -> Vec<u8> {
    let mut by_max: Vec<&Vec<usize>> = blocks.iter().collect();
    by_max.sort_by_key(|b| *b.last().unwrap());
    let mut w = Vec::new();
    let mut prev = 0;
    for b in by_max {
        let mx = *b.last().unwrap();
        w.extend(std::iter::repeat(0).take(mx - prev));
        w.extend(std::iter::repeat(1).take(b.len()));
        prev = mx;
    }
    w
}

pub fn dyck_to_ncp(w: &[u8]) -> Vec<Vec<usize>> {
    let n = w.len() / 2;
    let mut used = vec![false; n + 1];
    let mut blocks = Vec::new();
    let mut i = 0;
    let mut norths = 0;
    while i < w.len() {
        while i < w.len() && w[i] == 0 {
            norths += 1;
            i += 1;
        }
        let mut easts = 0;
        while i < w.len() && w[i] == 1 {
            easts += 1;
            i += 1;
        }
        let mut block = vec![norths];
        used[norths] = true;
        let mut v = norths;
        while block.len() < easts {
            v -= 1;
            if !used[v] {
                used[v] = true;
                block.push(v);
            }
        }
        blocks.push(block);
    }
    normalize_blocks(blocks)
}

/// Laser construction. East steps are numbered by the `x`-coordinate where
/// they end; a valley at `x = a` shoots along its diagonal to the first point
/// of the path at `x = b`, giving the edge (or loop) `{a, b-1}`.
pub fn dyck_to_ncc(w: &[u8]) -> Vec<Option<usize>> {
    let n = w.len() / 2;
    let mut pts = vec![(0i64, 0i64)];
    for &b in w {
        let (x, y) = *pts.last().unwrap();
        pts.push(if b == 1 { (x + 1, y) } else { (x, y + 1) });
    }
    let mut partner = vec![None; n.saturating_sub(1)];
    for t in 1..w.len() {
        if w[t - 1] == 1 && w[t] == 0 {
            let (x, y) = pts[t];
            let level = y - x;
            let hit = pts[t + 1..]
                .iter()
                .find(|&&(px, py)| px > x && py - px == level)
                .expect("a laser always lands on the path");
            let (a, b) = (x as usize, hit.0 as usize - 1);
            partner[a - 1] = Some(b);
            partner[b - 1] = Some(a);
        }
    }
    partner
}

/// Inverse laser construction through the north-run lengths after each east step.
pub fn ncc_to_dyck(partner: &[Option<usize>]) -> Vec<u8> {
    let m = partner.len();
    let n = m + 1;
    let mut h = vec![0usize; n];
    for t in (1..=m).rev() {
        if let Some(p) = partner[t - 1] {
            if p >= t {
                let inner: usize = h[t + 1..=p].iter().sum();
                h[t] = p - t + 1 - inner;
            }
        }
    }
    let total: usize = h[1..].iter().sum();
    h[0] = n - total;
    let mut w = Vec::with_capacity(2 * n);
    for &run in &h {
        w.extend(std::iter::repeat(0).take(run));
        w.push(1);
    }
    w
}

/// Two-column tableau with entries at most `n-1` to a non-crossing partition
/// of `[n]` with one more block than rows.
pub fn ssyt_to_ncp(max: usize, rows: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let n = max + 1;
    let col1: Vec<usize> = rows.iter().map(|r| r.0).collect();
    let mut used = vec![false; n + 1];
    let mut blocks = Vec::new();
    for &(_, x) in rows {
        let y = *col1.iter().rev().find(|&&y| y <= x && !used[y]).expect("row has a free bottom element");
        let block: Vec<usize> = (y..=x).filter(|&z| !used[z]).collect();
        for &z in &block {
            used[z] = true;
        }
        blocks.push(block);
    }
    blocks.push((1..=n).filter(|&z| !used[z]).collect());
    normalize_blocks(blocks)
}

pub fn ncp_to_ssyt(n: usize, blocks: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut mins: Vec<usize> = Vec::new();
    let mut maxs: Vec<usize> = Vec::new();
    for b in blocks {
        if b.contains(&n) {
            continue;
        }
        mins.push(b[0]);
        maxs.push(*b.last().unwrap());
    }
    mins.sort_unstable();
    maxs.sort_unstable();
    mins.into_iter().zip(maxs).collect()
}

/// One step of the depth-lowering map: the east step that first reaches the
/// maximal depth becomes a north step. `None` at depth zero.
pub fn phi_step(w: &[u8]) -> Option<Vec<u8>> {
    let d = stats::depth(w) as i64;
    if d == 0 {
        return None;
    }
    let mut h = 0i64;
    for (i, &b) in w.iter().enumerate() {
        h += if b == 1 { 1 } else { -1 };
        if h == d {
            let mut out = w.to_vec();
            out[i] = 0;
            return Some(out);
        }
    }
    unreachable!()
}

/// Inverse step: the north step right after the last prefix of maximal depth
/// becomes an east step.
pub fn phi_step_inverse(w: &[u8]) -> Vec<u8> {
    let mut h = 0i64;
    let mut best = 0i64;
    let mut at = 0usize;
    for (i, &b) in w.iter().enumerate() {
        h += if b == 1 { 1 } else { -1 };
        if h >= best {
            best = h;
            at = i + 1;
        }
    }
    let mut out = w.to_vec();
    debug_assert_eq!(out[at], 0);
    out[at] = 1;
    out
}

/// Iterate [`phi_step`] down to depth zero.
pub fn phi_root_ideal(w: &[u8]) -> Vec<u8> {
    let mut cur = w.to_vec();
    while let Some(next) = phi_step(&cur) {
        cur = next;
    }
    cur
}

pub fn root_ideal_to_path(n: usize, path: &[u8]) -> Vec<u8> {
    let mut cur = path.to_vec();
    while cur.iter().filter(|&&b| b == 1).count() < n {
        cur = phi_step_inverse(&cur);
    }
    cur
}

/// Rotationally symmetric matching on `vertices` points from a balanced word
/// of length `period`. The word repeats around the circle; a `0` opens an edge
/// that closes at its first balanced `1` going forward cyclically.
pub fn bw_to_ncm_sym(word: &[u8], vertices: usize) -> Result<Vec<usize>, Error> {
    let len = word.len();
    let ones = word.iter().filter(|&&b| b == 1).count();
    if len == 0 || len % 2 == 1 || 2 * ones != len || vertices % len != 0 || vertices / len < 2 {
        return Err(Error::PreconditionViolated(format!(
            "need a balanced word whose length divides {vertices} at least twice, got length {len}"
        )));
    }
    let letter = |v: usize| word[(v - 1) % len];
    // start right after a prefix of minimal height so the rotated word is Dyck
    let mut h = 0i64;
    let mut low = 0i64;
    let mut start = 0usize;
    for v in 1..=len {
        h += if letter(v) == 0 { 1 } else { -1 };
        if h < low {
            low = h;
            start = v;
        }
    }
    let mut partner = vec![0; vertices];
    let mut stack = Vec::new();
    for i in 0..vertices {
        let v = (start + i) % vertices + 1;
        if letter(v) == 0 {
            stack.push(v);
        } else {
            let u = stack.pop().expect("balanced word");
            partner[u - 1] = v;
            partner[v - 1] = u;
        }
    }
    Ok(partner)
}

/// Inverse of [`bw_to_ncm_sym`]: vertex `i` reads `0` when the forward arc to
/// its partner is the shorter one.
pub fn ncm_sym_to_bw(partner: &[usize], period: usize) -> Result<Vec<u8>, Error> {
    let m = partner.len();
    if period == 0 || m % period != 0 || m / period < 2 {
        return Err(Error::PreconditionViolated(format!("period {period} must divide {m} at least twice")));
    }
    let symmetric = (1..=m).all(|i| {
        let j = partner[i - 1];
        partner[(i - 1 + period) % m] == (j - 1 + period) % m + 1
    });
    if !symmetric {
        return Err(Error::PreconditionViolated(format!("matching is not invariant under rotation by {period}")));
    }
    let word: Vec<u8> = (1..=period)
        .map(|i| {
            let fwd = (partner[i - 1] + m - i) % m;
            u8::from(2 * fwd > m)
        })
        .collect();
    if bw_to_ncm_sym(&word, m)? != partner {
        return Err(Error::PreconditionViolated("matching has no symmetric completion of that period".into()));
    }
    Ok(word)
}

// ---------------------------------------------------------------------------
// identifiers

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BijectionId {
    NcmToDyck,
    /// Balanced words of length `period` to symmetric matchings on `vertices` points.
    BwToNcmSym { period: usize, vertices: usize },
    SytToNcm,
    SytToDyck,
    NcpToNcm,
    NcpToDyck,
    DyckToNcc,
    SsytToNcp,
    PhiRootIdeal,
}

pub const BIJECTION_IDS: &[&str] = &[
    "NCM_TO_DYCK",
    "BW_TO_NCM_SYM",
    "SYT_TO_NCM",
    "SYT_TO_DYCK",
    "NCP_TO_NCM",
    "NCP_TO_DYCK",
    "DYCK_TO_NCC",
    "SSYT_TO_NCP",
    "PHI_ROOT_IDEAL",
];

/// `src(x) + offset = Σ dst(f(x))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Transport {
    pub src: StatId,
    pub dst: &'static [StatId],
    pub offset: i64,
}

impl BijectionId {
    pub fn name(&self) -> &'static str {
        match self {
            BijectionId::NcmToDyck => "NCM_TO_DYCK",
            BijectionId::BwToNcmSym { .. } => "BW_TO_NCM_SYM",
            BijectionId::SytToNcm => "SYT_TO_NCM",
            BijectionId::SytToDyck => "SYT_TO_DYCK",
            BijectionId::NcpToNcm => "NCP_TO_NCM",
            BijectionId::NcpToDyck => "NCP_TO_DYCK",
            BijectionId::DyckToNcc => "DYCK_TO_NCC",
            BijectionId::SsytToNcp => "SSYT_TO_NCP",
            BijectionId::PhiRootIdeal => "PHI_ROOT_IDEAL",
        }
    }

    pub fn source_kind(&self) -> &'static str {
        match self {
            BijectionId::NcmToDyck => "matching",
            BijectionId::BwToNcmSym { .. } => "binary_word",
            BijectionId::SytToNcm | BijectionId::SytToDyck => "two_row_syt",
            BijectionId::NcpToNcm | BijectionId::NcpToDyck => "set_partition",
            BijectionId::DyckToNcc | BijectionId::PhiRootIdeal => "lattice_path",
            BijectionId::SsytToNcp => "ssyt2_col",
        }
    }

    pub fn target_kind(&self) -> &'static str {
        match self {
            BijectionId::NcmToDyck | BijectionId::SytToDyck | BijectionId::NcpToDyck => "lattice_path",
            BijectionId::BwToNcmSym { .. } | BijectionId::SytToNcm | BijectionId::NcpToNcm => "matching",
            BijectionId::DyckToNcc => "ncc",
            BijectionId::SsytToNcp => "set_partition",
            BijectionId::PhiRootIdeal => "root_ideal",
        }
    }

    /// Statistics the bijection carries over.
    pub fn transported(&self) -> Vec<Transport> {
        const fn t(src: StatId, dst: &'static [StatId], offset: i64) -> Transport {
            Transport { src, dst, offset }
        }
        match self {
            BijectionId::SytToNcm => vec![t(StatId::CdesSyt, &[StatId::ShortEdges], 0)],
            BijectionId::SytToDyck => vec![t(StatId::Des, &[StatId::Peaks], 0), t(StatId::MajSyt, &[StatId::Pmaj], 0)],
            BijectionId::NcpToNcm => vec![t(StatId::Blocks, &[StatId::EvenEdges], -1)],
            BijectionId::NcpToDyck => vec![t(StatId::Blocks, &[StatId::Peaks], 0), t(StatId::MajViaNcp, &[StatId::Maj], 0)],
            BijectionId::DyckToNcc => vec![t(StatId::Valleys, &[StatId::ProperEdges, StatId::Loops], 0)],
            BijectionId::PhiRootIdeal => vec![t(StatId::Pmaj, &[StatId::Pmaj], 0)],
            _ => Vec::new(),
        }
    }

    pub fn apply(&self, obj: &CombObject) -> Result<CombObject, Error> {
        let fail = || mismatch(self.name(), obj.kind());
        Ok(match (self, obj) {
            (BijectionId::NcmToDyck, CombObject::Matching { partner }) => {
                CombObject::LatticePath { steps: ncm_to_dyck(partner) }
            }
            (BijectionId::BwToNcmSym { period, vertices }, CombObject::BinaryWord { bits }) => {
                if bits.len() != *period {
                    return Err(Error::PreconditionViolated(format!("expected a word of length {period}")));
                }
                CombObject::Matching { partner: bw_to_ncm_sym(bits, *vertices)? }
            }
            (BijectionId::SytToNcm, CombObject::TwoRowSyt { top }) => CombObject::Matching { partner: syt_to_ncm(top) },
            (BijectionId::SytToDyck, CombObject::TwoRowSyt { top }) => {
                CombObject::LatticePath { steps: syt_to_dyck(top) }
            }
            (BijectionId::NcpToNcm, CombObject::SetPartition { n, blocks }) => {
                CombObject::Matching { partner: ncp_to_ncm(*n, blocks) }
            }
            (BijectionId::NcpToDyck, CombObject::SetPartition { n, blocks }) => {
                CombObject::LatticePath { steps: ncp_to_dyck(*n, blocks) }
            }
            (BijectionId::DyckToNcc, CombObject::LatticePath { steps }) => {
                if stats::depth(steps) != 0 {
                    return Err(Error::PreconditionViolated("laser construction needs a Dyck path".into()));
                }
                CombObject::Ncc { partner: dyck_to_ncc(steps), marked: None }
            }
            (BijectionId::SsytToNcp, CombObject::Ssyt2Col { max, rows }) => {
                CombObject::SetPartition { n: max + 1, blocks: ssyt_to_ncp(*max, rows) }
            }
            (BijectionId::PhiRootIdeal, CombObject::LatticePath { steps }) => {
                CombObject::RootIdeal { n: steps.len() / 2, path: phi_root_ideal(steps) }
            }
            _ => return Err(fail()),
        })
    }

    pub fn inverse(&self, obj: &CombObject) -> Result<CombObject, Error> {
        let fail = || mismatch(format!("{} inverse", self.name()), obj.kind());
        Ok(match (self, obj) {
            (BijectionId::NcmToDyck, CombObject::LatticePath { steps }) => {
                CombObject::Matching { partner: matching_from_dyck(steps) }
            }
            (BijectionId::BwToNcmSym { period, .. }, CombObject::Matching { partner }) => {
                CombObject::BinaryWord { bits: ncm_sym_to_bw(partner, *period)? }
            }
            (BijectionId::SytToNcm, CombObject::Matching { partner }) => CombObject::TwoRowSyt { top: ncm_to_syt(partner) },
            (BijectionId::SytToDyck, CombObject::LatticePath { steps }) => {
                CombObject::TwoRowSyt { top: dyck_to_syt(steps) }
            }
            (BijectionId::NcpToNcm, CombObject::Matching { partner }) => {
                CombObject::SetPartition { n: partner.len() / 2, blocks: ncm_to_ncp_blocks(partner) }
            }
            (BijectionId::NcpToDyck, CombObject::LatticePath { steps }) => {
                CombObject::SetPartition { n: steps.len() / 2, blocks: dyck_to_ncp(steps) }
            }
            (BijectionId::DyckToNcc, CombObject::Ncc { partner, .. }) => {
                CombObject::LatticePath { steps: ncc_to_dyck(partner) }
            }
            (BijectionId::SsytToNcp, CombObject::SetPartition { n, blocks }) => {
                CombObject::Ssyt2Col { max: n - 1, rows: ncp_to_ssyt(*n, blocks) }
            }
            (BijectionId::PhiRootIdeal, CombObject::RootIdeal { n, path }) => {
                CombObject::LatticePath { steps: root_ideal_to_path(*n, path) }
            }
            _ => return Err(fail()),
        })
    }
}

impl fmt::Display for BijectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BijectionId {
    type Err = Error;
    /// `BW_TO_NCM_SYM` parses with placeholder sizes; use the struct form to set them.
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "NCM_TO_DYCK" => BijectionId::NcmToDyck,
            "BW_TO_NCM_SYM" => BijectionId::BwToNcmSym { period: 0, vertices: 0 },
            "SYT_TO_NCM" => BijectionId::SytToNcm,
            "SYT_TO_DYCK" => BijectionId::SytToDyck,
            "NCP_TO_NCM" => BijectionId::NcpToNcm,
            "NCP_TO_DYCK" => BijectionId::NcpToDyck,
            "DYCK_TO_NCC" => BijectionId::DyckToNcc,
            "SSYT_TO_NCP" => BijectionId::SsytToNcp,
            "PHI_ROOT_IDEAL" => BijectionId::PhiRootIdeal,
            other => return Err(Error::UnknownId(other.to_string())),
        })
    }
}

/// Objects `x` with `f(src(x)) != dst(f(x))`.
pub fn check_equivariance(
    id: BijectionId,
    src_action: &ActionSpec,
    dst_action: &ActionSpec,
    spec: &FamilySpec,
) -> Result<Vec<CombObject>, Error> {
    let mut bad = Vec::new();
    for x in spec.enumerate()? {
        let lhs = id.apply(&act(src_action, &x)?)?;
        let rhs = act(dst_action, &id.apply(&x)?)?;
        if lhs != rhs {
            bad.push(x);
        }
    }
    Ok(bad)
}

/// Objects on which a declared statistic transport fails.
pub fn check_transport(id: BijectionId, spec: &FamilySpec) -> Result<Vec<CombObject>, Error> {
    let mut bad = Vec::new();
    for x in spec.enumerate()? {
        let y = id.apply(&x)?;
        for t in id.transported() {
            let lhs = stats::statistic(t.src, &x)? as i64 + t.offset;
            let mut rhs = 0i64;
            for &d in t.dst {
                rhs += stats::statistic(d, &y)? as i64;
            }
            if lhs != rhs {
                bad.push(x.clone());
                break;
            }
        }
    }
    Ok(bad)
}

/// Proper edges of a configuration, re-exported for callers of the laser map.
pub fn laser_edges(partner: &[Option<usize>]) -> Vec<(usize, usize)> {
    ncc_proper_edges(partner)
}
