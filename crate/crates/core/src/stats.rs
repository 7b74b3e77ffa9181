//! Statistics on words, paths, tableaux, matchings, partitions,
//! configurations and triangulations, and their generating polynomials.
//!
//! Positions are 1-indexed. A descent of a path is a valley (`10`) and a peak
//! is an ascent `01`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bijections;
use crate::error::mismatch;
use crate::families::{ncc_counts, CombObject, FamilySpec};
use crate::qpoly::IntPoly;
use crate::Error;

/// Positions `i` with `w[i] > w[i+1]`.
pub fn descents(w: &[u8]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn maj(w: &[u8]) -> usize {
    descents(w).iter().sum()
}

pub fn inv(w: &[u8]) -> usize {
    let mut ones = 0;
    let mut count = 0;
    for &b in w {
        if b == 1 {
            ones += 1;
        } else {
            count += ones;
        }
    }
    count
}

/// Descents with the index taken cyclically, so position `len` compares the
/// last letter with the first.
pub fn cdes_word(w: &[u8]) -> usize {
    let n = w.len();
    (0..n).filter(|&i| w[i] > w[(i + 1) % n]).count()
}

fn peak_positions(w: &[u8]) -> impl Iterator<Item = usize> + '_ {
    (1..w.len()).filter(move |&i| w[i - 1] == 0 && w[i] == 1)
}

pub fn peaks(w: &[u8]) -> usize {
    peak_positions(w).count()
}

pub fn valleys(w: &[u8]) -> usize {
    descents(w).len()
}

/// Sum of peak positions.
pub fn pmaj(w: &[u8]) -> usize {
    peak_positions(w).sum()
}

/// Largest excess of east over north steps over all prefixes.
pub fn depth(w: &[u8]) -> usize {
    let mut h: i64 = 0;
    let mut best = 0;
    for &b in w {
        h += if b == 1 { 1 } else { -1 };
        best = best.max(h);
    }
    best as usize
}

/// Peaks plus one more when the last step is north.
pub fn modpeaks(w: &[u8]) -> usize {
    peaks(w) + usize::from(w.last() == Some(&0))
}

/// A Dyck word is elevated when it touches height zero only at its ends.
pub fn is_elevated(w: &[u8]) -> bool {
    let mut h: i64 = 0;
    for &b in &w[..w.len().saturating_sub(1)] {
        h += if b == 0 { 1 } else { -1 };
        if h == 0 {
            return false;
        }
    }
    true
}

/// Cyclic descents of the two-row tableau whose row word is the Dyck word `w`.
///
/// For `n = 1` the single tableau has one cyclic descent; the elevated bonus
/// applies from `n = 2` on.
pub fn cdes_dyck(w: &[u8]) -> usize {
    peaks(w) + usize::from(w.len() >= 4 && is_elevated(w))
}

/// Edges `{i, j}`, `i < j`, with `i` even.
pub fn even_edges(partner: &[usize]) -> usize {
    (1..=partner.len()).filter(|&i| i % 2 == 0 && partner[i - 1] > i).count()
}

/// Edges between circular neighbours.
pub fn short_edges(partner: &[usize]) -> usize {
    let m = partner.len();
    let mut count = (1..m).filter(|&i| partner[i - 1] == i + 1).count();
    if m > 2 && partner[0] == m {
        count += 1;
    }
    count
}

/// Ears of a triangulation of the `n`-gon: vertices whose two neighbours are
/// joined by a diagonal.
pub fn ears(n: usize, diagonals: &[(usize, usize)]) -> usize {
    if n == 3 {
        return 1;
    }
    (1..=n)
        .filter(|&i| {
            let a = if i == 1 { n } else { i - 1 };
            let b = if i == n { 1 } else { i + 1 };
            diagonals.contains(&(a.min(b), a.max(b)))
        })
        .count()
}

pub(crate) fn blocks_of(obj: &CombObject) -> Option<usize> {
    match obj {
        CombObject::SetPartition { blocks, .. } => Some(blocks.len()),
        _ => None,
    }
}

fn tableau_word(top: &[usize]) -> Vec<u8> {
    let mut w = vec![1u8; 2 * top.len()];
    for &t in top {
        w[t - 1] = 0;
    }
    w
}

/// Statistic identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StatId {
    Maj,
    Inv,
    Des,
    CdesWord,
    CdesSyt,
    Peaks,
    Valleys,
    Pmaj,
    Depth,
    Modpeaks,
    EvenEdges,
    ShortEdges,
    Blocks,
    Ears,
    Loops,
    ProperEdges,
    MajSyt,
    MajViaNcp,
}

pub const STAT_IDS: &[StatId] = &[
    StatId::Maj,
    StatId::Inv,
    StatId::Des,
    StatId::CdesWord,
    StatId::CdesSyt,
    StatId::Peaks,
    StatId::Valleys,
    StatId::Pmaj,
    StatId::Depth,
    StatId::Modpeaks,
    StatId::EvenEdges,
    StatId::ShortEdges,
    StatId::Blocks,
    StatId::Ears,
    StatId::Loops,
    StatId::ProperEdges,
    StatId::MajSyt,
    StatId::MajViaNcp,
];

impl StatId {
    pub fn name(&self) -> &'static str {
        match self {
            StatId::Maj => "MAJ",
            StatId::Inv => "INV",
            StatId::Des => "DES",
            StatId::CdesWord => "CDES_WORD",
            StatId::CdesSyt => "CDES_SYT",
            StatId::Peaks => "PEAKS",
            StatId::Valleys => "VALLEYS",
            StatId::Pmaj => "PMAJ",
            StatId::Depth => "DEPTH",
            StatId::Modpeaks => "MODPEAKS",
            StatId::EvenEdges => "EVEN_EDGES",
            StatId::ShortEdges => "SHORT_EDGES",
            StatId::Blocks => "BLOCKS",
            StatId::Ears => "EARS",
            StatId::Loops => "LOOPS",
            StatId::ProperEdges => "PROPER_EDGES",
            StatId::MajSyt => "MAJ_SYT",
            StatId::MajViaNcp => "MAJ_VIA_NCP",
        }
    }

    /// Object kinds the statistic is defined on.
    pub fn accepts(&self) -> &'static [&'static str] {
        const WORDS: &[&str] = &["binary_word", "lattice_path", "root_ideal", "skew_two_row_syt"];
        const WORDS_AND_SYT: &[&str] = &["binary_word", "lattice_path", "root_ideal", "skew_two_row_syt", "two_row_syt"];
        match self {
            StatId::Maj | StatId::Des => WORDS_AND_SYT,
            StatId::Inv | StatId::CdesWord => &["binary_word", "lattice_path"],
            StatId::Peaks | StatId::Valleys | StatId::Pmaj | StatId::Depth | StatId::Modpeaks => WORDS,
            StatId::CdesSyt => &["two_row_syt"],
            StatId::EvenEdges | StatId::ShortEdges => &["matching", "marked_matching"],
            StatId::Blocks | StatId::MajViaNcp => &["set_partition"],
            StatId::Ears => &["triangulation"],
            StatId::Loops | StatId::ProperEdges => &["ncc"],
            StatId::MajSyt => &["two_row_syt", "skew_two_row_syt"],
        }
    }
}

impl fmt::Display for StatId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let up = s.to_ascii_uppercase();
        STAT_IDS.iter().copied().find(|id| id.name() == up).ok_or(Error::UnknownId(up))
    }
}

/// Value of a statistic on one object.
pub fn statistic(id: StatId, obj: &CombObject) -> Result<usize, Error> {
    let fail = || mismatch(id.name(), obj.kind());
    // the row word of a tableau, read as a path
    let word: Option<Vec<u8>> = match obj {
        CombObject::BinaryWord { bits } => Some(bits.clone()),
        CombObject::LatticePath { steps } => Some(steps.clone()),
        CombObject::RootIdeal { path, .. } => Some(path.clone()),
        CombObject::SkewTwoRowSyt { word, .. } => Some(word.clone()),
        CombObject::TwoRowSyt { top } => Some(tableau_word(top)),
        _ => None,
    };
    let is_tableau = matches!(obj, CombObject::TwoRowSyt { .. } | CombObject::SkewTwoRowSyt { .. });
    if !id.accepts().contains(&obj.kind()) {
        return Err(fail());
    }
    let partner = match obj {
        CombObject::Matching { partner } | CombObject::MarkedMatching { partner, .. } => Some(partner.as_slice()),
        _ => None,
    };
    Ok(match id {
        StatId::Maj | StatId::MajSyt if is_tableau => pmaj(word.as_ref().ok_or_else(fail)?),
        StatId::Des if is_tableau => peaks(word.as_ref().ok_or_else(fail)?),
        StatId::Maj => maj(word.as_ref().ok_or_else(fail)?),
        StatId::Des => valleys(word.as_ref().ok_or_else(fail)?),
        StatId::Inv => inv(word.as_ref().ok_or_else(fail)?),
        StatId::CdesWord => cdes_word(word.as_ref().ok_or_else(fail)?),
        StatId::CdesSyt => cdes_dyck(word.as_ref().ok_or_else(fail)?),
        StatId::Peaks => peaks(word.as_ref().ok_or_else(fail)?),
        StatId::Valleys => valleys(word.as_ref().ok_or_else(fail)?),
        StatId::Pmaj => pmaj(word.as_ref().ok_or_else(fail)?),
        StatId::Depth => depth(word.as_ref().ok_or_else(fail)?),
        StatId::Modpeaks => modpeaks(word.as_ref().ok_or_else(fail)?),
        StatId::EvenEdges => even_edges(partner.ok_or_else(fail)?),
        StatId::ShortEdges => short_edges(partner.ok_or_else(fail)?),
        StatId::Blocks => blocks_of(obj).ok_or_else(fail)?,
        StatId::Ears => match obj {
            CombObject::Triangulation { n, diagonals } => ears(*n, diagonals),
            _ => return Err(fail()),
        },
        StatId::Loops | StatId::ProperEdges => match obj {
            CombObject::Ncc { partner, .. } => {
                let (e, l) = ncc_counts(partner);
                if id == StatId::Loops {
                    l
                } else {
                    e
                }
            }
            _ => return Err(fail()),
        },
        StatId::MajSyt => return Err(fail()),
        StatId::MajViaNcp => match obj {
            CombObject::SetPartition { n, blocks } => maj(&bijections::ncp_to_dyck(*n, blocks)),
            _ => return Err(fail()),
        },
    })
}

fn add_monomial(coeffs: &mut Vec<BigInt>, exp: usize) {
    if coeffs.len() <= exp {
        coeffs.resize(exp + 1, BigInt::default());
    }
    coeffs[exp] += 1;
}

fn shifted(value: usize, shift: i64) -> Result<usize, Error> {
    let e = value as i64 + shift;
    usize::try_from(e).map_err(|_| Error::NegativeExponent { shift, exponent: e })
}

/// `Σ_x q^{stat(x) + shift}` over a family.
pub fn distribution(spec: &FamilySpec, id: StatId, shift: i64) -> Result<IntPoly, Error> {
    distribution_of(&spec.enumerate()?, id, shift)
}

pub fn distribution_of(objects: &[CombObject], id: StatId, shift: i64) -> Result<IntPoly, Error> {
    let mut coeffs = Vec::new();
    for obj in objects {
        add_monomial(&mut coeffs, shifted(statistic(id, obj)?, shift)?);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// `Σ_x t^{t_stat(x)} q^{q_stat(x)}`, returned as the list of `t`-coefficients.
pub fn joint_distribution(spec: &FamilySpec, t_stat: StatId, q_stat: StatId) -> Result<Vec<IntPoly>, Error> {
    let mut slices: Vec<Vec<BigInt>> = Vec::new();
    for obj in spec.enumerate()? {
        let t = statistic(t_stat, &obj)?;
        if slices.len() <= t {
            slices.resize(t + 1, Vec::new());
        }
        add_monomial(&mut slices[t], statistic(q_stat, &obj)?);
    }
    Ok(slices.into_iter().map(IntPoly::from_coeffs).collect())
}
