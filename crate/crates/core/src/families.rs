//! Canonical encodings of the object families, exhaustive enumerators and
//! closed-form cardinalities.
//!
//! Vertices are 1-indexed and placed counterclockwise. Gap `g` sits between
//! vertices `g` and `g+1`, with gap `m` between `m` and `1`. Words and paths
//! use `0` for a north step and `1` for an east step.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::out_of_domain;
use crate::qpoly::{self, binomial, catalan, motzkin, narayana, NamedPoly};
use crate::{bijections, stats, Error, Params};

/// One combinatorial object, tagged by its encoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CombObject {
    BinaryWord {
        bits: Vec<u8>,
    },
    /// `0` = north, `1` = east.
    LatticePath {
        steps: Vec<u8>,
    },
    /// Two-row rectangular standard tableau, stored by its first row.
    TwoRowSyt {
        top: Vec<usize>,
    },
    /// Tableau of shape `(n+s, n)/(s)`; `word[i] = 1` iff `i+1` sits in the bottom row.
    SkewTwoRowSyt {
        n: usize,
        s: usize,
        word: Vec<u8>,
    },
    /// Perfect matching; `partner[i-1]` is the partner of vertex `i`.
    Matching {
        partner: Vec<usize>,
    },
    /// Blocks sorted internally and by their minima.
    SetPartition {
        n: usize,
        blocks: Vec<Vec<usize>>,
    },
    /// Non-crossing (1,2)-configuration. `Some(i)` at index `i-1` is a loop,
    /// `None` an isolated vertex. `marked` is an optional marked proper edge.
    Ncc {
        partner: Vec<Option<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        marked: Option<(usize, usize)>,
    },
    /// Triangulation of an `n`-gon by its sorted diagonals.
    Triangulation {
        n: usize,
        diagonals: Vec<(usize, usize)>,
    },
    /// Two-column semistandard tableau with entries at most `max`.
    Ssyt2Col {
        max: usize,
        rows: Vec<(usize, usize)>,
    },
    /// Root ideal of type B, by its ballot boundary path of length `2n`.
    RootIdeal {
        n: usize,
        path: Vec<u8>,
    },
    /// Matching together with the keys of its marked regions.
    MarkedMatching {
        partner: Vec<usize>,
        regions: Vec<Vec<usize>>,
    },
}

impl CombObject {
    pub fn kind(&self) -> &'static str {
        match self {
            CombObject::BinaryWord { .. } => "binary_word",
            CombObject::LatticePath { .. } => "lattice_path",
            CombObject::TwoRowSyt { .. } => "two_row_syt",
            CombObject::SkewTwoRowSyt { .. } => "skew_two_row_syt",
            CombObject::Matching { .. } => "matching",
            CombObject::SetPartition { .. } => "set_partition",
            CombObject::Ncc { .. } => "ncc",
            CombObject::Triangulation { .. } => "triangulation",
            CombObject::Ssyt2Col { .. } => "ssyt2_col",
            CombObject::RootIdeal { .. } => "root_ideal",
            CombObject::MarkedMatching { .. } => "marked_matching",
        }
    }

    /// Matching from a list of edges on `2n` vertices.
    pub fn matching_from_edges(vertices: usize, edges: &[(usize, usize)]) -> CombObject {
        let mut partner = vec![0; vertices];
        for &(a, b) in edges {
            partner[a - 1] = b;
            partner[b - 1] = a;
        }
        CombObject::Matching { partner }
    }

    pub fn partition(n: usize, blocks: Vec<Vec<usize>>) -> CombObject {
        CombObject::SetPartition { n, blocks: normalize_blocks(blocks) }
    }

    pub fn ncc_from(vertices: usize, edges: &[(usize, usize)], loops: &[usize]) -> CombObject {
        let mut partner = vec![None; vertices];
        for &(a, b) in edges {
            partner[a - 1] = Some(b);
            partner[b - 1] = Some(a);
        }
        for &v in loops {
            partner[v - 1] = Some(v);
        }
        CombObject::Ncc { partner, marked: None }
    }

    pub fn triangulation(n: usize, diagonals: &[(usize, usize)]) -> CombObject {
        let mut d: Vec<_> = diagonals.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        d.sort_unstable();
        CombObject::Triangulation { n, diagonals: d }
    }
}

pub(crate) fn normalize_blocks(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.retain(|b| !b.is_empty());
    blocks.sort_unstable();
    blocks
}

/// Sorted edge list `(i, partner(i))` with `i < partner(i)`.
pub fn matching_edges(partner: &[usize]) -> Vec<(usize, usize)> {
    (1..=partner.len()).filter(|&i| i < partner[i - 1]).map(|i| (i, partner[i - 1])).collect()
}

fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
    (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)
}

/// Regions of a non-crossing perfect matching, each keyed by its sorted gaps.
///
/// Walking along the boundary past gap `g` one meets vertex `g+1`, follows its
/// chord and continues on the gap after the partner; gaps linked this way bound
/// the same region.
pub fn matching_regions(partner: &[usize]) -> Vec<Vec<usize>> {
    let m = partner.len();
    let mut parent: Vec<usize> = (0..=m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for g in 1..=m {
        let next_vertex = g % m + 1;
        let h = partner[next_vertex - 1];
        let (a, b) = (find(&mut parent, g), find(&mut parent, h));
        parent[a] = b;
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for g in 1..=m {
        let r = find(&mut parent, g);
        classes.entry(r).or_default().push(g);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort_unstable();
    assert_eq!(out.len(), m / 2 + 1, "a non-crossing matching on {m} vertices has {} regions", m / 2 + 1);
    out
}

// ---------------------------------------------------------------------------
// family specifications

/// A finite family of objects, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// Words of length `n` with `k` ones.
    Bw { n: usize, k: usize },
    /// Words in `BW(2n,n)` with `k` cyclic descents.
    BwCdes { n: usize, k: usize },
    Paths { n: usize },
    /// Paths of depth at most `s`.
    PathsS { n: usize, s: usize },
    Dyck { n: usize },
    DyckPeaks { n: usize, k: usize },
    Syt { n: usize },
    SytCdes { n: usize, k: usize },
    SkewSyt { n: usize, s: usize },
    Ncm { n: usize },
    NcmEven { n: usize, k: usize },
    NcmSh { n: usize, k: usize },
    Ncp { n: usize },
    NcpBlocks { n: usize, k: usize },
    /// Configurations of size `n`, living on `n-1` vertices.
    Ncc { n: usize },
    /// Size `n`, with `k-1` proper edges plus loops.
    NccK { n: usize, k: usize },
    NccEl { n: usize, e: usize, l: usize },
    NccByLoops { n: usize, l: usize },
    /// Configurations of size `n` on `n-1` vertices with an optional marked edge.
    Nccb { n: usize },
    /// Size `n`, with `k` proper edges plus loops.
    NccbK { n: usize, k: usize },
    NccbEl { n: usize, e: usize, l: usize },
    NccbE { n: usize, e: usize },
    /// Triangulations of an `n`-gon.
    Tri { n: usize },
    TriEar { n: usize, k: usize },
    /// Half-turn symmetric triangulations of a `(2n+2)`-gon.
    Trib { n: usize },
    /// Two-column tableaux with `k` rows and entries at most `n`.
    Ssyt { n: usize, k: usize },
    /// Type B root ideals with at most `s` elements on the top diagonal.
    Oi { n: usize, s: usize },
    /// Half-turn symmetric non-crossing partitions of `[2n]`.
    Ncpb { n: usize },
    NcpbBlocks { n: usize, k: usize },
    /// `2k` or `2k+1` blocks.
    NcpbPaired { n: usize, k: usize },
    /// Half-turn symmetric non-crossing matchings on `4n` vertices.
    Ncmb { n: usize },
    NcmbEven { n: usize, k: usize },
    /// Between `2k-1` and `2k` even edges.
    NcmbPaired { n: usize, k: usize },
    /// Matchings in `NCM(n)` with `r` marked regions.
    NcmMarked { n: usize, r: usize },
    NcmMarkedEven { n: usize, k: usize, r: usize },
}

pub const FAMILY_IDS: &[&str] = &[
    "BW",
    "BW_CDES",
    "PATHS",
    "PATHS_S",
    "DYCK",
    "DYCK_PEAKS",
    "SYT",
    "SYT_CDES",
    "SKEW_SYT",
    "NCM",
    "NCM_EVEN",
    "NCM_SH",
    "NCP",
    "NCP_BLOCKS",
    "NCC",
    "NCC_K",
    "NCC_EL",
    "NCC_BY_LOOPS",
    "NCCB",
    "NCCB_K",
    "NCCB_EL",
    "NCCB_E",
    "TRI",
    "TRI_EAR",
    "TRIB",
    "SSYT",
    "OI",
    "NCPB",
    "NCPB_BLOCKS",
    "NCPB_PAIRED",
    "NCMB",
    "NCMB_EVEN",
    "NCMB_PAIRED",
    "NCM_MARKED",
    "NCM_MARKED_EVEN",
];

fn nonneg(p: &Params, name: &'static str) -> Result<usize, Error> {
    let v = p.get(name)?;
    usize::try_from(v).map_err(|_| out_of_domain(name, format!("{name}={v} is negative")))
}

impl FamilySpec {
    pub fn from_id(id: &str, p: &Params) -> Result<Self, Error> {
        use FamilySpec as F;
        let id = id.to_ascii_uppercase();
        let n = || nonneg(p, "n");
        let k = || nonneg(p, "k");
        let spec = match id.as_str() {
            "BW" => F::Bw { n: n()?, k: k()? },
            "BW_CDES" => F::BwCdes { n: n()?, k: k()? },
            "PATHS" => F::Paths { n: n()? },
            "PATHS_S" => F::PathsS { n: n()?, s: nonneg(p, "s")? },
            "DYCK" => F::Dyck { n: n()? },
            "DYCK_PEAKS" => F::DyckPeaks { n: n()?, k: k()? },
            "SYT" => F::Syt { n: n()? },
            "SYT_CDES" => F::SytCdes { n: n()?, k: k()? },
            "SKEW_SYT" => F::SkewSyt { n: n()?, s: nonneg(p, "s")? },
            "NCM" => F::Ncm { n: n()? },
            "NCM_EVEN" => F::NcmEven { n: n()?, k: k()? },
            "NCM_SH" => F::NcmSh { n: n()?, k: k()? },
            "NCP" => F::Ncp { n: n()? },
            "NCP_BLOCKS" => F::NcpBlocks { n: n()?, k: k()? },
            "NCC" => F::Ncc { n: n()? },
            "NCC_K" => F::NccK { n: n()?, k: k()? },
            "NCC_EL" => F::NccEl { n: n()?, e: nonneg(p, "e")?, l: nonneg(p, "l")? },
            "NCC_BY_LOOPS" => F::NccByLoops { n: n()?, l: nonneg(p, "l")? },
            "NCCB" => F::Nccb { n: n()? },
            "NCCB_K" => F::NccbK { n: n()?, k: k()? },
            "NCCB_EL" => F::NccbEl { n: n()?, e: nonneg(p, "e")?, l: nonneg(p, "l")? },
            "NCCB_E" => F::NccbE { n: n()?, e: nonneg(p, "e")? },
            "TRI" => F::Tri { n: n()? },
            "TRI_EAR" => F::TriEar { n: n()?, k: k()? },
            "TRIB" => F::Trib { n: n()? },
            "SSYT" => F::Ssyt { n: n()?, k: k()? },
            "OI" => F::Oi { n: n()?, s: nonneg(p, "s")? },
            "NCPB" => F::Ncpb { n: n()? },
            "NCPB_BLOCKS" => F::NcpbBlocks { n: n()?, k: k()? },
            "NCPB_PAIRED" => F::NcpbPaired { n: n()?, k: k()? },
            "NCMB" => F::Ncmb { n: n()? },
            "NCMB_EVEN" => F::NcmbEven { n: n()?, k: k()? },
            "NCMB_PAIRED" => F::NcmbPaired { n: n()?, k: k()? },
            "NCM_MARKED" => F::NcmMarked { n: n()?, r: nonneg(p, "r")? },
            "NCM_MARKED_EVEN" => F::NcmMarkedEven { n: n()?, k: k()?, r: nonneg(p, "r")? },
            _ => return Err(Error::UnknownId(id)),
        };
        spec.check_domain()?;
        Ok(spec)
    }

    pub fn id(&self) -> &'static str {
        use FamilySpec as F;
        match self {
            F::Bw { .. } => "BW",
            F::BwCdes { .. } => "BW_CDES",
            F::Paths { .. } => "PATHS",
            F::PathsS { .. } => "PATHS_S",
            F::Dyck { .. } => "DYCK",
            F::DyckPeaks { .. } => "DYCK_PEAKS",
            F::Syt { .. } => "SYT",
            F::SytCdes { .. } => "SYT_CDES",
            F::SkewSyt { .. } => "SKEW_SYT",
            F::Ncm { .. } => "NCM",
            F::NcmEven { .. } => "NCM_EVEN",
            F::NcmSh { .. } => "NCM_SH",
            F::Ncp { .. } => "NCP",
            F::NcpBlocks { .. } => "NCP_BLOCKS",
            F::Ncc { .. } => "NCC",
            F::NccK { .. } => "NCC_K",
            F::NccEl { .. } => "NCC_EL",
            F::NccByLoops { .. } => "NCC_BY_LOOPS",
            F::Nccb { .. } => "NCCB",
            F::NccbK { .. } => "NCCB_K",
            F::NccbEl { .. } => "NCCB_EL",
            F::NccbE { .. } => "NCCB_E",
            F::Tri { .. } => "TRI",
            F::TriEar { .. } => "TRI_EAR",
            F::Trib { .. } => "TRIB",
            F::Ssyt { .. } => "SSYT",
            F::Oi { .. } => "OI",
            F::Ncpb { .. } => "NCPB",
            F::NcpbBlocks { .. } => "NCPB_BLOCKS",
            F::NcpbPaired { .. } => "NCPB_PAIRED",
            F::Ncmb { .. } => "NCMB",
            F::NcmbEven { .. } => "NCMB_EVEN",
            F::NcmbPaired { .. } => "NCMB_PAIRED",
            F::NcmMarked { .. } => "NCM_MARKED",
            F::NcmMarkedEven { .. } => "NCM_MARKED_EVEN",
        }
    }

    pub fn params(&self) -> Params {
        use FamilySpec as F;
        let i = |x: usize| x as i64;
        match *self {
            F::Paths { n }
            | F::Dyck { n }
            | F::Syt { n }
            | F::Ncm { n }
            | F::Ncp { n }
            | F::Ncc { n }
            | F::Nccb { n }
            | F::Tri { n }
            | F::Trib { n }
            | F::Ncpb { n }
            | F::Ncmb { n } => Params::n(i(n)),
            F::Bw { n, k }
            | F::BwCdes { n, k }
            | F::DyckPeaks { n, k }
            | F::SytCdes { n, k }
            | F::NcmEven { n, k }
            | F::NcmSh { n, k }
            | F::NcpBlocks { n, k }
            | F::NccK { n, k }
            | F::NccbK { n, k }
            | F::TriEar { n, k }
            | F::Ssyt { n, k }
            | F::NcpbBlocks { n, k }
            | F::NcpbPaired { n, k }
            | F::NcmbEven { n, k }
            | F::NcmbPaired { n, k } => Params::nk(i(n), i(k)),
            F::PathsS { n, s } | F::SkewSyt { n, s } | F::Oi { n, s } => Params::n(i(n)).with_s(i(s)),
            F::NccEl { n, e, l } | F::NccbEl { n, e, l } => Params::n(i(n)).with_e(i(e)).with_l(i(l)),
            F::NccByLoops { n, l } => Params::n(i(n)).with_l(i(l)),
            F::NccbE { n, e } => Params::n(i(n)).with_e(i(e)),
            F::NcmMarked { n, r } => Params::n(i(n)).with_r(i(r)),
            F::NcmMarkedEven { n, k, r } => Params::nk(i(n), i(k)).with_r(i(r)),
        }
    }

    pub fn check_domain(&self) -> Result<(), Error> {
        use FamilySpec as F;
        let bad = |reason: &str| Err(out_of_domain(self.to_string(), reason));
        match *self {
            F::PathsS { n, s } | F::SkewSyt { n, s } | F::Oi { n, s } if s > n => bad("need s <= n"),
            F::Ncc { n } | F::NccK { n, .. } | F::NccEl { n, .. } | F::NccByLoops { n, .. } if n < 1 => {
                bad("need n >= 1")
            }
            F::Nccb { n } | F::NccbK { n, .. } | F::NccbEl { n, .. } | F::NccbE { n, .. } if n < 1 => {
                bad("need n >= 1")
            }
            F::Tri { n } if n < 3 => bad("need n >= 3"),
            F::TriEar { n, k } if n < 4 || k < 2 || 2 * k > n => bad("need n >= 4 and 2 <= k <= n/2"),
            F::Trib { n } if n < 1 => bad("need n >= 1"),
            F::NcpbBlocks { n, .. } | F::NcmbEven { n, .. } if n < 1 => bad("need n >= 1"),
            F::NcmMarked { n, r } | F::NcmMarkedEven { n, r, .. } if r > n + 1 => bad("need r <= n+1"),
            _ => Ok(()),
        }
    }

    /// Closed-form size.
    pub fn cardinality(&self) -> Result<BigInt, Error> {
        use FamilySpec as F;
        self.check_domain()?;
        let b = |n: usize, k: usize| binomial(n as i64, k as i64);
        let sq = |x: BigInt| &x * &x;
        let paths_s = |n: usize, s: usize| b(2 * n, n) - binomial(2 * n as i64, n as i64 - s as i64 - 1);
        let ncc_el = |m: usize, e: usize, l: usize| {
            if 2 * e > m {
                return BigInt::zero();
            }
            b(m, 2 * e) * catalan(e as i64) * b(m - 2 * e, l)
        };
        let g = |n: usize, k: usize| -> Result<BigInt, Error> {
            Ok(qpoly::named_polynomial(&NamedPoly::GCdes { n: n as i64, k: k as i64 })?.eval_one())
        };
        let pi_coeff = |n: usize, k: usize| -> Result<BigInt, Error> {
            Ok(qpoly::named_polynomial(&NamedPoly::PiBCoeff { n: n as i64, k: k as i64 })?.eval_one())
        };
        Ok(match *self {
            F::Bw { n, k } => b(n, k),
            F::BwCdes { n, k } => {
                if n == 0 {
                    BigInt::from((k == 0) as u8)
                } else if k == 0 || k > n {
                    BigInt::zero()
                } else {
                    b(n, k) * b(n - 1, k - 1) * 2
                }
            }
            F::Paths { n } | F::Ncpb { n } | F::Ncmb { n } | F::Trib { n } => b(2 * n, n),
            F::PathsS { n, s } | F::SkewSyt { n, s } | F::Oi { n, s } => paths_s(n, s),
            F::Dyck { n } | F::Syt { n } | F::Ncm { n } | F::Ncp { n } | F::Ncc { n } => catalan(n as i64),
            F::DyckPeaks { n, k } | F::NcpBlocks { n, k } | F::NccK { n, k } => narayana(n as i64, k as i64),
            F::NcmEven { n, k } => narayana(n as i64, k as i64 + 1),
            F::SytCdes { n, k } | F::NcmSh { n, k } => g(n, k)?,
            F::NccEl { n, e, l } => ncc_el(n - 1, e, l),
            F::NccByLoops { n, l } => {
                let m = n - 1;
                if l > m {
                    BigInt::zero()
                } else {
                    b(m, l) * motzkin((m - l) as i64)
                }
            }
            F::Nccb { n } => b(2 * (n - 1), n - 1),
            F::NccbK { n, k } => sq(b(n - 1, k)),
            F::NccbEl { n, e, l } => ncc_el(n - 1, e, l) * (e + 1),
            F::NccbE { n, e } => (0..n).map(|l| ncc_el(n - 1, e, l)).sum::<BigInt>() * (e + 1),
            F::Tri { n } => catalan(n as i64 - 2),
            F::TriEar { n, k } => {
                let num = b(n - 4, 2 * k - 4) * catalan(k as i64 - 2) * n * (BigInt::one() << (n - 2 * k));
                num / k
            }
            F::Ssyt { n, k } => narayana(n as i64 + 1, k as i64 + 1),
            F::NcpbBlocks { n, k } => pi_coeff(n, k)?,
            F::NcmbEven { n, k } => pi_coeff(n, k + 1)?,
            F::NcpbPaired { n, k } | F::NcmbPaired { n, k } => sq(b(n, k)),
            F::NcmMarked { n, r } => b(n + 1, r) * catalan(n as i64),
            F::NcmMarkedEven { n, k, r } => b(n + 1, r) * narayana(n as i64, k as i64 + 1),
        })
    }

    /// Every object once, sorted by encoding.
    pub fn enumerate(&self) -> Result<Vec<CombObject>, Error> {
        use FamilySpec as F;
        self.check_domain()?;
        let word = |bits: Vec<u8>| CombObject::BinaryWord { bits };
        let path = |steps: Vec<u8>| CombObject::LatticePath { steps };
        let mut out: Vec<CombObject> = match *self {
            F::Bw { n, k } => words(n, k, n).into_iter().map(word).collect(),
            F::BwCdes { n, k } => words(2 * n, n, 2 * n)
                .into_iter()
                .filter(|w| stats::cdes_word(w) == k)
                .map(word)
                .collect(),
            F::Paths { n } => words(2 * n, n, 2 * n).into_iter().map(path).collect(),
            F::PathsS { n, s } => words(2 * n, n, s).into_iter().map(path).collect(),
            F::Dyck { n } => words(2 * n, n, 0).into_iter().map(path).collect(),
            F::DyckPeaks { n, k } => {
                words(2 * n, n, 0).into_iter().filter(|w| stats::peaks(w) == k).map(path).collect()
            }
            F::Syt { n } => words(2 * n, n, 0).into_iter().map(|w| syt_from_word(&w)).collect(),
            F::SytCdes { n, k } => words(2 * n, n, 0)
                .into_iter()
                .filter(|w| stats::cdes_dyck(w) == k)
                .map(|w| syt_from_word(&w))
                .collect(),
            F::SkewSyt { n, s } => {
                words(2 * n, n, s).into_iter().map(|word| CombObject::SkewTwoRowSyt { n, s, word }).collect()
            }
            F::Ncm { n } => ncm_all(n).into_iter().map(|partner| CombObject::Matching { partner }).collect(),
            F::NcmEven { n, k } => ncm_all(n)
                .into_iter()
                .filter(|p| stats::even_edges(p) == k)
                .map(|partner| CombObject::Matching { partner })
                .collect(),
            F::NcmSh { n, k } => ncm_all(n)
                .into_iter()
                .filter(|p| stats::short_edges(p) == k)
                .map(|partner| CombObject::Matching { partner })
                .collect(),
            F::Ncp { n } => ncp_all(n).into_iter().map(|b| CombObject::partition(n, b)).collect(),
            F::NcpBlocks { n, k } => ncp_all(n)
                .into_iter()
                .filter(|b| b.len() == k)
                .map(|b| CombObject::partition(n, b))
                .collect(),
            F::Ncc { n } => ncc_all(n - 1).into_iter().map(ncc_plain).collect(),
            F::NccK { n, k } => ncc_all(n - 1)
                .into_iter()
                .filter(|p| {
                    let (e, l) = ncc_counts(p);
                    e + l + 1 == k
                })
                .map(ncc_plain)
                .collect(),
            F::NccEl { n, e, l } => {
                ncc_all(n - 1).into_iter().filter(|p| ncc_counts(p) == (e, l)).map(ncc_plain).collect()
            }
            F::NccByLoops { n, l } => {
                ncc_all(n - 1).into_iter().filter(|p| ncc_counts(p).1 == l).map(ncc_plain).collect()
            }
            F::Nccb { n } => ncc_all(n - 1).into_iter().flat_map(ncc_with_marks).collect(),
            F::NccbK { n, k } => ncc_all(n - 1)
                .into_iter()
                .filter(|p| {
                    let (e, l) = ncc_counts(p);
                    e + l == k
                })
                .flat_map(ncc_with_marks)
                .collect(),
            F::NccbEl { n, e, l } => {
                ncc_all(n - 1).into_iter().filter(|p| ncc_counts(p) == (e, l)).flat_map(ncc_with_marks).collect()
            }
            F::NccbE { n, e } => {
                ncc_all(n - 1).into_iter().filter(|p| ncc_counts(p).0 == e).flat_map(ncc_with_marks).collect()
            }
            F::Tri { n } => tri_all(n).into_iter().map(|d| CombObject::triangulation(n, &d)).collect(),
            F::TriEar { n, k } => tri_all(n)
                .into_iter()
                .filter(|d| stats::ears(n, d) == k)
                .map(|d| CombObject::triangulation(n, &d))
                .collect(),
            F::Trib { n } => trib_all(n),
            F::Ssyt { n, k } => ssyt_all(n, k),
            F::Oi { n, s } => (0..=s)
                .flat_map(|d| ballot_words(2 * n, n - d))
                .map(|path| CombObject::RootIdeal { n, path })
                .collect(),
            F::Ncpb { n } => ncpb_all(n),
            F::NcpbBlocks { n, k } => {
                ncpb_all(n).into_iter().filter(|o| stats::blocks_of(o) == Some(k)).collect()
            }
            F::NcpbPaired { n, k } => ncpb_all(n)
                .into_iter()
                .filter(|o| stats::blocks_of(o).is_some_and(|b| b == 2 * k || b == 2 * k + 1))
                .collect(),
            F::Ncmb { n } => ncmb_all(n).into_iter().map(|partner| CombObject::Matching { partner }).collect(),
            F::NcmbEven { n, k } => ncmb_all(n)
                .into_iter()
                .filter(|p| stats::even_edges(p) == k)
                .map(|partner| CombObject::Matching { partner })
                .collect(),
            F::NcmbPaired { n, k } => ncmb_all(n)
                .into_iter()
                .filter(|p| {
                    let e = stats::even_edges(p);
                    e + 1 >= 2 * k && e <= 2 * k
                })
                .map(|partner| CombObject::Matching { partner })
                .collect(),
            F::NcmMarked { n, r } => marked_all(n, None, r),
            F::NcmMarkedEven { n, k, r } => marked_all(n, Some(k), r),
        };
        out.sort_unstable();
        Ok(out)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.id(), self.params())
    }
}

// ---------------------------------------------------------------------------
// generators

/// Words of length `len` with `ones` ones in which every prefix has at most
/// `max_excess` more ones than zeros, in lexicographic order.
pub fn words(len: usize, ones: usize, max_excess: usize) -> Vec<Vec<u8>> {
    fn rec(buf: &mut Vec<u8>, len: usize, zeros_left: usize, ones_left: usize, excess: i64, max: i64, out: &mut Vec<Vec<u8>>) {
        if buf.len() == len {
            out.push(buf.clone());
            return;
        }
        if zeros_left > 0 {
            buf.push(0);
            rec(buf, len, zeros_left - 1, ones_left, excess - 1, max, out);
            buf.pop();
        }
        if ones_left > 0 && excess < max {
            buf.push(1);
            rec(buf, len, zeros_left, ones_left - 1, excess + 1, max, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    if ones > len {
        return out;
    }
    rec(&mut Vec::with_capacity(len), len, len - ones, ones, 0, max_excess as i64, &mut out);
    out
}

/// Words of length `len` with `ones` ones where zeros never fall behind ones.
pub fn ballot_words(len: usize, ones: usize) -> Vec<Vec<u8>> {
    if 2 * ones > len {
        return Vec::new();
    }
    words(len, ones, 0)
}

fn syt_from_word(w: &[u8]) -> CombObject {
    CombObject::TwoRowSyt { top: (1..=w.len()).filter(|&i| w[i - 1] == 0).collect() }
}

/// Matching obtained by pairing each `1` with the latest unmatched `0`.
pub fn matching_from_dyck(w: &[u8]) -> Vec<usize> {
    let mut partner = vec![0; w.len()];
    let mut stack = Vec::new();
    for (i, &b) in w.iter().enumerate() {
        if b == 0 {
            stack.push(i + 1);
        } else {
            let j = stack.pop().expect("not a Dyck word");
            partner[i] = j;
            partner[j - 1] = i + 1;
        }
    }
    partner
}

fn ncm_all(n: usize) -> Vec<Vec<usize>> {
    words(2 * n, n, 0).iter().map(|w| matching_from_dyck(w)).collect()
}

/// All non-crossing partitions of `[n]`.
pub fn ncp_all(n: usize) -> Vec<Vec<Vec<usize>>> {
    // partitions of [a, b]; the block of `a` continues at some `c` or stops
    fn gen(a: usize, b: usize) -> Vec<Vec<Vec<usize>>> {
        if a > b {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for mut rest in gen(a + 1, b) {
            rest.push(vec![a]);
            out.push(rest);
        }
        for c in a + 1..=b {
            let inner = gen(a + 1, c - 1);
            let outer = gen(c, b);
            for i in &inner {
                for o in &outer {
                    let mut p = i.clone();
                    for blk in o {
                        let mut blk = blk.clone();
                        if blk[0] == c {
                            blk.insert(0, a);
                        }
                        p.push(blk);
                    }
                    out.push(p);
                }
            }
        }
        out
    }
    gen(1, n).into_iter().map(normalize_blocks).collect()
}

/// All non-crossing (1,2)-configurations on `m` vertices, as partner arrays.
pub fn ncc_all(m: usize) -> Vec<Vec<Option<usize>>> {
    fn rec(v: usize, m: usize, cur: &mut Vec<Option<usize>>, stack: &mut Vec<usize>, out: &mut Vec<Vec<Option<usize>>>) {
        if v > m {
            if stack.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        if stack.len() > m - v + 1 {
            return;
        }
        rec(v + 1, m, cur, stack, out);
        cur[v - 1] = Some(v);
        rec(v + 1, m, cur, stack, out);
        cur[v - 1] = None;
        stack.push(v);
        rec(v + 1, m, cur, stack, out);
        stack.pop();
        if let Some(u) = stack.pop() {
            cur[v - 1] = Some(u);
            cur[u - 1] = Some(v);
            rec(v + 1, m, cur, stack, out);
            cur[v - 1] = None;
            cur[u - 1] = None;
            stack.push(u);
        }
    }
    let mut out = Vec::new();
    rec(1, m, &mut vec![None; m], &mut Vec::new(), &mut out);
    out
}

/// `(proper edges, loops)` of a configuration.
pub fn ncc_counts(partner: &[Option<usize>]) -> (usize, usize) {
    let mut e = 0;
    let mut l = 0;
    for (i, p) in partner.iter().enumerate() {
        match *p {
            Some(j) if j == i + 1 => l += 1,
            Some(j) if j > i + 1 => e += 1,
            _ => {}
        }
    }
    (e, l)
}

pub fn ncc_proper_edges(partner: &[Option<usize>]) -> Vec<(usize, usize)> {
    (1..=partner.len())
        .filter_map(|i| partner[i - 1].filter(|&j| j > i).map(|j| (i, j)))
        .collect()
}

fn ncc_plain(partner: Vec<Option<usize>>) -> CombObject {
    CombObject::Ncc { partner, marked: None }
}

fn ncc_with_marks(partner: Vec<Option<usize>>) -> Vec<CombObject> {
    let edges = ncc_proper_edges(&partner);
    let mut out = vec![CombObject::Ncc { partner: partner.clone(), marked: None }];
    for e in edges {
        out.push(CombObject::Ncc { partner: partner.clone(), marked: Some(e) });
    }
    out
}

/// All triangulations of the polygon on vertices `1..=n`, as diagonal lists.
pub fn tri_all(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn gen(a: usize, b: usize) -> Vec<Vec<(usize, usize)>> {
        if b - a < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in a + 1..b {
            let left = gen(a, k);
            let right = gen(k, b);
            for l in &left {
                for r in &right {
                    let mut d = l.clone();
                    d.extend_from_slice(r);
                    if k > a + 1 {
                        d.push((a, k));
                    }
                    if k + 1 < b {
                        d.push((k, b));
                    }
                    d.sort_unstable();
                    out.push(d);
                }
            }
        }
        out
    }
    gen(1, n)
}

fn trib_all(n: usize) -> Vec<CombObject> {
    let m = 2 * n + 2;
    let wrap = |v: usize| (v - 1) % m + 1;
    let mut out = Vec::new();
    for i in 1..=n + 1 {
        let center = (i, i + n + 1);
        // triangulate the half i, i+1, ..., i+n+1 through local labels 1..=n+2
        for half in tri_all(n + 2) {
            let mut d = vec![center];
            for (a, b) in half {
                let (a, b) = (a + i - 1, b + i - 1);
                d.push((wrap(a), wrap(b)));
                d.push((wrap(a + n + 1), wrap(b + n + 1)));
            }
            out.push(CombObject::triangulation(m, &d));
        }
    }
    out
}

fn ssyt_all(n: usize, k: usize) -> Vec<CombObject> {
    let subsets: Vec<Vec<usize>> = words(n, k, n)
        .into_iter()
        .map(|w| (1..=n).filter(|&i| w[i - 1] == 1).collect())
        .collect();
    let mut out = Vec::new();
    for a in &subsets {
        for b in &subsets {
            if a.iter().zip(b).all(|(x, y)| x <= y) {
                out.push(CombObject::Ssyt2Col { max: n, rows: a.iter().copied().zip(b.iter().copied()).collect() });
            }
        }
    }
    out
}

/// Half-turn symmetric non-crossing matchings on `4n` vertices.
///
/// Depth-first: the smallest open vertex picks a partner, and the image edge
/// under the half-turn is placed at the same time.
pub fn ncmb_all(n: usize) -> Vec<Vec<usize>> {
    let m = 4 * n;
    let half = 2 * n;
    let turn = move |v: usize| (v - 1 + half) % m + 1;
    fn rec(m: usize, partner: &mut Vec<usize>, turn: &dyn Fn(usize) -> usize, out: &mut Vec<Vec<usize>>) {
        let Some(v) = (1..=m).find(|&v| partner[v - 1] == 0) else {
            out.push(partner.clone());
            return;
        };
        for w in (v + 1..=m).step_by(2) {
            if partner[w - 1] != 0 {
                continue;
            }
            let (tv, tw) = (turn(v), turn(w));
            let image_ok = if tv == w {
                tw == v
            } else {
                partner[tv - 1] == 0 && partner[tw - 1] == 0 && tv != tw
            };
            if !image_ok {
                continue;
            }
            let new_edges = [(v, w), (tv, tw)];
            let crosses = (1..=m).any(|a| {
                let b = partner[a - 1];
                b > a && new_edges.iter().any(|&e| chords_cross((a, b), e))
            }) || chords_cross(new_edges[0], new_edges[1]);
            if crosses {
                continue;
            }
            partner[v - 1] = w;
            partner[w - 1] = v;
            partner[tv - 1] = tw;
            partner[tw - 1] = tv;
            rec(m, partner, turn, out);
            partner[v - 1] = 0;
            partner[w - 1] = 0;
            partner[tv - 1] = 0;
            partner[tw - 1] = 0;
        }
    }
    let mut out = Vec::new();
    rec(m, &mut vec![0; m], &turn, &mut out);
    out
}

fn ncpb_all(n: usize) -> Vec<CombObject> {
    ncmb_all(n)
        .into_iter()
        .map(|p| CombObject::partition(2 * n, bijections::ncm_to_ncp_blocks(&p)))
        .collect()
}

fn marked_all(n: usize, even: Option<usize>, r: usize) -> Vec<CombObject> {
    let mut out = Vec::new();
    for partner in ncm_all(n) {
        if even.is_some_and(|k| stats::even_edges(&partner) != k) {
            continue;
        }
        let regions = matching_regions(&partner);
        for choice in words(regions.len(), r, regions.len()) {
            let chosen: Vec<Vec<usize>> =
                regions.iter().zip(&choice).filter(|(_, &c)| c == 1).map(|(g, _)| g.clone()).collect();
            out.push(CombObject::MarkedMatching { partner: partner.clone(), regions: chosen });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// validation

fn is_perfect_noncrossing(partner: &[usize]) -> bool {
    let m = partner.len();
    if m % 2 == 1 {
        return false;
    }
    for i in 1..=m {
        let j = partner[i - 1];
        if j == 0 || j > m || j == i || partner[j - 1] != i {
            return false;
        }
    }
    let edges = matching_edges(partner);
    edges.iter().enumerate().all(|(x, &a)| edges[x + 1..].iter().all(|&b| !chords_cross(a, b)))
}

fn blocks_noncrossing(blocks: &[Vec<usize>]) -> bool {
    for (x, b1) in blocks.iter().enumerate() {
        for b2 in &blocks[x + 1..] {
            for w1 in b1.windows(2) {
                for w2 in b2.windows(2) {
                    if chords_cross((w1[0], w1[1]), (w2[0], w2[1])) {
                        return false;
                    }
                }
            }
            // chords from a block's min to its max close the polygon of the block
            let c1 = (b1[0], *b1.last().unwrap());
            let c2 = (b2[0], *b2.last().unwrap());
            if chords_cross(c1, c2) {
                return false;
            }
            for w in b2.windows(2) {
                if chords_cross(c1, (w[0], w[1])) {
                    return false;
                }
            }
            for w in b1.windows(2) {
                if chords_cross(c2, (w[0], w[1])) {
                    return false;
                }
            }
        }
    }
    true
}

/// True iff the object satisfies every invariant of its encoding.
pub fn validate(obj: &CombObject) -> bool {
    match obj {
        CombObject::BinaryWord { bits } => bits.iter().all(|&b| b <= 1),
        CombObject::LatticePath { steps } => {
            steps.iter().all(|&b| b <= 1) && 2 * steps.iter().filter(|&&b| b == 1).count() == steps.len()
        }
        CombObject::TwoRowSyt { top } => {
            let n = top.len();
            if n == 0 {
                return true;
            }
            if top[0] != 1 || top.windows(2).any(|w| w[0] >= w[1]) || top[n - 1] > 2 * n {
                return false;
            }
            top.iter().enumerate().all(|(i, &t)| t <= 2 * i + 1)
        }
        CombObject::SkewTwoRowSyt { n, s, word } => {
            word.len() == 2 * n
                && word.iter().all(|&b| b <= 1)
                && word.iter().filter(|&&b| b == 1).count() == *n
                && stats::depth(word) <= *s
        }
        CombObject::Matching { partner } => is_perfect_noncrossing(partner),
        CombObject::SetPartition { n, blocks } => {
            let mut seen = vec![false; *n];
            for b in blocks {
                if b.is_empty() || b.windows(2).any(|w| w[0] >= w[1]) {
                    return false;
                }
                for &x in b {
                    if x == 0 || x > *n || seen[x - 1] {
                        return false;
                    }
                    seen[x - 1] = true;
                }
            }
            seen.iter().all(|&s| s) && blocks.windows(2).all(|w| w[0][0] < w[1][0]) && blocks_noncrossing(blocks)
        }
        CombObject::Ncc { partner, marked } => {
            let m = partner.len();
            for i in 1..=m {
                if let Some(j) = partner[i - 1] {
                    if j == 0 || j > m || partner[j - 1] != Some(i) {
                        return false;
                    }
                }
            }
            let edges = ncc_proper_edges(partner);
            let ok = edges.iter().enumerate().all(|(x, &a)| edges[x + 1..].iter().all(|&b| !chords_cross(a, b)));
            ok && marked.map_or(true, |e| edges.contains(&e))
        }
        CombObject::Triangulation { n, diagonals } => {
            let n = *n;
            if n < 3 || diagonals.len() != n - 3 {
                return false;
            }
            let set: BTreeSet<_> = diagonals.iter().collect();
            if set.len() != diagonals.len() || diagonals.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            let valid = diagonals.iter().all(|&(a, b)| 1 <= a && a < b && b <= n && b - a >= 2 && !(a == 1 && b == n));
            valid
                && diagonals
                    .iter()
                    .enumerate()
                    .all(|(x, &a)| diagonals[x + 1..].iter().all(|&b| !chords_cross(a, b)))
        }
        CombObject::Ssyt2Col { max, rows } => {
            rows.iter().all(|&(a, b)| 1 <= a && a <= b && b <= *max)
                && rows.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1)
        }
        CombObject::RootIdeal { n, path } => {
            if path.len() != 2 * n || path.iter().any(|&b| b > 1) {
                return false;
            }
            let mut h: i64 = 0;
            for &b in path {
                h += if b == 0 { 1 } else { -1 };
                if h < 0 {
                    return false;
                }
            }
            h % 2 == 0
        }
        CombObject::MarkedMatching { partner, regions } => {
            if !is_perfect_noncrossing(partner) {
                return false;
            }
            let all = matching_regions(partner);
            regions.windows(2).all(|w| w[0] < w[1]) && regions.iter().all(|r| all.contains(r))
        }
    }
}

