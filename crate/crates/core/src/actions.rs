//! Cyclic actions on the families, order checks and rowmotion.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::bijections::{ncm_to_ncp_blocks, ncm_to_syt, ncp_to_ncm, syt_to_ncm};
use crate::error::mismatch;
use crate::families::{normalize_blocks, CombObject, FamilySpec};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ActionId {
    /// Rotation by `points / order` positions.
    Rot,
    /// Cyclic shift of a word by `len / order` positions.
    Shift,
    /// Rotation transported to two-row tableaux through their matchings.
    Promotion,
    /// Word shift on skew two-row tableaux.
    PromotionSkew,
    /// Jeu-de-taquin promotion, kept as an oracle.
    JdtPromotion,
    /// Kreweras complement, through the fattened matching.
    Kreweras,
    /// Toggle a loop on vertex 1 unless it carries a proper edge.
    Flip,
    /// One-step rotation after [`ActionId::Flip`].
    Twist,
    TwistSquared,
    /// Rotation by `points / (2 * order)` on half-turn symmetric objects.
    RotB,
    /// Bender–Knuth promotion on two-column tableaux.
    KPromotion,
    /// Increment action on two-column tableaux matching rotation of partitions.
    PhiSsyt,
    Rowmotion,
    Identity,
}

pub const ACTION_IDS: &[ActionId] = &[
    ActionId::Rot,
    ActionId::Shift,
    ActionId::Promotion,
    ActionId::PromotionSkew,
    ActionId::JdtPromotion,
    ActionId::Kreweras,
    ActionId::Flip,
    ActionId::Twist,
    ActionId::TwistSquared,
    ActionId::RotB,
    ActionId::KPromotion,
    ActionId::PhiSsyt,
    ActionId::Rowmotion,
    ActionId::Identity,
];

impl ActionId {
    pub fn name(&self) -> &'static str {
        match self {
            ActionId::Rot => "ROT",
            ActionId::Shift => "SHIFT",
            ActionId::Promotion => "PROMOTION",
            ActionId::PromotionSkew => "PROMOTION_SKEW",
            ActionId::JdtPromotion => "JDT_PROMOTION",
            ActionId::Kreweras => "KREWERAS",
            ActionId::Flip => "FLIP",
            ActionId::Twist => "TWIST",
            ActionId::TwistSquared => "TWIST_SQUARED",
            ActionId::RotB => "ROT_B",
            ActionId::KPromotion => "K_PROMOTION",
            ActionId::PhiSsyt => "PHI_SSYT",
            ActionId::Rowmotion => "ROWMOTION",
            ActionId::Identity => "IDENTITY",
        }
    }
}

impl fmt::Display for ActionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ActionId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let up = s.to_ascii_uppercase();
        ACTION_IDS.iter().copied().find(|a| a.name() == up).ok_or(Error::UnknownId(up))
    }
}

/// An action together with the order of the cyclic group it generates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ActionSpec {
    pub id: ActionId,
    pub order: usize,
}

impl ActionSpec {
    pub fn new(id: ActionId, order: usize) -> Self {
        ActionSpec { id, order }
    }
}

impl fmt::Display for ActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.id, self.order)
    }
}

fn step_for(points: usize, order: usize, what: &str) -> Result<usize, Error> {
    if order == 0 || points % order != 0 {
        return Err(Error::PreconditionViolated(format!("order {order} does not divide the {points} {what}")));
    }
    Ok(points / order)
}

fn shift_vertex(v: usize, step: usize, m: usize) -> usize {
    (v - 1 + step) % m + 1
}

// ---------------------------------------------------------------------------
// rotations

pub fn rotate_matching(partner: &[usize], step: usize) -> Vec<usize> {
    let m = partner.len();
    let mut out = vec![0; m];
    for i in 1..=m {
        out[shift_vertex(i, step, m) - 1] = shift_vertex(partner[i - 1], step, m);
    }
    out
}

pub fn rotate_blocks(n: usize, blocks: &[Vec<usize>], step: usize) -> Vec<Vec<usize>> {
    normalize_blocks(blocks.iter().map(|b| b.iter().map(|&v| shift_vertex(v, step, n)).collect()).collect())
}

pub fn rotate_ncc(partner: &[Option<usize>], step: usize) -> Vec<Option<usize>> {
    let m = partner.len();
    let mut out = vec![None; m];
    for i in 1..=m {
        out[shift_vertex(i, step, m) - 1] = partner[i - 1].map(|j| shift_vertex(j, step, m));
    }
    out
}

fn rotate_edge(e: (usize, usize), step: usize, m: usize) -> (usize, usize) {
    let (a, b) = (shift_vertex(e.0, step, m), shift_vertex(e.1, step, m));
    (a.min(b), a.max(b))
}

pub fn rotate_diagonals(n: usize, diagonals: &[(usize, usize)], step: usize) -> Vec<(usize, usize)> {
    let mut d: Vec<_> = diagonals.iter().map(|&e| rotate_edge(e, step, n)).collect();
    d.sort_unstable();
    d
}

pub fn shift_word(w: &[u8], step: usize) -> Vec<u8> {
    let m = w.len();
    (0..m).map(|i| w[(i + m - step % m.max(1)) % m]).collect()
}

fn rotate(obj: &CombObject, step: usize) -> Result<CombObject, Error> {
    Ok(match obj {
        CombObject::Matching { partner } => CombObject::Matching { partner: rotate_matching(partner, step) },
        CombObject::SetPartition { n, blocks } => CombObject::SetPartition { n: *n, blocks: rotate_blocks(*n, blocks, step) },
        CombObject::Ncc { partner, marked } => CombObject::Ncc {
            partner: rotate_ncc(partner, step),
            marked: marked.map(|e| rotate_edge(e, step, partner.len())),
        },
        CombObject::Triangulation { n, diagonals } => {
            CombObject::Triangulation { n: *n, diagonals: rotate_diagonals(*n, diagonals, step) }
        }
        CombObject::MarkedMatching { partner, regions } => {
            let m = partner.len();
            let mut regions: Vec<Vec<usize>> = regions
                .iter()
                .map(|r| {
                    let mut g: Vec<usize> = r.iter().map(|&g| shift_vertex(g, step, m)).collect();
                    g.sort_unstable();
                    g
                })
                .collect();
            regions.sort_unstable();
            CombObject::MarkedMatching { partner: rotate_matching(partner, step), regions }
        }
        other => return Err(mismatch("ROT", other.kind())),
    })
}

fn points(obj: &CombObject) -> Option<usize> {
    Some(match obj {
        CombObject::Matching { partner } | CombObject::MarkedMatching { partner, .. } => partner.len(),
        CombObject::SetPartition { n, .. } | CombObject::Triangulation { n, .. } => *n,
        CombObject::Ncc { partner, .. } => partner.len(),
        _ => return None,
    })
}

// ---------------------------------------------------------------------------
// configurations

pub fn flip(partner: &[Option<usize>]) -> Vec<Option<usize>> {
    let mut out = partner.to_vec();
    if let Some(first) = out.first_mut() {
        *first = match *first {
            None => Some(1),
            Some(1) => None,
            proper => proper,
        };
    }
    out
}

fn twist(obj: &CombObject) -> Result<CombObject, Error> {
    match obj {
        CombObject::Ncc { partner, marked } => rotate(&CombObject::Ncc { partner: flip(partner), marked: *marked }, 1),
        other => Err(mismatch("TWIST", other.kind())),
    }
}

// ---------------------------------------------------------------------------
// tableaux

/// Jeu-de-taquin promotion on a rectangular two-row tableau: delete `2n`,
/// slide the hole back to the first cell, increment, and put 1 there.
pub fn jdt_promotion(top: &[usize]) -> Vec<usize> {
    let n = top.len();
    let mut grid = [vec![0usize; n], vec![0usize; n]];
    let mut in_top = vec![false; 2 * n + 1];
    for &t in top {
        in_top[t] = true;
    }
    let (mut c0, mut c1) = (0, 0);
    for v in 1..=2 * n {
        if in_top[v] {
            grid[0][c0] = v;
            c0 += 1;
        } else {
            grid[1][c1] = v;
            c1 += 1;
        }
    }
    let (mut r, mut c) = (1usize, n - 1);
    loop {
        let left = if c > 0 { Some(grid[r][c - 1]) } else { None };
        let above = if r == 1 { Some(grid[0][c]) } else { None };
        match (left, above) {
            (None, None) => break,
            (Some(x), Some(y)) if y > x => {
                grid[1][c] = y;
                r = 0;
            }
            (Some(x), _) => {
                grid[r][c] = x;
                c -= 1;
            }
            (None, Some(y)) => {
                grid[1][c] = y;
                r = 0;
            }
        }
    }
    grid[r][c] = 0;
    grid[0].iter().map(|v| v + 1).collect()
}

/// A skew two-column tableau: each row lists `(column, entry)` cells.
pub type SkewCells = Vec<Vec<(usize, usize)>>;

/// Bender–Knuth involution swapping the roles of `i` and `i+1`.
pub fn bender_knuth(rows: &SkewCells, i: usize) -> SkewCells {
    let at = |r: usize, c: usize| -> Option<usize> {
        rows.get(r).and_then(|row| row.iter().find(|&&(cc, _)| cc == c).map(|&(_, v)| v))
    };
    let mut out = rows.clone();
    for (r, row) in rows.iter().enumerate() {
        let mut free: Vec<usize> = Vec::new();
        for (idx, &(c, v)) in row.iter().enumerate() {
            let stuck = (v == i && at(r + 1, c) == Some(i + 1)) || (v == i + 1 && r > 0 && at(r - 1, c) == Some(i));
            if (v == i || v == i + 1) && !stuck {
                free.push(idx);
            }
        }
        let small = free.iter().filter(|&&idx| row[idx].1 == i).count();
        let large = free.len() - small;
        for (pos, &idx) in free.iter().enumerate() {
            out[r][idx].1 = if pos < large { i } else { i + 1 };
        }
        let _ = small;
    }
    out
}

/// Promotion on tableaux with entries at most `max`: Bender–Knuth moves from
/// `max-1` down to 1.
pub fn k_promotion_cells(rows: &SkewCells, max: usize) -> SkewCells {
    let mut cur = rows.clone();
    for i in (1..max).rev() {
        cur = bender_knuth(&cur, i);
    }
    cur
}

fn cells_of(rows: &[(usize, usize)]) -> SkewCells {
    rows.iter().map(|&(a, b)| vec![(0, a), (1, b)]).collect()
}

pub fn k_promotion(max: usize, rows: &[(usize, usize)]) -> Vec<(usize, usize)> {
    k_promotion_cells(&cells_of(rows), max).into_iter().map(|r| (r[0].1, r[1].1)).collect()
}

/// Increment action on a two-column tableau with entries at most `n-1`.
pub fn phi_ssyt(n: usize, rows: &[(usize, usize)]) -> Result<Vec<(usize, usize)>, Error> {
    let col1: Vec<usize> = rows.iter().map(|r| r.0).collect();
    let col2: Vec<usize> = rows.iter().map(|r| r.1).collect();
    let at_least = |col: &[usize], j: usize| col.iter().filter(|&&v| v >= j).count();
    let balanced: Vec<usize> = (1..n).filter(|&j| at_least(&col1, j) == at_least(&col2, j)).collect();
    let absent: Vec<usize> = balanced.iter().copied().filter(|j| !col1.contains(j) && !col2.contains(j)).collect();
    let last_absent = absent.last().copied().unwrap_or(0);
    let last_balanced = balanced.last().copied().unwrap_or(0);
    let mut c1: Vec<usize> = col1.iter().map(|v| v + 1).collect();
    let mut c2: Vec<usize> = col2.iter().map(|v| v + 1).collect();
    if last_absent + 1 != n {
        let bad = || Error::PreconditionViolated("tableau does not fit the increment rule".into());
        let p1 = c1.iter().position(|&v| v == last_balanced + 1).ok_or_else(bad)?;
        c1[p1] = 1;
        let p2 = c2.iter().position(|&v| v == n).ok_or_else(bad)?;
        c2[p2] = last_absent + 1;
        c1.sort_unstable();
        c2.sort_unstable();
    }
    Ok(c1.into_iter().zip(c2).collect())
}

// ---------------------------------------------------------------------------
// rowmotion

/// Rowmotion on a root ideal of type B given by its ballot boundary path.
///
/// The path `w` is doubled to the half-turn symmetric Dyck path
/// `w + reverse(complement(w))` of semilength `2n`; Dyck paths are order
/// ideals of the type A root poset on intervals of `[2n]`, and symmetric
/// ones are the ideals of the folded type B poset.
pub fn rowmotion(n: usize, path: &[u8]) -> Vec<u8> {
    let big = 2 * n;
    let mut full = path.to_vec();
    full.extend(path.iter().rev().map(|b| 1 - b));
    // reach[i] = number of up steps before the i-th down step
    let mut reach = vec![0usize; big + 1];
    let mut ups = 0;
    let mut downs = 0;
    for &b in &full {
        if b == 0 {
            ups += 1;
        } else {
            downs += 1;
            reach[downs] = ups;
        }
    }
    let in_ideal = |i: usize, j: usize| j <= reach[i];
    // minimal elements of the complement generate the new ideal
    let mut new_reach: Vec<usize> = (0..=big).collect();
    for i in 1..big {
        for j in i + 1..=big {
            if in_ideal(i, j) {
                continue;
            }
            let below_left = j - 1 == i || in_ideal(i, j - 1);
            let below_right = i + 1 == j || in_ideal(i + 1, j);
            if below_left && below_right {
                for x in i..j {
                    new_reach[x] = new_reach[x].max(j);
                }
            }
        }
    }
    let mut out = Vec::with_capacity(2 * big);
    let mut ups = 0;
    for &r in new_reach.iter().skip(1) {
        while ups < r {
            out.push(0);
            ups += 1;
        }
        out.push(1);
    }
    out.truncate(big);
    out
}

// ---------------------------------------------------------------------------
// dispatch

/// Apply one generator of the action.
pub fn act(a: &ActionSpec, obj: &CombObject) -> Result<CombObject, Error> {
    let fail = || mismatch(a.id.name(), obj.kind());
    Ok(match a.id {
        ActionId::Identity => obj.clone(),
        ActionId::Rot => {
            let m = points(obj).ok_or_else(fail)?;
            rotate(obj, step_for(m, a.order, "points")?)?
        }
        ActionId::RotB => {
            let m = points(obj).ok_or_else(fail)?;
            rotate(obj, step_for(m, 2 * a.order, "points")?)?
        }
        ActionId::Shift => match obj {
            CombObject::BinaryWord { bits } => {
                CombObject::BinaryWord { bits: shift_word(bits, step_for(bits.len(), a.order, "letters")?) }
            }
            CombObject::LatticePath { steps } => {
                CombObject::LatticePath { steps: shift_word(steps, step_for(steps.len(), a.order, "letters")?) }
            }
            _ => return Err(fail()),
        },
        ActionId::PromotionSkew => match obj {
            CombObject::SkewTwoRowSyt { n, s, word } => CombObject::SkewTwoRowSyt {
                n: *n,
                s: *s,
                word: shift_word(word, step_for(word.len(), a.order, "letters")?),
            },
            _ => return Err(fail()),
        },
        ActionId::Promotion => match obj {
            CombObject::TwoRowSyt { top } => {
                let step = step_for(2 * top.len(), a.order, "entries")?;
                CombObject::TwoRowSyt { top: ncm_to_syt(&rotate_matching(&syt_to_ncm(top), step)) }
            }
            _ => return Err(fail()),
        },
        ActionId::JdtPromotion => match obj {
            CombObject::TwoRowSyt { top } => {
                let step = step_for(2 * top.len(), a.order, "entries")?;
                let mut t = top.clone();
                for _ in 0..step {
                    t = jdt_promotion(&t);
                }
                CombObject::TwoRowSyt { top: t }
            }
            _ => return Err(fail()),
        },
        ActionId::Kreweras => match obj {
            CombObject::SetPartition { n, blocks } => {
                let fat = rotate_matching(&ncp_to_ncm(*n, blocks), 1);
                CombObject::SetPartition { n: *n, blocks: ncm_to_ncp_blocks(&fat) }
            }
            _ => return Err(fail()),
        },
        ActionId::Flip => match obj {
            CombObject::Ncc { partner, marked } => CombObject::Ncc { partner: flip(partner), marked: *marked },
            _ => return Err(fail()),
        },
        ActionId::Twist => twist(obj)?,
        ActionId::TwistSquared => twist(&twist(obj)?)?,
        ActionId::KPromotion => match obj {
            CombObject::Ssyt2Col { max, rows } => CombObject::Ssyt2Col { max: *max, rows: k_promotion(*max, rows) },
            _ => return Err(fail()),
        },
        ActionId::PhiSsyt => match obj {
            CombObject::Ssyt2Col { max, rows } => CombObject::Ssyt2Col { max: *max, rows: phi_ssyt(max + 1, rows)? },
            _ => return Err(fail()),
        },
        ActionId::Rowmotion => match obj {
            CombObject::RootIdeal { n, path } => CombObject::RootIdeal { n: *n, path: rowmotion(*n, path) },
            _ => return Err(fail()),
        },
    })
}

/// Apply the generator `times` times.
pub fn act_pow(a: &ActionSpec, obj: &CombObject, times: usize) -> Result<CombObject, Error> {
    let mut cur = obj.clone();
    for _ in 0..times {
        cur = act(a, &cur)?;
    }
    Ok(cur)
}

/// The permutation induced on a sorted object list, as image indices.
pub fn permutation(a: &ActionSpec, objects: &[CombObject]) -> Result<Vec<usize>, Error> {
    let index: HashMap<&CombObject, usize> = objects.iter().enumerate().map(|(i, o)| (o, i)).collect();
    objects
        .iter()
        .map(|o| {
            let img = act(a, o)?;
            index.get(&img).copied().ok_or_else(|| {
                Error::PreconditionViolated(format!("{} leaves the family at {o:?}", a.id))
            })
        })
        .collect()
}

/// Cycle lengths of a permutation, sorted.
pub fn cycle_lengths(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

/// Exact order of the permutation induced on the family.
pub fn order_check(a: &ActionSpec, spec: &FamilySpec) -> Result<usize, Error> {
    let objects = spec.enumerate()?;
    let perm = permutation(a, &objects)?;
    Ok(cycle_lengths(&perm).into_iter().fold(1, |acc, l| acc.lcm(&l)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_figure() {
        let c = CombObject::ncc_from(12, &[(3, 4), (7, 12), (8, 10)], &[5, 6]);
        let t = act(&ActionSpec::new(ActionId::Twist, 24), &c).unwrap();
        assert_eq!(t, CombObject::ncc_from(12, &[(4, 5), (1, 8), (9, 11)], &[2, 6, 7]));
    }

    #[test]
    fn phi_ssyt_example() {
        let rows = [(1, 2), (2, 3), (3, 4), (7, 7)];
        assert_eq!(phi_ssyt(8, &rows).unwrap(), vec![(1, 3), (2, 4), (3, 5), (4, 7)]);
    }

    #[test]
    fn rowmotion_extremes() {
        // full ideal of B_2: the path never drops, empty ideal: balanced path 0101
        let full = vec![0, 0, 0, 0];
        let empty = vec![0, 1, 0, 1];
        assert_eq!(rowmotion(2, &full), empty);
        let minimal = rowmotion(2, &empty);
        assert_ne!(minimal, empty);
    }
}
