//! The positive-root poset and the ad-nilpotent ideals of `b`.
//!
//! An ideal of `b` contained in `n` is spanned by root vectors `x_beta` for
//! `beta` in an upper set of the positive-root poset, so ideals are stored
//! as bitsets over the sorted positive roots (`r <= 120` fits in a `u128`).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::weight::Weight;

#[derive(Clone, Debug)]
pub struct RootPoset {
    coords: Vec<Vec<i32>>,
    /// `up[k]` lists the roots `beta_k + alpha_i` that are positive roots.
    up: Vec<Vec<usize>>,
}

impl RootPoset {
    pub fn new(rs: &RootSystem) -> RootPoset {
        let coords = rs.positive_root_coords().to_vec();
        let up = rs
            .positive_roots()
            .iter()
            .map(|beta| {
                rs.simple_roots()
                    .iter()
                    .filter_map(|a| rs.positive_root_index(&(beta + a)))
                    .collect()
            })
            .collect();
        RootPoset { coords, up }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Simple-root coordinates of element `k`.
    pub fn element(&self, k: usize) -> &[i32] {
        &self.coords[k]
    }

    /// `a <= b` iff `b - a` is a nonnegative combination of simple roots.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.coords[a]
            .iter()
            .zip(&self.coords[b])
            .all(|(x, y)| x <= y)
    }

    /// Cover relations `(beta, beta + alpha_i)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .up
            .iter()
            .enumerate()
            .flat_map(|(k, ups)| ups.iter().map(move |&u| (k, u)))
            .collect();
        out.sort();
        out
    }

    pub fn upper_covers(&self, k: usize) -> &[usize] {
        &self.up[k]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&b| (0..self.len()).all(|a| a == b || !self.leq(a, b)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| a == b || !self.leq(a, b)))
            .collect()
    }
}

pub fn root_poset(rs: &RootSystem) -> RootPoset {
    RootPoset::new(rs)
}

/// An ad-nilpotent ideal of `b`: an upper set of the positive-root poset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct NilIdeal {
    bits: u128,
}

impl NilIdeal {
    pub fn empty() -> NilIdeal {
        NilIdeal { bits: 0 }
    }

    /// The whole nilradical `n`.
    pub fn full(r: usize) -> NilIdeal {
        NilIdeal {
            bits: if r >= 128 { u128::MAX } else { (1u128 << r) - 1 },
        }
    }

    /// Build from member indices; does not check the upper-set property.
    pub fn from_members(members: impl IntoIterator<Item = usize>) -> NilIdeal {
        NilIdeal {
            bits: members.into_iter().fold(0, |acc, k| acc | (1u128 << k)),
        }
    }

    pub fn contains(&self, k: usize) -> bool {
        self.bits >> k & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn members(&self) -> Vec<usize> {
        (0..128).filter(|&k| self.contains(k)).collect()
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn is_upper_set(&self, poset: &RootPoset) -> bool {
        if self.bits >> poset.len() != 0 {
            return false;
        }
        self.members()
            .into_iter()
            .all(|k| poset.upper_covers(k).iter().all(|&u| self.contains(u)))
    }

    /// Member roots in simple-root coordinates, sorted.
    pub fn member_coords(&self, rs: &RootSystem) -> Vec<Vec<i32>> {
        let mut out: Vec<Vec<i32>> = self
            .members()
            .into_iter()
            .map(|k| rs.positive_root_coords()[k].clone())
            .collect();
        out.sort();
        out
    }

    /// JSON list of member roots as simple-root coordinate vectors.
    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        serde_json::to_value(self.member_coords(rs)).expect("integer vectors serialize")
    }
}

// Lexicographic on the membership vector (index 0 first, absent < present).
impl Ord for NilIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.reverse_bits().cmp(&other.bits.reverse_bits())
    }
}

impl PartialOrd for NilIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for NilIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

/// All ideals (or those with exactly `size` members), sorted.
pub fn enumerate_ideals(rs: &RootSystem, size: Option<usize>) -> Result<Vec<NilIdeal>> {
    let r = rs.num_positive_roots();
    if let Some(k) = size {
        if k > r {
            return Err(Error::IdealSizeOutOfRange { size: k, max: r });
        }
    }
    let poset = RootPoset::new(rs);
    let mut out = Vec::new();
    // Roots are sorted by height, so walking indices downwards visits
    // every root after all roots above it.
    fn walk(
        poset: &RootPoset,
        k: usize,
        current: NilIdeal,
        size: Option<usize>,
        out: &mut Vec<NilIdeal>,
    ) {
        if let Some(s) = size {
            if current.len() > s || current.len() + k < s {
                return;
            }
        }
        if k == 0 {
            out.push(current);
            return;
        }
        let idx = k - 1;
        walk(poset, idx, current, size, out);
        if poset.upper_covers(idx).iter().all(|&u| current.contains(u)) {
            let with = NilIdeal {
                bits: current.bits | (1u128 << idx),
            };
            walk(poset, idx, with, size, out);
        }
    }
    walk(&poset, r, NilIdeal::empty(), size, &mut out);
    out.sort();
    Ok(out)
}

/// Number of ideals of each size `0..=r`.
pub fn ideal_counts_by_size(rs: &RootSystem) -> Vec<usize> {
    let mut counts = vec![0; rs.num_positive_roots() + 1];
    for ideal in enumerate_ideals(rs, None).expect("no size filter") {
        counts[ideal.len()] += 1;
    }
    counts
}

/// `<a>`: the sum of the roots spanning the ideal.
pub fn ideal_weight_sum(rs: &RootSystem, ideal: &NilIdeal) -> Weight {
    let mut acc = Weight::zero(rs.rank());
    for k in ideal.members() {
        acc += &rs.positive_roots()[k];
    }
    acc
}

/// Whether distinct ideals always have distinct weight sums.
pub fn verify_weight_sum_injectivity(rs: &RootSystem) -> bool {
    let ideals = enumerate_ideals(rs, None).expect("no size filter");
    let sums: HashSet<Weight> = ideals.iter().map(|i| ideal_weight_sum(rs, i)).collect();
    sums.len() == ideals.len()
}

/// A vector of the weight basis `{x_beta, y_beta, h_j}` of `g`.
///
/// `X(k)` and `Y(k)` index the sorted positive roots; `H(j)` is the simple
/// coroot `alpha_j^vee`, so `[x_{alpha_j}, y_{alpha_j}] = H(j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    X(usize),
    Y(usize),
    H(usize),
}

impl BasisLabel {
    pub fn weight(&self, rs: &RootSystem) -> Weight {
        match *self {
            BasisLabel::X(k) => rs.positive_roots()[k].clone(),
            BasisLabel::Y(k) => -&rs.positive_roots()[k],
            BasisLabel::H(_) => Weight::zero(rs.rank()),
        }
    }

    fn check(&self, rs: &RootSystem) -> Result<()> {
        let ok = match *self {
            BasisLabel::X(k) | BasisLabel::Y(k) => k < rs.num_positive_roots(),
            BasisLabel::H(j) => j < rs.rank(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownLabel(self.to_string()))
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::X(k) => write!(f, "x{}", k + 1),
            BasisLabel::Y(k) => write!(f, "y{}", k + 1),
            BasisLabel::H(j) => write!(f, "h{}", j + 1),
        }
    }
}

impl FromStr for BasisLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownLabel(s.to_string());
        let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let k: usize = tail.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match head {
            "x" | "X" => Ok(BasisLabel::X(k - 1)),
            "y" | "Y" => Ok(BasisLabel::Y(k - 1)),
            "h" | "H" => Ok(BasisLabel::H(k - 1)),
            _ => Err(bad()),
        }
    }
}

/// Whether the span of the given basis vectors satisfies `[b, a] ⊆ a`.
///
/// The span is stable under `h` because every label is a weight vector, so
/// it suffices to check the brackets with `x_{alpha_i}` for simple `alpha_i`,
/// which generate `n`.
pub fn is_b_normal(rs: &RootSystem, labels: &[BasisLabel]) -> Result<bool> {
    for label in labels {
        label.check(rs)?;
    }
    let set: BTreeSet<BasisLabel> = labels.iter().copied().collect();
    let cartan = rs.cartan_matrix();
    for (i, alpha) in rs.simple_roots().iter().enumerate() {
        let simple_idx = rs
            .positive_root_index(alpha)
            .expect("simple roots are positive roots");
        for label in &set {
            let needed = match *label {
                BasisLabel::X(k) => rs
                    .positive_root_index(&(&rs.positive_roots()[k] + alpha))
                    .map(BasisLabel::X),
                BasisLabel::Y(k) if k == simple_idx => Some(BasisLabel::H(i)),
                BasisLabel::Y(k) => rs
                    .positive_root_index(&(&rs.positive_roots()[k] - alpha))
                    .map(BasisLabel::Y),
                // [x_i, h_j] = -<alpha_i, alpha_j^vee> x_i
                BasisLabel::H(j) => (cartan[j][i] != 0).then_some(BasisLabel::X(simple_idx)),
            };
            if let Some(needed) = needed {
                if !set.contains(&needed) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
