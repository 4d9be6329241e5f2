//! Exhaustive maximization of `Cas(gamma_1 + ... + gamma_i)` over
//! `i`-element subsets of the weight basis of `g`, with branch and bound.

use crate::character::binomial;
use crate::error::{Error, Result};
use crate::ideals::BasisLabel;
use crate::root_system::RootSystem;
use crate::weight::Weight;
use crate::Rational;

/// The weight basis `x_1..x_r, y_1..y_r, h_1..h_l` of `g`.
pub fn basis_labels(rs: &RootSystem) -> Vec<BasisLabel> {
    let r = rs.num_positive_roots();
    (0..r)
        .map(BasisLabel::X)
        .chain((0..r).map(BasisLabel::Y))
        .chain((0..rs.rank()).map(BasisLabel::H))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceResult {
    pub m: Rational,
    /// Every maximizing label subset, each sorted, list sorted.
    pub argmax: Vec<Vec<BasisLabel>>,
}

impl BruteForceResult {
    /// Distinct weight sums of the maximizing subsets, with the number of
    /// subsets realizing each.
    pub fn weight_sums(&self, rs: &RootSystem) -> Vec<(Weight, u64)> {
        let mut sums: std::collections::BTreeMap<Weight, u64> = Default::default();
        for subset in &self.argmax {
            let mut acc = Weight::zero(rs.rank());
            for label in subset {
                acc += &label.weight(rs);
            }
            *sums.entry(acc).or_insert(0) += 1;
        }
        sums.into_iter().collect()
    }
}

pub fn mi_bruteforce(rs: &RootSystem, i: usize, budget: u64) -> Result<BruteForceResult> {
    mi_bruteforce_with(rs, i, budget, true)
}

/// `prune = false` visits every subset; used to validate the bound.
pub fn mi_bruteforce_with(
    rs: &RootSystem,
    i: usize,
    budget: u64,
    prune: bool,
) -> Result<BruteForceResult> {
    let n = rs.dimension();
    if i > n {
        return Err(Error::DegreeOutOfRange { degree: i, max: n });
    }
    let needed = binomial(n, i);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "brute-force subset search",
            needed,
            budget,
            hint: "; degrees up to r are covered by the ideal strategy",
        });
    }

    let mut cands: Vec<Candidate> = basis_labels(rs)
        .into_iter()
        .map(|label| {
            let weight = label.weight(rs);
            Candidate {
                label,
                dual: rs.scaled_dual(&weight),
                rho_pairing: rs.scaled_inner(rs.rho(), &weight),
                norm: rs.scaled_inner(&weight, &weight),
                weight,
            }
        })
        .collect();
    cands.sort_by(|a, b| {
        b.rho_pairing
            .cmp(&a.rho_pairing)
            .then_with(|| a.label.cmp(&b.label))
    });

    let rho_sq = rs.scaled_inner(rs.rho(), rs.rho());
    let two_rho = rs.rho().scale(2);
    let search = Search {
        cands: &cands,
        rho_sq,
        cap: rs.scaled_casimir(&two_rho),
        // every subset sum is a weight of V_{2 rho}, so its norm is at most |2 rho|
        tail_norm_cap: rs.scaled_inner(&two_rho, &two_rho),
        prune,
    };
    let mut state = State {
        v: rs.rho().clone(),
        v_sq: rho_sq,
        chosen: Vec::with_capacity(i),
        best: i64::MIN,
        argmax: Vec::new(),
        scratch: Vec::with_capacity(cands.len()),
    };
    search.descend(0, i, &mut state);

    let mut argmax: Vec<Vec<BasisLabel>> = state
        .argmax
        .into_iter()
        .map(|idx| {
            let mut labels: Vec<BasisLabel> = idx.into_iter().map(|k| cands[k].label).collect();
            labels.sort();
            labels
        })
        .collect();
    argmax.sort();
    Ok(BruteForceResult {
        m: rs.scaled_to_rational(state.best),
        argmax,
    })
}

struct Candidate {
    label: BasisLabel,
    weight: Weight,
    dual: Vec<i64>,
    rho_pairing: i64,
    norm: i64,
}

struct Search<'a> {
    cands: &'a [Candidate],
    rho_sq: i64,
    cap: i64,
    tail_norm_cap: i64,
    prune: bool,
}

struct State {
    /// `rho + sum of chosen weights`
    v: Weight,
    v_sq: i64,
    chosen: Vec<usize>,
    best: i64,
    argmax: Vec<Vec<usize>>,
    scratch: Vec<i64>,
}

impl Search<'_> {
    fn pairing(&self, v: &Weight, k: usize) -> i64 {
        v.coords()
            .iter()
            .zip(&self.cands[k].dual)
            .map(|(&a, &b)| a as i64 * b)
            .sum()
    }

    /// Upper bound on the Casimir value of any completion.
    fn bound(&self, pos: usize, remaining: usize, st: &mut State) -> i64 {
        st.scratch.clear();
        for k in pos..self.cands.len() {
            let p = self.pairing(&st.v, k);
            st.scratch.push(p);
        }
        let top = remaining.min(st.scratch.len());
        if top > 0 && top < st.scratch.len() {
            st.scratch.select_nth_unstable_by(top - 1, |a, b| b.cmp(a));
        }
        let linear: i64 = st.scratch[..top].iter().sum();
        // |v + tau|^2 = |v|^2 + 2 (v, tau) + |tau|^2
        let bound = st.v_sq + 2 * linear + self.tail_norm_cap - self.rho_sq;
        bound.min(self.cap)
    }

    fn descend(&self, pos: usize, remaining: usize, st: &mut State) {
        if remaining == 0 {
            let value = st.v_sq - self.rho_sq;
            if value > st.best {
                st.best = value;
                st.argmax.clear();
            }
            if value == st.best {
                st.argmax.push(st.chosen.clone());
            }
            return;
        }
        if self.cands.len() - pos < remaining {
            return;
        }
        if self.prune && st.best != i64::MIN && self.bound(pos, remaining, st) < st.best {
            return;
        }
        for k in pos..=self.cands.len() - remaining {
            let c = &self.cands[k];
            let pairing = self.pairing(&st.v, k);
            let saved = st.v_sq;
            st.v_sq += 2 * pairing + c.norm;
            st.v += &c.weight;
            st.chosen.push(k);
            self.descend(k + 1, remaining - 1, st);
            st.chosen.pop();
            st.v -= &c.weight;
            st.v_sq = saved;
        }
    }
}
