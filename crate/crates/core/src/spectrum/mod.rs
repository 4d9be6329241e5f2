//! Maximal Casimir eigenvalues `m_i` on `∧^i g` and their eigenspaces `M_i`.
//!
//! Three independent strategies are available:
//!
//! - `BRUTE`: maximize over `i`-element subsets of the weight basis of `g`
//!   ([`mi_bruteforce`]);
//! - `IDEAL`: maximize over `i`-element ad-nilpotent ideals of `b`
//!   ([`mi_via_ideals`]), valid for `1 <= i <= r`;
//! - `CHARACTER`: decompose `∧^i g` into irreducibles and keep the
//!   components with the largest Casimir value ([`mi_via_characters`]).
//!
//! [`spectrum_table`] runs every strategy the budget allows, fills the
//! degrees above `r + l` from `m_i = m_{n-i}`, and fails hard if two
//! strategies disagree.

mod brute;
mod report;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::CharacterCache;
use crate::character::{
    binomial, decompose_character_with, exterior_power_characters, Character, Decomposition,
    DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::ideals::{enumerate_ideals, ideal_weight_sum, BasisLabel, NilIdeal};
use crate::root_system::RootSystem;
use crate::weight::Weight;
use crate::Rational;

pub use brute::{basis_labels, mi_bruteforce, mi_bruteforce_with, BruteForceResult};
pub use report::{verify_theorems, Check, CheckStatus, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Strategy {
    Brute,
    Ideal,
    Character,
    Duality,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Brute => "BRUTE",
            Strategy::Ideal => "IDEAL",
            Strategy::Character => "CHARACTER",
            Strategy::Duality => "DUALITY",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumConfig {
    /// Largest `C(n, i)` for which brute force and characters run.
    pub budget: u64,
}

impl Default for SpectrumConfig {
    fn default() -> Self {
        SpectrumConfig {
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealResult {
    pub m: Rational,
    pub ideals: Vec<NilIdeal>,
}

/// Maximum of `Cas(<a>)` over ideals `a` with `i` members, with all
/// maximizers.
pub fn mi_via_ideals(rs: &RootSystem, i: usize) -> Result<IdealResult> {
    let ideals = enumerate_ideals(rs, Some(i))?;
    let mut best: Option<Rational> = None;
    let mut winners = Vec::new();
    for ideal in ideals {
        let c = rs.casimir_eigenvalue(&ideal_weight_sum(rs, &ideal));
        match best {
            Some(b) if c < b => continue,
            Some(b) if c == b => winners.push(ideal),
            _ => {
                best = Some(c);
                winners = vec![ideal];
            }
        }
    }
    Ok(IdealResult {
        m: best.expect("every size 0..=r has an ideal"),
        ideals: winners,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterResult {
    pub m: Rational,
    /// Components of `∧^i g` with Casimir value `m`.
    pub top: Decomposition,
    /// Every component of `∧^i g`.
    pub full: Decomposition,
}

/// Maximal Casimir value among the irreducible components of `∧^i g`.
pub fn mi_via_characters(
    rs: &RootSystem,
    i: usize,
    budget: u64,
    cache: &CharacterCache,
) -> Result<CharacterResult> {
    let ch = crate::character::exterior_power_character(rs, i, budget)?;
    characters_result(rs, &ch, cache)
}

fn characters_result(
    rs: &RootSystem,
    ch: &Character,
    cache: &CharacterCache,
) -> Result<CharacterResult> {
    let full = decompose_character_with(rs, ch, cache)?;
    let m = full
        .components()
        .keys()
        .map(|w| rs.casimir_eigenvalue(w))
        .max()
        .expect("exterior powers are nonzero");
    let top = full.filtered(|w| rs.casimir_eigenvalue(w) == m);
    Ok(CharacterResult { m, top, full })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumRow {
    pub i: usize,
    pub m: Rational,
    /// Highest weights of `M_i` with multiplicities, sorted.
    pub highest_weights: Vec<(Weight, u64)>,
    pub eigenspace_dim: BigUint,
    pub strategies: BTreeSet<Strategy>,
    /// Maximizing ideals, for `i <= r`.
    pub ideals: Vec<NilIdeal>,
    /// Maximizing label subsets, when brute force ran.
    pub argmax_subsets: Option<Vec<Vec<BasisLabel>>>,
}

impl SpectrumRow {
    pub fn is_multiplicity_free(&self) -> bool {
        self.highest_weights.iter().all(|&(_, m)| m == 1)
    }

    /// `{"i", "m", "components": [{"weight", "mult", "dim"}], "dim", "strategies"}`.
    pub fn to_json(&self, rs: &RootSystem) -> Value {
        let components: Vec<Value> = self
            .highest_weights
            .iter()
            .map(|(w, m)| {
                json!({
                    "weight": w,
                    "mult": m,
                    "dim": big_number(&rs.weyl_dim(w).expect("highest weights are dominant")),
                })
            })
            .collect();
        json!({
            "i": self.i,
            "m": self.m.to_string(),
            "components": components,
            "dim": big_number(&self.eigenspace_dim),
            "strategies": self.strategies,
        })
    }
}

/// A JSON number with all digits of `n`.
pub fn big_number(n: &BigUint) -> Value {
    Value::Number(
        n.to_string()
            .parse()
            .expect("decimal digits form a JSON number"),
    )
}

type Components = BTreeMap<Weight, u64>;

struct Candidate {
    strategy: Strategy,
    m: Rational,
    components: Components,
}

/// `m_i` and `M_i` for `i = 0..=n`, cross-validated.
pub fn spectrum_table(
    rs: &RootSystem,
    config: &SpectrumConfig,
    cache: &CharacterCache,
) -> Result<Vec<SpectrumRow>> {
    let n = rs.dimension();
    let r = rs.num_positive_roots();
    let l = rs.rank();
    let budget = config.budget;
    let in_budget = |i: usize| binomial(n, i) <= budget as u128;

    // Exterior powers up to the largest affordable degree below n/2; the
    // upper half is obtained by duality of characters.
    let char_top = (0..=n / 2).rev().find(|&i| in_budget(i)).unwrap_or(0);
    let exterior = exterior_power_characters(rs, char_top);

    let two_rho = rs.rho().scale(2);
    let mut rows: Vec<SpectrumRow> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut cands: Vec<Candidate> = Vec::new();
        let mut ideals = Vec::new();
        let mut argmax_subsets = None;

        if i <= r {
            let res = mi_via_ideals(rs, i)?;
            cands.push(Candidate {
                strategy: Strategy::Ideal,
                m: res.m,
                components: res
                    .ideals
                    .iter()
                    .map(|a| (ideal_weight_sum(rs, a), 1))
                    .collect(),
            });
            ideals = res.ideals;
        } else if i <= r + l {
            // the full nilradical together with any i - r Cartan vectors
            let full = NilIdeal::full(r);
            cands.push(Candidate {
                strategy: Strategy::Ideal,
                m: rs.casimir_eigenvalue(&ideal_weight_sum(rs, &full)),
                components: [(two_rho.clone(), binomial(l, i - r) as u64)].into(),
            });
        } else {
            let mirror = &rows[n - i];
            cands.push(Candidate {
                strategy: Strategy::Duality,
                m: mirror.m,
                components: mirror.highest_weights.iter().cloned().collect(),
            });
        }

        if in_budget(i) {
            let res = mi_bruteforce(rs, i, budget)?;
            cands.push(Candidate {
                strategy: Strategy::Brute,
                m: res.m,
                components: res.weight_sums(rs).into_iter().collect(),
            });
            argmax_subsets = Some(res.argmax);

            let ch = if i <= char_top {
                exterior[i].clone()
            } else {
                exterior[n - i].dual()
            };
            let res = characters_result(rs, &ch, cache)?;
            cands.push(Candidate {
                strategy: Strategy::Character,
                m: res.m,
                components: res.top.components().clone(),
            });
        }

        let first = &cands[0];
        for other in &cands[1..] {
            if other.m != first.m || other.components != first.components {
                return Err(Error::StrategyDisagreement {
                    cartan: rs.cartan_type().to_string(),
                    degree: i,
                    detail: format!(
                        "{} gives m = {} with {:?}, {} gives m = {} with {:?}",
                        first.strategy,
                        first.m,
                        first.components,
                        other.strategy,
                        other.m,
                        other.components
                    ),
                });
            }
        }

        let highest_weights: Vec<(Weight, u64)> = first
            .components
            .iter()
            .map(|(w, &m)| (w.clone(), m))
            .collect();
        let mut eigenspace_dim = BigUint::default();
        for (w, m) in &highest_weights {
            eigenspace_dim += rs.weyl_dim(w)? * *m;
        }
        rows.push(SpectrumRow {
            i,
            m: first.m,
            highest_weights,
            eigenspace_dim,
            strategies: cands.iter().map(|c| c.strategy).collect(),
            ideals,
            argmax_subsets,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn ideal_strategy_examples() {
        let a2 = rs("A2");
        let one = mi_via_ideals(&a2, 1).unwrap();
        assert_eq!(one.m, q(1, 1));
        assert_eq!(one.ideals, vec![NilIdeal::from_members([2])]);
        let two = mi_via_ideals(&a2, 2).unwrap();
        assert_eq!(two.m, q(2, 1));
        assert_eq!(two.ideals.len(), 2);
        for t in ["A3", "B3", "G2", "F4", "E6"] {
            let rs = rs(t);
            let r = rs.num_positive_roots();
            let top = mi_via_ideals(&rs, r).unwrap();
            assert_eq!(top.m, q(rs.dimension() as i64, 3), "{t}");
            assert_eq!(top.ideals, vec![NilIdeal::full(r)]);
        }
    }

    #[test]
    fn character_strategy_examples() {
        let cache = CharacterCache::in_memory();
        let a1 = rs("A1");
        let res = mi_via_characters(&a1, 1, DEFAULT_BUDGET, &cache).unwrap();
        assert_eq!(res.m, q(1, 1));
        assert_eq!(res.top.components().len(), 1);
        assert_eq!(res.top.multiplicity(&Weight::from([2])), 1);

        let a2 = rs("A2");
        let res = mi_via_characters(&a2, 4, DEFAULT_BUDGET, &cache).unwrap();
        assert_eq!(res.m, q(8, 3));
        assert_eq!(res.top.components().len(), 1);
        assert_eq!(res.top.multiplicity(&Weight::from([2, 2])), 2);

        let res = mi_via_characters(&a2, 2, DEFAULT_BUDGET, &cache).unwrap();
        assert_eq!(res.m, q(2, 1));
        assert_eq!(
            res.top.components().keys().cloned().collect::<Vec<_>>(),
            vec![Weight::from([0, 3]), Weight::from([3, 0])]
        );
        // the adjoint component of ∧^2 sl3 sits below
        assert_eq!(res.full.multiplicity(&Weight::from([1, 1])), 1);
    }

    #[test]
    fn a1_table() {
        let rows = spectrum_table(&rs("A1"), &SpectrumConfig::default(), &CharacterCache::in_memory())
            .unwrap();
        let m: Vec<String> = rows.iter().map(|r| r.m.to_string()).collect();
        assert_eq!(m, ["0", "1", "1", "0"]);
        for row in &rows {
            assert!(row.strategies.contains(&Strategy::Brute));
            assert!(row.strategies.contains(&Strategy::Character));
        }
    }

    #[test]
    fn a2_table() {
        let a2 = rs("A2");
        let rows = spectrum_table(&a2, &SpectrumConfig::default(), &CharacterCache::in_memory())
            .unwrap();
        let m: Vec<String> = rows.iter().map(|r| r.m.to_string()).collect();
        assert_eq!(m, ["0", "1", "2", "8/3", "8/3", "8/3", "2", "1", "0"]);
        let dims: Vec<u64> = rows
            .iter()
            .map(|r| r.eigenspace_dim.to_string().parse().unwrap())
            .collect();
        assert_eq!(dims, [1, 8, 20, 27, 54, 27, 20, 8, 1]);
        assert_eq!(rows[4].highest_weights, vec![(Weight::from([2, 2]), 2)]);
        assert_eq!(
            rows[2].highest_weights,
            vec![(Weight::from([0, 3]), 1), (Weight::from([3, 0]), 1)]
        );
        assert_eq!(
            rows[7].strategies,
            [Strategy::Brute, Strategy::Character, Strategy::Duality].into()
        );
        assert_eq!(
            rows[4].to_json(&a2).to_string(),
            r#"{"i":4,"m":"8/3","components":[{"weight":[2,2],"mult":2,"dim":27}],"dim":54,"strategies":["BRUTE","IDEAL","CHARACTER"]}"#
        );
    }

    #[test]
    fn budget_limits_strategies() {
        let d4 = rs("D4");
        let config = SpectrumConfig { budget: 1000 };
        let rows = spectrum_table(&d4, &config, &CharacterCache::in_memory()).unwrap();
        assert_eq!(rows.len(), 29);
        // C(28, 3) = 3276 > 1000
        assert_eq!(rows[3].strategies, [Strategy::Ideal].into());
        assert!(rows[2].strategies.contains(&Strategy::Brute));
        assert_eq!(rows[20].strategies, [Strategy::Duality].into());
        assert_eq!(rows[12].m, q(28, 3));
        assert_eq!(rows[14].highest_weights, vec![(d4.rho().scale(2), 6)]);
    }

    #[test]
    fn e8_plateau_dimension_is_huge_but_exact() {
        let e8 = rs("E8");
        let row = NilIdeal::full(e8.num_positive_roots());
        let sum = ideal_weight_sum(&e8, &row);
        assert_eq!(e8.casimir_eigenvalue(&sum), q(248, 3));
        assert_eq!(
            big_number(&e8.weyl_dim(&sum).unwrap()).to_string(),
            BigUint::from(3u32).pow(120).to_string()
        );
    }
}
