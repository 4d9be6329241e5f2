//! Machine check of every claim about `m_i` and `M_i` for one root system.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use super::{spectrum_table, SpectrumConfig, SpectrumRow, Strategy};
use crate::cache::CharacterCache;
use crate::character::{binomial, exterior_algebra_character, tensor_character};
use crate::cartan::CartanType;
use crate::error::{Error, Result};
use crate::ideals::{is_b_normal, root_poset, verify_weight_sum_injectivity, BasisLabel, NilIdeal};
use crate::root_system::RootSystem;
use crate::weight::Weight;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not run because it exceeds the budget.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub claim: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(id: &'static str, claim: &'static str, ok: bool, detail: impl Into<String>) -> Check {
        Check {
            id,
            claim,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: detail.into(),
        }
    }

    fn skipped(id: &'static str, claim: &'static str, detail: impl Into<String>) -> Check {
        Check {
            id,
            claim,
            status: CheckStatus::Skipped,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub cartan_type: CartanType,
    pub n: usize,
    pub r: usize,
    pub l: usize,
    /// Largest `i` with `m_i = i`.
    pub observed_p: Option<usize>,
    pub rows: Vec<SpectrumRow>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// No check failed (skipped checks do not count against).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> Value {
        let m: Vec<String> = self.rows.iter().map(|r| r.m.to_string()).collect();
        let strategies: Vec<&BTreeSet<Strategy>> = self.rows.iter().map(|r| &r.strategies).collect();
        json!({
            "type": self.cartan_type,
            "n": self.n,
            "r": self.r,
            "l": self.l,
            "n_over_3": Rational::new(self.n as i64, 3).to_string(),
            "observed_p": self.observed_p,
            "m": m,
            "strategies": strategies,
            "passed": self.passed(),
            "checks": self.checks,
        })
    }
}

const BOUND: &str = "m_i <= n/3 for every degree i";
const WINDOW: &str = "m_i = n/3 exactly for i = r, ..., r + l";
const MONOTONE: &str = "m_i < m_{i+1} for 0 <= i < r";
const DUALITY: &str = "m_i = m_{n-i} and M_i has the highest weights of M_{n-i}";
const PLATEAU: &str = "M_{r+s} is C(l, s) copies of V_{2 rho} for s = 0..l";
const MULT_FREE: &str = "M_i is multiplicity-free for 1 <= i <= r";
const GLOBAL_MULT_FREE: &str = "the sum of M_0, ..., M_r is multiplicity-free";
const IDEAL_SHAPE: &str =
    "for 1 <= i <= r every maximizing basis subset is an ad-nilpotent ideal of b";
const INJECTIVE: &str = "distinct ad-nilpotent ideals have distinct weight sums";
const OBSERVED_P: &str = "m_i <= i for all i, and m_i = i for all i up to the observed p";
const SUBSET_BOUND: &str =
    "every sum of distinct adjoint weights has Casimir value <= n/3, with equality only at 2 rho";
const EXTERIOR: &str = "char ∧g = 2^l char(V_rho ⊗ V_rho)";
const COPIES: &str = "∧g contains exactly 2^l copies of V_{2 rho}, all in the plateau";
const AGREEMENT: &str = "all strategies that ran agree on m_i and M_i";

/// Runs the spectrum table and every check. Mathematical failures are
/// reported as failed checks, never as errors.
pub fn verify_theorems(
    rs: &RootSystem,
    config: &SpectrumConfig,
    cache: &CharacterCache,
) -> Result<VerificationReport> {
    let n = rs.dimension();
    let r = rs.num_positive_roots();
    let l = rs.rank();
    let mut report = VerificationReport {
        cartan_type: rs.cartan_type(),
        n,
        r,
        l,
        observed_p: None,
        rows: Vec::new(),
        checks: Vec::new(),
    };

    let rows = match spectrum_table(rs, config, cache) {
        Ok(rows) => rows,
        Err(e @ Error::StrategyDisagreement { .. }) => {
            report
                .checks
                .push(Check::new("strategy_agreement", AGREEMENT, false, e.to_string()));
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let confirmed = rows.iter().filter(|r| r.strategies.len() >= 2).count();
    report.checks.push(Check::new(
        "strategy_agreement",
        AGREEMENT,
        true,
        format!("{confirmed} of {} degrees confirmed by at least two strategies", n + 1),
    ));

    let cap = Rational::new(n as i64, 3);
    let two_rho = rs.rho().scale(2);
    let m: Vec<Rational> = rows.iter().map(|r| r.m).collect();

    // upper bound
    let over: Vec<usize> = (0..=n).filter(|&i| m[i] > cap).collect();
    report.checks.push(Check::new(
        "upper_bound",
        BOUND,
        over.is_empty(),
        if over.is_empty() {
            format!("max m_i = {}", m.iter().max().expect("nonempty"))
        } else {
            format!("exceeded at degrees {over:?}")
        },
    ));

    // plateau window
    let at_cap: Vec<usize> = (0..=n).filter(|&i| m[i] == cap).collect();
    let window: Vec<usize> = (r..=r + l).collect();
    report.checks.push(Check::new(
        "plateau_window",
        WINDOW,
        at_cap == window,
        format!("m_i = {cap} at degrees {at_cap:?}"),
    ));

    // strict monotonicity
    let flat: Vec<usize> = (0..r).filter(|&i| m[i] >= m[i + 1]).collect();
    report.checks.push(Check::new(
        "strict_monotonicity",
        MONOTONE,
        flat.is_empty(),
        if flat.is_empty() {
            format!("m_0 < ... < m_{r}")
        } else {
            format!("not increasing at {flat:?}")
        },
    ));

    // duality
    let asym: Vec<usize> = (0..=n)
        .filter(|&i| m[i] != m[n - i] || rows[i].highest_weights != rows[n - i].highest_weights)
        .collect();
    let independent = (r + l + 1..=n)
        .filter(|&i| rows[i].strategies.len() >= 2)
        .count();
    report.checks.push(Check::new(
        "duality",
        DUALITY,
        asym.is_empty(),
        if asym.is_empty() {
            format!(
                "{independent} of {} upper degrees confirmed independently of duality",
                n - r - l
            )
        } else {
            format!("asymmetric at {asym:?}")
        },
    ));

    // plateau multiplicities
    let mut plateau_ok = true;
    let mut notes = Vec::new();
    for s in 0..=l {
        let row = &rows[r + s];
        let expected = binomial(l, s) as u64;
        if row.highest_weights != vec![(two_rho.clone(), expected)] {
            plateau_ok = false;
            notes.push(format!("degree {}: {:?}", r + s, row.highest_weights));
        }
        if let Some(subsets) = &row.argmax_subsets {
            if subsets.len() as u64 != expected {
                plateau_ok = false;
                notes.push(format!(
                    "degree {}: {} maximizing subsets, expected {expected}",
                    r + s,
                    subsets.len()
                ));
            }
        }
    }
    report.checks.push(Check::new(
        "plateau_multiplicities",
        PLATEAU,
        plateau_ok,
        if plateau_ok {
            let counts: Vec<String> = (0..=l).map(|s| binomial(l, s).to_string()).collect();
            format!("copies of V_2rho: {}", counts.join(", "))
        } else {
            notes.join("; ")
        },
    ));

    // multiplicity-freeness per degree
    let with_mult: Vec<usize> = (1..=r)
        .filter(|&i| !rows[i].is_multiplicity_free())
        .collect();
    report.checks.push(Check::new(
        "multiplicity_free",
        MULT_FREE,
        with_mult.is_empty(),
        if with_mult.is_empty() {
            let total: usize = (1..=r).map(|i| rows[i].highest_weights.len()).sum();
            format!("{total} components over degrees 1..={r}")
        } else {
            format!("repeated components at degrees {with_mult:?}")
        },
    ));

    // global multiplicity-freeness
    let all: Vec<&Weight> = (0..=r)
        .flat_map(|i| rows[i].highest_weights.iter().map(|(w, _)| w))
        .collect();
    let distinct: BTreeSet<&Weight> = all.iter().copied().collect();
    let globally_free = distinct.len() == all.len() && (0..=r).all(|i| rows[i].is_multiplicity_free());
    report.checks.push(Check::new(
        "global_multiplicity_free",
        GLOBAL_MULT_FREE,
        globally_free,
        format!("{} highest weights, {} distinct", all.len(), distinct.len()),
    ));

    // maximizers are ideals (brute force only)
    let poset = root_poset(rs);
    let mut shape_ok = true;
    let mut shape_checked = 0usize;
    for row in rows.iter().take(r + 1).skip(1) {
        let Some(subsets) = &row.argmax_subsets else {
            continue;
        };
        for subset in subsets {
            shape_checked += 1;
            let positive: Option<Vec<usize>> = subset
                .iter()
                .map(|label| match label {
                    BasisLabel::X(k) => Some(*k),
                    _ => None,
                })
                .collect();
            let ok = match positive {
                Some(members) => {
                    let ideal = NilIdeal::from_members(members);
                    ideal.is_upper_set(&poset)
                        && is_b_normal(rs, subset)?
                        && row.ideals.contains(&ideal)
                }
                None => false,
            };
            shape_ok &= ok;
        }
    }
    report.checks.push(if shape_checked == 0 {
        Check::skipped("argmax_are_ideals", IDEAL_SHAPE, "brute force not run below r")
    } else {
        Check::new(
            "argmax_are_ideals",
            IDEAL_SHAPE,
            shape_ok,
            format!("{shape_checked} maximizing subsets checked"),
        )
    });

    // weight-sum injectivity
    report.checks.push(Check::new(
        "weight_sum_injectivity",
        INJECTIVE,
        verify_weight_sum_injectivity(rs),
        format!(
            "{} ideals",
            crate::ideals::enumerate_ideals(rs, None)?.len()
        ),
    ));

    // observed p
    let observed_p = (0..=n)
        .filter(|&i| m[i] == Rational::from_integer(i as i64))
        .max();
    report.observed_p = observed_p;
    let p = observed_p.unwrap_or(0);
    let below: bool = (0..=p).all(|i| m[i] == Rational::from_integer(i as i64));
    let le_i: bool = (0..=n).all(|i| m[i] <= Rational::from_integer(i as i64));
    report.checks.push(Check::new(
        "observed_p_consistency",
        OBSERVED_P,
        below && le_i,
        format!("observed p = {p}"),
    ));

    // whole-exterior-algebra identities, gated by the size of
    // V_{2 rho}, which bounds the number of distinct weights involved.
    let support_bound = 3u128.checked_pow(r as u32).unwrap_or(u128::MAX);
    if support_bound <= config.budget as u128 {
        let wedge = exterior_algebra_character(rs);
        let mut bad = Vec::new();
        let mut hits_cap = 0;
        for (w, _) in wedge.iter() {
            let c = rs.casimir_eigenvalue(w);
            if c > cap || (c == cap && w != &two_rho) {
                bad.push(w.clone());
            }
            if c == cap {
                hits_cap += 1;
            }
        }
        bad.sort();
        report.checks.push(Check::new(
            "subset_sum_bound",
            SUBSET_BOUND,
            bad.is_empty() && hits_cap == 1,
            if bad.is_empty() {
                format!("{} distinct subset sums", wedge.len())
            } else {
                format!("violations at {bad:?}")
            },
        ));

        let v_rho = cache.irreducible(rs, rs.rho())?;
        let square = tensor_character(&v_rho, &v_rho)?.scaled(1u64 << l);
        report.checks.push(Check::new(
            "exterior_algebra_identity",
            EXTERIOR,
            square == wedge,
            format!("total mass {} = 2^{n}", wedge.total_mass()),
        ));
    } else {
        let why = format!("3^{r} distinct weights exceed the budget {}", config.budget);
        report
            .checks
            .push(Check::skipped("subset_sum_bound", SUBSET_BOUND, why.clone()));
        report
            .checks
            .push(Check::skipped("exterior_algebra_identity", EXTERIOR, why));
    }

    // copies of V_{2 rho}
    let copies: u64 = rows
        .iter()
        .flat_map(|row| row.highest_weights.iter())
        .filter(|(w, _)| w == &two_rho)
        .map(|&(_, m)| m)
        .sum();
    let plateau_copies: u64 = (r..=r + l)
        .map(|i| {
            rows[i]
                .highest_weights
                .iter()
                .filter(|(w, _)| w == &two_rho)
                .map(|&(_, m)| m)
                .sum::<u64>()
        })
        .sum();
    report.checks.push(Check::new(
        "two_rho_copies",
        COPIES,
        copies == 1u64 << l && plateau_copies == copies,
        format!("{copies} copies among the maximal eigenspaces"),
    ));

    report.rows = rows;
    Ok(report)
}
