//! Exact character calculus on the weight lattice.
//!
//! A [`Character`] is a finite map from weights to positive multiplicities.
//! Irreducible characters come from Freudenthal's recursion on the dominant
//! chamber, extended to whole Weyl orbits. The remaining constructions are
//! plain polynomial products in the group ring of the weight lattice.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;

use crate::cache::CharacterCache;
use crate::cartan::CartanType;
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::weight::Weight;

/// Default cap on `C(n, i)` for exterior powers.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    cartan_type: CartanType,
    rank: usize,
    entries: HashMap<Weight, u64>,
}

impl Character {
    pub fn zero(rs: &RootSystem) -> Character {
        Character {
            cartan_type: rs.cartan_type(),
            rank: rs.rank(),
            entries: HashMap::new(),
        }
    }

    /// The character of the trivial module, `e^0`.
    pub fn trivial(rs: &RootSystem) -> Character {
        let mut c = Character::zero(rs);
        c.add(Weight::zero(rs.rank()), 1);
        c
    }

    pub fn from_entries(
        rs: &RootSystem,
        entries: impl IntoIterator<Item = (Weight, u64)>,
    ) -> Result<Character> {
        let mut c = Character::zero(rs);
        for (w, m) in entries {
            rs.check(&w)?;
            c.add(w, m);
        }
        Ok(c)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn add(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.entries.entry(w).or_insert(0) += m;
        }
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    /// Sum of all multiplicities, i.e. the dimension of the module.
    pub fn total_mass(&self) -> u128 {
        self.entries.values().map(|&m| m as u128).sum()
    }

    /// Entries sorted lexicographically by coordinates.
    pub fn sorted_entries(&self) -> Vec<(Weight, u64)> {
        let mut out: Vec<(Weight, u64)> =
            self.entries.iter().map(|(w, &m)| (w.clone(), m)).collect();
        out.sort();
        out
    }

    pub fn scaled(&self, k: u64) -> Character {
        let mut out = self.clone();
        if k == 0 {
            out.entries.clear();
        } else {
            out.entries.values_mut().for_each(|m| *m *= k);
        }
        out
    }

    /// The character with every weight negated (the dual module).
    pub fn dual(&self) -> Character {
        Character {
            cartan_type: self.cartan_type,
            rank: self.rank,
            entries: self.entries.iter().map(|(w, &m)| (-w, m)).collect(),
        }
    }

    pub fn add_character(&mut self, other: &Character) -> Result<()> {
        self.same_ambient(other)?;
        for (w, m) in other.iter() {
            self.add(w.clone(), m);
        }
        Ok(())
    }

    fn same_ambient(&self, other: &Character) -> Result<()> {
        if self.cartan_type != other.cartan_type {
            return Err(Error::AmbientMismatch(
                self.cartan_type.to_string(),
                other.cartan_type.to_string(),
            ));
        }
        Ok(())
    }

    /// Multiplicity is constant along every simple reflection.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        self.entries.iter().all(|(w, &m)| {
            (0..rs.rank()).all(|i| {
                let mut s = w.clone();
                rs.reflect_in_place(i, &mut s);
                self.multiplicity(&s) == m
            })
        })
    }

    /// Dominant weights of the support.
    pub fn dominant_support(&self) -> Vec<Weight> {
        let mut out: Vec<Weight> = self
            .entries
            .keys()
            .filter(|w| w.is_dominant())
            .cloned()
            .collect();
        out.sort();
        out
    }
}

/// Multiplicities of the dominant weights of `V_lambda`, keyed by weight.
///
/// Every weight of `V_lambda` has the multiplicity of its dominant
/// representative, so this table determines the whole character.
pub fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<HashMap<Weight, u64>> {
    rs.check(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }

    // Dominant weights below lambda are reachable from lambda through
    // dominant weights by subtracting one positive root at a time.
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(lambda.clone());
    let mut frontier = vec![lambda.clone()];
    while let Some(w) = frontier.pop() {
        for alpha in rs.positive_roots() {
            let next = &w - alpha;
            if next.is_dominant() && !seen.contains(&next) {
                seen.insert(next.clone());
                frontier.push(next);
            }
        }
    }

    let top = rs.scaled_height(lambda);
    let mut order: Vec<(i64, Weight)> = seen
        .into_iter()
        .map(|w| (top - rs.scaled_height(&w), w))
        .collect();
    order.sort();

    let shifted_top = lambda + rs.rho();
    let top_norm = rs.scaled_inner(&shifted_top, &shifted_top);
    let mut table: HashMap<Weight, u64> = HashMap::with_capacity(order.len());
    table.insert(lambda.clone(), 1);

    for (_, mu) in order.into_iter().skip(1) {
        let shifted = &mu + rs.rho();
        let denom = top_norm - rs.scaled_inner(&shifted, &shifted);
        if denom <= 0 {
            return Err(Error::NonIntegralMultiplicity(mu.to_string()));
        }
        let mut numer: i128 = 0;
        for alpha in rs.positive_roots() {
            let mut nu = &mu + alpha;
            while rs.scaled_height(&nu) <= top {
                let m = table
                    .get(&rs.dominant_representative(&nu))
                    .copied()
                    .unwrap_or(0);
                if m > 0 {
                    numer += rs.scaled_inner(&nu, alpha) as i128 * m as i128;
                }
                nu += alpha;
            }
        }
        numer *= 2;
        let denom = denom as i128;
        if numer % denom != 0 || numer < 0 {
            return Err(Error::NonIntegralMultiplicity(mu.to_string()));
        }
        let m = (numer / denom) as u64;
        if m > 0 {
            table.insert(mu, m);
        }
    }
    Ok(table)
}

/// Multiplicity of `mu` in `V_lambda` via Freudenthal's recursion.
pub fn freudenthal_multiplicity(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<u64> {
    rs.check(mu)?;
    let table = dominant_multiplicities(rs, lambda)?;
    Ok(table
        .get(&rs.dominant_representative(mu))
        .copied()
        .unwrap_or(0))
}

/// Full character of `V_lambda`.
pub fn irreducible_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    let table = dominant_multiplicities(rs, lambda)?;
    let mut out = Character::zero(rs);
    for (mu, m) in table {
        for w in rs.orbit(&mu) {
            out.add(w, m);
        }
    }
    Ok(out)
}

/// Character of `V_{k rho}` as the product over positive roots of
/// `e^{k alpha / 2} + e^{(k/2 - 1) alpha} + ... + e^{-k alpha / 2}`,
/// written as `k rho - sum c_i alpha_i` with `c_i` in `0..=k`.
pub fn krho_box_character(rs: &RootSystem, k: u32) -> Character {
    let mut current: HashMap<Weight, u64> = HashMap::new();
    current.insert(rs.rho().scale(k as i32), 1);
    for alpha in rs.positive_roots() {
        let mut next: HashMap<Weight, u64> = HashMap::with_capacity(current.len() * 2);
        for (w, m) in &current {
            let mut v = w.clone();
            for c in 0..=k {
                if c > 0 {
                    v -= alpha;
                }
                *next.entry(v.clone()).or_insert(0) += m;
            }
        }
        current = next;
    }
    Character {
        cartan_type: rs.cartan_type(),
        rank: rs.rank(),
        entries: current,
    }
}

/// The `n` weights of the adjoint module: positive roots, negative roots,
/// then `l` copies of zero.
pub fn adjoint_weights(rs: &RootSystem) -> Vec<Weight> {
    let mut out: Vec<Weight> = rs.positive_roots().to_vec();
    out.extend(rs.positive_roots().iter().map(|a| -a));
    out.extend(std::iter::repeat_n(Weight::zero(rs.rank()), rs.rank()));
    out
}

/// `C(n, k)` without overflow for the sizes that occur here.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc
}

/// Characters of `∧^0 g, ..., ∧^max_degree g`, by the elementary symmetric
/// expansion of `prod (1 + t e^gamma)` over the adjoint weights.
pub fn exterior_power_characters(rs: &RootSystem, max_degree: usize) -> Vec<Character> {
    let max_degree = max_degree.min(rs.dimension());
    let mut layers: Vec<HashMap<Weight, u64>> = vec![HashMap::new(); max_degree + 1];
    layers[0].insert(Weight::zero(rs.rank()), 1);
    for (count, gamma) in adjoint_weights(rs).iter().enumerate() {
        let top = (count + 1).min(max_degree);
        for d in (1..=top).rev() {
            let (lower, upper) = layers.split_at_mut(d);
            let src = &lower[d - 1];
            let dst = &mut upper[0];
            for (w, &m) in src {
                match dst.entry(w + gamma) {
                    Entry::Occupied(mut e) => *e.get_mut() += m,
                    Entry::Vacant(e) => {
                        e.insert(m);
                    }
                }
            }
        }
    }
    layers
        .into_iter()
        .map(|entries| Character {
            cartan_type: rs.cartan_type(),
            rank: rs.rank(),
            entries,
        })
        .collect()
}

/// Character of `∧^i g`. Refuses when `C(n, i)` exceeds `budget`.
pub fn exterior_power_character(rs: &RootSystem, i: usize, budget: u64) -> Result<Character> {
    let n = rs.dimension();
    if i > n {
        return Err(Error::DegreeOutOfRange { degree: i, max: n });
    }
    let needed = binomial(n, i);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "exterior power character",
            needed,
            budget,
            hint: "; degrees up to r are covered by the ideal strategy",
        });
    }
    // ∧^{n-i} g is the dual of ∧^i g: its weights are the complements'
    // sums, and the adjoint weights sum to zero.
    let low = i.min(n - i);
    let ch = exterior_power_characters(rs, low).pop().expect("nonempty");
    Ok(if low == i { ch } else { ch.dual() })
}

/// Character of the whole exterior algebra, `prod (1 + e^gamma)`.
pub fn exterior_algebra_character(rs: &RootSystem) -> Character {
    let mut current: HashMap<Weight, u64> = HashMap::new();
    current.insert(Weight::zero(rs.rank()), 1);
    for gamma in adjoint_weights(rs) {
        let mut next = current.clone();
        for (w, m) in &current {
            *next.entry(w + &gamma).or_insert(0) += m;
        }
        current = next;
    }
    Character {
        cartan_type: rs.cartan_type(),
        rank: rs.rank(),
        entries: current,
    }
}

/// Tensor product: convolution of weight maps.
pub fn tensor_character(a: &Character, b: &Character) -> Result<Character> {
    a.same_ambient(b)?;
    let mut entries: HashMap<Weight, u64> = HashMap::with_capacity(a.len() * b.len() / 2 + 1);
    for (x, m) in a.iter() {
        for (y, k) in b.iter() {
            *entries.entry(x + y).or_insert(0) += m * k;
        }
    }
    Ok(Character {
        cartan_type: a.cartan_type,
        rank: a.rank,
        entries,
    })
}

/// Irreducible components with multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    components: BTreeMap<Weight, u64>,
}

impl Decomposition {
    pub fn components(&self) -> &BTreeMap<Weight, u64> {
        &self.components
    }

    pub fn multiplicity(&self, lambda: &Weight) -> u64 {
        self.components.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.components.values().all(|&m| m == 1)
    }

    /// `sum mult * dim V_lambda`.
    pub fn total_dim(&self, rs: &RootSystem) -> Result<BigUint> {
        let mut acc = BigUint::default();
        for (lambda, &m) in &self.components {
            acc += rs.weyl_dim(lambda)? * m;
        }
        Ok(acc)
    }

    /// `sum mult * char V_lambda`.
    pub fn reconstruct(&self, rs: &RootSystem, cache: &CharacterCache) -> Result<Character> {
        let mut out = Character::zero(rs);
        for (lambda, &m) in &self.components {
            let irr = cache.irreducible(rs, lambda)?;
            for (w, c) in irr.iter() {
                out.add(w.clone(), c * m);
            }
        }
        Ok(out)
    }

    /// Keep only components matching `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(&Weight) -> bool) -> Decomposition {
        Decomposition {
            components: self
                .components
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, &m)| (w.clone(), m))
                .collect(),
        }
    }
}

impl FromIterator<(Weight, u64)> for Decomposition {
    fn from_iter<T: IntoIterator<Item = (Weight, u64)>>(iter: T) -> Self {
        let mut components = BTreeMap::new();
        for (w, m) in iter {
            if m > 0 {
                *components.entry(w).or_insert(0) += m;
            }
        }
        Decomposition { components }
    }
}

/// Decompose a module character by repeatedly peeling off the irreducible
/// whose highest weight is a dominant weight of maximal height.
pub fn decompose_character(rs: &RootSystem, ch: &Character) -> Result<Decomposition> {
    decompose_character_with(rs, ch, &CharacterCache::in_memory())
}

pub fn decompose_character_with(
    rs: &RootSystem,
    ch: &Character,
    cache: &CharacterCache,
) -> Result<Decomposition> {
    if ch.cartan_type != rs.cartan_type() {
        return Err(Error::AmbientMismatch(
            ch.cartan_type.to_string(),
            rs.cartan_type().to_string(),
        ));
    }
    let mut residual: HashMap<Weight, u64> = ch.entries.clone();
    let mut components = BTreeMap::new();
    loop {
        let top = residual
            .keys()
            .filter(|w| w.is_dominant())
            .max_by(|a, b| {
                rs.scaled_height(a)
                    .cmp(&rs.scaled_height(b))
                    .then_with(|| a.cmp(b))
            })
            .cloned();
        let Some(lambda) = top else {
            if let Some(w) = residual.keys().min() {
                // weights remain but none is dominant
                return Err(Error::NotModuleCharacter(w.to_string()));
            }
            break;
        };
        let m = residual[&lambda];
        let irr = cache.irreducible(rs, &lambda)?;
        for (w, c) in irr.iter() {
            let need = c * m;
            match residual.get_mut(w) {
                Some(have) if *have > need => *have -= need,
                Some(have) if *have == need => {
                    residual.remove(w);
                }
                _ => return Err(Error::NotModuleCharacter(w.to_string())),
            }
        }
        components.insert(lambda, m);
    }
    Ok(Decomposition { components })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn ch(rs: &RootSystem, entries: &[(&[i32], u64)]) -> Character {
        Character::from_entries(
            rs,
            entries
                .iter()
                .map(|(w, m)| (Weight::new(w.iter().copied()), *m)),
        )
        .unwrap()
    }

    #[test]
    fn freudenthal_small_cases() {
        let a1 = rs("A1");
        let alpha = Weight::from([2]);
        assert_eq!(freudenthal_multiplicity(&a1, &alpha, &alpha).unwrap(), 1);
        assert_eq!(freudenthal_multiplicity(&a1, &alpha, &Weight::from([0])).unwrap(), 1);
        assert_eq!(freudenthal_multiplicity(&a1, &alpha, &Weight::from([4])).unwrap(), 0);

        let a2 = rs("A2");
        let rho = a2.rho().clone();
        assert_eq!(freudenthal_multiplicity(&a2, &rho, &rho).unwrap(), 1);
        assert_eq!(freudenthal_multiplicity(&a2, &rho, &Weight::zero(2)).unwrap(), 2);
        assert!(matches!(
            freudenthal_multiplicity(&a2, &Weight::from([-1, 0]), &rho),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn freudenthal_known_multiplicities() {
        // zero weight of the adjoint module has multiplicity l
        for t in ["B3", "C3", "D4", "G2", "F4"] {
            let rs = rs(t);
            let zero = Weight::zero(rs.rank());
            assert_eq!(
                freudenthal_multiplicity(&rs, rs.highest_root(), &zero).unwrap(),
                rs.rank() as u64,
                "{t}"
            );
        }
        // V(2,2) of sl3: zero weight has multiplicity 3
        let a2 = rs("A2");
        assert_eq!(
            freudenthal_multiplicity(&a2, &Weight::from([2, 2]), &Weight::zero(2)).unwrap(),
            3
        );
        // 7-dimensional module of G2: short-root orbit plus a zero weight
        let g2 = rs("G2");
        let v7 = irreducible_character(&g2, &Weight::from([1, 0])).unwrap();
        assert_eq!(v7.total_mass(), 7);
        assert_eq!(v7.multiplicity(&Weight::zero(2)), 1);
    }

    #[test]
    fn irreducible_examples() {
        let a1 = rs("A1");
        assert_eq!(
            irreducible_character(&a1, &Weight::zero(1)).unwrap(),
            Character::trivial(&a1)
        );
        assert_eq!(
            irreducible_character(&a1, &Weight::from([1])).unwrap(),
            ch(&a1, &[(&[1], 1), (&[-1], 1)])
        );

        let a2 = rs("A2");
        let adj = irreducible_character(&a2, a2.rho()).unwrap();
        let mut expected = ch(&a2, &[(&[0, 0], 2)]);
        for a in a2.positive_roots() {
            expected.add(a.clone(), 1);
            expected.add(-a, 1);
        }
        assert_eq!(adj, expected);
    }

    #[test]
    fn irreducible_mass_matches_weyl_dimension() {
        for t in ["A3", "B2", "B3", "C3", "G2"] {
            let rs = rs(t);
            for lambda in [
                Weight::from(vec![1; rs.rank()]),
                {
                    let mut v = vec![0; rs.rank()];
                    v[0] = 3;
                    Weight::from(v)
                },
                {
                    let mut v = vec![0; rs.rank()];
                    v[rs.rank() - 1] = 2;
                    v[0] = 1;
                    Weight::from(v)
                },
            ] {
                let c = irreducible_character(&rs, &lambda).unwrap();
                assert_eq!(
                    BigUint::from(c.total_mass()),
                    rs.weyl_dim(&lambda).unwrap(),
                    "{t} {lambda}"
                );
                assert!(c.is_weyl_invariant(&rs));
            }
        }
    }

    #[test]
    fn box_character_examples() {
        let a2 = rs("A2");
        assert_eq!(krho_box_character(&a2, 0), Character::trivial(&a2));
        let a1 = rs("A1");
        assert_eq!(
            krho_box_character(&a1, 2),
            ch(&a1, &[(&[2], 1), (&[0], 1), (&[-2], 1)])
        );
        let b2 = rs("B2");
        assert_eq!(krho_box_character(&b2, 3).total_mass(), 4u128.pow(4));
    }

    #[test]
    fn exterior_power_examples() {
        let a1 = rs("A1");
        assert_eq!(
            exterior_power_character(&a1, 0, DEFAULT_BUDGET).unwrap(),
            Character::trivial(&a1)
        );
        assert_eq!(
            exterior_power_character(&a1, 2, DEFAULT_BUDGET).unwrap(),
            ch(&a1, &[(&[2], 1), (&[0], 1), (&[-2], 1)])
        );
        for t in ["A2", "B2", "G2", "A3"] {
            let rs = rs(t);
            let n = rs.dimension();
            assert_eq!(
                exterior_power_character(&rs, n, DEFAULT_BUDGET).unwrap(),
                Character::trivial(&rs)
            );
            let all = exterior_power_characters(&rs, n);
            for (i, c) in all.iter().enumerate() {
                assert_eq!(c.total_mass(), binomial(n, i));
                assert_eq!(&all[n - i], &c.dual(), "{t} {i}");
                assert_eq!(&exterior_power_character(&rs, i, DEFAULT_BUDGET).unwrap(), c);
            }
        }
        assert!(matches!(
            exterior_power_character(&a1, 4, DEFAULT_BUDGET),
            Err(Error::DegreeOutOfRange { .. })
        ));
        let f4 = rs("F4");
        assert!(matches!(
            exterior_power_character(&f4, 20, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn tensor_examples() {
        let a1 = rs("A1");
        let v = irreducible_character(&a1, &Weight::from([1])).unwrap();
        assert_eq!(tensor_character(&v, &Character::trivial(&a1)).unwrap(), v);
        assert_eq!(
            tensor_character(&v, &v).unwrap(),
            ch(&a1, &[(&[2], 1), (&[0], 2), (&[-2], 1)])
        );
        let a2 = rs("A2");
        assert!(matches!(
            tensor_character(&v, &Character::trivial(&a2)),
            Err(Error::AmbientMismatch(..))
        ));
    }

    #[test]
    fn decomposition_examples() {
        let a2 = rs("A2");
        let irr = irreducible_character(&a2, &Weight::from([2, 1])).unwrap();
        let d = decompose_character(&a2, &irr).unwrap();
        assert_eq!(d.components().len(), 1);
        assert_eq!(d.multiplicity(&Weight::from([2, 1])), 1);

        let wedge2 = exterior_power_character(&a2, 2, DEFAULT_BUDGET).unwrap();
        let d = decompose_character(&a2, &wedge2).unwrap();
        let expected: Decomposition = [
            (Weight::from([3, 0]), 1),
            (Weight::from([0, 3]), 1),
            (Weight::from([1, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expected);
        assert_eq!(d.total_dim(&a2).unwrap(), BigUint::from(28u32));

        let a1 = rs("A1");
        let d = decompose_character(&a1, &exterior_power_character(&a1, 1, DEFAULT_BUDGET).unwrap())
            .unwrap();
        assert_eq!(d.components().iter().collect::<Vec<_>>(), vec![(&Weight::from([2]), &1)]);
    }

    #[test]
    fn decomposition_rejects_non_module_characters() {
        let a1 = rs("A1");
        // e^{2} alone is not Weyl-invariant
        let bogus = ch(&a1, &[(&[2], 1)]);
        assert!(matches!(
            decompose_character(&a1, &bogus),
            Err(Error::NotModuleCharacter(_))
        ));
        let bogus = ch(&a1, &[(&[-2], 1)]);
        assert!(matches!(
            decompose_character(&a1, &bogus),
            Err(Error::NotModuleCharacter(_))
        ));
    }

    #[test]
    fn decomposition_round_trip() {
        let b2 = rs("B2");
        let cache = CharacterCache::in_memory();
        for i in 0..=b2.dimension() {
            let c = exterior_power_character(&b2, i, DEFAULT_BUDGET).unwrap();
            let d = decompose_character_with(&b2, &c, &cache).unwrap();
            assert_eq!(d.reconstruct(&b2, &cache).unwrap(), c);
            assert_eq!(d.total_dim(&b2).unwrap(), BigUint::from(c.total_mass()));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(52, 26), 495_918_532_948_104);
        assert_eq!(binomial(3, 4), 0);
    }
}
