//! Exact root systems and the Killing-induced form on the weight lattice.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cartan::CartanType;
use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::Rational;

/// A finite crystallographic root system with its Killing-normalized form.
///
/// Immutable after construction. Weights are stored in fundamental
/// coordinates; simple-root coordinates are derived through the inverse
/// Cartan matrix.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    /// `inverse_denom * A^{-1}`, integral.
    scaled_inverse: Vec<Vec<i64>>,
    inverse_denom: i64,
    det: i64,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<Vec<i32>>,
    root_index: HashMap<Weight, usize>,
    killing_gram: Vec<Vec<Rational>>,
    // (lambda, mu) = lambda^T form_numer mu / form_denom
    form_numer: Vec<Vec<i64>>,
    form_denom: i64,
    rho: Weight,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> RootSystem {
        let cartan = cartan_type.cartan_matrix();
        let l = cartan.len();

        let positive_root_coords = generate_positive_roots(&cartan);
        let to_fundamental = |coords: &[i32]| {
            Weight::new((0..l).map(|i| {
                (0..l)
                    .map(|j| cartan[i][j] as i32 * coords[j])
                    .sum::<i32>()
            }))
        };
        let positive_roots: Vec<Weight> = positive_root_coords
            .iter()
            .map(|c| to_fundamental(c))
            .collect();
        let simple_roots: Vec<Weight> = (0..l)
            .map(|j| Weight::new((0..l).map(|i| cartan[i][j] as i32)))
            .collect();
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();

        // Any invariant form, then rescale so that the form reproduces itself
        // over the roots: (x, y) = sum_{beta in Delta} (x, beta)(y, beta).
        let base = invariant_gram(&cartan);
        let base_inner = |x: &[i32], y: &[i32]| -> Rational {
            let mut acc = Rational::zero();
            for i in 0..l {
                for j in 0..l {
                    acc += base[i][j] * Rational::from_integer((x[i] * y[j]) as i64);
                }
            }
            acc
        };
        let theta = positive_root_coords.last().expect("nonempty root system");
        let norm_sq = base_inner(theta, theta);
        let sum_sq: Rational = positive_root_coords
            .iter()
            .map(|b| {
                let v = base_inner(theta, b);
                v * v * Rational::from_integer(2)
            })
            .sum();
        let scale = norm_sq / sum_sq;
        let killing_gram: Vec<Vec<Rational>> = base
            .iter()
            .map(|row| row.iter().map(|&v| v * scale).collect())
            .collect();

        let (inverse, det) = invert(&cartan);
        let inverse_denom = inverse
            .iter()
            .flatten()
            .fold(1i64, |acc, q| acc.lcm(q.denom()));
        let scaled_inverse = inverse
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| (q * Rational::from_integer(inverse_denom)).to_integer())
                    .collect()
            })
            .collect();

        // Form on fundamental coordinates: A^{-T} K A^{-1}.
        let mut form = vec![vec![Rational::zero(); l]; l];
        for (a, row) in form.iter_mut().enumerate() {
            for (b, entry) in row.iter_mut().enumerate() {
                let mut acc = Rational::zero();
                for i in 0..l {
                    for j in 0..l {
                        acc += inverse[i][a] * killing_gram[i][j] * inverse[j][b];
                    }
                }
                *entry = acc;
            }
        }
        let form_denom = form.iter().flatten().fold(1i64, |acc, q| acc.lcm(q.denom()));
        let form_numer = form
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| (q * Rational::from_integer(form_denom)).to_integer())
                    .collect()
            })
            .collect();

        RootSystem {
            cartan_type,
            cartan,
            scaled_inverse,
            inverse_denom,
            det,
            simple_roots,
            positive_roots,
            positive_root_coords,
            root_index,
            killing_gram,
            form_numer,
            form_denom,
            rho: Weight::new(std::iter::repeat_n(1, l)),
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Rank `l`.
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Number of positive roots `r`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// `dim g = l + 2r`.
    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.num_positive_roots()
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// Positive roots sorted by height, then by simple-root coordinates in
    /// decreasing lexicographic order (so `alpha_1, ..., alpha_l` come first).
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Simple-root coordinates of the positive roots, same order.
    pub fn positive_root_coords(&self) -> &[Vec<i32>] {
        &self.positive_root_coords
    }

    pub fn positive_root_index(&self, root: &Weight) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn highest_root(&self) -> &Weight {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn killing_gram(&self) -> &[Vec<Rational>] {
        &self.killing_gram
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Index of the root lattice in the weight lattice, `det A`.
    pub fn lattice_index(&self) -> i64 {
        self.det
    }

    pub(crate) fn check(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// `(lambda, mu) * form_denom`, exact integer.
    #[inline]
    pub(crate) fn scaled_inner(&self, x: &Weight, y: &Weight) -> i64 {
        let (x, y) = (x.coords(), y.coords());
        let mut acc = 0i64;
        for (i, row) in self.form_numer.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            let mut s = 0i64;
            for (j, &f) in row.iter().enumerate() {
                s += f * y[j] as i64;
            }
            acc += x[i] as i64 * s;
        }
        acc
    }

    /// The vector `v` with `(lambda, mu) * form_denom = lambda . v` for all lambda.
    pub(crate) fn scaled_dual(&self, mu: &Weight) -> Vec<i64> {
        self.form_numer
            .iter()
            .map(|row| {
                row.iter()
                    .zip(mu.coords())
                    .map(|(&f, &c)| f * c as i64)
                    .sum()
            })
            .collect()
    }

    pub(crate) fn scaled_to_rational(&self, v: i64) -> Rational {
        Rational::new(v, self.form_denom)
    }

    pub(crate) fn inner_unchecked(&self, x: &Weight, y: &Weight) -> Rational {
        self.scaled_to_rational(self.scaled_inner(x, y))
    }

    /// The Killing-induced form `(lambda, mu)`.
    pub fn killing_inner(&self, x: &Weight, y: &Weight) -> Result<Rational> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.inner_unchecked(x, y))
    }

    pub fn norm_sq(&self, x: &Weight) -> Rational {
        self.inner_unchecked(x, x)
    }

    /// Scalar by which the Casimir element acts on `V_lambda`:
    /// `(lambda + rho, lambda + rho) - (rho, rho)`.
    pub fn casimir_eigenvalue(&self, lambda: &Weight) -> Rational {
        self.scaled_to_rational(self.scaled_casimir(lambda))
    }

    pub(crate) fn scaled_casimir(&self, lambda: &Weight) -> i64 {
        let shifted = lambda + &self.rho;
        self.scaled_inner(&shifted, &shifted) - self.scaled_inner(&self.rho, &self.rho)
    }

    /// Weyl's dimension formula. Returns an arbitrary-size integer because
    /// dimensions such as `3^120` occur for `E8`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigUint> {
        self.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let shifted = lambda + &self.rho;
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for alpha in &self.positive_roots {
            let a = self.scaled_inner(&shifted, alpha);
            let b = self.scaled_inner(&self.rho, alpha);
            debug_assert!(a > 0 && b > 0);
            num *= a as u64;
            den *= b as u64;
        }
        let (q, rem) = num.div_rem(&den);
        debug_assert!(rem.is_zero(), "Weyl dimension must be integral");
        Ok(q)
    }

    /// `s_i(lambda)` for `1 <= i <= l`.
    pub fn simple_reflection(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        self.check(lambda)?;
        if i == 0 || i > self.rank() {
            return Err(Error::ReflectionIndex {
                index: i,
                rank: self.rank(),
            });
        }
        let mut out = lambda.clone();
        self.reflect_in_place(i - 1, &mut out);
        Ok(out)
    }

    #[inline]
    pub(crate) fn reflect_in_place(&self, i: usize, w: &mut Weight) {
        let c = w.coords()[i];
        if c == 0 {
            return;
        }
        for (k, x) in w.coords_mut().iter_mut().enumerate() {
            *x -= c * self.cartan[k][i] as i32;
        }
    }

    /// The unique dominant weight in the Weyl orbit of `lambda`.
    pub fn dominant_representative(&self, lambda: &Weight) -> Weight {
        let mut w = lambda.clone();
        while let Some(i) = w.coords().iter().position(|&c| c < 0) {
            self.reflect_in_place(i, &mut w);
        }
        w
    }

    /// Weyl orbit of a dominant weight, sorted.
    pub fn orbit(&self, dominant: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        seen.insert(dominant.clone());
        let mut frontier = vec![dominant.clone()];
        // Walking down from the dominant element: reflect only at positive
        // coordinates, which reaches the whole orbit.
        while let Some(w) = frontier.pop() {
            for i in 0..self.rank() {
                if w.coords()[i] > 0 {
                    let mut next = w.clone();
                    self.reflect_in_place(i, &mut next);
                    if seen.insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Simple-root coordinates of `lambda`, exact.
    pub fn simple_coords(&self, lambda: &Weight) -> Vec<Rational> {
        self.scaled_simple_coords(lambda)
            .into_iter()
            .map(|v| Rational::new(v, self.inverse_denom))
            .collect()
    }

    /// Simple-root coordinates scaled by the common denominator of `A^{-1}`.
    pub(crate) fn scaled_simple_coords(&self, lambda: &Weight) -> Vec<i64> {
        self.scaled_inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(lambda.coords())
                    .map(|(&a, &c)| a * c as i64)
                    .sum()
            })
            .collect()
    }

    /// Integer simple-root coordinates, if `lambda` lies in the root lattice.
    pub fn root_lattice_coords(&self, lambda: &Weight) -> Option<Vec<i64>> {
        self.scaled_simple_coords(lambda)
            .into_iter()
            .map(|v| (v % self.inverse_denom == 0).then_some(v / self.inverse_denom))
            .collect()
    }

    /// Height (sum of simple-root coordinates) scaled by the common
    /// denominator of `A^{-1}`.
    pub(crate) fn scaled_height(&self, lambda: &Weight) -> i64 {
        self.scaled_simple_coords(lambda).into_iter().sum()
    }

    pub fn height(&self, lambda: &Weight) -> Rational {
        Rational::new(self.scaled_height(lambda), self.inverse_denom)
    }

    /// Whether `hi - lo` is a nonnegative integer combination of simple roots.
    pub fn dominates(&self, hi: &Weight, lo: &Weight) -> bool {
        match self.root_lattice_coords(&(hi - lo)) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    /// Fundamental coordinates of the weight with the given simple-root
    /// coordinates.
    pub fn from_simple_coords(&self, coords: &[i32]) -> Result<Weight> {
        let l = self.rank();
        if coords.len() != l {
            return Err(Error::DimensionMismatch {
                expected: l,
                got: coords.len(),
            });
        }
        Ok(Weight::new((0..l).map(|i| {
            (0..l)
                .map(|j| self.cartan[i][j] as i32 * coords[j])
                .sum::<i32>()
        })))
    }
}

/// Positive roots in simple-root coordinates by the root-string algorithm.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i32>> {
    let l = cartan.len();
    let mut all: HashSet<Vec<i32>> = HashSet::new();
    let mut level: Vec<Vec<i32>> = (0..l)
        .map(|i| {
            let mut e = vec![0; l];
            e[i] = 1;
            e
        })
        .collect();
    all.extend(level.iter().cloned());
    while !level.is_empty() {
        let mut next: Vec<Vec<i32>> = Vec::new();
        for beta in &level {
            for i in 0..l {
                // p: how far beta - k alpha_i stays a root
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if all.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..l).map(|j| cartan[i][j] * beta[j] as i64).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    let mut roots: Vec<Vec<i32>> = all.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}

/// Gram matrix of some Weyl-invariant form on the simple roots, obtained by
/// symmetrizing the Cartan matrix: `(alpha_i, alpha_j) = a_ij (alpha_i, alpha_i) / 2`.
fn invariant_gram(cartan: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let l = cartan.len();
    let mut len_sq: Vec<Option<Rational>> = vec![None; l];
    len_sq[0] = Some(Rational::from_integer(2));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let di = len_sq[i].expect("visited");
        for j in 0..l {
            if j != i && cartan[i][j] != 0 && len_sq[j].is_none() {
                // a_ij d_i = a_ji d_j
                len_sq[j] = Some(di * Rational::new(cartan[i][j], cartan[j][i]));
                stack.push(j);
            }
        }
    }
    (0..l)
        .map(|i| {
            let di = len_sq[i].expect("connected Dynkin diagram");
            (0..l)
                .map(|j| di * Rational::from_integer(cartan[i][j]) / Rational::from_integer(2))
                .collect()
        })
        .collect()
}

/// Exact inverse and determinant by Gauss-Jordan elimination.
fn invert(m: &[Vec<i64>]) -> (Vec<Vec<Rational>>, i64) {
    let mut det = Rational::one();
    let l = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|&v| Rational::from_integer(v)).collect();
            r.extend((0..l).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..l {
        let pivot = (col..l)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrices are nonsingular");
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for r in 0..l {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (v, pv) in a[r].iter_mut().zip(pivot_row) {
                    *v -= f * pv;
                }
            }
        }
    }
    let inverse = a.into_iter().map(|row| row[l..].to_vec()).collect();
    (inverse, det.to_integer())
}

/// Convenience: `RootSystem::new(type)` after validating a type string.
pub fn build_root_system(cartan_type: CartanType) -> RootSystem {
    RootSystem::new(cartan_type)
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
    fn a1_geometry() {
        let a1 = rs("A1");
        assert_eq!((a1.num_positive_roots(), a1.rank(), a1.dimension()), (1, 1, 3));
        let alpha = &a1.positive_roots()[0];
        assert_eq!(alpha, &Weight::from([2]));
        assert_eq!(a1.killing_inner(alpha, alpha).unwrap(), q(1, 2));
        assert_eq!(a1.norm_sq(a1.rho()), q(1, 8));
    }

    #[test]
    fn a2_geometry() {
        let a2 = rs("A2");
        assert_eq!((a2.num_positive_roots(), a2.rank(), a2.dimension()), (3, 2, 8));
        let s = a2.simple_roots();
        assert_eq!(a2.killing_inner(&s[0], &s[0]).unwrap(), q(1, 3));
        assert_eq!(a2.killing_inner(&s[1], &s[1]).unwrap(), q(1, 3));
        assert_eq!(a2.killing_inner(&s[0], &s[1]).unwrap(), q(-1, 6));
        assert_eq!(a2.norm_sq(a2.rho()), q(1, 3));
        assert_eq!(a2.killing_gram()[0][1], q(-1, 6));
    }

    #[test]
    fn root_counts() {
        for (t, r) in [
            ("A1", 1),
            ("A4", 10),
            ("B3", 9),
            ("C4", 16),
            ("D4", 12),
            ("D5", 20),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ] {
            assert_eq!(rs(t).num_positive_roots(), r, "{t}");
        }
    }

    #[test]
    fn positive_roots_sorted_and_simple_first() {
        let b2 = rs("B2");
        assert_eq!(
            b2.positive_root_coords(),
            &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]
        );
        let g2 = rs("G2");
        assert_eq!(g2.positive_root_coords().last().unwrap(), &vec![3, 2]);
        let e8 = rs("E8");
        assert_eq!(
            e8.positive_root_coords().last().unwrap(),
            &vec![2, 3, 4, 6, 5, 4, 3, 2]
        );
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for t in CartanType::all_up_to_rank(8) {
            let rs = RootSystem::new(t);
            let mut sum = Weight::zero(rs.rank());
            for a in rs.positive_roots() {
                sum += a;
            }
            assert_eq!(sum, rs.rho().scale(2), "{t}");
        }
    }

    #[test]
    fn strange_formula_all_types() {
        for t in CartanType::all_up_to_rank(8) {
            let rs = RootSystem::new(t);
            assert_eq!(
                rs.norm_sq(rs.rho()),
                q(rs.dimension() as i64, 24),
                "{t}"
            );
        }
    }

    #[test]
    fn form_reproduces_itself_over_roots() {
        for t in ["A3", "B3", "C3", "G2", "F4", "D4"] {
            let rs = rs(t);
            for x in rs.simple_roots() {
                for y in rs.simple_roots() {
                    let total: Rational = rs
                        .positive_roots()
                        .iter()
                        .map(|a| rs.inner_unchecked(x, a) * rs.inner_unchecked(y, a) * q(2, 1))
                        .sum();
                    assert_eq!(total, rs.inner_unchecked(x, y), "{t}");
                }
            }
        }
    }

    #[test]
    fn form_is_weyl_invariant() {
        for t in ["A3", "B3", "C3", "G2", "F4", "D4", "E6"] {
            let rs = rs(t);
            let l = rs.rank();
            let mut gens: Vec<Weight> = (0..l)
                .map(|i| Weight::new((0..l).map(|j| (i == j) as i32)))
                .collect();
            gens.push(rs.rho().clone());
            for i in 1..=l {
                for x in &gens {
                    for y in &gens {
                        let sx = rs.simple_reflection(i, x).unwrap();
                        let sy = rs.simple_reflection(i, y).unwrap();
                        assert_eq!(
                            rs.killing_inner(&sx, &sy).unwrap(),
                            rs.killing_inner(x, y).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn inner_rejects_dimension_mismatch_and_zero_is_absorbing() {
        let a2 = rs("A2");
        assert!(matches!(
            a2.killing_inner(&Weight::from([1]), &Weight::from([1, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert_eq!(
            a2.killing_inner(&Weight::from([3, -1]), &Weight::zero(2)).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn casimir_values() {
        for t in ["A1", "A2", "B3", "G2", "E6"] {
            let rs = rs(t);
            assert_eq!(rs.casimir_eigenvalue(&Weight::zero(rs.rank())), Rational::zero());
            assert_eq!(
                rs.casimir_eigenvalue(&rs.rho().scale(2)),
                q(rs.dimension() as i64, 3)
            );
        }
        let a2 = rs("A2");
        assert_eq!(a2.casimir_eigenvalue(a2.highest_root()), Rational::one());
        // the adjoint representation always has Casimir 1 for the Killing form
        for t in ["B4", "C3", "D5", "F4", "E8"] {
            let rs = rs(t);
            assert_eq!(rs.casimir_eigenvalue(rs.highest_root()), Rational::one(), "{t}");
        }
    }

    #[test]
    fn weyl_dimension() {
        let a2 = rs("A2");
        assert_eq!(a2.weyl_dim(&Weight::from([3, 0])).unwrap(), BigUint::from(10u32));
        assert_eq!(a2.weyl_dim(&Weight::zero(2)).unwrap(), BigUint::one());
        for t in ["A3", "B2", "G2", "F4", "E8"] {
            let rs = rs(t);
            let r = rs.num_positive_roots() as u32;
            for k in 0..4u32 {
                assert_eq!(
                    rs.weyl_dim(&rs.rho().scale(k as i32)).unwrap(),
                    BigUint::from(k + 1).pow(r),
                    "{t} k={k}"
                );
            }
            assert_eq!(
                rs.weyl_dim(rs.highest_root()).unwrap(),
                BigUint::from(rs.dimension())
            );
        }
        assert!(matches!(
            a2.weyl_dim(&Weight::from([-1, 2])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn reflections() {
        let a3 = rs("A3");
        let lambda = Weight::from([2, -1, 3]);
        for i in 1..=3 {
            let s = a3.simple_reflection(i, &lambda).unwrap();
            assert_eq!(a3.simple_reflection(i, &s).unwrap(), lambda);
            assert_eq!(
                a3.simple_reflection(i, a3.rho()).unwrap(),
                a3.rho() - &a3.simple_roots()[i - 1]
            );
        }
        let a1 = rs("A1");
        assert_eq!(
            a1.simple_reflection(1, &Weight::from([2])).unwrap(),
            Weight::from([-2])
        );
        assert!(matches!(
            a3.simple_reflection(0, &lambda),
            Err(Error::ReflectionIndex { .. })
        ));
        assert!(matches!(
            a3.simple_reflection(4, &lambda),
            Err(Error::ReflectionIndex { .. })
        ));
    }

    #[test]
    fn dominant_representatives() {
        let a1 = rs("A1");
        assert_eq!(a1.dominant_representative(&Weight::from([-2])), Weight::from([2]));
        let a2 = rs("A2");
        let theta = a2.highest_root().clone();
        assert_eq!(a2.dominant_representative(&-&theta), theta);
        assert_eq!(a2.dominant_representative(&Weight::from([3, 1])), Weight::from([3, 1]));
        let e8 = rs("E8");
        let low = -e8.highest_root();
        assert_eq!(&e8.dominant_representative(&low), e8.highest_root());
    }

    #[test]
    fn orbit_sizes() {
        let a2 = rs("A2");
        assert_eq!(a2.orbit(&Weight::from([1, 1])).len(), 6);
        assert_eq!(a2.orbit(&Weight::from([1, 0])).len(), 3);
        let b3 = rs("B3");
        assert_eq!(b3.orbit(b3.rho()).len(), 48);
        // long roots of G2
        let g2 = rs("G2");
        assert_eq!(g2.orbit(g2.highest_root()).len(), 6);
    }

    #[test]
    fn lattice_coordinates() {
        let a2 = rs("A2");
        assert_eq!(a2.lattice_index(), 3);
        assert_eq!(
            a2.simple_coords(&Weight::from([1, 0])),
            vec![q(2, 3), q(1, 3)]
        );
        assert_eq!(a2.root_lattice_coords(&Weight::from([3, 0])), Some(vec![2, 1]));
        assert_eq!(a2.root_lattice_coords(&Weight::from([1, 0])), None);
        assert!(a2.dominates(&Weight::from([3, 0]), a2.highest_root()));
        assert!(!a2.dominates(a2.highest_root(), &Weight::from([3, 0])));
        assert_eq!(a2.height(a2.rho()), q(2, 1));
        for (t, idx) in [("A4", 5), ("B3", 2), ("D4", 4), ("E6", 3), ("E7", 2), ("E8", 1), ("F4", 1), ("G2", 1)] {
            assert_eq!(rs(t).lattice_index(), idx, "{t}");
        }
    }
}
