//! Exact monomial-ideal arithmetic.
//!
//! A [`MonomialIdeal`] is stored as the antichain of its minimal generators
//! in lexicographic order, so ideal equality is structural equality. The
//! zero ideal is the empty generator set; the unit ideal is the singleton
//! `{(0, ..., 0)}`.

use std::sync::Arc;

use num_traits::FromPrimitive;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::ring::{Exponent, PolyRing};
use crate::Q;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<PolyRing>,
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reducing them to the antichain
    /// of minimal elements under componentwise divisibility.
    pub fn new(ring: Arc<PolyRing>, gens: Vec<Exponent>) -> Result<Self> {
        let d = ring.dim();
        for g in &gens {
            if g.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: g.len(),
                });
            }
        }
        Ok(Self {
            gens: minimalize(gens),
            ring,
        })
    }

    pub fn zero(ring: Arc<PolyRing>) -> Self {
        Self { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<PolyRing>) -> Self {
        let d = ring.dim();
        Self {
            ring,
            gens: vec![Exponent::zero(d)],
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.ring.dim()
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// True iff some generator divides the monomial.
    pub fn contains(&self, a: &Exponent) -> bool {
        assert_eq!(a.len(), self.dim(), "exponent length must match the ring");
        self.gens.iter().any(|g| g.divides(a))
    }

    /// True iff every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.add(b));
            }
        }
        Ok(Self {
            ring: self.ring.clone(),
            gens: minimalize(prods),
        })
    }

    /// `I^n`, with `I^0` the unit ideal.
    pub fn power(&self, n: u32) -> Result<Self> {
        let mut acc = Self::unit(self.ring.clone());
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Ideal sum `I + J` (union of generators, minimalized).
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// Intersection via componentwise maxima of generator pairs.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut joins = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                joins.push(a.join(b));
            }
        }
        Ok(Self {
            ring: self.ring.clone(),
            gens: minimalize(joins),
        })
    }

    /// Colon ideal `(I : J)`; errors when `J` is zero.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ColonByZero);
        }
        let mut acc: Option<Self> = None;
        for b in &other.gens {
            let per_gen = Self {
                ring: self.ring.clone(),
                gens: minimalize(self.gens.iter().map(|a| a.sub_clamped(b)).collect()),
            };
            acc = Some(match acc {
                None => per_gen,
                Some(cur) => cur.intersect(&per_gen)?,
            });
        }
        Ok(acc.expect("other has at least one generator"))
    }

    /// The least pure-power exponent of each variable, when every variable
    /// has one; this is exactly m-primality for monomial ideals.
    pub fn pure_power_bounds(&self) -> Result<Vec<u64>> {
        let d = self.dim();
        let mut bounds = vec![None; d];
        for g in &self.gens {
            let supp = g.support();
            if supp.len() <= 1 {
                let i = supp.first().copied().unwrap_or(0);
                let e = g.entries()[i];
                if g.is_zero() {
                    // unit ideal: every box collapses
                    return Ok(vec![0; d]);
                }
                bounds[i] = Some(match bounds[i] {
                    None => e,
                    Some(cur) if e < cur => e,
                    Some(cur) => cur,
                });
            }
        }
        bounds
            .into_iter()
            .enumerate()
            .map(|(i, b)| {
                b.ok_or_else(|| Error::NotMPrimary {
                    var: self.ring.variables()[i].clone(),
                })
            })
            .collect()
    }

    pub fn is_m_primary(&self) -> bool {
        self.pure_power_bounds().is_ok()
    }

    /// `λ(R/I)`, the number of standard monomials; requires m-primality.
    ///
    /// Every standard monomial lies in the box `∏ [0, N_i - 1]` where `N_i`
    /// is the least pure power of variable `i`, so a box scan is exhaustive.
    pub fn colength(&self) -> Result<u64> {
        let bounds = self.pure_power_bounds()?;
        let mut count = 0u64;
        for_each_box_point(&bounds, &mut |p| {
            if !self.contains(p) {
                count += 1;
            }
        });
        Ok(count)
    }

    /// Number of degree-`e` standard monomials (weighted degree).
    pub fn hilbert_slice(&self, e: u64) -> u64 {
        let mut count = 0u64;
        for_each_degree_vector(self.ring.weights(), e, &mut |p| {
            if !self.contains(p) {
                count += 1;
            }
        });
        count
    }

    /// Analytic spread: the rank over the rationals of the generator
    /// exponent matrix augmented by a column of ones.
    pub fn analytic_spread(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let rows: Vec<Vec<Q>> = self
            .gens
            .iter()
            .map(|g| {
                let mut row: Vec<Q> = g
                    .entries()
                    .iter()
                    .map(|&a| Q::from_u64(a).expect("u64 embeds in Q"))
                    .collect();
                row.push(Q::from_u64(1).unwrap());
                row
            })
            .collect();
        Ok(Mat::from_rows(rows).rank() as u32)
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<u64> {
        let d = self.dim();
        let mut m = vec![0u64; d];
        for g in &self.gens {
            for (j, &a) in g.entries().iter().enumerate() {
                m[j] = m[j].max(a);
            }
        }
        m
    }

    pub fn generator_degrees(&self) -> Vec<u64> {
        self.gens.iter().map(|g| self.ring.degree(g)).collect()
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.generator_degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_generator_degree(&self) -> u64 {
        self.generator_degrees().into_iter().min().unwrap_or(0)
    }

    /// The common generator degree when all generators share one.
    pub fn equigenerated_degree(&self) -> Result<u64> {
        let degs = self.generator_degrees();
        let first = *degs.first().ok_or(Error::ZeroIdeal)?;
        for &dg in &degs[1..] {
            if dg != first {
                return Err(Error::NotEquigenerated(first, dg));
            }
        }
        Ok(first)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Exponent::is_squarefree)
    }

    /// Radical of a monomial ideal: supports of the generators.
    pub fn radical(&self) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Exponent::new(
                    g.entries()
                        .iter()
                        .map(|&a| if a > 0 { 1 } else { 0 })
                        .collect::<Vec<u64>>(),
                )
            })
            .collect();
        Self {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        }
    }

    /// Height of the ideal: the minimum size of a vertex cover of the
    /// generator supports (the height of the radical).
    pub fn height(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let d = self.dim();
        if d > 20 {
            return Err(Error::Unsupported("height search limited to d <= 20".into()));
        }
        let supports: Vec<u32> = self
            .gens
            .iter()
            .map(|g| g.support().iter().fold(0u32, |m, &i| m | (1 << i)))
            .collect();
        let mut best = d as u32;
        for mask in 0u32..(1 << d) {
            let size = mask.count_ones();
            if size >= best {
                continue;
            }
            if supports.iter().all(|&s| s & mask != 0) {
                best = size;
            }
        }
        Ok(best)
    }

    pub fn format_generators(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.format_monomial(g)).collect()
    }
}

/// Antichain of minimal elements under componentwise divisibility; the
/// returned set generates the same ideal and is sorted lexicographically.
pub fn minimalize(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    // Sorting by total degree first means a kept element can never be
    // divisible by a later one, so one forward pass suffices.
    gens.sort_unstable_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Exponent> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// Visits every lattice point of `∏ [0, bounds[i] - 1]`; empty when some
/// bound is zero.
pub(crate) fn for_each_box_point(bounds: &[u64], f: &mut dyn FnMut(&Exponent)) {
    if bounds.contains(&0) {
        return;
    }
    let d = bounds.len();
    let mut cur = vec![0u64; d];
    loop {
        f(&Exponent::new(cur.clone()));
        let mut j = d;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            cur[j] += 1;
            if cur[j] < bounds[j] {
                break;
            }
            cur[j] = 0;
        }
    }
}

/// Visits every exponent vector of exact weighted degree `e`.
pub(crate) fn for_each_degree_vector(weights: &[u64], e: u64, f: &mut dyn FnMut(&Exponent)) {
    let d = weights.len();
    let mut cur = vec![0u64; d];
    fn rec(
        weights: &[u64],
        rem: u64,
        idx: usize,
        cur: &mut Vec<u64>,
        f: &mut dyn FnMut(&Exponent),
    ) {
        if idx == weights.len() - 1 {
            if rem.is_multiple_of(weights[idx]) {
                cur[idx] = rem / weights[idx];
                f(&Exponent::new(cur.clone()));
            }
            return;
        }
        let max = rem / weights[idx];
        for a in 0..=max {
            cur[idx] = a;
            rec(weights, rem - a * weights[idx], idx + 1, cur, f);
        }
    }
    if d > 0 {
        rec(weights, e, 0, &mut cur, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(d: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(
            PolyRing::standard(d),
            gens.iter().map(|g| Exponent::new(g.to_vec())).collect(),
        )
        .unwrap()
    }

    fn gens_of(i: &MonomialIdeal) -> Vec<Vec<u64>> {
        i.generators().iter().map(|g| g.entries().to_vec()).collect()
    }

    #[test]
    fn minimalize_drops_divisible_generators() {
        let i = ideal(2, &[&[2, 0], &[2, 1], &[0, 3]]);
        assert_eq!(gens_of(&i), vec![vec![0, 3], vec![2, 0]]);
    }

    #[test]
    fn minimalize_empty_and_duplicates() {
        let zero = ideal(2, &[]);
        assert!(zero.is_zero());
        let dup = ideal(2, &[&[1, 1], &[1, 1]]);
        assert_eq!(gens_of(&dup), vec![vec![1, 1]]);
    }

    #[test]
    fn unit_ideal_collapses_everything() {
        let i = ideal(2, &[&[0, 0], &[1, 0]]);
        assert!(i.is_unit());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let r = PolyRing::standard(2);
        let err = MonomialIdeal::new(r, vec![Exponent::new(vec![1, 2, 3])]);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn multiply_maximal_ideal_square() {
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        let m2 = m.multiply(&m).unwrap();
        assert_eq!(gens_of(&m2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn multiply_unit_is_identity_and_zero_annihilates() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let unit = MonomialIdeal::unit(i.ring().clone());
        assert_eq!(i.multiply(&unit).unwrap(), i);
        let zero = MonomialIdeal::zero(i.ring().clone());
        assert!(i.multiply(&zero).unwrap().is_zero());
    }

    #[test]
    fn multiply_derived_example() {
        let a = ideal(2, &[&[2, 0], &[0, 2]]);
        let b = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let p = a.multiply(&b).unwrap();
        assert_eq!(
            gens_of(&p),
            vec![vec![0, 4], vec![1, 3], vec![2, 2], vec![3, 1], vec![4, 0]]
        );
    }

    #[test]
    fn power_zero_is_unit() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(i.power(0).unwrap().is_unit());
        assert_eq!(i.power(1).unwrap(), i);
    }

    #[test]
    fn intersect_principal_ideals() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(gens_of(&x.intersect(&y).unwrap()), vec![vec![1, 1]]);
    }

    #[test]
    fn intersect_with_unit_is_identity() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let unit = MonomialIdeal::unit(i.ring().clone());
        assert_eq!(i.intersect(&unit).unwrap(), i);
    }

    #[test]
    fn intersect_three_squares_contains_xyz() {
        let a = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]).power(2).unwrap();
        let b = ideal(3, &[&[0, 1, 0], &[0, 0, 1]]).power(2).unwrap();
        let c = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]).power(2).unwrap();
        let i = a.intersect(&b).unwrap().intersect(&c).unwrap();
        assert!(i.contains(&Exponent::new(vec![1, 1, 1])));
    }

    #[test]
    fn colon_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        let q = i.colon(&m).unwrap();
        assert_eq!(gens_of(&q), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);

        let unit = MonomialIdeal::unit(i.ring().clone());
        assert_eq!(i.colon(&unit).unwrap(), i);

        assert!(i.colon(&i).unwrap().is_unit());

        let zero = MonomialIdeal::zero(i.ring().clone());
        assert!(matches!(i.colon(&zero), Err(Error::ColonByZero)));
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(i.contains(&Exponent::new(vec![2, 1])));
        assert!(!i.contains(&Exponent::new(vec![1, 1])));
    }

    #[test]
    fn membership_of_the_full_squarefree_monomial() {
        // a squarefree degree-3 generator divides the product of all six
        // variables, so it lies in the edge ideal; it does not lie in the
        // square, whose generators have degree 6 with a repeated variable
        let i = ideal(
            6,
            &[
                &[1, 1, 0, 0, 1, 0],
                &[1, 0, 1, 1, 0, 0],
                &[0, 1, 1, 0, 0, 1],
                &[0, 0, 0, 1, 1, 1],
            ],
        );
        let all_ones = Exponent::new(vec![1; 6]);
        assert!(i.contains(&all_ones));
        assert!(!i.power(2).unwrap().contains(&all_ones));
    }

    #[test]
    fn colength_examples() {
        let m2 = ideal(2, &[&[1, 0], &[0, 1]]).power(2).unwrap();
        assert_eq!(m2.colength().unwrap(), 3);
        assert_eq!(ideal(2, &[&[2, 0], &[0, 3]]).colength().unwrap(), 6);
        // complete intersection of two quadrics: {1, x, y, xy}
        assert_eq!(ideal(2, &[&[2, 0], &[0, 2]]).colength().unwrap(), 4);
    }

    #[test]
    fn colength_requires_m_primary() {
        let i = ideal(2, &[&[1, 1]]);
        assert!(matches!(i.colength(), Err(Error::NotMPrimary { .. })));
    }

    #[test]
    fn colength_of_unit_is_zero() {
        let unit = MonomialIdeal::unit(PolyRing::standard(2));
        assert_eq!(unit.colength().unwrap(), 0);
    }

    #[test]
    fn hilbert_slice_examples() {
        let m2 = ideal(2, &[&[1, 0], &[0, 1]]).power(2).unwrap();
        assert_eq!(m2.hilbert_slice(1), 2);
        let zero = MonomialIdeal::zero(PolyRing::standard(2));
        assert_eq!(zero.hilbert_slice(2), 3);
        assert_eq!(ideal(2, &[&[2, 0], &[0, 2]]).hilbert_slice(2), 1);
    }

    #[test]
    fn hilbert_slice_respects_weights() {
        // weights (1, 2): degree-2 standard monomials are x^2 and y
        let ring = PolyRing::new(vec!["x".into(), "y".into()], vec![1, 2]).unwrap();
        let zero = MonomialIdeal::zero(ring.clone());
        assert_eq!(zero.hilbert_slice(2), 2);
        let i = MonomialIdeal::new(ring, vec![Exponent::new(vec![0, 1])]).unwrap();
        assert_eq!(i.hilbert_slice(2), 1); // only x^2 survives
    }

    #[test]
    fn analytic_spread_examples() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(tri.analytic_spread().unwrap(), 3);
        assert_eq!(ideal(2, &[&[2, 0], &[0, 2]]).analytic_spread().unwrap(), 2);
        assert_eq!(ideal(2, &[&[3, 0]]).analytic_spread().unwrap(), 1);

        let zero = MonomialIdeal::zero(PolyRing::standard(2));
        assert!(matches!(zero.analytic_spread(), Err(Error::ZeroIdeal)));
        let unit = MonomialIdeal::unit(PolyRing::standard(2));
        assert!(matches!(unit.analytic_spread(), Err(Error::UnitIdeal)));
    }

    #[test]
    fn colength_matches_slice_sum() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let max_deg = i.max_generator_degree();
        let mut total = 0;
        let mut e = 0;
        loop {
            let s = i.hilbert_slice(e);
            if s == 0 && e >= max_deg {
                break;
            }
            total += s;
            e += 1;
        }
        assert_eq!(total, i.colength().unwrap());
    }

    #[test]
    fn height_of_monomial_ideals() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(tri.height().unwrap(), 2);
        assert_eq!(ideal(2, &[&[2, 0], &[0, 2]]).height().unwrap(), 2);
        assert_eq!(ideal(3, &[&[0, 2, 0]]).height().unwrap(), 1);
    }

    #[test]
    fn radical_and_squarefree() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(!i.is_squarefree());
        let r = i.radical();
        assert_eq!(gens_of(&r), vec![vec![0, 1], vec![1, 0]]);
        assert!(r.is_squarefree());
    }

    #[test]
    fn equigenerated_detection() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(tri.equigenerated_degree().unwrap(), 2);
        let mixed = ideal(2, &[&[3, 0], &[0, 5]]);
        assert!(matches!(
            mixed.equigenerated_degree(),
            Err(Error::NotEquigenerated(5, 3))
        ));
    }
}
