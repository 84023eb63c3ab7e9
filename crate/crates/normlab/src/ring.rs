//! Ambient polynomial ring data and exponent vectors.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A positively graded polynomial ring over the rationals, described by its
/// variable names and weights. The default weight vector `(1, ..., 1)` is the
/// standard grading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRing {
    variables: Vec<String>,
    weights: Vec<u64>,
}

impl PolyRing {
    pub fn new(variables: Vec<String>, weights: Vec<u64>) -> Result<Arc<Self>> {
        if variables.is_empty() {
            return Err(Error::InvalidRing("need at least one variable".into()));
        }
        if variables.len() != weights.len() {
            return Err(Error::InvalidRing(format!(
                "{} variables but {} weights",
                variables.len(),
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidRing("weights must be positive".into()));
        }
        let distinct: BTreeSet<&String> = variables.iter().collect();
        if distinct.len() != variables.len() {
            return Err(Error::InvalidRing("variable names must be distinct".into()));
        }
        Ok(Arc::new(Self { variables, weights }))
    }

    /// Standard graded ring in `d` variables, named `x, y, z, w` for small
    /// `d` and `x1, ..., xd` otherwise.
    pub fn standard(d: usize) -> Arc<Self> {
        let names = Self::default_names(d);
        Self::new(names, vec![1; d]).expect("standard ring is always valid")
    }

    pub fn default_names(d: usize) -> Vec<String> {
        if d <= 4 {
            ["x", "y", "z", "w"][..d].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=d).map(|i| format!("x{i}")).collect()
        }
    }

    pub fn dim(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Sum of the variable weights; equals the dimension in the standard
    /// grading.
    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn degree(&self, exp: &Exponent) -> u64 {
        exp.entries()
            .iter()
            .zip(&self.weights)
            .map(|(&a, &w)| a * w)
            .sum()
    }

    /// Renders `x^2*y` style; the empty product is `1`.
    pub fn format_monomial(&self, exp: &Exponent) -> String {
        let mut parts = Vec::new();
        for (name, &a) in self.variables.iter().zip(exp.entries()) {
            match a {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{a}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Exponent vector of a monomial; ordered lexicographically, which is the
/// canonical generator order everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Exponent(Vec<u64>);

impl Exponent {
    pub fn new(entries: Vec<u64>) -> Self {
        Self(entries)
    }

    pub fn zero(d: usize) -> Self {
        Self(vec![0; d])
    }

    /// The `k`-th unit vector scaled by `a`.
    pub fn pure(d: usize, k: usize, a: u64) -> Self {
        let mut v = vec![0; d];
        v[k] = a;
        Self(v)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Total (unweighted) degree.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Componentwise divisibility: `self <= other` everywhere.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `max(self - other, 0)`.
    pub fn sub_clamped(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Componentwise maximum, the lcm of the monomials.
    pub fn join(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn scale(&self, n: u64) -> Self {
        Self(self.0.iter().map(|a| a * n).collect())
    }

    /// Indices of nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&a| a <= 1)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_validation() {
        assert!(PolyRing::new(vec!["x".into(), "x".into()], vec![1, 1]).is_err());
        assert!(PolyRing::new(vec!["x".into()], vec![0]).is_err());
        assert!(PolyRing::new(vec![], vec![]).is_err());
        assert!(PolyRing::new(vec!["x".into(), "y".into()], vec![1]).is_err());
    }

    #[test]
    fn weighted_degree() {
        let r = PolyRing::new(vec!["x".into(), "y".into()], vec![2, 3]).unwrap();
        assert_eq!(r.degree(&Exponent::new(vec![1, 2])), 8);
        assert_eq!(r.weight_sum(), 5);
        assert!(!r.is_standard_graded());
    }

    #[test]
    fn exponent_lattice_ops() {
        let a = Exponent::new(vec![2, 0]);
        let b = Exponent::new(vec![1, 1]);
        assert!(!a.divides(&b));
        assert_eq!(a.join(&b), Exponent::new(vec![2, 1]));
        assert_eq!(a.sub_clamped(&b), Exponent::new(vec![1, 0]));
        assert_eq!(a.add(&b), Exponent::new(vec![3, 1]));
        assert_eq!(b.support(), vec![0, 1]);
    }

    #[test]
    fn monomial_formatting() {
        let r = PolyRing::standard(2);
        assert_eq!(r.format_monomial(&Exponent::new(vec![2, 1])), "x^2*y");
        assert_eq!(r.format_monomial(&Exponent::new(vec![0, 0])), "1");
    }
}
