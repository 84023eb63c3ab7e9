//! Normalization and generation indices of a monomial ideal, with the
//! quantitative bound checks.
//!
//! Both indices are decided by finitely many closure comparisons: for a
//! monomial ideal the normalization is Cohen-Macaulay, so the filtration
//! satisfies `closure(I^{n+1}) = J closure(I^n)` for `n >= ℓ(I) - 1` with a
//! minimal reduction `J ⊆ I` of the closure, and both indices are at most
//! `ℓ(I) - 1`. It therefore suffices to test `n = 0, ..., ℓ(I) - 2` for the
//! normalization index and levels `2, ..., ℓ(I) - 1` for fresh generators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hilbert::multiplicity;
use crate::ideal::MonomialIdeal;
use crate::newton::{closure_with_polyhedron, is_normal, NewtonPolyhedron, NormalityReport};
use crate::ring::Exponent;

/// One bound comparison `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    /// False when the hypothesis (m-primality) is missing and the bound was
    /// skipped with a notice rather than evaluated.
    pub applicable: bool,
}

/// Indices of normalization with the fresh-generator table and bound suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicesReport {
    pub s: u32,
    pub s0: u32,
    pub ell: u32,
    /// Fresh generators of the normalization per t-degree; level 1 lists the
    /// minimal generators of the closure of I.
    pub fresh_generators: BTreeMap<u32, Vec<Exponent>>,
    pub normality: NormalityReport,
    pub bounds: Vec<BoundCheck>,
}

impl IndicesReport {
    /// A violated applicable bound falsifies a guaranteed inequality.
    pub fn falsified(&self) -> bool {
        self.bounds.iter().any(|b| b.applicable && !b.holds)
    }
}

/// Smallest `s` with `closure(I^{n+1}) = I * closure(I^n)` for all `n >= s`;
/// failures can only occur below `ℓ(I) - 1`, so the scan stops there.
pub fn normalization_index(ideal: &MonomialIdeal) -> Result<u32> {
    let ell = ideal.analytic_spread()?;
    if ell == 1 {
        return Ok(0);
    }
    let np = NewtonPolyhedron::of(ideal)?;
    let mut s = 0;
    let mut prev = MonomialIdeal::unit(ideal.ring().clone());
    for n in 0..=ell - 2 {
        let next = closure_with_polyhedron(ideal, &np, n + 1)?;
        if next != ideal.multiply(&prev)? {
            s = n + 1;
        }
        prev = next;
    }
    Ok(s)
}

/// Generation index `s0` and the fresh generators per level: the minimal
/// generators of `closure(I^n)` not already in the subalgebra generated by
/// the lower closures.
pub fn generation_index(
    ideal: &MonomialIdeal,
) -> Result<(u32, BTreeMap<u32, Vec<Exponent>>)> {
    let ell = ideal.analytic_spread()?;
    let mut fresh: BTreeMap<u32, Vec<Exponent>> = BTreeMap::new();
    if ell == 1 {
        // principal-like case: the normalization is the Rees algebra of the
        // closure, indices 0 by convention
        return Ok((0, fresh));
    }
    let np = NewtonPolyhedron::of(ideal)?;
    let mut closures = vec![MonomialIdeal::unit(ideal.ring().clone())];
    for n in 1..=ell - 1 {
        closures.push(closure_with_polyhedron(ideal, &np, n)?);
    }
    fresh.insert(1, closures[1].generators().to_vec());
    let mut s0 = 1;
    for n in 2..=ell - 1 {
        let mut generated: Option<MonomialIdeal> = None;
        for k in 1..n {
            let product = closures[k as usize].multiply(&closures[(n - k) as usize])?;
            generated = Some(match generated {
                None => product,
                Some(acc) => acc.sum(&product)?,
            });
        }
        let generated = generated.expect("n >= 2 has at least one split");
        let new: Vec<Exponent> = closures[n as usize]
            .generators()
            .iter()
            .filter(|g| !generated.contains(g))
            .cloned()
            .collect();
        if !new.is_empty() {
            fresh.insert(n, new);
            s0 = n;
        }
    }
    Ok((s0, fresh))
}

/// Evaluates the bound suite: the spread bounds unconditionally, the
/// multiplicity bounds only on m-primary input (skipped with a notice
/// otherwise).
pub fn check_bounds(ideal: &MonomialIdeal, s: u32, s0: u32, ell: u32) -> Result<Vec<BoundCheck>> {
    let d = ideal.dim() as i64;
    let mut out = vec![
        BoundCheck {
            name: "s <= ell - 1".into(),
            lhs: s as i64,
            rhs: ell as i64 - 1,
            holds: (s as i64) < ell as i64,
            applicable: true,
        },
        BoundCheck {
            name: "s0 <= ell - 1".into(),
            lhs: s0 as i64,
            rhs: ell as i64 - 1,
            holds: (s0 as i64) < ell as i64,
            applicable: true,
        },
    ];
    if ideal.is_m_primary() {
        let e = multiplicity(ideal)? as i64;
        let rhs1 = (e - 1) * s0 as i64;
        out.push(BoundCheck {
            name: "s <= (e - 1) s0".into(),
            lhs: s as i64,
            rhs: rhs1,
            holds: (s as i64) <= rhs1,
            applicable: true,
        });
        let rhs2 = e * ((s0 as i64 + 1).pow(d as u32) - 1) - s0 as i64 * (2 * d - 1);
        out.push(BoundCheck {
            name: "s <= e ((s0 + 1)^d - 1) - s0 (2d - 1)".into(),
            lhs: s as i64,
            rhs: rhs2,
            holds: (s as i64) <= rhs2,
            applicable: true,
        });
    } else {
        for name in ["s <= (e - 1) s0", "s <= e ((s0 + 1)^d - 1) - s0 (2d - 1)"] {
            out.push(BoundCheck {
                name: name.into(),
                lhs: s as i64,
                rhs: 0,
                holds: true,
                applicable: false,
            });
        }
    }
    Ok(out)
}

/// Full indices report: both indices, fresh generators, normality and the
/// bound suite.
pub fn indices_report(ideal: &MonomialIdeal) -> Result<IndicesReport> {
    let ell = ideal.analytic_spread()?;
    let s = normalization_index(ideal)?;
    let (s0, fresh_generators) = generation_index(ideal)?;
    let normality = is_normal(ideal)?;
    let bounds = check_bounds(ideal, s, s0, ell)?;
    Ok(IndicesReport {
        s,
        s0,
        ell,
        fresh_generators,
        normality,
        bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;

    fn ideal(d: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(
            PolyRing::standard(d),
            gens.iter().map(|g| Exponent::new(g.to_vec())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn pure_power_family_d2() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(normalization_index(&i).unwrap(), 1);
        let (s0, fresh) = generation_index(&i).unwrap();
        assert_eq!(s0, 1);
        assert_eq!(fresh.len(), 1);
        assert_eq!(fresh[&1].len(), 3); // closure is m^2
    }

    #[test]
    fn pure_power_family_d3() {
        let i = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        assert_eq!(normalization_index(&i).unwrap(), 2);
        assert_eq!(generation_index(&i).unwrap().0, 1);
    }

    #[test]
    fn cube_powers_in_two_variables() {
        // closure powers are m^(3n) and m^6 = (x^3,y^3) m^3 already,
        // so only the n = 0 step fails
        let i = ideal(2, &[&[3, 0], &[0, 3]]);
        assert_eq!(normalization_index(&i).unwrap(), 1);
    }

    #[test]
    fn principal_convention() {
        let i = ideal(2, &[&[2, 1]]);
        assert_eq!(normalization_index(&i).unwrap(), 0);
        let (s0, fresh) = generation_index(&i).unwrap();
        assert_eq!(s0, 0);
        assert!(fresh.is_empty());
    }

    #[test]
    fn normal_ideal_has_s_zero() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(normalization_index(&tri).unwrap(), 0);
        let (s0, fresh) = generation_index(&tri).unwrap();
        assert_eq!(s0, 1);
        assert!(fresh.keys().all(|&k| k == 1));
    }

    #[test]
    fn bounds_x2y2() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let r = indices_report(&i).unwrap();
        assert_eq!(r.s, 1);
        assert_eq!(r.s0, 1);
        assert_eq!(r.ell, 2);
        assert!(!r.normality.normal);
        assert!(!r.falsified());
        // s = 1 <= (4 - 1) * 1 = 3
        let b = r.bounds.iter().find(|b| b.name == "s <= (e - 1) s0").unwrap();
        assert_eq!(b.rhs, 3);
        assert!(b.holds && b.applicable);
        // s = 1 <= ell - 1 = 1, equality
        let b = r.bounds.iter().find(|b| b.name == "s <= ell - 1").unwrap();
        assert_eq!((b.lhs, b.rhs), (1, 1));
    }

    #[test]
    fn bounds_skip_non_primary() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let bounds = check_bounds(&tri, 0, 1, 3).unwrap();
        assert!(bounds.iter().filter(|b| !b.applicable).count() == 2);
        assert!(bounds.iter().all(|b| b.holds));
    }

    #[test]
    fn fresh_generators_regenerate_closures() {
        // the fresh levels, closed under products, rebuild every closure
        for gens in [
            vec![vec![2u64, 0], vec![0, 2]],
            vec![vec![3, 0, 0], vec![0, 3, 0], vec![0, 0, 3]],
            // the six-variable clutter ideal, where level 2 is genuinely fresh
            vec![
                vec![1, 1, 0, 0, 1, 0],
                vec![1, 0, 1, 1, 0, 0],
                vec![0, 1, 1, 0, 0, 1],
                vec![0, 0, 0, 1, 1, 1],
            ],
        ] {
            let d = gens[0].len();
            let i = MonomialIdeal::new(
                PolyRing::standard(d),
                gens.into_iter().map(Exponent::new).collect(),
            )
            .unwrap();
            let ell = i.analytic_spread().unwrap();
            let (_, fresh) = generation_index(&i).unwrap();
            let np = NewtonPolyhedron::of(&i).unwrap();
            let ring = i.ring().clone();
            let mut rebuilt: Vec<MonomialIdeal> = vec![MonomialIdeal::unit(ring.clone())];
            for n in 1..=ell {
                let mut level = match fresh.get(&n) {
                    Some(gens) => MonomialIdeal::new(ring.clone(), gens.clone()).unwrap(),
                    None => MonomialIdeal::zero(ring.clone()),
                };
                for k in 1..n {
                    let prod = rebuilt[k as usize]
                        .multiply(&rebuilt[(n - k) as usize])
                        .unwrap();
                    level = level.sum(&prod).unwrap();
                }
                let expected = closure_with_polyhedron(&i, &np, n).unwrap();
                assert_eq!(level, expected, "level {n}");
                rebuilt.push(level);
            }
        }
    }
}
