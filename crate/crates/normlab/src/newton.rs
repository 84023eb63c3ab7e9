//! Newton polyhedra of monomial ideals and polyhedral integral closure.
//!
//! The Newton polyhedron of `I = (x^{a_1}, ..., x^{a_m})` is
//! `NP(I) = conv(a_1, ..., a_m) + R^d_{>=0}`; the integral closure of `I^n`
//! is generated by the lattice points of `n * NP(I)`. Facets are enumerated
//! by brute force over `d`-subsets of the generator points and the coordinate
//! recession directions: each subset spans a candidate hyperplane, which is
//! kept when its normal is nonnegative, it supports the polyhedron, and its
//! tight set is `(d-1)`-dimensional. That last test makes the description
//! irredundant without any linear programming.

use num_bigint::Sign;
use num_integer::Integer as _;
use num_traits::{FromPrimitive, One, Zero};

use crate::error::{Error, Result};
use crate::ideal::{for_each_box_point, minimalize, MonomialIdeal};
use crate::matrix::Mat;
use crate::ring::Exponent;
use crate::{Int, Q};

/// One supporting halfspace `<normal, a> >= offset` with a primitive
/// nonnegative integer normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<Int>,
    pub offset: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    /// Irredundant facet description of `NP(I)`; errors on the zero and unit
    /// ideals.
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let d = ideal.dim();
        let points: Vec<&Exponent> = ideal.generators().iter().collect();
        let m = points.len();

        let mut facets: Vec<Facet> = Vec::new();
        for_each_combination(m + d, d, &mut |subset| {
            if let Some(f) = candidate_facet(&points, d, subset) {
                if !facets.contains(&f) {
                    facets.push(f);
                }
            }
        });
        facets.sort();

        debug_assert!(facets.iter().all(|f| {
            points
                .iter()
                .all(|p| dot(&f.normal, p.entries()) >= f.offset)
        }));
        Ok(Self { dim: d, facets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Membership of a lattice point in `scale * NP` (offsets scale, normals
    /// do not).
    pub fn contains_scaled(&self, a: &Exponent, scale: u64) -> bool {
        let s = Int::from(scale);
        self.facets
            .iter()
            .all(|f| dot(&f.normal, a.entries()) >= &f.offset * &s)
    }
}

fn dot(normal: &[Int], point: &[u64]) -> Int {
    normal
        .iter()
        .zip(point)
        .map(|(n, &p)| n * Int::from(p))
        .sum()
}

/// Evaluates one `d`-subset of points (indices `< m`) and recession
/// directions (indices `>= m`) as a facet candidate.
fn candidate_facet(points: &[&Exponent], d: usize, subset: &[usize]) -> Option<Facet> {
    let m = points.len();
    // Rows of the homogeneous system in the unknowns (normal, offset).
    let mut rows: Vec<Vec<Q>> = Vec::with_capacity(d);
    for &idx in subset {
        let mut row = Vec::with_capacity(d + 1);
        if idx < m {
            for &a in points[idx].entries() {
                row.push(Q::from_u64(a).unwrap());
            }
            row.push(-Q::one());
        } else {
            let j = idx - m;
            for k in 0..d {
                row.push(if k == j { Q::one() } else { Q::zero() });
            }
            row.push(Q::zero());
        }
        rows.push(row);
    }
    let kernel = Mat::from_rows(rows).kernel();
    if kernel.len() != 1 {
        return None;
    }
    let (normal, offset) = primitive_integer(&kernel[0])?;

    // Supporting: the subset's offset must be the minimum over all points.
    if points
        .iter()
        .any(|p| dot(&normal, p.entries()) < offset)
    {
        return None;
    }

    // Facet test: tight points and tight directions span dimension d-1.
    let tight: Vec<&Exponent> = points
        .iter()
        .filter(|p| dot(&normal, p.entries()) == offset)
        .copied()
        .collect();
    let base = tight.first()?;
    let mut span_rows: Vec<Vec<Q>> = Vec::new();
    for p in &tight[1..] {
        span_rows.push(
            p.entries()
                .iter()
                .zip(base.entries())
                .map(|(&a, &b)| Q::from_i64(a as i64 - b as i64).unwrap())
                .collect(),
        );
    }
    for (j, n) in normal.iter().enumerate() {
        if n.is_zero() {
            let mut row = vec![Q::zero(); d];
            row[j] = Q::one();
            span_rows.push(row);
        }
    }
    let rank = if span_rows.is_empty() {
        0
    } else {
        Mat::from_rows(span_rows).rank()
    };
    if rank != d - 1 {
        return None;
    }
    Some(Facet { normal, offset })
}

/// Scales a rational kernel vector `(normal | offset)` to a primitive
/// integer facet with nonnegative normal; `None` when the normal is zero or
/// has mixed signs.
fn primitive_integer(v: &[Q]) -> Option<(Vec<Int>, Int)> {
    let mut denom_lcm = Int::from(1);
    for q in v {
        denom_lcm = denom_lcm.lcm(q.denom());
    }
    let mut ints: Vec<Int> = v
        .iter()
        .map(|q| q.numer() * (&denom_lcm / q.denom()))
        .collect();
    let offset_idx = ints.len() - 1;
    let normal = &ints[..offset_idx];
    let any_pos = normal.iter().any(|n| n.sign() == Sign::Plus);
    let any_neg = normal.iter().any(|n| n.sign() == Sign::Minus);
    match (any_pos, any_neg) {
        (true, true) | (false, false) => return None,
        (false, true) => ints.iter_mut().for_each(|n| *n = -n.clone()),
        (true, false) => {}
    }
    let mut g = Int::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    if !g.is_zero() && g != Int::from(1) {
        ints.iter_mut().for_each(|n| *n = &*n / &g);
    }
    let offset = ints.pop().expect("offset entry present");
    Some((ints, offset))
}

pub(crate) fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k > n || k == 0 {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // largest position that can still advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Minimal generators of the integral closure of `I^n`: the minimal lattice
/// points of `n * NP(I)`.
///
/// The scan is restricted to the box `∏ [0, n * max_i a_{ij}]`: a lattice
/// point with a coordinate beyond the box bound decomposes as q + r with
/// q in n*conv(points) and r positive in that coordinate, so decrementing
/// the coordinate stays in the polyhedron and the point is non-minimal.
pub fn closure_of_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    let np = NewtonPolyhedron::of(ideal)?;
    closure_with_polyhedron(ideal, &np, n)
}

/// Same as [`closure_of_power`] with a precomputed polyhedron, for callers
/// that need many powers of one ideal.
pub fn closure_with_polyhedron(
    ideal: &MonomialIdeal,
    np: &NewtonPolyhedron,
    n: u32,
) -> Result<MonomialIdeal> {
    if n < 1 {
        return Err(Error::NonPositivePower);
    }
    if !ideal.is_proper() {
        return Err(if ideal.is_zero() {
            Error::ZeroIdeal
        } else {
            Error::UnitIdeal
        });
    }
    let bounds: Vec<u64> = ideal
        .max_exponents()
        .iter()
        .map(|&b| b * n as u64 + 1)
        .collect();
    let mut inside: Vec<Exponent> = Vec::new();
    for_each_box_point(&bounds, &mut |p| {
        if np.contains_scaled(p, n as u64) {
            inside.push(p.clone());
        }
    });
    MonomialIdeal::new(ideal.ring().clone(), minimalize(inside))
}

/// Definition-based closure, independent of the polyhedral route: a monomial
/// `x^a` is integral over `I^n` iff `x^(ka)` lies in `I^(nk)` for some
/// `k >= 1`. The scan clears denominators up to `kmax`; on the desk-scale
/// envelope (d <= 3, exponents <= 6) `kmax = 12` is exhaustive, and the
/// polyhedral/definition agreement is part of the test suite.
pub fn closure_by_definition(
    ideal: &MonomialIdeal,
    n: u32,
    kmax: u32,
) -> Result<MonomialIdeal> {
    if n < 1 {
        return Err(Error::NonPositivePower);
    }
    if !ideal.is_proper() {
        return Err(if ideal.is_zero() {
            Error::ZeroIdeal
        } else {
            Error::UnitIdeal
        });
    }
    let base = ideal.power(n)?;
    let mut powers = Vec::with_capacity(kmax as usize);
    let mut cur = base.clone();
    for _ in 0..kmax {
        powers.push(cur.clone());
        cur = cur.multiply(&base)?;
    }
    let bounds: Vec<u64> = ideal
        .max_exponents()
        .iter()
        .map(|&b| b * n as u64 + 1)
        .collect();
    let mut inside: Vec<Exponent> = Vec::new();
    for_each_box_point(&bounds, &mut |p| {
        if (1..=kmax).any(|k| powers[k as usize - 1].contains(&p.scale(k as u64))) {
            inside.push(p.clone());
        }
    });
    MonomialIdeal::new(ideal.ring().clone(), minimalize(inside))
}

/// Outcome of the normality check, with the smallest failing power and a
/// witness monomial when the ideal is not normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityReport {
    pub normal: bool,
    /// Powers `1..=checked_through` were compared; integral closedness up to
    /// the analytic spread minus one decides normality outright.
    pub checked_through: u32,
    pub failure: Option<NormalityFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityFailure {
    pub power: u32,
    pub witness: Exponent,
}

/// Decides normality by comparing `I^n` with the closure of `I^n` for all
/// `n < ℓ(I)`; integral closedness of those powers forces normality.
pub fn is_normal(ideal: &MonomialIdeal) -> Result<NormalityReport> {
    let ell = ideal.analytic_spread()?;
    let np = NewtonPolyhedron::of(ideal)?;
    let mut power = MonomialIdeal::unit(ideal.ring().clone());
    for n in 1..ell {
        power = power.multiply(ideal)?;
        let closure = closure_with_polyhedron(ideal, &np, n)?;
        if power != closure {
            let witness = closure
                .generators()
                .iter()
                .find(|g| !power.contains(g))
                .cloned()
                .ok_or_else(|| {
                    Error::Internal("closure differs but all generators contained".into())
                })?;
            return Ok(NormalityReport {
                normal: false,
                checked_through: ell - 1,
                failure: Some(NormalityFailure { power: n, witness }),
            });
        }
    }
    Ok(NormalityReport {
        normal: true,
        checked_through: ell.saturating_sub(1),
        failure: None,
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

    fn facet(normal: &[i64], offset: i64) -> Facet {
        Facet {
            normal: normal.iter().map(|&n| Int::from(n)).collect(),
            offset: Int::from(offset),
        }
    }

    #[test]
    fn facets_of_x3_y5() {
        let np = NewtonPolyhedron::of(&ideal(2, &[&[3, 0], &[0, 5]])).unwrap();
        assert_eq!(
            np.facets(),
            &[facet(&[0, 1], 0), facet(&[1, 0], 0), facet(&[5, 3], 15)]
        );
    }

    #[test]
    fn facets_of_maximal_ideal() {
        let np = NewtonPolyhedron::of(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(
            np.facets(),
            &[facet(&[0, 1], 0), facet(&[1, 0], 0), facet(&[1, 1], 1)]
        );
    }

    #[test]
    fn facets_of_power_of_maximal_ideal() {
        let m2 = ideal(2, &[&[1, 0], &[0, 1]]).power(2).unwrap();
        let np = NewtonPolyhedron::of(&m2).unwrap();
        assert_eq!(
            np.facets(),
            &[facet(&[0, 1], 0), facet(&[1, 0], 0), facet(&[1, 1], 2)]
        );
    }

    #[test]
    fn facets_of_principal_translate() {
        // (xy): the polyhedron is (1,1) + orthant, two coordinate facets.
        let np = NewtonPolyhedron::of(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!(np.facets(), &[facet(&[0, 1], 1), facet(&[1, 0], 1)]);
    }

    #[test]
    fn closure_of_x3_y5() {
        let c = closure_of_power(&ideal(2, &[&[3, 0], &[0, 5]]), 1).unwrap();
        let want: Vec<Vec<u64>> = vec![vec![0, 5], vec![1, 4], vec![2, 2], vec![3, 0]];
        let got: Vec<Vec<u64>> = c.generators().iter().map(|g| g.entries().to_vec()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn closure_of_pure_powers_is_power_of_maximal() {
        // (x^d, y^d) closes to m^d
        for d in 2u64..=3 {
            let i = ideal(2, &[&[d, 0], &[0, d]]);
            let c = closure_of_power(&i, 1).unwrap();
            let md = ideal(2, &[&[1, 0], &[0, 1]]).power(d as u32).unwrap();
            assert_eq!(c, md);
        }
        let i3 = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        let m3 = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
            .power(3)
            .unwrap();
        assert_eq!(closure_of_power(&i3, 1).unwrap(), m3);
    }

    #[test]
    fn closure_rejects_degenerate_input() {
        let r = PolyRing::standard(2);
        assert!(matches!(
            closure_of_power(&MonomialIdeal::zero(r.clone()), 1),
            Err(Error::ZeroIdeal)
        ));
        assert!(matches!(
            closure_of_power(&MonomialIdeal::unit(r.clone()), 1),
            Err(Error::UnitIdeal)
        ));
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(matches!(closure_of_power(&i, 0), Err(Error::NonPositivePower)));
    }

    #[test]
    fn closure_idempotent() {
        for gens in [
            vec![vec![3u64, 0], vec![0, 5]],
            vec![vec![2, 0], vec![0, 2]],
            vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]],
        ] {
            let d = gens[0].len();
            let i = MonomialIdeal::new(
                PolyRing::standard(d),
                gens.into_iter().map(Exponent::new).collect(),
            )
            .unwrap();
            let c1 = closure_of_power(&i, 1).unwrap();
            let c2 = closure_of_power(&c1, 1).unwrap();
            assert_eq!(c1, c2);
        }
    }

    #[test]
    fn power_of_maximal_is_normal() {
        let m2 = ideal(2, &[&[1, 0], &[0, 1]]).power(2).unwrap();
        let rep = is_normal(&m2).unwrap();
        assert!(rep.normal);
    }

    #[test]
    fn x2_y2_not_normal_with_witness() {
        let rep = is_normal(&ideal(2, &[&[2, 0], &[0, 2]])).unwrap();
        assert!(!rep.normal);
        let f = rep.failure.unwrap();
        assert_eq!(f.power, 1);
        assert_eq!(f.witness, Exponent::new(vec![1, 1]));
    }

    #[test]
    fn triangle_edge_ideal_is_normal() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert!(is_normal(&tri).unwrap().normal);
    }

    #[test]
    fn facet_scaling_under_powers() {
        let i = ideal(2, &[&[3, 0], &[0, 5]]);
        let base = NewtonPolyhedron::of(&i).unwrap();
        for n in 2u32..=3 {
            let pow = i.power(n).unwrap();
            let scaled: Vec<Facet> = base
                .facets()
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: &f.offset * Int::from(n),
                })
                .collect();
            let direct = NewtonPolyhedron::of(&pow).unwrap();
            assert_eq!(direct.facets(), &scaled[..]);
        }
    }
}
