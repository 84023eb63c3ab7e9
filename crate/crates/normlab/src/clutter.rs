//! Clutters (antichain hypergraphs), their edge ideals, minimal vertex
//! covers, symbolic powers and the set-covering polyhedron.
//!
//! For a squarefree monomial ideal the minimal primes are exactly the
//! monomial primes of the minimal vertex covers, and the n-th symbolic power
//! is the intersection of their n-th powers. Integrality of the set-covering
//! polyhedron `Q(A) = {x >= 0 : xA >= 1}` is decided by exact vertex
//! enumeration over basis subsets of the constraint rows.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::matrix::Mat;
use crate::newton::{closure_with_polyhedron, for_each_combination, NewtonPolyhedron};
use crate::ring::{Exponent, PolyRing};
use crate::Q;

/// A clutter on vertices `1..=d` (stored zero-based): a set of incomparable
/// edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clutter {
    vertices: usize,
    edges: Vec<Vec<usize>>,
}

/// 0/1 vertex-edge incidence matrix; columns are the edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<u8>>,
}

impl Clutter {
    /// Builds a clutter from 1-based edges, deduplicating and dropping
    /// edges that contain another edge. The flag reports whether the input
    /// was not already an antichain.
    pub fn new(vertices: usize, edges_one_based: Vec<Vec<usize>>) -> Result<(Self, bool)> {
        if vertices == 0 {
            return Err(Error::Parse("clutter needs at least one vertex".into()));
        }
        if vertices > 20 {
            return Err(Error::Unsupported(
                "clutter operations limited to 20 vertices".into(),
            ));
        }
        let input_count = edges_one_based.len();
        let mut edges: Vec<Vec<usize>> = Vec::new();
        for e in edges_one_based {
            if e.is_empty() {
                return Err(Error::Parse("empty edge".into()));
            }
            let mut edge: Vec<usize> = Vec::with_capacity(e.len());
            for v in e {
                if v == 0 || v > vertices {
                    return Err(Error::Parse(format!(
                        "vertex {v} out of range 1..={vertices}"
                    )));
                }
                edge.push(v - 1);
            }
            edge.sort_unstable();
            edge.dedup();
            edges.push(edge);
        }
        // keep only inclusion-minimal edges
        edges.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut minimal: Vec<Vec<usize>> = Vec::new();
        for e in edges {
            if !minimal
                .iter()
                .any(|kept| kept.iter().all(|v| e.binary_search(v).is_ok()))
            {
                minimal.push(e);
            }
        }
        let modified = minimal.len() != input_count;
        minimal.sort();
        Ok((
            Self {
                vertices,
                edges: minimal,
            },
            modified,
        ))
    }

    /// Rebuilds the clutter underlying a squarefree monomial ideal.
    pub fn from_squarefree_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::Unsupported(
                "clutter operations need a squarefree ideal".into(),
            ));
        }
        if !ideal.is_proper() {
            return Err(Error::Unsupported(
                "clutter operations need a proper nonzero ideal".into(),
            ));
        }
        let edges = ideal
            .generators()
            .iter()
            .map(|g| g.support().iter().map(|&v| v + 1).collect())
            .collect();
        Ok(Self::new(ideal.dim(), edges)?.0)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges with 1-based vertex labels.
    pub fn edges_one_based(&self) -> Vec<Vec<usize>> {
        self.edges
            .iter()
            .map(|e| e.iter().map(|&v| v + 1).collect())
            .collect()
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let mut data = vec![vec![0u8; self.edges.len()]; self.vertices];
        for (c, e) in self.edges.iter().enumerate() {
            for &v in e {
                data[v][c] = 1;
            }
        }
        IncidenceMatrix {
            rows: self.vertices,
            cols: self.edges.len(),
            data,
        }
    }

    /// The squarefree edge ideal, one generator per edge.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let ring = PolyRing::standard(self.vertices);
        let gens = self
            .edges
            .iter()
            .map(|e| {
                let mut v = vec![0u64; self.vertices];
                for &i in e {
                    v[i] = 1;
                }
                Exponent::new(v)
            })
            .collect();
        MonomialIdeal::new(ring, gens).expect("edge exponents match the ring")
    }

    /// All inclusion-minimal vertex covers, 1-based and canonically sorted.
    /// These are the supports of the minimal primes of the edge ideal.
    pub fn minimal_vertex_covers(&self) -> Vec<Vec<usize>> {
        let d = self.vertices;
        let masks: Vec<u32> = self
            .edges
            .iter()
            .map(|e| e.iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect();
        let mut covers: Vec<u32> = Vec::new();
        for mask in 0u32..(1 << d) {
            if masks.iter().all(|&e| e & mask != 0) {
                covers.push(mask);
            }
        }
        let mut minimal: Vec<Vec<usize>> = covers
            .iter()
            .filter(|&&c| !covers.iter().any(|&o| o != c && o & c == o))
            .map(|&c| (0..d).filter(|&v| c & (1 << v) != 0).map(|v| v + 1).collect())
            .collect();
        minimal.sort_by(|a: &Vec<usize>, b: &Vec<usize>| {
            a.len().cmp(&b.len()).then_with(|| a.cmp(b))
        });
        minimal
    }

    /// The n-th symbolic power: intersection of the n-th powers of the
    /// minimal cover primes.
    pub fn symbolic_power(&self, n: u32) -> Result<MonomialIdeal> {
        if n < 1 {
            return Err(Error::NonPositivePower);
        }
        let ring = PolyRing::standard(self.vertices);
        let covers = self.minimal_vertex_covers();
        let mut acc: Option<MonomialIdeal> = None;
        for cover in &covers {
            let prime_gens: Vec<Exponent> = cover
                .iter()
                .map(|&v| Exponent::pure(self.vertices, v - 1, 1))
                .collect();
            let prime = MonomialIdeal::new(ring.clone(), prime_gens)?;
            let power = prime.power(n)?;
            acc = Some(match acc {
                None => power,
                Some(cur) => cur.intersect(&power)?,
            });
        }
        acc.ok_or_else(|| Error::DegenerateSystem("clutter has no edges".into()))
    }

    /// True iff every vertex of `{x >= 0 : xA >= 1}` is integral.
    pub fn q_polyhedron_integral(&self) -> Result<bool> {
        Ok(self
            .q_polyhedron_vertices()?
            .iter()
            .all(|v| v.iter().all(|c| c.denom().is_one())))
    }

    /// All vertices of the set-covering polyhedron, deduplicated and sorted.
    ///
    /// Every d-subset of the m + d constraint rows is solved as an equality
    /// system; unique feasible solutions are the vertices.
    pub fn q_polyhedron_vertices(&self) -> Result<Vec<Vec<Q>>> {
        let d = self.vertices;
        let m = self.edges.len();
        if m == 0 {
            return Err(Error::DegenerateSystem(
                "set-covering polyhedron of an edgeless clutter".into(),
            ));
        }
        // rows 0..m: <chi_e, x> >= 1; rows m..m+d: x_j >= 0
        let row = |idx: usize| -> (Vec<Q>, Q) {
            if idx < m {
                let mut r = vec![Q::zero(); d];
                for &v in &self.edges[idx] {
                    r[v] = Q::one();
                }
                (r, Q::one())
            } else {
                let mut r = vec![Q::zero(); d];
                r[idx - m] = Q::one();
                (r, Q::zero())
            }
        };
        let mut vertices: Vec<Vec<Q>> = Vec::new();
        for_each_combination(m + d, d, &mut |subset| {
            let mut mat_rows = Vec::with_capacity(d);
            let mut rhs = Vec::with_capacity(d);
            for &idx in subset {
                let (r, b) = row(idx);
                mat_rows.push(r);
                rhs.push(b);
            }
            let Some(x) = Mat::from_rows(mat_rows).solve_unique(&rhs) else {
                return;
            };
            let feasible = (0..m + d).all(|idx| {
                let (r, b) = row(idx);
                let lhs = r
                    .iter()
                    .zip(&x)
                    .map(|(a, xi)| a.clone() * xi.clone())
                    .fold(Q::zero(), |acc, t| acc + t);
                lhs >= b
            });
            if feasible && !vertices.contains(&x) {
                vertices.push(x);
            }
        });
        if vertices.is_empty() {
            return Err(Error::DegenerateSystem(
                "no vertices found for the set-covering polyhedron".into(),
            ));
        }
        vertices.sort_by(|a, b| a.partial_cmp(b).expect("rationals are totally ordered"));
        Ok(vertices)
    }

    /// Per-power comparison of the integral closure of `I(C)^n` with the
    /// n-th symbolic power.
    pub fn compare_symbolic_closure(&self, nmax: u32) -> Result<Vec<SymbolicComparison>> {
        let ideal = self.edge_ideal();
        let np = NewtonPolyhedron::of(&ideal)?;
        let mut out = Vec::new();
        for n in 1..=nmax {
            let closure = closure_with_polyhedron(&ideal, &np, n)?;
            let symbolic = self.symbolic_power(n)?;
            let closure_not_symbolic: Vec<Exponent> = closure
                .generators()
                .iter()
                .filter(|g| !symbolic.contains(g))
                .cloned()
                .collect();
            let symbolic_not_closure: Vec<Exponent> = symbolic
                .generators()
                .iter()
                .filter(|g| !closure.contains(g))
                .cloned()
                .collect();
            out.push(SymbolicComparison {
                power: n,
                equal: closure_not_symbolic.is_empty() && symbolic_not_closure.is_empty(),
                closure_not_symbolic,
                symbolic_not_closure,
            });
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicComparison {
    pub power: u32,
    pub equal: bool,
    /// Generators of the closure outside the symbolic power.
    pub closure_not_symbolic: Vec<Exponent>,
    /// Generators of the symbolic power outside the closure.
    pub symbolic_not_closure: Vec<Exponent>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Clutter {
        Clutter::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]])
            .unwrap()
            .0
    }

    fn paper_clutter() -> Clutter {
        Clutter::new(
            6,
            vec![vec![1, 2, 5], vec![1, 3, 4], vec![2, 3, 6], vec![4, 5, 6]],
        )
        .unwrap()
        .0
    }

    #[test]
    fn edge_ideal_of_triangle() {
        let i = triangle().edge_ideal();
        let gens: Vec<Vec<u64>> = i.generators().iter().map(|g| g.entries().to_vec()).collect();
        assert_eq!(gens, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn edge_ideal_single_vertex_edge() {
        let c = Clutter::new(1, vec![vec![1]]).unwrap().0;
        let i = c.edge_ideal();
        assert_eq!(i.generators(), &[Exponent::new(vec![1])]);
        assert_eq!(c.minimal_vertex_covers(), vec![vec![1]]);
    }

    #[test]
    fn non_antichain_edges_are_minimalized() {
        let (c, modified) = Clutter::new(3, vec![vec![1], vec![1, 2]]).unwrap();
        assert!(modified);
        assert_eq!(c.edges_one_based(), vec![vec![1]]);
    }

    #[test]
    fn covers_of_triangle() {
        assert_eq!(
            triangle().minimal_vertex_covers(),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn incidence_matrix_columns_are_edges() {
        let m = triangle().incidence_matrix();
        assert_eq!(m.rows, 3);
        assert_eq!(m.cols, 3);
        // edges sorted: {1,2}, {1,3}, {2,3}
        assert_eq!(m.data, vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
    }

    #[test]
    fn symbolic_power_one_is_edge_ideal() {
        let c = triangle();
        assert_eq!(c.symbolic_power(1).unwrap(), c.edge_ideal());
        let p = paper_clutter();
        assert_eq!(p.symbolic_power(1).unwrap(), p.edge_ideal());
    }

    #[test]
    fn triangle_second_symbolic_power_contains_xyz() {
        let s2 = triangle().symbolic_power(2).unwrap();
        assert!(s2.contains(&Exponent::new(vec![1, 1, 1])));
        let i2 = triangle().edge_ideal().power(2).unwrap();
        assert!(i2.generators().iter().all(|g| s2.contains(g)));
    }

    #[test]
    fn symbolic_powers_nest() {
        let c = triangle();
        let i = c.edge_ideal();
        let s1 = c.symbolic_power(1).unwrap();
        let s2 = c.symbolic_power(2).unwrap();
        let s3 = c.symbolic_power(3).unwrap();
        assert!(s1.contains_ideal(&s2));
        assert!(s2.contains_ideal(&s3));
        // ordinary powers sit inside symbolic powers
        assert!(s2.contains_ideal(&i.power(2).unwrap()));
        assert!(s3.contains_ideal(&i.power(3).unwrap()));
    }

    #[test]
    fn q_polyhedron_triangle_fractional() {
        let c = triangle();
        assert!(!c.q_polyhedron_integral().unwrap());
        let half = Q::new(1.into(), 2.into());
        let verts = c.q_polyhedron_vertices().unwrap();
        assert!(verts.contains(&vec![half.clone(), half.clone(), half]));
    }

    #[test]
    fn q_polyhedron_single_edge_integral() {
        let c = Clutter::new(1, vec![vec![1]]).unwrap().0;
        assert!(c.q_polyhedron_integral().unwrap());
    }

    #[test]
    fn q_polyhedron_errors_without_edges() {
        let c = Clutter::new(2, vec![]).unwrap().0;
        assert!(matches!(
            c.q_polyhedron_integral(),
            Err(Error::DegenerateSystem(_))
        ));
    }

    #[test]
    fn triangle_closure_differs_from_symbolic() {
        let cmp = triangle().compare_symbolic_closure(2).unwrap();
        assert!(cmp[0].equal);
        assert!(!cmp[1].equal);
        assert_eq!(
            cmp[1].symbolic_not_closure,
            vec![Exponent::new(vec![1, 1, 1])]
        );
        assert!(cmp[1].closure_not_symbolic.is_empty());
    }

    #[test]
    fn squarefree_ideal_round_trip() {
        let c = paper_clutter();
        let back = Clutter::from_squarefree_ideal(&c.edge_ideal()).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn cover_prime_duality_small() {
        // membership in the edge ideal == membership in every cover prime
        let c = triangle();
        let i = c.edge_ideal();
        let ring = i.ring().clone();
        let primes: Vec<MonomialIdeal> = c
            .minimal_vertex_covers()
            .iter()
            .map(|cover| {
                MonomialIdeal::new(
                    ring.clone(),
                    cover.iter().map(|&v| Exponent::pure(3, v - 1, 1)).collect(),
                )
                .unwrap()
            })
            .collect();
        crate::ideal::for_each_box_point(&[3, 3, 3], &mut |p| {
            let in_ideal = i.contains(p);
            let in_all = primes.iter().all(|q| q.contains(p));
            assert_eq!(in_ideal, in_all, "duality failed at {p}");
        });
    }
}
