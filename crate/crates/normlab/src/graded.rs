//! Degreewise exact linear algebra for homogeneous ideals in a standard
//! graded polynomial ring: graded slices, general reductions, reduction
//! numbers, quotient lengths, colon by powers of the maximal ideal, and the
//! one-step colon description of the integral closure.
//!
//! Ideal equality questions are decided slice by slice. For equigenerated
//! ideals a single degree suffices: if every generator of both sides lives
//! in degree `(r+1)δ`, the ideals agree iff those slices agree, because all
//! higher slices are `R_1`-multiples of lower ones. The same persistence
//! argument terminates every length computation here: once the numerator
//! and denominator slices coincide in a degree at or above all generator
//! degrees, they coincide forever after.

use std::collections::BTreeMap;

use num_traits::FromPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{for_each_degree_vector, MonomialIdeal};
use crate::matrix::{Mat, RowSpace};
use crate::newton::closure_of_power;
use crate::ring::Exponent;
use crate::rng::SplitMix64;
use crate::scalar::Scalar;
use crate::Q;

/// A homogeneous polynomial, stored as a sparse map from exponent vectors to
/// coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousForm<F = Q> {
    degree: u64,
    coeffs: BTreeMap<Exponent, F>,
}

/// Convenient alias for the default exact instantiation.
pub type Form = HomogeneousForm<Q>;

impl<F: Scalar> HomogeneousForm<F> {
    pub fn from_monomial(exp: Exponent) -> Self {
        let degree = exp.total();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(exp, F::one());
        Self { degree, coeffs }
    }

    /// Linear combination of monomials; all exponents must share one total
    /// degree.
    pub fn from_combination(terms: Vec<(Exponent, F)>) -> Result<Self> {
        let mut coeffs: BTreeMap<Exponent, F> = BTreeMap::new();
        let mut degree: Option<u64> = None;
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            match degree {
                None => degree = Some(e.total()),
                Some(dg) if dg != e.total() => return Err(Error::NotEquigenerated(dg, e.total())),
                _ => {}
            }
            let entry = coeffs.entry(e).or_insert_with(F::zero);
            *entry = entry.clone() + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        let degree = degree.unwrap_or(0);
        Ok(Self { degree, coeffs })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.coeffs.iter()
    }

    pub fn mul_monomial(&self, m: &Exponent) -> Self {
        Self {
            degree: self.degree + m.total(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e.add(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<Exponent, F> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = ea.add(eb);
                let entry = coeffs.entry(e).or_insert_with(F::zero);
                *entry = entry.clone() + ca.clone() * cb.clone();
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self {
            degree: self.degree + other.degree,
            coeffs,
        }
    }

    fn to_vector(&self, index: &BTreeMap<Exponent, usize>, len: usize) -> Vec<F> {
        let mut v = vec![F::zero(); len];
        for (e, c) in &self.coeffs {
            let idx = *index.get(e).expect("term of the stated degree");
            v[idx] = c.clone();
        }
        v
    }
}

/// Generators of a monomial ideal as forms.
pub fn forms_of_ideal(ideal: &MonomialIdeal) -> Vec<Form> {
    ideal
        .generators()
        .iter()
        .map(|g| Form::from_monomial(g.clone()))
        .collect()
}

/// Lexicographically sorted monomial basis of `R_e` in `d` variables
/// (standard grading).
pub fn monomials_of_degree(d: usize, e: u64) -> Vec<Exponent> {
    let weights = vec![1u64; d];
    let mut out = Vec::new();
    for_each_degree_vector(&weights, e, &mut |p| out.push(p.clone()));
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

fn monomial_index(basis: &[Exponent]) -> BTreeMap<Exponent, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect()
}

/// A subspace of one graded piece `R_e`, held as a reduced row-echelon
/// basis over the lexicographic monomial basis; equality of subspaces is
/// structural equality.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedSubspace<F = Q> {
    degree: u64,
    ring_dim: usize,
    space: RowSpace<F>,
}

impl<F: Scalar> GradedSubspace<F> {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn contains_form(&self, f: &HomogeneousForm<F>) -> bool {
        if f.is_zero() {
            return true;
        }
        if f.degree() != self.degree {
            return false;
        }
        let basis = monomials_of_degree(self.ring_dim, self.degree);
        let index = monomial_index(&basis);
        self.space.contains(&f.to_vector(&index, basis.len()))
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        self.space.contains_space(&other.space)
    }
}

/// Basis of the degree-`e` slice of the ideal generated by `gens` in `d`
/// variables: the span of all monomial multiples landing in degree `e`.
pub fn ideal_slice<F: Scalar>(gens: &[HomogeneousForm<F>], d: usize, e: u64) -> GradedSubspace<F> {
    let basis = monomials_of_degree(d, e);
    let index = monomial_index(&basis);
    let mut rows: Vec<Vec<F>> = Vec::new();
    for g in gens {
        if g.is_zero() || g.degree() > e {
            continue;
        }
        for_each_degree_vector(&vec![1u64; d], e - g.degree(), &mut |m| {
            rows.push(g.mul_monomial(m).to_vector(&index, basis.len()));
        });
    }
    GradedSubspace {
        degree: e,
        ring_dim: d,
        space: RowSpace::from_rows(basis.len(), rows),
    }
}

/// `(J : m^k)_e` — the degree-`e` forms whose products with every degree-`k`
/// monomial land in `J`; `k = 0` returns the slice of `J` itself.
pub fn colon_by_m_power<F: Scalar>(
    j_gens: &[HomogeneousForm<F>],
    d: usize,
    k: u64,
    e: u64,
) -> GradedSubspace<F> {
    if k == 0 {
        return ideal_slice(j_gens, d, e);
    }
    let target = ideal_slice(j_gens, d, e + k);
    let basis_e = monomials_of_degree(d, e);
    let basis_ek = monomials_of_degree(d, e + k);
    let index_ek = monomial_index(&basis_ek);

    // Stack, for every degree-k monomial u, the residuals of u * m modulo
    // J_{e+k}; the kernel of the stack is the colon slice.
    let mut constraint_rows: Vec<Vec<F>> = Vec::new();
    for_each_degree_vector(&vec![1u64; d], k, &mut |u| {
        let mut residuals: Vec<Vec<F>> = Vec::with_capacity(basis_e.len());
        for m in &basis_e {
            let prod = m.add(u);
            let mut v = vec![F::zero(); basis_ek.len()];
            v[*index_ek.get(&prod).expect("product has degree e+k")] = F::one();
            residuals.push(target.space.reduce(&v));
        }
        for t in 0..basis_ek.len() {
            if residuals.iter().any(|r| !r[t].is_zero()) {
                constraint_rows.push(residuals.iter().map(|r| r[t].clone()).collect());
            }
        }
    });
    let solutions = if constraint_rows.is_empty() {
        (0..basis_e.len())
            .map(|i| {
                let mut r = vec![F::zero(); basis_e.len()];
                r[i] = F::one();
                r
            })
            .collect()
    } else {
        Mat::from_rows(constraint_rows).kernel()
    };
    GradedSubspace {
        degree: e,
        ring_dim: d,
        space: RowSpace::from_rows(basis_e.len(), solutions),
    }
}

fn max_degree(forms: &[Form]) -> u64 {
    forms.iter().map(HomogeneousForm::degree).max().unwrap_or(0)
}

fn min_degree(forms: &[Form]) -> Option<u64> {
    forms
        .iter()
        .filter(|f| !f.is_zero())
        .map(HomogeneousForm::degree)
        .min()
}

const DEGREE_CAP: u64 = 60;

/// `λ(num / den)` for homogeneous ideals with `den ⊆ num`, by summing slice
/// codimensions until the slices agree at a degree above both generator
/// ranges (equality then persists, which is asserted one degree further).
pub fn quotient_length(num: &[Form], den: &[Form], d: usize) -> Result<u64> {
    let start = match (min_degree(num), min_degree(den)) {
        (None, None) => return Ok(0),
        (a, b) => a.into_iter().chain(b).min().expect("some side is nonzero"),
    };
    let stable_from = max_degree(num).max(max_degree(den));
    let mut total = 0u64;
    let mut e = start;
    while e <= DEGREE_CAP {
        let num_s = ideal_slice(num, d, e);
        let den_s = ideal_slice(den, d, e);
        if !num_s.contains_space(&den_s) {
            return Err(Error::InclusionViolated { degree: e });
        }
        total += (num_s.dim() - den_s.dim()) as u64;
        if e >= stable_from && num_s.dim() == den_s.dim() {
            // persistence self-check
            let num_next = ideal_slice(num, d, e + 1);
            let den_next = ideal_slice(den, d, e + 1);
            if num_next.dim() != den_next.dim() {
                return Err(Error::Internal(format!(
                    "slice persistence violated between degrees {e} and {}",
                    e + 1
                )));
            }
            return Ok(total);
        }
        e += 1;
    }
    Err(Error::NonFiniteQuotient { cap: DEGREE_CAP })
}

/// `λ(R/J)` for a homogeneous ideal, degreewise; errors when the quotient is
/// not finite within the degree cap.
pub fn colength_of_forms(forms: &[Form], d: usize) -> Result<u64> {
    let stable_from = max_degree(forms);
    let mut total = 0u64;
    for e in 0..=DEGREE_CAP {
        let full = monomials_of_degree(d, e).len();
        let s = ideal_slice(forms, d, e);
        total += (full - s.dim()) as u64;
        if e >= stable_from && s.dim() == full {
            return Ok(total);
        }
    }
    Err(Error::NonFiniteQuotient { cap: DEGREE_CAP })
}

/// All `n`-fold products of the given forms (combinations with repetition);
/// `n = 0` yields the single constant form 1.
pub fn power_products(forms: &[Form], n: u32) -> Vec<Form> {
    fn rec(forms: &[Form], n: u32, from: usize, acc: &Form, out: &mut Vec<Form>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for i in from..forms.len() {
            rec(forms, n - 1, i, &acc.mul(&forms[i]), out);
        }
    }
    let d = forms
        .first()
        .and_then(|f| f.terms().next().map(|(e, _)| e.len()))
        .unwrap_or(0);
    let one = Form::from_monomial(Exponent::zero(d));
    let mut out = Vec::new();
    rec(forms, n, 0, &one, &mut out);
    out
}

/// Least `r` with `(I^{r+1})_{(r+1)δ} = (J · I^r)_{(r+1)δ}`, which for
/// equigenerated `J ⊆ I` is ideal equality `I^{r+1} = J I^r`.
pub fn reduction_number(ideal: &MonomialIdeal, j_forms: &[Form], bound: u32) -> Result<u32> {
    let delta = ideal.equigenerated_degree()?;
    if !ideal.ring().is_standard_graded() {
        return Err(Error::NonStandardGrading);
    }
    for f in j_forms {
        if !f.is_zero() && f.degree() != delta {
            return Err(Error::NotEquigenerated(delta, f.degree()));
        }
    }
    let d = ideal.dim();
    // J must sit inside I in degree delta
    let i_slice = ideal_slice(&forms_of_ideal(ideal), d, delta);
    for f in j_forms {
        if !i_slice.contains_form(f) {
            return Err(Error::InclusionViolated { degree: delta });
        }
    }
    let mut power = MonomialIdeal::unit(ideal.ring().clone()); // I^r
    for r in 0..=bound {
        let next = power.multiply(ideal)?; // I^{r+1}
        let e = delta * (r as u64 + 1);
        let lhs = ideal_slice(&forms_of_ideal(&next), d, e);
        let mut rhs_gens: Vec<Form> = Vec::new();
        for f in j_forms {
            for m in power.generators() {
                rhs_gens.push(f.mul_monomial(m));
            }
        }
        let rhs = ideal_slice(&rhs_gens, d, e);
        if !lhs.contains_space(&rhs) {
            return Err(Error::InclusionViolated { degree: e });
        }
        if lhs.dim() == rhs.dim() {
            return Ok(r);
        }
        power = next;
    }
    Err(Error::NoReductionWithinBound { bound })
}

/// Which checks a drawn reduction passed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionValidation {
    /// Slice-equality reduction number found during validation.
    pub reduction_number: u32,
    /// `λ(R/J)`, checked against the expected multiplicity when supplied.
    pub colength: Option<u64>,
    /// True when the input was not equigenerated and `J = I` itself was the
    /// parameter-ideal fallback.
    pub parameter_fallback: bool,
}

/// A validated general reduction: `dim R` forms with seeded pseudo-random
/// integer coefficients in the generators of the input ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralReduction {
    pub seed: u64,
    pub forms: Vec<Form>,
    pub validation: ReductionValidation,
}

const COEFF_BOUND: i64 = 100;
const DRAW_ATTEMPTS: u32 = 8;

/// Draws `dim R` general degree-δ combinations of the generators and
/// validates them: a reduction number `r ≤ dim R` must exist by slice
/// equality, and when the expected multiplicity is supplied, `λ(R/J)` must
/// equal it. Failed draws retry with successive seeds.
///
/// Non-equigenerated ideals are accepted only when `ν(I) = dim R`: there the
/// generators themselves are the homogeneous minimal reduction (`J = I`).
pub fn draw_reduction(
    ideal: &MonomialIdeal,
    seed: u64,
    expected_colength: Option<u64>,
) -> Result<GeneralReduction> {
    if !ideal.ring().is_standard_graded() {
        return Err(Error::NonStandardGrading);
    }
    if !ideal.is_proper() {
        return Err(if ideal.is_zero() {
            Error::ZeroIdeal
        } else {
            Error::UnitIdeal
        });
    }
    let d = ideal.dim();

    if ideal.equigenerated_degree().is_err() {
        if ideal.num_generators() != d {
            return Err(Error::Unsupported(
                "non-equigenerated ideal with ν(I) != dim R has no homogeneous reduction".into(),
            ));
        }
        let forms = forms_of_ideal(ideal);
        let colength = match expected_colength {
            Some(want) => {
                let got = colength_of_forms(&forms, d)?;
                if got != want {
                    return Err(Error::Internal(format!(
                        "λ(R/I) = {got} disagrees with the expected multiplicity {want}"
                    )));
                }
                Some(got)
            }
            None => None,
        };
        return Ok(GeneralReduction {
            seed,
            forms,
            validation: ReductionValidation {
                reduction_number: 0,
                colength,
                parameter_fallback: true,
            },
        });
    }

    let gens = ideal.generators();
    let mut seeds_tried = Vec::new();
    for attempt in 0..DRAW_ATTEMPTS {
        let attempt_seed = seed.wrapping_add(attempt as u64);
        seeds_tried.push(attempt_seed);
        let mut rng = SplitMix64::new(attempt_seed);
        let forms: Vec<Form> = (0..d)
            .map(|_| {
                Form::from_combination(
                    gens.iter()
                        .map(|g| {
                            (
                                g.clone(),
                                Q::from_i64(rng.coeff(COEFF_BOUND)).expect("i64 embeds in Q"),
                            )
                        })
                        .collect(),
                )
                .expect("generators share one degree")
            })
            .collect();
        if forms.iter().any(HomogeneousForm::is_zero) {
            continue;
        }
        let Ok(r) = reduction_number(ideal, &forms, d as u32) else {
            continue;
        };
        let colength = if let Some(want) = expected_colength {
            match colength_of_forms(&forms, d) {
                Ok(got) if got == want => Some(got),
                _ => continue,
            }
        } else {
            None
        };
        return Ok(GeneralReduction {
            seed: attempt_seed,
            forms,
            validation: ReductionValidation {
                reduction_number: r,
                colength,
                parameter_fallback: false,
            },
        });
    }
    Err(Error::ReductionDrawFailed {
        attempts: DRAW_ATTEMPTS,
        seeds: seeds_tried,
    })
}

/// Hypothesis screening outcome for the colon-formula check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "detail")]
pub enum HypothesisStatus {
    /// m-primary input: the side conditions of the colon description are
    /// vacuous, so the run is fully rigorous.
    MPrimary,
    /// Reduced one-dimensional input; hypotheses partially verified.
    ReducedOneDimensional,
    /// Neither screen applies; the run is labeled, not aborted.
    Unverified(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum ColonVerdict {
    Equal,
    Mismatch {
        degree: u64,
        colon_dim: usize,
        closure_dim: usize,
    },
}

/// Result of the one-step normalization check `closure(I^n) = J^n : m^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ColonReport {
    pub height: u32,
    pub delta: u64,
    pub sigma: u64,
    /// Raw exponent `gδ - δ - σ + 1`; nonpositive values collapse the colon
    /// to `J^n` itself (`m^0 = R`).
    pub exponent_raw: i64,
    pub exponent: u64,
    pub seed: u64,
    pub hypotheses: HypothesisStatus,
    pub degrees_checked: u64,
    pub verdict: ColonVerdict,
}

/// Verifies degreewise that the integral closure of `I^n` equals
/// `J^n : m^(gδ-δ-σ+1)` for a drawn general reduction `J` of the
/// equigenerated ideal `I`.
///
/// Slices are compared for every degree up to `max(D, nδ) + δ + 1`, where
/// `D` is the largest generator degree of the closure; the verdict is
/// "verified up to" that cap.
pub fn verify_colon_formula(
    ideal: &MonomialIdeal,
    n: u32,
    seed: u64,
    expected_multiplicity: Option<u64>,
) -> Result<ColonReport> {
    if n < 1 {
        return Err(Error::NonPositivePower);
    }
    if !ideal.ring().is_standard_graded() {
        return Err(Error::NonStandardGrading);
    }
    let d = ideal.dim();
    let delta = ideal.equigenerated_degree()?;
    let sigma = ideal.ring().weight_sum();
    let m_primary = ideal.is_m_primary();
    let height = if m_primary { d as u32 } else { ideal.height()? };

    let hypotheses = if m_primary {
        HypothesisStatus::MPrimary
    } else if ideal.is_squarefree() && d as u32 - height == 1 {
        HypothesisStatus::ReducedOneDimensional
    } else {
        HypothesisStatus::Unverified(format!(
            "height {height}, dimension {}, not screened",
            d as u32 - height
        ))
    };

    let exponent_raw = height as i64 * delta as i64 - delta as i64 - sigma as i64 + 1;
    let exponent = exponent_raw.max(0) as u64;

    let reduction = draw_reduction(
        ideal,
        seed,
        if m_primary { expected_multiplicity } else { None },
    )?;
    let jn = power_products(&reduction.forms, n);

    let closure = closure_of_power(ideal, n)?;
    let closure_forms = forms_of_ideal(&closure);
    let big_d = closure.max_generator_degree().max(delta * n as u64);
    let cap = big_d + delta + 1;

    let mut verdict = ColonVerdict::Equal;
    for e in 0..=cap {
        let colon = colon_by_m_power(&jn, d, exponent, e);
        let slice = ideal_slice(&closure_forms, d, e);
        if colon != slice {
            verdict = ColonVerdict::Mismatch {
                degree: e,
                colon_dim: colon.dim(),
                closure_dim: slice.dim(),
            };
            break;
        }
    }
    Ok(ColonReport {
        height,
        delta,
        sigma,
        exponent_raw,
        exponent,
        seed: reduction.seed,
        hypotheses,
        degrees_checked: cap,
        verdict,
    })
}
