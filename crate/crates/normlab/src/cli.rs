//! Command-line front end: JSON input parsing, dispatch to the computation
//! modules, and deterministic text/JSON reports with the exit-code contract
//! (0 success, 1 input or usage error, 2 falsification alert).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::clutter::{Clutter, IncidenceMatrix};
use crate::error::{Error, Result};
use crate::graded::{verify_colon_formula, ColonVerdict, HypothesisStatus};
use crate::hilbert::{
    filtration_report, generator_bound_check, sally_cross_check, CheckResult, FiltrationReport,
    GeneratorBoundReport, SallyCrossCheck,
};
use crate::ideal::MonomialIdeal;
use crate::indices::{indices_report, BoundCheck};
use crate::newton::{closure_by_definition, closure_of_power, is_normal};
use crate::ring::{Exponent, PolyRing};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

const MAX_POWER: u32 = 10;
const MAX_TABLE: usize = 25;
const MAX_DIM: usize = 8;
const ORACLE_KMAX: u32 = 12;

/// Exit code signalling that a guaranteed identity or bound failed.
pub const EXIT_FALSIFIED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Closure,
    Normal,
    Indices,
    Hilbert,
    Sally,
    Clutter,
    ColonVerify,
}

/// A fully specified run: command, input path and bounded options.
#[derive(Debug, Clone)]
pub struct JobSpec {
    pub command: CommandKind,
    pub input: PathBuf,
    pub power: Option<u32>,
    pub table_length: Option<usize>,
    pub seed: u64,
    pub json: bool,
    pub oracle: bool,
    pub no_banner: bool,
}

#[derive(Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub warnings: Vec<String>,
}

// ---------------------------------------------------------------------------
// input parsing

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InputFile {
    ring: Option<RingSpec>,
    ideal: Option<IdealSpec>,
    vertices: Option<usize>,
    edges: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingSpec {
    variables: Vec<String>,
    weights: Option<Vec<u64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealSpec {
    generators: Option<Vec<Vec<u64>>>,
    monomials: Option<Vec<String>>,
}

#[derive(Debug, Clone)]
pub enum ParsedInput {
    Ideal(MonomialIdeal),
    Clutter(Clutter),
}

/// Reads an ideal or clutter description; non-antichain generator sets are
/// minimalized with a warning.
pub fn parse_input(path: &Path) -> Result<(ParsedInput, Vec<String>)> {
    let text = std::fs::read_to_string(path)?;
    let file: InputFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let mut warnings = Vec::new();

    match (&file.ideal, &file.edges) {
        (Some(_), Some(_)) => {
            return Err(Error::Parse(
                "input has both an ideal and clutter edges; pick one".into(),
            ))
        }
        (None, None) => {
            return Err(Error::Parse(
                "input needs either an \"ideal\" or clutter \"vertices\"/\"edges\"".into(),
            ))
        }
        _ => {}
    }

    if let Some(edges) = file.edges {
        let vertices = file
            .vertices
            .ok_or_else(|| Error::Parse("clutter input needs \"vertices\"".into()))?;
        let (clutter, modified) = Clutter::new(vertices, edges)?;
        if modified {
            warnings.push("edges were not an antichain; redundant edges dropped".into());
        }
        return Ok((ParsedInput::Clutter(clutter), warnings));
    }

    let spec = file.ideal.expect("checked above");
    let ring = match &file.ring {
        Some(rs) => {
            let weights = rs.weights.clone().unwrap_or_else(|| vec![1; rs.variables.len()]);
            PolyRing::new(rs.variables.clone(), weights)?
        }
        None => {
            let d = spec
                .generators
                .as_ref()
                .and_then(|g| g.first())
                .map(Vec::len)
                .ok_or_else(|| {
                    Error::Parse(
                        "cannot infer the ring: give \"ring\" or nonempty \"generators\"".into(),
                    )
                })?;
            PolyRing::standard(d)
        }
    };

    let gens: Vec<Exponent> = match (&spec.generators, &spec.monomials) {
        (Some(_), Some(_)) => {
            return Err(Error::Parse(
                "ideal has both \"generators\" and \"monomials\"; pick one".into(),
            ))
        }
        (Some(vectors), None) => vectors.iter().map(|v| Exponent::new(v.clone())).collect(),
        (None, Some(strings)) => strings
            .iter()
            .map(|s| parse_monomial(s, &ring))
            .collect::<Result<_>>()?,
        (None, None) => Vec::new(),
    };
    let input_sorted = {
        let mut v = gens.clone();
        v.sort();
        v.dedup();
        v
    };
    let ideal = MonomialIdeal::new(ring, gens)?;
    if ideal.generators() != input_sorted.as_slice() {
        warnings.push("generators were not an antichain; minimalized".into());
    }
    Ok((ParsedInput::Ideal(ideal), warnings))
}

/// Grammar: factors separated by `*`, each `variable` or `variable^k`.
fn parse_monomial(s: &str, ring: &Arc<PolyRing>) -> Result<Exponent> {
    let mut entries = vec![0u64; ring.dim()];
    for factor in s.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in monomial '{s}'")));
        }
        if factor == "1" {
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let exp: u64 = e
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent '{e}' in '{s}'")))?;
                if exp == 0 {
                    return Err(Error::Parse(format!(
                        "exponent must be positive in '{s}'"
                    )));
                }
                (n.trim(), exp)
            }
            None => (factor, 1),
        };
        let idx = ring
            .variables()
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable '{name}' in '{s}'")))?;
        entries[idx] += exp;
    }
    Ok(Exponent::new(entries))
}

// ---------------------------------------------------------------------------
// reports

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingOut {
    pub variables: Vec<String>,
    pub weights: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundOut {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub applicable: bool,
}

impl From<BoundCheck> for BoundOut {
    fn from(b: BoundCheck) -> Self {
        Self {
            name: b.name,
            lhs: b.lhs,
            rhs: b.rhs,
            holds: b.holds,
            applicable: b.applicable,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonOut {
    pub power: u32,
    pub equal: bool,
    pub closure_not_symbolic: Vec<Vec<u64>>,
    pub symbolic_not_closure: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreshLevelOut {
    pub level: u32,
    pub generators: Vec<Vec<u64>>,
    pub monomials: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HilbertOut {
    pub ell: u32,
    pub table: Vec<u64>,
    pub h_polynomial: Vec<i64>,
    pub hilbert_coefficients: Vec<i64>,
    pub sally_h_vector: Vec<i64>,
    pub lambda_r_mod_closure: u64,
    pub lambda_closure_over_reduction: u64,
    pub e1_excess: i64,
    pub checks: Vec<CheckResult>,
    pub oracle_checked: Option<bool>,
}

/// The machine-readable report; `command` tags the variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Closure {
        ring: RingOut,
        power: u32,
        generators: Vec<Vec<u64>>,
        monomials: Vec<String>,
        oracle_checked: Option<bool>,
    },
    Normal {
        normal: bool,
        checked_through: u32,
        failing_power: Option<u32>,
        witness: Option<Vec<u64>>,
        witness_monomial: Option<String>,
    },
    Indices {
        s: u32,
        s0: u32,
        ell: u32,
        normal: bool,
        fresh_generators: Vec<FreshLevelOut>,
        bounds: Vec<BoundOut>,
    },
    Hilbert(HilbertOut),
    Sally {
        #[serde(flatten)]
        hilbert: HilbertOut,
        seed: u64,
        generator_bounds: GeneratorBoundReport,
        cross_check: SallyCrossCheck,
    },
    Clutter {
        vertices: usize,
        edges: Vec<Vec<usize>>,
        incidence: IncidenceMatrix,
        edge_ideal: Vec<Vec<u64>>,
        minimal_covers: Vec<Vec<usize>>,
        q_integral: bool,
        comparisons: Vec<ComparisonOut>,
        oracle_checked: Option<bool>,
    },
    ColonVerify {
        height: u32,
        delta: u64,
        sigma: u64,
        exponent_raw: i64,
        exponent: u64,
        seed: u64,
        hypotheses: HypothesisStatus,
        degrees_checked: u64,
        verdict: ColonVerdict,
    },
}

// ---------------------------------------------------------------------------
// running

fn validate(job: &JobSpec) -> Result<()> {
    if let Some(n) = job.power {
        if n == 0 || n > MAX_POWER {
            return Err(Error::Usage(format!("power must be in 1..={MAX_POWER}")));
        }
    }
    if let Some(len) = job.table_length {
        if len > MAX_TABLE {
            return Err(Error::Usage(format!(
                "table length must be at most {MAX_TABLE}"
            )));
        }
    }
    Ok(())
}

fn as_ideal(input: &ParsedInput) -> Result<MonomialIdeal> {
    let ideal = match input {
        ParsedInput::Ideal(i) => i.clone(),
        ParsedInput::Clutter(c) => c.edge_ideal(),
    };
    if ideal.dim() > MAX_DIM {
        return Err(Error::Usage(format!(
            "ideal commands support at most {MAX_DIM} variables"
        )));
    }
    Ok(ideal)
}

fn as_clutter(input: &ParsedInput) -> Result<Clutter> {
    match input {
        ParsedInput::Clutter(c) => Ok(c.clone()),
        ParsedInput::Ideal(i) => Clutter::from_squarefree_ideal(i),
    }
}

fn gens_out(ideal: &MonomialIdeal) -> Vec<Vec<u64>> {
    ideal.generators().iter().map(|g| g.entries().to_vec()).collect()
}

fn ring_out(ideal: &MonomialIdeal) -> RingOut {
    RingOut {
        variables: ideal.ring().variables().to_vec(),
        weights: ideal.ring().weights().to_vec(),
    }
}

/// Executes a job and assembles the rendered report.
pub fn run(job: &JobSpec) -> Result<Outcome> {
    validate(job)?;
    let (input, mut warnings) = parse_input(&job.input)?;
    let (report, mut extra_warnings) = build_report(job, &input)?;
    warnings.append(&mut extra_warnings);

    let falsified = report_falsified(&report);
    let mut stdout = String::new();
    if job.json {
        stdout.push_str(&serde_json::to_string_pretty(&report)?);
        stdout.push('\n');
    } else {
        if !job.no_banner {
            let _ = writeln!(stdout, "normlab {VERSION}");
        }
        stdout.push_str(&render_text(&report));
        if falsified {
            stdout.push_str("FALSIFICATION ALERT: a guaranteed property failed\n");
        }
    }
    Ok(Outcome {
        exit_code: if falsified { EXIT_FALSIFIED } else { 0 },
        stdout,
        warnings,
    })
}

fn build_report(job: &JobSpec, input: &ParsedInput) -> Result<(Report, Vec<String>)> {
    let mut warnings = Vec::new();
    let report = match job.command {
        CommandKind::Closure => {
            let ideal = as_ideal(input)?;
            let n = job.power.unwrap_or(1);
            let closure = closure_of_power(&ideal, n)?;
            let oracle_checked = if job.oracle {
                match oracle_envelope(&ideal, n) {
                    true => Some(closure_by_definition(&ideal, n, ORACLE_KMAX)? == closure),
                    false => {
                        warnings.push(
                            "oracle skipped: outside the validated envelope (d <= 3, exponents <= 6, n <= 2)"
                                .into(),
                        );
                        None
                    }
                }
            } else {
                None
            };
            Report::Closure {
                ring: ring_out(&ideal),
                power: n,
                generators: gens_out(&closure),
                monomials: closure.format_generators(),
                oracle_checked,
            }
        }
        CommandKind::Normal => {
            let ideal = as_ideal(input)?;
            let rep = is_normal(&ideal)?;
            let (failing_power, witness) = match &rep.failure {
                Some(f) => (Some(f.power), Some(f.witness.clone())),
                None => (None, None),
            };
            Report::Normal {
                normal: rep.normal,
                checked_through: rep.checked_through,
                witness_monomial: witness
                    .as_ref()
                    .map(|w| ideal.ring().format_monomial(w)),
                witness: witness.map(|w| w.entries().to_vec()),
                failing_power,
            }
        }
        CommandKind::Indices => {
            let ideal = as_ideal(input)?;
            let rep = indices_report(&ideal)?;
            let fresh_generators: Vec<FreshLevelOut> = rep
                .fresh_generators
                .iter()
                .map(|(&level, gens)| FreshLevelOut {
                    level,
                    generators: gens.iter().map(|g| g.entries().to_vec()).collect(),
                    monomials: gens
                        .iter()
                        .map(|g| ideal.ring().format_monomial(g))
                        .collect(),
                })
                .collect();
            Report::Indices {
                s: rep.s,
                s0: rep.s0,
                ell: rep.ell,
                normal: rep.normality.normal,
                fresh_generators,
                bounds: rep.bounds.into_iter().map(BoundOut::from).collect(),
            }
        }
        CommandKind::Hilbert => {
            let ideal = as_ideal(input)?;
            let rep = filtration_report(&ideal, job.table_length)?;
            let oracle_checked = job
                .oracle
                .then(|| hilbert_oracle(&ideal, &rep))
                .transpose()?;
            Report::Hilbert(hilbert_out(&rep, oracle_checked))
        }
        CommandKind::Sally => {
            let ideal = as_ideal(input)?;
            let rep = filtration_report(&ideal, job.table_length)?;
            let bounds = generator_bound_check(&ideal, &rep, job.seed)?;
            let cross = sally_cross_check(&ideal, &rep, job.seed, 3)?;
            let oracle_checked = job
                .oracle
                .then(|| hilbert_oracle(&ideal, &rep))
                .transpose()?;
            Report::Sally {
                hilbert: hilbert_out(&rep, oracle_checked),
                seed: job.seed,
                generator_bounds: bounds,
                cross_check: cross,
            }
        }
        CommandKind::Clutter => {
            let clutter = as_clutter(input)?;
            let ideal = clutter.edge_ideal();
            if ideal.dim() > MAX_DIM {
                return Err(Error::Usage(format!(
                    "clutter comparisons support at most {MAX_DIM} vertices"
                )));
            }
            let ell = ideal.analytic_spread()?;
            let nmax = job.power.unwrap_or_else(|| ell.min(3));
            if nmax > ell {
                return Err(Error::Usage(format!(
                    "comparison power {nmax} exceeds the analytic spread {ell}"
                )));
            }
            let q_integral = clutter.q_polyhedron_integral()?;
            let comparisons: Vec<ComparisonOut> = clutter
                .compare_symbolic_closure(nmax)?
                .into_iter()
                .map(|c| ComparisonOut {
                    power: c.power,
                    equal: c.equal,
                    closure_not_symbolic: c
                        .closure_not_symbolic
                        .iter()
                        .map(|g| g.entries().to_vec())
                        .collect(),
                    symbolic_not_closure: c
                        .symbolic_not_closure
                        .iter()
                        .map(|g| g.entries().to_vec())
                        .collect(),
                })
                .collect();
            let oracle_checked = if job.oracle {
                Some(clutter_duality_oracle(&clutter))
            } else {
                None
            };
            Report::Clutter {
                vertices: clutter.vertices(),
                edges: clutter.edges_one_based(),
                incidence: clutter.incidence_matrix(),
                edge_ideal: gens_out(&ideal),
                minimal_covers: clutter.minimal_vertex_covers(),
                q_integral,
                comparisons,
                oracle_checked,
            }
        }
        CommandKind::ColonVerify => {
            let ideal = as_ideal(input)?;
            let n = job.power.unwrap_or(1);
            let expected = if ideal.is_m_primary() {
                Some(crate::hilbert::multiplicity(&ideal)?)
            } else {
                None
            };
            let rep = verify_colon_formula(&ideal, n, job.seed, expected)?;
            Report::ColonVerify {
                height: rep.height,
                delta: rep.delta,
                sigma: rep.sigma,
                exponent_raw: rep.exponent_raw,
                exponent: rep.exponent,
                seed: rep.seed,
                hypotheses: rep.hypotheses,
                degrees_checked: rep.degrees_checked,
                verdict: rep.verdict,
            }
        }
    };
    Ok((report, warnings))
}

fn hilbert_out(rep: &FiltrationReport, oracle_checked: Option<bool>) -> HilbertOut {
    HilbertOut {
        ell: rep.ell,
        table: rep.table.clone(),
        h_polynomial: rep.h.clone(),
        hilbert_coefficients: rep.e.clone(),
        sally_h_vector: rep.b.clone(),
        lambda_r_mod_closure: rep.a0,
        lambda_closure_over_reduction: rep.lambda_closure_over_reduction,
        e1_excess: rep.e1_excess,
        checks: rep.checks.clone(),
        oracle_checked,
    }
}

fn oracle_envelope(ideal: &MonomialIdeal, n: u32) -> bool {
    ideal.dim() <= 3 && n <= 2 && ideal.max_exponents().iter().all(|&a| a <= 6)
}

/// Independent length check: each table entry recomputed by summing the
/// degreewise Hilbert slices of the closure.
fn hilbert_oracle(ideal: &MonomialIdeal, rep: &FiltrationReport) -> Result<bool> {
    let np = crate::newton::NewtonPolyhedron::of(ideal)?;
    for (n, &lambda) in rep.table.iter().enumerate().skip(1) {
        let closure = crate::newton::closure_with_polyhedron(ideal, &np, n as u32)?;
        let max_deg = closure.max_generator_degree();
        let mut total = 0;
        let mut e = 0;
        loop {
            let s = closure.hilbert_slice(e);
            if s == 0 && e >= max_deg {
                break;
            }
            total += s;
            e += 1;
        }
        if total != lambda {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive cover/prime duality on a small box.
fn clutter_duality_oracle(clutter: &Clutter) -> bool {
    let d = clutter.vertices();
    let ideal = clutter.edge_ideal();
    let ring = ideal.ring().clone();
    let primes: Vec<MonomialIdeal> = clutter
        .minimal_vertex_covers()
        .iter()
        .map(|cover| {
            MonomialIdeal::new(
                ring.clone(),
                cover.iter().map(|&v| Exponent::pure(d, v - 1, 1)).collect(),
            )
            .expect("cover exponents match")
        })
        .collect();
    let mut ok = true;
    crate::ideal::for_each_box_point(&vec![3u64; d], &mut |p| {
        if ideal.contains(p) != primes.iter().all(|q| q.contains(p)) {
            ok = false;
        }
    });
    ok
}

fn report_falsified(report: &Report) -> bool {
    match report {
        Report::Closure { oracle_checked, .. } => *oracle_checked == Some(false),
        Report::Normal { .. } => false,
        Report::Indices { bounds, .. } => bounds.iter().any(|b| b.applicable && !b.holds),
        Report::Hilbert(h) => hilbert_falsified(h),
        Report::Sally {
            hilbert,
            generator_bounds,
            cross_check,
            ..
        } => {
            hilbert_falsified(hilbert)
                || !cross_check.matches
                || !generator_bounds.bound_e1_holds
                || !generator_bounds.identity_e1_holds
                || !generator_bounds.lambda_matches_derived
        }
        Report::Clutter {
            q_integral,
            comparisons,
            oracle_checked,
            ..
        } => {
            (*q_integral && comparisons.iter().any(|c| !c.equal))
                || *oracle_checked == Some(false)
        }
        Report::ColonVerify { verdict, .. } => !matches!(verdict, ColonVerdict::Equal),
    }
}

fn hilbert_falsified(h: &HilbertOut) -> bool {
    h.checks.iter().any(|c| !c.passed) || h.oracle_checked == Some(false)
}

// ---------------------------------------------------------------------------
// text rendering

fn render_text(report: &Report) -> String {
    let mut s = String::new();
    match report {
        Report::Closure {
            power, monomials, ..
        } => {
            let _ = writeln!(s, "command: closure");
            let _ = writeln!(s, "power: {power}");
            let _ = writeln!(s, "minimal generators ({}):", monomials.len());
            for m in monomials {
                let _ = writeln!(s, "  {m}");
            }
            render_oracle_line(&mut s, report_oracle(report));
        }
        Report::Normal {
            normal,
            checked_through,
            failing_power,
            witness_monomial,
            ..
        } => {
            let _ = writeln!(s, "command: normal");
            let _ = writeln!(s, "normal: {normal}");
            let _ = writeln!(s, "powers checked: 1..={checked_through}");
            if let (Some(n), Some(w)) = (failing_power, witness_monomial) {
                let _ = writeln!(s, "first failure: power {n}, witness {w}");
            }
        }
        Report::Indices {
            s: si,
            s0,
            ell,
            normal,
            fresh_generators,
            bounds,
        } => {
            let _ = writeln!(s, "command: indices");
            let _ = writeln!(s, "s: {si}");
            let _ = writeln!(s, "s0: {s0}");
            let _ = writeln!(s, "ell: {ell}");
            let _ = writeln!(s, "normal: {normal}");
            let _ = writeln!(s, "fresh generators:");
            for fl in fresh_generators {
                let _ = writeln!(s, "  level {}: {}", fl.level, fl.monomials.join(", "));
            }
            let _ = writeln!(s, "bounds:");
            for b in bounds {
                let status = if !b.applicable {
                    "skipped (not m-primary)".to_string()
                } else if b.holds {
                    format!("{} <= {} holds", b.lhs, b.rhs)
                } else {
                    format!("{} <= {} VIOLATED", b.lhs, b.rhs)
                };
                let _ = writeln!(s, "  {}: {status}", b.name);
            }
        }
        Report::Hilbert(h) => {
            let _ = writeln!(s, "command: hilbert");
            render_hilbert(&mut s, h);
        }
        Report::Sally {
            hilbert,
            seed,
            generator_bounds,
            cross_check,
        } => {
            let _ = writeln!(s, "command: sally");
            let _ = writeln!(s, "seed: {seed}");
            render_hilbert(&mut s, hilbert);
            let g = generator_bounds;
            let _ = writeln!(s, "generator count G: {}", g.generator_count);
            let _ = writeln!(
                s,
                "  lambda(F1/J): {} (derived {})",
                g.lambda_f1_over_j,
                if g.lambda_matches_derived { "agrees" } else { "DISAGREES" }
            );
            let _ = writeln!(s, "  step lengths: {:?}", g.step_lengths);
            let _ = writeln!(
                s,
                "  G <= e1: {} <= {} {}",
                g.generator_count,
                g.e1,
                if g.bound_e1_holds { "holds" } else { "VIOLATED" }
            );
            if let Some(e0_holds) = g.bound_e0 {
                let _ = writeln!(
                    s,
                    "  G <= e0 (Sally module zero): {}",
                    if e0_holds { "holds" } else { "VIOLATED" }
                );
            }
            let _ = writeln!(
                s,
                "  bound (c) value lambda(F1/J) + (d-2) lambda(F2/F1 J): {}",
                g.bound_c_value
            );
            let _ = writeln!(
                s,
                "  identity e1 = lambda(F1/J) + g(1): {}",
                if g.identity_e1_holds { "holds" } else { "VIOLATED" }
            );
            let _ = writeln!(
                s,
                "sally cross-check (n <= {}): direct {:?}, expected {:?} -> {}",
                cross_check.direct.len(),
                cross_check.direct,
                cross_check.expected,
                if cross_check.matches { "match" } else { "MISMATCH" }
            );
        }
        Report::Clutter {
            vertices,
            edges,
            edge_ideal: _,
            minimal_covers,
            q_integral,
            comparisons,
            ..
        } => {
            let _ = writeln!(s, "command: clutter");
            let _ = writeln!(s, "vertices: {vertices}");
            let _ = writeln!(s, "edges: {edges:?}");
            let _ = writeln!(s, "minimal vertex covers ({}):", minimal_covers.len());
            for c in minimal_covers {
                let _ = writeln!(s, "  {c:?}");
            }
            let _ = writeln!(s, "Q(A) integral: {q_integral}");
            for c in comparisons {
                let verdict = if c.equal {
                    "equal".to_string()
                } else {
                    format!(
                        "DIFFER (closure-only {:?}, symbolic-only {:?})",
                        c.closure_not_symbolic, c.symbolic_not_closure
                    )
                };
                let _ = writeln!(s, "closure vs symbolic, n = {}: {verdict}", c.power);
            }
            render_oracle_line(&mut s, report_oracle(report));
        }
        Report::ColonVerify {
            height,
            delta,
            sigma,
            exponent_raw,
            exponent,
            seed,
            hypotheses,
            degrees_checked,
            verdict,
        } => {
            let _ = writeln!(s, "command: colon-verify");
            let _ = writeln!(s, "seed: {seed}");
            let _ = writeln!(
                s,
                "height g: {height}, delta: {delta}, sigma: {sigma}"
            );
            let _ = writeln!(
                s,
                "colon exponent k = g*delta - delta - sigma + 1 = {exponent_raw} (used: {exponent})"
            );
            let hyp = match hypotheses {
                HypothesisStatus::MPrimary => "m-primary: hypotheses vacuous, fully verified".into(),
                HypothesisStatus::ReducedOneDimensional => {
                    "reduced and one-dimensional: hypotheses partially verified".to_string()
                }
                HypothesisStatus::Unverified(msg) => format!("hypotheses unverified ({msg})"),
            };
            let _ = writeln!(s, "hypotheses: {hyp}");
            let v = match verdict {
                ColonVerdict::Equal => "equal".to_string(),
                ColonVerdict::Mismatch {
                    degree,
                    colon_dim,
                    closure_dim,
                } => format!(
                    "MISMATCH at degree {degree} (colon dim {colon_dim}, closure dim {closure_dim})"
                ),
            };
            let _ = writeln!(s, "verdict: {v} (degrees checked <= {degrees_checked})");
        }
    }
    s
}

fn report_oracle(report: &Report) -> Option<bool> {
    match report {
        Report::Closure { oracle_checked, .. }
        | Report::Clutter { oracle_checked, .. } => *oracle_checked,
        Report::Hilbert(h) => h.oracle_checked,
        Report::Sally { hilbert, .. } => hilbert.oracle_checked,
        _ => None,
    }
}

fn render_oracle_line(s: &mut String, oracle: Option<bool>) {
    if let Some(ok) = oracle {
        let _ = writeln!(
            s,
            "oracle: {}",
            if ok { "agrees" } else { "DISAGREES" }
        );
    }
}

fn render_hilbert(s: &mut String, h: &HilbertOut) {
    let _ = writeln!(s, "ell: {}", h.ell);
    let _ = writeln!(s, "length table: {:?}", h.table);
    let _ = writeln!(s, "h-polynomial f: {:?}", h.h_polynomial);
    let _ = writeln!(s, "hilbert coefficients e: {:?}", h.hilbert_coefficients);
    let _ = writeln!(s, "sally h-vector b: {:?}", h.sally_h_vector);
    let _ = writeln!(s, "lambda(R/closure(I)): {}", h.lambda_r_mod_closure);
    let _ = writeln!(
        s,
        "lambda(closure(I)/J) = e0 - a0: {}",
        h.lambda_closure_over_reduction
    );
    let _ = writeln!(
        s,
        "e1 - (e0 - a0): {} (reported, never asserted)",
        h.e1_excess
    );
    let _ = writeln!(s, "checks:");
    for c in &h.checks {
        let _ = writeln!(
            s,
            "  {}: {} ({})",
            c.name,
            if c.passed { "pass" } else { "FAIL" },
            c.detail
        );
    }
    render_oracle_line(s, h.oracle_checked);
}
