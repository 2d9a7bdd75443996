//! End-to-end verification of the determinant identities.
//!
//! Each identity names a group, a weight, and a closed-form factored
//! product; verification computes the group-matrix determinant and compares.
//! Small groups (order at most [`SYMBOLIC_SIZE_LIMIT`]) are checked exactly
//! with fraction-free elimination over `Z[vars]`; larger ones are checked at
//! seeded random points modulo a prime, Schwartz–Zippel style, so a run is
//! reproducible from `(prime, seed, points)`.

use crate::formulas::{
    fp_equal, q_factorial, rhs_amaj, rhs_defining, rhs_dihedral, rhs_fmaj, rhs_maj,
    rhs_maj_col, rhs_signed, rhs_signed_spec, EqualityMode, FactoredProduct, FormulaError,
    SignedSpecialization, DEFAULT_PRIME,
};
use crate::groups::{DihedralGroup, SymmetricGroup};
use crate::matrix::{det_mod_p, MatrixError};
use crate::poly::{Monomial, MultiPoly, PolyError, Var};
use crate::repr::{defining_matrix, RegularWeightTable, ReprError, SYMBOLIC_SIZE_LIMIT};
use crate::tableaux::{delta_hook_closed, delta_irrep, partitions, Partition, TableauxError};
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Tableaux(#[from] TableauxError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The identities this crate can verify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `S_n` weighted by the major index.
    Maj { n: usize },
    /// `Z_m wr S_n` weighted by the flag-major index.
    Fmaj { n: usize, m: u32 },
    /// `Z_m wr S_n` weighted by `p^{cmaj} q^{col}`.
    MajCol { n: usize, m: u32 },
    /// `Z_m wr S_n` weighted by `p^{amaj} q^{col}`.
    Amaj { n: usize, m: u32 },
    /// `B_n` weighted by `p^{maj_A} prod_{i in Neg} q_i`.
    Signed { n: usize },
    /// `B_n` weighted by `p^{maj_A} q^{nneg}`.
    SignedNneg { n: usize },
    /// `B_n` weighted by `q^{maj_B}` (the type-B major index directly).
    SignedMajB { n: usize },
    /// `B_n` weighted by `p^{maj_A} q^{sneg}`.
    SignedSneg { n: usize },
    /// Dihedral group of order `2n` weighted by `x1^{rot} x2^{refl}`.
    Dihedral { n: usize },
    /// The `n x n` defining-representation matrix of maj generating
    /// functions.
    Defining { n: usize },
    /// Per-irreducible factor for a partition of `n`; with no partition,
    /// the spectral completeness product over all of them.
    Irrep { n: usize, lambda: Option<Partition> },
}

impl Identity {
    pub fn name(&self) -> &'static str {
        match self {
            Identity::Maj { .. } => "maj",
            Identity::Fmaj { .. } => "fmaj",
            Identity::MajCol { .. } => "maj-col",
            Identity::Amaj { .. } => "amaj",
            Identity::Signed { .. } => "signed",
            Identity::SignedNneg { .. } => "signed-nneg",
            Identity::SignedMajB { .. } => "signed-majb",
            Identity::SignedSneg { .. } => "signed-sneg",
            Identity::Dihedral { .. } => "dihedral",
            Identity::Defining { .. } => "defining",
            Identity::Irrep { .. } => "irrep",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Identity::Maj { n }
            | Identity::Fmaj { n, .. }
            | Identity::MajCol { n, .. }
            | Identity::Amaj { n, .. }
            | Identity::Signed { n }
            | Identity::SignedNneg { n }
            | Identity::SignedMajB { n }
            | Identity::SignedSneg { n }
            | Identity::Dihedral { n }
            | Identity::Defining { n }
            | Identity::Irrep { n, .. } => *n,
        }
    }

    pub fn m(&self) -> Option<u32> {
        match self {
            Identity::Fmaj { m, .. }
            | Identity::MajCol { m, .. }
            | Identity::Amaj { m, .. } => Some(*m),
            _ => None,
        }
    }

    fn lambda_string(&self) -> Option<String> {
        match self {
            Identity::Irrep { lambda, .. } => lambda.as_ref().map(|l| l.to_string()),
            _ => None,
        }
    }
}

/// Verification strategy.  `Auto` picks symbolic for groups of order at
/// most [`SYMBOLIC_SIZE_LIMIT`] and modular beyond.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Auto,
    Symbolic,
    Modular,
}

/// Parameters of the randomized pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularParams {
    pub prime: u64,
    pub points: usize,
    pub seed: u64,
}

impl Default for ModularParams {
    fn default() -> ModularParams {
        ModularParams {
            prime: DEFAULT_PRIME,
            points: 7,
            seed: 0,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ReportParams {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
}

/// Machine-readable outcome of one verification run.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub params: ReportParams,
    pub mode: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Only include an exact left-hand side in the report when it stays
/// readable.
const LHS_RENDER_TERM_LIMIT: usize = 40;

fn monomial_weight(pairs: impl IntoIterator<Item = (Var, u32)>) -> MultiPoly {
    MultiPoly::from_monomial(Monomial::from_pairs(pairs), BigInt::one())
}

fn build_regular(identity: &Identity) -> Result<(RegularWeightTable, FactoredProduct), VerifyError> {
    let check_n = |n: usize| {
        if n == 0 {
            Err(VerifyError::BadParams("n must be at least 1".into()))
        } else {
            Ok(())
        }
    };
    match identity {
        Identity::Maj { n } => {
            check_n(*n)?;
            let g = SymmetricGroup::new(*n);
            let table = RegularWeightTable::new(&g, |w| {
                monomial_weight([(Var::Q, w.maj() as u32)])
            });
            Ok((table, rhs_maj(*n)))
        }
        Identity::Fmaj { n, m } => {
            check_n(*n)?;
            check_m(*m)?;
            let g = crate::colored::ColoredGroup::new(*n, *m);
            let table = RegularWeightTable::new(&g, |w| {
                monomial_weight([(Var::Q, w.fmaj() as u32)])
            });
            Ok((table, rhs_fmaj(*n, *m)))
        }
        Identity::MajCol { n, m } => {
            check_n(*n)?;
            check_m(*m)?;
            let g = crate::colored::ColoredGroup::new(*n, *m);
            let table = RegularWeightTable::new(&g, |w| {
                monomial_weight([(Var::P, w.cmaj() as u32), (Var::Q, w.col() as u32)])
            });
            Ok((table, rhs_maj_col(*n, *m)))
        }
        Identity::Amaj { n, m } => {
            check_n(*n)?;
            check_m(*m)?;
            let g = crate::colored::ColoredGroup::new(*n, *m);
            let table = RegularWeightTable::new(&g, |w| {
                monomial_weight([(Var::P, w.amaj() as u32), (Var::Q, w.col() as u32)])
            });
            Ok((table, rhs_amaj(*n, *m)))
        }
        Identity::Signed { n } => {
            check_n(*n)?;
            let g = crate::signed::SignedGroup::new(*n);
            let table = RegularWeightTable::new(&g, |w| {
                let mut pairs = vec![(Var::P, w.maj_a() as u32)];
                pairs.extend(w.neg_set().into_iter().map(|i| (Var::QI(i as u32), 1)));
                monomial_weight(pairs)
            });
            Ok((table, rhs_signed(*n)))
        }
        Identity::SignedNneg { n } => {
            check_n(*n)?;
            let g = crate::signed::SignedGroup::new(*n);
            let table = RegularWeightTable::new(&g, |w| {
                monomial_weight([(Var::P, w.maj_a() as u32), (Var::Q, w.nneg() as u32)])
            });
            Ok((table, rhs_signed_spec(*n, SignedSpecialization::Nneg)))
        }
        Identity::SignedMajB { n } => {
            check_n(*n)?;
            let g = crate::signed::SignedGroup::new(*n);
            let table = RegularWeightTable::new(&g, |w| {
                monomial_weight([(Var::Q, w.maj_b() as u32)])
            });
            Ok((table, rhs_signed_spec(*n, SignedSpecialization::MajB)))
        }
        Identity::SignedSneg { n } => {
            check_n(*n)?;
            let g = crate::signed::SignedGroup::new(*n);
            let table = RegularWeightTable::new(&g, |w| {
                monomial_weight([(Var::P, w.maj_a() as u32), (Var::Q, w.sneg() as u32)])
            });
            Ok((table, rhs_signed_spec(*n, SignedSpecialization::Sneg)))
        }
        Identity::Dihedral { n } => {
            if *n < 3 {
                return Err(VerifyError::BadParams(
                    "dihedral identities need n >= 3".into(),
                ));
            }
            let g = DihedralGroup::new(*n);
            let table = RegularWeightTable::new(&g, |h| {
                monomial_weight([
                    (Var::X1, g.rot_stat(h) as u32),
                    (Var::X2, g.refl_stat(h) as u32),
                ])
            });
            Ok((table, rhs_dihedral(*n)))
        }
        _ => unreachable!("not a regular-matrix identity"),
    }
}

fn check_m(m: u32) -> Result<(), VerifyError> {
    if m == 0 {
        Err(VerifyError::BadParams("m must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Seeded distinct evaluation points over `vars`.  With no variables at all
/// there is exactly one point (the empty assignment).
fn sample_points(
    vars: &[Var],
    params: &ModularParams,
) -> Result<Vec<BTreeMap<Var, u64>>, VerifyError> {
    if vars.is_empty() {
        return Ok(vec![BTreeMap::new()]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::with_capacity(params.points);
    let mut attempts = 0usize;
    while out.len() < params.points {
        attempts += 1;
        if attempts > params.points.saturating_mul(64) + 1024 {
            return Err(VerifyError::BadParams(format!(
                "cannot draw {} distinct points modulo {}",
                params.points, params.prime
            )));
        }
        let raw: Vec<u64> = vars.iter().map(|_| rng.gen_range(0..params.prime)).collect();
        if !seen.insert(raw.clone()) {
            continue;
        }
        out.push(vars.iter().copied().zip(raw).collect());
    }
    Ok(out)
}

fn render_point(point: &BTreeMap<Var, u64>) -> String {
    point
        .iter()
        .map(|(v, x)| format!("{}={}", v.name(), x))
        .collect::<Vec<_>>()
        .join(", ")
}

struct Comparison {
    pass: bool,
    lhs: Option<String>,
    detail: Option<String>,
}

/// Exact comparison: determinant polynomial vs expanded product.
fn compare_symbolic(det: &MultiPoly, rhs: &FactoredProduct) -> Result<Comparison, VerifyError> {
    let expanded = rhs.expand()?;
    let pass = *det == expanded;
    let lhs = (det.term_count() <= LHS_RENDER_TERM_LIMIT).then(|| det.compact_string());
    let detail = if pass {
        None
    } else {
        let diff = det.sub(&expanded);
        let leading = diff
            .leading_term()
            .map(|(m, c)| format!("{c} * {m}"))
            .unwrap_or_else(|| "0".into());
        Some(format!(
            "determinant differs from product in {} terms; leading difference {}",
            diff.term_count(),
            leading
        ))
    };
    Ok(Comparison { pass, lhs, detail })
}

/// Randomized comparison of a weight table against a product.
fn compare_modular(
    table: &RegularWeightTable,
    rhs: &FactoredProduct,
    params: &ModularParams,
) -> Result<Comparison, VerifyError> {
    let mut vars = table.var_set();
    vars.extend(rhs.var_set());
    vars.sort();
    vars.dedup();
    for point in sample_points(&vars, params)? {
        let lhs = table.det_at_point(&point, params.prime)?;
        let rhs_val = rhs.eval_mod(&point, params.prime)?;
        if lhs != rhs_val {
            return Ok(Comparison {
                pass: false,
                lhs: None,
                detail: Some(format!(
                    "mismatch at {}: determinant {} vs product {}",
                    render_point(&point),
                    lhs,
                    rhs_val
                )),
            });
        }
    }
    Ok(Comparison {
        pass: true,
        lhs: None,
        detail: None,
    })
}

fn resolve_mode(mode: Mode, group_size: usize) -> Mode {
    match mode {
        Mode::Auto => {
            if group_size <= SYMBOLIC_SIZE_LIMIT {
                Mode::Symbolic
            } else {
                Mode::Modular
            }
        }
        other => other,
    }
}

/// Runs one verification and reports the outcome.  `Err` means the run
/// could not be carried out (bad parameters, oversized symbolic request);
/// a completed run that found a mismatch comes back `Ok` with
/// `pass = false`.
pub fn verify(
    identity: &Identity,
    mode: Mode,
    params: &ModularParams,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    if params.points == 0 {
        return Err(VerifyError::BadParams("points must be at least 1".into()));
    }
    if params.prime < 2 {
        return Err(VerifyError::BadParams("prime must be at least 2".into()));
    }
    let mut report = VerificationReport {
        identity: identity.name().into(),
        params: ReportParams {
            n: identity.n(),
            m: identity.m(),
            lambda: identity.lambda_string(),
        },
        mode: String::new(),
        pass: false,
        lhs: None,
        rhs: None,
        prime: None,
        seed: None,
        points: None,
        elapsed_ms: 0,
    detail: None,
    };

    match identity {
        Identity::Defining { n } => {
            if *n == 0 || *n > 8 {
                return Err(VerifyError::BadParams(
                    "defining identity supports 1 <= n <= 8".into(),
                ));
            }
            let matrix = defining_matrix(*n);
            let rhs = rhs_defining(*n);
            report.rhs = Some(rhs.to_string());
            let resolved = if mode == Mode::Modular {
                Mode::Modular
            } else {
                Mode::Symbolic
            };
            match resolved {
                Mode::Symbolic => {
                    report.mode = "symbolic".into();
                    let det = matrix.det_bareiss()?;
                    let cmp = compare_symbolic(&det, &rhs)?;
                    report.pass = cmp.pass;
                    report.lhs = cmp.lhs;
                    report.detail = cmp.detail;
                }
                _ => {
                    report.mode = "modular".into();
                    report.prime = Some(params.prime);
                    report.seed = Some(params.seed);
                    report.points = Some(params.points);
                    report.pass = true;
                    for point in sample_points(&[Var::Q], params)? {
                        let entries = matrix.eval_mod(&point, params.prime)?;
                        let lhs = det_mod_p(*n, params.prime, entries);
                        let rhs_val = rhs.eval_mod(&point, params.prime)?;
                        if lhs != rhs_val {
                            report.pass = false;
                            report.detail = Some(format!(
                                "mismatch at {}: determinant {} vs product {}",
                                render_point(&point),
                                lhs,
                                rhs_val
                            ));
                            break;
                        }
                    }
                }
            }
        }
        Identity::Irrep { n, lambda } => {
            verify_irrep(*n, lambda.as_ref(), mode, params, &mut report)?;
        }
        _ => {
            let (table, rhs) = build_regular(identity)?;
            report.rhs = Some(rhs.to_string());
            match resolve_mode(mode, table.size()) {
                Mode::Symbolic => {
                    report.mode = "symbolic".into();
                    let det = table.symbolic_matrix()?.det_bareiss()?;
                    let cmp = compare_symbolic(&det, &rhs)?;
                    report.pass = cmp.pass;
                    report.lhs = cmp.lhs;
                    report.detail = cmp.detail;
                }
                _ => {
                    report.mode = "modular".into();
                    report.prime = Some(params.prime);
                    report.seed = Some(params.seed);
                    report.points = Some(params.points);
                    let cmp = compare_modular(&table, &rhs, params)?;
                    report.pass = cmp.pass;
                    report.detail = cmp.detail;
                }
            }
        }
    }

    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn verify_irrep(
    n: usize,
    lambda: Option<&Partition>,
    mode: Mode,
    params: &ModularParams,
    report: &mut VerificationReport,
) -> Result<(), VerifyError> {
    if n == 0 {
        return Err(VerifyError::BadParams("n must be at least 1".into()));
    }
    let equality_mode = |m: Mode| match m {
        Mode::Modular => EqualityMode::Modular {
            prime: params.prime,
            points: params.points,
            seed: params.seed,
        },
        _ => EqualityMode::symbolic(),
    };
    match lambda {
        None => {
            // spectral completeness: the deltas over all shapes, each raised
            // to its dimension, multiply back to the full determinant
            let mut product = FactoredProduct::one();
            for shape in partitions(n) {
                let delta = delta_irrep(&shape)?;
                product = product.mul(&delta.pow(shape.dimension() as u64));
            }
            let rhs = rhs_maj(n);
            report.rhs = Some(rhs.to_string());
            let chosen = if mode == Mode::Modular {
                Mode::Modular
            } else {
                Mode::Symbolic
            };
            report.mode = match chosen {
                Mode::Modular => "modular".into(),
                _ => "symbolic".into(),
            };
            if chosen == Mode::Modular {
                report.prime = Some(params.prime);
                report.seed = Some(params.seed);
                report.points = Some(params.points);
            }
            report.pass = fp_equal(&product, &rhs, equality_mode(chosen))?;
            if !report.pass {
                report.detail =
                    Some("spectral product does not match the determinant".into());
            }
        }
        Some(shape) => {
            if shape.size() != n {
                return Err(VerifyError::BadParams(format!(
                    "partition {shape} has size {}, expected n = {n}",
                    shape.size()
                )));
            }
            let delta = delta_irrep(shape)?;
            let known: Option<FactoredProduct> = if shape.parts() == [n] {
                Some(FactoredProduct::from_factors(vec![(
                    q_factorial(n, Var::Q),
                    1,
                )]))
            } else if n >= 3 && shape.parts() == [n - 1, 1] {
                Some(delta_hook_closed(n))
            } else if shape.parts() == [2, 2] {
                Some(FactoredProduct::from_factors(vec![
                    (MultiPoly::one_minus_var_pow(Var::Q, 1), 1),
                    (MultiPoly::one_minus_var_pow(Var::Q, 3), 1),
                    (MultiPoly::one_minus_var_pow(Var::Q, 4), 2),
                ]))
            } else {
                None
            };
            match known {
                Some(rhs) => {
                    report.rhs = Some(rhs.to_string());
                    let chosen = if mode == Mode::Modular {
                        Mode::Modular
                    } else {
                        Mode::Symbolic
                    };
                    report.mode = match chosen {
                        Mode::Modular => "modular".into(),
                        _ => "symbolic".into(),
                    };
                    if chosen == Mode::Modular {
                        report.prime = Some(params.prime);
                        report.seed = Some(params.seed);
                        report.points = Some(params.points);
                    }
                    report.lhs = Some(delta.to_string());
                    report.pass = fp_equal(&delta, &rhs, equality_mode(chosen))?;
                    if !report.pass {
                        report.detail = Some(format!(
                            "delta {delta} does not match the closed form"
                        ));
                    }
                }
                None => {
                    // no closed form on record: certify the structural facts
                    // instead — exact division succeeded (delta exists), the
                    // constant term is 1, and the degree is dim * binom(n,2)
                    report.mode = "symbolic".into();
                    report.lhs = Some(delta.to_string());
                    let expanded = delta.expand()?;
                    let dim = shape.dimension() as u64;
                    let want_degree = dim * (n * (n - 1) / 2) as u64;
                    let constant_ok = expanded.constant_term() == BigInt::one();
                    let degree_ok = expanded.total_degree() == want_degree;
                    report.pass = constant_ok && degree_ok;
                    if !report.pass {
                        report.detail = Some(format!(
                            "structural check failed: constant term {} (want 1), degree {} (want {})",
                            expanded.constant_term(),
                            expanded.total_degree(),
                            want_degree
                        ));
                    } else {
                        report.detail = Some(
                            "no closed form on record; verified exact divisibility, constant term, and degree"
                                .into(),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}
