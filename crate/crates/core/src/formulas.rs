//! Factored products and the closed-form sides of the determinant
//! identities.
//!
//! Determinants of weighted group matrices factor into huge but structured
//! products like `(1-q^2)^{12} (1-q^3)^{16} (1-q^4)^{18}`.  Expanding such a
//! product is often affordable, but not always; `FactoredProduct` therefore
//! keeps the factored shape and offers three comparison routes: syntactic
//! identity after normalization (sound for equality, never used to decide
//! inequality), bounded expansion, and seeded random evaluation modulo a
//! prime.

use crate::poly::{Assignment, MultiPoly, PolyError, Var};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, HashSet};
use std::fmt;

/// Default cap on the number of terms a symbolic expansion may produce.
pub const DEFAULT_EXPANSION_TERM_LIMIT: usize = 10_000;

/// Default word-size prime for modular verification: `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("expansion exceeds {limit} terms")]
    DegreeBoundExceeded { limit: usize },
    #[error("exponent {num}/{den} is not an integer")]
    NonIntegerExponent { num: u128, den: u128 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A formal product `unit * Π base_i^{exp_i}` of polynomial factors.
///
/// No automatic base merging happens on construction; callers that want the
/// canonical merged form run [`FactoredProduct::normalize`].  Equality of two
/// products as polynomials is decided by [`fp_equal`], never by comparing
/// factor lists (identical lists do certify equality; different lists prove
/// nothing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredProduct {
    unit: BigInt,
    factors: Vec<(MultiPoly, u64)>,
}

impl FactoredProduct {
    pub fn one() -> FactoredProduct {
        FactoredProduct {
            unit: BigInt::one(),
            factors: Vec::new(),
        }
    }

    pub fn from_factors(factors: Vec<(MultiPoly, u64)>) -> FactoredProduct {
        FactoredProduct {
            unit: BigInt::one(),
            factors,
        }
    }

    pub fn with_unit(mut self, unit: BigInt) -> FactoredProduct {
        self.unit = unit;
        self
    }

    /// Appends `base^exp`.  Exponent 0 and base 1 are dropped silently.
    pub fn push(&mut self, base: MultiPoly, exp: u64) {
        if exp == 0 || base.is_one() {
            return;
        }
        self.factors.push((base, exp));
    }

    pub fn mul(&self, other: &FactoredProduct) -> FactoredProduct {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        FactoredProduct {
            unit: &self.unit * &other.unit,
            factors,
        }
    }

    pub fn pow(&self, e: u64) -> FactoredProduct {
        let mut unit = BigInt::one();
        for _ in 0..e {
            unit *= &self.unit;
        }
        FactoredProduct {
            unit,
            factors: self
                .factors
                .iter()
                .map(|(b, x)| (b.clone(), x * e))
                .collect(),
        }
    }

    pub fn unit(&self) -> &BigInt {
        &self.unit
    }

    pub fn factors(&self) -> &[(MultiPoly, u64)] {
        &self.factors
    }

    /// Merges syntactically equal bases, drops trivial factors, and sorts
    /// deterministically.  The result represents the same polynomial.
    pub fn normalize(&self) -> FactoredProduct {
        if self.unit.is_zero() || self.factors.iter().any(|(b, e)| b.is_zero() && *e > 0) {
            return FactoredProduct {
                unit: BigInt::zero(),
                factors: Vec::new(),
            };
        }
        let mut merged: Vec<(MultiPoly, u64)> = Vec::new();
        for (base, exp) in &self.factors {
            if *exp == 0 || base.is_one() {
                continue;
            }
            match merged.iter_mut().find(|(b, _)| b == base) {
                Some((_, e)) => *e += exp,
                None => merged.push((base.clone(), *exp)),
            }
        }
        merged.sort_by_cached_key(|(b, e)| (b.total_degree(), b.compact_string(), *e));
        FactoredProduct {
            unit: self.unit.clone(),
            factors: merged,
        }
    }

    /// Upper bound on the total degree of the expansion.
    pub fn total_degree_bound(&self) -> u64 {
        self.factors
            .iter()
            .map(|(b, e)| b.total_degree() * e)
            .sum()
    }

    pub fn var_set(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .factors
            .iter()
            .flat_map(|(b, _)| b.var_set())
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Multiplies the product out, failing once more than `limit` terms
    /// accumulate.
    pub fn expand_with_limit(&self, limit: usize) -> Result<MultiPoly, FormulaError> {
        let mut acc = MultiPoly::constant(self.unit.clone());
        for (base, exp) in &self.factors {
            // binary powering keeps intermediate blowup down
            let mut e = *exp;
            let mut sq = base.clone();
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc.mul(&sq);
                    if acc.term_count() > limit {
                        return Err(FormulaError::DegreeBoundExceeded { limit });
                    }
                }
                e >>= 1;
                if e > 0 {
                    sq = sq.mul(&sq);
                    if sq.term_count() > limit {
                        return Err(FormulaError::DegreeBoundExceeded { limit });
                    }
                }
            }
        }
        Ok(acc)
    }

    pub fn expand(&self) -> Result<MultiPoly, FormulaError> {
        self.expand_with_limit(DEFAULT_EXPANSION_TERM_LIMIT)
    }

    /// Substitutes a polynomial for a variable in every base.
    pub fn substitute(&self, v: Var, replacement: &MultiPoly) -> FactoredProduct {
        FactoredProduct {
            unit: self.unit.clone(),
            factors: self
                .factors
                .iter()
                .map(|(b, e)| (b.substitute(v, replacement), *e))
                .collect(),
        }
    }

    pub fn evaluate(
        &self,
        point: &Assignment,
        modulus: Option<&BigInt>,
    ) -> Result<BigInt, PolyError> {
        let mut acc = self.unit.clone();
        if let Some(p) = modulus {
            acc = num_integer::Integer::mod_floor(&acc, p);
        }
        for (base, exp) in &self.factors {
            let b = base.evaluate(point, modulus)?;
            match modulus {
                Some(p) => acc = (acc * b.modpow(&BigInt::from(*exp), p)) % p,
                None => acc *= num_traits::pow::pow(b, *exp as usize),
            }
        }
        Ok(acc)
    }

    pub fn eval_mod(&self, point: &BTreeMap<Var, u64>, prime: u64) -> Result<u64, PolyError> {
        let mut acc = crate::poly::reduce_bigint_mod(&self.unit, prime);
        for (base, exp) in &self.factors {
            let b = base.eval_mod(point, prime)?;
            acc = crate::poly::mul_mod(acc, crate::poly::pow_mod(b, *exp, prime), prime);
        }
        Ok(acc)
    }
}

/// Renders `(1-q^2)^3*(1-q^3)^4`, with a leading unit only when it is not 1.
impl fmt::Display for FactoredProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(self.unit.to_string());
        }
        for (base, exp) in &self.factors {
            let rendered = format!("({})", base.compact_string());
            if *exp == 1 {
                parts.push(rendered);
            } else {
                parts.push(format!("{rendered}^{exp}"));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    base: String,
    exp: u64,
}

#[derive(Serialize, Deserialize)]
struct FactoredProductJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    unit: Option<String>,
    factors: Vec<FactorJson>,
}

impl Serialize for FactoredProduct {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FactoredProductJson {
            unit: (!self.unit.is_one()).then(|| self.unit.to_string()),
            factors: self
                .factors
                .iter()
                .map(|(b, e)| FactorJson {
                    base: b.compact_string(),
                    exp: *e,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FactoredProduct {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = FactoredProductJson::deserialize(deserializer)?;
        let unit = match raw.unit {
            Some(s) => s.parse::<BigInt>().map_err(D::Error::custom)?,
            None => BigInt::one(),
        };
        let mut factors = Vec::with_capacity(raw.factors.len());
        for f in raw.factors {
            let base: MultiPoly = f.base.parse().map_err(|e| {
                D::Error::custom(format!("bad factor base '{}': {e}", f.base))
            })?;
            factors.push((base, f.exp));
        }
        Ok(FactoredProduct { unit, factors })
    }
}

/// How [`fp_equal`] should decide equality.
#[derive(Clone, Copy, Debug)]
pub enum EqualityMode {
    /// Normalize-and-compare, falling back to bounded expansion.
    Symbolic { term_limit: usize },
    /// Schwartz–Zippel style: agreement at seeded random points mod a prime.
    Modular { prime: u64, points: usize, seed: u64 },
}

impl EqualityMode {
    pub fn symbolic() -> EqualityMode {
        EqualityMode::Symbolic {
            term_limit: DEFAULT_EXPANSION_TERM_LIMIT,
        }
    }
}

/// Recommended number of evaluation points for a randomized equality check
/// of products with the given total-degree bound.
pub fn recommended_points(degree_bound: u64) -> usize {
    5usize.max(degree_bound.div_ceil(1_000_000) as usize)
}

/// Decides whether two factored products represent the same polynomial.
///
/// Symbolic mode is exact: identical normalized factor lists certify
/// equality; otherwise both sides are expanded (an error if either side
/// exceeds the term limit — retry in modular mode).  Modular mode compares
/// evaluations at `points` distinct seeded-random points and is randomized
/// with the usual Schwartz–Zippel guarantee.
pub fn fp_equal(
    a: &FactoredProduct,
    b: &FactoredProduct,
    mode: EqualityMode,
) -> Result<bool, FormulaError> {
    match mode {
        EqualityMode::Symbolic { term_limit } => {
            let na = a.normalize();
            let nb = b.normalize();
            if na == nb {
                return Ok(true);
            }
            Ok(na.expand_with_limit(term_limit)? == nb.expand_with_limit(term_limit)?)
        }
        EqualityMode::Modular {
            prime,
            points,
            seed,
        } => {
            let mut vars = a.var_set();
            vars.extend(b.var_set());
            vars.sort();
            vars.dedup();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut seen: HashSet<Vec<u64>> = HashSet::new();
            while seen.len() < points {
                let point: Vec<u64> = vars.iter().map(|_| rng.gen_range(0..prime)).collect();
                if !seen.insert(point.clone()) {
                    continue;
                }
                let assignment: BTreeMap<Var, u64> =
                    vars.iter().copied().zip(point).collect();
                if a.eval_mod(&assignment, prime)? != b.eval_mod(&assignment, prime)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

// ---------------------------------------------------------------------------
// q-analogues and the closed-form right-hand sides
// ---------------------------------------------------------------------------

/// `[k]_q = 1 + q + ... + q^{k-1}`.
pub fn q_int(k: usize, var: Var) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for e in 0..k {
        acc = acc.add(&MultiPoly::var_pow(var, e as u32));
    }
    acc
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`, expanded.  Equals the generating
/// function of the major index over `S_n`.
pub fn q_factorial(n: usize, var: Var) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for k in 2..=n {
        acc = acc.mul(&q_int(k, var));
    }
    acc
}

/// `[n]_q!` as a factored product of the `[k]_q`.
pub fn q_factorial_factored(n: usize, var: Var) -> FactoredProduct {
    let mut fp = FactoredProduct::one();
    for k in 2..=n {
        fp.push(q_int(k, var), 1);
    }
    fp
}

fn exact_exponent(num: u128, den: u128) -> u64 {
    assert!(num % den == 0, "exponent {num}/{den} is not an integer");
    u64::try_from(num / den).expect("exponent fits in u64")
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Major-index determinant over `S_n`:
/// `Π_{k=2}^{n} (1 - q^k)^{n! (k-1) / k}`.
pub fn rhs_maj(n: usize) -> FactoredProduct {
    let nf = factorial(n);
    let mut fp = FactoredProduct::one();
    for k in 2..=n {
        let exp = exact_exponent(nf * (k as u128 - 1), k as u128);
        fp.push(MultiPoly::one_minus_var_pow(Var::Q, k as u32), exp);
    }
    fp
}

/// Flag-major determinant over `Z_m wr S_n`:
/// `Π_{k=1}^{n} (1 - q^{mk})^{n! m^n (1 - 1/(mk))}`.
pub fn rhs_fmaj(n: usize, m: u32) -> FactoredProduct {
    let scale = factorial(n) * (m as u128).pow(n as u32);
    let mut fp = FactoredProduct::one();
    for k in 1..=n {
        let mk = m as u128 * k as u128;
        let exp = exact_exponent(scale * (mk - 1), mk);
        fp.push(
            MultiPoly::one_minus_var_pow(Var::Q, (m as usize * k) as u32),
            exp,
        );
    }
    fp
}

/// Bivariate (major, color) determinant over `Z_m wr S_n`:
/// `Π_{k=2}^{n} (1 - p^k)^{n! m^n (k-1)/k} · Π_{k=1}^{n} (1 - q^{mk})^{n! m^{n-1} (m-1) / k}`.
pub fn rhs_maj_col(n: usize, m: u32) -> FactoredProduct {
    let nf = factorial(n);
    let mn = (m as u128).pow(n as u32);
    let mn1 = (m as u128).pow(n as u32 - 1);
    let mut fp = FactoredProduct::one();
    for k in 2..=n {
        let exp = exact_exponent(nf * mn * (k as u128 - 1), k as u128);
        fp.push(MultiPoly::one_minus_var_pow(Var::P, k as u32), exp);
    }
    for k in 1..=n {
        let exp = exact_exponent(nf * mn1 * (m as u128 - 1), k as u128);
        fp.push(
            MultiPoly::one_minus_var_pow(Var::Q, (m as usize * k) as u32),
            exp,
        );
    }
    fp
}

/// Bivariate (alternating major, color) determinant over `Z_m wr S_n`:
/// `(1 - q^m)^{n! m^{n-1} (m-1) n} · Π_{k=2}^{n} (1 - p^k)^{n! m^n (k-1)/k}`.
pub fn rhs_amaj(n: usize, m: u32) -> FactoredProduct {
    let nf = factorial(n);
    let mn = (m as u128).pow(n as u32);
    let mn1 = (m as u128).pow(n as u32 - 1);
    let mut fp = FactoredProduct::one();
    let exp = exact_exponent(nf * mn1 * (m as u128 - 1) * n as u128, 1);
    fp.push(MultiPoly::one_minus_var_pow(Var::Q, m), exp);
    for k in 2..=n {
        let exp = exact_exponent(nf * mn * (k as u128 - 1), k as u128);
        fp.push(MultiPoly::one_minus_var_pow(Var::P, k as u32), exp);
    }
    fp
}

/// Signed determinant over `B_n` with negative-set tracking variables:
/// `Π_{k=1}^{n} (1 - q_k^{2k})^{n! 2^{n-1} / k} · Π_{k=2}^{n} (1 - p^k)^{n! 2^n (k-1)/k}`.
pub fn rhs_signed(n: usize) -> FactoredProduct {
    let nf = factorial(n);
    let pow2 = 1u128 << (n - 1);
    let mut fp = FactoredProduct::one();
    for k in 1..=n {
        let exp = exact_exponent(nf * pow2, k as u128);
        fp.push(
            MultiPoly::one_minus_var_pow(Var::QI(k as u32), 2 * k as u32),
            exp,
        );
    }
    for k in 2..=n {
        let exp = exact_exponent(nf * pow2 * 2 * (k as u128 - 1), k as u128);
        fp.push(MultiPoly::one_minus_var_pow(Var::P, k as u32), exp);
    }
    fp
}

/// The three one- and two-variable specializations of [`rhs_signed`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignedSpecialization {
    /// `q_i -> q`: weight `p^{maj_A} q^{nneg}`.
    Nneg,
    /// `q_i -> q, p -> q`: weight `q^{maj_B}` (via `maj_B = maj_A + nneg`).
    MajB,
    /// `q_i -> q^i`: weight `p^{maj_A} q^{sneg}`.
    Sneg,
}

pub fn rhs_signed_spec(n: usize, which: SignedSpecialization) -> FactoredProduct {
    let mut fp = rhs_signed(n);
    for k in 1..=n as u32 {
        let image = match which {
            SignedSpecialization::Nneg | SignedSpecialization::MajB => MultiPoly::var(Var::Q),
            SignedSpecialization::Sneg => MultiPoly::var_pow(Var::Q, k),
        };
        fp = fp.substitute(Var::QI(k), &image);
    }
    if which == SignedSpecialization::MajB {
        fp = fp.substitute(Var::P, &MultiPoly::var(Var::Q));
    }
    fp.normalize()
}

/// Regular-representation determinant of the dihedral group of order `2n`,
/// weighted `x1^{rot} x2^{refl}`: `(1 - x1^n)^{2n-2} (1 - x2^2)^n`.
pub fn rhs_dihedral(n: usize) -> FactoredProduct {
    let mut fp = FactoredProduct::one();
    fp.push(
        MultiPoly::one_minus_var_pow(Var::X1, n as u32),
        2 * n as u64 - 2,
    );
    fp.push(MultiPoly::one_minus_var_pow(Var::X2, 2), n as u64);
    fp
}

/// Defining-representation determinant of `S_n` (the `n x n` matrix of
/// maj-generating functions): `(1 - q)^{binom(n,2)} ([n]_q!)^{n-1}`.
pub fn rhs_defining(n: usize) -> FactoredProduct {
    let mut fp = q_factorial_factored(n, Var::Q).pow(n as u64 - 1);
    fp.push(
        MultiPoly::one_minus_var_pow(Var::Q, 1),
        (n * (n - 1) / 2) as u64,
    );
    fp.normalize()
}
