//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! Every symbolic object in this crate (statistic generating functions,
//! θ-polynomials, determinants) has integer coefficients, so the scalar ring
//! is `Z[p, q, x1, x2, q_1, q_2, ...]` with no rational arithmetic anywhere.
//! Polynomials are kept in a canonical sorted form; equality is structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

mod cyclo;
mod parse;

pub use cyclo::{cyclotomic, dense_coeffs, CycloElement};

/// Errors from polynomial arithmetic, evaluation and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    /// Exact division was requested but the divisor does not divide the
    /// dividend.  Everywhere this crate divides, divisibility is a theorem,
    /// so seeing this error means a bug upstream, not bad input.
    #[error("polynomial division left a remainder")]
    NotDivisible,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("no value assigned to variable {0}")]
    MissingVariable(String),
    #[error("cyclotomic conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A registered polynomial variable.
///
/// The variable universe is closed: `p`, `q`, `x1`, `x2`, and the indexed
/// family `q_1, q_2, ...`.  The derived `Ord` is the canonical variable order
/// `p < q < x1 < x2 < q_1 < q_2 < ...` used by the monomial order and the
/// renderer.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    P,
    Q,
    X1,
    X2,
    /// `q_i`, one tracking variable per index `i >= 1`.
    QI(u32),
}

impl Var {
    pub fn name(self) -> String {
        match self {
            Var::P => "p".into(),
            Var::Q => "q".into(),
            Var::X1 => "x1".into(),
            Var::X2 => "x2".into(),
            Var::QI(i) => format!("q_{i}"),
        }
    }

    /// Inverse of [`Var::name`].
    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "p" => Some(Var::P),
            "q" => Some(Var::Q),
            "x1" => Some(Var::X1),
            "x2" => Some(Var::X2),
            _ => {
                let idx = s.strip_prefix("q_")?;
                idx.parse::<u32>().ok().filter(|i| *i >= 1).map(Var::QI)
            }
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A power product of variables, e.g. `p^2 * q_1^3`.
///
/// Canonical form: exponent pairs sorted by variable, no zero exponents.
/// The empty product is the monomial `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    /// Builds a monomial from (variable, exponent) pairs in any order;
    /// duplicate variables accumulate.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m = m.mul(&Monomial::var_pow(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponent_of(&self, v: Var) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        exps.push((va, ea));
                        a.next();
                    } else if vb < va {
                        exps.push((vb, eb));
                        b.next();
                    } else {
                        exps.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                }
                (Some(_), None) => {
                    exps.extend(a.cloned());
                    break;
                }
                (None, Some(_)) => {
                    exps.extend(b.cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        Monomial { exps }
    }

    /// Whether `self` divides `other` variable-wise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|&(v, e)| other.exponent_of(v) >= e)
    }

    /// `other / self`, or `None` when not divisible.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = Vec::new();
        for &(v, e) in &other.exps {
            let r = e - self.exponent_of(v);
            if r > 0 {
                exps.push((v, r));
            }
        }
        Some(Monomial { exps })
    }

    fn render(&self, out: &mut String) {
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(&v.name());
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
}

/// Graded lexicographic order: compare total degree first; on ties, the
/// monomial with the larger exponent on the earliest variable wins.  This is
/// a genuine monomial order (compatible with multiplication, `1` minimal),
/// which the exact-division routine relies on.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        // self has positive exponent on an earlier variable
                        return Ordering::Greater;
                    }
                    if vb < va {
                        return Ordering::Less;
                    }
                    match ea.cmp(&eb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        ord => return ord,
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

// Small helper used by both Monomial and MultiPoly Display impls.
macro_rules! fmt_via_render {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let mut s = String::new();
            self.render(&mut s);
            if s.is_empty() {
                s.push('1');
            }
            write!(f, "{s}")
        }
    };
}

impl fmt::Display for Monomial {
    fmt_via_render!();
}

/// A sparse multivariate polynomial with `BigInt` coefficients.
///
/// Canonical form: terms keyed by monomial in graded-lex order, no zero
/// coefficients stored.  Two polynomials are equal iff their term maps are
/// structurally equal.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

/// Point at which to evaluate a polynomial: a value per variable.
pub type Assignment = BTreeMap<Var, BigInt>;

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn from_i64(c: i64) -> MultiPoly {
        MultiPoly::constant(BigInt::from(c))
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::from_monomial(Monomial::var(v), BigInt::one())
    }

    pub fn var_pow(v: Var, e: u32) -> MultiPoly {
        MultiPoly::from_monomial(Monomial::var_pow(v, e), BigInt::one())
    }

    pub fn from_monomial(m: Monomial, c: BigInt) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// `1 - v^e`, the building block of every factored identity here.
    pub fn one_minus_var_pow(v: Var, e: u32) -> MultiPoly {
        MultiPoly::one() - MultiPoly::var_pow(v, e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    /// Largest term in the monomial order; `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// All variables that occur with positive exponent.
    pub fn var_set(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut terms, m.clone(), c.clone());
        }
        MultiPoly { terms }
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut terms, m.clone(), -c);
        }
        MultiPoly { terms }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::insert_add(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        MultiPoly { terms }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u64) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact division: returns `q` with `self = q * divisor`, or
    /// [`PolyError::NotDivisible`].
    ///
    /// Works by repeated elimination of the leading term under the graded-lex
    /// order.  When the divisor truly divides, the candidate quotient term is
    /// forced at every step (leading monomials and leading coefficients must
    /// both divide), so a single pass either succeeds or proves
    /// non-divisibility.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (dm, dc) = divisor.leading_term().expect("nonzero divisor");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term().expect("nonzero remainder");
            let qm = dm.div_into(rm).ok_or(PolyError::NotDivisible)?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let qterm = MultiPoly::from_monomial(qm, qc);
            rem = rem.sub(&qterm.mul(divisor));
            quot = quot.add(&qterm);
        }
        Ok(quot)
    }

    /// Substitutes `replacement` for every occurrence of `v`.
    pub fn substitute(&self, v: Var, replacement: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        let mut pow_cache: Vec<MultiPoly> = vec![MultiPoly::one()];
        for (m, c) in &self.terms {
            let e = m.exponent_of(v) as usize;
            while pow_cache.len() <= e {
                let next = pow_cache.last().unwrap().mul(replacement);
                pow_cache.push(next);
            }
            let rest: Monomial = Monomial {
                exps: m.exps.iter().copied().filter(|&(w, _)| w != v).collect(),
            };
            let term = MultiPoly::from_monomial(rest, c.clone()).mul(&pow_cache[e]);
            out = out.add(&term);
        }
        out
    }

    /// Evaluates at an integer point, optionally reducing modulo a prime.
    /// With a modulus the result is the canonical residue in `[0, modulus)`.
    pub fn evaluate(
        &self,
        assignment: &Assignment,
        modulus: Option<&BigInt>,
    ) -> Result<BigInt, PolyError> {
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in &m.exps {
                let val = assignment
                    .get(&v)
                    .ok_or_else(|| PolyError::MissingVariable(v.name()))?;
                match modulus {
                    Some(p) => term = (term * val.modpow(&BigInt::from(e), p)) % p,
                    None => term *= num_traits::pow::pow(val.clone(), e as usize),
                }
            }
            acc += term;
            if let Some(p) = modulus {
                acc = acc.mod_floor(p);
            }
        }
        Ok(acc)
    }

    /// Fast modular evaluation in machine words.  `prime` must fit in 31 bits
    /// so that products fit in `u64` via `u128` intermediates.
    pub fn eval_mod(&self, point: &BTreeMap<Var, u64>, prime: u64) -> Result<u64, PolyError> {
        let mut acc: u64 = 0;
        for (m, c) in &self.terms {
            let mut term = reduce_bigint_mod(c, prime);
            for &(v, e) in &m.exps {
                let val = *point
                    .get(&v)
                    .ok_or_else(|| PolyError::MissingVariable(v.name()))?;
                term = mul_mod(term, pow_mod(val % prime, e as u64, prime), prime);
            }
            acc = (acc + term) % prime;
        }
        Ok(acc)
    }

    fn render(&self, out: &mut String) {
        self.render_with(out, true)
    }

    /// Renders `1 - 3*q^2 + q^5` (spaced) or `1-3*q^2+q^5` (compact).
    pub fn render_with(&self, out: &mut String, spaced: bool) {
        if self.is_zero() {
            out.push('0');
            return;
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let negative = c.is_negative();
            if first {
                if negative {
                    out.push('-');
                }
            } else if spaced {
                out.push_str(if negative { " - " } else { " + " });
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            first = false;
            let abs = c.abs();
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                m.render(out);
            }
        }
    }

    /// Compact single-token rendering used inside factored products and JSON.
    pub fn compact_string(&self) -> String {
        let mut s = String::new();
        self.render_with(&mut s, false);
        s
    }
}

impl fmt::Display for MultiPoly {
    fmt_via_render!();
}

impl FromStr for MultiPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_poly(s)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inherent:ident) => {
        impl std::ops::$trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$inherent(self, rhs)
            }
        }
        impl std::ops::$trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                MultiPoly::$inherent(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

/// Reduces a `BigInt` to its canonical residue in `[0, prime)`.
pub fn reduce_bigint_mod(c: &BigInt, prime: u64) -> u64 {
    let p = BigInt::from(prime);
    c.mod_floor(&p).to_u64().expect("residue fits in u64")
}

/// `(a * b) mod p` without overflow for `p < 2^63`.
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// `a^e mod p` by binary powering.
pub fn pow_mod(a: u64, mut e: u64, p: u64) -> u64 {
    let mut base = a % p;
    let mut acc: u64 = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo a prime `p`, via Fermat.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}
