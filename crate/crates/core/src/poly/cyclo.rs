//! Cyclotomic polynomials and exact arithmetic in `Z[x]/Φ_m(x)`.
//!
//! Eigenvalues of the representing matrices of cycles are roots of unity, so
//! characteristic polynomials are first assembled with coefficients in the
//! ring `Z[ω] = Z[x]/Φ_m(x)` and only then recognized as plain integers.

use super::{MultiPoly, PolyError, Var};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The `m`-th cyclotomic polynomial in the given variable, computed from the
/// defining recursion `x^m - 1 = Π_{d | m} Φ_d(x)` by exact division.
pub fn cyclotomic(m: u32, var: Var) -> MultiPoly {
    assert!(m >= 1, "conductor must be positive");
    let mut num = MultiPoly::var_pow(var, m) - MultiPoly::one();
    for d in 1..m {
        if m % d == 0 {
            num = num
                .exact_div(&cyclotomic(d, var))
                .expect("cyclotomic recursion divides exactly");
        }
    }
    num
}

/// Dense coefficient vector (ascending degree) of a univariate polynomial.
pub fn dense_coeffs(poly: &MultiPoly, var: Var) -> Vec<BigInt> {
    let deg = poly.total_degree() as usize;
    let mut out = vec![BigInt::zero(); deg + 1];
    for (m, c) in poly.terms() {
        debug_assert!(m.vars().all(|v| v == var));
        out[m.exponent_of(var) as usize] = c.clone();
    }
    out
}

/// An element of `Z[x]/Φ_m(x)`, stored as the unique representative of
/// degree `< deg Φ_m`.  The conductor `m` travels with the element; mixing
/// conductors is an error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloElement {
    m: u32,
    /// Coefficients of `1, x, ..., x^{deg Φ_m - 1}`.
    coeffs: Vec<BigInt>,
}

impl CycloElement {
    fn modulus_coeffs(m: u32) -> Vec<BigInt> {
        dense_coeffs(&cyclotomic(m, Var::Q), Var::Q)
    }

    pub fn from_int(m: u32, value: BigInt) -> CycloElement {
        let deg = Self::modulus_coeffs(m).len() - 1;
        let mut coeffs = vec![BigInt::zero(); deg];
        // deg Φ_1 = 1 still leaves one slot
        coeffs[0] = value;
        CycloElement { m, coeffs }
    }

    pub fn one(m: u32) -> CycloElement {
        CycloElement::from_int(m, BigInt::one())
    }

    pub fn zero(m: u32) -> CycloElement {
        CycloElement::from_int(m, BigInt::zero())
    }

    /// `x^e` reduced modulo `Φ_m`.
    pub fn root_power(m: u32, e: u32) -> CycloElement {
        let modulus = Self::modulus_coeffs(m);
        let mut dense = vec![BigInt::zero(); e as usize + 1];
        dense[e as usize] = BigInt::one();
        CycloElement {
            m,
            coeffs: reduce(dense, &modulus),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn add(&self, other: &CycloElement) -> Result<CycloElement, PolyError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloElement { m: self.m, coeffs })
    }

    pub fn sub(&self, other: &CycloElement) -> Result<CycloElement, PolyError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloElement { m: self.m, coeffs })
    }

    pub fn mul(&self, other: &CycloElement) -> Result<CycloElement, PolyError> {
        self.check(other)?;
        let mut dense = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                dense[i + j] += a * b;
            }
        }
        let modulus = Self::modulus_coeffs(self.m);
        Ok(CycloElement {
            m: self.m,
            coeffs: reduce(dense, &modulus),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Returns the integer this element represents, or `None` when a strictly
    /// positive power of `x` survives reduction.
    pub fn as_int(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check(&self, other: &CycloElement) -> Result<(), PolyError> {
        if self.m != other.m {
            Err(PolyError::ConductorMismatch(self.m, other.m))
        } else {
            Ok(())
        }
    }
}

/// Remainder of a dense polynomial modulo a monic dense modulus.
fn reduce(mut dense: Vec<BigInt>, modulus: &[BigInt]) -> Vec<BigInt> {
    let deg = modulus.len() - 1;
    debug_assert!(modulus[deg].is_one(), "modulus must be monic");
    while dense.len() > deg {
        let top = dense.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = dense.len() - deg;
        for (i, m) in modulus[..deg].iter().enumerate() {
            let delta = &top * m;
            dense[shift + i] -= delta;
        }
    }
    dense.resize(deg, BigInt::zero());
    dense
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1, Var::Q), qp("q - 1"));
        assert_eq!(cyclotomic(2, Var::Q), qp("q + 1"));
        assert_eq!(cyclotomic(3, Var::Q), qp("1 + q + q^2"));
        assert_eq!(cyclotomic(4, Var::Q), qp("1 + q^2"));
        // oracle: (x^6 - 1) / (Φ_1 Φ_2 Φ_3) computed by exact division
        let oracle = qp("q^6 - 1")
            .exact_div(&qp("q - 1"))
            .unwrap()
            .exact_div(&qp("q + 1"))
            .unwrap()
            .exact_div(&qp("1 + q + q^2"))
            .unwrap();
        assert_eq!(oracle, qp("1 - q + q^2"));
        assert_eq!(cyclotomic(6, Var::Q), oracle);
    }

    #[test]
    fn product_over_divisors_is_x_m_minus_one() {
        for m in 1..=30u32 {
            let mut prod = MultiPoly::one();
            for d in 1..=m {
                if m % d == 0 {
                    prod = prod.mul(&cyclotomic(d, Var::Q));
                }
            }
            let expect = MultiPoly::var_pow(Var::Q, m) - MultiPoly::one();
            assert_eq!(prod, expect, "m = {m}");
        }
    }

    #[test]
    fn root_power_has_order_m() {
        for m in 1..=20u32 {
            let x = CycloElement::root_power(m, 1);
            let mut acc = CycloElement::one(m);
            for _ in 0..m {
                acc = acc.mul(&x).unwrap();
            }
            assert_eq!(acc.as_int(), Some(BigInt::one()), "x^{m} = 1 failed");
        }
    }

    #[test]
    fn nontrivial_powers_are_not_integers() {
        // x in Z[x]/Φ_5 is not an integer, nor are its powers below 5
        for e in 1..5u32 {
            assert_eq!(CycloElement::root_power(5, e).as_int(), None);
        }
        // but in Z[x]/Φ_1, x = 1; in Z[x]/Φ_2, x = -1
        assert_eq!(
            CycloElement::root_power(1, 1).as_int(),
            Some(BigInt::one())
        );
        assert_eq!(
            CycloElement::root_power(2, 1).as_int(),
            Some(BigInt::from(-1))
        );
    }

    #[test]
    fn conductor_mismatch_is_reported() {
        let a = CycloElement::one(3);
        let b = CycloElement::one(4);
        assert_eq!(a.mul(&b), Err(PolyError::ConductorMismatch(3, 4)));
    }

    #[test]
    fn sum_of_all_root_powers_vanishes_for_prime_conductor() {
        // 1 + ω + ... + ω^{p-1} = 0 for prime p
        for m in [2u32, 3, 5, 7, 11] {
            let mut acc = CycloElement::zero(m);
            for e in 0..m {
                acc = acc.add(&CycloElement::root_power(m, e)).unwrap();
            }
            assert!(acc.is_zero(), "m = {m}");
        }
    }
}
