//! Dense matrices over a commutative ring and exact determinants.
//!
//! Three determinant engines with different trade-offs:
//! * [`RingMatrix::det_bareiss`] — fraction-free Gaussian elimination; every
//!   division is exact, so it works over any integral domain (here: integer
//!   polynomials).  The workhorse for symbolic determinants.
//! * [`RingMatrix::det_cofactor`] — textbook expansion, exponential; kept as
//!   an independent oracle for small sizes.
//! * [`det_modular`] — evaluation at a point followed by elimination over
//!   `Z/p`; used to check identities too large to expand symbolically.

use crate::poly::{
    inv_mod, mul_mod, Assignment, MultiPoly, PolyError, Var,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    SizeMismatch(usize, usize, usize, usize),
    #[error("cofactor expansion limited to size {limit}, got {size}")]
    SizeTooLarge { size: usize, limit: usize },
    #[error("entry evaluation failed: {0}")]
    Eval(#[from] PolyError),
}

/// Scalars a determinant can be computed over: a commutative ring with an
/// exact-division partial operation (division by a known-exact divisor).
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// `self / divisor` when the division is exact; `None` otherwise.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

impl Scalar for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        MultiPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        MultiPoly::exact_div(self, divisor).ok()
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        Zero::is_zero(&r).then_some(q)
    }
}

/// Row-major dense matrix over a ring scalar.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> RingMatrix<S> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RingMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn matmul(&self, other: &RingMatrix<S>) -> Result<RingMatrix<S>, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::SizeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        Ok(RingMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
            }
            acc
        }))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> RingMatrix<T> {
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn require_square(&self) -> Result<usize, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// Fraction-free (Bareiss) determinant.
    ///
    /// Pivots on the first structurally nonzero entry of each column; a column
    /// with no pivot available means the determinant is zero and the routine
    /// returns immediately.  All interior divisions are by the previous pivot
    /// and are exact by the Sylvester identity; a failed division therefore
    /// panics, since it can only come from a broken `Scalar` impl.
    pub fn det_bareiss(&self) -> Result<S, MatrixError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(S::one());
        }
        let mut m = self.entries.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign_flip = false;
        let mut prev = S::one();
        for k in 0..n - 1 {
            if m[idx(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[idx(r, k)].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            m.swap(idx(k, j), idx(r, j));
                        }
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(S::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m[idx(k, k)]
                        .mul(&m[idx(i, j)])
                        .sub(&m[idx(i, k)].mul(&m[idx(k, j)]));
                    m[idx(i, j)] = t
                        .exact_div(&prev)
                        .expect("Bareiss division is exact by Sylvester's identity");
                }
                m[idx(i, k)] = S::zero();
            }
            prev = m[idx(k, k)].clone();
        }
        let det = m[idx(n - 1, n - 1)].clone();
        Ok(if sign_flip { det.neg() } else { det })
    }

    /// Determinant by cofactor expansion along the first row.  Exponential;
    /// guarded to sizes ≤ 8.  Exists as an independent cross-check.
    pub fn det_cofactor(&self) -> Result<S, MatrixError> {
        const LIMIT: usize = 8;
        let n = self.require_square()?;
        if n > LIMIT {
            return Err(MatrixError::SizeTooLarge {
                size: n,
                limit: LIMIT,
            });
        }
        Ok(self.det_cofactor_inner())
    }

    fn det_cofactor_inner(&self) -> S {
        let n = self.rows;
        if n == 0 {
            return S::one();
        }
        if n == 1 {
            return self.at(0, 0).clone();
        }
        let mut acc = S::zero();
        for j in 0..n {
            if self.at(0, j).is_zero() {
                continue;
            }
            let minor = RingMatrix::from_fn(n - 1, n - 1, |r, c| {
                self.at(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = self.at(0, j).mul(&minor.det_cofactor_inner());
            acc = if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }
}

impl RingMatrix<MultiPoly> {
    /// `det(I - t M)` — the reciprocal characteristic polynomial of `M` in the
    /// variable `t`.  This is the θ-polynomial that appears in every factored
    /// determinant formula in this crate.
    pub fn theta(&self, t: Var) -> Result<MultiPoly, MatrixError> {
        let n = self.require_square()?;
        let tv = MultiPoly::var(t);
        let shifted = RingMatrix::from_fn(n, n, |i, j| {
            let scaled = tv.mul(self.at(i, j));
            if i == j {
                MultiPoly::one().sub(&scaled)
            } else {
                scaled.neg()
            }
        });
        shifted.det_bareiss()
    }

    /// Evaluates every entry at a point and reduces modulo `prime`.
    pub fn eval_mod(
        &self,
        point: &std::collections::BTreeMap<Var, u64>,
        prime: u64,
    ) -> Result<Vec<u64>, MatrixError> {
        self.entries
            .iter()
            .map(|e| e.eval_mod(point, prime).map_err(MatrixError::from))
            .collect()
    }
}

/// A permutation matrix, stored as `images[i] =` column of the single 1 in
/// row `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermutationMatrix {
    images: Vec<usize>,
}

impl PermutationMatrix {
    /// Builds the matrix of a bijection on an indexed point set: entry
    /// `(i, j) = 1` iff the bijection sends point `j` to point `i`.  With
    /// this column convention, matrices compose like functions.
    pub fn from_images(images: Vec<usize>) -> PermutationMatrix {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!(i < n && !seen[i], "not a permutation of 0..{n}");
            seen[i] = true;
        }
        PermutationMatrix { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn to_ring_matrix(&self) -> RingMatrix<MultiPoly> {
        RingMatrix::from_fn(self.size(), self.size(), |i, j| {
            if self.images[i] == j {
                MultiPoly::one()
            } else {
                MultiPoly::zero()
            }
        })
    }

    pub fn theta(&self, t: Var) -> MultiPoly {
        self.to_ring_matrix()
            .theta(t)
            .expect("square by construction")
    }
}

/// Determinant over `Z/prime` of the matrix whose `(i, j)` entry is
/// `builder(i, j)` evaluated at `point`.  Returns the canonical residue.
/// A zero determinant is a legitimate value, not an error.
pub fn det_modular(
    size: usize,
    mut builder: impl FnMut(usize, usize) -> MultiPoly,
    point: &Assignment,
    prime: u64,
) -> Result<u64, MatrixError> {
    let big_p = BigInt::from(prime);
    let word_point: std::collections::BTreeMap<Var, u64> = point
        .iter()
        .map(|(v, val)| (*v, crate::poly::reduce_bigint_mod(val, prime)))
        .collect();
    let mut entries = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            let e = builder(i, j);
            // small fast path: monomial entries evaluate in words
            let val = e.eval_mod(&word_point, prime).or_else(|_| {
                e.evaluate(point, Some(&big_p))
                    .map(|b| crate::poly::reduce_bigint_mod(&b, prime))
            })?;
            entries.push(val);
        }
    }
    Ok(det_mod_p(size, prime, entries))
}

/// In-place Gaussian elimination over `Z/p` (p prime).  `entries` is the
/// row-major matrix, consumed.
pub fn det_mod_p(n: usize, p: u64, mut entries: Vec<u64>) -> u64 {
    assert_eq!(entries.len(), n * n);
    if n == 0 {
        return 1 % p;
    }
    let mut det: u64 = 1 % p;
    let mut negate = false;
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| entries[r * n + k] % p != 0) {
            Some(r) => r,
            None => return 0,
        };
        if pivot_row != k {
            for j in 0..n {
                entries.swap(k * n + j, pivot_row * n + j);
            }
            negate = !negate;
        }
        let pivot = entries[k * n + k] % p;
        det = mul_mod(det, pivot, p);
        let pinv = inv_mod(pivot, p);
        for r in k + 1..n {
            let factor = mul_mod(entries[r * n + k] % p, pinv, p);
            if factor == 0 {
                continue;
            }
            for j in k..n {
                let sub = mul_mod(factor, entries[k * n + j] % p, p);
                let cell = &mut entries[r * n + j];
                *cell = (*cell % p + p - sub) % p;
            }
        }
    }
    if negate {
        (p - det) % p
    } else {
        det
    }
}
