//! Group matrices, group rings, and theta polynomials of representations.
//!
//! The central object is the *group matrix* of a weight: rows and columns
//! indexed by the group in enumeration order, entry `(u, v)` equal to
//! `weight(u v^{-1})`.  For the weights coming from factorization statistics
//! its determinant factors completely; this module builds the matrix (exact,
//! for groups small enough to afford symbolic Bareiss) or a compact table
//! driving modular evaluation at random points (for the larger groups).
//!
//! The theta polynomial of a square matrix `M` is `det(I - t M)`.  For a
//! representation `rho` and a basis `(g_1, ..., g_k)` with bounds
//! `(m_1, ..., m_k)`, the determinant contribution of `rho` is
//!
//! ```text
//! Delta_rho = prod_i (1 - x_i^{m_i})^{dim rho} / prod_i theta_{rho(g_i)}(x_i)
//! ```
//!
//! and the group-matrix determinant is the product of `Delta_rho^{dim rho}`
//! over the irreducibles.

use crate::formulas::{FactoredProduct, FormulaError};
use crate::groups::{element_index, order_of, orbit_sizes, FiniteGroup, Permutation};
use crate::matrix::{MatrixError, PermutationMatrix, RingMatrix};
use crate::poly::{cyclotomic, MultiPoly, PolyError, Var};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Largest group order for which the symbolic (exact Bareiss) pipeline is
/// attempted.  Chosen so the full symmetric group on four letters still runs
/// exactly; anything bigger goes through modular evaluation.
pub const SYMBOLIC_SIZE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReprError {
    #[error("group of order {size} exceeds the symbolic size limit {limit}")]
    TooLargeForSymbolic { size: usize, limit: usize },
    #[error("invalid rotation order d = {d} for the dihedral group of order 2*{n}: need d | n and d >= 3")]
    InvalidDivisor { n: usize, d: usize },
    #[error("exponent {num}/{den} is not an integer")]
    NonIntegerExponent { num: u128, den: u128 },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

// ---------------------------------------------------------------------------
// Group matrices
// ---------------------------------------------------------------------------

/// The symbolic group matrix `(weight(u v^{-1}))_{u,v}` in enumeration
/// order.  Fails with [`ReprError::TooLargeForSymbolic`] beyond
/// [`SYMBOLIC_SIZE_LIMIT`]; use [`RegularWeightTable`] there instead.
pub fn group_matrix<G, F>(group: &G, weight: F) -> Result<RingMatrix<MultiPoly>, ReprError>
where
    G: FiniteGroup,
    F: Fn(&G::Element) -> MultiPoly,
{
    if group.size() > SYMBOLIC_SIZE_LIMIT {
        return Err(ReprError::TooLargeForSymbolic {
            size: group.size(),
            limit: SYMBOLIC_SIZE_LIMIT,
        });
    }
    RegularWeightTable::new(group, weight).symbolic_matrix()
}

/// Precomputed data for evaluating a group-matrix determinant modulo a
/// prime: per-element weights and the index table of all quotients
/// `u v^{-1}`.  Building it is quadratic in `|G|` but happens once; each
/// evaluation point then costs one weight evaluation per element plus a
/// single Gaussian elimination.
pub struct RegularWeightTable {
    size: usize,
    weights: Vec<MultiPoly>,
    quot_index: Vec<u32>,
}

impl RegularWeightTable {
    pub fn new<G, F>(group: &G, weight: F) -> RegularWeightTable
    where
        G: FiniteGroup,
        F: Fn(&G::Element) -> MultiPoly,
    {
        let elements = group.enumerate();
        let size = elements.len();
        let index = element_index(group);
        let weights: Vec<MultiPoly> = elements.iter().map(&weight).collect();
        let inverses: Vec<G::Element> = elements.iter().map(|v| group.invert(v)).collect();
        let mut quot_index = Vec::with_capacity(size * size);
        for u in &elements {
            for vinv in &inverses {
                quot_index.push(index[&group.multiply(u, vinv)]);
            }
        }
        RegularWeightTable {
            size,
            weights,
            quot_index,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Materializes the symbolic group matrix, subject to the same size
    /// limit as [`group_matrix`].
    pub fn symbolic_matrix(&self) -> Result<RingMatrix<MultiPoly>, ReprError> {
        if self.size > SYMBOLIC_SIZE_LIMIT {
            return Err(ReprError::TooLargeForSymbolic {
                size: self.size,
                limit: SYMBOLIC_SIZE_LIMIT,
            });
        }
        Ok(RingMatrix::from_fn(self.size, self.size, |u, v| {
            self.weights[self.quot_index[u * self.size + v] as usize].clone()
        }))
    }

    /// All variables appearing in any weight, sorted.
    pub fn var_set(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.weights.iter().flat_map(|w| w.var_set()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Bound on the total degree of the determinant: the weight degrees are
    /// summed over one matching's worth of entries, so `size * max_deg`
    /// suffices.
    pub fn det_degree_bound(&self) -> u64 {
        let max_deg = self.weights.iter().map(|w| w.total_degree()).max();
        self.size as u64 * max_deg.unwrap_or(0)
    }

    /// Determinant of the group matrix at `point`, modulo `prime`.
    pub fn det_at_point(
        &self,
        point: &BTreeMap<Var, u64>,
        prime: u64,
    ) -> Result<u64, PolyError> {
        let values: Vec<u64> = self
            .weights
            .iter()
            .map(|w| w.eval_mod(point, prime))
            .collect::<Result<_, _>>()?;
        let entries: Vec<u64> = self
            .quot_index
            .iter()
            .map(|&i| values[i as usize])
            .collect();
        Ok(crate::matrix::det_mod_p(self.size, prime, entries))
    }
}

/// Permutation matrix of left multiplication by `g` on the enumeration of
/// `G` (the regular permutation representation).
pub fn left_multiplication_matrix<G: FiniteGroup>(
    group: &G,
    g: &G::Element,
) -> PermutationMatrix {
    let elements = group.enumerate();
    let index = element_index(group);
    let images: Vec<usize> = elements
        .iter()
        .map(|h| index[&group.multiply(g, h)] as usize)
        .collect();
    PermutationMatrix::from_images(images)
}

// ---------------------------------------------------------------------------
// Group rings
// ---------------------------------------------------------------------------

/// An element of the group ring `Z[vars][G]`: a finite formal sum of group
/// elements with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement<E: Ord + Clone> {
    terms: BTreeMap<E, MultiPoly>,
}

impl<E: Ord + Clone> GroupRingElement<E> {
    pub fn zero() -> GroupRingElement<E> {
        GroupRingElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(elem: E, coeff: MultiPoly) -> GroupRingElement<E> {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(elem, coeff);
        }
        GroupRingElement { terms }
    }

    pub fn identity<G: FiniteGroup<Element = E>>(group: &G) -> GroupRingElement<E> {
        GroupRingElement::term(group.identity(), MultiPoly::one())
    }

    pub fn coefficient(&self, elem: &E) -> MultiPoly {
        self.terms.get(elem).cloned().unwrap_or_else(MultiPoly::zero)
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&E, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &GroupRingElement<E>) -> GroupRingElement<E> {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(MultiPoly::zero);
            *entry = entry.add(c);
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        GroupRingElement { terms }
    }

    pub fn scale(&self, c: &MultiPoly) -> GroupRingElement<E> {
        if c.is_zero() {
            return GroupRingElement::zero();
        }
        GroupRingElement {
            terms: self
                .terms
                .iter()
                .map(|(e, p)| (e.clone(), p.mul(c)))
                .collect(),
        }
    }

    /// Convolution product: group parts multiply in `group`, coefficients in
    /// the polynomial ring.
    pub fn mul<G: FiniteGroup<Element = E>>(
        &self,
        other: &GroupRingElement<E>,
        group: &G,
    ) -> GroupRingElement<E> {
        let mut terms: BTreeMap<E, MultiPoly> = BTreeMap::new();
        for (a, pa) in &self.terms {
            for (b, pb) in &other.terms {
                let c = group.multiply(a, b);
                let prod = pa.mul(pb);
                let entry = terms.entry(c).or_insert_with(MultiPoly::zero);
                *entry = entry.add(&prod);
            }
        }
        terms.retain(|_, p| !p.is_zero());
        GroupRingElement { terms }
    }

    /// `1 + x g + x^2 g^2 + ... + x^{bound-1} g^{bound-1}`.
    pub fn geometric_sum<G: FiniteGroup<Element = E>>(
        group: &G,
        g: &E,
        var: Var,
        bound: usize,
    ) -> GroupRingElement<E> {
        let mut acc = GroupRingElement::zero();
        let mut power = group.identity();
        for c in 0..bound {
            acc = acc.add(&GroupRingElement::term(
                power.clone(),
                MultiPoly::var_pow(var, c as u32),
            ));
            power = group.multiply(&power, g);
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Theta polynomials
// ---------------------------------------------------------------------------

/// `det(I - t M)` for a permutation action with the given orbit sizes:
/// one factor `1 - t^{size}` per orbit.
pub fn theta_perm_rep(orbit_sizes: &[usize], var: Var) -> FactoredProduct {
    let mut fp = FactoredProduct::one();
    for &s in orbit_sizes {
        fp.push(MultiPoly::one_minus_var_pow(var, s as u32), 1);
    }
    fp.normalize()
}

/// Theta of `g` in the regular representation: left multiplication by `g`
/// splits `G` into `|G| / o(g)` cycles of length `o(g)`, so
/// `theta = (1 - t^{o(g)})^{|G|/o(g)}`.
pub fn theta_regular_element<G: FiniteGroup>(
    group: &G,
    g: &G::Element,
    var: Var,
) -> FactoredProduct {
    let o = order_of(group, g);
    FactoredProduct::from_factors(vec![(
        MultiPoly::one_minus_var_pow(var, o as u32),
        (group.size() / o) as u64,
    )])
}

/// One basis position inside a [`delta_general`] computation: the scalar
/// `1 - x_i^{m_i}` contributed by the geometric-sum telescoping, and the
/// theta polynomial of the represented generator in the same variable.
#[derive(Clone, Debug)]
pub struct DeltaSpec {
    pub base: MultiPoly,
    pub theta: FactoredProduct,
}

impl DeltaSpec {
    pub fn new(var: Var, bound: usize, theta: FactoredProduct) -> DeltaSpec {
        DeltaSpec {
            base: MultiPoly::one_minus_var_pow(var, bound as u32),
            theta,
        }
    }
}

/// `prod_i base_i^{dim} / prod_i theta_i`, as a factored product.
///
/// Cancellation is first attempted syntactically (equal bases); any
/// denominator factors that survive are divided out of the expansion of the
/// remaining numerator — exact by the underlying representation theory, and
/// an error if the inputs do not actually divide.
pub fn delta_general(dim: u64, specs: &[DeltaSpec]) -> Result<FactoredProduct, ReprError> {
    let mut numerator: Vec<(MultiPoly, u64)> = FactoredProduct::from_factors(
        specs.iter().map(|s| (s.base.clone(), dim)).collect(),
    )
    .normalize()
    .factors()
    .to_vec();
    let mut leftover: Vec<(MultiPoly, u64)> = Vec::new();
    let denominator = specs
        .iter()
        .fold(FactoredProduct::one(), |acc, s| acc.mul(&s.theta))
        .normalize();
    for (base, mut exp) in denominator.factors().iter().cloned() {
        if let Some((_, ne)) = numerator.iter_mut().find(|(nb, _)| *nb == base) {
            let cancel = exp.min(*ne);
            *ne -= cancel;
            exp -= cancel;
        }
        if exp > 0 {
            leftover.push((base, exp));
        }
    }
    numerator.retain(|(_, e)| *e > 0);
    if leftover.is_empty() {
        return Ok(FactoredProduct::from_factors(numerator).normalize());
    }
    // expand what remains of the numerator and divide the leftovers out
    let mut quotient = FactoredProduct::from_factors(numerator).expand()?;
    for (base, exp) in leftover {
        for _ in 0..exp {
            quotient = quotient.exact_div(&base)?;
        }
    }
    Ok(FactoredProduct::from_factors(vec![(quotient, 1)]).normalize())
}

/// Closed form of the regular-representation determinant for a *perfect*
/// basis with bounds `(m_1, ..., m_k)`:
/// `prod_i (1 - x_i^{m_i})^{|G| (m_i - 1) / m_i}`.
///
/// Fails with [`ReprError::NonIntegerExponent`] when an exponent is not an
/// integer — which cannot happen for an actual perfect basis, since each
/// `m_i` is then an element order and divides `|G|`.
pub fn delta_regular_closed(
    bounds: &[(Var, usize)],
    group_order: usize,
) -> Result<FactoredProduct, ReprError> {
    let mut fp = FactoredProduct::one();
    for &(var, m) in bounds {
        let num = group_order as u128 * (m as u128 - 1);
        let den = m as u128;
        if num % den != 0 {
            return Err(ReprError::NonIntegerExponent { num, den });
        }
        fp.push(MultiPoly::one_minus_var_pow(var, m as u32), (num / den) as u64);
    }
    Ok(fp)
}

// ---------------------------------------------------------------------------
// The defining representation of the symmetric group
// ---------------------------------------------------------------------------

/// The `n x n` matrix with entry `(i, j) = sum of q^{maj(w)}` over the
/// permutations sending `i` to `j` (1-based positions, 0-based indices
/// here).  This is the group matrix collapsed along the defining action.
pub fn defining_matrix(n: usize) -> RingMatrix<MultiPoly> {
    let group = crate::groups::SymmetricGroup::new(n);
    let mut entries = vec![MultiPoly::zero(); n * n];
    for w in group.enumerate() {
        let q_maj = MultiPoly::var_pow(Var::Q, w.maj() as u32);
        for i in 1..=n {
            let j = w.apply_one_based(i);
            let cell = &mut entries[(i - 1) * n + (j - 1)];
            *cell = cell.add(&q_maj);
        }
    }
    RingMatrix::from_fn(n, n, |i, j| entries[i * n + j].clone())
}

// ---------------------------------------------------------------------------
// Rational irreducibles of the dihedral group
// ---------------------------------------------------------------------------

/// The rational irreducible of the dihedral group of order `2n` attached to
/// a divisor `d >= 3` of `n`: the rotation acts as the companion matrix of
/// the `d`-th cyclotomic polynomial, the reflection as the exchange matrix.
/// Dimension is `phi(d)`, and the theta polynomials of the two generators
/// come out in closed form.
#[derive(Debug)]
pub struct DihedralIrrep {
    n: usize,
    d: usize,
    rho_g1: RingMatrix<BigInt>,
    rho_g2: RingMatrix<BigInt>,
}

pub fn dihedral_irrep(n: usize, d: usize) -> Result<DihedralIrrep, ReprError> {
    if d < 3 || n % d != 0 {
        return Err(ReprError::InvalidDivisor { n, d });
    }
    let phi = cyclotomic(d as u32, Var::Q);
    let coeffs = crate::poly::dense_coeffs(&phi, Var::Q);
    let ell = coeffs.len() - 1;
    // companion matrix of the monic phi: shifts basis vectors, last column
    // holds the negated low coefficients
    let rho_g1 = RingMatrix::from_fn(ell, ell, |i, j| {
        if j + 1 == ell {
            -coeffs[i].clone()
        } else if i == j + 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    let rho_g2 = RingMatrix::from_fn(ell, ell, |i, j| {
        if i + j + 1 == ell {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    Ok(DihedralIrrep {
        n,
        d,
        rho_g1,
        rho_g2,
    })
}

impl DihedralIrrep {
    pub fn dim(&self) -> usize {
        self.rho_g1.rows()
    }

    /// Degree of the dihedral group this irreducible belongs to.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rho_g1(&self) -> &RingMatrix<BigInt> {
        &self.rho_g1
    }

    pub fn rho_g2(&self) -> &RingMatrix<BigInt> {
        &self.rho_g2
    }

    /// Image of an arbitrary element in normal form `g1^rot g2^refl`.
    pub fn image(&self, rot: usize, refl: usize) -> RingMatrix<BigInt> {
        let mut acc = RingMatrix::identity(self.dim());
        for _ in 0..rot {
            acc = acc.matmul(&self.rho_g1).expect("square");
        }
        for _ in 0..refl {
            acc = acc.matmul(&self.rho_g2).expect("square");
        }
        acc
    }

    /// `det(I - q rho(g1))`: the reversed coefficient sequence of the
    /// cyclotomic polynomial, which is palindromic for `d >= 3`, so this is
    /// the cyclotomic polynomial itself in `q`.
    pub fn theta_g1(&self) -> MultiPoly {
        let phi = cyclotomic(self.d as u32, Var::Q);
        let coeffs = crate::poly::dense_coeffs(&phi, Var::Q);
        let ell = coeffs.len() - 1;
        let mut acc = MultiPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            acc = acc.add(&MultiPoly::from_monomial(
                crate::poly::Monomial::var_pow(Var::Q, (ell - k) as u32),
                c.clone(),
            ));
        }
        acc
    }

    /// `det(I - q rho(g2))` for the exchange matrix: eigenvalues come in
    /// `+1/-1` pairs, one per swapped coordinate pair.
    pub fn theta_g2(&self) -> FactoredProduct {
        let ell = self.dim();
        let mut fp = FactoredProduct::one();
        fp.push(MultiPoly::one_minus_var_pow(Var::Q, 2), (ell / 2) as u64);
        if ell % 2 == 1 {
            fp.push(MultiPoly::one_minus_var_pow(Var::Q, 1), 1);
        }
        fp
    }
}

// ---------------------------------------------------------------------------
// The action on unordered pairs
// ---------------------------------------------------------------------------

/// All 2-element subsets of `{1, ..., n}` as ordered pairs `i < j`, in
/// lexicographic order.
pub fn two_subsets(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

/// Sorted orbit sizes of the cycle `t_k = (k, k-1, ..., 1)` acting on the
/// 2-subsets of `{1, ..., n}`.
pub fn pairs_orbit_sizes(n: usize, k: usize) -> Vec<usize> {
    let group = crate::groups::SymmetricGroup::new(n);
    let t = Permutation::cycle(k, n);
    let points = two_subsets(n);
    orbit_sizes(&group, &t, &points, |g, &(i, j)| {
        let a = g.apply_one_based(i);
        let b = g.apply_one_based(j);
        (a.min(b), a.max(b))
    })
}

/// Closed form for the theta polynomial of `t_k` on 2-subsets of
/// `{1, ..., n}`: fixed pairs inside the untouched tail give `(1-q)`
/// factors, mixed pairs give full `k`-orbits, and pairs inside the cycle
/// give `k`-orbits except for one halved orbit (antipodal pairs) when `k`
/// is even.
pub fn pairs_theta_formula(n: usize, k: usize, var: Var) -> FactoredProduct {
    let fixed = (n - k) * n.saturating_sub(k + 1) / 2;
    let mut fp = FactoredProduct::one();
    fp.push(MultiPoly::one_minus_var_pow(var, 1), fixed as u64);
    let full_orbits = if k % 2 == 1 {
        n - k + (k - 1) / 2
    } else {
        n - k + (k - 2) / 2
    };
    fp.push(MultiPoly::one_minus_var_pow(var, k as u32), full_orbits as u64);
    if k % 2 == 0 {
        fp.push(MultiPoly::one_minus_var_pow(var, (k / 2) as u32), 1);
    }
    fp.normalize()
}
