//! Ordered generating sequences with the unique-factorization property.
//!
//! A sequence `(g_1, ..., g_k)` with bounds `(m_1, ..., m_k)` is a *basis*
//! of `G` when every element factors uniquely as `g_1^{c_1} ... g_k^{c_k}`
//! with `0 <= c_i < m_i`.  The basis is *perfect* when each `m_i` is the
//! order of `g_i`.  This module verifies the property by enumeration and
//! implements the factorization maps for the concrete families used by the
//! determinant identities; each map carries a statistic: the exponents sum
//! to the major index (or its colored/signed analogue) of the element.

use crate::colored::ColoredPermutation;
use crate::groups::{
    order_of, power, DihedralElement, DihedralGroup, FiniteGroup, Permutation,
};
use crate::signed::SignedPermutation;
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasisError {
    #[error("bound product {product} does not match group order {group_order}")]
    CardinalityMismatch { product: usize, group_order: usize },
    #[error("{elements} elements but {bounds} bounds")]
    LengthMismatch { elements: usize, bounds: usize },
}

/// An ordered candidate basis: elements paired with exponent bounds.
#[derive(Clone, Debug)]
pub struct BasisSpec<E> {
    pub elements: Vec<E>,
    pub bounds: Vec<usize>,
}

impl<E> BasisSpec<E> {
    pub fn new(elements: Vec<E>, bounds: Vec<usize>) -> BasisSpec<E> {
        assert_eq!(elements.len(), bounds.len());
        BasisSpec { elements, bounds }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bound_product(&self) -> usize {
        self.bounds.iter().product()
    }
}

/// Exponent tuples `(c_1, ..., c_k)` with `0 <= c_i < m_i`, in mixed-radix
/// counting order (last coordinate fastest).
pub fn exponent_tuples(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(bounds.iter().product());
    let mut current = vec![0; bounds.len()];
    loop {
        out.push(current.clone());
        let mut pos = bounds.len();
        loop {
            if pos == 0 {
                return out;
            }
            current[pos - 1] += 1;
            if current[pos - 1] < bounds[pos - 1] {
                break;
            }
            current[pos - 1] = 0;
            pos -= 1;
        }
    }
}

/// `g_1^{c_1} * ... * g_k^{c_k}` in the basis order.
pub fn compose_exponents<G: FiniteGroup>(
    group: &G,
    spec: &BasisSpec<G::Element>,
    exps: &[usize],
) -> G::Element {
    assert_eq!(exps.len(), spec.len());
    let mut acc = group.identity();
    for (g, &c) in spec.elements.iter().zip(exps) {
        acc = group.multiply(&acc, &power(group, g, c));
    }
    acc
}

/// Checks the unique-factorization property by full enumeration.
///
/// Errors when the bound product cannot possibly match `|G|`; otherwise
/// returns whether the exponent map is a bijection onto `G`.
pub fn verify_basis<G: FiniteGroup>(
    group: &G,
    spec: &BasisSpec<G::Element>,
) -> Result<bool, BasisError> {
    if spec.elements.len() != spec.bounds.len() {
        return Err(BasisError::LengthMismatch {
            elements: spec.elements.len(),
            bounds: spec.bounds.len(),
        });
    }
    let product = spec.bound_product();
    if product != group.size() {
        return Err(BasisError::CardinalityMismatch {
            product,
            group_order: group.size(),
        });
    }
    let mut seen = HashSet::with_capacity(product);
    for exps in exponent_tuples(&spec.bounds) {
        if !seen.insert(compose_exponents(group, spec, &exps)) {
            return Ok(false);
        }
    }
    Ok(seen.len() == group.size())
}

/// Whether every bound equals the order of its element.
pub fn is_perfect<G: FiniteGroup>(group: &G, spec: &BasisSpec<G::Element>) -> bool {
    spec.elements
        .iter()
        .zip(&spec.bounds)
        .all(|(g, &m)| order_of(group, g) == m)
}

// ---------------------------------------------------------------------------
// Concrete families
// ---------------------------------------------------------------------------

/// `(t_n, t_{n-1}, ..., t_2)` in `S_n` with bounds `(n, n-1, ..., 2)`.
pub fn sym_basis(n: usize) -> BasisSpec<Permutation> {
    let elements = (2..=n).rev().map(|k| Permutation::cycle(k, n)).collect();
    let bounds = (2..=n).rev().collect();
    BasisSpec { elements, bounds }
}

/// `(t~_n, ..., t~_1)` in `Z_m wr S_n` with bounds `(mn, ..., m)`.
pub fn colored_basis(n: usize, m: u32) -> BasisSpec<ColoredPermutation> {
    let elements = (1..=n)
        .rev()
        .map(|k| ColoredPermutation::t_tilde(k, n, m))
        .collect();
    let bounds = (1..=n).rev().map(|k| m as usize * k).collect();
    BasisSpec { elements, bounds }
}

/// `(t_n, ..., t_2, y^{(1)}, ..., y^{(n)})` in `Z_m wr S_n`: the uncolored
/// descending cycles followed by the one-bar color generators
/// `y^{(j)} = (id, e_j)`.  Bounds `(n, ..., 2, m, ..., m)`.
pub fn amaj_basis(n: usize, m: u32) -> BasisSpec<ColoredPermutation> {
    let mut elements: Vec<ColoredPermutation> = (2..=n)
        .rev()
        .map(|k| {
            ColoredPermutation::new(Permutation::cycle(k, n), vec![0; n], m).unwrap()
        })
        .collect();
    let mut bounds: Vec<usize> = (2..=n).rev().collect();
    for j in 1..=n {
        let mut colors = vec![0; n];
        if m > 1 {
            colors[j - 1] = 1;
        }
        elements.push(ColoredPermutation::new(Permutation::identity(n), colors, m).unwrap());
        bounds.push(m as usize);
    }
    BasisSpec { elements, bounds }
}

/// `(s_1, ..., s_n, u_n, ..., u_2)` in `B_n` with bounds
/// `(2, ..., 2, n, ..., 2)`.  A basis, but not perfect for `n >= 2`: the
/// bound on `s_k` is 2 while its order is `2k`.
pub fn signed_basis(n: usize) -> BasisSpec<SignedPermutation> {
    let mut elements: Vec<SignedPermutation> =
        (1..=n).map(|k| SignedPermutation::s_gen(k, n)).collect();
    let mut bounds = vec![2; n];
    for k in (2..=n).rev() {
        elements.push(SignedPermutation::u_gen(k, n));
        bounds.push(k);
    }
    BasisSpec { elements, bounds }
}

/// `(g_1, g_2)` in the dihedral group of order `2n`, bounds `(n, 2)`.
pub fn dihedral_basis(d: &DihedralGroup) -> BasisSpec<DihedralElement> {
    BasisSpec {
        elements: vec![d.g1(), d.g2()],
        bounds: vec![d.degree(), 2],
    }
}

// ---------------------------------------------------------------------------
// Factorization maps
// ---------------------------------------------------------------------------

/// Exponents `(c_n, ..., c_2)` of `w = t_n^{c_n} ... t_2^{c_2}`.
///
/// Peels top cycles: `c_k` is forced by where `w` sends `k`, because
/// `t_k^{-c} w` must fix `k`.  The exponents sum to `maj(w)`.
pub fn factor_sym(w: &Permutation) -> Vec<usize> {
    let n = w.n();
    let mut current = w.clone();
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for k in (2..=n).rev() {
        let c = (k - current.apply_one_based(k)) % k;
        let tk_inv_c = power_of_cycle_inverse(k, n, c);
        current = tk_inv_c.compose(&current);
        debug_assert_eq!(current.apply_one_based(k), k);
        out.push(c);
    }
    debug_assert_eq!(current, Permutation::identity(n));
    out
}

/// `t_k^{-c}` inside `S_n` without repeated composition.
fn power_of_cycle_inverse(k: usize, n: usize, c: usize) -> Permutation {
    // t_k^{-1} sends j -> j + 1 cyclically within [k]
    Permutation::from_one_line(
        &(1..=n)
            .map(|j| if j <= k { (j - 1 + c) % k + 1 } else { j })
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

/// Exponents `(c_n, ..., c_1)` of `g = t~_n^{c_n} ... t~_1^{c_1}`.
///
/// `c_k` is the unique power of `t~_k` whose colored letter in position `k`
/// matches the current remainder's; the exponents satisfy
/// `fmaj(g) = sum_k c_k`.
pub fn factor_colored(g: &ColoredPermutation) -> Vec<usize> {
    let n = g.n();
    let m = g.m();
    let group = crate::colored::ColoredGroup::new(n, m.max(1));
    let mut current = g.clone();
    let mut out = Vec::with_capacity(n);
    for k in (2..=n).rev() {
        let t = ColoredPermutation::t_tilde(k, n, m);
        let order = m as usize * k;
        let target = current.letter(k);
        let c = (0..order)
            .find(|&c| {
                let p = power(&group, &t, c);
                let l = p.letter(k);
                l.value == target.value && l.color == target.color
            })
            .expect("every residual letter is hit by exactly one power");
        current = power(&group, &t, order - c).multiply(&current);
        debug_assert_eq!(current.letter(k).value, k);
        debug_assert_eq!(current.letter(k).color, 0);
        out.push(c);
    }
    // what is left is t~_1^{c_1} = (id, (c_1, 0, ..., 0))
    debug_assert_eq!(current.permutation(), &Permutation::identity(n));
    debug_assert!(current.colors()[1..].iter().all(|&c| c == 0));
    out.push(current.colors()[0] as usize);
    out
}

/// Factorization of a signed permutation over
/// `(s_1, ..., s_n, u_n, ..., u_2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedFactorization {
    /// `(d_1, ..., d_n)`, each 0 or 1: `d_i = 1` iff the value `i` is
    /// negative.
    pub d: Vec<usize>,
    /// `(c_n, ..., c_2)`: symmetric-group exponents of the unsorted part;
    /// they sum to `maj_A(g)`.
    pub c: Vec<usize>,
}

/// Splits `g = (ε, w)` as `h · (1, v)` where `h` sorts the signed letters
/// ascending (so `h` is the unique element of its sign pattern with
/// `maj_A = 0`), then factors `v = u^{-1} w` through [`factor_sym`].
pub fn factor_signed(g: &SignedPermutation) -> SignedFactorization {
    let n = g.n();
    let d: Vec<usize> = (1..=n)
        .map(|v| usize::from(g.sign_of_value(v) < 0))
        .collect();
    // sort the signed values; u(i) = |i-th smallest signed letter|
    let mut letters: Vec<i64> = (1..=n)
        .map(|v| g.sign_of_value(v) as i64 * v as i64)
        .collect();
    letters.sort_unstable();
    let u = Permutation::from_one_line(
        &letters.iter().map(|&s| s.unsigned_abs() as usize).collect::<Vec<_>>(),
    )
    .expect("absolute values of signed letters form a permutation");
    let v = u.inverse().compose(g.permutation());
    SignedFactorization {
        d,
        c: factor_sym(&v),
    }
}

/// Exponents over the alternating-major basis: `(c_n, ..., c_2)` from the
/// underlying permutation and `(d_1, ..., d_n)` the color vector itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmajFactorization {
    pub c: Vec<usize>,
    pub d: Vec<usize>,
}

pub fn factor_amaj(g: &ColoredPermutation) -> AmajFactorization {
    AmajFactorization {
        c: factor_sym(g.permutation()),
        d: g.colors().iter().map(|&c| c as usize).collect(),
    }
}

/// Normal-form exponents `(c_1, c_2)` over the dihedral basis `(g_1, g_2)`.
pub fn factor_dihedral(h: &DihedralElement) -> (usize, usize) {
    (h.rot, h.refl as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::{parse_colored, ColoredGroup};
    use crate::groups::SymmetricGroup;
    use crate::signed::{parse_signed, SignedGroup};

    #[test]
    fn sym_factorization_examples() {
        let w: Permutation = "132".parse().unwrap();
        assert_eq!(factor_sym(&w), vec![1, 1]);
        let w: Permutation = "314652".parse().unwrap();
        assert_eq!(factor_sym(&w), vec![4, 2, 3, 0, 1]);
        assert_eq!(factor_sym(&Permutation::identity(4)), vec![0, 0, 0]);
    }

    #[test]
    fn sym_factor_recompose_and_maj_exhaustive() {
        for n in 1..=6 {
            let group = SymmetricGroup::new(n);
            let spec = sym_basis(n);
            for w in group.enumerate() {
                let c = factor_sym(&w);
                assert_eq!(c.iter().sum::<usize>(), w.maj(), "maj of {w}");
                assert_eq!(compose_exponents(&group, &spec, &c), w);
            }
        }
    }

    #[test]
    fn sym_basis_is_perfect_and_bijective() {
        for n in 2..=5 {
            let group = SymmetricGroup::new(n);
            let spec = sym_basis(n);
            assert!(is_perfect(&group, &spec));
            assert_eq!(verify_basis(&group, &spec), Ok(true));
        }
    }

    #[test]
    fn s3_cycle_generator_basis_product_table() {
        // basis ((123), (12)) with bounds (3, 2): the product table in
        // normal order g_1^{c_1} g_2^{c_2}
        let group = SymmetricGroup::new(3);
        let g1: Permutation = "231".parse().unwrap(); // the 3-cycle 1->2->3->1
        let g2: Permutation = "213".parse().unwrap(); // the transposition (12)
        let spec = BasisSpec::new(vec![g1, g2], vec![3, 2]);
        assert!(is_perfect(&group, &spec));
        assert_eq!(verify_basis(&group, &spec), Ok(true));
        let expect = [
            ((0, 0), "123"),
            ((0, 1), "213"),
            ((1, 0), "231"),
            ((1, 1), "321"),
            ((2, 0), "312"),
            ((2, 1), "132"),
        ];
        for ((c1, c2), one_line) in expect {
            assert_eq!(
                compose_exponents(&group, &spec, &[c1, c2]).to_string(),
                one_line,
                "g1^{c1} g2^{c2}"
            );
        }
    }

    #[test]
    fn cardinality_mismatch_is_an_error_not_a_false() {
        let group = SymmetricGroup::new(3);
        let spec = BasisSpec::new(
            vec![Permutation::cycle(3, 3), Permutation::cycle(3, 3)],
            vec![3, 3],
        );
        assert_eq!(
            verify_basis(&group, &spec),
            Err(BasisError::CardinalityMismatch {
                product: 9,
                group_order: 6
            })
        );
    }

    #[test]
    fn non_basis_with_matching_cardinality_returns_false() {
        // (identity, t_2) with bounds (3, 2) multiplies out to only 2
        // distinct elements
        let group = SymmetricGroup::new(3);
        let spec = BasisSpec::new(
            vec![Permutation::identity(3), Permutation::cycle(2, 3)],
            vec![3, 2],
        );
        assert_eq!(verify_basis(&group, &spec), Ok(false));
    }

    #[test]
    fn colored_factorization_worked_example() {
        let g = parse_colored("1'34''2'", 3).unwrap();
        assert_eq!(factor_colored(&g), vec![6, 1, 2, 1]);
        assert_eq!(g.fmaj(), 6 + 1 + 2 + 1);
    }

    #[test]
    fn colored_factor_recompose_and_fmaj_exhaustive() {
        for (n, m) in [(1usize, 2u32), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let group = ColoredGroup::new(n, m);
            let spec = colored_basis(n, m);
            assert!(is_perfect(&group, &spec));
            assert_eq!(verify_basis(&group, &spec), Ok(true));
            for g in group.enumerate() {
                let c = factor_colored(&g);
                assert_eq!(c.iter().sum::<usize>(), g.fmaj(), "fmaj of {g}");
                assert_eq!(compose_exponents(&group, &spec, &c), g);
            }
        }
    }

    #[test]
    fn amaj_factor_recompose_exhaustive() {
        for (n, m) in [(2usize, 2u32), (2, 3), (3, 2)] {
            let group = ColoredGroup::new(n, m);
            let spec = amaj_basis(n, m);
            assert!(is_perfect(&group, &spec));
            assert_eq!(verify_basis(&group, &spec), Ok(true));
            for g in group.enumerate() {
                let f = factor_amaj(&g);
                assert_eq!(f.c.iter().sum::<usize>(), g.amaj());
                assert_eq!(f.d.iter().sum::<usize>(), g.col());
                let exps: Vec<usize> =
                    f.c.iter().copied().chain(f.d.iter().copied()).collect();
                assert_eq!(compose_exponents(&group, &spec, &exps), g);
            }
        }
    }

    #[test]
    fn signed_factorization_worked_example() {
        let g = parse_signed("2'143'").unwrap();
        let f = factor_signed(&g);
        assert_eq!(f.d, vec![0, 1, 1, 0]);
        assert_eq!(f.c, vec![3, 0, 0]);
        assert_eq!(f.c.iter().sum::<usize>(), g.maj_a());
    }

    #[test]
    fn signed_factor_recompose_and_maj_a_exhaustive() {
        for n in 1..=4 {
            let group = SignedGroup::new(n);
            let spec = signed_basis(n);
            assert_eq!(verify_basis(&group, &spec), Ok(true));
            // not perfect for n >= 2: bound 2 on s_k of order 2k
            assert_eq!(is_perfect(&group, &spec), n < 2);
            for g in group.enumerate() {
                let f = factor_signed(&g);
                assert_eq!(f.c.iter().sum::<usize>(), g.maj_a(), "maj_A of {g}");
                assert_eq!(
                    f.d,
                    (1..=n)
                        .map(|v| usize::from(g.sign_of_value(v) < 0))
                        .collect::<Vec<_>>()
                );
                let exps: Vec<usize> =
                    f.d.iter().copied().chain(f.c.iter().copied()).collect();
                assert_eq!(compose_exponents(&group, &spec, &exps), g);
            }
        }
    }

    #[test]
    fn dihedral_basis_bijective_up_to_n8() {
        for n in 3..=8 {
            let d = DihedralGroup::new(n);
            let spec = dihedral_basis(&d);
            assert!(is_perfect(&d, &spec));
            assert_eq!(verify_basis(&d, &spec), Ok(true));
            for h in d.enumerate() {
                let (c1, c2) = factor_dihedral(&h);
                assert_eq!(compose_exponents(&d, &spec, &[c1, c2]), h);
            }
        }
    }
}
