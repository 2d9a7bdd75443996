//! Partitions, standard Young tableaux, and theta polynomials of the
//! irreducible representations of the symmetric group.
//!
//! The eigenvalues of a full cycle in the irreducible indexed by a partition
//! `lambda` are roots of unity whose exponents are read off the standard
//! tableaux of shape `lambda`: each tableau contributes the sum, modulo `n`,
//! of its descent positions weighted by the `b`-vector of the cycle type.
//! Theta polynomials of shorter cycles follow by the branching rule, and the
//! per-irreducible determinant factor `Delta_lambda` by dividing the theta
//! product out of `prod (1 - q^k)^{dim}`.

use crate::formulas::FactoredProduct;
use crate::poly::{CycloElement, Monomial, MultiPoly, PolyError, Var};
use crate::repr::{delta_general, DeltaSpec, ReprError};
use num_integer::Integer;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauxError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("theta of {lambda} has a non-integer coefficient at degree {degree}")]
    NonIntegerResult { lambda: Partition, degree: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Repr(#[from] ReprError),
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition, TableauxError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(TableauxError::InvalidPartition(
                "parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauxError::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Partitions obtained by removing one corner cell — the shapes whose
    /// irreducibles appear when restricting to the next smaller symmetric
    /// group.
    pub fn predecessors(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            let removable =
                i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1];
            if !removable {
                continue;
            }
            let mut parts = self.parts.clone();
            parts[i] -= 1;
            if parts[i] == 0 {
                parts.remove(i);
            }
            out.push(Partition { parts });
        }
        out
    }

    /// Dimension of the associated irreducible: the number of standard
    /// tableaux, by the hook length formula.
    pub fn dimension(&self) -> usize {
        let n = self.size();
        let conj = self.conjugate();
        let mut num: u128 = (1..=n as u128).product();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j) + (conj.parts[j] - i) - 1;
                num /= hook as u128;
            }
        }
        num as usize
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl FromStr for Partition {
    type Err = TableauxError;

    /// Accepts `4,2,1` or `[4,2,1]`.
    fn from_str(s: &str) -> Result<Partition, TableauxError> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
        if trimmed.is_empty() {
            return Err(TableauxError::InvalidPartition("empty".into()));
        }
        let parts = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| TableauxError::InvalidPartition(format!("'{p}': {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, from `[n]` down to `[1, ..., 1]` in descending
/// lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A standard Young tableau: rows of the shape filled with `1..=n`,
/// increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(|r| r.len()).collect(),
        }
    }

    /// Descents: the values `k` such that `k + 1` sits in a strictly lower
    /// row than `k`.
    pub fn descents(&self) -> Vec<usize> {
        let n = self.size();
        let mut row_of = vec![0usize; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = r;
            }
        }
        (1..n).filter(|&k| row_of[k + 1] > row_of[k]).collect()
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }
}

/// All standard tableaux of the given shape, by backtracking insertion of
/// `1..=n`.  Deterministic order.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.size();
    let mut fills: Vec<Vec<usize>> = shape.parts().iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fn place(
        value: usize,
        n: usize,
        shape: &[usize],
        fills: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if value > n {
            out.push(StandardTableau {
                rows: fills.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let len = fills[r].len();
            if len == shape[r] {
                continue;
            }
            // column-strictness: the cell above must already be filled
            if r > 0 && fills[r - 1].len() <= len {
                continue;
            }
            fills[r].push(value);
            place(value + 1, n, shape, fills, out);
            fills[r].pop();
        }
    }
    place(1, n, shape.parts(), &mut fills, &mut out);
    out
}

/// The index vector of a cycle type `mu`: with `m = lcm(mu)`, each part
/// `mu_j` contributes the arithmetic progression
/// `m/mu_j, 2m/mu_j, ..., m`, concatenated in order of the parts.
pub fn b_vector(mu: &Partition) -> (Vec<usize>, usize) {
    let m = mu.parts().iter().fold(1usize, |acc, &p| acc.lcm(&p));
    let mut b = Vec::with_capacity(mu.size());
    for &part in mu.parts() {
        let step = m / part;
        for k in 1..=part {
            b.push(k * step);
        }
    }
    (b, m)
}

/// The cyclic index of a tableau with respect to a cycle type: the sum of
/// `b_mu` over the descent positions, modulo `lcm(mu)`.
pub fn ind_mu(t: &StandardTableau, mu: &Partition) -> usize {
    let (b, m) = b_vector(mu);
    t.descents().iter().map(|&k| b[k - 1]).sum::<usize>() % m
}

/// The multiset (sorted) of cyclic indices of all standard tableaux of shape
/// `lambda` with respect to `mu`.  For `mu = (n)` these are the exponents of
/// the eigenvalue roots of unity of the full cycle in the irreducible
/// `lambda`.
pub fn cyclic_exponents(lambda: &Partition, mu: &Partition) -> Vec<usize> {
    let mut out: Vec<usize> = standard_tableaux(lambda)
        .iter()
        .map(|t| ind_mu(t, mu))
        .collect();
    out.sort_unstable();
    out
}

/// `det(I - q rho_lambda(t_n))` for `n = |lambda|`: the product of
/// `(1 - q w^e)` over the cyclic exponents, computed in `Z[x]/Phi_n` and
/// certified integral coefficient by coefficient.
pub fn theta_irrep_cycle(lambda: &Partition) -> Result<MultiPoly, TableauxError> {
    let n = lambda.size();
    let m = n as u32;
    let mu = Partition::new(vec![n])?;
    let exps = cyclic_exponents(lambda, &mu);
    let mut coeffs: Vec<CycloElement> = vec![CycloElement::one(m)];
    for e in exps {
        let w = CycloElement::root_power(m, e as u32);
        let mut next = Vec::with_capacity(coeffs.len() + 1);
        for k in 0..=coeffs.len() {
            let mut term = if k < coeffs.len() {
                coeffs[k].clone()
            } else {
                CycloElement::zero(m)
            };
            if k > 0 {
                term = term.sub(&w.mul(&coeffs[k - 1])?)?;
            }
            next.push(term);
        }
        coeffs = next;
    }
    let mut out = MultiPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let int = c.as_int().ok_or_else(|| TableauxError::NonIntegerResult {
            lambda: lambda.clone(),
            degree: k,
        })?;
        if !num_traits::Zero::is_zero(&int) {
            out = out.add(&MultiPoly::from_monomial(
                Monomial::var_pow(Var::Q, k as u32),
                int,
            ));
        }
    }
    Ok(out)
}

/// `det(I - q rho_lambda(t_i))` for any `1 <= i <= |lambda|`, by branching:
/// restricting to the subgroup containing `t_i` splits the irreducible into
/// the irreducibles of the predecessor shapes, so the theta polynomial is
/// the product over predecessors, recursively down to `|shape| = i`.
pub fn theta_irrep_branch(lambda: &Partition, i: usize) -> Result<MultiPoly, TableauxError> {
    assert!(
        (1..=lambda.size()).contains(&i),
        "cycle length {i} out of range for {lambda}"
    );
    fn go(
        shape: &Partition,
        i: usize,
        memo: &mut HashMap<Partition, MultiPoly>,
    ) -> Result<MultiPoly, TableauxError> {
        if let Some(hit) = memo.get(shape) {
            return Ok(hit.clone());
        }
        let result = if shape.size() == i {
            theta_irrep_cycle(shape)?
        } else {
            let mut acc = MultiPoly::one();
            for eta in shape.predecessors() {
                acc = acc.mul(&go(&eta, i, memo)?);
            }
            acc
        };
        memo.insert(shape.clone(), result.clone());
        Ok(result)
    }
    go(lambda, i, &mut HashMap::new())
}

/// The per-irreducible factor of the group-matrix determinant:
/// `Delta_lambda = prod_{k=2}^{n} (1 - q^k)^{dim lambda} / prod_{k=2}^{n}
/// theta(t_k)`.  The division is exact.
pub fn delta_irrep(lambda: &Partition) -> Result<FactoredProduct, TableauxError> {
    let n = lambda.size();
    let dim = lambda.dimension() as u64;
    let mut specs = Vec::with_capacity(n.saturating_sub(1));
    for k in (2..=n).rev() {
        let theta = theta_irrep_branch(lambda, k)?;
        specs.push(DeltaSpec::new(
            Var::Q,
            k,
            FactoredProduct::from_factors(vec![(theta, 1)]),
        ));
    }
    Ok(delta_general(dim, &specs)?)
}

/// Closed form of `Delta` for the near-row shape `[n-1, 1]`:
/// `([n]_q!)^{n-2} (1 - q)^{binom(n, 2)}`.
pub fn delta_hook_closed(n: usize) -> FactoredProduct {
    let mut fp = crate::formulas::q_factorial_factored(n, Var::Q).pow(n as u64 - 2);
    fp.push(
        MultiPoly::one_minus_var_pow(Var::Q, 1),
        (n * (n - 1) / 2) as u64,
    );
    fp.normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{fp_equal, q_int, rhs_maj, EqualityMode};
    use crate::poly::dense_coeffs;
    use num_bigint::BigInt;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn qp(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn partition_construction_and_parsing() {
        assert_eq!(pt("4,2,1").parts(), &[4, 2, 1]);
        assert_eq!(pt("[3,3]").parts(), &[3, 3]);
        assert_eq!(pt("5").to_string(), "[5]");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert_eq!(pt("4,2,1").size(), 7);
        assert_eq!(pt("4,2,1").conjugate().parts(), &[3, 2, 1, 1]);
    }

    #[test]
    fn partition_counts_match_the_partition_numbers() {
        let p: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(p, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        let of_four: Vec<String> = partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(of_four, vec!["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
    }

    #[test]
    fn predecessors_remove_single_corners() {
        assert_eq!(pt("2,2").predecessors(), vec![pt("2,1")]);
        assert_eq!(pt("3,1").predecessors(), vec![pt("2,1"), pt("3")]);
        assert_eq!(
            pt("4,2,1").predecessors(),
            vec![pt("3,2,1"), pt("4,1,1"), pt("4,2")]
        );
        // removing the single cell of [1] leaves the empty shape
        assert_eq!(pt("1").predecessors(), vec![Partition::new(vec![]).unwrap()]);
    }

    #[test]
    fn dimension_matches_tableau_count() {
        for n in 1..=7 {
            let mut sum_sq = 0usize;
            for lambda in partitions(n) {
                let dim = lambda.dimension();
                assert_eq!(
                    dim,
                    standard_tableaux(&lambda).len(),
                    "hook formula vs enumeration for {lambda}"
                );
                // branching: dim = sum over predecessors
                if n > 1 {
                    let branched: usize =
                        lambda.predecessors().iter().map(|p| p.dimension()).sum();
                    assert_eq!(dim, branched);
                }
                sum_sq += dim * dim;
            }
            assert_eq!(sum_sq, (1..=n).product::<usize>(), "sum of dim^2 = n!");
        }
    }

    #[test]
    fn tableau_descents_for_two_by_two() {
        let ts = standard_tableaux(&pt("2,2"));
        assert_eq!(ts.len(), 2);
        let mut descent_sets: Vec<Vec<usize>> = ts.iter().map(|t| t.descents()).collect();
        descent_sets.sort();
        assert_eq!(descent_sets, vec![vec![1, 3], vec![2]]);
    }

    #[test]
    fn b_vector_fixture() {
        let (b, m) = b_vector(&pt("4,4,3,2"));
        assert_eq!(m, 12);
        assert_eq!(b, vec![3, 6, 9, 12, 3, 6, 9, 12, 4, 8, 12, 6, 12]);
        // single full cycle: b = (1, ..., n)
        let (b, m) = b_vector(&pt("5"));
        assert_eq!(m, 5);
        assert_eq!(b, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn cyclic_exponents_examples() {
        // [2,2] against the 4-cycle: descent sets {2} and {1,3} give
        // indices 2 and (1+3) mod 4 = 0
        assert_eq!(cyclic_exponents(&pt("2,2"), &pt("4")), vec![0, 2]);
        // single row: no descents at all
        assert_eq!(cyclic_exponents(&pt("6"), &pt("6")), vec![0]);
        // single column: index is n(n-1)/2 mod n
        assert_eq!(cyclic_exponents(&pt("1,1,1"), &pt("3")), vec![0]);
        assert_eq!(cyclic_exponents(&pt("1,1,1,1"), &pt("4")), vec![2]);
    }

    #[test]
    fn theta_of_full_cycle_in_near_row_shape_is_q_int() {
        // the (n-1)-dimensional irreducible sees the full cycle with
        // eigenvalues all nontrivial roots of unity: theta = [n]_q
        for n in 2..=7 {
            let lambda = if n == 2 {
                pt("1,1")
            } else {
                Partition::new(vec![n - 1, 1]).unwrap()
            };
            let theta = theta_irrep_cycle(&lambda).unwrap();
            assert_eq!(theta, q_int(n, Var::Q), "n = {n}");
        }
    }

    #[test]
    fn theta_of_full_cycle_in_sign_and_trivial_shapes() {
        for n in 2..=6 {
            let trivial = Partition::new(vec![n]).unwrap();
            assert_eq!(theta_irrep_cycle(&trivial).unwrap(), qp("1 - q"));
            let sign = Partition::new(vec![1; n]).unwrap();
            let expected = if n % 2 == 1 { qp("1 - q") } else { qp("1 + q") };
            assert_eq!(theta_irrep_cycle(&sign).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn theta_two_by_two_frozen() {
        assert_eq!(theta_irrep_cycle(&pt("2,2")).unwrap(), qp("1 - q^2"));
        assert_eq!(theta_irrep_branch(&pt("2,2"), 3).unwrap(), qp("1 + q + q^2"));
        assert_eq!(theta_irrep_branch(&pt("2,2"), 2).unwrap(), qp("1 - q^2"));
    }

    #[test]
    fn branching_at_full_length_is_the_cycle_case() {
        for lambda in partitions(5) {
            assert_eq!(
                theta_irrep_branch(&lambda, 5).unwrap(),
                theta_irrep_cycle(&lambda).unwrap()
            );
        }
    }

    #[test]
    fn theta_degree_equals_dimension() {
        // det(I - q rho(t_i)) has degree dim(lambda) and constant term 1
        for lambda in partitions(6) {
            for i in 2..=6 {
                let theta = theta_irrep_branch(&lambda, i).unwrap();
                assert_eq!(theta.total_degree(), lambda.dimension() as u64);
                assert_eq!(theta.constant_term(), BigInt::from(1));
            }
        }
    }

    #[test]
    fn delta_two_by_two_frozen() {
        let delta = delta_irrep(&pt("2,2")).unwrap();
        let expected = FactoredProduct::from_factors(vec![
            (qp("1 - q"), 1),
            (qp("1 - q^3"), 1),
            (qp("1 - q^4"), 2),
        ]);
        assert!(fp_equal(&delta, &expected, EqualityMode::symbolic()).unwrap());
    }

    #[test]
    fn delta_near_row_closed_form() {
        for n in 3..=6 {
            let lambda = Partition::new(vec![n - 1, 1]).unwrap();
            let delta = delta_irrep(&lambda).unwrap();
            assert!(
                fp_equal(&delta, &delta_hook_closed(n), EqualityMode::symbolic()).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn delta_of_trivial_shape_is_the_q_factorial() {
        for n in 2..=5 {
            let delta = delta_irrep(&Partition::new(vec![n]).unwrap()).unwrap();
            let expected = FactoredProduct::from_factors(vec![(
                crate::formulas::q_factorial(n, Var::Q),
                1,
            )]);
            assert!(fp_equal(&delta, &expected, EqualityMode::symbolic()).unwrap());
        }
    }

    #[test]
    fn spectral_completeness_small() {
        // prod over lambda of Delta_lambda^{dim lambda} = the full
        // group-matrix determinant
        for n in 3..=4 {
            let mut product = FactoredProduct::one();
            for lambda in partitions(n) {
                let delta = delta_irrep(&lambda).unwrap();
                product = product.mul(&delta.pow(lambda.dimension() as u64));
            }
            assert!(
                fp_equal(&product, &rhs_maj(n), EqualityMode::symbolic()).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn dense_coeffs_reads_univariate_polynomials() {
        let coeffs = dense_coeffs(&qp("1 + 2*q^2 - q^3"), Var::Q);
        let expect: Vec<BigInt> = [1, 0, 2, -1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(coeffs, expect);
    }
}
