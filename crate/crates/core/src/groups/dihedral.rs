//! The dihedral group of order `2n` in rotation/reflection normal form.

use super::{FiniteGroup, Permutation};
use std::fmt;

/// `g1^rot * g2^refl` where `g1` is the basic rotation of order `n` and `g2`
/// a reflection, subject to `g2 g1 g2 = g1^{-1}`.  Every element has a unique
/// such normal form with `0 <= rot < n`, `refl in {0, 1}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DihedralElement {
    pub rot: usize,
    pub refl: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralGroup {
    n: usize,
}

impl DihedralGroup {
    pub fn new(n: usize) -> DihedralGroup {
        assert!(n >= 3, "dihedral group needs n >= 3");
        DihedralGroup { n }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn g1(&self) -> DihedralElement {
        DihedralElement { rot: 1, refl: 0 }
    }

    pub fn g2(&self) -> DihedralElement {
        DihedralElement { rot: 0, refl: 1 }
    }

    /// The rotation statistic: the normal-form exponent of `g1`.
    pub fn rot_stat(&self, h: &DihedralElement) -> usize {
        h.rot
    }

    /// The reflection statistic: 1 on reflections, 0 on rotations.
    pub fn refl_stat(&self, h: &DihedralElement) -> usize {
        h.refl as usize
    }

    /// Realizes the group on the vertices `{1, ..., n}` of a regular n-gon:
    /// `g1` is the cyclic shift `i -> i + 1`, `g2` the reflection
    /// `i -> n - i` (fixing `n`).  Used to validate the normal-form
    /// multiplication against honest permutation composition.
    pub fn to_permutation(&self, h: &DihedralElement) -> Permutation {
        let n = self.n;
        let shift =
            Permutation::from_zero_based((0..n).map(|i| (i + 1) % n).collect::<Vec<_>>());
        let flip =
            Permutation::from_zero_based((0..n).map(|i| (n - 1 - i + n) % n).collect::<Vec<_>>());
        let mut acc = Permutation::identity(n);
        for _ in 0..h.rot {
            acc = acc.compose(&shift);
        }
        if h.refl == 1 {
            acc = acc.compose(&flip);
        }
        acc
    }
}

impl FiniteGroup for DihedralGroup {
    type Element = DihedralElement;

    fn identity(&self) -> DihedralElement {
        DihedralElement { rot: 0, refl: 0 }
    }

    fn multiply(&self, a: &DihedralElement, b: &DihedralElement) -> DihedralElement {
        let n = self.n;
        // g1^a g2^e · g1^b g2^f: slide g2^e past g1^b, inverting the rotation
        let rot = if a.refl == 0 {
            (a.rot + b.rot) % n
        } else {
            (a.rot + n - b.rot % n) % n
        };
        DihedralElement {
            rot,
            refl: a.refl ^ b.refl,
        }
    }

    fn invert(&self, a: &DihedralElement) -> DihedralElement {
        if a.refl == 1 {
            // reflections are involutions
            *a
        } else {
            DihedralElement {
                rot: (self.n - a.rot) % self.n,
                refl: 0,
            }
        }
    }

    fn enumerate(&self) -> Vec<DihedralElement> {
        let mut out = Vec::with_capacity(2 * self.n);
        for refl in 0..2u8 {
            for rot in 0..self.n {
                out.push(DihedralElement { rot, refl });
            }
        }
        out
    }

    fn size(&self) -> usize {
        2 * self.n
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rot, self.refl) {
            (0, 0) => write!(f, "e"),
            (r, 0) => write!(f, "g1^{r}"),
            (0, _) => write!(f, "g2"),
            (r, _) => write!(f, "g1^{r}*g2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{order_of, power};

    #[test]
    fn defining_relations() {
        for n in 3..=8 {
            let d = DihedralGroup::new(n);
            let g1 = d.g1();
            let g2 = d.g2();
            assert_eq!(order_of(&d, &g1), n);
            assert_eq!(order_of(&d, &g2), 2);
            // g2 g1 g2 = g1^{-1}
            let lhs = d.multiply(&d.multiply(&g2, &g1), &g2);
            assert_eq!(lhs, d.invert(&g1));
        }
    }

    #[test]
    fn multiplication_matches_permutation_realization() {
        for n in 3..=7 {
            let d = DihedralGroup::new(n);
            let elements = d.enumerate();
            for a in &elements {
                for b in &elements {
                    let direct = d.to_permutation(&d.multiply(a, b));
                    let via_perms = d.to_permutation(a).compose(&d.to_permutation(b));
                    assert_eq!(direct, via_perms, "n={n}, a={a}, b={b}");
                }
            }
        }
    }

    #[test]
    fn normal_form_statistics() {
        let d = DihedralGroup::new(5);
        let g = power(&d, &d.g1(), 3);
        let h = d.multiply(&g, &d.g2());
        assert_eq!(d.rot_stat(&h), 3);
        assert_eq!(d.refl_stat(&h), 1);
        assert_eq!(d.rot_stat(&d.identity()), 0);
        // rot matches "image of n under the vertex realization, or 0":
        // for rotations g1^c with c != 0, vertex n moves to c
        for c in 1..5 {
            let rc = power(&d, &d.g1(), c);
            assert_eq!(d.to_permutation(&rc).apply_one_based(5), c);
        }
    }

    #[test]
    fn element_orders_partition_correctly() {
        // in D_n: n rotations of order dividing n, n reflections of order 2
        let d = DihedralGroup::new(6);
        let mut reflections = 0;
        for g in d.enumerate() {
            let o = order_of(&d, &g);
            if g.refl == 1 {
                assert_eq!(o, 2);
                reflections += 1;
            } else {
                assert_eq!(6 % o, 0);
            }
        }
        assert_eq!(reflections, 6);
    }
}
