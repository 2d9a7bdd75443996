//! Finite groups: a common enumeration/multiplication interface plus the
//! concrete symmetric and dihedral groups.  Colored and signed permutation
//! groups live in their own modules but implement the same trait.

use std::collections::HashMap;
use std::hash::Hash;

mod dihedral;
mod perm;

pub use dihedral::{DihedralElement, DihedralGroup};
pub use perm::{Permutation, SymmetricGroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("element sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("value {value} out of range 1..={max}")]
    OutOfRange { value: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

/// A finite group given by identity, multiplication, inversion, and a
/// deterministic enumeration of all elements (identity first).
pub trait FiniteGroup {
    type Element: Clone + Eq + Ord + Hash + std::fmt::Debug;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn invert(&self, a: &Self::Element) -> Self::Element;
    /// All elements in a fixed, documented order.  The identity comes first.
    fn enumerate(&self) -> Vec<Self::Element>;
    /// `|G|`, without materializing the enumeration.
    fn size(&self) -> usize;
}

/// `g^k` for `k >= 0` by repeated multiplication (group sizes here are small
/// enough that binary powering would be noise).
pub fn power<G: FiniteGroup>(group: &G, g: &G::Element, k: usize) -> G::Element {
    let mut acc = group.identity();
    for _ in 0..k {
        acc = group.multiply(&acc, g);
    }
    acc
}

/// Multiplicative order of `g`: the least `k >= 1` with `g^k = 1`.
pub fn order_of<G: FiniteGroup>(group: &G, g: &G::Element) -> usize {
    let id = group.identity();
    let mut acc = g.clone();
    let mut k = 1;
    while acc != id {
        acc = group.multiply(&acc, g);
        k += 1;
        assert!(k <= 1 << 24, "runaway order computation");
    }
    k
}

/// Sorted orbit sizes of the cyclic group `<g>` acting on `points` through
/// `act`.  The sizes sum to `points.len()`.
pub fn orbit_sizes<G, T>(
    _group: &G,
    g: &G::Element,
    points: &[T],
    act: impl Fn(&G::Element, &T) -> T,
) -> Vec<usize>
where
    G: FiniteGroup,
    T: Clone + Eq + Hash,
{
    let index: HashMap<&T, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut seen = vec![false; points.len()];
    let mut sizes = Vec::new();
    for start in 0..points.len() {
        if seen[start] {
            continue;
        }
        let mut size = 0;
        let mut current = points[start].clone();
        loop {
            let i = *index
                .get(&current)
                .expect("action must stay inside the point set");
            if seen[i] {
                break;
            }
            seen[i] = true;
            size += 1;
            current = act(g, &current);
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

/// Index of every element within `enumerate()` order, for O(1) lookups when
/// building group matrices.
pub fn element_index<G: FiniteGroup>(group: &G) -> HashMap<G::Element, u32> {
    group
        .enumerate()
        .into_iter()
        .enumerate()
        .map(|(i, g)| (g, i as u32))
        .collect()
}

#[cfg(test)]
pub(crate) fn check_group_axioms<G: FiniteGroup>(group: &G) {
    let elements = group.enumerate();
    assert_eq!(elements.len(), group.size());
    assert_eq!(elements[0], group.identity());
    let id = group.identity();
    // closure + identity + inverses on the full enumeration
    let set: std::collections::HashSet<_> = elements.iter().cloned().collect();
    assert_eq!(set.len(), elements.len(), "enumeration has duplicates");
    for a in &elements {
        assert_eq!(group.multiply(a, &id), *a);
        assert_eq!(group.multiply(&id, a), *a);
        let inv = group.invert(a);
        assert!(set.contains(&inv));
        assert_eq!(group.multiply(a, &inv), id);
        assert_eq!(group.multiply(&inv, a), id);
    }
    // associativity on a deterministic sample (full triple loop is cubic)
    let step = (elements.len() / 8).max(1);
    let sample: Vec<_> = elements.iter().step_by(step).collect();
    for a in &sample {
        for b in &sample {
            assert!(set.contains(&group.multiply(a, b)), "not closed");
            for c in &sample {
                assert_eq!(
                    group.multiply(&group.multiply(a, b), c),
                    group.multiply(a, &group.multiply(b, c))
                );
            }
        }
    }
}
