//! Signed permutations: the hyperoctahedral group `B_n`.
//!
//! An element is a pair `(ε, u)` of a sign vector indexed by *value*
//! (`ε_i` is the sign carried by the value `i`) and a permutation.  The
//! letter in position `i` is the signed integer `ε_{u(i)} · u(i)`.
//! Multiplication permutes the left factor's signs through the right
//! factor's... precisely:
//! `(ε, u)(ε', v) = (ε · (u · ε'), u v)` where `(u · ε')_i = ε'_{u^{-1}(i)}`.
//!
//! Two linear orders on signed letters drive two major indices:
//! * type A: the natural integer order, with an extra descent at position 0
//!   when the first letter is negative (contributing 0 to the sum);
//! * type B: `1 < 2 < ... < n < -n < ... < -1`, with an extra descent at
//!   position n when the last letter is negative (contributing n).

use crate::groups::{FiniteGroup, GroupError, Permutation, SymmetricGroup};
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignedPermutation {
    /// `signs[i]` is the sign (+1 / -1) attached to the value `i + 1`.
    signs: Vec<i8>,
    u: Permutation,
}

impl SignedPermutation {
    pub fn new(signs: Vec<i8>, u: Permutation) -> Result<Self, GroupError> {
        if signs.len() != u.n() {
            return Err(GroupError::SizeMismatch(u.n(), signs.len()));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(GroupError::Parse("signs must be +1 or -1".into()));
        }
        Ok(SignedPermutation { signs, u })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            signs: vec![1; n],
            u: Permutation::identity(n),
        }
    }

    /// `s_k = (ε^{(k)}, t_k)`: the descending k-cycle with a single minus on
    /// the value `k`.  Has order `2k`.
    pub fn s_gen(k: usize, n: usize) -> Self {
        let mut signs = vec![1; n];
        signs[k - 1] = -1;
        SignedPermutation {
            signs,
            u: Permutation::cycle(k, n),
        }
    }

    /// `u_k = (1, t_k)`: the unsigned descending k-cycle.  Has order `k`.
    pub fn u_gen(k: usize, n: usize) -> Self {
        SignedPermutation {
            signs: vec![1; n],
            u: Permutation::cycle(k, n),
        }
    }

    pub fn n(&self) -> usize {
        self.u.n()
    }

    pub fn permutation(&self) -> &Permutation {
        &self.u
    }

    pub fn sign_of_value(&self, v: usize) -> i8 {
        self.signs[v - 1]
    }

    /// The signed integer in (1-based) position `i`.
    pub fn letter(&self, i: usize) -> i64 {
        let v = self.u.apply_one_based(i);
        self.signs[v - 1] as i64 * v as i64
    }

    pub fn multiply(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.n(), other.n(), "size mismatch");
        let n = self.n();
        let u = self.u.compose(&other.u);
        // (self.u · other.signs)_i = other.signs[self.u^{-1}(i)]
        let uinv = self.u.inverse();
        let signs = (1..=n)
            .map(|i| {
                let twisted = other.signs[uinv.apply_one_based(i) - 1];
                self.signs[i - 1] * twisted
            })
            .collect();
        SignedPermutation { signs, u }
    }

    /// Inverse from the product law: `(ε ∘ u, u^{-1})`.
    pub fn inverse(&self) -> SignedPermutation {
        let n = self.n();
        let signs = (1..=n)
            .map(|j| self.signs[self.u.apply_one_based(j) - 1])
            .collect();
        SignedPermutation {
            signs,
            u: self.u.inverse(),
        }
    }

    /// Type-A descent set (0-based sentinel included): `0` when the first
    /// letter is negative, and `i in [n-1]` when `letter(i) > letter(i+1)`
    /// in the natural integer order.
    pub fn descents_a(&self) -> Vec<usize> {
        let mut d = Vec::new();
        if self.letter(1) < 0 {
            d.push(0);
        }
        for i in 1..self.n() {
            if self.letter(i) > self.letter(i + 1) {
                d.push(i);
            }
        }
        d
    }

    /// Type-A major index: sum of the type-A descent positions (the
    /// 0-descent contributes nothing to the sum, only to the set).
    pub fn maj_a(&self) -> usize {
        self.descents_a().iter().sum()
    }

    fn b_key(&self, i: usize) -> usize {
        // order 1 < ... < n < -n < ... < -1 via the key i -> i, -i -> 2n+1-i
        let l = self.letter(i);
        if l > 0 {
            l as usize
        } else {
            2 * self.n() + 1 - (-l) as usize
        }
    }

    /// Type-B descent set: `i in [n-1]` when `letter(i) > letter(i+1)` in the
    /// order `1 < ... < n < -n < ... < -1`, plus `n` when the last letter is
    /// negative.
    pub fn descents_b(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (1..self.n())
            .filter(|&i| self.b_key(i) > self.b_key(i + 1))
            .collect();
        if self.letter(self.n()) < 0 {
            d.push(self.n());
        }
        d
    }

    /// Type-B major index: sum of the type-B descent positions.
    pub fn maj_b(&self) -> usize {
        self.descents_b().iter().sum()
    }

    /// Values carrying a minus sign, ascending.
    pub fn neg_set(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.signs[v - 1] < 0).collect()
    }

    /// Number of negative values.
    pub fn nneg(&self) -> usize {
        self.neg_set().len()
    }

    /// Sum of the negative values.
    pub fn sneg(&self) -> usize {
        self.neg_set().iter().sum()
    }
}

/// Renders `2'143'` (a tick marks a negative value); comma-separated for
/// `n >= 10`.
impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n() >= 10;
        for i in 1..=self.n() {
            if wide && i > 1 {
                write!(f, ",")?;
            }
            let v = self.u.apply_one_based(i);
            write!(f, "{v}")?;
            if self.signs[v - 1] < 0 {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}

pub fn parse_signed(s: &str) -> Result<SignedPermutation, GroupError> {
    let letters = crate::colored::scan_letters(s)?;
    let n = letters.len();
    if n == 0 {
        return Err(GroupError::Parse("empty signed permutation".into()));
    }
    let values: Vec<usize> = letters.iter().map(|l| l.value).collect();
    let u = Permutation::from_one_line(&values)?;
    let mut signs = vec![1i8; n];
    for l in &letters {
        match l.color {
            0 => {}
            1 => signs[l.value - 1] = -1,
            _ => {
                return Err(GroupError::Parse(format!(
                    "value {} carries more than one sign tick",
                    l.value
                )))
            }
        }
    }
    SignedPermutation::new(signs, u)
}

/// The hyperoctahedral group `B_n`, enumerated with the permutation
/// outermost (lexicographic) and sign patterns innermost (all-plus first,
/// minus signs counting up in binary with value 1 as the low bit).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedGroup {
    n: usize,
}

impl SignedGroup {
    pub fn new(n: usize) -> SignedGroup {
        assert!(n >= 1, "n must be at least 1");
        SignedGroup { n }
    }

    pub fn degree(&self) -> usize {
        self.n
    }
}

impl FiniteGroup for SignedGroup {
    type Element = SignedPermutation;

    fn identity(&self) -> SignedPermutation {
        SignedPermutation::identity(self.n)
    }

    fn multiply(&self, a: &SignedPermutation, b: &SignedPermutation) -> SignedPermutation {
        a.multiply(b)
    }

    fn invert(&self, a: &SignedPermutation) -> SignedPermutation {
        a.inverse()
    }

    fn enumerate(&self) -> Vec<SignedPermutation> {
        let mut out = Vec::with_capacity(self.size());
        for u in SymmetricGroup::new(self.n).enumerate() {
            for mask in 0..(1u32 << self.n) {
                let signs = (0..self.n)
                    .map(|v| if mask >> v & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(SignedPermutation {
                    signs,
                    u: u.clone(),
                });
            }
        }
        out
    }

    fn size(&self) -> usize {
        let nf: usize = (1..=self.n).product();
        nf << self.n
    }
}
