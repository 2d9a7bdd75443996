//! Permutations in one-line notation and the symmetric group.

use super::{FiniteGroup, GroupError};
use itertools::Itertools;
use std::fmt;
use std::str::FromStr;

/// A permutation of `{1, ..., n}`, stored 0-indexed: `images[i]` is the image
/// of `i + 1`, minus one.
///
/// Composition follows function application: `(u ∘ v)(i) = u(v(i))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from one-line notation with 1-based values.
    pub fn from_one_line(values: &[usize]) -> Result<Permutation, GroupError> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in values {
            if v < 1 || v > n {
                return Err(GroupError::OutOfRange { value: v, max: n });
            }
            if seen[v - 1] {
                return Err(GroupError::Parse(format!("value {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: values.iter().map(|&v| v - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Permutation {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s == (0..images.len()).collect::<Vec<_>>()
        });
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply_one_based(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub(crate) fn apply_zero_based(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "size mismatch");
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// The descending cycle `t_k = (k, k-1, ..., 1)` inside `S_n`: sends
    /// `k -> k-1, ..., 2 -> 1, 1 -> k` and fixes everything above `k`.
    pub fn cycle(k: usize, n: usize) -> Permutation {
        assert!(k >= 1 && k <= n, "cycle length out of range");
        let images = (1..=n)
            .map(|i| {
                if i == 1 {
                    k - 1
                } else if i <= k {
                    i - 2
                } else {
                    i - 1
                }
            })
            .collect();
        Permutation { images }
    }

    /// Descent positions: `{ i in [n-1] : w(i) > w(i+1) }`, 1-based.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.images[i - 1] > self.images[i])
            .collect()
    }

    /// Major index: the sum of the descent positions.
    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }
}

/// Compact one-line display: digits for `n <= 9` (`"314652"`), comma-joined
/// otherwise (`"3,1,4,6,5,2,10,..."`).
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in self.one_line() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.one_line().iter().join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(GroupError::Parse("empty permutation".into()));
        }
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| GroupError::Parse(format!("bad value '{t}'")))
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| GroupError::Parse(format!("bad digit '{c}'")))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::from_one_line(&values)
    }
}

/// The symmetric group `S_n`, enumerated in lexicographic one-line order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetricGroup {
    n: usize,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> SymmetricGroup {
        assert!(n >= 1, "n must be at least 1");
        SymmetricGroup { n }
    }

    pub fn degree(&self) -> usize {
        self.n
    }
}

impl FiniteGroup for SymmetricGroup {
    type Element = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.n)
    }

    fn multiply(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b)
    }

    fn invert(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn enumerate(&self) -> Vec<Permutation> {
        (0..self.n)
            .permutations(self.n)
            .map(Permutation::from_zero_based)
            .collect()
    }

    fn size(&self) -> usize {
        (1..=self.n).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // t_3 ∘ t_2 = 132: t_2 = 213, t_3 = 312
        let t3 = Permutation::cycle(3, 3);
        let t2 = Permutation::cycle(2, 3);
        assert_eq!(t3.to_string(), "312");
        assert_eq!(t2.to_string(), "213");
        assert_eq!(t3.compose(&t2), p("132"));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("231").inverse(), p("312"));
        assert_eq!(p("312").inverse(), p("231"));
        let w = p("314652");
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(6));
    }

    #[test]
    fn descents_and_maj_examples() {
        assert_eq!(p("314652").descents(), vec![1, 4, 5]);
        assert_eq!(p("314652").maj(), 10);
        assert_eq!(p("123").maj(), 0);
        assert_eq!(p("321").maj(), 3);
        assert_eq!(p("132").maj(), 2);
        assert_eq!(p("213").maj(), 1);
    }

    #[test]
    fn maj_generating_function_for_s3() {
        // Σ_w q^maj(w) over S_3 = 1 + 2q + 2q^2 + q^3
        let s3 = SymmetricGroup::new(3);
        let mut counts = [0usize; 4];
        for w in s3.enumerate() {
            counts[w.maj()] += 1;
        }
        assert_eq!(counts, [1, 2, 2, 1]);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let s3 = SymmetricGroup::new(3);
        let order: Vec<String> = s3.enumerate().iter().map(|w| w.to_string()).collect();
        assert_eq!(order, vec!["123", "132", "213", "231", "312", "321"]);
    }

    #[test]
    fn cycle_one_line_forms() {
        assert_eq!(Permutation::cycle(3, 3).to_string(), "312");
        assert_eq!(Permutation::cycle(2, 4).to_string(), "2134");
        assert_eq!(Permutation::cycle(4, 4).to_string(), "4123");
        assert_eq!(Permutation::cycle(1, 3), Permutation::identity(3));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            "315".parse::<Permutation>(),
            Err(GroupError::OutOfRange { value: 5, max: 3 })
        ));
        assert!("311".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn parse_comma_form_for_large_n() {
        let w: Permutation = "10,1,2,3,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(w.apply_one_based(1), 10);
        assert_eq!(w.to_string(), "10,1,2,3,4,5,6,7,8,9");
    }
}
