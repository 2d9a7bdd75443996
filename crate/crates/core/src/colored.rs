//! Colored permutations: the wreath product `Z_m wr S_n`.
//!
//! An element is a pair `(w, x)` of a permutation and a color vector
//! `x in (Z/m)^n` indexed by *position*: the letter in position `i` is
//! `w(i)` carrying `x_i` bars.  Multiplication twists the colors through the
//! right factor's permutation:
//! `(g, x)(h, y) = (gh, (x·h) + y)` with `(x·h)_i = x_{h(i)}`.
//!
//! Letters are ordered with more bars smaller, and by value within a color:
//! `1'' < 2'' < ... < 1' < 2' < ... < 1 < 2 < ... < n`.

use crate::groups::{FiniteGroup, GroupError, Permutation, SymmetricGroup};
use std::cmp::Ordering;
use std::fmt;

/// A single colored letter: a value in `1..=n` with a color in `0..m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ColoredLetter {
    pub value: usize,
    pub color: u32,
}

/// Total order on colored letters: higher color means smaller letter; within
/// a color, natural value order.
pub fn letter_cmp(a: ColoredLetter, b: ColoredLetter) -> Ordering {
    b.color.cmp(&a.color).then(a.value.cmp(&b.value))
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ColoredPermutation {
    w: Permutation,
    /// `colors[i]` is the color shown on the letter in position `i + 1`.
    colors: Vec<u32>,
    m: u32,
}

impl ColoredPermutation {
    pub fn new(w: Permutation, colors: Vec<u32>, m: u32) -> Result<Self, GroupError> {
        if colors.len() != w.n() {
            return Err(GroupError::SizeMismatch(w.n(), colors.len()));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= m) {
            return Err(GroupError::OutOfRange {
                value: c as usize,
                max: m as usize - 1,
            });
        }
        Ok(ColoredPermutation { w, colors, m })
    }

    pub fn identity(n: usize, m: u32) -> Self {
        ColoredPermutation {
            w: Permutation::identity(n),
            colors: vec![0; n],
            m,
        }
    }

    /// The distinguished generator `t~_k = (t_k, (1, 0, ..., 0))`: the
    /// descending k-cycle with one bar on the first position.  Has order
    /// `m * k`.
    pub fn t_tilde(k: usize, n: usize, m: u32) -> Self {
        let mut colors = vec![0; n];
        if m > 1 {
            colors[0] = 1;
        }
        ColoredPermutation {
            w: Permutation::cycle(k, n),
            colors,
            m,
        }
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// The letter displayed in (1-based) position `i`.
    pub fn letter(&self, i: usize) -> ColoredLetter {
        ColoredLetter {
            value: self.w.apply_one_based(i),
            color: self.colors[i - 1],
        }
    }

    pub fn multiply(&self, other: &ColoredPermutation) -> ColoredPermutation {
        assert_eq!(self.m, other.m, "color modulus mismatch");
        assert_eq!(self.n(), other.n(), "size mismatch");
        let w = self.w.compose(&other.w);
        let colors = (0..self.n())
            .map(|i| {
                let twisted = self.colors[other.w.apply_zero_based(i)];
                (twisted + other.colors[i]) % self.m.max(1)
            })
            .collect();
        ColoredPermutation {
            w,
            colors,
            m: self.m,
        }
    }

    /// Inverse, derived from the semidirect-product law: the permutation part
    /// inverts and the colors pull back along it, negated.
    pub fn inverse(&self) -> ColoredPermutation {
        let winv = self.w.inverse();
        let m = self.m.max(1);
        let colors = (0..self.n())
            .map(|i| {
                let c = self.colors[winv.apply_zero_based(i)];
                (m - c) % m
            })
            .collect();
        ColoredPermutation {
            w: winv,
            colors,
            m: self.m,
        }
    }

    /// Descent positions of the colored letter word, 1-based.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| letter_cmp(self.letter(i), self.letter(i + 1)) == Ordering::Greater)
            .collect()
    }

    /// Colored major index: sum of descent positions of the letter word.
    pub fn cmaj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// Total color: sum of all bars.
    pub fn col(&self) -> usize {
        self.colors.iter().map(|&c| c as usize).sum()
    }

    /// Flag major index `fmaj = m * cmaj + col`.
    pub fn fmaj(&self) -> usize {
        self.m as usize * self.cmaj() + self.col()
    }

    /// Alternating major index: the major index of the underlying
    /// uncolored permutation.
    pub fn amaj(&self) -> usize {
        self.w.maj()
    }
}

/// Renders `1'34''2'` (value then one tick per bar); comma-separated for
/// `n >= 10`.  Parsing accepts arbitrary interior whitespace.
impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n() >= 10;
        for i in 1..=self.n() {
            if wide && i > 1 {
                write!(f, ",")?;
            }
            let l = self.letter(i);
            write!(f, "{}", l.value)?;
            for _ in 0..l.color {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}

/// Parses the display form given the color modulus (which the string alone
/// does not determine).
pub fn parse_colored(s: &str, m: u32) -> Result<ColoredPermutation, GroupError> {
    let letters = scan_letters(s)?;
    let n = letters.len();
    if n == 0 {
        return Err(GroupError::Parse("empty colored permutation".into()));
    }
    let values: Vec<usize> = letters.iter().map(|l| l.value).collect();
    let w = Permutation::from_one_line(&values)?;
    let colors: Vec<u32> = letters.iter().map(|l| l.color).collect();
    ColoredPermutation::new(w, colors, m)
}

/// Shared letter scanner for the colored and signed display syntax: a letter
/// is digits followed by tick marks.  Single-digit values may be juxtaposed
/// (`"1'34''2'"`); multi-digit values need commas (`"10',3,2''"`).
pub(crate) fn scan_letters(s: &str) -> Result<Vec<ColoredLetter>, GroupError> {
    let mut out = Vec::new();
    if s.contains(',') {
        for tok in s.split(',') {
            out.push(scan_single(tok.trim())?);
        }
        return Ok(out);
    }
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let d = c
            .to_digit(10)
            .ok_or_else(|| GroupError::Parse(format!("unexpected character '{c}'")))?;
        chars.next();
        let mut color = 0u32;
        while let Some(&t) = chars.peek() {
            if t == '\'' {
                color += 1;
                chars.next();
            } else if t.is_whitespace() {
                // whitespace may split a letter from its ticks? no: ticks bind
                // tightly, whitespace ends the letter
                break;
            } else {
                break;
            }
        }
        out.push(ColoredLetter {
            value: d as usize,
            color,
        });
    }
    Ok(out)
}

fn scan_single(tok: &str) -> Result<ColoredLetter, GroupError> {
    let digits: String = tok.chars().take_while(|c| c.is_ascii_digit()).collect();
    let rest = &tok[digits.len()..];
    if digits.is_empty() || !rest.chars().all(|c| c == '\'') {
        return Err(GroupError::Parse(format!("bad letter '{tok}'")));
    }
    Ok(ColoredLetter {
        value: digits
            .parse()
            .map_err(|_| GroupError::Parse(format!("bad value '{digits}'")))?,
        color: rest.len() as u32,
    })
}

/// The wreath product `Z_m wr S_n`, enumerated with the underlying
/// permutation outermost (lexicographic) and the color vector innermost
/// (counting up with `x_1` most significant).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColoredGroup {
    n: usize,
    m: u32,
}

impl ColoredGroup {
    pub fn new(n: usize, m: u32) -> ColoredGroup {
        assert!(n >= 1 && m >= 1, "need n >= 1 and m >= 1");
        ColoredGroup { n, m }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> u32 {
        self.m
    }
}

impl FiniteGroup for ColoredGroup {
    type Element = ColoredPermutation;

    fn identity(&self) -> ColoredPermutation {
        ColoredPermutation::identity(self.n, self.m)
    }

    fn multiply(&self, a: &ColoredPermutation, b: &ColoredPermutation) -> ColoredPermutation {
        a.multiply(b)
    }

    fn invert(&self, a: &ColoredPermutation) -> ColoredPermutation {
        a.inverse()
    }

    fn enumerate(&self) -> Vec<ColoredPermutation> {
        let mut out = Vec::with_capacity(self.size());
        for w in SymmetricGroup::new(self.n).enumerate() {
            let mut colors = vec![0u32; self.n];
            loop {
                out.push(ColoredPermutation {
                    w: w.clone(),
                    colors: colors.clone(),
                    m: self.m,
                });
                // increment base-m counter, x_n least significant
                let mut pos = self.n;
                loop {
                    if pos == 0 {
                        break;
                    }
                    colors[pos - 1] += 1;
                    if colors[pos - 1] < self.m {
                        break;
                    }
                    colors[pos - 1] = 0;
                    pos -= 1;
                }
                if pos == 0 {
                    break;
                }
            }
        }
        out
    }

    fn size(&self) -> usize {
        let nf: usize = (1..=self.n).product();
        nf * (self.m as usize).pow(self.n as u32)
    }
}
