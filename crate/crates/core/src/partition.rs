//! Integer partitions, their text notation, and hook-length dimensions.
//!
//! Notation: `(2^3,1^2)` is the partition `[2,2,2,1,1]`; `()` is the empty
//! partition, which indexes the trivial module of `S_0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{factorial, Multiplicity};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is by size first, then lexicographic on the parts, so
/// `(2,1^6) < (2^3,1^2)` and `(4) < (5)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(format!("{parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::PartOrder(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts that may contain trailing zeros.
    ///
    /// Panics if the nonzero parts are not weakly decreasing.
    pub(crate) fn from_padded(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(a, 1^b)`; reduces to `(1^b)` when `a = 0` and is only valid for
    /// `a ≥ 1` or `b = 0`.
    pub fn hook(a: usize, b: usize) -> Self {
        let mut parts = Vec::with_capacity(b + 1);
        if a > 0 {
            parts.push(a);
        }
        parts.extend(std::iter::repeat_n(1, b));
        Self::new(parts).expect("hook shape requires a >= 1")
    }

    /// `(w^h)`: a rectangle of `h` rows of width `w`.
    pub fn rectangle(w: usize, h: usize) -> Self {
        if w == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![w; h] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths of the Young diagram.
    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Length of column `j` (0-based).
    pub fn column_length(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > j).count()
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Partitions obtained by removing one corner box, with the row removed from.
    pub fn remove_box(&self) -> impl Iterator<Item = Partition> + '_ {
        (0..self.length())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(move |i| {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                Partition::from_padded(parts)
            })
    }

    /// Partitions obtained by adding one box.
    pub fn add_box(&self) -> impl Iterator<Item = Partition> + '_ {
        (0..=self.length())
            .filter(|&i| i == 0 || self.part(i) < self.part(i - 1))
            .map(move |i| {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                Partition { parts }
            })
    }

    /// `(λ₁ + 1, λ₂, …)`: the partition with its first row lengthened by one.
    pub fn pad_first_row(&self) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(p) => *p += 1,
            None => parts.push(1),
        }
        Partition { parts }
    }

    /// Hook lengths `λᵢ − j + λ′ⱼ − i + 1` (0-based cells), row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.transpose();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.parts[j] - i - 1);
            }
        }
        out
    }

    /// Dimension of the irreducible `S_n`-module indexed by this partition.
    pub fn dim_irreducible<T: Multiplicity>(&self) -> T {
        let hooks = self
            .hook_lengths()
            .into_iter()
            .fold(T::one(), |acc, h| acc * T::from_usize_exact(h));
        factorial::<T>(self.size()) / hooks
    }

    /// All partitions of `n` in canonical (ascending) order.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::bounded(n, n, n)
    }

    /// Partitions of `n` with at most `max_len` parts, each at most `max_part`,
    /// in canonical order.
    pub fn bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, max_part.min(n), max_len, &mut cur, &mut out);
        out.sort();
        out
    }
}

fn fill(rest: usize, max: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if len == 0 {
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, len - 1, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        let mut i = 0;
        let mut first = true;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{p}^{run}")?;
            } else {
                write!(f, "{p}")?;
            }
            i += run;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut cursor = Cursor::new(text);
        let p = cursor.partition()?;
        cursor.skip_ws();
        if let Some((col, c)) = cursor.peek() {
            return Err(Error::syntax(col, format!("unexpected '{c}' after partition")));
        }
        Ok(p)
    }
}

/// Character cursor shared by the partition and module-sum parsers.
pub(crate) struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            text,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    /// Next non-space character and its 1-based column.
    pub(crate) fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&c| (self.pos + 1, c))
    }

    pub(crate) fn column(&self) -> usize {
        self.pos + 1
    }

    pub(crate) fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some((_, c)) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some((col, c)) => Err(Error::syntax(col, format!("expected '{want}', found '{c}'"))),
            None => Err(Error::syntax(self.column(), format!("expected '{want}', found end of input"))),
        }
    }

    pub(crate) fn eat(&mut self, want: char) -> bool {
        if matches!(self.peek(), Some((_, c)) if c == want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::syntax(start + 1, "expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| Error::syntax(start + 1, format!("integer '{digits}' out of range")))
    }

    pub(crate) fn partition(&mut self) -> Result<Partition> {
        self.expect('(')?;
        let mut parts = Vec::new();
        if self.eat(')') {
            return Ok(Partition::empty());
        }
        loop {
            let value = self.integer()?;
            let count = if self.eat('^') { self.integer()? } else { 1 };
            if value == 0 || count == 0 {
                return Err(Error::ZeroPart(self.text.trim().to_string()));
            }
            parts.extend(std::iter::repeat_n(value, count));
            if self.eat(')') {
                break;
            }
            self.expect(',')?;
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::PartOrder(self.text.trim().to_string()));
        }
        Ok(Partition { parts })
    }
}
