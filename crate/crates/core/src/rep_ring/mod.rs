//! Isomorphism classes of `S_n`-modules and the operations between them.
//!
//! A [`ModuleSum`] records the multiplicity of each irreducible `P_λ`. The
//! induction product `A ∘ B = Ind_{S_a×S_b}^{S_{a+b}} A ⊗ B` is computed with
//! Littlewood–Richardson coefficients, restriction with the branching rule.

mod character;
mod lr;

use std::collections::BTreeMap;
use std::fmt;

pub use character::{cycle_type_sign, mn_character};
pub use lr::lr_coefficient;

use crate::error::{Error, Result};
use crate::partition::{Cursor, Partition};
use crate::scalar::Multiplicity;

/// A finite sum `Σ c_λ P_λ` over partitions `λ ⊢ degree`.
///
/// Zero multiplicities are never stored, so equality is module isomorphism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleSum<T> {
    degree: usize,
    terms: BTreeMap<Partition, T>,
}

impl<T: Multiplicity> ModuleSum<T> {
    pub fn zero(degree: usize) -> Self {
        ModuleSum {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The irreducible `P_λ`.
    pub fn irreducible(lambda: Partition) -> Self {
        let mut m = Self::zero(lambda.size());
        m.terms.insert(lambda, T::one());
        m
    }

    /// The trivial module `P_(n)`.
    pub fn trivial(n: usize) -> Self {
        Self::irreducible(Partition::row(n))
    }

    /// The alternating module `P_(1^n)`.
    pub fn alternating(n: usize) -> Self {
        Self::irreducible(Partition::column(n))
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, T)>,
    {
        let mut m = Self::zero(degree);
        for (lambda, c) in terms {
            m.add_term(lambda, c)?;
        }
        Ok(m)
    }

    pub fn add_term(&mut self, lambda: Partition, c: T) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: lambda.size(),
            });
        }
        self.accumulate(lambda, c);
        Ok(())
    }

    fn accumulate(&mut self, lambda: Partition, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda).or_insert_with(T::zero);
        *slot = slot.clone() + c;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn multiplicity(&self, lambda: &Partition) -> T {
        self.terms.get(lambda).cloned().unwrap_or_else(T::zero)
    }

    /// Number of irreducible summands, counted with multiplicity.
    pub fn length(&self) -> T {
        self.terms.values().fold(T::zero(), |acc, c| acc + c.clone())
    }

    pub fn dimension(&self) -> T {
        self.terms
            .iter()
            .fold(T::zero(), |acc, (lambda, c)| acc + c.clone() * lambda.dim_irreducible::<T>())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.accumulate(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &T) -> Self {
        let mut out = Self::zero(self.degree);
        for (lambda, c) in &self.terms {
            out.accumulate(lambda.clone(), c.clone() * factor.clone());
        }
        out
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> Self {
        ModuleSum {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(lambda, _)| keep(lambda))
                .map(|(lambda, c)| (lambda.clone(), c.clone()))
                .collect(),
        }
    }

    /// `A ∘ B`, bilinear in both arguments.
    pub fn induction_product(&self, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        let mut out = Self::zero(degree);
        for (lambda, a) in &self.terms {
            for (mu, b) in &other.terms {
                let coefficient = a.clone() * b.clone();
                for nu in product_candidates(lambda, mu) {
                    let c = lr::lr_count(lambda, mu, &nu);
                    if c > 0 {
                        out.accumulate(nu, coefficient.clone() * T::from_u64_exact(c));
                    }
                }
            }
        }
        out
    }

    /// `Res^{S_n}_{S_m}`, removing `n − m` boxes in all possible ways.
    pub fn restrict(&self, m: usize) -> Result<Self> {
        if m > self.degree {
            return Err(Error::invalid(format!(
                "cannot restrict from S_{} to S_{m}",
                self.degree
            )));
        }
        let mut current = self.clone();
        for _ in m..self.degree {
            let mut next = Self::zero(current.degree - 1);
            for (lambda, c) in &current.terms {
                for smaller in lambda.remove_box() {
                    next.accumulate(smaller, c.clone());
                }
            }
            current = next;
        }
        Ok(current)
    }

    /// `A ⊗ alt`: transposes every partition.
    pub fn tensor_alt(&self) -> Self {
        ModuleSum {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(lambda, c)| (lambda.transpose(), c.clone()))
                .collect(),
        }
    }

    /// Lengthens the first row of every partition, giving a module of `S_{n+1}`.
    pub fn pad_first_row(&self) -> Self {
        ModuleSum {
            degree: self.degree + 1,
            terms: self
                .terms
                .iter()
                .map(|(lambda, c)| (lambda.pad_first_row(), c.clone()))
                .collect(),
        }
    }

    /// Irreducibles occurring in both modules, with both multiplicities.
    pub fn common_support(&self, other: &Self) -> Vec<(Partition, T, T)> {
        self.terms
            .iter()
            .filter_map(|(lambda, a)| {
                other
                    .terms
                    .get(lambda)
                    .map(|b| (lambda.clone(), a.clone(), b.clone()))
            })
            .collect()
    }

    /// Changes the multiplicity type.
    pub fn convert<U: Multiplicity>(&self) -> ModuleSum<U> {
        ModuleSum {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(lambda, c)| {
                    let text = c.to_string();
                    let value = U::from_str_radix(&text, 10)
                        .unwrap_or_else(|_| panic!("multiplicity {text} does not fit the target type"));
                    (lambda.clone(), value)
                })
                .collect(),
        }
    }

    /// Parses the `c1*(λ1) + c2*(λ2) + …` form; `0` is the zero module.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut cursor = Cursor::new(text);
        let mut out = Self::zero(degree);
        if cursor.peek().map(|(_, c)| c) == Some('0') {
            cursor.integer()?;
            if let Some((col, c)) = cursor.peek() {
                return Err(Error::syntax(col, format!("unexpected '{c}' after 0")));
            }
            return Ok(out);
        }
        loop {
            let coefficient = match cursor.peek() {
                Some((_, c)) if c.is_ascii_digit() => {
                    let col = cursor.column();
                    let k = cursor.integer()?;
                    if k == 0 {
                        return Err(Error::syntax(col, "zero coefficient"));
                    }
                    cursor.expect('*')?;
                    k
                }
                _ => 1,
            };
            let lambda = cursor.partition()?;
            out.add_term(lambda, T::from_usize_exact(coefficient))?;
            match cursor.peek() {
                None => break,
                Some((_, '+')) => {
                    cursor.expect('+')?;
                }
                Some((col, c)) => return Err(Error::syntax(col, format!("expected '+', found '{c}'"))),
            }
        }
        Ok(out)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }
}

/// Candidate `ν` for `P_λ ∘ P_μ`: shapes containing both factors, with
/// `ν₁ ≤ λ₁ + μ₁` and at most `ℓ(λ) + ℓ(μ)` rows.
fn product_candidates(lambda: &Partition, mu: &Partition) -> Vec<Partition> {
    let n = lambda.size() + mu.size();
    Partition::bounded(n, lambda.part(0) + mu.part(0), lambda.length() + mu.length())
        .into_iter()
        .filter(|nu| nu.contains(lambda) && nu.contains(mu))
        .collect()
}

/// `P_λ ∘ P_μ`.
pub fn induction_product<T: Multiplicity>(a: &ModuleSum<T>, b: &ModuleSum<T>) -> ModuleSum<T> {
    a.induction_product(b)
}

/// `dim (A ⊗ B)_{S_n} = Σ_λ mult_A(λ)·mult_B(λ)`.
pub fn coinvariant_dim<T: Multiplicity>(a: &ModuleSum<T>, b: &ModuleSum<T>) -> Result<T> {
    a.check_degree(b)?;
    Ok(a
        .common_support(b)
        .into_iter()
        .fold(T::zero(), |acc, (_, x, y)| acc + x * y))
}

impl<T: Multiplicity> fmt::Display for ModuleSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{lambda}")?;
            } else {
                write!(f, "{c}*{lambda}")?;
            }
        }
        Ok(())
    }
}

impl<T: Multiplicity> fmt::Debug for ModuleSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}[{}]", self.degree, self)
    }
}
