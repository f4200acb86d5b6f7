//! The `GL`-side of the computation: Schur–Weyl duality for `V^{∧q}`,
//! `GL₂` normal forms, and `GL_n(ℤ)`-invariants.

use std::fmt;

use crate::error::{Error, Result};
use crate::modular::{modular_dims, FormKind};
use crate::partition::Partition;
use crate::rep_ring::ModuleSum;
use crate::scalar::Multiplicity;

/// Highest weight of an irreducible polynomial `GL`-representation `𝕊_λ V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlWeight(pub Partition);

/// `𝕊_(r+ℓ, ℓ) V ≅ Sym^r V ⊗ det^ℓ` for `dim V = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gl2Weight {
    pub sym_degree: usize,
    pub det_power: usize,
}

impl GlWeight {
    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn gl2_normal_form(&self) -> Result<Gl2Weight> {
        gl2_normal_form(&self.0)
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.0)
    }
}

impl Gl2Weight {
    pub fn to_partition(self) -> Partition {
        Partition::from_padded(vec![self.sym_degree + self.det_power, self.det_power])
    }
}

impl fmt::Display for Gl2Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sym^{} (x) det^{}", self.sym_degree, self.det_power)
    }
}

/// Pairs `(λ, λ′)` with `V^{∧q} ≅ ⊕ 𝕊_λ V ⊗ P_{λ′}`, over `λ ⊢ q` with at
/// most `rank` rows, in canonical order of `λ`.
pub fn schur_weyl_wedge(rank: usize, q: usize) -> Vec<(GlWeight, Partition)> {
    Partition::bounded(q, q, rank)
        .into_iter()
        .rev()
        .map(|lambda| {
            let conj = lambda.transpose();
            (GlWeight(lambda), conj)
        })
        .collect()
}

/// `H^q(F_n^s) = V^{∧q} ∘ P_(s−q)` split by Schur–Weyl type.
pub fn coefficients_module<T: Multiplicity>(rank: usize, s: usize, q: usize) -> Vec<(GlWeight, ModuleSum<T>)> {
    if q > s {
        return Vec::new();
    }
    let free = ModuleSum::<T>::trivial(s - q);
    schur_weyl_wedge(rank, q)
        .into_iter()
        .map(|(weight, conj)| (weight, ModuleSum::irreducible(conj).induction_product(&free)))
        .collect()
}

pub fn gl2_normal_form(lambda: &Partition) -> Result<Gl2Weight> {
    if lambda.length() > 2 {
        return Err(Error::invalid(format!("{lambda} has more than two rows")));
    }
    Ok(Gl2Weight {
        sym_degree: lambda.part(0) - lambda.part(1),
        det_power: lambda.part(1),
    })
}

/// `H¹(GL₂(ℤ); Sym^r ⊗ det^ℓ)`, identified with a space of modular forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gl2H1 {
    Zero,
    Forms { kind: FormKind, weight: usize, dim: u64 },
}

impl Gl2H1 {
    pub fn dim(&self) -> u64 {
        match self {
            Gl2H1::Zero => 0,
            Gl2H1::Forms { dim, .. } => *dim,
        }
    }
}

impl fmt::Display for Gl2H1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gl2H1::Zero => f.write_str("0"),
            Gl2H1::Forms { kind: FormKind::Cusp, weight, dim } => write!(f, "S_{weight} (dim {dim})"),
            Gl2H1::Forms { kind: FormKind::Full, weight, dim } => write!(f, "M_{weight} (dim {dim})"),
        }
    }
}

/// Zero for odd `r`, cusp forms of weight `r+2` when `ℓ` is even, all
/// modular forms of weight `r+2` when `ℓ` is odd.
pub fn gl2_h1(sym_degree: usize, det_power: usize) -> Gl2H1 {
    if sym_degree % 2 == 1 {
        return Gl2H1::Zero;
    }
    let weight = sym_degree + 2;
    let kind = if det_power.is_multiple_of(2) { FormKind::Cusp } else { FormKind::Full };
    Gl2H1::Forms {
        kind,
        weight,
        dim: modular_dims(weight).dim(kind),
    }
}

/// `H⁰(GL_n(ℤ); V^{∧q})`: `P_(n^{2m})` when `q = 2mn`, zero otherwise.
pub fn gl_invariants_wedge<T: Multiplicity>(rank: usize, q: usize) -> Result<ModuleSum<T>> {
    if rank == 0 {
        return Err(Error::invalid("GL_0 has no standard module"));
    }
    if q.is_multiple_of(2 * rank) {
        let m = q / (2 * rank);
        Ok(ModuleSum::irreducible(Partition::rectangle(rank, 2 * m)))
    } else {
        Ok(ModuleSum::zero(q))
    }
}

/// `dim 𝕊_λ(k^N)` by the hook-content formula.
pub fn schur_dim<T: Multiplicity>(lambda: &Partition, n: usize) -> T {
    if lambda.length() > n {
        return T::zero();
    }
    let hooks = lambda.hook_lengths();
    let mut numerator = T::one();
    let mut denominator = T::one();
    let mut k = 0;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            // content j − i never drives N + j − i below 1 once ℓ(λ) ≤ N
            numerator = numerator * T::from_usize_exact(n + j - i);
            denominator = denominator * T::from_usize_exact(hooks[k]);
            k += 1;
        }
    }
    numerator / denominator
}
