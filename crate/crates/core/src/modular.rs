//! Dimensions of modular and cusp forms of level one.
//!
//! The graded ring of modular forms is the polynomial algebra on the
//! Eisenstein series `E₄` and `E₆`, so `dim M_k` counts the monomials
//! `E₄^a E₆^b` of weight `4a + 6b = k`. Cusp forms have codimension one in
//! every nonzero `M_k` of weight at least 4.

/// Dimensions of `M_k` and `S_k` at one weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormDims {
    pub weight: usize,
    pub dim_full: u64,
    pub dim_cusp: u64,
}

/// Which of the two spaces a layer refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormKind {
    Cusp,
    Full,
}

impl FormDims {
    pub fn dim(&self, kind: FormKind) -> u64 {
        match kind {
            FormKind::Cusp => self.dim_cusp,
            FormKind::Full => self.dim_full,
        }
    }
}

impl std::fmt::Display for FormKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FormKind::Cusp => "cusp",
            FormKind::Full => "full",
        })
    }
}

pub fn modular_dims(weight: usize) -> FormDims {
    let dim_full = (0..=weight / 6)
        .filter(|b| (weight - 6 * b).is_multiple_of(4))
        .count() as u64;
    // weight 0 holds only the constants, none of which vanish at the cusp
    let dim_cusp = if weight >= 4 && dim_full >= 1 { dim_full - 1 } else { 0 };
    FormDims {
        weight,
        dim_full,
        dim_cusp,
    }
}
