//! Closed-form cohomology of `Γ_{n,s}` for `n ≤ 2` as `S_s`-modules.
//!
//! Rational cohomology and homology of `Γ_{n,s}` are isomorphic as
//! `S_s`-modules, so [`gamma_cohomology`] serves for both `H^i` and `H_i`.

mod derived;
mod gl;
mod wmod;

pub use derived::{
    cusp_pair_domain, first_nonzero_cusp_pair, hairy_dim, symplectic_detection, theorem_2mn_summand,
    CuspPairDomain, CuspPairLayer, HairyHomology,
};
pub use gl::{
    coefficients_module, gl2_h1, gl2_normal_form, gl_invariants_wedge, schur_dim, schur_weyl_wedge, Gl2H1,
    Gl2Weight, GlWeight,
};
pub use wmod::{w_module, ModularLayeredSum, WLayer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rep_ring::ModuleSum;
use crate::scalar::Multiplicity;

/// Largest rank with a closed form.
pub const MAX_KNOWN_RANK: usize = 2;

/// `vcd(Γ_{n,s}) = 2n + s − 3` for `n ≥ 1`; `Γ_{0,s}` is trivial.
pub fn vcd(rank: usize, leaves: usize) -> i64 {
    if rank == 0 {
        0
    } else {
        2 * rank as i64 + leaves as i64 - 3
    }
}

/// `H^i(Γ_{n,s}) ≅ H_i(Γ_{n,s})` as an `S_s`-module.
///
/// Rank 0: trivial in degree 0. Rank 1: `P_(s−i,1^i)` for even `i ≤ s−1`.
/// Rank 2: `P_(2^{2m}) ∘ P_(s−4m)` in degree `4m`, `W_{2m} ∘ P_(s−2m)` in
/// degree `2m+1`, zero elsewhere.
pub fn gamma_cohomology<T: Multiplicity>(rank: usize, s: usize, i: usize) -> Result<ModuleSum<T>> {
    match rank {
        0 => Ok(if i == 0 { ModuleSum::trivial(s) } else { ModuleSum::zero(s) }),
        1 => Ok(rank_one(s, i)),
        2 => rank_two(s, i),
        _ => Err(Error::UnsupportedRank(rank)),
    }
}

fn rank_one<T: Multiplicity>(s: usize, i: usize) -> ModuleSum<T> {
    if s == 0 {
        // Out(F₁) = ℤ/2 has the cohomology of a point
        return if i == 0 { ModuleSum::trivial(0) } else { ModuleSum::zero(0) };
    }
    if i.is_multiple_of(2) && i < s {
        ModuleSum::irreducible(Partition::hook(s - i, i))
    } else {
        ModuleSum::zero(s)
    }
}

fn rank_two<T: Multiplicity>(s: usize, i: usize) -> Result<ModuleSum<T>> {
    if i > s + 1 {
        return Ok(ModuleSum::zero(s));
    }
    Ok(match i % 4 {
        0 if i <= s => {
            let invariants = ModuleSum::irreducible(Partition::rectangle(2, i / 2));
            invariants.induction_product(&ModuleSum::trivial(s - i))
        }
        1 | 3 => {
            let q = i - 1;
            w_module::<T>(q)?
                .flattened
                .induction_product(&ModuleSum::trivial(s - q))
        }
        _ => ModuleSum::zero(s),
    })
}
