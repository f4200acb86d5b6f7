use crate::error::{Error, Result};
use crate::modular::{modular_dims, FormKind};
use crate::partition::Partition;
use crate::rep_ring::ModuleSum;
use crate::scalar::Multiplicity;

/// One summand `𝓧_{q,i} ⊗ P_(2^i,1^{q−2i})` of `W_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WLayer {
    pub index: usize,
    pub kind: FormKind,
    pub weight: usize,
    pub form_dim: u64,
    pub partition: Partition,
}

/// `W_q = H¹(GL₂(ℤ); H^{∧q})` as an `S_q`-module, kept both layer by layer
/// and flattened to multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularLayeredSum<T: Multiplicity> {
    pub q: usize,
    pub layers: Vec<WLayer>,
    pub flattened: ModuleSum<T>,
}

impl<T: Multiplicity> ModularLayeredSum<T> {
    /// Image of the restriction to the parabolic subgroup: one copy of each
    /// layer built from all modular forms (odd `i`).
    pub fn parabolic_image(&self) -> ModuleSum<T> {
        let mut out = ModuleSum::zero(self.q);
        for layer in self.layers.iter().filter(|l| l.kind == FormKind::Full && l.form_dim > 0) {
            out.add_term(layer.partition.clone(), T::one())
                .expect("layer partitions have size q");
        }
        out
    }
}

/// Builds `W_q` for even `q`.
pub fn w_module<T: Multiplicity>(q: usize) -> Result<ModularLayeredSum<T>> {
    if q % 2 == 1 {
        return Err(Error::invalid(format!("W_q is only defined for even q, got {q}")));
    }
    let mut layers = Vec::new();
    let mut flattened = ModuleSum::zero(q);
    for i in 0..q / 2 {
        let kind = if i % 2 == 0 { FormKind::Cusp } else { FormKind::Full };
        let weight = q + 2 - 2 * i;
        let form_dim = modular_dims(weight).dim(kind);
        let mut parts = vec![2; i];
        parts.extend(std::iter::repeat_n(1, q - 2 * i));
        let partition = Partition::new(parts).expect("two-column shape");
        flattened
            .add_term(partition.clone(), T::from_u64_exact(form_dim))
            .expect("layer partitions have size q");
        layers.push(WLayer {
            index: i,
            kind,
            weight,
            form_dim,
            partition,
        });
    }
    Ok(ModularLayeredSum { q, layers, flattened })
}
