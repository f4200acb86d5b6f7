//! Consequences of the closed forms: the `H^{2mn}` summand detector for all
//! ranks, hairy graph homology dimensions, symplectic-derivation modules and
//! the domains of the cusp-form pair assembly maps.

use crate::error::{Error, Result};
use crate::modular::FormKind;
use crate::partition::Partition;
use crate::rep_ring::{lr_coefficient, ModuleSum};
use crate::scalar::{binomial, Multiplicity};

use super::{gamma_cohomology, schur_dim, w_module, GlWeight};

/// Multiplicity of `P_(s−2mn, n^{2m})` in `P_(n^{2m}) ∘ P_(s−2mn)`.
///
/// Zero when `s − 2mn < n`, where the first row would be shorter than the rest.
pub fn theorem_2mn_summand<T: Multiplicity>(n: usize, m: usize, s: usize) -> Result<T> {
    if n == 0 || m == 0 {
        return Err(Error::invalid("rank and m must both be at least 1"));
    }
    let q = 2 * m * n;
    if s < q {
        return Err(Error::invalid(format!("s = {s} is below 2mn = {q}")));
    }
    let free = s - q;
    if free < n {
        return Ok(T::zero());
    }
    let rectangle = Partition::rectangle(n, 2 * m);
    let mut parts = vec![free];
    parts.extend_from_slice(rectangle.parts());
    let target = Partition::new(parts)?;
    Ok(lr_coefficient(&rectangle, &Partition::row(free), &target))
}

/// `H_k(𝓗_V^{n,s}) ≅ H^{2n+s−2−k}(Γ_{n,s}) ⊗_{S_s} V^{∧s}` as a `GL(V)`-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HairyHomology<T> {
    pub cohomological_degree: Option<usize>,
    pub terms: Vec<(GlWeight, T)>,
    pub dimension: T,
}

/// Hairy graph homology for rank `n ≤ 2`, `s` hairs, degree `k`, `dim V = N`.
///
/// Only weights with at most `N` rows are listed; the others give zero.
pub fn hairy_dim<T: Multiplicity>(n: usize, s: usize, k: usize, dim_v: usize) -> Result<HairyHomology<T>> {
    if n > super::MAX_KNOWN_RANK {
        return Err(Error::UnsupportedRank(n));
    }
    let top = 2 * n + s;
    if k + 2 > top {
        return Ok(HairyHomology {
            cohomological_degree: None,
            terms: Vec::new(),
            dimension: T::zero(),
        });
    }
    let degree = top - 2 - k;
    let module: ModuleSum<T> = gamma_cohomology(n, s, degree)?;
    let mut terms = Vec::new();
    let mut dimension = T::zero();
    for (conj, mult) in module.terms() {
        let lambda = conj.transpose();
        if lambda.length() > dim_v {
            continue;
        }
        dimension = dimension + mult.clone() * schur_dim::<T>(&lambda, dim_v);
        terms.push((GlWeight(lambda), mult.clone()));
    }
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(HairyHomology {
        cohomological_degree: Some(degree),
        terms,
        dimension,
    })
}

/// Degree `3n + d − 2` and weight `((2m+1)^n, 1^d)` of the symplectic module
/// detected in the homology of positive-degree symplectic derivations.
pub fn symplectic_detection(n: usize, m: usize, d: usize) -> Result<(usize, Partition)> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let mut parts = vec![2 * m + 1; n];
    parts.extend(std::iter::repeat_n(1, d));
    Ok((3 * n + d - 2, Partition::new(parts)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspPairLayer<T> {
    pub index: usize,
    pub weight: usize,
    pub kind: FormKind,
    pub form_dim: u64,
    pub wedge_dim: T,
}

/// Domain `⊕_{0≤i<m} Λ²𝓧_{2m,i}` of the assembly map into
/// `H_{4m+2}(Out(F_{2m+3}))` from two glued copies of `Γ_{2,2m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspPairDomain<T> {
    pub m: usize,
    pub layers: Vec<CuspPairLayer<T>>,
    pub total: T,
    pub target_degree: usize,
    pub target_rank: usize,
}

pub fn cusp_pair_domain<T: Multiplicity>(m: usize) -> Result<CuspPairDomain<T>> {
    if m == 0 {
        return Err(Error::invalid("m must be at least 1"));
    }
    let w = w_module::<T>(2 * m)?;
    let layers: Vec<CuspPairLayer<T>> = w
        .layers
        .iter()
        .map(|layer| CuspPairLayer {
            index: layer.index,
            weight: layer.weight,
            kind: layer.kind,
            form_dim: layer.form_dim,
            wedge_dim: binomial(layer.form_dim as usize, 2),
        })
        .collect();
    let total = layers.iter().fold(T::zero(), |acc, l| acc + l.wedge_dim.clone());
    Ok(CuspPairDomain {
        m,
        layers,
        total,
        target_degree: 4 * m + 2,
        target_rank: 2 * m + 3,
    })
}

/// Smallest `m ≤ limit` whose cusp-pair domain is nonzero.
pub fn first_nonzero_cusp_pair(limit: usize) -> Option<usize> {
    (1..=limit).find(|&m| {
        cusp_pair_domain::<u64>(m)
            .map(|d| d.total > 0)
            .unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn summand_detector() {
        assert_eq!(theorem_2mn_summand::<u64>(3, 1, 9).unwrap(), 1);
        assert_eq!(theorem_2mn_summand::<u64>(3, 1, 7).unwrap(), 0);
        assert_eq!(theorem_2mn_summand::<u64>(1, 2, 6).unwrap(), 1);
        assert!(theorem_2mn_summand::<u64>(3, 1, 5).is_err());
        assert!(theorem_2mn_summand::<u64>(0, 1, 5).is_err());
    }

    #[test]
    fn hairy_examples() {
        let h = hairy_dim::<u64>(1, 3, 1, 2).unwrap();
        assert_eq!(h.terms, vec![(GlWeight(p("(3)")), 1)]);
        assert_eq!(h.dimension, 4);
        let h = hairy_dim::<u64>(2, 4, 1, 2).unwrap();
        assert_eq!(h.cohomological_degree, Some(5));
        assert_eq!(h.terms, vec![(GlWeight(p("(3,1)")), 1)]);
        assert_eq!(h.dimension, 3);
        let out_of_range = hairy_dim::<u64>(1, 3, 4, 2).unwrap();
        assert_eq!(out_of_range.dimension, 0);
        assert!(out_of_range.terms.is_empty());
        assert!(hairy_dim::<u64>(3, 3, 1, 2).is_err());
    }

    #[test]
    fn symplectic_examples() {
        assert_eq!(symplectic_detection(1, 1, 0).unwrap(), (1, p("(3)")));
        assert_eq!(symplectic_detection(2, 1, 1).unwrap(), (5, p("(3,3,1)")));
        assert_eq!(symplectic_detection(3, 0, 2).unwrap(), (9, p("(1^5)")));
    }

    #[test]
    fn cusp_pairs() {
        let d = cusp_pair_domain::<u64>(2).unwrap();
        assert_eq!(d.total, 0);
        assert!(d.layers.iter().all(|l| l.wedge_dim == 0));
        let d = cusp_pair_domain::<u64>(6).unwrap();
        assert_eq!(d.total, 1);
        let nonzero: Vec<_> = d.layers.iter().filter(|l| l.wedge_dim > 0).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!((nonzero[0].index, nonzero[0].weight, nonzero[0].kind), (1, 12, FormKind::Full));
        assert_eq!((d.target_degree, d.target_rank), (26, 15));
        let d = cusp_pair_domain::<u64>(10).unwrap();
        assert_eq!(d.total, 3);
        let idx: Vec<_> = d.layers.iter().filter(|l| l.wedge_dim > 0).map(|l| l.index).collect();
        assert_eq!(idx, [1, 3, 5]);
        assert_eq!(first_nonzero_cusp_pair(20), Some(6));
        assert!(cusp_pair_domain::<u64>(0).is_err());
    }
}
