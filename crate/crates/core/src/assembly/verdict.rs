use std::fmt;

use itertools::Itertools;

use crate::error::Result;
use crate::gamma::{gamma_cohomology, MAX_KNOWN_RANK};
use crate::partition::Partition;
use crate::rep_ring::coinvariant_dim;
use crate::{BigNat, Module};

use super::pattern::{GluingPattern, Signature};

/// Default number of intermediate patterns examined by the subgluing search.
pub const DEFAULT_SUBGLUING_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    ForcedZero,
    Inconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::ForcedZero => "forced-zero",
            Outcome::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    FactorZero,
    DegreeBound,
    FullGluingCoinvariants,
    InducedSupport,
    Subgluing,
    MoritaLoop,
    MoritaValence,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::FactorZero => "factor-zero",
            Criterion::DegreeBound => "degree-bound",
            Criterion::FullGluingCoinvariants => "full-gluing-coinvariants",
            Criterion::InducedSupport => "induced-support",
            Criterion::Subgluing => "subgluing",
            Criterion::MoritaLoop => "morita-loop",
            Criterion::MoritaValence => "morita-valence",
        })
    }
}

/// One line of a verdict's reasoning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub criterion: Criterion,
    pub fired: bool,
    pub signature: Signature,
    pub detail: String,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.fired { "fired" } else { "clear" };
        write!(f, "[{}] {} at {}: {}", self.criterion, mark, self.signature, self.detail)
    }
}

/// An irreducible present in both the induced domain and the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub partition: Partition,
    pub domain_multiplicity: BigNat,
    pub target_multiplicity: BigNat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub signature: Signature,
    pub trace: Vec<TraceStep>,
    pub witnesses: Vec<Witness>,
    pub budget_exhausted: bool,
    pub subpatterns_examined: usize,
}

impl Verdict {
    pub fn is_forced_zero(&self) -> bool {
        self.outcome == Outcome::ForcedZero
    }

    /// The criterion that forced vanishing, if any. For a subgluing this is
    /// [`Criterion::Subgluing`]; the criterion applied to the intermediate
    /// pattern follows it in the trace.
    pub fn fired(&self) -> Option<Criterion> {
        self.trace.iter().find(|s| s.fired).map(|s| s.criterion)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.outcome)?;
        for step in &self.trace {
            writeln!(f, "  {step}")?;
        }
        if !self.witnesses.is_empty() {
            let list = self
                .witnesses
                .iter()
                .map(|w| format!("{} (domain {}, target {})", w.partition, w.domain_multiplicity, w.target_multiplicity))
                .join(", ");
            writeln!(f, "  witnesses: {list}")?;
        }
        if self.subpatterns_examined > 0 {
            writeln!(f, "  subpatterns examined: {}", self.subpatterns_examined)?;
        }
        if self.budget_exhausted {
            writeln!(f, "  subgluing budget exhausted")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerdictOptions {
    pub subgluing_budget: usize,
}

impl Default for VerdictOptions {
    fn default() -> Self {
        Self {
            subgluing_budget: DEFAULT_SUBGLUING_BUDGET,
        }
    }
}

/// `dim (A ⊗ B)_{S_s}`, the space a full gluing of two vertices factors through.
pub fn coinvariant_pairing(a: &Module, b: &Module) -> Result<BigNat> {
    coinvariant_dim(a, b)
}

struct Local {
    steps: Vec<TraceStep>,
    witnesses: Vec<Witness>,
}

impl Local {
    fn fired(&self) -> bool {
        self.steps.last().is_some_and(|s| s.fired)
    }
}

/// Criteria (a) through (d) on a single pattern, stopping at the first that fires.
fn local_criteria(pattern: &GluingPattern, sig: Signature) -> Result<Local> {
    let mut local = Local {
        steps: Vec::new(),
        witnesses: Vec::new(),
    };
    let step = |criterion, fired, detail: String| TraceStep {
        criterion,
        fired,
        signature: sig,
        detail,
    };
    let modules: Vec<Option<Module>> = pattern
        .vertices()
        .iter()
        .map(|v| v.resolved_module())
        .collect::<Result<_>>()?;

    // (a)
    if let Some(v) = modules.iter().position(|m| m.as_ref().is_some_and(|m| m.is_zero())) {
        let vx = &pattern.vertices()[v];
        local.steps.push(step(
            Criterion::FactorZero,
            true,
            format!("vertex {} carries H_{}(Gamma({},{})) = 0", vx.id, vx.degree, vx.rank, vx.leaves),
        ));
        return Ok(local);
    }

    // (b)
    let target = if sig.rank <= MAX_KNOWN_RANK {
        Some(gamma_cohomology::<BigNat>(sig.rank, sig.leaves, sig.degree)?)
    } else {
        None
    };
    if (sig.degree as i64) > sig.vcd {
        local.steps.push(step(
            Criterion::DegreeBound,
            true,
            format!("degree {} exceeds vcd {}", sig.degree, sig.vcd),
        ));
        return Ok(local);
    }
    if target.as_ref().is_some_and(|t| t.is_zero()) {
        local.steps.push(step(
            Criterion::DegreeBound,
            true,
            format!("target H_{} = 0", sig.degree),
        ));
        return Ok(local);
    }

    // (c)
    let n = pattern.vertices().len();
    for (a, b) in (0..n).tuple_combinations() {
        if !fully_glued(pattern, a, b) {
            continue;
        }
        if let (Some(ma), Some(mb)) = (&modules[a], &modules[b]) {
            let dim = coinvariant_dim(ma, mb)?;
            let ids = (&pattern.vertices()[a].id, &pattern.vertices()[b].id);
            let fired = dim == BigNat::from(0u32);
            local.steps.push(step(
                Criterion::FullGluingCoinvariants,
                fired,
                format!("coinvariants of {} and {} have dimension {dim}", ids.0, ids.1),
            ));
            if fired {
                return Ok(local);
            }
        }
    }

    // (d)
    if let Some(target) = &target {
        if modules.iter().all(Option::is_some) {
            let mut domain = Module::trivial(0);
            for (v, m) in modules.iter().enumerate() {
                let m = m.as_ref().expect("all resolved");
                domain = domain.induction_product(&m.restrict(pattern.unglued_leaves(v))?);
            }
            let common = domain.common_support(target);
            let fired = common.is_empty();
            let detail = if fired {
                format!("induced domain {domain} shares no irreducible with target {target}")
            } else {
                format!("{} common irreducible(s) with target {target}", common.len())
            };
            local.witnesses = common
                .into_iter()
                .map(|(partition, d, t)| Witness {
                    partition,
                    domain_multiplicity: d,
                    target_multiplicity: t,
                })
                .collect();
            local.steps.push(step(Criterion::InducedSupport, fired, detail));
        }
    }
    Ok(local)
}

/// Every leaf of `a` is paired with a leaf of `b` and vice versa.
fn fully_glued(pattern: &GluingPattern, a: usize, b: usize) -> bool {
    let cross = pattern
        .pairings()
        .iter()
        .filter(|p| (p.0.vertex == a && p.1.vertex == b) || (p.0.vertex == b && p.1.vertex == a))
        .count();
    let va = &pattern.vertices()[a];
    let vb = &pattern.vertices()[b];
    va.leaves > 0 && cross == va.leaves && cross == vb.leaves
}

/// Decides whether representation theory forces `A_φ` to vanish.
pub fn assembly_verdict(pattern: &GluingPattern, options: VerdictOptions) -> Result<Verdict> {
    let signature = pattern.validate()?;
    let local = local_criteria(pattern, signature)?;
    let mut verdict = Verdict {
        outcome: Outcome::Inconclusive,
        signature,
        trace: local.steps,
        witnesses: Vec::new(),
        budget_exhausted: false,
        subpatterns_examined: 0,
    };
    if verdict.trace.last().is_some_and(|s| s.fired) {
        verdict.outcome = Outcome::ForcedZero;
        return Ok(verdict);
    }
    verdict.witnesses = local.witnesses;

    // (e)
    let vertices = pattern.vertices();
    let total_pairings = pattern.pairings().len();
    'search: for size in 1..=vertices.len() {
        for subset in (0..vertices.len()).combinations(size) {
            let rank_sum: usize = subset.iter().map(|&v| vertices[v].rank).sum();
            if rank_sum > size + 1 {
                continue;
            }
            let internal: Vec<usize> = pattern
                .pairings()
                .iter()
                .enumerate()
                .filter(|(_, p)| subset.contains(&p.0.vertex) && subset.contains(&p.1.vertex))
                .map(|(e, _)| e)
                .collect();
            let lo = (size - 1).max(1);
            let hi = (size + 1 - rank_sum).min(internal.len());
            for edges in lo..=hi {
                for chosen in internal.iter().copied().combinations(edges) {
                    if size == vertices.len() && edges == total_pairings {
                        continue;
                    }
                    if verdict.subpatterns_examined >= options.subgluing_budget {
                        verdict.budget_exhausted = true;
                        break 'search;
                    }
                    verdict.subpatterns_examined += 1;
                    let sub = pattern.sub_pattern(&subset, &chosen);
                    let Ok(sub_sig) = sub.validate() else {
                        continue;
                    };
                    let inner = local_criteria(&sub, sub_sig)?;
                    if inner.fired() {
                        let fired_step = inner.steps.last().expect("fired step").clone();
                        verdict.trace.push(TraceStep {
                            criterion: Criterion::Subgluing,
                            fired: true,
                            signature: sub_sig,
                            detail: format!("intermediate {} vanishes", sub.describe()),
                        });
                        verdict.trace.push(fired_step);
                        verdict.outcome = Outcome::ForcedZero;
                        verdict.witnesses.clear();
                        return Ok(verdict);
                    }
                }
            }
        }
    }
    verdict.trace.push(TraceStep {
        criterion: Criterion::Subgluing,
        fired: false,
        signature,
        detail: format!("no vanishing intermediate among {} examined", verdict.subpatterns_examined),
    });
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::catalog;

    fn verdict(p: &GluingPattern) -> Verdict {
        assembly_verdict(p, VerdictOptions::default()).unwrap()
    }

    #[test]
    fn alpha_one_squared_is_not_forced() {
        let v = verdict(&catalog::rank_one_pair(1, 1));
        assert_eq!(v.outcome, Outcome::Inconclusive);
        let witness: Partition = "(2,2)".parse().unwrap();
        assert!(v.witnesses.iter().any(|w| w.partition == witness));
    }

    #[test]
    fn unequal_top_classes_vanish_by_support() {
        let v = verdict(&catalog::rank_one_pair(1, 3));
        assert_eq!(v.fired(), Some(Criterion::InducedSupport));
        // k1 + k2 odd lands in a degree 2 mod 4
        let v = verdict(&catalog::rank_one_pair(1, 2));
        assert_eq!(v.fired(), Some(Criterion::DegreeBound));
    }

    #[test]
    fn gamma_one_vanishes_through_a_subgluing() {
        let v = verdict(&catalog::mss_gamma(1));
        assert_eq!(v.fired(), Some(Criterion::Subgluing));
        let step = v.trace.iter().find(|s| s.criterion == Criterion::Subgluing).unwrap();
        assert_eq!((step.signature.rank, step.signature.leaves, step.signature.degree), (2, 6, 6));
    }

    #[test]
    fn eisenstein_is_not_forced() {
        for k in 1..=2 {
            assert_eq!(verdict(&catalog::eisenstein(k)).outcome, Outcome::Inconclusive);
        }
    }

    #[test]
    fn odd_rank_one_factor_is_zero() {
        let mut p = GluingPattern::new();
        let a = p.vertex("a", 1, 4, 1);
        p.connect(a, a).unwrap();
        assert_eq!(verdict(&p).fired(), Some(Criterion::FactorZero));
    }

    #[test]
    fn degree_zero_classes_survive() {
        let mut p = GluingPattern::new();
        let a = p.vertex("a", 1, 3, 0);
        let b = p.vertex("b", 1, 4, 0);
        p.connect(a, b).unwrap();
        p.connect(a, a).unwrap();
        assert_eq!(verdict(&p).outcome, Outcome::Inconclusive);
    }

    #[test]
    fn budget_is_reported() {
        let v = assembly_verdict(&catalog::morita(2), VerdictOptions { subgluing_budget: 0 }).unwrap();
        assert!(v.budget_exhausted);
        assert_eq!(v.outcome, Outcome::Inconclusive);
    }

    #[test]
    fn coinvariant_examples() {
        let a = gamma_cohomology::<BigNat>(1, 3, 2).unwrap();
        assert_eq!(coinvariant_pairing(&a, &a).unwrap(), BigNat::from(1u32));
        let a = gamma_cohomology::<BigNat>(1, 6, 2).unwrap();
        let b = gamma_cohomology::<BigNat>(2, 6, 5).unwrap();
        assert_eq!(coinvariant_pairing(&a, &b).unwrap(), BigNat::from(1u32));
        assert_eq!(coinvariant_pairing(&a, &Module::zero(6)).unwrap(), BigNat::from(0u32));
        assert!(coinvariant_pairing(&a, &Module::zero(5)).is_err());
    }
}
