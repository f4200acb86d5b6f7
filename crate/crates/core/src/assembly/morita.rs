use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::pattern::GluingPattern;
use super::verdict::{Criterion, Outcome, TraceStep, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoritaKind {
    /// Carries the degree-0 class of `Γ_{0,v}`.
    RankZero,
    /// Carries the top class `α_k` of `Γ_{1,2k+1}`.
    RankOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoritaVertex {
    pub kind: MoritaKind,
    pub hairs: usize,
}

/// A graph whose vertices are labelled rank zero or rank one; edges may be
/// loops or parallel.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MoritaGraph {
    pub vertices: Vec<MoritaVertex>,
    pub edges: Vec<(usize, usize)>,
}

impl MoritaGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, kind: MoritaKind, hairs: usize) -> usize {
        self.vertices.push(MoritaVertex { kind, hairs });
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    /// Hairs plus edge endpoints; a loop counts twice.
    pub fn valence(&self, v: usize) -> usize {
        let ends = self.edges.iter().map(|&(a, b)| usize::from(a == v) + usize::from(b == v)).sum::<usize>();
        self.vertices[v].hairs + ends
    }

    fn check(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::pattern("graph has no vertices"));
        }
        for &(a, b) in &self.edges {
            if a >= self.vertices.len() || b >= self.vertices.len() {
                return Err(Error::pattern(format!("edge ({a},{b}) refers to a missing vertex")));
            }
        }
        for (v, vertex) in self.vertices.iter().enumerate() {
            let valence = self.valence(v);
            match vertex.kind {
                MoritaKind::RankOne if valence.is_multiple_of(2) => {
                    return Err(Error::pattern(format!("rank-one vertex {v} has even valence {valence}")))
                }
                MoritaKind::RankOne if valence < 3 => {
                    return Err(Error::pattern(format!("rank-one vertex {v} has valence {valence} < 3")))
                }
                MoritaKind::RankZero if valence < 3 => {
                    return Err(Error::pattern(format!("rank-zero vertex {v} has valence {valence} < 3")))
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// The gluing pattern assembling `μ_G`: rank-one vertices become
    /// `X_{1,v}` in degree `v−1`, rank-zero vertices `X_{0,v}` in degree 0.
    pub fn to_gluing_pattern(&self) -> Result<GluingPattern> {
        self.check()?;
        let mut p = GluingPattern::new();
        for (v, vertex) in self.vertices.iter().enumerate() {
            let valence = self.valence(v);
            match vertex.kind {
                MoritaKind::RankOne => p.vertex(format!("v{v}"), 1, valence, valence - 1),
                MoritaKind::RankZero => p.vertex(format!("z{v}"), 0, valence, 0),
            };
        }
        for &(a, b) in &self.edges {
            p.connect(a, b)?;
        }
        Ok(p)
    }
}

/// Vanishing of the generalized Morita class `μ_G` from its rank-one valences.
pub fn morita_verdict(graph: &MoritaGraph) -> Result<Verdict> {
    let signature = graph.to_gluing_pattern()?.validate()?;
    let step = |criterion, fired, detail| TraceStep {
        criterion,
        fired,
        signature,
        detail,
    };
    let rank_one: Vec<usize> = (0..graph.vertices.len())
        .filter(|&v| graph.vertices[v].kind == MoritaKind::RankOne)
        .collect();
    let mut trace = Vec::new();
    let mut outcome = Outcome::Inconclusive;
    if let Some(&(v, _)) = graph.edges.iter().find(|&&(a, b)| a == b && rank_one.contains(&a)) {
        trace.push(step(Criterion::MoritaLoop, true, format!("loop at rank-one vertex {v}")));
        outcome = Outcome::ForcedZero;
    } else {
        let valences: BTreeSet<usize> = rank_one.iter().map(|&v| graph.valence(v)).collect();
        let list = valences.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        let fired = valences.len() > 1;
        trace.push(step(Criterion::MoritaValence, fired, format!("rank-one valences {{{list}}}")));
        if fired {
            outcome = Outcome::ForcedZero;
        }
    }
    Ok(Verdict {
        outcome,
        signature,
        trace,
        witnesses: Vec::new(),
        budget_exhausted: false,
        subpatterns_examined: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_vertices(a: usize, b: usize, shared: usize) -> MoritaGraph {
        let mut g = MoritaGraph::new();
        let x = g.add_vertex(MoritaKind::RankOne, a - shared);
        let y = g.add_vertex(MoritaKind::RankOne, b - shared);
        for _ in 0..shared {
            g.add_edge(x, y);
        }
        g
    }

    #[test]
    fn equal_valences_are_inconclusive() {
        let v = morita_verdict(&two_vertices(3, 3, 3)).unwrap();
        assert_eq!(v.outcome, Outcome::Inconclusive);
        assert_eq!((v.signature.rank, v.signature.leaves, v.signature.degree), (4, 0, 4));
    }

    #[test]
    fn unequal_valences_vanish() {
        let v = morita_verdict(&two_vertices(3, 5, 3)).unwrap();
        assert_eq!(v.fired(), Some(Criterion::MoritaValence));
    }

    #[test]
    fn loops_vanish() {
        let mut g = two_vertices(5, 5, 3);
        g.add_edge(0, 0);
        g.vertices[0].hairs = 0;
        let v = morita_verdict(&g).unwrap();
        assert_eq!(v.fired(), Some(Criterion::MoritaLoop));
    }

    #[test]
    fn even_valence_rejected() {
        assert!(morita_verdict(&two_vertices(4, 4, 3)).is_err());
        let mut g = MoritaGraph::new();
        g.add_vertex(MoritaKind::RankZero, 2);
        assert!(morita_verdict(&g).is_err());
    }
}
