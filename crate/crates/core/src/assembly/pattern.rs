use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gamma::{self, gamma_cohomology};
use crate::Module;

/// Homology class slot of a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ClassModule {
    /// Use `H_k(Γ_{n,s})` from the closed form; unknown for rank ≥ 3.
    #[default]
    Auto,
    Explicit(Module),
    Unknown,
}

/// A graph `X_{n,s}` carrying a class of homological degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub rank: usize,
    pub leaves: usize,
    pub degree: usize,
    pub module: ClassModule,
}

impl Vertex {
    /// The `S_s`-module the class lives in, when known.
    pub fn resolved_module(&self) -> Result<Option<Module>> {
        match &self.module {
            ClassModule::Explicit(m) => Ok(Some(m.clone())),
            ClassModule::Unknown => Ok(None),
            ClassModule::Auto if self.rank <= gamma::MAX_KNOWN_RANK => {
                gamma_cohomology(self.rank, self.leaves, self.degree).map(Some)
            }
            ClassModule::Auto => Ok(None),
        }
    }
}

/// A leaf of a vertex; leaf numbers are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeafRef {
    pub vertex: usize,
    pub leaf: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pairing(pub LeafRef, pub LeafRef);

/// Rank, leaf count, total degree and vcd of the glued graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub rank: usize,
    pub leaves: usize,
    pub degree: usize,
    pub vcd: i64,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Gamma({},{}) degree={} vcd={}",
            self.rank, self.leaves, self.degree, self.vcd
        )
    }
}

/// Graphs with leaves paired up; pairs may join two leaves of one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GluingPattern {
    vertices: Vec<Vertex>,
    pairings: Vec<Pairing>,
}

impl GluingPattern {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn pairings(&self) -> &[Pairing] {
        &self.pairings
    }

    pub fn add_vertex(&mut self, vertex: Vertex) -> usize {
        self.vertices.push(vertex);
        self.vertices.len() - 1
    }

    /// Adds `X_{rank,leaves}` carrying its full `H_degree` (closed form or unknown).
    pub fn vertex(&mut self, id: impl Into<String>, rank: usize, leaves: usize, degree: usize) -> usize {
        self.add_vertex(Vertex {
            id: id.into(),
            rank,
            leaves,
            degree,
            module: ClassModule::Auto,
        })
    }

    pub fn glue(&mut self, a: LeafRef, b: LeafRef) {
        self.pairings.push(Pairing(a, b));
    }

    /// Pairs the lowest free leaf of `a` with the lowest free leaf of `b`.
    pub fn connect(&mut self, a: usize, b: usize) -> Result<()> {
        let mut used: HashSet<LeafRef> = self.pairings.iter().flat_map(|p| [p.0, p.1]).collect();
        let mut next_free = |v: usize| -> Result<LeafRef> {
            let leaves = self
                .vertices
                .get(v)
                .ok_or_else(|| Error::pattern(format!("no vertex with index {v}")))?
                .leaves;
            let leaf = (1..=leaves)
                .map(|leaf| LeafRef { vertex: v, leaf })
                .find(|r| !used.contains(r))
                .ok_or_else(|| Error::pattern(format!("vertex {} has no free leaf", self.vertices[v].id)))?;
            used.insert(leaf);
            Ok(leaf)
        };
        let first = next_free(a)?;
        let second = next_free(b)?;
        self.pairings.push(Pairing(first, second));
        Ok(())
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    /// Checks the pattern and computes the glued signature.
    pub fn validate(&self) -> Result<Signature> {
        if self.vertices.is_empty() {
            return Err(Error::pattern("pattern has no vertices"));
        }
        let mut ids = HashSet::new();
        for v in &self.vertices {
            if !ids.insert(v.id.as_str()) {
                return Err(Error::pattern(format!("duplicate vertex id '{}'", v.id)));
            }
            if v.rank == 0 && v.leaves < 3 {
                return Err(Error::pattern(format!(
                    "vertex '{}' is X(0,{}); rank-zero graphs need at least 3 leaves",
                    v.id, v.leaves
                )));
            }
            if let ClassModule::Explicit(m) = &v.module {
                if m.degree() != v.leaves {
                    return Err(Error::pattern(format!(
                        "module of vertex '{}' is an S_{}-module but the vertex has {} leaves",
                        v.id,
                        m.degree(),
                        v.leaves
                    )));
                }
            }
        }
        let mut used = HashSet::new();
        for pairing in &self.pairings {
            for r in [pairing.0, pairing.1] {
                let v = self
                    .vertices
                    .get(r.vertex)
                    .ok_or_else(|| Error::pattern(format!("no vertex with index {}", r.vertex)))?;
                if r.leaf == 0 || r.leaf > v.leaves {
                    return Err(Error::pattern(format!(
                        "leaf {} out of range for vertex '{}' with {} leaves",
                        r.leaf, v.id, v.leaves
                    )));
                }
                if !used.insert(r) {
                    return Err(Error::pattern(format!("leaf {}.{} is used twice", v.id, r.leaf)));
                }
            }
        }
        if !self.is_connected() {
            return Err(Error::pattern("pattern is disconnected"));
        }
        Ok(self.signature())
    }

    fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in &self.pairings {
            let a = find(&mut parent, p.0.vertex);
            let b = find(&mut parent, p.1.vertex);
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        (0..self.vertices.len()).all(|v| find(&mut parent, v) == root)
    }

    fn signature(&self) -> Signature {
        let edges = self.pairings.len();
        let rank_sum: usize = self.vertices.iter().map(|v| v.rank).sum();
        let leaf_sum: usize = self.vertices.iter().map(|v| v.leaves).sum();
        let rank = rank_sum + edges + 1 - self.vertices.len();
        let leaves = leaf_sum - 2 * edges;
        Signature {
            rank,
            leaves,
            degree: self.vertices.iter().map(|v| v.degree).sum(),
            vcd: gamma::vcd(rank, leaves).max(0),
        }
    }

    /// Leaves of vertex `v` not used by any pairing.
    pub fn unglued_leaves(&self, v: usize) -> usize {
        let used = self
            .pairings
            .iter()
            .flat_map(|p| [p.0, p.1])
            .filter(|r| r.vertex == v)
            .count();
        self.vertices[v].leaves - used
    }

    /// Sub-pattern on the given vertices and pairings, re-indexed.
    pub(crate) fn sub_pattern(&self, vertices: &[usize], pairings: &[usize]) -> GluingPattern {
        let index_of = |v: usize| vertices.iter().position(|&w| w == v).expect("vertex in subset");
        GluingPattern {
            vertices: vertices.iter().map(|&v| self.vertices[v].clone()).collect(),
            pairings: pairings
                .iter()
                .map(|&e| {
                    let Pairing(a, b) = self.pairings[e];
                    Pairing(
                        LeafRef { vertex: index_of(a.vertex), leaf: a.leaf },
                        LeafRef { vertex: index_of(b.vertex), leaf: b.leaf },
                    )
                })
                .collect(),
        }
    }

    /// Short description such as `{a,b} via a.1-b.2`.
    pub fn describe(&self) -> String {
        let ids: Vec<&str> = self.vertices.iter().map(|v| v.id.as_str()).collect();
        let glue: Vec<String> = self
            .pairings
            .iter()
            .map(|p| {
                format!(
                    "{}.{}-{}.{}",
                    self.vertices[p.0.vertex].id, p.0.leaf, self.vertices[p.1.vertex].id, p.1.leaf
                )
            })
            .collect();
        format!("{{{}}} via {}", ids.join(","), glue.join(" "))
    }
}
