//! Gluing patterns that recur in vanishing arguments, parameterized by `k`.
//!
//! Vertex ids are short and stable so traces read the same across runs.

use super::pattern::GluingPattern;

fn connect_times(p: &mut GluingPattern, a: usize, b: usize, times: usize) {
    for _ in 0..times {
        p.connect(a, b).expect("catalog patterns have enough leaves");
    }
}

/// `X_{1,s}` carrying degree `degree`, with two of its leaves glued together.
pub fn self_gluing(s: usize, degree: usize) -> GluingPattern {
    let mut p = GluingPattern::new();
    let a = p.vertex("a", 1, s, degree);
    connect_times(&mut p, a, a, 1);
    p
}

/// Top classes `α_{k1} ∈ H_{2k1}(Γ_{1,2k1+1})` and `α_{k2}` joined by one edge.
pub fn rank_one_pair(k1: usize, k2: usize) -> GluingPattern {
    let mut p = GluingPattern::new();
    let a = p.vertex("a", 1, 2 * k1 + 1, 2 * k1);
    let b = p.vertex("b", 1, 2 * k2 + 1, 2 * k2);
    connect_times(&mut p, a, b, 1);
    p
}

/// Two copies of `α_k` with every leaf glued across.
pub fn morita(k: usize) -> GluingPattern {
    let mut p = GluingPattern::new();
    let a = p.vertex("a", 1, 2 * k + 1, 2 * k);
    let b = p.vertex("b", 1, 2 * k + 1, 2 * k);
    connect_times(&mut p, a, b, 2 * k + 1);
    p
}

/// An odd-degree class of `Γ_{2,2k+2}` glued to `α_k` along `2k+1` edges,
/// leaving one free leaf.
pub fn eisenstein(k: usize) -> GluingPattern {
    let mut p = GluingPattern::new();
    let a = p.vertex("e", 2, 2 * k + 2, 2 * k + 3);
    let b = p.vertex("a", 1, 2 * k + 1, 2 * k);
    connect_times(&mut p, a, b, 2 * k + 1);
    p
}

/// `α_k` and `α_{k+1}` sharing `2k` edges, the rest glued to a degree-5
/// class of `Γ_{2,4}`.
pub fn mss_gamma(k: usize) -> GluingPattern {
    let mut p = GluingPattern::new();
    let a = p.vertex("a", 1, 2 * k + 1, 2 * k);
    let b = p.vertex("b", 1, 2 * k + 3, 2 * k + 2);
    let c = p.vertex("c", 2, 4, 5);
    connect_times(&mut p, a, b, 2 * k);
    connect_times(&mut p, a, c, 1);
    connect_times(&mut p, b, c, 3);
    p
}

/// A degree-`i` class of `Γ_{1,s}` stabilized by `X_{1,2}` in degree 0.
pub fn rank_one_stabilization(s: usize, i: usize) -> GluingPattern {
    let mut p = GluingPattern::new();
    let a = p.vertex("a", 1, s, i);
    let b = p.vertex("t", 1, 2, 0);
    connect_times(&mut p, a, b, 1);
    p
}

/// First step of the maximal-torus chain: a degree-`k` class of
/// `Γ_{1,2n−1}` with one self-pairing, landing in `Γ_{2,2n−3}`.
pub fn maximal_torus_step(n: usize, k: usize) -> GluingPattern {
    self_gluing(2 * n - 1, k)
}

/// The whole chain: `n−1` self-pairings of `X_{1,2n−1}`, landing in `Aut(F_n)`.
pub fn maximal_torus(n: usize, k: usize) -> GluingPattern {
    let mut p = GluingPattern::new();
    let a = p.vertex("a", 1, 2 * n - 1, k);
    connect_times(&mut p, a, a, n - 1);
    p
}

/// Generalized Morita pattern with two rank-one vertices of valences 3 and 5:
/// three shared edges, the remaining two leaves of the second vertex meeting
/// a trivalent rank-zero vertex with one hair.
pub fn morita_three_five() -> GluingPattern {
    let mut p = GluingPattern::new();
    let a = p.vertex("a", 1, 3, 2);
    let b = p.vertex("b", 1, 5, 4);
    let z = p.vertex("z", 0, 3, 0);
    connect_times(&mut p, a, b, 3);
    connect_times(&mut p, b, z, 2);
    p
}
