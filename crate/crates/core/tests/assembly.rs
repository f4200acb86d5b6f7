use gammans::assembly::{
    assembly_verdict, catalog, format_pattern, morita_verdict, parse_pattern, validate_pattern, ClassModule,
    Criterion, GluingPattern, LeafRef, MoritaGraph, MoritaKind, Outcome, Verdict, VerdictOptions,
};
use gammans::Module;
use proptest::prelude::*;

fn verdict(p: &GluingPattern) -> Verdict {
    assembly_verdict(p, VerdictOptions::default()).unwrap()
}

#[test]
fn self_gluing_vanishes_in_positive_degree() {
    for s in 2..=12 {
        for degree in (4..s).step_by(4) {
            let v = verdict(&catalog::self_gluing(s, degree));
            assert!(v.is_forced_zero(), "s = {s}, degree = {degree}\n{v}");
        }
        assert_eq!(verdict(&catalog::self_gluing(s, 0)).outcome, Outcome::Inconclusive);
    }
}

#[test]
fn stabilization_vanishes() {
    for s in 1..=12 {
        for i in (2..s).step_by(2) {
            let v = verdict(&catalog::rank_one_stabilization(s, i));
            assert!(v.is_forced_zero(), "s = {s}, i = {i}\n{v}");
            assert!(matches!(v.fired(), Some(Criterion::DegreeBound | Criterion::InducedSupport)));
        }
    }
}

#[test]
fn mss_classes_vanish_by_associativity() {
    for k in 1..=3 {
        let v = verdict(&catalog::mss_gamma(k));
        assert_eq!(v.fired(), Some(Criterion::Subgluing), "k = {k}\n{v}");
        let inner = &v.trace[v.trace.len() - 2];
        assert_eq!(inner.signature.rank, 2);
        assert_eq!(inner.signature.degree, 4 * k + 2);
    }
}

#[test]
fn nontrivial_classes_are_never_forced() {
    let mut patterns: Vec<GluingPattern> = (1..=3).map(catalog::morita).collect();
    patterns.push(catalog::rank_one_pair(1, 1));
    patterns.extend((1..=2).map(catalog::eisenstein));
    for p in &patterns {
        let v = verdict(p);
        assert_eq!(v.outcome, Outcome::Inconclusive, "{}\n{v}", p.describe());
        assert!(!v.budget_exhausted);
    }
}

#[test]
fn generalized_morita_agrees_with_the_engine() {
    let p = catalog::morita_three_five();
    assert!(verdict(&p).is_forced_zero());
    let mut g = MoritaGraph::new();
    let a = g.add_vertex(MoritaKind::RankOne, 0);
    let b = g.add_vertex(MoritaKind::RankOne, 0);
    let z = g.add_vertex(MoritaKind::RankZero, 1);
    for _ in 0..3 {
        g.add_edge(a, b);
    }
    g.add_edge(b, z);
    g.add_edge(b, z);
    let mv = morita_verdict(&g).unwrap();
    assert_eq!(mv.fired(), Some(Criterion::MoritaValence));
    assert_eq!(mv.signature, validate_pattern(&p).unwrap());
    assert_eq!(
        format_pattern(&g.to_gluing_pattern().unwrap()).lines().count(),
        format_pattern(&p).lines().count()
    );
}

#[test]
fn unknown_modules_only_use_sound_criteria() {
    let mut p = GluingPattern::new();
    p.add_vertex(gammans::assembly::Vertex {
        id: "x".into(),
        rank: 3,
        leaves: 2,
        degree: 9,
        module: ClassModule::Unknown,
    });
    p.glue(LeafRef { vertex: 0, leaf: 1 }, LeafRef { vertex: 0, leaf: 2 });
    // Γ(4,0) has vcd 5
    assert_eq!(verdict(&p).fired(), Some(Criterion::DegreeBound));
    let mut q = GluingPattern::new();
    q.add_vertex(gammans::assembly::Vertex {
        id: "x".into(),
        rank: 3,
        leaves: 2,
        degree: 1,
        module: ClassModule::Unknown,
    });
    q.glue(LeafRef { vertex: 0, leaf: 1 }, LeafRef { vertex: 0, leaf: 2 });
    assert_eq!(verdict(&q).outcome, Outcome::Inconclusive);
}

#[test]
fn explicit_modules_feed_the_support_test() {
    let text = "vertex a rank=1 leaves=3 degree=2 module=(3)\nvertex b rank=1 leaves=3 degree=2\nglue a.1 b.1\n";
    let p = parse_pattern(text).unwrap();
    assert_eq!(p.vertices()[0].module, ClassModule::Explicit(Module::trivial(3)));
    // (2) ∘ (1,1) misses (2,2)
    assert_eq!(verdict(&p).fired(), Some(Criterion::InducedSupport));
}

#[test]
fn full_gluing_with_disjoint_modules() {
    let text = "vertex a rank=1 leaves=3 degree=2 module=(3)\nvertex b rank=1 leaves=3 degree=2\nglue a.1 b.1\nglue a.2 b.2\nglue a.3 b.3\n";
    let v = verdict(&parse_pattern(text).unwrap());
    assert_eq!(v.fired(), Some(Criterion::FullGluingCoinvariants));
}

/// Rebuilds `p` with vertices in `order` and each vertex's leaves permuted
/// by rotating them by `shift`.
fn relabel(p: &GluingPattern, order: &[usize], shift: usize) -> GluingPattern {
    let mut q = GluingPattern::new();
    for &v in order {
        q.add_vertex(p.vertices()[v].clone());
    }
    let position = |v: usize| order.iter().position(|&w| w == v).unwrap();
    let leaf = |r: LeafRef| {
        let n = p.vertices()[r.vertex].leaves;
        LeafRef {
            vertex: position(r.vertex),
            leaf: (r.leaf - 1 + shift) % n + 1,
        }
    };
    for pairing in p.pairings().iter().rev() {
        q.glue(leaf(pairing.1), leaf(pairing.0));
    }
    q
}

fn catalog_patterns() -> Vec<GluingPattern> {
    vec![
        catalog::rank_one_pair(1, 1),
        catalog::rank_one_pair(2, 2),
        catalog::rank_one_pair(1, 3),
        catalog::rank_one_stabilization(9, 4),
        catalog::self_gluing(9, 4),
        catalog::mss_gamma(1),
        catalog::eisenstein(1),
        catalog::morita_three_five(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn support_test_ignores_labels(index in 0usize..8, seed in 0usize..720, shift in 0usize..7) {
        let p = &catalog_patterns()[index];
        let mut order: Vec<usize> = (0..p.vertices().len()).collect();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            order.swap(i, s % (i + 1));
            s /= i + 1;
        }
        let q = relabel(p, &order, shift);
        let (a, b) = (verdict(p), verdict(&q));
        prop_assert_eq!(a.outcome, b.outcome);
        prop_assert_eq!(a.signature, b.signature);
        prop_assert_eq!(a.witnesses, b.witnesses);
    }

    #[test]
    fn staged_gluing_composes(
        specs in prop::collection::vec((0usize..3, 0usize..5), 1..5),
        extra in prop::collection::vec((0usize..5, 0usize..5), 0..4),
        split in 0usize..5,
    ) {
        let mut p = GluingPattern::new();
        for (i, &(rank, spare)) in specs.iter().enumerate() {
            // room for the chain plus spare leaves; rank-zero vertices need 3
            let leaves = (2 + spare).max(if rank == 0 { 3 } else { 0 });
            p.vertex(format!("v{i}"), rank, leaves, 0);
        }
        for i in 1..specs.len() {
            p.connect(i - 1, i).unwrap();
        }
        for &(a, b) in &extra {
            let (a, b) = (a % specs.len(), b % specs.len());
            if p.connect(a, b).is_err() {
                break;
            }
        }
        let one_shot = validate_pattern(&p).unwrap();

        // stage one: the spanning chain plus the first `split` extra pairings
        let chain = specs.len() - 1;
        let cut = (chain + split).min(p.pairings().len());
        let mut first = GluingPattern::new();
        for v in p.vertices() {
            first.add_vertex(v.clone());
        }
        for pairing in &p.pairings()[..cut] {
            first.glue(pairing.0, pairing.1);
        }
        let stage = validate_pattern(&first).unwrap();
        let mut second = GluingPattern::new();
        second.vertex("g", stage.rank, stage.leaves, stage.degree);
        for _ in cut..p.pairings().len() {
            second.connect(0, 0).unwrap();
        }
        let composed = validate_pattern(&second).unwrap();
        prop_assert_eq!((composed.rank, composed.leaves, composed.degree), (one_shot.rank, one_shot.leaves, one_shot.degree));
    }
}
