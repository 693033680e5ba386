mod common;

use proptest::prelude::*;

use common::{assert_euler, vars};
use eil::betti::BettiEngine;
use eil::campaign::{run_campaign, CampaignConfig, Span};
use eil::{
    intersect, make_ideal, multiply_external, polarize, predict, random_instance, ClassTag, InstanceParams, Monomial,
    MonomialIdeal, Variable, Vertex, WeightedDigraph,
};

const N: usize = 4;

fn ambient() -> Vec<Variable> {
    vars(N, "x")
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=3, N)
        .prop_filter("not the unit", |e| e.iter().any(|&x| x > 0))
        .prop_map(|e| {
            Monomial::from_pairs(ambient().into_iter().zip(e).filter(|(_, x)| *x > 0)).unwrap()
        })
}

fn ideal(max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(), 1..=max_gens).prop_map(|g| make_ideal(g, ambient()).unwrap())
}

fn cyclic_or_forest() -> impl Strategy<Value = WeightedDigraph> {
    (
        prop::sample::select(vec![
            ClassTag::RootedForest,
            ClassTag::OrientedCycle,
            ClassTag::UnicyclicAttached,
            ClassTag::UnicyclicGeneral,
        ]),
        3usize..=5,
        2usize..=4,
        1u32..=3,
        any::<u64>(),
    )
        .prop_map(|(tag, cycle_len, extra_vertices, lo, seed)| {
            let params = InstanceParams {
                cycle_len,
                extra_vertices,
                weight_range: lo..=lo + 2,
                seed,
            };
            random_instance(tag, &params).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn make_ideal_keeps_a_minimal_generating_set(raw in prop::collection::vec(monomial(), 1..8)) {
        let i = make_ideal(raw.clone(), ambient()).unwrap();
        let g = i.generators();
        for (a, x) in g.iter().enumerate() {
            for (b, y) in g.iter().enumerate() {
                prop_assert!(a == b || !x.divides(y));
            }
        }
        for m in &raw {
            prop_assert!(i.contains(m));
        }
    }

    #[test]
    fn intersection_laws(a in ideal(4), b in ideal(4), c in ideal(3)) {
        prop_assert_eq!(intersect(&a, &b).unwrap(), intersect(&b, &a).unwrap());
        prop_assert_eq!(intersect(&a, &a).unwrap(), a.clone());
        let left = intersect(&intersect(&a, &b).unwrap(), &c).unwrap();
        let right = intersect(&a, &intersect(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn intersection_is_membership_conjunction(a in ideal(3), b in ideal(3), m in monomial()) {
        let both = intersect(&a, &b).unwrap();
        prop_assert_eq!(both.contains(&m), a.contains(&m) && b.contains(&m));
    }

    #[test]
    fn polarization_is_squarefree_and_preserves_count(i in ideal(5)) {
        let p = polarize(&i).unwrap();
        prop_assert!(p.is_squarefree());
        prop_assert_eq!(p.len(), i.len());
        for (g, h) in i.generators().iter().zip(p.generators()) {
            prop_assert_eq!(g.degree(), h.degree());
        }
    }

    #[test]
    fn degree_sum_is_twice_the_edge_count(d in cyclic_or_forest()) {
        let total: usize = (0..d.vertex_count()).map(|v| d.degree_at(v)).sum();
        prop_assert_eq!(total, 2 * d.edge_count());
        prop_assert_eq!(d.edge_ideal().len(), d.edge_count());
    }

    #[test]
    fn deleting_an_edge_drops_its_generator(d in cyclic_or_forest(), pick in any::<prop::sample::Index>()) {
        let edges: Vec<(String, String)> = d.edges().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let (t, h) = &edges[pick.index(edges.len())];
        let smaller = d.delete_edge(t, h).unwrap();
        prop_assert_eq!(smaller.edge_count(), d.edge_count() - 1);
        let gone = Monomial::from_pairs([
            (Variable::new(t.clone()), 1),
            (Variable::new(h.clone()), d.weight(h).unwrap()),
        ])
        .unwrap();
        let mut want: Vec<Monomial> = d.edge_ideal().sorted_generators();
        want.retain(|g| *g != gone);
        prop_assert_eq!(smaller.edge_ideal().sorted_generators(), want);
    }

    #[test]
    fn prediction_ignores_vertex_names_and_order(d in cyclic_or_forest(), shift in 0usize..8) {
        let n = d.vertex_count();
        let perm: Vec<usize> = (0..n).map(|k| (k + shift) % n).collect();
        let vertices: Vec<Vertex> = (0..n)
            .map(|k| {
                let old = perm[k];
                Vertex { name: format!("v{}", old + 10), weight: d.weight_at(old) }
            })
            .collect();
        let position = |old: usize| perm.iter().position(|&p| p == old).unwrap();
        let edges = d.edge_indices().iter().map(|&(a, b)| (position(a), position(b))).collect();
        let renamed = WeightedDigraph::new(vertices, edges).unwrap();
        let (p, q) = (predict(&d).unwrap(), predict(&renamed).unwrap());
        prop_assert_eq!(
            (p.reg_pred, p.pd_pred, p.applicable, p.class_used, p.violations.len()),
            (q.reg_pred, q.pd_pred, q.applicable, q.class_used, q.violations.len())
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn betti_invariants_under_polarization_and_external_factors(i in ideal(4), e in 1u32..=3) {
        let engine = BettiEngine::default();
        let t = engine.betti_table(&i).unwrap();
        assert_euler(&i, &t);
        let p = polarize(&i).unwrap();
        prop_assert_eq!(engine.betti_table(&p).unwrap(), t.clone());

        let u = Monomial::power(Variable::new("z"), e);
        let ui = multiply_external(&u, &i).unwrap();
        let tu = engine.betti_table(&ui).unwrap();
        assert_euler(&ui, &tu);
        for ((a, j), n) in t.entries() {
            prop_assert_eq!(tu.get(a, j + u64::from(e)), n);
        }
        prop_assert_eq!(tu.entries().count(), t.entries().count());
    }

    #[test]
    fn campaign_counts_add_up(seed in any::<u64>(), tag in prop::sample::select(vec![
        ClassTag::RootedForest, ClassTag::OrientedCycle, ClassTag::UnicyclicAttached,
    ])) {
        let mut cfg = CampaignConfig::new(tag, 3, seed);
        cfg.weights = Span::new(1, 3);
        let r = run_campaign(&cfg, false).unwrap();
        prop_assert_eq!(r.pass_count + r.fail_count + r.inapplicable_count, 3);
        prop_assert_eq!(r.instances.len(), 3);
        prop_assert_eq!(r.fail_count, 0);
        for (k, o) in r.instances.iter().enumerate() {
            prop_assert_eq!(o.index, k);
        }
    }
}
