use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use robp_lab::bp::{best_order_size, bp_satisfying_masks, nfbdd_compile, uniformize};
use robp_lab::catalog::random_bounded_degree;
use robp_lab::cnf::{cnf_from_graph, satisfying_masks};
use robp_lab::cover::{extract_cut_cover, path_weights, verify_certificate, DEFAULT_PATH_CAP};
use robp_lab::graph::Graph;
use robp_lab::io::{parse_bp, parse_graph, write_bp, write_graph};

/// Random graph without isolated vertices, relabelled onto `0..n`.
fn graph(seed: u64, n: usize) -> Option<Graph> {
    let g = random_bounded_degree(&mut ChaCha8Rng::seed_from_u64(seed), n, 4, 0.6);
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (keep.binary_search(&u).unwrap(), keep.binary_search(&v).unwrap()))
        .collect();
    (keep.len() >= 2).then(|| Graph::from_edges(keep.len(), &edges).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn compile_preserves_function(seed in any::<u64>(), n in 2usize..9, rot in 0usize..9) {
        let Some(g) = graph(seed, n) else { return Ok(()) };
        let g = parse_graph(&write_graph(&g)).unwrap();
        let cnf = cnf_from_graph(&g).unwrap();
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.rotate_left(rot % g.n());
        let y = nfbdd_compile(&cnf, &order).unwrap();
        let truth = satisfying_masks(&cnf, 20).unwrap();
        prop_assert_eq!(bp_satisfying_masks(y.as_nrobp(), 20).unwrap(), truth.clone());
        prop_assert!(path_weights::<f64>(&y).iter().all(|w| (w - 1.0).abs() < 1e-12));

        let z = parse_bp(&write_bp(y.as_nrobp()).unwrap()).unwrap();
        // already uniform: only the edge listing order may change
        let u = uniformize(&z).unwrap();
        let sorted = |z: &robp_lab::bp::Nrobp| {
            let mut e: Vec<_> = z.edges().iter().map(|e| (e.tail, e.head, e.label)).collect();
            e.sort();
            e
        };
        prop_assert_eq!(u.num_nodes(), z.num_nodes());
        prop_assert_eq!(sorted(&u), sorted(&z));
        prop_assert!(best_order_size(&cnf, 12).unwrap().edges <= y.size());

        let cert = extract_cut_cover(&z, &g, DEFAULT_PATH_CAP).unwrap();
        let report = verify_certificate(&z, &g, &cert, 20).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }
}
