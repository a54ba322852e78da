mod common;

use proptest::prelude::*;

use tensordim::solver::build_pair_table;
use tensordim::{
    all_pairs_distances, is_resolving, lemma2_witness, representation, tensor_of_cliques, tensor_product,
    CliqueFactors, DistanceMatrix, Graph, OrderedVertexSet, Resolution, INF,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.0..0.7f64).prop_map(|(n, seed, p)| {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        common::random_connected_graph(&mut rng, n, p)
    })
}

fn arb_factors() -> impl Strategy<Value = CliqueFactors> {
    proptest::collection::vec(2usize..=5, 1..=3).prop_map(|s| CliqueFactors::new(s).unwrap())
}

proptest! {
    #[test]
    fn tensor_degree_law(g in arb_graph(6), h in arb_graph(6)) {
        let p = tensor_product(&g, &h);
        prop_assert_eq!(p.n(), g.n() * h.n());
        prop_assert_eq!(p.edge_count(), 2 * g.edge_count() * h.edge_count());
        for u in 0..g.n() {
            for v in 0..h.n() {
                prop_assert_eq!(p.degree(u * h.n() + v), g.degree(u) * h.degree(v));
            }
        }
    }

    #[test]
    fn tensor_commutes_up_to_swap(g in arb_graph(5), h in arb_graph(5)) {
        let gh = tensor_product(&g, &h);
        let hg = tensor_product(&h, &g);
        let swap = |id: usize| (id % h.n()) * g.n() + id / h.n();
        prop_assert_eq!(gh.edge_count(), hg.edge_count());
        for (a, b) in gh.edges() {
            prop_assert!(hg.has_edge(swap(a), swap(b)));
        }
    }

    #[test]
    fn distance_matrix_is_a_metric(g in arb_graph(9)) {
        let d = all_pairs_distances(&g);
        let n = g.n();
        for u in 0..n {
            prop_assert_eq!(d.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                if d.get(u, v) == INF { continue; }
                for w in 0..n {
                    let (a, b) = (d.get(u, w), d.get(w, v));
                    if a != INF && b != INF {
                        prop_assert!(d.get(u, v) <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn codec_round_trip(f in arb_factors(), seed in any::<usize>()) {
        let id = seed % f.vertex_count();
        let c = f.coords_of(id).unwrap();
        prop_assert_eq!(f.flat_index(c.as_slice()).unwrap(), id);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(10)) {
        let mut buf = Vec::new();
        tensordim::edgelist::write_edge_list(&g, &mut buf).unwrap();
        prop_assert_eq!(tensordim::edgelist::read_edge_list(&buf[..]).unwrap(), g);
    }

    #[test]
    fn resolving_is_monotone(g in arb_connected(9), mask in any::<u16>(), extra in any::<u16>()) {
        let d = all_pairs_distances(&g);
        let n = g.n();
        let small: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let big: Vec<usize> = (0..n).filter(|&v| (mask | extra) >> v & 1 == 1).collect();
        let a = is_resolving(&d, &OrderedVertexSet::new(small).unwrap()).unwrap();
        let b = is_resolving(&d, &OrderedVertexSet::new(big).unwrap()).unwrap();
        if a.is_resolving() {
            prop_assert!(b.is_resolving());
        }
    }

    #[test]
    fn certificates_are_valid(g in arb_graph(9), mask in any::<u16>()) {
        let d = all_pairs_distances(&g);
        let w = OrderedVertexSet::new((0..g.n()).filter(|&v| mask >> v & 1 == 1).collect()).unwrap();
        if let Resolution::Unresolved(x, y) = is_resolving(&d, &w).unwrap() {
            prop_assert!(x < y);
            prop_assert_eq!(representation(&d, x, &w).unwrap(), representation(&d, y, &w).unwrap());
        }
    }

    #[test]
    fn hitting_set_equivalence(g in arb_connected(10), mask in any::<u16>()) {
        let d = all_pairs_distances(&g);
        let t = build_pair_table(&d).unwrap();
        let ids: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let w = OrderedVertexSet::new(ids.clone()).unwrap();
        prop_assert_eq!(is_resolving(&d, &w).unwrap().is_resolving(), t.is_hit_by(&ids));
        for ((x, y), _) in t.iter() {
            for v in 0..g.n() {
                prop_assert_eq!(t.resolves(x, y, v), d.get(x, v) != d.get(y, v));
            }
        }
    }

    #[test]
    fn swapped_pair_witness_is_sound(m in 3usize..=5, n in 3usize..=5, mask in any::<u32>()) {
        let f = CliqueFactors::new(vec![m, n]).unwrap();
        let d = DistanceMatrix::of_clique_product(&f);
        let w = OrderedVertexSet::new((0..m * n).filter(|&v| mask >> v & 1 == 1).collect()).unwrap();
        if let Some((a, b)) = lemma2_witness(&w, &f).unwrap() {
            prop_assert_ne!(a, b);
            prop_assert_eq!(representation(&d, a, &w).unwrap(), representation(&d, b, &w).unwrap());
            prop_assert!(!is_resolving(&d, &w).unwrap().is_resolving());
        }
    }

    #[test]
    fn projection_gap_blocks_resolution(m in 3usize..=5, n in 3usize..=5, coord in 0usize..2, mask in any::<u32>()) {
        let f = CliqueFactors::new(vec![m, n]).unwrap();
        let d = DistanceMatrix::of_clique_product(&f);
        // drop values 0 and 1 of `coord` from W
        let ids: Vec<usize> = (0..m * n)
            .filter(|&v| mask >> v & 1 == 1 && f.coords_of(v).unwrap().0[coord] >= 2)
            .collect();
        let w = OrderedVertexSet::new(ids).unwrap();
        match is_resolving(&d, &w).unwrap() {
            Resolution::Resolving => prop_assert!(false, "resolving despite a projection gap"),
            Resolution::Unresolved(x, y) => {
                let (cx, cy) = (f.coords_of(x).unwrap().0, f.coords_of(y).unwrap().0);
                prop_assert_eq!((0..2).filter(|&i| cx[i] != cy[i]).count(), 1);
            }
        }
    }
}

#[test]
fn clique_product_distance_rule() {
    // exhaustive for t <= 3, sizes 3..=5
    for t in 1..=3u32 {
        for idx in 0..3usize.pow(t) {
            let sizes: Vec<usize> = (0..t).map(|i| 3 + idx / 3usize.pow(i) % 3).collect();
            let f = CliqueFactors::new(sizes.clone()).unwrap();
            let d = all_pairs_distances(&tensor_of_cliques(&f));
            for x in 0..f.vertex_count() {
                let cx = f.coords_of(x).unwrap().0;
                for y in 0..f.vertex_count() {
                    let cy = f.coords_of(y).unwrap().0;
                    let share = cx.iter().zip(&cy).any(|(a, b)| a == b);
                    let want = if x == y {
                        0
                    } else if share {
                        2
                    } else {
                        1
                    };
                    assert_eq!(d.get(x, y), want, "{sizes:?} {cx:?} {cy:?}");
                }
            }
            assert_eq!(DistanceMatrix::of_clique_product(&f), d);
        }
    }
}

#[test]
fn diameter_by_smallest_factors() {
    use tensordim::{diameter, Diameter};
    for t in 2..=3u32 {
        for idx in 0..4usize.pow(t) {
            let mut sizes: Vec<usize> = (0..t).map(|i| 2 + idx / 4usize.pow(i) % 4).collect();
            let d = diameter(&tensor_of_cliques(&CliqueFactors::new(sizes.clone()).unwrap()));
            sizes.sort_unstable();
            let want = match (sizes[0], sizes[1]) {
                (2, 2) => Diameter::Disconnected,
                (2, _) => Diameter::Finite(3),
                _ => Diameter::Finite(2),
            };
            assert_eq!(d, want, "{sizes:?}");
        }
    }
}
