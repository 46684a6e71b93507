use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weyl_nichols::dynkin::{is_positive_definite, CartanGraph, DynkinType};

fn graph_from_mask(k: usize, mask: u64) -> CartanGraph {
    let mut adj = vec![vec![false; k]; k];
    let mut bit = 0;
    for i in 0..k {
        for j in i + 1..k {
            if mask >> bit & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
            bit += 1;
        }
    }
    CartanGraph::from_adjacency(&adj)
}

fn tree_from_prufer(seq: &[usize]) -> CartanGraph {
    let k = seq.len() + 2;
    let mut degree = vec![1; k];
    for &s in seq {
        degree[s] += 1;
    }
    let mut adj = vec![vec![false; k]; k];
    let mut link = |i: usize, j: usize| {
        adj[i][j] = true;
        adj[j][i] = true;
    };
    for &s in seq {
        let leaf = (0..k).find(|&v| degree[v] == 1).unwrap();
        link(leaf, s);
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..k).filter(|&v| degree[v] == 1).collect();
    link(rest[0], rest[1]);
    CartanGraph::from_adjacency(&adj)
}

fn agree(g: &CartanGraph) {
    assert_eq!(g.is_finite_type(), is_positive_definite(&g.a), "{:?}", g.a);
}

#[test]
fn all_graphs_up_to_six_nodes() {
    for k in 1..=6 {
        let edges = k * (k - 1) / 2;
        for mask in 0..1u64 << edges {
            agree(&graph_from_mask(k, mask));
        }
    }
}

#[test]
fn all_labelled_trees_on_seven_and_eight_nodes() {
    for k in [7usize, 8] {
        let len = k - 2;
        let total = k.pow(len as u32);
        for code in 0..total {
            let mut c = code;
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = c % k;
                    c /= k;
                    d
                })
                .collect();
            agree(&tree_from_prufer(&seq));
        }
    }
}

#[test]
fn seeded_random_graphs_on_nine_nodes() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..20_000 {
        let mask: u64 = rng.gen::<u64>() & ((1 << 36) - 1);
        let sparse = mask & rng.gen::<u64>() & rng.gen::<u64>();
        agree(&graph_from_mask(9, sparse));
    }
}

#[test]
fn named_types() {
    let path = |k: usize| tree_from_prufer(&(1..k - 1).collect::<Vec<_>>());
    assert_eq!(path(5).finite_types(), Some(vec![DynkinType::A(5)]));
    let e8 = tree_from_prufer(&[1, 2, 3, 4, 5, 2]);
    assert_eq!(e8.finite_types(), Some(vec![DynkinType::E(8)]));
    let d4 = tree_from_prufer(&[0, 0]);
    assert_eq!(d4.finite_types(), Some(vec![DynkinType::D(4)]));
    let triangle = graph_from_mask(3, 0b111);
    assert_eq!(triangle.finite_types(), None);
    let d4_affine = tree_from_prufer(&[0, 0, 0]);
    assert!(!d4_affine.is_finite_type());
}
