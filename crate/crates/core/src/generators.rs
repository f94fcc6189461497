//! Named and random instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{vset, VertexSet};

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.connect(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.connect(n - 1, 0);
    }
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    g.make_clique(&(0..n).collect::<Vec<_>>());
    g
}

/// `K_{1,leaves}` with the center at 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::new(leaves + 1);
    for v in 1..=leaves {
        g.connect(0, v);
    }
    g
}

/// Triangle `a b c` plus a pendant `d` on `c`; vertices 0..4 are a, b, c, d.
pub fn triangle_pendant() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
}

pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.connect(i, (i + 1) % 5);
        g.connect(i, i + 5);
        g.connect(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// Eight vertices, four edges: {1,2}, {2,3,4}, {3,5}, {4,5,6,7,8} (1-based).
pub fn h1() -> Hypergraph {
    Hypergraph::from_one_based(8, &[&[1, 2], &[2, 3, 4], &[3, 5], &[4, 5, 6, 7, 8]])
}

/// Six vertices, four edges: {1,2}, {2,3,4}, {3,5}, {4,5,6} (1-based).
pub fn h2() -> Hypergraph {
    Hypergraph::from_one_based(6, &[&[1, 2], &[2, 3, 4], &[3, 5], &[4, 5, 6]])
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.connect(u, v);
            }
        }
    }
    g
}

/// Random spanning tree (random attachment over a shuffled order) plus
/// `G(n, p)` noise.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = random_graph(n, p, rng);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.connect(order[i], parent);
    }
    g
}

/// `m` edges over `n` vertices, each vertex kept with probability `p`;
/// empty draws are replaced by a random singleton.
pub fn random_hypergraph<R: Rng>(n: usize, m: usize, p: f64, rng: &mut R) -> Hypergraph {
    let edges = (0..m)
        .map(|_| {
            let mut e: VertexSet = (0..n).filter(|_| rng.gen_bool(p)).collect();
            if e.is_empty() {
                e.insert(rng.gen_range(0..n));
            }
            e
        })
        .collect();
    Hypergraph::new(n, edges)
}

/// A random Sperner hypergraph (inclusion-minimal edges of a random draw).
pub fn random_sperner_hypergraph<R: Rng>(n: usize, m: usize, p: f64, rng: &mut R) -> Hypergraph {
    random_hypergraph(n, m, p, rng).sperner_reduce()
}

/// Disjoint random subsets `(A, B)` of `0..n`.
pub fn random_partial_assignment<R: Rng>(n: usize, rng: &mut R) -> (VertexSet, VertexSet) {
    let mut a = vset(&[]);
    let mut b = vset(&[]);
    for v in 0..n {
        match rng.gen_range(0..4) {
            0 => {
                a.insert(v);
            }
            1 => {
                b.insert(v);
            }
            _ => {}
        }
    }
    (a, b)
}
