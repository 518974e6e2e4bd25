#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tournament_bounds::digraph::Digraph;
use tournament_bounds::field::paley_of_order;

/// Paley orders small enough for exact search in tests.
pub const PALEY_ORDERS: [u64; 9] = [3, 7, 11, 19, 23, 27, 31, 43, 47];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_tournament(rng: &mut impl Rng, v: usize) -> Digraph {
    let mut edges = Vec::new();
    for x in 0..v {
        for y in (x + 1)..v {
            edges.push(if rng.gen() { (x, y) } else { (y, x) });
        }
    }
    Digraph::from_edges(v, edges).unwrap()
}

/// Each pair gets an arc with probability `p`, in a random direction.
pub fn random_oriented(rng: &mut impl Rng, v: usize, p: f64) -> Digraph {
    let mut edges = Vec::new();
    for x in 0..v {
        for y in (x + 1)..v {
            if rng.gen_bool(p) {
                edges.push(if rng.gen() { (x, y) } else { (y, x) });
            }
        }
    }
    Digraph::from_edges(v, edges).unwrap()
}

/// A circulant tournament on odd `n`: `x → x + d` for one of `±d` per `d`.
pub fn random_circulant(rng: &mut impl Rng, n: usize) -> Digraph {
    assert!(n % 2 == 1);
    let conn: Vec<usize> = (1..=n / 2).map(|d| if rng.gen() { d } else { n - d }).collect();
    Digraph::from_fn(n, |x, y| conn.contains(&((y + n - x) % n))).unwrap()
}

pub fn paley_graphs() -> Vec<(u64, Digraph)> {
    PALEY_ORDERS.iter().map(|&q| (q, paley_of_order(q).unwrap())).collect()
}

/// Named digraphs for soundness and inequality checks.
pub fn corpus() -> Vec<(String, Digraph)> {
    let mut out: Vec<(String, Digraph)> = Vec::new();
    for (q, g) in paley_graphs() {
        out.push((format!("paley:{q}"), g.clone()));
        if q > 3 {
            out.push((format!("paley:{q} minus 0"), g.delete_vertex(0).unwrap()));
        }
    }
    for s in 1..=12 {
        out.push((format!("transitive:{s}"), Digraph::transitive(s).unwrap()));
    }
    for n in [3, 4, 5, 8, 13] {
        out.push((format!("cycle:{n}"), Digraph::cycle(n).unwrap()));
    }
    let mut r = rng(2024);
    for i in 0..40 {
        let v = r.gen_range(2..=14);
        out.push((format!("random tournament #{i}"), random_tournament(&mut r, v)));
    }
    for i in 0..20 {
        let v = r.gen_range(2..=14);
        out.push((format!("random oriented #{i}"), random_oriented(&mut r, v, 0.7)));
    }
    for i in 0..20 {
        let n = 2 * r.gen_range(1..=10) + 1;
        out.push((format!("circulant #{i}"), random_circulant(&mut r, n)));
    }
    out
}

/// `cot((2j-1)π/(2s))` for `j = 1..=s`, descending.
pub fn cotangent_spectrum(s: usize) -> Vec<f64> {
    (1..=s)
        .map(|j| 1.0 / ((2 * j - 1) as f64 * std::f64::consts::PI / (2 * s) as f64).tan())
        .collect()
}
