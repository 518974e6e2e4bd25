mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use tournament_bounds::bip::{
    adjacency_poly, bip_bound, bip_feasible, block_intersection_coeffs, thm54_bound, BipInput,
};
use tournament_bounds::bitset::BitSet;
use tournament_bounds::bounds::{
    best_bound, drt_bound_exact, hoffman_general_value, hoffman_regular_value, interlacing_bound,
};
use tournament_bounds::digraph::Digraph;
use tournament_bounds::io::{read_digraph, write_digraph, write_json};
use tournament_bounds::search::{is_transitive_set, max_transitive_bb, max_transitive_brute, verify_transitive};
use tournament_bounds::spectral::{project, project_interpolated, spectrum, ComplexVector};

use common::*;

/// A digraph on `1..=max_v` vertices; each pair is absent, forward or
/// backward, or only forward/backward when `tournament`.
fn digraph(max_v: usize, tournament: bool) -> impl Strategy<Value = Digraph> {
    (1..=max_v).prop_flat_map(move |v| {
        let pairs = v * (v - 1) / 2;
        let choice = if tournament { 1u8..=2 } else { 0u8..=2 };
        prop::collection::vec(choice, pairs).prop_map(move |c| {
            let mut edges = Vec::new();
            let mut it = c.into_iter();
            for x in 0..v {
                for y in (x + 1)..v {
                    match it.next().unwrap() {
                        1 => edges.push((x, y)),
                        2 => edges.push((y, x)),
                        _ => {}
                    }
                }
            }
            Digraph::from_edges(v, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn spectrum_is_symmetric_and_angles_sum_to_one(g in digraph(12, false)) {
        let spec = spectrum(&g).unwrap();
        let ev = spec.expanded();
        let n = ev.len();
        prop_assert_eq!(n, g.v());
        for i in 0..n {
            prop_assert!((ev[i] + ev[n - 1 - i]).abs() < 1e-9);
        }
        prop_assert!((spec.angle_sum_sq() - 1.0).abs() < 1e-8);
        // Σ θ² = tr(KᵀK) = 2·(number of arcs)
        let trace: f64 = ev.iter().map(|x| x * x).sum();
        prop_assert!((trace - 2.0 * g.edge_count() as f64).abs() < 1e-8);
    }

    #[test]
    fn projectors_resolve_the_all_ones_vector(g in digraph(9, false)) {
        let spec = spectrum(&g).unwrap();
        let ones = ComplexVector::real(vec![1.0; g.v()]);
        let mut re = vec![0.0; g.v()];
        let mut im = vec![0.0; g.v()];
        for i in 0..spec.entries().len() {
            let p = project(&g, &spec, i, &ones).unwrap();
            let q = project_interpolated(&g, &spec, i, &ones).unwrap();
            for k in 0..g.v() {
                re[k] += p.re[k];
                im[k] += p.im[k];
                prop_assert!((p.re[k] - q.re[k]).abs() < 1e-7 && (p.im[k] - q.im[k]).abs() < 1e-7);
            }
        }
        for k in 0..g.v() {
            prop_assert!((re[k] - 1.0).abs() < 1e-9 && im[k].abs() < 1e-9);
        }
    }

    #[test]
    fn branch_and_bound_matches_brute_force(g in digraph(12, true)) {
        let brute = max_transitive_brute(&g).unwrap();
        let bb = max_transitive_bb(&g, None);
        prop_assert_eq!(brute.max_size, bb.max_size);
        prop_assert!(verify_transitive(&g, &bb.witness).unwrap());
        prop_assert!(verify_transitive(&g, &brute.witness).unwrap());
    }

    #[test]
    fn search_on_oriented_graphs(g in digraph(10, false)) {
        let brute = max_transitive_brute(&g).unwrap();
        let bb = max_transitive_bb(&g, None);
        prop_assert_eq!(brute.max_size, bb.max_size);
        prop_assert!(verify_transitive(&g, &bb.witness).unwrap());
    }

    #[test]
    fn bounds_are_sound(g in digraph(11, false)) {
        let exact = max_transitive_brute(&g).unwrap().max_size as u64;
        let summary = best_bound(&g).unwrap();
        for r in summary.reports.iter().filter(|r| r.applicable) {
            prop_assert!(r.integer_bound.unwrap() >= exact, "{} below {}", r.method, exact);
        }
        prop_assert!(summary.best >= exact && summary.best <= g.v() as u64);
    }

    #[test]
    fn deleting_a_vertex_loses_at_most_one(g in digraph(11, true), x in any::<prop::sample::Index>()) {
        let x = x.index(g.v());
        let full = max_transitive_brute(&g).unwrap().max_size;
        if g.v() > 1 {
            let less = max_transitive_brute(&g.delete_vertex(x).unwrap()).unwrap().max_size;
            prop_assert!(less <= full && less + 1 >= full);
        }
    }

    #[test]
    fn transitive_sets_are_order_free(g in digraph(8, false), mask in any::<u8>()) {
        let members: Vec<usize> = (0..g.v()).filter(|i| mask >> i & 1 == 1).collect();
        let set = BitSet::from_indices(g.v(), members.iter().copied());
        let orderable = permutations(&members).into_iter().any(|p| verify_transitive(&g, &p).unwrap());
        prop_assert_eq!(is_transitive_set(&g, &set), orderable);
    }

    #[test]
    fn bitset_matches_btreeset(universe in 1usize..200, a in prop::collection::vec(0usize..200, 0..40), b in prop::collection::vec(0usize..200, 0..40)) {
        let a: BTreeSet<usize> = a.into_iter().filter(|&x| x < universe).collect();
        let b: BTreeSet<usize> = b.into_iter().filter(|&x| x < universe).collect();
        let sa = BitSet::from_indices(universe, a.iter().copied());
        let sb = BitSet::from_indices(universe, b.iter().copied());
        prop_assert_eq!(sa.iter().collect::<Vec<_>>(), a.iter().copied().collect::<Vec<_>>());
        let inter: Vec<usize> = a.intersection(&b).copied().collect();
        prop_assert_eq!(sa.intersection(&sb).iter().collect::<Vec<_>>(), inter.clone());
        prop_assert_eq!(sa.intersection_count(&sb), inter.len());
        prop_assert_eq!(sa.intersects(&sb), !inter.is_empty());
    }

    #[test]
    fn text_and_json_round_trip(g in digraph(16, false)) {
        prop_assert_eq!(read_digraph(&write_digraph(&g)).unwrap(), g.clone());
        prop_assert_eq!(read_digraph(&write_json(&g)).unwrap(), g);
    }

    #[test]
    fn hoffman_general_is_the_positive_root(v in 2usize..500, alpha in 0.0f64..20.0, extra in 0.0f64..20.0) {
        let gamma = alpha + extra;
        let s = hoffman_general_value(alpha, gamma, v);
        let vf = v as f64;
        let q = vf * s * s - 3.0 * (alpha * alpha - gamma * gamma) * s - vf * (3.0 * gamma * gamma + 1.0);
        prop_assert!(s > 0.0);
        prop_assert!(q.abs() < 1e-8 * (1.0 + vf * s * s));
    }

    #[test]
    fn hoffman_regular_is_the_positive_root(v in 1usize..500, theta in 0.0f64..30.0) {
        let s = hoffman_regular_value(theta, v);
        let (vf, t) = (v as f64, theta * theta);
        let q = vf * s * s + 3.0 * t * s - vf * (3.0 * t + 1.0);
        prop_assert!(s > 0.0);
        prop_assert!(q.abs() < 1e-8 * (1.0 + vf * s * s));
    }

    #[test]
    fn random_circulants_are_regular_and_bounded(seed in any::<u64>(), half in 1usize..9) {
        let g = random_circulant(&mut rng(seed), 2 * half + 1);
        let exact = max_transitive_bb(&g, None).max_size as u64;
        let summary = best_bound(&g).unwrap();
        prop_assert!(summary.best >= exact);
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

#[test]
fn transitive_spectra_are_cotangents() {
    for s in 1..=12 {
        let spec = spectrum(&Digraph::transitive(s).unwrap()).unwrap();
        for (a, b) in spec.expanded().iter().zip(cotangent_spectrum(s)) {
            assert!((a - b).abs() < 1e-9, "s={s}: {a} vs {b}");
        }
        // the cotangent spectrum makes the interlacing bound exactly s
        assert_eq!(interlacing_bound(&spec).integer_bound, Some(s as u64));
    }
}

#[test]
fn generic_polynomial_matches_adjacency_polynomial() {
    for m in 1..=26u64 {
        let v = 4 * m - 1;
        for s in 2..v as usize {
            let input = BipInput::doubly_regular(m, s, vec![BigRational::zero(); s + 1]).unwrap();
            let generic = block_intersection_coeffs(&input);
            let adj = adjacency_poly(m, s as u64).coefficients();
            assert_eq!(generic, adj.to_vec(), "m={m}, s={s}");
        }
    }
}

/// Feasibility by brute evaluation of the adjacency polynomial at every
/// integer in a window around its vertex.
fn feasible_by_scan(m: u64, y: u64) -> bool {
    let p = adjacency_poly(m, y);
    let centre = (y as i64 - 1) / 2;
    (centre - 3..=centre + 3).all(|x| p.eval3(&BigInt::from(x)) >= BigInt::zero())
}

#[test]
fn feasibility_and_closed_forms_agree_with_oracles() {
    for m in 1..=200u64 {
        let bip = bip_bound(m);
        let th = thm54_bound(m);
        assert!(th.bound >= bip, "m={m}: closed form {} below {bip}", th.bound);
        let drt = drt_bound_exact(4 * m - 1).unwrap().integer_bound.unwrap();
        assert!(bip <= drt, "m={m}");
        for y in 2..=bip + 2 {
            assert_eq!(bip_feasible(m, y), feasible_by_scan(m, y), "m={m}, y={y}");
        }
    }
}
