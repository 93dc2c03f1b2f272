//! Ground truth by exhaustive subset enumeration.
//!
//! Every subset of vertices is visited through a split-mask table: the low
//! bits index a precomputed table of neighborhood unions, the high bits a
//! second table, so one OR and one compare decide each subset. With the
//! `parallel` feature the low range is partitioned across rayon workers and
//! the per-worker count vectors are merged by elementwise addition, which
//! makes the parallel result bit-identical to the sequential one.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::Polynomial;

/// Default ceiling on enumerated orders; 2^30 subset checks is the
/// practical desk-scale limit.
pub const DEFAULT_ORDER_GUARD: usize = 30;

/// Hard cap from the u64 mask representation.
const MASK_CAP: usize = 62;

/// `d_t(G, i)` for `i = 0..=order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdsCountVector {
    pub counts: Vec<u64>,
}

impl TdsCountVector {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// True iff `N(D) = V`.
pub fn is_total_dominating(g: &Graph, d: &VertexSet) -> Result<bool> {
    let open = g.neighborhood(d, false)?;
    Ok(open.len() == g.order())
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect()
}

/// Table of neighborhood unions for every subset of `bits` consecutive
/// vertices starting at `base`, built incrementally from smaller subsets.
fn union_table(adj: &[u64], base: usize, bits: usize) -> Vec<u64> {
    let mut table = vec![0u64; 1 << bits];
    for m in 1..table.len() {
        let low = m.trailing_zeros() as usize;
        table[m] = table[m & (m - 1)] | adj[base + low];
    }
    table
}

fn guard_check(g: &Graph, guard: usize) -> Result<()> {
    let guard = guard.min(MASK_CAP);
    if g.order() > guard {
        return Err(Error::OrderGuardExceeded {
            order: g.order(),
            guard,
        });
    }
    Ok(())
}

fn counts_for_range(
    low_table: &[u64],
    high_table: &[u64],
    full: u64,
    low_range: std::ops::Range<usize>,
    n: usize,
) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    for (h, &hu) in high_table.iter().enumerate() {
        let hp = h.count_ones() as usize;
        for l in low_range.clone() {
            if hu | low_table[l] == full {
                counts[hp + l.count_ones() as usize] += 1;
            }
        }
    }
    counts
}

fn split_point(n: usize) -> usize {
    n.min(16)
}

/// Sequential enumeration of all `2^order` subsets.
pub fn dt_counts_sequential(g: &Graph, guard: usize) -> Result<TdsCountVector> {
    guard_check(g, guard)?;
    let n = g.order();
    if n == 0 {
        // the empty set totally dominates the empty graph vacuously
        return Ok(TdsCountVector { counts: vec![1] });
    }
    let adj = adjacency_masks(g);
    let full = (1u64 << n) - 1;
    let k = split_point(n);
    let low_table = union_table(&adj, 0, k);
    let high_table = union_table(&adj, k, n - k);
    let counts = counts_for_range(&low_table, &high_table, full, 0..1 << k, n);
    Ok(TdsCountVector { counts })
}

/// Parallel enumeration; identical counts to the sequential path.
#[cfg(feature = "parallel")]
pub fn dt_counts_parallel(g: &Graph, guard: usize) -> Result<TdsCountVector> {
    use rayon::prelude::*;

    guard_check(g, guard)?;
    let n = g.order();
    if n == 0 {
        return Ok(TdsCountVector { counts: vec![1] });
    }
    let adj = adjacency_masks(g);
    let full = (1u64 << n) - 1;
    let k = split_point(n);
    let low_table = union_table(&adj, 0, k);
    let high_table = union_table(&adj, k, n - k);

    let low_len = 1usize << k;
    let chunks = (rayon::current_num_threads() * 8).min(low_len).max(1);
    let chunk_size = low_len.div_ceil(chunks);
    let counts = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * chunk_size;
            let end = (start + chunk_size).min(low_len);
            counts_for_range(&low_table, &high_table, full, start..end, n)
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(TdsCountVector { counts })
}

pub fn dt_counts_with_guard(g: &Graph, guard: usize) -> Result<TdsCountVector> {
    #[cfg(feature = "parallel")]
    {
        dt_counts_parallel(g, guard)
    }
    #[cfg(not(feature = "parallel"))]
    {
        dt_counts_sequential(g, guard)
    }
}

pub fn dt_counts(g: &Graph) -> Result<TdsCountVector> {
    dt_counts_with_guard(g, DEFAULT_ORDER_GUARD)
}

pub fn dt_polynomial_with_guard(g: &Graph, guard: usize) -> Result<Polynomial> {
    Ok(Polynomial::from_counts(&dt_counts_with_guard(g, guard)?.counts))
}

/// `D_t(G, x)` by enumeration; zero polynomial iff `G` has an isolated
/// vertex (and the constant 1 for the empty graph).
pub fn dt_polynomial(g: &Graph) -> Result<Polynomial> {
    dt_polynomial_with_guard(g, DEFAULT_ORDER_GUARD)
}

pub fn gamma_t_with_guard(g: &Graph, guard: usize) -> Result<usize> {
    let counts = dt_counts_with_guard(g, guard)?.counts;
    counts
        .iter()
        .skip(1)
        .position(|&c| c > 0)
        .map(|i| i + 1)
        .ok_or(Error::NoTotalDominatingSet)
}

/// Total domination number; errors when no total dominating set exists.
pub fn gamma_t(g: &Graph) -> Result<usize> {
    gamma_t_with_guard(g, DEFAULT_ORDER_GUARD)
}

/// `p_u(G, x)`: generating polynomial of the total dominating sets of
/// `G \ u` that avoid every vertex of `N_G(u)`. Enumeration is restricted
/// to the allowed vertices.
pub fn p_u_polynomial_with_guard(g: &Graph, u: usize, guard: usize) -> Result<Polynomial> {
    guard_check(g, guard)?;
    if u >= g.order() {
        return Err(Error::VertexOutOfRange {
            index: u,
            order: g.order(),
        });
    }
    let (h, map) = g.delete_vertex(u)?;
    let allowed: Vec<usize> = (0..g.order())
        .filter(|&v| v != u && !g.has_edge(u, v))
        .map(|v| map[v].expect("survivor"))
        .collect();
    let adj = adjacency_masks(&h);
    let full = if h.order() == 0 { 0 } else { (1u64 << h.order()) - 1 };
    let mut counts = vec![0u64; h.order() + 1];
    for pick in 0..(1u64 << allowed.len()) {
        let mut nd = 0u64;
        let mut rest = pick;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            nd |= adj[allowed[i]];
            rest &= rest - 1;
        }
        if nd == full {
            counts[pick.count_ones() as usize] += 1;
        }
    }
    Ok(Polynomial::from_counts(&counts))
}

pub fn p_u_polynomial(g: &Graph, u: usize) -> Result<Polynomial> {
    p_u_polynomial_with_guard(g, u, DEFAULT_ORDER_GUARD)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_i64(coeffs)
    }

    #[test]
    fn is_total_dominating_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_total_dominating(&c4, &[0, 1].into_iter().collect()).unwrap());
        // opposite pair: N({0,2}) = {1,3} != V
        assert!(!is_total_dominating(&c4, &[0, 2].into_iter().collect()).unwrap());
        let p4 = Graph::path(4);
        assert!(is_total_dominating(&p4, &[1, 2].into_iter().collect()).unwrap());
    }

    #[test]
    fn dt_counts_examples() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(dt_counts(&c3).unwrap().counts, vec![0, 0, 3, 1]);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(dt_counts(&c6).unwrap().counts, vec![0, 0, 0, 0, 9, 6, 1]);
        assert_eq!(dt_counts(&Graph::path(3)).unwrap().counts, vec![0, 0, 2, 1]);
        assert_eq!(dt_counts(&Graph::empty(1)).unwrap().counts, vec![0, 0]);
    }

    #[test]
    fn dt_polynomial_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(dt_polynomial(&c4).unwrap(), p(&[0, 0, 4, 4, 1]));
        assert_eq!(dt_polynomial(&Graph::path(4)).unwrap(), p(&[0, 0, 1, 2, 1]));
        // triangle plus pendant
        let g1 = Graph::build(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(dt_polynomial(&g1).unwrap(), p(&[0, 0, 3, 3, 1]));
        assert_eq!(dt_polynomial(&Graph::empty(0)).unwrap(), Polynomial::one());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_t(&Graph::cycle(6).unwrap()).unwrap(), 4);
        assert!(matches!(
            gamma_t(&Graph::empty(1)),
            Err(Error::NoTotalDominatingSet)
        ));
    }

    #[test]
    fn guard_is_enforced() {
        let g = Graph::path(31);
        let err = dt_counts(&g);
        assert!(matches!(
            err,
            Err(Error::OrderGuardExceeded { order: 31, guard: 30 })
        ));
        assert!(dt_counts_with_guard(&Graph::path(8), 8).is_ok());
        assert!(dt_counts_with_guard(&Graph::path(9), 8).is_err());
    }

    #[test]
    fn p_u_examples() {
        // leaf of P_3: no subset of the far leaf totally dominates P_2
        let p3 = Graph::path(3);
        assert!(p_u_polynomial(&p3, 0).unwrap().is_zero());
        // C_4 at any vertex: only the opposite vertex is allowed
        let c4 = Graph::cycle(4).unwrap();
        assert!(p_u_polynomial(&c4, 0).unwrap().is_zero());
    }

    #[test]
    fn p_u_counts_avoiding_sets() {
        // star K_{1,3}, u = a leaf: allowed = other two leaves, which can
        // never dominate the center's removal result
        let star = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(p_u_polynomial(&star, 1).unwrap().is_zero());
        // P_4, u = leaf 0: allowed = {2,3} in G\u = P_3 on 1-2-3; {2,3}? 2
        // dominates 1 and 3, 3 dominates 2: D={2,3} works, {2} leaves 2
        // undominated, {3} leaves 3,1 undominated.
        let p4 = Graph::path(4);
        assert_eq!(p_u_polynomial(&p4, 0).unwrap(), p(&[0, 0, 1]));
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        for g in [
            Graph::cycle(9).unwrap(),
            Graph::path(13),
            Graph::complete(6),
            Graph::empty(4),
        ] {
            assert_eq!(
                dt_counts_sequential(&g, 30).unwrap(),
                dt_counts_parallel(&g, 30).unwrap()
            );
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            prop::collection::vec(prop::bool::ANY, pairs.len()).prop_map(move |mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, keep)| **keep)
                    .map(|(e, _)| *e)
                    .collect();
                Graph::build(n, &edges).unwrap()
            })
        })
    }

    fn binom(n: usize, k: usize) -> u64 {
        num_integer::binomial(n as u64, k as u64)
    }

    proptest! {
        #[test]
        fn count_vector_invariants(g in arb_graph(8)) {
            let counts = dt_counts(&g).unwrap().counts;
            let n = g.order();
            prop_assert_eq!(counts.len(), n + 1);
            prop_assert_eq!(counts[0], 0);
            prop_assert_eq!(counts[n], u64::from(!g.has_isolated_vertex()));
            for i in 0..n {
                if counts[i] > 0 {
                    prop_assert!(counts[i + 1] > 0, "superset closure fails at {}", i);
                }
                prop_assert!(counts[i] <= binom(n, i));
            }
            // eval at 1 counts all total dominating sets
            let total: u64 = counts.iter().sum();
            let poly = Polynomial::from_counts(&counts);
            prop_assert_eq!(poly.eval(&1.into()), total.into());
        }

        #[test]
        fn disjoint_union_multiplies(a in arb_graph(5), b in arb_graph(5)) {
            let mut edges = a.edges();
            edges.extend(b.edges().into_iter().map(|(u, v)| (u + a.order(), v + a.order())));
            let union = Graph::build(a.order() + b.order(), &edges).unwrap();
            let lhs = dt_polynomial(&union).unwrap();
            let rhs = dt_polynomial(&a).unwrap().mul(&dt_polynomial(&b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn union_with_isolated_vertex_is_zero(a in arb_graph(5)) {
            let union = Graph::build(a.order() + 1, &a.edges()).unwrap();
            prop_assert!(dt_polynomial(&union).unwrap().is_zero());
        }
    }
}
