//! The four decomposition identities for D_t, both as verifiable
//! statements on arbitrary graphs and as a memoized recursive computation
//! strategy.
//!
//! Identity shapes (pivot u, and a second vertex where applicable):
//!   (i)   D_t(G) = D_t(G\u) + x D_t(G/u) + x^2 Σ_{v∈N(u)} D_t(G\N[{u,v}]) − (1+x) p_u(G)
//!   (ii)  nonadjacent u,v with N(v) ⊆ N(u): as (i) without the p_u term,
//!         sum over w ∈ N(u) ∩ N(v)
//!   (iii) N[v] ⊆ N[u]: as (ii) with the sum over w ∈ N(u)
//!   (iv)  edge {u,v} with N[u] = N[v]: D_t(G) = D_t(G\e) + x^2 D_t(G\N[u])

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle;
use crate::poly::Polynomial;

pub const DEFAULT_REDUCTION_CEILING: usize = 20;

/// Order at or below which the recursion falls back to enumeration.
const BASE_ORDER: usize = 4;

#[derive(Clone, Debug)]
pub enum TraceStep {
    /// Enumeration base case.
    OracleBase { order: usize, result: Polynomial },
    /// Isolated vertex present: D_t is the zero polynomial.
    IsolatedVertex { order: usize },
    RuleI {
        u: usize,
        deleted: Polynomial,
        contracted: Polynomial,
        neighbor_terms: Vec<(usize, Polynomial)>,
        avoidance: Polynomial,
        result: Polynomial,
    },
    RuleIi {
        u: usize,
        v: usize,
        deleted: Polynomial,
        contracted: Polynomial,
        neighbor_terms: Vec<(usize, Polynomial)>,
        result: Polynomial,
    },
    RuleIii {
        u: usize,
        v: usize,
        deleted: Polynomial,
        contracted: Polynomial,
        neighbor_terms: Vec<(usize, Polynomial)>,
        result: Polynomial,
    },
    RuleIv {
        u: usize,
        v: usize,
        edge_deleted: Polynomial,
        closed_deleted: Polynomial,
        result: Polynomial,
    },
}

/// Steps in evaluation (post-)order; the last step computes `result`.
#[derive(Clone, Debug, Default)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
    pub result: Polynomial,
}

fn rhs_without_correction(
    deleted: &Polynomial,
    contracted: &Polynomial,
    neighbor_terms: &[(usize, Polynomial)],
) -> Polynomial {
    let x = Polynomial::x();
    let x2 = Polynomial::monomial(2, 1);
    let sum = neighbor_terms
        .iter()
        .fold(Polynomial::zero(), |acc, (_, p)| acc.add(p));
    deleted.add(&x.mul(contracted)).add(&x2.mul(&sum))
}

fn rhs_rule_i(
    deleted: &Polynomial,
    contracted: &Polynomial,
    neighbor_terms: &[(usize, Polynomial)],
    avoidance: &Polynomial,
) -> Polynomial {
    let one_plus_x = Polynomial::from_i64(&[1, 1]);
    rhs_without_correction(deleted, contracted, neighbor_terms).sub(&one_plus_x.mul(avoidance))
}

fn rhs_rule_iv(edge_deleted: &Polynomial, closed_deleted: &Polynomial) -> Polynomial {
    edge_deleted.add(&Polynomial::monomial(2, 1).mul(closed_deleted))
}

impl ReductionTrace {
    /// Re-assembles every recorded step from its stored sub-results and
    /// checks the stored outcome, ending with the trace's final polynomial.
    pub fn replay_consistent(&self) -> bool {
        let mut last = None;
        for step in &self.steps {
            let (expected, got) = match step {
                TraceStep::OracleBase { result, .. } => (result.clone(), result.clone()),
                TraceStep::IsolatedVertex { .. } => (Polynomial::zero(), Polynomial::zero()),
                TraceStep::RuleI {
                    deleted,
                    contracted,
                    neighbor_terms,
                    avoidance,
                    result,
                    ..
                } => (
                    result.clone(),
                    rhs_rule_i(deleted, contracted, neighbor_terms, avoidance),
                ),
                TraceStep::RuleIi {
                    deleted,
                    contracted,
                    neighbor_terms,
                    result,
                    ..
                }
                | TraceStep::RuleIii {
                    deleted,
                    contracted,
                    neighbor_terms,
                    result,
                    ..
                } => (
                    result.clone(),
                    rhs_without_correction(deleted, contracted, neighbor_terms),
                ),
                TraceStep::RuleIv {
                    edge_deleted,
                    closed_deleted,
                    result,
                    ..
                } => (result.clone(), rhs_rule_iv(edge_deleted, closed_deleted)),
            };
            if expected != got {
                return false;
            }
            last = Some(expected);
        }
        last.as_ref() == Some(&self.result)
    }

    /// Human-readable step list for the CLI's --trace flag.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            match step {
                TraceStep::OracleBase { order, result } => {
                    let _ = writeln!(out, "enumerate order-{order} base case -> {}", result);
                }
                TraceStep::IsolatedVertex { order } => {
                    let _ = writeln!(out, "order-{order} graph has an isolated vertex -> 0");
                }
                TraceStep::RuleI { u, neighbor_terms, result, .. } => {
                    let _ = writeln!(
                        out,
                        "apply (i) at u={u} -> {} neighbor subproblems, result {}",
                        neighbor_terms.len(),
                        result
                    );
                }
                TraceStep::RuleIi { u, v, neighbor_terms, result, .. } => {
                    let _ = writeln!(
                        out,
                        "apply (ii) at u={u},v={v} -> {} common-neighbor subproblems, result {}",
                        neighbor_terms.len(),
                        result
                    );
                }
                TraceStep::RuleIii { u, v, neighbor_terms, result, .. } => {
                    let _ = writeln!(
                        out,
                        "apply (iii) at u={u},v={v} -> {} neighbor subproblems, result {}",
                        neighbor_terms.len(),
                        result
                    );
                }
                TraceStep::RuleIv { u, v, result, .. } => {
                    let _ = writeln!(out, "apply (iv) at edge ({u},{v}), result {}", result);
                }
            }
        }
        let _ = writeln!(out, "final: {}", self.result);
        out
    }
}

fn closed_pair_deleted(g: &Graph, u: usize, w: usize) -> Result<Graph> {
    let pair: VertexSet = [u, w].into_iter().collect();
    let closed = g.neighborhood(&pair, true)?;
    Ok(g.delete_vertices(&closed)?.0)
}

fn is_subset(a: &std::collections::BTreeSet<usize>, b: &std::collections::BTreeSet<usize>) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn closed_nbhd(g: &Graph, v: usize) -> std::collections::BTreeSet<usize> {
    let mut s = g.neighbors(v).clone();
    s.insert(v);
    s
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            index: v,
            order: g.order(),
        });
    }
    Ok(())
}

/// Verifies identity (i) at `u` with every sub-polynomial enumerated.
pub fn check_identity_i(g: &Graph, u: usize) -> Result<bool> {
    check_vertex(g, u)?;
    let lhs = oracle::dt_polynomial(g)?;
    let deleted = oracle::dt_polynomial(&g.delete_vertex(u)?.0)?;
    let contracted = oracle::dt_polynomial(&g.contract_vertex(u)?.0)?;
    let mut terms = Vec::new();
    for &v in g.neighbors(u) {
        terms.push((v, oracle::dt_polynomial(&closed_pair_deleted(g, u, v)?)?));
    }
    let avoidance = oracle::p_u_polynomial(g, u)?;
    Ok(lhs == rhs_rule_i(&deleted, &contracted, &terms, &avoidance))
}

/// Verifies identity (ii): u, v nonadjacent with N(v) ⊆ N(u).
pub fn check_identity_ii(g: &Graph, u: usize, v: usize) -> Result<bool> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v || g.has_edge(u, v) || !is_subset(g.neighbors(v), g.neighbors(u)) {
        return Err(Error::PreconditionViolated(format!(
            "(ii) needs nonadjacent u={u}, v={v} with N(v) ⊆ N(u)"
        )));
    }
    let lhs = oracle::dt_polynomial(g)?;
    let deleted = oracle::dt_polynomial(&g.delete_vertex(u)?.0)?;
    let contracted = oracle::dt_polynomial(&g.contract_vertex(u)?.0)?;
    let mut terms = Vec::new();
    for &w in g.neighbors(u) {
        if g.neighbors(v).contains(&w) {
            terms.push((w, oracle::dt_polynomial(&closed_pair_deleted(g, u, w)?)?));
        }
    }
    Ok(lhs == rhs_without_correction(&deleted, &contracted, &terms))
}

/// Verifies identity (iii): N[v] ⊆ N[u].
pub fn check_identity_iii(g: &Graph, u: usize, v: usize) -> Result<bool> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v || !is_subset(&closed_nbhd(g, v), &closed_nbhd(g, u)) {
        return Err(Error::PreconditionViolated(format!(
            "(iii) needs distinct u={u}, v={v} with N[v] ⊆ N[u]"
        )));
    }
    let lhs = oracle::dt_polynomial(g)?;
    let deleted = oracle::dt_polynomial(&g.delete_vertex(u)?.0)?;
    let contracted = oracle::dt_polynomial(&g.contract_vertex(u)?.0)?;
    let mut terms = Vec::new();
    for &w in g.neighbors(u) {
        terms.push((w, oracle::dt_polynomial(&closed_pair_deleted(g, u, w)?)?));
    }
    Ok(lhs == rhs_without_correction(&deleted, &contracted, &terms))
}

/// Verifies identity (iv): edge {u,v} with N[u] = N[v].
pub fn check_identity_iv(g: &Graph, u: usize, v: usize) -> Result<bool> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if !g.has_edge(u, v) || closed_nbhd(g, u) != closed_nbhd(g, v) {
        return Err(Error::PreconditionViolated(format!(
            "(iv) needs an edge ({u},{v}) with N[u] = N[v]"
        )));
    }
    let lhs = oracle::dt_polynomial(g)?;
    let edge_deleted = oracle::dt_polynomial(&g.delete_edge(u, v)?)?;
    let closed: VertexSet = closed_nbhd(g, u).into_iter().collect();
    let closed_deleted = oracle::dt_polynomial(&g.delete_vertices(&closed)?.0)?;
    Ok(lhs == rhs_rule_iv(&edge_deleted, &closed_deleted))
}

struct Engine {
    memo: HashMap<Graph, Polynomial>,
    steps: Vec<TraceStep>,
}

impl Engine {
    fn compute(&mut self, g: &Graph) -> Result<Polynomial> {
        if let Some(hit) = self.memo.get(g) {
            return Ok(hit.clone());
        }
        let result = self.compute_uncached(g)?;
        self.memo.insert(g.clone(), result.clone());
        Ok(result)
    }

    fn compute_uncached(&mut self, g: &Graph) -> Result<Polynomial> {
        if g.order() > 0 && g.has_isolated_vertex() {
            self.steps.push(TraceStep::IsolatedVertex { order: g.order() });
            return Ok(Polynomial::zero());
        }
        if g.order() <= BASE_ORDER {
            let result = oracle::dt_polynomial(g)?;
            self.steps.push(TraceStep::OracleBase {
                order: g.order(),
                result: result.clone(),
            });
            return Ok(result);
        }

        // pivot preference (iv) > (iii) > (ii) > (i), first pair in index order
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                if g.has_edge(u, v) && closed_nbhd(g, u) == closed_nbhd(g, v) {
                    return self.apply_iv(g, u, v);
                }
            }
        }
        for u in 0..g.order() {
            for v in 0..g.order() {
                if u != v && is_subset(&closed_nbhd(g, v), &closed_nbhd(g, u)) {
                    return self.apply_iii(g, u, v);
                }
            }
        }
        for u in 0..g.order() {
            for v in 0..g.order() {
                if u != v && !g.has_edge(u, v) && is_subset(g.neighbors(v), g.neighbors(u)) {
                    return self.apply_ii(g, u, v);
                }
            }
        }
        let u = (0..g.order())
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .expect("nonempty graph");
        self.apply_i(g, u)
    }

    fn apply_iv(&mut self, g: &Graph, u: usize, v: usize) -> Result<Polynomial> {
        let edge_deleted = self.compute(&g.delete_edge(u, v)?)?;
        let closed: VertexSet = closed_nbhd(g, u).into_iter().collect();
        let closed_deleted = self.compute(&g.delete_vertices(&closed)?.0)?;
        let result = rhs_rule_iv(&edge_deleted, &closed_deleted);
        self.steps.push(TraceStep::RuleIv {
            u,
            v,
            edge_deleted,
            closed_deleted,
            result: result.clone(),
        });
        Ok(result)
    }

    fn apply_iii(&mut self, g: &Graph, u: usize, v: usize) -> Result<Polynomial> {
        let deleted = self.compute(&g.delete_vertex(u)?.0)?;
        let contracted = self.compute(&g.contract_vertex(u)?.0)?;
        let mut terms = Vec::new();
        for &w in g.neighbors(u) {
            terms.push((w, self.compute(&closed_pair_deleted(g, u, w)?)?));
        }
        let result = rhs_without_correction(&deleted, &contracted, &terms);
        self.steps.push(TraceStep::RuleIii {
            u,
            v,
            deleted,
            contracted,
            neighbor_terms: terms,
            result: result.clone(),
        });
        Ok(result)
    }

    fn apply_ii(&mut self, g: &Graph, u: usize, v: usize) -> Result<Polynomial> {
        let deleted = self.compute(&g.delete_vertex(u)?.0)?;
        let contracted = self.compute(&g.contract_vertex(u)?.0)?;
        let mut terms = Vec::new();
        for &w in g.neighbors(u) {
            if g.neighbors(v).contains(&w) {
                terms.push((w, self.compute(&closed_pair_deleted(g, u, w)?)?));
            }
        }
        let result = rhs_without_correction(&deleted, &contracted, &terms);
        self.steps.push(TraceStep::RuleIi {
            u,
            v,
            deleted,
            contracted,
            neighbor_terms: terms,
            result: result.clone(),
        });
        Ok(result)
    }

    fn apply_i(&mut self, g: &Graph, u: usize) -> Result<Polynomial> {
        let deleted = self.compute(&g.delete_vertex(u)?.0)?;
        let contracted = self.compute(&g.contract_vertex(u)?.0)?;
        let mut terms = Vec::new();
        for &v in g.neighbors(u) {
            terms.push((v, self.compute(&closed_pair_deleted(g, u, v)?)?));
        }
        // no recurrence is known for p_u; restricted enumeration is
        // cheap at desk scale
        let avoidance = oracle::p_u_polynomial(g, u)?;
        let result = rhs_rule_i(&deleted, &contracted, &terms, &avoidance);
        self.steps.push(TraceStep::RuleI {
            u,
            deleted,
            contracted,
            neighbor_terms: terms,
            avoidance,
            result: result.clone(),
        });
        Ok(result)
    }
}

pub fn dt_via_reduction_with_ceiling(
    g: &Graph,
    ceiling: usize,
) -> Result<(Polynomial, ReductionTrace)> {
    if g.order() > ceiling {
        return Err(Error::ReductionCeilingExceeded {
            order: g.order(),
            ceiling,
        });
    }
    let mut engine = Engine {
        memo: HashMap::new(),
        steps: Vec::new(),
    };
    let result = engine.compute(g)?;
    Ok((
        result.clone(),
        ReductionTrace {
            steps: engine.steps,
            result,
        },
    ))
}

/// D_t by recursive application of the identities, memoized on the exact
/// labeled edge set of each sub-graph.
pub fn dt_via_reduction(g: &Graph) -> Result<(Polynomial, ReductionTrace)> {
    dt_via_reduction_with_ceiling(g, DEFAULT_REDUCTION_CEILING)
}
