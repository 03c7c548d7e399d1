//! Simple graphs, their independence complexes, vertex duplication, k-simplicial
//! sets, and k-shellability decisions for graphs.

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Instant;

use itertools::Itertools;

use crate::complex::{Complex, Face, Universe};
use crate::error::{Error, Result};
use crate::expansion::{expand_universe, ExpansionVector};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::shelling::{first_failure, search_unchecked, Outcome, SearchOptions, ShellingOrder};

/// A simple undirected graph over a labelled vertex universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Universe,
    adj: Vec<Face>,
}

impl Graph {
    /// Build from index pairs; loops and repeated edges are rejected.
    pub fn new(vertices: Universe, edges: &[(usize, usize)]) -> Result<Self> {
        let n = vertices.len();
        let mut adj = vec![Face::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u}, {v}) leaves the vertex set")));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex `{}`", vertices.label(u))));
            }
            if adj[u].contains(v) {
                return Err(Error::domain(format!(
                    "repeated edge {} {}",
                    vertices.label(u),
                    vertices.label(v)
                )));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { vertices, adj })
    }

    pub fn from_labels<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let universe = Universe::new(vertices.iter().map(|s| s.as_ref().to_string()))?;
        let idx = |s: &S| {
            universe
                .index_of(s.as_ref())
                .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_string()))
        };
        let pairs = edges
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(universe, &pairs)
    }

    pub fn vertices(&self) -> &Universe {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.num_vertices())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> Face {
        self.adj[v]
    }

    fn check_subset(&self, set: Face) -> Result<()> {
        if self.vertices.covers(set) {
            Ok(())
        } else {
            Err(Error::domain(format!("{set:?} is not a set of vertices of the graph")))
        }
    }

    /// `N(U) = ⋃ N(x)`; the closed variant adds `U` itself.
    pub fn neighborhood(&self, set: Face, closed: bool) -> Result<Face> {
        self.check_subset(set)?;
        Ok(open_nbhd(&self.adj, set, self.vertices.full_face()).union(if closed {
            set
        } else {
            Face::EMPTY
        }))
    }

    pub fn is_independent(&self, set: Face) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// The induced subgraph on `set`, vertices kept in order and re-indexed.
    pub fn induced_subgraph(&self, set: Face) -> Result<Graph> {
        self.check_subset(set)?;
        let (vertices, map) = self.vertices.without(self.vertices.full_face().difference(set));
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| set.contains(u) && set.contains(v))
            .map(|(u, v)| (map[u].unwrap(), map[v].unwrap()))
            .collect();
        Graph::new(vertices, &edges)
    }

    /// `G ∖ U`, the induced subgraph on the remaining vertices.
    pub fn remove(&self, set: Face) -> Result<Graph> {
        self.check_subset(set)?;
        self.induced_subgraph(self.vertices.full_face().difference(set))
    }
}

fn open_nbhd(adj: &[Face], set: Face, mask: Face) -> Face {
    set.iter().fold(Face::EMPTY, |acc, v| acc.union(adj[v])).intersection(mask)
}

/// Maximal independent sets of the subgraph induced on `mask`, by
/// Bron–Kerbosch with pivoting on the complement graph, sorted lexicographically.
fn maximal_independent_sets_in(adj: &[Face], mask: Face) -> Vec<Face> {
    fn expand(comp: &[Face], r: Face, p: Face, x: Face, out: &mut Vec<Face>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(comp[u]).len())
            .expect("p ∪ x is nonempty");
        let mut p = p;
        let mut x = x;
        for v in p.difference(comp[pivot]).iter() {
            expand(
                comp,
                r.union(Face::singleton(v)),
                p.intersection(comp[v]),
                x.intersection(comp[v]),
                out,
            );
            p.remove(v);
            x.insert(v);
        }
    }
    let comp: Vec<Face> = (0..adj.len())
        .map(|v| mask.difference(adj[v]).difference(Face::singleton(v)))
        .collect();
    let mut out = Vec::new();
    expand(&comp, Face::EMPTY, mask, Face::EMPTY, &mut out);
    out.sort_by(|a, b| a.cmp_lex(*b));
    out
}

pub fn maximal_independent_sets(g: &Graph) -> Vec<Face> {
    maximal_independent_sets_in(&g.adj, g.vertices.full_face())
}

/// `Δ_G`, with facets (maximal independent sets) in lexicographic order.
pub fn independence_complex(g: &Graph) -> Complex {
    Complex::from_faces(g.vertices.clone(), &maximal_independent_sets(g))
        .expect("independent sets lie in the vertex set")
}

/// `I(G) = (x_i x_j : x_i x_j ∈ E(G))`.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let gens = g
        .edges()
        .into_iter()
        .map(|(u, v)| Monomial::from_exponents([(u, 1), (v, 1)]))
        .collect();
    MonomialIdeal::new(g.vertices.clone(), gens).expect("edges use declared vertices")
}

/// Duplicate vertex `x_i` into `k_i` pairwise non-adjacent copies with the
/// same neighbours.
pub fn duplicate(g: &Graph, alpha: &ExpansionVector) -> Result<Graph> {
    let vertices = expand_universe(&g.vertices, alpha)?;
    let mut offsets = Vec::with_capacity(alpha.len());
    let mut acc = 0;
    for &k in alpha.entries() {
        offsets.push(acc);
        acc += k;
    }
    let k = alpha.entries();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        for r in 0..k[u] {
            for s in 0..k[v] {
                edges.push((offsets[u] + r, offsets[v] + s));
            }
        }
    }
    Graph::new(vertices, &edges)
}

/// Why a candidate set is not k-simplicial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicialRejection {
    NotIndependent,
    /// `G[N[S]]` is not complete multipartite.
    NotCompleteMultipartite,
    /// Some part of `G[N[S]]` does not have exactly `k` vertices.
    WrongPartSize { part: Face, size: usize },
    /// Two vertices of a part have different open neighbourhoods.
    NotTwins { part: Face },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicialCheck {
    /// Parts of `G[N[S]]`, the part equal to `S` first, the rest by least vertex.
    Accepted { parts: Vec<Face> },
    Rejected(SimplicialRejection),
}

impl SimplicialCheck {
    pub fn parts(&self) -> Option<&[Face]> {
        match self {
            SimplicialCheck::Accepted { parts } => Some(parts),
            SimplicialCheck::Rejected(_) => None,
        }
    }
}

fn simplicial_check(adj: &[Face], mask: Face, s: Face, k: usize) -> SimplicialCheck {
    use SimplicialRejection::*;
    if !s.iter().all(|v| adj[v].is_disjoint(s)) {
        return SimplicialCheck::Rejected(NotIndependent);
    }
    let closed = open_nbhd(adj, s, mask).union(s);
    // Non-adjacency classes inside N[S]; each vertex lies in its own class.
    let class = |v: usize| closed.difference(adj[v]);
    let mut parts: Vec<Face> = Vec::new();
    let mut seen = Face::EMPTY;
    for v in closed.iter() {
        if seen.contains(v) {
            continue;
        }
        let part = class(v);
        if part.iter().any(|u| class(u) != part) {
            return SimplicialCheck::Rejected(NotCompleteMultipartite);
        }
        seen = seen.union(part);
        parts.push(part);
    }
    for &part in &parts {
        let others = closed.difference(part);
        if part.iter().any(|v| !others.is_subset(adj[v])) {
            return SimplicialCheck::Rejected(NotCompleteMultipartite);
        }
    }
    if let Some(&part) = parts.iter().find(|p| p.len() != k) {
        return SimplicialCheck::Rejected(WrongPartSize {
            part,
            size: part.len(),
        });
    }
    for &part in &parts {
        let first = part.min_index().expect("parts are nonempty");
        let nbhd = adj[first].intersection(mask);
        if part.iter().any(|v| adj[v].intersection(mask) != nbhd) {
            return SimplicialCheck::Rejected(NotTwins { part });
        }
    }
    // A vertex of N[S] outside S is adjacent to some member of S, so the
    // non-adjacency class of an independent S is S itself.
    let home = parts
        .iter()
        .position(|p| *p == s)
        .expect("an independent S is one of the parts");
    let own = parts.remove(home);
    parts.sort_by(|a, b| a.cmp_lex(*b));
    parts.insert(0, own);
    SimplicialCheck::Accepted { parts }
}

/// Decide whether `s` is a k-simplicial set of `g`.
pub fn is_k_simplicial_set(g: &Graph, s: Face, k: usize) -> Result<SimplicialCheck> {
    if s.is_empty() {
        return Err(Error::domain("a k-simplicial set must be nonempty"));
    }
    g.check_subset(s)?;
    Ok(simplicial_check(&g.adj, g.vertices.full_face(), s, k))
}

fn simplicial_sets_in(adj: &[Face], mask: Face, k: usize) -> impl Iterator<Item = (Face, Vec<Face>)> + '_ {
    mask.iter()
        .combinations(k)
        .map(Face::from_indices)
        .filter(move |s| s.iter().all(|v| adj[v].is_disjoint(*s)))
        .filter_map(move |s| match simplicial_check(adj, mask, s, k) {
            SimplicialCheck::Accepted { parts } => Some((s, parts)),
            SimplicialCheck::Rejected(_) => None,
        })
}

/// Every k-simplicial set of `g` with its parts, in lexicographic order.
pub fn find_k_simplicial_sets(g: &Graph, k: usize) -> Vec<(Face, Vec<Face>)> {
    if k == 0 {
        return Vec::new();
    }
    simplicial_sets_in(&g.adj, g.vertices.full_face(), k).collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Search the facet orders of `Δ_G` directly.
    #[default]
    Direct,
    /// Split along a k-simplicial set and recurse on `G ∖ N[S_i]` and `G ∖ S_i`.
    Recursive,
}

/// Result of a graph decision; `order` indexes the facets of `complex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDecision {
    pub complex: Complex,
    pub outcome: Outcome,
}

impl GraphDecision {
    pub fn accepted(&self) -> bool {
        matches!(self.outcome, Outcome::Found(_))
    }
}

struct Timeout;

struct Recursion<'a> {
    adj: &'a [Face],
    k: usize,
    options: &'a SearchOptions,
    deadline: Option<Instant>,
    // Every subproblem is an induced subgraph of the input, keyed by its vertex set.
    memo: Mutex<HashMap<Face, Option<Vec<Face>>>>,
}

impl Recursion<'_> {
    fn direct(&self, mask: Face) -> std::result::Result<Option<Vec<Face>>, Timeout> {
        let facets = maximal_independent_sets_in(self.adj, mask);
        let timeout = match self.deadline {
            Some(d) => Some(d.checked_duration_since(Instant::now()).ok_or(Timeout)?),
            None => None,
        };
        let options = SearchOptions {
            timeout,
            ..self.options.clone()
        };
        match search_unchecked(&facets, self.k, &options).outcome {
            Outcome::Found(order) => Ok(Some(order.permutation.iter().map(|&i| facets[i]).collect())),
            Outcome::NotFound => Ok(None),
            Outcome::Undecided => Err(Timeout),
        }
    }

    fn solve(&self, mask: Face) -> std::result::Result<Option<Vec<Face>>, Timeout> {
        if let Some(hit) = self.memo.lock().unwrap().get(&mask) {
            return Ok(hit.clone());
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(Timeout);
        }
        let has_edges = mask.iter().any(|v| !self.adj[v].is_disjoint(mask));
        let result = if !has_edges {
            Some(vec![mask])
        } else {
            match simplicial_sets_in(self.adj, mask, self.k).next() {
                None => self.direct(mask)?,
                Some((s, parts)) if parts.len() == 1 => {
                    // S is a block of isolated twins: Δ_G is the join of Δ_{G∖S} with the simplex on S.
                    self.solve(mask.difference(s))?
                        .map(|order| order.into_iter().map(|f| f.union(s)).collect())
                }
                Some((_, parts)) => {
                    let mut witness = None;
                    let mut all = true;
                    for &part in &parts[1..] {
                        let closed = open_nbhd(self.adj, part, mask).union(part);
                        let link = self.solve(mask.difference(closed))?;
                        let del = self.solve(mask.difference(part))?;
                        match (link, del) {
                            (Some(link), Some(del)) => {
                                if witness.is_none() {
                                    let mut order = del;
                                    order.extend(link.into_iter().map(|h| h.union(part)));
                                    witness = Some(order);
                                }
                            }
                            _ => {
                                all = false;
                                break;
                            }
                        }
                    }
                    if all {
                        witness
                    } else {
                        None
                    }
                }
            }
        };
        self.memo.lock().unwrap().insert(mask, result.clone());
        Ok(result)
    }
}

/// Decide k-shellability of `Δ_G`.
///
/// Graphs whose independence complex has a single facet are accepted for
/// every `k`; otherwise the usual conditions apply without a range check on
/// `k`. Witnesses from the recursive strategy are re-verified.
pub fn decide_k_shellable_graph(
    g: &Graph,
    k: usize,
    strategy: Strategy,
    options: &SearchOptions,
) -> Result<GraphDecision> {
    if k == 0 {
        return Err(Error::domain("k must be positive"));
    }
    let complex = independence_complex(g);
    let outcome = match strategy {
        Strategy::Direct => search_unchecked(complex.facets(), k, options).outcome,
        Strategy::Recursive => {
            let rec = Recursion {
                adj: &g.adj,
                k,
                options,
                deadline: options.timeout.map(|t| Instant::now() + t),
                memo: Mutex::new(HashMap::new()),
            };
            match rec.solve(g.vertices.full_face()) {
                Err(Timeout) => Outcome::Undecided,
                Ok(None) => Outcome::NotFound,
                Ok(Some(ordered)) => Outcome::Found(order_from_facets(&complex, &ordered, k)?),
            }
        }
    };
    if let Outcome::Found(order) = &outcome {
        if let Some(f) = first_failure(&order.facets(&complex), k, options.rule) {
            return Err(Error::internal(format!(
                "graph witness fails at step {} (condition {})",
                f.j,
                f.condition.code()
            )));
        }
    }
    Ok(GraphDecision { complex, outcome })
}

fn order_from_facets(complex: &Complex, ordered: &[Face], k: usize) -> Result<ShellingOrder> {
    let perm = ordered
        .iter()
        .map(|f| {
            complex
                .facets()
                .iter()
                .position(|g| g == f)
                .ok_or_else(|| Error::internal(format!("assembled face {f:?} is not a facet")))
        })
        .collect::<Result<Vec<_>>>()?;
    if perm.len() != complex.num_facets() || perm.iter().unique().count() != perm.len() {
        return Err(Error::internal("assembled order does not list every facet once"));
    }
    Ok(ShellingOrder::new(perm, k))
}
