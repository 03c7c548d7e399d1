//! Generators and brute-force oracles shared by the integration tests.
//!
//! The oracles work from definitions by enumerating faces, orders or
//! monomials, and deliberately avoid the library's own algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use kshell::complex::{Complex, Face, Universe};
use kshell::expansion::ExpansionVector;
use kshell::graph::Graph;
use kshell::ideal::{Monomial, MonomialIdeal};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn universe(n: usize) -> Universe {
    Universe::new((0..n).map(|i| format!("v{i}"))).unwrap()
}

pub fn complex_on(n: usize, facets: &[Face]) -> Complex {
    Complex::from_faces(universe(n), facets).unwrap()
}

/// A random complex with `1..=max_facets` nonempty facets on `1..=max_vertices` vertices.
pub fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize, max_facets: usize) -> Complex {
    let n = rng.gen_range(1..=max_vertices);
    let r = rng.gen_range(1..=max_facets);
    let faces: Vec<Face> = (0..r)
        .map(|_| Face::from_bits(rng.gen_range(1u128..(1u128 << n))))
        .collect();
    complex_on(n, &faces)
}

fn is_antichain(faces: &[Face]) -> bool {
    faces
        .iter()
        .enumerate()
        .all(|(i, a)| faces.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(*b)))
}

fn relabel(face: Face, perm: &[usize]) -> Face {
    face.iter().map(|v| perm[v]).collect()
}

/// Smallest sorted relabelled facet list over all vertex permutations.
pub fn canonical_form(n: usize, facets: &[Face]) -> Vec<u128> {
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut bits: Vec<u128> = facets.iter().map(|f| relabel(*f, &perm).bits()).collect();
            bits.sort_unstable();
            bits
        })
        .min()
        .unwrap_or_default()
}

/// One representative per isomorphism class of antichains of `1..=max_facets`
/// nonempty subsets of an `n`-set, as complexes on `n` vertices.
pub fn complex_classes(n: usize, max_facets: usize) -> Vec<Complex> {
    let subsets: Vec<Face> = (1u128..(1u128 << n)).map(Face::from_bits).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in 1..=max_facets {
        for combo in subsets.iter().copied().combinations(r) {
            if !is_antichain(&combo) {
                continue;
            }
            if seen.insert(canonical_form(n, &combo)) {
                out.push(complex_on(n, &combo));
            }
        }
    }
    out
}

/// All faces of a complex, by enumerating subsets of every facet.
pub fn face_set(c: &Complex) -> BTreeSet<u128> {
    c.facets()
        .iter()
        .flat_map(|f| {
            let members = f.indices();
            (0..=members.len()).flat_map(move |s| {
                members
                    .clone()
                    .into_iter()
                    .combinations(s)
                    .map(|sub| Face::from_indices(sub).bits())
            })
        })
        .collect()
}

fn maximal(faces: &BTreeSet<u128>) -> Vec<Face> {
    let all: Vec<Face> = faces.iter().map(|&b| Face::from_bits(b)).collect();
    all.iter()
        .copied()
        .filter(|f| !all.iter().any(|g| g != f && f.is_subset(*g)))
        .collect()
}

/// Direct check of one ordered facet list: every maximal face of
/// `⟨F_j⟩ ∩ ⟨F_1..F_{j-1}⟩` has `|F_j| - k` vertices and the complements
/// `F_j ∖ G` of those maximal faces are pairwise disjoint.
pub fn brute_is_k_shelling(ordered: &[Face], k: usize) -> bool {
    (1..ordered.len()).all(|j| {
        let fj = ordered[j];
        let members = fj.indices();
        let common: BTreeSet<u128> = (0..=members.len())
            .flat_map(|s| members.clone().into_iter().combinations(s))
            .map(Face::from_indices)
            .filter(|g| ordered[..j].iter().any(|p| g.is_subset(*p)))
            .map(|g| g.bits())
            .collect();
        let tops = maximal(&common);
        let sizes_ok = tops.iter().all(|g| g.len() + k == fj.len());
        let sigmas: Vec<Face> = tops.iter().map(|g| fj.difference(*g)).collect();
        let disjoint = sigmas
            .iter()
            .enumerate()
            .all(|(a, s)| sigmas[a + 1..].iter().all(|t| s.is_disjoint(*t)));
        sizes_ok && disjoint
    })
}

/// Classical shelling test: each `⟨F_j⟩ ∩ ⟨F_1..F_{j-1}⟩` is pure of
/// dimension `dim F_j - 1`.
pub fn textbook_is_shelling(ordered: &[Face]) -> bool {
    (1..ordered.len()).all(|j| {
        let fj = ordered[j];
        // Faces of F_j in the prefix; purity of codimension one means each
        // such face lies in some F_j ∖ {v} that is itself in the prefix.
        let in_prefix = |g: Face| ordered[..j].iter().any(|p| g.is_subset(*p));
        let members = fj.indices();
        (0..=members.len())
            .flat_map(|s| members.clone().into_iter().combinations(s))
            .map(Face::from_indices)
            .filter(|g| in_prefix(*g))
            .all(|g| {
                members
                    .iter()
                    .any(|&v| g.is_subset(fj.difference(Face::singleton(v))) && in_prefix(fj.difference(Face::singleton(v))))
            })
    })
}

/// Whether some permutation of the facets passes [`brute_is_k_shelling`].
pub fn brute_k_shellable(facets: &[Face], k: usize) -> bool {
    facets
        .iter()
        .copied()
        .permutations(facets.len())
        .any(|p| brute_is_k_shelling(&p, k))
}

/// Minimal non-faces by scanning every vertex subset.
pub fn brute_minimal_nonfaces(c: &Complex) -> BTreeSet<u128> {
    let faces = face_set(c);
    let n = c.universe().len();
    (0u128..(1u128 << n))
        .filter(|b| !faces.contains(b))
        .filter(|&b| {
            let f = Face::from_bits(b);
            f.iter().all(|v| faces.contains(&f.difference(Face::singleton(v)).bits()))
        })
        .collect()
}

/// Every monomial in `n` variables of total degree `d`.
pub fn all_monomials(n: usize, d: u32) -> Vec<Monomial> {
    (0..n)
        .combinations_with_replacement(d as usize)
        .map(|vars| Monomial::from_exponents(vars.into_iter().map(|v| (v, 1))))
        .collect()
}

/// Degree-`d` monomials whose support is a face, counted one by one.
pub fn brute_hilbert(c: &Complex, d: u32) -> u128 {
    let faces = face_set(c);
    all_monomials(c.universe().len(), d)
        .iter()
        .filter(|m| faces.contains(&m.support().bits()))
        .count() as u128
}

/// Membership in `I^α` straight from the definition: `m` is in the expansion
/// of `(u)` iff for every `i` the degree of `m` in the copies of `x_i` is at
/// least the exponent of `x_i` in `u`.
pub fn brute_in_expansion(ideal: &MonomialIdeal, alpha: &ExpansionVector, m: &Monomial) -> bool {
    let mut block = Vec::new();
    for (i, &k) in alpha.entries().iter().enumerate() {
        block.extend(std::iter::repeat_n(i, k));
    }
    let mut degree = vec![0u32; alpha.len()];
    for (v, e) in m.exponents() {
        degree[block[v]] += e;
    }
    ideal
        .generators()
        .iter()
        .any(|u| u.exponents().all(|(i, e)| degree[i] >= e))
}

/// Variables `x_v` with `x_v · f_j ∈ (f_1, .., f_{j-1})`.
pub fn brute_colon_variables(gens: &[Monomial], j: usize, n: usize) -> Face {
    (0..n)
        .filter(|&v| {
            let m = gens[j].mul(&Monomial::var(v));
            gens[..j].iter().any(|t| t.divides(&m))
        })
        .collect()
}

/// Maximal independent sets by scanning every vertex subset.
pub fn brute_maximal_independent(g: &Graph) -> BTreeSet<u128> {
    let n = g.num_vertices();
    let independent: Vec<Face> = (0u128..(1u128 << n))
        .map(Face::from_bits)
        .filter(|f| g.is_independent(*f))
        .collect();
    independent
        .iter()
        .filter(|f| (0..n).all(|v| f.contains(v) || !g.is_independent(f.union(Face::singleton(v)))))
        .map(|f| f.bits())
        .collect()
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).tuple_combinations().collect()
}

/// The labelled graph on `n` vertices whose edge set is picked by `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = all_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(universe(n), &edges).unwrap()
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    let pairs = all_pairs(n);
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let index_of = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let canon = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u64, |acc, (_, &(a, b))| acc | 1 << index_of(p[a], p[b]))
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(graph_from_mask(n, mask));
        }
    }
    out
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = all_pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(universe(n), &edges).unwrap()
}

/// Facet sets compared by labels, ignoring facet order.
pub fn same_facet_labels(a: &Complex, b: &Complex) -> bool {
    a.facet_label_sets() == b.facet_label_sets()
}
