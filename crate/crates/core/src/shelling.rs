//! Verification and search of k-shelling orders.
//!
//! For an order `F_1, .., F_r` and each step `j ≥ 2`, the intersection
//! subcomplex `Δ_j = ⟨F_j⟩ ∩ ⟨F_1, .., F_{j-1}⟩` must be generated by faces
//! `F_j ∖ σ` with `|σ| = k` (condition (i)), and distinct generators must
//! together cover `F_j`, i.e. the `σ`s are pairwise disjoint (condition (ii)).
//! [`PairRule::DisjointOnly`] restricts (ii) to facet pairs that are
//! themselves disjoint.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::complex::{maximal_faces, minimal_transversals, Complex, Face};
use crate::error::{Error, Result};

/// A facet order (indices into the complex's facet list) together with `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShellingOrder {
    pub permutation: Vec<usize>,
    pub k: usize,
}

impl ShellingOrder {
    pub fn new(permutation: Vec<usize>, k: usize) -> Self {
        ShellingOrder { permutation, k }
    }

    /// The input order `0, 1, .., r-1`.
    pub fn identity(r: usize, k: usize) -> Self {
        ShellingOrder::new((0..r).collect(), k)
    }

    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }

    /// The ordered facets of `complex`.
    pub fn facets(&self, complex: &Complex) -> Vec<Face> {
        self.permutation.iter().map(|&i| complex.facet(i)).collect()
    }
}

/// How condition (ii) treats pairs of intersection facets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairRule {
    /// Every two distinct facets of `Δ_j` must cover `F_j`.
    #[default]
    AllPairs,
    /// Only facet pairs that are disjoint from each other are checked.
    DisjointOnly,
}

/// The condition that rejected a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Facets of `Δ_j` must have cardinality `|F_j| - k`.
    Cardinality,
    /// Facets of `Δ_j` must pairwise cover `F_j`.
    Covering,
}

impl Condition {
    pub fn code(self) -> &'static str {
        match self {
            Condition::Cardinality => "i",
            Condition::Covering => "ii",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepCertificate {
    /// 1-based position in the order (always ≥ 2).
    pub j: usize,
    pub facet: Face,
    pub intersection_facets: Vec<Face>,
    pub sigmas: Vec<Face>,
    /// Disjoint `k`-sets whose box product is the set of minimal new faces.
    pub restriction_sets: Option<Vec<Face>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub j: usize,
    pub condition: Condition,
    pub detail: String,
}

/// Per-step witness data for an order; `failure` is set on rejection and
/// `steps` then stops at the step before it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingCertificate {
    pub k: usize,
    pub order: Vec<usize>,
    pub steps: Vec<StepCertificate>,
    pub failure: Option<Failure>,
}

impl ShellingCertificate {
    pub fn accepted(&self) -> bool {
        self.failure.is_none()
    }
}

/// Facets of `⟨facet⟩ ∩ ⟨prefix⟩`, in order of first appearance.
pub fn intersection_facets(prefix: &[Face], facet: Face) -> Vec<Face> {
    let meets: Vec<Face> = prefix.iter().map(|p| p.intersection(facet)).collect();
    maximal_faces(&meets)
}

type StepData = (Vec<Face>, Vec<Face>);

/// Check conditions (i) and (ii) for appending `facet` after `prefix`.
pub(crate) fn check_step(
    prefix: &[Face],
    facet: Face,
    k: usize,
    rule: PairRule,
) -> std::result::Result<StepData, (Condition, String)> {
    let inter = intersection_facets(prefix, facet);
    let want = facet.len().checked_sub(k);
    if let Some(bad) = inter.iter().find(|g| Some(g.len()) != want) {
        return Err((
            Condition::Cardinality,
            format!(
                "intersection facet {bad:?} has {} vertices, expected |F_j| - k = {}",
                bad.len(),
                facet.len() as isize - k as isize
            ),
        ));
    }
    if inter.is_empty() {
        return Err((Condition::Cardinality, "empty intersection subcomplex".into()));
    }
    let sigmas: Vec<Face> = inter.iter().map(|g| facet.difference(*g)).collect();
    if inter.len() >= 2 {
        for a in 0..inter.len() {
            for b in a + 1..inter.len() {
                let checked = match rule {
                    PairRule::AllPairs => true,
                    PairRule::DisjointOnly => inter[a].is_disjoint(inter[b]),
                };
                if checked && !facet.is_subset(inter[a].union(inter[b])) {
                    return Err((
                        Condition::Covering,
                        format!(
                            "intersection facets {:?} and {:?} do not cover the facet",
                            inter[a], inter[b]
                        ),
                    ));
                }
            }
        }
    }
    Ok((inter, sigmas))
}

/// First failing step of an ordered facet list, without the `k` range check.
pub(crate) fn first_failure(facets: &[Face], k: usize, rule: PairRule) -> Option<Failure> {
    (1..facets.len()).find_map(|j| {
        check_step(&facets[..j], facets[j], k, rule)
            .err()
            .map(|(condition, detail)| Failure {
                j: j + 1,
                condition,
                detail,
            })
    })
}

fn check_order_shape(complex: &Complex, order: &ShellingOrder) -> Result<()> {
    let r = complex.num_facets();
    if r == 0 {
        return Err(Error::domain("the void complex has no shelling orders"));
    }
    if order.permutation.len() != r {
        return Err(Error::domain(format!(
            "order has {} entries but the complex has {r} facets",
            order.permutation.len()
        )));
    }
    let mut seen = vec![false; r];
    for &i in &order.permutation {
        if i >= r || std::mem::replace(&mut seen[i], true) {
            return Err(Error::domain(format!(
                "order {:?} is not a permutation of 0..{r}",
                order.permutation
            )));
        }
    }
    Ok(())
}

fn check_k_range(complex: &Complex, k: usize) -> Result<()> {
    let dim = complex.dimension()?;
    if k < 1 || k as isize > dim + 1 {
        return Err(Error::domain(format!(
            "k = {k} outside the admissible range 1..={}",
            dim + 1
        )));
    }
    Ok(())
}

fn validate(complex: &Complex, order: &ShellingOrder) -> Result<()> {
    check_order_shape(complex, order)?;
    check_k_range(complex, order.k)
}

pub fn verify_k_shelling(complex: &Complex, order: &ShellingOrder) -> Result<ShellingCertificate> {
    verify_k_shelling_with(complex, order, PairRule::default())
}

pub fn verify_k_shelling_with(
    complex: &Complex,
    order: &ShellingOrder,
    rule: PairRule,
) -> Result<ShellingCertificate> {
    validate(complex, order)?;
    let facets = order.facets(complex);
    let mut cert = ShellingCertificate {
        k: order.k,
        order: order.permutation.clone(),
        steps: Vec::new(),
        failure: None,
    };
    for j in 1..facets.len() {
        match check_step(&facets[..j], facets[j], order.k, rule) {
            Ok((intersection_facets, sigmas)) => {
                let minimal = minimal_transversals(&sigmas);
                let restriction_sets = box_factors(&minimal, order.k);
                cert.steps.push(StepCertificate {
                    j: j + 1,
                    facet: facets[j],
                    intersection_facets,
                    sigmas,
                    restriction_sets,
                });
            }
            Err((condition, detail)) => {
                cert.failure = Some(Failure {
                    j: j + 1,
                    condition,
                    detail,
                });
                break;
            }
        }
    }
    Ok(cert)
}

/// Minimal faces of `⟨F_1..F_j⟩` not in `⟨F_1..F_{j-1}⟩` (`j` is 1-based).
pub fn minimal_new_faces(complex: &Complex, order: &ShellingOrder, j: usize) -> Result<Vec<Face>> {
    check_order_shape(complex, order)?;
    if j < 1 || j > order.len() {
        return Err(Error::domain(format!("step {j} outside 1..={}", order.len())));
    }
    if j == 1 {
        return Ok(vec![Face::EMPTY]);
    }
    let facets = order.facets(complex);
    let facet = facets[j - 1];
    let sigmas: Vec<Face> = intersection_facets(&facets[..j - 1], facet)
        .into_iter()
        .map(|g| facet.difference(g))
        .collect();
    Ok(minimal_transversals(&sigmas))
}

/// Reconstruct disjoint `k`-sets `E_1..E_t` whose box product equals `minimal`.
fn box_factors(minimal: &[Face], k: usize) -> Option<Vec<Face>> {
    let first = *minimal.first()?;
    let t = first.len();
    if minimal.iter().any(|m| m.len() != t) {
        return None;
    }
    let members: HashSet<Face> = minimal.iter().copied().collect();
    let mut factors = Vec::with_capacity(t);
    for a in first.iter() {
        let rest = first.difference(Face::singleton(a));
        let e: Face = members
            .iter()
            .filter(|m| rest.is_subset(**m))
            .map(|m| m.difference(rest))
            .fold(Face::EMPTY, Face::union);
        factors.push(e);
    }
    let mut covered = Face::EMPTY;
    for e in &factors {
        if e.len() != k || !covered.is_disjoint(*e) {
            return None;
        }
        covered = covered.union(*e);
    }
    let expected = (k as u128).checked_pow(t as u32)?;
    if expected != minimal.len() as u128 {
        return None;
    }
    // Distinct box elements all lie in `members` and the sizes agree.
    let mut stack = vec![(0usize, Face::EMPTY)];
    while let Some((depth, acc)) = stack.pop() {
        if depth == factors.len() {
            if !members.contains(&acc) {
                return None;
            }
            continue;
        }
        for v in factors[depth].iter() {
            stack.push((depth + 1, acc.union(Face::singleton(v))));
        }
    }
    Some(factors)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionBStep {
    pub j: usize,
    pub minimal_faces: Vec<Face>,
    pub restriction_sets: Option<Vec<Face>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionB {
    pub holds: bool,
    pub steps: Vec<ConditionBStep>,
}

impl ConditionB {
    /// First 1-based step without a valid box decomposition.
    pub fn first_failure(&self) -> Option<usize> {
        self.steps
            .iter()
            .find(|s| s.restriction_sets.is_none())
            .map(|s| s.j)
    }
}

/// Box-product description of the minimal new faces at every step.
pub fn check_condition_b(complex: &Complex, order: &ShellingOrder) -> Result<ConditionB> {
    validate(complex, order)?;
    let mut steps = Vec::with_capacity(order.len());
    for j in 1..=order.len() {
        let minimal_faces = minimal_new_faces(complex, order, j)?;
        let restriction_sets = box_factors(&minimal_faces, order.k);
        steps.push(ConditionBStep {
            j,
            minimal_faces,
            restriction_sets,
        });
    }
    let holds = steps.iter().all(|s| s.restriction_sets.is_some());
    Ok(ConditionB { holds, steps })
}

/// First `(i, j)` (1-based, `i < j`) for which no `l < j` has
/// `F_j ∖ F_l` a `k`-subset of `F_j ∖ F_i`.
pub fn condition_c_violation(
    complex: &Complex,
    order: &ShellingOrder,
) -> Result<Option<(usize, usize)>> {
    validate(complex, order)?;
    let facets = order.facets(complex);
    for j in 1..facets.len() {
        let fj = facets[j];
        let diffs: Vec<Face> = facets[..j]
            .iter()
            .map(|fl| fj.difference(*fl))
            .filter(|d| d.len() == order.k)
            .collect();
        for (i, fi) in facets[..j].iter().enumerate() {
            let target = fj.difference(*fi);
            if !diffs.iter().any(|d| d.is_subset(target)) {
                return Ok(Some((i + 1, j + 1)));
            }
        }
    }
    Ok(None)
}

pub fn check_condition_c(complex: &Complex, order: &ShellingOrder) -> Result<bool> {
    condition_c_violation(complex, order).map(|v| v.is_none())
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Return the lexicographically least valid permutation.
    pub deterministic: bool,
    pub timeout: Option<Duration>,
    /// Explore first-level branches on the rayon pool.
    pub parallel: bool,
    pub rule: PairRule,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            deterministic: true,
            timeout: None,
            parallel: false,
            rule: PairRule::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(ShellingOrder),
    /// The whole space was exhausted without a valid order.
    NotFound,
    /// The timeout expired first.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: Outcome,
    pub nodes_visited: u64,
    /// Longest valid prefix reached.
    pub deepest_prefix: usize,
    pub num_facets: usize,
}

impl SearchReport {
    pub fn order(&self) -> Option<&ShellingOrder> {
        match &self.outcome {
            Outcome::Found(o) => Some(o),
            _ => None,
        }
    }

    pub fn found(&self) -> bool {
        matches!(self.outcome, Outcome::Found(_))
    }

    pub fn undecided(&self) -> bool {
        matches!(self.outcome, Outcome::Undecided)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dfs {
    Found,
    Dead,
    Timeout,
}

/// Placed facets as a bitset over facet indices.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Placed(Vec<u64>);

impl Placed {
    fn new(r: usize) -> Self {
        Placed(vec![0; r.div_ceil(64).max(1)])
    }
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn toggle(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }
}

struct Search<'a> {
    facets: &'a [Face],
    k: usize,
    rule: PairRule,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    deepest: AtomicUsize,
    timed_out: AtomicBool,
    stop: AtomicBool,
    // The set of placed facets determines every later intersection
    // subcomplex, so a prefix set with no completion is dead in any order.
    dead: Mutex<HashSet<Placed>>,
}

impl Search<'_> {
    fn dfs(&self, order: &mut Vec<usize>, placed: &mut Placed) -> Dfs {
        let r = self.facets.len();
        self.deepest.fetch_max(order.len(), Ordering::Relaxed);
        if order.len() == r {
            return Dfs::Found;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed);
        if self.stop.load(Ordering::Relaxed) {
            return Dfs::Timeout;
        }
        if n.is_multiple_of(256) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out.store(true, Ordering::Relaxed);
                    self.stop.store(true, Ordering::Relaxed);
                    return Dfs::Timeout;
                }
            }
        }
        if self.dead.lock().unwrap().contains(placed) {
            return Dfs::Dead;
        }
        let prefix: Vec<Face> = order.iter().map(|&i| self.facets[i]).collect();
        for cand in 0..r {
            if placed.contains(cand)
                || check_step(&prefix, self.facets[cand], self.k, self.rule).is_err()
            {
                continue;
            }
            order.push(cand);
            placed.toggle(cand);
            match self.dfs(order, placed) {
                Dfs::Found => return Dfs::Found,
                Dfs::Timeout => return Dfs::Timeout,
                Dfs::Dead => {
                    order.pop();
                    placed.toggle(cand);
                }
            }
        }
        self.dead.lock().unwrap().insert(placed.clone());
        Dfs::Dead
    }

    fn branch(&self, first: usize) -> (Dfs, Vec<usize>) {
        let mut order = vec![first];
        let mut placed = Placed::new(self.facets.len());
        placed.toggle(first);
        let res = self.dfs(&mut order, &mut placed);
        (res, order)
    }
}

/// Backtracking search without the `k ≤ dim + 1` precondition. A complex
/// with at most one facet is trivially accepted.
pub(crate) fn search_unchecked(
    facets: &[Face],
    k: usize,
    options: &SearchOptions,
) -> SearchReport {
    let r = facets.len();
    if r <= 1 {
        return SearchReport {
            outcome: Outcome::Found(ShellingOrder::identity(r, k)),
            nodes_visited: 0,
            deepest_prefix: r,
            num_facets: r,
        };
    }
    let search = Search {
        facets,
        k,
        rule: options.rule,
        deadline: options.timeout.map(|t| Instant::now() + t),
        nodes: AtomicU64::new(0),
        deepest: AtomicUsize::new(0),
        timed_out: AtomicBool::new(false),
        stop: AtomicBool::new(false),
        dead: Mutex::new(HashSet::new()),
    };
    let found: Option<(Dfs, Vec<usize>)> = match (options.parallel, options.deterministic) {
        (false, _) => (0..r).find_map(|first| {
            let (res, order) = search.branch(first);
            (res != Dfs::Dead).then_some((res, order))
        }),
        (true, true) => (0..r).into_par_iter().find_map_first(|first| {
            let (res, order) = search.branch(first);
            (res != Dfs::Dead).then_some((res, order))
        }),
        (true, false) => (0..r).into_par_iter().find_map_any(|first| {
            let (res, order) = search.branch(first);
            if res == Dfs::Found {
                search.stop.store(true, Ordering::Relaxed);
                Some((res, order))
            } else {
                None
            }
        }),
    };
    let outcome = match found {
        Some((Dfs::Found, order)) => Outcome::Found(ShellingOrder::new(order, k)),
        Some(_) => Outcome::Undecided,
        None if search.timed_out.load(Ordering::Relaxed) => Outcome::Undecided,
        None => Outcome::NotFound,
    };
    SearchReport {
        outcome,
        nodes_visited: search.nodes.load(Ordering::Relaxed),
        deepest_prefix: search.deepest.load(Ordering::Relaxed),
        num_facets: r,
    }
}

/// Search for a k-shelling order; see [`SearchOptions`] for the knobs.
pub fn find_k_shelling(complex: &Complex, k: usize, options: &SearchOptions) -> Result<SearchReport> {
    check_k_range(complex, k)?;
    let report = search_unchecked(complex.facets(), k, options);
    if let Outcome::Found(order) = &report.outcome {
        let cert = verify_k_shelling_with(complex, order, options.rule)?;
        if !cert.accepted() {
            return Err(Error::internal(format!(
                "search produced order {:?} that fails verification",
                order.permutation
            )));
        }
    }
    Ok(report)
}

/// Classic shellability, i.e. 1-shellability.
pub fn is_shellable(complex: &Complex, options: &SearchOptions) -> Result<SearchReport> {
    find_k_shelling(complex, 1, options)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&str]) -> Complex {
        let mut labels: Vec<String> = facets
            .iter()
            .flat_map(|f| f.chars().map(|c| c.to_string()))
            .collect();
        labels.sort();
        labels.dedup();
        let raw: Vec<Vec<String>> = facets
            .iter()
            .map(|f| f.chars().map(|c| c.to_string()).collect())
            .collect();
        Complex::normalize_facets(&labels, &raw).unwrap()
    }

    fn face(c: &Complex, s: &str) -> Face {
        let l: Vec<String> = s.chars().map(|c| c.to_string()).collect();
        c.universe().face_from_labels(&l).unwrap()
    }

    fn faces(c: &Complex, list: &[&str]) -> Vec<Face> {
        list.iter().map(|s| face(c, s)).collect()
    }

    fn ord(perm: &[usize], k: usize) -> ShellingOrder {
        ShellingOrder::new(perm.to_vec(), k)
    }

    #[test]
    fn path_is_one_shellable() {
        let c = cx(&["ab", "bc", "cd"]);
        let cert = verify_k_shelling(&c, &ord(&[0, 1, 2], 1)).unwrap();
        assert!(cert.accepted());
        assert_eq!(cert.steps.len(), 2);
        assert_eq!(cert.steps[0].sigmas, faces(&c, &["c"]));
        assert_eq!(cert.steps[0].restriction_sets, Some(faces(&c, &["c"])));
    }

    #[test]
    fn disjoint_edges_are_two_shellable_in_any_order() {
        let c = cx(&["ae", "bf", "cg"]);
        for perm in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            let cert = verify_k_shelling(&c, &ord(&perm, 2)).unwrap();
            assert!(cert.accepted(), "{perm:?}");
            assert!(cert.steps.iter().all(|s| s.intersection_facets == [Face::EMPTY]));
        }
    }

    #[test]
    fn three_triangles_fail_condition_ii_at_step_three() {
        let c = cx(&["abc", "aef", "cdf"]);
        let cert = verify_k_shelling(&c, &ord(&[0, 1, 2], 2)).unwrap();
        let failure = cert.failure.unwrap();
        assert_eq!(failure.j, 3);
        assert_eq!(failure.condition, Condition::Covering);
        // Δ_3 = ⟨c, f⟩ whichever pair rule is used.
        let lit = verify_k_shelling_with(&c, &ord(&[0, 1, 2], 2), PairRule::DisjointOnly).unwrap();
        assert_eq!(lit.failure.unwrap().condition, Condition::Covering);
    }

    #[test]
    fn overlapping_sigmas_split_the_pair_rules() {
        // σ = {1,2} and {2,3} overlap, but Δ_3 = ⟨34, 14⟩ has no disjoint pair.
        let c = cx(&["3456", "1457", "1234"]);
        let order = ord(&[0, 1, 2], 2);
        let lit = verify_k_shelling_with(&c, &order, PairRule::DisjointOnly).unwrap();
        assert!(lit.accepted());
        let all = verify_k_shelling(&c, &order).unwrap();
        assert_eq!(all.failure.unwrap().condition, Condition::Covering);
        assert!(!check_condition_b(&c, &order).unwrap().holds);
    }

    #[test]
    fn k_range_and_order_shape_errors() {
        let c = cx(&["ab", "bc"]);
        assert!(verify_k_shelling(&c, &ord(&[0, 1], 3)).is_err());
        assert!(verify_k_shelling(&c, &ord(&[0, 1], 0)).is_err());
        assert!(verify_k_shelling(&c, &ord(&[0, 0], 1)).is_err());
        assert!(verify_k_shelling(&c, &ord(&[0], 1)).is_err());
    }

    #[test]
    fn minimal_new_faces_examples() {
        let p = cx(&["ab", "bc", "cd"]);
        assert_eq!(minimal_new_faces(&p, &ord(&[0, 1, 2], 1), 2).unwrap(), faces(&p, &["c"]));
        assert_eq!(minimal_new_faces(&p, &ord(&[0, 1, 2], 1), 1).unwrap(), vec![Face::EMPTY]);
        let e = cx(&["ae", "bf", "cg"]);
        assert_eq!(
            minimal_new_faces(&e, &ord(&[0, 1, 2], 2), 2).unwrap(),
            faces(&e, &["b", "f"])
        );
        let r = cx(&["abc", "aef", "cdf"]);
        assert_eq!(
            minimal_new_faces(&r, &ord(&[0, 1, 2], 2), 3).unwrap(),
            faces(&r, &["d", "cf"])
        );
    }

    #[test]
    fn condition_b_examples() {
        let e = cx(&["ae", "bf", "cg"]);
        let b = check_condition_b(&e, &ord(&[0, 1, 2], 2)).unwrap();
        assert!(b.holds);
        assert_eq!(b.steps[1].restriction_sets, Some(faces(&e, &["bf"])));
        assert_eq!(b.steps[0].restriction_sets, Some(vec![]));

        let r = cx(&["abc", "aef", "cdf"]);
        let b = check_condition_b(&r, &ord(&[0, 1, 2], 2)).unwrap();
        assert!(!b.holds);
        assert_eq!(b.first_failure(), Some(3));
    }

    #[test]
    fn condition_b_k1_is_the_restriction_face() {
        let c = cx(&["abc", "acd", "bcd"]);
        let b = check_condition_b(&c, &ord(&[0, 1, 2], 1)).unwrap();
        assert!(b.holds);
        // Δ_3 = ⟨bc, cd⟩, so the new faces of bcd are those containing b and d.
        assert_eq!(b.steps[2].minimal_faces, faces(&c, &["bd"]));
        assert_eq!(b.steps[2].restriction_sets, Some(faces(&c, &["b", "d"])));
    }

    #[test]
    fn condition_c_examples() {
        let p = cx(&["ab", "bc", "cd"]);
        assert!(check_condition_c(&p, &ord(&[0, 1, 2], 1)).unwrap());
        let r = cx(&["abc", "aef", "cdf"]);
        assert!(check_condition_c(&r, &ord(&[0, 1, 2], 2)).unwrap());
        let t = cx(&["abc", "ade"]);
        assert!(!check_condition_c(&t, &ord(&[0, 1], 1)).unwrap());
        assert_eq!(condition_c_violation(&t, &ord(&[0, 1], 1)).unwrap(), Some((1, 2)));
    }

    #[test]
    fn search_examples() {
        let opts = SearchOptions::default();
        let c = cx(&["abc", "acd", "bcd"]);
        assert_eq!(find_k_shelling(&c, 1, &opts).unwrap().order().unwrap().permutation, [0, 1, 2]);
        let strip = cx(&["abe", "bcf", "cdg"]);
        assert!(find_k_shelling(&strip, 2, &opts).unwrap().found());
        let r = cx(&["abc", "aef", "cdf"]);
        assert_eq!(find_k_shelling(&r, 2, &opts).unwrap().outcome, Outcome::NotFound);
        assert_eq!(is_shellable(&r, &opts).unwrap().outcome, Outcome::NotFound);
        let single = cx(&["abc"]);
        assert_eq!(is_shellable(&single, &opts).unwrap().order().unwrap().permutation, [0]);
    }

    #[test]
    fn search_is_lexicographically_least() {
        let c = cx(&["ad", "ab", "bc"]);
        let report = find_k_shelling(&c, 1, &SearchOptions::default()).unwrap();
        assert_eq!(report.order().unwrap().permutation, [0, 1, 2]);
        let c = cx(&["ab", "cd", "bc"]);
        let report = find_k_shelling(&c, 1, &SearchOptions::default()).unwrap();
        assert_eq!(report.order().unwrap().permutation, [0, 2, 1]);
        let par = SearchOptions {
            parallel: true,
            ..SearchOptions::default()
        };
        assert_eq!(find_k_shelling(&c, 1, &par).unwrap().outcome, report.outcome);
    }

    #[test]
    fn zero_timeout_is_undecided() {
        // A zero deadline fires on the first node check.
        let facets: Vec<String> = (0..10).map(|i| format!("{}{}", (b'a' + i) as char, (b'a' + (i + 3) % 10) as char)).collect();
        let refs: Vec<&str> = facets.iter().map(|s| s.as_str()).collect();
        let c = cx(&refs);
        let opts = SearchOptions {
            timeout: Some(Duration::ZERO),
            ..SearchOptions::default()
        };
        let report = find_k_shelling(&c, 2, &opts).unwrap();
        assert!(report.undecided());
    }
}
