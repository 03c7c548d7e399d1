//! Simplicial complexes presented by their facets.
//!
//! Vertices carry a human label and a dense index into the owning
//! [`Universe`]; faces are bitsets over that index. Labels only matter at
//! I/O boundaries and when two complexes over different universes are
//! compared.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the size of a vertex universe (faces are `u128` bitsets).
pub const MAX_VERTICES: usize = 128;

/// A set of vertex indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u128) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(index: usize) -> Self {
        assert!(index < MAX_VERTICES, "vertex index {index} out of range");
        Face(1u128 << index)
    }

    /// The face `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Face(u128::MAX)
        } else {
            Face((1u128 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(Face::EMPTY, |acc, i| acc.union(Face::singleton(i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_VERTICES && self.0 >> index & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        *self = self.union(Face::singleton(index));
    }

    pub fn remove(&mut self, index: usize) {
        *self = self.difference(Face::singleton(index));
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn min_index(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max_index(self) -> Option<usize> {
        (!self.is_empty()).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Ascending vertex indices.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending index sequences.
    pub fn cmp_lex(self, other: Face) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Every subset of this face, starting with the empty face.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(0u128);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some(cur.wrapping_sub(full) & full)
            };
            Some(Face(cur))
        })
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Face::from_indices(iter)
    }
}

pub struct FaceIter(u128);

impl Iterator for FaceIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for FaceIter {}

/// A named vertex with its dense index in the owning universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexId {
    pub label: String,
    pub index: usize,
}

/// Ordered vertex list with unique labels.
#[derive(Clone, Debug, Default)]
pub struct Universe {
    vertices: Vec<VertexId>,
    lookup: HashMap<String, usize>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for Universe {}

pub(crate) fn check_label(label: &str) -> Result<()> {
    if label.is_empty()
        || label.chars().any(|c| c.is_whitespace() || c == '#' || c == '^')
        || label == "{}"
        || label.ends_with(':')
    {
        return Err(Error::domain(format!("invalid vertex label `{label}`")));
    }
    Ok(())
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut universe = Universe::default();
        for label in labels {
            universe.push(label.into())?;
        }
        Ok(universe)
    }

    fn push(&mut self, label: String) -> Result<usize> {
        check_label(&label)?;
        if self.lookup.contains_key(&label) {
            return Err(Error::domain(format!("duplicate vertex label `{label}`")));
        }
        if self.vertices.len() == MAX_VERTICES {
            return Err(Error::domain(format!(
                "universe exceeds {MAX_VERTICES} vertices"
            )));
        }
        let index = self.vertices.len();
        self.lookup.insert(label.clone(), index);
        self.vertices.push(VertexId { label, index });
        Ok(index)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn label(&self, index: usize) -> &str {
        &self.vertices[index].label
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(|v| v.label.as_str())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.lookup.get(label).copied()
    }

    pub fn full_face(&self) -> Face {
        Face::full(self.len())
    }

    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
            })
            .collect::<Result<Face>>()
    }

    pub fn face_labels(&self, face: Face) -> Vec<String> {
        face.iter().map(|i| self.label(i).to_string()).collect()
    }

    /// True when every member of `face` indexes a vertex of this universe.
    pub fn covers(&self, face: Face) -> bool {
        face.is_subset(self.full_face())
    }

    /// Universe with the vertices of `removed` dropped, plus the old→new index map.
    pub fn without(&self, removed: Face) -> (Universe, Vec<Option<usize>>) {
        let mut out = Universe::default();
        let mut map = vec![None; self.len()];
        for v in &self.vertices {
            if !removed.contains(v.index) {
                map[v.index] = Some(out.push(v.label.clone()).expect("labels already valid"));
            }
        }
        (out, map)
    }

    /// Concatenation of two universes with disjoint label sets.
    pub fn concat(&self, other: &Universe) -> Result<Universe> {
        let mut out = self.clone();
        for v in &other.vertices {
            if out.lookup.contains_key(&v.label) {
                return Err(Error::domain(format!(
                    "universes overlap in vertex `{}`",
                    v.label
                )));
            }
            out.push(v.label.clone())?;
        }
        Ok(out)
    }

    /// Translate a face of `self` into `target` by label.
    pub fn translate(&self, face: Face, target: &Universe) -> Result<Face> {
        face.iter()
            .map(|i| {
                target
                    .index_of(self.label(i))
                    .ok_or_else(|| Error::UnknownLabel(self.label(i).to_string()))
            })
            .collect()
    }
}

/// Keep the inclusion-maximal faces, dropping repeats; survivors keep their order.
pub fn maximal_faces(faces: &[Face]) -> Vec<Face> {
    let mut out = Vec::with_capacity(faces.len());
    for (i, &f) in faces.iter().enumerate() {
        let dominated = faces.iter().enumerate().any(|(j, &g)| {
            (f != g && f.is_subset(g)) || (f == g && j < i)
        });
        if !dominated {
            out.push(f);
        }
    }
    out
}

/// Keep the inclusion-minimal faces, dropping repeats; survivors keep their order.
pub fn minimal_faces(faces: &[Face]) -> Vec<Face> {
    let mut out = Vec::with_capacity(faces.len());
    for (i, &f) in faces.iter().enumerate() {
        let dominated = faces.iter().enumerate().any(|(j, &g)| {
            (f != g && g.is_subset(f)) || (f == g && j < i)
        });
        if !dominated {
            out.push(f);
        }
    }
    out
}

/// Sort faces by (cardinality, lexicographic index sequence).
pub fn sort_canonical(faces: &mut [Face]) {
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp_lex(*b)));
}

/// Inclusion-minimal sets meeting every member of `sets` (Berge's algorithm).
///
/// An empty member makes the family untransversable and yields no sets; an
/// empty family yields `[∅]`.
pub fn minimal_transversals(sets: &[Face]) -> Vec<Face> {
    let mut current = vec![Face::EMPTY];
    for &s in sets {
        let mut next: Vec<Face> = Vec::new();
        for &t in &current {
            if !t.is_disjoint(s) {
                next.push(t);
            } else {
                next.extend(s.iter().map(|v| t.union(Face::singleton(v))));
            }
        }
        let mut seen = HashSet::new();
        next.retain(|f| seen.insert(*f));
        current = minimal_faces(&next);
        if current.is_empty() {
            break;
        }
    }
    sort_canonical(&mut current);
    current
}

/// A simplicial complex given by an antichain of facets over a universe.
///
/// The void complex (no facets) and the complex `{∅}` (one empty facet) are
/// distinct values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    universe: Universe,
    facets: Vec<Face>,
}

impl Complex {
    /// Build from arbitrary generating faces; non-maximal faces and repeats are dropped.
    pub fn from_faces(universe: Universe, faces: &[Face]) -> Result<Self> {
        if let Some(bad) = faces.iter().find(|f| !universe.covers(**f)) {
            return Err(Error::domain(format!(
                "face {bad:?} is not contained in the universe"
            )));
        }
        Ok(Complex {
            universe,
            facets: maximal_faces(faces),
        })
    }

    /// The complex with no faces at all.
    pub fn void(universe: Universe) -> Self {
        Complex {
            universe,
            facets: Vec::new(),
        }
    }

    /// The full simplex on the universe.
    pub fn simplex(universe: Universe) -> Self {
        let f = universe.full_face();
        Complex {
            universe,
            facets: vec![f],
        }
    }

    /// Facets from label lists: the maximal members survive in input order.
    pub fn normalize_facets<S, F>(universe: &[S], raw_faces: &[F]) -> Result<Self>
    where
        S: AsRef<str>,
        F: AsRef<[S]>,
    {
        let universe = Universe::new(universe.iter().map(|s| s.as_ref().to_string()))?;
        let faces = raw_faces
            .iter()
            .map(|f| universe.face_from_labels(f.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Complex::from_faces(universe, &faces)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet(&self, i: usize) -> Face {
        self.facets[i]
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `(dim, pure)` where `dim` is the largest facet cardinality minus one.
    pub fn dimension_and_purity(&self) -> Result<(isize, bool)> {
        let sizes = self.facets.iter().map(|f| f.len());
        let max = sizes
            .clone()
            .max()
            .ok_or_else(|| Error::domain("the void complex has no dimension"))?;
        let pure = sizes.clone().all(|s| s == max);
        Ok((max as isize - 1, pure))
    }

    pub fn dimension(&self) -> Result<isize> {
        self.dimension_and_purity().map(|(d, _)| d)
    }

    pub fn is_pure(&self) -> bool {
        self.dimension_and_purity().map(|(_, p)| p).unwrap_or(true)
    }

    fn check_covered(&self, face: Face) -> Result<()> {
        if self.universe.covers(face) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "face {face:?} is not contained in the universe"
            )))
        }
    }

    /// True iff `face` lies in some facet.
    pub fn contains_face(&self, face: Face) -> Result<bool> {
        self.check_covered(face)?;
        Ok(self.facets.iter().any(|f| face.is_subset(*f)))
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ C}` over the universe with `F` removed.
    pub fn link(&self, face: Face) -> Result<Complex> {
        if !self.contains_face(face)? {
            return Err(Error::domain(format!("{face:?} is not a face of the complex")));
        }
        let (universe, map) = self.universe.without(face);
        let faces: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| {
                f.difference(face)
                    .iter()
                    .map(|i| map[i].expect("vertex outside removed face"))
                    .collect()
            })
            .collect();
        Complex::from_faces(universe, &faces)
    }

    /// The faces of the complex that do not contain `face`.
    pub fn deletion(&self, face: Face) -> Result<Complex> {
        self.check_covered(face)?;
        let mut faces = Vec::new();
        for &f in &self.facets {
            if !face.is_subset(f) {
                faces.push(f);
            } else {
                faces.extend(face.iter().map(|v| f.difference(Face::singleton(v))));
            }
        }
        Complex::from_faces(self.universe.clone(), &faces)
    }

    /// `{σ ∪ τ}` over the concatenated universe; facets ordered with `self` outer.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        let universe = self.universe.concat(&other.universe)?;
        let shift = self.universe.len();
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &f in &self.facets {
            for &g in &other.facets {
                facets.push(f.union(Face::from_bits(g.bits() << shift)));
            }
        }
        Ok(Complex { universe, facets })
    }

    /// Every face, sorted canonically. Exponential in facet size.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for &f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        sort_canonical(&mut out);
        out
    }

    /// `f[s]` is the number of faces with exactly `s` vertices (so `f[0] = 1`
    /// unless the complex is void).
    pub fn face_counts(&self) -> Vec<u128> {
        let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut counts = vec![0u128; top + 1];
        if self.facets.is_empty() {
            return counts;
        }
        if self.facets.len() <= 20 {
            // Inclusion-exclusion over nonempty facet subsets.
            let r = self.facets.len();
            for mask in 1u32..(1u32 << r) {
                let inter = (0..r)
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(self.universe.full_face(), |acc, i| {
                        acc.intersection(self.facets[i])
                    })
                    .len();
                let positive = mask.count_ones() % 2 == 1;
                for (s, c) in counts.iter_mut().enumerate().take(inter + 1) {
                    let b = binomial(inter as u64, s as u64);
                    if positive {
                        *c = c.wrapping_add(b);
                    } else {
                        *c = c.wrapping_sub(b);
                    }
                }
            }
        } else {
            for f in self.faces() {
                counts[f.len()] += 1;
            }
        }
        counts
    }

    /// Facets as sorted label sets, for comparing complexes across universes.
    pub fn facet_label_sets(&self) -> BTreeSet<BTreeSet<String>> {
        self.facets
            .iter()
            .map(|f| self.universe.face_labels(*f).into_iter().collect())
            .collect()
    }

    /// Facet-set equality by labels, ignoring facet order and unused vertices.
    pub fn same_facets(&self, other: &Complex) -> bool {
        self.facet_label_sets() == other.facet_label_sets()
    }

    /// Replace the universe labels, keeping indices.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Complex> {
        let universe = Universe::new(self.universe.labels().map(f))?;
        Ok(Complex {
            universe,
            facets: self.facets.clone(),
        })
    }

    /// Same facets, re-expressed over a larger universe containing every label.
    pub fn over_universe(&self, universe: &Universe) -> Result<Complex> {
        let facets = self
            .facets
            .iter()
            .map(|f| self.universe.translate(*f, universe))
            .collect::<Result<Vec<_>>>()?;
        Ok(Complex {
            universe: universe.clone(),
            facets,
        })
    }

    /// Reorder the facet list (used to present shelling orders).
    pub fn with_facet_order(&self, order: &[usize]) -> Complex {
        Complex {
            universe: self.universe.clone(),
            facets: order.iter().map(|&i| self.facets[i]).collect(),
        }
    }

    /// Facets rendered with labels, e.g. `[ab, bc]` style lists.
    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|f| self.universe.face_labels(*f))
            .collect()
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(universe: &str, facets: &[&str]) -> Complex {
        let u: Vec<String> = universe.chars().map(|c| c.to_string()).collect();
        let raw: Vec<Vec<String>> = facets
            .iter()
            .map(|f| f.chars().map(|c| c.to_string()).collect())
            .collect();
        Complex::normalize_facets(&u, &raw).unwrap()
    }

    fn face(c: &Complex, labels: &str) -> Face {
        let l: Vec<String> = labels.chars().map(|c| c.to_string()).collect();
        c.universe().face_from_labels(&l).unwrap()
    }

    fn labels(c: &Complex) -> Vec<String> {
        c.facet_labels().into_iter().map(|f| f.concat()).collect()
    }

    #[test]
    fn normalize_drops_non_maximal() {
        assert_eq!(labels(&cx("abc", &["ab", "a", "bc"])), ["ab", "bc"]);
        assert_eq!(labels(&cx("abcdef", &["abc", "aef", "cdf"])), ["abc", "aef", "cdf"]);
        assert_eq!(labels(&cx("abc", &["ab", "ba", "ab"])), ["ab"]);
    }

    #[test]
    fn normalize_empty_face_and_void() {
        let c = cx("a", &[""]);
        assert_eq!(c.facets(), &[Face::EMPTY]);
        assert!(!c.is_void());
        let v = cx("a", &[]);
        assert!(v.is_void());
        assert_ne!(c, v);
    }

    #[test]
    fn normalize_rejects_unknown_label() {
        let err = Complex::normalize_facets(&["a", "b"], &[vec!["a", "z"]]).unwrap_err();
        assert_eq!(err, Error::UnknownLabel("z".into()));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(cx("abcd", &["ab", "bc", "cd"]).dimension_and_purity().unwrap(), (1, true));
        assert_eq!(cx("a", &[""]).dimension_and_purity().unwrap(), (-1, true));
        assert_eq!(cx("abcde", &["abc", "de"]).dimension_and_purity().unwrap(), (2, false));
        assert!(matches!(
            cx("a", &[]).dimension_and_purity(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn link_examples() {
        let c = cx("abcdef", &["abc", "aef", "cdf"]);
        let l = c.link(face(&c, "a")).unwrap();
        assert_eq!(labels(&l), ["bc", "ef"]);
        assert_eq!(l.universe().labels().collect::<String>(), "bcdef");
        assert_eq!(c.link(Face::EMPTY).unwrap(), c);

        let p = cx("abc", &["ab", "bc"]);
        assert_eq!(labels(&p.link(face(&p, "b")).unwrap()), ["a", "c"]);
        assert!(p.link(face(&p, "ac")).is_err());
    }

    #[test]
    fn deletion_examples() {
        let p = cx("abc", &["ab", "bc"]);
        assert_eq!(labels(&p.deletion(face(&p, "b")).unwrap()), ["a", "c"]);
        assert!(p.deletion(Face::EMPTY).unwrap().is_void());
        let c = cx("abcdef", &["abc", "aef", "cdf"]);
        assert_eq!(labels(&c.deletion(face(&c, "d")).unwrap()), ["abc", "aef", "cf"]);
    }

    #[test]
    fn join_examples() {
        let a = cx("a", &["a"]);
        let bc = cx("bc", &["b", "c"]);
        assert_eq!(labels(&a.join(&bc).unwrap()), ["ab", "ac"]);
        let ab = cx("ab", &["ab"]);
        let cd = cx("cd", &["cd"]);
        assert_eq!(labels(&ab.join(&cd).unwrap()), ["abcd"]);
        let empty = Complex::from_faces(Universe::default(), &[Face::EMPTY]).unwrap();
        assert_eq!(ab.join(&empty).unwrap(), ab);
        assert!(ab.join(&ab).is_err());
    }

    #[test]
    fn contains_face_examples() {
        let c = cx("abc", &["abc"]);
        assert!(c.contains_face(face(&c, "ac")).unwrap());
        assert!(c.universe().face_from_labels(&["d"]).is_err());
        assert!(c.contains_face(Face::singleton(5)).is_err());
        let p = cx("abc", &["ab", "bc"]);
        assert!(!p.contains_face(face(&p, "ac")).unwrap());
    }

    #[test]
    fn face_counts_match_enumeration() {
        let c = cx("abcdef", &["abc", "aef", "cdf", "bd"]);
        let mut by_enum = vec![0u128; 4];
        for f in c.faces() {
            by_enum[f.len()] += 1;
        }
        assert_eq!(c.face_counts(), by_enum);
    }

    #[test]
    fn transversals() {
        let sets = [Face::from_indices([0, 1]), Face::from_indices([1, 2])];
        assert_eq!(
            minimal_transversals(&sets),
            vec![Face::from_indices([1]), Face::from_indices([0, 2])]
        );
        assert_eq!(minimal_transversals(&[]), vec![Face::EMPTY]);
        assert!(minimal_transversals(&[Face::EMPTY]).is_empty());
    }

    #[test]
    fn subsets_enumerates_powerset() {
        let f = Face::from_indices([1, 4, 7]);
        let subs: Vec<Face> = f.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(f)));
        assert_eq!(Face::EMPTY.subsets().count(), 1);
    }
}
