//! The expansion functor on faces, complexes and monomial ideals, and the
//! Stanley–Reisner correspondence between complexes and squarefree ideals.
//!
//! Vertex `x` with multiplicity `k_x` expands to copies `x_1 .. x_{k_x}`,
//! ordered by (original index, copy).

use itertools::Itertools;

use crate::complex::{minimal_transversals, sort_canonical, Complex, Face, Universe};
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};

/// Per-vertex multiplicities `(k_1, .., k_n)`, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpansionVector(Vec<usize>);

impl ExpansionVector {
    pub fn new(alpha: Vec<usize>) -> Result<Self> {
        if let Some(pos) = alpha.iter().position(|&k| k == 0) {
            return Err(Error::domain(format!(
                "expansion entry {} is zero; entries must be positive",
                pos + 1
            )));
        }
        Ok(ExpansionVector(alpha))
    }

    /// The vector `(k, .., k)` of length `n`.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        ExpansionVector::new(vec![k; n])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::domain(format!(
                "expansion vector has {} entries but there are {n} vertices",
                self.0.len()
            )));
        }
        Ok(())
    }

    /// First expanded index of each original vertex.
    fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.0
            .iter()
            .map(|&k| {
                let start = acc;
                acc += k;
                start
            })
            .collect()
    }
}

pub fn copy_label(label: &str, copy: usize) -> String {
    format!("{label}_{copy}")
}

/// The expanded vertex list `x_1 .. x_{k_x}` for every `x`.
pub fn expand_universe(universe: &Universe, alpha: &ExpansionVector) -> Result<Universe> {
    alpha.check_len(universe.len())?;
    Universe::new(
        universe
            .labels()
            .zip(alpha.entries())
            .flat_map(|(label, &k)| (1..=k).map(move |c| copy_label(label, c))),
    )
}

fn expand_face_indices(face: Face, alpha: &ExpansionVector, offsets: &[usize]) -> Face {
    face.iter()
        .flat_map(|i| offsets[i]..offsets[i] + alpha.entries()[i])
        .collect()
}

/// `F^α` as a face of the expanded universe.
pub fn expand_face(face: Face, universe: &Universe, alpha: &ExpansionVector) -> Result<Face> {
    alpha.check_len(universe.len())?;
    if !universe.covers(face) {
        return Err(Error::domain(format!("{face:?} is not contained in the universe")));
    }
    Ok(expand_face_indices(face, alpha, &alpha.offsets()))
}

/// `Δ^α = ⟨F_1^α, .., F_r^α⟩`, facets kept in order.
pub fn expand_complex(complex: &Complex, alpha: &ExpansionVector) -> Result<Complex> {
    let universe = expand_universe(complex.universe(), alpha)?;
    let offsets = alpha.offsets();
    let facets: Vec<Face> = complex
        .facets()
        .iter()
        .map(|f| expand_face_indices(*f, alpha, &offsets))
        .collect();
    let expanded = Complex::from_faces(universe, &facets)?;
    if expanded.num_facets() != complex.num_facets() {
        return Err(Error::internal("expansion collapsed two facets"));
    }
    Ok(expanded)
}

fn require_nonvoid(complex: &Complex) -> Result<()> {
    if complex.is_void() {
        return Err(Error::domain("the void complex has no Stanley–Reisner ideal"));
    }
    Ok(())
}

/// `I_Δ`, generated by the minimal non-faces (the minimal transversals of the
/// facet complements).
pub fn stanley_reisner_ideal(complex: &Complex) -> Result<MonomialIdeal> {
    require_nonvoid(complex)?;
    let full = complex.universe().full_face();
    let complements: Vec<Face> = complex.facets().iter().map(|f| full.difference(*f)).collect();
    let gens = minimal_transversals(&complements)
        .into_iter()
        .map(Monomial::from_face)
        .collect();
    MonomialIdeal::new(complex.universe().clone(), gens)
}

/// `I_Δ = ⋂ P_{F^c}` computed by intersecting the facet-complement primes.
pub fn stanley_reisner_ideal_by_primes(complex: &Complex) -> Result<MonomialIdeal> {
    require_nonvoid(complex)?;
    let universe = complex.universe();
    let full = universe.full_face();
    complex
        .facets()
        .iter()
        .map(|f| MonomialIdeal::prime(universe.clone(), full.difference(*f)))
        .try_fold(MonomialIdeal::unit(universe.clone()), |acc, p| acc.intersection(&p))
}

/// `I^α = Σ_i P_1^{ν_1(u_i)} ⋯ P_n^{ν_n(u_i)}` with `P_j` the prime on the copies of `x_j`.
pub fn expand_ideal(ideal: &MonomialIdeal, alpha: &ExpansionVector) -> Result<MonomialIdeal> {
    let variables = expand_universe(ideal.variables(), alpha)?;
    let offsets = alpha.offsets();
    let mut gens = Vec::new();
    for u in ideal.generators() {
        // One factor per (variable, exponent): all degree-ν monomials in the copies.
        let mut partial = vec![Monomial::one()];
        for (j, nu) in u.exponents() {
            let copies = offsets[j]..offsets[j] + alpha.entries()[j];
            let powers: Vec<Monomial> = copies
                .combinations_with_replacement(nu as usize)
                .map(|c| Monomial::from_exponents(c.into_iter().map(|v| (v, 1))))
                .collect();
            partial = partial
                .iter()
                .cartesian_product(&powers)
                .map(|(a, b)| a.mul(b))
                .collect();
        }
        gens.extend(partial);
    }
    MonomialIdeal::new(variables, gens)
}

/// The complex whose faces are the squarefree monomials outside `ideal`.
///
/// Facets are listed in lexicographic order of their index sequences.
pub fn complex_from_squarefree_ideal(ideal: &MonomialIdeal, universe: &Universe) -> Result<Complex> {
    if let Some(bad) = ideal.generators().iter().find(|g| !g.is_squarefree()) {
        return Err(Error::domain(format!(
            "generator {} is not squarefree",
            bad.format(ideal.variables())
        )));
    }
    let supports = ideal
        .generators()
        .iter()
        .map(|g| ideal.variables().translate(g.support(), universe))
        .collect::<Result<Vec<Face>>>()?;
    let full = universe.full_face();
    let mut facets: Vec<Face> = minimal_transversals(&supports)
        .into_iter()
        .map(|t| full.difference(t))
        .collect();
    facets.sort_by(|a, b| a.cmp_lex(*b));
    Complex::from_faces(universe.clone(), &facets)
}

/// Minimal non-faces, canonically sorted; handy for reports.
pub fn minimal_nonfaces(complex: &Complex) -> Result<Vec<Face>> {
    let ideal = stanley_reisner_ideal(complex)?;
    let mut out: Vec<Face> = ideal.generators().iter().map(Monomial::support).collect();
    sort_canonical(&mut out);
    Ok(out)
}
