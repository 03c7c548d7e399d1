//! Filtrations, linear quotients of products of primes, and Stanley
//! decompositions built from k-shelling orders.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{binomial, Complex, Face};
use crate::error::{Error, Result};
use crate::ideal::{minimalize, sort_lex_descending, Monomial, MonomialIdeal};
use crate::shelling::{verify_k_shelling, ShellingCertificate, ShellingOrder};

/// The monomial prime `P_F = (x_i : i ∈ F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeSet {
    pub support: Face,
}

impl PrimeSet {
    pub fn new(support: Face) -> Self {
        PrimeSet { support }
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }
}

/// One step `M_i / M_{i-1}` of the filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationStep {
    /// Filtration index, 1-based.
    pub i: usize,
    /// 1-based position of `facet` in the shelling order; equals `r - i + 1`.
    pub position: usize,
    pub facet: Face,
    pub a: usize,
    pub sigmas: Vec<Face>,
    /// The `k^a` generators of `∏ P_σ`; each has total degree `a`.
    pub shifts: Vec<Monomial>,
}

/// A Stanley space `u·K[Z]` with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleySpace {
    /// 1-based shelling position of the facet.
    pub i: usize,
    /// 1-based index among the facet's `k^{a_i}` generators.
    pub j: usize,
    pub u: Monomial,
    pub z: Face,
    pub l: Face,
}

/// Per-facet data needed by the closed-form check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub i: usize,
    pub facet: Face,
    pub a: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyDecomposition {
    pub complex: Complex,
    pub k: usize,
    pub blocks: Vec<Block>,
    pub spaces: Vec<StanleySpace>,
}

fn verified(complex: &Complex, order: &ShellingOrder) -> Result<ShellingCertificate> {
    let cert = verify_k_shelling(complex, order)?;
    match &cert.failure {
        None => Ok(cert),
        Some(f) => Err(Error::domain(format!(
            "order is not a {}-shelling: step {} violates condition ({})",
            order.k,
            f.j,
            f.condition.code()
        ))),
    }
}

/// The σ's at 1-based shelling position `i`; empty for `i = 1`.
pub fn shelling_step_data(complex: &Complex, order: &ShellingOrder, i: usize) -> Result<Vec<Face>> {
    let cert = verified(complex, order)?;
    if i == 0 || i > order.len() {
        return Err(Error::domain(format!("step {i} is outside 1..={}", order.len())));
    }
    Ok(sigmas_at(&cert, i))
}

fn sigmas_at(cert: &ShellingCertificate, i: usize) -> Vec<Face> {
    if i == 1 {
        Vec::new()
    } else {
        cert.steps[i - 2].sigmas.clone()
    }
}

/// Generators of `P_{σ_1} ⋯ P_{σ_s}` for pairwise disjoint `k`-sets, in
/// descending lex order; `[1]` when `s = 0`.
pub fn product_prime_generators(sigmas: &[Face]) -> Result<Vec<Monomial>> {
    if let Some(first) = sigmas.first() {
        if sigmas.iter().any(|s| s.len() != first.len()) {
            return Err(Error::domain("prime supports do not share one size"));
        }
    }
    let mut seen = Face::EMPTY;
    for s in sigmas {
        if !seen.is_disjoint(*s) {
            return Err(Error::domain("prime supports overlap"));
        }
        seen = seen.union(*s);
    }
    let mut gens = vec![Monomial::one()];
    for s in sigmas {
        gens = gens
            .iter()
            .flat_map(|g| s.iter().map(move |v| g.mul(&Monomial::var(v))))
            .collect();
    }
    sort_lex_descending(&mut gens);
    Ok(gens)
}

/// `Q_j`: the variables generating `(f_1, .., f_{j-1}) : f_j`, with `Q_1 = ∅`.
///
/// Fails if some colon ideal is not generated by variables, or if the last
/// colon is not the largest one with `(k - 1)·s` generators.
pub fn colon_quotients(gens: &[Monomial]) -> Result<Vec<Face>> {
    let mut out = Vec::with_capacity(gens.len());
    for (j, f) in gens.iter().enumerate() {
        let quotients = gens[..j]
            .iter()
            .map(|t| t.quotient(&t.gcd(f)).expect("gcd divides"))
            .collect();
        let minimal = minimalize(quotients);
        let mut q = Face::EMPTY;
        for m in &minimal {
            if m.degree() != 1 {
                return Err(Error::internal(format!(
                    "colon ideal at position {} has non-linear generator {m:?}",
                    j + 1
                )));
            }
            q = q.union(m.support());
        }
        out.push(q);
    }
    if let Some(first) = gens.first() {
        let s = first.degree() as usize;
        let k = if s == 0 {
            1
        } else {
            // Every generator picks one variable per σ, so k^s generators means k = |gens|^(1/s).
            (1..=gens.len()).find(|k| k.pow(s as u32) == gens.len()).ok_or_else(|| {
                Error::internal(format!("{} generators is not a power k^{s}", gens.len()))
            })?
        };
        let last = out.last().expect("nonempty").len();
        let max = out.iter().map(|q| q.len()).max().unwrap_or(0);
        if last != max || last != (k - 1) * s {
            return Err(Error::internal(format!(
                "last colon has {last} generators, expected the maximum (k-1)s = {}",
                (k - 1) * s
            )));
        }
    }
    Ok(out)
}

/// `⋂_{j<i} P_{F_j^c}`; the unit ideal when the prefix is empty.
fn prefix_ideal(complex: &Complex, prefix: &[Face]) -> Result<MonomialIdeal> {
    let vars = complex.universe().clone();
    let full = vars.full_face();
    prefix.iter().try_fold(MonomialIdeal::unit(vars.clone()), |acc, f| {
        acc.intersection(&MonomialIdeal::prime(vars.clone(), full.difference(*f)))
    })
}

/// The filtration over the reversed shelling order, with the prime-intersection
/// identity checked at every step.
pub fn build_filtration(complex: &Complex, order: &ShellingOrder) -> Result<Vec<FiltrationStep>> {
    let cert = verified(complex, order)?;
    let facets = order.facets(complex);
    let vars = complex.universe().clone();
    let full = vars.full_face();
    let r = facets.len();
    let mut steps = Vec::with_capacity(r);
    for i in 1..=r {
        let position = r - i + 1;
        let facet = facets[position - 1];
        let sigmas = sigmas_at(&cert, position);
        let shifts = product_prime_generators(&sigmas)?;

        let own = MonomialIdeal::prime(vars.clone(), full.difference(facet));
        let lhs = prefix_ideal(complex, &facets[..position - 1])?.sum(&own)?;
        let product = MonomialIdeal::new(vars.clone(), shifts.clone())?;
        let rhs = own.sum(&product)?;
        if lhs != rhs {
            return Err(Error::internal(format!(
                "prime-intersection identity fails at shelling position {position}: {:?} vs {:?}",
                lhs.formatted_generators(),
                rhs.formatted_generators()
            )));
        }
        steps.push(FiltrationStep {
            i,
            position,
            facet,
            a: sigmas.len(),
            sigmas,
            shifts,
        });
    }
    Ok(steps)
}

/// Stanley decomposition `⊕ u_ij K[Z_ij]` of the face ring from a k-shelling
/// of a pure complex.
pub fn stanley_decomposition(complex: &Complex, order: &ShellingOrder) -> Result<StanleyDecomposition> {
    let cert = verified(complex, order)?;
    if !complex.is_pure() {
        return Err(Error::domain("Stanley decompositions are built for pure complexes only"));
    }
    let full = complex.universe().full_face();
    let facets = order.facets(complex);
    let mut blocks = Vec::with_capacity(facets.len());
    let mut spaces = Vec::new();
    for (idx, &facet) in facets.iter().enumerate() {
        let i = idx + 1;
        let sigmas = sigmas_at(&cert, i);
        let gens = product_prime_generators(&sigmas)?;
        let qs = colon_quotients(&gens)?;
        for (j, (u, q)) in gens.into_iter().zip(qs).enumerate() {
            let l = full.difference(facet).union(q);
            spaces.push(StanleySpace {
                i,
                j: j + 1,
                u,
                z: full.difference(l),
                l,
            });
        }
        blocks.push(Block {
            i,
            facet,
            a: sigmas.len(),
        });
    }
    Ok(StanleyDecomposition {
        complex: complex.clone(),
        k: order.k,
        blocks,
        spaces,
    })
}

/// Number of degree-`d` monomials whose support is a face.
pub fn hilbert_function(complex: &Complex, d: u32) -> u128 {
    if complex.is_void() {
        return 0;
    }
    if d == 0 {
        return 1;
    }
    complex
        .face_counts()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(s, &f)| f.wrapping_mul(binomial(d as u64 - 1, s as u64 - 1)))
        .fold(0u128, u128::wrapping_add)
}

/// Monomials of degree `d` with support exactly `face`.
pub fn monomials_with_support(face: Face, d: u32) -> Vec<Monomial> {
    fn fill(vars: &[usize], left: u32, acc: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
        match vars {
            [] => {}
            [last] => {
                acc.push((*last, left));
                out.push(Monomial::from_exponents(acc.iter().copied()));
                acc.pop();
            }
            [v, rest @ ..] => {
                for e in 1..=left.saturating_sub(rest.len() as u32) {
                    acc.push((*v, e));
                    fill(rest, left - e, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let vars = face.indices();
    if vars.is_empty() {
        return if d == 0 { vec![Monomial::one()] } else { Vec::new() };
    }
    if (d as usize) < vars.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    fill(&vars, d, &mut Vec::new(), &mut out);
    out
}

impl StanleySpace {
    pub fn contains(&self, m: &Monomial) -> bool {
        m.quotient(&self.u)
            .is_some_and(|q| q.support().is_subset(self.z))
    }

    /// Monomials of degree `d` in `u·K[Z]`.
    pub fn count_in_degree(&self, d: u32) -> u128 {
        let base = self.u.degree();
        if d < base {
            return 0;
        }
        let e = (d - base) as u64;
        let z = self.z.len() as u64;
        if z == 0 {
            return u128::from(e == 0);
        }
        binomial(e + z - 1, z - 1)
    }
}

/// Whether the spaces partition the standard monomials of every degree up to
/// `max_degree`.
pub fn verify_partition(decomposition: &StanleyDecomposition, complex: &Complex, max_degree: u32) -> bool {
    let faces = complex.faces();
    (0..=max_degree).into_par_iter().all(|d| {
        let counted: u128 = decomposition
            .spaces
            .iter()
            .map(|s| s.count_in_degree(d))
            .fold(0u128, u128::wrapping_add);
        if counted != hilbert_function(complex, d) {
            return false;
        }
        faces.iter().all(|&f| {
            monomials_with_support(f, d)
                .iter()
                .all(|m| decomposition.spaces.iter().filter(|s| s.contains(m)).count() == 1)
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormRow {
    pub i: usize,
    pub a: usize,
    /// `|G_i| = |F_i| / k`, absent when `k` does not divide `|F_i|`.
    pub g: Option<usize>,
    pub observed: usize,
    pub expected: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SdepthReport {
    pub min_z: usize,
    pub target: usize,
    pub pass: bool,
    pub closed_form: Vec<ClosedFormRow>,
    pub closed_form_ok: bool,
}

/// Compare the smallest `|Z|` against `target`, and re-derive
/// `|Z_{i,k^{a_i}}| = (k-1)(|G_i| - a_i) + |G_i|` for the last space of each facet.
pub fn sdepth_bound_check(decomposition: &StanleyDecomposition, target: usize) -> SdepthReport {
    let min_z = decomposition
        .spaces
        .iter()
        .map(|s| s.z.len())
        .min()
        .unwrap_or(0);
    let k = decomposition.k;
    let closed_form: Vec<ClosedFormRow> = decomposition
        .blocks
        .iter()
        .map(|b| {
            let observed = decomposition
                .spaces
                .iter()
                .rev()
                .find(|s| s.i == b.i)
                .map(|s| s.z.len())
                .unwrap_or(0);
            let size = b.facet.len();
            let g = (size % k == 0).then_some(size / k);
            let expected = g.and_then(|g| g.checked_sub(b.a).map(|d| (k - 1) * d + g));
            ClosedFormRow {
                i: b.i,
                a: b.a,
                g,
                observed,
                expected,
            }
        })
        .collect();
    let closed_form_ok = closed_form.iter().all(|row| row.expected == Some(row.observed));
    SdepthReport {
        min_z,
        target,
        pass: min_z >= target,
        closed_form,
        closed_form_ok,
    }
}
