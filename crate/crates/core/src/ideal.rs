//! Monomials and minimally generated monomial ideals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{Face, Universe};
use crate::error::{Error, Result};

/// A monomial as a sparse exponent map; zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeMap<usize, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(index: usize) -> Self {
        Monomial::from_exponents([(index, 1)])
    }

    pub fn from_exponents<I: IntoIterator<Item = (usize, u32)>>(exponents: I) -> Self {
        let mut map = BTreeMap::new();
        for (i, e) in exponents {
            if e > 0 {
                *map.entry(i).or_insert(0) += e;
            }
        }
        Monomial(map)
    }

    /// The squarefree monomial with support `face`.
    pub fn from_face(face: Face) -> Self {
        Monomial(face.iter().map(|i| (i, 1)).collect())
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(&index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|(&i, &e)| (i, e))
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> Face {
        self.0.keys().copied().collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.values().all(|&e| e == 1)
    }

    pub fn max_variable(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(i, &e)| other.exponent(*i) >= e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (&i, &e) in &other.0 {
            *out.entry(i).or_insert(0) += e;
        }
        Monomial(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (&i, &e) in &other.0 {
            let slot = out.entry(i).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial(out)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|(&i, &e)| {
                    let m = e.min(other.exponent(i));
                    (m > 0).then_some((i, m))
                })
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0
                .iter()
                .filter_map(|(&i, &e)| {
                    let r = e - other.exponent(i);
                    (r > 0).then_some((i, r))
                })
                .collect(),
        ))
    }

    /// Lexicographic order with variable 0 largest; `Greater` means `self`
    /// comes first in a descending lex listing.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        let mut a = self.0.iter().peekable();
        let mut b = other.0.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((ia, ea)), Some((ib, eb))) => {
                    if ia != ib {
                        // The side with the smaller variable index has a positive
                        // exponent where the other has zero.
                        return if ia < ib { Ordering::Greater } else { Ordering::Less };
                    }
                    if ea != eb {
                        return ea.cmp(eb);
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }

    /// `x1^2 x2` style rendering; `1` for the unit monomial.
    pub fn format(&self, variables: &Universe) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|(&i, &e)| {
                if e == 1 {
                    variables.label(i).to_string()
                } else {
                    format!("{}^{e}", variables.label(i))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(i, e)| if *e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Sort descending in lex order (variable 0 largest).
pub fn sort_lex_descending(monomials: &mut [Monomial]) {
    monomials.sort_by(|a, b| b.cmp_lex(a));
}

/// Drop repeats and monomials divisible by another member.
pub fn minimalize(monomials: Vec<Monomial>) -> Vec<Monomial> {
    let mut sorted = monomials;
    sorted.sort_by_key(|m| m.degree());
    let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for m in sorted {
        if !kept.iter().any(|g| g.divides(&m)) {
            kept.push(m);
        }
    }
    sort_lex_descending(&mut kept);
    kept
}

/// A monomial ideal over a named variable list, stored by its minimal
/// generators in descending lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    variables: Universe,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(variables: Universe, generators: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = generators
            .iter()
            .find(|m| m.max_variable().is_some_and(|v| v >= variables.len()))
        {
            return Err(Error::domain(format!(
                "generator {bad:?} uses a variable outside the {} declared",
                variables.len()
            )));
        }
        Ok(MonomialIdeal {
            variables,
            generators: minimalize(generators),
        })
    }

    pub fn zero(variables: Universe) -> Self {
        MonomialIdeal {
            variables,
            generators: Vec::new(),
        }
    }

    pub fn unit(variables: Universe) -> Self {
        MonomialIdeal {
            variables,
            generators: vec![Monomial::one()],
        }
    }

    /// The prime `P_F = (x_i : i ∈ F)`.
    pub fn prime(variables: Universe, face: Face) -> Self {
        let mut generators: Vec<Monomial> = face.iter().map(Monomial::var).collect();
        sort_lex_descending(&mut generators);
        MonomialIdeal {
            variables,
            generators,
        }
    }

    pub fn variables(&self) -> &Universe {
        &self.variables
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.variables != other.variables {
            return Err(Error::domain("ideals live in different polynomial rings"));
        }
        Ok(())
    }

    fn with_generators(&self, generators: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal {
            variables: self.variables.clone(),
            generators: minimalize(generators),
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        Ok(self.with_generators(gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul(b));
            }
        }
        Ok(self.with_generators(gens))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm(b));
            }
        }
        Ok(self.with_generators(gens))
    }

    /// `(I : m)`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .map(|g| g.quotient(&g.gcd(m)).expect("gcd divides"))
            .collect();
        self.with_generators(gens)
    }

    /// Generators rendered with variable labels.
    pub fn formatted_generators(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.format(&self.variables)).collect()
    }
}
