//! Text and JSON formats for complexes, monomial ideals and graphs.
//!
//! Text formats are line based: `#` starts a comment line and blank lines are
//! skipped. An optional first line `vertices: a b c` (or `variables:` for
//! ideals) fixes the label order; otherwise labels are numbered in order of
//! first appearance. Writers always emit the declaration line, so writing,
//! parsing and writing again reproduces the same bytes.

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Face, Universe};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{Monomial, MonomialIdeal};

/// Spelling of the empty face in the complex text format.
pub const EMPTY_FACE: &str = "{}";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn looks_like_json(text: &str) -> bool {
    let first = content_lines(text).next().map(|(_, l)| l).unwrap_or("");
    first.starts_with('{') && first != EMPTY_FACE
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line(), format!("invalid JSON: {e}"))
}

/// Collects labels, either from a declaration line or by first appearance.
struct Labels {
    declared: bool,
    names: Vec<String>,
}

impl Labels {
    fn from_header<'a>(lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, &'a str)>>, key: &str) -> Result<Self> {
        if let Some(&(line, text)) = lines.peek() {
            if let Some(rest) = text.strip_prefix(key) {
                lines.next();
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                Universe::new(names.iter().cloned()).map_err(|e| Error::parse(line, e.to_string()))?;
                return Ok(Labels { declared: true, names });
            }
        }
        Ok(Labels {
            declared: false,
            names: Vec::new(),
        })
    }

    fn index(&mut self, line: usize, label: &str) -> Result<usize> {
        if let Some(i) = self.names.iter().position(|n| n == label) {
            return Ok(i);
        }
        if self.declared {
            return Err(Error::parse(line, format!("label `{label}` is not declared")));
        }
        crate::complex::check_label(label).map_err(|e| Error::parse(line, e.to_string()))?;
        self.names.push(label.to_string());
        Ok(self.names.len() - 1)
    }

    fn universe(self) -> Result<Universe> {
        Universe::new(self.names)
    }
}

pub fn parse_complex(text: &str) -> Result<Complex> {
    if looks_like_json(text) {
        let data: ComplexJson = serde_json::from_str(text).map_err(json_error)?;
        return complex_from_json(&data);
    }
    let mut lines = content_lines(text).peekable();
    let mut labels = Labels::from_header(&mut lines, "vertices:")?;
    let mut faces = Vec::new();
    for (line, body) in lines {
        let mut face = Face::EMPTY;
        if body != EMPTY_FACE {
            for label in body.split_whitespace() {
                let i = labels.index(line, label)?;
                if i >= crate::complex::MAX_VERTICES {
                    return Err(Error::parse(line, "more than 128 vertices"));
                }
                if face.contains(i) {
                    return Err(Error::parse(line, format!("label `{label}` repeated in a face")));
                }
                face.insert(i);
            }
        }
        faces.push(face);
    }
    Complex::from_faces(labels.universe()?, &faces)
}

pub fn complex_to_json(c: &Complex) -> ComplexJson {
    ComplexJson {
        vertices: c.universe().labels().map(str::to_string).collect(),
        facets: c.facet_labels(),
    }
}

pub fn complex_from_json(data: &ComplexJson) -> Result<Complex> {
    Complex::normalize_facets(&data.vertices, &data.facets)
}

pub fn write_complex(c: &Complex) -> String {
    let mut out = declaration("vertices:", c.universe());
    for &f in c.facets() {
        out.push_str(&face_text(c.universe(), f));
        out.push('\n');
    }
    out
}

pub fn face_text(universe: &Universe, f: Face) -> String {
    if f.is_empty() {
        EMPTY_FACE.to_string()
    } else {
        universe.face_labels(f).join(" ")
    }
}

fn declaration(key: &str, universe: &Universe) -> String {
    let mut out = key.to_string();
    for l in universe.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    out
}

fn parse_monomial(line: usize, text: &str, labels: &mut Labels) -> Result<Monomial> {
    if text == "1" {
        return Ok(Monomial::one());
    }
    let mut exps = Vec::new();
    for factor in text.split_whitespace() {
        let (name, exp) = match factor.split_once('^') {
            Some((name, e)) => {
                let e: u32 = e
                    .parse()
                    .map_err(|_| Error::parse(line, format!("bad exponent in `{factor}`")))?;
                if e == 0 {
                    return Err(Error::parse(line, format!("zero exponent in `{factor}`")));
                }
                (name, e)
            }
            None => (factor, 1),
        };
        exps.push((labels.index(line, name)?, exp));
    }
    Ok(Monomial::from_exponents(exps))
}

/// Parse a monomial such as `x1^2 x3` against fixed variables.
pub fn parse_monomial_in(text: &str, variables: &Universe) -> Result<Monomial> {
    let mut labels = Labels {
        declared: true,
        names: variables.labels().map(str::to_string).collect(),
    };
    parse_monomial(0, text.trim(), &mut labels)
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    if looks_like_json(text) {
        let data: IdealJson = serde_json::from_str(text).map_err(json_error)?;
        return ideal_from_json(&data);
    }
    let mut lines = content_lines(text).peekable();
    let mut labels = Labels::from_header(&mut lines, "variables:")?;
    let mut gens = Vec::new();
    for (line, body) in lines {
        gens.push(parse_monomial(line, body, &mut labels)?);
    }
    MonomialIdeal::new(labels.universe()?, gens)
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> IdealJson {
    IdealJson {
        variables: ideal.variables().labels().map(str::to_string).collect(),
        generators: ideal.formatted_generators(),
    }
}

pub fn ideal_from_json(data: &IdealJson) -> Result<MonomialIdeal> {
    let variables = Universe::new(data.variables.iter().cloned())?;
    let gens = data
        .generators
        .iter()
        .map(|g| parse_monomial_in(g, &variables))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(variables, gens)
}

pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = declaration("variables:", ideal.variables());
    for g in ideal.formatted_generators() {
        out.push_str(&g);
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    if looks_like_json(text) {
        let data: GraphJson = serde_json::from_str(text).map_err(json_error)?;
        return graph_from_json(&data);
    }
    let mut lines = content_lines(text).peekable();
    let mut labels = Labels::from_header(&mut lines, "vertices:")?;
    let mut edges = Vec::new();
    for (line, body) in lines {
        let ends: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = ends[..] else {
            return Err(Error::parse(line, "an edge line needs exactly two vertices"));
        };
        if u == v {
            return Err(Error::parse(line, format!("loop at `{u}`")));
        }
        let pair = (labels.index(line, u)?, labels.index(line, v)?);
        if edges.iter().any(|&(a, b)| (a, b) == pair || (b, a) == pair) {
            return Err(Error::parse(line, format!("repeated edge {u} {v}")));
        }
        edges.push(pair);
    }
    Graph::new(labels.universe()?, &edges)
}

pub fn graph_to_json(g: &Graph) -> GraphJson {
    let u = g.vertices();
    GraphJson {
        vertices: u.labels().map(str::to_string).collect(),
        edges: g
            .edges()
            .into_iter()
            .map(|(a, b)| [u.label(a).to_string(), u.label(b).to_string()])
            .collect(),
    }
}

pub fn graph_from_json(data: &GraphJson) -> Result<Graph> {
    let edges: Vec<(String, String)> = data.edges.iter().map(|[a, b]| (a.clone(), b.clone())).collect();
    Graph::from_labels(&data.vertices, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = declaration("vertices:", g.vertices());
    for (a, b) in g.edges() {
        out.push_str(&format!("{} {}\n", g.vertices().label(a), g.vertices().label(b)));
    }
    out
}
