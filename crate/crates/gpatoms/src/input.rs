//! The JSON input format and its conversion into core types.
//!
//! Numbers may be written as strings (`"3/10"`, `"0.25"`, `"2"`) or as JSON
//! numbers. In exact mode a JSON number is read through its decimal text,
//! so `0.1` means `1/10`; in float mode everything becomes an `f64`.

use std::path::Path;

use gpatoms_core::atoms::{Summand, VertexAlgebraSpec};
use gpatoms_core::graph::Graph;
use gpatoms_core::scalar::{parse_rational, rational_to_f64, Rational};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GraphInput {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged, expecting = "a number, or a string such as \"3/10\" or \"0.25\"")]
pub enum NumberInput {
    Text(String),
    Number(serde_json::Number),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SummandInput {
    pub weight: NumberInput,
    #[serde(default)]
    pub eigenvalues: Option<Vec<NumberInput>>,
    #[serde(default)]
    pub infinite: bool,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraInput {
    #[serde(default)]
    pub summands: Vec<SummandInput>,
    #[serde(default)]
    pub diffuse: bool,
}

/// One input document. Each command reads the fields it needs.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Input {
    pub graph: GraphInput,
    #[serde(default)]
    pub algebras: Option<IndexMap<String, AlgebraInput>>,
    /// State values `phi_v(p_v)` of one projection per vertex.
    #[serde(default)]
    pub projections: Option<IndexMap<String, NumberInput>>,
    /// A point of `[0,1]^V`.
    #[serde(default)]
    pub x: Option<IndexMap<String, NumberInput>>,
    /// One ray direction.
    #[serde(default)]
    pub u: Option<IndexMap<String, NumberInput>>,
    /// Several ray directions, for sweeps.
    #[serde(default)]
    pub directions: Option<Vec<IndexMap<String, NumberInput>>>,
}

pub fn read_input(path: &Path) -> Result<Input, CliError> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    parse_input(&text)
}

pub fn parse_input(text: &str) -> Result<Input, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::Json {
            path: if path.is_empty() { ".".into() } else { path },
            message: e.into_inner().to_string(),
        }
    })
}

impl GraphInput {
    pub fn build(&self) -> Result<Graph, CliError> {
        for (i, [a, b]) in self.edges.iter().enumerate() {
            for v in [a, b] {
                if !self.vertices.contains(v) {
                    return Err(CliError::input(
                        format!("graph.edges[{i}]"),
                        format!("unknown vertex `{v}`"),
                    ));
                }
            }
        }
        Graph::new(&self.vertices, &self.edges).map_err(|e| CliError::input("graph", e.to_string()))
    }
}

/// Numbers in the arithmetic chosen on the command line.
pub trait FromInput: Sized {
    fn from_input(n: &NumberInput, path: &str) -> Result<Self, CliError>;
}

fn text_of(n: &NumberInput) -> String {
    match n {
        NumberInput::Text(s) => s.trim().to_string(),
        NumberInput::Number(x) => x.to_string(),
    }
}

impl FromInput for Rational {
    fn from_input(n: &NumberInput, path: &str) -> Result<Self, CliError> {
        parse_rational(&text_of(n)).map_err(|e| {
            CliError::input(path, format!("{e} (exact mode accepts p/q, integers and decimals)"))
        })
    }
}

impl FromInput for f64 {
    fn from_input(n: &NumberInput, path: &str) -> Result<Self, CliError> {
        let text = text_of(n);
        if let Ok(r) = parse_rational(&text) {
            return Ok(rational_to_f64(&r));
        }
        text.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| CliError::input(path, format!("`{text}` is not a number")))
    }
}

/// A vertex-keyed map in the graph's vertex order; every vertex must appear.
pub fn vertex_values<S: FromInput>(
    g: &Graph,
    map: &IndexMap<String, NumberInput>,
    field: &str,
) -> Result<Vec<S>, CliError> {
    let mut slots: Vec<Option<S>> = (0..g.len()).map(|_| None).collect();
    for (name, value) in map {
        let path = format!("{field}.{name}");
        let i = g
            .index_of(name)
            .ok_or_else(|| CliError::input(&path, format!("unknown vertex `{name}`")))?;
        slots[i] = Some(S::from_input(value, &path)?);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            s.ok_or_else(|| CliError::input(field, format!("missing value for vertex `{}`", g.name(i))))
        })
        .collect()
}

/// Per-vertex algebra data in vertex order.
pub fn algebra_specs<S: FromInput + gpatoms_core::Scalar>(
    g: &Graph,
    algebras: &IndexMap<String, AlgebraInput>,
) -> Result<Vec<VertexAlgebraSpec<S>>, CliError> {
    let mut slots: Vec<Option<VertexAlgebraSpec<S>>> = (0..g.len()).map(|_| None).collect();
    for (name, alg) in algebras {
        let base = format!("algebras.{name}");
        let i = g
            .index_of(name)
            .ok_or_else(|| CliError::input(&base, format!("unknown vertex `{name}`")))?;
        let summands = alg
            .summands
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let path = format!("{base}.summands[{k}]");
                let weight = S::from_input(&s.weight, &format!("{path}.weight"))?;
                match (&s.eigenvalues, s.infinite) {
                    (None, true) => Ok(Summand::infinite(weight)),
                    (Some(ev), false) => {
                        let ev = ev
                            .iter()
                            .enumerate()
                            .map(|(j, e)| S::from_input(e, &format!("{path}.eigenvalues[{j}]")))
                            .collect::<Result<Vec<S>, _>>()?;
                        Ok(Summand::finite(weight, ev))
                    }
                    (Some(_), true) => Err(CliError::input(path, "an infinite summand takes no eigenvalues")),
                    (None, false) => Err(CliError::input(path, "give eigenvalues or set \"infinite\": true")),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        slots[i] = Some(VertexAlgebraSpec::new(name.clone(), summands, alg.diffuse));
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            s.ok_or_else(|| CliError::input("algebras", format!("missing algebra for vertex `{}`", g.name(i))))
        })
        .collect()
}
