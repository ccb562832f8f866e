//! Report types written by the CLI. Every report serializes to JSON and
//! parses back into the same type; numbers are strings (`"3/10"` in exact
//! mode, 12 significant digits in float mode).

use gpatoms_core::graph::{Graph, VertexSet};
use gpatoms_core::scalar::Rational;
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

/// How a number is written in a report.
pub trait Emit {
    fn emit(&self) -> String;
}

impl Emit for Rational {
    fn emit(&self) -> String {
        self.to_string()
    }
}

impl Emit for f64 {
    fn emit(&self) -> String {
        let rounded: f64 = format!("{self:.11e}").parse().unwrap_or(*self);
        // Avoid "-0" for values that round to zero from below.
        if rounded == 0.0 {
            "0".into()
        } else {
            rounded.to_string()
        }
    }
}

pub fn names(g: &Graph, set: VertexSet) -> Vec<String> {
    set.iter().map(|v| g.name(v).to_string()).collect()
}

pub fn by_vertex<T: Clone>(g: &Graph, values: &[T]) -> IndexMap<String, T> {
    g.vertices().iter().cloned().zip(values.iter().cloned()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalProjectionOut {
    /// Diagonal index per finite vertex.
    pub index: IndexMap<String, usize>,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomOut {
    /// Chosen summand index per vertex.
    pub selection: IndexMap<String, usize>,
    pub support_clique: Vec<String>,
    pub infinite_part: Vec<String>,
    pub weight: String,
    pub derived_weight: bool,
    /// `null` for infinite summands.
    pub dimensions: IndexMap<String, Option<usize>>,
    pub density_eigenvalues: Vec<String>,
    pub minimal_projections: Vec<MinimalProjectionOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomsReport {
    pub approximate: bool,
    pub atoms: Vec<AtomOut>,
    pub total_mass: String,
    pub selections_examined: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeetOut {
    pub approximate: bool,
    pub nonzero: bool,
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionCheckReport {
    pub approximate: bool,
    pub x: IndexMap<String, String>,
    pub clique_value: String,
    pub in_region: bool,
    /// The 2^n corner test, run alongside the ray test in exact mode.
    pub corner_oracle: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RhoRow {
    pub direction: IndexMap<String, String>,
    /// `root` when the clique polynomial vanishes on the ray, `capped` when
    /// the ray leaves the unit box first.
    pub kind: String,
    pub lower: String,
    pub upper: String,
    pub estimate: String,
    pub decimal: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RhoReport {
    pub precision: String,
    pub rays: Vec<RhoRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub clique_value: String,
    pub on_boundary: bool,
    pub gradient: Option<IndexMap<String, String>>,
    pub gradient_vanishes: bool,
    pub witness_split: Option<[Vec<String>; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordsCountReport {
    pub max_len: usize,
    /// Coefficients of `1 / K_G(t / (1 + t))`.
    pub coefficients: Vec<u64>,
    /// Reduced classes counted by walking normal forms.
    pub enumerated: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordsEnumerateReport {
    pub len: usize,
    pub count: usize,
    pub classes: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordsVerifyReport {
    pub max_len: usize,
    pub holds: bool,
    pub reduced_counts: Vec<u64>,
    pub reduced_series: Vec<String>,
    pub all_counts: Vec<u64>,
    pub all_series: Vec<String>,
    /// Coefficients of the reduced series times `K_G(t / (1 + t))`.
    pub reduced_product: Vec<String>,
    /// Coefficients of the unreduced series times `K_G(t)`.
    pub all_product: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub sign: i8,
    pub vertices: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyReport {
    pub approximate: bool,
    pub polynomial: String,
    pub terms: Vec<Term>,
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinReport {
    pub approximate: bool,
    pub irreducible: bool,
    pub factors: Vec<Vec<String>>,
    pub value: Option<String>,
    pub factor_values: Option<Vec<String>>,
}

/// Any report the CLI can print.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Report {
    Atoms(AtomsReport),
    Meet(MeetOut),
    RegionCheck(RegionCheckReport),
    Rho(RhoReport),
    Classify(ClassifyReport),
    WordsCount(WordsCountReport),
    WordsEnumerate(WordsEnumerateReport),
    WordsVerify(WordsVerifyReport),
    Poly(PolyReport),
    Join(JoinReport),
}

/// Header and rows for table and CSV output.
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

fn joined(v: &[String]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.join(" ")
    }
}

fn opt(v: &Option<String>) -> String {
    v.clone().unwrap_or_else(|| "-".into())
}

fn kv(pairs: Vec<(&str, String)>) -> Table {
    Table {
        header: vec!["field".into(), "value".into()],
        rows: pairs.into_iter().map(|(k, v)| vec![k.into(), v]).collect(),
    }
}

impl Report {
    pub fn table(&self) -> Table {
        match self {
            Report::Atoms(r) => Table {
                header: ["selection", "support_clique", "infinite_part", "dimensions", "weight", "derived"]
                    .map(String::from)
                    .into(),
                rows: r
                    .atoms
                    .iter()
                    .map(|a| {
                        vec![
                            a.selection.values().map(|k| k.to_string()).collect::<Vec<_>>().join(" "),
                            joined(&a.support_clique),
                            joined(&a.infinite_part),
                            a.dimensions
                                .values()
                                .map(|d| d.map_or("inf".into(), |d| d.to_string()))
                                .collect::<Vec<_>>()
                                .join(" "),
                            a.weight.clone(),
                            a.derived_weight.to_string(),
                        ]
                    })
                    .chain([vec![
                        "total".into(),
                        String::new(),
                        String::new(),
                        String::new(),
                        r.total_mass.clone(),
                        String::new(),
                    ]])
                    .collect(),
            },
            Report::Meet(r) => kv(vec![("nonzero", r.nonzero.to_string()), ("value", opt(&r.value))]),
            Report::RegionCheck(r) => kv(vec![
                ("clique_value", r.clique_value.clone()),
                ("in_region", r.in_region.to_string()),
                ("corner_oracle", r.corner_oracle.map_or("-".into(), |b| b.to_string())),
            ]),
            Report::Rho(r) => {
                let names: Vec<String> = r.rays.first().map(|row| row.direction.keys().cloned().collect()).unwrap_or_default();
                let mut header: Vec<String> = names.iter().map(|n| format!("u_{n}")).collect();
                header.extend(["kind", "lower", "upper", "estimate", "decimal"].map(String::from));
                Table {
                    header,
                    rows: r
                        .rays
                        .iter()
                        .map(|row| {
                            let mut cells: Vec<String> = row.direction.values().cloned().collect();
                            cells.extend([
                                row.kind.clone(),
                                row.lower.clone(),
                                row.upper.clone(),
                                row.estimate.clone(),
                                row.decimal.to_string(),
                            ]);
                            cells
                        })
                        .collect(),
                }
            }
            Report::Classify(r) => kv(vec![
                ("clique_value", r.clique_value.clone()),
                ("on_boundary", r.on_boundary.to_string()),
                (
                    "gradient",
                    r.gradient.as_ref().map_or("-".into(), |g| {
                        g.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
                    }),
                ),
                ("gradient_vanishes", r.gradient_vanishes.to_string()),
                (
                    "witness_split",
                    r.witness_split
                        .as_ref()
                        .map_or("-".into(), |[a, b]| format!("{{{}}} + {{{}}}", a.join(","), b.join(","))),
                ),
            ]),
            Report::WordsCount(r) => Table {
                header: ["len", "coefficient", "enumerated"].map(String::from).into(),
                rows: r
                    .coefficients
                    .iter()
                    .zip(&r.enumerated)
                    .enumerate()
                    .map(|(l, (c, e))| vec![l.to_string(), c.to_string(), e.to_string()])
                    .collect(),
            },
            Report::WordsEnumerate(r) => Table {
                header: vec!["class".into()],
                rows: r.classes.iter().map(|w| vec![w.join(" ")]).collect(),
            },
            Report::WordsVerify(r) => Table {
                header: ["len", "reduced", "reduced_product", "all", "all_product"].map(String::from).into(),
                rows: (0..=r.max_len)
                    .map(|l| {
                        vec![
                            l.to_string(),
                            r.reduced_counts[l].to_string(),
                            r.reduced_product[l].clone(),
                            r.all_counts[l].to_string(),
                            r.all_product[l].clone(),
                        ]
                    })
                    .collect(),
            },
            Report::Poly(r) => Table {
                header: ["sign", "clique"].map(String::from).into(),
                rows: r
                    .terms
                    .iter()
                    .map(|t| vec![if t.sign > 0 { "+" } else { "-" }.into(), format!("{{{}}}", t.vertices.join(","))])
                    .collect(),
            },
            Report::Join(r) => Table {
                header: ["factor", "vertices", "value"].map(String::from).into(),
                rows: r
                    .factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| {
                        vec![
                            i.to_string(),
                            f.join(" "),
                            r.factor_values.as_ref().map_or("-".into(), |v| v[i].clone()),
                        ]
                    })
                    .collect(),
            },
        }
    }
}

impl Table {
    /// Left-aligned columns separated by two spaces.
    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = line(&self.header);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_keep_twelve_significant_digits() {
        assert_eq!(std::f64::consts::FRAC_1_SQRT_2.emit(), "0.707106781187");
        assert_eq!(0.5f64.emit(), "0.5");
        assert_eq!((-1e-300f64 * 1e-300).emit(), "0");
        assert_eq!(1234567.0f64.emit(), "1234567");
    }

    #[test]
    fn csv_quotes_cells_with_commas() {
        let t = Table {
            header: vec!["split".into()],
            rows: vec![vec!["{a,b}".into()]],
        };
        assert_eq!(t.to_csv().unwrap(), "split\n\"{a,b}\"\n");
    }
}
