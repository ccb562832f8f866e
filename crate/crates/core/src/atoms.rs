//! Type I factor summands of a graph product.
//!
//! Every vertex algebra is described by its list of matrix summands (a
//! weight and the eigenvalues of the restricted state, or an infinite
//! flag) plus an optional diffuse remainder. Choosing one summand per
//! vertex either yields exactly one atom of the product or none; the
//! decision and the atom's data come from the clique polynomial evaluated
//! at `x_v = 1 - 1/s_v`, where `s_v = sum_j 1/(weight * eigenvalue_j)`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::clique::CliquePolynomialForm;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::region::in_region;
use crate::scalar::{Rational, Scalar};
use crate::words::truncated_weighted_sums;

/// Default cap on the number of summand selections `enumerate_atoms` visits.
pub const DEFAULT_SELECTION_CAP: u128 = 1_000_000;

/// One matrix summand of a vertex algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Summand<S> {
    /// Mass of the summand's central projection.
    pub weight: S,
    /// Eigenvalues of the normalized state on the summand; `None` for an
    /// infinite type I summand.
    pub eigenvalues: Option<Vec<S>>,
}

impl<S: Scalar> Summand<S> {
    pub fn finite(weight: S, eigenvalues: Vec<S>) -> Self {
        Summand {
            weight,
            eigenvalues: Some(eigenvalues),
        }
    }

    pub fn infinite(weight: S) -> Self {
        Summand {
            weight,
            eigenvalues: None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.eigenvalues.is_none()
    }

    /// Matrix size, `None` when infinite.
    pub fn dimension(&self) -> Option<usize> {
        self.eigenvalues.as_ref().map(Vec::len)
    }

    /// Masses `weight * eigenvalue_j` of the diagonal matrix units.
    pub fn unit_masses(&self) -> Option<Vec<S>> {
        let ev = self.eigenvalues.as_ref()?;
        Some(ev.iter().map(|l| self.weight.clone() * l.clone()).collect())
    }

    /// `s = sum_j 1/(weight * eigenvalue_j)`; `None` when infinite.
    pub fn s_value(&self) -> Option<S> {
        let masses = self.unit_masses()?;
        Some(
            masses
                .into_iter()
                .fold(S::zero(), |acc, t| acc + S::one() / t),
        )
    }

    fn validate(&self, vertex: &str, tol: S::Tol) -> Result<()> {
        let bad = |reason: &str| Error::InvalidSpec {
            vertex: vertex.into(),
            reason: reason.into(),
        };
        if !self.weight.is_positive_within(tol) || (self.weight.clone() - S::one()).sign(tol).is_gt() {
            return Err(bad("summand weight must lie in (0, 1]"));
        }
        if let Some(ev) = &self.eigenvalues {
            if ev.is_empty() {
                return Err(bad("finite summand needs at least one eigenvalue"));
            }
            if !ev.iter().all(|l| l.is_positive_within(tol)) {
                return Err(bad("eigenvalues must be strictly positive"));
            }
            let total = ev.iter().cloned().fold(S::zero(), |a, b| a + b);
            if !(total - S::one()).is_zero_within(tol) {
                return Err(bad("eigenvalues must sum to 1"));
            }
        }
        Ok(())
    }
}

/// The summand data of one vertex algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexAlgebraSpec<S> {
    pub vertex: String,
    pub summands: Vec<Summand<S>>,
    pub has_diffuse_part: bool,
}

impl<S: Scalar> VertexAlgebraSpec<S> {
    pub fn new(vertex: impl Into<String>, summands: Vec<Summand<S>>, has_diffuse_part: bool) -> Self {
        VertexAlgebraSpec {
            vertex: vertex.into(),
            summands,
            has_diffuse_part,
        }
    }

    /// Summand weights lie in `(0, 1]` and sum to at most one, with equality
    /// exactly when there is no diffuse part.
    pub fn validate(&self, tol: S::Tol) -> Result<()> {
        let bad = |reason: &str| Error::InvalidSpec {
            vertex: self.vertex.clone(),
            reason: reason.into(),
        };
        if self.summands.is_empty() && !self.has_diffuse_part {
            return Err(bad("algebra has neither summands nor a diffuse part"));
        }
        for s in &self.summands {
            s.validate(&self.vertex, tol)?;
        }
        let total = self
            .summands
            .iter()
            .fold(S::zero(), |acc, s| acc + s.weight.clone());
        match ((total - S::one()).sign(tol), self.has_diffuse_part) {
            (core::cmp::Ordering::Greater, _) => Err(bad("summand weights exceed 1")),
            (core::cmp::Ordering::Equal, true) => {
                Err(bad("summand weights sum to 1, leaving no room for a diffuse part"))
            }
            (core::cmp::Ordering::Less, false) => {
                Err(bad("summand weights sum to less than 1 without a diffuse part"))
            }
            _ => Ok(()),
        }
    }
}

/// Put `specs` into the vertex order of `g`, checking that every vertex has
/// exactly one spec.
pub fn order_specs<S: Scalar>(g: &Graph, specs: Vec<VertexAlgebraSpec<S>>) -> Result<Vec<VertexAlgebraSpec<S>>> {
    let mut slots: Vec<Option<VertexAlgebraSpec<S>>> = (0..g.len()).map(|_| None).collect();
    for spec in specs {
        let i = g
            .index_of(&spec.vertex)
            .ok_or_else(|| Error::UnknownVertex(spec.vertex.clone()))?;
        if slots[i].is_some() {
            return Err(Error::DuplicateVertex(spec.vertex));
        }
        slots[i] = Some(spec);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| Error::MissingAssignment(g.name(i).into())))
        .collect()
}

/// One summand index per vertex, in vertex order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SummandSelection(pub Vec<usize>);

/// Result of meeting one projection from each vertex algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct MeetReport<S> {
    pub nonzero: bool,
    /// State of the meet; present iff `nonzero`.
    pub value: Option<S>,
}

/// State of the meet of projections `p_v` with the given state values,
/// in vertex order. The meet is nonzero iff `(1 - p_v)_v` lies in the region,
/// and then its state is `K_G((1 - p_v)_v)`.
pub fn projection_meet<S: Scalar>(g: &Graph, p: &[S], tol: S::Tol) -> Result<MeetReport<S>> {
    g.check_len(p)?;
    for (i, v) in p.iter().enumerate() {
        if !v.is_positive_within(tol) || (v.clone() - S::one()).sign(tol).is_gt() {
            return Err(Error::ProjectionOutOfRange(g.name(i).into()));
        }
    }
    let x: Vec<S> = p.iter().map(|v| S::one() - v.clone()).collect();
    let form = CliquePolynomialForm::new(g.clone());
    if in_region(&form, &x, tol)? {
        Ok(MeetReport {
            nonzero: true,
            value: Some(form.evaluate(&x)?),
        })
    } else {
        Ok(MeetReport {
            nonzero: false,
            value: None,
        })
    }
}

/// State of the meet of two free projections with states `a` and `b`:
/// `max(0, a + b - 1)`.
pub fn free_pair_meet(a: &Rational, b: &Rational) -> Rational {
    let v = a + b - Rational::from_integer(1.into());
    if v > Rational::from_integer(0.into()) {
        v
    } else {
        Rational::from_integer(0.into())
    }
}

/// A minimal projection of an atom: one diagonal index per finite vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct MinimalProjection<S> {
    /// Index into each finite vertex's eigenvalue list, in vertex order of
    /// the finite part.
    pub index: Vec<usize>,
    pub weight: S,
}

/// One type I factor summand of the graph product.
#[derive(Clone, Debug, PartialEq)]
pub struct AtomReport<S> {
    pub selection: SummandSelection,
    /// Vertices whose selected summand has dimension above one.
    pub support_clique: VertexSet,
    /// Vertices whose selected summand is infinite.
    pub infinite_part: VertexSet,
    pub weight: S,
    /// Set when the weight includes infinite summands, whose contribution is
    /// taken to be the product of their weights.
    pub derived_weight: bool,
    /// Selected dimension per vertex; `None` for infinite summands.
    pub dimensions: Vec<Option<usize>>,
    /// Eigenvalues of the tensor product state on the finite support clique.
    pub density_eigenvalues: Vec<S>,
    /// Vertices of the finite part, in vertex order; the coordinates of each
    /// [`MinimalProjection::index`].
    pub finite_part: VertexSet,
    pub minimal_projection_weights: Vec<MinimalProjection<S>>,
}

fn check_specs<S: Scalar>(g: &Graph, specs: &[VertexAlgebraSpec<S>], tol: S::Tol) -> Result<()> {
    g.check_len(specs)?;
    for (i, spec) in specs.iter().enumerate() {
        if spec.vertex != g.name(i) {
            return Err(Error::InvalidSpec {
                vertex: spec.vertex.clone(),
                reason: alloc::format!("expected the spec of vertex `{}` in this position", g.name(i)),
            });
        }
        spec.validate(tol)?;
    }
    Ok(())
}

fn selected<'a, S>(
    g: &Graph,
    specs: &'a [VertexAlgebraSpec<S>],
    sel: &SummandSelection,
) -> Result<Vec<&'a Summand<S>>> {
    if sel.0.len() != g.len() {
        return Err(Error::InvalidSelection(alloc::format!(
            "{} indices for {} vertices",
            sel.0.len(),
            g.len()
        )));
    }
    specs
        .iter()
        .zip(&sel.0)
        .map(|(spec, &k)| {
            spec.summands.get(k).ok_or_else(|| {
                Error::InvalidSelection(alloc::format!(
                    "vertex `{}` has no summand {k}",
                    spec.vertex
                ))
            })
        })
        .collect()
}

/// Decide whether the chosen summands produce an atom and, if so, describe it.
///
/// `specs` must be in the vertex order of `g` (see [`order_specs`]).
pub fn classify_selection<S: Scalar>(
    g: &Graph,
    specs: &[VertexAlgebraSpec<S>],
    sel: &SummandSelection,
    tol: S::Tol,
) -> Result<Option<AtomReport<S>>> {
    check_specs(g, specs, tol)?;
    classify_checked(g, specs, sel, tol)
}

fn classify_checked<S: Scalar>(
    g: &Graph,
    specs: &[VertexAlgebraSpec<S>],
    sel: &SummandSelection,
    tol: S::Tol,
) -> Result<Option<AtomReport<S>>> {
    let chosen = selected(g, specs, sel)?;
    let all = g.all();

    // Infinite summands must sit on vertices adjacent to everything else.
    let infinite_part: VertexSet = (0..g.len()).filter(|&v| chosen[v].is_infinite()).collect();
    if infinite_part
        .iter()
        .any(|v| g.neighbors(v) != all.without(v))
    {
        return Ok(None);
    }

    let finite_part = all.difference(infinite_part);
    let support_clique: VertexSet = finite_part
        .iter()
        .filter(|&v| chosen[v].dimension().is_some_and(|n| n > 1))
        .collect();
    if !g.is_clique(support_clique) {
        return Ok(None);
    }

    let sub = g.induced(finite_part);
    let form = CliquePolynomialForm::new(sub.clone());
    let fin: Vec<&Summand<S>> = finite_part.iter().map(|v| chosen[v]).collect();
    let s: Vec<S> = fin.iter().map(|m| m.s_value().expect("finite")).collect();
    let x: Vec<S> = s.iter().map(|sv| S::one() - S::one() / sv.clone()).collect();
    if !in_region(&form, &x, tol)? {
        return Ok(None);
    }

    let alpha_fin = fin.iter().fold(S::one(), |acc, m| acc * m.weight.clone());
    let clique_sum = form.cliques().iter().fold(S::zero(), |acc, c| {
        let members = c.members();
        let term = (0..sub.len()).fold(S::one(), |t, v| {
            if members.contains(v) {
                t * (S::one() - s[v].clone())
            } else {
                t * s[v].clone()
            }
        });
        acc + term
    });
    let alpha_inf = infinite_part
        .iter()
        .fold(S::one(), |acc, v| acc * chosen[v].weight.clone());
    let weight = alpha_fin * clique_sum * alpha_inf;

    // Minimal projections: prod_v t_{i(v)} * prod_v s_v * K(x).
    let scale = s.iter().cloned().fold(S::one(), |a, b| a * b) * form.evaluate(&x)?;
    let masses: Vec<Vec<S>> = fin.iter().map(|m| m.unit_masses().expect("finite")).collect();
    let minimal_projection_weights = multi_indices(&masses.iter().map(Vec::len).collect::<Vec<_>>())
        .into_iter()
        .map(|index| {
            let w = index
                .iter()
                .zip(&masses)
                .fold(scale.clone(), |acc, (&i, t)| acc * t[i].clone());
            MinimalProjection { index, weight: w }
        })
        .collect();

    let clique_eigs: Vec<&Vec<S>> = support_clique
        .iter()
        .map(|v| chosen[v].eigenvalues.as_ref().expect("finite"))
        .collect();
    let density_eigenvalues = multi_indices(&clique_eigs.iter().map(|e| e.len()).collect::<Vec<_>>())
        .into_iter()
        .map(|index| {
            index
                .iter()
                .zip(&clique_eigs)
                .fold(S::one(), |acc, (&i, e)| acc * e[i].clone())
        })
        .collect();

    Ok(Some(AtomReport {
        selection: sel.clone(),
        support_clique,
        infinite_part,
        weight,
        derived_weight: !infinite_part.is_empty(),
        dimensions: chosen.iter().map(|m| m.dimension()).collect(),
        density_eigenvalues,
        finite_part,
        minimal_projection_weights,
    }))
}

/// All index tuples `0 <= i_k < sizes[k]`, lexicographically.
fn multi_indices(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new()];
    for &n in sizes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..n).map(move |i| {
                    let mut p = prefix.clone();
                    p.push(i);
                    p
                })
            })
            .collect();
    }
    out
}

/// Every atom of the graph product, ordered by selection.
#[derive(Clone, Debug, PartialEq)]
pub struct AtomEnumeration<S> {
    pub atoms: Vec<AtomReport<S>>,
    /// Sum of the atom weights.
    pub total_mass: S,
    pub selections_examined: u128,
}

/// Classify every selection of one summand per vertex. Refuses when the
/// number of selections exceeds `cap`.
pub fn enumerate_atoms<S: Scalar>(
    g: &Graph,
    specs: &[VertexAlgebraSpec<S>],
    tol: S::Tol,
    cap: u128,
) -> Result<AtomEnumeration<S>> {
    check_specs(g, specs, tol)?;
    let sizes: Vec<usize> = specs.iter().map(|s| s.summands.len()).collect();
    let count = sizes
        .iter()
        .try_fold(1u128, |acc, &n| acc.checked_mul(n as u128))
        .unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::CapExceeded {
            what: "summand selections",
            count,
            cap,
        });
    }
    let mut atoms = Vec::new();
    let mut total_mass = S::zero();
    if count > 0 {
        let mut index = alloc::vec![0usize; sizes.len()];
        loop {
            let sel = SummandSelection(index.clone());
            if let Some(atom) = classify_checked(g, specs, &sel, tol)? {
                total_mass = total_mass + atom.weight.clone();
                atoms.push(atom);
            }
            // Advance the mixed-radix counter, last vertex fastest.
            let mut k = sizes.len();
            loop {
                if k == 0 {
                    return Ok(AtomEnumeration {
                        atoms,
                        total_mass,
                        selections_examined: count,
                    });
                }
                k -= 1;
                index[k] += 1;
                if index[k] < sizes[k] {
                    break;
                }
                index[k] = 0;
            }
        }
    }
    Ok(AtomEnumeration {
        atoms,
        total_mass,
        selections_examined: 0,
    })
}

/// Partial sums of `sum_{reduced classes w} prod_k (s_{w_k} - 1)` over the
/// finite part of a selection, and the limit `1 / K((1 - 1/s_v)_v)` they
/// approach when the selection yields an atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCrosscheck {
    /// Cumulative sums through lengths `0..=L`.
    pub partial_sums: Vec<Rational>,
    /// `None` when the clique polynomial vanishes at the point.
    pub closed_form: Option<Rational>,
}

impl SeriesCrosscheck {
    pub fn partial_sum(&self) -> &Rational {
        self.partial_sums.last().expect("at least the empty word")
    }
}

/// Independent check of an atom's weight through the word series.
pub fn truncated_series_crosscheck(
    g: &Graph,
    specs: &[VertexAlgebraSpec<Rational>],
    sel: &SummandSelection,
    max_len: usize,
) -> Result<SeriesCrosscheck> {
    check_specs(g, specs, ())?;
    let chosen = selected(g, specs, sel)?;
    let finite_part: VertexSet = (0..g.len()).filter(|&v| !chosen[v].is_infinite()).collect();
    let sub = g.induced(finite_part);
    let s: Vec<Rational> = finite_part
        .iter()
        .map(|v| chosen[v].s_value().expect("finite"))
        .collect();
    let one = Rational::from_integer(1.into());
    let y: Vec<Rational> = s.iter().map(|sv| sv - &one).collect();
    let x: Vec<Rational> = s.iter().map(|sv| &one - sv.recip()).collect();
    let k = CliquePolynomialForm::new(sub.clone()).evaluate(&x)?;
    Ok(SeriesCrosscheck {
        partial_sums: truncated_weighted_sums(&sub, &y, max_len)?,
        closed_form: (k != Rational::from_integer(0.into())).then(|| k.recip()),
    })
}
