//! The region `R(G)` of points `x in [0,1]^V` at which every induced
//! subgraph's clique polynomial is strictly positive.
//!
//! Membership is decided along the segment from the origin: `x` belongs to
//! `R(G)` exactly when `a -> K_G(a x)` has no root in `(0, 1]`. The
//! exhaustive corner test is kept as an independent oracle.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::clique::{positive_support, CliquePolynomialForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::IsolationInterval;
use crate::scalar::{int, Rational, Scalar};

/// Default root-isolation precision exponent: intervals narrower than `2^-40`.
pub const DEFAULT_PRECISION_BITS: u32 = 40;

/// `2^-DEFAULT_PRECISION_BITS`.
pub fn default_precision() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << DEFAULT_PRECISION_BITS)
}

/// A graph and a point of `[0,1]^V`, validated on construction.
#[derive(Clone, Debug)]
pub struct RegionQuery {
    form: CliquePolynomialForm,
    x: Vec<Rational>,
}

impl RegionQuery {
    pub fn new(graph: Graph, x: Vec<Rational>) -> Result<Self> {
        Self::from_form(CliquePolynomialForm::new(graph), x)
    }

    pub fn from_form(form: CliquePolynomialForm, x: Vec<Rational>) -> Result<Self> {
        validate_unit_box(form.graph(), &x)?;
        Ok(RegionQuery { form, x })
    }

    pub fn form(&self) -> &CliquePolynomialForm {
        &self.form
    }

    pub fn point(&self) -> &[Rational] {
        &self.x
    }

    pub fn membership(&self) -> bool {
        ray_test(&self.form, &self.x)
    }

    pub fn membership_corner_oracle(&self) -> bool {
        corner_test(&self.form, &self.x, ())
    }
}

fn validate_unit_box(g: &Graph, x: &[Rational]) -> Result<()> {
    g.check_len(x)?;
    for (i, v) in x.iter().enumerate() {
        if v.is_negative() || *v > int(1) {
            return Err(Error::CoordinateOutOfRange(g.name(i).into()));
        }
    }
    Ok(())
}

/// Whether `x` lies in `R(G)`, by exact root counting on the ray polynomial.
pub fn membership(form: &CliquePolynomialForm, x: &[Rational]) -> Result<bool> {
    validate_unit_box(form.graph(), x)?;
    Ok(ray_test(form, x))
}

/// Whether `x` lies in `R(G)`, by checking `K_G > 0` on all `2^n` corners of
/// the box `prod_v [0, x_v]`.
pub fn membership_corner_oracle(form: &CliquePolynomialForm, x: &[Rational]) -> Result<bool> {
    validate_unit_box(form.graph(), x)?;
    Ok(corner_test(form, x, ()))
}

/// Membership for any scalar type: exact ray test when every coordinate is
/// rational, otherwise the corner test with tolerance `tol`.
pub fn in_region<S: Scalar>(form: &CliquePolynomialForm, x: &[S], tol: S::Tol) -> Result<bool> {
    let g = form.graph();
    g.check_len(x)?;
    let one = S::one();
    for (i, v) in x.iter().enumerate() {
        if v.sign(tol).is_lt() || (v.clone() - one.clone()).sign(tol).is_gt() {
            return Err(Error::CoordinateOutOfRange(g.name(i).into()));
        }
    }
    let exact: Option<Vec<Rational>> = x.iter().map(|v| v.as_rational().cloned()).collect();
    match exact {
        Some(xr) => Ok(ray_test(form, &xr)),
        None => Ok(corner_test(form, x, tol)),
    }
}

fn ray_test(form: &CliquePolynomialForm, x: &[Rational]) -> bool {
    let h = form.ray_polynomial(x).expect("length checked");
    // h(0) = 1, so no root in (0, 1] means h > 0 on all of [0, 1].
    h.count_roots(&int(0), &int(1))
        .expect("ray polynomial is never zero")
        == 0
}

fn corner_test<S: Scalar>(form: &CliquePolynomialForm, x: &[S], tol: S::Tol) -> bool {
    // A corner zeroes the coordinates outside some subset T; its value is the
    // clique polynomial of the subgraph induced by T.
    let support: VertexSet = x
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero_within(tol))
        .map(|(i, _)| i)
        .collect();
    support
        .subsets()
        .all(|t| form.evaluate_on(t, x).is_positive_within(tol))
}

/// Radial boundary distance along a nonnegative direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rho {
    /// Isolating interval for the smallest positive root of `r -> K_G(r u)`.
    Root(IsolationInterval),
    /// No root up to the first `r` at which some coordinate `r u_v` reaches 1.
    CappedAtBox(Rational),
}

impl Rho {
    /// A rational within the reported precision of the boundary radius.
    pub fn estimate(&self) -> Rational {
        match self {
            Rho::Root(iv) => iv.midpoint(),
            Rho::CappedAtBox(c) => c.clone(),
        }
    }
}

/// Smallest positive `r` with `K_G(r u) = 0`, searched up to the box cap
/// `min_v 1/u_v`.
///
/// `u` need not be normalized; the radius is in units of `u`.
pub fn rho(form: &CliquePolynomialForm, u: &[Rational], precision: &Rational) -> Result<Rho> {
    let g = form.graph();
    g.check_len(u)?;
    let support = positive_support(g, u)?;
    if support.is_empty() {
        return Err(Error::ZeroDirection);
    }
    let cap = support
        .iter()
        .map(|v| u[v].recip())
        .min()
        .expect("support is nonempty");
    let h = form.ray_polynomial(u)?;
    Ok(match h.smallest_positive_root(&cap, precision)? {
        Some(iv) => Rho::Root(iv),
        None => Rho::CappedAtBox(cap),
    })
}

/// Classification of a point with respect to the boundary of `R(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryClassification {
    /// `K_G(x) = 0` and `a x` lies in `R(G)` for every `a in [0, 1)`.
    pub on_boundary: bool,
    /// All partial derivatives, present when `on_boundary`.
    pub gradient: Option<Vec<Rational>>,
    pub gradient_vanishes: bool,
    /// A join split `G_+ = G_0 + G_1` of the positive support with both
    /// factors vanishing; present exactly when the gradient vanishes.
    pub witness_split: Option<(VertexSet, VertexSet)>,
}

/// Decide whether `x` is a boundary point of `R(G)` and whether the gradient
/// of `K_G` vanishes there.
pub fn classify_boundary_point(
    form: &CliquePolynomialForm,
    x: &[Rational],
) -> Result<BoundaryClassification> {
    let g = form.graph();
    g.check_len(x)?;
    let support = positive_support(g, x)?;
    let not_boundary = BoundaryClassification {
        on_boundary: false,
        gradient: None,
        gradient_vanishes: false,
        witness_split: None,
    };
    if !form.evaluate(x)?.is_zero() {
        return Ok(not_boundary);
    }
    // h(1) = 0; x is on the boundary iff 1 is the smallest positive root.
    let h = form.ray_polynomial(x)?;
    if h.count_roots(&int(0), &int(1))? != 1 {
        return Ok(not_boundary);
    }

    let gradient = form.gradient(x)?;
    let gradient_vanishes = gradient.iter().all(Zero::is_zero);
    let witness_split = if gradient_vanishes {
        Some(find_vanishing_split(form, support, x).ok_or(Error::MissingWitness)?)
    } else {
        None
    };
    Ok(BoundaryClassification {
        on_boundary: true,
        gradient: Some(gradient),
        gradient_vanishes,
        witness_split,
    })
}

/// Search the join splits of the subgraph induced by `support` for one whose
/// two sides both vanish at `x`. Single vanishing factors are tried first.
fn find_vanishing_split(
    form: &CliquePolynomialForm,
    support: VertexSet,
    x: &[Rational],
) -> Option<(VertexSet, VertexSet)> {
    let factors = form.graph().join_factor_sets_within(support);
    let k = factors.len();
    if !(2..=20).contains(&k) {
        return None;
    }
    let vanishes = |s: VertexSet| form.evaluate_on(s, x).is_zero();
    let union_of = |mask: u32| {
        factors
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .fold(VertexSet::EMPTY, |acc, (_, f)| acc.union(*f))
    };
    let mut masks: Vec<u32> = (1..(1u32 << k) - 1).collect();
    masks.sort_by_key(|m| m.count_ones());
    masks.into_iter().find_map(|m| {
        let g0 = union_of(m);
        let g1 = support.difference(g0);
        (vanishes(g0) && vanishes(g1)).then_some((g0, g1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use alloc::vec;

    fn path() -> CliquePolynomialForm {
        CliquePolynomialForm::new(Graph::path(["a", "b", "c"]))
    }

    #[test]
    fn membership_examples() {
        let p = path();
        for (x, want) in [
            (vec![rat(1, 3); 3], true),
            (vec![rat(1, 2); 3], false),
            (vec![int(0); 3], true),
        ] {
            assert_eq!(membership(&p, &x).unwrap(), want);
            assert_eq!(membership_corner_oracle(&p, &x).unwrap(), want);
        }
        assert_eq!(
            membership(&p, &[int(0), int(2), int(0)]),
            Err(Error::CoordinateOutOfRange("b".into()))
        );
    }

    #[test]
    fn single_vertex_corner_oracle() {
        let k1 = CliquePolynomialForm::new(Graph::edgeless(["v"]));
        assert!(!membership_corner_oracle(&k1, &[int(1)]).unwrap());
        assert!(membership_corner_oracle(&k1, &[rat(9, 10)]).unwrap());
        assert!(!membership(&k1, &[int(1)]).unwrap());
    }

    #[test]
    fn rho_examples() {
        let prec = default_precision();
        let e = CliquePolynomialForm::new(Graph::edgeless(["a", "b"]));
        match rho(&e, &[int(1), int(1)], &prec).unwrap() {
            Rho::Root(iv) => assert!(iv.contains(&rat(1, 2))),
            other => panic!("{other:?}"),
        }
        let k3 = CliquePolynomialForm::new(Graph::complete(["a", "b", "c"]));
        match rho(&k3, &vec![int(1); 3], &prec).unwrap() {
            Rho::Root(iv) => assert!(iv.contains(&int(1))),
            other => panic!("{other:?}"),
        }
        match rho(&path(), &vec![int(1); 3], &prec).unwrap() {
            Rho::Root(iv) => {
                assert!(iv.contains(&rat(1, 2)));
                assert!(iv.width() <= prec);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(rho(&path(), &vec![int(0); 3], &prec), Err(Error::ZeroDirection));
    }

    #[test]
    fn boundary_examples() {
        let p = path();
        let c = classify_boundary_point(&p, &vec![rat(1, 2); 3]).unwrap();
        assert!(c.on_boundary);
        assert!(!c.gradient_vanishes);
        assert_eq!(c.gradient.unwrap()[0], rat(-1, 2));

        let k2 = CliquePolynomialForm::new(Graph::complete(["a", "b"]));
        let c = classify_boundary_point(&k2, &[int(1), int(1)]).unwrap();
        assert!(c.on_boundary && c.gradient_vanishes);
        assert_eq!(
            c.witness_split,
            Some((VertexSet::singleton(0), VertexSet::singleton(1)))
        );

        // Interior point.
        let c = classify_boundary_point(&p, &vec![rat(1, 3); 3]).unwrap();
        assert!(!c.on_boundary && c.witness_split.is_none());

        // K vanishes but the segment leaves the region earlier.
        let e = CliquePolynomialForm::new(Graph::edgeless(["a", "b"]));
        let c = classify_boundary_point(&e, &[int(1), int(0)]).unwrap();
        assert!(c.on_boundary);
        let k2_far = classify_boundary_point(&k2, &[int(1), rat(1, 2)]).unwrap();
        assert!(k2_far.on_boundary && !k2_far.gradient_vanishes);
    }

    #[test]
    fn four_cycle_has_vanishing_gradient() {
        let c4 = CliquePolynomialForm::new(Graph::from_index_edges(
            ["a", "b", "c", "d"],
            &[(0, 1), (1, 2), (2, 3), (3, 0)],
        ));
        // K(t,t,t,t) = 1 - 4t + 4t^2 = (1 - 2t)^2; double root at 1/2.
        let c = classify_boundary_point(&c4, &vec![rat(1, 2); 4]).unwrap();
        assert!(c.on_boundary);
        assert!(c.gradient_vanishes);
        let (g0, g1) = c.witness_split.unwrap();
        assert_eq!(g0.union(g1), VertexSet::full(4));
    }
}
