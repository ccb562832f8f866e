//! The clique polynomial `K_G(x) = sum over cliques C of (-1)^|C| prod_{v in C} x_v`.
//!
//! The polynomial is kept implicitly as the clique list of its graph and
//! evaluated on demand. It is affine in every variable because no clique
//! repeats a vertex, which is what makes the derivative, ray and
//! zero-restriction identities below exact.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::graph::{Clique, Graph, VertexSet};
use crate::poly::UnivariatePolynomial;
use crate::scalar::{int, Rational, Scalar};

/// A graph together with its full clique list.
#[derive(Clone, Debug)]
pub struct CliquePolynomialForm {
    graph: Graph,
    cliques: Vec<Clique>,
}

impl CliquePolynomialForm {
    pub fn new(graph: Graph) -> Self {
        let cliques = graph.enumerate_cliques();
        CliquePolynomialForm { graph, cliques }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    /// `K_G(x)`, with `x` given in vertex order.
    pub fn evaluate<S: Scalar>(&self, x: &[S]) -> Result<S> {
        self.graph.check_len(x)?;
        Ok(self.evaluate_on(self.graph.all(), x))
    }

    /// `K_G(x)` with `x` keyed by vertex name.
    pub fn evaluate_named<K, S, I>(&self, x: I) -> Result<S>
    where
        I: IntoIterator<Item = (K, S)>,
        K: AsRef<str>,
        S: Scalar,
    {
        let x = self.graph.assignment(x)?;
        self.evaluate(&x)
    }

    /// `K_{G'}(x|_{G'})` for the subgraph `G'` induced by `set`: the sum runs
    /// over the cliques contained in `set`.
    pub fn evaluate_on<S: Scalar>(&self, set: VertexSet, x: &[S]) -> S {
        let mut acc = S::zero();
        for c in &self.cliques {
            let m = c.members();
            if !m.is_subset(set) {
                continue;
            }
            let term = monomial(m, x);
            if m.len() % 2 == 0 {
                acc = acc + term;
            } else {
                acc = acc - term;
            }
        }
        acc
    }

    /// `d K_G / d x_j` at `x`, computed as `-K_{S(j)}(x|_{S(j)})` where `S(j)`
    /// is the subgraph induced by the neighbours of `j`.
    pub fn partial_derivative<S: Scalar>(&self, j: usize, x: &[S]) -> Result<S> {
        self.graph.check_len(x)?;
        Ok(-self.evaluate_on(self.graph.neighbors(j), x))
    }

    /// [`Self::partial_derivative`] addressed by vertex name.
    pub fn partial_derivative_value<S: Scalar>(&self, j: &str, x: &[S]) -> Result<S> {
        let j = self
            .graph
            .index_of(j)
            .ok_or_else(|| Error::UnknownVertex(j.into()))?;
        self.partial_derivative(j, x)
    }

    pub fn gradient<S: Scalar>(&self, x: &[S]) -> Result<Vec<S>> {
        (0..self.graph.len())
            .map(|j| self.partial_derivative(j, x))
            .collect()
    }

    /// `h(a) = K_G(a x)`. The coefficient of `a^d` collects the cliques of
    /// size `d`, so `h(0) = 1` and the degree is at most the clique number.
    pub fn ray_polynomial(&self, x: &[Rational]) -> Result<UnivariatePolynomial> {
        self.graph.check_len(x)?;
        let top = self.cliques.iter().map(|c| c.len()).max().unwrap_or(0);
        let mut coeffs = alloc::vec![int(0); top + 1];
        for c in &self.cliques {
            let d = c.len();
            let term: Rational = monomial(c.members(), x);
            if d % 2 == 0 {
                coeffs[d] += term;
            } else {
                coeffs[d] -= term;
            }
        }
        Ok(UnivariatePolynomial::new(coeffs))
    }

    /// Drop the vertices where `x` vanishes. The clique polynomial of the
    /// remaining induced subgraph takes the same value at the restricted point.
    pub fn restrict_zeros(&self, x: &[Rational]) -> Result<(Graph, Vec<Rational>)> {
        self.graph.check_len(x)?;
        let support = positive_support(&self.graph, x)?;
        Ok((self.graph.induced(support), self.graph.restrict(support, x)))
    }

    /// Terms as `(sign, member names)` in clique order, for display.
    pub fn terms(&self) -> Vec<(i8, Vec<&str>)> {
        self.cliques
            .iter()
            .map(|c| {
                let sign = if c.len() % 2 == 0 { 1 } else { -1 };
                (sign, c.members().iter().map(|i| self.graph.name(i)).collect())
            })
            .collect()
    }
}

/// Positions where `x` is strictly positive; errors on a negative coordinate.
pub(crate) fn positive_support(g: &Graph, x: &[Rational]) -> Result<VertexSet> {
    let mut support = VertexSet::EMPTY;
    for (i, v) in x.iter().enumerate() {
        if v.is_negative() {
            return Err(Error::NegativeCoordinate(g.name(i).into()));
        }
        if v.is_positive() {
            support.insert(i);
        }
    }
    Ok(support)
}

fn monomial<S: Scalar>(members: VertexSet, x: &[S]) -> S {
    members
        .iter()
        .fold(S::one(), |acc, v| acc * x[v].clone())
}

/// Renders graded by degree, e.g. `1 − x_a − x_b + x_a·x_b`.
impl fmt::Display for CliquePolynomialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = self.terms();
        terms.sort_by_key(|(_, names)| names.len());
        for (k, (sign, names)) in terms.into_iter().enumerate() {
            if k > 0 {
                f.write_str(if sign > 0 { " + " } else { " \u{2212} " })?;
            }
            if names.is_empty() {
                f.write_str("1")?;
            } else {
                let vars: Vec<String> = names.iter().map(|n| alloc::format!("x_{n}")).collect();
                f.write_str(&vars.join("\u{b7}"))?;
            }
        }
        Ok(())
    }
}

/// Value of `K_G(x)` and of `K_{G_j}(x|_{G_j})` for each join-irreducible
/// factor `G_j`. The full value equals the product of the factor values.
pub fn join_factorization_check<S: Scalar>(g: &Graph, x: &[S]) -> Result<(S, Vec<S>)> {
    let form = CliquePolynomialForm::new(g.clone());
    let full = form.evaluate(x)?;
    let factors = g
        .join_factor_sets()
        .into_iter()
        .map(|set| {
            let sub = CliquePolynomialForm::new(g.induced(set));
            sub.evaluate(&g.restrict(set, x))
        })
        .collect::<Result<Vec<S>>>()?;
    Ok((full, factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use alloc::string::ToString;
    use alloc::vec;

    fn third() -> Vec<Rational> {
        vec![rat(1, 3); 3]
    }

    #[test]
    fn evaluate_examples() {
        let e = CliquePolynomialForm::new(Graph::edgeless(["a", "b", "c"]));
        let x = vec![rat(1, 5), rat(1, 7), rat(1, 11)];
        assert_eq!(
            e.evaluate(&x).unwrap(),
            int(1) - rat(1, 5) - rat(1, 7) - rat(1, 11)
        );

        let k = CliquePolynomialForm::new(Graph::complete(["a", "b"]));
        assert_eq!(k.evaluate(&[rat(1, 2), rat(1, 2)]).unwrap(), rat(1, 4));

        let p = CliquePolynomialForm::new(Graph::path(["a", "b", "c"]));
        assert_eq!(p.evaluate(&third()).unwrap(), rat(2, 9));
        assert_eq!(
            p.evaluate(&[rat(1, 3)]),
            Err(Error::AssignmentLength {
                expected: 3,
                got: 1
            })
        );
        assert_eq!(
            p.evaluate_named([("a", rat(1, 3)), ("b", rat(1, 3))]),
            Err(Error::MissingAssignment("c".into()))
        );
    }

    #[test]
    fn zero_point_gives_one() {
        let p = CliquePolynomialForm::new(Graph::path(["a", "b", "c", "d"]));
        assert_eq!(p.evaluate(&[int(0), int(0), int(0), int(0)]).unwrap(), int(1));
    }

    #[test]
    fn partial_derivative_examples() {
        let e = CliquePolynomialForm::new(Graph::edgeless(["a", "b"]));
        assert_eq!(
            e.partial_derivative_value("a", &[rat(3, 7), rat(2, 9)]).unwrap(),
            int(-1)
        );
        let p = CliquePolynomialForm::new(Graph::path(["a", "b", "c"]));
        assert_eq!(
            p.partial_derivative_value("b", &[rat(1, 3), rat(5, 8), rat(1, 3)])
                .unwrap(),
            rat(-1, 3)
        );
        assert!(p.partial_derivative_value("z", &third()).is_err());
    }

    #[test]
    fn restrict_zeros_examples() {
        let p = CliquePolynomialForm::new(Graph::path(["a", "b", "c"]));
        let x = vec![int(0), rat(1, 2), rat(1, 2)];
        let (g, y) = p.restrict_zeros(&x).unwrap();
        assert_eq!(g, Graph::path(["b", "c"]));
        assert_eq!(y, vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(
            CliquePolynomialForm::new(g).evaluate(&y).unwrap(),
            p.evaluate(&x).unwrap()
        );

        let (g, y) = p.restrict_zeros(&third()).unwrap();
        assert_eq!(g, *p.graph());
        assert_eq!(y, third());

        let (g, y) = p.restrict_zeros(&[int(0), int(0), int(0)]).unwrap();
        assert!(g.is_empty() && y.is_empty());
        assert_eq!(CliquePolynomialForm::new(g).evaluate(&y).unwrap(), int(1));

        assert_eq!(
            p.restrict_zeros(&[int(0), int(-1), int(0)]),
            Err(Error::NegativeCoordinate("b".into()))
        );
    }

    #[test]
    fn join_factorization_examples() {
        let (full, parts) =
            join_factorization_check(&Graph::complete(["a", "b"]), &[rat(1, 2), rat(1, 3)])
                .unwrap();
        assert_eq!(full, rat(1, 3));
        assert_eq!(parts, vec![rat(1, 2), rat(2, 3)]);

        // The path a-b-c is the join of {b} with the edgeless pair {a, c}.
        let p = Graph::path(["a", "b", "c"]);
        let (full, parts) = join_factorization_check(&p, &third()).unwrap();
        assert_eq!(parts, vec![rat(1, 3), rat(2, 3)]);
        assert_eq!(full, rat(2, 9));

        let p4 = Graph::path(["a", "b", "c", "d"]);
        let x4 = vec![rat(1, 3); 4];
        let (full, parts) = join_factorization_check(&p4, &x4).unwrap();
        assert_eq!(parts, vec![full]);

        let g = Graph::edgeless(["k"]).join(&p4).unwrap();
        let x = vec![rat(2, 7), rat(1, 5), rat(3, 11), rat(1, 13), rat(1, 4)];
        let (full, parts) = join_factorization_check(&g, &x).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(full, &parts[0] * &parts[1]);
    }

    #[test]
    fn ray_polynomial_examples() {
        let e = CliquePolynomialForm::new(Graph::edgeless(["a", "b"]));
        assert_eq!(
            e.ray_polynomial(&[rat(1, 2), rat(1, 2)]).unwrap(),
            UnivariatePolynomial::from_i64(&[1, -1])
        );
        let k = CliquePolynomialForm::new(Graph::complete(["a", "b"]));
        assert_eq!(
            k.ray_polynomial(&[int(1), int(1)]).unwrap(),
            UnivariatePolynomial::from_i64(&[1, -2, 1])
        );
        let p = CliquePolynomialForm::new(Graph::path(["a", "b", "c"]));
        assert_eq!(
            p.ray_polynomial(&[int(0), int(0), int(0)]).unwrap(),
            UnivariatePolynomial::from_i64(&[1])
        );
    }

    #[test]
    fn display_lists_terms_with_signs() {
        let k = CliquePolynomialForm::new(Graph::complete(["a", "b"]));
        assert_eq!(k.to_string(), "1 \u{2212} x_a \u{2212} x_b + x_a\u{b7}x_b");
    }
}
