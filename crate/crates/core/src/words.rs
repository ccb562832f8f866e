//! Words over the vertex alphabet modulo commutation of adjacent letters.
//!
//! Two consecutive letters may be swapped when they are adjacent in the
//! graph. Each equivalence class is represented by its lexicographically
//! least word in vertex order. Counting runs over these representatives
//! directly (a word is lex-least iff no letter could be moved left past a
//! commuting block of larger letters), so no class is ever stored twice.
//!
//! Weighted sums over long words go through the Cartier-Foata normal form
//! instead: a trace is a sequence of nonempty clique "steps", and the
//! admissible step transitions form a finite transfer matrix.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::scalar::{int, Rational, Scalar};
use crate::series::{t_over_one_plus_t, TruncatedSeries};

/// Default cap on the number of classes an enumeration may return.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// A word as a sequence of vertex positions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    /// Checks every letter against `g`.
    pub fn new(g: &Graph, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&v| v >= g.len()) {
            return Err(Error::UnknownVertex(alloc::format!("#{bad}")));
        }
        Ok(Word(letters))
    }

    pub fn from_names<I, S>(g: &Graph, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names
            .into_iter()
            .map(|n| {
                let n = n.as_ref();
                g.index_of(n).ok_or_else(|| Error::UnknownVertex(n.into()))
            })
            .collect::<Result<_>>()
            .map(Word)
    }

    /// Parse a word whose vertex names are single characters, e.g. `"abab"`.
    pub fn from_chars(g: &Graph, s: &str) -> Result<Self> {
        let mut buf = [0u8; 4];
        Self::from_names(g, s.chars().map(|c| String::from(&*c.encode_utf8(&mut buf))))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.0.iter().map(|&v| g.name(v)).collect()
    }

    /// Names concatenated without separators.
    pub fn display<'a>(&'a self, g: &'a Graph) -> impl fmt::Display + 'a {
        DisplayWord(self, g)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

struct DisplayWord<'a>(&'a Word, &'a Graph);

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0 .0.iter().try_for_each(|&v| f.write_str(self.1.name(v)))
    }
}

fn commute(g: &Graph, a: usize, b: usize) -> bool {
    a != b && g.adjacent(a, b)
}

/// True iff every two occurrences of a letter are separated by a different
/// letter that does not commute with it.
pub fn is_reduced(g: &Graph, w: &Word) -> Result<bool> {
    Word::new(g, w.0.clone())?;
    Ok((0..w.len()).all(|j| extension_is_reduced(g, &w.0[..j], w.0[j])))
}

/// Whether `prefix + c` keeps the reduced property, assuming `prefix` has it.
/// Only the nearest earlier non-commuting letter matters: if it is `c`
/// itself, the two occurrences can be brought together.
fn extension_is_reduced(g: &Graph, prefix: &[usize], c: usize) -> bool {
    prefix
        .iter()
        .rev()
        .find(|&&p| !commute(g, p, c))
        .is_none_or(|&p| p != c)
}

/// Whether `prefix + c` is lexicographically least in its class, assuming
/// `prefix` is: `c` must not be able to move left past a larger letter.
fn extension_is_normal(g: &Graph, prefix: &[usize], c: usize) -> bool {
    prefix
        .iter()
        .rev()
        .take_while(|&&p| commute(g, p, c))
        .all(|&p| p < c)
}

/// Lexicographically least word in the class of `w`.
///
/// Greedy: the first letter of any equivalent word is a letter whose first
/// occurrence commutes with everything before it; taking the smallest such
/// letter at each step gives the least word.
pub fn canonical_form(g: &Graph, w: &Word) -> Word {
    let mut rest = w.0.clone();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        let mut seen = VertexSet::EMPTY;
        for (i, &c) in rest.iter().enumerate() {
            if !seen.contains(c)
                && rest[..i].iter().all(|&p| commute(g, p, c))
                && best.is_none_or(|b| c < rest[b])
            {
                best = Some(i);
            }
            seen.insert(c);
        }
        let i = best.expect("the first letter always qualifies");
        out.push(rest.remove(i));
    }
    Word(out)
}

/// Lexicographically least word in the class of `w`, by breadth-first search
/// over all words reachable by admissible swaps.
pub fn canonical_form_bfs(g: &Graph, w: &Word) -> Word {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.0.clone());
    queue.push_back(w.0.clone());
    while let Some(cur) = queue.pop_front() {
        for i in 1..cur.len() {
            if commute(g, cur[i - 1], cur[i]) {
                let mut next = cur.clone();
                next.swap(i - 1, i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Word(seen.into_iter().next().expect("contains w"))
}

/// Every word of length `len` over the alphabet of `g`, in lexicographic order.
pub fn all_words(g: &Graph, len: usize) -> impl Iterator<Item = Word> {
    let n = g.len();
    let total = if n == 0 { usize::from(len == 0) } else { n.pow(len as u32) };
    (0..total).map(move |mut k| {
        let mut letters = alloc::vec![0; len];
        for slot in letters.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        Word(letters)
    })
}

/// Depth-first walk over the lex-least representatives, optionally restricted
/// to reduced words, calling `visit` at every node up to depth `max_len`.
fn walk_normal_forms<F>(g: &Graph, max_len: usize, reduced_only: bool, visit: &mut F)
where
    F: FnMut(&[usize]),
{
    fn go<F: FnMut(&[usize])>(
        g: &Graph,
        max_len: usize,
        reduced_only: bool,
        prefix: &mut Vec<usize>,
        visit: &mut F,
    ) {
        visit(prefix);
        if prefix.len() == max_len {
            return;
        }
        for c in 0..g.len() {
            if extension_is_normal(g, prefix, c)
                && (!reduced_only || extension_is_reduced(g, prefix, c))
            {
                prefix.push(c);
                go(g, max_len, reduced_only, prefix, visit);
                prefix.pop();
            }
        }
    }
    go(g, max_len, reduced_only, &mut Vec::new(), visit);
}

/// Number of classes of reduced words of each length `0..=max_len`, by
/// walking the representatives.
pub fn count_reduced_classes(g: &Graph, max_len: usize) -> Vec<u64> {
    count_classes(g, max_len, true)
}

/// Number of classes of all words of each length `0..=max_len`.
pub fn count_all_classes(g: &Graph, max_len: usize) -> Vec<u64> {
    count_classes(g, max_len, false)
}

fn count_classes(g: &Graph, max_len: usize, reduced_only: bool) -> Vec<u64> {
    let mut counts = alloc::vec![0u64; max_len + 1];
    walk_normal_forms(g, max_len, reduced_only, &mut |w| counts[w.len()] += 1);
    counts
}

/// Classes of all words of length `len`, counted by canonicalizing every one
/// of the `n^len` words. Slow; used to check the representative walk.
pub fn count_all_classes_by_canonicalization(g: &Graph, len: usize) -> usize {
    all_words(g, len)
        .map(|w| canonical_form(g, &w))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Representatives of all classes of reduced words of length `len`, in
/// lexicographic order. Refuses when the class count exceeds `cap`.
pub fn enumerate_reduced_classes(g: &Graph, len: usize, cap: u128) -> Result<Vec<Word>> {
    let expected = count_reduced_classes_series(g, len)
        .coeff(len)
        .to_integer()
        .to_u128()
        .unwrap_or(u128::MAX);
    if expected > cap {
        return Err(Error::CapExceeded {
            what: "reduced word classes",
            count: expected,
            cap,
        });
    }
    let mut out = Vec::new();
    walk_normal_forms(g, len, true, &mut |w| {
        if w.len() == len {
            out.push(Word(w.to_vec()));
        }
    });
    Ok(out)
}

/// `1 / K_G(x(t))` with every `x_v = t/(1+t)`, through order `order`: the
/// generating series of reduced classes by length.
pub fn count_reduced_classes_series(g: &Graph, order: usize) -> TruncatedSeries {
    clique_series(g, &t_over_one_plus_t(order), order)
        .reciprocal(order)
        .expect("constant term is one")
}

/// `1 / K_G(t, ..., t)` through order `order`: the generating series of all
/// classes by length.
pub fn count_all_classes_series(g: &Graph, order: usize) -> TruncatedSeries {
    clique_series(g, &TruncatedSeries::variable(order), order)
        .reciprocal(order)
        .expect("constant term is one")
}

/// `K_G` with every variable replaced by the series `x`. Cliques of size `k`
/// contribute `(-1)^k x^k`.
fn clique_series(g: &Graph, x: &TruncatedSeries, order: usize) -> TruncatedSeries {
    let mut by_size: Vec<i64> = Vec::new();
    for c in g.enumerate_cliques() {
        if by_size.len() <= c.len() {
            by_size.resize(c.len() + 1, 0);
        }
        by_size[c.len()] += if c.len() % 2 == 0 { 1 } else { -1 };
    }
    let outer = TruncatedSeries::from_i64(&by_size, order);
    outer.compose(x, order)
}

/// Cumulative sums `sum_{l <= k} sum_{w in W_l} x_{w_1} ... x_{w_l}` over
/// reduced classes, for `k = 0..=max_len`, via the Cartier-Foata transfer
/// matrix.
pub fn truncated_weighted_sums<S: Scalar>(g: &Graph, x: &[S], max_len: usize) -> Result<Vec<S>> {
    g.check_len(x)?;
    let per_length = foata_weighted_counts(g, x, max_len, true);
    Ok(cumulative(per_length))
}

/// Final entry of [`truncated_weighted_sums`].
pub fn truncated_weighted_sum<S: Scalar>(g: &Graph, x: &[S], max_len: usize) -> Result<S> {
    Ok(truncated_weighted_sums(g, x, max_len)?
        .pop()
        .expect("at least the empty word"))
}

/// [`truncated_weighted_sum`] computed by walking every reduced class.
pub fn truncated_weighted_sum_enumerated<S: Scalar>(
    g: &Graph,
    x: &[S],
    max_len: usize,
) -> Result<S> {
    g.check_len(x)?;
    let mut total = S::zero();
    // Prefix products along the current branch.
    let mut stack: Vec<S> = Vec::new();
    walk_normal_forms(g, max_len, true, &mut |w| {
        stack.truncate(w.len());
        let weight = match w.last() {
            None => S::one(),
            Some(&c) => stack.last().cloned().unwrap_or_else(S::one) * x[c].clone(),
        };
        total = total.clone() + weight.clone();
        stack.push(weight);
    });
    Ok(total)
}

/// Per-length weighted class sums through the Cartier-Foata transfer matrix.
///
/// States are the nonempty cliques (the last step). A step `F'` may follow
/// `F` when every letter of `F'` has a letter in `F` it does not commute
/// with; for reduced traces that letter must also be different from it.
pub fn foata_weighted_counts<S: Scalar>(
    g: &Graph,
    x: &[S],
    max_len: usize,
    reduced: bool,
) -> Vec<S> {
    let steps: Vec<VertexSet> = g
        .enumerate_cliques()
        .into_iter()
        .map(|c| c.members())
        .filter(|m| !m.is_empty())
        .collect();
    let weights: Vec<S> = steps
        .iter()
        .map(|m| m.iter().fold(S::one(), |acc, v| acc * x[v].clone()))
        .collect();
    let blockers: Vec<VertexSet> = (0..g.len())
        .map(|v| {
            let non_commuting = g.all().difference(g.neighbors(v));
            if reduced {
                non_commuting.without(v)
            } else {
                non_commuting
            }
        })
        .collect();
    let follows: Vec<Vec<usize>> = steps
        .iter()
        .map(|&f| {
            (0..steps.len())
                .filter(|&j| steps[j].iter().all(|v| !blockers[v].intersection(f).is_empty()))
                .collect()
        })
        .collect();

    let mut totals = alloc::vec![S::zero(); max_len + 1];
    totals[0] = S::one();
    // state[l][i]: weight of traces of length l whose last step is steps[i].
    let mut state: Vec<Vec<S>> = alloc::vec![alloc::vec![S::zero(); steps.len()]; max_len + 1];
    for (i, m) in steps.iter().enumerate() {
        if m.len() <= max_len {
            state[m.len()][i] = weights[i].clone();
        }
    }
    for l in 1..=max_len {
        for i in 0..steps.len() {
            let w = state[l][i].clone();
            totals[l] = totals[l].clone() + w.clone();
            for &j in &follows[i] {
                let nl = l + steps[j].len();
                if nl <= max_len {
                    state[nl][j] = state[nl][j].clone() + w.clone() * weights[j].clone();
                }
            }
        }
    }
    totals
}

fn cumulative<S: Scalar>(v: Vec<S>) -> Vec<S> {
    let mut acc = S::zero();
    v.into_iter()
        .map(|a| {
            acc = acc.clone() + a;
            acc.clone()
        })
        .collect()
}

/// Class counts and the matching series, for both the reduced and the
/// unreduced identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub max_len: usize,
    pub reduced_counts: Vec<u64>,
    pub reduced_series: Vec<Rational>,
    pub all_counts: Vec<u64>,
    pub all_series: Vec<Rational>,
    /// `K_G(t/(1+t), ...) * sum_l |W_l| t^l`, which should be `1`.
    pub reduced_product: Vec<Rational>,
    /// `K_G(t, ..., t) * sum_l (classes of length l) t^l`, which should be `1`.
    pub all_product: Vec<Rational>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        let is_one = |p: &[Rational]| {
            p.iter()
                .enumerate()
                .all(|(k, c)| *c == int(i64::from(k == 0)))
        };
        is_one(&self.reduced_product) && is_one(&self.all_product)
    }
}

/// Multiply the clique polynomial (under both substitutions) by the brute
/// class counts and compare with `1`, coefficient by coefficient.
pub fn cartier_foata_report(g: &Graph, max_len: usize) -> IdentityReport {
    let reduced_counts = count_reduced_classes(g, max_len);
    let all_counts = count_all_classes(g, max_len);
    let as_series = |c: &[u64]| {
        TruncatedSeries::new(c.iter().map(|&k| Rational::from_integer(k.into())).collect(), max_len)
    };
    let reduced_product = clique_series(g, &t_over_one_plus_t(max_len), max_len)
        .mul(&as_series(&reduced_counts))
        .coeffs()
        .to_vec();
    let all_product = clique_series(g, &TruncatedSeries::variable(max_len), max_len)
        .mul(&as_series(&all_counts))
        .coeffs()
        .to_vec();
    IdentityReport {
        max_len,
        reduced_series: count_reduced_classes_series(g, max_len).coeffs().to_vec(),
        all_series: count_all_classes_series(g, max_len).coeffs().to_vec(),
        reduced_counts,
        all_counts,
        reduced_product,
        all_product,
    }
}

pub fn cartier_foata_identity_check(g: &Graph, max_len: usize) -> bool {
    cartier_foata_report(g, max_len).holds()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use alloc::string::ToString;
    use alloc::vec;

    fn ab_edgeless() -> Graph {
        Graph::edgeless(["a", "b"])
    }

    fn p3() -> Graph {
        Graph::path(["a", "b", "c"])
    }

    fn w(g: &Graph, s: &str) -> Word {
        Word::from_chars(g, s).unwrap()
    }

    #[test]
    fn reduced_examples() {
        let e = ab_edgeless();
        assert!(is_reduced(&e, &w(&e, "abab")).unwrap());
        assert!(!is_reduced(&e, &w(&e, "aab")).unwrap());
        assert!(is_reduced(&e, &Word::default()).unwrap());
        let k = Graph::complete(["a", "b"]);
        assert!(!is_reduced(&k, &w(&k, "aba")).unwrap());
        assert_eq!(
            Word::from_chars(&e, "abz"),
            Err(Error::UnknownVertex("z".into()))
        );
    }

    #[test]
    fn canonical_examples() {
        let k = Graph::complete(["a", "b"]);
        assert_eq!(canonical_form(&k, &w(&k, "ba")), w(&k, "ab"));
        let e = ab_edgeless();
        assert_eq!(canonical_form(&e, &w(&e, "ba")), w(&e, "ba"));
        let p = p3();
        // c and a never swap, but a slides left past b: cab ~ cba ~ bca.
        assert_eq!(canonical_form(&p, &w(&p, "cab")), w(&p, "bca"));
        assert_eq!(canonical_form_bfs(&p, &w(&p, "cab")), w(&p, "bca"));
        assert_eq!(canonical_form(&p, &w(&p, "acb")), w(&p, "abc"));
        assert_eq!(canonical_form(&p, &w(&p, "ac")), w(&p, "ac"));
        assert_eq!(canonical_form(&p, &w(&p, "ca")), w(&p, "ca"));
    }

    #[test]
    fn enumerate_examples() {
        let show = |g: &Graph, ws: Vec<Word>| -> Vec<String> {
            ws.iter().map(|x| x.display(g).to_string()).collect()
        };
        let k = Graph::complete(["a", "b"]);
        let e = ab_edgeless();
        let p = p3();
        let cap = DEFAULT_ENUMERATION_CAP;
        assert_eq!(show(&k, enumerate_reduced_classes(&k, 2, cap).unwrap()), ["ab"]);
        assert_eq!(
            show(&e, enumerate_reduced_classes(&e, 3, cap).unwrap()),
            ["aba", "bab"]
        );
        assert_eq!(
            show(&p, enumerate_reduced_classes(&p, 2, cap).unwrap()),
            ["ab", "ac", "bc", "ca"]
        );
        let e3 = Graph::edgeless(["a", "b", "c"]);
        assert_eq!(
            enumerate_reduced_classes(&e3, 4, 20),
            Err(Error::CapExceeded {
                what: "reduced word classes",
                count: 24,
                cap: 20
            })
        );
    }

    #[test]
    fn series_examples() {
        let k = Graph::complete(["a", "b"]);
        assert_eq!(
            count_reduced_classes_series(&k, 4),
            TruncatedSeries::from_i64(&[1, 2, 1, 0, 0], 4)
        );
        assert_eq!(
            count_reduced_classes_series(&ab_edgeless(), 4),
            TruncatedSeries::from_i64(&[1, 2, 2, 2, 2], 4)
        );
        assert_eq!(
            count_reduced_classes_series(&p3(), 4),
            TruncatedSeries::from_i64(&[1, 3, 4, 4, 4], 4)
        );
        assert_eq!(count_reduced_classes(&p3(), 4), vec![1, 3, 4, 4, 4]);
    }

    #[test]
    fn weighted_sum_examples() {
        let e = ab_edgeless();
        let x = vec![rat(1, 3), rat(1, 3)];
        assert_eq!(truncated_weighted_sum(&e, &x, 2).unwrap(), rat(17, 9));
        assert_eq!(truncated_weighted_sum_enumerated(&e, &x, 2).unwrap(), rat(17, 9));
        let zero = vec![int(0); 3];
        assert_eq!(truncated_weighted_sum(&p3(), &zero, 5).unwrap(), int(1));
        let sums = truncated_weighted_sums(&e, &x, 12).unwrap();
        assert!(sums.windows(2).all(|p| p[0] <= p[1]));
        // 1 + 2 * sum_{l >= 1} 3^-l = 2, the reciprocal of K(1/4, 1/4).
        assert_eq!(int(2) - &sums[12], rat(1, 3i64.pow(12)));
    }

    #[test]
    fn identity_examples() {
        assert!(cartier_foata_identity_check(&ab_edgeless(), 6));
        assert!(cartier_foata_identity_check(&p3(), 6));
        let k3 = Graph::complete(["a", "b", "c"]);
        let report = cartier_foata_report(&k3, 6);
        assert!(report.holds());
        let multisets: Vec<u64> = (0..=6u64).map(|l| (l + 2) * (l + 1) / 2).collect();
        assert_eq!(report.all_counts, multisets);
    }
}
