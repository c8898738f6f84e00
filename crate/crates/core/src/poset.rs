//! Finite posets and the cone operators `L`, `U`, `Max`, `Min`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

/// How the pairs handed to [`Poset::build`] are interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationMode {
    /// Cover pairs; the order is their reflexive-transitive closure.
    Covers,
    /// The full order relation; only reflexivity is added.
    Full,
}

/// A finite, nonempty partially ordered set.
///
/// The order is stored as up-sets and down-sets per element (rows and
/// columns of the order matrix). The binary operators `Max L(x, y)` and
/// `Min U(x, y)` are tabulated at construction because every congruence
/// test consults them.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    max_l: Vec<ElementSet>,
    min_u: Vec<ElementSet>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl Eq for Poset {}

fn check_labels<S: AsRef<str>>(labels: &[S]) -> Result<HashMap<String, usize>> {
    if labels.is_empty() {
        return Err(Error::Empty);
    }
    if labels.len() > MAX_ELEMENTS {
        return Err(Error::TooLarge(labels.len()));
    }
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        let l = l.as_ref();
        if l.is_empty() {
            return Err(Error::EmptyLabel);
        }
        if index.insert(l.to_string(), i).is_some() {
            return Err(Error::DuplicateLabel(l.to_string()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Builds a poset from labels and a relation given by label pairs
    /// `(lower, upper)`.
    pub fn build<S: AsRef<str>, T: AsRef<str>>(labels: &[S], relation: &[(T, T)], mode: RelationMode) -> Result<Poset> {
        let index = check_labels(labels)?;
        let n = labels.len();
        let lookup = |l: &str| index.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.to_string()));
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in relation {
            let (i, j) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if mode == RelationMode::Covers && i == j {
                return Err(Error::Cycle(a.as_ref().to_string(), b.as_ref().to_string()));
            }
            leq[i][j] = true;
        }
        if mode == RelationMode::Covers {
            // Warshall
            #[allow(clippy::needless_range_loop)]
            for k in 0..n {
                for i in 0..n {
                    if leq[i][k] {
                        for j in 0..n {
                            if leq[k][j] {
                                leq[i][j] = true;
                            }
                        }
                    }
                }
            }
        }
        let labels = labels.iter().map(|l| l.as_ref().to_string()).collect();
        Poset::from_matrix(labels, &leq)
    }

    pub fn from_covers<S: AsRef<str>, T: AsRef<str>>(labels: &[S], covers: &[(T, T)]) -> Result<Poset> {
        Poset::build(labels, covers, RelationMode::Covers)
    }

    pub fn from_order<S: AsRef<str>, T: AsRef<str>>(labels: &[S], order: &[(T, T)]) -> Result<Poset> {
        Poset::build(labels, order, RelationMode::Full)
    }

    /// Builds a poset from an order matrix, `leq[i][j]` meaning element `i`
    /// is below element `j`. The diagonal is forced to `true`.
    pub fn from_matrix(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<Poset> {
        check_labels(&labels)?;
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::BadMatrix);
        }
        let le = |i: usize, j: usize| i == j || leq[i][j];
        for i in 0..n {
            for j in i + 1..n {
                if le(i, j) && le(j, i) {
                    return Err(Error::Cycle(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !le(i, j) {
                    continue;
                }
                for k in 0..n {
                    if le(j, k) && !le(i, k) {
                        return Err(Error::NotTransitive(labels[i].clone(), labels[j].clone(), labels[k].clone()));
                    }
                }
            }
        }
        let up: Vec<ElementSet> = (0..n).map(|i| (0..n).filter(|&j| le(i, j)).collect()).collect();
        let down: Vec<ElementSet> = (0..n).map(|j| (0..n).filter(|&i| le(i, j)).collect()).collect();
        Ok(Poset::from_cones(labels, up, down))
    }

    fn from_cones(labels: Vec<String>, up: Vec<ElementSet>, down: Vec<ElementSet>) -> Poset {
        let n = labels.len();
        let mut p = Poset { labels, up, down, max_l: Vec::with_capacity(n * n), min_u: Vec::with_capacity(n * n) };
        for x in 0..n {
            for y in 0..n {
                let max_l = p.maximal(p.down[x].intersection(p.down[y]));
                let min_u = p.minimal(p.up[x].intersection(p.up[y]));
                p.max_l.push(max_l);
                p.min_u.push(min_u);
            }
        }
        p
    }

    /// The sub-poset induced on `subset`, labels and relative order kept.
    pub fn induced(&self, subset: ElementSet) -> Result<Poset> {
        let elems: Vec<usize> = subset.iter().collect();
        let labels = elems.iter().map(|&i| self.labels[i].clone()).collect();
        let leq: Vec<Vec<bool>> = elems.iter().map(|&i| elems.iter().map(|&j| self.leq(i, j)).collect()).collect();
        Poset::from_matrix(labels, &leq)
    }

    /// Same order, new labels.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Poset> {
        if labels.len() != self.len() {
            return Err(Error::BadMatrix);
        }
        check_labels(&labels)?;
        Ok(Poset::from_cones(labels, self.up.clone(), self.down.clone()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Looks up a list of labels as a set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()).ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string())))
            .collect()
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// `{j | i <= j}`, i.e. `U(i)`.
    pub fn up(&self, i: usize) -> ElementSet {
        self.up[i]
    }

    /// `{j | j <= i}`, i.e. `L(i)`.
    pub fn down(&self, i: usize) -> ElementSet {
        self.down[i]
    }

    /// `L(A)`: common lower bounds of `A`. `L(∅)` is the whole poset.
    pub fn lower_cone(&self, a: ElementSet) -> ElementSet {
        a.iter().fold(self.elements(), |acc, x| acc.intersection(self.down[x]))
    }

    /// `U(A)`: common upper bounds of `A`. `U(∅)` is the whole poset.
    pub fn upper_cone(&self, a: ElementSet) -> ElementSet {
        a.iter().fold(self.elements(), |acc, x| acc.intersection(self.up[x]))
    }

    /// `Max S`.
    pub fn maximal(&self, s: ElementSet) -> ElementSet {
        s.iter().filter(|&x| self.up[x].intersection(s) == ElementSet::singleton(x)).collect()
    }

    /// `Min S`.
    pub fn minimal(&self, s: ElementSet) -> ElementSet {
        s.iter().filter(|&x| self.down[x].intersection(s) == ElementSet::singleton(x)).collect()
    }

    /// `Max L(A)`.
    pub fn max_l(&self, a: ElementSet) -> ElementSet {
        self.maximal(self.lower_cone(a))
    }

    /// `Min U(A)`.
    pub fn min_u(&self, a: ElementSet) -> ElementSet {
        self.minimal(self.upper_cone(a))
    }

    /// Tabulated `Max L(x, y)`.
    pub fn max_l2(&self, x: usize, y: usize) -> ElementSet {
        self.max_l[x * self.len() + y]
    }

    /// Tabulated `Min U(x, y)`.
    pub fn min_u2(&self, x: usize, y: usize) -> ElementSet {
        self.min_u[x * self.len() + y]
    }

    /// `[a, b] = {x | a <= x <= b}`; empty unless `a <= b`.
    pub fn interval(&self, a: usize, b: usize) -> ElementSet {
        self.up[a].intersection(self.down[b])
    }

    pub fn is_convex(&self, s: ElementSet) -> bool {
        s.iter().all(|a| s.iter().all(|b| self.interval(a, b).is_subset(s)))
    }

    pub fn is_up_set(&self, s: ElementSet) -> bool {
        s.iter().all(|x| self.up[x].is_subset(s))
    }

    /// Least upper bound of `a` and `b`, when `Min U(a, b)` is a singleton.
    pub fn sup(&self, a: usize, b: usize) -> Option<usize> {
        self.min_u2(a, b).single()
    }

    /// Greatest lower bound of `a` and `b`, when `Max L(a, b)` is a singleton.
    pub fn inf(&self, a: usize, b: usize) -> Option<usize> {
        self.max_l2(a, b).single()
    }

    /// Greatest element of `s` if it has one.
    pub fn greatest_of(&self, s: ElementSet) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(self.down[x]))
    }

    /// Least element of `s` if it has one.
    pub fn least_of(&self, s: ElementSet) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(self.up[x]))
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest_of(self.elements())
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least_of(self.elements())
    }

    pub fn is_bounded(&self) -> bool {
        self.top().is_some() && self.bottom().is_some()
    }

    /// Whether `a` is covered by `b`.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        a != b && self.interval(a, b) == ElementSet::singleton(a).with(b)
    }

    /// Cover pairs (the transitive reduction), in row-major index order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| self.covers(a, b)).collect()
    }

    /// Searches for an order isomorphism `f` from `self` onto `other`,
    /// returned as `f[i]` = image of element `i`.
    pub fn isomorphism_to(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let degree = |p: &Poset, i: usize| (p.down[i].len(), p.up[i].len());
        let mut mine: Vec<_> = (0..n).map(|i| degree(self, i)).collect();
        let mut theirs: Vec<_> = (0..n).map(|i| degree(other, i)).collect();
        let (a, b) = (mine.clone(), theirs.clone());
        mine.sort_unstable();
        theirs.sort_unstable();
        if mine != theirs {
            return None;
        }
        let mut image = vec![usize::MAX; n];
        let mut used = ElementSet::EMPTY;
        if self.extend_iso(other, 0, &a, &b, &mut image, &mut used) {
            Some(image)
        } else {
            None
        }
    }

    fn extend_iso(
        &self,
        other: &Poset,
        i: usize,
        deg_self: &[(usize, usize)],
        deg_other: &[(usize, usize)],
        image: &mut [usize],
        used: &mut ElementSet,
    ) -> bool {
        if i == self.len() {
            return true;
        }
        for j in other.elements().difference(*used) {
            if deg_self[i] != deg_other[j] {
                continue;
            }
            let consistent =
                (0..i).all(|k| self.leq(i, k) == other.leq(j, image[k]) && self.leq(k, i) == other.leq(image[k], j));
            if !consistent {
                continue;
            }
            image[i] = j;
            used.insert(j);
            if self.extend_iso(other, i + 1, deg_self, deg_other, image, used) {
                return true;
            }
            used.remove(j);
        }
        image[i] = usize::MAX;
        false
    }

    pub fn is_order_isomorphic(&self, other: &Poset) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// Formats a set as `{a,b,c}` using labels.
    pub fn fmt_set(&self, s: ElementSet) -> String {
        let inner: Vec<&str> = s.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", inner.join(","))
    }
}
