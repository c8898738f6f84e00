//! Binary relations and equivalence relations on `{0, ..., n-1}`.

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// A binary relation stored row-wise: `rows[x]` holds every `y` with `(x, y) ∈ R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    rows: Vec<ElementSet>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation { rows: vec![ElementSet::EMPTY; n] }
    }

    /// `Δ`.
    pub fn diagonal(n: usize) -> Self {
        Relation { rows: (0..n).map(ElementSet::singleton).collect() }
    }

    /// `∇`.
    pub fn full(n: usize) -> Self {
        Relation { rows: vec![ElementSet::full(n); n] }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Relation::empty(n);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    pub fn universe(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x].insert(y);
    }

    pub fn row(&self, x: usize) -> ElementSet {
        self.rows[x]
    }

    /// Inserts `S × S`.
    pub fn insert_square(&mut self, s: ElementSet) {
        for x in s {
            self.rows[x] = self.rows[x].union(s);
        }
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(x, r)| r.iter().map(move |y| (x, y)))
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows.iter().enumerate().all(|(x, r)| r.contains(x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(x, y)| self.contains(y, x))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs().all(|(x, y)| self.rows[y].is_subset(self.rows[x]))
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(*b))
    }

    pub fn intersection(&self, other: &Relation) -> Relation {
        Relation { rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.intersection(*b)).collect() }
    }

    pub fn union(&self, other: &Relation) -> Relation {
        Relation { rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.union(*b)).collect() }
    }

    /// `self ∘ other = {(x, y) | ∃z: (x, z) ∈ self, (z, y) ∈ other}`.
    pub fn compose(&self, other: &Relation) -> Relation {
        Relation {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().fold(ElementSet::EMPTY, |acc, z| acc.union(other.rows[z])))
                .collect(),
        }
    }
}

/// An equivalence relation kept as a partition in canonical form: classes
/// are numbered in order of their smallest member, so equal partitions are
/// equal values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EquivRelation {
    class_of: Vec<usize>,
    classes: Vec<ElementSet>,
}

impl EquivRelation {
    /// Canonicalizes any labelling of the elements by block ids.
    pub fn from_class_ids(ids: &[usize]) -> Self {
        let mut renumber: Vec<Option<usize>> = Vec::new();
        let mut class_of = Vec::with_capacity(ids.len());
        let mut classes: Vec<ElementSet> = Vec::new();
        for (x, &id) in ids.iter().enumerate() {
            if id >= renumber.len() {
                renumber.resize(id + 1, None);
            }
            let c = *renumber[id].get_or_insert_with(|| {
                classes.push(ElementSet::EMPTY);
                classes.len() - 1
            });
            classes[c].insert(x);
            class_of.push(c);
        }
        EquivRelation { class_of, classes }
    }

    /// Builds from blocks, which must partition `{0..n}`.
    pub fn from_classes(n: usize, blocks: &[ElementSet]) -> Result<Self> {
        let mut ids = vec![usize::MAX; n];
        for (c, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::NotPartition);
            }
            for x in b.iter() {
                if x >= n || ids[x] != usize::MAX {
                    return Err(Error::NotPartition);
                }
                ids[x] = c;
            }
        }
        if ids.contains(&usize::MAX) {
            return Err(Error::NotPartition);
        }
        Ok(EquivRelation::from_class_ids(&ids))
    }

    pub fn from_relation(r: &Relation) -> Result<Self> {
        if !r.is_equivalence() {
            return Err(Error::NotEquivalence);
        }
        let n = r.universe();
        let ids: Vec<usize> = (0..n).map(|x| r.row(x).first().unwrap_or(x)).collect();
        Ok(EquivRelation::from_class_ids(&ids))
    }

    pub fn delta(n: usize) -> Self {
        EquivRelation::from_class_ids(&(0..n).collect::<Vec<_>>())
    }

    pub fn nabla(n: usize) -> Self {
        EquivRelation::from_class_ids(&vec![0; n])
    }

    pub fn universe(&self) -> usize {
        self.class_of.len()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn class_id(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// `[x]Θ`.
    pub fn class(&self, x: usize) -> ElementSet {
        self.classes[self.class_of[x]]
    }

    /// Classes sorted by smallest member index.
    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn is_delta(&self) -> bool {
        self.classes.len() == self.universe()
    }

    pub fn is_nabla(&self) -> bool {
        self.classes.len() == 1
    }

    /// Set of class ids met by `s`, as a bitset over class ids.
    pub fn class_mask(&self, s: ElementSet) -> ElementSet {
        s.iter().map(|x| self.class_of[x]).collect()
    }

    pub fn to_relation(&self) -> Relation {
        let mut r = Relation::empty(self.universe());
        for &c in &self.classes {
            r.insert_square(c);
        }
        r
    }

    /// Pair-set inclusion.
    pub fn is_finer_than(&self, other: &EquivRelation) -> bool {
        self.classes.iter().all(|c| c.is_subset(other.class(c.first().unwrap_or(0))))
    }
}
