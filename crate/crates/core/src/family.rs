//! Families of congruences ordered by inclusion.

use crate::poset::Poset;
use crate::relation::EquivRelation;
use crate::set::ElementSet;

/// A set of equivalence relations on one ground set, ordered by inclusion.
///
/// Members are kept sorted: finer partitions first (so `Δ` leads and `∇`
/// closes), ties broken by canonical class assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConFamily {
    members: Vec<EquivRelation>,
    inclusion: Vec<Vec<bool>>,
}

impl ConFamily {
    pub fn new(mut members: Vec<EquivRelation>) -> Self {
        members.sort_by(|a, b| b.num_classes().cmp(&a.num_classes()).then_with(|| a.cmp(b)));
        members.dedup();
        let inclusion = members.iter().map(|a| members.iter().map(|b| a.is_finer_than(b)).collect()).collect();
        ConFamily { members, inclusion }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[EquivRelation] {
        &self.members
    }

    pub fn get(&self, i: usize) -> &EquivRelation {
        &self.members[i]
    }

    pub fn index_of(&self, theta: &EquivRelation) -> Option<usize> {
        self.members.iter().position(|m| m == theta)
    }

    pub fn contains(&self, theta: &EquivRelation) -> bool {
        self.index_of(theta).is_some()
    }

    /// Member `i` is contained in member `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.inclusion[i][j]
    }

    /// Keeps the members satisfying `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&EquivRelation) -> bool) -> ConFamily {
        ConFamily::new(self.members.iter().filter(|m| pred(m)).cloned().collect())
    }

    /// Display names: `delta`, `nabla`, and `theta1`, `theta2`, ... for
    /// the rest in family order.
    pub fn names(&self) -> Vec<String> {
        let mut k = 0;
        self.members
            .iter()
            .map(|m| {
                if m.is_delta() {
                    "delta".to_string()
                } else if m.is_nabla() {
                    "nabla".to_string()
                } else {
                    k += 1;
                    format!("theta{k}")
                }
            })
            .collect()
    }

    /// Greatest member below both `i` and `j`, if unique.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len()).filter(|&k| self.leq(k, i) && self.leq(k, j)).collect();
        lower.iter().copied().find(|&m| lower.iter().all(|&k| self.leq(k, m)))
    }

    /// Least member above both `i` and `j`, if unique.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len()).filter(|&k| self.leq(i, k) && self.leq(j, k)).collect();
        upper.iter().copied().find(|&m| upper.iter().all(|&k| self.leq(m, k)))
    }

    pub fn lattice_report(&self) -> LatticeReport {
        let n = self.len();
        let pairs = || (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        LatticeReport {
            missing_meet: pairs().find(|&(i, j)| self.meet(i, j).is_none()),
            missing_join: pairs().find(|&(i, j)| self.join(i, j).is_none()),
        }
    }

    /// The family as a poset under inclusion, labelled by [`Self::names`].
    pub fn as_poset(&self) -> Poset {
        Poset::from_matrix(self.names(), &self.inclusion).expect("inclusion is a partial order")
    }

    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.as_poset().hasse_edges()
    }

    pub fn properties(&self) -> PropertiesReport {
        congruence_properties(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeReport {
    pub missing_meet: Option<(usize, usize)>,
    pub missing_join: Option<(usize, usize)>,
}

impl LatticeReport {
    pub fn is_lattice(&self) -> bool {
        self.missing_meet.is_none() && self.missing_join.is_none()
    }
}

/// Members `theta`, `phi` whose composite `theta ∘ phi` holds `pairs`
/// that `phi ∘ theta` lacks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonPermuting {
    pub theta: usize,
    pub phi: usize,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SharedClass {
    pub theta: usize,
    pub phi: usize,
    pub class: ElementSet,
}

/// Permutability, regularity and uniformity of a congruence family, with
/// every failure recorded.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PropertiesReport {
    pub non_permuting: Vec<NonPermuting>,
    pub shared_classes: Vec<SharedClass>,
    /// Members whose classes differ in size.
    pub non_uniform: Vec<usize>,
}

impl PropertiesReport {
    pub fn permutable(&self) -> bool {
        self.non_permuting.is_empty()
    }

    pub fn regular(&self) -> bool {
        self.shared_classes.is_empty()
    }

    pub fn uniform(&self) -> bool {
        self.non_uniform.is_empty()
    }
}

pub fn congruence_properties(family: &ConFamily) -> PropertiesReport {
    let rels: Vec<_> = family.members().iter().map(|m| m.to_relation()).collect();
    let n = family.len();
    let mut report = PropertiesReport::default();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let ij = rels[i].compose(&rels[j]);
            let ji = rels[j].compose(&rels[i]);
            let pairs: Vec<_> = ij.pairs().filter(|&(x, y)| !ji.contains(x, y)).collect();
            if !pairs.is_empty() {
                report.non_permuting.push(NonPermuting { theta: i, phi: j, pairs });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for &class in family.get(i).classes() {
                if family.get(j).classes().contains(&class) {
                    report.shared_classes.push(SharedClass { theta: i, phi: j, class });
                }
            }
        }
    }
    for (i, m) in family.members().iter().enumerate() {
        let size = m.classes()[0].len();
        if m.classes().iter().any(|c| c.len() != size) {
            report.non_uniform.push(i);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(ids: &[usize]) -> EquivRelation {
        EquivRelation::from_class_ids(ids)
    }

    #[test]
    fn ordering_and_names() {
        let fam = ConFamily::new(vec![eq(&[0, 0, 0]), eq(&[0, 1, 1]), eq(&[0, 1, 2]), eq(&[0, 1, 2])]);
        assert_eq!(fam.len(), 3);
        assert!(fam.get(0).is_delta());
        assert!(fam.get(2).is_nabla());
        assert_eq!(fam.names(), vec!["delta", "theta1", "nabla"]);
        assert!(fam.leq(0, 1) && fam.leq(1, 2) && !fam.leq(2, 1));
    }

    #[test]
    fn meets_inside_the_family() {
        // two incomparable middles with delta and nabla: M2
        let fam = ConFamily::new(vec![eq(&[0, 1, 2]), eq(&[0, 0, 1]), eq(&[0, 1, 1]), eq(&[0, 0, 0])]);
        assert_eq!(fam.meet(1, 2), Some(0));
        assert_eq!(fam.join(1, 2), Some(3));
        assert!(fam.lattice_report().is_lattice());
        let no_bottom = ConFamily::new(vec![eq(&[0, 0, 1]), eq(&[0, 1, 1])]);
        assert_eq!(no_bottom.lattice_report().missing_meet, Some((0, 1)));
    }

    #[test]
    fn trivial_family_has_all_properties() {
        let fam = ConFamily::new(vec![eq(&[0, 1, 2, 3]), eq(&[0, 0, 0, 0])]);
        let r = fam.properties();
        assert!(r.permutable() && r.regular() && r.uniform());
    }

    #[test]
    fn detects_each_failure() {
        let fam = ConFamily::new(vec![eq(&[0, 0, 1]), eq(&[0, 1, 1]), eq(&[0, 1, 2]), eq(&[0, 0, 0])]);
        let r = fam.properties();
        assert!(!r.permutable());
        assert!(!r.uniform());
        // delta shares {2} with the first member
        assert!(!r.regular());
        let fam = ConFamily::new(vec![eq(&[0, 0, 1, 2]), eq(&[0, 0, 1, 1])]);
        assert_eq!(
            fam.properties().shared_classes,
            vec![SharedClass { theta: 0, phi: 1, class: [0, 1].into_iter().collect() }]
        );
    }
}
