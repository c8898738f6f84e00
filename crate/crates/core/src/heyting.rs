//! Relatively pseudocomplemented posets.
//!
//! `x * y` is the greatest `z` with `L(x, z) ⊆ L(y)`. When it exists for every
//! pair the poset carries a total binary operation, and congruences are
//! additionally required to be compatible with it.

use crate::congruence::{is_congruence, is_filter, is_strong_filter, kernel};
use crate::error::{Error, Result};
use crate::family::ConFamily;
use crate::optable::{compatible, OpTable};
use crate::poset::Poset;
use crate::relation::{EquivRelation, Relation};
use crate::set::ElementSet;

/// The relative pseudocomplement `x * y`, if the candidate set has a greatest
/// element.
pub fn rel_pseudocomplement(p: &Poset, x: usize, y: usize) -> Option<usize> {
    let candidates: ElementSet =
        p.elements().iter().filter(|&z| p.down(x).intersection(p.down(z)).is_subset(p.down(y))).collect();
    p.greatest_of(candidates)
}

/// The table of `*` over a relatively pseudocomplemented poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarTable {
    n: usize,
    table: Vec<usize>,
    top: usize,
}

impl StarTable {
    /// Derives `*`, or reports the first pair without a pseudocomplement.
    pub fn derive(p: &Poset) -> std::result::Result<StarTable, (usize, usize)> {
        let n = p.len();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(rel_pseudocomplement(p, x, y).ok_or((x, y))?);
            }
        }
        // x * x is always the top when the table is total
        let top = table[0];
        Ok(StarTable { n, table, top })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn as_optable(&self) -> OpTable {
        OpTable::from_operation(self.n, 2, |a| self.get(a[0], a[1]))
    }

    /// Rows of the table, row = left operand.
    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.n)
    }
}

pub fn star_table(p: &Poset) -> Option<StarTable> {
    StarTable::derive(p).ok()
}

/// Compatibility of an equivalence with `*`.
pub fn is_star_compatible(star: &StarTable, theta: &EquivRelation) -> bool {
    let n = star.len();
    (0..n).all(|a| {
        (0..n).all(|c| {
            let here = theta.class_id(star.get(a, c));
            theta.class(a).iter().all(|b| theta.class(c).iter().all(|d| theta.class_id(star.get(b, d)) == here))
        })
    })
}

pub fn is_star_congruence(p: &Poset, star: &StarTable, theta: &EquivRelation) -> bool {
    is_congruence(p, theta) && is_star_compatible(star, theta)
}

pub fn enumerate_star_congruences(family: &ConFamily, star: &StarTable) -> ConFamily {
    family.filter(|t| is_star_compatible(star, t))
}

/// `T(x, y, z) = Max L((x*y)*z, (z*y)*x)`.
pub fn malcev(p: &Poset, star: &StarTable, x: usize, y: usize, z: usize) -> ElementSet {
    let s = star.get(star.get(x, y), z);
    let t = star.get(star.get(z, y), x);
    p.max_l2(s, t)
}

/// One application of the Malcev identities used to derive symmetry or
/// transitivity: the operator values whose product must meet the relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MalcevStep {
    /// Argument triples for the left and right operator evaluation.
    pub left: (usize, usize, usize),
    pub right: (usize, usize, usize),
    /// The pair the step concludes is related.
    pub concludes: (usize, usize),
    pub left_value: ElementSet,
    pub right_value: ElementSet,
}

/// Outcome of checking that a reflexive relation compatible with the
/// operators is a congruence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleRelationVerdict {
    pub max_l: bool,
    pub min_u: bool,
    /// Compatibility with the extra operation (`*` or `'`).
    pub extra: bool,
    /// `Some(true)` if all compatibilities hold and the relation turned out
    /// to be a congruence, `Some(false)` for a counterexample, `None` when
    /// the hypothesis fails.
    pub conclusion: Option<bool>,
    pub trace: Vec<MalcevStep>,
}

impl CompatibleRelationVerdict {
    pub fn hypothesis_holds(&self) -> bool {
        self.max_l && self.min_u && self.extra
    }

    /// No counterexample: either the hypothesis fails or the conclusion holds.
    pub fn consistent(&self) -> bool {
        self.conclusion != Some(false)
    }
}

/// Builds the derivation trace for a ternary operator `t` with the Malcev
/// identities: `(b, a)` from `t(a,a,b) × t(a,b,b)` and `(a, c)` from
/// `t(a,b,b) × t(b,b,c)`.
pub(crate) fn malcev_trace(r: &Relation, t: impl Fn(usize, usize, usize) -> ElementSet) -> Vec<MalcevStep> {
    let mut trace = Vec::new();
    for (a, b) in r.pairs() {
        trace.push(MalcevStep {
            left: (a, a, b),
            right: (a, b, b),
            concludes: (b, a),
            left_value: t(a, a, b),
            right_value: t(a, b, b),
        });
    }
    for (a, b) in r.pairs() {
        for c in r.row(b) {
            trace.push(MalcevStep {
                left: (a, b, b),
                right: (b, b, c),
                concludes: (a, c),
                left_value: t(a, b, b),
                right_value: t(b, b, c),
            });
        }
    }
    trace
}

pub(crate) fn conclude(
    p: &Poset,
    r: &Relation,
    max_l: bool,
    min_u: bool,
    extra: bool,
    is_full_congruence: impl Fn(&EquivRelation) -> bool,
    trace: impl FnOnce() -> Vec<MalcevStep>,
) -> CompatibleRelationVerdict {
    if !(max_l && min_u && extra) {
        return CompatibleRelationVerdict { max_l, min_u, extra, conclusion: None, trace: Vec::new() };
    }
    let trace = trace();
    // every step's values must be the expected singletons and the concluded
    // pair must be in R
    let steps_ok = trace.iter().all(|s| {
        s.left_value == ElementSet::singleton(s.concludes.0)
            && s.right_value == ElementSet::singleton(s.concludes.1)
            && r.contains(s.concludes.0, s.concludes.1)
    });
    let is_cong = steps_ok
        && EquivRelation::from_relation(r).map(|e| e.universe() == p.len() && is_full_congruence(&e)).unwrap_or(false);
    CompatibleRelationVerdict { max_l, min_u, extra, conclusion: Some(is_cong), trace }
}

/// Checks that a reflexive relation compatible with `Max L`, `Min U` and `*`
/// is a congruence of `(P, ≤, *)`, recording the Malcev steps.
pub fn check_reflexive_compatible_is_congruence(
    p: &Poset,
    star: &StarTable,
    r: &Relation,
) -> Result<CompatibleRelationVerdict> {
    if !r.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let max_l = compatible(r, &OpTable::max_l(p));
    let min_u = compatible(r, &OpTable::min_u(p));
    let extra = compatible(r, &star.as_optable());
    Ok(conclude(
        p,
        r,
        max_l,
        min_u,
        extra,
        |e| is_star_congruence(p, star, e),
        || malcev_trace(r, |x, y, z| malcev(p, star, x, y, z)),
    ))
}

/// First pair `(x, y)` with `x ∈ D`, `x * y ∈ D`, `y ∉ D`. Fails if the top
/// is missing from `D`.
pub fn deductive_violation(p: &Poset, star: &StarTable, d: ElementSet) -> Result<Option<(usize, usize)>> {
    if !d.contains(star.top()) {
        return Err(Error::TopNotInSet);
    }
    Ok(d.iter()
        .flat_map(|x| p.elements().iter().map(move |y| (x, y)))
        .find(|&(x, y)| d.contains(star.get(x, y)) && !d.contains(y)))
}

pub fn is_deductive_system(p: &Poset, star: &StarTable, d: ElementSet) -> bool {
    matches!(deductive_violation(p, star, d), Ok(None))
}

/// `t2(x, y1, y2) = (y1 * (y2 * x)) * x`.
pub fn ideal_term_t2(star: &StarTable, x: usize, y1: usize, y2: usize) -> usize {
    star.get(star.get(y1, star.get(y2, x)), x)
}

/// Closure under `t1 = 1` and under `t2` with `y1, y2 ∈ D`.
pub fn is_closed_under_ideal_terms(p: &Poset, star: &StarTable, d: ElementSet) -> bool {
    d.contains(star.top())
        && p.elements().iter().all(|x| d.iter().all(|y1| d.iter().all(|y2| d.contains(ideal_term_t2(star, x, y1, y2)))))
}

/// A filter of `(P, ≤, *)`: a filter closed under `*`.
pub fn is_star_filter(p: &Poset, star: &StarTable, f: ElementSet) -> bool {
    is_filter(p, f) && f.iter().all(|x| f.iter().all(|y| f.contains(star.get(x, y))))
}

pub fn is_strong_star_filter(p: &Poset, star: &StarTable, f: ElementSet) -> bool {
    is_star_filter(p, star, f) && is_strong_filter(p, f)
}

/// `Θ_A`: `(x, y)` related when `L(x, a, b) = L(y, a, b)` for some `a, b ∈ A`.
pub fn theta_from_subset(p: &Poset, a: ElementSet) -> Result<Relation> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let n = p.len();
    let mut r = Relation::empty(n);
    for u in a {
        for v in a {
            let base = p.down(u).intersection(p.down(v));
            for x in 0..n {
                let lx = p.down(x).intersection(base);
                for y in 0..n {
                    if lx == p.down(y).intersection(base) {
                        r.insert(x, y);
                    }
                }
            }
        }
    }
    Ok(r)
}

/// Everything verified about `Θ_F` for a strong filter `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongFilterCongruence {
    pub relation: Relation,
    /// `Θ_F` as a partition, if it is an equivalence.
    pub congruence: Option<EquivRelation>,
    /// `(a, b) ∈ Θ_F` exactly when `a * b, b * a ∈ F`.
    pub star_criterion_agrees: bool,
    pub is_star_congruence: bool,
    pub kernel_is_filter: bool,
}

impl StrongFilterCongruence {
    /// `Θ_F` is an equivalence given by the `*` criterion with kernel `F`.
    pub fn criterion_holds(&self) -> bool {
        self.congruence.is_some() && self.star_criterion_agrees && self.kernel_is_filter
    }

    /// Additionally a congruence of `(P, ≤, *)`. Not implied by the
    /// criterion: on the six-element poset with two atoms and two coatoms,
    /// `F = {c, 1}` gives `Δ ∪ {c, 1}²`, which is not compatible with `Max L`.
    pub fn induces_congruence(&self) -> bool {
        self.criterion_holds() && self.is_star_congruence
    }
}

pub fn strong_filter_congruence(p: &Poset, star: &StarTable, f: ElementSet) -> Result<StrongFilterCongruence> {
    if !is_strong_star_filter(p, star, f) {
        return Err(Error::NotStrongFilter);
    }
    let relation = theta_from_subset(p, f)?;
    let n = p.len();
    let star_criterion_agrees = (0..n)
        .all(|a| (0..n).all(|b| relation.contains(a, b) == (f.contains(star.get(a, b)) && f.contains(star.get(b, a)))));
    let congruence = EquivRelation::from_relation(&relation).ok();
    let (is_sc, kernel_is_filter) = match &congruence {
        Some(e) => (is_star_congruence(p, star, e), kernel(p, e).map(|k| k == f).unwrap_or(false)),
        None => (false, false),
    };
    Ok(StrongFilterCongruence {
        relation,
        congruence,
        star_criterion_agrees,
        is_star_congruence: is_sc,
        kernel_is_filter,
    })
}

/// Violations of the two kernel clauses for a `*`-compatible equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelClauses {
    /// `Θ` is compatible with `*`; without it the clauses are not checked.
    pub hypothesis: bool,
    /// `(a, b) ∈ Θ` but `a * b` or `b * a` outside `[1]Θ`.
    pub clause_i: Option<(usize, usize)>,
    /// Premises of the converse hold but `(a, b) ∉ Θ`.
    pub clause_ii: Option<(usize, usize)>,
}

impl KernelClauses {
    pub fn holds(&self) -> bool {
        self.clause_i.is_none() && self.clause_ii.is_none()
    }
}

pub fn kernel_clauses(star: &StarTable, theta: &EquivRelation) -> KernelClauses {
    if !is_star_compatible(star, theta) {
        return KernelClauses { hypothesis: false, clause_i: None, clause_ii: None };
    }
    let n = star.len();
    let k = theta.class(star.top());
    let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));
    let clause_i = pairs()
        .filter(|&(a, b)| theta.contains(a, b))
        .find(|&(a, b)| !(k.contains(star.get(a, b)) && k.contains(star.get(b, a))));
    let clause_ii = pairs()
        .filter(|&(a, b)| {
            let (ab, ba) = (star.get(a, b), star.get(b, a));
            k.contains(ab) && k.contains(ba) && theta.contains(star.get(ab, b), star.get(ba, a))
        })
        .find(|&(a, b)| !theta.contains(a, b));
    KernelClauses { hypothesis: true, clause_i, clause_ii }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> Poset {
        Poset::from_covers(
            &["0", "a", "b", "c", "d", "1"],
            &[("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
        )
        .unwrap()
    }

    fn idx(p: &Poset, l: &str) -> usize {
        p.index_of(l).unwrap()
    }

    #[test]
    fn single_pseudocomplements() {
        let p = fig1();
        assert_eq!(rel_pseudocomplement(&p, idx(&p, "a"), idx(&p, "b")), Some(idx(&p, "b")));
        for x in 0..6 {
            assert_eq!(rel_pseudocomplement(&p, x, x), Some(5));
        }
    }

    #[test]
    fn antichain_has_no_star() {
        let p = Poset::from_covers(&["x", "y"], &[] as &[(&str, &str)]).unwrap();
        assert_eq!(StarTable::derive(&p), Err((0, 0)));
    }

    #[test]
    fn malcev_values() {
        let p = fig1();
        let s = star_table(&p).unwrap();
        let (a, b, c) = (idx(&p, "a"), idx(&p, "b"), idx(&p, "c"));
        assert_eq!(malcev(&p, &s, a, b, c), ElementSet::singleton(a));
        for x in 0..6 {
            assert_eq!(malcev(&p, &s, x, x, x), ElementSet::singleton(x));
        }
    }

    #[test]
    fn deductive_systems() {
        let p = fig1();
        let s = star_table(&p).unwrap();
        let b1 = p.set_of(&["b", "c", "d", "1"]).unwrap();
        assert!(is_deductive_system(&p, &s, b1));
        assert!(is_deductive_system(&p, &s, ElementSet::singleton(5)));
        // c * y lands in {c, 1} only for y in {c, 1}
        assert!(is_deductive_system(&p, &s, p.set_of(&["c", "1"]).unwrap()));
        let a1 = p.set_of(&["a", "1"]).unwrap();
        assert!(!is_deductive_system(&p, &s, a1));
        // a * c = 1 with c missing
        assert_eq!(deductive_violation(&p, &s, a1), Ok(Some((idx(&p, "a"), idx(&p, "c")))));
        assert_eq!(deductive_violation(&p, &s, ElementSet::singleton(0)), Err(Error::TopNotInSet));
    }

    #[test]
    fn ideal_terms() {
        let p = fig1();
        let s = star_table(&p).unwrap();
        for a in 0..6 {
            assert_eq!(ideal_term_t2(&s, a, 5, 5), 5);
        }
        let (c, d) = (idx(&p, "c"), idx(&p, "d"));
        assert_eq!(ideal_term_t2(&s, c, d, 5), 5);
        assert!(is_closed_under_ideal_terms(&p, &s, p.elements()));
        assert!(is_closed_under_ideal_terms(&p, &s, p.set_of(&["b", "c", "d", "1"]).unwrap()));
        assert!(is_closed_under_ideal_terms(&p, &s, p.set_of(&["c", "1"]).unwrap()));
        // t2(c, a, 1) = (a * c) * c = c
        assert_eq!(ideal_term_t2(&s, c, idx(&p, "a"), 5), c);
        assert!(!is_closed_under_ideal_terms(&p, &s, p.set_of(&["a", "1"]).unwrap()));
    }

    #[test]
    fn theta_of_subsets() {
        let p = fig1();
        let t5 = EquivRelation::from_classes(6, &[p.interval(0, 1), p.interval(2, 5)]).unwrap();
        let b1 = p.set_of(&["b", "c", "d", "1"]).unwrap();
        assert_eq!(theta_from_subset(&p, b1).unwrap(), t5.to_relation());
        assert_eq!(theta_from_subset(&p, p.elements()).unwrap(), Relation::full(6));
        assert_eq!(theta_from_subset(&p, ElementSet::singleton(5)).unwrap(), Relation::diagonal(6));
        assert_eq!(theta_from_subset(&p, ElementSet::EMPTY), Err(Error::EmptySubset));
    }

    #[test]
    fn strong_filter_congruences() {
        let p = fig1();
        let s = star_table(&p).unwrap();
        let b1 = p.set_of(&["b", "c", "d", "1"]).unwrap();
        let r = strong_filter_congruence(&p, &s, b1).unwrap();
        assert!(r.induces_congruence());
        let c1 = p.set_of(&["c", "1"]).unwrap();
        let r = strong_filter_congruence(&p, &s, c1).unwrap();
        assert!(r.criterion_holds());
        assert!(!r.is_star_congruence);
        assert_eq!(r.congruence, Some(EquivRelation::from_class_ids(&[0, 1, 2, 3, 4, 3])));
        let r = strong_filter_congruence(&p, &s, ElementSet::singleton(5)).unwrap();
        assert_eq!(r.congruence, Some(EquivRelation::delta(6)));
        assert_eq!(strong_filter_congruence(&p, &s, p.set_of(&["c", "d", "1"]).unwrap()), Err(Error::NotStrongFilter));
    }

    #[test]
    fn reflexive_compatible_relations() {
        let p = fig1();
        let s = star_table(&p).unwrap();
        let t5 = EquivRelation::from_classes(6, &[p.interval(0, 1), p.interval(2, 5)]).unwrap();
        let v = check_reflexive_compatible_is_congruence(&p, &s, &t5.to_relation()).unwrap();
        assert_eq!(v.conclusion, Some(true));
        assert!(!v.trace.is_empty());
        let v = check_reflexive_compatible_is_congruence(&p, &s, &Relation::diagonal(6)).unwrap();
        assert_eq!(v.conclusion, Some(true));
        let mut r = Relation::diagonal(6);
        r.insert(0, 1);
        let v = check_reflexive_compatible_is_congruence(&p, &s, &r).unwrap();
        assert!(v.consistent());
        assert_eq!(check_reflexive_compatible_is_congruence(&p, &s, &Relation::empty(6)), Err(Error::NotReflexive));
    }
}
