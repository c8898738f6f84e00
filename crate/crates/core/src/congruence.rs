//! Congruences of a poset: equivalences compatible with `Max L` and `Min U`.
//!
//! Every class of a congruence on a finite poset is a closed interval, so
//! [`enumerate_congruences`] only walks partitions into intervals. The plain
//! set-partition walk in [`enumerate_congruences_bruteforce`] is kept as an
//! independent oracle for it.

use crate::error::{Error, Result};
use crate::family::ConFamily;
use crate::poset::Poset;
use crate::relation::{EquivRelation, Relation};
use crate::set::ElementSet;

/// Size guard used by callers that do not pick their own.
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    MaxL,
    MinU,
}

/// Related argument pairs `(a1, a2)`, `(b1, b2)` (componentwise in `Θ`)
/// whose operator values contain no `Θ`-related pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub operator: Operator,
    pub left: (usize, usize),
    pub right: (usize, usize),
}

/// The first compatibility failure of `theta`, scanning argument pairs in
/// index order. `None` means `theta` is a congruence.
pub fn congruence_violation(p: &Poset, theta: &EquivRelation) -> Option<Violation> {
    let n = p.len();
    // Compatibility only asks whether the two value sets meet a common class.
    let mut ml = Vec::with_capacity(n * n);
    let mut mu = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            ml.push(theta.class_mask(p.max_l2(x, y)));
            mu.push(theta.class_mask(p.min_u2(x, y)));
        }
    }
    for a1 in 0..n {
        for a2 in 0..n {
            let (l, u) = (ml[a1 * n + a2], mu[a1 * n + a2]);
            for b1 in theta.class(a1) {
                for b2 in theta.class(a2) {
                    let k = b1 * n + b2;
                    let operator = if !l.intersects(ml[k]) {
                        Operator::MaxL
                    } else if !u.intersects(mu[k]) {
                        Operator::MinU
                    } else {
                        continue;
                    };
                    return Some(Violation { operator, left: (a1, a2), right: (b1, b2) });
                }
            }
        }
    }
    None
}

pub fn is_congruence(p: &Poset, theta: &EquivRelation) -> bool {
    theta.universe() == p.len() && congruence_violation(p, theta).is_none()
}

/// Calls `visit` with every partition of `p` into nonempty closed intervals.
pub fn for_each_interval_partition(p: &Poset, mut visit: impl FnMut(&[ElementSet])) {
    let mut blocks = Vec::new();
    interval_partitions(p, p.elements(), &mut blocks, &mut visit);
}

fn interval_partitions(
    p: &Poset,
    rest: ElementSet,
    blocks: &mut Vec<ElementSet>,
    visit: &mut impl FnMut(&[ElementSet]),
) {
    // the block of the smallest uncovered element is chosen next, so each
    // partition is produced exactly once
    let Some(x) = rest.first() else {
        visit(blocks);
        return;
    };
    for b in p.down(x).intersection(rest) {
        for c in p.up(x).intersection(rest) {
            let iv = p.interval(b, c);
            if iv.is_subset(rest) {
                blocks.push(iv);
                interval_partitions(p, rest.difference(iv), blocks, visit);
                blocks.pop();
            }
        }
    }
}

/// All congruences of `p`.
pub fn enumerate_congruences(p: &Poset) -> ConFamily {
    let n = p.len();
    let mut found = Vec::new();
    for_each_interval_partition(p, |blocks| {
        let theta = EquivRelation::from_classes(n, blocks).expect("interval blocks partition P");
        if is_congruence(p, &theta) {
            found.push(theta);
        }
    });
    ConFamily::new(found)
}

/// Calls `visit` with every set partition of `{0..n}` as a restricted
/// growth string.
pub fn for_each_set_partition(n: usize, mut visit: impl FnMut(&[usize])) {
    fn grow(i: usize, blocks: usize, rgs: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if i == rgs.len() {
            visit(rgs);
            return;
        }
        for b in 0..=blocks {
            rgs[i] = b;
            grow(i + 1, blocks.max(b + 1), rgs, visit);
        }
    }
    let mut rgs = vec![0; n];
    if n == 0 {
        visit(&rgs);
        return;
    }
    grow(1, 1, &mut rgs, &mut visit);
}

/// All congruences of `p`, by filtering every set partition. Refuses posets
/// larger than `limit`.
pub fn enumerate_congruences_bruteforce(p: &Poset, limit: usize) -> Result<ConFamily> {
    if p.len() > limit {
        return Err(Error::TooLargeForBruteForce { size: p.len(), limit });
    }
    let mut found = Vec::new();
    for_each_set_partition(p.len(), |rgs| {
        let theta = EquivRelation::from_class_ids(rgs);
        if is_congruence(p, &theta) {
            found.push(theta);
        }
    });
    Ok(ConFamily::new(found))
}

fn require_congruence(p: &Poset, theta: &EquivRelation) -> Result<()> {
    if is_congruence(p, theta) {
        Ok(())
    } else {
        Err(Error::NotCongruence)
    }
}

/// Least and greatest element of `[a]Θ`.
pub fn class_interval_bounds(p: &Poset, theta: &EquivRelation, a: usize) -> Result<(usize, usize)> {
    require_congruence(p, theta)?;
    let class = theta.class(a);
    match (p.least_of(class), p.greatest_of(class)) {
        (Some(lo), Some(hi)) => Ok((lo, hi)),
        // a congruence class of a finite poset always has both
        _ => Err(Error::NotCongruence),
    }
}

/// `[1]Θ`.
pub fn kernel(p: &Poset, theta: &EquivRelation) -> Result<ElementSet> {
    let top = p.top().ok_or(Error::NoTop)?;
    Ok(theta.class(top))
}

/// `P/Θ` ordered by least elements, with the embedding `A ↦ ⋀A`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub poset: Poset,
    /// `least[k]` is the smallest element of class `k`.
    pub least: Vec<usize>,
    /// `greatest[k]` is the largest element of class `k`.
    pub greatest: Vec<usize>,
}

impl Quotient {
    /// Whether ordering the classes by their greatest elements gives the
    /// same relation as ordering by least elements.
    pub fn greatest_order_agrees(&self, p: &Poset) -> bool {
        let k = self.least.len();
        (0..k).all(|i| (0..k).all(|j| p.leq(self.least[i], self.least[j]) == p.leq(self.greatest[i], self.greatest[j])))
    }
}

pub fn quotient_poset(p: &Poset, theta: &EquivRelation) -> Result<Quotient> {
    require_congruence(p, theta)?;
    let mut least = Vec::new();
    let mut greatest = Vec::new();
    let mut labels = Vec::new();
    for &c in theta.classes() {
        let lo = p.least_of(c).ok_or(Error::NotCongruence)?;
        let hi = p.greatest_of(c).ok_or(Error::NotCongruence)?;
        least.push(lo);
        greatest.push(hi);
        labels.push(format!("[{},{}]", p.label(lo), p.label(hi)));
    }
    let leq: Vec<Vec<bool>> = least.iter().map(|&a| least.iter().map(|&b| p.leq(a, b)).collect()).collect();
    let poset = Poset::from_matrix(labels, &leq)?;
    Ok(Quotient { poset, least, greatest })
}

/// `Θ ∩ ≤`, the comparable pairs of `Θ`.
pub fn comparable_part(p: &Poset, theta: &EquivRelation) -> Relation {
    Relation::from_pairs(p.len(), theta.to_relation().pairs().filter(|&(x, y)| p.leq(x, y)).collect::<Vec<_>>())
}

/// Whether `Θ` and `Φ` agree on comparable pairs.
pub fn determined_by_comparable_pairs(p: &Poset, theta: &EquivRelation, phi: &EquivRelation) -> bool {
    comparable_part(p, theta) == comparable_part(p, phi)
}

/// Nonempty and upward closed.
pub fn is_filter(p: &Poset, f: ElementSet) -> bool {
    !f.is_empty() && p.is_up_set(f)
}

/// A filter in which every two members have a common lower bound inside it.
pub fn is_strong_filter(p: &Poset, f: ElementSet) -> bool {
    is_filter(p, f) && f.iter().all(|x| f.iter().all(|y| p.down(x).intersection(p.down(y)).intersects(f)))
}

/// All filters of `p`, in increasing order of their bitmasks.
pub fn filters(p: &Poset) -> Vec<ElementSet> {
    // process elements top-down so an element may join only after its
    // whole up-set has
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&x| p.up(x).len());
    let mut out = Vec::new();
    fn walk(p: &Poset, order: &[usize], i: usize, chosen: ElementSet, out: &mut Vec<ElementSet>) {
        if i == order.len() {
            if !chosen.is_empty() {
                out.push(chosen);
            }
            return;
        }
        let x = order[i];
        walk(p, order, i + 1, chosen, out);
        if p.up(x).difference(ElementSet::singleton(x)).is_subset(chosen) {
            walk(p, order, i + 1, chosen.with(x), out);
        }
    }
    walk(p, &order, 0, ElementSet::EMPTY, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optable::{compatible, OpTable};

    fn fig1() -> Poset {
        Poset::from_covers(
            &["0", "a", "b", "c", "d", "1"],
            &[("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
        )
        .unwrap()
    }

    fn eq_of(p: &Poset, blocks: &[&[&str]]) -> EquivRelation {
        let blocks: Vec<ElementSet> = blocks.iter().map(|b| p.set_of(b).unwrap()).collect();
        EquivRelation::from_classes(p.len(), &blocks).unwrap()
    }

    fn theta5(p: &Poset) -> EquivRelation {
        eq_of(p, &[&["0", "a"], &["b", "c", "d", "1"]])
    }

    #[test]
    fn trivial_congruences() {
        let p = fig1();
        assert!(is_congruence(&p, &EquivRelation::delta(6)));
        assert!(is_congruence(&p, &EquivRelation::nabla(6)));
    }

    #[test]
    fn theta1_is_a_congruence() {
        let p = fig1();
        let t1 = eq_of(&p, &[&["0", "a"], &["b", "c"], &["d", "1"]]);
        assert!(is_congruence(&p, &t1));
    }

    #[test]
    fn gluing_a_and_b_is_not() {
        let p = fig1();
        let t = eq_of(&p, &[&["0"], &["a", "b"], &["c"], &["d"], &["1"]]);
        assert!(!is_congruence(&p, &t));
        assert!(congruence_violation(&p, &t).is_some());
    }

    #[test]
    fn fast_check_matches_generic_compatibility() {
        let p = fig1();
        let (ml, mu) = (OpTable::max_l(&p), OpTable::min_u(&p));
        for_each_set_partition(6, |rgs| {
            let t = EquivRelation::from_class_ids(rgs);
            let r = t.to_relation();
            assert_eq!(is_congruence(&p, &t), compatible(&r, &ml) && compatible(&r, &mu));
        });
    }

    #[test]
    fn fig1_has_ten_congruences() {
        let p = fig1();
        let fam = enumerate_congruences(&p);
        assert_eq!(fam.len(), 10);
        assert_eq!(fam, enumerate_congruences_bruteforce(&p, 10).unwrap());
    }

    #[test]
    fn two_chain_and_singleton() {
        let chain = Poset::from_covers(&["0", "1"], &[("0", "1")]).unwrap();
        assert_eq!(enumerate_congruences(&chain).len(), 2);
        let one = Poset::from_covers(&["x"], &[] as &[(&str, &str)]).unwrap();
        let fam = enumerate_congruences(&one);
        assert_eq!(fam.len(), 1);
        assert!(fam.get(0).is_delta() && fam.get(0).is_nabla());
    }

    #[test]
    fn antichain_has_no_congruences() {
        // Max L of two incomparable minimal elements is empty, so even Δ has
        // no witness.
        let p = Poset::from_covers(&["x", "y", "z"], &[] as &[(&str, &str)]).unwrap();
        assert!(enumerate_congruences(&p).is_empty());
        assert!(enumerate_congruences_bruteforce(&p, 10).unwrap().is_empty());
    }

    #[test]
    fn bruteforce_guard() {
        let p = fig1();
        assert_eq!(enumerate_congruences_bruteforce(&p, 5), Err(Error::TooLargeForBruteForce { size: 6, limit: 5 }));
    }

    #[test]
    fn bell_numbers() {
        for (n, bell) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203), (7, 877)] {
            let mut count = 0;
            for_each_set_partition(n, |_| count += 1);
            assert_eq!(count, bell, "B({n})");
        }
    }

    #[test]
    fn bounds_and_kernels() {
        let p = fig1();
        let t5 = theta5(&p);
        let c = p.index_of("c").unwrap();
        assert_eq!(class_interval_bounds(&p, &t5, c), Ok((2, 5)));
        assert_eq!(class_interval_bounds(&p, &EquivRelation::delta(6), 3), Ok((3, 3)));
        assert_eq!(kernel(&p, &t5), Ok(p.set_of(&["b", "c", "d", "1"]).unwrap()));
        assert_eq!(kernel(&p, &EquivRelation::delta(6)), Ok(ElementSet::singleton(5)));
        let bad = eq_of(&p, &[&["0", "c"], &["a"], &["b"], &["d"], &["1"]]);
        assert_eq!(class_interval_bounds(&p, &bad, 0), Err(Error::NotCongruence));
        let chainless = Poset::from_covers(&["x", "y"], &[] as &[(&str, &str)]).unwrap();
        assert_eq!(kernel(&chainless, &EquivRelation::delta(2)), Err(Error::NoTop));
    }

    #[test]
    fn quotients() {
        let p = fig1();
        let q = quotient_poset(&p, &theta5(&p)).unwrap();
        assert_eq!(q.poset.labels(), &["[0,a]", "[b,1]"]);
        assert!(q.poset.lt(0, 1));
        assert!(q.greatest_order_agrees(&p));

        let t1 = eq_of(&p, &[&["0", "a"], &["b", "c"], &["d", "1"]]);
        let q1 = quotient_poset(&p, &t1).unwrap();
        let chain3 = Poset::from_covers(&["x", "y", "z"], &[("x", "y"), ("y", "z")]).unwrap();
        assert!(q1.poset.is_order_isomorphic(&chain3));

        let qd = quotient_poset(&p, &EquivRelation::delta(6)).unwrap();
        assert!(qd.poset.is_order_isomorphic(&p));
    }

    #[test]
    fn comparable_pairs_distinguish() {
        let p = fig1();
        let t5 = theta5(&p);
        let t8 = eq_of(&p, &[&["0", "b"], &["a", "c", "d", "1"]]);
        assert!(determined_by_comparable_pairs(&p, &t5, &t5));
        assert!(!determined_by_comparable_pairs(&p, &t5, &t8));
    }

    #[test]
    fn filter_kinds() {
        let p = fig1();
        let cd1 = p.set_of(&["c", "d", "1"]).unwrap();
        assert!(is_filter(&p, cd1));
        assert!(!is_strong_filter(&p, cd1));
        assert!(is_strong_filter(&p, ElementSet::singleton(5)));
        assert!(is_strong_filter(&p, p.set_of(&["b", "c", "d", "1"]).unwrap()));
        assert!(!is_filter(&p, ElementSet::EMPTY));
        assert!(!is_filter(&p, p.set_of(&["c"]).unwrap()));
    }

    #[test]
    fn filter_enumeration_matches_subset_scan() {
        let p = fig1();
        let brute: Vec<ElementSet> = (1u64..64).map(ElementSet::from_bits).filter(|&s| is_filter(&p, s)).collect();
        assert_eq!(filters(&p), brute);
    }
}
