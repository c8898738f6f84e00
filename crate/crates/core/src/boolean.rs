//! Distributive, complemented and Boolean posets.

use crate::congruence::{is_congruence, kernel};
use crate::error::{Error, Result};
use crate::family::ConFamily;
use crate::heyting::{conclude, malcev_trace, CompatibleRelationVerdict};
use crate::optable::{compatible, compatible_with_unary, OpTable};
use crate::poset::Poset;
use crate::relation::{EquivRelation, Relation};
use crate::set::ElementSet;

/// The four cone-level distributive identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistributiveIdentity {
    /// `L(U(x,y), z) = LU(L(x,z), L(y,z))`
    LowerOfUpper,
    /// `UL(U(x,y), z) = U(L(x,z), L(y,z))`
    UpperLowerOfUpper,
    /// `U(L(x,y), z) = UL(U(x,z), U(y,z))`
    UpperOfLower,
    /// `LU(L(x,y), z) = L(U(x,z), U(y,z))`
    LowerUpperOfLower,
}

impl DistributiveIdentity {
    pub const ALL: [DistributiveIdentity; 4] = [
        DistributiveIdentity::LowerOfUpper,
        DistributiveIdentity::UpperLowerOfUpper,
        DistributiveIdentity::UpperOfLower,
        DistributiveIdentity::LowerUpperOfLower,
    ];

    /// 1-based position in [`Self::ALL`].
    pub fn number(self) -> usize {
        Self::ALL.iter().position(|&i| i == self).unwrap() + 1
    }

    fn sides(self, p: &Poset, x: usize, y: usize, z: usize) -> (ElementSet, ElementSet) {
        let pair_l = |a: usize, b: usize| p.down(a).intersection(p.down(b));
        let pair_u = |a: usize, b: usize| p.up(a).intersection(p.up(b));
        let zs = ElementSet::singleton(z);
        match self {
            DistributiveIdentity::LowerOfUpper => {
                (p.lower_cone(pair_u(x, y).union(zs)), p.lower_cone(p.upper_cone(pair_l(x, z).union(pair_l(y, z)))))
            }
            DistributiveIdentity::UpperLowerOfUpper => {
                (p.upper_cone(p.lower_cone(pair_u(x, y).union(zs))), p.upper_cone(pair_l(x, z).union(pair_l(y, z))))
            }
            DistributiveIdentity::UpperOfLower => {
                (p.upper_cone(pair_l(x, y).union(zs)), p.upper_cone(p.lower_cone(pair_u(x, z).union(pair_u(y, z)))))
            }
            DistributiveIdentity::LowerUpperOfLower => {
                (p.lower_cone(p.upper_cone(pair_l(x, y).union(zs))), p.lower_cone(pair_u(x, z).union(pair_u(y, z))))
            }
        }
    }
}

/// First triple violating `identity`.
pub fn distributive_violation(p: &Poset, identity: DistributiveIdentity) -> Option<(usize, usize, usize)> {
    let n = p.len();
    (0..n).flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z)))).find(|&(x, y, z)| {
        let (l, r) = identity.sides(p, x, y, z);
        l != r
    })
}

pub fn distributive_identity(p: &Poset, identity: DistributiveIdentity) -> bool {
    distributive_violation(p, identity).is_none()
}

pub fn is_distributive(p: &Poset) -> bool {
    distributive_identity(p, DistributiveIdentity::LowerOfUpper)
}

/// Complements of each element: `y` with `U(x, y) = {1}` and `L(x, y) = {0}`.
pub fn complements(p: &Poset) -> Result<Vec<ElementSet>> {
    let (bot, top) = match (p.bottom(), p.top()) {
        (Some(b), Some(t)) => (b, t),
        _ => return Err(Error::NotBounded),
    };
    let one = ElementSet::singleton(top);
    let zero = ElementSet::singleton(bot);
    Ok((0..p.len())
        .map(|x| {
            (0..p.len())
                .filter(|&y| p.up(x).intersection(p.up(y)) == one && p.down(x).intersection(p.down(y)) == zero)
                .collect()
        })
        .collect())
}

/// A complementation `x ↦ x'` of a bounded poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complementation {
    comp: Vec<usize>,
}

impl Complementation {
    pub fn get(&self, x: usize) -> usize {
        self.comp[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.comp
    }
}

/// A complementation if every element has a complement, picking the
/// smallest-index complement where several exist.
pub fn find_complementation(p: &Poset) -> Result<Option<Complementation>> {
    let comps = complements(p)?;
    Ok(comps.iter().map(|c| c.first()).collect::<Option<Vec<_>>>().map(|comp| Complementation { comp }))
}

/// Bounded, distributive and complemented.
pub fn is_boolean(p: &Poset) -> bool {
    matches!(find_complementation(p), Ok(Some(_))) && is_distributive(p)
}

/// The complementation of a Boolean poset, or `None` if `p` is not Boolean.
pub fn boolean_complementation(p: &Poset) -> Option<Complementation> {
    if !is_distributive(p) {
        return None;
    }
    find_complementation(p).ok().flatten()
}

pub fn is_comp_compatible(comp: &Complementation, theta: &EquivRelation) -> bool {
    (0..theta.universe()).all(|a| {
        let here = theta.class_id(comp.get(a));
        theta.class(a).iter().all(|b| theta.class_id(comp.get(b)) == here)
    })
}

pub fn is_boolean_congruence(p: &Poset, comp: &Complementation, theta: &EquivRelation) -> bool {
    is_congruence(p, theta) && is_comp_compatible(comp, theta)
}

pub fn enumerate_boolean_congruences(family: &ConFamily, comp: &Complementation) -> ConFamily {
    family.filter(|t| is_comp_compatible(comp, t))
}

/// `T(x,y,z) = Min U(Max L(x,z), Max L(x,y',z'), Max L(x',y',z))`.
pub fn pixley(p: &Poset, comp: &Complementation, x: usize, y: usize, z: usize) -> ElementSet {
    let triple = |a: usize, b: usize, c: usize| p.max_l(ElementSet::singleton(a).with(b).with(c));
    let (xc, yc, zc) = (comp.get(x), comp.get(y), comp.get(z));
    let args = p.max_l2(x, z).union(triple(x, yc, zc)).union(triple(xc, yc, z));
    p.min_u(args)
}

/// Witnesses `b` for the two sufficient conditions under which `[a, 1]` is
/// not a congruence kernel.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KernelExclusion {
    /// `b` such that every `c ∈ Max L(a, b)` has some `d ∈ U(c) \ [a, 1]`
    /// with `b ∨ d = 1`.
    pub via_lower: Vec<usize>,
    /// `b` such that every `c ∈ Min U(a', b)` has some `d ∈ U(b) \ [a, 1]`
    /// with `c ∨ d = 1`. Empty without a complementation.
    pub via_upper: Vec<usize>,
}

impl KernelExclusion {
    pub fn excluded(&self) -> bool {
        !self.via_lower.is_empty() || !self.via_upper.is_empty()
    }
}

pub fn kernel_exclusion(p: &Poset, comp: Option<&Complementation>, a: usize) -> Result<KernelExclusion> {
    let top = p.top().ok_or(Error::NoTop)?;
    let principal = p.up(a);
    let joins_to_top = |u: usize, v: usize| p.sup(u, v) == Some(top);
    let via_lower = (0..p.len())
        .filter(|&b| p.max_l2(a, b).iter().all(|c| p.up(c).difference(principal).iter().any(|d| joins_to_top(b, d))))
        .collect();
    let via_upper = match comp {
        None => Vec::new(),
        Some(comp) => (0..p.len())
            .filter(|&b| {
                let candidates = p.up(b).difference(principal);
                p.min_u2(comp.get(a), b).iter().all(|c| candidates.iter().any(|d| joins_to_top(c, d)))
            })
            .collect(),
    };
    Ok(KernelExclusion { via_lower, via_upper })
}

/// Indices of the family members whose kernel is `f`.
pub fn filter_kernel_status(p: &Poset, family: &ConFamily, f: ElementSet) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, m) in family.members().iter().enumerate() {
        if kernel(p, m)? == f {
            out.push(i);
        }
    }
    Ok(out)
}

/// Violations of the three kernel conditions for a Boolean congruence.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KernelConditions {
    /// `(a, b) ∈ Θ` with `Min U(a, b') ∩ [1]Θ = ∅`.
    pub related_reach_kernel: Option<(usize, usize)>,
    /// `a ≤ b`, `LU(a, b') ∩ [1]Θ ≠ ∅`, yet `(a, b) ∉ Θ`.
    pub kernel_forces_related: Option<(usize, usize)>,
    /// `a ≤ b` with `a ∨ b'` defined where `(a, b) ∈ Θ` and `a ∨ b' ∈ [1]Θ`
    /// disagree.
    pub join_criterion: Option<(usize, usize)>,
}

impl KernelConditions {
    pub fn holds(&self) -> bool {
        *self == KernelConditions::default()
    }
}

pub fn kernel_conditions(p: &Poset, comp: &Complementation, theta: &EquivRelation) -> Result<KernelConditions> {
    let k = kernel(p, theta)?;
    let n = p.len();
    let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));
    let lu = |a: usize, b: usize| p.lower_cone(p.up(a).intersection(p.up(b)));
    Ok(KernelConditions {
        related_reach_kernel: pairs()
            .filter(|&(a, b)| theta.contains(a, b))
            .find(|&(a, b)| !p.min_u2(a, comp.get(b)).intersects(k)),
        kernel_forces_related: pairs()
            .filter(|&(a, b)| p.leq(a, b) && lu(a, comp.get(b)).intersects(k))
            .find(|&(a, b)| !theta.contains(a, b)),
        join_criterion: pairs()
            .filter(|&(a, b)| p.leq(a, b))
            .find(|&(a, b)| p.sup(a, comp.get(b)).is_some_and(|j| theta.contains(a, b) != k.contains(j))),
    })
}

/// Whether `LU(x, y') ∩ [1]Ψ ≠ ∅` for every `(x, y) ∈ Ψ` with `x ≤ y`.
pub fn kernel_reach_assumption(p: &Poset, comp: &Complementation, psi: &EquivRelation) -> Result<bool> {
    let k = kernel(p, psi)?;
    let n = p.len();
    Ok((0..n).all(|x| {
        (0..n)
            .filter(|&y| p.leq(x, y) && psi.contains(x, y))
            .all(|y| p.lower_cone(p.up(x).intersection(p.up(comp.get(y)))).intersects(k))
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeakRegularity {
    /// Assumption fails for one of the two congruences.
    AssumptionFails,
    KernelsDiffer,
    /// Kernels agree and so do the congruences.
    Consistent,
    /// Kernels agree, assumption holds, congruences differ.
    Violated,
}

pub fn weak_regularity(
    p: &Poset,
    comp: &Complementation,
    theta: &EquivRelation,
    phi: &EquivRelation,
) -> Result<WeakRegularity> {
    if !(kernel_reach_assumption(p, comp, theta)? && kernel_reach_assumption(p, comp, phi)?) {
        return Ok(WeakRegularity::AssumptionFails);
    }
    if kernel(p, theta)? != kernel(p, phi)? {
        return Ok(WeakRegularity::KernelsDiffer);
    }
    Ok(if theta == phi { WeakRegularity::Consistent } else { WeakRegularity::Violated })
}

/// Comparable pairs `x ≤ y` for which `x ∨ y'` does not exist.
pub fn undefined_join_pairs(p: &Poset, comp: &Complementation) -> Vec<(usize, usize)> {
    let n = p.len();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| p.leq(x, y) && p.sup(x, comp.get(y)).is_none())
        .collect()
}

/// Checks that a reflexive relation compatible with `Max L`, `Min U` and `'`
/// is a congruence of the Boolean poset, recording the Pixley steps.
pub fn check_reflexive_compatible_is_boolean_congruence(
    p: &Poset,
    comp: &Complementation,
    r: &Relation,
) -> Result<CompatibleRelationVerdict> {
    if !r.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let max_l = compatible(r, &OpTable::max_l(p));
    let min_u = compatible(r, &OpTable::min_u(p));
    let extra = compatible_with_unary(r, comp.as_slice());
    Ok(conclude(
        p,
        r,
        max_l,
        min_u,
        extra,
        |e| is_boolean_congruence(p, comp, e),
        || malcev_trace(r, |x, y, z| pixley(p, comp, x, y, z)),
    ))
}
