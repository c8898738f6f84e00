//! Executable checks of the structural results, run over a single poset.
//!
//! Every registered check produces exactly one line per run. A check whose
//! structure is missing (no top, no `*`, not Boolean) is skipped, never
//! silently dropped.

use std::fmt;

use crate::boolean::{
    boolean_complementation, check_reflexive_compatible_is_boolean_congruence, complements, distributive_violation,
    enumerate_boolean_congruences, filter_kernel_status, is_distributive, kernel_conditions, kernel_exclusion, pixley,
    undefined_join_pairs, weak_regularity, Complementation, DistributiveIdentity, WeakRegularity,
};
use crate::congruence::{
    class_interval_bounds, determined_by_comparable_pairs, enumerate_congruences, enumerate_congruences_bruteforce,
    filters, is_strong_filter, kernel, quotient_poset, DEFAULT_BRUTE_FORCE_LIMIT,
};
use crate::family::ConFamily;
use crate::heyting::{
    check_reflexive_compatible_is_congruence, enumerate_star_congruences, ideal_term_t2, is_closed_under_ideal_terms,
    is_deductive_system, is_star_filter, is_strong_star_filter, kernel_clauses, malcev, strong_filter_congruence,
    StarTable,
};
use crate::optable::{compatible, OpTable};
use crate::poset::Poset;
use crate::relation::{EquivRelation, Relation};
use crate::set::ElementSet;

/// Posets up to this size have every subset examined; larger ones only
/// subsets of at most two elements.
pub const EXHAUSTIVE_SUBSET_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Poset,
    Heyting,
    Boolean,
}

impl Suite {
    fn includes(self, group: Suite) -> bool {
        self == Suite::All || self == group
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    /// Failure witness, skip reason or informational note.
    pub detail: Option<String>,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CHECK {} {}", self.name, self.status)?;
        match (&self.detail, self.status) {
            (Some(d), Status::Fail) => write!(f, " [witness: {d}]"),
            (Some(d), _) => write!(f, " [{d}]"),
            (None, _) => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub subject: String,
    pub results: Vec<CheckResult>,
}

impl CheckReport {
    fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    pub fn passed(&self) -> usize {
        self.count(Status::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Status::Skip)
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        writeln!(
            f,
            "SUMMARY {}: {} passed, {} failed, {} skipped",
            self.subject,
            self.passed(),
            self.failed(),
            self.skipped()
        )
    }
}

enum Outcome {
    Pass(Option<String>),
    Fail(String),
    Skip(String),
}

fn pass() -> Outcome {
    Outcome::Pass(None)
}

fn verdict(failure: Option<String>) -> Outcome {
    failure.map_or(Outcome::Pass(None), Outcome::Fail)
}

/// Everything the checks share, computed once per run.
struct Context<'a> {
    p: &'a Poset,
    family: ConFamily,
    star: Option<StarTable>,
    comp: Option<Complementation>,
}

impl Context<'_> {
    fn tuple(&self, xs: &[usize]) -> String {
        let labels: Vec<&str> = xs.iter().map(|&x| self.p.label(x)).collect();
        format!("({})", labels.join(","))
    }

    fn set(&self, s: ElementSet) -> String {
        self.p.fmt_set(s)
    }

    /// Subsets examined by the cone checks.
    fn subsets(&self) -> Vec<ElementSet> {
        let n = self.p.len();
        if n <= EXHAUSTIVE_SUBSET_LIMIT {
            (0..1u64 << n).map(ElementSet::from_bits).collect()
        } else {
            let mut out = vec![ElementSet::EMPTY];
            for x in 0..n {
                for y in x..n {
                    out.push(ElementSet::singleton(x).with(y));
                }
            }
            out
        }
    }

    /// Reflexive relations for the compatible-relation checks: the
    /// congruences, each congruence with one extra pair, and pairwise
    /// unions and composites of congruences.
    fn reflexive_candidates(&self, family: &ConFamily) -> Vec<Relation> {
        let n = self.p.len();
        let rels: Vec<Relation> = family.members().iter().map(|m| m.to_relation()).collect();
        let mut out = rels.clone();
        for r in &rels {
            for x in 0..n {
                for y in 0..n {
                    if !r.contains(x, y) {
                        let mut extra = r.clone();
                        extra.insert(x, y);
                        out.push(extra);
                    }
                }
            }
        }
        for (i, r) in rels.iter().enumerate() {
            for s in &rels[i + 1..] {
                out.push(r.union(s));
                out.push(r.compose(s));
                out.push(s.compose(r));
            }
        }
        out
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.p.len();
        (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.p.len();
        (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
    }

    fn star_family(&self, star: &StarTable) -> ConFamily {
        enumerate_star_congruences(&self.family, star)
    }

    fn bool_family(&self, comp: &Complementation) -> ConFamily {
        enumerate_boolean_congruences(&self.family, comp)
    }

    fn with_star(&self, f: impl FnOnce(&StarTable) -> Outcome) -> Outcome {
        match &self.star {
            Some(s) => f(s),
            None => Outcome::Skip("not relatively pseudocomplemented".into()),
        }
    }

    fn with_comp(&self, f: impl FnOnce(&Complementation) -> Outcome) -> Outcome {
        match &self.comp {
            Some(c) => f(c),
            None => Outcome::Skip("not Boolean".into()),
        }
    }

    /// Candidate subsets for the deductive-system checks.
    fn candidate_subsets(&self, top: usize) -> Vec<ElementSet> {
        if self.p.len() <= EXHAUSTIVE_SUBSET_LIMIT {
            self.subsets().into_iter().filter(|d| d.contains(top)).collect()
        } else {
            filters(self.p)
        }
    }
}

type CheckFn = fn(&Context) -> Outcome;

const CHECKS: &[(&str, Suite, CheckFn)] = &[
    ("galois-closure", Suite::Poset, galois_closure),
    ("cones-antitone", Suite::Poset, cones_antitone),
    ("extremal-antichains", Suite::Poset, extremal_antichains),
    ("hasse-round-trip", Suite::Poset, hasse_round_trip),
    ("max-l-compatibility-implies-l", Suite::Poset, extremal_compatibility_implies_cone),
    ("enumeration-matches-bruteforce", Suite::Poset, enumeration_matches_bruteforce),
    ("related-pairs-meet-extremal-sets", Suite::Poset, related_pairs_meet_extremal_sets),
    ("classes-convex", Suite::Poset, classes_convex),
    ("classes-are-intervals", Suite::Poset, classes_are_intervals),
    ("class-bounds-monotone", Suite::Poset, class_bounds_monotone),
    ("pairs-within-related-intervals", Suite::Poset, pairs_within_related_intervals),
    ("determined-by-comparable-pairs", Suite::Poset, determined_by_comparable),
    ("class-shifts", Suite::Poset, class_shifts),
    ("kernel-strong-filter", Suite::Poset, kernel_strong_filter),
    ("quotient-embedding", Suite::Poset, quotient_embedding),
    ("star-residuation", Suite::Heyting, star_residuation),
    ("star-unit", Suite::Heyting, star_unit),
    ("star-order", Suite::Heyting, star_order),
    ("star-upper-bound", Suite::Heyting, star_upper_bound),
    ("star-double-residual", Suite::Heyting, star_double_residual),
    ("star-monotone", Suite::Heyting, star_monotone),
    ("star-triple-residual", Suite::Heyting, star_triple_residual),
    ("star-left-residual", Suite::Heyting, star_left_residual),
    ("star-right-residual", Suite::Heyting, star_right_residual),
    ("star-lower-cone", Suite::Heyting, star_lower_cone),
    ("malcev-identities", Suite::Heyting, malcev_identities),
    ("reflexive-compatible-star", Suite::Heyting, reflexive_compatible_star),
    ("kernel-clauses", Suite::Heyting, kernel_clause_check),
    ("star-kernels-deductive", Suite::Heyting, star_kernels_deductive),
    ("ideal-terms-characterize-deductive", Suite::Heyting, ideal_terms_characterize_deductive),
    ("ideal-term-law", Suite::Heyting, ideal_term_law),
    ("deductive-systems-are-star-filters", Suite::Heyting, deductive_systems_are_star_filters),
    ("star-kernels-strong-filters", Suite::Heyting, star_kernels_strong_filters),
    ("strong-filter-congruence", Suite::Heyting, strong_filter_congruence_check),
    ("distributive-identities-agree", Suite::Boolean, distributive_identities_agree),
    ("complement-unique", Suite::Boolean, complement_unique),
    ("pixley-identities", Suite::Boolean, pixley_identities),
    ("reflexive-compatible-boolean", Suite::Boolean, reflexive_compatible_boolean),
    ("related-pairs-reach-kernel", Suite::Boolean, related_pairs_reach_kernel),
    ("kernel-forces-related", Suite::Boolean, kernel_forces_related),
    ("join-criterion", Suite::Boolean, join_criterion),
    ("weak-regularity", Suite::Boolean, weak_regularity_check),
    ("kernel-exclusion-sound", Suite::Boolean, kernel_exclusion_sound),
    ("congruence-properties", Suite::Boolean, congruence_properties_note),
    ("undefined-join-pairs", Suite::Boolean, undefined_join_pairs_note),
];

/// Names of the checks a suite runs, in report order.
pub fn registered(suite: Suite) -> Vec<&'static str> {
    CHECKS.iter().filter(|(_, group, _)| suite.includes(*group)).map(|(name, _, _)| *name).collect()
}

/// Runs every check of `suite` on `p`.
pub fn run_checks(subject: &str, p: &Poset, suite: Suite) -> CheckReport {
    let star = StarTable::derive(p).ok().filter(|s| p.top() == Some(s.top()));
    let ctx = Context { p, family: enumerate_congruences(p), star, comp: boolean_complementation(p) };
    let results = CHECKS
        .iter()
        .filter(|(_, group, _)| suite.includes(*group))
        .map(|&(name, _, check)| {
            let (status, detail) = match check(&ctx) {
                Outcome::Pass(note) => (Status::Pass, note),
                Outcome::Fail(w) => (Status::Fail, Some(w)),
                Outcome::Skip(why) => (Status::Skip, Some(why)),
            };
            CheckResult { name, status, detail }
        })
        .collect();
    CheckReport { subject: subject.to_string(), results }
}

fn galois_closure(ctx: &Context) -> Outcome {
    let p = ctx.p;
    verdict(
        ctx.subsets()
            .into_iter()
            .find(|&a| {
                p.lower_cone(p.upper_cone(p.lower_cone(a))) != p.lower_cone(a)
                    || p.upper_cone(p.lower_cone(p.upper_cone(a))) != p.upper_cone(a)
            })
            .map(|a| ctx.set(a)),
    )
}

fn cones_antitone(ctx: &Context) -> Outcome {
    let p = ctx.p;
    for a in ctx.subsets() {
        for x in p.elements() {
            let b = a.with(x);
            if !p.lower_cone(b).is_subset(p.lower_cone(a)) || !p.upper_cone(b).is_subset(p.upper_cone(a)) {
                return Outcome::Fail(format!("{} ⊆ {}", ctx.set(a), ctx.set(b)));
            }
        }
    }
    pass()
}

fn extremal_antichains(ctx: &Context) -> Outcome {
    let p = ctx.p;
    let antichain = |s: ElementSet| s.iter().all(|x| s.iter().all(|y| x == y || !p.comparable(x, y)));
    verdict(
        ctx.subsets()
            .into_iter()
            .find(|&s| {
                let (mx, mn) = (p.maximal(s), p.minimal(s));
                !(mx.is_subset(s) && mn.is_subset(s) && antichain(mx) && antichain(mn))
                    || (!s.is_empty() && (mx.is_empty() || mn.is_empty()))
            })
            .map(|s| ctx.set(s)),
    )
}

fn hasse_round_trip(ctx: &Context) -> Outcome {
    let p = ctx.p;
    let edges: Vec<(&str, &str)> = p.hasse_edges().iter().map(|&(a, b)| (p.label(a), p.label(b))).collect();
    match Poset::from_covers(p.labels(), &edges) {
        Ok(q) if q == *p && q.hasse_edges() == p.hasse_edges() => pass(),
        Ok(_) => Outcome::Fail("rebuilt order differs".into()),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn extremal_compatibility_implies_cone(ctx: &Context) -> Outcome {
    let p = ctx.p;
    let (max_l, min_u) = (OpTable::max_l(p), OpTable::min_u(p));
    let (lower, upper) = (OpTable::lower(p), OpTable::upper(p));
    let candidates = ctx.reflexive_candidates(&ctx.family);
    for r in &candidates {
        if compatible(r, &max_l) && !compatible(r, &lower) {
            return Outcome::Fail(format!("relation with pairs {:?} (L)", pair_labels(ctx, r)));
        }
        if compatible(r, &min_u) && !compatible(r, &upper) {
            return Outcome::Fail(format!("relation with pairs {:?} (U)", pair_labels(ctx, r)));
        }
    }
    Outcome::Pass(Some(format!("{} relations", candidates.len())))
}

fn pair_labels(ctx: &Context, r: &Relation) -> Vec<String> {
    r.pairs().filter(|(x, y)| x != y).map(|(x, y)| ctx.tuple(&[x, y])).collect()
}

fn enumeration_matches_bruteforce(ctx: &Context) -> Outcome {
    match enumerate_congruences_bruteforce(ctx.p, DEFAULT_BRUTE_FORCE_LIMIT) {
        Err(_) => {
            Outcome::Skip(format!("{} elements exceeds brute-force limit {}", ctx.p.len(), DEFAULT_BRUTE_FORCE_LIMIT))
        }
        Ok(oracle) if oracle == ctx.family => Outcome::Pass(Some(format!("{} congruences", oracle.len()))),
        Ok(oracle) => Outcome::Fail(format!("interval search {} vs brute force {}", ctx.family.len(), oracle.len())),
    }
}

/// First `(member, pair)` of the family violating `bad`.
fn find_in_family(
    ctx: &Context,
    family: &ConFamily,
    mut bad: impl FnMut(&EquivRelation, usize, usize) -> bool,
) -> Option<String> {
    let names = family.names();
    for (i, theta) in family.members().iter().enumerate() {
        for (a, b) in theta.to_relation().pairs() {
            if bad(theta, a, b) {
                return Some(format!("{} {}", names[i], ctx.tuple(&[a, b])));
            }
        }
    }
    None
}

fn related_pairs_meet_extremal_sets(ctx: &Context) -> Outcome {
    let p = ctx.p;
    verdict(find_in_family(ctx, &ctx.family, |theta, a, b| {
        let class = theta.class(a);
        !p.max_l2(a, b).intersects(class) || !p.min_u2(a, b).intersects(class)
    }))
}

fn for_each_class(ctx: &Context, mut bad: impl FnMut(&EquivRelation, ElementSet) -> bool) -> Option<String> {
    let names = ctx.family.names();
    for (i, theta) in ctx.family.members().iter().enumerate() {
        for &c in theta.classes() {
            if bad(theta, c) {
                return Some(format!("{} class {}", names[i], ctx.set(c)));
            }
        }
    }
    None
}

fn classes_convex(ctx: &Context) -> Outcome {
    verdict(for_each_class(ctx, |_, c| !ctx.p.is_convex(c)))
}

fn classes_are_intervals(ctx: &Context) -> Outcome {
    let p = ctx.p;
    verdict(for_each_class(ctx, |theta, c| {
        let a = c.first().expect("classes are nonempty");
        match class_interval_bounds(p, theta, a) {
            Ok((lo, hi)) => p.interval(lo, hi) != c,
            Err(_) => true,
        }
    }))
}

fn class_bounds_monotone(ctx: &Context) -> Outcome {
    let p = ctx.p;
    let names = ctx.family.names();
    for (i, theta) in ctx.family.members().iter().enumerate() {
        let bounds: Vec<(usize, usize)> =
            theta.classes().iter().filter_map(|&c| Some((p.least_of(c)?, p.greatest_of(c)?))).collect();
        for &(a, b) in &bounds {
            for &(c, d) in &bounds {
                if p.leq(a, c) != p.leq(b, d) {
                    return Outcome::Fail(format!(
                        "{} [{},{}] [{},{}]",
                        names[i],
                        p.label(a),
                        p.label(b),
                        p.label(c),
                        p.label(d)
                    ));
                }
            }
        }
    }
    pass()
}

fn pairs_within_related_intervals(ctx: &Context) -> Outcome {
    let p = ctx.p;
    let names = ctx.family.names();
    for (i, theta) in ctx.family.members().iter().enumerate() {
        let rel = theta.to_relation();
        let spans: Vec<ElementSet> = rel.pairs().filter(|&(e, f)| p.leq(e, f)).map(|(e, f)| p.interval(e, f)).collect();
        for (c, d) in ctx.pairs() {
            let covered = spans.iter().any(|s| s.contains(c) && s.contains(d));
            if covered != theta.contains(c, d) {
                return Outcome::Fail(format!("{} {}", names[i], ctx.tuple(&[c, d])));
            }
        }
    }
    pass()
}

fn determined_by_comparable(ctx: &Context) -> Outcome {
    let names = ctx.family.names();
    for (i, theta) in ctx.family.members().iter().enumerate() {
        for (j, phi) in ctx.family.members().iter().enumerate() {
            if determined_by_comparable_pairs(ctx.p, theta, phi) != (i == j) {
                return Outcome::Fail(format!("{} {}", names[i], names[j]));
            }
        }
    }
    pass()
}

fn class_shifts(ctx: &Context) -> Outcome {
    let p = ctx.p;
    let n = p.len();
    verdict(find_in_family(ctx, &ctx.family, |theta, a, c| {
        let target = theta.class(c);
        (0..n).any(|b| {
            let block = theta.class(b);
            (block.intersects(p.up(c)) && !p.max_l2(a, b).intersects(target))
                || (block.intersects(p.down(c)) && !p.min_u2(a, b).intersects(target))
        })
    }))
}

fn kernel_strong_filter(ctx: &Context) -> Outcome {
    let p = ctx.p;
    if p.top().is_none() {
        return Outcome::Skip("no top element".into());
    }
    let names = ctx.family.names();
    for (i, theta) in ctx.family.members().iter().enumerate() {
        let f = kernel(p, theta).expect("top exists");
        let clauses = ctx.pairs().all(|(a, b)| {
            (!(f.contains(a) && f.contains(b)) || p.max_l2(a, b).intersects(f))
                && (!f.contains(b) || p.max_l2(a, b).intersects(theta.class(a)))
                && (!f.contains(a) || p.min_u2(a, b).intersects(f))
        });
        if !clauses || !is_strong_filter(p, f) {
            return Outcome::Fail(format!("{} kernel {}", names[i], ctx.set(f)));
        }
    }
    pass()
}

fn quotient_embedding(ctx: &Context) -> Outcome {
    let p = ctx.p;
    let names = ctx.family.names();
    for (i, theta) in ctx.family.members().iter().enumerate() {
        let ok = quotient_poset(p, theta).is_ok_and(|q| {
            let least: ElementSet = q.least.iter().copied().collect();
            p.induced(least).is_ok_and(|sub| q.poset.is_order_isomorphic(&sub)) && q.greatest_order_agrees(p)
        });
        if !ok {
            return Outcome::Fail(names[i].clone());
        }
    }
    pass()
}

fn star_triples(ctx: &Context, bad: impl Fn(&StarTable, usize, usize, usize) -> bool) -> Outcome {
    ctx.with_star(|s| verdict(ctx.triples().find(|&(a, b, c)| bad(s, a, b, c)).map(|(a, b, c)| ctx.tuple(&[a, b, c]))))
}

fn star_residuation(ctx: &Context) -> Outcome {
    let p = ctx.p;
    star_triples(ctx, |s, a, b, c| {
        let lhs = p.leq(a, s.get(b, c));
        lhs != p.down(a).intersection(p.down(b)).is_subset(p.down(c)) || lhs != p.leq(b, s.get(a, c))
    })
}

fn star_unit(ctx: &Context) -> Outcome {
    star_triples(ctx, |s, a, _, _| s.get(a, a) != s.top() || s.get(s.top(), a) != a)
}

fn star_order(ctx: &Context) -> Outcome {
    let p = ctx.p;
    star_triples(ctx, |s, a, b, _| (s.get(a, b) == s.top()) != p.leq(a, b))
}

fn star_upper_bound(ctx: &Context) -> Outcome {
    let p = ctx.p;
    star_triples(ctx, |s, a, b, _| !p.leq(b, s.get(a, b)))
}

fn star_double_residual(ctx: &Context) -> Outcome {
    let p = ctx.p;
    star_triples(ctx, |s, a, b, _| !p.leq(a, s.get(s.get(a, b), b)))
}

fn star_monotone(ctx: &Context) -> Outcome {
    let p = ctx.p;
    star_triples(ctx, |s, a, b, c| p.leq(a, b) && !(p.leq(s.get(c, a), s.get(c, b)) && p.leq(s.get(b, c), s.get(a, c))))
}

fn star_triple_residual(ctx: &Context) -> Outcome {
    star_triples(ctx, |s, a, b, _| {
        let ab = s.get(a, b);
        s.get(s.get(ab, b), b) != ab
    })
}

fn star_left_residual(ctx: &Context) -> Outcome {
    let p = ctx.p;
    star_triples(ctx, |s, a, b, _| {
        let ab = s.get(a, b);
        p.leq(ab, s.get(s.get(ab, a), b)) != p.leq(s.get(ab, a), s.get(ab, b))
    })
}

fn star_right_residual(ctx: &Context) -> Outcome {
    let p = ctx.p;
    star_triples(ctx, |s, a, b, _| {
        let ab = s.get(a, b);
        p.leq(ab, s.get(s.get(ab, b), a)) != p.leq(s.get(ab, b), s.get(ab, a))
    })
}

fn star_lower_cone(ctx: &Context) -> Outcome {
    let p = ctx.p;
    star_triples(ctx, |s, a, b, _| p.down(a).intersection(p.down(s.get(a, b))) != p.down(a).intersection(p.down(b)))
}

fn malcev_identities(ctx: &Context) -> Outcome {
    let p = ctx.p;
    star_triples(ctx, |s, a, c, _| {
        malcev(p, s, a, a, c) != ElementSet::singleton(c) || malcev(p, s, a, c, c) != ElementSet::singleton(a)
    })
}

fn reflexive_compatible_star(ctx: &Context) -> Outcome {
    ctx.with_star(|s| {
        let candidates = ctx.reflexive_candidates(&ctx.star_family(s));
        let mut applicable = 0;
        for r in &candidates {
            let v = check_reflexive_compatible_is_congruence(ctx.p, s, r).expect("candidates are reflexive");
            if v.hypothesis_holds() {
                applicable += 1;
            }
            if !v.consistent() {
                return Outcome::Fail(format!("relation with pairs {:?}", pair_labels(ctx, r)));
            }
        }
        Outcome::Pass(Some(format!("{applicable} of {} relations compatible", candidates.len())))
    })
}

fn kernel_clause_check(ctx: &Context) -> Outcome {
    ctx.with_star(|s| {
        verdict(ctx.star_family(s).members().iter().find_map(|theta| {
            let k = kernel_clauses(s, theta);
            k.clause_i.or(k.clause_ii).map(|(a, b)| ctx.tuple(&[a, b]))
        }))
    })
}

fn star_kernels_deductive(ctx: &Context) -> Outcome {
    ctx.with_star(|s| {
        verdict(ctx.star_family(s).members().iter().find_map(|theta| {
            let k = kernel(ctx.p, theta).expect("star posets have a top");
            let ok = is_deductive_system(ctx.p, s, k) && is_closed_under_ideal_terms(ctx.p, s, k);
            (!ok).then(|| ctx.set(k))
        }))
    })
}

fn ideal_terms_characterize_deductive(ctx: &Context) -> Outcome {
    ctx.with_star(|s| {
        let candidates = ctx.candidate_subsets(s.top());
        verdict(
            candidates
                .iter()
                .find(|&&d| is_closed_under_ideal_terms(ctx.p, s, d) && !is_deductive_system(ctx.p, s, d))
                .map(|&d| ctx.set(d)),
        )
    })
}

fn ideal_term_law(ctx: &Context) -> Outcome {
    star_triples(ctx, |s, a, _, _| ideal_term_t2(s, a, s.top(), s.top()) != s.top())
}

fn deductive_systems_are_star_filters(ctx: &Context) -> Outcome {
    ctx.with_star(|s| {
        let candidates = ctx.candidate_subsets(s.top());
        verdict(
            candidates
                .iter()
                .find(|&&d| is_deductive_system(ctx.p, s, d) && !is_star_filter(ctx.p, s, d))
                .map(|&d| ctx.set(d)),
        )
    })
}

fn star_kernels_strong_filters(ctx: &Context) -> Outcome {
    ctx.with_star(|s| {
        verdict(ctx.star_family(s).members().iter().find_map(|theta| {
            let k = kernel(ctx.p, theta).expect("star posets have a top");
            (!is_strong_star_filter(ctx.p, s, k)).then(|| ctx.set(k))
        }))
    })
}

fn strong_filter_congruence_check(ctx: &Context) -> Outcome {
    ctx.with_star(|s| {
        let strong: Vec<ElementSet> =
            filters(ctx.p).into_iter().filter(|&f| is_strong_star_filter(ctx.p, s, f)).collect();
        let mut not_congruences = Vec::new();
        for &f in &strong {
            match strong_filter_congruence(ctx.p, s, f) {
                Ok(v) if v.criterion_holds() => {
                    if !v.is_star_congruence {
                        not_congruences.push(ctx.set(f));
                    }
                }
                _ => return Outcome::Fail(ctx.set(f)),
            }
        }
        let mut note = format!("{} strong filters", strong.len());
        if !not_congruences.is_empty() {
            note.push_str(&format!("; not a congruence for {}", not_congruences.join(" ")));
        }
        Outcome::Pass(Some(note))
    })
}

fn distributive_identities_agree(ctx: &Context) -> Outcome {
    let results: Vec<bool> =
        DistributiveIdentity::ALL.iter().map(|&id| distributive_violation(ctx.p, id).is_none()).collect();
    if results.iter().all(|&r| r == results[0]) {
        Outcome::Pass(Some(if results[0] { "distributive" } else { "not distributive" }.into()))
    } else {
        Outcome::Fail(format!("identities hold: {results:?}"))
    }
}

fn complement_unique(ctx: &Context) -> Outcome {
    if !is_distributive(ctx.p) {
        return Outcome::Skip("not distributive".into());
    }
    match complements(ctx.p) {
        Err(_) => Outcome::Skip("not bounded".into()),
        Ok(cs) => verdict(
            cs.iter()
                .enumerate()
                .find(|(_, c)| c.len() > 1)
                .map(|(x, c)| format!("{} has complements {}", ctx.p.label(x), ctx.set(*c))),
        ),
    }
}

fn pixley_identities(ctx: &Context) -> Outcome {
    let p = ctx.p;
    ctx.with_comp(|comp| {
        verdict(
            ctx.triples()
                .find(|&(x, y, z)| {
                    pixley(p, comp, x, z, z) != ElementSet::singleton(x)
                        || pixley(p, comp, x, y, x) != ElementSet::singleton(x)
                        || pixley(p, comp, x, x, z) != ElementSet::singleton(z)
                })
                .map(|(x, y, z)| ctx.tuple(&[x, y, z])),
        )
    })
}

fn reflexive_compatible_boolean(ctx: &Context) -> Outcome {
    ctx.with_comp(|comp| {
        let candidates = ctx.reflexive_candidates(&ctx.bool_family(comp));
        let mut applicable = 0;
        for r in &candidates {
            let v = check_reflexive_compatible_is_boolean_congruence(ctx.p, comp, r).expect("candidates are reflexive");
            if v.hypothesis_holds() {
                applicable += 1;
            }
            if !v.consistent() {
                return Outcome::Fail(format!("relation with pairs {:?}", pair_labels(ctx, r)));
            }
        }
        Outcome::Pass(Some(format!("{applicable} of {} relations compatible", candidates.len())))
    })
}

fn kernel_condition(ctx: &Context, pick: fn(&crate::boolean::KernelConditions) -> Option<(usize, usize)>) -> Outcome {
    ctx.with_comp(|comp| {
        let fam = ctx.bool_family(comp);
        let names = fam.names();
        verdict(fam.members().iter().enumerate().find_map(|(i, theta)| {
            let k = kernel_conditions(ctx.p, comp, theta).expect("Boolean posets are bounded");
            pick(&k).map(|(a, b)| format!("{} {}", names[i], ctx.tuple(&[a, b])))
        }))
    })
}

fn related_pairs_reach_kernel(ctx: &Context) -> Outcome {
    kernel_condition(ctx, |k| k.related_reach_kernel)
}

fn kernel_forces_related(ctx: &Context) -> Outcome {
    kernel_condition(ctx, |k| k.kernel_forces_related)
}

fn join_criterion(ctx: &Context) -> Outcome {
    kernel_condition(ctx, |k| k.join_criterion)
}

fn weak_regularity_check(ctx: &Context) -> Outcome {
    ctx.with_comp(|comp| {
        let fam = ctx.bool_family(comp);
        let names = fam.names();
        let mut applicable = 0;
        for (i, theta) in fam.members().iter().enumerate() {
            for (j, phi) in fam.members().iter().enumerate() {
                match weak_regularity(ctx.p, comp, theta, phi).expect("Boolean posets are bounded") {
                    WeakRegularity::Violated => return Outcome::Fail(format!("{} {}", names[i], names[j])),
                    WeakRegularity::Consistent => applicable += 1,
                    _ => {}
                }
            }
        }
        Outcome::Pass(Some(format!("{applicable} pairs with equal kernels")))
    })
}

fn kernel_exclusion_sound(ctx: &Context) -> Outcome {
    let p = ctx.p;
    ctx.with_comp(|comp| {
        let fam = ctx.bool_family(comp);
        let mut excluded = Vec::new();
        for a in p.elements() {
            let ex = kernel_exclusion(p, Some(comp), a).expect("Boolean posets have a top");
            let f = p.up(a);
            let lower_ok =
                ex.via_lower.is_empty() || filter_kernel_status(p, &ctx.family, f).expect("top exists").is_empty();
            let upper_ok = ex.via_upper.is_empty() || filter_kernel_status(p, &fam, f).expect("top exists").is_empty();
            if !(lower_ok && upper_ok) {
                return Outcome::Fail(format!("[{},1] is a kernel", p.label(a)));
            }
            if ex.excluded() {
                excluded.push(format!("[{},1]", p.label(a)));
            }
        }
        Outcome::Pass(Some(if excluded.is_empty() {
            "no exclusions".into()
        } else {
            format!("excluded {}", excluded.join(" "))
        }))
    })
}

fn congruence_properties_note(ctx: &Context) -> Outcome {
    ctx.with_comp(|comp| {
        let fam = ctx.bool_family(comp);
        let names = fam.names();
        let report = fam.properties();
        let mut notes = Vec::new();
        if let Some(np) = report.non_permuting.first() {
            let (x, y) = np.pairs[0];
            notes.push(format!("non-permutable: {} in {}∘{}", ctx.tuple(&[x, y]), names[np.theta], names[np.phi]));
        }
        if let Some(sc) = report.shared_classes.first() {
            notes.push(format!("non-regular: {} shared by {},{}", ctx.set(sc.class), names[sc.theta], names[sc.phi]));
        }
        if !report.non_uniform.is_empty() {
            let list: Vec<&str> = report.non_uniform.iter().map(|&i| names[i].as_str()).collect();
            notes.push(format!("non-uniform: {}", list.join(",")));
        }
        Outcome::Pass(Some(if notes.is_empty() { "permutable, regular, uniform".into() } else { notes.join("; ") }))
    })
}

fn undefined_join_pairs_note(ctx: &Context) -> Outcome {
    ctx.with_comp(|comp| {
        let pairs = undefined_join_pairs(ctx.p, comp);
        let listed: Vec<String> = pairs.iter().map(|&(x, y)| ctx.tuple(&[x, y])).collect();
        Outcome::Pass(Some(if listed.is_empty() { "none".into() } else { listed.join(" ") }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn every_check_registered_once() {
        let all = registered(Suite::All);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        let parts =
            registered(Suite::Poset).len() + registered(Suite::Heyting).len() + registered(Suite::Boolean).len();
        assert_eq!(parts, all.len());
    }

    #[test]
    fn fig1_passes_without_boolean_checks() {
        let doc = corpus::load("fig1").unwrap();
        let report = run_checks("fig1", &doc.poset, Suite::All);
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.get("star-unit").unwrap().status, Status::Pass);
        assert_eq!(report.get("pixley-identities").unwrap().status, Status::Skip);
        assert_eq!(report.get("distributive-identities-agree").unwrap().status, Status::Pass);
    }

    #[test]
    fn antichain_skips_top_dependent_checks() {
        let doc = corpus::load("antichain2").unwrap();
        let report = run_checks("antichain2", &doc.poset, Suite::All);
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.get("kernel-strong-filter").unwrap().status, Status::Skip);
        assert_eq!(report.get("malcev-identities").unwrap().status, Status::Skip);
    }

    #[test]
    fn report_lines() {
        let r = CheckResult { name: "x", status: Status::Fail, detail: Some("(a,b)".into()) };
        assert_eq!(r.to_string(), "CHECK x FAIL [witness: (a,b)]");
        let r = CheckResult { name: "y", status: Status::Pass, detail: None };
        assert_eq!(r.to_string(), "CHECK y PASS");
    }
}
