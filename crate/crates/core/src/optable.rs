//! Materialized set-valued operators `P^n → 2^P` and compatibility of
//! relations with them.

use crate::poset::Poset;
use crate::relation::Relation;
use crate::set::ElementSet;

/// An `arity`-ary operator stored as a dense table indexed in mixed radix
/// (first argument most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpTable {
    n: usize,
    arity: usize,
    values: Vec<ElementSet>,
}

impl OpTable {
    pub fn from_fn(n: usize, arity: usize, mut f: impl FnMut(&[usize]) -> ElementSet) -> Self {
        assert!(arity >= 1, "operators have positive arity");
        let total = n.pow(arity as u32);
        let mut values = Vec::with_capacity(total);
        let mut args = vec![0usize; arity];
        for _ in 0..total {
            values.push(f(&args));
            for slot in args.iter_mut().rev() {
                *slot += 1;
                if *slot < n {
                    break;
                }
                *slot = 0;
            }
        }
        OpTable { n, arity, values }
    }

    /// Lifts a single-valued operation to singleton-valued form.
    pub fn from_operation(n: usize, arity: usize, mut f: impl FnMut(&[usize]) -> usize) -> Self {
        OpTable::from_fn(n, arity, |args| ElementSet::singleton(f(args)))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, args: &[usize]) -> ElementSet {
        debug_assert_eq!(args.len(), self.arity);
        let idx = args.iter().fold(0, |acc, &a| acc * self.n + a);
        self.values[idx]
    }

    /// `Max L(x, y)`.
    pub fn max_l(p: &Poset) -> Self {
        OpTable::from_fn(p.len(), 2, |a| p.max_l2(a[0], a[1]))
    }

    /// `Min U(x, y)`.
    pub fn min_u(p: &Poset) -> Self {
        OpTable::from_fn(p.len(), 2, |a| p.min_u2(a[0], a[1]))
    }

    /// `L(x, y)`.
    pub fn lower(p: &Poset) -> Self {
        OpTable::from_fn(p.len(), 2, |a| p.down(a[0]).intersection(p.down(a[1])))
    }

    /// `U(x, y)`.
    pub fn upper(p: &Poset) -> Self {
        OpTable::from_fn(p.len(), 2, |a| p.up(a[0]).intersection(p.up(a[1])))
    }
}

/// First pair of argument tuples `(ā, b̄)` with `(a_i, b_i) ∈ R` for which
/// no `a ∈ Q(ā)`, `b ∈ Q(b̄)` satisfy `(a, b) ∈ R`.
///
/// An empty value set `Q(ā)` leaves nothing to pick, so it counts as a
/// violation.
pub fn find_incompatibility(r: &Relation, q: &OpTable) -> Option<(Vec<usize>, Vec<usize>)> {
    let pairs: Vec<(usize, usize)> = r.pairs().collect();
    let mut left = vec![0; q.arity()];
    let mut right = vec![0; q.arity()];
    search(r, q, &pairs, 0, &mut left, &mut right)
}

fn search(
    r: &Relation,
    q: &OpTable,
    pairs: &[(usize, usize)],
    depth: usize,
    left: &mut [usize],
    right: &mut [usize],
) -> Option<(Vec<usize>, Vec<usize>)> {
    if depth == q.arity() {
        let targets = q.get(right);
        let ok = q.get(left).iter().any(|a| r.row(a).intersects(targets));
        return (!ok).then(|| (left.to_vec(), right.to_vec()));
    }
    for &(a, b) in pairs {
        left[depth] = a;
        right[depth] = b;
        if let Some(w) = search(r, q, pairs, depth + 1, left, right) {
            return Some(w);
        }
    }
    None
}

/// Whether `R` is compatible with `Q`, in the existential sense.
pub fn compatible(r: &Relation, q: &OpTable) -> bool {
    find_incompatibility(r, q).is_none()
}

/// Compatibility with a unary operation `x ↦ f[x]`.
pub fn compatible_with_unary(r: &Relation, f: &[usize]) -> bool {
    r.pairs().all(|(a, b)| r.contains(f[a], f[b]))
}
