//! Random posets for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::boolean::is_boolean;
use crate::poset::Poset;
use crate::set::ElementSet;

/// A random poset on `n` elements: each pair `i < j` (by index) is related
/// with probability `density`, then closed transitively.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Poset {
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    Poset::from_matrix(labels, &random_order(rng, n, density)).expect("index-increasing relation is acyclic")
}

#[allow(clippy::needless_range_loop)]
fn random_order<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Vec<Vec<bool>> {
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        leq[i][i] = true;
        for j in i + 1..n {
            leq[i][j] = rng.gen_bool(density);
        }
    }
    // indices only grow along edges, so closing in reverse index order suffices
    for i in (0..n).rev() {
        for j in i + 1..n {
            if leq[i][j] {
                for k in j + 1..n {
                    if leq[j][k] {
                        leq[i][k] = true;
                    }
                }
            }
        }
    }
    leq
}

/// A random poset on `inner` elements with a bottom `0` and top `1` added.
pub fn random_bounded_poset<R: Rng + ?Sized>(rng: &mut R, inner: usize, density: f64) -> Poset {
    let core = random_order(rng, inner, density);
    let mut labels = vec!["0".to_string()];
    labels.extend((0..inner).map(|i| format!("x{i}")));
    labels.push("1".to_string());
    let n = labels.len();
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i == 0 || j == n - 1 || (i < n - 1 && j > 0 && core[i - 1][j - 1])).collect())
        .collect();
    Poset::from_matrix(labels, &leq).expect("bounded extension of a poset")
}

/// The Boolean lattice on `k` atoms, elements labelled by their atom sets.
pub fn boolean_lattice(k: usize) -> Poset {
    let n = 1usize << k;
    let label = |s: usize| {
        if s == 0 {
            "0".to_string()
        } else if s == n - 1 {
            "1".to_string()
        } else {
            (0..k).filter(|b| s >> b & 1 == 1).map(|b| (b'a' + b as u8) as char).collect()
        }
    };
    let labels = (0..n).map(label).collect();
    let leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i & j == i).collect()).collect();
    Poset::from_matrix(labels, &leq).expect("subset order")
}

/// Removes random complementary pairs `{x, x'}` from the Boolean lattice on
/// `k` atoms, keeping the result only if it is still Boolean. Gives up and
/// returns the full lattice after a bounded number of attempts.
pub fn random_boolean_poset<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Poset {
    let full = boolean_lattice(k);
    let n = full.len();
    // pair each middle element with its bitwise complement, smaller first
    let mut pairs: Vec<(usize, usize)> = (1..n - 1).filter(|&x| x < n - 1 - x).map(|x| (x, n - 1 - x)).collect();
    for _ in 0..64 {
        pairs.shuffle(rng);
        let remove = rng.gen_range(1..=pairs.len().max(1));
        let mut keep = full.elements();
        for &(x, y) in pairs.iter().take(remove) {
            keep.remove(x);
            keep.remove(y);
        }
        let candidate = full.induced(keep).expect("induced sub-poset");
        if candidate.len() > 2 && is_boolean(&candidate) {
            return candidate;
        }
    }
    full
}

/// A random subset of `p`'s elements.
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, p: &Poset) -> ElementSet {
    p.elements().iter().filter(|_| rng.gen_bool(0.5)).collect()
}
