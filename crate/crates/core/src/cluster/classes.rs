//! Bounded breadth-first search of mutation classes up to relabelling.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::matrix::ExchangeMatrix;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        let j = if k % 2 == 0 { i } else { 0 };
        p.swap(j, k - 1);
    }
}

/// Lexicographically minimal row-major form over all vertex relabellings.
pub fn canonical(b: &ExchangeMatrix) -> Vec<i64> {
    permutations(b.n())
        .iter()
        .map(|p| b.relabel(p).rows().concat())
        .min()
        .unwrap_or_default()
}

/// Canonical forms reachable from `b` in at most `depth` mutations.
#[derive(Clone, Debug)]
pub struct MutationClass {
    pub members: BTreeSet<Vec<i64>>,
    /// Whether the last layer still produced new forms.
    pub open_frontier: bool,
}

impl MutationClass {
    pub fn contains(&self, b: &ExchangeMatrix) -> bool {
        self.members.contains(&canonical(b))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn mutation_class(b: &ExchangeMatrix, depth: usize) -> MutationClass {
    let mut members = BTreeSet::new();
    members.insert(canonical(b));
    let mut frontier = vec![b.clone()];
    let mut open_frontier = false;
    for _ in 0..depth {
        let next: Vec<(Vec<i64>, ExchangeMatrix)> = frontier
            .par_iter()
            .flat_map_iter(|m| {
                (0..m.n()).map(move |k| {
                    let t = m.mutate(k).expect("vertex in range");
                    (canonical(&t), t)
                })
            })
            .collect();
        frontier.clear();
        // sequential merge keeps the result independent of scheduling
        for (key, t) in next {
            if members.insert(key) {
                frontier.push(t);
            }
        }
        open_frontier = !frontier.is_empty();
        if frontier.is_empty() {
            break;
        }
    }
    MutationClass {
        members,
        open_frontier,
    }
}

/// Whether `a` reaches the relabelling class of `b` within `depth` mutations.
pub fn mutation_equivalent(a: &ExchangeMatrix, b: &ExchangeMatrix, depth: usize) -> bool {
    a.n() == b.n() && mutation_class(a, depth).contains(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_permutations_visited() {
        let ps = permutations(4);
        assert_eq!(ps.len(), 24);
        let set: BTreeSet<_> = ps.into_iter().collect();
        assert_eq!(set.len(), 24);
    }

    #[test]
    fn relabelled_quivers_share_a_form() {
        let a = ExchangeMatrix::from_arrows(3, &[(0, 1), (1, 2)]);
        let b = ExchangeMatrix::from_arrows(3, &[(2, 0), (0, 1)]);
        assert_eq!(canonical(&a), canonical(&b));
    }

    #[test]
    fn a3_class_has_four_quivers() {
        let a = ExchangeMatrix::from_arrows(3, &[(0, 1), (1, 2)]);
        let c = mutation_class(&a, 6);
        assert!(!c.open_frontier);
        let cycle = ExchangeMatrix::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(c.contains(&cycle));
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn markoff_class_is_a_single_form() {
        let m = ExchangeMatrix::new(vec![vec![0, -2, 2], vec![2, 0, -2], vec![-2, 2, 0]]).unwrap();
        assert_eq!(mutation_class(&m, 6).len(), 1);
    }
}
