//! Evaluation machinery: profile functions, profile-ratio statistics, and
//! Kendall-τ-b agreement between decompositions.

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// The profile of a chain: for every i in 1..=n, the step density of the
/// smallest chain set of size at least i. Piecewise constant on the size
/// intervals of the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    values: Vec<Rational>,
}

impl Profile {
    /// All values, index i at position i−1.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `prof(i)` for 1-based i.
    pub fn value_at(&self, i: usize) -> Result<Rational> {
        if i == 0 || i > self.values.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.values.len(),
            });
        }
        Ok(self.values[i - 1])
    }
}

/// Computes the profile of a chain over a graph with `n` vertices.
pub fn profile(chain: &Chain, n: usize) -> Result<Profile> {
    if chain.universe_size() != n {
        return Err(Error::UniverseMismatch {
            left: chain.universe_size(),
            right: n,
        });
    }
    let sizes = chain.sizes();
    let densities = chain.step_densities();
    let mut values = Vec::with_capacity(n);
    let mut j = 0usize;
    for i in 1..=n {
        while sizes[j] < i {
            j += 1;
        }
        values.push(densities[j]);
    }
    Ok(Profile { values })
}

/// The minimum of per-index profile ratios; +∞ can appear when the
/// reference profile has zero entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileRatio {
    Finite(Rational),
    PlusInfinity,
}

impl ProfileRatio {
    pub fn as_finite(&self) -> Option<Rational> {
        match self {
            ProfileRatio::Finite(r) => Some(*r),
            ProfileRatio::PlusInfinity => None,
        }
    }
}

/// `r(C, B) = min_i prof(i; C) / prof(i; B)`, exactly.
///
/// The paper leaves `prof(i; B) = 0` undefined; by convention indices where
/// both profiles vanish are skipped (they agree exactly), and positive over
/// zero counts as +∞. If every index is skipped the profiles are identically
/// zero and the ratio is 1. Neither case arises when B is the exact chain
/// and C approximates it on a graph with at least one edge.
pub fn profile_ratio(candidate: &Chain, reference: &Chain) -> Result<ProfileRatio> {
    if candidate.universe_size() != reference.universe_size() {
        return Err(Error::UniverseMismatch {
            left: candidate.universe_size(),
            right: reference.universe_size(),
        });
    }
    let n = reference.universe_size();
    let cand = profile(candidate, n)?;
    let refr = profile(reference, n)?;
    let mut min: Option<Rational> = None;
    let mut saw_infinite = false;
    for (c, b) in cand.values().iter().zip(refr.values()) {
        if b.is_zero() {
            if !c.is_zero() {
                saw_infinite = true;
            }
            continue;
        }
        let ratio = *c / *b;
        min = Some(match min {
            Some(m) if m <= ratio => m,
            _ => ratio,
        });
    }
    Ok(match min {
        Some(m) => ProfileRatio::Finite(m),
        None if saw_infinite => ProfileRatio::PlusInfinity,
        None => ProfileRatio::Finite(Rational::ONE),
    })
}

/// Kendall-τ-b between two index assignments over the same vertices:
/// `(P − Q) / sqrt((P + Q + T_a)(P + Q + T_b))` where T_a and T_b count
/// pairs tied only in one assignment. Pair counts are exact integers
/// (discordant pairs via merge sort in O(n log n)); only the final division
/// is floating point, good to 1e-12 at any realistic size.
pub fn kendall_tau_b(a: &[usize], b: &[usize]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len() as u128;
    if n < 2 {
        return Err(Error::DegenerateRanking("fewer than two items"));
    }

    let mut pairs: Vec<(usize, usize)> = a.iter().copied().zip(b.iter().copied()).collect();
    pairs.sort_unstable();

    let pairs_of = |run: u128| run * (run - 1) / 2;
    let count_runs = |items: &[(usize, usize)], key: fn(&(usize, usize)) -> usize| -> u128 {
        let mut total = 0u128;
        let mut run = 1u128;
        for w in items.windows(2) {
            if key(&w[0]) == key(&w[1]) {
                run += 1;
            } else {
                total += pairs_of(run);
                run = 1;
            }
        }
        total + pairs_of(run)
    };

    let tied_a = count_runs(&pairs, |p| p.0);
    let tied_both = {
        let mut total = 0u128;
        let mut run = 1u128;
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                run += 1;
            } else {
                total += pairs_of(run);
                run = 1;
            }
        }
        total + pairs_of(run)
    };

    // discordant pairs = inversions of the b sequence once sorted by (a, b)
    let mut b_seq: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    let swaps = count_inversions(&mut b_seq);

    let sorted_b = {
        let mut bs: Vec<(usize, usize)> = pairs.iter().map(|&(x, y)| (y, x)).collect();
        bs.sort_unstable();
        bs
    };
    let tied_b = count_runs(&sorted_b, |p| p.0);

    let total_pairs = pairs_of(n);
    if tied_a == total_pairs || tied_b == total_pairs {
        return Err(Error::DegenerateRanking("all items tied in one assignment"));
    }

    // P − Q = total − T_a − T_b + T_ab − 2·swaps, all exact
    let concordant_minus_discordant = total_pairs as i128 - tied_a as i128 - tied_b as i128
        + tied_both as i128
        - 2 * swaps as i128;
    // single square root of the product keeps perfect squares exact
    let denom = (((total_pairs - tied_a) as f64) * ((total_pairs - tied_b) as f64)).sqrt();
    Ok((concordant_minus_discordant as f64 / denom).clamp(-1.0, 1.0))
}

/// Stable merge sort counting inversions; ties are not inversions.
fn count_inversions(values: &mut [usize]) -> u128 {
    let n = values.len();
    let mut buf = values.to_vec();
    let mut swaps = 0u128;
    let mut width = 1usize;
    while width < n {
        let mut start = 0usize;
        while start + width < n {
            let mid = start + width;
            let end = (mid + width).min(n);
            let (mut i, mut j, mut k) = (start, mid, start);
            while i < mid || j < end {
                if j >= end || (i < mid && values[i] <= values[j]) {
                    buf[k] = values[i];
                    i += 1;
                } else {
                    buf[k] = values[j];
                    swaps += (mid - i) as u128;
                    j += 1;
                }
                k += 1;
            }
            values[start..end].copy_from_slice(&buf[start..end]);
            start = end;
        }
        width *= 2;
    }
    swaps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::ChainKind;
    use crate::graph::{g1, Graph};

    fn g1_exact_chain(g: &Graph) -> Chain {
        Chain::from_sets(
            g,
            vec![
                g.empty_set(),
                g.set_of(&["a", "b", "c", "d", "e"]),
                g.full_set(),
            ],
            ChainKind::Exact,
        )
    }

    fn g1_core_chain(g: &Graph) -> Chain {
        Chain::from_sets(
            g,
            vec![
                g.empty_set(),
                g.set_of(&["a", "b", "c", "d"]),
                g.set_of(&["a", "b", "c", "d", "e"]),
                g.full_set(),
            ],
            ChainKind::Core,
        )
    }

    #[test]
    fn profile_of_exact_chain() {
        let g = g1();
        let prof = profile(&g1_exact_chain(&g), 6).unwrap();
        let expected = [
            Rational::new(8, 5),
            Rational::new(8, 5),
            Rational::new(8, 5),
            Rational::new(8, 5),
            Rational::new(8, 5),
            Rational::ONE,
        ];
        assert_eq!(prof.values(), &expected);
        assert_eq!(prof.value_at(1).unwrap(), Rational::new(8, 5));
        assert!(prof.value_at(0).is_err());
        assert!(prof.value_at(7).is_err());
    }

    #[test]
    fn profile_of_core_chain_is_non_monotone() {
        let g = g1();
        let prof = profile(&g1_core_chain(&g), 6).unwrap();
        let expected = [
            Rational::new(3, 2),
            Rational::new(3, 2),
            Rational::new(3, 2),
            Rational::new(3, 2),
            Rational::new(2, 1),
            Rational::ONE,
        ];
        assert_eq!(prof.values(), &expected);
    }

    #[test]
    fn single_block_profile_is_constant() {
        let g = Graph::from_unlabeled_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]);
        let chain = Chain::from_sets(&g, vec![g.empty_set(), g.full_set()], ChainKind::Exact);
        let prof = profile(&chain, 4).unwrap();
        assert!(prof.values().iter().all(|&v| v == Rational::new(6, 4)));
    }

    #[test]
    fn ratio_identity_and_core_vs_exact() {
        let g = g1();
        let exact = g1_exact_chain(&g);
        let core = g1_core_chain(&g);
        assert_eq!(
            profile_ratio(&exact, &exact).unwrap(),
            ProfileRatio::Finite(Rational::ONE)
        );
        // min of (3/2)/(8/5) = 15/16, 2/(8/5) = 5/4, 1/1 = 1
        assert_eq!(
            profile_ratio(&core, &exact).unwrap(),
            ProfileRatio::Finite(Rational::new(15, 16))
        );
    }

    #[test]
    fn ratio_on_edgeless_profiles() {
        let g = Graph::from_unlabeled_edges(3, &[]);
        let chain = Chain::from_sets(&g, vec![g.empty_set(), g.full_set()], ChainKind::Exact);
        assert_eq!(
            profile_ratio(&chain, &chain).unwrap(),
            ProfileRatio::Finite(Rational::ONE)
        );
    }

    #[test]
    fn tau_examples() {
        assert_eq!(kendall_tau_b(&[1, 2, 3], &[4, 5, 6]).unwrap(), 1.0);
        assert_eq!(kendall_tau_b(&[1, 2, 3], &[3, 2, 1]).unwrap(), -1.0);
        let tau = kendall_tau_b(&[1, 1, 2], &[1, 2, 2]).unwrap();
        assert!((tau - 0.5).abs() < 1e-12);
    }

    #[test]
    fn tau_degenerate_inputs() {
        assert!(kendall_tau_b(&[1, 1, 1], &[1, 2, 3]).is_err());
        assert!(kendall_tau_b(&[1, 2, 3], &[7, 7, 7]).is_err());
        assert!(kendall_tau_b(&[1], &[1]).is_err());
        assert!(kendall_tau_b(&[1, 2], &[1, 2, 3]).is_err());
    }

    #[test]
    fn tau_is_symmetric_and_relabel_invariant() {
        let a = [1, 3, 2, 2, 4, 1];
        let b = [2, 3, 3, 1, 4, 2];
        let t1 = kendall_tau_b(&a, &b).unwrap();
        let t2 = kendall_tau_b(&b, &a).unwrap();
        assert!((t1 - t2).abs() < 1e-15);
        // strictly monotone relabeling of a: 1->10, 2->20, 3->35, 4->100
        let relabeled: Vec<usize> = a.iter().map(|&x| [0, 10, 20, 35, 100][x]).collect();
        let t3 = kendall_tau_b(&relabeled, &b).unwrap();
        assert!((t1 - t3).abs() < 1e-15);
    }

    #[test]
    fn inversion_counting() {
        let mut v = vec![3, 1, 2];
        assert_eq!(count_inversions(&mut v), 2);
        assert_eq!(v, vec![1, 2, 3]);
        let mut v = vec![1, 1, 1];
        assert_eq!(count_inversions(&mut v), 0);
        let mut v = vec![5, 4, 3, 2, 1];
        assert_eq!(count_inversions(&mut v), 10);
    }
}
