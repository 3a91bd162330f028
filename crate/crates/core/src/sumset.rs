//! Sumsets in `Z_n` on bitmasks: pairwise sums by word rotation, h-fold sums
//! by binary doubling, and exact counting of additive tuples.

use crate::error::{Error, Result};
use crate::group::{or_rotated, ResidueSet, SumPair};

/// `A + B`. Rotates the larger operand once per member of the smaller one.
pub fn pairwise_sumset(a: &ResidueSet, b: &ResidueSet) -> Result<ResidueSet> {
    let n = a.modulus();
    if n != b.modulus() {
        return Err(Error::ModulusMismatch {
            left: n,
            right: b.modulus(),
        });
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut words = vec![0u64; large.words().len()];
    for s in small.iter() {
        or_rotated(&mut words, large.words(), s, n);
    }
    Ok(ResidueSet::from_words(n, words))
}

/// `hA`, the set of sums of `h` (not necessarily distinct) members of `A`.
pub fn h_fold_sumset(a: &ResidueSet, h: u64) -> Result<ResidueSet> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    if a.is_empty() {
        return Ok(a.clone());
    }
    let mut acc: Option<ResidueSet> = None;
    let mut power = a.clone();
    let mut rest = h;
    loop {
        if rest & 1 == 1 {
            acc = Some(match acc {
                None => power.clone(),
                Some(s) => pairwise_sumset(&s, &power)?,
            });
        }
        rest >>= 1;
        if rest == 0 {
            break;
        }
        // Once a partial sumset fills the group every larger one does too.
        if power.is_full() {
            return Ok(power);
        }
        power = pairwise_sumset(&power, &power)?;
    }
    Ok(acc.expect("h >= 1 sets at least one bit"))
}

/// Whether `kA` and `lA` are disjoint.
pub fn is_kl_sumfree(a: &ResidueSet, k: u64, l: u64) -> Result<bool> {
    SumPair::new(k, l)?;
    if a.is_empty() {
        return Ok(true);
    }
    let ka = h_fold_sumset(a, k)?;
    if ka.is_full() {
        return Ok(false);
    }
    let la = h_fold_sumset(a, l)?;
    ka.is_disjoint(&la)
}

/// Smallest element of `kA ∩ lA`, if any.
pub fn first_collision(a: &ResidueSet, k: u64, l: u64) -> Result<Option<u64>> {
    SumPair::new(k, l)?;
    if a.is_empty() {
        return Ok(None);
    }
    let ka = h_fold_sumset(a, k)?;
    let la = h_fold_sumset(a, l)?;
    Ok(ka.intersection(&la)?.min())
}

/// Whether `kA` and `lA` partition the group. Fails with
/// [`Error::NotSumFree`] when they overlap.
pub fn is_complete(a: &ResidueSet, k: u64, l: u64) -> Result<bool> {
    SumPair::new(k, l)?;
    if a.is_empty() {
        return Ok(false);
    }
    let ka = h_fold_sumset(a, k)?;
    let la = h_fold_sumset(a, l)?;
    if !ka.is_disjoint(&la)? {
        return Err(Error::NotSumFree { k, l });
    }
    Ok(ka.union(&la)?.is_full())
}

/// Number of `k`-tuples from `A` whose sum lies in `A`.
///
/// Iterates the cyclic convolution of representation counts with the
/// indicator of `A`; all arithmetic is exact and overflow-checked.
pub fn count_additive_tuples(a: &ResidueSet, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::ZeroFold);
    }
    let n = a.modulus() as usize;
    let members: Vec<usize> = a.iter().map(|x| x as usize).collect();
    let mut counts = vec![0u64; n];
    for &x in &members {
        counts[x] = 1;
    }
    for _ in 1..k {
        let mut next = vec![0u64; n];
        for (x, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &y in &members {
                let z = if x + y >= n { x + y - n } else { x + y };
                next[z] = next[z]
                    .checked_add(c)
                    .ok_or(Error::Overflow("additive tuple count"))?;
            }
        }
        counts = next;
    }
    members.iter().try_fold(0u64, |acc, &x| {
        acc.checked_add(counts[x])
            .ok_or(Error::Overflow("additive tuple count"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{dilate, Interval};
    use crate::arith::gcd;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn set(n: u64, xs: &[u64]) -> ResidueSet {
        ResidueSet::from_residues(n, xs.iter().copied()).unwrap()
    }

    /// Independent reference: every h-tuple of members, summed with `%`.
    fn naive_h_fold(a: &ResidueSet, h: u64) -> ResidueSet {
        let n = a.modulus();
        let members = a.to_vec();
        let mut acc: BTreeSet<u64> = BTreeSet::from([0]);
        for _ in 0..h {
            let mut next = BTreeSet::new();
            for s in &acc {
                for x in &members {
                    next.insert((s + x) % n);
                }
            }
            acc = next;
        }
        set(n, &acc.into_iter().collect::<Vec<_>>())
    }

    #[test]
    fn pairwise_examples() {
        assert_eq!(pairwise_sumset(&set(9, &[1, 2]), &set(9, &[1, 2])).unwrap(), set(9, &[2, 3, 4]));
        let b = set(9, &[0, 4, 8]);
        assert!(pairwise_sumset(&set(9, &[]), &b).unwrap().is_empty());
        assert_eq!(pairwise_sumset(&set(9, &[0]), &b).unwrap(), b);
        assert_eq!(
            pairwise_sumset(&set(9, &[0]), &set(8, &[0])),
            Err(Error::ModulusMismatch { left: 9, right: 8 })
        );
    }

    #[test]
    fn h_fold_examples() {
        let a = set(9, &[1, 2]);
        assert_eq!(h_fold_sumset(&a, 5).unwrap(), set(9, &[5, 6, 7, 8, 0, 1]));
        assert_eq!(h_fold_sumset(&a, 2).unwrap(), set(9, &[2, 3, 4]));
        assert_eq!(h_fold_sumset(&set(12, &[0]), 7).unwrap(), set(12, &[0]));
        assert_eq!(h_fold_sumset(&a, 0), Err(Error::ZeroFold));
        assert!(h_fold_sumset(&set(5, &[]), 3).unwrap().is_empty());
    }

    #[test]
    fn h_fold_of_interval_is_interval() {
        for d in 2..40u64 {
            for m in 1..=d {
                for h in 1..6u64 {
                    let len = h * (m - 1) + 1;
                    if len >= d {
                        continue;
                    }
                    let a = Interval::new(d, 3, m).unwrap().to_set().unwrap();
                    let expect = Interval::new(d, 3 * h, len).unwrap().to_set().unwrap();
                    assert_eq!(h_fold_sumset(&a, h).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn sumfree_examples() {
        assert!(is_kl_sumfree(&set(9, &[1, 2]), 5, 2).unwrap());
        assert!(is_kl_sumfree(&set(9, &[]), 5, 2).unwrap());
        assert!(!is_kl_sumfree(&set(9, &[0]), 5, 2).unwrap());
        assert!(is_kl_sumfree(&set(9, &[1]), 2, 2).is_err());
        assert_eq!(first_collision(&set(9, &[0]), 5, 2).unwrap(), Some(0));
        assert_eq!(first_collision(&set(9, &[1, 2]), 5, 2).unwrap(), None);
    }

    #[test]
    fn completeness_examples() {
        assert!(is_complete(&set(9, &[1, 2]), 5, 2).unwrap());
        assert!(!is_complete(&set(5, &[1]), 2, 1).unwrap());
        assert!(!is_complete(&set(3, &[]), 2, 1).unwrap());
        assert_eq!(is_complete(&set(3, &[0]), 2, 1), Err(Error::NotSumFree { k: 2, l: 1 }));
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_additive_tuples(&set(7, &[2, 3, 4, 5]), 2).unwrap(), 6);
        for n in 1..12u64 {
            let all = ResidueSet::full(n).unwrap();
            assert_eq!(count_additive_tuples(&all, 2).unwrap(), n * n);
            assert_eq!(count_additive_tuples(&all, 3).unwrap(), n * n * n);
        }
        assert_eq!(count_additive_tuples(&set(10, &[1, 3, 5, 7, 9]), 2).unwrap(), 0);
        assert_eq!(count_additive_tuples(&set(10, &[1]), 1).unwrap(), 1);
        assert_eq!(count_additive_tuples(&set(10, &[1]), 0), Err(Error::ZeroFold));
    }

    #[test]
    fn kl_minus_l_image_is_interval() {
        // kA + l(-A) for an interval of Z_d is the interval
        // [(k-l)a - l(m-1), (k-l)a + k(m-1)] whenever it does not wrap.
        for d in 3..50u64 {
            for m in 1..=d {
                for (k, l) in [(2u64, 1u64), (3, 1), (3, 2), (5, 2)] {
                    let width = (k + l) * (m - 1) + 1;
                    if width > d {
                        continue;
                    }
                    for a in [0u64, 1, d / 2, d - 1] {
                        let iv = Interval::new(d, a, m).unwrap().to_set().unwrap();
                        let ka = h_fold_sumset(&iv, k).unwrap();
                        let neg_la = h_fold_sumset(&iv.negate(), l).unwrap();
                        let diff = pairwise_sumset(&ka, &neg_la).unwrap();
                        let lo = (k - l) as i64 * a as i64 - (l * (m - 1)) as i64;
                        let expect = ResidueSet::from_integers(d, (0..width as i64).map(|i| lo + i)).unwrap();
                        assert_eq!(diff, expect, "d={d} m={m} a={a} k={k} l={l}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn doubling_matches_naive(n in 1u64..=64, mask in any::<u64>(), h in 1u64..=6) {
            let a = ResidueSet::from_residues(n, (0..n).filter(|i| mask >> i & 1 == 1)).unwrap();
            prop_assert_eq!(h_fold_sumset(&a, h).unwrap(), naive_h_fold(&a, h));
        }

        #[test]
        fn wide_doubling_matches_naive(n in 65u64..=300, xs in proptest::collection::vec(0u64..300, 0..5), h in 1u64..=4) {
            let a = ResidueSet::from_integers(n, xs.iter().map(|&x| x as i64)).unwrap();
            prop_assert_eq!(h_fold_sumset(&a, h).unwrap(), naive_h_fold(&a, h));
        }

        #[test]
        fn unit_dilation_equivariance(n in 2u64..=64, mask in any::<u64>(), u in 1u64..64, h in 1u64..=5) {
            let u = u % n;
            prop_assume!(gcd(u, n) == 1);
            let a = ResidueSet::from_residues(n, (0..n).filter(|i| mask >> i & 1 == 1)).unwrap();
            let lhs = h_fold_sumset(&dilate(&a, u as i64), h).unwrap();
            let rhs = dilate(&h_fold_sumset(&a, h).unwrap(), u as i64);
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(
                is_kl_sumfree(&a, 3, 1).unwrap(),
                is_kl_sumfree(&dilate(&a, u as i64), 3, 1).unwrap()
            );
        }

        #[test]
        fn counting_matches_double_loop(n in 1u64..=32, mask in any::<u32>()) {
            let a = ResidueSet::from_residues(n, (0..n).filter(|i| mask >> i & 1 == 1)).unwrap();
            let members = a.to_vec();
            let mut naive = 0u64;
            for x in &members {
                for y in &members {
                    if a.contains((x + y) % n) {
                        naive += 1;
                    }
                }
            }
            prop_assert_eq!(count_additive_tuples(&a, 2).unwrap(), naive);
        }
    }
}
