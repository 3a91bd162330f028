//! Brute-force ground truth, kept independent of the closed forms.
//!
//! The subset search is a depth-first branch-and-bound over residues in
//! ascending order. Each node carries the partial sumsets `0A, 1A, ..., kA`
//! of the current set; adding `x` updates them with
//! `(i)(A ∪ {x}) = iA ∪ ((i-1)(A ∪ {x}) + x)`, so no sumset is recomputed
//! from scratch. Candidates are the larger residues that keep the set
//! sum-free on their own; a node is cut when even taking all of them cannot
//! beat the incumbent.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{binomial, gcd};
use crate::error::{Error, Result};
use crate::group::{find_progression, AbelianGroup, ArithmeticProgression, ResidueSet, SumPair};
use crate::sumset::{count_additive_tuples, is_kl_sumfree};
use crate::table::{mask_to_vec, GroupTable, SmallCyclic, SmallGroup, MAX_TABLE_ORDER};

pub const DEFAULT_MAX_N: u64 = 40;
pub const DEFAULT_WITNESS_CAP: usize = 100_000;
pub const MAX_AP_MODULUS: u64 = 400;
pub const MAX_CLASSIFY_N: u64 = 30;
pub const MAX_TUPLE_SUBSETS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest group order the subset search accepts (at most 64).
    pub max_n: u64,
    /// Maximum number of witnesses materialized when enumerating.
    pub witness_cap: usize,
    /// Bound-based pruning; turning it off only cuts non-sum-free branches.
    pub prune: bool,
    /// Unit-dilation symmetry reduction for cyclic groups. Ignored when
    /// enumerating.
    pub symmetry: bool,
    /// Split the root branching across the rayon pool.
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_n: DEFAULT_MAX_N,
            witness_cap: DEFAULT_WITNESS_CAP,
            prune: true,
            symmetry: false,
            parallel: false,
        }
    }
}

/// Step classes for progression scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepClass {
    /// Any step.
    Any,
    /// Steps coprime to the modulus; singletons belong here.
    Coprime,
    /// Steps sharing a factor with the modulus, at least two terms.
    NonCoprime,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Instance {
    SumFree { n: u64, k: u64, l: u64 },
    Progression { d: u64, k: u64, l: u64, class: StepClass },
    Tuples { p: u64, k: u64, m: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleResult {
    pub instance: Instance,
    pub optimum: u64,
    /// Extremal sets; possibly truncated, see `total_witnesses`.
    pub witnesses: Vec<ResidueSet>,
    /// Exact number of extremal sets when they were enumerated.
    pub total_witnesses: Option<u64>,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl OracleResult {
    pub fn truncated(&self) -> bool {
        self.total_witnesses
            .is_some_and(|t| t > self.witnesses.len() as u64)
    }
}

/// Outcome of a raw search over a [`SmallGroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub optimum: u64,
    /// Witness masks, in depth-first order of discovery.
    pub masks: Vec<u64>,
    /// Number of optimal sets when enumerating, 1 otherwise.
    pub count: u64,
    pub nodes: u64,
}

struct Searcher<'g, G: SmallGroup> {
    group: &'g G,
    k: usize,
    l: usize,
    enumerate: bool,
    prune: bool,
    cap: usize,
    ceiling: u64,
    best: &'g AtomicU64,
}

#[derive(Default)]
struct Branch {
    best: u64,
    masks: Vec<u64>,
    count: u64,
    nodes: u64,
    seen: bool,
}

impl<G: SmallGroup> Searcher<'_, G> {
    /// Partial sumsets of `A ∪ {x}` given those of `A`.
    fn extend(&self, sums: &[u64], x: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(sums.len());
        out.push(sums[0]);
        for i in 1..sums.len() {
            let prev = out[i - 1];
            out.push(sums[i] | self.group.translate(prev, x));
        }
        out
    }

    /// Whether `A ∪ {y}` stays sum-free, without materializing its sums.
    fn admits(&self, sums: &[u64], y: usize) -> bool {
        let mut prev = sums[0];
        let mut at_l = 0;
        for (i, &s) in sums.iter().enumerate().skip(1) {
            prev = s | self.group.translate(prev, y);
            if i == self.l {
                at_l = prev;
            }
        }
        prev & at_l == 0
    }

    fn filter(&self, sums: &[u64], cand: u64) -> u64 {
        let mut out = 0;
        let mut rest = cand;
        while rest != 0 {
            let y = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.admits(sums, y) {
                out |= 1 << y;
            }
        }
        out
    }

    fn record(&self, branch: &mut Branch, set: u64, size: u64) {
        let global = self.best.load(Ordering::Relaxed);
        if size < global || (branch.seen && size < branch.best) {
            return;
        }
        if !branch.seen || size > branch.best {
            branch.seen = true;
            branch.best = size;
            branch.masks.clear();
            branch.count = 0;
            self.best.fetch_max(size, Ordering::Relaxed);
        } else if !self.enumerate {
            return;
        }
        branch.count += 1;
        if branch.masks.len() < self.cap {
            branch.masks.push(set);
        }
    }

    fn cut(&self, size: u64, cand: u64) -> bool {
        if !self.prune {
            return false;
        }
        let best = self.best.load(Ordering::Relaxed);
        let bound = size + cand.count_ones() as u64;
        if self.enumerate {
            bound < best
        } else {
            bound <= best || best >= self.ceiling
        }
    }

    fn dfs(&self, branch: &mut Branch, set: u64, size: u64, sums: &[u64], cand: u64) {
        branch.nodes += 1;
        self.record(branch, set, size);
        let mut rest = cand;
        while rest != 0 {
            if self.cut(size, rest) {
                return;
            }
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = self.extend(sums, x);
            let next_cand = self.filter(&next, rest);
            self.dfs(branch, set | 1 << x, size + 1, &next, next_cand);
        }
    }
}

/// Maximum (k,l)-sum-free subsets of a small group by exhaustive search.
///
/// `roots` optionally restricts the first chosen element; each root comes
/// with the mask of elements allowed alongside it.
fn search<G: SmallGroup>(
    group: &G,
    k: u64,
    l: u64,
    enumerate: bool,
    config: &OracleConfig,
    roots: Option<Vec<(usize, u64)>>,
) -> SearchOutcome {
    let n = group.order();
    let best = AtomicU64::new(0);
    let searcher = Searcher {
        group,
        k: k as usize,
        l: l as usize,
        enumerate,
        prune: config.prune,
        cap: if enumerate { config.witness_cap } else { 1 },
        // |kA| and |lA| are disjoint and each at least |A|.
        ceiling: n as u64 / 2,
        best: &best,
    };
    let mut base = vec![0u64; searcher.k + 1];
    base[0] = 1; // {0}; element 0 is the identity in both encodings
    let singles = searcher.filter(&base, group.full());

    // Branch on the smallest element of the set (or on the given roots).
    let roots: Vec<(usize, u64)> = roots.unwrap_or_else(|| {
        mask_to_vec(singles)
            .into_iter()
            .map(|x| {
                let x = x as usize;
                let above = if x + 1 >= 64 { 0 } else { group.full() & !((1u64 << (x + 1)) - 1) };
                (x, above)
            })
            .collect()
    });

    let mut empty = Branch::default();
    searcher.record(&mut empty, 0, 0);
    empty.nodes = 1;

    let run = |&(x, allowed): &(usize, u64)| -> Branch {
        let mut branch = Branch::default();
        if singles >> x & 1 == 0 {
            return branch;
        }
        if searcher.cut(0, (allowed & singles) | 1 << x) {
            return branch;
        }
        let sums = searcher.extend(&base, x);
        let cand = searcher.filter(&sums, allowed & singles & !(1u64 << x));
        searcher.dfs(&mut branch, 1 << x, 1, &sums, cand);
        branch
    };
    let branches: Vec<Branch> = if config.parallel {
        roots.par_iter().map(run).collect()
    } else {
        roots.iter().map(run).collect()
    };

    let optimum = best.load(Ordering::Relaxed);
    let mut outcome = SearchOutcome {
        optimum,
        masks: Vec::new(),
        count: 0,
        nodes: 0,
    };
    let cap = searcher.cap;
    for b in std::iter::once(empty).chain(branches) {
        outcome.nodes += b.nodes;
        if !b.seen || b.best != optimum {
            continue;
        }
        outcome.count += b.count;
        for m in b.masks {
            if outcome.masks.len() < cap {
                outcome.masks.push(m);
            }
        }
    }
    if !enumerate {
        outcome.count = outcome.count.min(1);
    }
    outcome
}

/// Roots for the unit-dilation reduction in `Z_n`: some member can be moved
/// to `g = min gcd(a, n)` over the set, and every other member then has
/// `gcd(y, n) >= g`.
fn dilation_roots(n: u64) -> Vec<(usize, u64)> {
    crate::arith::divisors(n)
        .expect("n >= 1")
        .iter()
        .filter(|&g| g < n)
        .map(|g| {
            let allowed = (0..n)
                .filter(|&y| y != 0 && gcd(y, n) >= g)
                .fold(0u64, |m, y| m | 1 << y);
            (g as usize, allowed)
        })
        .collect()
}

fn check_pair(k: u64, l: u64) -> Result<()> {
    SumPair::new(k, l).map(|_| ())
}

/// Exhaustive maximum (k,l)-sum-free search in `Z_n` with the default
/// configuration.
pub fn max_sumfree_bruteforce(n: u64, k: u64, l: u64, enumerate_all: bool) -> Result<OracleResult> {
    max_sumfree_with(n, k, l, enumerate_all, &OracleConfig::default())
}

pub fn max_sumfree_with(
    n: u64,
    k: u64,
    l: u64,
    enumerate_all: bool,
    config: &OracleConfig,
) -> Result<OracleResult> {
    check_pair(k, l)?;
    let cap = config.max_n.min(MAX_TABLE_ORDER);
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if n > cap {
        return Err(Error::InstanceTooLarge(format!("n = {n} exceeds the cap {cap}")));
    }
    let start = Instant::now();
    let group = SmallCyclic::new(n)?;
    let roots = (config.symmetry && !enumerate_all).then(|| dilation_roots(n));
    let out = search(&group, k, l, enumerate_all, config, roots);
    let witnesses = out
        .masks
        .iter()
        .map(|&m| ResidueSet::from_residues(n, mask_to_vec(m)))
        .collect::<Result<Vec<_>>>()?;
    for w in &witnesses {
        if w.len() as u64 != out.optimum || !is_kl_sumfree(w, k, l)? {
            return Err(Error::SelfCheck(format!("oracle witness {w} does not verify")));
        }
    }
    Ok(OracleResult {
        instance: Instance::SumFree { n, k, l },
        optimum: out.optimum,
        witnesses,
        total_witnesses: enumerate_all.then_some(out.count),
        nodes_explored: out.nodes,
        elapsed: start.elapsed(),
    })
}

/// Exhaustive result for a general abelian group, witnesses as masks over
/// the group table's element indices.
#[derive(Debug, Clone)]
pub struct GroupOracleResult {
    pub group: AbelianGroup,
    pub optimum: u64,
    pub witnesses: Vec<u64>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

pub fn max_sumfree_group(
    group: &AbelianGroup,
    k: u64,
    l: u64,
    config: &OracleConfig,
) -> Result<GroupOracleResult> {
    check_pair(k, l)?;
    let n = group.order();
    let cap = config.max_n.min(MAX_TABLE_ORDER);
    if n > cap {
        return Err(Error::InstanceTooLarge(format!("order {n} exceeds the cap {cap}")));
    }
    let start = Instant::now();
    let table = GroupTable::new(group)?;
    let out = search(&table, k, l, false, config, None);
    for &m in &out.masks {
        if m.count_ones() as u64 != out.optimum || !table.is_kl_sumfree(m, k, l) {
            return Err(Error::SelfCheck(format!("group witness {m:#x} does not verify")));
        }
    }
    Ok(GroupOracleResult {
        group: group.clone(),
        optimum: out.optimum,
        witnesses: out.masks,
        nodes_explored: out.nodes,
        elapsed: start.elapsed(),
    })
}

fn class_admits(class: StepClass, d: u64, step: u64) -> bool {
    match class {
        StepClass::Any => true,
        StepClass::Coprime => gcd(step, d) == 1,
        StepClass::NonCoprime => gcd(step, d) > 1,
    }
}

/// Largest (k,l)-sum-free progression in `Z_d` within a step class, by
/// scanning every start and step and testing each candidate through the
/// sumset engine.
pub fn max_ap_bruteforce(d: u64, k: u64, l: u64, class: StepClass) -> Result<OracleResult> {
    check_pair(k, l)?;
    if d == 0 {
        return Err(Error::ZeroModulus);
    }
    if d > MAX_AP_MODULUS {
        return Err(Error::InstanceTooLarge(format!(
            "d = {d} exceeds the cap {MAX_AP_MODULUS}"
        )));
    }
    let start = Instant::now();
    let mut nodes = 0u64;
    let mut best = 0u64;
    let mut witness: Option<ResidueSet> = None;
    let mut sumfree = |p: &ArithmeticProgression| -> Result<bool> {
        nodes += 1;
        is_kl_sumfree(&p.to_set(), k, l)
    };

    // Singletons: step 1 by convention, so they count for `Any` and `Coprime`.
    if class != StepClass::NonCoprime {
        for a in 0..d {
            let p = ArithmeticProgression::new(d, a, 1, 1)?;
            if sumfree(&p)? {
                best = 1;
                witness = Some(p.to_set());
                break;
            }
        }
    }
    // Step b and step d-b give the same sets, read backwards.
    for step in 1..=d / 2 {
        if !class_admits(class, d, step) {
            continue;
        }
        let max_len = d / gcd(step, d);
        for a in 0..d {
            // Sum-freeness is inherited by prefixes: only look further
            // when the next length up already works.
            let mut len = (best + 1).max(2);
            let mut found = None;
            while len <= max_len {
                let p = ArithmeticProgression::new(d, a, step, len)?;
                if !sumfree(&p)? {
                    break;
                }
                found = Some(p);
                len += 1;
            }
            if let Some(p) = found {
                best = p.len();
                witness = Some(p.to_set());
            }
        }
    }
    Ok(OracleResult {
        instance: Instance::Progression { d, k, l, class },
        optimum: best,
        witnesses: witness.into_iter().collect(),
        total_witnesses: None,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// Iterates all `m`-subsets of `{0..n}` as bitmasks in increasing order.
fn combinations(n: u64, m: u64) -> impl Iterator<Item = u64> {
    let first = if m == 0 { 0 } else { (1u64 << m) - 1 };
    let limit = 1u128 << n;
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        if (cur as u128) >= limit || (m == 0 && cur != 0) {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                Some((((r ^ cur) >> 2) / c) | r)
            }
        };
        Some(cur)
    })
}

/// Minimum over all `m`-subsets `A` of `Z_p` of the number of `k`-tuples
/// from `A` summing into `A`; witnesses are all minimizers.
pub fn min_additive_tuples_bruteforce(p: u64, k: u64, m: u64) -> Result<OracleResult> {
    if p == 0 {
        return Err(Error::ZeroModulus);
    }
    if k == 0 || k > 3 {
        return Err(Error::OutOfRange(format!("need 1 <= k <= 3, got {k}")));
    }
    if m == 0 || m > p {
        return Err(Error::OutOfRange(format!("need 1 <= m <= {p}, got {m}")));
    }
    let subsets = binomial(p, m).unwrap_or(u64::MAX);
    if subsets > MAX_TUPLE_SUBSETS || p > MAX_TABLE_ORDER {
        return Err(Error::InstanceTooLarge(format!(
            "C({p},{m}) = {subsets} subsets exceeds {MAX_TUPLE_SUBSETS}"
        )));
    }
    let start = Instant::now();
    let mut best = u64::MAX;
    let mut minimizers = Vec::new();
    let mut nodes = 0u64;
    for mask in combinations(p, m) {
        nodes += 1;
        let set = ResidueSet::from_residues(p, mask_to_vec(mask))?;
        let count = count_additive_tuples(&set, k)?;
        if count < best {
            best = count;
            minimizers.clear();
        }
        if count == best {
            minimizers.push(set);
        }
    }
    let total = minimizers.len() as u64;
    Ok(OracleResult {
        instance: Instance::Tuples { p, k, m },
        optimum: best,
        witnesses: minimizers,
        total_witnesses: Some(total),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub n: u64,
    pub k: u64,
    pub l: u64,
    pub optimum: u64,
    pub all_are_aps: bool,
    pub count: u64,
    /// Maximum sets that are not arithmetic progressions.
    pub exceptions: Vec<ResidueSet>,
}

/// Enumerates every maximum (k,l)-sum-free set of `Z_n` and checks each for
/// progression structure.
pub fn classify_max_sets(n: u64, k: u64, l: u64) -> Result<Classification> {
    check_pair(k, l)?;
    if n > MAX_CLASSIFY_N {
        return Err(Error::InstanceTooLarge(format!(
            "n = {n} exceeds the cap {MAX_CLASSIFY_N}"
        )));
    }
    let config = OracleConfig {
        witness_cap: usize::MAX,
        ..OracleConfig::default()
    };
    let res = max_sumfree_with(n, k, l, true, &config)?;
    let exceptions: Vec<ResidueSet> = res
        .witnesses
        .iter()
        .filter(|s| !s.is_empty() && find_progression(s).is_none())
        .cloned()
        .collect();
    Ok(Classification {
        n,
        k,
        l,
        optimum: res.optimum,
        all_are_aps: exceptions.is_empty(),
        count: res.total_witnesses.unwrap_or(0),
        exceptions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::unit_dilation_between;

    fn set(n: u64, xs: &[u64]) -> ResidueSet {
        ResidueSet::from_residues(n, xs.iter().copied()).unwrap()
    }

    /// Plain enumeration of all 2^n subsets, for tiny n.
    fn power_set_max(n: u64, k: u64, l: u64) -> (u64, u64) {
        let g = SmallCyclic::new(n).unwrap();
        let mut best = 0;
        let mut count = 0;
        for mask in 0..(1u64 << n) {
            if !g.is_kl_sumfree(mask, k, l) {
                continue;
            }
            let size = mask.count_ones() as u64;
            if size > best {
                best = size;
                count = 0;
            }
            if size == best {
                count += 1;
            }
        }
        (best, count)
    }

    #[test]
    fn sumfree_examples() {
        assert_eq!(max_sumfree_bruteforce(9, 5, 2, false).unwrap().optimum, 2);
        let r = max_sumfree_bruteforce(12, 13, 1, true).unwrap();
        assert_eq!(r.optimum, 0);
        assert_eq!(r.witnesses, vec![set(12, &[])]);
        assert_eq!(r.total_witnesses, Some(1));
        let r = max_sumfree_bruteforce(10, 2, 1, true).unwrap();
        assert_eq!(r.optimum, 5);
        assert!(r.witnesses.contains(&set(10, &[1, 3, 5, 7, 9])));
        assert!(matches!(
            max_sumfree_bruteforce(41, 2, 1, false),
            Err(Error::InstanceTooLarge(_))
        ));
    }

    #[test]
    fn search_matches_power_set() {
        for n in 1..=14u64 {
            for (k, l) in [(2, 1), (3, 1), (3, 2), (4, 1), (5, 2), (4, 3)] {
                let (best, count) = power_set_max(n, k, l);
                let r = max_sumfree_bruteforce(n, k, l, true).unwrap();
                assert_eq!(r.optimum, best, "n={n} k={k} l={l}");
                assert_eq!(r.total_witnesses, Some(count), "n={n} k={k} l={l}");
            }
        }
    }

    #[test]
    fn pruning_and_symmetry_preserve_optima() {
        let plain = OracleConfig {
            prune: false,
            ..OracleConfig::default()
        };
        let sym = OracleConfig {
            symmetry: true,
            ..OracleConfig::default()
        };
        let par = OracleConfig {
            parallel: true,
            ..OracleConfig::default()
        };
        for n in (1..=22u64).step_by(3) {
            for (k, l) in [(2, 1), (3, 1), (4, 1), (5, 3)] {
                let base = max_sumfree_with(n, k, l, true, &OracleConfig::default()).unwrap();
                let unpruned = max_sumfree_with(n, k, l, true, &plain).unwrap();
                assert_eq!(base.optimum, unpruned.optimum);
                assert_eq!(base.total_witnesses, unpruned.total_witnesses);
                assert_eq!(base.witnesses, unpruned.witnesses);
                assert_eq!(max_sumfree_with(n, k, l, false, &sym).unwrap().optimum, base.optimum);
                let p = max_sumfree_with(n, k, l, true, &par).unwrap();
                assert_eq!((p.optimum, p.total_witnesses), (base.optimum, base.total_witnesses));
            }
        }
    }

    #[test]
    fn witness_cap_truncates_but_counts() {
        let config = OracleConfig {
            witness_cap: 3,
            ..OracleConfig::default()
        };
        let r = max_sumfree_with(13, 2, 1, true, &config).unwrap();
        let full = max_sumfree_bruteforce(13, 2, 1, true).unwrap();
        assert_eq!(r.witnesses.len(), 3);
        assert!(r.truncated());
        assert_eq!(r.total_witnesses, full.total_witnesses);
    }

    #[test]
    fn progression_examples() {
        assert_eq!(max_ap_bruteforce(9, 5, 2, StepClass::Coprime).unwrap().optimum, 2);
        // The odd residues form a step-2 progression, so alpha(Z_10) = 5
        // while the coprime-step maximum is 3.
        let alpha = max_ap_bruteforce(10, 2, 1, StepClass::Any).unwrap();
        assert_eq!(alpha.optimum, 5);
        assert_eq!(alpha.witnesses[0].to_vec(), vec![1, 3, 5, 7, 9]);
        let beta = max_ap_bruteforce(10, 2, 1, StepClass::NonCoprime).unwrap().optimum;
        let gamma = max_ap_bruteforce(10, 2, 1, StepClass::Coprime).unwrap().optimum;
        assert_eq!((beta, gamma), (5, 3));
        assert_eq!(beta.max(gamma), alpha.optimum);
        for p in [5u64, 7, 11, 13] {
            assert_eq!(max_ap_bruteforce(p, 2, 1, StepClass::NonCoprime).unwrap().optimum, 0);
        }
        assert!(max_ap_bruteforce(401, 2, 1, StepClass::Any).is_err());
    }

    #[test]
    fn tuple_examples() {
        let r = min_additive_tuples_bruteforce(7, 2, 4).unwrap();
        assert_eq!((r.optimum, r.nodes_explored), (6, 35));
        let middle = set(7, &[2, 3, 4, 5]);
        for w in &r.witnesses {
            assert!(unit_dilation_between(w, &middle).is_some());
        }
        assert_eq!(min_additive_tuples_bruteforce(7, 2, 2).unwrap().optimum, 0);
        assert_eq!(min_additive_tuples_bruteforce(5, 2, 5).unwrap().optimum, 25);
        assert!(min_additive_tuples_bruteforce(7, 4, 2).is_err());
        assert!(min_additive_tuples_bruteforce(60, 2, 30).is_err());
    }

    #[test]
    fn combinations_are_complete() {
        assert_eq!(combinations(7, 4).count(), 35);
        assert_eq!(combinations(13, 6).count(), 1716);
        assert_eq!(combinations(5, 5).collect::<Vec<_>>(), vec![0b11111]);
        assert_eq!(combinations(5, 0).collect::<Vec<_>>(), vec![0]);
        assert!(combinations(12, 5).all(|m| m.count_ones() == 5 && m < 1 << 12));
    }

    #[test]
    fn classification_examples() {
        let c = classify_max_sets(11, 3, 1).unwrap();
        assert!(c.all_are_aps);
        let c = classify_max_sets(13, 2, 1).unwrap();
        assert!(!c.all_are_aps);
        assert!(c.exceptions.contains(&set(13, &[4, 6, 7, 9])));
        let c = classify_max_sets(2, 2, 1).unwrap();
        assert_eq!(c.count, 1);
        assert!(c.all_are_aps);
        assert!(classify_max_sets(31, 2, 1).is_err());
    }

    #[test]
    fn group_search_small_cases() {
        let cfg = OracleConfig::default();
        let g = AbelianGroup::new(vec![2, 4]).unwrap();
        assert_eq!(max_sumfree_group(&g, 2, 1, &cfg).unwrap().optimum, 4);
        let g = AbelianGroup::new(vec![3, 3]).unwrap();
        assert_eq!(max_sumfree_group(&g, 2, 1, &cfg).unwrap().optimum, 3);
        assert_eq!(max_sumfree_group(&AbelianGroup::trivial(), 2, 1, &cfg).unwrap().optimum, 0);
    }
}
