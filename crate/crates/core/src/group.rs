//! Subsets of `Z_n` and the structured sets built from them.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{gcd, mod_inverse};
use crate::error::{Error, Result};

/// Largest modulus a [`ResidueSet`] may carry.
pub const MAX_MODULUS: u64 = 1 << 20;

/// Exponent pair `(k, l)` with `k > l >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SumPair {
    k: u64,
    l: u64,
}

impl SumPair {
    pub fn new(k: u64, l: u64) -> Result<Self> {
        if l == 0 || k <= l {
            return Err(Error::InvalidPair { k, l });
        }
        Ok(SumPair { k, l })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn diff(&self) -> u64 {
        self.k - self.l
    }

    pub fn total(&self) -> u64 {
        self.k + self.l
    }
}

/// A subset of `Z_n` stored as a characteristic bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    n: u64,
    words: Vec<u64>,
}

pub(crate) fn word_count(n: u64) -> usize {
    n.div_ceil(64) as usize
}

/// `dst |= src << s` over a little-endian word vector (bits pushed past the end are dropped).
fn or_shl(dst: &mut [u64], src: &[u64], s: usize) {
    let (ws, bs) = (s / 64, s % 64);
    for i in (ws..dst.len()).rev() {
        let j = i - ws;
        let mut v = src[j] << bs;
        if bs != 0 && j > 0 {
            v |= src[j - 1] >> (64 - bs);
        }
        dst[i] |= v;
    }
}

/// `dst |= src >> s`.
fn or_shr(dst: &mut [u64], src: &[u64], s: usize) {
    let (ws, bs) = (s / 64, s % 64);
    let len = src.len();
    for i in 0..len.saturating_sub(ws) {
        let j = i + ws;
        let mut v = src[j] >> bs;
        if bs != 0 && j + 1 < len {
            v |= src[j + 1] << (64 - bs);
        }
        dst[i] |= v;
    }
}

fn mask_tail(words: &mut [u64], n: u64) {
    let rem = (n % 64) as u32;
    if rem != 0 {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << rem) - 1;
        }
    }
}

/// `dst |= src + s` in `Z_n`; `s` must be reduced.
pub(crate) fn or_rotated(dst: &mut [u64], src: &[u64], s: u64, n: u64) {
    debug_assert!(s < n);
    if s == 0 {
        for (d, w) in dst.iter_mut().zip(src) {
            *d |= *w;
        }
        return;
    }
    or_shl(dst, src, s as usize);
    mask_tail(dst, n);
    or_shr(dst, src, (n - s) as usize);
}

impl ResidueSet {
    pub fn empty(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if n > MAX_MODULUS {
            return Err(Error::ModulusTooLarge { n, max: MAX_MODULUS });
        }
        Ok(ResidueSet {
            n,
            words: vec![0; word_count(n)],
        })
    }

    pub fn full(n: u64) -> Result<Self> {
        let mut s = Self::empty(n)?;
        s.words.iter_mut().for_each(|w| *w = u64::MAX);
        mask_tail(&mut s.words, n);
        Ok(s)
    }

    /// Builds a set from residues, each of which must lie in `[0, n)`.
    pub fn from_residues<I: IntoIterator<Item = u64>>(n: u64, residues: I) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for x in residues {
            if x >= n {
                return Err(Error::ResidueOutOfRange { x, n });
            }
            s.insert(x);
        }
        Ok(s)
    }

    /// Builds a set from arbitrary integers reduced modulo `n`.
    pub fn from_integers<I: IntoIterator<Item = i64>>(n: u64, values: I) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for x in values {
            s.insert(crate::arith::rem(x, n));
        }
        Ok(s)
    }

    pub(crate) fn from_words(n: u64, mut words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_count(n));
        mask_tail(&mut words, n);
        ResidueSet { n, words }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() as u64 == self.n
    }

    pub fn contains(&self, x: u64) -> bool {
        x < self.n && self.words[(x / 64) as usize] >> (x % 64) & 1 == 1
    }

    /// Inserts `x mod n`.
    pub fn insert(&mut self, x: u64) {
        let x = x % self.n;
        self.words[(x / 64) as usize] |= 1 << (x % 64);
    }

    pub fn remove(&mut self, x: u64) {
        if x < self.n {
            self.words[(x / 64) as usize] &= !(1 << (x % 64));
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Members<'_> {
        Members {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<u64> {
        self.iter().next()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        Ok(ResidueSet { n: self.n, words })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        Ok(ResidueSet { n: self.n, words })
    }

    pub fn is_disjoint(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0))
    }

    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        mask_tail(&mut words, self.n);
        ResidueSet { n: self.n, words }
    }

    /// The translate `A + s`.
    pub fn translate(&self, s: i64) -> Self {
        let s = crate::arith::rem(s, self.n);
        let mut words = vec![0; self.words.len()];
        or_rotated(&mut words, &self.words, s, self.n);
        ResidueSet { n: self.n, words }
    }

    /// The reflection `-A`.
    pub fn negate(&self) -> Self {
        let mut out = ResidueSet {
            n: self.n,
            words: vec![0; self.words.len()],
        };
        for x in self.iter() {
            out.insert((self.n - x) % self.n);
        }
        out
    }
}

/// Ascending iterator over the members of a [`ResidueSet`].
pub struct Members<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as u64;
                self.current &= self.current - 1;
                return Some(self.index as u64 * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Z_{}", self, self.n)
    }
}

impl Serialize for ResidueSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Parses a bracketed, comma-separated list of nonnegative integers such as
/// `[1, 2]`. Whitespace is ignored and `[]` is the empty list.
pub fn parse_list_literal(text: &str) -> Result<Vec<u64>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::OutOfRange(format!("malformed list literal {text:?}")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| Error::OutOfRange(format!("malformed list entry {tok:?}")))
        })
        .collect()
}

/// Parses a set literal into a subset of `Z_n`; residues must already be reduced.
pub fn parse_set_literal(n: u64, text: &str) -> Result<ResidueSet> {
    ResidueSet::from_residues(n, parse_list_literal(text)?)
}

/// The interval `{start, start+1, ..., start+len-1}` of `Z_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Interval {
    d: u64,
    start: u64,
    len: u64,
}

impl Interval {
    pub fn new(d: u64, start: u64, len: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroModulus);
        }
        if len > d {
            return Err(Error::OutOfRange(format!("interval length {len} exceeds {d}")));
        }
        Ok(Interval {
            d,
            start: start % d,
            len,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.d
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn to_set(&self) -> Result<ResidueSet> {
        ResidueSet::from_residues(self.d, (0..self.len).map(|i| (self.start + i) % self.d))
    }
}

/// The progression `{a + i*b : 0 <= i < m}` in `Z_d`.
///
/// Two progressions describe the same set in several ways; compare
/// expanded sets, not fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArithmeticProgression {
    d: u64,
    start: u64,
    step: u64,
    len: u64,
    step_gcd: u64,
}

impl ArithmeticProgression {
    /// A progression with `len` distinct terms. Singletons take step 1.
    pub fn new(d: u64, start: u64, step: u64, len: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroModulus);
        }
        if len == 0 {
            return Err(Error::InvalidProgression("length must be positive".into()));
        }
        let step = if len == 1 { 1 % d } else { step % d };
        let g = gcd(step, d);
        if len > d / g {
            return Err(Error::InvalidProgression(format!(
                "length {len} exceeds the order {} of step {step} in Z_{d}",
                d / g
            )));
        }
        Ok(ArithmeticProgression {
            d,
            start: start % d,
            step,
            len,
            step_gcd: g,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.d
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn step_gcd(&self) -> u64 {
        self.step_gcd
    }

    pub fn to_set(&self) -> ResidueSet {
        let mut s = ResidueSet::empty(self.d).expect("modulus validated at construction");
        let mut x = self.start;
        for _ in 0..self.len {
            s.insert(x);
            x = (x + self.step) % self.d;
        }
        s
    }
}

/// Expands a progression into its set of residues.
pub fn ap_to_set(p: &ArithmeticProgression) -> ResidueSet {
    p.to_set()
}

/// Preimage of `a_d` under the projection `Z_n -> Z_d`.
pub fn lift_through_quotient(a_d: &ResidueSet, n: u64) -> Result<ResidueSet> {
    let d = a_d.modulus();
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if n % d != 0 {
        return Err(Error::NotADivisor { d, n });
    }
    let mut out = ResidueSet::empty(n)?;
    for x in a_d.iter() {
        let mut y = x;
        while y < n {
            out.insert(y);
            y += d;
        }
    }
    Ok(out)
}

/// The dilation `u * A`.
pub fn dilate(a: &ResidueSet, u: i64) -> ResidueSet {
    let n = a.modulus();
    let u = crate::arith::rem(u, n) as u128;
    let mut out = ResidueSet::empty(n).expect("modulus already valid");
    for x in a.iter() {
        out.insert((u * x as u128 % n as u128) as u64);
    }
    out
}

/// Whether `a` is a unit dilation of `b`; returns the first such unit.
pub fn unit_dilation_between(a: &ResidueSet, b: &ResidueSet) -> Option<u64> {
    let n = a.modulus();
    if n != b.modulus() || a.len() != b.len() {
        return None;
    }
    (1..=n)
        .map(|u| u % n)
        .filter(|&u| mod_inverse(u as i64, n).is_ok())
        .find(|&u| dilate(b, u as i64) == *a)
}

/// Tests whether `set` is an arithmetic progression for some start and step.
pub fn find_progression(set: &ResidueSet) -> Option<ArithmeticProgression> {
    let n = set.modulus();
    let m = set.len() as u64;
    let first = set.min()?;
    if m == 1 {
        return ArithmeticProgression::new(n, first, 1, 1).ok();
    }
    for step in 1..n {
        if m > n / gcd(step, n) {
            continue;
        }
        // Some member must be the start; try each.
        for a in set.iter() {
            let p = ArithmeticProgression::new(n, a, step, m).ok()?;
            if p.to_set() == *set {
                return Some(p);
            }
        }
    }
    None
}

/// A finite abelian group `Z_{d_1} x ... x Z_{d_s}` with `d_1 | d_2 | ... | d_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(&f) = factors.iter().find(|&&f| f < 2) {
            return Err(Error::InvalidGroup(format!("factor {f} is below 2")));
        }
        for w in factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(Error::InvalidGroup(format!("{} does not divide {}", w[0], w[1])));
            }
        }
        let mut order: u64 = 1;
        for &f in &factors {
            order = order
                .checked_mul(f)
                .ok_or(Error::Overflow("group order"))?;
        }
        Ok(AbelianGroup { factors })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        match n {
            0 => Err(Error::ZeroModulus),
            1 => Self::new(Vec::new()),
            _ => Self::new(vec![n]),
        }
    }

    pub fn trivial() -> Self {
        AbelianGroup { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Every abelian group of order `n` up to isomorphism, in invariant-factor form.
    pub fn all_of_order(n: u64) -> Result<Vec<AbelianGroup>> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        // Factor n, then pick one partition of each prime exponent.
        let mut prime_powers = Vec::new();
        let mut rest = n;
        let mut p = 2;
        while p * p <= rest {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                prime_powers.push((p, e));
            }
            p += 1;
        }
        if rest > 1 {
            prime_powers.push((rest, 1));
        }
        let mut groups: Vec<Vec<u64>> = vec![Vec::new()];
        for (p, e) in prime_powers {
            let mut next = Vec::new();
            for partition in partitions(e) {
                for g in &groups {
                    // Largest parts pair with the largest invariant factors.
                    let mut factors = g.clone();
                    let parts: Vec<u64> = partition.iter().map(|&k| p.pow(k)).collect();
                    let width = factors.len().max(parts.len());
                    let pad = |v: &mut Vec<u64>| {
                        while v.len() < width {
                            v.insert(0, 1);
                        }
                    };
                    pad(&mut factors);
                    let mut parts_sorted = parts;
                    parts_sorted.sort_unstable();
                    pad(&mut parts_sorted);
                    let merged: Vec<u64> = factors
                        .iter()
                        .zip(&parts_sorted)
                        .map(|(a, b)| a * b)
                        .filter(|&f| f > 1)
                        .collect();
                    next.push(merged);
                }
            }
            groups = next;
        }
        groups.sort();
        groups.into_iter().map(AbelianGroup::new).collect()
    }
}

/// Partitions of `e` as non-increasing part lists.
fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(e, e, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}
