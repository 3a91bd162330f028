//! Closed forms for maximum (k,l)-sum-free set sizes.
//!
//! Notation follows the usual one for `Z_d`: `delta = gcd(d, k-l)`,
//! `f = ceil((d - delta)/(k+l))`, `r = (l*f) mod delta`, and the longest
//! (k,l)-sum-free interval of `Z_d` has `ceil((d - (delta - r))/(k+l))`
//! elements. The maximum over all subsets of `Z_n` is the best lift of
//! such an interval from some quotient `Z_d`, `d | n`.

use serde::Serialize;

use crate::arith::{ceil_div, divisors, gcd, is_prime};
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, SumPair};

/// The intermediate quantities behind the longest sum-free interval of `Z_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GammaBreakdown {
    pub d: u64,
    pub k: u64,
    pub l: u64,
    pub delta: u64,
    pub f: u64,
    pub r: u64,
    /// Length of the longest (k,l)-sum-free interval (equivalently,
    /// coprime-step progression) in `Z_d`.
    pub value: u64,
}

/// One divisor's contribution to the maximum over `d | n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DivisorRow {
    pub d: u64,
    pub delta: u64,
    pub r: u64,
    pub gamma: u64,
    pub contribution: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuReport {
    pub n: u64,
    pub k: u64,
    pub l: u64,
    pub mu: u64,
    /// Smallest divisor attaining the maximum.
    pub best_divisor: u64,
    pub lower_bound: u64,
    pub upper_bound: u64,
    pub divisors: Vec<DivisorRow>,
}

/// Whether `Z_d` has a (k,l)-sum-free interval of `m` elements.
///
/// Holds iff `k(m-1) + ceil((l(m-1)+1)/delta)*delta < d`. The empty
/// interval (`m = 0`) always qualifies.
pub fn interval_feasible(d: u64, k: u64, l: u64, m: u64) -> Result<bool> {
    let pair = SumPair::new(k, l)?;
    if d == 0 {
        return Err(Error::ZeroModulus);
    }
    if m == 0 {
        return Ok(true);
    }
    let delta = gcd(d, pair.diff());
    let span = ceil_div(l * (m - 1) + 1, delta)? * delta;
    Ok(k * (m - 1) + span < d)
}

pub fn gamma(d: u64, k: u64, l: u64) -> Result<GammaBreakdown> {
    let pair = SumPair::new(k, l)?;
    if d == 0 {
        return Err(Error::ZeroModulus);
    }
    let delta = gcd(d, pair.diff());
    let f = ceil_div(d - delta, pair.total())?;
    let r = (l * f) % delta;
    let value = ceil_div(d - (delta - r), pair.total())?;
    Ok(GammaBreakdown {
        d,
        k,
        l,
        delta,
        f,
        r,
        value,
    })
}

/// Maximum size of a (k,l)-sum-free subset of `Z_n`, with the full
/// per-divisor table and the gcd-based sandwich bounds.
pub fn mu_cyclic(n: u64, k: u64, l: u64) -> Result<MuReport> {
    SumPair::new(k, l)?;
    let divs = divisors(n)?;
    let mut rows = Vec::with_capacity(divs.len());
    let (mut mu, mut best) = (0, 1);
    for d in divs.iter() {
        let g = gamma(d, k, l)?;
        let contribution = g.value * (n / d);
        if contribution > mu {
            mu = contribution;
            best = d;
        }
        rows.push(DivisorRow {
            d,
            delta: g.delta,
            r: g.r,
            gamma: g.value,
            contribution,
        });
    }
    let (lower_bound, upper_bound) = mu_bounds(n, k, l)?;
    Ok(MuReport {
        n,
        k,
        l,
        mu,
        best_divisor: best,
        lower_bound,
        upper_bound,
        divisors: rows,
    })
}

/// `(max_d ceil((d-delta)/(k+l))*n/d, max_d ceil((d-1)/(k+l))*n/d)` over `d | n`.
///
/// Evaluated without going through [`gamma`].
pub fn mu_bounds(n: u64, k: u64, l: u64) -> Result<(u64, u64)> {
    let pair = SumPair::new(k, l)?;
    let mut lower = 0;
    let mut upper = 0;
    for d in divisors(n)?.iter() {
        let delta = gcd(d, pair.diff());
        lower = lower.max(ceil_div(d - delta, pair.total())? * (n / d));
        upper = upper.max(ceil_div(d - 1, pair.total())? * (n / d));
    }
    Ok((lower, upper))
}

/// Prime-order closed form: 0 when `p | k-l`, else `ceil((p-1)/(k+l))`.
pub fn mu_prime(p: u64, k: u64, l: u64) -> Result<u64> {
    let pair = SumPair::new(k, l)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if pair.diff() % p == 0 {
        return Ok(0);
    }
    ceil_div(p - 1, pair.total())
}

/// Closed form when `gcd(n, k-l) = 1`: `max_d ceil((d-1)/(k+l))*n/d`.
/// Returns `None` when `n` and `k-l` share a factor.
pub fn mu_coprime(n: u64, k: u64, l: u64) -> Result<Option<u64>> {
    let pair = SumPair::new(k, l)?;
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if gcd(n, pair.diff()) != 1 {
        return Ok(None);
    }
    let mut best = 0;
    for d in divisors(n)?.iter() {
        best = best.max(ceil_div(d - 1, pair.total())? * (n / d));
    }
    Ok(Some(best))
}

/// Lower bound for a general finite abelian group, with an exactness flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoncyclicBound {
    pub bound: u64,
    /// The bound is known to equal the maximum: the group is cyclic, or
    /// `exact_divisor` exists.
    pub exactness_known: bool,
    /// A divisor `d` of the exponent with `d mod (k+l)` outside
    /// `[1, gcd(d, k-l)]`, if any.
    pub exact_divisor: Option<u64>,
}

/// Smallest divisor `d` of `e` that is not congruent mod `k+l` to any
/// integer in `[1, gcd(d, k-l)]`.
pub fn exact_divisor(e: u64, k: u64, l: u64) -> Result<Option<u64>> {
    let pair = SumPair::new(k, l)?;
    for d in divisors(e)?.iter() {
        let delta = gcd(d, pair.diff());
        let residue = d % pair.total();
        // delta <= k-l < k+l, so [1, delta] holds distinct residues.
        if !(1..=delta).contains(&residue) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// `max_{d | e(G)} gamma(Z_d)*|G|/d`, the size of the preimage of the best
/// interval under a projection `G -> Z_d`.
pub fn mu_noncyclic_lower(group: &AbelianGroup, k: u64, l: u64) -> Result<NoncyclicBound> {
    SumPair::new(k, l)?;
    let n = group.order();
    let e = group.exponent();
    let mut bound = 0;
    for d in divisors(e)?.iter() {
        bound = bound.max(gamma(d, k, l)?.value * (n / d));
    }
    let witness = exact_divisor(e, k, l)?;
    Ok(NoncyclicBound {
        bound,
        exactness_known: group.is_cyclic() || witness.is_some(),
        exact_divisor: witness,
    })
}

/// Maximum for the elementary abelian group `Z_p^r` where a closed form is
/// known: 0 if `p | k-l`; `ceil((p-1)/(k+l)) * p^(r-1)` if additionally
/// `(k+l) ∤ p-1`. `None` when neither case applies.
pub fn mu_elementary_abelian(p: u64, r: u32, k: u64, l: u64) -> Result<Option<u64>> {
    let pair = SumPair::new(k, l)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 {
        return Err(Error::OutOfRange("rank must be positive".into()));
    }
    if pair.diff() % p == 0 {
        return Ok(Some(0));
    }
    if (p - 1) % pair.total() == 0 {
        return Ok(None);
    }
    let scale = p
        .checked_pow(r - 1)
        .ok_or(Error::Overflow("elementary abelian order"))?;
    Ok(Some(ceil_div(p - 1, pair.total())? * scale))
}

/// Minimum, over `m`-subsets `A` of `Z_p`, of the number of pairs in `A x A`
/// summing into `A`: zero while a sum-free `m`-set exists, and
/// `floor((3m-p)^2/4)` above that.
pub fn min_additive_tuples(p: u64, m: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 || m > p {
        return Err(Error::OutOfRange(format!("need 1 <= m <= {p}, got {m}")));
    }
    if m <= mu_cyclic(p, 2, 1)?.mu {
        return Ok(0);
    }
    let t = 3 * m - p;
    Ok(t * t / 4)
}
