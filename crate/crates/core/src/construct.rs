//! Explicit maximum-size witnesses.
//!
//! An interval `[a, a+m-1]` of `Z_d` is (k,l)-sum-free iff the interval
//! `kA - lA = [(k-l)a - l(m-1), (k-l)a + k(m-1)]` misses 0, i.e. iff
//! `(k-l)a - bd` lands in `[l(m-1)+1, d-k(m-1)-1]` for some integer `b`.
//! Dividing through by `delta = gcd(d, k-l)` turns this into a choice of an
//! integer `C` in a window and a solution of
//! `((k-l)/delta)*a - (d/delta)*b = C`.

use serde::Serialize;

use crate::arith::{ceil_div, gcd, mod_inverse};
use crate::error::{Error, Result};
use crate::formulas::{gamma, mu_cyclic};
use crate::group::{lift_through_quotient, AbelianGroup, Interval, ResidueSet, SumPair};
use crate::sumset::is_kl_sumfree;
use crate::table::{GroupTable, SmallGroup};

/// The integers behind a sum-free interval of `Z_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionCertificate {
    pub d: u64,
    pub k: u64,
    pub l: u64,
    pub m: u64,
    pub delta: u64,
    #[serde(rename = "C")]
    pub c: u64,
    pub a: u64,
    pub b: i64,
}

impl ConstructionCertificate {
    /// Re-checks the window on `C` and the linear identity on `(a, b)`.
    pub fn audit(&self) -> bool {
        let ConstructionCertificate {
            d,
            k,
            l,
            m,
            delta,
            c,
            a,
            b,
        } = *self;
        if m == 0 || delta == 0 || gcd(d, k - l) != delta || k * (m - 1) + 1 > d {
            return false;
        }
        let lo = match ceil_div(l * (m - 1) + 1, delta) {
            Ok(v) => v,
            Err(_) => return false,
        };
        let hi = (d - k * (m - 1) - 1) / delta;
        let lhs = ((k - l) / delta) as i128 * a as i128 - (d / delta) as i128 * b as i128;
        lo <= c && c <= hi && lhs == c as i128 && a < d / delta
    }
}

/// The longest (k,l)-sum-free interval of `Z_d`, with its certificate.
///
/// Uses the smallest admissible `C` and the least nonnegative `a`.
pub fn max_interval(d: u64, k: u64, l: u64) -> Result<(Interval, ConstructionCertificate)> {
    let pair = SumPair::new(k, l)?;
    let g = gamma(d, k, l)?;
    if g.value == 0 {
        return Err(Error::NoWitness { n: d, k, l });
    }
    let m = g.value;
    let delta = g.delta;
    let c = ceil_div(l * (m - 1) + 1, delta)?;
    let unit = pair.diff() / delta;
    let modulus = d / delta;
    let inv = mod_inverse(unit as i64, modulus)?;
    let a = ((c as u128 * inv as u128) % modulus as u128) as u64;
    let numer = unit as i128 * a as i128 - c as i128;
    debug_assert_eq!(numer % modulus as i128, 0);
    let b = (numer / modulus as i128) as i64;

    let cert = ConstructionCertificate {
        d,
        k,
        l,
        m,
        delta,
        c,
        a,
        b,
    };
    if !cert.audit() {
        return Err(Error::SelfCheck(format!("certificate audit failed: {cert:?}")));
    }
    let interval = Interval::new(d, a, m)?;
    if !is_kl_sumfree(&interval.to_set()?, k, l)? {
        return Err(Error::SelfCheck(format!(
            "interval [{a}, {}] of Z_{d} is not ({k},{l})-sum-free",
            a + m - 1
        )));
    }
    Ok((interval, cert))
}

/// A maximum (k,l)-sum-free subset of `Z_n` together with its provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: u64,
    pub k: u64,
    pub l: u64,
    pub size: u64,
    pub best_divisor: u64,
    pub set: ResidueSet,
    pub certificate: WitnessCertificate,
}

/// The certificate fields carried in witness JSON.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    #[serde(rename = "C")]
    pub c: u64,
    pub a: u64,
    pub b: i64,
    pub delta: u64,
}

/// The preimage in `Z_n` of the longest sum-free interval of `Z_{d*}`,
/// where `d*` is the smallest divisor attaining the maximum.
pub fn max_witness(n: u64, k: u64, l: u64) -> Result<Witness> {
    let report = mu_cyclic(n, k, l)?;
    if report.mu == 0 {
        return Err(Error::NoWitness { n, k, l });
    }
    let d = report.best_divisor;
    let (interval, cert) = max_interval(d, k, l)?;
    let set = lift_through_quotient(&interval.to_set()?, n)?;
    if set.len() as u64 != report.mu || !is_kl_sumfree(&set, k, l)? {
        return Err(Error::SelfCheck(format!(
            "lifted witness {set} fails for n={n} k={k} l={l}"
        )));
    }
    Ok(Witness {
        n,
        k,
        l,
        size: report.mu,
        best_divisor: d,
        set,
        certificate: WitnessCertificate {
            c: cert.c,
            a: cert.a,
            b: cert.b,
            delta: cert.delta,
        },
    })
}

/// Convenience wrapper returning only the set.
pub fn max_witness_cyclic(n: u64, k: u64, l: u64) -> Result<ResidueSet> {
    max_witness(n, k, l).map(|w| w.set)
}

/// The `m` middle residues of `Z_p`: `{ceil((p-m)/2) + i : 0 <= i < m}`.
pub fn middle_set(p: u64, m: u64) -> Result<ResidueSet> {
    if m == 0 || m > p {
        return Err(Error::OutOfRange(format!("need 1 <= m <= {p}, got {m}")));
    }
    Interval::new(p, (p - m).div_ceil(2), m)?.to_set()
}

/// `{(n-1)/3} ∪ [(n+5)/3, (2n-5)/3] ∪ {(2n+1)/3}` in `Z_n`: a sum-free set
/// of size `(n-1)/3` that is two elements short of a progression.
pub fn fixture_two_short(n: u64) -> Result<ResidueSet> {
    if n % 3 != 1 || n < 10 {
        return Err(Error::OutOfRange(format!(
            "need n = 1 mod 3 and n >= 10, got {n}"
        )));
    }
    let mut set = ResidueSet::empty(n)?;
    set.insert((n - 1) / 3);
    for x in (n + 5) / 3..=(2 * n - 5) / 3 {
        set.insert(x);
    }
    set.insert((2 * n + 1) / 3);
    Ok(set)
}

/// Preimage of the best interval under `G -> Z_{e(G)} -> Z_d`, as a mask
/// over the group table of `group` (order at most 64).
pub fn noncyclic_witness(group: &AbelianGroup, k: u64, l: u64) -> Result<(GroupTable, u64)> {
    SumPair::new(k, l)?;
    let table = GroupTable::new(group)?;
    let e = group.exponent();
    let mut best: Option<(u64, u64)> = None;
    for d in crate::arith::divisors(e)?.iter() {
        let size = gamma(d, k, l)?.value * (group.order() / d);
        if best.is_none_or(|(s, _)| size > s) {
            best = Some((size, d));
        }
    }
    let (size, d) = best.expect("the exponent has at least one divisor");
    if size == 0 {
        return Err(Error::NoWitness {
            n: group.order(),
            k,
            l,
        });
    }
    let (interval, _) = max_interval(d, k, l)?;
    let base = interval.to_set()?;
    let mut mask = 0u64;
    for x in 0..table.order() {
        if base.contains(table.top_coordinate(x) % d) {
            mask |= 1 << x;
        }
    }
    if mask.count_ones() as u64 != size || !table.is_kl_sumfree(mask, k, l) {
        return Err(Error::SelfCheck(format!("noncyclic witness failed for {group}")));
    }
    Ok((table, mask))
}
