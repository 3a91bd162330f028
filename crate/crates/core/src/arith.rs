//! Exact integer helpers: gcd, divisors, modular inverse, rounding division.

use crate::error::{Error, Result};

/// All positive divisors of `n`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    n: u64,
    divisors: Vec<u64>,
}

impl DivisorList {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.divisors
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.divisors.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }
}

impl<'a> IntoIterator for &'a DivisorList {
    type Item = &'a u64;
    type IntoIter = std::slice::Iter<'a, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.divisors.iter()
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Divisors by trial division up to `sqrt(n)`.
pub fn divisors(n: u64) -> Result<DivisorList> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(DivisorList { n, divisors: small })
}

/// Extended Euclid on signed values: returns `(g, s, t)` with `s*a + t*b = g`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

/// Inverse of `x` modulo `m`, in `[0, m)`.
///
/// Every residue is invertible modulo 1 (the ring is trivial) and the
/// inverse is reported as 0.
pub fn mod_inverse(x: i64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if m == 1 {
        return Ok(0);
    }
    let xr = (x as i128).rem_euclid(m as i128);
    let (g, s, _) = ext_gcd(xr, m as i128);
    if g != 1 {
        return Err(Error::NonInvertible { x, m });
    }
    Ok(s.rem_euclid(m as i128) as u64)
}

pub fn ceil_div(a: u64, b: u64) -> Result<u64> {
    if b == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(a.div_ceil(b))
}

/// `x mod m` normalized to `[0, m)`.
pub fn rem(x: i64, m: u64) -> u64 {
    debug_assert!(m > 0);
    (x as i128).rem_euclid(m as i128) as u64
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut i = 3u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 2;
    }
    true
}

/// Binomial coefficient, `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}
