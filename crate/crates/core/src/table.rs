//! Groups of order at most 64 with subsets packed into a single `u64`.
//!
//! Serves the exhaustive searches: cyclic groups rotate the word directly,
//! noncyclic groups go through a dense addition table.

use crate::error::{Error, Result};
use crate::group::AbelianGroup;

pub const MAX_TABLE_ORDER: u64 = 64;

/// A finite abelian group whose subsets fit in one machine word.
pub trait SmallGroup: Sync {
    fn order(&self) -> usize;

    /// `{s + x : s in mask}`.
    fn translate(&self, mask: u64, x: usize) -> u64;

    /// Mask of the whole group.
    fn full(&self) -> u64 {
        match self.order() {
            64 => u64::MAX,
            n => (1u64 << n) - 1,
        }
    }

    fn sumset(&self, a: u64, b: u64) -> u64 {
        let mut out = 0;
        let mut rest = a;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.translate(b, x);
        }
        out
    }

    fn h_fold(&self, a: u64, h: u64) -> u64 {
        assert!(h >= 1);
        let mut acc = a;
        for _ in 1..h {
            acc = self.sumset(acc, a);
        }
        acc
    }

    fn is_kl_sumfree(&self, a: u64, k: u64, l: u64) -> bool {
        self.h_fold(a, k) & self.h_fold(a, l) == 0
    }
}

/// `Z_n` with `n <= 64`.
#[derive(Debug, Clone, Copy)]
pub struct SmallCyclic {
    n: usize,
}

impl SmallCyclic {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if n > MAX_TABLE_ORDER {
            return Err(Error::ModulusTooLarge {
                n,
                max: MAX_TABLE_ORDER,
            });
        }
        Ok(SmallCyclic { n: n as usize })
    }
}

impl SmallGroup for SmallCyclic {
    fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn translate(&self, mask: u64, x: usize) -> u64 {
        if x == 0 {
            return mask;
        }
        let hi = mask.checked_shr((self.n - x) as u32).unwrap_or(0);
        ((mask << x) & self.full()) | hi
    }
}

/// A noncyclic (or cyclic) abelian group given by its addition table.
///
/// Element `i` has mixed-radix coordinates over the invariant factors, the
/// last factor varying fastest.
#[derive(Debug, Clone)]
pub struct GroupTable {
    group: AbelianGroup,
    n: usize,
    add: Vec<u8>,
}

impl GroupTable {
    pub fn new(group: &AbelianGroup) -> Result<Self> {
        let order = group.order();
        if order > MAX_TABLE_ORDER {
            return Err(Error::ModulusTooLarge {
                n: order,
                max: MAX_TABLE_ORDER,
            });
        }
        let n = order as usize;
        let coords: Vec<Vec<u64>> = (0..n as u64).map(|i| Self::decode(group, i)).collect();
        let mut add = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let sum: Vec<u64> = coords[i]
                    .iter()
                    .zip(&coords[j])
                    .zip(group.factors())
                    .map(|((a, b), f)| (a + b) % f)
                    .collect();
                add[i * n + j] = Self::encode(group, &sum) as u8;
            }
        }
        Ok(GroupTable {
            group: group.clone(),
            n,
            add,
        })
    }

    fn decode(group: &AbelianGroup, mut index: u64) -> Vec<u64> {
        let mut out = vec![0; group.factors().len()];
        for (slot, f) in out.iter_mut().zip(group.factors()).rev() {
            *slot = index % f;
            index /= f;
        }
        out
    }

    fn encode(group: &AbelianGroup, coords: &[u64]) -> u64 {
        coords
            .iter()
            .zip(group.factors())
            .fold(0, |acc, (c, f)| acc * f + c)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn coordinates(&self, element: usize) -> Vec<u64> {
        Self::decode(&self.group, element as u64)
    }

    /// Coordinate in the last (largest) invariant factor, i.e. the image
    /// under the projection onto `Z_{e(G)}`.
    pub fn top_coordinate(&self, element: usize) -> u64 {
        element as u64 % self.group.exponent()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }
}

impl SmallGroup for GroupTable {
    fn order(&self) -> usize {
        self.n
    }

    fn translate(&self, mask: u64, x: usize) -> u64 {
        let row = &self.add[x * self.n..(x + 1) * self.n];
        let mut out = 0;
        let mut rest = mask;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1u64 << row[b];
        }
        out
    }
}

pub fn mask_to_vec(mask: u64) -> Vec<u64> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}
