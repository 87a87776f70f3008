use crate::error::{Error, Result};
use std::fmt;

/// Exponent vector over a fixed number of variables.
///
/// `mask` folds the support into 64 bits (variable `i` sets bit `i % 64`);
/// it is a necessary condition for divisibility and is kept in sync by every
/// constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    deg: u32,
    mask: u64,
}

fn support_mask(exps: &[u16]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |m, (i, _)| m | 1 << (i % 64))
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
            deg: 0,
            mask: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        Monomial::from_exponents(e)
    }

    pub fn from_exponents(exps: Vec<u16>) -> Monomial {
        let deg = exps.iter().map(|&e| e as u32).sum();
        let mask = support_mask(&exps);
        Monomial {
            exps: exps.into_boxed_slice(),
            deg,
            mask,
        }
    }

    pub fn from_u32(exps: &[u32]) -> Result<Monomial> {
        let e = exps
            .iter()
            .map(|&x| u16::try_from(x).map_err(|_| Error::ExponentOverflow))
            .collect::<Result<Vec<u16>>>()?;
        Ok(Monomial::from_exponents(e))
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn weighted_degree(&self, w: &[u32]) -> u64 {
        self.exps
            .iter()
            .zip(w)
            .map(|(&e, &wi)| e as u64 * wi as u64)
            .sum()
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u16>>>()?;
        Ok(Monomial {
            exps: exps.into_boxed_slice(),
            deg: self.deg + other.deg,
            mask: self.mask | other.mask,
        })
    }

    /// Panics on exponent overflow; callers working near `u16::MAX` should use
    /// [`Monomial::checked_mul`].
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.mask & !other.mask == 0
            && self.deg <= other.deg
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(&a, &b)| a - b)
            .collect();
        Monomial::from_exponents(exps)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::from_exponents(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.nvars() <= 64 {
            return self.mask & other.mask == 0;
        }
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Removes the highest power of variable `i`.
    pub fn strip_var(&self, i: usize) -> Monomial {
        let mut e = self.exps.to_vec();
        e[i] = 0;
        Monomial::from_exponents(e)
    }

    /// Reindexes variables: new variable `j` takes the exponent of old
    /// variable `map[j]`.
    pub fn permuted(&self, map: &[usize]) -> Monomial {
        Monomial::from_exponents(map.iter().map(|&i| self.exps[i]).collect())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(vec![1, 0, 2]);
        let b = Monomial::from_exponents(vec![1, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Monomial::from_exponents(vec![0, 1, 1]));
        assert_eq!(a.lcm(&b), b);
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(3, 1).is_coprime(&a));
    }

    #[test]
    fn overflow_is_reported() {
        let a = Monomial::from_exponents(vec![u16::MAX]);
        assert_eq!(a.checked_mul(&Monomial::var(1, 0)), Err(Error::ExponentOverflow));
        assert!(Monomial::from_u32(&[70000]).is_err());
    }
}
