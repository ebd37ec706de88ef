//! Arithmetic in prime fields GF(p).

use std::fmt;

use crate::error::{Error, Result};

/// The prime field GF(p). Primality is checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    #[inline]
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn elem(&self, v: i64) -> FieldElement {
        FieldElement { value: self.reduce(v), p: self.p }
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(&self) -> FieldElement {
        let p = self.p as u64;
        if p == 2 {
            return self.one();
        }
        let mut factors = Vec::new();
        let mut m = p - 1;
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                factors.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        let g = (2..p as u32)
            .find(|&g| factors.iter().all(|&q| self.pow_raw(g, (p - 1) / q) != 1))
            .expect("prime field has a primitive root");
        self.elem(g as i64)
    }

    /// All residues `0..p` in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.p).map(move |v| FieldElement { value: v, p: self.p })
    }

    /// Nonzero residues `1..p` in increasing order.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.p).map(move |v| FieldElement { value: v, p: self.p })
    }

    // Raw residue helpers used by the matrix kernels.
    #[inline]
    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        ((a as u64 + p - b as u64) % p) as u32
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub(crate) fn pow_raw(&self, a: u32, mut e: u64) -> u32 {
        let p = self.p as u64;
        let mut base = a as u64 % p;
        let mut acc = 1u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u32
    }

    pub(crate) fn inv_raw(&self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::NotInvertible);
        }
        Ok(self.pow_raw(a, self.p as u64 - 2))
    }
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue modulo a prime, tagged with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u32,
    p: u32,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Self) -> Result<PrimeField> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(self.field())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let f = self.same_field(other)?;
        Ok(Self { value: f.add_raw(self.value, other.value), p: self.p })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let f = self.same_field(other)?;
        Ok(Self { value: f.sub_raw(self.value, other.value), p: self.p })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let f = self.same_field(other)?;
        Ok(Self { value: f.mul_raw(self.value, other.value), p: self.p })
    }

    pub fn neg(&self) -> Self {
        Self { value: self.field().neg_raw(self.value), p: self.p }
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self { value: self.field().inv_raw(self.value)?, p: self.p })
    }

    /// `self^n`; negative exponents go through the inverse.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let f = self.field();
        if n < 0 {
            let inv = f.inv_raw(self.value)?;
            return Ok(Self { value: f.pow_raw(inv, n.unsigned_abs()), p: self.p });
        }
        Ok(Self { value: f.pow_raw(self.value, n as u64), p: self.p })
    }

    /// Euler's criterion, with 0 and characteristic 2 handled directly.
    pub fn is_square(&self) -> bool {
        if self.value == 0 || self.p == 2 {
            return true;
        }
        self.field().pow_raw(self.value, (self.p as u64 - 1) / 2) == 1
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(p: u32, v: i64) -> FieldElement {
        PrimeField::new(p).unwrap().elem(v)
    }

    #[test]
    fn basic_ops() {
        assert_eq!(e(5, 3).add(&e(5, 4)).unwrap().value(), 2);
        assert_eq!(e(5, 2).mul(&e(5, 3)).unwrap().value(), 1);
        assert_eq!(e(2, 1).add(&e(2, 1)).unwrap().value(), 0);
        assert_eq!(e(5, 1).sub(&e(5, 3)).unwrap().value(), 3);
    }

    #[test]
    fn mismatched_moduli() {
        assert_eq!(e(5, 1).add(&e(7, 1)), Err(Error::ModulusMismatch(5, 7)));
        assert!(e(5, 1).mul(&e(3, 1)).is_err());
    }

    #[test]
    fn inverses() {
        assert_eq!(e(7, 3).inv().unwrap().value(), 5);
        assert_eq!(e(5, 1).inv().unwrap().value(), 1);
        assert_eq!(e(11, 2).inv().unwrap().value(), 6);
        let err = e(7, 0).inv().unwrap_err();
        assert_eq!(err.to_string(), "not invertible");
    }

    #[test]
    fn powers() {
        assert_eq!(e(5, 2).pow(-1).unwrap().value(), 3);
        assert_eq!(e(7, 3).pow(0).unwrap().value(), 1);
        assert_eq!(e(5, 2).pow(4).unwrap().value(), 1);
        assert_eq!(e(5, 0).pow(-2), Err(Error::NotInvertible));
        assert_eq!(e(5, 0).pow(0).unwrap().value(), 1);
    }

    #[test]
    fn squares() {
        assert!(e(7, 2).is_square());
        assert!(e(2, 1).is_square());
        // exhaustive squaring over GF(7): {0,1,2,4}
        let sq: Vec<u32> = (0..7).map(|s| (s * s) % 7).collect();
        assert!(!sq.contains(&3));
        assert!(!e(7, 3).is_square());
    }

    #[test]
    fn primitive_roots() {
        for (p, g) in [(2u32, 1u32), (3, 2), (5, 2), (7, 3), (11, 2), (13, 2)] {
            let f = PrimeField::new(p).unwrap();
            let r = f.primitive_root();
            assert_eq!(r.value(), g);
            let powers: std::collections::HashSet<u32> =
                (0..p as i64 - 1).map(|k| r.pow(k).unwrap().value()).collect();
            assert_eq!(powers.len() as u32, p - 1);
        }
    }

    #[test]
    fn composite_rejected() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u32, 3, 5, 7, 11] {
            let f = PrimeField::new(p).unwrap();
            let els: Vec<_> = f.elements().collect();
            for a in &els {
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), f.one());
                }
                for b in &els {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in &els {
                        let l = a.add(b).unwrap().add(c).unwrap();
                        let r = a.add(&b.add(c).unwrap()).unwrap();
                        assert_eq!(l, r);
                        let l = a.mul(b).unwrap().mul(c).unwrap();
                        let r = a.mul(&b.mul(c).unwrap()).unwrap();
                        assert_eq!(l, r);
                        let l = a.mul(&b.add(c).unwrap()).unwrap();
                        let r = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn square_count_matches_brute_force() {
        for p in [3u32, 5, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            let brute: std::collections::BTreeSet<u32> =
                (1..p).map(|s| (s * s) % p).collect();
            let count = f.units().filter(|a| a.is_square()).count();
            assert_eq!(count as u32, (p - 1) / 2);
            for a in f.units() {
                assert_eq!(a.is_square(), brute.contains(&a.value()));
            }
        }
    }
}
