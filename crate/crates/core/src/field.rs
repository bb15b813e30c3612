//! Exact arithmetic in GF(p^k).
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_i` is the coefficient of `x^i` in the power basis of the defining
//! polynomial. This encoding is also the on-disk format for matrix entries.

use crate::arith;
use crate::error::{Error, Result};

/// A field element. It carries the field's `(p, k)` so mixing fields is caught.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    pub p: u32,
    pub k: u32,
    pub value: u32,
}

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic defining polynomial, low degree first, length `k + 1`.
    poly: Vec<u32>,
    gamma: u32,
    /// `exp[i] = gamma^i`, present when `q <= 2^16`.
    exp: Vec<u32>,
    log: Vec<u32>,
}

// Polynomials over GF(p), low degree first, no trailing zeros.
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    poly_rem(r, f, p)
}

fn poly_rem(a: Poly, f: &[u64], p: u64) -> Poly {
    let mut a = trim(a);
    let d = f.len() - 1;
    let lead_inv = arith::inv_mod(f[d], p).expect("nonzero leading coefficient");
    while a.len() > d {
        let top = a.len() - 1;
        let c = a[top] * lead_inv % p;
        if c != 0 {
            for i in 0..=d {
                let t = top - d + i;
                a[t] = (a[t] + p - c * f[i] % p) % p;
            }
        }
        a = trim(a);
    }
    a
}

fn poly_gcd(a: Poly, b: Poly, p: u64) -> Poly {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let r = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(r)
}

/// Rabin-style test: `f` of degree `k` is irreducible iff it shares no factor
/// with `x^{p^i} - x` for `i <= k/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let x: Poly = vec![0, 1];
    let mut xp = x.clone();
    for _ in 1..=k / 2 {
        // xp <- xp^p mod f
        let mut acc: Poly = vec![1];
        let mut base = xp.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, f, p);
            }
            base = poly_mulmod(&base, &base, f, p);
            e >>= 1;
        }
        xp = acc;
        let g = poly_gcd(f.to_vec(), poly_sub(&xp, &x, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

impl FiniteField {
    /// Builds GF(p^k) with the lexicographically smallest monic irreducible
    /// polynomial, coefficients compared from the constant term upwards.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !arith::is_prime(p as u64) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("degree must be positive".into()));
        }
        let q = (p as u64)
            .checked_pow(k)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or_else(|| Error::InvalidArgument(format!("{p}^{k} exceeds 2^32")))?
            as u32;
        let poly = if k == 1 {
            vec![0, 1]
        } else {
            // Enumerate (c_0, ..., c_{k-1}) with c_0 the most significant digit.
            let count = q as u64;
            let mut found = None;
            for idx in 0..count {
                let mut coeffs = vec![0u64; k as usize + 1];
                let mut t = idx;
                for i in (0..k as usize).rev() {
                    coeffs[i] = t % p as u64;
                    t /= p as u64;
                }
                coeffs[k as usize] = 1;
                if is_irreducible(&coeffs, p as u64) {
                    found = Some(coeffs);
                    break;
                }
            }
            found
                .expect("an irreducible polynomial exists")
                .into_iter()
                .map(|c| c as u32)
                .collect()
        };
        let mut field = FiniteField {
            p,
            k,
            q,
            poly,
            gamma: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let fac = arith::factorize(q as u64 - 1);
        let gamma = (1..q)
            .find(|&g| {
                fac.primes()
                    .all(|r| field.pow_raw(g, (q as u64 - 1) / r) != 1)
            })
            .expect("multiplicative group is cyclic");
        field.gamma = gamma;
        if q <= 1 << 16 {
            let mut exp = Vec::with_capacity(q as usize - 1);
            let mut log = vec![u32::MAX; q as usize];
            let mut x = 1u32;
            for i in 0..q - 1 {
                exp.push(x);
                log[x as usize] = i;
                x = field.mul_slow(x, gamma);
            }
            field.exp = exp;
            field.log = log;
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.k
    }
    pub fn order(&self) -> u32 {
        self.q
    }
    /// Coefficients of the defining polynomial, constant term first.
    pub fn polynomial(&self) -> &[u32] {
        &self.poly
    }
    /// The primitive element: smallest encoding of multiplicative order q-1.
    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    pub fn elem(&self, value: u32) -> FieldElem {
        FieldElem {
            p: self.p,
            k: self.k,
            value: value % self.q.max(1),
        }
    }

    pub fn coeffs(&self, a: u32) -> Vec<u32> {
        let mut a = a;
        (0..self.k)
            .map(|_| {
                let c = a % self.p;
                a /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0u32, |acc, &x| acc * self.p + x % self.p)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            return ((a as u64 + b as u64) % self.p as u64) as u32;
        }
        let (mut a, mut b) = (a, b);
        let mut r = 0u32;
        let mut pw = 1u32;
        for _ in 0..self.k {
            let s = (a % self.p + b % self.p) % self.p;
            r += s * pw;
            a /= self.p;
            b /= self.p;
            pw = pw.wrapping_mul(self.p);
        }
        r
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.k == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let mut a = a;
        let mut r = 0u32;
        let mut pw = 1u32;
        for _ in 0..self.k {
            r += ((self.p - a % self.p) % self.p) * pw;
            a /= self.p;
            pw = pw.wrapping_mul(self.p);
        }
        r
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let p = self.p as u64;
        let f: Vec<u64> = self.poly.iter().map(|&c| c as u64).collect();
        let ca: Vec<u64> = self.coeffs(a).into_iter().map(u64::from).collect();
        let cb: Vec<u64> = self.coeffs(b).into_iter().map(u64::from).collect();
        let r = poly_mulmod(&trim(ca), &trim(cb), &f, p);
        let r: Vec<u32> = r.into_iter().map(|c| c as u32).collect();
        self.from_coeffs(&r)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if !self.exp.is_empty() {
            let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
            return self.exp[(s % (self.q as u64 - 1)) as usize];
        }
        self.mul_slow(a, b)
    }

    fn pow_raw(&self, a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_slow(r, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        r
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if !self.exp.is_empty() {
            let s = (self.log[a as usize] as u128 * e as u128) % (self.q as u128 - 1);
            return self.exp[s as usize];
        }
        self.pow_raw(a, e)
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    /// `gamma^i`.
    pub fn gamma_pow(&self, i: u64) -> u32 {
        self.pow(self.gamma, i % (self.q as u64 - 1))
    }

    /// Discrete logarithm to base gamma; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if !self.log.is_empty() {
            return Some(self.log[a as usize]);
        }
        let mut x = 1u32;
        for i in 0..self.q - 1 {
            if x == a {
                return Some(i);
            }
            x = self.mul(x, self.gamma);
        }
        None
    }

    /// The Frobenius automorphism `x -> x^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    /// `x -> x^{p^j}`.
    pub fn frobenius_pow(&self, a: u32, j: u32) -> u32 {
        (0..j % self.k).fold(a, |x, _| self.frobenius(x))
    }

    /// Absolute trace to GF(p).
    pub fn trace(&self, a: u32) -> u32 {
        let mut t = 0u32;
        let mut x = a;
        for _ in 0..self.k {
            t = self.add(t, x);
            x = self.frobenius(x);
        }
        t
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> u64 {
        assert!(a != 0);
        let mut ord = self.q as u64 - 1;
        for r in arith::factorize(ord).primes() {
            while ord % r == 0 && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        ord
    }

    // Checked operations on tagged elements.

    fn check(&self, a: &FieldElem) -> Result<u32> {
        if a.p != self.p || a.k != self.k {
            return Err(Error::FieldMismatch);
        }
        Ok(a.value)
    }

    pub fn add_e(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.elem(self.add(self.check(&a)?, self.check(&b)?)))
    }

    pub fn mul_e(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.elem(self.mul(self.check(&a)?, self.check(&b)?)))
    }

    pub fn inv_e(&self, a: FieldElem) -> Result<FieldElem> {
        Ok(self.elem(self.inv(self.check(&a)?)?))
    }

    pub fn pow_e(&self, a: FieldElem, e: u64) -> Result<FieldElem> {
        Ok(self.elem(self.pow(self.check(&a)?, e)))
    }

    pub fn frobenius_e(&self, a: FieldElem) -> Result<FieldElem> {
        Ok(self.elem(self.frobenius(self.check(&a)?)))
    }

    pub fn trace_e(&self, a: FieldElem) -> Result<FieldElem> {
        Ok(self.elem(self.trace(self.check(&a)?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_field_polynomials() {
        assert_eq!(FiniteField::new(2, 2).unwrap().polynomial(), &[1, 1, 1]);
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(f3.gamma(), 2);
        assert_eq!(FiniteField::new(2, 3).unwrap().polynomial(), &[1, 0, 1, 1]);
        let f64 = FiniteField::new(2, 6).unwrap();
        assert_eq!(f64.polynomial(), &[1, 0, 0, 0, 0, 1, 1]);
        // The root x (encoding p) of x^6+x^5+1 generates the whole group.
        assert_eq!(f64.mult_order(2), 63);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FiniteField::new(4, 1).is_err());
        assert!(FiniteField::new(2, 40).is_err());
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(f.inv(0), Err(Error::ZeroInverse));
        let g = FiniteField::new(7, 1).unwrap();
        assert_eq!(f.add_e(f.elem(1), g.elem(1)), Err(Error::FieldMismatch));
    }

    #[test]
    fn gf4_and_gf8_identities() {
        let f = FiniteField::new(2, 2).unwrap();
        let g = f.gamma();
        assert_eq!(f.mul(g, f.mul(g, g)), 1);
        let f8 = FiniteField::new(2, 3).unwrap();
        for x in 0..8 {
            assert_eq!(f8.add(x, x), 0);
        }
    }

    #[test]
    fn gf9_frobenius_is_an_involution() {
        let f = FiniteField::new(3, 2).unwrap();
        for x in 0..9 {
            assert_eq!(f.frobenius(f.frobenius(x)), x);
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = FiniteField::new(2, 17).unwrap();
        let g = f.gamma();
        assert_eq!(f.pow(g, (1 << 17) - 1), 1);
        let x = f.gamma_pow(12345);
        assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
    }
}
