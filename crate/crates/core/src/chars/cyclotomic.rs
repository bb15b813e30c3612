//! Elements of `Q(ζ_e)` or `Z[ζ_e]` in the power basis `1, ζ, .., ζ^(φ(e)-1)`.
//!
//! The power basis is an integral basis of `Z[ζ_e]`, so an algebraic integer
//! has integer coordinates and the zero test is coordinate-wise. Reduction
//! tables for each conductor are built once and shared.

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

/// Coordinate ring: `i64` for cyclotomic integers, `Ratio<i128>` for
/// cyclotomic rationals.
pub trait Scalar: Clone + PartialEq + Num + Signed + FromPrimitive + fmt::Debug + fmt::Display {}
impl<T: Clone + PartialEq + Num + Signed + FromPrimitive + fmt::Debug + fmt::Display> Scalar for T {}

/// Reductions of `ζ^j` for `0 ≤ j < e`.
#[derive(Debug)]
pub struct Basis {
    pub conductor: u64,
    pub phi: usize,
    reduce: Vec<Vec<i64>>,
}

/// Integer coefficients of `Φ_e`, constant term first.
pub fn cyclotomic_polynomial(e: u64) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&e) {
        return p.clone();
    }
    // x^e - 1 divided by Φ_d for each proper divisor d.
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in crate::arith::divisors(e) {
        if d == e {
            continue;
        }
        num = exact_div(&num, &cyclotomic_polynomial(d));
    }
    cache.lock().unwrap().insert(e, num.clone());
    num
}

/// Quotient of `a` by the monic `b`, exact.
fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

impl Basis {
    pub fn get(e: u64) -> Arc<Basis> {
        assert!(e >= 1, "conductor must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Basis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(b) = cache.lock().unwrap().get(&e) {
            return b.clone();
        }
        let phi_poly = cyclotomic_polynomial(e);
        let phi = phi_poly.len() - 1;
        let mut reduce = Vec::with_capacity(e as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..e {
            reduce.push(cur.clone());
            // Multiply by x and fold the x^phi term back.
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * phi_poly[i];
                }
            }
        }
        let b = Arc::new(Basis { conductor: e, phi, reduce });
        cache.lock().unwrap().insert(e, b.clone());
        b
    }

    /// Power-basis coordinates of `ζ^j`.
    pub fn power(&self, j: u64) -> &[i64] {
        &self.reduce[(j % self.conductor) as usize]
    }
}

#[derive(Clone)]
pub struct Cyclotomic<T> {
    basis: Arc<Basis>,
    coords: Vec<T>,
}

impl<T: Scalar> Cyclotomic<T> {
    pub fn zero(e: u64) -> Self {
        let basis = Basis::get(e);
        let coords = vec![T::zero(); basis.phi];
        Cyclotomic { basis, coords }
    }

    pub fn from_scalar(e: u64, c: T) -> Self {
        let mut z = Self::zero(e);
        z.coords[0] = c;
        z
    }

    pub fn from_int(e: u64, c: i64) -> Self {
        Self::from_scalar(e, T::from_i64(c).expect("scalar from i64"))
    }

    /// `ζ_e^k`.
    pub fn root(e: u64, k: i64) -> Self {
        Self::from_exponents(e, &[(k.rem_euclid(e as i64) as u64, T::one())])
    }

    /// `Σ c ζ^j` over the given `(j, c)` pairs.
    pub fn from_exponents(e: u64, terms: &[(u64, T)]) -> Self {
        let mut z = Self::zero(e);
        for (j, c) in terms {
            z.add_power(*j, c);
        }
        z
    }

    fn add_power(&mut self, j: u64, c: &T) {
        if c.is_zero() {
            return;
        }
        let basis = self.basis.clone();
        for (x, &r) in self.coords.iter_mut().zip(basis.power(j)) {
            if r != 0 {
                *x = x.clone() + c.clone() * T::from_i64(r).unwrap();
            }
        }
    }

    pub fn conductor(&self) -> u64 {
        self.basis.conductor
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a scalar when it is rational.
    pub fn to_scalar(&self) -> Option<T> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    /// The same number written over conductor `e`, a multiple of the
    /// current one.
    pub fn lift(&self, e: u64) -> Self {
        let c = self.conductor();
        assert!(e % c == 0, "conductor {e} is not a multiple of {c}");
        if e == c {
            return self.clone();
        }
        let step = e / c;
        let terms: Vec<(u64, T)> = self
            .coords
            .iter()
            .enumerate()
            .map(|(j, x)| (j as u64 * step, x.clone()))
            .collect();
        Self::from_exponents(e, &terms)
    }

    /// The Galois image under `ζ ↦ ζ^k`, `k` prime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let e = self.conductor();
        let k = k.rem_euclid(e as i64) as u64;
        assert!(k.gcd(&e) == 1 || e == 1, "galois exponent must be a unit");
        let terms: Vec<(u64, T)> = self
            .coords
            .iter()
            .enumerate()
            .map(|(j, x)| ((j as u64 * k) % e, x.clone()))
            .collect();
        Self::from_exponents(e, &terms)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, c: &T) -> Self {
        Cyclotomic {
            basis: self.basis.clone(),
            coords: self.coords.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Cyclotomic<U> {
        Cyclotomic {
            basis: self.basis.clone(),
            coords: self.coords.iter().map(f).collect(),
        }
    }

    /// Both operands over the least common conductor.
    fn align(&self, other: &Self) -> (Self, Self) {
        let e = self.conductor().lcm(&other.conductor());
        (self.lift(e), other.lift(e))
    }
}

impl<T: Scalar + ToPrimitive> Cyclotomic<T> {
    /// Floating point value `(re, im)` under `ζ = exp(2πi/e)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor() as f64;
        self.coords.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let a = std::f64::consts::TAU * j as f64 / e;
            (re + c * a.cos(), im + c * a.sin())
        })
    }
}

impl<T: Scalar> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor() == other.conductor() {
            return self.coords == other.coords;
        }
        let (a, b) = self.align(other);
        a.coords == b.coords
    }
}

impl<T: Scalar> Eq for Cyclotomic<T> where T: Eq {}

impl<T: Scalar> Add for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn add(self, rhs: Self) -> Cyclotomic<T> {
        if self.conductor() != rhs.conductor() {
            let (a, b) = self.align(rhs);
            return &a + &b;
        }
        Cyclotomic {
            basis: self.basis.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Scalar> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Scalar> Sub for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn sub(self, rhs: Self) -> Cyclotomic<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn mul(self, rhs: Self) -> Cyclotomic<T> {
        if self.conductor() != rhs.conductor() {
            let (a, b) = self.align(rhs);
            return &a * &b;
        }
        let phi = self.basis.phi;
        let mut prod = vec![T::zero(); 2 * phi - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = prod[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        let mut out = Cyclotomic::zero(self.conductor());
        for (k, c) in prod.iter().enumerate() {
            out.add_power(k as u64, c);
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl<T: Scalar> $tr for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $f(self, rhs: Self) -> Cyclotomic<T> {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<T: Scalar> fmt::Debug for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc[e={}]({})", self.conductor(), self)
    }
}

/// `a + b·z^k` with `z = ζ_e`.
impl<T: Scalar> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mono = match j {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{j}"),
            };
            if j == 0 {
                write!(f, "{sign}{a}")?;
            } else if a.is_one() {
                write!(f, "{sign}{mono}")?;
            } else {
                write!(f, "{sign}{a}·{mono}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Cyc, CycQ, Rational};

    #[test]
    fn polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105).len(), 49);
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn arithmetic() {
        let z = Cyc::root(5, 1);
        let mut s = Cyc::zero(5);
        for k in 0..5 {
            s = &s + &Cyc::root(5, k);
        }
        assert!(s.is_zero());
        assert_eq!(&z * &z.conj(), Cyc::from_int(5, 1));
        // 1 + 2cos(2π/5)·... the golden ratio: (z + z^4)^2 + (z + z^4) = 1.
        let t = &z + &Cyc::root(5, 4);
        assert_eq!(&(&t * &t) + &t, Cyc::from_int(5, 1));
        // i from conductor 4 equals ζ_12^3.
        assert_eq!(Cyc::root(4, 1), Cyc::root(12, 3));
        assert_eq!(Cyc::root(3, 1).lift(6), Cyc::root(6, 2));
        let q = CycQ::from_scalar(3, Rational::new(1, 2));
        assert_eq!((&q + &q).to_scalar(), Some(Rational::from_integer(1)));
    }

    #[test]
    fn display() {
        assert_eq!(Cyc::zero(7).to_string(), "0");
        assert_eq!(Cyc::root(6, 2).to_string(), "-1 + z");
        assert_eq!(Cyc::from_int(1, -3).to_string(), "-3");
        let x = &Cyc::root(8, 2).scale(&2) - &Cyc::root(8, 1);
        assert_eq!(x.to_string(), "-z + 2·z^2");
    }
}
