//! Dense linear algebra over an exact field.
//!
//! Fields whose modulus is only known at run time cannot implement the
//! `num_traits` identities, so the algorithms here are written against a
//! field *context* that owns the arithmetic.

use crate::arith;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub trait FieldOps {
    type Elem: Copy + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }
    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }
}

/// The prime field Z/lZ with `l < 2^62`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    pub modulus: u64,
}

impl FieldOps for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }
    fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        arith::mul_mod(a, b, self.modulus)
    }
    fn inv(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| arith::pow_mod(a, self.modulus - 2, self.modulus))
    }
}

impl FieldOps for FiniteField {
    type Elem = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        FiniteField::add(self, a, b)
    }
    fn neg(&self, a: u32) -> u32 {
        FiniteField::neg(self, a)
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        FiniteField::mul(self, a, b)
    }
    fn inv(&self, a: u32) -> Option<u32> {
        FiniteField::inv(self, a).ok()
    }
}

/// The rationals, with `i128` numerators and denominators.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl FieldOps for Rationals {
    type Elem = Ratio<i128>;
    fn zero(&self) -> Ratio<i128> {
        Ratio::zero()
    }
    fn one(&self) -> Ratio<i128> {
        Ratio::one()
    }
    fn add(&self, a: Ratio<i128>, b: Ratio<i128>) -> Ratio<i128> {
        a + b
    }
    fn neg(&self, a: Ratio<i128>) -> Ratio<i128> {
        -a
    }
    fn mul(&self, a: Ratio<i128>, b: Ratio<i128>) -> Ratio<i128> {
        a * b
    }
    fn inv(&self, a: Ratio<i128>) -> Option<Ratio<i128>> {
        (!a.is_zero()).then(|| a.recip())
    }
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<E>,
}

impl<E: Copy> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }
    pub fn get(&self, i: usize, j: usize) -> E {
        self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

pub fn zero_matrix<F: FieldOps>(f: &F, r: usize, c: usize) -> Matrix<F::Elem> {
    Matrix {
        rows: r,
        cols: c,
        data: vec![f.zero(); r * c],
    }
}

pub fn identity<F: FieldOps>(f: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = zero_matrix(f, n, n);
    for i in 0..n {
        m.set(i, i, f.one());
    }
    m
}

pub fn mat_mul<F: FieldOps>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows);
    let mut m = zero_matrix(f, a.rows, b.cols);
    for i in 0..a.rows {
        for l in 0..a.cols {
            let x = a.get(i, l);
            if f.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let v = f.add(m.get(i, j), f.mul(x, b.get(l, j)));
                m.set(i, j, v);
            }
        }
    }
    m
}

pub fn mat_vec<F: FieldOps>(f: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    (0..a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .zip(v)
                .fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mat<F: FieldOps>(f: &F, v: &[F::Elem], a: &Matrix<F::Elem>) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); a.cols];
    for (i, &x) in v.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            *o = f.add(*o, f.mul(x, a.get(i, j)));
        }
    }
    out
}

pub fn transpose<E: Copy>(a: &Matrix<E>) -> Matrix<E> {
    let mut data = Vec::with_capacity(a.data.len());
    for j in 0..a.cols {
        for i in 0..a.rows {
            data.push(a.get(i, j));
        }
    }
    Matrix {
        rows: a.cols,
        cols: a.rows,
        data,
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: FieldOps>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
            continue;
        };
        if pr != r {
            for j in 0..m.cols {
                let t = m.get(r, j);
                m.set(r, j, m.get(pr, j));
                m.set(pr, j, t);
            }
        }
        let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
        for j in 0..m.cols {
            m.set(r, j, f.mul(inv, m.get(r, j)));
        }
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let x = m.get(i, c);
            if f.is_zero(x) {
                continue;
            }
            for j in 0..m.cols {
                let v = f.sub(m.get(i, j), f.mul(x, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: FieldOps>(f: &F, m: &Matrix<F::Elem>) -> usize {
    let mut a = m.clone();
    rref(f, &mut a).len()
}

/// Basis (as rows) of the right null space `{v : M v = 0}`.
pub fn nullspace<F: FieldOps>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut a = m.clone();
    let pivots = rref(f, &mut a);
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); a.cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(a.get(r, fc));
            }
            v
        })
        .collect()
}

pub fn inverse<F: FieldOps>(f: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    let n = m.rows;
    if n != m.cols {
        return Err(Error::InvalidArgument("inverse of a non-square matrix".into()));
    }
    let mut aug = zero_matrix(f, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, n + i, f.one());
    }
    let piv = rref(f, &mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return Err(Error::SingularMatrix);
    }
    let mut out = zero_matrix(f, n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, aug.get(i, n + j));
        }
    }
    Ok(out)
}

pub fn determinant<F: FieldOps>(f: &F, m: &Matrix<F::Elem>) -> F::Elem {
    let n = m.rows;
    let mut a = m.clone();
    let mut det = f.one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !f.is_zero(a.get(i, c))) else {
            return f.zero();
        };
        if pr != c {
            for j in 0..n {
                let t = a.get(c, j);
                a.set(c, j, a.get(pr, j));
                a.set(pr, j, t);
            }
            det = f.neg(det);
        }
        let piv = a.get(c, c);
        det = f.mul(det, piv);
        let inv = f.inv(piv).expect("nonzero pivot");
        for i in c + 1..n {
            let x = f.mul(a.get(i, c), inv);
            if f.is_zero(x) {
                continue;
            }
            for j in c..n {
                let v = f.sub(a.get(i, j), f.mul(x, a.get(c, j)));
                a.set(i, j, v);
            }
        }
    }
    det
}

/// Characteristic polynomial `det(xI - M)`, constant term first, via
/// reduction to upper Hessenberg form.
pub fn charpoly<F: FieldOps>(f: &F, m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    let n = m.rows;
    let mut h = m.clone();
    // Similarity transforms to Hessenberg form.
    for c in 0..n.saturating_sub(2) {
        let Some(pr) = (c + 1..n).find(|&i| !f.is_zero(h.get(i, c))) else {
            continue;
        };
        if pr != c + 1 {
            for j in 0..n {
                let t = h.get(c + 1, j);
                h.set(c + 1, j, h.get(pr, j));
                h.set(pr, j, t);
            }
            for i in 0..n {
                let t = h.get(i, c + 1);
                h.set(i, c + 1, h.get(i, pr));
                h.set(i, pr, t);
            }
        }
        let inv = f.inv(h.get(c + 1, c)).expect("nonzero pivot");
        for i in c + 2..n {
            let u = f.mul(h.get(i, c), inv);
            if f.is_zero(u) {
                continue;
            }
            for j in 0..n {
                let v = f.sub(h.get(i, j), f.mul(u, h.get(c + 1, j)));
                h.set(i, j, v);
            }
            for r in 0..n {
                let v = f.add(h.get(r, c + 1), f.mul(u, h.get(r, i)));
                h.set(r, c + 1, v);
            }
        }
    }
    // p_0 = 1; p_{k+1}(x) = (x - h_kk) p_k - sum_{i<k} h_ik (prod h_{j+1,j}) p_i
    let mut polys: Vec<Vec<F::Elem>> = vec![vec![f.one()]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![f.zero(); k + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.sub(next[i], f.mul(h.get(k, k), c));
        }
        let mut prod = f.one();
        for i in (0..k).rev() {
            prod = f.mul(prod, h.get(i + 1, i));
            let coef = f.mul(h.get(i, k), prod);
            if f.is_zero(coef) {
                continue;
            }
            for (j, &c) in polys[i].iter().enumerate() {
                next[j] = f.sub(next[j], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Distinct roots in GF(l) of a polynomial over the prime field, ascending.
/// Uses `gcd(f, x^l - x)` followed by deterministic equal-degree splitting.
pub fn roots_mod_prime(f: &PrimeField, poly: &[u64]) -> Vec<u64> {
    let l = f.modulus;
    let p = trim_mod(poly.to_vec());
    if p.len() <= 1 {
        return Vec::new();
    }
    let xl = poly_powmod(f, &[0, 1], l, &p);
    let g = poly_gcd_mod(f, p.clone(), poly_sub_mod(f, &xl, &[0, 1]));
    let mut roots = Vec::new();
    split_linear(f, g, &mut roots);
    roots.sort_unstable();
    roots
}

fn trim_mod(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_monic(f: &PrimeField, a: Vec<u64>) -> Vec<u64> {
    let a = trim_mod(a);
    match a.last() {
        None => a,
        Some(&lead) => {
            let inv = f.inv(lead).unwrap();
            a.into_iter().map(|c| f.mul(c, inv)).collect()
        }
    }
}

fn poly_rem_mod(f: &PrimeField, a: Vec<u64>, b: &[u64]) -> Vec<u64> {
    let mut a = trim_mod(a);
    let d = b.len() - 1;
    let inv = f.inv(b[d]).unwrap();
    while a.len() > d {
        let top = a.len() - 1;
        let c = f.mul(a[top], inv);
        for i in 0..=d {
            let t = top - d + i;
            a[t] = f.sub(a[t], f.mul(c, b[i]));
        }
        a = trim_mod(a);
    }
    a
}

fn poly_mulmod_mod(f: &PrimeField, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = f.add(r[i + j], f.mul(x, y));
        }
    }
    poly_rem_mod(f, r, m)
}

fn poly_powmod(f: &PrimeField, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = poly_rem_mod(f, base.to_vec(), m);
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod_mod(f, &r, &b, m);
        }
        b = poly_mulmod_mod(f, &b, &b, m);
        e >>= 1;
    }
    r
}

fn poly_sub_mod(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim_mod(
        (0..n)
            .map(|i| f.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
            .collect(),
    )
}

fn poly_gcd_mod(f: &PrimeField, a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    let (mut a, mut b) = (trim_mod(a), trim_mod(b));
    while !b.is_empty() {
        let r = poly_rem_mod(f, a, &b);
        a = b;
        b = r;
    }
    poly_monic(f, a)
}

fn poly_div_mod(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = trim_mod(a.to_vec());
    let d = b.len() - 1;
    let inv = f.inv(b[d]).unwrap();
    if r.len() <= d {
        return Vec::new();
    }
    let mut q = vec![0u64; r.len() - d];
    while r.len() > d {
        let top = r.len() - 1;
        let c = f.mul(r[top], inv);
        q[top - d] = c;
        for i in 0..=d {
            r[top - d + i] = f.sub(r[top - d + i], f.mul(c, b[i]));
        }
        r = trim_mod(r);
    }
    q
}

fn split_linear(f: &PrimeField, g: Vec<u64>, out: &mut Vec<u64>) {
    let g = poly_monic(f, g);
    match g.len() {
        0 | 1 => {}
        2 => out.push(f.neg(g[0])),
        _ => {
            if f.modulus == 2 {
                for r in 0..2 {
                    if g.iter().rev().fold(0u64, |acc, &c| f.add(f.mul(acc, r), c)) == 0 {
                        out.push(r);
                    }
                }
                return;
            }
            // gcd(g, (x+a)^((l-1)/2) - 1) for a = 0, 1, 2, ... splits g.
            for a in 0..f.modulus {
                let h = poly_powmod(f, &[a, 1], (f.modulus - 1) / 2, &g);
                let d = poly_gcd_mod(f, g.clone(), poly_sub_mod(f, &h, &[1]));
                if d.len() > 1 && d.len() < g.len() {
                    let rest = poly_div_mod(f, &g, &d);
                    split_linear(f, d, out);
                    split_linear(f, rest, out);
                    return;
                }
            }
            unreachable!("deterministic splitting failed");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_determinant_over_gf4() {
        let f = FiniteField::new(2, 2).unwrap();
        let m = Matrix::from_rows(vec![vec![1, 2], vec![2, 1]]);
        let inv = inverse(&f, &m).unwrap();
        assert_eq!(mat_mul(&f, &m, &inv), identity(&f, 2));
        assert_ne!(determinant(&f, &m), 0);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let f = PrimeField { modulus: 7 };
        let m = Matrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let ns = nullspace(&f, &m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(mat_vec(&f, &m, &v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn charpoly_and_roots() {
        let f = PrimeField { modulus: 101 };
        // Companion-like matrix with eigenvalues 2, 3, 5.
        let m = Matrix::from_rows(vec![vec![2, 1, 0], vec![0, 3, 1], vec![0, 0, 5]]);
        let cp = charpoly(&f, &m);
        assert_eq!(cp.len(), 4);
        assert_eq!(roots_mod_prime(&f, &cp), vec![2, 3, 5]);
        let dense = Matrix::from_rows(vec![vec![4, 7, 1], vec![3, 9, 2], vec![8, 8, 8]]);
        let cp = charpoly(&f, &dense);
        for r in roots_mod_prime(&f, &cp) {
            let mut s = dense.clone();
            for i in 0..3 {
                s.set(i, i, f.sub(s.get(i, i), r));
            }
            assert_eq!(determinant(&f, &s), 0);
        }
    }
}
