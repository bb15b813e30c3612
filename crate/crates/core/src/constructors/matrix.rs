//! Matrix groups over GF(q) and their permutation actions on vectors.
//!
//! A vector `(v_0, .., v_{d-1})` is the point `Σ v_i q^i`. Matrices act on
//! column vectors, so the map from matrices to permutations is a
//! homomorphism for the composition convention of [`Perm`].

use crate::engine::PermGroup;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::{self, Matrix};
use crate::perm::{Perm, MAX_DEGREE};

/// Invertible matrices over GF(p^k) of a fixed dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGenSet {
    pub p: u32,
    pub k: u32,
    pub dim: usize,
    pub mats: Vec<Matrix<u32>>,
}

impl MatrixGenSet {
    pub fn new(p: u32, k: u32, dim: usize, mats: Vec<Matrix<u32>>) -> Result<MatrixGenSet> {
        let f = FiniteField::new(p, k)?;
        for m in &mats {
            if m.rows != dim || m.cols != dim {
                return Err(Error::InvalidArgument(format!(
                    "expected {dim}x{dim} matrix, got {}x{}",
                    m.rows, m.cols
                )));
            }
            if m.data.iter().any(|&x| x >= f.order()) {
                return Err(Error::InvalidArgument("matrix entry outside the field".into()));
            }
            if linalg::determinant(&f, m) == 0 {
                return Err(Error::SingularMatrix);
            }
        }
        Ok(MatrixGenSet { p, k, dim, mats })
    }

    pub fn field(&self) -> FiniteField {
        FiniteField::new(self.p, self.k).expect("validated on construction")
    }

    pub fn space(&self) -> Result<VectorSpace> {
        VectorSpace::new(self.field(), self.dim)
    }
}

/// `GF(q)^d` with point encoding.
#[derive(Debug, Clone)]
pub struct VectorSpace {
    pub field: FiniteField,
    pub dim: usize,
    size: usize,
}

impl VectorSpace {
    pub fn new(field: FiniteField, dim: usize) -> Result<VectorSpace> {
        let size = (field.order() as u64)
            .checked_pow(dim as u32)
            .filter(|&s| s <= MAX_DEGREE as u64)
            .ok_or(Error::DegreeTooLarge(usize::MAX))? as usize;
        Ok(VectorSpace { field, dim, size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn encode(&self, v: &[u32]) -> usize {
        let q = self.q() as usize;
        v.iter().rev().fold(0usize, |acc, &x| acc * q + x as usize)
    }

    pub fn decode(&self, mut x: usize) -> Vec<u32> {
        let q = self.q() as usize;
        (0..self.dim)
            .map(|_| {
                let c = (x % q) as u32;
                x /= q;
                c
            })
            .collect()
    }

    pub fn identity(&self) -> Matrix<u32> {
        linalg::identity(&self.field, self.dim)
    }

    /// The linear action of `m` on all vectors.
    pub fn matrix_perm(&self, m: &Matrix<u32>) -> Result<Perm> {
        if linalg::determinant(&self.field, m) == 0 {
            return Err(Error::SingularMatrix);
        }
        // Linearity: images of basis multiples determine everything, but a
        // direct evaluation is simple and fast enough at this scale.
        let img = (0..self.size)
            .map(|x| self.encode(&linalg::mat_vec(&self.field, m, &self.decode(x))) as u32)
            .collect();
        Perm::from_images(img)
    }

    /// Translation by the vector `v`.
    pub fn translation(&self, v: &[u32]) -> Perm {
        let f = &self.field;
        let img = (0..self.size)
            .map(|x| {
                let w: Vec<u32> = self.decode(x).iter().zip(v).map(|(&a, &b)| f.add(a, b)).collect();
                self.encode(&w) as u32
            })
            .collect();
        Perm::from_images_unchecked(img)
    }

    /// Translations generating the whole translation group.
    pub fn translation_gens(&self) -> Vec<Perm> {
        let p = self.field.characteristic();
        let k = self.field.degree();
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..k {
                let mut v = vec![0u32; self.dim];
                v[i] = p.pow(j);
                out.push(self.translation(&v));
            }
        }
        out
    }

    /// Recovers the matrix of a linear permutation from basis images.
    pub fn perm_matrix(&self, g: &Perm) -> Matrix<u32> {
        let mut m = linalg::zero_matrix(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let mut e = vec![0u32; self.dim];
            e[j] = 1;
            let col = self.decode(g.apply(self.encode(&e)));
            for i in 0..self.dim {
                m.set(i, j, col[i]);
            }
        }
        m
    }

    /// `I + a E_ij`.
    pub fn elementary(&self, i: usize, j: usize, a: u32) -> Matrix<u32> {
        let mut m = self.identity();
        m.set(i, j, a);
        m
    }

    /// Transvections generating `SL_d(q)`.
    pub fn sl_gens(&self) -> Vec<Matrix<u32>> {
        let p = self.field.characteristic();
        let k = self.field.degree();
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i == j {
                    continue;
                }
                for e in 0..k {
                    out.push(self.elementary(i, j, p.pow(e)));
                }
            }
        }
        out
    }

    /// Generators of `GL_d(q)`.
    pub fn gl_gens(&self) -> Vec<Matrix<u32>> {
        let mut out = self.sl_gens();
        let mut d = self.identity();
        d.set(0, 0, self.field.gamma());
        if self.field.order() > 2 {
            out.push(d);
        }
        out
    }

    /// Projective points: nonzero vectors whose last nonzero coordinate is
    /// 1, in increasing encoding.
    pub fn projective_points(&self) -> Vec<usize> {
        (1..self.size)
            .filter(|&x| {
                let v = self.decode(x);
                v.iter().rev().find(|&&c| c != 0) == Some(&1)
            })
            .collect()
    }

    fn normalize(&self, v: &mut [u32]) {
        let f = &self.field;
        if let Some(&lead) = v.iter().rev().find(|&&c| c != 0) {
            let inv = f.inv(lead).unwrap();
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
    }

    /// Action of `m` on projective points, labelled by position in
    /// [`VectorSpace::projective_points`].
    pub fn projective_perm(&self, m: &Matrix<u32>) -> Result<Perm> {
        let pts = self.projective_points();
        let mut label = vec![u32::MAX; self.size];
        for (i, &x) in pts.iter().enumerate() {
            label[x] = i as u32;
        }
        let img = pts
            .iter()
            .map(|&x| {
                let mut w = linalg::mat_vec(&self.field, m, &self.decode(x));
                self.normalize(&mut w);
                label[self.encode(&w)]
            })
            .collect();
        Perm::from_images(img)
    }
}

/// `N:H` on `q^d` points, where `N` is the translation group.
pub fn affine_group(m: &MatrixGenSet, include_translations: bool) -> Result<PermGroup> {
    let vs = m.space()?;
    let mut gens = m
        .mats
        .iter()
        .map(|x| vs.matrix_perm(x))
        .collect::<Result<Vec<_>>>()?;
    if include_translations {
        gens.extend(vs.translation_gens());
    }
    PermGroup::new(vs.size(), gens)
}

/// The matrix group acting on all vectors (the stabiliser of 0 in the
/// affine group).
pub fn linear_group(m: &MatrixGenSet) -> Result<PermGroup> {
    affine_group(m, false)
}

/// The translation subgroup of an affine group on `q^d` points.
pub fn translation_group(vs: &VectorSpace) -> Result<PermGroup> {
    PermGroup::new(vs.size(), vs.translation_gens())
}

/// Keeps only generators that enlarge the group generated so far.
pub fn reduce_generators(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut kept: Vec<Perm> = Vec::new();
    let mut cur = PermGroup::trivial(n);
    for g in gens {
        if !cur.contains(g) {
            kept.push(g.clone());
            cur = PermGroup::new(n, kept.clone()).unwrap();
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_2_gives_s4() {
        let vs = VectorSpace::new(FiniteField::new(2, 1).unwrap(), 2).unwrap();
        let m = MatrixGenSet::new(2, 1, 2, vs.gl_gens()).unwrap();
        let g = affine_group(&m, true).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.degree(), 4);
    }

    #[test]
    fn matrix_roundtrip_and_projective() {
        let vs = VectorSpace::new(FiniteField::new(3, 1).unwrap(), 3).unwrap();
        let gens = vs.sl_gens();
        let h = linear_group(&MatrixGenSet::new(3, 1, 3, gens.clone()).unwrap()).unwrap();
        assert_eq!(h.order(), 5616);
        let p = vs.matrix_perm(&gens[1]).unwrap();
        assert_eq!(vs.perm_matrix(&p), gens[1]);
        assert_eq!(vs.projective_points().len(), 13);
        let vs4 = VectorSpace::new(FiniteField::new(2, 2).unwrap(), 3).unwrap();
        let pg: Vec<Perm> = vs4
            .sl_gens()
            .iter()
            .map(|m| vs4.projective_perm(m).unwrap())
            .collect();
        assert_eq!(PermGroup::new(21, pg).unwrap().order(), 20160);
    }

    #[test]
    fn singular_rejected() {
        let z = Matrix::from_rows(vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(MatrixGenSet::new(2, 1, 2, vec![z]), Err(Error::SingularMatrix));
    }
}
