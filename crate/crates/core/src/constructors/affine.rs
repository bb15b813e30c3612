//! One-dimensional semilinear affine groups and `q²:SL2(q)`.
//!
//! For the one-dimensional families the points are the elements of
//! GF(p^k) in their integer encoding.

use super::matrix::VectorSpace;
use crate::engine::PermGroup;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::{self, Matrix};
use crate::perm::Perm;

fn check_size(p: u32, k: u32) -> Result<FiniteField> {
    let q = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
    if q > 1 << 16 {
        return Err(Error::DegreeTooLarge(q as usize));
    }
    FiniteField::new(p, k)
}

/// `x ↦ a x^(p^e)`.
pub fn semilinear(f: &FiniteField, a: u32, e: u32) -> Perm {
    let img = (0..f.order()).map(|x| f.mul(a, f.frobenius_pow(x, e))).collect();
    Perm::from_images_unchecked(img)
}

/// Translations `x ↦ x + p^j` for `j < k`, generating the additive group.
pub fn translations(f: &FiniteField) -> Vec<Perm> {
    let p = f.characteristic();
    (0..f.degree())
        .map(|j| {
            let t = p.pow(j);
            Perm::from_images_unchecked((0..f.order()).map(|x| f.add(x, t)).collect())
        })
        .collect()
}

/// The affine group generated by translations and the semilinear maps
/// `x ↦ a x^(p^e)` for each `(a, e)`.
pub fn affine_semilinear(p: u32, k: u32, maps: &[(u32, u32)]) -> Result<PermGroup> {
    let f = check_size(p, k)?;
    let mut gens: Vec<Perm> = maps.iter().map(|&(a, e)| semilinear(&f, a, e)).collect();
    gens.extend(translations(&f));
    PermGroup::new(f.order() as usize, gens)
}

/// `AGL1(p^k)`, sharply 2-transitive of order `q(q-1)`.
pub fn agl1(p: u32, k: u32) -> Result<PermGroup> {
    let f = check_size(p, k)?;
    affine_semilinear(p, k, &[(f.gamma(), 0)])
}

/// The Frobenius group `q:((q-1)/2)` for odd `q`.
pub fn frobenius_half(p: u32, k: u32) -> Result<PermGroup> {
    if p == 2 {
        return Err(Error::InvalidArgument("frobenius_half needs odd q".into()));
    }
    let f = check_size(p, k)?;
    affine_semilinear(p, k, &[(f.mul(f.gamma(), f.gamma()), 0)])
}

/// `AΓL1(p^k)`.
pub fn gamma_l1(p: u32, k: u32) -> Result<PermGroup> {
    let f = check_size(p, k)?;
    affine_semilinear(p, k, &[(f.gamma(), 0), (1, 1)])
}

/// Point stabiliser `GL1(p^k).⟨φ^(k/2)⟩` extended by translations.
pub fn gl1_ext2(p: u32, k: u32) -> Result<PermGroup> {
    if k % 2 != 0 {
        return Err(Error::InvalidArgument("gl1_ext2 needs even k".into()));
    }
    let f = check_size(p, k)?;
    affine_semilinear(p, k, &[(f.gamma(), 0), (1, k / 2)])
}

/// Parameters of a subgroup `⟨ω^d, ω^s φ^e⟩ ≤ ΓL1(p^k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GammaL1Params {
    pub d: u64,
    pub s: u64,
    pub e: u32,
}

/// Every subgroup of `ΓL1(p^k)` as a distinct set of parameters
/// `⟨ω^d, ω^s φ^e⟩` with `d | q-1`, `e | k`, `0 ≤ s < d`, deduplicated by
/// the element set they generate.
pub fn gamma_l1_subgroups(p: u32, k: u32) -> Result<Vec<(GammaL1Params, PermGroup)>> {
    let f = check_size(p, k)?;
    let q1 = f.order() as u64 - 1;
    let mut seen: Vec<Vec<Perm>> = Vec::new();
    let mut out = Vec::new();
    for d in crate::arith::divisors(q1) {
        for e in crate::arith::divisors(k as u64) {
            let e = e as u32;
            for s in 0..d {
                if e == k && s != 0 {
                    continue;
                }
                let mut gens = vec![semilinear(&f, f.gamma_pow(d), 0)];
                if e != k {
                    gens.push(semilinear(&f, f.gamma_pow(s), e));
                }
                let h = PermGroup::new(f.order() as usize, gens)?;
                let mut elems = h.elements()?;
                elems.sort();
                if seen.contains(&elems) {
                    continue;
                }
                seen.push(elems);
                out.push((GammaL1Params { d, s, e }, h));
            }
        }
    }
    Ok(out)
}

/// `q²:SL2(q)` for `q = 2^m`, built from the 3×3 matrices
/// `[[1,0,0],[α,a,b],[β,c,d]]` acting on the affine plane.
pub struct Sl2AffineChar2 {
    pub m: u32,
    pub space: VectorSpace,
    pub group: PermGroup,
    pub translations: PermGroup,
}

impl Sl2AffineChar2 {
    pub fn new(m: u32) -> Result<Sl2AffineChar2> {
        if !(1..=4).contains(&m) {
            return Err(Error::InvalidArgument("sl2_affine_char2 needs 1 <= m <= 4".into()));
        }
        let f = FiniteField::new(2, m)?;
        let space = VectorSpace::new(f.clone(), 2)?;
        let mut gens = Vec::new();
        let mut trans = Vec::new();
        for j in 0..m {
            let t = 1u32 << j;
            gens.push(embed(&f, [[0, 0], [t, 0]], &[[1, t], [0, 1]]));
            gens.push(embed(&f, [[0, 0], [0, 0]], &[[1, 0], [t, 1]]));
            trans.push(embed(&f, [[t, 0], [0, 0]], &[[1, 0], [0, 1]]));
            trans.push(embed(&f, [[0, 0], [t, 0]], &[[1, 0], [0, 1]]));
        }
        let mats: Vec<Matrix<u32>> = gens.into_iter().chain(trans.iter().cloned()).collect();
        let perms = mats
            .iter()
            .map(|x| plane_perm(&space, x))
            .collect::<Result<Vec<_>>>()?;
        let tperms = trans
            .iter()
            .map(|x| plane_perm(&space, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Sl2AffineChar2 {
            m,
            group: PermGroup::new(space.size(), perms)?,
            translations: PermGroup::new(space.size(), tperms)?,
            space,
        })
    }

    /// The element `[[1,0,0],[α,a,b],[β,c,d]]` as a permutation.
    pub fn element(&self, alpha: u32, beta: u32, abcd: [[u32; 2]; 2]) -> Result<Perm> {
        let f = &self.space.field;
        plane_perm(&self.space, &embed(f, [[alpha, 0], [beta, 0]], &abcd))
    }

    /// The two derangements `z1` (with 1) and `z2` (with γ) whose classes
    /// are distinct when `m ≥ 2`.
    pub fn witnesses(&self) -> Result<(Perm, Perm)> {
        let g = self.space.field.gamma();
        Ok((
            self.element(1, 0, [[1, 0], [1, 1]])?,
            self.element(g, 0, [[1, 0], [1, 1]])?,
        ))
    }
}

/// Builds `[[1,0,0],[α,a,b],[β,c,d]]` with `(α, β) = (t[0][0], t[1][0])`.
fn embed(f: &FiniteField, t: [[u32; 2]; 2], abcd: &[[u32; 2]; 2]) -> Matrix<u32> {
    let mut m = linalg::identity(f, 3);
    m.set(1, 0, t[0][0]);
    m.set(2, 0, t[1][0]);
    m.set(1, 1, abcd[0][0]);
    m.set(1, 2, abcd[0][1]);
    m.set(2, 1, abcd[1][0]);
    m.set(2, 2, abcd[1][1]);
    m
}

fn plane_perm(space: &VectorSpace, m: &Matrix<u32>) -> Result<Perm> {
    let f = &space.field;
    let img = (0..space.size())
        .map(|x| {
            let v = space.decode(x);
            let w = linalg::mat_vec(f, m, &[1, v[0], v[1]]);
            space.encode(&w[1..]) as u32
        })
        .collect();
    Perm::from_images(img)
}

pub fn sl2_affine_char2(m: u32) -> Result<PermGroup> {
    Ok(Sl2AffineChar2::new(m)?.group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(agl1(2, 2).unwrap().order(), 12);
        assert_eq!(agl1(7, 1).unwrap().order(), 42);
        assert_eq!(frobenius_half(13, 1).unwrap().order(), 78);
        assert_eq!(gl1_ext2(3, 2).unwrap().order(), 144);
        assert_eq!(gl1_ext2(5, 2).unwrap().order(), 1200);
        assert_eq!(gamma_l1(2, 3).unwrap().order(), 168);
        assert!(frobenius_half(2, 2).is_err());
        assert!(gl1_ext2(3, 3).is_err());
        for m in 1..=3 {
            let q = 1u128 << m;
            assert_eq!(sl2_affine_char2(m).unwrap().order(), q * q * q * (q * q - 1));
        }
    }

    #[test]
    fn gamma_l1_subgroup_count() {
        // ΓL1(4) ≅ S3 has 6 subgroups.
        assert_eq!(gamma_l1_subgroups(2, 2).unwrap().len(), 6);
    }
}
