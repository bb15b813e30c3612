//! Point stabilisers of the affine 2-transitive groups with few derangement
//! classes: `SL3(2)`, `SL3(3)`, `GL3(3)`, `Sp4(2)`, `A6`, `A7`, `Sp4(3)`,
//! `Sp4(3).2`, `G2(2)`, `G2(2)′` and `SL2(13) ≤ GL6(3)`.

use super::matrix::{linear_group, reduce_generators, MatrixGenSet, VectorSpace};
use crate::chars::CharacterTable;
use crate::engine::{derived_subgroup, CosetAction, PermGroup};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::{self, Matrix};
use crate::perm::Perm;
use crate::Cyc;

fn space(p: u32, dim: usize) -> Result<VectorSpace> {
    VectorSpace::new(FiniteField::new(p, 1)?, dim)
}

fn expect_order(m: &MatrixGenSet, order: u128, what: &str) -> Result<()> {
    let got = linear_group(m)?.order();
    if got != order {
        return Err(Error::Internal(format!("{what} has order {got}, expected {order}")));
    }
    Ok(())
}

/// Generators of a linear permutation group written back as matrices, pruned
/// to those that enlarge the group.
fn matrices_of(vs: &VectorSpace, g: &PermGroup) -> Vec<Matrix<u32>> {
    reduce_generators(vs.size(), g.generators())
        .iter()
        .map(|x| vs.perm_matrix(x))
        .collect()
}

pub fn sl3_2() -> Result<MatrixGenSet> {
    let vs = space(2, 3)?;
    MatrixGenSet::new(2, 1, 3, vs.sl_gens())
}

pub fn sl3_3() -> Result<MatrixGenSet> {
    let vs = space(3, 3)?;
    MatrixGenSet::new(3, 1, 3, vs.sl_gens())
}

pub fn gl3_3() -> Result<MatrixGenSet> {
    let vs = space(3, 3)?;
    MatrixGenSet::new(3, 1, 3, vs.gl_gens())
}

/// The Gram matrix `[[0, I], [εI, 0]]` with `ε = -1`, alternating in every
/// characteristic.
fn symplectic_form(f: &FiniteField) -> Matrix<u32> {
    let mut j = linalg::zero_matrix(f, 4, 4);
    for i in 0..2 {
        j.set(i, i + 2, 1);
        j.set(i + 2, i, f.neg(1));
    }
    j
}

/// `x ↦ x + B(x, v) v`.
fn transvection(f: &FiniteField, j: &Matrix<u32>, v: &[u32]) -> Matrix<u32> {
    let jv = linalg::mat_vec(f, j, v);
    let mut t = linalg::identity(f, v.len());
    for r in 0..v.len() {
        for c in 0..v.len() {
            t.set(r, c, f.add(t.get(r, c), f.mul(v[r], jv[c])));
        }
    }
    t
}

/// `Sp4(p)` generated by transvections.
pub fn sp4(p: u32) -> Result<MatrixGenSet> {
    let vs = space(p, 4)?;
    let f = &vs.field;
    let j = symplectic_form(f);
    let perms = vs
        .projective_points()
        .into_iter()
        .map(|x| vs.matrix_perm(&transvection(f, &j, &vs.decode(x))))
        .collect::<Result<Vec<_>>>()?;
    let g = PermGroup::new(vs.size(), perms)?;
    let m = MatrixGenSet::new(p, 1, 4, matrices_of(&vs, &g))?;
    let q = p as u128;
    expect_order(&m, q.pow(4) * (q * q - 1) * (q.pow(4) - 1), "Sp4")?;
    Ok(m)
}

/// `Sp4(3).2`, adjoining the similitude `diag(1, 1, -1, -1)`.
pub fn sp4_3_ext() -> Result<MatrixGenSet> {
    let mut m = sp4(3)?;
    let f = m.field();
    let mut d = linalg::identity(&f, 4);
    d.set(2, 2, 2);
    d.set(3, 3, 2);
    m.mats.push(d);
    Ok(m)
}

fn derived(m: &MatrixGenSet) -> Result<MatrixGenSet> {
    let vs = m.space()?;
    let d = derived_subgroup(&linear_group(m)?)?;
    MatrixGenSet::new(m.p, m.k, m.dim, matrices_of(&vs, &d))
}

/// `A6 ≅ Sp4(2)′`.
pub fn a6_in_sp4_2() -> Result<MatrixGenSet> {
    let m = derived(&sp4(2)?)?;
    expect_order(&m, 360, "Sp4(2)'")?;
    Ok(m)
}

/// `A7 ≤ GL4(2) ≅ A8`: `A6` together with the first element of order 7 (in
/// the integer encoding of matrices) that extends it to a group of order
/// 2520.
pub fn a7_in_gl4_2() -> Result<MatrixGenSet> {
    let a6 = a6_in_sp4_2()?;
    let vs = a6.space()?;
    let f = &vs.field;
    let base = linear_group(&a6)?;
    for code in 0u32..1 << 16 {
        let data = (0..16).map(|b| (code >> b) & 1).collect();
        let x = Matrix { rows: 4, cols: 4, data };
        if linalg::determinant(f, &x) == 0 {
            continue;
        }
        let g = vs.matrix_perm(&x)?;
        if g.order() != 7 {
            continue;
        }
        let mut gens = base.generators().to_vec();
        gens.push(g);
        if PermGroup::new(16, gens)?.order() == 2520 {
            let mut mats = a6.mats.clone();
            mats.push(x);
            return MatrixGenSet::new(2, 1, 4, mats);
        }
    }
    Err(Error::Internal("no A7 above A6 in GL4(2)".into()))
}

/// Zorn vector matrices over GF(2), packed as bits: `a` in bit 0, `u` in
/// bits 1..4, `v` in bits 4..7 and `b` in bit 7.
mod zorn {
    fn parts(x: u8) -> (u8, u8, u8, u8) {
        (x & 1, (x >> 1) & 7, (x >> 4) & 7, x >> 7)
    }

    fn dot(u: u8, v: u8) -> u8 {
        ((u & v).count_ones() & 1) as u8
    }

    fn cross(u: u8, v: u8) -> u8 {
        let bit = |w: u8, i: u8| (w >> i) & 1;
        let c = |i: u8, j: u8| (bit(u, i) & bit(v, j)) ^ (bit(u, j) & bit(v, i));
        c(1, 2) | (c(2, 0) << 1) | (c(0, 1) << 2)
    }

    fn sc(a: u8, u: u8) -> u8 {
        if a == 1 {
            u
        } else {
            0
        }
    }

    pub fn mul(x: u8, y: u8) -> u8 {
        let (a, u, v, b) = parts(x);
        let (a2, u2, v2, b2) = parts(y);
        let na = (a & a2) ^ dot(u, v2);
        let nu = sc(a, u2) ^ sc(b2, u) ^ cross(v, v2);
        let nv = sc(a2, v) ^ sc(b, v2) ^ cross(u, u2);
        let nb = (b & b2) ^ dot(v, u2);
        na | (nu << 1) | (nv << 4) | (nb << 7)
    }

    /// The linear map with the given images of the eight basis vectors.
    pub fn apply(images: &[u8; 8], x: u8) -> u8 {
        (0..8).filter(|i| (x >> i) & 1 == 1).fold(0, |acc, i| acc ^ images[i])
    }
}

/// Every automorphism of the split octonions over GF(2), as basis images.
/// An automorphism is fixed by the images `y1, y2, y3` of `u1, u2, u3`.
pub fn octonion_automorphisms() -> Vec<[u8; 8]> {
    let nil: Vec<u8> = (1..=255u8).filter(|&x| zorn::mul(x, x) == 0).collect();
    let mut out = Vec::new();
    for &y1 in &nil {
        for &y2 in &nil {
            let v3 = zorn::mul(y1, y2);
            if v3 == 0 {
                continue;
            }
            for &y3 in &nil {
                let v1 = zorn::mul(y2, y3);
                let v2 = zorn::mul(y3, y1);
                if v1 == 0 || v2 == 0 {
                    continue;
                }
                let images = [
                    zorn::mul(y1, v1),
                    y1,
                    y2,
                    y3,
                    v1,
                    v2,
                    v3,
                    zorn::mul(v1, y1),
                ];
                let bijective = {
                    let mut seen = [false; 256];
                    (0..=255u8).all(|x| !std::mem::replace(&mut seen[zorn::apply(&images, x) as usize], true))
                };
                if !bijective {
                    continue;
                }
                let hom = (0..8).all(|i| {
                    (0..8).all(|j| {
                        let (s, t) = (1u8 << i, 1u8 << j);
                        zorn::apply(&images, zorn::mul(s, t))
                            == zorn::mul(images[i], images[j])
                    })
                });
                if hom {
                    out.push(images);
                }
            }
        }
    }
    out
}

/// `G2(2)` on the trace-zero octonions modulo the identity, in the
/// coordinates `(u, v)`.
pub fn g2_2() -> Result<MatrixGenSet> {
    let auts = octonion_automorphisms();
    if auts.len() != 12096 {
        return Err(Error::Internal(format!("found {} octonion automorphisms", auts.len())));
    }
    let vs = space(2, 6)?;
    let f = &vs.field;
    let mut kept: Vec<Perm> = Vec::new();
    let mut mats = Vec::new();
    let mut cur = PermGroup::trivial(64);
    for phi in &auts {
        let mut m = linalg::zero_matrix(f, 6, 6);
        for c in 0..6 {
            let img = (phi[c + 1] >> 1) & 63;
            for r in 0..6 {
                m.set(r, c, ((img >> r) & 1) as u32);
            }
        }
        let x = vs.matrix_perm(&m)?;
        if !cur.contains(&x) {
            kept.push(x);
            mats.push(m);
            cur = PermGroup::new(64, kept.clone())?;
            if cur.order() == 12096 {
                break;
            }
        }
    }
    let m = MatrixGenSet::new(2, 1, 6, mats)?;
    expect_order(&m, 12096, "G2(2)")?;
    Ok(m)
}

/// `G2(2)′ ≅ U3(3)`.
pub fn g2_2_derived() -> Result<MatrixGenSet> {
    let m = derived(&g2_2()?)?;
    expect_order(&m, 6048, "G2(2)'")?;
    Ok(m)
}

/// A character value in `Z[(1+√13)/2]` reduced mod 3 through `√13 ↦ 1`.
fn reduce_mod3(v: &Cyc) -> Result<u32> {
    if let Some(n) = v.to_scalar() {
        return Ok(n.rem_euclid(3) as u32);
    }
    let e = v.conductor() as i64;
    // ζ ↦ ζ^k with k a non-residue mod 13 moves √13 to -√13.
    let k = (2..)
        .find(|&k: &i64| num_integer::Integer::gcd(&k, &e) == 1 && [2, 5, 6, 7, 8, 11].contains(&(k % 13)))
        .expect("unit exists");
    let bad = || Error::Internal(format!("character value {v} is not in Q(√13)"));
    let x = (v.clone() + v.galois(k)).to_scalar().ok_or_else(bad)?;
    let w = v.scale(&2) - Cyc::from_int(v.conductor(), x);
    let d = (w.clone() * w.clone()).to_scalar().ok_or_else(bad)?;
    if d < 0 || d % 13 != 0 {
        return Err(bad());
    }
    let y = num_integer::Roots::sqrt(&(d / 13));
    if y * y * 13 != d {
        return Err(bad());
    }
    let (re, im) = w.to_complex();
    if im.abs() > 1e-6 {
        return Err(bad());
    }
    let y = if re < 0.0 { -y } else { y };
    Ok((2 * (x + y)).rem_euclid(3) as u32)
}

/// A monomial matrix: `e_i ↦ sign[i] e_{perm[i]}`.
struct Monomial {
    perm: Vec<usize>,
    sign: Vec<u32>,
}

impl Monomial {
    fn apply(&self, f: &FiniteField, v: &[u32]) -> Vec<u32> {
        let mut w = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            w[self.perm[i]] = f.mul(x, self.sign[i]);
        }
        w
    }
}

/// Rows of the rref of `vectors` and their pivot columns.
fn row_basis(f: &FiniteField, vectors: Vec<Vec<u32>>) -> (Vec<Vec<u32>>, Vec<usize>) {
    if vectors.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let mut m = Matrix::from_rows(vectors);
    let pivots = linalg::rref(f, &mut m);
    let rows = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
    (rows, pivots)
}

/// The matrices of linear maps `act` restricted to the invariant subspace
/// spanned by `basis` (rref rows with the given pivots).
fn restrict(
    f: &FiniteField,
    basis: &[Vec<u32>],
    pivots: &[usize],
    act: &[impl Fn(&[u32]) -> Vec<u32>],
) -> Vec<Matrix<u32>> {
    let r = basis.len();
    act.iter()
        .map(|a| {
            let mut m = linalg::zero_matrix(f, r, r);
            for (l, b) in basis.iter().enumerate() {
                let w = a(b);
                for (k, &p) in pivots.iter().enumerate() {
                    m.set(k, l, w[p]);
                }
            }
            m
        })
        .collect()
}

/// The smallest invariant subspace containing `v`.
fn spin(f: &FiniteField, v: Vec<u32>, gens: &[Matrix<u32>]) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut vecs = vec![v];
    let mut next = 0;
    let (mut basis, mut pivots) = row_basis(f, vecs.clone());
    while next < vecs.len() {
        let x = vecs[next].clone();
        next += 1;
        for g in gens {
            let y = linalg::mat_vec(f, g, &x);
            let mut trial = basis.clone();
            trial.push(y.clone());
            let (b, p) = row_basis(f, trial);
            if b.len() > basis.len() {
                basis = b;
                pivots = p;
                vecs.push(y);
            }
        }
    }
    (basis, pivots)
}

/// `SL2(13) ≤ GL6(3)`, cut out of the module induced from the sign
/// character of `C6 ≤ SL2(13)` by the idempotent of a faithful character of
/// degree 6.
pub fn sl2_13_in_gl6_3() -> Result<MatrixGenSet> {
    let plane = space(13, 2)?;
    let gens = plane
        .sl_gens()
        .iter()
        .map(|m| plane.matrix_perm(m))
        .collect::<Result<Vec<_>>>()?;
    let g = PermGroup::new(plane.size(), gens)?;
    let table = CharacterTable::new(&g)?;
    let centre = (0..table.len())
        .find(|&c| table.class_sizes[c] == 1 && table.class_orders[c] == 2)
        .ok_or_else(|| Error::Internal("no central involution".into()))?;
    let theta = table
        .rows
        .iter()
        .find(|r| r[0].to_scalar() == Some(6) && r[centre].to_scalar() == Some(-6))
        .ok_or_else(|| Error::Internal("no faithful character of degree 6".into()))?;
    let theta3 = theta.iter().map(reduce_mod3).collect::<Result<Vec<_>>>()?;

    let x = (0..table.len())
        .find(|&c| table.class_orders[c] == 6)
        .map(|c| table.class_reps[c].clone())
        .ok_or_else(|| Error::Internal("no element of order 6".into()))?;
    let k = g.subgroup(vec![x])?;
    let cosets = CosetAction::new(&g, &k)?;
    let reps: Vec<Perm> = (0..cosets.degree()).map(|i| cosets.representative(i)).collect();
    let rep_inv: Vec<Perm> = reps.iter().map(Perm::inverse).collect();
    let f = FiniteField::new(3, 1)?;
    let monomial = |s: &Perm| -> Result<Monomial> {
        let mut perm = Vec::with_capacity(reps.len());
        let mut sign = Vec::with_capacity(reps.len());
        for t in &reps {
            let st = s.mul(t);
            let j = cosets.label_of(&st).ok_or_else(|| Error::Internal("coset label".into()))?;
            let c = rep_inv[j].mul(&st);
            perm.push(j);
            sign.push(if c.pow(3).is_identity() { 1 } else { 2 });
        }
        Ok(Monomial { perm, sign })
    };

    // e = Σ θ(g⁻¹) ρ(g), up to the unit 6/|G| mod 3.
    let n = reps.len();
    let mut e = vec![0u32; n * n];
    let classes = g.classes()?;
    let chain = g.chain();
    let mut err = None;
    g.for_each_element(|h| {
        let c = classes.class_of(chain, h).expect("element of G");
        let w = theta3[table.inverse[c]];
        if w == 0 {
            return true;
        }
        match monomial(h) {
            Ok(m) => {
                for i in 0..n {
                    let cell = &mut e[m.perm[i] * n + i];
                    *cell = (*cell + w * m.sign[i]) % 3;
                }
                true
            }
            Err(x) => {
                err = Some(x);
                false
            }
        }
    })?;
    if let Some(x) = err {
        return Err(x);
    }
    // Column space of e.
    let columns: Vec<Vec<u32>> = (0..n).map(|c| (0..n).map(|r| e[r * n + c]).collect()).collect();
    let (basis, pivots) = row_basis(&f, columns);
    if basis.len() != 12 {
        return Err(Error::Internal(format!("isotypic component has dimension {}", basis.len())));
    }
    let gen_monomials = g.generators().iter().map(monomial).collect::<Result<Vec<_>>>()?;
    let acts: Vec<_> = gen_monomials
        .iter()
        .map(|m| {
            let f = f.clone();
            move |v: &[u32]| m.apply(&f, v)
        })
        .collect();
    let big = restrict(&f, &basis, &pivots, &acts);

    for code in 1..3u64.pow(12) {
        let v: Vec<u32> = (0..12).map(|i| (code / 3u64.pow(i) % 3) as u32).collect();
        if v.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        let (w, wp) = spin(&f, v, &big);
        if w.len() != 6 {
            continue;
        }
        let acts: Vec<_> = big
            .iter()
            .map(|m| {
                let f = f.clone();
                move |v: &[u32]| linalg::mat_vec(&f, m, v)
            })
            .collect();
        let m = MatrixGenSet::new(3, 1, 6, restrict(&f, &w, &wp, &acts))?;
        let lin = linear_group(&m)?;
        if lin.order() != 2184 || lin.orbit(1).len() != 728 {
            return Err(Error::Internal("submodule is not a transitive SL2(13)".into()));
        }
        return Ok(m);
    }
    Err(Error::Internal("no 6-dimensional submodule".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        expect_order(&sl3_2().unwrap(), 168, "SL3(2)").unwrap();
        expect_order(&gl3_3().unwrap(), 11232, "GL3(3)").unwrap();
        expect_order(&sp4(2).unwrap(), 720, "Sp4(2)").unwrap();
    }

    #[test]
    fn zorn_identity() {
        let one = 1 | 1 << 7;
        assert!((0..=255u8).all(|x| zorn::mul(one, x) == x && zorn::mul(x, one) == x));
    }
}
