//! Point stabilisers of the 2-transitive affine groups with two classes of
//! derangements: `2²:S3`, and `q²:H` with `H` built around a quaternion
//! group `Q8 ≤ GL2(q)` for `q ∈ {5, 11, 29}`, and `3⁴:H` with `H` built
//! around the extraspecial group `Q8 ∘ D8 ≤ GL4(3)`.

use super::matrix::{affine_group, MatrixGenSet, VectorSpace};
use crate::derangements;
use crate::engine::PermGroup;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::{self, Matrix};
use std::collections::{BTreeSet, HashSet, VecDeque};

/// A 2×2 matrix over GF(p), row major.
type M2 = [u32; 4];

fn mul2(p: u32, a: &M2, b: &M2) -> M2 {
    let m = |x: u32, y: u32| (x as u64 * y as u64 % p as u64) as u32;
    let s = |x: u32, y: u32| (x + y) % p;
    [
        s(m(a[0], b[0]), m(a[1], b[2])),
        s(m(a[0], b[1]), m(a[1], b[3])),
        s(m(a[2], b[0]), m(a[3], b[2])),
        s(m(a[2], b[1]), m(a[3], b[3])),
    ]
}

fn det2(p: u32, a: &M2) -> u32 {
    let pp = p as u64;
    ((a[0] as u64 * a[3] as u64 % pp + pp - a[1] as u64 * a[2] as u64 % pp) % pp) as u32
}

fn inv2(p: u32, a: &M2) -> M2 {
    let d = det2(p, a);
    let di = crate::arith::inv_mod(d as u64, p as u64).expect("invertible") as u32;
    let m = |x: u32| (x as u64 * di as u64 % p as u64) as u32;
    let n = |x: u32| (p - x) % p;
    [m(a[3]), m(n(a[1])), m(n(a[2])), m(a[0])]
}

const I2: M2 = [1, 0, 0, 1];

fn order2(p: u32, a: &M2) -> u64 {
    let mut x = *a;
    let mut n = 1;
    while x != I2 {
        x = mul2(p, &x, a);
        n += 1;
    }
    n
}

/// The matrix group generated by `gens`, as a set; `None` past `cap`.
fn closure2(p: u32, gens: &[M2], cap: usize) -> Option<HashSet<M2>> {
    let mut seen: HashSet<M2> = HashSet::from([I2]);
    let mut queue = VecDeque::from([I2]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul2(p, &x, g);
            if seen.insert(y) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen)
}

fn to_matrix(a: &M2) -> Matrix<u32> {
    Matrix::from_rows(vec![vec![a[0], a[1]], vec![a[2], a[3]]])
}

/// `i = [[0,-1],[1,0]]` and `j = [[a,b],[b,-a]]` with `a² + b² = -1`.
pub fn quaternion_gens(p: u32) -> (M2, M2) {
    let (a, b) = (0..p)
        .flat_map(|a| (0..p).map(move |b| (a, b)))
        .find(|&(a, b)| (a * a + b * b) % p == p - 1)
        .expect("-1 is a sum of two squares mod p");
    ([0, p - 1, 1, 0], [a, b, b, (p - a) % p])
}

/// Every element of `GL2(p)` normalising the group `s` (given as a set with
/// generators).
fn normalizer_gl2(p: u32, gens: &[M2], s: &HashSet<M2>) -> Vec<M2> {
    let mut out = Vec::new();
    for code in 0..(p as u64).pow(4) {
        let mut c = code;
        let mut g = [0u32; 4];
        for x in g.iter_mut() {
            *x = (c % p as u64) as u32;
            c /= p as u64;
        }
        if det2(p, &g) == 0 {
            continue;
        }
        let gi = inv2(p, &g);
        if gens.iter().all(|x| s.contains(&mul2(p, &mul2(p, &g, x), &gi))) {
            out.push(g);
        }
    }
    out
}

fn gl2_gens(p: u32, mats: &[M2]) -> Result<MatrixGenSet> {
    MatrixGenSet::new(p, 1, 2, mats.iter().map(to_matrix).collect())
}

/// `GL2(2) ≅ S3`, stabiliser of `2²:S3 ≅ S4`.
pub fn p4_2() -> Result<MatrixGenSet> {
    let vs = VectorSpace::new(FiniteField::new(2, 1)?, 2)?;
    MatrixGenSet::new(2, 1, 2, vs.gl_gens())
}

/// `N_{GL2(11)}(Q8)`, of order 240.
pub fn p121_42() -> Result<MatrixGenSet> {
    let p = 11;
    let (i, j) = quaternion_gens(p);
    let q8 = closure2(p, &[i, j], 8).expect("Q8");
    let n = normalizer_gl2(p, &[i, j], &q8);
    if n.len() != 240 {
        return Err(Error::Internal(format!("normaliser of Q8 in GL2(11) has order {}", n.len())));
    }
    reduce2(p, &n, 240)
}

/// A few generators of the group formed by `elems`, chosen greedily.
fn reduce2(p: u32, elems: &[M2], order: usize) -> Result<MatrixGenSet> {
    let mut gens: Vec<M2> = Vec::new();
    let mut cur: HashSet<M2> = HashSet::from([I2]);
    for g in elems {
        if !cur.contains(g) {
            gens.push(*g);
            cur = closure2(p, &gens, order).ok_or_else(|| Error::Internal("closure too large".into()))?;
            if cur.len() == order {
                break;
            }
        }
    }
    gl2_gens(p, &gens)
}

/// The order-48 subgroups `K` of `N_{GL2(5)}(Q8)` with `K/Q8 ≅ C6`, as
/// distinct element sets.
pub fn p25_candidates() -> Result<Vec<MatrixGenSet>> {
    let p = 5;
    let (i, j) = quaternion_gens(p);
    let q8 = closure2(p, &[i, j], 8).expect("Q8");
    let n = normalizer_gl2(p, &[i, j], &q8);
    if n.len() != 96 {
        return Err(Error::Internal(format!("normaliser of Q8 in GL2(5) has order {}", n.len())));
    }
    let in_q8 = |x: &M2| q8.contains(x);
    let mut seen: Vec<BTreeSet<M2>> = Vec::new();
    let mut out = Vec::new();
    for y in &n {
        let y2 = mul2(p, y, y);
        let y3 = mul2(p, &y2, y);
        let y6 = mul2(p, &y3, &y3);
        if !in_q8(&y6) || in_q8(&y2) || in_q8(&y3) {
            continue;
        }
        let k = closure2(p, &[i, j, *y], 48).ok_or_else(|| Error::Internal("K too large".into()))?;
        if k.len() != 48 {
            continue;
        }
        let set: BTreeSet<M2> = k.into_iter().collect();
        if seen.contains(&set) {
            continue;
        }
        seen.push(set);
        out.push(gl2_gens(p, &[i, j, *y])?);
    }
    Ok(out)
}

/// The first candidate from [`p25_candidates`] whose affine group has two
/// derangement classes.
pub fn p25_17() -> Result<MatrixGenSet> {
    for m in p25_candidates()? {
        let g = affine_group(&m, true)?;
        let h = g.stabilizer(0)?;
        if crate::engine::predicates::is_2transitive(&g) && derangements::kappa(&g, &h)? == 2 {
            return Ok(m);
        }
    }
    Err(Error::Internal("no 5²:(2^(1+2).6) with two derangement classes".into()))
}

/// `SL2(5) = ⟨x, y⟩ ≤ SL2(29)` with `x = [[0,-1],[1,0]]` and `y` the first
/// element of order 3 (trace −1) for which the pair generates a group of
/// order 120.
pub fn sl2_5_in_29() -> Result<(M2, M2, HashSet<M2>)> {
    let p = 29;
    let x: M2 = [0, p - 1, 1, 0];
    for code in 0..(p as u64).pow(3) {
        let (a, b, c) = ((code % 29) as u32, ((code / 29) % 29) as u32, (code / 841) as u32);
        let d = (2 * p - 1 - a) % p;
        let y: M2 = [a, b, c, d];
        if det2(p, &y) != 1 {
            continue;
        }
        let xy = mul2(p, &x, &y);
        if !matches!(order2(p, &xy), 5 | 10) {
            continue;
        }
        if let Some(s) = closure2(p, &[x, y], 120) {
            if s.len() == 120 {
                return Ok((x, y, s));
            }
        }
    }
    Err(Error::Internal("SL2(5) not found in SL2(29)".into()))
}

/// `N_{GL2(29)}(SL2(5)) = SL2(5) ∘ C28`, of order 1680.
pub fn p841_104() -> Result<MatrixGenSet> {
    let p = 29;
    let (x, y, s) = sl2_5_in_29()?;
    let n = normalizer_gl2(p, &[x, y], &s);
    if n.len() != 1680 {
        return Err(Error::Internal(format!("normaliser of SL2(5) has order {}", n.len())));
    }
    let f = FiniteField::new(p, 1)?;
    let g = f.gamma();
    let scalar: M2 = [g, 0, 0, g];
    let h = closure2(p, &[x, y, scalar], 1680).ok_or_else(|| Error::Internal("H too large".into()))?;
    if h.len() != 1680 || n.iter().any(|m| !h.contains(m)) {
        return Err(Error::Internal("SL2(5) with scalars is not the normaliser".into()));
    }
    gl2_gens(p, &[x, y, scalar])
}

fn kron(f: &FiniteField, a: &Matrix<u32>, b: &Matrix<u32>) -> Matrix<u32> {
    let n = a.rows * b.rows;
    let mut m = linalg::zero_matrix(f, n, n);
    for i in 0..a.rows {
        for j in 0..a.cols {
            for k in 0..b.rows {
                for l in 0..b.cols {
                    m.set(i * b.rows + k, j * b.cols + l, f.mul(a.get(i, j), b.get(k, l)));
                }
            }
        }
    }
    m
}

/// The group generated by `gens` as a set of matrices.
fn closure(f: &FiniteField, gens: &[Matrix<u32>], cap: usize) -> Option<HashSet<Vec<u32>>> {
    let n = gens[0].rows;
    let id = linalg::identity(f, n);
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.data.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = linalg::mat_mul(f, &x, g);
            if seen.insert(y.data.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen)
}

/// `E = Q8 ∘ D8` in `GL4(3)` as Kronecker products.
pub fn extraspecial_32() -> Result<Vec<Matrix<u32>>> {
    let f = FiniteField::new(3, 1)?;
    let (i, j) = quaternion_gens(3);
    let id = linalg::identity(&f, 2);
    let r = Matrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
    let s = Matrix::from_rows(vec![vec![1, 0], vec![0, 2]]);
    Ok(vec![
        kron(&f, &to_matrix(&i), &id),
        kron(&f, &to_matrix(&j), &id),
        kron(&f, &id, &r),
        kron(&f, &id, &s),
    ])
}

/// `E:5` for a conjugate of the companion matrix of `Φ5` that normalises
/// `E`; conjugators `h` are tried along a fixed walk through all 4×4
/// matrices.
pub fn p81_70() -> Result<MatrixGenSet> {
    let f = FiniteField::new(3, 1)?;
    let e = extraspecial_32()?;
    let eset = closure(&f, &e, 32).ok_or_else(|| Error::Internal("E too large".into()))?;
    if eset.len() != 32 {
        return Err(Error::Internal("E does not have order 32".into()));
    }
    // Companion matrix of x⁴ + x³ + x² + x + 1.
    let c = Matrix::from_rows(vec![
        vec![0, 0, 0, 2],
        vec![1, 0, 0, 2],
        vec![0, 1, 0, 2],
        vec![0, 0, 1, 2],
    ]);
    let total: u64 = 3u64.pow(16);
    for step in 0..total {
        // A bijection of 0..3^16 since the multiplier is prime to 3.
        let mut code = (step * 7_368_787 + 1_234_567) % total;
        let mut data = vec![0u32; 16];
        for x in data.iter_mut() {
            *x = (code % 3) as u32;
            code /= 3;
        }
        let h = Matrix { rows: 4, cols: 4, data };
        if linalg::determinant(&f, &h) == 0 {
            continue;
        }
        let hi = linalg::inverse(&f, &h)?;
        let ch = linalg::mat_mul(&f, &linalg::mat_mul(&f, &h, &c), &hi);
        let chi = linalg::inverse(&f, &ch)?;
        let normalises = e.iter().all(|x| {
            let y = linalg::mat_mul(&f, &linalg::mat_mul(&f, &ch, x), &chi);
            eset.contains(&y.data)
        });
        if normalises {
            let mut gens = e.clone();
            gens.push(ch);
            let hset = closure(&f, &gens, 160).ok_or_else(|| Error::Internal("H too large".into()))?;
            if hset.len() != 160 {
                return Err(Error::Internal("E:5 does not have order 160".into()));
            }
            return MatrixGenSet::new(3, 1, 4, gens);
        }
    }
    Err(Error::Internal("no conjugate of C5 normalises E".into()))
}

/// The affine group `N:H` on the vectors.
pub fn affine(m: &MatrixGenSet) -> Result<PermGroup> {
    affine_group(m, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stabiliser_orders() {
        let h = crate::constructors::matrix::linear_group(&p121_42().unwrap()).unwrap();
        assert_eq!(h.order(), 240);
        let (_, _, s) = sl2_5_in_29().unwrap();
        assert_eq!(s.len(), 120);
    }

    #[test]
    fn one_p25_candidate_has_two_classes() {
        let mut two = 0;
        for m in p25_candidates().unwrap() {
            let g = affine_group(&m, true).unwrap();
            let h = g.stabilizer(0).unwrap();
            two += (derangements::kappa(&g, &h).unwrap() == 2) as usize;
        }
        assert_eq!(two, 1);
    }
}
