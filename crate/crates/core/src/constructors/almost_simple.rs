//! Almost simple groups with their named subgroups: the small alternating
//! and symmetric groups, the `A6` family, `L2(7)`, `L2(8):3`, `L3(4)`,
//! `Sz(8):3` and `M11`.
//!
//! Subgroups are pinned by a formula (stabiliser, normaliser of a Sylow
//! subgroup) and checked by order on construction.

use super::families::{alternating, mathieu10, mathieu11, pgaml2, pgl2, psl2, symmetric};
use super::matrix::{affine_group, MatrixGenSet, VectorSpace};
use crate::engine::{normalizer, sylow_subgroup, CosetAction, PermGroup};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::Matrix;
use crate::perm::Perm;

/// A group together with named subgroups, in a fixed order.
#[derive(Debug, Clone)]
pub struct Named {
    pub name: String,
    pub group: PermGroup,
    pub subgroups: Vec<(String, PermGroup)>,
}

impl Named {
    pub fn subgroup(&self, name: &str) -> Option<&PermGroup> {
        self.subgroups.iter().find(|(n, _)| n == name).map(|x| &x.1)
    }

    pub fn subgroup_list(&self) -> Vec<PermGroup> {
        self.subgroups.iter().map(|x| x.1.clone()).collect()
    }
}

fn expect(name: &str, g: PermGroup, order: u128) -> Result<(String, PermGroup)> {
    if g.order() != order {
        return Err(Error::Internal(format!(
            "{name} has order {}, expected {order}",
            g.order()
        )));
    }
    Ok((name.to_string(), g))
}

fn n_sylow(g: &PermGroup, p: u64) -> Result<PermGroup> {
    normalizer(g, &sylow_subgroup(g, p)?)
}

fn named(name: &str, group: PermGroup, subs: Vec<Result<(String, PermGroup)>>) -> Result<Named> {
    Ok(Named {
        name: name.to_string(),
        group,
        subgroups: subs.into_iter().collect::<Result<Vec<_>>>()?,
    })
}

pub fn a5() -> Result<Named> {
    let g = alternating(5);
    named(
        "A5",
        g.clone(),
        vec![
            expect("D10", n_sylow(&g, 5)?, 10),
            expect("D6", n_sylow(&g, 3)?, 6),
            expect("A4", g.stabilizer(0)?, 12),
            expect("Z5", sylow_subgroup(&g, 5)?, 5),
        ],
    )
}

pub fn s5() -> Result<Named> {
    let g = symmetric(5);
    named(
        "S5",
        g.clone(),
        vec![
            expect("D12", g.set_stabilizer(&[0, 1, 2])?, 12),
            expect("S4", g.stabilizer(0)?, 24),
            expect("5:4", n_sylow(&g, 5)?, 20),
        ],
    )
}

pub fn a6() -> Result<Named> {
    let g = alternating(6);
    named(
        "A6",
        g.clone(),
        vec![
            expect("3^2:4", n_sylow(&g, 3)?, 36),
            expect("A5", g.stabilizer(0)?, 60),
            expect("S4", g.set_stabilizer(&[0, 1])?, 24),
        ],
    )
}

pub fn s6() -> Result<Named> {
    let g = symmetric(6);
    named(
        "S6",
        g.clone(),
        vec![
            expect("3^2:D8", n_sylow(&g, 3)?, 72),
            expect("S4x2", g.set_stabilizer(&[0, 1])?, 48),
            expect("S5", g.stabilizer(0)?, 120),
        ],
    )
}

pub fn m10() -> Result<Named> {
    let g = mathieu10()?;
    named(
        "M10",
        g.clone(),
        vec![
            expect("[16]", sylow_subgroup(&g, 2)?, 16),
            expect("3^2:Q8", n_sylow(&g, 3)?, 72),
            expect("5:4", n_sylow(&g, 5)?, 20),
        ],
    )
}

pub fn pgl2_9() -> Result<Named> {
    let g = pgl2(3, 2)?;
    named(
        "PGL2_9",
        g.clone(),
        vec![
            expect("3^2:8", n_sylow(&g, 3)?, 72),
            expect("D20", n_sylow(&g, 5)?, 20),
            expect("D16", sylow_subgroup(&g, 2)?, 16),
        ],
    )
}

pub fn aut_a6() -> Result<Named> {
    let g = pgaml2(3, 2)?;
    named(
        "Aut_A6",
        g.clone(),
        vec![
            expect("3^2:[2^4]", n_sylow(&g, 3)?, 144),
            expect("10:4", n_sylow(&g, 5)?, 40),
            expect("[2^5]", sylow_subgroup(&g, 2)?, 32),
        ],
    )
}

/// `L2(7) ≅ L3(2)` on the seven points of the Fano plane.
pub fn l2_7() -> Result<Named> {
    let vs = VectorSpace::new(FiniteField::new(2, 1)?, 3)?;
    let gens = vs
        .sl_gens()
        .iter()
        .map(|m| vs.projective_perm(m))
        .collect::<Result<Vec<_>>>()?;
    let g = PermGroup::new(7, gens)?;
    named(
        "L2_7",
        g.clone(),
        vec![
            expect("7:3", n_sylow(&g, 7)?, 21),
            expect("S4", g.stabilizer(0)?, 24),
        ],
    )
}

/// `L2(8):3 = PΓL2(8)` on 28 points, the cosets of `D18:3`.
pub fn l2_8_3() -> Result<Named> {
    let g = pgaml2(2, 3)?;
    let c9 = sylow_subgroup(&psl2(2, 3)?, 3)?;
    let h = normalizer(&g, &c9)?;
    named("L2_8.3", g, vec![expect("D18:3", h, 54)])
}

/// `L3(4)` on the 21 points of `PG(2,4)`.
pub fn l3_4() -> Result<Named> {
    let vs = VectorSpace::new(FiniteField::new(2, 2)?, 3)?;
    let gens = vs
        .sl_gens()
        .iter()
        .map(|m| vs.projective_perm(m))
        .collect::<Result<Vec<_>>>()?;
    let g = PermGroup::new(21, gens)?;
    if g.order() != 20160 {
        return Err(Error::Internal("L3(4) has the wrong order".into()));
    }
    named("L3_4", g.clone(), vec![expect("2^4:A5", g.stabilizer(0)?, 960)])
}

/// `Sz(8)` as 4×4 matrices over GF(8) with `σ: x ↦ x⁴`, acting on the 65
/// points of its ovoid in `PG(3,8)`, extended by the field automorphism.
pub struct Suzuki {
    pub simple: PermGroup,
    pub extended: PermGroup,
}

pub fn suzuki8() -> Result<Suzuki> {
    let f = FiniteField::new(2, 3)?;
    let vs = VectorSpace::new(f.clone(), 4)?;
    let s = |x: u32| f.frobenius_pow(x, 2);
    let t = |a: u32, b: u32| -> Matrix<u32> {
        let a2s = f.mul(f.mul(a, a), s(a));
        let a1s = f.mul(a, s(a));
        let r3 = f.add(f.add(a2s, f.mul(a, b)), s(b));
        Matrix::from_rows(vec![
            vec![1, 0, 0, 0],
            vec![a, 1, 0, 0],
            vec![b, s(a), 1, 0],
            vec![r3, f.add(a1s, b), a, 1],
        ])
    };
    let lam = f.gamma();
    let l2 = f.mul(lam, lam);
    let l3 = f.mul(l2, lam);
    let m = Matrix::from_rows(vec![
        vec![l3, 0, 0, 0],
        vec![0, l2, 0, 0],
        vec![0, 0, f.inv(l2)?, 0],
        vec![0, 0, 0, f.inv(l3)?],
    ]);
    let w = Matrix::from_rows(vec![
        vec![0, 0, 0, 1],
        vec![0, 0, 1, 0],
        vec![0, 1, 0, 0],
        vec![1, 0, 0, 0],
    ]);
    let mut mats = vec![m, w];
    for j in 0..3 {
        mats.push(t(1 << j, 0));
        mats.push(t(0, 1 << j));
    }
    let pts = vs.projective_points();
    let mut perms = mats
        .iter()
        .map(|x| vs.projective_perm(x))
        .collect::<Result<Vec<_>>>()?;
    // The base point e4 is fixed by the lower triangular matrices.
    let e4 = vs.encode(&[0, 0, 0, 1]);
    let start = pts.iter().position(|&x| x == e4).unwrap();
    let big = PermGroup::new(pts.len(), perms.clone())?;
    let mut orbit = big.orbit(start);
    orbit.sort_unstable();
    if orbit.len() != 65 {
        return Err(Error::Internal(format!("ovoid orbit has {} points", orbit.len())));
    }
    let frob = Perm::from_images(
        pts.iter()
            .map(|&x| {
                let v: Vec<u32> = vs.decode(x).iter().map(|&c| f.frobenius(c)).collect();
                pts.iter().position(|&y| y == vs.encode(&v)).unwrap() as u32
            })
            .collect(),
    )?;
    let restrict = |p: &Perm| -> Result<Perm> {
        let img = orbit
            .iter()
            .map(|&x| {
                orbit
                    .binary_search(&p.apply(x))
                    .map(|i| i as u32)
                    .map_err(|_| Error::Internal("orbit not invariant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(img)
    };
    let gens = perms.iter().map(restrict).collect::<Result<Vec<_>>>()?;
    let simple = PermGroup::new(65, gens.clone())?;
    perms = gens;
    perms.push(restrict(&frob)?);
    let extended = PermGroup::new(65, perms)?;
    if simple.order() != 29120 || extended.order() != 87360 {
        return Err(Error::Internal("Suzuki group has the wrong order".into()));
    }
    Ok(Suzuki { simple, extended })
}

pub fn sz8_3() -> Result<Named> {
    let g = suzuki8()?.extended;
    named("Sz8_3", g.clone(), vec![expect("5:4x3", n_sylow(&g, 5)?, 60)])
}

/// The first involution `t` (by rank) with `⟨11:5, t⟩` of order 660.
fn m11_l2_11(g: &PermGroup) -> Result<PermGroup> {
    let b = n_sylow(g, 11)?;
    let t = g.classes()?;
    for c in 0..t.len() {
        if t.orders[c] != 2 {
            continue;
        }
        for r in t.members(c) {
            let x = g.element(r);
            let mut gens = b.generators().to_vec();
            gens.push(x);
            let h = g.subgroup(gens)?;
            if h.order() == 660 {
                return Ok(h);
            }
        }
    }
    Err(Error::Internal("no L2(11) found in M11".into()))
}

/// The block of the Steiner system `S(4,5,11)` through `{0,1,2,3}`.
fn steiner_block_stabilizer(g: &PermGroup) -> Result<PermGroup> {
    for x in 4..11 {
        let h = g.set_stabilizer(&[0, 1, 2, 3, x])?;
        if h.order() == 120 {
            return Ok(h);
        }
    }
    Err(Error::Internal("no Steiner block found".into()))
}

/// `M11` with its five maximal subgroups.
pub fn m11() -> Result<Named> {
    let g = mathieu11();
    named(
        "M11",
        g.clone(),
        vec![
            expect("M10", g.stabilizer(0)?, 720),
            expect("L2_11", m11_l2_11(&g)?, 660),
            expect("M9.2", g.set_stabilizer(&[0, 1])?, 144),
            expect("S5", steiner_block_stabilizer(&g)?, 120),
            expect("2.S4", g.set_stabilizer(&[0, 1, 2])?, 48),
        ],
    )
}

/// `M11` on the 12 cosets of `L2(11)`.
pub fn m11_on_12() -> Result<PermGroup> {
    let g = mathieu11();
    let h = m11_l2_11(&g)?;
    Ok(CosetAction::new(&g, &h)?.image().clone())
}

/// `AGL1(9)` on the 12 cosets of `AGL1(3)`.
pub fn agl1_9_on_agl1_3() -> Result<(PermGroup, PermGroup)> {
    let g = super::affine::agl1(3, 2)?;
    let f = FiniteField::new(3, 2)?;
    let sub = g.subgroup(vec![
        super::affine::semilinear(&f, f.neg(1), 0),
        super::affine::translations(&f)[0].clone(),
    ])?;
    if sub.order() != 6 {
        return Err(Error::Internal("AGL1(3) has the wrong order".into()));
    }
    Ok((g, sub))
}

fn odd_conjugate(h: &PermGroup, n: usize) -> Result<PermGroup> {
    let t = Perm::from_cycles(n, &[vec![0, 1]])?;
    let gens = h
        .generators()
        .iter()
        .map(|x| x.conjugate(&t))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(n, gens)
}

fn fano_group() -> Result<PermGroup> {
    Ok(l2_7()?.group)
}

/// `AGL3(2)` on the 8 vectors of `GF(2)³`.
fn agl3_2() -> Result<PermGroup> {
    let vs = VectorSpace::new(FiniteField::new(2, 1)?, 3)?;
    affine_group(&MatrixGenSet::new(2, 1, 3, vs.sl_gens())?, true)
}

/// The stabiliser of the partition into two halves of `0..n`.
fn halves(g: &PermGroup, n: usize) -> Result<PermGroup> {
    let half: Vec<usize> = (0..n / 2).collect();
    let mut gens = g.set_stabilizer(&half)?.generators().to_vec();
    let swap: Vec<Vec<usize>> = (0..n / 2).map(|i| vec![i, i + n / 2]).collect();
    gens.push(Perm::from_cycles(n, &swap)?);
    g.subgroup(gens)
}

/// Maximal subgroups of `A_n` or `S_n` for `n ∈ {7, 8}`, with both classes
/// where the group has two conjugacy classes of a maximal subgroup. The
/// alternating group itself is left out of the `S_n` list since it is not
/// core free.
pub fn an_sn_maximals(n: usize, alt: bool) -> Result<Named> {
    let g = if alt { alternating(n) } else { symmetric(n) };
    let name = format!("{}{}", if alt { "A" } else { "S" }, n);
    let subs = match (n, alt) {
        (7, true) => {
            let l = fano_group()?;
            vec![
                expect("A6", g.stabilizer(0)?, 360),
                expect("L2_7a", l.clone(), 168),
                expect("L2_7b", odd_conjugate(&l, 7)?, 168),
                expect("S5", g.set_stabilizer(&[0, 1])?, 120),
                expect("(A4x3):2", g.set_stabilizer(&[0, 1, 2])?, 72),
            ]
        }
        (7, false) => vec![
            expect("S6", g.stabilizer(0)?, 720),
            expect("S5x2", g.set_stabilizer(&[0, 1])?, 240),
            expect("S4xS3", g.set_stabilizer(&[0, 1, 2])?, 144),
            expect("7:6", super::affine::agl1(7, 1)?, 42),
        ],
        (8, true) => {
            let a = agl3_2()?;
            vec![
                expect("A7", g.stabilizer(0)?, 2520),
                expect("AGL3_2a", a.clone(), 1344),
                expect("AGL3_2b", odd_conjugate(&a, 8)?, 1344),
                expect("S6", g.set_stabilizer(&[0, 1])?, 720),
                expect("2^4:(S3xS3)", halves(&g, 8)?, 576),
                expect("(A5x3):2", g.set_stabilizer(&[0, 1, 2])?, 360),
            ]
        }
        (8, false) => {
            let pairs = g.subgroup(vec![
                Perm::from_cycles(8, &[vec![0, 1]])?,
                Perm::from_cycles(8, &[vec![0, 2], vec![1, 3]])?,
                Perm::from_cycles(8, &[vec![0, 2, 4, 6], vec![1, 3, 5, 7]])?,
            ])?;
            vec![
                expect("S7", g.stabilizer(0)?, 5040),
                expect("S6x2", g.set_stabilizer(&[0, 1])?, 1440),
                expect("S5xS3", g.set_stabilizer(&[0, 1, 2])?, 720),
                expect("S4wrS2", halves(&g, 8)?, 1152),
                expect("S2wrS4", pairs, 384),
                expect("PGL2_7", pgl2(7, 1)?, 336),
            ]
        }
        _ => return Err(Error::InvalidArgument("maximal lists exist for n = 7, 8".into())),
    };
    named(&name, g, subs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derangements::kappa;

    #[test]
    fn table_one_small() {
        let a5 = a5().unwrap();
        let k: Vec<usize> = a5.subgroups.iter().map(|(_, h)| kappa(&a5.group, h).unwrap()).collect();
        assert_eq!(k, vec![1, 2, 2, 2]);
        let l = l2_8_3().unwrap();
        assert_eq!(kappa(&l.group, &l.subgroups[0].1).unwrap(), 1);
    }

    #[test]
    fn suzuki_orders() {
        let s = suzuki8().unwrap();
        assert_eq!(s.simple.order(), 29120);
        assert_eq!(s.extended.order(), 87360);
    }
}
