//! Groups given by formula: symmetric, alternating, cyclic and dihedral
//! groups, products, regular representations and groups on the
//! projective line.

use crate::engine::PermGroup;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::perm::Perm;

fn cycle(n: usize, pts: &[usize]) -> Perm {
    Perm::from_cycles(n, &[pts.to_vec()]).expect("valid cycle")
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let all: Vec<usize> = (0..n).collect();
    PermGroup::new(n, vec![cycle(n, &[0, 1]), cycle(n, &all)]).unwrap()
}

pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n);
    }
    let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
    let mut gens = vec![cycle(n, &[0, 1, 2])];
    if n > 3 {
        gens.push(cycle(n, &long));
    }
    PermGroup::new(n, gens).unwrap()
}

pub fn cyclic(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let all: Vec<usize> = (0..n).collect();
    PermGroup::new(n, vec![cycle(n, &all)]).unwrap()
}

/// The dihedral group of order `2n` acting on the `n` vertices of a polygon.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::InvalidArgument("dihedral group needs n >= 3".into()));
    }
    let all: Vec<usize> = (0..n).collect();
    let refl = Perm::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
    PermGroup::new(n, vec![cycle(n, &all), refl])
}

/// `G × H` acting on the disjoint union of the two point sets.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let (m, n) = (g.degree(), h.degree());
    let mut gens = Vec::new();
    for x in g.generators() {
        gens.push(x.extend(m + n));
    }
    for y in h.generators() {
        let mut img: Vec<u32> = (0..m as u32).collect();
        img.extend(y.images().iter().map(|&v| v + m as u32));
        gens.push(Perm::from_images(img)?);
    }
    Ok(PermGroup::new(m + n, gens)?.with_cap(g.cap().max(h.cap())))
}

/// `G` acting on itself by left multiplication, with points labelled by
/// rank.
pub fn regular_representation(g: &PermGroup) -> Result<PermGroup> {
    let order = g.checked_order()?;
    if order > crate::perm::MAX_DEGREE as u64 {
        return Err(Error::DegreeTooLarge(order as usize));
    }
    let chain = g.chain();
    let elems = g.elements()?;
    let gens = g
        .generators()
        .iter()
        .map(|s| {
            let img = elems
                .iter()
                .map(|e| chain.rank_unchecked(&s.mul(e)).unwrap() as u32)
                .collect();
            Perm::from_images(img)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PermGroup::new(order as usize, gens)?.with_cap(g.cap()))
}

/// Maps on `PG(1, q)`; points `0..q` are field elements and `q` is ∞.
pub struct ProjectiveLine<'a> {
    pub field: &'a FiniteField,
}

impl ProjectiveLine<'_> {
    pub fn infinity(&self) -> u32 {
        self.field.order()
    }

    pub fn degree(&self) -> usize {
        self.field.order() as usize + 1
    }

    /// The Möbius map `x ↦ (a x^σ + b)/(c x^σ + d)` with `σ = frob^e`.
    pub fn mobius(&self, a: u32, b: u32, c: u32, d: u32, e: u32) -> Result<Perm> {
        let f = self.field;
        let inf = self.infinity();
        let img = (0..=inf)
            .map(|x| {
                if x == inf {
                    if c == 0 {
                        inf
                    } else {
                        f.mul(a, f.inv(c).unwrap())
                    }
                } else {
                    let y = f.frobenius_pow(x, e);
                    let num = f.add(f.mul(a, y), b);
                    let den = f.add(f.mul(c, y), d);
                    if den == 0 {
                        inf
                    } else {
                        f.mul(num, f.inv(den).unwrap())
                    }
                }
            })
            .collect();
        Perm::from_images(img)
    }

    /// `L2(q)`: generated by `x+1`, `γ²x` and `-1/x`.
    pub fn psl2_gens(&self) -> Result<Vec<Perm>> {
        let f = self.field;
        let g2 = f.mul(f.gamma(), f.gamma());
        Ok(vec![
            self.mobius(1, 1, 0, 1, 0)?,
            self.mobius(g2, 0, 0, 1, 0)?,
            self.mobius(0, f.neg(1), 1, 0, 0)?,
        ])
    }

    pub fn diagonal_gamma(&self) -> Result<Perm> {
        self.mobius(self.field.gamma(), 0, 0, 1, 0)
    }

    pub fn frobenius(&self) -> Result<Perm> {
        self.mobius(1, 0, 0, 1, 1)
    }
}

pub fn psl2(p: u32, k: u32) -> Result<PermGroup> {
    let f = FiniteField::new(p, k)?;
    let pl = ProjectiveLine { field: &f };
    PermGroup::new(pl.degree(), pl.psl2_gens()?)
}

pub fn pgl2(p: u32, k: u32) -> Result<PermGroup> {
    let f = FiniteField::new(p, k)?;
    let pl = ProjectiveLine { field: &f };
    let mut gens = pl.psl2_gens()?;
    gens.push(pl.diagonal_gamma()?);
    PermGroup::new(pl.degree(), gens)
}

/// `PΓL2(p^k)`.
pub fn pgaml2(p: u32, k: u32) -> Result<PermGroup> {
    let f = FiniteField::new(p, k)?;
    let pl = ProjectiveLine { field: &f };
    let mut gens = pl.psl2_gens()?;
    gens.push(pl.diagonal_gamma()?);
    gens.push(pl.frobenius()?);
    PermGroup::new(pl.degree(), gens)
}

/// `PΣL2(p^k)`: `L2(q)` extended by field automorphisms.
pub fn psigmal2(p: u32, k: u32) -> Result<PermGroup> {
    let f = FiniteField::new(p, k)?;
    let pl = ProjectiveLine { field: &f };
    let mut gens = pl.psl2_gens()?;
    gens.push(pl.frobenius()?);
    PermGroup::new(pl.degree(), gens)
}

/// `M10 = L2(9).⟨x ↦ γ x³⟩` on 10 points.
pub fn mathieu10() -> Result<PermGroup> {
    let f = FiniteField::new(3, 2)?;
    let pl = ProjectiveLine { field: &f };
    let mut gens = pl.psl2_gens()?;
    gens.push(pl.mobius(f.gamma(), 0, 0, 1, 1)?);
    PermGroup::new(pl.degree(), gens)
}

pub fn mathieu11() -> PermGroup {
    PermGroup::from_cycle_strings(11, &["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"])
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(6).order(), 360);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(dihedral(9).unwrap().order(), 18);
        assert_eq!(cyclic(7).order(), 7);
        assert_eq!(psl2(7, 1).unwrap().order(), 168);
        assert_eq!(psl2(2, 3).unwrap().order(), 504);
        assert_eq!(pgaml2(2, 3).unwrap().order(), 1512);
        assert_eq!(pgl2(3, 2).unwrap().order(), 720);
        assert_eq!(mathieu10().unwrap().order(), 720);
        assert_eq!(pgaml2(3, 2).unwrap().order(), 1440);
        assert_eq!(mathieu11().order(), 7920);
    }
}
