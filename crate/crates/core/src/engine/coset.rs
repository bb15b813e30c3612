//! Actions on left cosets by left multiplication.

use super::group::PermGroup;
use super::subgroups;
use crate::error::{Error, Result};
use crate::perm::Perm;
use std::collections::HashMap;

/// Largest index for which coset actions are formed.
pub const MAX_INDEX: u64 = 1 << 16;

/// The action of `G` on `G/H`. Point 0 is the coset `H`.
#[derive(Debug, Clone)]
pub struct CosetAction {
    source: PermGroup,
    sub: PermGroup,
    reps: Vec<u64>,
    labels: HashMap<u64, u32>,
    gen_images: Vec<Perm>,
    image: PermGroup,
}

/// Canonical element of the coset `yH`: the one whose images of `H`'s base
/// are lexicographically least.
fn canonical(h: &PermGroup, y: &Perm) -> Perm {
    let mut img = y.images().to_vec();
    for lvl in h.chain().levels() {
        let (mut best, mut best_j) = (u32::MAX, 0);
        for (j, &t) in lvl.orbit.iter().enumerate() {
            let v = img[t as usize];
            if v < best {
                best = v;
                best_j = j;
            }
        }
        if best_j != 0 {
            let u = lvl.transversal(best_j);
            img = u.iter().map(|&x| img[x as usize]).collect();
        }
    }
    Perm::from_images(img).expect("product of permutations")
}

impl CosetAction {
    pub fn new(g: &PermGroup, h: &PermGroup) -> Result<CosetAction> {
        h.require_subgroup_of(g)?;
        let index = g.order() / h.order();
        if index > MAX_INDEX as u128 {
            return Err(Error::IndexTooLarge {
                index,
                cap: MAX_INDEX,
            });
        }
        let gc = g.chain();
        let key = |y: &Perm| gc.rank_unchecked(y).expect("element of G");
        let start = canonical(h, &Perm::identity(g.degree()));
        let mut reps = vec![key(&start)];
        let mut labels = HashMap::new();
        labels.insert(reps[0], 0u32);
        let gens: Vec<Perm> = g.generators().to_vec();
        let mut images: Vec<Vec<u32>> = vec![Vec::with_capacity(index as usize); gens.len()];
        let mut c = 0;
        while c < reps.len() {
            let y = gc.element(reps[c]);
            for (k, s) in gens.iter().enumerate() {
                let z = canonical(h, &s.mul(&y));
                let kz = key(&z);
                let next = reps.len() as u32;
                let l = *labels.entry(kz).or_insert_with(|| {
                    reps.push(kz);
                    next
                });
                images[k].push(l);
            }
            c += 1;
        }
        debug_assert_eq!(reps.len() as u128, index);
        let gen_images: Vec<Perm> = images
            .into_iter()
            .map(|v| Perm::from_images(v).expect("coset action is a permutation"))
            .collect();
        let image = PermGroup::new(reps.len(), gen_images.clone())?.with_cap(g.cap());
        Ok(CosetAction {
            source: g.clone(),
            sub: h.clone(),
            reps,
            labels,
            gen_images,
            image,
        })
    }

    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.sub
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    /// Images of the source generators, in order.
    pub fn generator_images(&self) -> &[Perm] {
        &self.gen_images
    }

    /// A representative of the coset with the given label.
    pub fn representative(&self, c: usize) -> Perm {
        self.source.element(self.reps[c])
    }

    /// Label of the coset `gH`.
    pub fn label_of(&self, g: &Perm) -> Option<usize> {
        let z = canonical(&self.sub, g);
        let k = self.source.chain().rank_unchecked(&z)?;
        self.labels.get(&k).map(|&l| l as usize)
    }

    /// The permutation induced by `g ∈ G`.
    pub fn image_of(&self, g: &Perm) -> Result<Perm> {
        if !self.source.contains(g) {
            return Err(Error::NotSubgroup(format!("{g} is not in the source group")));
        }
        let img = (0..self.degree())
            .map(|c| {
                self.label_of(&g.mul(&self.representative(c)))
                    .map(|l| l as u32)
                    .ok_or_else(|| Error::Internal("coset label missing".into()))
            })
            .collect::<Result<Vec<u32>>>()?;
        Perm::from_images(img)
    }

    /// The image of a subgroup of the source.
    pub fn image_of_subgroup(&self, k: &PermGroup) -> Result<PermGroup> {
        let gens = k
            .generators()
            .iter()
            .map(|x| self.image_of(x))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.degree(), gens).map(|g| g.with_cap(self.source.cap()))
    }
}

/// `G/N` realized as a permutation group.
#[derive(Debug, Clone)]
pub struct Quotient {
    action: Option<CosetAction>,
    image: PermGroup,
}

impl Quotient {
    pub fn new(g: &PermGroup, n: &PermGroup) -> Result<Quotient> {
        n.require_subgroup_of(g)?;
        if !subgroups::is_normal(g, n) {
            return Err(Error::InvalidArgument("quotient by a non-normal subgroup".into()));
        }
        if n.order() == 1 {
            return Ok(Quotient {
                action: None,
                image: g.clone(),
            });
        }
        let a = CosetAction::new(g, n)?;
        Ok(Quotient {
            image: a.image().clone(),
            action: Some(a),
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.image
    }

    pub fn map(&self, x: &Perm) -> Result<Perm> {
        match &self.action {
            None => Ok(x.clone()),
            Some(a) => a.image_of(x),
        }
    }

    pub fn map_subgroup(&self, k: &PermGroup) -> Result<PermGroup> {
        match &self.action {
            None => Ok(k.clone()),
            Some(a) => a.image_of_subgroup(k),
        }
    }
}
