use super::chain::StabChain;
use super::classes::ConjClassTable;
use crate::error::{Error, Result};
use crate::perm::Perm;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Default element cap for enumeration-based algorithms.
pub const DEFAULT_CAP: u64 = 1 << 23;
/// Cap of the extended tier.
pub const EXTENDED_CAP: u64 = 1 << 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Tier {
    #[default]
    Core,
    Extended,
}

impl Tier {
    pub fn cap(self) -> u64 {
        match self {
            Tier::Core => DEFAULT_CAP,
            Tier::Extended => EXTENDED_CAP,
        }
    }
}

/// A permutation group given by generators, with a lazily built
/// stabilizer chain and class table.
///
/// The element cap travels with the group and is inherited by every
/// subgroup, quotient and image derived from it.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    cap: u64,
    chain: OnceLock<Arc<StabChain>>,
    classes: OnceLock<Arc<ConjClassTable>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("gens", &self.gens)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        if degree > crate::perm::MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(PermGroup {
            degree,
            gens,
            cap: DEFAULT_CAP,
            chain: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    /// Parses 1-based cycle strings.
    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<PermGroup> {
        let gens = gens
            .iter()
            .map(|s| Perm::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).expect("valid degree")
    }

    pub fn with_cap(mut self, cap: u64) -> PermGroup {
        self.cap = cap;
        self
    }

    pub fn with_tier(self, tier: Tier) -> PermGroup {
        self.with_cap(tier.cap())
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Arc::new(StabChain::build(self.degree, &self.gens, &[])))
    }

    /// A fresh chain whose base begins with `prefix`.
    pub fn chain_with_base(&self, prefix: &[usize]) -> StabChain {
        StabChain::build(self.degree, &self.gens, prefix)
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(Perm::is_identity)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    /// A group on the same points generated by `gens`, inheriting the cap.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        Ok(PermGroup::new(self.degree, gens)?.with_cap(self.cap))
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.gens.iter().all(|x| g.contains(x))
    }

    /// Errors unless `self ≤ g`.
    pub fn require_subgroup_of(&self, g: &PermGroup) -> Result<()> {
        if self.is_subgroup_of(g) {
            Ok(())
        } else {
            Err(Error::NotSubgroup("generators do not lie in the parent group".into()))
        }
    }

    /// The order as `u64`, provided it is within the element cap.
    pub fn checked_order(&self) -> Result<u64> {
        let o = self.order();
        if o > self.cap as u128 {
            Err(Error::CapExceeded {
                order: o,
                cap: self.cap,
            })
        } else {
            Ok(o as u64)
        }
    }

    pub fn element(&self, rank: u64) -> Perm {
        self.chain().element(rank)
    }

    /// Rank of `g`, or `None` if `g ∉ G`.
    pub fn rank(&self, g: &Perm) -> Option<u64> {
        self.chain().rank(g)
    }

    /// All elements in rank order.
    pub fn elements(&self) -> Result<Vec<Perm>> {
        let o = self.checked_order()?;
        let c = self.chain();
        let mut d = vec![0u32; c.levels().len()];
        let mut out = Vec::with_capacity(o as usize);
        loop {
            out.push(c.element_from_digits(&d));
            if !c.next_digits(&mut d) {
                break;
            }
        }
        Ok(out)
    }

    /// Calls `f` on every element in rank order, stopping early when `f`
    /// returns false.
    pub fn for_each_element(&self, mut f: impl FnMut(&Perm) -> bool) -> Result<()> {
        self.checked_order()?;
        let c = self.chain();
        let mut d = vec![0u32; c.levels().len()];
        loop {
            if !f(&c.element_from_digits(&d)) {
                break;
            }
            if !c.next_digits(&mut d) {
                break;
            }
        }
        Ok(())
    }

    pub fn classes(&self) -> Result<&ConjClassTable> {
        self.checked_order()?;
        Ok(self
            .classes
            .get_or_init(|| Arc::new(ConjClassTable::compute(self.chain(), &self.gens))))
    }

    /// Ranks in `self` of every element of the subgroup `h`, in `h`'s rank
    /// order. Fails if some element of `h` is not in `self`.
    pub fn ranks_of_subgroup(&self, h: &PermGroup) -> Result<Vec<u64>> {
        h.require_subgroup_of(self)?;
        h.checked_order()?;
        let big = self.chain();
        let small = h.chain();
        let base = big.base();
        let mut d = vec![0u32; small.levels().len()];
        let mut imgs = vec![0u32; base.len()];
        let mut out = Vec::with_capacity(h.order() as usize);
        loop {
            for (i, &b) in base.iter().enumerate() {
                imgs[i] = small.eval_digits(&d, b) as u32;
            }
            let r = big
                .rank_from_base_images(&mut imgs)
                .ok_or_else(|| Error::Internal("subgroup element outside parent".into()))?;
            out.push(r);
            if !small.next_digits(&mut d) {
                break;
            }
        }
        Ok(out)
    }

    /// Orbits on points, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.gens)
    }

    pub fn orbit(&self, p: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orb = vec![p];
        seen[p] = true;
        let mut i = 0;
        while i < orb.len() {
            let x = orb[i];
            for g in &self.gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orb.push(y);
                }
            }
            i += 1;
        }
        orb.sort_unstable();
        orb
    }

    /// Generators of the stabiliser of the point `p`.
    pub fn stabilizer(&self, p: usize) -> Result<PermGroup> {
        let c = self.chain_with_base(&[p]);
        let gens = c.levels().get(1).map(|l| l.gens.clone()).unwrap_or_default();
        self.subgroup(gens)
    }

    /// Pointwise stabiliser of a sequence of points.
    pub fn pointwise_stabilizer(&self, pts: &[usize]) -> Result<PermGroup> {
        let c = self.chain_with_base(pts);
        let gens = c
            .levels()
            .get(pts.len())
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        self.subgroup(gens)
    }

    /// Setwise stabiliser of a point set, by scanning elements.
    pub fn set_stabilizer(&self, set: &[usize]) -> Result<PermGroup> {
        let mut mark = vec![false; self.degree];
        for &p in set {
            mark[p] = true;
        }
        super::subgroups::subgroup_by_predicate(self, None, |g| {
            set.iter().all(|&p| mark[g.apply(p)])
        })
    }
}

pub(crate) fn orbits_of(n: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for p in 0..n {
        if seen[p] {
            continue;
        }
        let mut orb = vec![p];
        seen[p] = true;
        let mut i = 0;
        while i < orb.len() {
            let x = orb[i];
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orb.push(y);
                }
            }
            i += 1;
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}
