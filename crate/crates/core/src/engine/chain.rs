//! Deterministic Schreier–Sims.
//!
//! Every element factors uniquely as `g = u_0 ∘ u_1 ∘ ... ∘ u_{B-1}` with
//! `u_i` a transversal element of level `i`. The index vector of that
//! factorization, read in mixed radix, is the element's *rank*; the
//! identity has rank 0. Ranks let the engine enumerate and label group
//! elements without materializing them.

use crate::perm::Perm;

const ABSENT: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct Level {
    pub base: u32,
    /// Strong generators fixing all earlier base points.
    pub gens: Vec<Perm>,
    pub orbit: Vec<u32>,
    index: Vec<u32>,
    trans: Vec<u32>,
    trans_inv: Vec<u32>,
}

impl Level {
    fn new(n: usize, base: u32) -> Level {
        let mut l = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            index: vec![ABSENT; n],
            trans: Vec::new(),
            trans_inv: Vec::new(),
        };
        l.recompute(n);
        l
    }

    /// Breadth-first orbit of the base point with explicit transversal.
    fn recompute(&mut self, n: usize) {
        self.index.iter_mut().for_each(|x| *x = ABSENT);
        self.orbit.clear();
        self.trans.clear();
        self.orbit.push(self.base);
        self.index[self.base as usize] = 0;
        self.trans.extend(0..n as u32);
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head] as usize;
            for s in &self.gens {
                let gamma = s.apply(beta);
                if self.index[gamma] == ABSENT {
                    self.index[gamma] = self.orbit.len() as u32;
                    self.orbit.push(gamma as u32);
                    let start = head * n;
                    let next: Vec<u32> = self.trans[start..start + n]
                        .iter()
                        .map(|&t| s.images()[t as usize])
                        .collect();
                    self.trans.extend_from_slice(&next);
                }
            }
            head += 1;
        }
        self.trans_inv = vec![0; self.trans.len()];
        for j in 0..self.orbit.len() {
            let off = j * n;
            for x in 0..n {
                let y = self.trans[off + x] as usize;
                self.trans_inv[off + y] = x as u32;
            }
        }
    }

    /// Image array of the transversal element for orbit index `j`.
    pub fn transversal(&self, j: usize) -> &[u32] {
        let n = self.index.len();
        self.u(j, n)
    }

    pub fn transversal_inv(&self, j: usize) -> &[u32] {
        let n = self.index.len();
        self.uinv(j, n)
    }

    pub fn orbit_len(&self) -> usize {
        self.orbit.len()
    }

    #[inline]
    pub fn index_of(&self, p: usize) -> Option<usize> {
        let j = self.index[p];
        (j != ABSENT).then_some(j as usize)
    }

    #[inline]
    fn u(&self, j: usize, n: usize) -> &[u32] {
        &self.trans[j * n..(j + 1) * n]
    }

    #[inline]
    fn uinv(&self, j: usize, n: usize) -> &[u32] {
        &self.trans_inv[j * n..(j + 1) * n]
    }
}

#[derive(Debug, Clone)]
pub struct StabChain {
    n: usize,
    levels: Vec<Level>,
    radix: Vec<u64>,
}

impl StabChain {
    /// Builds a chain whose base starts with `prefix` (possibly empty),
    /// then continues with smallest moved points.
    pub fn build(n: usize, gens: &[Perm], prefix: &[usize]) -> StabChain {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut levels: Vec<Level> = prefix.iter().map(|&b| Level::new(n, b as u32)).collect();
        for g in &gens {
            if levels.iter().all(|l| g.apply(l.base as usize) == l.base as usize) {
                let b = g.smallest_moved_point().unwrap();
                levels.push(Level::new(n, b as u32));
            }
        }
        for l in 0..levels.len() {
            let fixed: Vec<Perm> = gens
                .iter()
                .filter(|g| levels[..l].iter().all(|lv| g.apply(lv.base as usize) == lv.base as usize))
                .cloned()
                .collect();
            levels[l].gens = fixed;
            levels[l].recompute(n);
        }
        let mut chain = StabChain {
            n,
            levels,
            radix: Vec::new(),
        };
        chain.schreier_sims();
        chain.finish();
        chain
    }

    fn schreier_sims(&mut self) {
        let n = self.n;
        let mut i = self.levels.len() as isize - 1;
        let mut scratch = vec![0u32; n];
        'outer: while i >= 0 {
            let li = i as usize;
            for a in 0..self.levels[li].orbit.len() {
                let beta = self.levels[li].orbit[a] as usize;
                for si in 0..self.levels[li].gens.len() {
                    let lvl = &self.levels[li];
                    let s = &lvl.gens[si];
                    let gamma = s.apply(beta);
                    let c = lvl.index_of(gamma).expect("orbit is closed");
                    let ua = lvl.u(a, n);
                    let ucinv = lvl.uinv(c, n);
                    let mut trivial = true;
                    for x in 0..n {
                        let v = ucinv[s.images()[ua[x] as usize] as usize];
                        scratch[x] = v;
                        trivial &= v == x as u32;
                    }
                    if trivial {
                        continue;
                    }
                    let (h, j) = self.strip(&scratch, li + 1);
                    if h.iter().enumerate().all(|(x, &v)| v == x as u32) {
                        continue;
                    }
                    let h = Perm::from_images_unchecked(h);
                    if j == self.levels.len() {
                        let b = h.smallest_moved_point().unwrap();
                        self.levels.push(Level::new(n, b as u32));
                    }
                    for l in li + 1..=j {
                        self.levels[l].gens.push(h.clone());
                        self.levels[l].recompute(n);
                    }
                    i = j as isize;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    fn finish(&mut self) {
        let b = self.levels.len();
        self.radix = vec![1; b];
        for i in (0..b.saturating_sub(1)).rev() {
            self.radix[i] = self.radix[i + 1].saturating_mul(self.levels[i + 1].orbit_len() as u64);
        }
    }

    /// Sifts `g` starting at level `from`; returns the residue and the level
    /// where sifting stopped (`levels.len()` when it went all the way).
    pub fn strip(&self, g: &[u32], from: usize) -> (Vec<u32>, usize) {
        let n = self.n;
        let mut h = g.to_vec();
        for l in from..self.levels.len() {
            let lvl = &self.levels[l];
            let beta = h[lvl.base as usize] as usize;
            let Some(j) = lvl.index_of(beta) else {
                return (h, l);
            };
            if j != 0 {
                let uinv = lvl.uinv(j, n);
                for x in h.iter_mut() {
                    *x = uinv[*x as usize];
                }
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.n {
            return false;
        }
        let (h, j) = self.strip(g.images(), 0);
        j == self.levels.len() && h.iter().enumerate().all(|(x, &v)| v == x as u32)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit_len() as u128).product()
    }

    /// All strong generators (the union over levels), deduplicated.
    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Transversal digits of the element with the given rank.
    pub fn digits(&self, rank: u64, out: &mut [u32]) {
        for (i, l) in self.levels.iter().enumerate() {
            out[i] = ((rank / self.radix[i]) % l.orbit_len() as u64) as u32;
        }
    }

    /// Image of `p` under the element with the given digits.
    #[inline]
    pub fn eval_digits(&self, digits: &[u32], p: usize) -> usize {
        let n = self.n;
        let mut x = p as u32;
        for i in (0..digits.len()).rev() {
            let j = digits[i] as usize;
            if j != 0 {
                x = self.levels[i].u(j, n)[x as usize];
            }
        }
        x as usize
    }

    /// Images of the base points under the element with the given rank.
    pub fn base_images(&self, rank: u64, out: &mut [u32]) {
        let mut d = vec![0u32; self.levels.len()];
        self.digits(rank, &mut d);
        for (i, l) in self.levels.iter().enumerate() {
            out[i] = self.eval_digits(&d[..=i], l.base as usize) as u32;
        }
    }

    /// Rank of the unique element with the given base images, or `None`
    /// if no element of the group has them. Overwrites `imgs`.
    pub fn rank_from_base_images(&self, imgs: &mut [u32]) -> Option<u64> {
        let n = self.n;
        let mut r = 0u64;
        for i in 0..self.levels.len() {
            let lvl = &self.levels[i];
            let j = lvl.index_of(imgs[i] as usize)?;
            r += j as u64 * self.radix[i];
            if j != 0 {
                let uinv = lvl.uinv(j, n);
                for x in imgs[i + 1..].iter_mut() {
                    *x = uinv[*x as usize];
                }
            }
        }
        Some(r)
    }

    /// Rank of a permutation known to lie in the group.
    pub fn rank(&self, g: &Perm) -> Option<u64> {
        let mut imgs: Vec<u32> = self.levels.iter().map(|l| g.images()[l.base as usize]).collect();
        let r = self.rank_from_base_images(&mut imgs)?;
        // Confirm membership: the factorization must reproduce g.
        (self.element(r) == *g).then_some(r)
    }

    /// Rank computed from base images only; the caller guarantees that
    /// `g` lies in the group.
    pub fn rank_unchecked(&self, g: &Perm) -> Option<u64> {
        let mut imgs: Vec<u32> = self.levels.iter().map(|l| g.images()[l.base as usize]).collect();
        self.rank_from_base_images(&mut imgs)
    }

    pub fn element(&self, rank: u64) -> Perm {
        let mut d = vec![0u32; self.levels.len()];
        self.digits(rank, &mut d);
        self.element_from_digits(&d)
    }

    pub fn element_from_digits(&self, d: &[u32]) -> Perm {
        let n = self.n;
        let mut img: Vec<u32> = (0..n as u32).collect();
        for i in (0..self.levels.len()).rev() {
            let j = d[i] as usize;
            if j != 0 {
                let u = self.levels[i].u(j, n);
                for x in img.iter_mut() {
                    *x = u[*x as usize];
                }
            }
        }
        Perm::from_images_unchecked(img)
    }

    /// Increments a digit vector in rank order; returns false on wrap.
    pub fn next_digits(&self, d: &mut [u32]) -> bool {
        for i in (0..self.levels.len()).rev() {
            d[i] += 1;
            if (d[i] as usize) < self.levels[i].orbit_len() {
                return true;
            }
            d[i] = 0;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        let s5 = StabChain::build(5, &[p("(1,2)", 5), p("(1,2,3,4,5)", 5)], &[]);
        assert_eq!(s5.order(), 120);
        let a5 = StabChain::build(5, &[p("(1,2,3,4,5)", 5), p("(3,4,5)", 5)], &[]);
        assert_eq!(a5.order(), 60);
        assert!(!a5.contains(&p("(1,2)", 5)));
        assert!(a5.contains(&p("(1,2)(3,4)", 5)));
    }

    #[test]
    fn ranks_roundtrip() {
        let g = StabChain::build(6, &[p("(1,2)", 6), p("(1,2,3,4,5,6)", 6)], &[]);
        assert_eq!(g.order(), 720);
        let mut seen = std::collections::HashSet::new();
        for r in 0..720u64 {
            let e = g.element(r);
            assert_eq!(g.rank(&e), Some(r));
            let mut bi = vec![0; g.levels().len()];
            g.base_images(r, &mut bi);
            for (i, l) in g.levels().iter().enumerate() {
                assert_eq!(bi[i] as usize, e.apply(l.base as usize));
            }
            seen.insert(e);
        }
        assert_eq!(seen.len(), 720);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn mathieu_11() {
        let g = StabChain::build(
            11,
            &[p("(1,2,3,4,5,6,7,8,9,10,11)", 11), p("(3,7,11,8)(4,10,5,6)", 11)],
            &[],
        );
        assert_eq!(g.order(), 7920);
    }

    #[test]
    fn prefix_base() {
        let g = StabChain::build(5, &[p("(1,2)", 5), p("(1,2,3,4,5)", 5)], &[4, 3]);
        assert_eq!(g.base()[..2], [4, 3]);
        assert_eq!(g.order(), 120);
    }
}
