use super::chain::StabChain;
use crate::perm::{CycleType, Perm};

/// Conjugacy classes of a materialized group, labelled by element rank.
///
/// Classes are ordered by their smallest-rank member, which is also the
/// stored representative; the identity is always class 0.
#[derive(Debug, Clone)]
pub struct ConjClassTable {
    pub reps: Vec<Perm>,
    pub rep_ranks: Vec<u64>,
    pub sizes: Vec<u64>,
    pub orders: Vec<u64>,
    class_of: Vec<u32>,
    group_order: u64,
}

const UNSET: u32 = u32::MAX;

impl ConjClassTable {
    /// Orbit closure of every element under conjugation by the generators.
    pub(crate) fn compute(chain: &StabChain, gens: &[Perm]) -> ConjClassTable {
        let order = chain.order() as u64;
        let b = chain.levels().len();
        let base = chain.base();
        let gens: Vec<&Perm> = gens.iter().filter(|g| !g.is_identity()).collect();
        // Conjugating y by s: (s⁻¹ y s)(b_i) = s⁻¹(y(s(b_i))).
        let s_on_base: Vec<Vec<usize>> = gens
            .iter()
            .map(|s| base.iter().map(|&p| s.apply(p)).collect())
            .collect();
        let s_inv: Vec<Perm> = gens.iter().map(|s| s.inverse()).collect();

        let mut class_of = vec![UNSET; order as usize];
        let mut reps = Vec::new();
        let mut rep_ranks = Vec::new();
        let mut sizes = Vec::new();
        let mut digits = vec![0u32; b];
        let mut imgs = vec![0u32; b];
        let mut queue: Vec<u64> = Vec::new();
        for r in 0..order {
            if class_of[r as usize] != UNSET {
                continue;
            }
            let label = reps.len() as u32;
            class_of[r as usize] = label;
            queue.clear();
            queue.push(r);
            let mut head = 0;
            while head < queue.len() {
                let y = queue[head];
                head += 1;
                chain.digits(y, &mut digits);
                for (k, sinv) in s_inv.iter().enumerate() {
                    for i in 0..b {
                        let p = s_on_base[k][i];
                        imgs[i] = sinv.apply(chain.eval_digits(&digits, p)) as u32;
                    }
                    let z = chain
                        .rank_from_base_images(&mut imgs)
                        .expect("conjugate lies in the group");
                    if class_of[z as usize] == UNSET {
                        class_of[z as usize] = label;
                        queue.push(z);
                    }
                }
            }
            reps.push(chain.element(r));
            rep_ranks.push(r);
            sizes.push(queue.len() as u64);
        }
        let orders = reps.iter().map(Perm::order).collect();
        ConjClassTable {
            reps,
            rep_ranks,
            sizes,
            orders,
            class_of,
            group_order: order,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    #[inline]
    pub fn class_of_rank(&self, r: u64) -> usize {
        self.class_of[r as usize] as usize
    }

    /// Class index of `g`, or `None` if `g` is not in the group.
    pub fn class_of(&self, chain: &StabChain, g: &Perm) -> Option<usize> {
        chain.rank(g).map(|r| self.class_of_rank(r))
    }

    pub fn centralizer_order(&self, c: usize) -> u64 {
        self.group_order / self.sizes[c]
    }

    pub fn cycle_types(&self) -> Vec<CycleType> {
        self.reps.iter().map(Perm::cycle_type).collect()
    }

    /// Class of `rep^k` for each class.
    pub fn power_map(&self, chain: &StabChain, k: i64) -> Vec<usize> {
        self.reps
            .iter()
            .map(|r| self.class_of_rank(chain.rank_unchecked(&r.pow(k)).unwrap()))
            .collect()
    }

    /// Class of the inverse of each class.
    pub fn inverse_classes(&self, chain: &StabChain) -> Vec<usize> {
        self.power_map(chain, -1)
    }

    /// Members of class `c` as ranks.
    pub fn members(&self, c: usize) -> Vec<u64> {
        self.class_of
            .iter()
            .enumerate()
            .filter(|(_, &x)| x as usize == c)
            .map(|(r, _)| r as u64)
            .collect()
    }

    /// The per-rank class labels.
    pub fn labels(&self) -> &[u32] {
        &self.class_of
    }
}
