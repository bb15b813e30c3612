//! Subgroup constructions: cores, closures, centralisers, Sylow subgroups
//! and the lattice of normal subgroups.

use super::group::PermGroup;
use crate::arith;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// The subgroup generated by `init` together with all elements of `g`
/// satisfying `pred`, found by a rank-order scan that stops once the
/// subgroup reaches `target` (when given).
///
/// The predicate must define a subgroup.
pub fn subgroup_by_predicate_from(
    g: &PermGroup,
    init: Vec<Perm>,
    target: Option<u128>,
    mut pred: impl FnMut(&Perm) -> bool,
) -> Result<PermGroup> {
    let mut k = g.subgroup(init)?;
    if target == Some(k.order()) {
        return Ok(k);
    }
    let mut gens = k.generators().to_vec();
    g.for_each_element(|x| {
        if !x.is_identity() && pred(x) && !k.contains(x) {
            gens.push(x.clone());
            k = g.subgroup(gens.clone()).expect("same degree");
            if target == Some(k.order()) {
                return false;
            }
        }
        true
    })?;
    Ok(k)
}

pub fn subgroup_by_predicate(
    g: &PermGroup,
    target: Option<u128>,
    pred: impl FnMut(&Perm) -> bool,
) -> Result<PermGroup> {
    subgroup_by_predicate_from(g, Vec::new(), target, pred)
}

pub fn is_abelian(g: &PermGroup) -> bool {
    let gs = g.generators();
    gs.iter()
        .enumerate()
        .all(|(i, a)| gs[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
}

/// Whether `h` is normalised by every generator of `g`.
pub fn is_normal(g: &PermGroup, h: &PermGroup) -> bool {
    g.generators()
        .iter()
        .all(|s| h.generators().iter().all(|x| h.contains(&x.conj(s))))
}

pub fn intersection(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let (small, big) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    if small.is_subgroup_of(big) {
        return Ok(small.clone());
    }
    subgroup_by_predicate(small, None, |x| big.contains(x))
}

/// The subgroup generated by the union of generator sets.
pub fn join(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    a.subgroup(gens)
}

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure(g: &PermGroup, s: &[Perm]) -> Result<PermGroup> {
    for x in s {
        if !g.contains(x) {
            return Err(Error::NotSubgroup(format!("{x} is not in the group")));
        }
    }
    let mut gens: Vec<Perm> = s.iter().filter(|x| !x.is_identity()).cloned().collect();
    let mut n = g.subgroup(gens.clone())?;
    loop {
        let mut changed = false;
        let snapshot = gens.clone();
        for t in g.generators() {
            for x in &snapshot {
                let c = x.conj(t);
                if !n.contains(&c) {
                    gens.push(c);
                    n = g.subgroup(gens.clone())?;
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(n);
        }
    }
}

/// Largest normal subgroup of `g` contained in `h`.
pub fn normal_core(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    h.require_subgroup_of(g)?;
    let mut k = h.clone();
    loop {
        if is_normal(g, &k) {
            return Ok(k);
        }
        for s in g.generators() {
            let sinv = s.inverse();
            if k.generators().iter().all(|x| k.contains(&x.conj(&sinv))) {
                continue;
            }
            // K ∩ K^s: elements k with s k s⁻¹ ∈ K.
            let kk = k.clone();
            k = subgroup_by_predicate(&kk, None, |x| kk.contains(&x.conj(&sinv)))?;
        }
    }
}

/// `[A, B]`, the normal closure in `⟨A, B⟩` of generator commutators.
pub fn commutator_subgroup(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let mut comms = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            comms.push(x.commutator(y));
        }
    }
    let ab = join(a, b)?;
    normal_closure(&ab, &comms)
}

pub fn derived_subgroup(g: &PermGroup) -> Result<PermGroup> {
    let gs = g.generators();
    let mut comms = Vec::new();
    for (i, a) in gs.iter().enumerate() {
        for b in &gs[i + 1..] {
            comms.push(a.commutator(b));
        }
    }
    normal_closure(g, &comms)
}

/// Orders of `G = G^(0) ≥ G' ≥ G'' ≥ ...` until it stabilises.
pub fn derived_series_orders(g: &PermGroup) -> Result<Vec<u128>> {
    let mut out = vec![g.order()];
    let mut cur = g.clone();
    loop {
        let d = derived_subgroup(&cur)?;
        if d.order() == cur.order() {
            return Ok(out);
        }
        out.push(d.order());
        if d.order() == 1 {
            return Ok(out);
        }
        cur = d;
    }
}

pub fn is_solvable(g: &PermGroup) -> Result<bool> {
    Ok(*derived_series_orders(g)?.last().unwrap() == 1)
}

pub fn center(g: &PermGroup) -> Result<PermGroup> {
    let t = g.classes()?;
    let gens = (0..t.len())
        .filter(|&c| t.sizes[c] == 1 && c != 0)
        .map(|c| t.reps[c].clone())
        .collect();
    g.subgroup(gens)
}

pub fn centralizer(g: &PermGroup, x: &Perm) -> Result<PermGroup> {
    let t = g.classes()?;
    let c = t
        .class_of(g.chain(), x)
        .ok_or_else(|| Error::NotSubgroup(format!("{x} is not in the group")))?;
    let target = t.centralizer_order(c) as u128;
    subgroup_by_predicate_from(g, vec![x.clone()], Some(target), |y| {
        y.mul(x) == x.mul(y)
    })
}

pub fn is_conjugate_in(g: &PermGroup, x: &Perm, y: &Perm) -> Result<bool> {
    let t = g.classes()?;
    let cx = t.class_of(g.chain(), x);
    let cy = t.class_of(g.chain(), y);
    match (cx, cy) {
        (Some(a), Some(b)) => Ok(a == b),
        _ => Err(Error::NotSubgroup("element outside the group".into())),
    }
}

pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    h.require_subgroup_of(g)?;
    subgroup_by_predicate_from(g, h.generators().to_vec(), None, |y| {
        h.generators().iter().all(|x| h.contains(&x.conj(y)))
    })
}

/// A Sylow `p`-subgroup, grown by `p`-parts of elements normalising the
/// current `p`-subgroup.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let order = g.checked_order()?;
    if !arith::is_prime(p) || order % p != 0 {
        return Err(Error::InvalidArgument(format!("{p} does not divide |G| = {order}")));
    }
    let target = arith::p_part(order, p) as u128;
    let mut gens: Vec<Perm> = Vec::new();
    let mut cur = g.subgroup(Vec::new())?;
    while cur.order() < target {
        let mut found = None;
        g.for_each_element(|x| {
            let o = x.order();
            if o % p != 0 {
                return true;
            }
            let y = x.pow((o / arith::p_part(o, p)) as i64);
            if cur.contains(&y) {
                return true;
            }
            if cur.generators().iter().all(|c| cur.contains(&c.conj(&y))) {
                found = Some(y);
                return false;
            }
            true
        })?;
        let y = found.ok_or_else(|| Error::Internal("Sylow search stalled".into()))?;
        gens.push(y);
        cur = g.subgroup(gens.clone())?;
    }
    Ok(cur)
}

/// A normal subgroup with the classes it is the union of.
#[derive(Debug, Clone)]
pub struct NormalSubgroup {
    pub group: PermGroup,
    pub classes: Vec<usize>,
}

pub const MAX_NORMAL_CLASSES: usize = 64;

/// All normal subgroups, sorted by order and then class support.
pub fn normal_subgroups(g: &PermGroup) -> Result<Vec<NormalSubgroup>> {
    let t = g.classes()?;
    let k = t.len();
    if k > MAX_NORMAL_CLASSES {
        return Err(Error::TooManyClasses(k, MAX_NORMAL_CLASSES));
    }
    let mask_of = |n: &PermGroup| -> u64 {
        (0..k)
            .filter(|&c| n.contains(&t.reps[c]))
            .fold(0u64, |m, c| m | (1 << c))
    };
    let mut found: Vec<(u64, PermGroup)> = vec![(1, g.subgroup(Vec::new())?)];
    for c in 1..k {
        if found.iter().any(|(m, _)| *m == (1 | (1u64 << c))) {
            continue;
        }
        let n = normal_closure(g, &[t.reps[c].clone()])?;
        let m = mask_of(&n);
        if !found.iter().any(|(x, _)| *x == m) {
            found.push((m, n));
        }
    }
    let mut i = 0;
    while i < found.len() {
        let mut j = 0;
        while j < i {
            let u = found[i].0 | found[j].0;
            // A normal subgroup with exactly this support is already the join.
            if !found.iter().any(|(x, _)| *x == u) {
                let n = join(&found[i].1, &found[j].1)?;
                let m = mask_of(&n);
                if !found.iter().any(|(x, _)| *x == m) {
                    found.push((m, n));
                }
            }
            j += 1;
        }
        i += 1;
    }
    let mut out: Vec<NormalSubgroup> = found
        .into_iter()
        .map(|(m, group)| NormalSubgroup {
            group,
            classes: (0..k).filter(|&c| m >> c & 1 == 1).collect(),
        })
        .collect();
    out.sort_by(|a, b| {
        (a.group.order(), &a.classes).cmp(&(b.group.order(), &b.classes))
    });
    Ok(out)
}

/// Nilpotent exactly when every Sylow subgroup is normal.
pub fn is_nilpotent(g: &PermGroup) -> Result<bool> {
    let order = g.checked_order()?;
    for p in arith::factorize(order).primes() {
        if !is_normal(g, &sylow_subgroup(g, p)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Some(p)` when `|G|` is a nontrivial power of the prime `p`.
pub fn p_group_prime(g: &PermGroup) -> Option<u64> {
    let o = g.order();
    if o < 2 || o > u64::MAX as u128 {
        return None;
    }
    arith::is_prime_power(o as u64).map(|(p, _)| p)
}
