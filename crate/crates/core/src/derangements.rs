//! Derangement classes of a transitive action `G` on `G/H`.
//!
//! A class is a derangement class exactly when it misses `H`, so the whole
//! computation is one pass over the elements of `H` marking the classes
//! they meet.

use crate::arith;
use crate::engine::{predicates, CosetAction, PermGroup};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::Rational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerangementClass {
    /// Index in the group's class table.
    pub class: usize,
    #[serde(serialize_with = "ser_display")]
    pub representative: Perm,
    pub size: u64,
    pub order: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub elusive: bool,
    pub has_prime_power_derangement: bool,
    /// `None` when the action is too large to realise as permutations.
    pub sharply_2transitive: Option<bool>,
    pub frobenius: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerangementReport {
    pub action: String,
    pub group_order: u64,
    pub degree: u64,
    pub kappa: usize,
    pub classes: Vec<DerangementClass>,
    #[serde(serialize_with = "ser_display")]
    pub delta: Rational,
    pub flags: Flags,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl DerangementReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let opt = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
        let _ = writeln!(s, "action      {}", self.action);
        let _ = writeln!(s, "|G|         {}", self.group_order);
        let _ = writeln!(s, "degree      {}", self.degree);
        let _ = writeln!(s, "kappa       {}", self.kappa);
        let _ = writeln!(s, "delta       {}", fraction(&self.delta));
        let _ = writeln!(s, "elusive     {}", self.flags.elusive);
        let _ = writeln!(s, "pp-derang   {}", self.flags.has_prime_power_derangement);
        let _ = writeln!(s, "sharply-2t  {}", opt(self.flags.sharply_2transitive));
        let _ = writeln!(s, "frobenius   {}", opt(self.flags.frobenius));
        let _ = writeln!(s, "{:>6} {:>6} {:>10}  representative", "class", "order", "size");
        for c in &self.classes {
            let _ = writeln!(s, "{:>6} {:>6} {:>10}  {}", c.class, c.order, c.size, c.representative);
        }
        s
    }
}

/// `num/den`, always with a denominator.
pub fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Bit set over class indices.
fn classes_meeting(g: &PermGroup, h: &PermGroup) -> Result<Vec<bool>> {
    let t = g.classes()?;
    let mut hit = vec![false; t.len()];
    for r in g.ranks_of_subgroup(h)? {
        hit[t.class_of_rank(r)] = true;
    }
    Ok(hit)
}

/// The classes of `G` disjoint from `H`. Works for any proper subgroup, core
/// free or not.
pub fn derangement_class_list(g: &PermGroup, h: &PermGroup) -> Result<Vec<DerangementClass>> {
    h.require_subgroup_of(g)?;
    if h.order() == g.order() {
        return Err(Error::InvalidArgument("H must be a proper subgroup".into()));
    }
    let t = g.classes()?;
    let hit = classes_meeting(g, h)?;
    Ok((0..t.len())
        .filter(|&c| !hit[c])
        .map(|c| DerangementClass {
            class: c,
            representative: t.reps[c].clone(),
            size: t.sizes[c],
            order: t.orders[c],
        })
        .collect())
}

/// The permutation group realising the action on `G/H`: `G` itself when `H`
/// is a point stabiliser of a transitive `G`, otherwise the coset image.
pub fn action_image(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let index = g.order() / h.order();
    if index == g.degree() as u128 && predicates::is_transitive(g) {
        if let Some(p) = (0..g.degree()).find(|&p| h.generators().iter().all(|x| x.apply(p) == p)) {
            if g.orbit(p).len() == g.degree() {
                return Ok(g.clone());
            }
        }
    }
    Ok(CosetAction::new(g, h)?.image().clone())
}

pub fn derangement_classes(g: &PermGroup, h: &PermGroup) -> Result<DerangementReport> {
    derangement_classes_named(g, h, "G/H")
}

pub fn derangement_classes_named(
    g: &PermGroup,
    h: &PermGroup,
    name: &str,
) -> Result<DerangementReport> {
    let classes = derangement_class_list(g, h)?;
    let order = g.checked_order()?;
    let degree = (g.order() / h.order()) as u64;
    let total: u64 = classes.iter().map(|c| c.size).sum();
    let delta = Rational::new(total as i128, order as i128);
    let elusive = !classes.iter().any(|c| arith::is_prime(c.order));
    let has_pp = classes.iter().any(|c| arith::is_prime_power(c.order).is_some());
    let (sharp, frob) = match action_image(g, h) {
        Ok(img) => (
            Some(predicates::is_sharply_2transitive(&img)),
            Some(predicates::is_frobenius(&img)),
        ),
        Err(Error::IndexTooLarge { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(DerangementReport {
        action: name.to_string(),
        group_order: order,
        degree,
        kappa: classes.len(),
        classes,
        delta,
        flags: Flags {
            elusive,
            has_prime_power_derangement: has_pp,
            sharply_2transitive: sharp,
            frobenius: frob,
        },
    })
}

/// The action of a transitive group on its own points, with `H` the
/// stabiliser of point 0.
pub fn derangement_classes_on_points(g: &PermGroup) -> Result<DerangementReport> {
    if !predicates::is_transitive(g) {
        return Err(Error::InvalidArgument("group is not transitive".into()));
    }
    derangement_classes_named(g, &g.stabilizer(0)?, "points")
}

pub fn kappa(g: &PermGroup, h: &PermGroup) -> Result<usize> {
    Ok(derangement_class_list(g, h)?.len())
}

/// No derangement of prime order.
pub fn is_elusive(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    Ok(!derangement_class_list(g, h)?
        .iter()
        .any(|c| arith::is_prime(c.order)))
}

/// A derangement of prime-power order. Its existence is a theorem for
/// transitive actions, so `None` signals a bug or a non-transitive input.
pub fn prime_power_derangement(g: &PermGroup, h: &PermGroup) -> Result<Option<Perm>> {
    Ok(derangement_class_list(g, h)?
        .into_iter()
        .find(|c| arith::is_prime_power(c.order).is_some())
        .map(|c| c.representative))
}

/// The minimum of `κ(G,H)` over a list of subgroups and the index that
/// attains it (the first on ties).
pub fn phi_min(g: &PermGroup, maximals: &[PermGroup]) -> Result<(usize, usize)> {
    if maximals.is_empty() {
        return Err(Error::InvalidArgument("empty maximal subgroup list".into()));
    }
    let mut best = (usize::MAX, 0);
    for (i, h) in maximals.iter().enumerate() {
        let k = kappa(g, h)?;
        if k < best.0 {
            best = (k, i);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CameronCohen {
    #[serde(serialize_with = "ser_display")]
    pub delta: Rational,
    #[serde(serialize_with = "ser_display")]
    pub bound: Rational,
    pub equality: bool,
    pub sharply_2transitive: bool,
    /// `δ ≥ 1/n` and equality exactly when sharply 2-transitive.
    pub holds: bool,
}

pub fn cameron_cohen_check(g: &PermGroup, h: &PermGroup) -> Result<CameronCohen> {
    let r = derangement_classes(g, h)?;
    let bound = Rational::new(1, r.degree as i128);
    let sharp = match r.flags.sharply_2transitive {
        Some(s) => s,
        None => predicates::is_sharply_2transitive(&action_image(g, h)?),
    };
    let equality = r.delta == bound;
    Ok(CameronCohen {
        holds: r.delta >= bound && equality == sharp,
        delta: r.delta,
        bound,
        equality,
        sharply_2transitive: sharp,
    })
}

/// `|Δ_H(G)|` as a count of elements.
pub fn derangement_count(g: &PermGroup, h: &PermGroup) -> Result<u64> {
    Ok(derangement_class_list(g, h)?.iter().map(|c| c.size).sum())
}

/// The proportion of derangements, `|Δ|/|G|`.
pub fn delta(g: &PermGroup, h: &PermGroup) -> Result<Rational> {
    let n = derangement_count(g, h)?;
    if g.order() == 0 {
        return Ok(Rational::zero());
    }
    Ok(Rational::new(n as i128, g.order() as i128))
}

/// Convenience for tests: `1/n`.
pub fn reciprocal(n: u64) -> Rational {
    Rational::one() / Rational::from_integer(n as i128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alternating, dihedral, symmetric};
    use crate::engine::sylow_subgroup;

    #[test]
    fn small_kappa_values() {
        let a5 = alternating(5);
        let d10 = crate::engine::normalizer(&a5, &sylow_subgroup(&a5, 5).unwrap()).unwrap();
        assert_eq!(d10.order(), 10);
        let r = derangement_classes(&a5, &d10).unwrap();
        assert_eq!(r.kappa, 1);
        assert_eq!(r.classes[0].order, 3);
        assert_eq!(r.classes[0].size, 20);
        assert_eq!(kappa(&a5, &sylow_subgroup(&a5, 5).unwrap()).unwrap(), 2);
        assert_eq!(kappa(&a5, &a5.stabilizer(0).unwrap()).unwrap(), 2);
        let s4 = symmetric(4);
        assert_eq!(derangement_classes_on_points(&s4).unwrap().kappa, 2);
    }

    #[test]
    fn s5_delta_and_cameron_cohen() {
        let s5 = symmetric(5);
        let h = s5.stabilizer(0).unwrap();
        assert_eq!(delta(&s5, &h).unwrap(), Rational::new(44, 120));
        let cc = cameron_cohen_check(&s5, &h).unwrap();
        assert!(cc.holds && !cc.equality);
        let d = dihedral(5).unwrap();
        let cc = cameron_cohen_check(&d, &d.stabilizer(0).unwrap()).unwrap();
        assert!(cc.holds && !cc.equality && !cc.sharply_2transitive);
        let s2 = symmetric(2);
        let cc = cameron_cohen_check(&s2, &PermGroup::trivial(2)).unwrap();
        assert_eq!(cc.delta, Rational::new(1, 2));
        assert!(cc.equality && cc.sharply_2transitive && cc.holds);
    }

    #[test]
    fn rejects_whole_group() {
        let s3 = symmetric(3);
        assert!(kappa(&s3, &s3).is_err());
    }
}
