//! Properties of a group acting on its points.

use super::group::{orbits_of, PermGroup};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ActionPredicates {
    pub is_transitive: bool,
    pub is_regular: bool,
    pub is_primitive: bool,
    pub is_2transitive: bool,
    pub is_sharply_2transitive: bool,
    pub is_frobenius: bool,
}

pub fn is_transitive(g: &PermGroup) -> bool {
    g.degree() <= 1 || g.orbit(0).len() == g.degree()
}

pub fn is_regular(g: &PermGroup) -> bool {
    is_transitive(g) && g.order() == g.degree() as u128
}

/// Orbits of the stabiliser of point 0 (suborbits), the first being {0}.
pub fn suborbits(g: &PermGroup) -> Vec<Vec<usize>> {
    let c = g.chain_with_base(&[0]);
    let gens = c.levels().get(1).map(|l| l.gens.clone()).unwrap_or_default();
    orbits_of(g.degree(), &gens)
}

/// Smallest block of imprimitivity containing `a` and `b`.
pub fn minimal_block(g: &PermGroup, a: usize, b: usize) -> Vec<usize> {
    let n = g.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut queue = vec![(a, b)];
    let ra = find(&mut parent, a);
    let rb = find(&mut parent, b);
    parent[rb.max(ra)] = rb.min(ra);
    while let Some((x, y)) = queue.pop() {
        for s in g.generators() {
            let (u, v) = (s.apply(x), s.apply(y));
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
                queue.push((u, v));
            }
        }
    }
    let r = find(&mut parent, a);
    (0..n).filter(|&x| find(&mut parent, x) == r).collect()
}

pub fn is_primitive(g: &PermGroup) -> bool {
    if !is_transitive(g) {
        return false;
    }
    let n = g.degree();
    suborbits(g)
        .iter()
        .filter(|o| o[0] != 0)
        .all(|o| minimal_block(g, 0, o[0]).len() == n)
}

/// Whether the stabiliser of `0, .., t-1` is transitive on the rest at
/// every stage.
pub fn is_t_transitive(g: &PermGroup, t: usize) -> bool {
    let n = g.degree();
    if t > n {
        return false;
    }
    let prefix: Vec<usize> = (0..t).collect();
    let c = g.chain_with_base(&prefix);
    (0..t).all(|i| c.levels()[i].orbit_len() == n - i)
}

pub fn is_2transitive(g: &PermGroup) -> bool {
    match g.degree() {
        0 | 1 => true,
        2 => is_transitive(g),
        _ => is_t_transitive(g, 2),
    }
}

pub fn is_sharply_2transitive(g: &PermGroup) -> bool {
    let n = g.degree() as u128;
    is_2transitive(g) && g.order() == n * n.saturating_sub(1)
}

/// Transitive, not regular, and the point stabiliser acts semiregularly on
/// the remaining points.
pub fn is_frobenius(g: &PermGroup) -> bool {
    if !is_transitive(g) || g.degree() < 2 {
        return false;
    }
    let stab = g.order() / g.degree() as u128;
    if stab == 1 {
        return false;
    }
    suborbits(g)
        .iter()
        .filter(|o| o[0] != 0)
        .all(|o| o.len() as u128 == stab)
}

pub fn structure_predicates(g: &PermGroup) -> ActionPredicates {
    let is_transitive = is_transitive(g);
    ActionPredicates {
        is_transitive,
        is_regular: is_regular(g),
        is_primitive: is_transitive && is_primitive(g),
        is_2transitive: is_transitive && is_2transitive(g),
        is_sharply_2transitive: is_transitive && is_sharply_2transitive(g),
        is_frobenius: is_frobenius(g),
    }
}
