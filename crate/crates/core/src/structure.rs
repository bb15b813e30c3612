//! Structural tests: Frobenius kernels, Camina pairs, W-triples, group
//! fingerprints and the case analysis for a subgroup whose derangements
//! form a single class.

use crate::constructors::{alternating, pgaml2};
use crate::derangements::{self, action_image};
use crate::engine::subgroups::{
    self, derived_series_orders, is_nilpotent, is_normal, p_group_prime, sylow_subgroup,
};
use crate::engine::{predicates, CosetAction, PermGroup, Quotient};
use crate::error::{Error, Result};
use crate::perm::Perm;
use serde::Serialize;
use std::collections::BTreeMap;

/// `{1} ∪ Δ(G)` when `G` is a Frobenius group on its points, checked to be
/// a regular normal subgroup.
pub fn frobenius_kernel(g: &PermGroup) -> Result<Option<PermGroup>> {
    if !predicates::is_frobenius(g) {
        return Ok(None);
    }
    let report = derangements::derangement_classes_on_points(g)?;
    let gens: Vec<Perm> = report.classes.iter().map(|c| c.representative.clone()).collect();
    let k = subgroups::normal_closure(g, &gens)?;
    let count: u64 = report.classes.iter().map(|c| c.size).sum();
    let regular = predicates::is_regular(&k);
    if k.order() != count as u128 + 1 || !regular || !is_normal(g, &k) {
        return Err(Error::Internal("Frobenius kernel failed its checks".into()));
    }
    Ok(Some(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FrobeniusCertificate {
    pub frobenius: bool,
    pub delta_in_n: bool,
    pub agree: bool,
}

/// Compares "Frobenius" with "every derangement lies in `N`" for a regular
/// normal subgroup `N` and nontrivial point stabiliser `H`.
pub fn frobenius_iff_delta_in_n(
    g: &PermGroup,
    h: &PermGroup,
    n: &PermGroup,
) -> Result<FrobeniusCertificate> {
    n.require_subgroup_of(g)?;
    if !is_normal(g, n) {
        return Err(Error::InvalidArgument("N is not normal".into()));
    }
    if h.order() == 1 {
        return Err(Error::InvalidArgument("point stabiliser is trivial".into()));
    }
    let img = action_image(g, h)?;
    if img.order() != g.order() {
        return Err(Error::InvalidArgument("action on G/H is not faithful".into()));
    }
    // Regular on G/H: transitive of order |G:H| with trivial intersection.
    let meets = subgroups::intersection(n, h)?.order() != 1;
    if n.order() * h.order() != g.order() || meets {
        return Err(Error::InvalidArgument("N is not regular on G/H".into()));
    }
    let frobenius = predicates::is_frobenius(&img);
    let delta_in_n = derangements::derangement_class_list(g, h)?
        .iter()
        .all(|c| n.contains(&c.representative));
    Ok(FrobeniusCertificate {
        frobenius,
        delta_in_n,
        agree: frobenius == delta_in_n,
    })
}

/// `|C_G(g)| = |C_{G/N}(Ng)|` for every `g ∉ N`, checked on one element per
/// class since both sides are class functions.
pub fn is_camina_pair(g: &PermGroup, n: &PermGroup) -> Result<bool> {
    n.require_subgroup_of(g)?;
    if n.order() == 1 || n.order() == g.order() {
        return Err(Error::InvalidArgument("N must be proper and nontrivial".into()));
    }
    if !is_normal(g, n) {
        return Err(Error::InvalidArgument("N is not normal".into()));
    }
    camina_condition(g, n)
}

/// The Camina equality without the properness requirement, so that an
/// abelian group counts as satisfying it over its trivial derived subgroup.
fn camina_condition(g: &PermGroup, n: &PermGroup) -> Result<bool> {
    let t = g.classes()?;
    let q = Quotient::new(g, n)?;
    let qt = q.group().classes()?;
    for c in 0..t.len() {
        let x = &t.reps[c];
        if n.contains(x) {
            continue;
        }
        let y = q.map(x)?;
        let qc = qt
            .class_of(q.group().chain(), &y)
            .ok_or_else(|| Error::Internal("quotient image outside quotient".into()))?;
        if t.centralizer_order(c) != qt.centralizer_order(qc) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(G, G')` is a Camina pair. False when `G'` is trivial or all of `G`.
pub fn is_camina_group(g: &PermGroup) -> Result<bool> {
    let d = subgroups::derived_subgroup(g)?;
    if d.order() == 1 || d.order() == g.order() {
        return Ok(false);
    }
    camina_condition(g, &d)
}

/// Class indices of `G` meeting the subset of `H` selected by `keep`.
fn classes_meeting_where(
    g: &PermGroup,
    h: &PermGroup,
    mut keep: impl FnMut(&Perm) -> bool,
) -> Result<Vec<bool>> {
    let t = g.classes()?;
    let mut hit = vec![false; t.len()];
    let ranks = g.ranks_of_subgroup(h)?;
    let mut i = 0;
    h.for_each_element(|y| {
        if keep(y) {
            hit[t.class_of_rank(ranks[i])] = true;
        }
        i += 1;
        true
    })?;
    Ok(hit)
}

/// The kernel of the W-triple `(G, H, L)` if the condition holds, with
/// Wielandt's conclusions checked directly.
pub fn w_triple_verify(g: &PermGroup, h: &PermGroup, l: &PermGroup) -> Result<Option<PermGroup>> {
    h.require_subgroup_of(g)?;
    l.require_subgroup_of(h)?;
    if !is_normal(h, l) {
        return Err(Error::InvalidArgument("L is not normal in H".into()));
    }
    let t = g.classes()?;
    let order = g.checked_order()? as u128;
    // H ∩ H^g ≤ L for g ∉ H means each y ∈ H∖L fixes only the base coset,
    // that is the permutation character is 1 there.
    let fusion = class_counts(g, h)?;
    let outside = classes_meeting_where(g, h, |y| !l.contains(y))?;
    for c in 0..t.len() {
        if outside[c] {
            let fix = t.centralizer_order(c) as u128 * fusion[c] as u128 / h.order();
            if fix != 1 {
                return Ok(None);
            }
        }
    }
    // M: the classes that avoid H∖L.
    let keep: Vec<usize> = (0..t.len()).filter(|&c| !outside[c]).collect();
    let size: u128 = keep.iter().map(|&c| t.sizes[c] as u128).sum();
    let reps: Vec<Perm> = keep.iter().map(|&c| t.reps[c].clone()).collect();
    let m = subgroups::normal_closure(g, &reps)?;
    let inter = subgroups::intersection(h, &m)?;
    let ok = m.order() == size
        && is_normal(g, &m)
        && h.order() * m.order() / inter.order() == order
        && inter.order() == l.order()
        && l.is_subgroup_of(&m);
    if !ok {
        return Err(Error::Internal("W-triple kernel failed Wielandt's conclusions".into()));
    }
    Ok(Some(m))
}

/// `|x^G ∩ H|` for every class of `G`.
pub fn class_counts(g: &PermGroup, h: &PermGroup) -> Result<Vec<u64>> {
    let t = g.classes()?;
    let mut counts = vec![0u64; t.len()];
    for r in g.ranks_of_subgroup(h)? {
        counts[t.class_of_rank(r)] += 1;
    }
    Ok(counts)
}

/// An isomorphism invariant: order, class sizes, element orders and the
/// derived series. It is only claimed to separate the handful of target
/// groups from the other groups of the same order that the crate builds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: u128,
    pub class_sizes: Vec<u64>,
    pub element_orders: BTreeMap<u64, u64>,
    pub derived_series: Vec<u128>,
}

pub fn fingerprint(g: &PermGroup) -> Result<Fingerprint> {
    let t = g.classes()?;
    let mut class_sizes = t.sizes.clone();
    class_sizes.sort_unstable();
    let mut element_orders = BTreeMap::new();
    for c in 0..t.len() {
        *element_orders.entry(t.orders[c]).or_insert(0) += t.sizes[c];
    }
    Ok(Fingerprint {
        order: g.order(),
        class_sizes,
        element_orders,
        derived_series: derived_series_orders(g)?,
    })
}

/// Reference fingerprints for the quotients named in the case analysis.
pub mod reference {
    use super::*;
    use crate::constructors::matrix::VectorSpace;
    use crate::field::FiniteField;

    pub fn a5() -> Fingerprint {
        fingerprint(&alternating(5)).expect("small group")
    }

    pub fn l2_8_3() -> Fingerprint {
        fingerprint(&pgaml2(2, 3).expect("valid field")).expect("small group")
    }

    /// `SL2(3)` acting on the nonzero vectors of `GF(3)²`.
    pub fn sl2_3_group() -> PermGroup {
        let vs = VectorSpace::new(FiniteField::new(3, 1).unwrap(), 2).unwrap();
        let gens = vs.sl_gens().iter().map(|m| vs.matrix_perm(m).unwrap()).collect();
        PermGroup::new(9, gens).unwrap()
    }

    pub fn sl2_3() -> Fingerprint {
        fingerprint(&sl2_3_group()).expect("small group")
    }

    pub fn q8_group() -> PermGroup {
        let g = sl2_3_group();
        sylow_subgroup(&g, 2).unwrap()
    }

    pub fn q8() -> Fingerprint {
        fingerprint(&q8_group()).expect("small group")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[allow(non_camel_case_types)]
pub enum CaseTag {
    FROBENIUS_INDEX2_ABELIAN_ODD,
    FROB_QUOTIENT_a,
    FROB_QUOTIENT_b,
    FROB_QUOTIENT_c,
    L28_CASE,
    A5_CASE,
    NONE,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureCase {
    pub tag: CaseTag,
    #[serde(rename = "N_order")]
    pub n_order: u128,
    #[serde(rename = "M_order")]
    pub m_order: u128,
    pub p: Option<u64>,
    pub n: Option<u32>,
    /// Order of the kernel `K` in the `SL2(3)` subcase.
    pub k_order: Option<u128>,
    pub side_conditions: Vec<SideCondition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideCondition {
    pub name: String,
    pub holds: bool,
}

impl StructureCase {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("case serialises")
    }

    pub fn condition(&self, name: &str) -> Option<bool> {
        self.side_conditions.iter().find(|c| c.name == name).map(|c| c.holds)
    }

    fn none(conds: Vec<SideCondition>) -> StructureCase {
        StructureCase {
            tag: CaseTag::NONE,
            n_order: 0,
            m_order: 0,
            p: None,
            n: None,
            k_order: None,
            side_conditions: conds,
        }
    }
}

struct Conds(Vec<SideCondition>);

impl Conds {
    fn add(&mut self, name: &str, v: bool) -> bool {
        self.0.push(SideCondition { name: name.to_string(), holds: v });
        v
    }

    fn all(&self) -> bool {
        self.0.iter().all(|c| c.holds)
    }
}

/// `M` acts as a Frobenius group on the cosets of `C` with kernel `K`.
fn is_frobenius_with(m: &PermGroup, k: &PermGroup, c: &PermGroup) -> Result<bool> {
    if k.order() * c.order() != m.order() || subgroups::intersection(k, c)?.order() != 1 {
        return Ok(false);
    }
    let a = CosetAction::new(m, c)?;
    let img = a.image();
    if img.order() != m.order() || !predicates::is_frobenius(img) {
        return Ok(false);
    }
    let kimg = a.image_of_subgroup(k)?;
    Ok(frobenius_kernel(img)?.is_some_and(|fk| fk.order() == kimg.order() && kimg.is_subgroup_of(&fk)))
}

/// Which case of the unique-vanishing classification a subgroup `H` with
/// `Δ_H(G) = x^G` falls under. `H` is taken to be maximal; every side
/// condition in the returned record was computed, and the tag is `NONE`
/// unless all of them hold.
pub fn classify_unique_vanishing(g: &PermGroup, h: &PermGroup) -> Result<StructureCase> {
    let list = derangements::derangement_class_list(g, h)?;
    let mut conds = Conds(Vec::new());
    if !conds.add("kappa_is_1", list.len() == 1) {
        return Ok(StructureCase::none(conds.0));
    }
    let x = list[0].representative.clone();
    let t = g.classes()?;
    let xc = list[0].class;
    let cx = t.centralizer_order(xc) as u128;
    let x_size = t.sizes[xc] as u128;

    if is_normal(g, h) {
        let derived = subgroups::derived_subgroup(g)?;
        conds.add("index_2", g.order() == 2 * h.order());
        conds.add("H_abelian", subgroups::is_abelian(h));
        conds.add("H_odd_order", h.order() % 2 == 1);
        conds.add("H_is_derived", derived.order() == h.order() && derived.is_subgroup_of(h));
        conds.add("centralizer_order_2", cx == 2);
        conds.add("class_size_eq_H", x_size == h.order());
        let tag = if conds.all() {
            CaseTag::FROBENIUS_INDEX2_ABELIAN_ODD
        } else {
            CaseTag::NONE
        };
        return Ok(StructureCase {
            tag,
            n_order: h.order(),
            m_order: g.order(),
            p: Some(2),
            n: Some(1),
            k_order: None,
            side_conditions: conds.0,
        });
    }

    let n = subgroups::normal_core(g, h)?;
    let m = subgroups::normal_closure(g, std::slice::from_ref(&x))?;
    let img = CosetAction::new(g, h)?.image().clone();
    let mut case = StructureCase {
        tag: CaseTag::NONE,
        n_order: n.order(),
        m_order: m.order(),
        p: None,
        n: None,
        k_order: None,
        side_conditions: Vec::new(),
    };

    if predicates::is_sharply_2transitive(&img) && predicates::is_frobenius(&img) {
        let index = (g.order() / h.order()) as u64;
        let pp = crate::arith::is_prime_power(index);
        conds.add("quotient_2transitive_frobenius", true);
        conds.add("kernel_order_prime_power", pp.is_some());
        let (p, e) = pp.unwrap_or((0, 0));
        case.p = Some(p);
        case.n = Some(e);
        conds.add("N_le_M", n.is_subgroup_of(&m));
        conds.add("M_mod_N_order", m.order() == n.order() * index as u128);
        conds.add("class_is_M_minus_N", x_size == m.order() - n.order());
        conds.add("centralizer_order_p_n", cx == index as u128);
        conds.add("class_size_eq_H", x_size == h.order());
        let md = subgroups::derived_subgroup(&m)?;
        conds.add("M_derived_eq_N", md.order() == n.order() && md.is_subgroup_of(&n));
        if !conds.all() {
            case.side_conditions = conds.0;
            return Ok(case);
        }
        // (a): M Frobenius over M' = N with a complement of prime order p > 2.
        if e == 1 && p > 2 && n.order() > 1 {
            let c = sylow_subgroup(&m, p)?;
            if c.order() == p as u128 && is_frobenius_with(&m, &n, &c)? {
                conds.add("M_frobenius_kernel_M_derived", true);
                case.tag = CaseTag::FROB_QUOTIENT_a;
                case.side_conditions = conds.0;
                return Ok(case);
            }
        }
        // (b): M Frobenius with kernel K, G/K ≅ SL2(3), M/K ≅ Q8.
        if p == 2 && e == 2 {
            if let Some(k) = find_sl2_3_kernel(g, &m)? {
                conds.add("quotient_G_K_is_SL2_3", true);
                conds.add("quotient_M_K_is_Q8", true);
                conds.add("M_frobenius_kernel_K", true);
                case.k_order = Some(k.order());
                case.tag = CaseTag::FROB_QUOTIENT_b;
                case.side_conditions = conds.0;
                return Ok(case);
            }
        }
        // (c): M a p-group satisfying the Camina condition over M'.
        if p_group_prime(&m) == Some(p) && camina_condition(&m, &md)? {
            conds.add("M_camina_p_group", true);
            case.tag = CaseTag::FROB_QUOTIENT_c;
        } else {
            conds.add("M_camina_p_group", false);
        }
        case.side_conditions = conds.0;
        return Ok(case);
    }

    let fp = fingerprint(&img)?;
    let x_order = x.order() as u128;
    if fp == reference::l2_8_3() {
        conds.add("quotient_is_L2_8_3", true);
        conds.add("H_mod_N_order_54", h.order() / n.order() == 54);
        conds.add("N_nilpotent", is_nilpotent(&n)?);
        conds.add("N_order_prime_to_7", n.order() % 7 != 0);
        conds.add("centralizer_is_x_order_7", cx == 7 && x_order == 7);
        case.p = Some(7);
        case.n = Some(1);
        case.tag = if conds.all() { CaseTag::L28_CASE } else { CaseTag::NONE };
        case.side_conditions = conds.0;
        return Ok(case);
    }
    if fp == reference::a5() {
        conds.add("quotient_is_A5", true);
        conds.add("H_mod_N_order_10", h.order() / n.order() == 10);
        conds.add("N_2_group", n.order() == 1 || p_group_prime(&n) == Some(2));
        conds.add("centralizer_is_x_order_3", cx == 3 && x_order == 3);
        case.p = Some(3);
        case.n = Some(1);
        case.tag = if conds.all() { CaseTag::A5_CASE } else { CaseTag::NONE };
        case.side_conditions = conds.0;
        return Ok(case);
    }
    conds.add("matches_a_case", false);
    case.side_conditions = conds.0;
    Ok(case)
}

/// A normal subgroup `K` of `G` inside `M` with `G/K ≅ SL2(3)` and
/// `M/K ≅ Q8` by fingerprint, `M` Frobenius with kernel `K`; the smallest
/// such.
fn find_sl2_3_kernel(g: &PermGroup, m: &PermGroup) -> Result<Option<PermGroup>> {
    let sl = reference::sl2_3();
    let q8 = reference::q8();
    for ns in subgroups::normal_subgroups(m)? {
        let k = ns.group;
        if k.order() * 8 != m.order() || !is_normal(g, &k) {
            continue;
        }
        let gk = Quotient::new(g, &k)?;
        let mk = gk.map_subgroup(m)?;
        if fingerprint(gk.group())? != sl || fingerprint(&mk)? != q8 {
            continue;
        }
        let c = sylow_subgroup(m, 2)?;
        if c.order() == 8 && is_frobenius_with(m, &k, &c)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineCommutatorCheck {
    pub p: u64,
    pub hp_order: u128,
    pub commutator_order: u128,
    pub proper: bool,
    pub products_are_derangements: bool,
}

/// For `G = N:H` with `N` regular and `H` the stabiliser of the base point:
/// `[N, H_p]` is proper in `N`, and `t z` is a derangement for every
/// `t ∈ H_p` and `z ∈ N ∖ [N, H_p]`.
pub fn affine_commutator_check(g: &PermGroup, n: &PermGroup, h: &PermGroup) -> Result<Option<AffineCommutatorCheck>> {
    let p = match p_group_prime(n) {
        Some(p) => p,
        None => return Err(Error::InvalidArgument("N is not a p-group".into())),
    };
    if h.order() % p as u128 != 0 {
        return Ok(None);
    }
    if !predicates::is_transitive(g) || g.order() != h.order() * g.degree() as u128 || h.generators().iter().any(|x| x.apply(0) != 0) {
        return Err(Error::InvalidArgument("G must act on its own points with H the stabiliser of 0".into()));
    }
    let hp = sylow_subgroup(h, p)?;
    let c = subgroups::commutator_subgroup(n, &hp)?;
    let proper = c.order() < n.order();
    let hp_elems = hp.elements()?;
    let mut all = true;
    n.for_each_element(|z| {
        if !c.contains(z) && hp_elems.iter().any(|t| !t.mul(z).is_derangement()) {
            all = false;
        }
        all
    })?;
    Ok(Some(AffineCommutatorCheck {
        p,
        hp_order: hp.order(),
        commutator_order: c.order(),
        proper,
        products_are_derangements: all,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::affine::agl1;
    use crate::constructors::{dihedral, symmetric};

    #[test]
    fn frobenius_kernels() {
        let d = dihedral(5).unwrap();
        assert_eq!(frobenius_kernel(&d).unwrap().unwrap().order(), 5);
        assert!(frobenius_kernel(&symmetric(4)).unwrap().is_none());
        let a = agl1(2, 3).unwrap();
        let k = frobenius_kernel(&a).unwrap().unwrap();
        assert_eq!(k.order(), 8);
        assert!(subgroups::is_abelian(&k));
    }

    #[test]
    fn camina() {
        let s3 = symmetric(3);
        let a3 = subgroups::derived_subgroup(&s3).unwrap();
        assert!(is_camina_pair(&s3, &a3).unwrap());
        assert!(!is_camina_group(&alternating(5)).unwrap());
        assert!(is_camina_group(&reference::q8_group()).unwrap());
    }

    #[test]
    fn d10_and_agl18() {
        let d = dihedral(5).unwrap();
        let z5 = sylow_subgroup(&d, 5).unwrap();
        let c = classify_unique_vanishing(&d, &z5).unwrap();
        assert_eq!(c.tag, CaseTag::FROBENIUS_INDEX2_ABELIAN_ODD, "{c:?}");
        let a = agl1(2, 3).unwrap();
        let c = classify_unique_vanishing(&a, &a.stabilizer(0).unwrap()).unwrap();
        assert_eq!(c.tag, CaseTag::FROB_QUOTIENT_c, "{c:?}");
        assert_eq!((c.n_order, c.m_order), (1, 8));
    }

    #[test]
    fn s4_over_d8_is_case_a() {
        let s4 = symmetric(4);
        let d8 = sylow_subgroup(&s4, 2).unwrap();
        let c = classify_unique_vanishing(&s4, &d8).unwrap();
        assert_eq!(c.tag, CaseTag::FROB_QUOTIENT_a, "{c:?}");
        assert_eq!((c.n_order, c.m_order, c.p), (4, 12, Some(3)));
    }
}
