//! Class functions: characters of a table, induction, restriction and
//! permutation characters, with the vanishing-class statistics built on
//! them.

use super::table::CharacterTable;
use crate::derangements;
use crate::engine::PermGroup;
use crate::error::{Error, Result};
use crate::structure::{self, CaseTag};
use crate::{arith, Cyc, CycQ, Rational};
use serde::Serialize;

/// Values indexed by the conjugacy classes of one group.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction {
    pub values: Vec<Cyc>,
}

impl ClassFunction {
    pub fn from_row(t: &CharacterTable, i: usize) -> ClassFunction {
        ClassFunction { values: t.rows[i].clone() }
    }

    pub fn trivial(classes: usize) -> ClassFunction {
        ClassFunction { values: vec![Cyc::from_int(1, 1); classes] }
    }

    /// The value at the identity when it is rational.
    pub fn degree(&self) -> Option<i64> {
        self.values[0].to_scalar()
    }

    /// `n(χ)` and the classes where `χ` vanishes.
    pub fn vanishing_classes(&self) -> (usize, Vec<usize>) {
        let v: Vec<usize> = (0..self.values.len()).filter(|&i| self.values[i].is_zero()).collect();
        (v.len(), v)
    }
}

/// `⟨a, b⟩ = (1/|G|) Σ |K| a(K) conj(b(K))`.
pub fn inner_product(t: &CharacterTable, a: &ClassFunction, b: &ClassFunction) -> Result<Rational> {
    let mut s = Cyc::zero(1);
    for (i, (x, y)) in a.values.iter().zip(&b.values).enumerate() {
        s = &s + &(x * &y.conj()).scale(&(t.class_sizes[i] as i64));
    }
    let n = s
        .to_scalar()
        .ok_or_else(|| Error::Internal("inner product is not rational".into()))?;
    Ok(Rational::new(n as i128, t.group_order as i128))
}

/// The `G`-class of each `H`-class representative.
pub fn fusion(g: &PermGroup, h: &PermGroup) -> Result<Vec<usize>> {
    h.require_subgroup_of(g)?;
    let tg = g.classes()?;
    let th = h.classes()?;
    th.reps
        .iter()
        .map(|x| {
            tg.class_of(g.chain(), x)
                .ok_or_else(|| Error::Internal(format!("fusion failed for {x}")))
        })
        .collect()
}

/// `1_H^G(x) = |C_G(x)| |x^G ∩ H| / |H|`, the number of fixed points of `x`.
pub fn permutation_character(g: &PermGroup, h: &PermGroup) -> Result<ClassFunction> {
    let tg = g.classes()?;
    let counts = structure::class_counts(g, h)?;
    let values = (0..tg.len())
        .map(|c| {
            let v = tg.centralizer_order(c) as u128 * counts[c] as u128 / h.order();
            Cyc::from_int(1, v as i64)
        })
        .collect();
    Ok(ClassFunction { values })
}

/// `φ^G(x) = (|C_G(x)|/|H|) Σ |d| φ(d)` over the `H`-classes `d ⊆ x^G`.
pub fn induce(g: &PermGroup, h: &PermGroup, phi: &ClassFunction) -> Result<ClassFunction> {
    let tg = g.classes()?;
    let th = h.classes()?;
    let fus = fusion(g, h)?;
    let mut sums = vec![CycQ::zero(1); tg.len()];
    for (d, &c) in fus.iter().enumerate() {
        let term = phi.values[d].map(|&x| Rational::from_integer(x as i128 * th.sizes[d] as i128));
        sums[c] = &sums[c] + &term;
    }
    let values = sums
        .iter()
        .enumerate()
        .map(|(c, s)| {
            let f = Rational::new(tg.centralizer_order(c) as i128, h.order() as i128);
            to_integral(&s.scale(&f))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassFunction { values })
}

fn to_integral(x: &CycQ) -> Result<Cyc> {
    if x.coords().iter().any(|c| !c.is_integer()) {
        return Err(Error::Internal("induced value is not an algebraic integer".into()));
    }
    Ok(x.map(|c| c.to_integer() as i64))
}

pub fn restrict(g: &PermGroup, h: &PermGroup, chi: &ClassFunction) -> Result<ClassFunction> {
    let fus = fusion(g, h)?;
    Ok(ClassFunction { values: fus.iter().map(|&c| chi.values[c].clone()).collect() })
}

/// Every nonlinear irreducible vanishes somewhere.
pub fn burnside_check(t: &CharacterTable) -> bool {
    (0..t.len()).all(|i| t.degrees[i] == 1 || t.rows[i].iter().any(Cyc::is_zero))
}

/// Every nonlinear irreducible vanishes on an element of prime-power order.
pub fn mno_check(t: &CharacterTable) -> bool {
    (0..t.len()).all(|i| {
        t.degrees[i] == 1
            || (0..t.rows[i].len())
                .any(|c| t.rows[i][c].is_zero() && arith::is_prime_power(t.class_orders[c]).is_some())
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedHit {
    /// Position in the list of subgroups.
    pub subgroup: usize,
    /// Row of the subgroup's table.
    pub phi: usize,
    /// Row of the group's table equal to `φ^G`.
    pub chi: usize,
    /// The one class where `χ` vanishes.
    pub class: usize,
    pub tag: CaseTag,
}

/// Irreducible `χ = φ^G` with `n(χ) = 1`, over `φ ∈ Irr(H)` for each `H`.
/// For every hit the derangements of `G/H` are checked to be exactly the
/// vanishing class.
pub fn find_unique_vanishing_induced(g: &PermGroup, subgroups: &[PermGroup]) -> Result<Vec<InducedHit>> {
    let tg = CharacterTable::new(g)?;
    let mut out = Vec::new();
    for (hi, h) in subgroups.iter().enumerate() {
        let th = CharacterTable::new(h)?;
        let mut tag = None;
        for p in 0..th.len() {
            let psi = induce(g, h, &ClassFunction::from_row(&th, p))?;
            if inner_product(&tg, &psi, &psi)? != Rational::from_integer(1) {
                continue;
            }
            let (n, classes) = psi.vanishing_classes();
            if n != 1 {
                continue;
            }
            let chi = (0..tg.len())
                .find(|&r| tg.rows[r] == psi.values)
                .ok_or_else(|| Error::Internal("irreducible induced character not in table".into()))?;
            let der = derangements::derangement_class_list(g, h)?;
            if der.len() != 1 || der[0].class != classes[0] {
                return Err(Error::Internal("derangements differ from the vanishing class".into()));
            }
            let tag = match tag {
                Some(t) => t,
                None => *tag.insert(structure::classify_unique_vanishing(g, h)?.tag),
            };
            out.push(InducedHit { subgroup: hi, phi: p, chi, class: classes[0], tag });
        }
    }
    Ok(out)
}
