//! Irreducible characters by the Dixon–Schneider method.
//!
//! Central characters `ω_χ(K_j) = |K_j| χ(g_j)/χ(1)` are the common
//! eigenvectors of the class multiplication matrices. These are found over
//! `GF(ℓ)` with `ℓ ≡ 1 (mod exp G)`, where every eigenvalue is rational,
//! and then lifted to cyclotomic integers through the eigenvalues of each
//! `ρ(g)`, which are `ℓ`-adic images of roots of unity.

use crate::arith;
use crate::engine::PermGroup;
use crate::error::{Error, Result};
use crate::linalg::{self, FieldOps, Matrix, PrimeField};
use crate::perm::{CycleType, Perm};
use crate::Cyc;
use num_integer::{Integer, Roots};
use serde::Serialize;
use std::fmt::Write as _;

pub const MAX_ORDER: u64 = 1 << 20;
pub const MAX_CLASSES: usize = 48;

#[derive(Debug, Clone)]
pub struct CharacterTable {
    /// Exponent of the group; every value lies in `Z[ζ_e]`.
    pub conductor: u64,
    pub group_order: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u64>,
    pub class_reps: Vec<Perm>,
    /// Class of the inverse.
    pub inverse: Vec<usize>,
    pub rows: Vec<Vec<Cyc>>,
    pub degrees: Vec<u64>,
    /// The prime used for the modular computation.
    pub prime: u64,
}

/// Smallest prime `ℓ ≡ 1 (mod e)` with `ℓ > 2√n`.
pub fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut l = e + 1;
    while !(arith::is_prime(l) && (l as u128) * (l as u128) > 4 * n as u128) {
        l += e;
    }
    l
}

impl CharacterTable {
    pub fn new(g: &PermGroup) -> Result<CharacterTable> {
        let order = g.checked_order()?;
        if order > MAX_ORDER {
            return Err(Error::CapExceeded { order: order as u128, cap: MAX_ORDER });
        }
        let t = g.classes()?;
        let k = t.len();
        if k > MAX_CLASSES {
            return Err(Error::TooManyClasses(k, MAX_CLASSES));
        }
        let chain = g.chain();
        let e = t.orders.iter().fold(1u64, |a, &o| a.lcm(&o));
        let l = dixon_prime(e, order);
        let f = PrimeField { modulus: l };
        let inverse = t.inverse_classes(chain);

        let mut members = vec![Vec::new(); k];
        for (r, &c) in t.labels().iter().enumerate() {
            members[c as usize].push(r as u64);
        }
        let base = chain.base();
        let rep_base: Vec<Vec<usize>> = t
            .reps
            .iter()
            .map(|z| base.iter().map(|&b| z.apply(b)).collect())
            .collect();
        let mut digits = vec![0u32; base.len()];
        let mut imgs = vec![0u32; base.len()];
        // (M_j)_{l,i} = #{u ∈ K_{j*} : u z_i ∈ K_l}.
        let mut class_matrix = |j: usize| -> Matrix<u64> {
            let mut m = linalg::zero_matrix(&f, k, k);
            let mut counts = vec![0u64; k * k];
            for &u in &members[inverse[j]] {
                chain.digits(u, &mut digits);
                for i in 0..k {
                    for (x, &p) in imgs.iter_mut().zip(&rep_base[i]) {
                        *x = chain.eval_digits(&digits, p) as u32;
                    }
                    let r = chain.rank_from_base_images(&mut imgs).expect("product in group");
                    counts[t.class_of_rank(r) * k + i] += 1;
                }
            }
            for (idx, c) in counts.into_iter().enumerate() {
                m.set(idx / k, idx % k, c % l);
            }
            m
        };

        // Split F^k into common eigenspaces, cheapest classes first.
        let mut order_j: Vec<usize> = (1..k).collect();
        order_j.sort_by_key(|&j| (t.sizes[j], j));
        let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
            .map(|i| {
                let mut v = vec![0u64; k];
                v[i] = 1;
                v
            })
            .collect()];
        for &j in &order_j {
            if spaces.iter().all(|s| s.len() == 1) {
                break;
            }
            let m = class_matrix(j);
            let mut next = Vec::new();
            for s in spaces {
                if s.len() == 1 {
                    next.push(s);
                } else {
                    next.extend(split(&f, &m, s)?);
                }
            }
            spaces = next;
        }
        if spaces.len() != k {
            return Err(Error::Internal("class matrices did not separate characters".into()));
        }

        let root = arith::pow_mod(arith::primitive_root(l), (l - 1) / e, l);
        let powers: Vec<Vec<usize>> = t
            .reps
            .iter()
            .zip(&t.orders)
            .map(|(x, &o)| {
                (0..o)
                    .map(|m| t.class_of_rank(chain.rank_unchecked(&x.pow(m as i64)).unwrap()))
                    .collect()
            })
            .collect();
        let mut rows = Vec::with_capacity(k);
        let mut degrees = Vec::with_capacity(k);
        let mut modular = Vec::with_capacity(k);
        for s in &spaces {
            let w0 = s[0][0];
            let inv0 = f.inv(w0).ok_or_else(|| Error::Internal("eigenvector with ω(1) = 0".into()))?;
            let w: Vec<u64> = s[0].iter().map(|&x| f.mul(x, inv0)).collect();
            let mut sum = 0u64;
            for i in 0..k {
                let hi = f.inv(t.sizes[i] % l).unwrap();
                sum = f.add(sum, f.mul(f.mul(w[i], w[inverse[i]]), hi));
            }
            let d2 = f.mul(order % l, f.inv(sum).ok_or_else(|| Error::Internal("zero norm".into()))?);
            let d = (1..=order.sqrt())
                .find(|&d| (d * d) % l == d2)
                .ok_or_else(|| Error::Internal("no integral degree".into()))?;
            let theta: Vec<u64> = (0..k)
                .map(|i| f.mul(f.mul(d % l, w[i]), f.inv(t.sizes[i] % l).unwrap()))
                .collect();
            let mut row = Vec::with_capacity(k);
            for i in 0..k {
                row.push(lift_value(&f, root, e, &powers[i], &theta, d)?);
            }
            rows.push(row);
            degrees.push(d);
            modular.push(theta);
        }
        let mut idx: Vec<usize> = (0..k).collect();
        idx.sort_by(|&a, &b| row_key(&rows[a], degrees[a]).cmp(&row_key(&rows[b], degrees[b])));
        let table = CharacterTable {
            conductor: e,
            group_order: order,
            class_sizes: t.sizes.clone(),
            class_orders: t.orders.clone(),
            class_reps: t.reps.clone(),
            inverse,
            rows: idx.iter().map(|&i| rows[i].clone()).collect(),
            degrees: idx.iter().map(|&i| degrees[i]).collect(),
            prime: l,
        };
        let ordered: Vec<Vec<u64>> = idx.iter().map(|&i| modular[i].clone()).collect();
        table.check_modular(&f, &ordered)?;
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn centralizer_order(&self, c: usize) -> u64 {
        self.group_order / self.class_sizes[c]
    }

    /// Row orthogonality and `Σ χ(1)² = |G|`, checked modulo `ℓ`.
    fn check_modular(&self, f: &PrimeField, theta: &[Vec<u64>]) -> Result<()> {
        let k = self.len();
        let total: u64 = self.degrees.iter().map(|d| d * d).sum();
        if total != self.group_order {
            return Err(Error::Internal("degrees do not satisfy Σχ(1)² = |G|".into()));
        }
        for a in 0..k {
            for b in 0..=a {
                let mut s = 0u64;
                for i in 0..k {
                    let term = f.mul(theta[a][i], theta[b][self.inverse[i]]);
                    s = f.add(s, f.mul(self.class_sizes[i] % f.modulus, term));
                }
                let want = if a == b { self.group_order % f.modulus } else { 0 };
                if s != want {
                    return Err(Error::Internal("row orthogonality failed".into()));
                }
            }
        }
        Ok(())
    }

    /// Rows of degree 1.
    pub fn linear_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    pub fn cycle_types(&self) -> Vec<CycleType> {
        self.class_reps.iter().map(Perm::cycle_type).collect()
    }

    pub fn to_text(&self) -> String {
        let k = self.len();
        let mut cells: Vec<Vec<String>> = Vec::new();
        let ct = self.cycle_types();
        cells.push(std::iter::once("class".into()).chain((0..k).map(|i| i.to_string())).collect());
        cells.push(
            std::iter::once("type".into())
                .chain(ct.iter().map(|c| c.to_string()))
                .collect(),
        );
        cells.push(
            std::iter::once("size".into())
                .chain(self.class_sizes.iter().map(|s| s.to_string()))
                .collect(),
        );
        cells.push(
            std::iter::once("order".into())
                .chain(self.class_orders.iter().map(|s| s.to_string()))
                .collect(),
        );
        for (r, row) in self.rows.iter().enumerate() {
            cells.push(
                std::iter::once(format!("X.{}", r + 1))
                    .chain(row.iter().map(|v| v.to_string()))
                    .collect(),
            );
        }
        let widths: Vec<usize> = (0..=k)
            .map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut s = String::new();
        let _ = writeln!(s, "z = exp(2πi/{})", self.conductor);
        for (n, r) in cells.iter().enumerate() {
            let line: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}", w = w))
                .collect();
            let _ = writeln!(s, "{}", line.join("  ").trim_end());
            if n == 3 {
                let _ = writeln!(s);
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Class {
            cycle_type: String,
            size: u64,
            order: u64,
        }
        #[derive(Serialize)]
        struct Row {
            degree: u64,
            values: Vec<Vec<i64>>,
        }
        #[derive(Serialize)]
        struct Table {
            conductor: u64,
            group_order: u64,
            classes: Vec<Class>,
            rows: Vec<Row>,
        }
        let ct = self.cycle_types();
        let out = Table {
            conductor: self.conductor,
            group_order: self.group_order,
            classes: (0..self.len())
                .map(|i| Class {
                    cycle_type: ct[i].to_string(),
                    size: self.class_sizes[i],
                    order: self.class_orders[i],
                })
                .collect(),
            rows: self
                .rows
                .iter()
                .zip(&self.degrees)
                .map(|(r, &d)| Row {
                    degree: d,
                    values: r.iter().map(|v| v.coords().to_vec()).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&out).expect("table serialises")
    }
}

/// Trivial character first, then by degree and descending coordinates.
fn row_key(row: &[Cyc], degree: u64) -> (bool, u64, std::cmp::Reverse<Vec<Vec<i64>>>) {
    let trivial = row.iter().all(|v| v.to_scalar() == Some(1));
    (
        !trivial,
        degree,
        std::cmp::Reverse(row.iter().map(|v| v.coords().to_vec()).collect()),
    )
}

/// Splits the span of `basis` into eigenspaces of `m`.
fn split(f: &PrimeField, m: &Matrix<u64>, basis: Vec<Vec<u64>>) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let k = basis[0].len();
    let mut r = Matrix::from_rows(basis);
    let piv = linalg::rref(f, &mut r);
    if piv.len() != d {
        return Err(Error::Internal("degenerate eigenspace basis".into()));
    }
    let rows = r.to_rows();
    // a[s][c] = coordinate s of M r_c.
    let mut a = linalg::zero_matrix(f, d, d);
    for (c, rc) in rows.iter().enumerate() {
        let img = linalg::mat_vec(f, m, rc);
        for (s, &p) in piv.iter().enumerate() {
            a.set(s, c, img[p]);
        }
    }
    let cp = linalg::charpoly(f, &a);
    let mut out = Vec::new();
    let mut total = 0;
    for lam in linalg::roots_mod_prime(f, &cp) {
        let mut shifted = a.clone();
        for i in 0..d {
            shifted.set(i, i, f.sub(shifted.get(i, i), lam));
        }
        let ns = linalg::nullspace(f, &shifted);
        total += ns.len();
        out.push(
            ns.iter()
                .map(|cv| {
                    let mut v = vec![0u64; k];
                    for (c, &x) in cv.iter().enumerate() {
                        for (vi, &ri) in v.iter_mut().zip(&rows[c]) {
                            *vi = f.add(*vi, f.mul(x, ri));
                        }
                    }
                    v
                })
                .collect(),
        );
    }
    if total != d {
        return Err(Error::Internal("class matrix not diagonalisable mod ℓ".into()));
    }
    Ok(out)
}

/// `χ(g) = Σ_k a_k ζ_o^k` with `a_k = (1/o) Σ_m χ(g^m) ζ_o^{-km}` computed
/// modulo `ℓ`; each `a_k` is an eigenvalue multiplicity, so at most `χ(1)`.
fn lift_value(f: &PrimeField, root: u64, e: u64, powers: &[usize], theta: &[u64], d: u64) -> Result<Cyc> {
    let o = powers.len() as u64;
    let step = e / o;
    let zo = arith::pow_mod(root, step, f.modulus);
    let zo_inv = f.inv(zo).unwrap();
    let o_inv = f.inv(o % f.modulus).unwrap();
    let mut terms = Vec::new();
    let mut total = 0;
    for kk in 0..o {
        let w = arith::pow_mod(zo_inv, kk, f.modulus);
        let mut acc = 0u64;
        let mut wm = 1u64;
        for &c in powers {
            acc = f.add(acc, f.mul(theta[c], wm));
            wm = f.mul(wm, w);
        }
        let ak = f.mul(acc, o_inv);
        if ak > d {
            return Err(Error::Internal("eigenvalue multiplicity out of range".into()));
        }
        total += ak;
        terms.push((kk * step, ak as i64));
    }
    if total != d {
        return Err(Error::Internal("multiplicities do not sum to the degree".into()));
    }
    Ok(Cyc::from_exponents(e, &terms))
}
