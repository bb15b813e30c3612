//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Composition follows function notation: `a.compose(&b)` applies `b`
//! first, so `(a∘b)(i) = a(b(i))`. Text I/O is 1-based disjoint cycle
//! notation.

use crate::error::{Error, Result};
use num_integer::Integer;
use std::fmt;

/// Largest supported degree.
pub const MAX_DEGREE: usize = 1 << 16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u32>,
}

/// Cycle lengths in descending order, fixed points included.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Vec<usize>);

impl CycleType {
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Exponential notation, e.g. 2^2 1^1.
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            parts.push(if j - i == 1 {
                l.to_string()
            } else {
                format!("{l}^{}", j - i)
            });
            i = j;
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            img: (0..n as u32).collect(),
        }
    }

    /// Validates that `img` is a bijection of `{0, .., img.len()-1}`.
    pub fn from_images(img: Vec<u32>) -> Result<Perm> {
        let n = img.len();
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &x in &img {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{img:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm { img })
    }

    pub fn from_images_usize(img: &[usize]) -> Result<Perm> {
        Perm::from_images(img.iter().map(|&x| x as u32).collect())
    }

    /// Trusts the caller that `img` is a bijection.
    pub(crate) fn from_images_unchecked(img: Vec<u32>) -> Perm {
        debug_assert!(Perm::from_images(img.clone()).is_ok());
        Perm { img }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a >= n || b >= n || touched[a] {
                    return Err(Error::NotAPermutation(format!("{cycles:?}")));
                }
                touched[a] = true;
                img[a] = b as u32;
            }
        }
        Perm::from_images(img)
    }

    /// Parses 1-based cycle notation such as `(1,2)(3,4,5)`; `()` is the
    /// identity. Whitespace is ignored and commas may be replaced by spaces.
    pub fn parse(s: &str, n: usize) -> Result<Perm> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' in {s:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = &rest[1..close];
            let pts: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .ok()
                        .filter(|&v| v >= 1)
                        .map(|v| v - 1)
                        .ok_or_else(|| Error::Parse(format!("bad point {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = &rest[close + 1..];
        }
        Perm::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    /// Unchecked `self ∘ other`; panics on a degree mismatch.
    pub fn mul(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            img: other.img.iter().map(|&x| self.img[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { img: inv }
    }

    /// `g⁻¹ ∘ self ∘ g`.
    pub fn conjugate(&self, g: &Perm) -> Result<Perm> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch(self.degree(), g.degree()));
        }
        Ok(self.conj(g))
    }

    pub(crate) fn conj(&self, g: &Perm) -> Perm {
        let ginv = g.inverse();
        Perm {
            img: g
                .img
                .iter()
                .map(|&x| ginv.img[self.img[x as usize] as usize])
                .collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut r = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        r
    }

    /// `self⁻¹ other⁻¹ self other`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse()
            .mul(&other.inverse())
            .mul(self)
            .mul(other)
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut c = vec![i];
            seen[i] = true;
            let mut j = self.apply(i);
            while j != i {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut l = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                l += 1;
                j = self.apply(j);
            }
            lens.push(l);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(lens)
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .0
            .iter()
            .fold(1u64, |acc, &l| acc.lcm(&(l as u64)))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) == i).collect()
    }

    pub fn is_derangement(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 != x)
    }

    /// `+1` for even permutations, `-1` for odd.
    pub fn sign(&self) -> i32 {
        let ct = self.cycle_type();
        let transpositions: usize = ct.0.iter().map(|l| l - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        (0..self.degree()).find(|&i| self.apply(i) != i)
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, n: usize) -> Perm {
        let mut img = self.img.clone();
        img.extend(self.degree() as u32..n as u32);
        Perm { img }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_in_s4() {
        let a = Perm::from_cycles(4, &[vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(4, &[vec![1, 2]]).unwrap();
        let c = a.compose(&b).unwrap();
        assert_eq!(c.images(), &[1, 2, 0, 3]);
        assert_eq!(c.to_string(), "(1,2,3)");
    }

    #[test]
    fn basic_invariants() {
        let id = Perm::identity(5);
        assert_eq!(id.cycle_type().0, vec![1; 5]);
        assert_eq!(id.order(), 1);
        assert_eq!(id.fixed_points().len(), 5);
        assert_eq!(id.to_string(), "()");
        let c5 = Perm::parse("(1,2,3,4,5)", 5).unwrap();
        assert_eq!(c5.order(), 5);
        assert!(c5.is_derangement());
        let v = Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(v.is_derangement());
        assert_eq!(v.order(), 2);
    }

    #[test]
    fn errors() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::parse("(1,5)", 4).is_err());
        assert!(Perm::parse("(1,2", 4).is_err());
        let a = Perm::identity(3);
        assert_eq!(
            a.compose(&Perm::identity(4)),
            Err(Error::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn parse_roundtrip() {
        let p = Perm::parse("(1,3)(2,4,5)", 6).unwrap();
        assert_eq!(Perm::parse(&p.to_string(), 6).unwrap(), p);
        assert_eq!(Perm::parse("(1 3) (2 4 5)", 6).unwrap(), p);
    }
}
