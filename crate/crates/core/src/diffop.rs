//! The deletion differential `d` and its primitives.
//!
//! `d(s1...si) = sum_j s1...^sj...si`, `d(s) = 1`, `d(1) = 0`. The same rule
//! applied on the character side gives the mirror operator `d'`; both are
//! served by [`d`], which keeps the side of its input.

use crate::algebra::{Monomial, Polynomial};
use crate::error::{Error, Result};

/// Apply the differential. Repeated factors are expanded positionally and
/// cancel in pairs mod 2.
pub fn d(p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(p.side(), p.dim()).expect("dimension already validated");
    for m in p.terms() {
        for j in 0..m.degree() {
            out.toggle(m.without(j));
        }
    }
    out
}

/// Every monomial is a product of distinct factors.
pub fn is_squarefree(p: &Polynomial) -> bool {
    p.terms().all(Monomial::is_squarefree)
}

/// A squarefree `H` with `d(H) = h` for a squarefree cycle `h`.
///
/// Uses `H = s * h1` where `s` is the smallest nonzero vector, preferring one
/// that occurs in no monomial of `h`, and `h1` is the part of `h` whose
/// monomials avoid `s`.
pub fn find_primitive(h: &Polynomial) -> Result<Polynomial> {
    if !is_squarefree(h) {
        return Err(Error::NotSquarefree);
    }
    if !d(h).is_zero() {
        return Err(Error::NotACycle);
    }
    let n = h.dim();
    let mut used = alloc::vec![false; 1 << n];
    for m in h.terms() {
        for &v in m.factors() {
            used[v as usize] = true;
        }
    }
    let s = (1..used.len()).find(|&v| !used[v]).unwrap_or(1) as u16;
    primitive_with(h, s)
}

/// `s * h1` for an explicit choice of `s`; the general branch of
/// [`find_primitive`] when `s` does occur in `h`.
pub fn primitive_with(h: &Polynomial, s: u16) -> Result<Polynomial> {
    if s == 0 || s as u32 >= 1u32 << h.dim() {
        return Err(Error::ZeroFactor);
    }
    let mut out = Polynomial::zero(h.side(), h.dim())?;
    for m in h.terms().filter(|m| !m.contains_factor(s)) {
        out.toggle(m.with_factor(s)?);
    }
    Ok(out)
}
