//! The polynomial algebras over Hom(G, Z2) and Hom(Z2, G).
//!
//! Both algebras have the same shape: Z2-linear combinations of monomials,
//! where a monomial is a multiset of nonzero vectors of GF(2)^n. A single
//! [`Polynomial`] type serves both, tagged with a [`Side`] so that character
//! and cocharacter data never mix.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, BitVec};

/// Which of the two dual vector spaces the degree-one factors live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// Hom(G, Z2): characters, written `r1, r2, ...`.
    Character,
    /// Hom(Z2, G): cocharacters, written `s1, s2, ...`.
    Cocharacter,
}

impl Side {
    pub fn dual(self) -> Side {
        match self {
            Side::Character => Side::Cocharacter,
            Side::Cocharacter => Side::Character,
        }
    }

    /// Variable prefix used by the text grammar.
    pub fn prefix(self) -> char {
        match self {
            Side::Character => 'r',
            Side::Cocharacter => 's',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Character => "character",
            Side::Cocharacter => "cocharacter",
        })
    }
}

/// A commutative monomial: a sorted multiset of nonzero packed vectors.
///
/// The empty monomial is the unit `1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    factors: Vec<u16>,
}

impl Monomial {
    pub fn one() -> Self {
        Self { factors: Vec::new() }
    }

    /// Build from arbitrary-order factor encodings. Zero factors are rejected.
    pub fn new(mut factors: Vec<u16>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::ZeroFactor);
        }
        factors.sort_unstable();
        Ok(Self { factors })
    }

    pub fn from_vectors(vs: &[BitVec]) -> Result<Self> {
        Self::new(vs.iter().map(|v| v.bits()).collect())
    }

    #[inline]
    pub fn factors(&self) -> &[u16] {
        &self.factors
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.windows(2).all(|w| w[0] != w[1])
    }

    pub fn contains_factor(&self, v: u16) -> bool {
        self.factors.binary_search(&v).is_ok()
    }

    /// True when the factors are `n` distinct vectors forming a basis of GF(2)^n.
    pub fn is_basis(&self, n: usize) -> bool {
        self.factors.len() == n && gf2::is_independent(&self.factors)
    }

    /// Multiset union.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.degree() + other.degree());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            if self.factors[i] <= other.factors[j] {
                factors.push(self.factors[i]);
                i += 1;
            } else {
                factors.push(other.factors[j]);
                j += 1;
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Monomial { factors }
    }

    /// Multiply by a single degree-one factor.
    pub fn with_factor(&self, v: u16) -> Result<Monomial> {
        if v == 0 {
            return Err(Error::ZeroFactor);
        }
        let pos = self.factors.partition_point(|&f| f <= v);
        let mut factors = self.factors.clone();
        factors.insert(pos, v);
        Ok(Monomial { factors })
    }

    /// The monomial with the factor at `pos` removed.
    pub fn without(&self, pos: usize) -> Monomial {
        let mut factors = self.factors.clone();
        factors.remove(pos);
        Monomial { factors }
    }

    /// Replace every factor by `sigma` applied to it.
    pub fn map(&self, sigma: &BitMatrix) -> Monomial {
        let mut factors: Vec<u16> = self.factors.iter().map(|&v| sigma.apply_word(v)).collect();
        factors.sort_unstable();
        Monomial { factors }
    }

    /// The dual monomial under the composition pairing.
    pub fn dual(&self, n: usize) -> Result<Monomial> {
        let mut factors = dual_basis(&self.factors, n)?;
        factors.sort_unstable();
        Ok(Monomial { factors })
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.factors.iter()).finish()
    }
}

/// Dual basis under the composition pairing, in matching order: the `j`-th
/// output pairs to 1 with the `j`-th input and to 0 with all others.
///
/// With the inputs as the rows of `T` this is the rows of `(T^-1)^T`.
pub fn dual_basis(basis: &[u16], n: usize) -> Result<Vec<u16>> {
    if basis.len() != n || basis.is_empty() {
        return Err(Error::NotABasis);
    }
    let t = BitMatrix::from_words(basis, n)?;
    let inv = t.invert().map_err(|_| Error::NotABasis)?;
    Ok(inv.transpose().words().to_vec())
}

/// A Z2-linear combination of monomials, all on one side.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    side: Side,
    dim: u8,
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero(side: Side, n: usize) -> Result<Self> {
        gf2::check_dim(n)?;
        Ok(Self { side, dim: n as u8, terms: BTreeSet::new() })
    }

    pub fn one(side: Side, n: usize) -> Result<Self> {
        let mut p = Self::zero(side, n)?;
        p.terms.insert(Monomial::one());
        Ok(p)
    }

    /// Sum of the given monomials, with Z2 cancellation of repeats.
    pub fn from_monomials<I>(side: Side, n: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut p = Self::zero(side, n)?;
        for m in monomials {
            p.check_monomial(&m)?;
            p.toggle(m);
        }
        Ok(p)
    }

    /// A single monomial given by factor encodings.
    pub fn monomial(side: Side, n: usize, factors: &[u16]) -> Result<Self> {
        Self::from_monomials(side, n, [Monomial::new(factors.to_vec())?])
    }

    /// Sum of the degree-one monomials given by encodings.
    pub fn linear(side: Side, n: usize, vs: &[u16]) -> Result<Self> {
        let ms = vs.iter().map(|&v| Monomial::new(alloc::vec![v])).collect::<Result<Vec<_>>>()?;
        Self::from_monomials(side, n, ms)
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        let limit = 1u32 << self.dim;
        match m.factors.iter().find(|&&v| v as u32 >= limit) {
            Some(&v) => Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: (16 - v.leading_zeros()) as usize,
            }),
            None => Ok(()),
        }
    }

    #[inline]
    pub(crate) fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// Add a monomial (toggling its coefficient).
    pub fn add_monomial(&mut self, m: Monomial) -> Result<()> {
        if m.factors.contains(&0) {
            return Err(Error::ZeroFactor);
        }
        self.check_monomial(&m)?;
        self.toggle(m);
        Ok(())
    }

    #[inline]
    pub fn side(&self) -> Side {
        self.side
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with coefficient 1.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Monomials in canonical (lexicographic) order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = &Monomial> + Clone {
        self.terms.iter()
    }

    /// Common degree of all monomials; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.iter().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.side != other.side {
            return Err(Error::SideMismatch { left: self.side, right: other.side });
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let terms = self.terms.symmetric_difference(&other.terms).cloned().collect();
        Ok(Polynomial { side: self.side, dim: self.dim, terms })
    }

    pub fn add_assign(&mut self, other: &Polynomial) -> Result<()> {
        self.check_compatible(other)?;
        for m in &other.terms {
            self.toggle(m.clone());
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Polynomial { side: self.side, dim: self.dim, terms: BTreeSet::new() };
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b));
            }
        }
        Ok(out)
    }

    /// Faithfulness: nonzero, homogeneous of degree n, and every monomial's
    /// factors form a basis.
    pub fn is_faithful(&self) -> bool {
        let n = self.dim();
        !self.is_zero() && self.terms.iter().all(|m| m.is_basis(n))
    }

    /// The dual polynomial, on the other side. Distinct monomials have
    /// distinct duals, so no cancellation occurs.
    pub fn dual(&self) -> Result<Polynomial> {
        if !self.is_faithful() {
            return Err(Error::NotFaithful);
        }
        let n = self.dim();
        let terms = self.terms.iter().map(|m| m.dual(n)).collect::<Result<BTreeSet<_>>>()?;
        debug_assert_eq!(terms.len(), self.terms.len());
        Ok(Polynomial { side: self.side.dual(), dim: self.dim, terms })
    }

    /// Replace each degree-one factor `v` by `sigma * v`.
    pub fn apply_automorphism(&self, sigma: &BitMatrix) -> Result<Polynomial> {
        if !sigma.is_square() || sigma.ncols() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: sigma.ncols() });
        }
        if sigma.rank() != self.dim() {
            return Err(Error::SingularMatrix);
        }
        let mut out = Polynomial { side: self.side, dim: self.dim, terms: BTreeSet::new() };
        for m in &self.terms {
            out.toggle(m.map(sigma));
        }
        Ok(out)
    }

    pub fn into_terms(self) -> BTreeSet<Monomial> {
        self.terms
    }
}

/// Writes one degree-one factor in grammar form: `s2` or `(s1+s3)`.
pub fn write_factor(f: &mut impl fmt::Write, side: Side, v: u16) -> fmt::Result {
    let prefix = side.prefix();
    if v.count_ones() == 1 {
        return write!(f, "{prefix}{}", v.trailing_zeros() + 1);
    }
    f.write_char('(')?;
    let mut first = true;
    for i in 0..16 {
        if v >> i & 1 == 1 {
            if !first {
                f.write_char('+')?;
            }
            write!(f, "{prefix}{}", i + 1)?;
            first = false;
        }
    }
    f.write_char(')')
}

/// Writes a monomial in grammar form; the unit is `1`.
pub fn write_monomial(f: &mut impl fmt::Write, side: Side, m: &Monomial) -> fmt::Result {
    if m.factors.is_empty() {
        return f.write_char('1');
    }
    for (i, &v) in m.factors.iter().enumerate() {
        if i > 0 {
            f.write_char('*')?;
        }
        write_factor(f, side, v)?;
    }
    Ok(())
}

/// Grammar form: `s1*s2 + (s1+s2)*s3`, or `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_monomial(f, self.side, m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}, n={}]({self})", self.side, self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    const R1: u16 = 0b001;
    const R2: u16 = 0b010;
    const R3: u16 = 0b100;

    fn chr(n: usize, monos: &[&[u16]]) -> Polynomial {
        Polynomial::from_monomials(
            Side::Character,
            n,
            monos.iter().map(|f| Monomial::new(f.to_vec()).unwrap()),
        )
        .unwrap()
    }

    fn cochr(n: usize, monos: &[&[u16]]) -> Polynomial {
        Polynomial::from_monomials(
            Side::Cocharacter,
            n,
            monos.iter().map(|f| Monomial::new(f.to_vec()).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn multiply_examples() {
        let s1 = cochr(3, &[&[R1]]);
        let s2_s3 = cochr(3, &[&[R2], &[R3]]);
        assert_eq!(s1.multiply(&s2_s3).unwrap(), cochr(3, &[&[R1, R2], &[R1, R3]]));
        let zero = Polynomial::zero(Side::Cocharacter, 3).unwrap();
        assert!(s1.multiply(&zero).unwrap().is_zero());
        let sum = cochr(3, &[&[R1], &[R2]]);
        assert_eq!(sum.multiply(&sum).unwrap(), cochr(3, &[&[R1, R1], &[R2, R2]]));
    }

    #[test]
    fn multiply_side_mismatch() {
        let a = chr(2, &[&[R1]]);
        let b = cochr(2, &[&[R1]]);
        assert!(matches!(a.multiply(&b), Err(Error::SideMismatch { .. })));
    }

    #[test]
    fn zero_factor_rejected() {
        assert_eq!(Monomial::new(vec![R1, 0]), Err(Error::ZeroFactor));
    }

    #[test]
    fn faithful_examples() {
        assert!(chr(3, &[&[R1, R2, R3]]).is_faithful());
        assert!(!chr(3, &[&[R1, R1, R2]]).is_faithful());
        assert!(!Polynomial::zero(Side::Character, 3).unwrap().is_faithful());
        // degree too low
        assert!(!chr(3, &[&[R1, R2]]).is_faithful());
    }

    #[test]
    fn dual_examples() {
        let std3 = chr(3, &[&[R1, R2, R3]]);
        assert_eq!(std3.dual().unwrap(), cochr(3, &[&[R1, R2, R3]]));
        // n = 2: r1 (r1+r2) -> (s1+s2) s2
        let m = Monomial::new(vec![0b01, 0b11]).unwrap();
        assert_eq!(m.dual(2).unwrap(), Monomial::new(vec![0b11, 0b10]).unwrap());
        assert_eq!(chr(3, &[&[R1, R1, R2]]).dual(), Err(Error::NotFaithful));
    }

    #[test]
    fn dual_basis_pairs_to_kronecker_delta() {
        let t = [0b011u16, 0b110, 0b111];
        let s = dual_basis(&t, 3).unwrap();
        for (j, &sj) in s.iter().enumerate() {
            for (i, &ti) in t.iter().enumerate() {
                assert_eq!((sj & ti).count_ones() % 2 == 1, i == j);
            }
        }
    }

    #[test]
    fn automorphism_examples() {
        let p = cochr(2, &[&[R1, R2], &[R1, 0b11]]);
        assert_eq!(p.apply_automorphism(&BitMatrix::identity(2).unwrap()).unwrap(), p);
        let swap = BitMatrix::from_words(&[R2, R1], 2).unwrap();
        let q = cochr(2, &[&[R1, R2]]);
        assert_eq!(q.apply_automorphism(&swap).unwrap(), q);
        let singular = BitMatrix::from_words(&[R1, R1], 2).unwrap();
        assert_eq!(q.apply_automorphism(&singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn display_grammar_form() {
        let p = cochr(3, &[&[R1, 0b011], &[R2, R3]]);
        assert_eq!(format!("{p}"), "s1*(s1+s2) + s2*s3");
        assert_eq!(format!("{}", Polynomial::zero(Side::Character, 2).unwrap()), "0");
        assert_eq!(format!("{}", Polynomial::one(Side::Character, 2).unwrap()), "1");
    }

    #[test]
    fn degree_and_homogeneity() {
        let mixed = cochr(3, &[&[R1], &[R1, R2]]);
        assert_eq!(mixed.degree(), None);
        assert!(!mixed.is_homogeneous());
        assert_eq!(cochr(3, &[&[R1, R2]]).degree(), Some(2));
    }
}
