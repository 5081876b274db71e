//! Cobordism spaces as GF(2) spans inside the space of basis monomials.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::algebra::{Monomial, Polynomial, Side};
use crate::diffop::{d, is_squarefree};
use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix};
use crate::polytope::{coloring_polynomial, enumerate_normalized_colorings, simplex_products_of_dimension};

/// Largest dimension for which the spaces are computed.
pub const MAX_SPACE_DIM: usize = 4;

fn check_space_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_SPACE_DIM {
        return Err(Error::DimensionTooLarge { dim: n, max: MAX_SPACE_DIM });
    }
    Ok(())
}

/// True iff `g` is zero, or faithful with `d(g*) = 0`.
pub fn is_cobordism_class(g: &Polynomial) -> bool {
    if g.is_zero() {
        return true;
    }
    match g.dual() {
        Ok(dual) => d(&dual).is_zero(),
        Err(_) => false,
    }
}

/// Degree-n cocharacter monomials whose factors form a basis, in canonical
/// (sorted) order.
#[derive(Clone, Debug)]
pub struct MonomialSpace {
    n: usize,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl MonomialSpace {
    pub fn new(n: usize) -> Result<Self> {
        check_space_dim(n)?;
        let monomials: Vec<Monomial> = gf2::enumerate_ordered_bases(n)?
            .filter(|b| b.words().windows(2).all(|w| w[0] < w[1]))
            .map(|b| Monomial::new(b.words().to_vec()).expect("basis vectors are nonzero"))
            .collect();
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Self { n, monomials, index })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinate row of a cocharacter polynomial of degree `n`.
    pub fn coordinates(&self, p: &Polynomial) -> Result<Row> {
        if p.side() != Side::Cocharacter {
            return Err(Error::SideMismatch { left: Side::Cocharacter, right: p.side() });
        }
        if p.dim() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: p.dim() });
        }
        let mut row = Row::zero(self.len());
        for m in p.terms() {
            if m.degree() != self.n {
                return Err(Error::WrongDegree { expected: self.n });
            }
            row.flip(self.index_of(m).ok_or(Error::NotInMonomialSpace)?);
        }
        Ok(row)
    }

    pub fn polynomial(&self, row: &Row) -> Polynomial {
        let monos = row.ones().map(|i| self.monomials[i].clone());
        Polynomial::from_monomials(Side::Cocharacter, self.n, monos).expect("dimension already validated")
    }
}

/// A packed row of GF(2) coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Row {
    len: usize,
    words: Vec<u64>,
}

impl Row {
    pub fn zero(len: usize) -> Self {
        Self { len, words: alloc::vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut r = Self::zero(len);
        r.flip(i);
        r
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "coordinate {i} out of range");
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &Row) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    i * 64 + b
                })
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Fully reduced row echelon basis of a subspace of GF(2)^width. The reduced
/// form is unique, so it does not depend on insertion order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpanBasis {
    width: usize,
    rows: Vec<Row>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn new(width: usize) -> Self {
        Self { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection onto the span along the pivots.
    pub fn reduce(&self, v: &Row) -> Row {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &Row) -> bool {
        self.reduce(v).is_zero()
    }

    /// Add `v` to the span; true if the dimension grew.
    pub fn insert(&mut self, v: &Row) -> bool {
        assert_eq!(v.len(), self.width, "row width mismatch");
        let r = self.reduce(v);
        let Some(p) = r.first_one() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn merge(&mut self, other: &SpanBasis) {
        for r in &other.rows {
            self.insert(r);
        }
    }

    /// Coordinates of `v` over the rows, or `NotInSpan`.
    pub fn decompose(&self, v: &Row) -> Result<Vec<bool>> {
        let coords: Vec<bool> = self.pivots.iter().map(|&p| v.get(p)).collect();
        let mut residual = v.clone();
        for (row, &c) in self.rows.iter().zip(&coords) {
            if c {
                residual.xor_assign(row);
            }
        }
        if residual.is_zero() {
            Ok(coords)
        } else {
            Err(Error::NotInSpan)
        }
    }

    pub fn is_subspace_of(&self, other: &SpanBasis) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// The closed-form generator of the cobordism span attached to an ordered
/// basis `s` of cocharacters.
///
/// * n = 2: `d(s1 s2 (s1+s2))`
/// * n = 3: `d(s1 s2 (s1+s2)) d(s3 (s1+s3))`
/// * n = 4: `d(s1 s2 (s1+s2)) d(s3 s4 (s3+s4+eps s1))`
pub fn generator(n: usize, s: &[u16], eps: bool) -> Result<Polynomial> {
    check_space_dim(n)?;
    if s.len() != n || !gf2::is_independent(s) {
        return Err(Error::NotABasis);
    }
    let dm = |factors: &[u16]| -> Result<Polynomial> {
        Ok(d(&Polynomial::monomial(Side::Cocharacter, n, factors)?))
    };
    match n {
        1 => Err(Error::DimensionMismatch { expected: 2, found: 1 }),
        2 => dm(&[s[0], s[1], s[0] ^ s[1]]),
        3 => dm(&[s[0], s[1], s[0] ^ s[1]])?.multiply(&dm(&[s[2], s[0] ^ s[2]])?),
        _ => {
            let e = if eps { s[0] } else { 0 };
            dm(&[s[0], s[1], s[0] ^ s[1]])?.multiply(&dm(&[s[2], s[3], s[2] ^ s[3] ^ e])?)
        }
    }
}

/// All distinct generators over every ordered basis (and both values of eps
/// when n = 4), in canonical order.
pub fn generator_family(n: usize) -> Result<Vec<Polynomial>> {
    check_space_dim(n)?;
    if n == 1 {
        return Ok(Vec::new());
    }
    let eps_values: &[bool] = if n == 4 { &[false, true] } else { &[false] };
    let mut out = BTreeSet::new();
    for s in gf2::enumerate_ordered_bases(n)? {
        for &eps in eps_values {
            out.insert(generator(n, s.words(), eps)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// How the span of realizable dual polynomials is computed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    /// Row-reduce the closed-form generator family.
    Generators,
    /// Span of coloring polynomials of colored products of simplices.
    Polytopes,
}

/// The computed space of dual polynomials of cobordism classes.
#[derive(Clone, Debug)]
pub struct CobordismSpace {
    space: MonomialSpace,
    basis: SpanBasis,
}

impl CobordismSpace {
    pub fn compute(n: usize, method: Method) -> Result<Self> {
        let space = MonomialSpace::new(n)?;
        let mut basis = SpanBasis::new(space.len());
        match method {
            Method::Generators => {
                for g in generator_family(n)? {
                    basis.insert(&space.coordinates(&g)?);
                }
            }
            Method::Polytopes => {
                for p in simplex_products_of_dimension(n) {
                    for lambda in enumerate_normalized_colorings(&p, n)? {
                        basis.insert(&space.coordinates(&coloring_polynomial(&p, &lambda)?)?);
                    }
                }
                close_under_automorphisms(&space, &mut basis)?;
            }
        }
        Ok(Self { space, basis })
    }

    pub fn from_parts(space: MonomialSpace, basis: SpanBasis) -> Result<Self> {
        if basis.width() != space.len() {
            return Err(Error::DimensionMismatch { expected: space.len(), found: basis.width() });
        }
        Ok(Self { space, basis })
    }

    pub fn n(&self) -> usize {
        self.space.dim()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn space(&self) -> &MonomialSpace {
        &self.space
    }

    pub fn basis(&self) -> &SpanBasis {
        &self.basis
    }

    pub fn basis_polynomials(&self) -> Vec<Polynomial> {
        self.basis.rows().iter().map(|r| self.space.polynomial(r)).collect()
    }

    pub fn contains(&self, gstar: &Polynomial) -> Result<bool> {
        Ok(self.basis.contains(&self.space.coordinates(gstar)?))
    }

    /// Coordinates of `gstar` over [`Self::basis_polynomials`].
    pub fn decompose(&self, gstar: &Polynomial) -> Result<Vec<bool>> {
        if !gstar.is_zero() && gstar.degree() != Some(self.n()) {
            return Err(Error::WrongDegree { expected: self.n() });
        }
        self.basis.decompose(&self.space.coordinates(gstar)?)
    }

    /// Whether `sigma` maps the span into itself.
    pub fn is_stable_under(&self, sigma: &BitMatrix) -> Result<bool> {
        for p in self.basis_polynomials() {
            if !self.contains(&p.apply_automorphism(sigma)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_span(&self, other: &CobordismSpace) -> bool {
        self.n() == other.n() && self.basis == other.basis
    }
}

/// Elementary transvections `e_i -> e_i + e_j`; they generate GL(n, 2).
pub fn transvections(n: usize) -> Vec<BitMatrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let rows: Vec<u16> =
                    (0..n).map(|k| if k == i { (1 << i) | (1 << j) } else { 1 << k }).collect();
                out.push(BitMatrix::from_words(&rows, n).expect("valid size"));
            }
        }
    }
    out
}

/// Grow `basis` until every transvection maps it into itself.
pub fn close_under_automorphisms(space: &MonomialSpace, basis: &mut SpanBasis) -> Result<()> {
    let gens = transvections(space.dim());
    loop {
        let mut grew = false;
        for p in basis.rows().iter().map(|r| space.polynomial(r)).collect::<Vec<_>>() {
            for sigma in &gens {
                grew |= basis.insert(&space.coordinates(&p.apply_automorphism(sigma)?)?);
            }
        }
        if !grew {
            return Ok(());
        }
    }
}

/// All nonzero faithful character polynomials of dimension `n <= 2` that are
/// cobordism classes, found by trying every subset of basis monomials.
pub fn brute_force_classes(n: usize) -> Result<Vec<Polynomial>> {
    if n == 0 || n > 2 {
        return Err(Error::DimensionTooLarge { dim: n, max: 2 });
    }
    let monos = MonomialSpace::new(n)?.monomials().to_vec();
    let mut out = Vec::new();
    for mask in 1u32..1 << monos.len() {
        let chosen = monos.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, m)| m.clone());
        let g = Polynomial::from_monomials(Side::Character, n, chosen)?;
        if is_cobordism_class(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

/// `x_k` of the standard legend: the vector whose coordinates are the binary
/// digits of `k`, least significant digit first.
pub fn legend(n: usize, k: usize) -> Option<u16> {
    (k >= 1 && k < 1 << n).then_some(k as u16)
}

/// A table row `(a; b; c; d; e[; l])` meaning `d(x_a x_b x_c) d(x_d x_e [x_l])`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableRow {
    pub indices: Vec<usize>,
}

impl TableRow {
    pub fn new(indices: Vec<usize>) -> Self {
        Self { indices }
    }

    /// Expand the row; `row` is used only for error reporting.
    pub fn polynomial(&self, n: usize, row: usize) -> Result<Polynomial> {
        if self.indices.len() != n + 2 {
            return Err(Error::DimensionMismatch { expected: n + 2, found: self.indices.len() });
        }
        let xs = self
            .indices
            .iter()
            .map(|&k| legend(n, k).ok_or(Error::TableIndex { row, index: k }))
            .collect::<Result<Vec<_>>>()?;
        let first = d(&Polynomial::monomial(Side::Cocharacter, n, &xs[..3])?);
        let second = d(&Polynomial::monomial(Side::Cocharacter, n, &xs[3..])?);
        first.multiply(&second)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableReport {
    pub count: usize,
    pub independent: bool,
    pub span_dim: usize,
    /// The rows span exactly the computed space.
    pub matches_dim_vn: bool,
    /// First row that lies in the span of the rows before it.
    pub first_dependency: Option<usize>,
    /// Every row lies in the kernel of `d`.
    pub all_cycles: bool,
    /// Every monomial of every row has a basis as its factors.
    pub all_faithful: bool,
}

pub fn verify_table(n: usize, rows: &[TableRow], target: &CobordismSpace) -> Result<TableReport> {
    if target.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: target.n() });
    }
    let space = target.space();
    let mut span = SpanBasis::new(space.len());
    let mut first_dependency = None;
    let mut all_cycles = true;
    let mut all_faithful = true;
    for (i, row) in rows.iter().enumerate() {
        let p = row.polynomial(n, i)?;
        all_cycles &= d(&p).is_zero();
        all_faithful &= p.terms().all(|m| m.is_basis(n));
        let coords = match space.coordinates(&p) {
            Ok(c) => c,
            Err(Error::NotInMonomialSpace) => {
                all_faithful = false;
                continue;
            }
            Err(e) => return Err(e),
        };
        if !span.insert(&coords) && first_dependency.is_none() {
            first_dependency = Some(i);
        }
    }
    Ok(TableReport {
        count: rows.len(),
        independent: first_dependency.is_none() && span.dim() == rows.len(),
        span_dim: span.dim(),
        matches_dim_vn: span == target.basis,
        first_dependency,
        all_cycles,
        all_faithful,
    })
}

/// A subspace `V` of cocharacters such that the factors of every monomial of
/// `h` stay independent modulo `V`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessSubspace {
    pub n: usize,
    /// Canonical reduced basis of `V`.
    pub basis: Vec<u16>,
}

impl WitnessSubspace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn separates(&self, h: &Polynomial) -> bool {
        separates(&self.basis, h, self.n)
    }
}

fn separates(v: &[u16], h: &Polynomial, n: usize) -> bool {
    h.terms().all(|m| {
        let mut words = v.to_vec();
        words.extend_from_slice(m.factors());
        gf2::rank_of_words(&words) == n
    })
}

/// First subspace of dimension `n - deg h`, in canonical order, witnessing
/// that the squarefree cycle `h` is reducible modulo it.
pub fn find_modular_witness(h: &Polynomial, n: usize) -> Result<Option<WitnessSubspace>> {
    if h.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: h.dim() });
    }
    let max = n.saturating_sub(2);
    let degree = h.degree().unwrap_or(0);
    if !h.is_homogeneous() || degree == 0 || degree > max {
        return Err(Error::DegreeOutOfRange { degree, min: 1, max });
    }
    if !is_squarefree(h) {
        return Err(Error::NotSquarefree);
    }
    if !d(h).is_zero() {
        return Err(Error::NotACycle);
    }
    Ok(gf2::subspaces(n, n - degree)?
        .into_iter()
        .find(|v| separates(v, h, n))
        .map(|basis| WitnessSubspace { n, basis }))
}
