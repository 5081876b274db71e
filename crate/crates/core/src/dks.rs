//! Integrality of the localization sum `Σ_i f(χ_i) / χ_i` over GF(2).
//!
//! Polynomials live in `GF(2)[x_1, ..., x_n]` with `n <= 8`. A monomial is
//! packed into a `u64`, eight bits of exponent per variable.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Monomial, Polynomial, Side};
use crate::error::{Error, Result};

/// Largest number of variables.
pub const MAX_VARS: usize = 8;
/// Largest exponent of a single variable.
pub const MAX_EXPONENT: u32 = 255;

fn check_vars(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::DimensionTooLarge { dim: n, max: MAX_VARS });
    }
    Ok(())
}

fn exponent(key: u64, i: usize) -> u32 {
    (key >> (8 * i) & 0xff) as u32
}

fn total_degree(key: u64, n: usize) -> u32 {
    (0..n).map(|i| exponent(key, i)).sum()
}

fn add_keys(a: u64, b: u64, n: usize) -> u64 {
    let mut out = 0;
    for i in 0..n {
        let e = exponent(a, i) + exponent(b, i);
        assert!(e <= MAX_EXPONENT, "exponent of x{} exceeds {MAX_EXPONENT}", i + 1);
        out |= (e as u64) << (8 * i);
    }
    out
}

/// A polynomial over GF(2) in `n` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n: u8,
    // sorted, no repeats
    terms: Vec<u64>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self { n: n as u8, terms: Vec::new() })
    }

    pub fn one(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self { n: n as u8, terms: alloc::vec![0] })
    }

    /// The variable `x_{i+1}`.
    pub fn variable(n: usize, i: usize) -> Result<Self> {
        check_vars(n)?;
        if i >= n {
            return Err(Error::DimensionMismatch { expected: n, found: i + 1 });
        }
        Ok(Self { n: n as u8, terms: alloc::vec![1u64 << (8 * i)] })
    }

    /// Sum of monomials given by exponent vectors; repeats cancel.
    pub fn from_exponents<I, E>(n: usize, exps: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        check_vars(n)?;
        let mut keys = Vec::new();
        for e in exps {
            let e = e.as_ref();
            if e.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: e.len() });
            }
            let mut key = 0u64;
            for (i, &x) in e.iter().enumerate() {
                if x > MAX_EXPONENT {
                    return Err(Error::DegreeOutOfRange { degree: x as usize, min: 0, max: MAX_EXPONENT as usize });
                }
                key |= (x as u64) << (8 * i);
            }
            keys.push(key);
        }
        Ok(Self::from_keys(n, keys))
    }

    fn from_keys(n: usize, mut keys: Vec<u64>) -> Self {
        keys.sort_unstable();
        let mut terms: Vec<u64> = Vec::with_capacity(keys.len());
        for k in keys {
            if terms.last() == Some(&k) {
                terms.pop();
            } else {
                terms.push(k);
            }
        }
        Self { n: n as u8, terms }
    }

    pub fn nvars(&self) -> usize {
        self.n as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|&k| total_degree(k, self.nvars())).max()
    }

    /// Exponent vectors in graded lexicographic order, highest first.
    pub fn exponents(&self) -> Vec<Vec<u32>> {
        let n = self.nvars();
        let mut out: Vec<Vec<u32>> =
            self.terms.iter().map(|&k| (0..n).map(|i| exponent(k, i)).collect()).collect();
        out.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        out
    }

    fn check_same(&self, other: &MultiPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: other.nvars() });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(MultiPoly { n: self.n, terms: out })
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let n = self.nvars();
        let keys = self.terms.iter().flat_map(|&a| other.terms.iter().map(move |&b| add_keys(a, b, n))).collect();
        Ok(Self::from_keys(n, keys))
    }

    pub fn pow(&self, e: u32) -> Result<MultiPoly> {
        let mut out = MultiPoly::one(self.nvars())?;
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn mul_linear(&self, l: LinearForm) -> Result<MultiPoly> {
        self.mul(&l.to_poly())
    }

    /// Substitute `x_k := Σ_{i != k} l_i x_i` where `x_k` is the last
    /// variable of `l`; the result vanishes iff `l` divides `self`.
    pub fn restrict_to_hyperplane(&self, l: LinearForm) -> Result<MultiPoly> {
        if l.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: l.nvars() });
        }
        let k = l.lead();
        let rest = LinearForm { n: l.n, bits: l.bits & !(1 << k) };
        let r = rest.to_poly();
        let mut out = MultiPoly::zero(self.nvars())?;
        for &key in &self.terms {
            let e = exponent(key, k);
            let base = MultiPoly { n: self.n, terms: alloc::vec![key & !(0xffu64 << (8 * k))] };
            out = out.add(&base.mul(&r.pow(e)?)?)?;
        }
        Ok(out)
    }

    /// Exact quotient by `l`, or `None` when `l` does not divide `self`.
    pub fn divide_linear(&self, l: LinearForm) -> Result<Option<MultiPoly>> {
        if l.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: l.nvars() });
        }
        let n = self.nvars();
        let k = l.lead();
        let r = LinearForm { n: l.n, bits: l.bits & !(1 << k) }.to_poly();
        // coefficients c_j of x_k^j
        let top = self.terms.iter().map(|&t| exponent(t, k)).max().unwrap_or(0) as usize;
        let mut coeffs: Vec<Vec<u64>> = alloc::vec![Vec::new(); top + 1];
        let mask = !(0xffu64 << (8 * k));
        for &t in &self.terms {
            coeffs[exponent(t, k) as usize].push(t & mask);
        }
        let coeffs: Vec<MultiPoly> = coeffs.into_iter().map(|c| Self::from_keys(n, c)).collect();
        if top == 0 {
            return Ok(self.is_zero().then(|| self.clone()));
        }
        // Horner: q_{m-1} = c_m, q_{j-1} = c_j + r q_j, remainder c_0 + r q_0
        let mut q: Vec<MultiPoly> = alloc::vec![MultiPoly::zero(n)?; top];
        q[top - 1] = coeffs[top].clone();
        for j in (1..top).rev() {
            q[j - 1] = coeffs[j].add(&r.mul(&q[j])?)?;
        }
        let remainder = coeffs[0].add(&r.mul(&q[0])?)?;
        if !remainder.is_zero() {
            return Ok(None);
        }
        let mut keys = Vec::new();
        for (j, qj) in q.iter().enumerate() {
            keys.extend(qj.terms.iter().map(|&t| t | (j as u64) << (8 * k)));
        }
        Ok(Some(Self::from_keys(n, keys)))
    }

    pub fn divides_by(&self, l: LinearForm) -> Result<bool> {
        Ok(self.divide_linear(l)?.is_some())
    }

    /// Permute variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Result<MultiPoly> {
        let n = self.nvars();
        if perm.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: perm.len() });
        }
        let keys = self
            .terms
            .iter()
            .map(|&t| (0..n).fold(0u64, |acc, i| acc | (exponent(t, i) as u64) << (8 * perm[i])))
            .collect();
        Ok(Self::from_keys(n, keys))
    }

    /// Substitute the polynomial `values[i]` for `x_{i+1}`.
    pub fn substitute(&self, values: &[MultiPoly]) -> Result<MultiPoly> {
        let n = self.nvars();
        if values.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: values.len() });
        }
        let m = values.first().map_or(n, MultiPoly::nvars);
        let mut powers: Vec<Vec<MultiPoly>> = values.iter().map(|_| alloc::vec![MultiPoly::one(m).unwrap()]).collect();
        let mut out = MultiPoly::zero(m)?;
        for &t in &self.terms {
            let mut term = MultiPoly::one(m)?;
            for (i, v) in values.iter().enumerate() {
                let e = exponent(t, i) as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(v)?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (t, e) in self.exponents().iter().enumerate() {
            if t > 0 {
                f.write_str(" + ")?;
            }
            let mut first = true;
            for (i, &x) in e.iter().enumerate().filter(|(_, &x)| x > 0) {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
            if first {
                f.write_str("1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

/// A nonzero linear form `Σ bits_i x_i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LinearForm {
    n: u8,
    bits: u16,
}

impl LinearForm {
    pub fn new(bits: u16, n: usize) -> Result<Self> {
        check_vars(n)?;
        if bits == 0 {
            return Err(Error::ZeroFactor);
        }
        if bits as u32 >= 1u32 << n {
            return Err(Error::DimensionMismatch { expected: n, found: (16 - bits.leading_zeros()) as usize });
        }
        Ok(Self { n: n as u8, bits })
    }

    pub fn bits(self) -> u16 {
        self.bits
    }

    pub fn nvars(self) -> usize {
        self.n as usize
    }

    /// Index of the last variable with coefficient 1.
    pub fn lead(self) -> usize {
        15 - self.bits.leading_zeros() as usize
    }

    pub fn to_poly(self) -> MultiPoly {
        let keys = (0..self.nvars()).filter(|&i| self.bits >> i & 1 == 1).map(|i| 1u64 << (8 * i)).collect();
        MultiPoly::from_keys(self.nvars(), keys)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..self.nvars()).filter(|&i| self.bits >> i & 1 == 1) {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
        }
        Ok(())
    }
}

/// The equivariant Euler class of a fixed point: its factors as linear forms.
pub fn euler_class(m: &Monomial, n: usize) -> Result<Vec<LinearForm>> {
    m.factors().iter().map(|&v| LinearForm::new(v, n)).collect()
}

/// A polynomial invariant under every permutation of its variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricFunction {
    poly: MultiPoly,
}

impl SymmetricFunction {
    /// Checked constructor: adjacent transpositions generate all permutations.
    pub fn new(poly: MultiPoly) -> Result<Self> {
        let n = poly.nvars();
        for i in 0..n.saturating_sub(1) {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(i, i + 1);
            if poly.permute(&perm)? != poly {
                return Err(Error::NotSymmetric);
            }
        }
        Ok(Self { poly })
    }

    pub fn one(n: usize) -> Result<Self> {
        Ok(Self { poly: MultiPoly::one(n)? })
    }

    pub fn elementary(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Ok(Self { poly: MultiPoly::zero(n)? });
        }
        Self::monomial(n, &alloc::vec![1; k])
    }

    /// The monomial symmetric function `m_mu`: the sum of all distinct
    /// monomials whose exponents rearrange `mu`.
    pub fn monomial(n: usize, mu: &[u32]) -> Result<Self> {
        check_vars(n)?;
        if mu.len() > n || mu.contains(&0) || mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        let mut e: Vec<u32> = mu.to_vec();
        e.resize(n, 0);
        e.sort_unstable();
        let mut exps = Vec::new();
        loop {
            exps.push(e.clone());
            if !next_permutation(&mut e) {
                break;
            }
        }
        let poly = MultiPoly::from_exponents(n, exps)?;
        Self::new(poly)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    /// `f(l_1, ..., l_n)` for linear forms `l_i`.
    pub fn evaluate(&self, forms: &[LinearForm]) -> Result<MultiPoly> {
        let values: Vec<MultiPoly> = forms.iter().map(|l| l.to_poly()).collect();
        self.poly.substitute(&values)
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Partitions with at most `max_parts` parts and size at most `max_size`,
/// by size and then in reverse lexicographic order.
pub fn partitions(max_size: u32, max_parts: usize) -> Vec<Vec<u32>> {
    fn walk(rest: u32, max: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            walk(rest - k, k, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in 0..=max_size {
        walk(size, size, max_parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Outcome of a localization sum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LocalizationSum {
    Polynomial(MultiPoly),
    /// The sum has a pole along `witness`.
    NotPolynomial { witness: LinearForm },
}

impl LocalizationSum {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, LocalizationSum::Polynomial(_))
    }
}

/// `Σ_i f(χ_i) / χ_i` over the monomials of a faithful character polynomial.
///
/// The sum is brought over the least common multiple `L` of the `χ_i`; since
/// each `χ_i` is a product of distinct linear forms, `L` is the product of the
/// distinct forms that occur, and the sum is polynomial iff each of them
/// divides the numerator.
pub fn localization_sum(g: &Polynomial, f: &SymmetricFunction) -> Result<LocalizationSum> {
    if g.side() != Side::Character {
        return Err(Error::SideMismatch { left: Side::Character, right: g.side() });
    }
    if !g.is_faithful() {
        return Err(Error::NotFaithful);
    }
    let n = g.dim();
    check_vars(n)?;
    if f.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.nvars() });
    }
    let mut occurring = [false; 1 << MAX_VARS];
    for m in g.terms() {
        for &v in m.factors() {
            occurring[v as usize] = true;
        }
    }
    let forms: Vec<LinearForm> = (1..1usize << n)
        .filter(|&v| occurring[v])
        .map(|v| LinearForm::new(v as u16, n))
        .collect::<Result<_>>()?;
    let mut numerator = MultiPoly::zero(n)?;
    for m in g.terms() {
        let chi = euler_class(m, n)?;
        let mut term = f.evaluate(&chi)?;
        for l in forms.iter().filter(|l| !m.contains_factor(l.bits())) {
            term = term.mul_linear(*l)?;
        }
        numerator = numerator.add(&term)?;
    }
    for &l in &forms {
        match numerator.divide_linear(l)? {
            Some(q) => numerator = q,
            None => return Ok(LocalizationSum::NotPolynomial { witness: l }),
        }
    }
    Ok(LocalizationSum::Polynomial(numerator))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeResult {
    pub mu: Vec<u32>,
    pub polynomial: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DksReport {
    pub degree_checked: u32,
    pub results: Vec<DegreeResult>,
    /// Some `m_mu` gave a non-polynomial sum, so `g` is not a class.
    pub certified_nonmember: bool,
}

/// Run [`localization_sum`] for every `m_mu` with `|mu| <= max_degree`.
/// Passing is only evidence; a single failure is a certificate.
pub fn check_up_to_degree(g: &Polynomial, max_degree: u32) -> Result<DksReport> {
    let n = g.dim();
    if !g.is_faithful() {
        return Err(Error::NotFaithful);
    }
    let mut results = Vec::new();
    for mu in partitions(max_degree, n) {
        let f = SymmetricFunction::monomial(n, &mu)?;
        let polynomial = localization_sum(g, &f)?.is_polynomial();
        results.push(DegreeResult { mu, polynomial });
    }
    let certified_nonmember = results.iter().any(|r| !r.polynomial);
    Ok(DksReport { degree_checked: max_degree, results, certified_nonmember })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn chr(n: usize, monos: &[&[u16]]) -> Polynomial {
        Polynomial::from_monomials(
            Side::Character,
            n,
            monos.iter().map(|f| Monomial::new(f.to_vec()).unwrap()),
        )
        .unwrap()
    }

    fn lf(bits: u16, n: usize) -> LinearForm {
        LinearForm::new(bits, n).unwrap()
    }

    #[test]
    fn euler_class_examples() {
        let m = Monomial::new(vec![1, 3]).unwrap();
        assert_eq!(euler_class(&m, 2).unwrap(), vec![lf(1, 2), lf(3, 2)]);
        let m = Monomial::new(vec![1, 4, 6]).unwrap();
        let forms: Vec<_> = euler_class(&m, 3).unwrap().iter().map(|l| l.to_string()).collect();
        assert_eq!(forms, vec!["x1", "x3", "x2+x3"]);
    }

    #[test]
    fn display_is_graded_lex() {
        let p = MultiPoly::from_exponents(2, [[0, 0], [1, 0], [2, 1], [0, 3]]).unwrap();
        assert_eq!(p.to_string(), "x1^2*x2 + x2^3 + x1 + 1");
    }

    #[test]
    fn division_examples() {
        // (x1 + x2)^2 = x1^2 + x2^2
        let p = MultiPoly::from_exponents(2, [[2, 0], [0, 2]]).unwrap();
        let q = p.divide_linear(lf(3, 2)).unwrap().unwrap();
        assert_eq!(q, lf(3, 2).to_poly());
        assert_eq!(p.divide_linear(lf(1, 2)).unwrap(), None);
        assert!(MultiPoly::zero(2).unwrap().divides_by(lf(1, 2)).unwrap());
        assert!(!MultiPoly::one(2).unwrap().divides_by(lf(1, 2)).unwrap());
    }

    #[test]
    fn symmetric_constructors() {
        let e2 = SymmetricFunction::elementary(3, 2).unwrap();
        assert_eq!(e2.poly().len(), 3);
        let m21 = SymmetricFunction::monomial(3, &[2, 1]).unwrap();
        assert_eq!(m21.poly().len(), 6);
        assert_eq!(SymmetricFunction::monomial(2, &[1, 2]), Err(Error::InvalidPartition));
        let x1 = MultiPoly::variable(2, 0).unwrap();
        assert_eq!(SymmetricFunction::new(x1), Err(Error::NotSymmetric));
    }

    #[test]
    fn partition_listing() {
        let ps = partitions(3, 2);
        assert_eq!(ps, vec![vec![], vec![1], vec![2], vec![1, 1], vec![3], vec![2, 1]]);
    }

    #[test]
    fn localization_examples() {
        let g = chr(2, &[&[1, 2], &[1, 3], &[2, 3]]);
        let one = SymmetricFunction::one(2).unwrap();
        let e1 = SymmetricFunction::elementary(2, 1).unwrap();
        let zero = MultiPoly::zero(2).unwrap();
        assert_eq!(localization_sum(&g, &one).unwrap(), LocalizationSum::Polynomial(zero.clone()));
        assert_eq!(localization_sum(&g, &e1).unwrap(), LocalizationSum::Polynomial(zero));
        let single = chr(2, &[&[1, 2]]);
        assert!(!localization_sum(&single, &one).unwrap().is_polynomial());
        assert_eq!(localization_sum(&chr(2, &[&[1, 1]]), &one), Err(Error::NotFaithful));
    }

    #[test]
    fn degree_report() {
        let single = chr(2, &[&[1, 2]]);
        let r = check_up_to_degree(&single, 0).unwrap();
        assert_eq!(r.results, vec![DegreeResult { mu: vec![], polynomial: false }]);
        assert!(r.certified_nonmember);
    }
}
