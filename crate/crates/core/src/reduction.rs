//! Expansion checks showing that in dimension 4 the classes of colored
//! `Δ^4` and `Δ^3 × Δ^1` reduce to sums of `Δ^2 × Δ^2` generators.
//!
//! Everything is written over an ordered basis `s = (s1, s2, s3, s4)`; the
//! fixed identities use the standard basis.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::algebra::{Monomial, Polynomial, Side};
use crate::cobordism::generator;
use crate::diffop::d;
use crate::error::Result;
use crate::gf2;

const N: usize = 4;
const STD: [u16; 4] = [1, 2, 4, 8];

fn poly(monos: &[&[u16]]) -> Result<Polynomial> {
    let monos = monos.iter().map(|f| Monomial::new(f.to_vec())).collect::<Result<Vec<_>>>()?;
    Polynomial::from_monomials(Side::Cocharacter, N, monos)
}

fn dm(factors: &[u16]) -> Result<Polynomial> {
    Ok(d(&poly(&[factors])?))
}

fn dd(first: &[u16], second: &[u16]) -> Result<Polynomial> {
    dm(first)?.multiply(&dm(second)?)
}

/// Coloring polynomial of a colored `Δ^4`.
pub fn simplex_class(s: &[u16; 4]) -> Result<Polynomial> {
    let [s1, s2, s3, s4] = *s;
    dm(&[s1, s2, s3, s4, s1 ^ s2 ^ s3 ^ s4])
}

/// Coloring polynomial of a colored `Δ^3 × Δ^1`, with parameter `a`.
pub fn prism_class(s: &[u16; 4], a: bool) -> Result<Polynomial> {
    let [s1, s2, s3, s4] = *s;
    let t = s1 ^ s2 ^ s3;
    let a2 = if a { s2 } else { 0 };
    Ok(d(&poly(&[&[s1, s2, s3, s4, t], &[s1, s2, s3, t, s4 ^ s1 ^ a2]])?))
}

/// Coloring polynomial of a colored `Δ^2 × Δ^2`.
pub fn product_class(s: &[u16; 4], eps: bool) -> Result<Polynomial> {
    generator(N, s, eps)
}

/// Named pieces of the two decompositions.
#[derive(Clone, Debug)]
pub struct Pieces {
    pub simplex_rest: Polynomial,
    pub simplex_product: Polynomial,
    /// Product pieces shared by both values of `a`, per `a`.
    pub prism_common: [[Polynomial; 2]; 2],
    /// Extra product pieces for `a = 1`.
    pub prism_a1: [Polynomial; 2],
    /// Extra product pieces for `a = 0`.
    pub prism_a0: [Polynomial; 4],
}

pub fn pieces() -> Result<Pieces> {
    let [s1, s2, s3, s4] = STD;
    let t4 = s1 ^ s2 ^ s3 ^ s4;
    let t3 = s1 ^ s2 ^ s3;
    let simplex_rest = d(&poly(&[&[s1, s1 ^ s2, s3, s4, t4], &[s2, s1 ^ s2, s3, s4, t4]])?);
    let simplex_product = dd(&[s1, s2, s1 ^ s2], &[s3, s4, t4])?;
    let common = |a: bool| -> Result<[Polynomial; 2]> {
        let a2 = if a { s2 } else { 0 };
        Ok([
            dd(&[s2, s3, s2 ^ s3], &[s1, s4, s1 ^ s4 ^ a2])?,
            dd(&[s2, s3, s2 ^ s3], &[s4, t3, s4 ^ t3 ^ a2 ^ s2 ^ s3])?,
        ])
    };
    let left = [s1, s2 ^ s3, t3];
    Ok(Pieces {
        simplex_rest,
        simplex_product,
        prism_common: [common(false)?, common(true)?],
        prism_a1: [dd(&left, &[s3, s4, s3 ^ s4 ^ t3])?, dd(&left, &[s2, s4, s2 ^ s4 ^ s1])?],
        prism_a0: [
            dd(&left, &[s3, s4, s3 ^ s4])?,
            dd(&left, &[s2, s4, s2 ^ s4 ^ s2 ^ s3])?,
            dd(&left, &[s2, s1 ^ s4, s2 ^ s1 ^ s4 ^ t3])?,
            dd(&left, &[s3, s1 ^ s4, s3 ^ s1 ^ s4 ^ s1])?,
        ],
    })
}

fn sum(ps: &[&Polynomial]) -> Result<Polynomial> {
    let mut out = Polynomial::zero(Side::Cocharacter, N)?;
    for p in ps {
        out.add_assign(p)?;
    }
    Ok(out)
}

fn orbit(f: impl Fn(&[u16; 4]) -> Result<Polynomial>) -> Result<BTreeSet<Polynomial>> {
    let mut out = BTreeSet::new();
    for b in gf2::enumerate_ordered_bases(N)? {
        let s: [u16; 4] = b.words().try_into().expect("four rows");
        out.insert(f(&s)?);
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionReport {
    /// Simplex class equals the sum of its two pieces.
    pub simplex_identity: bool,
    /// Prism class equals the sum of its pieces, for `a = 0` and `a = 1`.
    pub prism_identity: [bool; 2],
    /// The non-product simplex piece is itself a prism class.
    pub simplex_rest_is_prism: bool,
    /// Every product piece is a `Δ^2 × Δ^2` class.
    pub pieces_are_products: bool,
}

impl ReductionReport {
    pub fn holds(&self) -> bool {
        self.simplex_identity
            && self.prism_identity.iter().all(|&b| b)
            && self.simplex_rest_is_prism
            && self.pieces_are_products
    }
}

pub fn check() -> Result<ReductionReport> {
    let p = pieces()?;
    let simplex_identity = simplex_class(&STD)? == sum(&[&p.simplex_rest, &p.simplex_product])?;
    let prism0 = sum(&[
        &p.prism_common[0][0],
        &p.prism_common[0][1],
        &p.prism_a0[0],
        &p.prism_a0[1],
        &p.prism_a0[2],
        &p.prism_a0[3],
    ])?;
    let prism1 = sum(&[&p.prism_common[1][0], &p.prism_common[1][1], &p.prism_a1[0], &p.prism_a1[1]])?;
    let prism_identity = [prism_class(&STD, false)? == prism0, prism_class(&STD, true)? == prism1];

    let mut prisms = orbit(|s| prism_class(s, false))?;
    prisms.append(&mut orbit(|s| prism_class(s, true))?);
    let mut products = orbit(|s| product_class(s, false))?;
    products.append(&mut orbit(|s| product_class(s, true))?);
    let product_pieces = core::iter::once(&p.simplex_product)
        .chain(p.prism_common.iter().flatten())
        .chain(&p.prism_a1)
        .chain(&p.prism_a0);
    let pieces_are_products = product_pieces.into_iter().all(|q| products.contains(q));

    Ok(ReductionReport {
        simplex_identity,
        prism_identity,
        simplex_rest_is_prism: prisms.contains(&p.simplex_rest),
        pieces_are_products,
    })
}
