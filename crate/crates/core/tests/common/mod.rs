#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twotorus_core::{BitMatrix, Monomial, Polynomial, Side};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn poly(side: Side, n: usize, monos: &[&[u16]]) -> Polynomial {
    Polynomial::from_monomials(side, n, monos.iter().map(|f| Monomial::new(f.to_vec()).unwrap()))
        .unwrap()
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> u16 {
    rng.random_range(1..1u32 << n) as u16
}

pub fn random_monomial(rng: &mut impl Rng, n: usize, degree: usize) -> Monomial {
    Monomial::new((0..degree).map(|_| random_vector(rng, n)).collect()).unwrap()
}

pub fn random_squarefree_monomial(rng: &mut impl Rng, n: usize, degree: usize) -> Monomial {
    let mut fs: Vec<u16> = Vec::new();
    while fs.len() < degree {
        let v = random_vector(rng, n);
        if !fs.contains(&v) {
            fs.push(v);
        }
    }
    Monomial::new(fs).unwrap()
}

/// Random homogeneous polynomial with up to `terms` monomials.
pub fn random_polynomial(rng: &mut impl Rng, side: Side, n: usize, degree: usize, terms: usize) -> Polynomial {
    let monos: Vec<Monomial> = (0..terms).map(|_| random_monomial(rng, n, degree)).collect();
    Polynomial::from_monomials(side, n, monos).unwrap()
}

pub fn random_squarefree(rng: &mut impl Rng, side: Side, n: usize, degree: usize, terms: usize) -> Polynomial {
    let monos: Vec<Monomial> = (0..terms).map(|_| random_squarefree_monomial(rng, n, degree)).collect();
    Polynomial::from_monomials(side, n, monos).unwrap()
}

pub fn random_basis(rng: &mut impl Rng, n: usize) -> Vec<u16> {
    loop {
        let b: Vec<u16> = (0..n).map(|_| random_vector(rng, n)).collect();
        if twotorus_core::gf2::is_independent(&b) {
            return b;
        }
    }
}

pub fn random_faithful(rng: &mut impl Rng, side: Side, n: usize, terms: usize) -> Polynomial {
    let monos: Vec<Monomial> = (0..terms).map(|_| Monomial::new(random_basis(rng, n)).unwrap()).collect();
    Polynomial::from_monomials(side, n, monos).unwrap()
}

pub fn random_automorphism(rng: &mut impl Rng, n: usize) -> BitMatrix {
    BitMatrix::from_words(&random_basis(rng, n), n).unwrap()
}

/// The automorphism sending `from[i]` to `to[i]`.
pub fn automorphism_between(from: &[u16], to: &[u16]) -> BitMatrix {
    let n = from.len();
    let b = BitMatrix::from_words(from, n).unwrap().transpose();
    let a = BitMatrix::from_words(to, n).unwrap().transpose();
    a.mul(&b.invert().unwrap()).unwrap()
}
