//! Products of simplices with facet colorings by cocharacters.
//!
//! Facet `f` of a simplex factor of dimension `k` is the facet opposite
//! vertex `f`, for `f` in `0..=k`. A vertex of the product is a tuple
//! `(w_1, ..., w_l)` and lies on every facet `(i, f)` with `f != w_i`.

use alloc::vec::Vec;

use crate::algebra::{dual_basis, Monomial, Polynomial, Side};
use crate::error::{Error, Result};
use crate::gf2;

/// Largest ambient dimension accepted by the coloring enumerators.
pub const MAX_COLORING_DIM: usize = 4;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SimplexProduct {
    parts: Vec<usize>,
}

impl SimplexProduct {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        Ok(Self { parts })
    }

    pub fn simplex(k: usize) -> Result<Self> {
        Self::new(alloc::vec![k])
    }

    /// The empty product: a single point.
    pub fn point() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn dimension(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn facet_count(&self) -> usize {
        self.parts.iter().map(|k| k + 1).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(|k| k + 1).product()
    }

    /// Flat index of facet `(part, f)`.
    pub fn facet_index(&self, part: usize, f: usize) -> Option<usize> {
        let k = *self.parts.get(part)?;
        (f <= k).then(|| self.parts[..part].iter().map(|k| k + 1).sum::<usize>() + f)
    }

    /// `(part, f)` for every facet, in flat order.
    pub fn facets(&self) -> Vec<(usize, usize)> {
        self.parts.iter().enumerate().flat_map(|(i, &k)| (0..=k).map(move |f| (i, f))).collect()
    }

    /// All vertices as tuples, last coordinate varying fastest.
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        let mut out = alloc::vec![Vec::new()];
        for &k in &self.parts {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=k).map(move |w| {
                        let mut v = v.clone();
                        v.push(w);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Flat indices of the facets containing `vertex`.
    pub fn incident_facets(&self, vertex: &[usize]) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dimension());
        let mut base = 0;
        for (&k, &w) in self.parts.iter().zip(vertex) {
            out.extend((0..=k).filter(|&f| f != w).map(|f| base + f));
            base += k + 1;
        }
        out
    }

    pub fn product(&self, other: &SimplexProduct) -> SimplexProduct {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        SimplexProduct { parts }
    }
}

/// A facet coloring by cocharacters of GF(2)^n, indexed by flat facet index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PolytopeColoring {
    dim: u8,
    colors: Vec<u16>,
}

impl PolytopeColoring {
    pub fn new(n: usize, colors: Vec<u16>) -> Result<Self> {
        gf2::check_dim(n)?;
        if colors.contains(&0) {
            return Err(Error::ZeroFactor);
        }
        if let Some(&c) = colors.iter().find(|&&c| c as u32 >= 1u32 << n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: (16 - c.leading_zeros()) as usize,
            });
        }
        Ok(Self { dim: n as u8, colors })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn colors(&self) -> &[u16] {
        &self.colors
    }

    pub fn color(&self, facet: usize) -> u16 {
        self.colors[facet]
    }
}

/// Sum over vertices of the product of incident facet colors. The polytope
/// may have dimension below the ambient `n`; the incident colors at every
/// vertex must be linearly independent.
pub fn coloring_polynomial(p: &SimplexProduct, lambda: &PolytopeColoring) -> Result<Polynomial> {
    if lambda.colors.len() != p.facet_count() {
        return Err(Error::DimensionMismatch { expected: p.facet_count(), found: lambda.colors.len() });
    }
    if p.dimension() > lambda.dim() {
        return Err(Error::DimensionMismatch { expected: lambda.dim(), found: p.dimension() });
    }
    let mut out = Polynomial::zero(Side::Cocharacter, lambda.dim())?;
    let mut colors = Vec::with_capacity(p.dimension());
    for v in p.vertices() {
        colors.clear();
        colors.extend(p.incident_facets(&v).into_iter().map(|f| lambda.colors[f]));
        if !gf2::is_independent(&colors) {
            return Err(Error::InvalidColoring { vertex: v });
        }
        out.toggle(Monomial::new(colors.clone())?);
    }
    Ok(out)
}

/// Color of a simplex: `colors[f]` on the facet opposite vertex `f`.
pub fn colored_simplex(n: usize, colors: &[u16]) -> Result<(SimplexProduct, PolytopeColoring)> {
    if colors.len() < 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: colors.len() });
    }
    let p = SimplexProduct::simplex(colors.len() - 1)?;
    let lambda = PolytopeColoring::new(n, colors.to_vec())?;
    coloring_polynomial(&p, &lambda)?;
    Ok((p, lambda))
}

/// The product polytope with facet colors inherited from both factors. The
/// combined coloring is checked for independence at every vertex.
pub fn product_coloring(
    p1: &SimplexProduct,
    l1: &PolytopeColoring,
    p2: &SimplexProduct,
    l2: &PolytopeColoring,
) -> Result<(SimplexProduct, PolytopeColoring)> {
    if l1.dim != l2.dim {
        return Err(Error::DimensionMismatch { expected: l1.dim(), found: l2.dim() });
    }
    let p = p1.product(p2);
    let mut colors = l1.colors.clone();
    colors.extend_from_slice(&l2.colors);
    let lambda = PolytopeColoring { dim: l1.dim, colors };
    coloring_polynomial(&p, &lambda)?;
    Ok((p, lambda))
}

/// Connected sum at a shared vertex monomial: the Z2 sum.
pub fn connected_sum_polynomial(g1: &Polynomial, g2: &Polynomial) -> Result<Polynomial> {
    g1.add(g2)
}

/// Every valid coloring of `p` in ambient dimension `n = dim p`, by
/// backtracking over facets in flat order.
pub fn enumerate_colorings(p: &SimplexProduct, n: usize) -> Result<Colorings> {
    Colorings::new(p, n, alloc::vec![None; p.facet_count()])
}

/// Colorings whose facets at the vertex `(0, ..., 0)` carry the standard
/// basis in flat facet order. Each GL(n, 2)-orbit of colorings contains
/// exactly one of these.
pub fn enumerate_normalized_colorings(p: &SimplexProduct, n: usize) -> Result<Colorings> {
    let mut pinned = alloc::vec![None; p.facet_count()];
    let origin = alloc::vec![0; p.parts.len()];
    for (i, f) in p.incident_facets(&origin).into_iter().enumerate() {
        pinned[f] = Some(1u16 << i);
    }
    Colorings::new(p, n, pinned)
}

/// Stream of colorings produced by [`enumerate_colorings`].
#[derive(Clone, Debug)]
pub struct Colorings {
    n: usize,
    pinned: Vec<Option<u16>>,
    // for each facet: for each vertex containing it, that vertex's facets
    // with index <= this facet
    checks: Vec<Vec<Vec<usize>>>,
    assign: Vec<u16>,
    next: Vec<u32>,
    done: bool,
    emitted_point: bool,
}

impl Colorings {
    fn new(p: &SimplexProduct, n: usize, pinned: Vec<Option<u16>>) -> Result<Self> {
        if n == 0 || n > MAX_COLORING_DIM {
            return Err(Error::DimensionTooLarge { dim: n, max: MAX_COLORING_DIM });
        }
        if p.dimension() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.dimension() });
        }
        let facets = p.facet_count();
        let mut checks = alloc::vec![Vec::new(); facets];
        for v in p.vertices() {
            let inc = p.incident_facets(&v);
            for (pos, &f) in inc.iter().enumerate() {
                checks[f].push(inc[..=pos].to_vec());
            }
        }
        let start = pinned.first().copied().flatten().map_or(1, u32::from);
        Ok(Self {
            n,
            pinned,
            checks,
            assign: Vec::with_capacity(facets),
            next: alloc::vec![start],
            done: false,
            emitted_point: false,
        })
    }

    fn consistent(&self, facet: usize) -> bool {
        let mut words = [0u16; MAX_COLORING_DIM];
        self.checks[facet].iter().all(|fs| {
            for (slot, &f) in words.iter_mut().zip(fs) {
                *slot = self.assign[f];
            }
            gf2::is_independent(&words[..fs.len()])
        })
    }
}

impl Iterator for Colorings {
    type Item = PolytopeColoring;

    fn next(&mut self) -> Option<PolytopeColoring> {
        let facets = self.pinned.len();
        if facets == 0 {
            if self.emitted_point {
                return None;
            }
            self.emitted_point = true;
            return Some(PolytopeColoring { dim: self.n as u8, colors: Vec::new() });
        }
        while !self.done {
            let depth = self.assign.len();
            let cand = self.next[depth];
            let limit = match self.pinned[depth] {
                Some(c) => c as u32 + 1,
                None => 1u32 << self.n,
            };
            if cand >= limit {
                self.next.pop();
                if self.assign.pop().is_none() {
                    self.done = true;
                }
                continue;
            }
            self.next[depth] = cand + 1;
            self.assign.push(cand as u16);
            if !self.consistent(depth) {
                self.assign.pop();
                continue;
            }
            if self.assign.len() == facets {
                let out = PolytopeColoring { dim: self.n as u8, colors: self.assign.clone() };
                self.assign.pop();
                return Some(out);
            }
            let start = self.pinned[depth + 1].map_or(1, u32::from);
            self.next.push(start);
        }
        None
    }
}

/// The multisets `(n_1, ..., n_l)` with `n_i >= 1` summing to `n`, each
/// listed in weakly decreasing order.
pub fn simplex_products_of_dimension(n: usize) -> Vec<SimplexProduct> {
    fn walk(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<SimplexProduct>) {
        if rest == 0 {
            out.push(SimplexProduct { parts: cur.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            walk(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    walk(n, n, &mut Vec::new(), &mut out);
    out
}

/// One colored prism `Δ^{n-1} × Δ^1` of a prism path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrismStep {
    pub polytope: SimplexProduct,
    pub coloring: PolytopeColoring,
    /// Vertex monomial shared with the previous polytope of the chain.
    pub from: Monomial,
    /// Vertex monomial shared with the next polytope of the chain.
    pub to: Monomial,
    /// Vertex at which the prism is summed with a copy of itself.
    pub turn: Monomial,
    /// Vertex tuples carrying `from`, `to` and `turn`.
    pub from_vertex: Vec<usize>,
    pub to_vertex: Vec<usize>,
    pub turn_vertex: Vec<usize>,
}

/// A chain of colored prisms carrying the vertex monomial `m1` to `m2`, one
/// factor exchange per prism.
///
/// Each step replaces a factor `c` of the current basis by a factor `b` of
/// the target; the prism has side facets colored by the remaining `n - 1`
/// factors and their sum, and end facets colored `c` and `b`.
pub fn prism_path(n: usize, m1: &Monomial, m2: &Monomial) -> Result<Vec<PrismStep>> {
    if !m1.is_basis(n) || !m2.is_basis(n) {
        return Err(Error::NotABasis);
    }
    let target = m2.factors();
    let mut current = m1.factors().to_vec();
    let mut steps = Vec::new();
    while let Some(&b) = target.iter().find(|b| !current.contains(b)) {
        let dual = dual_basis(&current, n)?;
        let k = (0..n)
            .filter(|&k| (dual[k] & b).count_ones() % 2 == 1 && !target.contains(&current[k]))
            .min_by_key(|&k| current[k])
            .expect("exchange partner exists");
        let c = current[k];
        let others: Vec<u16> = current.iter().copied().filter(|&x| x != c).collect();
        let sum = others.iter().fold(0u16, |a, &x| a ^ x);
        let mut colors = others.clone();
        colors.push(sum);
        colors.push(c);
        colors.push(b);
        let polytope = SimplexProduct::new(alloc::vec![n - 1, 1])?;
        let coloring = PolytopeColoring::new(n, colors)?;
        let from = Monomial::new(current.clone())?;
        current[k] = b;
        let to = Monomial::new(current.clone())?;
        let mut turn: Vec<u16> = others[1..].to_vec();
        turn.push(sum);
        turn.push(c);
        steps.push(PrismStep {
            polytope,
            coloring,
            from,
            to,
            turn: Monomial::new(turn)?,
            from_vertex: alloc::vec![n - 1, 1],
            to_vertex: alloc::vec![n - 1, 0],
            turn_vertex: alloc::vec![0, 1],
        });
    }
    Ok(steps)
}

/// Check that a prism path is well formed: every prism is validly colored,
/// its three marked vertices are distinct and carry the recorded monomials,
/// and consecutive prisms share monomials from `m1` to `m2`.
pub fn check_prism_chain(m1: &Monomial, m2: &Monomial, steps: &[PrismStep]) -> Result<bool> {
    let mut expected = m1.clone();
    for s in steps {
        coloring_polynomial(&s.polytope, &s.coloring)?;
        let monomial_at = |v: &[usize]| -> Result<Monomial> {
            if v.len() != s.polytope.parts().len() || v.iter().zip(s.polytope.parts()).any(|(&w, &k)| w > k) {
                return Err(Error::NoSuchVertex { vertex: v.first().copied().unwrap_or(0) });
            }
            Monomial::new(s.polytope.incident_facets(v).into_iter().map(|f| s.coloring.color(f)).collect())
        };
        let distinct = s.from_vertex != s.to_vertex && s.turn_vertex != s.from_vertex && s.turn_vertex != s.to_vertex;
        if !distinct
            || s.from != expected
            || monomial_at(&s.from_vertex)? != s.from
            || monomial_at(&s.to_vertex)? != s.to
            || monomial_at(&s.turn_vertex)? != s.turn
        {
            return Ok(false);
        }
        expected = s.to.clone();
    }
    Ok(&expected == m2)
}
