//! Mod-2 GKM graphs (G-colored graphs).
//!
//! A graph is stored as half-edges: vertex `v` owns slots `v*n .. v*n+n`,
//! every slot carries a nonzero character and is matched with exactly one
//! slot at another vertex. Parallel edges are allowed, loops are not.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{dual_basis, Monomial, Polynomial, Side};
use crate::diffop::d;
use crate::error::{Error, Result};
use crate::gf2;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredGraph {
    dim: u8,
    colors: Vec<u16>,
    mate: Vec<usize>,
}

/// An edge as seen from its lower half-edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: u16,
}

/// First axiom failure found by [`ColoredGraph::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// The colors at this vertex are not a basis.
    NotABasis { vertex: usize },
    /// Color multisets at the endpoints disagree modulo the edge color.
    Incongruent { u: usize, v: usize, color: u16 },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Validation {
    pub violation: Option<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

impl ColoredGraph {
    pub fn empty(n: usize) -> Result<Self> {
        gf2::check_dim(n)?;
        Ok(Self { dim: n as u8, colors: Vec::new(), mate: Vec::new() })
    }

    /// Build from an edge list. Slots are assigned to each vertex in edge
    /// order; every vertex must end up with exactly `n` slots.
    pub fn from_edges(n: usize, vertex_count: usize, edges: &[Edge]) -> Result<Self> {
        gf2::check_dim(n)?;
        let limit = 1u32 << n;
        let mut fill = alloc::vec![0usize; vertex_count];
        let mut colors = alloc::vec![0u16; vertex_count * n];
        let mut mate = alloc::vec![usize::MAX; vertex_count * n];
        for (k, e) in edges.iter().enumerate() {
            if e.u >= vertex_count || e.v >= vertex_count {
                return Err(Error::MalformedGraph(format!("edge {k} names a missing vertex")));
            }
            if e.u == e.v {
                return Err(Error::MalformedGraph(format!("edge {k} is a loop at {}", e.u)));
            }
            if e.color == 0 || e.color as u32 >= limit {
                return Err(Error::MalformedGraph(format!("edge {k} has an invalid color")));
            }
            if fill[e.u] == n || fill[e.v] == n {
                return Err(Error::MalformedGraph(format!("edge {k} exceeds valence {n}")));
            }
            let a = e.u * n + fill[e.u];
            let b = e.v * n + fill[e.v];
            fill[e.u] += 1;
            fill[e.v] += 1;
            colors[a] = e.color;
            colors[b] = e.color;
            mate[a] = b;
            mate[b] = a;
        }
        if let Some(v) = fill.iter().position(|&f| f != n) {
            return Err(Error::MalformedGraph(format!(
                "vertex {v} has {} edges, expected {n}",
                fill[v]
            )));
        }
        Ok(Self { dim: n as u8, colors, mate })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len() / self.dim()
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.dim();
        (0..self.mate.len()).filter(move |&h| h < self.mate[h]).map(move |h| Edge {
            u: h / n,
            v: self.mate[h] / n,
            color: self.colors[h],
        })
    }

    /// Colors of the `n` slots at `v`, in slot order.
    pub fn vertex_colors(&self, v: usize) -> &[u16] {
        let n = self.dim();
        &self.colors[v * n..(v + 1) * n]
    }

    /// Product of the colors at `v`.
    pub fn vertex_monomial(&self, v: usize) -> Monomial {
        Monomial::new(self.vertex_colors(v).to_vec()).expect("colors are nonzero")
    }

    fn check_structure(&self) -> Result<()> {
        let n = self.dim();
        for (h, &m) in self.mate.iter().enumerate() {
            if m >= self.mate.len() || self.mate[m] != h {
                return Err(Error::MalformedGraph(format!("slot {h} is unmatched")));
            }
            if m / n == h / n {
                return Err(Error::MalformedGraph(format!("loop at vertex {}", h / n)));
            }
            if self.colors[h] == 0 || self.colors[h] != self.colors[m] {
                return Err(Error::MalformedGraph(format!("slot {h} has an invalid color")));
            }
        }
        Ok(())
    }

    /// Check both axioms: the colors at each vertex form a basis, and for each
    /// edge `e = pq` the colors at `p` and `q` agree modulo `alpha(e)`.
    pub fn validate(&self) -> Result<Validation> {
        self.check_structure()?;
        let n = self.dim();
        for v in 0..self.vertex_count() {
            if !gf2::is_independent(self.vertex_colors(v)) {
                return Ok(Validation { violation: Some(Violation::NotABasis { vertex: v }) });
            }
        }
        for e in self.edges() {
            let reduce = |v: usize| {
                let mut r: Vec<u16> =
                    self.vertex_colors(v).iter().map(|&x| x.min(x ^ e.color)).collect();
                r.sort_unstable();
                r
            };
            if reduce(e.u) != reduce(e.v) {
                return Ok(Validation {
                    violation: Some(Violation::Incongruent { u: e.u, v: e.v, color: e.color }),
                });
            }
        }
        debug_assert!(n > 0);
        Ok(Validation { violation: None })
    }

    /// Sum over vertices of the product of incident colors.
    pub fn coloring_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero(Side::Character, self.dim()).expect("valid dimension");
        for v in 0..self.vertex_count() {
            p.toggle(self.vertex_monomial(v));
        }
        p
    }

    /// Build a colored graph whose coloring polynomial is `g`, provided
    /// `d(g*) = 0`. Vertices are the monomials of `g*` in canonical order.
    pub fn from_polynomial(g: &Polynomial) -> Result<Self> {
        if g.side() != Side::Character {
            return Err(Error::SideMismatch { left: Side::Character, right: g.side() });
        }
        let dual = g.dual()?;
        let boundary = d(&dual);
        if !boundary.is_zero() {
            return Err(Error::BoundaryNonzero { unpaired: boundary.len() });
        }
        let n = g.dim();
        let mut colors = Vec::with_capacity(dual.len() * n);
        let mut by_label: BTreeMap<Monomial, Vec<usize>> = BTreeMap::new();
        for (i, s) in dual.terms().enumerate() {
            let t = dual_basis(s.factors(), n)?;
            for (j, &c) in t.iter().enumerate() {
                colors.push(c);
                by_label.entry(s.without(j)).or_default().push(i * n + j);
            }
        }
        let mut mate = alloc::vec![usize::MAX; colors.len()];
        for slots in by_label.values() {
            if slots.len() % 2 == 1 {
                return Err(Error::BoundaryNonzero { unpaired: 1 });
            }
            for pair in slots.chunks(2) {
                let (a, b) = (pair[0], pair[1]);
                debug_assert_ne!(a / n, b / n);
                debug_assert_eq!(colors[a], colors[b]);
                mate[a] = b;
                mate[b] = a;
            }
        }
        Ok(Self { dim: n as u8, colors, mate })
    }

    pub fn disjoint_union(&self, other: &ColoredGraph) -> Result<ColoredGraph> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        let offset = self.colors.len();
        let mut colors = self.colors.clone();
        colors.extend_from_slice(&other.colors);
        let mut mate = self.mate.clone();
        mate.extend(other.mate.iter().map(|&m| m + offset));
        Ok(ColoredGraph { dim: self.dim, colors, mate })
    }

    /// Remove `p` and `q` (which must carry the same colors) and glue the
    /// severed edges of equal color together.
    fn cut_pair(&self, p: usize, q: usize) -> ColoredGraph {
        let n = self.dim();
        let mut mate = self.mate.clone();
        for i in 0..n {
            let hp = p * n + i;
            let c = self.colors[hp];
            let hq = q * n + self.vertex_colors(q).iter().position(|&x| x == c).expect("same colors");
            let x = self.mate[hp];
            let y = self.mate[hq];
            if x / n == p || x / n == q {
                continue;
            }
            mate[x] = y;
            mate[y] = x;
        }
        let keep = |h: usize| h / n != p && h / n != q;
        let mut new_index = alloc::vec![usize::MAX; self.colors.len()];
        let mut next = 0;
        for (h, slot) in new_index.iter_mut().enumerate() {
            if keep(h) {
                *slot = next;
                next += 1;
            }
        }
        let colors = (0..self.colors.len()).filter(|&h| keep(h)).map(|h| self.colors[h]).collect();
        let mate = (0..self.colors.len()).filter(|&h| keep(h)).map(|h| new_index[mate[h]]).collect();
        ColoredGraph { dim: self.dim, colors, mate }
    }

    fn sorted_colors(&self, v: usize) -> Vec<u16> {
        let mut c = self.vertex_colors(v).to_vec();
        c.sort_unstable();
        c
    }

    /// Repeatedly cut out pairs of vertices with identical color sets until
    /// all vertex data are distinct. The coloring polynomial is unchanged.
    pub fn prime_reduce(&self) -> ColoredGraph {
        let mut g = self.clone();
        loop {
            let data: Vec<Vec<u16>> = (0..g.vertex_count()).map(|v| g.sorted_colors(v)).collect();
            let mut first: BTreeMap<&[u16], usize> = BTreeMap::new();
            let mut found = None;
            for (v, c) in data.iter().enumerate() {
                if let Some(&p) = first.get(c.as_slice()) {
                    found = Some((p, v));
                    break;
                }
                first.insert(c, v);
            }
            match found {
                Some((p, q)) => g = g.cut_pair(p, q),
                None => return g,
            }
        }
    }

    pub fn is_prime(&self) -> bool {
        let mut seen = alloc::collections::BTreeSet::new();
        self.vertex_count() > 0 && (0..self.vertex_count()).all(|v| seen.insert(self.sorted_colors(v)))
    }

    /// Connected sum at `v1` in `self` and `v2` in `other`.
    pub fn connected_sum(&self, v1: usize, other: &ColoredGraph, v2: usize) -> Result<ColoredGraph> {
        if v1 >= self.vertex_count() {
            return Err(Error::NoSuchVertex { vertex: v1 });
        }
        if v2 >= other.vertex_count() {
            return Err(Error::NoSuchVertex { vertex: v2 });
        }
        if self.dim != other.dim || self.sorted_colors(v1) != other.sorted_colors(v2) {
            return Err(Error::MonomialMismatch);
        }
        let union = self.disjoint_union(other)?;
        Ok(union.cut_pair(v1, self.vertex_count() + v2))
    }

    /// Number of edges sharing both endpoints with another edge.
    pub fn parallel_edge_count(&self) -> usize {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for e in self.edges() {
            *counts.entry((e.u.min(e.v), e.u.max(e.v))).or_default() += 1;
        }
        counts.values().filter(|&&c| c > 1).sum()
    }
}
