//! The five graph products and the iterated corona growth model.
//!
//! Pair products label vertex `(i, j)` as `i * n2 + j`. The corona places the
//! first factor's vertices at `0..n1` and the `i`-th copy of the second
//! factor at `n1 + i*n2 .. n1 + (i+1)*n2`.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for iterated corona growth; the CLI can override it via
/// the `SPECTRAL_ENTROPY_VERTEX_CAP` environment variable.
pub const DEFAULT_VERTEX_CAP: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Kronecker,
    Strong,
    Lexicographic,
    Corona,
}

impl ProductKind {
    pub const ALL: [ProductKind; 5] = [
        ProductKind::Cartesian,
        ProductKind::Kronecker,
        ProductKind::Strong,
        ProductKind::Lexicographic,
        ProductKind::Corona,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Kronecker => "kronecker",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Corona => "corona",
        }
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "kronecker" | "tensor" => Ok(ProductKind::Kronecker),
            "strong" => Ok(ProductKind::Strong),
            "lexicographic" | "lex" => Ok(ProductKind::Lexicographic),
            "corona" => Ok(ProductKind::Corona),
            other => Err(Error::InvalidParameter(format!(
                "unknown product kind '{other}'"
            ))),
        }
    }
}

/// Builds the product graph of `g1` and `g2`.
///
/// Adjacency rules, with `~` the factor adjacency:
/// - cartesian: `(i,j) ~ (r,s)` iff (`i = r` and `j ~ s`) or (`i ~ r` and `j = s`)
/// - kronecker: `i ~ r` and `j ~ s`
/// - strong: cartesian or kronecker
/// - lexicographic: `i ~ r`, or (`i = r` and `j ~ s`)
/// - corona: `g1` plus `n1` copies of `g2`, copy `i` fully joined to vertex `i`
pub fn product(g1: &Graph, g2: &Graph, kind: ProductKind) -> Result<Graph> {
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match kind {
        ProductKind::Cartesian => {
            for &(u, v) in g1.edges() {
                for j in 0..n2 {
                    edges.push((u * n2 + j, v * n2 + j));
                }
            }
            for i in 0..n1 {
                for &(x, y) in g2.edges() {
                    edges.push((i * n2 + x, i * n2 + y));
                }
            }
            Graph::new(n1 * n2, &edges)
        }
        ProductKind::Kronecker => {
            for &(u, v) in g1.edges() {
                for &(x, y) in g2.edges() {
                    edges.push((u * n2 + x, v * n2 + y));
                    edges.push((u * n2 + y, v * n2 + x));
                }
            }
            Graph::new(n1 * n2, &edges)
        }
        ProductKind::Strong => {
            for &(u, v) in g1.edges() {
                for j in 0..n2 {
                    edges.push((u * n2 + j, v * n2 + j));
                }
                for &(x, y) in g2.edges() {
                    edges.push((u * n2 + x, v * n2 + y));
                    edges.push((u * n2 + y, v * n2 + x));
                }
            }
            for i in 0..n1 {
                for &(x, y) in g2.edges() {
                    edges.push((i * n2 + x, i * n2 + y));
                }
            }
            Graph::new(n1 * n2, &edges)
        }
        ProductKind::Lexicographic => {
            for &(u, v) in g1.edges() {
                for j in 0..n2 {
                    for s in 0..n2 {
                        edges.push((u * n2 + j, v * n2 + s));
                    }
                }
            }
            for i in 0..n1 {
                for &(x, y) in g2.edges() {
                    edges.push((i * n2 + x, i * n2 + y));
                }
            }
            Graph::new(n1 * n2, &edges)
        }
        ProductKind::Corona => {
            edges.extend_from_slice(g1.edges());
            for i in 0..n1 {
                let base = n1 + i * n2;
                for &(x, y) in g2.edges() {
                    edges.push((base + x, base + y));
                }
                for j in 0..n2 {
                    edges.push((i, base + j));
                }
            }
            Graph::new(n1 * (1 + n2), &edges)
        }
    }
}

/// Vertex count of the m-fold iterated corona `G^(m)`: `n (1+n)^m`.
/// Computed in u128 so cap checks cannot overflow at sane inputs.
pub fn corona_vertex_count(n: usize, iterations: usize) -> u128 {
    let mut total = n as u128;
    for _ in 0..iterations {
        total = total.saturating_mul(1 + n as u128);
    }
    total
}

/// The corona graph `G^(m)`: `G^(0) = seed`, `G^(k+1) = G^(k) o seed`.
///
/// Errors with `SizeCapExceeded` when the final vertex count `n (1+n)^m`
/// would exceed `cap`.
pub fn corona_iterate(seed: &Graph, iterations: usize, cap: usize) -> Result<Graph> {
    let required = corona_vertex_count(seed.vertex_count(), iterations);
    if required > cap as u128 {
        return Err(Error::SizeCapExceeded { required, cap });
    }
    let mut g = seed.clone();
    for _ in 0..iterations {
        g = product(&g, seed, ProductKind::Corona)?;
    }
    Ok(g)
}
