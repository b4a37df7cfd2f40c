//! Ring constructors and the `RingExpr` construction tree.

use super::{ideal_generated_by, quotient_ring, ElementIndex, ElementMap, FiniteRing, MAX_SUPPORTED_ORDER};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::io::catalog;

/// Explicit ring tables as read from a table file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub order: usize,
    pub one: ElementIndex,
    /// Row-major, `order × order`.
    pub add: Vec<ElementIndex>,
    /// Row-major, `order × order`.
    pub mul: Vec<ElementIndex>,
}

/// How to build a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Zmod(usize),
    Matrix(usize, Box<RingExpr>),
    Triangular(usize, Box<RingExpr>),
    Product(Vec<RingExpr>),
    Quotient(Box<RingExpr>, Vec<ElementIndex>),
    Table(TableSpec),
    Catalog(String),
}

impl RingExpr {
    /// Compact label in the expression grammar, e.g. `T2(Z2)`.
    pub fn label(&self) -> String {
        match self {
            RingExpr::Zmod(n) => format!("Z{n}"),
            RingExpr::Matrix(k, e) => format!("M{k}({})", e.label()),
            RingExpr::Triangular(k, e) => format!("T{k}({})", e.label()),
            RingExpr::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|f| f.label()).collect();
                format!("P({})", parts.join(","))
            }
            RingExpr::Quotient(e, gens) => {
                let g: Vec<String> = gens.iter().map(|x| x.to_string()).collect();
                format!("Q({};{})", e.label(), g.join(","))
            }
            RingExpr::Table(t) => format!("table[{}]", t.order),
            RingExpr::Catalog(name) => format!("@{name}"),
        }
    }
}

/// Builds and validates the ring described by `expr`.
pub fn construct(expr: &RingExpr, bounds: &Bounds) -> Result<FiniteRing> {
    let ring = match expr {
        RingExpr::Zmod(n) => {
            check_order(*n as u128, bounds)?;
            zmod(*n)?
        }
        RingExpr::Matrix(k, base) => {
            let base = construct(base, bounds)?;
            check_order(pow_u128(base.order(), k * k), bounds)?;
            matrix_ring(*k, &base)?
        }
        RingExpr::Triangular(k, base) => {
            let base = construct(base, bounds)?;
            check_order(pow_u128(base.order(), k * (k + 1) / 2), bounds)?;
            triangular_ring(*k, &base)?
        }
        RingExpr::Product(parts) => {
            if parts.len() < 2 {
                return Err(Error::InvalidExpression("a product needs at least two factors".into()));
            }
            let factors = parts
                .iter()
                .map(|p| construct(p, bounds))
                .collect::<Result<Vec<_>>>()?;
            let order = factors
                .iter()
                .fold(1u128, |acc, f| acc.saturating_mul(f.order() as u128));
            check_order(order, bounds)?;
            product_ring(&factors)?.0
        }
        RingExpr::Quotient(base, gens) => {
            let base = construct(base, bounds)?;
            let ideal = ideal_generated_by(&base, gens)?;
            quotient_ring(&base, &ideal)?.0
        }
        RingExpr::Table(t) => {
            check_order(t.order as u128, bounds)?;
            FiniteRing::from_tables("table", t.order, t.add.clone(), t.mul.clone(), t.one)?
        }
        RingExpr::Catalog(name) => {
            let inner = catalog::catalog_lookup(name)?;
            return Ok(construct(&inner, bounds)?.with_label(name.clone()));
        }
    };
    Ok(ring.with_label(expr.label()))
}

fn pow_u128(base: usize, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

fn check_order(order: u128, bounds: &Bounds) -> Result<()> {
    let bound = bounds.max_order.min(MAX_SUPPORTED_ORDER);
    if order > bound as u128 {
        return Err(Error::OrderBoundExceeded {
            order: order.min(usize::MAX as u128) as usize,
            bound,
        });
    }
    Ok(())
}

/// `Z/n`, element index = residue.
pub fn zmod(n: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::InvalidTables {
            reason: format!("Z/{n} has order < 2"),
            witness: vec![],
        });
    }
    if n > MAX_SUPPORTED_ORDER {
        return Err(Error::OrderBoundExceeded {
            order: n,
            bound: MAX_SUPPORTED_ORDER,
        });
    }
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u16);
            mul.push(((a * b) % n) as u16);
        }
    }
    FiniteRing::from_raw(format!("Z{n}"), n, add, mul, 1)
}

/// Ring over `base` whose elements are digit vectors at the given matrix
/// `positions` (row-major, first position most significant).
fn matrix_like(
    label: String,
    k: usize,
    base: &FiniteRing,
    positions: &[(usize, usize)],
) -> Result<FiniteRing> {
    let b = base.order();
    let d = positions.len();
    let order = pow_u128(b, d);
    if order > MAX_SUPPORTED_ORDER as u128 {
        return Err(Error::OrderBoundExceeded {
            order: order.min(usize::MAX as u128) as usize,
            bound: MAX_SUPPORTED_ORDER,
        });
    }
    let n = order as usize;
    let mut slot = vec![usize::MAX; k * k];
    for (p, &(i, j)) in positions.iter().enumerate() {
        slot[i * k + j] = p;
    }
    let digits: Vec<Vec<usize>> = (0..n)
        .map(|mut x| {
            let mut v = vec![0; d];
            for p in (0..d).rev() {
                v[p] = x % b;
                x /= b;
            }
            v
        })
        .collect();
    let encode = |v: &[usize]| v.iter().fold(0usize, |acc, &t| acc * b + t);
    let entry = |v: &[usize], i: usize, j: usize| {
        let s = slot[i * k + j];
        if s == usize::MAX {
            0
        } else {
            v[s]
        }
    };
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut buf = vec![0; d];
    for x in &digits {
        for y in &digits {
            for p in 0..d {
                buf[p] = base.add(x[p], y[p]);
            }
            add.push(encode(&buf) as u16);
            for (p, &(i, j)) in positions.iter().enumerate() {
                let mut acc = 0;
                for l in 0..k {
                    acc = base.add(acc, base.mul(entry(x, i, l), entry(y, l, j)));
                }
                buf[p] = acc;
            }
            mul.push(encode(&buf) as u16);
        }
    }
    let mut one = vec![0; d];
    for i in 0..k {
        one[slot[i * k + i]] = base.one();
    }
    FiniteRing::from_raw(label, n, add, mul, encode(&one))
}

/// Full `k × k` matrices over `base`; entry (1,1) is the most significant digit.
pub fn matrix_ring(k: usize, base: &FiniteRing) -> Result<FiniteRing> {
    if k == 0 {
        return Err(Error::InvalidExpression("matrix size must be at least 1".into()));
    }
    let positions: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    matrix_like(format!("M{k}({})", base.label()), k, base, &positions)
}

/// Upper triangular `k × k` matrices over `base`, entries `i ≤ j` in row-major order.
pub fn triangular_ring(k: usize, base: &FiniteRing) -> Result<FiniteRing> {
    if k == 0 {
        return Err(Error::InvalidExpression("matrix size must be at least 1".into()));
    }
    let positions: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    matrix_like(format!("T{k}({})", base.label()), k, base, &positions)
}

/// Direct product with mixed-radix indices (factor 1 most significant),
/// together with the coordinate projections.
pub fn product_ring(factors: &[FiniteRing]) -> Result<(FiniteRing, Vec<ElementMap>)> {
    if factors.len() < 2 {
        return Err(Error::InvalidExpression("a product needs at least two factors".into()));
    }
    let order = factors
        .iter()
        .fold(1u128, |acc, f| acc.saturating_mul(f.order() as u128));
    if order > MAX_SUPPORTED_ORDER as u128 {
        return Err(Error::OrderBoundExceeded {
            order: order.min(usize::MAX as u128) as usize,
            bound: MAX_SUPPORTED_ORDER,
        });
    }
    let n = order as usize;
    let coords: Vec<Vec<usize>> = (0..n).map(|x| decode_mixed(x, factors)).collect();
    let encode = |v: &[usize]| {
        v.iter()
            .zip(factors)
            .fold(0usize, |acc, (&t, f)| acc * f.order() + t)
    };
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut buf = vec![0; factors.len()];
    for x in &coords {
        for y in &coords {
            for (i, f) in factors.iter().enumerate() {
                buf[i] = f.add(x[i], y[i]);
            }
            add.push(encode(&buf) as u16);
            for (i, f) in factors.iter().enumerate() {
                buf[i] = f.mul(x[i], y[i]);
            }
            mul.push(encode(&buf) as u16);
        }
    }
    let one: Vec<usize> = factors.iter().map(|f| f.one()).collect();
    let labels: Vec<&str> = factors.iter().map(|f| f.label()).collect();
    let mut ring = FiniteRing::from_raw(format!("P({})", labels.join(",")), n, add, mul, encode(&one))?;
    let projections: Vec<ElementMap> = (0..factors.len())
        .map(|i| coords.iter().map(|c| c[i]).collect())
        .collect();
    for (f, p) in factors.iter().zip(&projections) {
        if let Some(why) = ring.homomorphism_defect(f, p) {
            return Err(Error::invariant(format!("product projection: {why}")));
        }
    }
    ring.set_product_factors(factors.to_vec());
    Ok((ring, projections))
}

/// Coordinates of product element `x`.
pub(crate) fn decode_mixed(mut x: usize, factors: &[FiniteRing]) -> Vec<usize> {
    let mut v = vec![0; factors.len()];
    for i in (0..factors.len()).rev() {
        v[i] = x % factors[i].order();
        x /= factors[i].order();
    }
    v
}

/// Index of the product element with the given coordinates.
pub(crate) fn encode_mixed(coords: &[usize], orders: &[usize]) -> usize {
    coords
        .iter()
        .zip(orders)
        .fold(0usize, |acc, (&t, &o)| acc * o + t)
}
