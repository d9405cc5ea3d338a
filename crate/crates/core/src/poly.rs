//! Exact integer polynomials, characteristic polynomials of the Laplacian
//! (`D - A`) and signless Laplacian (`D + A`), coefficient vectors with the
//! alternating sign stripped, dominance comparison, and the join/pendant
//! composition identities.

use crate::graph::{Graph, GraphError};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("negative coefficient value at index {index}")]
    NegativeCoefficient { index: usize },
    #[error("coefficient vectors have different lengths ({a} vs {b})")]
    LengthMismatch { a: usize, b: usize },
}

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored lowest power first. The zero polynomial is the
/// empty list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::from_coeffs(vec![c])
    }

    /// Builds from coefficients lowest power first, trimming leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The linear polynomial `c0 + c1*x`.
    pub fn linear(c0: i64, c1: i64) -> IntPoly {
        IntPoly::from_i64(&[c0, c1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0f64;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + bigint_to_f64(c);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        let out: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_coeffs(out)
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    // BigInt -> f64 with rounding; fine for the magnitudes in play.
    use num::ToPrimitive;
    c.to_f64().expect("finite conversion")
}

/// Serde helper: big integers as decimal strings (no width loss).
pub fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Serde helper: optional big integers as decimal strings or null.
pub fn serialize_opt_bigint<S: serde::Serializer>(
    v: &Option<BigInt>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_some(&x.to_string()),
        None => s.serialize_none(),
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}", mag)?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    /// JSON array of decimal strings, lowest power first (no integer-width
    /// loss).
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// Which matrix a coefficient vector came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MatrixKind {
    SignlessLaplacian,
    Laplacian,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixKind::SignlessLaplacian => write!(f, "signless-laplacian"),
            MatrixKind::Laplacian => write!(f, "laplacian"),
        }
    }
}

/// Coefficients with alternating signs stripped: for a degree-n monic
/// characteristic polynomial `sum (-1)^i phi_i x^(n-i)`, stores
/// `phi_0..phi_n` as nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffVector {
    values: Vec<BigInt>,
    kind: MatrixKind,
}

impl CoeffVector {
    pub fn new(values: Vec<BigInt>, kind: MatrixKind) -> Result<CoeffVector, PolyError> {
        for (i, v) in values.iter().enumerate() {
            if v.is_negative() {
                return Err(PolyError::NegativeCoefficient { index: i });
            }
        }
        Ok(CoeffVector { values, kind })
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    /// Number of entries (degree + 1).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.values[i]
    }

    /// Rebuilds the signed characteristic polynomial
    /// `sum (-1)^i phi_i x^(n-i)` (lowest power first).
    pub fn to_charpoly(&self) -> IntPoly {
        let n = self.values.len() - 1;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, v) in self.values.iter().enumerate() {
            let c = if i % 2 == 0 { v.clone() } else { -v };
            coeffs[n - i] = c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for CoeffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, ")")
    }
}

impl Serialize for CoeffVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.values.iter().map(|c| c.to_string()))
    }
}

/// Entrywise comparison result between two coefficient vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DominanceRelation {
    Equal,
    /// First vector >= second everywhere, strictly somewhere.
    Dominates,
    /// First vector <= second everywhere, strictly somewhere.
    DominatedBy,
    Incomparable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dominance {
    pub relation: DominanceRelation,
    /// Indices where the two vectors coincide.
    pub equal_indices: Vec<usize>,
}

/// Entrywise dominance comparison; only the lengths must agree (vectors of
/// different matrix kinds may be compared, e.g. Q vs L of the same graph).
pub fn compare_dominance(a: &CoeffVector, b: &CoeffVector) -> Result<Dominance, PolyError> {
    if a.len() != b.len() {
        return Err(PolyError::LengthMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    let mut equal_indices = Vec::new();
    let (mut some_gt, mut some_lt) = (false, false);
    for i in 0..a.len() {
        match a.values[i].cmp(&b.values[i]) {
            std::cmp::Ordering::Equal => equal_indices.push(i),
            std::cmp::Ordering::Greater => some_gt = true,
            std::cmp::Ordering::Less => some_lt = true,
        }
    }
    let relation = match (some_gt, some_lt) {
        (false, false) => DominanceRelation::Equal,
        (true, false) => DominanceRelation::Dominates,
        (false, true) => DominanceRelation::DominatedBy,
        (true, true) => DominanceRelation::Incomparable,
    };
    Ok(Dominance {
        relation,
        equal_indices,
    })
}

/// Entries of `D + A` or `D - A` as exact integers.
pub fn matrix_of(g: &Graph, kind: MatrixKind) -> Vec<Vec<BigInt>> {
    let n = g.n();
    let deg = g.degrees();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for v in 0..n {
        m[v][v] = BigInt::from(deg[v]);
    }
    let off = match kind {
        MatrixKind::SignlessLaplacian => BigInt::one(),
        MatrixKind::Laplacian => -BigInt::one(),
    };
    for &(a, b) in g.edges() {
        m[a][b] = off.clone();
        m[b][a] = off.clone();
    }
    m
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Exact by the Bareiss identity.
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = std::mem::take(&mut a[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// `det(xI - M)` of an integer matrix: exact evaluation at x = 0..n followed
/// by exact rational interpolation. The result is asserted to be integral
/// and monic of degree n.
pub fn charpoly_of_matrix(m: &[Vec<BigInt>]) -> IntPoly {
    let n = m.len();
    let mut points = Vec::with_capacity(n + 1);
    for t in 0..=n {
        let mut a = m.to_vec();
        for (i, row) in a.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let neg = -std::mem::take(entry);
                *entry = if i == j { BigInt::from(t) + neg } else { neg };
            }
        }
        points.push((BigInt::from(t), bareiss_determinant(a)));
    }
    let p = interpolate_integer_poly(&points);
    assert_eq!(p.degree(), Some(n), "characteristic polynomial degree");
    assert!(p.is_monic(), "characteristic polynomial must be monic");
    p
}

/// Exact Lagrange interpolation through integer points; panics if the
/// interpolant is not integer-coefficient (impossible for determinants of
/// integer matrices evaluated on enough points).
fn interpolate_integer_poly(points: &[(BigInt, BigInt)]) -> IntPoly {
    let k = points.len();
    let mut acc = vec![BigRational::zero(); k];
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        // basis_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut num = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            num = mul_linear(&num, &BigRational::from(-xj.clone()));
            denom *= BigRational::from(xi - xj);
        }
        let scale = BigRational::from(yi.clone()) / denom;
        for (c, v) in acc.iter_mut().zip(num.iter()) {
            *c += v * &scale;
        }
    }
    let coeffs: Vec<BigInt> = acc
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolant must have integer coefficients");
            c.to_integer()
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

/// Multiplies a rational polynomial (lowest power first) by `(x + c)`.
fn mul_linear(p: &[BigRational], c: &BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (i, v) in p.iter().enumerate() {
        out[i + 1] += v;
        out[i] += v * c;
    }
    out
}

/// `det(xI - (D + A))`, exact.
pub fn signless_charpoly(g: &Graph) -> IntPoly {
    charpoly_of_matrix(&matrix_of(g, MatrixKind::SignlessLaplacian))
}

/// `det(xI - (D - A))`, exact.
pub fn laplacian_charpoly(g: &Graph) -> IntPoly {
    charpoly_of_matrix(&matrix_of(g, MatrixKind::Laplacian))
}

pub fn charpoly(g: &Graph, kind: MatrixKind) -> IntPoly {
    charpoly_of_matrix(&matrix_of(g, kind))
}

/// Characteristic polynomial of the principal submatrix obtained by deleting
/// row/column `v`. Diagonal entries keep the FULL graph's degrees.
pub fn vertex_deleted_charpoly(
    g: &Graph,
    v: usize,
    kind: MatrixKind,
) -> Result<IntPoly, GraphError> {
    if v >= g.n() {
        return Err(GraphError::IndexOutOfRange { index: v, n: g.n() });
    }
    let full = matrix_of(g, kind);
    let idx: Vec<usize> = (0..g.n()).filter(|&i| i != v).collect();
    let sub: Vec<Vec<BigInt>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| full[i][j].clone()).collect())
        .collect();
    Ok(charpoly_of_matrix(&sub))
}

/// Strips the alternating signs from a monic degree-n polynomial:
/// `phi_i = (-1)^i * [x^(n-i)]`. Fails on non-monic input or any negative
/// `phi_i` (which would signal a characteristic-polynomial bug).
pub fn coeff_vector(p: &IntPoly, kind: MatrixKind) -> Result<CoeffVector, PolyError> {
    if !p.is_monic() {
        return Err(PolyError::NotMonic);
    }
    let n = p.degree().unwrap();
    let mut values = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let c = p.coeff(n - i);
        let v = if i % 2 == 0 { c } else { -c };
        if v.is_negative() {
            return Err(PolyError::NegativeCoefficient { index: i });
        }
        values.push(v);
    }
    Ok(CoeffVector { values, kind })
}

/// Convenience: exact coefficient vector of a graph via the characteristic
/// polynomial.
pub fn coeffs_via_charpoly(g: &Graph, kind: MatrixKind) -> CoeffVector {
    coeff_vector(&charpoly(g, kind), kind).expect("characteristic polynomial is monic with sign-alternating coefficients")
}

/// Checks the edge-join composition identity for both matrices.
///
/// G is built from disjoint copies of g1 and g2 plus the edge (u, v). The
/// identity states, with all subgraph polynomials taken standalone:
/// `P_G = P_{G1} * P_{G2} - P_{G1} * P_{G2|v} - P_{G2} * P_{G1|u}`.
pub fn identity_check_join(
    g1: &Graph,
    u: usize,
    g2: &Graph,
    v: usize,
) -> Result<bool, GraphError> {
    if u >= g1.n() {
        return Err(GraphError::IndexOutOfRange { index: u, n: g1.n() });
    }
    if v >= g2.n() {
        return Err(GraphError::IndexOutOfRange { index: v, n: g2.n() });
    }
    let n1 = g1.n();
    let mut edges: Vec<(usize, usize)> = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(a, b)| (a + n1, b + n1)));
    edges.push((u, n1 + v));
    let joined = Graph::from_edge_list(n1 + g2.n(), &edges).expect("join of valid graphs");

    let mut ok = true;
    for kind in [MatrixKind::SignlessLaplacian, MatrixKind::Laplacian] {
        let pg = charpoly(&joined, kind);
        let p1 = charpoly(g1, kind);
        let p2 = charpoly(g2, kind);
        let p1u = vertex_deleted_charpoly(g1, u, kind)?;
        let p2v = vertex_deleted_charpoly(g2, v, kind)?;
        let rhs = p1.mul(&p2).sub(&p1.mul(&p2v)).sub(&p2.mul(&p1u));
        ok &= pg == rhs;
    }
    Ok(ok)
}

/// Checks the pendant-attachment composition identity for both matrices.
///
/// G is h plus k pendant vertices at v; the identity states
/// `P_G = (x-1)^k * P_H - k * x * (x-1)^(k-1) * P_{H|v}`.
pub fn identity_check_pendants(h: &Graph, v: usize, k: usize) -> Result<bool, GraphError> {
    if v >= h.n() {
        return Err(GraphError::IndexOutOfRange { index: v, n: h.n() });
    }
    assert!(h.n() >= 2 && k >= 1, "need |V(h)| >= 2 and k >= 1");
    let nh = h.n();
    let mut edges: Vec<(usize, usize)> = h.edges().to_vec();
    for i in 0..k {
        edges.push((v, nh + i));
    }
    let g = Graph::from_edge_list(nh + k, &edges).expect("pendant attachment to a valid graph");

    let xm1 = IntPoly::linear(-1, 1);
    let x = IntPoly::linear(0, 1);
    let mut ok = true;
    for kind in [MatrixKind::SignlessLaplacian, MatrixKind::Laplacian] {
        let pg = charpoly(&g, kind);
        let ph = charpoly(h, kind);
        let phv = vertex_deleted_charpoly(h, v, kind)?;
        let rhs = xm1.pow(k as u32).mul(&ph).sub(
            &x.mul(&xm1.pow(k as u32 - 1))
                .scale(&BigInt::from(k))
                .mul(&phv),
        );
        ok &= pg == rhs;
    }
    Ok(ok)
}
