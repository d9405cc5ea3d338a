//! The eight terminal pendant-star bicyclic families, their base graphs,
//! exact closed-form signless-Laplacian polynomials (valid over documented
//! n ranges), the six difference identities between closed forms, the two
//! extremal graphs (one per parity class), and the two extremal cubics used
//! by the incidence-energy analysis.

use crate::graph::{BicyclicKind, Graph, ParityClass};
use crate::poly::IntPoly;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("order {n} too small (minimum {min})")]
    TooSmall { n: usize, min: usize },
    #[error("{what} not defined at n = {n} (needs n >= {min})")]
    OutOfRange { what: String, n: usize, min: usize },
}

/// The eight terminal families. Each is a fixed base graph plus pendant
/// vertices attached to base vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}", self.index())
    }
}

impl FromStr for Family {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Family, FamilyError> {
        match s.to_ascii_uppercase().as_str() {
            "B1" => Ok(Family::B1),
            "B2" => Ok(Family::B2),
            "B3" => Ok(Family::B3),
            "B4" => Ok(Family::B4),
            "B5" => Ok(Family::B5),
            "B6" => Ok(Family::B6),
            "B7" => Ok(Family::B7),
            "B8" => Ok(Family::B8),
            other => Err(FamilyError::InvalidSpec(format!(
                "unknown family {:?}",
                other
            ))),
        }
    }
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::B1,
        Family::B2,
        Family::B3,
        Family::B4,
        Family::B5,
        Family::B6,
        Family::B7,
        Family::B8,
    ];

    pub fn index(self) -> usize {
        match self {
            Family::B1 => 1,
            Family::B2 => 2,
            Family::B3 => 3,
            Family::B4 => 4,
            Family::B5 => 5,
            Family::B6 => 6,
            Family::B7 => 7,
            Family::B8 => 8,
        }
    }

    /// Base shape of the family.
    pub fn base_kind(self) -> BicyclicKind {
        match self {
            Family::B1 => BicyclicKind::VertexShared { p: 3, q: 3 },
            Family::B2 => BicyclicKind::VertexShared { p: 3, q: 4 },
            Family::B3 => BicyclicKind::Theta { k: 2, l: 2, m: 1 },
            Family::B4 => BicyclicKind::Theta { k: 3, l: 2, m: 1 },
            Family::B5 => BicyclicKind::Theta { k: 3, l: 2, m: 2 },
            Family::B6 => BicyclicKind::Theta { k: 3, l: 3, m: 1 },
            Family::B7 => BicyclicKind::Theta { k: 2, l: 2, m: 2 },
            Family::B8 => BicyclicKind::VertexShared { p: 4, q: 4 },
        }
    }

    /// Number of base vertices, which is also the number of pendant slots.
    pub fn base_size(self) -> usize {
        match self {
            Family::B3 => 4,
            Family::B1 | Family::B4 | Family::B7 => 5,
            Family::B2 | Family::B5 | Family::B6 => 6,
            Family::B8 => 7,
        }
    }

    /// Fixed base labeling. Vertex 0 is the hub the closed forms attach all
    /// pendants to (the shared vertex for shared-vertex bases, a branch
    /// vertex for theta bases); pendant slot letters map to vertices
    /// 0, 1, 2, ... in order.
    pub fn base_edges(self) -> &'static [(usize, usize)] {
        match self {
            Family::B1 => &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)],
            Family::B2 => &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (4, 5), (0, 5)],
            Family::B3 => &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)],
            Family::B4 => &[(0, 1), (0, 2), (2, 3), (1, 3), (0, 4), (1, 4)],
            Family::B5 => &[(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (4, 5), (1, 5)],
            Family::B6 => &[(0, 1), (0, 2), (2, 3), (1, 3), (0, 4), (4, 5), (1, 5)],
            Family::B7 => &[(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)],
            Family::B8 => &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6)],
        }
    }

    pub fn base_graph(self) -> Graph {
        Graph::from_edge_list(self.base_size(), self.base_edges()).expect("fixed base lists are valid")
    }

    /// Smallest n for which the closed-form polynomial is division-free
    /// (every binomial exponent nonnegative).
    pub fn closed_form_min_n(self) -> usize {
        match self {
            Family::B3 => 4,
            Family::B1 => 5,
            Family::B2 | Family::B4 | Family::B6 | Family::B7 => 6,
            Family::B5 => 7,
            Family::B8 => 8,
        }
    }

    /// The all-pendants-at-the-hub configuration of total order n.
    pub fn hub_spec(self, n: usize) -> Result<FamilySpec, FamilyError> {
        let base = self.base_size();
        if n < base {
            return Err(FamilyError::TooSmall { n, min: base });
        }
        let mut pendants = vec![0usize; base];
        pendants[0] = n - base;
        Ok(FamilySpec {
            family: self,
            pendants,
        })
    }
}

/// Shape descriptor for a bicyclic base graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSpec {
    pub kind: BicyclicKind,
}

impl BaseSpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        match self.kind {
            BicyclicKind::VertexShared { p, q } => {
                if p < 3 || q < 3 {
                    return Err(FamilyError::InvalidSpec(format!(
                        "shared-vertex base needs cycle lengths >= 3, got ({}, {})",
                        p, q
                    )));
                }
            }
            BicyclicKind::PathJoined { p, l, q } => {
                if p < 3 || q < 3 || l < 1 {
                    return Err(FamilyError::InvalidSpec(format!(
                        "path-joined base needs cycles >= 3 and path >= 1, got ({}, {}, {})",
                        p, l, q
                    )));
                }
            }
            BicyclicKind::Theta { k, l, m } => {
                let ones = [k, l, m].iter().filter(|&&x| x == 1).count();
                if !(k >= l && l >= m && m >= 1 && ones <= 1) {
                    return Err(FamilyError::InvalidSpec(format!(
                        "theta base needs k >= l >= m >= 1 with at most one length 1, got ({}, {}, {})",
                        k, l, m
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Builds a base graph with a deterministic labeling:
/// - shared-vertex `B(p,q)`: shared vertex 0; first cycle 0..p-1; second
///   cycle 0, p, ..., p+q-2.
/// - path-joined `B(p,l,q)`: first cycle 0..p-1; second cycle p..p+q-1;
///   connecting path from 0 to p through internal vertices p+q, ...
/// - theta `(k,l,m)`: branch vertices 0 and 1; paths laid out in order k,
///   l, m with internal vertices numbered consecutively from 2.
pub fn build_base(spec: &BaseSpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let n;
    match spec.kind {
        BicyclicKind::VertexShared { p, q } => {
            n = p + q - 1;
            for i in 0..p {
                edges.push((i, (i + 1) % p));
            }
            // Second cycle over 0, p, p+1, ..., p+q-2.
            let cyc: Vec<usize> = std::iter::once(0).chain(p..p + q - 1).collect();
            for i in 0..q {
                edges.push((cyc[i], cyc[(i + 1) % q]));
            }
        }
        BicyclicKind::PathJoined { p, l, q } => {
            n = p + q + l - 1;
            for i in 0..p {
                edges.push((i, (i + 1) % p));
            }
            for i in 0..q {
                edges.push((p + i, p + (i + 1) % q));
            }
            // Path 0 .. p with l edges; internal vertices p+q .. p+q+l-2.
            let mut prev = 0;
            for t in 0..l - 1 {
                edges.push((prev, p + q + t));
                prev = p + q + t;
            }
            edges.push((prev, p));
        }
        BicyclicKind::Theta { k, l, m } => {
            n = k + l + m - 1;
            let mut next = 2;
            for len in [k, l, m] {
                let mut prev = 0;
                for _ in 0..len - 1 {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push((prev, 1));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
        .map_err(|e| FamilyError::InvalidSpec(format!("base construction failed: {}", e)))
}

/// A family member: the base graph plus `pendants[i]` pendant vertices
/// attached to base vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub pendants: Vec<usize>,
}

impl FamilySpec {
    pub fn total_order(&self) -> usize {
        self.family.base_size() + self.pendants.iter().sum::<usize>()
    }
}

/// Builds a family member. Pendant vertices are labeled after the base, in
/// slot order: slot 0's pendants first, then slot 1's, and so on.
pub fn build_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let base_n = spec.family.base_size();
    if spec.pendants.len() != base_n {
        return Err(FamilyError::InvalidSpec(format!(
            "{} takes {} pendant counts, got {}",
            spec.family,
            base_n,
            spec.pendants.len()
        )));
    }
    let mut edges = spec.family.base_edges().to_vec();
    let mut next = base_n;
    for (slot, &count) in spec.pendants.iter().enumerate() {
        for _ in 0..count {
            edges.push((slot, next));
            next += 1;
        }
    }
    Graph::from_edge_list(next, &edges)
        .map_err(|e| FamilyError::InvalidSpec(format!("family construction failed: {}", e)))
}

/// The verified coefficient minimizer of each parity class: all pendants at
/// the hub of the smallest odd base (for the odd class, n >= 4) or of the
/// even base (for the even class, n >= 5).
pub fn extremal_graph(n: usize, class: ParityClass) -> Result<Graph, FamilyError> {
    let (family, min) = match class {
        ParityClass::OddClass => (Family::B3, 4),
        ParityClass::EvenClass => (Family::B7, 5),
    };
    if n < min {
        return Err(FamilyError::TooSmall { n, min });
    }
    let mut pendants = vec![0usize; family.base_size()];
    pendants[0] = n - min;
    build_family(&FamilySpec { family, pendants })
}

fn xm(c: i64) -> IntPoly {
    IntPoly::linear(-c, 1)
}

/// Exact closed-form signless-Laplacian characteristic polynomial of the
/// all-pendants-at-the-hub member of `family` with n vertices. Defined for
/// n >= `closed_form_min_n` so that every binomial exponent is nonnegative.
pub fn closed_form_poly(family: Family, n: usize) -> Result<IntPoly, FamilyError> {
    let min = family.closed_form_min_n();
    if n < min {
        return Err(FamilyError::OutOfRange {
            what: format!("closed form for {}", family),
            n,
            min,
        });
    }
    let nn = n as i64;
    let x = IntPoly::linear(0, 1);
    let p = match family {
        Family::B1 => xm(1)
            .pow((n - 4) as u32)
            .mul(&xm(3))
            .mul(&IntPoly::from_i64(&[-8, 3 * nn, -(nn + 3), 1])),
        Family::B2 => xm(1).pow((n - 6) as u32).mul(&xm(2)).mul(&IntPoly::from_i64(&[
            -8,
            2 * (3 * nn + 8),
            -2 * (7 * nn - 1),
            7 * (nn + 1),
            -(nn + 6),
            1,
        ])),
        Family::B3 => xm(1)
            .pow((n - 4) as u32)
            .mul(&xm(2))
            .mul(&IntPoly::from_i64(&[-8, 4 * nn, -(nn + 4), 1])),
        Family::B4 => xm(1).pow((n - 6) as u32).mul(&IntPoly::from_i64(&[
            16,
            -(11 * nn + 32),
            31 * nn + 10,
            -(27 * nn + 10),
            9 * (nn + 2),
            -(nn + 8),
            1,
        ])),
        Family::B5 => xm(1).pow((n - 7) as u32).mul(&xm(2)).mul(&IntPoly::from_i64(&[
            8,
            -(8 * nn + 8),
            27 * nn - 30,
            -(26 * nn - 22),
            9 * nn + 8,
            -(nn + 7),
            1,
        ])),
        Family::B6 => x
            .mul(&xm(1).pow((n - 6) as u32))
            .mul(&xm(3))
            .mul(&IntPoly::from_i64(&[
                5 * nn,
                -(13 * nn - 17),
                7 * nn - 1,
                -(nn + 5),
                1,
            ])),
        Family::B7 => x
            .mul(&xm(1).pow((n - 6) as u32))
            .mul(&xm(2).pow(2))
            .mul(&IntPoly::from_i64(&[-3 * nn, 5 * nn - 2, -(nn + 4), 1])),
        Family::B8 => x
            .mul(&xm(1).pow((n - 8) as u32))
            .mul(&xm(2).pow(2))
            .mul(&IntPoly::from_i64(&[2, -4, 1]))
            .mul(&IntPoly::from_i64(&[
                -2 * nn,
                2 * (2 * nn - 3),
                -(nn + 2),
                1,
            ])),
    };
    debug_assert_eq!(p.degree(), Some(n));
    debug_assert!(p.is_monic());
    Ok(p)
}

/// Which two families each difference identity subtracts.
pub fn difference_families(eq: usize) -> Option<(Family, Family)> {
    match eq {
        1 => Some((Family::B1, Family::B3)),
        2 => Some((Family::B2, Family::B4)),
        3 => Some((Family::B4, Family::B3)),
        4 => Some((Family::B5, Family::B3)),
        5 => Some((Family::B8, Family::B6)),
        6 => Some((Family::B6, Family::B7)),
        _ => None,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DifferenceIdentity {
    pub eq: usize,
    pub n: usize,
    /// Difference of the two closed forms.
    pub lhs: IntPoly,
    /// The factored right-hand side, expanded exactly.
    pub rhs: IntPoly,
}

/// Evaluates difference identity `eq` (1..=6) at order n: lhs is the
/// difference of the two involved closed forms, rhs the published factored
/// form. Valid for n at or above both families' closed-form minima.
pub fn difference_identity(eq: usize, n: usize) -> Result<DifferenceIdentity, FamilyError> {
    let (fa, fb) = difference_families(eq).ok_or_else(|| {
        FamilyError::InvalidSpec(format!("difference identity index {} (valid: 1..=6)", eq))
    })?;
    let min = fa.closed_form_min_n().max(fb.closed_form_min_n());
    if n < min {
        return Err(FamilyError::OutOfRange {
            what: format!("difference identity {}", eq),
            n,
            min,
        });
    }
    let lhs = closed_form_poly(fa, n)?.sub(&closed_form_poly(fb, n)?);
    let nn = n as i64;
    let x = IntPoly::linear(0, 1);
    let rhs = match eq {
        1 => xm(1)
            .pow((n - 4) as u32)
            .mul(&IntPoly::from_i64(&[8, -nn, 1])),
        2 => x.mul(&xm(1).pow((n - 6) as u32)).mul(&IntPoly::from_i64(&[
            -(nn + 8),
            3 * nn + 2,
            -(nn + 2),
            1,
        ])),
        3 => x.mul(&xm(1).pow((n - 6) as u32)).mul(&IntPoly::from_i64(&[
            -(3 * nn - 8),
            9 * nn - 30,
            -(6 * nn - 20),
            nn - 3,
        ])),
        4 => x
            .mul(&xm(2))
            .mul(&xm(1).pow((n - 7) as u32))
            .mul(&IntPoly::from_i64(&[
                -(4 * nn - 16),
                14 * nn - 58,
                -(11 * nn - 43),
                2 * nn - 7,
            ])),
        5 => x.mul(&xm(1).pow((n - 8) as u32)).mul(&IntPoly::from_i64(&[
            -nn,
            3 * (2 * nn + 1),
            -(11 * nn - 6),
            6 * nn + 1,
            -(nn + 4),
            1,
        ])),
        6 => x.mul(&xm(1).pow((n - 6) as u32)).mul(&IntPoly::from_i64(&[
            -3 * nn,
            12 * nn - 43,
            -(7 * nn - 28),
            nn - 4,
        ])),
        _ => unreachable!(),
    };
    Ok(DifferenceIdentity { eq, n, lhs, rhs })
}

/// The two cubics whose roots drive the incidence-energy closed forms:
/// `x^3 - (n+4)x^2 + 4n x - 8` (odd-class extremal graph) and
/// `x^3 - (n+4)x^2 + (5n-2)x - 3n` (even-class extremal graph).
pub fn extremal_cubics(n: usize) -> (IntPoly, IntPoly) {
    assert!(n >= 5, "extremal cubics defined for n >= 5");
    let nn = n as i64;
    (
        IntPoly::from_i64(&[-8, 4 * nn, -(nn + 4), 1]),
        IntPoly::from_i64(&[-3 * nn, 5 * nn - 2, -(nn + 4), 1]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::signless_coeffs_oracle;
    use crate::poly::{coeff_vector, signless_charpoly, MatrixKind};

    #[test]
    fn base_shapes() {
        let bowtie = build_base(&BaseSpec {
            kind: BicyclicKind::VertexShared { p: 3, q: 3 },
        })
        .unwrap();
        assert_eq!((bowtie.n(), bowtie.m()), (5, 6));
        assert_eq!(
            bowtie.canonical_form().unwrap(),
            Family::B1.base_graph().canonical_form().unwrap()
        );

        let k4e = build_base(&BaseSpec {
            kind: BicyclicKind::Theta { k: 2, l: 2, m: 1 },
        })
        .unwrap();
        assert_eq!(
            k4e.canonical_form().unwrap(),
            Family::B3.base_graph().canonical_form().unwrap()
        );

        let k23 = build_base(&BaseSpec {
            kind: BicyclicKind::Theta { k: 2, l: 2, m: 2 },
        })
        .unwrap();
        let direct = Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(
            k23.canonical_form().unwrap(),
            direct.canonical_form().unwrap()
        );

        // Every family base matches its generic construction up to
        // isomorphism and classifies as its declared kind.
        for fam in Family::ALL {
            let base = fam.base_graph();
            let generic = build_base(&BaseSpec {
                kind: fam.base_kind(),
            })
            .unwrap();
            assert_eq!(
                base.canonical_form().unwrap(),
                generic.canonical_form().unwrap(),
                "{}",
                fam
            );
            assert_eq!(base.classify_bicyclic().unwrap().kind, fam.base_kind());
        }
    }

    #[test]
    fn invalid_specs() {
        assert!(build_base(&BaseSpec {
            kind: BicyclicKind::VertexShared { p: 2, q: 3 },
        })
        .is_err());
        assert!(build_base(&BaseSpec {
            kind: BicyclicKind::Theta { k: 2, l: 1, m: 1 },
        })
        .is_err());
        assert!(build_base(&BaseSpec {
            kind: BicyclicKind::Theta { k: 1, l: 2, m: 3 },
        })
        .is_err());
        assert!(build_family(&FamilySpec {
            family: Family::B3,
            pendants: vec![1, 0, 0],
        })
        .is_err());
    }

    #[test]
    fn family_members() {
        let b51 = build_family(&FamilySpec {
            family: Family::B3,
            pendants: vec![1, 0, 0, 0],
        })
        .unwrap();
        assert_eq!((b51.n(), b51.m()), (5, 6));
        use num::ToPrimitive;
        let v: Vec<i64> = signless_coeffs_oracle(&b51)
            .unwrap()
            .values()
            .iter()
            .map(|x| x.to_i64().unwrap())
            .collect();
        assert_eq!(v, vec![1, 12, 49, 86, 64, 16]);

        let bowtie = build_family(&FamilySpec {
            family: Family::B1,
            pendants: vec![0; 5],
        })
        .unwrap();
        assert_eq!(bowtie, Family::B1.base_graph());
    }

    #[test]
    fn extremal_graphs() {
        assert_eq!(
            extremal_graph(4, ParityClass::OddClass)
                .unwrap()
                .canonical_form()
                .unwrap(),
            Family::B3.base_graph().canonical_form().unwrap()
        );
        assert_eq!(
            extremal_graph(5, ParityClass::EvenClass)
                .unwrap()
                .canonical_form()
                .unwrap(),
            Family::B7.base_graph().canonical_form().unwrap()
        );
        let g7 = extremal_graph(7, ParityClass::OddClass).unwrap();
        assert_eq!((g7.n(), g7.m()), (7, 8));
        assert_eq!(
            extremal_graph(3, ParityClass::OddClass),
            Err(FamilyError::TooSmall { n: 3, min: 4 })
        );
        assert_eq!(
            extremal_graph(4, ParityClass::EvenClass),
            Err(FamilyError::TooSmall { n: 4, min: 5 })
        );
    }

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(
            closed_form_poly(Family::B3, 5).unwrap(),
            IntPoly::from_i64(&[-16, 64, -86, 49, -12, 1])
        );
        assert_eq!(
            closed_form_poly(Family::B1, 5).unwrap(),
            IntPoly::from_i64(&[-24, 77, -92, 50, -12, 1])
        );
        assert_eq!(
            closed_form_poly(Family::B3, 4).unwrap(),
            IntPoly::from_i64(&[16, -40, 32, -10, 1])
        );
        assert!(matches!(
            closed_form_poly(Family::B7, 5),
            Err(FamilyError::OutOfRange { .. })
        ));
    }

    #[test]
    fn closed_forms_match_charpoly_small() {
        for fam in Family::ALL {
            let min = fam.closed_form_min_n();
            for n in min..=min + 2 {
                let spec = fam.hub_spec(n).unwrap();
                let g = build_family(&spec).unwrap();
                let direct = signless_charpoly(&g);
                let closed = closed_form_poly(fam, n).unwrap();
                assert_eq!(direct, closed, "{} at n={}", fam, n);
                coeff_vector(&closed, MatrixKind::SignlessLaplacian).unwrap();
            }
        }
    }

    #[test]
    fn difference_identity_spot() {
        let d = difference_identity(1, 5).unwrap();
        assert_eq!(d.lhs, IntPoly::from_i64(&[-8, 13, -6, 1]));
        assert_eq!(d.lhs, d.rhs);
        assert!(matches!(
            difference_identity(1, 4),
            Err(FamilyError::OutOfRange { .. })
        ));
        assert!(difference_identity(7, 10).is_err());
        for eq in 1..=6 {
            let (fa, fb) = difference_families(eq).unwrap();
            let min = fa.closed_form_min_n().max(fb.closed_form_min_n());
            for n in min..=min + 3 {
                let d = difference_identity(eq, n).unwrap();
                assert_eq!(d.lhs, d.rhs, "eq {} at n={}", eq, n);
            }
        }
    }

    #[test]
    fn extremal_cubic_values() {
        let (a, b) = extremal_cubics(5);
        assert_eq!(a, IntPoly::from_i64(&[-8, 20, -9, 1]));
        assert_eq!(b, IntPoly::from_i64(&[-15, 23, -9, 1]));
        let (a, b) = extremal_cubics(31);
        assert_eq!(a, IntPoly::from_i64(&[-8, 124, -35, 1]));
        assert_eq!(b, IntPoly::from_i64(&[-93, 153, -35, 1]));
    }

    #[test]
    fn spec_serialization() {
        let spec = FamilySpec {
            family: Family::B3,
            pendants: vec![1, 0, 0, 0],
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"family":"B3","pendants":[1,0,0,0]}"#);
        let back: FamilySpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
    }
}
