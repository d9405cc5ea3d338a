//! Exact-arithmetic toolkit for Laplacian and signless-Laplacian coefficient
//! analysis of small graphs, with a focus on bicyclic graphs.
//!
//! The library computes the coefficient vectors of `det(xI - Q)` and
//! `det(xI - L)` two independent ways (a combinatorial spanning-substructure
//! oracle and an exact characteristic polynomial), provides the
//! coefficient-decreasing graph transformations used to prove extremality of
//! two pendant-star bicyclic families, enumerates all bicyclic graphs of a
//! given order up to isomorphism, and evaluates incidence energy with
//! certified floating-point tolerances.
//!
//! All coefficient arithmetic is exact (`BigInt` / `BigRational`); floating
//! point appears only in the spectral module and is always accompanied by an
//! explicit residual or interval check.

#![forbid(unsafe_code)]

pub mod enumerate;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod poly;
pub mod spectral;
pub mod transforms;
