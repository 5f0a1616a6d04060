//! Exact verification of multiplication identities for cluster characters.
//!
//! The crate is organized bottom-up:
//!
//! * [`exactalg`] — exact scalar and Laurent-polynomial arithmetic, linear
//!   algebra over exact fields, and point-count interpolation;
//! * [`quiver`] — exchange matrices, seeds, mutation and cluster-variable
//!   enumeration for finite-type cluster algebras;
//! * [`repmod`] — finite-dimensional quiver representations: Hom/Ext spaces,
//!   extension middle terms, the AR translate and submodule Grassmannians;
//! * [`clustercat`] — two models of a 2-Calabi–Yau cluster category with a
//!   cluster-tilting object: the type-A polygon/arc model and the
//!   module-theoretic model;
//! * [`cccharacter`] — the cluster character map from objects to Laurent
//!   polynomials;
//! * [`multverify`] — stratified verification of the refined multiplication
//!   identity and its corollaries;
//! * [`specialize`] — Calabi–Yau reduction and specialization certificates;
//! * [`frieze`] — frieze enumeration, validation and lifting.

pub mod error;
pub mod exactalg;
pub mod quiver;
pub mod repmod;
pub mod clustercat;
pub mod cccharacter;
pub mod multverify;
pub mod specialize;
pub mod frieze;
pub mod textio;
