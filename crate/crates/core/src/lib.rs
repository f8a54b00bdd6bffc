//! Symbolic engine for generalized dendriform algebras.
//!
//! The crate works with multilinear relations over binary operation
//! signatures and with finite-dimensional algebras given by structure
//! constants, everything over exact rationals. The main pipelines are:
//!
//! * [`term`] — free multilinear monomials and canonical relations;
//! * [`relspace`] — exact linear algebra on spans of relations, weight
//!   filtrations and lowest-weight generators;
//! * [`dendrify`] — the substitution engines producing dendriform,
//!   tridendriform and polarized dendriform relation sets;
//! * [`polarize`] — polarization/depolarization of relations, both for
//!   one-product algebras and for dendriform pairs;
//! * [`fd`] — finite-dimensional algebras, relation checking, commutants
//!   and product transforms;
//! * [`operators`] — Rota-Baxter and related operators, curved systems,
//!   splittings and the algebras they induce;
//! * [`bialgebra`] — tensor computations for infinitesimal bialgebras;
//! * [`gradings`] — truncated deformations, filtered algebras and their
//!   infinitesimal algebras;
//! * [`catalog`] — named relation sets and fixture algebras.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be used concurrently. With the default `parallel`
//! feature the exhaustive basis-tuple checks and the bounded searches run
//! on a rayon pool; disabling the feature gives a fully sequential build
//! with identical results.

pub mod bialgebra;
pub mod catalog;
pub mod dendrify;
pub mod fd;
pub mod gradings;
pub mod operators;
pub mod parallel;
pub mod polarize;
pub mod rational;
pub mod relspace;
pub mod search;
pub mod term;

pub use rational::Q;
