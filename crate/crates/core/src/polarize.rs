//! Polarization and depolarization of relations.
//!
//! Four substitution homomorphisms on relation terms, the arrows of the
//! commutative square between one-product relations, polarized relations,
//! dendriform relations and polarized dendriform relations:
//!
//! * [`polarize_relation`]: `ab -> a.b + [a,b]` (one plain product to the
//!   commutative/anticommutative pair);
//! * [`depolarize_relation`]: `a.b -> (ab + ba)/2`, `[a,b] -> (ab - ba)/2`;
//! * [`polarize_dendriform`]: `a prec b -> b star a - b circ a`,
//!   `a succ b -> a star b + a circ b` (tridendriform `dot` to
//!   `bar + box`);
//! * [`depolarize_dendriform`]: `a star b -> (a succ b + b prec a)/2`,
//!   `a circ b -> (a succ b - b prec a)/2` (and `bar`/`box` back to the
//!   symmetrized `dot` halves).
//!
//! Algebra-level polarization (on structure constants) lives in the
//! finite-dimensional module's product transforms, keeping the symbolic
//! and numeric layers separate.

use num_traits::One;
use thiserror::Error;

use crate::rational::{qr, Q};
use crate::term::{Relation, RelationSet, Signature, Symmetry, TermError, Tree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolarizeError {
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error(transparent)]
    Term(#[from] TermError),
}

fn single_plain_op(sig: &Signature) -> Result<String, PolarizeError> {
    if sig.ops().len() == 1 && sig.ops()[0].symmetry == Symmetry::None {
        Ok(sig.ops()[0].name.clone())
    } else {
        Err(PolarizeError::SignatureMismatch(
            "polarization needs a single plain operation".into(),
        ))
    }
}

fn polarized_ops(sig: &Signature) -> Result<(String, String), PolarizeError> {
    let comm: Vec<_> = sig.ops().iter().filter(|o| o.symmetry == Symmetry::Commutative).collect();
    let anti: Vec<_> =
        sig.ops().iter().filter(|o| o.symmetry == Symmetry::Anticommutative).collect();
    if sig.ops().len() == 2 && comm.len() == 1 && anti.len() == 1 {
        Ok((comm[0].name.clone(), anti[0].name.clone()))
    } else {
        Err(PolarizeError::SignatureMismatch(
            "depolarization needs one commutative and one anticommutative operation".into(),
        ))
    }
}

fn n(op: &str, l: &Tree, r: &Tree) -> (Q, Tree) {
    (Q::one(), Tree::node(op, l.clone(), r.clone()))
}

fn sn(c: Q, op: &str, l: &Tree, r: &Tree) -> (Q, Tree) {
    (c, Tree::node(op, l.clone(), r.clone()))
}

/// `ab -> a dot b + br(a, b)` into the polarized signature.
pub fn polarize_relation(rel: &Relation) -> Result<Relation, PolarizeError> {
    single_plain_op(rel.signature())?;
    let target = Signature::polarized();
    Ok(rel.substitute(&target, &|_, l, r| vec![n("dot", l, r), n("br", l, r)])?)
}

/// `a dot b -> (ab + ba)/2`, `br(a,b) -> (ab - ba)/2` into one plain `mu`.
pub fn depolarize_relation(rel: &Relation) -> Result<Relation, PolarizeError> {
    let (dot, br) = polarized_ops(rel.signature())?;
    let target = Signature::single_plain();
    let half = qr(1, 2);
    Ok(rel.substitute(&target, &|op, l, r| {
        if op == dot {
            vec![sn(half.clone(), "mu", l, r), sn(half.clone(), "mu", r, l)]
        } else if op == br {
            vec![sn(half.clone(), "mu", l, r), sn(-half.clone(), "mu", r, l)]
        } else {
            unreachable!("validated signature")
        }
    })?)
}

/// Relation-level polarization of (tri)dendriform relations:
/// `a prec b -> b star a - b circ a`, `a succ b -> a star b + a circ b`,
/// and for the tridendriform `dot` also `a dot b -> a bar b + a box b`.
pub fn polarize_dendriform(rel: &Relation) -> Result<Relation, PolarizeError> {
    let (target, tri) = if rel.signature() == &Signature::dendriform() {
        (Signature::polarized_dendriform(), false)
    } else if rel.signature() == &Signature::tridendriform() {
        (Signature::polarized_tridendriform(), true)
    } else {
        return Err(PolarizeError::SignatureMismatch(
            "dendriform polarization needs the prec/succ(/dot) signature".into(),
        ));
    };
    Ok(rel.substitute(&target, &|op, l, r| match op {
        "prec" => vec![n("star", r, l), sn(-Q::one(), "circ", r, l)],
        "succ" => vec![n("star", l, r), n("circ", l, r)],
        _ if tri => vec![n("bar", l, r), n("box", l, r)],
        _ => unreachable!("validated signature"),
    })?)
}

/// Inverse of [`polarize_dendriform`]:
/// `a star b -> (a succ b + b prec a)/2`, `a circ b -> (a succ b - b prec
/// a)/2`, `bar`/`box` to the symmetric/antisymmetric halves of `dot`.
pub fn depolarize_dendriform(rel: &Relation) -> Result<Relation, PolarizeError> {
    let (target, tri) = if rel.signature() == &Signature::polarized_dendriform() {
        (Signature::dendriform(), false)
    } else if rel.signature() == &Signature::polarized_tridendriform() {
        (Signature::tridendriform(), true)
    } else {
        return Err(PolarizeError::SignatureMismatch(
            "dendriform depolarization needs the star/circ(/bar/box) signature".into(),
        ));
    };
    let half = qr(1, 2);
    Ok(rel.substitute(&target, &|op, l, r| match op {
        "star" => vec![sn(half.clone(), "succ", l, r), sn(half.clone(), "prec", r, l)],
        "circ" => vec![sn(half.clone(), "succ", l, r), sn(-half.clone(), "prec", r, l)],
        "bar" if tri => vec![sn(half.clone(), "dot", l, r), sn(half.clone(), "dot", r, l)],
        "box" if tri => vec![sn(half.clone(), "dot", l, r), sn(-half.clone(), "dot", r, l)],
        _ => unreachable!("validated signature"),
    })?)
}

/// The vertical functor image for polarized dendriform relations: rewrites
/// a relation over the commutative/anticommutative pair into `star`/`circ`
/// via `a dot b -> a star b + b star a`, `br(a,b) -> a circ b - b circ a`.
pub fn vert_pol_image(rel: &Relation) -> Result<Relation, PolarizeError> {
    let (dot, br) = polarized_ops(rel.signature())?;
    let target = Signature::polarized_dendriform();
    Ok(rel.substitute(&target, &|op, l, r| {
        if op == dot {
            vec![n("star", l, r), n("star", r, l)]
        } else if op == br {
            vec![n("circ", l, r), sn(-Q::one(), "circ", r, l)]
        } else {
            unreachable!("validated signature")
        }
    })?)
}

/// The vertical functor image for plain dendriform relations: `ab -> a
/// prec b + a succ b`.
pub fn star_image(rel: &Relation) -> Result<Relation, PolarizeError> {
    single_plain_op(rel.signature())?;
    let target = Signature::dendriform();
    Ok(rel.substitute(&target, &|_, l, r| vec![n("prec", l, r), n("succ", l, r)])?)
}

fn map_set(
    rels: &RelationSet,
    suffix: &str,
    f: impl Fn(&Relation) -> Result<Relation, PolarizeError>,
) -> Result<RelationSet, PolarizeError> {
    let relations = rels.relations.iter().map(f).collect::<Result<Vec<_>, _>>()?;
    let signature = match relations.first() {
        Some(r) => r.signature().clone(),
        None => rels.signature.clone(),
    };
    Ok(RelationSet::new(&format!("{}-{}", rels.name, suffix), signature, relations)?)
}

/// Set-level wrappers.
pub fn polarize_relation_set(rels: &RelationSet) -> Result<RelationSet, PolarizeError> {
    map_set(rels, "pol", polarize_relation)
}

pub fn depolarize_relation_set(rels: &RelationSet) -> Result<RelationSet, PolarizeError> {
    map_set(rels, "depol", depolarize_relation)
}

pub fn polarize_dendriform_set(rels: &RelationSet) -> Result<RelationSet, PolarizeError> {
    map_set(rels, "pol", polarize_dendriform)
}

pub fn depolarize_dendriform_set(rels: &RelationSet) -> Result<RelationSet, PolarizeError> {
    map_set(rels, "depol", depolarize_dendriform)
}
