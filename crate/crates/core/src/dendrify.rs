//! Dendrification and tridendrification of multilinear relation sets.
//!
//! The engine evaluates a relation on tagged pairs: every variable is
//! placed either in the `A0` copy or the `A1` copy of `A x A` and the
//! products are expanded by the component tables of the pair product
//! (plain form) or of the polarized pair products (polarized form). The
//! `A1` component of the result is the dendriform relation belonging to
//! that slot assignment.
//!
//! Plain form, one source product, target `prec`/`succ` (and `dot` for the
//! tridendriform variant):
//!
//! ```text
//!   a0 * b0 = (a prec b + a succ b [+ a dot b])0
//!   a0 * b1 = (a succ b)1        a1 * b0 = (a prec b)1
//!   a1 * b1 = zero               [tridend: (a dot b)1]
//! ```
//!
//! Polarized form, commutative source product to `star` (plus commutative
//! `bar` for tridendriform), anticommutative source product to `circ`
//! (plus anticommutative `box`):
//!
//! ```text
//!   a0 . b0 = (a star b + b star a [+ a bar b])0
//!   a0 . b1 = (a star b)1        a1 . b0 = (b star a)1
//!   a1 . b1 = zero               [tridend: (a bar b)1]
//!   [a0,b0] = (a circ b - b circ a [+ a box b])0
//!   [a0,b1] = (a circ b)1        [a1,b0] = -(b circ a)1
//!   [a1,b1] = zero               [tridend: (a box b)1]
//! ```

use std::collections::BTreeSet;

use num_traits::One;
use thiserror::Error;

use crate::rational::{q, Q};
use crate::relspace::minimal_generators;
use crate::term::{Relation, RelationSet, Signature, Symmetry, TermError, Tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Dend,
    Tridend,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Plain,
    Polarized,
}

/// Selects the substitution engine and fixes the target signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DendrifyConfig {
    pub variant: Variant,
    pub form: Form,
}

impl DendrifyConfig {
    pub fn new(variant: Variant, form: Form) -> Self {
        DendrifyConfig { variant, form }
    }

    pub fn plain_dend() -> Self {
        Self::new(Variant::Dend, Form::Plain)
    }

    pub fn plain_tridend() -> Self {
        Self::new(Variant::Tridend, Form::Plain)
    }

    pub fn polarized_dend() -> Self {
        Self::new(Variant::Dend, Form::Polarized)
    }

    pub fn polarized_tridend() -> Self {
        Self::new(Variant::Tridend, Form::Polarized)
    }

    pub fn target_signature(&self) -> Signature {
        match (self.form, self.variant) {
            (Form::Plain, Variant::Dend) => Signature::dendriform(),
            (Form::Plain, Variant::Tridend) => Signature::tridendriform(),
            (Form::Polarized, Variant::Dend) => Signature::polarized_dendriform(),
            (Form::Polarized, Variant::Tridend) => Signature::polarized_tridendriform(),
        }
    }

    /// Checks the source signature fits the form: one plain operation, or
    /// exactly one commutative plus one anticommutative operation.
    pub fn validate_source(&self, sig: &Signature) -> Result<SourceOps, DendrifyError> {
        match self.form {
            Form::Plain => {
                if sig.ops().len() == 1 && sig.ops()[0].symmetry == Symmetry::None {
                    Ok(SourceOps { product: sig.ops()[0].name.clone(), bracket: None })
                } else {
                    Err(DendrifyError::SignatureMismatch(
                        "plain dendrification needs a single plain operation".into(),
                    ))
                }
            }
            Form::Polarized => {
                let comm: Vec<_> = sig
                    .ops()
                    .iter()
                    .filter(|o| o.symmetry == Symmetry::Commutative)
                    .collect();
                let anti: Vec<_> = sig
                    .ops()
                    .iter()
                    .filter(|o| o.symmetry == Symmetry::Anticommutative)
                    .collect();
                if sig.ops().len() == 2 && comm.len() == 1 && anti.len() == 1 {
                    Ok(SourceOps {
                        product: comm[0].name.clone(),
                        bracket: Some(anti[0].name.clone()),
                    })
                } else {
                    Err(DendrifyError::SignatureMismatch(
                        "polarized dendrification needs one commutative and one anticommutative operation"
                            .into(),
                    ))
                }
            }
        }
    }
}

/// Resolved source operations: the product and, in polarized form, the
/// anticommutative bracket.
pub struct SourceOps {
    #[allow(dead_code)]
    product: String,
    bracket: Option<String>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DendrifyError {
    #[error("slot set is empty")]
    EmptySlots,
    #[error("slot index {0} out of range for a {1}-variable relation")]
    SlotOutOfRange(usize, usize),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error(transparent)]
    Term(#[from] TermError),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Component {
    A0,
    A1,
    Zero,
}

struct Tagged {
    component: Component,
    payload: Vec<(Q, Tree)>,
}

impl Tagged {
    fn zero() -> Tagged {
        Tagged { component: Component::Zero, payload: Vec::new() }
    }
}

fn cross(
    l: &[(Q, Tree)],
    r: &[(Q, Tree)],
    make: impl Fn(&Tree, &Tree) -> Vec<(Q, Tree)>,
) -> Vec<(Q, Tree)> {
    let mut out = Vec::new();
    for (cl, tl) in l {
        for (cr, tr) in r {
            for (c, t) in make(tl, tr) {
                out.push((cl * cr * &c, t));
            }
        }
    }
    out
}

fn node(op: &str, l: &Tree, r: &Tree) -> (Q, Tree) {
    (Q::one(), Tree::node(op, l.clone(), r.clone()))
}

fn neg_node(op: &str, l: &Tree, r: &Tree) -> (Q, Tree) {
    (-q(1), Tree::node(op, l.clone(), r.clone()))
}

fn combine(cfg: &DendrifyConfig, ops: &SourceOps, src_op: &str, l: &Tagged, r: &Tagged) -> Tagged {
    use Component::*;
    if l.component == Zero || r.component == Zero {
        return Tagged::zero();
    }
    let tri = cfg.variant == Variant::Tridend;
    let is_bracket = ops.bracket.as_deref() == Some(src_op);
    let (component, payload) = match (cfg.form, is_bracket, l.component, r.component) {
        (Form::Plain, _, A0, A0) => (
            A0,
            cross(&l.payload, &r.payload, |a, b| {
                let mut v = vec![node("prec", a, b), node("succ", a, b)];
                if tri {
                    v.push(node("dot", a, b));
                }
                v
            }),
        ),
        (Form::Plain, _, A0, A1) => {
            (A1, cross(&l.payload, &r.payload, |a, b| vec![node("succ", a, b)]))
        }
        (Form::Plain, _, A1, A0) => {
            (A1, cross(&l.payload, &r.payload, |a, b| vec![node("prec", a, b)]))
        }
        (Form::Plain, _, A1, A1) => {
            if tri {
                (A1, cross(&l.payload, &r.payload, |a, b| vec![node("dot", a, b)]))
            } else {
                return Tagged::zero();
            }
        }
        (Form::Polarized, false, A0, A0) => (
            A0,
            cross(&l.payload, &r.payload, |a, b| {
                let mut v = vec![node("star", a, b), node("star", b, a)];
                if tri {
                    v.push(node("bar", a, b));
                }
                v
            }),
        ),
        (Form::Polarized, false, A0, A1) => {
            (A1, cross(&l.payload, &r.payload, |a, b| vec![node("star", a, b)]))
        }
        (Form::Polarized, false, A1, A0) => {
            (A1, cross(&l.payload, &r.payload, |a, b| vec![node("star", b, a)]))
        }
        (Form::Polarized, false, A1, A1) => {
            if tri {
                (A1, cross(&l.payload, &r.payload, |a, b| vec![node("bar", a, b)]))
            } else {
                return Tagged::zero();
            }
        }
        (Form::Polarized, true, A0, A0) => (
            A0,
            cross(&l.payload, &r.payload, |a, b| {
                let mut v = vec![node("circ", a, b), neg_node("circ", b, a)];
                if tri {
                    v.push(node("box", a, b));
                }
                v
            }),
        ),
        (Form::Polarized, true, A0, A1) => {
            (A1, cross(&l.payload, &r.payload, |a, b| vec![node("circ", a, b)]))
        }
        (Form::Polarized, true, A1, A0) => {
            (A1, cross(&l.payload, &r.payload, |a, b| vec![neg_node("circ", b, a)]))
        }
        (Form::Polarized, true, A1, A1) => {
            if tri {
                (A1, cross(&l.payload, &r.payload, |a, b| vec![node("box", a, b)]))
            } else {
                return Tagged::zero();
            }
        }
        (_, _, Zero, _) | (_, _, _, Zero) => unreachable!("handled above"),
    };
    Tagged { component, payload }
}

fn eval_tagged(cfg: &DendrifyConfig, ops: &SourceOps, tree: &Tree, a1_vars: &BTreeSet<&str>) -> Tagged {
    match tree {
        Tree::Leaf(v) => Tagged {
            component: if a1_vars.contains(v.as_str()) { Component::A1 } else { Component::A0 },
            payload: vec![(Q::one(), Tree::Leaf(v.clone()))],
        },
        Tree::Node(op, l, r) => {
            let lt = eval_tagged(cfg, ops, l, a1_vars);
            let rt = eval_tagged(cfg, ops, r, a1_vars);
            combine(cfg, ops, op, &lt, &rt)
        }
    }
}

fn slot_component(
    rel: &Relation,
    a1_slots: &BTreeSet<usize>,
    cfg: &DendrifyConfig,
    want: Component,
) -> Result<Relation, DendrifyError> {
    let ops = cfg.validate_source(rel.signature())?;
    let n = rel.variables().len();
    for &s in a1_slots {
        if s >= n {
            return Err(DendrifyError::SlotOutOfRange(s, n));
        }
    }
    let a1_vars: BTreeSet<&str> = a1_slots.iter().map(|&s| rel.variables()[s].as_str()).collect();
    let target = cfg.target_signature();
    let mut raw: Vec<(Q, Tree)> = Vec::new();
    for (m, c) in rel.terms() {
        let tagged = eval_tagged(cfg, &ops, m.tree(), &a1_vars);
        if tagged.component == want {
            for (k, t) in tagged.payload {
                raw.push((c * &k, t));
            }
        }
    }
    if raw.is_empty() {
        let names: Vec<&str> = rel.variables().iter().map(|s| s.as_str()).collect();
        return Ok(Relation::zero(&target, &names));
    }
    Ok(reambient(Relation::new(&target, raw)?, rel.variables()))
}

fn reambient(rel: Relation, vars: &[String]) -> Relation {
    if rel.is_zero() {
        let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        Relation::zero(rel.signature(), &names)
    } else {
        rel
    }
}

/// The dendriform relation obtained by substituting the variables in
/// `a1_slots` (positions into the relation's variable list) from the `A1`
/// copy and all others from `A0`, then reading off the `A1` component.
///
/// With two or more slots the result is the zero relation for the
/// dendriform variant; the tridendriform variant produces a nontrivial
/// relation for every nonempty slot set.
pub fn dendrify_slot(
    rel: &Relation,
    a1_slots: &BTreeSet<usize>,
    cfg: &DendrifyConfig,
) -> Result<Relation, DendrifyError> {
    if a1_slots.is_empty() {
        return Err(DendrifyError::EmptySlots);
    }
    slot_component(rel, a1_slots, cfg, Component::A1)
}

/// The relation with every source product replaced by the sum of target
/// products that add up to it: `prec + succ (+ dot)` in plain form, the
/// `star`/`circ` recombinations of the vertical polarized functor in
/// polarized form. This is the `A0` component of the all-`A0` substitution,
/// hence the sum of all slot relations.
pub fn star_expansion(rel: &Relation, cfg: &DendrifyConfig) -> Result<Relation, DendrifyError> {
    slot_component(rel, &BTreeSet::new(), cfg, Component::A0)
}

/// Dendrifies a whole relation set: for each relation, the single-slot
/// relations (dendriform) or all nonempty slot subsets (tridendriform; the
/// all-`A0` relation is the sum of these and is omitted). The output is
/// reduced to a minimal generating list of the permutation-closed span.
pub fn dendrify(rels: &RelationSet, cfg: &DendrifyConfig) -> Result<RelationSet, DendrifyError> {
    cfg.validate_source(&rels.signature)?;
    let mut candidates: Vec<Relation> = Vec::new();
    for rel in &rels.relations {
        let n = rel.variables().len();
        match cfg.variant {
            Variant::Dend => {
                for p in 0..n {
                    candidates.push(dendrify_slot(rel, &BTreeSet::from([p]), cfg)?);
                }
            }
            Variant::Tridend => {
                let mut subsets: Vec<BTreeSet<usize>> = (1u32..(1 << n))
                    .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
                    .collect();
                subsets.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
                for slots in subsets {
                    candidates.push(dendrify_slot(rel, &slots, cfg)?);
                }
            }
        }
    }
    let suffix = match (cfg.form, cfg.variant) {
        (Form::Plain, Variant::Dend) => "dend",
        (Form::Plain, Variant::Tridend) => "tridend",
        (Form::Polarized, Variant::Dend) => "pol-dend",
        (Form::Polarized, Variant::Tridend) => "pol-tridend",
    };
    Ok(RelationSet::new(
        &format!("{}-{}", rels.name, suffix),
        cfg.target_signature(),
        minimal_generators(&candidates),
    )?)
}

/// The symmetrization map into the polarized dendriform signature: leaves
/// stay, a commutative product expands to `star + star`-flip, the bracket
/// to `circ - circ`-flip.
pub fn phi0(rel: &Relation) -> Result<Relation, DendrifyError> {
    let ops = DendrifyConfig::polarized_dend().validate_source(rel.signature())?;
    let target = Signature::polarized_dendriform();
    Ok(rel.substitute(&target, &|op: &str, l: &Tree, r: &Tree| {
        if ops.bracket.as_deref() == Some(op) {
            vec![node("circ", l, r), neg_node("circ", r, l)]
        } else {
            vec![node("star", l, r), node("star", r, l)]
        }
    })?)
}

/// The slot map for the variable `var`: zero on monomials independent of
/// `var`, the identity on the bare leaf, and recursively
/// `phi0(other factor) star/circ phi_p(factor containing var)`, with a
/// sign when the variable sits in the left factor of a bracket.
pub fn phi_p(var: &str, rel: &Relation) -> Result<Relation, DendrifyError> {
    let ops = DendrifyConfig::polarized_dend().validate_source(rel.signature())?;
    let target = Signature::polarized_dendriform();
    let mut raw: Vec<(Q, Tree)> = Vec::new();
    for (m, c) in rel.terms() {
        for (k, t) in phi_p_tree(&ops, m.tree(), var) {
            raw.push((c * &k, t));
        }
    }
    if raw.is_empty() {
        let names: Vec<&str> = rel.variables().iter().map(|s| s.as_str()).collect();
        return Ok(Relation::zero(&target, &names));
    }
    Ok(reambient(Relation::new(&target, raw)?, rel.variables()))
}

fn phi0_tree(ops: &SourceOps, tree: &Tree) -> Vec<(Q, Tree)> {
    match tree {
        Tree::Leaf(v) => vec![(Q::one(), Tree::Leaf(v.clone()))],
        Tree::Node(op, l, r) => {
            let lt = phi0_tree(ops, l);
            let rt = phi0_tree(ops, r);
            if ops.bracket.as_deref() == Some(op.as_str()) {
                let mut out = cross(&lt, &rt, |a, b| vec![node("circ", a, b)]);
                out.extend(cross(&rt, &lt, |a, b| vec![neg_node("circ", a, b)]));
                out
            } else {
                let mut out = cross(&lt, &rt, |a, b| vec![node("star", a, b)]);
                out.extend(cross(&rt, &lt, |a, b| vec![node("star", a, b)]));
                out
            }
        }
    }
}

fn phi_p_tree(ops: &SourceOps, tree: &Tree, var: &str) -> Vec<(Q, Tree)> {
    match tree {
        Tree::Leaf(v) => {
            if v == var {
                vec![(Q::one(), Tree::Leaf(v.clone()))]
            } else {
                Vec::new()
            }
        }
        Tree::Node(op, l, r) => {
            let in_left = l.leaves().contains(&var);
            let in_right = r.leaves().contains(&var);
            if !in_left && !in_right {
                return Vec::new();
            }
            let bracket = ops.bracket.as_deref() == Some(op.as_str());
            // (Anti)commutativity moves the factor containing `var` to the
            // right, with a sign for the bracket.
            let (negate, fixed, moving): (bool, &Tree, &Tree) =
                if in_right { (false, l, r) } else { (bracket, r, l) };
            let f0 = phi0_tree(ops, fixed);
            let fp = phi_p_tree(ops, moving, var);
            let opname = if bracket { "circ" } else { "star" };
            let mut out = cross(&f0, &fp, |a, b| vec![node(opname, a, b)]);
            if negate {
                for (c, _) in &mut out {
                    *c = -c.clone();
                }
            }
            out
        }
    }
}

/// Rewrites a (tri)dendriform relation set for the commutative (`sign =
/// +1`) or anticommutative (`sign = -1`) specialization: `a succ b` becomes
/// `a times b`, `a prec b` becomes `sign * (b times a)`, and the
/// tridendriform `dot` keeps its name but becomes commutative resp.
/// anticommutative. The output is span-deduplicated.
pub fn specialize_symmetric(rels: &RelationSet, sign: i8) -> Result<RelationSet, DendrifyError> {
    let tri = if rels.signature == Signature::dendriform() {
        false
    } else if rels.signature == Signature::tridendriform() {
        true
    } else {
        return Err(DendrifyError::SignatureMismatch(
            "symmetric specialization needs the prec/succ or prec/succ/dot signature".into(),
        ));
    };
    let target = if tri {
        Signature::times_dot(if sign >= 0 {
            Symmetry::Commutative
        } else {
            Symmetry::Anticommutative
        })
    } else {
        Signature::single_times()
    };
    let s = if sign >= 0 { q(1) } else { q(-1) };
    let mut candidates = Vec::new();
    for rel in &rels.relations {
        let image = rel.substitute(&target, &|op: &str, l: &Tree, r: &Tree| match op {
            "succ" => vec![node("times", l, r)],
            "prec" => vec![(s.clone(), Tree::node("times", r.clone(), l.clone()))],
            _ => vec![node("dot", l, r)],
        })?;
        candidates.push(image);
    }
    Ok(RelationSet::new(&format!("{}-sym", rels.name), target, minimal_generators(&candidates))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relspace::{equal_spans, RelationSpan};
    use crate::term::Signature;

    fn v(s: &str) -> Tree {
        Tree::leaf(s)
    }

    fn mu(l: Tree, r: Tree) -> Tree {
        Tree::node("mu", l, r)
    }

    fn assoc() -> Relation {
        Relation::new(
            &Signature::single_plain(),
            vec![
                (q(1), mu(mu(v("a"), v("b")), v("c"))),
                (q(-1), mu(v("a"), mu(v("b"), v("c")))),
            ],
        )
        .unwrap()
    }

    fn dend(op: &str, l: Tree, r: Tree) -> Tree {
        Tree::node(op, l, r)
    }

    #[test]
    fn slot_c_of_associativity_is_dend3() {
        let cfg = DendrifyConfig::plain_dend();
        let got = dendrify_slot(&assoc(), &BTreeSet::from([2]), &cfg).unwrap();
        // (a prec b + a succ b) succ c - a succ (b succ c)
        let sig = Signature::dendriform();
        let expect = Relation::new(
            &sig,
            vec![
                (q(1), dend("succ", dend("prec", v("a"), v("b")), v("c"))),
                (q(1), dend("succ", dend("succ", v("a"), v("b")), v("c"))),
                (q(-1), dend("succ", v("a"), dend("succ", v("b"), v("c")))),
            ],
        )
        .unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn slot_a_and_b_give_dend1_and_dend2() {
        let cfg = DendrifyConfig::plain_dend();
        let sig = Signature::dendriform();
        let d1 = dendrify_slot(&assoc(), &BTreeSet::from([0]), &cfg).unwrap();
        let expect1 = Relation::new(
            &sig,
            vec![
                (q(1), dend("prec", dend("prec", v("a"), v("b")), v("c"))),
                (q(-1), dend("prec", v("a"), dend("prec", v("b"), v("c")))),
                (q(-1), dend("prec", v("a"), dend("succ", v("b"), v("c")))),
            ],
        )
        .unwrap();
        assert_eq!(d1, expect1);
        let d2 = dendrify_slot(&assoc(), &BTreeSet::from([1]), &cfg).unwrap();
        let expect2 = Relation::new(
            &sig,
            vec![
                (q(1), dend("prec", dend("succ", v("a"), v("b")), v("c"))),
                (q(-1), dend("succ", v("a"), dend("prec", v("b"), v("c")))),
            ],
        )
        .unwrap();
        assert_eq!(d2, expect2);
    }

    #[test]
    fn two_slots_vanish_for_dendriform() {
        let cfg = DendrifyConfig::plain_dend();
        let got = dendrify_slot(&assoc(), &BTreeSet::from([0, 2]), &cfg).unwrap();
        assert!(got.is_zero());
        assert_eq!(dendrify_slot(&assoc(), &BTreeSet::new(), &cfg), Err(DendrifyError::EmptySlots));
    }

    #[test]
    fn polarized_commutative_associativity_gives_zinbiel() {
        // dot(dot(a,b),c) - dot(a,dot(b,c)) with slot c:
        // (a*b + b*a)*c - a*(b*c).
        let sig = Signature::polarized();
        let dot = |l, r| Tree::node("dot", l, r);
        let rel = Relation::new(
            &sig,
            vec![
                (q(1), dot(dot(v("a"), v("b")), v("c"))),
                (q(-1), dot(v("a"), dot(v("b"), v("c")))),
            ],
        )
        .unwrap();
        let got =
            dendrify_slot(&rel, &BTreeSet::from([2]), &DendrifyConfig::polarized_dend()).unwrap();
        let tgt = Signature::polarized_dendriform();
        let star = |l, r| Tree::node("star", l, r);
        let zinbiel = Relation::new(
            &tgt,
            vec![
                (q(1), star(star(v("a"), v("b")), v("c"))),
                (q(1), star(star(v("b"), v("a")), v("c"))),
                (q(-1), star(v("a"), star(v("b"), v("c")))),
            ],
        )
        .unwrap();
        assert_eq!(got, zinbiel);
    }

    #[test]
    fn sum_of_slots_is_star_expansion() {
        let cfg = DendrifyConfig::plain_dend();
        let r = assoc();
        let mut sum = Relation::zero(&cfg.target_signature(), &["a", "b", "c"]);
        for p in 0..3 {
            sum = sum.add(&dendrify_slot(&r, &BTreeSet::from([p]), &cfg).unwrap()).unwrap();
        }
        assert_eq!(sum, star_expansion(&r, &cfg).unwrap());
    }

    #[test]
    fn tridend_all_a0_is_sum_of_all_slot_relations() {
        let cfg = DendrifyConfig::plain_tridend();
        let r = assoc();
        let mut sum = Relation::zero(&cfg.target_signature(), &["a", "b", "c"]);
        for mask in 1u32..8 {
            let slots: BTreeSet<usize> = (0..3).filter(|i| mask >> i & 1 == 1).collect();
            sum = sum.add(&dendrify_slot(&r, &slots, &cfg).unwrap()).unwrap();
        }
        assert_eq!(sum, star_expansion(&r, &cfg).unwrap());
    }

    #[test]
    fn dendrify_associativity_yields_three_independent_relations() {
        let set =
            RelationSet::new("associative", Signature::single_plain(), vec![assoc()]).unwrap();
        let out = dendrify(&set, &DendrifyConfig::plain_dend()).unwrap();
        assert_eq!(out.relations.len(), 3);
        assert_eq!(out.signature, Signature::dendriform());
    }

    #[test]
    fn phi_examples() {
        let sig = Signature::polarized();
        let dot = |l, r| Tree::node("dot", l, r);
        let br = |l, r| Tree::node("br", l, r);
        let star = |l, r| Tree::node("star", l, r);
        let circ = |l, r| Tree::node("circ", l, r);
        let tgt = Signature::polarized_dendriform();

        // phi0(a.b) = a*b + b*a
        let ab = Relation::new(&sig, vec![(q(1), dot(v("a"), v("b")))]).unwrap();
        let expect =
            Relation::new(&tgt, vec![(q(1), star(v("a"), v("b"))), (q(1), star(v("b"), v("a")))])
                .unwrap();
        assert_eq!(phi0(&ab).unwrap(), expect);

        // phi_p is zero on monomials independent of the variable.
        let xa = Relation::new(&sig, vec![(q(1), dot(v("a"), v("b")))]).unwrap();
        assert!(phi_p("z", &xa).unwrap().is_zero());

        // phi_c([a.b, c]) = (a*b + b*a) circ c
        let m = Relation::new(&sig, vec![(q(1), br(dot(v("a"), v("b")), v("c")))]).unwrap();
        let expect = Relation::new(
            &tgt,
            vec![
                (q(1), circ(star(v("a"), v("b")), v("c"))),
                (q(1), circ(star(v("b"), v("a")), v("c"))),
            ],
        )
        .unwrap();
        assert_eq!(phi_p("c", &m).unwrap(), expect);

        // Bracket with the slot variable on the left picks up a sign:
        // phi_a([a, b.c]) = -(b*c + c*b) circ a.
        let m2 = Relation::new(&sig, vec![(q(1), br(v("a"), dot(v("b"), v("c"))))]).unwrap();
        let expect2 = Relation::new(
            &tgt,
            vec![
                (q(-1), circ(star(v("b"), v("c")), v("a"))),
                (q(-1), circ(star(v("c"), v("b")), v("a"))),
            ],
        )
        .unwrap();
        assert_eq!(phi_p("a", &m2).unwrap(), expect2);
    }

    #[test]
    fn phi_p_agrees_with_polarized_slot_dendrification() {
        let sig = Signature::polarized();
        let dot = |l, r| Tree::node("dot", l, r);
        let br = |l, r| Tree::node("br", l, r);
        let rel = Relation::new(
            &sig,
            vec![
                (q(1), br(dot(v("a"), v("b")), v("c"))),
                (q(-1), dot(v("a"), br(v("b"), v("c")))),
                (q(-1), dot(br(v("a"), v("c")), v("b"))),
            ],
        )
        .unwrap();
        let cfg = DendrifyConfig::polarized_dend();
        for (p, var) in ["a", "b", "c"].iter().enumerate() {
            let via_slot = dendrify_slot(&rel, &BTreeSet::from([p]), &cfg).unwrap();
            let via_phi = phi_p(var, &rel).unwrap();
            assert_eq!(via_slot, via_phi, "slot {p}");
        }
    }

    #[test]
    fn specialization_of_loday_dendriform() {
        // dend1..3 specialized commutatively span {Zinbiel, NAP}.
        let sig = Signature::dendriform();
        let prec = |l, r| Tree::node("prec", l, r);
        let succ = |l, r| Tree::node("succ", l, r);
        let d1 = Relation::new(
            &sig,
            vec![
                (q(1), prec(prec(v("a"), v("b")), v("c"))),
                (q(-1), prec(v("a"), prec(v("b"), v("c")))),
                (q(-1), prec(v("a"), succ(v("b"), v("c")))),
            ],
        )
        .unwrap();
        let d2 = Relation::new(
            &sig,
            vec![
                (q(1), prec(succ(v("a"), v("b")), v("c"))),
                (q(-1), succ(v("a"), prec(v("b"), v("c")))),
            ],
        )
        .unwrap();
        let d3 = Relation::new(
            &sig,
            vec![
                (q(1), succ(prec(v("a"), v("b")), v("c"))),
                (q(1), succ(succ(v("a"), v("b")), v("c"))),
                (q(-1), succ(v("a"), succ(v("b"), v("c")))),
            ],
        )
        .unwrap();
        let loday = RelationSet::new("loday", sig, vec![d1, d2, d3]).unwrap();
        let out = specialize_symmetric(&loday, 1).unwrap();

        let t = Signature::single_times();
        let times = |l, r| Tree::node("times", l, r);
        let zinbiel = Relation::new(
            &t,
            vec![
                (q(1), times(v("a"), times(v("b"), v("c")))),
                (q(-1), times(times(v("a"), v("b")), v("c"))),
                (q(-1), times(times(v("b"), v("a")), v("c"))),
            ],
        )
        .unwrap();
        let nap = Relation::new(
            &t,
            vec![
                (q(1), times(v("c"), times(v("a"), v("b")))),
                (q(-1), times(v("a"), times(v("c"), v("b")))),
            ],
        )
        .unwrap();
        let golden = RelationSet::new("zn", t, vec![zinbiel.clone(), nap.clone()]).unwrap();
        assert!(equal_spans(&out, &golden, true).unwrap());
        // NAP is a permutation-closure consequence of Zinbiel.
        let z = RelationSpan::new(&[zinbiel], true).unwrap();
        assert!(z.contains(&nap).unwrap());
    }
}
