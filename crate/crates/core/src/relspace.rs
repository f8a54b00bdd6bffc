//! Exact linear algebra on spans of relations.
//!
//! Relations over a common signature and variable set are vectors over the
//! monomial basis. This module row-reduces such sets, decides membership
//! and span equality (optionally modulo permutation closure), computes the
//! weight filtration of a span and extracts lowest-weight generators, and
//! detects commutator form for trilinear relations. All arithmetic is
//! exact rational; there are no tolerances anywhere.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{q, Q};
use crate::term::{Monomial, Relation, RelationSet, Signature, Symmetry, Tree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpanError {
    #[error("relations are over mixed signatures or variable sets")]
    MixedSignature,
    #[error("the zero relation has no lowest weight part")]
    ZeroRelation,
    #[error("commutator form is defined for trilinear relations in one plain operation")]
    NotTrilinear,
    #[error("empty relation list has no ambient space")]
    EmptyInput,
}

/// How columns are ordered during row reduction.
#[derive(Clone, Copy, PartialEq, Eq)]
enum ColumnOrder {
    Monomial,
    WeightThenMonomial,
}

/// The span of a set of relations, stored as a reduced row echelon basis
/// over the monomial columns (fixed monomial order).
#[derive(Clone, Debug)]
pub struct RelationSpan {
    signature: Signature,
    variables: Vec<String>,
    basis: Vec<Relation>,
}

impl RelationSpan {
    /// Builds the span of `rels`; with `close_under_permutations` the span
    /// of all permutation-orbit members is taken instead.
    pub fn new(rels: &[Relation], close_under_permutations: bool) -> Result<Self, SpanError> {
        let first = rels.first().ok_or(SpanError::EmptyInput)?;
        let signature = first.signature().clone();
        let variables = first.variables().to_vec();
        let mut gens: Vec<Relation> = Vec::new();
        for r in rels {
            check_ambient(first, r)?;
            if close_under_permutations {
                gens.extend(r.permutation_orbit());
            } else {
                gens.push(r.clone());
            }
        }
        let basis = rref(&gens, ColumnOrder::Monomial);
        Ok(RelationSpan { signature, variables, basis })
    }

    pub fn basis(&self) -> &[Relation] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// True iff `rel` reduces to zero against the basis.
    pub fn contains(&self, rel: &Relation) -> Result<bool, SpanError> {
        if rel.signature() != &self.signature || !same_var_set(rel.variables(), &self.variables) {
            return Err(SpanError::MixedSignature);
        }
        Ok(self.reduce(rel).is_zero())
    }

    /// Reduces `rel` against the basis and returns the residual.
    pub fn reduce(&self, rel: &Relation) -> Relation {
        let mut residual = rel.clone();
        for row in &self.basis {
            let lead = match row.terms().next() {
                Some((m, _)) => m.clone(),
                None => continue,
            };
            let c = residual.coefficient(&lead);
            if !c.is_zero() {
                residual = residual.add(&row.scale(&-c)).expect("same ambient");
            }
        }
        residual
    }

    pub fn contains_all(&self, rels: &[Relation]) -> Result<bool, SpanError> {
        for r in rels {
            if !self.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_ambient(a: &Relation, b: &Relation) -> Result<(), SpanError> {
    if a.signature() != b.signature() || !same_var_set(a.variables(), b.variables()) {
        return Err(SpanError::MixedSignature);
    }
    Ok(())
}

fn same_var_set(a: &[String], b: &[String]) -> bool {
    let sa: BTreeSet<&String> = a.iter().collect();
    let sb: BTreeSet<&String> = b.iter().collect();
    sa == sb
}

/// Row reduction to reduced echelon form. Rows are relations; columns are
/// the monomials occurring in them, sorted by the requested order. Each
/// returned row has leading coefficient 1 and its leading monomial does
/// not occur in any other row.
fn rref(rels: &[Relation], order: ColumnOrder) -> Vec<Relation> {
    let nonzero: Vec<&Relation> = rels.iter().filter(|r| !r.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Vec::new();
    };
    let sig = first.signature().clone();

    // Column set: union of supports.
    let mut columns: Vec<Monomial> = {
        let mut set = BTreeSet::new();
        for r in &nonzero {
            for (m, _) in r.terms() {
                set.insert(m.clone());
            }
        }
        set.into_iter().collect()
    };
    if order == ColumnOrder::WeightThenMonomial {
        columns.sort_by(|a, b| a.weight(&sig).cmp(&b.weight(&sig)).then(a.cmp(b)));
    }
    let index: BTreeMap<Monomial, usize> =
        columns.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

    let mut rows: Vec<Vec<Q>> = nonzero
        .iter()
        .map(|r| {
            let mut v = vec![Q::zero(); columns.len()];
            for (m, c) in r.terms() {
                v[index[m]] = c.clone();
            }
            v
        })
        .collect();

    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut next = 0usize;
    for col in 0..columns.len() {
        let Some(pivot) = (next..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(next, pivot);
        let inv = {
            let p = &rows[next][col];
            Q::one() / p.clone()
        };
        for x in rows[next].iter_mut() {
            *x = x.clone() * &inv;
        }
        for i in 0..rows.len() {
            if i != next && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for k in col..columns.len() {
                    let delta = &factor * &rows[next][k];
                    rows[i][k] = rows[i][k].clone() - delta;
                }
            }
        }
        pivot_rows.push(next);
        next += 1;
        if next == rows.len() {
            break;
        }
    }

    pivot_rows
        .into_iter()
        .map(|i| {
            let raw: Vec<(Q, Tree)> = rows[i]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c.clone(), columns[k].tree().clone()))
                .collect();
            let mut rel = Relation::new(&sig, raw).expect("rows stay canonical");
            // Preserve the ambient variable list even if a row lost some
            // variables through cancellation (cannot happen for multilinear
            // rows, but keep the ambient stable).
            rel = rebuild_with_variables(rel, first.variables());
            rel
        })
        .collect()
}

fn rebuild_with_variables(rel: Relation, vars: &[String]) -> Relation {
    if same_var_set(rel.variables(), vars) {
        return rel;
    }
    let raw = rel.as_raw();
    let mut out = Relation::new(rel.signature(), raw).expect("canonical");
    // Relation::new re-derives variables from terms; for zero or degenerate
    // rows fall back to an explicit zero relation over the ambient.
    if !same_var_set(out.variables(), vars) {
        let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        if out.is_zero() {
            out = Relation::zero(rel.signature(), &names);
        }
    }
    out
}

/// Mutual containment of the (optionally permutation-closed) spans.
pub fn equal_spans(a: &RelationSet, b: &RelationSet, close_under_permutations: bool) -> Result<bool, SpanError> {
    if a.signature != b.signature {
        return Err(SpanError::MixedSignature);
    }
    match (a.relations.is_empty(), b.relations.is_empty()) {
        (true, true) => return Ok(true),
        (true, false) => return Ok(b.relations.iter().all(|r| r.is_zero())),
        (false, true) => return Ok(a.relations.iter().all(|r| r.is_zero())),
        _ => {}
    }
    let sa = RelationSpan::new(&a.relations, close_under_permutations)?;
    let sb = RelationSpan::new(&b.relations, close_under_permutations)?;
    Ok(sa.contains_all(&b.relations)? && sb.contains_all(&a.relations)?)
}

/// The sub-sum of terms of minimal weight.
pub fn lowest_weight_part(rel: &Relation) -> Result<Relation, SpanError> {
    let w = rel.min_weight().ok_or(SpanError::ZeroRelation)?;
    Ok(rel.weight_slice(w))
}

/// Weight-homogeneous generators, grouped by weight.
#[derive(Clone, Debug, Default)]
pub struct WeightGradedGenerators {
    by_weight: BTreeMap<u32, Vec<Relation>>,
}

impl WeightGradedGenerators {
    pub fn weights(&self) -> impl Iterator<Item = u32> + '_ {
        self.by_weight.keys().copied()
    }

    pub fn at_weight(&self, w: u32) -> &[Relation] {
        self.by_weight.get(&w).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Vec<Relation>)> {
        self.by_weight.iter().map(|(w, v)| (*w, v))
    }

    /// All generators in weight order.
    pub fn flatten(&self) -> Vec<Relation> {
        self.by_weight.values().flatten().cloned().collect()
    }
}

/// Generators of the lowest-weight parts of the permutation-closed span.
///
/// Columns are ordered by weight ascending, then monomial order; after row
/// reduction each pivot row has no support below its pivot weight, so its
/// lowest-weight slice is a weight-homogeneous generator. The union over
/// all rows generates `{ lowest_weight_part(R) : R in span }`.
pub fn lowest_weight_generators(rels: &RelationSet) -> Result<WeightGradedGenerators, SpanError> {
    let gens: Vec<Relation> = rels
        .relations
        .iter()
        .filter(|r| !r.is_zero())
        .flat_map(|r| r.permutation_orbit())
        .collect();
    let mut out = WeightGradedGenerators::default();
    if gens.is_empty() {
        return Ok(out);
    }
    for r in &gens {
        check_ambient(&gens[0], r)?;
    }
    for row in rref(&gens, ColumnOrder::WeightThenMonomial) {
        let w = row.min_weight().expect("pivot rows are nonzero");
        out.by_weight.entry(w).or_default().push(row.weight_slice(w));
    }
    Ok(out)
}

/// True iff the permutation-closed span of trilinear relations in one plain
/// operation lies in the span of the six commutator generators
/// `(xy)z - z(xy)` over all variable orders.
pub fn commutator_form(rels: &RelationSet) -> Result<bool, SpanError> {
    if rels.signature.ops().len() != 1 || rels.signature.ops()[0].symmetry != Symmetry::None {
        return Err(SpanError::NotTrilinear);
    }
    let op = &rels.signature.ops()[0].name;
    let Some(first) = rels.relations.first() else {
        return Ok(true);
    };
    if first.variables().len() != 3 {
        return Err(SpanError::NotTrilinear);
    }
    let vars: Vec<String> = first.variables().to_vec();
    let commutator = {
        let x = Tree::leaf(&vars[0]);
        let y = Tree::leaf(&vars[1]);
        let z = Tree::leaf(&vars[2]);
        let xy = Tree::node(op, x.clone(), y.clone());
        Relation::new(
            &rels.signature,
            vec![
                (q(1), Tree::node(op, xy.clone(), z.clone())),
                (q(-1), Tree::node(op, z, xy)),
            ],
        )
        .expect("commutator generator")
    };
    let span = RelationSpan::new(&[commutator], true)?;
    for r in &rels.relations {
        if r.variables().len() != 3 {
            return Err(SpanError::NotTrilinear);
        }
        for image in r.permutation_orbit() {
            if !span.contains(&image)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reduces a list of candidate relations to a minimal generating list of
/// their permutation-closed span: a candidate is kept iff it is not already
/// in the closed span of the kept ones. Deterministic in the input order.
pub fn minimal_generators(candidates: &[Relation]) -> Vec<Relation> {
    let mut kept: Vec<Relation> = Vec::new();
    for cand in candidates {
        if cand.is_zero() {
            continue;
        }
        if kept.is_empty() {
            kept.push(cand.clone());
            continue;
        }
        let span = RelationSpan::new(&kept, true).expect("kept relations share ambient");
        if !span.contains(cand).expect("same ambient") {
            kept.push(cand.clone());
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;
    use crate::term::{OpSymbol, Tree};

    fn v(s: &str) -> Tree {
        Tree::leaf(s)
    }

    fn mu(l: Tree, r: Tree) -> Tree {
        Tree::node("mu", l, r)
    }

    fn associativity(sig: &Signature) -> Relation {
        Relation::new(
            sig,
            vec![
                (q(1), mu(mu(v("a"), v("b")), v("c"))),
                (q(-1), mu(v("a"), mu(v("b"), v("c")))),
            ],
        )
        .unwrap()
    }

    #[test]
    fn scalar_multiples_collapse() {
        let sig = Signature::single_plain();
        let r = associativity(&sig);
        let sp = RelationSpan::new(&[r.clone(), r.scale(&q(2))], false).unwrap();
        assert_eq!(sp.dim(), 1);
        assert!(sp.contains(&r.scale(&qr(7, 3))).unwrap());
    }

    #[test]
    fn closed_span_of_associativity_is_six_dimensional() {
        // Oracle: the 6 permuted parenthesization differences are linearly
        // independent (12 monomials, 6 independent differences).
        let sig = Signature::single_plain();
        let sp = RelationSpan::new(&[associativity(&sig)], true).unwrap();
        assert_eq!(sp.dim(), 6);
    }

    #[test]
    fn membership_and_non_membership() {
        let sig = Signature::single_plain();
        let r = associativity(&sig);
        let orbit = r.permutation_orbit();
        let sp = RelationSpan::new(&[r.clone()], false).unwrap();
        // A different permutation image is not in the unclosed span.
        assert!(!sp.contains(&orbit[1]).unwrap());
        let closed = RelationSpan::new(&[r], true).unwrap();
        assert!(closed.contains(&orbit[1]).unwrap());
    }

    #[test]
    fn equal_spans_is_an_equivalence() {
        let sig = Signature::single_plain();
        let r = associativity(&sig);
        let a = RelationSet::new("a", sig.clone(), vec![r.clone()]).unwrap();
        let b = RelationSet::new("b", sig.clone(), vec![r.scale(&q(-3)), r.clone()]).unwrap();
        assert!(equal_spans(&a, &a, true).unwrap());
        assert!(equal_spans(&a, &b, true).unwrap());
        assert!(equal_spans(&b, &a, true).unwrap());
    }

    #[test]
    fn lowest_weight_part_of_inhomogeneous_relation() {
        // br(br(a,b),c) - dot(dot(b,c),a) + dot(dot(c,a),b): weight-0 part
        // is the dot part.
        let sig = Signature::polarized();
        let dot = |l, r| Tree::node("dot", l, r);
        let br = |l, r| Tree::node("br", l, r);
        let rel = Relation::new(
            &sig,
            vec![
                (q(1), br(br(v("a"), v("b")), v("c"))),
                (q(-1), dot(dot(v("b"), v("c")), v("a"))),
                (q(1), dot(dot(v("c"), v("a")), v("b"))),
            ],
        )
        .unwrap();
        let low = lowest_weight_part(&rel).unwrap();
        let expect = Relation::new(
            &sig,
            vec![
                (q(-1), dot(dot(v("b"), v("c")), v("a"))),
                (q(1), dot(dot(v("c"), v("a")), v("b"))),
            ],
        )
        .unwrap();
        assert_eq!(low, expect);
        assert!(low.is_weight_homogeneous());
    }

    #[test]
    fn lowest_weight_part_of_homogeneous_relation_is_itself() {
        let sig = Signature::polarized();
        let br = |l, r| Tree::node("br", l, r);
        let jacobi = Relation::new(
            &sig,
            vec![
                (q(1), br(br(v("a"), v("b")), v("c"))),
                (q(1), br(br(v("b"), v("c")), v("a"))),
                (q(1), br(br(v("c"), v("a")), v("b"))),
            ],
        )
        .unwrap();
        assert_eq!(lowest_weight_part(&jacobi).unwrap(), jacobi);
        assert!(lowest_weight_part(&Relation::zero(&sig, &["a"])).is_err());
    }

    #[test]
    fn single_homogeneous_relation_yields_one_generator_at_its_weight() {
        let sig = Signature::polarized();
        let br = |l, r| Tree::node("br", l, r);
        let jacobi = Relation::new(
            &sig,
            vec![
                (q(1), br(br(v("a"), v("b")), v("c"))),
                (q(1), br(br(v("b"), v("c")), v("a"))),
                (q(1), br(br(v("c"), v("a")), v("b"))),
            ],
        )
        .unwrap();
        let set = RelationSet::new("jacobi", sig, vec![jacobi]).unwrap();
        let gens = lowest_weight_generators(&set).unwrap();
        assert_eq!(gens.weights().collect::<Vec<_>>(), vec![2]);
        assert_eq!(gens.at_weight(2).len(), 1);
    }

    #[test]
    fn commutator_form_examples() {
        let sig = Signature::single_plain();
        // A3 associativity has commutator form.
        let a3 = Relation::new(
            &sig,
            vec![
                (q(1), mu(mu(v("a"), v("b")), v("c"))),
                (q(1), mu(mu(v("b"), v("c")), v("a"))),
                (q(1), mu(mu(v("c"), v("a")), v("b"))),
                (q(-1), mu(v("a"), mu(v("b"), v("c")))),
                (q(-1), mu(v("b"), mu(v("c"), v("a")))),
                (q(-1), mu(v("c"), mu(v("a"), v("b")))),
            ],
        )
        .unwrap();
        let a3s = RelationSet::new("a3", sig.clone(), vec![a3]).unwrap();
        assert!(commutator_form(&a3s).unwrap());
        // Plain associativity does not.
        let assoc = RelationSet::new("assoc", sig.clone(), vec![associativity(&sig)]).unwrap();
        assert!(!commutator_form(&assoc).unwrap());
    }

    #[test]
    fn commutator_form_rejects_other_arities() {
        let sig = Signature::single_plain();
        let bilinear =
            Relation::new(&sig, vec![(q(1), mu(v("a"), v("b"))), (q(-1), mu(v("b"), v("a")))])
                .unwrap();
        let set = RelationSet::new("comm", sig, vec![bilinear]).unwrap();
        assert_eq!(commutator_form(&set), Err(SpanError::NotTrilinear));
    }

    #[test]
    fn commutative_op_symmetry_flag_is_rejected_for_commutator_form() {
        let sig = Signature::new(vec![OpSymbol::new("m", Symmetry::Commutative, 0).unwrap()])
            .unwrap();
        let m = |l, r| Tree::node("m", l, r);
        let rel = Relation::new(
            &sig,
            vec![(q(1), m(m(v("a"), v("b")), v("c"))), (q(-1), m(v("a"), m(v("b"), v("c"))))],
        )
        .unwrap();
        let set = RelationSet::new("x", sig, vec![rel]).unwrap();
        assert_eq!(commutator_form(&set), Err(SpanError::NotTrilinear));
    }

    #[test]
    fn minimal_generators_drops_consequences() {
        let sig = Signature::single_plain();
        let r = associativity(&sig);
        let orbit = r.permutation_orbit();
        // All six orbit members are consequences of the first modulo
        // permutation closure.
        let kept = minimal_generators(&orbit);
        assert_eq!(kept.len(), 1);
    }
}
