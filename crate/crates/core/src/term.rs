//! Free multilinear monomials and relations over a declared signature.
//!
//! A monomial is a labeled binary tree: leaves are variable names, internal
//! nodes carry a binary operation from the signature. Relations are finite
//! rational linear combinations of monomials, multilinear in a common
//! variable set. Everything is kept in a canonical form so that relations
//! can be compared, reduced and spanned exactly.
//!
//! Canonical form: for every commutative or anticommutative node the left
//! subtree precedes the right subtree in the fixed total monomial order
//! (prefix order on the token sequence: operation name, then left, then
//! right, variables by name). An anticommutative swap negates the
//! coefficient; an anticommutative node with equal subtrees vanishes
//! (2 is invertible in the rationals).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{format_q, Q};

/// Symmetry attribute of a binary operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    None,
    Commutative,
    Anticommutative,
}

/// A named binary operation with a symmetry flag and a weight in `{0, 1}`.
///
/// The weight grades monomials in polarized signatures: bracket-like
/// operations have weight 1, product-like operations weight 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpSymbol {
    pub name: String,
    pub symmetry: Symmetry,
    pub weight: u8,
}

impl OpSymbol {
    pub fn new(name: &str, symmetry: Symmetry, weight: u8) -> Result<Self, TermError> {
        if weight > 1 {
            return Err(TermError::BadWeight(name.to_string(), weight));
        }
        Ok(OpSymbol { name: name.to_string(), symmetry, weight })
    }

    /// Plain operation, weight 0.
    pub fn plain(name: &str) -> Self {
        OpSymbol { name: name.to_string(), symmetry: Symmetry::None, weight: 0 }
    }
}

/// An ordered list of binary operations; all arities are fixed at 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    ops: Vec<OpSymbol>,
}

impl Signature {
    pub fn new(ops: Vec<OpSymbol>) -> Result<Self, TermError> {
        if ops.is_empty() {
            return Err(TermError::EmptySignature);
        }
        let mut seen = BTreeSet::new();
        for op in &ops {
            if !seen.insert(op.name.clone()) {
                return Err(TermError::DuplicateOp(op.name.clone()));
            }
        }
        Ok(Signature { ops })
    }

    pub fn ops(&self) -> &[OpSymbol] {
        &self.ops
    }

    pub fn op(&self, name: &str) -> Option<&OpSymbol> {
        self.ops.iter().find(|o| o.name == name)
    }

    pub fn has_op(&self, name: &str) -> bool {
        self.op(name).is_some()
    }

    /// Single plain operation `mu`.
    pub fn single_plain() -> Self {
        Signature::new(vec![OpSymbol::plain("mu")]).unwrap()
    }

    /// Polarized pair: commutative `dot` (weight 0), anticommutative `br`
    /// (weight 1).
    pub fn polarized() -> Self {
        Signature::new(vec![
            OpSymbol::new("dot", Symmetry::Commutative, 0).unwrap(),
            OpSymbol::new("br", Symmetry::Anticommutative, 1).unwrap(),
        ])
        .unwrap()
    }

    /// Dendriform pair `prec`, `succ`.
    pub fn dendriform() -> Self {
        Signature::new(vec![OpSymbol::plain("prec"), OpSymbol::plain("succ")]).unwrap()
    }

    /// Tridendriform triple `prec`, `succ`, `dot`.
    pub fn tridendriform() -> Self {
        Signature::new(vec![
            OpSymbol::plain("prec"),
            OpSymbol::plain("succ"),
            OpSymbol::plain("dot"),
        ])
        .unwrap()
    }

    /// Polarized dendriform pair: `star` (weight 0), `circ` (weight 1).
    pub fn polarized_dendriform() -> Self {
        Signature::new(vec![
            OpSymbol::new("star", Symmetry::None, 0).unwrap(),
            OpSymbol::new("circ", Symmetry::None, 1).unwrap(),
        ])
        .unwrap()
    }

    /// Polarized tridendriform quadruple: `star`, `circ`, commutative
    /// `bar`, anticommutative `box`.
    pub fn polarized_tridendriform() -> Self {
        Signature::new(vec![
            OpSymbol::new("star", Symmetry::None, 0).unwrap(),
            OpSymbol::new("circ", Symmetry::None, 1).unwrap(),
            OpSymbol::new("bar", Symmetry::Commutative, 0).unwrap(),
            OpSymbol::new("box", Symmetry::Anticommutative, 1).unwrap(),
        ])
        .unwrap()
    }

    /// Single plain operation `times` (target of symmetric specialization).
    pub fn single_times() -> Self {
        Signature::new(vec![OpSymbol::plain("times")]).unwrap()
    }

    /// `times` plus a (anti)commutative `dot`, the target of tridendriform
    /// symmetric specialization.
    pub fn times_dot(symmetry: Symmetry) -> Self {
        Signature::new(vec![
            OpSymbol::plain("times"),
            OpSymbol::new("dot", symmetry, 0).unwrap(),
        ])
        .unwrap()
    }
}

/// A term tree: leaves are variables, nodes carry operation names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(String),
    Node(String, Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf(name: &str) -> Tree {
        Tree::Leaf(name.to_string())
    }

    pub fn node(op: &str, left: Tree, right: Tree) -> Tree {
        Tree::Node(op.to_string(), Box::new(left), Box::new(right))
    }

    /// Leaf names in left-to-right order (with multiplicity).
    pub fn leaves(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Tree::Leaf(v) => out.push(v),
            Tree::Node(_, l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Number of leaves.
    pub fn len(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(_, l, r) => l.len() + r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sum of node weights under `sig`.
    pub fn weight(&self, sig: &Signature) -> u32 {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(op, l, r) => {
                let w = sig.op(op).map(|o| o.weight as u32).unwrap_or(0);
                w + l.weight(sig) + r.weight(sig)
            }
        }
    }

    fn tokens(&self) -> TreeTokens<'_> {
        TreeTokens { stack: vec![self] }
    }

    /// Applies a leaf renaming.
    pub fn map_leaves(&self, f: &impl Fn(&str) -> String) -> Tree {
        match self {
            Tree::Leaf(v) => Tree::Leaf(f(v)),
            Tree::Node(op, l, r) => {
                Tree::Node(op.clone(), Box::new(l.map_leaves(f)), Box::new(r.map_leaves(f)))
            }
        }
    }

    /// Applies an operation renaming.
    pub fn map_ops(&self, f: &impl Fn(&str) -> String) -> Tree {
        match self {
            Tree::Leaf(v) => Tree::Leaf(v.clone()),
            Tree::Node(op, l, r) => {
                Tree::Node(f(op), Box::new(l.map_ops(f)), Box::new(r.map_ops(f)))
            }
        }
    }
}

struct TreeTokens<'a> {
    stack: Vec<&'a Tree>,
}

impl<'a> Iterator for TreeTokens<'a> {
    type Item = &'a str;

    fn next(&mut self) -> Option<&'a str> {
        let t = self.stack.pop()?;
        match t {
            Tree::Leaf(v) => Some(v),
            Tree::Node(op, l, r) => {
                self.stack.push(r);
                self.stack.push(l);
                Some(op)
            }
        }
    }
}

// Prefix token-sequence order; total, and trees with equal token streams
// are structurally equal because all operations are binary.
impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.tokens().cmp(other.tokens())
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(v) => write!(f, "{v}"),
            Tree::Node(op, l, r) => write!(f, "{op}({l}, {r})"),
        }
    }
}

/// A canonical monomial over some signature.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Tree);

impl Monomial {
    /// Canonicalizes `tree` under `sig`. Returns the sign picked up by
    /// anticommutative swaps, or `None` when the term vanishes
    /// (anticommutative node with equal children).
    pub fn canonicalize(sig: &Signature, tree: &Tree) -> Result<Option<(i8, Monomial)>, TermError> {
        Ok(Self::canon_rec(sig, tree)?.map(|(s, t)| (s, Monomial(t))))
    }

    fn canon_rec(sig: &Signature, tree: &Tree) -> Result<Option<(i8, Tree)>, TermError> {
        match tree {
            Tree::Leaf(v) => Ok(Some((1, Tree::Leaf(v.clone())))),
            Tree::Node(op, l, r) => {
                let sym = sig
                    .op(op)
                    .ok_or_else(|| TermError::UnknownOperation(op.clone()))?
                    .symmetry;
                let (sl, cl) = match Self::canon_rec(sig, l)? {
                    Some(x) => x,
                    None => return Ok(None),
                };
                let (sr, cr) = match Self::canon_rec(sig, r)? {
                    Some(x) => x,
                    None => return Ok(None),
                };
                let mut sign = sl * sr;
                let (a, b) = match sym {
                    Symmetry::None => (cl, cr),
                    Symmetry::Commutative => {
                        if cl > cr {
                            (cr, cl)
                        } else {
                            (cl, cr)
                        }
                    }
                    Symmetry::Anticommutative => match cl.cmp(&cr) {
                        Ordering::Equal => return Ok(None),
                        Ordering::Greater => {
                            sign = -sign;
                            (cr, cl)
                        }
                        Ordering::Less => (cl, cr),
                    },
                };
                Ok(Some((sign, Tree::Node(op.clone(), Box::new(a), Box::new(b)))))
            }
        }
    }

    pub fn tree(&self) -> &Tree {
        &self.0
    }

    pub fn weight(&self, sig: &Signature) -> u32 {
        self.0.weight(sig)
    }

    /// All canonical monomials that are multilinear in exactly `vars`.
    pub fn enumerate(sig: &Signature, vars: &[&str]) -> Vec<Monomial> {
        let mut out = BTreeSet::new();
        for tree in enumerate_trees(sig, vars) {
            if let Some((_, m)) = Monomial::canonicalize(sig, &tree).expect("ops exist") {
                out.insert(m);
            }
        }
        out.into_iter().collect()
    }
}

fn enumerate_trees(sig: &Signature, vars: &[&str]) -> Vec<Tree> {
    if vars.len() == 1 {
        return vec![Tree::leaf(vars[0])];
    }
    let mut out = Vec::new();
    // Split the variable set into a nonempty left/right part in every way;
    // the first variable's side is free, which double counts ordered pairs,
    // exactly what a non-symmetric node needs.
    let n = vars.len();
    for mask in 1..(1u32 << n) - 1 {
        let left: Vec<&str> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vars[i]).collect();
        let right: Vec<&str> = (0..n).filter(|i| mask >> i & 1 == 0).map(|i| vars[i]).collect();
        for lt in enumerate_trees(sig, &left) {
            for rt in enumerate_trees(sig, &right) {
                for op in sig.ops() {
                    out.push(Tree::node(&op.name, lt.clone(), rt.clone()));
                }
            }
        }
    }
    out
}

/// Errors from relation construction and manipulation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TermError {
    #[error("operation weight must be 0 or 1, got {1} for `{0}`")]
    BadWeight(String, u8),
    #[error("signature must contain at least one operation")]
    EmptySignature,
    #[error("duplicate operation `{0}` in signature")]
    DuplicateOp(String),
    #[error("unknown operation `{0}`")]
    UnknownOperation(String),
    #[error("variable `{0}` collides with an operation name")]
    VariableIsOperation(String),
    #[error("relation is not multilinear: {0}")]
    NonMultilinear(String),
    #[error("variable map is not a bijection of the relation variables")]
    BadBijection,
    #[error("relations are over different signatures or variable sets")]
    MixedAmbient,
}

/// A multilinear relation: a rational linear combination of canonical
/// monomials in a common variable set, understood as `... = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    signature: Signature,
    variables: Vec<String>,
    terms: BTreeMap<Monomial, Q>,
}

impl Relation {
    /// Normalizes a raw expression `sum of coeff * tree` into a canonical
    /// relation. Idempotent and linear in the input.
    pub fn new(signature: &Signature, raw: Vec<(Q, Tree)>) -> Result<Relation, TermError> {
        // Variable order is first appearance in the source expression.
        let mut variables: Vec<String> = Vec::new();
        for (_, tree) in &raw {
            for leaf in tree.leaves() {
                if signature.has_op(leaf) {
                    return Err(TermError::VariableIsOperation(leaf.to_string()));
                }
                if !variables.iter().any(|v| v == leaf) {
                    variables.push(leaf.to_string());
                }
            }
        }
        // Multilinearity across the whole relation: every monomial uses
        // every variable exactly once.
        for (_, tree) in &raw {
            let mut seen = BTreeSet::new();
            for leaf in tree.leaves() {
                if !seen.insert(leaf) {
                    return Err(TermError::NonMultilinear(format!(
                        "variable `{leaf}` repeated in `{tree}`"
                    )));
                }
            }
            if seen.len() != variables.len() {
                let missing = variables
                    .iter()
                    .find(|v| !seen.contains(v.as_str()))
                    .cloned()
                    .unwrap_or_default();
                return Err(TermError::NonMultilinear(format!(
                    "variable `{missing}` missing in `{tree}`"
                )));
            }
        }
        let mut terms: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (coeff, tree) in &raw {
            if coeff.is_zero() {
                continue;
            }
            if let Some((sign, m)) = Monomial::canonicalize(signature, tree)? {
                let c = if sign < 0 { -coeff.clone() } else { coeff.clone() };
                let entry = terms.entry(m).or_insert_with(Q::zero);
                *entry += c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Relation { signature: signature.clone(), variables, terms })
    }

    /// Zero relation in the given variables.
    pub fn zero(signature: &Signature, variables: &[&str]) -> Relation {
        Relation {
            signature: signature.clone(),
            variables: variables.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// The raw `(coeff, tree)` view, e.g. for substitution engines.
    pub fn as_raw(&self) -> Vec<(Q, Tree)> {
        self.terms.iter().map(|(m, c)| (c.clone(), m.tree().clone())).collect()
    }

    pub fn scale(&self, c: &Q) -> Relation {
        if c.is_zero() {
            return Relation {
                signature: self.signature.clone(),
                variables: self.variables.clone(),
                terms: BTreeMap::new(),
            };
        }
        Relation {
            signature: self.signature.clone(),
            variables: self.variables.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn add(&self, other: &Relation) -> Result<Relation, TermError> {
        if self.signature != other.signature || !same_set(&self.variables, &other.variables) {
            return Err(TermError::MixedAmbient);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Q::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Relation { signature: self.signature.clone(), variables: self.variables.clone(), terms })
    }

    pub fn sub(&self, other: &Relation) -> Result<Relation, TermError> {
        self.add(&other.scale(&-crate::rational::q(1)))
    }

    /// Renames variables along a bijection covering exactly the relation
    /// variables.
    pub fn rename_variables(
        &self,
        bijection: &BTreeMap<String, String>,
    ) -> Result<Relation, TermError> {
        let dom: BTreeSet<&String> = bijection.keys().collect();
        let vars: BTreeSet<&String> = self.variables.iter().collect();
        if dom != vars {
            return Err(TermError::BadBijection);
        }
        let img: BTreeSet<&String> = bijection.values().collect();
        if img.len() != bijection.len() {
            return Err(TermError::BadBijection);
        }
        let f = |v: &str| bijection[v].clone();
        let raw: Vec<(Q, Tree)> = self
            .terms
            .iter()
            .map(|(m, c)| (c.clone(), m.tree().map_leaves(&f)))
            .collect();
        let mut renamed = Relation::new(&self.signature, raw)?;
        renamed.variables = self.variables.iter().map(|v| bijection[v].clone()).collect();
        Ok(renamed)
    }

    /// The relations obtained from all variable permutations, canonicalized
    /// and deduplicated modulo nonzero scalar multiples (the module
    /// generated is what matters downstream, and e.g. the Jacobi identity
    /// is invariant under all of `S_3` only up to sign).
    pub fn permutation_orbit(&self) -> Vec<Relation> {
        let vars = self.variables.clone();
        let mut out: Vec<Relation> = Vec::new();
        let mut seen: BTreeSet<Vec<(Monomial, Q)>> = BTreeSet::new();
        for perm in permutations(vars.len()) {
            let bij: BTreeMap<String, String> = vars
                .iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), vars[perm[i]].clone()))
                .collect();
            let image = self.rename_variables(&bij).expect("permutation is a bijection");
            if seen.insert(image.direction_key()) {
                out.push(image);
            }
        }
        out
    }

    // Terms rescaled so the leading coefficient is 1; identifies a relation
    // up to nonzero scalar.
    fn direction_key(&self) -> Vec<(Monomial, Q)> {
        match self.terms.iter().next() {
            None => Vec::new(),
            Some((_, lead)) => {
                let inv = Q::new(lead.denom().clone(), lead.numer().clone());
                self.terms.iter().map(|(m, c)| (m.clone(), c * &inv)).collect()
            }
        }
    }

    /// Multiset of term weights.
    pub fn weight_profile(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for m in self.terms.keys() {
            *out.entry(m.weight(&self.signature)).or_insert(0) += 1;
        }
        out
    }

    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.weight(&self.signature)).min()
    }

    /// Sub-sum of the terms with weight exactly `w`.
    pub fn weight_slice(&self, w: u32) -> Relation {
        Relation {
            signature: self.signature.clone(),
            variables: self.variables.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight(&self.signature) == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_weight_homogeneous(&self) -> bool {
        self.weight_profile().len() <= 1
    }

    /// Rewrites every node through `rule` and normalizes over `target`.
    ///
    /// `rule(op, left, right)` receives children already rewritten into
    /// `target` and returns the expansion of the node as a linear
    /// combination of target trees. This is the engine behind all
    /// substitution homomorphisms (polarization, depolarization, the star
    /// expansion, symmetric specialization).
    pub fn substitute(
        &self,
        target: &Signature,
        rule: &impl Fn(&str, &Tree, &Tree) -> Vec<(Q, Tree)>,
    ) -> Result<Relation, TermError> {
        let mut raw: Vec<(Q, Tree)> = Vec::new();
        for (m, c) in &self.terms {
            for (k, t) in expand_tree(m.tree(), rule) {
                raw.push((c * &k, t));
            }
        }
        let mut out = Relation::new(target, raw)?;
        out.variables = self.variables.clone();
        Ok(out)
    }

    /// Rebuilds the relation over `sig`, renaming operations along `f`.
    pub fn map_ops(&self, sig: &Signature, f: &impl Fn(&str) -> String) -> Result<Relation, TermError> {
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| (c.clone(), m.tree().map_ops(f)))
            .collect();
        let mut out = Relation::new(sig, raw)?;
        out.variables = self.variables.clone();
        Ok(out)
    }
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.signature == other.signature
            && same_set(&self.variables, &other.variables)
            && self.terms == other.terms
    }
}

impl Eq for Relation {}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 = 0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let abs = if c < &Q::zero() { -c.clone() } else { c.clone() };
            let sign = if c < &Q::zero() { "-" } else { "+" };
            if first {
                if sign == "-" {
                    write!(f, "- ")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if !abs.is_one() {
                write!(f, "{} ", format_q(&abs))?;
            }
            write!(f, "{}", m.tree())?;
        }
        write!(f, " = 0")
    }
}

fn expand_tree(tree: &Tree, rule: &impl Fn(&str, &Tree, &Tree) -> Vec<(Q, Tree)>) -> Vec<(Q, Tree)> {
    match tree {
        Tree::Leaf(v) => vec![(Q::one(), Tree::Leaf(v.clone()))],
        Tree::Node(op, l, r) => {
            let left = expand_tree(l, rule);
            let right = expand_tree(r, rule);
            let mut out = Vec::new();
            for (cl, tl) in &left {
                for (cr, tr) in &right {
                    for (c, t) in rule(op, tl, tr) {
                        out.push((cl * cr * &c, t));
                    }
                }
            }
            out
        }
    }
}

fn same_set(a: &[String], b: &[String]) -> bool {
    let sa: BTreeSet<&String> = a.iter().collect();
    let sb: BTreeSet<&String> = b.iter().collect();
    sa == sb
}

/// All permutations of `0..n` in a deterministic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute_rec(&mut items, 0, &mut out);
    out
}

fn permute_rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_rec(items, k + 1, out);
        items.swap(k, i);
    }
}

/// A named signature plus relation generators: the computational stand-in
/// for a category of algebras.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationSet {
    pub name: String,
    pub signature: Signature,
    pub relations: Vec<Relation>,
}

impl RelationSet {
    pub fn new(name: &str, signature: Signature, relations: Vec<Relation>) -> Result<Self, TermError> {
        for r in &relations {
            if r.signature() != &signature {
                return Err(TermError::MixedAmbient);
            }
        }
        Ok(RelationSet { name: name.to_string(), signature, relations })
    }

    /// Rebuilds the whole set over `sig`, renaming operations with `f`.
    /// Symmetry and weight attributes come from `sig`.
    pub fn map_ops(&self, name: &str, sig: &Signature, f: &impl Fn(&str) -> String) -> Result<RelationSet, TermError> {
        let relations = self
            .relations
            .iter()
            .map(|r| r.map_ops(sig, f))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RelationSet { name: name.to_string(), signature: sig.clone(), relations })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn v(s: &str) -> Tree {
        Tree::leaf(s)
    }

    fn mu(l: Tree, r: Tree) -> Tree {
        Tree::node("mu", l, r)
    }

    #[test]
    fn antisymmetric_pair_cancels() {
        // [a,b] + [b,a] with anticommutative bracket is the zero relation.
        let sig = Signature::polarized();
        let r = Relation::new(
            &sig,
            vec![
                (q(1), Tree::node("br", v("a"), v("b"))),
                (q(1), Tree::node("br", v("b"), v("a"))),
            ],
        )
        .unwrap();
        assert!(r.is_zero());
        assert_eq!(r.variables(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn symmetric_pair_cancels() {
        // a.b - b.a with commutative dot is the zero relation.
        let sig = Signature::polarized();
        let r = Relation::new(
            &sig,
            vec![
                (q(1), Tree::node("dot", v("a"), v("b"))),
                (q(-1), Tree::node("dot", v("b"), v("a"))),
            ],
        )
        .unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn associativity_has_two_terms() {
        let sig = Signature::single_plain();
        let r = Relation::new(
            &sig,
            vec![
                (q(1), mu(mu(v("a"), v("b")), v("c"))),
                (q(-1), mu(v("a"), mu(v("b"), v("c")))),
            ],
        )
        .unwrap();
        assert_eq!(r.num_terms(), 2);
        let m1 = Monomial::canonicalize(&sig, &mu(mu(v("a"), v("b")), v("c")))
            .unwrap()
            .unwrap()
            .1;
        assert_eq!(r.coefficient(&m1), q(1));
    }

    #[test]
    fn normalize_rejects_non_multilinear() {
        let sig = Signature::single_plain();
        let rep = Relation::new(&sig, vec![(q(1), mu(v("a"), v("a")))]);
        assert!(matches!(rep, Err(TermError::NonMultilinear(_))));
        let mix = Relation::new(
            &sig,
            vec![(q(1), mu(v("a"), v("b"))), (q(1), mu(v("a"), v("c")))],
        );
        assert!(matches!(mix, Err(TermError::NonMultilinear(_))));
    }

    #[test]
    fn normalize_rejects_unknown_op() {
        let sig = Signature::single_plain();
        let r = Relation::new(&sig, vec![(q(1), Tree::node("nope", v("a"), v("b")))]);
        assert!(matches!(r, Err(TermError::UnknownOperation(_))));
    }

    #[test]
    fn rename_flips_anticommutative_bracket() {
        let sig = Signature::polarized();
        let r = Relation::new(&sig, vec![(q(1), Tree::node("br", v("a"), v("b")))]).unwrap();
        let bij: BTreeMap<String, String> = [("a", "b"), ("b", "a")]
            .into_iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        let s = r.rename_variables(&bij).unwrap();
        assert_eq!(s, r.scale(&q(-1)));
    }

    #[test]
    fn rename_identity_and_swap() {
        let sig = Signature::single_plain();
        let r = Relation::new(
            &sig,
            vec![
                (q(1), mu(mu(v("a"), v("b")), v("c"))),
                (q(-1), mu(v("a"), mu(v("b"), v("c")))),
            ],
        )
        .unwrap();
        let id: BTreeMap<String, String> =
            ["a", "b", "c"].iter().map(|x| (x.to_string(), x.to_string())).collect();
        assert_eq!(r.rename_variables(&id).unwrap(), r);
        let swap: BTreeMap<String, String> = [("a", "b"), ("b", "a"), ("c", "c")]
            .into_iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        let s = r.rename_variables(&swap).unwrap();
        let expect = Relation::new(
            &sig,
            vec![
                (q(1), mu(mu(v("b"), v("a")), v("c"))),
                (q(-1), mu(v("b"), mu(v("a"), v("c")))),
            ],
        )
        .unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn rename_rejects_bad_bijection() {
        let sig = Signature::single_plain();
        let r = Relation::new(&sig, vec![(q(1), mu(v("a"), v("b")))]).unwrap();
        let bad: BTreeMap<String, String> = [("a", "c"), ("b", "c")]
            .into_iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        assert_eq!(r.rename_variables(&bad), Err(TermError::BadBijection));
    }

    #[test]
    fn orbit_of_associativity_has_six_members() {
        let sig = Signature::single_plain();
        let r = Relation::new(
            &sig,
            vec![
                (q(1), mu(mu(v("a"), v("b")), v("c"))),
                (q(-1), mu(v("a"), mu(v("b"), v("c")))),
            ],
        )
        .unwrap();
        assert_eq!(r.permutation_orbit().len(), 6);
    }

    #[test]
    fn orbit_of_jacobi_is_a_single_relation() {
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
        assert_eq!(jacobi.permutation_orbit().len(), 1);
    }

    #[test]
    fn orbit_of_commutator_relation_is_one_generator_up_to_scaling() {
        let sig = Signature::single_plain();
        let r = Relation::new(
            &sig,
            vec![(q(1), mu(v("a"), v("b"))), (q(-1), mu(v("b"), v("a")))],
        )
        .unwrap();
        // The two images are R and -R; one generator modulo scaling.
        assert_eq!(r.permutation_orbit().len(), 1);
    }

    #[test]
    fn weights_follow_node_weights() {
        let sig = Signature::polarized();
        let m = Tree::node("br", Tree::node("dot", v("a"), v("b")), v("c"));
        assert_eq!(m.weight(&sig), 1);
        let j = Tree::node("br", Tree::node("br", v("a"), v("b")), v("c"));
        assert_eq!(j.weight(&sig), 2);
    }

    #[test]
    fn enumerate_monomials_counts() {
        // Trilinear monomials in one plain operation: 2 shapes x 6 orders.
        let sig = Signature::single_plain();
        assert_eq!(Monomial::enumerate(&sig, &["a", "b", "c"]).len(), 12);
        // One commutative operation: a monomial is determined by the inner
        // pair, so 3 remain.
        let m = Signature::new(vec![OpSymbol::new("m", Symmetry::Commutative, 0).unwrap()]).unwrap();
        assert_eq!(Monomial::enumerate(&m, &["a", "b", "c"]).len(), 3);
    }

    #[test]
    fn tree_order_is_total_prefix_order() {
        let a = v("a");
        let ab = mu(v("a"), v("b"));
        let ba = mu(v("b"), v("a"));
        let nested = mu(mu(v("a"), v("b")), v("c"));
        assert!(a < ab, "leaf `a` precedes `mu(...)` streams");
        assert!(ab < ba);
        assert!(ab < nested, "prefix order: mu a b ... vs mu mu ...");
        assert_eq!(ab.cmp(&ab.clone()), Ordering::Equal);
    }
}
