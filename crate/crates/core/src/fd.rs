//! Finite-dimensional algebras over the rationals, by structure constants.
//!
//! An algebra carries one `dim x dim x dim` rational array per operation:
//! `e_i op e_j = sum_k c[i][j][k] e_k`. Relation checking evaluates every
//! relation on every basis tuple, which suffices by multilinearity and is
//! exact. Tuple evaluation is data-parallel behind the `parallel` feature;
//! results are collected in tuple order so reports are deterministic.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::parallel;
use crate::rational::Q;
use crate::term::{Relation, RelationSet, Signature, Symmetry, Tree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FdError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("bad transform recipe: {0}")]
    BadRecipe(String),
    #[error("declared unit is not an identity for `{0}`")]
    BadUnit(String),
    #[error("structure constants of `{0}` violate its declared symmetry")]
    SymmetryViolation(String),
}

/// Structure constants of one operation, flattened `(i*dim + j)*dim + k`.
pub type StructureConstants = Vec<Q>;

/// A finite-dimensional algebra: a signature and one structure-constant
/// array per operation, plus an optional unit vector (checked to be an
/// identity for the first operation of the signature).
#[derive(Clone, Debug, PartialEq)]
pub struct FDAlgebra {
    dim: usize,
    signature: Signature,
    structure: BTreeMap<String, StructureConstants>,
    unit: Option<Vec<Q>>,
}

impl FDAlgebra {
    pub fn new(
        dim: usize,
        signature: Signature,
        structure: BTreeMap<String, StructureConstants>,
        unit: Option<Vec<Q>>,
    ) -> Result<Self, FdError> {
        if dim == 0 {
            return Err(FdError::DimensionMismatch("dimension must be positive".into()));
        }
        for op in signature.ops() {
            let c = structure
                .get(&op.name)
                .ok_or_else(|| FdError::SignatureMismatch(format!("missing constants for `{}`", op.name)))?;
            if c.len() != dim * dim * dim {
                return Err(FdError::DimensionMismatch(format!(
                    "constants for `{}` have length {}, want {}",
                    op.name,
                    c.len(),
                    dim * dim * dim
                )));
            }
        }
        for name in structure.keys() {
            if !signature.has_op(name) {
                return Err(FdError::SignatureMismatch(format!("constants for unknown op `{name}`")));
            }
        }
        let alg = FDAlgebra { dim, signature, structure, unit };
        for op in alg.signature.ops().to_vec() {
            match op.symmetry {
                Symmetry::None => {}
                Symmetry::Commutative | Symmetry::Anticommutative => {
                    let sign = if op.symmetry == Symmetry::Commutative { Q::one() } else { -Q::one() };
                    for i in 0..dim {
                        for j in 0..dim {
                            for k in 0..dim {
                                let a = alg.c(&op.name, i, j, k);
                                let b = alg.c(&op.name, j, i, k);
                                if a != &(&sign * b) {
                                    return Err(FdError::SymmetryViolation(op.name.clone()));
                                }
                            }
                        }
                    }
                }
            }
        }
        if let Some(u) = &alg.unit {
            if u.len() != dim {
                return Err(FdError::DimensionMismatch("unit vector length".into()));
            }
            let op = &alg.signature.ops()[0].name;
            for j in 0..dim {
                let mut e = vec![Q::zero(); dim];
                e[j] = Q::one();
                if alg.product(op, u, &e) != e || alg.product(op, &e, u) != e {
                    return Err(FdError::BadUnit(op.clone()));
                }
            }
        }
        Ok(alg)
    }

    /// Builds from a sparse list of products `op(e_i, e_j) = sum of
    /// (coeff, k)`; everything unspecified is zero.
    pub fn from_products(
        dim: usize,
        signature: Signature,
        products: &[(&str, usize, usize, Vec<(Q, usize)>)],
        unit: Option<Vec<Q>>,
    ) -> Result<Self, FdError> {
        let mut structure: BTreeMap<String, StructureConstants> = signature
            .ops()
            .iter()
            .map(|o| (o.name.clone(), vec![Q::zero(); dim * dim * dim]))
            .collect();
        for (op, i, j, targets) in products {
            let c = structure
                .get_mut(*op)
                .ok_or_else(|| FdError::SignatureMismatch(format!("unknown op `{op}`")))?;
            for (coeff, k) in targets {
                if *i >= dim || *j >= dim || *k >= dim {
                    return Err(FdError::DimensionMismatch(format!("product index ({i},{j},{k})")));
                }
                c[(i * dim + j) * dim + k] = coeff.clone();
            }
        }
        FDAlgebra::new(dim, signature, structure, unit)
    }

    /// The zero algebra: all products vanish.
    pub fn zero(dim: usize, signature: Signature) -> Self {
        let structure = signature
            .ops()
            .iter()
            .map(|o| (o.name.clone(), vec![Q::zero(); dim * dim * dim]))
            .collect();
        FDAlgebra { dim, signature, structure, unit: None }
    }

    /// The full `n x n` matrix algebra with basis `E_11, E_12, ..., E_nn`
    /// (row-major), one plain operation `mu`.
    pub fn matrix_algebra(n: usize) -> Self {
        let dim = n * n;
        let mut c = vec![Q::zero(); dim * dim * dim];
        for (p, q_) in (0..n).flat_map(|p| (0..n).map(move |q_| (p, q_))) {
            for (r, s) in (0..n).flat_map(|r| (0..n).map(move |s| (r, s))) {
                // E_pq * E_rs = delta_qr E_ps
                if q_ == r {
                    let i = p * n + q_;
                    let j = r * n + s;
                    let k = p * n + s;
                    c[(i * dim + j) * dim + k] = Q::one();
                }
            }
        }
        let mut unit = vec![Q::zero(); dim];
        for p in 0..n {
            unit[p * n + p] = Q::one();
        }
        FDAlgebra {
            dim,
            signature: Signature::single_plain(),
            structure: BTreeMap::from([("mu".to_string(), c)]),
            unit: Some(unit),
        }
    }

    /// The truncated polynomial algebra `Q[x]/(x^dim)` with basis
    /// `1, x, ..., x^(dim-1)`, one plain operation `mu`.
    pub fn truncated_polynomial(dim: usize) -> Self {
        let mut c = vec![Q::zero(); dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                if i + j < dim {
                    c[(i * dim + j) * dim + (i + j)] = Q::one();
                }
            }
        }
        let mut unit = vec![Q::zero(); dim];
        unit[0] = Q::one();
        FDAlgebra {
            dim,
            signature: Signature::single_plain(),
            structure: BTreeMap::from([("mu".to_string(), c)]),
            unit: Some(unit),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn unit(&self) -> Option<&[Q]> {
        self.unit.as_deref()
    }

    pub fn constants(&self, op: &str) -> Option<&StructureConstants> {
        self.structure.get(op)
    }

    fn c(&self, op: &str, i: usize, j: usize, k: usize) -> &Q {
        &self.structure[op][(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        let mut e = vec![Q::zero(); self.dim];
        e[i] = Q::one();
        e
    }

    /// Product of two coordinate vectors under `op`.
    pub fn product(&self, op: &str, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..self.dim {
                    let c = self.c(op, i, j, k);
                    if !c.is_zero() {
                        out[k] += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Evaluates a term tree on an assignment of vectors to variables.
    pub fn eval_tree(&self, tree: &Tree, assign: &BTreeMap<&str, Vec<Q>>) -> Vec<Q> {
        match tree {
            Tree::Leaf(v) => assign[v.as_str()].clone(),
            Tree::Node(op, l, r) => {
                let lv = self.eval_tree(l, assign);
                let rv = self.eval_tree(r, assign);
                self.product(op, &lv, &rv)
            }
        }
    }

    /// Evaluates a relation on one basis tuple; the residual vector.
    pub fn eval_relation(&self, rel: &Relation, tuple: &[usize]) -> Vec<Q> {
        let assign: BTreeMap<&str, Vec<Q>> = rel
            .variables()
            .iter()
            .zip(tuple)
            .map(|(v, &i)| (v.as_str(), self.basis_vector(i)))
            .collect();
        let mut out = vec![Q::zero(); self.dim];
        for (m, coeff) in rel.terms() {
            let val = self.eval_tree(m.tree(), &assign);
            for k in 0..self.dim {
                out[k] += coeff * &val[k];
            }
        }
        out
    }

    fn check_signature_compatible(&self, rels: &RelationSet) -> Result<(), FdError> {
        for op in rels.signature.ops() {
            match self.signature.op(&op.name) {
                None => {
                    return Err(FdError::SignatureMismatch(format!(
                        "algebra has no operation `{}`",
                        op.name
                    )))
                }
                Some(own) => {
                    if own.symmetry != op.symmetry {
                        return Err(FdError::SignatureMismatch(format!(
                            "operation `{}` has a different symmetry in the algebra",
                            op.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Evaluates every relation on every basis tuple (`dim^n` tuples per
    /// relation). Exact: passes iff all residuals vanish.
    pub fn check_relations(&self, rels: &RelationSet) -> Result<CheckReport, FdError> {
        self.check_signature_compatible(rels)?;
        let mut witnesses = Vec::new();
        for (ri, rel) in rels.relations.iter().enumerate() {
            let n = rel.variables().len();
            let total = self.dim.pow(n as u32);
            let failures = parallel::map_indexed(total, |t| {
                let tuple = decode_tuple(t, n, self.dim);
                let residual = self.eval_relation(rel, &tuple);
                if residual.iter().all(|x| x.is_zero()) {
                    None
                } else {
                    Some(CheckWitness { relation_index: ri, tuple, residual })
                }
            });
            witnesses.extend(failures.into_iter().flatten());
        }
        Ok(CheckReport { pass: witnesses.is_empty(), witnesses })
    }

    /// Convenience: pass/fail only.
    pub fn satisfies(&self, rels: &RelationSet) -> Result<bool, FdError> {
        Ok(self.check_relations(rels)?.pass)
    }

    /// The subspace of vectors `c` with `c op a = sign * (a op c)` for all
    /// `a` (commutant for `sign = +1`, anticommutant for `-1`).
    pub fn commutant(&self, op: &str, sign: i8) -> Subspace {
        let s = if sign >= 0 { Q::one() } else { -Q::one() };
        // Unknowns: coordinates of c. Equations: for each basis a = e_j and
        // each coordinate k: sum_i c_i (c[i][j][k] - sign*c[j][i][k]) = 0.
        let mut rows = Vec::new();
        for j in 0..self.dim {
            for k in 0..self.dim {
                let mut row = vec![Q::zero(); self.dim];
                let mut nonzero = false;
                for i in 0..self.dim {
                    let val = self.c(op, i, j, k) - &(&s * self.c(op, j, i, k));
                    if !val.is_zero() {
                        nonzero = true;
                    }
                    row[i] = val;
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
        Subspace { ambient_dim: self.dim, basis: kernel_basis(rows, self.dim) }
    }

    /// Does `v` lie in the commutant (`sign = +1`) / anticommutant (`-1`)?
    pub fn in_commutant(&self, op: &str, sign: i8, v: &[Q]) -> bool {
        let s = if sign >= 0 { Q::one() } else { -Q::one() };
        for j in 0..self.dim {
            let e = self.basis_vector(j);
            let left = self.product(op, v, &e);
            let right = self.product(op, &e, v);
            for k in 0..self.dim {
                if left[k] != &s * &right[k] {
                    return false;
                }
            }
        }
        true
    }

    /// Derives a new algebra whose products are linear combinations of the
    /// old ones with optional argument swaps.
    pub fn transform(&self, recipe: &TransformRecipe) -> Result<FDAlgebra, FdError> {
        let mut structure: BTreeMap<String, StructureConstants> = BTreeMap::new();
        for op in recipe.target.ops() {
            let rules = recipe
                .rules
                .get(&op.name)
                .ok_or_else(|| FdError::BadRecipe(format!("no rule for target op `{}`", op.name)))?;
            let mut c = vec![Q::zero(); self.dim * self.dim * self.dim];
            for (coeff, src, swapped) in rules {
                if !self.signature.has_op(src) {
                    return Err(FdError::BadRecipe(format!("unknown source op `{src}`")));
                }
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        let (si, sj) = if *swapped { (j, i) } else { (i, j) };
                        for k in 0..self.dim {
                            let v = self.c(src, si, sj, k);
                            if !v.is_zero() {
                                c[(i * self.dim + j) * self.dim + k] += coeff * v;
                            }
                        }
                    }
                }
            }
            structure.insert(op.name.clone(), c);
        }
        FDAlgebra::new(self.dim, recipe.target.clone(), structure, None)
    }

    /// Same algebra with basis vectors permuted: new `e_i` is old
    /// `e_{perm[i]}`.
    pub fn permute_basis(&self, perm: &[usize]) -> Result<FDAlgebra, FdError> {
        if perm.len() != self.dim {
            return Err(FdError::DimensionMismatch("permutation length".into()));
        }
        let mut structure = BTreeMap::new();
        for (op, _) in &self.structure {
            let mut c = vec![Q::zero(); self.dim * self.dim * self.dim];
            for i in 0..self.dim {
                for j in 0..self.dim {
                    for k in 0..self.dim {
                        // old coordinates: products of old basis vectors
                        let v = self.c(op, perm[i], perm[j], perm[k]);
                        c[(i * self.dim + j) * self.dim + k] = v.clone();
                    }
                }
            }
            structure.insert(op.clone(), c);
        }
        FDAlgebra::new(self.dim, self.signature.clone(), structure, None)
    }
}

fn decode_tuple(mut t: usize, n: usize, dim: usize) -> Vec<usize> {
    let mut tuple = vec![0usize; n];
    for slot in (0..n).rev() {
        tuple[slot] = t % dim;
        t /= dim;
    }
    tuple
}

/// One failing evaluation: which relation, on which basis tuple, with what
/// residual vector.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckWitness {
    pub relation_index: usize,
    pub tuple: Vec<usize>,
    pub residual: Vec<Q>,
}

/// Outcome of an exhaustive relation check.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub pass: bool,
    pub witnesses: Vec<CheckWitness>,
}

/// A linear subspace given by a reduced basis of coordinate vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut residual = v.to_vec();
        for row in &self.basis {
            let lead = row.iter().position(|x| !x.is_zero()).expect("basis rows nonzero");
            let c = residual[lead].clone();
            if !c.is_zero() {
                for k in 0..residual.len() {
                    let delta = &c * &row[k];
                    residual[k] = residual[k].clone() - delta;
                }
            }
        }
        residual.iter().all(|x| x.is_zero())
    }
}

/// Kernel of the linear system given by `rows` (each row is one equation
/// over `n` unknowns), as a reduced basis.
pub(crate) fn kernel_basis(rows: Vec<Vec<Q>>, n: usize) -> Vec<Vec<Q>> {
    let mut m = rows;
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = Q::one() / m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x = x.clone() * &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in 0..n {
                    let delta = &f * &m[rank][k];
                    m[r][k] = m[r][k].clone() - delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Q::zero(); n];
            v[fc] = Q::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][fc].clone();
            }
            v
        })
        .collect()
}

/// Row space basis in reduced echelon form.
pub(crate) fn row_space_basis(rows: Vec<Vec<Q>>, n: usize) -> Vec<Vec<Q>> {
    let mut m = rows;
    let mut rank = 0usize;
    for col in 0..n {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = Q::one() / m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x = x.clone() * &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in 0..n {
                    let delta = &f * &m[rank][k];
                    m[r][k] = m[r][k].clone() - delta;
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
    m
}

/// A product transform: each target operation is a linear combination of
/// source operations, possibly with swapped arguments.
#[derive(Clone, Debug)]
pub struct TransformRecipe {
    pub target: Signature,
    /// target op name -> sum of (coefficient, source op, swap arguments?)
    pub rules: BTreeMap<String, Vec<(Q, String, bool)>>,
}

impl TransformRecipe {
    pub fn new(target: Signature, rules: BTreeMap<String, Vec<(Q, String, bool)>>) -> Self {
        TransformRecipe { target, rules }
    }

    /// `mu = prec + succ` from a dendriform pair.
    pub fn star_from_dendriform() -> Self {
        TransformRecipe {
            target: Signature::single_plain(),
            rules: BTreeMap::from([(
                "mu".to_string(),
                vec![(Q::one(), "prec".to_string(), false), (Q::one(), "succ".to_string(), false)],
            )]),
        }
    }

    /// `mu = prec + succ + dot` from a tridendriform triple.
    pub fn star_from_tridendriform() -> Self {
        TransformRecipe {
            target: Signature::single_plain(),
            rules: BTreeMap::from([(
                "mu".to_string(),
                vec![
                    (Q::one(), "prec".to_string(), false),
                    (Q::one(), "succ".to_string(), false),
                    (Q::one(), "dot".to_string(), false),
                ],
            )]),
        }
    }

    /// Polarization of one product: `dot = (mu + flip)/2`, `br = (mu -
    /// flip)/2`.
    pub fn polarize_plain() -> Self {
        let half = crate::rational::qr(1, 2);
        TransformRecipe {
            target: Signature::polarized(),
            rules: BTreeMap::from([
                (
                    "dot".to_string(),
                    vec![(half.clone(), "mu".to_string(), false), (half.clone(), "mu".to_string(), true)],
                ),
                (
                    "br".to_string(),
                    vec![(half.clone(), "mu".to_string(), false), (-half, "mu".to_string(), true)],
                ),
            ]),
        }
    }

    /// Depolarization: `mu = dot + br`.
    pub fn depolarize() -> Self {
        TransformRecipe {
            target: Signature::single_plain(),
            rules: BTreeMap::from([(
                "mu".to_string(),
                vec![(Q::one(), "dot".to_string(), false), (Q::one(), "br".to_string(), false)],
            )]),
        }
    }

    /// Dendriform polarization: `star = (succ + prec-flip)/2`,
    /// `circ = (succ - prec-flip)/2`.
    pub fn polarize_dendriform() -> Self {
        let half = crate::rational::qr(1, 2);
        TransformRecipe {
            target: Signature::polarized_dendriform(),
            rules: BTreeMap::from([
                (
                    "star".to_string(),
                    vec![
                        (half.clone(), "succ".to_string(), false),
                        (half.clone(), "prec".to_string(), true),
                    ],
                ),
                (
                    "circ".to_string(),
                    vec![
                        (half.clone(), "succ".to_string(), false),
                        (-half, "prec".to_string(), true),
                    ],
                ),
            ]),
        }
    }

    /// Dendriform depolarization: `prec = star-flip - circ-flip`,
    /// `succ = star + circ`.
    pub fn depolarize_dendriform() -> Self {
        TransformRecipe {
            target: Signature::dendriform(),
            rules: BTreeMap::from([
                (
                    "prec".to_string(),
                    vec![
                        (Q::one(), "star".to_string(), true),
                        (-Q::one(), "circ".to_string(), true),
                    ],
                ),
                (
                    "succ".to_string(),
                    vec![
                        (Q::one(), "star".to_string(), false),
                        (Q::one(), "circ".to_string(), false),
                    ],
                ),
            ]),
        }
    }

    /// Commutator bracket `br(a,b) = ab - ba` as a single anticommutative
    /// operation of weight 1.
    pub fn commutator() -> Self {
        let br = Signature::new(vec![crate::term::OpSymbol::new(
            "br",
            Symmetry::Anticommutative,
            1,
        )
        .unwrap()])
        .unwrap();
        TransformRecipe {
            target: br,
            rules: BTreeMap::from([(
                "br".to_string(),
                vec![(Q::one(), "mu".to_string(), false), (-Q::one(), "mu".to_string(), true)],
            )]),
        }
    }

    /// Anticommutator `dot(a,b) = ab + ba` as a single commutative
    /// operation.
    pub fn anticommutator() -> Self {
        let dot = Signature::new(vec![crate::term::OpSymbol::new(
            "dot",
            Symmetry::Commutative,
            0,
        )
        .unwrap()])
        .unwrap();
        TransformRecipe {
            target: dot,
            rules: BTreeMap::from([(
                "dot".to_string(),
                vec![(Q::one(), "mu".to_string(), false), (Q::one(), "mu".to_string(), true)],
            )]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::term::OpSymbol;

    fn v(s: &str) -> Tree {
        Tree::leaf(s)
    }

    /// Table fixture: a prec a = -b, a succ a = a + b, b succ a = b.
    fn row1() -> FDAlgebra {
        FDAlgebra::from_products(
            2,
            Signature::dendriform(),
            &[
                ("prec", 0, 0, vec![(q(-1), 1)]),
                ("succ", 0, 0, vec![(q(1), 0), (q(1), 1)]),
                ("succ", 1, 0, vec![(q(1), 1)]),
            ],
            None,
        )
        .unwrap()
    }

    fn dend_relations() -> RelationSet {
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
        RelationSet::new("loday", sig, vec![d1, d2, d3]).unwrap()
    }

    #[test]
    fn zero_algebra_passes_everything_multilinear() {
        let alg = FDAlgebra::zero(3, Signature::dendriform());
        assert!(alg.satisfies(&dend_relations()).unwrap());
    }

    #[test]
    fn row1_fails_loday_with_witness() {
        let report = row1().check_relations(&dend_relations()).unwrap();
        assert!(!report.pass);
        assert!(!report.witnesses.is_empty());
        for w in &report.witnesses {
            assert!(w.residual.iter().any(|x| !x.is_zero()));
        }
    }

    #[test]
    fn check_is_invariant_under_basis_permutation() {
        let alg = row1();
        let permuted = alg.permute_basis(&[1, 0]).unwrap();
        let rels = dend_relations();
        assert_eq!(alg.satisfies(&rels).unwrap(), permuted.satisfies(&rels).unwrap());
    }

    #[test]
    fn star_transform_of_row1_matches_table() {
        // a star a = a, b star a = b, everything else zero.
        let star = row1().transform(&TransformRecipe::star_from_dendriform()).unwrap();
        let a = star.basis_vector(0);
        let b = star.basis_vector(1);
        assert_eq!(star.product("mu", &a, &a), a);
        assert_eq!(star.product("mu", &b, &a), b);
        assert_eq!(star.product("mu", &a, &b), vec![q(0), q(0)]);
        assert_eq!(star.product("mu", &b, &b), vec![q(0), q(0)]);
    }

    #[test]
    fn matrix_algebra_is_associative_and_unital() {
        let m2 = FDAlgebra::matrix_algebra(2);
        let sig = Signature::single_plain();
        let mu = |l, r| Tree::node("mu", l, r);
        let assoc = Relation::new(
            &sig,
            vec![
                (q(1), mu(mu(v("a"), v("b")), v("c"))),
                (q(-1), mu(v("a"), mu(v("b"), v("c")))),
            ],
        )
        .unwrap();
        let set = RelationSet::new("assoc", sig, vec![assoc]).unwrap();
        assert!(m2.satisfies(&set).unwrap());
        assert!(m2.unit().is_some());
    }

    #[test]
    fn commutant_of_matrix_algebra_is_scalars() {
        let m2 = FDAlgebra::matrix_algebra(2);
        let c = m2.commutant("mu", 1);
        assert_eq!(c.dim(), 1);
        // The scalar matrices: E11 + E22.
        assert!(c.contains(&[q(1), q(0), q(0), q(1)]));
        assert!(!c.contains(&[q(1), q(0), q(0), q(0)]));
        let anti = m2.commutant("mu", -1);
        assert_eq!(anti.dim(), 0);
    }

    #[test]
    fn commutant_of_commutative_algebra_is_everything() {
        let alg = FDAlgebra::truncated_polynomial(3);
        assert_eq!(alg.commutant("mu", 1).dim(), 3);
    }

    #[test]
    fn commutator_of_matrix_algebra_satisfies_jacobi() {
        let m2 = FDAlgebra::matrix_algebra(2);
        let lie = m2.transform(&TransformRecipe::commutator()).unwrap();
        let sig = lie.signature().clone();
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
        assert!(lie.satisfies(&set).unwrap());
    }

    #[test]
    fn polarize_then_depolarize_is_identity_on_constants() {
        let m2 = FDAlgebra::matrix_algebra(2);
        let pol = m2.transform(&TransformRecipe::polarize_plain()).unwrap();
        let back = pol.transform(&TransformRecipe::depolarize()).unwrap();
        assert_eq!(back.constants("mu"), m2.constants("mu"));
        let d = row1();
        let pd = d.transform(&TransformRecipe::polarize_dendriform()).unwrap();
        let dback = pd.transform(&TransformRecipe::depolarize_dendriform()).unwrap();
        assert_eq!(dback.constants("prec"), d.constants("prec"));
        assert_eq!(dback.constants("succ"), d.constants("succ"));
    }

    #[test]
    fn symmetry_flags_are_validated() {
        let sig = Signature::new(vec![OpSymbol::new("dot", Symmetry::Commutative, 0).unwrap()])
            .unwrap();
        let bad = FDAlgebra::from_products(2, sig, &[("dot", 0, 1, vec![(q(1), 0)])], None);
        assert_eq!(bad.unwrap_err(), FdError::SymmetryViolation("dot".to_string()));
    }

    #[test]
    fn relation_check_requires_matching_ops() {
        let alg = FDAlgebra::matrix_algebra(2);
        let rels = dend_relations();
        assert!(matches!(alg.check_relations(&rels), Err(FdError::SignatureMismatch(_))));
    }
}
