//! Truncated formal deformations and filtered algebras.
//!
//! A deformed algebra is a dendriform pair whose structure constants are
//! polynomials in the deformation parameter, truncated at a fixed order.
//! The defining relations must hold as exact polynomial identities modulo
//! that order; the fiber at parameter zero must be commutative
//! (`a succ b = b prec a`) or anticommutative, as declared. The
//! infinitesimal algebra extracts the fiber product and the first-order
//! skew term
//!
//! ```text
//!   a circ-bar b = coefficient of nu in (a succ b - b prec a)/2
//! ```
//!
//! (for the anticommutative variant the roles of the two extracted
//! products are exchanged). Filtered algebras carry a degree per basis
//! vector; the associated graded keeps the degree-preserving slice, and
//! for almost-commutative filtrations the degree-shift slice of
//! `(a succ b - b prec a)/2` is the extracted bracket, degree falling by
//! one for ascending filtrations and rising by one for descending ones
//! (the parameter-adic filtration of a deformation is descending).

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::dendrify::{dendrify, DendrifyConfig, DendrifyError};
use crate::fd::{CheckReport, FDAlgebra, FdError, StructureConstants};
use crate::polarize::{polarize_dendriform_set, PolarizeError};
use crate::rational::{qr, Q};
use crate::relspace::{lowest_weight_generators, SpanError};
use crate::term::{Relation, RelationSet, Signature, TermError, Tree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GradingError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the fiber at zero is not {0} (offending pair e_{1}, e_{2})")]
    NotCommutativeFiber(String, usize, usize),
    #[error("relation {0} fails modulo the truncation order on tuple {1:?}")]
    RelationsFailModNu(usize, Vec<usize>),
    #[error("deformation needs the prec/succ signature, relations included")]
    BadDeformationSignature,
    #[error("filtration incompatible: e_{0} {op} e_{1} has a component of bad degree", op = .2)]
    IncompatibleFiltration(usize, usize, String),
    #[error(transparent)]
    Fd(#[from] FdError),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Dendrify(#[from] DendrifyError),
    #[error(transparent)]
    Polarize(#[from] PolarizeError),
    #[error(transparent)]
    Span(#[from] SpanError),
}

/// A polynomial in the deformation parameter, truncated: `coeffs[k]` is
/// the coefficient of the k-th power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyNu {
    pub coeffs: Vec<Q>,
}

impl PolyNu {
    pub fn zero(order: usize) -> Self {
        PolyNu { coeffs: vec![Q::zero(); order] }
    }

    pub fn constant(order: usize, c: Q) -> Self {
        let mut p = Self::zero(order);
        p.coeffs[0] = c;
        p
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add_assign(&mut self, other: &PolyNu) {
        for (k, c) in other.coeffs.iter().enumerate() {
            self.coeffs[k] += c;
        }
    }

    pub fn scale(&self, c: &Q) -> PolyNu {
        PolyNu { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Truncating product.
    pub fn mul(&self, other: &PolyNu) -> PolyNu {
        let order = self.order();
        let mut out = PolyNu::zero(order);
        for i in 0..order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..order - i {
                if !other.coeffs[j].is_zero() {
                    out.coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        out
    }
}

/// A truncated formal deformation of a commutative (`sign = +1`) or
/// anticommutative (`sign = -1`) dendriform pair, together with the
/// dendriform relation set it deforms in.
#[derive(Clone, Debug)]
pub struct DeformedAlgebra {
    dim: usize,
    order: usize,
    sign: i8,
    /// Per op (`prec`, `succ`), flattened `(i*dim + j)*dim + k`.
    structure: BTreeMap<String, Vec<PolyNu>>,
    relations: RelationSet,
}

impl DeformedAlgebra {
    pub fn new(
        dim: usize,
        order: usize,
        sign: i8,
        structure: BTreeMap<String, Vec<PolyNu>>,
        relations: RelationSet,
    ) -> Result<Self, GradingError> {
        if dim == 0 || order == 0 {
            return Err(GradingError::DimensionMismatch("dimension and order must be positive".into()));
        }
        if relations.signature != Signature::dendriform() {
            return Err(GradingError::BadDeformationSignature);
        }
        for op in ["prec", "succ"] {
            let c = structure
                .get(op)
                .ok_or_else(|| GradingError::DimensionMismatch(format!("missing `{op}` constants")))?;
            if c.len() != dim * dim * dim || c.iter().any(|p| p.order() != order) {
                return Err(GradingError::DimensionMismatch(format!("`{op}` constants shape")));
            }
        }
        let d = DeformedAlgebra { dim, order, sign, structure, relations };
        // Fiber symmetry: a succ b = sign * (b prec a) at parameter zero.
        let s = if sign >= 0 { Q::from_integer(1.into()) } else { Q::from_integer((-1).into()) };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let succ0 = d.poly("succ", i, j, k).coeff(0);
                    let prec0 = d.poly("prec", j, i, k).coeff(0);
                    if succ0 != &s * &prec0 {
                        let kind = if sign >= 0 { "commutative" } else { "anticommutative" };
                        return Err(GradingError::NotCommutativeFiber(kind.into(), i, j));
                    }
                }
            }
        }
        // The deformed relations must hold exactly modulo the truncation.
        for (ri, rel) in d.relations.relations.iter().enumerate() {
            let n = rel.variables().len();
            let mut tuple = vec![0usize; n];
            loop {
                let res = d.eval_relation(rel, &tuple);
                if res.iter().any(|p| !p.is_zero()) {
                    return Err(GradingError::RelationsFailModNu(ri, tuple));
                }
                if !next_tuple(&mut tuple, dim) {
                    break;
                }
            }
        }
        Ok(d)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn poly(&self, op: &str, i: usize, j: usize, k: usize) -> &PolyNu {
        &self.structure[op][(i * self.dim + j) * self.dim + k]
    }

    /// Product of coordinate vectors with polynomial entries.
    pub fn product(&self, op: &str, x: &[PolyNu], y: &[PolyNu]) -> Vec<PolyNu> {
        let mut out = vec![PolyNu::zero(self.order); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].mul(&y[j]);
                for k in 0..self.dim {
                    let c = self.poly(op, i, j, k);
                    if !c.is_zero() {
                        out[k].add_assign(&xy.mul(c));
                    }
                }
            }
        }
        out
    }

    fn basis_vector(&self, i: usize) -> Vec<PolyNu> {
        let mut v = vec![PolyNu::zero(self.order); self.dim];
        v[i] = PolyNu::constant(self.order, Q::from_integer(1.into()));
        v
    }

    /// Evaluates a relation over `prec`/`succ` (or the polarized
    /// `star`/`circ` combinations) on one basis tuple.
    pub fn eval_relation(&self, rel: &Relation, tuple: &[usize]) -> Vec<PolyNu> {
        let assign: BTreeMap<&str, Vec<PolyNu>> = rel
            .variables()
            .iter()
            .zip(tuple)
            .map(|(v, &i)| (v.as_str(), self.basis_vector(i)))
            .collect();
        let mut out = vec![PolyNu::zero(self.order); self.dim];
        for (m, coeff) in rel.terms() {
            let val = self.eval_tree(m.tree(), &assign);
            for k in 0..self.dim {
                out[k].add_assign(&val[k].scale(coeff));
            }
        }
        out
    }

    fn eval_tree(&self, tree: &Tree, assign: &BTreeMap<&str, Vec<PolyNu>>) -> Vec<PolyNu> {
        match tree {
            Tree::Leaf(v) => assign[v.as_str()].clone(),
            Tree::Node(op, l, r) => {
                let lv = self.eval_tree(l, assign);
                let rv = self.eval_tree(r, assign);
                match op.as_str() {
                    "prec" | "succ" => self.product(op, &lv, &rv),
                    // Polarized combinations of the deformed pair:
                    // star = (succ + prec-flip)/2, circ = (succ - prec-flip)/2.
                    "star" | "circ" => {
                        let s = self.product("succ", &lv, &rv);
                        let p = self.product("prec", &rv, &lv);
                        let half = qr(1, 2);
                        let mut out = Vec::with_capacity(self.dim);
                        for k in 0..self.dim {
                            let mut acc = s[k].scale(&half);
                            let flip = if op == "star" { half.clone() } else { -half.clone() };
                            acc.add_assign(&p[k].scale(&flip));
                            out.push(acc);
                        }
                        out
                    }
                    other => panic!("deformed evaluation: unsupported op `{other}`"),
                }
            }
        }
    }

    /// The fiber at parameter zero, as a dendriform pair.
    pub fn base(&self) -> FDAlgebra {
        let n = self.dim;
        let grab = |op: &str| -> StructureConstants {
            (0..n * n * n).map(|idx| self.structure[op][idx].coeff(0)).collect()
        };
        FDAlgebra::new(
            n,
            Signature::dendriform(),
            BTreeMap::from([("prec".to_string(), grab("prec")), ("succ".to_string(), grab("succ"))]),
            None,
        )
        .expect("fiber shapes are valid")
    }

    /// The infinitesimal algebra `(times, circ-bar)`, returned over the
    /// `star`/`circ` signature so polarized dendriform relation sets apply
    /// directly. For the commutative sign, `star` is the fiber product and
    /// `circ` the first-order coefficient of `(a succ b - b prec a)/2`;
    /// for the anticommutative sign the roles are exchanged.
    pub fn infinitesimal(&self) -> FDAlgebra {
        let n = self.dim;
        let half = qr(1, 2);
        let mut star: StructureConstants = vec![Q::zero(); n * n * n];
        let mut circ: StructureConstants = vec![Q::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let idx = (i * n + j) * n + k;
                    let succ = self.poly("succ", i, j, k);
                    let prec_flip = self.poly("prec", j, i, k);
                    let sym = |ord: usize| (succ.coeff(ord) + prec_flip.coeff(ord)) * &half;
                    let skew = |ord: usize| (succ.coeff(ord) - prec_flip.coeff(ord)) * &half;
                    if self.sign >= 0 {
                        star[idx] = succ.coeff(0);
                        circ[idx] = skew(1);
                    } else {
                        star[idx] = sym(1);
                        circ[idx] = skew(0);
                    }
                }
            }
        }
        FDAlgebra::new(
            n,
            Signature::polarized_dendriform(),
            BTreeMap::from([("star".to_string(), star), ("circ".to_string(), circ)]),
            None,
        )
        .expect("infinitesimal shapes are valid")
    }
}

fn next_tuple(tuple: &mut [usize], dim: usize) -> bool {
    for slot in (0..tuple.len()).rev() {
        tuple[slot] += 1;
        if tuple[slot] < dim {
            return true;
        }
        tuple[slot] = 0;
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiltrationDirection {
    Ascending,
    Descending,
}

/// A dendriform pair with a degree per basis vector. For ascending
/// filtrations the span of degrees `<= i` is the i-th filtration step and
/// products may only lower the degree sum; descending filtrations reverse
/// the inequality (the parameter-adic filtration of a deformation is the
/// standard example).
#[derive(Clone, Debug)]
pub struct FilteredAlgebra {
    alg: FDAlgebra,
    degrees: Vec<u32>,
    direction: FiltrationDirection,
}

/// Output of the associated-graded construction.
#[derive(Clone, Debug)]
pub struct GradedOutput {
    /// The graded dendriform pair (degree-preserving slice).
    pub gr: FDAlgebra,
    /// Whether the graded pair is commutative (`a prec b = b succ a`).
    pub almost_commutative: bool,
    /// The extracted `(times, circ-bar)` pair over `star`/`circ`, present
    /// when the graded pair is commutative.
    pub infinitesimal: Option<FDAlgebra>,
}

impl FilteredAlgebra {
    pub fn new(
        alg: FDAlgebra,
        degrees: Vec<u32>,
        direction: FiltrationDirection,
    ) -> Result<Self, GradingError> {
        if alg.signature() != &Signature::dendriform() {
            return Err(GradingError::BadDeformationSignature);
        }
        if degrees.len() != alg.dim() {
            return Err(GradingError::DimensionMismatch("degrees length".into()));
        }
        let n = alg.dim();
        for op in ["prec", "succ"] {
            for i in 0..n {
                for j in 0..n {
                    let p = alg.product(op, &alg.basis_vector(i), &alg.basis_vector(j));
                    for (k, x) in p.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        let ok = match direction {
                            FiltrationDirection::Ascending => degrees[k] <= degrees[i] + degrees[j],
                            FiltrationDirection::Descending => degrees[k] >= degrees[i] + degrees[j],
                        };
                        if !ok {
                            return Err(GradingError::IncompatibleFiltration(i, j, op.to_string()));
                        }
                    }
                }
            }
        }
        Ok(FilteredAlgebra { alg, degrees, direction })
    }

    pub fn algebra(&self) -> &FDAlgebra {
        &self.alg
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn direction(&self) -> FiltrationDirection {
        self.direction
    }

    /// The associated graded pair, the almost-commutativity flag, and the
    /// extracted infinitesimal pair when almost commutative.
    pub fn associated_graded(&self) -> GradedOutput {
        let n = self.alg.dim();
        let half = qr(1, 2);
        let slice = |op: &str, shift: i64| -> StructureConstants {
            let mut c = vec![Q::zero(); n * n * n];
            for i in 0..n {
                for j in 0..n {
                    let p = self.alg.product(op, &self.alg.basis_vector(i), &self.alg.basis_vector(j));
                    for (k, x) in p.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        let want = self.degrees[i] as i64 + self.degrees[j] as i64 + shift;
                        if self.degrees[k] as i64 == want {
                            c[(i * n + j) * n + k] = x.clone();
                        }
                    }
                }
            }
            c
        };
        let gr = FDAlgebra::new(
            n,
            Signature::dendriform(),
            BTreeMap::from([("prec".to_string(), slice("prec", 0)), ("succ".to_string(), slice("succ", 0))]),
            None,
        )
        .expect("graded shapes are valid");

        let mut almost_commutative = true;
        'outer: for i in 0..n {
            for j in 0..n {
                let p = gr.product("prec", &gr.basis_vector(i), &gr.basis_vector(j));
                let s = gr.product("succ", &gr.basis_vector(j), &gr.basis_vector(i));
                if p != s {
                    almost_commutative = false;
                    break 'outer;
                }
            }
        }
        if !almost_commutative {
            return GradedOutput { gr, almost_commutative, infinitesimal: None };
        }

        // Degree-shift slice of (a succ b - b prec a)/2; the shift is -1
        // for ascending filtrations and +1 for descending ones.
        let shift = match self.direction {
            FiltrationDirection::Ascending => -1,
            FiltrationDirection::Descending => 1,
        };
        let succ_sl = slice("succ", shift);
        let mut circ: StructureConstants = vec![Q::zero(); n * n * n];
        let prec_sl = slice("prec", shift);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let idx = (i * n + j) * n + k;
                    let flip = (j * n + i) * n + k;
                    circ[idx] = (&succ_sl[idx] - &prec_sl[flip]) * &half;
                }
            }
        }
        let star = {
            let mut c = vec![Q::zero(); n * n * n];
            for (idx, x) in slice("succ", 0).into_iter().enumerate() {
                c[idx] = x;
            }
            c
        };
        let infinitesimal = FDAlgebra::new(
            n,
            Signature::polarized_dendriform(),
            BTreeMap::from([("star".to_string(), star), ("circ".to_string(), circ)]),
            None,
        )
        .expect("infinitesimal shapes are valid");
        GradedOutput { gr, almost_commutative, infinitesimal: Some(infinitesimal) }
    }
}

/// The parameter-adic filtration of a truncated deformation: basis vectors
/// `e_i nu^k` for `k` below the truncation order, degree `k`, descending.
pub fn nu_adic_filtration(d: &DeformedAlgebra) -> Result<FilteredAlgebra, GradingError> {
    let n = d.dim();
    let ord = d.order();
    let total = n * ord;
    let index = |i: usize, k: usize| k * n + i;
    let mut prec: StructureConstants = vec![Q::zero(); total * total * total];
    let mut succ: StructureConstants = vec![Q::zero(); total * total * total];
    for (op, out) in [("prec", &mut prec), ("succ", &mut succ)] {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let p = d.poly(op, i, j, k);
                    for m in 0..ord {
                        if p.coeff(m).is_zero() {
                            continue;
                        }
                        for ki in 0..ord {
                            for kj in 0..ord {
                                let kk = ki + kj + m;
                                if kk < ord {
                                    let a = index(i, ki);
                                    let b = index(j, kj);
                                    let c = index(k, kk);
                                    out[(a * total + b) * total + c] = p.coeff(m);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let alg = FDAlgebra::new(
        total,
        Signature::dendriform(),
        BTreeMap::from([("prec".to_string(), prec), ("succ".to_string(), succ)]),
        None,
    )?;
    let degrees: Vec<u32> = (0..total).map(|idx| (idx / n) as u32).collect();
    FilteredAlgebra::new(alg, degrees, FiltrationDirection::Descending)
}

/// Report of a membership check against the underline category computed
/// from a one-product source category.
#[derive(Clone, Debug)]
pub struct UnderlineReport {
    /// The computed lowest-weight generators, flattened in weight order.
    pub relations: RelationSet,
    pub report: CheckReport,
}

impl UnderlineReport {
    pub fn pass(&self) -> bool {
        self.report.pass
    }
}

/// Computes the underline category of the polarized dendriform category of
/// `source` (dendrify, polarize, take lowest-weight generators) and checks
/// the algebra against it.
pub fn membership_in_underline(
    inf: &FDAlgebra,
    source: &RelationSet,
) -> Result<UnderlineReport, GradingError> {
    let dend = dendrify(source, &DendrifyConfig::plain_dend())?;
    let pol = polarize_dendriform_set(&dend)?;
    let gens = lowest_weight_generators(&pol)?;
    let relations = RelationSet::new(
        &format!("underline({})", source.name),
        Signature::polarized_dendriform(),
        gens.flatten(),
    )?;
    let report = inf.check_relations(&relations)?;
    Ok(UnderlineReport { relations, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::q;

    fn constant_structure(dim: usize, order: usize, alg: &FDAlgebra) -> BTreeMap<String, Vec<PolyNu>> {
        let mut out = BTreeMap::new();
        for op in ["prec", "succ"] {
            let c = alg.constants(op).unwrap();
            out.insert(
                op.to_string(),
                c.iter().map(|x| PolyNu::constant(order, x.clone())).collect::<Vec<_>>(),
            );
        }
        let _ = dim;
        out
    }

    /// Commutative dendriform fiber: x prec y = y succ x = xy in the
    /// 2-dim truncated polynomial algebra (a Zinbiel-like toy, products
    /// all zero except through the identity operator pattern).
    fn trivial_deformation() -> DeformedAlgebra {
        // prec = succ-flip = multiplication table of a commutative algebra
        // gives a commutative dendriform pair only if the Loday relations
        // hold; the zero pair does trivially.
        let alg = FDAlgebra::zero(2, Signature::dendriform());
        DeformedAlgebra::new(
            2,
            3,
            1,
            constant_structure(2, 3, &alg),
            catalog::relations("loday-dendriform").unwrap().clone(),
        )
        .unwrap()
    }

    #[test]
    fn trivial_deformation_has_zero_bracket_and_passes_zinbiel() {
        let d = trivial_deformation();
        let inf = d.infinitesimal();
        for i in 0..2 {
            for j in 0..2 {
                let c = inf.product("circ", &inf.basis_vector(i), &inf.basis_vector(j));
                assert!(c.iter().all(|x| x.is_zero()));
            }
        }
        assert!(inf.satisfies(catalog::relations("pre-poisson").unwrap()).unwrap());
    }

    #[test]
    fn fiber_symmetry_is_enforced() {
        // succ(e0,e0) = e0 with prec = 0 breaks the commutative fiber.
        let alg = FDAlgebra::from_products(
            2,
            Signature::dendriform(),
            &[("succ", 0, 0, vec![(q(1), 0)])],
            None,
        )
        .unwrap();
        let err = DeformedAlgebra::new(
            2,
            3,
            1,
            constant_structure(2, 3, &alg),
            catalog::relations("loday-dendriform").unwrap().clone(),
        )
        .unwrap_err();
        assert!(matches!(err, GradingError::NotCommutativeFiber(_, _, _)));
    }

    #[test]
    fn relations_mod_nu_are_enforced() {
        // A commutative pair that is not Loday dendriform: x prec y =
        // y succ x = e0 always (constant product table, not associative
        // compatible).
        let alg = FDAlgebra::from_products(
            2,
            Signature::dendriform(),
            &[
                ("prec", 0, 0, vec![(q(1), 0)]),
                ("succ", 0, 0, vec![(q(1), 0)]),
                ("prec", 1, 1, vec![(q(1), 1)]),
                ("succ", 1, 1, vec![(q(1), 1)]),
            ],
            None,
        )
        .unwrap();
        let err = DeformedAlgebra::new(
            2,
            3,
            1,
            constant_structure(2, 3, &alg),
            catalog::relations("loday-dendriform").unwrap().clone(),
        )
        .unwrap_err();
        assert!(matches!(err, GradingError::RelationsFailModNu(_, _)));
    }

    #[test]
    fn trivially_filtered_commutative_pair_reproduces_itself() {
        // All degrees zero: gr = alg, bracket = 0.
        let alg = FDAlgebra::zero(2, Signature::dendriform());
        let f = FilteredAlgebra::new(alg.clone(), vec![0, 0], FiltrationDirection::Ascending)
            .unwrap();
        let out = f.associated_graded();
        assert!(out.almost_commutative);
        assert_eq!(out.gr.constants("prec"), alg.constants("prec"));
        let inf = out.infinitesimal.unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let c = inf.product("circ", &inf.basis_vector(i), &inf.basis_vector(j));
                assert!(c.iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn incompatible_filtration_is_rejected() {
        // succ(e0,e0) = e1 with ascending degrees deg(e0)=0, deg(e1)=1
        // raises the degree.
        let alg = FDAlgebra::from_products(
            2,
            Signature::dendriform(),
            &[("succ", 0, 0, vec![(q(1), 1)])],
            None,
        )
        .unwrap();
        let err =
            FilteredAlgebra::new(alg, vec![0, 1], FiltrationDirection::Ascending).unwrap_err();
        assert!(matches!(err, GradingError::IncompatibleFiltration(_, _, _)));
    }

    #[test]
    fn membership_report_for_zero_algebra() {
        let inf = FDAlgebra::zero(2, Signature::polarized_dendriform());
        let report =
            membership_in_underline(&inf, catalog::relations("associative").unwrap()).unwrap();
        assert!(report.pass());
        assert!(!report.relations.relations.is_empty());
    }
}
