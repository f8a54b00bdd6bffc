//! Tensor computations for infinitesimal bialgebras.
//!
//! Works with an associative one-product algebra `A` and coordinate arrays
//! for `A (x) A`, `A (x) A (x) A` and coproducts `A -> A (x) A`. The
//! associative Yang-Baxter tensor is computed by the unit-free expansion
//!
//! ```text
//!   AYB(r) = sum_{i,j} u_i u_j (x) v_j (x) v_i
//!          - sum_{i,j} u_i (x) v_i u_j (x) v_j
//!          + sum_{i,j} u_j (x) u_i (x) v_i v_j        r = sum u_i (x) v_i
//! ```
//!
//! which avoids assuming the algebra has a unit.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::fd::{FDAlgebra, FdError, StructureConstants};
use crate::operators::{classify_operator, Classification, OperatorError, OperatorSpec};
use crate::rational::Q;
use crate::term::Signature;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BialgebraError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("algebra is not associative (offending basis triple {0:?})")]
    NotAssociative([usize; 3]),
    #[error("algebra must have a single operation")]
    NotSingleOp,
    #[error("(algebra, coproduct) is not an infinitesimal bialgebra: {0}")]
    NotBialgebra(String),
    #[error("the Yang-Baxter tensor of r is not invariant")]
    NotInvariant,
    #[error(transparent)]
    Fd(#[from] FdError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
}

/// Element of `A (x) A`: coefficients over basis pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor2 {
    pub entries: Vec<Vec<Q>>,
}

impl Tensor2 {
    pub fn zero(dim: usize) -> Self {
        Tensor2 { entries: vec![vec![Q::zero(); dim]; dim] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|x| x.is_zero()))
    }
}

/// Element of `A (x) A (x) A`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3 {
    pub entries: Vec<Vec<Vec<Q>>>,
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Self {
        Tensor3 { entries: vec![vec![vec![Q::zero(); dim]; dim]; dim] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries
            .iter()
            .all(|p| p.iter().all(|row| row.iter().all(|x| x.is_zero())))
    }
}

/// A linear map `A -> A (x) A`: `delta[i][j][k]` is the coefficient of
/// `e_j (x) e_k` in the image of `e_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coproduct {
    pub delta: Vec<Vec<Vec<Q>>>,
}

impl Coproduct {
    pub fn zero(dim: usize) -> Self {
        Coproduct { delta: vec![vec![vec![Q::zero(); dim]; dim]; dim] }
    }

    pub fn dim(&self) -> usize {
        self.delta.len()
    }
}

fn mu_name(alg: &FDAlgebra) -> Result<String, BialgebraError> {
    if alg.signature().ops().len() == 1 {
        Ok(alg.signature().ops()[0].name.clone())
    } else {
        Err(BialgebraError::NotSingleOp)
    }
}

fn require_associative(alg: &FDAlgebra, op: &str) -> Result<(), BialgebraError> {
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let ei = alg.basis_vector(i);
                let ej = alg.basis_vector(j);
                let ek = alg.basis_vector(k);
                let l = alg.product(op, &alg.product(op, &ei, &ej), &ek);
                let r = alg.product(op, &ei, &alg.product(op, &ej, &ek));
                if l != r {
                    return Err(BialgebraError::NotAssociative([i, j, k]));
                }
            }
        }
    }
    Ok(())
}

fn check_dim2(alg: &FDAlgebra, r: &Tensor2) -> Result<(), BialgebraError> {
    if r.dim() != alg.dim() || r.entries.iter().any(|row| row.len() != alg.dim()) {
        return Err(BialgebraError::DimensionMismatch("tensor vs algebra".into()));
    }
    Ok(())
}

/// The associative Yang-Baxter tensor of `r`, by the unit-free expansion.
pub fn ayb(alg: &FDAlgebra, r: &Tensor2) -> Result<Tensor3, BialgebraError> {
    let op = mu_name(alg)?;
    require_associative(alg, &op)?;
    check_dim2(alg, r)?;
    let n = alg.dim();
    let mut out = Tensor3::zero(n);
    for p in 0..n {
        for qq in 0..n {
            let c1 = &r.entries[p][qq];
            if c1.is_zero() {
                continue;
            }
            for s in 0..n {
                for t in 0..n {
                    let c2 = &r.entries[s][t];
                    if c2.is_zero() {
                        continue;
                    }
                    let c = c1 * c2;
                    // + u_i u_j (x) v_j (x) v_i  with (u_i,v_i)=(e_p,e_q),
                    // (u_j,v_j)=(e_s,e_t)
                    let ps = alg.product(&op, &alg.basis_vector(p), &alg.basis_vector(s));
                    for (k, x) in ps.iter().enumerate() {
                        if !x.is_zero() {
                            out.entries[k][t][qq] += &c * x;
                        }
                    }
                    // - u_i (x) v_i u_j (x) v_j
                    let qs = alg.product(&op, &alg.basis_vector(qq), &alg.basis_vector(s));
                    for (k, x) in qs.iter().enumerate() {
                        if !x.is_zero() {
                            out.entries[p][k][t] -= &c * x;
                        }
                    }
                    // + u_j (x) u_i (x) v_i v_j
                    let qt = alg.product(&op, &alg.basis_vector(qq), &alg.basis_vector(t));
                    for (k, x) in qt.iter().enumerate() {
                        if !x.is_zero() {
                            out.entries[s][p][k] += &c * x;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Checks `a . t = t . a` for all basis `a`, where the left action
/// multiplies the first tensor factor and the right action the last.
pub fn is_invariant(alg: &FDAlgebra, t: &Tensor3) -> Result<bool, BialgebraError> {
    let op = mu_name(alg)?;
    let n = alg.dim();
    if t.dim() != n {
        return Err(BialgebraError::DimensionMismatch("tensor vs algebra".into()));
    }
    for m in 0..n {
        let em = alg.basis_vector(m);
        let mut left = Tensor3::zero(n);
        let mut right = Tensor3::zero(n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let c = &t.entries[x][y][z];
                    if c.is_zero() {
                        continue;
                    }
                    let mx = alg.product(&op, &em, &alg.basis_vector(x));
                    for (k, w) in mx.iter().enumerate() {
                        if !w.is_zero() {
                            left.entries[k][y][z] += c * w;
                        }
                    }
                    let zm = alg.product(&op, &alg.basis_vector(z), &em);
                    for (k, w) in zm.iter().enumerate() {
                        if !w.is_zero() {
                            right.entries[x][y][k] += c * w;
                        }
                    }
                }
            }
        }
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The coboundary coproduct `Delta_r(a) = r . a - a . r` with
/// `r . a = sum u_i (x) v_i a` and `a . r = sum a u_i (x) v_i`.
pub fn coboundary_coproduct(alg: &FDAlgebra, r: &Tensor2) -> Result<Coproduct, BialgebraError> {
    let op = mu_name(alg)?;
    require_associative(alg, &op)?;
    check_dim2(alg, r)?;
    let n = alg.dim();
    let mut d = Coproduct::zero(n);
    for m in 0..n {
        let em = alg.basis_vector(m);
        for p in 0..n {
            for qq in 0..n {
                let c = &r.entries[p][qq];
                if c.is_zero() {
                    continue;
                }
                let va = alg.product(&op, &alg.basis_vector(qq), &em);
                for (k, x) in va.iter().enumerate() {
                    if !x.is_zero() {
                        d.delta[m][p][k] += c * x;
                    }
                }
                let au = alg.product(&op, &em, &alg.basis_vector(p));
                for (k, x) in au.iter().enumerate() {
                    if !x.is_zero() {
                        d.delta[m][k][qq] -= c * x;
                    }
                }
            }
        }
    }
    Ok(d)
}

/// One failed identity in a bialgebra check.
#[derive(Clone, Debug, PartialEq)]
pub struct BialgebraWitness {
    pub law: String,
    pub tuple: Vec<usize>,
}

/// Outcome of the infinitesimal-bialgebra axioms check.
#[derive(Clone, Debug, PartialEq)]
pub struct BialgebraReport {
    pub associative: bool,
    pub coassociative: bool,
    pub derivation: bool,
    pub witnesses: Vec<BialgebraWitness>,
}

impl BialgebraReport {
    pub fn pass(&self) -> bool {
        self.associative && self.coassociative && self.derivation
    }
}

/// Verifies associativity, coassociativity and the derivation law
/// `Delta(ab) = a . Delta(b) + Delta(a) . b` on all basis tuples.
pub fn check_eps_bialgebra(alg: &FDAlgebra, d: &Coproduct) -> Result<BialgebraReport, BialgebraError> {
    let op = mu_name(alg)?;
    let n = alg.dim();
    if d.dim() != n {
        return Err(BialgebraError::DimensionMismatch("coproduct vs algebra".into()));
    }
    let mut witnesses = Vec::new();
    let mut associative = true;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let ei = alg.basis_vector(i);
                let ej = alg.basis_vector(j);
                let ek = alg.basis_vector(k);
                let l = alg.product(&op, &alg.product(&op, &ei, &ej), &ek);
                let r = alg.product(&op, &ei, &alg.product(&op, &ej, &ek));
                if l != r {
                    associative = false;
                    witnesses.push(BialgebraWitness { law: "associativity".into(), tuple: vec![i, j, k] });
                }
            }
        }
    }
    // Coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta.
    let mut coassociative = true;
    for i in 0..n {
        let mut lhs = Tensor3::zero(n);
        let mut rhs = Tensor3::zero(n);
        for s in 0..n {
            for t in 0..n {
                let c = &d.delta[i][s][t];
                if c.is_zero() {
                    continue;
                }
                for x in 0..n {
                    for y in 0..n {
                        let c2 = &d.delta[s][x][y];
                        if !c2.is_zero() {
                            lhs.entries[x][y][t] += c * c2;
                        }
                        let c3 = &d.delta[t][x][y];
                        if !c3.is_zero() {
                            rhs.entries[s][x][y] += c * c3;
                        }
                    }
                }
            }
        }
        if lhs != rhs {
            coassociative = false;
            witnesses.push(BialgebraWitness { law: "coassociativity".into(), tuple: vec![i] });
        }
    }
    // Derivation: Delta(ab) = a.Delta(b) + Delta(a).b.
    let mut derivation = true;
    for i in 0..n {
        for j in 0..n {
            let mut lhs = Tensor2::zero(n);
            let prod = alg.product(&op, &alg.basis_vector(i), &alg.basis_vector(j));
            for (m, c) in prod.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for x in 0..n {
                    for y in 0..n {
                        let c2 = &d.delta[m][x][y];
                        if !c2.is_zero() {
                            lhs.entries[x][y] += c * c2;
                        }
                    }
                }
            }
            let mut rhs = Tensor2::zero(n);
            for x in 0..n {
                for y in 0..n {
                    let c = &d.delta[j][x][y];
                    if !c.is_zero() {
                        // a . (e_x (x) e_y) = (a e_x) (x) e_y
                        let ax = alg.product(&op, &alg.basis_vector(i), &alg.basis_vector(x));
                        for (k, w) in ax.iter().enumerate() {
                            if !w.is_zero() {
                                rhs.entries[k][y] += c * w;
                            }
                        }
                    }
                    let c = &d.delta[i][x][y];
                    if !c.is_zero() {
                        // (e_x (x) e_y) . b = e_x (x) (e_y b)
                        let yb = alg.product(&op, &alg.basis_vector(y), &alg.basis_vector(j));
                        for (k, w) in yb.iter().enumerate() {
                            if !w.is_zero() {
                                rhs.entries[x][k] += c * w;
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                derivation = false;
                witnesses.push(BialgebraWitness { law: "derivation".into(), tuple: vec![i, j] });
            }
        }
    }
    Ok(BialgebraReport { associative, coassociative, derivation, witnesses })
}

/// The product `a op b = sum b_(1) a b_(2)` over the coproduct of `b`, as a
/// one-operation algebra (named `mu` so catalog relation sets apply
/// directly). Requires the bialgebra axioms to hold.
pub fn prelie_from_coproduct(alg: &FDAlgebra, d: &Coproduct) -> Result<FDAlgebra, BialgebraError> {
    let report = check_eps_bialgebra(alg, d)?;
    if !report.pass() {
        let law = report.witnesses.first().map(|w| w.law.clone()).unwrap_or_default();
        return Err(BialgebraError::NotBialgebra(law));
    }
    let op = mu_name(alg)?;
    let n = alg.dim();
    let mut c: StructureConstants = vec![Q::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            // e_i circ e_j = sum_(e_j) (e_j)_(1) e_i (e_j)_(2)
            let mut acc = vec![Q::zero(); n];
            for x in 0..n {
                for y in 0..n {
                    let w = &d.delta[j][x][y];
                    if w.is_zero() {
                        continue;
                    }
                    let xi = alg.product(&op, &alg.basis_vector(x), &alg.basis_vector(i));
                    let xiy = alg.product(&op, &xi, &alg.basis_vector(y));
                    for k in 0..n {
                        acc[k] += w * &xiy[k];
                    }
                }
            }
            for k in 0..n {
                c[(i * n + j) * n + k] = acc[k].clone();
            }
        }
    }
    Ok(FDAlgebra::new(n, Signature::single_plain(), BTreeMap::from([("mu".to_string(), c)]), None)?)
}

/// The operator `R(a) = sum u_i a v_i` attached to `r`.
pub fn operator_from_tensor(alg: &FDAlgebra, r: &Tensor2) -> Result<OperatorSpec, BialgebraError> {
    let op = mu_name(alg)?;
    check_dim2(alg, r)?;
    let n = alg.dim();
    let mut matrix = vec![vec![Q::zero(); n]; n];
    for j in 0..n {
        let ej = alg.basis_vector(j);
        for p in 0..n {
            for qq in 0..n {
                let c = &r.entries[p][qq];
                if c.is_zero() {
                    continue;
                }
                let up = alg.product(&op, &alg.basis_vector(p), &ej);
                let upv = alg.product(&op, &up, &alg.basis_vector(qq));
                for (i, x) in upv.iter().enumerate() {
                    if !x.is_zero() {
                        matrix[i][j] += c * x;
                    }
                }
            }
        }
    }
    Ok(OperatorSpec::new(matrix, Q::zero(), None)?)
}

/// The induced dendriform pair `a prec b = sum a u_i b v_i`,
/// `a succ b = sum u_i a v_i b` of a coboundary tensor.
pub fn induced_pair(alg: &FDAlgebra, r: &Tensor2) -> Result<FDAlgebra, BialgebraError> {
    let op = mu_name(alg)?;
    require_associative(alg, &op)?;
    check_dim2(alg, r)?;
    let n = alg.dim();
    let mut prec: StructureConstants = vec![Q::zero(); n * n * n];
    let mut succ: StructureConstants = vec![Q::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let ei = alg.basis_vector(i);
            let ej = alg.basis_vector(j);
            let mut pv = vec![Q::zero(); n];
            let mut sv = vec![Q::zero(); n];
            for p in 0..n {
                for qq in 0..n {
                    let c = &r.entries[p][qq];
                    if c.is_zero() {
                        continue;
                    }
                    // a u b v
                    let au = alg.product(&op, &ei, &alg.basis_vector(p));
                    let aub = alg.product(&op, &au, &ej);
                    let aubv = alg.product(&op, &aub, &alg.basis_vector(qq));
                    // u a v b
                    let ua = alg.product(&op, &alg.basis_vector(p), &ei);
                    let uav = alg.product(&op, &ua, &alg.basis_vector(qq));
                    let uavb = alg.product(&op, &uav, &ej);
                    for k in 0..n {
                        pv[k] += c * &aubv[k];
                        sv[k] += c * &uavb[k];
                    }
                }
            }
            for k in 0..n {
                prec[(i * n + j) * n + k] = pv[k].clone();
                succ[(i * n + j) * n + k] = sv[k].clone();
            }
        }
    }
    Ok(FDAlgebra::new(
        n,
        Signature::dendriform(),
        BTreeMap::from([("prec".to_string(), prec), ("succ".to_string(), succ)]),
        None,
    )?)
}

/// Checks that the two paths around the coboundary square agree: the
/// dendriform pair induced by `r` satisfies inner-associativity and the
/// cyclic-associativity dendriform relation, and `a succ b - b prec a`
/// equals the product built from the coboundary coproduct.
pub fn diagram_check(
    alg: &FDAlgebra,
    r: &Tensor2,
    a3_dendriform: &crate::term::RelationSet,
    inner_associativity: &crate::term::RelationSet,
) -> Result<bool, BialgebraError> {
    let t = ayb(alg, r)?;
    if !is_invariant(alg, &t)? {
        return Err(BialgebraError::NotInvariant);
    }
    let pair = induced_pair(alg, r)?;
    if !pair.satisfies(a3_dendriform)? || !pair.satisfies(inner_associativity)? {
        return Ok(false);
    }
    let d = coboundary_coproduct(alg, r)?;
    let circ = prelie_from_coproduct(alg, &d)?;
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            let ei = alg.basis_vector(i);
            let ej = alg.basis_vector(j);
            let s = pair.product("succ", &ei, &ej);
            let p = pair.product("prec", &ej, &ei);
            let c = circ.product("mu", &ei, &ej);
            for k in 0..n {
                if &s[k] - &p[k] != c[k] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Classifies the operator attached to `r` (weak Rota-Baxter for coboundary
/// tensors, Rota-Baxter when the Yang-Baxter tensor vanishes).
pub fn classify_tensor_operator(alg: &FDAlgebra, r: &Tensor2) -> Result<Classification, BialgebraError> {
    let op = operator_from_tensor(alg, r)?;
    Ok(classify_operator(alg, &op)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    /// Q x Q with componentwise product: e0^2 = e0, e1^2 = e1.
    fn qxq() -> FDAlgebra {
        FDAlgebra::from_products(
            2,
            Signature::single_plain(),
            &[("mu", 0, 0, vec![(q(1), 0)]), ("mu", 1, 1, vec![(q(1), 1)])],
            None,
        )
        .unwrap()
    }

    fn e1e1(dim: usize) -> Tensor2 {
        let mut r = Tensor2::zero(dim);
        r.entries[0][0] = q(1);
        r
    }

    #[test]
    fn ayb_of_zero_is_zero() {
        let alg = qxq();
        let t = ayb(&alg, &Tensor2::zero(2)).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn ayb_of_idempotent_tensor() {
        // r = e (x) e with e idempotent: AYB = e (x) e (x) e.
        let alg = qxq();
        let t = ayb(&alg, &e1e1(2)).unwrap();
        let mut expect = Tensor3::zero(2);
        expect.entries[0][0][0] = q(1);
        assert_eq!(t, expect);
        assert!(is_invariant(&alg, &t).unwrap());
    }

    #[test]
    fn ayb_of_square_zero_element() {
        // In Q[x]/(x^2), r = x (x) x has all expansion terms killed by x^2.
        let alg = FDAlgebra::truncated_polynomial(2);
        let mut r = Tensor2::zero(2);
        r.entries[1][1] = q(1);
        assert!(ayb(&alg, &r).unwrap().is_zero());
    }

    #[test]
    fn noncentral_rank_one_tensor_is_not_invariant() {
        // t = E12 (x) E12 (x) E12 in 2x2 matrices; E11 acts differently
        // from the left and from the right.
        let alg = FDAlgebra::matrix_algebra(2);
        let mut t = Tensor3::zero(4);
        t.entries[1][1][1] = q(1);
        assert!(!is_invariant(&alg, &t).unwrap());
    }

    #[test]
    fn coboundary_coproduct_of_zero_is_zero() {
        let alg = qxq();
        let d = coboundary_coproduct(&alg, &Tensor2::zero(2)).unwrap();
        assert_eq!(d, Coproduct::zero(2));
    }

    #[test]
    fn coboundary_coproduct_is_generally_nonzero() {
        // r = e0 (x) e1 on Q x Q: Delta_r(e0) = -e0 (x) e1.
        let alg = qxq();
        let mut r = Tensor2::zero(2);
        r.entries[0][1] = q(1);
        let d = coboundary_coproduct(&alg, &r).unwrap();
        assert_eq!(d.delta[0][0][1], q(-1));
    }

    #[test]
    fn zero_coproduct_is_a_bialgebra_and_gives_zero_product() {
        let alg = qxq();
        let d = Coproduct::zero(2);
        assert!(check_eps_bialgebra(&alg, &d).unwrap().pass());
        let circ = prelie_from_coproduct(&alg, &d).unwrap();
        let e0 = circ.basis_vector(0);
        assert_eq!(circ.product("mu", &e0, &e0), vec![q(0), q(0)]);
    }

    #[test]
    fn invariant_coboundary_gives_bialgebra_and_noninvariant_fails() {
        let alg = qxq();
        let d = coboundary_coproduct(&alg, &e1e1(2)).unwrap();
        assert!(check_eps_bialgebra(&alg, &d).unwrap().pass());

        // Non-invariant example in 2x2 matrices: r = E11 (x) E12.
        let m2 = FDAlgebra::matrix_algebra(2);
        let mut r = Tensor2::zero(4);
        r.entries[0][1] = q(1);
        let t = ayb(&m2, &r).unwrap();
        assert!(!is_invariant(&m2, &t).unwrap());
        let d = coboundary_coproduct(&m2, &r).unwrap();
        assert!(!check_eps_bialgebra(&m2, &d).unwrap().pass());
    }

    #[test]
    fn operator_from_tensor_matches_expansion() {
        // r = e0 (x) e0 on Q x Q: R(a) = e0 a e0, so R(e0) = e0, R(e1) = 0.
        let alg = qxq();
        let op = operator_from_tensor(&alg, &e1e1(2)).unwrap();
        assert_eq!(op.apply(&alg.basis_vector(0)), alg.basis_vector(0));
        assert_eq!(op.apply(&alg.basis_vector(1)), vec![q(0), q(0)]);
    }
}
