//! Rota-Baxter operators and relatives on finite-dimensional algebras.
//!
//! For a linear map `R` on a one-product algebra the defect
//!
//! ```text
//!   w(a, b) = R(a R(b) + R(a) b + lambda a b) - R(a) R(b)
//! ```
//!
//! vanishes for a Rota-Baxter operator of weight `lambda`, lies in the
//! commutant for a weak Rota-Baxter operator, and equals `nu * ab` for a
//! solution of the modified Yang-Baxter equation (weight 0 form). The
//! classifier computes the defect on all basis pairs and reports the
//! strongest class that holds, with an offending pair as evidence
//! otherwise.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::fd::{FDAlgebra, FdError, StructureConstants};
use crate::rational::Q;
use crate::term::Signature;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OperatorError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operator classification needs a single plain-operation algebra")]
    NotSingleOp,
    #[error("algebra is not associative (offending basis triple {0:?})")]
    NotAssociative([usize; 3]),
    #[error("coordinate subspaces are not subalgebras: e_{0} e_{1} leaves the part")]
    NotSubalgebra(usize, usize),
    #[error(transparent)]
    Fd(#[from] FdError),
}

/// A linear endomorphism with a weight `lambda` and an optional modified
/// Yang-Baxter constant `nu`. `matrix[i][j]` is the coefficient of `e_i`
/// in the image of `e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSpec {
    pub matrix: Vec<Vec<Q>>,
    pub lambda: Q,
    pub nu: Option<Q>,
}

impl OperatorSpec {
    pub fn new(matrix: Vec<Vec<Q>>, lambda: Q, nu: Option<Q>) -> Result<Self, OperatorError> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) {
            return Err(OperatorError::DimensionMismatch("operator matrix must be square".into()));
        }
        Ok(OperatorSpec { matrix, lambda, nu })
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// Applies the operator to a coordinate vector.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        let n = self.dim();
        let mut out = vec![Q::zero(); n];
        for j in 0..n {
            if v[j].is_zero() {
                continue;
            }
            for i in 0..n {
                if !self.matrix[i][j].is_zero() {
                    out[i] += &self.matrix[i][j] * &v[j];
                }
            }
        }
        out
    }
}

/// Classification outcome, strongest first.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorClass {
    RotaBaxter { lambda: Q },
    WeakRotaBaxter { lambda: Q },
    ModifiedYangBaxter { nu: Q },
    None,
}

/// Classification plus the evidence that stopped the stronger classes.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub class: OperatorClass,
    /// First basis pair whose defect is nonzero (absent for Rota-Baxter).
    pub nonzero_defect: Option<(usize, usize, Vec<Q>)>,
    /// First basis pair whose defect is outside the commutant, if any.
    pub noncentral_defect: Option<(usize, usize, Vec<Q>)>,
}

fn single_op(alg: &FDAlgebra) -> Result<String, OperatorError> {
    if alg.signature().ops().len() == 1 {
        Ok(alg.signature().ops()[0].name.clone())
    } else {
        Err(OperatorError::NotSingleOp)
    }
}

fn check_dim(alg: &FDAlgebra, op: &OperatorSpec) -> Result<(), OperatorError> {
    if alg.dim() != op.dim() {
        return Err(OperatorError::DimensionMismatch(format!(
            "algebra dim {} vs operator dim {}",
            alg.dim(),
            op.dim()
        )));
    }
    Ok(())
}

/// The Rota-Baxter defect `R(a R(b) + R(a) b + lambda a b) - R(a) R(b)` on
/// one pair of vectors.
pub fn defect(alg: &FDAlgebra, op: &OperatorSpec, muname: &str, a: &[Q], b: &[Q]) -> Vec<Q> {
    let ra = op.apply(a);
    let rb = op.apply(b);
    let mut inner = alg.product(muname, a, &rb);
    let rab = alg.product(muname, &ra, b);
    let ab = alg.product(muname, a, b);
    for k in 0..alg.dim() {
        inner[k] += &rab[k];
        inner[k] += &op.lambda * &ab[k];
    }
    let mut out = op.apply(&inner);
    let rr = alg.product(muname, &ra, &rb);
    for k in 0..alg.dim() {
        out[k] -= &rr[k];
    }
    out
}

/// Classifies `op` on a single-product algebra, reporting the strongest
/// label: Rota-Baxter (defect zero), weak Rota-Baxter (defect central),
/// modified Yang-Baxter (weight-0 defect equal to `nu * ab` for the given
/// or a fitted `nu`), or none.
pub fn classify_operator(alg: &FDAlgebra, op: &OperatorSpec) -> Result<Classification, OperatorError> {
    check_dim(alg, op)?;
    let muname = single_op(alg)?;
    let n = alg.dim();
    let mut nonzero: Option<(usize, usize, Vec<Q>)> = None;
    let mut noncentral: Option<(usize, usize, Vec<Q>)> = None;
    for i in 0..n {
        for j in 0..n {
            let w = defect(alg, op, &muname, &alg.basis_vector(i), &alg.basis_vector(j));
            if w.iter().any(|x| !x.is_zero()) {
                if nonzero.is_none() {
                    nonzero = Some((i, j, w.clone()));
                }
                if noncentral.is_none() && !alg.in_commutant(&muname, 1, &w) {
                    noncentral = Some((i, j, w));
                }
            }
        }
    }
    if nonzero.is_none() {
        return Ok(Classification {
            class: OperatorClass::RotaBaxter { lambda: op.lambda.clone() },
            nonzero_defect: None,
            noncentral_defect: None,
        });
    }
    if noncentral.is_none() {
        return Ok(Classification {
            class: OperatorClass::WeakRotaBaxter { lambda: op.lambda.clone() },
            nonzero_defect: nonzero,
            noncentral_defect: None,
        });
    }
    if let Some(nu) = fit_myb(alg, op, &muname) {
        return Ok(Classification {
            class: OperatorClass::ModifiedYangBaxter { nu },
            nonzero_defect: nonzero,
            noncentral_defect: noncentral,
        });
    }
    Ok(Classification { class: OperatorClass::None, nonzero_defect: nonzero, noncentral_defect: noncentral })
}

/// Finds `nu` with weight-0 defect equal to `nu * ab` on all basis pairs,
/// starting from the declared `nu` when present.
fn fit_myb(alg: &FDAlgebra, op: &OperatorSpec, muname: &str) -> Option<Q> {
    let zero_weight = OperatorSpec { matrix: op.matrix.clone(), lambda: Q::zero(), nu: None };
    let n = alg.dim();
    let mut nu = op.nu.clone();
    // Fit nu from the first pair with a nonzero product, then verify all.
    if nu.is_none() {
        'outer: for i in 0..n {
            for j in 0..n {
                let ab = alg.product(muname, &alg.basis_vector(i), &alg.basis_vector(j));
                let w = defect(alg, &zero_weight, muname, &alg.basis_vector(i), &alg.basis_vector(j));
                if let Some(k) = ab.iter().position(|x| !x.is_zero()) {
                    nu = Some(&w[k] / &ab[k]);
                    break 'outer;
                } else if w.iter().any(|x| !x.is_zero()) {
                    return None;
                }
            }
        }
    }
    let nu = nu?;
    for i in 0..n {
        for j in 0..n {
            let ab = alg.product(muname, &alg.basis_vector(i), &alg.basis_vector(j));
            let w = defect(alg, &zero_weight, muname, &alg.basis_vector(i), &alg.basis_vector(j));
            for k in 0..n {
                if w[k] != &nu * &ab[k] {
                    return None;
                }
            }
        }
    }
    Some(nu)
}

/// Builds the induced pair `a succ b = R(a) b`, `a prec b = a R(b)` (plus
/// `a dot b = lambda ab` in the tridendriform case `lambda != 0`).
pub fn induce_dendriform(alg: &FDAlgebra, op: &OperatorSpec) -> Result<FDAlgebra, OperatorError> {
    check_dim(alg, op)?;
    let muname = single_op(alg)?;
    let n = alg.dim();
    let tri = !op.lambda.is_zero();
    let sig = if tri { Signature::tridendriform() } else { Signature::dendriform() };
    let mut prec: StructureConstants = vec![Q::zero(); n * n * n];
    let mut succ: StructureConstants = vec![Q::zero(); n * n * n];
    let mut dot: StructureConstants = vec![Q::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let ei = alg.basis_vector(i);
            let ej = alg.basis_vector(j);
            let p = alg.product(&muname, &ei, &op.apply(&ej));
            let s = alg.product(&muname, &op.apply(&ei), &ej);
            let d = alg.product(&muname, &ei, &ej);
            for k in 0..n {
                prec[(i * n + j) * n + k] = p[k].clone();
                succ[(i * n + j) * n + k] = s[k].clone();
                dot[(i * n + j) * n + k] = &op.lambda * &d[k];
            }
        }
    }
    let mut structure = std::collections::BTreeMap::from([
        ("prec".to_string(), prec),
        ("succ".to_string(), succ),
    ]);
    if tri {
        structure.insert("dot".to_string(), dot);
    }
    Ok(FDAlgebra::new(n, sig, structure, None)?)
}

/// A curved system: two operators and a curvature bilinear map
/// `omega[i][j]` (a vector for each basis pair, flattened like structure
/// constants).
#[derive(Clone, Debug, PartialEq)]
pub struct CurvedSystem {
    pub r: OperatorSpec,
    pub s: OperatorSpec,
    pub omega: StructureConstants,
}

impl CurvedSystem {
    pub fn new(r: OperatorSpec, s: OperatorSpec, omega: StructureConstants) -> Result<Self, OperatorError> {
        let n = r.dim();
        if s.dim() != n || omega.len() != n * n * n {
            return Err(OperatorError::DimensionMismatch("curved system shapes".into()));
        }
        Ok(CurvedSystem { r, s, omega })
    }

    pub fn dim(&self) -> usize {
        self.r.dim()
    }

    pub fn omega_at(&self, i: usize, j: usize) -> Vec<Q> {
        let n = self.dim();
        (0..n).map(|k| self.omega[(i * n + j) * n + k].clone()).collect()
    }
}

/// Outcome of a curved-system check.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvedReport {
    /// Both curved identities hold on all basis pairs.
    pub curved_ok: bool,
    /// The curvature takes values in the commutant (= the center, the
    /// algebra being associative).
    pub omega_central: bool,
    /// Named checks of the induced pair `succ = R(a)b`, `prec = a S(b)`.
    pub induced_checks: Vec<(String, bool)>,
    /// The induced dendriform pair itself.
    pub induced: FDAlgebra,
}

fn assert_associative(alg: &FDAlgebra, muname: &str) -> Result<(), OperatorError> {
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let ei = alg.basis_vector(i);
                let ej = alg.basis_vector(j);
                let ek = alg.basis_vector(k);
                let l = alg.product(muname, &alg.product(muname, &ei, &ej), &ek);
                let r = alg.product(muname, &ei, &alg.product(muname, &ej, &ek));
                if l != r {
                    return Err(OperatorError::NotAssociative([i, j, k]));
                }
            }
        }
    }
    Ok(())
}

/// Verifies the two curved identities on all basis pairs, whether the
/// curvature is central, and what the induced pair satisfies
/// (inner-associativity always; the cyclic-associativity dendriform
/// relation iff the curvature is central).
pub fn check_curved(
    alg: &FDAlgebra,
    sys: &CurvedSystem,
    a3_dendriform: &crate::term::RelationSet,
    inner_associativity: &crate::term::RelationSet,
) -> Result<CurvedReport, OperatorError> {
    let muname = single_op(alg)?;
    if sys.dim() != alg.dim() {
        return Err(OperatorError::DimensionMismatch("curved system vs algebra".into()));
    }
    assert_associative(alg, &muname)?;
    let n = alg.dim();
    let mut curved_ok = true;
    let mut omega_central = true;
    for i in 0..n {
        for j in 0..n {
            let ei = alg.basis_vector(i);
            let ej = alg.basis_vector(j);
            let w = sys.omega_at(i, j);
            // R(a)R(b) = R(R(a)b + aS(b)) + w(a,b)
            let mixed = {
                let mut m = alg.product(&muname, &sys.r.apply(&ei), &ej);
                let m2 = alg.product(&muname, &ei, &sys.s.apply(&ej));
                for k in 0..n {
                    m[k] += &m2[k];
                }
                m
            };
            let lhs_r = alg.product(&muname, &sys.r.apply(&ei), &sys.r.apply(&ej));
            let mut rhs_r = sys.r.apply(&mixed);
            for k in 0..n {
                rhs_r[k] += &w[k];
            }
            let lhs_s = alg.product(&muname, &sys.s.apply(&ei), &sys.s.apply(&ej));
            let mut rhs_s = sys.s.apply(&mixed);
            for k in 0..n {
                rhs_s[k] += &w[k];
            }
            if lhs_r != rhs_r || lhs_s != rhs_s {
                curved_ok = false;
            }
            if !alg.in_commutant(&muname, 1, &w) {
                omega_central = false;
            }
        }
    }
    // Induced pair: a succ b = R(a) b, a prec b = a S(b).
    let mut prec: StructureConstants = vec![Q::zero(); n * n * n];
    let mut succ: StructureConstants = vec![Q::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let ei = alg.basis_vector(i);
            let ej = alg.basis_vector(j);
            let p = alg.product(&muname, &ei, &sys.s.apply(&ej));
            let s = alg.product(&muname, &sys.r.apply(&ei), &ej);
            for k in 0..n {
                prec[(i * n + j) * n + k] = p[k].clone();
                succ[(i * n + j) * n + k] = s[k].clone();
            }
        }
    }
    let induced = FDAlgebra::new(
        n,
        Signature::dendriform(),
        std::collections::BTreeMap::from([("prec".to_string(), prec), ("succ".to_string(), succ)]),
        None,
    )?;
    let inner_ok = induced.satisfies(inner_associativity)?;
    let a3_ok = induced.satisfies(a3_dendriform)?;
    Ok(CurvedReport {
        curved_ok,
        omega_central,
        induced_checks: vec![
            ("inner-associativity".to_string(), inner_ok),
            ("a3-dendriform".to_string(), a3_ok),
        ],
        induced,
    })
}

/// The splitting operator `P_plus - P_minus` of a direct-sum decomposition
/// into coordinate subspaces, after checking both parts are closed under
/// every product of the signature.
pub fn splitting_operator(alg: &FDAlgebra, plus_basis: &[usize]) -> Result<OperatorSpec, OperatorError> {
    let n = alg.dim();
    for &i in plus_basis {
        if i >= n {
            return Err(OperatorError::DimensionMismatch(format!("basis index {i}")));
        }
    }
    let plus: Vec<bool> = (0..n).map(|i| plus_basis.contains(&i)).collect();
    for op in alg.signature().ops() {
        for i in 0..n {
            for j in 0..n {
                if plus[i] != plus[j] {
                    continue;
                }
                let p = alg.product(&op.name, &alg.basis_vector(i), &alg.basis_vector(j));
                for k in 0..n {
                    if !p[k].is_zero() && plus[k] != plus[i] {
                        return Err(OperatorError::NotSubalgebra(i, j));
                    }
                }
            }
        }
    }
    let mut matrix = vec![vec![Q::zero(); n]; n];
    for (i, &in_plus) in plus.iter().enumerate() {
        matrix[i][i] = if in_plus { Q::one() } else { -Q::one() };
    }
    OperatorSpec::new(matrix, Q::zero(), Some(Q::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn id_operator(n: usize, lambda: Q) -> OperatorSpec {
        let mut m = vec![vec![Q::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Q::one();
        }
        OperatorSpec::new(m, lambda, None).unwrap()
    }

    #[test]
    fn zero_operator_is_rota_baxter() {
        let alg = FDAlgebra::matrix_algebra(2);
        let z = OperatorSpec::new(vec![vec![Q::zero(); 4]; 4], Q::zero(), None).unwrap();
        let c = classify_operator(&alg, &z).unwrap();
        assert_eq!(c.class, OperatorClass::RotaBaxter { lambda: q(0) });
    }

    #[test]
    fn identity_on_commutative_algebra_is_weak() {
        let alg = FDAlgebra::truncated_polynomial(3);
        let c = classify_operator(&alg, &id_operator(3, Q::zero())).unwrap();
        assert_eq!(c.class, OperatorClass::WeakRotaBaxter { lambda: q(0) });
        assert!(c.nonzero_defect.is_some());
    }

    #[test]
    fn matrix_splitting_classifies_as_modified_yang_baxter() {
        // Upper-triangular (E11, E12, E22) vs strictly lower (E21).
        let alg = FDAlgebra::matrix_algebra(2);
        let r = splitting_operator(&alg, &[0, 1, 3]).unwrap();
        let c = classify_operator(&alg, &r).unwrap();
        assert_eq!(c.class, OperatorClass::ModifiedYangBaxter { nu: q(1) });
    }

    #[test]
    fn full_space_splitting_is_identity_and_myb_one() {
        let alg = FDAlgebra::matrix_algebra(2);
        let r = splitting_operator(&alg, &[0, 1, 2, 3]).unwrap();
        assert_eq!(r.matrix[0][0], q(1));
        let c = classify_operator(&alg, &r).unwrap();
        assert_eq!(c.class, OperatorClass::ModifiedYangBaxter { nu: q(1) });
    }

    #[test]
    fn non_closed_partition_is_rejected() {
        // {E12, E21} is not a subalgebra: E12*E21 = E11 leaves it.
        let alg = FDAlgebra::matrix_algebra(2);
        let err = splitting_operator(&alg, &[1, 2]).unwrap_err();
        assert!(matches!(err, OperatorError::NotSubalgebra(_, _)));
    }

    #[test]
    fn induced_products_match_definition() {
        let alg = FDAlgebra::truncated_polynomial(4);
        let ind = induce_dendriform(&alg, &id_operator(4, Q::zero())).unwrap();
        // a succ b = a prec b = ab for the identity operator.
        let x = ind.basis_vector(1);
        let got = ind.product("succ", &x, &x);
        assert_eq!(got, alg.basis_vector(2));
        assert_eq!(ind.product("prec", &x, &x), alg.basis_vector(2));
    }

    #[test]
    fn nonzero_weight_induces_tridendriform_signature() {
        let alg = FDAlgebra::truncated_polynomial(2);
        let ind = induce_dendriform(&alg, &id_operator(2, q(3))).unwrap();
        assert!(ind.signature().has_op("dot"));
        let one = ind.basis_vector(0);
        assert_eq!(ind.product("dot", &one, &one), vec![q(3), q(0)]);
    }
}
