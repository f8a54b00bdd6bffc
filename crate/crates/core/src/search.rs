//! Bounded integer searches for operators, tensors and fixtures.
//!
//! The searches enumerate small integer coefficient patterns in a fixed
//! order, so results are deterministic and reproducible; the enumeration
//! is data-parallel behind the `parallel` feature with order-preserving
//! collection. These are discovery utilities for tests and examples, not
//! classification algorithms.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::bialgebra::{ayb, BialgebraError, Tensor2};
use crate::fd::FDAlgebra;
use crate::gradings::{DeformedAlgebra, FilteredAlgebra, FiltrationDirection, GradingError, PolyNu};
use crate::operators::{defect, OperatorSpec};
use crate::parallel;
use crate::rational::{q, Q};
use crate::term::{RelationSet, Signature};

/// All `dim x dim` integer matrices with entries in `-bound..=bound`,
/// decoded from a single index. Entry order is row-major.
fn decode_matrix(mut code: usize, dim: usize, bound: i64) -> Vec<Vec<Q>> {
    let width = (2 * bound + 1) as usize;
    let mut m = vec![vec![Q::zero(); dim]; dim];
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            let digit = (code % width) as i64 - bound;
            code /= width;
            *x = q(digit);
        }
    }
    m
}

fn matrix_count(dim: usize, bound: i64) -> usize {
    let width = (2 * bound + 1) as usize;
    width.pow((dim * dim) as u32)
}

/// Small named associative fixtures of dimension 2: the dual numbers, the
/// split pair, and a noncommutative left-trivial algebra.
pub fn two_dim_associative_fixtures() -> Vec<(&'static str, FDAlgebra)> {
    let sig = Signature::single_plain();
    let dual = FDAlgebra::truncated_polynomial(2);
    let split = FDAlgebra::from_products(
        2,
        sig.clone(),
        &[("mu", 0, 0, vec![(q(1), 0)]), ("mu", 1, 1, vec![(q(1), 1)])],
        None,
    )
    .expect("fixture");
    let left_trivial = FDAlgebra::from_products(
        2,
        sig,
        &[("mu", 0, 0, vec![(q(1), 0)]), ("mu", 0, 1, vec![(q(1), 1)])],
        None,
    )
    .expect("fixture");
    vec![("dual-numbers", dual), ("split-pair", split), ("left-trivial", left_trivial)]
}

/// All weight-`lambda` Rota-Baxter operators with integer entries in
/// `-bound..=bound` on `alg` (single plain operation), in enumeration
/// order.
pub fn rota_baxter_operators(alg: &FDAlgebra, bound: i64, lambda: &Q) -> Vec<OperatorSpec> {
    let n = alg.dim();
    let muname = alg.signature().ops()[0].name.clone();
    let total = matrix_count(n, bound);
    let found = parallel::map_indexed(total, |code| {
        let m = decode_matrix(code, n, bound);
        let op = OperatorSpec::new(m, lambda.clone(), None).expect("square");
        let rb = (0..n).all(|i| {
            (0..n).all(|j| {
                defect(alg, &op, &muname, &alg.basis_vector(i), &alg.basis_vector(j))
                    .iter()
                    .all(|x| x.is_zero())
            })
        });
        if rb {
            Some(op)
        } else {
            None
        }
    });
    found.into_iter().flatten().collect()
}

/// All weight-`lambda` weak Rota-Baxter operators (defect in the
/// commutant, not identically zero) with integer entries in
/// `-bound..=bound`, in enumeration order.
pub fn weak_rota_baxter_operators(alg: &FDAlgebra, bound: i64, lambda: &Q) -> Vec<OperatorSpec> {
    let n = alg.dim();
    let muname = alg.signature().ops()[0].name.clone();
    let total = matrix_count(n, bound);
    let found = parallel::map_indexed(total, |code| {
        let m = decode_matrix(code, n, bound);
        let op = OperatorSpec::new(m, lambda.clone(), None).expect("square");
        let mut some_nonzero = false;
        for i in 0..n {
            for j in 0..n {
                let w = defect(alg, &op, &muname, &alg.basis_vector(i), &alg.basis_vector(j));
                if w.iter().any(|x| !x.is_zero()) {
                    some_nonzero = true;
                    if !alg.in_commutant(&muname, 1, &w) {
                        return None;
                    }
                }
            }
        }
        if some_nonzero {
            Some(op)
        } else {
            None
        }
    });
    found.into_iter().flatten().collect()
}

/// All tensors with integer entries in `-bound..=bound` whose associative
/// Yang-Baxter tensor vanishes.
pub fn tensors_with_zero_ayb(alg: &FDAlgebra, bound: i64) -> Result<Vec<Tensor2>, BialgebraError> {
    let n = alg.dim();
    let total = matrix_count(n, bound);
    let mut out = Vec::new();
    for code in 0..total {
        let entries = decode_matrix(code, n, bound);
        let r = Tensor2 { entries };
        if ayb(alg, &r)?.is_zero() {
            out.push(r);
        }
    }
    Ok(out)
}

fn matrix_is_zero(m: &[Vec<Q>]) -> bool {
    m.iter().all(|row| row.iter().all(|x| x.is_zero()))
}

/// Searches for a truncated deformation fixture: a Rota-Baxter family
/// `R_0 + nu R_1` (entries in `-2..=2`) on a 2-dimensional associative
/// algebra whose induced dendriform pair has a commutative fiber. The
/// family must satisfy the Rota-Baxter equation identically in the
/// parameter, which splits into three integer conditions. Preference goes
/// to fixtures with a nonzero extracted bracket.
pub fn deformation_fixture(
    order: usize,
    relations: &RelationSet,
) -> Result<DeformedAlgebra, GradingError> {
    let alg = two_dim_associative_fixtures()
        .into_iter()
        .find(|(name, _)| *name == "left-trivial")
        .expect("fixture exists")
        .1;
    let muname = "mu";
    let n = alg.dim();
    let bound = 2;
    let zero_rb: Vec<OperatorSpec> = rota_baxter_operators(&alg, bound, &Q::zero());
    // Fiber commutativity: R_0(a) b = b R_0(a) for all basis pairs, i.e.
    // the image of R_0 commutes with everything.
    let central: Vec<&OperatorSpec> = zero_rb
        .iter()
        .filter(|op| {
            (0..n).all(|j| alg.in_commutant(muname, 1, &op.apply(&alg.basis_vector(j))))
        })
        .collect();
    let mut best: Option<(u8, &OperatorSpec, &OperatorSpec)> = None;
    for r0 in &central {
        for r1 in &zero_rb {
            // Mixed first-order coefficient of the Rota-Baxter equation.
            let mixed_ok = (0..n).all(|i| {
                (0..n).all(|j| {
                    let a = alg.basis_vector(i);
                    let b = alg.basis_vector(j);
                    let mut arg01 = alg.product(muname, &a, &r1.apply(&b));
                    let t = alg.product(muname, &r1.apply(&a), &b);
                    for k in 0..n {
                        arg01[k] += &t[k];
                    }
                    let mut arg10 = alg.product(muname, &a, &r0.apply(&b));
                    let t = alg.product(muname, &r0.apply(&a), &b);
                    for k in 0..n {
                        arg10[k] += &t[k];
                    }
                    let mut lhs = r0.apply(&arg01);
                    let t = r1.apply(&arg10);
                    for k in 0..n {
                        lhs[k] += &t[k];
                    }
                    let mut rhs = alg.product(muname, &r0.apply(&a), &r1.apply(&b));
                    let t = alg.product(muname, &r1.apply(&a), &r0.apply(&b));
                    for k in 0..n {
                        rhs[k] += &t[k];
                    }
                    lhs == rhs
                })
            });
            if !mixed_ok {
                continue;
            }
            // Bracket nonzero: some R_1(a) b != b R_1(a).
            let bracket_nonzero = (0..n).any(|i| {
                (0..n).any(|j| {
                    let ra = r1.apply(&alg.basis_vector(i));
                    let b = alg.basis_vector(j);
                    alg.product(muname, &ra, &b) != alg.product(muname, &b, &ra)
                })
            });
            let base_nonzero = !matrix_is_zero(&r0.matrix);
            let score = match (bracket_nonzero, base_nonzero) {
                (true, true) => 2,
                (true, false) => 1,
                _ => 0,
            };
            if best.as_ref().map(|(s, _, _)| score > *s).unwrap_or(true) {
                best = Some((score, r0, r1));
                if score == 2 {
                    break;
                }
            }
        }
        if matches!(best, Some((2, _, _))) {
            break;
        }
    }
    let (_, r0, r1) = best.expect("the zero family always qualifies");
    let mut structure: BTreeMap<String, Vec<PolyNu>> = BTreeMap::new();
    for (opname, succ_side) in [("prec", false), ("succ", true)] {
        let mut c = vec![PolyNu::zero(order); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let ei = alg.basis_vector(i);
                let ej = alg.basis_vector(j);
                let (v0, v1) = if succ_side {
                    (
                        alg.product(muname, &r0.apply(&ei), &ej),
                        alg.product(muname, &r1.apply(&ei), &ej),
                    )
                } else {
                    (
                        alg.product(muname, &ei, &r0.apply(&ej)),
                        alg.product(muname, &ei, &r1.apply(&ej)),
                    )
                };
                for k in 0..n {
                    let mut p = PolyNu::zero(order);
                    p.coeffs[0] = v0[k].clone();
                    if order > 1 {
                        p.coeffs[1] = v1[k].clone();
                    }
                    c[(i * n + j) * n + k] = p;
                }
            }
        }
        structure.insert(opname.to_string(), c);
    }
    DeformedAlgebra::new(n, order, 1, structure, relations.clone())
}

/// Searches a rank-3 ascending filtered dendriform fixture: basis `c`
/// (degree 0), `x` (degree 1), `y` (degree 1, inert padding), with
/// `x succ x = a1 x + a2 c` and `x prec x = a3 x + a4 c`, coefficients in
/// `-2..=2`. Keeps the first pattern that is Loday dendriform, almost
/// commutative, and has a nonzero extracted bracket.
pub fn filtered_dendriform_fixture(
    loday: &RelationSet,
) -> Result<FilteredAlgebra, GradingError> {
    let sig = Signature::dendriform();
    for code in 0..625usize {
        let mut digits = [0i64; 4];
        let mut c = code;
        for d in digits.iter_mut() {
            *d = (c % 5) as i64 - 2;
            c /= 5;
        }
        let [a1, a2, a3, a4] = digits;
        let alg = FDAlgebra::from_products(
            3,
            sig.clone(),
            &[
                ("succ", 1, 1, vec![(q(a1), 1), (q(a2), 0)]),
                ("prec", 1, 1, vec![(q(a3), 1), (q(a4), 0)]),
            ],
            None,
        )?;
        if !alg.satisfies(loday)? {
            continue;
        }
        let filtered = match FilteredAlgebra::new(alg, vec![0, 1, 1], FiltrationDirection::Ascending)
        {
            Ok(f) => f,
            Err(_) => continue,
        };
        let out = filtered.associated_graded();
        if !out.almost_commutative {
            continue;
        }
        let Some(inf) = out.infinitesimal else { continue };
        let bracket_nonzero = (0..3).any(|i| {
            (0..3).any(|j| {
                inf.product("circ", &inf.basis_vector(i), &inf.basis_vector(j))
                    .iter()
                    .any(|x| !x.is_zero())
            })
        });
        if bracket_nonzero {
            return Ok(filtered);
        }
    }
    unreachable!("the template contains valid patterns")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::operators::{classify_operator, OperatorClass};

    #[test]
    fn fixtures_are_associative() {
        let assoc = catalog::relations("associative").unwrap();
        for (name, alg) in two_dim_associative_fixtures() {
            assert!(alg.satisfies(assoc).unwrap(), "{name}");
        }
    }

    #[test]
    fn rota_baxter_search_finds_operators() {
        for (name, alg) in two_dim_associative_fixtures() {
            let ops = rota_baxter_operators(&alg, 2, &Q::zero());
            assert!(!ops.is_empty(), "{name}: at least the zero operator");
            for op in &ops {
                let c = classify_operator(&alg, op).unwrap();
                assert!(matches!(c.class, OperatorClass::RotaBaxter { .. }), "{name}");
            }
        }
    }

    #[test]
    fn deformation_fixture_has_nonzero_bracket() {
        let d = deformation_fixture(3, catalog::relations("loday-dendriform").unwrap()).unwrap();
        let inf = d.infinitesimal();
        let nonzero = (0..d.dim()).any(|i| {
            (0..d.dim()).any(|j| {
                inf.product("circ", &inf.basis_vector(i), &inf.basis_vector(j))
                    .iter()
                    .any(|x| !x.is_zero())
            })
        });
        assert!(nonzero);
    }

    #[test]
    fn filtered_fixture_is_found() {
        let f =
            filtered_dendriform_fixture(catalog::relations("loday-dendriform").unwrap()).unwrap();
        assert_eq!(f.degrees(), &[0, 1, 1]);
    }
}
