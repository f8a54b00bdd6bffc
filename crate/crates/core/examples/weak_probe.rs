use dendrikit_core::fd::FDAlgebra;
use dendrikit_core::rational::q;
use dendrikit_core::search;
use dendrikit_core::term::Signature;
use num_traits::Zero;

fn upper_triangular() -> FDAlgebra {
    // Basis E11, E12, E22.
    FDAlgebra::from_products(
        3,
        Signature::single_plain(),
        &[
            ("mu", 0, 0, vec![(q(1), 0)]),
            ("mu", 0, 1, vec![(q(1), 1)]),
            ("mu", 1, 2, vec![(q(1), 1)]),
            ("mu", 2, 2, vec![(q(1), 2)]),
        ],
        None,
    )
    .unwrap()
}

fn main() {
    let ut = upper_triangular();
    println!("commutant dim: {}", ut.commutant("mu", 1).dim());
    let weak = search::weak_rota_baxter_operators(&ut, 1, &num_rational::BigRational::zero());
    println!("strictly weak on upper-triangular (bound 1): {}", weak.len());
    let poly = FDAlgebra::truncated_polynomial(3);
    let weak2 = search::weak_rota_baxter_operators(&poly, 1, &num_rational::BigRational::zero());
    println!("strictly weak on truncated poly dim3 (bound 1): {}", weak2.len());
}
