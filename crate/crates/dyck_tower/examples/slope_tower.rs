// The tower of slope actions, the operators `C_a`, `D_n` and the
// operator side of the compositional identity.

use dyck_tower::actions::{
    c_alpha_identity_check, lhs_compositional, mediant_decompose, nabla_conjugation_pair, op_c, op_d, Tower,
};
use dyck_tower::coeffring::CoefRat;
use dyck_tower::combinat::DyckPath;
use dyck_tower::symfunc::SymFunc;
use dyck_tower::vkspace::VElem;

type F = SymFunc<CoefRat>;

pub fn run_example() {
    let w = mediant_decompose(3, 5).unwrap();
    println!("3/5: steps {:?}, neighbors {:?} and {:?}", w.steps, w.left, w.right);
    assert_eq!(w.replay(), (w.left, w.right));
    assert_eq!(w.right.0 * w.left.1 - w.left.0 * w.right.1, 1);
    assert_eq!((w.left.0 + w.right.0, w.left.1 + w.right.1), (3, 5));

    let tower = Tower::<CoefRat>::new();
    let rho = tower.build(2, 3, true).unwrap();
    println!("rho*_(2,3)(d+) 1 = {}", rho.dplus(&VElem::one(0, 4)).unwrap());

    assert_eq!(op_c(1, &F::one(2)), F::h(2, 1));
    assert_eq!(op_d(2, &F::one(2)), F::e(2, 2));
    assert!(c_alpha_identity_check(&tower, &[2, 1]).unwrap());

    let (a, b) = nabla_conjugation_pair::<CoefRat>(&DyckPath::from_bits("1010").unwrap()).unwrap();
    assert_eq!(a, b);
    println!("conjugated characteristic function of 1010: {a}");

    assert_eq!(lhs_compositional(&tower, 1, 2, 1, &[1]).unwrap(), F::e(2, 2));
    println!("operator side for (1,1,2), alpha = (1,1): {}", lhs_compositional(&tower, 1, 1, 2, &[1, 1]).unwrap());
}

fn main() {
    run_example();
}
