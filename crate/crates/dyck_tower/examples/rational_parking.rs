// Rational Dyck paths, their statistics and the parking-function side.

use dyck_tower::coeffring::{parse_coefrat, CoefRat};
use dyck_tower::combinat::{char_function, enumerate_paths, parking_sum, path_weight, rhs_compositional, DyckPath};
use dyck_tower::symfunc::{compositions, Partition, SymFunc};

type F = SymFunc<CoefRat>;

pub fn run_example() {
    // (m + n - 1)! / (m! n!) paths for coprime (m, n).
    let paths = enumerate_paths(3, 5, None).unwrap();
    assert_eq!(paths.len(), 7);
    for p in &paths {
        let s = p.statistics();
        println!("{} area {} dinv {} maxtdinv {}", p.bits(), s.area, s.dinv, s.maxtdinv);
    }

    let p = DyckPath::from_bits("11010100").unwrap();
    let chi = char_function::<CoefRat>(&p.attack_structure()).unwrap();
    println!("chi of {} = {chi}", p.bits());
    println!("weight of {} = {}", p.bits(), path_weight::<CoefRat>(&p).unwrap());

    // Touch compositions split the full sum.
    let mut acc = F::zero(2);
    for alpha in compositions(2) {
        acc.add_assign(&rhs_compositional(1, 1, 2, &alpha).unwrap());
    }
    let b = parking_sum::<CoefRat>(2, 2).unwrap();
    assert_eq!(acc, b);

    // m2 + (1 + q + t) m11.
    let want = F::monomial(2, Partition::single(2), CoefRat::one())
        .add(&F::monomial(2, Partition::new(vec![1, 1]), parse_coefrat("1 + q + t").unwrap()));
    assert_eq!(b, want);
    println!("(2,2) parking sum = {b}");
}

fn main() {
    run_example();
}
