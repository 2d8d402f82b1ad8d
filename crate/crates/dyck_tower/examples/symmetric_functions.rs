// Symmetric functions: bases, products and plethystic substitution.

use dyck_tower::coeffring::{parse_coefrat, CoefRat, Laurent, Mono};
use dyck_tower::symfunc::{partitions, plethystic_substitute, Alphabet, Basis, Partition, SymFunc};

type F = SymFunc<CoefRat>;

pub fn run_example() {
    let (h1, h2, e2) = (F::h(2, 1), F::h(2, 2), F::e(2, 2));
    assert_eq!(e2, F::monomial(2, Partition::new(vec![1, 1]), CoefRat::one()));
    assert_eq!(h2.sub(&e2), F::monomial(2, Partition::single(2), CoefRat::one()));
    assert_eq!(h1.mul(&h1), h2.add(&e2));

    let in_p = h2.to_basis(Basis::PowerSum);
    for (lam, c) in &in_p {
        println!("h2: coefficient of p{lam} is {c}");
    }
    assert_eq!(F::from_basis(2, Basis::PowerSum, &in_p), h2);

    // p2[X + (q - 1) v] = p2[X] + (q^2 - 1) v^2.
    let q_minus_one = Laurent::from_terms([(Mono::new(2, 0), 1), (Mono::ONE, -1)]);
    let parts = plethystic_substitute(&F::p(2, 2), &Alphabet::shifted(q_minus_one, vec![1]));
    for (v, f) in &parts {
        println!("coefficient of v^{v:?}: {f}");
    }
    assert_eq!(parts[&vec![0]], F::p(2, 2));
    assert_eq!(parts[&vec![2]], F::scalar(2, parse_coefrat("q^2 - 1").unwrap()));

    let counts: Vec<usize> = (0..=6).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11]);
}

fn main() {
    run_example();
}
