// Operators of the double Dyck path algebra on `V_k` and the relation checker.

use dyck_tower::coeffring::CoefRat;
use dyck_tower::symfunc::{Partition, SymFunc};
use dyck_tower::vkspace::{act_dminus, act_dplus, algebra_relations, relation_check, Family, Interp, VElem, Word};

pub fn run_example() {
    let interp = Interp::<CoefRat>::base();
    let one = VElem::<CoefRat>::one(0, 3);
    let up = act_dplus(&one);
    let down = act_dminus(&up).unwrap();
    println!("d+ 1 = {up}");
    println!("d- d+ 1 = {down}");
    assert_eq!(down.to_sym().with_cap(1), SymFunc::e(1, 1));
    assert_eq!(interp.eval(&Word::parse("d- d+").unwrap(), &one).unwrap(), down);

    let g = VElem::basis(2, 4, Partition::single(1), vec![2, 1], CoefRat::one());
    assert_eq!(interp.eval(&Word::parse("T1 T1^-1").unwrap(), &g).unwrap(), g);
    println!("T1 (m1 y1^2 y2) = {}", interp.eval(&Word::parse("T1").unwrap(), &g).unwrap());

    for rel in algebra_relations::<CoefRat>(Family::BASE, 2) {
        let rep = relation_check(&interp, &rel, 2).unwrap();
        assert!(rep.passed(), "{}", rep.name);
        println!("{}: {} spanning elements agree", rep.name, rep.cases);
    }
}

fn main() {
    run_example();
}
