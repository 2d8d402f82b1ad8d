// The sweep process along one path and the recursion over colorings.

use dyck_tower::coeffring::CoefRat;
use dyck_tower::combinat::{enumerate_paths, path_weight, rhs_compositional, DyckPath};
use dyck_tower::sweep::{assemble_composition, event_sequence, recursion_dp, sweep_path};
use dyck_tower::symfunc::compositions;

pub fn run_example() {
    let p = DyckPath::from_bits("1101000").unwrap();
    for e in event_sequence(&p) {
        println!("{e:?}");
    }
    for p in enumerate_paths(3, 4, None).unwrap() {
        assert_eq!(sweep_path::<CoefRat>(&p).unwrap(), path_weight(&p).unwrap(), "{}", p.bits());
    }

    let dp = recursion_dp::<CoefRat>(2, 4, false).unwrap();
    for (c, v) in &dp.last {
        println!("{c}: {} terms", v.len());
    }
    for alpha in compositions(2) {
        let from_colorings = assemble_composition(1, 2, 2, &alpha, &dp.last).unwrap();
        assert_eq!(from_colorings, rhs_compositional(1, 2, 2, &alpha).unwrap());
        println!("alpha {alpha:?}: {from_colorings}");
    }
}

fn main() {
    run_example();
}
