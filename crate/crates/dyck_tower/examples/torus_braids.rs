// Braid words on the punctured torus, train rewriting and the braids of
// colorings.

use dyck_tower::braid::{
    rewrite_trains, single_strand_braid, theorem_main_eval, BraidWord, Coord, Piece, PointConfig, RewriteRule,
    SweepLine, TrainWord,
};
use dyck_tower::coeffring::CoefRat;
use dyck_tower::sweep::{recursion_dp, sweep_points, Coloring};
use dyck_tower::vkspace::{act_dplus, VElem};
use num_rational::Rational64;

pub fn run_example() {
    let w = BraidWord::parse(2, "z1 T1 ytilde2").unwrap();
    let mut f = VElem::<CoefRat>::one(0, 5);
    for _ in 0..2 {
        f = act_dplus(&f);
    }
    println!("{w} on d+^2(1) = {}", w.evaluate(&f).unwrap());

    let trains = TrainWord::new(4, vec![Piece::Up(1, 3), Piece::Down(4, 2)]).unwrap();
    let moved = rewrite_trains(&trains, RewriteRule::Collision, 0).unwrap();
    println!("{trains}  =  {moved}");
    let g = VElem::<CoefRat>::one(4, 3).mul_y(2);
    assert_eq!(trains.flatten().unwrap().evaluate(&g).unwrap(), moved.flatten().unwrap().evaluate(&g).unwrap());

    let r = |a, b| Coord::exact(Rational64::new(a, b));
    let cfg = PointConfig::new(r(2, 5), vec![r(1, 7), r(4, 7)]).unwrap();
    let (b, end) = cfg.special_braid(&[2, 3]).unwrap();
    println!("special braid {b}, final positions {:?}", end.v.iter().map(|c| c.to_string()).collect::<Vec<_>>());

    println!("b_(2,3) = {}", single_strand_braid(2, 3).unwrap());

    let dp = recursion_dp::<CoefRat>(2, 3, false).unwrap();
    let line = SweepLine::new(2, 3, *sweep_points(2, 3).last().unwrap(), false).unwrap();
    let c = Coloring::of_composition(2, 3, &[1]);
    assert_eq!(theorem_main_eval::<CoefRat>(&line, &c).unwrap(), dp.last[&c]);
    println!("braid of {c}: {}", line.braid_of(&c).unwrap().word);
}

fn main() {
    run_example();
}
