// Exact scalars in `u = q^(1/2)` and `t`, and their image modulo a prime.

use dyck_tower::coeffring::{parse_coefrat, CoefRat, Fp, Scalar};

pub fn run_example() {
    let x = parse_coefrat("(q*t - 1) / (q + t)").unwrap();
    let back = &x * &parse_coefrat("q + t").unwrap();
    assert_eq!(back, parse_coefrat("q*t - 1").unwrap());
    println!("x = {x}");
    println!("x (q + t) = {back}");

    // Common factors cancel into a canonical form.
    let y = parse_coefrat("(q^2 - 1) / (q - 1)").unwrap();
    assert_eq!(y, parse_coefrat("q + 1").unwrap());

    let u = CoefRat::u();
    assert_eq!(&u * &u, CoefRat::q());
    assert!(CoefRat::q().has_integer_q_degree());
    assert!(!u.has_integer_q_degree());
    assert!(Scalar::div(&CoefRat::one(), &CoefRat::zero()).is_err());

    // Reducing at the fast evaluation point commutes with the field operations.
    let (fq, ft) = (<Fp as Scalar>::q(), <Fp as Scalar>::t());
    let direct = Scalar::div(&Scalar::sub(&Scalar::mul(&fq, &ft), &<Fp as Scalar>::one()), &Scalar::add(&fq, &ft)).unwrap();
    let mapped = Fp::from_laurent(x.numer()).mul(Fp::from_laurent(x.denom()).inv().unwrap());
    assert_eq!(direct, mapped);
    println!("x at the evaluation point: {}", mapped.value());
}

fn main() {
    run_example();
}
