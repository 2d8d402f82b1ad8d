//! Comparisons against closed forms and counts known independently of the
//! library's own code paths.

use num_bigint::BigInt;
use num_rational::BigRational;

use dyck_tower::actions::{lhs_compositional, Tower};
use dyck_tower::coeffring::{parse_coefrat, CoefRat};
use dyck_tower::combinat::{enumerate_paths, parking_sum, rhs_compositional};
use dyck_tower::symfunc::{compositions, Partition, SymFunc};

type F = SymFunc<CoefRat>;

fn m(parts: &[u8], coef: &str) -> F {
    let n = parts.iter().map(|&p| p as usize).sum();
    F::monomial(n, Partition::new(parts.to_vec()), parse_coefrat(coef).unwrap())
}

/// Nabla of e_n for n = 2, 3 from the Schur expansions
/// `s2 + (q+t) s11` and `s3 + (q^2+qt+t^2+q+t) s21 + (q^3+q^2t+qt^2+t^3+qt) s111`.
fn nabla_e(n: usize) -> F {
    match n {
        1 => m(&[1], "1"),
        2 => m(&[2], "1").add(&m(&[1, 1], "1 + q + t")),
        3 => {
            let a = "q^2 + q*t + t^2 + q + t";
            let b = "q^3 + q^2*t + q*t^2 + t^3 + q*t";
            m(&[3], "1").add(&m(&[2, 1], &format!("1 + {a}"))).add(&m(&[1, 1, 1], &format!("1 + 2*({a}) + {b}")))
        }
        _ => unreachable!(),
    }
}

#[test]
fn square_sums_match_nabla_e() {
    let tower = Tower::<CoefRat>::new();
    for n in 1..=3 {
        let mut ops = F::zero(n);
        let mut paths = F::zero(n);
        for alpha in compositions(n) {
            ops.add_assign(&lhs_compositional(&tower, 1, 1, n, &alpha).unwrap());
            paths.add_assign(&rhs_compositional(1, 1, n, &alpha).unwrap());
        }
        assert_eq!(ops, nabla_e(n), "operator side n={n}");
        assert_eq!(paths, nabla_e(n), "path side n={n}");
        assert_eq!(parking_sum::<CoefRat>(n, n).unwrap(), nabla_e(n));
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

#[test]
fn path_counts() {
    for s in 2..=11u64 {
        for a in 1..s {
            let b = s - a;
            let count = enumerate_paths(a as usize, b as usize, None).unwrap().len() as u64;
            if num_integer::gcd(a, b) == 1 {
                assert_eq!(count, binomial(a + b, a) / (a + b), "({a},{b})");
            } else if a == b {
                assert_eq!(count, binomial(2 * a, a) / (a + 1), "({a},{a})");
            }
        }
    }
}

/// At `q = t = 1` the coefficient of `m_{1^n}` counts parking functions:
/// `m^(n-1)` on coprime `(m, n)` and `(n+1)^(n-1)` on squares.
#[test]
fn parking_function_counts() {
    let one = BigRational::from_integer(BigInt::from(1));
    let count = |a: usize, b: usize| -> BigRational {
        let f = parking_sum::<CoefRat>(a, b).unwrap();
        f.coeff(&Partition::new(vec![1; b])).eval_at(&one, &one).unwrap()
    };
    for (a, b) in [(1, 1), (2, 1), (1, 2), (2, 3), (3, 2), (3, 4), (4, 3), (2, 5), (5, 2), (3, 5)] {
        assert_eq!(count(a, b), BigRational::from_integer(BigInt::from(a.pow(b as u32 - 1))), "({a},{b})");
    }
    for n in 1..=3usize {
        assert_eq!(count(n, n), BigRational::from_integer(BigInt::from((n + 1).pow(n as u32 - 1))), "({n},{n})");
    }
}

#[test]
fn single_column_slopes_give_e_n() {
    let tower = Tower::<CoefRat>::new();
    for n in 1..=4 {
        assert_eq!(rhs_compositional::<CoefRat>(1, n, 1, &[1]).unwrap(), F::e(n, n));
        assert_eq!(lhs_compositional(&tower, 1, n, 1, &[1]).unwrap(), F::e(n, n));
    }
}
