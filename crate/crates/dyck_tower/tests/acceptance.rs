//! One PASS/FAIL line per acceptance criterion.

use dyck_tower::actions::{c_alpha_identity_check, lhs_compositional, nabla_conjugation_check, Tower};
use dyck_tower::braid::{check_braid_rules, check_theorem_main};
use dyck_tower::coeffring::CoefRat;
use dyck_tower::combinat::{enumerate_paths, parking_sum, rhs_compositional};
use dyck_tower::sweep::recursion_dp;
use dyck_tower::symfunc::{compositions, SymFunc};
use dyck_tower::verify::{
    coloring_assembly_report, order_independence_report, relations_report, sweep_paths_report, train_rewrite_report,
};

type F = SymFunc<CoefRat>;

fn dims(max_total: usize) -> Vec<(usize, usize)> {
    (2..=max_total).flat_map(|s| (1..s).map(move |m| (m, s - m))).collect()
}

fn relations() -> Result<(), String> {
    let r = relations_report::<CoefRat>(3, 3).map_err(|e| e.to_string())?;
    match r.failures.first() {
        None => Ok(()),
        Some(f) => Err(format!("{} of {} relation checks fail, first {}", r.failures.len(), r.cases, f.id)),
    }
}

fn sweep() -> Result<(), String> {
    let r = sweep_paths_report::<CoefRat>(9).map_err(|e| e.to_string())?;
    if r.cases == 0 {
        return Err("no paths enumerated".into());
    }
    r.failures.first().map_or(Ok(()), |f| Err(format!("{} paths differ, first {}", r.failures.len(), f.id)))
}

fn coloring() -> Result<(), String> {
    let r = coloring_assembly_report::<CoefRat>(9).map_err(|e| e.to_string())?;
    r.failures.first().map_or(Ok(()), |f| Err(format!("{} compositions differ, first {}", r.failures.len(), f.id)))
}

fn theorem_main() -> Result<(), String> {
    for (m, n) in dims(7) {
        let dp = recursion_dp::<CoefRat>(m, n, true).map_err(|e| e.to_string())?;
        let rep = check_theorem_main(&dp).map_err(|e| e.to_string())?;
        if !rep.failures.is_empty() || rep.half_integral > 0 || rep.colorings == 0 {
            return Err(format!("({m},{n}): {:?}, {} results with half-integral q-degree", rep.failures, rep.half_integral));
        }
    }
    Ok(())
}

const TRIPLES: [(usize, usize, usize); 11] =
    [(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 1), (2, 1, 1), (1, 2, 2), (2, 1, 2), (2, 3, 1), (3, 2, 1), (1, 3, 1), (3, 1, 1)];

fn compositional() -> Result<(), String> {
    let tower = Tower::<CoefRat>::new();
    for (m1, n1, g) in TRIPLES {
        for alpha in compositions(g) {
            let lhs = lhs_compositional(&tower, m1, n1, g, &alpha).map_err(|e| e.to_string())?;
            let rhs = rhs_compositional::<CoefRat>(m1, n1, g, &alpha).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("({m1},{n1},{g}) {alpha:?}"));
            }
        }
    }
    Ok(())
}

fn braid_algebra() -> Result<(), String> {
    let rw = train_rewrite_report(2024, 100).map_err(|e| e.to_string())?;
    if rw.cases < 500 || !rw.passed() {
        return Err(format!("train rewrites: {} cases, {} failures", rw.cases, rw.failures.len()));
    }
    let oi = order_independence_report(2025, 100).map_err(|e| e.to_string())?;
    if oi.cases < 100 || !oi.passed() {
        return Err(format!("orders: {} cases, {} failures", oi.cases, oi.failures.len()));
    }
    for (m, n) in dims(7) {
        let dp = recursion_dp::<CoefRat>(m, n, true).map_err(|e| e.to_string())?;
        let rep = check_braid_rules(&dp).map_err(|e| e.to_string())?;
        if !rep.failures.is_empty() {
            return Err(format!("({m},{n}) transitions: {:?}", rep.failures));
        }
    }
    Ok(())
}

fn c_alpha_and_parking() -> Result<(), String> {
    let tower = Tower::<CoefRat>::new();
    for s in 1..=4 {
        for alpha in compositions(s) {
            if !c_alpha_identity_check(&tower, &alpha).map_err(|e| e.to_string())? {
                return Err(format!("C_alpha {alpha:?}"));
            }
        }
    }
    for n in 1..=3 {
        let mut acc = F::zero(n);
        for alpha in compositions(n) {
            acc.add_assign(&rhs_compositional(1, 1, n, &alpha).map_err(|e| e.to_string())?);
        }
        if acc != parking_sum::<CoefRat>(n, n).map_err(|e| e.to_string())? {
            return Err(format!("parking sum n={n}"));
        }
    }
    Ok(())
}

fn nabla() -> Result<(), String> {
    for n in 1..=3 {
        for p in enumerate_paths(n, n, None).map_err(|e| e.to_string())? {
            if !nabla_conjugation_check::<CoefRat>(&p).map_err(|e| e.to_string())? {
                return Err(format!("path {}", p.bits()));
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Result<(), String>); 8] = [
        ("relation suite", relations),
        ("sweep correctness", sweep),
        ("coloring recursion", coloring),
        ("braid evaluation of colorings", theorem_main),
        ("compositional shuffle identity", compositional),
        ("braid algebra", braid_algebra),
        ("C_alpha consistency", c_alpha_and_parking),
        ("nabla conjugation", nabla),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {} {name}", i + 1),
            Err(why) => {
                println!("FAIL {} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
