//! The parking-function side: weighted sums of characteristic functions.

use num_integer::Integer;

use super::marked::char_function;
use super::path::{check_composition, enumerate_paths, DyckPath};
use crate::coeffring::Scalar;
use crate::error::{Error, Result};
use crate::symfunc::SymFunc;

/// `t^area q^(dinv - maxtdinv) chi(pi', S_pi)`.
pub fn path_weight<S: Scalar>(p: &DyckPath) -> Result<SymFunc<S>> {
    let st = p.statistics();
    let chi = char_function::<S>(&p.attack_structure())?;
    let c = S::t_pow(st.area as i32).mul(&S::q_pow(st.dinv as i32 - st.maxtdinv as i32));
    Ok(chi.scale(&c))
}

pub(crate) fn check_slope(m1: usize, n1: usize) -> Result<()> {
    if m1 == 0 || n1 == 0 || m1.gcd(&n1) != 1 {
        return Err(Error::NotCoprime { m: m1 as u32, n: n1 as u32 });
    }
    Ok(())
}

/// Sum of path weights over `(g m1, g n1)`-paths with touch composition `alpha`.
pub fn rhs_compositional<S: Scalar>(m1: usize, n1: usize, g: usize, alpha: &[usize]) -> Result<SymFunc<S>> {
    check_slope(m1, n1)?;
    check_composition(alpha, g)?;
    let n = g * n1;
    let mut acc = SymFunc::zero(n);
    for p in enumerate_paths(g * m1, n, Some(alpha))? {
        acc.add_assign(&path_weight(&p)?);
    }
    Ok(acc)
}

/// Sum of path weights over all `(m,n)`-paths.
pub fn parking_sum<S: Scalar>(m: usize, n: usize) -> Result<SymFunc<S>> {
    let mut acc = SymFunc::zero(n);
    for p in enumerate_paths(m, n, None)? {
        acc.add_assign(&path_weight(&p)?);
    }
    Ok(acc)
}
