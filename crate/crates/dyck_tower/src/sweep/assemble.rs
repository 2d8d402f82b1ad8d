use std::collections::BTreeMap;

use super::coloring::{composition_coloring, Coloring};
use crate::coeffring::Scalar;
use crate::error::{Error, Result};
use crate::symfunc::SymFunc;
use crate::vkspace::{act_dminus, VElem};

/// `t^(sum(alpha_i - 1)) d_-^r D_{c_alpha}`.
pub fn assemble_composition<S: Scalar>(
    m1: usize,
    n1: usize,
    g: usize,
    alpha: &[usize],
    dp: &BTreeMap<Coloring, VElem<S>>,
) -> Result<SymFunc<S>> {
    let c = composition_coloring(m1, n1, g, alpha)?;
    let mut f = dp.get(&c).cloned().ok_or_else(|| Error::InvalidArgument(format!("coloring {c} is not in the table")))?;
    for _ in 0..alpha.len() {
        f = act_dminus(&f)?;
    }
    let extra: usize = alpha.iter().map(|a| a - 1).sum();
    Ok(f.scale(&S::t_pow(extra as i32)).to_sym())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoefRat;
    use crate::combinat::rhs_compositional;
    use crate::sweep::recursion_dp;
    use crate::symfunc::compositions;

    #[test]
    fn matches_rhs_small() {
        for (m1, n1, g) in [(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 1), (2, 1, 2)] {
            let dp = recursion_dp::<CoefRat>(g * m1, g * n1, false).unwrap();
            for a in compositions(g) {
                let lhs = assemble_composition(m1, n1, g, &a, &dp.last).unwrap();
                assert_eq!(lhs, rhs_compositional(m1, n1, g, &a).unwrap(), "({m1},{n1},{g}) {a:?}");
            }
        }
    }
}
