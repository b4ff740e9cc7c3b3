//! Homology of direct products from the homology of the factors.

use super::abelian::FgAbGroup;
use crate::error::{structural, Result};

/// `H_n(A x B)` from tables `H_0..H_n` of each factor.
pub fn kunneth_pair(a: &[FgAbGroup], b: &[FgAbGroup], n: usize) -> Result<FgAbGroup> {
    if a.len() <= n || b.len() <= n {
        return Err(structural(format!("Kunneth formula in degree {n} needs factor homology up to {n}")));
    }
    let mut out = FgAbGroup::trivial();
    for p in 0..=n {
        out = out.direct_sum(&a[p].tensor(&b[n - p]));
    }
    for p in 0..n {
        out = out.direct_sum(&a[p].tor(&b[n - 1 - p]));
    }
    Ok(out)
}

/// `H_n` of the product of all factors, iterating the pairwise formula.
pub fn kunneth_h(factors: &[Vec<FgAbGroup>], n: usize) -> Result<FgAbGroup> {
    let mut acc: Vec<FgAbGroup> = std::iter::once(FgAbGroup::free(1))
        .chain(std::iter::repeat_n(FgAbGroup::trivial(), n))
        .collect();
    for f in factors {
        acc = (0..=n).map(|k| kunneth_pair(&acc, f, k)).collect::<Result<_>>()?;
    }
    Ok(acc[n].clone())
}
