//! Integral homology of small finite groups from the normalized bar complex.

use num_bigint::BigInt;

use super::abelian::FgAbGroup;
use super::sparse::SparseMatrix;
use crate::error::{check_bound, Result};
use crate::group::FiniteGroup;

pub const GROUP_HOMOLOGY_ORDER_LIMIT: usize = 8;
pub const GROUP_HOMOLOGY_DEGREE_LIMIT: usize = 3;

fn encode(t: &[usize], base: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * base + (x - 1))
}

fn decode(mut code: usize, len: usize, base: usize) -> Vec<usize> {
    let mut t = vec![0; len];
    for k in (0..len).rev() {
        t[k] = code % base + 1;
        code /= base;
    }
    t
}

/// `d_n : C_n -> C_{n-1}` with `C_n = Z[(G - 1)^n]`, trivial coefficients.
fn bar_differential(g: &FiniteGroup, n: usize) -> SparseMatrix {
    let base = g.order() - 1;
    let rows = base.pow(n as u32);
    if n == 0 {
        return SparseMatrix::new(1, 0);
    }
    let mut d = SparseMatrix::new(rows, base.pow(n as u32 - 1));
    for code in 0..rows {
        let t = decode(code, n, base);
        d.add(code, encode(&t[1..], base), 1);
        for i in 0..n - 1 {
            let p = g.mul(t[i], t[i + 1]);
            if p == g.identity() {
                continue;
            }
            let mut face = t[..i].to_vec();
            face.push(p);
            face.extend_from_slice(&t[i + 2..]);
            d.add(code, encode(&face, base), if (i + 1) % 2 == 0 { 1 } else { -1 });
        }
        d.add(code, encode(&t[..n - 1], base), if n.is_multiple_of(2) { 1 } else { -1 });
    }
    d
}

/// `H_n(G; Z)` for `n <= 3` and `|G| <= 8`.
pub fn group_homology(g: &FiniteGroup, n: usize) -> Result<FgAbGroup> {
    check_bound("group homology degree", n, GROUP_HOMOLOGY_DEGREE_LIMIT)?;
    check_bound("group order for bar complex", g.order(), GROUP_HOMOLOGY_ORDER_LIMIT)?;
    if n == 0 {
        return Ok(FgAbGroup::free(1));
    }
    if g.order() == 1 {
        return Ok(FgAbGroup::trivial());
    }
    let d_in = bar_differential(g, n);
    let d_out = bar_differential(g, n + 1);
    debug_assert!(d_out.product_is_zero(&d_in));
    let dim = d_in.rows();
    let rank_in = d_in.rank();
    let inv: Vec<BigInt> = d_out.invariant_factors();
    Ok(FgAbGroup::from_invariants(dim - rank_in, &inv))
}

/// `H_0 .. H_nmax`.
pub fn group_homology_table(g: &FiniteGroup, nmax: usize) -> Result<Vec<FgAbGroup>> {
    (0..=nmax).map(|n| group_homology(g, n)).collect()
}
