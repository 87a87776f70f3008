use super::{CutIdeal, CutRing, ExponentMatrix, Provenance};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{buchberger, saturate_by_variables, Monomial, PrimeField};

fn overflow() -> Error {
    Error::Incomplete("integer overflow in lattice kernel".into())
}

/// A basis of `ker_Z(M)` from unimodular row operations on `[M^T | I]`,
/// followed by greedy pairwise size reduction.
pub fn lattice_kernel(m: &ExponentMatrix) -> Result<Vec<Vec<i64>>> {
    let (r, n) = (m.rows(), m.cols());
    let mut left: Vec<Vec<i128>> = (0..n)
        .map(|j| m.column(j).iter().map(|&x| x as i128).collect())
        .collect();
    let mut right: Vec<Vec<i128>> = (0..n)
        .map(|j| (0..n).map(|k| (j == k) as i128).collect())
        .collect();
    let mut pivot_row = 0;
    for c in 0..r {
        loop {
            // smallest nonzero |entry| in column c at or below pivot_row
            let Some(best) = (pivot_row..n)
                .filter(|&i| left[i][c] != 0)
                .min_by_key(|&i| left[i][c].abs())
            else {
                break;
            };
            left.swap(pivot_row, best);
            right.swap(pivot_row, best);
            let mut done = true;
            for i in pivot_row + 1..n {
                if left[i][c] != 0 {
                    let q = left[i][c].div_euclid(left[pivot_row][c]);
                    let (pl, pr) = (left[pivot_row].clone(), right[pivot_row].clone());
                    sub_mul(&mut left[i], &pl, q)?;
                    sub_mul(&mut right[i], &pr, q)?;
                    if left[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                pivot_row += 1;
                break;
            }
        }
        if pivot_row == n {
            break;
        }
    }
    let mut basis: Vec<Vec<i128>> = right.split_off(pivot_row);
    size_reduce(&mut basis)?;
    basis
        .into_iter()
        .map(|v| v.into_iter().map(|x| i64::try_from(x).map_err(|_| overflow())).collect())
        .collect()
}

fn sub_mul(a: &mut [i128], b: &[i128], q: i128) -> Result<()> {
    for (x, &y) in a.iter_mut().zip(b) {
        *x = y
            .checked_mul(q)
            .and_then(|p| x.checked_sub(p))
            .ok_or_else(overflow)?;
    }
    Ok(())
}

fn l1(v: &[i128]) -> i128 {
    v.iter().map(|x| x.abs()).sum()
}

/// Replaces `v_i` by `v_i ± v_j` while that shrinks its 1-norm.
fn size_reduce(basis: &mut [Vec<i128>]) -> Result<()> {
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                for sign in [1i128, -1] {
                    let cand: Vec<i128> = basis[i]
                        .iter()
                        .zip(&basis[j])
                        .map(|(&a, &b)| a.checked_sub(sign * b).ok_or_else(overflow))
                        .collect::<Result<_>>()?;
                    if l1(&cand) < l1(&basis[i]) {
                        basis[i] = cand;
                        changed = true;
                    }
                }
            }
        }
    }
    Ok(())
}

/// `I_G` as the saturation of the lattice-basis ideal by the product of all
/// variables.
pub fn cut_ideal_lattice(g: &Graph, field: PrimeField) -> Result<CutIdeal> {
    let cr = CutRing::new(g, field)?;
    let ring = cr.ring();
    let n = cr.nvars();
    let basis = lattice_kernel(cr.matrix())?;
    let split = |v: &[i64], sign: i64| -> Result<Monomial> {
        let e: Vec<u32> = v.iter().map(|&x| (x * sign).max(0) as u32).collect();
        Monomial::from_u32(&e)
    };
    let gens = basis
        .iter()
        .map(|v| Ok(ring.binomial(split(v, 1)?, split(v, -1)?)))
        .collect::<Result<Vec<_>>>()?;
    let gb = if gens.is_empty() {
        buchberger(ring, &[])?
    } else {
        let vars: Vec<usize> = (0..n).collect();
        saturate_by_variables(ring, &gens, &vars)?
    };
    Ok(CutIdeal::new(cr, gb, Provenance::Lattice))
}
