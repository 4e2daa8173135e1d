//! Grassmann scheme J_q(v, d): d-dimensional subspaces of F_q^v.

use super::{AssociationScheme, ClassMatrix, SchemeError, SchemeFamily, DEFAULT_VERTEX_CAP};
use crate::matrix::IntMatrix;

/// Builds the Grassmann scheme: vertices are the dsub-dimensional
/// subspaces of F_q^v (canonical reduced row-echelon bases), and α, β lie
/// in class i iff dim(α ∩ β) = dsub − i. Class 0 is equality; there are
/// d = min(dsub, v − dsub) classes.
pub fn build_grassmann(q: u64, v: u64, dsub: u64) -> Result<AssociationScheme, SchemeError> {
    build_grassmann_capped(q, v, dsub, DEFAULT_VERTEX_CAP)
}

pub fn build_grassmann_capped(
    q: u64,
    v: u64,
    dsub: u64,
    vertex_cap: usize,
) -> Result<AssociationScheme, SchemeError> {
    if q != 2 && q != 3 {
        return Err(SchemeError::UnsupportedFieldSize(q));
    }
    if dsub == 0 || dsub > v - 1 {
        return Err(SchemeError::ParameterOutOfRange(format!(
            "grassmann requires 1 <= dsub <= v-1, got v={v}, dsub={dsub}"
        )));
    }
    let count = gaussian_binomial(q as u128, v, dsub).ok_or(SchemeError::VertexCapExceeded {
        vertices: usize::MAX,
        cap: vertex_cap,
    })?;
    if count > vertex_cap as u128 {
        return Err(SchemeError::VertexCapExceeded { vertices: count as usize, cap: vertex_cap });
    }

    let subspaces = enumerate_subspaces(q, v as usize, dsub as usize);
    debug_assert_eq!(subspaces.len() as u128, count);
    let n = subspaces.len();
    let d = dsub.min(v - dsub) as usize;

    let mut classes: Vec<IntMatrix> = (0..=d).map(|_| IntMatrix::zeros(n, n)).collect();
    for (a, sa) in subspaces.iter().enumerate() {
        for (b, sb) in subspaces.iter().enumerate() {
            let meet = intersection_dim(q, v as usize, sa, sb);
            let class = dsub as usize - meet;
            classes[class][(a, b)] = 1;
        }
    }

    let classes = classes
        .into_iter()
        .map(ClassMatrix::new)
        .collect::<Result<Vec<_>, _>>()?;
    AssociationScheme::from_classes_with_family(
        classes,
        Some(SchemeFamily::Grassmann { q, v, dsub }),
    )
}

/// Gaussian binomial [v choose d]_q.
fn gaussian_binomial(q: u128, v: u64, d: u64) -> Option<u128> {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..d {
        num = num.checked_mul(q.checked_pow((v - i) as u32)? - 1)?;
        den = den.checked_mul(q.checked_pow((i + 1) as u32)? - 1)?;
    }
    Some(num / den)
}

/// All rank-`d` reduced row-echelon matrices with `v` columns over F_q,
/// each a canonical subspace representative. Rows are Vec<u8> of field
/// elements.
fn enumerate_subspaces(q: u64, v: usize, d: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    let mut pivots = (0..d).collect::<Vec<usize>>();
    loop {
        emit_for_pivots(q as u8, v, d, &pivots, &mut out);
        // next pivot combination
        let mut i = d as i64 - 1;
        while i >= 0 && pivots[i as usize] == v - d + i as usize {
            i -= 1;
        }
        if i < 0 {
            break;
        }
        let i = i as usize;
        pivots[i] += 1;
        for j in i + 1..d {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
    out
}

fn emit_for_pivots(q: u8, v: usize, d: usize, pivots: &[usize], out: &mut Vec<Vec<Vec<u8>>>) {
    // free positions: (row r, col c) with c > pivots[r], c not a pivot column
    let mut free = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        for c in p + 1..v {
            if !pivots.contains(&c) {
                free.push((r, c));
            }
        }
    }
    let total = (q as u64).pow(free.len() as u32);
    for mut code in 0..total {
        let mut mat = vec![vec![0u8; v]; d];
        for (r, &p) in pivots.iter().enumerate() {
            mat[r][p] = 1;
        }
        for &(r, c) in &free {
            mat[r][c] = (code % q as u64) as u8;
            code /= q as u64;
        }
        out.push(mat);
    }
}

/// dim(α ∩ β) = dim α + dim β − rank(α stacked on β), ranks over F_q.
fn intersection_dim(q: u64, v: usize, a: &[Vec<u8>], b: &[Vec<u8>]) -> usize {
    let mut stacked: Vec<Vec<u8>> = a.iter().chain(b.iter()).cloned().collect();
    let rank = row_reduce(q as u8, v, &mut stacked);
    a.len() + b.len() - rank
}

/// Gaussian elimination over F_q; returns the rank.
fn row_reduce(q: u8, v: usize, rows: &mut [Vec<u8>]) -> usize {
    let inv = |x: u8| -> u8 {
        // q is 2 or 3; nonzero elements are self-inverse in both fields
        debug_assert!(x != 0);
        x
    };
    let mut rank = 0;
    for col in 0..v {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let scale = inv(rows[rank][col]);
        for c in col..v {
            rows[rank][c] = mul_mod(rows[rank][c], scale, q);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in col..v {
                    let sub = mul_mod(factor, rows[rank][c], q);
                    rows[r][c] = sub_mod(rows[r][c], sub, q);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mul_mod(a: u8, b: u8, q: u8) -> u8 {
    ((a as u16 * b as u16) % q as u16) as u8
}

fn sub_mod(a: u8, b: u8, q: u8) -> u8 {
    ((a as i16 - b as i16).rem_euclid(q as i16)) as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 2, 1), Some(3));
        assert_eq!(gaussian_binomial(2, 3, 1), Some(7));
        assert_eq!(gaussian_binomial(2, 4, 2), Some(35));
        assert_eq!(gaussian_binomial(3, 3, 1), Some(13));
    }

    #[test]
    fn lines_of_f2_squared() {
        // 3 lines of F_2², 1 class, A_1 = J - I
        let s = build_grassmann(2, 2, 1).unwrap();
        assert_eq!(s.vertex_count(), 3);
        assert_eq!(s.class_count(), 1);
        assert_eq!(s.valencies(), &[1, 2]);
    }

    #[test]
    fn lines_of_f2_cubed() {
        let s = build_grassmann(2, 3, 1).unwrap();
        assert_eq!(s.vertex_count(), 7);
        assert_eq!(s.class_count(), 1);
    }

    #[test]
    fn rejects_unsupported_field() {
        assert!(matches!(build_grassmann(5, 3, 1), Err(SchemeError::UnsupportedFieldSize(5))));
    }

    #[test]
    fn rank_over_f3() {
        // 2*(1,2,0) = (2,1,0) mod 3, so the first two rows are dependent
        let mut rows = vec![vec![1u8, 2, 0], vec![2, 1, 0], vec![0, 0, 1]];
        assert_eq!(row_reduce(3, 3, &mut rows), 2);
    }

    #[test]
    fn inverse_elements_mod3() {
        // nonzero elements of F_2, F_3 are self-inverse: 1*1=1, 2*2=4=1 mod 3
        assert_eq!(mul_mod(2, 2, 3), 1);
    }
}
