//! Johnson scheme J(v, k).

use super::{AssociationScheme, ClassMatrix, SchemeError, SchemeFamily, DEFAULT_VERTEX_CAP};
use crate::matrix::IntMatrix;

/// Builds the Johnson scheme J(v, k): vertices are the k-subsets of
/// {1..v}, and a pair (α, β) lies in class i iff |α ∩ β| = k − i.
/// The scheme has d = min(k, v−k) classes.
pub fn build_johnson(v: u64, k: u64) -> Result<AssociationScheme, SchemeError> {
    build_johnson_capped(v, k, DEFAULT_VERTEX_CAP)
}

pub fn build_johnson_capped(
    v: u64,
    k: u64,
    vertex_cap: usize,
) -> Result<AssociationScheme, SchemeError> {
    if v < 2 || k == 0 || k > v - 1 {
        return Err(SchemeError::ParameterOutOfRange(format!(
            "johnson requires v >= 2 and 1 <= k <= v-1, got v={v}, k={k}"
        )));
    }
    let vertices = match binomial(v, k) {
        Some(b) if b <= vertex_cap as u128 => b as usize,
        _ => {
            return Err(SchemeError::VertexCapExceeded {
                vertices: usize::MAX,
                cap: vertex_cap,
            })
        }
    };

    let subsets = k_subsets(v, k);
    debug_assert_eq!(subsets.len(), vertices);
    let d = k.min(v - k) as usize;

    let mut classes: Vec<IntMatrix> =
        (0..=d).map(|_| IntMatrix::zeros(vertices, vertices)).collect();
    for (a, sa) in subsets.iter().enumerate() {
        for (b, sb) in subsets.iter().enumerate() {
            let inter = (sa & sb).count_ones() as u64;
            let class = (k - inter) as usize;
            classes[class][(a, b)] = 1;
        }
    }

    let classes = classes
        .into_iter()
        .map(ClassMatrix::new)
        .collect::<Result<Vec<_>, _>>()?;
    AssociationScheme::from_classes_with_family(classes, Some(SchemeFamily::Johnson { v, k }))
}

/// k-subsets of {0..v-1} as bitmasks, in lexicographic order.
fn k_subsets(v: u64, k: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut current: Vec<u64> = (0..k).collect();
    loop {
        out.push(current.iter().fold(0u64, |m, &b| m | (1 << b)));
        // next combination in lexicographic order
        let mut i = k as i64 - 1;
        while i >= 0 && current[i as usize] == v - k + i as u64 {
            i -= 1;
        }
        if i < 0 {
            break;
        }
        let i = i as usize;
        current[i] += 1;
        for j in i + 1..k as usize {
            current[j] = current[j - 1] + 1;
        }
    }
    out
}

fn binomial(n: u64, k: u64) -> Option<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}
