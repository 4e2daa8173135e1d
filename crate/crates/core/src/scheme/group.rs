//! Schemes from finite groups: B_j = Σ_{x ∈ C_j} A_x for orbits C_j of an
//! automorphism action, with conjugation giving the conjugacy classes.

use super::{AssociationScheme, ClassMatrix, SchemeError, SchemeFamily};
use crate::matrix::IntMatrix;

/// How the orbits C_1..C_d partitioning G \ {e} are chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitMode {
    /// Orbits of conjugation, i.e. the conjugacy classes.
    Conjugation,
    /// Singleton orbits; yields the full regular-representation scheme.
    Trivial,
    /// Caller-supplied partition of {1..n-1} (the identity class {0} is
    /// implicit and must not appear).
    Explicit(Vec<Vec<usize>>),
}

impl OrbitMode {
    fn label(&self) -> &'static str {
        match self {
            OrbitMode::Conjugation => "conjugation",
            OrbitMode::Trivial => "trivial",
            OrbitMode::Explicit(_) => "explicit",
        }
    }
}

/// Builds the scheme of a finite group from its Cayley table.
///
/// `table[i][j]` is the index of g_i · g_j; index 0 must be the identity.
/// Vertices are group elements and (x, y) lies in class j iff
/// y · x⁻¹ ∈ C_j.
pub fn build_group_scheme(
    table: &[Vec<usize>],
    mode: OrbitMode,
) -> Result<AssociationScheme, SchemeError> {
    let n = table.len();
    validate_group(table)?;
    let inverse = inverses(table);

    let mut orbits: Vec<Vec<usize>> = match &mode {
        OrbitMode::Conjugation => conjugacy_classes(table, &inverse),
        OrbitMode::Trivial => (1..n).map(|g| vec![g]).collect(),
        OrbitMode::Explicit(parts) => {
            validate_partition(n, parts)?;
            parts.clone()
        }
    };
    // deterministic order: by minimal element index
    orbits.sort_by_key(|orbit| *orbit.iter().min().unwrap());

    let mut orbit_of = vec![usize::MAX; n];
    orbit_of[0] = 0;
    for (j, orbit) in orbits.iter().enumerate() {
        for &g in orbit {
            orbit_of[g] = j + 1;
        }
    }

    // axiom 3 needs C_j^{-1} to be a class; cheap to check up front so the
    // explicit mode gets a targeted error instead of a generic axiom failure
    for orbit in &orbits {
        let inv_class = orbit_of[inverse[orbit[0]]];
        if orbit.iter().any(|&g| orbit_of[inverse[g]] != inv_class) {
            return Err(SchemeError::InvalidOrbits(
                "a class's inverses split across classes (transpose closure fails)".into(),
            ));
        }
    }

    let d = orbits.len();
    let mut classes: Vec<IntMatrix> = (0..=d).map(|_| IntMatrix::zeros(n, n)).collect();
    for x in 0..n {
        for y in 0..n {
            let g = table[y][inverse[x]]; // y · x^{-1}
            classes[orbit_of[g]][(x, y)] = 1;
        }
    }

    let classes = classes
        .into_iter()
        .map(ClassMatrix::new)
        .collect::<Result<Vec<_>, _>>()?;
    AssociationScheme::from_classes_with_family(
        classes,
        Some(SchemeFamily::Group { order: n, orbit_mode: mode.label().to_string() }),
    )
}

fn validate_group(table: &[Vec<usize>]) -> Result<(), SchemeError> {
    let n = table.len();
    if n == 0 {
        return Err(SchemeError::NotAGroup("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(SchemeError::NotAGroup(format!("row {i} has length {}", row.len())));
        }
        if row.iter().any(|&e| e >= n) {
            return Err(SchemeError::NotAGroup(format!("row {i} has an out-of-range entry")));
        }
    }
    // identity at index 0
    for i in 0..n {
        if table[0][i] != i || table[i][0] != i {
            return Err(SchemeError::NotAGroup("index 0 is not a two-sided identity".into()));
        }
    }
    // inverses: each row and column hits the identity
    for i in 0..n {
        if !(0..n).any(|j| table[i][j] == 0) {
            return Err(SchemeError::NotAGroup(format!("element {i} has no right inverse")));
        }
        if !(0..n).any(|j| table[j][i] == 0) {
            return Err(SchemeError::NotAGroup(format!("element {i} has no left inverse")));
        }
    }
    // associativity
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(SchemeError::NotAGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    Ok(())
}

fn inverses(table: &[Vec<usize>]) -> Vec<usize> {
    let n = table.len();
    (0..n)
        .map(|i| (0..n).find(|&j| table[i][j] == 0).expect("validated group"))
        .collect()
}

fn conjugacy_classes(table: &[Vec<usize>], inverse: &[usize]) -> Vec<Vec<usize>> {
    let n = table.len();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut classes = Vec::new();
    for g in 1..n {
        if seen[g] {
            continue;
        }
        let mut orbit = Vec::new();
        for h in 0..n {
            let conj = table[table[h][g]][inverse[h]]; // h g h^{-1}
            if !seen[conj] {
                seen[conj] = true;
                orbit.push(conj);
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    classes
}

fn validate_partition(n: usize, parts: &[Vec<usize>]) -> Result<(), SchemeError> {
    let mut seen = vec![false; n];
    seen[0] = true;
    for part in parts {
        if part.is_empty() {
            return Err(SchemeError::InvalidOrbits("empty class".into()));
        }
        for &g in part {
            if g == 0 {
                return Err(SchemeError::InvalidOrbits(
                    "identity must not appear in an explicit class".into(),
                ));
            }
            if g >= n {
                return Err(SchemeError::InvalidOrbits(format!("element {g} out of range")));
            }
            if seen[g] {
                return Err(SchemeError::InvalidOrbits(format!("element {g} appears twice")));
            }
            seen[g] = true;
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(SchemeError::InvalidOrbits(format!(
            "element {missing} not covered by the classes"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    #[test]
    fn z2_conjugation() {
        let s = build_group_scheme(&cyclic_table(2), OrbitMode::Conjugation).unwrap();
        assert_eq!(s.vertex_count(), 2);
        assert_eq!(s.class_count(), 1);
        assert_eq!(s.class(1), &IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn z4_explicit_orbits_give_cycle_scheme() {
        let mode = OrbitMode::Explicit(vec![vec![1, 3], vec![2]]);
        let s = build_group_scheme(&cyclic_table(4), mode).unwrap();
        assert_eq!(s.class_count(), 2);
        // B_1 is the 4-cycle adjacency matrix
        let cycle = IntMatrix::from_rows(vec![
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
        ]);
        assert_eq!(s.class(1), &cycle);
    }

    #[test]
    fn z4_trivial_orbits_regular_representation() {
        let s = build_group_scheme(&cyclic_table(4), OrbitMode::Trivial).unwrap();
        assert_eq!(s.class_count(), 3);
        assert!(s.commutative());
        for j in 0..=3 {
            assert_eq!(s.valencies()[j], 1);
        }
    }

    #[test]
    fn bad_tables_rejected() {
        // constant table: no inverses / identity
        let bad = vec![vec![0, 0], vec![0, 0]];
        assert!(matches!(build_group_scheme(&bad, OrbitMode::Trivial), Err(SchemeError::NotAGroup(_))));
        // element 1 is idempotent, so it has no inverse
        let bad2 = vec![vec![0, 1], vec![1, 1]];
        assert!(build_group_scheme(&bad2, OrbitMode::Trivial).is_err());
    }

    #[test]
    fn bad_partitions_rejected() {
        let t = cyclic_table(4);
        for parts in [
            vec![vec![1, 3]],                    // misses 2
            vec![vec![0, 1, 3], vec![2]],        // contains identity
            vec![vec![1], vec![1, 3], vec![2]],  // duplicate
        ] {
            assert!(matches!(
                build_group_scheme(&t, OrbitMode::Explicit(parts)),
                Err(SchemeError::InvalidOrbits(_))
            ));
        }
        // inverse-split partition: {1}, {2, 3} in Z_4 (1^{-1} = 3 lands elsewhere)
        assert!(matches!(
            build_group_scheme(&t, OrbitMode::Explicit(vec![vec![1], vec![2, 3]])),
            Err(SchemeError::InvalidOrbits(_))
        ));
    }
}
