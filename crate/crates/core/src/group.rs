//! Finite groups as dense multiplication tables.
//!
//! Elements are indices 0..n-1 with the identity always at index 0; the
//! table is the single source of truth for every downstream computation.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

use crate::error::{AxiomKind, Error, Result};
use crate::perm::Permutation;

/// Associativity is checked exhaustively up to this order and on sampled
/// triples above it.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 128;
const ASSOC_SAMPLES: usize = 100_000;
const ASSOC_SEED: u64 = 0x636f_6d61_7867;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>, // row-major: table[i * order + j] = i * j
    inverse: Vec<usize>,
    label: String,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// The identity element; normalized to index 0 on construction.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// x^-1 y^-1 x y
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// Least k >= 1 with x^k = e; divides the group order.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|x| self.element_order(x)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        for i in 0..self.order {
            for j in i + 1..self.order {
                if self.mul(i, j) != self.mul(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Validates an arbitrary square table and normalizes the identity to
    /// index 0. Witnesses in errors refer to the input indexing.
    pub fn from_mult_table(rows: Vec<Vec<usize>>) -> Result<GroupTable> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::BadParameter("empty multiplication table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadParameter(format!(
                    "row {i} has length {} in a table of order {n}",
                    row.len()
                )));
            }
            table.extend_from_slice(row);
        }
        check_latin(n, &table)?;
        let e = find_identity(n, &table)?;
        let table = if e == 0 {
            table
        } else {
            relabel_swap(n, &table, e)
        };
        Self::from_parts_validated(table, "custom")
    }

    /// Breadth-first closure of permutation generators under composition.
    /// Elements are indexed in discovery order with the identity at 0.
    pub fn from_permutation_generators(
        gens: &[Permutation],
        closure_cap: usize,
    ) -> Result<GroupTable> {
        if gens.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        let degree = gens[0].degree();
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::BadParameter(
                "generators have mixed degrees".into(),
            ));
        }
        let mut elems = vec![Permutation::identity(degree)];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(elems[0].images().to_vec(), 0);
        let mut next = 0;
        while next < elems.len() {
            for g in gens {
                let w = elems[next].then(g);
                if !index.contains_key(w.images()) {
                    if elems.len() >= closure_cap {
                        return Err(Error::ClosureCapExceeded(closure_cap));
                    }
                    index.insert(w.images().to_vec(), elems.len());
                    elems.push(w);
                }
            }
            next += 1;
        }
        let n = elems.len();
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let w = elems[i].then(&elems[j]);
                table[i * n + j] = index[w.images()];
            }
        }
        Self::from_parts_validated(table, format!("perm(deg={degree},gens={})", gens.len()))
    }

    /// Internal constructor for tables built with the identity at index 0.
    /// Runs the full axiom check so constructor bugs surface immediately.
    pub(crate) fn from_parts_validated(
        table: Vec<usize>,
        label: impl Into<String>,
    ) -> Result<GroupTable> {
        let n2 = table.len();
        let n = (n2 as f64).sqrt().round() as usize;
        debug_assert_eq!(n * n, n2);
        check_latin(n, &table)?;
        let e = find_identity(n, &table)?;
        if e != 0 {
            return Err(Error::AxiomViolation {
                kind: AxiomKind::NoIdentity,
                witness: format!("identity sits at index {e}, expected 0"),
            });
        }
        let inverse = find_inverses(n, &table)?;
        check_associativity(n, &table)?;
        Ok(GroupTable {
            order: n,
            table,
            inverse,
            label: label.into(),
        })
    }

    /// Re-checks every axiom on the stored table.
    pub fn validate_axioms(&self) -> Result<()> {
        check_latin(self.order, &self.table)?;
        let e = find_identity(self.order, &self.table)?;
        if e != 0 {
            return Err(Error::AxiomViolation {
                kind: AxiomKind::NoIdentity,
                witness: "identity not at index 0".into(),
            });
        }
        find_inverses(self.order, &self.table)?;
        check_associativity(self.order, &self.table)
    }
}

fn check_latin(n: usize, t: &[usize]) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..n {
            let v = t[i * n + j];
            if v >= n {
                return Err(Error::AxiomViolation {
                    kind: AxiomKind::NotLatinSquare,
                    witness: format!("entry {v} at ({i},{j}) out of range 0..{n}"),
                });
            }
            if seen[v] == i {
                return Err(Error::AxiomViolation {
                    kind: AxiomKind::NotLatinSquare,
                    witness: format!("row {i} repeats {v}"),
                });
            }
            seen[v] = i;
        }
    }
    let mut seen = vec![usize::MAX; n];
    for j in 0..n {
        for i in 0..n {
            let v = t[i * n + j];
            if seen[v] == j {
                return Err(Error::AxiomViolation {
                    kind: AxiomKind::NotLatinSquare,
                    witness: format!("column {j} repeats {v}"),
                });
            }
            seen[v] = j;
        }
    }
    Ok(())
}

fn find_identity(n: usize, t: &[usize]) -> Result<usize> {
    'cand: for e in 0..n {
        for j in 0..n {
            if t[e * n + j] != j || t[j * n + e] != j {
                continue 'cand;
            }
        }
        return Ok(e);
    }
    Err(Error::AxiomViolation {
        kind: AxiomKind::NoIdentity,
        witness: "no two-sided identity element".into(),
    })
}

fn find_inverses(n: usize, t: &[usize]) -> Result<Vec<usize>> {
    let mut inv = vec![usize::MAX; n];
    for i in 0..n {
        let j = (0..n).find(|&j| t[i * n + j] == 0 && t[j * n + i] == 0);
        match j {
            Some(j) => inv[i] = j,
            None => {
                return Err(Error::AxiomViolation {
                    kind: AxiomKind::NoInverse,
                    witness: format!("element {i} has no two-sided inverse"),
                })
            }
        }
    }
    Ok(inv)
}

fn check_associativity(n: usize, t: &[usize]) -> Result<()> {
    let check = |i: usize, j: usize, k: usize| -> Result<()> {
        if t[t[i * n + j] * n + k] != t[i * n + t[j * n + k]] {
            return Err(Error::AxiomViolation {
                kind: AxiomKind::NotAssociative,
                witness: format!("({i}*{j})*{k} != {i}*({j}*{k})"),
            });
        }
        Ok(())
    };
    if n <= EXHAUSTIVE_ASSOC_LIMIT {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    check(i, j, k)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SEED);
        for _ in 0..ASSOC_SAMPLES {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            let k = rng.gen_range(0..n);
            check(i, j, k)?;
        }
    }
    Ok(())
}

/// Relabel by the transposition (0 e) so the identity lands at index 0.
fn relabel_swap(n: usize, t: &[usize], e: usize) -> Vec<usize> {
    let sigma = |i: usize| {
        if i == 0 {
            e
        } else if i == e {
            0
        } else {
            i
        }
    };
    let mut out = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = sigma(t[sigma(i) * n + sigma(j)]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::AxiomKind;

    #[test]
    fn trivial_group() {
        let g = GroupTable::from_mult_table(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.element_order(0), 1);
    }

    #[test]
    fn z2_table() {
        let g = GroupTable::from_mult_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn rejects_non_latin() {
        let err = GroupTable::from_mult_table(vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        match err {
            Error::AxiomViolation { kind, .. } => assert_eq!(kind, AxiomKind::NotLatinSquare),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_non_associative() {
        // A Latin square with identity that fails associativity (order 5
        // quasigroup): rows built from a non-group pattern.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = GroupTable::from_mult_table(rows).unwrap_err();
        match err {
            Error::AxiomViolation { kind, .. } => assert_eq!(kind, AxiomKind::NotAssociative),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn identity_normalized_to_zero() {
        // Z3 with the identity written at index 2.
        let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = GroupTable::from_mult_table(rows).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(0, 2), 2);
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn s3_from_generators() {
        let gens = vec![
            Permutation::from_cycles(3, "(0 1 2)").unwrap(),
            Permutation::from_cycles(3, "(0 1)").unwrap(),
        ];
        let g = GroupTable::from_permutation_generators(&gens, 10_000).unwrap();
        assert_eq!(g.order(), 6);
        let orders = g.element_orders();
        assert_eq!(orders.iter().filter(|&&o| o == 3).count(), 2);
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 3);
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let g =
            GroupTable::from_permutation_generators(&[Permutation::identity(4)], 10_000).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn closure_cap_enforced() {
        let gens = vec![
            Permutation::from_cycles(5, "(0 1 2 3 4)").unwrap(),
            Permutation::from_cycles(5, "(0 1)").unwrap(),
        ];
        let err = GroupTable::from_permutation_generators(&gens, 10).unwrap_err();
        assert_eq!(err, Error::ClosureCapExceeded(10));
    }

    #[test]
    fn empty_generators_rejected() {
        assert_eq!(
            GroupTable::from_permutation_generators(&[], 100).unwrap_err(),
            Error::EmptyGeneratorSet
        );
    }

    #[test]
    fn element_orders_divide_group_order() {
        let gens = vec![
            Permutation::from_cycles(4, "(0 1 2 3)").unwrap(),
            Permutation::from_cycles(4, "(0 1)").unwrap(),
        ];
        let g = GroupTable::from_permutation_generators(&gens, 10_000).unwrap();
        assert_eq!(g.order(), 24);
        for x in 0..g.order() {
            assert_eq!(g.order() % g.element_order(x), 0);
        }
    }
}
