//! Constructors for the named group families plus direct and semidirect
//! products. Every table is built with the identity at index 0 and passed
//! through the full axiom check.

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::num::{is_prime, pow_mod};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Z_n
    Cyclic(usize),
    /// Dihedral group of the given (even) order 2m, m >= 2.
    Dihedral(usize),
    /// Generalized quaternion group of order 2^n, n >= 3.
    GeneralizedQuaternion(usize),
    /// Semidihedral group of order 2^n, n >= 4.
    Semidihedral(usize),
    /// Modular maximal-cyclic group of order p^n, n >= 3.
    ModularMaximalCyclic { p: usize, n: u32 },
    /// Direct product of cyclic groups given by an invariant factor list.
    Abelian(Vec<usize>),
    /// (Z_p)^rank for a prime p.
    ElementaryAbelian { p: usize, rank: u32 },
    Symmetric(usize),
    Alternating(usize),
}

pub fn make_family(family: &Family, closure_cap: usize) -> Result<GroupTable> {
    match *family {
        Family::Cyclic(n) => cyclic(n, closure_cap),
        Family::Dihedral(order) => dihedral(order, closure_cap),
        Family::GeneralizedQuaternion(order) => generalized_quaternion(order, closure_cap),
        Family::Semidihedral(order) => semidihedral(order, closure_cap),
        Family::ModularMaximalCyclic { p, n } => modular_maximal_cyclic(p, n, closure_cap),
        Family::Abelian(ref factors) => abelian(factors, closure_cap),
        Family::ElementaryAbelian { p, rank } => elementary_abelian(p, rank, closure_cap),
        Family::Symmetric(n) => symmetric(n, closure_cap),
        Family::Alternating(n) => alternating(n, closure_cap),
    }
}

fn cap_check(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::ClosureCapExceeded(cap))
    } else {
        Ok(())
    }
}

fn table_from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut t = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            t[i * n + j] = f(i, j);
        }
    }
    t
}

pub fn cyclic(n: usize, cap: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::BadParameter("cyclic group needs order >= 1".into()));
    }
    cap_check(n, cap)?;
    GroupTable::from_parts_validated(table_from_fn(n, |i, j| (i + j) % n), format!("Z{n}"))
}

/// Elements are b^s a^i with s in {0,1}, i in 0..m, index s*m + i, under
/// a^m = b^2 = e and bab = a^-1.
pub fn dihedral(order: usize, cap: usize) -> Result<GroupTable> {
    if order < 4 || order % 2 != 0 {
        return Err(Error::BadParameter(format!(
            "dihedral order must be even and >= 4, got {order}"
        )));
    }
    cap_check(order, cap)?;
    let m = order / 2;
    let t = table_from_fn(order, |x, y| {
        let (s, i) = (x / m, x % m);
        let (tt, j) = (y / m, y % m);
        let i2 = if tt == 1 { (m - i) % m } else { i };
        ((s + tt) % 2) * m + (i2 + j) % m
    });
    GroupTable::from_parts_validated(t, format!("D{order}"))
}

/// Q_{2^n}: a^{2^{n-1}} = e, b^2 = a^{2^{n-2}}, b^-1 a b = a^-1.
pub fn generalized_quaternion(order: usize, cap: usize) -> Result<GroupTable> {
    if order < 8 || !order.is_power_of_two() {
        return Err(Error::BadParameter(format!(
            "generalized quaternion order must be 2^n with n >= 3, got {order}"
        )));
    }
    cap_check(order, cap)?;
    let m = order / 2;
    let t = table_from_fn(order, |x, y| {
        let (s, i) = (x / m, x % m);
        let (tt, j) = (y / m, y % m);
        let i2 = if tt == 1 { (m - i) % m } else { i };
        let twist = if s == 1 && tt == 1 { m / 2 } else { 0 };
        ((s + tt) % 2) * m + (i2 + j + twist) % m
    });
    GroupTable::from_parts_validated(t, format!("Q{order}"))
}

/// SD_{2^n}: a^{2^{n-1}} = b^2 = e, bab = a^{-1 + 2^{n-2}}.
pub fn semidihedral(order: usize, cap: usize) -> Result<GroupTable> {
    if order < 16 || !order.is_power_of_two() {
        return Err(Error::BadParameter(format!(
            "semidihedral order must be 2^n with n >= 4, got {order}"
        )));
    }
    cap_check(order, cap)?;
    let m = order / 2;
    let r = m / 2 - 1 + m; // -1 + 2^(n-2) mod m
    let t = table_from_fn(order, |x, y| {
        let (s, i) = (x / m, x % m);
        let (tt, j) = (y / m, y % m);
        let i2 = if tt == 1 { i * (r % m) % m } else { i };
        ((s + tt) % 2) * m + (i2 + j) % m
    });
    GroupTable::from_parts_validated(t, format!("SD{order}"))
}

/// M_{p^n}: a^{p^{n-1}} = b^p = e, b^-1 a b = a^{1 + p^{n-2}}.
pub fn modular_maximal_cyclic(p: usize, n: u32, cap: usize) -> Result<GroupTable> {
    if !is_prime(p) {
        return Err(Error::BadParameter(format!("{p} is not prime")));
    }
    if n < 3 {
        return Err(Error::BadParameter(format!(
            "modular maximal-cyclic group needs exponent >= 3, got {n}"
        )));
    }
    let order = p.pow(n);
    cap_check(order, cap)?;
    let m = p.pow(n - 1);
    let r = 1 + p.pow(n - 2);
    let t = table_from_fn(order, |x, y| {
        let (s, i) = (x / m, x % m);
        let (tt, j) = (y / m, y % m);
        ((s + tt) % p) * m + (i * pow_mod(r, tt, m) + j) % m
    });
    GroupTable::from_parts_validated(t, format!("M{order}"))
}

pub fn abelian(factors: &[usize], cap: usize) -> Result<GroupTable> {
    if factors.is_empty() {
        return Err(Error::BadParameter("empty invariant factor list".into()));
    }
    if factors.iter().any(|&d| d == 0) {
        return Err(Error::BadParameter("invariant factor 0".into()));
    }
    let order: usize = factors.iter().product();
    cap_check(order, cap)?;
    // mixed-radix indexing, last factor fastest
    let decode = |mut x: usize| -> Vec<usize> {
        let mut digits = vec![0usize; factors.len()];
        for (k, &d) in factors.iter().rev().enumerate() {
            digits[factors.len() - 1 - k] = x % d;
            x /= d;
        }
        digits
    };
    let encode = |digits: &[usize]| -> usize {
        digits
            .iter()
            .zip(factors)
            .fold(0usize, |acc, (&x, &d)| acc * d + x)
    };
    let t = table_from_fn(order, |i, j| {
        let a = decode(i);
        let b = decode(j);
        let sum: Vec<usize> = a
            .iter()
            .zip(&b)
            .zip(factors)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect();
        encode(&sum)
    });
    let label = factors
        .iter()
        .map(|d| format!("Z{d}"))
        .collect::<Vec<_>>()
        .join("x");
    GroupTable::from_parts_validated(t, label)
}

pub fn elementary_abelian(p: usize, rank: u32, cap: usize) -> Result<GroupTable> {
    if !is_prime(p) {
        return Err(Error::BadParameter(format!("{p} is not prime")));
    }
    if rank == 0 {
        return Err(Error::BadParameter("rank must be >= 1".into()));
    }
    abelian(&vec![p; rank as usize], cap)
}

pub fn symmetric(n: usize, cap: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::BadParameter("symmetric group needs degree >= 1".into()));
    }
    let gens = if n == 1 {
        vec![Permutation::identity(1)]
    } else {
        let rotation = Permutation::new((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        let swap = Permutation::from_cycles(n, "(0 1)").unwrap();
        vec![swap, rotation]
    };
    Ok(GroupTable::from_permutation_generators(&gens, cap)?.with_label(format!("S{n}")))
}

pub fn alternating(n: usize, cap: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::BadParameter(
            "alternating group needs degree >= 1".into(),
        ));
    }
    let gens = if n < 3 {
        vec![Permutation::identity(n)]
    } else {
        // 3-cycles (0 1 k) generate A_n
        (2..n)
            .map(|k| Permutation::from_cycles(n, &format!("(0 1 {k})")).unwrap())
            .collect()
    };
    Ok(GroupTable::from_permutation_generators(&gens, cap)?.with_label(format!("A{n}")))
}

/// Componentwise product on index pairs, row-major pair indexing.
pub fn direct_product(g: &GroupTable, h: &GroupTable, cap: usize) -> Result<GroupTable> {
    let n = g.order() * h.order();
    cap_check(n, cap)?;
    let hb = h.order();
    let t = table_from_fn(n, |x, y| {
        let (gi, hi) = (x / hb, x % hb);
        let (gj, hj) = (y / hb, y % hb);
        g.mul(gi, gj) * hb + h.mul(hi, hj)
    });
    GroupTable::from_parts_validated(t, format!("{} x {}", g.label(), h.label()))
}

/// Z_p x| Z_q on index pairs (i mod p, j mod q) with
/// (i,j)*(k,l) = (i + k*r^j mod p, j + l mod q).
pub fn semidirect_cyclic(p: usize, q: usize, r: usize) -> Result<GroupTable> {
    if !is_prime(p) || !is_prime(q) {
        return Err(Error::BadParameter(format!(
            "{p} and {q} must both be prime"
        )));
    }
    if p == q {
        return Err(Error::BadParameter(format!("primes must be distinct, got {p}")));
    }
    let r0 = r % p;
    if r0 == 1 {
        return Err(Error::BadParameter(format!("r = {r} is 1 mod {p}")));
    }
    if pow_mod(r0, q, p) != 1 {
        return Err(Error::BadParameter(format!(
            "r^q = {r}^{q} is not 1 mod {p}"
        )));
    }
    let n = p * q;
    let t = table_from_fn(n, |x, y| {
        let (i, j) = (x / q, x % q);
        let (k, l) = (y / q, y % q);
        ((i + k * pow_mod(r0, j, p)) % p) * q + (j + l) % q
    });
    GroupTable::from_parts_validated(t, format!("Z{p}:Z{q}(r={r})"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 10_000;

    #[test]
    fn quaternion_8_has_unique_involution() {
        let g = generalized_quaternion(8, CAP).unwrap();
        assert_eq!(g.order(), 8);
        let orders = g.element_orders();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
        // a^2 = b^2 from the presentation: a = (0,1) -> 1, b = (1,0) -> 4
        assert_eq!(g.mul(1, 1), g.mul(4, 4));
        // ba = a^3 b
        assert_eq!(g.mul(4, 1), g.mul(g.mul(1, g.mul(1, 1)), 4));
    }

    #[test]
    fn cyclic_12_generator_count() {
        let g = cyclic(12, CAP).unwrap();
        let count = (0..12).filter(|&x| g.element_order(x) == 12).count();
        assert_eq!(count, 4); // phi(12)
    }

    #[test]
    fn modular_16_conjugation_relation() {
        let g = modular_maximal_cyclic(2, 4, CAP).unwrap();
        assert_eq!(g.order(), 16);
        let a = 1; // (s=0, i=1)
        let b = 8; // (s=1, i=0)
        assert_eq!(g.element_order(a), 8);
        let conj = g.mul(g.mul(g.inv(b), a), b);
        let a5 = 5;
        assert_eq!(conj, a5);
    }

    #[test]
    fn dihedral_orders_and_relations() {
        let g = dihedral(8, CAP).unwrap();
        assert_eq!(g.order(), 8);
        let a = 1;
        let b = 4;
        assert_eq!(g.element_order(a), 4);
        assert_eq!(g.element_order(b), 2);
        // bab = a^-1
        assert_eq!(g.mul(g.mul(b, a), b), g.inv(a));
    }

    #[test]
    fn semidihedral_16_relation() {
        let g = semidihedral(16, CAP).unwrap();
        let a = 1;
        let b = 8;
        assert_eq!(g.element_order(a), 8);
        assert_eq!(g.element_order(b), 2);
        // bab = a^3
        assert_eq!(g.mul(g.mul(b, a), b), 3);
    }

    #[test]
    fn klein_four_group() {
        let g = abelian(&[2, 2], CAP).unwrap();
        assert_eq!(g.order(), 4);
        for x in 1..4 {
            assert_eq!(g.element_order(x), 2);
        }
    }

    #[test]
    fn z8_x_z2_is_noncyclic_abelian() {
        let g = abelian(&[8, 2], CAP).unwrap();
        assert_eq!(g.order(), 16);
        assert!(g.is_abelian());
        assert!(g.element_orders().iter().all(|&o| o <= 8));
    }

    #[test]
    fn direct_product_order_multiplies() {
        let a = cyclic(3, CAP).unwrap();
        let b = cyclic(3, CAP).unwrap();
        let g = direct_product(&a, &b, CAP).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.label(), "Z3 x Z3");
        assert!(g.element_orders().iter().all(|&o| o == 1 || o == 3));
    }

    #[test]
    fn semidirect_s3() {
        let g = semidirect_cyclic(3, 2, 2).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn semidirect_21_has_trivial_center() {
        let g = semidirect_cyclic(7, 3, 2).unwrap();
        assert_eq!(g.order(), 21);
        let center: Vec<usize> = (0..21)
            .filter(|&x| (0..21).all(|y| g.mul(x, y) == g.mul(y, x)))
            .collect();
        assert_eq!(center, vec![0]);
    }

    #[test]
    fn semidirect_rejects_bad_residue() {
        // 2^3 = 8 = 3 mod 5, not 1
        assert!(matches!(
            semidirect_cyclic(5, 3, 2),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn family_orders_match_parameters() {
        assert_eq!(symmetric(4, CAP).unwrap().order(), 24);
        assert_eq!(alternating(4, CAP).unwrap().order(), 12);
        assert_eq!(alternating(2, CAP).unwrap().order(), 1);
        assert_eq!(elementary_abelian(3, 2, CAP).unwrap().order(), 9);
        assert_eq!(semidihedral(32, CAP).unwrap().order(), 32);
        assert_eq!(modular_maximal_cyclic(3, 3, CAP).unwrap().order(), 27);
    }

    #[test]
    fn bad_parameters_rejected() {
        assert!(dihedral(7, CAP).is_err());
        assert!(dihedral(2, CAP).is_err());
        assert!(generalized_quaternion(12, CAP).is_err());
        assert!(semidihedral(8, CAP).is_err());
        assert!(modular_maximal_cyclic(4, 3, CAP).is_err());
        assert!(modular_maximal_cyclic(2, 2, CAP).is_err());
        assert!(cyclic(0, CAP).is_err());
    }

    #[test]
    fn alternating_5_order_matches_even_permutation_count() {
        // independent count: enumерate all permutations of degree 5 and
        // count the even ones by inversion parity
        fn heap_permutations(k: usize, arr: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == 1 {
                out.push(arr.clone());
                return;
            }
            for i in 0..k {
                heap_permutations(k - 1, arr, out);
                if k % 2 == 0 {
                    arr.swap(i, k - 1);
                } else {
                    arr.swap(0, k - 1);
                }
            }
        }
        let mut arr: Vec<usize> = (0..5).collect();
        let mut all = Vec::new();
        heap_permutations(5, &mut arr, &mut all);
        assert_eq!(all.len(), 120);
        let even = all
            .iter()
            .filter(|p| {
                let mut inv = 0;
                for i in 0..5 {
                    for j in i + 1..5 {
                        if p[i] > p[j] {
                            inv += 1;
                        }
                    }
                }
                inv % 2 == 0
            })
            .count();
        assert_eq!(even, 60);

        let gens = vec![
            Permutation::from_cycles(5, "(0 1 2 3 4)").unwrap(),
            Permutation::from_cycles(5, "(0 1 2)").unwrap(),
        ];
        let g = GroupTable::from_permutation_generators(&gens, CAP).unwrap();
        assert_eq!(g.order(), even);
        assert_eq!(alternating(5, CAP).unwrap().order(), even);
    }
}
