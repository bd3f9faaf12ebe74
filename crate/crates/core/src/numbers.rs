//! Exact counting sequences, generic over the integer type.
//!
//! Everything here only needs a commutative semiring with exact division by
//! small integers, so the same code runs on `u64`, `u128` and `BigUint`.

use std::ops::{Add, Div, Mul};

use num_traits::{FromPrimitive, One, Zero};

/// Integer types the counting functions work over.
pub trait Counting:
    Clone + PartialEq + Zero + One + FromPrimitive + Add<Output = Self> + Mul<Output = Self> + Div<Output = Self>
{
}

impl<T> Counting for T where
    T: Clone + PartialEq + Zero + One + FromPrimitive + Add<Output = T> + Mul<Output = T> + Div<Output = T>
{
}

fn lift<T: Counting>(n: usize) -> T {
    T::from_usize(n).expect("small integer fits in counting type")
}

/// `binom(n, k)` by the multiplicative formula; every partial product is an
/// exact binomial coefficient, so the divisions are exact.
pub fn binomial<T: Counting>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 1..=k {
        acc = acc * lift(n - k + i) / lift(i);
    }
    acc
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan_number<T: Counting>(n: usize) -> T {
    binomial::<T>(2 * n, n) / lift(n + 1)
}

/// First `len` Motzkin numbers from `M_0 = 1`,
/// `M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-1-k}`.
pub fn motzkin_numbers<T: Counting>(len: usize) -> Vec<T> {
    let mut m: Vec<T> = Vec::with_capacity(len);
    if len == 0 {
        return m;
    }
    m.push(T::one());
    for n in 0..len - 1 {
        let mut next = m[n].clone();
        for k in 0..n {
            next = next + m[k].clone() * m[n - 1 - k].clone();
        }
        m.push(next);
    }
    m
}

pub fn motzkin_number<T: Counting>(n: usize) -> T {
    motzkin_numbers::<T>(n + 1).pop().unwrap()
}

/// Checks `C_{n+1} = sum_k binom(n, k) M_k` exactly.
pub fn verify_binomial_identity<T: Counting>(n: usize) -> bool {
    let motzkin = motzkin_numbers::<T>(n + 1);
    let rhs = motzkin
        .into_iter()
        .enumerate()
        .fold(T::zero(), |acc, (k, m)| acc + binomial::<T>(n, k) * m);
    catalan_number::<T>(n + 1) == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn catalan_values() {
        assert_eq!(catalan_number::<u64>(0), 1);
        assert_eq!(catalan_number::<u64>(4), 14);
        assert_eq!(catalan_number::<u64>(10), 16796);
        assert_eq!(catalan_number::<BigUint>(13), BigUint::from(742_900u32));
    }

    #[test]
    fn motzkin_values() {
        assert_eq!(motzkin_numbers::<u64>(8), vec![1, 1, 2, 4, 9, 21, 51, 127]);
        assert_eq!(motzkin_number::<u64>(4), 9);
        assert_eq!(motzkin_number::<u128>(7), 127);
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![1u64];
        for n in 0..30 {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(binomial::<u64>(n, k), v);
            }
            assert_eq!(binomial::<u64>(n, n + 1), 0);
            let mut next = vec![1u64; n + 2];
            for k in 1..=n {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
        }
    }

    #[test]
    fn binomial_identity_small_and_big() {
        for n in 0..=12 {
            assert!(verify_binomial_identity::<u64>(n));
        }
        // 14 = 1 + 3 + 6 + 4
        let terms: Vec<u64> = (0..=3).map(|k| binomial::<u64>(3, k) * motzkin_number::<u64>(k)).collect();
        assert_eq!(terms, vec![1, 3, 6, 4]);
        assert!(verify_binomial_identity::<BigUint>(60));
    }

    #[test]
    fn generic_types_agree() {
        for n in 0..=20 {
            assert_eq!(BigUint::from(catalan_number::<u64>(n)), catalan_number::<BigUint>(n));
            assert_eq!(BigUint::from(motzkin_number::<u64>(n)), motzkin_number::<BigUint>(n));
        }
    }
}
