//! Even-index Bernoulli numbers, exact and as cached floats.
//!
//! Exact values come from the tangent numbers `T_k` (integer-only O(K²)
//! recurrence) through `B_{2k} = (−1)^{k−1} 2k T_k / (4^k (4^k − 1))`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rug::{Float, Integer, Rational};

use crate::mpreal::Real;

fn tangent_numbers(count: usize) -> Vec<Integer> {
    // t[j] holds T_{j+1}.
    let mut t = vec![Integer::new(); count];
    if count == 0 {
        return t;
    }
    t[0] = Integer::from(1);
    for k in 1..count {
        t[k] = Integer::from(&t[k - 1] * k as u64);
    }
    for k in 1..count {
        for j in k..count {
            let prev = Integer::from(&t[j - 1] * (j - k) as u64);
            let cur = std::mem::take(&mut t[j]) * (j - k + 2) as u64;
            t[j] = prev + cur;
        }
    }
    t
}

fn exact_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Vec::new()))
}

fn ensure_exact(count: usize) {
    if exact_table().read().expect("bernoulli table poisoned").len() >= count {
        return;
    }
    let count = count.max(64).next_power_of_two();
    let tangents = tangent_numbers(count);
    let values: Vec<Rational> = tangents
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let k = (i + 1) as u32;
            let four_k = Integer::from(1) << (2 * k);
            let den = Integer::from(&four_k - 1u32) * four_k;
            let num = Integer::from(t * (2 * k));
            let b = Rational::from((num, den));
            if k.is_multiple_of(2) {
                -b
            } else {
                b
            }
        })
        .collect();
    let mut table = exact_table().write().expect("bernoulli table poisoned");
    if table.len() < values.len() {
        *table = values;
    }
}

/// Exact `B_{2k}` for `k ≥ 1`.
pub fn bernoulli_even(k: usize) -> Rational {
    assert!(k >= 1, "B_{{2k}} requires k >= 1");
    ensure_exact(k);
    exact_table().read().expect("bernoulli table poisoned")[k - 1].clone()
}

type FloatTable = Arc<Vec<Real>>;

fn float_tables() -> &'static RwLock<HashMap<u32, FloatTable>> {
    static TABLES: OnceLock<RwLock<HashMap<u32, FloatTable>>> = OnceLock::new();
    TABLES.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `[B_2, B_4, …, B_{2·count}]` rounded to `bits`.
pub(crate) fn bernoulli_floats(bits: u32, count: usize) -> FloatTable {
    if let Some(t) = float_tables()
        .read()
        .expect("bernoulli table poisoned")
        .get(&bits)
    {
        if t.len() >= count {
            return Arc::clone(t);
        }
    }
    let count = count.max(64).next_power_of_two();
    ensure_exact(count);
    let table: Vec<Real> = exact_table().read().expect("bernoulli table poisoned")[..count]
        .iter()
        .map(|b| Float::with_val(bits, b))
        .collect();
    let table = Arc::new(table);
    let mut tables = float_tables().write().expect("bernoulli table poisoned");
    let entry = tables.entry(bits).or_insert_with(|| Arc::clone(&table));
    if entry.len() < table.len() {
        *entry = Arc::clone(&table);
    }
    Arc::clone(entry)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Classical recurrence Σ_{j=0}^{n} C(n+1, j) B_j = 0 as an independent oracle.
    fn bernoulli_by_recurrence(n_max: usize) -> Vec<Rational> {
        let mut b = vec![Rational::from(1)];
        for n in 1..=n_max {
            let mut acc = Rational::new();
            for (j, bj) in b.iter().enumerate() {
                let c = Integer::from(Integer::binomial_u(n as u32 + 1, j as u32));
                acc += Rational::from(bj * c);
            }
            b.push(-acc / Rational::from(n as u32 + 1));
        }
        b
    }

    #[test]
    fn first_values() {
        assert_eq!(bernoulli_even(1), Rational::from((1, 6)));
        assert_eq!(bernoulli_even(2), Rational::from((-1, 30)));
        assert_eq!(bernoulli_even(3), Rational::from((1, 42)));
        assert_eq!(bernoulli_even(6), Rational::from((691, -2730)));
    }

    #[test]
    fn matches_recurrence_oracle() {
        let oracle = bernoulli_by_recurrence(80);
        for k in 1..=40 {
            assert_eq!(bernoulli_even(k), oracle[2 * k], "k={k}");
        }
    }

    #[test]
    fn float_table_grows() {
        let small = bernoulli_floats(128, 10);
        let big = bernoulli_floats(128, 300);
        assert!(big.len() >= 300);
        assert_eq!(small[4], big[4]);
    }
}
