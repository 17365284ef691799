//! Independent oracles shared by the integration tests. They work on raw
//! coordinate vectors and never call the library's index or sum tables.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use regwide::{RootSystem, TypeLetter, Weight};

pub fn system(t: TypeLetter, n: usize) -> RootSystem {
    RootSystem::new(t, n).unwrap()
}

pub fn coords(rs: &RootSystem) -> Vec<Vec<i64>> {
    rs.roots().iter().map(|r| r.0.clone()).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Closedness by pairwise coordinate sums.
pub fn raw_is_closed(roots: &[Vec<i64>], mask: u128) -> bool {
    let all: HashSet<&Vec<i64>> = roots.iter().collect();
    let members: Vec<usize> = (0..roots.len()).filter(|&i| mask >> i & 1 == 1).collect();
    for &i in &members {
        for &j in &members {
            let s = add(&roots[i], &roots[j]);
            if all.contains(&s) {
                let k = roots.iter().position(|r| *r == s).unwrap();
                if mask >> k & 1 == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Every closed subset, by filtering all `2^|Φ|` masks.
pub fn raw_closed_masks(roots: &[Vec<i64>]) -> BTreeSet<u128> {
    (0u128..1 << roots.len())
        .filter(|&m| raw_is_closed(roots, m))
        .collect()
}

/// The intersection of every closed superset of `mask`.
pub fn brute_closure(closed: &BTreeSet<u128>, mask: u128) -> u128 {
    closed
        .iter()
        .filter(|&&c| c & mask == mask)
        .fold(u128::MAX, |acc, &c| acc & c)
}

/// Dyck paths of `A_n` as `(p, q)` sequences, from every binary string of
/// `p`/`q` steps of the right length.
pub fn dyck_oracle(n: usize) -> BTreeSet<Vec<(usize, usize)>> {
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in i..=n {
            let len = 2 * (j - i);
            for bits in 0u32..1 << len {
                let mut cur = (i, i);
                let mut path = vec![cur];
                let mut ok = true;
                for k in 0..len {
                    cur = if bits >> k & 1 == 0 { (cur.0 + 1, cur.1) } else { (cur.0, cur.1 + 1) };
                    if cur.0 > cur.1 || cur.1 > n {
                        ok = false;
                        break;
                    }
                    path.push(cur);
                }
                if ok && cur == (j, j) {
                    out.insert(path);
                }
            }
        }
    }
    out
}

/// `dim V(λ)` for `sl_{n+1}`: `Π_{i<j} (m_i + ⋯ + m_{j−1} + j − i) / (j − i)`.
pub fn type_a_dimension(lambda: &Weight) -> BigInt {
    let m = &lambda.0;
    let n = m.len() + 1;
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..n {
        for j in i + 1..n {
            let s: i64 = m[i..j].iter().sum();
            num *= BigInt::from(s + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let q = BigRational::new(num, den);
    assert!(q.is_integer());
    q.to_integer()
}

/// Dominant weights of rank `n` with coordinate sum at most `total`.
pub fn dominant_weights(n: usize, total: i64) -> Vec<Weight> {
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == n {
            out.push(Weight(cur.clone()));
            return;
        }
        for m in 0..=left {
            cur.push(m);
            rec(n, left - m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, total, &mut Vec::new(), &mut out);
    out
}

/// Sums of multisets of size `1..=max_len` drawn from `elems`.
pub fn multiset_sums(elems: &[Vec<i64>], max_len: usize) -> BTreeSet<Vec<i64>> {
    let mut all = BTreeSet::new();
    let mut layer: BTreeSet<Vec<i64>> = elems.iter().cloned().collect();
    all.extend(layer.iter().cloned());
    for _ in 1..max_len {
        let next: BTreeSet<Vec<i64>> = layer
            .iter()
            .flat_map(|s| elems.iter().map(move |e| add(s, e)))
            .collect();
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}
