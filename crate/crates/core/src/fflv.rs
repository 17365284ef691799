//! Dyck paths and FFLV multi-exponents in type `A_n`.
//!
//! Positive roots are `α_{p,q} = α_p + ⋯ + α_q` for `1 ≤ p ≤ q ≤ n`. A Dyck
//! path runs from a simple root `α_i` to a simple root `α_j` (`i ≤ j`) by
//! steps `α_{p,q} → α_{p+1,q}` or `α_{p,q} → α_{p,q+1}`. A multi-exponent `s`
//! lies in `S(λ)` when every path satisfies `Σ_{β∈path} s_β ≤ m_i + ⋯ + m_j`;
//! the monomials `f^s v_λ` for `s ∈ S(λ)` then form a basis of `V(λ)`.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, TypeLetter, Weight};

/// Enumeration stops with an error beyond this many multi-exponents.
pub const DEFAULT_FFLV_CAP: usize = 1_000_000;

/// `α_{p,q}` in simple-root coordinates (1-based, `p ≤ q`).
pub fn alpha(n: usize, p: usize, q: usize) -> Root {
    assert!(1 <= p && p <= q && q <= n, "α_{{{p},{q}}} is not a positive root of A_{n}");
    Root((1..=n).map(|k| i64::from(p <= k && k <= q)).collect())
}

/// `(p, q)` with `β = α_{p,q}`, if `β` is a positive type-A root.
pub fn root_interval(beta: &Root) -> Option<(usize, usize)> {
    let p = beta.0.iter().position(|&c| c != 0)? + 1;
    let q = beta.0.iter().rposition(|&c| c != 0)? + 1;
    beta.0[p - 1..q]
        .iter()
        .all(|&c| c == 1)
        .then_some((p, q))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DyckPath {
    pub steps: Vec<Root>,
}

impl DyckPath {
    /// Index `i` of the starting simple root.
    pub fn start(&self) -> usize {
        root_interval(&self.steps[0]).expect("path of positive roots").0
    }

    /// Index `j` of the final simple root.
    pub fn end(&self) -> usize {
        root_interval(self.steps.last().expect("nonempty path")).expect("path of positive roots").1
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `m_i + ⋯ + m_j`.
    pub fn bound(&self, lambda: &Weight) -> i64 {
        lambda.0[self.start() - 1..self.end()].iter().sum()
    }

    /// Checks the defining conditions in rank `n`.
    pub fn is_valid(&self, n: usize) -> bool {
        let Some(intervals) = self
            .steps
            .iter()
            .map(|b| (b.0.len() == n).then(|| root_interval(b)).flatten())
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        let (first, last) = (intervals[0], intervals[intervals.len() - 1]);
        if first.0 != first.1 || last.0 != last.1 || first.0 > last.0 {
            return false;
        }
        intervals
            .windows(2)
            .all(|w| w[1] == (w[0].0 + 1, w[0].1) || w[1] == (w[0].0, w[0].1 + 1))
    }
}

/// All Dyck paths of `A_n`, ordered by `(i, j)` and then by step choices
/// with the `p`-step first.
pub fn enumerate_dyck_paths(n: usize) -> Vec<DyckPath> {
    fn walk(n: usize, j: usize, cur: (usize, usize), trail: &mut Vec<(usize, usize)>, out: &mut Vec<DyckPath>) {
        if cur == (j, j) {
            out.push(DyckPath {
                steps: trail.iter().map(|&(p, q)| alpha(n, p, q)).collect(),
            });
            return;
        }
        let (p, q) = cur;
        for next in [(p + 1, q), (p, q + 1)] {
            if next.0 <= next.1 && next.1 <= j {
                trail.push(next);
                walk(n, j, next, trail, out);
                trail.pop();
            }
        }
    }
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let mut trail = vec![(i, i)];
            walk(n, j, (i, i), &mut trail, &mut out);
        }
    }
    out
}

/// A finitely supported map `Φ⁺ → ℕ`; zero exponents are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiExponent {
    exponents: BTreeMap<Root, u32>,
}

impl MultiExponent {
    pub fn zero() -> MultiExponent {
        MultiExponent::default()
    }

    pub fn unit(beta: Root) -> MultiExponent {
        let mut s = MultiExponent::zero();
        s.set(beta, 1);
        s
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Root, u32)>) -> MultiExponent {
        let mut s = MultiExponent::zero();
        for (b, k) in pairs {
            s.set(b, k);
        }
        s
    }

    pub fn get(&self, beta: &Root) -> u32 {
        self.exponents.get(beta).copied().unwrap_or(0)
    }

    pub fn set(&mut self, beta: Root, k: u32) {
        if k == 0 {
            self.exponents.remove(&beta);
        } else {
            self.exponents.insert(beta, k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&Root, u32)> {
        self.exponents.iter().map(|(b, &k)| (b, k))
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    /// `λ − Σ s_β β`, in fundamental-weight coordinates.
    pub fn weight(&self, rs: &RootSystem, lambda: &Weight) -> Weight {
        self.support().fold(lambda.clone(), |acc, (b, k)| {
            acc.sub(&rs.root_weight(b).scaled(i64::from(k)))
        })
    }
}

impl Serialize for MultiExponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.exponents.iter().map(|(b, k)| (b.to_string(), k)))
    }
}

fn check_weight(lambda: &Weight) -> Result<()> {
    if lambda.rank() == 0 {
        return Err(Error::Precondition("rank must be at least 1".into()));
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// Whether `s` satisfies every Dyck path inequality for `λ`.
pub fn is_admissible(s: &MultiExponent, lambda: &Weight) -> bool {
    let n = lambda.rank();
    if s.support().any(|(b, _)| b.0.len() != n || root_interval(b).is_none()) {
        return false;
    }
    enumerate_dyck_paths(n).iter().all(|path| {
        let total: i64 = path.steps.iter().map(|b| i64::from(s.get(b))).sum();
        total <= path.bound(lambda)
    })
}

/// `S(λ)` in lexicographic order over the positive roots of `A_n`.
pub fn enumerate_fflv_basis(lambda: &Weight) -> Result<Vec<MultiExponent>> {
    enumerate_fflv_basis_with(lambda, DEFAULT_FFLV_CAP)
}

pub fn enumerate_fflv_basis_with(lambda: &Weight, cap: usize) -> Result<Vec<MultiExponent>> {
    check_weight(lambda)?;
    let n = lambda.rank();
    let rs = RootSystem::new(TypeLetter::A, n)?;
    let positive: Vec<Root> = rs.positive_roots().iter().map(|&i| rs.root(i).clone()).collect();
    let paths = enumerate_dyck_paths(n);
    let bounds: Vec<i64> = paths.iter().map(|p| p.bound(lambda)).collect();
    // For each positive root, the paths through it.
    let through: Vec<Vec<usize>> = positive
        .iter()
        .map(|b| {
            paths
                .iter()
                .enumerate()
                .filter(|(_, p)| p.steps.contains(b))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();

    struct Search<'a> {
        positive: &'a [Root],
        through: &'a [Vec<usize>],
        bounds: &'a [i64],
        sums: Vec<i64>,
        current: Vec<u32>,
        out: Vec<MultiExponent>,
        cap: usize,
    }

    impl Search<'_> {
        fn run(&mut self, k: usize) -> Result<()> {
            if k == self.positive.len() {
                if self.out.len() == self.cap {
                    return Err(Error::ResultTooLarge { cap: self.cap });
                }
                self.out.push(MultiExponent::from_pairs(
                    self.positive.iter().cloned().zip(self.current.iter().copied()),
                ));
                return Ok(());
            }
            let slack = self.through[k]
                .iter()
                .map(|&p| self.bounds[p] - self.sums[p])
                .min()
                .unwrap_or(0);
            for e in 0..=slack.max(0) {
                for &p in &self.through[k] {
                    self.sums[p] += e;
                }
                self.current[k] = e as u32;
                let r = self.run(k + 1);
                for &p in &self.through[k] {
                    self.sums[p] -= e;
                }
                r?;
            }
            self.current[k] = 0;
            Ok(())
        }
    }

    let mut search = Search {
        positive: &positive,
        through: &through,
        bounds: &bounds,
        sums: vec![0; paths.len()],
        current: vec![0; positive.len()],
        out: Vec::new(),
        cap,
    };
    search.run(0)?;
    Ok(search.out)
}

/// Which root the membership lemma is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaClause {
    /// `α_{i,j}` with `i ≤ j ≤ n`.
    Right { j: usize },
    /// `α_{j′,i}` with `1 ≤ j′ ≤ i`.
    Left { j_prime: usize },
}

/// Whether the unit multi-exponent at `α_{i,j}` (or `α_{j′,i}`) is admissible
/// for `λ`; requires `m_i > 0`. Indices are 1-based.
pub fn lemma_nonzero_holds(lambda: &Weight, i: usize, clause: LemmaClause) -> Result<bool> {
    check_weight(lambda)?;
    let n = lambda.rank();
    if i == 0 || i > n {
        return Err(Error::Precondition(format!("index {i} outside 1..={n}")));
    }
    if lambda.0[i - 1] <= 0 {
        return Err(Error::Precondition("m_i must be positive".into()));
    }
    let beta = match clause {
        LemmaClause::Right { j } if i <= j && j <= n => alpha(n, i, j),
        LemmaClause::Left { j_prime } if 1 <= j_prime && j_prime <= i => alpha(n, j_prime, i),
        _ => return Err(Error::Precondition(format!("invalid root indices for i = {i}"))),
    };
    Ok(is_admissible(&MultiExponent::unit(beta), lambda))
}
