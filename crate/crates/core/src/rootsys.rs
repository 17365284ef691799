//! Simple root systems with their pairings, Weyl groups and Chevalley
//! structure constants.
//!
//! Roots are integer vectors over the simple roots; weights are integer
//! vectors over the fundamental weights. The Cartan matrix is stored with
//! `cartan[i][j] = ⟨α_i, α_j⟩ = 2(α_i, α_j)/(α_j, α_j)` and the symmetrizer
//! with `(α_i, α_j) = cartan[i][j] · symmetrizer[j]`, so that
//! `symmetrizer[j] = (α_j, α_j)/2`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{q, Q};

/// Largest rank accepted for the classical families.
pub const MAX_CLASSICAL_RANK: usize = 8;

/// Default cap on the number of Weyl group elements materialized.
pub const DEFAULT_WEYL_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    F,
    G,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLetter::A => "A",
            TypeLetter::B => "B",
            TypeLetter::C => "C",
            TypeLetter::D => "D",
            TypeLetter::F => "F",
            TypeLetter::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for TypeLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLetter::A),
            "B" => Ok(TypeLetter::B),
            "C" => Ok(TypeLetter::C),
            "D" => Ok(TypeLetter::D),
            "F" => Ok(TypeLetter::F),
            "G" => Ok(TypeLetter::G),
            other => Err(Error::UnsupportedRootSystem {
                type_letter: other.to_string(),
                rank: 0,
            }),
        }
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut c = vec![0; rank];
        c[i] = 1;
        Weight(c)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| k * c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated fundamental-weight coordinates, e.g. `1,0,2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.trim().is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("invalid weight coordinate {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// An element of a Chevalley basis: `E(k)` is the root vector of root index
/// `k` (so `f_α` is `E` of the index of `−α`), `H(i)` is the simple coroot
/// `h_{α_i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E(usize),
    H(usize),
}

/// A Weyl group element as a permutation of root indices, together with a
/// word `[i1, …, ik]` in simple reflections with `w = s_{i1} ⋯ s_{ik}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, root_index: usize) -> usize {
        self.perm[root_index]
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    type_letter: TypeLetter,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    positive: Vec<usize>,
    simple: Vec<usize>,
    negation: Vec<usize>,
    norms: Vec<i64>,
    sums: Vec<Option<usize>>,
    constants: Vec<i64>,
    extraspecial: Vec<Option<(usize, usize)>>,
}

fn cartan_data(letter: TypeLetter, rank: usize) -> Result<(Vec<Vec<i64>>, Vec<i64>)> {
    let unsupported = || Error::UnsupportedRootSystem {
        type_letter: letter.to_string(),
        rank,
    };
    let valid = match letter {
        TypeLetter::A => (1..=MAX_CLASSICAL_RANK).contains(&rank),
        TypeLetter::B => (2..=MAX_CLASSICAL_RANK).contains(&rank),
        TypeLetter::C => (3..=MAX_CLASSICAL_RANK).contains(&rank),
        TypeLetter::D => (4..=MAX_CLASSICAL_RANK).contains(&rank),
        TypeLetter::F => rank == 4,
        TypeLetter::G => rank == 2,
    };
    if !valid {
        return Err(unsupported());
    }
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    let mut d = vec![1i64; n];
    match letter {
        TypeLetter::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
        }
        TypeLetter::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
            d = vec![2; n];
            d[n - 1] = 1;
        }
        TypeLetter::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -1, -2);
            d[n - 1] = 2;
        }
        TypeLetter::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        TypeLetter::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
            d = vec![2, 2, 1, 1];
        }
        TypeLetter::G => {
            link(0, 1, -1, -3);
            d = vec![1, 3];
        }
    }
    Ok((a, d))
}

impl RootSystem {
    pub fn new(type_letter: TypeLetter, rank: usize) -> Result<RootSystem> {
        let (cartan, symmetrizer) = cartan_data(type_letter, rank)?;
        let positive_roots = positive_roots(&cartan);

        let mut roots: Vec<Root> = positive_roots
            .iter()
            .cloned()
            .chain(positive_roots.iter().map(Root::neg))
            .collect();
        roots.sort_by(|a, b| (a.height(), &a.0).cmp(&(b.height(), &b.0)));

        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.0.clone(), i)).collect();
        let positive: Vec<usize> = (0..roots.len()).filter(|&i| roots[i].is_positive()).collect();
        let simple: Vec<usize> = (0..rank).map(|i| index[&Root::simple(rank, i).0]).collect();
        let negation: Vec<usize> = roots.iter().map(|r| index[&r.neg().0]).collect();
        let nr = roots.len();
        let mut sums = vec![None; nr * nr];
        for i in 0..nr {
            for j in 0..nr {
                sums[i * nr + j] = index.get(&roots[i].add(&roots[j]).0).copied();
            }
        }

        let mut rs = RootSystem {
            type_letter,
            rank,
            cartan,
            symmetrizer,
            roots,
            index,
            positive,
            simple,
            negation,
            norms: Vec::new(),
            sums,
            constants: Vec::new(),
            extraspecial: vec![None; nr],
        };
        rs.norms = rs.roots.iter().map(|r| rs.inner(&r.0, &r.0)).collect();
        rs.compute_structure_constants()?;
        Ok(rs)
    }

    pub fn type_letter(&self) -> TypeLetter {
        self.type_letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.type_letter, self.rank)
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// All roots, ordered by height and then lexicographically.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Indices of positive roots, in root order.
    pub fn positive_roots(&self) -> &[usize] {
        &self.positive
    }

    /// Indices of the simple roots `α_1, …, α_n`.
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.roots[i].is_positive()
    }

    pub fn root_index(&self, r: &Root) -> Result<usize> {
        if r.0.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: r.0.len(),
            });
        }
        self.index
            .get(&r.0)
            .copied()
            .ok_or_else(|| Error::NotARoot(r.to_string()))
    }

    pub fn find_root(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn negative(&self, i: usize) -> usize {
        self.negation[i]
    }

    /// Index of `roots[i] + roots[j]` when that sum is a root.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i * self.roots.len() + j]
    }

    /// The symmetric form `(x, y)` on the root lattice, integer-valued.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += x[i] * y[j] * self.cartan[i][j] * self.symmetrizer[j];
            }
        }
        s
    }

    /// `(α, α)` for the root of index `i`.
    pub fn norm(&self, i: usize) -> i64 {
        self.norms[i]
    }

    /// Fundamental-weight coordinates of a root-lattice vector.
    pub fn root_weight(&self, r: &Root) -> Weight {
        Weight(
            (0..self.rank)
                .map(|j| (0..self.rank).map(|i| r.0[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    pub fn root_index_weight(&self, i: usize) -> Weight {
        self.root_weight(&self.roots[i])
    }

    /// `⟨μ, β⟩ = μ(h_β)` for a weight `μ` and a root `β`.
    pub fn pairing(&self, mu: &Weight, beta: &Root) -> Result<i64> {
        let b = self.root_index(beta)?;
        if mu.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: mu.rank(),
            });
        }
        Ok(self.pairing_index(mu, b))
    }

    /// `⟨α, β⟩` for two roots.
    pub fn root_pairing(&self, alpha: &Root, beta: &Root) -> Result<i64> {
        self.pairing(&self.root_weight(alpha), beta)
    }

    pub(crate) fn pairing_index(&self, mu: &Weight, b: usize) -> i64 {
        let coroot = self.coroot(b);
        mu.0.iter().zip(&coroot).map(|(m, c)| m * c).sum()
    }

    /// `h_β` in the basis of simple coroots `h_1, …, h_n`.
    pub fn coroot(&self, b: usize) -> Vec<i64> {
        let beta = &self.roots[b];
        let norm = self.norms[b];
        (0..self.rank)
            .map(|i| {
                let num = 2 * beta.0[i] * self.symmetrizer[i];
                debug_assert_eq!(num % norm, 0);
                num / norm
            })
            .collect()
    }

    /// Index of the highest root.
    pub fn highest_root(&self) -> usize {
        self.roots.len() - 1
    }

    /// The highest weight of the adjoint module.
    pub fn adjoint_weight(&self) -> Weight {
        self.root_index_weight(self.highest_root())
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// `dim V(λ)` by the Weyl dimension formula.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigInt> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let shifted = lambda.add(&self.rho());
        let rho = self.rho();
        let mut d = Q::one();
        for &b in &self.positive {
            d *= Q::new(
                BigInt::from(self.pairing_index(&shifted, b)),
                BigInt::from(self.pairing_index(&rho, b)),
            );
        }
        debug_assert!(d.is_integer());
        Ok(d.to_integer())
    }

    /// Largest `p ≥ 0` with `β − pα ∈ Φ`.
    pub fn string_down(&self, alpha: usize, beta: usize) -> usize {
        let a = &self.roots[alpha];
        let mut cur = self.roots[beta].clone();
        let mut p = 0;
        loop {
            cur = cur.sub(a);
            if self.index.contains_key(&cur.0) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// Largest `q ≥ 0` with `β + qα ∈ Φ`.
    pub fn string_up(&self, alpha: usize, beta: usize) -> usize {
        let a = &self.roots[alpha];
        let mut cur = self.roots[beta].clone();
        let mut q = 0;
        loop {
            cur = cur.add(a);
            if self.index.contains_key(&cur.0) {
                q += 1;
            } else {
                return q;
            }
        }
    }

    /// The extraspecial pair `(α_i, ξ − α_i)` of a positive non-simple root,
    /// with `i` minimal.
    pub fn extraspecial_pair(&self, xi: usize) -> Option<(usize, usize)> {
        self.extraspecial[xi]
    }

    /// `N_{α,β}` with `[e_α, e_β] = N_{α,β} e_{α+β}`.
    pub fn structure_constant(&self, alpha: &Root, beta: &Root) -> Result<i64> {
        let a = self.root_index(alpha)?;
        let b = self.root_index(beta)?;
        if self.sum(a, b).is_none() {
            return Err(Error::NotARootSum(alpha.to_string(), beta.to_string()));
        }
        Ok(self.n(a, b))
    }

    /// Structure constant by index; zero when the sum is not a root.
    pub fn n(&self, a: usize, b: usize) -> i64 {
        self.constants[a * self.roots.len() + b]
    }

    fn compute_structure_constants(&mut self) -> Result<()> {
        let nr = self.roots.len();
        let mut table = vec![0i64; nr * nr];
        let mut order = self.positive.clone();
        order.sort_by_key(|&i| self.roots[i].height());

        for &xi in &order {
            if self.roots[xi].height() == 1 {
                continue;
            }
            let (a, b) = self
                .simple
                .iter()
                .find_map(|&s| {
                    let rest = self.find_root(&self.roots[xi].sub(&self.roots[s]).0)?;
                    self.is_positive(rest).then_some((s, rest))
                })
                .expect("non-simple positive root has a simple summand");
            self.extraspecial[xi] = Some((a, b));
            let p = self.string_down(a, b) as i64;
            table[a * nr + b] = p + 1;
            table[b * nr + a] = -(p + 1);

            let na = self.negation[a];
            let nb = self.negation[b];
            let n_neg_ab = q(-(p + 1));
            for &g in &self.positive {
                let Some(d) = self.find_root(&self.roots[xi].sub(&self.roots[g]).0) else {
                    continue;
                };
                if !self.is_positive(d) || g == a || g == b || table[g * nr + d] != 0 {
                    continue;
                }
                let mut bracket = Q::zero();
                if let Some(s) = self.sum(d, na) {
                    let t = self.n_from(&table, d, na) * self.n_from(&table, g, nb);
                    bracket += Q::new(BigInt::from(t), BigInt::from(self.norms[s]));
                }
                if let Some(s) = self.sum(na, g) {
                    let t = self.n_from(&table, na, g) * self.n_from(&table, d, nb);
                    bracket += Q::new(BigInt::from(t), BigInt::from(self.norms[s]));
                }
                let value = -(q(self.norms[xi]) / &n_neg_ab) * bracket;
                let expected = self.string_down(g, d) as i64 + 1;
                let ok = value.is_integer() && value.abs() == q(expected);
                if !ok {
                    return Err(Error::Inconsistent(format!(
                        "structure constant N({}, {}) = {value} has wrong magnitude",
                        self.roots[g], self.roots[d]
                    )));
                }
                let v = crate::scalar::to_i64(&value).expect("checked integral");
                table[g * nr + d] = v;
                table[d * nr + g] = -v;
            }
        }

        let mut constants = vec![0i64; nr * nr];
        for a in 0..nr {
            for b in 0..nr {
                constants[a * nr + b] = self.n_from(&table, a, b);
            }
        }
        self.constants = constants;
        Ok(())
    }

    /// Extends a table of positive-pair constants to arbitrary pairs using
    /// `N_{−α,−β} = −N_{α,β}` and the rotation rule for `α + β + γ = 0`.
    fn n_from(&self, table: &[i64], a: usize, b: usize) -> i64 {
        let nr = self.roots.len();
        let Some(s) = self.sum(a, b) else {
            return 0;
        };
        let pa = self.is_positive(a);
        let pb = self.is_positive(b);
        if pa && pb {
            let v = table[a * nr + b];
            debug_assert_ne!(v, 0, "positive pair constant requested before it was set");
            return v;
        }
        if !pa && !pb {
            return -self.n_from(table, self.negation[a], self.negation[b]);
        }
        let c = self.negation[s];
        let pc = self.is_positive(c);
        if pc == pb {
            // N_{a,b}/(c,c) = N_{b,c}/(a,a)
            self.norms[c] * self.n_from(table, b, c) / self.norms[a]
        } else {
            // N_{a,b}/(c,c) = N_{c,a}/(b,b)
            self.norms[c] * self.n_from(table, c, a) / self.norms[b]
        }
    }

    /// `[x, y]` in the Chevalley basis, as integer combinations.
    pub fn bracket(&self, x: Generator, y: Generator) -> Vec<(Generator, i64)> {
        match (x, y) {
            (Generator::H(_), Generator::H(_)) => Vec::new(),
            (Generator::H(i), Generator::E(b)) => {
                // ⟨β, α_i⟩ is the i-th fundamental coordinate of β
                let c = self.root_index_weight(b).0[i];
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(Generator::E(b), c)]
                }
            }
            (Generator::E(_), Generator::H(_)) => self
                .bracket(y, x)
                .into_iter()
                .map(|(g, c)| (g, -c))
                .collect(),
            (Generator::E(a), Generator::E(b)) => {
                if self.negation[a] == b {
                    self.coroot(a)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| *c != 0)
                        .map(|(i, c)| (Generator::H(i), c))
                        .collect()
                } else if let Some(s) = self.sum(a, b) {
                    vec![(Generator::E(s), self.n(a, b))]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// Root permutation of the simple reflection `s_i`.
    pub fn simple_reflection(&self, i: usize) -> Vec<usize> {
        self.roots
            .iter()
            .map(|r| {
                let c = self.root_weight(r).0[i];
                let mut img = r.clone();
                img.0[i] -= c;
                self.index[&img.0]
            })
            .collect()
    }

    /// Every element of the Weyl group, by breadth-first closure over simple
    /// reflections. The identity comes first.
    pub fn weyl_elements(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let gens: Vec<Vec<usize>> = (0..self.rank).map(|i| self.simple_reflection(i)).collect();
        let identity = WeylElement {
            perm: (0..self.roots.len()).collect(),
            word: Vec::new(),
        };
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(identity.perm.clone());
        let mut out = vec![identity];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (i, s) in gens.iter().enumerate() {
                let perm: Vec<usize> = out[k].perm.iter().map(|&r| s[r]).collect();
                if seen.insert(perm.clone()) {
                    if out.len() >= cap {
                        return Err(Error::WeylGroupTooLarge { cap });
                    }
                    let mut word = vec![i];
                    word.extend_from_slice(&out[k].word);
                    out.push(WeylElement { perm, word });
                    queue.push_back(out.len() - 1);
                }
            }
        }
        Ok(out)
    }

    /// `s_i(μ) = μ − ⟨μ, α_i⟩ α_i`.
    pub fn reflect_weight(&self, i: usize, mu: &Weight) -> Weight {
        let c = mu.0[i];
        Weight(
            mu.0.iter()
                .enumerate()
                .map(|(j, m)| m - c * self.cartan[i][j])
                .collect(),
        )
    }

    pub fn act_on_weight(&self, w: &WeylElement, mu: &Weight) -> Weight {
        w.word
            .iter()
            .rev()
            .fold(mu.clone(), |acc, &i| self.reflect_weight(i, &acc))
    }

    /// Canonical JSON form: type, rank, Cartan matrix, roots and the
    /// structure-constant table as `[α-index, β-index, N]` triples.
    pub fn to_json(&self) -> serde_json::Value {
        let nr = self.roots.len();
        let mut table = Vec::new();
        for a in 0..nr {
            for b in 0..nr {
                if self.sum(a, b).is_some() {
                    table.push(serde_json::json!([a, b, self.n(a, b)]));
                }
            }
        }
        serde_json::json!({
            "type": self.type_letter.to_string(),
            "rank": self.rank,
            "cartan_matrix": self.cartan,
            "symmetrizer": self.symmetrizer,
            "roots": self.roots.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
            "structure_constants": table,
        })
    }
}

/// Positive roots from the Cartan matrix, level by level: `β + α_i` is a root
/// iff `p − ⟨β, α_i⟩ > 0`, where `p` counts `β − kα_i` already found.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut out = Vec::new();
    while !level.is_empty() {
        level.sort();
        level.dedup();
        for r in &level {
            all.insert(r.0.clone());
        }
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                if *beta == Root::simple(n, i) {
                    continue;
                }
                let mut p = 0;
                let mut cur = beta.0.clone();
                loop {
                    cur[i] -= 1;
                    if all.contains(&cur) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta.0[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up.0[i] += 1;
                    next.push(up);
                }
            }
        }
        out.extend(level);
        level = next;
    }
    out
}
