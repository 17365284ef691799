//! Explicit finite-dimensional modules with exact generator matrices.
//!
//! Every module carries one matrix per root vector `e_α` (`α ∈ Φ`, so
//! `f_α = e_{−α}`) and one diagonal matrix per simple coroot `h_i`, on a basis
//! of weight vectors. Root vectors beyond the simple ones are derived from the
//! Chevalley structure constants of [`RootSystem`], so modules built from
//! different constructions share one basis convention for `g`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::closedsets::{ClosedSubset, RootSet};
use crate::error::{Error, Result};
use crate::linalg::{axpy, unit_vec, SparseMatrix, SparseVec, Subspace};
use crate::rootsys::{RootSystem, TypeLetter, Weight};
use crate::scalar::{format_q, q, Q};

pub use crate::rootsys::Generator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CartanMode {
    /// `t = span{h_α : α ∈ T^r}`.
    Minimal,
    /// `t = h`.
    Full,
    Custom,
}

impl std::str::FromStr for CartanMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minimal" => Ok(CartanMode::Minimal),
            "full" => Ok(CartanMode::Full),
            other => Err(Error::Parse(format!("unknown Cartan mode {other:?}"))),
        }
    }
}

impl std::fmt::Display for CartanMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CartanMode::Minimal => "minimal",
            CartanMode::Full => "full",
            CartanMode::Custom => "custom",
        })
    }
}

/// `s_{T,t} = t ⊕ ⊕_{α∈T} g_α`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularSubalgebra {
    closed: ClosedSubset,
    mode: CartanMode,
    /// RREF basis of `t` in simple-coroot coordinates.
    cartan_part: Vec<Vec<Q>>,
}

fn coroot_span(rs: &RootSystem, roots: RootSet) -> Subspace {
    let mut span = Subspace::new();
    for a in roots.iter() {
        let v: SparseVec = rs
            .coroot(a)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| (i, q(c)))
            .collect();
        span.insert(v);
    }
    span
}

fn dense(rank: usize, v: &SparseVec) -> Vec<Q> {
    (0..rank).map(|i| v.get(&i).cloned().unwrap_or_else(Q::zero)).collect()
}

impl RegularSubalgebra {
    pub fn minimal(rs: &RootSystem, closed: ClosedSubset) -> RegularSubalgebra {
        let span = coroot_span(rs, closed.symmetric_part());
        RegularSubalgebra {
            cartan_part: span.basis().map(|v| dense(rs.rank(), v)).collect(),
            closed,
            mode: CartanMode::Minimal,
        }
    }

    pub fn full(rs: &RootSystem, closed: ClosedSubset) -> RegularSubalgebra {
        RegularSubalgebra {
            cartan_part: (0..rs.rank()).map(|i| dense(rs.rank(), &unit_vec(i))).collect(),
            closed,
            mode: CartanMode::Full,
        }
    }

    pub fn with_mode(rs: &RootSystem, closed: ClosedSubset, mode: CartanMode) -> Result<RegularSubalgebra> {
        match mode {
            CartanMode::Minimal => Ok(Self::minimal(rs, closed)),
            CartanMode::Full => Ok(Self::full(rs, closed)),
            CartanMode::Custom => Err(Error::InvalidCartanPart(
                "custom Cartan part needs explicit vectors".into(),
            )),
        }
    }

    /// An explicit Cartan part; it must contain `h_α` for every `α ∈ T^r`.
    pub fn with_cartan(rs: &RootSystem, closed: ClosedSubset, vectors: &[Vec<Q>]) -> Result<RegularSubalgebra> {
        let mut span = Subspace::new();
        for v in vectors {
            if v.len() != rs.rank() {
                return Err(Error::InvalidCartanPart(format!(
                    "vector of length {} in rank {}",
                    v.len(),
                    rs.rank()
                )));
            }
            span.insert(v.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect());
        }
        for a in closed.symmetric_part().iter() {
            let h = coroot_span(rs, RootSet::EMPTY.with(a));
            let h = h.basis().next().expect("coroot is nonzero");
            if !span.contains(h) {
                return Err(Error::InvalidCartanPart(format!(
                    "missing h_α for α = {}",
                    rs.root(a)
                )));
            }
        }
        Ok(RegularSubalgebra {
            cartan_part: span.basis().map(|v| dense(rs.rank(), v)).collect(),
            closed,
            mode: CartanMode::Custom,
        })
    }

    /// The zero subalgebra.
    pub fn zero(rs: &RootSystem) -> RegularSubalgebra {
        Self::minimal(rs, ClosedSubset::empty())
    }

    /// `g` itself.
    pub fn whole(rs: &RootSystem) -> RegularSubalgebra {
        Self::full(rs, ClosedSubset::all(rs))
    }

    pub fn closed(&self) -> &ClosedSubset {
        &self.closed
    }

    pub fn mode(&self) -> CartanMode {
        self.mode
    }

    pub fn cartan_part(&self) -> &[Vec<Q>] {
        &self.cartan_part
    }

    pub fn dimension(&self) -> usize {
        self.closed.len() + self.cartan_part.len()
    }

    /// `h(μ)` for `h` given in simple-coroot coordinates.
    pub fn cartan_value(h: &[Q], mu: &Weight) -> Q {
        h.iter()
            .zip(&mu.0)
            .fold(Q::zero(), |acc, (c, m)| acc + c * q(*m))
    }

    /// Whether every element of `t` vanishes on `μ`.
    pub fn cartan_kills(&self, mu: &Weight) -> bool {
        self.cartan_part
            .iter()
            .all(|h| Self::cartan_value(h, mu).is_zero())
    }
}

/// Resource limits for module construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuleCaps {
    pub max_tensor_degree: usize,
    pub max_dim: usize,
}

impl Default for ModuleCaps {
    fn default() -> Self {
        ModuleCaps {
            max_tensor_degree: 8,
            max_dim: 200,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExplicitModule {
    rank: usize,
    basis_weights: Vec<Weight>,
    root_ops: Vec<SparseMatrix>,
    cartan_ops: Vec<SparseMatrix>,
    highest_weight: Option<Weight>,
    highest_vector_index: Option<usize>,
}

impl ExplicitModule {
    pub fn dimension(&self) -> usize {
        self.basis_weights.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis_weights(&self) -> &[Weight] {
        &self.basis_weights
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.basis_weights[i]
    }

    pub fn action(&self, g: Generator) -> &SparseMatrix {
        match g {
            Generator::E(k) => &self.root_ops[k],
            Generator::H(i) => &self.cartan_ops[i],
        }
    }

    /// Matrix of `e_α` for the root of index `k`.
    pub fn root_op(&self, k: usize) -> &SparseMatrix {
        &self.root_ops[k]
    }

    pub fn cartan_op(&self, i: usize) -> &SparseMatrix {
        &self.cartan_ops[i]
    }

    pub fn highest_weight(&self) -> Option<&Weight> {
        self.highest_weight.as_ref()
    }

    pub fn highest_vector_index(&self) -> Option<usize> {
        self.highest_vector_index
    }

    pub fn highest_vector(&self) -> Option<SparseVec> {
        self.highest_vector_index.map(unit_vec)
    }

    /// Basis indices grouped by weight.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.basis_weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(i);
        }
        out
    }

    /// Checks `[ρ(x), ρ(y)] = ρ([x, y])` for every pair of Chevalley basis
    /// elements, that `h_i` acts diagonally by `⟨μ, α_i⟩`, and that `e_α`
    /// shifts weights by `α`.
    pub fn check_fidelity(&self, rs: &RootSystem) -> Result<()> {
        let nr = rs.num_roots();
        for i in 0..self.rank {
            let expected = SparseMatrix::diagonal(self.basis_weights.iter().map(|w| q(w.0[i])));
            if self.cartan_ops[i] != expected {
                return Err(Error::Inconsistent(format!("h_{} is not diagonal by weight", i + 1)));
            }
        }
        for k in 0..nr {
            let shift = rs.root_index_weight(k);
            for (r, c, _) in self.root_ops[k].triplets() {
                if self.basis_weights[r] != self.basis_weights[c].add(&shift) {
                    return Err(Error::Inconsistent(format!(
                        "e_{} does not shift weights by the root",
                        rs.root(k)
                    )));
                }
            }
        }
        let gens: Vec<Generator> = (0..nr)
            .map(Generator::E)
            .chain((0..self.rank).map(Generator::H))
            .collect();
        for (ix, &x) in gens.iter().enumerate() {
            for &y in &gens[ix + 1..] {
                let lhs = self.action(x).commutator(self.action(y));
                let mut rhs = SparseMatrix::zeros(self.dimension(), self.dimension());
                for (z, c) in rs.bracket(x, y) {
                    rhs.add_scaled(&q(c), self.action(z));
                }
                if lhs != rhs {
                    return Err(Error::Inconsistent(format!(
                        "commutation fails for {x:?}, {y:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// JSON form: dimension, basis weights and each generator as sparse
    /// `[row, col, "p/q"]` triplets. Labels are `e[..]`/`f[..]` for positive
    /// roots and `h1..hn`.
    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        let mut gens = serde_json::Map::new();
        let triplets = |m: &SparseMatrix| {
            serde_json::Value::Array(
                m.triplets()
                    .into_iter()
                    .map(|(r, c, x)| serde_json::json!([r, c, format_q(&x)]))
                    .collect(),
            )
        };
        for &p in rs.positive_roots() {
            gens.insert(format!("e{}", rs.root(p)), triplets(&self.root_ops[p]));
            gens.insert(
                format!("f{}", rs.root(p)),
                triplets(&self.root_ops[rs.negative(p)]),
            );
        }
        for i in 0..self.rank {
            gens.insert(format!("h{}", i + 1), triplets(&self.cartan_ops[i]));
        }
        serde_json::json!({
            "dimension": self.dimension(),
            "basis_weights": self.basis_weights,
            "highest_weight": self.highest_weight,
            "highest_vector_index": self.highest_vector_index,
            "generators": gens,
        })
    }

    /// Builds a module from matrices of the simple root vectors `e_i`, `f_i`;
    /// other root vectors come from extraspecial pairs,
    /// `e_ξ = [e_α, e_β] / N_{α,β}`.
    fn from_simple_generators(
        rs: &RootSystem,
        basis_weights: Vec<Weight>,
        e_simple: Vec<SparseMatrix>,
        f_simple: Vec<SparseMatrix>,
        highest: Option<(Weight, usize)>,
    ) -> Result<ExplicitModule> {
        let nr = rs.num_roots();
        let dim = basis_weights.len();
        let mut ops: Vec<Option<SparseMatrix>> = vec![None; nr];
        for (i, (e, f)) in e_simple.into_iter().zip(f_simple).enumerate() {
            let a = rs.simple_roots()[i];
            ops[a] = Some(e);
            ops[rs.negative(a)] = Some(f);
        }
        let mut order: Vec<usize> = rs.positive_roots().to_vec();
        order.sort_by_key(|&i| rs.root(i).height());
        for xi in order {
            let Some((a, b)) = rs.extraspecial_pair(xi) else {
                continue;
            };
            let n = q(rs.n(a, b));
            let pos = ops[a].as_ref().unwrap().commutator(ops[b].as_ref().unwrap());
            ops[xi] = Some(pos.scaled(&n.recip()));
            let (na, nb) = (rs.negative(a), rs.negative(b));
            let n_neg = q(rs.n(na, nb));
            let neg = ops[na].as_ref().unwrap().commutator(ops[nb].as_ref().unwrap());
            ops[rs.negative(xi)] = Some(neg.scaled(&n_neg.recip()));
        }
        let cartan_ops = (0..rs.rank())
            .map(|i| SparseMatrix::diagonal(basis_weights.iter().map(|w| q(w.0[i]))))
            .collect();
        let module = ExplicitModule {
            rank: rs.rank(),
            basis_weights,
            root_ops: ops
                .into_iter()
                .map(|m| m.unwrap_or_else(|| SparseMatrix::zeros(dim, dim)))
                .collect(),
            cartan_ops,
            highest_weight: highest.as_ref().map(|h| h.0.clone()),
            highest_vector_index: highest.map(|h| h.1),
        };
        module.check_fidelity(rs)?;
        Ok(module)
    }
}

/// The adjoint module: root vectors in root order, then `h_1, …, h_n`.
pub fn adjoint_module(rs: &RootSystem) -> Result<ExplicitModule> {
    let nr = rs.num_roots();
    let n = rs.rank();
    let dim = nr + n;
    let slot = |g: Generator| match g {
        Generator::E(k) => k,
        Generator::H(i) => nr + i,
    };
    let basis: Vec<Generator> = (0..nr)
        .map(Generator::E)
        .chain((0..n).map(Generator::H))
        .collect();
    let ad = |x: Generator| {
        let cols = basis
            .iter()
            .map(|&y| {
                rs.bracket(x, y)
                    .into_iter()
                    .map(|(z, c)| (slot(z), q(c)))
                    .collect::<SparseVec>()
            })
            .collect();
        SparseMatrix::from_columns(dim, cols)
    };
    let basis_weights: Vec<Weight> = (0..nr)
        .map(|k| rs.root_index_weight(k))
        .chain((0..n).map(|_| Weight::zero(n)))
        .collect();
    let module = ExplicitModule {
        rank: n,
        basis_weights,
        root_ops: (0..nr).map(|k| ad(Generator::E(k))).collect(),
        cartan_ops: (0..n).map(|i| ad(Generator::H(i))).collect(),
        highest_weight: Some(rs.adjoint_weight()),
        highest_vector_index: Some(rs.highest_root()),
    };
    module.check_fidelity(rs)?;
    Ok(module)
}

/// The one-dimensional trivial module.
pub fn trivial_module(rs: &RootSystem) -> ExplicitModule {
    let n = rs.rank();
    ExplicitModule {
        rank: n,
        basis_weights: vec![Weight::zero(n)],
        root_ops: vec![SparseMatrix::zeros(1, 1); rs.num_roots()],
        cartan_ops: vec![SparseMatrix::zeros(1, 1); n],
        highest_weight: Some(Weight::zero(n)),
        highest_vector_index: Some(0),
    }
}

/// `V(λ)` for type A, realized as `U(n⁻)·v` inside `(ℚ^{n+1})^{⊗d}` where
/// `v` is a tensor product of wedges `e_1 ∧ ⋯ ∧ e_k`, one per unit of `m_k`,
/// and `d = Σ k·m_k`.
pub fn type_a_module(rs: &RootSystem, lambda: &Weight) -> Result<ExplicitModule> {
    type_a_module_with(rs, lambda, ModuleCaps::default())
}

pub fn type_a_module_with(rs: &RootSystem, lambda: &Weight, caps: ModuleCaps) -> Result<ExplicitModule> {
    if rs.type_letter() != TypeLetter::A {
        return Err(Error::NotTypeA(rs.name()));
    }
    let n = rs.rank();
    if lambda.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: lambda.rank(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let degree: usize = lambda
        .0
        .iter()
        .enumerate()
        .map(|(i, &m)| (i + 1) * m as usize)
        .sum();
    if degree > caps.max_tensor_degree {
        return Err(Error::TensorDegreeTooLarge {
            degree,
            cap: caps.max_tensor_degree,
        });
    }
    let expected_dim = rs.weyl_dimension(lambda)?;
    if expected_dim > caps.max_dim.into() {
        return Err(Error::DimensionTooLarge {
            dim: usize::try_from(&expected_dim).unwrap_or(usize::MAX),
            cap: caps.max_dim,
        });
    }

    let tensor = TensorPower { base: n + 1, degree };
    let mut v = SparseVec::new();
    v.insert(0, Q::one());
    let mut block_degree = 0;
    for (k, &m) in lambda.0.iter().enumerate() {
        for _ in 0..m {
            v = tensor.concat(&v, block_degree, &wedge(n + 1, k + 1));
            block_degree += k + 1;
        }
    }

    // Weight spaces, level by level below λ.
    let simple_shift: Vec<Weight> = (0..n).map(|i| Weight(rs.cartan_matrix()[i].clone())).collect();
    let mut spaces: BTreeMap<Weight, Subspace> = BTreeMap::new();
    let mut levels: Vec<Vec<Weight>> = vec![vec![lambda.clone()]];
    spaces.insert(lambda.clone(), Subspace::spanned_by([&v]));
    loop {
        let mut next: BTreeSet<Weight> = BTreeSet::new();
        for mu in levels.last().unwrap() {
            let vectors: Vec<SparseVec> = spaces[mu].basis().cloned().collect();
            for (i, shift) in simple_shift.iter().enumerate() {
                let target = mu.sub(shift);
                for b in &vectors {
                    let w = tensor.lower(b, i);
                    if w.is_empty() {
                        continue;
                    }
                    spaces.entry(target.clone()).or_default().insert(w);
                    next.insert(target.clone());
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next.into_iter().rev().collect());
    }

    let mut basis: Vec<SparseVec> = Vec::new();
    let mut basis_weights: Vec<Weight> = Vec::new();
    let mut offset: BTreeMap<Weight, usize> = BTreeMap::new();
    for level in &levels {
        for mu in level {
            offset.insert(mu.clone(), basis.len());
            for b in spaces[mu].basis() {
                basis.push(b.clone());
                basis_weights.push(mu.clone());
            }
        }
    }
    let dim = basis.len();
    if expected_dim != dim.into() {
        return Err(Error::Inconsistent(format!(
            "cyclic span has dimension {dim}, expected {expected_dim}"
        )));
    }

    let express = |w: &SparseVec, mu: &Weight| -> Result<SparseVec> {
        if w.is_empty() {
            return Ok(SparseVec::new());
        }
        let space = spaces
            .get(mu)
            .ok_or_else(|| Error::Inconsistent(format!("image lands outside V(λ) at weight {mu}")))?;
        let coords = space
            .coordinates(w)
            .ok_or_else(|| Error::Inconsistent(format!("image not in weight space {mu}")))?;
        let base = offset[mu];
        Ok(coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (base + k, c))
            .collect())
    };

    let mut e_simple = Vec::with_capacity(n);
    let mut f_simple = Vec::with_capacity(n);
    for (i, shift) in simple_shift.iter().enumerate() {
        let mut e_cols = Vec::with_capacity(dim);
        let mut f_cols = Vec::with_capacity(dim);
        for (b, mu) in basis.iter().zip(&basis_weights) {
            e_cols.push(express(&tensor.raise(b, i), &mu.add(shift))?);
            f_cols.push(express(&tensor.lower(b, i), &mu.sub(shift))?);
        }
        e_simple.push(SparseMatrix::from_columns(dim, e_cols));
        f_simple.push(SparseMatrix::from_columns(dim, f_cols));
    }

    ExplicitModule::from_simple_generators(rs, basis_weights, e_simple, f_simple, Some((lambda.clone(), 0)))
}

/// `V(λ)` where a construction is available: any `λ` in type A, `λ = 0`, or
/// the highest root (adjoint module) in every type.
pub fn module_for(rs: &RootSystem, lambda: &Weight, caps: ModuleCaps) -> Result<ExplicitModule> {
    if rs.type_letter() == TypeLetter::A {
        return type_a_module_with(rs, lambda, caps);
    }
    if lambda.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    if lambda.is_zero() {
        return Ok(trivial_module(rs));
    }
    if *lambda == rs.adjoint_weight() {
        let dim = rs.num_roots() + rs.rank();
        if dim > caps.max_dim {
            return Err(Error::DimensionTooLarge { dim, cap: caps.max_dim });
        }
        return adjoint_module(rs);
    }
    Err(Error::ModuleUnavailable(format!("V({lambda}) of {}", rs.name())))
}

/// Indices into `(ℚ^base)^{⊗degree}`, most significant factor first.
struct TensorPower {
    base: usize,
    degree: usize,
}

impl TensorPower {
    fn digits(&self, mut idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.degree];
        for slot in d.iter_mut().rev() {
            *slot = idx % self.base;
            idx /= self.base;
        }
        d
    }

    fn index(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * self.base + d)
    }

    /// `a ⊗ b` where `a` has `a_degree` factors.
    fn concat(&self, a: &SparseVec, _a_degree: usize, b: &(usize, SparseVec)) -> SparseVec {
        let (b_degree, b) = b;
        let shift = self.base.pow(*b_degree as u32);
        let mut out = SparseVec::new();
        for (&i, x) in a {
            for (&j, y) in b {
                out.insert(i * shift + j, x * y);
            }
        }
        out
    }

    /// Applies `E_{from→to}` in each tensor factor and sums.
    fn shift_digit(&self, v: &SparseVec, from: usize, to: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (&idx, x) in v {
            let mut d = self.digits(idx);
            for k in 0..self.degree {
                if d[k] == from {
                    d[k] = to;
                    axpy(&mut out, x, &unit_vec(self.index(&d)));
                    d[k] = from;
                }
            }
        }
        out
    }

    /// `f_i`: basis vector `i` to `i+1` (0-based).
    fn lower(&self, v: &SparseVec, i: usize) -> SparseVec {
        self.shift_digit(v, i, i + 1)
    }

    /// `e_i`: basis vector `i+1` to `i`.
    fn raise(&self, v: &SparseVec, i: usize) -> SparseVec {
        self.shift_digit(v, i + 1, i)
    }
}

/// `e_0 ∧ ⋯ ∧ e_{k−1}` in `(ℚ^base)^{⊗k}` as a signed permutation sum.
fn wedge(base: usize, k: usize) -> (usize, SparseVec) {
    let mut out = SparseVec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    permutations(&mut perm, 0, &mut |p| {
        let idx = p.iter().fold(0, |acc, &d| acc * base + d);
        out.insert(idx, q(permutation_sign(p)));
    });
    (k, out)
}

fn permutations(p: &mut Vec<usize>, start: usize, f: &mut impl FnMut(&[usize])) {
    if start == p.len() {
        f(p);
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permutations(p, start + 1, f);
        p.swap(start, i);
    }
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The annihilated subspace `V^s`, per weight space.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnihilatedSubspace {
    pub components: BTreeMap<Weight, Vec<SparseVec>>,
}

impl AnnihilatedSubspace {
    pub fn dim(&self) -> usize {
        self.components.values().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn vectors(&self) -> impl Iterator<Item = &SparseVec> {
        self.components.values().flatten()
    }
}

/// `V^s = {v : s·v = 0}`. The subalgebra is normalized by `h`, so the joint
/// kernel splits along weight spaces.
pub fn annihilated_subspace(v: &ExplicitModule, s: &RegularSubalgebra) -> AnnihilatedSubspace {
    let mut components = BTreeMap::new();
    for (mu, indices) in v.weight_spaces() {
        if !s.cartan_kills(&mu) {
            continue;
        }
        let local: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut equations: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for beta in s.closed().set().iter() {
            let op = v.root_op(beta);
            for &c in &indices {
                for (&r, x) in op.column(c) {
                    let eq = equations.entry(beta * v.dimension() + r).or_default();
                    eq.insert(local[&c], x.clone());
                }
            }
        }
        let kernel = crate::linalg::nullspace(equations.values(), indices.len());
        if kernel.is_empty() {
            continue;
        }
        let vectors = kernel
            .into_iter()
            .map(|k| k.into_iter().map(|(j, x)| (indices[j], x)).collect())
            .collect();
        components.insert(mu, vectors);
    }
    AnnihilatedSubspace { components }
}

/// The smallest subspace containing `start` and stable under `e_β` for every
/// `β ∈ roots`.
pub fn generated_submodule(v: &ExplicitModule, roots: RootSet, start: &SparseVec) -> Result<Subspace> {
    if start.values().all(Zero::is_zero) {
        return Err(Error::ZeroStartVector);
    }
    let mut span = Subspace::new();
    span.insert(start.clone());
    let mut work = vec![start.clone()];
    while let Some(x) = work.pop() {
        for beta in roots.iter() {
            let y = v.root_op(beta).apply(&x);
            if !y.is_empty() && span.insert(y.clone()) {
                work.push(y);
            }
        }
    }
    Ok(span)
}
