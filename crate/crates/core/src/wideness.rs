//! The classification engine and the commutant oracle.
//!
//! A regular subalgebra `s` is λ-wide exactly when `[T ∪ −T]` generates all of
//! `V(λ)` from a highest weight vector, and wide exactly when `[T ∪ −T] = Φ`.
//! The oracle checks these answers against the definition: `V(λ)|_s` is
//! indecomposable iff the commutant `(End V)^s` is a local algebra, which is
//! decided through its trace-form radical and, when it splits, certified by an
//! explicit idempotent.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::closedsets::{is_full, symmetrized_closure, ClosedSubset};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank, SparseMatrix, SparseVec};
use crate::poly::{minimal_polynomial, spectral_idempotent};
use crate::repmod::{
    adjoint_module, generated_submodule, module_for, CartanMode, ExplicitModule, ModuleCaps,
    RegularSubalgebra,
};
use crate::rootsys::{RootSystem, TypeLetter, Weight};
use crate::scalar::{format_q, q};

/// Commutants are only computed for modules up to this dimension by default.
pub const DEFAULT_COMMUTANT_MAX_DIM: usize = 200;

/// Rational root search gives up beyond this constant term.
const ROOT_SEARCH_BOUND: u64 = 1_000_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Classification {
    Wide,
    Narrow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LambdaVerdict {
    LambdaWide,
    LambdaNarrow,
}

impl LambdaVerdict {
    pub fn from_bool(wide: bool) -> LambdaVerdict {
        if wide {
            LambdaVerdict::LambdaWide
        } else {
            LambdaVerdict::LambdaNarrow
        }
    }

    pub fn is_wide(self) -> bool {
        self == LambdaVerdict::LambdaWide
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Wide => "Wide",
            Classification::Narrow => "Narrow",
        })
    }
}

impl std::fmt::Display for LambdaVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LambdaVerdict::LambdaWide => "LambdaWide",
            LambdaVerdict::LambdaNarrow => "LambdaNarrow",
        })
    }
}

/// `V(λ)|_s` is λ-wide iff `[T ∪ −T]·v_λ` is all of `V(λ)`.
pub fn is_lambda_wide(rs: &RootSystem, t: &ClosedSubset, lambda: &Weight) -> Result<bool> {
    is_lambda_wide_with(rs, t, lambda, ModuleCaps::default())
}

pub fn is_lambda_wide_with(rs: &RootSystem, t: &ClosedSubset, lambda: &Weight, caps: ModuleCaps) -> Result<bool> {
    let v = module_for(rs, lambda, caps)?;
    lambda_wide_in(rs, &v, t)
}

/// The closure criterion on an already constructed highest weight module.
pub fn lambda_wide_in(rs: &RootSystem, v: &ExplicitModule, t: &ClosedSubset) -> Result<bool> {
    let start = v
        .highest_vector()
        .ok_or_else(|| Error::Precondition("module has no highest weight vector".into()))?;
    let s = symmetrized_closure(rs, t);
    Ok(generated_submodule(v, s.set(), &start)?.dim() == v.dimension())
}

pub fn is_wide(rs: &RootSystem, t: &ClosedSubset) -> bool {
    is_full(rs, t)
}

/// A basis of `(End V)^s`, graded by the `h`-weight of each endomorphism.
#[derive(Debug, Clone, PartialEq)]
pub struct Commutant {
    pub components: BTreeMap<Weight, Vec<SparseMatrix>>,
}

impl Commutant {
    pub fn dim(&self) -> usize {
        self.components.values().map(Vec::len).sum()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.components.keys()
    }

    pub fn component(&self, mu: &Weight) -> &[SparseMatrix] {
        self.components.get(mu).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseMatrix> {
        self.components.values().flatten()
    }
}

/// `(End V)^s`. Since `s` is normalized by `h`, the commutant is spanned by
/// weight-homogeneous endomorphisms; each weight is solved separately.
pub fn commutant(v: &ExplicitModule, s: &RegularSubalgebra) -> Result<Commutant> {
    commutant_with(v, s, DEFAULT_COMMUTANT_MAX_DIM)
}

pub fn commutant_with(v: &ExplicitModule, s: &RegularSubalgebra, max_dim: usize) -> Result<Commutant> {
    let dim = v.dimension();
    if dim > max_dim {
        return Err(Error::DimensionTooLarge { dim, cap: max_dim });
    }
    let spaces = v.weight_spaces();
    let mut end_weights: BTreeSet<Weight> = BTreeSet::new();
    for a in spaces.keys() {
        for b in spaces.keys() {
            end_weights.insert(a.sub(b));
        }
    }
    // Row access to each e_β: rows[β][r] = [(c, x)] with e_β[r, c] = x.
    let ops: Vec<(usize, BTreeMap<usize, Vec<(usize, crate::Q)>>)> = s
        .closed()
        .set()
        .iter()
        .map(|beta| {
            let mut rows: BTreeMap<usize, Vec<(usize, crate::Q)>> = BTreeMap::new();
            for (r, c, x) in v.root_op(beta).triplets() {
                rows.entry(r).or_default().push((c, x));
            }
            (beta, rows)
        })
        .collect();

    let mut components = BTreeMap::new();
    for mu in end_weights {
        if !s.cartan_kills(&mu) {
            continue;
        }
        // Unknowns X[r, c] with wt(r) − wt(c) = μ.
        let mut unknowns: Vec<(usize, usize)> = Vec::new();
        for (nu, cols) in &spaces {
            if let Some(rows) = spaces.get(&nu.add(&mu)) {
                for &c in cols {
                    for &r in rows {
                        unknowns.push((r, c));
                    }
                }
            }
        }
        // Entry (r', c) of e_β X − X e_β, as a form in the unknowns.
        let mut equations: BTreeMap<(usize, usize, usize), SparseVec> = BTreeMap::new();
        for (slot, (beta, rows)) in ops.iter().enumerate() {
            for (k, &(r, c)) in unknowns.iter().enumerate() {
                for (&r2, x) in v.root_op(*beta).column(r) {
                    add_term(&mut equations, (slot, r2, c), k, x);
                }
                if let Some(row) = rows.get(&c) {
                    for (c2, x) in row {
                        add_term(&mut equations, (slot, r, *c2), k, &-x.clone());
                    }
                }
            }
        }
        let kernel = nullspace(equations.values(), unknowns.len());
        if kernel.is_empty() {
            continue;
        }
        let basis = kernel
            .into_iter()
            .map(|x| {
                SparseMatrix::from_triplets(
                    dim,
                    dim,
                    x.into_iter().map(|(k, val)| (unknowns[k].0, unknowns[k].1, val)),
                )
            })
            .collect();
        components.insert(mu, basis);
    }
    Ok(Commutant { components })
}

fn add_term(eqs: &mut BTreeMap<(usize, usize, usize), SparseVec>, key: (usize, usize, usize), k: usize, x: &crate::Q) {
    let eq = eqs.entry(key).or_default();
    let e = eq.entry(k).or_insert_with(crate::Q::zero);
    *e += x;
    if e.is_zero() {
        eq.remove(&k);
    }
}

/// Outcome of the idempotent search.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleOutcome {
    /// `A/rad A` is one-dimensional: the commutant is local.
    Indecomposable,
    /// A nontrivial idempotent of the commutant.
    Decomposable { witness: SparseMatrix },
    /// `A/rad A` has dimension above one but no rational idempotent was found.
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommutantSummary {
    pub commutant_dimension: usize,
    pub radical_dimension: usize,
    pub semisimple_quotient_dimension: usize,
    pub indecomposable: bool,
    pub outcome: OracleOutcome,
}

impl CommutantSummary {
    pub fn witness(&self) -> Option<&SparseMatrix> {
        match &self.outcome {
            OracleOutcome::Decomposable { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn is_determinate(&self) -> bool {
        self.outcome != OracleOutcome::Indeterminate
    }

    pub fn to_json(&self) -> serde_json::Value {
        let outcome = match &self.outcome {
            OracleOutcome::Indecomposable => "indecomposable",
            OracleOutcome::Decomposable { .. } => "decomposable",
            OracleOutcome::Indeterminate => "indeterminate over the rationals",
        };
        serde_json::json!({
            "commutant_dimension": self.commutant_dimension,
            "radical_dimension": self.radical_dimension,
            "semisimple_quotient_dimension": self.semisimple_quotient_dimension,
            "indecomposable": self.indecomposable,
            "outcome": outcome,
            "witness": self.witness().map(matrix_json),
        })
    }
}

fn matrix_json(m: &SparseMatrix) -> serde_json::Value {
    serde_json::Value::Array(
        m.triplets()
            .into_iter()
            .map(|(r, c, x)| serde_json::json!([r, c, format_q(&x)]))
            .collect(),
    )
}

/// Dimension of `A / rad A` where `rad A` is the kernel of the trace form
/// `(a, b) ↦ tr(ab)`. Only opposite weights pair nontrivially.
fn semisimple_quotient_dimension(a: &Commutant) -> usize {
    let mut total = 0;
    for (mu, basis) in &a.components {
        let neg = mu.neg();
        let Some(dual) = a.components.get(&neg) else {
            continue;
        };
        let gram: Vec<SparseVec> = basis
            .iter()
            .map(|x| {
                dual.iter()
                    .enumerate()
                    .map(|(j, y)| (j, x.trace_product(y)))
                    .filter(|(_, t)| !t.is_zero())
                    .collect()
            })
            .collect();
        total += rank(&gram);
    }
    total
}

fn is_idempotent_witness(e: &SparseMatrix, v: &ExplicitModule, s: &RegularSubalgebra) -> bool {
    let n = e.nrows();
    if e.is_zero() || *e == SparseMatrix::identity(n) || e.mul(e) != *e {
        return false;
    }
    s.closed()
        .set()
        .iter()
        .all(|beta| e.commutator(v.root_op(beta)).is_zero())
        && s.cartan_part().iter().all(|h| {
            let mut hm = SparseMatrix::zeros(n, n);
            for (i, c) in h.iter().enumerate() {
                hm.add_scaled(c, v.cartan_op(i));
            }
            e.commutator(&hm).is_zero()
        })
}

/// Looks for a nontrivial idempotent as a spectral projection of a commutant
/// element: weight-zero basis elements first, then fixed combinations.
fn find_idempotent(a: &Commutant, v: &ExplicitModule, s: &RegularSubalgebra) -> Option<SparseMatrix> {
    let n = v.dimension();
    let zero_weight = Weight::zero(v.rank());
    let a0 = a.component(&zero_weight);
    let mut candidates: Vec<SparseMatrix> = a0.to_vec();
    let combine = |basis: &mut dyn Iterator<Item = &SparseMatrix>| {
        let mut m = SparseMatrix::zeros(n, n);
        for (k, b) in basis.enumerate() {
            m.add_scaled(&q(2 * k as i64 + 3), b);
        }
        m
    };
    candidates.push(combine(&mut a0.iter()));
    candidates.push(combine(&mut a.basis()));
    let bound = BigInt::from(ROOT_SEARCH_BOUND);
    for x in candidates {
        let m = minimal_polynomial(&x);
        if m.degree() <= Some(1) {
            continue;
        }
        let Some(roots) = m.rational_roots(&bound) else {
            continue;
        };
        for r in roots {
            if let Some(e) = spectral_idempotent(&x, &m, &r) {
                if is_idempotent_witness(&e, v, s) {
                    return Some(e);
                }
            }
        }
    }
    None
}

/// Decides whether `V|_s` is indecomposable from the commutant.
pub fn is_indecomposable_restriction(v: &ExplicitModule, s: &RegularSubalgebra) -> Result<CommutantSummary> {
    let a = commutant(v, s)?;
    Ok(summarize(&a, v, s))
}

pub fn summarize(a: &Commutant, v: &ExplicitModule, s: &RegularSubalgebra) -> CommutantSummary {
    let commutant_dimension = a.dim();
    let quotient = semisimple_quotient_dimension(a);
    let outcome = if quotient == 1 {
        OracleOutcome::Indecomposable
    } else {
        match find_idempotent(a, v, s) {
            Some(witness) => OracleOutcome::Decomposable { witness },
            None => OracleOutcome::Indeterminate,
        }
    };
    CommutantSummary {
        commutant_dimension,
        radical_dimension: commutant_dimension - quotient,
        semisimple_quotient_dimension: quotient,
        indecomposable: quotient == 1,
        outcome,
    }
}

/// The oracle's indecomposability flag on the adjoint module, minimal Cartan
/// part.
pub fn wide_via_adjoint(rs: &RootSystem, t: &ClosedSubset) -> Result<bool> {
    let adj = adjoint_module(rs)?;
    let s = RegularSubalgebra::minimal(rs, t.clone());
    Ok(is_indecomposable_restriction(&adj, &s)?.indecomposable)
}

/// `λ_i`, `λ_i + λ_j` for `i < j`, and `2λ_1`.
pub fn default_lambda_test_set(rank: usize) -> Vec<Weight> {
    let mut out: Vec<Weight> = (0..rank).map(|i| Weight::fundamental(rank, i)).collect();
    for i in 0..rank {
        for j in i + 1..rank {
            out.push(Weight::fundamental(rank, i).add(&Weight::fundamental(rank, j)));
        }
    }
    let double = Weight::fundamental(rank, 0).scaled(2);
    if !out.contains(&double) {
        out.push(double);
    }
    out
}

/// Oracle results for one `λ`, at both Cartan parts.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub minimal: CommutantSummary,
    pub full: CommutantSummary,
}

impl OracleReport {
    /// Both Cartan parts give determinate answers that agree with `expected`.
    pub fn agrees_with(&self, expected: bool) -> bool {
        self.minimal.is_determinate()
            && self.full.is_determinate()
            && self.minimal.indecomposable == expected
            && self.full.indecomposable == expected
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LambdaResult {
    pub lambda: Weight,
    pub verdict: LambdaVerdict,
    pub oracle: Option<OracleReport>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub subalgebra: ClosedSubset,
    pub cartan_mode: CartanMode,
    pub classification: Classification,
    /// One entry per tested `λ`, in input order.
    pub per_lambda: Vec<LambdaResult>,
    /// `None` when the oracle was not run.
    pub oracle_agreement: Option<bool>,
}

impl Verdict {
    pub fn per_lambda_map(&self) -> BTreeMap<Weight, LambdaVerdict> {
        self.per_lambda
            .iter()
            .map(|r| (r.lambda.clone(), r.verdict))
            .collect()
    }

    /// Verdicts for nontrivial `λ` only.
    pub fn nontrivial_verdicts(&self) -> impl Iterator<Item = LambdaVerdict> + '_ {
        self.per_lambda
            .iter()
            .filter(|r| !r.lambda.is_zero())
            .map(|r| r.verdict)
    }

    /// Wide means every `λ` is λ-wide; narrow means every nontrivial `λ` is
    /// λ-narrow.
    pub fn is_consistent(&self) -> bool {
        match self.classification {
            Classification::Wide => self.per_lambda.iter().all(|r| r.verdict.is_wide()),
            Classification::Narrow => self.nontrivial_verdicts().all(|v| !v.is_wide()),
        }
    }

    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        let per_lambda: Vec<serde_json::Value> = self
            .per_lambda
            .iter()
            .map(|r| {
                serde_json::json!({
                    "lambda": r.lambda.to_string(),
                    "verdict": r.verdict.to_string(),
                    "oracle": r.oracle.as_ref().map(|o| serde_json::json!({
                        "minimal": o.minimal.to_json(),
                        "full": o.full.to_json(),
                    })),
                })
            })
            .collect();
        serde_json::json!({
            "subalgebra": {
                "roots": self.subalgebra.to_json(rs),
                "cartan": self.cartan_mode.to_string(),
            },
            "classification": self.classification.to_string(),
            "per_lambda": per_lambda,
            "oracle_agreement": self.oracle_agreement,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub caps: ModuleCaps,
    /// Run the commutant oracle for every `λ`.
    pub verify: bool,
    pub cartan_mode: CartanMode,
    pub commutant_max_dim: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            caps: ModuleCaps::default(),
            verify: true,
            cartan_mode: CartanMode::Minimal,
            commutant_max_dim: DEFAULT_COMMUTANT_MAX_DIM,
        }
    }
}

fn oracle_for(
    rs: &RootSystem,
    v: &ExplicitModule,
    t: &ClosedSubset,
    max_dim: usize,
) -> Result<OracleReport> {
    let minimal = RegularSubalgebra::minimal(rs, t.clone());
    let full = RegularSubalgebra::full(rs, t.clone());
    let a_min = commutant_with(v, &minimal, max_dim)?;
    let a_full = commutant_with(v, &full, max_dim)?;
    Ok(OracleReport {
        minimal: summarize(&a_min, v, &minimal),
        full: summarize(&a_full, v, &full),
    })
}

fn assemble(
    rs: &RootSystem,
    t: &ClosedSubset,
    modules: Vec<(Weight, ExplicitModule)>,
    options: &ClassifyOptions,
) -> Result<Verdict> {
    let mut per_lambda = Vec::with_capacity(modules.len());
    let mut agreement = true;
    for (lambda, v) in modules {
        let wide = lambda_wide_in(rs, &v, t)?;
        let oracle = if options.verify {
            let report = oracle_for(rs, &v, t, options.commutant_max_dim)?;
            agreement &= report.agrees_with(wide);
            Some(report)
        } else {
            None
        };
        per_lambda.push(LambdaResult {
            lambda,
            verdict: LambdaVerdict::from_bool(wide),
            oracle,
        });
    }
    Ok(Verdict {
        subalgebra: t.clone(),
        cartan_mode: options.cartan_mode,
        classification: if is_wide(rs, t) {
            Classification::Wide
        } else {
            Classification::Narrow
        },
        per_lambda,
        oracle_agreement: options.verify.then_some(agreement),
    })
}

/// Classifies `s_T` in type A over the given test weights, with the oracle.
pub fn classify(rs: &RootSystem, t: &ClosedSubset, lambdas: &[Weight]) -> Result<Verdict> {
    classify_with(rs, t, lambdas, &ClassifyOptions::default())
}

pub fn classify_with(rs: &RootSystem, t: &ClosedSubset, lambdas: &[Weight], options: &ClassifyOptions) -> Result<Verdict> {
    if rs.type_letter() != TypeLetter::A {
        return Err(Error::NotTypeA(rs.name()));
    }
    let modules = lambdas
        .iter()
        .map(|l| Ok((l.clone(), module_for(rs, l, options.caps)?)))
        .collect::<Result<Vec<_>>>()?;
    assemble(rs, t, modules, options)
}

/// Classification through the adjoint module only, for any supported type.
pub fn classify_adjoint(rs: &RootSystem, t: &ClosedSubset, options: &ClassifyOptions) -> Result<Verdict> {
    let dim = rs.num_roots() + rs.rank();
    if dim > options.caps.max_dim {
        return Err(Error::DimensionTooLarge {
            dim,
            cap: options.caps.max_dim,
        });
    }
    let adj = adjoint_module(rs)?;
    assemble(rs, t, vec![(rs.adjoint_weight(), adj)], options)
}

/// The common weight of a nonzero weight-homogeneous endomorphism.
pub fn endomorphism_weight(v: &ExplicitModule, x: &SparseMatrix) -> Option<Weight> {
    let mut found: Option<Weight> = None;
    for (r, c, _) in x.triplets() {
        let mu = v.weight(r).sub(v.weight(c));
        match &found {
            None => found = Some(mu),
            Some(w) if *w == mu => {}
            Some(_) => return None,
        }
    }
    found
}

/// Matrix units `E_{rc}`, grouped by their weight `wt(r) − wt(c)`; a
/// weight-graded basis of `End V`.
pub fn end_weight_basis(v: &ExplicitModule) -> BTreeMap<Weight, Vec<SparseMatrix>> {
    let n = v.dimension();
    let mut out: BTreeMap<Weight, Vec<SparseMatrix>> = BTreeMap::new();
    for r in 0..n {
        for c in 0..n {
            let mu = v.weight(r).sub(v.weight(c));
            out.entry(mu)
                .or_default()
                .push(SparseMatrix::from_triplets(n, n, [(r, c, crate::Q::one())]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::{trivial_module, type_a_module};
    use crate::rootsys::Root;

    fn a2() -> RootSystem {
        RootSystem::new(TypeLetter::A, 2).unwrap()
    }

    fn subset(rs: &RootSystem, roots: &[&[i64]]) -> ClosedSubset {
        let roots: Vec<Root> = roots.iter().map(|r| Root(r.to_vec())).collect();
        ClosedSubset::from_roots(rs, &roots).unwrap()
    }

    #[test]
    fn lambda_wide_examples() {
        let rs = a2();
        let borel = ClosedSubset::positive(&rs);
        for l in default_lambda_test_set(2) {
            assert!(is_lambda_wide(&rs, &borel, &l).unwrap());
        }
        let t = subset(&rs, &[&[1, 0]]);
        assert!(!is_lambda_wide(&rs, &t, &Weight(vec![1, 0])).unwrap());
        assert!(is_lambda_wide(&rs, &ClosedSubset::empty(), &Weight(vec![0, 0])).unwrap());
    }

    #[test]
    fn wide_examples() {
        let rs = a2();
        assert!(is_wide(&rs, &subset(&rs, &[&[1, 0], &[1, 1]])));
        assert!(!is_wide(&rs, &ClosedSubset::empty()));
        assert!(!is_wide(&rs, &subset(&rs, &[&[1, 0], &[-1, 0]])));
    }

    #[test]
    fn commutant_examples() {
        let rs = a2();
        let v = type_a_module(&rs, &Weight(vec![1, 0])).unwrap();
        assert_eq!(commutant(&v, &RegularSubalgebra::whole(&rs)).unwrap().dim(), 1);
        assert_eq!(commutant(&v, &RegularSubalgebra::zero(&rs)).unwrap().dim(), 9);
        let t = subset(&rs, &[&[1, 0]]);
        let a = commutant(&v, &RegularSubalgebra::minimal(&rs, t)).unwrap();
        assert!(a.dim() > 1);
        let scalars = crate::linalg::Subspace::spanned_by(a.component(&Weight::zero(2)).iter().map(|m| m.flatten()).collect::<Vec<_>>().iter());
        assert!(scalars.contains(&SparseMatrix::identity(3).flatten()));
    }

    #[test]
    fn oracle_examples() {
        let rs = a2();
        let v = type_a_module(&rs, &Weight(vec![1, 0])).unwrap();
        let whole = is_indecomposable_restriction(&v, &RegularSubalgebra::whole(&rs)).unwrap();
        assert_eq!(
            (whole.commutant_dimension, whole.radical_dimension, whole.semisimple_quotient_dimension),
            (1, 0, 1)
        );
        assert!(whole.indecomposable);
        let zero = is_indecomposable_restriction(&v, &RegularSubalgebra::zero(&rs)).unwrap();
        assert!(!zero.indecomposable);
        assert!(zero.witness().is_some());
        let adj = adjoint_module(&rs).unwrap();
        let t = subset(&rs, &[&[1, 0], &[1, 1]]);
        assert!(is_indecomposable_restriction(&adj, &RegularSubalgebra::minimal(&rs, t)).unwrap().indecomposable);
        let trivial = trivial_module(&rs);
        assert!(is_indecomposable_restriction(&trivial, &RegularSubalgebra::zero(&rs)).unwrap().indecomposable);
    }

    #[test]
    fn adjoint_examples() {
        let rs = a2();
        assert!(wide_via_adjoint(&rs, &ClosedSubset::positive(&rs)).unwrap());
        assert!(!wide_via_adjoint(&rs, &subset(&rs, &[&[1, 0]])).unwrap());
        assert!(wide_via_adjoint(&rs, &ClosedSubset::all(&rs)).unwrap());
    }

    #[test]
    fn classify_examples() {
        let rs = a2();
        let lambdas = [Weight(vec![1, 0]), Weight(vec![0, 1]), Weight(vec![1, 1])];
        let v = classify(&rs, &ClosedSubset::positive(&rs), &lambdas).unwrap();
        assert_eq!(v.classification, Classification::Wide);
        assert!(v.per_lambda.iter().all(|r| r.verdict.is_wide()));
        assert_eq!(v.oracle_agreement, Some(true));

        let v = classify(&rs, &subset(&rs, &[&[1, 0]]), &lambdas).unwrap();
        assert_eq!(v.classification, Classification::Narrow);
        assert!(v.per_lambda.iter().all(|r| !r.verdict.is_wide()));
        assert_eq!(v.oracle_agreement, Some(true));

        let v = classify(&rs, &ClosedSubset::empty(), &[Weight(vec![0, 0])]).unwrap();
        assert_eq!(v.classification, Classification::Narrow);
        assert_eq!(v.per_lambda_map()[&Weight(vec![0, 0])], LambdaVerdict::LambdaWide);
        assert!(v.is_consistent());
    }

    #[test]
    fn test_set() {
        assert_eq!(
            default_lambda_test_set(2),
            vec![Weight(vec![1, 0]), Weight(vec![0, 1]), Weight(vec![1, 1]), Weight(vec![2, 0])]
        );
        assert_eq!(default_lambda_test_set(1), vec![Weight(vec![1]), Weight(vec![2])]);
    }

    #[test]
    fn verdict_json() {
        let rs = a2();
        let t = subset(&rs, &[&[1, 0]]);
        let v = classify(&rs, &t, &[Weight(vec![1, 0])]).unwrap();
        let j = v.to_json(&rs);
        assert_eq!(j["classification"], "Narrow");
        assert_eq!(j["subalgebra"]["cartan"], "minimal");
        assert_eq!(j["per_lambda"][0]["verdict"], "LambdaNarrow");
        assert_eq!(j["per_lambda"][0]["oracle"]["minimal"]["outcome"], "decomposable");
    }
}
