//! Subcommand bodies. Each returns the JSON report and whether all checks
//! passed.

use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use regwide::closedsets::{enumerate_closed_subsets, orbit_representative};
use regwide::fflv::enumerate_fflv_basis;
use regwide::wideness::{classify_adjoint, classify_with};
use regwide::{
    ClassifyOptions, ClosedSubset, ModuleCaps, RootSet, RootSystem, TypeLetter, Verdict, Weight,
};
use serde_json::{json, Value};

use crate::input::{lambdas, max_dim, parse_roots, parse_weight, read_roots_file};
use crate::store::{case_hash, write_report, ResultStore};
use crate::{CensusArgs, ClassifyArgs, FflvArgs, RunArgs, SystemArgs};

/// Cases classified between writes to `results.jsonl`.
const CHUNK: usize = 64;
const WEYL_CAP: usize = 2_000_000;

pub struct Outcome {
    pub report: Value,
    pub passed: bool,
}

struct Timer {
    enabled: bool,
    start: Instant,
    phases: BTreeMap<String, u128>,
}

impl Timer {
    fn new(enabled: bool) -> Timer {
        Timer {
            enabled,
            start: Instant::now(),
            phases: BTreeMap::new(),
        }
    }

    fn lap(&mut self, phase: &str, since: Instant) {
        self.phases.insert(format!("{phase}_ms"), since.elapsed().as_millis());
    }

    fn attach(mut self, report: &mut Value) {
        if self.enabled {
            self.phases.insert("total_ms".into(), self.start.elapsed().as_millis());
            report["timing"] = json!(self.phases);
        }
    }
}

fn system(args: &SystemArgs) -> Result<RootSystem> {
    Ok(RootSystem::new(args.type_letter, args.rank)?)
}

fn header(rs: &RootSystem) -> Value {
    json!({
        "type": rs.type_letter().to_string(),
        "rank": rs.rank(),
        "name": rs.name(),
        "roots": rs.num_roots(),
    })
}

/// Everything that decides a case's verdict, in a fixed order.
struct Plan {
    lambdas: Vec<Weight>,
    options: ClassifyOptions,
    adjoint_only: bool,
}

impl Plan {
    fn new(rs: &RootSystem, run: &RunArgs) -> Result<Plan> {
        if rs.type_letter() != TypeLetter::A && !run.adjoint_only {
            bail!(
                "{} is not of type A; modules V(λ) are only built in type A, pass --adjoint-only",
                rs.name()
            );
        }
        let max_dim = max_dim(run)?;
        let lambdas = if run.adjoint_only {
            vec![rs.adjoint_weight()]
        } else {
            lambdas(run, rs.rank())?
        };
        Ok(Plan {
            lambdas,
            options: ClassifyOptions {
                caps: ModuleCaps {
                    max_dim,
                    ..ModuleCaps::default()
                },
                verify: run.verify,
                cartan_mode: run.cartan.into(),
                commutant_max_dim: max_dim,
            },
            adjoint_only: run.adjoint_only,
        })
    }

    fn classify(&self, rs: &RootSystem, t: &ClosedSubset) -> Result<Verdict> {
        if self.adjoint_only {
            Ok(classify_adjoint(rs, t, &self.options)?)
        } else {
            Ok(classify_with(rs, t, &self.lambdas, &self.options)?)
        }
    }

    fn inputs(&self, rs: &RootSystem) -> Value {
        json!({
            "lambdas": self.lambdas.iter().map(Weight::to_string).collect::<Vec<_>>(),
            "cartan": self.options.cartan_mode.to_string(),
            "verify": self.options.verify,
            "adjoint_only": self.adjoint_only,
            "max_dim": self.options.caps.max_dim,
            "system": rs.name(),
        })
    }

    fn case_key(&self, rs: &RootSystem, t: &ClosedSubset) -> String {
        let canonical = json!({
            "inputs": self.inputs(rs),
            "roots": t.to_json(rs),
            "tool_version": env!("CARGO_PKG_VERSION"),
        });
        case_hash(&canonical.to_string())
    }
}

/// Lambdas whose oracle did not confirm the verdict.
fn oracle_failures(verdict: &Verdict) -> Vec<Value> {
    verdict
        .per_lambda
        .iter()
        .filter_map(|r| {
            let o = r.oracle.as_ref()?;
            if o.agrees_with(r.verdict.is_wide()) {
                return None;
            }
            let reason = if o.minimal.is_determinate() && o.full.is_determinate() {
                "disagrees"
            } else {
                "indeterminate"
            };
            Some(json!({ "lambda": r.lambda.to_string(), "reason": reason }))
        })
        .collect()
}

fn case_record(rs: &RootSystem, index: usize, hash: &str, verdict: &Verdict) -> Value {
    json!({
        "index": index,
        "hash": hash,
        "roots": verdict.subalgebra.to_json(rs),
        "classification": verdict.classification.to_string(),
        "consistent": verdict.is_consistent(),
        "oracle_failures": oracle_failures(verdict),
        "verdict": verdict.to_json(rs),
    })
}

fn report(rs: &RootSystem, plan: &Plan) -> Value {
    json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "root_system": header(rs),
        "inputs": plan.inputs(rs),
    })
}

pub fn rootsys(args: &SystemArgs) -> Result<Outcome> {
    Ok(Outcome {
        report: system(args)?.to_json(),
        passed: true,
    })
}

pub fn classify(args: &ClassifyArgs) -> Result<Outcome> {
    let mut timer = Timer::new(args.run.timing);
    let rs = system(&args.system)?;
    let roots = match (&args.roots, &args.roots_file) {
        (Some(text), _) => parse_roots(text, rs.rank())?,
        (None, Some(path)) => read_roots_file(path, rs.rank())?,
        (None, None) => bail!("one of --roots or --roots-file is required"),
    };
    let t = ClosedSubset::from_roots(&rs, &roots).context("invalid subset")?;
    let plan = Plan::new(&rs, &args.run)?;

    let started = Instant::now();
    let verdict = plan.classify(&rs, &t)?;
    timer.lap("classify", started);

    let failures = oracle_failures(&verdict);
    let consistent = verdict.is_consistent();
    let mut out = report(&rs, &plan);
    out["inputs"]["roots"] = t.to_json(&rs);
    out["verdicts"] = json!([verdict.to_json(&rs)]);
    out["oracle_failures"] = json!(failures);
    out["consistent"] = json!(consistent);
    timer.attach(&mut out);
    if let Some(dir) = &args.run.out {
        let (mut store, _) = ResultStore::open(dir, false)?;
        let hash = plan.case_key(&rs, &t);
        store.append(&[case_record(&rs, 0, &hash, &verdict)])?;
        store.write_summary(SUMMARY_HEADER, &[summary_row(&case_record(&rs, 0, &hash, &verdict), &t, &rs)])?;
        write_report(dir, &out)?;
    }
    Ok(Outcome {
        passed: failures.is_empty() && consistent,
        report: out,
    })
}

const SUMMARY_HEADER: &str = "index,hash,size,classification,consistent,oracle_failures,roots";

fn summary_row(record: &Value, t: &ClosedSubset, rs: &RootSystem) -> String {
    let roots: Vec<String> = t.roots(rs).iter().map(ToString::to_string).collect();
    format!(
        "{},{},{},{},{},{},\"{}\"",
        record["index"],
        record["hash"].as_str().unwrap_or_default(),
        t.len(),
        record["classification"].as_str().unwrap_or_default(),
        record["consistent"],
        record["oracle_failures"].as_array().map_or(0, Vec::len),
        roots.join(";"),
    )
}

pub fn census(args: &CensusArgs) -> Result<Outcome> {
    let mut timer = Timer::new(args.run.timing);
    let rs = system(&args.system)?;
    let plan = Plan::new(&rs, &args.run)?;

    let started = Instant::now();
    let subsets = enumerate_closed_subsets(&rs)?;
    timer.lap("enumerate", started);

    let started = Instant::now();
    let hashes: Vec<String> = subsets.iter().map(|t| plan.case_key(&rs, t)).collect();
    let (mut store, mut done) = match &args.run.out {
        Some(dir) => {
            let (s, d) = ResultStore::open(dir, args.resume)?;
            (Some(s), d)
        }
        None => (None, BTreeMap::new()),
    };
    let resumed = hashes.iter().filter(|h| done.contains_key(*h)).count();
    if resumed > 0 {
        eprintln!("resuming: {resumed} of {} cases already recorded", subsets.len());
    }
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = args.jobs {
            b = b.num_threads(j.max(1));
        }
        b.build().context("building thread pool")?
    };
    let pending: Vec<usize> = (0..subsets.len()).filter(|&i| !done.contains_key(&hashes[i])).collect();
    for chunk in pending.chunks(CHUNK) {
        let records = pool.install(|| {
            chunk
                .par_iter()
                .map(|&i| {
                    let verdict = plan.classify(&rs, &subsets[i])?;
                    Ok(case_record(&rs, i, &hashes[i], &verdict))
                })
                .collect::<Result<Vec<Value>>>()
        })?;
        if let Some(store) = store.as_mut() {
            store.append(&records)?;
        }
        for r in records {
            done.insert(r["hash"].as_str().unwrap_or_default().to_string(), r);
        }
    }
    let records: Vec<Value> = hashes
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let mut r = done[h].clone();
            r["index"] = json!(i);
            r
        })
        .collect();
    timer.lap("classify", started);

    let started = Instant::now();
    let weyl = rs.weyl_elements(WEYL_CAP)?;
    let mut orbits: BTreeMap<RootSet, (usize, String)> = BTreeMap::new();
    for (t, r) in subsets.iter().zip(&records) {
        let rep = orbit_representative(&weyl, t);
        let entry = orbits
            .entry(rep)
            .or_insert_with(|| (0, r["classification"].as_str().unwrap_or_default().to_string()));
        entry.0 += 1;
    }
    timer.lap("orbits", started);

    let mut wide = 0;
    let mut failures = Vec::new();
    let mut violations = Vec::new();
    for r in &records {
        if r["classification"] == "Wide" {
            wide += 1;
        }
        if r["consistent"] != true {
            violations.push(json!({ "index": r["index"], "roots": r["roots"] }));
        }
        for f in r["oracle_failures"].as_array().into_iter().flatten() {
            failures.push(json!({ "index": r["index"], "roots": r["roots"], "lambda": f["lambda"], "reason": f["reason"] }));
        }
    }
    let orbit_list: Vec<Value> = orbits
        .iter()
        .map(|(rep, (size, class))| {
            json!({
                "representative": rep.roots(&rs).iter().map(|x| x.0.clone()).collect::<Vec<_>>(),
                "size": size,
                "classification": class,
            })
        })
        .collect();

    let mut out = report(&rs, &plan);
    out["summary"] = json!({
        "closed_subsets": records.len(),
        "wide": wide,
        "narrow": records.len() - wide,
        "orbits": orbits.len(),
    });
    out["orbits"] = json!(orbit_list);
    out["verdicts"] = json!(records.iter().map(|r| r["verdict"].clone()).collect::<Vec<_>>());
    out["oracle_failures"] = json!(failures);
    out["consistency_violations"] = json!(violations);
    timer.attach(&mut out);

    if let (Some(store), Some(dir)) = (&store, &args.run.out) {
        let rows: Vec<String> = subsets
            .iter()
            .zip(&records)
            .map(|(t, r)| summary_row(r, t, &rs))
            .collect();
        store.write_summary(SUMMARY_HEADER, &rows)?;
        write_report(dir, &out)?;
    }
    Ok(Outcome {
        passed: failures.is_empty() && violations.is_empty(),
        report: out,
    })
}

pub fn fflv(args: &FflvArgs) -> Result<Outcome> {
    let lambda = parse_weight(&args.lambda, args.rank)?;
    let rs = RootSystem::new(TypeLetter::A, args.rank)?;
    let basis = enumerate_fflv_basis(&lambda)?;
    let expected = rs.weyl_dimension(&lambda)?;
    let passed = expected == basis.len().into();
    let out = json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "root_system": header(&rs),
        "inputs": { "lambda": lambda.to_string() },
        "size": basis.len(),
        "weyl_dimension": expected.to_string(),
        "check": if passed { "PASS" } else { "FAIL" },
        "multi_exponents": basis,
    });
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)?;
        let mut lines = String::new();
        for s in &basis {
            lines.push_str(&serde_json::to_string(s)?);
            lines.push('\n');
        }
        std::fs::write(dir.join("fflv.jsonl"), lines)?;
        write_report(dir, &out)?;
    }
    Ok(Outcome {
        report: out,
        passed,
    })
}
