//! Named verification suites behind `ucphase verify`.

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::{json, Value};
use ucphase::macmahon::{gamma_exchange_check, macmahon_check, normal_order_check, vertex_rep_limit_check};
use ucphase::partitions::Partition;
use ucphase::phase::*;
use ucphase::polyring::{Cutoffs, Poly};
use ucphase::report::CheckReport;
use ucphase::symfunc::universal_character_jt;
use ucphase::vertex::*;
use ucphase::Result;

use crate::{Failure, SizeFlags};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    JacobiTrudi,
    Pieri,
    Fermion,
    UcBilinear,
    PhaseAlgebra,
    Rtt,
    Prop42,
    Annihilation,
    Bethe,
    Exchange,
    Subset,
    FullPsi,
    Macmahon,
    NormalOrder,
    VertexLimit,
}

/// Sizes after defaults are applied; each suite reads the fields it needs.
struct Sizes {
    max_weight: usize,
    m1: usize,
    m2: usize,
    cap: usize,
    order: usize,
    seed: u64,
}

type Job = Box<dyn Fn() -> Result<CheckReport> + Send + Sync>;

fn job(f: impl Fn() -> Result<CheckReport> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn defaults(suite: Suite) -> Sizes {
    let (max_weight, cap, order) = match suite {
        Suite::JacobiTrudi => (3, 0, 0),
        Suite::Pieri => (3, 0, 3),
        Suite::Fermion => (3, 0, 0),
        Suite::UcBilinear => (2, 0, 0),
        Suite::PhaseAlgebra | Suite::Prop42 | Suite::Annihilation => (0, 3, 0),
        Suite::Rtt => (0, 2, 0),
        Suite::Bethe | Suite::Subset | Suite::FullPsi => (0, 2, 0),
        Suite::Exchange => (2, 2, 0),
        Suite::Macmahon => (0, 0, 6),
        Suite::NormalOrder => (1, 0, 3),
        Suite::VertexLimit => (2, 0, 2),
    };
    Sizes { max_weight, m1: 1, m2: 1, cap, order, seed: 2024 }
}

fn resolve(suite: Suite, flags: &SizeFlags) -> Sizes {
    let d = defaults(suite);
    Sizes {
        max_weight: flags.max_weight.unwrap_or(d.max_weight),
        m1: flags.m1.unwrap_or(d.m1),
        m2: flags.m2.unwrap_or(d.m2),
        cap: flags.cap.unwrap_or(d.cap),
        order: flags.order.unwrap_or(d.order),
        seed: flags.seed.unwrap_or(d.seed),
    }
}

fn pairs(max_weight: usize) -> Vec<(Partition, Partition)> {
    let all = Partition::all_up_to_weight(max_weight);
    all.iter().flat_map(|l| all.iter().map(move |m| (l.clone(), m.clone()))).collect()
}

fn uc_polys(max_weight: usize) -> Result<Vec<Poly>> {
    pairs(max_weight)
        .iter()
        .map(|(l, m)| {
            let n = (l.weight() + m.weight()).max(1);
            universal_character_jt(l, m, Cutoffs::new(n, n))
        })
        .collect()
}

fn jobs(suite: Suite, s: &Sizes) -> Result<(Value, Vec<Job>)> {
    let mut out: Vec<Job> = Vec::new();
    let model = PhaseModel::two_chain(s.m1, s.m2);
    let params = match suite {
        Suite::JacobiTrudi => {
            for (l, m) in pairs(s.max_weight) {
                out.push(job(move || route_equality_check(&l, &m)));
            }
            json!({"max_weight": s.max_weight})
        }
        Suite::Pieri => {
            for (l, m) in pairs(s.max_weight) {
                for family in [1, 2] {
                    for sign in [Sign::Minus, Sign::Plus] {
                        let spec = GammaSpec::new(family, sign, s.order)?;
                        let (l, m) = (l.clone(), m.clone());
                        out.push(job(move || gamma_pieri_check(&spec, &l, &m)));
                    }
                }
            }
            json!({"max_weight": s.max_weight, "order": s.order})
        }
        Suite::Fermion => {
            let (r, d) = (s.max_weight as i64, s.max_weight);
            for i in -r..=r {
                for j in -r..=r {
                    for letter in [Letter::X, Letter::Y] {
                        out.push(job(move || fermion_relation_check(letter, i, j, d)));
                    }
                    out.push(job(move || cross_commutation_check(i, j, d)));
                }
            }
            json!({"max_weight": s.max_weight, "index_range": r})
        }
        Suite::UcBilinear => {
            for (l, m) in pairs(s.max_weight) {
                out.push(job(move || uc_bilinear_check(&l, &m)));
            }
            json!({"max_weight": s.max_weight})
        }
        Suite::PhaseAlgebra => {
            let (m1, cap) = (s.m1, s.cap);
            let single = PhaseModel::single_chain(m1);
            let both = model;
            out.push(job(move || phase_algebra_check(&single, cap)));
            out.push(job(move || phase_algebra_check(&both, cap)));
            out.push(job(move || hamiltonian_commutation_check(m1, cap)));
            json!({"m1": s.m1, "m2": s.m2, "cap": s.cap})
        }
        Suite::Rtt => {
            let count = default_sample_count(&model);
            let samples = sample_pairs(count, s.seed);
            let cap = s.cap;
            let m = model;
            out.push(job(move || rtt_check(&m, &samples, cap)));
            let states = model.states_up_to(cap);
            for entry in [EntryName::A, EntryName::B, EntryName::C, EntryName::D] {
                for which in [Monodromy::T1, Monodromy::T2, Monodromy::Full] {
                    let (m, st) = (model, states.clone());
                    out.push(job(move || conservation_check(&m, which, entry, &st)));
                }
            }
            json!({"m1": s.m1, "m2": s.m2, "cap": s.cap, "seed": s.seed, "samples": count})
        }
        Suite::Prop42 => {
            for st in model.states_up_to(s.cap) {
                for chain in [1, 2] {
                    let (m, st) = (model, st.clone());
                    out.push(job(move || creation_pieri_check(&m, chain, &st)));
                }
            }
            json!({"m1": s.m1, "m2": s.m2, "cap": s.cap})
        }
        Suite::Annihilation => {
            for st in model.states_up_to(s.cap) {
                let m = model;
                out.push(job(move || annihilation_check(&m, &st)));
            }
            json!({"m1": s.m1, "m2": s.m2, "cap": s.cap})
        }
        Suite::Bethe => {
            for n in 0..=s.cap {
                let us = sample_points(n, s.seed);
                let m = model;
                out.push(job(move || bethe_expansion_check(&m, &us)));
            }
            json!({"m1": s.m1, "m2": s.m2, "max_roots": s.cap, "seed": s.seed})
        }
        Suite::Exchange => {
            let samples = sample_pairs(3, s.seed);
            let (m1, w) = (s.m1, s.max_weight);
            let ex = samples.clone();
            out.push(job(move || exchange_sweep(m1, &ex, w)));
            let (m, cap) = (model, s.cap);
            out.push(job(move || creation_commutativity_check(&m, &samples, cap)));
            json!({"m1": s.m1, "m2": s.m2, "max_weight": s.max_weight, "cap": s.cap, "seed": s.seed})
        }
        Suite::Subset => {
            for n in 0..=s.cap {
                let us = sample_points(n, s.seed);
                let m1 = s.m1;
                out.push(job(move || subset_expansion_check(&us, m1)));
            }
            json!({"m1": s.m1, "max_roots": s.cap, "seed": s.seed})
        }
        Suite::FullPsi => {
            for n in 0..=s.cap {
                let us = sample_points(n, s.seed);
                let m = model;
                out.push(job(move || full_psi_check(&m, &us)));
            }
            json!({"m1": s.m1, "m2": s.m2, "max_roots": s.cap, "seed": s.seed})
        }
        Suite::Macmahon => {
            let k = s.order;
            out.push(job(move || macmahon_check(k)));
            json!({"order": s.order})
        }
        Suite::NormalOrder => {
            let points = sample_pairs(2, s.seed);
            let order = s.order;
            for p in uc_polys(s.max_weight)? {
                for (z, w) in &points {
                    let (z2, w2, q) = (z.clone(), w.clone(), p.clone());
                    out.push(job(move || normal_order_check(&z2, &w2, &q, order)));
                    for family in [1, 2] {
                        let (z, w, q) = (z.clone(), w.clone(), p.clone());
                        out.push(job(move || gamma_exchange_check(family, &z, &w, &q, order)));
                    }
                }
            }
            json!({"max_weight": s.max_weight, "order": s.order, "seed": s.seed})
        }
        Suite::VertexLimit => {
            for k in 0..=s.order {
                for p in uc_polys(s.max_weight)? {
                    for family in [1, 2] {
                        let q = p.clone();
                        out.push(job(move || vertex_rep_limit_check(family, k, &q, k + 2)));
                    }
                }
            }
            json!({"max_weight": s.max_weight, "order": s.order})
        }
    };
    Ok((params, out))
}

/// Runs every case of `suite` (in parallel, collected in a fixed order) and builds the report
/// `{suite, params, cases: [{input, pass, residual?}], pass}`.
pub fn run(suite: Suite, flags: &SizeFlags) -> std::result::Result<Value, Failure> {
    let sizes = resolve(suite, flags);
    let (params, jobs) = jobs(suite, &sizes)?;
    let reports: Vec<CheckReport> = jobs.par_iter().map(|f| f()).collect::<Result<_>>()?;
    let cases: Vec<Value> = reports
        .iter()
        .map(|r| {
            let mut case = json!({"check": r.check, "input": r.inputs, "pass": r.pass});
            if !r.residuals.is_empty() {
                case["residual"] = Value::Array(r.residuals.clone());
            }
            if !r.notes.is_empty() {
                case["notes"] = Value::Object(r.notes.clone());
            }
            case
        })
        .collect();
    let pass = reports.iter().all(|r| r.pass);
    let name = suite.to_possible_value().expect("suite name").get_name().to_string();
    Ok(json!({"suite": name, "params": params, "cases": cases, "pass": pass}))
}
