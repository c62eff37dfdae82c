//! The twelve acceptance criteria, each printed as one PASS/FAIL line.
//!
//! Runs without the libtest harness so the lines always reach stdout:
//! `cargo test -p ucphase --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;
use ucphase::macmahon::{
    correlator_full, correlator_minus, macmahon_series, plane_partition_series, vertex_rep_limit_check,
};
use ucphase::partitions::Partition;
use ucphase::phase::*;
use ucphase::polyring::{Cutoffs, Degree, Poly};
use ucphase::scalars::{rat, Rational};
use ucphase::symfunc::{uc_synthesize, universal_character_jt, universal_character_op, UcVector};
use ucphase::vertex::*;
use ucphase::Result;

type Verdict = Result<(bool, String)>;
type Criterion = (&'static str, fn() -> Verdict);

fn pairs(max_weight: usize) -> Vec<(Partition, Partition)> {
    let all = Partition::all_up_to_weight(max_weight);
    let mut out = Vec::new();
    for l in &all {
        for m in &all {
            out.push((l.clone(), m.clone()));
        }
    }
    out
}

fn uc_ring(l: &Partition, m: &Partition) -> Cutoffs {
    let n = (l.weight() + m.weight()).max(1);
    Cutoffs::new(n, n)
}

fn routes() -> Verdict {
    let ps = pairs(4);
    let mut bad = 0;
    for (l, m) in &ps {
        let cut = uc_ring(l, m);
        let jt = universal_character_jt(l, m, cut)?;
        if jt != universal_character_op(l, m, cut)? || jt != raise_uc(l, m, cut)? {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{} pairs, {bad} mismatches", ps.len())))
}

fn homogeneity() -> Verdict {
    let ps = pairs(4);
    let mut bad = 0;
    for (l, m) in &ps {
        let jt = universal_character_jt(l, m, uc_ring(l, m))?;
        if jt.graded_degree()? != Degree::Homogeneous(l.weight() as i64 - m.weight() as i64) {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{} pairs, {bad} inhomogeneous or wrong degree", ps.len())))
}

fn gamma_pieri() -> Verdict {
    let mut cases = 0;
    let mut bad = 0;
    for (l, m) in pairs(3) {
        for family in [1, 2] {
            for sign in [Sign::Minus, Sign::Plus] {
                let r = gamma_pieri_check(&GammaSpec::new(family, sign, 3)?, &l, &m)?;
                cases += 1;
                bad += usize::from(!r.pass);
            }
        }
    }
    Ok((bad == 0, format!("{cases} (operator, pair) cases, {bad} failures")))
}

fn fermions() -> Verdict {
    let mut cases = 0;
    let mut bad = 0;
    for i in -3..=3 {
        for j in -3..=3 {
            for letter in [Letter::X, Letter::Y] {
                bad += usize::from(!fermion_relation_check(letter, i, j, 4)?.pass);
                cases += 1;
            }
            bad += usize::from(!cross_commutation_check(i, j, 4)?.pass);
            cases += 1;
        }
    }
    Ok((bad == 0, format!("{cases} index cases on monomials of weight <= 4, {bad} failures")))
}

fn bilinear() -> Verdict {
    let ps = pairs(2);
    let mut bad = 0;
    for (l, m) in &ps {
        bad += usize::from(!uc_bilinear_check(l, m)?.pass);
    }
    Ok((bad == 0, format!("{} universal characters, {bad} nonzero residuals", ps.len())))
}

fn algebra() -> Verdict {
    let mut bad = 0;
    let mut models = 0;
    for m1 in 0..=3 {
        bad += usize::from(!phase_algebra_check(&PhaseModel::single_chain(m1), 5)?.pass);
        bad += usize::from(!hamiltonian_commutation_check(m1, 5)?.pass);
        models += 1;
        for m2 in 0..=3 {
            bad += usize::from(!phase_algebra_check(&PhaseModel::two_chain(m1, m2), 5)?.pass);
            models += 1;
        }
    }
    Ok((bad == 0, format!("{models} models up to 5 particles, {bad} failures")))
}

fn rtt() -> Verdict {
    let samples = sample_pairs(7, 2024);
    let mut bad = 0;
    for (m1, m2) in [(0, 0), (1, 1), (2, 1)] {
        bad += usize::from(!rtt_check(&PhaseModel::two_chain(m1, m2), &samples, 3)?.pass);
    }
    Ok((bad == 0, format!("3 models x 7 samples, cap 3, {bad} failures")))
}

fn creation_pieri() -> Verdict {
    let mut bad = 0;
    let mut cases = 0;
    for m1 in 0..=3 {
        for m2 in 0..=3 {
            let r = creation_pieri_sweep(&PhaseModel::two_chain(m1, m2), 3)?;
            cases += r.notes.get("cases").and_then(|v| v.as_u64()).unwrap_or(0);
            bad += usize::from(!r.pass);
        }
    }
    Ok((bad == 0, format!("{cases} (state, chain) cases, {bad} failing models")))
}

fn bethe() -> Verdict {
    let mut bad = 0;
    let mut cases = 0;
    for n in 0..=2 {
        for m1 in 0..=2 {
            for m2 in 0..=2 {
                for seed in 0..3 {
                    let us = sample_points(n, 100 + seed);
                    bad += usize::from(!bethe_expansion_check(&PhaseModel::two_chain(m1, m2), &us)?.pass);
                    cases += 1;
                }
            }
        }
    }
    let cut = Cutoffs::new(2, 2);
    let got = uc_synthesize(&project(&bethe_state(&PhaseModel::two_chain(1, 1), &[rat(2, 1)])?), cut)?;
    // 2^-2 (1 + 4 x1 + 4 y1 + 16 (x1 y1 - 1))
    let golden = Poly::parse("1/4 + x1 + y1 + 4*x1*y1 - 4", cut)?;
    let golden_ok = got == golden;
    Ok((
        bad == 0 && golden_ok,
        format!("{cases} cases, {bad} failures; golden value {}", if golden_ok { "reproduced" } else { "differs" }),
    ))
}

fn exchange_and_subsets() -> Verdict {
    let cut = Cutoffs::new(1, 1);
    let one: UcVector = [((Partition::empty(), Partition::empty()), rat(1, 1))].into_iter().collect();
    let (lhs, rhs) = exchange_sides(1, &rat(2, 1), &rat(1, 1), &one)?;
    let target = Poly::parse("5 + 4*x1", cut)?;
    let golden_ok = uc_synthesize(&lhs, cut)? == target && uc_synthesize(&rhs, cut)? == target;
    let mut bad = 0;
    let mut cases = 0;
    let mut other_reading_failures = 0;
    let mut readings = std::collections::BTreeSet::new();
    for n in 0..=3 {
        for seed in 0..2 {
            let us: Vec<Rational> = sample_points(n, 300 + seed);
            for m1 in 0..=2 {
                let mut reports = vec![subset_expansion_check(&us, m1)?];
                for m2 in 0..=2 {
                    reports.push(full_psi_check(&PhaseModel::two_chain(m1, m2), &us)?);
                }
                for r in reports {
                    cases += 1;
                    bad += usize::from(!r.pass);
                    if let Some(v) = r.notes.get("reading") {
                        readings.insert(v.as_str().unwrap_or_default().to_string());
                    }
                    let alt =
                        r.notes.get("reading_matches").and_then(|m| m.get("all-others")).and_then(|v| v.as_bool());
                    other_reading_failures += usize::from(alt == Some(false));
                }
            }
        }
    }
    Ok((
        golden_ok && bad == 0,
        format!(
            "exchange golden {}; {cases} subset/full-vector cases, {bad} failures; reading {:?} (alternative reading fails {other_reading_failures} cases)",
            if golden_ok { "5 + 4*x1 on both sides" } else { "differs" },
            readings
        ),
    ))
}

fn macmahon() -> Verdict {
    let product = macmahon_series(6)?.q_coeffs(6);
    let full = correlator_full(6)?.q_coeffs(6);
    let counts = plane_partition_series(6)?.q_coeffs(6);
    let expected: Vec<Rational> = [1, 1, 3, 6, 13, 24, 48].iter().map(|&c| rat(c, 1)).collect();
    let three_way = product == expected && full == expected && counts == expected;
    let minus = correlator_minus(4)?;
    let inverse: Vec<Rational> = [1, -1, -2, -1, 0].iter().map(|&c| rat(c, 1)).collect();
    let minus_ok = minus.q_coeffs(4) == inverse && minus.is_even();
    Ok((three_way && minus_ok, format!("three-way through q^6 {three_way}; minus correlator through q^4 {minus_ok}")))
}

fn vertex_limit() -> Verdict {
    let cut = Cutoffs::new(3, 3);
    let polys = ["1", "x1", "y1", "x1*y1 - 1", "x2 + y1^2", "1/2*x1^2 - y2"];
    let mut bad = 0;
    let mut cases = 0;
    for k in 0..=3 {
        for family in [1, 2] {
            for p in polys {
                let r = vertex_rep_limit_check(family, k, &Poly::parse(p, cut)?, k + 2)?;
                bad += usize::from(!r.pass);
                cases += 1;
            }
        }
    }
    Ok((bad == 0, format!("{cases} cases, M from K to K+2, {bad} failures")))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("route equality", routes),
        ("homogeneity", homogeneity),
        ("vertex operators on universal characters", gamma_pieri),
        ("fermionic relations", fermions),
        ("bilinear identity", bilinear),
        ("phase algebra and hamiltonian", algebra),
        ("RTT relation", rtt),
        ("creation operators as Pieri multiplication", creation_pieri),
        ("Bethe vector expansion", bethe),
        ("exchange identity and subset expansions", exchange_and_subsets),
        ("MacMahon three-way agreement", macmahon),
        ("vertex-representation limit", vertex_limit),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = match run() {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        let status = if pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} {name}: {detail} [{:.1?}]", i + 1, start.elapsed());
        if !pass {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
