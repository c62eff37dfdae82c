//! Verifiers for the phase model: operator algebra, particle conservation,
//! creation and annihilation in the universal-character basis, Bethe vectors
//! and their expansions.

use super::monodromy::*;
use super::{
    hamiltonian, number_operator, project, project_formal, FockVector, OccState, OpKind, OpSum, PhaseModel, SiteOp,
};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyring::{Cutoffs, Shift};
use crate::report::CheckReport;
use crate::scalars::{rational_to_string, Rational, TruncSeries};
use crate::symfunc::{
    schur_eval, truncated_h_apply, uc_decompose, uc_pieri, uc_skew, universal_character_jt, Side, UcVector,
};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};

/// Entry of a monodromy matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EntryName {
    A,
    B,
    C,
    D,
}

impl EntryName {
    fn pick(self, t: &OperatorLaurent) -> &LaurentEntry {
        match self {
            EntryName::A => t.a(),
            EntryName::B => t.b(),
            EntryName::C => t.c(),
            EntryName::D => t.d(),
        }
    }
}

/// How the product in the subset expansion is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubsetReading {
    /// `prod_{k in S} prod_{j not in S} u_j^2 / (u_j^2 - u_k^2)`.
    Complement,
    /// `prod_{k in S} prod_{j != k} u_j^2 / (u_j^2 - u_k^2)`.
    AllOthers,
}

impl SubsetReading {
    pub fn name(self) -> &'static str {
        match self {
            SubsetReading::Complement => "complement",
            SubsetReading::AllOthers => "all-others",
        }
    }
}

fn uc_axpy(acc: &mut UcVector, c: &Rational, v: &UcVector) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        let slot = acc.entry(k.clone()).or_insert_with(Rational::zero);
        *slot += c * x;
        if slot.is_zero() {
            acc.remove(k);
        }
    }
}

fn uc_diff(a: &UcVector, b: &UcVector) -> UcVector {
    let mut out = a.clone();
    uc_axpy(&mut out, &-Rational::one(), b);
    out
}

fn uc_basis(lam: Partition, mu: Partition) -> UcVector {
    let mut v = UcVector::new();
    v.insert((lam, mu), Rational::one());
    v
}

pub fn uc_to_json(v: &UcVector) -> Value {
    let mut m = serde_json::Map::new();
    for ((l, u), c) in v {
        m.insert(format!("[{l},{u}]"), rational_to_string(c).into());
    }
    Value::Object(m)
}

fn rats(us: &[Rational]) -> Value {
    us.iter().map(rational_to_string).collect::<Vec<_>>().into()
}

/// Applies site operators one at a time, rightmost first.
fn apply_seq(ops: &[SiteOp], v: &FockVector<Rational>) -> Result<FockVector<Rational>> {
    let mut out = v.clone();
    for op in ops.iter().rev() {
        out = OpSum::word(super::OpWord::single(*op)).apply(&out)?;
    }
    Ok(out)
}

/// Phase-operator relations on every site and every basis state with at most `cap` particles:
/// `phi phi+ = 1`, `phi+ phi = 1 - pi`, `[phi, phi+] = pi`, `[N, phi] = -phi`, `[N, phi+] = phi+`,
/// and commutation of operators on different sites.
pub fn phase_algebra_check(model: &PhaseModel, cap: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("phase-algebra", json!({"m1": model.m1, "m2": model.m2, "cap": cap}));
    let mut sites = Vec::new();
    for c in [1u8, 2] {
        for i in 0..model.sites(c) {
            sites.push((c, i));
        }
    }
    let states = model.states_up_to(cap);
    let residuals: Vec<Value> = states
        .par_iter()
        .map(|s| -> Result<Vec<Value>> {
            let v = FockVector::<Rational>::basis(s.clone());
            let mut bad = Vec::new();
            let mut record = |name: &str, site: String, diff: FockVector<Rational>| {
                if !diff.is_zero() {
                    bad.push(
                        json!({"relation": name, "site": site, "state": s.to_string(), "residual": diff.to_json()}),
                    );
                }
            };
            for &(c, i) in &sites {
                let op = |kind| SiteOp::new(c, i, kind);
                let (phi, dag, n, pi) =
                    (op(OpKind::Phi), op(OpKind::PhiDag), op(OpKind::Number), op(OpKind::VacuumProj));
                let tag = format!("{c}.{i}");
                let vpi = apply_seq(&[pi], &v)?;
                record("phi phi+ = 1", tag.clone(), apply_seq(&[phi, dag], &v)?.minus(&v));
                record("phi+ phi = 1 - pi", tag.clone(), apply_seq(&[dag, phi], &v)?.minus(&v).plus(&vpi));
                record(
                    "[phi, phi+] = pi",
                    tag.clone(),
                    apply_seq(&[phi, dag], &v)?.minus(&apply_seq(&[dag, phi], &v)?).minus(&vpi),
                );
                record(
                    "[N, phi] = -phi",
                    tag.clone(),
                    apply_seq(&[n, phi], &v)?.minus(&apply_seq(&[phi, n], &v)?).plus(&apply_seq(&[phi], &v)?),
                );
                record(
                    "[N, phi+] = phi+",
                    tag.clone(),
                    apply_seq(&[n, dag], &v)?.minus(&apply_seq(&[dag, n], &v)?).minus(&apply_seq(&[dag], &v)?),
                );
                for &(c2, j) in &sites {
                    if (c2, j) == (c, i) {
                        continue;
                    }
                    for other in [OpKind::Phi, OpKind::PhiDag] {
                        let o = SiteOp::new(c2, j, other);
                        for mine in [phi, dag] {
                            record(
                                "distinct sites commute",
                                format!("{tag}/{c2}.{j}"),
                                apply_seq(&[mine, o], &v)?.minus(&apply_seq(&[o, mine], &v)?),
                            );
                        }
                    }
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    for r in residuals {
        report.fail(r);
    }
    Ok(report)
}

/// `[H, N] = 0` for the periodic single-chain Hamiltonian with `m + 1` sites.
pub fn hamiltonian_commutation_check(m: usize, cap: usize) -> Result<CheckReport> {
    let model = PhaseModel::single_chain(m);
    let h = hamiltonian(1, m);
    let n = number_operator(&model, None);
    let mut report = CheckReport::new("hamiltonian-number", json!({"m": m, "cap": cap}));
    for s in model.states_up_to(cap) {
        let v = FockVector::<Rational>::basis(s.clone());
        let diff = h.apply(&n.apply(&v)?)?.minus(&n.apply(&h.apply(&v)?)?);
        report.expect(diff.is_zero(), || json!({"state": s.to_string(), "residual": diff.to_json()}));
    }
    Ok(report)
}

/// Change of the particle number of one chain (or both) under a monodromy entry: `B` adds
/// one particle, `C` removes one, `A` and `D` keep the count. The chain of `T_i` is the only
/// one touched.
pub fn conservation_check(
    model: &PhaseModel,
    which: Monodromy,
    entry: EntryName,
    states: &[OccState],
) -> Result<CheckReport> {
    let t = monodromy(model, which)?;
    let op = entry.pick(&t);
    let delta: i64 = match entry {
        EntryName::B => 1,
        EntryName::C => -1,
        _ => 0,
    };
    let mut report = CheckReport::new(
        "conservation",
        json!({"m1": model.m1, "m2": model.m2, "monodromy": format!("{which:?}"), "entry": format!("{entry:?}")}),
    );
    for s in states {
        model.check_state(s)?;
        let out = apply_entry_formal(op, &FockVector::basis(s.clone()))?;
        let (n1, n2) = (s.total(1) as i64, s.total(2) as i64);
        for t in out.terms().keys() {
            let (m1, m2) = (t.total(1) as i64, t.total(2) as i64);
            let ok = match which {
                Monodromy::T1 => m1 == n1 + delta && m2 == n2,
                Monodromy::T2 => m1 == n1 && m2 == n2 + delta,
                Monodromy::Full => m1 + m2 == n1 + n2 + delta,
            };
            report.expect(ok, || json!({"state": s.to_string(), "image": t.to_string()}));
        }
    }
    Ok(report)
}

fn chain_entry(model: &PhaseModel, chain: u8, entry: EntryName) -> Result<LaurentEntry> {
    let which = if chain == 1 { Monodromy::T1 } else { Monodromy::T2 };
    Ok(entry.pick(&monodromy(model, which)?).clone())
}

fn formal_to_json(v: &BTreeMap<i64, UcVector>) -> Value {
    v.iter().map(|(e, x)| (e.to_string(), uc_to_json(x))).collect::<serde_json::Map<_, _>>().into()
}

fn formal_diff(a: &BTreeMap<i64, UcVector>, b: &BTreeMap<i64, UcVector>) -> BTreeMap<i64, UcVector> {
    let mut out = BTreeMap::new();
    for e in a.keys().chain(b.keys()) {
        let empty = UcVector::new();
        let d = uc_diff(a.get(e).unwrap_or(&empty), b.get(e).unwrap_or(&empty));
        if !d.is_empty() {
            out.insert(*e, d);
        }
    }
    out
}

/// `u^{M_i} B_i(u)` applied to `s` and projected, against
/// `sum_k u^{2k} h_k(x - d~y) S_[lam,mu]` (or the `y` version for chain 2) decomposed in the
/// universal-character basis, keeping the diagrams that fit on the chain.
pub fn creation_pieri_check(model: &PhaseModel, chain: u8, s: &OccState) -> Result<CheckReport> {
    let mut memo = HashMap::new();
    creation_pieri_check_memo(model, chain, s, &mut memo)
}

type PieriMemo = HashMap<(u8, usize, Partition, Partition), BTreeMap<i64, UcVector>>;

fn creation_rhs(chain: u8, m: usize, lam: &Partition, mu: &Partition) -> Result<BTreeMap<i64, UcVector>> {
    let cut = Cutoffs::new((lam.weight() + m).max(1), (mu.weight() + m).max(1));
    let s = universal_character_jt(lam, mu, cut)?;
    let shift = if chain == 1 { Shift::XMinusDy } else { Shift::YMinusDx };
    let mut out = BTreeMap::new();
    for (k, p) in truncated_h_apply(m, shift, &s)?.into_iter().enumerate() {
        let mut dec = uc_decompose(&p)?;
        dec.retain(|(l, u), _| if chain == 1 { l.largest() <= m } else { u.largest() <= m });
        if !dec.is_empty() {
            out.insert(2 * k as i64, dec);
        }
    }
    Ok(out)
}

fn creation_pieri_check_memo(model: &PhaseModel, chain: u8, s: &OccState, memo: &mut PieriMemo) -> Result<CheckReport> {
    model.check_state(s)?;
    let m = if chain == 1 {
        model.m1
    } else {
        model.m2.ok_or_else(|| Error::InvalidArgument("model has no second chain".into()))?
    };
    let b = entry_shift(&chain_entry(model, chain, EntryName::B)?, m as i32);
    let lhs = project_formal(&apply_entry_formal(&b, &FockVector::basis(s.clone()))?);
    let (lam, mu) = s.partitions();
    let key = (chain, m, lam.clone(), mu.clone());
    let rhs = match memo.get(&key) {
        Some(r) => r.clone(),
        None => {
            let r = creation_rhs(chain, m, &lam, &mu)?;
            memo.insert(key, r.clone());
            r
        }
    };
    let mut report = CheckReport::new(
        "creation-pieri",
        json!({"m1": model.m1, "m2": model.m2, "chain": chain, "state": s.to_string()}),
    );
    let diff = formal_diff(&lhs, &rhs);
    report.expect(
        diff.is_empty(),
        || json!({"lhs": formal_to_json(&lhs), "rhs": formal_to_json(&rhs), "residual": formal_to_json(&diff)}),
    );
    Ok(report)
}

/// [`creation_pieri_check`] on both chains for every state with at most `cap` particles.
pub fn creation_pieri_sweep(model: &PhaseModel, cap: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("creation-pieri-sweep", json!({"m1": model.m1, "m2": model.m2, "cap": cap}));
    let chains: Vec<u8> = if model.m2.is_some() { vec![1, 2] } else { vec![1] };
    let mut memo = PieriMemo::new();
    let mut count = 0usize;
    for s in model.states_up_to(cap) {
        for &c in &chains {
            report.absorb(creation_pieri_check_memo(model, c, &s, &mut memo)?);
            count += 1;
        }
    }
    report.note("cases", count);
    Ok(report)
}

fn with_headroom(s: &OccState, n0: u32, m0: u32) -> OccState {
    let mut c1 = s.chain(1).to_vec();
    let mut c2 = s.chain(2).to_vec();
    c1[0] = c1[0].max(n0);
    if let Some(z) = c2.first_mut() {
        *z = (*z).max(m0);
    }
    OccState::new(c1, c2)
}

/// `u^{-M_1} C_1(u)` applied to `s` (given one zero-energy particle of headroom) and projected,
/// against `sum_k u^{-2k} h_k^perp` acting on `(lam, mu)`; plus the exact entry relations
/// `B = u A phi0+`, `C = u^{-1} phi0 A+(1/u)`, `D = phi0 A+(1/u) phi0+` on each chain.
pub fn annihilation_check(model: &PhaseModel, s: &OccState) -> Result<CheckReport> {
    model.check_state(s)?;
    let m1 = model.m1;
    let start = with_headroom(s, 1, 1);
    let mut report =
        CheckReport::new("annihilation", json!({"m1": model.m1, "m2": model.m2, "state": start.to_string()}));
    let c = entry_shift(&chain_entry(model, 1, EntryName::C)?, -(m1 as i32));
    let basis = FockVector::<TruncSeries>::basis(start.clone());
    let lhs = project_formal(&apply_entry_formal(&c, &basis)?);
    let (lam, mu) = start.partitions();
    let seed = uc_basis(lam, mu);
    let mut rhs = BTreeMap::new();
    for k in 0..=m1 {
        let v = uc_skew(&seed, Side::First, k);
        if !v.is_empty() {
            rhs.insert(-2 * k as i64, v);
        }
    }
    let diff = formal_diff(&lhs, &rhs);
    report.expect(
        diff.is_empty(),
        || json!({"relation": "skew", "lhs": formal_to_json(&lhs), "rhs": formal_to_json(&rhs)}),
    );

    let chains: Vec<u8> = if model.m2.is_some() { vec![1, 2] } else { vec![1] };
    for chain in chains {
        let t = monodromy(model, if chain == 1 { Monodromy::T1 } else { Monodromy::T2 })?;
        let phi0 = entry_constant(site_word(chain, 0, OpKind::Phi));
        let dag0 = entry_constant(site_word(chain, 0, OpKind::PhiDag));
        let a_inv = entry_dagger_inverted(t.a());
        let relations = [
            ("B = u A phi0+", t.b().clone(), entry_shift(&entry_mul(t.a(), &dag0), 1)),
            ("C = u^-1 phi0 A+(1/u)", t.c().clone(), entry_shift(&entry_mul(&phi0, &a_inv), -1)),
            ("D = phi0 A+(1/u) phi0+", t.d().clone(), entry_mul(&entry_mul(&phi0, &a_inv), &dag0)),
        ];
        for (name, left, right) in relations {
            let d = apply_entry_formal(&left, &basis)?.minus(&apply_entry_formal(&right, &basis)?);
            report.expect(d.is_zero(), || json!({"relation": name, "chain": chain, "residual": d.to_json()}));
        }
    }
    Ok(report)
}

/// `prod_j B_2(u_j) B_1(u_j) |0>` (only `B_1` on a single chain).
pub fn bethe_state(model: &PhaseModel, us: &[Rational]) -> Result<FockVector<Rational>> {
    let b1 = chain_entry(model, 1, EntryName::B)?;
    let b2 = match model.m2 {
        Some(_) => Some(chain_entry(model, 2, EntryName::B)?),
        None => None,
    };
    let mut v = model.vacuum();
    for u in us {
        v = apply_entry_at(&b1, u, &v)?;
        if let Some(b2) = &b2 {
            v = apply_entry_at(b2, u, &v)?;
        }
    }
    Ok(v)
}

/// One-particle-per-chain Bethe vector `B_2(u) B_1(u) |0>` with `u` formal.
pub fn bethe_state_formal(model: &PhaseModel) -> Result<FockVector<TruncSeries>> {
    let mut v = model.vacuum();
    v = apply_entry_formal(&chain_entry(model, 1, EntryName::B)?, &v)?;
    if model.m2.is_some() {
        v = apply_entry_formal(&chain_entry(model, 2, EntryName::B)?, &v)?;
    }
    Ok(v)
}

fn squares(us: &[Rational]) -> Vec<Rational> {
    us.iter().map(|u| u * u).collect()
}

fn product(us: &[Rational]) -> Rational {
    us.iter().fold(Rational::one(), |acc, u| acc * u)
}

fn check_points(us: &[Rational]) -> Result<()> {
    for (i, u) in us.iter().enumerate() {
        if u.is_zero() {
            return Err(Error::Singular("zero spectral parameter".into()));
        }
        for v in &us[i + 1..] {
            if u * u == v * v {
                return Err(Error::Singular(format!(
                    "u = {}, v = {} have equal squares",
                    rational_to_string(u),
                    rational_to_string(v)
                )));
            }
        }
    }
    Ok(())
}

/// `(prod u)^{-M1-M2} sum S_lam(u^2) S_mu(u^2) S_[lam,mu]` over `lam` in the `N x M1` box and
/// `mu` in the `N x M2` box (`mu` empty on a single chain).
pub fn bethe_expansion(model: &PhaseModel, us: &[Rational]) -> UcVector {
    let n = us.len();
    let sq = squares(us);
    let m2 = model.m2.unwrap_or(0);
    let pref = product(us).pow(-((model.m1 + m2) as i32));
    let mut out = UcVector::new();
    for lam in Partition::all_in_box(n, model.m1) {
        let sl = schur_eval(&lam, &sq);
        for mu in Partition::all_in_box(n, m2) {
            let c = &pref * &sl * schur_eval(&mu, &sq);
            uc_axpy(&mut out, &c, &uc_basis(lam.clone(), mu));
        }
    }
    out
}

pub fn bethe_expansion_check(model: &PhaseModel, us: &[Rational]) -> Result<CheckReport> {
    check_points(us)?;
    let lhs = project(&bethe_state(model, us)?);
    let rhs = bethe_expansion(model, us);
    let mut report = CheckReport::new("bethe", json!({"m1": model.m1, "m2": model.m2, "u": rats(us)}));
    let d = uc_diff(&lhs, &rhs);
    report
        .expect(d.is_empty(), || json!({"lhs": uc_to_json(&lhs), "rhs": uc_to_json(&rhs), "residual": uc_to_json(&d)}));
    Ok(report)
}

/// `H(t) v = sum_{k <= m} t^k h_k v` on the first partition, dropping rows longer than `m`.
pub fn quotient_h(v: &UcVector, t: &Rational, m: usize) -> UcVector {
    let mut out = UcVector::new();
    let mut tk = Rational::one();
    for k in 0..=m {
        uc_axpy(&mut out, &tk, &uc_pieri(v, Side::First, k, Some(m)));
        tk *= t;
    }
    out
}

/// `H^perp(t) v = sum_{k <= m} t^k h_k^perp v` on the first partition.
pub fn quotient_h_perp(v: &UcVector, t: &Rational, m: usize) -> UcVector {
    let mut out = UcVector::new();
    let mut tk = Rational::one();
    for k in 0..=m {
        uc_axpy(&mut out, &tk, &uc_skew(v, Side::First, k));
        tk *= t;
    }
    out
}

/// `u^{-M-1} H(u^2) + u^{M+1} H^perp(u^{-2})`, the projected `A_1 + D_1`.
pub fn transfer_op(v: &UcVector, u: &Rational, m: usize) -> UcVector {
    let e = (m + 1) as i32;
    let u2 = u * u;
    let mut out = UcVector::new();
    uc_axpy(&mut out, &u.pow(-e), &quotient_h(v, &u2, m));
    uc_axpy(&mut out, &u.pow(e), &quotient_h_perp(v, &u2.recip(), m));
    out
}

fn check_quotient(v: &UcVector, m: usize) -> Result<()> {
    if v.keys().any(|(l, _)| l.largest() > m) {
        return Err(Error::InvalidArgument(format!("vector has rows longer than {m}")));
    }
    Ok(())
}

/// Both sides of the exchange identity
/// `u1^{M+1} u2^{-M-1} H^perp(u1^-2) H(u2^2) =
///  f u1^{M+1} u2^{-M-1} H(u2^2) H^perp(u1^-2) - f u1^{-M-1} u2^{M+1} H(u1^2) H^perp(u2^-2)`,
/// `f = u1^2/(u1^2 - u2^2)`, applied to `p`.
pub fn exchange_sides(m: usize, u1: &Rational, u2: &Rational, p: &UcVector) -> Result<(UcVector, UcVector)> {
    let (f, _) = fg(u1, u2)?;
    check_quotient(p, m)?;
    let e = (m + 1) as i32;
    let (s1, s2) = (u1 * u1, u2 * u2);
    let w = u1.pow(e) * u2.pow(-e);
    let mut lhs = UcVector::new();
    uc_axpy(&mut lhs, &w, &quotient_h_perp(&quotient_h(p, &s2, m), &s1.recip(), m));
    let mut rhs = UcVector::new();
    uc_axpy(&mut rhs, &(&f * &w), &quotient_h(&quotient_h_perp(p, &s1.recip(), m), &s2, m));
    let w2 = u1.pow(-e) * u2.pow(e);
    uc_axpy(&mut rhs, &-(&f * &w2), &quotient_h(&quotient_h_perp(p, &s2.recip(), m), &s1, m));
    Ok((lhs, rhs))
}

/// Exchange identity on `p`, and commutativity of [`transfer_op`] at `u1` and `u2` on `p`.
pub fn exchange_identity_check(m: usize, u1: &Rational, u2: &Rational, p: &UcVector) -> Result<CheckReport> {
    let (lhs, rhs) = exchange_sides(m, u1, u2, p)?;
    let mut report = CheckReport::new(
        "exchange",
        json!({"m1": m, "u1": rational_to_string(u1), "u2": rational_to_string(u2), "p": uc_to_json(p)}),
    );
    let d = uc_diff(&lhs, &rhs);
    report.expect(d.is_empty(), || json!({"identity": "exchange", "lhs": uc_to_json(&lhs), "rhs": uc_to_json(&rhs)}));
    let ab = transfer_op(&transfer_op(p, u2, m), u1, m);
    let ba = transfer_op(&transfer_op(p, u1, m), u2, m);
    let d = uc_diff(&ab, &ba);
    report.expect(d.is_empty(), || json!({"identity": "commutativity", "residual": uc_to_json(&d)}));
    Ok(report)
}

/// Exchange identity and commutativity on every basis vector in the quotient up to `max_weight`,
/// at each sample pair.
pub fn exchange_sweep(m: usize, samples: &[(Rational, Rational)], max_weight: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("exchange", json!({"m1": m, "max_weight": max_weight, "samples": samples.len()}));
    for w in 0..=max_weight {
        for lam in Partition::all_of_weight(w) {
            if lam.largest() > m {
                continue;
            }
            let p = uc_basis(lam, Partition::empty());
            for (u1, u2) in samples {
                report.absorb(exchange_identity_check(m, u1, u2, &p)?);
            }
        }
    }
    Ok(report)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
}

/// The rational factor attached to the subset `s` under a reading.
pub fn subset_coefficient(us: &[Rational], s: &[usize], reading: SubsetReading) -> Rational {
    let sq = squares(us);
    let mut c = Rational::one();
    for &k in s {
        for j in 0..us.len() {
            let skip = match reading {
                SubsetReading::Complement => s.contains(&j),
                SubsetReading::AllOthers => j == k,
            };
            if !skip {
                c *= &sq[j] / (&sq[j] - &sq[k]);
            }
        }
    }
    c
}

/// `sum_S (u_S)^{-2M-2} c_S sum_{lam in |S| x M} S_lam(u_S^2) S_lam` (without the overall prefactor),
/// with `mu` summed as `S_mu(u^2)` over the `N x m2` box.
fn subset_sum(us: &[Rational], m1: usize, m2: usize, reading: SubsetReading) -> UcVector {
    let n = us.len();
    let sq = squares(us);
    let e = -2 * (m1 as i32 + 1);
    let mut out = UcVector::new();
    for s in subsets(n) {
        let us_s: Vec<Rational> = s.iter().map(|&i| us[i].clone()).collect();
        let sq_s: Vec<Rational> = s.iter().map(|&i| sq[i].clone()).collect();
        let w = product(&us_s).pow(e) * subset_coefficient(us, &s, reading);
        for lam in Partition::all_in_box(s.len(), m1) {
            let sl = &w * schur_eval(&lam, &sq_s);
            if sl.is_zero() {
                continue;
            }
            for mu in Partition::all_in_box(n, m2) {
                uc_axpy(&mut out, &(&sl * schur_eval(&mu, &sq)), &uc_basis(lam.clone(), mu));
            }
        }
    }
    out
}

/// Right side of the subset expansion of `prod_j (A_1 + D_1)(u_j) |0>` under a reading.
pub fn subset_expansion(us: &[Rational], m1: usize, reading: SubsetReading) -> UcVector {
    let pref = product(us).pow(m1 as i32 + 1);
    let mut out = UcVector::new();
    uc_axpy(&mut out, &pref, &subset_sum(us, m1, 0, reading));
    out
}

/// `prod_j (A_1 + D_1)(u_j)` on the vacuum with `N + 1` zero-energy particles, projected.
pub fn transfer_state(m1: usize, us: &[Rational]) -> Result<UcVector> {
    let model = PhaseModel::single_chain(m1);
    let t = monodromy(&model, Monodromy::T1)?;
    let tr = entry_add(t.a(), t.d());
    let mut v = FockVector::basis(model.headroom_state(us.len() as u32 + 1, 0));
    for u in us {
        v = apply_entry_at(&tr, u, &v)?;
    }
    Ok(project(&v))
}

/// Subset expansion: the Fock-space product of `A_1 + D_1` and the product of
/// [`transfer_op`] in the universal-character basis, against the subset sum. The
/// adopted reading decides `pass`; the other reading is reported alongside.
pub fn subset_expansion_check(us: &[Rational], m1: usize) -> Result<CheckReport> {
    check_points(us)?;
    let fock = transfer_state(m1, us)?;
    let mut direct = uc_basis(Partition::empty(), Partition::empty());
    for u in us {
        direct = transfer_op(&direct, u, m1);
    }
    let mut report = CheckReport::new("subset", json!({"m1": m1, "u": rats(us)}));
    let d = uc_diff(&fock, &direct);
    report.expect(d.is_empty(), || json!({"comparison": "fock vs basis operators", "residual": uc_to_json(&d)}));
    let mut outcomes = serde_json::Map::new();
    for reading in [SubsetReading::Complement, SubsetReading::AllOthers] {
        let rhs = subset_expansion(us, m1, reading);
        let d = uc_diff(&direct, &rhs);
        outcomes.insert(reading.name().into(), d.is_empty().into());
        if reading == SubsetReading::Complement {
            report.expect(
                d.is_empty(),
                || json!({"reading": reading.name(), "lhs": uc_to_json(&direct), "rhs": uc_to_json(&rhs)}),
            );
        }
    }
    report.note("reading", SubsetReading::Complement.name());
    report.note("reading_matches", Value::Object(outcomes));
    Ok(report)
}

/// `prod_j B(u_j)` with `B = A_2 B_1 + B_2 D_1`, applied to the vacuum with `N + 1`
/// zero-energy particles on each chain, projected.
pub fn full_psi_state(model: &PhaseModel, us: &[Rational]) -> Result<UcVector> {
    let t = monodromy(model, Monodromy::Full)?;
    let h = us.len() as u32 + 1;
    let mut v = FockVector::basis(model.headroom_state(h, h));
    for u in us {
        v = apply_entry_at(t.b(), u, &v)?;
    }
    Ok(project(&v))
}

/// `(prod u)^{M1+1-M2} sum_S (u_S)^{-2M1-2} c_S sum_{lam,mu} S_lam(u_S^2) S_mu(u^2) S_[lam,mu]`.
pub fn full_psi_expansion(model: &PhaseModel, us: &[Rational], reading: SubsetReading) -> UcVector {
    let m2 = model.m2.unwrap_or(0);
    let pref = product(us).pow(model.m1 as i32 + 1 - m2 as i32);
    let mut out = UcVector::new();
    uc_axpy(&mut out, &pref, &subset_sum(us, model.m1, m2, reading));
    out
}

pub fn full_psi_check(model: &PhaseModel, us: &[Rational]) -> Result<CheckReport> {
    check_points(us)?;
    if model.m2.is_none() {
        return Err(Error::InvalidArgument("full vector needs two chains".into()));
    }
    let lhs = full_psi_state(model, us)?;
    let mut report = CheckReport::new("full-psi", json!({"m1": model.m1, "m2": model.m2, "u": rats(us)}));
    let mut outcomes = serde_json::Map::new();
    for reading in [SubsetReading::Complement, SubsetReading::AllOthers] {
        let rhs = full_psi_expansion(model, us, reading);
        let d = uc_diff(&lhs, &rhs);
        outcomes.insert(reading.name().into(), d.is_empty().into());
        if reading == SubsetReading::Complement {
            report.expect(
                d.is_empty(),
                || json!({"reading": reading.name(), "lhs": uc_to_json(&lhs), "rhs": uc_to_json(&rhs)}),
            );
        }
    }
    report.note("reading", SubsetReading::Complement.name());
    report.note("reading_matches", Value::Object(outcomes));
    Ok(report)
}

/// `[B_1(u), B_2(v)] = 0` and `[B(u), B(v)] = 0` on every state with at most `cap` particles.
pub fn creation_commutativity_check(
    model: &PhaseModel,
    samples: &[(Rational, Rational)],
    cap: usize,
) -> Result<CheckReport> {
    let t = monodromy(model, Monodromy::Full)?;
    let b1 = chain_entry(model, 1, EntryName::B)?;
    let b2 = if model.m2.is_some() { Some(chain_entry(model, 2, EntryName::B)?) } else { None };
    let mut report = CheckReport::new("creation-commutativity", json!({"m1": model.m1, "m2": model.m2, "cap": cap}));
    for s in model.states_up_to(cap) {
        let v = FockVector::<Rational>::basis(s.clone());
        for (u, w) in samples {
            let mut pairs = vec![("B(u)B(v)", t.b(), t.b())];
            if let Some(b2) = &b2 {
                pairs.push(("B1(u)B2(v)", &b1, b2));
            }
            for (name, x, y) in pairs {
                let xy = apply_entry_at(x, u, &apply_entry_at(y, w, &v)?)?;
                let yx = apply_entry_at(y, w, &apply_entry_at(x, u, &v)?)?;
                let d = xy.minus(&yx);
                report.expect(d.is_zero(), || {
                    json!({"pair": name, "state": s.to_string(), "u": rational_to_string(u), "v": rational_to_string(w)})
                });
            }
        }
    }
    Ok(report)
}
