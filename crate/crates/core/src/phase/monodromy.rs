//! L-matrices, monodromy matrices with u-Laurent operator entries, and the RTT relation.

use super::{apply_weighted, FockVector, OccState, OpKind, OpSum, OpWord, PhaseModel, SiteOp};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::scalars::{rational_to_string, Coeff, Rational, TruncSeries};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::collections::BTreeMap;

/// An operator-valued Laurent polynomial `sum_e u^e O_e`.
pub type LaurentEntry = BTreeMap<i32, OpSum>;

fn entry_add_term(e: &mut LaurentEntry, exp: i32, op: &OpSum) {
    let slot = e.entry(exp).or_default();
    *slot = slot.plus(op);
    if slot.is_zero() {
        e.remove(&exp);
    }
}

pub fn entry_add(a: &LaurentEntry, b: &LaurentEntry) -> LaurentEntry {
    let mut out = a.clone();
    for (&e, op) in b {
        entry_add_term(&mut out, e, op);
    }
    out
}

/// `a * b`: `b` acts first.
pub fn entry_mul(a: &LaurentEntry, b: &LaurentEntry) -> LaurentEntry {
    let mut out = LaurentEntry::new();
    for (&ea, oa) in a {
        for (&eb, ob) in b {
            entry_add_term(&mut out, ea + eb, &oa.then(ob));
        }
    }
    out
}

/// `u^k a`.
pub fn entry_shift(a: &LaurentEntry, k: i32) -> LaurentEntry {
    a.iter().map(|(&e, op)| (e + k, op.clone())).collect()
}

/// `A^dagger(1/u)` for `A(u) = sum_e u^e O_e`, i.e. `sum_e u^{-e} O_e^dagger`.
pub fn entry_dagger_inverted(a: &LaurentEntry) -> LaurentEntry {
    a.iter().map(|(&e, op)| (-e, op.dagger())).collect()
}

/// A u-independent operator as an entry.
pub fn entry_constant(op: OpSum) -> LaurentEntry {
    let mut e = LaurentEntry::new();
    if !op.is_zero() {
        e.insert(0, op);
    }
    e
}

pub(crate) fn site_word(chain: u8, site: usize, kind: OpKind) -> OpSum {
    OpSum::word(OpWord::single(SiteOp::new(chain, site, kind)))
}

/// Evaluates an entry at a rational point and applies it.
pub fn apply_entry_at(entry: &LaurentEntry, u: &Rational, v: &FockVector<Rational>) -> Result<FockVector<Rational>> {
    if u.is_zero() && entry.keys().any(|&e| e < 0) {
        return Err(Error::Singular("negative power of u at u = 0".into()));
    }
    let mut collapsed = OpSum::zero();
    for (&e, op) in entry {
        collapsed = collapsed.plus(&op.scale(&u.pow(e)));
    }
    collapsed.apply(v)
}

/// Applies an entry with `u` kept formal; amplitudes are exact Laurent polynomials in `u`.
pub fn apply_entry_formal(entry: &LaurentEntry, v: &FockVector<TruncSeries>) -> Result<FockVector<TruncSeries>> {
    let mut grouped: BTreeMap<&OpWord, TruncSeries> = BTreeMap::new();
    for (&e, op) in entry {
        for (w, c) in op.terms() {
            let m = TruncSeries::monomial("u", e as i64, c.clone(), None);
            let slot = grouped.entry(w).or_insert_with(TruncSeries::zero);
            *slot = slot.plus(&m);
        }
    }
    apply_weighted(grouped.into_iter().filter(|(_, c)| !c.is_zero()), v)
}

/// 2x2 matrix of u-Laurent operator entries.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorLaurent {
    entries: [[LaurentEntry; 2]; 2],
}

impl OperatorLaurent {
    pub fn identity() -> Self {
        let one = entry_constant(OpSum::word(OpWord::identity()));
        OperatorLaurent { entries: [[one.clone(), LaurentEntry::new()], [LaurentEntry::new(), one]] }
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentEntry {
        &self.entries[i][j]
    }

    pub fn a(&self) -> &LaurentEntry {
        &self.entries[0][0]
    }
    pub fn b(&self) -> &LaurentEntry {
        &self.entries[0][1]
    }
    pub fn c(&self) -> &LaurentEntry {
        &self.entries[1][0]
    }
    pub fn d(&self) -> &LaurentEntry {
        &self.entries[1][1]
    }

    /// `self * other`; in every product the entry of `other` acts first.
    pub fn mul(&self, other: &OperatorLaurent) -> OperatorLaurent {
        let mut entries: [[LaurentEntry; 2]; 2] = Default::default();
        for (i, row) in entries.iter_mut().enumerate() {
            for (k, slot) in row.iter_mut().enumerate() {
                *slot = entry_add(
                    &entry_mul(&self.entries[i][0], &other.entries[0][k]),
                    &entry_mul(&self.entries[i][1], &other.entries[1][k]),
                );
            }
        }
        OperatorLaurent { entries }
    }

    /// Smallest and largest u-exponent over all entries.
    pub fn exponent_range(&self) -> Option<(i32, i32)> {
        let all: Vec<i32> = self.entries.iter().flatten().flat_map(|e| e.keys().copied()).collect();
        Some((*all.iter().min()?, *all.iter().max()?))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entry = |e: &LaurentEntry| {
            let mut m = serde_json::Map::new();
            for (exp, op) in e {
                let terms: Vec<serde_json::Value> = op
                    .terms()
                    .iter()
                    .map(|(w, c)| json!({"c": rational_to_string(c), "word": w.to_string()}))
                    .collect();
                m.insert(exp.to_string(), terms.into());
            }
            serde_json::Value::Object(m)
        };
        json!({
            "A": entry(self.a()), "B": entry(self.b()),
            "C": entry(self.c()), "D": entry(self.d()),
        })
    }
}

/// `[[1/u, phi+_i], [phi_i, u]]` on site `i` of a chain.
pub fn l_matrix(chain: u8, site: usize) -> OperatorLaurent {
    let id = OpSum::word(OpWord::identity());
    let mut a = LaurentEntry::new();
    a.insert(-1, id.clone());
    let mut d = LaurentEntry::new();
    d.insert(1, id);
    OperatorLaurent {
        entries: [
            [a, entry_constant(site_word(chain, site, OpKind::PhiDag))],
            [entry_constant(site_word(chain, site, OpKind::Phi)), d],
        ],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Monodromy {
    T1,
    T2,
    Full,
}

/// `T_i = L_{M_i} ... L_0` on chain `i`, and `T = T_2 T_1`.
pub fn monodromy(model: &PhaseModel, which: Monodromy) -> Result<OperatorLaurent> {
    let chain = |c: u8| (0..model.sites(c)).fold(OperatorLaurent::identity(), |acc, site| l_matrix(c, site).mul(&acc));
    match which {
        Monodromy::T1 => Ok(chain(1)),
        Monodromy::T2 if model.m2.is_none() => Err(Error::InvalidArgument("model has no second chain".into())),
        Monodromy::T2 => Ok(chain(2)),
        Monodromy::Full => Ok(chain(2).mul(&chain(1))),
    }
}

/// `f = u^2/(u^2 - v^2)`, `g = uv/(u^2 - v^2)`.
pub fn fg(u: &Rational, v: &Rational) -> Result<(Rational, Rational)> {
    let den = u * u - v * v;
    if den.is_zero() || u.is_zero() || v.is_zero() {
        return Err(Error::Singular(format!("u = {}, v = {}", rational_to_string(u), rational_to_string(v))));
    }
    Ok((u * u / &den, u * v / &den))
}

/// The 4x4 R-matrix in the basis `(a, b) -> 2a + b`.
pub fn r_matrix(u: &Rational, v: &Rational) -> Result<[[Rational; 4]; 4]> {
    let (f, g) = fg(u, v)?;
    let z = Rational::zero;
    Ok([[f.clone(), z(), z(), z()], [z(), g.clone(), Rational::one(), z()], [z(), z(), g, z()], [z(), z(), z(), f]])
}

fn sample_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p: i64 = rng.gen_range(1..=9);
    let q: i64 = rng.gen_range(1..=7);
    let sign = if rng.gen_bool(0.25) { -1 } else { 1 };
    Rational::new((sign * p).into(), q.into())
}

/// Seeded nonsingular sample pairs `(u, v)` with `u^2 != v^2`, all distinct.
pub fn sample_pairs(count: usize, seed: u64) -> Vec<(Rational, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(Rational, Rational)> = Vec::new();
    while out.len() < count {
        let (u, v) = (sample_rational(&mut rng), sample_rational(&mut rng));
        if &u * &u != &v * &v && !out.contains(&(u.clone(), v.clone())) {
            out.push((u, v));
        }
    }
    out
}

/// Seeded positive points with pairwise distinct squares.
pub fn sample_points(count: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < count {
        let u = num_traits::Signed::abs(&sample_rational(&mut rng));
        if !out.contains(&u) {
            out.push(u);
        }
    }
    out
}

/// Number of sample points used for identities with rational-function coefficients.
pub fn default_sample_count(model: &PhaseModel) -> usize {
    (2 * (model.m1 + model.m2.unwrap_or(0)) + 5).max(7)
}

/// `R(u,v) (T(u) (x) T(v)) = (T(v) (x) T(u)) R(u,v)` on every basis state with at most `cap` particles.
pub fn rtt_check(model: &PhaseModel, samples: &[(Rational, Rational)], cap: usize) -> Result<CheckReport> {
    let t = monodromy(model, Monodromy::Full)?;
    let mut report = CheckReport::new(
        "rtt",
        json!({
            "m1": model.m1, "m2": model.m2, "cap": cap,
            "samples": samples.iter().map(|(u, v)| json!([rational_to_string(u), rational_to_string(v)])).collect::<Vec<_>>(),
        }),
    );
    let states = model.states_up_to(cap);
    for (u, v) in samples {
        let r = r_matrix(u, v)?;
        // prod[x][y][a][c][b][d] = T_ac(x) T_bd(y) s with x, y in {u, v}
        let pts = [u, v];
        for s in &states {
            let basis = FockVector::<Rational>::basis(s.clone());
            let mut single: Vec<[[FockVector<Rational>; 2]; 2]> = Vec::new();
            for p in pts {
                let mut m: [[FockVector<Rational>; 2]; 2] = Default::default();
                for (b, row) in m.iter_mut().enumerate() {
                    for (d, slot) in row.iter_mut().enumerate() {
                        *slot = apply_entry_at(t.entry(b, d), p, &basis)?;
                    }
                }
                single.push(m);
            }
            // tensor(x, y)[I][J] = T_{a c}(x) T_{b d}(y) s with I = 2a + b, J = 2c + d
            let tensor = |x: usize, y: usize| -> Result<Vec<Vec<FockVector<Rational>>>> {
                let mut out = vec![vec![FockVector::zero(); 4]; 4];
                for (i, row) in out.iter_mut().enumerate() {
                    for (j, slot) in row.iter_mut().enumerate() {
                        let (a, b, c, d) = (i / 2, i % 2, j / 2, j % 2);
                        *slot = apply_entry_at(t.entry(a, c), pts[x], &single[y][b][d])?;
                    }
                }
                Ok(out)
            };
            let tuv = tensor(0, 1)?;
            let tvu = tensor(1, 0)?;
            for i in 0..4 {
                for j in 0..4 {
                    let mut diff = FockVector::<Rational>::zero();
                    for k in 0..4 {
                        diff = diff.plus(&tuv[k][j].scale(&r[i][k]));
                        diff = diff.minus(&tvu[i][k].scale(&r[k][j]));
                    }
                    report.expect(diff.is_zero(), || {
                        json!({
                            "u": rational_to_string(u), "v": rational_to_string(v),
                            "state": s.to_string(), "entry": [i, j], "residual": diff.to_json(),
                        })
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Basis state helper for tests and callers.
pub fn state(s: &str) -> Result<OccState> {
    s.parse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn u_pow(e: i32) -> LaurentEntry {
        let mut m = LaurentEntry::new();
        m.insert(e, OpSum::word(OpWord::identity()));
        m
    }

    #[test]
    fn l_matrix_shape() {
        let l = l_matrix(1, 0);
        assert_eq!(l.a(), &u_pow(-1));
        assert_eq!(l.d(), &u_pow(1));
        assert_eq!(l.b().keys().copied().collect::<Vec<_>>(), vec![0]);
        assert_eq!(l.c(), &entry_constant(site_word(1, 0, OpKind::Phi)));
    }

    #[test]
    fn small_monodromies() {
        let t = monodromy(&PhaseModel::single_chain(0), Monodromy::T1).unwrap();
        assert_eq!(t, l_matrix(1, 0));
        let t1 = monodromy(&PhaseModel::single_chain(1), Monodromy::T1).unwrap();
        let mut b = LaurentEntry::new();
        b.insert(-1, site_word(1, 0, OpKind::PhiDag));
        b.insert(1, site_word(1, 1, OpKind::PhiDag));
        assert_eq!(t1.b(), &b);
        let model = PhaseModel::two_chain(1, 2);
        let full = monodromy(&model, Monodromy::Full).unwrap();
        let t1 = monodromy(&model, Monodromy::T1).unwrap();
        let t2 = monodromy(&model, Monodromy::T2).unwrap();
        let expected = entry_add(&entry_mul(t2.a(), t1.b()), &entry_mul(t2.b(), t1.d()));
        assert_eq!(full.b(), &expected);
        let (lo, hi) = full.exponent_range().unwrap();
        assert!(lo >= -5 && hi <= 5);
    }

    #[test]
    fn r_matrix_examples() {
        let r = r_matrix(&rat(2, 1), &rat(1, 1)).unwrap();
        assert_eq!(r[0][0], rat(4, 3));
        assert_eq!(r[1][1], rat(2, 3));
        assert_eq!(r[1][2], rat(1, 1));
        assert!(r_matrix(&rat(1, 1), &rat(1, 1)).is_err());
        assert_eq!(fg(&rat(-3, 1), &rat(2, 1)).unwrap().0, fg(&rat(3, 1), &rat(2, 1)).unwrap().0);
    }

    #[test]
    fn rtt_small() {
        let samples = sample_pairs(7, 1);
        assert!(rtt_check(&PhaseModel::single_chain(0), &samples, 1).unwrap().pass);
        assert!(rtt_check(&PhaseModel::two_chain(0, 0), &samples, 1).unwrap().pass);
        assert!(rtt_check(&PhaseModel::two_chain(1, 1), &samples[..2], 2).unwrap().pass);
        let bad = [(rat(2, 1), rat(2, 1))];
        assert!(rtt_check(&PhaseModel::two_chain(0, 0), &bad, 1).is_err());
    }

    #[test]
    fn samples_are_nonsingular() {
        for (u, v) in sample_pairs(20, 7) {
            assert!(fg(&u, &v).is_ok());
        }
        let pts = sample_points(6, 3);
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                assert_ne!(a * a, b * b);
            }
        }
    }
}
