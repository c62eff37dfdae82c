//! The two-chain phase model: occupation states, phase operators, monodromy
//! matrices and the dictionary to universal characters.

mod checks;
mod monodromy;

pub use checks::*;
pub use monodromy::*;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyring::{Cutoffs, Poly};
use crate::scalars::{Coeff, Rational, TruncSeries};
use crate::symfunc::{universal_character_jt, UcVector};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Site counts of the model: `m1 + 1` sites on chain 1 and, when present, `m2 + 1` on chain 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PhaseModel {
    pub m1: usize,
    pub m2: Option<usize>,
}

impl PhaseModel {
    pub fn two_chain(m1: usize, m2: usize) -> Self {
        PhaseModel { m1, m2: Some(m2) }
    }

    pub fn single_chain(m: usize) -> Self {
        PhaseModel { m1: m, m2: None }
    }

    pub fn sites(&self, chain: u8) -> usize {
        match chain {
            1 => self.m1 + 1,
            _ => self.m2.map_or(0, |m| m + 1),
        }
    }

    pub fn vacuum_state(&self) -> OccState {
        OccState { chain1: vec![0; self.sites(1)], chain2: vec![0; self.sites(2)] }
    }

    /// Vacuum with `n0` and `m0` particles parked on the zero-energy sites.
    pub fn headroom_state(&self, n0: u32, m0: u32) -> OccState {
        let mut s = self.vacuum_state();
        s.chain1[0] = n0;
        if !s.chain2.is_empty() {
            s.chain2[0] = m0;
        }
        s
    }

    pub fn vacuum<C: Coeff>(&self) -> FockVector<C> {
        FockVector::basis(self.vacuum_state())
    }

    /// Every basis state with at most `particles` particles in total.
    pub fn states_up_to(&self, particles: usize) -> Vec<OccState> {
        let n = self.sites(1) + self.sites(2);
        let mut out = Vec::new();
        fn rec(slots: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == slots {
                out.push(cur.clone());
                return;
            }
            for k in 0..=rem {
                cur.push(k);
                rec(slots, rem - k, cur, out);
                cur.pop();
            }
        }
        let mut flat = Vec::new();
        rec(n, particles as u32, &mut Vec::new(), &mut flat);
        for f in flat {
            let (a, b) = f.split_at(self.sites(1));
            out.push(OccState { chain1: a.to_vec(), chain2: b.to_vec() });
        }
        out.sort();
        out
    }

    pub fn check_state(&self, s: &OccState) -> Result<()> {
        if s.chain1.len() != self.sites(1) || s.chain2.len() != self.sites(2) {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }
}

/// Occupation numbers `n_0..n_{M1}` and `m_0..m_{M2}`; chain 2 is empty in a single-chain model.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccState {
    chain1: Vec<u32>,
    chain2: Vec<u32>,
}

impl OccState {
    pub fn new(chain1: Vec<u32>, chain2: Vec<u32>) -> Self {
        OccState { chain1, chain2 }
    }

    pub fn chain(&self, chain: u8) -> &[u32] {
        if chain == 1 {
            &self.chain1
        } else {
            &self.chain2
        }
    }

    fn chain_mut(&mut self, chain: u8) -> &mut Vec<u32> {
        if chain == 1 {
            &mut self.chain1
        } else {
            &mut self.chain2
        }
    }

    pub fn total(&self, chain: u8) -> u32 {
        self.chain(chain).iter().sum()
    }

    /// `(lam, mu)` with `lam = 1^{n_1} 2^{n_2} ...`; zero-energy sites are ignored.
    pub fn partitions(&self) -> (Partition, Partition) {
        let part = |occ: &[u32]| {
            let mut parts = Vec::new();
            for (i, &n) in occ.iter().enumerate().skip(1).rev() {
                parts.extend(std::iter::repeat_n(i, n as usize));
            }
            Partition::new(parts).expect("parts are emitted in decreasing order")
        };
        (part(&self.chain1), part(&self.chain2))
    }
}

impl fmt::Display for OccState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(&self.chain1), join(&self.chain2))
    }
}

impl fmt::Debug for OccState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{self}>")
    }
}

impl FromStr for OccState {
    type Err = Error;

    /// `n0,n1,...|m0,m1,...`; the part after `|` may be empty or missing.
    fn from_str(s: &str) -> Result<Self> {
        let parse = |part: &str| -> Result<Vec<u32>> {
            if part.trim().is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("occupation `{t}`"))))
                .collect()
        };
        let (a, b) = s.split_once('|').unwrap_or((s, ""));
        Ok(OccState::new(parse(a)?, parse(b)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpKind {
    Phi,
    PhiDag,
    Number,
    VacuumProj,
    Identity,
}

/// A phase operator acting on one site of one chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SiteOp {
    pub chain: u8,
    pub site: usize,
    pub kind: OpKind,
}

impl SiteOp {
    pub fn new(chain: u8, site: usize, kind: OpKind) -> Self {
        SiteOp { chain, site, kind }
    }

    fn dagger(self) -> SiteOp {
        let kind = match self.kind {
            OpKind::Phi => OpKind::PhiDag,
            OpKind::PhiDag => OpKind::Phi,
            k => k,
        };
        SiteOp { kind, ..self }
    }

    /// Returns the scalar factor and updates the state, or `None` when the result is zero.
    fn act(&self, s: &mut OccState) -> Result<Option<i64>> {
        let occ = s.chain_mut(self.chain);
        let len = occ.len();
        let n = occ.get_mut(self.site).ok_or(Error::SiteOutOfRange { chain: self.chain, site: self.site, len })?;
        Ok(match self.kind {
            OpKind::Phi if *n == 0 => None,
            OpKind::Phi => {
                *n -= 1;
                Some(1)
            }
            OpKind::PhiDag => {
                *n += 1;
                Some(1)
            }
            OpKind::Number if *n == 0 => None,
            OpKind::Number => Some(*n as i64),
            OpKind::VacuumProj => (*n == 0).then_some(1),
            OpKind::Identity => Some(1),
        })
    }
}

impl fmt::Display for SiteOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OpKind::Phi => "phi",
            OpKind::PhiDag => "phi+",
            OpKind::Number => "N",
            OpKind::VacuumProj => "pi",
            OpKind::Identity => "id",
        };
        write!(f, "{name}[{}.{}]", self.chain, self.site)
    }
}

/// Product of site operators written left to right; the rightmost acts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OpWord(Vec<SiteOp>);

impl OpWord {
    pub fn identity() -> Self {
        OpWord(Vec::new())
    }

    pub fn single(op: SiteOp) -> Self {
        OpWord::from_ops(vec![op])
    }

    /// Drops identities and groups operators by site; operators on different sites commute.
    pub fn from_ops(mut ops: Vec<SiteOp>) -> Self {
        ops.retain(|o| o.kind != OpKind::Identity);
        ops.sort_by_key(|o| (o.chain, o.site));
        OpWord(ops)
    }

    pub fn ops(&self) -> &[SiteOp] {
        &self.0
    }

    /// `self * other`: `other` acts first.
    pub fn then(&self, other: &OpWord) -> OpWord {
        let mut ops = self.0.clone();
        ops.extend_from_slice(&other.0);
        OpWord::from_ops(ops)
    }

    /// Hermitian adjoint: reversed order with `phi` and `phi+` swapped.
    pub fn dagger(&self) -> OpWord {
        OpWord::from_ops(self.0.iter().rev().map(|o| o.dagger()).collect())
    }

    pub fn apply_state(&self, s: &OccState) -> Result<Option<(i64, OccState)>> {
        let mut state = s.clone();
        let mut factor = 1i64;
        for op in self.0.iter().rev() {
            match op.act(&mut state)? {
                Some(k) => factor *= k,
                None => return Ok(None),
            }
        }
        Ok(Some((factor, state)))
    }
}

impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.0.iter().map(SiteOp::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Finite linear combination of basis states.
#[derive(Clone, PartialEq)]
pub struct FockVector<C: Coeff = Rational> {
    terms: BTreeMap<OccState, C>,
}

impl<C: Coeff> Default for FockVector<C> {
    fn default() -> Self {
        FockVector { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> FockVector<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(s: OccState) -> Self {
        let mut v = Self::zero();
        v.add_term(s, C::one());
        v
    }

    pub fn terms(&self) -> &BTreeMap<OccState, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, s: OccState, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&s) {
            Some(slot) => {
                *slot = slot.plus(&c);
                if slot.is_zero() {
                    self.terms.remove(&s);
                }
            }
            None => {
                self.terms.insert(s, c);
            }
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&C::one().negated()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (s, a) in &self.terms {
            out.add_term(s.clone(), a.times(c));
        }
        out
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (s, a) in &self.terms {
            out.add_term(s.clone(), a.scaled(r));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        for (s, c) in &self.terms {
            m.insert(s.to_string(), c.to_json());
        }
        serde_json::Value::Object(m)
    }
}

impl<C: Coeff> fmt::Debug for FockVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("({c}){s:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Applies one operator word to a vector.
pub fn site_apply<C: Coeff>(word: &OpWord, v: &FockVector<C>) -> Result<FockVector<C>> {
    let mut out = FockVector::zero();
    for (s, c) in &v.terms {
        if let Some((k, t)) = word.apply_state(s)? {
            out.add_term(t, c.scaled(&Rational::from_integer(BigInt::from(k))));
        }
    }
    Ok(out)
}

/// `sum_w c_w w(v)` accumulated in place.
pub(crate) fn apply_weighted<'a, C, I>(words: I, v: &FockVector<C>) -> Result<FockVector<C>>
where
    C: Coeff,
    I: IntoIterator<Item = (&'a OpWord, C)>,
{
    let mut out = FockVector::zero();
    for (w, c) in words {
        for (s, a) in &v.terms {
            if let Some((k, t)) = w.apply_state(s)? {
                out.add_term(t, a.times(&c).scaled(&Rational::from_integer(BigInt::from(k))));
            }
        }
    }
    Ok(out)
}

/// Linear combination of operator words with rational coefficients.
#[derive(Clone, PartialEq, Default, Debug)]
pub struct OpSum(BTreeMap<OpWord, Rational>);

impl OpSum {
    pub fn zero() -> Self {
        OpSum::default()
    }

    pub fn word(w: OpWord) -> Self {
        let mut s = OpSum::zero();
        s.add(w, Rational::from_integer(1.into()));
        s
    }

    pub fn terms(&self) -> &BTreeMap<OpWord, Rational> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&mut self, w: OpWord, c: Rational) {
        use num_traits::Zero;
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(w.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&w);
        }
    }

    pub fn plus(&self, other: &OpSum) -> OpSum {
        let mut out = self.clone();
        for (w, c) in &other.0 {
            out.add(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> OpSum {
        let mut out = OpSum::zero();
        for (w, c) in &self.0 {
            out.add(w.clone(), c * r);
        }
        out
    }

    /// `self * other`: `other` acts first.
    pub fn then(&self, other: &OpSum) -> OpSum {
        let mut out = OpSum::zero();
        for (a, ca) in &self.0 {
            for (b, cb) in &other.0 {
                out.add(a.then(b), ca * cb);
            }
        }
        out
    }

    pub fn dagger(&self) -> OpSum {
        let mut out = OpSum::zero();
        for (w, c) in &self.0 {
            out.add(w.dagger(), c.clone());
        }
        out
    }

    pub fn apply<C: Coeff>(&self, v: &FockVector<C>) -> Result<FockVector<C>> {
        apply_weighted(self.0.iter().map(|(w, c)| (w, C::from_rational(c.clone()))), v)
    }
}

/// `H = -1/2 sum_i (phi+_i phi_{i+1} + phi_i phi+_{i+1} - 2 N_i)` on a periodic chain of `m + 1` sites.
pub fn hamiltonian(chain: u8, m: usize) -> OpSum {
    let sites = m + 1;
    let mut h = OpSum::zero();
    let half = Rational::new((-1).into(), 2.into());
    for i in 0..sites {
        let j = (i + 1) % sites;
        let op = |site, kind| SiteOp::new(chain, site, kind);
        h.add(OpWord::from_ops(vec![op(i, OpKind::PhiDag), op(j, OpKind::Phi)]), half.clone());
        h.add(OpWord::from_ops(vec![op(i, OpKind::Phi), op(j, OpKind::PhiDag)]), half.clone());
        h.add(OpWord::single(op(i, OpKind::Number)), Rational::from_integer(1.into()));
    }
    h
}

/// Applies the chain-1 Hamiltonian of a single chain with `m + 1` sites.
pub fn hamiltonian_apply<C: Coeff>(m: usize, v: &FockVector<C>) -> Result<FockVector<C>> {
    hamiltonian(1, m).apply(v)
}

/// Total particle number on one chain (or both when `chain` is `None`).
pub fn number_operator(model: &PhaseModel, chain: Option<u8>) -> OpSum {
    let mut n = OpSum::zero();
    for c in [1u8, 2] {
        if chain.is_some_and(|k| k != c) {
            continue;
        }
        for site in 0..model.sites(c) {
            n.add(OpWord::single(SiteOp::new(c, site, OpKind::Number)), Rational::from_integer(1.into()));
        }
    }
    n
}

/// `(lam, mu, S_[lam,mu])` for a basis state.
pub fn jmath_map(s: &OccState, cutoffs: Cutoffs) -> Result<(Partition, Partition, Poly)> {
    let (lam, mu) = s.partitions();
    let p = universal_character_jt(&lam, &mu, cutoffs)?;
    Ok((lam, mu, p))
}

/// Projection forgetting zero-energy occupations, in the universal-character basis.
pub fn project(v: &FockVector<Rational>) -> UcVector {
    let mut out = UcVector::new();
    for (s, c) in v.terms() {
        let key = s.partitions();
        let slot = out.entry(key.clone()).or_insert_with(|| Rational::from_integer(0.into()));
        *slot += c;
        if num_traits::Zero::is_zero(slot) {
            out.remove(&key);
        }
    }
    out
}

/// Projection of a vector with u-Laurent amplitudes, split by u-exponent.
pub fn project_formal(v: &FockVector<TruncSeries>) -> BTreeMap<i64, UcVector> {
    let mut out: BTreeMap<i64, UcVector> = BTreeMap::new();
    for (s, c) in v.terms() {
        let key = s.partitions();
        for (&e, a) in c.terms() {
            let bucket = out.entry(e).or_default();
            let slot = bucket.entry(key.clone()).or_insert_with(|| Rational::from_integer(0.into()));
            *slot += a;
            if num_traits::Zero::is_zero(slot) {
                bucket.remove(&key);
            }
        }
    }
    out.retain(|_, b| !b.is_empty());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn st(s: &str) -> OccState {
        s.parse().unwrap()
    }

    #[test]
    fn site_operators() {
        let model = PhaseModel::two_chain(2, 1);
        let vac: FockVector = model.vacuum();
        let up = site_apply(&OpWord::single(SiteOp::new(1, 0, OpKind::PhiDag)), &vac).unwrap();
        assert_eq!(up, FockVector::basis(st("1,0,0|0,0")));
        assert!(site_apply(&OpWord::single(SiteOp::new(1, 1, OpKind::Phi)), &vac).unwrap().is_zero());
        let bad = OpWord::single(SiteOp::new(2, 5, OpKind::Phi));
        assert!(matches!(site_apply(&bad, &vac), Err(Error::SiteOutOfRange { .. })));
        let v = FockVector::<Rational>::basis(st("2,0,1|1,3"));
        let phi = SiteOp::new(1, 0, OpKind::Phi);
        let dag = SiteOp::new(1, 0, OpKind::PhiDag);
        // phi phi+ = 1 and phi+ phi = 1 - pi
        let w = OpWord::from_ops(vec![phi, dag]);
        assert_eq!(site_apply(&w, &v).unwrap(), v);
        let mut s = OpSum::word(OpWord::from_ops(vec![dag, phi]));
        s.add(OpWord::identity(), Rational::from_integer((-1).into()));
        s.add(OpWord::single(SiteOp::new(1, 0, OpKind::VacuumProj)), Rational::from_integer(1.into()));
        assert!(s.apply(&v).unwrap().is_zero());
        assert!(s.apply(&FockVector::<Rational>::basis(st("0,1,0|0,0"))).unwrap().is_zero());
    }

    #[test]
    fn words_canonicalize() {
        let a = SiteOp::new(2, 0, OpKind::Phi);
        let b = SiteOp::new(1, 1, OpKind::PhiDag);
        let c = SiteOp::new(1, 1, OpKind::Phi);
        assert_eq!(OpWord::from_ops(vec![a, b, c]), OpWord::from_ops(vec![b, c, a]));
        assert_ne!(OpWord::from_ops(vec![b, c]), OpWord::from_ops(vec![c, b]));
        assert_eq!(OpWord::from_ops(vec![b, c]).dagger(), OpWord::from_ops(vec![b, c]));
    }

    #[test]
    fn hamiltonian_examples() {
        let model = PhaseModel::single_chain(1);
        let vac: FockVector = model.vacuum();
        assert!(hamiltonian_apply(1, &vac).unwrap().is_zero());
        let v = FockVector::<Rational>::basis(st("1,0|"));
        let mut expected = FockVector::basis(st("1,0|"));
        expected.add_term(st("0,1|"), Rational::from_integer((-1).into()));
        assert_eq!(hamiltonian_apply(1, &v).unwrap(), expected);
    }

    #[test]
    fn jmath_examples() {
        let cut = Cutoffs::new(6, 6);
        let (l, m, _) = jmath_map(&st("1,2,1|0,1"), cut).unwrap();
        assert_eq!((l, m), (part![2, 1, 1], part![1]));
        let (l, m, p) = jmath_map(&st("0,0|0,0"), cut).unwrap();
        assert_eq!((l.clone(), m.clone()), (part![], part![]));
        assert_eq!(p, Poly::one(cut));
        let (l2, m2, _) = jmath_map(&st("5,0|3,0"), cut).unwrap();
        assert_eq!((l2, m2), (l, m));
    }

    #[test]
    fn state_roundtrip() {
        let s = st("1,2,1|0,1");
        assert_eq!(s.to_string(), "1,2,1|0,1");
        assert_eq!(st("3,0|"), OccState::new(vec![3, 0], vec![]));
        assert_eq!(PhaseModel::two_chain(1, 1).states_up_to(1).len(), 5);
    }
}
