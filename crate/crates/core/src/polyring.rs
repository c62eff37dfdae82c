//! Sparse exact polynomials in two banks of variables `x_1..x_A`, `y_1..y_B`.
//!
//! The graded degree assigns `deg x_n = n` and `deg y_n = -n`. Derivatives
//! here are plain partial derivatives; the `1/n` weights of the shifted
//! generators `x_n - (1/n) d/dy_n` and `y_n - (1/n) d/dx_n` live in
//! [`shifted_generator_apply`] and the expansions built on it.

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::scalars::{parse_rational, Coeff, Rational};
use num_bigint::BigInt;
use num_traits::One;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X,
    Y,
}

impl Family {
    pub fn other(self) -> Family {
        match self {
            Family::X => Family::Y,
            Family::Y => Family::X,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
        }
    }
}

/// The commuting shifted generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shift {
    /// `x_n - (1/n) d/dy_n`
    XMinusDy,
    /// `y_n - (1/n) d/dx_n`
    YMinusDx,
}

impl Shift {
    /// Bank multiplied by the generator.
    pub fn family(self) -> Family {
        match self {
            Shift::XMinusDy => Family::X,
            Shift::YMinusDx => Family::Y,
        }
    }
}

/// Largest variable index allowed in each bank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cutoffs {
    pub x: usize,
    pub y: usize,
}

impl Cutoffs {
    pub fn new(x: usize, y: usize) -> Self {
        Cutoffs { x, y }
    }

    pub fn of(&self, family: Family) -> usize {
        match family {
            Family::X => self.x,
            Family::Y => self.y,
        }
    }

    pub fn check(&self, family: Family, index: usize) -> Result<()> {
        let cutoff = self.of(family);
        if index == 0 || index > cutoff {
            return Err(Error::Cutoff { family: family.letter(), index, cutoff });
        }
        Ok(())
    }
}

/// Exponent vectors; slot `i` holds the exponent of variable `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    x: Vec<u32>,
    y: Vec<u32>,
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(mut x: Vec<u32>, mut y: Vec<u32>) -> Self {
        trim(&mut x);
        trim(&mut y);
        Monomial { x, y }
    }

    pub fn var(family: Family, index: usize) -> Self {
        Monomial::one().with_delta(family, index, 1)
    }

    pub fn bank(&self, family: Family) -> &[u32] {
        match family {
            Family::X => &self.x,
            Family::Y => &self.y,
        }
    }

    pub fn exponent(&self, family: Family, index: usize) -> u32 {
        self.bank(family).get(index - 1).copied().unwrap_or(0)
    }

    fn with_delta(&self, family: Family, index: usize, delta: i64) -> Monomial {
        let mut m = self.clone();
        let v = match family {
            Family::X => &mut m.x,
            Family::Y => &mut m.y,
        };
        if v.len() < index {
            v.resize(index, 0);
        }
        v[index - 1] = (v[index - 1] as i64 + delta) as u32;
        trim(v);
        m
    }

    pub fn is_one(&self) -> bool {
        self.x.is_empty() && self.y.is_empty()
    }

    /// Exponent vector whose entry `n - 1` is the multiplicity of `n` in `p`.
    pub fn from_partition(family: Family, p: &Partition) -> Monomial {
        let mut bank = vec![0u32; p.largest()];
        for &k in p.parts() {
            bank[k - 1] += 1;
        }
        match family {
            Family::X => Monomial::new(bank, Vec::new()),
            Family::Y => Monomial::new(Vec::new(), bank),
        }
    }

    /// Every monomial with `sum n * (a_n + b_n) <= d`.
    pub fn all_up_to_weight(d: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        for wx in 0..=d {
            for px in Partition::all_of_weight(wx) {
                let mx = Monomial::from_partition(Family::X, &px);
                for py in Partition::all_up_to_weight(d - wx) {
                    out.push(mx.mul(&Monomial::from_partition(Family::Y, &py)));
                }
            }
        }
        out
    }

    /// `sum n * a_n` over one bank.
    pub fn weight(&self, family: Family) -> u64 {
        self.bank(family).iter().enumerate().map(|(i, &e)| (i as u64 + 1) * e as u64).sum()
    }

    /// `deg x_n = n`, `deg y_n = -n`.
    pub fn graded_degree(&self) -> i64 {
        self.weight(Family::X) as i64 - self.weight(Family::Y) as i64
    }

    pub fn total_degree(&self) -> u64 {
        self.x.iter().chain(self.y.iter()).map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let add = |a: &[u32], b: &[u32]| {
            let n = a.len().max(b.len());
            (0..n).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect::<Vec<_>>()
        };
        Monomial::new(add(&self.x, &other.x), add(&self.y, &other.y))
    }

    pub fn fits(&self, cutoffs: Cutoffs) -> bool {
        self.x.len() <= cutoffs.x && self.y.len() <= cutoffs.y
    }

    /// Hall-type norm `prod a_n! / n^{a_n}` of the monomial, both banks.
    pub fn hall_norm(&self) -> Rational {
        let mut acc = Rational::one();
        for bank in [&self.x, &self.y] {
            for (i, &e) in bank.iter().enumerate() {
                let n = BigInt::from(i as u64 + 1);
                for k in 1..=e {
                    acc *= Rational::new(BigInt::from(k), n.clone());
                }
            }
        }
        acc
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        for (fam, bank) in [('x', &self.x), ('y', &self.y)] {
            for (i, &e) in bank.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("{fam}{}", i + 1)),
                    e => parts.push(format!("{fam}{}^{e}", i + 1)),
                }
            }
        }
        parts.join("*")
    }

    fn bank_json(bank: &[u32]) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        for (i, &e) in bank.iter().enumerate() {
            if e > 0 {
                m.insert((i + 1).to_string(), e.into());
            }
        }
        serde_json::Value::Object(m)
    }
}

impl Ord for Monomial {
    /// Graded-lex: total degree, then x exponents, then y exponents.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.render())
        }
    }
}

/// Graded degree of a nonzero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Homogeneous(i64),
    Inhomogeneous,
}

#[derive(Clone, PartialEq)]
pub struct Poly<C: Coeff = Rational> {
    cutoffs: Cutoffs,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero(cutoffs: Cutoffs) -> Self {
        Poly { cutoffs, terms: BTreeMap::new() }
    }

    pub fn constant(cutoffs: Cutoffs, c: C) -> Self {
        let mut p = Poly::zero(cutoffs);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one(cutoffs: Cutoffs) -> Self {
        Poly::constant(cutoffs, C::one())
    }

    pub fn var(cutoffs: Cutoffs, family: Family, index: usize) -> Result<Self> {
        cutoffs.check(family, index)?;
        let mut p = Poly::zero(cutoffs);
        p.add_term(Monomial::var(family, index), C::one());
        Ok(p)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(cutoffs: Cutoffs, terms: I) -> Result<Self> {
        let mut p = Poly::zero(cutoffs);
        for (m, c) in terms {
            if !m.fits(cutoffs) {
                let (family, index) =
                    if m.x.len() > cutoffs.x { (Family::X, m.x.len()) } else { (Family::Y, m.y.len()) };
                cutoffs.check(family, index)?;
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn cutoffs(&self) -> Cutoffs {
        self.cutoffs
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = slot.plus(&c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Same polynomial in a ring with different cutoffs.
    pub fn with_cutoffs(&self, cutoffs: Cutoffs) -> Result<Self> {
        Poly::from_terms(cutoffs, self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.cutoffs != other.cutoffs {
            return Err(Error::CutoffMismatch((self.cutoffs.x, self.cutoffs.y), (other.cutoffs.x, other.cutoffs.y)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Poly::zero(self.cutoffs);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.times(cb));
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> Self {
        self.map(|c| c.negated())
    }

    fn map(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = Poly::zero(self.cutoffs);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        self.map(|x| x.scaled(r))
    }

    /// Converts coefficients into another domain.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(self.cutoffs);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Multiplication by a single variable.
    pub fn mul_var(&self, family: Family, index: usize) -> Result<Self> {
        self.cutoffs.check(family, index)?;
        Ok(Poly {
            cutoffs: self.cutoffs,
            terms: self.terms.iter().map(|(m, c)| (m.with_delta(family, index, 1), c.clone())).collect(),
        })
    }

    /// Plain first derivative; zero for indices no monomial can contain.
    pub(crate) fn derive_once(&self, family: Family, index: usize) -> Self {
        let mut out = Poly::zero(self.cutoffs);
        if index == 0 {
            return out;
        }
        for (m, c) in &self.terms {
            let e = m.exponent(family, index);
            if e > 0 {
                let k = Rational::from_integer(BigInt::from(e));
                out.add_term(m.with_delta(family, index, -1), c.scaled(&k));
            }
        }
        out
    }

    /// `order`-fold plain partial derivative in `family_index`.
    pub fn partial_derivative(&self, family: Family, index: usize, order: u32) -> Result<Self> {
        self.cutoffs.check(family, index)?;
        let mut p = self.clone();
        for _ in 0..order {
            p = p.derive_once(family, index);
        }
        Ok(p)
    }

    pub fn graded_degree(&self) -> Result<Degree> {
        let mut degrees = self.terms.keys().map(Monomial::graded_degree);
        let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
        if degrees.all(|d| d == first) {
            Ok(Degree::Homogeneous(first))
        } else {
            Ok(Degree::Inhomogeneous)
        }
    }

    /// Constant term: the vacuum expectation after all operators have acted on 1.
    pub fn vacuum_pairing(&self) -> C {
        self.coeff(&Monomial::one())
    }

    /// Largest `sum n a_n` over the monomials, in one bank.
    pub fn max_weight(&self, family: Family) -> u64 {
        self.terms.keys().map(|m| m.weight(family)).max().unwrap_or(0)
    }

    pub fn max_total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Terms of maximal ordinary total degree.
    pub fn top_degree_part(&self) -> Self {
        let d = self.max_total_degree();
        let mut out = Poly::zero(self.cutoffs);
        for (m, c) in self.terms.iter().filter(|(m, _)| m.total_degree() == d) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// True when no monomial uses the given bank.
    pub fn free_of(&self, family: Family) -> bool {
        self.terms.keys().all(|m| m.bank(family).is_empty())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let domain = self.terms.values().next().map(|c| c.domain_tag()).unwrap_or_else(|| C::one().domain_tag());
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                serde_json::json!({
                    "x": Monomial::bank_json(&m.x),
                    "y": Monomial::bank_json(&m.y),
                    "c": c.to_json(),
                })
            })
            .collect();
        serde_json::json!({
            "cutoffs": [self.cutoffs.x, self.cutoffs.y],
            "coeff_domain": domain,
            "terms": terms,
        })
    }
}

impl Poly<Rational> {
    /// Parses the text rendering, e.g. `1/2*x1^2 - x2*y1 + 3`.
    pub fn parse(s: &str, cutoffs: Cutoffs) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("polynomial `{s}`: {what}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut pieces = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        pieces.push(cur);
        let mut terms = Vec::new();
        for piece in pieces {
            let (neg, body) = match piece.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let mut coeff = Rational::one();
            let mut m = Monomial::one();
            for factor in body.split('*') {
                let first = factor.chars().next().ok_or_else(|| bad("empty factor"))?;
                if first == 'x' || first == 'y' {
                    let fam = if first == 'x' { Family::X } else { Family::Y };
                    let (idx, exp) = match factor[1..].split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad("exponent"))?),
                        None => (&factor[1..], 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad("index"))?;
                    if idx == 0 {
                        return Err(bad("index 0"));
                    }
                    for _ in 0..exp {
                        m = m.with_delta(fam, idx, 1);
                    }
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            terms.push((m, if neg { -coeff } else { coeff }));
        }
        Poly::from_terms(cutoffs, terms)
    }

    /// Parses the JSON schema written by [`Poly::to_json`] (rational domain only).
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("poly json: {what}"));
        let cut = v["cutoffs"].as_array().ok_or_else(|| bad("cutoffs"))?;
        let get = |i: usize| cut.get(i).and_then(|c| c.as_u64()).ok_or_else(|| bad("cutoffs"));
        let cutoffs = Cutoffs::new(get(0)? as usize, get(1)? as usize);
        if v["coeff_domain"] != "rational" {
            return Err(bad("only the rational domain is readable"));
        }
        let bank = |b: &serde_json::Value| -> Result<Vec<u32>> {
            let mut out = Vec::new();
            for (k, e) in b.as_object().ok_or_else(|| bad("bank"))? {
                let i: usize = k.parse().map_err(|_| bad("index"))?;
                if i == 0 {
                    return Err(bad("index 0"));
                }
                let e = e.as_u64().ok_or_else(|| bad("exponent"))? as u32;
                if out.len() < i {
                    out.resize(i, 0);
                }
                out[i - 1] = e;
            }
            Ok(out)
        };
        let mut terms = Vec::new();
        for t in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let m = Monomial::new(bank(&t["x"])?, bank(&t["y"])?);
            let c = parse_rational(t["c"].as_str().ok_or_else(|| bad("coefficient"))?)?;
            terms.push((m, c));
        }
        Poly::from_terms(cutoffs, terms)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith<C: Coeff>(a: &Poly<C>, b: &Poly<C>, op: PolyOp) -> Result<Poly<C>> {
    match op {
        PolyOp::Add => a.try_add(b),
        PolyOp::Sub => a.try_sub(b),
        PolyOp::Mul => a.try_mul(b),
    }
}

pub fn partial_derivative<C: Coeff>(p: &Poly<C>, family: Family, index: usize, order: u32) -> Result<Poly<C>> {
    p.partial_derivative(family, index, order)
}

/// One application of a shifted generator with index `n`.
pub(crate) fn shifted_once<C: Coeff>(p: &Poly<C>, which: Shift, n: usize) -> Result<Poly<C>> {
    let fam = which.family();
    let mult = p.mul_var(fam, n)?;
    let weight = Rational::new(BigInt::from(1), BigInt::from(n));
    let der = p.derive_once(fam.other(), n).scale_rat(&weight);
    mult.try_sub(&der)
}

/// Applies `(x_n - (1/n) d/dy_n)^k` or `(y_n - (1/n) d/dx_n)^k`.
pub fn shifted_generator_apply<C: Coeff>(p: &Poly<C>, which: Shift, n: usize, power: u32) -> Result<Poly<C>> {
    p.cutoffs.check(which.family(), n)?;
    let mut out = p.clone();
    for _ in 0..power {
        out = shifted_once(&out, which, n)?;
    }
    Ok(out)
}

pub fn graded_degree<C: Coeff>(p: &Poly<C>) -> Result<Degree> {
    p.graded_degree()
}

pub fn vacuum_pairing<C: Coeff>(p: &Poly<C>) -> C {
    p.vacuum_pairing()
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_ref()
    }
}

fn render_coeff<C: Coeff>(c: &C) -> (bool, String) {
    let s = c.to_string();
    if let Some(rest) = s.strip_prefix('-') {
        if !rest.contains(' ') {
            return (true, rest.to_string());
        }
    }
    if s.contains(' ') {
        (false, format!("({s})"))
    } else {
        (false, s)
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Terms in decreasing canonical order, e.g. `x1*y1 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = render_coeff(c);
            let sign = match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let body = if m.is_one() {
                mag
            } else if mag == "1" {
                m.render()
            } else {
                format!("{mag}*{}", m.render())
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self)
    }
}

/// Which copy of the doubled ring a polynomial is embedded into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Left,
    Right,
}

/// Elements of `C[x,y] (x) C[x,y]`, stored on pairs of monomials from disjoint banks.
#[derive(Clone, PartialEq)]
pub struct DoubledPoly<C: Coeff = Rational> {
    cutoffs: Cutoffs,
    terms: BTreeMap<(Monomial, Monomial), C>,
}

impl<C: Coeff> DoubledPoly<C> {
    pub fn zero(cutoffs: Cutoffs) -> Self {
        DoubledPoly { cutoffs, terms: BTreeMap::new() }
    }

    fn add_term(&mut self, key: (Monomial, Monomial), c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot = slot.plus(&c);
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// `p (x) q`.
    pub fn tensor(p: &Poly<C>, q: &Poly<C>) -> Result<Self> {
        p.same_ring(q)?;
        let mut out = DoubledPoly::zero(p.cutoffs);
        for (ma, ca) in &p.terms {
            for (mb, cb) in &q.terms {
                out.add_term((ma.clone(), mb.clone()), ca.times(cb));
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.cutoffs != other.cutoffs {
            return Err(Error::CutoffMismatch((self.cutoffs.x, self.cutoffs.y), (other.cutoffs.x, other.cutoffs.y)));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cutoffs != other.cutoffs {
            return Err(Error::CutoffMismatch((self.cutoffs.x, self.cutoffs.y), (other.cutoffs.x, other.cutoffs.y)));
        }
        let mut out = DoubledPoly::zero(self.cutoffs);
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &other.terms {
                out.add_term((la.mul(lb), ra.mul(rb)), ca.times(cb));
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }
}

/// Renames the variables of `p` into one bank of the doubled ring.
pub fn tensor_embed<C: Coeff>(p: &Poly<C>, slot: Slot) -> DoubledPoly<C> {
    let mut out = DoubledPoly::zero(p.cutoffs);
    for (m, c) in &p.terms {
        let key = match slot {
            Slot::Left => (m.clone(), Monomial::one()),
            Slot::Right => (Monomial::one(), m.clone()),
        };
        out.add_term(key, c.clone());
    }
    out
}

impl<C: Coeff> fmt::Display for DoubledPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((l, r), c)| format!("({c})*[{l:?}]L*[{r:?}]R")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coeff> fmt::Debug for DoubledPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
