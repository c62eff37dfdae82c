use super::rational::{rational_to_string, Rational};
use super::Coeff;
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Truncated formal Laurent series in one parameter over the rationals.
///
/// Exponents above `cap` are discarded. A series with no parameter is a
/// constant and combines with any parameter; a missing cap means the value is
/// an exact Laurent polynomial. Equality compares coefficients only.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    param: Option<Arc<str>>,
    cap: Option<i64>,
    terms: BTreeMap<i64, Rational>,
}

impl PartialEq for TruncSeries {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl TruncSeries {
    /// The zero series in `param` with the given cap.
    pub fn new(param: &str, cap: Option<i64>) -> Self {
        TruncSeries { param: Some(Arc::from(param)), cap, terms: BTreeMap::new() }
    }

    pub fn constant(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(0, r);
        }
        TruncSeries { param: None, cap: None, terms }
    }

    /// `coeff * param^exp`, dropped if `exp` exceeds the cap.
    pub fn monomial(param: &str, exp: i64, coeff: Rational, cap: Option<i64>) -> Self {
        let mut s = Self::new(param, cap);
        s.add_term(exp, coeff);
        s
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms<I>(param: &str, cap: Option<i64>, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut s = Self::new(param, cap);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    /// Polynomial with integer coefficients listed from exponent `start` upward.
    pub fn from_ints(param: &str, cap: Option<i64>, start: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            param,
            cap,
            coeffs.iter().enumerate().map(|(i, &c)| (start + i as i64, Rational::from_integer(c.into()))),
        )
    }

    fn add_term(&mut self, exp: i64, coeff: Rational) {
        if self.cap.is_some_and(|c| exp > c) || coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn param(&self) -> Option<&str> {
        self.param.as_deref()
    }

    pub fn cap(&self) -> Option<i64> {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Re-truncates at a (smaller) cap.
    pub fn truncated(&self, cap: i64) -> Self {
        let cap = self.cap.map_or(cap, |c| c.min(cap));
        TruncSeries {
            param: self.param.clone(),
            cap: Some(cap),
            terms: self.terms.range(..=cap).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    fn merged_header(&self, other: &Self) -> Result<(Option<Arc<str>>, Option<i64>)> {
        let param = match (&self.param, &other.param) {
            (Some(a), Some(b)) if a != b => return Err(Error::ParameterMismatch(a.to_string(), b.to_string())),
            (Some(a), _) => Some(a.clone()),
            (None, b) => b.clone(),
        };
        let cap = match (self.cap, other.cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Ok((param, cap))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (param, cap) = self.merged_header(other)?;
        let mut out = TruncSeries { param, cap, terms: BTreeMap::new() };
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let (param, cap) = self.merged_header(other)?;
        let mut out = TruncSeries { param, cap, terms: BTreeMap::new() };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if cap.is_some_and(|c| e > c) {
                    // exponents of `other` are increasing
                    break;
                }
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        let mut out = TruncSeries { param: self.param.clone(), cap: self.cap, terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    /// Multiplies by `param^k` (the cap is unchanged).
    pub fn shifted(&self, k: i64) -> Self {
        let mut out = TruncSeries { param: self.param.clone(), cap: self.cap, terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            out.add_term(e + k, c.clone());
        }
        out
    }

    /// Substitutes `param -> param^{-1}`; only meaningful for exact Laurent polynomials.
    pub fn inverted_parameter(&self) -> Self {
        TruncSeries {
            param: self.param.clone(),
            cap: None,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluates an exact Laurent polynomial at a nonzero rational.
    pub fn evaluate(&self, at: &Rational) -> Result<Rational> {
        if at.is_zero() && self.valuation().is_some_and(|v| v < 0) {
            return Err(Error::DivisionByZero);
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rational(at, *e);
        }
        Ok(acc)
    }

    /// Coefficients at exponents `0..=k`, zero-filled.
    pub fn dense(&self, k: i64) -> Vec<Rational> {
        (0..=k).map(|e| self.coeff(e)).collect()
    }

    /// JSON map `{"exp": "coeff"}` in increasing exponent order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        for (e, c) in &self.terms {
            m.insert(e.to_string(), serde_json::Value::String(rational_to_string(c)));
        }
        serde_json::Value::Object(m)
    }
}

fn pow_rational(base: &Rational, e: i64) -> Rational {
    let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Product truncated at the smaller cap.
pub fn series_mul(a: &TruncSeries, b: &TruncSeries) -> Result<TruncSeries> {
    a.try_mul(b)
}

/// Inverse of a Laurent series, carrying `order` terms beyond the leading one.
///
/// If `a = c t^v (1 + ...)`, the result is `t^{-v}` times the inverse of the
/// unit part computed through `t^order`, further limited by the precision `a`
/// itself carries.
pub fn series_inv(a: &TruncSeries, order: i64) -> Result<TruncSeries> {
    let v = a.valuation().ok_or(Error::NotInvertible)?;
    let lead = a.coeff(v);
    let known = match a.cap {
        Some(c) => order.min(c - v),
        None => order,
    };
    if known < 0 {
        return Err(Error::NotInvertible);
    }
    let unit: Vec<Rational> = (0..=known).map(|i| a.coeff(v + i)).collect();
    let inv_lead = lead.recip();
    let mut inv = vec![Rational::zero(); (known + 1) as usize];
    inv[0] = inv_lead.clone();
    for n in 1..=known as usize {
        let mut acc = Rational::zero();
        for k in 1..=n {
            if !unit[k].is_zero() {
                acc += &unit[k] * &inv[n - k];
            }
        }
        inv[n] = -(acc * &inv_lead);
    }
    let param = a.param().unwrap_or("t");
    Ok(TruncSeries::from_terms(param, Some(known - v), inv.into_iter().enumerate().map(|(i, c)| (i as i64 - v, c))))
}

impl TruncSeries {
    pub fn inverse(&self, order: i64) -> Result<TruncSeries> {
        series_inv(self, order)
    }
}

impl std::ops::Add for TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: TruncSeries) -> TruncSeries {
        self.plus(&rhs)
    }
}

impl std::ops::Mul for TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: TruncSeries) -> TruncSeries {
        self.times(&rhs)
    }
}

impl Zero for TruncSeries {
    fn zero() -> Self {
        TruncSeries { param: None, cap: None, terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for TruncSeries {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Coeff for TruncSeries {
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("series parameter mismatch")
    }
    fn minus(&self, other: &Self) -> Self {
        self.try_add(&other.negated()).expect("series parameter mismatch")
    }
    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).expect("series parameter mismatch")
    }
    fn negated(&self) -> Self {
        self.map_coeffs(|c| -c)
    }
    fn scaled(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c * r)
    }
    fn domain_tag(&self) -> String {
        match self.cap {
            Some(c) => format!("series:{}:{}", self.param().unwrap_or(""), c),
            None => format!("series:{}:exact", self.param().unwrap_or("")),
        }
    }
    fn constant_part(&self) -> Rational {
        self.coeff(0)
    }
    fn to_json(&self) -> serde_json::Value {
        TruncSeries::to_json(self)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let p = self.param().unwrap_or("t");
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coeff = rational_to_string(&mag);
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "{p}")?,
                (1, false) => write!(f, "{coeff}*{p}")?,
                (e, true) => write!(f, "{p}^{e}")?,
                (e, false) => write!(f, "{coeff}*{p}^{e}")?,
            }
        }
        Ok(())
    }
}
