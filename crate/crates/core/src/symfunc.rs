//! Complete homogeneous functions, Schur functions and universal characters.
//!
//! `h_n` of an alphabet is the coefficient of `z^n` in `exp(sum_k g_k z^k)`.
//! For the variable alphabets `g_k = x_k` (or `y_k`); for the operator
//! alphabets `g_k` is a shifted generator `x_k - (1/k) d/dy_k` or a weighted
//! derivative `(1/k) d/dx_k`. Two independent expansions are provided: the
//! explicit multinomial sum and the recursion `n E_n = sum_j j g_j E_{n-j}`.

use crate::error::{Error, Result};
use crate::partitions::{add_horizontal_strips, remove_horizontal_strips, Partition};
use crate::polyring::{shifted_generator_apply, Cutoffs, Family, Monomial, Poly, Shift};
use crate::scalars::{Coeff, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

/// Argument of `h_n`.
#[derive(Clone, Debug, PartialEq)]
pub enum Alphabet {
    X,
    Y,
    XMinusDy,
    YMinusDx,
    Numeric(Vec<Rational>),
    Negated(Box<Alphabet>),
}

impl Alphabet {
    pub fn negated(self) -> Alphabet {
        Alphabet::Negated(Box::new(self))
    }

    fn unwrap_sign(&self) -> (bool, &Alphabet) {
        match self {
            Alphabet::Negated(inner) => {
                let (neg, base) = inner.unwrap_sign();
                (!neg, base)
            }
            other => (false, other),
        }
    }
}

/// Value of `h_n`: a polynomial for variable and operator alphabets, a number for numeric ones.
#[derive(Clone, Debug, PartialEq)]
pub enum HValue {
    Poly(Poly),
    Number(Rational),
}

impl HValue {
    pub fn into_poly(self) -> Option<Poly> {
        match self {
            HValue::Poly(p) => Some(p),
            HValue::Number(_) => None,
        }
    }
}

/// Generator families for the exponential series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generators {
    /// `g_k = x_k - (1/k) d/dy_k` or `y_k - (1/k) d/dx_k`.
    Shifted(Shift),
    /// `g_k = (1/k) d/d(family)_k`.
    Derivative(Family),
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `k g_k p`. Derivatives in variables beyond the cutoff give zero.
fn weighted_generator<C: Coeff>(g: Generators, k: usize, p: &Poly<C>) -> Result<Poly<C>> {
    match g {
        Generators::Shifted(which) => {
            let fam = which.family();
            let mult = p.mul_var(fam, k)?.scale_rat(&Rational::from_integer(BigInt::from(k)));
            mult.try_sub(&p.derive_once(fam.other(), k))
        }
        Generators::Derivative(fam) => Ok(p.derive_once(fam, k)),
    }
}

/// `[h_0(s g) p, ..., h_order(s g) p]` with `s = -1` when `negate`, by the exponential recursion.
pub fn h_series<C: Coeff>(g: Generators, negate: bool, p: &Poly<C>, order: usize) -> Result<Vec<Poly<C>>> {
    let mut out: Vec<Poly<C>> = vec![p.clone()];
    for n in 1..=order {
        let mut acc = Poly::zero(p.cutoffs());
        for j in 1..=n {
            let prev = &out[n - j];
            if prev.is_zero() {
                continue;
            }
            acc = acc.try_add(&weighted_generator(g, j, prev)?)?;
        }
        let mut w = Rational::new(BigInt::one(), BigInt::from(n));
        if negate {
            w = -w;
        }
        out.push(acc.scale_rat(&w));
    }
    Ok(out)
}

/// Multinomial expansion `sum_{sum k a_k = n} prod_k g_k^{a_k} / a_k!` applied to `p`.
fn multinomial_apply<C, F>(n: usize, negate: bool, p: &Poly<C>, pow: F) -> Result<Poly<C>>
where
    C: Coeff,
    F: Fn(&Poly<C>, usize, u32) -> Result<Poly<C>>,
{
    let mut acc = Poly::zero(p.cutoffs());
    for rho in Partition::all_of_weight(n) {
        let mut term = p.clone();
        let mut denom = BigInt::one();
        let mut count = 0u32;
        for (&k, &a) in &rho.occupations() {
            let a = a as u32;
            term = pow(&term, k, a)?;
            denom *= factorial(a);
            count += a;
        }
        let sign = if negate && count % 2 == 1 { -1 } else { 1 };
        acc = acc.try_add(&term.scale_rat(&Rational::new(BigInt::from(sign), denom)))?;
    }
    Ok(acc)
}

/// `h_n(x)` evaluated numerically: complete homogeneous symmetric polynomial of `points`.
fn h_numeric(n: usize, points: &[Rational]) -> Rational {
    // h_k(a_1..a_m) = h_k(a_1..a_{m-1}) + a_m h_{k-1}(a_1..a_m)
    let mut h = vec![Rational::zero(); n + 1];
    h[0] = Rational::one();
    for a in points {
        for k in 1..=n {
            let prev = h[k - 1].clone();
            h[k] += a * prev;
        }
    }
    h[n].clone()
}

pub fn complete_h(n: i64, alph: &Alphabet, cutoffs: Cutoffs) -> Result<HValue> {
    let (neg, base) = alph.unwrap_sign();
    if let Alphabet::Numeric(points) = base {
        if n < 0 {
            return Ok(HValue::Number(Rational::zero()));
        }
        let n = n as usize;
        // h_n(-a) = (-1)^n e_n(a)
        let v = if neg {
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            elementary_numeric(n, points) * Rational::from_integer(BigInt::from(sign))
        } else {
            h_numeric(n, points)
        };
        return Ok(HValue::Number(v));
    }
    if n < 0 {
        return Ok(HValue::Poly(Poly::zero(cutoffs)));
    }
    let n = n as usize;
    let one = Poly::one(cutoffs);
    let poly = match base {
        Alphabet::X | Alphabet::Y => {
            let fam = if *base == Alphabet::X { Family::X } else { Family::Y };
            if n > 0 {
                cutoffs.check(fam, n)?;
            }
            multinomial_apply(n, neg, &one, |q, k, a| {
                let mut r = q.clone();
                for _ in 0..a {
                    r = r.mul_var(fam, k)?;
                }
                Ok(r)
            })?
        }
        Alphabet::XMinusDy => h_shifted_signed(n, neg, Shift::XMinusDy, &one)?,
        Alphabet::YMinusDx => h_shifted_signed(n, neg, Shift::YMinusDx, &one)?,
        Alphabet::Numeric(_) | Alphabet::Negated(_) => unreachable!("sign already unwrapped"),
    };
    Ok(HValue::Poly(poly))
}

fn elementary_numeric(n: usize, points: &[Rational]) -> Rational {
    let mut e = vec![Rational::zero(); n + 1];
    e[0] = Rational::one();
    for a in points {
        for k in (1..=n).rev() {
            let prev = e[k - 1].clone();
            e[k] += a * prev;
        }
    }
    e[n].clone()
}

fn h_shifted_signed<C: Coeff>(n: usize, negate: bool, which: Shift, p: &Poly<C>) -> Result<Poly<C>> {
    if n > 0 {
        p.cutoffs().check(which.family(), n)?;
    }
    multinomial_apply(n, negate, p, |q, k, a| shifted_generator_apply(q, which, k, a))
}

/// `h_n` of the shifted generators applied to `p`, by the multinomial sum.
pub fn h_shifted<C: Coeff>(n: i64, which: Shift, p: &Poly<C>) -> Result<Poly<C>> {
    if n < 0 {
        return Ok(Poly::zero(p.cutoffs()));
    }
    h_shifted_signed(n as usize, false, which, p)
}

/// `[h_0 p, ..., h_M p]` for the shifted generators.
pub fn truncated_h_apply<C: Coeff>(m: usize, which: Shift, p: &Poly<C>) -> Result<Vec<Poly<C>>> {
    (0..=m).map(|k| h_shifted(k as i64, which, p)).collect()
}

/// Entries of a determinant expansion.
pub(crate) trait DetEntry: Clone {
    fn entry_add(&self, other: &Self) -> Self;
    fn entry_sub(&self, other: &Self) -> Self;
    fn entry_mul(&self, other: &Self) -> Self;
    fn entry_is_zero(&self) -> bool;
}

impl DetEntry for Rational {
    fn entry_add(&self, other: &Self) -> Self {
        self + other
    }
    fn entry_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn entry_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn entry_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl<C: Coeff> DetEntry for Poly<C> {
    fn entry_add(&self, other: &Self) -> Self {
        self + other
    }
    fn entry_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn entry_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn entry_is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

/// Laplace expansion along rows, memoized on the set of used columns.
pub(crate) fn determinant<T: DetEntry>(m: &[Vec<T>], one: &T, zero: &T) -> T {
    let n = m.len();
    let mut memo: HashMap<u32, T> = HashMap::new();
    fn rec<T: DetEntry>(m: &[Vec<T>], mask: u32, one: &T, zero: &T, memo: &mut HashMap<u32, T>) -> T {
        let n = m.len();
        let row = mask.count_ones() as usize;
        if row == n {
            return one.clone();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = zero.clone();
        let mut free_before = 0;
        for c in 0..n {
            if mask & (1 << c) != 0 {
                continue;
            }
            if !m[row][c].entry_is_zero() {
                let minor = rec(m, mask | (1 << c), one, zero, memo);
                let term = m[row][c].entry_mul(&minor);
                acc = if free_before % 2 == 0 { acc.entry_add(&term) } else { acc.entry_sub(&term) };
            }
            free_before += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    assert!(n < 32, "determinant too large");
    rec(m, 0, one, zero, &mut memo)
}

/// `[h_0(fam), ..., h_max(fam)]` as polynomials.
fn h_table(fam: Family, max: usize, cutoffs: Cutoffs) -> Result<Vec<Poly>> {
    let alph = match fam {
        Family::X => Alphabet::X,
        Family::Y => Alphabet::Y,
    };
    (0..=max).map(|k| Ok(complete_h(k as i64, &alph, cutoffs)?.into_poly().expect("variable alphabet"))).collect()
}

fn h_entry(table: &[Poly], k: i64, cutoffs: Cutoffs) -> Poly {
    if k < 0 {
        Poly::zero(cutoffs)
    } else {
        table[k as usize].clone()
    }
}

/// Jacobi-Trudi determinant `det(h_{lam_i - i + j})` in one bank.
pub fn schur(lam: &Partition, fam: Family, cutoffs: Cutoffs) -> Result<Poly> {
    let l = lam.len();
    if l == 0 {
        return Ok(Poly::one(cutoffs));
    }
    let table = h_table(fam, lam.largest() + l - 1, cutoffs)?;
    let m: Vec<Vec<Poly>> = (0..l)
        .map(|i| (0..l).map(|j| h_entry(&table, lam.part(i) as i64 - i as i64 + j as i64, cutoffs)).collect())
        .collect();
    Ok(determinant(&m, &Poly::one(cutoffs), &Poly::zero(cutoffs)))
}

type UcCache = Mutex<HashMap<(Partition, Partition, Cutoffs), Poly>>;

fn uc_cache() -> &'static UcCache {
    static CACHE: OnceLock<UcCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Twisted Jacobi-Trudi determinant: `l'` rows of `h(y)` built from `mu`, then `l` rows of `h(x)` from `lam`.
pub fn universal_character_jt(lam: &Partition, mu: &Partition, cutoffs: Cutoffs) -> Result<Poly> {
    let key = (lam.clone(), mu.clone(), cutoffs);
    if let Some(p) = uc_cache().lock().expect("cache lock").get(&key) {
        return Ok(p.clone());
    }
    let (l, lp) = (lam.len(), mu.len());
    let n = l + lp;
    let hx = h_table(Family::X, (lam.largest() + l).saturating_sub(1), cutoffs)?;
    let hy = h_table(Family::Y, (mu.largest() + lp).saturating_sub(1), cutoffs)?;
    let mut m = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let (i, j) = (i as i64, j as i64);
            let entry = if i <= lp as i64 {
                h_entry(&hy, mu.part((lp as i64 - i) as usize) as i64 + i - j, cutoffs)
            } else {
                h_entry(&hx, lam.part((i - lp as i64 - 1) as usize) as i64 - i + j, cutoffs)
            };
            row.push(entry);
        }
        m.push(row);
    }
    let p = determinant(&m, &Poly::one(cutoffs), &Poly::zero(cutoffs));
    uc_cache().lock().expect("cache lock").insert(key, p.clone());
    Ok(p)
}

/// Reads a polynomial in one bank as a polynomial in the commuting shifted generators and applies it.
pub fn apply_operator_poly<C: Coeff>(op: &Poly, which: Shift, p: &Poly<C>) -> Result<Poly<C>> {
    let fam = which.family();
    let mut acc = Poly::zero(p.cutoffs());
    for (m, c) in op.terms() {
        if !m.bank(fam.other()).is_empty() {
            return Err(Error::InvalidArgument(format!("operator polynomial uses the {} bank", fam.other().letter())));
        }
        let mut r = p.clone();
        for (i, &e) in m.bank(fam).iter().enumerate() {
            if e > 0 {
                r = shifted_generator_apply(&r, which, i + 1, e)?;
            }
        }
        acc = acc.try_add(&r.scale_rat(c))?;
    }
    Ok(acc)
}

/// `S_lam(x - d~y) S_mu(y - d~x) . 1`.
pub fn universal_character_op(lam: &Partition, mu: &Partition, cutoffs: Cutoffs) -> Result<Poly> {
    let s_mu = schur(mu, Family::Y, cutoffs)?;
    let s_lam = schur(lam, Family::X, cutoffs)?;
    let inner = apply_operator_poly(&s_mu, Shift::YMinusDx, &Poly::one(cutoffs))?;
    apply_operator_poly(&s_lam, Shift::XMinusDy, &inner)
}

/// Numeric Jacobi-Trudi determinant with `h_k(points)`.
pub fn schur_eval(lam: &Partition, points: &[Rational]) -> Rational {
    let l = lam.len();
    if l > points.len() {
        return Rational::zero();
    }
    let m: Vec<Vec<Rational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let k = lam.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        Rational::zero()
                    } else {
                        h_numeric(k as usize, points)
                    }
                })
                .collect()
        })
        .collect();
    determinant(&m, &Rational::one(), &Rational::zero())
}

/// Which partition of a pair an operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    First,
    Second,
}

/// Expansions in the universal-character basis, keyed by `(lam, mu)`.
pub type UcVector = BTreeMap<(Partition, Partition), Rational>;

fn uc_add(v: &mut UcVector, key: (Partition, Partition), c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = v.entry(key.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        v.remove(&key);
    }
}

/// `h_k` multiplication in the basis (Pieri rule); rows longer than `max_cols` are dropped.
pub fn uc_pieri(v: &UcVector, side: Side, k: usize, max_cols: Option<usize>) -> UcVector {
    let mut out = UcVector::new();
    for ((lam, mu), c) in v {
        let target = if side == Side::First { lam } else { mu };
        for nu in add_horizontal_strips(target, k) {
            if max_cols.is_some_and(|m| nu.largest() > m) {
                continue;
            }
            let key = if side == Side::First { (nu, mu.clone()) } else { (lam.clone(), nu) };
            uc_add(&mut out, key, c.clone());
        }
    }
    out
}

/// `h_k^perp` in the basis: removes horizontal `k`-strips.
pub fn uc_skew(v: &UcVector, side: Side, k: usize) -> UcVector {
    let mut out = UcVector::new();
    for ((lam, mu), c) in v {
        let target = if side == Side::First { lam } else { mu };
        for nu in remove_horizontal_strips(target, k) {
            let key = if side == Side::First { (nu, mu.clone()) } else { (lam.clone(), nu) };
            uc_add(&mut out, key, c.clone());
        }
    }
    out
}

/// For each `k <= m`, the pairs reached from `(lam, mu)` by `h_k^perp`.
pub fn skew_h_apply(
    m: usize,
    side: Side,
    lam: &Partition,
    mu: &Partition,
) -> Vec<(usize, Vec<(Partition, Partition)>)> {
    let mut start = UcVector::new();
    start.insert((lam.clone(), mu.clone()), Rational::one());
    (0..=m).map(|k| (k, uc_skew(&start, side, k).into_keys().collect())).collect()
}

/// `F(x) G(y) -> F(x - d~y) G(y - d~x) . 1`, extended linearly.
pub fn iota(p: &Poly) -> Result<Poly> {
    let cut = p.cutoffs();
    let mut acc = Poly::zero(cut);
    for (m, c) in p.terms() {
        let mut r = Poly::one(cut);
        for (fam, which) in [(Family::Y, Shift::YMinusDx), (Family::X, Shift::XMinusDy)] {
            for (i, &e) in m.bank(fam).iter().enumerate() {
                if e > 0 {
                    r = shifted_generator_apply(&r, which, i + 1, e)?;
                }
            }
        }
        acc = acc.try_add(&r.scale_rat(c))?;
    }
    Ok(acc)
}

/// Inverse of [`iota`]; the top ordinary-degree part of `iota(q)` is `q` itself.
pub fn iota_inverse(p: &Poly) -> Result<Poly> {
    let mut rest = p.clone();
    let mut out = Poly::zero(p.cutoffs());
    while !rest.is_zero() {
        let top = rest.top_degree_part();
        out = out.try_add(&top)?;
        rest = rest.try_sub(&iota(&top)?)?;
    }
    Ok(out)
}

/// Coefficients of `p` in the universal-character basis.
///
/// `p` is pulled back through [`iota`] and paired against `S_lam(x) S_mu(y)`
/// with `<x^a, x^a> = prod a_n! / n^{a_n}` (the pairing that makes Schur
/// functions orthonormal), so universal characters are orthonormal too.
pub fn uc_decompose(p: &Poly) -> Result<UcVector> {
    let f = iota_inverse(p)?;
    let mut weights: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for m in f.terms().keys() {
        weights.insert((m.weight(Family::X) as usize, m.weight(Family::Y) as usize), ());
    }
    let mut out = UcVector::new();
    for &(wx, wy) in weights.keys() {
        let cut = Cutoffs::new(wx.max(1), wy.max(1));
        let sx: Vec<(Partition, Poly)> = Partition::all_of_weight(wx)
            .into_iter()
            .map(|l| Ok((l.clone(), schur(&l, Family::X, cut)?)))
            .collect::<Result<_>>()?;
        let sy: Vec<(Partition, Poly)> = Partition::all_of_weight(wy)
            .into_iter()
            .map(|l| Ok((l.clone(), schur(&l, Family::Y, cut)?)))
            .collect::<Result<_>>()?;
        let part: Vec<(&Monomial, &Rational)> = f
            .terms()
            .iter()
            .filter(|(m, _)| m.weight(Family::X) as usize == wx && m.weight(Family::Y) as usize == wy)
            .collect();
        for (lam, px) in &sx {
            for (mu, py) in &sy {
                let mut c = Rational::zero();
                for (m, fc) in &part {
                    let mx = Monomial::new(m.bank(Family::X).to_vec(), Vec::new());
                    let my = Monomial::new(Vec::new(), m.bank(Family::Y).to_vec());
                    let sc = px.coeff(&mx) * py.coeff(&my);
                    if !sc.is_zero() {
                        c += sc * (*fc) * m.hall_norm();
                    }
                }
                uc_add(&mut out, (lam.clone(), mu.clone()), c);
            }
        }
    }
    Ok(out)
}

/// `sum c S_[lam,mu]`.
pub fn uc_synthesize(v: &UcVector, cutoffs: Cutoffs) -> Result<Poly> {
    let mut acc = Poly::zero(cutoffs);
    for ((lam, mu), c) in v {
        acc = acc.try_add(&universal_character_jt(lam, mu, cutoffs)?.scale_rat(c))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::scalars::rat;

    const CUT: Cutoffs = Cutoffs { x: 8, y: 8 };

    fn p(s: &str) -> Poly {
        Poly::parse(s, CUT).unwrap()
    }

    #[test]
    fn complete_h_examples() {
        let h = |n, a: &Alphabet| complete_h(n, a, CUT).unwrap();
        assert_eq!(h(2, &Alphabet::X), HValue::Poly(p("1/2*x1^2 + x2")));
        assert_eq!(h(3, &Alphabet::X), HValue::Poly(p("1/6*x1^3 + x1*x2 + x3")));
        assert_eq!(h(-1, &Alphabet::X), HValue::Poly(Poly::zero(CUT)));
        assert_eq!(h(0, &Alphabet::Y), HValue::Poly(Poly::one(CUT)));
        let pts = Alphabet::Numeric(vec![rat(1, 1), rat(4, 1)]);
        assert_eq!(h(2, &pts), HValue::Number(rat(21, 1)));
        assert_eq!(h(2, &pts.clone().negated()), HValue::Number(rat(4, 1)));
        // h_n(-x) pairs with h_n(x) to the identity of exp(xi) exp(-xi)
        let neg = Alphabet::X.negated();
        let mut total = Poly::zero(CUT);
        for k in 0..=3 {
            let a = h(k, &Alphabet::X).into_poly().unwrap();
            let b = h(3 - k, &neg).into_poly().unwrap();
            total = &total + &(&a * &b);
        }
        assert!(total.is_zero());
        assert!(complete_h(3, &Alphabet::X, Cutoffs::new(2, 2)).is_err());
    }

    #[test]
    fn h_shifted_examples() {
        let y1 = p("y1");
        assert_eq!(h_shifted(1, Shift::XMinusDy, &y1).unwrap(), p("x1*y1 - 1"));
        assert_eq!(h_shifted(2, Shift::XMinusDy, &Poly::one(CUT)).unwrap(), p("1/2*x1^2 + x2"));
        let q = p("x1*y2 + 3");
        assert_eq!(h_shifted(0, Shift::YMinusDx, &q).unwrap(), q);
    }

    #[test]
    fn recursion_matches_multinomial() {
        let q = p("x1*y1^2 + x2*y1 - 2*y3 + x1^3");
        for which in [Shift::XMinusDy, Shift::YMinusDx] {
            let series = h_series(Generators::Shifted(which), false, &q, 4).unwrap();
            for (k, e) in series.iter().enumerate() {
                assert_eq!(*e, h_shifted(k as i64, which, &q).unwrap());
            }
        }
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&part![1, 1], Family::X, CUT).unwrap(), p("1/2*x1^2 - x2"));
        assert_eq!(schur(&part![2, 1], Family::X, CUT).unwrap(), p("1/3*x1^3 - x3"));
        assert_eq!(schur(&part![], Family::X, CUT).unwrap(), Poly::one(CUT));
    }

    #[test]
    fn universal_character_examples() {
        let one = part![1];
        assert_eq!(universal_character_jt(&one, &one, CUT).unwrap(), p("x1*y1 - 1"));
        assert_eq!(universal_character_op(&one, &one, CUT).unwrap(), p("x1*y1 - 1"));
        assert_eq!(universal_character_op(&part![2], &part![], CUT).unwrap(), p("1/2*x1^2 + x2"));
        assert_eq!(universal_character_op(&part![], &one, CUT).unwrap(), p("y1"));
        assert_eq!(universal_character_jt(&part![], &part![], CUT).unwrap(), Poly::one(CUT));
        let lam = part![2, 1];
        assert_eq!(universal_character_jt(&lam, &part![], CUT).unwrap(), schur(&lam, Family::X, CUT).unwrap());
        assert!(universal_character_jt(&part![3], &part![], Cutoffs::new(2, 2)).is_err());
    }

    #[test]
    fn schur_eval_examples() {
        assert_eq!(schur_eval(&part![1], &[rat(7, 3)]), rat(7, 3));
        assert_eq!(schur_eval(&part![1, 1], &[rat(1, 1), rat(4, 1)]), rat(4, 1));
        let ones = vec![rat(1, 1); 3];
        assert_eq!(schur_eval(&part![2, 1], &ones), rat(8, 1));
        assert_eq!(schur_eval(&part![1, 1, 1], &[rat(2, 1)]), rat(0, 1));
    }

    #[test]
    fn truncated_h_examples() {
        let one = Poly::one(CUT);
        assert_eq!(truncated_h_apply(1, Shift::XMinusDy, &one).unwrap(), vec![one.clone(), p("x1")]);
        let q = p("x2 + y1");
        assert_eq!(truncated_h_apply(0, Shift::YMinusDx, &q).unwrap(), vec![q.clone()]);
        let y1 = p("y1");
        assert_eq!(
            truncated_h_apply(2, Shift::XMinusDy, &y1).unwrap(),
            vec![y1.clone(), p("x1*y1 - 1"), p("1/2*x1^2*y1 + x2*y1 - x1")]
        );
    }

    #[test]
    fn skew_h_examples() {
        let e = part![];
        let one = part![1];
        assert_eq!(
            skew_h_apply(1, Side::First, &one, &e),
            vec![(0, vec![(one.clone(), e.clone())]), (1, vec![(e.clone(), e.clone())])]
        );
        let mu = part![2, 1];
        assert_eq!(
            skew_h_apply(2, Side::First, &e, &mu),
            vec![(0, vec![(e.clone(), mu.clone())]), (1, vec![]), (2, vec![])]
        );
        assert_eq!(
            skew_h_apply(1, Side::Second, &one, &one),
            vec![(0, vec![(one.clone(), one.clone())]), (1, vec![(one.clone(), e.clone())])]
        );
    }

    #[test]
    fn decomposition_roundtrip() {
        let mut v = UcVector::new();
        v.insert((part![2, 1], part![1]), rat(3, 2));
        v.insert((part![1], part![]), rat(-1, 1));
        v.insert((part![], part![2]), rat(5, 1));
        v.insert((part![], part![]), rat(7, 1));
        let poly = uc_synthesize(&v, CUT).unwrap();
        assert_eq!(uc_decompose(&poly).unwrap(), v);
    }
}
