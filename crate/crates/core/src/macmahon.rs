//! Plane partitions, the MacMahon function and vacuum expectation values of
//! products of vertex operators at `z = q^{m - 1/2}`.

use crate::error::{Error, Result};
use crate::polyring::{Cutoffs, Family, Poly, Shift};
use crate::report::CheckReport;
use crate::scalars::{rational_to_string, series_inv, Rational, TruncSeries};
use crate::symfunc::{h_series, truncated_h_apply, Generators};
use crate::vertex::{gamma_apply, GammaSpec, Sign};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

/// Largest total accepted by [`plane_partition_count`].
pub const ENUMERATION_BOUND: usize = 20;

/// A power series in `q` stored in `t = q^{1/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries {
    series: TruncSeries,
}

impl QSeries {
    /// Wraps a `t`-series; `cap` is in powers of `t`.
    pub fn from_t_series(series: TruncSeries) -> Self {
        QSeries { series }
    }

    /// `sum_n c_n q^n` through `q^{len-1}`.
    pub fn from_q_coeffs(coeffs: &[Rational]) -> Self {
        let cap = 2 * coeffs.len() as i64 - 2;
        QSeries {
            series: TruncSeries::from_terms(
                "t",
                Some(cap.max(0)),
                coeffs.iter().enumerate().map(|(n, c)| (2 * n as i64, c.clone())),
            ),
        }
    }

    pub fn t_series(&self) -> &TruncSeries {
        &self.series
    }

    /// True when every odd power of `t` vanishes.
    pub fn is_even(&self) -> bool {
        self.series.terms().keys().all(|e| e % 2 == 0)
    }

    /// Coefficients of `q^0..q^order`.
    pub fn q_coeffs(&self, order: usize) -> Vec<Rational> {
        (0..=order).map(|n| self.series.coeff(2 * n as i64)).collect()
    }

    /// Coefficients through the last exponent the series knows.
    pub fn known_q_coeffs(&self) -> Vec<Rational> {
        let top = self.series.cap().or(self.series.max_exponent()).unwrap_or(0).max(0);
        self.q_coeffs((top / 2) as usize)
    }

    /// JSON array of `q`-coefficients; integers are emitted as numbers.
    pub fn to_json(&self) -> Value {
        Value::Array(self.known_q_coeffs().iter().map(coeff_json).collect())
    }

    /// Comma-separated `q`-coefficients.
    pub fn render(&self) -> String {
        self.known_q_coeffs().iter().map(rational_to_string).collect::<Vec<_>>().join(",")
    }
}

fn coeff_json(c: &Rational) -> Value {
    if c.is_integer() {
        if let Some(i) = c.to_integer().to_i64() {
            return json!(i);
        }
    }
    json!(rational_to_string(c))
}

fn q_series(coeffs: Vec<BigInt>) -> QSeries {
    QSeries::from_q_coeffs(&coeffs.into_iter().map(Rational::from_integer).collect::<Vec<_>>())
}

/// `prod_{n <= K} (1 - q^n)^{-n}` through `q^K`.
pub fn macmahon_series(k: usize) -> Result<QSeries> {
    let cap = k as i64;
    let mut acc = TruncSeries::from_ints("q", Some(cap), 0, &[1]);
    for n in 1..=k {
        let factor = TruncSeries::from_terms("q", Some(cap), [(0, Rational::one()), (n as i64, -Rational::one())]);
        let inv = series_inv(&factor, cap)?;
        for _ in 0..n {
            acc = acc.try_mul(&inv)?;
        }
    }
    Ok(q_series((0..=cap).map(|e| acc.coeff(e).to_integer()).collect()))
}

/// `prod_{n <= K} (1 - q^n)^n` through `q^K`.
pub fn inverse_macmahon_series(k: usize) -> Result<QSeries> {
    let cap = k as i64;
    let mut acc = TruncSeries::from_ints("q", Some(cap), 0, &[1]);
    for n in 1..=k {
        let factor = TruncSeries::from_terms("q", Some(cap), [(0, Rational::one()), (n as i64, -Rational::one())]);
        for _ in 0..n {
            acc = acc.try_mul(&factor)?;
        }
    }
    Ok(q_series((0..=cap).map(|e| acc.coeff(e).to_integer()).collect()))
}

/// Heights on the quadrant, weakly decreasing along rows and columns; rows are stored
/// without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanePartition {
    rows: Vec<Vec<usize>>,
}

impl PlanePartition {
    pub fn new(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        for r in rows.iter_mut() {
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        for (i, r) in rows.iter().enumerate() {
            let row_ok = r.windows(2).all(|w| w[0] >= w[1]);
            let col_ok = i == 0 || (r.len() <= rows[i - 1].len() && r.iter().zip(&rows[i - 1]).all(|(a, b)| a <= b));
            if !row_ok || !col_ok || r.is_empty() {
                return Err(Error::InvalidArgument(format!("not a plane partition: {rows:?}")));
            }
        }
        Ok(PlanePartition { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn total(&self) -> usize {
        self.rows.iter().flatten().sum()
    }

    /// Every plane partition with the given total.
    pub fn all_of_total(n: usize) -> Result<Vec<PlanePartition>> {
        check_bound(n)?;
        let mut out = Vec::new();
        let mut rows = Vec::new();
        walk_rows(&[usize::MAX], n, &mut rows, &mut |r| out.push(PlanePartition { rows: r.to_vec() }));
        Ok(out)
    }
}

fn check_bound(n: usize) -> Result<()> {
    if n > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded { requested: n, bound: ENUMERATION_BOUND });
    }
    Ok(())
}

/// Rows bounded entrywise by `above` (an unbounded first row when `above` is `[MAX]`).
fn rows_under(above: &[usize], total: usize, cur: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if total == 0 {
        if !cur.is_empty() {
            emit(cur);
        }
        return;
    }
    let i = cur.len();
    let bound_here = if above.len() == 1 && above[0] == usize::MAX {
        total
    } else if i < above.len() {
        above[i]
    } else {
        return;
    };
    let prev = cur.last().copied().unwrap_or(usize::MAX);
    for h in 1..=bound_here.min(prev).min(total) {
        cur.push(h);
        rows_under(above, total - h, cur, emit);
        cur.pop();
    }
}

fn walk_rows(above: &[usize], remaining: usize, rows: &mut Vec<Vec<usize>>, emit: &mut dyn FnMut(&[Vec<usize>])) {
    if remaining == 0 {
        emit(rows);
        return;
    }
    for row_total in 1..=remaining {
        let mut candidates = Vec::new();
        rows_under(above, row_total, &mut Vec::new(), &mut |r| candidates.push(r.to_vec()));
        for r in candidates {
            rows.push(r.clone());
            walk_rows(&r, remaining - row_total, rows, emit);
            rows.pop();
        }
    }
}

/// Number of plane partitions of `n`, by exhaustive enumeration.
pub fn plane_partition_count(n: usize) -> Result<u64> {
    check_bound(n)?;
    let mut count = 0u64;
    walk_rows(&[usize::MAX], n, &mut Vec::new(), &mut |_| count += 1);
    Ok(count)
}

/// `[count(0), ..., count(K)]` as a series.
pub fn plane_partition_series(k: usize) -> Result<QSeries> {
    check_bound(k)?;
    let counts = (0..=k).map(|n| plane_partition_count(n).map(BigInt::from)).collect::<Result<Vec<_>>>()?;
    Ok(q_series(counts))
}

/// Components `p_0..p_cap` of a polynomial-valued series in a grading parameter.
type Graded = Vec<Poly>;

/// Applies `sum_k base^k s^{step k} op_k` to a graded vector, discarding grades above `cap`.
/// `op(p, n)` returns `[op_0 p, ..., op_n p]`.
fn graded_apply<F>(input: &Graded, cap: usize, step: usize, base: &Rational, op: F) -> Result<Graded>
where
    F: Fn(&Poly, usize) -> Result<Vec<Poly>>,
{
    let cut = input[0].cutoffs();
    let mut out: Graded = vec![Poly::zero(cut); cap + 1];
    for (i, p) in input.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let top = (cap - i) / step;
        let mut w = Rational::one();
        for (k, q) in op(p, top)?.into_iter().enumerate() {
            if !q.is_zero() && !w.is_zero() {
                out[i + step * k] = out[i + step * k].try_add(&q.scale_rat(&w))?;
            }
            w *= base;
        }
    }
    Ok(out)
}

fn graded_unit(cut: Cutoffs, cap: usize, p: &Poly) -> Result<Graded> {
    let mut g = vec![Poly::zero(cut); cap + 1];
    g[0] = p.with_cutoffs(cut)?;
    Ok(g)
}

fn gamma_op(family: u8, sign: Sign) -> impl Fn(&Poly, usize) -> Result<Vec<Poly>> {
    move |p, n| gamma_apply(&GammaSpec::new(family, sign, n)?, p)
}

/// `exp(xi(v, z))` as multiplication by `h_k(v)`.
fn mult_op(family: Family) -> impl Fn(&Poly, usize) -> Result<Vec<Poly>> {
    move |p, n| {
        let shift = if family == Family::X { Shift::XMinusDy } else { Shift::YMinusDx };
        // h_k(x - d~y) 1 = h_k(x)
        let hs = h_series(Generators::Shifted(shift), false, &Poly::one(p.cutoffs()), n)?;
        hs.iter().map(|h| h.try_mul(p)).collect()
    }
}

/// `exp(-xi(d~v, z))`.
fn neg_deriv_op(family: Family) -> impl Fn(&Poly, usize) -> Result<Vec<Poly>> {
    move |p, n| h_series(Generators::Derivative(family), true, p, n)
}

fn vacuum_series(g: &Graded, cap: usize) -> QSeries {
    QSeries::from_t_series(TruncSeries::from_terms(
        "t",
        Some(cap as i64),
        g.iter().enumerate().map(|(i, p)| (i as i64, p.vacuum_pairing())),
    ))
}

fn correlator_cutoffs(k: usize) -> Cutoffs {
    let n = (2 * k).max(1);
    Cutoffs::new(n, n)
}

/// `prod_{m = 1..levels} Gamma2^-(t^{2m-1}) Gamma1^-(t^{2m-1}) . 1` through `t^cap`; rightmost factor first.
fn minus_product(levels: usize, cap: usize, cut: Cutoffs) -> Result<Graded> {
    let mut g = graded_unit(cut, cap, &Poly::one(cut))?;
    for m in (1..=levels).rev() {
        let step = 2 * m - 1;
        g = graded_apply(&g, cap, step, &Rational::one(), gamma_op(1, Sign::Minus))?;
        g = graded_apply(&g, cap, step, &Rational::one(), gamma_op(2, Sign::Minus))?;
    }
    Ok(g)
}

/// `<0| prod_{m >= 1} Gamma2^-(q^{m-1/2}) Gamma1^-(q^{m-1/2}) |0>` through `q^K`.
pub fn correlator_minus(k: usize) -> Result<QSeries> {
    correlator_minus_levels(k, k)
}

/// As [`correlator_minus`] with the product over levels `m <= levels`.
pub fn correlator_minus_levels(k: usize, levels: usize) -> Result<QSeries> {
    let cap = 2 * k;
    Ok(vacuum_series(&minus_product(levels, cap, correlator_cutoffs(k))?, cap))
}

/// `<0| prod Gamma2^+(q^{-m+1/2}) Gamma1^+(q^{-m+1/2}) prod Gamma2^-(q^{m-1/2}) Gamma1^-(q^{m-1/2}) |0>`
/// through `q^K`.
pub fn correlator_full(k: usize) -> Result<QSeries> {
    correlator_full_levels(k, k)
}

pub fn correlator_full_levels(k: usize, levels: usize) -> Result<QSeries> {
    let cap = 2 * k;
    let mut g = minus_product(levels, cap, correlator_cutoffs(k))?;
    for m in (1..=levels).rev() {
        let step = 2 * m - 1;
        g = graded_apply(&g, cap, step, &Rational::one(), gamma_op(1, Sign::Plus))?;
        g = graded_apply(&g, cap, step, &Rational::one(), gamma_op(2, Sign::Plus))?;
    }
    Ok(vacuum_series(&g, cap))
}

fn graded_json(g: &Graded) -> Value {
    g.iter().map(|p| p.to_json()).collect::<Vec<_>>().into()
}

fn compare_graded(report: &mut CheckReport, what: &str, lhs: &Graded, rhs: &Graded) -> Result<()> {
    for (k, (a, b)) in lhs.iter().zip(rhs).enumerate() {
        let d = a.try_sub(b)?;
        report.expect(d.is_zero(), || json!({"identity": what, "order": k, "residual": d.to_json()}));
    }
    Ok(())
}

fn working_cutoffs(p: &Poly, order: usize) -> Cutoffs {
    let c = p.cutoffs();
    Cutoffs::new(c.x.max(order).max(1), c.y.max(order).max(1))
}

/// `Gamma2^-(z) Gamma1^-(w) = (1 - zw) :Gamma2^-(z) Gamma1^-(w):` on `p`, with the normal
/// ordered product `exp(xi(y,z)) exp(xi(x,w)) exp(-xi(d~x,z)) exp(-xi(d~y,w))`. Both sides
/// are expanded in `s` with `z, w` replaced by `z s, w s` and compared through `s^order`.
pub fn normal_order_check(z: &Rational, w: &Rational, p: &Poly, order: usize) -> Result<CheckReport> {
    let cut = working_cutoffs(p, order);
    let start = graded_unit(cut, order, p)?;
    let lhs = graded_apply(
        &graded_apply(&start, order, 1, w, gamma_op(1, Sign::Minus))?,
        order,
        1,
        z,
        gamma_op(2, Sign::Minus),
    )?;
    let mut rhs = graded_apply(&start, order, 1, w, neg_deriv_op(Family::Y))?;
    rhs = graded_apply(&rhs, order, 1, z, neg_deriv_op(Family::X))?;
    rhs = graded_apply(&rhs, order, 1, w, mult_op(Family::X))?;
    rhs = graded_apply(&rhs, order, 1, z, mult_op(Family::Y))?;
    rhs = graded_apply(&rhs, order, 2, &-(z * w), |q, n| Ok(vec![q.clone(); n.min(1) + 1]))?;
    let mut report = CheckReport::new(
        "normal-order",
        json!({"z": rational_to_string(z), "w": rational_to_string(w), "p": p.to_string(), "order": order}),
    );
    compare_graded(&mut report, "normal order", &lhs, &rhs)?;
    if !report.pass {
        report.note("lhs", graded_json(&lhs));
        report.note("rhs", graded_json(&rhs));
    }
    Ok(report)
}

/// `Gamma_i^+(z) Gamma_i^-(w) = (1 - w/z)^{-1} Gamma_i^-(w) Gamma_i^+(z)` on `p`, and commutation of
/// `Gamma_i^+(z)` with `Gamma_j^-(w)` for `j != i`. Expanded with `1/z -> s/z`, `w -> w s`
/// through `s^order`.
pub fn gamma_exchange_check(i: u8, z: &Rational, w: &Rational, p: &Poly, order: usize) -> Result<CheckReport> {
    if z.is_zero() {
        return Err(Error::Singular("z = 0".into()));
    }
    if i != 1 && i != 2 {
        return Err(Error::InvalidArgument(format!("vertex operator family {i}")));
    }
    let j = 3 - i;
    let a = z.recip();
    let cut = working_cutoffs(p, order);
    let start = graded_unit(cut, order, p)?;
    let mut report = CheckReport::new(
        "gamma-exchange",
        json!({"family": i, "z": rational_to_string(z), "w": rational_to_string(w), "p": p.to_string(), "order": order}),
    );
    let lhs = graded_apply(
        &graded_apply(&start, order, 1, w, gamma_op(i, Sign::Minus))?,
        order,
        1,
        &a,
        gamma_op(i, Sign::Plus),
    )?;
    let swapped = graded_apply(
        &graded_apply(&start, order, 1, &a, gamma_op(i, Sign::Plus))?,
        order,
        1,
        w,
        gamma_op(i, Sign::Minus),
    )?;
    let rhs = graded_apply(&swapped, order, 2, &(w * &a), |q, n| Ok(vec![q.clone(); n + 1]))?;
    compare_graded(&mut report, "same family", &lhs, &rhs)?;
    let cross_l = graded_apply(
        &graded_apply(&start, order, 1, w, gamma_op(j, Sign::Minus))?,
        order,
        1,
        &a,
        gamma_op(i, Sign::Plus),
    )?;
    let cross_r = graded_apply(
        &graded_apply(&start, order, 1, &a, gamma_op(i, Sign::Plus))?,
        order,
        1,
        w,
        gamma_op(j, Sign::Minus),
    )?;
    compare_graded(&mut report, "cross family", &cross_l, &cross_r)?;
    Ok(report)
}

/// For every `M` in `K..=max_m`, the coefficients `0..=K` of the truncated
/// `sum_{k <= M} u^{2k} h_k` on `p` equal those of the exponential `Gamma_i^-` on `p`.
///
/// The limit is sometimes stated with these operators labelled `Gamma_i^+`; the exponential
/// `exp(xi(x - d~y, u^2))` is what is compared, and the report records the label.
pub fn vertex_rep_limit_check(i: u8, k: usize, p: &Poly, max_m: usize) -> Result<CheckReport> {
    let spec = GammaSpec::new(i, Sign::Minus, k)?;
    let shift = if i == 1 { Shift::XMinusDy } else { Shift::YMinusDx };
    let p = p.with_cutoffs(working_cutoffs(p, max_m.max(k)))?;
    let gamma = gamma_apply(&spec, &p)?;
    let mut report =
        CheckReport::new("vertex-limit", json!({"family": i, "order": k, "p": p.to_string(), "max_m": max_m}));
    report.note(
        "operator",
        format!(
            "exp(xi({}, u^2)), labelled Gamma{i}^+ in the limit statement",
            if i == 1 { "x - d~y" } else { "y - d~x" }
        ),
    );
    for m in k..=max_m.max(k) {
        let trunc = truncated_h_apply(m, shift, &p)?;
        for (n, g) in gamma.iter().enumerate() {
            let d = trunc[n].try_sub(g)?;
            report.expect(d.is_zero(), || json!({"m": m, "coefficient": n, "residual": d.to_json()}));
        }
    }
    Ok(report)
}

/// Product formula, full correlator and enumeration through `q^K`, coefficient by coefficient;
/// the minus-only correlator against `prod (1 - q^n)^n`; even-exponent purity of both correlators.
pub fn macmahon_check(k: usize) -> Result<CheckReport> {
    let product = macmahon_series(k)?;
    let full = correlator_full(k)?;
    let counts = plane_partition_series(k)?;
    let minus = correlator_minus(k)?;
    let inverse = inverse_macmahon_series(k)?;
    let mut report = CheckReport::new("macmahon", json!({"order": k}));
    let (a, b, c) = (product.q_coeffs(k), full.q_coeffs(k), counts.q_coeffs(k));
    report.expect(
        a == b && b == c,
        || json!({"product": product.to_json(), "correlator": full.to_json(), "enumeration": counts.to_json()}),
    );
    report.expect(
        minus.q_coeffs(k) == inverse.q_coeffs(k),
        || json!({"minus_correlator": minus.to_json(), "expected": inverse.to_json()}),
    );
    report.expect(full.is_even() && minus.is_even(), || json!({"odd_powers": true}));
    report.note("series", product.to_json());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn ints(s: &QSeries, k: usize) -> Vec<i64> {
        s.q_coeffs(k).iter().map(|c| c.to_integer().to_i64().unwrap()).collect()
    }

    #[test]
    fn product_formula() {
        assert_eq!(ints(&macmahon_series(0).unwrap(), 0), vec![1]);
        assert_eq!(ints(&macmahon_series(6).unwrap(), 6), vec![1, 1, 3, 6, 13, 24, 48]);
        assert_eq!(ints(&inverse_macmahon_series(4).unwrap(), 4), vec![1, -1, -2, -1, 0]);
        assert_eq!(macmahon_series(3).unwrap().to_json(), json!([1, 1, 3, 6]));
    }

    #[test]
    fn enumeration() {
        let counts: Vec<u64> = (0..=6).map(|n| plane_partition_count(n).unwrap()).collect();
        assert_eq!(counts, vec![1, 1, 3, 6, 13, 24, 48]);
        assert!(matches!(plane_partition_count(40), Err(Error::BoundExceeded { .. })));
        let all = PlanePartition::all_of_total(3).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|p| p.total() == 3 && PlanePartition::new(p.rows().to_vec()).is_ok()));
        assert!(PlanePartition::new(vec![vec![1, 2]]).is_err());
        assert!(PlanePartition::new(vec![vec![1], vec![2]]).is_err());
    }

    #[test]
    fn minus_correlator() {
        assert_eq!(ints(&correlator_minus(0).unwrap(), 0), vec![1]);
        assert_eq!(ints(&correlator_minus(1).unwrap(), 1), vec![1, -1]);
        let c = correlator_minus(4).unwrap();
        assert!(c.is_even());
        assert_eq!(ints(&c, 4), vec![1, -1, -2, -1, 0]);
    }

    #[test]
    fn full_correlator() {
        assert_eq!(ints(&correlator_full(2).unwrap(), 2), vec![1, 1, 3]);
        let c = correlator_full(4).unwrap();
        assert!(c.is_even());
        assert_eq!(ints(&c, 4), vec![1, 1, 3, 6, 13]);
        // one more level changes nothing in the window
        assert_eq!(correlator_full_levels(3, 4).unwrap(), correlator_full(3).unwrap());
        assert_eq!(correlator_minus_levels(3, 4).unwrap(), correlator_minus(3).unwrap());
    }

    #[test]
    fn exchange_and_normal_order() {
        let cut = Cutoffs::new(2, 2);
        let one = Poly::one(cut);
        let x1 = Poly::parse("x1", cut).unwrap();
        assert!(normal_order_check(&rat(2, 1), &rat(1, 3), &one, 2).unwrap().pass);
        assert!(normal_order_check(&rat(2, 1), &rat(-1, 3), &x1, 3).unwrap().pass);
        assert!(normal_order_check(&rat(0, 1), &rat(5, 1), &x1, 2).unwrap().pass);
        assert!(gamma_exchange_check(1, &rat(3, 1), &rat(1, 1), &one, 4).unwrap().pass);
        let xy = Poly::parse("x1 + y1", cut).unwrap();
        assert!(gamma_exchange_check(2, &rat(3, 2), &rat(2, 1), &xy, 3).unwrap().pass);
        assert!(gamma_exchange_check(1, &rat(0, 1), &rat(1, 1), &one, 2).is_err());
    }

    #[test]
    fn limit_examples() {
        let cut = Cutoffs::new(2, 2);
        let r = vertex_rep_limit_check(1, 2, &Poly::one(cut), 4).unwrap();
        assert!(r.pass);
        let x1 = Poly::parse("x1", cut).unwrap();
        assert!(vertex_rep_limit_check(2, 1, &x1, 3).unwrap().pass);
        let g = gamma_apply(&GammaSpec::new(2, Sign::Minus, 1).unwrap(), &x1).unwrap();
        assert_eq!(g[1], Poly::parse("x1*y1 - 1", cut).unwrap());
    }
}
