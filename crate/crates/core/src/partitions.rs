//! Young diagrams, interlacing and horizontal strips.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A weakly decreasing sequence of positive integers, stored without zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}: zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}: not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// i-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.part(0)
    }

    /// The partition with `counts[k]` parts equal to `k`.
    pub fn from_occupations(counts: &BTreeMap<usize, i64>) -> Result<Self> {
        let mut parts = Vec::new();
        for (&k, &c) in counts.iter().rev() {
            if c < 0 {
                return Err(Error::NegativeMultiplicity { index: k as i64, count: c });
            }
            if k == 0 {
                if c != 0 {
                    return Err(Error::InvalidArgument("occupation index 0 carries no rows".into()));
                }
                continue;
            }
            parts.extend(std::iter::repeat_n(k, c as usize));
        }
        Ok(Partition { parts })
    }

    /// Multiplicities of each part size.
    pub fn occupations(&self) -> BTreeMap<usize, i64> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest()).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.largest() <= cols
    }

    /// All partitions of `n`, in the canonical order.
    pub fn all_of_weight(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with weight at most `n`.
    pub fn all_up_to_weight(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_weight).collect()
    }

    /// Partitions inside the `rows x cols` box.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut v: Vec<Partition> =
            Partition::all_up_to_weight(rows * cols).into_iter().filter(|p| p.fits_in_box(rows, cols)).collect();
        v.sort();
        v
    }
}

/// `nu_1 >= lam_1 >= nu_2 >= lam_2 >= ...` with missing parts read as zero.
pub fn interlaces(nu: &Partition, lam: &Partition) -> bool {
    let n = nu.len().max(lam.len());
    (0..n).all(|i| nu.part(i) >= lam.part(i) && lam.part(i) >= nu.part(i + 1))
}

/// All `nu` obtained from `lam` by adding a horizontal strip of `n` boxes.
pub fn add_horizontal_strips(lam: &Partition, n: usize) -> Vec<Partition> {
    // nu_1 = lam_1 + a_1 (unbounded), nu_i in [lam_i, lam_{i-1}] for i >= 2, up to row l+1.
    fn rec(lam: &Partition, i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > lam.len() {
            if rem == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let base = lam.part(i);
        let room = if i == 0 { rem } else { (lam.part(i - 1) - base).min(rem) };
        for add in (0..=room).rev() {
            cur.push(base + add);
            rec(lam, i + 1, rem - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lam, 0, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All `nu` with `lam / nu` a horizontal strip of `n` boxes.
pub fn remove_horizontal_strips(lam: &Partition, n: usize) -> Vec<Partition> {
    if n > lam.weight() {
        return Vec::new();
    }
    // nu_i in [lam_{i+1}, lam_i]
    fn rec(lam: &Partition, i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lam.len() {
            if rem == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let top = lam.part(i);
        let room = (top - lam.part(i + 1)).min(rem);
        for take in 0..=room {
            cur.push(top - take);
            rec(lam, i + 1, rem - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lam, 0, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl Ord for Partition {
    /// Graded: by weight, then lexicographically larger parts first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// Comma-joined parts; the empty partition renders as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(format!("`{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("`{s}`: zero part")));
        }
        Partition::new(parts)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `Partition::new(...).unwrap()` shorthand for literals.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::partitions::Partition::new(vec![$($p),+]).unwrap() };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn occupations() {
        let m = BTreeMap::from([(1, 2), (2, 1)]);
        assert_eq!(Partition::from_occupations(&m).unwrap(), part![2, 1, 1]);
        assert_eq!(Partition::from_occupations(&BTreeMap::new()).unwrap(), part![]);
        let m = BTreeMap::from([(3, 1), (1, 1)]);
        assert_eq!(Partition::from_occupations(&m).unwrap(), part![3, 1]);
        let m = BTreeMap::from([(2, -1)]);
        assert!(matches!(Partition::from_occupations(&m), Err(Error::NegativeMultiplicity { .. })));
    }

    #[test]
    fn interlacing() {
        assert!(interlaces(&part![3, 1], &part![2, 1]));
        assert!(!interlaces(&part![2, 2], &part![1]));
        for l in Partition::all_up_to_weight(6) {
            assert!(interlaces(&l, &l));
        }
    }

    #[test]
    fn strips() {
        assert_eq!(
            add_horizontal_strips(&part![2, 1], 2),
            vec![part![4, 1], part![3, 2], part![3, 1, 1], part![2, 2, 1]]
        );
        assert_eq!(add_horizontal_strips(&part![2, 1], 0), vec![part![2, 1]]);
        assert_eq!(add_horizontal_strips(&part![], 3), vec![part![3]]);
        assert_eq!(remove_horizontal_strips(&part![2, 1], 1), vec![part![2], part![1, 1]]);
        assert!(remove_horizontal_strips(&part![1], 2).is_empty());
        assert_eq!(remove_horizontal_strips(&part![3, 3], 0), vec![part![3, 3]]);
    }

    #[test]
    fn strip_enumeration_matches_brute_force() {
        for lam in Partition::all_up_to_weight(6) {
            for n in 0..=4 {
                let brute: Vec<Partition> =
                    Partition::all_of_weight(lam.weight() + n).into_iter().filter(|nu| interlaces(nu, &lam)).collect();
                let mut brute = brute;
                brute.sort();
                assert_eq!(add_horizontal_strips(&lam, n), brute, "{lam:?} + {n}");
            }
        }
    }

    #[test]
    fn boxes_and_conjugates() {
        assert!(part![2, 1, 1].fits_in_box(3, 2));
        assert!(!part![2, 1, 1].fits_in_box(2, 5));
        assert!(part![].fits_in_box(0, 0));
        assert_eq!(part![3, 1].conjugate(), part![2, 1, 1]);
        assert_eq!(part![].conjugate(), part![]);
        for l in Partition::all_up_to_weight(7) {
            assert_eq!(l.conjugate().conjugate(), l);
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("2,1,1".parse::<Partition>().unwrap(), part![2, 1, 1]);
        assert_eq!("".parse::<Partition>().unwrap(), part![]);
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!(part![2, 1, 1].to_string(), "2,1,1");
        assert_eq!(part![].to_string(), "");
    }

    #[test]
    fn strip_duality() {
        for lam in Partition::all_up_to_weight(8) {
            for n in 0..=4 {
                for nu in add_horizontal_strips(&lam, n) {
                    assert!(remove_horizontal_strips(&nu, n).contains(&lam));
                }
                for nu in remove_horizontal_strips(&lam, n) {
                    assert!(add_horizontal_strips(&nu, n).contains(&lam));
                }
            }
        }
    }

    #[test]
    fn interlacing_antisymmetric_on_equal_weight() {
        let all = Partition::all_up_to_weight(6);
        for a in &all {
            for b in all.iter().filter(|b| b.weight() == a.weight()) {
                if interlaces(a, b) && interlaces(b, a) {
                    assert_eq!(a, b);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn occupations_roundtrip(counts in proptest::collection::btree_map(1usize..7, 0i64..4, 0..5)) {
            let p = Partition::from_occupations(&counts).unwrap();
            let back: BTreeMap<usize, i64> = counts.into_iter().filter(|(_, c)| *c > 0).collect();
            prop_assert_eq!(p.occupations(), back);
        }
    }
}
