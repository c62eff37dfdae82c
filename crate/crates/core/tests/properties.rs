use proptest::prelude::*;
use ucphase::macmahon::{correlator_full, macmahon_series, plane_partition_count};
use ucphase::partitions::Partition;
use ucphase::phase::{bethe_expansion, bethe_state, project, PhaseModel};
use ucphase::polyring::{Cutoffs, Degree};
use ucphase::scalars::{rat, Rational};
use ucphase::symfunc::{uc_decompose, uc_synthesize, universal_character_jt, UcVector};

/// Plane partition counts through `q^n` from `n a(n) = sum_k sigma_2(k) a(n - k)`.
fn sigma2_recurrence(n: usize) -> Vec<u64> {
    let sigma2 = |k: usize| (1..=k).filter(|d| k.is_multiple_of(*d)).map(|d| (d * d) as u64).sum::<u64>();
    let mut a = vec![1u64];
    for m in 1..=n {
        let s: u64 = (1..=m).map(|k| sigma2(k) * a[m - k]).sum();
        a.push(s / m as u64);
    }
    a
}

#[test]
fn macmahon_against_divisor_recurrence() {
    let oracle: Vec<Rational> = sigma2_recurrence(10).into_iter().map(|c| rat(c as i64, 1)).collect();
    assert_eq!(macmahon_series(10).unwrap().q_coeffs(10), oracle);
    assert_eq!(correlator_full(5).unwrap().q_coeffs(5), oracle[..=5].to_vec());
    for n in 0..=8 {
        assert_eq!(plane_partition_count(n).unwrap(), sigma2_recurrence(8)[n]);
    }
}

#[test]
fn plane_partition_counts_known_values() {
    let known = [1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500];
    for (n, &c) in known.iter().enumerate() {
        assert_eq!(plane_partition_count(n).unwrap(), c);
    }
}

fn partition_up_to(w: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::all_up_to_weight(w);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (1i64..6, 1i64..4).prop_map(|(p, q)| rat(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decompose_inverts_synthesize(
        terms in prop::collection::vec((partition_up_to(3), partition_up_to(3), -5i64..6), 0..5)
    ) {
        let mut v = UcVector::new();
        for (l, m, c) in terms {
            if c != 0 {
                v.insert((l, m), rat(c, 1));
            }
        }
        let p = uc_synthesize(&v, Cutoffs::new(6, 6)).unwrap();
        prop_assert_eq!(uc_decompose(&p).unwrap(), v);
    }

    #[test]
    fn product_degrees_add(a in partition_up_to(3), b in partition_up_to(2), c in partition_up_to(2), d in partition_up_to(3)) {
        let cut = Cutoffs::new(5, 5);
        let p = universal_character_jt(&a, &b, cut).unwrap();
        let q = universal_character_jt(&c, &d, cut).unwrap();
        let deg = |l: &Partition, m: &Partition| l.weight() as i64 - m.weight() as i64;
        prop_assert_eq!(p.try_mul(&q).unwrap().graded_degree().unwrap(), Degree::Homogeneous(deg(&a, &b) + deg(&c, &d)));
    }

    #[test]
    fn bethe_projection_matches_schur_sum(m1 in 0usize..3, m2 in 0usize..3, u in small_rational(), v in small_rational()) {
        prop_assume!(u != v);
        let model = PhaseModel::two_chain(m1, m2);
        for us in [vec![u.clone()], vec![u.clone(), v.clone()]] {
            let state = bethe_state(&model, &us).unwrap();
            prop_assert_eq!(project(&state), bethe_expansion(&model, &us));
        }
    }
}

#[test]
fn rtt_at_certifying_sample_count() {
    let model = PhaseModel::two_chain(2, 1);
    let n = ucphase::phase::default_sample_count(&model);
    assert_eq!(n, 11);
    let samples = ucphase::phase::sample_pairs(n, 7);
    assert!(ucphase::phase::rtt_check(&model, &samples, 2).unwrap().pass);
}
