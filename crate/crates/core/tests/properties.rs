use std::collections::BTreeMap;

use ladders_core::oracle::{
    a_invariant_by_cells, brute_permissible, dilworth_width, hook_length_count,
};
use ladders_core::strings::{beta_of, string_form};
use ladders_core::{
    bitableau_of, bz_derivative, bz_string, c_count, c_prime_tuple, c_tuple, cartan_form,
    column_removal_check, content, is_permissible_pair, is_proper, is_restricted, knuth_viennot,
    ladder_of_partition, ladders_of, multiseg_of, pad, phi_multiseg, phi_weights, rsk_transform,
    specht_rsk_verify, standard_tableaux, transfer_multiplicities, AdmissibleSequence,
    BitableauPair, LadderSequence, LaurentPoly, Multicharge, Multipartition, MultiplicityTable,
    Multisegment, Partition, Segment, StringVector, Weight,
};
use proptest::prelude::*;

fn segment(lo: i64, hi: i64) -> impl Strategy<Value = Segment> {
    (lo..=hi, lo..=hi).prop_map(|(a, b)| Segment::new(a.min(b), a.max(b)).unwrap())
}

fn multisegment(lo: i64, hi: i64, max_len: usize) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec(segment(lo, hi), 0..=max_len).prop_map(Multisegment::new)
}

fn nonempty(lo: i64, hi: i64, max_len: usize) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec(segment(lo, hi), 1..=max_len).prop_map(Multisegment::new)
}

fn partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn charge_and_parts() -> impl Strategy<Value = (Multicharge, Multipartition)> {
    (1usize..=3)
        .prop_flat_map(|l| {
            (
                prop::collection::vec(-3i64..=3, l),
                prop::collection::vec(partition(4, 4), l),
            )
        })
        .prop_map(|(mut k, mu)| {
            k.sort_unstable_by(|a, b| b.cmp(a));
            (Multicharge::new(k).unwrap(), Multipartition::new(mu))
        })
}

fn admissible(max_len: usize) -> impl Strategy<Value = AdmissibleSequence> {
    prop::collection::vec(-3i64..=3, 1..=max_len).prop_map(|mut v| {
        v.dedup();
        AdmissibleSequence::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rsk_entries_are_ladders_of_decreasing_size(m in nonempty(-5, 5, 9)) {
        let rsk = rsk_transform(&m).unwrap();
        prop_assert!(rsk.ladders().iter().all(Multisegment::is_ladder));
        prop_assert!(rsk.ladders().windows(2).all(|w| w[0].len() >= w[1].len()));
        prop_assert_eq!(rsk.ladders().iter().map(Multisegment::wt).sum::<Weight>(), m.wt());
        prop_assert_eq!(rsk.ladders().iter().map(Multisegment::b_invariant).sum::<Weight>(), m.b_invariant());
        prop_assert_eq!(rsk.len(), dilworth_width(&m));
    }

    #[test]
    fn each_step_lowers_width_by_one(m in nonempty(-4, 4, 8)) {
        prop_assume!(!m.is_ladder());
        let (l, rest) = knuth_viennot(&m).unwrap();
        prop_assert_eq!(dilworth_width(&rest) + 1, dilworth_width(&m));
        prop_assert!(brute_permissible(&l, &rest).unwrap());
    }

    #[test]
    fn fast_permissibility_matches_exhaustive_search(
        l in nonempty(-3, 3, 4).prop_filter("ladder", Multisegment::is_ladder),
        m in multisegment(-3, 3, 6),
    ) {
        prop_assert_eq!(is_permissible_pair(&l, &m).unwrap(), brute_permissible(&l, &m).unwrap());
    }

    #[test]
    fn rsk_of_dagger_is_well_formed(m in nonempty(-4, 4, 8)) {
        let d = m.dagger();
        let rsk = rsk_transform(&d).unwrap();
        prop_assert!(rsk.ladders().iter().all(Multisegment::is_ladder));
        prop_assert_eq!(rsk.len(), dilworth_width(&d));
        prop_assert_eq!(rsk.total().wt(), d.wt());
    }

    #[test]
    fn bitableau_reads_back_as_rsk(m in nonempty(-4, 4, 8)) {
        let pq = bitableau_of(&m).unwrap();
        let rsk = rsk_transform(&m).unwrap();
        prop_assert_eq!(ladders_of(&pq).unwrap(), rsk.clone());
        prop_assert_eq!(c_tuple(rsk.ladders()), c_count(&pq));
        prop_assert_eq!(c_prime_tuple(rsk.ladders()), c_count(&pq.increment_p()));
        prop_assert_eq!(ladders_of(&pq.increment_p()).unwrap(), rsk.derive());
    }

    #[test]
    fn a_invariant_is_even_and_matches_cell_count(mu in partition(6, 6)) {
        prop_assert_eq!(mu.a_invariant() % 2, 0);
        prop_assert_eq!(mu.a_invariant(), a_invariant_by_cells(&mu));
    }

    #[test]
    fn standard_tableaux_match_hook_lengths(mu in partition(3, 3)) {
        prop_assert_eq!(standard_tableaux(&mu).len() as u128, hook_length_count(&mu));
    }

    #[test]
    fn combi_identity_on_random_tuples(ms in prop::collection::vec(multisegment(-3, 3, 4), 1..=4)) {
        let phi = phi_multiseg(&ms);
        prop_assert_eq!(c_tuple(&ms) as i64 - c_prime_tuple(&ms) as i64, phi);
        let bz = AdmissibleSequence::bz(3).unwrap();
        let strings: Vec<StringVector> = ms.iter().map(|m| bz_string(m, 3).unwrap().1).collect();
        let betas: Vec<Weight> = ms.iter().map(Multisegment::wt).collect();
        prop_assert_eq!(phi_weights(&bz, &strings, &betas).unwrap(), phi);
    }

    #[test]
    fn string_form_polarizes(
        (i, a1, a2) in admissible(6).prop_flat_map(|i| {
            let n = i.len();
            (Just(i), prop::collection::vec(0u64..4, n), prop::collection::vec(0u64..4, n))
        })
    ) {
        let (a1, a2) = (StringVector::new(a1), StringVector::new(a2));
        let lhs = string_form(&i, &a1, &a2).unwrap() + string_form(&i, &a2, &a1).unwrap();
        let rhs = cartan_form(&beta_of(&i, &a1).unwrap(), &beta_of(&i, &a2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bz_derivative_is_independent_of_t(m in multisegment(-3, 3, 6), extra in 0i64..3) {
        prop_assert_eq!(bz_derivative(&m, 3 + extra).unwrap(), m.derive());
    }

    #[test]
    fn bz_strings_are_additive(m1 in multisegment(-3, 3, 4), m2 in multisegment(-3, 3, 4)) {
        let (_, s1) = bz_string(&m1, 3).unwrap();
        let (_, s2) = bz_string(&m2, 3).unwrap();
        let (_, s) = bz_string(&m1.sum(&m2), 3).unwrap();
        prop_assert_eq!(s, s1.checked_add(&s2).unwrap());
    }

    #[test]
    fn derivative_commutes_with_rsk(m in nonempty(-4, 4, 8)) {
        let lhs = rsk_transform(&m.extend()).unwrap().derive().without_gaps();
        prop_assert_eq!(lhs, rsk_transform(&m).unwrap());
    }

    #[test]
    fn transfer_survivors_carry_the_summed_string(
        ms in prop::collection::vec(nonempty(-2, 2, 3), 1..=3),
        splits in prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>()), 0..4),
    ) {
        let sum = ms.iter().fold(Multisegment::empty(), |acc, m| acc.sum(m));
        let mut rows = BTreeMap::new();
        rows.insert(sum.clone(), LaurentPoly::one());
        for (which, at) in splits {
            let segs = sum.segments();
            let s = segs[which.index(segs.len())];
            if s.is_point() {
                continue;
            }
            let c = s.begin() + at.index((s.end() - s.begin()) as usize) as i64;
            let mut rest: Vec<Segment> = segs.to_vec();
            rest.retain(|x| x != &s);
            rest.extend(std::iter::repeat_n(s, sum.count(&s) - 1));
            rest.push(Segment::new(s.begin(), c).unwrap());
            rest.push(Segment::new(c + 1, s.end()).unwrap());
            rows.insert(Multisegment::new(rest), LaurentPoly::monomial(1, 1));
        }
        let table = MultiplicityTable::new(rows.clone()).unwrap();
        let out = transfer_multiplicities(&table, &ms).unwrap();
        let target = ms.iter().map(|m| bz_string(m, 3).unwrap().1).fold(StringVector::zeros(7), |a, b| a.checked_add(&b).unwrap());
        for n in rows.keys().filter(|n| n.b_invariant() == sum.b_invariant()) {
            prop_assert_eq!(&bz_string(n, 3).unwrap().1, &target);
            prop_assert!(out.get(&n.derive()).is_some());
        }
        prop_assert!(out.get(&sum.derive()).is_some());
    }

    #[test]
    fn dictionary_on_random_restricted_inputs((kappa, mu) in charge_and_parts()) {
        prop_assume!(is_restricted(&kappa, &mu).unwrap());
        let padded = pad(&kappa, &mu).unwrap();
        prop_assert!(is_proper(&kappa, &padded).unwrap());
        prop_assert_eq!(padded.derived(), mu.clone());
        let report = specht_rsk_verify(&kappa, &mu).unwrap();
        prop_assert!(report.gamma.is_positive());
        prop_assert!(column_removal_check(&kappa, &mu).unwrap());
        prop_assert!(is_restricted(&kappa, &mu.derived()).unwrap());
        let offsets: Vec<i64> = kappa.charges().iter().zip(mu.components())
            .map(|(&k, p)| p.len() as i64 - k).collect();
        prop_assert!(offsets.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(report.multisegment, multiseg_of(&kappa, &mu).unwrap());
    }

    #[test]
    fn partition_ladders((k, mu) in (-3i64..=3, partition(5, 5))) {
        let l = ladder_of_partition(k, &mu);
        prop_assert!(l.is_empty() || l.is_ladder());
        prop_assert_eq!(l.wt(), content(k, &mu.conjugate()));
        prop_assert_eq!(l.derive(), ladder_of_partition(k, &mu.derived()));
    }

    #[test]
    fn json_round_trips(m in nonempty(-4, 4, 7)) {
        let rsk = rsk_transform(&m).unwrap();
        let pq = bitableau_of(&m).unwrap();
        let m2: Multisegment = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        let rsk2: LadderSequence = serde_json::from_str(&serde_json::to_string(&rsk).unwrap()).unwrap();
        let pq2: BitableauPair = serde_json::from_str(&serde_json::to_string(&pq).unwrap()).unwrap();
        prop_assert_eq!(m2, m);
        prop_assert_eq!(rsk2, rsk);
        prop_assert_eq!(pq2, pq);
    }
}

#[test]
fn json_rejects_invalid_values() {
    assert!(serde_json::from_str::<LadderSequence>("[[[1,1],[1,2]]]").is_err());
    assert!(serde_json::from_str::<Multicharge>("[0,1]").is_err());
    assert!(serde_json::from_str::<BitableauPair>(r#"{"P":[[1]],"Q":[[2,1]]}"#).is_err());
    assert!(serde_json::from_str::<Multisegment>("[[2,1]]").is_err());
    let k: Multicharge = serde_json::from_str("[2,1,-1]").unwrap();
    assert_eq!(k.charges(), &[2, 1, -1]);
}
