use proptest::prelude::*;
use qcharlier::linearization::{psi_s, psi_s_inverse};
use qcharlier::partitions::{is_rg, ls, mixed_statistic, rg_decode, rg_encode, stats, RgWord};
use qcharlier::perm::CyclePermutation;
use qcharlier::tableaux::{
    partition_to_tableau, perm_to_tableau, rectangular_encoding, symmetry_involution,
    tableau_to_partition, tableau_to_perm,
};

/// Turns arbitrary letters into a restricted growth word.
fn rg_word() -> impl Strategy<Value = RgWord> {
    prop::collection::vec(0u32..6, 0..12).prop_map(|raw| {
        let mut max = 0;
        let letters = raw
            .into_iter()
            .map(|r| {
                let l = (r % (max + 1)) + 1;
                max = max.max(l);
                l
            })
            .collect();
        RgWord::new(letters).unwrap()
    })
}

fn permutation() -> impl Strategy<Value = CyclePermutation> {
    (1usize..9)
        .prop_flat_map(|n| {
            (
                Just(n),
                Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(_, order, cuts)| {
            let mut cycles: Vec<Vec<usize>> = Vec::new();
            for (e, cut) in order.into_iter().zip(cuts) {
                match cycles.last_mut() {
                    Some(c) if !cut => c.push(e),
                    _ => cycles.push(vec![e]),
                }
            }
            CyclePermutation::new(cycles).unwrap()
        })
}

proptest! {
    #[test]
    fn block_encoding_round_trips(w in rg_word()) {
        prop_assert!(is_rg(w.letters()));
        let ground: Vec<usize> = (1..=w.len()).collect();
        let pi = rg_decode(&w, &ground).unwrap();
        prop_assert_eq!(pi.num_blocks(), w.num_blocks() as usize);
        prop_assert_eq!(rg_encode(&pi), w);
    }

    #[test]
    fn psi_is_invertible_and_shifts_ls(w in rg_word(), mask in any::<u16>()) {
        let k = w.num_blocks();
        let s: Vec<u32> = (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let u = psi_s(w.letters(), &s, k);
        prop_assert!(is_rg(&u));
        prop_assert_eq!(psi_s_inverse(&u, &s, k), w.letters().to_vec());
        let offset: usize = s.iter().map(|&x| (k - x) as usize).sum();
        prop_assert_eq!(ls(&u), mixed_statistic(w.letters(), &s) + offset);
    }

    #[test]
    fn partition_tableau_round_trips(w in rg_word()) {
        let k = w.num_blocks() as usize;
        let t = partition_to_tableau(&w);
        prop_assert_eq!(tableau_to_partition(&t, k).unwrap(), w.clone());
        prop_assert_eq!(t.inv(), stats(w.letters()).lb);
        let r = symmetry_involution(&t);
        prop_assert_eq!(r.inv_nin(), (t.nin(), t.inv()));
        prop_assert_eq!(symmetry_involution(&r), t);
    }

    #[test]
    fn rectangle_has_one_cell_per_letter(w in prop::collection::vec(1u32..6, 0..8), h in 1usize..7) {
        let r = rectangular_encoding(&w, h);
        if w.iter().all(|&b| b as usize <= h) {
            let t = r.unwrap();
            prop_assert_eq!(t.num_columns(), w.len());
            prop_assert!(t.columns().iter().all(|c| c.len == h));
        } else {
            prop_assert!(r.is_err());
        }
    }

    #[test]
    fn permutation_tableau_round_trips(sigma in permutation()) {
        let elems: Vec<usize> = (1..=sigma.size()).collect();
        let t = perm_to_tableau(&sigma);
        prop_assert_eq!(t.inv(), sigma.inv());
        prop_assert_eq!(t.num_columns(), sigma.size() - sigma.cyc());
        prop_assert_eq!(tableau_to_perm(&t, &elems).unwrap(), sigma);
    }
}
