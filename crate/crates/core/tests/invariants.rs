//! Cross-checks of the chain-based machinery against brute force, plus
//! structural invariants on tuples and the two searches.

use std::collections::HashSet;
use std::sync::Arc;

use chiral_core::{
    centralizer, classify, classify_hhl, classify_with_pruning, conjugacy_classes,
    cyclic_normalizer, involutions, subgroup_intersection, AlphaTuple, PermGroup, Permutation,
    SearchConfig,
};

fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &cycles).unwrap()
}

fn sym(n: usize) -> PermGroup {
    PermGroup::from_generators(
        n,
        vec![
            cyc(n, &[&[1, 2]]),
            Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap(),
        ],
    )
    .unwrap()
}

fn alt(n: usize) -> PermGroup {
    // 3-cycle plus an n-cycle (n odd) or (n-1)-cycle fixed-up generator set.
    let mut gens = vec![cyc(n, &[&[1, 2, 3]])];
    if n % 2 == 1 {
        gens.push(Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap());
    } else {
        gens.push(Permutation::from_cycles(n, &[(2..=n).collect()]).unwrap());
    }
    PermGroup::from_generators(n, gens).unwrap()
}

fn dihedral(n: usize) -> PermGroup {
    let rot = Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap();
    let refl_images: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    let refl = Permutation::from_images(refl_images).unwrap();
    PermGroup::from_generators(n, vec![rot, refl]).unwrap()
}

fn frobenius20() -> PermGroup {
    PermGroup::from_generators(
        5,
        vec![cyc(5, &[&[1, 2, 3, 4, 5]]), cyc(5, &[&[2, 3, 5, 4]])],
    )
    .unwrap()
}

/// Closure of a generator list by repeated multiplication; independent of
/// the stabilizer chain.
fn brute_force_closure(degree: usize, gens: &[Permutation], limit: usize) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(Permutation::identity(degree));
    let mut frontier = vec![Permutation::identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                assert!(seen.len() <= limit, "closure exceeded limit {}", limit);
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    out
}

fn corpus() -> Vec<(String, PermGroup)> {
    let mut out = vec![
        ("sym3".into(), sym(3)),
        ("sym4".into(), sym(4)),
        ("sym5".into(), sym(5)),
        ("alt4".into(), alt(4)),
        ("alt5".into(), alt(5)),
        ("f20".into(), frobenius20()),
        ("c7".into(), PermGroup::from_generators(7, vec![cyc(7, &[&[1, 2, 3, 4, 5, 6, 7]])]).unwrap()),
    ];
    for n in 3..=12 {
        out.push((format!("dih{}", n), dihedral(n)));
    }
    out
}

#[test]
fn chain_order_and_membership_match_brute_force() {
    for (name, g) in corpus() {
        let closure = brute_force_closure(g.degree(), g.generators(), 10_000);
        assert_eq!(
            g.order().get(),
            closure.len() as u128,
            "order mismatch for {}",
            name
        );
        let mut listed = g.elements(10_000).unwrap();
        listed.sort();
        assert_eq!(listed, closure, "element set mismatch for {}", name);
        for e in &closure {
            assert!(g.contains(e).unwrap(), "member rejected in {}", name);
        }
    }
}

#[test]
fn conjugacy_classes_match_brute_force() {
    for (name, g) in corpus() {
        if g.order().get() > 5000 {
            continue;
        }
        let elements = g.elements(5000).unwrap();
        let classes = conjugacy_classes(&g, 5000).unwrap();
        let total: u128 = classes.iter().map(|c| c.size).collect::<Vec<_>>().iter().sum();
        assert_eq!(total, g.order().get(), "class sizes must sum for {}", name);
        // Brute-force class of each representative.
        for c in &classes {
            let mut orbit: HashSet<Permutation> = HashSet::new();
            for h in &elements {
                orbit.insert(c.representative.conjugate_by(h));
            }
            assert_eq!(orbit.len() as u128, c.size, "class size for {}", name);
            assert_eq!(
                orbit.iter().min().unwrap(),
                &c.representative,
                "representative must be class-minimal for {}",
                name
            );
        }
    }
}

#[test]
fn centralizers_match_brute_force() {
    for (name, g) in corpus() {
        if g.order().get() > 1000 {
            continue;
        }
        let elements = g.elements(1000).unwrap();
        for c in conjugacy_classes(&g, 1000).unwrap() {
            let x = &c.representative;
            let brute: Vec<&Permutation> = elements
                .iter()
                .filter(|h| x.then(h) == h.then(x))
                .collect();
            let cent = centralizer(&g, x).unwrap();
            assert_eq!(
                cent.order().get(),
                brute.len() as u128,
                "centralizer order for {}",
                name
            );
            for h in brute {
                assert!(cent.contains(h).unwrap());
            }
        }
    }
}

#[test]
fn cyclic_normalizers_match_brute_force() {
    for (name, g) in corpus() {
        if g.order().get() > 1000 {
            continue;
        }
        let elements = g.elements(1000).unwrap();
        for c in conjugacy_classes(&g, 1000).unwrap() {
            let x = &c.representative;
            let cyclic = PermGroup::from_generators(g.degree(), vec![x.clone()]).unwrap();
            let brute: Vec<&Permutation> = elements
                .iter()
                .filter(|h| cyclic.contains(&x.conjugate_by(h)).unwrap())
                .collect();
            let norm = cyclic_normalizer(&g, x).unwrap();
            assert_eq!(
                norm.order().get(),
                brute.len() as u128,
                "normalizer order for {}",
                name
            );
        }
    }
}

#[test]
fn intersections_match_brute_force() {
    let g = sym(4);
    let elements = g.elements(100).unwrap();
    let subs = vec![
        PermGroup::from_generators(4, vec![cyc(4, &[&[1, 2, 3, 4]])]).unwrap(),
        PermGroup::from_generators(4, vec![cyc(4, &[&[1, 3]]), cyc(4, &[&[2, 4]])]).unwrap(),
        PermGroup::from_generators(4, vec![cyc(4, &[&[1, 2, 3]])]).unwrap(),
        PermGroup::from_generators(4, vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[3, 4]])]).unwrap(),
    ];
    for h in &subs {
        for k in &subs {
            let brute: Vec<&Permutation> = elements
                .iter()
                .filter(|e| h.contains(e).unwrap() && k.contains(e).unwrap())
                .collect();
            let m = subgroup_intersection(h, k, 1000).unwrap();
            assert_eq!(m.order().get(), brute.len() as u128);
        }
    }
}

#[test]
fn involution_list_matches_order_filter() {
    for (_, g) in corpus() {
        if g.order().get() > 5000 {
            continue;
        }
        let expected: Vec<Permutation> = {
            let mut v: Vec<Permutation> = g
                .elements(5000)
                .unwrap()
                .into_iter()
                .filter(|e| e.order() == 2)
                .collect();
            v.sort();
            v
        };
        assert_eq!(involutions(&g, 5000).unwrap(), expected);
    }
}

#[test]
fn alpha_sigma_round_trip_on_random_tuples() {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (_, g) in corpus() {
        if g.order().get() > 360 {
            continue;
        }
        let g = Arc::new(g);
        let elements = g.elements(360).unwrap();
        let non_invol: Vec<&Permutation> =
            elements.iter().filter(|e| e.order() >= 3).collect();
        let invol: Vec<&Permutation> = elements.iter().filter(|e| e.order() == 2).collect();
        if non_invol.is_empty() || invol.is_empty() {
            continue;
        }
        for _ in 0..20 {
            let a1 = (*non_invol.choose(&mut rng).unwrap()).clone();
            let a2 = (*invol.choose(&mut rng).unwrap()).clone();
            let t = match AlphaTuple::new(Arc::clone(&g), vec![a1, a2]) {
                Ok(t) => t,
                Err(_) => continue,
            };
            let back = t.to_sigma().to_alpha().unwrap();
            assert_eq!(back.alphas(), t.alphas());
            assert_eq!(back.schlafli_type(), t.schlafli_type());
            // Mirror is an involution on tuples.
            assert_eq!(t.mirror().mirror().alphas(), t.alphas());
        }
    }
}

#[test]
fn parabolic_orders_are_monotone_in_the_index_set() {
    let g = Arc::new(frobenius20());
    let (records, _) = classify(&g, &SearchConfig::default()).unwrap();
    assert!(!records.is_empty());
    for r in &records {
        let n = r.tuple.alphas().len() + 1;
        let full: Vec<usize> = (0..n).collect();
        let whole = r.tuple.parabolic(&full).unwrap();
        assert_eq!(whole.order(), g.order());
        for i in 0..n {
            let sub: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            let p = r.tuple.parabolic(&sub).unwrap();
            assert!(p.order() <= whole.order());
            // Every generator of the smaller parabolic lies in the bigger.
            for gen in p.generators() {
                assert!(whole.contains(gen).unwrap());
            }
        }
    }
}

#[test]
fn pruning_is_sound_on_the_corpus() {
    for (name, g) in corpus() {
        if g.order().get() > 360 {
            continue;
        }
        let g = Arc::new(g);
        let cfg = SearchConfig {
            include_regular: true,
            ..SearchConfig::default()
        };
        let (pruned, _) = classify_with_pruning(&g, &cfg, true).unwrap();
        let (unpruned, _) = classify_with_pruning(&g, &cfg, false).unwrap();
        let key = |rs: &[chiral_core::PolytopeRecord]| -> Vec<(usize, Vec<u64>, bool)> {
            let mut v: Vec<_> = rs
                .iter()
                .map(|r| (r.rank, r.schlafli.entries.clone(), r.chiral))
                .collect();
            v.sort();
            v
        };
        assert_eq!(key(&pruned), key(&unpruned), "pruning changed output for {}", name);
    }
}

#[test]
fn the_two_searches_agree_on_the_corpus() {
    for (name, g) in corpus() {
        if g.order().get() > 360 {
            continue;
        }
        let g = Arc::new(g);
        let cfg = SearchConfig {
            include_regular: true,
            ..SearchConfig::default()
        };
        let (fast, _) = classify(&g, &cfg).unwrap();
        let (oracle, _) = classify_hhl(&g, &cfg).unwrap();
        let key = |rs: &[chiral_core::PolytopeRecord]| -> Vec<(usize, Vec<u64>, bool)> {
            let mut v: Vec<_> = rs
                .iter()
                .map(|r| (r.rank, r.schlafli.entries.clone(), r.chiral))
                .collect();
            v.sort();
            v
        };
        assert_eq!(key(&fast), key(&oracle), "searches disagree on {}", name);
    }
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
        Just(degree).prop_perturb(move |d, mut rng| {
            let mut images: Vec<u32> = (0..d as u32).collect();
            for i in (1..images.len()).rev() {
                let j = (rng.next_u32() as usize) % (i + 1);
                images.swap(i, j);
            }
            Permutation::from_images(images).unwrap()
        })
    }

    proptest! {
        #[test]
        fn composition_is_associative(
            a in arb_perm(8), b in arb_perm(8), c in arb_perm(8)
        ) {
            prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        }

        #[test]
        fn inverse_cancels(a in arb_perm(8)) {
            prop_assert!(a.then(&a.inverse()).is_identity());
            prop_assert!(a.inverse().then(&a).is_identity());
        }

        #[test]
        fn conjugation_preserves_order(a in arb_perm(8), h in arb_perm(8)) {
            prop_assert_eq!(a.conjugate_by(&h).order(), a.order());
        }

        #[test]
        fn cyclic_subgroup_order_divides_group_order(
            a in arb_perm(6), b in arb_perm(6)
        ) {
            let g = PermGroup::from_generators(6, vec![a.clone(), b]).unwrap();
            prop_assert_eq!(g.order().get() % u128::from(a.order()), 0);
        }
    }
}
