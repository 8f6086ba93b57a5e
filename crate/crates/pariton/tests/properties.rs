use proptest::prelude::*;

use pariton::bench::{rngame, GenSpec};
use pariton::game::{parse_pgsolver, write_pgsolver, ParityGame, Player, PositionSet};
use pariton::hpp::{half_bounds, qp_call_bound};
use pariton::oracle::{brute_force_solve, check_dominion, dominions, zielonka_solve};
use pariton::region::{order_less, ExtPriority, PromotionFunction, Snapshot};
use pariton::solve::Algorithm;
use pariton::Strategy as Witness;

fn spec(max_n: usize) -> impl Strategy<Value = GenSpec> {
    (1..=max_n, 0u32..6, 1usize..4, 0usize..3, any::<u64>()).prop_map(|(n, max_prio, min_deg, extra, seed)| GenSpec {
        n,
        max_prio,
        min_deg,
        max_deg: min_deg + extra,
        seed,
    })
}

fn ext_priority() -> impl Strategy<Value = ExtPriority> {
    prop_oneof![Just(ExtPriority::Bot), (0u32..6).prop_map(ExtPriority::Nat), Just(ExtPriority::Top0), Just(ExtPriority::Top1)]
}

fn snapshot() -> impl Strategy<Value = Snapshot> {
    (proptest::collection::vec(any::<bool>(), 4), ext_priority()).prop_map(|(bits, priority)| Snapshot {
        local: PositionSet::from_positions(4, (0..4).filter(|&i| bits[i])),
        priority,
    })
}

fn run_big<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    std::thread::scope(|s| std::thread::Builder::new().stack_size(64 << 20).spawn_scoped(s, f).unwrap().join().unwrap())
}

proptest! {
    #[test]
    fn zielonka_matches_brute_force(spec in spec(8)) {
        let g = rngame(&spec).unwrap();
        let z = zielonka_solve(&g);
        prop_assert!(z.w0.is_disjoint(&z.w1));
        prop_assert_eq!(z.w0.union(&z.w1), g.all_positions());
        prop_assert!(z.same_partition(&brute_force_solve(&g).unwrap()));
    }

    #[test]
    fn every_solver_matches_zielonka(spec in spec(40)) {
        let g = rngame(&spec).unwrap();
        let z = zielonka_solve(&g);
        for algo in Algorithm::ALL {
            let res = run_big(|| algo.solve(&g));
            prop_assert!(res.same_partition(&z), "{} differs", algo);
        }
    }

    #[test]
    fn winning_regions_are_attractor_closed(spec in spec(30)) {
        let g = rngame(&spec).unwrap();
        let z = zielonka_solve(&g);
        for alpha in Player::BOTH {
            prop_assert_eq!(&g.attractor(alpha, z.winning(alpha)), z.winning(alpha));
        }
    }

    #[test]
    fn final_witnesses_certify_the_winning_regions(spec in spec(30)) {
        let g = rngame(&spec).unwrap();
        let res = run_big(|| Algorithm::Rpp.solve(&g));
        for (alpha, witness) in [(Player::Even, &res.dominion_witness0), (Player::Odd, &res.dominion_witness1)] {
            if !res.winning(alpha).is_empty() {
                prop_assert!(check_dominion(&g, res.winning(alpha), alpha, witness).ok());
            }
        }
    }

    #[test]
    fn attractor_extension_keeps_a_dominion_certified(spec in spec(7), pick in any::<prop::sample::Index>()) {
        let g = rngame(&spec).unwrap();
        for alpha in Player::BOTH {
            let doms = dominions(&g, alpha);
            if doms.is_empty() {
                continue;
            }
            let d = &doms[pick.index(doms.len())];
            let (sub, ids) = g.induced(d).unwrap();
            let inner = Algorithm::Rpp.solve(&sub);
            let inner_witness = if alpha == Player::Even { &inner.dominion_witness0 } else { &inner.dominion_witness1 };
            let mut sigma = Witness::new(g.len());
            for v in inner_witness.domain() {
                sigma.set(ids[v], ids[inner_witness.get(v).unwrap()]);
            }
            prop_assert!(check_dominion(&g, d, alpha, &sigma).ok());
            let (extended, moves) = g.attractor_with_strategy(alpha, d);
            for (v, w) in moves {
                sigma.set(v, w);
            }
            prop_assert!(check_dominion(&g, &extended, alpha, &sigma).ok());
        }
    }

    #[test]
    fn pgsolver_round_trip(spec in spec(60)) {
        let g = rngame(&spec).unwrap();
        let text = write_pgsolver(&g);
        let back: ParityGame = parse_pgsolver(&text).unwrap();
        prop_assert_eq!(write_pgsolver(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn generator_is_deterministic(spec in spec(60)) {
        prop_assert_eq!(rngame(&spec).unwrap(), rngame(&spec).unwrap());
    }

    #[test]
    fn order_is_strict(a in snapshot(), b in snapshot(), c in snapshot()) {
        prop_assert!(!order_less(&a, &a));
        prop_assert!(!(order_less(&a, &b) && order_less(&b, &a)));
        if order_less(&a, &b) && order_less(&b, &c) {
            prop_assert!(order_less(&a, &c));
        }
    }

    #[test]
    fn side_sets_partition_the_domain(values in proptest::collection::vec(proptest::option::of(ext_priority()), 1..12)) {
        let f = PromotionFunction::from_values(values);
        let even = f.side_set(Player::Even);
        let odd = f.side_set(Player::Odd);
        let bottom = f.preimage_set(ExtPriority::Bot);
        prop_assert!(even.is_disjoint(&odd));
        prop_assert_eq!(even.union(&odd).union(&bottom), f.domain());
    }

    #[test]
    fn halving_only_touches_the_opponent(b0 in 0u64..1000, b1 in 0u64..1000) {
        prop_assert_eq!(half_bounds(Player::Even, (b0, b1)), (b0, b1 / 2));
        prop_assert_eq!(half_bounds(Player::Odd, (b0, b1)), (b0 / 2, b1));
    }

    #[test]
    fn call_bound_is_monotone(n in 1u64..5000, h in 1u64..200) {
        let here = qp_call_bound(n, h);
        prop_assert!(qp_call_bound(n + 1, h) >= here);
        prop_assert!(qp_call_bound(n, h + 1) >= here);
    }
}
