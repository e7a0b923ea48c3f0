mod common;

use common::cacti_oracle::{arcs, block_permutation, check_trace, permutations, same, substituted_trace};

use loopforge::cacti::{random_cactus, to_fatgraph, Cactus, CactusJson};
use loopforge::exactq::{q, qr, Rational};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn load(name: &str) -> Cactus {
    CactusJson::parse(&common::fixture(name)).unwrap()
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn traces_of_small_fixtures() {
    assert_eq!(arcs(&Cactus::identity()), vec![(1, q(0), q(1))]);
    assert_eq!(
        arcs(&load("cactus_two_lobes.json")),
        vec![(1, q(0), q(1)), (2, q(0), q(1))]
    );
    // lobe 2 hangs off lobe 1 at 1/2; lobes 3 and 4 meet lobe 1 at 3/2 in the
    // order 1, 3, 4
    assert_eq!(
        arcs(&load("cactus_four_lobes.json")),
        vec![
            (1, q(0), qr(1, 2)),
            (2, q(0), q(1)),
            (1, qr(1, 2), q(1)),
            (3, qr(1, 4), qr(1, 2)),
            (4, q(0), q(1)),
            (1, qr(3, 2), qr(1, 2)),
        ]
    );
}

#[test]
fn composition_with_fixtures() {
    let two = load("cactus_two_lobes.json");
    let four = load("cactus_four_lobes.json");
    let c = four.compose(3, &two).unwrap();
    assert_eq!(c.lobe_count(), 5);
    assert_eq!(c.total_circumference(), four.total_circumference());
    assert_eq!(arcs(&c), substituted_trace(&four, 3, &two));
    // lobe 3 of circumference 1/2 becomes two lobes of 1/4 meeting where the
    // old node was
    assert_eq!(c.circumference(3), &qr(1, 4));
    assert_eq!(c.circumference(4), &qr(1, 4));
    check_trace(&c);
}

#[test]
fn unit_laws_on_random_cacti() {
    let mut rng = rng_for(5);
    for _ in 0..100 {
        let k = rng.gen_range(1..=4);
        let c = random_cactus(&mut rng, k);
        for i in 1..=k {
            assert!(same(&c.compose(i, &Cactus::identity()).unwrap(), &c));
        }
        let scaled = c.dilate(&(q(1) / c.total_circumference()));
        assert!(same(&Cactus::identity().compose(1, &c).unwrap(), &scaled));
    }
}

#[test]
fn equivariance_is_exhaustive_for_three_lobes() {
    let mut rng = rng_for(11);
    for _ in 0..6 {
        for k in 1..=3 {
            for l in 1..=3 {
                let c = random_cactus(&mut rng, k);
                let g = random_cactus(&mut rng, l);
                for sigma in permutations(k) {
                    for rho in permutations(l) {
                        for i in 1..=k {
                            let lhs = c
                                .relabel(&sigma)
                                .unwrap()
                                .compose(sigma[i - 1], &g.relabel(&rho).unwrap())
                                .unwrap();
                            let rhs = c
                                .compose(i, &g)
                                .unwrap()
                                .relabel(&block_permutation(&sigma, i, &rho))
                                .unwrap();
                            assert!(same(&lhs, &rhs), "σ={sigma:?} i={i} ρ={rho:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_form_is_idempotent_and_natural() {
    let mut rng = rng_for(13);
    for _ in 0..50 {
        let k = rng.gen_range(1..=5);
        let c = random_cactus(&mut rng, k);
        let cf = c.canonical_form();
        assert_eq!(cf.canonical_form(), cf);
        let mut sigma: Vec<usize> = (1..=k).collect();
        sigma.shuffle(&mut rng);
        assert_eq!(
            c.relabel(&sigma).unwrap().canonical_form(),
            cf.relabel(&sigma).unwrap().canonical_form()
        );
    }
}

#[test]
fn metric_ribbon_graph_of_a_cactus() {
    let mut rng = rng_for(17);
    for _ in 0..40 {
        let k = rng.gen_range(1..=5);
        let c = random_cactus(&mut rng, k);
        let g = to_fatgraph(&c).unwrap();
        assert_eq!(g.genus().unwrap(), (0, k + 1));
        let p = g.boundary_cycles();
        let lengths: Vec<Rational> = p
            .cycles
            .iter()
            .map(|cyc| cyc.iter().map(|&h| g.lengths()[&g.edge_of(h)].clone()).sum())
            .collect();
        let exterior = p.cycles.iter().position(|cyc| g.is_forward(cyc[0])).unwrap();
        assert!(p.cycles[exterior].iter().all(|&h| g.is_forward(h)));
        assert_eq!(lengths[exterior], c.total_circumference());
        let mut interior: Vec<Rational> = (0..p.len()).filter(|&j| j != exterior).map(|j| lengths[j].clone()).collect();
        let mut circs = c.circumferences().to_vec();
        interior.sort();
        circs.sort();
        assert_eq!(interior, circs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn traces_follow_the_nodes(seed in any::<u64>(), k in 1usize..=6) {
        check_trace(&random_cactus(&mut rng_for(seed), k));
    }

    #[test]
    fn composition_substitutes_traces(seed in any::<u64>(), k in 1usize..=4, l in 1usize..=4) {
        let mut rng = rng_for(seed);
        let c1 = random_cactus(&mut rng, k);
        let c2 = random_cactus(&mut rng, l);
        let i = rng.gen_range(1..=k);
        let c = c1.compose(i, &c2).unwrap();
        prop_assert_eq!(c.lobe_count(), k + l - 1);
        prop_assert_eq!(c.total_circumference(), c1.total_circumference());
        prop_assert_eq!(arcs(&c), substituted_trace(&c1, i, &c2));
        check_trace(&c);
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>(), k in 1usize..=3, l in 1usize..=3, m in 1usize..=3) {
        let mut rng = rng_for(seed);
        let f = random_cactus(&mut rng, k);
        let g = random_cactus(&mut rng, l);
        let h = random_cactus(&mut rng, m);
        let i = rng.gen_range(1..=k);
        let j = rng.gen_range(1..=l);
        let lhs = f.compose(i, &g.compose(j, &h).unwrap()).unwrap();
        let rhs = f.compose(i, &g).unwrap().compose(i + j - 1, &h).unwrap();
        prop_assert!(same(&lhs, &rhs));
        if k >= 2 {
            let (a, b) = (rng.gen_range(1..k), k);
            let first = f.compose(a, &g).unwrap().compose(b + l - 1, &h).unwrap();
            let second = f.compose(b, &h).unwrap().compose(a, &g).unwrap();
            prop_assert!(same(&first, &second));
        }
    }
}
