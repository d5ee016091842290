use ewgame::equilibria::{
    ce_is_borderline, ce_membership_bruteforce, ce_membership_closed_form, is_nash_profile, nash_landscape,
    p_se_indifference, verify_pure_ne, JointDistribution,
};
use ewgame::game::{Action, MixedStrategy, SignRegime, SymmetricGame};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Pure NE by direct enumeration of both players' best responses.
fn oracle_pure_ne(g: &SymmetricGame, m: Action, n: Action) -> bool {
    let u = |own: Action, other: Action| g.payoff(own, other);
    let best1 = Action::ALL.iter().all(|&d| u(d, n) <= u(m, n));
    let best2 = Action::ALL.iter().all(|&d| u(d, m) <= u(n, m));
    best1 && best2
}

fn eps_for(regime: SignRegime, rng: &mut impl Rng) -> (f64, f64) {
    let mut pos = || rng.random_range(0.05..3.0);
    let (a, b) = (pos(), pos());
    match regime {
        SignRegime::NegNeg => (-a, -b),
        SignRegime::PosPos => (a, b),
        SignRegime::NegPos => (-a, b),
        SignRegime::PosNeg => (a, -b),
        SignRegime::ZeroNeg => (0.0, -b),
        SignRegime::ZeroPos => (0.0, b),
        SignRegime::NegZero => (-a, 0.0),
        SignRegime::PosZero => (a, 0.0),
        SignRegime::Degenerate => (0.0, 0.0),
    }
}

const REGIMES: [SignRegime; 8] = [
    SignRegime::NegNeg,
    SignRegime::PosPos,
    SignRegime::NegPos,
    SignRegime::PosNeg,
    SignRegime::ZeroNeg,
    SignRegime::ZeroPos,
    SignRegime::NegZero,
    SignRegime::PosZero,
];

#[test]
fn landscape_pure_set_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for regime in REGIMES {
        for _ in 0..200 {
            let (e1, e2) = eps_for(regime, &mut rng);
            let shift = rng.random_range(-3.0..3.0);
            let g = SymmetricGame::new(e1 + shift, shift, e2 + shift, shift).unwrap();
            let set = nash_landscape(&g).unwrap();
            for m in Action::ALL {
                for n in Action::ALL {
                    let listed = set.pure.contains(&(m, n));
                    assert_eq!(listed, verify_pure_ne(&g, (m, n)), "{regime:?} {m:?} {n:?}");
                    assert_eq!(listed, oracle_pure_ne(&g, m, n), "{regime:?} {m:?} {n:?}");
                }
            }
            assert_eq!(set.mixed.is_some(), regime.is_mixed_sign());
            if let Some(p) = set.mixed {
                assert!(is_nash_profile(&g, &p, &p, 1e-12));
                assert!(p_se_indifference(&g).unwrap().abs() <= 1e-12);
            }
            for fam in &set.mixed_families {
                for q in [0.0, 0.3, 0.77, 1.0] {
                    let mix = MixedStrategy::from_first(q).unwrap();
                    let pure = fam.action.pure();
                    let (x, y) = match fam.pure_player {
                        ewgame::Player::One => (pure, mix),
                        ewgame::Player::Two => (mix, pure),
                    };
                    assert!(is_nash_profile(&g, &x, &y, 1e-12), "{regime:?} {fam:?} {q}");
                }
            }
        }
    }
}

fn sample_nu(rng: &mut impl Rng, g: &SymmetricGame) -> JointDistribution {
    let mut v = [0.0f64; 4];
    match rng.random_range(0..4) {
        0 => {
            for x in v.iter_mut() {
                *x = -rng.random::<f64>().max(1e-300).ln();
            }
        }
        1 => {
            for x in v.iter_mut() {
                if rng.random_bool(0.5) {
                    *x = -rng.random::<f64>().max(1e-300).ln();
                }
            }
            if v.iter().all(|x| *x == 0.0) {
                v[rng.random_range(0..4)] = 1.0;
            }
        }
        2 => {
            let (x, y) = (rng.random::<f64>(), rng.random::<f64>());
            v = [x * y, x * (1.0 - y), (1.0 - x) * y, (1.0 - x) * (1.0 - y)];
        }
        _ => {
            // points on or near the boundary of the closed-form region
            let (e1, e2) = g.eps();
            let k = if e1 != 0.0 && e2 != 0.0 { (e1 / e2).abs() } else { 1.0 };
            let off = rng.random::<f64>();
            let jitter = 1.0 + rng.random_range(-1e-3..1e-3);
            v = [off * jitter / k.max(1e-3), off, off * rng.random::<f64>(), off * k * jitter];
        }
    }
    let s: f64 = v.iter().sum();
    let v = v.map(|x| x / s);
    JointDistribution::new(v[0], v[1], v[2], v[3]).unwrap()
}

#[test]
fn ce_closed_form_matches_bruteforce() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for regime in REGIMES {
        let mut borderline = 0;
        let mut members = 0;
        for _ in 0..10_000 {
            let (e1, e2) = eps_for(regime, &mut rng);
            let g = SymmetricGame::from_eps(e1, e2).unwrap();
            let nu = sample_nu(&mut rng, &g);
            let c = ce_membership_closed_form(&g, &nu).unwrap();
            let b = ce_membership_bruteforce(&g, &nu);
            members += c as usize;
            if ce_is_borderline(&g, &nu).unwrap() {
                borderline += 1;
                continue;
            }
            assert_eq!(c, b, "{regime:?} eps=({e1},{e2}) nu={:?}", nu.nu);
        }
        assert!(members > 0, "{regime:?}: sampler never hit the CE set");
        eprintln!("{regime:?}: {members} CE members, {borderline} borderline of 10000");
    }
}

#[test]
fn nash_products_are_ce() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for regime in REGIMES {
        let (e1, e2) = eps_for(regime, &mut rng);
        let g = SymmetricGame::from_eps(e1, e2).unwrap();
        let set = nash_landscape(&g).unwrap();
        for &pair in &set.pure {
            let nu = JointDistribution::point_mass(pair);
            assert!(ce_membership_bruteforce(&g, &nu));
            assert!(ce_membership_closed_form(&g, &nu).unwrap());
        }
        if let Some(p) = set.mixed {
            let nu = JointDistribution::product(&p, &p);
            assert!(ce_membership_bruteforce(&g, &nu));
            assert!(ce_membership_closed_form(&g, &nu).unwrap());
        }
    }
}

proptest! {
    #[test]
    fn correlated_mixture_of_pure_ne_is_ce(e1 in 0.01f64..5.0, e2 in 0.01f64..5.0, w in 0.0f64..=1.0) {
        // ε₁>0>ε₂: any mixture of the two symmetric pure NEs is a CE
        let g = SymmetricGame::from_eps(e1, -e2).unwrap();
        let nu = JointDistribution::new(w, 0.0, 0.0, 1.0 - w).unwrap();
        prop_assert!(ce_membership_bruteforce(&g, &nu));
        prop_assert!(ce_membership_closed_form(&g, &nu).unwrap());
    }

    #[test]
    fn chicken_off_diagonal_mixture_is_ce(e1 in 0.01f64..5.0, e2 in 0.01f64..5.0, w in 0.0f64..=1.0) {
        let g = SymmetricGame::from_eps(-e1, e2).unwrap();
        let nu = JointDistribution::new(0.0, w, 1.0 - w, 0.0).unwrap();
        prop_assert!(ce_membership_bruteforce(&g, &nu));
        prop_assert!(ce_membership_closed_form(&g, &nu).unwrap());
    }
}
