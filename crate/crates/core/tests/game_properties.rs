use ewgame::game::{
    delta_functional, expected_utility, player1_utility, player2_utility, ratio_response, Action, MixedStrategy,
    Player, SymmetricGame,
};
use proptest::prelude::*;

fn payoff() -> impl Strategy<Value = f64> {
    -10.0f64..10.0
}

fn game() -> impl Strategy<Value = SymmetricGame> {
    (payoff(), payoff(), payoff(), payoff()).prop_map(|(a, b, c, d)| SymmetricGame::new(a, b, c, d).unwrap())
}

fn strategy() -> impl Strategy<Value = MixedStrategy> {
    (0.0f64..=1.0).prop_map(|p| MixedStrategy::from_first(p).unwrap())
}

proptest! {
    #[test]
    fn delta_equals_ratio_response(g in game(), s in strategy()) {
        prop_assume!(s.p2 > 1e-300);
        let d = delta_functional(&g, &s);
        let f = ratio_response(&g, s.p1 / s.p2);
        prop_assert!((d - f).abs() <= 1e-12 * (1.0 + g.gamma()), "{d} vs {f}");
    }

    #[test]
    fn player_two_is_transpose(g in game(), x in strategy(), y in strategy()) {
        prop_assert_eq!(player2_utility(&g, &x, &y), player1_utility(&g, &y, &x));
        prop_assert_eq!(
            expected_utility(&g, Player::Two, &y, &x),
            expected_utility(&g, Player::One, &y, &x)
        );
    }

    #[test]
    fn utility_is_four_term_sum(g in game(), x in strategy(), y in strategy()) {
        // independent expansion in the a, b, c, d layout
        let direct = x.p1 * y.p1 * g.a + x.p2 * y.p1 * g.b + x.p1 * y.p2 * g.c + x.p2 * y.p2 * g.d;
        prop_assert!((player1_utility(&g, &x, &y) - direct).abs() < 1e-12);
    }

    #[test]
    fn constant_shift_keeps_eps(g in game(), k in -10.0f64..10.0) {
        let s = SymmetricGame::new(g.a + k, g.b + k, g.c + k, g.d + k).unwrap();
        prop_assert!((s.eps1() - g.eps1()).abs() <= 1e-9);
        prop_assert!((s.eps2() - g.eps2()).abs() <= 1e-9);
    }

    #[test]
    fn relabel_is_an_involution(g in game()) {
        prop_assert_eq!(g.relabeled().relabeled(), g);
        prop_assert_eq!(g.relabeled().eps(), (-g.eps2(), -g.eps1()));
    }

    #[test]
    fn delta_is_bracketed_by_eps(g in game(), s in strategy()) {
        let d = delta_functional(&g, &s);
        let (e1, e2) = g.eps();
        prop_assert!(d >= e1.min(e2) - 1e-12 && d <= e1.max(e2) + 1e-12);
    }
}

#[test]
fn pure_utilities_read_entries() {
    let g = SymmetricGame::new(3.0, 1.0, 2.0, 5.0).unwrap();
    for m in Action::ALL {
        for n in Action::ALL {
            assert_eq!(player1_utility(&g, &m.pure(), &n.pure()), g.payoff(m, n));
        }
    }
}
