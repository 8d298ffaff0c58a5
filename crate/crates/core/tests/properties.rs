use kronecker::colored::{count_blasiak, mixed_insertion_tableau, ColoredLetter, ColoredWord};
use kronecker::nearhook::{g_two_row_near_hook, main_result_1, main_result_2, special_nu, GBackend, TwoRowNearHook};
use kronecker::partition::{all_partitions, Partition};
use kronecker::rosas::rosas_kronecker;
use kronecker::symfun::kronecker_coefficient_oracle;
use kronecker::tableau::{lr_coefficient, lr_via_strip_difference};
use proptest::prelude::*;
use proptest::sample::select;

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    select(all_partitions(n))
}

fn partition(lo: usize, hi: usize) -> impl Strategy<Value = Partition> {
    (lo..=hi).prop_flat_map(partition_of)
}

fn same_size_triple(lo: usize, hi: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (lo..=hi).prop_flat_map(|n| (partition_of(n), partition_of(n), partition_of(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transpose_is_an_involution(l in partition(0, 30)) {
        prop_assert_eq!(l.transpose().transpose(), l.clone());
        prop_assert_eq!(l.transpose().size(), l.size());
        prop_assert_eq!(Partition::from_frobenius(&l.frobenius()).unwrap(), l);
    }

    #[test]
    fn text_syntax_round_trips(l in partition(0, 30)) {
        prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l);
    }

    #[test]
    fn lr_symmetry_and_conjugation((l, m) in (2usize..=9).prop_flat_map(|n| (partition_of(n), 0..=n))
        .prop_flat_map(|(l, k)| (Just(l), partition_of(k))))
    {
        for nu in all_partitions(l.size() - m.size()) {
            let c = lr_coefficient(&l, &m, &nu);
            prop_assert_eq!(c, lr_coefficient(&l, &nu, &m));
            prop_assert_eq!(c, lr_coefficient(&l.transpose(), &m.transpose(), &nu.transpose()));
        }
    }

    #[test]
    fn kronecker_symmetry((l, m, n) in same_size_triple(1, 11)) {
        let g = kronecker_coefficient_oracle(&l, &m, &n).unwrap();
        prop_assert_eq!(kronecker_coefficient_oracle(&n, &l, &m).unwrap(), g);
        prop_assert_eq!(kronecker_coefficient_oracle(&m, &l, &n).unwrap(), g);
        prop_assert_eq!(kronecker_coefficient_oracle(&l.transpose(), &m.transpose(), &n).unwrap(), g);
    }

    #[test]
    fn strip_difference_is_lr((nu, b) in (2usize..=10).prop_flat_map(|n| (partition_of(n), 1..=n + 1)),
                              seed in any::<prop::sample::Index>()) {
        let etas = all_partitions(nu.size() + 1 - b);
        let eta = &etas[seed.index(etas.len())];
        for j in 0..=(b - 1) / 2 {
            let want = lr_coefficient(&nu, eta, &Partition::from_unsorted(vec![b - 1 - j, j])) as i64;
            prop_assert_eq!(lr_via_strip_difference(&nu, eta, b, j).unwrap(), want);
        }
    }

    #[test]
    fn mixed_insertion_keeps_content(letters in prop::collection::vec((1usize..=4, any::<bool>()), 0..12)) {
        let w = ColoredWord(letters.iter().map(|&(v, bar)| if bar { ColoredLetter::barred(v) } else { ColoredLetter::plain(v) }).collect());
        let t = mixed_insertion_tableau(&w);
        prop_assert!(t.satisfies_colored_conditions());
        prop_assert_eq!(t.size(), w.len());
        prop_assert_eq!(t.total_color(), w.tc());
        let mut content = w.content();
        while content.last() == Some(&0) {
            content.pop();
        }
        prop_assert_eq!(t.content(), content);
    }

    #[test]
    fn blasiak_matches_oracle((l, nu, d) in (2usize..=8).prop_flat_map(|n| (partition_of(n), partition_of(n), 0..n))) {
        let hook = Partition::hook(l.size() - d, d);
        prop_assert_eq!(count_blasiak(&l, d, &nu).unwrap(), kronecker_coefficient_oracle(&l, &hook, &nu).unwrap());
    }

    #[test]
    fn rosas_matches_oracle((nu, r, a) in (3usize..=14).prop_flat_map(|n| (partition_of(n), 0..=n / 2, 1..n))) {
        let n = nu.size();
        let c = n - a - 1;
        let lambda = Partition::from_unsorted(vec![n - r, r]);
        prop_assert_eq!(
            rosas_kronecker(n, r, a, c, &nu).unwrap(),
            kronecker_coefficient_oracle(&lambda, &Partition::hook(a, c + 1), &nu).unwrap()
        );
    }

    #[test]
    fn two_row_near_hook_matches_oracle(
        (nu, e, b, a) in (5usize..=12)
            .prop_flat_map(|n| (partition_of(n), 0..=n / 2, 2..=(n - 1) / 2))
            .prop_flat_map(|(nu, e, b)| { let n = nu.size(); (Just(nu), Just(e), Just(b), b..=n - b - 1) })
    ) {
        let n = nu.size();
        let params = TwoRowNearHook::new(n - e, e, a, b, n - a - b).unwrap();
        let oracle = kronecker_coefficient_oracle(&params.lambda(), &params.mu(), &nu).unwrap() as i64;
        prop_assert_eq!(g_two_row_near_hook(&params, &nu, GBackend::Rosas).unwrap(), oracle);
    }

    #[test]
    fn main_results_match_oracle(
        (a, c, s, e) in (2usize..=6, 1usize..=5)
            .prop_flat_map(|(a, c)| (Just(a), Just(c), 1..=(c + 2) / 2, 0..=(a + c + 2) / 2))
    ) {
        let n = a + c + 2;
        let d = n - e;
        let nu = special_nu(a, c, s).unwrap();
        let lambda = Partition::from_unsorted(vec![d, e]);
        let mut mu = vec![a, 2];
        mu.extend(std::iter::repeat_n(1, c));
        let oracle = kronecker_coefficient_oracle(&lambda, &Partition::from_unsorted(mu), &nu).unwrap() as i64;
        let (value, set) = match main_result_1(a, c, d, e, s) {
            Ok(x) => x,
            Err(_) => main_result_2(a, c, d, e, s).unwrap(),
        };
        prop_assert_eq!(value, oracle);
        prop_assert_eq!(set.members.len() as i64, value);
    }
}
