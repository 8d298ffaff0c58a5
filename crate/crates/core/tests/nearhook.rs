use kronecker::colored::{ColoredTableau, ColoredWord};
use kronecker::nearhook::{
    fundamental_expansion, g_two_row_near_hook, index_set_minus, index_set_plus, j_minus, j_plus, main_result_1,
    main_result_2, near_hook_kronecker, null_case_check, singleton_case_check, triple1, triple2, triple3, triple4,
    GBackend, NearHookRoute, TermIndex, TwoRowNearHook,
};
use kronecker::partition::Partition;
use kronecker::symfun::kronecker_coefficient_oracle;
use kronecker::Error;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn tab(rows: &[&str]) -> ColoredTableau {
    ColoredTableau::new(rows.iter().map(|r| r.parse::<ColoredWord>().unwrap().0).collect()).unwrap()
}

fn idx(items: &[(&str, usize, usize)]) -> Vec<(Partition, usize, usize)> {
    items.iter().map(|&(q, j, r)| (p(q), j, r)).collect()
}

#[test]
fn fundamental_expansion_of_42_42_42() {
    let l = p("4,2");
    for backend in [GBackend::Rosas, GBackend::Oracle, GBackend::Blasiak] {
        let ex = fundamental_expansion(&l, &l, 4, 2, 0, backend).unwrap();
        assert_eq!(ex.value, 2);
        let got: Vec<(i8, String)> = ex
            .terms
            .iter()
            .map(|t| match &t.index {
                TermIndex::Triple { eta, delta, theta } => (t.sign, format!("{eta}|{delta}|{theta}")),
                other => panic!("{other:?}"),
            })
            .collect();
        let expected: Vec<(i8, String)> = [
            (1, "4,1|1|4,1"),
            (1, "4,1|1|3,2"),
            (1, "3,2|1|4,1"),
            (1, "3,2|1|3,2"),
            (-1, "4|2|2"),
            (-1, "3,1|2|2"),
            (-1, "3,1|2|1,1"),
            (-1, "3,1|1,1|2"),
            (-1, "3,1|1,1|1,1"),
            (-1, "2,2|2|2"),
        ]
        .iter()
        .map(|&(s, t)| (s, t.to_string()))
        .collect();
        assert_eq!(got, expected);
    }
    assert_eq!(kronecker_coefficient_oracle(&l, &l, &l).unwrap(), 2);
}

#[test]
fn triples_one_and_two() {
    let params = TwoRowNearHook::new(4, 2, 3, 2, 1).unwrap();
    let nu = p("4,2");
    let t1 = triple1(&params, &nu, GBackend::Rosas).unwrap();
    let t2 = triple2(&params, &nu, GBackend::Rosas).unwrap();
    assert_eq!((t1.value, t2.value), (4, 2));
    assert_eq!(g_two_row_near_hook(&params, &nu, GBackend::Rosas).unwrap(), 2);
    let ex = fundamental_expansion(&p("4,2"), &nu, 3, 2, 1, GBackend::Oracle).unwrap();
    assert_eq!(ex.value, t1.value - t2.value);
    assert_eq!(kronecker_coefficient_oracle(&p("4,2"), &p("3,2,1"), &nu).unwrap(), 2);
}

#[test]
fn index_sets_for_43_3211_3211() {
    let nu = p("3,2,1,1");
    assert_eq!(
        j_plus(4, &nu, 3, 2, 2),
        idx(&[("3,2,1", 0, 2), ("3,2,1", 0, 3), ("3,1,1,1", 0, 2), ("3,1,1,1", 0, 3), ("2,2,1,1", 0, 2), ("2,2,1,1", 0, 3)])
    );
    assert_eq!(j_minus(4, &nu, 3, 2, 2), idx(&[("2,2", 1, 2), ("2,1,1", 0, 1), ("2,1,1", 1, 1)]));

    let params = TwoRowNearHook::new(4, 3, 3, 2, 2).unwrap();
    let t3 = triple3(&params, &nu, GBackend::Rosas).unwrap();
    let t4 = triple4(&params, &nu, GBackend::Rosas).unwrap();
    let parts3: Vec<i64> = t3.terms.iter().map(|t| t.contribution()).collect();
    let parts4: Vec<i64> = t4.terms.iter().map(|t| -t.contribution()).collect();
    assert_eq!(parts3, vec![2, 1, 2, 1, 1, 1]);
    assert_eq!(parts4, vec![1, 1, 2]);
    assert_eq!((t3.value, t4.value), (8, 4));
    assert_eq!(kronecker_coefficient_oracle(&p("4,3"), &nu, &nu).unwrap(), 4);
}

#[test]
fn membership_with_a_multiplicity_three_coefficient() {
    let nu = p("5,3,2,1");
    let set = index_set_plus(&nu, 3, 5, 3);
    assert!(set.contains(&(p("4,2,1"), 1, 2)));
    let lr = kronecker::tableau::lr_via_strip_difference(&nu, &p("4,2,1"), 5, 1).unwrap();
    let g = kronecker::rosas::rosas_kronecker(7, 2, 3, 3, &p("4,2,1")).unwrap();
    assert_eq!((lr, g), (3, 1));
    assert!(index_set_plus(&nu, 3, 5, 3).iter().all(|(eta, _, _)| nu.contains(eta)));
}

#[test]
fn singleton_case() {
    assert_eq!(singleton_case_check(2, 2, 2, 4, 2, 2).unwrap(), Some((p("2,2"), 0, 2)));
    assert_eq!(singleton_case_check(3, 2, 2, 5, 2, 2).unwrap(), Some((p("2,2"), 0, 2)));
    assert_eq!(singleton_case_check(3, 3, 2, 5, 3, 2).unwrap(), None);
    assert_eq!(singleton_case_check(3, 2, 2, 4, 3, 2).unwrap(), None);
}

#[test]
fn null_case() {
    assert!(null_case_check(3, 2, 3, 4, 4, 2).unwrap());
    assert_eq!(j_plus(4, &p("5,2,1"), 3, 2, 3), idx(&[("4,2,1", 0, 3)]));
    assert_eq!(kronecker_coefficient_oracle(&p("4,4"), &p("3,2,1,1,1"), &p("5,2,1")).unwrap(), 1);

    assert!(null_case_check(3, 2, 4, 5, 4, 3).unwrap());
    assert!(!null_case_check(3, 2, 2, 5, 2, 2).unwrap());
}

#[test]
fn main_result_1_examples() {
    let (value, set) = main_result_1(3, 2, 5, 2, 2).unwrap();
    assert_eq!(value, 0);
    assert_eq!(set.blocks, vec![((p("4,2"), 0, 2), 1)]);
    assert!(set.removed_min.is_some());
    assert!(set.members.is_empty());

    let (value, set) = main_result_1(2, 5, 6, 3, 2).unwrap();
    assert_eq!(value, 1);
    assert_eq!(set.blocks.iter().map(|(i, _)| i.clone()).collect::<Vec<_>>(), idx(&[("3,2,1,1,1", 0, 2), ("3,2,1,1,1", 0, 3)]));
    assert_eq!(set.len(), 1);
    assert_eq!(kronecker_coefficient_oracle(&p("6,3"), &p("2,2,1^5"), &p("4,2,1,1,1")).unwrap(), 1);

    let (value, set) = main_result_1(6, 6, 8, 6, 2).unwrap();
    assert_eq!(value, 1);
    assert_eq!(set.blocks, vec![((p("7,2,1,1,1,1"), 0, 5), 1), ((p("7,2,1,1,1,1"), 0, 6), 1)]);
    let all: Vec<ColoredTableau> = set
        .removed_min
        .iter()
        .cloned()
        .chain(set.members.iter().map(|m| m.tableau.clone()))
        .collect();
    assert!(all.contains(&tab(&["1' 1 1 1 1 1 2'", "1' 2'", "1'", "2'", "2'", "2"])));
    assert!(all.contains(&tab(&["1' 1 1 1 1 1 2'", "1' 2'", "2'", "2'", "2'", "2"])));

    assert!(matches!(main_result_1(3, 4, 5, 4, 3), Err(Error::Hypothesis(_))));
}

#[test]
fn main_result_2_examples() {
    let (value, set) = main_result_2(3, 4, 5, 4, 3).unwrap();
    assert_eq!(value, 1);
    assert_eq!(set.blocks, vec![((p("4,2,2"), 0, 3), 1)]);
    assert_eq!(set.members[0].tableau, tab(&["1' 1 1 2'", "1' 2'", "1 2'"]));
    assert!(set.removed_min.is_none());
    assert_eq!(kronecker_coefficient_oracle(&p("5,4"), &p("3,2,1,1,1,1"), &p("5,2,2")).unwrap(), 1);

    let (value, set) = main_result_2(7, 6, 10, 5, 4).unwrap();
    assert_eq!(value, 1);
    assert_eq!(set.blocks, vec![((p("8,2,2,2"), 0, 4), 1)]);
    assert_eq!(set.members[0].tableau, tab(&["1' 1 1 1 1 1 1 2'", "1' 2'", "1' 2'", "1 2'"]));

    assert!(matches!(main_result_2(3, 2, 5, 2, 2), Err(Error::Hypothesis(_))));
}

#[test]
fn routing() {
    let route = near_hook_kronecker(&p("3,2,1,1"), &p("4,3"), &p("3,2,1,1"), GBackend::Rosas).unwrap();
    assert!(matches!(route, NearHookRoute::TwoRow { .. }));
    assert_eq!(route.value(), 4);
    let route = near_hook_kronecker(&p("5,2"), &p("3,2,1,1"), &p("5,2"), GBackend::Rosas).unwrap();
    assert_eq!((route.name(), route.value()), ("main-result-1", 0));
    let route = near_hook_kronecker(&p("4,2"), &p("4,2"), &p("4,2"), GBackend::Rosas).unwrap();
    assert_eq!((route.name(), route.value()), ("fundamental", 2));
    assert!(matches!(
        near_hook_kronecker(&p("3,1,1,1"), &p("3,1,1,1"), &p("3,1,1,1"), GBackend::Rosas),
        Err(Error::Hypothesis(_))
    ));
    assert!(matches!(
        near_hook_kronecker(&p("3,1"), &p("3,2"), &p("3,2"), GBackend::Rosas),
        Err(Error::SizeMismatch(_))
    ));
}

#[test]
fn two_row_against_oracle_up_to_eight() {
    for n in 5..=8 {
        for (a, b, c) in near_hooks(n, 1) {
            for e in 0..=n / 2 {
                let params = TwoRowNearHook::new(n - e, e, a, b, c).unwrap();
                for nu in kronecker::partition::all_partitions(n) {
                    let oracle = kronecker_coefficient_oracle(&params.lambda(), &params.mu(), &nu).unwrap() as i64;
                    let t1 = triple1(&params, &nu, GBackend::Rosas).unwrap().value;
                    let t2 = triple2(&params, &nu, GBackend::Rosas).unwrap().value;
                    assert_eq!(t1 - t2, oracle, "{params:?} {nu}");
                    assert_eq!(g_two_row_near_hook(&params, &nu, GBackend::Rosas).unwrap(), oracle, "{params:?} {nu}");
                }
            }
        }
    }
}

#[test]
fn index_set_membership_is_positivity() {
    for n in 5..=8 {
        for (a, b, c) in near_hooks(n, 1) {
            for nu in kronecker::partition::all_partitions(n) {
                let plus = index_set_plus(&nu, a, b, c);
                let big = n - b + 1;
                for eta in kronecker::partition::all_partitions(big) {
                    for j in 0..=(b - 1) / 2 {
                        for r in 0..=big / 2 {
                            let lr = kronecker::tableau::lr_coefficient(&nu, &eta, &Partition::from_unsorted(vec![b - 1 - j, j]));
                            let g = kronecker_coefficient_oracle(
                                &Partition::from_unsorted(vec![big - r, r]),
                                &Partition::hook(a, c + 1),
                                &eta,
                            )
                            .unwrap();
                            assert_eq!(plus.contains(&(eta.clone(), j, r)), lr * g > 0, "{nu} {eta} {j} {r}");
                        }
                    }
                }
                let minus = index_set_minus(&nu, a, b, c);
                let small = n - a;
                for delta in kronecker::partition::all_partitions(small) {
                    for i in 0..=a / 2 {
                        for r in 0..=small / 2 {
                            let lr = kronecker::tableau::lr_coefficient(&nu, &Partition::from_unsorted(vec![a - i, i]), &delta);
                            let g = kronecker_coefficient_oracle(
                                &Partition::from_unsorted(vec![small - r, r]),
                                &Partition::hook(b - 1, c + 1),
                                &delta,
                            )
                            .unwrap();
                            assert_eq!(minus.contains(&(delta.clone(), i, r)), lr * g > 0, "{nu} {delta} {i} {r}");
                        }
                    }
                }
            }
        }
    }
}

fn near_hooks(n: usize, min_c: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for b in 2..=n {
        for a in b..=n {
            if a + b <= n && n - a - b >= min_c {
                out.push((a, b, n - a - b));
            }
        }
    }
    out
}
