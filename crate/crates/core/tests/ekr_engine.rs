mod common;

use ekr_core::ekr::{
    check_2ekr_formula, common_intersection, ekr_status, is_intersecting, max_anomalous,
    max_intersecting, EkrError, SearchLimits,
};
use ekr_core::graph::empty_graph;
use ekr_core::indep::{independent_r_sets, SetFamily};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn search_matches_oracle(g in common::graphs(7), r in 1usize..4) {
        let lists = common::independent_sets(&g, r);
        prop_assume!(!lists.is_empty() && lists.len() <= 18);
        let (best, anomalous) = common::extremal(&lists);
        let lim = SearchLimits::default();
        let int = max_intersecting(&g, r, lim).unwrap();
        prop_assert_eq!(int.size, best);
        prop_assert_eq!(max_anomalous(&g, r, lim).unwrap().map(|a| a.size), anomalous);
        let rep = ekr_status(&g, r, lim).unwrap();
        prop_assert_eq!(rep.is_ekr, rep.max_star as usize == best);
        prop_assert_eq!(rep.is_strictly_ekr, rep.is_ekr && anomalous.is_none_or(|a| a < best));
    }

    #[test]
    fn witnesses_are_valid(g in common::graphs(9), r in 1usize..4) {
        let all = independent_r_sets(&g, r);
        prop_assume!(!all.is_empty());
        let rep = ekr_status(&g, r, SearchLimits::default()).unwrap();
        prop_assert!(rep.witness_intersecting.is_subfamily_of(&all));
        prop_assert!(is_intersecting(&rep.witness_intersecting));
        prop_assert_eq!(rep.witness_intersecting.len(), rep.max_intersecting);
        prop_assert!(rep.max_intersecting as u64 >= rep.max_star);
        if let Some(w) = &rep.witness_anomalous {
            prop_assert!(w.is_subfamily_of(&all) && is_intersecting(w));
            prop_assert!(common_intersection(w).unwrap().is_empty());
            prop_assert_eq!(Some(w.len()), rep.max_anomalous);
        }
    }

    #[test]
    fn star_containment(g in common::graphs(8), r in 1usize..4, picks in proptest::collection::vec(any::<bool>(), 64)) {
        let all = independent_r_sets(&g, r);
        let sub = SetFamily::new(all.iter().zip(picks.iter().cycle()).filter(|(_, &p)| p).map(|(a, _)| *a));
        prop_assume!(!sub.is_empty());
        let in_star = (0..g.order()).any(|v| sub.iter().all(|a| a.contains(v)));
        prop_assert_eq!(in_star, !common_intersection(&sub).unwrap().is_empty());
    }

    #[test]
    fn two_ekr_formula_matches_search(g in common::graphs(9)) {
        prop_assume!(!g.is_complete());
        let f = check_2ekr_formula(&g).unwrap();
        let rep = ekr_status(&g, 2, SearchLimits::default()).unwrap();
        prop_assert_eq!((f.is_ekr, f.is_strictly_ekr), (rep.is_ekr, rep.is_strictly_ekr));
        if f.is_ekr {
            prop_assert_eq!(&f.centres, &rep.centres);
        }
    }
}

#[test]
fn empty_graphs_match_closed_forms() {
    let lim = SearchLimits::default();
    for n in 2..=10u64 {
        for r in 2..n.min(6) {
            let g = empty_graph(n as usize).unwrap();
            let best = max_intersecting(&g, r as usize, lim).unwrap().size as u64;
            let expected = if n >= 2 * r {
                common::binomial(n - 1, r - 1)
            } else {
                common::binomial(n, r)
            };
            assert_eq!(best, expected, "E_{n}, r = {r}");
            if n > 2 * r {
                // Hilton-Milner.
                let hm = common::binomial(n - 1, r - 1) - common::binomial(n - r - 1, r - 1) + 1;
                assert_eq!(
                    max_anomalous(&g, r as usize, lim).unwrap().unwrap().size as u64,
                    hm,
                    "E_{n}, r = {r}"
                );
            }
        }
    }
}

#[test]
fn errors() {
    let g = empty_graph(6).unwrap();
    assert_eq!(
        ekr_status(&g, 0, SearchLimits::default()),
        Err(EkrError::ZeroR)
    );
    assert_eq!(
        ekr_status(&g, 3, SearchLimits { max_family: 19 }).unwrap_err(),
        EkrError::SearchCap { size: 20, cap: 19 }
    );
    assert!(ekr_status(&g, 3, SearchLimits { max_family: 20 }).is_ok());
    assert_eq!(
        common_intersection(&SetFamily::default()),
        Err(EkrError::EmptyFamily)
    );
}
