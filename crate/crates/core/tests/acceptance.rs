//! The fourteen acceptance criteria, each under its runtime budget.
//!
//! Every criterion runs the library's claim rows and an extra check against
//! the brute-force oracles of `common`. One line per criterion is printed.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ekr_core::census::graphs_up_to;
use ekr_core::claims::{render, run_criterion, CRITERIA};
use ekr_core::ekr::{max_anomalous, max_intersecting, SearchLimits};
use ekr_core::graph::{complete_graph, empty_graph, lex_product, Graph};
use ekr_core::indep::{count_independent_r_sets, independence_number, max_star};
use ekr_core::named::{
    cube, cycle_graph, disjoint_cliques, dodecahedron, icosahedron, octahedron, path_graph,
    spiky_g, tetrahedron,
};

type Check = fn() -> Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn largest_star(lists: &[Vec<usize>], n: usize) -> usize {
    (0..n)
        .map(|v| lists.iter().filter(|s| s.contains(&v)).count())
        .max()
        .unwrap_or(0)
}

fn empty_graph_counts() -> Result<(), String> {
    for n in 2..=10u64 {
        let g = empty_graph(n as usize).unwrap();
        for r in 1..=n.min(5) {
            let (count, star) = (
                count_independent_r_sets(&g, r as usize),
                max_star(&g, r as usize).0,
            );
            ensure(
                count == common::binomial(n, r) && star == common::binomial(n - 1, r - 1),
                || format!("E_{n}, r = {r}: |I| = {count}, star = {star}"),
            )?;
        }
    }
    Ok(())
}

fn clique_counts() -> Result<(), String> {
    for t in 2..=3u64 {
        for n in 1..=4u64 {
            let g = disjoint_cliques(n as usize, t as usize).unwrap();
            for r in 1..=n {
                let count = common::independent_sets(&g, r as usize).len() as u64;
                ensure(count == common::binomial(n, r) * t.pow(r as u32), || {
                    format!("{n}K_{t}, r = {r}: {count}")
                })?;
            }
        }
    }
    Ok(())
}

fn dodecahedron_oracle() -> Result<(), String> {
    let g = dodecahedron();
    let lists = common::independent_sets(&g, 8);
    ensure(lists.len() == 5, || {
        format!("{} independent 8-sets", lists.len())
    })?;
    ensure(common::alpha_mu(&g).0 == 8, || "alpha".into())?;
    ensure(largest_star(&lists, 20) == 2, || "star".into())?;
    ensure(common::extremal(&lists) == (5, Some(5)), || {
        format!("{:?}", common::extremal(&lists))
    })
}

fn platonic_oracle() -> Result<(), String> {
    for (g, alpha) in [
        (tetrahedron(), 1),
        (cube(), 4),
        (octahedron(), 2),
        (icosahedron(), 3),
    ] {
        ensure(common::alpha_mu(&g).0 == alpha, || {
            format!("alpha of {g:?}")
        })?;
        let lists = common::independent_sets(&g, alpha);
        let (best, _) = common::extremal(&lists);
        ensure(best == largest_star(&lists, g.order()), || {
            format!("{g:?} is not alpha-EKR by the oracle")
        })?;
    }
    Ok(())
}

fn icosahedron_oracle() -> Result<(), String> {
    let g = icosahedron();
    let lists = common::independent_sets(&g, 3);
    ensure(common::extremal(&lists) == (5, Some(4)), || {
        format!("{:?}", common::extremal(&lists))
    })?;
    ensure(common::alpha_mu(&g) == (3, 2), || "alpha, mu".into())
}

fn spiky_oracle() -> Result<(), String> {
    let g = spiky_g(3, 4).unwrap();
    ensure(common::alpha_mu(&g) == (7, 3), || {
        format!("{:?}", common::alpha_mu(&g))
    })?;
    let lists = common::independent_sets(&g, 3);
    ensure(largest_star(&lists, 16) == 21, || "star".into())
}

fn spiky_formula_oracle() -> Result<(), String> {
    for (p, q) in [(3usize, 4usize), (4, 5)] {
        let g = spiky_g(p, q).unwrap();
        let star = largest_star(&common::independent_sets(&g, 3), g.order());
        let formula = (1 + 2 * (p + q) + q * (q - 1) / 2).max((q + 1) * (q + 2) / 2);
        ensure(star == formula, || {
            format!("G({p},{q}): star {star}, formula {formula}")
        })?;
    }
    Ok(())
}

fn two_k33_oracle() -> Result<(), String> {
    let k33 = ekr_core::graph::complete_multipartite(&[3, 3]).unwrap();
    let g = ekr_core::graph::disjoint_union(&k33, &k33).unwrap();
    ensure(common::alpha_mu(&g) == (6, 6), || "alpha, mu".into())?;
    for (r, star) in [(4, 20), (5, 10)] {
        let found = largest_star(&common::independent_sets(&g, r), 12);
        ensure(found == star, || format!("r = {r}: star {found}"))?;
    }
    Ok(())
}

fn census_oracle() -> Result<(), String> {
    let graphs = graphs_up_to(7);
    let counts: Vec<usize> = (1..=7)
        .map(|n| graphs.iter().filter(|g| g.order() == n).count())
        .collect();
    ensure(counts == [1, 2, 4, 11, 34, 156, 1044], || {
        format!("{counts:?}")
    })
}

fn product_oracle() -> Result<(), String> {
    let cases: [(Graph, usize); 4] = [
        (empty_graph(4).unwrap(), 2),
        (path_graph(4).unwrap(), 2),
        (cycle_graph(5).unwrap(), 2),
        (disjoint_cliques(2, 3).unwrap(), 2),
    ];
    for (g, r) in cases {
        for m in [2, 3] {
            let p = lex_product(&g, &complete_graph(m).unwrap()).unwrap();
            let count = common::independent_sets(&p, r).len();
            let base = common::independent_sets(&g, r).len();
            ensure(count == m.pow(r as u32) * base, || {
                format!("{g:?}[K_{m}]: {count}")
            })?;
        }
    }
    Ok(())
}

fn octahedron_oracle() -> Result<(), String> {
    let faces: Vec<Vec<usize>> = ekr_core::covering::OCTAHEDRON_FACES
        .iter()
        .map(|f| f.to_vec())
        .collect();
    ensure(common::extremal(&faces) == (4, Some(4)), || {
        format!("{:?}", common::extremal(&faces))
    })?;
    ensure(largest_star(&faces, 6) == 4, || "star".into())
}

fn no_extra() -> Result<(), String> {
    Ok(())
}

fn naive_oracle() -> Result<(), String> {
    let lim = SearchLimits::default();
    let mut cases = 0;
    for g in graphs_up_to(5) {
        for r in 1..=independence_number(&g) {
            let lists = common::independent_sets(&g, r);
            if lists.len() > 20 {
                continue;
            }
            cases += 1;
            let searched = (
                max_intersecting(&g, r, lim).unwrap().size,
                max_anomalous(&g, r, lim).unwrap().map(|a| a.size),
            );
            let oracle = common::extremal(&lists);
            ensure(searched == oracle, || {
                format!("{g:?} r = {r}: search {searched:?}, oracle {oracle:?}")
            })?;
        }
    }
    ensure(cases > 100, || format!("only {cases} cases"))
}

fn order_eight_census() -> Result<(), String> {
    let n8 = graphs_up_to(8).iter().filter(|g| g.order() == 8).count();
    ensure(n8 == 12346, || format!("{n8} graphs of order 8"))
}

const BUDGETS: [(u8, u64, Check); 14] = [
    (1, 10, empty_graph_counts),
    (2, 30, clique_counts),
    (3, 10, dodecahedron_oracle),
    (4, 10, platonic_oracle),
    (5, 5, icosahedron_oracle),
    (6, 60, spiky_oracle),
    (7, 120, spiky_formula_oracle),
    (8, 120, two_k33_oracle),
    (9, 600, census_oracle),
    (10, 300, product_oracle),
    (11, 5, octahedron_oracle),
    (12, 60, no_extra),
    (13, 600, naive_oracle),
    (14, 7200, order_eight_census),
];

fn main() -> ExitCode {
    let limits = SearchLimits::default();
    let mut failures = 0;
    println!("\nrunning {} acceptance criteria", BUDGETS.len());
    for (id, budget, check) in BUDGETS {
        let title = CRITERIA.iter().find(|c| c.0 == id).map_or("", |c| c.1);
        let start = Instant::now();
        let rows = run_criterion(id, limits);
        let extra = check();
        let elapsed = start.elapsed();
        let rows_ok = !rows.is_empty() && rows.iter().all(|c| c.passed());
        let in_budget = elapsed <= Duration::from_secs(budget);
        let pass = rows_ok && extra.is_ok() && in_budget;
        println!(
            "criterion {id:>2}: {}  {:>8.3}s of {budget}s  {title}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if !pass {
            failures += 1;
            if !rows_ok {
                print!("{}", render(&rows));
            }
            if let Err(e) = extra {
                println!("    oracle check: {e}");
            }
            if !in_budget {
                println!("    over budget");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed\n",
        BUDGETS.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
