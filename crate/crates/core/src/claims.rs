//! The regression suite behind `ekr verify-paper`: fourteen groups of
//! published and derived claims, each row comparing an expected value with
//! the computed one.
//!
//! Rows hold no timings, so two runs print the same table.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::census::graphs_up_to;
use crate::covering::{centre_transfer_check, katona_covering, octahedron_remark_case};
use crate::ekr::{
    check_2ekr_formula, common_intersection, ekr_status, is_intersecting, max_anomalous_subfamily,
    max_intersecting_subfamily, EkrError, EkrReport, SearchLimits,
};
use crate::graph::{complete_graph, empty_graph, lex_product, Graph};
use crate::indep::{
    independence_number, independent_r_sets, max_star, minimax_independence, star_size, SetFamily,
};
use crate::multipartite::{random_intersecting_family, MultipartiteUnion, Side};
use crate::named::{
    cube, cycle_graph, disjoint_cliques, dodecahedron, icosahedron, octahedron, path_graph,
    spiky_g, tetrahedron,
};
use crate::sweep::sweep_graphs;

/// One checked claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub criterion: u8,
    pub claim: String,
    pub expected: String,
    pub actual: String,
}

impl Claim {
    fn new(
        criterion: u8,
        claim: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        Claim {
            criterion,
            claim: claim.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

/// Criterion numbers and titles.
pub const CRITERIA: [(u8, &str); 14] = [
    (1, "empty graphs: classical EKR"),
    (2, "disjoint cliques nK_t"),
    (3, "dodecahedron is not 8-EKR"),
    (4, "other Platonic solids are alpha-EKR"),
    (5, "icosahedron: strictly 3-EKR with r > mu"),
    (6, "spiky graph G(3,4)"),
    (7, "generalized spiky formulas"),
    (8, "K_{3,3} + K_{3,3}"),
    (9, "2-EKR formula against search, order <= 7"),
    (10, "lexicographic products G[K_m]"),
    (11, "covering machinery and the octahedron faces"),
    (12, "compressions on random standardized families"),
    (13, "search against the all-subfamilies oracle"),
    (14, "conjecture sweep over all graphs of order <= 8"),
];

/// Runs one criterion. Unknown numbers give no rows.
pub fn run_criterion(id: u8, limits: SearchLimits) -> Vec<Claim> {
    match id {
        1 => classical(limits),
        2 => cliques(limits),
        3 => dodecahedron_claims(limits),
        4 => platonic(limits),
        5 => icosahedron_claims(limits),
        6 => spiky(limits),
        7 => spiky_formulas(limits),
        8 => two_k33(limits),
        9 => two_ekr(limits),
        10 => products(limits),
        11 => coverings(),
        12 => compressions(),
        13 => oracle_equivalence(limits),
        14 => conjecture_sweep(limits),
        _ => Vec::new(),
    }
}

pub fn run_all(limits: SearchLimits) -> Vec<Claim> {
    CRITERIA
        .iter()
        .flat_map(|&(id, _)| run_criterion(id, limits))
        .collect()
}

/// The table printed by `verify-paper`.
pub fn render(claims: &[Claim]) -> String {
    let mut out = String::new();
    for (id, title) in CRITERIA {
        let rows: Vec<&Claim> = claims.iter().filter(|c| c.criterion == id).collect();
        if rows.is_empty() {
            continue;
        }
        out.push_str(&format!("[{id:>2}] {title}\n"));
        for c in rows {
            let mark = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "     {mark}  {:<44} expected {:<28} actual {}\n",
                c.claim, c.expected, c.actual
            ));
        }
    }
    let failed = claims.iter().filter(|c| !c.passed()).count();
    out.push_str(&format!(
        "{} claims, {} passed, {failed} failed\n",
        claims.len(),
        claims.len() - failed
    ));
    out
}

fn verdict_word(ekr: bool, strict: bool) -> &'static str {
    match (ekr, strict) {
        (true, true) => "strict",
        (true, false) => "ekr",
        _ => "no",
    }
}

fn verdict(rep: &Result<EkrReport, EkrError>) -> String {
    match rep {
        Ok(rep) => verdict_word(rep.is_ekr, rep.is_strictly_ekr).to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn show<T: ToString>(r: Result<T, EkrError>) -> String {
    r.map_or_else(|e| format!("error: {e}"), |v| v.to_string())
}

fn verdict_list(items: impl Iterator<Item = (usize, String)>) -> String {
    items
        .map(|(r, v)| format!("{r}:{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `E_n` is r-EKR iff `n ≥ 2r` and strictly so iff `n > 2r`, for `1 < r < n`.
/// For `r = n` the family is a single set and for `r = 1` it consists of
/// disjoint singletons; both are trivially strictly EKR.
fn classical_expectation(n: usize, r: usize) -> &'static str {
    if r == 1 || r == n {
        "strict"
    } else {
        verdict_word(n >= 2 * r, n > 2 * r)
    }
}

fn classical(limits: SearchLimits) -> Vec<Claim> {
    (2..=10)
        .map(|n| {
            let g = empty_graph(n).expect("small order");
            let rs = 1..=n.min(5);
            Claim::new(
                1,
                format!("E_{n}, r = 1..{}", n.min(5)),
                verdict_list(
                    rs.clone()
                        .map(|r| (r, classical_expectation(n, r).to_string())),
                ),
                verdict_list(rs.map(|r| (r, verdict(&ekr_status(&g, r, limits))))),
            )
        })
        .collect()
}

/// `nK_t` with `n ≥ r` is r-EKR, strictly unless `t = 2` and `n = r`. For
/// `n = r ≤ 2` no intersecting family escapes a star, so those are strict.
fn cliques(limits: SearchLimits) -> Vec<Claim> {
    let mut out = Vec::new();
    for t in 2..=3 {
        for n in 1..=4 {
            let g = disjoint_cliques(n, t).expect("small order");
            let expected = |r: usize| {
                if t == 2 && n == r && r >= 3 {
                    "ekr"
                } else {
                    "strict"
                }
            };
            out.push(Claim::new(
                2,
                format!("{n}K_{t}, r = 1..{n}"),
                verdict_list((1..=n).map(|r| (r, expected(r).to_string()))),
                verdict_list((1..=n).map(|r| (r, verdict(&ekr_status(&g, r, limits))))),
            ));
        }
    }
    out
}

fn dodecahedron_claims(limits: SearchLimits) -> Vec<Claim> {
    let g = dodecahedron();
    let rep = ekr_status(&g, 8, limits);
    let field = |f: fn(&EkrReport) -> String| show(rep.clone().map(|r| f(&r)));
    vec![
        Claim::new(3, "alpha", 8, independence_number(&g)),
        Claim::new(3, "|I^(8)|", 5, field(|r| r.family_size.to_string())),
        Claim::new(3, "max star, r = 8", 2, field(|r| r.max_star.to_string())),
        Claim::new(
            3,
            "max intersecting, r = 8",
            5,
            field(|r| r.max_intersecting.to_string()),
        ),
        Claim::new(3, "verdict, r = 8", "no", verdict(&rep)),
    ]
}

fn platonic(limits: SearchLimits) -> Vec<Claim> {
    [
        ("tetrahedron", tetrahedron(), 1),
        ("cube", cube(), 4),
        ("octahedron", octahedron(), 2),
        ("icosahedron", icosahedron(), 3),
    ]
    .into_iter()
    .flat_map(|(name, g, alpha)| {
        let a = independence_number(&g);
        [
            Claim::new(4, format!("{name}: alpha"), alpha, a),
            Claim::new(
                4,
                format!("{name}: alpha-EKR"),
                true,
                show(ekr_status(&g, a, limits).map(|r| r.is_ekr)),
            ),
        ]
    })
    .collect()
}

fn icosahedron_claims(limits: SearchLimits) -> Vec<Claim> {
    let g = icosahedron();
    let stars: Vec<u64> = (0..g.order()).map(|v| star_size(&g, v, 3)).collect();
    let rep = ekr_status(&g, 3, limits);
    vec![
        Claim::new(
            5,
            "|I_v^(3)| for every v",
            "5",
            if stars.iter().all(|&s| s == 5) {
                "5".into()
            } else {
                format!("{stars:?}")
            },
        ),
        Claim::new(
            5,
            "max anomalous, r = 3",
            4,
            show(rep.clone().map(|r| r.max_anomalous.unwrap_or(0))),
        ),
        Claim::new(5, "verdict, r = 3", "strict", verdict(&rep)),
        Claim::new(5, "mu", 2, minimax_independence(&g)),
    ]
}

fn spiky(limits: SearchLimits) -> Vec<Claim> {
    let g = spiky_g(3, 4).expect("16 vertices");
    let rep3 = ekr_status(&g, 3, limits);
    vec![
        Claim::new(6, "order", 16, g.order()),
        Claim::new(6, "alpha", 7, independence_number(&g)),
        Claim::new(6, "mu", 3, minimax_independence(&g)),
        Claim::new(
            6,
            "max star, r = 3",
            21,
            show(rep3.clone().map(|r| r.max_star)),
        ),
        Claim::new(
            6,
            "max intersecting, r = 3",
            22,
            show(rep3.clone().map(|r| r.max_intersecting)),
        ),
        Claim::new(
            6,
            "verdicts, r = 3..7",
            "3:no 4:no 5:no 6:no 7:ekr",
            verdict_list((3..=7).map(|r| {
                let rep = ekr_status(&g, r, limits);
                // Only the EKR property is claimed here.
                (
                    r,
                    show(rep.map(|rep| if rep.is_ekr { "ekr" } else { "no" })),
                )
            })),
        ),
    ]
}

fn spiky_formulas(limits: SearchLimits) -> Vec<Claim> {
    let mut out = Vec::new();
    for (p, q) in [(3usize, 4usize), (4, 5)] {
        let g = spiky_g(p, q).expect("small order");
        let star_formula = (1 + 2 * (p + q) + q * (q - 1) / 2).max((q + 1) * (q + 2) / 2);
        out.push(Claim::new(
            7,
            format!("G({p},{q}): max star, r = 3"),
            star_formula,
            max_star(&g, 3).0,
        ));
        let anomalous = ekr_status(&g, 3, limits).map(|r| r.max_anomalous.unwrap_or(0));
        out.push(Claim::new(
            7,
            format!("G({p},{q}): max anomalous, r = 3"),
            1 + 3 * (p + q),
            show(anomalous),
        ));
    }
    out
}

fn two_k33(limits: SearchLimits) -> Vec<Claim> {
    let m = MultipartiteUnion::new(&[3, 3], &[3, 3]).expect("valid parts");
    let g = m.graph();
    let mut out = vec![
        Claim::new(8, "mu", 6, minimax_independence(g)),
        Claim::new(8, "mu = b_a + d_c", 6, m.mu_formula()),
        Claim::new(
            8,
            "verdicts, r = 2..5",
            "2:strict 3:ekr 4:no 5:no",
            verdict_list((2..=5).map(|r| (r, verdict(&ekr_status(g, r, limits))))),
        ),
    ];
    for r in [4, 5] {
        let actual = match m.counterexample_family(r, m.v(1, 1)) {
            Ok(c) => format!(
                "intersecting={} anomalous={} beats star={}",
                is_intersecting(&c.family),
                c.is_anomalous(),
                c.beats_max_star()
            ),
            Err(e) => format!("error: {e}"),
        };
        out.push(Claim::new(
            8,
            format!("counterexample family, r = {r}"),
            "intersecting=true anomalous=true beats star=true",
            actual,
        ));
    }
    out
}

fn two_ekr(limits: SearchLimits) -> Vec<Claim> {
    let graphs = graphs_up_to(7);
    (2..=7)
        .map(|n| {
            let level: Vec<&Graph> = graphs
                .iter()
                .filter(|g| g.order() == n && !g.is_complete())
                .collect();
            let agree = level
                .iter()
                .filter(|g| {
                    let formula = check_2ekr_formula(g).expect("non-complete");
                    ekr_status(g, 2, limits).is_ok_and(|rep| {
                        (rep.is_ekr, rep.is_strictly_ekr)
                            == (formula.is_ekr, formula.is_strictly_ekr)
                    })
                })
                .count();
            Claim::new(
                9,
                format!("non-complete graphs of order {n}"),
                format!("{0}/{0} agree", level.len()),
                format!("{agree}/{} agree", level.len()),
            )
        })
        .collect()
}

fn products(limits: SearchLimits) -> Vec<Claim> {
    let cases = [
        ("E_4", empty_graph(4).expect("small")),
        ("P_4", path_graph(4).expect("small")),
        ("C_5", cycle_graph(5).expect("small")),
        ("2K_3", disjoint_cliques(2, 3).expect("small")),
    ];
    let mut out = Vec::new();
    for (name, g) in cases {
        let base = ekr_status(&g, 2, limits);
        out.push(Claim::new(
            10,
            format!("{name} is 2-EKR"),
            true,
            show(base.clone().map(|r| r.is_ekr)),
        ));
        for m in [2, 3] {
            let product = lex_product(&g, &complete_graph(m).expect("small"))
                .expect("within the order limit");
            let prod = ekr_status(&product, 2, limits);
            out.push(Claim::new(
                10,
                format!("{name}[K_{m}] is 2-EKR"),
                true,
                show(prod.map(|r| r.is_ekr)),
            ));
            let transfer = match &base {
                Ok(rep) if !rep.centres.is_empty() => {
                    centre_transfer_check(&g, rep.centres[0], m, 2, limits)
                        .map_or_else(|e| format!("error: {e}"), |b| b.to_string())
                }
                Ok(_) => "no centre".to_string(),
                Err(e) => format!("error: {e}"),
            };
            out.push(Claim::new(
                10,
                format!("{name}[K_{m}]: centre transfers"),
                true,
                transfer,
            ));
        }
    }
    out
}

fn coverings() -> Vec<Claim> {
    let mut out = Vec::new();
    for (name, g, m, r) in [
        ("P_3", path_graph(3).expect("small"), 2usize, 2usize),
        ("E_2", empty_graph(2).expect("small"), 3, 1),
    ] {
        let n = g.order();
        match katona_covering(&g, m, r) {
            Ok(c) => {
                let q = m.pow((n - r) as u32);
                out.push(Claim::new(
                    11,
                    format!("{name}, m = {m}, r = {r}: blocks"),
                    m.pow(n as u32 - 1),
                    c.blocks().len(),
                ));
                out.push(Claim::new(
                    11,
                    format!("{name}, m = {m}, r = {r}: q = m^(n-r)"),
                    q,
                    c.q().unwrap_or(0),
                ));
                let equal = c.blocks().iter().all(|b| {
                    (0..n).all(|v| {
                        (0..m).all(|x| b.containing(v * m + x).len() as u64 == star_size(&g, v, r))
                    })
                });
                out.push(Claim::new(
                    11,
                    format!("{name}, m = {m}, r = {r}: block stars"),
                    true,
                    equal,
                ));
            }
            Err(e) => out.push(Claim::new(
                11,
                format!("{name}, m = {m}, r = {r}"),
                "covering",
                format!("error: {e}"),
            )),
        }
    }
    let o = octahedron_remark_case();
    out.push(Claim::new(11, "octahedron faces: |F|", 8, o.faces.len()));
    out.push(Claim::new(
        11,
        "octahedron faces: |F_x| for every x",
        4,
        if o.star_sizes.iter().all(|&s| s == 4) {
            "4".to_string()
        } else {
            format!("{:?}", o.star_sizes)
        },
    ));
    out.push(Claim::new(
        11,
        "octahedron faces: max anomalous",
        4,
        o.max_anomalous.unwrap_or(0),
    ));
    out.push(Claim::new(
        11,
        "opposite face pairs: q",
        1,
        o.partition.q().unwrap_or(0),
    ));
    out.push(Claim::new(
        11,
        "strict in every block, not in F",
        "true",
        o.strict_centre_of_blocks && !o.strict_centre_of_faces,
    ));
    out
}

/// Non-increasing part lists with entries in `1..=3` and at most three parts.
fn small_part_lists() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 1..=3 {
        out.push(vec![a]);
        for b in 1..=a {
            out.push(vec![a, b]);
            for c in 1..=b {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// Seed of the random families of criterion 12.
pub const COMPRESSION_SEED: u64 = 0xc0ffee;
pub const COMPRESSION_FAMILIES: usize = 1000;

fn compressions() -> Vec<Claim> {
    let lists = small_part_lists();
    let mut rng = ChaCha8Rng::seed_from_u64(COMPRESSION_SEED);
    let (mut single, mut full, mut tested) = (0, 0, 0);
    while tested < COMPRESSION_FAMILIES {
        let b = &lists[rng.gen_range(0..lists.len())];
        let d = &lists[rng.gen_range(0..lists.len())];
        let m = MultipartiteUnion::new(b, d).expect("valid parts");
        let r = rng.gen_range(1..=b[0] + d[0]);
        let keep = rng.gen_range(0.3..0.9);
        let f = random_intersecting_family(m.graph(), r, keep, &mut rng);
        if f.is_empty() {
            continue;
        }
        tested += 1;
        let (m, _, f) = m.standardize(&f).expect("intersecting and nonempty");
        for i in 2..=m.d().len() {
            let g = m
                .compress(Side::Second, i, &f)
                .expect("independent members");
            if g.len() != f.len() || !is_intersecting(&g) || !m.is_standardized(&g) {
                single += 1;
            }
        }
        let g = m.full_compress(&f).expect("standardized and intersecting");
        let core = m.part(Side::First, 1).union(m.part(Side::Second, 1));
        let ms = g.members();
        let meet_core = ms
            .iter()
            .enumerate()
            .all(|(k, x)| ms[k + 1..].iter().all(|y| x.intersection(*y).meets(core)));
        let ok = g.len() == f.len()
            && is_intersecting(&g)
            && m.is_standardized(&g)
            && m.is_compressed(&g).unwrap_or(false)
            && meet_core;
        if !ok {
            full += 1;
        }
    }
    vec![
        Claim::new(
            12,
            "random standardized families",
            COMPRESSION_FAMILIES,
            tested,
        ),
        Claim::new(12, "compression keeps size, intersecting", 0, single),
        Claim::new(12, "full compression meets V_1 + W_1", 0, full),
    ]
}

/// Largest intersecting and anomalous subfamilies by looking at every
/// subfamily. Only for families of at most 20 members.
pub fn naive_extremal(f: &SetFamily) -> (usize, Option<usize>) {
    let m = f.members();
    assert!(m.len() <= 20, "the naive oracle is exponential");
    let compatible: Vec<u32> = m
        .iter()
        .map(|a| {
            m.iter()
                .enumerate()
                .filter(|(_, b)| a.meets(**b))
                .fold(0u32, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    let (mut best, mut anomalous) = (0, None);
    for mask in 1u32..1 << m.len() {
        let members = (0..m.len()).filter(|&i| mask >> i & 1 == 1);
        if !members.clone().all(|i| compatible[i] & mask == mask) {
            continue;
        }
        let size = mask.count_ones() as usize;
        best = best.max(size);
        let sub = SetFamily::new(members.map(|i| m[i]));
        if common_intersection(&sub).is_ok_and(|c| c.is_empty()) {
            anomalous = Some(anomalous.unwrap_or(0).max(size));
        }
    }
    (best, anomalous)
}

fn oracle_equivalence(limits: SearchLimits) -> Vec<Claim> {
    let (mut cases, mut agree) = (0, 0);
    for g in graphs_up_to(5) {
        for r in 1..=independence_number(&g) {
            let f = independent_r_sets(&g, r);
            if f.len() > 20 {
                continue;
            }
            cases += 1;
            let searched = max_intersecting_subfamily(&f, limits).and_then(|a| {
                max_anomalous_subfamily(&f, limits).map(|b| (a.size, b.map(|b| b.size)))
            });
            if searched == Ok(naive_extremal(&f)) {
                agree += 1;
            }
        }
    }
    vec![Claim::new(
        13,
        "graphs of order <= 5, |I^(r)| <= 20",
        format!("{cases}/{cases} agree"),
        format!("{agree}/{cases} agree"),
    )]
}

fn conjecture_sweep(limits: SearchLimits) -> Vec<Claim> {
    let graphs = graphs_up_to(8);
    let out = sweep_graphs(&graphs, limits);
    vec![
        Claim::new(14, "graphs of order 1..8", 13598, out.records.len()),
        Claim::new(14, "errors", 0, out.errors.len()),
        Claim::new(14, "not r-EKR for some r <= mu/2", 0, out.counterexamples()),
        Claim::new(
            14,
            "not strict for some 2 < r < mu/2",
            0,
            out.strict_violations(),
        ),
    ]
}
