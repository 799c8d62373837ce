//! The acceptance sweep behind `thickness selftest` and the `acceptance`
//! test target. Each check returns one line with its verdict.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::base::base_pages;
use crate::constructions::{generate, CURATED};
use crate::io::save;
use crate::multipartite::{thickness_formula, GraphFamily, VertexRef};
use crate::oracle::{exact_thickness, OracleKind, DEFAULT_NODE_BUDGET};
use crate::planarity::{
    graphs, is_planar, naive_is_planar, planar_embedding, validate_embedding, SimpleGraph,
};
use crate::verify::verify_decomposition;

/// Largest `n` swept by default.
pub const DEFAULT_N_MAX: u32 = 48;
/// Optional environment override for the sweep cap.
pub const N_MAX_ENV: &str = "THICKNESS_SELFTEST_N_MAX";
pub const RANDOM_GRAPHS: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A known, documented disagreement; not a failure.
    ExpectedDivergence,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub id: u32,
    pub name: &'static str,
    pub status: Status,
    pub tolerance: &'static str,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckLine {
    pub fn ok(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ExpectedDivergence => "EXPECTED-DIVERGENCE",
        };
        write!(
            f,
            "[{tag}] {}. {} ({}; {:.2} s): {}",
            self.id,
            self.name,
            self.tolerance,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

fn timed(
    id: u32,
    name: &'static str,
    tolerance: &'static str,
    limit: Option<Duration>,
    body: impl FnOnce() -> (Status, String),
) -> CheckLine {
    let start = Instant::now();
    let (mut status, mut detail) = body();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if status == Status::Pass && elapsed > limit {
            status = Status::Fail;
            detail = format!("{detail}; took longer than {} s", limit.as_secs());
        }
    }
    CheckLine {
        id,
        name,
        status,
        tolerance,
        detail,
        elapsed,
    }
}

fn verdict(problems: Vec<String>, summary: String) -> (Status, String) {
    if problems.is_empty() {
        (Status::Pass, summary)
    } else {
        let more = problems.len().saturating_sub(5);
        let mut shown = problems.into_iter().take(5).collect::<Vec<_>>().join("; ");
        if more > 0 {
            shown.push_str(&format!("; ... and {more} more"));
        }
        (Status::Fail, shown)
    }
}

const FAMILIES: [GraphFamily; 3] = [GraphFamily::K1nn, GraphFamily::K2nn, GraphFamily::K11nn];

fn expected_pages(family: &GraphFamily, n: u32) -> u32 {
    match family {
        GraphFamily::K1nn => (n + 2).div_ceil(4),
        _ => (n + 3).div_ceil(4),
    }
}

/// Generation, verification and page count for the three families.
pub fn formula_sweep(n_max: u32) -> CheckLine {
    timed(
        1,
        "formula sweep",
        "exact",
        Some(Duration::from_secs(30)),
        || {
            let mut problems = Vec::new();
            let mut count = 0;
            for family in &FAMILIES {
                for n in 1..=n_max {
                    count += 1;
                    let d = match generate(family, n) {
                        Ok(d) => d,
                        Err(e) => {
                            problems.push(format!("{family} n={n}: {e}"));
                            continue;
                        }
                    };
                    let want = expected_pages(family, n) as usize;
                    match verify_decomposition(&d.part_sizes, &d.pages, Some(want)) {
                        Ok(r) if r.overall => {}
                        Ok(r) => {
                            problems.push(format!("{family} n={n}: {}", r.problems().join(", ")))
                        }
                        Err(e) => problems.push(format!("{family} n={n}: {e}")),
                    }
                    if d.pages.len() != want {
                        problems.push(format!(
                            "{family} n={n}: {} pages, expected {want}",
                            d.pages.len()
                        ));
                    }
                }
            }
            verdict(
                problems,
                format!("{count} decompositions, n = 1..={n_max}, page counts match"),
            )
        },
    )
}

/// The `K_{4p,4p}` base pages for `p = 1..=10`.
pub fn base_decomposition() -> CheckLine {
    timed(
        2,
        "base decomposition",
        "exact",
        Some(Duration::from_secs(5)),
        || {
            let mut problems = Vec::new();
            for p in 1..=10u32 {
                let pages = match base_pages(p) {
                    Ok(pages) => pages,
                    Err(e) => {
                        problems.push(format!("p={p}: {e}"));
                        continue;
                    }
                };
                let n = 4 * p;
                let want = thickness_formula(&GraphFamily::Knn, n).expect("n >= 4") as usize;
                if pages.len() != p as usize + 1 || want != pages.len() {
                    problems.push(format!("p={p}: {} pages, formula {want}", pages.len()));
                }
                for (i, page) in pages.iter().enumerate() {
                    let size = if i + 1 < pages.len() {
                        16 * p - 4
                    } else {
                        4 * p
                    };
                    if page.len() != size as usize {
                        problems.push(format!(
                            "p={p} page {}: {} edges, expected {size}",
                            i + 1,
                            page.len()
                        ));
                    }
                }
                match verify_decomposition(&[n, n], &pages, Some(want)) {
                    Ok(r) if r.overall => {}
                    Ok(r) => problems.push(format!("p={p}: {}", r.problems().join(", "))),
                    Err(e) => problems.push(format!("p={p}: {e}")),
                }
            }
            verdict(
                problems,
                "p = 1..=10 partition K_{4p,4p} into p + 1 planar pages of sizes 16p - 4 and 4p"
                    .into(),
            )
        },
    )
}

fn oracle_value(sizes: &[usize]) -> Result<u32, String> {
    let r = exact_thickness(
        &graphs::complete_multipartite(sizes),
        4,
        DEFAULT_NODE_BUDGET,
    );
    match r.kind {
        OracleKind::Exact(k) => Ok(k),
        other => Err(format!(
            "K{sizes:?}: {other:?} after {} nodes",
            r.nodes_explored
        )),
    }
}

/// Exact thickness of the small multipartite graphs with known values.
pub fn small_values() -> CheckLine {
    timed(
        3,
        "small values via oracle",
        "exact, 60 s per call",
        None,
        || {
            let cases: [(&[usize], u32); 5] = [
                ([1, 3, 3].as_slice(), 2),
                (&[2, 3, 3], 2),
                (&[1, 2, 2], 1),
                (&[2, 1, 1], 1),
                (&[1, 1, 1, 1], 1),
            ];
            let mut problems = Vec::new();
            let mut seen = Vec::new();
            for (sizes, want) in cases {
                let start = Instant::now();
                match oracle_value(sizes) {
                    Ok(k) if k == want => {}
                    Ok(k) => problems.push(format!("K{sizes:?}: oracle {k}, expected {want}")),
                    Err(e) => problems.push(e),
                }
                if start.elapsed() > Duration::from_secs(60) {
                    problems.push(format!("K{sizes:?}: took longer than 60 s"));
                }
                seen.push(format!("K{sizes:?}={want}"));
            }
            verdict(problems, seen.join(", "))
        },
    )
}

/// `K_{2,2,2}` is planar although the `K_{2,n,n}` formula gives 2 at `n = 2`.
pub fn octahedron_anomaly() -> CheckLine {
    timed(4, "K_{2,2,2} divergence", "exact", None, || {
        let formula = thickness_formula(&GraphFamily::K2nn, 2).expect("n = 2");
        match oracle_value(&[2, 2, 2]) {
            Ok(1) if formula == 2 => (
                Status::ExpectedDivergence,
                "oracle 1, formula 2: the formula does not hold at n = 2 (see README, \"The n = 2 case\")".into(),
            ),
            Ok(k) => (Status::Fail, format!("oracle {k}, formula {formula}; expected 1 and 2")),
            Err(e) => (Status::Fail, e),
        }
    })
}

/// Curated anchors for `p = 1, 2, 3` verify with `p + 1` pages.
pub fn curated_data() -> CheckLine {
    timed(5, "curated anchors", "exact", None, || {
        let mut problems = Vec::new();
        let mut seen = Vec::new();
        for c in &CURATED {
            let want = c.p as usize + 1;
            match c.load().and_then(|d| d.verify(Some(want))) {
                Ok(r) if r.overall => seen.push(format!("{} n={}: {want}", c.family, c.n)),
                Ok(r) => problems.push(format!(
                    "{} n={}: {}",
                    c.family,
                    c.n,
                    r.problems().join(", ")
                )),
                Err(e) => problems.push(format!("{} n={}: {e}", c.family, c.n)),
            }
        }
        verdict(problems, format!("pages {}", seen.join(", ")))
    })
}

fn apex_neighbors(family: &GraphFamily, n: u32, apex: VertexRef) -> Result<Vec<String>, String> {
    let d = generate(family, n).map_err(|e| e.to_string())?;
    Ok(d.pages[0]
        .neighbors(apex)
        .iter()
        .map(ToString::to_string)
        .collect())
}

/// First-page apex edges of the generic anchors at `p = 4`.
pub fn generic_spot_checks() -> CheckLine {
    timed(6, "generic first pages", "exact", None, || {
        let checks: [(GraphFamily, u32, &[&str]); 2] = [
            (
                GraphFamily::K1nn,
                18,
                &["u1", "u3", "u4", "u10", "v1", "v2", "v3", "v5"],
            ),
            (GraphFamily::K2nn, 17, &["u3", "u4", "u9", "v1", "v3", "v5"]),
        ];
        let mut problems = Vec::new();
        for (family, n, want) in checks {
            match apex_neighbors(&family, n, VertexRef::x1()) {
                Ok(got) if got == want => {}
                Ok(got) => problems.push(format!(
                    "{family} n={n}: x1 meets {got:?} on page 1, expected {want:?}"
                )),
                Err(e) => problems.push(format!("{family} n={n}: {e}")),
            }
        }
        verdict(
            problems,
            "k1nn n=18 and k2nn n=17 page 1 apex edges match".into(),
        )
    })
}

/// A random graph on at most 9 vertices.
pub fn random_small_graph(rng: &mut impl Rng) -> SimpleGraph {
    let n = rng.gen_range(1..=9);
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut g = SimpleGraph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(a, b).expect("fresh pair");
            }
        }
    }
    g
}

/// Named graphs, and agreement with the naive test on random graphs.
pub fn planarity_engine(count: usize, seed: u64) -> CheckLine {
    timed(
        7,
        "planarity engine",
        "100% agreement",
        Some(Duration::from_secs(60)),
        || {
            let mut problems = Vec::new();
            let named: [(&str, SimpleGraph, bool); 6] = [
                ("K5", graphs::complete(5), false),
                ("K3,3", graphs::complete_bipartite(3, 3), false),
                ("Petersen", graphs::petersen(), false),
                ("K4", graphs::complete(4), true),
                ("octahedron", graphs::octahedron(), true),
                ("3x3 grid", graphs::grid(3, 3), true),
            ];
            for (name, g, want) in &named {
                if is_planar(g) != *want {
                    problems.push(format!("{name} misclassified"));
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (mut agree, mut planar) = (0, 0);
            for i in 0..count {
                let g = random_small_graph(&mut rng);
                let fast = is_planar(&g);
                match naive_is_planar(&g) {
                    Ok(slow) if slow == fast => agree += 1,
                    Ok(slow) => problems.push(format!(
                        "graph {i}: fast {fast}, naive {slow}, edges {:?}",
                        g.edges()
                    )),
                    Err(e) => problems.push(format!("graph {i}: {e}")),
                }
                if fast {
                    planar += 1;
                    let valid = planar_embedding(&g).map(|rot| validate_embedding(&g, &rot));
                    if !matches!(valid, Some(Ok(true))) {
                        problems.push(format!("graph {i}: embedding failed validation"));
                    }
                }
            }
            verdict(
            problems,
            format!("named graphs correct; {agree}/{count} random graphs agree, {planar} embeddings validated"),
        )
        },
    )
}

/// Generating and saving twice gives identical bytes.
pub fn determinism(n_max: u32) -> CheckLine {
    timed(8, "determinism", "byte-identical", None, || {
        let mut problems = Vec::new();
        let mut count = 0;
        for family in &FAMILIES {
            for n in 1..=n_max {
                let once = generate(family, n).map(|d| save(&d));
                let twice = generate(family, n).map(|d| save(&d));
                match (once, twice) {
                    (Ok(a), Ok(b)) if a == b => count += 1,
                    (Ok(_), Ok(_)) => problems.push(format!("{family} n={n}: outputs differ")),
                    (Err(e), _) | (_, Err(e)) => problems.push(format!("{family} n={n}: {e}")),
                }
            }
        }
        verdict(
            problems,
            format!("{count} documents reproduced byte for byte"),
        )
    })
}

/// All checks, in order.
pub fn run(n_max: u32) -> Vec<CheckLine> {
    vec![
        formula_sweep(n_max),
        base_decomposition(),
        small_values(),
        octahedron_anomaly(),
        curated_data(),
        generic_spot_checks(),
        planarity_engine(RANDOM_GRAPHS, 0x5eed),
        determinism(n_max),
    ]
}

/// The sweep cap from the environment, if set and valid.
pub fn n_max_from_env() -> Option<u32> {
    std::env::var(N_MAX_ENV).ok()?.trim().parse().ok()
}
