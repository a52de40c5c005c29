//! Acceptance run: one `[PASS]`/`[FAIL]` line per criterion, non-zero exit
//! on any failure outside [`UNATTAINABLE`]. Runs without the libtest
//! harness so the lines are printed even when everything passes.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use mutvis_core::classes::*;
use mutvis_core::generators;
use mutvis_core::graph::{articulation_vertices, is_convex};
use mutvis_core::reduction::*;
use mutvis_core::solver::{all_max_sets, greedy_clique, mu_bruteforce, mu_exact};
use mutvis_core::{is_mv_set, Graph, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn brute(g: &Graph) -> usize {
    mu_bruteforce(g).unwrap().mu
}

fn random_subset<R: Rng>(n: usize, rng: &mut R) -> PointSet {
    let p = rng.gen_range(0.1..0.9);
    PointSet::collect(n, (0..n).filter(|_| rng.gen_bool(p)))
}

// Distance table by Floyd-Warshall, independent of the library BFS.
fn all_distances(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Enumerates shortest `u`-`v` paths until one has a point-free interior.
fn oracle(g: &Graph, p: &PointSet) -> bool {
    let d = all_distances(g);
    let inf = u32::MAX / 2;
    fn walk(g: &Graph, p: &PointSet, d: &[Vec<u32>], x: usize, v: usize) -> bool {
        g.neighbors(x)
            .iter()
            .any(|&y| d[y][v] + 1 == d[x][v] && (y == v || (!p.contains(y) && walk(g, p, d, y, v))))
    }
    let pts = p.to_vec();
    pts.iter().all(|&u| {
        pts.iter()
            .all(|&v| u == v || (d[u][v] < inf && walk(g, p, &d, u, v)))
    })
}

fn c1_verifier_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let (cases, mut positive) = (3000, 0);
    for i in 0..cases {
        let n = rng.gen_range(1..=9);
        let g = generators::random_gnp(n, rng.gen_range(0.1..0.9), &mut rng);
        let p = random_subset(n, &mut rng);
        let expect = oracle(&g, &p);
        positive += expect as usize;
        ensure(is_mv_set(&g, &p) == expect, || {
            format!(
                "case {i}: mismatch on {:?} with points {:?}",
                g.edges().collect::<Vec<_>>(),
                p.to_vec()
            )
        })?;
    }
    Ok(format!("{cases} pairs, 0 mismatches ({positive} visible)"))
}

fn c2_closed_forms() -> Check {
    let mut checked = 0;
    for n in 2..=12 {
        ensure(
            mu_path(n).unwrap().mu == brute(&generators::path(n)),
            || format!("path {n}"),
        )?;
        checked += 1;
        if n >= 3 {
            ensure(
                mu_cycle(n).unwrap().mu == brute(&generators::cycle(n)),
                || format!("cycle {n}"),
            )?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..50 {
        let n = rng.gen_range(1..=12);
        let t = generators::random_tree(n, &mut rng);
        let leaves = if n <= 2 {
            n
        } else {
            (0..n).filter(|&v| t.degree(v) == 1).count()
        };
        let r = mu_tree(&t).unwrap();
        ensure(r.mu == leaves && r.mu == brute(&t), || {
            format!("tree {:?}", t.edges().collect::<Vec<_>>())
        })?;
        checked += 1;
    }
    for _ in 0..30 {
        let n = rng.gen_range(1..=12);
        let b = generators::random_block_graph(n, &mut rng);
        let outside = n - articulation_vertices(&b).len();
        let r = mu_block_graph(&b).unwrap();
        ensure(r.mu == outside && r.mu == brute(&b), || {
            format!("block graph {:?}", b.edges().collect::<Vec<_>>())
        })?;
        checked += 1;
    }
    for m in 1..=4 {
        for n in m..=5 {
            ensure(
                mu_grid(m, n).unwrap().mu == brute(&generators::grid(m, n)),
                || format!("grid {m}x{n}"),
            )?;
            checked += 1;
        }
    }
    for m in 1..=10 {
        for n in 1..=11 - m {
            let r = mu_complete_bipartite(m, n).unwrap();
            ensure(r.mu == brute(&generators::complete_bipartite(m, n)), || {
                format!("K{m},{n}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} closed forms equal exhaustive search"))
}

fn c3_table_one() -> Check {
    let rows = [
        ((1, 1), 1),
        ((2, 2), 3),
        ((2, 7), 4),
        ((3, 3), 5),
        ((3, 5), 6),
        ((4, 4), 8),
    ];
    for ((m, n), mu) in rows {
        let got = mu_grid(m, n).unwrap().mu;
        ensure(got == mu, || {
            format!("mu(G{m},{n}) = {got}, table says {mu}")
        })?;
    }
    for m in 4..=30 {
        for n in 4..=30 {
            let got = mu_grid(m, n).unwrap().mu;
            ensure(got == 2 * m.min(n), || format!("mu(G{m},{n}) = {got}"))?;
        }
    }
    Ok("6 listed values and 2*min(m,n) for 4 <= m,n <= 30".into())
}

fn c4_grid_scale() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for m in 4..=40 {
        for n in m..=40 {
            let r = mu_grid(m, n).unwrap();
            ensure(r.witness.len() == 2 * m, || {
                format!("G{m},{n}: |P| = {}", r.witness.len())
            })?;
            ensure(is_mv_set(&generators::grid(m, n), &r.witness), || {
                format!("G{m},{n}: not visible")
            })?;
            count += 1;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(10), || format!("took {t:.2?}"))?;
    Ok(format!("{count} grids up to 40x40 in {t:.2?}"))
}

fn c5_grid44_unique() -> Check {
    let sets = all_max_sets(&generators::grid(4, 4)).unwrap();
    // (row, column) pairs as printed for the unique maximum set
    let listed = [
        (1, 0),
        (2, 0),
        (0, 1),
        (3, 1),
        (0, 2),
        (3, 2),
        (1, 3),
        (2, 3),
    ];
    let expect = PointSet::collect(16, listed.iter().map(|&(r, c)| 4 * r + c));
    ensure(sets.len() == 1, || format!("{} maximum sets", sets.len()))?;
    ensure(sets[0] == expect, || format!("set {} differs", sets[0]))?;
    Ok(format!("exactly one maximum set {}", sets[0]))
}

fn c6_gadget() -> Check {
    let g = gadget();
    let sets = all_max_sets(&g).unwrap();
    let (u, ubar) = (0, 1);
    ensure(sets.len() == 2, || format!("{} maximum sets", sets.len()))?;
    for s in &sets {
        ensure(s.len() == 3, || format!("set {s} has size {}", s.len()))?;
        ensure(s.contains(u) != s.contains(ubar), || {
            format!("set {s} breaks the u/ubar rule")
        })?;
    }
    Ok(format!("mu = 3, maximum sets {} and {}", sets[0], sets[1]))
}

/// Satisfiable formulas with `p <= 8`, `q <= 12` that already contain three
/// literal-disjoint clauses, so no padding changes `p` or `q`.
fn satisfiable_formulas() -> Vec<(CnfFormula, Vec<bool>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let mut out = Vec::new();
    while out.len() < 100 {
        let f = random_formula(rng.gen_range(5..=8), rng.gen_range(3..=12), &mut rng);
        if f.disjoint_triple().is_none() {
            continue;
        }
        if let Some(t) = f.solve_bruteforce().unwrap() {
            out.push((f, t));
        }
    }
    out
}

fn c7_soundness(formulas: &[(CnfFormula, Vec<bool>)]) -> Check {
    let start = Instant::now();
    for (f, t) in formulas {
        let (p, q) = (f.num_vars(), f.num_clauses());
        ensure(p <= 8 && q <= 12, || format!("size p = {p}, q = {q}"))?;
        let inst = sat_to_mv(f).unwrap();
        let pts = assignment_to_points(&inst, t).unwrap();
        ensure(pts.len() == 3 * p + q + 2, || {
            format!("|P| = {} for {f}", pts.len())
        })?;
        ensure(is_mv_set(&inst.graph, &pts), || {
            format!("not visible for {f}")
        })?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:.2?}"))?;
    Ok(format!(
        "{} formulas, |P| = 3p+q+2 and visible, {t:.2?}",
        formulas.len()
    ))
}

fn c8_certificate(formulas: &[(CnfFormula, Vec<bool>)]) -> Check {
    for (f, _) in formulas {
        let inst = sat_to_mv(f).unwrap();
        let n = inst.graph.n();
        let cert = certify_upper_bound(&inst).unwrap();
        let k = 3 * f.num_vars() + f.num_clauses() + 2;
        ensure(cert.total == k, || {
            format!("total {} != {k} for {f}", cert.total)
        })?;
        let mut seen = PointSet::new(n);
        for part in &cert.parts {
            ensure(is_convex(&inst.graph, &part.vertices).unwrap(), || {
                format!("part {} not convex", part.vertices)
            })?;
            for v in part.vertices.iter() {
                ensure(seen.insert(v), || format!("vertex {v} covered twice"))?;
            }
        }
        ensure(seen.len() == n, || {
            format!("cover misses {} vertices", n - seen.len())
        })?;
        ensure(cert.parts.iter().map(|p| p.mu).sum::<usize>() == k, || {
            "part sum".into()
        })?;
    }
    Ok(format!(
        "{} certificates equal 3p+q+2 with convex parts and complete covers",
        formulas.len()
    ))
}

fn c9_completeness() -> Check {
    // Three literal-disjoint clauses need nine distinct literals, so p >= 5
    // and |V| = 4p+q+5 >= 28. Confirm no admissible (p, q) fits in 22.
    let fits_22 = (1..=22usize)
        .flat_map(|p| (3..=22usize).map(move |q| (p, q)))
        .any(|(p, q)| 2 * p >= 9 && 4 * p + q + 5 <= 22);
    let curated: Vec<(usize, Vec<[i32; 3]>)> = vec![
        (5, vec![[1, 2, 3], [4, 5, -1], [-2, -3, -4]]),
        (5, vec![[1, 2, 3], [4, 5, -1], [-2, -3, -4], [-5, 1, 2]]),
        (5, vec![[1, 2, 3], [-1, -2, -3], [4, -4, 5], [1, -2, 4]]),
        (
            5,
            vec![[1, 2, 3], [-4, -5, -1], [-2, -3, 4], [1, 2, -3], [5, -2, 3]],
        ),
        (
            5,
            vec![
                [1, 2, 3],
                [-1, -2, -3],
                [4, -4, 5],
                [1, 2, -3],
                [1, -2, 3],
                [-1, 2, 3],
                [1, -2, -3],
                [-1, 2, -3],
                [-1, -2, 3],
            ],
        ),
        (
            5,
            vec![
                [1, 2, 3],
                [-1, -2, -3],
                [4, -4, 5],
                [1, 2, -3],
                [1, -2, 3],
                [-1, 2, 3],
                [1, -2, -3],
                [-1, 2, -3],
                [-1, -2, 3],
                [1, 4, 5],
            ],
        ),
    ];
    let (mut sat_count, mut sizes) = (0, Vec::new());
    for (p, clauses) in curated {
        let f = CnfFormula::from_signed(p, &clauses).unwrap();
        ensure(f.disjoint_triple().is_some(), || {
            format!("{f} lacks a disjoint triple")
        })?;
        let sat = f.solve_bruteforce().unwrap().is_some();
        sat_count += sat as usize;
        let inst = sat_to_mv(&f).unwrap();
        let r = mu_exact(&inst.graph).unwrap();
        ensure(r.optimal && r.mu <= inst.k, || {
            format!("mu = {} > K = {} for {f}", r.mu, inst.k)
        })?;
        ensure((r.mu == inst.k) == sat, || {
            format!("mu = {}, K = {}, satisfiable = {sat}: {f}", r.mu, inst.k)
        })?;
        sizes.push(inst.graph.n());
    }
    let (lo, hi) = (sizes.iter().min().unwrap(), sizes.iter().max().unwrap());
    let summary = format!(
        "mu_exact = K iff satisfiable on {} formulas ({sat_count} satisfiable), instance sizes {lo}..{hi} vertices",
        sizes.len()
    );
    ensure(*hi <= 22, || {
        let why = if fits_22 {
            "a smaller curated formula is missing".to_string()
        } else {
            "no (p, q) with three literal-disjoint clauses gives 4p+q+5 <= 22, the minimum is 28"
                .to_string()
        };
        format!("{summary}; required <= 22 vertices: {why}")
    })?;
    Ok(summary)
}

fn c10_torus() -> Check {
    let t33 = brute(&generators::torus(3, 3));
    ensure(t33 <= 9, || format!("mu(T3,3) = {t33}"))?;
    let t34 = mu_exact(&generators::torus(3, 4)).unwrap().mu;
    let t44 = mu_exact(&generators::torus(4, 4)).unwrap().mu;
    ensure(t34 <= 9 && t44 <= 12, || {
        format!("mu(T3,4) = {t34}, mu(T4,4) = {t44}")
    })?;
    let reg = mu_torus_bound(11, 11).unwrap();
    ensure(
        reg.upper_bound == 33 && reg.attained == Attainment::No,
        || "registry for T11,11".into(),
    )?;
    Ok(format!(
        "mu(T3,3) = {t33}, mu(T3,4) = {t34}, mu(T4,4) = {t44}; m <= 11 claim kept as registry data"
    ))
}

fn c11_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    let mut solved = 0;
    let mut check_bounds = |g: &Graph, mu: usize| {
        solved += 1;
        ensure(mu >= g.max_degree() && mu >= greedy_clique(g).len(), || {
            format!(
                "mu = {mu} below a bound on {:?}",
                g.edges().collect::<Vec<_>>()
            )
        })
    };
    for i in 0..1000 {
        let n = rng.gen_range(1..=10);
        let g = generators::random_gnp(n, rng.gen_range(0.1..0.9), &mut rng);
        let r = mu_exact(&g).unwrap();
        check_bounds(&g, r.mu)?;
        let keep = random_subset(n, &mut rng);
        let sub = PointSet::collect(n, r.witness.iter().filter(|&v| keep.contains(v)));
        ensure(is_mv_set(&g, &sub), || format!("hereditary case {i}"))?;
    }
    let mut with_cut = 0;
    for i in 0..200 {
        let n = rng.gen_range(2..=10);
        let g = generators::random_gnp(n, rng.gen_range(0.15..0.5), &mut rng);
        with_cut += !articulation_vertices(&g).is_empty() as usize;
        let (e, b) = (mu_exact(&g).unwrap().mu, brute(&g));
        check_bounds(&g, e)?;
        ensure(e == b, || format!("articulation case {i}: {e} != {b}"))?;
    }
    let mut rects = 0;
    for (m, n) in [(3, 4), (3, 5), (4, 4)] {
        let grid = generators::grid(m, n);
        let mu_g = mu_exact(&grid).unwrap().mu;
        let max_sets = all_max_sets(&grid).unwrap();
        for r0 in 0..m {
            for r1 in r0 + 1..=m {
                for c0 in 0..n {
                    for c1 in c0 + 1..=n {
                        let ids: Vec<usize> = (r0..r1)
                            .flat_map(|r| (c0..c1).map(move |c| r * n + c))
                            .collect();
                        let h = grid.induced_subgraph(&ids);
                        let at = || format!("G{m},{n} rectangle {r0}..{r1} x {c0}..{c1}");
                        ensure(mu_exact(&h).unwrap().mu <= mu_g, at)?;
                        for p in &max_sets {
                            let inside = PointSet::collect(
                                ids.len(),
                                (0..ids.len()).filter(|&i| p.contains(ids[i])),
                            );
                            ensure(is_mv_set(&h, &inside), at)?;
                        }
                        rects += 1;
                    }
                }
            }
        }
    }
    for i in 0..100 {
        let n = rng.gen_range(1..=11);
        let g = generators::random_gnp(n, rng.gen_range(0.1..0.9), &mut rng);
        let (h, perm) = generators::shuffled(&g, &mut rng);
        let r = mu_exact(&g).unwrap();
        let image = PointSet::collect(n, r.witness.iter().map(|v| perm[v]));
        ensure(
            mu_exact(&h).unwrap().mu == r.mu && is_mv_set(&h, &image),
            || format!("relabelling {i}"),
        )?;
    }
    Ok(format!(
        "1000 hereditary, {solved} bound checks, 200 exact = brute ({with_cut} with cut vertices), {rects} rectangles, 100 relabellings"
    ))
}

fn c12_join_cograph() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(112);
    let mut cases = [0usize; 3];
    for i in 0..100 {
        let g1 = generators::random_gnp(rng.gen_range(1..=6), rng.gen_range(0.0..1.0), &mut rng);
        let g2 = generators::random_gnp(rng.gen_range(1..=6), rng.gen_range(0.0..1.0), &mut rng);
        let j = mu_join(&g1, &g2).unwrap();
        let (n, mu) = (j.graph.n(), brute(&j.graph));
        ensure(j.result.mu == mu, || {
            format!("join {i}: {} != {mu}", j.result.mu)
        })?;
        let near = |g: &Graph| brute(g) + 1 >= g.n();
        let (expect, slot) = if g1.is_complete() && g2.is_complete() {
            (n, 0)
        } else if near(&g1) || near(&g2) {
            (n - 1, 1)
        } else {
            (n - 2, 2)
        };
        ensure(mu == expect, || {
            format!("join {i}: mu = {mu}, case predicts {expect}")
        })?;
        let slot_of = match j.case {
            JoinCase::Complete => 0,
            JoinCase::MinusOne => 1,
            JoinCase::MinusTwo => 2,
        };
        ensure(slot == slot_of, || format!("join {i}: case {:?}", j.case))?;
        cases[slot] += 1;
    }
    let mut small = 0;
    for i in 0..50 {
        let n = rng.gen_range(1..=40);
        let g = generators::random_cograph(n, &mut rng);
        let r = mu_cograph(&g).unwrap();
        ensure(r.mu <= n && r.mu + 2 >= n, || {
            format!("cograph {i}: mu = {} with n = {n}", r.mu)
        })?;
        ensure(is_mv_set(&g, &r.witness), || {
            format!("cograph {i}: witness")
        })?;
        if n <= 12 {
            ensure(r.mu == brute(&g), || {
                format!("cograph {i}: differs from brute force")
            })?;
            small += 1;
        }
    }
    Ok(format!(
        "100 joins (cases n/n-1/n-2: {}/{}/{}), 50 cographs ({small} checked exhaustively)",
        cases[0], cases[1], cases[2]
    ))
}

fn median_time(g: &Graph, p: &PointSet) -> Duration {
    let mut times: Vec<Duration> = (0..3)
        .map(|_| {
            let t = Instant::now();
            assert!(is_mv_set(g, p));
            t.elapsed()
        })
        .collect();
    times.sort();
    times[1]
}

fn c13_performance() -> Check {
    let g = generators::grid(200, 200);
    let full = mu_grid(200, 200).unwrap().witness;
    ensure(full.len() == 400, || format!("|P| = {}", full.len()))?;
    // every other witness point, spread over the whole grid like the full set
    let half = PointSet::collect(g.n(), full.iter().step_by(2));
    let t_full = median_time(&g, &full);
    let t_half = median_time(&g, &half);
    let ratio = t_full.as_secs_f64() / t_half.as_secs_f64();
    ensure(t_full <= Duration::from_secs(10), || {
        format!("400 points took {t_full:.2?}")
    })?;
    ensure(ratio <= 2.5, || format!("doubling |P| cost {ratio:.2}x"))?;
    Ok(format!(
        "400 points in {t_full:.2?}, 200 points in {t_half:.2?}, ratio {ratio:.2}"
    ))
}

/// Criteria whose stated bounds cannot be met by any input. Their checks
/// still run unchanged and still print `[FAIL]`; they only stop the process
/// from exiting non-zero. Criterion 9 asks for instances with at most 22
/// vertices, but the smallest valid instance has 28 (see the message).
const UNATTAINABLE: [usize; 1] = [9];

fn main() {
    let formulas = satisfiable_formulas();
    let criteria: Vec<Criterion> = vec![
        (
            "verifier matches all-shortest-paths oracle",
            Box::new(c1_verifier_oracle),
        ),
        (
            "closed forms equal exhaustive search",
            Box::new(c2_closed_forms),
        ),
        ("grid table values", Box::new(c3_table_one)),
        ("grid constructions up to 40x40", Box::new(c4_grid_scale)),
        (
            "unique maximum set of the 4x4 grid",
            Box::new(c5_grid44_unique),
        ),
        ("gadget has two maximum sets", Box::new(c6_gadget)),
        ("reduction soundness", Box::new(|| c7_soundness(&formulas))),
        (
            "reduction bound certificate",
            Box::new(|| c8_certificate(&formulas)),
        ),
        (
            "reduction completeness on small instances",
            Box::new(c9_completeness),
        ),
        ("torus bounds", Box::new(c10_torus)),
        ("property suite", Box::new(c11_properties)),
        ("join and cograph formulas", Box::new(c12_join_cograph)),
        (
            "verifier performance on the 200x200 grid",
            Box::new(c13_performance),
        ),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail} ({t:.1?})", i + 1),
            Err(detail) => {
                println!("[FAIL] {:>2} {name}: {detail} ({t:.1?})", i + 1);
                failed.push(i + 1);
            }
        }
    }
    let unexpected: Vec<usize> = failed
        .iter()
        .copied()
        .filter(|c| !UNATTAINABLE.contains(c))
        .collect();
    println!(
        "{} of {} criteria passed; failed: {failed:?}; known unattainable: {UNATTAINABLE:?}",
        criteria.len() - failed.len(),
        criteria.len()
    );
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
