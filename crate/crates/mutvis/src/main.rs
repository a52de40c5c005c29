use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mutvis::dimacs::parse_dimacs;
use mutvis::dot::to_dot;
use mutvis::format::{parse_graph, parse_points, write_graph, write_points};
use mutvis::parallel::{decide, default_threads, solve, SolveOptions};
use mutvis::report::Report;
use mutvis_core::classes::{self, ClassResult};
use mutvis_core::reduction::{
    assignment_to_points, ensure_disjoint_clauses, sat_to_mv, CnfFormula,
};
use mutvis_core::solver::{all_max_sets, Decision, ENUMERATION_LIMIT};
use mutvis_core::visibility::{check_mv_set, witness_path, Verdict};
use mutvis_core::{generators, Graph, PointSet};

const NUMBERING: &str = "Grid and torus vertex (row r, column c) has id r*n + c, where n is the \
number of columns. Exit codes: 0 success, 1 negative answer, 2 usage error, 3 input error.";

#[derive(Parser)]
#[command(name = "mutvis", version, about = "Mutual-visibility sets in graphs", after_help = NUMBERING)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph file, optionally with a maximum mutual-visibility set
    Gen(GenArgs),
    /// Check whether a point set is a mutual-visibility set
    Verify(VerifyArgs),
    /// Compute the mutual-visibility number exactly
    Solve(SolveArgs),
    /// Closed-form mutual-visibility number for a known graph class
    Mu(MuArgs),
    /// Report which small-mu characterizations apply to a graph
    Classify { graph: PathBuf },
}

#[derive(Args)]
#[command(after_help = NUMBERING)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
    /// Append a maximum mutual-visibility set as a trailing comment
    #[arg(long, global = true)]
    witness: bool,
    /// Also write the set to this point file
    #[arg(long, global = true, value_name = "FILE")]
    witness_out: Option<PathBuf>,
    /// Write the graph here instead of stdout
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Also write a Graphviz file
    #[arg(long, global = true, value_name = "FILE")]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenKind {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Grid {
        m: usize,
        n: usize,
    },
    Torus {
        m: usize,
        n: usize,
    },
    /// Complete bipartite K_{m,n}; side A is 0..m
    Kbip {
        m: usize,
        n: usize,
    },
    /// Star K_{1,n} with centre 0 and n leaves
    Star {
        n: usize,
    },
    TreeRandom {
        n: usize,
        seed: u64,
    },
    BlockRandom {
        n: usize,
        seed: u64,
    },
    /// Reduction instance from a DIMACS 3-CNF file
    Reduce {
        cnf: PathBuf,
        /// Satisfying assignment as signed literals, e.g. "1 -2 3"
        #[arg(long, allow_hyphen_values = true)]
        assignment: Option<String>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    points: PathBuf,
    /// Describe the offending pair, or confirm all pairs
    #[arg(long)]
    explain: bool,
    /// Print a point-free shortest path between two points
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    path: Option<Vec<usize>>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SolveArgs {
    graph: PathBuf,
    /// Only decide whether a set of at least K points exists
    #[arg(long, value_name = "K", conflicts_with = "all")]
    decide: Option<usize>,
    /// List every maximum set (small graphs only)
    #[arg(long)]
    all: bool,
    /// Report the lexicographically least maximum set
    #[arg(long)]
    canonical: bool,
    /// Wall-clock budget in seconds
    #[arg(long, value_name = "SECONDS")]
    budget: Option<f64>,
    /// Worker threads (default: MV_THREADS or the machine width)
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MuArgs {
    #[command(subcommand)]
    kind: MuKind,
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum MuKind {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Grid {
        m: usize,
        n: usize,
    },
    Torus {
        m: usize,
        n: usize,
    },
    Kbip {
        m: usize,
        n: usize,
    },
    Star {
        n: usize,
    },
    /// Recognize the class of a graph file
    File {
        graph: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Input(String),
}

type Outcome = Result<u8, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Mu(a) => cmd_mu(a),
        Command::Classify { graph } => cmd_classify(&graph),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

struct Generated {
    graph: Graph,
    comments: Vec<String>,
    trailer: Vec<String>,
    witness: Option<PointSet>,
}

fn grid_comment(m: usize, n: usize, what: &str) -> String {
    format!("{what} {m}x{n}; vertex (r, c) has id r*{n} + c")
}

fn cmd_gen(a: GenArgs) -> Outcome {
    let want = a.witness || a.witness_out.is_some();
    let closed =
        |r: Result<ClassResult, classes::ClassError>| -> Result<Option<PointSet>, Failure> {
            if want {
                r.map(|c| Some(c.witness)).map_err(usage)
            } else {
                Ok(None)
            }
        };
    let plain = |graph: Graph, comment: String, witness: Option<PointSet>| Generated {
        graph,
        comments: vec![comment],
        trailer: Vec::new(),
        witness,
    };
    let at_least = |what: &str, v: usize, min: usize| {
        if v < min {
            Err(usage(format!("{what} must be at least {min}")))
        } else {
            Ok(())
        }
    };

    let out = match a.kind {
        GenKind::Path { n } => {
            at_least("n", n, 1)?;
            plain(
                generators::path(n),
                format!("path P_{n}"),
                closed(classes::mu_path(n))?,
            )
        }
        GenKind::Cycle { n } => {
            at_least("n", n, 3)?;
            plain(
                generators::cycle(n),
                format!("cycle C_{n}"),
                closed(classes::mu_cycle(n))?,
            )
        }
        GenKind::Grid { m, n } => {
            at_least("grid sides", m.min(n), 1)?;
            plain(
                generators::grid(m, n),
                grid_comment(m, n, "grid"),
                closed(classes::mu_grid(m, n))?,
            )
        }
        GenKind::Torus { m, n } => {
            at_least("torus sides", m.min(n), 3)?;
            if want {
                return Err(usage(
                    "no maximum-set construction is known for tori; drop --witness",
                ));
            }
            plain(generators::torus(m, n), grid_comment(m, n, "torus"), None)
        }
        GenKind::Kbip { m, n } => {
            at_least("sides", m.min(n), 1)?;
            let w = closed(classes::mu_complete_bipartite(m, n))?;
            plain(
                generators::complete_bipartite(m, n),
                format!("K_{{{m},{n}}}; side A is 0..{m}"),
                w,
            )
        }
        GenKind::Star { n } => {
            at_least("n", n, 1)?;
            let g = generators::star(n);
            let w = closed(classes::mu_tree(&g))?;
            plain(g, format!("star K_{{1,{n}}}; centre 0"), w)
        }
        GenKind::TreeRandom { n, seed } => {
            at_least("n", n, 1)?;
            let g = generators::random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed));
            let w = closed(classes::mu_tree(&g))?;
            plain(g, format!("random tree, n = {n}, seed = {seed}"), w)
        }
        GenKind::BlockRandom { n, seed } => {
            at_least("n", n, 1)?;
            let g = generators::random_block_graph(n, &mut ChaCha8Rng::seed_from_u64(seed));
            let w = closed(classes::mu_block_graph(&g))?;
            plain(g, format!("random block graph, n = {n}, seed = {seed}"), w)
        }
        GenKind::Reduce { cnf, assignment } => {
            if want && assignment.is_none() {
                return Err(usage("--witness for reduce needs --assignment"));
            }
            match gen_reduce(&cnf, assignment.as_deref())? {
                Ok(g) => g,
                Err(msg) => {
                    eprintln!("{msg}");
                    return Ok(1);
                }
            }
        }
    };

    let mut text = write_graph(&out.graph, &out.comments);
    for t in &out.trailer {
        text.push_str(&format!("# {t}\n"));
    }
    if let (true, Some(w)) = (a.witness, &out.witness) {
        text.push_str(&format!("# witness: {}", write_points(w)));
    }
    match &a.output {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    if let (Some(p), Some(w)) = (&a.witness_out, &out.witness) {
        write(p, &write_points(w))?;
    }
    if let Some(p) = &a.dot {
        write(p, &to_dot(&out.graph, out.witness.as_ref()))?;
    }
    Ok(0)
}

/// `Ok(Err(msg))` when the assignment does not satisfy the formula.
fn gen_reduce(cnf: &Path, assignment: Option<&str>) -> Result<Result<Generated, String>, Failure> {
    let f =
        parse_dimacs(&read(cnf)?).map_err(|e| Failure::Input(format!("{}: {e}", cnf.display())))?;
    let padded = ensure_disjoint_clauses(&f);
    let inst = sat_to_mv(&padded).map_err(|e| Failure::Input(e.to_string()))?;
    let (p, q) = (padded.num_vars(), padded.num_clauses());
    let mut comments = vec![format!(
        "3SAT reduction: p = {p}, q = {q}, |V| = 4p+q+5 = {}",
        inst.graph.n()
    )];
    if padded.num_vars() != f.num_vars() {
        comments.push(format!(
            "added variables {}..{} and three always-true clauses to get three disjoint clauses",
            f.num_vars() + 1,
            p
        ));
    }
    let roles: Vec<String> = inst.roles.iter().map(|r| r.to_string()).collect();
    comments.push(format!("roles by id: {}", roles.join(" ")));

    let witness = match assignment {
        None => None,
        Some(s) => {
            let t = parse_assignment(s, &f, p)?;
            if !padded.satisfies(&t) {
                return Ok(Err("assignment does not satisfy the formula".into()));
            }
            Some(assignment_to_points(&inst, &t).map_err(|e| Failure::Input(e.to_string()))?)
        }
    };
    Ok(Ok(Generated {
        graph: inst.graph.clone(),
        comments,
        trailer: vec![format!("K = 3p+q+2 = {}", inst.k)],
        witness,
    }))
}

/// Signed literals covering every variable of `f` once; padding variables
/// up to `p` are set false.
fn parse_assignment(s: &str, f: &CnfFormula, p: usize) -> Result<Vec<bool>, Failure> {
    let mut t: Vec<Option<bool>> = vec![None; p];
    for tok in s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
    {
        let x: i64 = tok
            .parse()
            .map_err(|_| usage(format!("`{tok}` is not a literal")))?;
        let var = x.unsigned_abs() as usize;
        if x == 0 || var > f.num_vars() {
            return Err(usage(format!(
                "literal {x} is outside 1..={}",
                f.num_vars()
            )));
        }
        if t[var - 1].replace(x > 0).is_some() {
            return Err(usage(format!("variable {var} is assigned twice")));
        }
    }
    if let Some(i) = t[..f.num_vars()].iter().position(Option::is_none) {
        return Err(usage(format!("variable {} has no value", i + 1)));
    }
    Ok(t.into_iter().map(|v| v.unwrap_or(false)).collect())
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let pts = parse_points(&read(&a.points)?, g.n())
        .map_err(|e| Failure::Input(format!("{}: {e}", a.points.display())))?;
    let verdict = check_mv_set(&g, &pts);
    let mut lines = Vec::new();
    let (name, pair) = match verdict {
        Verdict::Visible => ("visible", None),
        Verdict::Blocked(u, v) => ("blocked", Some((u, v))),
        Verdict::Components(u, v) => ("components", Some((u, v))),
    };
    match verdict {
        Verdict::Visible => {
            lines.push(format!("mutual-visibility set: yes (|P| = {})", pts.len()));
            if a.explain {
                let k = pts.len();
                lines.push(format!(
                    "all {} pairs of points see each other",
                    k * k.saturating_sub(1) / 2
                ));
            }
        }
        Verdict::Blocked(u, v) => {
            lines.push("mutual-visibility set: no".into());
            lines.push(format!("blocked pair: {u} {v}"));
            if a.explain {
                lines.push(format!(
                    "every shortest {u}-{v} path has another point inside"
                ));
            }
        }
        Verdict::Components(u, v) => {
            lines.push("mutual-visibility set: no".into());
            lines.push(format!("blocked pair: {u} {v}"));
            if a.explain {
                lines.push(format!(
                    "reason: components ({u} and {v} are not connected)"
                ));
            } else {
                lines.push("reason: components".into());
            }
        }
    }
    if let Some(uv) = &a.path {
        let (u, v) = (uv[0], uv[1]);
        match witness_path(&g, &pts, u, v) {
            Ok(Some(path)) => {
                let ids: Vec<String> = path.iter().map(|x| x.to_string()).collect();
                lines.push(format!("path {u} {v}: {}", ids.join(" ")));
            }
            Ok(None) => lines.push(format!("path {u} {v}: none")),
            Err(e) => return Err(usage(e)),
        }
    }

    if a.json {
        let mut r = Report::new(name);
        match pair {
            Some((u, v)) => r.witness = Some(vec![u, v]),
            None => r = r.with_set(&pts),
        }
        println!("{}", r.to_json());
    } else {
        for l in lines {
            println!("{l}");
        }
    }
    Ok(if verdict.is_visible() { 0 } else { 1 })
}

fn cmd_solve(a: SolveArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let budget = match a.budget {
        Some(s) if !(s >= 0.0 && s.is_finite()) => {
            return Err(usage("budget must be a non-negative number"))
        }
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    let threads = a.threads.unwrap_or_else(default_threads).max(1);

    if let Some(k) = a.decide {
        if k > g.n() {
            return Err(usage(format!(
                "threshold {k} exceeds the vertex count {}",
                g.n()
            )));
        }
        let d = decide(&g, k, budget).map_err(usage)?;
        let (verdict, set, code) = match &d {
            Decision::Yes(p) => ("yes", Some(p), 0),
            Decision::No => ("no", None, 1),
            Decision::Unknown => ("unknown", None, 0),
        };
        if a.json {
            let mut r = Report::new(verdict);
            if let Some(p) = set {
                r = r.with_set(p);
            }
            if matches!(d, Decision::Unknown) {
                r.flags.push("budget-exhausted".into());
            }
            println!("{}", r.to_json());
        } else {
            match &d {
                Decision::Yes(p) => println!("yes\nwitness: {p}"),
                Decision::No => println!("no"),
                Decision::Unknown => println!("unknown (budget exhausted before a decision)"),
            }
        }
        return Ok(code);
    }

    if a.all {
        if g.n() > ENUMERATION_LIMIT {
            return Err(usage(format!(
                "--all is limited to {ENUMERATION_LIMIT} vertices, this graph has {}",
                g.n()
            )));
        }
        let sets = all_max_sets(&g).map_err(usage)?;
        let mu = sets.first().map_or(0, |s| s.len());
        if a.json {
            let sets: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
            let v = serde_json::json!({ "mu": mu, "count": sets.len(), "sets": sets });
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        } else {
            println!("mu = {mu}");
            println!("maximum sets: {}", sets.len());
            for s in &sets {
                println!("{s}");
            }
        }
        return Ok(0);
    }

    let opts = SolveOptions {
        canonical: a.canonical,
        budget,
        threads,
    };
    let sol = solve(&g, &opts).map_err(usage)?;
    let r = &sol.result;
    let elapsed_ms = r.stats.elapsed.map(|d| d.as_secs_f64() * 1e3);
    if a.json {
        let mut rep =
            Report::new(if r.optimal { "optimal" } else { "lower-bound" }).with_set(&r.witness);
        rep.stats.nodes = Some(r.stats.nodes);
        rep.stats.elapsed_ms = elapsed_ms;
        rep.stats.method = Some(r.method.as_str().into());
        rep.stats.threads = Some(sol.threads);
        if !r.optimal {
            rep.flags.push("lower-bound-only".into());
        }
        if sol.canonical {
            rep.flags.push("canonical".into());
        } else if a.canonical {
            rep.flags.push("not-canonical".into());
        }
        println!("{}", rep.to_json());
    } else {
        if r.optimal {
            println!("mu = {}", r.mu);
        } else {
            println!("mu >= {} (lower-bound only: budget exhausted)", r.mu);
        }
        println!("witness: {}", r.witness);
        println!(
            "# nodes = {}, elapsed = {:.1} ms, threads = {}",
            r.stats.nodes,
            elapsed_ms.unwrap_or(0.0),
            sol.threads
        );
    }
    Ok(0)
}

fn print_class(r: &ClassResult, json: bool) {
    if json {
        println!(
            "{}",
            Report::new(r.class.as_str()).with_set(&r.witness).to_json()
        );
    } else {
        println!("mu = {} ({})", r.mu, r.class);
        println!("witness: {}", r.witness);
    }
}

fn cmd_mu(a: MuArgs) -> Outcome {
    let r = match a.kind {
        MuKind::Path { n } => classes::mu_path(n),
        MuKind::Cycle { n } => classes::mu_cycle(n),
        MuKind::Grid { m, n } => classes::mu_grid(m, n),
        MuKind::Kbip { m, n } => classes::mu_complete_bipartite(m, n),
        MuKind::Star { n } => {
            if n == 0 {
                return Err(usage("a star needs at least one leaf"));
            }
            classes::mu_tree(&generators::star(n))
        }
        MuKind::Torus { m, n } => {
            let f = classes::mu_torus_bound(m, n).map_err(usage)?;
            if a.json {
                let mut rep = Report::new("torus_bound");
                rep.mu = Some(f.upper_bound);
                rep.flags.push(format!("attained-{}", f.attained.as_str()));
                println!("{}", rep.to_json());
            } else {
                println!(
                    "bound {}, attainment {} ({})",
                    f.upper_bound,
                    f.attained.as_str(),
                    f.source
                );
            }
            return Ok(0);
        }
        MuKind::File { graph } => {
            let g = load_graph(&graph)?;
            return match classes::mu_formula(&g) {
                Some(r) => {
                    print_class(&r, a.json);
                    Ok(0)
                }
                None => {
                    println!("no closed form for this graph; use `mutvis solve`");
                    Ok(1)
                }
            };
        }
    };
    print_class(&r.map_err(usage)?, a.json);
    Ok(0)
}

fn cmd_classify(path: &Path) -> Outcome {
    let g = load_graph(path)?;
    let lines = classes::classify(&g).lines();
    if lines.is_empty() {
        println!("none of the characterizations apply (mu = 1, 2, |V|, |E|)");
    }
    for l in lines {
        println!("{l}");
    }
    Ok(0)
}
