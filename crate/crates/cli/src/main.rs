//! `gso`: batch front end for the search, mining and verification tools.

mod report;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use gso_core::canon::{canonical_form_coloured, canonical_graph};
use gso_core::contraction::Relation;
use gso_core::io::{parse_entries, write_entries, Entry};
use gso_core::obstruction::{
    branch_count, branch_set, derive_fan_base, glue_family_at_root, mine_obstructions, three_branch_count,
    three_branch_set, verify_three_branch,
};
use gso_core::recognizer::decide_cmms_le_2;
use gso_core::search::{solve, Param};
use gso_core::verify::{self, Outcome};
use gso_core::{graph6, Error, RootedGraph};

use report::{Failure, Report};

/// Fixed default seed for every randomized check.
const DEFAULT_SEED: u64 = 20240601;

/// Members of the derived fan base.
const FAN_BASE_SIZE: usize = 5;

/// Materialization limit for generated families.
const MATERIALIZE_LIMIT: u64 = 100_000;

#[derive(Parser)]
#[command(name = "gso", version, about = "Exact connected and monotone mixed graph searching")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Inputs {
    /// Input file of graph6 or rooted-graph JSON lines; `-` reads stdin.
    input: Option<PathBuf>,
    /// Inline graph6 strings, appended after the file contents.
    #[arg(long = "g6")]
    g6: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a search parameter for every input graph.
    Solve {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, default_value = "cmms")]
        param: Param,
        /// Also report whether each value is at most this bound.
        #[arg(short)]
        k: Option<usize>,
        #[arg(long)]
        emit_witness: bool,
        /// Per-graph state limit.
        #[arg(long)]
        budget: Option<u64>,
        /// Write one JSON result per line to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mine contraction or minor obstructions for `param <= k`.
    Mine {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "cmp")]
        param: Param,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value = "contraction")]
        relation: Relation,
        #[arg(long)]
        budget: Option<u64>,
        /// Write the obstructions as graph6 lines.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run acceptance criteria 1-11.
    VerifyPaper {
        /// Directory of `.g6` / `.jsonl` member files for the 177-graph set.
        #[arg(long)]
        families: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count, build or verify the recursive branch family.
    Branches {
        #[arg(short)]
        k: usize,
        /// Rooted-graph JSON lines for the base; defaults to the derived fan base.
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long)]
        count_only: bool,
        /// Run the constrained solves and value checks.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        budget: Option<u64>,
        /// Write the three-branch graphs as graph6 lines.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Glue every size-`m` multiset of a family at its roots.
    Glue {
        /// Rooted-graph JSON lines, one root per member; defaults to the derived fan base.
        family: Option<PathBuf>,
        #[arg(short)]
        m: usize,
        /// Write the glued graphs as rooted-graph JSON lines.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide `cmms <= 2` with the structural recognizer.
    Recognize {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        emit_witness: bool,
    },
    /// Canonical graph6 and certificate for every input graph.
    Canon {
        #[command(flatten)]
        inputs: Inputs,
    },
}

fn main() -> ExitCode {
    if let Ok(t) = std::env::var("GSO_THREADS") {
        match t.parse::<usize>() {
            Ok(n) => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            Err(_) => {
                eprintln!("GSO_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            // A closed stdout (e.g. a pipe into `head`) is not an error.
            let _ = writeln!(std::io::stdout(), "{}", report.to_json());
            ExitCode::from(report.exit_code())
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<Report, Failure> {
    match cmd {
        Command::Solve { inputs, param, k, emit_witness, budget, out } => {
            cmd_solve(&inputs, param, k, emit_witness, budget, out)
        }
        Command::Mine { max_n, param, k, relation, budget, out } => cmd_mine(max_n, param, k, relation, budget, out),
        Command::VerifyPaper { families, seed, out } => cmd_verify_paper(families.as_deref(), seed, out),
        Command::Branches { k, base, count_only, verify, budget, out } => {
            cmd_branches(k, base.as_deref(), count_only, verify, budget, out)
        }
        Command::Glue { family, m, out } => cmd_glue(family.as_deref(), m, out),
        Command::Recognize { inputs, emit_witness } => cmd_recognize(&inputs, emit_witness),
        Command::Canon { inputs } => cmd_canon(&inputs),
    }
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, Failure> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|e| Failure::input(format!("stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Parsed entries plus the input descriptors recorded in the report.
fn load(inputs: &Inputs) -> Result<(Vec<Entry>, Vec<Value>), Failure> {
    let mut text = String::new();
    let mut described = Vec::new();
    if let Some(p) = &inputs.input {
        let bytes = read_bytes(p)?;
        described.push(json!({ "path": p.display().to_string(), "sha256": report::sha256(&bytes) }));
        text = String::from_utf8(bytes).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
    }
    for g in &inputs.g6 {
        described.push(json!({ "g6": g, "sha256": report::sha256(g.as_bytes()) }));
        text.push('\n');
        text.push_str(g);
    }
    if described.is_empty() {
        return Err(Failure::input("no input: give a file, `-`, or --g6".into()));
    }
    let entries = parse_entries(&text).map_err(Failure::from)?;
    Ok((entries, described))
}

fn write_artifact(path: &Path, text: &str) -> Result<Value, Failure> {
    std::fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Ok(json!({ "path": path.display().to_string(), "sha256": report::sha256(text.as_bytes()) }))
}

fn roots(rg: &RootedGraph) -> Value {
    json!({ "s_in": rg.s_in.to_vec(), "s_out": rg.s_out.to_vec() })
}

fn cmd_solve(
    inputs: &Inputs,
    param: Param,
    k: Option<usize>,
    emit_witness: bool,
    budget: Option<u64>,
    out: Option<PathBuf>,
) -> Result<Report, Failure> {
    let (entries, described) = load(inputs)?;
    let mut results = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        let r = solve(&e.rooted, param, budget).map_err(|err| Failure::from(err).at(i))?;
        let mut row = json!({
            "index": i,
            "g6": graph6::encode(&e.rooted.graph),
            "roots": roots(&e.rooted),
            "value": r.value,
            "states": r.states,
        });
        if let Some(name) = &e.name {
            row["name"] = json!(name);
        }
        if let Some(k) = k {
            row["at_most_k"] = json!(r.value <= k);
        }
        if emit_witness {
            row["witness"] = serde_json::to_value(&r.witness).expect("serializable");
        }
        results.push(row);
    }
    let mut rep = Report::new("solve", described, json!({ "param": param.to_string(), "k": k, "budget": budget }));
    rep.counts = json!({ "graphs": results.len() });
    if let Some(p) = out {
        let text: String = results.iter().map(|r| r.to_string() + "\n").collect();
        rep.artifacts.push(write_artifact(&p, &text)?);
    }
    rep.results = Value::Array(results);
    Ok(rep)
}

fn cmd_mine(
    max_n: usize,
    param: Param,
    k: usize,
    relation: Relation,
    budget: Option<u64>,
    out: Option<PathBuf>,
) -> Result<Report, Failure> {
    let r = mine_obstructions(max_n, param, k, relation, budget).map_err(Failure::from)?;
    let found: Vec<Value> = r
        .obstructions
        .iter()
        .map(|g| {
            let (c, _) = canonical_graph(g, &vec![0; g.order()]);
            json!({ "g6": graph6::encode(&c), "order": g.order(), "size": g.size() })
        })
        .collect();
    let mut rep = Report::new(
        "mine",
        vec![],
        json!({ "max_n": max_n, "param": param.to_string(), "k": k, "relation": relation, "budget": budget }),
    );
    rep.counts = json!({ "obstructions": found.len(), "levels": r.levels });
    rep.completeness = json!({ "complete_up_to_order": r.n_max });
    if let Some(p) = out {
        let text: String = found.iter().map(|f| f["g6"].as_str().unwrap().to_string() + "\n").collect();
        rep.artifacts.push(write_artifact(&p, &text)?);
    }
    rep.results = Value::Array(found);
    Ok(rep)
}

fn cmd_verify_paper(families: Option<&Path>, seed: u64, out: Option<PathBuf>) -> Result<Report, Failure> {
    let corpus: Vec<_> = gso_core::obstruction::enumerate_up_to(8).into_iter().flatten().collect();
    let runs: Vec<Box<dyn Fn() -> gso_core::Result<verify::Check>>> = vec![
        Box::new(verify::criterion_1),
        Box::new(verify::criterion_2),
        Box::new(move || verify::criterion_3(6, 100, seed)),
        Box::new(move || verify::criterion_4(7)),
        Box::new(verify::criterion_5),
        Box::new(verify::criterion_6),
        Box::new(verify::criterion_7),
        Box::new(|| verify::criterion_8(&corpus, 8)),
        Box::new(move || verify::criterion_9(500, seed)),
        Box::new(move || verify::criterion_10(families)),
        Box::new(verify::criterion_11),
    ];
    let mut checks = Vec::new();
    for run in runs {
        let c = run().map_err(Failure::from)?;
        eprintln!("{}", c.line());
        checks.push(c);
    }
    let mut described = vec![];
    if let Some(dir) = families {
        described.push(json!({ "families": dir.display().to_string() }));
    }
    let count = |o: Outcome| checks.iter().filter(|c| c.outcome == o).count();
    let mut rep = Report::new("verify-paper", described, json!({ "seed": seed }));
    rep.counts =
        json!({ "pass": count(Outcome::Pass), "fail": count(Outcome::Fail), "unverified": count(Outcome::Unverified) });
    rep.failed = count(Outcome::Fail) > 0;
    rep.results = serde_json::to_value(&checks).expect("serializable");
    if let Some(p) = out {
        let text = rep.to_json() + "\n";
        rep.artifacts.push(write_artifact(&p, &text)?);
    }
    Ok(rep)
}

fn load_rooted_file(path: &Path) -> Result<(Vec<RootedGraph>, Value), Failure> {
    let bytes = read_bytes(path)?;
    let described = json!({ "path": path.display().to_string(), "sha256": report::sha256(&bytes) });
    let text = String::from_utf8(bytes).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let entries = parse_entries(&text).map_err(Failure::from)?;
    Ok((entries.into_iter().map(|e| e.rooted).collect(), described))
}

fn base_or_default(path: Option<&Path>) -> Result<(Vec<RootedGraph>, Vec<Value>), Failure> {
    match path {
        Some(p) => {
            let (base, d) = load_rooted_file(p)?;
            Ok((base, vec![d]))
        }
        None => Ok((derive_fan_base(7), vec![json!({ "derived": "fan base, n <= 7" })])),
    }
}

fn cmd_branches(
    k: usize,
    base: Option<&Path>,
    count_only: bool,
    verify: bool,
    budget: Option<u64>,
    out: Option<PathBuf>,
) -> Result<Report, Failure> {
    if k == 0 {
        return Err(Failure::input("k must be at least 1".into()));
    }
    // Counting needs only the base size, so the default base is not derived.
    let (base, described) = match (count_only, base) {
        (true, None) => (Vec::new(), vec![json!({ "derived": "fan base, n <= 7" })]),
        (_, path) => base_or_default(path)?,
    };
    let size = if count_only && base.is_empty() { FAN_BASE_SIZE } else { base.len() };
    let branches = branch_count(k, size);
    let graphs = three_branch_count(k, size);
    let mut rep = Report::new(
        "branches",
        described,
        json!({ "k": k, "count_only": count_only, "verify": verify, "budget": budget }),
    );
    rep.counts = json!({ "base": size, "branches": branches.to_string(), "three_branch_graphs": graphs.to_string() });
    if count_only {
        return Ok(rep);
    }
    if graphs > MATERIALIZE_LIMIT.into() {
        return Err(Failure::input(format!("{graphs} graphs exceed the materialization limit; use --count-only")));
    }
    let (built_branches, branch_dups) = branch_set(k, &base);
    let (built, dups) = three_branch_set(k, &base);
    let rows: Vec<Value> =
        built.iter().map(|g| json!({ "g6": graph6::encode(g), "order": g.order(), "size": g.size() })).collect();
    rep.results = json!({
        "branches": built_branches.len(),
        "branch_duplicates": branch_dups,
        "graphs": rows,
        "duplicates": dups,
    });
    if verify {
        let r = verify_three_branch(k, &base, budget).map_err(Failure::from)?;
        rep.failed = !r.all_pass();
        rep.results["verification"] = serde_json::to_value(&r).expect("serializable");
    }
    if let Some(p) = out {
        let text: String = built.iter().map(|g| graph6::encode(g) + "\n").collect();
        rep.artifacts.push(write_artifact(&p, &text)?);
    }
    Ok(rep)
}

fn cmd_glue(family: Option<&Path>, m: usize, out: Option<PathBuf>) -> Result<Report, Failure> {
    let (fam, described) = base_or_default(family)?;
    let r = glue_family_at_root(&fam, m).map_err(Failure::from)?;
    let entries: Vec<Entry> = r.graphs.iter().map(|g| Entry { name: None, rooted: g.clone() }).collect();
    let mut rep = Report::new("glue", described, json!({ "m": m }));
    rep.counts =
        json!({ "family": fam.len(), "multisets": r.multisets, "duplicates": r.duplicates, "graphs": r.graphs.len() });
    rep.results =
        Value::Array(r.graphs.iter().map(|g| json!({ "g6": graph6::encode(&g.graph), "roots": roots(g) })).collect());
    if let Some(p) = out {
        rep.artifacts.push(write_artifact(&p, &write_entries(&entries))?);
    }
    Ok(rep)
}

fn cmd_recognize(inputs: &Inputs, emit_witness: bool) -> Result<Report, Failure> {
    let (entries, described) = load(inputs)?;
    let mut results = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        let d = decide_cmms_le_2(&e.rooted.graph).map_err(|err| Failure::from(err).at(i))?;
        let mut row =
            json!({ "index": i, "g6": graph6::encode(&e.rooted.graph), "at_most_2": d.answer, "route": d.route });
        if emit_witness {
            row["spine"] = serde_json::to_value(&d.spine).expect("serializable");
            row["expansion"] = serde_json::to_value(&d.expansion).expect("serializable");
        }
        results.push(row);
    }
    let mut rep = Report::new("recognize", described, json!({}));
    rep.counts = json!({ "graphs": results.len(), "yes": results.iter().filter(|r| r["at_most_2"] == true).count() });
    rep.results = Value::Array(results);
    Ok(rep)
}

fn cmd_canon(inputs: &Inputs) -> Result<Report, Failure> {
    let (entries, described) = load(inputs)?;
    let results: Vec<Value> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let rg = &e.rooted;
            let (c, perm) = canonical_graph(&rg.graph, &rg.colours());
            let map = |s: &gso_core::Bits| {
                let mut v: Vec<usize> = s.iter().map(|x| perm[x]).collect();
                v.sort();
                v
            };
            json!({
                "index": i,
                "g6": graph6::encode(&rg.graph),
                "canonical_g6": graph6::encode(&c),
                "certificate": canonical_form_coloured(&rg.graph, &rg.colours()).to_hex(),
                "canonical_roots": { "s_in": map(&rg.s_in), "s_out": map(&rg.s_out) },
            })
        })
        .collect();
    let mut rep = Report::new("canon", described, json!({}));
    rep.counts = json!({ "graphs": results.len() });
    rep.results = Value::Array(results);
    Ok(rep)
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}
