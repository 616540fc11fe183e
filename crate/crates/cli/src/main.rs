use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cluster_wb_core::dencheck::{
    check_t_denominator, verify_lcm, verify_main2, verify_main3_finite, verify_oldc3, verify_t_all, Instance, Report,
    TiltingChoice,
};
use cluster_wb_core::repcat::{Inventory, DEFAULT_INVENTORY_DEPTH};
use cluster_wb_core::seeds::{enumerate_with, is_finite_type, EnumerateOptions};
use cluster_wb_core::{golden, Budget, Error, ExchangeMatrix, LaurentPoly, Seed};

const A3_CYCLIC: &str = include_str!("../../../quivers/a3cyclic.quiver");
const A2TILDE_Q: &str = include_str!("../../../quivers/a2tilde-q.quiver");
const A2TILDE_GAMMA: &str = include_str!("../../../quivers/a2tilde-gamma.quiver");
const GOLDEN_A3: &str = include_str!("../../../golden/a3cyclic.txt");
const GOLDEN_A2TILDE: &str = include_str!("../../../golden/a2tilde-gamma.txt");

const VERIFY_DEPTH: usize = 5;

/// Cluster variables, denominators and the cluster category of small quivers.
#[derive(Parser, Debug)]
#[command(name = "cluster-wb", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Quiver file: vertex count, then `i j m` lines.
    #[arg(short = 'q', long = "quiver")]
    quiver: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Mutate the initial seed along a word.
    Mutate {
        #[command(flatten)]
        common: Common,
        /// Comma-separated 1-based vertices, e.g. `2,1,3`.
        #[arg(short = 'w', long = "word", default_value = "")]
        word: String,
    },
    /// Explore the exchange graph and list cluster variables with denominators.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "closure")]
        depth: Option<usize>,
        /// Run to closure (finite type only).
        #[arg(long)]
        closure: bool,
        /// Compare the variables against a golden file.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Mutate each frontier in parallel.
        #[arg(long)]
        parallel: bool,
    },
    /// Check one of the denominator statements.
    Verify {
        check: Check,
        #[command(flatten)]
        common: Common,
        /// Word from the input seed selecting the tilting seed.
        #[arg(long = "tc-word", default_value = "")]
        tc_word: String,
        /// Enumeration depth for infinite type.
        #[arg(long)]
        depth: Option<usize>,
        /// Transjective depth of the object inventory (grown on demand if unset).
        #[arg(long = "inventory-depth")]
        inventory_depth: Option<usize>,
    },
    /// Reproduce one of the built-in worked examples.
    Example {
        which: ExampleName,
        /// Print the numerator of the transjective variable with denominator y1 y2 y3^2.
        #[arg(long = "emit-f")]
        emit_f: bool,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Dump the exceptional objects of an acyclic quiver.
    Inventory {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = DEFAULT_INVENTORY_DEPTH)]
        depth: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Check {
    Main2,
    Main3,
    TAll,
    Oldc3,
    Lcm,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ExampleName {
    A3,
    A2tilde,
}

/// Outcome of a command: text to print and whether expectations held.
struct Output {
    text: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("CLUSTER_WB_THREADS") {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => {
                // only fails if a pool already exists, which cannot happen here
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: CLUSTER_WB_THREADS must be a positive integer, got {v:?}");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<Output, Error> {
    match cmd {
        Command::Mutate { common, word } => cmd_mutate(&common, &word),
        Command::Enumerate { common, depth, closure, golden, parallel } => {
            cmd_enumerate(&common, depth, closure, golden.as_deref(), parallel)
        }
        Command::Verify { check, common, tc_word, depth, inventory_depth } => {
            cmd_verify(check, &common, &tc_word, depth, inventory_depth)
        }
        Command::Example { which, emit_f, depth, json } => cmd_example(which, emit_f, depth, json),
        Command::Inventory { common, depth } => cmd_inventory(&common, depth),
    }
}

fn load_quiver(path: &Path) -> Result<ExchangeMatrix, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", path.display()) })?;
    ExchangeMatrix::parse(&text)
}

/// `"2,1,3"` to the 0-based word `[1, 0, 2]`.
fn parse_word(text: &str, n: usize) -> Result<Vec<usize>, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<usize>() {
                Ok(k) if (1..=n).contains(&k) => Ok(k - 1),
                Ok(k) => Err(Error::VertexOutOfRange { index: k, n }),
                Err(_) => Err(Error::Expr(format!("bad vertex {t:?} in word"))),
            }
        })
        .collect()
}

fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        "-".into()
    } else {
        word.iter().map(|k| (k + 1).to_string()).collect::<Vec<_>>().join(",")
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialise");
    s.push('\n');
    s
}

fn cmd_mutate(common: &Common, word: &str) -> Result<Output, Error> {
    let m = load_quiver(&common.quiver)?;
    let w = parse_word(word, m.n())?;
    let seed = Seed::initial(m).mutate_word(&w)?;
    let text = if common.json {
        to_json(&seed.to_json())
    } else {
        let mut s = format!("word {}\ncluster\n", word_string(&seed.word));
        for (i, x) in seed.cluster.iter().enumerate() {
            let _ = writeln!(s, "  x{} = {x}", i + 1);
        }
        let _ = writeln!(s, "quiver {}", seed.matrix);
        s
    };
    Ok(Output { text, passed: true })
}

fn cmd_enumerate(
    common: &Common,
    depth: Option<usize>,
    closure: bool,
    golden_path: Option<&Path>,
    parallel: bool,
) -> Result<Output, Error> {
    let m = load_quiver(&common.quiver)?;
    let n = m.n();
    let budget = if closure { Budget::closure() } else { Budget::Depth(depth.unwrap_or(Budget::DEFAULT_DEPTH)) };
    let en = enumerate_with(&Seed::initial(m), budget, &EnumerateOptions { parallel })?;
    let report = en.report();

    let mut passed = true;
    let mut diff = None;
    if let Some(path) = golden_path {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", path.display()) })?;
        let expected = golden::parse(&text, n)?;
        let found: Vec<LaurentPoly> = en.variables.iter().map(|v| v.poly.clone()).collect();
        // a closed enumeration must match exactly; a bounded one must contain the set
        let d = golden::compare(&expected, &found, en.closed);
        passed = d.is_empty();
        diff = Some(d);
    }
    let text = if common.json {
        to_json(&json!({"enumeration": report, "golden": diff}))
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "clusters {}", report.clusters);
        let _ = writeln!(s, "edges {}", report.edges);
        let _ = writeln!(s, "closed {}", report.closed);
        let _ = writeln!(s, "variables {}", report.variables.len());
        for v in &report.variables {
            let dvec: Vec<String> = v.dvec.iter().map(ToString::to_string).collect();
            let _ =
                writeln!(s, "  {}    d = ({})    witness {}", v.variable, dvec.join(","), witness_string(&v.witness));
        }
        if let Some(d) = &diff {
            write_golden(&mut s, d);
        }
        s
    };
    Ok(Output { text, passed })
}

fn witness_string(w: &[usize]) -> String {
    if w.is_empty() {
        "-".into()
    } else {
        w.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

fn write_golden(s: &mut String, d: &golden::GoldenDiff) {
    if d.is_empty() {
        let _ = writeln!(s, "golden PASS");
        return;
    }
    let _ = writeln!(s, "golden FAIL");
    for m in &d.missing {
        let _ = writeln!(s, "  missing    {m}");
    }
    for u in &d.unexpected {
        let _ = writeln!(s, "  unexpected {u}");
    }
}

fn cmd_verify(
    check: Check,
    common: &Common,
    tc_word: &str,
    depth: Option<usize>,
    inventory_depth: Option<usize>,
) -> Result<Output, Error> {
    let m = load_quiver(&common.quiver)?;
    let tc_input = parse_word(tc_word, m.n())?;
    let budget = if is_finite_type(&m) {
        Budget::closure()
    } else {
        if let Check::Main3 = check {
            return Err(Error::Unsupported("the exhaustive check needs a quiver of finite type".into()));
        }
        Budget::Depth(depth.unwrap_or(VERIFY_DEPTH))
    };
    let inst = Instance::new(&m, budget, inventory_depth)?;
    let tc = || TiltingChoice::new(&inst, &inst.word_from_input(&tc_input));
    let report = match check {
        Check::Main2 => verify_main2(&inst, &tc()?)?,
        Check::Main3 => verify_main3_finite(&inst)?,
        Check::TAll => verify_t_all(&inst, &tc()?)?,
        Check::Oldc3 => verify_oldc3(&inst)?,
        Check::Lcm => verify_lcm(&inst, &tc()?)?,
    };
    let text = if common.json { to_json(&report) } else { report_text(&report) };
    Ok(Output { text, passed: report.passed })
}

fn report_text(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "theorem {}", r.theorem);
    let _ = writeln!(s, "instance {}", r.instance);
    match r.depth {
        Some(d) => {
            let _ = writeln!(s, "depth {d} (bounded)");
        }
        None => {
            let _ = writeln!(s, "depth closure");
        }
    }
    for (k, v) in &r.verdicts {
        let _ = writeln!(s, "{k} = {v}");
    }
    for w in &r.witnesses {
        let _ = writeln!(s, "witness {w}");
    }
    let _ = writeln!(s, "{}", if r.passed { "PASS" } else { "FAIL" });
    s
}

fn cmd_example(which: ExampleName, emit_f: bool, depth: Option<usize>, json_out: bool) -> Result<Output, Error> {
    match which {
        ExampleName::A3 => {
            let m = ExchangeMatrix::parse(A3_CYCLIC)?;
            let en = enumerate_with(&Seed::initial(m.clone()), Budget::closure(), &EnumerateOptions::default())?;
            let found: Vec<LaurentPoly> = en.variables.iter().map(|v| v.poly.clone()).collect();
            let diff = golden::compare(&golden::parse(GOLDEN_A3, 3)?, &found, true);
            let inst = Instance::new(&m, Budget::closure(), None)?;
            let main3 = verify_main3_finite(&inst)?;
            let passed = diff.is_empty() && main3.passed;
            let text = if json_out {
                to_json(
                    &json!({"example": "a3", "golden": diff, "clusters": en.seeds.len(), "main3": main3, "passed": passed}),
                )
            } else {
                let mut s = format!("clusters {}\nvariables {}\n", en.seeds.len(), found.len());
                write_golden(&mut s, &diff);
                let _ = writeln!(s, "denominators {} verdicts, all hold: {}", main3.verdicts["verdicts"], main3.passed);
                let _ = writeln!(s, "{}", if passed { "PASS" } else { "FAIL" });
                s
            };
            Ok(Output { text, passed })
        }
        ExampleName::A2tilde => example_a2tilde(emit_f, depth.unwrap_or(VERIFY_DEPTH), json_out),
    }
}

fn example_a2tilde(emit_f: bool, depth: usize, json_out: bool) -> Result<Output, Error> {
    let gamma = ExchangeMatrix::parse(A2TILDE_GAMMA)?;
    let q = ExchangeMatrix::parse(A2TILDE_Q)?;
    let en = enumerate_with(&Seed::initial(gamma.clone()), Budget::Depth(depth), &EnumerateOptions::default())?;
    let found: Vec<LaurentPoly> = en.variables.iter().map(|v| v.poly.clone()).collect();
    let diff = golden::compare(&golden::parse(GOLDEN_A2TILDE, 3)?, &found, false);

    // the seed with the doubled arrow is one mutation (at 2) from the acyclic quiver
    let inst = Instance::new(&q, Budget::Depth(depth), None)?;
    let tc = TiltingChoice::new(&inst, &[1])?;
    if tc.seed.matrix != gamma {
        return Err(Error::Invariant(format!("mutation at 2 gave {}", tc.seed.matrix)));
    }
    let inv = &inst.inventory;
    let m = inv.by_dim(&[1, 0, 1]).ok_or_else(|| Error::Unresolved(vec![1, 0, 1]))?;
    let end_m = inv.hom_c(m, m)?;
    let x_m = LaurentPoly::parse("((y1+y3)^2+y2)/(y1*y2*y3)", 3)?;
    let ys = inst.express_in(&tc.seed)?;
    let verdict = match ys.iter().position(|y| *y == x_m) {
        Some(i) => Some(check_t_denominator(inv, &tc, &ys[i], inst.objects[i])?),
        None => None,
    };
    let counterexample = verdict.as_ref().is_some_and(|v| !v.holds && v.actual.0[1] == 1 && v.expected.0[1] == 2);
    let passed = diff.is_empty() && end_m == 2 && counterexample;

    let f = if emit_f {
        en.variables.iter().find(|v| v.dvec.0 == [1, 1, 2]).map(|v| v.poly.reduced_numerator()).transpose()?
    } else {
        None
    };
    let text = if json_out {
        to_json(&json!({
            "example": "a2tilde",
            "depth": depth,
            "golden": diff,
            "tilting": tc.labels(inv),
            "end_dim_M": end_m,
            "verdict_X_M": verdict,
            "f": f.as_ref().map(ToString::to_string),
            "passed": passed,
        }))
    } else {
        let mut s = format!("variables {} (depth {depth})\n", found.len());
        write_golden(&mut s, &diff);
        let _ = writeln!(s, "T = {}", tc.labels(inv).join(" + "));
        let _ = writeln!(s, "dim End_C(M) = {end_m}");
        match &verdict {
            Some(v) => {
                let _ = writeln!(s, "X_M = {x_m}: T-denominator {}", if v.holds { "holds" } else { "fails" });
                for d in &v.diagnostics {
                    let _ = writeln!(s, "  {d}");
                }
            }
            None => {
                let _ = writeln!(s, "X_M not reached within depth {depth}");
            }
        }
        if emit_f {
            match &f {
                Some(f) => {
                    let _ = writeln!(s, "f = {f}");
                }
                None => {
                    let _ = writeln!(s, "f: variable with denominator y1*y2*y3^2 not reached within depth {depth}");
                }
            }
        }
        let _ = writeln!(s, "{}", if passed { "PASS" } else { "FAIL" });
        s
    };
    Ok(Output { text, passed })
}

fn cmd_inventory(common: &Common, depth: usize) -> Result<Output, Error> {
    let m = load_quiver(&common.quiver)?;
    if !m.is_acyclic() {
        return Err(Error::Unsupported("the inventory is built over an acyclic quiver".into()));
    }
    let inv = Inventory::build(&m, depth)?;
    let dump = inv.dump();
    let text = if common.json {
        to_json(&dump)
    } else {
        let mut s = format!("{} depth {}\n", dump.quiver, dump.depth);
        for o in &dump.objects {
            let _ = writeln!(s, "  {:>3}  {:<14} {}", o.id, o.label, o.coords);
        }
        for (i, t) in dump.tubes.iter().enumerate() {
            let qs: Vec<String> = t.quasisimples.iter().map(|&id| inv.get(id).label()).collect();
            let _ = writeln!(s, "tube {i}: rank {}, quasisimples {}", t.rank, qs.join(" "));
        }
        s
    };
    Ok(Output { text, passed: true })
}
