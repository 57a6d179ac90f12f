use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use robp_lab::bp::{best_order_size, is_uniform, nfbdd_compile, uniformize, validate_nrobp, Nrobp};
use robp_lab::cnf::{cnf_from_graph, primal_graph, MonotoneCnf};
use robp_lab::cover::{constants, coverlb_holds, extract_cut_cover, min_dis_cover, verify_certificate, DEFAULT_PATH_CAP};
use robp_lab::experiment::{
    gen_bundle, growth_problems, rows_to_csv, run_experiment, run_suite, ExperimentConfig, OrderStrategy, SuiteConfig,
    SUITES,
};
use robp_lab::graph::Graph;
use robp_lab::io::{parse_bp, parse_certificate, parse_cnf, parse_graph, write_bp, write_certificate};
use robp_lab::width::{dmw_exact, mw_exact, DEFAULT_CROSS_EDGE_CAP};

#[derive(Parser)]
#[command(name = "robp-lab", version, about = "Branching programs for monotone 2-CNFs of graphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Variable cap for truth tables, path enumeration and order search.
    #[arg(long, global = true, default_value_t = 20)]
    cap_vars: usize,
    /// Vertex cap for the width subset DP.
    #[arg(long, global = true, default_value_t = 22)]
    cap_subset: usize,
    /// Use exact rational arithmetic where available.
    #[arg(long, global = true)]
    exact: bool,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Output file, or directory for `gen`; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Natural,
    Best,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Write graph, CNF, tree decomposition and metadata for one family member.
    Gen {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: u32,
        /// Accept heights below the family threshold.
        #[arg(long)]
        allow_small_r: bool,
    },
    /// Compile a graph or CNF file into an NFBDD along a variable order.
    Compile {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "natural")]
        order: Order,
    },
    /// Exact matching width of a graph.
    Mw { graph: PathBuf },
    /// Exact distant matching width of a graph.
    Dmw { graph: PathBuf },
    /// Make a branching program uniform.
    Uniformize { bp: PathBuf },
    /// Run verification suites; exits nonzero on any failure.
    Verify {
        /// Suite name or `all`.
        suite: String,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        orders: usize,
    },
    /// Minimum cover of the satisfying assignments by distant independent sets.
    Cover {
        graph: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Extract and check a cut-cover certificate for a compiled program.
    Certify {
        graph: PathBuf,
        /// Uniform program to certify; compiled in natural order when absent.
        #[arg(long)]
        bp: Option<PathBuf>,
        /// Check this certificate instead of extracting one.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Sweep the family over a range of heights and emit CSV.
    Experiment {
        #[arg(long, default_value_t = 6)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        r_min: u32,
        #[arg(long, default_value_t = 5)]
        r_max: u32,
        #[arg(long, value_enum, default_value = "natural")]
        order: Order,
        /// Variable cap for certificate extraction.
        #[arg(long, default_value_t = 16)]
        cap_certificate: usize,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_bp(path: &Path) -> Result<Nrobp> {
    parse_bp(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Accepts either a `p cnf` or a `p edge` file.
fn load_cnf(path: &Path) -> Result<MonotoneCnf> {
    let text = read(path)?;
    let is_cnf = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('c'))
        .is_some_and(|l| l.starts_with("p cnf"));
    let cnf = if is_cnf {
        parse_cnf(&text)
    } else {
        parse_graph(&text).and_then(|g| cnf_from_graph(&g))
    };
    cnf.with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: Cli) -> Result<bool> {
    let c = cli.common;
    let out = c.out.as_deref();
    match cli.cmd {
        Command::Gen { k, r, allow_small_r } => {
            let bundle = gen_bundle(k, r, allow_small_r)?;
            let Some(dir) = out else {
                print!("{}", bundle.meta);
                return Ok(true);
            };
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let stem = format!("family_k{k}_r{r}");
            let mut files = vec![("meta.txt", bundle.meta.clone())];
            if let Some((graph, cnf, td)) = bundle.files {
                files.extend([("gr", graph), ("cnf", cnf), ("td", td)]);
            }
            for (ext, text) in files {
                emit(Some(&dir.join(format!("{stem}.{ext}"))), &text)?;
            }
            print!("{}", bundle.meta);
        }
        Command::Compile { input, order } => {
            let cnf = load_cnf(&input)?;
            let n = cnf.num_vars();
            let order: Vec<usize> = match order {
                Order::Natural => (0..n).collect(),
                Order::Best => best_order_size(&cnf, c.cap_vars)?.order,
                Order::Random => {
                    let mut o: Vec<usize> = (0..n).collect();
                    o.shuffle(&mut ChaCha8Rng::seed_from_u64(c.seed));
                    o
                }
            };
            let y = nfbdd_compile(&cnf, &order)?;
            eprintln!("nodes={} edges={} order={order:?}", y.num_nodes(), y.size());
            emit(out, &write_bp(y.as_nrobp())?)?;
        }
        Command::Mw { graph } => {
            let w = mw_exact(&load_graph(&graph)?, c.cap_subset)?;
            emit(out, &format!("mw={} order={:?}\n", w.value, w.witness_order))?;
        }
        Command::Dmw { graph } => {
            let w = dmw_exact(&load_graph(&graph)?, c.cap_subset, DEFAULT_CROSS_EDGE_CAP)?;
            emit(out, &format!("dmw={} order={:?}\n", w.value, w.witness_order))?;
        }
        Command::Uniformize { bp } => {
            let z = load_bp(&bp)?;
            let u = uniformize(&z)?;
            eprintln!("edges {} -> {} uniform={}", z.size(), u.size(), is_uniform(&u)?);
            emit(out, &write_bp(&u)?)?;
        }
        Command::Verify { suite, max_n, orders } => {
            let cfg = SuiteConfig {
                max_n,
                cap_vars: c.cap_vars,
                cap_subset: c.cap_subset,
                exact: c.exact,
                seed: c.seed,
                orders,
                ..SuiteConfig::default()
            };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut report = String::new();
            let mut ok = true;
            for name in names {
                for outcome in run_suite(name, &cfg)? {
                    ok &= outcome.passed;
                    report.push_str(&format!("{outcome}\n"));
                }
            }
            emit(out, &report)?;
            return Ok(ok);
        }
        Command::Cover { graph, t } => {
            let g = load_graph(&graph)?;
            let cover = min_dis_cover(&g, t)?;
            let holds = coverlb_holds(cover.q, g.max_degree(), t);
            let mut text = format!("q={} t={t} x={} coverlb={holds}\n", cover.q, g.max_degree());
            for b in &cover.cover {
                text.push_str(&format!("B {b:?}\n"));
            }
            emit(out, &text)?;
            return Ok(holds);
        }
        Command::Certify { graph, bp, check } => {
            let g = load_graph(&graph)?;
            let z = match bp {
                Some(path) => load_bp(&path)?,
                None => {
                    let cnf = cnf_from_graph(&g)?;
                    nfbdd_compile(&cnf, &(0..g.n()).collect::<Vec<_>>())?.as_nrobp().clone()
                }
            };
            if !validate_nrobp(&z).is_valid() {
                bail!("branching program is not a valid NROBP");
            }
            if z.num_vars() != g.n() || primal_graph(&cnf_from_graph(&g)?) != g {
                bail!("program has {} variables but the graph has {} vertices", z.num_vars(), g.n());
            }
            let cert = match check {
                Some(path) => parse_certificate(&read(&path)?, g.max_degree())
                    .with_context(|| format!("parsing {}", path.display()))?,
                None => extract_cut_cover(&z, &g, DEFAULT_PATH_CAP)?,
            };
            let report = verify_certificate(&z, &g, &cert, c.cap_vars)?;
            eprintln!(
                "q={} nodes={} bound={} a_x={} passed={}",
                report.q,
                report.nodes,
                report.bound,
                constants(g.max_degree().max(1))?.a_x,
                report.passed()
            );
            emit(out, &write_certificate(&cert))?;
            return Ok(report.passed());
        }
        Command::Experiment {
            k,
            r_min,
            r_max,
            order,
            cap_certificate,
        } => {
            let cfg = ExperimentConfig {
                k,
                r_min,
                r_max,
                order: match order {
                    Order::Natural => OrderStrategy::Natural,
                    Order::Best => OrderStrategy::Best,
                    Order::Random => OrderStrategy::Random,
                },
                cap_vars: c.cap_vars.min(12),
                cap_subset: c.cap_subset,
                cap_certificate,
                seed: c.seed,
            };
            let rows = run_experiment(&cfg)?;
            emit(out, &rows_to_csv(&rows))?;
            let problems = growth_problems(&rows);
            for p in &problems {
                eprintln!("{p}");
            }
            return Ok(problems.is_empty());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
