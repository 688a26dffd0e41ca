use std::io::{self, Read as _, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lapimm::combinat::{enumerate_partitions, inverse_frobenius, Basis, Partition};
use lapimm::graph::{parse_edge_list, spectral_radius_with, wiener_index, write_edge_list, POWER_ITERATION_CAP};
use lapimm::imm::{PermutationCensus, DEFAULT_PERMUTATION_CAP};
use lapimm::orient::{count_b_types_all_capped, count_full_types_capped, DEFAULT_ENUMERATION_CAP};
use lapimm::poset::{build_poset, FamilySpec};
use lapimm::shift::{enumerate_ggs_moves, ggs, ggs_applicable, kelmans};
use lapimm::{Error, ErrorKind, Graph};
use lapimm_cli::config::{parse_bases, parse_families, SuiteConfig};
use lapimm_cli::suite::{render, run_suite, select_checks};
use lapimm_cli::{CliError, CliResult, EXIT_CAPACITY, EXIT_OK, EXIT_VERIFY_FAILED, OUTPUT_DIR_ENV};

/// Laplacian immanantal polynomials, vertex orientations and graph shifts.
#[derive(Parser)]
#[command(name = "lapimm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients b_0..b_n of the polynomial of xI - L for one or all indices.
    Poly {
        /// Edge-list file, or `-` for stdin.
        graph: PathBuf,
        /// Symmetric function basis: s, e, h, p or m.
        #[arg(long, default_value = "s")]
        basis: Basis,
        /// Partition indexing the basis element, e.g. `2,1,1` or `2,1^2`.
        #[arg(long, required_unless_present = "all_lambdas", conflicts_with = "all_lambdas")]
        lambda: Option<Partition>,
        /// One row per partition of n.
        #[arg(long)]
        all_lambdas: bool,
        /// Refuse graphs whose permutation census could exceed this size.
        #[arg(long, default_value_t = DEFAULT_PERMUTATION_CAP)]
        cap: u128,
    },
    /// Orientation counts by type; with `--r`, over all domains of that size.
    Orientations {
        graph: PathBuf,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
    },
    /// Build a shift poset and write it as DOT and CSV.
    Poset {
        /// Total vertex count of the unicyclic family.
        #[arg(required_unless_present = "trees", conflicts_with = "trees", requires = "k")]
        n: Option<usize>,
        /// Cycle length of the unicyclic family.
        k: Option<usize>,
        /// All trees on this many vertices instead.
        #[arg(long)]
        trees: Option<usize>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Largest adjacency eigenvalue.
    Spectral {
        graph: PathBuf,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Sum of distances over unordered vertex pairs.
    Wiener { graph: PathBuf },
    /// Apply one shift to U and K (1-based) and print the resulting edge list.
    Shift {
        graph: PathBuf,
        kind: ShiftKind,
        u: usize,
        k: usize,
    },
    /// List the non-degenerate shift moves of a graph.
    Moves { graph: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum ShiftKind {
    /// Path shift between two vertices; U receives.
    Ggs,
    /// The same move restricted to trees.
    Gts,
    /// Move the neighbours of U outside N[K] over to K.
    Kelmans,
}

#[derive(Args)]
struct VerifyArgs {
    /// `key = value` settings file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    corpus_n: Option<usize>,
    /// Unicyclic families as `n:k` pairs, e.g. `8:4,9:6`.
    #[arg(long)]
    families: Option<String>,
    /// Comma-separated bases, e.g. `s,e,h,p`.
    #[arg(long)]
    bases: Option<String>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    cap: Option<u128>,
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Run only these checks.
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Leave out these checks.
    #[arg(long, value_delimiter = ',')]
    skip: Vec<String>,
    /// Corrupt every Laplacian in one bit, to see the suite fail.
    #[arg(long)]
    inject_fault: bool,
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    let io_err = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(io_err)?
    };
    parse_edge_list(&text).map_err(|source| CliError::Input {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn output_dir(flag: Option<PathBuf>, configured: PathBuf) -> PathBuf {
    flag.or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or(configured)
}

fn csv_text(rows: impl IntoIterator<Item = Vec<String>>) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields"))
}

fn cmd_poly(graph: &Path, basis: Basis, lambda: Option<Partition>, cap: u128) -> CliResult<String> {
    let g = read_graph(graph)?;
    let n = g.n();
    let lambdas = match lambda {
        Some(lam) if lam.n() != n => {
            return Err(Error::SizeMismatch {
                expected: n,
                found: lam.n(),
            }
            .into());
        }
        Some(lam) => vec![lam],
        None => enumerate_partitions(n),
    };
    let census = PermutationCensus::new_capped(&g.laplacian(), cap)?;
    let header = std::iter::once("lambda".to_string())
        .chain((0..=n).map(|r| format!("r{r}")))
        .collect();
    let mut rows = vec![header];
    for lam in lambdas {
        let poly = census.polynomial(&inverse_frobenius(basis, &lam))?;
        rows.push(
            std::iter::once(lam.to_string())
                .chain(poly.coeffs().iter().map(|b| b.to_string()))
                .collect(),
        );
    }
    csv_text(rows)
}

fn cmd_orientations(graph: &Path, r: Option<usize>, cap: u128) -> CliResult<String> {
    let g = read_graph(graph)?;
    let census = match r {
        None => count_full_types_capped(&g, cap)?,
        Some(r) if r > g.n() => {
            return Err(Error::SizeMismatch {
                expected: g.n(),
                found: r,
            }
            .into())
        }
        Some(r) => count_b_types_all_capped(&g, cap)?.swap_remove(r),
    };
    let mut rows = vec![vec!["type".to_string(), "count".to_string()]];
    rows.extend(census.iter().map(|(ty, count)| vec![ty.to_string(), count.to_string()]));
    csv_text(rows)
}

fn cmd_poset(spec: FamilySpec, out_dir: PathBuf) -> CliResult<String> {
    spec.validate()?;
    let h = build_poset(spec)?;
    let stem = match spec {
        FamilySpec::Trees { n } => format!("poset_trees_{n}"),
        FamilySpec::Unicyclic { n, k } => format!("poset_unicyclic_{n}_{k}"),
    };
    std::fs::create_dir_all(&out_dir).map_err(|source| CliError::Io {
        path: out_dir.clone(),
        source,
    })?;
    let dot = out_dir.join(format!("{stem}.dot"));
    let csv = out_dir.join(format!("{stem}.csv"));
    write_file(&dot, &h.to_dot())?;
    write_file(&csv, &h.to_csv())?;
    let (maximal, minimal) = h.extremal_elements();
    let forms = |ids: &[usize]| {
        ids.iter()
            .map(|&i| h.nodes[i].canonical.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    };
    Ok(format!(
        "{spec}: {} nodes, {} covers; maximal {}; minimal {}\nwrote {} and {}\n",
        h.len(),
        h.covers.len(),
        forms(&maximal),
        forms(&minimal),
        dot.display(),
        csv.display()
    ))
}

fn suite_config(args: VerifyArgs) -> CliResult<SuiteConfig> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            SuiteConfig::parse(&text)?
        }
        None => SuiteConfig::default(),
    };
    let flag = |name: &str, e: String| CliError::Usage(format!("--{name}: {e}"));
    if let Some(v) = args.max_n {
        cfg.max_n = v;
    }
    if let Some(v) = args.corpus_n {
        cfg.corpus_n = v;
    }
    if let Some(v) = &args.families {
        cfg.families = parse_families(v).map_err(|e| flag("families", e))?;
    }
    if let Some(v) = &args.bases {
        cfg.bases = parse_bases(v).map_err(|e| flag("bases", e))?;
    }
    if let Some(v) = args.tol {
        cfg.spectral_tol = v;
    }
    if let Some(v) = args.cap {
        cfg.enumeration_cap = v;
    }
    cfg.inject_fault |= args.inject_fault;
    cfg.output_dir = output_dir(args.out_dir, cfg.output_dir);
    cfg.validate()?;
    Ok(cfg)
}

fn cmd_verify(args: VerifyArgs) -> CliResult<i32> {
    let checks = select_checks(&args.only, &args.skip)?;
    let cfg = suite_config(args)?;
    let reports = run_suite(&cfg, &checks)?;
    for r in &reports {
        eprintln!("{} took {:.2?}", r.id, r.wall);
    }
    let text = render(&reports);
    print!("{text}");
    std::fs::create_dir_all(&cfg.output_dir).map_err(|source| CliError::Io {
        path: cfg.output_dir.clone(),
        source,
    })?;
    write_file(&cfg.output_dir.join("verify_report.txt"), &text)?;
    let capacity = reports
        .iter()
        .any(|r| matches!(&r.error, Some(e) if e.exit_code() == EXIT_CAPACITY));
    Ok(if capacity {
        EXIT_CAPACITY
    } else if reports.iter().all(|r| r.passed()) {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn cmd_shift(graph: &Path, kind: ShiftKind, u: usize, k: usize) -> CliResult<String> {
    let g = read_graph(graph)?;
    let label = |v: usize| {
        if (1..=g.n()).contains(&v) {
            Ok(v - 1)
        } else {
            Err(Error::InvalidVertex(v))
        }
    };
    let (x, y) = (label(u)?, label(k)?);
    let (comment, result) = match kind {
        ShiftKind::Kelmans => (format!("# kelmans {u} {k}"), kelmans(&g, x, y)?),
        ShiftKind::Ggs | ShiftKind::Gts => {
            if matches!(kind, ShiftKind::Gts) && !g.is_tree() {
                return Err(CliError::Usage("gts needs a tree".into()));
            }
            let mv =
                ggs_applicable(&g, x, y).ok_or_else(|| Error::InvalidMove(format!("no shift between {u} and {k}")))?;
            (format!("# move {mv}"), ggs(&g, &mv)?)
        }
    };
    Ok(format!("{comment}\n{}", write_edge_list(&result)))
}

fn run(cli: Cli) -> CliResult<i32> {
    let out = match cli.command {
        Command::Poly {
            graph,
            basis,
            lambda,
            all_lambdas: _,
            cap,
        } => cmd_poly(&graph, basis, lambda, cap)?,
        Command::Orientations { graph, r, cap } => cmd_orientations(&graph, r, cap)?,
        Command::Poset { n, k, trees, out_dir } => {
            let spec = match (trees, n, k) {
                (Some(n), _, _) => FamilySpec::Trees { n },
                (None, Some(n), Some(k)) => FamilySpec::Unicyclic { n, k },
                _ => return Err(CliError::Usage("give N K or --trees N".into())),
            };
            cmd_poset(spec, output_dir(out_dir, PathBuf::from(".")))?
        }
        Command::Verify(args) => return cmd_verify(args),
        Command::Spectral { graph, tol } => {
            if tol.is_nan() || tol <= 0.0 {
                return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
            }
            let g = read_graph(&graph)?;
            format!("{:.12}\n", spectral_radius_with(&g, tol, POWER_ITERATION_CAP)?)
        }
        Command::Wiener { graph } => {
            let g = read_graph(&graph)?;
            format!(
                "# sum of distances over unordered vertex pairs\n{}\n",
                wiener_index(&g)?
            )
        }
        Command::Shift { graph, kind, u, k } => cmd_shift(&graph, kind, u, k)?,
        Command::Moves { graph } => {
            let g = read_graph(&graph)?;
            enumerate_ggs_moves(&g).iter().map(|mv| format!("{mv}\n")).collect()
        }
    };
    io::stdout().write_all(out.as_bytes()).map_err(|source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })?;
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("lapimm: {e}");
            if let CliError::Core(inner) | CliError::Input { source: inner, .. } = &e {
                if inner.kind() == ErrorKind::Numeric {
                    eprintln!("lapimm: try a looser --tol");
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
