use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gammans::assembly::{assembly_verdict, parse_pattern, VerdictOptions, DEFAULT_SUBGLUING_BUDGET};
use gammans::gamma::{
    cusp_pair_domain, first_nonzero_cusp_pair, gamma_cohomology, hairy_dim, schur_dim, symplectic_detection,
    theorem_2mn_summand, w_module,
};
use gammans::modular::modular_dims;
use gammans::rep_ring::lr_coefficient;
use gammans::{selfcheck, BigNat, Module, Partition};

#[derive(Parser)]
#[command(name = "gammans", version, about = "Cohomology of the groups Gamma(n,s) as symmetric-group modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// H^i(Gamma(n,s)) as an S_s-module, for n <= 2
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print one of the reference tables (1, 2: rank one; 3, 4: rank two)
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Induction product of P_lambda with the trivial module P_(k)
    Pieri {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        k: usize,
    },
    /// Littlewood-Richardson coefficient, or the whole product without --nu
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: Option<String>,
    },
    /// Dimension of the irreducible P_lambda
    Dim {
        #[arg(long)]
        lambda: String,
    },
    /// Dimensions of modular forms and cusp forms of weight k
    Modular {
        #[arg(long)]
        k: usize,
    },
    /// The S_q-module W_q, layer by layer
    Wmod {
        #[arg(long)]
        q: usize,
    },
    /// Multiplicity of P_(s-2mn, n^2m) in H^2mn(Gamma(n,s))
    #[command(name = "detect-2mn")]
    Detect2mn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
    },
    /// Domain of the cusp-form pair assembly map for Gamma(2,2m)
    CuspPairs {
        #[arg(long, conflicts_with = "limit", required_unless_present = "limit")]
        m: Option<usize>,
        /// Report the first m up to this bound with a nonzero domain
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Hairy graph homology H_k for rank n, s hairs and dim V = N
    Hairy {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        k: usize,
        #[arg(long = "dim-v")]
        dim_v: usize,
    },
    /// Dimension of the Schur functor S_lambda applied to a space of dimension n
    SchurDim {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Degree and weight of the detected symplectic-derivation module
    SpDetect {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
    },
    /// Vanishing analysis of assembly maps
    Assembly {
        #[command(subcommand)]
        action: AssemblyAction,
    },
    /// Run the oracle and invariant checks
    Selfcheck,
}

#[derive(Subcommand)]
enum AssemblyAction {
    /// Check a pattern file and print its signature and verdict
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SUBGLUING_BUDGET)]
        budget: usize,
    },
}

type Outcome = Result<(String, bool), String>;

fn partition(text: &str) -> Result<Partition, String> {
    text.parse().map_err(|e: gammans::Error| format!("{text}: {e}"))
}

fn domain<T>(r: gammans::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn tsv_header() -> String {
    "s\ti\tmodule\tdim\n".to_string()
}

fn run(command: Command) -> Outcome {
    let mut out = String::new();
    let mut ok = true;
    match command {
        Command::Gamma { n, s, i, format } => {
            let module: Module = domain(gamma_cohomology(n, s, i))?;
            match format {
                Format::Text => writeln!(out, "{module}  dim={}", module.dimension()).unwrap(),
                Format::Tsv => {
                    out.push_str(&tsv_header());
                    writeln!(out, "{s}\t{i}\t{module}\t{}", module.dimension()).unwrap();
                }
            }
        }
        Command::Tables { which, format } => out = domain(tables(which, format))?,
        Command::Pieri { lambda, k } => {
            let lambda = partition(&lambda)?;
            let product = Module::irreducible(lambda).induction_product(&Module::trivial(k));
            writeln!(out, "{product}").unwrap();
        }
        Command::Lr { lambda, mu, nu } => {
            let (lambda, mu) = (partition(&lambda)?, partition(&mu)?);
            match nu {
                Some(nu) => {
                    let c: BigNat = lr_coefficient(&lambda, &mu, &partition(&nu)?);
                    writeln!(out, "{c}").unwrap();
                }
                None => {
                    let product = Module::irreducible(lambda).induction_product(&Module::irreducible(mu));
                    writeln!(out, "{product}").unwrap();
                }
            }
        }
        Command::Dim { lambda } => {
            let dim: BigNat = partition(&lambda)?.dim_irreducible();
            writeln!(out, "{dim}").unwrap();
        }
        Command::Modular { k } => {
            let dims = modular_dims(k);
            writeln!(out, "M={} S={}", dims.dim_full, dims.dim_cusp).unwrap();
        }
        Command::Wmod { q } => {
            let w = domain(w_module::<BigNat>(q))?;
            writeln!(out, "W_{q} = {}", w.flattened).unwrap();
            for layer in &w.layers {
                let space = match layer.kind {
                    gammans::modular::FormKind::Cusp => "S",
                    gammans::modular::FormKind::Full => "M",
                };
                writeln!(
                    out,
                    "  i={}  {space}_{}  dim={}  {}",
                    layer.index, layer.weight, layer.form_dim, layer.partition
                )
                .unwrap();
            }
        }
        Command::Detect2mn { n, m, s } => {
            let c: BigNat = domain(theorem_2mn_summand(n, m, s))?;
            writeln!(out, "{c}").unwrap();
        }
        Command::CuspPairs { m, limit } => match (m, limit) {
            (Some(m), _) => {
                let d = domain(cusp_pair_domain::<BigNat>(m))?;
                writeln!(out, "target H_{}(Out(F_{}))", d.target_degree, d.target_rank).unwrap();
                for layer in &d.layers {
                    let space = match layer.kind {
                        gammans::modular::FormKind::Cusp => "S",
                        gammans::modular::FormKind::Full => "M",
                    };
                    writeln!(
                        out,
                        "  i={}  {space}_{}  dim={}  wedge2={}",
                        layer.index, layer.weight, layer.form_dim, layer.wedge_dim
                    )
                    .unwrap();
                }
                writeln!(out, "total={}", d.total).unwrap();
            }
            (None, Some(limit)) => match first_nonzero_cusp_pair(limit) {
                Some(m) => writeln!(out, "first nonzero m={m}").unwrap(),
                None => writeln!(out, "none up to m={limit}").unwrap(),
            },
            (None, None) => unreachable!("clap requires one of --m and --limit"),
        },
        Command::Hairy { n, s, k, dim_v } => {
            let h = domain(hairy_dim::<BigNat>(n, s, k, dim_v))?;
            match h.cohomological_degree {
                Some(d) => writeln!(out, "from H^{d}(Gamma({n},{s}))").unwrap(),
                None => writeln!(out, "beyond the top degree").unwrap(),
            }
            let terms: Vec<String> = h
                .terms
                .iter()
                .map(|(w, c)| if *c == BigNat::from(1u32) { w.to_string() } else { format!("{c}*{w}") })
                .collect();
            let terms = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            writeln!(out, "{terms}  dim={}", h.dimension).unwrap();
        }
        Command::SchurDim { lambda, n } => {
            let dim: BigNat = schur_dim(&partition(&lambda)?, n);
            writeln!(out, "{dim}").unwrap();
        }
        Command::SpDetect { n, m, d } => {
            let (degree, weight) = domain(symplectic_detection(n, m, d))?;
            writeln!(out, "degree={degree} weight={weight}").unwrap();
        }
        Command::Assembly {
            action: AssemblyAction::Check { file, budget },
        } => {
            let text = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let pattern = domain(parse_pattern(&text))?;
            let verdict = domain(assembly_verdict(&pattern, VerdictOptions { subgluing_budget: budget }))?;
            writeln!(out, "signature: {}", verdict.signature).unwrap();
            write!(out, "{verdict}").unwrap();
        }
        Command::Selfcheck => {
            let report = selfcheck::run();
            writeln!(out, "{report}").unwrap();
            ok = report.failed() == 0;
        }
    }
    Ok((out, ok))
}

/// `(rank, s range, i range for each s)` of each table.
fn table_cells(which: u8) -> (usize, Vec<(usize, Vec<usize>)>) {
    if which <= 2 {
        let rows = (0..=8).map(|s: usize| (s, (0..=s.saturating_sub(1)).collect())).collect();
        (1, rows)
    } else {
        let rows = (0..=10).map(|s: usize| (s, (0..=(s + 1).min(10)).collect())).collect();
        (2, rows)
    }
}

fn tables(which: u8, format: Format) -> gammans::Result<String> {
    let (rank, rows) = table_cells(which);
    let mut out = String::new();
    if format == Format::Tsv {
        out.push_str(&tsv_header());
        for (s, degrees) in &rows {
            for &i in degrees {
                let m: Module = gamma_cohomology(rank, *s, i)?;
                writeln!(out, "{s}\t{i}\t{m}\t{}", m.dimension()).unwrap();
            }
        }
        return Ok(out);
    }
    let modules = which % 2 == 1;
    let what = if modules { "H^i" } else { "dim H^i" };
    let top = rows.iter().map(|(_, d)| d.len()).max().unwrap_or(0);
    writeln!(out, "{what}(Gamma({rank},s))").unwrap();
    if modules {
        for (s, degrees) in &rows {
            writeln!(out, "Gamma({rank},{s})").unwrap();
            for &i in degrees {
                let m: Module = gamma_cohomology(rank, *s, i)?;
                writeln!(out, "  H^{i:<3}{m}").unwrap();
            }
        }
    } else {
        let label = format!("Gamma({rank},10)").len();
        let mut grid: Vec<Vec<String>> = Vec::new();
        for (s, degrees) in &rows {
            let mut cells = vec![format!("Gamma({rank},{s})")];
            for &i in degrees {
                let m: Module = gamma_cohomology(rank, *s, i)?;
                cells.push(m.dimension().to_string());
            }
            grid.push(cells);
        }
        let width = grid.iter().flat_map(|r| r.iter().skip(1)).map(String::len).max().unwrap_or(1).max(4);
        let mut header = format!("{:label$}", "");
        for i in 0..top {
            write!(header, " {:>width$}", format!("H^{i}")).unwrap();
        }
        writeln!(out, "{header}").unwrap();
        for row in grid {
            let mut line = format!("{:label$}", row[0]);
            for cell in &row[1..] {
                write!(line, " {cell:>width$}").unwrap();
            }
            writeln!(out, "{line}").unwrap();
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
