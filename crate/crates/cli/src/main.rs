use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use satcone::branching::{Brancher, CharacterCache, CACHE_ENV};
use satcone::embedding::{builtin_pair, EmbeddedPair, CATALOG};
use satcone::pipeline::{
    check_saturation, compute_cone, render_cone_text, render_inequalities_text, render_saturation_text,
    render_weight_pair, ConeReport, Coords, Options, Verdict,
};
use satcone::polycone::format_matrix;
use serde::Serialize;

const EXIT_INCOMPLETE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "satcone", version, about = "Branching cones, Hilbert bases and saturation checks for embedded group pairs")]
struct Cli {
    /// Seed for the random Levi elements of the movability test.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Run ray verification and Hilbert bases for long-running pairs
    /// (also enabled by SATCONE_ALLOW_LONG=1).
    #[arg(long, global = true)]
    allow_long: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = CoordsArg::Fw)]
    coords: CoordsArg,
    /// Also write the main integer matrix in `rows cols` text format.
    #[arg(long, global = true, value_name = "FILE")]
    export_matrix: Option<PathBuf>,
    /// Directory for cached characters.
    #[arg(long, global = true, value_name = "PATH", env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CoordsArg {
    Fw,
    Eps,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the catalog of pairs.
    Pairs,
    /// Inequalities, rays and ray verification.
    Cone { pair: String },
    /// Irredundant inequalities `c·(ν, ν̂) ≤ 0`.
    Ineqs {
        pair: String,
        /// Also list redundant rows.
        #[arg(long)]
        redundant: bool,
    },
    /// Primitive generators of the extreme rays.
    Rays { pair: String },
    /// Hilbert basis of the cone in the lattice.
    Hilbert {
        pair: String,
        #[command(flatten)]
        lattice: LatticeArgs,
    },
    /// Saturation verdict.
    Check {
        pair: String,
        #[command(flatten)]
        lattice: LatticeArgs,
    },
    /// Multiplicity of `V(ν)*` in `V(ν̂)`, weights as comma-separated fundamental-weight coordinates.
    Branch {
        pair: String,
        #[arg(allow_hyphen_values = true)]
        nu: String,
        #[arg(allow_hyphen_values = true)]
        nu_hat: String,
    },
}

#[derive(clap::Args, Debug)]
struct LatticeArgs {
    /// Restrict the lattice by `c·x ≡ 0 mod m`, given as `c1,c2,…:m`.
    #[arg(long, value_name = "COEFFS:MOD")]
    congruence: Option<String>,
}

fn parse_vector(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().with_context(|| format!("bad integer {t:?} in {s:?}")))
        .collect()
}

impl Cli {
    fn coords(&self) -> Coords {
        match self.coords {
            CoordsArg::Fw => Coords::Fundamental,
            CoordsArg::Eps => Coords::Epsilon,
        }
    }

    fn options(&self, pair: &EmbeddedPair, lattice: Option<&LatticeArgs>) -> Result<Options> {
        let cache = match &self.cache_dir {
            Some(dir) => CharacterCache::on_disk(dir.clone()),
            None => CharacterCache::in_memory(),
        };
        let mut opts = Options { seed: self.seed, cache: Arc::new(cache), ..Options::default() };
        opts.allow_long |= self.allow_long;
        if let Some(spec) = lattice.and_then(|l| l.congruence.as_deref()) {
            let (coeffs, modulus) = spec.split_once(':').context("congruence must look like c1,c2,…:m")?;
            let coeffs = parse_vector(coeffs)?;
            let dim = pair.g.rank() + pair.ghat.rank();
            if coeffs.len() != dim {
                bail!("congruence needs {dim} coefficients, got {}", coeffs.len());
            }
            let modulus: i64 = modulus.trim().parse().context("bad modulus")?;
            if modulus < 1 {
                bail!("modulus must be positive");
            }
            opts.lattice = Some(pair.lr_lattice().with_congruence(&coeffs, modulus));
        }
        Ok(opts)
    }

    fn export(&self, rows: &[Vec<i64>], cols: usize) -> Result<()> {
        if let Some(path) = &self.export_matrix {
            std::fs::write(path, format_matrix(rows, cols)).with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }

    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        match self.format {
            Format::Text => print!("{}", text()),
            Format::Structured => println!("{}", serde_json::to_string_pretty(value)?),
        }
        Ok(())
    }
}

fn cone_status(c: &ConeReport) -> u8 {
    if c.incomplete.is_some() {
        EXIT_INCOMPLETE
    } else {
        0
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let dim = |p: &EmbeddedPair| p.g.rank() + p.ghat.rank();
    match &cli.command {
        Command::Pairs => {
            cli.emit(&CATALOG, || CATALOG.iter().map(|n| format!("{n}\n")).collect())?;
            Ok(0)
        }
        Command::Cone { pair } => {
            let p = builtin_pair(pair)?;
            let c = compute_cone(&p, &cli.options(&p, None)?)?;
            cli.export(&c.inequality_rows(), dim(&p))?;
            cli.emit(&c, || render_cone_text(&p, &c, cli.coords()))?;
            Ok(cone_status(&c))
        }
        Command::Ineqs { pair, redundant } => {
            let p = builtin_pair(pair)?;
            let c = compute_cone(&p, &cli.options(&p, None)?)?;
            let mut rows = c.inequalities.clone();
            if *redundant {
                rows.extend(c.redundant.iter().cloned());
            }
            cli.export(&rows.iter().map(|r| r.coeffs.clone()).collect::<Vec<_>>(), dim(&p))?;
            cli.emit(&rows, || render_inequalities_text(&c, *redundant))?;
            Ok(cone_status(&c))
        }
        Command::Rays { pair } => {
            let p = builtin_pair(pair)?;
            let c = compute_cone(&p, &cli.options(&p, None)?)?;
            cli.export(&c.ray_vectors(), dim(&p))?;
            cli.emit(&c.rays, || {
                c.rays.iter().map(|r| format!("{}\n", render_weight_pair(&p, &r.ray, cli.coords()))).collect()
            })?;
            Ok(cone_status(&c))
        }
        Command::Hilbert { pair, lattice } | Command::Check { pair, lattice } => {
            let p = builtin_pair(pair)?;
            let r = check_saturation(&p, &cli.options(&p, Some(lattice))?)?;
            cli.export(&r.hilbert_basis.iter().map(|e| e.element.clone()).collect::<Vec<_>>(), dim(&p))?;
            if matches!(cli.command, Command::Hilbert { .. }) {
                cli.emit(&r.hilbert_basis, || {
                    r.hilbert_basis
                        .iter()
                        .map(|e| format!("{}\n", render_weight_pair(&p, &e.element, cli.coords())))
                        .collect()
                })?;
            } else {
                cli.emit(&r, || render_saturation_text(&p, &r, cli.coords()))?;
            }
            Ok(match r.verdict {
                Verdict::Saturated => 0,
                Verdict::Incomplete(_) => EXIT_INCOMPLETE,
                Verdict::Counterexample(_) => 1,
            })
        }
        Command::Branch { pair, nu, nu_hat } => {
            let p = builtin_pair(pair)?;
            let (nu, nu_hat) = (parse_vector(nu)?, parse_vector(nu_hat)?);
            let opts = cli.options(&p, None)?;
            let m = Brancher::new(&p, opts.cache).multiplicity(&nu, &nu_hat)?;
            #[derive(Serialize)]
            struct BranchResult<'a> {
                pair: &'a str,
                nu: &'a [i64],
                nu_hat: &'a [i64],
                multiplicity: u64,
            }
            let res = BranchResult { pair: p.name(), nu: &nu, nu_hat: &nu_hat, multiplicity: m };
            cli.emit(&res, || format!("{m}\n"))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
