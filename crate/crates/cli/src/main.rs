use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod inputs;

use commands::{Outcome, Status};

#[derive(Parser, Debug)]
#[command(name = "bfa", version, about = "Weighted Fourier algebras on compact groups")]
struct Cli {
    /// Emit the JSON report instead of the human summary
    #[arg(long, global = true)]
    json: bool,

    /// Write the JSON report to this file
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct WeightArgs {
    /// Family name (omega_a, sigma_a, rho_b, ...) or a descriptor file
    #[arg(long, default_value = "trivial")]
    weight: String,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    /// Apply the family factorwise on a product group
    #[arg(long)]
    cross: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a tensor product of two irreps
    Fuse {
        #[arg(long)]
        group: String,
        /// First irrep (name or index; spin l on su2)
        #[arg(long)]
        a: String,
        #[arg(long, required_unless_present = "power")]
        b: Option<String>,
        /// Decompose the n-th tensor power of --a instead
        #[arg(long)]
        power: Option<u32>,
    },
    /// Check ω(σ) ≤ ω(π)ω(ρ) over a truncation
    CheckWeight {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        weight: WeightArgs,
        /// Number of irreps from the canonical enumeration
        #[arg(long, default_value_t = 20)]
        trunc: usize,
    },
    /// ω(π)ω(π̄) as a weight descriptor
    Symmetrize {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 20)]
        trunc: usize,
    },
    /// Restrict a weight to a subgroup (finite groups or SU(2) → torus)
    Restrict {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        weight: WeightArgs,
        /// Subgroup table; omitted for SU(2), whose target is the torus
        #[arg(long)]
        subgroup: Option<String>,
        /// Class of G containing each class of H, comma separated
        #[arg(long)]
        embedding: Option<String>,
        /// Largest 2l searched for weights without a closed form
        #[arg(long)]
        max_t: Option<u32>,
        #[arg(long, default_value_t = 20)]
        trunc: usize,
    },
    /// Weighted norms of a function on a finite group
    Norm {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        weight: WeightArgs,
        /// Group function JSON; the identity delta when omitted
        #[arg(long)]
        function: Option<String>,
        /// Order of the dimension-weighted norm A_γⁿ
        #[arg(long, default_value_t = 1)]
        gamma_n: u32,
    },
    /// Operator amenability constant Σd²Ω/Σd²
    AmenConstant {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 20)]
        trunc: usize,
    },
    /// Amenability constant of an infinite product of finite groups
    ProductAmen {
        /// Group of every factor
        #[arg(long, default_value = "s3")]
        group: String,
        /// Weight family of every factor
        #[arg(long, default_value = "omega_a")]
        family: String,
        /// Factor parameters: const:v, geom:first,ratio or list:v1,v2,...
        #[arg(long)]
        a_rule: String,
        #[arg(long, default_value_t = 200)]
        max_terms: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Θ-operator scan for the Arens-regularity sufficient condition
    ArensScan {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 20)]
        trunc: usize,
        #[arg(long, default_value_t = 10)]
        tail_start: usize,
        #[arg(long, default_value_t = 0.05)]
        threshold: f64,
        /// Scan the labels carrying this irrep in one factor and trivial elsewhere
        #[arg(long)]
        slot_label: Option<String>,
    },
    /// n(ω, π^{⊗n})/n for n up to --n-max
    PointDeriv {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        label: String,
        #[arg(long, default_value_t = 1000)]
        n_max: usize,
    },
    /// Check w(x+y) ≤ w(x)w(y) for a weight on ℝ over a grid
    LineCheck {
        /// tau_a or a line-weight file
        #[arg(long, default_value = "tau_a")]
        weight: String,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        /// start:end:step
        #[arg(long, default_value = "-10:10:0.5", allow_hyphen_values = true)]
        grid: String,
    },
    /// List built-in groups, models and weight families
    Catalog,
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    use Command::*;
    match &cli.command {
        Fuse { group, a, b, power } => commands::fuse(group, a, b.as_deref(), *power),
        CheckWeight { group, weight, trunc } => commands::check_weight(group, weight, *trunc),
        Symmetrize { group, weight, trunc } => commands::symmetrize(group, weight, *trunc),
        Restrict { group, weight, subgroup, embedding, max_t, trunc } => {
            commands::restrict(group, weight, subgroup.as_deref(), embedding.as_deref(), *max_t, *trunc)
        }
        Norm { group, weight, function, gamma_n } => commands::norm(group, weight, function.as_deref(), *gamma_n),
        AmenConstant { group, weight, trunc } => commands::amen_constant(group, weight, *trunc),
        ProductAmen { group, family, a_rule, max_terms, tol } => {
            commands::product_amen(group, family, a_rule, *max_terms, *tol)
        }
        ArensScan { group, weight, trunc, tail_start, threshold, slot_label } => {
            commands::arens_scan(group, weight, *trunc, *tail_start, *threshold, slot_label.as_deref())
        }
        PointDeriv { group, weight, label, n_max } => commands::point_deriv(group, weight, label, *n_max),
        LineCheck { weight, a, grid } => commands::line_check(weight, *a, grid),
        Catalog => Ok(commands::catalog()),
    }
}

fn color_enabled() -> bool {
    std::env::var("BFA_COLOR").is_ok_and(|v| v == "1")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let json = serde_json::to_string_pretty(&outcome.json).expect("reports serialize") + "\n";
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, &json) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if cli.json {
        if cli.out.is_none() {
            print!("{json}");
        }
    } else {
        print!("{}", outcome.render(color_enabled()));
    }
    match outcome.status {
        Status::Clean => ExitCode::SUCCESS,
        Status::Flagged => ExitCode::from(1),
    }
}
