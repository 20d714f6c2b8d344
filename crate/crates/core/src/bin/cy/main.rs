//! `cy`: command-line access to the operator toolkit.
//!
//! Exit codes: 0 success / check passed, 1 check failed, 2 usage or parse
//! error, 3 precondition violation, 4 internal inconsistency.

mod commands;
mod input;
mod output;

use clap::{Parser, Subcommand};
use cykit::Error;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cy",
    about = "Exact arithmetic for Calabi-Yau type differential operators",
    version
)]
struct Cli {
    /// Output format for results.
    #[arg(long, global = true, default_value = "text")]
    format: output::Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse operator text and print its canonical form.
    Parse {
        /// Operator text, @file, or catalog id.
        operator: String,
    },
    /// Render an operator in the requested style.
    Render {
        operator: String,
        /// `theta` or `machine`.
        #[arg(long, default_value = "theta")]
        style: String,
    },
    /// Frobenius basis at the MUM point.
    Frobenius {
        operator: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Mirror map q(x) and its inverse.
    Mirror {
        operator: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Yukawa coupling K(q).
    Yukawa {
        operator: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Instanton numbers and their integrality normalizer.
    Instantons {
        operator: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Structure checks; exits 1 when the check fails.
    Check {
        /// mum | cy2 | cy5 | identities
        kind: String,
        operator: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Yang pullback of an order-5 operator.
    Pullback { operator: String },
    /// Order-5 lift of an order-4 operator (inverse of the pullback).
    Lift { operator: String },
    /// Exterior-power annihilator of third-order Wronskians.
    Exterior {
        operator: String,
        /// Solution indices i,j,k.
        #[arg(long, default_value = "0,1,2")]
        indices: String,
    },
    /// Hadamard product of two second-order operators.
    Hadamard {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Binomial lift of a third-order equation (quadratic P, constant c).
    Binomlift {
        /// Coefficients p0,p1,p2 of P.
        #[arg(long)]
        p: String,
        #[arg(long)]
        c: String,
    },
    /// Balanced hypergeometric quintic from (a2, a4, c).
    Hyper5 {
        #[arg(long)]
        a2: String,
        #[arg(long)]
        a4: String,
        #[arg(long)]
        c: String,
    },
    /// Closed-form pullback quartic from (alpha, beta, c).
    Closedform {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        c: String,
    },
    /// K(q)-equivalence of two operators; exits 1 when inequivalent.
    Equiv {
        a: String,
        b: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Transformation (f, g) with y0_B = f * y0_A(g).
    Transform {
        a: String,
        b: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Differential operator -> difference recursion.
    De2diff { operator: String },
    /// Difference recursion -> differential operator.
    Diff2de { recursion: String },
    /// Enumerate a holonomic sequence from a recursion.
    Enumerate {
        recursion: String,
        #[arg(long)]
        n: usize,
        /// Comma-separated initial terms.
        #[arg(long)]
        initial: Option<String>,
    },
    /// Fit an annihilator of the operator's solution sequence and divide.
    Factor {
        operator: String,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, default_value_t = 4)]
        dmax: usize,
    },
    /// Classify a recursion (or operator, or quadratic) by discriminant.
    Superseek { input: String },
    /// Catalog access.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List every entry id with order/degree and flags.
    List,
    /// Show one entry.
    Show { id: String },
    /// Run the consistency battery over the whole catalog.
    VerifyAll,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::NotFound { .. } => 2,
        Error::Precondition(_) | Error::Domain(_) | Error::UnsupportedSingularity(_) => 3,
        Error::SingularStep { .. } | Error::Structural(_) | Error::NoSignature(_) => 3,
        Error::Internal(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = output::Printer::new(cli.format);
    let result = match cli.command {
        Command::Parse { operator } => commands::parse(&out, &operator),
        Command::Render { operator, style } => commands::render(&out, &operator, &style),
        Command::Frobenius { operator, order } => commands::frobenius(&out, &operator, order),
        Command::Mirror { operator, order } => commands::mirror(&out, &operator, order),
        Command::Yukawa { operator, order } => commands::yukawa(&out, &operator, order),
        Command::Instantons { operator, order } => commands::instantons(&out, &operator, order),
        Command::Check { kind, operator, order } => {
            commands::check(&out, &kind, &operator, order)
        }
        Command::Pullback { operator } => commands::pullback(&out, &operator),
        Command::Lift { operator } => commands::lift(&out, &operator),
        Command::Exterior { operator, indices } => commands::exterior(&out, &operator, &indices),
        Command::Hadamard { left, right } => commands::hadamard(&out, &left, &right),
        Command::Binomlift { p, c } => commands::binomlift(&out, &p, &c),
        Command::Hyper5 { a2, a4, c } => commands::hyper5(&out, &a2, &a4, &c),
        Command::Closedform { alpha, beta, c } => commands::closedform(&out, &alpha, &beta, &c),
        Command::Equiv { a, b, order } => commands::equiv(&out, &a, &b, order),
        Command::Transform { a, b, order } => commands::transform(&out, &a, &b, order),
        Command::De2diff { operator } => commands::de2diff(&out, &operator),
        Command::Diff2de { recursion } => commands::diff2de(&out, &recursion),
        Command::Enumerate { recursion, n, initial } => {
            commands::enumerate(&out, &recursion, n, initial.as_deref())
        }
        Command::Factor { operator, kmax, dmax } => {
            commands::factor(&out, &operator, kmax, dmax)
        }
        Command::Superseek { input } => commands::superseek(&out, &input),
        Command::Catalog { action } => match action {
            CatalogAction::List => commands::catalog_list(&out),
            CatalogAction::Show { id } => commands::catalog_show(&out, &id),
            CatalogAction::VerifyAll => commands::catalog_verify_all(&out),
        },
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code_for(&e))
        }
    }
}
