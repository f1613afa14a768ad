use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};
use kzero::{run_certificate, Dataset, Verdict};
use kzero_core::order::{fundamental_unit, Principality, DEFAULT_DISC_BOUND};
use kzero_core::weil::{endomorphism_stability, frobenius_charpoly, DEFAULT_STABILITY_BOUND};
use kzero_core::{class_group, class_of, is_principal, maximal_order, FracIdeal, QuadElement, Rational};

#[derive(Parser)]
#[command(name = "kzero", version, about = "Exact certificates for a zero divisor in the Grothendieck ring of varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run all checks on a newform dataset
    Verify {
        file: PathBuf,
        /// Largest power d tested for Q(π^d) = Q(π)
        #[arg(long, default_value_t = DEFAULT_STABILITY_BOUND)]
        bound: u32,
        /// Also write a JSON report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Class group of the maximal order of Q(√d)
    Classgroup {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Fundamental unit of the maximal order of Q(√d), d > 1
    Unit {
        #[arg(long)]
        d: i64,
    },
    /// Frobenius quartic for a_p = a + b√d
    Weil {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        b: Rational,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Principality of the ideal (a, b + ω), ω = √d or (1 + √d)/2
    Principal {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|_| format!("expected an integer or a fraction n/m, got {s:?}"))
}

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT)
}

fn verify(file: PathBuf, bound: u32, report: Option<PathBuf>) -> ExitCode {
    let data = match Dataset::load(&file) {
        Ok(d) => d,
        Err(e) => return input_error(format!("{}: {e}", file.display())),
    };
    let cert = run_certificate(&data, bound);
    println!("{}", cert);
    if let Some(path) = report {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        let text = serde_json::to_string_pretty(&cert.to_json(now)).expect("report serializes");
        if let Err(e) = std::fs::write(&path, text + "\n") {
            return input_error(format!("{}: {e}", path.display()));
        }
    }
    match cert.verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Fail => ExitCode::from(EXIT_FAIL),
    }
}

fn classgroup(d: i64) -> Result<(), kzero_core::Error> {
    let order = maximal_order(d)?;
    let g = class_group(&order, DEFAULT_DISC_BOUND)?;
    println!("order: {order}");
    println!("discriminant: {}", order.discriminant());
    println!("class number: {}", g.class_number());
    let parts: Vec<String> = g.factors.iter().map(|n| format!("Z/{n}")).collect();
    println!("structure: {}", if parts.is_empty() { "trivial".into() } else { parts.join(" × ") });
    for (gen, n) in g.generators.iter().zip(&g.factors) {
        println!("generator of order {n}: {gen}");
    }
    println!("primes below the Minkowski bound: {:?}", g.minkowski_primes);
    Ok(())
}

fn unit(d: i64) -> Result<(), kzero_core::Error> {
    let order = maximal_order(d)?;
    let eps = fundamental_unit(&order)?;
    println!("fundamental unit: {eps}");
    println!("norm: {}", eps.norm());
    Ok(())
}

fn weil(p: u64, a: Rational, b: Rational, d: i64) -> Result<(), kzero_core::Error> {
    let ap = QuadElement::new(d, a, b)?;
    let w = frobenius_charpoly(&ap, p)?;
    println!("P_{p}(x) = {}", w.poly());
    println!("coefficients (constant first): {:?}", w.poly().coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("roots on |x| = √{p}: {}", w.roots_on_circle());
    println!("ordinary: {}", w.is_ordinary());
    println!("irreducible: {}", w.is_irreducible());
    if w.is_irreducible() {
        let r = endomorphism_stability(&w, DEFAULT_STABILITY_BOUND)?;
        println!("stability up to d = {}: {:?}", r.bound, r.outcome);
    }
    Ok(())
}

fn principal(d: i64, a: i64, b: i64) -> Result<(), kzero_core::Error> {
    let order = maximal_order(d)?;
    let ideal = FracIdeal::new(order, a.into(), b.into(), 1.into())?;
    println!("ideal: {ideal} in {order}");
    println!("norm: {}", ideal.norm());
    match is_principal(&ideal) {
        Principality::Principal { generator } => println!("principal, generated by {generator}"),
        Principality::NonPrincipal => {
            let c = class_of(&ideal);
            println!("nonprincipal, class {c} of order {}", c.multiplicative_order());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Verify { file, bound, report } => return verify(file, bound, report),
        Command::Classgroup { d } => classgroup(d),
        Command::Unit { d } => unit(d),
        Command::Weil { p, a, b, d } => weil(p, a, b, d),
        Command::Principal { d, a, b } => principal(d, a, b),
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => input_error(e),
    }
}
