use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ks_parity::generators::{Enumeration, Generator};
use ks_parity::io::{
    certificate_json, certificate_text, choice_spec_parse, orthogonality_dot, read_ray_vectors, tables_json,
    tables_text, validate_ray_vectors, KsSetRecord,
};
use ks_parity::verifier::{find_colouring, oracle_enumerate_parallel, verify_parity};
use ks_parity::{BasisId, BasisSet, Error};

#[derive(Parser)]
#[command(name = "ksparity", version, about = "Parity proofs of the Kochen-Specker theorem in eight dimensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the basis table and the derived 4-ray sets.
    Tables {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one algorithm choice, or enumerate every choice, printing JSON lines.
    Generate {
        /// Number of rays in the proof: 36, 38 or 40.
        #[arg(long = "type", value_parser = ["36", "38", "40"])]
        ray_count: String,
        /// `G<i>.<j>,S5=<ray>,S6=<ray>` for 36 rays, `G<i>.<j>,G<i>.<j>,G<i>.<j>` otherwise.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        choice: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Print the parity certificate for a set of bases; exits 1 if it is not a parity proof.
    Verify {
        #[arg(long, value_parser = parse_bases)]
        bases: BasisSet,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Scan all 2^25 subsets of the bases for parity proofs.
    Oracle {
        /// Print only the per-size counts.
        #[arg(long)]
        summary: bool,
    },
    /// Search for a 0/1 colouring; exits 0 if none exists, 1 if one is found.
    CheckColor {
        #[arg(long, value_parser = parse_bases)]
        bases: BasisSet,
    },
    /// Check that every basis is orthogonal under the coordinates in a ray file.
    ValidateRays {
        #[arg(long)]
        file: PathBuf,
    },
    /// Print the ray orthogonality graph.
    ExportGraph {
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
}

fn parse_bases(s: &str) -> Result<BasisSet, String> {
    let mut ids = Vec::new();
    for token in s.split(',').map(str::trim) {
        let n: u8 = token.parse().map_err(|_| format!("`{token}` is not a basis number"))?;
        ids.push(BasisId::new(n).map_err(|e| e.to_string())?);
    }
    Ok(BasisSet::from_ids(ids))
}

/// How a subcommand ended when it did not succeed.
enum Failure {
    /// A check ran and did not hold.
    Check(String),
    /// The input was rejected before anything could be checked.
    Input(Error),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn expected_count(ray_count: u8) -> usize {
    match ray_count {
        36 => 320,
        38 => 640,
        _ => 64,
    }
}

fn run(cmd: Command, out: &mut impl Write) -> Result<(), Failure> {
    let gen = Generator::builtin();
    match cmd {
        Command::Tables { format } => {
            let s = match format {
                Format::Text => tables_text(gen.table, gen.gammas),
                Format::Json => tables_json(gen.table, gen.gammas) + "\n",
            };
            out.write_all(s.as_bytes())?;
        }
        Command::Generate { ray_count, choice, all } => {
            let ray_count: u8 = ray_count.parse().expect("restricted by clap");
            if all {
                let e: Enumeration = match ray_count {
                    36 => gen.enumerate_i(),
                    38 => gen.enumerate_ii(),
                    _ => gen.enumerate_iii(),
                }
                .map_err(Failure::Input)?;
                for s in &e.sets {
                    writeln!(out, "{}", KsSetRecord::from_generated(&s.first, s.parameterizations).to_json())?;
                }
                let expected = expected_count(ray_count);
                if e.len() != expected {
                    return Err(Failure::Check(format!(
                        "found {} sets of type {ray_count}, expected {expected}",
                        e.len()
                    )));
                }
            } else {
                let text = choice.expect("required by clap");
                let choice = choice_spec_parse(ray_count, &text).map_err(Failure::Input)?;
                let g = gen.run(choice).map_err(Failure::Input)?;
                writeln!(out, "{}", KsSetRecord::from_generated(&g, 1).to_json())?;
            }
        }
        Command::Verify { bases, format } => {
            let c = verify_parity(gen.table, bases);
            match format {
                Format::Text => out.write_all(certificate_text(&c).as_bytes())?,
                Format::Json => writeln!(out, "{}", certificate_json(&c))?,
            }
            if !c.valid {
                return Err(Failure::Check(format!("{bases} is not a parity proof")));
            }
        }
        Command::Oracle { summary } => {
            let bits = std::thread::available_parallelism().map_or(0, |n| n.get().next_power_of_two().trailing_zeros());
            let r = oracle_enumerate_parallel(gen.table, bits.min(6));
            let line = r.summary_line();
            if summary {
                writeln!(out, "{line}")?;
            } else {
                for sets in r.by_signature.values() {
                    for ks in sets {
                        writeln!(out, "{}", KsSetRecord::from_oracle(ks).to_json())?;
                    }
                }
                eprintln!("{line}");
            }
            let counts = [11, 13, 15].map(|n| r.count_with_bases(n));
            if counts != [320, 640, 64] || r.total() != 1024 {
                return Err(Failure::Check(format!("unexpected counts: {line}")));
            }
        }
        Command::CheckColor { bases } => match find_colouring(gen.table, bases) {
            None => writeln!(out, "noncolourable: {bases}")?,
            Some(ones) => {
                writeln!(out, "colourable: {bases}")?;
                writeln!(out, "rays coloured 1: {ones}")?;
                return Err(Failure::Check(format!("{bases} admits a colouring")));
            }
        },
        Command::ValidateRays { file } => {
            let rays = read_ray_vectors(&file).map_err(Failure::Input)?;
            let report = validate_ray_vectors(gen.table, &rays);
            for v in &report.violations {
                writeln!(out, "{v}")?;
            }
            writeln!(out, "checked {} pairs, {} violations", report.pairs_checked, report.violations.len())?;
            if !report.is_ok() {
                return Err(Failure::Check(format!("{} is not orthogonal on every basis", file.display())));
            }
        }
        Command::ExportGraph { format: GraphFormat::Dot } => out.write_all(orthogonality_dot(gen.table).as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
