use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use legch::augmentation::{enumerate_augmentations, DEFAULT_SEARCH_CAP};
use legch::constructions::{connected_sum, k_n, realize, tau_iterate, twist_knot, SpecialForm};
use legch::front::{parse_front, FrontDiagram};
use legch::linearized::{chekanov_set, Pipeline};
use legch::poly::LaurentPoly;
use legch::table::{report, selftest, selftest_text, SCHEMA};
use legch::Error;

#[derive(Parser)]
#[command(name = "legch", version, about = "Chekanov invariants of Legendrian knot fronts")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest number of degree-0 crossings the augmentation search accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_CAP)]
    cap: usize,
    /// Print nothing on success; the exit status carries the result.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Thurston-Bennequin and rotation numbers.
    Invariants { file: PathBuf },
    /// Generators, degrees and differential.
    Dga { file: PathBuf },
    /// Augmentations.
    Aug {
        file: PathBuf,
        /// List every augmentation.
        #[arg(long)]
        witness: bool,
    },
    /// Distinct Chekanov polynomials.
    Poly {
        file: PathBuf,
        /// Print reduced polynomials only.
        #[arg(long)]
        reduced: bool,
    },
    /// Connected sum of two fronts.
    Sum { a: PathBuf, b: PathBuf },
    /// Tangle replacement on a front in special form.
    Tau {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        iterate: usize,
    },
    /// The front K_n.
    Kn { n: usize },
    /// The twist knot T_d.
    Twist { d: usize },
    /// A front whose only reduced polynomial is the given one.
    Realize { poly: String },
    /// Replays the built-in records.
    Selftest {
        /// Directory of `<name>.front` files checked against the shipped table.
        #[arg(long)]
        fronts: Option<PathBuf>,
    },
}

enum Failure {
    Error(Error),
    Selftest(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn read_front(path: &PathBuf) -> Result<FrontDiagram, Error> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::InvalidArgument(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?
    };
    parse_front(&text)
}

fn front_output(cli: &Cli, f: &FrontDiagram) -> String {
    if cli.json {
        let line = f.to_text().lines().last().unwrap_or_default().to_string();
        json!({ "schema": SCHEMA, "name": f.name, "front": line }).to_string()
    } else {
        f.to_text().trim_end().to_string()
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let out = match &cli.command {
        Command::Invariants { file } => {
            let f = read_front(file)?;
            let inv = f.classical_invariants();
            if cli.json {
                json!({ "schema": SCHEMA, "tb": inv.tb, "r": inv.r, "writhe": inv.writhe, "cusps": inv.cusps }).to_string()
            } else {
                format!("tb = {}\nr = {}\nwrithe = {}\ncusps = {}", inv.tb, inv.r, inv.writhe, inv.cusps)
            }
        }
        Command::Dga { file } => {
            let f = read_front(file)?;
            let pipe = Pipeline::new(&f)?;
            let a = &pipe.alphabet;
            if cli.json {
                let gens: Vec<_> = a
                    .gens()
                    .map(|g| {
                        let words: Vec<String> = pipe.differential.of(g).words().map(|w| w.display(a).to_string()).collect();
                        json!({ "name": a.name(g), "degree": a.degree(g), "d": words })
                    })
                    .collect();
                json!({ "schema": SCHEMA, "generators": gens }).to_string()
            } else {
                a.gens()
                    .map(|g| format!("|{}| = {}    d {} = {}", a.name(g), a.degree(g), a.name(g), pipe.differential.of(g).display(a)))
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
        Command::Aug { file, witness } => {
            let f = read_front(file)?;
            let r = f.classical_invariants().r;
            let (names, count) = if r != 0 {
                (Vec::new(), 0)
            } else {
                let pipe = Pipeline::new(&f)?;
                let augs = enumerate_augmentations(&pipe.differential, &pipe.alphabet, cli.cap)?;
                let names: Vec<Vec<String>> = augs.iter().map(|e| e.names(&pipe.alphabet)).collect();
                let n = names.len();
                (names, n)
            };
            if cli.json {
                let mut v = json!({ "schema": SCHEMA, "augmentations": count });
                if *witness {
                    v["witnesses"] = json!(names);
                }
                v.to_string()
            } else {
                let mut lines = vec![format!("augmentations = {count}")];
                if *witness {
                    lines.extend(names.iter().map(|n| format!("{{{}}}", n.join(", "))));
                }
                lines.join("\n")
            }
        }
        Command::Poly { file, reduced } => {
            let f = read_front(file)?;
            if cli.json {
                let rep = report(&f, cli.cap)?;
                serde_json::to_string(&rep).expect("report serializes")
            } else {
                let set = chekanov_set(&f, cli.cap)?;
                let mut lines = vec![format!("ch = {}", set.ch())];
                for c in &set.classes {
                    if *reduced {
                        lines.push(format!("p = {}    ({} augmentations)", c.reduced, c.count));
                    } else {
                        lines.push(format!("P = {}    p = {}    ({} augmentations)", c.poly, c.reduced, c.count));
                    }
                }
                lines.join("\n")
            }
        }
        Command::Sum { a, b } => {
            let (f, g) = (read_front(a)?, read_front(b)?);
            front_output(cli, &connected_sum(&f, &g))
        }
        Command::Tau { file, iterate } => {
            let f = read_front(file)?;
            let sf = SpecialForm::detect(&f)?;
            front_output(cli, &tau_iterate(&sf, *iterate)?.front)
        }
        Command::Kn { n } => front_output(cli, &k_n(*n)?),
        Command::Twist { d } => front_output(cli, &twist_knot(*d)?),
        Command::Realize { poly } => {
            let p: LaurentPoly = poly.parse()?;
            front_output(cli, &realize(&p)?)
        }
        Command::Selftest { fronts } => {
            let rep = selftest(cli.cap, fronts.as_deref())?;
            let text = if cli.json { serde_json::to_string(&rep).expect("report serializes") } else { selftest_text(&rep) };
            if !rep.passed {
                return Err(Failure::Selftest(text));
            }
            text.trim_end().to_string()
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if !cli.quiet {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Selftest(text)) => {
            println!("{}", text.trim_end());
            ExitCode::from(3)
        }
        Err(Failure::Error(e)) => {
            eprintln!("legch: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
