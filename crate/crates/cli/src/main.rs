use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ncideal::grading::{
    positivity_search, GradingMatrix, HomPartStream, PositivityConfig, PositivityOutcome,
};
use ncideal::groebner::{buchberger_enumerate, right_interreduce, Certificate, GbConfig};
use ncideal::intersect::{
    intersect_mixed, intersect_right_right, intersect_two_two, rho_enumerate, RhoConfig,
};
use ncideal::monpart::{two_sided_guard, MonPartStream, Side};
use ncideal::prover::{
    check_certificate, order_line, parse_quiver, parse_statement, parse_system, prove, Outcome,
    ProveConfig, System,
};
use ncideal::{Error, Ring};

const VALID: u8 = 0;
const INVALID: u8 = 1;
const NOT_FOUND: u8 = 2;
const INPUT_ERROR: u8 = 3;
const UNSUPPORTED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "ncideal",
    version,
    about = "Ideals of noncommutative polynomials and operator statements"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Input {
    /// Generator file (`vars:`, `order:`, `quiver:`, `assume:`, `with:`).
    #[arg(long)]
    input: PathBuf,
    /// Overrides the file's order, e.g. "[x] > [y, z]".
    #[arg(long)]
    order: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Right,
    Two,
    Mixed,
}

#[derive(Subcommand)]
enum Cmd {
    /// Proves the claim of a statement file.
    Prove {
        file: PathBuf,
        /// Degree bound for `ρ`.
        #[arg(long)]
        max_deg: Option<usize>,
        /// Generators scanned by the positivity search.
        #[arg(long)]
        max_gens: Option<usize>,
        /// Writes the certificate to this file.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Two-sided Groebner basis of the `assume:` generators.
    Gb {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_deg: Option<usize>,
        #[arg(long)]
        certificates: bool,
    },
    /// Right Groebner basis of the `assume:` generators.
    Rgb {
        #[command(flatten)]
        input: Input,
    },
    /// Intersects the ideals of `assume:` and `with:`.
    Intersect {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Degree bound for `ρ` (mixed) or the completion (two).
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Right ideal generators `ρ` of the two-sided ideal.
    Rho {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 5)]
        max_deg: usize,
        /// File of `edge:` lines; defaults to the input's quiver.
        #[arg(long)]
        quiver: Option<PathBuf>,
        /// Ignores every quiver.
        #[arg(long, conflicts_with = "quiver")]
        no_quiver: bool,
    },
    /// Homogeneous part under a grading, or a positivity search.
    Hom {
        #[command(flatten)]
        input: Input,
        /// One row of integers per variable, in declaration order.
        #[arg(
            long,
            conflicts_with = "positivity",
            required_unless_present = "positivity"
        )]
        matrix: Option<PathBuf>,
        /// Looks for `p = Q* Q`.
        #[arg(long)]
        positivity: Option<String>,
        #[arg(long, default_value_t = 1000)]
        max_gens: usize,
        /// Degree bound of the completion; unbounded for `--positivity`
        /// unless given, 10 otherwise.
        #[arg(long)]
        gb_max_deg: Option<usize>,
    },
    /// Monomial part of the right or left ideal.
    Mon {
        #[command(flatten)]
        input: Input,
        #[arg(long, group = "side")]
        right: bool,
        #[arg(long, group = "side")]
        left: bool,
        #[arg(long, group = "side")]
        two_sided: bool,
        #[arg(long, default_value_t = 100)]
        max_gens: usize,
        /// Degree bound of the completion.
        #[arg(long, default_value_t = 10)]
        gb_max_deg: usize,
    },
    /// Re-verifies a certificate file.
    CheckCert { file: PathBuf },
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<System, Error> {
    let text = read(&input.input)?;
    let sys = parse_system(&text).map_err(|e| located(&input.input, e))?;
    match &input.order {
        Some(o) => sys.reorder(o),
        None => Ok(sys),
    }
}

fn located(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, col, msg } => {
            Error::Input(format!("{}:{line}:{col}: {msg}", path.display()))
        }
        other => other,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_certificate(ring: &Ring, c: &Certificate) {
    for s in &c.summands {
        println!(
            "#   {} | {} | {} | {}",
            s.coeff,
            ring.show_mono(&s.left),
            s.gen,
            ring.show_mono(&s.right)
        );
    }
}

fn parse_matrix(text: &str, ring: &Ring) -> Result<GradingMatrix, Error> {
    let al = ring.alphabet();
    let vars: Vec<_> = al.vars().collect();
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let row = body
            .split_whitespace()
            .map(|x| x.parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::Input(format!("matrix line {}: expected integers", i + 1)))?;
        rows.push((i + 1, row));
    }
    if rows.len() != vars.len() {
        return Err(Error::Input(format!(
            "matrix has {} rows for {} variables",
            rows.len(),
            vars.len()
        )));
    }
    let k = rows[0].1.len();
    let mut a = GradingMatrix::new(k);
    for (&v, (line, row)) in vars.iter().zip(rows) {
        if row.len() != k {
            return Err(Error::Input(format!(
                "matrix line {line}: expected {k} entries"
            )));
        }
        a.set_row(v, row, al)?;
    }
    Ok(a)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Prove {
            file,
            max_deg,
            max_gens,
            cert,
        } => {
            let st = parse_statement(&read(&file)?).map_err(|e| located(&file, e))?;
            let mut cfg = ProveConfig::from_options(&st.options);
            if let Some(d) = max_deg {
                cfg.rho_degree = d;
            }
            if let Some(n) = max_gens {
                cfg.max_gens = n;
            }
            let rep = prove(&st, &cfg)?;
            print!("{}", rep.render(&st));
            if let (Some(path), Some(file)) = (cert, rep.certificate_file(&st)) {
                fs::write(&path, file.render())
                    .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
            }
            Ok(match rep.outcome {
                Outcome::Proved => VALID,
                Outcome::NotFoundWithinBounds => NOT_FOUND,
            })
        }
        Cmd::Gb {
            input,
            max_deg,
            certificates,
        } => {
            let sys = load(&input)?;
            let r = &sys.ring;
            let mut cfg = GbConfig {
                degree_bound: max_deg,
                ..GbConfig::unbounded()
            };
            if certificates {
                cfg = cfg.certified();
            }
            let res = buchberger_enumerate(&sys.generators, r.order(), cfg);
            println!("# order: {}", order_line(r));
            println!("# complete: {}", yes_no(res.complete));
            println!("# size: {}", res.basis.len());
            for (i, g) in res.basis.iter().enumerate() {
                println!("{}", r.show(g));
                if let Some(c) = res.certificates.as_ref().map(|c| &c[i]) {
                    print_certificate(r, c);
                }
            }
            Ok(VALID)
        }
        Cmd::Rgb { input } => {
            let sys = load(&input)?;
            let r = &sys.ring;
            let basis = right_interreduce(&sys.generators, r.order());
            println!("# order: {}", order_line(r));
            println!("# size: {}", basis.len());
            for g in &basis {
                println!("{}", r.show(g));
            }
            Ok(VALID)
        }
        Cmd::Intersect {
            input,
            kind,
            max_deg,
        } => {
            let sys = load(&input)?;
            let r = &sys.ring;
            if sys.others.is_empty() {
                return Err(Error::Input("the input has no `with:` generators".into()));
            }
            let (basis, note) = match kind {
                Kind::Right => (
                    intersect_right_right(&sys.generators, &sys.others, r)?,
                    String::new(),
                ),
                Kind::Two => {
                    let cfg = GbConfig {
                        degree_bound: max_deg,
                        ..GbConfig::unbounded()
                    };
                    let res = intersect_two_two(&sys.generators, &sys.others, r, cfg)?;
                    (res.basis, format!("# complete: {}\n", yes_no(res.complete)))
                }
                Kind::Mixed => {
                    let rho = RhoConfig {
                        degree_bound: max_deg.unwrap_or(5),
                        quiver: sys.quiver.as_ref(),
                    };
                    let res = intersect_mixed(
                        &sys.generators,
                        &sys.others,
                        r,
                        rho,
                        GbConfig::unbounded(),
                    )?;
                    let note = format!(
                        "# gb-size: {}\n# rho-size: {}\n# approximate: {}\n",
                        res.gb_size,
                        res.rho_size,
                        yes_no(res.approximate)
                    );
                    (res.basis, note)
                }
            };
            print!("{note}");
            println!("# size: {}", basis.len());
            for g in &basis {
                println!("{}", r.show(g));
            }
            Ok(VALID)
        }
        Cmd::Rho {
            input,
            max_deg,
            quiver,
            no_quiver,
        } => {
            let sys = load(&input)?;
            let r = &sys.ring;
            let q = match &quiver {
                Some(p) => Some(parse_quiver(&read(p)?, r.alphabet()).map_err(|e| located(p, e))?),
                None if no_quiver => None,
                None => sys.quiver.clone(),
            };
            let gb = buchberger_enumerate(&sys.generators, r.order(), GbConfig::unbounded());
            let res = rho_enumerate(
                &gb.basis,
                r.order(),
                RhoConfig {
                    degree_bound: max_deg,
                    quiver: q.as_ref(),
                },
            )?;
            println!("# gb-size: {}", gb.basis.len());
            println!("# gb-complete: {}", yes_no(gb.complete));
            println!("# quiver-filter: {}", yes_no(q.is_some()));
            println!("# exhaustive: {}", yes_no(res.exhaustive));
            println!("# count: {}", res.elements.len());
            for g in &res.elements {
                println!("{}", r.show(g));
            }
            Ok(VALID)
        }
        Cmd::Hom {
            input,
            matrix,
            positivity,
            max_gens,
            gb_max_deg,
        } => {
            let sys = load(&input)?;
            let r = &sys.ring;
            if let Some(p) = positivity {
                let p = r
                    .parse(&p)
                    .map_err(|e| Error::Input(format!("--positivity: {e}")))?;
                let cfg = PositivityConfig {
                    gb: GbConfig {
                        degree_bound: gb_max_deg,
                        ..GbConfig::unbounded()
                    },
                    max_emitted: max_gens,
                    ..PositivityConfig::default()
                };
                return match positivity_search(&sys.generators, &p, r, &cfg)? {
                    PositivityOutcome::Found(f) => {
                        println!("Q = {}", r.show(&f.q));
                        println!("# index: {}", f.index);
                        println!("# engine-index: {}", f.engine_index);
                        if let Some(n) = f.input_basis {
                            println!("# input-basis-size: {n}");
                        }
                        Ok(VALID)
                    }
                    PositivityOutcome::Raw {
                        word, coeff, index, ..
                    } => {
                        println!(
                            "# found {coeff} {} at index {index}; no rational square root",
                            r.show_mono(&word)
                        );
                        Ok(NOT_FOUND)
                    }
                    PositivityOutcome::Exhausted { emitted, complete } => {
                        println!(
                            "# not found among {emitted} generators (complete: {})",
                            yes_no(complete)
                        );
                        Ok(NOT_FOUND)
                    }
                };
            }
            let path = matrix.expect("required by clap");
            let a = parse_matrix(&read(&path)?, r)?;
            let cfg = GbConfig::with_degree(gb_max_deg.unwrap_or(10));
            let mut stream =
                HomPartStream::new(&sys.generators, &a, r, cfg)?.with_max_emitted(max_gens);
            let els: Vec<_> = stream.by_ref().collect();
            println!("# complete: {}", yes_no(stream.is_complete()));
            println!("# count: {}", els.len());
            for e in &els {
                println!("{}", r.show(&e.poly));
            }
            Ok(VALID)
        }
        Cmd::Mon {
            input,
            left,
            two_sided,
            max_gens,
            gb_max_deg,
            ..
        } => {
            let sys = load(&input)?;
            let r = &sys.ring;
            if two_sided {
                two_sided_guard(&sys.generators)?;
            }
            let side = if left { Side::Left } else { Side::Right };
            let mut stream =
                MonPartStream::new(&sys.generators, r, side, GbConfig::with_degree(gb_max_deg))?
                    .with_max_emitted(max_gens);
            let els: Vec<_> = stream.by_ref().collect();
            println!("# complete: {}", yes_no(stream.is_complete()));
            println!("# count: {}", els.len());
            for e in &els {
                println!("{}", r.show_mono(&e.monomial));
            }
            Ok(VALID)
        }
        Cmd::CheckCert { file } => {
            let rep = check_certificate(&read(&file)?).map_err(|e| located(&file, e))?;
            if rep.is_valid() {
                println!("valid");
                return Ok(VALID);
            }
            if let Some(res) = &rep.residual {
                println!("invalid: the sum differs from the target by {res}");
            }
            if rep.compatible == Some(false) {
                println!("invalid: the target is not compatible with the quiver");
            }
            Ok(INVALID)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Unsupported(_) => UNSUPPORTED,
                _ => INPUT_ERROR,
            })
        }
    }
}
