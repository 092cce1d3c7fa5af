use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use poalign::io::{
    gen_graph, gen_instance, gen_sat32, parse_assignment, parse_certificate, parse_graph,
    parse_independent_set, parse_sat, parse_solution, serialize_assignment, serialize_certificate,
    serialize_graph, serialize_independent_set, serialize_instance, serialize_sat,
    serialize_solution, Certificate, GeneratorConfig, InstanceDocument,
};
use poalign::lred::{verify_lreduction, LRedKind, LRedSource};
use poalign::order::Representation;
use poalign::reduce::{
    extract_assignment_with_repair, extract_independent_set_with_repair, reduce_mis3, reduce_sat32,
    solution_from_assignment, solution_from_independent_set,
};
use poalign::solve::{solve, Method, DEFAULT_CAP};
use poalign::Error;

#[derive(Parser)]
#[command(name = "poalign", version, about = "Partial order alignment toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceKind {
    Mis3,
    Sat32,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Graph,
    Sat32,
    Instance,
}

#[derive(Subcommand)]
enum Command {
    /// Align the two orders of an instance.
    Solve {
        instance: PathBuf,
        #[arg(long, default_value = "auto")]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Print the finest family of each order.
    Classify { instance: PathBuf },
    /// Compile a graph or SAT instance into an alignment instance.
    Reduce {
        kind: SourceKind,
        input: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(short = 'c', long = "certificate")]
        certificate: PathBuf,
        /// Accept vertices of degree above 3 (the approximation bounds no
        /// longer apply).
        #[arg(long)]
        allow_high_degree: bool,
    },
    /// Build an alignment from an independent set or an assignment.
    BuildSolution {
        certificate: PathBuf,
        input: PathBuf,
    },
    /// Read an independent set or an assignment back from an alignment.
    Extract {
        certificate: PathBuf,
        solution: PathBuf,
    },
    /// Check the L-reduction inequalities on one source instance.
    VerifyLred {
        /// mis3-maxadj, mis3-minbrk, sat32-maxadj or sat32-minbrk.
        kind: LRedKind,
        input: PathBuf,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Print a seeded random graph, SAT instance or alignment instance.
    Gen {
        kind: GenKind,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        /// Edge count (graphs only).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value = "linear")]
        gamma: Representation,
        #[arg(long, default_value = "weak")]
        pi: Representation,
        #[arg(long, default_value_t = 3)]
        bucket_max: usize,
    },
}

fn read(path: &Path) -> poalign::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path)
        .map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn write(path: &Path, text: &str) -> poalign::Result<()> {
    fs::write(path, text)
        .map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn run(cmd: Command, out: &mut String) -> poalign::Result<bool> {
    match cmd {
        Command::Solve {
            instance,
            method,
            cap,
        } => {
            let inst = poalign::io::parse_instance(&read(&instance)?)?;
            match solve(&inst, method, cap) {
                Ok(sol) => out.push_str(&serialize_solution(&sol)),
                Err(Error::CapExceeded { count, best }) => {
                    if let Some(best) = &best {
                        out.push_str("# best alignment found before the cap\n");
                        out.push_str(&serialize_solution(best));
                    }
                    return Err(Error::CapExceeded { count, best });
                }
                Err(e) => return Err(e),
            }
        }
        Command::Classify { instance } => {
            let doc = InstanceDocument::parse(&read(&instance)?)?;
            let inst = &doc.instance;
            out.push_str(&format!("{} {}\n", doc.gamma_name, inst.gamma().family()));
            out.push_str(&format!("{} {}\n", doc.pi_name, inst.pi().family()));
        }
        Command::Reduce {
            kind,
            input,
            output,
            certificate,
            allow_high_degree,
        } => {
            let text = read(&input)?;
            let (inst, cert) = match kind {
                SourceKind::Mis3 => {
                    let (i, c) = reduce_mis3(&parse_graph(&text)?, allow_high_degree)?;
                    (i, Certificate::Mis3(c))
                }
                SourceKind::Sat32 => {
                    let (i, c) = reduce_sat32(&parse_sat(&text)?)?;
                    (i, Certificate::Sat32(c))
                }
            };
            write(&output, &serialize_instance(&inst))?;
            write(&certificate, &serialize_certificate(&cert))?;
            out.push_str(&format!("markers={}\n", inst.markers().len()));
        }
        Command::BuildSolution { certificate, input } => {
            let cert = parse_certificate(&read(&certificate)?)?;
            let text = read(&input)?;
            let sol = match &cert {
                Certificate::Mis3(c) => {
                    let set = parse_independent_set(&text, c.graph())?;
                    solution_from_independent_set(c, &set)?
                }
                Certificate::Sat32(c) => {
                    let asg = parse_assignment(&text, c.sat().var_count())?;
                    solution_from_assignment(c, &asg)?
                }
            };
            out.push_str(&serialize_solution(&sol));
        }
        Command::Extract {
            certificate,
            solution,
        } => {
            let cert = parse_certificate(&read(&certificate)?)?;
            let sol = parse_solution(&read(&solution)?, cert.markers())?;
            match &cert {
                Certificate::Mis3(c) => {
                    let x = extract_independent_set_with_repair(c, &sol)?;
                    out.push_str(&format!(
                        "# n_adj={} repaired_n_adj={} repairs={}\n",
                        sol.n_adj, x.repaired.n_adj, x.repairs
                    ));
                    out.push_str(&serialize_independent_set(&x.set));
                }
                Certificate::Sat32(c) => {
                    let x = extract_assignment_with_repair(c, &sol)?;
                    out.push_str(&format!(
                        "# n_adj={} repaired_n_adj={} repairs={} satisfied={}\n",
                        sol.n_adj,
                        x.repaired.n_adj,
                        x.repairs,
                        c.sat().satisfied_count(&x.assignment)
                    ));
                    out.push_str(&serialize_assignment(&x.assignment));
                }
            }
        }
        Command::VerifyLred {
            kind,
            input,
            samples,
            seed,
            cap,
        } => {
            let text = read(&input)?;
            let source = if kind.is_mis() {
                LRedSource::Graph(parse_graph(&text)?)
            } else {
                LRedSource::Sat(parse_sat(&text)?)
            };
            let report = verify_lreduction(kind, &source, samples, seed, cap)?;
            out.push_str(&report.to_string());
            return Ok(report.passed());
        }
        Command::Gen {
            kind,
            seed,
            n,
            m,
            gamma,
            pi,
            bucket_max,
        } => {
            let cfg = GeneratorConfig {
                seed,
                n,
                m,
                gamma,
                pi,
                bucket_max,
            };
            let text = match kind {
                GenKind::Graph => serialize_graph(&gen_graph(&cfg)?),
                GenKind::Sat32 => serialize_sat(&gen_sat32(&cfg)?),
                GenKind::Instance => serialize_instance(&gen_instance(&cfg)?),
            };
            out.push_str(&text);
        }
    }
    Ok(true)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Io(_) | Error::RepairRegression { .. } => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let _ = io::stdout().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
