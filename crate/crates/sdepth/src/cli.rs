//! Command-line front end: parse ideals and complexes, run the decisions and
//! verifiers, emit certificates and reports.
//!
//! Exit codes: 0 for reports and positive decisions, 1 for negative boolean
//! decisions, 2 for input errors, 3 for exceeded resource limits.

use std::fmt::Display;
use std::io::Read;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};

use crate::collapse::{
    is_uniformly_collapsible, probe_star, verify_certificate, CollapseCertificate,
};
use crate::combinatorics::{macaulay_rep, min_bound, shadow_size, xi};
use crate::complexes::{
    gen_compressed_ideal, gen_cycle_with_chord, gen_not_uc, gen_padded_counterexample,
    gen_veronese, MonomialIdeal, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::format::{
    parse_certificate, parse_input, render_complex, render_ideal, Certificate, Input,
};
use crate::poset::{
    build_reduced_poset, probe_conjecture, probe_xi_minimal, stanley_depth_with_budget,
    verify_main_theorem, verify_partition, DEFAULT_NODE_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "sdepth",
    version,
    about = "Stanley depth of squarefree monomial ideals: exact interval partitions, \
             uniform collapsibility, shadow calculus"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Node budget for the exact partitionability search
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// More detail on standard output (repeatable)
    #[arg(short, long, global = true, action = ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Stanley depth of an ideal, with a witness interval partition
    Sdepth { input: String },

    /// Uniform collapsibility of a pure complex, with an SDR or violator
    /// certificate; an ideal input is decided through its complement complex
    Collapsible {
        input: String,
        /// Insist that the input is an ideal file
        #[arg(long)]
        ideal: bool,
    },

    /// Check the generator-count criterion for sdepth >= d+1 on an ideal
    VerifyTheorem { input: String },

    /// Macaulay representation of x with respect to k, and its shadow size
    Macaulay {
        x: u64,
        k: u32,
        /// Also order x against this value through the coefficient tuples
        #[arg(long)]
        compare: Option<u64>,
    },

    /// The collapsibility threshold xi(delta)
    Xi { delta: u32 },

    /// The generator-count bound min(C(n,d+1), xi(n-d)) for degree-d ideals
    Bound { n: u32, d: u32 },

    /// Emit a named family: veronese N D | compressed N D L | not-uc N DELTA
    /// | padded N DELTA | cycle-chord N
    Gen { name: String, params: Vec<u64> },

    /// Exact Stanley depth of the Veronese ideal vs the conjectured bound
    ProbeConjecture { n: u32, d: u32 },

    /// Exhaustive search for complexes with enough ridges that still fail to
    /// collapse uniformly
    ProbeStar { n: u32, delta: u32 },

    /// Exhaustive search for minimal ideals stuck at their generating degree
    ProbeXiMin { n: u32, d: u32 },

    /// f-vector of a complex (of the complement complex for ideal input)
    Fvector { input: String },

    /// Verify a certificate or partition witness against an input file
    Check { input: String, certificate: String },
}

/// Ordered key-value output for `--format=machine`; key order is stable
/// across runs.
struct Report {
    pairs: Vec<(String, String)>,
}

impl Report {
    fn new() -> Self {
        Report { pairs: Vec::new() }
    }

    fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.pairs.push((key.into(), value.to_string()));
    }

    fn print(&self) {
        for (k, v) in &self.pairs {
            println!("{k} = {v}");
        }
    }
}

pub fn run(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit(_) => 3,
                _ => 2,
            }
        }
    }
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidArgument(format!("cannot read standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))
    }
}

fn input_as_ideal(input: Input) -> MonomialIdeal {
    match input {
        Input::Ideal(i) => i,
        Input::Complex(c) => c.complement_ideal(),
    }
}

fn input_as_complex(input: Input) -> SimplicialComplex {
    match input {
        Input::Ideal(i) => i.complement_complex(),
        Input::Complex(c) => c,
    }
}

fn certificate_report(report: &mut Report, cert: &CollapseCertificate) {
    match cert {
        CollapseCertificate::Sdr(entries) => {
            report.push("certificate.kind", "sdr");
            report.push("certificate.entries", entries.len());
            for (i, (facet, v)) in entries.iter().enumerate() {
                report.push(format!("certificate.sdr.{i}"), format!("{facet} drop {v}"));
            }
        }
        CollapseCertificate::Violator(facets) => {
            report.push("certificate.kind", "violator");
            report.push("certificate.entries", facets.len());
            for (i, f) in facets.iter().enumerate() {
                report.push(format!("certificate.violator.{i}"), f);
            }
        }
    }
}

fn execute(cli: Cli) -> Result<i32> {
    let budget = cli.budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let machine = cli.format == OutputFormat::Machine;

    match cli.command {
        Command::Sdepth { input } => {
            let ideal = input_as_ideal(parse_input(&read_source(&input)?)?);
            let (value, witness) = stanley_depth_with_budget(&ideal, budget)?;
            if machine {
                let mut r = Report::new();
                r.push("n", ideal.n());
                r.push("mu", ideal.mu());
                r.push("min_degree", ideal.min_degree());
                r.push("sdepth", value);
                r.push("witness.intervals", witness.len());
                for (i, (a, b)) in witness.intervals().iter().enumerate() {
                    r.push(format!("witness.interval.{i}"), format!("{a} -> {b}"));
                }
                r.print();
            } else {
                println!("{value}");
                if cli.verbose > 0 {
                    print!("{witness}");
                }
            }
            Ok(0)
        }

        Command::Collapsible { input, ideal } => {
            let parsed = parse_input(&read_source(&input)?)?;
            if ideal && matches!(parsed, Input::Complex(_)) {
                return Err(Error::InvalidArgument(
                    "--ideal requires an ideal file, found `complex` header".into(),
                ));
            }
            let complex = input_as_complex(parsed);
            let (collapsible, cert) = is_uniformly_collapsible(&complex)?;
            if machine {
                let mut r = Report::new();
                r.push("n", complex.n());
                r.push("facets", complex.facet_count());
                r.push("collapsible", collapsible);
                certificate_report(&mut r, &cert);
                r.print();
            } else {
                print!("{}", cert.render());
            }
            Ok(if collapsible { 0 } else { 1 })
        }

        Command::VerifyTheorem { input } => {
            let ideal = input_as_ideal(parse_input(&read_source(&input)?)?);
            let report = verify_main_theorem(&ideal)?;
            if machine {
                let mut r = Report::new();
                r.push("n", report.n);
                r.push("d", report.d);
                r.push("mu_d", report.mu_d);
                r.push("bound", report.bound);
                if let Some(branch) = report.bound_branch {
                    r.push("bound.branch", branch);
                }
                r.push("hypothesis_met", report.hypothesis_met);
                r.push("collapsible", report.collapsible);
                r.push("consistent", report.consistent());
                if let Some(cert) = &report.certificate {
                    certificate_report(&mut r, cert);
                }
                r.print();
            } else {
                println!("n = {}, d = {}, mu_d = {}", report.n, report.d, report.mu_d);
                match report.bound_branch {
                    Some(branch) => println!("bound = {} [{branch}]", report.bound),
                    None => println!("bound = {}", report.bound),
                }
                if report.hypothesis_met {
                    println!("hypothesis met: sdepth >= {}", report.d + 1);
                } else {
                    println!("hypothesis not met");
                }
                println!(
                    "decision: {}",
                    if report.collapsible {
                        "collapsible"
                    } else {
                        "not collapsible"
                    }
                );
                if let (true, Some(cert)) = (cli.verbose > 0, &report.certificate) {
                    print!("{}", cert.render());
                }
                if !report.consistent() {
                    println!("INCONSISTENT: hypothesis met but decision negative");
                }
            }
            Ok(if report.consistent() { 0 } else { 1 })
        }

        Command::Macaulay { x, k, compare } => {
            let rep = macaulay_rep(x, k)?;
            let shadow = shadow_size(x, k)?;
            let ordering = compare
                .map(|y| crate::combinatorics::compare_by_macaulay(x, y, k))
                .transpose()?;
            let ordering_word = ordering.map(|o| match o {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            });
            if machine {
                let mut r = Report::new();
                r.push("x", x);
                r.push("k", k);
                r.push("rep", &rep);
                let coeffs: Vec<String> = rep.coefficients().iter().map(u64::to_string).collect();
                r.push("coefficients", coeffs.join(" "));
                r.push("lowest_index", rep.lowest_index());
                r.push("shadow", shadow);
                if let (Some(y), Some(word)) = (compare, ordering_word) {
                    r.push("compare.y", y);
                    r.push("compare.order", word);
                }
                r.print();
            } else {
                println!("{x} = {rep}; shadow {shadow}");
                if let (Some(y), Some(word)) = (compare, ordering_word) {
                    println!("coefficient tuples: {x} {word} {y}");
                }
            }
            Ok(0)
        }

        Command::Xi { delta } => {
            let value = xi(delta)?;
            if machine {
                let mut r = Report::new();
                r.push("delta", delta);
                r.push("xi", value);
                r.print();
            } else {
                println!("{value}");
            }
            Ok(0)
        }

        Command::Bound { n, d } => {
            if d >= n {
                return Err(Error::InvalidArgument(format!(
                    "bound needs 1 <= d < n, got n={n}, d={d}"
                )));
            }
            let delta = n - d;
            let (value, branch) = min_bound(n, delta)?;
            if machine {
                let mut r = Report::new();
                r.push("n", n);
                r.push("d", d);
                r.push("delta", delta);
                r.push(
                    "binom",
                    crate::combinatorics::binomial(n as u64, d as u64 + 1)?,
                );
                r.push("xi", xi(delta)?);
                r.push("bound", value);
                r.push("branch", branch);
                r.print();
            } else {
                println!("{value} [{branch}]");
            }
            Ok(0)
        }

        Command::Gen { name, params } => {
            let arg = |i: usize| -> Result<u64> {
                params.get(i).copied().ok_or_else(|| {
                    Error::InvalidArgument(format!("gen {name}: missing parameter {}", i + 1))
                })
            };
            let small = |i: usize| -> Result<u32> {
                u32::try_from(arg(i)?).map_err(|_| {
                    Error::InvalidArgument(format!("gen {name}: parameter {} too large", i + 1))
                })
            };
            let text = match name.as_str() {
                "veronese" => render_ideal(&gen_veronese(small(0)?, small(1)?)?),
                "compressed" => render_ideal(&gen_compressed_ideal(small(0)?, small(1)?, arg(2)?)?),
                "not-uc" => render_complex(&gen_not_uc(small(0)?, small(1)?)?),
                "padded" => render_complex(&gen_padded_counterexample(small(0)?, small(1)?)?),
                "cycle-chord" => render_complex(&gen_cycle_with_chord(small(0)?)?),
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown family `{other}` (expected veronese, compressed, not-uc, padded, cycle-chord)"
                    )))
                }
            };
            print!("{text}");
            Ok(0)
        }

        Command::ProbeConjecture { n, d } => {
            let report = probe_conjecture(n, d, budget)?;
            if machine {
                let mut r = Report::new();
                r.push("n", report.n);
                r.push("d", report.d);
                r.push("exact", report.exact);
                r.push("conjectured_lower", report.conjectured_lower);
                if let Some(u) = report.veronese_upper {
                    r.push("veronese_upper", u);
                }
                r.push("holds", report.holds());
                r.push("tight", report.tight());
                r.print();
            } else {
                println!(
                    "sdepth = {}, conjectured lower bound = {}, upper bound = {}",
                    report.exact,
                    report.conjectured_lower,
                    report
                        .veronese_upper
                        .map_or_else(|| "-".to_string(), |u| u.to_string()),
                );
                println!(
                    "conjecture {} here{}",
                    if report.holds() { "holds" } else { "FAILS" },
                    if report.tight() { " with equality" } else { "" }
                );
            }
            Ok(0)
        }

        Command::ProbeStar { n, delta } => {
            let report = probe_star(n, delta)?;
            if machine {
                let mut r = Report::new();
                r.push("n", report.n);
                r.push("delta", report.delta);
                r.push("families_checked", report.families_checked);
                r.push("property_holds", report.property_holds());
                r.push("counterexamples", report.counterexample_count);
                for (i, family) in report.counterexamples.iter().enumerate() {
                    for (j, f) in family.iter().enumerate() {
                        r.push(format!("counterexample.{i}.facet.{j}"), f);
                    }
                }
                r.print();
            } else {
                println!(
                    "checked {} pure complexes on [{}] at facet size {}",
                    report.families_checked, report.n, report.delta
                );
                if report.property_holds() {
                    println!("property holds: every complex with enough ridges collapses");
                } else {
                    println!(
                        "{} counterexamples; first witnesses:",
                        report.counterexample_count
                    );
                    for family in &report.counterexamples {
                        let sets: Vec<String> = family.iter().map(|f| format!("{{{f}}}")).collect();
                        println!("  {}", sets.join(" "));
                    }
                }
            }
            Ok(0)
        }

        Command::ProbeXiMin { n, d } => {
            let report = probe_xi_minimal(n, d)?;
            if machine {
                let mut r = Report::new();
                r.push("n", report.n);
                r.push("d", report.d);
                r.push("families_checked", report.families_checked);
                r.push("minimal_count", report.minimal_count);
                r.push("xi_plus_one", xi(n - d)? + 1);
                if let Some(m) = report.mu_max {
                    r.push("mu_max", m);
                }
                if let Some(m) = report.mu_min {
                    r.push("mu_min", m);
                }
                if let Some(w) = &report.witness {
                    for (i, g) in w.iter().enumerate() {
                        r.push(format!("witness.{i}"), g);
                    }
                }
                r.print();
            } else {
                println!(
                    "checked {} pure degree-{} ideals on [{}]: {} minimal stuck ideals",
                    report.families_checked, report.d, report.n, report.minimal_count
                );
                if let (Some(max), Some(min)) = (report.mu_max, report.mu_min) {
                    println!(
                        "mu range over minimal ideals: {min}..={max} (threshold + 1 = {})",
                        xi(n - d)? + 1
                    );
                }
                if let Some(w) = &report.witness {
                    let gens: Vec<String> = w.iter().map(|g| format!("{{{g}}}")).collect();
                    println!("largest witness: {}", gens.join(" "));
                }
            }
            Ok(0)
        }

        Command::Fvector { input } => {
            let complex = input_as_complex(parse_input(&read_source(&input)?)?);
            let f = complex.f_vector();
            if machine {
                let mut r = Report::new();
                r.push("n", complex.n());
                r.push("dim", f.dim());
                for (i, c) in f.entries().iter().enumerate() {
                    r.push(format!("f.{}", i as i64 - 1), c);
                }
                r.print();
            } else {
                println!("{f}");
            }
            Ok(0)
        }

        Command::Check { input, certificate } => {
            let parsed = parse_input(&read_source(&input)?)?;
            let cert = parse_certificate(&read_source(&certificate)?)?;
            let (kind, valid) = match cert {
                Certificate::Collapse(c) => {
                    let complex = input_as_complex(parsed);
                    let kind = if c.is_collapsible() {
                        "sdr"
                    } else {
                        "violator"
                    };
                    (kind, verify_certificate(&complex, &c)?)
                }
                Certificate::Partition(p) => {
                    let ideal = input_as_ideal(parsed);
                    let valid = match p.intervals().first() {
                        None => false,
                        Some((_, top)) => {
                            let cap = top.cardinality();
                            match build_reduced_poset(&ideal, cap) {
                                Ok(poset) => verify_partition(&poset, &p),
                                Err(_) => false,
                            }
                        }
                    };
                    ("partition", valid)
                }
            };
            if machine {
                let mut r = Report::new();
                r.push("kind", kind);
                r.push("valid", valid);
                r.print();
            } else {
                println!("{kind}: {}", if valid { "valid" } else { "invalid" });
            }
            Ok(if valid { 0 } else { 1 })
        }
    }
}
