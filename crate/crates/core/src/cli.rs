//! Command-line front end. Every subcommand produces a JSON report with a
//! common envelope and an [`Outcome`] that becomes the exit code.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::exact::parse_rational;
use crate::families::{parameter_grid, polynomial_from_json, run_pipeline, run_pipeline_poly, PipelineConfig};
use crate::galois::{
    galois_evidence, subdirect_products, EvidenceConfig, EvidenceVerdict, SmallGroup, DEFAULT_PRIME_BOUND,
    DEFAULT_SAMPLE_SIZE, DEFAULT_TV_THRESHOLD,
};
use crate::modular::{build_hp, gal_s3_verdict, j_from_tau, S3Verdict};
use crate::permmod::{build_q_module, commutant, CommutantClass};
use crate::poly::{coefficient_strings, DEFAULT_SPLIT_SEED};
use crate::psl2::{
    burnside_pair_orbits, census_json, cycle_type_census, is_ftkl_exceptional, psl2_order, sl2_degree_census,
    GroupDescriptor, GroupFamily,
};
use crate::quadorder::{
    index2_subgroups, random_o_ideal, sweep_csv, two_is_inert, verify_3h, verify_3h_sweep, QuadOrder,
};
use crate::report::{Outcome, SCHEMA_VERSION};
use crate::{Error, Result};

/// Exit code for usage and runtime errors.
pub const ERROR_EXIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "simplejac", version, about = "Exact checks for jacobians with PSL2(F_q) Galois action")]
pub struct Cli {
    /// Seed for every randomized step (polynomial splitting, random ideals).
    #[arg(long, global = true, default_value_t = DEFAULT_SPLIT_SEED)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for prime sampling and sweeps (0: all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct EvidenceArgs {
    #[arg(long, default_value_t = DEFAULT_SAMPLE_SIZE, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    pub sample_size: usize,
    #[arg(long, default_value_t = DEFAULT_TV_THRESHOLD, value_parser = parse_threshold)]
    pub tv_threshold: f64,
    /// Give up if the sample is not complete below this prime.
    #[arg(long, default_value_t = DEFAULT_PRIME_BOUND)]
    pub prime_bound: u64,
}

fn parse_threshold(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err("threshold must lie in (0, 1)".into())
    }
}

fn parse_family(s: &str) -> std::result::Result<GroupFamily, String> {
    Ok(match s.to_ascii_lowercase().as_str() {
        "sp" => GroupFamily::Sp,
        "omegaplus" | "omega+" | "o+" => GroupFamily::OmegaPlus,
        "omegaminus" | "omega-" | "o-" => GroupFamily::OmegaMinus,
        "l" | "psl" => GroupFamily::L,
        "g2" => GroupFamily::G2,
        "psl2" | "l2" => GroupFamily::Psl2,
        "other" => GroupFamily::Other,
        _ => return Err(format!("unknown group family {s:?}")),
    })
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full pipeline on a built-in family member (q = 11 or 13).
    Family {
        #[arg(long)]
        q: u64,
        /// Rational parameter such as 1, -1 or 2/3.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "grid")]
        s: Option<String>,
        /// Run every value of the parameter grid instead of a single `s`.
        #[arg(long, conflicts_with = "s")]
        grid: bool,
        #[command(flatten)]
        evidence: EvidenceArgs,
        #[arg(long, default_value_t = 256)]
        precision_bits: u32,
    },
    /// Frobenius-pattern evidence for a polynomial read from a coefficient file.
    Galois {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        evidence: EvidenceArgs,
        /// Also run every pipeline stage, not only the Galois evidence.
        #[arg(long)]
        pipeline: bool,
    },
    /// Commutant of the mod-2 permutation module of PSL2(F_q).
    Commutant {
        #[arg(long)]
        q: u64,
    },
    /// Class numbers h(-p), h(-4p) for one prime or every prime 3 mod 8 up to a bound.
    Classnum {
        #[arg(long, conflicts_with = "sweep", required_unless_present = "sweep")]
        p: Option<u64>,
        #[arg(long)]
        sweep: Option<u64>,
    },
    /// Index-2 sublattices of O-ideals in Q(sqrt(-p)).
    Quadorder {
        #[arg(long)]
        p: u64,
        /// Number of random O-ideals checked besides O and 2O.
        #[arg(long, default_value_t = 25)]
        random: usize,
        #[arg(long, default_value_t = 100)]
        max_norm: u64,
    },
    /// Certified numerical j((-1 + sqrt(-p))/2).
    Jinv {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 256)]
        precision_bits: u32,
    },
    /// Galois group of the cubic h_p, or of a cubic from a coefficient file.
    S3 {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        p: Option<u64>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 256)]
        precision_bits: u32,
    },
    /// Cycle-type census of PSL2(F_q) on the projective line.
    Census {
        #[arg(long)]
        q: u64,
    },
    /// Whether a group of Lie type lies in the excluded list.
    Ftkl {
        #[arg(long, value_parser = parse_family)]
        group: GroupFamily,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long)]
        q: u64,
        /// Take the commutator subgroup.
        #[arg(long)]
        derived: bool,
    },
    /// Subdirect products of two small groups (C<n>, S<n>, A<n>, D<2n>).
    Goursat {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Family { .. } => "family",
            Self::Galois { .. } => "galois",
            Self::Commutant { .. } => "commutant",
            Self::Classnum { .. } => "classnum",
            Self::Quadorder { .. } => "quadorder",
            Self::Jinv { .. } => "jinv",
            Self::S3 { .. } => "s3",
            Self::Census { .. } => "census",
            Self::Ftkl { .. } => "ftkl",
            Self::Goursat { .. } => "goursat",
        }
    }
}

/// A finished report: the JSON envelope plus an optional plain-text body.
#[derive(Clone, Debug)]
pub struct Report {
    pub outcome: Outcome,
    pub json: Value,
    /// Preferred text rendering; the JSON is rendered generically otherwise.
    pub text: Option<String>,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn envelope(cli: &Cli, outcome: Outcome, result: Value) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "command": cli.command.name(),
        "seed": cli.seed,
        "outcome": outcome,
        "result": result,
    })
}

fn evidence_config(cli: &Cli, args: &EvidenceArgs) -> EvidenceConfig {
    EvidenceConfig {
        sample_size: args.sample_size,
        tv_threshold: args.tv_threshold,
        seed: cli.seed,
        prime_bound: args.prime_bound,
    }
}

fn read_polynomial(path: &PathBuf) -> Result<crate::poly::PolyQ> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    polynomial_from_json(&text)
}

fn evidence_outcome(v: &EvidenceVerdict) -> Outcome {
    match v {
        EvidenceVerdict::Consistent => Outcome::Pass,
        EvidenceVerdict::Inconsistent { .. } => Outcome::Fail,
        EvidenceVerdict::Inconclusive { .. } => Outcome::Inconclusive,
    }
}

fn s3_outcome(v: &S3Verdict) -> Outcome {
    match v {
        S3Verdict::S3 { .. } => Outcome::Pass,
        S3Verdict::C3 { .. } | S3Verdict::Reducible { .. } => Outcome::Fail,
        S3Verdict::Inconclusive { .. } => Outcome::Inconclusive,
    }
}

/// Runs the selected subcommand on a worker pool of `--jobs` threads.
pub fn execute(cli: &Cli) -> Result<Report> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    let (outcome, result, text) = pool.install(|| execute_command(cli))?;
    Ok(Report { outcome, json: envelope(cli, outcome, result), text })
}

type Executed = (Outcome, Value, Option<String>);

fn execute_command(cli: &Cli) -> Result<Executed> {
    match &cli.command {
        Command::Family { q, s, grid, evidence, precision_bits } => {
            let config = PipelineConfig { evidence: evidence_config(cli, evidence), precision_bits: *precision_bits };
            if *grid {
                let reports = parameter_grid()
                    .iter()
                    .map(|s| run_pipeline(*q, s, &config))
                    .collect::<Result<Vec<_>>>()?;
                let outcome = reports.iter().fold(Outcome::Pass, |o, r| o.combine(r.outcome));
                Ok((outcome, json!({ "grid_size": reports.len(), "reports": to_value(&reports) }), None))
            } else {
                let s = parse_rational(s.as_deref().unwrap_or_default())?;
                let r = run_pipeline(*q, &s, &config)?;
                Ok((r.outcome, to_value(&r), None))
            }
        }
        Command::Galois { file, q, evidence, pipeline } => {
            let f = read_polynomial(file)?;
            if *pipeline {
                let config = PipelineConfig { evidence: evidence_config(cli, evidence), ..Default::default() };
                let r = run_pipeline_poly(&f, *q, &config)?;
                return Ok((r.outcome, to_value(&r), None));
            }
            let r = galois_evidence(&f, *q, &evidence_config(cli, evidence))?;
            Ok((evidence_outcome(&r.verdict), to_value(&r), None))
        }
        Command::Commutant { q } => {
            let m = build_q_module(*q)?;
            let c = commutant(&m);
            let f4_expected = *q >= 5 && matches!(q % 8, 3 | 5);
            let ok = !f4_expected || c.classification == CommutantClass::F4;
            let result = json!({
                "q": q,
                "module_dimension": m.dimension,
                "commutant_dimension": c.dimension,
                "classification": c.classification,
                "f4_expected": f4_expected,
                "basis": c.basis,
            });
            Ok((Outcome::from_bool(ok), result, None))
        }
        Command::Classnum { p, sweep } => {
            let rows = match (p, sweep) {
                (Some(p), _) => vec![verify_3h(*p)?],
                (None, Some(bound)) => verify_3h_sweep(*bound)?,
                (None, None) => return Err(Error::Precondition("give --p or --sweep".into())),
            };
            let ok = rows.iter().all(|r| r.ok);
            Ok((Outcome::from_bool(ok), json!({ "rows": rows }), Some(sweep_csv(&rows))))
        }
        Command::Quadorder { p, random, max_norm } => quadorder_report(cli.seed, *p, *random, *max_norm),
        Command::Jinv { p, precision_bits } => {
            let j = j_from_tau(*p, *precision_bits)?;
            let outcome = if j.integer.is_some() { Outcome::Pass } else { Outcome::Inconclusive };
            Ok((outcome, to_value(&j), None))
        }
        Command::S3 { p, file, precision_bits } => {
            let (h, j) = match (p, file) {
                (_, Some(path)) => (read_polynomial(path)?, None),
                (Some(p), None) => {
                    let j = j_from_tau(*p, *precision_bits)?;
                    let Some(alpha) = j.integer_value() else {
                        let result = json!({ "p": p, "j_invariant": j, "verdict": null });
                        return Ok((Outcome::Inconclusive, result, None));
                    };
                    (build_hp(&alpha.into())?, Some(j))
                }
                (None, None) => return Err(Error::Precondition("give --p or --file".into())),
            };
            let v = gal_s3_verdict(&h)?;
            let result = json!({
                "p": p,
                "j_invariant": j,
                "cubic": coefficient_strings(&h),
                "discriminant": crate::exact::format_rational(&h.discriminant()),
                "verdict": v,
            });
            Ok((s3_outcome(&v), result, None))
        }
        Command::Census { q } => {
            let census = cycle_type_census(*q)?;
            let total: u64 = census.values().sum();
            let orbits = burnside_pair_orbits(&census);
            let degrees = sl2_degree_census(*q).ok();
            let degree_checks = degrees.as_ref().map(|d| {
                let sq: u64 = d.iter().map(|x| x * x).sum();
                let min = d.iter().copied().filter(|&x| x > 1).min().unwrap_or(0);
                d.len() as u64 == q + 4 && sq == q * (q * q - 1) && min == (q - 1) / 2
            });
            let ok = total == psl2_order(*q) && orbits == 2 && degree_checks.unwrap_or(true);
            let result = json!({
                "q": q,
                "order": total,
                "expected_order": psl2_order(*q),
                "pair_orbits": orbits,
                "doubly_transitive": orbits == 2,
                "census": census_json(&census),
                "sl2_degrees": degrees,
                "sl2_degree_checks": degree_checks,
            });
            Ok((Outcome::from_bool(ok), result, None))
        }
        Command::Ftkl { group, n, q, derived } => {
            let mut d = GroupDescriptor::new(*group, *n, *q);
            if *derived {
                d = d.derived();
            }
            let exceptional = is_ftkl_exceptional(&d)?;
            let verdict = if exceptional { "exceptional" } else { "not exceptional" };
            let result = json!({ "descriptor": d, "exceptional": exceptional, "verdict": verdict });
            Ok((Outcome::Pass, result, Some(format!("{verdict}\n"))))
        }
        Command::Goursat { g1, g2 } => {
            let (a, b) = (SmallGroup::from_name(g1)?, SmallGroup::from_name(g2)?);
            let products = subdirect_products(&a, &b)?;
            let rows: Vec<Value> = products
                .iter()
                .map(|s| {
                    json!({
                        "order": s.order(),
                        "kernel1_order": s.kernel1_order,
                        "kernel2_order": s.kernel2_order,
                        "quotient_order": s.quotient_order(&a),
                        "full_product": s.is_full_product(&a, &b),
                    })
                })
                .collect();
            let result = json!({
                "g1": { "name": a.name(), "order": a.order() },
                "g2": { "name": b.name(), "order": b.order() },
                "count": rows.len(),
                "subdirect_products": rows,
            });
            Ok((Outcome::Pass, result, None))
        }
    }
}

fn quadorder_report(seed: u64, p: u64, random: usize, max_norm: u64) -> Result<Executed> {
    let inert = two_is_inert(p)?;
    let o = QuadOrder::maximal(p)?.as_ideal();
    let mut ideals = vec![o, o.scale(&crate::quadorder::QuadElement::integer(2))?];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        ideals.push(random_o_ideal(p, max_norm, &mut rng)?);
    }
    let mut rows = Vec::new();
    for a in &ideals {
        let subs = index2_subgroups(a)?;
        rows.push(json!({
            "ideal": a.to_string(),
            "norm": a.covolume().0,
            "subgroups": subs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }));
    }
    let result = json!({
        "p": p,
        "two_inert": inert,
        "ideals_checked": rows.len(),
        "ideals": rows,
    });
    Ok((Outcome::from_bool(inert), result, None))
}

/// Generic text rendering of a JSON report.
pub fn render_text(v: &Value) -> String {
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    match x {
                        Value::Object(_) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            walk(x, indent + 1, out);
                        }
                        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            for item in items {
                                out.push_str(&format!("{pad}  -\n"));
                                walk(item, indent + 2, out);
                            }
                        }
                        _ => out.push_str(&format!("{pad}{k}: {x}\n")),
                    }
                }
            }
            other => out.push_str(&format!("{pad}{other}\n")),
        }
    }
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

fn emit(cli: &Cli, report: &Report) -> Result<()> {
    let body = match cli.format {
        Format::Json => crate::report::to_json(&report.json),
        Format::Text => {
            let head = format!("command: {}\noutcome: {}\n", cli.command.name(), report.outcome);
            match &report.text {
                Some(t) => format!("{head}{t}"),
                None => format!("{head}{}", render_text(&report.json["result"])),
            }
        }
    };
    match &cli.output {
        Some(path) => std::fs::write(path, body).map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// Parses arguments, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ERROR_EXIT } else { 0 };
        }
    };
    match execute(&cli).and_then(|r| emit(&cli, &r).map(|()| r.outcome)) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            ERROR_EXIT
        }
    }
}
