//! `gltilt`: configuration checks, tilting reports, squid quivers and grid
//! demos from the command line.
//!
//! Exit status is 0 when the requested check passes, 1 when it fails for a
//! mathematical reason and 2 on bad input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gltilt::cohp1::{P1Sheaf, Point};
use gltilt::exactla::{Field, FieldSpec, PrimeField, Rationals, RootFinding};
use gltilt::geom::{canonical_class, cohomology_table, validate_snc, PicClass, SncConfig};
use gltilt::gridcat::checks::recollement_check;
use gltilt::gridcat::functors::{iota_lambda, pi};
use gltilt::gridcat::random::random_grid;
use gltilt::gridcat::{CategoryDriver, CohP1Driver, DirectionKind, FinDimDriver, GridShape};
use gltilt::quivalg::{linear_quiver, AlgebraPresentation};
use gltilt::squid::{build_pd_squid, emit, end_dim_crosscheck, SquidSpec};
use gltilt::tiltcheck::{assemble_tilting, auto_twist, default_family, tilting_report, TiltingFamily};
use gltilt::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "gltilt", version, about = "Tilting checks for weighted normal-crossing configurations")]
struct Cli {
    /// Ground field: `rational` (or `q`), or a prime such as `p101`.
    #[arg(long, global = true, default_value = "rational")]
    field: String,
    /// Output format: `dot` or `json` for quivers, `text` or `json` for
    /// reports.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Checks the normal-crossing conditions of a configuration.
    Validate { config: PathBuf },
    /// Cohomology dimensions of line bundles on the configuration's variety.
    Cohom {
        config: PathBuf,
        /// A Picard class such as `2` or `1,-1`; repeatable. Defaults to
        /// `O`, the divisor classes and the canonical class.
        #[arg(long = "class", allow_hyphen_values = true)]
        classes: Vec<String>,
    },
    /// Evaluates both tilting conditions and prints the report.
    Check(FamilyArgs),
    /// Lists the summands of the assembled tilting bundle.
    Assemble(FamilyArgs),
    /// Emits the squid quiver of a configuration of hyperplanes.
    Squid { config: PathBuf },
    /// Compares squid block dimensions with Hom dimensions of the summands.
    Crosscheck { config: PathBuf },
    /// Runs the recollement identities on a built-in example.
    Griddemo {
        /// One of `a2-zero`, `a2-identity`, `p1-one-point`, `p1-two-points`.
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(clap::Args, Debug)]
struct FamilyArgs {
    config: PathBuf,
    /// A family file; the default family of the configuration otherwise.
    #[arg(long)]
    family: Option<PathBuf>,
    /// Twist `T_I` by `k`, written `I:k` with `I` a comma-separated list of
    /// 1-based divisor indices (empty for the ambient variety); repeatable.
    #[arg(long = "shift", allow_hyphen_values = true)]
    shifts: Vec<String>,
    /// Raise each `T_I` by the least twist making condition (2) hold, up to
    /// `GLTILT_MAX_TWIST` (default 100).
    #[arg(long)]
    auto_twist: bool,
}

/// Text to print and whether the check passed.
struct Outcome {
    text: String,
    pass: bool,
    note: Option<String>,
}

impl Outcome {
    fn new(text: String, pass: bool) -> Self {
        Outcome { text, pass, note: None }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn load_config(path: &Path) -> Result<SncConfig, Error> {
    SncConfig::parse(&read(path)?)
}

fn parse_class(s: &str) -> Result<PicClass, Error> {
    s.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad class {s:?}")))).collect()
}

fn parse_shift(s: &str) -> Result<(Vec<usize>, i64), Error> {
    let bad = || Error::Parse(format!("bad shift {s:?}, expected I:k such as 1,2:-3 or :-3"));
    let (i, k) = s.rsplit_once(':').ok_or_else(bad)?;
    let k = k.trim().parse::<i64>().map_err(|_| bad())?;
    let mut set = Vec::new();
    for x in i.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let j = x.parse::<usize>().map_err(|_| bad())?;
        if j == 0 {
            return Err(bad());
        }
        set.push(j - 1);
    }
    set.sort_unstable();
    set.dedup();
    Ok((set, k))
}

fn max_twist() -> Result<i64, Error> {
    match std::env::var("GLTILT_MAX_TWIST") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("GLTILT_MAX_TWIST={v:?} is not an integer"))),
        Err(_) => Ok(100),
    }
}

fn family(cfg: &SncConfig, args: &FamilyArgs) -> Result<TiltingFamily, Error> {
    let mut fam = match &args.family {
        Some(p) => TiltingFamily::parse(&read(p)?)?,
        None => default_family(cfg)?,
    };
    for s in &args.shifts {
        let (i, k) = parse_shift(s)?;
        if fam.get(&i).is_none() {
            return Err(Error::InvalidInput(format!("the family has no bundle at {s:?}")));
        }
        fam = fam.shifted(&i, k);
    }
    if args.auto_twist {
        fam = auto_twist(cfg, &fam, max_twist()?)?;
    }
    Ok(fam)
}

fn wants_json(format: Option<&str>) -> Result<bool, Error> {
    match format {
        None | Some("text") => Ok(false),
        Some("json") => Ok(true),
        Some(other) => Err(Error::InvalidInput(format!("unknown format {other}, expected text or json"))),
    }
}

fn validate(config: &Path) -> Result<Outcome, Error> {
    let v = validate_snc(&load_config(config)?);
    Ok(Outcome::new(serde_json::to_string_pretty(&v)?, v.valid))
}

fn cohom(config: &Path, classes: &[String]) -> Result<Outcome, Error> {
    let cfg = load_config(config)?;
    let v = cfg.variety;
    v.validate()?;
    let classes: Vec<PicClass> = if classes.is_empty() {
        let mut out = vec![vec![0; v.picard_rank()]];
        for x in &cfg.divisors {
            if !out.contains(&x.class) {
                out.push(x.class.clone());
            }
        }
        out.push(canonical_class(&v));
        out
    } else {
        classes.iter().map(|s| parse_class(s)).collect::<Result<_, _>>()?
    };
    let mut rows = Vec::new();
    for c in &classes {
        v.check_class(c)?;
        let h = cohomology_table(&v, c)?;
        let chi: i64 = h.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        rows.push(json!({ "class": c, "h": h, "chi": chi }));
    }
    let out = json!({ "variety": v.display(), "classes": rows });
    Ok(Outcome::new(serde_json::to_string_pretty(&out)?, true))
}

fn check(args: &FamilyArgs) -> Result<Outcome, Error> {
    let cfg = load_config(&args.config)?;
    let fam = family(&cfg, args)?;
    let r = tilting_report(&cfg, &fam)?;
    let note = if let Some(c) = r.first_failure() {
        Some(format!("condition (2) fails at I={:?}, J={:?}, i={}: dimension {}", c.i, c.j, c.degree, c.dim))
    } else {
        r.conditions1
            .iter()
            .find(|c| !c.injective)
            .map(|c| format!("condition (1) fails at I={:?}, J={:?}, j={}: {}", c.i, c.j, c.divisor, c.reason))
    };
    Ok(Outcome { text: r.to_json(), pass: r.pass, note })
}

fn assemble(args: &FamilyArgs) -> Result<Outcome, Error> {
    let cfg = load_config(&args.config)?;
    let fam = family(&cfg, args)?;
    match assemble_tilting(&cfg, &fam) {
        Ok(s) => {
            let out = json!({ "total": s.len(), "summands": s });
            Ok(Outcome::new(serde_json::to_string_pretty(&out)?, true))
        }
        Err(Error::Precondition(msg)) => Ok(Outcome { text: String::new(), pass: false, note: Some(msg) }),
        Err(e) => Err(e),
    }
}

fn squid_spec(config: &Path) -> Result<SquidSpec, Error> {
    let spec = SquidSpec::from_config(&load_config(config)?)?;
    spec.validate()?;
    Ok(spec)
}

fn squid<F: Field>(field: &F, config: &Path, format: Option<&str>) -> Result<Outcome, Error> {
    let format = format.unwrap_or("dot").parse()?;
    let q = build_pd_squid(field, &squid_spec(config)?)?;
    Ok(Outcome::new(emit(&q, format), true))
}

fn crosscheck<F: RootFinding>(field: &F, config: &Path, format: Option<&str>) -> Result<Outcome, Error> {
    let json = wants_json(format)?;
    let r = end_dim_crosscheck(field, &squid_spec(config)?)?;
    let text = if json {
        let mut v = serde_json::to_value(&r)?;
        v["pass"] = json!(r.passed());
        serde_json::to_string_pretty(&v)?
    } else {
        r.to_string().trim_end().to_string()
    };
    Ok(Outcome::new(text, r.passed()))
}

fn demo_suite<D: CategoryDriver>(
    d: &D,
    base: &[D::Obj],
    weights: &[usize],
    seed: u64,
    json: bool,
) -> Result<Outcome, Error> {
    let field = d.field().clone();
    let coeff = |r: &mut ChaCha8Rng| field.from_i64(r.gen_range(-3..=3));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = GridShape::weighted(weights);
    let mut text = String::new();
    let mut records = Vec::new();
    let mut pass = true;
    for i in 0..weights.len() {
        let x = random_grid(d, &shape, base, &mut rng, coeff)?;
        let m = pi(d, &random_grid(d, &shape, base, &mut rng, coeff)?, i)?;
        let n = iota_lambda(d, &random_grid(d, &shape, base, &mut rng, coeff)?, i)?;
        let r = recollement_check(d, &x, i, &m, &n)?;
        pass &= r.all();
        let checks = [
            ("inputs are valid grids", r.valid_inputs),
            ("pi iota = 0", r.pi_iota_zero),
            ("pi pi_rho = id", r.pi_pi_rho_identity),
            ("iota_lambda iota = id", r.iota_lambda_iota_identity),
            ("Hom(pi_lambda M, X) = Hom(M, pi X)", r.adj_pi_lambda),
            ("Hom(X, pi_rho M) = Hom(pi X, M)", r.adj_pi_rho),
            ("Hom(iota_lambda X, N) = Hom(X, iota N)", r.adj_iota_lambda),
            ("Hom(iota N, X) = Hom(N, iota_rho X)", r.adj_iota_rho),
            ("unit and counit kernels and cokernels", r.unit_counit),
        ];
        if json {
            records.push(json!({
                "direction": i + 1,
                "x": x.to_json(d),
                "checks": checks.iter().map(|(k, v)| json!({ "identity": k, "holds": v })).collect::<Vec<_>>(),
            }));
        } else {
            writeln!(text, "direction {} of {:?}", i + 1, weights).unwrap();
            writeln!(text, "  X = {}", x.to_json(d)).unwrap();
            for (k, v) in checks {
                writeln!(text, "  {:<40} {}", k, if v { "ok" } else { "FAIL" }).unwrap();
            }
        }
    }
    if json {
        text = serde_json::to_string_pretty(
            &json!({ "weights": weights, "seed": seed, "directions": records, "pass": pass }),
        )?;
    }
    Ok(Outcome::new(text.trim_end().to_string(), pass))
}

fn p1_demo<F: RootFinding>(field: &F, points: usize, seed: u64, json: bool) -> Result<Outcome, Error> {
    let pts = (0..points).map(|k| Point::affine(field, field.from_i64(k as i64))).collect();
    let d = CohP1Driver::new(field.clone(), pts)?;
    let mut base: Vec<_> = (-1..=2).map(P1Sheaf::line).collect();
    base.extend(d.points.iter().map(|p| P1Sheaf::skyscraper(p.clone(), 1)));
    let weights = if points == 1 { vec![3] } else { vec![2, 3] };
    demo_suite(&d, &base, &weights, seed, json)
}

fn a2_demo<F: Field>(field: &F, kind: DirectionKind, seed: u64, json: bool) -> Result<Outcome, Error> {
    let d = FinDimDriver::new(AlgebraPresentation::free(field.clone(), linear_quiver(2)), vec![kind])?;
    let a = &d.algebra;
    let base = vec![a.simple(0), a.simple(1), a.projective(0), a.projective(1)];
    demo_suite(&d, &base, &[3], seed, json)
}

fn griddemo<F: RootFinding>(field: &F, name: &str, seed: u64, format: Option<&str>) -> Result<Outcome, Error> {
    let json = wants_json(format)?;
    match name {
        "a2-zero" => a2_demo(field, DirectionKind::Zero, seed, json),
        "a2-identity" => a2_demo(field, DirectionKind::Identity, seed, json),
        "p1-one-point" => p1_demo(field, 1, seed, json),
        "p1-two-points" => p1_demo(field, 2, seed, json),
        other => Err(Error::InvalidInput(format!(
            "unknown demo {other}, expected a2-zero, a2-identity, p1-one-point or p1-two-points"
        ))),
    }
}

fn run_with<F: RootFinding>(field: &F, cli: &Cli) -> Result<Outcome, Error> {
    let format = cli.format.as_deref();
    match &cli.command {
        Command::Validate { config } => validate(config),
        Command::Cohom { config, classes } => cohom(config, classes),
        Command::Check(args) => check(args),
        Command::Assemble(args) => assemble(args),
        Command::Squid { config } => squid(field, config, format),
        Command::Crosscheck { config } => crosscheck(field, config, format),
        Command::Griddemo { name, seed } => griddemo(field, name, *seed, format),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match cli.field.parse::<FieldSpec>()? {
        FieldSpec::Rationals => run_with(&Rationals, cli),
        FieldSpec::Prime { q } => run_with(&PrimeField::new(q)?, cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if !outcome.text.is_empty() {
        let text = format!("{}\n", outcome.text);
        match &cli.out {
            Some(p) => {
                if let Err(e) = std::fs::write(p, text) {
                    eprintln!("error: cannot write {}: {e}", p.display());
                    return ExitCode::from(2);
                }
            }
            None => print!("{text}"),
        }
    }
    if let Some(note) = &outcome.note {
        eprintln!("{note}");
    }
    if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifts_parse() {
        assert_eq!(parse_shift(":-3").unwrap(), (vec![], -3));
        assert_eq!(parse_shift("2,1:4").unwrap(), (vec![0, 1], 4));
        assert!(parse_shift("0:1").is_err());
        assert!(parse_shift("1").is_err());
    }

    #[test]
    fn classes_parse() {
        assert_eq!(parse_class("1,-2").unwrap(), vec![1, -2]);
        assert!(parse_class("x").is_err());
    }
}
