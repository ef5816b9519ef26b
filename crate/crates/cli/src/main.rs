mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use macsym_core::charmap::{self, CharData, ClassData};
use macsym_core::macdonald::{self, MacKind};
use macsym_core::partitions::{parse_partition, partitions_of};
use macsym_core::positivity::{self, ScanResult};
use macsym_core::ratfunc::parse_rational;
use macsym_core::spherical::{self, Route, UnipotentCoset};
use macsym_core::symfunc::{BasisLabel, FamilyKind, FamilyLabel, PartitionFn};
use macsym_core::{cache, Binding, Partition, RatQT, SymFunc};
use num_rational::BigRational;
use output::{emit, Cell, Format, Record};

#[derive(Parser)]
#[command(name = "macsym", version, about = "Exact Macdonald / Hall-Littlewood / Green computations and the GL(2n,q)/Sp(2n,q) characteristic map")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Table cache file.
    #[arg(long, global = true, env = "MACSYM_CACHE")]
    cache: Option<PathBuf>,
    /// Ignore the cache file entirely.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Worker threads for scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Macdonald P, Q or J expanded in a basis.
    Macdonald(MacdonaldArgs),
    /// Green polynomials Q_ρ^μ(t).
    Green(GreenArgs),
    /// Class, character and coset data.
    Charmap(CharmapArgs),
    /// Spherical function values on unipotent cosets.
    Spherical {
        #[command(subcommand)]
        action: SphericalAction,
    },
    /// Non-negativity scan of C_{λ/μ}^ν(q,q²).
    Positivity {
        #[command(subcommand)]
        action: ScanAction,
    },
    /// Littlewood-Richardson vanishing criterion scan.
    Vanishing {
        #[command(subcommand)]
        action: ScanAction,
    },
    /// Haglund-type polynomiality certificates.
    Haglund {
        #[command(subcommand)]
        action: HaglundAction,
    },
    /// Inspect or manage the table cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MacFamily {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "J")]
    J,
}

#[derive(Args)]
struct MacdonaldArgs {
    #[arg(value_enum)]
    kind: MacFamily,
    /// Partition as a JSON array.
    #[arg(long)]
    lambda: String,
    /// Target basis: m, e, h, p, s, P, Q, J.
    #[arg(long, default_value = "m")]
    basis: String,
    /// qt, q,q2, q2,q or hl.
    #[arg(long, default_value = "qt")]
    binding: String,
    /// Evaluate coefficients at this rational q.
    #[arg(long, visible_alias = "eval-q")]
    q: Option<String>,
}

#[derive(Args)]
struct GreenArgs {
    /// All degrees up to this one.
    #[arg(long, visible_alias = "n", default_value_t = 3)]
    max_n: usize,
    /// Restrict to one ρ (JSON array).
    #[arg(long)]
    rho: Option<String>,
    /// Restrict to one μ (JSON array).
    #[arg(long)]
    mu: Option<String>,
    /// Also evaluate results at this rational q.
    #[arg(long, visible_alias = "eval-q")]
    q: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharmapWhat {
    ClassSize,
    Centralizer,
    Dim,
    CosetSize,
    Counts,
    GlIndicator,
    SpIndicator,
    Spherical,
    Dl,
}

#[derive(Args)]
struct CharmapArgs {
    #[arg(value_enum)]
    what: CharmapWhat,
    /// Class data: JSON object family -> partition, or an array for f1.
    #[arg(long)]
    mu: Option<String>,
    /// Character data: JSON object family -> partition, or an array for triv.
    #[arg(long)]
    lambda: Option<String>,
    /// Output basis for symmetric-function results.
    #[arg(long, default_value = "p")]
    basis: String,
    /// Also evaluate results at this rational q.
    #[arg(long, visible_alias = "eval-q")]
    q: Option<String>,
    /// For counts: weights 1..=max-n.
    #[arg(long, visible_alias = "n", default_value_t = 3)]
    max_n: usize,
    /// For counts: comma-separated prime powers; --q overrides.
    #[arg(long, default_value = "3,5")]
    qs: String,
}

#[derive(Subcommand)]
enum SphericalAction {
    Value(SphericalArgs),
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum RouteArg {
    A,
    B,
    C,
    All,
}

#[derive(Args)]
struct SphericalArgs {
    #[arg(long)]
    lambda: String,
    /// identity, transvection or unipotent:<json-partition>.
    #[arg(long, default_value = "identity")]
    coset: String,
    #[arg(long, value_enum, default_value = "a")]
    route: RouteArg,
    /// Also evaluate results at this rational q.
    #[arg(long, visible_alias = "eval-q")]
    q: Option<String>,
}

#[derive(Subcommand)]
enum ScanAction {
    Scan(ScanArgs),
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Largest |μ|; defaults to max-n.
    #[arg(long)]
    max_mu: Option<usize>,
    #[arg(long, default_value = "3,5,7,9")]
    qs: String,
    /// Write records here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum HaglundAction {
    Scan(ScanArgs),
    Check {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "[]")]
        mu: String,
        #[arg(long)]
        nu: String,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Path, version and number of tables in the cache file.
    Info,
    /// Delete the cache file.
    Clear,
    /// Build tables up to a degree and store them.
    Warm {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

enum Failure {
    Usage(String),
    Falsified,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<macsym_core::Error> for Failure {
    fn from(e: macsym_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn usage(flag: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("invalid value for --{flag}: {e}"))
}

fn part_cell(p: &Partition) -> Cell {
    Cell::Json(serde_json::json!(p.parts()))
}

fn flag_partition(flag: &str, s: &str) -> Result<Partition, Failure> {
    parse_partition(s).map_err(|e| usage(flag, e))
}

/// A JSON object keyed by family, or a bare array for the default family.
fn flag_partition_fn(flag: &str, s: &str, kind: FamilyKind) -> Result<PartitionFn, Failure> {
    if s.trim_start().starts_with('[') {
        let p = flag_partition(flag, s)?;
        let fam = match kind {
            FamilyKind::M => FamilyLabel::f1(),
            FamilyKind::L => FamilyLabel::triv(),
        };
        return Ok(PartitionFn::single(fam, p));
    }
    PartitionFn::parse(s, kind).map_err(|e| usage(flag, e))
}

fn flag_q(s: &Option<String>) -> Result<Option<BigRational>, Failure> {
    s.as_deref()
        .map(|x| parse_rational(x).map_err(|e| usage("q", e)))
        .transpose()
}

fn flag_qs(s: &str) -> Result<Vec<BigRational>, Failure> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| parse_rational(x).map_err(|e| usage("qs", e)))
        .collect()
}

fn flag_binding(s: &str) -> Result<Binding, Failure> {
    Binding::parse(s).map_err(|e| usage("binding", e))
}

fn flag_basis(s: &str, binding: &Binding) -> Result<BasisLabel, Failure> {
    BasisLabel::parse(s, binding).map_err(|e| usage("basis", e))
}

fn flag_coset(s: &str, n: usize) -> Result<UnipotentCoset, Failure> {
    match s {
        "identity" => Ok(UnipotentCoset::identity(n)),
        "transvection" => UnipotentCoset::transvection(n).map_err(|e| usage("coset", e)),
        other => {
            let json = other
                .strip_prefix("unipotent:")
                .ok_or_else(|| usage("coset", format!("unknown coset {other:?}")))?;
            Ok(UnipotentCoset::new(flag_partition("coset", json)?))
        }
    }
}

fn eval_cell(r: &RatQT, q: &Option<BigRational>) -> Result<Option<Cell>, Failure> {
    match q {
        None => Ok(None),
        Some(q0) => Ok(Some(Cell::Text(r.eval_q(q0)?.to_string()))),
    }
}

fn with_eval(rec: Record, r: &RatQT, q: &Option<BigRational>) -> Result<Record, Failure> {
    Ok(match eval_cell(r, q)? {
        Some(c) => rec.with("eval", c),
        None => rec,
    })
}

fn sym_eval(f: &SymFunc, q: &Option<BigRational>) -> Result<Option<Cell>, Failure> {
    let Some(q0) = q else { return Ok(None) };
    let img = RatQT::from_rational(q0);
    let g = f.subst_coeffs(&img, &RatQT::t())?;
    Ok(Some(Cell::Sym(g)))
}

fn run_macdonald(a: &MacdonaldArgs) -> Result<Vec<Record>, Failure> {
    let lam = flag_partition("lambda", &a.lambda)?;
    let b = flag_binding(&a.binding)?;
    let basis = flag_basis(&a.basis, &b)?;
    let kind = match a.kind {
        MacFamily::P => MacKind::P,
        MacFamily::Q => MacKind::Q,
        MacFamily::J => MacKind::J,
    };
    let v = macdonald::mac_in_p(kind, &lam, &b)?.into_iter().collect();
    let f = SymFunc::from_pvec(&FamilyLabel::f1(), &v).to_basis(&basis)?;
    let mut rec = Record::new()
        .with("kind", Cell::Text(format!("{:?}", kind)))
        .with("lambda", part_cell(&lam))
        .with("binding", Cell::Text(a.binding.clone()))
        .with("basis", Cell::Text(a.basis.clone()))
        .with("value", Cell::Sym(f.clone()));
    if let Some(c) = sym_eval(&f, &flag_q(&a.q)?)? {
        rec = rec.with("eval", c);
    }
    Ok(vec![rec])
}

fn run_green(a: &GreenArgs) -> Result<Vec<Record>, Failure> {
    let q = flag_q(&a.q)?;
    let rho = a.rho.as_deref().map(|s| flag_partition("rho", s)).transpose()?;
    let mu = a.mu.as_deref().map(|s| flag_partition("mu", s)).transpose()?;
    let degrees: Vec<usize> = match (&rho, &mu) {
        (Some(r), _) => vec![r.size()],
        (None, Some(m)) => vec![m.size()],
        _ => (1..=a.max_n).collect(),
    };
    let mut out = Vec::new();
    for n in degrees {
        let g = macdonald::green_polynomials(n)?;
        for r in partitions_of(n as i64)? {
            if rho.as_ref().is_some_and(|x| *x != r) {
                continue;
            }
            for m in partitions_of(n as i64)? {
                if mu.as_ref().is_some_and(|x| *x != m) {
                    continue;
                }
                let v = g.get(&r, &m).clone();
                let rec = Record::new()
                    .with("rho", part_cell(&r))
                    .with("mu", part_cell(&m))
                    .with("value", Cell::Rat(v.clone()));
                // Green polynomials live in t; evaluate t at q.
                let rec = match &q {
                    Some(q0) => {
                        let img = RatQT::from_rational(q0);
                        let x = v.subst(&RatQT::q(), &img)?.eval_q(q0)?;
                        rec.with("eval", Cell::Text(x.to_string()))
                    }
                    None => rec,
                };
                out.push(rec);
            }
        }
    }
    if out.is_empty() {
        return Err(usage("rho", "ρ and μ must have the same size"));
    }
    Ok(out)
}

fn need<'a>(flag: &str, v: &'a Option<String>) -> Result<&'a str, Failure> {
    v.as_deref()
        .ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

fn run_charmap(a: &CharmapArgs) -> Result<(Vec<Record>, usize), Failure> {
    let q = flag_q(&a.q)?;
    let class = || -> Result<ClassData, Failure> {
        let mu = flag_partition_fn("mu", need("mu", &a.mu)?, FamilyKind::M)?;
        ClassData::new(mu).map_err(|e| usage("mu", e))
    };
    let chr = || -> Result<CharData, Failure> {
        let lam = flag_partition_fn("lambda", need("lambda", &a.lambda)?, FamilyKind::L)?;
        CharData::new(lam).map_err(|e| usage("lambda", e))
    };
    let scalar = |name: &'static str, key: serde_json::Value, v: RatQT| -> Result<Vec<Record>, Failure> {
        let rec = Record::new()
            .with(name, Cell::Json(key))
            .with("value", Cell::Rat(v.clone()));
        Ok(vec![with_eval(rec, &v, &q)?])
    };
    let basis = flag_basis(&a.basis, &Binding::formal())?;
    let sym = |name: &'static str, key: serde_json::Value, f: SymFunc| -> Result<Vec<Record>, Failure> {
        let f = f.to_basis(&basis)?;
        let mut rec = Record::new()
            .with(name, Cell::Json(key))
            .with("value", Cell::Sym(f.clone()));
        if let Some(c) = sym_eval(&f, &q)? {
            rec = rec.with("eval", c);
        }
        Ok(vec![rec])
    };
    let records = match a.what {
        CharmapWhat::ClassSize => {
            let c = class()?;
            scalar("mu", c.mu.to_json_value(), charmap::class_size(&c))?
        }
        CharmapWhat::Centralizer => {
            let c = class()?;
            scalar("mu", c.mu.to_json_value(), charmap::a_mu(&c))?
        }
        CharmapWhat::CosetSize => {
            let c = class()?;
            scalar("mu", c.mu.to_json_value(), charmap::double_coset_size(&c))?
        }
        CharmapWhat::Dim => {
            let c = chr()?;
            scalar("lambda", c.lambda.to_json_value(), charmap::dim_irreducible(&c)?)?
        }
        CharmapWhat::GlIndicator => {
            let c = class()?;
            sym("mu", c.mu.to_json_value(), charmap::ch_gl_indicator(&c)?)?
        }
        CharmapWhat::SpIndicator => {
            let c = class()?;
            sym("mu", c.mu.to_json_value(), charmap::ch_sp_indicator(&c)?)?
        }
        CharmapWhat::Spherical => {
            let c = chr()?;
            sym("lambda", c.lambda.to_json_value(), charmap::ch_spherical(&c)?)?
        }
        CharmapWhat::Dl => {
            let c = chr()?;
            sym("lambda", c.lambda.to_json_value(), charmap::ch_dl(&c)?)?
        }
        CharmapWhat::Counts => {
            let mut out = Vec::new();
            let mut bad = 0;
            let qs = a.q.as_deref().unwrap_or(&a.qs);
            for q0 in flag_qs(qs)? {
                let q0 = integer_q(&q0)?;
                for n in 1..=a.max_n {
                    let c = charmap::counts(n, q0)?;
                    let ok = c.sum_class_sizes == c.gl_order
                        && c.sum_coset_sizes == c.gl2n_order
                        && c.sum_dim_squares == c.gl_order
                        && c.classes == c.characters;
                    if !ok {
                        bad += 1;
                    }
                    out.push(
                        Record::new()
                            .with("n", Cell::Int(n as i64))
                            .with("q0", Cell::Int(q0 as i64))
                            .with("classes", Cell::Text(c.classes.to_string()))
                            .with("characters", Cell::Text(c.characters.to_string()))
                            .with("gl_order", Cell::Text(c.gl_order.to_string()))
                            .with("sum_class_sizes", Cell::Text(c.sum_class_sizes.to_string()))
                            .with("sum_dim_squares", Cell::Text(c.sum_dim_squares.to_string()))
                            .with("gl2n_order", Cell::Text(c.gl2n_order.to_string()))
                            .with("sum_coset_sizes", Cell::Text(c.sum_coset_sizes.to_string()))
                            .with("consistent", Cell::Bool(ok)),
                    );
                }
            }
            return Ok((out, bad));
        }
    };
    Ok((records, 0))
}

fn integer_q(q0: &BigRational) -> Result<u64, Failure> {
    let s = q0.to_string();
    s.parse::<u64>()
        .ok()
        .filter(|&x| x >= 2)
        .ok_or_else(|| usage("qs", format!("{s} is not a prime power")))
}

fn run_spherical(a: &SphericalArgs) -> Result<(Vec<Record>, usize), Failure> {
    let lam = flag_partition_fn("lambda", &a.lambda, FamilyKind::L)?;
    let ch = CharData::new(lam).map_err(|e| usage("lambda", e))?;
    let coset = flag_coset(&a.coset, ch.n())?;
    if coset.n() != ch.n() {
        return Err(usage(
            "coset",
            format!("coset has weight {} but λ has weight {}", coset.n(), ch.n()),
        ));
    }
    let q = flag_q(&a.q)?;
    let routes: Vec<Route> = match a.route {
        RouteArg::A => vec![Route::A],
        RouteArg::B => vec![Route::B],
        RouteArg::C => {
            if !coset.is_transvection() {
                return Err(usage("route", "route c needs --coset transvection"));
            }
            vec![Route::C]
        }
        RouteArg::All if coset.is_transvection() => vec![Route::A, Route::B, Route::C],
        RouteArg::All => vec![Route::A, Route::B],
    };
    let mut values = Vec::new();
    for r in &routes {
        values.push((*r, spherical::spherical_value(&ch, &coset, *r)?.value));
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let value = values[0].1.clone();
    let mut rec = Record::new()
        .with("lambda", Cell::Json(ch.lambda.to_json_value()))
        .with("coset", Cell::Text(coset.to_string()))
        .with("value", Cell::Rat(value.clone()));
    if routes.len() > 1 {
        for (r, v) in &values {
            let key = match r {
                Route::A => "route_a",
                Route::B => "route_b",
                Route::C => "route_c",
            };
            rec = rec.with(key, Cell::Rat(v.clone()));
        }
        rec = rec.with("agree", Cell::Bool(agree));
    } else {
        rec = rec.with("route", Cell::Text(routes[0].to_string()));
    }
    let rec = with_eval(rec, &value, &q)?;
    Ok((vec![rec], usize::from(!agree)))
}

fn scan_records(r: &ScanResult) -> Vec<Record> {
    r.reports
        .iter()
        .map(|rep| {
            let mut rec = Record::new()
                .with("lambda", part_cell(&rep.lambda))
                .with("mu", part_cell(&rep.mu))
                .with("nu", part_cell(&rep.nu))
                .with("coefficient", Cell::Rat(rep.coefficient.clone()))
                .with(
                    "evaluations",
                    Cell::Json(serde_json::to_value(&rep.evaluations).expect("string map")),
                )
                .with("vanishing_predicted", Cell::Bool(rep.vanishing_predicted));
            if let Some(c) = &rep.haglund_certificate {
                rec = rec.with("haglund_certificate", Cell::Json(serde_json::json!(c)));
            }
            rec
        })
        .collect()
}

fn falsification_records(r: &ScanResult) -> Vec<Record> {
    r.falsifications
        .iter()
        .map(|f| {
            Record::new().with(
                "falsification",
                Cell::Json(serde_json::to_value(f).expect("serializable")),
            )
        })
        .collect()
}

fn write_out(cli: &Cli, out: &Option<PathBuf>, records: &[Record]) -> Outcome {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path).map_err(|e| usage("out", e))?);
            emit(&mut w, cli.format, records)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            emit(&mut w, cli.format, records)?;
        }
    }
    Ok(())
}

fn run_scan(cli: &Cli, which: &str, a: &ScanArgs) -> Outcome {
    let max_mu = a.max_mu.unwrap_or(a.max_n);
    let (result, counts_as_failure) = match which {
        "positivity" => (positivity::positivity_scan(a.max_n, max_mu, &flag_qs(&a.qs)?)?, true),
        "vanishing" => (positivity::vanishing_scan(a.max_n)?, true),
        _ => (positivity::haglund_scan(a.max_n, max_mu)?, false),
    };
    let mut records = scan_records(&result);
    let fals = falsification_records(&result);
    records.extend(fals);
    write_out(cli, &a.out, &records)?;
    if counts_as_failure && !result.falsifications.is_empty() {
        eprintln!("{} falsification(s)", result.falsifications.len());
        return Err(Failure::Falsified);
    }
    Ok(())
}

fn run_haglund_check(lambda: &str, mu: &str, nu: &str) -> Result<Vec<Record>, Failure> {
    let l = flag_partition("lambda", lambda)?;
    let m = flag_partition("mu", mu)?;
    let n = flag_partition("nu", nu)?;
    let cert = positivity::haglund_skew_check(&l, &m, &n)?;
    let cell = match cert {
        Some(v) => Cell::Json(serde_json::json!(v.iter().map(|c| c.to_string()).collect::<Vec<_>>())),
        None => Cell::Json(serde_json::Value::Null),
    };
    Ok(vec![Record::new()
        .with("lambda", part_cell(&l))
        .with("mu", part_cell(&m))
        .with("nu", part_cell(&n))
        .with("haglund_certificate", cell)])
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    if cli.no_cache {
        None
    } else {
        cli.cache.clone()
    }
}

fn run_cache(cli: &Cli, action: &CacheAction) -> Result<Vec<Record>, Failure> {
    let path = cli
        .cache
        .clone()
        .ok_or_else(|| Failure::Usage("missing required flag --cache (or MACSYM_CACHE)".into()))?;
    let shown = Cell::Text(path.display().to_string());
    Ok(match action {
        CacheAction::Info => {
            cache::clear();
            let n = cache::load(&path)?;
            vec![Record::new()
                .with("path", shown)
                .with("version", Cell::Text(cache::CACHE_VERSION.into()))
                .with("tables", Cell::Int(n as i64))]
        }
        CacheAction::Clear => {
            let existed = path.exists();
            if existed {
                std::fs::remove_file(&path).map_err(|e| usage("cache", e))?;
            }
            cache::clear();
            vec![Record::new().with("path", shown).with("removed", Cell::Bool(existed))]
        }
        CacheAction::Warm { max_n } => {
            for n in 1..=*max_n {
                for b in [Binding::formal(), Binding::q_q2(), Binding::new(RatQT::q(), RatQT::q())] {
                    macdonald::table(n, &b)?;
                }
                macdonald::green_polynomials(n)?;
            }
            cache::save(&path)?;
            vec![Record::new()
                .with("path", shown)
                .with("tables", Cell::Int(cache::len() as i64))]
        }
    })
}

fn run(cli: &Cli) -> Outcome {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .map_err(|e| usage("jobs", e))?;
    }
    if let Command::Cache { action } = &cli.command {
        let recs = run_cache(cli, action)?;
        return write_out(cli, &None, &recs);
    }
    let path = cache_path(cli);
    if let Some(p) = &path {
        cache::load(p)?;
    }
    let mut falsified = 0;
    match &cli.command {
        Command::Macdonald(a) => write_out(cli, &None, &run_macdonald(a)?)?,
        Command::Green(a) => write_out(cli, &None, &run_green(a)?)?,
        Command::Charmap(a) => {
            let (recs, bad) = run_charmap(a)?;
            falsified += bad;
            write_out(cli, &None, &recs)?;
        }
        Command::Spherical {
            action: SphericalAction::Value(a),
        } => {
            let (recs, bad) = run_spherical(a)?;
            falsified += bad;
            write_out(cli, &None, &recs)?;
        }
        Command::Positivity {
            action: ScanAction::Scan(a),
        } => run_scan(cli, "positivity", a)?,
        Command::Vanishing {
            action: ScanAction::Scan(a),
        } => run_scan(cli, "vanishing", a)?,
        Command::Haglund { action } => match action {
            HaglundAction::Scan(a) => run_scan(cli, "haglund", a)?,
            HaglundAction::Check { lambda, mu, nu } => {
                write_out(cli, &None, &run_haglund_check(lambda, mu, nu)?)?
            }
        },
        Command::Cache { .. } => unreachable!("handled above"),
    }
    if let Some(p) = &path {
        cache::save(p)?;
    }
    if falsified > 0 {
        return Err(Failure::Falsified);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Falsified) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
