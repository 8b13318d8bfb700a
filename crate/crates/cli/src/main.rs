use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fusion_forge::cohomology::{cyclic_3cocycle, ActionData, Cocycle3};
use fusion_forge::double::{build_double, verify_braided_commutativity, TwistedDoubleSpec};
use fusion_forge::equivariant::{build_category, BuildOptions, EquivariantCategory, SimpleLabel};
use fusion_forge::group::{catalog, FiniteGroup, GroupAction};
use fusion_forge::io::{self, CocycleData};
use fusion_forge::ring::{isomorphic_as_based_rings, FusionRing};
use fusion_forge::{Error, Tolerances};

#[derive(Parser)]
#[command(name = "fusion-forge", version, about = "Fusion rules of equivariantized pointed fusion categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for the randomized irreducible decompositions.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Tolerance for cocycle identities; overrides FUSION_FORGE_TOL.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Print errors as a JSON object on stderr.
    #[arg(long, global = true)]
    error_json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// List the simple objects.
    Simples(Source),
    /// Decompose the product of two simples.
    Fuse {
        #[command(flatten)]
        source: Source,
        /// Left factor, written `(y,i)`.
        a: String,
        /// Right factor, written `(y,i)`.
        b: String,
    },
    /// Emit the full fusion table.
    Table(Source),
    /// Check the ring axioms of a fusion table file.
    Verify {
        /// Fusion table in JSON.
        table: PathBuf,
        /// Also require commutativity.
        #[arg(long)]
        comm: bool,
    },
    /// Fusion table of the twisted double of a group.
    Double {
        #[arg(long)]
        group: PathBuf,
        /// `cyclic:<n>:<q>` or a cocycle3 file.
        #[arg(long)]
        omega: Option<String>,
    },
    /// Run the built-in oracle checks.
    Selftest,
}

#[derive(Args)]
struct Source {
    /// Category bundle: G, Gamma, action and optional omega, tau, sigma.
    #[arg(long, conflicts_with = "group")]
    category: Option<PathBuf>,
    /// A group G; alone it gives Rep G, with --double the twisted double.
    #[arg(long)]
    group: Option<PathBuf>,
    /// With --group, build the twisted double instead of Rep G.
    #[arg(long, requires = "group")]
    double: bool,
    /// `cyclic:<n>:<q>` or a cocycle3 file; only with --double.
    #[arg(long, requires = "double")]
    omega: Option<String>,
}

struct Failure {
    code: u8,
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            ref e if e.is_internal() => 3,
            _ => 1,
        };
        let kind = format!("{e:?}").split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
        Failure { code, kind, message: e.to_string() }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure { code: 2, kind: "Io".into(), message: format!("{}: {e}", path.display()) })
}

struct Ctx {
    seed: u64,
    tol: Tolerances,
}

impl Ctx {
    fn options(&self) -> BuildOptions {
        BuildOptions { seed: self.seed, tol: self.tol, ..BuildOptions::default() }
    }
}

fn omega_for(g: &Arc<FiniteGroup>, spec: Option<&str>) -> Result<Cocycle3, Failure> {
    let Some(spec) = spec else { return Ok(Cocycle3::trivial(g.clone())) };
    if let Some(parsed) = io::parse_cyclic_spec(spec) {
        let (n, q) = parsed?;
        let w = cyclic_3cocycle(n, q);
        if w.group().as_ref() != g.as_ref() {
            return Err(Error::Shape(format!("cyclic:{n}:{q} lives on Z{n}, which is not the given group's table")).into());
        }
        return Ok(w);
    }
    match io::parse_cocycle(&read(Path::new(spec))?, Some(g))? {
        CocycleData::Three(w) => Ok(w),
        _ => Err(Error::Parse(format!("{spec}: expected a cocycle3 file")).into()),
    }
}

fn double_category(ctx: &Ctx, group: &Path, omega: Option<&str>) -> Result<EquivariantCategory, Failure> {
    let g = Arc::new(io::parse_group(&read(group)?)?);
    let w = omega_for(&g, omega)?;
    Ok(build_double(&TwistedDoubleSpec::new(w), &ctx.options())?)
}

fn category(ctx: &Ctx, src: &Source) -> Result<EquivariantCategory, Failure> {
    let data = match (&src.category, &src.group) {
        (Some(path), _) => io::parse_category(&read(path)?)?,
        (None, Some(path)) if src.double => return double_category(ctx, path, src.omega.as_deref()),
        (None, Some(path)) => {
            let g = Arc::new(io::parse_group(&read(path)?)?);
            ActionData::trivial(GroupAction::trivial(g, Arc::new(FiniteGroup::trivial())))?
        }
        (None, None) => return Err(Error::Parse("one of --category or --group is required".into()).into()),
    };
    Ok(build_category(data, &ctx.options())?)
}

fn parse_label(text: &str) -> Result<SimpleLabel, Failure> {
    let bad = || Failure::from(Error::Parse(format!("expected a label like (y,i), got {text:?}")));
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let (y, i) = inner.split_once(',').ok_or_else(bad)?;
    Ok(SimpleLabel { orbit_rep: y.trim().parse().map_err(|_| bad())?, irrep: i.trim().parse().map_err(|_| bad())? })
}

#[derive(Serialize)]
struct SimpleRow {
    label: String,
    orbit: Vec<usize>,
    stabilizer_order: usize,
    factor_set_trivial: bool,
    fpdim: u64,
}

fn simples(cat: &EquivariantCategory, format: Format) -> Result<String, Failure> {
    let mut rows = Vec::new();
    for &s in cat.labels() {
        let o = cat.orbit_of_label(s)?;
        rows.push(SimpleRow {
            label: cat.label_string(s),
            orbit: o.elements.clone(),
            stabilizer_order: o.stabilizer.order(),
            factor_set_trivial: o.factor_set_trivial(),
            fpdim: cat.fpdim(s)?,
        });
    }
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("serializable") + "\n",
        Format::Text => {
            let orbit = |r: &SimpleRow| format!("{:?}", r.orbit);
            let w = rows.iter().map(|r| r.label.len()).max().unwrap_or(5).max(5);
            let wo = rows.iter().map(|r| orbit(r).len()).max().unwrap_or(5).max(5);
            let mut out = format!("{:<w$}  {:<wo$}  {:>4}  {:<7}  {:>5}\n", "label", "orbit", "|Gy|", "trivial", "fpdim");
            for r in &rows {
                out += &format!(
                    "{:<w$}  {:<wo$}  {:>4}  {:<7}  {:>5}\n",
                    r.label,
                    orbit(r),
                    r.stabilizer_order,
                    r.factor_set_trivial,
                    r.fpdim
                );
            }
            out
        }
    })
}

fn fuse(cat: &EquivariantCategory, a: &str, b: &str, format: Format) -> Result<String, Failure> {
    let (a, b) = (parse_label(a)?, parse_label(b)?);
    let mut terms = Vec::new();
    for &x in cat.labels() {
        let m = cat.fusion_multiplicity(a, b, x)?;
        if m > 0 {
            terms.push((cat.label_string(x), m));
        }
    }
    Ok(match format {
        Format::Json => {
            let v = serde_json::json!({
                "a": cat.label_string(a),
                "b": cat.label_string(b),
                "terms": terms.iter().map(|(l, m)| serde_json::json!([l, m])).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        Format::Text => {
            let rhs: Vec<String> = terms.iter().map(|(l, m)| if *m == 1 { l.clone() } else { format!("{m}·{l}") }).collect();
            format!("{a} ⊗ {b} = {}\n", rhs.join(" + "))
        }
    })
}

fn render_ring(ring: &FusionRing, format: Format) -> String {
    match format {
        Format::Json => io::ring_to_json(ring),
        Format::Text => io::ring_to_text(ring),
    }
}

/// Output text and whether the run counts as a validation failure.
fn verify(path: &Path, comm: bool) -> Result<(String, bool), Failure> {
    let ring = io::ring_from_json(&read(path)?)?;
    let report = ring.verify(comm);
    let mut text = report.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok((text, !report.passed()))
}

fn selftest(ctx: &Ctx) -> Result<(String, bool), Failure> {
    let opts = ctx.options();
    let mut out = String::new();
    let mut failed = false;
    let mut line = |name: &str, ok: bool| {
        out += &format!("{} {name}\n", if ok { "PASS" } else { "FAIL" });
        failed |= !ok;
    };

    let s3 = Arc::new(catalog::symmetric(3));
    let rep_s3 = build_category(ActionData::trivial(GroupAction::trivial(s3.clone(), Arc::new(FiniteGroup::trivial())))?, &opts)?;
    let chi = rep_s3.fusion_table()?;
    let std = (0..3).find(|&i| chi.dims()[i] == 2);
    let square_ok = std.is_some_and(|v| {
        let p = chi.product(v, v);
        p.len() == 3 && p.iter().all(|&(_, m)| m == 1)
    });
    line("S3 character ring", chi.sorted_dims() == [1, 1, 2] && chi.verify(true).passed() && square_ok);

    let z3 = Arc::new(FiniteGroup::cyclic(3));
    let inv = GroupAction::automorphic(Arc::new(FiniteGroup::cyclic(2)), z3, vec![vec![0, 1, 2], vec![0, 2, 1]])?;
    let clifford = build_category(ActionData::trivial(inv)?, &opts)?.fusion_table()?;
    line("C(Z3)^Z2 is the S3 character ring", isomorphic_as_based_rings(&clifford, &chi)?.is_some());

    let ds3 = build_double(&TwistedDoubleSpec::untwisted(s3), &opts)?.fusion_table()?;
    line(
        "D(S3)",
        ds3.sorted_dims() == [1, 1, 2, 2, 2, 2, 3, 3] && ds3.verify(true).passed() && verify_braided_commutativity(&ds3).passed(),
    );

    let semion = build_double(&TwistedDoubleSpec::new(cyclic_3cocycle(2, 1)), &opts)?.fusion_table()?;
    let klein = FusionRing::group_ring(&catalog::abelian(&[2, 2]));
    line(
        "D^w(Z2)",
        semion.dims() == [1, 1, 1, 1] && semion.verify(true).passed() && isomorphic_as_based_rings(&semion, &klein)?.is_some(),
    );
    Ok((out, failed))
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let mut tol = Tolerances::from_env()?;
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Parse(format!("--tol must be positive, got {t}")).into());
        }
        tol.val = t;
    }
    let ctx = Ctx { seed: cli.seed, tol };
    match &cli.command {
        Command::Simples(src) => Ok((simples(&category(&ctx, src)?, cli.format)?, false)),
        Command::Fuse { source, a, b } => Ok((fuse(&category(&ctx, source)?, a, b, cli.format)?, false)),
        Command::Table(src) => Ok((render_ring(&category(&ctx, src)?.fusion_table()?, cli.format), false)),
        Command::Double { group, omega } => {
            let cat = double_category(&ctx, group, omega.as_deref())?;
            Ok((render_ring(&cat.fusion_table()?, cli.format), false))
        }
        Command::Verify { table, comm } => verify(table, *comm),
        Command::Selftest => selftest(&ctx),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    let io_err = |e: std::io::Error| Failure { code: 2, kind: "Io".into(), message: e.to_string() };
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(io_err),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io_err),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = run(&cli).and_then(|(text, failed)| emit(&cli, &text).map(|()| failed));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(f) => {
            if cli.error_json {
                let v = serde_json::json!({ "error": f.kind, "message": f.message, "exit_code": f.code });
                eprintln!("{v}");
            } else {
                eprintln!("fusion-forge: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
