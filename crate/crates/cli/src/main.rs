use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use axialmod::algebra::{
    check_axial, frobenius_check, frobenius_gram, matsuo_system, unit_element, AlgebraError, AxialAlgebra,
};
use axialmod::exactlin::{format_rational, format_vector, int, parse_rational, Matrix, Rational, Subspace, Vector};
use axialmod::geometry::{
    catalog, connected_components, is_fischer_space, validate_partial_triple_system, CatalogName, FischerSpace,
    GeometryDoc, GeometryError, PointLineGeometry, TripleSystem,
};
use axialmod::groups::{fg_roundtrip, is_3transposition, miyamoto_group, GroupError, ThreeTranspositionGroup};
use axialmod::io::{
    algebra_to_doc, group_from_doc, matsuo_from_doc, module_from_doc, module_to_doc, named_algebra, named_geometry,
    parse_algebra_source, representation_from_doc, representation_to_doc, AlgebraDoc, AlgebraSource, GroupDoc, IoError,
    ModuleDoc, RepresentationDoc,
};
use axialmod::modules::{
    averaged_family, check_module, maschke_complement, module_eigenspace, module_to_rep, quotient_module, regular_map,
    regular_module, regular_representation, rep_to_module, seed_sweep, AlgebraModule, ModuleError, ModuleForm,
};
use axialmod::universal::{build_presentation, tau_epimorphism, todd_coxeter, UniversalError, DEFAULT_COSET_CAP};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "axialmod",
    version,
    about = "Exact computations with axial algebras, Fischer spaces and their groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Eigenvalue parameter of the Matsuo algebra, as p/q.
    #[arg(long, global = true, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Upper bound on enumerated cosets or group elements.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Fischer space axiom on a geometry.
    VerifyFischer { input: Option<String> },
    /// Build the Matsuo algebra of a geometry.
    Matsuo { input: Option<String> },
    /// Check that the axes satisfy their fusion rule and generate the algebra.
    FusionCheck { input: Option<String> },
    /// Frobenius form checks and the unit element of a Matsuo algebra.
    Frobenius { input: Option<String> },
    /// Order of the Miyamoto group.
    MiyGroup { input: Option<String> },
    /// Enumerate the universal 3-transposition group and compare with the Miyamoto group.
    Universal {
        input: Option<String>,
        /// Write the coset table as CSV.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Check a permutation group document for the 3-transposition property.
    TtgCheck { input: Option<String> },
    /// Turn a representation of the universal group into an algebra module.
    RepToModule {
        input: Option<String>,
        /// Representation document; the regular representation when omitted.
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Turn an algebra module into a representation of the universal group.
    ModuleToRep {
        input: Option<String>,
        /// Module document; the regular module when omitted.
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Build the averaged family from a 1-eigenvector and test the regular map.
    FindRegular {
        input: Option<String>,
        #[arg(long)]
        module: Option<PathBuf>,
        /// Use the quotient of the module by the span of the sum of all points.
        #[arg(long)]
        quotient_sum: bool,
        /// Point label; the first point when omitted.
        #[arg(long)]
        point: Option<String>,
        /// Comma-separated seed vector; the first basis vector of the 1-eigenspace when omitted.
        #[arg(long)]
        seed: Option<String>,
        /// Report every basis seed of the 1-eigenspace.
        #[arg(long)]
        sweep: bool,
    },
    /// Complement a submodule under a Frobenius form.
    Maschke {
        input: Option<String>,
        #[arg(long)]
        module: Option<PathBuf>,
        /// Gram matrix document; the Matsuo Frobenius form when omitted.
        #[arg(long)]
        form: Option<PathBuf>,
        /// JSON list of vectors spanning the submodule; the sum of all points when omitted.
        #[arg(long)]
        sub: Option<PathBuf>,
    },
    /// Print a catalog geometry or a sample algebra.
    Catalog {
        name: String,
        /// Degree for sym_transpositions.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Connected components of a geometry.
    Components { input: Option<String> },
}

enum Failure {
    Usage(String),
    Cap(String),
    /// A mathematical check failed; the report carries the witness.
    Math(Value),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(s) => write!(f, "error: {s}"),
            Failure::Cap(s) => write!(f, "error: cap exhausted: {s}"),
            Failure::Math(_) => write!(f, "check failed"),
        }
    }
}

type Outcome = Result<Value, Failure>;

fn usage<E: fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn from_group(e: GroupError) -> Failure {
    match e {
        GroupError::CapExceeded { .. } => Failure::Cap(e.to_string()),
        GroupError::NotClosed { ref axis, ref by } => {
            Failure::Math(json!({"ok": false, "witness": {"kind": "not_closed", "axis": axis, "by": by}}))
        }
        other => usage(other),
    }
}

fn from_universal(e: UniversalError) -> Failure {
    match e {
        UniversalError::CapExceeded { .. } => Failure::Cap(e.to_string()),
        UniversalError::Group(g) => from_group(g),
        UniversalError::NotClosed { .. } => Failure::Math(json!({"ok": false, "error": e.to_string()})),
        other => usage(other),
    }
}

fn from_module(e: ModuleError) -> Failure {
    match e {
        ModuleError::Universal(u) => from_universal(u),
        ModuleError::Group(g) => from_group(g),
        ModuleError::NotAModule(v) => Failure::Math(json!({"ok": false, "witness": v})),
        ModuleError::RelatorViolated(r) => {
            Failure::Math(json!({"ok": false, "witness": {"kind": "relator_violated", "relator": r}}))
        }
        ModuleError::NotASubmodule
        | ModuleError::DegenerateOnN
        | ModuleError::NotFrobenius
        | ModuleError::NontrivialOneEigenspace(_)
        | ModuleError::SeedNotOneEigenvector => Failure::Math(json!({"ok": false, "error": e.to_string()})),
        other => usage(other),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn parse_alpha(s: &str) -> Result<Rational, Failure> {
    let a = parse_rational(s).map_err(usage)?;
    if a == int(0) || a == int(1) {
        return Err(Failure::Usage(format!("alpha must not be 0 or 1, got {s}")));
    }
    Ok(a)
}

struct Ctx {
    alpha: Option<Rational>,
    cap: usize,
}

fn read_text(path: &std::path::Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Input text, or `None` when `input` names a built-in object.
fn load(input: &Option<String>) -> Result<Result<String, String>, Failure> {
    match input.as_deref() {
        None | Some("-") => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).map_err(usage)?;
            Ok(Ok(text))
        }
        Some(s) => {
            let path = std::path::Path::new(s);
            if path.is_file() {
                Ok(Ok(read_text(path)?))
            } else {
                Ok(Err(s.to_string()))
            }
        }
    }
}

fn resolve_alpha(ctx: &Ctx, doc_alpha: Option<&str>) -> Result<Option<Rational>, Failure> {
    match (doc_alpha, &ctx.alpha) {
        (Some(d), Some(a)) => {
            let d = parse_alpha(d)?;
            if &d != a {
                return Err(Failure::Usage(format!("--alpha disagrees with the document's alpha {d}")));
            }
            Ok(Some(d))
        }
        (Some(d), None) => Ok(Some(parse_alpha(d)?)),
        (None, a) => Ok(a.clone()),
    }
}

fn load_algebra(input: &Option<String>, ctx: &Ctx) -> Result<AxialAlgebra, Failure> {
    match load(input)? {
        Err(name) => named_algebra(&name, ctx.alpha.as_ref())
            .map_err(|e| match e {
                IoError::Missing(_) => Failure::Usage(format!("{name} needs --alpha")),
                other => usage(other),
            })?
            .ok_or_else(|| Failure::Usage(format!("no such file or built-in name: {name}"))),
        Ok(text) => match parse_algebra_source(&text).map_err(usage)? {
            AlgebraSource::Explicit(doc) => axialmod::io::algebra_from_doc(&doc).map_err(usage),
            AlgebraSource::Matsuo(mut doc) => {
                let alpha = resolve_alpha(ctx, Some(&doc.alpha))?.expect("document alpha");
                doc.alpha = format_rational(&alpha);
                matsuo_from_doc(&doc).map_err(usage)
            }
            AlgebraSource::Geometry(doc) => {
                let alpha = ctx.alpha.as_ref().ok_or_else(|| Failure::Usage("geometry input needs --alpha".into()))?;
                let g = PointLineGeometry::from_doc(&doc).map_err(usage)?;
                let ts = TripleSystem::new(g).map_err(usage)?;
                matsuo_system(&ts, alpha).map_err(usage)
            }
        },
    }
}

fn load_geometry(input: &Option<String>) -> Result<PointLineGeometry, Failure> {
    match load(input)? {
        Err(name) => named_geometry(&name)
            .map_err(usage)?
            .ok_or_else(|| Failure::Usage(format!("no such file or built-in geometry: {name}"))),
        Ok(text) => {
            let value: Value = serde_json::from_str(&text).map_err(usage)?;
            let doc: GeometryDoc = match value.get("geometry") {
                Some(g) => serde_json::from_value(g.clone()).map_err(usage)?,
                None => serde_json::from_value(value).map_err(usage)?,
            };
            PointLineGeometry::from_doc(&doc).map_err(usage)
        }
    }
}

fn load_module(path: &Option<PathBuf>, aa: &AxialAlgebra) -> Result<AlgebraModule, Failure> {
    match path {
        None => Ok(regular_module(aa)),
        Some(p) => {
            let doc: ModuleDoc = serde_json::from_str(&read_text(p)?).map_err(usage)?;
            module_from_doc(&doc, aa).map_err(usage)
        }
    }
}

fn matsuo_system_of(aa: &AxialAlgebra) -> Result<(&TripleSystem, &Rational), Failure> {
    let origin = aa.matsuo_origin().ok_or_else(|| Failure::Usage("this command needs a Matsuo algebra".into()))?;
    Ok((&origin.system, &origin.alpha))
}

fn vectors(vs: &[Vector]) -> Vec<Vec<String>> {
    vs.iter().map(|v| format_vector(v)).collect()
}

#[derive(Serialize)]
struct MatsuoOutput {
    geometry: GeometryDoc,
    alpha: String,
    algebra: AlgebraDoc,
}

fn run(cli: Cli) -> Outcome {
    let alpha = cli.common.alpha.as_deref().map(parse_alpha).transpose()?;
    let cap = cli.common.cap.map(|c| c as usize).unwrap_or(DEFAULT_COSET_CAP);
    let ctx = Ctx { alpha, cap };
    match cli.command {
        Command::Catalog { name, n } => {
            if name == "clifford" {
                return Ok(to_value(&algebra_to_doc(&axialmod::algebra::clifford_example())));
            }
            let g = match n {
                Some(n) => {
                    catalog(name.parse::<CatalogName>().map_err(usage)?, Some(n)).map_err(usage)?.geometry().clone()
                }
                None => named_geometry(&name)
                    .map_err(usage)?
                    .ok_or_else(|| Failure::Usage(format!("unknown catalog name {name}")))?,
            };
            Ok(to_value(&g.to_doc()))
        }
        Command::VerifyFischer { input } => {
            let g = load_geometry(&input)?;
            let pts = validate_partial_triple_system(&g);
            if !pts.ok {
                return Err(Failure::Math(json!({"partial_triple_system": pts, "fischer": null})));
            }
            let report = is_fischer_space(&g).map_err(usage)?;
            let value = json!({"partial_triple_system": pts, "fischer": report});
            if report.ok {
                Ok(value)
            } else {
                Err(Failure::Math(value))
            }
        }
        Command::Components { input } => {
            let g = load_geometry(&input)?;
            let comps = connected_components(&g);
            let parts: Vec<GeometryDoc> = comps.components.iter().map(|c| c.to_doc()).collect();
            Ok(json!({"components": parts, "isolated": comps.isolated}))
        }
        Command::Matsuo { input } => {
            let aa = load_algebra(&input, &ctx)?;
            let (ts, alpha) = matsuo_system_of(&aa)?;
            let out = MatsuoOutput {
                geometry: ts.geometry().to_doc(),
                alpha: format_rational(alpha),
                algebra: algebra_to_doc(&aa),
            };
            Ok(to_value(&out))
        }
        Command::FusionCheck { input } => {
            let aa = load_algebra(&input, &ctx)?;
            let report = check_axial(&aa);
            if report.ok {
                Ok(to_value(&report))
            } else {
                Err(Failure::Math(to_value(&report)))
            }
        }
        Command::Frobenius { input } => {
            let aa = load_algebra(&input, &ctx)?;
            let (ts, alpha) = matsuo_system_of(&aa)?;
            let gram = frobenius_gram(ts, alpha);
            let report = frobenius_check(&aa, &gram).map_err(usage)?;
            let unit = match FischerSpace::new(ts.geometry().clone()) {
                Ok(fs) => match unit_element(&fs, alpha) {
                    Ok(u) => json!({
                        "lines_per_point": u.lines_per_point,
                        "unit": u.unit.as_ref().map(|v| format_vector(v)),
                    }),
                    Err(AlgebraError::NotConnected) => Value::Null,
                    Err(e) => return Err(usage(e)),
                },
                Err(GeometryError::NotFischer(_)) | Err(GeometryError::NotPartialTripleSystem(_)) => Value::Null,
                Err(e) => return Err(usage(e)),
            };
            let ok = report.associative && report.eigen_orthogonal;
            let value = json!({
                "gram": to_value(&gram),
                "associative": report.associative,
                "eigen_orthogonal": report.eigen_orthogonal,
                "nondegenerate": report.nondegenerate,
                "det": report.det,
                "unit": unit,
            });
            if ok {
                Ok(value)
            } else {
                Err(Failure::Math(value))
            }
        }
        Command::MiyGroup { input } => {
            let aa = load_algebra(&input, &ctx)?;
            let miy = miyamoto_group(&aa).map_err(from_group)?;
            let unique = axialmod::groups::unique_type_check(&aa).map_err(from_group)?;
            Ok(json!({
                "order": miy.order(),
                "point_action_order": miy.point_action.as_ref().map(|p| p.order()),
                "unique_type": unique,
            }))
        }
        Command::Universal { input, table } => {
            let aa = load_algebra(&input, &ctx)?;
            let p = build_presentation(&aa).map_err(from_universal)?;
            let u = todd_coxeter(&p, ctx.cap).map_err(from_universal)?;
            let report = tau_epimorphism(&u, &aa).map_err(from_universal)?;
            if let Some(path) = table {
                fs::write(&path, u.coset_table_csv())
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            let g = u.group();
            let t0 = u.generator(0);
            let class = g.conjugacy_class(t0);
            let single_class = (0..p.generators().len()).all(|i| class.contains(&u.generator(i)));
            let mut value = to_value(&report);
            value["single_class"] = json!(single_class);
            Ok(value)
        }
        Command::TtgCheck { input } => {
            let text = match load(&input)? {
                Ok(t) => t,
                Err(name) => return Err(Failure::Usage(format!("no such file: {name}"))),
            };
            let doc: GroupDoc = serde_json::from_str(&text).map_err(usage)?;
            let (group, d) = group_from_doc(&doc).map_err(usage)?;
            let order = group.order();
            let report = is_3transposition(group.table(), &d);
            if !report.ok {
                return Err(Failure::Math(
                    json!({"order": order, "d_size": d.len(), "ok": false, "witness": report.witness}),
                ));
            }
            let t = ThreeTranspositionGroup::new(group, d.clone()).map_err(from_group)?;
            let rt = fg_roundtrip(&t).map_err(from_group)?;
            Ok(json!({"order": order, "d_size": d.len(), "ok": true, "witness": null, "roundtrip": rt}))
        }
        Command::RepToModule { input, rep } => {
            let aa = load_algebra(&input, &ctx)?;
            let alpha = aa
                .alpha()
                .cloned()
                .or_else(|| ctx.alpha.clone())
                .ok_or_else(|| Failure::Usage("rep-to-module needs --alpha".into()))?;
            let p = build_presentation(&aa).map_err(from_universal)?;
            let rho = match rep {
                Some(path) => {
                    let doc: RepresentationDoc = serde_json::from_str(&read_text(&path)?).map_err(usage)?;
                    representation_from_doc(&doc, p.generators()).map_err(usage)?
                }
                None => regular_representation(&todd_coxeter(&p, ctx.cap).map_err(from_universal)?),
            };
            let m = rep_to_module(&rho, &alpha, &aa).map_err(from_module)?;
            let report = check_module(&m, &aa).map_err(from_module)?;
            if !report.ok {
                return Err(Failure::Math(to_value(&report)));
            }
            Ok(to_value(&module_to_doc(&m, &aa)))
        }
        Command::ModuleToRep { input, module } => {
            let aa = load_algebra(&input, &ctx)?;
            let m = load_module(&module, &aa)?;
            let u = todd_coxeter(&build_presentation(&aa).map_err(from_universal)?, ctx.cap).map_err(from_universal)?;
            let rho = module_to_rep(&m, &aa, &u).map_err(from_module)?;
            Ok(to_value(&representation_to_doc(&rho)))
        }
        Command::FindRegular { input, module, quotient_sum, point, seed, sweep } => {
            let aa = load_algebra(&input, &ctx)?;
            let (ts, _) = matsuo_system_of(&aa)?;
            let n = ts.num_points();
            let mut m = load_module(&module, &aa)?;
            if quotient_sum {
                let sum = Subspace::span(m.dim(), &[vec![int(1); m.dim()]]);
                m = quotient_module(&m, &sum).map_err(from_module)?.0;
            }
            let x = match &point {
                Some(l) => ts.geometry().require_point(l).map_err(usage)?,
                None => 0,
            };
            if n == 0 {
                return Err(Failure::Usage("empty geometry".into()));
            }
            let u = todd_coxeter(&build_presentation(&aa).map_err(from_universal)?, ctx.cap).map_err(from_universal)?;
            if sweep {
                let outcomes = seed_sweep(&m, &aa, &u, x).map_err(from_module)?;
                return Ok(json!({"point": ts.label(x), "seeds": outcomes}));
            }
            let seed: Vector = match seed {
                Some(s) => s.split(',').map(|c| parse_rational(c.trim())).collect::<Result<_, _>>().map_err(usage)?,
                None => {
                    let ex = axialmod::exactlin::unit_vector(n, x);
                    module_eigenspace(&m, &ex, &int(1))
                        .basis_vectors()
                        .into_iter()
                        .next()
                        .ok_or_else(|| Failure::Math(json!({"ok": false, "error": "trivial 1-eigenspace"})))?
                }
            };
            let family = averaged_family(&m, &aa, &u, x, &seed).map_err(from_module)?;
            let report = regular_map(&m, &aa, &family).map_err(from_module)?;
            let value = json!({
                "point": ts.label(x),
                "seed": format_vector(&seed),
                "u_x_order": family.u_x_order,
                "m_points": vectors(&family.m_points),
                "relations_hold": report.relations_hold,
                "is_hom": report.is_hom,
                "rank": report.rank,
                "injective": report.injective,
            });
            if report.relations_hold && report.is_hom {
                Ok(value)
            } else {
                Err(Failure::Math(value))
            }
        }
        Command::Maschke { input, module, form, sub } => {
            let aa = load_algebra(&input, &ctx)?;
            let m = load_module(&module, &aa)?;
            let gram = match form {
                Some(path) => serde_json::from_str::<Matrix>(&read_text(&path)?).map_err(usage)?,
                None => {
                    let (ts, alpha) = matsuo_system_of(&aa)?;
                    frobenius_gram(ts, alpha)
                }
            };
            let form = ModuleForm::new(gram).map_err(from_module)?;
            let spanning: Vec<Vector> = match sub {
                Some(path) => {
                    let raw: Vec<Vec<String>> = serde_json::from_str(&read_text(&path)?).map_err(usage)?;
                    raw.iter()
                        .map(|v| v.iter().map(|c| parse_rational(c)).collect::<Result<Vector, _>>())
                        .collect::<Result<_, _>>()
                        .map_err(usage)?
                }
                None => vec![vec![int(1); m.dim()]],
            };
            if spanning.iter().any(|v| v.len() != m.dim()) {
                return Err(Failure::Usage(format!("submodule vectors must have length {}", m.dim())));
            }
            let n = Subspace::span(m.dim(), &spanning);
            let complement = maschke_complement(&m, &form, &n, &aa).map_err(from_module)?;
            Ok(json!({
                "submodule_dim": n.dim(),
                "complement_dim": complement.dim(),
                "complement": vectors(&complement.basis_vectors()),
            }))
        }
    }
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Text => match value {
            Value::Object(map) => {
                let mut s = String::new();
                for (k, v) in map {
                    let shown = match v {
                        Value::String(t) => t.clone(),
                        other => other.to_string(),
                    };
                    s.push_str(&format!("{k}: {shown}\n"));
                }
                s
            }
            other => format!("{other}\n"),
        },
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.common.format;
    let out = cli.common.out.clone();
    let (value, code) = match run(cli) {
        Ok(v) => (Some(v), 0),
        Err(Failure::Math(v)) => (Some(v), 1),
        Err(f @ Failure::Usage(_)) => {
            eprintln!("{f}");
            (None, 2)
        }
        Err(f @ Failure::Cap(_)) => {
            eprintln!("{f}");
            (None, 3)
        }
    };
    if let Some(v) = value {
        if let Err(e) = emit(&render(&v, format), &out) {
            eprintln!("error: cannot write report: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}
