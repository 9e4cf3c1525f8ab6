//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit code:
//! 0 success, 1 an identity failed, 2 usage error, 3 resource guard.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::classes::{check_class_periods, check_classes};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exactalg::PolyQ;
use crate::noncross::{
    check_appendix_a, check_appendix_d, check_e6, check_recfomin, check_standard1, check_standard2, check_zeta_relation,
    coatom_orbit_report, conjugation_orbit_check, fuss_catalan, m_poly_closed, m_poly_recursion, multichain_count,
    NcLattice,
};
use crate::partition::check_wli;
use crate::rootsys::{orderings, CoxeterType, GroupSpec, RootSystem};
use crate::trees::{
    chain_to_merge_a, chain_to_merge_b, check_hook_a, check_hook_b, check_postnikov, enumerate_andre,
    enumerate_pointed, hook_poly_a, hook_poly_b, stanley_a, stanley_b,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "ncchains", version, about = "Weighted maximal chains in noncrossing partition lattices")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Seed for `--coxeter sample:<k>`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_chains: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_group_order: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    /// One document.
    Json,
    /// One object per line.
    Jsonl,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The nir polynomial of a group by direct enumeration, recursion or closed form.
    Mpoly(MpolyArgs),
    /// Run named checks and report pass/fail per target.
    Verify(VerifyArgs),
    /// Stream the maximal chains with their nir values.
    Chains(ChainsArgs),
    /// Chain classes with their polynomials and tree images.
    Classes(GroupArgs),
    /// André trees, hook polynomials and hook identities.
    Trees(TreesArgs),
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long)]
    group: String,
    /// Generator order such as `2,0,1` (0-based); `all`; or `sample:<k>`.
    #[arg(long)]
    coxeter: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Recursion,
    Closed,
    All,
}

#[derive(Args, Debug)]
struct MpolyArgs {
    #[command(flatten)]
    target: GroupArgs,
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
}

#[derive(Args, Debug)]
struct ChainsArgs {
    #[command(flatten)]
    target: GroupArgs,
    #[arg(long)]
    summary_only: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    group: Option<String>,
    /// Run tree checks for sizes `1..=N`.
    #[arg(long)]
    trees: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    check: Vec<String>,
    /// Every check; with no `--group`, over every group up to `--max-rank`.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 4)]
    max_rank: usize,
    #[arg(long)]
    coxeter: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TreeKind {
    A,
    B,
    Plane,
}

#[derive(Args, Debug)]
struct TreesArgs {
    #[arg(long = "type", value_enum, ignore_case = true)]
    kind: TreeKind,
    #[arg(long)]
    n: usize,
    /// Both sides of the hook identity.
    #[arg(long)]
    identity: bool,
    /// Every tree with its hook polynomial.
    #[arg(long)]
    list: bool,
}

/// Runtime settings shared by the subcommands.
struct Ctx {
    format: Format,
    seed: u64,
    limits: Limits,
}

/// Rows under named columns, plus document-level fields.
struct Report {
    command: &'static str,
    meta: Map<String, Value>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Report {
    fn new(command: &'static str, columns: &[&'static str]) -> Self {
        Report { command, meta: Map::new(), columns: columns.to_vec(), rows: Vec::new() }
    }

    fn meta(&mut self, key: &str, v: Value) {
        self.meta.insert(key.to_string(), v);
    }

    fn row_object(&self, row: &[Value]) -> Value {
        Value::Object(self.columns.iter().map(|c| c.to_string()).zip(row.iter().cloned()).collect())
    }

    fn document(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("schemaVersion".into(), json!(SCHEMA_VERSION));
        doc.insert("command".into(), json!(self.command));
        doc.extend(self.meta.clone());
        doc.insert("rows".into(), Value::Array(self.rows.iter().map(|r| self.row_object(r)).collect()));
        Value::Object(doc)
    }

    fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", self.document()),
            Format::Jsonl => {
                for r in &self.rows {
                    writeln!(out, "{}", self.row_object(r))?;
                }
                let mut summary = Map::new();
                summary.insert("schemaVersion".into(), json!(SCHEMA_VERSION));
                summary.insert("command".into(), json!(self.command));
                summary.extend(self.meta.clone());
                writeln!(out, "{}", Value::Object(summary))
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for r in &self.rows {
                    w.write_record(r.iter().map(plain))?;
                }
                w.flush()
            }
            Format::Text => {
                for (k, v) in &self.meta {
                    writeln!(out, "{k}: {}", plain(v))?;
                }
                if self.rows.is_empty() {
                    return Ok(());
                }
                let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(plain).collect()).collect();
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|j| cells.iter().map(|r| r[j].len()).chain([self.columns[j].len()]).max().unwrap_or(0))
                    .collect();
                let line = |fields: Vec<&str>| {
                    let padded: Vec<String> =
                        fields.iter().zip(&widths).map(|(f, w)| format!("{f:<w$}")).collect();
                    padded.join("  ").trim_end().to_string()
                };
                writeln!(out, "{}", line(self.columns.clone()))?;
                for r in &cells {
                    writeln!(out, "{}", line(r.iter().map(|s| s.as_str()).collect()))?;
                }
                Ok(())
            }
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) if m.len() == 1 && m.contains_key("coeffs") => m["coeffs"].to_string(),
        other => other.to_string(),
    }
}

/// Outcome of a command before it is written.
enum Outcome {
    Ok,
    Disagree,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Guard { .. } => 3,
        _ => 2,
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut limits = Limits::default();
    if let Some(m) = cli.max_chains {
        limits.max_chains = m as u128;
    }
    if let Some(m) = cli.max_group_order {
        limits.max_group_order = m as usize;
    }
    let ctx = Ctx { format: cli.format, seed: cli.seed, limits };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut buf: Vec<u8> = Vec::new();
    let result = pool.install(|| {
        let sink = &mut buf;
        match &cli.command {
            Command::Mpoly(a) => cmd_mpoly(&ctx, a, sink),
            Command::Verify(a) => cmd_verify(&ctx, a, sink),
            Command::Chains(a) => cmd_chains(&ctx, a, sink),
            Command::Classes(a) => cmd_classes(&ctx, a, sink),
            Command::Trees(a) => cmd_trees(&ctx, a, sink),
        }
    });
    if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    match result {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Disagree) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Invalid(format!("write failed: {e}"))
}

/// Which standard Coxeter elements to use.
#[derive(Clone, Debug, PartialEq, Eq)]
enum CoxeterChoice {
    Ordering(Vec<usize>),
    All,
    Sample(usize),
}

fn parse_coxeter(text: &str) -> Result<CoxeterChoice> {
    let bad = || Error::Invalid(format!("--coxeter expects `all`, `sample:<k>` or a comma list, got `{text}`"));
    if text == "all" {
        return Ok(CoxeterChoice::All);
    }
    if let Some(k) = text.strip_prefix("sample:") {
        let k: usize = k.parse().map_err(|_| bad())?;
        return if k == 0 { Err(bad()) } else { Ok(CoxeterChoice::Sample(k)) };
    }
    text.split(',').map(|s| s.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>().map(CoxeterChoice::Ordering)
}

/// Orderings realising distinct Coxeter elements, in a reproducible order.
fn select_orderings(ctx: &Ctx, rs: &RootSystem, choice: &CoxeterChoice) -> Result<Vec<Vec<usize>>> {
    let n = rs.rank();
    let candidates = match choice {
        CoxeterChoice::Ordering(o) => {
            rs.standard_coxeter_element(o)?;
            return Ok(vec![o.clone()]);
        }
        CoxeterChoice::All => {
            if n > ctx.limits.max_coxeter_rank {
                return Err(Error::Guard {
                    what: "Coxeter orderings",
                    needed: format!("rank {n}"),
                    limit: format!("rank {}", ctx.limits.max_coxeter_rank),
                });
            }
            orderings(n)
        }
        CoxeterChoice::Sample(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            (0..*k)
                .map(|_| {
                    let mut o: Vec<usize> = (0..n).collect();
                    o.shuffle(&mut rng);
                    o
                })
                .collect()
        }
    };
    let mut seen = std::collections::HashSet::new();
    Ok(candidates
        .into_iter()
        .filter(|o| seen.insert(rs.standard_coxeter_element(o).expect("valid permutation")))
        .collect())
}

fn ordering_text(o: &[usize]) -> String {
    o.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

fn single_ordering(ctx: &Ctx, rs: &RootSystem, text: Option<&str>) -> Result<Vec<usize>> {
    let choice = text.map(parse_coxeter).transpose()?.unwrap_or(CoxeterChoice::Ordering((0..rs.rank()).collect()));
    match choice {
        CoxeterChoice::Ordering(_) => Ok(select_orderings(ctx, rs, &choice)?.remove(0)),
        _ => Err(Error::Invalid("this command takes a single ordering".into())),
    }
}

fn poly_json(p: &PolyQ) -> Value {
    p.to_json()
}

fn cmd_mpoly(ctx: &Ctx, a: &MpolyArgs, out: &mut dyn Write) -> Result<Outcome> {
    let spec = GroupSpec::parse(&a.target.group)?;
    let rs = RootSystem::build(&spec)?;
    let mut report = Report::new("mpoly", &["method", "coxeter", "poly"]);
    report.meta("group", json!(spec.to_string()));
    let mut polys = Vec::new();
    if matches!(a.method, Method::Direct | Method::All) {
        let choice = match &a.target.coxeter {
            Some(t) => parse_coxeter(t)?,
            None => CoxeterChoice::Ordering((0..rs.rank()).collect()),
        };
        for o in select_orderings(ctx, &rs, &choice)? {
            let c = rs.standard_coxeter_element(&o)?;
            let lat = NcLattice::build(&rs, &c)?;
            let p = lat.m_poly_direct(ctx.limits.max_chains)?;
            report.rows.push(vec![json!("direct"), json!(ordering_text(&o)), poly_json(&p)]);
            polys.push(p);
        }
    }
    if matches!(a.method, Method::Recursion | Method::All) {
        let p = m_poly_recursion(&spec)?;
        report.rows.push(vec![json!("recursion"), Value::Null, poly_json(&p)]);
        polys.push(p);
    }
    if matches!(a.method, Method::Closed | Method::All) {
        let p = m_poly_closed(&spec);
        report.rows.push(vec![json!("closed"), Value::Null, poly_json(&p)]);
        polys.push(p);
    }
    let agree = polys.windows(2).all(|w| w[0] == w[1]);
    report.meta("poly", poly_json(&polys[0]));
    report.meta("agree", json!(agree));
    report.write(ctx.format, out).map_err(io)?;
    Ok(if agree { Outcome::Ok } else { Outcome::Disagree })
}

fn cmd_chains(ctx: &Ctx, a: &ChainsArgs, out: &mut dyn Write) -> Result<Outcome> {
    let rs = RootSystem::from_label(&a.target.group)?;
    let o = single_ordering(ctx, &rs, a.target.coxeter.as_deref())?;
    let lat = NcLattice::build(&rs, &rs.standard_coxeter_element(&o)?)?;
    let summary = |count: &num_bigint::BigUint, poly: &PolyQ| {
        let mut m = Map::new();
        m.insert("group".into(), json!(rs.spec().to_string()));
        m.insert("coxeter".into(), json!(ordering_text(&o)));
        m.insert("count".into(), json!(count.to_string().parse::<u64>().map(Value::from).unwrap_or(json!(count.to_string()))));
        m.insert("poly".into(), poly_json(poly));
        m
    };
    if a.summary_only {
        let poly = lat.m_poly_direct(ctx.limits.max_chains)?;
        let mut report = Report::new("chains", &[]);
        report.meta.extend(summary(&lat.chain_count(), &poly));
        report.columns.clear();
        match ctx.format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["count", "poly"]).map_err(|e| io(e.into()))?;
                w.write_record([plain(&report.meta["count"]), plain(&report.meta["poly"])]).map_err(|e| io(e.into()))?;
                w.flush().map_err(io)?;
            }
            f => report.write(f, out).map_err(io)?,
        }
        return Ok(Outcome::Ok);
    }
    let mut hist = vec![0i64; rs.rank() + 1];
    let mut count = 0u64;
    let mut rows = Vec::new();
    let chains = lat.chains(ctx.limits.max_chains)?;
    if ctx.format == Format::Csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        w.write_record(["index", "word", "nir"]).map_err(|e| io(e.into()))?;
        for ch in chains {
            hist[ch.nir()] += 1;
            w.write_record([count.to_string(), ch.word_string(), ch.nir().to_string()]).map_err(|e| io(e.into()))?;
            count += 1;
        }
        w.flush().map_err(io)?;
    } else {
        for ch in chains {
            hist[ch.nir()] += 1;
            match ctx.format {
                Format::Text => writeln!(out, "{} {}", ch.word_string(), ch.nir()).map_err(io)?,
                Format::Jsonl => writeln!(out, "{}", json!({"index": count, "word": ch.word, "nir": ch.nir()})).map_err(io)?,
                _ => rows.push(json!({"word": ch.word, "nir": ch.nir()})),
            }
            count += 1;
        }
    }
    let poly = PolyQ::from_ints(&hist);
    let mut meta = summary(&num_bigint::BigUint::from(count), &poly);
    match ctx.format {
        Format::Csv => {}
        Format::Text => writeln!(out, "count: {count}\npoly: {}", plain(&meta["poly"])).map_err(io)?,
        Format::Jsonl => {
            meta.insert("schemaVersion".into(), json!(SCHEMA_VERSION));
            writeln!(out, "{}", Value::Object(meta)).map_err(io)?;
        }
        Format::Json => {
            let mut doc = Map::new();
            doc.insert("schemaVersion".into(), json!(SCHEMA_VERSION));
            doc.insert("command".into(), json!("chains"));
            doc.extend(meta);
            doc.insert("chains".into(), Value::Array(rows));
            writeln!(out, "{}", Value::Object(doc)).map_err(io)?;
        }
    }
    Ok(Outcome::Ok)
}

fn single_type(rs: &RootSystem) -> Option<CoxeterType> {
    match rs.spec().factors.as_slice() {
        [t] => Some(*t),
        _ => None,
    }
}

fn cmd_classes(ctx: &Ctx, a: &GroupArgs, out: &mut dyn Write) -> Result<Outcome> {
    let rs = RootSystem::from_label(&a.group)?;
    let o = single_ordering(ctx, &rs, a.coxeter.as_deref())?;
    let lat = NcLattice::build(&rs, &rs.standard_coxeter_element(&o)?)?;
    let rep = check_classes(&lat, ctx.limits.max_group_order, ctx.limits.max_chains)?;
    let periods = check_class_periods(&lat, ctx.limits.max_group_order, ctx.limits.max_chains)?;
    let mut report = Report::new("classes", &["representative", "size", "formula", "direct", "period", "g", "tree"]);
    for (class, (period, g)) in rep.classes.iter().zip(&periods) {
        let tree = match single_type(&rs) {
            Some(CoxeterType::A(_)) => json!(stanley_a(&chain_to_merge_a(&lat, &class.representative)?)?.to_string()),
            Some(CoxeterType::B(_)) => json!(stanley_b(&chain_to_merge_b(&lat, &class.representative)?)?.to_string()),
            _ => Value::Null,
        };
        report.rows.push(vec![
            json!(class.representative.word_string()),
            json!(class.size()),
            poly_json(&class.formula_poly),
            poly_json(&class.direct_poly),
            json!(period),
            json!(g),
            tree,
        ]);
    }
    let ok = rep.classgen_pass() && rep.classeq_pass() && periods.iter().all(|(p, g)| p == g);
    report.meta("group", json!(rs.spec().to_string()));
    report.meta("coxeter", json!(ordering_text(&o)));
    report.meta("classes", json!(rep.classes.len()));
    report.meta("classSum", poly_json(&rep.class_sum));
    report.meta("poly", poly_json(&rep.m_poly));
    report.meta("pass", json!(ok));
    report.write(ctx.format, out).map_err(io)?;
    Ok(if ok { Outcome::Ok } else { Outcome::Disagree })
}

fn cmd_trees(ctx: &Ctx, a: &TreesArgs, out: &mut dyn Write) -> Result<Outcome> {
    let limit = ctx.limits.max_tree_vertices;
    let list = a.list || !a.identity;
    let mut report = Report::new("trees", &["tree", "hookPoly"]);
    report.meta("type", json!(format!("{:?}", a.kind)));
    report.meta("n", json!(a.n));
    let mut ok = true;
    match a.kind {
        TreeKind::A | TreeKind::B => {
            if list {
                if a.kind == TreeKind::A {
                    for t in enumerate_andre(a.n, limit)? {
                        report.rows.push(vec![json!(t.to_string()), poly_json(&hook_poly_a(&t))]);
                    }
                } else {
                    for t in enumerate_pointed(a.n, limit)? {
                        report.rows.push(vec![json!(t.to_string()), poly_json(&hook_poly_b(&t))]);
                    }
                }
            }
            if a.identity {
                let r = if a.kind == TreeKind::A { check_hook_a(a.n, limit)? } else { check_hook_b(a.n, limit)? };
                report.meta("trees", json!(r.trees));
                report.meta("lhs", poly_json(&r.lhs));
                report.meta("rhs", poly_json(&r.rhs));
                report.meta("equal", json!(r.equal()));
                ok = r.equal();
            }
        }
        TreeKind::Plane => {
            let r = check_postnikov(a.n, limit, limit.min(7))?;
            report.columns = vec![];
            report.meta("planeTrees", json!(r.plane_trees));
            report.meta("lhs", poly_json(&r.lhs));
            report.meta("rhs", json!(r.rhs.to_string()));
            report.meta("labelings", json!(r.labelings));
            report.meta("forgetting", json!(r.forgetting));
            report.meta("equal", json!(r.pass()));
            ok = r.pass();
        }
    }
    report.write(ctx.format, out).map_err(io)?;
    Ok(if ok { Outcome::Ok } else { Outcome::Disagree })
}

/// Names accepted by `verify --check`.
pub const CHECKS: [&str; 12] = [
    "standard1",
    "standard2",
    "wli",
    "classes",
    "hookA",
    "hookB",
    "postnikov",
    "appendixA",
    "appendixD",
    "e6",
    "fusscatalan",
    "zeta",
];

fn is_tree_check(name: &str) -> bool {
    matches!(name, "hookA" | "hookB" | "postnikov")
}

/// Whether a group check makes sense for `rs` at all.
fn applies(name: &str, rs: &RootSystem) -> bool {
    let t = single_type(rs);
    match name {
        "appendixA" => matches!(t, Some(CoxeterType::A(n)) if n >= 2),
        "appendixD" => matches!(t, Some(CoxeterType::D(_))),
        "e6" => t == Some(CoxeterType::E6),
        "fusscatalan" | "zeta" => t.is_some(),
        _ => true,
    }
}

/// Groups swept by `verify --all`.
fn default_groups(max_rank: usize) -> Vec<String> {
    let mut g = Vec::new();
    for n in 1..=max_rank {
        g.push(format!("A{n}"));
    }
    for n in 2..=max_rank {
        g.push(format!("B{n}"));
    }
    for n in 4..=max_rank {
        g.push(format!("D{n}"));
    }
    if max_rank >= 2 {
        g.extend((5..=8).map(|m| format!("I2({m})")));
    }
    if max_rank >= 3 {
        g.push("H3".into());
    }
    if max_rank >= 4 {
        g.push("F4".into());
    }
    if max_rank >= 6 {
        g.push("E6".into());
    }
    g
}

struct Row {
    check: String,
    target: String,
    status: &'static str,
    detail: String,
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

/// Rows for one group check over the chosen Coxeter elements.
fn run_group_check(ctx: &Ctx, name: &str, rs: &RootSystem, orders: &[Vec<usize>]) -> Result<Vec<Row>> {
    let label = rs.spec().to_string();
    let row = |target: String, pass: bool, detail: String| Row { check: name.into(), target, status: verdict(pass), detail };
    let per_c = |f: &dyn Fn(&[usize]) -> Result<(bool, String)>| -> Result<Vec<Row>> {
        orders
            .iter()
            .map(|o| f(o).map(|(pass, detail)| row(format!("{label} c={}", ordering_text(o)), pass, detail)))
            .collect()
    };
    let lattice = |o: &[usize]| -> Result<NcLattice<'_>> { NcLattice::build(rs, &rs.standard_coxeter_element(o)?) };
    match name {
        "standard1" => per_c(&|o| {
            let rep = coatom_orbit_report(&lattice(o)?);
            let conj = conjugation_orbit_check(rs, o)?;
            let sizes: Vec<usize> = rep.orbits.iter().map(|x| x.size()).collect();
            Ok((
                check_standard1(&rep) && conj.dichotomy && conj.w0_fixed_spaces,
                format!("h={} orbit sizes {sizes:?}; w0 pairing as elements: {}", rep.h, conj.w0_elements),
            ))
        }),
        "standard2" => per_c(&|o| {
            let rep = check_standard2(&lattice(o)?);
            Ok((rep.pass(), format!("{} coatoms", rep.coatoms)))
        }),
        "classes" => per_c(&|o| {
            let lat = lattice(o)?;
            let rep = check_classes(&lat, ctx.limits.max_group_order, ctx.limits.max_chains)?;
            let periods = check_class_periods(&lat, ctx.limits.max_group_order, ctx.limits.max_chains)?;
            let periods_ok = periods.iter().all(|(p, g)| p == g);
            Ok((
                rep.classgen_pass() && rep.classeq_pass() && periods_ok,
                format!("{} classes, sum {}, periods {}", rep.classes.len(), rep.class_sum, verdict(periods_ok)),
            ))
        }),
        "appendixA" => per_c(&|o| {
            let rep = check_appendix_a(rs, &rs.standard_coxeter_element(o)?)?;
            Ok((rep.pass(), format!("cycle {:?}", rep.sequence)))
        }),
        "appendixD" => per_c(&|o| {
            let rep = check_appendix_d(rs, &rs.standard_coxeter_element(o)?)?;
            Ok((
                rep.pass(),
                format!(
                    "structure {}; orbit sizes {:?}; L0,L1 orbit {:?}; stated parity rule {}",
                    verdict(rep.structure_pass()),
                    rep.orbit_sizes,
                    rep.l0_l1_orbit,
                    verdict(rep.printed_parity)
                ),
            ))
        }),
        "wli" => {
            let rep = check_wli(rs, ctx.limits.max_group_order)?;
            Ok(vec![row(label.clone(), rep.pass(), format!("{} lines", rep.lines))])
        }
        "e6" => {
            let rep = check_e6(rs, orders)?;
            Ok(vec![row(
                format!("{label} ({} elements)", rep.checked),
                rep.pass(),
                format!(
                    "dichotomy failures {}, fixed-space failures {}, element-equality failures {}",
                    rep.dichotomy_failures.len(),
                    rep.fixed_space_failures.len(),
                    rep.element_failures.len()
                ),
            )])
        }
        "fusscatalan" => {
            let spec = rs.spec();
            let mut rows = Vec::new();
            for o in orders {
                let lat = lattice(o)?;
                let mut ok = fuss_catalan(spec, 1) == num_bigint::BigInt::from(lat.len());
                for m in 1..=3 {
                    let count = multichain_count(&lat, m, ctx.limits.max_lattice)?;
                    ok &= num_bigint::BigInt::from(count) == fuss_catalan(spec, m as u64);
                }
                rows.push(row(format!("{label} c={}", ordering_text(o)), ok, format!("lattice size {}", lat.len())));
            }
            let rec = check_recfomin(spec, 5)?;
            rows.push(row(label.clone(), rec.pass(), "parabolic recursion, m = 1..5".into()));
            Ok(rows)
        }
        "zeta" => {
            let rep = check_zeta_relation(rs.spec())?;
            Ok(vec![row(label.clone(), rep.pass(), format!("{}", rep.m_poly))])
        }
        _ => unreachable!("registry names are validated"),
    }
}

fn run_tree_check(ctx: &Ctx, name: &str, n: usize) -> Result<Row> {
    let limit = ctx.limits.max_tree_vertices;
    let (pass, detail) = match name {
        "hookA" => {
            let r = check_hook_a(n, limit)?;
            (r.equal(), format!("{} trees, {}", r.trees, r.lhs))
        }
        "hookB" => {
            let r = check_hook_b(n, limit)?;
            (r.equal(), format!("{} trees, {}", r.trees, r.lhs))
        }
        _ => {
            let r = check_postnikov(n, limit, limit.min(7))?;
            (r.pass(), format!("{} plane trees, {}", r.plane_trees, r.lhs))
        }
    };
    Ok(Row { check: name.into(), target: format!("n={n}"), status: verdict(pass), detail })
}

fn cmd_verify(ctx: &Ctx, a: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome> {
    let names: Vec<String> = if a.check.is_empty() && a.all {
        CHECKS.iter().map(|s| s.to_string()).collect()
    } else if a.check.is_empty() {
        return Err(Error::Invalid("pass --check <names> or --all".into()));
    } else {
        a.check.clone()
    };
    if let Some(bad) = names.iter().find(|n| !CHECKS.contains(&n.as_str())) {
        return Err(Error::Invalid(format!("unknown check `{bad}`; known: {}", CHECKS.join(","))));
    }
    let explicit = !a.check.is_empty() && a.group.is_some();
    let groups = match &a.group {
        Some(g) => vec![g.clone()],
        None if a.all => default_groups(a.max_rank),
        None => Vec::new(),
    };
    let systems: Vec<RootSystem> = groups.iter().map(|g| RootSystem::from_label(g)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for name in &names {
        if is_tree_check(name) {
            let top = a.trees.unwrap_or(match name.as_str() {
                "hookA" => 7,
                "hookB" => 6,
                _ => 8,
            });
            for n in 1..=top {
                rows.push(run_tree_check(ctx, name, n)?);
            }
            continue;
        }
        if systems.is_empty() {
            if a.trees.is_some() && a.check.is_empty() {
                continue;
            }
            return Err(Error::Invalid(format!("check `{name}` needs --group or --all")));
        }
        for rs in &systems {
            if !applies(name, rs) {
                if explicit {
                    return Err(Error::WrongType(format!("check `{name}` does not apply to {}", rs.spec())));
                }
                continue;
            }
            let choice = match &a.coxeter {
                Some(t) => parse_coxeter(t)?,
                None if rs.rank() <= 4 => CoxeterChoice::All,
                None => CoxeterChoice::Sample(20),
            };
            let outcome = select_orderings(ctx, rs, &choice).and_then(|o| run_group_check(ctx, name, rs, &o));
            match outcome {
                Ok(r) => rows.extend(r),
                Err(e @ Error::Guard { .. }) if !explicit => rows.push(Row {
                    check: name.clone(),
                    target: rs.spec().to_string(),
                    status: "skip",
                    detail: e.to_string(),
                }),
                Err(e) => return Err(e),
            }
        }
    }
    let failed = rows.iter().filter(|r| r.status == "fail").count();
    let mut report = Report::new("verify", &["check", "target", "status", "detail"]);
    report.rows = rows.into_iter().map(|r| vec![json!(r.check), json!(r.target), json!(r.status), json!(r.detail)]).collect();
    report.meta("failed", json!(failed));
    report.meta("pass", json!(failed == 0));
    report.write(ctx.format, out).map_err(io)?;
    Ok(if failed == 0 { Outcome::Ok } else { Outcome::Disagree })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("ncchains").chain(args.split_whitespace()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    fn doc(args: &str) -> (i32, Value) {
        let (code, text) = call(args);
        (code, serde_json::from_str(text.lines().next().unwrap()).unwrap())
    }

    #[test]
    fn mpoly_all_methods_agree() {
        let (code, v) = doc("mpoly --group A3 --method all --format json");
        assert_eq!(code, 0);
        assert_eq!(v["schemaVersion"], json!(1));
        assert_eq!(v["poly"], json!({"coeffs": [6, 8, 2]}));
        assert_eq!(v["agree"], json!(true));
        let (_, v) = doc("mpoly --group B3 --method closed --format json");
        assert_eq!(v["poly"], json!({"coeffs": [6, 15, 6]}));
        let (_, v) = doc("mpoly --group A1 --method recursion --format json");
        assert_eq!(v["poly"], json!({"coeffs": [1]}));
        let (code, v) = doc("mpoly --group B3 --coxeter all --format json");
        assert_eq!(code, 0);
        assert_eq!(v["rows"].as_array().unwrap().len(), 4 + 2);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call("mpoly --group Q7").0, 2);
        assert_eq!(call("mpoly").0, 2);
        assert_eq!(call("verify --group A3 --check nosuch").0, 2);
        assert_eq!(call("chains --group A3 --max-chains 5").0, 3);
        assert_eq!(call("chains --group A3 --max-chains 0").0, 2);
        assert_eq!(call("trees --type A --n 12").0, 3);
        assert_eq!(call("verify --group B3 --check appendixA").0, 2);
        assert_eq!(call("--help").0, 0);
    }

    #[test]
    fn chain_stream() {
        let (code, text) = call("chains --group A2");
        assert_eq!(code, 0);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[4], "poly: [2,1]");
        let (_, text) = call("chains --group A3 --format csv");
        assert_eq!(text.lines().count(), 17);
        assert!(text.starts_with("index,word,nir\n"));
        let (_, v) = doc("chains --group A3 --summary-only --format json");
        assert_eq!(v["count"], json!(16));
    }

    #[test]
    fn classes_table() {
        let (code, v) = doc("classes --group A3 --format json");
        assert_eq!(code, 0);
        assert_eq!(v["classes"], json!(2));
        assert_eq!(v["classSum"], json!({"coeffs": [6, 8, 2]}));
        let formulas: Vec<&Value> = v["rows"].as_array().unwrap().iter().map(|r| &r["formula"]).collect();
        assert!(formulas.contains(&&json!({"coeffs": [4, 6, 2]})));
        assert!(formulas.contains(&&json!({"coeffs": [2, 2]})));
    }

    #[test]
    fn tree_identities() {
        let (code, v) = doc("trees --type A --n 4 --identity --format json");
        assert_eq!(code, 0);
        assert_eq!(v["lhs"], json!({"coeffs": [24, 58, 37, 6]}));
        assert_eq!(v["equal"], json!(true));
        let (code, _) = call("trees --type B --n 3 --identity");
        assert_eq!(code, 0);
        let (_, text) = call("trees --type A --n 4 --list --format csv");
        assert_eq!(text.lines().count(), 6);
    }

    #[test]
    fn verify_registry() {
        let (code, text) = call("verify --trees 6 --check hookA,postnikov");
        assert_eq!(code, 0, "{text}");
        let (code, v) = doc("verify --group B3 --check standard1,standard2,wli,classes,fusscatalan,zeta --format json");
        assert_eq!(code, 0, "{v}");
        assert!(v["rows"].as_array().unwrap().len() >= 6);
    }

    #[test]
    fn sampling_is_seeded() {
        let a = call("mpoly --group D4 --method direct --coxeter sample:3 --seed 7 --format json");
        let b = call("mpoly --group D4 --method direct --coxeter sample:3 --seed 7 --format json --workers 1");
        assert_eq!(a, b);
        assert_eq!(parse_coxeter("sample:0").ok(), None);
        assert_eq!(parse_coxeter("2,0,1").unwrap(), CoxeterChoice::Ordering(vec![2, 0, 1]));
    }
}
