//! Command-line front end.
//!
//! Every subcommand prints a header line recording the field (including its
//! modulus and, when it was searched for, the seed) followed by one line per
//! result, either as an aligned text table or as JSON lines. Exit status is
//! 0 on success, 1 when a check fails or a distance budget runs out, and 2
//! on usage or input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::codes::{self, DistanceCertificate, LinearCode, Method};
use crate::discover::{
    self, BestKnownTable, CodeRecord, DistanceOutcome, EnumOptions, IdealLattice, SearchFilters, BEST_KNOWN_ENV,
};
use crate::error::Error;
use crate::gf::{ElemRepr, FieldDescriptor, FieldElem, FieldSpec, DEFAULT_SEED};
use crate::poly::{self, Poly};
use crate::talg::{self, AlgebraCtx};

#[derive(Debug, Parser)]
#[command(name = "constacyclic", version, about = "Constacyclic codes as ideals of twisted group algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Seed for modulus search and polynomial factoring.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Args, Clone)]
pub struct FieldArgs {
    /// Field order, a prime power.
    #[arg(short = 'q', long = "q")]
    pub q: u64,
    /// Little-endian modulus coefficients for extension fields, e.g. `1,0,1` for x^2+1.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Debug, Args, Clone)]
pub struct CtxArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Code length / group order.
    #[arg(short = 'n', long = "n")]
    pub n: usize,
    /// Twist constant: an integer of the prime field or a coordinate list such as `[1,2]`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Debug, Args, Clone, Default)]
pub struct CodeSelect {
    /// Ideal generated by an idempotent, e.g. `g^8 + 2g^6 + g^4 + 2g^2 + 2`.
    #[arg(long, group = "code")]
    pub idempotent: Option<String>,
    /// Ideal generated by an arbitrary algebra element.
    #[arg(long, group = "code")]
    pub element: Option<String>,
    /// Ideal generated by a polynomial, given as little-endian coefficients.
    #[arg(long, group = "code")]
    pub generator: Option<String>,
    /// Ideal given by a subset mask over the primitive idempotents
    /// (decimal, or with a `0x` / `0b` prefix).
    #[arg(long, group = "code", value_parser = parse_mask)]
    pub mask: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreducible factors of x^n - lambda.
    Factor(CtxArgs),
    /// Primitive idempotents of F_q[x]/(x^n - lambda).
    Idempotents(CtxArgs),
    /// RREF generator matrix of an ideal.
    Code {
        #[command(flatten)]
        ctx: CtxArgs,
        #[command(flatten)]
        select: CodeSelect,
    },
    /// k-Galois dual of an ideal and its constacyclic constant.
    Dual {
        #[command(flatten)]
        ctx: CtxArgs,
        #[command(flatten)]
        select: CodeSelect,
        #[arg(long, default_value_t = 0)]
        galois: u32,
    },
    /// Minimum distance with a certificate.
    Distance {
        #[command(flatten)]
        ctx: CtxArgs,
        #[command(flatten)]
        select: CodeSelect,
        /// Maximum number of messages to encode.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Both LCD tests (subspace and idempotent criterion) and their agreement.
    LcdCheck {
        #[command(flatten)]
        ctx: CtxArgs,
        #[command(flatten)]
        select: CodeSelect,
        /// Galois parameter; all `0 <= k < m` when omitted.
        #[arg(long)]
        galois: Option<u32>,
    },
    /// Equivalence witness between the lambda- and beta-twisted algebras.
    Equiv {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Classes of F_q^* / (F_q^*)^n, i.e. H^2(C_n, F_q^*).
    H2 {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(short = 'n', long = "n")]
        n: u64,
    },
    /// Enumerate k-Galois LCD ideals with parameters.
    Search {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long, default_value_t = 0)]
        galois: u32,
        #[arg(long)]
        min_k: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        min_d: Option<usize>,
        /// Per-code distance budget in messages.
        #[arg(long)]
        budget: Option<u64>,
        /// Skip distance computation.
        #[arg(long)]
        no_distance: bool,
        /// Best-known table (defaults to the bundled table).
        #[arg(long, env = BEST_KNOWN_ENV)]
        best_known: Option<PathBuf>,
    },
    /// Rebuild the four bundled worked examples and check every stated property.
    VerifyPaper {
        #[arg(long, env = BEST_KNOWN_ENV)]
        best_known: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exhaustive,
    InfoSet,
}

/// One output line. JSON output is this enum, tagged by `type`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Line {
    Header {
        command: String,
        field: FieldDescriptor,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lambda: Option<ElemRepr>,
        seed: u64,
    },
    Factor {
        index: usize,
        degree: usize,
        coeffs: Vec<ElemRepr>,
        text: String,
    },
    Idempotent {
        index: usize,
        dimension: usize,
        coeffs: Vec<ElemRepr>,
        text: String,
    },
    Code {
        field: FieldDescriptor,
        n: usize,
        k: usize,
        rows: Vec<Vec<ElemRepr>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generator: Option<Vec<ElemRepr>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        idempotent: Option<String>,
    },
    Dual {
        galois: u32,
        constant: ElemRepr,
        constacyclic: bool,
        n: usize,
        k: usize,
        rows: Vec<Vec<ElemRepr>>,
    },
    Distance {
        d: usize,
        witness: Vec<ElemRepr>,
        method: Method,
        work: u64,
    },
    DistanceBounds {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        upper: Option<usize>,
        lower: usize,
        work: u64,
    },
    Lcd {
        galois: u32,
        subspace: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        idempotent_criterion: Option<bool>,
        corollary: bool,
        agree: bool,
    },
    Equiv {
        lambda: ElemRepr,
        beta: ElemRepr,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<ElemRepr>,
    },
    H2 {
        n: u64,
        classes: usize,
        representatives: Vec<ElemRepr>,
        image: Vec<ElemRepr>,
    },
    Record {
        n: usize,
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        d: Option<usize>,
        q: u32,
        lambda: ElemRepr,
        mask: u64,
        idempotent: Vec<ElemRepr>,
        text: String,
        lcd_euclid: bool,
        lcd_galois: BTreeMap<u32, bool>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        best_known_d: Option<usize>,
        verdict: String,
    },
    Check {
        example: String,
        label: String,
        passed: bool,
        detail: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        erratum: Option<String>,
    },
    Summary {
        passed: bool,
        message: String,
    },
}

/// Failure modes of a run, each with its exit status.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) => Failure::Check,
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Printer<'a> {
    out: &'a mut dyn Write,
    format: Format,
}

impl Printer<'_> {
    fn emit(&mut self, line: &Line) -> Result<(), Failure> {
        let text = match self.format {
            Format::Json => serde_json::to_string(line).expect("lines serialize"),
            Format::Table => render(line),
        };
        writeln!(self.out, "{text}").map_err(|e| Failure::Usage(e.to_string()))
    }
}

fn render_elems(v: &[ElemRepr]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|e| match e {
            ElemRepr::Prime(x) => x.to_string(),
            ElemRepr::Coords(c) => format!("[{}]", c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")),
        })
        .collect();
    parts.join(" ")
}

fn repr_text(e: &ElemRepr) -> String {
    render_elems(std::slice::from_ref(e))
}

fn render(line: &Line) -> String {
    match line {
        Line::Header { command, field, n, lambda, seed } => {
            let mut s = format!("# {command}: GF({}^{}) modulus {:?}", field.p, field.m, field.modulus);
            if let Some(sd) = field.seed {
                s += &format!(" (searched, seed {sd})");
            }
            if let Some(n) = n {
                s += &format!(" n={n}");
            }
            if let Some(l) = lambda {
                s += &format!(" lambda={}", repr_text(l));
            }
            s + &format!(" seed={seed}")
        }
        Line::Factor { index, degree, text, .. } => format!("f{index:<3} deg {degree:<3} {text}"),
        Line::Idempotent { index, dimension, text, .. } => format!("e{index:<3} dim {dimension:<3} {text}"),
        Line::Code { n, k, rows, generator, idempotent, .. } => {
            let mut s = format!("[{n},{k}] code, RREF generator rows:");
            for r in rows {
                s += &format!("\n  {}", render_elems(r));
            }
            if let Some(g) = generator {
                s += &format!("\ngenerator polynomial (little-endian): {}", render_elems(g));
            }
            if let Some(e) = idempotent {
                s += &format!("\nidempotent: {e}");
            }
            s
        }
        Line::Dual { galois, constant, constacyclic, n, k, rows } => {
            let mut s = format!(
                "{galois}-Galois dual [{n},{k}], constant {} (constacyclic: {constacyclic}), RREF rows:",
                repr_text(constant)
            );
            for r in rows {
                s += &format!("\n  {}", render_elems(r));
            }
            s
        }
        Line::Distance { d, witness, method, work } => {
            format!("d = {d} ({method}, {work} messages)\nwitness: {}", render_elems(witness))
        }
        Line::DistanceBounds { upper, lower, work } => match upper {
            Some(u) => format!("budget exhausted: {lower} <= d <= {u} after {work} messages"),
            None => format!("budget exhausted: d >= {lower} after {work} messages"),
        },
        Line::Lcd { galois, subspace, idempotent_criterion, corollary, agree } => {
            let crit = idempotent_criterion.map_or("n/a".to_string(), |c| c.to_string());
            format!(
                "k={galois} subspace-lcd={subspace} idempotent-criterion={crit} corollary={corollary} agree={agree}"
            )
        }
        Line::Equiv { lambda, beta, witness } => match witness {
            Some(w) => {
                format!("lambda={} beta={} equivalent, witness a={}", repr_text(lambda), repr_text(beta), repr_text(w))
            }
            None => format!("lambda={} beta={} inequivalent", repr_text(lambda), repr_text(beta)),
        },
        Line::H2 { n, classes, representatives, .. } => {
            format!("n={n}: {classes} classes, representatives {}", render_elems(representatives))
        }
        Line::Record { n, k, d, q, mask, text, lcd_euclid, lcd_galois, best_known_d, verdict, .. } => {
            let d = d.map_or("?".into(), |d| d.to_string());
            let best = best_known_d.map_or("-".into(), |b| b.to_string());
            let galois: Vec<String> =
                lcd_galois.iter().map(|(k, v)| format!("{k}:{}", if *v { "y" } else { "n" })).collect();
            format!(
                "[{n},{k},{d}]_{q} mask={mask:#06x} lcd={} galois={} best={best} {verdict}  e = {text}",
                if *lcd_euclid { "y" } else { "n" },
                galois.join(",")
            )
        }
        Line::Check { example, label, passed, detail, erratum } => {
            let mark = match (passed, erratum) {
                (true, _) => "PASS",
                (false, Some(_)) => "NOTE",
                (false, None) => "FAIL",
            };
            let mut s = format!("{mark} {example}: {label}");
            if !detail.is_empty() {
                s += &format!("  [{detail}]");
            }
            if let Some(note) = erratum {
                s += &format!("  (erratum: {note})");
            }
            s
        }
        Line::Summary { passed, message } => format!("{} {message}", if *passed { "OK" } else { "FAILED" }),
    }
}

fn parse_mask(text: &str) -> Result<u64, String> {
    let parsed = if let Some(hex) = text.strip_prefix("0x") {
        u64::from_str_radix(hex, 16)
    } else if let Some(bin) = text.strip_prefix("0b") {
        u64::from_str_radix(bin, 2)
    } else {
        text.parse()
    };
    parsed.map_err(|e| e.to_string())
}

fn parse_list(text: &str) -> Result<Vec<u32>, Failure> {
    let t = text.trim().trim_start_matches('[').trim_end_matches(']');
    t.split(',')
        .map(|c| {
            c.trim()
                .parse::<u32>()
                .map_err(|_| Failure::Usage(format!("`{text}` is not a comma-separated list of integers")))
        })
        .collect()
}

fn build_field(args: &FieldArgs, seed: u64) -> Result<FieldSpec, Failure> {
    let modulus = args.modulus.as_deref().map(parse_list).transpose()?;
    Ok(FieldSpec::of_order(args.q, modulus.as_deref(), seed)?)
}

/// Integer (reduced into the prime field) or a coordinate list.
fn parse_elem(field: &FieldSpec, text: &str) -> Result<FieldElem, Failure> {
    let t = text.trim();
    if t.contains(',') || t.starts_with('[') {
        return Ok(field.from_coords(&parse_list(t)?)?);
    }
    t.parse::<i64>()
        .map(|v| field.from_int(v))
        .map_err(|_| Failure::Usage(format!("`{text}` is neither an integer nor a coordinate list")))
}

fn build_ctx(args: &CtxArgs, seed: u64) -> Result<AlgebraCtx, Failure> {
    let field = build_field(&args.field, seed)?;
    let lambda = parse_elem(&field, &args.lambda)?;
    Ok(AlgebraCtx::new(&field, args.n, lambda)?)
}

fn reprs(field: &FieldSpec, v: &[FieldElem]) -> Vec<ElemRepr> {
    v.iter().map(|&x| field.to_repr(x)).collect()
}

fn select_code(ctx: &AlgebraCtx, sel: &CodeSelect) -> Result<LinearCode, Failure> {
    let elem = if let Some(text) = &sel.idempotent {
        let e = ctx.parse(text)?;
        if !e.is_idempotent() {
            return Err(Error::NotIdempotent.into());
        }
        e
    } else if let Some(text) = &sel.element {
        ctx.parse(text)?
    } else if let Some(text) = &sel.generator {
        let coeffs = parse_list(text)?.into_iter().map(|c| ctx.field().from_int(c as i64)).collect();
        ctx.from_poly(&Poly::new(ctx.field(), coeffs))?
    } else if let Some(mask) = sel.mask {
        let lattice = IdealLattice::new(ctx)?;
        if mask >= lattice.len() {
            return Err(Failure::Usage(format!(
                "mask {mask} out of range for {} primitive idempotents",
                lattice.rank()
            )));
        }
        lattice.idempotent(mask)
    } else {
        return Err(Failure::Usage("select a code with --idempotent, --element, --generator or --mask".into()));
    };
    Ok(codes::ideal_from_element(ctx, &elem))
}

fn header(command: &str, field: &FieldSpec, ctx: Option<&AlgebraCtx>, seed: u64) -> Line {
    Line::Header {
        command: command.to_string(),
        field: field.descriptor(),
        n: ctx.map(AlgebraCtx::n),
        lambda: ctx.map(|c| field.to_repr(c.lambda())),
        seed,
    }
}

fn distance_line(field: &FieldSpec, cert: &DistanceCertificate) -> Line {
    Line::Distance { d: cert.d, witness: reprs(field, &cert.witness), method: cert.method, work: cert.work }
}

pub fn record_line(record: &CodeRecord) -> Line {
    let field = record.idempotent.ctx().field();
    Line::Record {
        n: record.n,
        k: record.k,
        d: record.d(),
        q: record.q,
        lambda: field.to_repr(record.lambda),
        mask: record.subset_mask,
        idempotent: reprs(field, record.idempotent.coeffs()),
        text: record.idempotent.to_string(),
        lcd_euclid: record.lcd_euclid,
        lcd_galois: record.lcd_galois.clone(),
        best_known_d: record.best_known_d,
        verdict: record.verdict.to_string(),
    }
}

fn load_table(path: &Option<PathBuf>) -> Result<BestKnownTable, Failure> {
    Ok(match path {
        Some(p) => BestKnownTable::load(p)?,
        None => BestKnownTable::bundled(),
    })
}

fn execute(cli: &Cli, pr: &mut Printer<'_>) -> Result<(), Failure> {
    let seed = cli.seed;
    match &cli.command {
        Command::Factor(args) => {
            let ctx = build_ctx(args, seed)?;
            let f = ctx.field();
            pr.emit(&header("factor", f, Some(&ctx), seed))?;
            for (index, g) in poly::factor_xn_minus_lambda_seeded(f, ctx.n(), ctx.lambda(), seed)?.iter().enumerate() {
                pr.emit(&Line::Factor {
                    index,
                    degree: g.degree().unwrap_or(0),
                    coeffs: reprs(f, g.coeffs()),
                    text: g.to_string(),
                })?;
            }
        }
        Command::Idempotents(args) => {
            let ctx = build_ctx(args, seed)?;
            let f = ctx.field();
            pr.emit(&header("idempotents", f, Some(&ctx), seed))?;
            let lattice = IdealLattice::new(&ctx)?;
            for (index, e) in lattice.primitives().iter().enumerate() {
                pr.emit(&Line::Idempotent {
                    index,
                    dimension: lattice.dimension(1 << index),
                    coeffs: reprs(f, e.coeffs()),
                    text: e.to_string(),
                })?;
            }
        }
        Command::Code { ctx: args, select } => {
            let ctx = build_ctx(args, seed)?;
            let f = ctx.field();
            pr.emit(&header("code", f, Some(&ctx), seed))?;
            let code = select_code(&ctx, select)?;
            let generator = codes::generator_poly(&code, &ctx).ok().map(|g| reprs(f, g.coeffs()));
            let idempotent = codes::idempotent_generator(&code, &ctx).ok().map(|e| e.to_string());
            pr.emit(&Line::Code {
                field: f.descriptor(),
                n: code.n(),
                k: code.k(),
                rows: code.rows().iter().map(|r| reprs(f, r)).collect(),
                generator,
                idempotent,
            })?;
        }
        Command::Dual { ctx: args, select, galois } => {
            let ctx = build_ctx(args, seed)?;
            let f = ctx.field();
            pr.emit(&header("dual", f, Some(&ctx), seed))?;
            let code = select_code(&ctx, select)?;
            let dual = codes::dual(&code, *galois)?;
            // λ^{-p^{m-k}}
            let constant = f.frobenius(f.inv(ctx.lambda())?, (f.m() - galois) % f.m());
            pr.emit(&Line::Dual {
                galois: *galois,
                constant: f.to_repr(constant),
                constacyclic: codes::is_lambda_constacyclic(&dual, constant)?,
                n: dual.n(),
                k: dual.k(),
                rows: dual.rows().iter().map(|r| reprs(f, r)).collect(),
            })?;
        }
        Command::Distance { ctx: args, select, budget, method } => {
            let ctx = build_ctx(args, seed)?;
            let f = ctx.field();
            pr.emit(&header("distance", f, Some(&ctx), seed))?;
            let code = select_code(&ctx, select)?;
            let result = match method {
                None => codes::min_distance(&code, *budget),
                Some(MethodArg::Exhaustive) => codes::min_distance_with(&code, Method::Exhaustive, *budget),
                Some(MethodArg::InfoSet) => codes::min_distance_with(&code, Method::InfoSet, *budget),
            };
            match result {
                Ok(cert) => pr.emit(&distance_line(f, &cert))?,
                Err(Error::BudgetExceeded(b)) => {
                    pr.emit(&Line::DistanceBounds { upper: b.upper, lower: b.lower, work: b.work })?;
                    return Err(Failure::Check);
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::LcdCheck { ctx: args, select, galois } => {
            let ctx = build_ctx(args, seed)?;
            let f = ctx.field();
            pr.emit(&header("lcd-check", f, Some(&ctx), seed))?;
            let code = select_code(&ctx, select)?;
            let ks: Vec<u32> = match galois {
                Some(k) => vec![*k],
                None => (0..f.m()).collect(),
            };
            let e = if ctx.has_involution() { Some(codes::idempotent_generator(&code, &ctx)?) } else { None };
            let mut all_agree = true;
            for k in ks {
                let subspace = codes::is_lcd(&code, k)?;
                let criterion = e.as_ref().map(|e| codes::check_idempotent_lcd(e, k)).transpose()?;
                let agree = criterion.is_none_or(|c| c == subspace);
                all_agree &= agree;
                pr.emit(&Line::Lcd {
                    galois: k,
                    subspace,
                    idempotent_criterion: criterion,
                    corollary: discover::corollary_applies(f, ctx.lambda(), k),
                    agree,
                })?;
            }
            if !all_agree {
                return Err(Failure::Check);
            }
        }
        Command::Equiv { ctx: args, beta } => {
            let ctx = build_ctx(args, seed)?;
            let f = ctx.field();
            pr.emit(&header("equiv", f, Some(&ctx), seed))?;
            let beta = parse_elem(f, beta)?;
            let witness = talg::equivalence_witness(f, ctx.n(), ctx.lambda(), beta)?;
            pr.emit(&Line::Equiv {
                lambda: f.to_repr(ctx.lambda()),
                beta: f.to_repr(beta),
                witness: witness.map(|w| f.to_repr(w)),
            })?;
        }
        Command::H2 { field, n } => {
            let f = build_field(field, seed)?;
            pr.emit(&header("h2", &f, None, seed))?;
            let classes = f.norm_image_classes(*n);
            pr.emit(&Line::H2 {
                n: *n,
                classes: classes.count,
                representatives: reprs(&f, &classes.representatives),
                image: reprs(&f, &classes.image),
            })?;
        }
        Command::Search { ctx: args, galois, min_k, max_k, min_d, budget, no_distance, best_known } => {
            let ctx = build_ctx(args, seed)?;
            pr.emit(&header("search", ctx.field(), Some(&ctx), seed))?;
            let opts = EnumOptions {
                galois: vec![*galois],
                compute_distance: !no_distance,
                budget: *budget,
                table: Some(load_table(best_known)?),
                ..EnumOptions::default()
            };
            let filters = SearchFilters { min_k: *min_k, max_k: *max_k, min_d: *min_d };
            for rec in discover::search_lcd(&ctx, *galois, &filters, opts)? {
                pr.emit(&record_line(&rec))?;
                if let DistanceOutcome::Bounds(b) = &rec.distance {
                    pr.emit(&Line::DistanceBounds { upper: b.upper, lower: b.lower, work: b.work })?;
                }
            }
        }
        Command::VerifyPaper { best_known } => {
            let table = load_table(best_known)?;
            let report = discover::verify_worked_examples(&table)?;
            let (mut failed, mut notes) = (0, 0);
            for ex in &report.examples {
                let f = FieldSpec::prime(ex.q)?;
                let ctx = AlgebraCtx::new(&f, ex.n, f.elem(ex.lambda)?)?;
                pr.emit(&header(&format!("verify-paper {}", ex.name), &f, Some(&ctx), seed))?;
                for c in &ex.checks {
                    failed += usize::from(!c.accepted());
                    notes += usize::from(!c.passed && c.accepted());
                    pr.emit(&Line::Check {
                        example: ex.name.clone(),
                        label: c.label.clone(),
                        passed: c.passed,
                        detail: c.detail.clone(),
                        erratum: c.erratum.clone(),
                    })?;
                }
                for rec in &ex.records {
                    pr.emit(&record_line(rec))?;
                }
            }
            let total: usize = report.examples.iter().map(|e| e.checks.len()).sum();
            pr.emit(&Line::Summary {
                passed: failed == 0,
                message: format!(
                    "{} examples, {}/{} checks passed, {notes} explained by errata",
                    report.examples.len(),
                    total - failed - notes,
                    total
                ),
            })?;
            if failed > 0 {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name), writing results
/// to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let mut printer = Printer { out, format: cli.format };
    match execute(&cli, &mut printer) {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
