//! `qdk`: command-line front end for the finite-field combinatorics
//! library.
//!
//! Every run writes exactly one JSON document to stdout with a top-level
//! `schema` key; all numeric payload values that can grow beyond machine
//! range are strings. Exit codes: 0 ok, 1 domain error, 2 usage error.
//! The environment variable `QDK_CAP` overrides every enumeration cap.

use std::fmt;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use qdk_core::code::{
    arc_check, code_to_linear, count_cyclic_codes, cyclic_code_from_roots, min_distance,
    nrc_points, rs_code, CyclicCode, LinearCode,
};
use qdk_core::design::{
    count_splitting, lambda_profile, pg_lines_design, splitting_subspaces,
    triangle_invariant_design, verify_design, DesignCandidate, DesignReport,
};
use qdk_core::gf::FieldSpec;
use qdk_core::grassmann::{enumerate_subspaces, gaussian_binomial, Subspace};
use qdk_core::group::{
    dihedral_generators, group_closure, orbit, parse_generator_file, singer_matrix,
    sym_power_rep, GroupElement, MatrixGroup,
};
use qdk_core::poly::{
    brute_count_split_polys, count_split_polys_formula, cyclotomic_cosets, factor_xn_minus_1,
    SplitPolyMode,
};

#[derive(Parser)]
#[command(name = "qdk", version, about = "Exact finite-field combinatorics toolkit")]
struct Cli {
    /// Worker budget hint; output is byte-identical for any value.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct fields and inspect elements
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Polynomial algebra over GF(q)
    Poly {
        #[command(subcommand)]
        cmd: PolyCmd,
    },
    /// Gaussian binomial [n, k]_q
    Gaussian {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        q: u64,
    },
    /// Subspace enumeration
    Grassmann {
        #[command(subcommand)]
        cmd: GrassmannCmd,
    },
    /// Matrix groups acting on the Grassmannian
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// q-ary designs, splitting subspaces, Steiner systems
    Design {
        #[command(subcommand)]
        cmd: DesignCmd,
    },
    /// Cyclic and Reed-Solomon codes, arcs
    Code {
        #[command(subcommand)]
        cmd: CodeCmd,
    },
}

#[derive(Subcommand)]
enum FieldCmd {
    /// Build the canonical GF(p^m)
    Create {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: usize,
    },
    /// Report order, Frobenius image, and minimal polynomial of an element
    Inspect {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: usize,
        /// Element as "c0,c1,...".
        #[arg(long)]
        element: String,
        /// Subfield degree for the minimal polynomial (divides m).
        #[arg(long, default_value_t = 1)]
        subfield_degree: usize,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Irreducible factors of x^n - 1 over GF(q)
    FactorXn1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Cyclotomic cosets of q modulo n
    Cosets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Split-polynomial counts: formula quotient and brute-force values
    CountSplit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Subcommand)]
enum GrassmannCmd {
    /// List all k-subspaces of F_q^n in enumeration order
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
        /// Truncate the listed subspaces (the count stays exact).
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Args, Clone)]
struct GroupInput {
    /// Builtin group: "singer:p,m,n" | "dihedral:q,m" | "trivial:p,m,n".
    #[arg(long, conflicts_with = "group_file")]
    group: Option<String>,
    /// File with one generator matrix per line (requires --q).
    #[arg(long)]
    group_file: Option<std::path::PathBuf>,
    /// Symbol field size for --group-file matrices.
    #[arg(long)]
    q: Option<u64>,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Enumerate the subgroup generated by the given matrices
    Closure {
        #[command(flatten)]
        input: GroupInput,
    },
    /// Companion matrix of multiplication by the canonical generator
    Singer {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Symmetric-power (Veronese) matrix of a 2x2 element
    Sympower {
        #[arg(long)]
        q: u64,
        /// 2x2 matrix as "a b;c d".
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        deg: usize,
    },
    /// Orbit of a subspace under a group
    Orbit {
        #[command(flatten)]
        input: GroupInput,
        /// Subspace serialization ("rows;...", "-" for the zero space).
        #[arg(long)]
        subspace: String,
    },
    /// Setwise-invariant k-subspaces of a group
    Invariant {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum DesignCmd {
    /// Containment counts of a block set at strength t
    Verify {
        /// "all" for the complete Grassmannian, or a file of subspace lines.
        #[arg(long)]
        blocks: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: usize,
    },
    /// Reports for every strength t = 0..=k
    Profile {
        #[arg(long)]
        blocks: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
    },
    /// Splitting subspaces of GF(q^{rs}) over GF(q), with counts
    Splitting {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        /// Also verify the block set at this strength.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Points and lines of PG(m-1, 2) as a Steiner system
    PgLines {
        #[arg(long)]
        m: usize,
    },
    /// Design report over the invariant subgrassmannian of a group
    Triangle {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Cyclic code from a root-exponent set
    Cyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        /// Comma-separated exponents, e.g. "1,2,4".
        #[arg(long)]
        roots: String,
        /// Also compute the exact minimum distance.
        #[arg(long)]
        min_distance: bool,
    },
    /// Reed-Solomon evaluation code on the normal rational curve
    Rs {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        min_distance: bool,
    },
    /// Exact minimum distance of a generator matrix
    MinDistance {
        #[arg(long)]
        q: u64,
        /// Generator matrix as "row;row;..." with space-separated tokens.
        #[arg(long, conflicts_with = "matrix_file")]
        matrix: Option<String>,
        #[arg(long)]
        matrix_file: Option<std::path::PathBuf>,
    },
    /// Check the (k; r)-arc property of a point set
    Arc {
        #[arg(long)]
        q: u64,
        /// Use the NRC of this degree as the point set.
        #[arg(long, conflicts_with = "points_file")]
        nrc: Option<usize>,
        /// File of 1-subspace lines (requires --n).
        #[arg(long)]
        points_file: Option<std::path::PathBuf>,
        /// Ambient dimension for --points-file.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: usize,
    },
    /// Count cyclic codes of length n: divisor oracle vs. formula values
    CountCyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
}

// ---------------------------------------------------------------------------
// Error and cap plumbing
// ---------------------------------------------------------------------------

enum CliError {
    Lib(qdk_core::Error),
    Bad(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.kind(),
            CliError::Bad(_) => "BadArguments",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Bad(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<qdk_core::Error> for CliError {
    fn from(e: qdk_core::Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy)]
struct Caps {
    field: u64,
    enumeration: u64,
    search: u64,
    closure: u64,
}

fn caps() -> CliResult<Caps> {
    match std::env::var("QDK_CAP") {
        Ok(raw) => {
            let cap: u64 = raw
                .trim()
                .parse()
                .map_err(|_| CliError::Bad(format!("QDK_CAP must be an integer, got {raw:?}")))?;
            Ok(Caps { field: cap, enumeration: cap, search: cap, closure: cap })
        }
        Err(_) => Ok(Caps {
            field: qdk_core::DEFAULT_FIELD_CAP,
            enumeration: qdk_core::DEFAULT_ENUM_CAP,
            search: qdk_core::DEFAULT_SEARCH_CAP,
            closure: qdk_core::DEFAULT_CLOSURE_CAP,
        }),
    }
}

/// Decompose a prime power q = p^m.
fn prime_power(q: u64) -> CliResult<(u64, usize)> {
    if q < 2 {
        return Err(CliError::Bad(format!("{q} is not a prime power")));
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut m = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                m += 1;
            }
            if rest != 1 {
                return Err(CliError::Bad(format!("{q} is not a prime power")));
            }
            return Ok((p, m));
        }
        p += 1;
    }
    Ok((q, 1)) // q itself is prime
}

fn field_from_q(q: u64, caps: &Caps) -> CliResult<Arc<FieldSpec>> {
    let (p, m) = prime_power(q)?;
    Ok(FieldSpec::with_cap(p, m, caps.field)?)
}

fn parse_usize_list(raw: &str) -> CliResult<Vec<usize>> {
    raw.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Bad(format!("expected comma-separated integers, got {raw:?}")))
        })
        .collect()
}

fn read_file(path: &std::path::Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Bad(format!("cannot read {}: {e}", path.display())))
}

/// Build a closed group from CLI input.
fn resolve_group(input: &GroupInput, caps: &Caps) -> CliResult<MatrixGroup> {
    let generators: Vec<GroupElement> = if let Some(spec_str) = &input.group {
        let (name, args) = spec_str
            .split_once(':')
            .map(|(n, a)| (n, Some(a)))
            .unwrap_or((spec_str.as_str(), None));
        let nums: Vec<u64> = match args {
            Some(a) => a
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| CliError::Bad(format!("bad group argument in {spec_str:?}")))
                })
                .collect::<CliResult<_>>()?,
            None => Vec::new(),
        };
        match (name, nums.as_slice()) {
            ("singer", [p, m, n]) => {
                vec![singer_matrix(*p, *m as usize, *n as usize)?]
            }
            ("dihedral", [q, m]) => {
                let spec = field_from_q(*q, caps)?;
                dihedral_generators(&spec, *m)?
            }
            ("trivial", [p, m, n]) => {
                let spec = FieldSpec::with_cap(*p, *m as usize, caps.field)?;
                vec![GroupElement::identity(&spec, *n as usize)]
            }
            _ => {
                return Err(CliError::Bad(format!(
                    "unknown group spec {spec_str:?}; use singer:p,m,n | dihedral:q,m | trivial:p,m,n"
                )))
            }
        }
    } else if let Some(path) = &input.group_file {
        let q = input
            .q
            .ok_or_else(|| CliError::Bad("--group-file requires --q".into()))?;
        let spec = field_from_q(q, caps)?;
        parse_generator_file(&spec, &read_file(path)?)?
    } else {
        return Err(CliError::Bad("supply --group or --group-file".into()));
    };
    Ok(group_closure(&generators, caps.closure)?)
}

fn load_blocks(
    blocks: &str,
    spec: &Arc<FieldSpec>,
    n: usize,
    k: usize,
    caps: &Caps,
) -> CliResult<DesignCandidate> {
    if blocks == "all" {
        return Ok(DesignCandidate::complete(spec, n, k, caps.enumeration)?);
    }
    let text = read_file(std::path::Path::new(blocks))?;
    let mut list = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        list.push(Subspace::parse(spec, n, line)?);
    }
    Ok(DesignCandidate::new(spec, n, k, list)?)
}

// ---------------------------------------------------------------------------
// JSON rendering
// ---------------------------------------------------------------------------

fn report_json(r: &DesignReport) -> Value {
    let mut histogram = Map::new();
    for (count, freq) in &r.histogram {
        histogram.insert(count.to_string(), json!(freq));
    }
    json!({
        "t": r.t,
        "lambda_min": r.lambda_min.to_string(),
        "lambda_max": r.lambda_max.to_string(),
        "lambda": r.lambda.map(|l| l.to_string()),
        "is_design": r.is_design,
        "num_t_subspaces": r.num_t_subspaces,
        "histogram": histogram,
        "num_blocks": r.num_blocks,
    })
}

fn cyclic_json(c: &CyclicCode, dist: Option<&qdk_core::code::CodeParams>) -> Value {
    let mut doc = Map::new();
    doc.insert("n".into(), json!(c.n()));
    doc.insert("k".into(), json!(c.k()));
    if let Some(p) = dist {
        doc.insert("d".into(), json!(p.d));
        doc.insert("mds".into(), json!(p.mds));
    }
    doc.insert("generator_poly".into(), json!(c.gen_poly().to_string()));
    doc.insert(
        "parity_check_poly".into(),
        json!(c.parity_check_poly().to_string()),
    );
    doc.insert("root_exponents".into(), json!(c.root_exponents()));
    if let Some(p) = dist {
        // The blanket claim d = n - k + 1; flag whether the true distance
        // meets it.
        doc.insert("claimed_distance".into(), json!(c.n() - c.k() + 1));
        doc.insert("claim_met".into(), json!(p.d == c.n() - c.k() + 1));
    }
    Value::Object(doc)
}

fn linear_code_json(code: &LinearCode, dist: Option<&qdk_core::code::CodeParams>) -> Value {
    let rows: Vec<String> = code
        .gen_matrix()
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let mut doc = Map::new();
    doc.insert("n".into(), json!(code.n()));
    doc.insert("k".into(), json!(code.k()));
    if let Some(p) = dist {
        doc.insert("d".into(), json!(p.d));
        doc.insert("mds".into(), json!(p.mds));
    }
    doc.insert("generator_matrix".into(), json!(rows.join(";")));
    Value::Object(doc)
}

// ---------------------------------------------------------------------------
// Command dispatch
// ---------------------------------------------------------------------------

fn run(command: &Command) -> CliResult<(String, Value)> {
    let caps = caps()?;
    match command {
        Command::Field { cmd } => field_cmd(cmd, &caps),
        Command::Poly { cmd } => poly_cmd(cmd, &caps),
        Command::Gaussian { n, k, q } => {
            prime_power(*q)?;
            let value = gaussian_binomial(*n, *k, *q);
            Ok(("gaussian".into(), json!({ "value": value.to_string() })))
        }
        Command::Grassmann { cmd } => grassmann_cmd(cmd, &caps),
        Command::Group { cmd } => group_cmd(cmd, &caps),
        Command::Design { cmd } => design_cmd(cmd, &caps),
        Command::Code { cmd } => code_cmd(cmd, &caps),
    }
}

fn field_cmd(cmd: &FieldCmd, caps: &Caps) -> CliResult<(String, Value)> {
    match cmd {
        FieldCmd::Create { p, m } => {
            let spec = FieldSpec::with_cap(*p, *m, caps.field)?;
            Ok((
                "field.create".into(),
                json!({
                    "p": spec.p(),
                    "m": spec.m(),
                    "q": spec.q(),
                    "modulus": spec.modulus_string(),
                }),
            ))
        }
        FieldCmd::Inspect { p, m, element, subfield_degree } => {
            let spec = FieldSpec::with_cap(*p, *m, caps.field)?;
            let e = spec.parse_element(element)?;
            let order = if e.is_zero() {
                None
            } else {
                Some(e.order()?.to_string())
            };
            let minimal = e.minimal_polynomial(*subfield_degree)?;
            Ok((
                "field.inspect".into(),
                json!({
                    "element": e.to_string(),
                    "order": order,
                    "frobenius": e.frobenius(1).to_string(),
                    "subfield_degree": subfield_degree,
                    "minimal_polynomial": minimal.to_string(),
                }),
            ))
        }
    }
}

fn poly_cmd(cmd: &PolyCmd, caps: &Caps) -> CliResult<(String, Value)> {
    match cmd {
        PolyCmd::FactorXn1 { n, q } => {
            let spec = field_from_q(*q, caps)?;
            let factors = factor_xn_minus_1(*n, &spec)?;
            let rendered: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
            Ok((
                "poly.factor-xn1".into(),
                json!({ "n": n, "q": q, "factors": rendered }),
            ))
        }
        PolyCmd::Cosets { n, q } => {
            let partition = cyclotomic_cosets(*n, *q)?;
            Ok((
                "poly.cosets".into(),
                json!({ "n": n, "q": q, "cosets": partition.cosets() }),
            ))
        }
        PolyCmd::CountSplit { n, q } => {
            let spec = field_from_q(*q, caps)?;
            let formula = count_split_polys_formula(*n, *q);
            let monic = brute_count_split_polys(
                *n,
                &spec,
                SplitPolyMode::MonicDistinctRoots,
                caps.search,
            )?;
            let orbits =
                brute_count_split_polys(*n, &spec, SplitPolyMode::AffineOrbits, caps.search)?;
            Ok((
                "poly.count-split".into(),
                json!({
                    "n": n,
                    "q": q,
                    "formula": formula.to_string(),
                    "monic_distinct_roots": monic.to_string(),
                    "affine_orbits": orbits.to_string(),
                }),
            ))
        }
    }
}

fn grassmann_cmd(cmd: &GrassmannCmd, caps: &Caps) -> CliResult<(String, Value)> {
    match cmd {
        GrassmannCmd::Enumerate { n, k, q, limit } => {
            let spec = field_from_q(*q, caps)?;
            let mut count: u64 = 0;
            let mut listed = Vec::new();
            for s in enumerate_subspaces(&spec, *n, *k, caps.enumeration)? {
                if limit.is_none_or(|l| listed.len() < l) {
                    listed.push(s.to_string());
                }
                count += 1;
            }
            Ok((
                "grassmann.enumerate".into(),
                json!({
                    "n": n,
                    "k": k,
                    "q": q,
                    "count": count.to_string(),
                    "subspaces": listed,
                }),
            ))
        }
    }
}

fn group_cmd(cmd: &GroupCmd, caps: &Caps) -> CliResult<(String, Value)> {
    match cmd {
        GroupCmd::Closure { input } => {
            let group = resolve_group(input, caps)?;
            let elements: Vec<String> = group
                .elements()?
                .iter()
                .map(GroupElement::to_string)
                .collect();
            let generators: Vec<String> = group
                .generators()
                .iter()
                .map(GroupElement::to_string)
                .collect();
            Ok((
                "group.closure".into(),
                json!({
                    "q": group.spec().q(),
                    "n": group.n(),
                    "order": group.order()?,
                    "generators": generators,
                    "elements": elements,
                }),
            ))
        }
        GroupCmd::Singer { p, m, n } => {
            let g = singer_matrix(*p, *m, *n)?;
            Ok((
                "group.singer".into(),
                json!({
                    "q": g.spec().q(),
                    "n": g.n(),
                    "matrix": g.to_string(),
                    "order": g.order().to_string(),
                }),
            ))
        }
        GroupCmd::Sympower { q, matrix, deg } => {
            let spec = field_from_q(*q, caps)?;
            let g = GroupElement::parse(&spec, matrix)?;
            let s = sym_power_rep(&g, *deg)?;
            Ok((
                "group.sympower".into(),
                json!({
                    "q": q,
                    "deg": deg,
                    "matrix": s.to_string(),
                }),
            ))
        }
        GroupCmd::Orbit { input, subspace } => {
            let group = resolve_group(input, caps)?;
            let u = Subspace::parse(group.spec(), group.n(), subspace)?;
            let orb = orbit(&u, &group)?;
            let rendered: Vec<String> = orb.iter().map(Subspace::to_string).collect();
            Ok((
                "group.orbit".into(),
                json!({
                    "size": orb.len(),
                    "group_order": group.order()?,
                    "orbit": rendered,
                }),
            ))
        }
        GroupCmd::Invariant { input, k } => {
            let group = resolve_group(input, caps)?;
            let inv = qdk_core::group::invariant_subspaces(&group, *k, caps.enumeration)?;
            let rendered: Vec<String> = inv.iter().map(Subspace::to_string).collect();
            Ok((
                "group.invariant".into(),
                json!({
                    "k": k,
                    "count": inv.len(),
                    "subspaces": rendered,
                }),
            ))
        }
    }
}

fn design_cmd(cmd: &DesignCmd, caps: &Caps) -> CliResult<(String, Value)> {
    match cmd {
        DesignCmd::Verify { blocks, n, k, q, t } => {
            let spec = field_from_q(*q, caps)?;
            let cand = load_blocks(blocks, &spec, *n, *k, caps)?;
            let report = verify_design(&cand, *t, caps.enumeration)?;
            Ok(("design.verify".into(), report_json(&report)))
        }
        DesignCmd::Profile { blocks, n, k, q } => {
            let spec = field_from_q(*q, caps)?;
            let cand = load_blocks(blocks, &spec, *n, *k, caps)?;
            let reports = lambda_profile(&cand, caps.enumeration)?;
            let rendered: Vec<Value> = reports.iter().map(report_json).collect();
            Ok((
                "design.profile".into(),
                json!({ "n": n, "k": k, "q": q, "reports": rendered }),
            ))
        }
        DesignCmd::Splitting { p, m, r, s, t } => {
            let witnesses = splitting_subspaces(*p, *m, *r, *s, caps.enumeration)?;
            let counts = count_splitting(*p, *m, *r, *s, caps.enumeration)?;
            let witness_json: Vec<Value> = witnesses
                .iter()
                .map(|w| {
                    let translates: Vec<String> =
                        w.translates.iter().map(Subspace::to_string).collect();
                    json!({
                        "subspace": w.subspace.to_string(),
                        "translates": translates,
                    })
                })
                .collect();
            let mut doc = Map::new();
            doc.insert("p".into(), json!(p));
            doc.insert("m".into(), json!(m));
            doc.insert("r".into(), json!(r));
            doc.insert("s".into(), json!(s));
            doc.insert("S".into(), json!(counts.s_count.to_string()));
            doc.insert("N".into(), json!(counts.n_count.to_string()));
            doc.insert("gl_order".into(), json!(counts.gl_order.to_string()));
            doc.insert("quotient_check".into(), json!(counts.quotient_check));
            doc.insert("witnesses".into(), json!(witness_json));
            if let Some(t) = t {
                let report =
                    qdk_core::design::splitting_design_report(*p, *m, *r, *s, *t, caps.enumeration)?;
                doc.insert("report".into(), report_json(&report));
            }
            Ok(("design.splitting".into(), Value::Object(doc)))
        }
        DesignCmd::PgLines { m } => {
            let r = pg_lines_design(*m)?;
            Ok((
                "design.pg-lines".into(),
                json!({
                    "m": m,
                    "v": r.v,
                    "b": r.b,
                    "is_steiner": r.is_steiner,
                }),
            ))
        }
        DesignCmd::Triangle { input, k, t } => {
            let group = resolve_group(input, caps)?;
            let report = triangle_invariant_design(&group, *k, *t, caps.enumeration)?;
            let mut doc = Map::new();
            doc.insert("group_order".into(), json!(group.order()?));
            doc.insert("k".into(), json!(k));
            doc.insert("report".into(), report_json(&report));
            Ok(("design.triangle".into(), Value::Object(doc)))
        }
    }
}

fn code_cmd(cmd: &CodeCmd, caps: &Caps) -> CliResult<(String, Value)> {
    match cmd {
        CodeCmd::Cyclic { n, q, roots, min_distance: with_d } => {
            let spec = field_from_q(*q, caps)?;
            let exponents = parse_usize_list(roots)?;
            let code = cyclic_code_from_roots(&spec, *n, &exponents)?;
            let dist = if *with_d {
                Some(min_distance(&code_to_linear(&code), caps.search)?)
            } else {
                None
            };
            Ok(("code.cyclic".into(), cyclic_json(&code, dist.as_ref())))
        }
        CodeCmd::Rs { q, k, len, min_distance: with_d } => {
            let spec = field_from_q(*q, caps)?;
            let code = rs_code(&spec, *k, *len)?;
            let dist = if *with_d {
                Some(min_distance(&code, caps.search)?)
            } else {
                None
            };
            Ok(("code.rs".into(), linear_code_json(&code, dist.as_ref())))
        }
        CodeCmd::MinDistance { q, matrix, matrix_file } => {
            let spec = field_from_q(*q, caps)?;
            let text = match (matrix, matrix_file) {
                (Some(m), None) => m.clone(),
                (None, Some(path)) => read_file(path)?.trim().replace('\n', ";"),
                _ => return Err(CliError::Bad("supply --matrix or --matrix-file".into())),
            };
            let rows: Vec<Vec<_>> = text
                .split(';')
                .map(|row| {
                    row.split_whitespace()
                        .map(|tok| spec.parse_element(tok))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<_, _>>()?;
            let n = rows.first().map_or(0, Vec::len);
            let code = LinearCode::from_rows(&spec, n, &rows)?;
            let params = min_distance(&code, caps.search)?;
            Ok(("code.min-distance".into(), linear_code_json(&code, Some(&params))))
        }
        CodeCmd::Arc { q, nrc, points_file, n, r } => {
            let spec = field_from_q(*q, caps)?;
            let points = match (nrc, points_file) {
                (Some(deg), None) => nrc_points(*deg, &spec),
                (None, Some(path)) => {
                    let dim = n.ok_or_else(|| CliError::Bad("--points-file requires --n".into()))?;
                    let mut out = Vec::new();
                    for line in read_file(path)?.lines() {
                        let line = line.trim();
                        if line.is_empty() {
                            continue;
                        }
                        out.push(Subspace::parse(&spec, dim, line)?);
                    }
                    out
                }
                _ => return Err(CliError::Bad("supply --nrc or --points-file".into())),
            };
            let is_arc = arc_check(&points, *r, caps.search)?;
            Ok((
                "code.arc".into(),
                json!({
                    "num_points": points.len(),
                    "r": r,
                    "is_arc": is_arc,
                }),
            ))
        }
        CodeCmd::CountCyclic { n, q } => {
            let spec = field_from_q(*q, caps)?;
            let count = count_cyclic_codes(*n, &spec)?;
            let formulas: Vec<String> =
                count.formula_values.iter().map(|v| v.to_string()).collect();
            Ok((
                "code.count-cyclic".into(),
                json!({
                    "n": n,
                    "q": q,
                    "oracle": count.oracle.to_string(),
                    "num_cosets": count.num_cosets,
                    "formula_values": formulas,
                }),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((schema, payload)) => {
            let doc = json!({
                "schema": format!("qdk/1/{schema}"),
                "status": "ok",
                "payload": payload,
            });
            println!("{doc}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let doc = json!({
                "schema": "qdk/1/error",
                "status": "error",
                "error_kind": e.kind(),
                "message": e.to_string(),
            });
            println!("{doc}");
            ExitCode::from(1)
        }
    }
}
