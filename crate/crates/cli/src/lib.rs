//! Commands behind the `chain-semiring` binary. Each command returns its
//! rendered output; the binary only handles arguments, files and exit codes.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use chain_semiring::derivations::{analyze_derivation_set, delta, differential_closure, SelfMap};
use chain_semiring::strings::SubfamilyKind;
use chain_semiring::verifier::{
    all_pass, parse_claim_filter, run_suite, verify_claim, CarrierSpec, ClaimId, MapSpec, Params,
    Resolved, Status, Token, VerificationResult,
};
use chain_semiring::{Carrier, ChainEndomorphism, Error};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;
pub const DEFAULT_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Ascii,
    Csv,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableOp {
    Add,
    Mul,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("the {command} command does not support {} output", format_name(*.format))]
    BadFormat {
        command: &'static str,
        format: OutputFormat,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn format_name(f: OutputFormat) -> String {
    use clap::ValueEnum;
    f.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

/// Display name of a carrier spec.
pub fn string_name(spec: &str) -> String {
    match spec.trim() {
        "full" => "the full string".into(),
        "S" => "S".into(),
        s => match s.strip_prefix("DS:") {
            Some(ab) => format!("DS of STR{{{ab}}}"),
            None => format!("STR{{{s}}}"),
        },
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Reads the ceiling on `n` from `CHAIN_SEMIRING_MAX_N`.
pub fn max_n_from_env() -> CliResult<usize> {
    match std::env::var("CHAIN_SEMIRING_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!("CHAIN_SEMIRING_MAX_N must be a number, got {v:?}"))
        }),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

pub fn check_n(n: usize, max_n: usize) -> CliResult<()> {
    if n < 2 {
        return Err(CliError::Usage(format!("n must be at least 2, got {n}")));
    }
    if n > max_n {
        return Err(CliError::Usage(format!(
            "n = {n} exceeds the ceiling {max_n} (set CHAIN_SEMIRING_MAX_N to raise it)"
        )));
    }
    Ok(())
}

/// Parses `"4"`, `"2..6"` or `"2..=6"`; both forms of range include the end.
pub fn parse_n_range(s: &str) -> CliResult<RangeInclusive<usize>> {
    let bad = || CliError::Usage(format!("bad n range {s:?}; use N or LO..HI"));
    let s = s.trim();
    match s.split_once("..") {
        None => {
            let n = s.parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok(lo.trim().parse().map_err(|_| bad())?..=hi.trim().parse().map_err(|_| bad())?)
        }
    }
}

/// A resolved string or subset together with its element labels.
pub struct Labeled {
    pub n: usize,
    pub spec: String,
    pub resolved: Resolved,
}

impl Labeled {
    pub fn new(n: usize, spec: &str) -> CliResult<Self> {
        let resolved = CarrierSpec::parse(spec)?.resolve(n)?;
        Ok(Labeled {
            n,
            spec: spec.to_string(),
            resolved,
        })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.resolved.carrier
    }

    /// `a_k` in a two-anchor string, canonical `a_k_l` otherwise, and the
    /// image tuple for anything outside the string.
    pub fn label(&self, f: &ChainEndomorphism) -> String {
        if let Some(two) = &self.resolved.two {
            if let Some(k) = two.index_of(f) {
                return two.label(k);
            }
        }
        if let Some(many) = &self.resolved.many {
            if let Some(idx) = many.index_of(f) {
                return many.label(idx);
            }
        }
        f.to_string()
    }

    /// Position of `f` in the string the carrier was drawn from.
    pub fn position(&self, f: &ChainEndomorphism) -> Option<usize> {
        if let Some(two) = &self.resolved.two {
            return two.index_of(f);
        }
        self.resolved
            .many
            .as_ref()?
            .index_of(f)
            .map(|i| i.position(self.n))
    }

    fn string_carrier(&self) -> &Carrier {
        match (&self.resolved.two, &self.resolved.many) {
            (Some(two), _) => two.carrier(),
            (None, Some(many)) => many.carrier(),
            (None, None) => &self.resolved.carrier,
        }
    }

    fn elements_json(&self) -> Vec<ElementJson> {
        self.carrier()
            .iter()
            .map(|f| ElementJson {
                label: self.label(f),
                images: f.images().to_vec(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub label: String,
    pub images: Vec<u8>,
}

/// A labelled grid: `rows[i].1[j]` is the cell in row `i`, column `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
}

impl Grid {
    pub fn ascii(&self) -> String {
        let first = self
            .rows
            .iter()
            .map(|r| r.0.len())
            .chain([self.corner.len()])
            .max()
            .unwrap_or(0);
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|j| {
                self.rows
                    .iter()
                    .map(|r| r.1[j].len())
                    .chain([self.columns[j].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let line = |out: &mut String, head: &str, cells: &[String]| {
            let _ = write!(out, "{head:<first$} |");
            for (c, w) in cells.iter().zip(&widths) {
                let _ = write!(out, " {c:>w$}");
            }
            out.push('\n');
        };
        line(&mut out, &self.corner, &self.columns);
        let rule = first + 2 + widths.iter().map(|w| w + 1).sum::<usize>();
        out.push_str(&"-".repeat(rule));
        out.push('\n');
        for (head, cells) in &self.rows {
            line(&mut out, head, cells);
        }
        out
    }

    pub fn csv(&self) -> CliResult<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(std::iter::once(&self.corner).chain(&self.columns))?;
        for (head, cells) in &self.rows {
            w.write_record(std::iter::once(head).chain(cells))?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
    }

    pub fn cells(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.1.clone()).collect()
    }
}

/// Hasse diagram of the pointwise order on a carrier.
fn order_dot(name: &str, l: &Labeled, c: &Carrier) -> String {
    let elems = c.elements();
    let below = |x: &ChainEndomorphism, y: &ChainEndomorphism| x != y && x.join(y) == *y;
    let mut out = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
    for (i, f) in elems.iter().enumerate() {
        let _ = writeln!(out, "  e{i} [label=\"{}\\n{f}\"];", l.label(f));
    }
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            if below(x, y) && !elems.iter().any(|z| below(x, z) && below(z, y)) {
                let _ = writeln!(out, "  e{i} -> e{j};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub schema: u32,
    pub n: usize,
    pub string: String,
    pub op: String,
    pub elements: Vec<ElementJson>,
    pub table: Vec<Vec<String>>,
}

pub fn table_grid(l: &Labeled, op: TableOp) -> Grid {
    let c = l.carrier();
    let (corner, f): (
        &str,
        fn(&ChainEndomorphism, &ChainEndomorphism) -> ChainEndomorphism,
    ) = match op {
        TableOp::Add => ("+", |x, y| x.join(y)),
        TableOp::Mul => ("*", |x, y| x.then(y)),
    };
    Grid {
        corner: corner.into(),
        columns: c.iter().map(|y| l.label(y)).collect(),
        rows: c
            .iter()
            .map(|x| (l.label(x), c.iter().map(|y| l.label(&f(x, y))).collect()))
            .collect(),
    }
}

/// The full `+` or `*` table of a string.
pub fn cmd_table(n: usize, spec: &str, op: TableOp, format: OutputFormat) -> CliResult<String> {
    let l = Labeled::new(n, spec)?;
    let grid = table_grid(&l, op);
    Ok(match format {
        OutputFormat::Ascii => grid.ascii(),
        OutputFormat::Csv => grid.csv()?,
        OutputFormat::Json => {
            let t = TableJson {
                schema: SCHEMA,
                n,
                string: spec.to_string(),
                op: match op {
                    TableOp::Add => "add",
                    TableOp::Mul => "mul",
                }
                .into(),
                elements: l.elements_json(),
                table: grid.cells(),
            };
            serde_json::to_string_pretty(&t)? + "\n"
        }
        OutputFormat::Dot => order_dot(spec, &l, l.carrier()),
    })
}

/// Rebuilds the carrier of a table printed as json.
pub fn carrier_from_table_json(text: &str) -> CliResult<Carrier> {
    let t: TableJson = serde_json::from_str(text)?;
    let elems = t
        .elements
        .iter()
        .map(|e| ChainEndomorphism::from_bytes(&e.images))
        .collect::<chain_semiring::Result<Vec<_>>>()?;
    let chain = chain_semiring::Chain::new(t.n)?;
    Ok(Carrier::new(chain, elems)?)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeltaJson {
    pub label: String,
    pub members: Vec<String>,
    pub images: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DerivationsJson {
    pub schema: u32,
    pub n: usize,
    pub string: String,
    pub elements: Vec<ElementJson>,
    pub maps: Vec<DeltaJson>,
    pub composition: Vec<Vec<String>>,
    pub identity: Option<String>,
    pub absorbing: Option<String>,
    pub closed: bool,
    pub commutative: bool,
    pub idempotent: bool,
}

pub fn derivations_report(n: usize, spec: &str) -> CliResult<DerivationsJson> {
    let l = Labeled::new(n, spec)?;
    let two = l.resolved.two.as_ref().ok_or_else(|| {
        CliError::Usage("derivations needs a two-anchor string such as \"2,3\"".into())
    })?;
    let maps: Vec<SelfMap> =
        (0..=n)
            .map(|k| {
                Ok(delta(two.element(k)?, two.carrier())?
                    .with_label(format!("delta_{}", two.label(k))))
            })
            .collect::<chain_semiring::Result<_>>()?;
    let r = analyze_derivation_set(&maps)?;
    let rep_label = |i: usize| r.representatives[i].clone();
    let cell = |c: &Option<usize>| c.map_or_else(|| "-".to_string(), rep_label);
    Ok(DerivationsJson {
        schema: SCHEMA,
        n,
        string: spec.to_string(),
        elements: l.elements_json(),
        maps: r
            .classes
            .iter()
            .map(|class| {
                let rep = &maps[class[0]];
                DeltaJson {
                    label: rep.label().to_string(),
                    members: class.iter().map(|&k| maps[k].label().to_string()).collect(),
                    images: rep.images().iter().map(|y| l.label(y)).collect(),
                }
            })
            .collect(),
        composition: r
            .table
            .iter()
            .map(|row| row.iter().map(cell).collect())
            .collect(),
        identity: r.identity.map(rep_label),
        absorbing: r.absorbing.map(rep_label),
        closed: r.closed,
        commutative: r.commutative,
        idempotent: r.idempotent,
    })
}

fn composition_grid(d: &DerivationsJson) -> Grid {
    let labels: Vec<String> = d.maps.iter().map(|m| m.label.clone()).collect();
    Grid {
        corner: "after".into(),
        columns: labels.clone(),
        rows: labels
            .into_iter()
            .zip(d.composition.iter().cloned())
            .collect(),
    }
}

fn action_grid(d: &DerivationsJson) -> Grid {
    Grid {
        corner: "map".into(),
        columns: d.elements.iter().map(|e| e.label.clone()).collect(),
        rows: d
            .maps
            .iter()
            .map(|m| (m.label.clone(), m.images.clone()))
            .collect(),
    }
}

/// Covering edges of the order `x <= y` iff `y` absorbs `x` under composition.
fn semilattice_dot(d: &DerivationsJson) -> String {
    let k = d.maps.len();
    let idx = |label: &str| d.maps.iter().position(|m| m.label == label);
    let rel = |i: usize, j: usize| i != j && idx(&d.composition[i][j]) == Some(j);
    let mut out = format!(
        "digraph \"delta maps on {}\" {{\n  rankdir=BT;\n",
        string_name(&d.string)
    );
    for (i, m) in d.maps.iter().enumerate() {
        let _ = writeln!(out, "  d{i} [label=\"{}\"];", m.label);
    }
    for i in 0..k {
        for j in 0..k {
            if rel(i, j) && !(0..k).any(|z| rel(i, z) && rel(z, j)) {
                let _ = writeln!(out, "  d{i} -> d{j};");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// The delta maps of a two-anchor string and their composition table.
pub fn cmd_derivations(n: usize, spec: &str, format: OutputFormat) -> CliResult<String> {
    let d = derivations_report(n, spec)?;
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(&d)? + "\n",
        OutputFormat::Csv => composition_grid(&d).csv()?,
        OutputFormat::Dot => semilattice_dot(&d),
        OutputFormat::Ascii => {
            let yes = |b: bool| if b { "yes" } else { "no" };
            let mut out = format!(
                "delta maps on {}, n = {n}: {} distinct\n",
                string_name(spec),
                d.maps.len()
            );
            for m in &d.maps {
                let _ = writeln!(out, "  {}", m.members.join(" = "));
            }
            out.push_str("\naction\n");
            out.push_str(&action_grid(&d).ascii());
            out.push_str("\ncomposition (row applied after column)\n");
            out.push_str(&composition_grid(&d).ascii());
            let _ = writeln!(
                out,
                "\nidentity: {}\nabsorbing: {}\nclosed: {}, commutative: {}, idempotent: {}",
                d.identity.as_deref().unwrap_or("none"),
                d.absorbing.as_deref().unwrap_or("none"),
                yes(d.closed),
                yes(d.commutative),
                yes(d.idempotent)
            );
            out
        }
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceJson {
    pub start: String,
    pub orbit: Vec<String>,
    pub entered_at: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClosureJson {
    pub schema: u32,
    pub n: usize,
    pub string: String,
    pub ideal: Vec<usize>,
    pub derivation: String,
    pub closure: Vec<usize>,
    pub elements: Vec<ElementJson>,
    pub traces: Vec<TraceJson>,
}

/// `"I:j"`, `"CO"`, or a braced list of string positions such as `"{0,n}"`.
pub fn resolve_ideal(l: &Labeled, spec: &str) -> CliResult<Carrier> {
    let spec = spec.trim();
    let chain = l.carrier().chain();
    if spec == "CO" {
        return Ok(match (&l.resolved.two, &l.resolved.many) {
            (Some(two), _) => two.constants_ideal().carrier,
            (None, Some(many)) => many.constants_ideal().carrier,
            _ => return Err(Error::SpecResolution("CO needs a string".into()).into()),
        });
    }
    if let Some(j) = spec.strip_prefix("I:") {
        let two = l
            .resolved
            .two
            .as_ref()
            .ok_or_else(|| Error::SpecResolution("I:j needs a two-anchor string".into()))?;
        let j = Token::parse(j)?.resolve(l.n)?;
        return Ok(two.subfamily(SubfamilyKind::DifferentialIdeal(j))?.carrier);
    }
    let inner = spec
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::SpecResolution(spec.to_string()))?;
    let string = l.string_carrier();
    let elems = inner
        .split(',')
        .map(|t| {
            let p = Token::parse(t)?.resolve(l.n)?;
            string.get(p).cloned().ok_or(Error::IndexOutOfRange {
                index: p,
                max: string.len() - 1,
            })
        })
        .collect::<chain_semiring::Result<Vec<_>>>()?;
    Ok(Carrier::new(chain, elems)?)
}

pub fn closure_report(
    n: usize,
    spec: &str,
    ideal: &str,
    derivation: &str,
) -> CliResult<ClosureJson> {
    let l = Labeled::new(n, spec)?;
    let map_spec = MapSpec::parse(derivation)?;
    let r = match (&map_spec, &l.resolved.two) {
        (MapSpec::Shift, Some(two)) => two.subfamily(SubfamilyKind::DS)?.carrier,
        _ => l.carrier().clone(),
    };
    let resolved = Resolved {
        carrier: r.clone(),
        two: l.resolved.two.clone(),
        many: l.resolved.many.clone(),
    };
    let d = map_spec.resolve(n, &resolved)?;
    let i = resolve_ideal(&l, ideal)?;
    let c = differential_closure(&r, &i, &d)?;
    let pos = |f: &ChainEndomorphism| l.position(f).expect("closure lies in the string");
    Ok(ClosureJson {
        schema: SCHEMA,
        n,
        string: spec.to_string(),
        ideal: i.iter().map(pos).collect(),
        derivation: derivation.to_string(),
        closure: c.carrier.iter().map(pos).collect(),
        elements: c
            .carrier
            .iter()
            .map(|f| ElementJson {
                label: l.label(f),
                images: f.images().to_vec(),
            })
            .collect(),
        traces: c
            .traces
            .iter()
            .map(|t| TraceJson {
                start: l.label(&t.start),
                orbit: t.orbit.iter().map(|f| l.label(f)).collect(),
                entered_at: t.entered_at,
            })
            .collect(),
    })
}

fn index_set(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// The differential closure of an ideal, with the orbit of every element.
pub fn cmd_closure(
    n: usize,
    spec: &str,
    ideal: &str,
    derivation: &str,
    format: OutputFormat,
) -> CliResult<String> {
    let c = closure_report(n, spec, ideal, derivation)?;
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(&c)? + "\n",
        OutputFormat::Csv => {
            return Err(CliError::BadFormat {
                command: "closure",
                format,
            })
        }
        OutputFormat::Dot => {
            let mut out = format!("digraph \"closure under {}\" {{\n", c.derivation);
            let inside: Vec<&str> = c.elements.iter().map(|e| e.label.as_str()).collect();
            for t in &c.traces {
                let style = if inside.contains(&t.start.as_str()) {
                    "bold"
                } else {
                    "dashed"
                };
                let _ = writeln!(out, "  \"{}\" [style={style}];", t.start);
                if let Some(next) = t.orbit.get(1) {
                    let _ = writeln!(out, "  \"{}\" -> \"{next}\";", t.start);
                }
            }
            out.push_str("}\n");
            out
        }
        OutputFormat::Ascii => {
            let mut out = format!(
                "closure of {} in {} under {}: {}\n  {}\n\ntraces\n",
                index_set(&c.ideal),
                string_name(&c.string),
                c.derivation,
                index_set(&c.closure),
                c.elements
                    .iter()
                    .map(|e| e.label.as_str())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            for t in &c.traces {
                let end = match t.entered_at {
                    Some(0) => "in the ideal".to_string(),
                    Some(k) => format!("enters after {k} step{}", if k == 1 { "" } else { "s" }),
                    None => "cycles outside the ideal".to_string(),
                };
                let _ = writeln!(out, "  {}  ({end})", t.orbit.join(" -> "));
            }
            out
        }
    })
}

/// Parameters for one verification run at size `n`.
pub fn verify_params(n: usize, string: Option<&str>, s: Option<usize>) -> CliResult<Params> {
    let mut p = Params {
        n,
        s,
        ..Params::default()
    };
    if let Some(spec) = string {
        let anchors = spec
            .split(',')
            .map(|t| Token::parse(t)?.resolve(n))
            .collect::<chain_semiring::Result<Vec<_>>>()?;
        if anchors.len() == 2 {
            p.a = Some(anchors[0]);
            p.b = Some(anchors[1]);
        } else {
            p.anchors = Some(anchors);
        }
    }
    Ok(p)
}

/// Runs the selected claims over the range; with a string or `s` given, each
/// claim runs once per size at those parameters.
pub fn run_verify(
    claims: &str,
    n_range: RangeInclusive<usize>,
    string: Option<&str>,
    s: Option<usize>,
) -> CliResult<Vec<VerificationResult>> {
    let ids = parse_claim_filter(claims)?;
    if string.is_none() && s.is_none() {
        return Ok(run_suite(&ids, n_range)?);
    }
    let mut out = Vec::new();
    for id in ids {
        for n in n_range.clone() {
            out.push(verify_claim(id, &verify_params(n, string, s)?)?);
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    schema: u32,
    passed: bool,
    results: &'a [VerificationResult],
}

pub fn render_verify(results: &[VerificationResult], format: OutputFormat) -> CliResult<String> {
    Ok(match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(&VerifyJson {
                schema: SCHEMA,
                passed: all_pass(results),
                results,
            })? + "\n"
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "claim",
                "n",
                "params",
                "status",
                "elapsed_ms",
                "witness",
                "detail",
            ])?;
            for r in results {
                w.write_record([
                    r.claim.as_str().to_string(),
                    r.params.n.to_string(),
                    serde_json::to_string(&r.params)?,
                    r.status.to_string(),
                    format!("{:.3}", r.elapsed.as_secs_f64() * 1e3),
                    r.witness
                        .as_ref()
                        .map(|w| w.to_string())
                        .unwrap_or_default(),
                    r.detail.clone(),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
            String::from_utf8(bytes).expect("csv of utf-8 fields")
        }
        OutputFormat::Dot => {
            return Err(CliError::BadFormat {
                command: "verify",
                format,
            })
        }
        OutputFormat::Ascii => {
            let mut out = String::new();
            for r in results {
                let _ = writeln!(
                    out,
                    "{:<5} n={:<2} {:<4}  {}",
                    r.claim.as_str(),
                    r.params.n,
                    r.status.to_string(),
                    r.detail
                );
                if let Some(w) = &r.witness {
                    let _ = writeln!(out, "      witness: {w}");
                }
                for note in &r.notes {
                    let _ = writeln!(out, "      note ({}): {}", note.topic, note.finding);
                    if let Some(w) = &note.witness {
                        let _ = writeln!(out, "        {w}");
                    }
                }
            }
            let count = |s: Status| results.iter().filter(|r| r.status == s).count();
            let _ = writeln!(
                out,
                "{} results: {} pass, {} info, {} fail",
                results.len(),
                count(Status::Pass),
                count(Status::Info),
                count(Status::Fail)
            );
            out
        }
    })
}

/// Claim IDs in registry order with their one-line summaries.
pub fn claim_list() -> String {
    ClaimId::ALL
        .iter()
        .map(|c| format!("{:<5} {}\n", c.as_str(), c.summary()))
        .collect()
}
