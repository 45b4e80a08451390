//! Front end for the `degenscope` binary: argument types, command execution
//! and output rendering. Every command produces an [`Envelope`]; CSV output
//! is a flat view of the same data.

pub mod args;
pub mod envelope;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num::BigUint;
use serde_json::{json, Map, Value};

use degenscope_core::cqs::{mld_brute, mld_resolution, mld_upper_bound};
use degenscope_core::density::DensityCensus;
use degenscope_core::scan::{scan_records, summarize, ScanRecord};
use degenscope_core::wps::{family_a_member, family_b_member};
use degenscope_core::{
    census, classic_markov_enumerate, degeneration_verdict, gen_solutions, k2, noether_check,
    normalize, partial_smoothing_candidates, singular_points, toric_degenerations_of_p11n, CqsGerm,
    Error, NormalizedCqs, PointReport, Reason, WpsTriple, DEFAULT_MLD_LIMIT,
};

pub use args::{Cli, Command, GlobalOpts, MarkovCommand};
pub use envelope::{decimal, put_fraction, Envelope, SCHEMA_VERSION};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Limit(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Limit(m) => write!(f, "limit exceeded: {m}"),
            CliError::Io(m) => write!(f, "i/o failure: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::MldLimitExceeded { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// A finished command: the envelope plus a CSV view (header first).
#[derive(Debug)]
pub struct Output {
    pub envelope: Envelope,
    pub csv: Vec<Vec<String>>,
}

impl Output {
    pub fn render(&self, csv: bool) -> String {
        if csv {
            csv_string(&self.csv)
        } else {
            self.envelope.to_pretty() + "\n"
        }
    }
}

fn csv_string(rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("utf-8 fields")
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

pub fn execute(cli: &Cli) -> CliResult<Output> {
    let g = &cli.global;
    let jobs = g.jobs.map(|j| j as usize).unwrap_or_else(default_jobs);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Io(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Cqs(a) => cmd_cqs(a, g),
        Command::Wps(a) => cmd_wps(a, g),
        Command::Markov(m) => cmd_markov(m, g),
        Command::Density(a) => cmd_density(a),
        Command::Scan(a) => cmd_scan(a, g, jobs),
    })
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn chain_value(s: NormalizedCqs) -> Value {
    to_value(&s.chain())
}

fn dual(s: NormalizedCqs) -> NormalizedCqs {
    if s.is_smooth() {
        s
    } else {
        NormalizedCqs::new(s.m(), s.m() - s.q()).expect("m - q is a unit")
    }
}

fn point_value(p: &PointReport) -> Value {
    let mut o = Map::new();
    o.insert("germ".into(), p.germ.to_string().into());
    o.insert("normal_form".into(), p.normalized.to_string().into());
    o.insert("smooth".into(), p.is_smooth().into());
    o.insert("chain".into(), chain_value(p.normalized));
    o.insert("t_data".into(), to_value(&p.t_data));
    o.insert("wahl".into(), p.t_data.is_some_and(|t| t.is_wahl()).into());
    o.insert("mu".into(), to_value(&p.mu));
    o.insert("rigidity".into(), to_value(&p.rigidity));
    o.insert("gorenstein_index".into(), p.gorenstein_index.into());
    o.insert(
        "baskets".into(),
        p.baskets
            .iter()
            .map(|b| Value::from(b.to_string()))
            .collect(),
    );
    put_fraction(&mut o, "mld", &p.mld);
    Value::Object(o)
}

fn reason_value(r: &Reason, explain: bool) -> Value {
    let mut v = to_value(r);
    if explain {
        if let Value::Object(o) = &mut v {
            o.insert("explanation".into(), r.explanation().into());
        }
    }
    v
}

fn reason_label(r: &Reason) -> String {
    match r {
        Reason::NotWellFormed => "NotWellFormed".into(),
        Reason::InFamilyA { .. } => "A".into(),
        Reason::InFamilyB(w) => format!("{}(n={},l={},k={})", w.family, w.n, w.l, w.k),
        Reason::MldAtLeastOneSixth { mld } => format!("mld>=1/6({mld})"),
    }
}

fn reasons_label(rs: &[Reason]) -> String {
    rs.iter().map(reason_label).collect::<Vec<_>>().join(";")
}

fn cmd_cqs(a: &args::CqsArgs, g: &GlobalOpts) -> CliResult<Output> {
    let germ = CqsGerm::new(a.m, a.w1, a.w2)?;
    let s = normalize(&germ);
    let p = PointReport::classify(germ);
    let mut warnings = Vec::new();

    let mut o = Map::new();
    o.insert("germ".into(), germ.to_string().into());
    o.insert("normal_form".into(), s.to_string().into());
    o.insert("smooth".into(), s.is_smooth().into());
    o.insert("chain".into(), chain_value(s));
    o.insert("dual_chain".into(), chain_value(dual(s)));
    o.insert("t_data".into(), to_value(&p.t_data));
    o.insert("wahl".into(), p.t_data.is_some_and(|t| t.is_wahl()).into());
    o.insert("mu".into(), to_value(&p.mu));
    o.insert("rigidity".into(), to_value(&p.rigidity));
    o.insert("gorenstein_index".into(), p.gorenstein_index.into());
    o.insert("baskets".into(), to_value(&p.baskets));

    let mld_text = match a.bound {
        Some(t) => {
            let est = mld_upper_bound(s, t)?;
            let exact = mld_resolution(s);
            if exact > est {
                warnings.push(format!(
                    "the estimate {est} lies below the exact mld {exact} of this germ"
                ));
            }
            put_fraction(&mut o, "mld_estimate", &est);
            est.to_string()
        }
        None => {
            let limit = g.limit_mld.unwrap_or(DEFAULT_MLD_LIMIT);
            let mld = mld_brute(&germ, limit)?;
            put_fraction(&mut o, "mld", &mld);
            mld.to_string()
        }
    };

    let t_text = p
        .t_data
        .map(|t| format!("d={} n={} a={}", t.d, t.n, t.a))
        .unwrap_or_default();
    let csv = vec![
        [
            "m",
            "w1",
            "w2",
            "normal_form",
            "chain",
            "t_data",
            "mu",
            "rigid",
            "gorenstein_index",
            "baskets",
            "mld",
        ]
        .map(String::from)
        .to_vec(),
        vec![
            a.m.to_string(),
            a.w1.to_string(),
            a.w2.to_string(),
            s.to_string(),
            s.chain().to_string(),
            t_text,
            p.mu.map(|m| m.to_string()).unwrap_or_default(),
            p.rigidity.map(|r| r.rigid.to_string()).unwrap_or_default(),
            p.gorenstein_index.to_string(),
            p.baskets
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            mld_text,
        ],
    ];
    Ok(Output {
        envelope: Envelope::new("cqs", to_value(a), Value::Object(o), warnings),
        csv,
    })
}

fn positive(v: i64) -> CliResult<u64> {
    u64::try_from(v)
        .ok()
        .filter(|&v| v > 0)
        .ok_or_else(|| CliError::Input(format!("weight {v} must be positive")))
}

fn wps_value(p: &WpsTriple, explain: bool, warnings: &mut Vec<String>) -> CliResult<Value> {
    let mut o = Map::new();
    o.insert("triple".into(), p.to_string().into());
    o.insert("weights".into(), to_value(&p.weights()));
    o.insert("well_formed".into(), p.is_well_formed().into());
    put_fraction(&mut o, "k2", &k2(p));
    if p.is_well_formed() {
        let points = singular_points(p)?;
        o.insert("points".into(), points.iter().map(point_value).collect());
        let mld = points
            .iter()
            .map(|pt| pt.mld.clone())
            .min()
            .expect("three points");
        put_fraction(&mut o, "mld", &mld);
        let noether = noether_check(p)?.map(|n| {
            let mut m = Map::new();
            put_fraction(&mut m, "lhs", &n.lhs);
            m.insert("holds".into(), n.holds.into());
            Value::Object(m)
        });
        o.insert("noether".into(), noether.unwrap_or(Value::Null));
    } else {
        warnings.push(format!("{p} is not well formed; point data omitted"));
        o.insert("points".into(), Value::Null);
        o.insert("mld".into(), Value::Null);
        o.insert("noether".into(), Value::Null);
    }
    o.insert("family_a".into(), to_value(&family_a_member(p)));
    o.insert("family_b".into(), to_value(&family_b_member(p)));
    let v = degeneration_verdict(p);
    o.insert(
        "verdict".into(),
        json!({
            "outcome": v.outcome,
            "reasons": v.reasons.iter().map(|r| reason_value(r, explain)).collect::<Vec<_>>(),
            "hypotheses": v.hypotheses,
        }),
    );
    Ok(Value::Object(o))
}

fn cmd_wps(a: &args::WpsArgs, g: &GlobalOpts) -> CliResult<Output> {
    let p = WpsTriple::new(positive(a.a)?, positive(a.b)?, positive(a.c)?)?;
    let mut warnings = Vec::new();
    let result = wps_value(&p, g.explain, &mut warnings)?;
    let v = degeneration_verdict(&p);
    let csv = vec![
        [
            "a",
            "b",
            "c",
            "well_formed",
            "k2",
            "mld",
            "outcome",
            "reasons",
        ]
        .map(String::from)
        .to_vec(),
        vec![
            p.a.to_string(),
            p.b.to_string(),
            p.c.to_string(),
            p.is_well_formed().to_string(),
            v.k2.to_string(),
            v.mld.map(|m| m.to_string()).unwrap_or_default(),
            format!("{:?}", v.outcome),
            reasons_label(&v.reasons),
        ],
    ];
    Ok(Output {
        envelope: Envelope::new("wps", to_value(a), result, warnings),
        csv,
    })
}

fn require_n(n: u64) -> CliResult<()> {
    if n < 3 {
        Err(Error::ParameterTooSmall { n, min: 3 }.into())
    } else {
        Ok(())
    }
}

fn require_bound(b: &BigUint) -> CliResult<()> {
    if *b < BigUint::from(1u8) {
        Err(CliError::Input("bound must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn cmd_markov(m: &MarkovCommand, g: &GlobalOpts) -> CliResult<Output> {
    let input = to_value(m);
    let (result, csv, warnings) = match m {
        MarkovCommand::Classic { bound } => {
            require_bound(bound)?;
            let ts = classic_markov_enumerate(bound);
            let rows: Vec<[String; 3]> = ts
                .iter()
                .map(|t| [t.a.to_string(), t.b.to_string(), t.c.to_string()])
                .collect();
            let mut csv = vec![vec!["a".into(), "b".into(), "c".into()]];
            csv.extend(rows.iter().map(|r| r.to_vec()));
            (
                json!({ "count": rows.len(), "triples": rows }),
                csv,
                Vec::new(),
            )
        }
        MarkovCommand::Gen { n, bound } => {
            require_bound(bound)?;
            let sols = gen_solutions(*n, bound);
            let rows: Vec<[String; 2]> = sols
                .iter()
                .map(|s| [s.x.to_string(), s.y.to_string()])
                .collect();
            let mut csv = vec![vec!["n".into(), "x".into(), "y".into()]];
            csv.extend(
                rows.iter()
                    .map(|[x, y]| vec![n.to_string(), x.clone(), y.clone()]),
            );
            (json!({ "n": n, "solutions": rows }), csv, Vec::new())
        }
        MarkovCommand::Degenerations { n, bound } => {
            require_n(*n)?;
            require_bound(bound)?;
            let triples = toric_degenerations_of_p11n(*n, bound)?;
            let sols = gen_solutions(*n, bound);
            let mut warnings = Vec::new();
            let mut entries = Vec::new();
            let mut csv = vec![["x", "y", "triple", "well_formed", "k2", "mld", "outcome"]
                .map(String::from)
                .to_vec()];
            for (s, p) in sols.iter().zip(&triples) {
                let report = wps_value(p, g.explain, &mut warnings)?;
                let v = degeneration_verdict(p);
                csv.push(vec![
                    s.x.to_string(),
                    s.y.to_string(),
                    p.to_string(),
                    p.is_well_formed().to_string(),
                    v.k2.to_string(),
                    v.mld.map(|m| m.to_string()).unwrap_or_default(),
                    format!("{:?}", v.outcome),
                ]);
                entries.push(json!({ "x": s.x.to_string(), "y": s.y.to_string(), "wps": report }));
            }
            (json!({ "n": n, "degenerations": entries }), csv, warnings)
        }
        MarkovCommand::Candidates { n, x, y } => {
            require_n(*n)?;
            let cands = partial_smoothing_candidates(*n, x, y)?;
            let mut csv = vec![[
                "kind",
                "general_fiber",
                "toric_model",
                "basket",
                "k2",
                "rho",
            ]
            .map(String::from)
            .to_vec()];
            let mut list = Vec::new();
            for c in &cands {
                let basket: Vec<String> = c.basket.iter().map(|b| b.to_string()).collect();
                let mut o = Map::new();
                o.insert("kind".into(), to_value(&c.kind));
                o.insert("general_fiber".into(), c.general_fiber.into());
                o.insert("toric_model".into(), c.toric_model.to_string().into());
                o.insert("basket".into(), to_value(&basket));
                put_fraction(&mut o, "k2", &c.k2);
                o.insert("rho".into(), c.rho.into());
                o.insert("note".into(), c.note.clone().into());
                list.push(Value::Object(o));
                csv.push(vec![
                    format!("{:?}", c.kind),
                    c.general_fiber.to_string(),
                    c.toric_model.to_string(),
                    basket.join(";"),
                    c.k2.to_string(),
                    c.rho.to_string(),
                ]);
            }
            (
                json!({ "n": n, "x": x.to_string(), "y": y.to_string(), "candidates": list }),
                csv,
                Vec::new(),
            )
        }
    };
    Ok(Output {
        envelope: Envelope::new(m_name(m), input, result, warnings),
        csv,
    })
}

fn m_name(m: &MarkovCommand) -> &'static str {
    Command::Markov(m.clone()).name()
}

fn census_value(c: &DensityCensus) -> Value {
    let mut v = to_value(c);
    if let Value::Object(o) = &mut v {
        o.insert("ratio_decimal".into(), decimal(&c.ratio).into());
    }
    v
}

fn census_row(c: &DensityCensus) -> Vec<String> {
    vec![
        c.n.to_string(),
        c.count_a.to_string(),
        c.count_b1.to_string(),
        c.count_b2.to_string(),
        c.count_b3.to_string(),
        c.count_s.to_string(),
        decimal(&c.ratio),
    ]
}

const CENSUS_HEADER: [&str; 7] = [
    "N", "count_A", "count_B1", "count_B2", "count_B3", "count_S", "ratio",
];

fn census_warnings(c: &DensityCensus, warnings: &mut Vec<String>) {
    for b in c.bound_checks.iter().filter(|b| !b.holds) {
        warnings.push(format!(
            "N = {}: {} fails ({} vs {})",
            c.n, b.name, b.lhs, b.rhs
        ));
    }
}

fn cmd_density(a: &args::DensityArgs) -> CliResult<Output> {
    let censuses: Vec<DensityCensus> = a.n.iter().map(|&n| census(n)).collect();
    let mut warnings = Vec::new();
    let mut csv = vec![CENSUS_HEADER.map(String::from).to_vec()];
    for c in &censuses {
        census_warnings(c, &mut warnings);
        csv.push(census_row(c));
    }
    let result = json!({ "censuses": censuses.iter().map(census_value).collect::<Vec<_>>() });
    Ok(Output {
        envelope: Envelope::new("density", to_value(a), result, warnings),
        csv,
    })
}

pub fn record_value(r: &ScanRecord, explain: bool) -> Value {
    let mut o = Map::new();
    o.insert("a".into(), r.a.into());
    o.insert("b".into(), r.b.into());
    o.insert("c".into(), r.c.into());
    o.insert("outcome".into(), to_value(&r.outcome));
    o.insert(
        "reasons".into(),
        r.reasons.iter().map(|x| reason_value(x, explain)).collect(),
    );
    put_fraction(&mut o, "mld", &r.mld);
    put_fraction(&mut o, "k2", &r.k2);
    Value::Object(o)
}

const RECORD_HEADER: [&str; 7] = ["a", "b", "c", "outcome", "reasons", "mld", "k2"];

fn record_row(r: &ScanRecord) -> Vec<String> {
    vec![
        r.a.to_string(),
        r.b.to_string(),
        r.c.to_string(),
        format!("{:?}", r.outcome),
        reasons_label(&r.reasons),
        r.mld.to_string(),
        r.k2.to_string(),
    ]
}

fn write_records(
    path: &Path,
    records: &[ScanRecord],
    n: u64,
    csv: bool,
    explain: bool,
) -> CliResult<()> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let file = File::create(path).map_err(io)?;
    if csv {
        let mut w = csv::Writer::from_writer(BufWriter::new(file));
        let csv_err = |e: csv::Error| CliError::Io(format!("{}: {e}", path.display()));
        w.write_record(RECORD_HEADER).map_err(csv_err)?;
        for r in records {
            w.write_record(record_row(r)).map_err(csv_err)?;
        }
        w.flush().map_err(io)?;
    } else {
        let mut w = BufWriter::new(file);
        let input = json!({ "N": n });
        for r in records {
            let env = Envelope::new("scan", input.clone(), record_value(r, explain), Vec::new());
            writeln!(w, "{}", env.to_line()).map_err(io)?;
        }
        w.flush().map_err(io)?;
    }
    Ok(())
}

fn cmd_scan(a: &args::ScanArgs, g: &GlobalOpts, jobs: usize) -> CliResult<Output> {
    let records = scan_records(a.n, jobs)?;
    let summary = summarize(a.n, &records);
    let mut warnings = Vec::new();
    census_warnings(&summary.census, &mut warnings);

    let mut o = Map::new();
    o.insert("triples".into(), summary.triples.into());
    o.insert("no_degenerations".into(), summary.no_degenerations.into());
    o.insert("out_of_scope".into(), summary.out_of_scope.into());
    o.insert("census".into(), census_value(&summary.census));
    let csv = match &a.out {
        Some(path) => {
            write_records(path, &records, a.n, g.csv, g.explain)?;
            o.insert("out".into(), path.display().to_string().into());
            vec![
                CENSUS_HEADER.map(String::from).to_vec(),
                census_row(&summary.census),
            ]
        }
        None => {
            o.insert(
                "records".into(),
                records.iter().map(|r| record_value(r, g.explain)).collect(),
            );
            let mut csv = vec![RECORD_HEADER.map(String::from).to_vec()];
            csv.extend(records.iter().map(record_row));
            csv
        }
    };
    Ok(Output {
        envelope: Envelope::new("scan", to_value(a), Value::Object(o), warnings),
        csv,
    })
}
