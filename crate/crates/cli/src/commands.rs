use std::fmt::Write;

use serde_json::{json, Value};
use skein_cluster::bratteli::{build_diagram, catalan_check, fmt_vec, inclusion_check, DiagramKind};
use skein_cluster::cluster::{
    laurent_phenomenon_check, rank2_check, rank2_sequence, triangulation_matrix, verify_involution, verify_laurent,
    ExchangeMatrix, Seed,
};
use skein_cluster::skein::{basis_elements, chebyshev_table, torus_chain, verify_correspondence, verify_skein_chain};
use skein_cluster::tl::{trace_formula_calibration, trace_formula_trace, jones_of_braid, verify_markov, verify_oracle, BraidWord, DeltaSign};
use skein_cluster::{Error, LaurentPoly, Report, Result, Vars};

use crate::{BratteliCmd, Cli, ClusterCmd, Command, InvolutionArgs, JonesCmd, Kind, MarkovArgs, Method, Sign, VerifyCmd};

pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

pub fn run(cli: &Cli, seed: u64) -> Result<Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Cluster(c) => cluster(c, json),
        Command::Jones(c) => jones(c, json),
        Command::Chebyshev { n, all } => {
            let table = chebyshev_table(*n);
            let shown: Vec<(usize, &LaurentPoly)> = table.iter().enumerate().skip(if *all { 0 } else { *n }).collect();
            Ok(Outcome::ok(polys(&shown, "T", &Vars::x(), json, *all)))
        }
        Command::Basis { n_max, p_max, q_max, window } => {
            let (lo, hi) = parse_pair(window, "window")?;
            let basis = basis_elements(lo..=hi, *p_max, *q_max, *n_max)?;
            let x = Vars::cluster(2);
            if json {
                let items: Vec<Value> =
                    basis.iter().map(|e| json!({ "label": e.label, "value": e.value.to_json_value() })).collect();
                return Ok(Outcome::ok(Value::Array(items).to_string()));
            }
            let mut out = String::new();
            for e in &basis {
                let _ = writeln!(out, "{} = {}", e.label, x.format_fraction(&e.value));
            }
            Ok(Outcome::ok(out))
        }
        Command::Bratteli(BratteliCmd::Dims { kind, levels }) => {
            let kind = match kind {
                Kind::Pascal => DiagramKind::Pascal,
                Kind::Tl => DiagramKind::TruncatedPascal,
                Kind::S11 => DiagramKind::S11,
            };
            let d = build_diagram(kind, *levels)?;
            if json {
                return Ok(Outcome::ok(d.to_json()));
            }
            let mut out = format!("{kind}\n");
            for (l, dims) in d.dimension_vectors().iter().enumerate() {
                let _ = writeln!(out, "level {l}: size {}, dims {}", dims.len(), fmt_vec(dims));
            }
            Ok(Outcome::ok(out))
        }
        Command::Verify(v) => {
            let rep = verify(v, seed);
            let text = if json { rep.to_json() } else { rep.to_string() };
            Ok(Outcome { ok: rep.passed(), text })
        }
    }
}

fn parse_pair(text: &str, what: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || Error::Parse { pos: 0, msg: format!("{what} must be two comma-separated integers, got '{text}'") };
    if parts.len() != 2 {
        return Err(bad());
    }
    Ok((parts[0].parse().map_err(|_| bad())?, parts[1].parse().map_err(|_| bad())?))
}

/// `"1,2,1"` to 0-based directions.
fn parse_walk(text: &str, rank: usize) -> Result<Vec<usize>> {
    let mut walk = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let k: usize = tok.parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad direction '{tok}'") })?;
        if k == 0 || k > rank {
            return Err(Error::IndexOutOfRange { index: k, len: rank });
        }
        walk.push(k - 1);
    }
    Ok(walk)
}

fn read_matrix(arg: &str) -> Result<ExchangeMatrix> {
    if arg.trim_start().starts_with('[') {
        return ExchangeMatrix::from_json(arg);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| Error::InvalidMatrix(format!("{arg}: {e}")))?;
    ExchangeMatrix::from_json(&text)
}

/// Text lines `name_i = value`, or JSON (one polynomial, or an array when
/// `many`).
fn polys(items: &[(usize, &LaurentPoly)], name: &str, vars: &Vars, json: bool, many: bool) -> String {
    if json {
        if many {
            return Value::Array(items.iter().map(|(_, p)| p.to_json_value()).collect()).to_string();
        }
        return items[0].1.to_json();
    }
    if !many {
        return vars.format(items[0].1);
    }
    items.iter().map(|(i, p)| format!("{name}{i} = {}\n", vars.format(p))).collect()
}

fn cluster(cmd: &ClusterCmd, json: bool) -> Result<Outcome> {
    match cmd {
        ClusterCmd::Mutate { matrix, surface, walk, seed_vars, positivity } => {
            let m = match (matrix, surface) {
                (Some(m), _) => read_matrix(m)?,
                (None, Some(s)) => {
                    let (g, n) = parse_pair(s, "surface")?;
                    triangulation_matrix(g as u32, n as u32)?
                }
                (None, None) => return Err(Error::InvalidMatrix("pass --matrix or --surface".into())),
            };
            if let Some(n) = seed_vars {
                if *n != m.size() {
                    return Err(Error::InvalidMatrix(format!("--seed-vars {n} but the matrix is {0}x{0}", m.size())));
                }
            }
            let walk = parse_walk(walk, m.size())?;
            let seed = Seed::initial(m);
            let check = laurent_phenomenon_check(&seed, &walk, *positivity)?;
            let last = seed.mutate_walk(&walk)?;
            let rep = check.to_report();
            let vars = Vars::cluster(seed.rank());
            let text = if json {
                json!({
                    "walk": walk.iter().map(|k| k + 1).collect::<Vec<_>>(),
                    "steps": check.records.iter().map(|r| r.value.to_json_value()).collect::<Vec<_>>(),
                    "cluster": last.cluster().iter().map(LaurentPoly::to_json_value).collect::<Vec<_>>(),
                    "matrix": last.matrix().rows(),
                    "report": serde_json::to_value(&rep).expect("plain data"),
                })
                .to_string()
            } else {
                let mut out = format!("{rep}\n");
                for (i, x) in last.cluster().iter().enumerate() {
                    let _ = writeln!(out, "x{} -> {}", i + 1, vars.format_fraction(x));
                }
                let _ = writeln!(out, "B = {:?}", last.matrix().rows());
                out
            };
            Ok(Outcome { text, ok: rep.passed() })
        }
        ClusterCmd::Rank2 { b, c, count } => {
            let xs = rank2_sequence(*b, *c, *count)?;
            let x = Vars::cluster(2);
            if json {
                return Ok(Outcome::ok(Value::Array(xs.iter().map(LaurentPoly::to_json_value).collect()).to_string()));
            }
            let out = xs.iter().enumerate().map(|(i, v)| format!("x{} = {}\n", i + 1, x.format_fraction(v))).collect();
            Ok(Outcome::ok(out))
        }
        ClusterCmd::Check { b, c, depth, positivity } => {
            let rep = rank2_check(*b, *c, *depth, *positivity)?.to_report();
            let text = if json { rep.to_json() } else { rep.to_string() };
            Ok(Outcome { ok: rep.passed(), text })
        }
    }
}

fn jones(cmd: &JonesCmd, json: bool) -> Result<Outcome> {
    match cmd {
        JonesCmd::Torus { n, all } => {
            let chain = torus_chain(*n);
            let items: Vec<(usize, &LaurentPoly)> =
                chain.values().iter().enumerate().skip(if *all { 0 } else { *n }).map(|(i, v)| (i, v.poly())).take(n + 1).collect();
            Ok(Outcome::ok(polys(&items, "V", &Vars::t(), json, *all)))
        }
        JonesCmd::Braid { strands, word, method, kappa, delta_sign } => {
            let w = BraidWord::parse(*strands, word)?;
            let v = match method {
                Method::Bracket => jones_of_braid(&w)?,
                Method::TraceFormula => {
                    let sign = match delta_sign {
                        Sign::Plus => DeltaSign::Plus,
                        Sign::Minus => DeltaSign::Minus,
                    };
                    trace_formula_trace(&w, *kappa, sign)?
                }
            };
            Ok(Outcome::ok(if json { v.poly().to_json() } else { v.to_string() }))
        }
    }
}

fn markov(a: &MarkovArgs, seed: u64) -> Report {
    verify_markov(a.trials, a.max_strands, a.max_length, seed)
}

fn involution(a: &InvolutionArgs, seed: u64) -> Report {
    verify_involution(a.trials, a.max_rank, a.bound, seed)
}

fn verify(cmd: &VerifyCmd, seed: u64) -> Report {
    match cmd {
        VerifyCmd::SkeinChain { max } => verify_skein_chain(*max),
        VerifyCmd::Correspondence => verify_correspondence(),
        VerifyCmd::Laurent { depth } => verify_laurent(*depth),
        VerifyCmd::Involution(a) => involution(a, seed),
        VerifyCmd::Oracle { n_max } => verify_oracle(*n_max),
        VerifyCmd::Markov(a) => markov(a, seed),
        VerifyCmd::TraceFormula { random_words } => trace_formula_calibration(*random_words, seed).report,
        VerifyCmd::Catalan { levels } => catalan_check(*levels),
        VerifyCmd::Inclusion { levels } => inclusion_check(*levels),
        VerifyCmd::All => verify_all(seed),
    }
}

/// Runs every suite on its own thread; the combined report keeps a fixed
/// suite order.
fn verify_all(seed: u64) -> Report {
    let suites: Vec<Box<dyn Fn() -> Report + Send + Sync>> = vec![
        Box::new(|| verify_skein_chain(10)),
        Box::new(verify_correspondence),
        Box::new(|| verify_laurent(12)),
        Box::new(move || verify_involution(1000, 4, 5, seed)),
        Box::new(|| verify_oracle(8)),
        Box::new(move || verify_markov(100, 4, 6, seed)),
        Box::new(move || trace_formula_calibration(20, seed).report),
        Box::new(|| catalan_check(12)),
        Box::new(|| inclusion_check(8)),
    ];
    let reports: Vec<Report> = std::thread::scope(|s| {
        let handles: Vec<_> = suites.iter().map(|f| s.spawn(f)).collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    });
    let mut all = Report::new("all");
    for r in reports {
        all.absorb(r);
    }
    all
}
