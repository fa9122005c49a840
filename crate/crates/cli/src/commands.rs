//! One function per subcommand. Each returns the report, the exit code and,
//! for commands that emit a document, the raw text.

use std::path::{Path, PathBuf};
use std::time::Instant;

use quadtour_core::domination::{competition_graph, domination_graph, domination_number};
use quadtour_core::generators::{
    augment, quadratic_residue, random_tournament, rotational, u_n,
};
use quadtour_core::orthogonality::{
    comb_orthogonal, comb_row_orthogonal, nnz_report, quadrangularity, QuadReport,
};
use quadtour_core::symbol_search::{
    check_search_order, family_symbol, symbol_count, symbol_criterion, DEFAULT_MAX_SEARCH_N,
};
use quadtour_core::theorems::classify;
use quadtour_core::{Seed, Side, Symbol, Tournament};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::matrix;
use crate::report::{JsonReport, Volatile};
use crate::sweep;

pub const EXIT_HOLDS: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: JsonReport,
    pub exit: u8,
    /// Document written to stdout instead of the human summary.
    pub raw: Option<String>,
}

fn outcome(report: JsonReport, holds: bool) -> Outcome {
    Outcome {
        report,
        exit: if holds { EXIT_HOLDS } else { EXIT_FAILS },
        raw: None,
    }
}

fn timed(started: Instant, mut o: Outcome) -> Outcome {
    o.report.volatile = Some(Volatile {
        elapsed_ms: started.elapsed().as_millis() as u64,
    });
    o
}

pub fn read_input(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|source| {
            CliError::Io {
                path: "-".into(),
                source,
            }
        })?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load(path: &Path) -> CliResult<Tournament> {
    matrix::parse_any(&read_input(path)?)
}

#[derive(Debug, Clone)]
pub enum GenKind {
    Rotational { n: usize, symbol: Vec<usize> },
    Un { n: usize },
    Qr { p: usize },
    Random { n: usize, seed: u64 },
    Augment { input: PathBuf, transmitter: bool, receiver: bool },
}

pub fn gen(kind: &GenKind, out: Option<&Path>) -> CliResult<Outcome> {
    let (name, inputs, t) = match kind {
        GenKind::Rotational { n, symbol } => {
            let sym = Symbol::new(*n, symbol.iter().copied())?;
            ("rotational", json!({"n": n, "symbol": sym.members()}), rotational(&sym))
        }
        GenKind::Un { n } => ("un", json!({"n": n}), u_n(*n)?),
        GenKind::Qr { p } => ("qr", json!({"p": p}), quadratic_residue(*p)?),
        GenKind::Random { n, seed } => {
            if *n == 0 {
                return Err(CliError::Usage("n must be positive".into()));
            }
            ("random", json!({"n": n, "seed": seed}), random_tournament(*n, Seed(*seed)))
        }
        GenKind::Augment { input, transmitter, receiver } => {
            let base = load(input)?;
            (
                "augment",
                json!({"input": input.display().to_string(), "transmitter": transmitter, "receiver": receiver}),
                augment(&base, *transmitter, *receiver),
            )
        }
    };
    let text = matrix::render(&t);
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    let mut inputs = inputs;
    inputs["kind"] = json!(name);
    let report = JsonReport::new("gen", inputs, json!({"n": t.n(), "matrix": text}));
    Ok(Outcome {
        report,
        exit: EXIT_HOLDS,
        raw: if out.is_none() { Some(text) } else { Some(String::new()) },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckWhat {
    Quad,
    Out,
    In,
    Orth,
}

impl CheckWhat {
    fn as_str(self) -> &'static str {
        match self {
            CheckWhat::Quad => "quad",
            CheckWhat::Out => "out",
            CheckWhat::In => "in",
            CheckWhat::Orth => "orth",
        }
    }
}

fn witness_json(r: &QuadReport) -> Value {
    match &r.witness {
        Some(w) => json!({"side": r.side.as_str(), "u": w.u, "v": w.v, "common": w.common.to_vec()}),
        None => Value::Null,
    }
}

pub fn check(input: &Path, what: CheckWhat) -> CliResult<Outcome> {
    let started = Instant::now();
    let inputs = json!({"input": input.display().to_string(), "what": what.as_str()});
    let text = read_input(input)?;
    let result = match what {
        CheckWhat::Orth => {
            let p = matrix::parse_pattern(&text)?;
            let verdict = comb_orthogonal(&p)?;
            let rows = comb_row_orthogonal(&p);
            let cols = comb_row_orthogonal(&p.transpose());
            let nnz = nnz_report(&p).ok().map(|r| {
                json!({"nnz": r.nnz, "bound_4n_minus_4": r.bound_4n_minus_4, "meets": r.meets})
            });
            json!({
                "verdict": verdict,
                "row_witness": rows.witness,
                "column_witness": cols.witness,
                "nnz": nnz,
            })
        }
        CheckWhat::Out | CheckWhat::In => {
            let t = matrix::parse_any(&text)?;
            let side = if what == CheckWhat::Out { Side::Out } else { Side::In };
            let r = quadrangularity(&t, side);
            json!({"n": t.n(), "verdict": r.verdict, "witness": witness_json(&r)})
        }
        CheckWhat::Quad => {
            let t = matrix::parse_any(&text)?;
            let out = quadrangularity(&t, Side::Out);
            let inn = quadrangularity(&t, Side::In);
            let first = if out.verdict { &inn } else { &out };
            let trace = classify(&t);
            let conditions: Vec<Value> = trace
                .conditions
                .iter()
                .map(|c| json!({"name": c.name, "holds": c.holds}))
                .collect();
            json!({
                "n": t.n(),
                "verdict": out.verdict && inn.verdict,
                "out": out.verdict,
                "in": inn.verdict,
                "witness": witness_json(first),
                "trace": {"rule": trace.rule.id(), "conditions": conditions, "verdict": trace.verdict},
            })
        }
    };
    let holds = result["verdict"] == json!(true);
    Ok(timed(started, outcome(JsonReport::new("check", inputs, result), holds)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomWhat {
    Number,
    Graph,
    Competition,
}

pub fn dom(input: &Path, what: DomWhat) -> CliResult<Outcome> {
    let started = Instant::now();
    let name = match what {
        DomWhat::Number => "number",
        DomWhat::Graph => "graph",
        DomWhat::Competition => "competition",
    };
    let inputs = json!({"input": input.display().to_string(), "what": name});
    let t = load(input)?;
    let result = match what {
        DomWhat::Number => {
            let info = domination_number(&t)?;
            json!({"n": t.n(), "gamma": info.gamma, "min_set": info.min_set})
        }
        DomWhat::Graph | DomWhat::Competition => {
            let g = if what == DomWhat::Graph {
                domination_graph(&t)
            } else {
                competition_graph(&t)
            };
            json!({"n": g.n, "edge_count": g.edge_count(), "edges": g.edges})
        }
    };
    Ok(timed(started, outcome(JsonReport::new("dom", inputs, result), true)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    All,
    First,
    Family,
}

pub fn search(n: usize, mode: SearchMode) -> CliResult<Outcome> {
    let started = Instant::now();
    let mode_name = match mode {
        SearchMode::All => "all",
        SearchMode::First => "first",
        SearchMode::Family => "family",
    };
    let inputs = json!({"n": n, "mode": mode_name});
    let (result, holds) = match mode {
        SearchMode::All => {
            check_search_order(n, DEFAULT_MAX_SEARCH_N)?;
            let hits = sweep::search_all(n)?;
            let lists: Vec<&[usize]> = hits.iter().map(|s| s.members()).collect();
            let examined = symbol_count(n)?;
            (json!({"hits": lists, "hit_count": hits.len(), "examined": examined}), !hits.is_empty())
        }
        SearchMode::First => {
            check_search_order(n, DEFAULT_MAX_SEARCH_N)?;
            let (hit, examined) = sweep::search_first(n)?;
            let found = hit.is_some();
            let lists: Vec<Vec<usize>> = hit.into_iter().map(|s| s.members().to_vec()).collect();
            (json!({"hits": lists, "hit_count": lists.len(), "examined": examined}), found)
        }
        SearchMode::Family => {
            let sym = family_symbol(n)?;
            let criterion = symbol_criterion(&sym)?.verdict;
            let direct = quadtour_core::orthogonality::is_quadrangular(&rotational(&sym));
            (
                json!({"symbol": sym.members(), "criterion": criterion, "direct": direct, "verdict": criterion && direct}),
                criterion && direct,
            )
        }
    };
    Ok(timed(started, outcome(JsonReport::new("search", inputs, result), holds)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Theorems,
    Exhaustive,
}

/// Seeded random tournaments added to the theorem corpus.
pub const THEOREM_RANDOM_COUNT: u64 = 500;
/// Largest `n` for random members of the theorem corpus.
pub const MAX_THEOREM_N: usize = 32;

pub fn verify(suite: Suite, n_max: usize, input: Option<&Path>) -> CliResult<Outcome> {
    let started = Instant::now();
    let suite_name = match suite {
        Suite::All => "all",
        Suite::Theorems => "theorems",
        Suite::Exhaustive => "exhaustive",
    };
    let inputs = json!({
        "suite": suite_name,
        "n_max": n_max,
        "input": input.map(|p| p.display().to_string()),
    });
    let wants_exhaustive = matches!(suite, Suite::All | Suite::Exhaustive);
    let wants_theorems = matches!(suite, Suite::All | Suite::Theorems);
    if n_max == 0 {
        return Err(CliError::Usage("n-max must be positive".into()));
    }
    if wants_exhaustive && n_max > sweep::MAX_EXHAUSTIVE_N {
        return Err(CliError::Usage(format!(
            "exhaustive sweep limited to n-max <= {}, got {n_max}",
            sweep::MAX_EXHAUSTIVE_N
        )));
    }
    if wants_theorems && n_max > MAX_THEOREM_N {
        return Err(CliError::Usage(format!(
            "theorem corpus limited to n-max <= {MAX_THEOREM_N}, got {n_max}"
        )));
    }
    let mut sections = serde_json::Map::new();
    let mut holds = true;
    if wants_theorems {
        let corpus = match input {
            Some(p) => vec![(p.display().to_string(), load(p)?, None)],
            None => sweep::theorem_corpus(n_max, THEOREM_RANDOM_COUNT),
        };
        let s = sweep::verify_corpus(&corpus);
        holds &= s.verdict;
        sections.insert("theorems".into(), serde_json::to_value(s).expect("plain data"));
    }
    if wants_exhaustive {
        let s = sweep::verify_exhaustive(n_max)?;
        holds &= s.verdict;
        sections.insert("exhaustive".into(), serde_json::to_value(s).expect("plain data"));
    }
    sections.insert("verdict".into(), json!(holds));
    let report = JsonReport::new("verify", inputs, Value::Object(sections));
    Ok(timed(started, outcome(report, holds)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

pub fn export(input: &Path, format: ExportFormat) -> CliResult<Outcome> {
    let t = load(input)?;
    let (name, text) = match format {
        ExportFormat::Dot => ("dot", matrix::render_dot(&t)),
        ExportFormat::Json => ("json", matrix::render_json(&t)),
    };
    let inputs = json!({"input": input.display().to_string(), "format": name});
    let report = JsonReport::new("export", inputs, json!({"n": t.n(), "text": text}));
    Ok(Outcome {
        report,
        exit: EXIT_HOLDS,
        raw: Some(text),
    })
}
