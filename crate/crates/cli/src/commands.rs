use std::collections::{HashMap, HashSet};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use votekit::enumeration::{certified_count, enumerate_simple, GameClass, Mask, MAX_POSET_VOTERS};
use votekit::geometry::{known_distinct_count, GapAnalysis, Metric, VectorKey};
use votekit::indices::{power_vector, Engine, SmallProfile};
use votekit::inverse::{
    eu_council, inverse_heuristic, parse_populations, ExactSolver, HeuristicConfig, InverseResult,
    Target,
};
use votekit::number::{decimal7, fraction_string};
use votekit::{parse_game, Coalition, CompleteGame, Game, IndexKind, PowerVector};

use crate::cache::Cache;
use crate::output::{Format, Report, Row};

#[derive(Parser, Debug)]
#[command(
    name = "votekit",
    version,
    about = "Exact power indices and approximation gaps for voting games"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Directory for catalog files.
    #[arg(
        long,
        global = true,
        env = "VOTEKIT_CACHE",
        default_value = ".votekit-cache"
    )]
    pub cache_dir: PathBuf,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Allow runs over the eight-voter catalogs (hours of CPU time).
    #[arg(long, global = true)]
    pub long_running: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Power vector of a game.
    Index {
        game: String,
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long, value_enum, default_value = "auto")]
        engine: EngineArg,
    },
    /// Structural properties of a game, and outcomes of given coalitions.
    Eval {
        game: String,
        /// Coalition to evaluate, e.g. "1,3,4" (repeatable).
        #[arg(long = "coalition")]
        coalitions: Vec<String>,
    },
    /// Number of distinct power vectors per class and voter count.
    Tables {
        #[arg(long, value_enum, default_value = "both")]
        class: ClassArg,
        #[arg(long, default_value = "3..7", value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[command(flatten)]
        index: IndexArgs,
    },
    /// Enumerate a game class into the cache and certify its size.
    Enumerate {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Print every game.
        #[arg(long)]
        list: bool,
    },
    /// Worst-case distance between complete and weighted power vectors.
    Omega {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long, value_enum, default_value = "both")]
        metric: MetricArg,
    },
    /// Weighted game closest to a target power vector.
    Inverse {
        /// Target file, or one of `beta`, `eu`, `padded`.
        #[arg(long)]
        target: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = parse_kind)]
        index: Option<IndexKind>,
        #[arg(long, value_enum, default_value = "l1")]
        metric: MetricArg,
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeArg,
        /// Null voters appended to the built-in extremal game (`padded` target).
        #[arg(long, default_value_t = 1)]
        pads: usize,
        /// Member populations (`eu` target).
        #[arg(long)]
        populations: Option<PathBuf>,
        /// Use exact population shares instead of rounding to per mille.
        #[arg(long)]
        exact_shares: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Power of council members under the double-majority rule with a blocking clause.
    Eu {
        #[arg(long)]
        populations: PathBuf,
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long)]
        exact_shares: bool,
        /// Also search for a close weighted game.
        #[arg(long)]
        approximate: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct IndexArgs {
    /// Shapley-Shubik index.
    #[arg(long)]
    ssi: bool,
    /// Penrose-Banzhaf index.
    #[arg(long)]
    pbi: bool,
    #[arg(long = "index", value_enum)]
    which: Option<IndexArg>,
}

impl IndexArgs {
    fn kinds(&self) -> Vec<IndexKind> {
        let mut out = Vec::new();
        let which = self.which.unwrap_or(if self.ssi || self.pbi {
            IndexArg::None
        } else {
            IndexArg::Both
        });
        if self.ssi || matches!(which, IndexArg::Ssi | IndexArg::Both) {
            out.push(IndexKind::Ssi);
        }
        if self.pbi || matches!(which, IndexArg::Pbi | IndexArg::Both) {
            out.push(IndexKind::Pbi);
        }
        out
    }
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    /// Weight vectors evaluated by the local search.
    #[arg(long, default_value_t = HeuristicConfig::default().budget)]
    budget: u64,
    #[arg(long, default_value_t = HeuristicConfig::default().weight_sum)]
    weight_sum: u64,
    #[arg(long, default_value_t = HeuristicConfig::default().restarts)]
    restarts: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexArg {
    Ssi,
    Pbi,
    Both,
    #[value(skip)]
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Wg,
    Cg,
    Sg,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    L1,
    Linf,
    Both,
}

impl MetricArg {
    fn metrics(self) -> Vec<Metric> {
        match self {
            MetricArg::L1 => vec![Metric::L1],
            MetricArg::Linf => vec![Metric::Linf],
            MetricArg::Both => vec![Metric::L1, Metric::Linf],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Direct,
    Dp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Exact,
    Heuristic,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N or A..B, got '{s}'");
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b
                .trim_start_matches('=')
                .trim()
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let n: usize = s.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

fn parse_kind(s: &str) -> Result<IndexKind, String> {
    s.parse().map_err(|e: votekit::Error| e.to_string())
}

pub struct Outcome {
    pub report: Report,
    pub mismatches: Vec<String>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Outcome {
        Outcome {
            report,
            mismatches: Vec::new(),
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Index {
            game,
            index,
            engine,
        } => cmd_index(game, &index.kinds(), *engine),
        Command::Eval { game, coalitions } => cmd_eval(game, coalitions),
        Command::Tables { class, n, index } => cmd_tables(cli, *class, n.clone(), &index.kinds()),
        Command::Enumerate { class, n, list } => cmd_enumerate(cli, *class, n.clone(), *list),
        Command::Omega { n, index, metric } => {
            cmd_omega(cli, *n, &index.kinds(), &metric.metrics())
        }
        Command::Inverse {
            target,
            n,
            index,
            metric,
            mode,
            pads,
            populations,
            exact_shares,
            search,
        } => {
            let req = InverseRequest {
                target,
                n: *n,
                kind: *index,
                metrics: metric.metrics(),
                mode: *mode,
                pads: *pads,
                populations: populations.as_ref(),
                exact_shares: *exact_shares,
                search,
            };
            cmd_inverse(cli, &req)
        }
        Command::Eu {
            populations,
            index,
            exact_shares,
            approximate,
            search,
        } => cmd_eu(
            cli,
            populations,
            &index.kinds(),
            *exact_shares,
            *approximate,
            search,
        ),
    }
}

fn check_voters(cli: &Cli, n: usize) -> Result<()> {
    if n == 0 || n > MAX_POSET_VOTERS {
        bail!("voter count {n} is outside 1..={MAX_POSET_VOTERS}; catalogs beyond eight voters are out of reach");
    }
    if n == MAX_POSET_VOTERS && !cli.long_running {
        bail!("eight-voter catalogs take hours; pass --long-running to proceed");
    }
    Ok(())
}

fn vector_json(v: &PowerVector) -> Value {
    json!({
        "fractions": v.entries().iter().map(fraction_string).collect::<Vec<_>>(),
        "decimals": v.entries().iter().map(decimal7).collect::<Vec<_>>(),
    })
}

fn vector_text(v: &PowerVector) -> String {
    v.entries()
        .iter()
        .map(fraction_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_index(text: &str, kinds: &[IndexKind], engine: EngineArg) -> Result<Outcome> {
    let game = parse_game(text)?;
    let engine = match engine {
        EngineArg::Auto => Engine::Auto,
        EngineArg::Direct => Engine::Direct,
        EngineArg::Dp => Engine::Dp,
    };
    let mut report = Report::new("index");
    report.set("game", game.to_string());
    report.set(
        "indices",
        kinds.iter().map(|k| k.name()).collect::<Vec<_>>(),
    );
    for &kind in kinds {
        let v = power_vector(&game, kind, engine)?;
        for (i, e) in v.entries().iter().enumerate() {
            report.push(vec![
                ("index", json!(kind.name())),
                ("voter", json!(i + 1)),
                ("fraction", json!(fraction_string(e))),
                ("decimal", json!(decimal7(e))),
            ]);
        }
        report.note(format!("{}: {}", kind.name(), vector_text(&v)));
    }
    Ok(report.into())
}

fn parse_coalition(text: &str, n: usize) -> Result<Coalition> {
    let mut voters = Vec::new();
    for t in text
        .trim()
        .trim_matches(|c| c == '{' || c == '}')
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
    {
        let v: usize = t
            .parse()
            .with_context(|| format!("bad voter '{t}' in coalition '{text}'"))?;
        if v == 0 || v > n {
            bail!("voter {v} is outside 1..={n}");
        }
        voters.push(v);
    }
    Ok(Coalition::from_voters(voters))
}

fn cmd_eval(text: &str, coalitions: &[String]) -> Result<Outcome> {
    let game = parse_game(text)?;
    let n = game.n();
    let mut report = Report::new("eval");
    report.set("game", game.to_string());
    let mut prop = |k: &str, v: Value| report.push(vec![("property", json!(k)), ("value", v)]);
    prop("game", json!(game.to_string()));
    prop("voters", json!(n));
    let kind = match &game {
        Game::Explicit(_) => "explicit",
        Game::Weighted(_) => "weighted",
        Game::Complete(_) => "complete",
        Game::Combo(_) => "combination",
    };
    prop("representation", json!(kind));
    let explicit = game.to_explicit().ok();
    if let Some(e) = &explicit {
        prop("winning coalitions", json!(e.winning_count()));
        prop(
            "minimal winning",
            json!(e
                .minimal_winning()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()),
        );
        prop("complete", json!(e.is_complete()));
        if let Ok(c) = e.shift_minimal_winning() {
            prop("shift-minimal winning", json!(c.to_string()));
        }
        match e.is_weighted() {
            Some(w) => {
                prop("weighted", json!(true));
                prop("weights", json!(w.to_string()));
            }
            None => prop("weighted", json!(false)),
        }
        let nulls: Vec<usize> = (0..n)
            .filter(|&i| e.is_null_voter(i))
            .map(|i| i + 1)
            .collect();
        prop("null voters", json!(nulls));
    }
    for c in coalitions {
        let s = parse_coalition(c, n)?;
        prop(
            &format!("v({s})"),
            json!(if game.is_winning(s) { "win" } else { "lose" }),
        );
    }
    if explicit.is_none() {
        report.note("characteristic function too large to tabulate; structural properties skipped");
    }
    Ok(report.into())
}

fn table_of(g: &CompleteGame) -> Result<Mask> {
    let e = g.to_explicit()?;
    let mut t: Mask = [0; 4];
    t[..e.table().len()].copy_from_slice(e.table());
    Ok(t)
}

fn classes(class: ClassArg) -> Result<Vec<GameClass>> {
    Ok(match class {
        ClassArg::Wg => vec![GameClass::Weighted],
        ClassArg::Cg => vec![GameClass::Complete],
        ClassArg::Both => vec![GameClass::Weighted, GameClass::Complete],
        ClassArg::Sg => bail!("distinct-vector tables cover weighted and complete games only"),
    })
}

fn status(found: u64, expected: Option<u64>, what: String, mismatches: &mut Vec<String>) -> Value {
    match expected {
        Some(e) if e == found => json!("ok"),
        Some(e) => {
            mismatches.push(format!("{what}: found {found}, expected {e}"));
            json!("MISMATCH")
        }
        None => json!("unverified"),
    }
}

fn cmd_tables(
    cli: &Cli,
    class: ClassArg,
    range: RangeInclusive<usize>,
    kinds: &[IndexKind],
) -> Result<Outcome> {
    let cache = Cache::new(&cli.cache_dir);
    let mut report = Report::new("tables");
    report.set("n", format!("{}..{}", range.start(), range.end()));
    report.set(
        "indices",
        kinds.iter().map(|k| k.name()).collect::<Vec<_>>(),
    );
    let mut mismatches = Vec::new();
    for n in range {
        check_voters(cli, n)?;
        for class in classes(class)? {
            let (sets, prepared) = cache.fold(
                class,
                n,
                || vec![HashSet::<VectorKey>::new(); kinds.len()],
                |sets, g| {
                    let t = table_of(g).expect("cached games fit eight voters");
                    let p = SmallProfile::from_table(n, &t);
                    for (s, &k) in sets.iter_mut().zip(kinds) {
                        s.insert(VectorKey::from_profile(&p, k));
                    }
                },
            )?;
            let games_status = status(
                prepared.count,
                certified_count(class, n),
                format!("#{}({n})", class.name().to_uppercase()),
                &mut mismatches,
            );
            for (set, &kind) in sets.iter().zip(kinds) {
                let found = set.len() as u64;
                let expected = known_distinct_count(class, kind, n);
                let what = format!(
                    "distinct {} vectors of {}({n})",
                    kind.name(),
                    class.name().to_uppercase()
                );
                report.push(vec![
                    ("class", json!(class.name())),
                    ("n", json!(n)),
                    ("index", json!(kind.name())),
                    ("games", json!(prepared.count)),
                    ("games_check", games_status.clone()),
                    ("distinct", json!(found)),
                    ("expected", expected.map_or(Value::Null, |e| json!(e))),
                    ("check", status(found, expected, what, &mut mismatches)),
                ]);
            }
        }
    }
    Ok(Outcome { report, mismatches })
}

fn cmd_enumerate(
    cli: &Cli,
    class: ClassArg,
    range: RangeInclusive<usize>,
    list: bool,
) -> Result<Outcome> {
    let cache = Cache::new(&cli.cache_dir);
    let mut report = Report::new("enumerate");
    report.set("n", format!("{}..{}", range.start(), range.end()));
    let mut mismatches = Vec::new();
    for n in range {
        if class == ClassArg::Sg {
            let cat = enumerate_simple(n)?;
            let count = cat.len() as u64;
            let check = status(
                count,
                certified_count(GameClass::Simple, n),
                format!("#SG({n})"),
                &mut mismatches,
            );
            report.push(vec![
                ("class", json!("sg")),
                ("n", json!(n)),
                ("games", json!(count)),
                ("check", check),
            ]);
            if list {
                for e in &cat.entries {
                    let weights = e
                        .certificate
                        .as_ref()
                        .map_or(Value::Null, |w| json!(w.to_string()));
                    report.push(vec![
                        ("class", json!("sg")),
                        ("n", json!(n)),
                        ("game", json!(e.game.to_string())),
                        ("weights", weights),
                    ]);
                }
            }
            continue;
        }
        check_voters(cli, n)?;
        for class in classes(class)? {
            let prepared = cache.prepare(class, n)?;
            let check = status(
                prepared.count,
                certified_count(class, n),
                format!("#{}({n})", class.name().to_uppercase()),
                &mut mismatches,
            );
            report.push(vec![
                ("class", json!(class.name())),
                ("n", json!(n)),
                ("games", json!(prepared.count)),
                ("check", check),
            ]);
            report.note(format!(
                "{} {}",
                if prepared.reused { "reused" } else { "wrote" },
                prepared.path.display()
            ));
            if list {
                let (games, _) =
                    cache.fold(class, n, Vec::new, |v: &mut Vec<CompleteGame>, g| {
                        v.push(g.clone())
                    })?;
                let mut games = games;
                games.sort();
                for g in games {
                    let weights = if class == GameClass::Weighted {
                        g.is_weighted()
                            .map_or(Value::Null, |w| json!(w.to_string()))
                    } else {
                        Value::Null
                    };
                    report.push(vec![
                        ("class", json!(class.name())),
                        ("n", json!(n)),
                        ("game", json!(g.to_string())),
                        ("weights", weights),
                    ]);
                }
            }
        }
    }
    Ok(Outcome { report, mismatches })
}

fn cmd_omega(cli: &Cli, n: usize, kinds: &[IndexKind], metrics: &[Metric]) -> Result<Outcome> {
    check_voters(cli, n)?;
    let mut report = Report::new("omega");
    report.set("n", n);
    let analysis = GapAnalysis::new(n, kinds)?;
    for &kind in kinds {
        for &metric in metrics {
            let r = analysis.report(kind, metric)?;
            report.push(vec![
                ("n", json!(n)),
                ("index", json!(kind.name())),
                ("metric", json!(metric.name())),
                ("omega", json!(r.omega_decimal())),
                ("exact", json!(fraction_string(&r.omega))),
                ("argmax", json!(r.argmax.to_string())),
                ("nearest", json!(r.nearest_certificate.to_string())),
                ("attaining", json!(r.attaining.len())),
                ("argmax_vector", vector_json(&r.argmax_vector)),
                ("nearest_vector", vector_json(&r.nearest_vector)),
                (
                    "attaining_games",
                    json!(r
                        .attaining
                        .iter()
                        .map(|g| g.to_string())
                        .collect::<Vec<_>>()),
                ),
            ]);
            if cli.format == Format::Table {
                for g in &r.attaining {
                    report.note(format!("{} {} attained by {g}", kind.name(), metric));
                }
            }
        }
    }
    Ok(report.into())
}

struct InverseRequest<'a> {
    target: &'a str,
    n: Option<usize>,
    kind: Option<IndexKind>,
    metrics: Vec<Metric>,
    mode: ModeArg,
    pads: usize,
    populations: Option<&'a PathBuf>,
    exact_shares: bool,
    search: &'a SearchArgs,
}

/// The seven-voter complete game whose Shapley-Shubik vector is hardest to
/// match in Manhattan distance.
const EXTREMAL_SSI_L1: &str = "n=7; shiftminwin={1},{2,4},{4,5,6,7}";

fn heuristic_config(cli: &Cli, s: &SearchArgs) -> HeuristicConfig {
    HeuristicConfig {
        budget: s.budget,
        weight_sum: s.weight_sum,
        restarts: s.restarts,
        seed: cli.seed,
    }
}

fn build_target(req: &InverseRequest) -> Result<Target> {
    let kind = req.kind.unwrap_or(IndexKind::Ssi);
    let target = match req.target {
        "beta" => Target::beta(
            req.n.ok_or_else(|| anyhow!("the beta target needs --n"))?,
            kind,
        )?,
        "padded" => {
            let base = parse_game(EXTREMAL_SSI_L1)?.add_null_voters(req.pads)?;
            Target::exact(power_vector(&base, kind, Engine::Auto)?)?
        }
        "eu" => {
            let path = req
                .populations
                .ok_or_else(|| anyhow!("the eu target needs --populations"))?;
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let game = Game::Combo(eu_council(&parse_populations(&text)?, !req.exact_shares)?);
            Target::exact(power_vector(&game, kind, Engine::Dp)?)?
        }
        path => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading target file {path}"))?;
            let t: Target = text.parse()?;
            if req.kind.is_some_and(|k| k != t.kind()) {
                bail!(
                    "--index {} disagrees with the target file ({})",
                    kind.name(),
                    t.kind().name()
                );
            }
            t
        }
    };
    if req.n.is_some_and(|n| n != target.n()) {
        bail!(
            "--n {} disagrees with the target's {} voters",
            req.n.unwrap(),
            target.n()
        );
    }
    Ok(target)
}

fn exact_solver(cli: &Cli, n: usize, kind: IndexKind) -> Result<ExactSolver> {
    if n < MAX_POSET_VOTERS {
        return Ok(ExactSolver::new(n, kind)?);
    }
    check_voters(cli, n)?;
    let cache = Cache::new(&cli.cache_dir);
    let (best, _) = cache.fold(
        GameClass::Weighted,
        n,
        HashMap::<PowerVector, CompleteGame>::new,
        |m, g| {
            let v = power_vector(&Game::Complete(g.clone()), kind, Engine::Direct)
                .expect("cached games are valid");
            match m.get(&v) {
                Some(h) if h <= g => {}
                _ => {
                    m.insert(v, g.clone());
                }
            }
        },
    )?;
    Ok(ExactSolver::from_games(
        n,
        kind,
        best.into_values().map(Ok),
    )?)
}

fn inverse_row(target: &str, r: &InverseResult) -> Row {
    vec![
        ("target", json!(target)),
        ("n", json!(r.vector.n())),
        ("index", json!(r.vector.kind().name())),
        ("metric", json!(r.metric.name())),
        ("mode", json!(r.mode.name())),
        ("distance", json!(r.distance_decimal())),
        ("exact", json!(fraction_string(&r.distance))),
        ("game", json!(r.game.to_string())),
        ("vector", json!(vector_text(&r.vector))),
        ("seed", r.seed.map_or(Value::Null, |s| json!(s))),
        ("evaluations", json!(r.evaluations)),
    ]
}

fn cmd_inverse(cli: &Cli, req: &InverseRequest) -> Result<Outcome> {
    let target = build_target(req)?;
    let n = target.n();
    let exact = match req.mode {
        ModeArg::Exact => true,
        ModeArg::Heuristic => false,
        ModeArg::Auto => n < MAX_POSET_VOTERS || (n == MAX_POSET_VOTERS && cli.long_running),
    };
    let mut report = Report::new("inverse");
    report.set("target", req.target);
    report.set("n", n);
    report.set("index", target.kind().name());
    report.set("seed", cli.seed);
    report.set("target_vector", vector_json(target.vector()));
    let solver = if exact {
        Some(exact_solver(cli, n, target.kind())?)
    } else {
        None
    };
    for &metric in &req.metrics {
        let r = match &solver {
            Some(s) => s.solve(&target, metric)?,
            None => inverse_heuristic(&target, metric, &heuristic_config(cli, req.search))?,
        };
        report.push(inverse_row(req.target, &r));
    }
    if solver.is_none() {
        report.note("heuristic distances are upper bounds on the true minimum");
    }
    Ok(report.into())
}

fn cmd_eu(
    cli: &Cli,
    path: &PathBuf,
    kinds: &[IndexKind],
    exact_shares: bool,
    approximate: bool,
    search: &SearchArgs,
) -> Result<Outcome> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let members = parse_populations(&text)?;
    let game = Game::Combo(eu_council(&members, !exact_shares)?);
    let mut report = Report::new("eu");
    report.set("populations", path.display().to_string());
    report.set("members", members.len());
    report.set("shares", if exact_shares { "exact" } else { "per-mille" });
    for &kind in kinds {
        let v = power_vector(&game, kind, Engine::Dp)?;
        for (m, e) in members.iter().zip(v.entries()) {
            report.push(vec![
                ("index", json!(kind.name())),
                ("member", json!(m.name)),
                ("population", json!(m.population)),
                ("fraction", json!(fraction_string(&e))),
                ("decimal", json!(decimal7(&e))),
            ]);
        }
        if approximate {
            let r = inverse_heuristic(
                &Target::exact(v)?,
                Metric::L1,
                &heuristic_config(cli, search),
            )?;
            report.note(format!(
                "{}: closest weighted game found {} at l1 distance {} ({})",
                kind.name(),
                r.game,
                r.distance_decimal(),
                r.mode
            ));
        }
    }
    Ok(report.into())
}
