use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use pbm_core::chain::ChainContext;
use pbm_core::mset::MsetJson;
use pbm_core::pomset::{ideal_from_json, IdealFilter};
use pbm_core::verify::{self, SweepParams};
use pbm_core::{
    BlockCode, BlockVector, CodeJson, ConfigJson, Error, ErrorKind, Ideal, SpaceConfig,
    DEFAULT_MAX_SPACE,
};

type Result<T> = std::result::Result<T, Error>;

/// Analysis of block codes under the pomset block metric over Z_m.
#[derive(Parser, Debug)]
#[command(name = "pbm", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Space configuration JSON file: {"m", "pi", "pomset"}.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Code JSON file: {"config"?, "generators" | "codewords"}.
    #[arg(long, global = true)]
    pub code: Option<PathBuf>,
    /// Ideal as inline mset JSON or a file holding it.
    #[arg(long, global = true)]
    pub ideal: Option<String>,
    #[arg(long, global = true)]
    pub radius: Option<u32>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest space that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SPACE)]
    pub max_space: usize,
    /// Print a human-readable summary to stderr.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run any combination of analyses; a single one prints its bare result.
    Analyze(AnalyzeArgs),
    /// List ideals of the configured pomset.
    Ideals {
        #[arg(long)]
        cardinality: Option<u32>,
        /// Number of labels in the root set.
        #[arg(long)]
        roots: Option<usize>,
        /// Number of maximal labels.
        #[arg(long)]
        maximal: Option<usize>,
    },
    /// Size (and optionally members) of B_I(center) or of the radius ball.
    Ball {
        /// Center vector as a JSON array; zero by default.
        #[arg(long)]
        center: Option<String>,
        #[arg(long)]
        enumerate: bool,
    },
    /// Singleton bound data and MDS tests.
    Mds,
    /// I-perfect test (--ideal) or r-perfect and r-error-correcting tests (--radius).
    Perfect,
    /// Dual code by annihilator scan.
    Dual,
    /// Weight distribution of an MDS code over a chain.
    WeightDistribution,
    /// Check claims against the brute-force oracle.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Default)]
pub struct AnalyzeArgs {
    /// Weight of a vector given as a JSON array.
    #[arg(long, value_name = "VECTOR")]
    pub weight: Option<String>,
    /// Distance between two vectors.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    pub distance: Option<Vec<String>>,
    #[arg(long)]
    pub min_distance: bool,
    /// All ideals of the pomset.
    #[arg(long)]
    pub ideals: bool,
    /// |B_I| for --ideal.
    #[arg(long)]
    pub ball_cardinality: bool,
    #[arg(long)]
    pub mds: bool,
    /// I-perfect test for --ideal.
    #[arg(long)]
    pub i_perfect: bool,
    /// r-perfect test for --radius.
    #[arg(long)]
    pub r_perfect: bool,
    #[arg(long)]
    pub dual: bool,
    #[arg(long)]
    pub weight_distribution: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Bundled worked examples (the default).
    #[arg(long)]
    pub all: bool,
    /// Randomized sweep over general pomsets.
    #[arg(long)]
    pub sweep: bool,
    /// Randomized sweep over chains.
    #[arg(long)]
    pub chain: bool,
    /// Instances per sweep.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
}

/// What a command prints and how the process exits.
pub struct Output {
    pub json: String,
    pub summary: String,
    pub status: u8,
}

pub fn exit_status(e: &Error) -> u8 {
    match e.kind() {
        ErrorKind::Parse => 2,
        ErrorKind::Precondition => 3,
        ErrorKind::Cap => 4,
        ErrorKind::Invariant => 5,
    }
}

const VIOLATION: u8 = 5;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn inline_or_file(s: &str) -> Result<String> {
    let t = s.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        Ok(s.to_string())
    } else {
        read(Path::new(s))
    }
}

struct Inputs<'a> {
    g: &'a Global,
}

impl Inputs<'_> {
    fn config_opt(&self) -> Result<Option<SpaceConfig>> {
        match &self.g.config {
            Some(p) => Ok(Some(
                serde_json::from_str::<ConfigJson>(&read(p)?)?.build()?,
            )),
            None => Ok(None),
        }
    }

    fn code(&self) -> Result<BlockCode> {
        let path = self
            .g
            .code
            .as_ref()
            .ok_or_else(|| Error::Parse("--code is required".into()))?;
        let json: CodeJson = serde_json::from_str(&read(path)?)?;
        json.build(self.config_opt()?.as_ref(), self.g.max_space)
    }

    /// The config from --config, or else from the code file.
    fn config(&self) -> Result<SpaceConfig> {
        if let Some(c) = self.config_opt()? {
            return Ok(c);
        }
        if self.g.code.is_some() {
            return Ok(self.code()?.config().clone());
        }
        Err(Error::Parse("--config is required".into()))
    }

    fn ideal(&self, cfg: &SpaceConfig) -> Result<Ideal> {
        let s = self
            .g
            .ideal
            .as_deref()
            .ok_or_else(|| Error::Parse("--ideal is required".into()))?;
        let json: MsetJson = serde_json::from_str(&inline_or_file(s)?)?;
        ideal_from_json(cfg.pomset(), json)
    }

    fn radius(&self) -> Result<u32> {
        self.g
            .radius
            .ok_or_else(|| Error::Parse("--radius is required".into()))
    }
}

fn vector(cfg: &SpaceConfig, s: &str) -> Result<BlockVector> {
    cfg.vector(serde_json::from_str(s)?)
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn ideal_value(i: &Ideal) -> Value {
    to_value(MsetJson::from(i.as_mset()))
}

/// One analysis result with the exit status it calls for.
struct Piece {
    value: Value,
    summary: String,
    status: u8,
}

impl Piece {
    fn ok(value: Value, summary: impl Into<String>) -> Self {
        Piece {
            value,
            summary: summary.into(),
            status: 0,
        }
    }
}

fn mds_short(code: &BlockCode) -> Piece {
    let s = code.singleton();
    let mds = s.attained();
    Piece::ok(
        json!({"mds": mds, "r": s.r, "bound": s.bound, "max_sum": s.max_sum}),
        format!(
            "MDS: {mds} (r = {}, max sum {} vs bound {})",
            s.r, s.max_sum, s.bound
        ),
    )
}

fn mds_full(code: &BlockCode) -> Piece {
    let s = code.singleton();
    let poset = code.is_mds_poset_block();
    let mut value = to_value(&s);
    value["mds"] = json!(s.attained());
    value["poset_block_mds"] = json!(poset);
    value["singleton_family"] = Value::Array(
        code.singleton_family(true)
            .iter()
            .map(ideal_value)
            .collect(),
    );
    value["loose_singleton_family"] = Value::Array(
        code.singleton_family(false)
            .iter()
            .map(ideal_value)
            .collect(),
    );
    let status = if s.holds() && (!s.attained() || poset) {
        0
    } else {
        VIOLATION
    };
    Piece {
        value,
        summary: format!(
            "d = {}, r = {}, max sum {} vs bound {}: MDS {}, poset block MDS {poset}",
            s.min_distance,
            s.r,
            s.max_sum,
            s.bound,
            s.attained()
        ),
        status,
    }
}

fn weight_distribution(code: &BlockCode) -> Result<Piece> {
    let ctx = ChainContext::new(code.config().clone())?;
    let report = ctx.mds_weight_distribution(code)?;
    let status = if report.closed_form_match {
        0
    } else {
        VIOLATION
    };
    Ok(Piece {
        summary: format!(
            "closed form matches: {} ({} mismatches; printed index reading: {} mismatches)",
            report.closed_form_match,
            report.mismatches.len(),
            report.literal_mismatches.len()
        ),
        value: to_value(&report),
        status,
    })
}

fn dual(code: &BlockCode, cap: usize) -> Result<Piece> {
    let d = code.dual(cap)?;
    let product = code.len() as u128 * d.len() as u128;
    let status = if Some(product) == code.config().space_size() {
        0
    } else {
        VIOLATION
    };
    Ok(Piece {
        summary: format!("|C⊥| = {}", d.len()),
        value: to_value(d.to_json()),
        status,
    })
}

fn ideals(cfg: &SpaceConfig, filter: &IdealFilter) -> Piece {
    let list = cfg.pomset().enumerate_ideals(filter);
    Piece::ok(
        Value::Array(list.iter().map(ideal_value).collect()),
        format!("{} ideals", list.len()),
    )
}

fn analyze(inputs: &Inputs, a: &AnalyzeArgs) -> Result<Vec<(&'static str, Piece)>> {
    let g = inputs.g;
    let cap = g.max_space;
    let cfg = inputs.config()?;
    let code = if g.code.is_some() {
        Some(inputs.code()?)
    } else {
        None
    };
    let need_code = || {
        code.as_ref()
            .ok_or_else(|| Error::Parse("--code is required".into()))
    };
    let mut out = Vec::new();
    if let Some(v) = &a.weight {
        let w = cfg.weight(&vector(&cfg, v)?);
        out.push(("weight", Piece::ok(json!(w), format!("weight {w}"))));
    }
    if let Some(uv) = &a.distance {
        let d = cfg.distance(&vector(&cfg, &uv[0])?, &vector(&cfg, &uv[1])?)?;
        out.push(("distance", Piece::ok(json!(d), format!("distance {d}"))));
    }
    if a.min_distance {
        let d = need_code()?.min_distance()?;
        out.push((
            "min_distance",
            Piece::ok(json!(d), format!("minimum distance {d}")),
        ));
    }
    if a.ideals {
        out.push(("ideals", ideals(&cfg, &IdealFilter::default())));
    }
    if a.ball_cardinality {
        let i = inputs.ideal(&cfg)?;
        let b = cfg.ball_cardinality(&i)?;
        out.push((
            "ball_cardinality",
            Piece::ok(json!(b as u64), format!("|B_{i}| = {b}")),
        ));
    }
    if a.mds {
        out.push(("mds", mds_short(need_code()?)));
    }
    if a.i_perfect {
        let i = inputs.ideal(&cfg)?;
        let p = need_code()?.is_i_perfect(&i, cap)?;
        out.push((
            "i_perfect",
            Piece::ok(json!(p), format!("{i}-perfect: {p}")),
        ));
    }
    if a.r_perfect {
        let r = inputs.radius()?;
        let p = need_code()?.is_r_perfect(r, cap)?;
        out.push((
            "r_perfect",
            Piece::ok(json!(p), format!("{r}-perfect: {p}")),
        ));
    }
    if a.dual {
        out.push(("dual", dual(need_code()?, cap)?));
    }
    if a.weight_distribution {
        out.push(("weight_distribution", weight_distribution(need_code()?)?));
    }
    if out.is_empty() {
        return Err(Error::Parse("no analysis requested".into()));
    }
    Ok(out)
}

fn verify_cmd(g: &Global, a: &VerifyArgs) -> Result<Piece> {
    let mut value = json!({});
    let mut lines = Vec::new();
    let mut pass = true;
    if a.all || !(a.sweep || a.chain) {
        let reports = verify::bundled_reports(g.max_space)?;
        let failed = reports.iter().filter(|r| !r.pass).count();
        pass &= failed == 0;
        lines.push(format!(
            "bundled: {} checks, {failed} failed",
            reports.len()
        ));
        for r in reports.iter().filter(|r| !r.pass) {
            lines.push(format!(
                "  FAIL {} on {}: expected {} got {}",
                r.claim, r.instance, r.expected, r.computed
            ));
        }
        value["bundled"] = to_value(&reports);
    }
    let sweeps = [
        (
            a.sweep,
            "sweep",
            SweepParams::general(g.seed, a.count),
            verify::run_general_sweep as fn(SweepParams) -> _,
        ),
        (
            a.chain,
            "chain_sweep",
            SweepParams::chain(g.seed, a.count),
            verify::run_chain_sweep,
        ),
    ];
    for (wanted, key, mut params, run) in sweeps {
        if !wanted {
            continue;
        }
        params.max_space = params.max_space.min(g.max_space);
        let report = run(params);
        pass &= report.all_pass();
        lines.push(format!(
            "{key}: {} instances, {} errors",
            report.instances,
            report.errors.len()
        ));
        for c in &report.claims {
            lines.push(format!(
                "  {:<48} {:>6} checked {:>6} violations",
                c.claim, c.checked, c.violations
            ));
        }
        value[key] = to_value(&report);
    }
    value["pass"] = json!(pass);
    Ok(Piece {
        value,
        summary: lines.join("\n"),
        status: if pass { 0 } else { VIOLATION },
    })
}

fn perfect(inputs: &Inputs) -> Result<Piece> {
    let g = inputs.g;
    let code = inputs.code()?;
    let cfg = code.config().clone();
    if g.ideal.is_some() {
        let i = inputs.ideal(&cfg)?;
        let p = code.is_i_perfect(&i, g.max_space)?;
        return Ok(Piece::ok(
            json!({"ideal": ideal_value(&i), "i_perfect": p}),
            format!("{i}-perfect: {p}"),
        ));
    }
    let r = inputs.radius()?;
    let perfect = code.is_r_perfect(r, g.max_space)?;
    let direct = code.is_r_error_correcting(r, g.max_space)?;
    let criterion = code.r_error_correcting_criterion(r);
    Ok(Piece {
        value: json!({"radius": r, "r_perfect": perfect, "error_correcting": direct, "criterion": criterion}),
        summary: format!("{r}-perfect: {perfect}; {r}-error-correcting: {direct} (support-union criterion: {criterion})"),
        status: if direct == criterion { 0 } else { VIOLATION },
    })
}

fn ball(inputs: &Inputs, center: Option<&str>, enumerate: bool) -> Result<Piece> {
    let g = inputs.g;
    let cfg = inputs.config()?;
    let u = match center {
        Some(s) => vector(&cfg, s)?,
        None => cfg.zero(),
    };
    let (size, members) = if g.ideal.is_some() {
        let i = inputs.ideal(&cfg)?;
        let size = cfg.ball_cardinality(&i)?;
        (
            size,
            if enumerate {
                Some(cfg.enumerate_ball(&u, &i, g.max_space)?)
            } else {
                None
            },
        )
    } else {
        let members = cfg.r_ball(&u, inputs.radius()?, g.max_space)?;
        (members.len() as u128, enumerate.then_some(members))
    };
    let mut value = json!({"cardinality": size as u64});
    if let Some(m) = members {
        value["vectors"] = to_value(m);
    }
    Ok(Piece::ok(value, format!("{size} vectors")))
}

pub fn run(cli: &Cli) -> Result<Output> {
    if let Some(j) = cli.global.jobs {
        // Fails only if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global();
    }
    let inputs = Inputs { g: &cli.global };
    let pieces: Vec<(&str, Piece)> = match &cli.command {
        Command::Analyze(a) => analyze(&inputs, a)?,
        Command::Ideals {
            cardinality,
            roots,
            maximal,
        } => {
            let filter = IdealFilter {
                cardinality: *cardinality,
                root_size: *roots,
                maximal: *maximal,
            };
            vec![("ideals", ideals(&inputs.config()?, &filter))]
        }
        Command::Ball { center, enumerate } => {
            vec![("ball", ball(&inputs, center.as_deref(), *enumerate)?)]
        }
        Command::Mds => vec![("mds", mds_full(&inputs.code()?))],
        Command::Perfect => vec![("perfect", perfect(&inputs)?)],
        Command::Dual => vec![("dual", dual(&inputs.code()?, cli.global.max_space)?)],
        Command::WeightDistribution => {
            vec![("weight_distribution", weight_distribution(&inputs.code()?)?)]
        }
        Command::Verify(a) => vec![("verify", verify_cmd(&cli.global, a)?)],
    };
    let status = pieces.iter().map(|(_, p)| p.status).max().unwrap_or(0);
    let summary = pieces
        .iter()
        .map(|(_, p)| p.summary.as_str())
        .collect::<Vec<_>>()
        .join("\n");
    let value = if pieces.len() == 1 {
        pieces.into_iter().next().unwrap().1.value
    } else {
        Value::Object(
            pieces
                .into_iter()
                .map(|(k, p)| (k.to_string(), p.value))
                .collect(),
        )
    };
    Ok(Output {
        json: value.to_string(),
        summary,
        status,
    })
}
