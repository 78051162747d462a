//! Command implementations behind the `affcrit` binary.
//!
//! Every command maps a [`RunConfig`] to a JSON value using public library
//! operations only. Output objects have sorted keys and embed the tool
//! version and the configuration that produced them.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::path::Path;

use crate::affine_weights::{AffineSystem, AffineWeight};
use crate::characters;
use crate::error::{Error, Result};
use crate::linkage::{self, Relation, Window};
use crate::rational;
use crate::root_data::{preset_cartan, CartanSpec, FiniteRootSystem};
use crate::subgeneric::{detect_subgeneric, SubgenericDatum, Verdict};
use crate::zigzag::{self, ZigzagWindow};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

const DEFAULT_DEPTH: u32 = 4;
const DEFAULT_RADIUS: i64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    SubgenericCheck,
    ClassEnum,
    ClassChain,
    HomTable,
    JantzenRhs,
    VermaChar,
    Zigzag,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::SubgenericCheck => "subgeneric-check",
            Command::ClassEnum => "class-enum",
            Command::ClassChain => "class-chain",
            Command::HomTable => "hom-table",
            Command::JantzenRhs => "jantzen-rhs",
            Command::VermaChar => "verma-char",
            Command::Zigzag => "zigzag",
        }
    }
}

/// Fully resolved inputs of one run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    /// Preset name or the path the Cartan matrix was read from.
    pub system: String,
    pub cartan: Vec<Vec<i64>>,
    #[serde(default)]
    pub weight: Option<AffineWeight>,
    #[serde(default)]
    pub depth: Option<u32>,
    #[serde(default)]
    pub radius: Option<i64>,
    #[serde(default)]
    pub relation: Option<Relation>,
    #[serde(default)]
    pub cayley: bool,
    #[serde(default)]
    pub out: Option<String>,
}

impl RunConfig {
    pub fn from_json(s: &str) -> Result<RunConfig> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("config JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config always serializes")
    }
}

/// Resolve `--system`: a preset name, or a path to `{"cartan": [[...]]}`.
pub fn resolve_system(arg: &str) -> Result<Vec<Vec<i64>>> {
    if let Some(m) = preset_cartan(arg) {
        return Ok(m);
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(Error::Parse(format!("{arg:?} is neither a preset (A1, A2, B2, G2) nor a file")));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {arg}: {e}")))?;
    Ok(CartanSpec::from_json(&text)?.cartan)
}

fn envelope(config: &RunConfig, body: Value) -> Value {
    let mut out = json!({
        "tool_version": TOOL_VERSION,
        "command": config.command.name(),
        "config_echo": serde_json::to_value(config).expect("config serializes"),
    });
    if let (Value::Object(o), Value::Object(b)) = (&mut out, body) {
        o.extend(b);
    }
    out
}

fn weight(config: &RunConfig, sys: &AffineSystem) -> Result<AffineWeight> {
    let w = config
        .weight
        .clone()
        .ok_or_else(|| Error::Parse(format!("{} needs --weight", config.command.name())))?;
    sys.check_weight(&w)?;
    Ok(w)
}

fn radius(config: &RunConfig) -> Result<i64> {
    let r = config.radius.unwrap_or(DEFAULT_RADIUS);
    if r < 1 {
        return Err(Error::InvalidArgument(format!("radius must be at least 1, got {r}")));
    }
    Ok(r)
}

fn datum(sys: &AffineSystem, w: &AffineWeight) -> Result<SubgenericDatum> {
    SubgenericDatum::new(sys, w)
}

fn weights_json(ws: &[AffineWeight]) -> Value {
    serde_json::to_value(ws).unwrap()
}

/// Run a command and return its JSON document.
pub fn run(config: &RunConfig) -> Result<Value> {
    let finite = FiniteRootSystem::from_cartan(&config.cartan)?;
    let sys = AffineSystem::new(finite);
    let body = match config.command {
        Command::SubgenericCheck => cmd_subgeneric_check(&sys, config)?,
        Command::ClassEnum => cmd_class(&sys, config)?,
        Command::ClassChain => cmd_class_chain(&sys, config)?,
        Command::HomTable => cmd_hom_table(&sys, config)?,
        Command::JantzenRhs => cmd_jantzen(&sys, config)?,
        Command::VermaChar => cmd_verma_char(&sys, config)?,
        Command::Zigzag => cmd_zigzag(&sys, config)?,
    };
    Ok(envelope(config, body))
}

/// Render a document the way the binary prints it.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn cmd_subgeneric_check(sys: &AffineSystem, config: &RunConfig) -> Result<Value> {
    let w = weight(config, sys)?;
    let verdict = detect_subgeneric(sys, &w);
    let mut body = json!({ "verdict": verdict.name(), "weight": w });
    match &verdict {
        Verdict::Subgeneric(d) => {
            body["alpha"] = json!(d.alpha);
            body["pairing"] = json!(d.pairing);
            body["dominant"] = json!(d.is_dominant());
            body["chain"] = weights_json(&d.chain(radius(config)?));
        }
        Verdict::NonSubgeneric { reason } => body["reason"] = json!(reason),
        Verdict::Generic | Verdict::NonCritical => {}
    }
    Ok(body)
}

pub fn cmd_class(sys: &AffineSystem, config: &RunConfig) -> Result<Value> {
    let w = weight(config, sys)?;
    let relation = config.relation.unwrap_or(Relation::Restricted);
    let depth = config.depth.unwrap_or(DEFAULT_DEPTH);
    let class = linkage::class_enumerate(sys, &w, relation, &Window::new(w.clone(), depth));
    Ok(json!({
        "relation": relation,
        "depth": depth,
        "size": class.members.len(),
        "totally_ordered": class.is_totally_ordered(sys),
        "integral_roots": class.integral_roots,
        "members": class.members,
    }))
}

pub fn cmd_class_chain(sys: &AffineSystem, config: &RunConfig) -> Result<Value> {
    let d = datum(sys, &weight(config, sys)?)?;
    let r = radius(config)?;
    let chain: Vec<Value> = (-r..=r)
        .map(|i| {
            let di = d.shifted(i);
            json!({ "index": i, "weight": di.gamma, "pairing": di.pairing, "dominant": di.is_dominant() })
        })
        .collect();
    Ok(json!({ "alpha": d.alpha, "period": d.period(), "chain": chain }))
}

pub fn cmd_hom_table(sys: &AffineSystem, config: &RunConfig) -> Result<Value> {
    let d = datum(sys, &weight(config, sys)?)?;
    let r = radius(config)?;
    let vertices = d.chain(r);
    let mut matrix = Vec::new();
    for i in -r..=r {
        let di = d.shifted(i);
        let row: Vec<u32> = vertices.iter().map(|v| di.hom_dimension(sys, v)).collect::<Result<_>>()?;
        matrix.push(row);
    }
    Ok(json!({
        "alpha": d.alpha,
        "indices": (-r..=r).collect::<Vec<_>>(),
        "vertices": vertices,
        "matrix": matrix,
    }))
}

pub fn cmd_jantzen(sys: &AffineSystem, config: &RunConfig) -> Result<Value> {
    let w = weight(config, sys)?;
    let depth = config.depth.unwrap_or(DEFAULT_DEPTH);
    let terms = characters::jantzen_rhs_terms(sys, &w, &Window::new(w.clone(), depth));
    let multiset: Vec<Value> = characters::term_multiset(&terms)
        .into_iter()
        .map(|(weight, multiplicity)| json!({ "weight": weight, "multiplicity": multiplicity }))
        .collect();
    Ok(json!({ "critical": sys.is_critical(&w), "depth": depth, "terms": terms, "multiset": multiset }))
}

pub fn cmd_verma_char(sys: &AffineSystem, config: &RunConfig) -> Result<Value> {
    let w = weight(config, sys)?;
    let depth = config.depth.unwrap_or(DEFAULT_DEPTH);
    let ch = characters::verma_character(sys, &w, depth);
    let coefficients: Vec<Value> = ch
        .coefficients
        .iter()
        .map(|(c, m)| {
            let weight = &w - &sys.from_affine_coords(c);
            json!({ "coords": c, "weight": weight, "multiplicity": m.to_string() })
        })
        .collect();
    Ok(json!({ "top": w, "depth": depth, "coefficients": coefficients }))
}

pub fn cmd_zigzag(sys: &AffineSystem, config: &RunConfig) -> Result<Value> {
    let d = datum(sys, &weight(config, sys)?)?;
    let win = ZigzagWindow::build(&d, radius(config)?)?;
    let report = zigzag::verify_against_formulas(sys, &win);
    let mut body = json!({
        "radius": win.radius,
        "indices": win.indices().collect::<Vec<_>>(),
        "vertices": win.vertices,
        "commutation_scalar": rational::fmt_q(&win.commutation_scalar),
        "dimension_matrix": win.dimension_matrix(),
        "verification": {
            "status": if report.passes() { "pass" } else { "fail" },
            "report": report,
        },
    });
    if config.cayley {
        body["cayley"] = serde_json::to_value(win.cayley_table()).unwrap();
    }
    Ok(body)
}
