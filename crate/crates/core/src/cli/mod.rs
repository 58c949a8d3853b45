//! Command-line jobs: read an input document, run one command, write a JSON
//! report and optionally an SVG diagram.

pub mod svg;
pub mod wire;

use std::fs;
use std::path::PathBuf;

use serde::Serialize;
use thiserror::Error;

use crate::error::Error;
use crate::fan::{
    enumerate_effective_subdivisions, secondary_cone, severi_cone_check, subfan_obstruction_witness, CensusBudget,
};
use crate::multiplicity::{severi_multiplicity, Mode};
use crate::subdivision::{classify, concave_hull_values, regular_subdivision, HeightFunction, Subdivision};
use crate::tropcurve::{dual_curve, verify_duality};
use crate::{MarkedPolygon, Rational};

use wire::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Command {
    Subdivide,
    Hull,
    Classify,
    Fan,
    Curve,
    Multiplicity,
    Census,
    Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobOptions {
    pub delta: Option<usize>,
    pub budget: Option<usize>,
    pub seed: u64,
    pub l_vs: Option<u64>,
    pub svg: Option<PathBuf>,
    pub mode: Mode,
}

impl Default for JobOptions {
    fn default() -> Self {
        Self { delta: None, budget: None, seed: 0, l_vs: None, svg: None, mode: Mode::Tilde }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub input: PathBuf,
    /// Standard output when absent.
    pub output: Option<PathBuf>,
    pub options: JobOptions,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Schema(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) | CliError::Io(_) => 2,
            CliError::Core(e) => e.exit_code(),
        }
    }
}

/// The report (pretty JSON with a trailing newline) and the optional SVG.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifacts {
    pub report: String,
    pub svg: Option<String>,
}

const GRID_STEPS: usize = 24;

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("reports serialize");
    s.push('\n');
    s
}

fn need_heights(doc: &InputDoc, base: &MarkedPolygon) -> Result<HeightFunction<Rational>, CliError> {
    doc.heights(base)?.ok_or_else(|| CliError::Schema("this command needs \"heights\"".into()))
}

/// The explicit subdivision if given, otherwise the one induced by the
/// heights.
fn need_subdivision(doc: &InputDoc, base: &MarkedPolygon) -> Result<Subdivision, CliError> {
    if let Some(s) = doc.subdivision(base)? {
        return Ok(s);
    }
    match doc.heights(base)? {
        Some(psi) => Ok(regular_subdivision(&psi)),
        None => Err(CliError::Schema("this command needs \"subdivision\" or \"heights\"".into())),
    }
}

fn validate(job: &JobSpec) -> Result<(), CliError> {
    use Command::*;
    let o = &job.options;
    if job.command == Witness && o.delta.is_none() {
        return Err(CliError::Schema("witness needs --delta".into()));
    }
    if o.svg.is_some() && matches!(job.command, Hull | Fan | Census | Witness) {
        return Err(CliError::Schema("--svg is available for subdivide, classify, curve and multiplicity".into()));
    }
    if o.budget.is_some() && job.command != Census {
        return Err(CliError::Schema("--budget only applies to census".into()));
    }
    if (o.l_vs.is_some() || o.mode != Mode::Tilde) && job.command != Multiplicity {
        return Err(CliError::Schema("--l-vs and --mode only apply to multiplicity".into()));
    }
    Ok(())
}

pub fn parse_input(text: &str) -> Result<InputDoc, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Schema(format!("input: {e}")))
}

/// Runs a job without touching the output paths.
pub fn execute(job: &JobSpec, input: &str) -> Result<Artifacts, CliError> {
    validate(job)?;
    let doc = parse_input(input)?;
    let base = doc.base()?;
    let o = &job.options;
    let (report, svg) = match job.command {
        Command::Subdivide => {
            let sub = regular_subdivision(&need_heights(&doc, &base)?);
            (to_json(&SubdivisionDoc::new(&sub)), o.svg.as_ref().map(|_| svg::render_subdivision(&sub)))
        }
        Command::Hull => {
            let psi = need_heights(&doc, &base)?;
            let cc = concave_hull_values(&psi);
            let out = HullDoc {
                heights: heights_to_wire(&psi)?,
                concave_hull: heights_to_wire(&cc)?,
                effective: cc == psi,
            };
            (to_json(&out), None)
        }
        Command::Classify => {
            let sub = need_subdivision(&doc, &base)?;
            let severi = match o.delta {
                Some(d) => Some(SeveriDoc::new(d, &severi_cone_check::<Rational>(&sub, d)?)),
                None => None,
            };
            let out = ClassificationDoc::new(&sub, &classify(&sub), severi);
            (to_json(&out), o.svg.as_ref().map(|_| svg::render_subdivision(&sub)))
        }
        Command::Fan => {
            let sub = need_subdivision(&doc, &base)?;
            let cone = secondary_cone::<Rational>(&sub)?;
            (to_json(&FanDoc { subdivision: SubdivisionDoc::new(&sub), cone: ConeDoc::new(&base, &cone)? }), None)
        }
        Command::Curve => {
            let psi = need_heights(&doc, &base)?;
            let curve = dual_curve(&psi);
            let duality = verify_duality(&psi, GRID_STEPS);
            (to_json(&CurveDoc::new(&curve, &duality)?), o.svg.as_ref().map(|_| svg::render_curve(&curve)))
        }
        Command::Multiplicity => {
            let sub = need_subdivision(&doc, &base)?;
            let r = severi_multiplicity(&sub, o.mode, o.l_vs)?;
            (to_json(&MultiplicityDoc::new(&sub, &r)?), o.svg.as_ref().map(|_| svg::render_subdivision(&sub)))
        }
        Command::Census => {
            let mut budget = CensusBudget { seed: o.seed, ..CensusBudget::default() };
            if let Some(b) = o.budget {
                budget.max_cones = b;
            }
            let census = enumerate_effective_subdivisions::<Rational>(&base, budget)?;
            (to_json(&CensusDoc::new(&census)), None)
        }
        Command::Witness => {
            let delta = o.delta.expect("validated");
            let w = subfan_obstruction_witness(&need_heights(&doc, &base)?, delta)?;
            (to_json(&WitnessDoc::new(delta, &w)), None)
        }
    };
    Ok(Artifacts { report, svg })
}

/// Reads the input, runs the job and writes its artifacts.
pub fn run(job: &JobSpec) -> Result<(), CliError> {
    let input = fs::read_to_string(&job.input).map_err(|e| CliError::Io(format!("{}: {e}", job.input.display())))?;
    let art = execute(job, &input)?;
    match &job.output {
        Some(path) => fs::write(path, &art.report).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => print!("{}", art.report),
    }
    if let (Some(path), Some(svg)) = (&job.options.svg, &art.svg) {
        fs::write(path, svg).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}
