use std::io::Read;
use std::path::Path;
use std::time::Instant;

use hollowlat::classify::{classify_hull, hull_hollowness};
use hollowlat::constructions::{self, Params};
use hollowlat::lattice::enumerate_lattice_points;
use hollowlat::search::{self, SearchMode};
use hollowlat::segments::{longest_lattice_segment, modk_witness, translate_avoiding_sublattice};
use hollowlat::width::flatness_audit;
use hollowlat::{convex_hull, lattice_width, reduce_to_empty, Error, HullStructure};
use log::info;
use serde_json::{json, Value};

use crate::document::PointSetDocument;
use crate::report::{envelope, Status};
use crate::{report_value, Cli, Command, Experiment, Mode, SearchArgs};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Malformed(String),
    Precondition { report: Value, message: String },
    Internal { report: Value, message: String },
}

#[derive(Debug)]
pub enum Outcome {
    Report(Value),
    Failed(Failure),
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Report(_) => 0,
            Outcome::Failed(Failure::Malformed(_)) => 1,
            Outcome::Failed(Failure::Precondition { .. }) => 2,
            Outcome::Failed(Failure::Usage(_)) => 64,
            Outcome::Failed(Failure::Internal { .. }) => 70,
        }
    }
}

fn witness_of(e: &Error) -> Value {
    match e {
        Error::NotHollow { witness } => json!({ "interior_lattice_point": witness }),
        Error::NotSimplicial { vertices, dim } => json!({ "oversized_facet": vertices, "dim": dim }),
        Error::Degenerate { affine_dim, dim } => json!({ "affine_dim": affine_dim, "dim": dim }),
        Error::LostFullDimension {
            removed,
            inserted,
            affine_dim,
        } => {
            json!({ "removed": removed, "inserted": inserted, "affine_dim": affine_dim })
        }
        Error::TheoremViolation {
            dim,
            vertices,
            points,
        } => {
            json!({ "dim": dim, "vertices": vertices, "points": points })
        }
        _ => Value::Null,
    }
}

fn fail(command: &str, doc: Option<&PointSetDocument>, e: Error) -> Failure {
    let message = e.to_string();
    let body = |status| {
        envelope(
            command,
            doc,
            status,
            json!({ "error": message, "witness": witness_of(&e) }),
        )
    };
    match e {
        Error::EmptyInput | Error::DimensionMismatch { .. } | Error::ZeroDirection => {
            Failure::Malformed(message)
        }
        Error::InvalidParameter(_) => Failure::Usage(message),
        Error::Degenerate { .. }
        | Error::NotSimplicial { .. }
        | Error::NotHollow { .. }
        | Error::NoLatticePoints => Failure::Precondition {
            report: body(Status::PreconditionViolated),
            message,
        },
        Error::LostFullDimension { .. } | Error::InvariantViolation(_) | Error::TheoremViolation { .. } => {
            Failure::Internal {
                report: body(Status::InternalError),
                message,
            }
        }
    }
}

fn load(path: &Path) -> Result<PointSetDocument, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Malformed(format!("cannot read stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Malformed(format!("cannot read {}: {e}", path.display())))?
    };
    PointSetDocument::parse(&text).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

type Step = Result<Value, Failure>;

fn with_hull(
    command: &str,
    doc: &PointSetDocument,
    f: impl FnOnce(&HullStructure) -> hollowlat::Result<Value>,
) -> Step {
    convex_hull(&doc.points)
        .and_then(|h| f(&h))
        .map(|result| envelope(command, Some(doc), Status::Ok, result))
        .map_err(|e| fail(command, Some(doc), e))
}

fn classify_cmd(doc: &PointSetDocument) -> Step {
    with_hull("classify", doc, |h| {
        Ok(json!({ "classification": report_value(&classify_hull(h)), "hull": report_value(h) }))
    })
}

fn width_cmd(doc: &PointSetDocument) -> Step {
    with_hull("width", doc, |h| {
        let mut result = report_value(&lattice_width(h)?);
        // The flatness comparison only makes sense for lattice-free interiors.
        if hull_hollowness(h).is_hollow() {
            result["flatness_audit"] = report_value(&flatness_audit(h)?);
        }
        Ok(result)
    })
}

fn reduce_cmd(doc: &PointSetDocument) -> Step {
    with_hull("reduce", doc, |h| {
        let (q, trace) = reduce_to_empty(h)?;
        Ok(json!({
            "initial_vertices": h.vertices(),
            "trace": report_value(&trace),
            "final_hull": report_value(&q),
        }))
    })
}

fn segments_cmd(doc: &PointSetDocument, k: Option<u64>) -> Step {
    with_hull("segments", doc, |h| {
        let mut result = json!({ "longest": report_value(&longest_lattice_segment(h)?) });
        if let Some(k) = k {
            let points = enumerate_lattice_points(h);
            result["modk"] = json!({
                "k": k,
                "lattice_points": points.len(),
                "witness": report_value(&modk_witness(&points, k)?),
            });
            let m = k
                .checked_mul(2)
                .ok_or_else(|| Error::InvalidParameter("k too large".into()))?;
            let translation = translate_avoiding_sublattice(h, m)?;
            result["translation"] = json!({
                "modulus": m,
                "shift": translation.as_ref().map(|(t, _)| t),
                "translated_vertices": translation.as_ref().map(|(_, moved)| moved.vertices()),
            });
        }
        Ok(result)
    })
}

fn construct_cmd(
    kind: constructions::ConstructionKind,
    dim: usize,
    k: Option<u64>,
    n: Option<usize>,
) -> Step {
    let c =
        constructions::construct(kind, &Params { d: dim, k, n }).map_err(|e| fail("construct", None, e))?;
    let checks = constructions::verify_claims(&c).map_err(|e| fail("construct", None, e))?;
    let mut name = format!("{kind}(d={dim}");
    if let Some(k) = c.k {
        name.push_str(&format!(", k={k}"));
    }
    if let Some(n) = c.n {
        name.push_str(&format!(", n={n}"));
    }
    name.push(')');
    let mut doc = PointSetDocument::new(c.points.clone(), Some(name));
    doc.d = dim;
    doc.metadata = Some(json!({
        "construction": kind.name(),
        "k": c.k,
        "n": c.n,
        "claims": report_value(&checks),
        "notes": c.notes,
    }));
    // The output is itself a valid input document.
    let mut out = doc.to_json();
    out["schema_version"] = json!(crate::report::SCHEMA_VERSION);
    Ok(out)
}

fn search_cmd(args: &SearchArgs) -> Step {
    let result = match args.experiment {
        Experiment::Extremal => {
            let mode = match args.mode {
                Mode::Exhaustive => SearchMode::Exhaustive,
                Mode::Stochastic => SearchMode::Stochastic,
            };
            if mode == SearchMode::Stochastic && args.seed.is_none() {
                return Err(Failure::Usage("--seed is required for stochastic search".into()));
            }
            search::extremal_hollow_search(args.dim, args.box_size, mode, args.budget, args.seed)
        }
        Experiment::BallScaling => search::ball_scaling_experiment(args.dim, args.k_min, args.k),
    };
    result
        .map(|r| envelope("search", None, Status::Ok, report_value(&r)))
        .map_err(|e| fail("search", None, e))
}

fn audit_cmd(dim: usize, k: u64) -> Step {
    search::bound_audit_suite(dim, k)
        .map(|r| envelope("audit", None, Status::Ok, report_value(&r)))
        .map_err(|e| fail("audit", None, e))
}

pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let step = match &cli.command {
        Command::Classify(a) => load(&a.input).and_then(|d| classify_cmd(&d)),
        Command::Width(a) => load(&a.input).and_then(|d| width_cmd(&d)),
        Command::Reduce(a) => load(&a.input).and_then(|d| reduce_cmd(&d)),
        Command::Segments { input, k } => load(&input.input).and_then(|d| segments_cmd(&d, *k)),
        Command::Construct { kind, dim, k, n } => construct_cmd(*kind, *dim, *k, *n),
        Command::Search(args) => search_cmd(args),
        Command::Audit { dim, k } => audit_cmd(*dim, *k),
    };
    // Timing stays out of the report so reruns are byte-identical.
    info!("finished in {:.3}s", start.elapsed().as_secs_f64());
    match step {
        Ok(v) => Outcome::Report(v),
        Err(f) => Outcome::Failed(f),
    }
}
