use std::path::{Path, PathBuf};

use mvtop::chain::BinOp;
use mvtop::covers::{self, CompactnessMode, CompactnessReport};
use mvtop::verify::{self, Suite};
use mvtop::{maps, FuzzyFamily, FuzzySet, ProductSpace, Settings, Topology};
use serde_json::{json, Value};

use crate::doc::{
    self, Caps, CertificateDocument, Declared, Entry, FamilyDocument, MapDocument, MetricDocument,
    SpaceDocument, SubcoverDocument,
};
use crate::error::CliError;

/// Rendered output plus the verdict that selects exit code 0 or 1.
pub struct Outcome {
    pub text: String,
    pub verdict: bool,
}

impl Outcome {
    fn new(text: String, verdict: bool) -> Self {
        Outcome { text, verdict }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckKind {
    Topology,
    Compact,
    StrongCompact,
    Hausdorff,
    Zerodim,
    Stone,
    LargeSubbase,
}

impl CheckKind {
    fn name(self) -> &'static str {
        match self {
            CheckKind::Topology => "topology",
            CheckKind::Compact => "compact",
            CheckKind::StrongCompact => "strong-compact",
            CheckKind::Hausdorff => "hausdorff",
            CheckKind::Zerodim => "zerodim",
            CheckKind::Stone => "stone",
            CheckKind::LargeSubbase => "large-subbase",
        }
    }
}

/// Shared context: base settings and the caps given as flags.
pub struct Context {
    pub settings: Settings,
    pub caps: Caps,
}

pub fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => doc::read_file(p),
        _ => std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::input(format!("stdin: {e}"))),
    }
}

fn set_json(s: &FuzzySet) -> Value {
    json!(s.values())
}

fn family_json(f: &FuzzyFamily) -> Value {
    Value::Array(f.iter().map(set_json).collect())
}

pub fn gen(ctx: &Context, text: &str) -> Result<Outcome, CliError> {
    let d: SpaceDocument = doc::parse(text)?;
    let settings = d.settings(&ctx.settings, ctx.caps);
    let t = d.topology(&settings)?;
    let out = SpaceDocument::from_topology(d.name.clone(), &t, d.caps);
    Ok(Outcome::new(doc::render(&out), true))
}

/// First violated topology axiom of a family, if any.
fn topology_failure(f: &FuzzyFamily) -> Option<Value> {
    let (chain, w) = (f.chain(), f.width());
    for (name, s) in [("zero", FuzzySet::zero(chain, w)), ("one", FuzzySet::one(chain, w))] {
        if !f.contains(&s) {
            return Some(json!({ "missing": name }));
        }
    }
    for a in f {
        for b in f {
            for op in [BinOp::Oplus, BinOp::Odot, BinOp::Meet, BinOp::Join] {
                let c = a.combine(op, b).expect("same shape");
                if !f.contains(&c) {
                    return Some(json!({
                        "op": op.symbol(),
                        "left": set_json(a),
                        "right": set_json(b),
                        "result": set_json(&c),
                    }));
                }
            }
        }
    }
    None
}

fn compactness_json(r: &CompactnessReport) -> Value {
    json!({
        "mode": match r.mode { CompactnessMode::Analytic => "analytic", CompactnessMode::Oracle => "oracle" },
        "covers_checked": r.covers_checked,
        "counterexample": r.counterexample.as_ref().map(family_json),
        "certificate": r.sample.as_ref().map(|c| c.entries().iter()
            .map(|(s, m)| json!({ "set": set_json(s), "multiplicity": m }))
            .collect::<Vec<_>>()),
    })
}

fn hausdorff_json(t: &Topology) -> (bool, Value) {
    let r = t.hausdorff();
    let label = |i: usize| t.carrier().label(i).to_string();
    let witness = match r.failure {
        Some((x, y)) => json!({ "inseparable": [label(x), label(y)] }),
        None => Value::Array(
            r.witnesses
                .iter()
                .map(|p| {
                    json!({
                        "x": label(p.x),
                        "y": label(p.y),
                        "around_x": set_json(&p.around_x),
                        "around_y": set_json(&p.around_y),
                    })
                })
                .collect(),
        ),
    };
    (r.separated, witness)
}

/// First open that is not the join of the clopens below it.
fn zerodim_failure(t: &Topology) -> Option<FuzzySet> {
    let clopens = t.clopens();
    t.opens()
        .iter()
        .find(|o| {
            let below = FuzzyFamily::new(t.chain(), t.width(), clopens.iter().filter(|c| c.leq(o)).cloned())
                .expect("same shape");
            below.join() != **o
        })
        .cloned()
}

fn large_failure(f: &FuzzyFamily) -> Option<Value> {
    let n = f.chain().n() as u32;
    f.iter().find_map(|a| {
        (2..=n).find_map(|k| {
            let m = a.scale(k);
            (!f.contains(&m)).then(|| json!({ "set": set_json(a), "multiple": k, "result": set_json(&m) }))
        })
    })
}

pub fn check(ctx: &Context, kind: CheckKind, oracle: bool, text: &str) -> Result<Outcome, CliError> {
    let d: SpaceDocument = doc::parse(text)?;
    let settings = d.settings(&ctx.settings, ctx.caps);
    let mode = if oracle { CompactnessMode::Oracle } else { CompactnessMode::Analytic };
    let declared = match d.declared()? {
        Declared::Subbase(f) | Declared::Opens(f) => f,
    };
    let (verdict, details) = match kind {
        CheckKind::Topology => {
            let failure = topology_failure(&declared);
            (failure.is_none(), json!({ "violation": failure }))
        }
        CheckKind::LargeSubbase => {
            let failure = large_failure(&declared);
            (failure.is_none(), json!({ "violation": failure }))
        }
        CheckKind::Compact | CheckKind::StrongCompact => {
            let t = d.topology(&settings)?;
            let r = if kind == CheckKind::Compact {
                covers::is_compact(&t, mode, &settings)?
            } else {
                covers::is_strongly_compact(&t, mode, &settings)?
            };
            (r.compact, compactness_json(&r))
        }
        CheckKind::Hausdorff => {
            let t = d.topology(&settings)?;
            let (ok, w) = hausdorff_json(&t);
            (ok, json!({ "separation": w }))
        }
        CheckKind::Zerodim => {
            let t = d.topology(&settings)?;
            let failure = zerodim_failure(&t);
            (
                failure.is_none(),
                json!({ "clopens": family_json(&t.clopens()), "violation": failure.as_ref().map(set_json) }),
            )
        }
        CheckKind::Stone => {
            let t = d.topology(&settings)?;
            let compact = covers::is_compact(&t, mode, &settings)?;
            let (hausdorff, sep) = hausdorff_json(&t);
            let zerodim = zerodim_failure(&t);
            (
                compact.compact && hausdorff && zerodim.is_none(),
                json!({
                    "compact": compactness_json(&compact),
                    "hausdorff": hausdorff,
                    "separation": sep,
                    "zero_dimensional": zerodim.is_none(),
                    "violation": zerodim.as_ref().map(set_json),
                }),
            )
        }
    };
    let report = json!({ "kind": kind.name(), "verdict": verdict, "details": details });
    Ok(Outcome::new(doc::render(&report), verdict))
}

pub fn product(ctx: &Context, inputs: &[PathBuf], subbase_only: bool) -> Result<Outcome, CliError> {
    let docs = inputs
        .iter()
        .map(|p| doc::parse::<SpaceDocument>(&read_input(Some(p))?))
        .collect::<Result<Vec<_>, _>>()?;
    let settings = docs
        .first()
        .map(|d| d.settings(&ctx.settings, ctx.caps))
        .unwrap_or(ctx.settings);
    let factors = docs
        .iter()
        .map(|d| d.topology(&settings))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(n) = factors.iter().map(|f| f.chain().n()).find(|&n| n != factors[0].chain().n()) {
        return Err(CliError::input(format!(
            "factors use different chains ({} and {n})",
            factors[0].chain().n()
        )));
    }
    let p = ProductSpace::new(factors, &settings)?;
    let out = if subbase_only {
        SpaceDocument {
            name: None,
            chain: p.chain().n() as u32,
            points: p.carrier().labels().to_vec(),
            subbase: Some(doc::vectors(p.subbase())),
            opens: None,
            caps: None,
        }
    } else {
        SpaceDocument::from_topology(None, p.topology(&settings)?, None)
    };
    Ok(Outcome::new(doc::render(&out), true))
}

fn family_settings(ctx: &Context, d: &FamilyDocument) -> Settings {
    let doc_caps = d.caps.unwrap_or_default();
    Settings {
        max_opens: ctx.caps.max_opens.or(doc_caps.max_opens).unwrap_or(ctx.settings.max_opens),
        max_nodes: ctx.caps.max_nodes.or(doc_caps.max_nodes).unwrap_or(ctx.settings.max_nodes),
        exec: ctx.settings.exec,
    }
}

pub fn mincover(ctx: &Context, text: &str) -> Result<Outcome, CliError> {
    let d: FamilyDocument = doc::parse(text)?;
    let family = d.family()?;
    let solved = covers::minimal_additive_cover(&family, &family_settings(ctx, &d))?;
    let (out, ok) = match solved {
        Some(s) => (
            CertificateDocument::Feasible {
                entries: s
                    .solution
                    .entries()
                    .iter()
                    .map(|(set, m)| Entry {
                        set: set.values().iter().map(|&v| v as u32).collect(),
                        multiplicity: *m,
                    })
                    .collect(),
                total: s.solution.total(),
                nodes: s.nodes,
            },
            true,
        ),
        None => (CertificateDocument::Infeasible, false),
    };
    Ok(Outcome::new(doc::render(&out), ok))
}

pub fn subcover(ctx: &Context, text: &str) -> Result<Outcome, CliError> {
    let d: FamilyDocument = doc::parse(text)?;
    let family = d.family()?;
    let solved = covers::minimal_subcover(&family, &family_settings(ctx, &d))?;
    let (out, ok) = match solved {
        Some(s) => (
            SubcoverDocument::Feasible {
                members: doc::vectors(&s.solution),
                indices: s
                    .solution
                    .iter()
                    .map(|m| family.position(m).expect("member of the input"))
                    .collect(),
                size: s.solution.len(),
                nodes: s.nodes,
            },
            true,
        ),
        None => (SubcoverDocument::Infeasible, false),
    };
    Ok(Outcome::new(doc::render(&out), ok))
}

pub fn metric(ctx: &Context, text: &str, subbase_only: bool) -> Result<Outcome, CliError> {
    let d: MetricDocument = doc::parse(text)?;
    let settings = Settings {
        max_opens: ctx.caps.max_opens.unwrap_or(ctx.settings.max_opens),
        max_nodes: ctx.caps.max_nodes.unwrap_or(ctx.settings.max_nodes),
        exec: ctx.settings.exec,
    };
    let inst = d.instance()?;
    let centers = d.centers()?;
    let radii = d.radii();
    let out = if subbase_only {
        let centers = centers.unwrap_or_else(|| inst.default_centers());
        let radii = radii.unwrap_or_else(|| inst.default_radii());
        let balls = inst.ball_family(&centers, &radii)?;
        SpaceDocument {
            name: d.name.clone(),
            chain: d.chain,
            points: d.points.clone(),
            subbase: Some(doc::vectors(&balls)),
            opens: None,
            caps: None,
        }
    } else {
        let m = inst.induced(centers.as_deref(), radii.as_deref(), &settings)?;
        SpaceDocument::from_topology(d.name.clone(), &m.topology, None)
    };
    Ok(Outcome::new(doc::render(&out), true))
}

pub fn continuity(ctx: &Context, text: &str, base: Option<&Path>) -> Result<Outcome, CliError> {
    let d: MapDocument = doc::parse(text)?;
    let source_doc = d.domain.resolve(base)?;
    let target_doc = d.codomain.resolve(base)?;
    let source = source_doc.topology(&source_doc.settings(&ctx.settings, ctx.caps))?;
    let target = target_doc.topology(&target_doc.settings(&ctx.settings, ctx.caps))?;
    if source.chain() != target.chain() {
        return Err(CliError::input("domain and codomain use different chains"));
    }
    let f = d.map(source.carrier(), target.carrier())?;
    let violation = maps::continuity_violation(&f, &source, &target)?;
    let continuous = violation.is_none();
    let report = json!({
        "continuous": continuous,
        "violation": violation.as_ref().map(|o| json!({
            "open": set_json(o),
            "preimage": set_json(&f.preimage(o).expect("same shape")),
        })),
        "open_map": maps::is_open_map(&f, &source, &target)?,
        "closed_map": maps::is_closed_map(&f, &source, &target)?,
        "homeomorphism": maps::is_homeomorphism(&f, &source, &target)?,
    });
    Ok(Outcome::new(doc::render(&report), continuous))
}

pub fn verify(ctx: &Context, suite: &str, seed: u64, cases: u64) -> Result<Outcome, CliError> {
    let suite: Suite = suite.parse().map_err(CliError::Input)?;
    let settings = Settings {
        max_opens: ctx.caps.max_opens.unwrap_or(ctx.settings.max_opens),
        max_nodes: ctx.caps.max_nodes.unwrap_or(ctx.settings.max_nodes),
        exec: ctx.settings.exec,
    };
    let report = verify::run_suite(suite, seed, cases, &settings);
    Ok(Outcome::new(report.to_string(), report.all_passed()))
}
