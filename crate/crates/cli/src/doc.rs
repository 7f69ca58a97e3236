//! JSON documents read and written by the command-line tool.

use std::path::{Path, PathBuf};

use mvtop::topology::{FuzzyPoint, MetricInstance};
use mvtop::{Carrier, Chain, FuzzyFamily, FuzzySet, PointMap, Settings, Topology};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

type Distance = Ratio<u64>;

/// Resource caps carried by a document; flags on the command line win.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Caps {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_opens: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_nodes: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub chain: u32,
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subbase: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<Caps>,
}

/// The family a space document declares.
pub enum Declared {
    Subbase(FuzzyFamily),
    Opens(FuzzyFamily),
}

pub fn vectors(family: &FuzzyFamily) -> Vec<Vec<u32>> {
    family
        .iter()
        .map(|s| s.values().iter().map(|&v| v as u32).collect())
        .collect()
}

fn family_from(chain: Chain, width: usize, rows: &[Vec<u32>], what: &str) -> Result<FuzzyFamily, CliError> {
    let sets = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != width {
                return Err(CliError::input(format!(
                    "{what}[{i}] has {} entries, expected {width}",
                    row.len()
                )));
            }
            FuzzySet::new(chain, row.iter().copied()).map_err(|e| CliError::input(format!("{what}[{i}]: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FuzzyFamily::new(chain, width, sets)?)
}

impl SpaceDocument {
    pub fn chain(&self) -> Result<Chain, CliError> {
        Ok(Chain::new(self.chain)?)
    }

    pub fn carrier(&self) -> Result<Carrier, CliError> {
        Ok(Carrier::new(self.points.iter().cloned())?)
    }

    pub fn declared(&self) -> Result<Declared, CliError> {
        let chain = self.chain()?;
        let width = self.carrier()?.len();
        match (&self.subbase, &self.opens) {
            (Some(s), None) => Ok(Declared::Subbase(family_from(chain, width, s, "subbase")?)),
            (None, Some(o)) => Ok(Declared::Opens(family_from(chain, width, o, "opens")?)),
            _ => Err(CliError::input("a space document declares exactly one of subbase and opens")),
        }
    }

    /// Caps with flag overrides applied.
    pub fn settings(&self, flags: &Settings, overridden: Caps) -> Settings {
        let doc = self.caps.unwrap_or_default();
        Settings {
            max_opens: overridden.max_opens.or(doc.max_opens).unwrap_or(flags.max_opens),
            max_nodes: overridden.max_nodes.or(doc.max_nodes).unwrap_or(flags.max_nodes),
            exec: flags.exec,
        }
    }

    /// The topology, generating it from the subbase if needed.
    pub fn topology(&self, settings: &Settings) -> Result<Topology, CliError> {
        let carrier = self.carrier()?;
        match self.declared()? {
            Declared::Subbase(s) => Ok(mvtop::topology::generate_from_subbase(&carrier, &s, settings)?),
            Declared::Opens(o) => {
                if o.len() > settings.max_opens {
                    return Err(CliError::Resource(format!(
                        "document lists {} opens, cap is {}",
                        o.len(),
                        settings.max_opens
                    )));
                }
                Topology::new(carrier, o).map_err(|e| CliError::input(format!("opens: {e}")))
            }
        }
    }

    pub fn from_topology(name: Option<String>, topology: &Topology, caps: Option<Caps>) -> Self {
        SpaceDocument {
            name,
            chain: topology.chain().n() as u32,
            points: topology.carrier().labels().to_vec(),
            subbase: None,
            opens: Some(vectors(topology.opens())),
            caps,
        }
    }
}

/// A space given inline or as a path relative to the referring document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Path(String),
    Inline(SpaceDocument),
}

impl SpaceRef {
    pub fn resolve(&self, base: Option<&Path>) -> Result<SpaceDocument, CliError> {
        match self {
            SpaceRef::Inline(d) => Ok(d.clone()),
            SpaceRef::Path(p) => {
                let path = match base {
                    Some(dir) => dir.join(p),
                    None => PathBuf::from(p),
                };
                parse(&read_file(&path)?)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub domain: SpaceRef,
    pub codomain: SpaceRef,
    pub map: Vec<usize>,
}

impl MapDocument {
    pub fn map(&self, domain: &Carrier, codomain: &Carrier) -> Result<PointMap, CliError> {
        PointMap::new(domain.clone(), codomain.clone(), self.map.clone())
            .map_err(|e| CliError::input(format!("map: {e}")))
    }
}

/// A bare family of fuzzy sets; `points` may be omitted when the family is
/// nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    pub chain: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
    pub family: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<Caps>,
}

impl FamilyDocument {
    pub fn family(&self) -> Result<FuzzyFamily, CliError> {
        let chain = Chain::new(self.chain)?;
        let width = match (&self.points, self.family.first()) {
            (Some(p), _) => Carrier::new(p.iter().cloned())?.len(),
            (None, Some(first)) => first.len(),
            (None, None) => return Err(CliError::input("an empty family needs a points list")),
        };
        if width == 0 {
            return Err(CliError::input("fuzzy sets need at least one point"));
        }
        family_from(chain, width, &self.family, "family")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub set: Vec<u32>,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CertificateDocument {
    Feasible { entries: Vec<Entry>, total: u64, nodes: u64 },
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum SubcoverDocument {
    Feasible { members: Vec<Vec<u32>>, indices: Vec<usize>, size: usize, nodes: u64 },
    Infeasible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CenterSpec {
    pub point: usize,
    pub value: u32,
}

/// Distances are integers over a common positive `scale`, so `dist[x][y]`
/// stands for `dist[x][y] / scale`; radii use the same scale.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub chain: u32,
    pub points: Vec<String>,
    pub scale: u64,
    pub dist: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radii: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centers: Option<Vec<CenterSpec>>,
}

impl MetricDocument {
    pub fn instance(&self) -> Result<MetricInstance, CliError> {
        if self.scale == 0 {
            return Err(CliError::input("scale must be positive"));
        }
        let chain = Chain::new(self.chain)?;
        let carrier = Carrier::new(self.points.iter().cloned())?;
        let dist = self
            .dist
            .iter()
            .map(|row| row.iter().map(|&d| Distance::new(d, self.scale)).collect())
            .collect();
        Ok(MetricInstance::new(carrier, chain, dist)?)
    }

    pub fn radii(&self) -> Option<Vec<Distance>> {
        self.radii
            .as_ref()
            .map(|r| r.iter().map(|&d| Distance::new(d, self.scale)).collect())
    }

    pub fn centers(&self) -> Result<Option<Vec<FuzzyPoint>>, CliError> {
        let Some(centers) = &self.centers else {
            return Ok(None);
        };
        centers
            .iter()
            .map(|c| {
                let value = u8::try_from(c.value)
                    .ok()
                    .filter(|&v| v >= 1 && v as u32 <= self.chain)
                    .ok_or_else(|| CliError::input(format!("center value {} outside 1..={}", c.value, self.chain)))?;
                if c.point >= self.points.len() {
                    return Err(CliError::input(format!("center point {} out of range", c.point)));
                }
                Ok(FuzzyPoint {
                    support: c.point,
                    value,
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::input(format!("malformed document: {e}")))
}

/// Pretty JSON with a trailing newline; field order is fixed by the types
/// and vectors of integers stay on one line.
pub fn render<T: Serialize>(value: &T) -> String {
    let pretty = serde_json::to_string_pretty(value).expect("documents serialize");
    let mut out = String::with_capacity(pretty.len());
    let mut rest = pretty.as_str();
    while let Some(open) = rest.find('[') {
        out.push_str(&rest[..open]);
        let tail = &rest[open + 1..];
        let close = tail.find(']').unwrap_or(0);
        let inner = &tail[..close];
        if close > 0 && inner.chars().all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace()) {
            out.push('[');
            let items: Vec<&str> = inner.split(',').map(str::trim).collect();
            out.push_str(&items.join(", "));
            out.push(']');
            rest = &tail[close + 1..];
        } else {
            out.push('[');
            rest = tail;
        }
    }
    out.push_str(rest);
    out.push('\n');
    out
}
