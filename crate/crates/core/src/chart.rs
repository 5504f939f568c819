//! Charts and diagonal metrics.
//!
//! A chart is an ordered list of coordinate names plus the symbolic
//! constants that expressions on it may mention. A metric is a chart with
//! one nonzero diagonal entry per coordinate. Builtin metrics cover the
//! interior black-hole charts in four and five dimensions, the exterior
//! Schwarzschild solution, and flat space; arbitrary diagonal metrics load
//! from a small JSON document.

use serde::{Deserialize, Serialize};
use std::path::Path;
use std::sync::Arc;

use crate::exprparse::{parse_expr, ParseError, ResolveCtx};
use crate::symkernel::{sym, DiffExpr, Generator};

#[derive(Debug, Clone, thiserror::Error)]
pub enum ChartError {
    #[error("chart needs at least one coordinate")]
    Empty,
    #[error("duplicate coordinate `{0}`")]
    DuplicateCoordinate(String),
    #[error("`{0}` cannot be used as a coordinate or constant name")]
    ReservedName(String),
    #[error("signature must list one +1/-1 per coordinate")]
    BadSignature,
    #[error("metric entry {index} for `{coord}` is identically zero")]
    ZeroMetricEntry { index: usize, coord: String },
    #[error("metric needs at least {min} coordinates, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error("unknown builtin metric `{0}`")]
    UnknownBuiltin(String),
    #[error("metric entry for `{coord}`: {source}")]
    Parse { coord: String, source: ParseError },
    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(String),
}

/// Coordinate system: names, a formal signature tag, and the symbolic
/// constants in scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    coords: Vec<Arc<str>>,
    signature: Vec<i8>,
    constants: Vec<Arc<str>>,
}

const RESERVED: &[&str] = &["xi", "sin", "cos"];

impl Chart {
    /// Internal dimension floor is 1 (warped-product factors can be
    /// curves/surfaces); user-facing loaders enforce their own minimum.
    pub fn new(
        coords: Vec<&str>,
        signature: Vec<i8>,
        constants: Vec<&str>,
    ) -> Result<Chart, ChartError> {
        if coords.is_empty() {
            return Err(ChartError::Empty);
        }
        for name in coords.iter().chain(constants.iter()) {
            if RESERVED.contains(name) {
                return Err(ChartError::ReservedName(name.to_string()));
            }
        }
        let mut seen: Vec<&str> = Vec::new();
        for c in &coords {
            if seen.contains(c) {
                return Err(ChartError::DuplicateCoordinate(c.to_string()));
            }
            seen.push(c);
        }
        if signature.len() != coords.len() || signature.iter().any(|s| *s != 1 && *s != -1) {
            return Err(ChartError::BadSignature);
        }
        Ok(Chart {
            coords: coords.into_iter().map(sym).collect(),
            signature,
            constants: constants.into_iter().map(sym).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Arc<str>] {
        &self.coords
    }

    pub fn coord_name(&self, i: usize) -> &str {
        &self.coords[i]
    }

    pub fn coord_index(&self, name: &str) -> Option<usize> {
        self.coords.iter().position(|c| c.as_ref() == name)
    }

    pub fn signature(&self) -> &[i8] {
        &self.signature
    }

    pub fn constants(&self) -> &[Arc<str>] {
        &self.constants
    }

    /// True when the xi tower is meaningful on this chart (needs `t`).
    pub fn has_time(&self) -> bool {
        self.coord_index("t").is_some()
    }

    pub fn resolver(&self) -> ResolveCtx {
        ResolveCtx {
            coords: self.coords.clone(),
            constants: self.constants.clone(),
            allow_xi: self.has_time(),
        }
    }
}

/// Diagonal metric on a chart: entries and their reciprocals.
#[derive(Debug, Clone)]
pub struct Metric {
    name: String,
    chart: Chart,
    g: Vec<DiffExpr>,
    ginv: Vec<DiffExpr>,
}

/// JSON document shape for user-supplied metrics.
#[derive(Serialize, Deserialize)]
pub struct MetricDoc {
    pub name: String,
    pub coordinates: Vec<String>,
    pub signature: Vec<i8>,
    pub diagonal: Vec<String>,
    #[serde(default)]
    pub constants: Vec<String>,
}

impl Metric {
    pub fn diagonal(name: &str, chart: Chart, entries: Vec<DiffExpr>) -> Result<Metric, ChartError> {
        assert_eq!(entries.len(), chart.dim(), "one metric entry per coordinate");
        let mut ginv = Vec::with_capacity(entries.len());
        for (i, e) in entries.iter().enumerate() {
            if e.is_zero() {
                return Err(ChartError::ZeroMetricEntry {
                    index: i + 1,
                    coord: chart.coord_name(i).to_string(),
                });
            }
            ginv.push(e.inverse().expect("nonzero entry"));
        }
        Ok(Metric { name: name.to_string(), chart, g: entries, ginv })
    }

    fn from_strings(
        name: &str,
        chart: Chart,
        entries: &[&str],
    ) -> Result<Metric, ChartError> {
        let ctx = chart.resolver();
        let mut parsed = Vec::with_capacity(entries.len());
        for (i, src) in entries.iter().enumerate() {
            let e = parse_expr(src, &ctx).map_err(|source| ChartError::Parse {
                coord: chart.coord_name(i).to_string(),
                source,
            })?;
            parsed.push(e);
        }
        Metric::diagonal(name, chart, parsed)
    }

    /// Builtin metrics: `ibh4`, `ibh5`, `schwarzschild`, `minkowski(n)`
    /// (also accepted as `minkowskiN`).
    pub fn builtin(which: &str) -> Result<Metric, ChartError> {
        match which {
            "ibh4" => {
                let chart = Chart::new(
                    vec!["t", "z", "theta", "phi"],
                    vec![-1, 1, 1, 1],
                    vec!["C1", "C2"],
                )?;
                Metric::from_strings(
                    "ibh4",
                    chart,
                    &[
                        "-1/(2*xi/t - 1)",
                        "2*xi/t - 1",
                        "t^2",
                        "t^2*sin(theta)^2",
                    ],
                )
            }
            "ibh5" => {
                let chart = Chart::new(
                    vec!["t", "z", "theta", "phi", "psi"],
                    vec![-1, 1, 1, 1, 1],
                    vec!["C1", "C2"],
                )?;
                Metric::from_strings(
                    "ibh5",
                    chart,
                    &[
                        "-1/(2*xi/t^2 - 1)",
                        "2*xi/t^2 - 1",
                        "t^2",
                        "t^2*sin(theta)^2",
                        "t^2*sin(theta)^2*sin(phi)^2",
                    ],
                )
            }
            "schwarzschild" => {
                let chart = Chart::new(
                    vec!["t", "z", "theta", "phi"],
                    vec![-1, 1, 1, 1],
                    vec!["m"],
                )?;
                Metric::from_strings(
                    "schwarzschild",
                    chart,
                    &[
                        "-(1 - 2*m/z)",
                        "1/(1 - 2*m/z)",
                        "z^2",
                        "z^2*sin(theta)^2",
                    ],
                )
            }
            other => {
                let n = other
                    .strip_prefix("minkowski")
                    .and_then(|rest| {
                        let rest = rest.strip_prefix('(').unwrap_or(rest);
                        let rest = rest.strip_suffix(')').unwrap_or(rest);
                        if rest.is_empty() {
                            Some(4)
                        } else {
                            rest.parse::<usize>().ok()
                        }
                    })
                    .ok_or_else(|| ChartError::UnknownBuiltin(other.to_string()))?;
                if !(3..=9).contains(&n) {
                    return Err(ChartError::TooSmall { min: 3, got: n });
                }
                let base_names = ["t", "z", "theta", "phi", "psi"];
                let extra: Vec<String> = (6..=n).map(|i| format!("x{i}")).collect();
                let mut coords: Vec<&str> = base_names[..n.min(5)].to_vec();
                for e in &extra {
                    coords.push(e);
                }
                let mut signature = vec![1i8; n];
                signature[0] = -1;
                let chart = Chart::new(coords, signature, vec![])?;
                let mut entries = vec!["-1"];
                entries.extend(std::iter::repeat("1").take(n - 1));
                Metric::from_strings(&format!("minkowski{n}"), chart, &entries)
            }
        }
    }

    pub fn from_doc(doc: &MetricDoc) -> Result<Metric, ChartError> {
        if doc.coordinates.len() < 3 {
            return Err(ChartError::TooSmall { min: 3, got: doc.coordinates.len() });
        }
        if doc.diagonal.len() != doc.coordinates.len() {
            return Err(ChartError::Json(format!(
                "need {} diagonal entries, got {}",
                doc.coordinates.len(),
                doc.diagonal.len()
            )));
        }
        let chart = Chart::new(
            doc.coordinates.iter().map(|s| s.as_str()).collect(),
            doc.signature.clone(),
            doc.constants.iter().map(|s| s.as_str()).collect(),
        )?;
        let entries: Vec<&str> = doc.diagonal.iter().map(|s| s.as_str()).collect();
        Metric::from_strings(&doc.name, chart, &entries)
    }

    pub fn from_json_str(s: &str) -> Result<Metric, ChartError> {
        let doc: MetricDoc =
            serde_json::from_str(s).map_err(|e| ChartError::Json(e.to_string()))?;
        Metric::from_doc(&doc)
    }

    pub fn load(path: &Path) -> Result<Metric, ChartError> {
        let text = std::fs::read_to_string(path).map_err(|e| ChartError::Io(e.to_string()))?;
        Metric::from_json_str(&text)
    }

    /// Resolve a metric argument: a builtin name, or a path to a JSON file
    /// (anything containing a path separator or ending in `.json`).
    pub fn resolve(arg: &str) -> Result<Metric, ChartError> {
        if arg.contains('/') || arg.contains('\\') || arg.ends_with(".json") {
            Metric::load(Path::new(arg))
        } else {
            Metric::builtin(arg)
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    pub fn g(&self, i: usize) -> &DiffExpr {
        &self.g[i]
    }

    pub fn ginv(&self, i: usize) -> &DiffExpr {
        &self.ginv[i]
    }

    pub fn entries(&self) -> &[DiffExpr] {
        &self.g
    }

    /// The xi generator appears in this metric (drives which checks apply).
    pub fn uses_xi(&self) -> bool {
        self.g.iter().any(|e| {
            e.generators()
                .iter()
                .any(|g| matches!(g, Generator::Xi(_)))
        })
    }
}
