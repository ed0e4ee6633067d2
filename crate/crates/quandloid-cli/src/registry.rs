//! Named quandles, pointed target specs, and resource caps.

use std::fmt;

use quandloid::{enumerate_quandles, FiniteQuandle, PointedQuandle};

/// Effective size caps. Defaults follow the library; `QUANDLOID_CAPS`
/// raises them up to the hard limits.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub group: usize,
    pub census: usize,
    pub arity: usize,
}

pub const HARD_GROUP_CAP: usize = 10;
pub const HARD_CENSUS_CAP: usize = quandloid::CENSUS_HARD_CAP;
pub const HARD_ARITY_CAP: usize = 6;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group: quandloid::DEFAULT_GROUP_CAP,
            census: quandloid::CENSUS_HARD_CAP,
            arity: quandloid::DEFAULT_ARITY_CAP,
        }
    }
}

impl Caps {
    /// Reads `QUANDLOID_CAPS`, a comma-separated list like
    /// `group=9,arity=5,census=5`. Values are clamped to the hard limits.
    pub fn from_env() -> Result<Self, CliError> {
        let mut caps = Caps::default();
        let Ok(raw) = std::env::var("QUANDLOID_CAPS") else {
            return Ok(caps);
        };
        for item in raw.split(',').filter(|s| !s.trim().is_empty()) {
            let Some((key, value)) = item.split_once('=') else {
                return Err(CliError::config(format!(
                    "QUANDLOID_CAPS entries must be key=value, got {item:?}"
                )));
            };
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| CliError::config(format!("bad cap value in {item:?}")))?;
            match key.trim() {
                "group" => caps.group = value.min(HARD_GROUP_CAP),
                "census" => caps.census = value.min(HARD_CENSUS_CAP),
                "arity" => caps.arity = value.min(HARD_ARITY_CAP),
                other => {
                    return Err(CliError::config(format!("unknown cap {other:?}")));
                }
            }
        }
        Ok(caps)
    }
}

/// Resolves `t<n>`, `r<n>`, `v3`, `tet4`, or `census:<order>:<index>`.
pub fn named_quandle(spec: &str, caps: &Caps) -> Result<FiniteQuandle, CliError> {
    if spec == "v3" {
        return Ok(FiniteQuandle::v3());
    }
    if spec == "tet4" {
        return Ok(FiniteQuandle::tetrahedron());
    }
    if let Some(rest) = spec.strip_prefix("census:") {
        let Some((order, index)) = rest.split_once(':') else {
            return Err(CliError::config(format!(
                "census spec must be census:<order>:<index>, got {spec:?}"
            )));
        };
        let order: usize =
            order.parse().map_err(|_| CliError::config(format!("bad census order in {spec:?}")))?;
        let index: usize =
            index.parse().map_err(|_| CliError::config(format!("bad census index in {spec:?}")))?;
        if order > caps.census {
            return Err(CliError::Domain(quandloid::Error::SizeCapExceeded {
                what: "census order",
                size: order,
                cap: caps.census,
            }));
        }
        let census = enumerate_quandles(order)?;
        return census.get(index).cloned().ok_or_else(|| {
            CliError::config(format!(
                "census order {order} has {} classes, no index {index}",
                census.len()
            ))
        });
    }
    if let Some(n) = spec.strip_prefix('t').and_then(|s| s.parse::<usize>().ok()) {
        return Ok(FiniteQuandle::trivial(n)?);
    }
    if let Some(n) = spec.strip_prefix('r').and_then(|s| s.parse::<usize>().ok()) {
        return Ok(FiniteQuandle::dihedral(n)?);
    }
    Err(CliError::config(format!(
        "unknown quandle spec {spec:?}; expected t<n>, r<n>, v3, tet4 or census:<order>:<index>"
    )))
}

/// Resolves `<named>:<b1>,<b2>,...`, e.g. `r3:0,0` or `census:4:2:0,1`.
pub fn pointed_target(spec: &str, caps: &Caps) -> Result<PointedQuandle, CliError> {
    let (name, points) = spec.rsplit_once(':').ok_or_else(|| {
        CliError::config(format!("pointed spec must be <named>:<b1>,<b2>,..., got {spec:?}"))
    })?;
    let quandle = named_quandle(name, caps)?;
    let basepoints: Vec<usize> = points
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::config(format!("bad basepoint {p:?} in {spec:?}")))
        })
        .collect::<Result<_, _>>()?;
    Ok(PointedQuandle::new(quandle, basepoints)?)
}

/// CLI failures: domain errors from the library, bad configuration, and
/// I/O problems, each with a stable machine-readable code.
#[derive(Debug)]
pub enum CliError {
    Domain(quandloid::Error),
    Config(String),
    Io { path: String, message: String },
}

impl CliError {
    pub fn config(message: impl Into<String>) -> Self {
        CliError::Config(message.into())
    }

    pub fn code(&self) -> &str {
        match self {
            CliError::Domain(e) => e.code(),
            CliError::Config(_) => "bad_config",
            CliError::Io { .. } => "io_error",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Config(msg) => write!(f, "{msg}"),
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
        }
    }
}

impl From<quandloid::Error> for CliError {
    fn from(e: quandloid::Error) -> Self {
        CliError::Domain(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_specs_resolve() {
        let caps = Caps::default();
        assert_eq!(named_quandle("t4", &caps).unwrap().size(), 4);
        assert_eq!(named_quandle("r3", &caps).unwrap().table()[0], vec![0, 2, 1]);
        assert_eq!(named_quandle("v3", &caps).unwrap().size(), 3);
        assert_eq!(named_quandle("tet4", &caps).unwrap().size(), 4);
        assert_eq!(named_quandle("census:3:0", &caps).unwrap().size(), 3);
        assert!(named_quandle("census:3:9", &caps).is_err());
        assert!(named_quandle("q5", &caps).is_err());
        assert!(named_quandle("t0", &caps).is_err());
    }

    #[test]
    fn pointed_specs_resolve() {
        let caps = Caps::default();
        let p = pointed_target("r3:0,2", &caps).unwrap();
        assert_eq!(p.basepoints(), &[0, 2]);
        let p = pointed_target("census:3:1:1,1", &caps).unwrap();
        assert_eq!(p.quandle().size(), 3);
        assert!(pointed_target("r3:0,9", &caps).is_err());
        assert!(pointed_target("r3", &caps).is_err());
    }
}
