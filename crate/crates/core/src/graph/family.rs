use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Complete,
    Star,
    Path,
    Cycle,
    Friendship,
    Spider,
    ApexPair,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Complete,
        FamilyKind::Star,
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Friendship,
        FamilyKind::Spider,
        FamilyKind::ApexPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::Star => "star",
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Friendship => "friendship",
            FamilyKind::Spider => "spider",
            FamilyKind::ApexPair => "apex-pair",
        }
    }

    fn min_param(self) -> usize {
        match self {
            FamilyKind::Friendship => 2,
            FamilyKind::Cycle | FamilyKind::ApexPair => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub param: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, param: usize) -> FamilySpec {
        FamilySpec { kind, param }
    }

    pub fn vertex_count(&self) -> usize {
        let p = self.param;
        match self.kind {
            FamilyKind::Complete | FamilyKind::Path | FamilyKind::Cycle => p,
            FamilyKind::Star | FamilyKind::ApexPair => p + 1,
            FamilyKind::Friendship | FamilyKind::Spider => 2 * p + 1,
        }
    }
}

/// Builds a named family member with a fixed vertex layout:
///
/// - `complete(n)`: `K_n` on `0..n`
/// - `star(n)`: `K_{1,n}`, center 0, leaves `1..=n`
/// - `path(n)`: `0-1-...-(n-1)`
/// - `cycle(n)`: the path closed by `(n-1)-0`
/// - `friendship(n)`: center 0, triangles on `{0, 2i+1, 2i+2}`
/// - `spider(t)`: center 0, legs `0 - i - (i+t)` for `i` in `1..=t`
/// - `apex-pair(n)`: apex 0 joined to all of `1..=n`, plus the edge `1-2`
pub fn make_family(spec: FamilySpec) -> Result<Graph> {
    let p = spec.param;
    if p < spec.kind.min_param() {
        return Err(Error::InvalidFamily(format!(
            "{} requires param >= {}, got {p}",
            spec.kind,
            spec.kind.min_param()
        )));
    }
    let n = spec.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, limit: MAX_VERTICES });
    }
    let edges: Vec<(usize, usize)> = match spec.kind {
        FamilyKind::Complete => (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).collect(),
        FamilyKind::Star => (1..=p).map(|i| (0, i)).collect(),
        FamilyKind::Path => (1..p).map(|i| (i - 1, i)).collect(),
        FamilyKind::Cycle => (0..p).map(|i| (i, (i + 1) % p)).collect(),
        FamilyKind::Friendship => {
            (0..p).flat_map(|i| [(0, 2 * i + 1), (0, 2 * i + 2), (2 * i + 1, 2 * i + 2)]).collect()
        }
        FamilyKind::Spider => (1..=p).flat_map(|i| [(0, i), (i, i + p)]).collect(),
        FamilyKind::ApexPair => (1..=p).map(|i| (0, i)).chain([(1, 2)]).collect(),
    };
    Graph::from_edges(n, edges)
}
