//! Verdicts, their certificates, and re-validation of certificates against
//! the graph they were issued for.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::invariants::{chromatic_number, clique_number, is_k_colorable_within, Coloring};
use crate::perfection::{is_induced_odd_cycle, is_perfect_within};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Class {
    Perfect,
    TwoPerfect,
    PerfectlyDivisible,
    Nice,
    StablePerfect,
    TwoDivisible,
}

impl Class {
    /// The five generalizations, without `Perfect`.
    pub const GENERALIZATIONS: [Class; 5] = [
        Class::TwoPerfect,
        Class::PerfectlyDivisible,
        Class::Nice,
        Class::StablePerfect,
        Class::TwoDivisible,
    ];

    pub const ALL: [Class; 6] = [
        Class::Perfect,
        Class::TwoPerfect,
        Class::PerfectlyDivisible,
        Class::Nice,
        Class::StablePerfect,
        Class::TwoDivisible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::Perfect => "perfect",
            Class::TwoPerfect => "2-perfect",
            Class::PerfectlyDivisible => "perfectly-divisible",
            Class::Nice => "nice",
            Class::StablePerfect => "stable-perfect",
            Class::TwoDivisible => "2-divisible",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Ok(match key.as_str() {
            "perfect" => Class::Perfect,
            "2perfect" | "twoperfect" => Class::TwoPerfect,
            "perfectlydivisible" | "pd" => Class::PerfectlyDivisible,
            "nice" => Class::Nice,
            "stableperfect" => Class::StablePerfect,
            "2divisible" | "twodivisible" => Class::TwoDivisible,
            _ => return Err(Error::InvalidArgument(format!("unknown class '{s}'"))),
        })
    }
}

/// Witness attached to a verdict. Vertex labels are always those of the
/// graph the verdict was issued for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "data", rename_all = "snake_case")]
pub enum Certificate {
    /// Color of each vertex, indexed by vertex.
    Coloring(Vec<usize>),
    Bipartition {
        a: VertexSet,
        b: VertexSet,
    },
    Partition2 {
        a: VertexSet,
        b: VertexSet,
    },
    StableSet(VertexSet),
    /// Induced odd cycle of length >= 5, in cyclic order.
    OddHole(Vec<usize>),
    /// Vertices of an induced odd antihole, in the cyclic order of the
    /// corresponding hole of the complement.
    OddAntihole(Vec<usize>),
    CliqueWitness(VertexSet),
    /// Least induced subgraph violating a hereditary condition.
    Obstruction {
        vertices: VertexSet,
        chi: Option<usize>,
        omega: usize,
    },
    /// Neither an odd hole nor an odd antihole exists.
    NoOddHoleOrAntihole,
    /// Not colorable with `k` colors (decided by exhaustive search).
    NotColorable {
        k: usize,
    },
    /// The existential search space was exhausted without success.
    Exhausted,
    /// The defining condition holds vacuously (no vertices, or no edges
    /// where the condition needs an edge).
    Vacuous,
}

impl Certificate {
    pub fn coloring(c: &Coloring, n: usize) -> Self {
        Certificate::Coloring(
            c.to_vec(n)
                .into_iter()
                .map(|c| c.expect("coloring covers the graph"))
                .collect(),
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Coloring(_) => "coloring",
            Certificate::Bipartition { .. } => "bipartition",
            Certificate::Partition2 { .. } => "partition2",
            Certificate::StableSet(_) => "stable_set",
            Certificate::OddHole(_) => "odd_hole",
            Certificate::OddAntihole(_) => "odd_antihole",
            Certificate::CliqueWitness(_) => "clique_witness",
            Certificate::Obstruction { .. } => "obstruction",
            Certificate::NoOddHoleOrAntihole => "no_odd_hole_or_antihole",
            Certificate::NotColorable { .. } => "not_colorable",
            Certificate::Exhausted => "exhausted",
            Certificate::Vacuous => "vacuous",
        }
    }

    /// Whether the certificate carries a concrete, checkable object rather
    /// than a search-outcome marker.
    pub fn is_constructive(&self) -> bool {
        !matches!(
            self,
            Certificate::NoOddHoleOrAntihole
                | Certificate::NotColorable { .. }
                | Certificate::Exhausted
                | Certificate::Vacuous
        )
    }
}

/// Outcome of one class check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub class: Class,
    pub holds: bool,
    pub certificate: Certificate,
    pub nodes_searched: u64,
}

/// Report for a single property; the same shape as a class verdict.
pub type PropertyReport = ClassVerdict;

/// Re-checks a verdict's certificate against `g`. Returns a description of
/// the first problem found.
pub fn validate(g: &Graph, verdict: &ClassVerdict) -> Result<(), String> {
    use Certificate as C;
    let n = g.order();
    let full = g.vertices();
    let in_range = |s: &VertexSet| s.is_subset(full);
    let cert = &verdict.certificate;
    match (verdict.class, verdict.holds, cert) {
        (Class::Perfect, true, C::Bipartition { a, b }) => {
            check_partition(g, *a, *b)?;
            ensure(
                g.is_independent(*a) && g.is_independent(*b),
                "bipartition side not independent",
            )
        }
        (Class::Perfect, true, C::NoOddHoleOrAntihole) => {
            ensure(is_perfect_within(g, full), "odd hole or antihole present")
        }
        (Class::Perfect, false, C::OddHole(h)) => {
            ensure(is_induced_odd_cycle(g, h), "not an odd hole")
        }
        (Class::Perfect, false, C::OddAntihole(h)) => ensure(
            is_induced_odd_cycle(&g.complement(), h),
            "not an odd antihole",
        ),
        (
            Class::Perfect,
            false,
            C::Obstruction {
                vertices,
                chi,
                omega,
            },
        ) => {
            ensure(in_range(vertices), "obstruction out of range")?;
            let c = chromatic_number(g, *vertices);
            let w = clique_number(g, *vertices);
            ensure(
                *chi == Some(c) && *omega == w && c > w,
                "obstruction does not have chi > omega",
            )
        }
        (Class::TwoPerfect, true, C::Partition2 { a, b }) => {
            check_partition(g, *a, *b)?;
            ensure(
                is_perfect_within(g, *a) && is_perfect_within(g, *b),
                "partition side not perfect",
            )
        }
        (Class::StablePerfect, true, C::StableSet(s)) => {
            ensure(in_range(s), "stable set out of range")?;
            ensure(g.is_independent(*s), "set is not stable")?;
            ensure(is_perfect_within(g, full - *s), "remainder not perfect")
        }
        (Class::TwoPerfect | Class::StablePerfect, false, C::Exhausted) => Ok(()),
        (Class::TwoPerfect, false, C::NotColorable { k: 4 })
        | (Class::StablePerfect, false, C::NotColorable { k: 3 }) => {
            let k = if verdict.class == Class::TwoPerfect {
                4
            } else {
                3
            };
            ensure(
                g.is_triangle_free(),
                "colorability shortcut used on a graph with a triangle",
            )?;
            ensure(
                !is_k_colorable_within(g, full, k),
                "graph is colorable after all",
            )
        }
        (Class::PerfectlyDivisible, true, C::Partition2 { a, b }) => {
            check_partition(g, *a, *b)?;
            ensure(is_perfect_within(g, *a), "perfect side is not perfect")?;
            ensure(
                clique_number(g, *b) < clique_number(g, full),
                "clique number did not drop",
            )
        }
        (Class::TwoDivisible, true, C::Partition2 { a, b }) => {
            check_partition(g, *a, *b)?;
            let w = clique_number(g, full);
            ensure(
                clique_number(g, *a) < w && clique_number(g, *b) < w,
                "clique number did not drop on both sides",
            )
        }
        (Class::PerfectlyDivisible, true, C::Vacuous) => {
            ensure(n == 0, "vacuous only for the empty graph")
        }
        (Class::TwoDivisible, true, C::Vacuous) => ensure(g.edge_count() == 0, "graph has an edge"),
        (Class::Nice, true, C::Coloring(colors)) => {
            ensure(colors.len() == n, "coloring length mismatch")?;
            ensure(
                g.edges().all(|(u, v)| colors[u] != colors[v]),
                "coloring not proper",
            )?;
            let used = colors
                .iter()
                .copied()
                .collect::<std::collections::BTreeSet<_>>()
                .len();
            ensure(
                used <= clique_number(g, full) + 1,
                "coloring uses more than omega + 1 colors",
            )
        }
        (
            Class::PerfectlyDivisible,
            false,
            C::Obstruction {
                vertices, omega, ..
            },
        ) => {
            ensure(
                in_range(vertices) && !vertices.is_empty(),
                "obstruction out of range",
            )?;
            ensure(*omega == clique_number(g, *vertices), "wrong clique number")?;
            let splittable = vertices
                .submasks()
                .any(|b| clique_number(g, b) < *omega && is_perfect_within(g, *vertices - b));
            ensure(!splittable, "obstruction admits a perfect division")
        }
        (
            Class::TwoDivisible,
            false,
            C::Obstruction {
                vertices, omega, ..
            },
        ) => {
            ensure(
                in_range(vertices) && *omega >= 2,
                "obstruction out of range or edgeless",
            )?;
            ensure(*omega == clique_number(g, *vertices), "wrong clique number")?;
            let splittable = vertices
                .submasks()
                .any(|a| clique_number(g, a) < *omega && clique_number(g, *vertices - a) < *omega);
            ensure(!splittable, "obstruction admits a 2-division")
        }
        (
            Class::Nice,
            false,
            C::Obstruction {
                vertices,
                chi,
                omega,
            },
        ) => {
            ensure(in_range(vertices), "obstruction out of range")?;
            let c = chromatic_number(g, *vertices);
            let w = clique_number(g, *vertices);
            ensure(
                *chi == Some(c) && *omega == w && c > w + 1,
                "obstruction has chi <= omega + 1",
            )
        }
        (class, holds, cert) => Err(format!(
            "certificate kind '{}' is not valid for {class} = {holds}",
            cert.kind()
        )),
    }
}

fn check_partition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<(), String> {
    ensure((a & b).is_empty(), "partition sides overlap")?;
    ensure(
        (a | b) == g.vertices(),
        "partition does not cover the vertex set",
    )
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}
