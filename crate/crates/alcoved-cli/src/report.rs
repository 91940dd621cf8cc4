//! The classification report: a stable, versioned JSON schema and the
//! matching text rendering. Rationals serialize as `p/q` strings so nothing
//! is lost to floating point; field order is fixed so a re-parsed report
//! serializes byte-identically.

use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use alcoved::classify::Analysis;
use alcoved::ni::NiMatrix;
use alcoved::trop::{Rational, TropMatrix};

pub const SCHEMA_VERSION: u32 = 1;

/// A report field that is either populated or explicitly not applicable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Na<T> {
    Value(T),
    NotApplicable(String),
}

const NA_PREFIX: &str = "not-applicable: ";

impl<T: Serialize> Serialize for Na<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Na::Value(v) => v.serialize(serializer),
            Na::NotApplicable(reason) => serializer.serialize_str(&format!("{NA_PREFIX}{reason}")),
        }
    }
}

impl<'de, T: DeserializeOwned> Deserialize<'de> for Na<T> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        if let Some(s) = value.as_str() {
            if let Some(reason) = s.strip_prefix(NA_PREFIX) {
                return Ok(Na::NotApplicable(reason.to_string()));
            }
        }
        T::deserialize(value)
            .map(Na::Value)
            .map_err(serde::de::Error::custom)
    }
}

impl<T: fmt::Display> Na<T> {
    fn render(&self) -> String {
        match self {
            Na::Value(v) => v.to_string(),
            Na::NotApplicable(reason) => format!("{NA_PREFIX}{reason}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub labels: Vec<String>,
    pub pole: Option<String>,
    pub point: [String; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub ends: [usize; 2],
    pub direction: [String; 3],
    pub tropical_length: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub input: Vec<Vec<String>>,
    pub ni: bool,
    pub vi: bool,
    pub visualization: Vec<Vec<String>>,
    pub box_edge_lengths: [String; 3],
    pub perturbation: Vec<Vec<String>>,
    pub cant_tuple: [String; 6],
    pub difference_tuple: [String; 6],
    pub f_vector: [usize; 3],
    pub maximal: bool,
    pub p_vector: [usize; 3],
    pub h_vector: [usize; 4],
    pub t_vector: [usize; 3],
    pub equatorial_belt: Na<[usize; 6]>,
    pub north_cask: Na<String>,
    pub south_cask: Na<String>,
    pub south_sequence: Na<String>,
    pub qe_class: Na<String>,
    pub combinatorial_class: Na<u8>,
    pub vertices: Vec<VertexReport>,
    pub edges: Vec<EdgeReport>,
}

fn matrix_strings(m: &TropMatrix) -> Vec<Vec<String>> {
    (0..m.order())
        .map(|i| m.row(i).iter().map(|e| e.to_string()).collect())
        .collect()
}

fn six(values: &[Rational; 6]) -> [String; 6] {
    values.clone().map(|r| r.to_string())
}

impl Report {
    pub fn from_analysis(input: &NiMatrix, analysis: &Analysis) -> Report {
        let p = &analysis.polytope;
        let (v, e, f) = p.f_vector();
        let na =
            |reason: &Option<String>| reason.clone().unwrap_or_else(|| "not maximal".to_string());
        let (equatorial_belt, north_cask, south_cask, south_sequence, qe_class, combinatorial) =
            match &analysis.classification {
                Some(c) => (
                    Na::Value(c.equatorial_belt),
                    Na::Value(c.north.to_string()),
                    Na::Value(c.south.to_string()),
                    Na::Value(render_sequence(&c.south_reading)),
                    Na::Value(c.qe.to_string()),
                    Na::Value(c.combinatorial),
                ),
                None => {
                    let reason = na(&analysis.not_applicable);
                    (
                        Na::NotApplicable(reason.clone()),
                        Na::NotApplicable(reason.clone()),
                        Na::NotApplicable(reason.clone()),
                        Na::NotApplicable(reason.clone()),
                        Na::NotApplicable(reason.clone()),
                        Na::NotApplicable(reason),
                    )
                }
            };
        let vertices = p
            .vertices()
            .iter()
            .enumerate()
            .map(|(vid, vert)| VertexReport {
                labels: vert.labels.iter().map(|l| l.to_string()).collect(),
                pole: if vid == p.north() {
                    Some("N".to_string())
                } else if vid == p.south() {
                    Some("S".to_string())
                } else {
                    None
                },
                point: [
                    vert.point.get(0).to_string(),
                    vert.point.get(1).to_string(),
                    vert.point.get(2).to_string(),
                ],
            })
            .collect();
        let edges = p
            .edges()
            .iter()
            .map(|edge| EdgeReport {
                ends: [edge.ends.0, edge.ends.1],
                direction: [
                    edge.direction[0].to_string(),
                    edge.direction[1].to_string(),
                    edge.direction[2].to_string(),
                ],
                tropical_length: edge.tropical_length.to_string(),
            })
            .collect();
        Report {
            schema: SCHEMA_VERSION,
            input: matrix_strings(input.as_matrix()),
            ni: true,
            vi: analysis.input_is_visualized,
            visualization: matrix_strings(analysis.visualization.as_matrix()),
            box_edge_lengths: analysis.box_matrix.edge_lengths().map(|r| r.to_string()),
            perturbation: (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| analysis.perturbation.entry(i, j).to_string())
                        .collect()
                })
                .collect(),
            cant_tuple: six(analysis.cant.components()),
            difference_tuple: six(analysis.difference.components()),
            f_vector: [v, e, f],
            maximal: p.is_maximal(),
            p_vector: analysis.shape.p,
            h_vector: analysis.shape.h,
            t_vector: analysis.shape.t,
            equatorial_belt,
            north_cask,
            south_cask,
            south_sequence,
            qe_class,
            combinatorial_class: combinatorial,
            vertices,
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn render_sequence(reading: &alcoved::classify::SouthCaskReading) -> String {
    let labels: Vec<String> = reading.x_sequence.iter().map(|l| l.to_string()).collect();
    format!("{} (inversions: {})", labels.join(" "), reading.inversions)
}

fn fmt_usizes(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn fmt_strings(values: &[String]) -> String {
    format!("({})", values.join(", "))
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grid = |m: &[Vec<String>]| -> String {
            let width = m.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
            m.iter()
                .map(|row| {
                    let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
                    format!("  {}", cells.join(" "))
                })
                .collect::<Vec<_>>()
                .join("\n")
        };
        writeln!(f, "input:")?;
        writeln!(f, "{}", grid(&self.input))?;
        writeln!(f, "ni: {}", if self.ni { "yes" } else { "no" })?;
        writeln!(f, "vi: {}", if self.vi { "yes" } else { "no" })?;
        writeln!(f, "visualization:")?;
        writeln!(f, "{}", grid(&self.visualization))?;
        writeln!(
            f,
            "box edge lengths: {}",
            fmt_strings(&self.box_edge_lengths)
        )?;
        writeln!(f, "perturbation:")?;
        writeln!(f, "{}", grid(&self.perturbation))?;
        writeln!(f, "cant tuple: {}", fmt_strings(&self.cant_tuple))?;
        writeln!(
            f,
            "difference tuple: {}",
            fmt_strings(&self.difference_tuple)
        )?;
        writeln!(f, "f-vector: {}", fmt_usizes(&self.f_vector))?;
        writeln!(f, "maximal: {}", if self.maximal { "yes" } else { "no" })?;
        writeln!(f, "p-vector: {}", fmt_usizes(&self.p_vector))?;
        writeln!(f, "h-vector: {}", fmt_usizes(&self.h_vector))?;
        writeln!(f, "t-vector: {}", fmt_usizes(&self.t_vector))?;
        let belt = match &self.equatorial_belt {
            Na::Value(b) => fmt_usizes(b),
            Na::NotApplicable(reason) => format!("{NA_PREFIX}{reason}"),
        };
        writeln!(f, "equatorial belt: {belt}")?;
        writeln!(f, "north cask: {}", self.north_cask.render())?;
        writeln!(f, "south cask: {}", self.south_cask.render())?;
        writeln!(f, "south sequence: {}", self.south_sequence.render())?;
        writeln!(f, "qe class: {}", self.qe_class.render())?;
        writeln!(
            f,
            "combinatorial class: {}",
            self.combinatorial_class.render()
        )?;
        writeln!(f, "vertices:")?;
        for v in &self.vertices {
            writeln!(f, "  {}", vertex_line(v))?;
        }
        writeln!(f, "edges:")?;
        for e in &self.edges {
            writeln!(
                f,
                "  {}-{}: direction ({}), tropical length {}",
                e.ends[0],
                e.ends[1],
                e.direction.join(", "),
                e.tropical_length
            )?;
        }
        Ok(())
    }
}

pub fn vertex_line(v: &VertexReport) -> String {
    let labels = v.labels.join(" ");
    let pole = match &v.pole {
        Some(p) => format!(" ({p})"),
        None => String::new(),
    };
    format!(
        "{labels}{pole}: ({},{},{})",
        v.point[0], v.point[1], v.point[2]
    )
}
