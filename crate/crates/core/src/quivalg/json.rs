//! The JSON quiver schema shared with the squid generator.
//!
//! Relation terms carry their start vertex next to the arrow labels, since
//! labels such as `X0` repeat across the quiver.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::quivalg::algebra::{AlgebraPresentation, Relation};
use crate::quivalg::quiver::{Quiver, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub label: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub source: usize,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<VertexJson>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<TermJson>>,
}

impl QuiverJson {
    pub fn from_presentation<F: Field>(a: &AlgebraPresentation<F>) -> Self {
        let q = &a.quiver;
        QuiverJson {
            vertices: q
                .vertices
                .iter()
                .map(|v| VertexJson { label: v.label.clone(), alpha: v.alpha.clone(), twist: v.twist })
                .collect(),
            arrows: q
                .arrows
                .iter()
                .map(|ar| ArrowJson { label: ar.label.clone(), from: ar.source, to: ar.target })
                .collect(),
            relations: a
                .relations
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, p)| TermJson { coeff: a.field.format(c), source: p.source, path: q.path_labels(p) })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_presentation<F: Field>(&self, field: F) -> Result<AlgebraPresentation<F>> {
        let mut q = Quiver::new();
        for v in &self.vertices {
            q.add_vertex(Vertex { label: v.label.clone(), alpha: v.alpha.clone(), twist: v.twist });
        }
        for a in &self.arrows {
            if a.from >= q.vertex_count() || a.to >= q.vertex_count() {
                return Err(Error::InvalidInput(format!("arrow {} has an unknown endpoint", a.label)));
            }
            q.add_arrow(a.label.clone(), a.from, a.to);
        }
        let mut relations = Vec::new();
        for terms in &self.relations {
            let mut rel = Vec::new();
            for t in terms {
                if t.source >= q.vertex_count() {
                    return Err(Error::InvalidInput(format!("unknown vertex {}", t.source)));
                }
                rel.push((field.parse(&t.coeff)?, q.path_from_labels(t.source, &t.path)?));
            }
            relations.push(Relation::new(rel));
        }
        let a = AlgebraPresentation::new(field, q, relations);
        a.check()?;
        Ok(a)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
