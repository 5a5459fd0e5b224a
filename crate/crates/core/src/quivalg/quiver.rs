use std::collections::BTreeMap;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub label: String,
    /// Grid index, for quivers generated from grid data.
    pub alpha: Option<Vec<usize>>,
    pub twist: Option<i64>,
}

impl Vertex {
    pub fn named(label: impl Into<String>) -> Self {
        Vertex { label: label.into(), alpha: None, twist: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
}

/// A path, arrows listed in the order they are traversed. Trivial paths
/// have no arrows and `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next`; `None` if they do not meet.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend(&next.arrows);
        Some(Path { source: self.source, target: next.target, arrows })
    }
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: Vertex) -> usize {
        self.vertices.push(v);
        self.vertices.len() - 1
    }

    pub fn add_arrow(&mut self, label: impl Into<String>, source: usize, target: usize) -> usize {
        assert!(source < self.vertices.len() && target < self.vertices.len(), "arrow endpoint");
        self.arrows.push(Arrow { label: label.into(), source, target });
        self.arrows.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn check(&self) -> Result<()> {
        for (i, a) in self.arrows.iter().enumerate() {
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(Error::InvalidInput(format!(
                    "arrow {i} ({}) has an endpoint outside the vertex set",
                    a.label
                )));
            }
        }
        Ok(())
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_path(&self, i: usize) -> Path {
        let a = &self.arrows[i];
        Path { source: a.source, target: a.target, arrows: vec![i] }
    }

    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v).map(|(i, _)| i)
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v).map(|(i, _)| i)
    }

    /// A topological order of the vertices, or `None` with an oriented cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = stack.pop() {
            order.push(v);
            for a in self.outgoing(v).collect::<Vec<_>>().into_iter().rev() {
                let t = self.arrows[a].target;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// All paths of length at most `max_len`, grouped by (source, target).
    pub fn enumerate_paths(&self, max_len: usize) -> BTreeMap<(usize, usize), Vec<Path>> {
        let mut out: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        let mut frontier: Vec<Path> = (0..self.vertices.len()).map(Path::trivial).collect();
        for len in 0..=max_len {
            for p in &frontier {
                out.entry((p.source, p.target)).or_default().push(p.clone());
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for p in &frontier {
                for a in self.outgoing(p.target) {
                    let mut q = p.clone();
                    q.arrows.push(a);
                    q.target = self.arrows[a].target;
                    next.push(q);
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        out
    }

    /// Length of the longest path; `None` with an oriented cycle.
    pub fn longest_path(&self) -> Option<usize> {
        let order = self.topological_order()?;
        let mut best = vec![0usize; self.vertices.len()];
        for &v in &order {
            for a in self.outgoing(v) {
                let t = self.arrows[a].target;
                best[t] = best[t].max(best[v] + 1);
            }
        }
        Some(best.into_iter().max().unwrap_or(0))
    }

    /// Every path, for acyclic quivers.
    pub fn all_paths(&self) -> Result<BTreeMap<(usize, usize), Vec<Path>>> {
        let l = self.longest_path().ok_or_else(|| Error::Unsupported("quiver has an oriented cycle".into()))?;
        Ok(self.enumerate_paths(l))
    }

    /// The quiver with all arrows reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Resolves a path given by its start vertex and arrow labels.
    pub fn path_from_labels(&self, source: usize, labels: &[String]) -> Result<Path> {
        let mut p = Path::trivial(source);
        for l in labels {
            let mut hits = self.outgoing(p.target).filter(|&a| &self.arrows[a].label == l);
            let a = hits
                .next()
                .ok_or_else(|| Error::InvalidInput(format!("no arrow {l:?} leaving vertex {}", p.target)))?;
            if hits.next().is_some() {
                return Err(Error::InvalidInput(format!("arrow label {l:?} is ambiguous at vertex {}", p.target)));
            }
            p.arrows.push(a);
            p.target = self.arrows[a].target;
        }
        Ok(p)
    }

    pub fn path_labels(&self, p: &Path) -> Vec<String> {
        p.arrows.iter().map(|&a| self.arrows[a].label.clone()).collect()
    }
}

/// The linearly oriented quiver `1 -> 2 -> ... -> n`.
pub fn linear_quiver(n: usize) -> Quiver {
    let mut q = Quiver::new();
    for i in 0..n {
        q.add_vertex(Vertex::named(format!("{}", i + 1)));
    }
    for i in 1..n {
        q.add_arrow(format!("a{i}"), i - 1, i);
    }
    q
}
