//! Quivers with relations for the squid and its higher-dimensional version.

use std::collections::{BTreeSet, HashMap};

use crate::cohp1::Point;
use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::geom::{validate_snc, DivisorDatum, SncConfig, VarietyModel};
use crate::quivalg::{AlgebraPresentation, Path, Quiver, Relation, Vertex};

/// Hyperplanes `ℓ_j = 0` in `P^d` with weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquidSpec {
    pub d: usize,
    pub forms: Vec<Vec<i64>>,
    pub weights: Vec<usize>,
}

/// Vertex `O_α(twist)`; `alpha` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquidVertex {
    pub alpha: Vec<usize>,
    pub twist: usize,
}

impl SquidVertex {
    /// `I_α = {j : a_j != 1}`, 0-based.
    pub fn support(&self) -> Vec<usize> {
        support(&self.alpha)
    }

    pub fn label(&self) -> String {
        let a: Vec<String> = self.alpha.iter().map(|x| x.to_string()).collect();
        format!("O({})({})", a.join(","), self.twist)
    }
}

fn support(alpha: &[usize]) -> Vec<usize> {
    alpha.iter().enumerate().filter(|(_, &a)| a != 1).map(|(j, _)| j).collect()
}

impl SquidSpec {
    pub fn new(d: usize, forms: Vec<Vec<i64>>, weights: Vec<usize>) -> Self {
        SquidSpec { d, forms, weights }
    }

    /// The spec of a configuration made only of weighted hyperplanes.
    pub fn from_config(cfg: &SncConfig) -> Result<Self> {
        let VarietyModel::ProjectiveSpace { d } = cfg.variety else {
            return Err(Error::InvalidInput("squids live on projective spaces".into()));
        };
        if !cfg.all_hyperplanes() {
            return Err(Error::InvalidInput("squids need every divisor to be a hyperplane with a form".into()));
        }
        Ok(SquidSpec {
            d,
            forms: cfg.divisors.iter().map(|x| x.form.clone().unwrap()).collect(),
            weights: cfg.divisors.iter().map(|x| x.weight as usize).collect(),
        })
    }

    pub fn to_config(&self) -> SncConfig {
        SncConfig {
            variety: VarietyModel::ProjectiveSpace { d: self.d },
            divisors: self
                .forms
                .iter()
                .zip(&self.weights)
                .enumerate()
                .map(|(j, (f, &w))| DivisorDatum {
                    label: format!("L{}", j + 1),
                    class: vec![1],
                    weight: w as u32,
                    form: Some(f.clone()),
                    points: None,
                })
                .collect(),
            intersections: Default::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.forms.is_empty() {
            return Err(Error::InvalidInput("a squid needs at least one hyperplane".into()));
        }
        if self.forms.len() != self.weights.len() {
            return Err(Error::InvalidInput("one weight per hyperplane".into()));
        }
        let v = validate_snc(&self.to_config());
        if !v.valid {
            return Err(Error::InvalidInput(v.diagnostics.join("; ")));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.forms.len()
    }

    /// All vertices, grid indices in lexicographic order.
    pub fn vertices(&self) -> Vec<SquidVertex> {
        let mut out = Vec::new();
        let mut alpha = vec![1usize; self.n()];
        loop {
            let s = support(&alpha).len();
            if s <= self.d {
                for i in 0..=self.d - s {
                    out.push(SquidVertex { alpha: alpha.clone(), twist: s + i });
                }
            }
            // odometer, last coordinate fastest
            let mut j = self.n();
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                if alpha[j] < self.weights[j] {
                    alpha[j] += 1;
                    break;
                }
                alpha[j] = 1;
            }
        }
    }
}

fn set_name(i: &[usize]) -> String {
    let v: Vec<String> = i.iter().map(|j| (j + 1).to_string()).collect();
    format!("{{{}}}", v.join(","))
}

/// Builder state: vertices by key and arrows by (source, label).
struct Builder<F: Field> {
    field: F,
    quiver: Quiver,
    relations: Vec<Relation<F>>,
    by_key: HashMap<SquidVertex, usize>,
    by_label: HashMap<(usize, String), usize>,
}

impl<F: Field> Builder<F> {
    fn arrow(&mut self, label: String, s: usize, t: usize) {
        let a = self.quiver.add_arrow(label.clone(), s, t);
        self.by_label.insert((s, label), a);
    }

    /// Follows labels from `v`; `None` if some arrow is missing.
    fn path(&self, v: usize, labels: &[&str]) -> Option<Path> {
        let mut p = Path::trivial(v);
        for l in labels {
            let a = *self.by_label.get(&(p.target, l.to_string()))?;
            p = p.then(&self.quiver.arrow_path(a))?;
        }
        Some(p)
    }
}

/// The squid of `P^1` with points `λ_i` and weights `p_i`.
pub fn build_weighted_line_squid<F: Field>(
    field: &F,
    points: &[Point<F::Elem>],
    weights: &[usize],
) -> Result<AlgebraPresentation<F>> {
    if points.len() != weights.len() {
        return Err(Error::InvalidInput("one weight per point".into()));
    }
    for (a, p) in points.iter().enumerate() {
        if points[..a].contains(p) {
            return Err(Error::InvalidInput(format!("point {} is repeated", p.display(field))));
        }
    }
    if let Some(w) = weights.iter().find(|&&w| w == 0) {
        return Err(Error::InvalidInput(format!("weight {w} must be positive")));
    }
    let n = points.len();
    let mut q = Quiver::new();
    let base = vec![1usize; n];
    let vtx = |alpha: Vec<usize>, twist: usize| {
        let sv = SquidVertex { alpha, twist };
        Vertex { label: sv.label(), alpha: Some(sv.alpha), twist: Some(twist as i64) }
    };
    let o = q.add_vertex(vtx(base.clone(), 0));
    let o1 = q.add_vertex(vtx(base.clone(), 1));
    let x0 = q.add_arrow("X0", o, o1);
    let x1 = q.add_arrow("X1", o, o1);
    let mut relations = Vec::new();
    for (j, p) in points.iter().enumerate() {
        let mut prev = o1;
        for a in 2..=weights[j] {
            let mut alpha = base.clone();
            alpha[j] = a;
            let v = q.add_vertex(vtx(alpha, 1));
            let label = if a == 2 { format!("y{}", j + 1) } else { format!("x{}", j + 1) };
            let arr = q.add_arrow(label, prev, v);
            if a == 2 {
                let y = q.arrow_path(arr);
                let terms = [(p.l1.clone(), x0), (field.neg(&p.l0), x1)]
                    .into_iter()
                    .filter(|(c, _)| !field.is_zero(c))
                    .map(|(c, x)| (c, q.arrow_path(x).then(&y).unwrap()))
                    .collect();
                relations.push(Relation::new(terms).tagged(&format!("ell_{}(X_{{}}) y_{}", j + 1, j + 1)));
            }
            prev = v;
        }
    }
    Ok(AlgebraPresentation::new(field.clone(), q, relations))
}

/// The generalized squid on `P^d` with the hyperplanes of `spec`.
pub fn build_pd_squid<F: Field>(field: &F, spec: &SquidSpec) -> Result<AlgebraPresentation<F>> {
    spec.validate()?;
    let d = spec.d;
    let mut b = Builder {
        field: field.clone(),
        quiver: Quiver::new(),
        relations: Vec::new(),
        by_key: HashMap::new(),
        by_label: HashMap::new(),
    };
    let verts = spec.vertices();
    for sv in &verts {
        let v = b.quiver.add_vertex(Vertex {
            label: sv.label(),
            alpha: Some(sv.alpha.clone()),
            twist: Some(sv.twist as i64),
        });
        b.by_key.insert(sv.clone(), v);
    }
    let xs: Vec<String> = (0..=d).map(|k| format!("X{k}")).collect();
    for sv in &verts {
        let v = b.by_key[sv];
        let up = SquidVertex { alpha: sv.alpha.clone(), twist: sv.twist + 1 };
        if let Some(&t) = b.by_key.get(&up) {
            for x in &xs {
                b.arrow(x.clone(), v, t);
            }
        }
        for j in 0..spec.n() {
            let a = sv.alpha[j];
            let mut next = sv.alpha.clone();
            next[j] += 1;
            let target = SquidVertex { alpha: next, twist: sv.twist };
            if (2..spec.weights[j]).contains(&a) {
                b.arrow(format!("x{}", j + 1), v, b.by_key[&target]);
            } else if a == 1 && sv.twist > sv.support().len() {
                if let Some(&t) = b.by_key.get(&target) {
                    b.arrow(format!("y{}", j + 1), v, t);
                }
            }
        }
    }
    let steps = |j: usize| [format!("x{}", j + 1), format!("y{}", j + 1)];
    for sv in &verts {
        let v = b.by_key[sv];
        // X^a X^b = X^b X^a
        for a in 0..=d {
            for c in a + 1..=d {
                if let (Some(p), Some(q)) = (b.path(v, &[&xs[a], &xs[c]]), b.path(v, &[&xs[c], &xs[a]])) {
                    b.relations.push(Relation::commutativity(field, p, q));
                }
            }
        }
        // X^k s = s X^k for the steps s = x_j, y_j
        for j in 0..spec.n() {
            for s in steps(j) {
                for x in &xs {
                    if let (Some(p), Some(q)) = (b.path(v, &[x, &s]), b.path(v, &[&s, x])) {
                        b.relations.push(Relation::commutativity(field, p, q));
                    }
                }
            }
        }
        // steps in different directions commute
        for j in 0..spec.n() {
            for k in j + 1..spec.n() {
                for s in steps(j) {
                    for t in steps(k) {
                        if let (Some(p), Some(q)) = (b.path(v, &[&s, &t]), b.path(v, &[&t, &s])) {
                            b.relations.push(Relation::commutativity(field, p, q));
                        }
                    }
                }
            }
        }
        let i_alpha = sv.support();
        let linear = |b: &Builder<F>, j: usize, tail: &[&str]| -> Option<Relation<F>> {
            let mut terms = Vec::new();
            for (k, &c) in spec.forms[j].iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let mut labels = vec![xs[k].as_str()];
                labels.extend(tail);
                terms.push((field.from_i64(c), b.path(v, &labels)?));
            }
            Some(Relation::new(terms))
        };
        for &i in &i_alpha {
            if let Some(r) = linear(&b, i, &[]) {
                let r = r.tagged(&format!("ell_{}(X_{})", i + 1, set_name(&i_alpha)));
                b.relations.push(r);
            }
        }
        for j in 0..spec.n() {
            if sv.alpha[j] != 1 {
                continue;
            }
            let y = format!("y{}", j + 1);
            if let Some(r) = linear(&b, j, &[&y]) {
                let r = r.tagged(&format!("ell_{}(X_{}) y_{}", j + 1, set_name(&i_alpha), j + 1));
                b.relations.push(r);
            }
        }
    }
    Ok(AlgebraPresentation::new(b.field, b.quiver, b.relations))
}

/// Tags of the relations other than commutativity squares.
pub fn relation_kinds<F: Field>(a: &AlgebraPresentation<F>) -> BTreeSet<String> {
    a.relations.iter().filter_map(|r| r.kind.clone()).filter(|k| k != "commutativity").collect()
}

/// Arrow counts by label family (`X`, `x`, `y`).
pub fn arrow_counts(q: &Quiver) -> (usize, usize, usize) {
    let count = |c: char| q.arrows.iter().filter(|a| a.label.starts_with(c)).count();
    (count('X'), count('x'), count('y'))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;

    fn example() -> SquidSpec {
        SquidSpec::new(2, vec![vec![1, 0, 0], vec![0, 1, 0]], vec![3, 3])
    }

    #[test]
    fn plane_with_two_weight_three_lines() {
        let a = build_pd_squid(&Rationals, &example()).unwrap();
        assert_eq!(a.quiver.vertex_count(), 15);
        assert_eq!(arrow_counts(&a.quiver), (18, 8, 8));
        let kinds: Vec<String> = relation_kinds(&a).into_iter().collect();
        assert_eq!(
            kinds,
            vec![
                "ell_1(X_{1})",
                "ell_1(X_{2}) y_1",
                "ell_1(X_{}) y_1",
                "ell_2(X_{1}) y_2",
                "ell_2(X_{2})",
                "ell_2(X_{}) y_2",
            ]
        );
        assert!(a.quiver.topological_order().is_some());
    }

    #[test]
    fn single_weight_two_plane() {
        let s = SquidSpec::new(2, vec![vec![0, 0, 1]], vec![2]);
        let a = build_pd_squid(&Rationals, &s).unwrap();
        assert_eq!(a.quiver.vertex_count(), 5);
    }

    #[test]
    fn line_squid_counts() {
        let q = Rationals;
        let pts = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| Point::from_i64(&q, a, b).unwrap()).collect::<Vec<_>>();
        let a = build_weighted_line_squid(&q, &pts(&[(0, 1), (1, 0)]), &[2, 2]).unwrap();
        assert_eq!(a.quiver.vertex_count(), 4);
        assert_eq!(a.relations.len(), 2);
        let labels: BTreeSet<&str> = a.quiver.arrows.iter().map(|x| x.label.as_str()).collect();
        assert_eq!(labels, ["X0", "X1", "y1", "y2"].into_iter().collect());
        assert_eq!(build_weighted_line_squid(&q, &pts(&[(1, 1)]), &[2]).unwrap().quiver.vertex_count(), 3);
        let a = build_weighted_line_squid(&q, &pts(&[(0, 1), (1, 0), (1, 1)]), &[2, 3, 4]).unwrap();
        assert_eq!(a.quiver.vertex_count(), 8);
        assert!(build_weighted_line_squid(&q, &pts(&[(1, 2), (2, 4)]), &[2, 2]).is_err());
    }

    #[test]
    fn invalid_spec_is_rejected() {
        let s = SquidSpec::new(2, vec![vec![1, 0, 0], vec![2, 0, 0]], vec![2, 2]);
        assert!(build_pd_squid(&Rationals, &s).is_err());
    }
}
