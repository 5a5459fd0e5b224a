//! Grid objects, their morphisms, and the linear algebra on them.
//!
//! Positions are 1-based multi-indices `alpha`, stored row-major with the
//! last direction fastest. Wrap-around positions are never stored: they
//! are read as `F_i`-images of the position `p_i` steps further on.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{equalizer_basis, Field, Matrix};
use crate::gridcat::driver::{CategoryDriver, Elem};

/// The role of one direction in a grid category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "len", rename_all = "snake_case")]
pub enum Axis {
    /// `p` positions, wrapping through `F_i`, cycle composite `eta_i`.
    Eta(usize),
    /// `q` positions over objects killed by `eta_i`, with `F = 0`.
    Zero(usize),
    /// The direction is not part of the grid.
    Unused,
}

impl Axis {
    pub fn len(&self) -> usize {
        match *self {
            Axis::Eta(p) | Axis::Zero(p) => p,
            Axis::Unused => 1,
        }
    }

    pub fn is_unused(&self) -> bool {
        *self == Axis::Unused
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GridShape {
    pub axes: Vec<Axis>,
}

impl GridShape {
    pub fn new(axes: Vec<Axis>) -> Self {
        GridShape { axes }
    }

    /// `A[eta_1^(1/p_1), ..., eta_n^(1/p_n)]`.
    pub fn weighted(weights: &[usize]) -> Self {
        GridShape { axes: weights.iter().map(|&p| Axis::Eta(p)).collect() }
    }

    /// The base category itself.
    pub fn base(n: usize) -> Self {
        GridShape { axes: vec![Axis::Unused; n] }
    }

    pub fn n(&self) -> usize {
        self.axes.len()
    }

    pub fn size(&self) -> usize {
        self.axes.iter().map(Axis::len).product()
    }

    pub fn with_axis(&self, i: usize, a: Axis) -> Self {
        let mut s = self.clone();
        s.axes[i] = a;
        s
    }

    pub fn validate(&self) -> Result<()> {
        for (i, a) in self.axes.iter().enumerate() {
            match *a {
                Axis::Eta(p) if p < 1 => return Err(Error::InvalidInput(format!("direction {} has weight 0", i + 1))),
                Axis::Zero(q) if q < 1 => {
                    return Err(Error::InvalidInput(format!("direction {} has no positions", i + 1)))
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn index(&self, alpha: &[usize]) -> usize {
        let mut idx = 0;
        for (a, ax) in alpha.iter().zip(&self.axes) {
            debug_assert!(*a >= 1 && *a <= ax.len());
            idx = idx * ax.len() + (a - 1);
        }
        idx
    }

    pub fn alpha(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for i in (0..self.n()).rev() {
            let l = self.axes[i].len();
            out[i] = idx % l + 1;
            idx /= l;
        }
        out
    }

    pub fn positions(&self) -> Vec<Vec<usize>> {
        (0..self.size()).map(|k| self.alpha(k)).collect()
    }

    /// Directions along which the grid has arrows.
    pub fn active(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| !self.axes[i].is_unused()).collect()
    }

    /// Where a possibly non-positive index lives.
    pub fn resolve(&self, alpha: &[i64]) -> Result<Resolved> {
        let mut a: Vec<usize> = Vec::with_capacity(alpha.len());
        let mut fs = Vec::new();
        for (i, (&x, ax)) in alpha.iter().zip(&self.axes).enumerate() {
            let mut x = x;
            while x <= 0 {
                match *ax {
                    Axis::Eta(p) => {
                        x += p as i64;
                        fs.push(i);
                    }
                    Axis::Zero(_) => return Ok(Resolved::Zero),
                    Axis::Unused => {
                        return Err(Error::InvalidInput(format!("index {x} in unused direction {}", i + 1)));
                    }
                }
            }
            if x as usize > ax.len() {
                return Err(Error::InvalidInput(format!("index {x} out of range in direction {}", i + 1)));
            }
            a.push(x as usize);
        }
        Ok(Resolved::At { idx: self.index(&a), fs })
    }
}

/// A resolved index: a stored position seen through some `F`s, or zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Resolved {
    Zero,
    At { idx: usize, fs: Vec<usize> },
}

pub(crate) fn shifted(alpha: &[usize], i: usize, by: i64) -> Vec<i64> {
    let mut v: Vec<i64> = alpha.iter().map(|&x| x as i64).collect();
    v[i] += by;
    v
}

/// `((M_alpha), (f^i_alpha: M_{alpha - e_i} -> M_alpha))`.
#[derive(Clone, Debug)]
pub struct GridObject<D: CategoryDriver> {
    pub shape: GridShape,
    pub objects: Vec<D::Obj>,
    /// `maps[i][idx]`; empty for unused directions.
    pub maps: Vec<Vec<D::Mor>>,
}

/// One morphism per position.
#[derive(Clone, Debug)]
pub struct GridMorphism<D: CategoryDriver> {
    pub components: Vec<D::Mor>,
}

/// The first condition a grid fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum GridViolation {
    Shape {
        detail: String,
    },
    /// The object at `alpha` is not killed by `eta_direction`.
    Killed {
        direction: usize,
        alpha: Vec<usize>,
    },
    Commutativity {
        i: usize,
        j: usize,
        alpha: Vec<usize>,
    },
    Cycle {
        direction: usize,
        alpha: Vec<usize>,
    },
}

impl std::fmt::Display for GridViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GridViolation::Shape { detail } => write!(f, "malformed grid: {detail}"),
            GridViolation::Killed { direction, alpha } => {
                write!(f, "object at {alpha:?} is not killed by eta_{direction}")
            }
            GridViolation::Commutativity { i, j, alpha } => {
                write!(f, "square in directions ({i},{j}) at {alpha:?} does not commute")
            }
            GridViolation::Cycle { direction, alpha } => {
                write!(f, "cycle in direction {direction} at {alpha:?} is not eta")
            }
        }
    }
}

impl<D: CategoryDriver> GridObject<D> {
    /// All objects zero.
    pub fn zero(d: &D, shape: &GridShape) -> Self {
        let objects = vec![d.zero_object(); shape.size()];
        let z = d.zero_morphism(&d.zero_object(), &d.zero_object());
        let maps = (0..shape.n())
            .map(|i| if shape.axes[i].is_unused() { Vec::new() } else { vec![z.clone(); shape.size()] })
            .collect();
        GridObject { shape: shape.clone(), objects, maps }
    }

    /// The base category viewed as a grid with all directions unused.
    pub fn from_base(d: &D, m: &D::Obj) -> Self {
        GridObject {
            shape: GridShape::base(d.directions()),
            objects: vec![m.clone()],
            maps: vec![Vec::new(); d.directions()],
        }
    }

    /// The single object of a grid with all directions unused.
    pub fn base_object(&self) -> Result<&D::Obj> {
        if self.shape.size() != 1 || !self.shape.active().is_empty() {
            return Err(Error::InvalidInput("not a base-category object".into()));
        }
        Ok(&self.objects[0])
    }

    pub fn at(&self, alpha: &[usize]) -> &D::Obj {
        &self.objects[self.shape.index(alpha)]
    }

    pub fn object_at(&self, d: &D, alpha: &[i64]) -> Result<D::Obj> {
        Ok(match self.shape.resolve(alpha)? {
            Resolved::Zero => d.zero_object(),
            Resolved::At { idx, fs } => d.apply_f_many(&fs, &self.objects[idx]),
        })
    }

    /// `f^i_alpha`, for any index.
    pub fn map_at(&self, d: &D, i: usize, alpha: &[i64]) -> Result<D::Mor> {
        Ok(match self.shape.resolve(alpha)? {
            Resolved::Zero => {
                let mut prev = alpha.to_vec();
                prev[i] -= 1;
                d.zero_morphism(&self.object_at(d, &prev)?, &d.zero_object())
            }
            Resolved::At { idx, fs } => d.apply_f_mor_many(&fs, &self.maps[i][idx]),
        })
    }

    pub fn is_zero(&self, d: &D) -> bool {
        self.objects.iter().all(|m| d.is_zero(m))
    }

    /// Composite `M_{alpha - k e_i} -> M_alpha` of `k` maps in direction `i`.
    pub fn composite(&self, d: &D, i: usize, alpha: &[i64], k: usize) -> Result<D::Mor> {
        let mut start = alpha.to_vec();
        start[i] -= k as i64;
        let mut acc = d.identity(&self.object_at(d, &start)?);
        for s in 1..=k {
            let mut at = start.clone();
            at[i] += s as i64;
            acc = d.compose(&self.map_at(d, i, &at)?, &acc)?;
        }
        Ok(acc)
    }

    /// Checks shapes, the killing conditions, commutativity and cycles.
    pub fn validate(&self, d: &D) -> Result<Option<GridViolation>> {
        let shape = &self.shape;
        let bad = |detail: String| Ok(Some(GridViolation::Shape { detail }));
        if shape.n() != d.directions() || self.maps.len() != shape.n() {
            return bad(format!("grid has {} directions, driver has {}", shape.n(), d.directions()));
        }
        if self.objects.len() != shape.size() {
            return bad(format!("{} objects for {} positions", self.objects.len(), shape.size()));
        }
        for i in 0..shape.n() {
            let want = if shape.axes[i].is_unused() { 0 } else { shape.size() };
            if self.maps[i].len() != want {
                return bad(format!("direction {} has {} maps, expected {want}", i + 1, self.maps[i].len()));
            }
        }
        let active = shape.active();
        for alpha in shape.positions() {
            let here: Vec<i64> = alpha.iter().map(|&x| x as i64).collect();
            let m = self.at(&alpha);
            for &i in &active {
                let f = &self.maps[i][shape.index(&alpha)];
                if d.source(f) != self.object_at(d, &shifted(&alpha, i, -1))? || d.target(f) != *m {
                    return bad(format!("map {} at {alpha:?} has wrong endpoints", i + 1));
                }
            }
            for (i, ax) in shape.axes.iter().enumerate() {
                if matches!(ax, Axis::Zero(_)) && !d.is_zero_mor(&d.eta(i, m)) {
                    return Ok(Some(GridViolation::Killed { direction: i + 1, alpha }));
                }
            }
            for (a, &i) in active.iter().enumerate() {
                for &j in &active[a + 1..] {
                    let lhs = d.compose(&self.map_at(d, i, &here)?, &self.map_at(d, j, &shifted(&alpha, i, -1))?)?;
                    let rhs = d.compose(&self.map_at(d, j, &here)?, &self.map_at(d, i, &shifted(&alpha, j, -1))?)?;
                    if !d.mor_eq(&lhs, &rhs) {
                        return Ok(Some(GridViolation::Commutativity { i: i + 1, j: j + 1, alpha }));
                    }
                }
            }
            for &i in &active {
                if let Axis::Eta(p) = shape.axes[i] {
                    let c = self.composite(d, i, &here, p)?;
                    if !d.mor_eq(&c, &d.eta(i, m)) {
                        return Ok(Some(GridViolation::Cycle { direction: i + 1, alpha }));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_valid(&self, d: &D) -> Result<bool> {
        Ok(self.validate(d)?.is_none())
    }

    pub fn identity(&self, d: &D) -> GridMorphism<D> {
        GridMorphism { components: self.objects.iter().map(|m| d.identity(m)).collect() }
    }

    pub fn to_json(&self, d: &D) -> serde_json::Value {
        let positions: Vec<serde_json::Value> = self
            .shape
            .positions()
            .into_iter()
            .enumerate()
            .map(|(k, alpha)| {
                let maps: Vec<serde_json::Value> = (0..self.shape.n())
                    .filter(|&i| !self.shape.axes[i].is_unused())
                    .map(|i| serde_json::json!({"direction": i + 1, "map": d.describe_mor(&self.maps[i][k])}))
                    .collect();
                serde_json::json!({"alpha": alpha, "object": d.describe(&self.objects[k]), "maps": maps})
            })
            .collect();
        serde_json::json!({"shape": self.shape, "positions": positions})
    }
}

impl<D: CategoryDriver> GridMorphism<D> {
    pub fn zero(d: &D, x: &GridObject<D>, y: &GridObject<D>) -> Self {
        GridMorphism { components: x.objects.iter().zip(&y.objects).map(|(a, b)| d.zero_morphism(a, b)).collect() }
    }

    /// Component at any index, through the `F`s.
    pub fn component_at(&self, d: &D, x: &GridObject<D>, y: &GridObject<D>, alpha: &[i64]) -> Result<D::Mor> {
        Ok(match x.shape.resolve(alpha)? {
            Resolved::Zero => d.zero_morphism(&x.object_at(d, alpha)?, &y.object_at(d, alpha)?),
            Resolved::At { idx, fs } => d.apply_f_mor_many(&fs, &self.components[idx]),
        })
    }

    /// `self . f`
    pub fn after(&self, d: &D, f: &GridMorphism<D>) -> Result<GridMorphism<D>> {
        let components =
            self.components.iter().zip(&f.components).map(|(g, f)| d.compose(g, f)).collect::<Result<_>>()?;
        Ok(GridMorphism { components })
    }

    pub fn add(&self, d: &D, other: &GridMorphism<D>) -> Result<GridMorphism<D>> {
        let components =
            self.components.iter().zip(&other.components).map(|(a, b)| d.add(a, b)).collect::<Result<_>>()?;
        Ok(GridMorphism { components })
    }

    pub fn scale(&self, d: &D, c: &Elem<D>) -> GridMorphism<D> {
        GridMorphism { components: self.components.iter().map(|a| d.scale(a, c)).collect() }
    }

    pub fn is_zero(&self, d: &D) -> bool {
        self.components.iter().all(|m| d.is_zero_mor(m))
    }

    pub fn eq(&self, d: &D, other: &GridMorphism<D>) -> bool {
        self.components.iter().zip(&other.components).all(|(a, b)| d.mor_eq(a, b))
    }

    /// Checks that every square with the structure maps commutes.
    pub fn is_morphism(&self, d: &D, x: &GridObject<D>, y: &GridObject<D>) -> Result<bool> {
        for alpha in x.shape.positions() {
            let here: Vec<i64> = alpha.iter().map(|&v| v as i64).collect();
            for i in x.shape.active() {
                let prev = shifted(&alpha, i, -1);
                let lhs = d.compose(&self.components[x.shape.index(&alpha)], &x.map_at(d, i, &here)?)?;
                let rhs = d.compose(&y.map_at(d, i, &here)?, &self.component_at(d, x, y, &prev)?)?;
                if !d.mor_eq(&lhs, &rhs) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn same_shape<D: CategoryDriver>(x: &GridObject<D>, y: &GridObject<D>) -> Result<()> {
    if x.shape != y.shape {
        return Err(Error::DimensionMismatch(format!("grid shapes {:?} and {:?} differ", x.shape, y.shape)));
    }
    Ok(())
}

/// Basis of `Hom(X, Y)` in the grid category.
pub fn grid_hom<D: CategoryDriver>(d: &D, x: &GridObject<D>, y: &GridObject<D>) -> Result<Vec<GridMorphism<D>>> {
    same_shape(x, y)?;
    let field = d.field();
    let shape = &x.shape;
    let bases: Vec<Vec<D::Mor>> =
        x.objects.iter().zip(&y.objects).map(|(a, b)| d.hom_basis(a, b)).collect::<Result<_>>()?;
    let mut offsets = vec![0usize];
    for b in &bases {
        offsets.push(offsets.last().unwrap() + b.len());
    }
    let total = *offsets.last().unwrap();
    let mut constraints = Vec::new();
    for alpha in shape.positions() {
        let k = shape.index(&alpha);
        let here: Vec<i64> = alpha.iter().map(|&v| v as i64).collect();
        for i in shape.active() {
            let prev = shifted(&alpha, i, -1);
            let Resolved::At { idx, fs } = shape.resolve(&prev)? else {
                continue;
            };
            let src = x.object_at(d, &prev)?;
            let rows = d.flat_len(&src, &y.objects[k]);
            if rows == 0 {
                continue;
            }
            let fx = x.map_at(d, i, &here)?;
            let gy = y.map_at(d, i, &here)?;
            // phi_alpha . f  versus  g . phi_{alpha - e_i}
            let mut lhs = Matrix::zeros(field, rows, total);
            let mut rhs = Matrix::zeros(field, rows, total);
            for (c, b) in bases[k].iter().enumerate() {
                for (r, v) in d.flatten(&d.compose(b, &fx)?).into_iter().enumerate() {
                    lhs.set(r, offsets[k] + c, v);
                }
            }
            for (c, b) in bases[idx].iter().enumerate() {
                let fb = d.apply_f_mor_many(&fs, b);
                for (r, v) in d.flatten(&d.compose(&gy, &fb)?).into_iter().enumerate() {
                    let col = offsets[idx] + c;
                    let cur = rhs.get(r, col).clone();
                    rhs.set(r, col, field.add(&cur, &v));
                }
            }
            constraints.push((lhs, rhs));
        }
    }
    let sol = if constraints.is_empty() {
        (0..total)
            .map(|c| {
                let mut e = vec![field.zero(); total];
                e[c] = field.one();
                e
            })
            .collect()
    } else {
        equalizer_basis(field, total, &constraints)?
    };
    sol.into_iter()
        .map(|v| {
            let components = (0..shape.size())
                .map(|k| d.combine(&x.objects[k], &y.objects[k], &bases[k], &v[offsets[k]..offsets[k + 1]]))
                .collect::<Result<_>>()?;
            Ok(GridMorphism { components })
        })
        .collect()
}

pub fn grid_hom_dim<D: CategoryDriver>(d: &D, x: &GridObject<D>, y: &GridObject<D>) -> Result<usize> {
    Ok(grid_hom(d, x, y)?.len())
}

/// The grid of `shape` with objects `source(incs[alpha])` and maps
/// restricted from `x` along the monos `incs`. Positions of `shape` are
/// read with the same coordinates in `x`.
pub fn subobject_grid<D: CategoryDriver>(
    d: &D,
    x: &GridObject<D>,
    shape: &GridShape,
    incs: Vec<D::Mor>,
) -> Result<(GridObject<D>, GridMorphism<D>)> {
    let objects: Vec<D::Obj> = incs.iter().map(|f| d.source(f)).collect();
    let mut k = GridObject { shape: shape.clone(), objects, maps: vec![Vec::new(); shape.n()] };
    for j in shape.active() {
        let mut maps = Vec::with_capacity(shape.size());
        for alpha in shape.positions() {
            let idx = shape.index(&alpha);
            let prev = shifted(&alpha, j, -1);
            let h = match shape.resolve(&prev)? {
                Resolved::Zero => d.zero_morphism(&d.zero_object(), &k.objects[idx]),
                Resolved::At { idx: pidx, fs } => {
                    let kp = d.apply_f_mor_many(&fs, &incs[pidx]);
                    let here: Vec<i64> = alpha.iter().map(|&v| v as i64).collect();
                    let target = d.compose(&x.map_at(d, j, &here)?, &kp)?;
                    d.factor_through(&incs[idx], &d.source(&kp), &target)?
                        .ok_or_else(|| Error::Precondition(format!("maps do not restrict at {alpha:?}")))?
                }
            };
            maps.push(h);
        }
        k.maps[j] = maps;
    }
    Ok((k, GridMorphism { components: incs }))
}

/// The grid of `shape` with objects `target(projs[alpha])` and maps
/// induced from `y` along the epis `projs`.
pub fn quotient_grid<D: CategoryDriver>(
    d: &D,
    y: &GridObject<D>,
    shape: &GridShape,
    projs: Vec<D::Mor>,
) -> Result<(GridObject<D>, GridMorphism<D>)> {
    let objects: Vec<D::Obj> = projs.iter().map(|f| d.target(f)).collect();
    let mut c = GridObject { shape: shape.clone(), objects, maps: vec![Vec::new(); shape.n()] };
    for j in shape.active() {
        let mut maps = Vec::with_capacity(shape.size());
        for alpha in shape.positions() {
            let idx = shape.index(&alpha);
            let prev = shifted(&alpha, j, -1);
            let h = match shape.resolve(&prev)? {
                Resolved::Zero => d.zero_morphism(&d.zero_object(), &c.objects[idx]),
                Resolved::At { idx: pidx, fs } => {
                    let qp = d.apply_f_mor_many(&fs, &projs[pidx]);
                    let here: Vec<i64> = alpha.iter().map(|&v| v as i64).collect();
                    let target = d.compose(&projs[idx], &y.map_at(d, j, &here)?)?;
                    d.extend_along(&qp, &c.objects[idx], &target)?
                        .ok_or_else(|| Error::Precondition(format!("maps do not descend at {alpha:?}")))?
                }
            };
            maps.push(h);
        }
        c.maps[j] = maps;
    }
    Ok((c, GridMorphism { components: projs }))
}

/// Componentwise kernel with its inclusion.
pub fn grid_kernel<D: CategoryDriver>(
    d: &D,
    x: &GridObject<D>,
    phi: &GridMorphism<D>,
) -> Result<(GridObject<D>, GridMorphism<D>)> {
    let incs = phi.components.iter().map(|c| d.kernel(c).map(|r| r.1)).collect::<Result<_>>()?;
    subobject_grid(d, x, &x.shape, incs)
}

/// Componentwise cokernel with its projection.
pub fn grid_cokernel<D: CategoryDriver>(
    d: &D,
    y: &GridObject<D>,
    phi: &GridMorphism<D>,
) -> Result<(GridObject<D>, GridMorphism<D>)> {
    let projs = phi.components.iter().map(|c| d.cokernel(c).map(|r| r.1)).collect::<Result<_>>()?;
    quotient_grid(d, y, &y.shape, projs)
}

/// Direct sum of grids of one shape, with inclusions and projections.
pub fn grid_direct_sum<D: CategoryDriver>(
    d: &D,
    shape: &GridShape,
    parts: &[GridObject<D>],
) -> Result<(GridObject<D>, Vec<GridMorphism<D>>, Vec<GridMorphism<D>>)> {
    for p in parts {
        if p.shape != *shape {
            return Err(Error::DimensionMismatch("summands of different shapes".into()));
        }
    }
    let mut objects = Vec::new();
    let mut incs: Vec<Vec<D::Mor>> = vec![Vec::new(); parts.len()];
    let mut projs: Vec<Vec<D::Mor>> = vec![Vec::new(); parts.len()];
    for k in 0..shape.size() {
        let objs: Vec<D::Obj> = parts.iter().map(|p| p.objects[k].clone()).collect();
        let s = d.direct_sum(&objs)?;
        objects.push(s.object);
        for (j, (a, b)) in s.inclusions.into_iter().zip(s.projections).enumerate() {
            incs[j].push(a);
            projs[j].push(b);
        }
    }
    let incs: Vec<GridMorphism<D>> = incs.into_iter().map(|c| GridMorphism { components: c }).collect();
    let projs: Vec<GridMorphism<D>> = projs.into_iter().map(|c| GridMorphism { components: c }).collect();
    let mut sum = GridObject { shape: shape.clone(), objects, maps: vec![Vec::new(); shape.n()] };
    for i in shape.active() {
        let mut maps = Vec::new();
        for alpha in shape.positions() {
            let here: Vec<i64> = alpha.iter().map(|&v| v as i64).collect();
            let prev = shifted(&alpha, i, -1);
            let idx = shape.index(&alpha);
            let mut acc = d.zero_morphism(&sum.object_at(d, &prev)?, &sum.objects[idx]);
            for (j, p) in parts.iter().enumerate() {
                let pr = projs[j].component_at(d, &sum, p, &prev)?;
                let term = d.compose(&incs[j].components[idx], &d.compose(&p.map_at(d, i, &here)?, &pr)?)?;
                acc = d.add(&acc, &term)?;
            }
            maps.push(acc);
        }
        sum.maps[i] = maps;
    }
    Ok((sum, incs, projs))
}

/// Whether some element of `Hom(X, Y)` is invertible. Random combinations
/// are tried first, then each basis element and their sum.
pub fn is_isomorphic<D: CategoryDriver>(d: &D, x: &GridObject<D>, y: &GridObject<D>) -> Result<bool> {
    same_shape(x, y)?;
    for (a, b) in x.objects.iter().zip(&y.objects) {
        if d.invariants(a) != d.invariants(b) {
            return Ok(false);
        }
    }
    if x.is_zero(d) {
        return Ok(true);
    }
    let basis = grid_hom(d, x, y)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let invertible = |phi: &GridMorphism<D>| -> Result<bool> {
        for c in &phi.components {
            if d.inverse(c)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let field = d.field();
    let comb = |coeffs: &[Elem<D>]| -> Result<GridMorphism<D>> {
        let mut acc = GridMorphism::zero(d, x, y);
        for (b, c) in basis.iter().zip(coeffs) {
            acc = acc.add(d, &b.scale(d, c))?;
        }
        Ok(acc)
    };
    for _ in 0..6 {
        let coeffs: Vec<Elem<D>> =
            basis.iter().map(|_| crate::cohp1::random::random_elem(field, &mut rng, 50)).collect();
        if invertible(&comb(&coeffs)?)? {
            return Ok(true);
        }
    }
    for b in &basis {
        if invertible(b)? {
            return Ok(true);
        }
    }
    invertible(&comb(&vec![field.one(); basis.len()])?)
}
