//! The grid category over a finite-dimensional algebra as modules over a
//! bigger algebra, and Ext and global dimension computed there.
//!
//! Directions with `F = 0` contribute a linearly oriented `A_len` quiver.
//! Weighted directions with `F = eta = id` have invertible structure maps
//! and are read at their last position. A `Zero` axis over an identity
//! direction only holds the zero object.

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::gridcat::driver::CategoryDriver;
use crate::gridcat::findim::{DirectionKind, FinDimDriver, RepMap};
use crate::gridcat::functors::pi_rho;
use crate::gridcat::grid::{Axis, GridMorphism, GridObject, GridShape};
use crate::quivalg::{AlgebraPresentation, Path, PathAlgebra, Quiver, Relation, Representation, Vertex};

/// The algebra of a grid shape together with the vertex bookkeeping.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra<F: Field> {
    pub presentation: AlgebraPresentation<F>,
    pub shape: GridShape,
    /// Positions of the reduced grid, in vertex-block order.
    pub positions: Vec<Vec<usize>>,
    /// Directions that survive as `A_len` factors.
    pub grid_dirs: Vec<usize>,
    /// `grid_arrow[i][pos * nv + v]` and `lam_arrow[pos][a]`: arrow ids.
    grid_arrow: Vec<Vec<Option<usize>>>,
    lam_arrow: Vec<Vec<usize>>,
    lam_vertices: usize,
    lam_arrows: usize,
    empty: bool,
}

impl<F: Field> MatrixAlgebra<F> {
    pub fn vertex(&self, pos: usize, v: usize) -> usize {
        pos * self.lam_vertices + v
    }

    pub fn is_zero_algebra(&self) -> bool {
        self.empty
    }
}

fn reduced_shape(shape: &GridShape, kinds: &[DirectionKind]) -> Result<(GridShape, Vec<usize>, bool)> {
    let mut axes = Vec::new();
    let mut dirs = Vec::new();
    let mut empty = false;
    for (i, a) in shape.axes.iter().enumerate() {
        match (*a, kinds[i]) {
            (Axis::Unused, _) => axes.push(Axis::Unused),
            (Axis::Eta(p) | Axis::Zero(p), DirectionKind::Zero) => {
                axes.push(Axis::Zero(p));
                dirs.push(i);
            }
            (Axis::Eta(_), DirectionKind::Identity) => axes.push(Axis::Unused),
            (Axis::Zero(_), DirectionKind::Identity) => {
                empty = true;
                axes.push(Axis::Unused);
            }
        }
    }
    Ok((GridShape::new(axes), dirs, empty))
}

/// The presentation whose representations are the grids of `shape`.
pub fn to_matrix_algebra<F: Field>(d: &FinDimDriver<F>, shape: &GridShape) -> Result<MatrixAlgebra<F>> {
    if shape.n() != d.kinds.len() {
        return Err(Error::DimensionMismatch("shape and driver have different directions".into()));
    }
    shape.validate()?;
    let field = d.field().clone();
    let lam = &d.algebra.presentation;
    let (red, grid_dirs, empty) = reduced_shape(shape, &d.kinds)?;
    let nv = lam.quiver.vertex_count();
    let na = lam.quiver.arrows.len();
    let positions = if empty { Vec::new() } else { red.positions() };
    let mut q = Quiver::new();
    let alpha_label = |a: &[usize]| a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    for a in &positions {
        for v in 0..nv {
            q.add_vertex(Vertex {
                label: format!("{}@({})", lam.quiver.vertices[v].label, alpha_label(a)),
                alpha: Some(a.clone()),
                twist: None,
            });
        }
    }
    let mut lam_arrow = Vec::new();
    for (k, a) in positions.iter().enumerate() {
        let mut row = Vec::new();
        for arr in &lam.quiver.arrows {
            row.push(q.add_arrow(
                format!("{}@({})", arr.label, alpha_label(a)),
                k * nv + arr.source,
                k * nv + arr.target,
            ));
        }
        lam_arrow.push(row);
    }
    let mut grid_arrow = vec![vec![None; positions.len() * nv]; shape.n()];
    for &i in &grid_dirs {
        for (k, a) in positions.iter().enumerate() {
            if a[i] < 2 {
                continue;
            }
            let mut prev = a.clone();
            prev[i] -= 1;
            let kp = red.index(&prev);
            for v in 0..nv {
                let id = q.add_arrow(format!("g{}_{}@({})", i + 1, v, alpha_label(a)), kp * nv + v, k * nv + v);
                grid_arrow[i][k * nv + v] = Some(id);
            }
        }
    }
    let mut relations = Vec::new();
    let shift_path = |p: &Path, k: usize| Path {
        source: k * nv + p.source,
        target: k * nv + p.target,
        arrows: p.arrows.iter().map(|&x| lam_arrow[k][x]).collect(),
    };
    for k in 0..positions.len() {
        for r in &lam.relations {
            let terms = r.terms.iter().map(|(c, p)| (c.clone(), shift_path(p, k))).collect();
            relations.push(Relation { terms, kind: r.kind.clone() });
        }
    }
    for (k, a) in positions.iter().enumerate() {
        for &i in &grid_dirs {
            if a[i] < 2 {
                continue;
            }
            let mut prev = a.clone();
            prev[i] -= 1;
            let kp = red.index(&prev);
            for (ai, arr) in lam.quiver.arrows.iter().enumerate() {
                let g_s = grid_arrow[i][k * nv + arr.source].unwrap();
                let g_t = grid_arrow[i][k * nv + arr.target].unwrap();
                let p1 = Path {
                    source: kp * nv + arr.source,
                    target: k * nv + arr.target,
                    arrows: vec![g_s, lam_arrow[k][ai]],
                };
                let p2 = Path {
                    source: kp * nv + arr.source,
                    target: k * nv + arr.target,
                    arrows: vec![lam_arrow[kp][ai], g_t],
                };
                relations.push(Relation::commutativity(&field, p1, p2));
            }
            for &j in grid_dirs.iter().filter(|&&j| j > i) {
                if a[j] < 2 {
                    continue;
                }
                let mut pj = a.clone();
                pj[j] -= 1;
                let mut pij = prev.clone();
                pij[j] -= 1;
                let (kj, kij) = (red.index(&pj), red.index(&pij));
                for v in 0..nv {
                    let via_i = vec![grid_arrow[j][kp * nv + v].unwrap(), grid_arrow[i][k * nv + v].unwrap()];
                    let via_j = vec![grid_arrow[i][kj * nv + v].unwrap(), grid_arrow[j][k * nv + v].unwrap()];
                    let p1 = Path { source: kij * nv + v, target: k * nv + v, arrows: via_i };
                    let p2 = Path { source: kij * nv + v, target: k * nv + v, arrows: via_j };
                    relations.push(Relation::commutativity(&field, p1, p2));
                }
            }
        }
    }
    Ok(MatrixAlgebra {
        presentation: AlgebraPresentation { field, quiver: q, relations },
        shape: shape.clone(),
        positions,
        grid_dirs,
        grid_arrow,
        lam_arrow,
        lam_vertices: nv,
        lam_arrows: na,
        empty,
    })
}

/// The full grid position standing for a reduced one: identity directions
/// are read at their last position.
fn grid_alpha(shape: &GridShape, kinds: &[DirectionKind], reduced: &[usize]) -> Vec<usize> {
    reduced
        .iter()
        .enumerate()
        .map(|(i, &x)| match (shape.axes[i], kinds[i]) {
            (Axis::Eta(p), DirectionKind::Identity) => p,
            _ => x,
        })
        .collect()
}

/// `Phi` on objects.
pub fn phi_object<F: Field>(
    d: &FinDimDriver<F>,
    ma: &MatrixAlgebra<F>,
    x: &GridObject<FinDimDriver<F>>,
) -> Result<Representation<F>> {
    if x.shape != ma.shape {
        return Err(Error::DimensionMismatch("grid does not match the algebra".into()));
    }
    let field = d.field();
    let nv = ma.lam_vertices;
    let q = &ma.presentation.quiver;
    let mut dims = vec![0; q.vertex_count()];
    let mut maps: Vec<Option<Matrix<F>>> = vec![None; q.arrows.len()];
    for (k, a) in ma.positions.iter().enumerate() {
        let full = grid_alpha(&x.shape, &d.kinds, a);
        let idx = x.shape.index(&full);
        let m = &x.objects[idx];
        for v in 0..nv {
            dims[k * nv + v] = m.dims[v];
        }
        for ai in 0..ma.lam_arrows {
            maps[ma.lam_arrow[k][ai]] = Some(m.maps[ai].clone());
        }
        for &i in &ma.grid_dirs {
            for v in 0..nv {
                if let Some(id) = ma.grid_arrow[i][k * nv + v] {
                    maps[id] = Some(x.maps[i][idx].components[v].clone());
                }
            }
        }
    }
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(ai, m)| m.unwrap_or_else(|| Matrix::zeros(field, dims[q.arrows[ai].target], dims[q.arrows[ai].source])))
        .collect();
    Ok(Representation { dims, maps })
}

/// `Phi` on morphisms.
pub fn phi_morphism<F: Field>(
    d: &FinDimDriver<F>,
    ma: &MatrixAlgebra<F>,
    x: &GridObject<FinDimDriver<F>>,
    f: &GridMorphism<FinDimDriver<F>>,
) -> Vec<Matrix<F>> {
    let nv = ma.lam_vertices;
    let mut out = Vec::with_capacity(ma.positions.len() * nv);
    for a in &ma.positions {
        let full = grid_alpha(&x.shape, &d.kinds, a);
        let c = &f.components[x.shape.index(&full)];
        out.extend(c.components.iter().cloned());
    }
    out
}

/// `Phi^{-1}`: rebuilds the grid, spreading identity directions
/// `pi_rho`-style.
pub fn phi_inverse<F: Field>(
    d: &FinDimDriver<F>,
    ma: &MatrixAlgebra<F>,
    r: &Representation<F>,
) -> Result<GridObject<FinDimDriver<F>>> {
    let shape = &ma.shape;
    if ma.empty {
        return Ok(GridObject::zero(d, shape));
    }
    let nv = ma.lam_vertices;
    let (red, _, _) = reduced_shape(shape, &d.kinds)?;
    // the grid over the reduced shape
    let objects: Vec<Representation<F>> = ma
        .positions
        .iter()
        .enumerate()
        .map(|(k, _)| Representation {
            dims: r.dims[k * nv..(k + 1) * nv].to_vec(),
            maps: (0..ma.lam_arrows).map(|ai| r.maps[ma.lam_arrow[k][ai]].clone()).collect(),
        })
        .collect();
    let mut maps: Vec<Vec<RepMap<F>>> = vec![Vec::new(); shape.n()];
    for i in red.active() {
        for (k, a) in ma.positions.iter().enumerate() {
            let f = if a[i] < 2 {
                d.zero_morphism(&d.zero_object(), &objects[k])
            } else {
                let mut prev = a.clone();
                prev[i] -= 1;
                let kp = red.index(&prev);
                let components = (0..nv).map(|v| r.maps[ma.grid_arrow[i][k * nv + v].unwrap()].clone()).collect();
                RepMap { source: objects[kp].clone(), target: objects[k].clone(), components }
            };
            maps[i].push(f);
        }
    }
    // Zero-kind weighted directions keep their shape; identity ones spread
    let mut g = GridObject { shape: red.clone(), objects, maps };
    for i in 0..shape.n() {
        match (shape.axes[i], d.kinds[i], red.axes[i]) {
            (Axis::Eta(p), DirectionKind::Identity, _) => g = pi_rho(d, &g, i, p)?,
            (Axis::Eta(_), DirectionKind::Zero, Axis::Zero(_)) => g.shape.axes[i] = shape.axes[i],
            _ => {}
        }
    }
    Ok(g)
}

/// The presentation's path algebra, or `None` for the zero algebra.
pub fn phi_algebra<F: Field>(ma: &MatrixAlgebra<F>) -> Result<Option<PathAlgebra<F>>> {
    if ma.empty || ma.presentation.quiver.vertex_count() == 0 {
        return Ok(None);
    }
    Ok(Some(ma.presentation.algebra()?))
}

/// `dim Ext^k(X, Y)` in the grid category.
pub fn grid_ext<F: Field>(
    d: &FinDimDriver<F>,
    x: &GridObject<FinDimDriver<F>>,
    y: &GridObject<FinDimDriver<F>>,
    k: usize,
) -> Result<usize> {
    let ma = to_matrix_algebra(d, &x.shape)?;
    let Some(alg) = phi_algebra(&ma)? else {
        return Ok(0);
    };
    alg.ext_dim(&phi_object(d, &ma, x)?, &phi_object(d, &ma, y)?, k)
}

/// Global dimension of the grid category; `None` when it has no nonzero
/// objects.
pub fn gldim_via_phi<F: Field>(d: &FinDimDriver<F>, shape: &GridShape) -> Result<Option<usize>> {
    let ma = to_matrix_algebra(d, shape)?;
    match phi_algebra(&ma)? {
        Some(alg) => alg.global_dimension(),
        None => Ok(None),
    }
}

/// Bounded cogeneration check: every member of `tests` other than zero
/// has some nonzero `Ext^k(M, T)`, `k <= max_k`.
pub fn cogenerates<F: Field>(
    d: &FinDimDriver<F>,
    t: &GridObject<FinDimDriver<F>>,
    tests: &[GridObject<FinDimDriver<F>>],
    max_k: usize,
) -> Result<bool> {
    for m in tests {
        if m.is_zero(d) {
            continue;
        }
        let mut seen = false;
        for k in 0..=max_k {
            if grid_ext(d, m, t, k)? > 0 {
                seen = true;
                break;
            }
        }
        if !seen {
            return Ok(false);
        }
    }
    Ok(true)
}
