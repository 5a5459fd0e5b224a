//! Sample-based checks of the recollement identities.

use serde::Serialize;

use crate::error::Result;
use crate::gridcat::driver::CategoryDriver;
use crate::gridcat::functors::{iota, iota_lambda, iota_rho, pi, pi_lambda, pi_rho, unit_counit_analysis};
use crate::gridcat::grid::{grid_hom_dim, is_isomorphic, GridObject};

/// Outcome of the recollement checks on one sample. Every field should be
/// `true`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RecollementCheck {
    pub valid_inputs: bool,
    pub pi_iota_zero: bool,
    pub pi_pi_rho_identity: bool,
    pub iota_lambda_iota_identity: bool,
    /// `Hom(pi_lambda M, X) = Hom(M, pi X)`
    pub adj_pi_lambda: bool,
    /// `Hom(X, pi_rho M) = Hom(pi X, M)`
    pub adj_pi_rho: bool,
    /// `Hom(iota_lambda X, N) = Hom(X, iota N)`
    pub adj_iota_lambda: bool,
    /// `Hom(iota N, X) = Hom(N, iota_rho X)`
    pub adj_iota_rho: bool,
    pub unit_counit: bool,
}

impl RecollementCheck {
    pub fn all(&self) -> bool {
        self.valid_inputs
            && self.pi_iota_zero
            && self.pi_pi_rho_identity
            && self.iota_lambda_iota_identity
            && self.adj_pi_lambda
            && self.adj_pi_rho
            && self.adj_iota_lambda
            && self.adj_iota_rho
            && self.unit_counit
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        let items = [
            (self.valid_inputs, "valid inputs"),
            (self.pi_iota_zero, "pi iota = 0"),
            (self.pi_pi_rho_identity, "pi pi_rho = id"),
            (self.iota_lambda_iota_identity, "iota_lambda iota = id"),
            (self.adj_pi_lambda, "pi_lambda -| pi"),
            (self.adj_pi_rho, "pi -| pi_rho"),
            (self.adj_iota_lambda, "iota_lambda -| iota"),
            (self.adj_iota_rho, "iota -| iota_rho"),
            (self.unit_counit, "unit and counit"),
        ];
        for (ok, name) in items {
            if !ok {
                v.push(name);
            }
        }
        v
    }
}

/// Runs every check in direction `i` for the grid `x`, the object `m` (the
/// shape of `x` with `i` unused) and `n` (the shape of `x` with `i` a
/// `Zero(p - 1)` axis).
pub fn recollement_check<D: CategoryDriver>(
    d: &D,
    x: &GridObject<D>,
    i: usize,
    m: &GridObject<D>,
    n: &GridObject<D>,
) -> Result<RecollementCheck> {
    let p = x.shape.axes[i].len();
    let mut r =
        RecollementCheck { valid_inputs: x.is_valid(d)? && m.is_valid(d)? && n.is_valid(d)?, ..Default::default() };
    let in_ = iota(d, n, i)?;
    r.pi_iota_zero = pi(d, &in_, i)?.is_zero(d);
    let rm = pi_rho(d, m, i, p)?;
    let lm = pi_lambda(d, m, i, p)?;
    r.pi_pi_rho_identity = pi(d, &rm, i)?.objects == m.objects;
    r.iota_lambda_iota_identity = is_isomorphic(d, &iota_lambda(d, &in_, i)?, n)?;
    let px = pi(d, x, i)?;
    r.adj_pi_lambda = grid_hom_dim(d, &lm, x)? == grid_hom_dim(d, m, &px)?;
    r.adj_pi_rho = grid_hom_dim(d, x, &rm)? == grid_hom_dim(d, &px, m)?;
    r.adj_iota_lambda = grid_hom_dim(d, &iota_lambda(d, x, i)?, n)? == grid_hom_dim(d, x, &in_)?;
    r.adj_iota_rho = grid_hom_dim(d, &in_, x)? == grid_hom_dim(d, n, &iota_rho(d, x, i)?)?;
    r.unit_counit = unit_counit_analysis(d, x, i)?.all();
    Ok(r)
}
