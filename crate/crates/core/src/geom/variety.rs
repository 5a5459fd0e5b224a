//! Picard lattices and line-bundle cohomology of `P^d` and Hirzebruch surfaces.

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `P^d`, or the Hirzebruch surface `Sigma_m = P(O(-m) + O)` over `P^1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum VarietyModel {
    #[serde(rename = "p")]
    ProjectiveSpace { d: usize },
    #[serde(rename = "hirzebruch")]
    Hirzebruch { m: i64 },
}

/// A class in the Picard lattice: the degree on `P^d`, or `(a, b)` meaning
/// `a F + b C` on `Sigma_m`, with `F` a fiber and `C` the section of
/// self-intersection `m`.
pub type PicClass = Vec<i64>;

impl VarietyModel {
    pub fn validate(&self) -> Result<()> {
        match *self {
            VarietyModel::ProjectiveSpace { d } if d == 0 => {
                Err(Error::InvalidInput("P^0 is not supported; need d >= 1".into()))
            }
            VarietyModel::Hirzebruch { m } if m < 0 => {
                Err(Error::InvalidInput(format!("Hirzebruch index must be >= 0, got {m}")))
            }
            _ => Ok(()),
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            VarietyModel::ProjectiveSpace { d } => d,
            VarietyModel::Hirzebruch { .. } => 2,
        }
    }

    pub fn picard_rank(&self) -> usize {
        match self {
            VarietyModel::ProjectiveSpace { .. } => 1,
            VarietyModel::Hirzebruch { .. } => 2,
        }
    }

    pub fn check_class(&self, c: &[i64]) -> Result<()> {
        if c.len() != self.picard_rank() {
            return Err(Error::InvalidInput(format!(
                "class {c:?} has length {}, expected {}",
                c.len(),
                self.picard_rank()
            )));
        }
        Ok(())
    }

    pub fn display(&self) -> String {
        match self {
            VarietyModel::ProjectiveSpace { d } => format!("P^{d}"),
            VarietyModel::Hirzebruch { m } => format!("Sigma_{m}"),
        }
    }
}

pub fn add(a: &[i64], b: &[i64]) -> PicClass {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> PicClass {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Intersection pairing on a surface.
pub fn intersection_number(v: &VarietyModel, c1: &[i64], c2: &[i64]) -> Result<i64> {
    v.check_class(c1)?;
    v.check_class(c2)?;
    match *v {
        VarietyModel::ProjectiveSpace { d: 2 } => Ok(c1[0] * c2[0]),
        VarietyModel::ProjectiveSpace { d } => {
            Err(Error::InvalidInput(format!("intersection numbers need a surface, got P^{d}")))
        }
        // F.F = 0, F.C = 1, C.C = m
        VarietyModel::Hirzebruch { m } => Ok(c1[0] * c2[1] + c1[1] * c2[0] + m * c1[1] * c2[1]),
    }
}

pub fn canonical_class(v: &VarietyModel) -> PicClass {
    match *v {
        VarietyModel::ProjectiveSpace { d } => vec![-(d as i64) - 1],
        VarietyModel::Hirzebruch { m } => vec![m - 2, -2],
    }
}

/// Arithmetic genus of a curve of class `c` on a surface, by adjunction.
pub fn genus(v: &VarietyModel, c: &[i64]) -> Result<i64> {
    let k = canonical_class(v);
    let two_g_minus_2 = intersection_number(v, c, &add(c, &k))?;
    Ok(two_g_minus_2 / 2 + 1)
}

/// `h^i(P^1, O(n))`.
pub fn h_p1(n: i64, i: usize) -> u64 {
    match i {
        0 => (n + 1).max(0) as u64,
        1 => (-n - 1).max(0) as u64,
        _ => 0,
    }
}

/// `h^i(P^d, O(n))`.
pub fn h_pd(d: usize, n: i64, i: usize) -> u64 {
    let d64 = d as i64;
    if i == 0 && n >= 0 {
        binomial((n + d64) as u64, d as u64)
    } else if i == d && n <= -d64 - 1 {
        binomial((-n - 1) as u64, d as u64)
    } else {
        0
    }
}

/// `h^i(X, O(c))` for a line bundle of class `c`.
pub fn cohomology_dim(v: &VarietyModel, c: &[i64], i: usize) -> Result<u64> {
    v.check_class(c)?;
    Ok(match *v {
        VarietyModel::ProjectiveSpace { d } => h_pd(d, c[0], i),
        VarietyModel::Hirzebruch { m } => {
            let (a, b) = (c[0], c[1]);
            if i > 2 || b == -1 {
                0
            } else if b >= 0 {
                // push forward to the base: O(a) + O(a + m) + ... + O(a + b m)
                if i == 2 {
                    0
                } else {
                    (0..=b).map(|j| h_p1(a + j * m, i)).sum()
                }
            } else {
                let dual = sub(&canonical_class(v), c);
                cohomology_dim(v, &dual, 2 - i)?
            }
        }
    })
}

pub fn euler_characteristic(v: &VarietyModel, c: &[i64]) -> Result<i64> {
    let mut chi = 0i64;
    for i in 0..=v.dim() {
        let h = cohomology_dim(v, c, i)? as i64;
        chi += if i % 2 == 0 { h } else { -h };
    }
    Ok(chi)
}

/// Full table `(h^0, ..., h^dim)`.
pub fn cohomology_table(v: &VarietyModel, c: &[i64]) -> Result<Vec<u64>> {
    (0..=v.dim()).map(|i| cohomology_dim(v, c, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hirzebruch_pairing_and_canonical() {
        let s = VarietyModel::Hirzebruch { m: 2 };
        assert_eq!(intersection_number(&s, &[1, 0], &[1, 0]).unwrap(), 0);
        assert_eq!(intersection_number(&VarietyModel::Hirzebruch { m: 0 }, &[1, 1], &[1, 1]).unwrap(), 2);
        assert_eq!(canonical_class(&s), vec![0, -2]);
        assert_eq!(canonical_class(&VarietyModel::ProjectiveSpace { d: 2 }), vec![-3]);
        for m in 0..4 {
            let s = VarietyModel::Hirzebruch { m };
            assert_eq!(genus(&s, &[1, 0]).unwrap(), 0);
            for a in 0..4 {
                assert_eq!(genus(&s, &[a, 1]).unwrap(), 0);
            }
        }
        let p2 = VarietyModel::ProjectiveSpace { d: 2 };
        assert_eq!(intersection_number(&p2, &[1], &[2]).unwrap(), 2);
        assert!(intersection_number(&VarietyModel::ProjectiveSpace { d: 3 }, &[1], &[1]).is_err());
    }

    #[test]
    fn small_tables() {
        let p2 = VarietyModel::ProjectiveSpace { d: 2 };
        assert_eq!(cohomology_dim(&p2, &[2], 0).unwrap(), 6);
        assert_eq!(cohomology_table(&p2, &[-3]).unwrap(), vec![0, 0, 1]);
        let p1 = VarietyModel::ProjectiveSpace { d: 1 };
        assert_eq!(cohomology_dim(&p1, &[-2], 1).unwrap(), 1);
        for m in 0..4 {
            let s = VarietyModel::Hirzebruch { m };
            assert_eq!(cohomology_dim(&s, &[0, 1], 0).unwrap(), (m + 2) as u64);
            assert_eq!(cohomology_table(&s, &canonical_class(&s)).unwrap(), vec![0, 0, 1]);
        }
    }
}
