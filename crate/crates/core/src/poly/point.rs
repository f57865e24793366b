use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;

use super::{Ambient, Coord, Poly};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::{AddMap, DimVector, Id, Path, PathComb};
use crate::rational::Rational;

/// A point `p` of `R(Q, alpha)`: one rational matrix of shape
/// `alpha(i(a)) x alpha(t(a))` per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepPoint {
    alpha: DimVector,
    maps: BTreeMap<Id, Matrix>,
}

impl RepPoint {
    pub fn new(amb: &Ambient, maps: BTreeMap<Id, Matrix>) -> Result<Self> {
        for a in amb.quiver().arrows() {
            let want = amb.shape(&a.id)?;
            let m = maps.get(&a.id).ok_or_else(|| {
                Error::ShapeMismatch(format!("no matrix given for arrow {}", a.id))
            })?;
            if m.shape() != want {
                return Err(Error::ShapeMismatch(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.id,
                    want.0,
                    want.1,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if let Some(extra) = maps.keys().find(|a| amb.quiver().arrow(a).is_err()) {
            return Err(Error::UnknownArrow(extra.to_string()));
        }
        Ok(RepPoint {
            alpha: amb.alpha().clone(),
            maps,
        })
    }

    pub fn zero(amb: &Ambient) -> Self {
        let maps = amb
            .quiver()
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = amb.shape(&a.id).unwrap();
                (a.id.clone(), Matrix::zeros(r, c))
            })
            .collect();
        RepPoint {
            alpha: amb.alpha().clone(),
            maps,
        }
    }

    /// Entries drawn from small random rationals.
    pub fn random<R: Rng + ?Sized>(amb: &Ambient, rng: &mut R, span: i64) -> Self {
        let maps = amb
            .quiver()
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = amb.shape(&a.id).unwrap();
                (a.id.clone(), Matrix::random(rng, r, c, span))
            })
            .collect();
        RepPoint {
            alpha: amb.alpha().clone(),
            maps,
        }
    }

    pub fn alpha(&self) -> &DimVector {
        &self.alpha
    }

    pub fn maps(&self) -> &BTreeMap<Id, Matrix> {
        &self.maps
    }

    pub fn get(&self, a: &str) -> Result<&Matrix> {
        self.maps
            .get(a)
            .ok_or_else(|| Error::UnknownArrow(a.to_string()))
    }

    /// Replaces the matrix of an existing arrow, keeping its shape.
    pub fn set(&mut self, a: &str, m: Matrix) -> Result<()> {
        let old = self
            .maps
            .get_mut(a)
            .ok_or_else(|| Error::UnknownArrow(a.to_string()))?;
        if old.shape() != m.shape() {
            return Err(Error::ShapeMismatch(format!("arrow {a}")));
        }
        *old = m;
        Ok(())
    }

    pub fn value(&self, c: &Coord) -> Result<Rational> {
        let m = self.maps.get(&c.arrow).ok_or_else(|| {
            Error::ShapeMismatch(format!("{c} refers to an arrow this point lacks"))
        })?;
        let (i, j) = (c.row as usize, c.col as usize);
        if i >= m.rows() || j >= m.cols() {
            return Err(Error::ShapeMismatch(format!(
                "{c} lies outside the {}x{} block",
                m.rows(),
                m.cols()
            )));
        }
        Ok(m[(i, j)].clone())
    }

    /// `f(p)`.
    pub fn evaluate(&self, f: &Poly) -> Result<Rational> {
        f.eval_with(|c| self.value(c))
    }

    /// `R_p(path)`: product of arrow matrices, identity for `e_v`.
    pub fn realize_path(&self, p: &Path) -> Result<Matrix> {
        let mut acc = Matrix::identity(self.alpha.get(p.source()));
        for a in p.arrows() {
            acc = acc.try_mul(self.get(a)?)?;
        }
        Ok(acc)
    }

    pub fn realize_comb(&self, c: &PathComb) -> Result<Matrix> {
        let mut acc = Matrix::zeros(self.alpha.get(c.source()), self.alpha.get(c.target()));
        for (p, x) in c.terms() {
            acc = &acc + &self.realize_path(p)?.scale(x);
        }
        Ok(acc)
    }

    /// The numeric block matrix `R_p(phi)`.
    pub fn realize_map(&self, phi: &AddMap) -> Result<Matrix> {
        let row_off = offsets(phi.source_slots(), &self.alpha);
        let col_off = offsets(phi.target_slots(), &self.alpha);
        let mut out = Matrix::zeros(*row_off.last().unwrap(), *col_off.last().unwrap());
        for s in 0..phi.num_sources() {
            for t in 0..phi.num_targets() {
                let e = phi.entry(s, t);
                if e.is_zero() {
                    continue;
                }
                out.set_block(row_off[s], col_off[t], &self.realize_comb(e)?);
            }
        }
        Ok(out)
    }

    /// `det R_p(phi)`.
    pub fn det_of_map(&self, phi: &AddMap) -> Result<Rational> {
        let m = self.realize_map(phi)?;
        if m.rows() != m.cols() {
            return Err(Error::NonSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        Ok(m.det())
    }

    pub fn is_zero(&self) -> bool {
        self.maps.values().all(|m| m.is_zero())
    }

    /// Sum of two points on the same space.
    pub fn add(&self, other: &RepPoint) -> Result<RepPoint> {
        if self.alpha != other.alpha || self.maps.len() != other.maps.len() {
            return Err(Error::ShapeMismatch(
                "points live on different spaces".into(),
            ));
        }
        let maps = self
            .maps
            .iter()
            .map(|(a, m)| Ok((a.clone(), m + other.get(a)?)))
            .collect::<Result<_>>()?;
        Ok(RepPoint {
            alpha: self.alpha.clone(),
            maps,
        })
    }

    pub fn scale(&self, c: &Rational) -> RepPoint {
        RepPoint {
            alpha: self.alpha.clone(),
            maps: self
                .maps
                .iter()
                .map(|(a, m)| (a.clone(), m.scale(c)))
                .collect(),
        }
    }
}

/// Running sums of block sizes; the last entry is the total.
pub(crate) fn offsets(slots: &[Id], alpha: &DimVector) -> Vec<usize> {
    let mut out = vec![0];
    for v in slots {
        out.push(out.last().unwrap() + alpha.get(v));
    }
    out
}

impl Poly {
    /// `f(p)`.
    pub fn evaluate(&self, p: &RepPoint) -> Result<Rational> {
        p.evaluate(self)
    }

    /// True when `f` vanishes at `p`.
    pub fn vanishes_at(&self, p: &RepPoint) -> Result<bool> {
        Ok(self.evaluate(p)?.is_zero())
    }
}
