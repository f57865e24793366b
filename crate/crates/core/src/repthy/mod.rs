//! Homomorphisms and extensions between representations, projective
//! presentations, the polynomials `P_{R,beta}`, perpendicularity and the
//! search for semistability witnesses.

mod present;
mod search;

pub use present::{
    canonical_presentation, cokernel, injectivity_check, minimize_presentation, InjectivityStatus,
    PresentationData,
};
pub use search::{
    p_r_beta, perp_check, presentation_poly, semistable_search, PerpVerdict, SemistableOutcome,
    Witness,
};

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{Ambient, RepPoint};
use crate::quiver::{Id, Quiver};

/// A homomorphism `R -> S`: one matrix `alpha_R(v) x alpha_S(v)` per vertex,
/// with `R(a) phi(t(a)) = phi(i(a)) S(a)` for every arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism {
    pub maps: BTreeMap<Id, Matrix>,
}

impl RepMorphism {
    pub fn is_homomorphism(&self, q: &Quiver, r: &RepPoint, s: &RepPoint) -> Result<bool> {
        for a in q.arrows() {
            let lhs = r.get(&a.id)?.try_mul(self.get(&a.to)?)?;
            let rhs = self.get(&a.from)?.try_mul(s.get(&a.id)?)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn get(&self, v: &str) -> Result<&Matrix> {
        self.maps
            .get(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }
}

fn check_rep(q: &Quiver, r: &RepPoint) -> Result<()> {
    q.check_dims(r.alpha())?;
    for a in q.arrows() {
        let m = r.get(&a.id)?;
        if m.shape() != (r.alpha().get(&a.from), r.alpha().get(&a.to)) {
            return Err(Error::ShapeMismatch(format!("arrow {}", a.id)));
        }
    }
    Ok(())
}

/// Basis of `Hom(R, S)`, from the kernel of the intertwiner equations.
pub fn hom_basis(q: &Quiver, r: &RepPoint, s: &RepPoint) -> Result<Vec<RepMorphism>> {
    check_rep(q, r)?;
    check_rep(q, s)?;
    let (dr, ds) = (r.alpha(), s.alpha());
    // Unknowns: entries of phi(v), vertices in order, row-major.
    let mut offset = BTreeMap::new();
    let mut n = 0;
    for v in q.vertices() {
        offset.insert(v.clone(), n);
        n += dr.get(v) * ds.get(v);
    }
    let var = |v: &Id, i: usize, j: usize| offset[v] + i * ds.get(v) + j;
    let mut rows: Vec<Vec<_>> = Vec::new();
    for a in q.arrows() {
        let (ra, sa) = (r.get(&a.id)?, s.get(&a.id)?);
        for i in 0..dr.get(&a.from) {
            for j in 0..ds.get(&a.to) {
                let mut eq = vec![crate::rational::int(0); n];
                for k in 0..dr.get(&a.to) {
                    if !ra[(i, k)].is_zero() {
                        eq[var(&a.to, k, j)] += &ra[(i, k)];
                    }
                }
                for k in 0..ds.get(&a.from) {
                    if !sa[(k, j)].is_zero() {
                        eq[var(&a.from, i, k)] -= &sa[(k, j)];
                    }
                }
                rows.push(eq);
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..n)
            .map(|k| {
                let mut e = vec![crate::rational::int(0); n];
                e[k] = crate::rational::int(1);
                e
            })
            .collect()
    } else {
        Matrix::from_rows(rows.len(), n, rows)?.nullspace()
    };
    Ok(kernel
        .into_iter()
        .map(|x| RepMorphism {
            maps: q
                .vertices()
                .iter()
                .map(|v| {
                    let (p, c) = (dr.get(v), ds.get(v));
                    let mut m = Matrix::zeros(p, c);
                    for i in 0..p {
                        for j in 0..c {
                            m[(i, j)] = x[var(v, i, j)].clone();
                        }
                    }
                    (v.clone(), m)
                })
                .collect(),
        })
        .collect())
}

/// `dim Ext(R, S)` as the defect `dim Hom(R, S) - <dim R, dim S>`.
pub fn ext_dim(q: &Quiver, r: &RepPoint, s: &RepPoint) -> Result<usize> {
    let hom = hom_basis(q, r, s)?.len() as i64;
    let euler = q.euler_form(r.alpha(), s.alpha());
    let ext = hom - euler;
    if ext < 0 {
        return Err(Error::Inconsistent(format!(
            "dim Hom = {hom} is below the Euler form {euler}"
        )));
    }
    Ok(ext as usize)
}

/// `(dim Hom(R, S), dim Ext(R, S))` from a projective presentation of `R`:
/// kernel and cokernel of `R_S(phi)` acting on row vectors.
pub fn hom_ext_via_presentation(q: &Quiver, r: &RepPoint, s: &RepPoint) -> Result<(usize, usize)> {
    check_rep(q, s)?;
    let pres = canonical_presentation(q, r)?;
    let m = s.realize_map(&pres.phi)?;
    let rank = m.rank();
    Ok((m.rows() - rank, m.cols() - rank))
}

/// `R_1 + R_2`, blocks placed diagonally.
pub fn direct_sum(q: &Quiver, r1: &RepPoint, r2: &RepPoint) -> Result<RepPoint> {
    check_rep(q, r1)?;
    check_rep(q, r2)?;
    let amb = Ambient::new(q.clone(), r1.alpha().add(r2.alpha()))?;
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            Ok((
                a.id.clone(),
                Matrix::block_diag(&[r1.get(&a.id)?.clone(), r2.get(&a.id)?.clone()]),
            ))
        })
        .collect::<Result<_>>()?;
    RepPoint::new(&amb, maps)
}

/// A representation with dimension vector `dims` and the given arrow
/// matrices (missing arrows are zero).
pub fn representation(q: &Quiver, dims: &[usize], maps: &[(&str, Matrix)]) -> Result<RepPoint> {
    let alpha = crate::quiver::DimVector::from_values(q, dims)?;
    let amb = Ambient::new(q.clone(), alpha)?;
    let mut p = RepPoint::zero(&amb);
    for (a, m) in maps {
        p.set(a, m.clone())?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kron(pa: i64, pb: i64) -> RepPoint {
        representation(
            &Quiver::kronecker(),
            &[1, 1],
            &[
                ("a", Matrix::from_i64(1, 1, &[pa])),
                ("b", Matrix::from_i64(1, 1, &[pb])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn hom_examples() {
        let a3 = Quiver::a3();
        let s2 = representation(&a3, &[0, 1, 0], &[]).unwrap();
        assert_eq!(hom_basis(&a3, &s2, &s2).unwrap().len(), 1);

        let k2 = Quiver::kronecker();
        assert_eq!(hom_basis(&k2, &kron(1, 0), &kron(0, 1)).unwrap().len(), 0);
        let h = hom_basis(&k2, &kron(1, 0), &kron(1, 0)).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].get("1").unwrap(), h[0].get("2").unwrap());
        assert!(h[0].is_homomorphism(&k2, &kron(1, 0), &kron(1, 0)).unwrap());
    }

    #[test]
    fn ext_examples() {
        let k2 = Quiver::kronecker();
        assert_eq!(ext_dim(&k2, &kron(1, 0), &kron(1, 0)).unwrap(), 1);
        assert_eq!(
            hom_ext_via_presentation(&k2, &kron(1, 0), &kron(1, 0)).unwrap(),
            (1, 1)
        );

        let a3 = Quiver::a3();
        let p1 = representation(
            &a3,
            &[1, 1, 1],
            &[
                ("a", Matrix::from_i64(1, 1, &[1])),
                ("b", Matrix::from_i64(1, 1, &[1])),
            ],
        )
        .unwrap();
        let s3 = representation(&a3, &[0, 0, 1], &[]).unwrap();
        // P_1 is projective: Ext vanishes, and Hom(P_1, S_3) = S_3(1) = 0.
        assert_eq!(hom_basis(&a3, &p1, &s3).unwrap().len(), 0);
        assert_eq!(ext_dim(&a3, &p1, &s3).unwrap(), 0);
        assert_eq!(hom_ext_via_presentation(&a3, &p1, &s3).unwrap(), (0, 0));
    }

    #[test]
    fn loop_ext() {
        let l1 = Quiver::one_loop();
        let r = representation(&l1, &[1], &[]).unwrap();
        assert_eq!(hom_basis(&l1, &r, &r).unwrap().len(), 1);
        assert_eq!(ext_dim(&l1, &r, &r).unwrap(), 1);
    }
}
