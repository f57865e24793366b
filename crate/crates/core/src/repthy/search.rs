use num_traits::Zero;
use rayon::prelude::*;

use super::present::{canonical_presentation, cokernel, minimize_presentation};
use super::{ext_dim, hom_basis, InjectivityStatus, PresentationData};
use crate::error::{Error, Result};
use crate::invariants::det_semiinvariant;
use crate::poly::{Ambient, Poly, RepPoint};
use crate::quiver::{AddMap, DimVector, Quiver};
use crate::rational::Rational;
use crate::spanning::{enumerate_maps, SearchBounds};

/// `P_{phi,beta}` for a presentation.
pub fn presentation_poly(q: &Quiver, pres: &PresentationData, beta: &DimVector) -> Result<Poly> {
    let amb = Ambient::new(q.clone(), beta.clone())?;
    det_semiinvariant(&amb, &pres.phi)
}

/// `P_{R,beta}` from the minimized standard presentation of `R`.
pub fn p_r_beta(q: &Quiver, r: &RepPoint, beta: &DimVector) -> Result<Poly> {
    let e = q.euler_form(r.alpha(), beta);
    if e != 0 {
        return Err(Error::EulerNonzero(e));
    }
    let pres = minimize_presentation(&canonical_presentation(q, r)?);
    presentation_poly(q, &pres, beta)
}

/// Outcome of the perpendicularity test at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerpVerdict {
    /// `det R_p(phi) != 0`.
    pub perpendicular: bool,
    pub det: Rational,
    /// `dim Hom(cok phi_hat, R_p)` and `dim Ext(cok phi_hat, R_p)`, when
    /// cross-validated.
    pub hom: Option<usize>,
    pub ext: Option<usize>,
}

/// Evaluates `det R_p(phi)`. With `cross_validate`, also computes Hom and Ext
/// from `cok phi_hat` to `R_p` directly and fails if the two verdicts differ.
pub fn perp_check(
    q: &Quiver,
    pres: &PresentationData,
    p: &RepPoint,
    cross_validate: bool,
) -> Result<PerpVerdict> {
    let det = p.det_of_map(&pres.phi)?;
    let perpendicular = !det.is_zero();
    let mut out = PerpVerdict {
        perpendicular,
        det,
        hom: None,
        ext: None,
    };
    if cross_validate {
        if pres.status != InjectivityStatus::Injective {
            return Err(Error::Invalid(format!(
                "cross-validation needs an injective presentation, this one is {}",
                pres.status
            )));
        }
        let t = cokernel(q, &pres.phi)?;
        let hom = hom_basis(q, &t, p)?.len();
        let ext = ext_dim(q, &t, p)?;
        if (hom == 0 && ext == 0) != perpendicular {
            return Err(Error::Inconsistent(format!(
                "det R_p(phi) = {} but dim Hom = {hom}, dim Ext = {ext}",
                out.det
            )));
        }
        out.hom = Some(hom);
        out.ext = Some(ext);
    }
    Ok(out)
}

/// A map certifying that a point is semistable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub presentation: PresentationData,
    pub poly: Poly,
    pub value: Rational,
    /// `T = cok phi_hat`, on acyclic quivers.
    pub cokernel: Option<RepPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemistableOutcome {
    Witness(Box<Witness>),
    /// Nothing found within the bounds; this says nothing about the point.
    Undetermined {
        bounds: SearchBounds,
        examined: usize,
        truncated: bool,
    },
}

/// Truncation used for injectivity on quivers with oriented cycles.
fn truncation(bounds: &SearchBounds) -> usize {
    2 * bounds.max_path_len + 2
}

fn try_candidate(
    q: &Quiver,
    amb: &Ambient,
    p: &RepPoint,
    phi: &AddMap,
    depth: usize,
) -> Result<Option<Witness>> {
    let value = p.det_of_map(phi)?;
    if value.is_zero() {
        return Ok(None);
    }
    let status = super::injectivity_check(q, phi, depth)?;
    if status != InjectivityStatus::Injective {
        return Ok(None);
    }
    let poly = det_semiinvariant(amb, phi)?;
    if poly.is_constant() {
        return Ok(None);
    }
    let (cok, dims) = if q.is_acyclic() {
        let t = cokernel(q, phi)?;
        let d = t.alpha().clone();
        (Some(t), Some(d))
    } else {
        (None, None)
    };
    Ok(Some(Witness {
        presentation: PresentationData {
            phi: phi.clone(),
            status,
            cokernel_dims: dims,
        },
        poly,
        value,
        cokernel: cok,
    }))
}

/// Looks for a map `phi` with injective `phi_hat` and non-constant
/// `P_{phi,beta}` not vanishing at `p`, in canonical enumeration order. The
/// first such map is returned whatever the number of worker threads.
pub fn semistable_search(
    q: &Quiver,
    beta: &DimVector,
    p: &RepPoint,
    bounds: &SearchBounds,
) -> Result<SemistableOutcome> {
    if p.alpha() != beta {
        return Err(Error::DimMismatch(format!(
            "point has dimension vector {}, expected {beta}",
            p.alpha()
        )));
    }
    let amb = Ambient::new(q.clone(), beta.clone())?;
    let (maps, truncated) = enumerate_maps(q, beta, bounds);
    let depth = truncation(bounds);
    const CHUNK: usize = 64;
    for chunk in maps.chunks(CHUNK) {
        let found: Vec<Option<Witness>> = chunk
            .par_iter()
            .map(|phi| try_candidate(q, &amb, p, phi, depth))
            .collect::<Result<_>>()?;
        if let Some(w) = found.into_iter().flatten().next() {
            return Ok(SemistableOutcome::Witness(Box::new(w)));
        }
    }
    Ok(SemistableOutcome::Undetermined {
        bounds: bounds.clone(),
        examined: maps.len(),
        truncated,
    })
}
