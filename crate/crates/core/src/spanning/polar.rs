use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::invariants::apply_functor_poly;
use crate::poly::{ADegree, Ambient, Poly};
use crate::quiver::{id, FunctorData, Id, Path, PathComb, Quiver};
use crate::rational::{self, Rational};

/// The polarization quiver `Q_chi`: arrow `a` of `Q` becomes `m_a` parallel
/// copies `a_1 .. a_{m_a}` (none when `m_a = 0`). `sigma` sends `a` to the
/// sum of its copies, `pi` sends each copy back to `a`.
#[derive(Clone, Debug)]
pub struct QChi {
    pub quiver: Quiver,
    pub sigma: FunctorData,
    pub pi: FunctorData,
    pub chi: ADegree,
    pub copies: BTreeMap<Id, Vec<Id>>,
}

pub fn build_q_chi(q: &Quiver, chi: &ADegree) -> Result<QChi> {
    chi.check(q)?;
    let mut arrows = Vec::new();
    let mut copies = BTreeMap::new();
    for a in q.arrows() {
        let names: Vec<Id> = (1..=chi.get(&a.id))
            .map(|i| id(&format!("{}_{i}", a.id)))
            .collect();
        for n in &names {
            arrows.push((n.to_string(), a.from.to_string(), a.to.to_string()));
        }
        copies.insert(a.id.clone(), names);
    }
    let qc = Quiver::new(q.vertices().iter().map(|v| v.to_string()), arrows)?;
    let vertex_map: BTreeMap<Id, Id> = q
        .vertices()
        .iter()
        .map(|v| (v.clone(), v.clone()))
        .collect();

    let mut sigma_arrows = BTreeMap::new();
    let mut pi_arrows = BTreeMap::new();
    for a in q.arrows() {
        let terms = copies[&a.id]
            .iter()
            .map(|n| Ok((Path::arrow(qc.arrow(n)?), Rational::one())))
            .collect::<Result<Vec<_>>>()?;
        sigma_arrows.insert(
            a.id.clone(),
            PathComb::from_terms(a.from.clone(), a.to.clone(), terms)?,
        );
        for n in &copies[&a.id] {
            pi_arrows.insert(n.clone(), PathComb::path(Path::arrow(a)));
        }
    }
    let sigma = FunctorData::new(q.clone(), qc.clone(), vertex_map.clone(), sigma_arrows)?;
    let pi = FunctorData::new(qc.clone(), q.clone(), vertex_map, pi_arrows)?;
    Ok(QChi {
        quiver: qc,
        sigma,
        pi,
        chi: chi.normalized(),
        copies,
    })
}

impl QChi {
    /// The same dimension vector, read on `Q_chi`.
    pub fn ambient(&self, amb: &Ambient) -> Result<Ambient> {
        Ambient::new(self.quiver.clone(), self.pi.apply_dim(amb.alpha())?)
    }

    /// `prod_a m_a!`.
    pub fn restitution_factor(&self) -> Rational {
        self.chi
            .0
            .values()
            .map(|m| rational::factorial(*m as u32))
            .product()
    }
}

/// The multilinear component of `sigma(f)`.
pub fn polarize(qc: &QChi, amb: &Ambient, f: &Poly) -> Result<Poly> {
    if !f.is_a_homogeneous_of(&qc.chi) {
        return Err(Error::NotHomogeneous(format!(
            "expected A-degree {}",
            qc.chi
        )));
    }
    let target = qc.ambient(amb)?;
    let pulled = apply_functor_poly(&qc.sigma, &target, f)?;
    Ok(pulled.a_degree_component(&ADegree::ones(&qc.quiver)))
}

/// `pi(f')`: every copy `a_i` is identified with `a`.
pub fn restitute(qc: &QChi, amb: &Ambient, f: &Poly) -> Result<Poly> {
    qc.ambient(amb)?.check(f)?;
    apply_functor_poly(&qc.pi, amb, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::quiver::DimVector;
    use crate::rational::int;

    fn amb(q: Quiver, a: &[usize]) -> Ambient {
        let alpha = DimVector::from_values(&q, a).unwrap();
        Ambient::new(q, alpha).unwrap()
    }

    #[test]
    fn construction() {
        let k2 = Quiver::kronecker();
        let qc = build_q_chi(&k2, &ADegree::new(&[("a", 2), ("b", 1)])).unwrap();
        let names: Vec<&str> = qc.quiver.arrows().iter().map(|a| a.id.as_ref()).collect();
        assert_eq!(names, ["a_1", "a_2", "b_1"]);
        assert_eq!(qc.sigma.arrow_image("a").unwrap().to_string(), "a_1 + a_2");
        assert_eq!(qc.pi.arrow_image("a_2").unwrap().to_string(), "a");
        let qc = build_q_chi(&k2, &ADegree::new(&[("a", 1)])).unwrap();
        assert_eq!(qc.quiver.arrows().len(), 1);
        assert!(qc.sigma.arrow_image("b").unwrap().is_zero());
    }

    #[test]
    fn polarize_and_restitute() {
        let k2 = Quiver::kronecker();
        let a11 = amb(k2.clone(), &[1, 1]);
        let chi = ADegree::new(&[("a", 2), ("b", 1)]);
        let qc = build_q_chi(&k2, &chi).unwrap();
        let f = parse_poly("x[a,1,1]^2*x[b,1,1]").unwrap();
        let g = polarize(&qc, &a11, &f).unwrap();
        assert_eq!(g, parse_poly("2*x[a_1,1,1]*x[a_2,1,1]*x[b_1,1,1]").unwrap());
        assert_eq!(restitute(&qc, &a11, &g).unwrap(), f.scale(&int(2)));
        assert!(matches!(
            polarize(&qc, &a11, &parse_poly("x[a,1,1]").unwrap()),
            Err(Error::NotHomogeneous(_))
        ));

        let a22 = amb(k2.clone(), &[2, 2]);
        let chi = ADegree::new(&[("a", 2)]);
        let qc = build_q_chi(&k2, &chi).unwrap();
        let det = a22.arrow_matrix("a").unwrap().det().unwrap();
        let back = restitute(&qc, &a22, &polarize(&qc, &a22, &det).unwrap()).unwrap();
        assert_eq!(back, det.scale(&qc.restitution_factor()));
    }
}
