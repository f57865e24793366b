//! Shared fixtures and random generators for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use qsi::poly::{ADegree, Ambient, Monomial, Poly, RepPoint};
use qsi::quiver::{AddMap, DimVector, FunctorData, Id, PathComb, Quiver};
use qsi::rational::{self, Rational};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn amb(q: &Quiver, alpha: &[usize]) -> Ambient {
    Ambient::new(q.clone(), DimVector::from_values(q, alpha).unwrap()).unwrap()
}

pub fn fixtures() -> Vec<Quiver> {
    vec![Quiver::kronecker(), Quiver::one_loop(), Quiver::a3()]
}

pub fn random_dims<R: Rng>(rng: &mut R, q: &Quiver, lo: usize, hi: usize) -> DimVector {
    let v: Vec<usize> = (0..q.vertices().len())
        .map(|_| rng.gen_range(lo..=hi))
        .collect();
    DimVector::from_values(q, &v).unwrap()
}

pub fn random_rep<R: Rng>(rng: &mut R, q: &Quiver, dims: &DimVector, span: i64) -> RepPoint {
    let a = Ambient::new(q.clone(), dims.clone()).unwrap();
    RepPoint::random(&a, rng, span)
}

/// A random combination of paths `v -> w` of length at most `max_len`, with
/// small integer coefficients; zero when there are no such paths.
pub fn random_comb<R: Rng>(rng: &mut R, q: &Quiver, v: &Id, w: &Id, max_len: usize) -> PathComb {
    let paths = q.enumerate_paths(v, w, max_len);
    let mut terms = Vec::new();
    for p in paths {
        if rng.gen_bool(0.6) {
            terms.push((p, rational::int(rng.gen_range(-2..=2))));
        }
    }
    PathComb::from_terms(v.clone(), w.clone(), terms).unwrap()
}

/// A random map with `R_p(phi)` square at `alpha`, or `None` if the draw did
/// not find a square shape.
pub fn random_square_map<R: Rng>(
    rng: &mut R,
    q: &Quiver,
    alpha: &DimVector,
    max_mult: usize,
    max_len: usize,
) -> Option<AddMap> {
    let vs = q.vertices();
    for _ in 0..50 {
        let a: Vec<usize> = vs.iter().map(|_| rng.gen_range(0..=max_mult)).collect();
        let b: Vec<usize> = vs.iter().map(|_| rng.gen_range(0..=max_mult)).collect();
        let a = DimVector::from_values(q, &a).unwrap();
        let b = DimVector::from_values(q, &b).unwrap();
        let rows = a.dot(alpha);
        if rows == 0 || rows != b.dot(alpha) {
            continue;
        }
        let src = AddMap::slots_for(q, &a);
        let tgt = AddMap::slots_for(q, &b);
        let entries = src
            .iter()
            .map(|s| {
                tgt.iter()
                    .map(|t| random_comb(rng, q, s, t, max_len))
                    .collect()
            })
            .collect();
        return Some(AddMap::new(src, tgt, entries).unwrap());
    }
    None
}

/// A random functor `add(src) -> add(dst)` with path images of length at
/// most `max_len`.
pub fn random_functor<R: Rng>(
    rng: &mut R,
    src: &Quiver,
    dst: &Quiver,
    max_len: usize,
) -> FunctorData {
    let vmap: BTreeMap<Id, Id> = src
        .vertices()
        .iter()
        .map(|v| (v.clone(), dst.vertices().choose(rng).unwrap().clone()))
        .collect();
    let amap: BTreeMap<Id, PathComb> = src
        .arrows()
        .iter()
        .map(|a| {
            (
                a.id.clone(),
                random_comb(rng, dst, &vmap[&a.from], &vmap[&a.to], max_len),
            )
        })
        .collect();
    FunctorData::new(src.clone(), dst.clone(), vmap, amap).unwrap()
}

/// A random polynomial of A-degree `chi` with at most `terms` terms.
pub fn random_homogeneous<R: Rng>(rng: &mut R, amb: &Ambient, chi: &ADegree, terms: usize) -> Poly {
    let monos: Vec<Monomial> = amb.monomials_of_degree(chi).unwrap();
    let mut f = Poly::zero();
    for _ in 0..terms {
        if let Some(m) = monos.choose(rng) {
            f = &f + &Poly::term(m.clone(), rational::random_nonzero(rng, 3));
        }
    }
    f
}

pub fn random_poly<R: Rng>(rng: &mut R, amb: &Ambient, terms: usize, max_deg: usize) -> Poly {
    let coords = amb.coords();
    let mut f = Poly::zero();
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_deg);
        let powers = (0..d)
            .map(|_| (coords.choose(rng).unwrap().clone(), 1))
            .collect();
        f = &f
            + &Poly::term(
                Monomial::from_powers(powers),
                rational::random_small(rng, 4),
            );
    }
    f
}

pub fn ratio(a: &Poly, b: &Poly) -> Option<Rational> {
    a.proportional_to(b)
}
