use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix};
use crate::poly::{Ambient, RepPoint};
use crate::quiver::{AddMap, DimVector, Id, Path, PathComb, Quiver};
use crate::rational::{self, Rational};

/// Whether `phi_hat`, the map of projectives induced by `phi`, is injective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InjectivityStatus {
    Injective,
    /// The kernel is a projective with `c(v)` copies of `P_v`.
    NotInjective(DimVector),
    /// No decision with projectives truncated at this path length.
    UnknownTruncated(usize),
}

impl fmt::Display for InjectivityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InjectivityStatus::Injective => write!(f, "injective"),
            InjectivityStatus::NotInjective(c) => write!(f, "not injective, kernel c = {c}"),
            InjectivityStatus::UnknownTruncated(l) => {
                write!(f, "unknown (projectives truncated at length {l})")
            }
        }
    }
}

/// A map in `add(Q)` read as the presentation `phi_hat`, with what is known
/// about it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationData {
    pub phi: AddMap,
    pub status: InjectivityStatus,
    /// Dimension vector of `cok phi_hat`, when finite and computed.
    pub cokernel_dims: Option<DimVector>,
}

impl PresentationData {
    pub fn from_map(q: &Quiver, phi: AddMap, truncation: usize) -> Result<Self> {
        phi.validate(q)?;
        let status = injectivity_check(q, &phi, truncation)?;
        let cokernel_dims = if q.is_acyclic() {
            Some(cokernel(q, &phi)?.alpha().clone())
        } else {
            None
        };
        Ok(PresentationData {
            phi,
            status,
            cokernel_dims,
        })
    }
}

/// The standard presentation of `R` on an acyclic quiver: generators `(v, n)`
/// for `n < dim R(v)`, relations `(a, m)` for `m < dim R(i(a))`.
pub fn canonical_presentation(q: &Quiver, r: &RepPoint) -> Result<PresentationData> {
    if let Some(v) = q.find_cycle_vertex() {
        return Err(Error::HasOrientedCycle(v.to_string()));
    }
    q.check_dims(r.alpha())?;
    let d = r.alpha();
    let sources: Vec<(Id, usize)> = q
        .vertices()
        .iter()
        .flat_map(|v| (0..d.get(v)).map(move |n| (v.clone(), n)))
        .collect();
    let targets: Vec<(&crate::quiver::Arrow, usize)> = q
        .arrows()
        .iter()
        .flat_map(|a| (0..d.get(&a.from)).map(move |m| (a, m)))
        .collect();
    let mut entries = Vec::with_capacity(sources.len());
    for (v, n) in &sources {
        let mut row = Vec::with_capacity(targets.len());
        for (a, m) in &targets {
            let mut e = PathComb::zero(v.clone(), a.to.clone());
            if *v == a.from && n == m {
                e = e.add(&PathComb::path(Path::arrow(a)))?;
            }
            if *v == a.to {
                let x = -r.get(&a.id)?[(*m, *n)].clone();
                e = e.add(&PathComb::scalar(v.clone(), x))?;
            }
            row.push(e);
        }
        entries.push(row);
    }
    let phi = AddMap::new(
        sources.into_iter().map(|(v, _)| v).collect(),
        targets.iter().map(|(a, _)| a.to.clone()).collect(),
        entries,
    )?;
    let status = injectivity_check(q, &phi, 0)?;
    if status != InjectivityStatus::Injective {
        return Err(Error::Inconsistent(format!(
            "standard presentation is {status}"
        )));
    }
    Ok(PresentationData {
        phi,
        status,
        cokernel_dims: Some(d.clone()),
    })
}

/// Cancels slot pairs joined by a nonzero scalar entry `c e_v` until none is
/// left.
pub fn minimize_presentation(p: &PresentationData) -> PresentationData {
    let mut phi = p.phi.clone();
    loop {
        let pivot = (0..phi.num_sources()).find_map(|s| {
            (0..phi.num_targets())
                .find_map(|t| phi.entry(s, t).as_nonzero_scalar().map(|c| (s, t, c)))
        });
        let Some((s0, t0, c)) = pivot else { break };
        let inv = c.recip();
        let mut next = phi.clone();
        for s in 0..phi.num_sources() {
            if s == s0 || phi.entry(s, t0).is_zero() {
                continue;
            }
            let left = phi.entry(s, t0).scale(&inv);
            for t in 0..phi.num_targets() {
                if t == t0 || phi.entry(s0, t).is_zero() {
                    continue;
                }
                let corr = left.compose(phi.entry(s0, t)).expect("slot vertices agree");
                let e = phi
                    .entry(s, t)
                    .add(&corr.scale(&rational::int(-1)))
                    .unwrap();
                next.set_entry(s, t, e).unwrap();
            }
        }
        phi = next.remove_slots(&[s0], &[t0]);
    }
    PresentationData {
        phi,
        status: p.status.clone(),
        cokernel_dims: p.cokernel_dims.clone(),
    }
}

/// Basis of `(+)_slots P_{slot}(u)`: pairs (slot, path slot -> u).
struct ProjBasis {
    elems: Vec<(usize, Path)>,
    index: HashMap<(usize, Path), usize>,
}

impl ProjBasis {
    fn new(q: &Quiver, slots: &[Id], u: &Id, max_len: usize) -> Self {
        let elems: Vec<(usize, Path)> = slots
            .iter()
            .enumerate()
            .flat_map(|(k, v)| {
                q.enumerate_paths(v, u, max_len)
                    .into_iter()
                    .map(move |p| (k, p))
            })
            .collect();
        let index = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        ProjBasis { elems, index }
    }

    fn len(&self) -> usize {
        self.elems.len()
    }
}

/// `phi_hat` at vertex `u` on paths of length at most `len`: rows are
/// `(target slot, path)`, columns `(source slot, path)`.
struct LocalMap {
    dom: ProjBasis,
    cod: ProjBasis,
    matrix: Matrix,
}

fn local_map(q: &Quiver, phi: &AddMap, u: &Id, len: usize) -> LocalMap {
    let dom = ProjBasis::new(q, phi.target_slots(), u, len);
    let cod = ProjBasis::new(q, phi.source_slots(), u, len + phi.max_path_len());
    let mut matrix = Matrix::zeros(dom.len(), cod.len());
    for (i, (t, tail)) in dom.elems.iter().enumerate() {
        for s in 0..phi.num_sources() {
            for (p, c) in phi.entry(s, *t).terms() {
                let full = p.compose(tail).expect("entry ends where the tail starts");
                let j = cod.index[&(s, full)];
                matrix[(i, j)] += c;
            }
        }
    }
    LocalMap { dom, cod, matrix }
}

fn path_bound(q: &Quiver) -> usize {
    q.vertices().len()
}

/// Decides whether `phi_hat` is injective: exactly on acyclic quivers;
/// otherwise from the scalar part of `phi` and the kernel on projectives
/// truncated at path length `truncation`.
pub fn injectivity_check(q: &Quiver, phi: &AddMap, truncation: usize) -> Result<InjectivityStatus> {
    phi.validate(q)?;
    let acyclic = q.is_acyclic();
    if !acyclic && scalar_part_injective(phi) {
        return Ok(InjectivityStatus::Injective);
    }
    let len = if acyclic { path_bound(q) } else { truncation };
    let mut kernels: BTreeMap<Id, (LocalMap, Vec<Vec<Rational>>)> = BTreeMap::new();
    for u in q.vertices() {
        let lm = local_map(q, phi, u, len);
        let k = lm.matrix.left_nullspace();
        kernels.insert(u.clone(), (lm, k));
    }
    if kernels.values().all(|(_, k)| k.is_empty()) {
        return Ok(if acyclic {
            InjectivityStatus::Injective
        } else {
            InjectivityStatus::UnknownTruncated(truncation)
        });
    }
    // Kernel vectors are exact kernel elements even when truncated. Its top
    // at v is K(v) modulo the images of K(i(a)) under arrows a into v.
    let mut c = DimVector::zero(q);
    for v in q.vertices() {
        let (lm_v, k_v) = &kernels[v];
        let mut images = EchelonBasis::new(lm_v.dom.len());
        for a in q.arrows_into(v) {
            let (lm_i, k_i) = &kernels[&a.from];
            'vec: for x in k_i {
                let mut y = vec![rational::int(0); lm_v.dom.len()];
                for (pos, coef) in x.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let (t, p) = &lm_i.dom.elems[pos];
                    match lm_v.dom.index.get(&(*t, p.extend(a))) {
                        Some(&j) => y[j] += coef,
                        None => continue 'vec,
                    }
                }
                images.insert(&y);
            }
        }
        c.set(v.clone(), k_v.len() - images.rank());
    }
    Ok(InjectivityStatus::NotInjective(c))
}

/// True when the trivial-path coefficients of `phi`, as a matrix from target
/// slots to source slots, have independent rows. Then the lowest-length part
/// of any nonzero element survives `phi_hat`.
fn scalar_part_injective(phi: &AddMap) -> bool {
    let m = Matrix::from_rows(
        phi.num_targets(),
        phi.num_sources(),
        (0..phi.num_targets())
            .map(|t| {
                (0..phi.num_sources())
                    .map(|s| phi.entry(s, t).trivial_coefficient())
                    .collect()
            })
            .collect(),
    )
    .unwrap();
    m.rank() == phi.num_targets()
}

/// `cok phi_hat` as a representation, on an acyclic quiver.
pub fn cokernel(q: &Quiver, phi: &AddMap) -> Result<RepPoint> {
    if let Some(v) = q.find_cycle_vertex() {
        return Err(Error::HasOrientedCycle(v.to_string()));
    }
    phi.validate(q)?;
    let len = path_bound(q);
    struct Quotient {
        lm: LocalMap,
        image: EchelonBasis,
        free: Vec<usize>,
    }
    let mut quot: BTreeMap<Id, Quotient> = BTreeMap::new();
    for u in q.vertices() {
        let lm = local_map(q, phi, u, len);
        let mut image = EchelonBasis::new(lm.cod.len());
        for i in 0..lm.matrix.rows() {
            image.insert(lm.matrix.row(i));
        }
        let pivots: Vec<usize> = image
            .rows()
            .map(|r| r.iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        let free = (0..lm.cod.len()).filter(|j| !pivots.contains(j)).collect();
        quot.insert(u.clone(), Quotient { lm, image, free });
    }
    let mut dims = DimVector::zero(q);
    for (u, x) in &quot {
        dims.set(u.clone(), x.free.len());
    }
    let amb = Ambient::new(q.clone(), dims)?;
    let mut maps = BTreeMap::new();
    for a in q.arrows() {
        let (src, dst) = (&quot[&a.from], &quot[&a.to]);
        let mut m = Matrix::zeros(src.free.len(), dst.free.len());
        for (i, &j) in src.free.iter().enumerate() {
            let (s, p) = &src.lm.cod.elems[j];
            let mut v = vec![rational::int(0); dst.lm.cod.len()];
            v[dst.lm.cod.index[&(*s, p.extend(a))]] = rational::int(1);
            let red = dst.image.reduce(&v);
            for (k, &f) in dst.free.iter().enumerate() {
                m[(i, k)] = red[f].clone();
            }
        }
        maps.insert(a.id.clone(), m);
    }
    RepPoint::new(&amb, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repthy::representation;

    fn comb(q: &Quiver, s: &str) -> PathComb {
        let arrows: Vec<&str> = s.split('.').collect();
        PathComb::path(Path::from_arrows(q, &arrows).unwrap())
    }

    #[test]
    fn canonical_examples() {
        let k2 = Quiver::kronecker();
        let s1 = representation(&k2, &[1, 0], &[]).unwrap();
        let p = canonical_presentation(&k2, &s1).unwrap();
        assert_eq!(p.phi.to_string(), "[1] -> [2,2] (a, b)");
        assert_eq!(minimize_presentation(&p), p);

        let p2 = representation(&k2, &[0, 1], &[]).unwrap();
        let p = canonical_presentation(&k2, &p2).unwrap();
        assert_eq!((p.phi.num_sources(), p.phi.num_targets()), (1, 0));
        assert_eq!(cokernel(&k2, &p.phi).unwrap(), p2);

        let a3 = Quiver::a3();
        let s2 = representation(&a3, &[0, 1, 0], &[]).unwrap();
        let p = minimize_presentation(&canonical_presentation(&a3, &s2).unwrap());
        assert_eq!(p.phi.to_string(), "[2] -> [3] (b)");
    }

    #[test]
    fn projective_minimizes_away() {
        let k2 = Quiver::kronecker();
        let p1 = representation(
            &k2,
            &[1, 2],
            &[
                ("a", Matrix::from_i64(1, 2, &[1, 2])),
                ("b", Matrix::from_i64(1, 2, &[3, -1])),
            ],
        )
        .unwrap();
        let canon = canonical_presentation(&k2, &p1).unwrap();
        assert_eq!((canon.phi.num_sources(), canon.phi.num_targets()), (3, 2));
        let min = minimize_presentation(&canon);
        assert_eq!((min.phi.num_sources(), min.phi.num_targets()), (1, 0));
        assert_eq!(cokernel(&k2, &min.phi).unwrap().alpha(), p1.alpha());
    }

    #[test]
    fn identity_summand_cancels() {
        let k2 = Quiver::kronecker();
        let s1 = representation(&k2, &[1, 0], &[]).unwrap();
        let p = canonical_presentation(&k2, &s1).unwrap();
        let id = AddMap::single(PathComb::identity(crate::quiver::id("2")));
        let bigger = PresentationData {
            phi: p.phi.block_diag(&id),
            ..p.clone()
        };
        assert_eq!(minimize_presentation(&bigger), p);
    }

    #[test]
    fn cokernel_recovers_representation() {
        let k2 = Quiver::kronecker();
        let r = representation(
            &k2,
            &[2, 1],
            &[
                ("a", Matrix::from_i64(2, 1, &[1, 0])),
                ("b", Matrix::from_i64(2, 1, &[2, 1])),
            ],
        )
        .unwrap();
        let p = canonical_presentation(&k2, &r).unwrap();
        let t = cokernel(&k2, &p.phi).unwrap();
        assert_eq!(t.alpha(), r.alpha());
        // Isomorphic: Hom(T, R) contains an invertible map.
        let homs = crate::repthy::hom_basis(&k2, &t, &r).unwrap();
        assert!(homs
            .iter()
            .any(|h| h.maps.values().all(|m| !m.det().is_zero())));
    }

    #[test]
    fn injectivity_examples() {
        let k2 = Quiver::kronecker();
        let ab = AddMap::new(
            vec![crate::quiver::id("1")],
            vec![crate::quiver::id("2"), crate::quiver::id("2")],
            vec![vec![comb(&k2, "a"), comb(&k2, "b")]],
        )
        .unwrap();
        assert_eq!(
            injectivity_check(&k2, &ab, 0).unwrap(),
            InjectivityStatus::Injective
        );

        let zero = AddMap::single(PathComb::zero(
            crate::quiver::id("1"),
            crate::quiver::id("1"),
        ));
        match injectivity_check(&k2, &zero, 0).unwrap() {
            InjectivityStatus::NotInjective(c) => assert_eq!(c.values(), vec![1, 0]),
            other => panic!("{other}"),
        }

        let l1 = Quiver::one_loop();
        let e_l = AddMap::single(
            PathComb::identity(crate::quiver::id("1"))
                .add(&comb(&l1, "l"))
                .unwrap(),
        );
        for l in [0, 3, 6] {
            assert_eq!(
                injectivity_check(&l1, &e_l, l).unwrap(),
                InjectivityStatus::Injective
            );
        }
        let l_only = AddMap::single(comb(&l1, "l"));
        assert_eq!(
            injectivity_check(&l1, &l_only, 4).unwrap(),
            InjectivityStatus::UnknownTruncated(4)
        );
        let zl = AddMap::single(PathComb::zero(
            crate::quiver::id("1"),
            crate::quiver::id("1"),
        ));
        assert!(matches!(
            injectivity_check(&l1, &zl, 2).unwrap(),
            InjectivityStatus::NotInjective(_)
        ));
    }

    #[test]
    fn witness_cokernel() {
        let k2 = Quiver::kronecker();
        let a = AddMap::single(comb(&k2, "a"));
        let t = cokernel(&k2, &a).unwrap();
        assert_eq!(t.alpha().values(), vec![1, 1]);
        assert_eq!(t.get("a").unwrap(), &Matrix::from_i64(1, 1, &[0]));
        assert_eq!(t.get("b").unwrap(), &Matrix::from_i64(1, 1, &[1]));
    }
}
