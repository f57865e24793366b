use std::collections::BTreeMap;

use super::{AddMap, DimVector, Id, Path, PathComb, Quiver};
use crate::error::{Error, Result};

/// An additive functor `add(Q') -> add(Q)` given on generators: each vertex of
/// `Q'` goes to a vertex of `Q`, each arrow of `Q'` to a path combination in
/// `Q` between the images of its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorData {
    source: Quiver,
    target: Quiver,
    vertex_map: BTreeMap<Id, Id>,
    arrow_map: BTreeMap<Id, PathComb>,
}

impl FunctorData {
    pub fn new(
        source: Quiver,
        target: Quiver,
        vertex_map: BTreeMap<Id, Id>,
        arrow_map: BTreeMap<Id, PathComb>,
    ) -> Result<Self> {
        for v in source.vertices() {
            let w = vertex_map
                .get(v)
                .ok_or_else(|| Error::UnknownVertex(format!("no image for vertex {v}")))?;
            target.check_vertex(w)?;
        }
        for a in source.arrows() {
            let img = arrow_map
                .get(&a.id)
                .ok_or_else(|| Error::UnknownArrow(format!("no image for arrow {}", a.id)))?;
            let (vs, vt) = (&vertex_map[&a.from], &vertex_map[&a.to]);
            if img.source() != vs || img.target() != vt {
                return Err(Error::EndpointMismatch(format!(
                    "image {img} of arrow {} must run {vs}->{vt}",
                    a.id
                )));
            }
            AddMap::single(img.clone()).validate(&target)?;
        }
        Ok(FunctorData {
            source,
            target,
            vertex_map,
            arrow_map,
        })
    }

    pub fn identity(q: &Quiver) -> Self {
        FunctorData {
            source: q.clone(),
            target: q.clone(),
            vertex_map: q
                .vertices()
                .iter()
                .map(|v| (v.clone(), v.clone()))
                .collect(),
            arrow_map: q
                .arrows()
                .iter()
                .map(|a| (a.id.clone(), PathComb::path(Path::arrow(a))))
                .collect(),
        }
    }

    /// The domain quiver `Q'`.
    pub fn source(&self) -> &Quiver {
        &self.source
    }

    /// The codomain quiver `Q`.
    pub fn target(&self) -> &Quiver {
        &self.target
    }

    pub fn vertex_image(&self, v: &str) -> Result<&Id> {
        self.vertex_map
            .get(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn arrow_image(&self, a: &str) -> Result<&PathComb> {
        self.arrow_map
            .get(a)
            .ok_or_else(|| Error::UnknownArrow(a.to_string()))
    }

    /// `alpha o s`: a dimension vector on `Q` pulled back to `Q'`.
    pub fn apply_dim(&self, alpha: &DimVector) -> Result<DimVector> {
        self.target.check_dims(alpha)?;
        Ok(DimVector(
            self.source
                .vertices()
                .iter()
                .map(|v| (v.clone(), alpha.get(&self.vertex_map[v])))
                .collect(),
        ))
    }

    pub fn map_path(&self, p: &Path) -> Result<PathComb> {
        let start = self.vertex_image(p.source())?.clone();
        let mut acc = PathComb::identity(start);
        for a in p.arrows() {
            acc = acc.compose(self.arrow_image(a)?)?;
        }
        Ok(acc)
    }

    pub fn map_comb(&self, c: &PathComb) -> Result<PathComb> {
        let vs = self.vertex_image(c.source())?.clone();
        let vt = self.vertex_image(c.target())?.clone();
        c.map_paths(vs, vt, |p| self.map_path(p))
    }

    /// Pushes a map over `Q'` into `Q`, keeping its slot order.
    pub fn apply_map(&self, phi: &AddMap) -> Result<AddMap> {
        phi.validate(&self.source)?;
        let src = phi
            .source_slots()
            .iter()
            .map(|v| self.vertex_image(v).cloned())
            .collect::<Result<Vec<_>>>()?;
        let tgt = phi
            .target_slots()
            .iter()
            .map(|v| self.vertex_image(v).cloned())
            .collect::<Result<Vec<_>>>()?;
        let entries = phi
            .entries()
            .iter()
            .map(|row| row.iter().map(|e| self.map_comb(e)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        AddMap::new(src, tgt, entries)
    }

    /// `self o inner`, where `inner: add(Q'') -> add(Q')`.
    pub fn compose(&self, inner: &FunctorData) -> Result<FunctorData> {
        if inner.target != self.source {
            return Err(Error::QuiverMismatch(
                "inner functor does not land in the domain of the outer one".into(),
            ));
        }
        let vertex_map = inner
            .vertex_map
            .iter()
            .map(|(v, w)| Ok((v.clone(), self.vertex_image(w)?.clone())))
            .collect::<Result<_>>()?;
        let arrow_map = inner
            .arrow_map
            .iter()
            .map(|(a, c)| Ok((a.clone(), self.map_comb(c)?)))
            .collect::<Result<_>>()?;
        FunctorData::new(
            inner.source.clone(),
            self.target.clone(),
            vertex_map,
            arrow_map,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::id;

    /// The bipartite split of K2 used to reduce Gamma data: each of `a`, `b`
    /// gets its own source and target vertex.
    fn split_k2() -> FunctorData {
        let k2 = Quiver::kronecker();
        let q = Quiver::from_strs(
            &["ia", "ib", "ja", "jb"],
            &[("a", "ia", "ja"), ("b", "ib", "jb")],
        )
        .unwrap();
        let vm = [("ia", "1"), ("ib", "1"), ("ja", "2"), ("jb", "2")]
            .iter()
            .map(|(x, y)| (id(x), id(y)))
            .collect();
        let am = ["a", "b"]
            .iter()
            .map(|x| (id(x), PathComb::path(Path::from_arrows(&k2, &[x]).unwrap())))
            .collect();
        FunctorData::new(q, k2, vm, am).unwrap()
    }

    #[test]
    fn identity_functor_fixes_dimensions() {
        let k2 = Quiver::kronecker();
        let alpha = DimVector::from_values(&k2, &[3, 1]).unwrap();
        assert_eq!(FunctorData::identity(&k2).apply_dim(&alpha).unwrap(), alpha);
    }

    #[test]
    fn split_functor_pulls_back_dimensions() {
        let s = split_k2();
        let alpha = DimVector::from_values(s.target(), &[2, 2]).unwrap();
        let pulled = s.apply_dim(&alpha).unwrap();
        assert_eq!(pulled.values(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn endpoint_mismatch_rejected() {
        let k2 = Quiver::kronecker();
        let vm = [("1", "2"), ("2", "2")]
            .iter()
            .map(|(x, y)| (id(x), id(y)))
            .collect();
        let am = ["a", "b"]
            .iter()
            .map(|x| (id(x), PathComb::path(Path::from_arrows(&k2, &[x]).unwrap())))
            .collect();
        let err = FunctorData::new(k2.clone(), k2, vm, am).unwrap_err();
        assert!(matches!(err, Error::EndpointMismatch(_)));
    }
}
