//! Quivers, dimension vectors, paths, maps in the additive path category and
//! functors between such categories.

mod addmap;
mod functor;
mod path;

pub use addmap::AddMap;
pub use functor::FunctorData;
pub use path::{Path, PathComb};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex and arrow identifiers. Ordering is lexicographic.
pub type Id = Arc<str>;

pub fn id(s: &str) -> Id {
    Arc::from(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub id: Id,
    pub from: Id,
    pub to: Id,
}

/// A finite quiver. Vertices and arrows are kept sorted by identifier; that
/// order is the canonical order for slots, coordinates and enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<Id>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Validates and canonicalizes a raw description.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let mut vs: Vec<Id> = vertices.into_iter().map(|v| id(v.as_ref())).collect();
        vs.sort();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateId(w[0].to_string()));
        }
        let vset: BTreeSet<&str> = vs.iter().map(|v| v.as_ref()).collect();
        let mut list: Vec<Arrow> = Vec::new();
        for (a, from, to) in arrows {
            for end in [&from, &to] {
                if !vset.contains(end.as_str()) {
                    return Err(Error::DanglingEndpoint {
                        arrow: a.clone(),
                        vertex: end.clone(),
                    });
                }
            }
            list.push(Arrow {
                id: id(&a),
                from: id(&from),
                to: id(&to),
            });
        }
        list.sort_by(|x, y| x.id.cmp(&y.id));
        if let Some(w) = list.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::DuplicateId(w[0].id.to_string()));
        }
        Ok(Quiver {
            vertices: vs,
            arrows: list,
        })
    }

    /// Shorthand for tests and examples: arrows given as `(id, from, to)`.
    pub fn from_strs(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Quiver::new(
            vertices.iter().copied(),
            arrows
                .iter()
                .map(|(a, f, t)| (a.to_string(), f.to_string(), t.to_string())),
        )
    }

    /// Kronecker quiver: vertices 1, 2 and arrows a, b: 1 -> 2.
    pub fn kronecker() -> Self {
        Self::from_strs(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap()
    }

    /// One vertex `1` with a loop `l`.
    pub fn one_loop() -> Self {
        Self::from_strs(&["1"], &[("l", "1", "1")]).unwrap()
    }

    /// Linear quiver 1 -a-> 2 -b-> 3.
    pub fn a3() -> Self {
        Self::from_strs(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap()
    }

    pub fn vertices(&self) -> &[Id] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: &str) -> Result<&Arrow> {
        self.arrows
            .binary_search_by(|x| x.id.as_ref().cmp(a))
            .map(|i| &self.arrows[i])
            .map_err(|_| Error::UnknownArrow(a.to_string()))
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertex_index(v).is_some()
    }

    pub fn vertex_index(&self, v: &str) -> Option<usize> {
        self.vertices.binary_search_by(|x| x.as_ref().cmp(v)).ok()
    }

    pub fn check_vertex(&self, v: &str) -> Result<Id> {
        self.vertex_index(v)
            .map(|i| self.vertices[i].clone())
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn arrows_from<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.iter().filter(move |a| a.from.as_ref() == v)
    }

    pub fn arrows_into<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.iter().filter(move |a| a.to.as_ref() == v)
    }

    /// Adjacency matrix: entry (i, j) counts arrows from vertex i to vertex j.
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            let i = self.vertex_index(&a.from).unwrap();
            let j = self.vertex_index(&a.to).unwrap();
            m[i][j] += 1;
        }
        m
    }

    /// A vertex on some oriented cycle, if any (Kahn's algorithm).
    pub fn find_cycle_vertex(&self) -> Option<Id> {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut indeg: Vec<u64> = (0..n).map(|j| (0..n).map(|i| adj[i][j]).sum()).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&j| indeg[j] == 0).collect();
        let mut removed = vec![false; n];
        while let Some(i) = stack.pop() {
            removed[i] = true;
            for j in 0..n {
                if adj[i][j] > 0 {
                    indeg[j] -= adj[i][j];
                    if indeg[j] == 0 {
                        stack.push(j);
                    }
                }
            }
        }
        (0..n)
            .find(|&i| !removed[i])
            .map(|i| self.vertices[i].clone())
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle_vertex().is_none()
    }

    /// The full subquiver on the same vertices keeping only `keep` arrows.
    pub fn restrict_arrows(&self, keep: impl Fn(&Arrow) -> bool) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self.arrows.iter().filter(|a| keep(a)).cloned().collect(),
        }
    }

    /// All paths from `v` to `w` of length at most `max_len`, ordered by
    /// length and then lexicographically by arrow sequence.
    pub fn enumerate_paths(&self, v: &str, w: &str, max_len: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let Some(v) = self.vertex_index(v).map(|i| self.vertices[i].clone()) else {
            return out;
        };
        let mut frontier = vec![Path::trivial(v)];
        for len in 0..=max_len {
            for p in &frontier {
                if p.target().as_ref() == w {
                    out.push(p.clone());
                }
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for p in &frontier {
                for a in self.arrows_from(p.target()) {
                    next.push(p.extend(a));
                }
            }
            next.sort();
            frontier = next;
        }
        out
    }

    /// Oriented cycles of length `1..=max_len`, one per rotation class, each
    /// represented by its lexicographically least rotation.
    pub fn enumerate_cycles(&self, max_len: usize) -> Vec<Path> {
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            for p in self.enumerate_paths(v, v, max_len) {
                if p.is_trivial() {
                    continue;
                }
                seen.insert(p.canonical_rotation(self));
            }
        }
        let mut out: Vec<Path> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Euler form: sum_v a(v) b(v) - sum_arrows a(i(x)) b(t(x)).
    pub fn euler_form(&self, alpha: &DimVector, beta: &DimVector) -> i64 {
        let vertex_part: i64 = self
            .vertices
            .iter()
            .map(|v| (alpha.get(v) * beta.get(v)) as i64)
            .sum();
        let arrow_part: i64 = self
            .arrows
            .iter()
            .map(|a| (alpha.get(&a.from) * beta.get(&a.to)) as i64)
            .sum();
        vertex_part - arrow_part
    }

    pub fn check_dims(&self, d: &DimVector) -> Result<()> {
        if d.0.len() != self.vertices.len() || d.0.keys().any(|v| !self.has_vertex(v)) {
            return Err(Error::DimMismatch(format!(
                "dimension vector {d} is not defined on exactly the vertices of the quiver"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<&str> = self.vertices.iter().map(|v| v.as_ref()).collect();
        let arrs: Vec<String> = self
            .arrows
            .iter()
            .map(|a| format!("{}:{}->{}", a.id, a.from, a.to))
            .collect();
        write!(f, "V={{{}}} A={{{}}}", vs.join(","), arrs.join(","))
    }
}

/// A map from vertices to natural numbers. Also used for the multiplicities
/// of objects in the path category.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(pub BTreeMap<Id, usize>);

impl DimVector {
    pub fn zero(q: &Quiver) -> Self {
        DimVector(q.vertices().iter().map(|v| (v.clone(), 0)).collect())
    }

    /// Builds a dimension vector on `q` from `(vertex, n)` pairs; missing
    /// vertices get 0.
    pub fn new(q: &Quiver, entries: &[(&str, usize)]) -> Result<Self> {
        let mut d = Self::zero(q);
        for (v, n) in entries {
            let v = q.check_vertex(v)?;
            d.0.insert(v, *n);
        }
        Ok(d)
    }

    /// Values listed in the quiver's vertex order.
    pub fn from_values(q: &Quiver, values: &[usize]) -> Result<Self> {
        if values.len() != q.vertices().len() {
            return Err(Error::DimMismatch(format!(
                "{} values for {} vertices",
                values.len(),
                q.vertices().len()
            )));
        }
        Ok(DimVector(
            q.vertices()
                .iter()
                .cloned()
                .zip(values.iter().copied())
                .collect(),
        ))
    }

    pub fn get(&self, v: &str) -> usize {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn set(&mut self, v: Id, n: usize) {
        self.0.insert(v, n);
    }

    pub fn values(&self) -> Vec<usize> {
        self.0.values().copied().collect()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.values().all(|&n| n == 0)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        let mut out = self.clone();
        for (v, n) in &other.0 {
            *out.0.entry(v.clone()).or_insert(0) += n;
        }
        out
    }

    /// sum_v self(v) * weights(v)
    pub fn dot(&self, weights: &DimVector) -> usize {
        self.0.iter().map(|(v, n)| n * weights.get(v)).sum()
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(v, n)| format!("{v}:{n}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_validate() {
        let k2 = Quiver::kronecker();
        assert_eq!(k2.vertices().len(), 2);
        assert_eq!(k2.arrows().len(), 2);
        let l1 = Quiver::one_loop();
        assert_eq!(l1.arrows()[0].from, l1.arrows()[0].to);
    }

    #[test]
    fn dangling_and_duplicate_ids_rejected() {
        let err = Quiver::from_strs(&["1", "2"], &[("a", "1", "3")]).unwrap_err();
        assert!(matches!(err, Error::DanglingEndpoint { .. }));
        let err = Quiver::from_strs(&["1", "1"], &[]).unwrap_err();
        assert_eq!(err, Error::DuplicateId("1".into()));
        let err = Quiver::from_strs(&["1"], &[("a", "1", "1"), ("a", "1", "1")]).unwrap_err();
        assert_eq!(err, Error::DuplicateId("a".into()));
    }

    #[test]
    fn path_enumeration_examples() {
        let k2 = Quiver::kronecker();
        let ps = k2.enumerate_paths("1", "2", 1);
        let names: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["a", "b"]);

        let l1 = Quiver::one_loop();
        let names: Vec<String> = l1
            .enumerate_paths("1", "1", 3)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(names, ["e_1", "l", "l.l", "l.l.l"]);

        let a3 = Quiver::a3();
        let names: Vec<String> = a3
            .enumerate_paths("1", "3", 2)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(names, ["a.b"]);
    }

    #[test]
    fn cycle_enumeration_examples() {
        assert!(Quiver::kronecker().enumerate_cycles(3).is_empty());
        let names: Vec<String> = Quiver::one_loop()
            .enumerate_cycles(2)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(names, ["l", "l.l"]);
        let two = Quiver::from_strs(&["1"], &[("l", "1", "1"), ("m", "1", "1")]).unwrap();
        let names: Vec<String> = two
            .enumerate_cycles(2)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(names, ["l", "m", "l.l", "l.m", "m.m"]);
    }

    #[test]
    fn euler_form_examples() {
        let k2 = Quiver::kronecker();
        let one = DimVector::from_values(&k2, &[1, 1]).unwrap();
        assert_eq!(k2.euler_form(&one, &one), 0);
        let l1 = Quiver::one_loop();
        let n = DimVector::from_values(&l1, &[5]).unwrap();
        assert_eq!(l1.euler_form(&n, &n), 0);
        let a3 = Quiver::a3();
        let x = DimVector::from_values(&a3, &[1, 1, 0]).unwrap();
        let y = DimVector::from_values(&a3, &[0, 1, 1]).unwrap();
        assert_eq!(a3.euler_form(&x, &y), -1);
    }

    #[test]
    fn acyclicity() {
        assert!(Quiver::kronecker().is_acyclic());
        assert!(Quiver::a3().is_acyclic());
        assert!(!Quiver::one_loop().is_acyclic());
    }
}
