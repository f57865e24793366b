use std::fmt;

use super::{DimVector, Id, PathComb, Quiver};
use crate::error::{Error, Result};

/// A map `(+)_v O(v)^{a(v)} -> (+)_v O(v)^{b(v)}` in the additive path
/// category, stored as a matrix of path combinations indexed by
/// `(source slot, target slot)`.
///
/// Each slot carries its vertex. Maps built from multiplicities list slots
/// grouped by vertex in quiver order; block sums and functor images keep the
/// slot order of their inputs, since reordering slots changes determinants
/// by a sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AddMap {
    source_slots: Vec<Id>,
    target_slots: Vec<Id>,
    entries: Vec<Vec<PathComb>>,
}

impl AddMap {
    /// Builds a map with explicit slot vertices, validating every entry.
    pub fn new(
        source_slots: Vec<Id>,
        target_slots: Vec<Id>,
        entries: Vec<Vec<PathComb>>,
    ) -> Result<Self> {
        if entries.len() != source_slots.len()
            || entries.iter().any(|r| r.len() != target_slots.len())
        {
            return Err(Error::ShapeMismatch(format!(
                "expected {}x{} entries",
                source_slots.len(),
                target_slots.len()
            )));
        }
        for (s, row) in entries.iter().enumerate() {
            for (t, e) in row.iter().enumerate() {
                if e.source() != &source_slots[s] || e.target() != &target_slots[t] {
                    return Err(Error::EndpointMismatch(format!(
                        "entry ({s},{t}) = {e} runs {}->{}, slots are at {}->{}",
                        e.source(),
                        e.target(),
                        source_slots[s],
                        target_slots[t]
                    )));
                }
            }
        }
        Ok(AddMap {
            source_slots,
            target_slots,
            entries,
        })
    }

    /// Canonical slot layout from multiplicities: vertices in quiver order,
    /// copies consecutively.
    pub fn slots_for(q: &Quiver, mult: &DimVector) -> Vec<Id> {
        q.vertices()
            .iter()
            .flat_map(|v| std::iter::repeat(v.clone()).take(mult.get(v)))
            .collect()
    }

    pub fn from_multiplicities(
        q: &Quiver,
        source: &DimVector,
        target: &DimVector,
        entries: Vec<Vec<PathComb>>,
    ) -> Result<Self> {
        q.check_dims(source)?;
        q.check_dims(target)?;
        Self::new(
            Self::slots_for(q, source),
            Self::slots_for(q, target),
            entries,
        )
    }

    /// The zero map between the given slot lists.
    pub fn zero(source_slots: Vec<Id>, target_slots: Vec<Id>) -> Self {
        let entries = source_slots
            .iter()
            .map(|s| {
                target_slots
                    .iter()
                    .map(|t| PathComb::zero(s.clone(), t.clone()))
                    .collect()
            })
            .collect();
        AddMap {
            source_slots,
            target_slots,
            entries,
        }
    }

    /// A 1x1 map `O(v) -> O(w)`.
    pub fn single(entry: PathComb) -> Self {
        AddMap {
            source_slots: vec![entry.source().clone()],
            target_slots: vec![entry.target().clone()],
            entries: vec![vec![entry]],
        }
    }

    pub fn source_slots(&self) -> &[Id] {
        &self.source_slots
    }

    pub fn target_slots(&self) -> &[Id] {
        &self.target_slots
    }

    pub fn entry(&self, s: usize, t: usize) -> &PathComb {
        &self.entries[s][t]
    }

    pub fn entries(&self) -> &[Vec<PathComb>] {
        &self.entries
    }

    pub fn num_sources(&self) -> usize {
        self.source_slots.len()
    }

    pub fn num_targets(&self) -> usize {
        self.target_slots.len()
    }

    pub fn source_mult(&self, q: &Quiver) -> DimVector {
        mult_of(q, &self.source_slots)
    }

    pub fn target_mult(&self, q: &Quiver) -> DimVector {
        mult_of(q, &self.target_slots)
    }

    /// Whether slots are grouped by vertex in quiver order.
    pub fn is_canonical(&self, q: &Quiver) -> bool {
        let sorted = |slots: &[Id]| {
            slots
                .windows(2)
                .all(|w| q.vertex_index(&w[0]) <= q.vertex_index(&w[1]))
        };
        sorted(&self.source_slots) && sorted(&self.target_slots)
    }

    /// Checks that every slot vertex and every path lives in `q`.
    pub fn validate(&self, q: &Quiver) -> Result<()> {
        for v in self.source_slots.iter().chain(&self.target_slots) {
            q.check_vertex(v)?;
        }
        for row in &self.entries {
            for e in row {
                for (p, _) in e.terms() {
                    let mut at = p.source().clone();
                    for a in p.arrows() {
                        let arrow = q.arrow(a)?;
                        if arrow.from != at {
                            return Err(Error::EndpointMismatch(format!(
                                "path {p} is not composable in the quiver"
                            )));
                        }
                        at = arrow.to.clone();
                    }
                    if &at != p.target() {
                        return Err(Error::EndpointMismatch(format!(
                            "path {p} does not end at {}",
                            p.target()
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Rows of `R_p(phi)` minus its columns: sum_s alpha(s) - sum_t alpha(t).
    pub fn size_defect(&self, alpha: &DimVector) -> i64 {
        let rows: usize = self.source_slots.iter().map(|v| alpha.get(v)).sum();
        let cols: usize = self.target_slots.iter().map(|v| alpha.get(v)).sum();
        rows as i64 - cols as i64
    }

    pub fn is_square_for(&self, alpha: &DimVector) -> bool {
        self.size_defect(alpha) == 0
    }

    /// Block-diagonal sum: `self`'s slots first, then `other`'s.
    pub fn block_diag(&self, other: &AddMap) -> AddMap {
        let source_slots: Vec<Id> = self
            .source_slots
            .iter()
            .chain(&other.source_slots)
            .cloned()
            .collect();
        let target_slots: Vec<Id> = self
            .target_slots
            .iter()
            .chain(&other.target_slots)
            .cloned()
            .collect();
        let mut out = AddMap::zero(source_slots, target_slots);
        let (ns, nt) = (self.num_sources(), self.num_targets());
        for (s, row) in self.entries.iter().enumerate() {
            for (t, e) in row.iter().enumerate() {
                out.entries[s][t] = e.clone();
            }
        }
        for (s, row) in other.entries.iter().enumerate() {
            for (t, e) in row.iter().enumerate() {
                out.entries[ns + s][nt + t] = e.clone();
            }
        }
        out
    }

    /// Composition `self` then `other` (matrix product, left to right).
    pub fn compose(&self, other: &AddMap) -> Result<AddMap> {
        if self.target_slots != other.source_slots {
            return Err(Error::EndpointMismatch(
                "target slots of the first map differ from source slots of the second".into(),
            ));
        }
        let mut out = AddMap::zero(self.source_slots.clone(), other.target_slots.clone());
        for s in 0..self.num_sources() {
            for u in 0..other.num_targets() {
                let mut acc = out.entries[s][u].clone();
                for t in 0..self.num_targets() {
                    let (x, y) = (&self.entries[s][t], &other.entries[t][u]);
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    acc = acc.add(&x.compose(y)?)?;
                }
                out.entries[s][u] = acc;
            }
        }
        Ok(out)
    }

    pub fn set_entry(&mut self, s: usize, t: usize, e: PathComb) -> Result<()> {
        if e.source() != &self.source_slots[s] || e.target() != &self.target_slots[t] {
            return Err(Error::EndpointMismatch(format!(
                "entry {e} does not fit slot ({s},{t})"
            )));
        }
        self.entries[s][t] = e;
        Ok(())
    }

    /// Drops the given source and target slots.
    pub fn remove_slots(&self, sources: &[usize], targets: &[usize]) -> AddMap {
        let keep_s: Vec<usize> = (0..self.num_sources())
            .filter(|s| !sources.contains(s))
            .collect();
        let keep_t: Vec<usize> = (0..self.num_targets())
            .filter(|t| !targets.contains(t))
            .collect();
        AddMap {
            source_slots: keep_s
                .iter()
                .map(|&s| self.source_slots[s].clone())
                .collect(),
            target_slots: keep_t
                .iter()
                .map(|&t| self.target_slots[t].clone())
                .collect(),
            entries: keep_s
                .iter()
                .map(|&s| keep_t.iter().map(|&t| self.entries[s][t].clone()).collect())
                .collect(),
        }
    }

    /// Longest path occurring in any entry.
    pub fn max_path_len(&self) -> usize {
        self.entries
            .iter()
            .flatten()
            .map(PathComb::max_len)
            .max()
            .unwrap_or(0)
    }
}

fn mult_of(q: &Quiver, slots: &[Id]) -> DimVector {
    let mut d = DimVector::zero(q);
    for v in slots {
        let n = d.get(v);
        d.set(v.clone(), n + 1);
    }
    d
}

impl fmt::Display for AddMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let src: Vec<&str> = self.source_slots.iter().map(|v| v.as_ref()).collect();
        let tgt: Vec<&str> = self.target_slots.iter().map(|v| v.as_ref()).collect();
        write!(f, "[{}] -> [{}] ", src.join(","), tgt.join(","))?;
        write!(f, "(")?;
        for (s, row) in self.entries.iter().enumerate() {
            if s > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{id, Path};

    #[test]
    fn canonical_slots_and_square_check() {
        let k2 = Quiver::kronecker();
        let a = PathComb::path(Path::from_arrows(&k2, &["a"]).unwrap());
        let b = PathComb::path(Path::from_arrows(&k2, &["b"]).unwrap());
        let src = DimVector::new(&k2, &[("1", 1)]).unwrap();
        let tgt = DimVector::new(&k2, &[("2", 2)]).unwrap();
        let phi = AddMap::from_multiplicities(&k2, &src, &tgt, vec![vec![a, b]]).unwrap();
        assert!(phi.is_canonical(&k2));
        assert!(phi.is_square_for(&DimVector::from_values(&k2, &[2, 1]).unwrap()));
        assert!(!phi.is_square_for(&DimVector::from_values(&k2, &[1, 1]).unwrap()));
        phi.validate(&k2).unwrap();
    }

    #[test]
    fn entries_must_match_slots() {
        let k2 = Quiver::kronecker();
        let a = PathComb::path(Path::from_arrows(&k2, &["a"]).unwrap());
        let err = AddMap::new(vec![id("2")], vec![id("2")], vec![vec![a]]).unwrap_err();
        assert!(matches!(err, Error::EndpointMismatch(_)));
    }

    #[test]
    fn block_diag_with_empty_map_is_identity() {
        let k2 = Quiver::kronecker();
        let a = AddMap::single(PathComb::path(Path::from_arrows(&k2, &["a"]).unwrap()));
        let empty = AddMap::zero(vec![], vec![]);
        assert_eq!(a.block_diag(&empty), a);
    }
}
