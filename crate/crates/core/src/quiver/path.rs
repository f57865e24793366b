use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Arrow, Id, Quiver};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A path `a_1 ... a_n` with `t(a_k) = i(a_{k+1})`, composed left to right.
/// The empty sequence is the trivial path `e_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: Id,
    target: Id,
    arrows: Vec<Id>,
}

impl Path {
    pub fn trivial(v: Id) -> Self {
        Path {
            source: v.clone(),
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(a: &Arrow) -> Self {
        Path {
            source: a.from.clone(),
            target: a.to.clone(),
            arrows: vec![a.id.clone()],
        }
    }

    /// Builds a path from arrow identifiers, checking composability.
    pub fn from_arrows(q: &Quiver, arrows: &[&str]) -> Result<Self> {
        let (first, rest) = arrows
            .split_first()
            .ok_or_else(|| Error::Invalid("empty arrow list; use Path::trivial".into()))?;
        let mut p = Path::arrow(q.arrow(first)?);
        for a in rest {
            p = p.compose(&Path::arrow(q.arrow(a)?))?;
        }
        Ok(p)
    }

    pub fn source(&self) -> &Id {
        &self.source
    }

    pub fn target(&self) -> &Id {
        &self.target
    }

    pub fn arrows(&self) -> &[Id] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        self.source == self.target
    }

    pub fn extend(&self, a: &Arrow) -> Path {
        debug_assert_eq!(self.target, a.from);
        let mut arrows = self.arrows.clone();
        arrows.push(a.id.clone());
        Path {
            source: self.source.clone(),
            target: a.to.clone(),
            arrows,
        }
    }

    /// `self` followed by `other`; trivial paths act as identities.
    pub fn compose(&self, other: &Path) -> Result<Path> {
        if self.target != other.source {
            return Err(Error::EndpointMismatch(format!(
                "cannot compose {self} (ending at {}) with {other} (starting at {})",
                self.target, other.source
            )));
        }
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().cloned());
        Ok(Path {
            source: self.source.clone(),
            target: other.target.clone(),
            arrows,
        })
    }

    /// The lexicographically least rotation of an oriented cycle.
    pub fn canonical_rotation(&self, q: &Quiver) -> Path {
        assert!(self.is_cycle() && !self.is_trivial());
        let n = self.arrows.len();
        let best = (0..n)
            .min_by(|&i, &j| {
                let ri = self.arrows[i..].iter().chain(&self.arrows[..i]);
                let rj = self.arrows[j..].iter().chain(&self.arrows[..j]);
                ri.cmp(rj)
            })
            .unwrap();
        self.rotate(q, best)
    }

    /// Rotation starting at the `k`-th arrow.
    pub fn rotate(&self, q: &Quiver, k: usize) -> Path {
        assert!(self.is_cycle());
        if self.is_trivial() {
            return self.clone();
        }
        let arrows: Vec<Id> = self.arrows[k..]
            .iter()
            .chain(&self.arrows[..k])
            .cloned()
            .collect();
        let v = q.arrow(&arrows[0]).map(|a| a.from.clone()).unwrap();
        Path {
            source: v.clone(),
            target: v,
            arrows,
        }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            write!(f, "e_{}", self.source)
        } else {
            let names: Vec<&str> = self.arrows.iter().map(|a| a.as_ref()).collect();
            write!(f, "{}", names.join("."))
        }
    }
}

/// A rational linear combination of paths sharing one source and one target:
/// an element of `Hom(O(v), O(w))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathComb {
    source: Id,
    target: Id,
    terms: BTreeMap<Path, Rational>,
}

impl PathComb {
    pub fn zero(source: Id, target: Id) -> Self {
        PathComb {
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    pub fn path(p: Path) -> Self {
        Self::term(p, Rational::one())
    }

    pub fn term(p: Path, c: Rational) -> Self {
        let mut out = Self::zero(p.source.clone(), p.target.clone());
        if !c.is_zero() {
            out.terms.insert(p, c);
        }
        out
    }

    /// `c * e_v`.
    pub fn scalar(v: Id, c: Rational) -> Self {
        Self::term(Path::trivial(v), c)
    }

    pub fn identity(v: Id) -> Self {
        Self::scalar(v, Rational::one())
    }

    /// Builds a combination, checking that every path has the given endpoints.
    pub fn from_terms(
        source: Id,
        target: Id,
        terms: impl IntoIterator<Item = (Path, Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(source, target);
        for (p, c) in terms {
            if p.source != out.source || p.target != out.target {
                return Err(Error::EndpointMismatch(format!(
                    "term {p} does not run from {} to {}",
                    out.source, out.target
                )));
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    pub fn source(&self) -> &Id {
        &self.source
    }

    pub fn target(&self) -> &Id {
        &self.target
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Path::len).max().unwrap_or(0)
    }

    /// Coefficient of the trivial path (zero unless source = target).
    pub fn trivial_coefficient(&self) -> Rational {
        self.terms
            .iter()
            .find(|(p, _)| p.is_trivial())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// `Some(c)` when the combination is exactly `c * e_v` with `c != 0`.
    pub fn as_nonzero_scalar(&self) -> Option<Rational> {
        match self.terms.iter().next() {
            Some((p, c)) if self.terms.len() == 1 && p.is_trivial() => Some(c.clone()),
            _ => None,
        }
    }

    fn add_term(&mut self, p: Path, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &PathComb) -> Result<PathComb> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::EndpointMismatch(format!(
                "cannot add combinations {}->{} and {}->{}",
                self.source, self.target, other.source, other.target
            )));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> PathComb {
        let mut out = Self::zero(self.source.clone(), self.target.clone());
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect();
        out
    }

    /// `self` followed by `other`, extended bilinearly.
    pub fn compose(&self, other: &PathComb) -> Result<PathComb> {
        if self.target != other.source {
            return Err(Error::EndpointMismatch(format!(
                "cannot compose combination ending at {} with one starting at {}",
                self.target, other.source
            )));
        }
        let mut out = Self::zero(self.source.clone(), other.target.clone());
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                out.add_term(p.compose(q)?, c * d);
            }
        }
        Ok(out)
    }

    pub(crate) fn map_paths(
        &self,
        source: Id,
        target: Id,
        f: impl Fn(&Path) -> Result<PathComb>,
    ) -> Result<PathComb> {
        let mut out = Self::zero(source, target);
        for (p, c) in &self.terms {
            let image = f(p)?;
            out = out.add(&image.scale(c))?;
        }
        Ok(out)
    }
}

impl fmt::Display for PathComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if abs.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{}*{p}", rational::render(&abs))?;
            }
        }
        Ok(())
    }
}
