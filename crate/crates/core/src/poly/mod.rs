//! Exact multivariate polynomials over the rationals in the coordinate
//! functions `x[a,r,c]` of a representation space.
//!
//! A [`Poly`] stores only its terms; the ambient quiver and dimension vector
//! are carried by [`Ambient`], which validates coordinates and builds the
//! symbolic arrow matrices.

mod matrix;
mod point;
mod text;

pub use matrix::{DetCheck, PolyMatrix};
pub(crate) use point::offsets;
pub use point::RepPoint;
pub use text::parse_poly;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Id, Quiver};
use crate::rational::{self, Rational};

/// The coordinate `x[arrow, row, col]` (zero-based indices; rendered
/// one-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord {
    pub arrow: Id,
    pub row: u32,
    pub col: u32,
}

impl Coord {
    pub fn new(arrow: Id, row: usize, col: usize) -> Self {
        Coord {
            arrow,
            row: row as u32,
            col: col as u32,
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{},{}]", self.arrow, self.row + 1, self.col + 1)
    }
}

/// A monomial: coordinates with positive exponents, sorted by coordinate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Coord, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(c: Coord) -> Self {
        Monomial(vec![(c, 1)])
    }

    pub fn from_powers(mut powers: Vec<(Coord, u32)>) -> Self {
        powers.retain(|(_, e)| *e > 0);
        powers.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Coord, u32)> = Vec::with_capacity(powers.len());
        for (c, e) in powers {
            match out.last_mut() {
                Some((d, f)) if *d == c => *f += e,
                _ => out.push((c, e)),
            }
        }
        Monomial(out)
    }

    pub fn powers(&self) -> &[(Coord, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, c: &Coord) -> u32 {
        self.0
            .binary_search_by(|(d, _)| d.cmp(c))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Divides by one power of `c`; `None` when `c` does not occur.
    pub fn div_var(&self, c: &Coord) -> Option<Monomial> {
        let i = self.0.binary_search_by(|(d, _)| d.cmp(c)).ok()?;
        let mut out = self.0.clone();
        if out[i].1 == 1 {
            out.remove(i);
        } else {
            out[i].1 -= 1;
        }
        Some(Monomial(out))
    }

    /// Total degree in each arrow block.
    pub fn a_degree(&self) -> ADegree {
        let mut d = BTreeMap::new();
        for (c, e) in &self.0 {
            *d.entry(c.arrow.clone()).or_insert(0) += *e as usize;
        }
        ADegree(d)
    }
}

/// Graded lexicographic order: total degree first, then the monomial with
/// the larger exponent at the first differing coordinate is larger.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            for i in 0.. {
                match (a.get(i), b.get(i)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((ca, ea)), Some((cb, eb))) => match ca.cmp(cb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal if ea != eb => return ea.cmp(eb),
                        Ordering::Equal => {}
                    },
                }
            }
            unreachable!()
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multidegree with respect to the arrows (the A-grading). Arrows that are
/// absent have degree zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ADegree(pub BTreeMap<Id, usize>);

impl ADegree {
    pub fn new(entries: &[(&str, usize)]) -> Self {
        ADegree(
            entries
                .iter()
                .filter(|(_, m)| *m > 0)
                .map(|(a, m)| (crate::quiver::id(a), *m))
                .collect(),
        )
    }

    /// Weight one on every arrow of `q`.
    pub fn ones(q: &Quiver) -> Self {
        ADegree(q.arrows().iter().map(|a| (a.id.clone(), 1)).collect())
    }

    pub fn get(&self, a: &str) -> usize {
        self.0.get(a).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Drops zero entries so equality ignores them.
    pub fn normalized(&self) -> ADegree {
        ADegree(
            self.0
                .iter()
                .filter(|(_, m)| **m > 0)
                .map(|(a, m)| (a.clone(), *m))
                .collect(),
        )
    }

    pub fn check(&self, q: &Quiver) -> Result<()> {
        for a in self.0.keys() {
            q.arrow(a)?;
        }
        Ok(())
    }

    /// All degrees on the arrows of `q` with the given total.
    pub fn all_with_total(q: &Quiver, total: usize) -> Vec<ADegree> {
        let arrows: Vec<Id> = q.arrows().iter().map(|a| a.id.clone()).collect();
        let mut out = Vec::new();
        let mut cur = vec![0usize; arrows.len()];
        fn rec(k: usize, left: usize, cur: &mut Vec<usize>, arrows: &[Id], out: &mut Vec<ADegree>) {
            if k == arrows.len() {
                if left == 0 {
                    out.push(ADegree(
                        arrows
                            .iter()
                            .zip(cur.iter())
                            .filter(|(_, m)| **m > 0)
                            .map(|(a, m)| (a.clone(), *m))
                            .collect(),
                    ));
                }
                return;
            }
            for m in (0..=left).rev() {
                cur[k] = m;
                rec(k + 1, left - m, cur, arrows, out);
            }
            cur[k] = 0;
        }
        rec(0, total, &mut cur, &arrows, &mut out);
        out
    }
}

impl fmt::Display for ADegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(a, m)| format!("{a}:{m}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Exponents `sigma_v` of the character `g -> prod_v det(g_v)^{sigma_v}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VWeight(pub BTreeMap<Id, i64>);

impl VWeight {
    pub fn zero(q: &Quiver) -> Self {
        VWeight(q.vertices().iter().map(|v| (v.clone(), 0)).collect())
    }

    pub fn from_values(q: &Quiver, values: &[i64]) -> Self {
        VWeight(
            q.vertices()
                .iter()
                .cloned()
                .zip(values.iter().copied())
                .collect(),
        )
    }

    pub fn get(&self, v: &str) -> i64 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn values(&self) -> Vec<i64> {
        self.0.values().copied().collect()
    }

    pub fn add(&self, other: &VWeight) -> VWeight {
        let mut out = self.clone();
        for (v, n) in &other.0 {
            *out.0.entry(v.clone()).or_insert(0) += n;
        }
        out
    }
}

impl fmt::Display for VWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.values().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A polynomial with rational coefficients; zero coefficients are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(c: Coord) -> Self {
        Self::term(Monomial::var(c), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn coords(&self) -> BTreeSet<Coord> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(c, _)| c.clone()))
            .collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Poly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to `c`.
    pub fn derivative(&self, c: &Coord) -> Poly {
        let mut out = Poly::zero();
        for (m, x) in &self.terms {
            let e = m.exponent(c);
            if e == 0 {
                continue;
            }
            out.add_term(m.div_var(c).unwrap(), x * rational::int(e as i64));
        }
        out
    }

    /// The sum of the terms whose per-arrow degree is exactly `chi`.
    pub fn a_degree_component(&self, chi: &ADegree) -> Poly {
        let chi = chi.normalized();
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.a_degree() == chi)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The distinct per-arrow degrees of the terms.
    pub fn a_degrees(&self) -> BTreeSet<ADegree> {
        self.terms.keys().map(Monomial::a_degree).collect()
    }

    pub fn is_a_homogeneous_of(&self, chi: &ADegree) -> bool {
        let chi = chi.normalized();
        self.terms.keys().all(|m| m.a_degree() == chi)
    }

    /// Replaces each coordinate by a polynomial. Coordinates for which `f`
    /// returns `None` are kept.
    pub fn substitute(&self, f: impl Fn(&Coord) -> Option<Poly>) -> Poly {
        let mut cache: HashMap<(Coord, u32), Poly> = HashMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for (x, e) in &m.0 {
                let key = (x.clone(), *e);
                if !cache.contains_key(&key) {
                    let base = f(x).unwrap_or_else(|| Poly::var(x.clone()));
                    cache.insert(key.clone(), base.pow(*e));
                }
                acc = &acc * &cache[&key];
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        out
    }

    /// Evaluates with a coordinate lookup.
    pub fn eval_with(&self, value: impl Fn(&Coord) -> Result<Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        let mut cache: HashMap<Coord, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in &m.0 {
                if !cache.contains_key(x) {
                    cache.insert(x.clone(), value(x)?);
                }
                t *= rational::pow(&cache[x], *e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Whether `self = c * other` for some nonzero rational `c`.
    pub fn proportional_to(&self, other: &Poly) -> Option<Rational> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (m0, c0) = self.terms.iter().next().unwrap();
        let c = c0 / other.terms.get(m0)?;
        (*self == other.scale(&c)).then_some(c)
    }

    /// `Some(+1)` or `Some(-1)` when `self = +-other`.
    pub fn sign_relative_to(&self, other: &Poly) -> Option<i32> {
        if self == other {
            Some(1)
        } else if *self == -other {
            Some(-1)
        } else {
            None
        }
    }

    /// Coefficient vector over a list of monomials; `None` when some term
    /// falls outside the list.
    pub fn coefficients_in(&self, index: &HashMap<Monomial, usize>) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); index.len()];
        for (m, c) in &self.terms {
            v[*index.get(m)?] = c.clone();
        }
        Some(v)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                let e = acc.entry(m.mul(n)).or_insert_with(Rational::zero);
                *e += c * d;
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |a, b| &a * &b)
    }
}

/// The representation space `R(Q, alpha)`: a quiver with a dimension vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ambient {
    quiver: Quiver,
    alpha: DimVector,
}

impl Ambient {
    pub fn new(quiver: Quiver, alpha: DimVector) -> Result<Self> {
        quiver.check_dims(&alpha)?;
        Ok(Ambient { quiver, alpha })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn alpha(&self) -> &DimVector {
        &self.alpha
    }

    /// `(rows, cols)` of the block of arrow `a`.
    pub fn shape(&self, a: &str) -> Result<(usize, usize)> {
        let arrow = self.quiver.arrow(a)?;
        Ok((self.alpha.get(&arrow.from), self.alpha.get(&arrow.to)))
    }

    pub fn coord(&self, a: &str, row: usize, col: usize) -> Result<Coord> {
        let (r, c) = self.shape(a)?;
        if row >= r || col >= c {
            return Err(Error::AmbientMismatch(format!(
                "coordinate ({},{}) outside the {r}x{c} block of {a}",
                row + 1,
                col + 1
            )));
        }
        Ok(Coord::new(self.quiver.arrow(a)?.id.clone(), row, col))
    }

    pub fn var(&self, a: &str, row: usize, col: usize) -> Result<Poly> {
        self.coord(a, row, col).map(Poly::var)
    }

    /// All coordinates, in canonical order.
    pub fn coords(&self) -> Vec<Coord> {
        let mut out = Vec::new();
        for a in self.quiver.arrows() {
            let (r, c) = (self.alpha.get(&a.from), self.alpha.get(&a.to));
            for i in 0..r {
                for j in 0..c {
                    out.push(Coord::new(a.id.clone(), i, j));
                }
            }
        }
        out
    }

    /// The symbolic matrix `X_a`.
    pub fn arrow_matrix(&self, a: &str) -> Result<PolyMatrix> {
        let (r, c) = self.shape(a)?;
        let id = self.quiver.arrow(a)?.id.clone();
        let mut m = PolyMatrix::zeros(r, c);
        for i in 0..r {
            for j in 0..c {
                m.set(i, j, Poly::var(Coord::new(id.clone(), i, j)));
            }
        }
        Ok(m)
    }

    /// Checks that every coordinate of `f` belongs to this space.
    pub fn check(&self, f: &Poly) -> Result<()> {
        for c in f.coords() {
            let (r, k) = self
                .shape(&c.arrow)
                .map_err(|_| Error::AmbientMismatch(format!("{c} is not a coordinate here")))?;
            if c.row as usize >= r || c.col as usize >= k {
                return Err(Error::AmbientMismatch(format!(
                    "{c} is outside the {r}x{k} block"
                )));
            }
        }
        Ok(())
    }

    /// Ambient-checked arithmetic.
    pub fn add(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.check(f)?;
        self.check(g)?;
        Ok(f + g)
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.check(f)?;
        self.check(g)?;
        Ok(f * g)
    }

    /// Torus weight of a monomial: for each vertex, degree in arrows ending
    /// there minus degree in arrows starting there.
    pub fn torus_weight(&self, m: &Monomial) -> Result<BTreeMap<Id, i64>> {
        let mut w: BTreeMap<Id, i64> = self
            .quiver
            .vertices()
            .iter()
            .map(|v| (v.clone(), 0))
            .collect();
        for (c, e) in m.powers() {
            let a = self.quiver.arrow(&c.arrow)?;
            *w.get_mut(&a.to).unwrap() += *e as i64;
            *w.get_mut(&a.from).unwrap() -= *e as i64;
        }
        Ok(w)
    }

    /// Torus weight of an A-degree (equal to that of any monomial of the
    /// degree).
    pub fn torus_weight_of_degree(&self, chi: &ADegree) -> Result<BTreeMap<Id, i64>> {
        let mut w: BTreeMap<Id, i64> = self
            .quiver
            .vertices()
            .iter()
            .map(|v| (v.clone(), 0))
            .collect();
        for (a, m) in &chi.0 {
            let a = self.quiver.arrow(a)?;
            *w.get_mut(&a.to).unwrap() += *m as i64;
            *w.get_mut(&a.from).unwrap() -= *m as i64;
        }
        Ok(w)
    }

    /// Converts a torus weight into character exponents by dividing by the
    /// dimension at each vertex. `None` when no character has this weight.
    pub fn character_of_torus_weight(&self, w: &BTreeMap<Id, i64>) -> Option<VWeight> {
        let mut out = BTreeMap::new();
        for (v, x) in w {
            let n = self.alpha.get(v) as i64;
            let sigma = match n {
                0 if *x == 0 => 0,
                0 => return None,
                n if x % n == 0 => x / n,
                _ => return None,
            };
            out.insert(v.clone(), sigma);
        }
        Some(VWeight(out))
    }

    /// The common torus weight of the monomials of `f`.
    pub fn torus_weight_of(&self, f: &Poly) -> Result<BTreeMap<Id, i64>> {
        self.check(f)?;
        let mut weights = f.terms().map(|(m, _)| self.torus_weight(m));
        let first = weights.next().ok_or(Error::ZeroPolynomial)??;
        for w in weights {
            if w? != first {
                return Err(Error::NotHomogeneous(
                    "monomials have different torus weights".into(),
                ));
            }
        }
        Ok(first)
    }

    /// The character `sigma` with torus weight `alpha(v) * sigma_v` shared by
    /// every monomial of `f`.
    pub fn v_weight_of(&self, f: &Poly) -> Result<VWeight> {
        let w = self.torus_weight_of(f)?;
        self.character_of_torus_weight(&w).ok_or_else(|| {
            Error::NotHomogeneous(format!(
                "torus weight {:?} is not alpha times a character",
                w.values().collect::<Vec<_>>()
            ))
        })
    }

    /// Monomials of A-degree exactly `chi`, in increasing monomial order.
    pub fn monomials_of_degree(&self, chi: &ADegree) -> Result<Vec<Monomial>> {
        chi.check(&self.quiver)?;
        let mut acc = vec![Monomial::one()];
        for (a, m) in &chi.normalized().0 {
            let (r, c) = self.shape(a)?;
            let vars: Vec<Coord> = (0..r)
                .flat_map(|i| (0..c).map(move |j| (i, j)))
                .map(|(i, j)| Coord::new(a.clone(), i, j))
                .collect();
            let block = monomials_in(&vars, *m as u32);
            let mut next = Vec::with_capacity(acc.len() * block.len());
            for x in &acc {
                for y in &block {
                    next.push(x.mul(y));
                }
            }
            acc = next;
        }
        acc.sort();
        Ok(acc)
    }
}

/// All monomials of total degree `d` in `vars`.
fn monomials_in(vars: &[Coord], d: u32) -> Vec<Monomial> {
    fn rec(vars: &[Coord], d: u32, cur: &mut Vec<(Coord, u32)>, out: &mut Vec<Monomial>) {
        if d == 0 {
            out.push(Monomial::from_powers(cur.clone()));
            return;
        }
        let Some((first, rest)) = vars.split_first() else {
            return;
        };
        for e in (0..=d).rev() {
            if e > 0 {
                cur.push((first.clone(), e));
            }
            rec(rest, d - e, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, d, &mut Vec::new(), &mut out);
    out
}
