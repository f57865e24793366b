use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::invariants::{det_semiinvariant, trace_invariant};
use crate::poly::{ADegree, Ambient, Coord, Monomial, Poly};
use crate::quiver::{AddMap, FunctorData, Id, Path, PathComb, Quiver};
use crate::rational::{self, Rational};

/// A block of `alpha(v)` arrows sharing one `I` (or `J`) label at `v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub vertex: Id,
    pub arrows: Vec<Id>,
}

/// A `K` label at `v`: the unique arrow `head` with `nu(head) = k` (so
/// `t(head) = v`) and the unique arrow `tail` with `mu(tail) = k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KPair {
    pub vertex: Id,
    pub head: Id,
    pub tail: Id,
}

/// Contraction data `(mu, nu, I, J, K)` for multilinear invariants, with the
/// labels of `I`, `J`, `K` forgotten: each label is its fiber.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaData {
    pub i_blocks: Vec<Block>,
    pub j_blocks: Vec<Block>,
    pub k_pairs: Vec<KPair>,
}

/// Where an arrow's row (via `mu`) or column (via `nu`) index comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    I(usize),
    J(usize),
    K(usize),
}

impl GammaData {
    pub fn mu(&self, a: &str) -> Option<Label> {
        if let Some(i) = self
            .i_blocks
            .iter()
            .position(|b| b.arrows.iter().any(|x| x.as_ref() == a))
        {
            return Some(Label::I(i));
        }
        self.k_pairs
            .iter()
            .position(|k| k.tail.as_ref() == a)
            .map(Label::K)
    }

    pub fn nu(&self, a: &str) -> Option<Label> {
        if let Some(j) = self
            .j_blocks
            .iter()
            .position(|b| b.arrows.iter().any(|x| x.as_ref() == a))
        {
            return Some(Label::J(j));
        }
        self.k_pairs
            .iter()
            .position(|k| k.head.as_ref() == a)
            .map(Label::K)
    }

    /// Checks the fiber conditions against `(Q, alpha)`.
    pub fn validate(&self, amb: &Ambient) -> Result<()> {
        let q = amb.quiver();
        let bad = |m: String| {
            Err(Error::Invalid(format!(
                "inadmissible contraction data: {m}"
            )))
        };
        let mut tails = BTreeSet::new();
        let mut heads = BTreeSet::new();
        for b in &self.i_blocks {
            if b.arrows.len() != amb.alpha().get(&b.vertex) {
                return bad(format!("I block at {} has the wrong size", b.vertex));
            }
            for a in &b.arrows {
                if q.arrow(a)?.from != b.vertex || !tails.insert(a.clone()) {
                    return bad(format!("arrow {a} misplaced in I"));
                }
            }
        }
        for b in &self.j_blocks {
            if b.arrows.len() != amb.alpha().get(&b.vertex) {
                return bad(format!("J block at {} has the wrong size", b.vertex));
            }
            for a in &b.arrows {
                if q.arrow(a)?.to != b.vertex || !heads.insert(a.clone()) {
                    return bad(format!("arrow {a} misplaced in J"));
                }
            }
        }
        for k in &self.k_pairs {
            if q.arrow(&k.head)?.to != k.vertex || !heads.insert(k.head.clone()) {
                return bad(format!("arrow {} misplaced in K", k.head));
            }
            if q.arrow(&k.tail)?.from != k.vertex || !tails.insert(k.tail.clone()) {
                return bad(format!("arrow {} misplaced in K", k.tail));
            }
        }
        if tails.len() != q.arrows().len() || heads.len() != q.arrows().len() {
            return bad("mu or nu is not defined on every arrow".into());
        }
        Ok(())
    }
}

impl fmt::Display for GammaData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = |bs: &[Block]| {
            bs.iter()
                .map(|b| {
                    let a: Vec<&str> = b.arrows.iter().map(|x| x.as_ref()).collect();
                    format!("{}{{{}}}", b.vertex, a.join(","))
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let ks: Vec<String> = self
            .k_pairs
            .iter()
            .map(|k| format!("{}({}>{})", k.vertex, k.head, k.tail))
            .collect();
        write!(
            f,
            "I[{}] J[{}] K[{}]",
            blocks(&self.i_blocks),
            blocks(&self.j_blocks),
            ks.join(" ")
        )
    }
}

/// Partitions of `items` into blocks of size `n`, each block sorted and the
/// blocks ordered by their first element.
fn partitions(items: &[Id], n: usize) -> Vec<Vec<Vec<Id>>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    if n == 0 || items.len() % n != 0 {
        return Vec::new();
    }
    let first = items[0].clone();
    let rest = &items[1..];
    let mut out = Vec::new();
    for pick in combinations(rest.len(), n - 1) {
        let mut block = vec![first.clone()];
        block.extend(pick.iter().map(|&i| rest[i].clone()));
        let remaining: Vec<Id> = (0..rest.len())
            .filter(|i| !pick.contains(i))
            .map(|i| rest[i].clone())
            .collect();
        for mut tail in partitions(&remaining, n) {
            tail.insert(0, block.clone());
            out.push(tail);
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Partial matchings between `heads` and `tails`, as (head, tail) lists.
fn matchings(heads: &[Id], tails: &[Id]) -> Vec<Vec<(Id, Id)>> {
    fn rec(
        h: usize,
        heads: &[Id],
        tails: &[Id],
        used: &mut Vec<bool>,
        cur: &mut Vec<(Id, Id)>,
        out: &mut Vec<Vec<(Id, Id)>>,
    ) {
        if h == heads.len() {
            out.push(cur.clone());
            return;
        }
        rec(h + 1, heads, tails, used, cur, out);
        for t in 0..tails.len() {
            if used[t] {
                continue;
            }
            used[t] = true;
            cur.push((heads[h].clone(), tails[t].clone()));
            rec(h + 1, heads, tails, used, cur, out);
            cur.pop();
            used[t] = false;
        }
    }
    let mut out = Vec::new();
    rec(
        0,
        heads,
        tails,
        &mut vec![false; tails.len()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// All admissible contraction data on `(Q, alpha)` for the multilinear
/// degree, one representative per relabelling of `I`, `J`, `K`, sorted.
pub fn enumerate_gamma(amb: &Ambient) -> Vec<GammaData> {
    let q = amb.quiver();
    // Local choices at each vertex.
    let mut per_vertex: Vec<Vec<GammaData>> = Vec::new();
    for v in q.vertices() {
        let n = amb.alpha().get(v);
        let heads: Vec<Id> = q.arrows_into(v).map(|a| a.id.clone()).collect();
        let tails: Vec<Id> = q.arrows_from(v).map(|a| a.id.clone()).collect();
        let mut local = Vec::new();
        for m in matchings(&heads, &tails) {
            let free_t: Vec<Id> = tails
                .iter()
                .filter(|t| !m.iter().any(|(_, x)| x == *t))
                .cloned()
                .collect();
            let free_h: Vec<Id> = heads
                .iter()
                .filter(|h| !m.iter().any(|(x, _)| x == *h))
                .cloned()
                .collect();
            let k_pairs: Vec<KPair> = m
                .iter()
                .map(|(h, t)| KPair {
                    vertex: v.clone(),
                    head: h.clone(),
                    tail: t.clone(),
                })
                .collect();
            for ip in partitions(&free_t, n) {
                for jp in partitions(&free_h, n) {
                    local.push(GammaData {
                        i_blocks: ip
                            .iter()
                            .map(|b| Block {
                                vertex: v.clone(),
                                arrows: b.clone(),
                            })
                            .collect(),
                        j_blocks: jp
                            .iter()
                            .map(|b| Block {
                                vertex: v.clone(),
                                arrows: b.clone(),
                            })
                            .collect(),
                        k_pairs: k_pairs.clone(),
                    });
                }
            }
        }
        per_vertex.push(local);
    }
    let mut out = vec![GammaData {
        i_blocks: Vec::new(),
        j_blocks: Vec::new(),
        k_pairs: Vec::new(),
    }];
    for local in per_vertex {
        let mut next = Vec::with_capacity(out.len() * local.len());
        for g in &out {
            for l in &local {
                let mut h = g.clone();
                h.i_blocks.extend(l.i_blocks.iter().cloned());
                h.j_blocks.extend(l.j_blocks.iter().cloned());
                h.k_pairs.extend(l.k_pairs.iter().cloned());
                next.push(h);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Permutations of `0..n` with their signs, in lexicographic order.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if cur.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One factor of the contraction: a list of alternatives, each assigning
/// some row and column indices with a sign.
struct Factor {
    options: Vec<(Vec<(Id, usize)>, Vec<(Id, usize)>, i64)>,
}

/// The multilinear invariant `f_Gamma`: Levi-Civita contraction of row
/// indices over each `I` fiber and column indices over each `J` fiber,
/// Kronecker contraction `c(head) = r(tail)` over each `K` label. Fibers are
/// ordered by arrow order.
pub fn f_gamma(amb: &Ambient, g: &GammaData) -> Result<Poly> {
    g.validate(amb)?;
    let mut factors = Vec::new();
    for b in &g.i_blocks {
        let options = signed_permutations(b.arrows.len())
            .into_iter()
            .map(|(p, s)| (b.arrows.iter().cloned().zip(p).collect(), Vec::new(), s))
            .collect();
        factors.push(Factor { options });
    }
    for b in &g.j_blocks {
        let options = signed_permutations(b.arrows.len())
            .into_iter()
            .map(|(p, s)| (Vec::new(), b.arrows.iter().cloned().zip(p).collect(), s))
            .collect();
        factors.push(Factor { options });
    }
    for k in &g.k_pairs {
        let options = (0..amb.alpha().get(&k.vertex))
            .map(|x| (vec![(k.tail.clone(), x)], vec![(k.head.clone(), x)], 1))
            .collect();
        factors.push(Factor { options });
    }
    let mut rows: BTreeMap<Id, usize> = BTreeMap::new();
    let mut cols: BTreeMap<Id, usize> = BTreeMap::new();
    let mut out = Poly::zero();
    expand(&factors, 0, 1, &mut rows, &mut cols, &mut out);
    Ok(out)
}

fn expand(
    factors: &[Factor],
    k: usize,
    sign: i64,
    rows: &mut BTreeMap<Id, usize>,
    cols: &mut BTreeMap<Id, usize>,
    out: &mut Poly,
) {
    if k == factors.len() {
        let powers = rows
            .iter()
            .map(|(a, r)| (Coord::new(a.clone(), *r, cols[a]), 1))
            .collect();
        out.add_term(Monomial::from_powers(powers), rational::int(sign));
        return;
    }
    for (rs, cs, s) in &factors[k].options {
        for (a, r) in rs {
            rows.insert(a.clone(), *r);
        }
        for (a, c) in cs {
            cols.insert(a.clone(), *c);
        }
        expand(factors, k + 1, sign * s, rows, cols, out);
    }
}

/// `Phi_Gamma` and the trace factors from the reduction along `K`.
#[derive(Clone, Debug)]
pub struct PhiGamma {
    /// The adjusted quiver `Q_K`: one arrow per open component.
    pub reduced: Quiver,
    /// The functor `Q_K -> Q` sending each composite arrow to its path.
    pub functor: FunctorData,
    /// `Phi_{Gamma_K}` over `Q_K`.
    pub reduced_phi: AddMap,
    /// `s(Phi_{Gamma_K})` over `Q`.
    pub phi: AddMap,
    /// One oriented cycle per cycle component.
    pub cycles: Vec<Path>,
    /// Weight one on every arrow that occurs in `phi`.
    pub chi: ADegree,
}

/// Builds `Phi_Gamma`. The graph on the arrows with an edge `head -> tail`
/// for each `K` label splits into cycles, which become trace factors, and
/// open paths, which become composite arrows.
pub fn phi_gamma(amb: &Ambient, g: &GammaData) -> Result<PhiGamma> {
    g.validate(amb)?;
    let q = amb.quiver();
    let next: BTreeMap<Id, Id> = g
        .k_pairs
        .iter()
        .map(|k| (k.head.clone(), k.tail.clone()))
        .collect();
    let has_prev: BTreeSet<Id> = g.k_pairs.iter().map(|k| k.tail.clone()).collect();
    let mut seen = BTreeSet::new();
    let mut open: Vec<Vec<Id>> = Vec::new();
    for a in q.arrows() {
        if has_prev.contains(&a.id) {
            continue;
        }
        let mut comp = vec![a.id.clone()];
        seen.insert(a.id.clone());
        while let Some(n) = next.get(comp.last().unwrap()) {
            seen.insert(n.clone());
            comp.push(n.clone());
        }
        open.push(comp);
    }
    let mut cycles = Vec::new();
    for a in q.arrows() {
        if seen.contains(&a.id) {
            continue;
        }
        let mut comp = vec![a.id.clone()];
        seen.insert(a.id.clone());
        while let Some(n) = next.get(comp.last().unwrap()) {
            if n == &comp[0] {
                break;
            }
            seen.insert(n.clone());
            comp.push(n.clone());
        }
        let names: Vec<&str> = comp.iter().map(|x| x.as_ref()).collect();
        cycles.push(Path::from_arrows(q, &names)?);
    }

    // Q_K and the functor into Q.
    let paths: Vec<Path> = open
        .iter()
        .map(|c| Path::from_arrows(q, &c.iter().map(|x| x.as_ref()).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    let names: Vec<String> = paths.iter().map(|p| p.to_string()).collect();
    let reduced = Quiver::new(
        q.vertices().iter().map(|v| v.to_string()),
        names
            .iter()
            .zip(&paths)
            .map(|(n, p)| (n.clone(), p.source().to_string(), p.target().to_string())),
    )?;
    let functor = FunctorData::new(
        reduced.clone(),
        q.clone(),
        q.vertices()
            .iter()
            .map(|v| (v.clone(), v.clone()))
            .collect(),
        names
            .iter()
            .zip(&paths)
            .map(|(n, p)| (crate::quiver::id(n), PathComb::path(p.clone())))
            .collect(),
    )?;

    // Gamma_K: I labels follow first arrows, J labels follow last arrows.
    let first_of: BTreeMap<Id, usize> = open
        .iter()
        .enumerate()
        .map(|(i, c)| (c[0].clone(), i))
        .collect();
    let last_of: BTreeMap<Id, usize> = open
        .iter()
        .enumerate()
        .map(|(i, c)| (c.last().unwrap().clone(), i))
        .collect();
    let source_slots: Vec<Id> = g.i_blocks.iter().map(|b| b.vertex.clone()).collect();
    let target_slots: Vec<Id> = g.j_blocks.iter().map(|b| b.vertex.clone()).collect();
    let mut entries = Vec::new();
    for bi in &g.i_blocks {
        let mut row = Vec::new();
        for bj in &g.j_blocks {
            let mut terms = Vec::new();
            for a in &bi.arrows {
                let m = first_of[a];
                if bj.arrows.contains(open[m].last().unwrap()) {
                    terms.push((Path::arrow(reduced.arrow(&names[m])?), Rational::one()));
                }
            }
            row.push(PathComb::from_terms(
                bi.vertex.clone(),
                bj.vertex.clone(),
                terms,
            )?);
        }
        entries.push(row);
    }
    debug_assert_eq!(first_of.len(), last_of.len());
    let reduced_phi = AddMap::new(source_slots, target_slots, entries)?;
    let phi = functor.apply_map(&reduced_phi)?;
    let chi = ADegree(open.iter().flatten().map(|a| (a.clone(), 1)).collect());
    Ok(PhiGamma {
        reduced,
        functor,
        reduced_phi,
        phi,
        cycles,
        chi,
    })
}

/// Outcome of comparing `f_Gamma` with `P_{Phi_Gamma,alpha,chi} prod Tr`.
#[derive(Clone, Debug)]
pub struct ContractionCheck {
    pub gamma: GammaData,
    pub f: Poly,
    pub rhs: Poly,
    /// `Some(s)` when `f = s * rhs` with `s = +-1`.
    pub sign: Option<i32>,
}

impl ContractionCheck {
    pub fn holds(&self) -> bool {
        self.sign.is_some()
    }
}

pub fn contraction_check(amb: &Ambient, g: &GammaData) -> Result<ContractionCheck> {
    let f = f_gamma(amb, g)?;
    let pg = phi_gamma(amb, g)?;
    let mut rhs = det_semiinvariant(amb, &pg.phi)?.a_degree_component(&pg.chi);
    for l in &pg.cycles {
        rhs = &rhs * &trace_invariant(amb, l)?;
    }
    let sign = f.sign_relative_to(&rhs);
    Ok(ContractionCheck {
        gamma: g.clone(),
        f,
        rhs,
        sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::quiver::DimVector;

    fn amb(q: Quiver, a: &[usize]) -> Ambient {
        let alpha = DimVector::from_values(&q, a).unwrap();
        Ambient::new(q, alpha).unwrap()
    }

    #[test]
    fn kronecker_has_one_gamma() {
        let a22 = amb(Quiver::kronecker(), &[2, 2]);
        let gs = enumerate_gamma(&a22);
        assert_eq!(gs.len(), 1);
        assert!(gs[0].k_pairs.is_empty());
        let pg = phi_gamma(&a22, &gs[0]).unwrap();
        assert_eq!(pg.phi.to_string(), "[1] -> [2] (a + b)");
        assert!(pg.cycles.is_empty());
        let f = f_gamma(&a22, &gs[0]).unwrap();
        let mixed = det_semiinvariant(&a22, &pg.phi)
            .unwrap()
            .a_degree_component(&ADegree::new(&[("a", 1), ("b", 1)]));
        assert!(f.sign_relative_to(&mixed).is_some());
        assert!(contraction_check(&a22, &gs[0]).unwrap().holds());

        let a11 = amb(Quiver::kronecker(), &[1, 1]);
        let gs = enumerate_gamma(&a11);
        assert_eq!(gs.len(), 1);
        assert_eq!(
            f_gamma(&a11, &gs[0]).unwrap(),
            parse_poly("x[a,1,1]*x[b,1,1]").unwrap()
        );
    }

    #[test]
    fn loop_traces() {
        for n in [1, 2] {
            let a = amb(Quiver::one_loop(), &[n]);
            let gs = enumerate_gamma(&a);
            let k = gs.iter().find(|g| !g.k_pairs.is_empty()).unwrap();
            let pg = phi_gamma(&a, k).unwrap();
            assert_eq!(pg.phi.num_sources(), 0);
            assert_eq!(pg.cycles.len(), 1);
            let tr = trace_invariant(&a, &pg.cycles[0]).unwrap();
            assert_eq!(f_gamma(&a, k).unwrap(), tr);
            for g in &gs {
                assert!(contraction_check(&a, g).unwrap().holds(), "{g}");
            }
        }
    }

    #[test]
    fn open_paths_compose() {
        let a = amb(Quiver::a3(), &[1, 1, 1]);
        let gs = enumerate_gamma(&a);
        let k = gs.iter().find(|g| !g.k_pairs.is_empty()).unwrap();
        let pg = phi_gamma(&a, k).unwrap();
        assert_eq!(pg.reduced.arrows()[0].id.as_ref(), "a.b");
        assert_eq!(pg.phi.to_string(), "[1] -> [3] (a.b)");
        for g in &gs {
            assert!(contraction_check(&a, g).unwrap().holds(), "{g}");
        }
    }

    #[test]
    fn partition_counts() {
        let ids: Vec<Id> = ["p", "q", "r", "s"]
            .iter()
            .map(|x| crate::quiver::id(x))
            .collect();
        assert_eq!(partitions(&ids, 2).len(), 3);
        assert_eq!(partitions(&ids, 1).len(), 1);
        assert_eq!(partitions(&ids, 3).len(), 0);
        assert_eq!(
            signed_permutations(3)
                .iter()
                .filter(|(_, s)| *s < 0)
                .count(),
            3
        );
    }
}
