//! Bounded enumeration of maps in `add(Q)` satisfying the squareness
//! condition, in a fixed order: fewer slots first, then sparser and shorter
//! entries first.

use num_traits::{Signed, Zero};

use crate::quiver::{AddMap, DimVector, Id, Path, PathComb, Quiver};
use crate::rational::{self, Rational};

/// Limits for map enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Longest path allowed in an entry.
    pub max_path_len: usize,
    /// Largest multiplicity `a(v)`, `b(v)` at any vertex.
    pub max_mult: usize,
    /// Coefficients a path may carry; zero is always allowed.
    pub coefficients: Vec<Rational>,
    /// Stop after this many candidates.
    pub max_candidates: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_path_len: 2,
            max_mult: 3,
            coefficients: vec![rational::int(-1), rational::int(0), rational::int(1)],
            max_candidates: 20_000,
        }
    }
}

impl SearchBounds {
    /// Nonzero coefficients ordered by absolute value, positive first.
    fn nonzero_coefficients(&self) -> Vec<Rational> {
        let mut cs: Vec<Rational> = self
            .coefficients
            .iter()
            .filter(|c| !c.is_zero())
            .cloned()
            .collect();
        cs.sort_by(|x, y| x.abs().cmp(&y.abs()).then(y.cmp(x)));
        cs.dedup();
        cs
    }
}

/// All combinations of the paths `v -> w` with bounded coefficients, zero
/// first, then ordered by support size and longest path.
fn entry_options(q: &Quiver, v: &Id, w: &Id, bounds: &SearchBounds) -> Vec<PathComb> {
    let paths: Vec<Path> = q.enumerate_paths(v, w, bounds.max_path_len);
    let coeffs = bounds.nonzero_coefficients();
    let mut out: Vec<(usize, usize, Vec<usize>, PathComb)> = Vec::new();
    // Each path gets index 0 (absent) or 1 + position in `coeffs`.
    let radix = coeffs.len() + 1;
    let total = radix.checked_pow(paths.len() as u32).unwrap_or(usize::MAX);
    let total = total.min(1 << 16);
    for code in 0..total {
        let mut digits = Vec::with_capacity(paths.len());
        let mut c = code;
        for _ in 0..paths.len() {
            digits.push(c % radix);
            c /= radix;
        }
        let terms: Vec<(Path, Rational)> = digits
            .iter()
            .zip(&paths)
            .filter(|(d, _)| **d > 0)
            .map(|(d, p)| (p.clone(), coeffs[d - 1].clone()))
            .collect();
        let support = terms.len();
        let longest = terms.iter().map(|(p, _)| p.len()).max().unwrap_or(0);
        let comb = PathComb::from_terms(v.clone(), w.clone(), terms).unwrap();
        out.push((support, longest, digits, comb));
    }
    out.sort_by(|x, y| (x.0, x.1, &x.2).cmp(&(y.0, y.1, &y.2)));
    out.into_iter().map(|x| x.3).collect()
}

/// Slot multiplicities `(a, b)` with `sum a alpha = sum b alpha > 0`, no slots
/// at zero-dimensional vertices, ordered by total slot count.
fn shapes(q: &Quiver, alpha: &DimVector, max_mult: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = q.vertices().len();
    let dims: Vec<usize> = q.vertices().iter().map(|v| alpha.get(v)).collect();
    let mut all = Vec::new();
    let mut cur = vec![0usize; 2 * n];
    fn rec(k: usize, cur: &mut Vec<usize>, dims: &[usize], max: usize, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        let top = if dims[k % dims.len()] == 0 { 0 } else { max };
        for m in 0..=top {
            cur[k] = m;
            rec(k + 1, cur, dims, max, out);
        }
        cur[k] = 0;
    }
    if n == 0 {
        return Vec::new();
    }
    rec(0, &mut cur, &dims, max_mult, &mut all);
    let mut out: Vec<(usize, Vec<usize>, Vec<usize>)> = all
        .into_iter()
        .filter_map(|c| {
            let (a, b) = c.split_at(n);
            let rows: usize = a.iter().zip(&dims).map(|(x, d)| x * d).sum();
            let cols: usize = b.iter().zip(&dims).map(|(x, d)| x * d).sum();
            (rows == cols && rows > 0).then(|| (c.iter().sum(), a.to_vec(), b.to_vec()))
        })
        .collect();
    out.sort();
    out.into_iter().map(|(_, a, b)| (a, b)).collect()
}

/// Index vectors `d` with `d_i < radix_i`, by increasing sum, then
/// lexicographically; `visit` returns `false` to stop.
fn graded_vectors(radix: &[usize], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let max_sum: usize = radix.iter().map(|r| r - 1).sum();
    let mut cur = vec![0; radix.len()];
    fn rec(
        k: usize,
        left: usize,
        radix: &[usize],
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if k == radix.len() {
            return left != 0 || visit(cur);
        }
        let rest: usize = radix[k + 1..].iter().map(|r| r - 1).sum();
        let lo = left.saturating_sub(rest);
        let hi = left.min(radix[k] - 1);
        for d in (lo..=hi).rev() {
            cur[k] = d;
            if !rec(k + 1, left - d, radix, cur, visit) {
                return false;
            }
        }
        cur[k] = 0;
        true
    }
    for s in 0..=max_sum {
        if !rec(0, s, radix, &mut cur, visit) {
            return false;
        }
    }
    true
}

/// Candidate maps for `(Q, alpha)` in canonical order, at most
/// `bounds.max_candidates`; the flag reports whether the cap cut the
/// enumeration short. Maps with a zero row or column are skipped.
pub fn enumerate_maps(q: &Quiver, alpha: &DimVector, bounds: &SearchBounds) -> (Vec<AddMap>, bool) {
    let mut out = Vec::new();
    let mut truncated = false;
    for (a, b) in shapes(q, alpha, bounds.max_mult) {
        let src = AddMap::slots_for(q, &DimVector::from_values(q, &a).unwrap());
        let tgt = AddMap::slots_for(q, &DimVector::from_values(q, &b).unwrap());
        let options: Vec<Vec<PathComb>> = src
            .iter()
            .flat_map(|s| tgt.iter().map(move |t| (s, t)))
            .map(|(s, t)| entry_options(q, s, t, bounds))
            .collect();
        // A slot with no nonzero option anywhere gives a zero row or column.
        let dead_row =
            (0..src.len()).any(|i| (0..tgt.len()).all(|j| options[i * tgt.len() + j].len() == 1));
        let dead_col =
            (0..tgt.len()).any(|j| (0..src.len()).all(|i| options[i * tgt.len() + j].len() == 1));
        if dead_row || dead_col {
            continue;
        }
        let radix: Vec<usize> = options.iter().map(Vec::len).collect();
        let finished = graded_vectors(&radix, &mut |d| {
            let nonzero = |i: usize, j: usize| d[i * tgt.len() + j] != 0;
            if (0..src.len()).any(|i| (0..tgt.len()).all(|j| !nonzero(i, j)))
                || (0..tgt.len()).any(|j| (0..src.len()).all(|i| !nonzero(i, j)))
            {
                return true;
            }
            if out.len() == bounds.max_candidates {
                truncated = true;
                return false;
            }
            let entries = (0..src.len())
                .map(|i| {
                    (0..tgt.len())
                        .map(|j| options[i * tgt.len() + j][d[i * tgt.len() + j]].clone())
                        .collect()
                })
                .collect();
            out.push(AddMap::new(src.clone(), tgt.clone(), entries).unwrap());
            true
        });
        if !finished {
            break;
        }
    }
    (out, truncated)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order() {
        let mut seen = Vec::new();
        graded_vectors(&[2, 3], &mut |d| {
            seen.push(d.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![0, 1],
                vec![1, 1],
                vec![0, 2],
                vec![1, 2]
            ]
        );
    }

    #[test]
    fn kronecker_first_candidates() {
        let k2 = Quiver::kronecker();
        let alpha = DimVector::from_values(&k2, &[1, 1]).unwrap();
        let small = SearchBounds {
            max_mult: 1,
            ..SearchBounds::default()
        };
        let (maps, truncated) = enumerate_maps(&k2, &alpha, &small);
        assert!(!truncated);
        let shown: Vec<String> = maps.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown[0], "[2] -> [2] (e_2)");
        let a = shown.iter().position(|s| s == "[1] -> [2] (a)").unwrap();
        assert_eq!(shown[a + 1], "[1] -> [2] (-a)");
        assert!(shown.contains(&"[1] -> [2] (b)".to_string()));
        let capped = SearchBounds {
            max_candidates: 3,
            ..SearchBounds::default()
        };
        let (maps, truncated) = enumerate_maps(&k2, &alpha, &capped);
        assert_eq!(maps.len(), 3);
        assert!(truncated);
    }

    #[test]
    fn loop_options() {
        let l1 = Quiver::one_loop();
        let v = crate::quiver::id("1");
        let opts = entry_options(&l1, &v, &v, &SearchBounds::default());
        assert_eq!(opts.len(), 27);
        assert!(opts[0].is_zero());
        assert_eq!(opts[1].to_string(), "e_1");
        assert_eq!(opts[2].to_string(), "-e_1");
    }
}
