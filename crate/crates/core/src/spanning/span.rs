use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::gamma::{contraction_check, enumerate_gamma};
use super::maps::{enumerate_maps, SearchBounds};
use super::oracle::{weight_space_basis, MonomialSpace};
use super::polar::{build_q_chi, restitute};
use crate::error::Result;
use crate::invariants::det_semiinvariant;
use crate::linalg::EchelonBasis;
use crate::poly::{ADegree, Ambient, Poly};

/// How generators are produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Contraction invariants on `Q_chi`, restituted to `Q`.
    Gamma,
    /// `chi`-components of `P_{phi,alpha}` over enumerated maps.
    Maps(SearchBounds),
}

/// One generator considered by a span check.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorEntry {
    /// Contraction data or map that produced it.
    pub origin: String,
    pub poly: String,
    /// Whether it lies in the oracle space.
    pub contained: bool,
    /// Whether it enlarged the span.
    pub new: bool,
    /// Sign relating `f_Gamma` to `P_{Phi_Gamma}` on `Q_chi`, when known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i32>,
}

/// The verdict of a span check at one `(Q, alpha, chi)`.
#[derive(Clone, Debug, Serialize)]
pub struct SpanReport {
    pub quiver: String,
    pub alpha: String,
    pub chi: String,
    pub strategy: String,
    pub oracle_dim: usize,
    pub span_dim: usize,
    pub contained: bool,
    pub equal: bool,
    pub examined: usize,
    pub truncated: bool,
    /// Generators that enlarged the span or escaped the oracle space.
    pub generators: Vec<GeneratorEntry>,
}

impl SpanReport {
    pub fn verdict(&self) -> &'static str {
        if self.equal {
            "EQUAL"
        } else if !self.contained {
            "NOT CONTAINED"
        } else {
            "PROPER SUBSPACE"
        }
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "span check ({})", self.strategy).unwrap();
        writeln!(s, "quiver {}", self.quiver).unwrap();
        writeln!(s, "alpha {}  chi {}", self.alpha, self.chi).unwrap();
        writeln!(
            s,
            "oracle={} span={} {}",
            self.oracle_dim,
            self.span_dim,
            self.verdict()
        )
        .unwrap();
        writeln!(
            s,
            "examined {} generators{}",
            self.examined,
            if self.truncated {
                " (truncated at the candidate cap)"
            } else {
                ""
            }
        )
        .unwrap();
        for (k, g) in self.generators.iter().enumerate() {
            let sign = match g.sign {
                Some(1) => " sign=+1",
                Some(_) => " sign=-1",
                None => "",
            };
            let tag = match (g.contained, g.new) {
                (false, _) => "OUTSIDE",
                (true, true) => "new",
                (true, false) => "dependent",
            };
            writeln!(s, "  [{}] {}{} {}", k + 1, g.origin, sign, tag).unwrap();
            writeln!(s, "      {}", g.poly).unwrap();
        }
        s
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }
}

struct Candidate {
    origin: String,
    poly: Poly,
    sign: Option<i32>,
}

/// Compares the span of generated semi-invariants of A-degree `chi` with the
/// oracle space.
pub fn span_check(amb: &Ambient, chi: &ADegree, strategy: &Strategy) -> Result<SpanReport> {
    let chi = chi.normalized();
    chi.check(amb.quiver())?;
    let space = MonomialSpace::new(amb, &chi)?;
    let oracle = weight_space_basis(amb, &chi)?;
    let mut oracle_basis = EchelonBasis::new(space.dim());
    for f in &oracle {
        oracle_basis.insert(&space.to_vec(f).expect("oracle lives in the monomial space"));
    }
    let oracle_dim = oracle_basis.rank();

    let mut span = EchelonBasis::new(space.dim());
    let mut contained = true;
    let mut generators = Vec::new();
    let mut examined = 0;
    let mut truncated = false;
    let mut absorb = |c: Candidate, span: &mut EchelonBasis, contained: &mut bool| {
        let (inside, new) = match space.to_vec(&c.poly) {
            Some(v) => {
                let inside = oracle_basis.contains(&v);
                (inside, span.insert(&v))
            }
            None => (false, false),
        };
        if !inside {
            *contained = false;
        }
        if new || !inside {
            generators.push(GeneratorEntry {
                origin: c.origin,
                poly: c.poly.to_string(),
                contained: inside,
                new,
                sign: c.sign,
            });
        }
    };

    let strategy_name = match strategy {
        Strategy::Gamma => {
            let qc = build_q_chi(amb.quiver(), &chi)?;
            let amb_chi = qc.ambient(amb)?;
            let gammas = enumerate_gamma(&amb_chi);
            let cands: Vec<Candidate> = gammas
                .par_iter()
                .map(|g| {
                    let check = contraction_check(&amb_chi, g)?;
                    Ok(Candidate {
                        origin: format!("Gamma {g}"),
                        poly: restitute(&qc, amb, &check.f)?,
                        sign: check.sign,
                    })
                })
                .collect::<Result<_>>()?;
            examined = cands.len();
            for c in cands {
                absorb(c, &mut span, &mut contained);
            }
            "strategy A: contraction data on the polarization quiver".to_string()
        }
        Strategy::Maps(bounds) => {
            let (maps, capped) = enumerate_maps(amb.quiver(), amb.alpha(), bounds);
            const CHUNK: usize = 64;
            let mut done_early = false;
            for chunk in maps.chunks(CHUNK) {
                let cands: Vec<Candidate> = chunk
                    .par_iter()
                    .map(|phi| {
                        Ok(Candidate {
                            origin: format!("phi {phi}"),
                            poly: det_semiinvariant(amb, phi)?.a_degree_component(&chi),
                            sign: None,
                        })
                    })
                    .collect::<Result<_>>()?;
                for c in cands {
                    examined += 1;
                    absorb(c, &mut span, &mut contained);
                    if span.rank() == oracle_dim && oracle_dim > 0 {
                        done_early = true;
                        break;
                    }
                }
                if done_early {
                    break;
                }
            }
            truncated = capped && !done_early;
            format!(
                "strategy B: maps with paths of length <= {}, multiplicity <= {}",
                bounds.max_path_len, bounds.max_mult
            )
        }
    };
    let span_dim = span.rank();
    Ok(SpanReport {
        quiver: amb.quiver().to_string(),
        alpha: amb.alpha().to_string(),
        chi: if chi.0.is_empty() {
            "0".into()
        } else {
            chi.to_string()
        },
        strategy: strategy_name,
        oracle_dim,
        span_dim,
        contained,
        equal: contained && span_dim == oracle_dim,
        examined,
        truncated,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{DimVector, Quiver};

    fn amb(q: Quiver, a: &[usize]) -> Ambient {
        let alpha = DimVector::from_values(&q, a).unwrap();
        Ambient::new(q, alpha).unwrap()
    }

    #[test]
    fn strategy_a_examples() {
        let k22 = amb(Quiver::kronecker(), &[2, 2]);
        let r = span_check(&k22, &ADegree::new(&[("a", 1), ("b", 1)]), &Strategy::Gamma).unwrap();
        assert!(r.equal);
        assert!(r.render_text().contains("oracle=1 span=1 EQUAL"));

        let l2 = amb(Quiver::one_loop(), &[2]);
        for m in [1, 2] {
            let r = span_check(&l2, &ADegree::new(&[("l", m)]), &Strategy::Gamma).unwrap();
            assert_eq!((r.oracle_dim, r.span_dim, r.equal), (m, m, true));
        }
    }

    #[test]
    fn strategy_b_examples() {
        let k22 = amb(Quiver::kronecker(), &[2, 2]);
        let chi = ADegree::new(&[("a", 1), ("b", 1)]);
        let r = span_check(&k22, &chi, &Strategy::Maps(SearchBounds::default())).unwrap();
        assert!(r.equal, "{}", r.render_text());
        let l2 = amb(Quiver::one_loop(), &[2]);
        let r = span_check(
            &l2,
            &ADegree::new(&[("l", 2)]),
            &Strategy::Maps(SearchBounds::default()),
        )
        .unwrap();
        assert!(r.equal, "{}", r.render_text());
    }
}
