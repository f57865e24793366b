//! The `qsi` command line: argument definitions and the report each
//! subcommand prints. Exit status is 0 on success, 2 when a verification
//! fails and 1 on bad input.

use std::fmt::Write as _;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::format;
use crate::invariants::{
    check_semiinvariance, det_component, det_semiinvariant, rep_matrix, trace_from_dets,
    weight_of_map,
};
use crate::poly::{parse_poly, Ambient, Poly, RepPoint};
use crate::quiver::{AddMap, Quiver};
use crate::rational;
use crate::repthy::{
    canonical_presentation, ext_dim, hom_basis, hom_ext_via_presentation, minimize_presentation,
    p_r_beta, perp_check, semistable_search, PresentationData, SemistableOutcome,
};
use crate::spanning::{
    build_q_chi, contraction_check, enumerate_gamma, polarize, restitute, span_check,
    weight_space_basis, SearchBounds, Strategy,
};

#[derive(Parser, Debug, Clone)]
#[command(
    name = "qsi",
    version,
    about = "Exact semi-invariants of quiver representations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the JSON mirror instead of the text report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the report to this file.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct Space {
    /// Quiver file (JSON).
    #[arg(long)]
    pub quiver: PathBuf,
    /// Dimension vector, e.g. `1:2,2:2`.
    #[arg(long)]
    pub alpha: String,
}

#[derive(Args, Debug, Clone)]
pub struct Bounds {
    #[arg(long, default_value_t = 2)]
    pub max_len: usize,
    #[arg(long, default_value_t = 3)]
    pub max_mult: usize,
    #[arg(long, default_value_t = 20_000)]
    pub max_candidates: usize,
}

impl Bounds {
    fn search(&self) -> SearchBounds {
        SearchBounds {
            max_path_len: self.max_len,
            max_mult: self.max_mult,
            max_candidates: self.max_candidates,
            ..SearchBounds::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    A,
    B,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// The determinantal semi-invariant of a map and its weight.
    Det {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        map: PathBuf,
        /// Compare with numeric determinants at this many random points.
        #[arg(long, default_value_t = 0)]
        check: usize,
    },
    /// The component of given A-degree of a map's semi-invariant or of a
    /// polynomial.
    Component {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        degree: String,
        #[arg(long, conflicts_with = "poly")]
        map: Option<PathBuf>,
        #[arg(long)]
        poly: Option<PathBuf>,
    },
    /// The trace along a cycle and its expression through determinants.
    Trace {
        #[command(flatten)]
        space: Space,
        /// Cycle as a path expression, e.g. `l.l`.
        #[arg(long)]
        cycle: String,
    },
    /// Basis of the semi-invariants of an A-degree, by infinitesimal
    /// invariance.
    WeightSpace {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        degree: String,
    },
    /// Compares generated semi-invariants with the full weight space.
    SpanCheck {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        degree: String,
        #[arg(long, value_enum, ignore_case = true, default_value = "a")]
        strategy: StrategyArg,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Enumerates contraction data and checks each against its
    /// determinantal form.
    Gamma {
        #[command(flatten)]
        space: Space,
    },
    /// Multilinear component of a polynomial on the polarization quiver.
    Polarize {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        degree: String,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Pulls a polynomial on the polarization quiver back to the quiver.
    Restitute {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        degree: String,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Basis of Hom(R, S).
    Hom {
        #[command(flatten)]
        pair: RepPair,
    },
    /// dim Ext(R, S) by the Euler defect and by a presentation of R.
    Ext {
        #[command(flatten)]
        pair: RepPair,
    },
    /// Standard projective presentation of a representation.
    Present {
        #[command(flatten)]
        rep: Rep,
        #[arg(long)]
        minimize: bool,
    },
    /// Minimizes a map read as a presentation.
    Minimize {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        map: PathBuf,
        #[arg(long, default_value_t = 4)]
        truncation: usize,
    },
    /// P_{R,beta} from the minimized presentation of R.
    Prb {
        #[command(flatten)]
        rep: Rep,
        #[arg(long)]
        beta: String,
    },
    /// Whether det R_p(phi) is nonzero, optionally against Hom and Ext.
    Perp {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        point: PathBuf,
        /// Presentation given as a map ...
        #[arg(long, conflicts_with = "rep")]
        map: Option<PathBuf>,
        /// ... or by a representation with `--dims`.
        #[arg(long, requires = "dims")]
        rep: Option<PathBuf>,
        #[arg(long)]
        dims: Option<String>,
        #[arg(long)]
        cross_validate: bool,
        #[arg(long, default_value_t = 4)]
        truncation: usize,
    },
    /// Searches for a map certifying that a point is semistable.
    Semistable {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        point: PathBuf,
        #[command(flatten)]
        bounds: Bounds,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Rep {
    #[arg(long)]
    pub quiver: PathBuf,
    /// Dimension vector of the representation.
    #[arg(long)]
    pub dims: String,
    /// Arrow matrices (JSON point file).
    #[arg(long)]
    pub rep: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct RepPair {
    #[arg(long)]
    pub quiver: PathBuf,
    #[arg(long)]
    pub dims_r: String,
    #[arg(long)]
    pub rep_r: PathBuf,
    #[arg(long)]
    pub dims_s: String,
    #[arg(long)]
    pub rep_s: PathBuf,
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

struct Report {
    text: String,
    json: Value,
    verified: bool,
}

impl Report {
    fn new() -> Self {
        Report {
            text: String::new(),
            json: json!({}),
            verified: true,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.json[key] = v.into();
    }
}

fn read(path: &FsPath) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_quiver(path: &FsPath) -> Result<Quiver> {
    format::quiver_from_json(&read(path)?)
}

fn load_space(s: &Space) -> Result<Ambient> {
    let q = load_quiver(&s.quiver)?;
    let alpha = format::parse_dims(&q, &s.alpha)?;
    Ambient::new(q, alpha)
}

fn load_map(q: &Quiver, path: &FsPath) -> Result<AddMap> {
    format::map_from_json(q, &read(path)?)
}

fn load_poly(amb: &Ambient, path: &FsPath) -> Result<Poly> {
    let f = parse_poly(read(path)?.trim())?;
    amb.check(&f)?;
    Ok(f)
}

fn load_rep(q: &Quiver, dims: &str, path: &FsPath) -> Result<RepPoint> {
    let amb = Ambient::new(q.clone(), format::parse_dims(q, dims)?)?;
    format::point_from_json(&amb, &read(path)?)
}

/// Runs one job. The report is identical for identical arguments, whatever
/// the size of the worker pool.
pub fn run(cli: &Cli) -> Outcome {
    let mut out = match dispatch(cli) {
        Ok(r) => {
            let code = if r.verified { 0 } else { 2 };
            let report = if cli.json {
                let mut j = r.json;
                j["verified"] = r.verified.into();
                serde_json::to_string_pretty(&j).unwrap() + "\n"
            } else {
                r.text
            };
            Outcome { code, report }
        }
        Err(e) => Outcome {
            code: 1,
            report: format!("error: {e}\n"),
        },
    };
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, &out.report) {
            out = Outcome {
                code: 1,
                report: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
    }
    out
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let mut r = Report::new();
    match &cli.command {
        Command::Det { space, map, check } => {
            let amb = load_space(space)?;
            let q = amb.quiver();
            let phi = load_map(q, map)?;
            let f = det_semiinvariant(&amb, &phi)?;
            let w = weight_of_map(q, &phi);
            r.line(format!("map {phi}"));
            r.line(format!("alpha {}", amb.alpha()));
            r.line(format!("P = {f}"));
            r.line(format!("weight {w}"));
            r.set("poly", f.to_string());
            r.set("weight", w.values());
            match check_semiinvariance(&amb, &f, &w)? {
                None => r.line("semi-invariance: verified"),
                Some(v) => {
                    r.line(format!("semi-invariance: FAILED ({v})"));
                    r.verified = false;
                }
            }
            if *check > 0 {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let c = rep_matrix(&amb, &phi)?.det_cross_check(&f, &mut rng, *check)?;
                r.line(format!(
                    "evaluation check: {} points, {} mismatches",
                    c.points, c.mismatches
                ));
                r.verified &= c.agreed();
            }
        }
        Command::Component {
            space,
            degree,
            map,
            poly,
        } => {
            let amb = load_space(space)?;
            let chi = format::parse_degree(amb.quiver(), degree)?;
            let part = match (map, poly) {
                (Some(m), _) => det_component(&amb, &load_map(amb.quiver(), m)?, &chi)?,
                (None, Some(p)) => load_poly(&amb, p)?.a_degree_component(&chi),
                (None, None) => return Err(Error::Invalid("give either --map or --poly".into())),
            };
            r.line(format!("degree {chi}"));
            r.line(format!("component = {part}"));
            r.set("degree", chi.to_string());
            r.set("component", part.to_string());
        }
        Command::Trace { space, cycle } => {
            let amb = load_space(space)?;
            let c = format::parse_path_expr(amb.quiver(), cycle)?;
            let l = match c.terms().collect::<Vec<_>>().as_slice() {
                [(p, x)] if rational::int(1) == **x => (*p).clone(),
                _ => return Err(Error::Invalid(format!("`{cycle}` is not a single path"))),
            };
            let cert = trace_from_dets(&amb, &l)?;
            r.line(format!("cycle {l}"));
            r.line(format!("Tr = {}", cert.trace));
            for (lam, c) in cert.lambdas.iter().zip(&cert.coefficients) {
                r.line(format!(
                    "  {} * P[e + {}*l]",
                    rational::render(c),
                    rational::render(lam)
                ));
            }
            r.line(format!("certificate holds: {}", cert.holds()));
            r.set("trace", cert.trace.to_string());
            r.set(
                "coefficients",
                cert.coefficients
                    .iter()
                    .map(rational::render)
                    .collect::<Vec<_>>(),
            );
            r.verified = cert.holds();
        }
        Command::WeightSpace { space, degree } => {
            let amb = load_space(space)?;
            let chi = format::parse_degree(amb.quiver(), degree)?;
            let basis = weight_space_basis(&amb, &chi)?;
            r.line(format!("degree {chi}"));
            r.line(format!("dim {}", basis.len()));
            for f in &basis {
                r.line(format!("  {f}"));
            }
            r.set("dim", basis.len());
            r.set(
                "basis",
                basis.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            );
        }
        Command::SpanCheck {
            space,
            degree,
            strategy,
            bounds,
        } => {
            let amb = load_space(space)?;
            let chi = format::parse_degree(amb.quiver(), degree)?;
            let strategy = match strategy {
                StrategyArg::A => Strategy::Gamma,
                StrategyArg::B => Strategy::Maps(bounds.search()),
            };
            let rep = span_check(&amb, &chi, &strategy)?;
            r.text = rep.render_text();
            r.json = serde_json::to_value(&rep).unwrap();
            r.verified = rep.equal;
        }
        Command::Gamma { space } => {
            let amb = load_space(space)?;
            let gammas = enumerate_gamma(&amb);
            r.line(format!("{} contraction data", gammas.len()));
            let mut items = Vec::new();
            for g in &gammas {
                let t = contraction_check(&amb, g)?;
                let sign = match t.sign {
                    Some(1) => "+1",
                    Some(_) => "-1",
                    None => "FAILED",
                };
                r.line(format!("{g}"));
                r.line(format!("  f = {}", t.f));
                r.line(format!("  sign {sign}"));
                r.verified &= t.holds();
                items.push(json!({"gamma": g.to_string(), "f": t.f.to_string(), "sign": t.sign}));
            }
            r.set("gammas", items);
        }
        Command::Polarize {
            space,
            degree,
            poly,
        } => {
            let amb = load_space(space)?;
            let chi = format::parse_degree(amb.quiver(), degree)?;
            let qc = build_q_chi(amb.quiver(), &chi)?;
            let f = load_poly(&amb, poly)?;
            let g = polarize(&qc, &amb, &f)?;
            r.line(format!("polarization quiver {}", qc.quiver));
            r.line(format!("polarized = {g}"));
            r.set("quiver", format::quiver_to_json(&qc.quiver));
            r.set("poly", g.to_string());
        }
        Command::Restitute {
            space,
            degree,
            poly,
        } => {
            let amb = load_space(space)?;
            let chi = format::parse_degree(amb.quiver(), degree)?;
            let qc = build_q_chi(amb.quiver(), &chi)?;
            let f = load_poly(&qc.ambient(&amb)?, poly)?;
            let g = restitute(&qc, &amb, &f)?;
            r.line(format!("restituted = {g}"));
            r.set("poly", g.to_string());
        }
        Command::Hom { pair } => {
            let q = load_quiver(&pair.quiver)?;
            let rr = load_rep(&q, &pair.dims_r, &pair.rep_r)?;
            let ss = load_rep(&q, &pair.dims_s, &pair.rep_s)?;
            let basis = hom_basis(&q, &rr, &ss)?;
            r.line(format!("dim Hom = {}", basis.len()));
            for (k, h) in basis.iter().enumerate() {
                r.line(format!("  [{}]", k + 1));
                for (v, m) in &h.maps {
                    r.line(format!("    {v}: {}", inline_matrix(m)));
                }
            }
            r.set("dim", basis.len());
        }
        Command::Ext { pair } => {
            let q = load_quiver(&pair.quiver)?;
            let rr = load_rep(&q, &pair.dims_r, &pair.rep_r)?;
            let ss = load_rep(&q, &pair.dims_s, &pair.rep_s)?;
            let hom = hom_basis(&q, &rr, &ss)?.len();
            let ext = ext_dim(&q, &rr, &ss)?;
            let euler = q.euler_form(rr.alpha(), ss.alpha());
            r.line(format!("dim Hom = {hom}"));
            r.line(format!("Euler form = {euler}"));
            r.line(format!("dim Ext = {ext}"));
            r.set("hom", hom);
            r.set("ext", ext);
            if q.is_acyclic() {
                let (h2, e2) = hom_ext_via_presentation(&q, &rr, &ss)?;
                let agree = (h2, e2) == (hom, ext);
                r.line(format!(
                    "presentation route: Hom {h2}, Ext {e2} ({})",
                    if agree { "agrees" } else { "DISAGREES" }
                ));
                r.verified = agree;
            }
        }
        Command::Present { rep, minimize } => {
            let q = load_quiver(&rep.quiver)?;
            let rr = load_rep(&q, &rep.dims, &rep.rep)?;
            let mut p = canonical_presentation(&q, &rr)?;
            if *minimize {
                p = minimize_presentation(&p);
            }
            describe_presentation(&mut r, &q, &p);
        }
        Command::Minimize {
            quiver,
            map,
            truncation,
        } => {
            let q = load_quiver(quiver)?;
            let p = PresentationData::from_map(&q, load_map(&q, map)?, *truncation)?;
            describe_presentation(&mut r, &q, &minimize_presentation(&p));
        }
        Command::Prb { rep, beta } => {
            let q = load_quiver(&rep.quiver)?;
            let rr = load_rep(&q, &rep.dims, &rep.rep)?;
            let beta = format::parse_dims(&q, beta)?;
            let f = p_r_beta(&q, &rr, &beta)?;
            r.line(format!("beta {beta}"));
            r.line(format!("P = {f}"));
            r.set("poly", f.to_string());
        }
        Command::Perp {
            quiver,
            beta,
            point,
            map,
            rep,
            dims,
            cross_validate,
            truncation,
        } => {
            let q = load_quiver(quiver)?;
            let beta = format::parse_dims(&q, beta)?;
            let amb = Ambient::new(q.clone(), beta)?;
            let p = format::point_from_json(&amb, &read(point)?)?;
            let pres = match (map, rep, dims) {
                (Some(m), _, _) => PresentationData::from_map(&q, load_map(&q, m)?, *truncation)?,
                (None, Some(rp), Some(d)) => canonical_presentation(&q, &load_rep(&q, d, rp)?)?,
                _ => {
                    return Err(Error::Invalid(
                        "give either --map or --rep with --dims".into(),
                    ))
                }
            };
            let v = perp_check(&q, &pres, &p, *cross_validate)?;
            r.line(format!("map {}", pres.phi));
            r.line(format!("det R_p(phi) = {}", rational::render(&v.det)));
            r.line(format!("perpendicular: {}", v.perpendicular));
            if let (Some(h), Some(e)) = (v.hom, v.ext) {
                r.line(format!(
                    "cross-validation: dim Hom = {h}, dim Ext = {e}, consistent"
                ));
            }
            r.set("perpendicular", v.perpendicular);
            r.set("det", rational::render(&v.det));
            r.set("hom", v.hom);
            r.set("ext", v.ext);
        }
        Command::Semistable {
            quiver,
            beta,
            point,
            bounds,
        } => {
            let q = load_quiver(quiver)?;
            let beta = format::parse_dims(&q, beta)?;
            let amb = Ambient::new(q.clone(), beta.clone())?;
            let p = format::point_from_json(&amb, &read(point)?)?;
            let b = bounds.search();
            match semistable_search(&q, &beta, &p, &b)? {
                SemistableOutcome::Witness(w) => {
                    r.line("WITNESS: the point is semistable");
                    r.line(format!("map {}", w.presentation.phi));
                    r.line(format!("P = {}", w.poly));
                    r.line(format!("P(p) = {}", rational::render(&w.value)));
                    r.line(format!("presentation {}", w.presentation.status));
                    r.set("result", "witness");
                    r.set("map", format::map_to_json(&q, &w.presentation.phi));
                    r.set("poly", w.poly.to_string());
                    r.set("value", rational::render(&w.value));
                    if let Some(t) = &w.cokernel {
                        r.line(format!("T = cok phi_hat, dimension vector {}", t.alpha()));
                        r.line(format!("T = {}", inline_point(t)));
                        r.set("cokernel", format::point_to_json(t));
                    }
                }
                SemistableOutcome::Undetermined {
                    examined,
                    truncated,
                    ..
                } => {
                    r.line("UNDETERMINED: no witness within the bounds (inconclusive)");
                    r.line(format!(
                        "searched {examined} maps, paths of length <= {}, multiplicity <= {}{}",
                        b.max_path_len,
                        b.max_mult,
                        if truncated {
                            ", stopped at the candidate cap"
                        } else {
                            ""
                        }
                    ));
                    r.set("result", "undetermined");
                    r.set("inconclusive", true);
                    r.set("examined", examined);
                }
            }
        }
    }
    Ok(r)
}

fn inline_matrix(m: &crate::linalg::Matrix) -> String {
    let rows: Vec<String> = m
        .row_vecs()
        .iter()
        .map(|row| {
            row.iter()
                .map(rational::render)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

fn inline_point(p: &RepPoint) -> String {
    p.maps()
        .iter()
        .map(|(a, m)| format!("{a}: {}", inline_matrix(m)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn describe_presentation(r: &mut Report, q: &Quiver, p: &PresentationData) {
    let mut t = String::new();
    writeln!(t, "map {}", p.phi).unwrap();
    writeln!(t, "phi_hat {}", p.status).unwrap();
    if let Some(d) = &p.cokernel_dims {
        writeln!(t, "cokernel dimension vector {d}").unwrap();
    }
    r.text.push_str(&t);
    r.set("map", format::map_to_json(q, &p.phi));
    r.set("status", p.status.to_string());
    r.set(
        "cokernel_dims",
        p.cokernel_dims.as_ref().map(|d| d.to_string()),
    );
}
