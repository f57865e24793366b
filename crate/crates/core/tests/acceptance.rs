//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails. All arithmetic is exact.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;

use common::*;
use qsi::invariants::{
    apply_functor_map, apply_functor_poly, block_diag, check_semiinvariance, det_semiinvariant,
    numeric_semiinvariance, trace_from_dets, weight_of_map, GroupElement,
};
use qsi::poly::{ADegree, Ambient, Poly, RepPoint};
use qsi::quiver::{AddMap, DimVector, Quiver};
use qsi::repthy::{
    canonical_presentation, direct_sum, ext_dim, hom_basis, hom_ext_via_presentation,
    minimize_presentation, perp_check, presentation_poly, semistable_search, InjectivityStatus,
    PresentationData, SemistableOutcome,
};
use qsi::spanning::{
    build_q_chi, contraction_check, enumerate_gamma, phi_gamma, polarize, restitute, span_check,
    weight_space_basis, SearchBounds, Strategy,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Outcome { pass, detail }
    }
}

/// Determinantal semi-invariants met along the way, rechecked by the
/// semi-invariance criterion.
#[derive(Default)]
struct Ctx {
    maps: BTreeMap<String, (Ambient, AddMap)>,
}

impl Ctx {
    fn collect(&mut self, amb: &Ambient, phi: &AddMap) {
        let key = format!("{} {} {}", amb.quiver(), amb.alpha(), phi);
        self.maps
            .entry(key)
            .or_insert_with(|| (amb.clone(), phi.clone()));
    }
}

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + criterion)
}

fn err(e: qsi::Error) -> String {
    format!("error: {e}")
}

fn fixture_spaces() -> Vec<Ambient> {
    vec![
        amb(&Quiver::kronecker(), &[2, 2]),
        amb(&Quiver::one_loop(), &[2]),
        amb(&Quiver::a3(), &[1, 1, 1]),
    ]
}

fn span_equality(_: &mut Ctx) -> Result<Outcome, String> {
    let k2 = Quiver::kronecker();
    let l1 = Quiver::one_loop();
    let a3 = Quiver::a3();
    // expected oracle dimensions, worked out by hand from the generators
    // of each semi-invariant ring
    let suite: Vec<(Quiver, Vec<usize>, Vec<(&str, usize)>, usize)> = vec![
        (k2.clone(), vec![1, 1], vec![("a", 1), ("b", 1)], 1),
        (k2.clone(), vec![2, 2], vec![("a", 1), ("b", 1)], 1),
        (k2.clone(), vec![2, 2], vec![("a", 2)], 1),
        (k2.clone(), vec![2, 2], vec![("b", 2)], 1),
        (k2.clone(), vec![2, 2], vec![("a", 2), ("b", 2)], 2),
        (l1.clone(), vec![1], vec![("l", 1)], 1),
        (l1.clone(), vec![1], vec![("l", 2)], 1),
        (l1.clone(), vec![2], vec![("l", 1)], 1),
        (l1.clone(), vec![2], vec![("l", 2)], 2),
        (a3.clone(), vec![1, 1, 1], vec![("a", 1), ("b", 1)], 1),
    ];
    let mut pass = true;
    let mut lines = Vec::new();
    for (q, alpha, chi, expected) in suite {
        let a = amb(&q, &alpha);
        let chi = ADegree::new(&chi);
        let rep = span_check(&a, &chi, &Strategy::Gamma).map_err(err)?;
        let ok = rep.equal && rep.oracle_dim == expected;
        pass &= ok;
        lines.push(format!(
            "{} {} {}: oracle={} span={} {}",
            q,
            a.alpha(),
            chi,
            rep.oracle_dim,
            rep.span_dim,
            rep.verdict()
        ));
    }
    Ok(Outcome::new(pass, lines.join("; ")))
}

fn contraction_identity(ctx: &mut Ctx) -> Result<Outcome, String> {
    let spaces = vec![
        amb(&Quiver::kronecker(), &[2, 2]),
        amb(&Quiver::one_loop(), &[1]),
        amb(&Quiver::one_loop(), &[2]),
        amb(&Quiver::a3(), &[1, 1, 1]),
    ];
    let degrees: Vec<Vec<Vec<(&str, usize)>>> = vec![
        vec![
            vec![("a", 1), ("b", 1)],
            vec![("a", 2)],
            vec![("a", 2), ("b", 2)],
        ],
        vec![vec![("l", 1)], vec![("l", 2)], vec![("l", 3)]],
        vec![vec![("l", 1)], vec![("l", 2)], vec![("l", 3)]],
        vec![vec![("a", 1), ("b", 1)]],
    ];
    let (mut total, mut held, mut with_cycles, mut with_paths) = (0, 0, 0, 0);
    let mut lines = Vec::new();
    for (a, chis) in spaces.iter().zip(degrees) {
        // the quiver itself, then its polarizations
        let mut targets = vec![a.clone()];
        for chi in chis {
            let qc = build_q_chi(a.quiver(), &ADegree::new(&chi)).map_err(err)?;
            targets.push(qc.ambient(a).map_err(err)?);
        }
        let mut here = 0;
        for t in &targets {
            for g in enumerate_gamma(t) {
                let check = gamma_holds(t, &g)?;
                total += 1;
                here += 1;
                held += usize::from(check);
                if !g.k_pairs.is_empty() {
                    let pg = phi_gamma(t, &g).map_err(err)?;
                    if !pg.cycles.is_empty() {
                        with_cycles += 1;
                    }
                    if pg.reduced.arrows().iter().any(|x| {
                        pg.functor
                            .arrow_image(&x.id)
                            .map(|c| c.max_len() > 1)
                            .unwrap_or(false)
                    }) {
                        with_paths += 1;
                    }
                    ctx.collect(t, &pg.phi);
                } else {
                    ctx.collect(t, &phi_gamma(t, &g).map_err(err)?.phi);
                }
            }
        }
        lines.push(format!("{} {}: {here}", a.quiver(), a.alpha()));
    }
    let pass = total > 0 && held == total && with_cycles > 0 && with_paths > 0;
    Ok(Outcome::new(
        pass,
        format!(
            "{held}/{total} hold ({}), K with cycles {with_cycles}, K with open paths {with_paths}",
            lines.join(", ")
        ),
    ))
}

fn gamma_holds(t: &Ambient, g: &qsi::spanning::GammaData) -> Result<bool, String> {
    Ok(contraction_check(t, g).map_err(err)?.holds())
}

fn restitution(_: &mut Ctx) -> Result<Outcome, String> {
    let mut r = rng(3);
    let (mut total, mut held) = (0, 0);
    for a in fixture_spaces() {
        let q = a.quiver().clone();
        for _ in 0..20 {
            let total_deg = r.gen_range(1..=4);
            let chis = ADegree::all_with_total(&q, total_deg);
            let chi = chis.choose(&mut r).unwrap();
            let f = random_homogeneous(&mut r, &a, chi, 5);
            let qc = build_q_chi(&q, chi).map_err(err)?;
            let back = restitute(&qc, &a, &polarize(&qc, &a, &f).map_err(err)?).map_err(err)?;
            total += 1;
            held += usize::from(back == f.scale(&qc.restitution_factor()));
        }
    }
    Ok(Outcome::new(
        held == total,
        format!("{held}/{total} identities"),
    ))
}

fn functoriality(ctx: &mut Ctx) -> Result<Outcome, String> {
    let mut r = rng(4);
    let (mut total, mut held) = (0, 0);
    for a in fixture_spaces() {
        let q = a.quiver().clone();
        let mut done = 0;
        while done < 20 {
            let qs = fixtures().choose(&mut r).unwrap().clone();
            let s = random_functor(&mut r, &qs, &q, 2);
            let pulled = s.apply_dim(a.alpha()).map_err(err)?;
            if pulled.total() > 6 {
                continue;
            }
            let Some(phi) = random_square_map(&mut r, &qs, &pulled, 1, 2) else {
                continue;
            };
            let a_src = Ambient::new(qs, pulled).map_err(err)?;
            let image = apply_functor_map(&s, &phi).map_err(err)?;
            let lhs = apply_functor_poly(&s, &a, &det_semiinvariant(&a_src, &phi).map_err(err)?)
                .map_err(err)?;
            let rhs = det_semiinvariant(&a, &image).map_err(err)?;
            ctx.collect(&a_src, &phi);
            ctx.collect(&a, &image);
            done += 1;
            total += 1;
            held += usize::from(lhs == rhs);
        }
    }
    Ok(Outcome::new(
        held == total,
        format!("{held}/{total} identities"),
    ))
}

fn semi_invariance(ctx: &mut Ctx) -> Result<Outcome, String> {
    let mut r = rng(5);
    let (mut polys, mut evals, mut bad) = (0, 0, 0);
    for (a, phi) in ctx.maps.values() {
        let f = det_semiinvariant(a, phi).map_err(err)?;
        if f.is_zero() {
            continue;
        }
        let psi = weight_of_map(a.quiver(), phi);
        polys += 1;
        for _ in 0..50 {
            let g = GroupElement::random(a, &mut r, 2);
            let p = RepPoint::random(a, &mut r, 2);
            evals += 1;
            bad += usize::from(!numeric_semiinvariance(a, &f, &psi, &g, &p).map_err(err)?);
        }
        bad += usize::from(check_semiinvariance(a, &f, &psi).map_err(err)?.is_some());
    }
    Ok(Outcome::new(
        bad == 0 && polys > 0,
        format!("{polys} semi-invariants, {evals} evaluations, {bad} failures"),
    ))
}

fn blocks_and_traces(ctx: &mut Ctx) -> Result<Outcome, String> {
    let mut r = rng(6);
    let (mut blocks, mut block_ok) = (0, 0);
    for a in fixture_spaces() {
        let q = a.quiver().clone();
        let mut done = 0;
        while done < 10 {
            let (Some(phi), Some(mu)) = (
                random_square_map(&mut r, &q, a.alpha(), 1, 2),
                random_square_map(&mut r, &q, a.alpha(), 1, 2),
            ) else {
                continue;
            };
            let joint = block_diag(&q, &phi, &mu).map_err(err)?;
            let lhs = det_semiinvariant(&a, &joint).map_err(err)?;
            let rhs = &det_semiinvariant(&a, &phi).map_err(err)?
                * &det_semiinvariant(&a, &mu).map_err(err)?;
            ctx.collect(&a, &joint);
            done += 1;
            blocks += 1;
            block_ok += usize::from(lhs == rhs);
        }
    }
    let l1 = Quiver::one_loop();
    let (mut certs, mut cert_ok) = (0, 0);
    for n in 1..=3 {
        let a = amb(&l1, &[n]);
        for cycle in l1.enumerate_cycles(3) {
            let c = trace_from_dets(&a, &cycle).map_err(err)?;
            certs += 1;
            cert_ok += usize::from(c.holds());
        }
    }
    Ok(Outcome::new(
        block_ok == blocks && cert_ok == certs,
        format!("block products {block_ok}/{blocks}, trace certificates {cert_ok}/{certs}"),
    ))
}

fn hom_ext(_: &mut Ctx) -> Result<Outcome, String> {
    let mut r = rng(7);
    let (mut total, mut held) = (0, 0);
    let mut ext_positive = 0;
    for i in 0..50 {
        let q = if i % 2 == 0 {
            Quiver::kronecker()
        } else {
            Quiver::a3()
        };
        let dr = random_dims(&mut r, &q, 0, 3);
        let ds = random_dims(&mut r, &q, 0, 3);
        let rr = random_rep(&mut r, &q, &dr, 2);
        let ss = random_rep(&mut r, &q, &ds, 2);
        let hom = hom_basis(&q, &rr, &ss).map_err(err)?.len();
        let ext = ext_dim(&q, &rr, &ss).map_err(err)?;
        let via = hom_ext_via_presentation(&q, &rr, &ss).map_err(err)?;
        total += 1;
        ext_positive += usize::from(ext > 0);
        held += usize::from(hom as i64 - ext as i64 == q.euler_form(&dr, &ds) && via == (hom, ext));
    }
    Ok(Outcome::new(
        held == total,
        format!("{held}/{total} pairs agree, {ext_positive} with Ext nonzero"),
    ))
}

/// A random point, sometimes degenerate so both verdicts occur.
fn random_point(r: &mut ChaCha8Rng, a: &Ambient) -> RepPoint {
    match r.gen_range(0..4) {
        0 => RepPoint::zero(a),
        1 => RepPoint::random(a, r, 1),
        _ => RepPoint::random(a, r, 3),
    }
}

fn perpendicularity(ctx: &mut Ctx) -> Result<Outcome, String> {
    let mut r = rng(8);
    let (mut total, mut perp) = (0, 0);
    while total < 50 {
        let q = if total % 2 == 0 {
            Quiver::kronecker()
        } else {
            Quiver::a3()
        };
        let beta = random_dims(&mut r, &q, 1, 2);
        let a = Ambient::new(q.clone(), beta.clone()).map_err(err)?;
        let pres = if r.gen_bool(0.5) {
            let Some(phi) = random_square_map(&mut r, &q, &beta, 2, 2) else {
                continue;
            };
            PresentationData::from_map(&q, phi, 4).map_err(err)?
        } else {
            // a representation orthogonal to beta in the Euler form
            let dr = random_dims(&mut r, &q, 0, 2);
            if dr.is_zero() || q.euler_form(&dr, &beta) != 0 {
                continue;
            }
            let rr = random_rep(&mut r, &q, &dr, 2);
            minimize_presentation(&canonical_presentation(&q, &rr).map_err(err)?)
        };
        if pres.status != InjectivityStatus::Injective {
            continue;
        }
        let p = random_point(&mut r, &a);
        // fails with an error when the two verdicts differ
        let v = perp_check(&q, &pres, &p, true).map_err(err)?;
        ctx.collect(&a, &pres.phi);
        total += 1;
        perp += usize::from(v.perpendicular);
    }
    Ok(Outcome::new(
        perp > 0 && perp < total,
        format!("{total}/{total} verdicts match ({perp} perpendicular)"),
    ))
}

fn up_to_scalar(f: &Poly, g: &Poly) -> bool {
    (f.is_zero() && g.is_zero()) || f.proportional_to(g).is_some()
}

fn p_r_beta_props(ctx: &mut Ctx) -> Result<Outcome, String> {
    let mut r = rng(9);
    let k2 = Quiver::kronecker();
    let a3 = Quiver::a3();
    let k2_beta = DimVector::from_values(&k2, &[2, 2]).unwrap();
    let a3_beta = DimVector::from_values(&a3, &[1, 1, 1]).unwrap();
    let (mut pres_total, mut pres_ok, mut nonzero) = (0, 0, 0);
    for i in 0..20 {
        let (q, beta, dr) = if i % 2 == 0 {
            let k = r.gen_range(1..=2);
            (&k2, &k2_beta, vec![k, k])
        } else {
            (
                &a3,
                &a3_beta,
                vec![r.gen_range(0..=2), r.gen_range(1..=2), 0],
            )
        };
        let dr = DimVector::from_values(q, &dr).unwrap();
        let rr = random_rep(&mut r, q, &dr, 2);
        let canon = canonical_presentation(q, &rr).map_err(err)?;
        let mini = minimize_presentation(&canon);
        let f1 = presentation_poly(q, &canon, beta).map_err(err)?;
        let f2 = presentation_poly(q, &mini, beta).map_err(err)?;
        let a = Ambient::new(q.clone(), beta.clone()).map_err(err)?;
        ctx.collect(&a, &mini.phi);
        pres_total += 1;
        nonzero += usize::from(!f1.is_zero());
        pres_ok += usize::from(up_to_scalar(&f1, &f2));
    }
    let (mut sums, mut sums_ok) = (0, 0);
    for i in 0..10 {
        let (q, beta, d1, d2) = if i % 2 == 0 {
            (&k2, &k2_beta, vec![1, 1], vec![1, 1])
        } else {
            (&a3, &a3_beta, vec![1, 0, 0], vec![0, 1, 0])
        };
        let r1 = random_rep(&mut r, q, &DimVector::from_values(q, &d1).unwrap(), 2);
        let r2 = random_rep(&mut r, q, &DimVector::from_values(q, &d2).unwrap(), 2);
        let sum = direct_sum(q, &r1, &r2).map_err(err)?;
        let pb = |x: &RepPoint| -> Result<Poly, String> {
            let pres = minimize_presentation(&canonical_presentation(q, x).map_err(err)?);
            presentation_poly(q, &pres, beta).map_err(err)
        };
        let lhs = pb(&sum)?;
        let rhs = &pb(&r1)? * &pb(&r2)?;
        sums += 1;
        sums_ok += usize::from(!lhs.is_zero() && up_to_scalar(&lhs, &rhs));
    }
    Ok(Outcome::new(
        pres_ok == pres_total && sums_ok == sums,
        format!("presentations {pres_ok}/{pres_total} ({nonzero} nonzero), direct sums {sums_ok}/{sums}"),
    ))
}

fn semistability(ctx: &mut Ctx) -> Result<Outcome, String> {
    let k2 = Quiver::kronecker();
    let a = amb(&k2, &[1, 1]);
    let beta = a.alpha().clone();
    let p10 = qsi::repthy::representation(
        &k2,
        &[1, 1],
        &[("a", qsi::linalg::Matrix::from_i64(1, 1, &[1]))],
    )
    .map_err(err)?;
    let bounds = SearchBounds {
        max_mult: 2,
        ..SearchBounds::default()
    };
    let mut lines = Vec::new();
    let mut pass = true;
    match semistable_search(&k2, &beta, &p10, &bounds).map_err(err)? {
        SemistableOutcome::Witness(w) => {
            let t = w.cokernel.clone().ok_or("witness without a cokernel")?;
            let hom = hom_basis(&k2, &t, &p10).map_err(err)?.len();
            let ext = ext_dim(&k2, &t, &p10).map_err(err)?;
            pass &= hom == 0 && ext == 0 && w.value != qsi::rational::int(0);
            ctx.collect(&a, &w.presentation.phi);
            lines.push(format!(
                "(1,0): witness {} with T of dims {}, Hom {hom}, Ext {ext}",
                w.presentation.phi,
                t.alpha()
            ));
        }
        SemistableOutcome::Undetermined { .. } => {
            pass = false;
            lines.push("(1,0): no witness".into());
        }
    }
    let origin = RepPoint::zero(&a);
    match semistable_search(&k2, &beta, &origin, &bounds).map_err(err)? {
        SemistableOutcome::Undetermined { examined, .. } => {
            lines.push(format!("origin: undetermined after {examined} maps"))
        }
        SemistableOutcome::Witness(_) => {
            pass = false;
            lines.push("origin: unexpected witness".into());
        }
    }
    let mut checked = 0;
    for total in 1..=3 {
        for chi in ADegree::all_with_total(&k2, total) {
            for f in weight_space_basis(&a, &chi).map_err(err)? {
                checked += 1;
                pass &= f.vanishes_at(&origin).map_err(err)?;
            }
        }
    }
    lines.push(format!(
        "{checked} oracle semi-invariants vanish at the origin"
    ));
    Ok(Outcome::new(pass, lines.join("; ")))
}

type Criterion = fn(&mut Ctx) -> Result<Outcome, String>;

const CRITERIA: [(&str, Criterion); 10] = [
    ("span equality", span_equality),
    ("contraction identity", contraction_identity),
    ("restitution", restitution),
    ("functoriality", functoriality),
    ("semi-invariance", semi_invariance),
    ("block products and traces", blocks_and_traces),
    ("hom, ext and euler form", hom_ext),
    ("perpendicularity", perpendicularity),
    ("presentation polynomials", p_r_beta_props),
    ("semistability", semistability),
];

/// Runs criteria 1 to 10 in order. Semi-invariance runs after everything
/// that feeds it.
fn run_suite() -> Vec<(String, bool, String)> {
    let mut ctx = Ctx::default();
    let order = [0, 1, 2, 3, 5, 6, 7, 8, 9, 4];
    let mut out: Vec<Option<(String, bool, String)>> = vec![None; CRITERIA.len()];
    for i in order {
        let (name, f) = CRITERIA[i];
        let (pass, detail) = match f(&mut ctx) {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, e),
        };
        out[i] = Some((name.to_string(), pass, detail));
    }
    out.into_iter().map(Option::unwrap).collect()
}

fn render(results: &[(String, bool, String)]) -> String {
    results
        .iter()
        .enumerate()
        .map(|(i, (name, pass, detail))| {
            format!(
                "{} {:>2} {name}: {detail}\n",
                if *pass { "PASS" } else { "FAIL" },
                i + 1
            )
        })
        .collect()
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

fn main() -> ExitCode {
    let results = run_suite();
    let report = render(&results);
    print!("{report}");
    let one = in_pool(1, || render(&run_suite()));
    let three = in_pool(3, || render(&run_suite()));
    let same = one == report && three == report;
    println!(
        "{} 11 determinism: reports with 1, 3 and default workers are {}",
        if same { "PASS" } else { "FAIL" },
        if same { "byte-identical" } else { "different" }
    );
    if results.iter().all(|r| r.1) && same {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
