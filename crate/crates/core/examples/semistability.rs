//! Searching for semistability witnesses on K2 and L1.

use qsi::linalg::Matrix;
use qsi::quiver::Quiver;
use qsi::repthy::{representation, semistable_search, SemistableOutcome};
use qsi::spanning::SearchBounds;

fn report(q: &Quiver, p: &qsi::poly::RepPoint, bounds: &SearchBounds) -> qsi::Result<()> {
    match semistable_search(q, p.alpha(), p, bounds)? {
        SemistableOutcome::Witness(w) => {
            println!(
                "witness {}  P = {}  P(p) = {}",
                w.presentation.phi, w.poly, w.value
            );
            if let Some(t) = &w.cokernel {
                println!("  T has dimension vector {}", t.alpha());
            }
        }
        SemistableOutcome::Undetermined { examined, .. } => {
            println!("undetermined after {examined} maps")
        }
    }
    Ok(())
}

fn main() -> qsi::Result<()> {
    let k2 = Quiver::kronecker();
    let small = SearchBounds {
        max_mult: 2,
        ..SearchBounds::default()
    };
    let p = representation(&k2, &[1, 1], &[("a", Matrix::from_i64(1, 1, &[1]))])?;
    report(&k2, &p, &small)?;
    report(&k2, &representation(&k2, &[1, 1], &[])?, &small)?;

    let l1 = Quiver::one_loop();
    report(
        &l1,
        &representation(&l1, &[1], &[])?,
        &SearchBounds::default(),
    )?;
    Ok(())
}
