//! Traces along cycles of the one-loop quiver, written as an exact
//! combination of determinants `det(I + lambda X)`.

use qsi::invariants::trace_from_dets;
use qsi::poly::Ambient;
use qsi::quiver::{DimVector, Path, Quiver};
use qsi::rational::render;

fn main() -> qsi::Result<()> {
    let q = Quiver::one_loop();
    let amb = Ambient::new(q.clone(), DimVector::from_values(&q, &[3])?)?;
    for len in 1..=3 {
        let arrows = vec!["l"; len];
        let l = Path::from_arrows(&q, &arrows)?;
        let cert = trace_from_dets(&amb, &l)?;
        let coeffs: Vec<String> = cert.coefficients.iter().map(render).collect();
        println!(
            "{l}: coefficients [{}], holds {}",
            coeffs.join(", "),
            cert.holds()
        );
    }
    Ok(())
}
