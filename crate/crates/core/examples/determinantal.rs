//! The determinantal semi-invariant of a map on the Kronecker quiver, its
//! weight, and a numeric check of `P(g.p) = chi(g) P(p)`.

use qsi::format::map_from_strs;
use qsi::invariants::{
    check_semiinvariance, det_semiinvariant, numeric_semiinvariance, weight_of_map, GroupElement,
};
use qsi::poly::{Ambient, RepPoint};
use qsi::quiver::{DimVector, Quiver};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qsi::Result<()> {
    let q = Quiver::kronecker();
    let amb = Ambient::new(q.clone(), DimVector::from_values(&q, &[2, 2])?)?;
    let phi = map_from_strs(&q, &["1"], &["2"], &[&["a + 2*b"]])?;

    let f = det_semiinvariant(&amb, &phi)?;
    let w = weight_of_map(&q, &phi);
    println!("P = {f}");
    println!("weight {w}");
    println!("derivation test: {:?}", check_semiinvariance(&amb, &f, &w)?);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = GroupElement::random(&amb, &mut rng, 4);
    let p = RepPoint::random(&amb, &mut rng, 4);
    println!(
        "P(g.p) = chi(g) P(p): {}",
        numeric_semiinvariance(&amb, &f, &w, &g, &p)?
    );
    Ok(())
}
