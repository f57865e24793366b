//! Hom and Ext between random representations of A3, by the Euler defect and
//! by a projective presentation.

use qsi::poly::{Ambient, RepPoint};
use qsi::quiver::{DimVector, Quiver};
use qsi::repthy::{ext_dim, hom_basis, hom_ext_via_presentation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> qsi::Result<()> {
    let q = Quiver::a3();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let mut rep = || -> qsi::Result<RepPoint> {
            let d: Vec<usize> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
            let amb = Ambient::new(q.clone(), DimVector::from_values(&q, &d)?)?;
            Ok(RepPoint::random(&amb, &mut rng, 2))
        };
        let (r, s) = (rep()?, rep()?);
        let hom = hom_basis(&q, &r, &s)?.len();
        let ext = ext_dim(&q, &r, &s)?;
        let via = hom_ext_via_presentation(&q, &r, &s)?;
        println!(
            "{} -> {}: Hom {hom}, Ext {ext}; presentation {:?}",
            r.alpha(),
            s.alpha(),
            via
        );
    }
    Ok(())
}
