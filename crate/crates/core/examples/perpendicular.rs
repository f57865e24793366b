//! `P_{R,beta}` for the simple S_1 of the Kronecker quiver, and the
//! determinant test for perpendicularity checked against Hom and Ext.

use qsi::poly::{Ambient, RepPoint};
use qsi::quiver::{DimVector, Quiver};
use qsi::repthy::{canonical_presentation, p_r_beta, perp_check, representation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qsi::Result<()> {
    let q = Quiver::kronecker();
    let s1 = representation(&q, &[1, 0], &[])?;
    let beta = DimVector::from_values(&q, &[2, 1])?;
    println!("P = {}", p_r_beta(&q, &s1, &beta)?);

    let pres = canonical_presentation(&q, &s1)?;
    let amb = Ambient::new(q.clone(), beta)?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..6 {
        let p = RepPoint::random(&amb, &mut rng, 1);
        let v = perp_check(&q, &pres, &p, true)?;
        println!(
            "det {} perpendicular {} Hom {:?} Ext {:?}",
            v.det, v.perpendicular, v.hom, v.ext
        );
    }
    Ok(())
}
