//! Standard presentations, their minimization, cokernels and injectivity of
//! the induced map of projectives.

use qsi::format::map_from_strs;
use qsi::linalg::Matrix;
use qsi::quiver::Quiver;
use qsi::repthy::{
    canonical_presentation, cokernel, injectivity_check, minimize_presentation, representation,
};

fn main() -> qsi::Result<()> {
    let k2 = Quiver::kronecker();
    let r = representation(
        &k2,
        &[1, 2],
        &[
            ("a", Matrix::from_i64(1, 2, &[1, 0])),
            ("b", Matrix::from_i64(1, 2, &[0, 1])),
        ],
    )?;
    let p = canonical_presentation(&k2, &r)?;
    println!("standard  {}", p.phi);
    let m = minimize_presentation(&p);
    println!("minimized {}", m.phi);
    println!("cokernel dims {}", cokernel(&k2, &m.phi)?.alpha());

    let l1 = Quiver::one_loop();
    for e in ["e_1 + l", "l", "0"] {
        let phi = map_from_strs(&l1, &["1"], &["1"], &[&[e]])?;
        println!("{e}: {}", injectivity_check(&l1, &phi, 4)?);
    }
    Ok(())
}
