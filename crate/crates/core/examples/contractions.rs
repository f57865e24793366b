//! Every contraction datum on (L1, 2) and (A3, (1,1,1)), with `f_Gamma`
//! compared against its determinantal form.

use qsi::poly::Ambient;
use qsi::quiver::{DimVector, Quiver};
use qsi::spanning::{contraction_check, enumerate_gamma, phi_gamma};

fn main() -> qsi::Result<()> {
    for (q, alpha) in [(Quiver::one_loop(), vec![2]), (Quiver::a3(), vec![1, 1, 1])] {
        let amb = Ambient::new(q.clone(), DimVector::from_values(&q, &alpha)?)?;
        for g in enumerate_gamma(&amb) {
            let pg = phi_gamma(&amb, &g)?;
            let t = contraction_check(&amb, &g)?;
            println!("{g}");
            println!("  f   = {}", t.f);
            println!("  Phi = {}  cycles {}", pg.phi, pg.cycles.len());
            println!("  sign {:?}", t.sign);
        }
    }
    Ok(())
}
