//! Standard pairs and their canonical semi-invariants.

use qsi::invariants::{standard_pair_check, standard_semiinvariant};
use qsi::poly::Ambient;
use qsi::quiver::{DimVector, Quiver};

fn main() -> qsi::Result<()> {
    for (q, alpha) in [
        (Quiver::one_loop(), vec![2]),
        (Quiver::kronecker(), vec![2, 2]),
        (Quiver::kronecker(), vec![1, 2]),
    ] {
        let amb = Ambient::new(q.clone(), DimVector::from_values(&q, &alpha)?)?;
        match standard_pair_check(&amb) {
            Ok(kind) => println!(
                "{} {:?}: {}",
                amb.alpha(),
                kind,
                standard_semiinvariant(&amb)?
            ),
            Err(e) => println!("{}: {e}", amb.alpha()),
        }
    }
    Ok(())
}
