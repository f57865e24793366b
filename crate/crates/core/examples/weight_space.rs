//! Dimensions of the weight spaces of the Kronecker quiver at (2,2),
//! computed from infinitesimal invariance alone.

use qsi::poly::{ADegree, Ambient};
use qsi::quiver::{DimVector, Quiver};
use qsi::spanning::weight_space_basis;

fn main() -> qsi::Result<()> {
    let q = Quiver::kronecker();
    let amb = Ambient::new(q.clone(), DimVector::from_values(&q, &[2, 2])?)?;
    for total in 1..=4 {
        for chi in ADegree::all_with_total(&q, total) {
            let basis = weight_space_basis(&amb, &chi)?;
            println!("chi {chi}: dim {}", basis.len());
        }
    }
    Ok(())
}
