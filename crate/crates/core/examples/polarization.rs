//! Polarizing a polynomial of A-degree (2,1) and restituting it.

use qsi::poly::{parse_poly, ADegree, Ambient};
use qsi::quiver::{DimVector, Quiver};
use qsi::spanning::{build_q_chi, polarize, restitute};

fn main() -> qsi::Result<()> {
    let q = Quiver::kronecker();
    let amb = Ambient::new(q.clone(), DimVector::from_values(&q, &[1, 2])?)?;
    let chi = ADegree::new(&[("a", 2), ("b", 1)]);
    let qc = build_q_chi(&q, &chi)?;
    let f = parse_poly("x[a,1,1]^2*x[b,1,2] - 3*x[a,1,1]*x[a,1,2]*x[b,1,1]")?;
    let g = polarize(&qc, &amb, &f)?;
    let h = restitute(&qc, &amb, &g)?;
    println!("Q_chi {}", qc.quiver);
    println!("f          = {f}");
    println!("polarized  = {g}");
    println!("restituted = {h}");
    println!("factor {}", qsi::rational::render(&qc.restitution_factor()));
    Ok(())
}
