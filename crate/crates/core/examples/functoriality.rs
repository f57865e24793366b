//! Pulling a determinantal semi-invariant back along a functor
//! `add(Q') -> add(Q)` agrees with the semi-invariant of the image map.

use std::collections::BTreeMap;

use qsi::format::{map_from_strs, parse_path_expr};
use qsi::invariants::{apply_functor_map, apply_functor_poly, det_semiinvariant};
use qsi::poly::Ambient;
use qsi::quiver::{id, DimVector, FunctorData, Quiver};

fn main() -> qsi::Result<()> {
    let k2 = Quiver::kronecker();
    let a3 = Quiver::a3();
    // a -> a.b, b -> 2 a.b: a functor from add(K2) to add(A3).
    let vertices: BTreeMap<_, _> = [("1", "1"), ("2", "3")]
        .iter()
        .map(|(v, w)| (id(v), id(w)))
        .collect();
    let arrows: BTreeMap<_, _> = [("a", "a.b"), ("b", "2*a.b")]
        .iter()
        .map(|(a, e)| Ok((id(a), parse_path_expr(&a3, e)?)))
        .collect::<qsi::Result<_>>()?;
    let s = FunctorData::new(k2.clone(), a3.clone(), vertices, arrows)?;

    let alpha = DimVector::from_values(&a3, &[2, 2, 2])?;
    let amb = Ambient::new(a3, alpha.clone())?;
    let amb_k2 = Ambient::new(k2.clone(), s.apply_dim(&alpha)?)?;
    let phi = map_from_strs(&k2, &["1"], &["2"], &[&["a - b"]])?;

    let lhs = apply_functor_poly(&s, &amb, &det_semiinvariant(&amb_k2, &phi)?)?;
    let rhs = det_semiinvariant(&amb, &apply_functor_map(&s, &phi)?)?;
    println!("s(P)       = {lhs}");
    println!("P_(s(phi)) = {rhs}");
    println!("equal: {}", lhs == rhs);
    Ok(())
}
