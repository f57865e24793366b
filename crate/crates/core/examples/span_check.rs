//! Span checks with both generator strategies on small fixtures.

use qsi::poly::{ADegree, Ambient};
use qsi::quiver::{DimVector, Quiver};
use qsi::spanning::{span_check, SearchBounds, Strategy};

fn main() -> qsi::Result<()> {
    let cases = [
        (Quiver::kronecker(), vec![2, 2], vec![("a", 1), ("b", 1)]),
        (Quiver::kronecker(), vec![2, 2], vec![("a", 2), ("b", 2)]),
        (Quiver::one_loop(), vec![2], vec![("l", 2)]),
        (Quiver::a3(), vec![1, 1, 1], vec![("a", 1), ("b", 1)]),
    ];
    for (q, alpha, chi) in cases {
        let amb = Ambient::new(q.clone(), DimVector::from_values(&q, &alpha)?)?;
        let chi = ADegree::new(&chi);
        for strategy in [Strategy::Gamma, Strategy::Maps(SearchBounds::default())] {
            let r = span_check(&amb, &chi, &strategy)?;
            println!(
                "{} chi {}: oracle={} span={} {}",
                amb.alpha(),
                chi,
                r.oracle_dim,
                r.span_dim,
                r.verdict()
            );
        }
    }
    Ok(())
}
