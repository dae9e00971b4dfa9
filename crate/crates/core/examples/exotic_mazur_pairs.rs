//! Exotic pairs of traces X_n(P_n(K)) and X_n(Q_n(K)) for torus knots.

use knotrace::formulas::{pq_verdict, PqVerdict};
use knotrace::library::staircase;

fn main() -> knotrace::Result<()> {
    for m in 1..=3 {
        let k = staircase(m);
        for n in [0, -1, -2, 1] {
            match pq_verdict(&k, n)? {
                PqVerdict::Exotic { nu_p_lower, nu_q, certificate } => {
                    println!("{} n={n:>2}: exotic, nu(P_n) >= {nu_p_lower}, nu(Q_n) = {nu_q}", k.name());
                    if m == 1 && n == 0 {
                        certificate.iter().for_each(|l| println!("  {l}"));
                    }
                }
                PqVerdict::NotApplicable { reason } => println!("{} n={n:>2}: not applicable, {reason}", k.name()),
            }
        }
    }
    Ok(())
}
