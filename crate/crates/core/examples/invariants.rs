//! tau, nu and epsilon for every built-in knot and its mirror.

use knotrace::invariants::bundle;
use knotrace::library::builtins;

fn main() -> knotrace::Result<()> {
    println!("{:<10} {:>4} {:>4} {:>4} {:>6}", "knot", "tau", "nu", "eps", "genus");
    for entry in builtins() {
        for c in [entry.complex.clone(), entry.complex.mirror()] {
            let b = bundle(&c)?;
            println!("{:<10} {:>4} {:>4} {:>4} {:>6}", c.name(), b.tau, b.nu, b.epsilon, b.genus);
        }
    }
    Ok(())
}
