//! Connected sums and mirrors through library expressions.

use knotrace::formulas::epsilon_of_sum;
use knotrace::invariants::bundle;
use knotrace::library::resolve;

fn main() -> knotrace::Result<()> {
    for expr in ["T23#T23", "T25#-T23", "T23#-T23", "T23#fig8", "-(T23#T25)"] {
        let entry = resolve(expr)?;
        let b = bundle(&entry.complex)?;
        println!(
            "{:<12} {:>2} generators: tau {:>2}, nu {:>2}, eps {:>2}",
            entry.name,
            entry.complex.len(),
            b.tau,
            b.nu,
            b.epsilon
        );
    }
    println!("sign additivity, eps 1 and 0: {:?}", epsilon_of_sum(1, 0));
    println!("sign additivity, eps 1 and -1: {:?}", epsilon_of_sum(1, -1));
    Ok(())
}
