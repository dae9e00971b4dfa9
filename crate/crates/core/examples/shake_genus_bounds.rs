//! Shake-genus lower bounds, the Bennequin-type check and adjunction predicates.

use knotrace::formulas::{adjunction_allows, bennequin_check, shake_bounds, Surface};

fn main() -> knotrace::Result<()> {
    for n in -4..=4 {
        let bounds: Vec<String> = shake_bounds(2, n)
            .iter()
            .map(|b| {
                let tag = if b.conditional { "if" } else { "always" };
                format!("{} ({:?}, {tag})", b.bound, b.rule)
            })
            .collect();
        println!("nu=2 n={n:>2}: {}", bounds.join(", "));
    }

    let ok = bennequin_check(1, 0, 1, 0, Some(1)).with_tau(1);
    println!("trefoil tb=1 rot=0 g_sh=1: inconsistent = {}", ok.inconsistent_inputs);
    let bad = bennequin_check(5, 0, 1, 0, Some(1));
    println!("tb=5: weak form satisfied = {:?}", bad.weak.satisfied);

    println!("torus with S.S=0, c1=0: {}", adjunction_allows(Surface::Closed { genus: 1 }, 0, 0)?);
    println!("sphere with S.S=0, c1=2: {}", adjunction_allows(Surface::Closed { genus: 0 }, 0, 2)?);
    println!("disk, nu=0, |D|=1, D.D=-1: {}", adjunction_allows(Surface::Disk { nu: 0 }, -1, 1)?);
    Ok(())
}
