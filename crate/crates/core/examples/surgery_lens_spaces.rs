//! HF-hat of integer surgeries: lens spaces from the unknot, the Poincaré
//! sphere from +1 surgery on the trefoil, and S¹×S² from 0 surgery.

use knotrace::library::{staircase, unknot};
use knotrace::surgery::{cone_ranks, surgery_map_nonzero};

fn main() -> knotrace::Result<()> {
    let u = unknot();
    for n in [-3, -1, 0, 1, 2, 5] {
        let cone = cone_ranks(&u, n);
        println!("unknot n={n:>2}: ranks {:?}, total {}", cone.spinc_ranks, cone.total_rank);
    }

    let trefoil = staircase(1);
    let p = cone_ranks(&trefoil, 1);
    println!("T23 n=1 (Poincaré sphere): total rank {}", p.total_rank);

    for n in [-2, 0, 2] {
        let cone = cone_ranks(&trefoil, n);
        println!(
            "T23 n={n:>2}: ranks {:?}, nonzero inclusions {:?}, s_max {:?}",
            cone.spinc_ranks, cone.nonzero_inclusions, cone.s_max
        );
    }
    println!("F_0 on the 0-trace of T23 nonzero: {}", surgery_map_nonzero(&trefoil, 0, 0)?);
    Ok(())
}
