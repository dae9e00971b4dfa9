//! Reading nu back from a trace, and comparing traces of different knots.

use knotrace::library::resolve;
use knotrace::surgery::trace_profile;
use knotrace::trace::{compare_traces, infer_from_profile, TraceVerdict};

fn main() -> knotrace::Result<()> {
    for expr in ["T23", "fig8", "T25", "-T23"] {
        let c = resolve(expr)?.complex;
        for n in [-2, 0, 3] {
            let p = trace_profile(&c, n);
            let inference = infer_from_profile(p)?;
            println!(
                "{expr:<5} n={n:>2}: s_max {:?}, s'_max {:?} -> nu {:?} via rows {:?}",
                p.s_max, p.s_prime_max, inference.nu, inference.rows
            );
        }
    }

    let (a, b) = (resolve("T23")?.complex, resolve("fig8")?.complex);
    for n in [0, -3] {
        let cmp = compare_traces(trace_profile(&a, n), trace_profile(&b, n))?;
        match cmp.verdict {
            TraceVerdict::NotDiffeomorphic { nu_a, nu_b } => {
                println!("X_{n}(T23) and X_{n}(fig8) are not diffeomorphic (nu {nu_a} vs {nu_b})");
                for line in cmp.certificate {
                    println!("  {line}");
                }
            }
            TraceVerdict::Inconclusive { reason } => println!("n={n}: inconclusive, {reason}"),
        }
    }
    Ok(())
}
