//! Parsing a complex from text, with the validation errors a bad file produces.

use knotrace::invariants::bundle;
use knotrace::KnotComplex;

const FIGURE_EIGHT: &str = "\
knot my-fig8
gen p A=1 M=1
gen q A=0 M=0
gen r A=0 M=0
gen e A=0 M=0
gen s A=-1 M=-1
arr q p   # horizontal
arr q s   # vertical
arr p r
arr s r
";

fn main() -> knotrace::Result<()> {
    let c = KnotComplex::parse(FIGURE_EIGHT)?;
    println!("{} has HFK ranks {:?}", c.name(), c.hfk_ranks().ranks);
    println!("{:?}", bundle(&c)?);
    println!("mirror isomorphic to itself: {:?}", c.mirror().is_isomorphic(&c));

    for bad in [
        "knot odd\ngen a A=0 M=0\ngen b A=0 M=0\narr a b\n",
        "knot lopsided\ngen a A=1 M=0\n",
        "gen a A=0 M=0\n",
    ] {
        match KnotComplex::parse(bad) {
            Ok(_) => println!("unexpectedly valid"),
            Err(e) => println!("rejected: {e}"),
        }
    }
    Ok(())
}
