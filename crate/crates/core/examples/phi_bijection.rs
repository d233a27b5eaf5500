//! Split a partition into (pairs, leftovers) and rebuild it.

use qbinomial::{phi, phi_inverse, Partition};

fn main() -> qbinomial::Result<()> {
    let lambda: Partition = "[7,5,5,4,4,4,4,2,2,2,1]".parse()?;
    let pair = phi(&lambda);
    println!("{lambda} --phi--> {pair}");
    println!("|lambda| = {} = 2|first| + |second| = {}", lambda.weight(), pair.weight2());

    let back = phi_inverse(&pair)?;
    println!("{pair} --phi^-1--> {back}");
    assert_eq!(back, lambda);
    Ok(())
}
