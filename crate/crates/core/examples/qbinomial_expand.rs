//! Expand Gaussian binomials, plain and dilated, and check them at q = 1.

use qbinomial::{gauss_binomial, gauss_binomial_dilated, QBinomArgs};

fn main() -> qbinomial::Result<()> {
    for (n, k) in [(4, 2), (6, 3), (5, 0), (3, -1)] {
        let g = gauss_binomial(n, k);
        println!("[{n} choose {k}]_q = {g}");
        println!("    at q = 1: {}", g.at_one());
    }

    let d = gauss_binomial_dilated(4, 2, 2)?;
    println!("[4 choose 2]_(q^2) = {d}");

    let args = QBinomArgs::new(5, 2).dilated(3);
    println!("{args:?} -> {}", args.eval()?);
    Ok(())
}
