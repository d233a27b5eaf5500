//! Run the quick self-test suites from library code.

use qbinomial::selftest::{run_all, Mutation, Scale};

fn main() {
    let results = run_all(Scale::quick(), Mutation::None);
    for r in &results {
        println!("{r}");
    }
    let passed = results.iter().filter(|r| r.passed()).count();
    println!("{passed}/{} suites passed", results.len());
}
