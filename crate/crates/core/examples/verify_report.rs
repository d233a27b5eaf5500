//! Sweep an identity over a parameter box and export the reports.

use qbinomial::identities::{reports_to_csv, reports_to_json};
use qbinomial::{verify_sweep, IdentityId, SweepBounds};

fn main() -> qbinomial::Result<()> {
    let reports = verify_sweep(IdentityId::New4, SweepBounds::new(2, 5, 0))?;
    for r in &reports {
        println!("{r}");
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    println!("{passed}/{} passed", reports.len());

    let small = verify_sweep(IdentityId::S3, SweepBounds::new(0, 2, 1))?;
    print!("{}", reports_to_csv(&small));
    println!("{}", reports_to_json(&small[..1]));
    Ok(())
}
