//! Enumerate the partition-pair sets and their weight generating functions.

use qbinomial::partition::{set_u, set_v};
use qbinomial::IntPoly;

fn main() {
    let (m, n) = (1, 4);
    let u: Vec<_> = set_u(m, n).collect();
    let v: Vec<_> = set_v(m, n).collect();
    let signed: IntPoly = u.iter().map(|p| IntPoly::monomial(p.sign(), p.weight2())).sum();
    let fixed: IntPoly = v.iter().map(|p| IntPoly::monomial(1, p.weight2())).sum();
    println!("|U| = {}, |V| = {}", u.len(), v.len());
    for p in &v {
        println!("  {p}");
    }
    println!("signed sum over U: {signed}");
    println!("sum over V:        {fixed}");
    assert_eq!(signed, fixed);
}
