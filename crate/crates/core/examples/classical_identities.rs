//! Evaluate the binomial-coefficient identities at a few points.

use qbinomial::identities::classical;

fn main() {
    for n in 0..=5 {
        let (l, r) = classical::s1(n);
        println!("s1  n={n}: {l} = {r}");
    }
    for (n, a) in [(3, 0), (3, 2), (5, 4)] {
        let (l, r) = classical::s3(n, a);
        println!("s3  n={n} a={a}: {l} = {r}");
    }
    for (m, n) in [(1, 4), (3, 6)] {
        let (l, r) = classical::new1(m, n);
        println!("new1 m={m} n={n}: {l} = {r}");
        let (l, r) = classical::new2(m, n);
        println!("new2 m={m} n={n}: {l} = {r}");
    }
}
