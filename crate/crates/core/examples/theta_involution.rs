//! Apply the sign-reversing involution and show that it undoes itself.

use qbinomial::{theta, PartitionPair};

fn main() -> qbinomial::Result<()> {
    let start: PartitionPair = "([5,5,4,4,4,3,3,3,1,1],[5,3,2,2,1])".parse()?;
    let (image, case) = theta(&start)?;
    println!("{start} --theta[{},{}]--> {image}", case.branch, case.pivot);
    println!("sign {} -> {}", start.sign(), image.sign());

    let (back, case) = theta(&image)?;
    println!("{image} --theta[{},{}]--> {back}", case.branch, case.pivot);
    assert_eq!(back, start);

    let fixed: PartitionPair = "([3,3,1,1],[4,2])".parse()?;
    match theta(&fixed) {
        Ok(_) => unreachable!("members of the fixed set are not moved"),
        Err(e) => println!("{fixed}: {e}"),
    }
    Ok(())
}
