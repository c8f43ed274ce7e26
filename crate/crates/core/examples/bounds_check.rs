//! Lower bounds and single-instance checks.
//!
//! cargo run --example bounds_check

use restricted_sumsets::{
    check_instance, iterated_bound, pair_bound, restricted_bound, ElementSet, GroupSpec,
};

fn main() -> restricted_sumsets::Result<()> {
    let z12: GroupSpec = "Z12".parse()?;
    println!(
        "|A + B| >= {} for |A| = 3, |B| = 4 in {z12}",
        pair_bound(&z12, 3, 4)?
    );
    println!(
        "|A1 + A2 + A3| >= {} for sizes 2, 2, 2",
        iterated_bound(&z12, &[2, 2, 2])?
    );

    let z13: GroupSpec = "Z13".parse()?;
    for k in 2..=5 {
        println!(
            "|k^A| >= {:>3} for |A| = 5, k = {k} in {z13}",
            restricted_bound(&z13, 5, k)
        );
    }

    let z8: GroupSpec = "Z8".parse()?;
    let a = ElementSet::parse(&z8, "0,1,2,4")?;
    let r = check_instance(&a, 3)?;
    println!(
        "\n{} {} k={}: bound {}, actual {}, satisfied {}, equality {}",
        r.group, r.set, r.k, r.bound, r.actual, r.satisfied, r.equality
    );

    let z7: GroupSpec = "Z7".parse()?;
    let ap = ElementSet::parse(&z7, "0,1,2,3")?;
    let r = check_instance(&ap, 2)?;
    println!(
        "{} {} k={}: bound {}, actual {} (equality {})",
        r.group, r.set, r.k, r.bound, r.actual, r.equality
    );
    Ok(())
}
