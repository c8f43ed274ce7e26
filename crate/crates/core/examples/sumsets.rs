//! Sumsets, iterated sumsets and restricted sumsets.
//!
//! cargo run --example sumsets

use restricted_sumsets::{
    iterated_sumset, restricted_sumset, restricted_sumset_layers, sumset, ElementSet, GroupSpec,
};

fn main() -> restricted_sumsets::Result<()> {
    let z10: GroupSpec = "Z10".parse()?;
    let a = ElementSet::parse(&z10, "0,1,3")?;
    let b = ElementSet::parse(&z10, "{2,5}")?;
    println!("A + B = {}", sumset(&a, &b)?);
    println!(
        "A + A + A = {}",
        iterated_sumset(&z10, &[a.clone(), a.clone(), a.clone()])?
    );

    let z8: GroupSpec = "Z8".parse()?;
    let a = ElementSet::parse(&z8, "0,1,2,4")?;
    for (k, layer) in restricted_sumset_layers(&a, a.len()).iter().enumerate() {
        println!("{k}^A = {layer}");
    }

    let klein: GroupSpec = "Z2xZ2".parse()?;
    let all = ElementSet::full(&klein);
    let two = restricted_sumset(&all, 2);
    println!("in {klein}: 2^G = {} = {}", two, two.to_tuple_string());
    Ok(())
}
