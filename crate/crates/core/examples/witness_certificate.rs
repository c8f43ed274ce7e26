//! Build a certificate, serialize it, read it back and validate it.
//!
//! cargo run --example witness_certificate

use restricted_sumsets::witness::decompose_by_prime_index_subgroup;
use restricted_sumsets::{build_witness, validate_certificate, Certificate, ElementSet, GroupSpec};

fn main() -> restricted_sumsets::Result<()> {
    let g: GroupSpec = "Z8".parse()?;
    let a = ElementSet::parse(&g, "0,1,2,4")?;

    let d = decompose_by_prime_index_subgroup(&a)?;
    for (i, class) in d.classes.iter().enumerate() {
        println!(
            "A_{} = {} in coset {} (rep {})",
            i + 1,
            class.part,
            class.label,
            class.rep
        );
    }

    let cert = build_witness(&a, 3)?;
    println!(
        "\ncase {:?}, total {} against bound {}",
        cert.case,
        cert.total(),
        cert.bound
    );
    let json = cert.to_json();
    println!("{json}");

    let back = Certificate::from_json(&json)?;
    let report = validate_certificate(&g, &a, 3, &back);
    println!("valid: {}", report.ok);

    let mut forged = back.clone();
    forged.witness[1].elements.insert(3)?;
    let report = validate_certificate(&g, &a, 3, &forged);
    for f in &report.failures {
        println!("forged certificate: {}: {}", f.check, f.detail);
    }
    Ok(())
}
