//! Groups, elements and the least-prime-index subgroup.
//!
//! cargo run --example group_arithmetic

use restricted_sumsets::{enumerate_abelian_groups, GroupSpec};

fn main() -> restricted_sumsets::Result<()> {
    let g: GroupSpec = "Z2xZ4".parse()?;
    println!(
        "{g}: order {}, p(G) = {}",
        g.order(),
        g.least_prime_divisor()
    );

    let x = g.element(&[1, 3])?;
    let y = g.element(&[1, 2])?;
    let s = g.add(&x, &y)?;
    println!("{x} + {y} = {s}  (index {})", g.index_of(&s)?);
    println!("-{x} = {}", g.neg(&x)?);

    let proj = g.least_prime_projection();
    let kernel: Vec<_> = (0..g.order()).filter(|&i| proj.in_kernel(i)).collect();
    println!("H has index {} and indices {kernel:?}", proj.prime());
    println!("G/H = {}", proj.quotient());

    println!("\nabelian groups of order 16:");
    for h in enumerate_abelian_groups(16, 16) {
        println!("  {h}");
    }
    Ok(())
}
