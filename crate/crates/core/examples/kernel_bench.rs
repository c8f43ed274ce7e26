//! Timing of the restricted-sumset kernel on random subsets of Z_n.
//!
//! cargo run --release --example kernel_bench

use restricted_sumsets::verify::bench_kernels;

fn main() -> restricted_sumsets::Result<()> {
    println!("{:>8} {:>6} {:>3} {:>10}", "order", "|A|", "k", "micros");
    for k in [2, 8] {
        for row in bench_kernels(&[256, 1024, 4096, 10_000], 0.1, k, 7)? {
            println!(
                "{:>8} {:>6} {:>3} {:>10.1}",
                row.order, row.set_size, row.k, row.micros
            );
        }
    }
    Ok(())
}
