//! Sets meeting the restricted-sumset bound with equality, one per
//! translation class.
//!
//! cargo run --example extremal_sets

use restricted_sumsets::verify::{extremal_search, CampaignConfig};

fn main() -> restricted_sumsets::Result<()> {
    let cfg = CampaignConfig {
        min_order: 6,
        max_order: 7,
        k_max: Some(3),
        ..CampaignConfig::default()
    };
    let found = extremal_search(&cfg)?;
    for inst in &found {
        println!("{:<6} k={} {}", inst.group.to_string(), inst.k, inst.set);
    }
    println!("{} classes", found.len());
    Ok(())
}
