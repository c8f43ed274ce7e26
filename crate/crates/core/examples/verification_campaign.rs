//! An exhaustive sweep of small groups with every check enabled.
//!
//! cargo run --release --example verification_campaign [max_order]

use restricted_sumsets::verify::{run_campaign, CampaignConfig, Checks, ReportFormat};

fn main() -> restricted_sumsets::Result<()> {
    let max_order = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let cfg = CampaignConfig {
        max_order,
        checks: Checks::ALL,
        record_equalities: false,
        ..CampaignConfig::default()
    };
    let report = run_campaign(&cfg)?;
    print!("{}", report.render(ReportFormat::Table));
    println!("finished in {:.2?}", report.wall_time);
    Ok(())
}
