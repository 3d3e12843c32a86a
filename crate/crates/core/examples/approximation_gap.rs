//! Worst-case distance between complete-game power vectors and their
//! nearest weighted-game vectors.
//!
//! ```text
//! cargo run --release --example approximation_gap -- 7
//! ```

use votekit::geometry::{omega, Metric};
use votekit::IndexKind;

fn main() -> votekit::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    for kind in [IndexKind::Ssi, IndexKind::Pbi] {
        for metric in [Metric::L1, Metric::Linf] {
            let r = omega(n, kind, metric)?;
            println!(
                "{} {:<4} omega = {} = {}",
                kind.name(),
                metric,
                r.omega_decimal(),
                r.omega
            );
            println!(
                "  distinct vectors: {} weighted, {} complete",
                r.weighted_vectors, r.complete_vectors
            );
            println!("  argmax  {}", r.argmax);
            println!("  nearest {}", r.nearest_certificate);
            if r.attaining.len() > 1 && r.attaining.len() <= 5 {
                println!("  {} complete games attain the maximum", r.attaining.len());
                for g in &r.attaining {
                    println!("    {g}");
                }
            }
        }
    }
    Ok(())
}
