//! Finds weighted games whose power vectors are close to given targets:
//! exactly for small voter counts, by local search beyond.

use votekit::indices::{power_vector, Engine};
use votekit::inverse::{inverse_exact, inverse_heuristic, prop2_workflow, HeuristicConfig, Target};
use votekit::{parse_game, Game, IndexKind, Metric};

fn main() -> votekit::Result<()> {
    // a target given by value, with rounding tolerance from its decimals
    let t: Target = "n=5 index=ssi\n0.4 0.3 0.2 0.1 0.0".parse()?;
    println!("target {} (tolerance {})", t.vector(), t.tolerance());
    for metric in [Metric::L1, Metric::Linf] {
        println!("  {}", inverse_exact(&t, metric)?);
    }

    // (2, ..., 2, 1) / (2n - 1)
    for n in [6, 9] {
        let beta = Target::beta(n, IndexKind::Pbi)?;
        let r = if n <= 7 {
            inverse_exact(&beta, Metric::L1)?
        } else {
            inverse_heuristic(&beta, Metric::L1, &HeuristicConfig::default())?
        };
        println!("beta({n}) pbi: {r}");
    }

    // an extremal seven-voter complete game, padded with null voters
    let base = match parse_game("n=7; shiftminwin={1},{2,4},{4,5,6,7}")? {
        Game::Complete(c) => c,
        _ => unreachable!(),
    };
    let cfg = HeuristicConfig {
        budget: 5_000,
        ..HeuristicConfig::default()
    };
    for pads in 0..=2 {
        let r = prop2_workflow(&base, pads, IndexKind::Ssi, Metric::L1, None, &cfg)?;
        println!("padded by {pads}: {r}");
    }
    let known = parse_game("[84;38,27,19,16,9,9,3,0]")?;
    println!(
        "ssi of [84;38,27,19,16,9,9,3,0]: {}",
        power_vector(&known, IndexKind::Ssi, Engine::Direct)?
    );
    Ok(())
}
