//! Power in a council deciding by double majority (55% of members and 65%
//! of population) unless at least four members block.

use votekit::indices::{power_vector, Engine};
use votekit::inverse::{eu_council, inverse_heuristic, parse_populations, HeuristicConfig, Target};
use votekit::{Game, IndexKind, Metric};

const MEMBERS: &str = "\
# name,population
North,83000
South,67000
East,59000
West,47000
Centre,38000
Coast,19000
Hills,17000
Lakes,11000
Islands,5000
Marsh,2500
";

fn main() -> votekit::Result<()> {
    let members = parse_populations(MEMBERS)?;
    let council = eu_council(&members, true)?;
    println!("{council}");
    let game = Game::Combo(council);
    for kind in [IndexKind::Ssi, IndexKind::Pbi] {
        let v = power_vector(&game, kind, Engine::Dp)?;
        println!("{}", kind.name());
        for (m, x) in members.iter().zip(v.to_f64()) {
            println!("  {:<8} {:>7} {x:.5}", m.name, m.population);
        }
        let target = Target::exact(v)?;
        let r = inverse_heuristic(&target, Metric::L1, &HeuristicConfig::default())?;
        println!("  closest weighted game found: {r}");
    }
    Ok(())
}
