//! Parses games in each textual form and reports their structure.

use votekit::{parse_game, Coalition, Game};

fn describe(text: &str) -> votekit::Result<()> {
    let g = parse_game(text)?;
    let e = g.to_explicit()?;
    println!("{text}");
    println!("  parsed as {g}");
    let minimal: Vec<String> = e.minimal_winning().iter().map(|s| s.to_string()).collect();
    println!("  minimal winning {}", minimal.join(" "));
    match e.completeness_order() {
        Some(order) => {
            println!("  complete, voters by desirability {order:?}");
            let permuted = e.permuted(&order);
            println!("  shift-minimal {}", permuted.shift_minimal_winning()?);
        }
        None => println!("  not complete"),
    }
    match e.is_weighted() {
        Some(w) => println!("  weighted as {w}"),
        None => println!("  not weighted"),
    }
    let s = Coalition::from_members([0, 2]);
    println!("  {s} {}", if g.is_winning(s) { "wins" } else { "loses" });
    Ok(())
}

fn main() -> votekit::Result<()> {
    describe("[3;3,2,1,1]")?;
    describe("n=6; shiftminwin={1,2},{1,3,4}")?;
    describe("[2;1,1,0,0] | [2;0,0,1,1]")?;
    describe("[3;1,1,1,1,1,1] & [1;1,1,0,0,0,0]")?;
    let padded = parse_game("[2;1,1,1]")?.add_null_voters(2)?;
    if let Game::Weighted(w) = &padded {
        println!("padded with two null voters: {w}");
    }
    Ok(())
}
