//! Shapley-Shubik and Penrose-Banzhaf vectors of a few games, including a
//! weighted game too large for coalition enumeration.

use votekit::indices::{pbi, power_vector, ssi, Engine};
use votekit::{distance, parse_game, IndexKind, Metric};

fn main() -> votekit::Result<()> {
    for text in [
        "[3;3,2,1,1]",
        "[2;1,1,0,0] | [2;0,0,1,1]",
        "[4;2,2,1,1,1] & [2;1,1,1,0,0]",
    ] {
        let g = parse_game(text)?;
        let s = ssi(&g)?;
        let (b, swings) = pbi(&g)?;
        println!("{text}");
        println!("  ssi {s}");
        println!(
            "  pbi {b}  (swings {:?}, total {})",
            swings.counts, swings.total
        );
        let d1 = distance(&s, &b.with_kind(IndexKind::Ssi), Metric::L1)?;
        println!("  l1 between them {d1}");
    }

    // forty voters: the dynamic program counts coalitions by weight
    let weights: Vec<String> = (1..=40).map(|i| (41 - i).to_string()).collect();
    let big = parse_game(&format!("[500;{}]", weights.join(",")))?;
    let v = power_vector(&big, IndexKind::Pbi, Engine::Dp)?;
    let head: Vec<String> = v
        .to_f64()
        .iter()
        .take(5)
        .map(|x| format!("{x:.5}"))
        .collect();
    println!("40-voter game, pbi of the five largest: {}", head.join(" "));
    Ok(())
}
