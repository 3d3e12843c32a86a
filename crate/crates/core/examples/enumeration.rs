//! Counts weighted and complete games, their distinct power vectors, and
//! the simple games on four voters; then round-trips a catalog through the
//! binary format.

use std::io::Cursor;

use votekit::enumeration::{
    count_complete, enumerate_simple4, enumerate_weighted, read_catalog, write_catalog,
};
use votekit::geometry::census;
use votekit::IndexKind;

fn main() -> votekit::Result<()> {
    let kinds = [IndexKind::Ssi, IndexKind::Pbi];
    println!(" n  #CG     #WG    ssi(wg) ssi(cg) pbi(wg) pbi(cg)");
    for n in 1..=6 {
        let c = census(n, &kinds)?;
        println!(
            "{n:>2} {:>5} {:>7} {:>8} {:>7} {:>7} {:>7}",
            count_complete(n)?,
            enumerate_weighted(n)?.len(),
            c.weighted(IndexKind::Ssi).len(),
            c.complete(IndexKind::Ssi).len(),
            c.weighted(IndexKind::Pbi).len(),
            c.complete(IndexKind::Pbi).len(),
        );
    }

    let sg4 = enumerate_simple4();
    println!("simple games on 4 voters: {}", sg4.len());
    for e in sg4.entries.iter().filter(|e| e.certificate.is_none()) {
        let minimal: Vec<String> = e
            .game
            .to_explicit()?
            .minimal_winning()
            .iter()
            .map(|s| s.to_string())
            .collect();
        println!("  not weighted: {}", minimal.join(" "));
    }

    let wg5 = enumerate_weighted(5)?;
    let mut bytes = Vec::new();
    write_catalog(&wg5, &mut bytes)?;
    let back = read_catalog(Cursor::new(&bytes))?;
    println!(
        "WG(5) catalog: {} games in {} bytes, read back {}",
        wg5.len(),
        bytes.len(),
        back.len()
    );
    Ok(())
}
