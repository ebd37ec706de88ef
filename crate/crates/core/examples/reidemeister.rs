//! Twisted conjugacy classes and Reidemeister numbers from text specs.

use twisted_conj::automorphisms::AutTable;
use twisted_conj::dsl::{parse_group, parse_phi};
use twisted_conj::group::DEFAULT_CAP;
use twisted_conj::twisted::{coincidence_surjective, reidemeister};

fn main() -> twisted_conj::Result<()> {
    let cases = [
        ("SL:2:3", "identity"),
        ("SL:2:3", "inner:1.2"),
        ("D:2:5", "diag-inverse"),
        ("D:3:7", "diag-cycle-twist:r=1"),
        ("U:3:5", "unipotent-conj:d=1,2,4"),
        ("A:1:5:adjoint", "identity"),
        ("prod:D:1:7^2", "product:diag-inverse;identity:sigma=(1 2)"),
    ];
    for (g, phi) in cases {
        let built = parse_group(g, DEFAULT_CAP, None)?;
        let table = AutTable::new(built.group.clone(), parse_phi(phi, &built)?)?;
        let part = reidemeister(&table);
        let sizes: Vec<usize> = part.classes.iter().map(|c| c.size).collect();
        println!(
            "{g:<16} {phi:<44} R = {:<3} onto = {:<5} sizes {:?}",
            part.r(),
            coincidence_surjective(&table),
            sizes
        );
    }
    Ok(())
}
