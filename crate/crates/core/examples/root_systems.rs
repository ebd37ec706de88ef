//! Root systems, Cartan matrices and the diagram automorphism group.

use twisted_conj::rootsystem::RootSystem;

fn main() -> twisted_conj::Result<()> {
    let b2 = RootSystem::from_label('B', 2)?;
    println!("B2 Cartan matrix: {:?}", b2.cartan_matrix());
    println!("B2 positive roots:");
    for r in b2.positive_roots() {
        println!("  {r}  height {}  norm {}", r.height(), b2.norm(r));
    }

    for (c, n) in [('A', 3), ('D', 4), ('E', 6), ('G', 2)] {
        let rs = RootSystem::from_label(c, n)?;
        let gamma: Vec<String> = rs.diagram_automorphisms().iter().map(|g| g.cycles()).collect();
        println!("{}: {} roots, |Gamma| = {}: {}", rs.label(), rs.roots().len(), gamma.len(), gamma.join(" "));
    }
    Ok(())
}
