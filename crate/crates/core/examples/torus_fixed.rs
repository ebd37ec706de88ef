//! Fixed torus dimension of diagram automorphisms with group witnesses.

use twisted_conj::liealgebra::ChevalleyBasis;
use twisted_conj::rootsystem::RootSystem;
use twisted_conj::torusfixed::case_witness;

fn main() -> twisted_conj::Result<()> {
    for (c, n) in [('A', 2), ('A', 3), ('A', 4), ('D', 4), ('E', 6)] {
        let rs = RootSystem::from_label(c, n)?;
        let cb = ChevalleyBasis::new(&rs)?;
        for rho in rs.diagram_automorphisms().into_iter().filter(|r| !r.is_identity()) {
            let rep = case_witness(&rs, &rho, &cb, 5)?;
            println!(
                "{:<3} {:<12} d={} {:?} alpha_{} verified={} (p={})",
                rep.root_system, rep.rho, rep.d, rep.witness, rep.alpha, rep.verified, rep.p
            );
        }
    }
    Ok(())
}
