//! Structure constants of a Chevalley basis and the signed lift of a diagram
//! automorphism.

use twisted_conj::liealgebra::ChevalleyBasis;
use twisted_conj::rootsystem::{DiagramAutomorphism, RootSystem};

fn main() -> twisted_conj::Result<()> {
    let rs = RootSystem::from_label('G', 2)?;
    let cb = ChevalleyBasis::new(&rs)?;
    println!("G2: dimension {}", cb.dim());
    let roots = rs.roots();
    for (a, b, n) in cb.constants().into_iter().filter(|&(a, b, _)| a < b).take(8) {
        println!("  N({}, {}) = {n}", roots[a], roots[b]);
    }
    println!("Jacobi holds: {}", cb.jacobi_violation().is_none());

    let a3 = RootSystem::from_label('A', 3)?;
    let cb3 = ChevalleyBasis::new(&a3)?;
    let rho = DiagramAutomorphism::from_cycles(3, "(1 3)")?;
    let lift = cb3.lift_diagram_automorphism(&rho)?;
    println!("A3, rho = {}: signs on positive roots", rho.cycles());
    for (i, r) in a3.positive_roots().iter().enumerate() {
        println!("  eps({r}) = {:+}", lift.epsilon(i));
    }
    Ok(())
}
