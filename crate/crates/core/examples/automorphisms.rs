//! Validated automorphisms: inner, diagram, and induced maps on quotients.

use std::sync::Arc;

use twisted_conj::automorphisms::{diagram_conj_check, AutTable, Automorphism};
use twisted_conj::chevgroup::{classical, ChevalleyGroup, ClassicalKind};
use twisted_conj::group::{center, GroupRef, IndexedGroup, DEFAULT_CAP};
use twisted_conj::liealgebra::ChevalleyBasis;
use twisted_conj::rootsystem::{DiagramAutomorphism, RootSystem};
use twisted_conj::scalars::PrimeField;

fn main() -> twisted_conj::Result<()> {
    let sl = classical(ClassicalKind::SL, 2, 3, DEFAULT_CAP)?;
    let g = sl.element_matrix(sl.generators()[0]).unwrap();
    let inner = AutTable::new(sl.clone(), Automorphism::Inner(g))?;
    let (psl, induced) = inner.induced_quotient("PSL_2(F_3)", &center(sl.as_ref()))?;
    println!("{} induces {} on a quotient of order {}", inner.descriptor(), induced.descriptor(), psl.order());

    let rs = RootSystem::from_label('A', 2)?;
    let cg = ChevalleyGroup::new(&ChevalleyBasis::new(&rs)?, PrimeField::new(2)?)?;
    let rho = DiagramAutomorphism::from_cycles(2, "(1 2)")?;
    let grp: GroupRef = Arc::new(cg.enumerate(DEFAULT_CAP)?);
    let diagram = AutTable::new(grp.clone(), Automorphism::diagram(&cg, &rho)?)?;
    println!(
        "diagram automorphism of {} is an involution: {}",
        grp.label(),
        diagram.compose(&diagram)?.is_identity()
    );

    let cg5 = ChevalleyGroup::new(cg.basis(), PrimeField::new(5)?)?;
    let rep = diagram_conj_check(&cg5, &rho)?;
    println!(
        "A2 p=5: root subgroups {}, torus {}, signed torus form {}",
        rep.root_subgroups.pass, rep.torus.pass, rep.torus_signed_literal.pass
    );
    if let Some(c) = &rep.torus_signed_literal.counterexample {
        println!("  signed form first fails at {c}");
    }
    Ok(())
}
