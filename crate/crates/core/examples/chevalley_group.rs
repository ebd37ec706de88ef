//! Adjoint Chevalley groups over GF(p): root elements, relations, enumeration.

use twisted_conj::chevgroup::ChevalleyGroup;
use twisted_conj::group::{IndexedGroup, DEFAULT_CAP};
use twisted_conj::liealgebra::ChevalleyBasis;
use twisted_conj::rootsystem::{Root, RootSystem};
use twisted_conj::scalars::PrimeField;

fn main() -> twisted_conj::Result<()> {
    let rs = RootSystem::from_label('A', 2)?;
    let cb = ChevalleyBasis::new(&rs)?;
    let f = PrimeField::new(3)?;
    let g = ChevalleyGroup::new(&cb, f)?;

    let x = g.x_alpha(&Root(vec![1, 1]), f.elem(1))?;
    println!("x_(a1+a2)(1) on the 8-dimensional adjoint module:\n{x}");
    let rep = g.relations_check()?;
    println!("{}: pass={} over {} cases", rep.name, rep.pass, rep.checked);

    let grp = g.enumerate(DEFAULT_CAP)?;
    println!("{} has order {}", grp.label(), grp.order());
    let u = g.unipotent_subgroup(DEFAULT_CAP)?;
    println!("positive unipotent subgroup has order {}", u.order());
    Ok(())
}
