//! Conjugation by a regular diagonal matrix on unitriangular groups has a
//! single twisted class; the solver produces the conjugating element.

use twisted_conj::group::DEFAULT_CAP;
use twisted_conj::matrix::GroupElement;
use twisted_conj::rootsystem::RootSystem;
use twisted_conj::scalars::PrimeField;
use twisted_conj::twisted::{solve_unipotent, unipo_analysis, unipo_torus_search};

fn main() -> twisted_conj::Result<()> {
    let f = PrimeField::new(5)?;
    let d = GroupElement::diagonal(f, &[1, 2, 4]);
    let g = GroupElement::from_rows(f, &[vec![1, 3, 1], vec![0, 1, 4], vec![0, 0, 1]])?;
    let y = solve_unipotent(&d, &g)?;
    println!("g = {g}\ny = {y}\ny g == d y d^-1: {}", y.mul(&g) == y.conjugate_by(&d, &d.inverse()?));

    for (c, n, p) in [('A', 1, 3), ('A', 1, 5), ('A', 2, 7), ('B', 2, 7)] {
        let rs = RootSystem::from_label(c, n)?;
        match unipo_torus_search(&rs, p) {
            Ok(t) => {
                let rep = unipo_analysis(&rs, p, DEFAULT_CAP)?;
                println!("{}{} p={p}: t={t:?}, |U|={}, |U^phi|={}, R={}", c, n, rep.unipotent_order, rep.fixed_order, rep.r);
            }
            Err(e) => println!("{c}{n} p={p}: {e}"),
        }
    }
    Ok(())
}
