//! Product automorphisms of G^n reduce to cycle composites on G.

use twisted_conj::automorphisms::Automorphism;
use twisted_conj::chevgroup::{classical, ClassicalKind};
use twisted_conj::group::DEFAULT_CAP;
use twisted_conj::twisted::product_twist_analysis;

fn main() -> twisted_conj::Result<()> {
    let sl = classical(ClassicalKind::SL, 2, 3, DEFAULT_CAP)?;
    let ids = [Automorphism::Identity, Automorphism::Identity];
    for sigma in [[1usize, 0], [0, 1]] {
        let rep = product_twist_analysis(sl.clone(), &ids, &sigma, DEFAULT_CAP)?;
        println!("SL_2(F_3)^2 sigma={}: R={} (cycles give {})", rep.sigma, rep.r, rep.product_of_cycle_r);
    }
    let d1 = classical(ClassicalKind::Diagonal, 1, 7, DEFAULT_CAP)?;
    let phis = [Automorphism::DiagonalInverse, Automorphism::Identity];
    let rep = product_twist_analysis(d1, &phis, &[1, 0], DEFAULT_CAP)?;
    println!("{}", serde_json::to_string_pretty(&rep).unwrap());
    Ok(())
}
