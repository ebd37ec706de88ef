//! Growth of Reidemeister numbers with p, and the Borel subgroup of SL_2.

use twisted_conj::automorphisms::AutTable;
use twisted_conj::chevgroup::{classical, ClassicalKind};
use twisted_conj::group::DEFAULT_CAP;
use twisted_conj::twisted::{borel2_analysis, reidemeister};

fn main() -> twisted_conj::Result<()> {
    for p in [3, 5, 7, 11] {
        let g = classical(ClassicalKind::SL, 2, p, DEFAULT_CAP)?;
        println!("SL_2(F_{p}): R(identity) = {}", reidemeister(&AutTable::identity(g)).r());
    }
    for p in [3, 5, 7] {
        let rep = borel2_analysis(p, DEFAULT_CAP)?;
        let homs: Vec<u32> = rep.displayed_maps.iter().filter(|d| d.is_homomorphism).map(|d| d.alpha).collect();
        println!(
            "B_2(F_{p}): order {}, R(identity) = {}, min R = {}, a -> 1/a, b -> alpha b/a^2 homomorphic for alpha in {homs:?}",
            rep.order, rep.r_identity, rep.min_r
        );
    }
    Ok(())
}
