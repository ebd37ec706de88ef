//! Classical matrix groups and quotients.

use twisted_conj::chevgroup::{classical, ClassicalKind};
use twisted_conj::group::DEFAULT_CAP;

fn main() -> twisted_conj::Result<()> {
    let cases = [
        (ClassicalKind::GL, 2, 3),
        (ClassicalKind::SL, 2, 5),
        (ClassicalKind::PSL, 2, 5),
        (ClassicalKind::Unitriangular, 3, 5),
        (ClassicalKind::Diagonal, 2, 7),
        (ClassicalKind::Borel2, 2, 7),
    ];
    for (kind, n, p) in cases {
        let g = classical(kind, n, p, DEFAULT_CAP)?;
        println!("{:<14} order {}", g.label(), g.order());
    }
    Ok(())
}
