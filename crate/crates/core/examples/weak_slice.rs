//! The slice structure with a non-canonical choice of pullbacks: the fam
//! laws hold up to isomorphism but fail strictly.

use depcat::cat::FinSetCat;
use depcat::fam::{check_fam_laws, check_weak_fam_laws, Canonical, Reversed, SliceFam};

fn main() -> depcat::Result<()> {
    let reversed = SliceFam::new(FinSetCat::new(3), Reversed)?;
    println!("reversed pullbacks, up to isomorphism:\n{}", check_weak_fam_laws(&reversed));
    println!("reversed pullbacks, strictly:\n{}", check_fam_laws(&reversed));

    // Canonical pullbacks keep identities fixed, but pulling back along a
    // composite still differs from pulling back twice.
    let canonical = SliceFam::new(FinSetCat::new(2), Canonical)?;
    println!("canonical pullbacks, strictly:\n{}", check_fam_laws(&canonical));
    Ok(())
}
