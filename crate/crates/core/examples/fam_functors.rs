//! The fam-functor induced by a ring homomorphism, and a natural
//! transformation check between fam-functors.

use depcat::cat::ArrowId;
use depcat::fam::{check_fam_functor, check_fam_nat_trans};
use depcat::ring::{ring_family, ring_hom_functor, RingTables};

fn main() -> depcat::Result<()> {
    let (z4, z2) = (RingTables::modulo(4)?, RingTables::modulo(2)?);
    let reduce = ring_hom_functor(&z4, &z2, &[0, 1, 0, 1])?;
    println!("{}", check_fam_functor(&reduce));

    println!("{}", check_fam_nat_trans(&reduce, &reduce, |_| Ok(ArrowId(0))));
    // Adding 1 is natural but moves every family.
    println!("{}", check_fam_nat_trans(&reduce, &reduce, |_| Ok(ArrowId(1))));

    let broken = reduce.with_family(ring_family(&z4, 1, 2), ring_family(&z2, 0, 0));
    println!("{}", check_fam_functor(&broken));
    Ok(())
}
