//! A commutative ring as a one-object category with family-arrows R × R and
//! Sigma-arrows given by ring arithmetic.

use depcat::cat::{is_pullback, ArrowId};
use depcat::fam::{check_fam_laws, FamStructure};
use depcat::ring::{ring_family, ring_sigma, RingTables};
use depcat::sigma::{check_sigma_laws, SigmaStructure};

fn main() -> depcat::Result<()> {
    let r = RingTables::modulo(4)?;
    let sigma = ring_sigma(&r)?;
    let lam = ring_family(&r, 1, 2);
    let c = ArrowId(3);
    println!("(1,2) ∘ 3 = {}", sigma.fam().family_label(&sigma.fam().restrict(&lam, &c)?));
    println!("pr1(1,2) = {:?}, Σ_(1,2) 3 = {:?}", sigma.pr1(&lam)?, sigma.sigma_arr(&lam, &c)?);

    let square = sigma.square(&lam, &c)?;
    println!("square for ((1,2), 3) is a pullback: {}", is_pullback(sigma.base(), &square)?.holds());

    println!("{}", check_fam_laws(sigma.fam()));
    println!("{}", check_sigma_laws(&sigma));
    Ok(())
}
