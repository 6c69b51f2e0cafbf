//! Transport arrows between Sigma-objects over equal global elements.

use depcat::cat::{global_elements, FinSetCat};
use depcat::fam::{FinFamily, FinSetFam};
use depcat::sigma::{check_transport, transport, FinSetSigma};

fn main() -> depcat::Result<()> {
    let cat = FinSetCat::new(3);
    let sigma = FinSetSigma::new(FinSetFam::new(cat, 2));
    let lam = FinFamily::new(vec![2, 0, 1]);
    for i in global_elements(&cat, &3)? {
        let t = transport(&sigma, &lam, &i, &i)?;
        println!("i = {i:?}: λ_ij = {:?}, λ_ji = {:?}", t.lam_ij, t.lam_ji);
    }
    println!("{}", check_transport(&sigma)?);
    Ok(())
}
