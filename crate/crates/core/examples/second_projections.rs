//! Canonical second projections and the decomposition of global elements
//! of a Sigma-object.

use depcat::cat::{global_elements, FinSetCat};
use depcat::depsigma::{analyze_element, check_canonical_pr2, check_depsigma_laws, check_elements, element_equality, CanonicalPr2};
use depcat::fam::{FinFamily, FinSetFam};
use depcat::sigma::{FinSetSigma, SigmaStructure};

fn main() -> depcat::Result<()> {
    let cat = FinSetCat::new(3);
    let ds = CanonicalPr2::new(FinSetSigma::new(FinSetFam::new(cat, 2)));
    println!("{}", check_depsigma_laws(&ds));
    println!("{}", check_canonical_pr2(&ds));

    let sigma = FinSetSigma::new(FinSetFam::new(cat, 2));
    let lam = FinFamily::new(vec![1, 2]);
    let points = global_elements(&cat, &sigma.sigma_obj(&lam)?)?;
    for z in &points {
        let a = analyze_element(&ds, &lam, z)?;
        println!("z = {z:?}: first {:?}, coordinate {:?}, recovers z: {}", a.first, a.coordinate, a.recovers);
    }
    let v = element_equality(&ds, &lam, &points[1], &points[2])?;
    println!("points 1 and 2 equal: {}, same first component: {}", v.equal, v.same_first);
    println!("{}", check_elements(&ds)?);
    Ok(())
}
