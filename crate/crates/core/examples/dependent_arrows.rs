//! Dependent arrows as global sections of first projections, and the
//! correspondence between arrows `a → b` and dependent objects over `a`.

use depcat::cat::{FinSetCat, FnArrow};
use depcat::dep::{check_dep_laws, check_sections, dep_object_bijection, DepStructure, GlobalSectionsDep};
use depcat::fam::{FinFamily, FinSetFam};
use depcat::sigma::FinSetSigma;

fn main() -> depcat::Result<()> {
    let cat = FinSetCat::new(3);
    let dep = GlobalSectionsDep::new(FinSetSigma::new(FinSetFam::new(cat, 2)));
    let lam = FinFamily::new(vec![2, 1, 2]);
    let sections = dep.dep_arrows(&lam)?;
    println!("λ = {lam:?} has {} sections", sections.len());

    let f = FnArrow::new(3, vec![2, 0]);
    let phi = &sections[1];
    println!("φ = {:?}, φ({f:?}) = {:?}", phi.arrow, dep.apply(phi, &f)?.arrow);

    println!("{}", check_dep_laws(&dep));
    println!("{}", check_sections(&dep));

    let bij = dep_object_bijection(&cat, &2, &3)?;
    println!("|hom(2, 3)| = {}, dependent objects over 2 valued in 3: {}", bij.homs.len(), bij.sections.len());
    println!("{}", bij.check(&cat));
    Ok(())
}
