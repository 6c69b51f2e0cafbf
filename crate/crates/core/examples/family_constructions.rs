//! Constant, coslice and intensional topos families, and the presheaf and
//! category of elements of a family structure.

use depcat::cat::{check_category_laws, FinSetCat, ObjectId};
use depcat::fam::{
    category_of_elements, check_fam_laws, check_presheaf, fam_presheaf, ConstantFam, CosliceFam, FamStructure, ToposFam,
};
use depcat::instances::chain;

fn main() -> depcat::Result<()> {
    let constant = ConstantFam::new(FinSetCat::new(3));
    println!("constant: |fHom(2)| = {}", constant.families(&2)?.len());
    println!("{}", check_fam_laws(&constant));

    let coslice = CosliceFam::new(chain(3)?);
    println!("coslice over a 3-chain: |fHom(bottom)| = {}", coslice.families(&ObjectId(0))?.len());
    println!("{}", check_fam_laws(&coslice));

    let topos = ToposFam::new(FinSetCat::new(3), 2)?;
    println!("topos families over 1 with fibres up to 2: {}", topos.families(&1)?.len());

    let fp = fam_presheaf(&ConstantFam::new(FinSetCat::new(2)))?;
    println!("{}", check_presheaf(&fp.window.cat, &fp.presheaf));
    let el = category_of_elements(&fp.window.cat, &fp.presheaf, |a, x| format!("({}, {x})", a.0))?;
    println!("category of elements: {} objects, {} arrows", el.cat.num_objects(), el.cat.num_arrows());
    println!("{}", check_category_laws(&el.cat));
    Ok(())
}
