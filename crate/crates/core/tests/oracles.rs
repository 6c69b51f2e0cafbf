//! Fixed values on small instances, checked through the public API.

use depcat::cat::{binary_product, global_elements, terminal, ArrowId, Category, FinSetCat, FnArrow, ObjectId};
use depcat::dep::{dep_object_bijection, ConstantDep, DepStructure, GlobalSectionsDep};
use depcat::fam::{category_of_elements, fam_presheaf, ConstantFam, CosliceFam, FamStructure, FinFamily, FinSetFam, ToposFam};
use depcat::instances::{build, chain, discrete, generate, FamChoice, InstanceSpec, Model};
use depcat::ring::{ring_category, ring_fam, ring_family, ring_sigma, RingTables};
use depcat::sigma::{FinSetSigma, ProductSigma, SigmaStructure};

fn z(n: usize) -> RingTables {
    RingTables::modulo(n).unwrap()
}

#[test]
fn ring_composition_is_addition() {
    let c = ring_category(&z(4));
    assert_eq!(c.compose(&ArrowId(3), &ArrowId(2)).unwrap(), ArrowId(1));
    assert_eq!(c.identity(&ObjectId(0)), ArrowId(0));
    assert!(terminal(&c).is_none());
}

#[test]
fn finset_homs_and_limits() {
    let cat = FinSetCat::new(3);
    let swap = FnArrow::new(2, vec![1, 0]);
    assert_eq!(cat.compose(&swap, &swap).unwrap(), cat.identity(&2));
    assert_eq!(cat.hom(&2, &3).unwrap().len(), 9);
    assert_eq!(terminal(&cat).unwrap().object, 1);
    assert_eq!(global_elements(&cat, &3).unwrap().len(), 3);
    // The apex lies outside the window; the universal property is checked over it.
    assert_eq!(binary_product(&cat, &2, &3).unwrap().unwrap().apex, 6);
}

#[test]
fn discrete_category_lacks_products_of_distinct_objects() {
    let d = discrete(2).unwrap();
    assert!(binary_product(&d, &ObjectId(0), &ObjectId(1)).unwrap().is_none());
    assert!(binary_product(&d, &ObjectId(0), &ObjectId(0)).unwrap().is_some());
}

#[test]
fn family_counts() {
    let r = z(4);
    let fam = ring_fam(&r).unwrap();
    assert_eq!(fam.restrict(&ring_family(&r, 1, 2), &ArrowId(3)).unwrap(), ring_family(&r, 0, 1));
    let constant = ConstantFam::new(FinSetCat::new(3));
    assert_eq!(constant.families(&2).unwrap().len(), 4);
    let coslice = CosliceFam::new(chain(3).unwrap());
    assert_eq!(coslice.families(&ObjectId(0)).unwrap().len(), 3);
    let topos = ToposFam::new(FinSetCat::new(3), 2).unwrap();
    assert_eq!(topos.families(&1).unwrap().len(), 1 + 2 + 4);
}

#[test]
fn constant_family_elements() {
    let fam = ConstantFam::new(FinSetCat::new(2));
    let fp = fam_presheaf(&fam).unwrap();
    let el = category_of_elements(&fp.window.cat, &fp.presheaf, |a, x| format!("{}:{x}", a.0)).unwrap();
    assert_eq!(el.cat.num_objects(), 3 * 3);
}

#[test]
fn sigma_values() {
    let products = ProductSigma::new(FinSetCat::new(3)).unwrap();
    let lam = products.fam.family(2, 3);
    assert_eq!(products.sigma_obj(&lam).unwrap(), 6);

    let r = z(4);
    let s = ring_sigma(&r).unwrap();
    let lam = ring_family(&r, 1, 2);
    assert_eq!(s.pr1(&lam).unwrap(), ArrowId(2));
    assert_eq!(s.sigma_arr(&lam, &ArrowId(3)).unwrap(), ArrowId(1));

    let fs = FinSetSigma::new(FinSetFam::new(FinSetCat::new(3), 2));
    let lam = FinFamily::new(vec![2, 0, 1]);
    assert_eq!(fs.sigma_obj(&lam).unwrap(), 3);
    assert_eq!(fs.pr1(&lam).unwrap(), FnArrow::new(3, vec![0, 0, 2]));
}

#[test]
fn ring_squares_agree_on_both_sides() {
    for n in [4, 5] {
        let r = z(n);
        let s = ring_sigma(&r).unwrap();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lam = ring_family(&r, a, b);
                    let f = ArrowId(c as u32);
                    let sq = s.square(&lam, &f).unwrap();
                    let cat = s.base();
                    let lhs = cat.compose(&sq.right, &sq.top).unwrap();
                    let rhs = cat.compose(&sq.bottom, &sq.left).unwrap();
                    assert_eq!(lhs, rhs);
                    assert_eq!(lhs.0 as usize, (c + (c + a) * (c + b)) % n);
                }
            }
        }
    }
}

#[test]
fn dependent_arrow_counts() {
    let dep = ConstantDep::new(ring_category(&z(4)));
    let lam = dep.fam.family(ObjectId(0), ObjectId(0));
    assert_eq!(dep.dep_arrows(&lam).unwrap().len(), 4);

    let cat = FinSetCat::new(3);
    let bij = dep_object_bijection(&cat, &2, &3).unwrap();
    assert_eq!((bij.homs.len(), bij.sections.len()), (9, 9));
    assert!(bij.check(&cat).passed());

    let sections = GlobalSectionsDep::new(FinSetSigma::new(FinSetFam::new(FinSetCat::new(3), 2)));
    assert_eq!(sections.dep_arrows(&FinFamily::new(vec![2, 1, 2])).unwrap().len(), 4);
}

#[test]
fn generated_instances() {
    let Model::FinSet(m) = build(&InstanceSpec::finset(3, 2)).unwrap() else {
        panic!("finset spec builds a finset model")
    };
    let objects = m.cat.objects();
    let arrows: usize = objects
        .iter()
        .flat_map(|a| objects.iter().map(move |b| (a, b)))
        .map(|(a, b)| m.cat.hom(a, b).unwrap().len())
        .sum();
    assert_eq!((objects.len(), arrows), (4, 60));

    let Model::Table(ring) = Model::from_document(&generate(&InstanceSpec::ring(4).unwrap(), 2).unwrap()).unwrap() else {
        panic!("ring spec builds tables")
    };
    assert_eq!((ring.cat.num_objects(), ring.cat.num_arrows()), (1, 4));
    assert_eq!(ring.fam.unwrap().num_families(), 16);

    let Model::Table(trivial) = build(&InstanceSpec::ring(1).unwrap()).unwrap() else {
        panic!("ring spec builds tables")
    };
    assert!(terminal(&trivial.cat).is_some());

    let Model::Table(c) = build(&InstanceSpec::chain(3, FamChoice::Coslice)).unwrap() else {
        panic!("chain spec builds tables")
    };
    assert_eq!(c.fam.unwrap().families(&ObjectId(0)).unwrap().len(), 3);
}
