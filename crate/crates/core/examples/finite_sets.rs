//! Hom-sets, limits and the law check on the skeleton of finite sets.

use depcat::cat::{binary_product, check_category_laws, materialize, pullback_of, terminal, Category, FinSetCat, FnArrow};

fn main() -> depcat::Result<()> {
    let cat = FinSetCat::new(3);
    println!("|hom(2, 3)| = {}", cat.hom(&2, &3)?.len());

    let swap = FnArrow::new(2, vec![1, 0]);
    println!("swap ∘ swap = {:?}", cat.compose(&swap, &swap)?);

    let one = terminal(&cat).expect("1 is terminal");
    println!("terminal object {}, global elements of 3: {:?}", one.object, one.global_elements(&cat, &3)?);

    let p = binary_product(&cat, &2, &3)?.expect("products exist");
    println!("2 × 3 = {} with projections {:?} and {:?}", p.apex, p.pr_a, p.pr_b);

    let f = FnArrow::new(2, vec![0, 1, 1]);
    let g = FnArrow::new(2, vec![1, 0]);
    let w = pullback_of(&cat, &f, &g)?.expect("pullbacks exist");
    println!("pullback of {f:?} and {g:?} has apex {}", w.apex(&cat));

    let window = materialize(&cat)?;
    println!("{}", check_category_laws(&window.cat));
    Ok(())
}
