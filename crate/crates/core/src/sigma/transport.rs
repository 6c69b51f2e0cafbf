//! Transport arrows between the Sigma-objects of `λ` restricted to two
//! equal global elements.

use super::{FamOf, SArr, SObj, SigmaStructure};
use crate::cat::{is_mono, terminal, Category, Cone, Terminal};
use crate::error::{Error, Result};
use crate::fam::FamStructure;
use crate::report::{LawId, LawReport};

/// `lam_ij: Σ₁λ(i) → Σ₁λ(j)` and `lam_ji: Σ₁λ(j) → Σ₁λ(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportPair<A> {
    pub lam_ij: A,
    pub lam_ji: A,
}

/// `lam_ji` mediates the `(λ, i)` square at the cone
/// `(Σ₁λ(j), Σ_λ j, pr1)`; `lam_ij` is the same with `i` and `j` swapped.
pub fn transport<S: SigmaStructure>(
    sigma: &S,
    lam: &FamOf<S>,
    i: &SArr<S>,
    j: &SArr<S>,
) -> Result<TransportPair<SArr<S>>> {
    let cat = sigma.base();
    if terminal(cat).is_none() {
        return Err(Error::NoTerminalObject);
    }
    if i != j {
        return Err(Error::NotEqualElements {
            i: cat.arrow_label(i),
            j: cat.arrow_label(j),
        });
    }
    let into = |from: &SArr<S>, to: &SArr<S>| -> Result<SArr<S>> {
        let lf = sigma.fam().restrict(lam, from)?;
        let cone = Cone {
            apex: sigma.sigma_obj(&lf)?,
            top: sigma.sigma_arr(lam, from)?,
            left: sigma.pr1(&lf)?,
        };
        sigma.mediate(lam, to, &cone)
    };
    Ok(TransportPair {
        lam_ij: into(i, j)?,
        lam_ji: into(j, i)?,
    })
}

/// For every window family `λ` and global element `i` of its object, with
/// `j = i`: the transports are mutually inverse and commute with `Σ_λ i`,
/// `Σ_λ i` is mono and `pr1: Σ₁λ(i) → 1` is the unique arrow to `1`.
pub fn check_transport<S: SigmaStructure>(sigma: &S) -> Result<LawReport> {
    let cat = sigma.base();
    let one = terminal(cat).ok_or(Error::NoTerminalObject)?;
    let mut report = LawReport::new("transport", &[LawId::TranspIso, LawId::TranspMono]);
    for a in cat.objects() {
        for lam in sigma.fam().families(&a)? {
            for i in one.global_elements(cat, &a)? {
                transport_into(sigma, &one, &lam, &i, &mut report);
            }
        }
    }
    Ok(report)
}

fn transport_into<S: SigmaStructure>(
    sigma: &S,
    one: &Terminal<SObj<S>>,
    lam: &FamOf<S>,
    i: &SArr<S>,
    report: &mut LawReport,
) {
    let cat = sigma.base();
    let where_ = || format!("λ = {}, i = {}", sigma.family_label(lam), cat.arrow_label(i));
    let iso = (|| {
        let t = transport(sigma, lam, i, i)?;
        let li = sigma.fam().restrict(lam, i)?;
        let id = cat.identity(&sigma.sigma_obj(&li)?);
        let top = sigma.sigma_arr(lam, i)?;
        let checks = [
            ("λ_ij ∘ λ_ji", cat.compose(&t.lam_ij, &t.lam_ji)? == id),
            ("λ_ji ∘ λ_ij", cat.compose(&t.lam_ji, &t.lam_ij)? == id),
            ("Σ_λi ∘ λ_ji", cat.compose(&top, &t.lam_ji)? == top),
            ("Σ_λj ∘ λ_ij", cat.compose(&top, &t.lam_ij)? == top),
        ];
        Ok::<_, Error>(checks.iter().find(|c| !c.1).map(|c| c.0))
    })();
    match iso {
        Ok(bad) => report.record(LawId::TranspIso, bad.is_none(), || {
            format!("{}: {} is not the identity", where_(), bad.unwrap_or_default())
        }),
        Err(e) => report.record_error(LawId::TranspIso, || format!("{}: {e}", where_())),
    }
    let mono = (|| {
        let li = sigma.fam().restrict(lam, i)?;
        let top = sigma.sigma_arr(lam, i)?;
        let pr = sigma.pr1(&li)?;
        let bang = one.bang(cat, &sigma.sigma_obj(&li)?)?;
        Ok::<_, Error>((is_mono(cat, &top)?, pr == bang))
    })();
    match mono {
        Ok((m, b)) => report.record(LawId::TranspMono, m && b, || {
            if m {
                format!("{}: pr1 of λ(i) is not the arrow to 1", where_())
            } else {
                format!("{}: Σ_λi is not mono", where_())
            }
        }),
        Err(e) => report.record_error(LawId::TranspMono, || format!("{}: {e}", where_())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{FinSetCat, FnArrow};
    use crate::fam::{FinFamily, FinSetFam};
    use crate::sigma::{FinSetSigma, TrivialSigma};

    #[test]
    fn transports_are_identities() {
        let fam = FinSetFam::new(FinSetCat::new(3), 2);
        let s = FinSetSigma::new(fam.clone());
        let lam = FinFamily::new(vec![2, 0, 1]);
        let i = FnArrow::new(3, vec![0]);
        let t = transport(&s, &lam, &i, &i).unwrap();
        assert_eq!(t.lam_ij, FnArrow::new(2, vec![0, 1]));
        assert_eq!(t.lam_ij, t.lam_ji);
        let r = check_transport(&s).unwrap();
        assert!(r.passed(), "{r}");
        assert!(check_transport(&TrivialSigma { fam }).unwrap().passed());
        let j = FnArrow::new(3, vec![2]);
        assert!(matches!(transport(&s, &lam, &i, &j), Err(Error::NotEqualElements { .. })));
    }
}
