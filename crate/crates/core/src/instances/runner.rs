//! The law-suite runner.

use std::fmt;

use serde::Serialize;

use crate::cat::{check_category_laws, materialize, terminal, Category, FinCat};
use crate::counting::check_counting;
use crate::dep::{check_dep_laws, check_sections, dep_object_bijection, ConstantDep, FinSetDep, GlobalSectionsDep, TrivialDep};
use crate::depsigma::{DepSigmaStructure,
    check_canonical_pr2, check_depsigma_laws, check_elements, pr2_prime_check, CanonicalPr2, FinSetDepSigma,
    ProductDepSigma, TrivialDepSigma,
};
use crate::error::{Error, Result};
use crate::fam::{
    check_cofam_laws, check_fam_laws, check_weak_fam_laws, CofamFromOp, ConstantFam, CosliceFam, FamStructure,
    FinSetFam, Reversed, SliceFam, ToposFam,
};
use crate::report::{LawId, LawReport};
use crate::sigma::{check_sigma_laws, check_transport, FinSetSigma, ProductSigma, SigmaStructure, TrivialSigma};

use super::document::{write_value, FinSetModel, Model, TableModel};

/// Default enumeration budget for intensional families: `b` up to size 2.
pub const DEFAULT_BUDGET: usize = 2;

/// `DEPCAT_BUDGET` if set, else [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> Result<usize> {
    match std::env::var("DEPCAT_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("DEPCAT_BUDGET must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Category,
    Fam,
    Sigma,
    Transport,
    Dep,
    Depsigma,
    Elements,
    DepObjects,
    Counting,
    Weak,
    Cofam,
    Trivial,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Category,
        Suite::Fam,
        Suite::Sigma,
        Suite::Transport,
        Suite::Dep,
        Suite::Depsigma,
        Suite::Elements,
        Suite::DepObjects,
        Suite::Counting,
        Suite::Weak,
        Suite::Cofam,
        Suite::Trivial,
    ];

    /// One suite per document layer.
    pub const LAYERS: [Suite; 5] = [Suite::Category, Suite::Fam, Suite::Sigma, Suite::Dep, Suite::Depsigma];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Category => "category",
            Suite::Fam => "fam",
            Suite::Sigma => "sigma",
            Suite::Transport => "transport",
            Suite::Dep => "dep",
            Suite::Depsigma => "depsigma",
            Suite::Elements => "elsigma",
            Suite::DepObjects => "exdo2",
            Suite::Counting => "counting",
            Suite::Weak => "weak",
            Suite::Cofam => "cofam",
            Suite::Trivial => "trivial",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.as_str() == s)
    }

    /// A comma-separated list; `all` selects every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Suite::ALL);
                continue;
            }
            out.push(Suite::parse(part).ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.as_str()).collect();
                Error::InvalidSpec(format!("unknown suite {part:?}; expected one of {}", names.join(", ")))
            })?);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedSuite {
    pub suite: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunSummary {
    pub laws: usize,
    pub failed_laws: usize,
    pub instances: usize,
    pub failed_instances: usize,
}

/// Reports in suite order, then the suites that did not apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub reports: Vec<LawReport>,
    pub skipped: Vec<SkippedSuite>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(LawReport::passed)
    }

    pub fn summary(&self) -> RunSummary {
        let entries = || self.reports.iter().flat_map(|r| r.entries.iter());
        RunSummary {
            laws: entries().count(),
            failed_laws: entries().filter(|e| e.failed > 0).count(),
            instances: entries().map(|e| e.checked).sum(),
            failed_instances: entries().map(|e| e.failed).sum(),
        }
    }

    /// The first failing entry for `law` in any report.
    pub fn failure(&self, law: LawId) -> Option<(&LawReport, &crate::report::LawEntry)> {
        self.reports
            .iter()
            .find_map(|r| r.entry(law).filter(|e| e.failed > 0).map(|e| (r, e)))
    }

    /// Canonical JSON: sorted keys, trailing newline.
    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("reports are plain data");
        value["summary"] = serde_json::to_value(self.summary()).expect("plain data");
        value["passed"] = self.passed().into();
        let mut out = String::new();
        write_value(&value, 0, &mut out);
        out.push('\n');
        out
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.reports {
            write!(f, "{r}")?;
        }
        for s in &self.skipped {
            writeln!(f, "suite {} skipped: {}", s.suite, s.reason)?;
        }
        let s = self.summary();
        writeln!(
            f,
            "{}: {} laws, {} failed; {} instances, {} failed",
            if self.passed() { "PASS" } else { "FAIL" },
            s.laws,
            s.failed_laws,
            s.instances,
            s.failed_instances
        )
    }
}

/// `Ok` if the suite applies to the model, else the reason it does not.
pub fn applicable(model: &Model, suite: Suite) -> std::result::Result<(), String> {
    let missing = |layer: &str| Err(format!("document has no {layer} layer"));
    let no_terminal = || Err("category has no terminal object".to_string());
    match model {
        Model::FinSet(m) => {
            let has_one = m.cat.max_object >= 1;
            match suite {
                Suite::Category | Suite::DepObjects | Suite::Weak | Suite::Cofam => Ok(()),
                Suite::Fam | Suite::Counting | Suite::Trivial if m.fiber_cap.is_none() => missing("fam"),
                Suite::Fam | Suite::Counting | Suite::Trivial => Ok(()),
                Suite::Sigma if !m.sigma => missing("sigma"),
                Suite::Sigma => Ok(()),
                Suite::Transport if !m.sigma => missing("sigma"),
                Suite::Transport if !has_one => no_terminal(),
                Suite::Transport => Ok(()),
                Suite::Dep if !m.dep => missing("dep"),
                Suite::Dep => Ok(()),
                Suite::Depsigma if !m.depsigma => missing("depsigma"),
                Suite::Depsigma => Ok(()),
                Suite::Elements if !m.depsigma => missing("depsigma"),
                Suite::Elements if !has_one => no_terminal(),
                Suite::Elements => Ok(()),
            }
        }
        Model::Table(m) => {
            let has_one = terminal(&m.cat).is_some();
            match suite {
                Suite::Category | Suite::Cofam => Ok(()),
                Suite::Fam | Suite::Trivial if m.fam.is_none() => missing("fam"),
                Suite::Fam | Suite::Trivial => Ok(()),
                Suite::Sigma if m.sigma.is_none() => missing("sigma"),
                Suite::Sigma => Ok(()),
                Suite::Transport if m.sigma.is_none() => missing("sigma"),
                Suite::Transport if !has_one => no_terminal(),
                Suite::Transport => Ok(()),
                Suite::Dep if m.dep.is_none() => missing("dep"),
                Suite::Dep => Ok(()),
                Suite::Depsigma if m.depsigma.is_none() => missing("depsigma"),
                Suite::Depsigma => Ok(()),
                Suite::Elements if m.depsigma.is_none() => missing("depsigma"),
                Suite::Elements if !has_one => no_terminal(),
                Suite::Elements => Ok(()),
                Suite::DepObjects => ProductSigma::new(m.cat.clone())
                    .map(|_| ())
                    .map_err(|_| "category lacks binary products".to_string()),
                Suite::Counting | Suite::Weak => Err("needs a finset category".to_string()),
            }
        }
    }
}

/// Runs `suites` (every applicable suite if `None`). An explicitly requested
/// suite that does not apply is an error.
pub fn run_suites(model: &Model, suites: Option<&[Suite]>, budget: usize) -> Result<RunReport> {
    let mut out = RunReport {
        reports: Vec::new(),
        skipped: Vec::new(),
    };
    let selected: Vec<Suite> = match suites {
        Some(s) => {
            let mut s = s.to_vec();
            s.sort();
            s.dedup();
            s
        }
        None => Suite::ALL.to_vec(),
    };
    for suite in selected {
        match applicable(model, suite) {
            Ok(()) => out.reports.extend(run_suite(model, suite, budget)?),
            Err(reason) if suites.is_none() => out.skipped.push(SkippedSuite {
                suite: suite.as_str().into(),
                reason,
            }),
            Err(reason) => return Err(Error::LayerMissing(format!("suite {suite}: {reason}"))),
        }
    }
    Ok(out)
}

fn named(mut r: LawReport, name: &str) -> LawReport {
    r.suite = name.to_string();
    r
}

fn run_suite(model: &Model, suite: Suite, budget: usize) -> Result<Vec<LawReport>> {
    match model {
        Model::FinSet(m) => finset_suite(m, suite, budget),
        Model::Table(m) => table_suite(m, suite),
    }
}

fn cofam_report(cat: &FinCat) -> Result<LawReport> {
    let cofam = CofamFromOp::new(cat.clone(), CosliceFam::new(cat.opposite()))?;
    Ok(named(check_cofam_laws(&cofam), "cofam/coslice-op"))
}

fn finset_suite(m: &FinSetModel, suite: Suite, budget: usize) -> Result<Vec<LawReport>> {
    let cat = m.cat;
    let cap = m.fiber_cap.unwrap_or(0);
    let fam = || FinSetFam::new(cat, cap);
    let sigma = || FinSetSigma::new(fam());
    Ok(match suite {
        Suite::Category => vec![named(check_category_laws(&materialize(&cat)?.cat), "category/finset")],
        Suite::Fam => {
            let mut out = vec![
                named(check_fam_laws(&fam()), "fam/finset"),
                named(check_fam_laws(&ConstantFam::new(cat)), "fam/constant"),
                named(check_fam_laws(&CosliceFam::new(cat)), "fam/coslice"),
            ];
            match ToposFam::new(cat, budget) {
                Ok(t) => out.push(named(check_fam_laws(&t), "fam/topos").with_note(format!("b ≤ {budget}"))),
                Err(Error::NoSubobjectClassifier(_)) => {}
                Err(e) => return Err(e),
            }
            out
        }
        Suite::Sigma => vec![
            named(check_sigma_laws(&sigma()), "sigma/finset"),
            named(check_sigma_laws(&ProductSigma::new(cat)?), "sigma/product"),
        ],
        Suite::Transport => vec![
            named(check_transport(&sigma())?, "transport/finset"),
            named(check_transport(&ProductSigma::new(cat)?)?, "transport/product"),
        ],
        Suite::Dep => {
            let sections = GlobalSectionsDep::new(sigma());
            let product_sections = GlobalSectionsDep::new(ProductSigma::new(cat)?);
            vec![
                named(check_dep_laws(&FinSetDep::new(fam())), "dep/finset"),
                named(check_dep_laws(&ConstantDep::new(cat)), "dep/constant"),
                named(check_dep_laws(&sections), "dep/sections-finset"),
                named(check_sections(&sections), "sections/finset"),
                named(check_dep_laws(&product_sections), "dep/sections-product"),
                named(check_sections(&product_sections), "sections/product"),
            ]
        }
        Suite::Depsigma => {
            let canonical = CanonicalPr2::new(sigma());
            let product_canonical = CanonicalPr2::new(ProductSigma::new(cat)?);
            let products = ProductSigma::new(cat)?;
            let mut prime = LawReport::new("pr2prime", &[LawId::Pr2PrimeEq, LawId::Pr2PrimeJ]);
            for a in cat.objects() {
                for b in cat.objects() {
                    prime.merge(pr2_prime_check(&products, &a, &b)?);
                }
            }
            vec![
                named(check_depsigma_laws(&FinSetDepSigma::new(fam())), "depsigma/finset"),
                named(check_depsigma_laws(&ProductDepSigma::new(cat)?), "depsigma/product"),
                named(check_depsigma_laws(&canonical), "depsigma/canonical-finset"),
                named(check_canonical_pr2(&canonical), "pr2/canonical-finset"),
                named(check_depsigma_laws(&product_canonical), "depsigma/canonical-product"),
                named(check_canonical_pr2(&product_canonical), "pr2/canonical-product"),
                named(prime, "pr2prime/product"),
            ]
        }
        Suite::Elements => vec![
            named(check_elements(&FinSetDepSigma::new(fam()))?, "elsigma/finset"),
            named(check_elements(&CanonicalPr2::new(sigma()))?, "elsigma/canonical-finset"),
        ],
        Suite::DepObjects => {
            let mut r = LawReport::new("exdo2", &[LawId::DepObjectBij]);
            for a in cat.objects() {
                for b in cat.objects() {
                    r.merge(dep_object_bijection(&cat, &a, &b)?.check(&cat));
                }
            }
            vec![named(r, "exdo2/finset")]
        }
        Suite::Counting => vec![named(check_counting(cat, cap)?, "counting/finset")],
        Suite::Weak => {
            let slice = SliceFam::new(cat, Reversed)?;
            let strict = check_fam_laws(&slice);
            let note = match strict.failed_laws().first() {
                Some(law) => format!(
                    "strict {law} fails: {}",
                    strict.entry(*law).and_then(|e| e.witness.clone()).unwrap_or_default()
                ),
                None => "strict laws hold".to_string(),
            };
            vec![named(check_weak_fam_laws(&slice), "weak/slice-reversed").with_note(note)]
        }
        Suite::Cofam => vec![cofam_report(&materialize(&cat)?.cat)?],
        Suite::Trivial => trivial_reports(fam())?,
    })
}

fn trivial_reports<F: FamStructure + Clone>(fam: F) -> Result<Vec<LawReport>> {
    let ds = TrivialDepSigma::new(fam.clone());
    let mut out = vec![
        named(check_sigma_laws(&TrivialSigma { fam: fam.clone() }), "sigma/trivial"),
        named(check_dep_laws(&TrivialDep { fam }), "dep/trivial"),
        named(check_depsigma_laws(&ds), "depsigma/trivial"),
    ];
    if terminal(ds.sigma().base()).is_some() {
        out.push(named(check_transport(ds.sigma())?, "transport/trivial"));
        out.push(named(check_elements(&ds)?, "elsigma/trivial"));
    }
    Ok(out)
}

fn table_suite(m: &TableModel, suite: Suite) -> Result<Vec<LawReport>> {
    let layer = |what: &str| Error::LayerMissing(format!("{what} layer"));
    Ok(match suite {
        Suite::Category => vec![check_category_laws(&m.cat)],
        Suite::Fam => vec![check_fam_laws(m.fam.as_ref().ok_or_else(|| layer("fam"))?)],
        Suite::Sigma => vec![check_sigma_laws(m.sigma.as_ref().ok_or_else(|| layer("sigma"))?)],
        Suite::Transport => vec![check_transport(m.sigma.as_ref().ok_or_else(|| layer("sigma"))?)?],
        Suite::Dep => {
            let mut out = vec![check_dep_laws(m.dep.as_ref().ok_or_else(|| layer("dep"))?)];
            if let Some(sigma) = &m.sigma {
                let sections = GlobalSectionsDep::new(sigma.clone());
                out.push(named(check_dep_laws(&sections), "dep/sections"));
                out.push(check_sections(&sections));
            }
            out
        }
        Suite::Depsigma => {
            let ds = m.depsigma.as_ref().ok_or_else(|| layer("depsigma"))?;
            let canonical = CanonicalPr2::new(ds.sigma.clone());
            vec![
                check_depsigma_laws(ds),
                named(check_depsigma_laws(&canonical), "depsigma/canonical"),
                named(check_canonical_pr2(&canonical), "pr2/canonical"),
            ]
        }
        Suite::Elements => vec![check_elements(m.depsigma.as_ref().ok_or_else(|| layer("depsigma"))?)?],
        Suite::DepObjects => {
            let mut r = LawReport::new("exdo2", &[LawId::DepObjectBij]);
            for a in m.cat.objects() {
                for b in m.cat.objects() {
                    r.merge(dep_object_bijection(&m.cat, &a, &b)?.check(&m.cat));
                }
            }
            vec![r]
        }
        Suite::Counting | Suite::Weak => return Err(layer("finset category")),
        Suite::Cofam => vec![cofam_report(&m.cat)?],
        Suite::Trivial => trivial_reports(m.fam.clone().ok_or_else(|| layer("fam"))?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{build, InstanceSpec};

    #[test]
    fn suite_lists() {
        assert_eq!(Suite::parse_list("sigma, dep,sigma").unwrap(), vec![Suite::Sigma, Suite::Dep]);
        assert_eq!(Suite::parse_list("all").unwrap().len(), 12);
        assert!(Suite::parse_list("nope").is_err());
    }

    #[test]
    fn ring_suites_and_skips() {
        let m = build(&InstanceSpec::ring(4).unwrap()).unwrap();
        let r = run_suites(&m, None, DEFAULT_BUDGET).unwrap();
        assert!(r.passed(), "{r}");
        let skipped: Vec<_> = r.skipped.iter().map(|s| s.suite.as_str()).collect();
        assert_eq!(skipped, vec!["transport", "elsigma", "exdo2", "counting", "weak"]);
        let r = run_suites(&m, Some(&[Suite::Sigma, Suite::Dep, Suite::Depsigma]), DEFAULT_BUDGET).unwrap();
        assert!(r.passed());
        assert!(matches!(run_suites(&m, Some(&[Suite::Transport]), 2), Err(Error::LayerMissing(_))));
    }

    #[test]
    fn mutated_sigma_table_fails() {
        let Model::Table(mut m) = build(&InstanceSpec::ring(4).unwrap()).unwrap() else {
            panic!("expected tables");
        };
        let sigma = m.sigma.take().unwrap();
        let (lam, f, t) = sigma.sigma_arrow_triples()[5];
        m.sigma = Some(sigma.with_sigma_arr(lam, f, crate::cat::ArrowId((t.0 + 1) % 4)));
        let r = run_suites(&Model::Table(m), Some(&[Suite::Sigma]), 2).unwrap();
        assert!(!r.passed());
        assert!(r.to_string().contains("FAIL"));
    }

    #[test]
    fn json_is_sorted_and_stable() {
        let m = build(&InstanceSpec::ring(2).unwrap()).unwrap();
        let a = run_suites(&m, None, 2).unwrap().to_json();
        let b = run_suites(&m, None, 2).unwrap().to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["passed"], true);
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, vec!["passed", "reports", "skipped", "summary"]);
    }
}
