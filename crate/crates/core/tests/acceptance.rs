//! Acceptance run: one pass/fail line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use depcat::cat::FinSetCat;
use depcat::dep::{check_dep_laws, check_sections, GlobalSectionsDep};
use depcat::fam::{check_fam_laws, check_weak_fam_laws, FinSetFam, Reversed, SliceFam, TableFam};
use depcat::instances::{build, mutate, run_suites, suite_of, FamChoice, InstanceSpec, Model, RunReport};
use depcat::sigma::TrivialSigma;
use depcat::{Error, LawId, LawReport, Status};

type Outcome = Result<String, String>;

const TIME_LIMIT: Duration = Duration::from_secs(60);

struct Runs {
    finset: RunReport,
    z4: RunReport,
    z5: RunReport,
    chain: RunReport,
    chain_fam: TableFam,
    elapsed: Duration,
}

fn err(e: Error) -> String {
    e.to_string()
}

fn run(spec: &InstanceSpec) -> Result<RunReport, String> {
    run_suites(&build(spec).map_err(err)?, None, 2).map_err(err)
}

fn runs() -> Result<Runs, String> {
    let start = Instant::now();
    let finset = run(&InstanceSpec::finset(3, 2))?;
    let z4 = run(&InstanceSpec::ring(4).map_err(err)?)?;
    let z5 = run(&InstanceSpec::ring(5).map_err(err)?)?;
    let chain_spec = InstanceSpec::chain(3, FamChoice::Coslice);
    let chain = run(&chain_spec)?;
    let chain_fam = match build(&chain_spec).map_err(err)? {
        Model::Table(m) => m.fam.ok_or("chain model has no fam layer")?,
        Model::FinSet(_) => return Err("chain spec built a finset model".into()),
    };
    Ok(Runs {
        finset,
        z4,
        z5,
        chain,
        chain_fam,
        elapsed: start.elapsed(),
    })
}

fn find<'a>(run: &'a RunReport, name: &str) -> Result<&'a LawReport, String> {
    run.reports
        .iter()
        .find(|r| r.suite == name)
        .ok_or_else(|| format!("no {name} report"))
}

/// Every law present, passing, and checked at least once. Returns the instance count.
fn holds(r: &LawReport, laws: &[LawId]) -> Result<usize, String> {
    let mut total = 0;
    for &law in laws {
        let e = r.entry(law).ok_or_else(|| format!("{}: {law} missing", r.suite))?;
        if e.status != Status::Pass {
            return Err(format!("{}: {law} fails: {}", r.suite, e.witness.clone().unwrap_or_default()));
        }
        if e.checked == 0 {
            return Err(format!("{}: {law} has no instances", r.suite));
        }
        total += e.checked;
    }
    Ok(total)
}

fn named(runs: &[(&RunReport, &[&str])], laws: &[LawId]) -> Result<usize, String> {
    let mut total = 0;
    for (run, names) in runs {
        for name in *names {
            total += holds(find(run, name)?, laws)?;
        }
    }
    Ok(total)
}

fn layer_suites(r: &Runs) -> Outcome {
    let all = [
        ("finset", &r.finset),
        ("Z/4", &r.z4),
        ("Z/5", &r.z5),
        ("3-chain", &r.chain),
    ];
    for (label, run) in all {
        if let Some(bad) = run.reports.iter().find(|rep| !rep.passed()) {
            return Err(format!("{label}: {bad}"));
        }
        find(run, "sigma/trivial")?;
        find(run, "dep/trivial")?;
        find(run, "depsigma/trivial")?;
    }
    for name in ["fam/constant", "sigma/product", "dep/constant", "depsigma/product"] {
        find(&r.finset, name)?;
    }
    for run in [&r.z4, &r.z5] {
        for name in ["category", "fam", "sigma", "dep", "depsigma"] {
            find(run, name)?;
        }
    }
    find(&r.chain, "fam")?;
    if r.elapsed >= TIME_LIMIT {
        return Err(format!("took {:.1}s", r.elapsed.as_secs_f64()));
    }
    let laws: usize = all.iter().map(|(_, run)| run.summary().instances).sum();
    Ok(format!("{laws} law instances in {:.1}s", r.elapsed.as_secs_f64()))
}

fn global_sections(r: &Runs) -> Outcome {
    use LawId::*;
    let mut total = named(
        &[
            (&r.finset, &["dep/sections-finset", "dep/sections-product"]),
            (&r.z4, &["dep/sections"]),
            (&r.z5, &["dep/sections"]),
        ],
        &[Dep1, Dep2],
    )?;
    total += named(
        &[
            (&r.finset, &["sections/finset", "sections/product"]),
            (&r.z4, &["sections"]),
            (&r.z5, &["sections"]),
        ],
        &[SectionsSection, SectionsEq1, SectionsEq2],
    )?;
    let finset = GlobalSectionsDep::new(TrivialSigma {
        fam: FinSetFam::new(FinSetCat::new(3), 2),
    });
    let chain = GlobalSectionsDep::new(TrivialSigma { fam: r.chain_fam.clone() });
    total += holds(&check_dep_laws(&finset), &[Dep1, Dep2])?;
    total += holds(&check_sections(&finset), &[SectionsEq1, SectionsEq2])?;
    total += holds(&check_dep_laws(&chain), &[Dep1, Dep2])?;
    total += holds(&check_sections(&chain), &[SectionsEq1, SectionsEq2])?;
    Ok(format!("{total} instances, 0 violations"))
}

fn canonical_pr2(r: &Runs) -> Outcome {
    use LawId::*;
    let mut total = named(
        &[
            (&r.finset, &["depsigma/canonical-finset", "depsigma/canonical-product"]),
            (&r.z4, &["depsigma/canonical"]),
            (&r.z5, &["depsigma/canonical"]),
        ],
        &[DepSigmaCompat],
    )?;
    total += named(
        &[
            (&r.finset, &["pr2/canonical-finset", "pr2/canonical-product"]),
            (&r.z4, &["pr2/canonical"]),
            (&r.z5, &["pr2/canonical"]),
        ],
        &[Pr2Section, Pr2Outer],
    )?;
    Ok(format!("{total} instances, 0 violations"))
}

fn transports(r: &Runs) -> Outcome {
    let total = named(
        &[(&r.finset, &["transport/finset", "transport/product", "transport/trivial"])],
        &[LawId::TranspIso, LawId::TranspMono],
    )?;
    Ok(format!("{total} instances, 0 violations"))
}

fn elements(r: &Runs) -> Outcome {
    use LawId::*;
    let total = named(
        &[(&r.finset, &["elsigma/finset", "elsigma/canonical-finset"])],
        &[ElementPr0, ElementPr1, ElementPr2, ElementPr3, ElementPr4],
    )?;
    Ok(format!("{total} instances, 0 violations"))
}

fn counting(r: &Runs) -> Outcome {
    use LawId::*;
    let total = named(&[(&r.finset, &["counting/finset"])], &[CountHom, CountSigma, CountDhom, CountSections])?;
    Ok(format!("{total} exact counts"))
}

fn dep_objects(r: &Runs) -> Outcome {
    let total = named(&[(&r.finset, &["exdo2/finset"])], &[LawId::DepObjectBij])?;
    Ok(format!("{total} round trips"))
}

fn weak_strict() -> Outcome {
    let slice = SliceFam::new(FinSetCat::new(3), Reversed).map_err(err)?;
    let weak = check_weak_fam_laws(&slice);
    holds(&weak, &[LawId::WeakFam1, LawId::WeakFam2])?;
    let strict = check_fam_laws(&slice);
    let failed = strict.failed_laws();
    let law = failed.first().ok_or("strict laws hold on the reversed chooser")?;
    let witness = strict
        .entry(*law)
        .and_then(|e| e.witness.clone())
        .ok_or("strict failure without a witness")?;
    Ok(format!("weak laws hold; strict {law} fails at {witness}"))
}

fn mutations() -> Outcome {
    let mut tally = Vec::new();
    for (label, spec) in [
        ("finset", InstanceSpec::finset(2, 2)),
        ("Z/4", InstanceSpec::ring(4).map_err(err)?),
    ] {
        let model = build(&spec).map_err(err)?;
        let (mut detected, mut planted) = (0, 0);
        for &law in LawId::ALL.iter().filter(|l| suite_of(**l).is_some()) {
            match mutate(&model, law) {
                Ok(o) => {
                    planted += 1;
                    if !o.detected() {
                        return Err(format!("{label}: {o}"));
                    }
                    detected += 1;
                }
                // Only the finite-set model is required to host every target.
                Err(Error::MutationNotApplicable(_)) if label != "finset" => {}
                Err(e) => return Err(format!("{label} {law}: {e}")),
            }
        }
        tally.push(format!("{label} {detected}/{planted}"));
    }
    Ok(format!("mutations detected: {}", tally.join(", ")))
}

fn main() -> ExitCode {
    let runs = runs();
    let with_runs = |f: fn(&Runs) -> Outcome| match &runs {
        Ok(r) => f(r),
        Err(e) => Err(e.clone()),
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("layer suites on every instance", with_runs(layer_suites)),
        ("global sections form a dependent structure", with_runs(global_sections)),
        ("canonical second projections are compatible", with_runs(canonical_pr2)),
        ("transports are mutually inverse, Sigma arrows at elements are mono", with_runs(transports)),
        ("elements of Sigma objects", with_runs(elements)),
        ("counting oracles", with_runs(counting)),
        ("arrows and dependent objects correspond", with_runs(dep_objects)),
        ("weak laws hold where strict laws fail", weak_strict()),
        ("every planted defect is detected", mutations()),
    ];
    let mut ok = true;
    for (i, (title, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {title}: {detail}", i + 1),
            Err(reason) => {
                ok = false;
                println!("criterion {}: FAIL  {title}: {reason}", i + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
