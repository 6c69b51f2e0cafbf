//! Generate a structure document, round-trip it through JSON, run the law
//! suites and plant a defect.

use depcat::instances::{deserialize, generate, mutate, run_suites, serialize, InstanceSpec, Model, Suite};
use depcat::LawId;

fn main() -> depcat::Result<()> {
    let doc = generate(&InstanceSpec::ring(4)?, 2)?;
    let text = serialize(&doc);
    assert_eq!(deserialize(text.as_bytes())?, doc);
    println!("document: {} bytes", text.len());

    let model = Model::from_document(&doc)?;
    let report = run_suites(&model, Some(&[Suite::Sigma, Suite::Dep, Suite::Depsigma]), 2)?;
    println!("{report}");

    let outcome = mutate(&model, LawId::S2)?;
    println!("{outcome}");
    Ok(())
}
