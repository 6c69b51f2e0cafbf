//! Instance generators, structure documents, the law-suite runner and
//! mutation testing.

mod builders;
mod document;
mod generate;
mod mutation;
mod runner;

pub(crate) use builders::one_object;
pub use builders::{chain, discrete, monoid, poset};
pub use document::{
    deserialize, serialize, CategorySection, DepSection, DepSigmaSection, FamSection, FinSetModel, Model,
    SigmaSection, StructureDocument, TableModel, FORMAT_VERSION,
};
pub use generate::{build, generate, FamChoice, InstanceSpec, MAX_FIBER_CAP, MAX_FINSET_OBJECT};
pub use runner::{applicable, budget_from_env, run_suites, RunReport, RunSummary, SkippedSuite, Suite, DEFAULT_BUDGET};
pub use mutation::{mutate, suite_of, MutationOutcome, MAX_CANDIDATES};
