//! Law identifiers and structured pass/fail reports.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Every law the engine knows how to check.
///
/// The string form (`as_str`) is the stable identifier used in reports, the
/// CLI (`--mutate LAW`) and JSON output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LawId {
    #[serde(rename = "cat.typing")]
    CatTyping,
    #[serde(rename = "cat.unit")]
    CatUnit,
    #[serde(rename = "cat.assoc")]
    CatAssoc,
    #[serde(rename = "fam1")]
    Fam1,
    #[serde(rename = "fam2")]
    Fam2,
    #[serde(rename = "presheaf.id")]
    PresheafId,
    #[serde(rename = "presheaf.comp")]
    PresheafComp,
    #[serde(rename = "elements.fibre")]
    ElementsFibre,
    #[serde(rename = "functor.id")]
    FunctorId,
    #[serde(rename = "functor.comp")]
    FunctorComp,
    #[serde(rename = "famfunctor.fam")]
    FamFunctorFam,
    #[serde(rename = "nat.naturality")]
    NatNaturality,
    #[serde(rename = "nat.triangle")]
    NatTriangle,
    #[serde(rename = "sigma.square")]
    SigmaSquare,
    #[serde(rename = "sigma.pullback")]
    SigmaPullback,
    #[serde(rename = "s1")]
    S1,
    #[serde(rename = "s2")]
    S2,
    #[serde(rename = "dep.typing")]
    DepTyping,
    #[serde(rename = "dep1")]
    Dep1,
    #[serde(rename = "dep2")]
    Dep2,
    #[serde(rename = "sections.section")]
    SectionsSection,
    #[serde(rename = "sections.eq1")]
    SectionsEq1,
    #[serde(rename = "sections.eq2")]
    SectionsEq2,
    #[serde(rename = "depsigma.typing")]
    DepSigmaTyping,
    #[serde(rename = "depsigma.compat")]
    DepSigmaCompat,
    #[serde(rename = "depsigma.prelement")]
    DepSigmaPrelement,
    #[serde(rename = "pr2.section")]
    Pr2Section,
    #[serde(rename = "pr2.outer")]
    Pr2Outer,
    #[serde(rename = "pr2prime.eq")]
    Pr2PrimeEq,
    #[serde(rename = "pr2prime.j")]
    Pr2PrimeJ,
    #[serde(rename = "transp.iso")]
    TranspIso,
    #[serde(rename = "transp.mono")]
    TranspMono,
    #[serde(rename = "elsigma.pr0")]
    ElementPr0,
    #[serde(rename = "elsigma.pr1")]
    ElementPr1,
    #[serde(rename = "elsigma.pr2")]
    ElementPr2,
    #[serde(rename = "elsigma.pr3")]
    ElementPr3,
    #[serde(rename = "elsigma.pr4")]
    ElementPr4,
    #[serde(rename = "exdo2.bij")]
    DepObjectBij,
    #[serde(rename = "weak.fam1")]
    WeakFam1,
    #[serde(rename = "weak.fam2")]
    WeakFam2,
    #[serde(rename = "cofam1")]
    Cofam1,
    #[serde(rename = "cofam2")]
    Cofam2,
    #[serde(rename = "count.hom")]
    CountHom,
    #[serde(rename = "count.sigma")]
    CountSigma,
    #[serde(rename = "count.dhom")]
    CountDhom,
    #[serde(rename = "count.sections")]
    CountSections,
}

impl LawId {
    pub const ALL: &'static [LawId] = &[
        LawId::CatTyping,
        LawId::CatUnit,
        LawId::CatAssoc,
        LawId::Fam1,
        LawId::Fam2,
        LawId::PresheafId,
        LawId::PresheafComp,
        LawId::ElementsFibre,
        LawId::FunctorId,
        LawId::FunctorComp,
        LawId::FamFunctorFam,
        LawId::NatNaturality,
        LawId::NatTriangle,
        LawId::SigmaSquare,
        LawId::SigmaPullback,
        LawId::S1,
        LawId::S2,
        LawId::DepTyping,
        LawId::Dep1,
        LawId::Dep2,
        LawId::SectionsSection,
        LawId::SectionsEq1,
        LawId::SectionsEq2,
        LawId::DepSigmaTyping,
        LawId::DepSigmaCompat,
        LawId::DepSigmaPrelement,
        LawId::Pr2Section,
        LawId::Pr2Outer,
        LawId::Pr2PrimeEq,
        LawId::Pr2PrimeJ,
        LawId::TranspIso,
        LawId::TranspMono,
        LawId::ElementPr0,
        LawId::ElementPr1,
        LawId::ElementPr2,
        LawId::ElementPr3,
        LawId::ElementPr4,
        LawId::DepObjectBij,
        LawId::WeakFam1,
        LawId::WeakFam2,
        LawId::Cofam1,
        LawId::Cofam2,
        LawId::CountHom,
        LawId::CountSigma,
        LawId::CountDhom,
        LawId::CountSections,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LawId::CatTyping => "cat.typing",
            LawId::CatUnit => "cat.unit",
            LawId::CatAssoc => "cat.assoc",
            LawId::Fam1 => "fam1",
            LawId::Fam2 => "fam2",
            LawId::PresheafId => "presheaf.id",
            LawId::PresheafComp => "presheaf.comp",
            LawId::ElementsFibre => "elements.fibre",
            LawId::FunctorId => "functor.id",
            LawId::FunctorComp => "functor.comp",
            LawId::FamFunctorFam => "famfunctor.fam",
            LawId::NatNaturality => "nat.naturality",
            LawId::NatTriangle => "nat.triangle",
            LawId::SigmaSquare => "sigma.square",
            LawId::SigmaPullback => "sigma.pullback",
            LawId::S1 => "s1",
            LawId::S2 => "s2",
            LawId::DepTyping => "dep.typing",
            LawId::Dep1 => "dep1",
            LawId::Dep2 => "dep2",
            LawId::SectionsSection => "sections.section",
            LawId::SectionsEq1 => "sections.eq1",
            LawId::SectionsEq2 => "sections.eq2",
            LawId::DepSigmaTyping => "depsigma.typing",
            LawId::DepSigmaCompat => "depsigma.compat",
            LawId::DepSigmaPrelement => "depsigma.prelement",
            LawId::Pr2Section => "pr2.section",
            LawId::Pr2Outer => "pr2.outer",
            LawId::Pr2PrimeEq => "pr2prime.eq",
            LawId::Pr2PrimeJ => "pr2prime.j",
            LawId::TranspIso => "transp.iso",
            LawId::TranspMono => "transp.mono",
            LawId::ElementPr0 => "elsigma.pr0",
            LawId::ElementPr1 => "elsigma.pr1",
            LawId::ElementPr2 => "elsigma.pr2",
            LawId::ElementPr3 => "elsigma.pr3",
            LawId::ElementPr4 => "elsigma.pr4",
            LawId::DepObjectBij => "exdo2.bij",
            LawId::WeakFam1 => "weak.fam1",
            LawId::WeakFam2 => "weak.fam2",
            LawId::Cofam1 => "cofam1",
            LawId::Cofam2 => "cofam2",
            LawId::CountHom => "count.hom",
            LawId::CountSigma => "count.sigma",
            LawId::CountDhom => "count.dhom",
            LawId::CountSections => "count.sections",
        }
    }

    pub fn parse(s: &str) -> Option<LawId> {
        LawId::ALL.iter().copied().find(|law| law.as_str() == s)
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one law over every instance the suite enumerated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawEntry {
    pub law: LawId,
    pub status: Status,
    /// Number of law instances examined.
    pub checked: usize,
    pub failed: usize,
    /// First counterexample in enumeration order; present iff `status` is fail.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    pub entries: Vec<LawEntry>,
}

impl LawReport {
    /// A report with one (pending) entry per law, in the given order.
    pub fn new(suite: impl Into<String>, laws: &[LawId]) -> Self {
        LawReport {
            suite: suite.into(),
            note: None,
            entries: laws
                .iter()
                .map(|&law| LawEntry {
                    law,
                    status: Status::Pass,
                    checked: 0,
                    failed: 0,
                    witness: None,
                })
                .collect(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn entry_mut(&mut self, law: LawId) -> &mut LawEntry {
        if let Some(idx) = self.entries.iter().position(|e| e.law == law) {
            return &mut self.entries[idx];
        }
        self.entries.push(LawEntry {
            law,
            status: Status::Pass,
            checked: 0,
            failed: 0,
            witness: None,
        });
        self.entries.last_mut().unwrap()
    }

    /// Records one law instance. The witness closure only runs on the first failure.
    pub fn record(&mut self, law: LawId, holds: bool, witness: impl FnOnce() -> String) {
        let entry = self.entry_mut(law);
        entry.checked += 1;
        if !holds {
            entry.failed += 1;
            entry.status = Status::Fail;
            if entry.witness.is_none() {
                entry.witness = Some(witness());
            }
        }
    }

    /// Records an instance whose evaluation itself errored; counts as a failure.
    pub fn record_error(&mut self, law: LawId, witness: impl FnOnce() -> String) {
        self.record(law, false, witness);
    }

    pub fn entry(&self, law: LawId) -> Option<&LawEntry> {
        self.entries.iter().find(|e| e.law == law)
    }

    pub fn status(&self, law: LawId) -> Option<Status> {
        self.entry(law).map(|e| e.status)
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failed_laws(&self) -> Vec<LawId> {
        self.entries
            .iter()
            .filter(|e| e.status == Status::Fail)
            .map(|e| e.law)
            .collect()
    }

    pub fn total_checked(&self) -> usize {
        self.entries.iter().map(|e| e.checked).sum()
    }

    /// Appends the entries of `other`, merging counts for laws present in both.
    pub fn merge(&mut self, other: LawReport) {
        for e in other.entries {
            let mine = self.entry_mut(e.law);
            mine.checked += e.checked;
            mine.failed += e.failed;
            if e.status == Status::Fail {
                mine.status = Status::Fail;
                if mine.witness.is_none() {
                    mine.witness = e.witness;
                }
            }
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite {}", self.suite)?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        writeln!(f)?;
        for e in &self.entries {
            let status = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            write!(f, "  {status} {:<20} checked={}", e.law.as_str(), e.checked)?;
            if e.failed > 0 {
                write!(f, " failed={}", e.failed)?;
            }
            if let Some(w) = &e.witness {
                write!(f, " witness: {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_only_on_failure() {
        let mut r = LawReport::new("t", &[LawId::Fam1, LawId::Fam2]);
        r.record(LawId::Fam1, true, || unreachable!());
        r.record(LawId::Fam2, false, || "first".into());
        r.record(LawId::Fam2, false, || "second".into());
        assert_eq!(r.status(LawId::Fam1), Some(Status::Pass));
        assert!(r.entry(LawId::Fam1).unwrap().witness.is_none());
        let e = r.entry(LawId::Fam2).unwrap();
        assert_eq!((e.checked, e.failed), (2, 2));
        assert_eq!(e.witness.as_deref(), Some("first"));
        assert!(!r.passed());
    }

    #[test]
    fn law_ids_round_trip_through_strings() {
        for &law in LawId::ALL {
            assert_eq!(LawId::parse(law.as_str()), Some(law));
            let json = serde_json::to_string(&law).unwrap();
            assert_eq!(json, format!("\"{}\"", law.as_str()));
        }
    }
}
