//! Cross-extension efficiency relations on one instance.
//!
//! Computes the five efficient sets exhaustively and checks the relations
//! that hold between them on every instance: DL- and UL-efficiency each
//! imply RS-efficiency, and each of the pairs (best, DL), (worst, UL),
//! (DL, UL), (best, RS), (worst, RS) always shares at least one committee.

use crate::extensions::Extension;
use crate::model::{Committee, Profile};
use crate::oracle::enumerate_efficient_capped;
use crate::Error;

/// Outcome of one relation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub pass: bool,
}

/// The efficient sets and the seven relation checks.
#[derive(Debug, Clone)]
pub struct RelationsReport {
    /// Efficient committees per extension, in [`Extension::ALL`] order.
    pub efficient: Vec<(Extension, Vec<Committee>)>,
    pub checks: Vec<RelationCheck>,
}

impl RelationsReport {
    pub fn efficient_for(&self, ext: Extension) -> &[Committee] {
        &self
            .efficient
            .iter()
            .find(|(e, _)| *e == ext)
            .expect("all extensions computed")
            .1
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn relations_report(profile: &Profile, cap: u128) -> Result<RelationsReport, Error> {
    let efficient: Vec<(Extension, Vec<Committee>)> = Extension::ALL
        .iter()
        .map(|&ext| Ok((ext, enumerate_efficient_capped(profile, ext, cap)?)))
        .collect::<Result<_, Error>>()?;
    let set = |ext: Extension| -> &[Committee] {
        &efficient.iter().find(|(e, _)| *e == ext).unwrap().1
    };
    let subset = |a: &[Committee], b: &[Committee]| a.iter().all(|w| b.contains(w));
    let meets = |a: &[Committee], b: &[Committee]| a.iter().any(|w| b.contains(w));

    let rs = set(Extension::Rs);
    let dl = set(Extension::Dl);
    let ul = set(Extension::Ul);
    let best = set(Extension::Best);
    let worst = set(Extension::Worst);

    let checks = vec![
        RelationCheck { name: "dl_subset_rs", pass: subset(dl, rs) },
        RelationCheck { name: "ul_subset_rs", pass: subset(ul, rs) },
        RelationCheck { name: "best_meets_dl", pass: meets(best, dl) },
        RelationCheck { name: "worst_meets_ul", pass: meets(worst, ul) },
        RelationCheck { name: "dl_meets_ul", pass: meets(dl, ul) },
        RelationCheck { name: "best_meets_rs", pass: meets(best, rs) },
        RelationCheck { name: "worst_meets_rs", pass: meets(worst, rs) },
    ];

    Ok(RelationsReport { efficient, checks })
}
