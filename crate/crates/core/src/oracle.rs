//! Exact brute-force ground truth over all of `S_k(A)`.
//!
//! These operations enumerate every size-`k` committee in lexicographic
//! order, so they are the arbiter the polynomial algorithms and mechanisms
//! are tested against. Enumeration is guarded by a cap on `C(m,k)`; partial
//! scans are never performed.

use crate::extensions::{compare, Comparison, Extension};
use crate::model::{Alt, Committee, Profile};
use crate::Error;

/// Default cap on the number of committees an exhaustive scan may visit.
pub const DEFAULT_ENUM_CAP: u128 = 10_000_000;

/// Efficiency answer with certificate: either the committee is efficient,
/// or an explicit Pareto-improving committee is given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Efficient,
    Improvable(Committee),
}

impl Verdict {
    pub fn is_efficient(&self) -> bool {
        matches!(self, Verdict::Efficient)
    }

    pub fn witness(&self) -> Option<&Committee> {
        match self {
            Verdict::Efficient => None,
            Verdict::Improvable(w) => Some(w),
        }
    }

    pub fn into_witness(self) -> Option<Committee> {
        match self {
            Verdict::Efficient => None,
            Verdict::Improvable(w) => Some(w),
        }
    }
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((m - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn check_cap(p: &Profile, cap: u128) -> Result<(), Error> {
    let required = binomial(p.num_alternatives(), p.committee_size());
    if required > cap {
        return Err(Error::InstanceTooLarge { required, cap });
    }
    Ok(())
}

/// Visits all size-`k` subsets of `1..=m` in lexicographic order.
pub fn for_each_committee<F: FnMut(&Committee) -> bool>(m: usize, k: usize, mut f: F) {
    debug_assert!(k >= 1 && k <= m);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let members: Vec<Alt> = idx.iter().map(|&i| Alt::from_index(i)).collect();
        let committee = Committee::new(members).expect("indices are distinct");
        if !f(&committee) {
            return;
        }
        // advance to the next combination
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if idx[pos] < m - (k - pos) {
                idx[pos] += 1;
                for j in pos + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// True iff `w` Pareto-dominates `v` under `ext`: every agent weakly prefers
/// `w` and at least one strictly prefers it.
pub fn pareto_dominates(
    profile: &Profile,
    ext: Extension,
    w: &Committee,
    v: &Committee,
) -> Result<bool, Error> {
    let mut strict = false;
    for order in profile.orders() {
        match compare(ext, order, w, v)? {
            Comparison::Better => strict = true,
            Comparison::Equal => {}
            Comparison::Worse | Comparison::Incomparable => return Ok(false),
        }
    }
    Ok(strict)
}

/// Brute-force efficiency check of `w`; the witness, when present, is the
/// lexicographically least dominating committee.
pub fn verify_bruteforce(profile: &Profile, ext: Extension, w: &Committee) -> Result<Verdict, Error> {
    verify_bruteforce_capped(profile, ext, w, DEFAULT_ENUM_CAP)
}

pub fn verify_bruteforce_capped(
    profile: &Profile,
    ext: Extension,
    w: &Committee,
    cap: u128,
) -> Result<Verdict, Error> {
    profile.check_committee(w)?;
    check_cap(profile, cap)?;
    let mut verdict = Verdict::Efficient;
    let mut failure: Option<Error> = None;
    for_each_committee(profile.num_alternatives(), profile.committee_size(), |v| {
        match pareto_dominates(profile, ext, v, w) {
            Ok(true) => {
                verdict = Verdict::Improvable(v.clone());
                false
            }
            Ok(false) => true,
            Err(e) => {
                failure = Some(e);
                false
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(verdict),
    }
}

/// All efficient committees under `ext`, sorted lexicographically.
pub fn enumerate_efficient(profile: &Profile, ext: Extension) -> Result<Vec<Committee>, Error> {
    enumerate_efficient_capped(profile, ext, DEFAULT_ENUM_CAP)
}

pub fn enumerate_efficient_capped(
    profile: &Profile,
    ext: Extension,
    cap: u128,
) -> Result<Vec<Committee>, Error> {
    check_cap(profile, cap)?;
    let mut all: Vec<Committee> = Vec::new();
    for_each_committee(profile.num_alternatives(), profile.committee_size(), |w| {
        all.push(w.clone());
        true
    });
    let mut efficient = Vec::new();
    for w in &all {
        let mut dominated = false;
        for v in &all {
            if pareto_dominates(profile, ext, v, w)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            efficient.push(w.clone());
        }
    }
    Ok(efficient)
}

/// Repeatedly applies `step` until it reports no improvement, collecting the
/// visited committees. Each step's output is checked to actually dominate
/// its predecessor; a violation aborts with [`Error::NonImprovingStep`].
///
/// The returned sequence starts at `start` and ends at a committee `step`
/// considers efficient.
pub fn improvement_chain<F>(
    profile: &Profile,
    ext: Extension,
    start: Committee,
    mut step: F,
) -> Result<Vec<Committee>, Error>
where
    F: FnMut(&Profile, &Committee) -> Result<Option<Committee>, Error>,
{
    profile.check_committee(&start)?;
    let mut chain = vec![start];
    while let Some(next) = step(profile, chain.last().unwrap())? {
        if !pareto_dominates(profile, ext, &next, chain.last().unwrap())? {
            return Err(Error::NonImprovingStep);
        }
        chain.push(next);
    }
    Ok(chain)
}

/// Improvement step backed by [`verify_bruteforce`].
pub fn bruteforce_step(
    ext: Extension,
    cap: u128,
) -> impl FnMut(&Profile, &Committee) -> Result<Option<Committee>, Error> {
    move |p, w| Ok(verify_bruteforce_capped(p, ext, w, cap)?.into_witness())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex1() -> Profile {
        Profile::parse("4 2 2\n1,2,3,4\n4,3,2,1\n").unwrap()
    }

    fn ex2() -> Profile {
        Profile::parse("4 2 4\n1,3,2,4\n1,4,2,3\n2,3,1,4\n2,4,1,3\n").unwrap()
    }

    fn ex3() -> Profile {
        Profile::parse(
            "6 2 5\n{1,3},{2,4,5,6}\n{2,3},{1,4,5,6}\n{2,4},{1,3,5,6}\n{4,5},{1,2,3,6}\n{5,6},{1,2,3,4}\n",
        )
        .unwrap()
    }

    fn c(s: &str) -> Committee {
        Committee::parse(s).unwrap()
    }

    #[test]
    fn lexicographic_enumeration() {
        let mut seen = Vec::new();
        for_each_committee(4, 2, |w| {
            seen.push(w.to_string());
            true
        });
        assert_eq!(seen, ["1,2", "1,3", "1,4", "2,3", "2,4", "3,4"]);
    }

    #[test]
    fn ab_dominates_cd_under_every_extension() {
        let p = ex2();
        for ext in Extension::ALL {
            assert!(pareto_dominates(&p, ext, &c("1,2"), &c("3,4")).unwrap(), "{ext}");
        }
    }

    #[test]
    fn nothing_dominates_itself() {
        let p = ex2();
        for ext in Extension::ALL {
            assert!(!pareto_dominates(&p, ext, &c("1,2"), &c("1,2")).unwrap());
        }
    }

    #[test]
    fn incomparability_blocks_rs_domination() {
        let p = ex1();
        assert!(!pareto_dominates(&p, Extension::Rs, &c("1,4"), &c("2,3")).unwrap());
        assert!(!pareto_dominates(&p, Extension::Rs, &c("2,3"), &c("1,4")).unwrap());
    }

    #[test]
    fn verify_returns_lex_least_witness() {
        let v = verify_bruteforce(&ex3(), Extension::Rs, &c("1,2")).unwrap();
        // both {2,3} and {3,4} dominate; {2,3} comes first
        assert_eq!(v.witness().unwrap(), &c("2,3"));
    }

    #[test]
    fn single_committee_instance_is_efficient() {
        let p = Profile::parse("3 3 2\n1,2,3\n3,{1,2}\n").unwrap();
        for ext in Extension::ALL {
            let v = verify_bruteforce(&p, ext, &c("1,2,3")).unwrap();
            assert!(v.is_efficient());
        }
    }

    #[test]
    fn best_efficient_committee_of_ex1() {
        let v = verify_bruteforce(&ex1(), Extension::Best, &c("1,4")).unwrap();
        assert!(v.is_efficient());
        let eff = enumerate_efficient(&ex1(), Extension::Best).unwrap();
        assert_eq!(eff, vec![c("1,4")]);
    }

    #[test]
    fn single_agent_strict_efficient_sets() {
        let p = Profile::parse("4 2 1\n2,4,1,3\n").unwrap();
        let top2 = c("2,4");
        for ext in [Extension::Rs, Extension::Dl, Extension::Ul, Extension::Worst] {
            assert_eq!(enumerate_efficient(&p, ext).unwrap(), vec![top2.clone()], "{ext}");
        }
        // best: every committee containing the top alternative
        let best = enumerate_efficient(&p, Extension::Best).unwrap();
        assert_eq!(best, vec![c("1,2"), c("2,3"), c("2,4")]);
    }

    #[test]
    fn cap_is_enforced() {
        let p = ex3();
        let err = verify_bruteforce_capped(&p, Extension::Rs, &c("1,2"), 3).unwrap_err();
        assert!(matches!(err, Error::InstanceTooLarge { required: 15, cap: 3 }));
        let err = enumerate_efficient_capped(&p, Extension::Rs, 3).unwrap_err();
        assert!(matches!(err, Error::InstanceTooLarge { .. }));
    }

    #[test]
    fn chain_from_efficient_committee_is_singleton() {
        let p = ex1();
        let chain = improvement_chain(
            &p,
            Extension::Best,
            c("1,4"),
            bruteforce_step(Extension::Best, DEFAULT_ENUM_CAP),
        )
        .unwrap();
        assert_eq!(chain, vec![c("1,4")]);
    }

    #[test]
    fn chain_on_ex3_has_length_two() {
        let p = ex3();
        let chain = improvement_chain(
            &p,
            Extension::Rs,
            c("1,2"),
            bruteforce_step(Extension::Rs, DEFAULT_ENUM_CAP),
        )
        .unwrap();
        assert_eq!(chain.len(), 2);
        let end = chain.last().unwrap();
        assert!(verify_bruteforce(&p, Extension::Rs, end).unwrap().is_efficient());
    }

    #[test]
    fn non_improving_step_is_rejected() {
        let p = ex2();
        let err = improvement_chain(&p, Extension::Best, c("3,4"), |_, _| Ok(Some(c("3,4"))))
            .unwrap_err();
        assert_eq!(err, Error::NonImprovingStep);
    }

    #[test]
    fn witnesses_are_sound() {
        let p = ex2();
        for ext in Extension::ALL {
            let v = verify_bruteforce(&p, ext, &c("3,4")).unwrap();
            let w = v.witness().expect("{c,d} is dominated");
            assert!(pareto_dominates(&p, ext, w, &c("3,4")).unwrap());
        }
    }
}
