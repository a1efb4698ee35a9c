//! Electing mechanisms: the serial dictatorship family and a manipulation
//! tester.
//!
//! [`committee_sd`] lets each agent, in permutation order, lock in their
//! most preferred still-feasible alternatives; its output is efficient under
//! the responsive, downward- and upward-lexicographic extensions and the
//! mechanism is strategyproof. [`worst_sd`] is the analogue for the worst
//! extension. [`fair_sd`] caps each turn at `⌈k/n⌉` picks, which costs
//! strategyproofness. [`sp_check`] searches misreports for a profitable
//! manipulation.

use std::collections::BTreeSet;

use rand::SeedableRng;

use crate::extensions::{compare, Comparison, Extension};
use crate::model::{all_weak_orders, Alt, Committee, Profile, WeakOrder};
use crate::oracle::improvement_chain;
use crate::polyalgos::{rs_score_elect, worst_verify_step};
use crate::sampling::random_weak_order;
use crate::Error;

/// An ordering of the agents (0-based ids, a bijection on `0..n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    pub fn new(order: Vec<usize>) -> Result<Permutation, Error> {
        let mut seen = vec![false; order.len()];
        for &i in &order {
            if i >= order.len() || seen[i] {
                return Err(Error::PreconditionViolated(format!(
                    "not a permutation of 0..{}",
                    order.len()
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation(order))
    }

    /// Parses a 1-based agent list such as `2,1,3`.
    pub fn parse_one_based(text: &str, n: usize) -> Result<Permutation, Error> {
        let mut order = Vec::new();
        for tok in text.split(',') {
            let id: usize = tok.trim().parse().map_err(|_| {
                Error::PreconditionViolated(format!("bad agent id {tok:?}"))
            })?;
            if id == 0 || id > n {
                return Err(Error::PreconditionViolated(format!(
                    "agent id {id} out of range 1..={n}"
                )));
            }
            order.push(id - 1);
        }
        if order.len() != n {
            return Err(Error::PreconditionViolated(format!(
                "permutation lists {} of {n} agents",
                order.len()
            )));
        }
        Permutation::new(order)
    }

    pub fn agents(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The implemented mechanisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MechanismId {
    Sd,
    WorstSd,
    BestGreedyStrict,
    FairSd,
    Score,
}

impl MechanismId {
    pub fn parse(s: &str) -> Option<MechanismId> {
        match s {
            "sd" => Some(MechanismId::Sd),
            "worst-sd" => Some(MechanismId::WorstSd),
            "best-greedy" => Some(MechanismId::BestGreedyStrict),
            "fair-sd" => Some(MechanismId::FairSd),
            "score" => Some(MechanismId::Score),
            _ => None,
        }
    }
}

/// Runs the mechanism identified by `mech`.
pub fn elect(mech: MechanismId, profile: &Profile, perm: &Permutation) -> Result<Committee, Error> {
    check_perm(profile, perm)?;
    match mech {
        MechanismId::Sd => Ok(committee_sd(profile, perm)),
        MechanismId::WorstSd => Ok(worst_sd(profile, perm)),
        MechanismId::BestGreedyStrict => best_greedy_strict(profile, perm),
        MechanismId::FairSd => Ok(fair_sd(profile, perm)),
        MechanismId::Score => Ok(rs_score_elect(profile)),
    }
}

fn check_perm(profile: &Profile, perm: &Permutation) -> Result<(), Error> {
    if perm.len() != profile.num_agents() {
        return Err(Error::PreconditionViolated(format!(
            "permutation over {} agents, profile has {}",
            perm.len(),
            profile.num_agents()
        )));
    }
    Ok(())
}

/// Committee voting serial dictatorship.
///
/// Maintains a pool `L` of still-eligible alternatives and a count `r` of
/// open seats. Each agent in turn locks in (`fixes`) every full class that
/// fits within `r`, then narrows `L` to the boundary class; leftover seats
/// are filled from the final pool lexicographically.
///
/// Bookkeeping note: after an agent fixes alternatives, the open-seat count
/// drops by the number fixed and the pool becomes the boundary class
/// *intersected with the previous pool*. A reading that resets the count to
/// the boundary-class overlap, or replaces the pool by the whole class,
/// would forget earlier agents' fixes and re-admit excluded alternatives;
/// it is not used.
pub fn committee_sd(profile: &Profile, perm: &Permutation) -> Committee {
    let mut pool: BTreeSet<Alt> = profile.alternatives().collect();
    let mut fixed: Vec<Alt> = Vec::new();
    let mut open = profile.committee_size();
    for &agent in perm.agents() {
        if open == 0 {
            break;
        }
        let order = profile.order(agent);
        // smallest t with |(E^1 ∪ ... ∪ E^t) ∩ L| >= r
        let mut gathered: Vec<Alt> = Vec::new();
        let mut boundary: Vec<Alt> = Vec::new();
        for class in order.classes() {
            let here: Vec<Alt> = class.iter().copied().filter(|a| pool.contains(a)).collect();
            if gathered.len() + here.len() >= open {
                boundary = here;
                break;
            }
            gathered.extend(here);
        }
        debug_assert!(!boundary.is_empty() || gathered.len() >= open);
        open -= gathered.len();
        fixed.extend(gathered);
        pool = boundary.into_iter().collect();
    }
    let mut members = fixed;
    members.extend(pool.into_iter().take(open));
    Committee::new(members).expect("fixed alternatives are distinct")
}

/// Serial dictatorship for the worst extension.
///
/// Each agent in turn deletes as many of their least preferred classes as
/// the pool size allows (never dropping below `k`); the committee is the
/// `k` smallest survivors, post-processed by an improvement chain so the
/// result is always efficient under the worst extension.
///
/// Truth-telling is optimal in terms of the worst extension: no misreport
/// improves an agent's least preferred committee member. It is not optimal
/// under the stronger responsive-extension test that [`sp_check`] applies:
/// whole classes are deleted or kept, so an agent can misreport class
/// boundaries to steer which of several worst-equal committees wins (and
/// every rule that is efficient under the worst extension has such a gap;
/// see the manipulability tests).
pub fn worst_sd(profile: &Profile, perm: &Permutation) -> Committee {
    let k = profile.committee_size();
    let mut pool: BTreeSet<Alt> = profile.alternatives().collect();
    for &agent in perm.agents() {
        let order = profile.order(agent);
        for class in order.classes().iter().rev() {
            let in_pool: Vec<Alt> = class.iter().copied().filter(|a| pool.contains(a)).collect();
            if pool.len() - in_pool.len() < k {
                break;
            }
            for a in in_pool {
                pool.remove(&a);
            }
        }
    }
    let start = Committee::new(pool.into_iter().take(k).collect())
        .expect("pool members are distinct");
    let chain = improvement_chain(profile, Extension::Worst, start, worst_verify_step)
        .expect("worst_verify steps always dominate");
    chain.into_iter().last().unwrap()
}

/// Greedy election for the best extension; strict preferences only.
///
/// Passes over the agents in permutation order let each agent whose
/// favorite is still missing add it; once everyone is satisfied remaining
/// seats are filled lexicographically.
pub fn best_greedy_strict(profile: &Profile, perm: &Permutation) -> Result<Committee, Error> {
    if !profile.is_strict() {
        return Err(Error::PreconditionViolated(
            "profile is not strict".into(),
        ));
    }
    let k = profile.committee_size();
    let mut members: BTreeSet<Alt> = BTreeSet::new();
    loop {
        let mut added = false;
        for &agent in perm.agents() {
            if members.len() == k {
                break;
            }
            let favorite = profile.order(agent).classes()[0][0];
            if members.insert(favorite) {
                added = true;
            }
        }
        if members.len() == k || !added {
            break;
        }
    }
    for a in profile.alternatives() {
        if members.len() == k {
            break;
        }
        members.insert(a);
    }
    Ok(Committee::new(members.into_iter().collect()).expect("set members are distinct"))
}

/// Serial dictatorship with per-turn quota `⌈k/n⌉`.
///
/// Agents cycle in permutation order, each taking up to the quota of their
/// most preferred remaining alternatives (ascending id within a class),
/// until `k` are chosen. Not strategyproof.
pub fn fair_sd(profile: &Profile, perm: &Permutation) -> Committee {
    let k = profile.committee_size();
    let quota = k.div_ceil(profile.num_agents());
    let mut pool: BTreeSet<Alt> = profile.alternatives().collect();
    let mut members: Vec<Alt> = Vec::new();
    'outer: loop {
        for &agent in perm.agents() {
            if members.len() == k {
                break 'outer;
            }
            let take = quota.min(k - members.len());
            let order = profile.order(agent);
            let mut taken = 0;
            for class in order.classes() {
                for &a in class {
                    if taken == take {
                        break;
                    }
                    if pool.remove(&a) {
                        members.push(a);
                        taken += 1;
                    }
                }
                if taken == take {
                    break;
                }
            }
        }
    }
    Committee::new(members).expect("pool draws are distinct")
}

/// A successful manipulation found by [`sp_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manipulation {
    /// 0-based id of the manipulating agent.
    pub agent: usize,
    pub misreport: WeakOrder,
    pub honest: Committee,
    pub manipulated: Committee,
}

/// Sampling budget for manipulation search on instances too large to
/// enumerate exhaustively.
#[derive(Debug, Clone, Copy)]
pub struct SampleBudget {
    pub samples: usize,
    pub seed: u64,
}

/// Largest `m` for which all weak orders are enumerated exhaustively.
pub const SP_EXHAUSTIVE_MAX_M: usize = 4;

/// Number of weak orders on `m` alternatives (ordered Bell number),
/// saturating.
fn count_weak_orders(m: usize) -> u128 {
    let mut counts = vec![1u128; 1]; // counts[j] = orders on j alternatives
    for j in 1..=m {
        let mut total = 0u128;
        for first in 1..=j {
            // choose the top class, order the rest
            let choose = crate::oracle::binomial(j, first);
            total = total.saturating_add(choose.saturating_mul(counts[j - first]));
        }
        counts.push(total);
    }
    counts[m]
}

/// Searches for an agent and misreport such that the manipulated outcome is
/// strictly preferred, under the responsive extension and the agent's
/// *true* order, to the honest outcome.
///
/// For `m ≤ 4` all weak orders are tried, agents in ascending order and
/// misreports in canonical order, so the first counterexample is
/// deterministic. Larger instances require a [`SampleBudget`]. Misreports a
/// mechanism rejects (e.g. ties reported to a strict-only mechanism) are
/// skipped.
pub fn sp_check(
    mech: MechanismId,
    profile: &Profile,
    perm: &Permutation,
    budget: Option<SampleBudget>,
) -> Result<Option<Manipulation>, Error> {
    check_perm(profile, perm)?;
    let honest = elect(mech, profile, perm)?;
    let m = profile.num_alternatives();

    let misreports: Vec<WeakOrder> = if m <= SP_EXHAUSTIVE_MAX_M {
        all_weak_orders(m)
    } else {
        let Some(budget) = budget else {
            return Err(Error::InstanceTooLarge {
                required: count_weak_orders(m),
                cap: count_weak_orders(SP_EXHAUSTIVE_MAX_M),
            });
        };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(budget.seed);
        (0..budget.samples)
            .map(|_| random_weak_order(m, m, &mut rng))
            .collect()
    };

    for agent in 0..profile.num_agents() {
        let truth = profile.order(agent);
        for misreport in &misreports {
            if misreport == truth {
                continue;
            }
            let mut orders = profile.orders().to_vec();
            orders[agent] = misreport.clone();
            let reported = Profile::new(m, profile.committee_size(), orders)
                .expect("orders partition the same alternatives");
            let manipulated = match elect(mech, &reported, perm) {
                Ok(w) => w,
                Err(Error::PreconditionViolated(_)) => continue,
                Err(e) => return Err(e),
            };
            if compare(Extension::Rs, truth, &manipulated, &honest)? == Comparison::Better {
                return Ok(Some(Manipulation {
                    agent,
                    misreport: misreport.clone(),
                    honest,
                    manipulated,
                }));
            }
        }
    }
    Ok(None)
}
