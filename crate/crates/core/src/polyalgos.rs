//! Polynomial-time verification and election algorithms.
//!
//! * [`rs_improve_dichotomous_tw2`]: responsive-extension efficiency test
//!   (with improving witness) for dichotomous profiles whose top classes
//!   have at most two members, by reduction to minimum vertex cover on a
//!   bipartite graph;
//! * [`worst_verify`]: worst-extension efficiency test for arbitrary weak
//!   orders;
//! * [`rs_score_elect`]: score-based election that is always efficient
//!   under the responsive extension.

use std::collections::BTreeSet;

use crate::graph::{min_vertex_cover, BipartiteGraph};
use crate::model::{Alt, Committee, Profile};
use crate::oracle::Verdict;
use crate::Error;

/// The structures behind the dichotomous topwidth-2 test for a committee `D`:
/// the satisfied agents `N'` (top class inside `D`) with their locked
/// alternatives `W'`, the frontier agents `N''` (top class meeting `D ∖ W'`),
/// and the bipartite conflict graph over `A''`, two-colored by membership
/// in `D`.
#[derive(Debug, Clone)]
pub struct Tw2Decomposition {
    /// 0-based ids of agents whose whole top class lies in `D`.
    pub n_prime: Vec<usize>,
    /// Union of the `n_prime` agents' top classes (a subset of `D`).
    pub w_prime: Vec<Alt>,
    pub k_prime: usize,
    /// 0-based ids of the remaining agents whose top class meets `D ∖ W'`.
    pub n_double_prime: Vec<usize>,
    /// Union of the `n_double_prime` agents' top classes.
    pub a_double_prime: Vec<Alt>,
    /// One edge per `n_double_prime` top class, sides `A'' ∩ D` / `A'' ∖ D`.
    pub graph: BipartiteGraph,
}

fn require_dichotomous_tw2(profile: &Profile) -> Result<(), Error> {
    if !profile.is_dichotomous() {
        return Err(Error::PreconditionViolated(
            "profile is not dichotomous".into(),
        ));
    }
    if profile.topwidth() > 2 {
        return Err(Error::PreconditionViolated(format!(
            "topwidth {} exceeds 2",
            profile.topwidth()
        )));
    }
    Ok(())
}

/// Builds the decomposition for committee `d`, or `None` when every agent's
/// top class is contained in `d` (in which case `d` is efficient outright).
pub fn tw2_decomposition(
    profile: &Profile,
    d: &Committee,
) -> Result<Option<Tw2Decomposition>, Error> {
    require_dichotomous_tw2(profile)?;
    profile.check_committee(d)?;

    let top = |i: usize| &profile.order(i).classes()[0];
    let in_d = |a: Alt| d.contains(a);

    let n_prime: Vec<usize> = (0..profile.num_agents())
        .filter(|&i| top(i).iter().all(|&a| in_d(a)))
        .collect();
    if n_prime.len() == profile.num_agents() {
        return Ok(None);
    }
    let w_prime: BTreeSet<Alt> = n_prime.iter().flat_map(|&i| top(i).iter().copied()).collect();
    let k_prime = w_prime.len();

    let n_double_prime: Vec<usize> = (0..profile.num_agents())
        .filter(|&i| {
            !n_prime.contains(&i)
                && top(i).iter().any(|&a| in_d(a) && !w_prime.contains(&a))
        })
        .collect();
    let a_double_prime: BTreeSet<Alt> = n_double_prime
        .iter()
        .flat_map(|&i| top(i).iter().copied())
        .collect();

    let mut left = Vec::new(); // A'' ∩ D
    let mut right = Vec::new(); // A'' ∖ D
    for &a in &a_double_prime {
        if in_d(a) {
            left.push(a.0);
        } else {
            right.push(a.0);
        }
    }
    let mut edges = Vec::new();
    for &i in &n_double_prime {
        let class = top(i);
        assert_eq!(class.len(), 2, "frontier agent with singleton top class");
        let (u, v) = (class[0], class[1]);
        // two-colorability of the conflict graph: exactly one endpoint in D
        assert!(in_d(u) != in_d(v), "edge endpoints on one side");
        if in_d(u) {
            edges.push((u.0, v.0));
        } else {
            edges.push((v.0, u.0));
        }
    }
    let graph = BipartiteGraph::new(left, right, edges);

    Ok(Some(Tw2Decomposition {
        n_prime,
        w_prime: w_prime.into_iter().collect(),
        k_prime,
        n_double_prime,
        a_double_prime: a_double_prime.into_iter().collect(),
        graph,
    }))
}

/// Responsive-extension efficiency test for dichotomous profiles with
/// topwidth at most 2. Returns an improving committee when one exists.
///
/// `d` is improvable iff the conflict graph's cover number `τ` satisfies
/// `τ < k - k'`, or `τ = k - k'` and some optimal cover can be forced to
/// pick up an unsatisfied agent's top alternative (tested by pinning that
/// alternative with a pendant edge and re-checking `τ`).
pub fn rs_improve_dichotomous_tw2(profile: &Profile, d: &Committee) -> Result<Verdict, Error> {
    let Some(dec) = tw2_decomposition(profile, d)? else {
        return Ok(Verdict::Efficient);
    };
    let k = profile.committee_size();
    let slack = k - dec.k_prime;
    let cover = min_vertex_cover(&dec.graph);
    let tau = cover.len();

    if tau < slack {
        let witness = pad_witness(profile, d, &dec, cover);
        return Ok(Verdict::Improvable(witness));
    }

    // tau == slack: an improvement exists iff some optimal cover contains a
    // top alternative of an agent outside N' ∪ N'', or both top alternatives
    // of an agent in N''.
    let member = |set: &[usize], i: usize| set.binary_search(&i).is_ok();
    let a2: BTreeSet<Alt> = dec.a_double_prime.iter().copied().collect();
    for i in 0..profile.num_agents() {
        if member(&dec.n_prime, i) || member(&dec.n_double_prime, i) {
            continue;
        }
        for &x in profile.order(i).classes()[0].iter() {
            if !a2.contains(&x) {
                continue;
            }
            let pinned = min_vertex_cover(&dec.graph.with_pendants(&[x.0]));
            if pinned.len() == tau {
                return Ok(Verdict::Improvable(cover_witness(&dec, pinned)));
            }
        }
    }
    for &i in &dec.n_double_prime {
        let class = profile.order(i).classes()[0].clone();
        let pins = [class[0].0, class[1].0];
        let pinned = min_vertex_cover(&dec.graph.with_pendants(&pins));
        if pinned.len() == tau {
            return Ok(Verdict::Improvable(cover_witness(&dec, pinned)));
        }
    }
    Ok(Verdict::Efficient)
}

/// Cover ∪ W'; already size `k` in the `τ = k - k'` case (pinned covers
/// that keep `τ` never contain pendant vertices).
fn cover_witness(dec: &Tw2Decomposition, cover: Vec<u32>) -> Committee {
    let members: Vec<Alt> = cover
        .into_iter()
        .map(Alt)
        .chain(dec.w_prime.iter().copied())
        .collect();
    Committee::new(members).expect("cover and W' are disjoint")
}

/// Cover ∪ W' padded up to size `k`: preferentially with top alternatives
/// outside `d` (these force a strict improver), then lexicographically.
fn pad_witness(
    profile: &Profile,
    d: &Committee,
    dec: &Tw2Decomposition,
    cover: Vec<u32>,
) -> Committee {
    let k = profile.committee_size();
    let mut base: BTreeSet<Alt> = cover.into_iter().map(Alt).collect();
    base.extend(dec.w_prime.iter().copied());

    let tops_outside: BTreeSet<Alt> = profile
        .orders()
        .iter()
        .flat_map(|o| o.classes()[0].iter().copied())
        .filter(|&a| !d.contains(a))
        .collect();
    let pool: Vec<Alt> = tops_outside
        .iter()
        .copied()
        .filter(|a| !base.contains(a))
        .collect();

    if pool.is_empty() {
        // Every top alternative outside d is already covered. Walk the
        // agents whose top class leaves d: either one is already strictly
        // better off, or its in-d partner is free to pad in, making it so.
        let member = |set: &[usize], i: usize| set.binary_search(&i).is_ok();
        for i in 0..profile.num_agents() {
            let class = profile.order(i).classes()[0].as_slice();
            if class.iter().all(|&a| d.contains(a)) {
                continue;
            }
            if !member(&dec.n_double_prime, i) {
                break; // its outside-d top is in the cover: strict already
            }
            let partner = class.iter().copied().find(|&a| d.contains(a)).unwrap();
            if !base.contains(&partner) && base.len() < k {
                base.insert(partner);
            }
            break;
        }
    } else {
        for &a in &pool {
            if base.len() == k {
                break;
            }
            base.insert(a);
        }
    }
    for a in profile.alternatives() {
        if base.len() == k {
            break;
        }
        base.insert(a);
    }
    debug_assert_eq!(base.len(), k);
    Committee::new(base.into_iter().collect()).expect("set members are distinct")
}

/// Worst-extension efficiency test with improving witness, for arbitrary
/// weak orders.
///
/// For each agent `i`, let `t_i` be the worst class index meeting `w`. The
/// candidate pool for an improvement where `i` strictly gains consists of
/// the alternatives ranked strictly above `t_i` by `i` and weakly above
/// `t_j` by every other agent `j`; `w` is improvable iff some pool reaches
/// size `k`. The witness is the `k` smallest members of the first such pool.
pub fn worst_verify(profile: &Profile, w: &Committee) -> Result<Verdict, Error> {
    profile.check_committee(w)?;
    let n = profile.num_agents();
    let worst: Vec<usize> = (0..n)
        .map(|i| *profile.order(i).rank_vector(w).last().unwrap())
        .collect();
    // alternatives no agent ranks strictly below its current worst class
    let acceptable: Vec<Alt> = profile
        .alternatives()
        .filter(|&a| (0..n).all(|j| profile.order(j).rank(a) <= worst[j]))
        .collect();
    for (i, &cutoff) in worst.iter().enumerate() {
        let pool: Vec<Alt> = acceptable
            .iter()
            .copied()
            .filter(|&a| profile.order(i).rank(a) < cutoff)
            .collect();
        if pool.len() >= profile.committee_size() {
            let members = pool[..profile.committee_size()].to_vec();
            let witness = Committee::new(members).expect("pool members are distinct");
            return Ok(Verdict::Improvable(witness));
        }
    }
    Ok(Verdict::Efficient)
}

/// Improvement step backed by [`worst_verify`], for use with
/// [`crate::oracle::improvement_chain`].
pub fn worst_verify_step(profile: &Profile, w: &Committee) -> Result<Option<Committee>, Error> {
    Ok(worst_verify(profile, w)?.into_witness())
}

/// Improvement step backed by [`rs_improve_dichotomous_tw2`].
pub fn rs_tw2_step(profile: &Profile, w: &Committee) -> Result<Option<Committee>, Error> {
    Ok(rs_improve_dichotomous_tw2(profile, w)?.into_witness())
}

/// Per-alternative total scores: each agent contributes
/// `2·(m − beats) − (class size − 1)` where `beats` counts alternatives the
/// agent strictly prefers. This is twice the fractional Borda score, kept
/// integral; within one agent it is constant on classes and strictly
/// decreasing across them.
pub fn scores(profile: &Profile) -> Vec<i64> {
    let m = profile.num_alternatives();
    let mut total = vec![0i64; m];
    for order in profile.orders() {
        let mut beats = 0usize;
        let mut prev_value: Option<i64> = None;
        for class in order.classes() {
            let value = 2 * (m as i64 - beats as i64) - (class.len() as i64 - 1);
            if let Some(prev) = prev_value {
                assert!(value < prev, "class scores must strictly decrease");
            }
            prev_value = Some(value);
            for &a in class {
                total[a.index()] += value;
            }
            beats += class.len();
        }
    }
    total
}

/// Elects the `k` alternatives with the highest total score (ties broken by
/// ascending id). The outcome is efficient under the responsive extension.
pub fn rs_score_elect(profile: &Profile) -> Committee {
    let total = scores(profile);
    let mut order: Vec<Alt> = profile.alternatives().collect();
    order.sort_by_key(|a| (-total[a.index()], a.0));
    Committee::new(order[..profile.committee_size()].to_vec()).expect("ids are distinct")
}
