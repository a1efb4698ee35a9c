//! Limits of strategyproofness for worst-extension-efficient rules.
//!
//! [`worst_sd`] is immune to manipulation in terms of the worst extension
//! itself, but the manipulation tester applies the stronger
//! responsive-extension comparison, and under that test the rule has a
//! gap: deletion works on whole indifference classes, so misreporting
//! class boundaries can steer which of several worst-equal committees is
//! chosen. These tests pin the smallest such manipulation, and then show
//! by exhaustive search that the gap is not a defect of this particular
//! rule: on three alternatives with two agents and k = 2, *every* mapping
//! from profiles to worst-efficient committees admits a profitable
//! misreport under the responsive comparison.

mod common;

use common::all_profiles;
use parcom::extensions::{compare, Comparison, Extension};
use parcom::mechanisms::{sp_check, MechanismId, Permutation};
use parcom::model::{all_weak_orders, Committee, Profile};
use parcom::oracle::enumerate_efficient;

fn c(s: &str) -> Committee {
    Committee::parse(s).unwrap()
}

/// The smallest manipulation of the worst serial dictatorship: a single
/// agent whose worst class is too large to delete splits it by misreporting
/// and thereby swaps a worst-equal but responsively better committee in.
#[test]
fn worst_sd_admits_a_responsive_manipulation() {
    let p = Profile::parse("3 2 1\n3,{1,2}\n").unwrap();
    let found = sp_check(MechanismId::WorstSd, &p, &Permutation::identity(1), None)
        .unwrap()
        .expect("the class-granularity gap is real");
    assert_eq!(found.agent, 0);
    assert_eq!(found.honest, c("1,2"));
    assert_eq!(found.manipulated, c("1,3"));
    // the outcomes tie under the worst extension ...
    assert_eq!(
        compare(Extension::Worst, p.order(0), &found.manipulated, &found.honest).unwrap(),
        Comparison::Equal
    );
    // ... and the gain exists only under the responsive comparison
    assert_eq!(
        compare(Extension::Rs, p.order(0), &found.manipulated, &found.honest).unwrap(),
        Comparison::Better
    );
}

/// Anchor profiles whose worst-efficient committee is unique. They force
/// the hand of any worst-efficient rule and power the impossibility below.
#[test]
fn anchor_profiles_have_forced_outcomes() {
    let anchor_ab = Profile::parse("3 2 2\n{1,2},3\n3,{1,2}\n").unwrap();
    assert_eq!(
        enumerate_efficient(&anchor_ab, Extension::Worst).unwrap(),
        vec![c("1,2")]
    );
    let anchor_ac = Profile::parse("3 2 2\n2,{1,3}\n{1,3},2\n").unwrap();
    assert_eq!(
        enumerate_efficient(&anchor_ac, Extension::Worst).unwrap(),
        vec![c("1,3")]
    );
    // the profile between the anchors may answer either way ...
    let middle = Profile::parse("3 2 2\n{1,2},3\n{1,3},2\n").unwrap();
    assert_eq!(
        enumerate_efficient(&middle, Extension::Worst).unwrap(),
        vec![c("1,2"), c("1,3")]
    );
    // ... but answering 1,2 pays agent 1 of the second anchor for
    // misreporting, and answering 1,3 pays agent 2 of the first
    let truth_one = anchor_ac.order(0); // 2,{1,3}
    assert_eq!(
        compare(Extension::Rs, truth_one, &c("1,2"), &c("1,3")).unwrap(),
        Comparison::Better
    );
    let truth_two = anchor_ab.order(1); // 3,{1,2}
    assert_eq!(
        compare(Extension::Rs, truth_two, &c("1,3"), &c("1,2")).unwrap(),
        Comparison::Better
    );
}

/// Exhaustive search over all rules: assign each two-agent profile over
/// three alternatives (k = 2) one of its worst-efficient committees such
/// that no agent ever gains, under the responsive comparison and their
/// true order, by swapping in a different report. Backtracking proves no
/// such assignment exists, so worst-extension efficiency and the
/// responsive manipulation test are incompatible, for any rule.
#[test]
fn no_worst_efficient_rule_survives_responsive_deviations() {
    let m = 3;
    let k = 2;
    let orders = all_weak_orders(m);
    let t = orders.len();
    let profiles = all_profiles(m, k, 2, &orders); // index = i * t + j

    let mut committees: Vec<Committee> = Vec::new();
    parcom::oracle::for_each_committee(m, k, |w| {
        committees.push(w.clone());
        true
    });
    let cid = |w: &Committee| committees.iter().position(|x| x == w).unwrap();
    let domains: Vec<Vec<usize>> = profiles
        .iter()
        .map(|p| {
            enumerate_efficient(p, Extension::Worst)
                .unwrap()
                .iter()
                .map(&cid)
                .collect()
        })
        .collect();
    // gains[truth][a][b]: committee a beats committee b under order `truth`
    let gains: Vec<Vec<Vec<bool>>> = orders
        .iter()
        .map(|o| {
            committees
                .iter()
                .map(|a| {
                    committees
                        .iter()
                        .map(|b| {
                            compare(Extension::Rs, o, a, b).unwrap() == Comparison::Better
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    let consistent = |p: usize, val: usize, choice: &[usize]| -> bool {
        let (i, j) = (p / t, p % t);
        for i2 in 0..t {
            let q = i2 * t + j;
            if choice[q] == usize::MAX {
                continue;
            }
            // agent 1 true at p deviating to q, and true at q deviating to p
            if gains[i][choice[q]][val] || gains[i2][val][choice[q]] {
                return false;
            }
        }
        for j2 in 0..t {
            let q = i * t + j2;
            if choice[q] == usize::MAX {
                continue;
            }
            if gains[j][choice[q]][val] || gains[j2][val][choice[q]] {
                return false;
            }
        }
        true
    };

    let n_vars = profiles.len();
    let mut var_order: Vec<usize> = (0..n_vars).collect();
    var_order.sort_by_key(|&p| domains[p].len());
    let mut choice = vec![usize::MAX; n_vars];
    let mut taken: Vec<usize> = Vec::new();
    let mut pos = 0;
    loop {
        assert!(pos < n_vars, "found a strategyproof worst-efficient rule");
        let p = var_order[pos];
        let start = if taken.len() > pos { taken.pop().unwrap() + 1 } else { 0 };
        let next = (start..domains[p].len()).find(|&d| consistent(p, domains[p][d], &choice));
        match next {
            Some(d) => {
                choice[p] = domains[p][d];
                taken.push(d);
                pos += 1;
            }
            None => {
                choice[p] = usize::MAX;
                if pos == 0 {
                    return; // unsatisfiable, as expected
                }
                pos -= 1;
                choice[var_order[pos]] = usize::MAX;
            }
        }
    }
}
