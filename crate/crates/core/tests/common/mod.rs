//! Shared test oracles and exhaustive enumerators.
//!
//! Everything here is independent of the library code paths it is used to
//! check: the responsive comparison is decided by explicit bijection search
//! rather than the sorted-rank test, and covers are minimized by subset
//! enumeration rather than matching.

#![allow(dead_code)]

use parcom::extensions::Comparison;
use parcom::graph::BipartiteGraph;
use parcom::model::{Alt, Committee, Profile, WeakOrder};

/// Does an injection `f : v -> w` with `f(a)` weakly preferred to `a` exist?
/// Equal sizes make any injection a bijection, so all pairings are tried.
pub fn rs_injection_holds(order: &WeakOrder, w: &Committee, v: &Committee) -> bool {
    assert_eq!(w.len(), v.len());
    let targets: Vec<usize> = v.members().iter().map(|&a| order.rank(a)).collect();
    let images: Vec<usize> = w.members().iter().map(|&a| order.rank(a)).collect();
    let mut used = vec![false; images.len()];
    fn assign(j: usize, targets: &[usize], images: &[usize], used: &mut [bool]) -> bool {
        if j == targets.len() {
            return true;
        }
        for (i, &img) in images.iter().enumerate() {
            if !used[i] && img <= targets[j] {
                used[i] = true;
                if assign(j + 1, targets, images, used) {
                    return true;
                }
                used[i] = false;
            }
        }
        false
    }
    assign(0, &targets, &images, &mut used)
}

/// Responsive comparison decided purely by injection search.
pub fn rs_injection_compare(order: &WeakOrder, w: &Committee, v: &Committee) -> Comparison {
    match (
        rs_injection_holds(order, w, v),
        rs_injection_holds(order, v, w),
    ) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::Better,
        (false, true) => Comparison::Worse,
        (false, false) => Comparison::Incomparable,
    }
}

/// Minimum vertex cover size of a bipartite graph by subset enumeration.
pub fn brute_min_cover_size(g: &BipartiteGraph) -> usize {
    let vertices: Vec<u32> = g.left().iter().chain(g.right()).copied().collect();
    assert!(vertices.len() <= 20, "brute force cover limited to 20 vertices");
    let index = |x: u32| vertices.iter().position(|&v| v == x).unwrap();
    let masks: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1 << index(u)) | (1 << index(v)))
        .collect();
    let mut best = vertices.len();
    for subset in 0u32..(1 << vertices.len()) {
        let size = subset.count_ones() as usize;
        if size < best && masks.iter().all(|&e| e & subset != 0) {
            best = size;
        }
    }
    best
}

/// All size-`k` committees over `1..=m`, lexicographic.
pub fn all_committees(m: usize, k: usize) -> Vec<Committee> {
    let mut out = Vec::new();
    parcom::oracle::for_each_committee(m, k, |w| {
        out.push(w.clone());
        true
    });
    out
}

/// All dichotomous weak orders over `1..=m` whose top class has at most two
/// members.
pub fn all_dichotomous_tw2_orders(m: usize) -> Vec<WeakOrder> {
    assert!(m >= 2);
    let mut out = Vec::new();
    let mut push_top = |top: Vec<Alt>| {
        let rest: Vec<Alt> = (1..=m as u32)
            .map(Alt)
            .filter(|a| !top.contains(a))
            .collect();
        out.push(WeakOrder::new(m, vec![top, rest]).unwrap());
    };
    for a in 1..=m as u32 {
        push_top(vec![Alt(a)]);
    }
    if m >= 3 {
        for a in 1..=m as u32 {
            for b in a + 1..=m as u32 {
                push_top(vec![Alt(a), Alt(b)]);
            }
        }
    }
    out
}

/// All `n`-tuples over `orders`, as profiles with committee size `k`.
pub fn all_profiles(m: usize, k: usize, n: usize, orders: &[WeakOrder]) -> Vec<Profile> {
    let mut out = Vec::new();
    let mut pick = vec![0usize; n];
    loop {
        let chosen: Vec<WeakOrder> = pick.iter().map(|&i| orders[i].clone()).collect();
        out.push(Profile::new(m, k, chosen).unwrap());
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if pick[pos] + 1 < orders.len() {
                pick[pos] += 1;
                for p in &mut pick[pos + 1..] {
                    *p = 0;
                }
                break;
            }
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
}
