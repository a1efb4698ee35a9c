//! Hardness-construction instance generators and the tiny exact solvers
//! used to cross-validate them.
//!
//! [`profile_from_vertex_cover`] encodes a vertex-cover question as a
//! responsive-extension efficiency question about a distinguished committee;
//! [`profile_from_hitting_set`] encodes a hitting-set question into the
//! best-extension setting. [`brute_vertex_cover`] and [`brute_hitting_set`]
//! solve the source problems exactly by subset enumeration.

use crate::model::{Alt, Committee, Profile, WeakOrder};
use crate::Error;

/// An undirected simple graph on vertices `1..=vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    /// Normalized `(u, v)` with `u < v`, sorted, no duplicates.
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<SimpleGraph, Error> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::PreconditionViolated(format!("self-loop at {u}")));
            }
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::PreconditionViolated(format!(
                    "edge [{u},{v}] outside 1..={vertex_count}"
                )));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(SimpleGraph {
            vertex_count,
            edges: normalized,
        })
    }

    /// Parses an edge list: one `u v` pair per line, `#` comments allowed.
    /// The vertex count is the largest endpoint.
    pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, Error> {
        let mut edges = Vec::new();
        let mut max_vertex = 0;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, Error> {
                tok.and_then(|t| t.parse().ok()).ok_or_else(|| {
                    Error::PreconditionViolated(format!(
                        "line {}: expected `u v`",
                        lineno + 1
                    ))
                })
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::PreconditionViolated(format!(
                    "line {}: expected `u v`",
                    lineno + 1
                )));
            }
            max_vertex = max_vertex.max(u).max(v);
            edges.push((u, v));
        }
        SimpleGraph::new(max_vertex, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// A family of non-empty subsets of the ground set `1..=ground_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    ground_size: usize,
    family: Vec<Vec<usize>>,
}

impl SetSystem {
    pub fn new(
        ground_size: usize,
        family: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<SetSystem, Error> {
        let mut out = Vec::new();
        for mut set in family {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(Error::PreconditionViolated("empty family member".into()));
            }
            if set.iter().any(|&x| x == 0 || x > ground_size) {
                return Err(Error::PreconditionViolated(format!(
                    "element outside 1..={ground_size}"
                )));
            }
            out.push(set);
        }
        Ok(SetSystem {
            ground_size,
            family: out,
        })
    }

    /// Parses one comma-separated subset per line, `#` comments allowed.
    /// The ground size is the largest element.
    pub fn parse(text: &str) -> Result<SetSystem, Error> {
        let mut family = Vec::new();
        let mut max_element = 0;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut set = Vec::new();
            for tok in line.split(',') {
                let x: usize = tok.trim().parse().map_err(|_| {
                    Error::PreconditionViolated(format!(
                        "line {}: bad element {tok:?}",
                        lineno + 1
                    ))
                })?;
                max_element = max_element.max(x);
                set.push(x);
            }
            family.push(set);
        }
        SetSystem::new(max_element, family)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn family(&self) -> &[Vec<usize>] {
        &self.family
    }
}

/// Encodes `⟨g, k⟩` as a dichotomous profile with distinguished committee
/// `D = {d_1, ..., d_k}`: `D` is *not* efficient under the responsive
/// extension iff `g` has a vertex cover of size at most `k`.
///
/// Alternatives are the graph vertices `1..=q` plus `d_i ↦ q + i`. Each edge
/// `[u, v]` contributes `k` agents with top class `{u, v, d_i}`; one special
/// agent tops the lexicographically least edge. Whenever the profile has
/// more than three alternatives it is dichotomous with topwidth exactly 3.
pub fn profile_from_vertex_cover(
    g: &SimpleGraph,
    k: usize,
) -> Result<(Profile, Committee), Error> {
    let q = g.vertex_count();
    if k == 0 || k > q {
        return Err(Error::PreconditionViolated(format!(
            "k={k} out of range 1..={q}"
        )));
    }
    if g.edges().is_empty() {
        return Err(Error::PreconditionViolated("graph has no edges".into()));
    }
    let m = q + k;
    let full_order = |top: Vec<Alt>| -> WeakOrder {
        let rest: Vec<Alt> = (1..=m as u32)
            .map(Alt)
            .filter(|a| !top.contains(a))
            .collect();
        let classes = if rest.is_empty() {
            vec![top]
        } else {
            vec![top, rest]
        };
        WeakOrder::new(m, classes).expect("top and rest partition 1..=m")
    };

    let mut orders = Vec::new();
    for &(u, v) in g.edges() {
        for i in 1..=k {
            orders.push(full_order(vec![
                Alt(u as u32),
                Alt(v as u32),
                Alt((q + i) as u32),
            ]));
        }
    }
    let (x, y) = g.edges()[0];
    orders.push(full_order(vec![Alt(x as u32), Alt(y as u32)]));

    let profile = Profile::new(m, k, orders)?;
    if m > 3 {
        debug_assert!(profile.is_dichotomous());
        debug_assert_eq!(profile.topwidth(), 3);
    }
    let committee = Committee::new(((q + 1)..=(q + k)).map(|i| Alt(i as u32)).collect())
        .expect("d_i ids are distinct");
    Ok((profile, committee))
}

/// Encodes `⟨s, k⟩` into the best-extension setting: one agent per family
/// member, approving exactly that member's elements. Some best-efficient
/// size-`k` committee gives every agent a top-class alternative iff `s` has
/// a hitting set of size at most `k`.
pub fn profile_from_hitting_set(s: &SetSystem, k: usize) -> Result<Profile, Error> {
    let m = s.ground_size();
    if k == 0 || k > m {
        return Err(Error::PreconditionViolated(format!(
            "k={k} out of range 1..={m}"
        )));
    }
    if s.family().is_empty() {
        return Err(Error::PreconditionViolated("empty set family".into()));
    }
    let orders = s
        .family()
        .iter()
        .map(|set| {
            let top: Vec<Alt> = set.iter().map(|&x| Alt(x as u32)).collect();
            let rest: Vec<Alt> = (1..=m as u32)
                .map(Alt)
                .filter(|a| !top.contains(a))
                .collect();
            let classes = if rest.is_empty() {
                vec![top]
            } else {
                vec![top, rest]
            };
            WeakOrder::new(m, classes).expect("top and rest partition 1..=m")
        })
        .collect();
    Ok(Profile::new(m, k, orders)?)
}

/// Guard for the exact solvers.
const BRUTE_MAX_GROUND: usize = 16;

/// Exact minimum vertex cover size by subset enumeration (`≤ 16` vertices).
pub fn brute_vertex_cover(g: &SimpleGraph) -> Result<usize, Error> {
    let q = g.vertex_count();
    if q > BRUTE_MAX_GROUND {
        return Err(Error::InstanceTooLarge {
            required: 1u128 << q,
            cap: 1u128 << BRUTE_MAX_GROUND,
        });
    }
    let masks: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1 << (u - 1)) | (1 << (v - 1)))
        .collect();
    let mut best = q;
    for subset in 0u32..(1 << q) {
        let size = subset.count_ones() as usize;
        if size < best && masks.iter().all(|&e| e & subset != 0) {
            best = size;
        }
    }
    Ok(best)
}

/// Exact minimum hitting set size by subset enumeration (`≤ 16` elements).
pub fn brute_hitting_set(s: &SetSystem) -> Result<usize, Error> {
    let g = s.ground_size();
    if g > BRUTE_MAX_GROUND {
        return Err(Error::InstanceTooLarge {
            required: 1u128 << g,
            cap: 1u128 << BRUTE_MAX_GROUND,
        });
    }
    let masks: Vec<u32> = s
        .family()
        .iter()
        .map(|set| set.iter().fold(0u32, |acc, &x| acc | (1 << (x - 1))))
        .collect();
    let mut best = g;
    for subset in 0u32..(1 << g) {
        let size = subset.count_ones() as usize;
        if size < best && masks.iter().all(|&m| m & subset != 0) {
            best = size;
        }
    }
    Ok(best)
}
