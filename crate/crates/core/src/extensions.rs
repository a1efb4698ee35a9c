//! Per-agent committee comparators for the five set extensions.
//!
//! The responsive extension (RS) is a partial order: `W` is weakly preferred
//! to `V` when the members of `V` inject into `W` member-by-member, each
//! image weakly preferred. It is decided here by the equivalent sorted-rank
//! dominance test (pair the j-th best of `W` with the j-th best of `V`); the
//! injection definition is kept as an independent test oracle. Best, worst,
//! downward lexicographic (DL) and upward lexicographic (UL) induce complete
//! relations, so they never return [`Comparison::Incomparable`].

use std::fmt;

use crate::model::{Committee, WeakOrder};
use crate::Error;

/// The five preference set extensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extension {
    Rs,
    Dl,
    Ul,
    Best,
    Worst,
}

impl Extension {
    pub const ALL: [Extension; 5] = [
        Extension::Rs,
        Extension::Dl,
        Extension::Ul,
        Extension::Best,
        Extension::Worst,
    ];

    pub fn parse(s: &str) -> Option<Extension> {
        match s {
            "rs" => Some(Extension::Rs),
            "dl" => Some(Extension::Dl),
            "ul" => Some(Extension::Ul),
            "best" => Some(Extension::Best),
            "worst" => Some(Extension::Worst),
            _ => None,
        }
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Extension::Rs => "rs",
            Extension::Dl => "dl",
            Extension::Ul => "ul",
            Extension::Best => "best",
            Extension::Worst => "worst",
        };
        f.write_str(s)
    }
}

/// Outcome of comparing two equal-size committees for one agent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Better,
    Equal,
    Worse,
    /// Neither committee weakly preferred; only possible under RS.
    Incomparable,
}

impl Comparison {
    /// Better or Equal.
    pub fn weakly_better(self) -> bool {
        matches!(self, Comparison::Better | Comparison::Equal)
    }

    pub fn flip(self) -> Comparison {
        match self {
            Comparison::Better => Comparison::Worse,
            Comparison::Worse => Comparison::Better,
            other => other,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Comparison::Better => "BETTER",
            Comparison::Equal => "EQUAL",
            Comparison::Worse => "WORSE",
            Comparison::Incomparable => "INCOMPARABLE",
        };
        f.write_str(s)
    }
}

/// Per-class membership counts of a committee under one agent's order:
/// `counts[l]` is the number of committee members in class `l + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSignature(pub Vec<usize>);

/// Counts `|W ∩ E_i^l|` for each class of `order`.
pub fn signature(order: &WeakOrder, w: &Committee) -> ClassSignature {
    let mut counts = vec![0usize; order.num_classes()];
    for &a in w.members() {
        counts[order.rank(a) - 1] += 1;
    }
    ClassSignature(counts)
}

/// Compares committees `w` and `v` for one agent under `ext`.
///
/// Returns `Better` iff `w` is strictly preferred to `v`, `Equal` iff each is
/// weakly preferred to the other, and `Incomparable` (RS only) iff neither is
/// weakly preferred.
pub fn compare(
    ext: Extension,
    order: &WeakOrder,
    w: &Committee,
    v: &Committee,
) -> Result<Comparison, Error> {
    if w.len() != v.len() {
        return Err(Error::SizeMismatch {
            expected: w.len(),
            got: v.len(),
        });
    }
    let cmp = match ext {
        Extension::Rs => compare_rs(order, w, v),
        Extension::Dl => compare_dl(order, w, v),
        Extension::Ul => compare_ul(order, w, v),
        Extension::Best => {
            let rw = order.rank_vector(w);
            let rv = order.rank_vector(v);
            rank_to_cmp(rw[0], rv[0])
        }
        Extension::Worst => {
            let rw = order.rank_vector(w);
            let rv = order.rank_vector(v);
            rank_to_cmp(rw[rw.len() - 1], rv[rv.len() - 1])
        }
    };
    Ok(cmp)
}

fn rank_to_cmp(rank_w: usize, rank_v: usize) -> Comparison {
    match rank_w.cmp(&rank_v) {
        std::cmp::Ordering::Less => Comparison::Better,
        std::cmp::Ordering::Equal => Comparison::Equal,
        std::cmp::Ordering::Greater => Comparison::Worse,
    }
}

fn compare_rs(order: &WeakOrder, w: &Committee, v: &Committee) -> Comparison {
    let rw = order.rank_vector(w);
    let rv = order.rank_vector(v);
    let w_weak = rw.iter().zip(&rv).all(|(a, b)| a <= b);
    let v_weak = rw.iter().zip(&rv).all(|(a, b)| a >= b);
    match (w_weak, v_weak) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::Better,
        (false, true) => Comparison::Worse,
        (false, false) => Comparison::Incomparable,
    }
}

fn compare_dl(order: &WeakOrder, w: &Committee, v: &Committee) -> Comparison {
    let sw = signature(order, w).0;
    let sv = signature(order, v).0;
    for (cw, cv) in sw.iter().zip(&sv) {
        if cw != cv {
            // smallest differing class: more members wins
            return if cw > cv {
                Comparison::Better
            } else {
                Comparison::Worse
            };
        }
    }
    Comparison::Equal
}

fn compare_ul(order: &WeakOrder, w: &Committee, v: &Committee) -> Comparison {
    let sw = signature(order, w).0;
    let sv = signature(order, v).0;
    for (cw, cv) in sw.iter().zip(&sv).rev() {
        if cw != cv {
            // largest differing class: fewer members wins
            return if cw < cv {
                Comparison::Better
            } else {
                Comparison::Worse
            };
        }
    }
    Comparison::Equal
}
