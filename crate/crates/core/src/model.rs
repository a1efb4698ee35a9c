//! Core data types: alternatives, weak orders, profiles, and committees.
//!
//! Alternatives are dense integer ids `1..=m`. A weak order is an ordered
//! partition of the alternatives into indifference classes, best first. A
//! profile bundles one weak order per agent with the committee size `k`.
//! All values are immutable after construction and every operation here is
//! a pure function.

use std::fmt;

use crate::Error;

/// An alternative, identified by a dense integer id in `1..=m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alt(pub u32);

impl Alt {
    /// Zero-based index of this alternative, for array lookups.
    pub fn index(self) -> usize {
        (self.0 - 1) as usize
    }

    pub fn from_index(idx: usize) -> Alt {
        Alt(idx as u32 + 1)
    }
}

impl fmt::Display for Alt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Errors raised while reading or validating profiles.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProfileError {
    /// Malformed syntax, with the 1-based line number of the offending line.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Structurally well-formed input that violates a profile invariant.
    #[error("invalid profile: {msg}")]
    Validation { msg: String },
}

fn validation(msg: impl Into<String>) -> ProfileError {
    ProfileError::Validation { msg: msg.into() }
}

/// One agent's preferences: an ordered partition of `1..=m` into
/// indifference classes, most preferred class first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakOrder {
    classes: Vec<Vec<Alt>>,
    /// `rank[a.index()]` is the 1-based class index of alternative `a`.
    rank: Vec<usize>,
}

impl WeakOrder {
    /// Builds a weak order over `1..=m` from its class lists.
    ///
    /// Classes must be non-empty and together partition `1..=m`.
    pub fn new(m: usize, classes: Vec<Vec<Alt>>) -> Result<WeakOrder, ProfileError> {
        let mut rank = vec![0usize; m];
        let mut seen = 0usize;
        for (ci, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(validation(format!("class {} is empty", ci + 1)));
            }
            for &a in class {
                if a.0 == 0 || a.index() >= m {
                    return Err(validation(format!(
                        "alternative {a} out of range 1..={m}"
                    )));
                }
                if rank[a.index()] != 0 {
                    return Err(validation(format!("duplicate alternative {a}")));
                }
                rank[a.index()] = ci + 1;
                seen += 1;
            }
        }
        if seen != m {
            return Err(validation(format!(
                "classes cover {seen} of {m} alternatives"
            )));
        }
        let mut classes = classes;
        for class in &mut classes {
            class.sort_unstable();
        }
        Ok(WeakOrder { classes, rank })
    }

    /// Number of alternatives this order ranks.
    pub fn num_alternatives(&self) -> usize {
        self.rank.len()
    }

    /// Number of indifference classes.
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// The classes, best first; members sorted ascending.
    pub fn classes(&self) -> &[Vec<Alt>] {
        &self.classes
    }

    /// 1-based class index of `a`; 1 is the most preferred class.
    pub fn rank(&self, a: Alt) -> usize {
        self.rank[a.index()]
    }

    /// Class indices of the members of `w`, sorted ascending
    /// (best class first, worst class last).
    pub fn rank_vector(&self, w: &Committee) -> Vec<usize> {
        let mut v: Vec<usize> = w.members().iter().map(|&a| self.rank(a)).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for WeakOrder {
    /// Profile line syntax: tie classes braced, singletons bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if class.len() == 1 {
                write!(f, "{}", class[0])?;
            } else {
                write!(f, "{{")?;
                for (j, a) in class.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, "}}")?;
            }
        }
        Ok(())
    }
}

/// A committee: a size-`k` subset of the alternatives, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Committee(Vec<Alt>);

impl Committee {
    /// Canonicalizes (sorts) and validates that members are distinct.
    pub fn new(mut members: Vec<Alt>) -> Result<Committee, ProfileError> {
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(validation("duplicate committee member"));
        }
        Ok(Committee(members))
    }

    /// Members in ascending id order.
    pub fn members(&self) -> &[Alt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: Alt) -> bool {
        self.0.binary_search(&a).is_ok()
    }

    /// Parses a comma-separated id list such as `1,3`.
    pub fn parse(text: &str) -> Result<Committee, ProfileError> {
        let mut members = Vec::new();
        for tok in text.split(',') {
            let id: u32 = tok
                .trim()
                .parse()
                .map_err(|_| validation(format!("bad alternative id {tok:?}")))?;
            if id == 0 {
                return Err(validation("alternative ids start at 1"));
            }
            members.push(Alt(id));
        }
        Committee::new(members)
    }
}

impl fmt::Display for Committee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// A preference profile: `n` weak orders over the same `1..=m`, plus the
/// committee size `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    m: usize,
    k: usize,
    orders: Vec<WeakOrder>,
}

impl Profile {
    pub fn new(m: usize, k: usize, orders: Vec<WeakOrder>) -> Result<Profile, ProfileError> {
        if m == 0 {
            return Err(validation("no alternatives"));
        }
        if k == 0 || k > m {
            return Err(validation(format!("k={k} out of range 1..={m}")));
        }
        if orders.is_empty() {
            return Err(validation("no agents"));
        }
        for (i, o) in orders.iter().enumerate() {
            if o.num_alternatives() != m {
                return Err(validation(format!(
                    "agent {} ranks {} alternatives, expected {m}",
                    i + 1,
                    o.num_alternatives()
                )));
            }
        }
        Ok(Profile { m, k, orders })
    }

    /// Number of alternatives.
    pub fn num_alternatives(&self) -> usize {
        self.m
    }

    /// Number of agents.
    pub fn num_agents(&self) -> usize {
        self.orders.len()
    }

    /// Committee size.
    pub fn committee_size(&self) -> usize {
        self.k
    }

    pub fn orders(&self) -> &[WeakOrder] {
        &self.orders
    }

    /// The weak order of the 0-based agent `i`.
    pub fn order(&self, i: usize) -> &WeakOrder {
        &self.orders[i]
    }

    /// All alternatives `1..=m` in ascending order.
    pub fn alternatives(&self) -> impl Iterator<Item = Alt> + '_ {
        (1..=self.m as u32).map(Alt)
    }

    /// Maximum size of any agent's most preferred class.
    pub fn topwidth(&self) -> usize {
        self.orders
            .iter()
            .map(|o| o.classes()[0].len())
            .max()
            .unwrap_or(0)
    }

    /// True iff every agent has exactly two indifference classes.
    pub fn is_dichotomous(&self) -> bool {
        self.orders.iter().all(|o| o.num_classes() == 2)
    }

    /// True iff every indifference class is a singleton.
    pub fn is_strict(&self) -> bool {
        self.orders
            .iter()
            .all(|o| o.classes().iter().all(|c| c.len() == 1))
    }

    /// Validates a CLI-supplied committee against this profile:
    /// members in `1..=m` and size exactly `k`.
    pub fn check_committee(&self, w: &Committee) -> Result<(), Error> {
        if w.len() != self.k {
            return Err(Error::SizeMismatch {
                expected: self.k,
                got: w.len(),
            });
        }
        for &a in w.members() {
            if a.index() >= self.m {
                return Err(Error::Profile(validation(format!(
                    "alternative {a} out of range 1..={}",
                    self.m
                ))));
            }
        }
        Ok(())
    }

    /// Parses the profile text format.
    ///
    /// Line 1 holds `m k n`; each of the next `n` lines is one agent's
    /// classes, best to worst, comma separated, tie classes in braces
    /// (`{1,3},2,{4}`; braces optional for singletons). Lines starting
    /// with `#` are comments.
    pub fn parse(text: &str) -> Result<Profile, ProfileError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut orders: Vec<WeakOrder> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match header {
                None => {
                    let fields: Vec<&str> = line.split_whitespace().collect();
                    if fields.len() != 3 {
                        return Err(ProfileError::Parse {
                            line: lineno,
                            msg: format!("expected `m k n`, got {} fields", fields.len()),
                        });
                    }
                    let mut nums = [0usize; 3];
                    for (slot, tok) in nums.iter_mut().zip(&fields) {
                        *slot = tok.parse().map_err(|_| ProfileError::Parse {
                            line: lineno,
                            msg: format!("bad integer {tok:?}"),
                        })?;
                    }
                    header = Some((nums[0], nums[1], nums[2]));
                }
                Some((m, _, n)) => {
                    if orders.len() == n {
                        return Err(ProfileError::Parse {
                            line: lineno,
                            msg: format!("more than {n} agent lines"),
                        });
                    }
                    let classes = parse_class_line(line, lineno)?;
                    orders.push(WeakOrder::new(m, classes)?);
                }
            }
        }
        let (m, k, n) = header.ok_or(ProfileError::Parse {
            line: 1,
            msg: "missing header line".into(),
        })?;
        if orders.len() != n {
            return Err(ProfileError::Parse {
                line: 0,
                msg: format!("expected {n} agent lines, found {}", orders.len()),
            });
        }
        Profile::new(m, k, orders)
    }

    /// Serializes to the text format parsed by [`Profile::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.m, self.k, self.orders.len());
        for o in &self.orders {
            out.push_str(&o.to_string());
            out.push('\n');
        }
        out
    }
}

/// One agent line: top-level commas separate classes, braces group ties.
fn parse_class_line(line: &str, lineno: usize) -> Result<Vec<Vec<Alt>>, ProfileError> {
    let err = |msg: String| ProfileError::Parse { line: lineno, msg };
    let mut classes: Vec<Vec<Alt>> = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let (tok, tail) = if let Some(stripped) = rest.strip_prefix('{') {
            let close = stripped
                .find('}')
                .ok_or_else(|| err("unclosed `{`".into()))?;
            let inner = &stripped[..close];
            let tail = stripped[close + 1..].trim_start();
            let tail = match tail.strip_prefix(',') {
                Some(t) => t.trim_start(),
                None if tail.is_empty() => "",
                None => return Err(err("expected `,` after `}`".into())),
            };
            (inner, tail)
        } else {
            match rest.find([',', '{']) {
                Some(pos) if rest.as_bytes()[pos] == b'{' => {
                    return Err(err("unexpected `{` inside class".into()))
                }
                Some(pos) => (&rest[..pos], rest[pos + 1..].trim_start()),
                None => (rest, ""),
            }
        };
        let mut class = Vec::new();
        for part in tok.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(err("empty class member".into()));
            }
            let id: u32 = part
                .parse()
                .map_err(|_| err(format!("bad alternative id {part:?}")))?;
            if id == 0 {
                return Err(err("alternative ids start at 1".into()));
            }
            class.push(Alt(id));
        }
        classes.push(class);
        rest = tail;
    }
    if classes.is_empty() {
        return Err(err("empty preference line".into()));
    }
    Ok(classes)
}

/// All weak orders over `1..=m`, in a canonical order.
///
/// Each order is encoded by its rank tuple `(rank(1), ..., rank(m))`; valid
/// tuples (ranks forming a contiguous `1..=c`) are emitted in lexicographic
/// tuple order. Used for exhaustive misreport and profile sweeps.
pub fn all_weak_orders(m: usize) -> Vec<WeakOrder> {
    let mut out = Vec::new();
    let mut ranks = vec![1usize; m];
    loop {
        if ranks_contiguous(&ranks) {
            let c = *ranks.iter().max().unwrap();
            let mut classes = vec![Vec::new(); c];
            for (idx, &r) in ranks.iter().enumerate() {
                classes[r - 1].push(Alt::from_index(idx));
            }
            out.push(WeakOrder::new(m, classes).expect("rank tuple forms a partition"));
        }
        // next tuple in {1..m}^m, lexicographic
        let mut pos = m;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if ranks[pos] < m {
                ranks[pos] += 1;
                for r in &mut ranks[pos + 1..] {
                    *r = 1;
                }
                break;
            }
        }
    }
}

fn ranks_contiguous(ranks: &[usize]) -> bool {
    let max = *ranks.iter().max().unwrap();
    (1..=max).all(|r| ranks.contains(&r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alts(ids: &[u32]) -> Vec<Alt> {
        ids.iter().map(|&i| Alt(i)).collect()
    }

    #[test]
    fn parses_strict_profile() {
        let p = Profile::parse("4 2 2\n1,2,3,4\n4,3,2,1\n").unwrap();
        assert_eq!(p.num_alternatives(), 4);
        assert_eq!(p.committee_size(), 2);
        assert_eq!(p.num_agents(), 2);
        assert_eq!(p.order(0).rank(Alt(1)), 1);
        assert_eq!(p.order(0).rank(Alt(4)), 4);
        assert_eq!(p.order(1).rank(Alt(1)), 4);
        assert!(p.is_strict());
        assert!(!p.is_dichotomous());
    }

    #[test]
    fn parses_single_alternative() {
        let p = Profile::parse("1 1 1\n1\n").unwrap();
        assert_eq!(p.num_alternatives(), 1);
        assert_eq!(p.committee_size(), 1);
        assert_eq!(p.num_agents(), 1);
    }

    #[test]
    fn parses_dichotomous_profile() {
        let text = "6 2 5\n{1,3},{2,4,5,6}\n{2,3},{1,4,5,6}\n{2,4},{1,3,5,6}\n{4,5},{1,2,3,6}\n{5,6},{1,2,3,4}\n";
        let p = Profile::parse(text).unwrap();
        assert!(p.is_dichotomous());
        assert!(!p.is_strict());
        assert_eq!(p.topwidth(), 2);
        assert_eq!(p.order(0).classes()[0], alts(&[1, 3]));
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let p = Profile::parse("# example\n2 1 1\n\n# agent one\n{1,2}\n").unwrap();
        assert_eq!(p.num_agents(), 1);
        assert_eq!(p.order(0).num_classes(), 1);
    }

    #[test]
    fn mixed_braces_line() {
        let p = Profile::parse("4 2 1\n{1,3},2,{4}\n").unwrap();
        assert_eq!(p.order(0).classes()[0], alts(&[1, 3]));
        assert_eq!(p.order(0).classes()[1], alts(&[2]));
        assert_eq!(p.order(0).classes()[2], alts(&[4]));
    }

    #[test]
    fn rejects_non_partition() {
        // alternative 3 missing
        let err = Profile::parse("3 1 1\n1,2\n").unwrap_err();
        assert!(matches!(err, ProfileError::Validation { .. }), "{err}");
        // duplicate alternative
        let err = Profile::parse("3 1 1\n1,2,2\n").unwrap_err();
        assert!(matches!(err, ProfileError::Validation { .. }));
        // out of range
        let err = Profile::parse("3 1 1\n1,2,4\n").unwrap_err();
        assert!(matches!(err, ProfileError::Validation { .. }));
    }

    #[test]
    fn rejects_bad_k() {
        let err = Profile::parse("3 4 1\n1,2,3\n").unwrap_err();
        assert!(matches!(err, ProfileError::Validation { .. }));
        let err = Profile::parse("3 0 1\n1,2,3\n").unwrap_err();
        assert!(matches!(err, ProfileError::Validation { .. }));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Profile::parse("2 1 1\n{1,2\n").unwrap_err();
        assert_eq!(err, ProfileError::Parse { line: 2, msg: "unclosed `{`".into() });
        let err = Profile::parse("x 1 1\n1\n").unwrap_err();
        assert!(matches!(err, ProfileError::Parse { line: 1, .. }));
        let err = Profile::parse("2 1 2\n{1,2}\n").unwrap_err();
        assert!(matches!(err, ProfileError::Parse { .. }));
    }

    #[test]
    fn topwidth_cases() {
        let strict = Profile::parse("4 2 2\n1,2,3,4\n4,3,2,1\n").unwrap();
        assert_eq!(strict.topwidth(), 1);
        let ex3 = Profile::parse(
            "6 2 5\n{1,3},{2,4,5,6}\n{2,3},{1,4,5,6}\n{2,4},{1,3,5,6}\n{4,5},{1,2,3,6}\n{5,6},{1,2,3,4}\n",
        )
        .unwrap();
        assert_eq!(ex3.topwidth(), 2);
    }

    #[test]
    fn full_indifference_is_neither_dichotomous_nor_strict() {
        let p = Profile::parse("3 1 1\n{1,2,3}\n").unwrap();
        assert!(!p.is_dichotomous());
        assert!(!p.is_strict());
        assert_eq!(p.topwidth(), 3);
    }

    #[test]
    fn rank_vector_examples() {
        let ex1 = Profile::parse("4 2 2\n1,2,3,4\n4,3,2,1\n").unwrap();
        let w = Committee::parse("1,3").unwrap(); // {a,c}
        assert_eq!(ex1.order(0).rank_vector(&w), vec![1, 3]);
        assert_eq!(ex1.order(1).rank_vector(&w), vec![2, 4]);

        let indif = Profile::parse("3 2 1\n{1,2,3}\n").unwrap();
        let w = Committee::parse("2,3").unwrap();
        assert_eq!(indif.order(0).rank_vector(&w), vec![1, 1]);
    }

    #[test]
    fn round_trip_text() {
        let text = "6 2 5\n{1,3},{2,4,5,6}\n{2,3},{1,4,5,6}\n{2,4},{1,3,5,6}\n{4,5},{1,2,3,6}\n{5,6},{1,2,3,4}\n";
        let p = Profile::parse(text).unwrap();
        let again = Profile::parse(&p.to_text()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn committee_parse_canonicalizes() {
        let w = Committee::parse("3,1").unwrap();
        assert_eq!(w.to_string(), "1,3");
        assert!(Committee::parse("1,1").is_err());
        assert!(Committee::parse("0,1").is_err());
    }

    #[test]
    fn weak_order_counts() {
        // ordered Bell numbers
        assert_eq!(all_weak_orders(1).len(), 1);
        assert_eq!(all_weak_orders(2).len(), 3);
        assert_eq!(all_weak_orders(3).len(), 13);
        assert_eq!(all_weak_orders(4).len(), 75);
    }
}
