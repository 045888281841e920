//! Small finite posets and the quotient `Δ+_α = (Δ+ ∖ {α}) / ℤα`.

use crate::bitset::RootSet;
use crate::rootsys::RootSystem;
use crate::{Error, Result};

/// A partial order on `0..n` (`n ≤ 128`), stored as up-sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    up: Vec<RootSet>,
    down: Vec<RootSet>,
}

impl FinitePoset {
    /// Builds the order generated by `rel` (reflexive-transitive closure)
    /// and rejects it if antisymmetry fails.
    pub fn from_relation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut up: Vec<RootSet> = (0..n)
            .map(|a| (0..n).filter(|&b| a == b || rel(a, b)).collect())
            .collect();
        // Warshall closure on bitsets
        for k in 0..n {
            for a in 0..n {
                if up[a].contains(k) {
                    up[a] = up[a].union(up[k]);
                }
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(Error::Domain(format!("elements {a} and {b} are identified by the order")));
                }
            }
        }
        let down = (0..n).map(|a| (0..n).filter(|&b| up[b].contains(a)).collect()).collect();
        Ok(FinitePoset { up, down })
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// Number of upper ideals (equivalently, antichains).
    pub fn count_upper_ideals(&self) -> u64 {
        fn go(p: &FinitePoset, start: usize, blocked: RootSet) -> u64 {
            let mut total = 1;
            for c in start..p.len() {
                if !blocked.contains(c) {
                    total += go(p, c + 1, blocked.union(p.up[c]).union(p.down[c]));
                }
            }
            total
        }
        go(self, 0, RootSet::EMPTY)
    }
}

/// The quotient poset for a simple root `α_i` (0-based `i`), with a class
/// list of positive-root indices.
#[derive(Clone, Debug)]
pub struct QuotientPoset {
    pub classes: Vec<Vec<usize>>,
    pub poset: FinitePoset,
}

/// Classes of `Δ+ ∖ {α_i}` modulo `ℤα_i`, ordered by comparability of
/// representatives and then closed transitively.
pub fn quotient_poset(rs: &RootSystem, i: usize) -> Result<QuotientPoset> {
    if i >= rs.rank() {
        return Err(Error::Argument(format!("simple root index {} out of range", i + 1)));
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut key_of: Vec<Vec<i64>> = Vec::new();
    for r in (0..rs.num_positive_roots()).filter(|&r| r != i) {
        let mut key = rs.root(r).coeffs().to_vec();
        key[i] = 0;
        match key_of.iter().position(|k| *k == key) {
            Some(c) => classes[c].push(r),
            None => {
                key_of.push(key);
                classes.push(vec![r]);
            }
        }
    }
    let poset = FinitePoset::from_relation(classes.len(), |a, b| {
        classes[a].iter().any(|&x| classes[b].iter().any(|&y| rs.above(x).contains(y)))
    })?;
    Ok(QuotientPoset { classes, poset })
}
