//! Ad-nilpotent ideals as upper ideals of the positive-root poset.

use std::fmt;

use crate::bitset::RootSet;
use crate::rootsys::{CartanType, Root, RootSystem};
use crate::{Error, Result};

/// An upper ideal of `(Δ+, ≼)` together with its antichain of minimal
/// elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpperIdeal {
    ct: CartanType,
    members: RootSet,
    generators: RootSet,
}

impl UpperIdeal {
    pub fn empty(rs: &RootSystem) -> Self {
        UpperIdeal { ct: rs.cartan_type(), members: RootSet::EMPTY, generators: RootSet::EMPTY }
    }

    /// The ideal `u` of all positive roots.
    pub fn full(rs: &RootSystem) -> Self {
        Self::from_upper_set(rs, rs.all_roots())
    }

    /// Wraps a set that is already known to be upward closed.
    pub(crate) fn from_upper_set(rs: &RootSystem, members: RootSet) -> Self {
        debug_assert!(is_upward_closed(rs, members));
        UpperIdeal { ct: rs.cartan_type(), members, generators: minimal_elements(rs, members) }
    }

    /// Validates upward closure.
    pub fn from_members(rs: &RootSystem, members: RootSet) -> Result<Self> {
        if !members.is_subset(rs.all_roots()) {
            return Err(Error::Argument("index outside Δ+".into()));
        }
        if !is_upward_closed(rs, members) {
            return Err(Error::Argument(format!("{members:?} is not an upper ideal")));
        }
        Ok(Self::from_upper_set(rs, members))
    }

    /// `{μ ∈ Δ+ : μ ≽ γ for some γ}` for root indices.
    pub fn generated_by(rs: &RootSystem, gens: impl IntoIterator<Item = usize>) -> Self {
        let mut m = RootSet::EMPTY;
        for g in gens {
            m = m.union(rs.above(g));
        }
        Self::from_upper_set(rs, m)
    }

    /// Upward closure of a set of roots given by coefficients.
    pub fn close_upward(rs: &RootSystem, gens: &[Root]) -> Result<Self> {
        let idx = gens
            .iter()
            .map(|g| rs.index_of(g).ok_or_else(|| Error::Argument(format!("{g} is not a positive root"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::generated_by(rs, idx))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ct
    }

    pub fn members(&self) -> RootSet {
        self.members
    }

    /// The antichain `Γ(I)` of minimal elements.
    pub fn generators(&self) -> RootSet {
        self.generators
    }

    pub fn generator_roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.generators.iter().map(|i| rs.root(i).clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn contains_root(&self, rs: &RootSystem, r: &Root) -> bool {
        rs.index_of(r).is_some_and(|i| self.members.contains(i))
    }

    /// `|I| = Σ_{γ∈I} γ` in simple-root coordinates.
    pub fn weight(&self, rs: &RootSystem) -> Root {
        set_sum(rs, self.members)
    }

    /// Does not contain a simple root.
    pub fn is_strictly_positive(&self, rs: &RootSystem) -> bool {
        self.members.intersection(rs.simple_set()).is_empty()
    }

    pub fn is_abelian(&self, rs: &RootSystem) -> bool {
        sum_set(rs, self.members, self.members).is_empty()
    }

    /// `c^1 = c`, `c^k = [c^{k-1}, c]`, ending with the empty ideal.
    pub fn powers(&self, rs: &RootSystem) -> IdealChain {
        let mut terms = vec![*self];
        let mut cur = self.members;
        while !cur.is_empty() {
            cur = sum_set(rs, cur, self.members);
            terms.push(Self::from_upper_set(rs, cur));
        }
        IdealChain { terms, terminated: true }
    }

    /// `c̃^k = Δ+ ∖ (m ∪ m² ∪ … ∪ m^k)` with `m = Δ+ ∖ c`.
    ///
    /// The chain reaches the empty ideal exactly when `c` is strictly
    /// positive; otherwise it is truncated at its stable value and
    /// `terminated` is false.
    pub fn sommers_chain(&self, rs: &RootSystem) -> IdealChain {
        let all = rs.all_roots();
        let m = all.difference(self.members);
        let mut terms = vec![*self];
        let mut union = m;
        let mut mk = m;
        while !terms.last().unwrap().is_empty() {
            mk = sum_set(rs, mk, m);
            if mk.is_empty() {
                break;
            }
            union = union.union(mk);
            terms.push(Self::from_members(rs, all.difference(union)).expect("complement of a lower set"));
        }
        let terminated = terms.last().unwrap().is_empty();
        IdealChain { terms, terminated }
    }

    pub fn meet(&self, rs: &RootSystem, other: &Self) -> Result<Self> {
        self.check_same(rs, other)?;
        Ok(Self::from_upper_set(rs, self.members.intersection(other.members)))
    }

    pub fn join(&self, rs: &RootSystem, other: &Self) -> Result<Self> {
        self.check_same(rs, other)?;
        Ok(Self::from_upper_set(rs, self.members.union(other.members)))
    }

    fn check_same(&self, rs: &RootSystem, other: &Self) -> Result<()> {
        if self.ct == other.ct && self.ct == rs.cartan_type() {
            Ok(())
        } else {
            Err(Error::Argument(format!("ideals of {} and {}", self.ct, other.ct)))
        }
    }

    pub fn display(&self, rs: &RootSystem) -> String {
        let gens: Vec<String> = self.generators.iter().map(|i| rs.root(i).to_string()).collect();
        format!("<{}>", gens.join(","))
    }
}

impl fmt::Debug for UpperIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UpperIdeal({} {:?} gens {:?})", self.ct, self.members, self.generators)
    }
}

/// A chain of ideals `I = J_1 ⊇ J_2 ⊇ …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealChain {
    pub terms: Vec<UpperIdeal>,
    /// Whether the last term is empty (every later term is then empty).
    pub terminated: bool,
}

impl IdealChain {
    /// The 1-based term `J_k`, extended past the end by the last term.
    pub fn term(&self, k: usize) -> &UpperIdeal {
        assert!(k >= 1);
        &self.terms[(k - 1).min(self.terms.len() - 1)]
    }

    /// Number of nonempty terms.
    pub fn nonempty_len(&self) -> usize {
        self.terms.iter().filter(|t| !t.is_empty()).count()
    }

    pub fn is_descending(&self) -> bool {
        self.terms.windows(2).all(|w| w[1].members().is_subset(w[0].members()))
    }

    pub fn is_strictly_descending(&self) -> bool {
        self.terms.windows(2).all(|w| w[1].members().is_subset(w[0].members()) && w[1] != w[0])
    }
}

pub fn is_upward_closed(rs: &RootSystem, set: RootSet) -> bool {
    set.iter().all(|a| rs.above(a).is_subset(set))
}

pub fn minimal_elements(rs: &RootSystem, set: RootSet) -> RootSet {
    set.iter()
        .filter(|&g| (0..rs.rank()).all(|i| rs.minus_simple(g, i).is_none_or(|h| !set.contains(h))))
        .collect()
}

/// `{μ + ν ∈ Δ+ : μ ∈ a, ν ∈ b}`.
pub fn sum_set(rs: &RootSystem, a: RootSet, b: RootSet) -> RootSet {
    let mut out = RootSet::EMPTY;
    for x in a.iter() {
        for y in b.iter() {
            if let Some(s) = rs.sum_index(x, y) {
                out.insert(s);
            }
        }
    }
    out
}

pub fn set_sum(rs: &RootSystem, set: RootSet) -> Root {
    let mut w = vec![0i64; rs.rank()];
    for i in set.iter() {
        for (a, b) in w.iter_mut().zip(rs.root(i).coeffs()) {
            *a += b;
        }
    }
    Root(w)
}

/// Calls `visit` once for every upper ideal, in antichain-DFS order.
pub fn for_each_ideal(rs: &RootSystem, mut visit: impl FnMut(UpperIdeal)) {
    let n = rs.num_positive_roots();
    let mut stack: Vec<usize> = Vec::new();
    dfs(rs, n, 0, RootSet::EMPTY, RootSet::EMPTY, &mut stack, &mut visit);
}

fn dfs(
    rs: &RootSystem,
    n: usize,
    start: usize,
    members: RootSet,
    blocked: RootSet,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(UpperIdeal),
) {
    visit(UpperIdeal {
        ct: rs.cartan_type(),
        members,
        generators: chosen.iter().copied().collect(),
    });
    for c in start..n {
        if blocked.contains(c) {
            continue;
        }
        chosen.push(c);
        dfs(
            rs,
            n,
            c + 1,
            members.union(rs.above(c)),
            blocked.union(rs.above(c)).union(rs.below(c)),
            chosen,
            visit,
        );
        chosen.pop();
    }
}

/// All ad-nilpotent ideals of `b`, each exactly once.
pub fn enumerate_ideals(rs: &RootSystem) -> Vec<UpperIdeal> {
    let mut out = Vec::new();
    for_each_ideal(rs, |i| out.push(i));
    out
}
