//! Finite posets stored as transitively closed relation bitsets.
//!
//! Elements are numbered `1..=n` at the public surface; internally element
//! `x` occupies bit `x - 1` of a `u64`, which caps posets at 64 elements.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported element count (one machine word per relation row).
pub const MAX_ELEMENTS: usize = 64;

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` as 0-based indices, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidPermutation(format!(
                    "{entries:?} is not a permutation of 1..={n}"
                )));
            }
            seen[e] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of `x` (1-based) when read as the map `i -> entries[i-1]`.
    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            inv[e - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`, i.e. `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.apply(x)).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e == i + 1)
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = (1..=n).collect::<Vec<_>>();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// `41325` (single digits) or `4,1,3,2,5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries: Vec<usize> = if s.contains(',') || s.contains(' ') {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

/// A down-closed subset of a poset's elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DownSet(u64);

impl DownSet {
    pub fn mask(self) -> u64 {
        self.0
    }

    /// Members as 1-based elements, ascending.
    pub fn members(self) -> Vec<usize> {
        bits(self.0).map(|i| i + 1).collect()
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 & bit(x - 1) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: DownSet) -> bool {
        self.0 & !other.0 == 0
    }
}

/// A finite strict partial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `up[x]` has bit `y` iff `x < y`.
    up: Vec<u64>,
    /// `down[y]` has bit `x` iff `x < y`.
    down: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Poset {
    /// Builds a poset from 1-based cover pairs `(x, y)` meaning `x < y`.
    /// Redundant pairs are accepted and dropped from [`Poset::covers`].
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let mut adj = vec![0u64; n];
        for &(x, y) in covers {
            for e in [x, y] {
                if e == 0 || e > n {
                    return Err(Error::OutOfRange { element: e, n });
                }
            }
            adj[x - 1] |= bit(y - 1);
        }
        if let Some(cycle) = find_cycle(&adj) {
            return Err(Error::Cycle(cycle.into_iter().map(|i| i + 1).collect()));
        }
        Ok(Self::from_acyclic(adj))
    }

    /// Builds a poset from a 0-based strict-order predicate. The predicate must
    /// describe an acyclic relation; it is transitively closed here.
    pub(crate) fn from_fn(n: usize, less: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let mut adj = vec![0u64; n];
        for x in 0..n {
            for y in 0..n {
                if x != y && less(x, y) {
                    adj[x] |= bit(y);
                }
            }
        }
        if let Some(cycle) = find_cycle(&adj) {
            return Err(Error::Cycle(cycle.into_iter().map(|i| i + 1).collect()));
        }
        Ok(Self::from_acyclic(adj))
    }

    /// `adj` must be acyclic. Closes it transitively.
    pub(crate) fn from_acyclic(mut up: Vec<u64>) -> Poset {
        let n = up.len();
        // Warshall on bitsets
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if *row & bit(k) != 0 {
                    *row |= row_k;
                }
            }
        }
        let mut down = vec![0u64; n];
        for (x, &row) in up.iter().enumerate() {
            for y in bits(row) {
                down[y] |= bit(x);
            }
        }
        Poset {
            n,
            up,
            down,
            labels: None,
        }
    }

    pub fn antichain(n: usize) -> Poset {
        Self::from_acyclic(vec![0; n])
    }

    pub fn chain(n: usize) -> Poset {
        let covers: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_covers(n, &covers).expect("chain is acyclic")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Poset {
        assert_eq!(labels.len(), self.n, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a 1-based element: its label if any, else the number.
    pub fn name(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x - 1].clone(),
            None => x.to_string(),
        }
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()?
            .iter()
            .position(|l| l == label)
            .map(|i| i + 1)
    }

    /// `x <_P y` for 1-based elements.
    pub fn less(&self, x: usize, y: usize) -> bool {
        self.up[x - 1] & bit(y - 1) != 0
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.less(x, y) || self.less(y, x)
    }

    #[inline]
    pub(crate) fn up_mask(&self, x: usize) -> u64 {
        self.up[x]
    }

    #[inline]
    pub(crate) fn down_mask(&self, x: usize) -> u64 {
        self.down[x]
    }

    pub(crate) fn up_rows(&self) -> &[u64] {
        &self.up
    }

    pub(crate) fn full(&self) -> u64 {
        full_mask(self.n)
    }

    /// The relation as an `n × n` boolean matrix (0-based indices).
    pub fn relation_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.up[x] & bit(y) != 0).collect())
            .collect()
    }

    /// Cover pairs (transitive reduction), 1-based, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in bits(self.upper_covers_mask(x)) {
                out.push((x + 1, y + 1));
            }
        }
        out
    }

    pub(crate) fn upper_covers_mask(&self, x: usize) -> u64 {
        let mut redundant = 0u64;
        for z in bits(self.up[x]) {
            redundant |= self.up[z];
        }
        self.up[x] & !redundant
    }

    pub fn dual(&self) -> Poset {
        Poset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Adds `x < y` (1-based) and closes transitively. Returns `None` when
    /// `y < x` already holds.
    pub fn with_relation(&self, x: usize, y: usize) -> Option<Poset> {
        let (x, y) = (x - 1, y - 1);
        if x == y || self.up[y] & bit(x) != 0 {
            return None;
        }
        let mut up = self.up.clone();
        let mut down = self.down.clone();
        // everything at or below x goes below everything at or above y
        let below = self.down[x] | bit(x);
        let above = self.up[y] | bit(y);
        for a in bits(below) {
            up[a] |= above;
        }
        for b in bits(above) {
            down[b] |= below;
        }
        Some(Poset {
            n: self.n,
            up,
            down,
            labels: self.labels.clone(),
        })
    }

    pub fn is_chain(&self) -> bool {
        let full = self.full();
        (0..self.n).all(|x| (self.up[x] | self.down[x] | bit(x)) == full)
    }

    /// Maximum antichain size via Dilworth: `n` minus a maximum matching in
    /// the comparability bipartite graph.
    pub fn width(&self) -> usize {
        let n = self.n;
        let mut match_right: Vec<Option<usize>> = vec![None; n];
        let mut matched = 0;
        for x in 0..n {
            let mut seen = 0u64;
            if self.augment(x, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        n - matched
    }

    fn augment(&self, x: usize, seen: &mut u64, match_right: &mut [Option<usize>]) -> bool {
        for y in bits(self.up[x]) {
            if *seen & bit(y) != 0 {
                continue;
            }
            *seen |= bit(y);
            let free = match match_right[y] {
                None => true,
                Some(x2) => self.augment(x2, seen, match_right),
            };
            if free {
                match_right[y] = Some(x);
                return true;
            }
        }
        false
    }

    /// Maximum antichain size by exhaustive search; only for `n <= 20`.
    pub fn width_brute_force(&self) -> Result<usize> {
        if self.n > 20 {
            return Err(Error::Guard {
                what: "brute-force width",
                n: self.n,
                max: 20,
            });
        }
        let mut best = 0;
        for mask in 0u64..(1u64 << self.n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            if bits(mask).all(|x| self.up[x] & mask == 0) {
                best = size;
            }
        }
        Ok(best)
    }

    /// Length of the longest chain ending at each element (minimal = 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.n];
        for x in self.topological_order() {
            for y in bits(self.up[x]) {
                h[y] = h[y].max(h[x] + 1);
            }
        }
        h
    }

    /// A linear extension (0-based), smallest available element first.
    pub(crate) fn topological_order(&self) -> Vec<usize> {
        let mut placed = 0u64;
        let mut out = Vec::with_capacity(self.n);
        while out.len() < self.n {
            let x = (0..self.n)
                .find(|&x| placed & bit(x) == 0 && self.down[x] & !placed == 0)
                .expect("acyclic");
            placed |= bit(x);
            out.push(x);
        }
        out
    }

    pub fn is_down_set(&self, mask: u64) -> bool {
        bits(mask).all(|x| self.down[x] & !mask == 0)
    }

    /// Every down-set exactly once, ordered by (size, mask).
    pub fn down_sets(&self) -> Vec<DownSet> {
        let order = self.topological_order();
        let mut out = Vec::new();
        self.down_sets_rec(&order, 0, 0, &mut out);
        out.sort_by_key(|d| (d.count_ones(), *d));
        out.into_iter().map(DownSet).collect()
    }

    fn down_sets_rec(&self, order: &[usize], i: usize, cur: u64, out: &mut Vec<u64>) {
        if i == order.len() {
            out.push(cur);
            return;
        }
        let x = order[i];
        self.down_sets_rec(order, i + 1, cur, out);
        if self.down[x] & !cur == 0 {
            self.down_sets_rec(order, i + 1, cur | bit(x), out);
        }
    }

    /// Strict principal down-set `{y : y < x}` of a 1-based element.
    pub fn principal_down(&self, x: usize) -> DownSet {
        DownSet(self.down[x - 1])
    }

    pub fn principal_up_mask(&self, x: usize) -> u64 {
        self.up[x - 1]
    }

    /// Relabels element `x` (1-based) as `perm.apply(x)`.
    pub fn relabel(&self, perm: &Permutation) -> Poset {
        assert_eq!(perm.len(), self.n);
        let mut up = vec![0u64; self.n];
        for x in 0..self.n {
            let nx = perm.apply(x + 1) - 1;
            for y in bits(self.up[x]) {
                up[nx] |= bit(perm.apply(y + 1) - 1);
            }
        }
        let mut p = Self::from_acyclic(up);
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); self.n];
            for (x, name) in l.iter().enumerate() {
                nl[perm.apply(x + 1) - 1] = name.clone();
            }
            p.labels = Some(nl);
        }
        p
    }

    /// Whether the 0-based `mask` is totally ordered.
    pub(crate) fn mask_is_chain(&self, mask: u64) -> bool {
        bits(mask).all(|x| (self.up[x] | self.down[x] | bit(x)) & mask == mask)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            n: self.n,
            covers: self.covers().into_iter().map(|(x, y)| [x, y]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(j: &PosetJson) -> Result<Poset> {
        let covers: Vec<_> = j.covers.iter().map(|c| (c[0], c[1])).collect();
        let p = Poset::from_covers(j.n, &covers)?;
        match &j.labels {
            Some(l) if l.len() != j.n => Err(Error::Parse(format!(
                "{} labels for {} elements",
                l.len(),
                j.n
            ))),
            Some(l) => Ok(p.with_labels(l.clone())),
            None => Ok(p),
        }
    }

    /// Graphviz description of the Hasse diagram. Covers point upward and
    /// elements of equal height share a rank.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
        for x in 1..=self.n {
            s.push_str(&format!(
                "  {x} [label=\"{}\"];\n",
                self.name(x).replace('"', "\\\"")
            ));
        }
        let h = self.heights();
        let max_h = h.iter().copied().max().unwrap_or(0);
        for level in 0..=max_h {
            let members: Vec<String> = (0..self.n)
                .filter(|&x| h[x] == level)
                .map(|x| (x + 1).to_string())
                .collect();
            if !members.is_empty() {
                s.push_str(&format!("  {{ rank=same; {}; }}\n", members.join("; ")));
            }
        }
        for (x, y) in self.covers() {
            s.push_str(&format!("  {x} -> {y};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers())
    }
}

/// Wire format: `{"n": 6, "covers": [[1,4],[4,5]]}` with optional labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Returns a directed cycle (0-based) if `adj` has one.
fn find_cycle(adj: &[u64]) -> Option<Vec<usize>> {
    let n = adj.len();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, u64)> = vec![(start, adj[start])];
        state[start] = 1;
        while let Some((v, rest)) = stack.last_mut() {
            let v = *v;
            if *rest == 0 {
                state[v] = 2;
                stack.pop();
                continue;
            }
            let w = rest.trailing_zeros() as usize;
            *rest &= *rest - 1;
            match state[w] {
                0 => {
                    parent[w] = v;
                    state[w] = 1;
                    stack.push((w, adj[w]));
                }
                1 => {
                    // walk parents back from v to w, then close the loop
                    let mut cycle = Vec::new();
                    let mut u = v;
                    while u != w {
                        cycle.push(u);
                        u = parent[u];
                    }
                    cycle.push(w);
                    cycle.reverse();
                    cycle.push(w);
                    return Some(cycle);
                }
                _ => {}
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn distinct<T: std::hash::Hash + Eq + Clone>(items: &[T]) -> usize {
        items.iter().cloned().collect::<HashSet<_>>().len()
    }

    fn figure1() -> Poset {
        Poset::from_covers(6, &[(1, 4), (4, 5), (2, 5), (2, 3), (1, 3), (3, 6)]).unwrap()
    }

    #[test]
    fn figure1_closure() {
        let p = figure1();
        assert!(p.less(1, 5));
        assert!(p.less(2, 6));
        assert!(p.less(1, 6));
        assert!(!p.comparable(1, 2));
        assert_eq!(
            p.covers(),
            vec![(1, 3), (1, 4), (2, 3), (2, 5), (3, 6), (4, 5)]
        );
        assert!(!p.is_chain());
    }

    #[test]
    fn chain_covers_reduced() {
        let p = Poset::from_covers(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(p.covers(), vec![(1, 2), (2, 3)]);
        assert!(p.is_chain());
        assert_eq!(p.width(), 1);
    }

    #[test]
    fn antichain_has_no_relations() {
        let p = Poset::from_covers(3, &[]).unwrap();
        assert!(p.relation_matrix().iter().flatten().all(|b| !b));
        assert_eq!(p.width(), 3);
        assert_eq!(p.dual(), p);
    }

    #[test]
    fn rejects_cycles_and_range() {
        match Poset::from_covers(3, &[(1, 2), (2, 3), (3, 1)]) {
            Err(Error::Cycle(c)) => {
                assert_eq!(c.first(), c.last());
                assert_eq!(c.len(), 4);
                for w in c.windows(2) {
                    assert!([(1, 2), (2, 3), (3, 1)].contains(&(w[0], w[1])), "{c:?}");
                }
            }
            other => panic!("expected cycle, got {other:?}"),
        }
        assert!(matches!(
            Poset::from_covers(2, &[(1, 1)]),
            Err(Error::Cycle(_))
        ));
        assert_eq!(
            Poset::from_covers(2, &[(1, 3)]).unwrap_err(),
            Error::OutOfRange { element: 3, n: 2 }
        );
        assert!(matches!(
            Poset::from_covers(65, &[]),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn dual_of_chain_and_t() {
        let c = Poset::chain(3).dual();
        assert!(c.less(2, 1) && c.less(3, 1) && c.less(3, 2));
        let t = Poset::from_covers(3, &[(1, 2)]).unwrap().dual();
        assert!(t.less(2, 1));
        assert!(!t.comparable(3, 1) && !t.comparable(3, 2));
        assert_eq!(t.dual().dual(), t);
    }

    #[test]
    fn width_examples() {
        assert_eq!(Poset::chain(4).width(), 1);
        assert_eq!(Poset::from_covers(1, &[]).unwrap().width(), 1);
        assert!(Poset::from_covers(1, &[]).unwrap().is_chain());
        let t = Poset::from_covers(3, &[(1, 2)]).unwrap();
        assert_eq!(t.width(), 2);
        let fig8r = Poset::from_covers(
            7,
            &[
                (1, 2),
                (1, 5),
                (2, 4),
                (2, 7),
                (3, 4),
                (3, 7),
                (4, 6),
                (5, 6),
            ],
        )
        .unwrap();
        assert_eq!(fig8r.width_brute_force().unwrap(), 3);
        assert_eq!(fig8r.width(), 3);
    }

    #[test]
    fn down_sets_of_chain_and_antichain() {
        assert_eq!(Poset::chain(4).down_sets().len(), 5);
        assert_eq!(Poset::antichain(4).down_sets().len(), 16);
        let p = figure1();
        for d in p.down_sets() {
            assert!(p.is_down_set(d.mask()));
        }
        assert_eq!(distinct(&p.down_sets()), p.down_sets().len());
    }

    #[test]
    fn with_relation_closes() {
        let p = Poset::from_covers(4, &[(1, 2), (3, 4)]).unwrap();
        let q = p.with_relation(2, 3).unwrap();
        assert!(q.less(1, 4));
        assert!(q.is_chain());
        assert!(q.with_relation(4, 1).is_none());
    }

    #[test]
    fn json_and_dot() {
        let p = figure1();
        let j = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(
            j,
            r#"{"n":6,"covers":[[1,3],[1,4],[2,3],[2,5],[3,6],[4,5]]}"#
        );
        let parsed: PosetJson =
            serde_json::from_str(r#"{"n": 6, "covers": [[1,4],[4,5],[2,5],[2,3],[1,3],[3,6]]}"#)
                .unwrap();
        assert_eq!(Poset::from_json(&parsed).unwrap(), p);
        let dot = p.to_dot();
        assert!(dot.contains("1 -> 3;"));
        assert!(dot.contains("{ rank=same; 1; 2; }"));
    }

    #[test]
    fn permutation_parsing() {
        let p: Permutation = "41325".parse().unwrap();
        assert_eq!(p.entries(), &[4, 1, 3, 2, 5]);
        assert_eq!("4,1,3,2,5".parse::<Permutation>().unwrap(), p);
        assert!("4133".parse::<Permutation>().is_err());
        assert!("4,1,3,5".parse::<Permutation>().is_err());
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(p.to_string(), "41325");
    }
}
