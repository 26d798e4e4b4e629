//! Linear extensions: exact counting, enumeration, pair probabilities and
//! balance constants.
//!
//! Counting is a dynamic program over down-sets: the number of ways to
//! linearly order a down-set `D` is the sum over maximal elements `x` of `D`
//! of the count for `D \ {x}`. Counts are accumulated in `u128` and the
//! whole run is repeated with big integers if any addition overflows.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::poset::{bit, bits, Permutation, Poset};
use crate::ratio::ExactRatio;

/// Default cap on streamed extensions used by the CLI.
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

trait Count: Clone {
    fn empty() -> Self;
    fn unit() -> Self;
    /// Returns false on overflow.
    fn add_checked(&mut self, other: &Self) -> bool;
    fn into_big(self) -> BigUint;
}

impl Count for u128 {
    fn empty() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn add_checked(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn into_big(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Count for BigUint {
    fn empty() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn add_checked(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }
    fn into_big(self) -> BigUint {
        self
    }
}

/// Forward DP from the empty down-set, one size level at a time.
fn count_dp<C: Count>(p: &Poset) -> Option<C> {
    let n = p.len();
    let full = p.full();
    let mut level: HashMap<u64, C> = HashMap::from([(0u64, C::unit())]);
    for _ in 0..n {
        let mut next: HashMap<u64, C> = HashMap::with_capacity(level.len() * 2);
        for (&d, c) in &level {
            for x in bits(full & !d) {
                if p.down_mask(x) & !d == 0 {
                    let slot = next.entry(d | bit(x)).or_insert_with(C::empty);
                    if !slot.add_checked(c) {
                        return None;
                    }
                }
            }
        }
        level = next;
    }
    level.remove(&full)
}

/// Exact number of linear extensions `e(P)`.
pub fn count_extensions(p: &Poset) -> BigUint {
    match count_dp::<u128>(p) {
        Some(c) => c.into_big(),
        None => count_dp::<BigUint>(p).expect("big integers do not overflow"),
    }
}

/// Streams linear extensions in lexicographic order of one-line notation.
pub fn enumerate_extensions(p: &Poset) -> Extensions<'_> {
    Extensions {
        p,
        prefix: Vec::with_capacity(p.len()),
        placed: 0,
        started: false,
        done: false,
    }
}

pub struct Extensions<'a> {
    p: &'a Poset,
    prefix: Vec<usize>,
    placed: u64,
    started: bool,
    done: bool,
}

impl Extensions<'_> {
    fn available(&self, x: usize) -> bool {
        self.placed & bit(x) == 0 && self.p.down_mask(x) & !self.placed == 0
    }

    fn complete_greedily(&mut self) {
        while self.prefix.len() < self.p.len() {
            let x = (0..self.p.len())
                .find(|&x| self.available(x))
                .expect("acyclic");
            self.prefix.push(x);
            self.placed |= bit(x);
        }
    }

    fn current(&self) -> Permutation {
        Permutation::new(self.prefix.iter().map(|&x| x + 1).collect()).expect("extension")
    }
}

impl Iterator for Extensions<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.complete_greedily();
            return Some(self.current());
        }
        while let Some(last) = self.prefix.pop() {
            self.placed &= !bit(last);
            if let Some(x) = (last + 1..self.p.len()).find(|&x| self.available(x)) {
                self.prefix.push(x);
                self.placed |= bit(x);
                self.complete_greedily();
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

/// `e(P)` together with `e(P + xy)` for every ordered pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionStats {
    pub total: BigUint,
    /// 0-based: `pair_counts[x][y] = e(P + (x+1)(y+1))`; diagonal is 0.
    pub pair_counts: Vec<Vec<BigUint>>,
}

impl ExtensionStats {
    /// Entry for 1-based elements.
    pub fn count(&self, x: usize, y: usize) -> &BigUint {
        &self.pair_counts[x - 1][y - 1]
    }

    /// `P(x ≺ y)` for 1-based elements.
    pub fn prob(&self, x: usize, y: usize) -> ExactRatio {
        ExactRatio::from_counts(self.count(x, y), &self.total)
    }

    /// Row-major CSV of exact decimal counts.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for row in &self.pair_counts {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }
}

/// Pair matrix with the default execution strategy.
pub fn pair_matrix(p: &Poset) -> ExtensionStats {
    pair_matrix_with(p, Exec::default())
}

/// Computes `e(P + xy)` for each incomparable pair by counting extensions
/// of the augmented poset. Comparable pairs come straight from the relation.
/// Only pairs with `x < y` (as indices) are counted; the partner entry is
/// `e(P) - e(P + xy)`.
pub fn pair_matrix_with(p: &Poset, exec: Exec) -> ExtensionStats {
    let n = p.len();
    let total = count_extensions(p);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| !p.comparable(x + 1, y + 1))
        .collect();
    let counts = par::map_collect(exec, &pairs, |&(x, y)| {
        let aug = p.with_relation(x + 1, y + 1).expect("incomparable");
        count_extensions(&aug)
    });
    let mut m = vec![vec![BigUint::zero(); n]; n];
    for x in 0..n {
        for y in bits(p.up_mask(x)) {
            m[x][y] = total.clone();
        }
    }
    for (&(x, y), c) in pairs.iter().zip(counts) {
        m[y][x] = &total - &c;
        m[x][y] = c;
    }
    ExtensionStats {
        total,
        pair_counts: m,
    }
}

/// Second route to the pair matrix: one forward and one backward pass over
/// the down-set lattice. Extensions with `x` before `y` are tallied at the
/// step where `x` is placed while `y` is still unplaced.
pub fn pair_matrix_by_tally(p: &Poset) -> ExtensionStats {
    let n = p.len();
    let full = p.full();
    let ideals: Vec<u64> = p.down_sets().into_iter().map(|d| d.mask()).collect();
    let mut fwd: HashMap<u64, BigUint> = HashMap::new();
    fwd.insert(0, BigUint::one());
    for &d in &ideals {
        let c = fwd.get(&d).cloned().unwrap_or_default();
        for x in bits(full & !d) {
            if p.down_mask(x) & !d == 0 {
                *fwd.entry(d | bit(x)).or_default() += &c;
            }
        }
    }
    let mut bwd: HashMap<u64, BigUint> = HashMap::new();
    bwd.insert(full, BigUint::one());
    for &d in ideals.iter().rev() {
        if d == full {
            continue;
        }
        let mut c = BigUint::zero();
        for x in bits(full & !d) {
            if p.down_mask(x) & !d == 0 {
                c += &bwd[&(d | bit(x))];
            }
        }
        bwd.insert(d, c);
    }
    let mut m = vec![vec![BigUint::zero(); n]; n];
    for &d in &ideals {
        for x in bits(full & !d) {
            if p.down_mask(x) & !d != 0 {
                continue;
            }
            let ways = &fwd[&d] * &bwd[&(d | bit(x))];
            for y in bits(full & !d & !bit(x)) {
                m[x][y] += &ways;
            }
        }
    }
    ExtensionStats {
        total: fwd[&full].clone(),
        pair_counts: m,
    }
}

/// `P(x ≺ y) = e(P + xy) / e(P)` for distinct 1-based elements.
pub fn prob_before(p: &Poset, x: usize, y: usize) -> Result<ExactRatio> {
    check_elements(p, x, y)?;
    if p.less(x, y) {
        return Ok(ExactRatio::one());
    }
    if p.less(y, x) {
        return Ok(ExactRatio::zero());
    }
    let aug = p.with_relation(x, y).expect("incomparable");
    Ok(ExactRatio::from_counts(
        &count_extensions(&aug),
        &count_extensions(p),
    ))
}

fn check_elements(p: &Poset, x: usize, y: usize) -> Result<()> {
    for e in [x, y] {
        if e == 0 || e > p.len() {
            return Err(Error::OutOfRange {
                element: e,
                n: p.len(),
            });
        }
    }
    if x == y {
        return Err(Error::SamePair(x));
    }
    Ok(())
}

/// `δ(P)` with a witnessing pair and every 1/3-balanced pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub delta: ExactRatio,
    pub witness: Option<(usize, usize)>,
    pub all_balanced_pairs: Vec<(usize, usize)>,
}

pub fn balance_constant(p: &Poset) -> BalanceReport {
    balance_from_stats(p, &pair_matrix(p))
}

/// Balance report from a precomputed pair matrix. Pairs are 1-based with
/// `x < y`.
pub fn balance_from_stats(p: &Poset, stats: &ExtensionStats) -> BalanceReport {
    let n = p.len();
    let third = ExactRatio::third();
    let mut delta = ExactRatio::zero();
    let mut witness = None;
    let mut balanced = Vec::new();
    for x in 1..=n {
        for y in x + 1..=n {
            if p.comparable(x, y) {
                continue;
            }
            let m = stats.prob(x, y).min_with_complement();
            if m >= third {
                balanced.push((x, y));
            }
            if m > delta {
                delta = m;
                witness = Some((x, y));
            }
        }
    }
    BalanceReport {
        delta,
        witness,
        all_balanced_pairs: balanced,
    }
}

/// `alpha <= P(x ≺ y) <= 1 - alpha`, exactly.
pub fn is_alpha_balanced(p: &Poset, x: usize, y: usize, alpha: &ExactRatio) -> Result<bool> {
    if alpha.is_negative() || *alpha > ExactRatio::half() {
        return Err(Error::AlphaOutOfRange(alpha.to_string()));
    }
    let pr = prob_before(p, x, y)?;
    Ok(*alpha <= pr && pr <= alpha.complement())
}
