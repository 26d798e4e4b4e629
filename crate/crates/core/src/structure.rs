//! Structural certificates that force a balanced pair: twin and almost-twin
//! pairs, automorphisms with 2-cycles, fixed points of anti-automorphisms
//! and inversions of a permutation that avoid 312 and 231.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{bit, bits, DownSet, Permutation, Poset};
use crate::ratio::ExactRatio;

/// Largest poset the morphism searches accept.
pub const MORPHISM_LIMIT: usize = 24;

/// A strict up-set `{y : y > x}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UpSet(u64);

impl UpSet {
    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn members(self) -> Vec<usize> {
        bits(self.0).map(|i| i + 1).collect()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

/// `(L_x, U_x)` for a 1-based element.
pub fn strict_down_up(p: &Poset, x: usize) -> (DownSet, UpSet) {
    (p.principal_down(x), UpSet(p.principal_up_mask(x)))
}

/// Unordered pairs `(x, y)`, `x < y`, with identical strict lower and upper
/// sets.
pub fn twin_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if p.down_mask(x) == p.down_mask(y) && p.up_mask(x) == p.up_mask(y) {
                out.push((x + 1, y + 1));
            }
        }
    }
    out
}

/// Equal strict lower sets, and both upper-set differences totally ordered.
fn almost_twin_in(p: &Poset, x: usize, y: usize) -> bool {
    let (x, y) = (x - 1, y - 1);
    if p.down_mask(x) != p.down_mask(y) {
        return false;
    }
    let (ux, uy) = (p.up_mask(x), p.up_mask(y));
    p.mask_is_chain(ux & !uy) && p.mask_is_chain(uy & !ux)
}

/// Whether `(x, y)` is an almost twin pair: the lower-set and chain
/// conditions hold together either in `P` or in its dual.
pub fn is_almost_twin(p: &Poset, x: usize, y: usize) -> bool {
    x != y && (almost_twin_in(p, x, y) || almost_twin_in(&p.dual(), x, y))
}

/// All almost twin pairs `(x, y)` with `x < y`; twin pairs are included.
pub fn almost_twin_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let d = p.dual();
    let n = p.len();
    let mut out = Vec::new();
    for x in 1..=n {
        for y in x + 1..=n {
            if almost_twin_in(p, x, y) || almost_twin_in(&d, x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MorphismKind {
    Automorphism,
    AntiAutomorphism,
}

/// An order-preserving or order-reversing bijection of a poset onto itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub map: Permutation,
    pub kind: MorphismKind,
}

impl Morphism {
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.map.len())
            .filter(|&x| self.map.apply(x) == x)
            .collect()
    }

    /// Pairs `{x, y}` (with `x < y`) swapped by the map.
    pub fn two_cycles(&self) -> Vec<(usize, usize)> {
        (1..=self.map.len())
            .filter(|&x| {
                let y = self.map.apply(x);
                x < y && self.map.apply(y) == x
            })
            .map(|x| (x, self.map.apply(x)))
            .collect()
    }

    /// Checks the defining property against `p`.
    pub fn is_valid_for(&self, p: &Poset) -> bool {
        let n = p.len();
        (1..=n).all(|x| {
            (1..=n).all(|y| {
                let (fx, fy) = (self.map.apply(x), self.map.apply(y));
                match self.kind {
                    MorphismKind::Automorphism => p.less(x, y) == p.less(fx, fy),
                    MorphismKind::AntiAutomorphism => p.less(x, y) == p.less(fy, fx),
                }
            })
        })
    }
}

/// Every isomorphism `p -> q` as 0-based image vectors, in lexicographic
/// order. Candidates are pruned by (|strict down-set|, |strict up-set|).
fn isomorphisms(p: &Poset, q: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    let key = |s: &Poset, x: usize| (s.down_mask(x).count_ones(), s.up_mask(x).count_ones());
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| key(p, x) == key(q, y)).collect())
        .collect();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    search(p, q, &candidates, 0, 0, &mut image, &mut out);
    out
}

fn search(
    p: &Poset,
    q: &Poset,
    candidates: &[Vec<usize>],
    x: usize,
    used: u64,
    image: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = p.len();
    if x == n {
        out.push(image.clone());
        return;
    }
    for &y in &candidates[x] {
        if used & bit(y) != 0 {
            continue;
        }
        let consistent = (0..x).all(|a| {
            let fa = image[a];
            (p.up_mask(a) & bit(x) != 0) == (q.up_mask(fa) & bit(y) != 0)
                && (p.up_mask(x) & bit(a) != 0) == (q.up_mask(y) & bit(fa) != 0)
        });
        if consistent {
            image[x] = y;
            search(p, q, candidates, x + 1, used | bit(y), image, out);
        }
    }
    image[x] = usize::MAX;
}

fn guard(p: &Poset) -> Result<()> {
    if p.len() > MORPHISM_LIMIT {
        return Err(Error::Guard {
            what: "morphism search",
            n: p.len(),
            max: MORPHISM_LIMIT,
        });
    }
    Ok(())
}

fn to_morphisms(maps: Vec<Vec<usize>>, kind: MorphismKind) -> Vec<Morphism> {
    maps.into_iter()
        .map(|m| Morphism {
            map: Permutation::new(m.into_iter().map(|y| y + 1).collect()).expect("bijection"),
            kind,
        })
        .collect()
}

/// The full automorphism group, identity first.
pub fn automorphisms(p: &Poset) -> Result<Vec<Morphism>> {
    guard(p)?;
    Ok(to_morphisms(isomorphisms(p, p), MorphismKind::Automorphism))
}

/// All order-reversing bijections, i.e. isomorphisms onto the dual.
pub fn anti_automorphisms(p: &Poset) -> Result<Vec<Morphism>> {
    guard(p)?;
    Ok(to_morphisms(
        isomorphisms(p, &p.dual()),
        MorphismKind::AntiAutomorphism,
    ))
}

/// Pairs swapped by some automorphism, sorted.
pub fn two_cycle_automorphism_pairs(p: &Poset) -> Result<Vec<(usize, usize)>> {
    let set: BTreeSet<(usize, usize)> = automorphisms(p)?
        .iter()
        .flat_map(|m| m.two_cycles())
        .collect();
    Ok(set.into_iter().collect())
}

/// Pairs of distinct fixed points of some anti-automorphism, sorted.
pub fn anti_automorphism_fixed_pairs(p: &Poset) -> Result<Vec<(usize, usize)>> {
    let mut set = BTreeSet::new();
    for m in anti_automorphisms(p)? {
        let f = m.fixed_points();
        for (i, &u) in f.iter().enumerate() {
            for &v in &f[i + 1..] {
                set.insert((u, v));
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Inversions `(π_i, π_j)`, `i < j`, `π_i > π_j`, lying in no copy of 312 or
/// 231. Such an inversion is exactly one whose entries strictly between
/// positions `i` and `j` are precisely the values strictly between `π_j` and
/// `π_i`. Returned as `(larger, smaller)` in order of position `i`, then `j`.
pub fn inversion_pattern_pairs(pi: &Permutation) -> Vec<(usize, usize)> {
    let e = pi.entries();
    let n = e.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (big, small) = (e[i], e[j]);
            if big < small {
                continue;
            }
            let between = &e[i + 1..j];
            let fits =
                between.len() == big - small - 1 && between.iter().all(|&v| small < v && v < big);
            if fits {
                out.push((big, small));
            }
        }
    }
    out
}

/// Same set as [`inversion_pattern_pairs`], by scanning every third position
/// for a copy of 312 or 231 through the inversion.
pub fn inversion_pattern_pairs_by_scan(pi: &Permutation) -> Vec<(usize, usize)> {
    let e = pi.entries();
    let n = e.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if e[i] < e[j] {
                continue;
            }
            let in_copy = (0..n).filter(|&k| k != i && k != j).any(|k| {
                let mut pos = [i, j, k];
                pos.sort_unstable();
                let vals = pos.map(|t| e[t]);
                let pattern = standardize(&vals);
                pattern == [3, 1, 2] || pattern == [2, 3, 1]
            });
            if !in_copy {
                out.push((e[i], e[j]));
            }
        }
    }
    out
}

fn standardize(vals: &[usize; 3]) -> [usize; 3] {
    let mut out = [0; 3];
    for (i, &v) in vals.iter().enumerate() {
        out[i] = 1 + vals.iter().filter(|&&w| w < v).count();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Twin,
    AlmostTwin,
    #[serde(rename = "auto_2cycle")]
    Auto2cycle,
    AntiAutoFixedPair,
    InversionPatternPair,
}

impl CertificateKind {
    /// The balance level the certificate guarantees.
    pub fn bound(self) -> ExactRatio {
        match self {
            CertificateKind::AlmostTwin => ExactRatio::third(),
            _ => ExactRatio::half(),
        }
    }
}

/// Serialized as `{"kind":"twin","pair":[1,2],"bound":"1/2"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub kind: CertificateKind,
    pub pair: (usize, usize),
    pub bound: ExactRatio,
}

impl CertificateReport {
    pub fn new(kind: CertificateKind, pair: (usize, usize)) -> Self {
        CertificateReport {
            kind,
            pair,
            bound: kind.bound(),
        }
    }
}

/// Every certificate found for `p`. Inversion-pattern pairs are reported only
/// when the permutation that produced `p` is supplied.
pub fn certificates(p: &Poset, perm: Option<&Permutation>) -> Result<Vec<CertificateReport>> {
    use CertificateKind::*;
    let mut out = Vec::new();
    out.extend(
        twin_pairs(p)
            .into_iter()
            .map(|pr| CertificateReport::new(Twin, pr)),
    );
    out.extend(
        almost_twin_pairs(p)
            .into_iter()
            .map(|pr| CertificateReport::new(AlmostTwin, pr)),
    );
    if p.len() <= MORPHISM_LIMIT {
        out.extend(
            two_cycle_automorphism_pairs(p)?
                .into_iter()
                .map(|pr| CertificateReport::new(Auto2cycle, pr)),
        );
        out.extend(
            anti_automorphism_fixed_pairs(p)?
                .into_iter()
                .map(|pr| CertificateReport::new(AntiAutoFixedPair, pr)),
        );
    }
    if let Some(pi) = perm {
        out.extend(
            inversion_pattern_pairs(pi)
                .into_iter()
                .map(|pr| CertificateReport::new(InversionPatternPair, pr)),
        );
    }
    Ok(out)
}
