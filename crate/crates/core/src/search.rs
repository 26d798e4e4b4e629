//! Exhaustive search over small posets up to isomorphism.
//!
//! Classes are generated by adding a new maximal element above every
//! down-set of every class on one fewer element, then deduplicated by a
//! canonical code.
//!
//! The canonical code of a relabelled relation matrix is the bit string
//! that lists, for `k = 1..n` and `j < k`, the pair `rel[j][k], rel[k][j]`.
//! Every prefix of this string depends only on the first positions, so the
//! minimum over relabelings can be found by branch and bound. Relabelings
//! are restricted to those that sort elements by a refined invariant, which
//! is itself isomorphism-invariant, so the result is a canonical form.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extensions::{balance_from_stats, pair_matrix_with};
use crate::par::{self, Exec};
use crate::poset::{bit, bits, Permutation, Poset};
use crate::ratio::ExactRatio;

/// Default cap on `n` for the exhaustive searches.
pub const MAX_SEARCH_N: usize = 8;

/// Hard cap for canonical codes (`n(n-1)` bits must fit in a `u128`).
pub const MAX_CANONICAL_N: usize = 11;

/// A poset in canonical labelling together with its code.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalPoset {
    pub n: usize,
    pub code: u128,
    poset: Poset,
}

impl CanonicalPoset {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn relation_matrix(&self) -> Vec<Vec<bool>> {
        self.poset.relation_matrix()
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.poset.covers()
    }

    pub fn code_hex(&self) -> String {
        format!("{:x}", self.code)
    }
}

impl PartialOrd for CanonicalPoset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalPoset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.code).cmp(&(other.n, other.code))
    }
}

/// Iterated refinement of (height, |down|, |up|) by the multisets of
/// classes above and below. Returns a class rank per element.
fn refined_classes(p: &Poset) -> Vec<usize> {
    let n = p.len();
    let h = p.heights();
    let mut class: Vec<usize> = {
        let keys: Vec<_> = (0..n)
            .map(|x| (h[x], p.down_mask(x).count_ones(), p.up_mask(x).count_ones()))
            .collect();
        rank(&keys)
    };
    loop {
        let keys: Vec<_> = (0..n)
            .map(|x| {
                let mut below: Vec<usize> = bits(p.down_mask(x)).map(|y| class[y]).collect();
                let mut above: Vec<usize> = bits(p.up_mask(x)).map(|y| class[y]).collect();
                below.sort_unstable();
                above.sort_unstable();
                (class[x], below, above)
            })
            .collect();
        let next = rank(&keys);
        let before = class.iter().collect::<BTreeSet<_>>().len();
        let after = next.iter().collect::<BTreeSet<_>>().len();
        class = next;
        if after == before {
            return class;
        }
    }
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let sorted: BTreeSet<K> = keys.iter().cloned().collect();
    let index: BTreeMap<K, usize> = sorted
        .into_iter()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    keys.iter().map(|k| index[k]).collect()
}

struct Canonizer<'a> {
    p: &'a Poset,
    /// position -> class rank required at that position
    slot_class: Vec<usize>,
    class: Vec<usize>,
    total_bits: u32,
    best: Option<(u128, Vec<usize>)>,
}

impl Canonizer<'_> {
    /// Bits contributed when `x` takes position `order.len()`.
    fn shell(&self, order: &[usize], x: usize) -> u128 {
        let mut v = 0u128;
        for &j in order {
            v = (v << 2)
                | (((self.p.up_mask(j) & bit(x) != 0) as u128) << 1)
                | (self.p.up_mask(x) & bit(j) != 0) as u128;
        }
        v
    }

    fn go(&mut self, order: &mut Vec<usize>, used: u64, prefix: u128) {
        let n = self.p.len();
        let t = order.len();
        if t == n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, order.clone()));
            }
            return;
        }
        for x in 0..n {
            if used & bit(x) != 0 || self.class[x] != self.slot_class[t] {
                continue;
            }
            let next = if t == 0 {
                prefix
            } else {
                (prefix << (2 * t)) | self.shell(order, x)
            };
            if let Some((b, _)) = &self.best {
                let done_bits = (t * (t + 1)) as u32;
                if next > b >> (self.total_bits - done_bits) {
                    continue;
                }
            }
            order.push(x);
            self.go(order, used | bit(x), next);
            order.pop();
        }
    }
}

/// Canonical form of `p` (labels are dropped).
pub fn canonical_form(p: &Poset) -> Result<CanonicalPoset> {
    let n = p.len();
    if n > MAX_CANONICAL_N {
        return Err(Error::Guard {
            what: "canonical form",
            n,
            max: MAX_CANONICAL_N,
        });
    }
    let class = refined_classes(p);
    let mut slot_class = class.clone();
    slot_class.sort_unstable();
    let mut c = Canonizer {
        p,
        slot_class,
        class,
        total_bits: (n * n.saturating_sub(1)) as u32,
        best: None,
    };
    c.go(&mut Vec::with_capacity(n), 0, 0);
    let (code, order) = c.best.expect("at least one labelling");
    // element order[i] goes to position i
    let mut image = vec![0; n];
    for (pos, &x) in order.iter().enumerate() {
        image[x] = pos + 1;
    }
    let perm = Permutation::new(image).expect("bijection");
    let mut poset = p.relabel(&perm);
    poset = Poset::from_covers(n, &poset.covers()).expect("relabelled poset");
    Ok(CanonicalPoset { n, code, poset })
}

fn check_n(n: usize, max_n: usize) -> Result<()> {
    let cap = max_n.min(MAX_CANONICAL_N);
    if n > cap {
        return Err(Error::Guard {
            what: "poset enumeration (raise --max-n to allow more)",
            n,
            max: cap,
        });
    }
    Ok(())
}

/// One representative of every isomorphism class on `n` elements, sorted by
/// canonical code.
pub fn enumerate_posets(n: usize) -> Result<Vec<CanonicalPoset>> {
    enumerate_posets_with(n, Exec::default(), MAX_SEARCH_N)
}

pub fn enumerate_posets_with(n: usize, exec: Exec, max_n: usize) -> Result<Vec<CanonicalPoset>> {
    check_n(n, max_n)?;
    let mut level = vec![canonical_form(&Poset::antichain(0))?];
    for _ in 0..n {
        let candidates: Vec<(Poset, u64)> = level
            .iter()
            .flat_map(|c| {
                c.poset()
                    .down_sets()
                    .into_iter()
                    .map(move |d| (c.poset().clone(), d.mask()))
            })
            .collect();
        let extended = par::map_collect(exec, &candidates, |(p, d)| {
            let mut up: Vec<u64> = p.up_rows().to_vec();
            let new = up.len();
            for x in bits(*d) {
                up[x] |= bit(new);
            }
            up.push(0);
            canonical_form(&Poset::from_acyclic(up)).expect("within canonical cap")
        });
        let mut seen: BTreeMap<u128, CanonicalPoset> = BTreeMap::new();
        for c in extended {
            seen.entry(c.code).or_insert(c);
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}

/// Whether `p` is an ordinal sum of singletons and copies of `T`
/// (a 2-chain plus an isolated point). The ordinal summands are the
/// connected components of the incomparability graph.
pub fn is_linear_sum_of_singletons_and_t(p: &Poset) -> bool {
    let n = p.len();
    let full = p.full();
    let mut seen = 0u64;
    for start in 0..n {
        if seen & bit(start) != 0 {
            continue;
        }
        let mut comp = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0u64;
            for x in bits(frontier) {
                next |= full & !(p.up_mask(x) | p.down_mask(x) | bit(x));
            }
            frontier = next & !comp;
            comp |= next;
        }
        seen |= comp;
        let size = comp.count_ones();
        let relations: u32 = bits(comp).map(|x| (p.up_mask(x) & comp).count_ones()).sum();
        let ok = size == 1 || (size == 3 && relations == 1);
        if !ok {
            return false;
        }
    }
    true
}

/// Per-class scan result; also the JSON-lines record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub n: usize,
    pub code: String,
    pub covers: Vec<[usize; 2]>,
    pub delta: ExactRatio,
    pub width: usize,
}

/// Witness entry in a scan summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremal {
    pub delta: ExactRatio,
    pub covers: Vec<[usize; 2]>,
    pub code: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub total: usize,
    pub chain_count: usize,
    pub min_non_chain: Option<Extremal>,
    pub min_width_at_least_3: Option<Extremal>,
    /// δ value -> number of classes.
    pub histogram: BTreeMap<ExactRatio, usize>,
    /// Non-chains with δ < 1/3; expected empty.
    pub below_one_third: Vec<Extremal>,
    /// Every class with δ exactly 1/3.
    pub exactly_one_third: Vec<Extremal>,
    /// δ = 1/3 classes that are not ordinal sums of singletons and T.
    pub one_third_not_linear_sum: Vec<Extremal>,
}

fn record_for(c: &CanonicalPoset, exec: Exec) -> ClassRecord {
    let p = c.poset();
    let stats = pair_matrix_with(p, exec);
    let delta = balance_from_stats(p, &stats).delta;
    ClassRecord {
        n: c.n,
        code: c.code_hex(),
        covers: c.covers().into_iter().map(|(x, y)| [x, y]).collect(),
        delta,
        width: p.width(),
    }
}

fn summarize(n: usize, records: &[ClassRecord]) -> ScanReport {
    let third = ExactRatio::third();
    let mut rep = ScanReport {
        n,
        total: records.len(),
        chain_count: 0,
        min_non_chain: None,
        min_width_at_least_3: None,
        histogram: BTreeMap::new(),
        below_one_third: vec![],
        exactly_one_third: vec![],
        one_third_not_linear_sum: vec![],
    };
    let take_min = |slot: &mut Option<Extremal>, e: &Extremal| {
        let replace = match slot {
            None => true,
            Some(cur) => e.delta < cur.delta,
        };
        if replace {
            *slot = Some(e.clone());
        }
    };
    for r in records {
        *rep.histogram.entry(r.delta.clone()).or_default() += 1;
        if r.width == 1 {
            rep.chain_count += 1;
            continue;
        }
        let e = Extremal {
            delta: r.delta.clone(),
            covers: r.covers.clone(),
            code: r.code.clone(),
        };
        take_min(&mut rep.min_non_chain, &e);
        if r.width >= 3 {
            take_min(&mut rep.min_width_at_least_3, &e);
        }
        if r.delta < third {
            rep.below_one_third.push(e.clone());
        }
        if r.delta == third {
            let covers: Vec<(usize, usize)> = r.covers.iter().map(|c| (c[0], c[1])).collect();
            let p = Poset::from_covers(r.n, &covers).expect("record covers");
            if !is_linear_sum_of_singletons_and_t(&p) {
                rep.one_third_not_linear_sum.push(e.clone());
            }
            rep.exactly_one_third.push(e);
        }
    }
    rep
}

/// Computes δ for every class on `n` elements.
pub fn conjecture_scan(n: usize) -> Result<ScanReport> {
    conjecture_scan_with(n, Exec::default(), MAX_SEARCH_N)
}

pub fn conjecture_scan_with(n: usize, exec: Exec, max_n: usize) -> Result<ScanReport> {
    let classes = enumerate_posets_with(n, exec, max_n)?;
    let records = scan_records(&classes, exec);
    Ok(summarize(n, &records))
}

/// Parallel over classes; inner pair matrices run sequentially.
fn scan_records(classes: &[CanonicalPoset], exec: Exec) -> Vec<ClassRecord> {
    par::map_collect(exec, classes, |c| record_for(c, Exec::Sequential))
}

/// Scan that writes one JSON line per newly processed class to `out` and
/// records progress in a plain-text checkpoint (`<code> <delta> <width>` per
/// line). Classes already present in the checkpoint are not recomputed or
/// re-emitted, but they do count toward the returned summary.
pub fn conjecture_scan_resumable(
    n: usize,
    exec: Exec,
    max_n: usize,
    checkpoint: Option<&Path>,
    out: &mut dyn Write,
) -> Result<ScanReport> {
    let classes = enumerate_posets_with(n, exec, max_n)?;
    let mut done: HashMap<String, (ExactRatio, usize)> = HashMap::new();
    if let Some(path) = checkpoint {
        if path.exists() {
            let f = std::fs::File::open(path)?;
            for line in BufReader::new(f).lines() {
                let line = line?;
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 3 {
                    continue;
                }
                let delta: ExactRatio = parts[1].parse()?;
                let width: usize = parts[2]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad checkpoint line {line:?}")))?;
                done.insert(parts[0].to_string(), (delta, width));
            }
        }
    }
    let mut ckpt = match checkpoint {
        Some(path) => Some(
            std::fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)?,
        ),
        None => None,
    };
    let mut records = Vec::with_capacity(classes.len());
    let pending: Vec<CanonicalPoset> = classes
        .iter()
        .filter(|c| !done.contains_key(&c.code_hex()))
        .cloned()
        .collect();
    for c in &classes {
        if let Some((delta, width)) = done.get(&c.code_hex()) {
            records.push(ClassRecord {
                n,
                code: c.code_hex(),
                covers: c.covers().into_iter().map(|(x, y)| [x, y]).collect(),
                delta: delta.clone(),
                width: *width,
            });
        }
    }
    const CHUNK: usize = 256;
    for chunk in pending.chunks(CHUNK) {
        let fresh = scan_records(chunk, exec);
        for r in &fresh {
            serde_json::to_writer(&mut *out, r).map_err(|e| Error::Io(e.to_string()))?;
            out.write_all(b"\n")?;
            if let Some(f) = ckpt.as_mut() {
                writeln!(f, "{} {} {}", r.code, r.delta, r.width)?;
            }
        }
        if let Some(f) = ckpt.as_mut() {
            f.flush()?;
        }
        records.extend(fresh);
    }
    records.sort_by(|a, b| {
        u128::from_str_radix(&a.code, 16)
            .unwrap()
            .cmp(&u128::from_str_radix(&b.code, 16).unwrap())
    });
    Ok(summarize(n, &records))
}

/// Smallest δ over non-chain classes on `n` elements with width at least
/// `min_width`, with the first witness in code order.
pub fn min_delta_by_width(
    n: usize,
    min_width: usize,
) -> Result<Option<(ExactRatio, CanonicalPoset)>> {
    min_delta_by_width_with(n, min_width, Exec::default(), MAX_SEARCH_N)
}

pub fn min_delta_by_width_with(
    n: usize,
    min_width: usize,
    exec: Exec,
    max_n: usize,
) -> Result<Option<(ExactRatio, CanonicalPoset)>> {
    let classes: Vec<CanonicalPoset> = enumerate_posets_with(n, exec, max_n)?
        .into_iter()
        .filter(|c| {
            let w = c.poset().width();
            w >= 2 && w >= min_width
        })
        .collect();
    let records = scan_records(&classes, exec);
    let mut best: Option<(ExactRatio, CanonicalPoset)> = None;
    for (c, r) in classes.into_iter().zip(records) {
        let better = match &best {
            None => true,
            Some((d, _)) => r.delta < *d,
        };
        if better {
            best = Some((r.delta, c));
        }
    }
    Ok(best)
}
