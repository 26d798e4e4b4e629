//! Posets built from permutations and classical lattice families.

use crate::error::{Error, Result};
use crate::poset::{bit, bits, Permutation, Poset, MAX_ELEMENTS};

/// The dimension-2 poset of `pi`: `x < y` iff `x < y` as integers and `x`
/// appears before `y` in `pi`.
pub fn from_permutation(pi: &Permutation) -> Poset {
    let n = pi.len();
    let pos = pi.inverse();
    Poset::from_fn(n, |x, y| x < y && pos.apply(x + 1) < pos.apply(y + 1))
        .expect("subset of the natural order is acyclic")
}

/// `C_m × C_n` with componentwise order. Elements are numbered row-major as
/// cells `(i, j)`, `1 <= i <= m`, `1 <= j <= n`.
pub fn chain_product(m: usize, n: usize) -> Result<Poset> {
    if m == 0 || n == 0 {
        return Err(Error::Unsupported("chain product needs m, n >= 1".into()));
    }
    let cells: Vec<(usize, usize)> = (1..=m).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    guard_size(cells.len())?;
    let p = Poset::from_fn(cells.len(), |a, b| {
        let (x, y) = (cells[a], cells[b]);
        x != y && x.0 <= y.0 && x.1 <= y.1
    })?;
    Ok(p.with_labels(cells.iter().map(|(i, j)| format!("({i},{j})")).collect()))
}

fn guard_size(n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        Err(Error::TooLarge {
            n,
            max: MAX_ELEMENTS,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn subset_label(mask: u64) -> String {
    let parts: Vec<String> = bits(mask).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Subsets of `[n]` ordered by inclusion, labelled `{1,3}` etc. Elements are
/// sorted by size, then by their sorted member list.
pub fn boolean_lattice(n: usize) -> Result<Poset> {
    if n == 0 {
        return Err(Error::Unsupported("boolean lattice needs n >= 1".into()));
    }
    if n > 6 {
        return Err(Error::TooLarge {
            n: 1 << n.min(63),
            max: MAX_ELEMENTS,
        });
    }
    let mut sets: Vec<u64> = (0..(1u64 << n)).collect();
    sets.sort_by_key(|&s| (s.count_ones(), bits(s).collect::<Vec<_>>()));
    let p = Poset::from_fn(sets.len(), |a, b| {
        sets[a] != sets[b] && sets[a] & !sets[b] == 0
    })?;
    Ok(p.with_labels(sets.iter().map(|&s| subset_label(s)).collect()))
}

/// All set partitions of `[n]`, each as block ids per point, in restricted
/// growth form (point 0 is in block 0; new blocks open in order).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            if i == 0 && b > 0 {
                break;
            }
            cur.push(b);
            rec(i + 1, n, cur, if i == 0 { 0 } else { max.max(b) }, out);
            cur.pop();
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), 0, &mut out);
    out
}

fn blocks_of(rgf: &[usize]) -> Vec<u64> {
    let k = rgf.iter().copied().max().map_or(0, |m| m + 1);
    let mut blocks = vec![0u64; k];
    for (i, &b) in rgf.iter().enumerate() {
        blocks[b] |= bit(i);
    }
    blocks
}

/// Label such as `13/2/4`: blocks ordered by least element.
pub fn partition_label(blocks: &[u64]) -> String {
    let mut bl: Vec<u64> = blocks.to_vec();
    bl.sort_by_key(|b| b.trailing_zeros());
    bl.iter()
        .map(|&b| bits(b).map(|i| (i + 1).to_string()).collect::<String>())
        .collect::<Vec<_>>()
        .join("/")
}

/// Set partitions of `[n]` ordered by refinement (`π <= σ` iff every block
/// of `π` lies inside a block of `σ`). Sorted by decreasing block count.
pub fn partition_lattice(n: usize) -> Result<Poset> {
    if n == 0 {
        return Err(Error::Unsupported("partition lattice needs n >= 1".into()));
    }
    if n > 5 {
        return Err(Error::Unsupported(format!(
            "partition lattice of [{n}] exceeds {MAX_ELEMENTS} elements"
        )));
    }
    let mut parts: Vec<Vec<u64>> = set_partitions(n).iter().map(|r| blocks_of(r)).collect();
    parts.sort_by_key(|b| std::cmp::Reverse(b.len()));
    let refines = |a: &[u64], b: &[u64]| a.iter().all(|&blk| b.iter().any(|&big| blk & !big == 0));
    let p = Poset::from_fn(parts.len(), |a, b| a != b && refines(&parts[a], &parts[b]))?;
    Ok(p.with_labels(parts.iter().map(|b| partition_label(b)).collect()))
}

pub fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// A subspace of `F_q^n` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Subspace {
    rref: Vec<Vec<u64>>,
    /// membership bitmap over all `q^n` vectors (encoded base q).
    members: Vec<bool>,
}

fn encode(v: &[u64], q: u64) -> usize {
    v.iter()
        .fold(0usize, |acc, &c| acc * q as usize + c as usize)
}

/// Enumerates RREF matrices of every rank by choosing pivot columns and
/// filling the free entries.
fn rref_bases(n: usize, q: u64) -> Vec<Vec<Vec<u64>>> {
    let mut out = vec![vec![]];
    for rank in 1..=n {
        for pivots in combinations(n, rank) {
            // free positions: row r, column c > pivot[r], c not a pivot
            let free: Vec<(usize, usize)> = (0..rank)
                .flat_map(|r| {
                    let pivots = pivots.clone();
                    (pivots[r] + 1..n)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let total = (q as usize).pow(free.len() as u32);
            for code in 0..total {
                let mut m = vec![vec![0u64; n]; rank];
                for (r, &p) in pivots.iter().enumerate() {
                    m[r][p] = 1;
                }
                let mut c = code;
                for &(r, col) in &free {
                    m[r][col] = (c % q as usize) as u64;
                    c /= q as usize;
                }
                out.push(m);
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn span(basis: &[Vec<u64>], n: usize, q: u64) -> Vec<bool> {
    let size = (q as usize).pow(n as u32);
    let mut members = vec![false; size];
    let combos = (q as usize).pow(basis.len() as u32);
    for code in 0..combos {
        let mut v = vec![0u64; n];
        let mut c = code;
        for row in basis {
            let coef = (c % q as usize) as u64;
            c /= q as usize;
            for (vi, &ri) in v.iter_mut().zip(row) {
                *vi = (*vi + coef * ri) % q;
            }
        }
        members[encode(&v, q)] = true;
    }
    members
}

/// Label listing the RREF rows, e.g. `<10,01>`; the zero subspace is `<>`.
fn subspace_label(rref: &[Vec<u64>]) -> String {
    let rows: Vec<String> = rref
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect::<String>())
        .collect();
    format!("<{}>", rows.join(","))
}

/// Label of `span(e_i)` in `F_q^n` (1-based `i`), matching the lattice labels.
pub fn coordinate_line_label(n: usize, i: usize) -> String {
    let mut row = vec![0u64; n];
    row[i - 1] = 1;
    subspace_label(&[row])
}

/// Subspaces of `F_q^n` (prime `q`) ordered by inclusion, sorted by dimension.
pub fn subspace_lattice(n: usize, q: u64) -> Result<Poset> {
    if n == 0 {
        return Err(Error::Unsupported("subspace lattice needs n >= 1".into()));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let count = gaussian_total(n, q);
    if count > MAX_ELEMENTS as u64 {
        return Err(Error::TooLarge {
            n: count as usize,
            max: MAX_ELEMENTS,
        });
    }
    let subspaces: Vec<Subspace> = rref_bases(n, q)
        .into_iter()
        .map(|rref| {
            let members = span(&rref, n, q);
            Subspace { rref, members }
        })
        .collect();
    let contains =
        |a: &Subspace, b: &Subspace| a.members.iter().zip(&b.members).all(|(&x, &y)| !x || y);
    let p = Poset::from_fn(subspaces.len(), |a, b| {
        a != b
            && subspaces[a].rref.len() < subspaces[b].rref.len()
            && contains(&subspaces[a], &subspaces[b])
    })?;
    Ok(p.with_labels(subspaces.iter().map(|s| subspace_label(&s.rref)).collect()))
}

/// Total number of subspaces of `F_q^n`, saturating.
fn gaussian_total(n: usize, q: u64) -> u64 {
    let mut total = 0u64;
    for k in 0..=n {
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k {
            num = num.saturating_mul((q as u128).saturating_pow((n - i) as u32) - 1);
            den = den.saturating_mul((q as u128).saturating_pow((i + 1) as u32) - 1);
        }
        total = total.saturating_add((num / den).min(u64::MAX as u128) as u64);
    }
    total
}

/// The lattice `J(P)` of down-sets of `P` ordered by inclusion. Labels list
/// the members, e.g. `{1,2}`.
pub fn ideal_lattice(p: &Poset) -> Result<Poset> {
    let ideals = p.down_sets();
    guard_size(ideals.len())?;
    let q = Poset::from_fn(ideals.len(), |a, b| {
        a != b && ideals[a].is_subset(ideals[b])
    })?;
    Ok(q.with_labels(ideals.iter().map(|d| subset_label(d.mask())).collect()))
}
