//! Young diagrams (straight, shifted, skew, shifted skew), hook lengths,
//! standard Young tableaux and the almost-twin pair finder for diagram
//! posets.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extensions::prob_before;
use crate::poset::{Permutation, Poset, MAX_ELEMENTS};
use crate::ratio::ExactRatio;
use crate::structure::{almost_twin_pairs, is_almost_twin};

/// A box in row `row`, column `col` (both 1-based). In shifted diagrams row
/// `i` begins at column `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The diagram `outer / inner`, optionally shifted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    outer: Vec<usize>,
    inner: Vec<usize>,
    shifted: bool,
}

fn strip_zeros(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl Shape {
    pub fn new(outer: Vec<usize>, inner: Vec<usize>, shifted: bool) -> Result<Shape> {
        let outer = strip_zeros(outer);
        let inner = strip_zeros(inner);
        let bad = |m: String| Err(Error::InvalidShape(m));
        let decreasing = |v: &[usize]| {
            v.windows(2)
                .all(|w| if shifted { w[0] > w[1] } else { w[0] >= w[1] })
        };
        if outer.contains(&0) || !decreasing(&outer) {
            return bad(format!(
                "outer {outer:?} must be {} decreasing and positive",
                if shifted { "strictly" } else { "weakly" }
            ));
        }
        if !decreasing(&inner) {
            return bad(format!("inner {inner:?} is not a valid partition"));
        }
        if inner.len() > outer.len() || inner.iter().zip(&outer).any(|(m, l)| m > l) {
            return bad(format!("inner {inner:?} does not fit inside {outer:?}"));
        }
        Ok(Shape {
            outer,
            inner,
            shifted,
        })
    }

    pub fn straight(parts: &[usize]) -> Result<Shape> {
        Shape::new(parts.to_vec(), vec![], false)
    }

    pub fn shifted(parts: &[usize]) -> Result<Shape> {
        Shape::new(parts.to_vec(), vec![], true)
    }

    pub fn skew(outer: &[usize], inner: &[usize]) -> Result<Shape> {
        Shape::new(outer.to_vec(), inner.to_vec(), false)
    }

    pub fn shifted_skew(outer: &[usize], inner: &[usize]) -> Result<Shape> {
        Shape::new(outer.to_vec(), inner.to_vec(), true)
    }

    /// Parses `4,4,2` or `4,2,2,1/2,1`.
    pub fn parse(s: &str, shifted: bool) -> Result<Shape> {
        let list = |t: &str| -> Result<Vec<usize>> {
            let t = t.trim();
            if t.is_empty() {
                return Ok(vec![]);
            }
            t.split(',')
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}")))
                })
                .collect()
        };
        match s.split_once('/') {
            Some((o, i)) => Shape::new(list(o)?, list(i)?, shifted),
            None => Shape::new(list(s)?, vec![], shifted),
        }
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn is_shifted(&self) -> bool {
        self.shifted
    }

    pub fn is_skew(&self) -> bool {
        !self.inner.is_empty()
    }

    pub fn is_straight(&self) -> bool {
        !self.shifted && self.inner.is_empty()
    }

    fn inner_part(&self, i: usize) -> usize {
        self.inner.get(i - 1).copied().unwrap_or(0)
    }

    /// Columns occupied by row `i` (1-based), possibly empty.
    pub fn row_span(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        let (lam, mu) = (self.outer[i - 1], self.inner_part(i));
        if self.shifted {
            (i + mu)..=(i + lam - 1)
        } else {
            (mu + 1)..=lam
        }
    }

    /// Cells in row-major order; poset element `k` is `cells()[k-1]`.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .flat_map(|i| self.row_span(i).map(move |j| Cell::new(i, j)))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.outer.iter().sum::<usize>() - self.inner.iter().sum::<usize>()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.row <= self.outer.len() && self.row_span(c.row).contains(&c.col)
    }

    /// 1-based poset element of a cell.
    pub fn element_of(&self, c: Cell) -> Option<usize> {
        self.cells().iter().position(|&d| d == c).map(|i| i + 1)
    }

    /// ASCII picture: `#` for cells, `.` for removed inner boxes.
    pub fn diagram(&self) -> String {
        let mut s = String::new();
        for i in 1..=self.outer.len() {
            let start = if self.shifted { i } else { 1 };
            s.push_str(&" ".repeat(start - 1));
            let span = self.row_span(i);
            let end = if self.shifted {
                i + self.outer[i - 1] - 1
            } else {
                self.outer[i - 1]
            };
            for j in start..=end {
                s.push(if span.contains(&j) { '#' } else { '.' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}", join(&self.outer))?;
        if !self.inner.is_empty() {
            write!(f, "/{}", join(&self.inner))?;
        }
        if self.shifted {
            write!(f, " (shifted)")?;
        }
        Ok(())
    }
}

impl FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Shape> {
        Shape::parse(s, false)
    }
}

/// Cells ordered componentwise: `(i,j) <= (i',j')` iff `i <= i'` and
/// `j <= j'`. Elements are numbered row-major and labelled `(i,j)`.
pub fn shape_to_poset(s: &Shape) -> Result<Poset> {
    let cells = s.cells();
    if cells.len() > MAX_ELEMENTS {
        return Err(Error::TooLarge {
            n: cells.len(),
            max: MAX_ELEMENTS,
        });
    }
    let p = Poset::from_fn(cells.len(), |a, b| {
        let (x, y) = (cells[a], cells[b]);
        x != y && x.row <= y.row && x.col <= y.col
    })?;
    Ok(p.with_labels(cells.iter().map(|c| c.to_string()).collect()))
}

fn require_straight(s: &Shape) -> Result<()> {
    if !s.is_straight() {
        return Err(Error::Unsupported(format!(
            "{s} is skew or shifted; count its tableaux with count_extensions(shape_to_poset(..))"
        )));
    }
    Ok(())
}

/// Hook length of every cell of a straight shape, row by row.
pub fn hook_lengths(s: &Shape) -> Result<Vec<Vec<usize>>> {
    require_straight(s)?;
    let lam = s.outer();
    let conj: Vec<usize> = (1..=lam.first().copied().unwrap_or(0))
        .map(|j| lam.iter().filter(|&&p| p >= j).count())
        .collect();
    Ok(lam
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            (1..=row)
                .map(|j| (row - j) + (conj[j - 1] - (i + 1)) + 1)
                .collect()
        })
        .collect())
}

/// Number of standard Young tableaux of a straight shape,
/// `n! / ∏ hook lengths`.
pub fn syt_count(s: &Shape) -> Result<BigUint> {
    let hooks = hook_lengths(s)?;
    let n = s.size();
    let fact: BigUint = (1..=n as u64).map(BigUint::from).product();
    let prod: BigUint = hooks
        .iter()
        .flatten()
        .map(|&h| BigUint::from(h as u64))
        .product();
    let (q, r) = fact.div_rem(&prod);
    assert!(r.is_zero(), "hook product must divide n!");
    Ok(q)
}

/// `(n-1)(m+1) / (2(mn-1))`, which equals `f^(n^(m-1), n-2) / f^(n^m)`.
pub fn lemma_ratio(m: usize, n: usize) -> Result<ExactRatio> {
    if m < 1 || n < 3 {
        return Err(Error::Unsupported(format!(
            "ratio needs m >= 1 and n >= 3, got m={m}, n={n}"
        )));
    }
    Ok(ExactRatio::new(
        ((n - 1) * (m + 1)) as u64,
        (2 * (m * n - 1)) as u64,
    ))
}

/// The shape `(n^(m-1), n-2)`.
pub fn lemma_shape(m: usize, n: usize) -> Result<Shape> {
    let mut parts = vec![n; m - 1];
    parts.push(n - 2);
    Shape::straight(&parts)
}

/// Cells `a = (1,2)`, `b = (2,1)` of the `m × n` rectangle and the exact
/// probability that `a` precedes `b`.
pub fn rectangle_balance_pair(m: usize, n: usize) -> Result<((Cell, Cell), ExactRatio)> {
    if m < 2 || n < 2 {
        return Err(Error::Unsupported(format!(
            "rectangle needs m, n >= 2, got {m} x {n}"
        )));
    }
    let shape = Shape::straight(&vec![n; m])?;
    let p = shape_to_poset(&shape)?;
    let (a, b) = (Cell::new(1, 2), Cell::new(2, 1));
    let pr = prob_before(
        &p,
        shape.element_of(a).unwrap(),
        shape.element_of(b).unwrap(),
    )?;
    Ok(((a, b), pr))
}

/// Which branch of the diagram analysis produced a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeCase {
    Straight,
    ShiftedStraight,
    /// Several components, each a chain: their minimal cells.
    ChainComponents,
    CaseI,
    #[serde(rename = "case_ii")]
    CaseII,
    #[serde(rename = "case_iii")]
    CaseIII,
    #[serde(rename = "case_iv")]
    CaseIV,
    CaseV,
    ShiftedCaseI,
    #[serde(rename = "shifted_case_ii")]
    ShiftedCaseII,
    ShiftedCaseV,
    ShiftedLowerRows,
    ShiftedLastInnerRow,
    /// No case produced a valid pair; found by checking every pair.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlmostTwinChoice {
    pub pair: (Cell, Cell),
    pub case: ShapeCase,
}

/// Row intervals of a set of cells, keyed by absolute row.
#[derive(Clone, Debug)]
struct Rows {
    first_row: usize,
    spans: Vec<(usize, usize)>,
}

impl Rows {
    fn from_cells(cells: &[Cell]) -> Rows {
        let first_row = cells.iter().map(|c| c.row).min().unwrap();
        let last_row = cells.iter().map(|c| c.row).max().unwrap();
        let spans = (first_row..=last_row)
            .map(|r| {
                let cols: Vec<usize> = cells.iter().filter(|c| c.row == r).map(|c| c.col).collect();
                (*cols.iter().min().unwrap(), *cols.iter().max().unwrap())
            })
            .collect();
        Rows { first_row, spans }
    }

    fn left_justified(&self) -> bool {
        self.spans
            .windows(2)
            .all(|w| w[1].0 <= w[0].0 && w[1].1 <= w[0].1)
    }

    fn contains(&self, c: Cell) -> bool {
        c.row >= self.first_row && c.row < self.first_row + self.spans.len() && {
            let (a, b) = self.spans[c.row - self.first_row];
            a <= c.col && c.col <= b
        }
    }
}

/// Connected components under edge adjacency, each sorted row-major, in
/// order of their first cell.
fn components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let mut seen = vec![false; cells.len()];
    let mut out = Vec::new();
    for s in 0..cells.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = vec![];
        while let Some(i) = stack.pop() {
            comp.push(cells[i]);
            for (j, d) in cells.iter().enumerate() {
                let c = cells[i];
                if !seen[j] && c.row.abs_diff(d.row) + c.col.abs_diff(d.col) == 1 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

fn cells_form_chain(cells: &[Cell]) -> bool {
    cells.iter().all(|a| {
        cells
            .iter()
            .all(|b| (a.row <= b.row && a.col <= b.col) || (b.row <= a.row && b.col <= a.col))
    })
}

/// An almost twin pair of cells in the diagram poset, chosen by the case
/// analysis for diagrams:
///
/// * straight left-justified: `(1,2), (2,1)`; straight shifted: `(1,3), (2,2)`;
/// * disconnected: a pair from the first non-chain component, or the least
///   cells of two components when every component is a chain;
/// * connected skew, left-justified: the first of cases (i)–(v);
/// * connected skew, shifted: cases (i), (ii), (v) on the rows carrying the
///   inner shape, then the subcases on the last inner part.
///
/// Every candidate is checked against the definition. Some shifted skew
/// diagrams slip through the case analysis (for instance `3,2,1/1`, where
/// the last inner part is 1, and `5,4,2,1/3,2`, where a cell of the row above
/// sits over the chosen cell); for those the first almost twin pair in cell
/// order is returned with [`ShapeCase::Exhaustive`].
pub fn find_almost_twin_in_shape(s: &Shape) -> Result<AlmostTwinChoice> {
    let cells = s.cells();
    if cells_form_chain(&cells) {
        return Err(Error::Chain);
    }
    let comps = components(&cells);
    let by_case = if comps.len() > 1 {
        match comps.iter().find(|c| !cells_form_chain(c)) {
            Some(c) => connected_pair(c, s),
            None => Some(AlmostTwinChoice {
                pair: (comps[0][0], comps[1][0]),
                case: ShapeCase::ChainComponents,
            }),
        }
    } else {
        connected_pair(&cells, s)
    };
    let p = shape_to_poset(s)?;
    let element = |c: Cell| s.element_of(c).expect("candidate cells lie in the diagram");
    if let Some(choice) = by_case {
        if is_almost_twin(&p, element(choice.pair.0), element(choice.pair.1)) {
            return Ok(choice);
        }
    }
    almost_twin_pairs(&p)
        .first()
        .map(|&(x, y)| AlmostTwinChoice {
            pair: (cells[x - 1], cells[y - 1]),
            case: ShapeCase::Exhaustive,
        })
        .ok_or_else(|| Error::NoCaseApplies(s.to_string()))
}

fn connected_pair(cells: &[Cell], shape: &Shape) -> Option<AlmostTwinChoice> {
    let rows = Rows::from_cells(cells);
    if rows.left_justified() {
        left_justified_pair(&rows)
    } else {
        debug_assert!(shape.is_shifted());
        shifted_pair(&rows)
    }
}

/// `mu[i]` for `i` in `0..=l+1` with the conventions `mu[0] = lambda_1`
/// and `mu[l+1] = 0`; rows are local and 1-based.
struct LocalSkew {
    lam: Vec<usize>,
    mu: Vec<usize>,
    k: usize,
    l: usize,
}

impl LocalSkew {
    fn mu_at(&self, i: usize) -> usize {
        if i == 0 {
            self.lam[0]
        } else {
            self.mu.get(i - 1).copied().unwrap_or(0)
        }
    }
}

/// Cases for a connected left-justified skew diagram. Coordinates are
/// translated so the lowest row starts in column 1, which removes empty
/// columns on the left.
fn left_justified_pair(rows: &Rows) -> Option<AlmostTwinChoice> {
    let col0 = rows.spans.iter().map(|s| s.0).min().unwrap() - 1;
    let row0 = rows.first_row - 1;
    let lam: Vec<usize> = rows.spans.iter().map(|s| s.1 - col0).collect();
    let mu: Vec<usize> = strip_zeros(rows.spans.iter().map(|s| s.0 - 1 - col0).collect());
    let local = LocalSkew {
        k: lam.len(),
        l: mu.len(),
        lam,
        mu,
    };
    let back = |c: Cell| Cell::new(c.row + row0, c.col + col0);
    let exists = |c: Cell| rows.contains(back(c));
    let found = |a: Cell, b: Cell, case| {
        (exists(a) && exists(b)).then(|| AlmostTwinChoice {
            pair: (back(a), back(b)),
            case,
        })
    };
    if local.l == 0 {
        return found(Cell::new(1, 2), Cell::new(2, 1), ShapeCase::Straight);
    }
    left_cases(&local, &found, local.l, true)
}

/// Cases (i)–(v). `limit_i` bounds the row index used by cases (i) and (ii);
/// `bottom` enables (iii) and (iv), which look below the inner shape.
fn left_cases(
    s: &LocalSkew,
    found: &dyn Fn(Cell, Cell, ShapeCase) -> Option<AlmostTwinChoice>,
    limit_i: usize,
    bottom: bool,
) -> Option<AlmostTwinChoice> {
    let (k, l) = (s.k, s.l);
    let mu = |i: usize| s.mu_at(i);
    let tag = |plain: ShapeCase, shifted: ShapeCase| if bottom { plain } else { shifted };
    // (i) mu_{i-1} - 1 >= mu_i = mu_{i+1} + 1
    for i in 1..=limit_i {
        if mu(i - 1) > mu(i) && mu(i) == mu(i + 1) + 1 {
            let a = Cell::new(i, mu(i) + 1);
            let b = Cell::new(i + 1, mu(i + 1) + 1);
            if let Some(r) = found(a, b, tag(ShapeCase::CaseI, ShapeCase::ShiftedCaseI)) {
                return Some(r);
            }
        }
    }
    // (ii) mu_{i-1} - 2 >= mu_i = mu_{i+1}, i in [l-1]
    for i in 1..limit_i.min(l) {
        if mu(i - 1) >= mu(i) + 2 && mu(i) == mu(i + 1) {
            let a = Cell::new(i, mu(i) + 2);
            let b = Cell::new(i + 1, mu(i + 1) + 1);
            if let Some(r) = found(a, b, tag(ShapeCase::CaseII, ShapeCase::ShiftedCaseII)) {
                return Some(r);
            }
        }
    }
    if bottom {
        // (iii) k = l + 1 and mu_{l-1} - 1 >= mu_l
        if k == l + 1 && mu(l - 1) > mu(l) {
            if let Some(r) = found(
                Cell::new(l, mu(l) + 1),
                Cell::new(l + 1, 1),
                ShapeCase::CaseIII,
            ) {
                return Some(r);
            }
        }
        // (iv) k >= l + 2 and mu_l >= 2
        if k >= l + 2 && mu(l) >= 2 {
            if let Some(r) = found(Cell::new(l + 1, 2), Cell::new(l + 2, 1), ShapeCase::CaseIV) {
                return Some(r);
            }
        }
    }
    // (v) mu = (s^m1, (s-1)^m2, ..., (s-p+1)^mp), every m_i >= 2, lambda_1 = mu_1 + 1
    let runs = run_lengths(&s.mu);
    let steps_by_one = s.mu.windows(2).all(|w| w[0] == w[1] || w[0] == w[1] + 1);
    if steps_by_one && runs.iter().all(|&m| m >= 2) && s.lam[0] == s.mu[0] + 1 {
        let m1 = runs[0];
        let a = Cell::new(1, mu(1) + 1);
        let b = Cell::new(m1 + 1, mu(m1 + 1) + 1);
        if let Some(r) = found(a, b, tag(ShapeCase::CaseV, ShapeCase::ShiftedCaseV)) {
            return Some(r);
        }
    }
    None
}

fn run_lengths(v: &[usize]) -> Vec<usize> {
    let mut runs: Vec<usize> = Vec::new();
    for (i, x) in v.iter().enumerate() {
        if i > 0 && v[i - 1] == *x {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
    }
    runs
}

/// Connected shifted skew diagram. Rows and columns are translated together
/// so that the diagonal is preserved and the top row is row 1.
fn shifted_pair(rows: &Rows) -> Option<AlmostTwinChoice> {
    let d = rows.first_row - 1;
    let back = |c: Cell| Cell::new(c.row + d, c.col + d);
    let exists = |c: Cell| rows.contains(back(c));
    let found = |a: Cell, b: Cell, case| {
        (exists(a) && exists(b)).then(|| AlmostTwinChoice {
            pair: (back(a), back(b)),
            case,
        })
    };
    // shifted parts: row i spans [i + mu_i, i + lam_i - 1]
    let spans: Vec<(usize, usize)> = rows.spans.iter().map(|&(a, b)| (a - d, b - d)).collect();
    let mu: Vec<usize> = strip_zeros(
        spans
            .iter()
            .enumerate()
            .map(|(i, s)| s.0 - (i + 1))
            .collect(),
    );
    let l = mu.len();
    if l == 0 {
        return found(Cell::new(1, 3), Cell::new(2, 2), ShapeCase::ShiftedStraight);
    }
    // rows 1..l read as a left-justified skew diagram in absolute columns
    let lam_l: Vec<usize> = spans[..l].iter().map(|s| s.1).collect();
    let mu_l: Vec<usize> = spans[..l].iter().map(|s| s.0 - 1).collect();
    let view = LocalSkew {
        k: l,
        l,
        lam: lam_l,
        mu: mu_l,
    };
    if let Some(r) = left_cases(&view, &found, l - 1, false) {
        return Some(r);
    }
    let last = mu[l - 1];
    if last > 3 {
        return found(
            Cell::new(l + 1, l + 3),
            Cell::new(l + 2, l + 2),
            ShapeCase::ShiftedLowerRows,
        );
    }
    if last == 2 || last == 3 {
        return found(
            Cell::new(l, last + l),
            Cell::new(l + 1, l + 1),
            ShapeCase::ShiftedLastInnerRow,
        );
    }
    None
}

/// Tableau entries row by row, aligned with [`Shape::row_span`].
pub type Tableau = Vec<Vec<usize>>;

/// Fills cell `x_k` of the extension `x_1 … x_N` with `k`.
pub fn tableau_from_extension(s: &Shape, ext: &Permutation) -> Tableau {
    let cells = s.cells();
    let mut entry = vec![0; cells.len()];
    for (k, &e) in ext.entries().iter().enumerate() {
        entry[e - 1] = k + 1;
    }
    let mut out: Tableau = (1..=s.outer().len())
        .map(|i| Vec::with_capacity(s.row_span(i).count()))
        .collect();
    for (c, v) in cells.iter().zip(entry) {
        out[c.row - 1].push(v);
    }
    out
}

/// The extension whose `k`-th element is the cell holding `k`.
pub fn extension_from_tableau(s: &Shape, t: &Tableau) -> Result<Permutation> {
    let cells = s.cells();
    let flat: Vec<usize> = t.iter().flatten().copied().collect();
    if flat.len() != cells.len() {
        return Err(Error::InvalidShape(format!(
            "tableau has {} entries, shape has {}",
            flat.len(),
            cells.len()
        )));
    }
    let mut ext = vec![0; cells.len()];
    for (i, &v) in flat.iter().enumerate() {
        if v == 0 || v > cells.len() {
            return Err(Error::InvalidShape(format!("entry {v} out of range")));
        }
        ext[v - 1] = i + 1;
    }
    Permutation::new(ext)
}

/// Rows and columns strictly increase.
pub fn is_standard(s: &Shape, t: &Tableau) -> bool {
    let cells = s.cells();
    let flat: Vec<usize> = t.iter().flatten().copied().collect();
    if flat.len() != cells.len() {
        return false;
    }
    let at = |c: Cell| cells.iter().position(|&d| d == c).map(|i| flat[i]);
    cells.iter().zip(&flat).all(|(&c, &v)| {
        at(Cell::new(c.row, c.col + 1)).is_none_or(|w| w > v)
            && at(Cell::new(c.row + 1, c.col)).is_none_or(|w| w > v)
    })
}

/// Every diagram with `1..=max_cells` cells, up to translation: straight and
/// skew left-justified diagrams with no empty row or column, plus shifted
/// and shifted skew diagrams with no empty row and no empty column between
/// their first and last occupied columns.
pub fn shape_corpus(max_cells: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    let mut rows = Vec::new();
    left_rows(max_cells, usize::MAX, usize::MAX, 0, &mut rows, &mut out);
    let mut rows = Vec::new();
    shifted_rows(
        max_cells,
        2 * max_cells + 1,
        usize::MAX,
        0,
        &mut rows,
        &mut out,
    );
    out
}

fn left_rows(
    max: usize,
    lam_cap: usize,
    mu_cap: usize,
    used: usize,
    rows: &mut Vec<(usize, usize)>,
    out: &mut Vec<Shape>,
) {
    if !rows.is_empty() && rows.last().unwrap().1 == 0 {
        let lam: Vec<usize> = rows.iter().map(|r| r.0).collect();
        let mu: Vec<usize> = rows.iter().map(|r| r.1).collect();
        let columns_filled = (1..=lam[0]).all(|c| rows.iter().any(|&(l, m)| m < c && c <= l));
        if columns_filled {
            out.push(Shape::new(lam, mu, false).expect("valid by construction"));
        }
    }
    for lam in 1..=lam_cap.min(max) {
        for mu in 0..lam.min(mu_cap.saturating_add(1)) {
            let cells = lam - mu;
            if used + cells > max {
                continue;
            }
            rows.push((lam, mu));
            left_rows(max, lam, mu, used + cells, rows, out);
            rows.pop();
        }
    }
}

fn shifted_rows(
    max: usize,
    lam_cap: usize,
    mu_cap: usize,
    used: usize,
    rows: &mut Vec<(usize, usize)>,
    out: &mut Vec<Shape>,
) {
    if !rows.is_empty() {
        let spans: Vec<(usize, usize)> = rows
            .iter()
            .enumerate()
            .map(|(i, &(l, m))| (i + 1 + m, i + l))
            .collect();
        let lo = spans.iter().map(|s| s.0).min().unwrap();
        let hi = spans.iter().map(|s| s.1).max().unwrap();
        if (lo..=hi).all(|c| spans.iter().any(|&(a, b)| a <= c && c <= b)) {
            let lam: Vec<usize> = rows.iter().map(|r| r.0).collect();
            let mu: Vec<usize> = rows.iter().map(|r| r.1).collect();
            if let Ok(s) = Shape::new(lam, mu, true) {
                out.push(s);
            }
        }
    }
    // strictly decreasing outer parts; inner parts strictly decreasing while positive
    for lam in 1..lam_cap.min(2 * max + 2) {
        let mu_hi = if mu_cap == usize::MAX {
            lam
        } else if mu_cap == 0 {
            1
        } else {
            mu_cap.min(lam)
        };
        for mu in 0..mu_hi {
            let cells = lam - mu;
            if used + cells > max {
                continue;
            }
            rows.push((lam, mu));
            shifted_rows(max, lam, mu, used + cells, rows, out);
            rows.pop();
        }
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}
