//! Published example posets and shapes with their expected exact values.
//!
//! Everything a reproduction compares against lives here, so correcting a
//! transcribed diagram touches this file only.

use crate::error::Result;
use crate::poset::Poset;
use crate::ratio::ExactRatio;
use crate::tableaux::{Cell, Shape};

/// A poset given by its cover relations, with the values stated for it.
#[derive(Clone, Copy, Debug)]
pub struct FigurePoset {
    pub key: &'static str,
    pub caption: &'static str,
    pub n: usize,
    pub covers: &'static [(usize, usize)],
    /// Expected `e(P)`, when stated.
    pub extensions: Option<u64>,
    /// Expected `δ(P)` as `"p/q"`, when stated. Not necessarily reduced.
    pub delta: Option<&'static str>,
    /// Unlabelled drawing; the cover list is a geometric transcription.
    pub transcribed: bool,
}

impl FigurePoset {
    pub fn poset(&self) -> Result<Poset> {
        Poset::from_covers(self.n, self.covers)
    }

    pub fn expected_delta(&self) -> Option<ExactRatio> {
        self.delta
            .map(|d| d.parse().expect("figure table holds valid ratios"))
    }
}

pub const FIGURE_POSETS: &[FigurePoset] = &[
    FigurePoset {
        key: "fig1",
        caption: "six-element poset with its extension matrix",
        n: 6,
        covers: &[(1, 4), (4, 5), (2, 5), (2, 3), (1, 3), (3, 6)],
        extensions: Some(15),
        delta: Some("7/15"),
        transcribed: false,
    },
    FigurePoset {
        key: "fig2-T",
        caption: "T: a two-element chain beside a point",
        n: 3,
        covers: &[(1, 2)],
        extensions: Some(3),
        delta: Some("1/3"),
        transcribed: false,
    },
    FigurePoset {
        key: "fig4-P",
        caption: "P with a non-trivial automorphism",
        n: 5,
        covers: &[(1, 3), (2, 3), (3, 4), (3, 5)],
        extensions: None,
        delta: Some("1/2"),
        transcribed: false,
    },
    FigurePoset {
        key: "fig4-Q",
        caption: "Q with trivial automorphism group",
        n: 6,
        covers: &[(1, 3), (2, 3), (2, 4), (3, 5), (3, 6), (4, 6)],
        extensions: Some(12),
        delta: Some("1/2"),
        transcribed: false,
    },
    FigurePoset {
        key: "fig5",
        caption: "nine-element poset with an anti-automorphism",
        n: 9,
        covers: &[
            (3, 6),
            (6, 9),
            (3, 8),
            (5, 8),
            (2, 5),
            (2, 7),
            (4, 7),
            (1, 4),
            (1, 9),
        ],
        extensions: None,
        delta: Some("711/1431"),
        transcribed: false,
    },
    FigurePoset {
        key: "fig6-P",
        caption: "2<3<4 with 1 isolated; its ideal lattice is charted",
        n: 4,
        covers: &[(2, 3), (3, 4)],
        extensions: Some(4),
        delta: None,
        transcribed: false,
    },
    FigurePoset {
        key: "fig8-left",
        caption: "width-2 poset on 8 elements",
        n: 8,
        covers: &[
            (1, 3),
            (3, 5),
            (5, 7),
            (6, 7),
            (4, 6),
            (2, 4),
            (2, 3),
            (1, 8),
            (6, 8),
        ],
        extensions: None,
        delta: Some("16/45"),
        transcribed: true,
    },
    FigurePoset {
        key: "fig8-right",
        caption: "width-3 poset on 7 elements",
        n: 7,
        covers: &[
            (1, 2),
            (1, 5),
            (2, 4),
            (2, 7),
            (3, 4),
            (3, 7),
            (4, 6),
            (5, 6),
        ],
        extensions: None,
        delta: Some("14/39"),
        transcribed: true,
    },
    FigurePoset {
        key: "fig11-A",
        caption: "A",
        n: 9,
        covers: &[
            (1, 2),
            (2, 7),
            (7, 8),
            (8, 9),
            (1, 4),
            (3, 4),
            (4, 5),
            (5, 6),
            (5, 9),
        ],
        extensions: None,
        delta: Some("6/17"),
        transcribed: true,
    },
    FigurePoset {
        key: "fig11-B",
        caption: "B",
        n: 11,
        covers: &[
            (1, 2),
            (1, 5),
            (3, 5),
            (5, 6),
            (5, 7),
            (2, 6),
            (2, 4),
            (4, 7),
            (4, 8),
            (6, 8),
            (6, 9),
            (7, 9),
            (8, 10),
            (8, 11),
            (9, 11),
        ],
        extensions: None,
        delta: Some("60/171"),
        transcribed: true,
    },
    FigurePoset {
        key: "fig11-C",
        caption: "C",
        n: 10,
        covers: &[
            (1, 3),
            (2, 3),
            (2, 4),
            (3, 5),
            (4, 5),
            (4, 6),
            (3, 8),
            (6, 8),
            (6, 7),
            (5, 7),
            (7, 9),
            (8, 9),
            (8, 10),
        ],
        extensions: None,
        delta: Some("37/106"),
        transcribed: true,
    },
];

pub fn figure(key: &str) -> Option<&'static FigurePoset> {
    FIGURE_POSETS.iter().find(|f| f.key == key)
}

/// `e(P + xy)` for the six-element poset, row `x`, column `y`.
pub const FIG1_MATRIX: [[u64; 6]; 6] = [
    [0, 9, 15, 15, 15, 15],
    [6, 0, 15, 12, 15, 15],
    [0, 0, 0, 6, 12, 15],
    [0, 3, 9, 0, 15, 13],
    [0, 0, 3, 0, 0, 8],
    [0, 0, 0, 2, 7, 0],
];

pub const FIG1_WITNESS: (usize, usize) = (5, 6);

pub const FIG1_WORDS: [&str; 15] = [
    "123456", "123465", "123645", "124356", "124365", "124536", "142356", "142365", "142536",
    "213456", "213465", "213645", "214356", "214365", "214536",
];

/// In Q, adding `3 < 4` leaves this many extensions.
pub const FIG4_Q_PLUS_34: (usize, usize, u64) = (3, 4, 6);

/// Extensions of the ideal lattice of `fig6-P`.
pub const FIG6_JP_EXTENSIONS: u64 = 14;

/// `e(J(P) + IJ)` for pairs of ideals, by label.
pub const FIG6_JP_CHART: [(&str, &str, u64); 6] = [
    ("{1}", "{2}", 5),
    ("{1}", "{2,3}", 10),
    ("{1}", "{2,3,4}", 13),
    ("{1,2}", "{2,3}", 4),
    ("{1,2}", "{2,3,4}", 10),
    ("{1,2,3}", "{2,3,4}", 5),
];

pub const FIG7_SHAPE: [usize; 3] = [4, 4, 2];
pub const FIG7_HOOKS: [&[usize]; 3] = [&[6, 5, 3, 2], &[5, 4, 2, 1], &[2, 1]];
pub const FIG7_SYT: u64 = 252;

pub const FIG9_PERMUTATION: &str = "41325";
pub const FIG9_COVERS: [(usize, usize); 5] = [(1, 2), (1, 3), (2, 5), (3, 5), (4, 5)];
/// The unique pair flagged by the inversion-pattern test, larger value first.
pub const FIG9_INVERSION_PAIRS: [(usize, usize); 1] = [(3, 2)];

/// A diagram with the almost twin cells marked in its drawing.
#[derive(Clone, Copy, Debug)]
pub struct FigureShape {
    pub key: &'static str,
    pub outer: &'static [usize],
    pub inner: &'static [usize],
    pub shifted: bool,
    /// `((row, col), (row, col))`.
    pub pair: ((usize, usize), (usize, usize)),
}

impl FigureShape {
    pub fn shape(&self) -> Result<Shape> {
        Shape::new(self.outer.to_vec(), self.inner.to_vec(), self.shifted)
    }

    pub fn expected_pair(&self) -> (Cell, Cell) {
        let ((a, b), (c, d)) = self.pair;
        (Cell::new(a, b), Cell::new(c, d))
    }
}

pub const FIGURE_SHAPES: &[FigureShape] = &[
    FigureShape {
        key: "fig12",
        outer: &[9, 7, 7, 5, 5, 5, 5],
        inner: &[6, 5, 3, 3, 3, 2],
        shifted: false,
        pair: ((1, 7), (2, 6)),
    },
    FigureShape {
        key: "fig13-left",
        outer: &[5, 5, 5, 4, 4, 4, 3],
        inner: &[4, 4, 3, 3, 2, 2],
        shifted: false,
        pair: ((1, 5), (3, 4)),
    },
    FigureShape {
        key: "fig13-right",
        outer: &[8, 6, 5, 3, 2],
        inner: &[6, 3],
        shifted: true,
        pair: ((2, 5), (3, 3)),
    },
];

/// Ranges for the rectangle identities: `(m range, n range)`.
pub const LEMMA_IDENTITY_RANGE: ((usize, usize), (usize, usize)) = ((1, 4), (3, 6));
pub const LEMMA_BOUNDS_RANGE: ((usize, usize), (usize, usize)) = ((3, 6), (4, 8));
pub const RECTANGLE_RANGE: ((usize, usize), (usize, usize)) = ((3, 4), (4, 5));

/// Largest diagram in the almost-twin sweep.
pub const SHAPE_SWEEP_CELLS: usize = 9;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_well_formed() {
        for f in FIGURE_POSETS {
            let p = f.poset().unwrap();
            assert_eq!(p.len(), f.n, "{}", f.key);
            // Each listed pair is a cover, so the list is its own reduction.
            let mut listed = f.covers.to_vec();
            listed.sort();
            assert_eq!(p.covers(), listed, "{}", f.key);
            let _ = f.expected_delta();
        }
        for s in FIGURE_SHAPES {
            let shape = s.shape().unwrap();
            let (a, b) = s.expected_pair();
            assert!(shape.contains(a) && shape.contains(b), "{}", s.key);
        }
        assert!(figure("fig5").is_some());
        assert!(figure("nope").is_none());
    }
}
