//! Piecewise closed-form tables for the landmark codes of FCS graphs,
//! transcribed exactly as printed in their source material, and an audit that
//! diffs every table entry against oracle codes computed from BFS distances.
//!
//! The transcription is deliberately uncritical: visibly odd expressions are
//! kept verbatim, pieces keep their printed ranges even where those overlap
//! or leave gaps, and entries flagged as untranscribable carry the raw text.
//! The oracle diff, not editorial judgment, decides what is correct.
//!
//! All codes are taken with respect to the landmark triple
//! (p1:1, r1:1, r2:2b-1), in that order; the order is pinned by the zero
//! positions of the P1, R1, R2 table rows.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::generators::{EdgeClass, Family, FcsParams, LabeledGraph, RungFamily, VertexLabel};
use crate::graph::{all_pairs_distances, Edge};
use crate::resolvability::{edge_code, vertex_code, Landmarks, Mode};

/// Linear form `a·A + b·B + c·C + d·D + k` over the graph parameters
/// (A, B, C) and a path index D.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Affine {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub k: i64,
}

impl Affine {
    pub fn eval(self, p: FcsParams, d: u32) -> i64 {
        self.a * p.a() as i64
            + self.b * p.b() as i64
            + self.c * p.c() as i64
            + self.d * d as i64
            + self.k
    }
}

const fn af(a: i64, b: i64, c: i64, d: i64, k: i64) -> Affine {
    Affine { a, b, c, d, k }
}

/// Range bound: affine in a, b, c only.
const fn bd(a: i64, b: i64, c: i64, k: i64) -> Affine {
    af(a, b, c, 0, k)
}

const fn num(k: i64) -> Affine {
    af(0, 0, 0, 0, k)
}

/// One predicted coordinate: the verbatim printed expression plus its affine
/// parse, absent for expressions recorded as untranscribable.
#[derive(Clone, Copy, Debug)]
pub struct CoordExpr {
    pub text: &'static str,
    pub expr: Option<Affine>,
}

const fn x(text: &'static str, a: i64, b: i64, c: i64, d: i64, k: i64) -> CoordExpr {
    CoordExpr {
        text,
        expr: Some(af(a, b, c, d, k)),
    }
}

const fn unparsed(text: &'static str) -> CoordExpr {
    CoordExpr { text, expr: None }
}

/// One piece of a piecewise family: a printed d-range and a coordinate
/// triple. Ranges are kept as printed; selection is first-match-wins, so
/// printed overlaps resolve to the earlier piece and printed gaps surface as
/// uncovered indices.
#[derive(Clone, Copy, Debug)]
pub struct Piece {
    pub range_text: &'static str,
    pub lo: Affine,
    pub hi: Affine,
    pub coords: [CoordExpr; 3],
}

impl Piece {
    pub fn covers(&self, p: FcsParams, d: u32) -> bool {
        self.lo.eval(p, 0) <= d as i64 && d as i64 <= self.hi.eval(p, 0)
    }
}

const fn pc(range_text: &'static str, lo: Affine, hi: Affine, coords: [CoordExpr; 3]) -> Piece {
    Piece {
        range_text,
        lo,
        hi,
        coords,
    }
}

/// A named piecewise table.
pub struct PieceTable {
    pub name: &'static str,
    pub pieces: &'static [Piece],
}

/// Vertex-code tables, one per family, in `Family::ALL` order.
pub static VERTEX_TABLES: [PieceTable; 18] = [
    PieceTable {
        name: "P1",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2c-d-1", 2, 0, 2, -1, -1),
                x("2b+2c-2", 0, 2, 2, 0, -2),
            ]),
            pc("2<=d<=2a-3", num(2), bd(2, 0, 0, -3), [
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2c-d-1", 2, 0, 2, -1, -1),
                x("2b+2c+d-5", 0, 2, 2, 1, -5),
            ]),
            pc("d=2a-2", bd(2, 0, 0, -2), bd(2, 0, 0, -2), [
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2c-d-1", 2, 0, 2, -1, -1),
                x("2a+2b+2c-9", 2, 2, 2, 0, -9),
            ]),
            pc("d=2a-1", bd(2, 0, 0, -1), bd(2, 0, 0, -1), [
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2c-d-1", 2, 0, 2, -1, -1),
                x("2a+2b+2c-8", 2, 2, 2, 0, -8),
            ]),
        ],
    },
    PieceTable {
        name: "P2",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("d", 0, 0, 0, 1, 0),
                x("2a+2b-d-2", 2, 2, 0, -1, -2),
                x("2b+2c-1", 0, 2, 2, 0, -1),
            ]),
            pc("2<=d<=2a-3", num(2), bd(2, 0, 0, -3), [
                x("d", 0, 0, 0, 1, 0),
                x("2a+2b-d-2", 2, 2, 0, -1, -2),
                x("2b+2c+d-4", 0, 2, 2, 1, -4),
            ]),
            pc("d=2a-2", bd(2, 0, 0, -2), bd(2, 0, 0, -2), [
                x("d", 0, 0, 0, 1, 0),
                x("2a+2b-d-2", 2, 2, 0, -1, -2),
                x("2a+2b+2c-8", 2, 2, 2, 0, -8),
            ]),
            pc("d=2a-1", bd(2, 0, 0, -1), bd(2, 0, 0, -1), [
                x("d", 0, 0, 0, 1, 0),
                x("2a+2b-d-2", 2, 2, 0, -1, -2),
                x("2a+2b+2c-7", 2, 2, 2, 0, -7),
            ]),
        ],
    },
    PieceTable {
        name: "Q1",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("2a+d-2", 2, 0, 0, 1, -2),
                x("2c-d", 0, 0, 2, -1, 0),
                x("2a+2b+2c-7", 2, 2, 2, 0, -7),
            ]),
            pc("d=2", num(2), num(2), [
                x("2a+d-2", 2, 0, 0, 1, -2),
                x("2c-d", 0, 0, 2, -1, 0),
                x("2a+2b+2c-8", 2, 2, 2, 0, -8),
            ]),
            pc("3<=d<=2c-2", num(3), bd(0, 0, 2, -2), [
                x("2a+d-2", 2, 0, 0, 1, -2),
                x("2c-d", 0, 0, 2, -1, 0),
                x("2a+2b+2c-d-4", 2, 2, 2, -1, -4),
            ]),
            pc("d=2c-1", bd(0, 0, 2, -1), bd(0, 0, 2, -1), [
                x("2a+d-2", 2, 0, 0, 1, -2),
                x("2c-d", 0, 0, 2, -1, 0),
                x("2a+2b-1", 2, 2, 0, 0, -1),
            ]),
        ],
    },
    PieceTable {
        name: "Q2",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("d", 0, 0, 0, 1, 0),
                x("2a+2c-1", 2, 0, 2, 0, -1),
                x("2b+2c-d-2", 0, 2, 2, -1, -2),
            ]),
            pc("2<=d<=2c-3", num(2), bd(0, 0, 2, -3), [
                x("d", 0, 0, 0, 1, 0),
                x("2a+2c+d-4", 2, 0, 2, 1, -4),
                x("2b+2c-d-2", 0, 2, 2, -1, -2),
            ]),
            pc("d=2c-2", bd(0, 0, 2, -2), bd(0, 0, 2, -2), [
                x("d", 0, 0, 0, 1, 0),
                x("2a+2b+2c-8", 2, 2, 2, 0, -8),
                x("2b+2c-d-2", 0, 2, 2, -1, -2),
            ]),
            pc("d=2c-1", bd(0, 0, 2, -1), bd(0, 0, 2, -1), [
                x("d", 0, 0, 0, 1, 0),
                x("2a+2b+2c-7", 2, 2, 2, 0, -7),
                x("2b+2c-d-2", 0, 2, 2, -1, -2),
            ]),
        ],
    },
    PieceTable {
        name: "R1",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("2a+2c-2", 2, 0, 2, 0, -2),
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2b-d-1", 2, 2, 0, -1, -1),
            ]),
            pc("2<=d<=2c-3", num(2), bd(0, 0, 2, -3), [
                x("2a+2c+d-5", 2, 0, 2, 1, -5),
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2b-d-1", 2, 2, 0, -1, -1),
            ]),
            pc("d=2b-2", bd(0, 2, 0, -2), bd(0, 2, 0, -2), [
                x("2a+2b+2c-9", 2, 2, 2, 0, -9),
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2b-d-1", 2, 2, 0, -1, -1),
            ]),
            pc("d=2b-1", bd(0, 2, 0, -1), bd(0, 2, 0, -1), [
                x("2a+2b+2c-8", 2, 2, 2, 0, -8),
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2b-d-1", 2, 2, 0, -1, -1),
            ]),
        ],
    },
    PieceTable {
        name: "R2",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+2b+2c-8", 2, 2, 2, 0, -8),
                x("2b-d-1", 0, 2, 0, -1, -1),
            ]),
            pc("d=2", num(2), num(2), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+2b+2c-9", 2, 2, 2, 0, -9),
                x("2b-d-1", 0, 2, 0, -1, -1),
            ]),
            pc("3<=d<=2b-2", num(3), bd(0, 2, 0, -2), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+2b+2c-d-5", 2, 2, 2, -1, -5),
                x("2b-d-1", 0, 2, 0, -1, -1),
            ]),
            pc("d=2b-1", bd(0, 2, 0, -1), bd(0, 2, 0, -1), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+2b-2", 2, 2, 0, 0, -2),
                x("2b-d-1", 0, 2, 0, -1, -1),
            ]),
        ],
    },
    PieceTable {
        name: "S1",
        pieces: &[
            pc("1<=d<=2a-5", num(1), bd(2, 0, 0, -5), [
                x("d+1", 0, 0, 0, 1, 1),
                x("2a+2c-d-3", 2, 0, 2, -1, -3),
                x("2b+2c+d-5", 0, 2, 2, 1, -5),
            ]),
            pc("d=2a-4", bd(2, 0, 0, -4), bd(2, 0, 0, -4), [
                x("d+1", 0, 0, 0, 1, 1),
                x("2a+2c-d-3", 2, 0, 2, -1, -3),
                x("2a+2b+2c-11", 2, 2, 2, 0, -11),
            ]),
            pc("d=2a-3", bd(2, 0, 0, -3), bd(2, 0, 0, -3), [
                x("d+1", 0, 0, 0, 1, 1),
                x("2a+2c-d-3", 2, 0, 2, -1, -3),
                x("2a+2b+2c-10", 2, 2, 2, 0, -10),
            ]),
        ],
    },
    PieceTable {
        name: "S2",
        pieces: &[
            pc("1<=d<=2a-5", num(1), bd(2, 0, 0, -5), [
                x("2b+2c+d-4", 0, 2, 2, 1, -4),
                x("2a+2b-d-4", 2, 2, 0, -1, -4),
                x("d+2", 0, 0, 0, 1, 2),
            ]),
            pc("d=2a-4", bd(2, 0, 0, -4), bd(2, 0, 0, -4), [
                x("2a+2b+2c-10", 2, 2, 2, 0, -10),
                x("2a+2b-d-4", 2, 2, 0, -1, -4),
                x("d+2", 0, 0, 0, 1, 2),
            ]),
            pc("d=2a-3", bd(2, 0, 0, -3), bd(2, 0, 0, -3), [
                x("2a+2b+2c-9", 2, 2, 2, 0, -9),
                x("2a+2b-d-4", 2, 2, 0, -1, -4),
                x("d+2", 0, 0, 0, 1, 2),
            ]),
        ],
    },
    PieceTable {
        name: "T1",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("2a+d-2", 2, 0, 0, 1, -2),
                x("2c-d", 0, 0, 2, -1, 0),
                x("2a+2b+2c-9", 2, 2, 2, 0, -9),
            ]),
            pc("d=2", num(2), num(2), [
                x("2a+d-2", 2, 0, 0, 1, -2),
                x("2c-d", 0, 0, 2, -1, 0),
                x("2a+2b+2c-10", 2, 2, 2, 0, -10),
            ]),
            pc("3<=d<=2c-3", num(3), bd(0, 0, 2, -3), [
                x("2a+d-2", 2, 0, 0, 1, -2),
                x("2c-d", 0, 0, 2, -1, 0),
                x("2a+2b+2c-d-6", 2, 2, 2, -1, -6),
            ]),
        ],
    },
    PieceTable {
        name: "T2",
        pieces: &[
            pc("1<=d<=2c-5", num(1), bd(0, 0, 2, -5), [
                x("d+2", 0, 0, 0, 1, 2),
                x("2a+2c+d-4", 2, 0, 2, 1, -4),
                x("2b+2c-d-4", 0, 2, 2, -1, -4),
            ]),
            pc("d=2c-4", bd(0, 0, 2, -4), bd(0, 0, 2, -4), [
                x("d+2", 0, 0, 0, 1, 2),
                x("2a+2b+2c-10", 2, 2, 2, 0, -10),
                x("2b+2c-d-4", 0, 2, 2, -1, -4),
            ]),
            pc("d=2c-3", bd(0, 0, 2, -3), bd(0, 0, 2, -3), [
                x("d+2", 0, 0, 0, 1, 2),
                x("2a+2b+2c-9", 2, 2, 2, 0, -9),
                x("2b+2c-d-4", 0, 2, 2, -1, -4),
            ]),
        ],
    },
    PieceTable {
        name: "U1",
        pieces: &[
            pc("1<=d<=2b-5", num(1), bd(0, 2, 0, -5), [
                x("2a+2c+d-5", 2, 0, 2, 1, -5),
                x("d+1", 0, 0, 0, 1, 1),
                x("2a+2b-d-3", 2, 2, 0, -1, -3),
            ]),
            pc("d=2b-4", bd(0, 2, 0, -4), bd(0, 2, 0, -4), [
                x("2a+2b+2c-11", 2, 2, 2, 0, -11),
                x("d+1", 0, 0, 0, 1, 1),
                x("2a+2b-d-3", 2, 2, 0, -1, -3),
            ]),
            pc("d=2b-3", bd(0, 2, 0, -3), bd(0, 2, 0, -3), [
                x("2a+2b+2c-10", 2, 2, 2, 0, -10),
                x("d+1", 0, 0, 0, 1, 1),
                x("2a+2b-d-3", 2, 2, 0, -1, -3),
            ]),
        ],
    },
    PieceTable {
        name: "U2",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+2b+2c-10", 2, 2, 2, 0, -10),
                x("2b-d-1", 0, 2, 0, -1, -1),
            ]),
            pc("d=2", num(2), num(2), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+2b+2c-11", 2, 2, 2, 0, -11),
                x("2b-d-1", 0, 2, 0, -1, -1),
            ]),
            pc("3<=d<=2b-3", num(3), bd(0, 2, 0, -3), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+2b+2c-d-7", 2, 2, 2, -1, -7),
                x("2b-d-1", 0, 2, 0, -1, -1),
            ]),
        ],
    },
    PieceTable {
        name: "P3",
        pieces: &[pc("1<=d<=2a-5", num(1), bd(2, 0, 0, -5), [
            x("2a+2c-d-6", 2, 0, 2, -1, -6),
            x("2a+2c+d-6", 2, 0, 2, 1, -6),
            x("2a+2b-d-4", 2, 2, 0, -1, -4),
        ])],
    },
    PieceTable {
        name: "Q3",
        pieces: &[pc("1<=d<=2c-5", num(1), bd(0, 0, 2, -5), [
            x("2a+2b+d-7", 2, 2, 0, 1, -7),
            x("2b+2c-d-7", 0, 2, 2, -1, -7),
            x("2a+2c-d-5", 2, 0, 2, -1, -5),
        ])],
    },
    PieceTable {
        name: "R3",
        pieces: &[pc("1<=d<=2b-5", num(1), bd(0, 2, 0, -5), [
            x("2a+2b-d-7", 2, 2, 0, -1, -7),
            x("2b+2c-d-5", 0, 2, 2, -1, -5),
            x("2a+2b+d-7", 2, 2, 0, 1, -7),
        ])],
    },
    PieceTable {
        name: "S3",
        pieces: &[pc("1<=d<=2a-5", num(1), bd(2, 0, 0, -5), [
            x("2a+2c-d-5", 2, 0, 2, -1, -5),
            x("2a+2c+d-7", 2, 0, 2, 1, -7),
            x("2a+2b-d-5", 2, 2, 0, -1, -5),
        ])],
    },
    PieceTable {
        name: "T3",
        pieces: &[pc("1<=d<=2c-5", num(1), bd(0, 0, 2, -5), [
            x("2a+2c+d-6", 2, 0, 2, 1, -6),
            x("2b+2c-d-6", 0, 2, 2, -1, -6),
            x("2a+2c-d-6", 2, 0, 2, -1, -6),
        ])],
    },
    PieceTable {
        name: "U3",
        pieces: &[pc("1<=d<=2b-5", num(1), bd(0, 2, 0, -5), [
            x("2a+2b-d-6", 2, 2, 0, -1, -6),
            x("2b+2c-d-6", 0, 2, 2, -1, -6),
            x("2a+2b+d-6", 2, 2, 0, 1, -6),
        ])],
    },
];

/// Edge-code tables for the eighteen path families, in `Family::ALL` order.
/// Edge d joins path vertices d and d+1.
pub static PATH_EDGE_TABLES: [PieceTable; 18] = [
    PieceTable {
        name: "P1",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2c-d-2", 2, 0, 2, -1, -2),
                x("2b+2-3", 0, 2, 0, 0, -1),
            ]),
            pc("2<=d<=2a-4", num(2), bd(2, 0, 0, -4), [
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2c-d-2", 2, 0, 2, -1, -2),
                x("2b+2c+d-5", 0, 2, 2, 1, -5),
            ]),
            pc("2a-3<=d<=2a-2", bd(2, 0, 0, -3), bd(2, 0, 0, -2), [
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2c-d-2", 2, 0, 2, -1, -2),
                x("2a+4b-8", 2, 4, 0, 0, -8),
            ]),
        ],
    },
    PieceTable {
        name: "P2",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("2b+2c-2", 0, 2, 2, 0, -2),
                x("2a+2b-d-1", 2, 2, 0, -1, -1),
                x("d", 0, 0, 0, 1, 0),
            ]),
            pc("2<=d<=2a-4", num(2), bd(2, 0, 0, -4), [
                x("2b+2c+d-4", 0, 2, 2, 1, -4),
                x("2a+2b-d-1", 2, 2, 0, -1, -1),
                x("d", 0, 0, 0, 1, 0),
            ]),
            pc("2a-3<=d<=2a-2", bd(2, 0, 0, -3), bd(2, 0, 0, -2), [
                x("2a+2b+2c-8", 2, 2, 2, 0, -8),
                x("2a+2b-d-1", 2, 2, 0, -1, -1),
                x("d", 0, 0, 0, 1, 0),
            ]),
        ],
    },
    PieceTable {
        name: "Q1",
        pieces: &[
            pc("1<=d<=2", num(1), num(2), [
                x("2a+d-2", 2, 0, 0, 1, -2),
                x("2c-d-1", 0, 0, 2, -1, -1),
                x("2a+2b+2c-8", 2, 2, 2, 0, -8),
            ]),
            pc("3<=d<=2c-3", num(3), bd(0, 0, 2, -3), [
                x("2a+d-2", 2, 0, 0, 1, -2),
                x("2c-d-1", 0, 0, 2, -1, -1),
                x("2a+2b+2c-d-5", 2, 2, 2, -1, -5),
            ]),
            pc("d=2c-2", bd(0, 0, 2, -2), bd(0, 0, 2, -2), [
                x("2a+d-2", 2, 0, 0, 1, -2),
                x("2c-d-1", 0, 0, 2, -1, -1),
                x("2a+2b-2", 2, 2, 0, 0, -2),
            ]),
        ],
    },
    PieceTable {
        name: "Q2",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("d", 0, 0, 0, 1, 0),
                x("2a+2c-2", 2, 0, 2, 0, -2),
                x("2b+2c-d-3", 0, 2, 2, -1, -3),
            ]),
            pc("2<=d<=2c-4", num(2), bd(0, 0, 2, -4), [
                x("d", 0, 0, 0, 1, 0),
                x("2a+2c+d-4", 2, 0, 2, 1, -4),
                x("2b+2c-d-3", 0, 2, 2, -1, -3),
            ]),
            pc("2c-3<=d<=2c-2", bd(0, 0, 2, -3), bd(0, 0, 2, -2), [
                x("d", 0, 0, 0, 1, 0),
                x("2a+2b+2c-8", 2, 2, 2, 0, -8),
                x("2b+2c-d-3", 0, 2, 2, -1, -3),
            ]),
        ],
    },
    PieceTable {
        name: "R1",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("2a+2c-3", 2, 0, 2, 0, -3),
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2b-d-1", 2, 2, 0, -1, -1),
            ]),
            pc("2<=d<=2b-4", num(2), bd(0, 2, 0, -4), [
                x("2a+2c+d-5", 2, 0, 2, 1, -5),
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2b-d-1", 2, 2, 0, -1, -1),
            ]),
            pc("2b-3<=d<=2b-2", bd(0, 2, 0, -3), bd(0, 2, 0, -2), [
                x("2a+2b+2c-9", 2, 2, 2, 0, -9),
                x("d-1", 0, 0, 0, 1, -1),
                x("2a+2b-d-1", 2, 2, 0, -1, -1),
            ]),
        ],
    },
    PieceTable {
        name: "R2",
        pieces: &[
            pc("1<=d<=2", num(1), num(2), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+2b+2c-9", 2, 2, 2, 0, -9),
                x("2b-d-2", 0, 2, 0, -1, -2),
            ]),
            pc("3<=d<=2b-3", num(3), bd(0, 2, 0, -3), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+4b-d-6", 2, 4, 0, -1, -6),
                x("2b-d-2", 0, 2, 0, -1, -2),
            ]),
            pc("d=2b-2", bd(0, 2, 0, -2), bd(0, 2, 0, -2), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+2b-3", 2, 2, 0, 0, -3),
                x("2b-d-2", 0, 2, 0, -1, -2),
            ]),
        ],
    },
    PieceTable {
        name: "S1",
        pieces: &[
            pc("1<=d<=2a-6", num(1), bd(2, 0, 0, -6), [
                x("d+1", 0, 0, 0, 1, 1),
                x("2a+2c-d-4", 2, 0, 2, -1, -4),
                x("2b+2c+d-5", 0, 2, 2, 1, -5),
            ]),
            pc("2a-5<=d<=2a-4", bd(2, 0, 0, -5), bd(2, 0, 0, -4), [
                x("d+1", 0, 0, 0, 1, 1),
                x("2a+2c-d-4", 2, 0, 2, -1, -4),
                x("2a+4b-11", 2, 4, 0, 0, -11),
            ]),
        ],
    },
    PieceTable {
        name: "S2",
        pieces: &[
            pc("1<=d<=2a-6", num(1), bd(2, 0, 0, -6), [
                x("2b+2c+d-4", 0, 2, 2, 1, -4),
                x("2a+2b-d-5", 2, 2, 0, -1, -5),
                x("d+2", 0, 0, 0, 1, 2),
            ]),
            pc("2a-5<=d<=2a-4", bd(2, 0, 0, -5), bd(2, 0, 0, -4), [
                x("2a+2b+2c-10", 2, 2, 2, 0, -10),
                x("2a+2b-d-5", 2, 2, 0, -1, -5),
                x("d+2", 0, 0, 0, 1, 2),
            ]),
        ],
    },
    PieceTable {
        name: "T1",
        pieces: &[
            pc("1<=d<=2", num(1), num(2), [
                x("2a+d", 2, 0, 0, 1, 0),
                x("2c-d-1", 0, 0, 2, -1, -1),
                x("2a+2b+2c-10", 2, 2, 2, 0, -10),
            ]),
            pc("3<=d<=2c-4", num(3), bd(0, 0, 2, -4), [
                x("2a+d", 2, 0, 0, 1, 0),
                x("2c-d-1", 0, 0, 2, -1, -1),
                x("2a+2b+2c-d-7", 2, 2, 2, -1, -7),
            ]),
        ],
    },
    PieceTable {
        name: "T2",
        pieces: &[
            pc("1<=d<=2b-6", num(1), bd(0, 2, 0, -6), [
                x("d+2", 0, 0, 0, 1, 2),
                x("2a+2c+d-4", 2, 0, 2, 1, -4),
                x("2b+2c-d-7", 0, 2, 2, -1, -7),
            ]),
            pc("2b-5<=d<=2c-4", bd(0, 2, 0, -5), bd(0, 0, 2, -4), [
                x("d+2", 0, 0, 0, 1, 2),
                x("2a+2b+2c-10", 2, 2, 2, 0, -10),
                x("2b+2c-d-7", 0, 2, 2, -1, -7),
            ]),
        ],
    },
    PieceTable {
        name: "U1",
        pieces: &[
            pc("1<=d<=2b-6", num(1), bd(0, 2, 0, -6), [
                x("2a+2c+d-5", 2, 0, 2, 1, -5),
                x("d+1", 0, 0, 0, 1, 1),
                x("2a+2b-d-4", 2, 2, 0, -1, -4),
            ]),
            pc("2b-3<=d<=2b-4", bd(0, 2, 0, -3), bd(0, 2, 0, -4), [
                x("2a+2b+2c-11", 2, 2, 2, 0, -11),
                x("d+1", 0, 0, 0, 1, 1),
                x("2a+2b-d-4", 2, 2, 0, -1, -4),
            ]),
        ],
    },
    PieceTable {
        name: "U2",
        pieces: &[
            pc("1<=d<=2", num(1), num(2), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+2b+2c-11", 2, 2, 2, 0, -11),
                x("2b-d-2", 0, 2, 0, -1, -2),
            ]),
            pc("3<=d<=2b-4", num(3), bd(0, 2, 0, -4), [
                x("2c+d-1", 0, 0, 2, 1, -1),
                x("2a+4b-d-8", 2, 4, 0, -1, -8),
                x("2b-d-2", 0, 2, 0, -1, -2),
            ]),
        ],
    },
    PieceTable {
        name: "P3",
        pieces: &[pc("1<=d<=2a-6", num(1), bd(2, 0, 0, -6), [
            x("2a+2c-d-7", 2, 0, 2, -1, -7),
            x("2b+2c+d-6", 0, 2, 2, 1, -6),
            x("2a+2b-d-7", 2, 2, 0, -1, -7),
        ])],
    },
    PieceTable {
        name: "Q3",
        pieces: &[pc("1<=d<=2c-6", num(1), bd(0, 0, 2, -6), [
            x("2a+2b+d-7", 2, 2, 0, 1, -7),
            x("2b+2c-d-8", 0, 2, 2, -1, -8),
            x("2a+2c-d-6", 2, 0, 2, -1, -6),
        ])],
    },
    PieceTable {
        name: "R3",
        pieces: &[pc("1<=d<=2b-6", num(1), bd(0, 2, 0, -6), [
            x("2a+2b-d-8", 2, 2, 0, -1, -8),
            x("2b+2c-d-6", 0, 2, 2, -1, -6),
            x("2a+2b+d-7", 2, 2, 0, 1, -7),
        ])],
    },
    PieceTable {
        name: "S3",
        pieces: &[pc("1<=d<=2a-6", num(1), bd(2, 0, 0, -6), [
            x("2a+2c-d-6", 2, 0, 2, -1, -6),
            x("2b+2c+d-7", 0, 2, 2, 1, -7),
            x("2a+2b-d-8", 2, 2, 0, -1, -8),
        ])],
    },
    PieceTable {
        name: "T3",
        pieces: &[pc("1<=d<=2c-6", num(1), bd(0, 0, 2, -6), [
            x("2a+2b+d-6", 2, 2, 0, 1, -6),
            x("2b+2c-d-7", 0, 2, 2, -1, -7),
            x("2a+2c-d-7", 2, 0, 2, -1, -7),
        ])],
    },
    PieceTable {
        name: "U3",
        pieces: &[pc("1<=d<=2b-6", num(1), bd(0, 2, 0, -6), [
            x("2a+2b-d-7", 2, 2, 0, -1, -7),
            x("2b+2c-d-7", 0, 2, 2, -1, -7),
            x("2a+2b+d-6", 2, 2, 0, 1, -6),
        ])],
    },
];

/// Edge-code tables for the nine rung ladders, in `RungFamily::ALL` order.
pub static RUNG_TABLES: [PieceTable; 9] = [
    PieceTable {
        name: "PS1",
        pieces: &[
            pc("1<=d<=a-2", num(1), bd(1, 0, 0, -2), [
                x("2d-1", 0, 0, 0, 2, -1),
                x("4a+2c-2d-12", 4, 0, 2, -2, -12),
                x("4a+2c+2d-18", 4, 0, 2, 2, -18),
            ]),
            pc("d=a-1", bd(1, 0, 0, -1), bd(1, 0, 0, -1), [
                x("2d-1", 0, 0, 0, 2, -1),
                x("4a+2c-2d-12", 4, 0, 2, -2, -12),
                x("2a+4b-10", 2, 4, 0, 0, -10),
            ]),
        ],
    },
    PieceTable {
        name: "QT1",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("4a+2d-13", 4, 0, 0, 2, -13),
                x("4c-2d-8", 0, 0, 4, -2, -8),
                x("2a+2b+2c-9", 2, 2, 2, 0, -9),
            ]),
            pc("1<=d<=c-1", num(1), bd(0, 0, 1, -1), [
                x("4a+2d-13", 4, 0, 0, 2, -13),
                x("4c-2d-8", 0, 0, 4, -2, -8),
                x("4a+2b+2c-2d-15", 4, 2, 2, -2, -15),
            ]),
        ],
    },
    PieceTable {
        name: "RU1",
        pieces: &[
            pc("1<=d<=b-2", num(1), bd(0, 1, 0, -2), [
                x("4a+2c+2d-16", 4, 0, 2, 2, -16),
                x("2d-1", 0, 0, 0, 2, -1),
                x("4a+2b-2d-12", 4, 2, 0, -2, -12),
            ]),
            pc("d=b-1", bd(0, 1, 0, -1), bd(0, 1, 0, -1), [
                x("4a+2c+2d-16", 4, 0, 2, 2, -16),
                x("2d-1", 0, 0, 0, 2, -1),
                x("2a+2b+2c-10", 2, 2, 2, 0, -10),
            ]),
        ],
    },
    PieceTable {
        name: "PS2",
        pieces: &[
            pc("1<=d<=a-2", num(1), bd(1, 0, 0, -2), [
                x("4b+2c+2d-13", 0, 4, 2, 2, -13),
                x("4a+2b-2d-13", 4, 2, 0, -2, -13),
                x("2d-1", 0, 0, 0, 2, -1),
            ]),
            pc("d=a-1", bd(1, 0, 0, -1), bd(1, 0, 0, -1), [
                x("2a+2b+2c-9", 2, 2, 2, 0, -9),
                x("4a+2b-2d-13", 4, 2, 0, -2, -13),
                x("2d-1", 0, 0, 0, 2, -1),
            ]),
        ],
    },
    PieceTable {
        name: "QT2",
        pieces: &[
            pc("1<=d<=c-2", num(1), bd(0, 0, 1, -2), [
                x("2d", 0, 0, 0, 2, 0),
                x("4a+2c+2d-15", 4, 0, 2, 2, -15),
                x("4c+2b-2d-11", 0, 2, 4, -2, -11),
            ]),
            pc("d=c-1", bd(0, 0, 1, -1), bd(0, 0, 1, -1), [
                x("2d", 0, 0, 0, 2, 0),
                x("2a+2b+2c-8", 2, 2, 2, 0, -8),
                x("4c+2b-2d-11", 0, 2, 4, -2, -11),
            ]),
        ],
    },
    PieceTable {
        name: "RU2",
        pieces: &[
            pc("d=1", num(1), num(1), [
                x("4c+2d-10", 0, 0, 4, 2, -10),
                x("2a+2b+2c-10", 2, 2, 2, 0, -10),
                x("4b-2d-8", 0, 4, 0, -2, -8),
            ]),
            pc("2<=d<=b-1", num(2), bd(0, 1, 0, -1), [
                x("4c+2d-10", 0, 0, 4, 2, -10),
                x("4a+2b-2d-16", 4, 2, 0, -2, -16),
                x("4b-2d-8", 0, 4, 0, -2, -8),
            ]),
        ],
    },
    PieceTable {
        name: "PS3",
        pieces: &[pc("1<=d<=a-2", num(1), bd(1, 0, 0, -2), [
            x("4a+2c-2d-15", 4, 0, 2, -2, -15),
            x("4b+2c+2d-16", 0, 4, 2, 2, -16),
            x("4a+2b-2d-16", 4, 2, 0, -2, -16),
        ])],
    },
    PieceTable {
        name: "QT3",
        pieces: &[pc("1<=d<=c-2", num(1), bd(0, 0, 1, -2), [
            x("4a+2b+2d-18", 4, 2, 0, 2, -18),
            x("4b+2c-2d-14", 0, 4, 2, -2, -14),
            x("4a+2c-2d-15", 4, 0, 2, -2, -15),
        ])],
    },
    PieceTable {
        name: "RU3",
        pieces: &[pc("1<=d<=b-2", num(1), bd(0, 1, 0, -2), [
            x("4a+2b-2d-16", 4, 2, 0, -2, -16),
            x("2b+4c-2d-13", 0, 2, 4, -2, -13),
            x("4a+2b+2d-18", 4, 2, 0, 2, -18),
        ])],
    },
];

/// Endpoint of a named special edge, exactly as printed: a family and an
/// index expression in a, b, c.
#[derive(Clone, Copy, Debug)]
pub struct PrintedEndpoint {
    pub family: Family,
    pub index_text: &'static str,
    pub index: Affine,
}

const fn ep(family: Family, index_text: &'static str, index: Affine) -> PrintedEndpoint {
    PrintedEndpoint {
        family,
        index_text,
        index,
    }
}

/// One named special edge (a cycle closer or a core connector) with its
/// printed endpoints and code triple.
#[derive(Clone, Copy, Debug)]
pub struct EtaEntry {
    pub index: u8,
    pub printed: [PrintedEndpoint; 2],
    pub coords: [CoordExpr; 3],
}

const fn eta(index: u8, e0: PrintedEndpoint, e1: PrintedEndpoint, coords: [CoordExpr; 3]) -> EtaEntry {
    EtaEntry {
        index,
        printed: [e0, e1],
        coords,
    }
}

use Family::*;

/// The twelve cycle-closing edges (group V1), in printed order, aligned with
/// `EdgeClass::Closer` indices 1..=12.
pub static V1_ETAS: [EtaEntry; 12] = [
    eta(1, ep(P1, "i", bd(2, 0, 0, -1)), ep(Q1, "1", num(1)), [
        x("2a-2", 2, 0, 0, 0, -2),
        x("2c-1", 0, 0, 2, 0, -1),
        x("2a+4b-8", 2, 4, 0, 0, -8),
    ]),
    eta(2, ep(S1, "i-2", bd(2, 0, 0, -3)), ep(T1, "1", num(1)), [
        x("2a-2", 2, 0, 0, 0, -2),
        x("2c-1", 0, 0, 2, 0, -1),
        x("2a+4b-10", 2, 4, 0, 0, -10),
    ]),
    eta(3, ep(R1, "1", num(1)), ep(Q1, "j", bd(0, 0, 2, -1)), [
        x("2a+2c-3", 2, 0, 2, 0, -3),
        x("0", 0, 0, 0, 0, 0),
        x("2a+2b-2", 2, 2, 0, 0, -2),
    ]),
    eta(4, ep(T1, "j", bd(0, 0, 2, -1)), ep(U1, "1", num(1)), [
        x("2a+2c-5", 2, 0, 2, 0, -5),
        x("2", 0, 0, 0, 0, 2),
        x("2a+2b-4", 2, 2, 0, 0, -4),
    ]),
    eta(5, ep(R1, "k", bd(0, 2, 0, -1)), ep(P2, "i", bd(2, 0, 0, -1)), [
        x("2a+2b+2c-10", 2, 2, 2, 0, -10),
        x("2b-2", 0, 2, 0, 0, -2),
        x("2a-1", 2, 0, 0, 0, -1),
    ]),
    eta(6, ep(U1, "k-2", bd(0, 2, 0, -3)), ep(S2, "i-2", bd(2, 0, 0, -3)), [
        x("2a+2b+2c-8", 2, 2, 2, 0, -8),
        x("2b-2", 0, 2, 0, 0, -2),
        x("2a-1", 2, 0, 0, 0, -1),
    ]),
    eta(7, ep(P2, "1", num(1)), ep(R2, "k", bd(0, 2, 0, -1)), [
        x("2b+2c-2", 0, 2, 2, 0, -2),
        x("2a+2b-3", 2, 2, 0, 0, -3),
        x("0", 0, 0, 0, 0, 0),
    ]),
    eta(8, ep(S2, "1", num(1)), ep(U2, "k-2", bd(0, 2, 0, -3)), [
        x("2b+2c-4", 0, 2, 2, 0, -4),
        x("2a+2b-5", 2, 2, 0, 0, -5),
        x("2", 0, 0, 0, 0, 2),
    ]),
    eta(9, ep(R2, "1", num(1)), ep(Q2, "j", bd(0, 0, 2, -1)), [
        x("2c-1", 0, 0, 2, 0, -1),
        x("2a+2b+2c-10", 2, 2, 2, 0, -10),
        x("2b-2", 0, 2, 0, 0, -2),
    ]),
    eta(10, ep(U2, "1", num(1)), ep(T2, "j-2", bd(0, 0, 2, -3)), [
        x("2c-1", 0, 0, 2, 0, -1),
        x("2a+2b+2c-8", 2, 2, 2, 0, -8),
        x("2b-4", 0, 2, 0, 0, -4),
    ]),
    eta(11, ep(P1, "1", num(1)), ep(Q2, "1", num(1)), [
        x("0", 0, 0, 0, 0, 0),
        x("2a+2c-2", 2, 0, 2, 0, -2),
        x("2a+2c-3", 2, 0, 2, 0, -3),
    ]),
    eta(12, ep(U1, "1", num(1)), ep(T2, "1", num(1)), [
        x("2", 0, 0, 0, 0, 2),
        x("2a+2c-4", 2, 0, 2, 0, -4),
        x("2b+2c-5", 0, 2, 2, 0, -5),
    ]),
];

/// The nine core attachment and hub edges (group V2), in printed order,
/// aligned with `EdgeClass::Connector` indices 1..=9. The first coordinate of
/// entry 7 is recorded untranscribable: the printed term "2b+2b" does not name
/// a sane affine form, so the audit reports it rather than guessing.
pub static V2_ETAS: [EtaEntry; 9] = [
    eta(1, ep(T2, "j-3", bd(0, 0, 2, -4)), ep(P3, "i-5", bd(2, 0, 0, -6)), [
        x("2c-2", 0, 0, 2, 0, -2),
        x("2a+2b+2c-11", 2, 2, 2, 0, -11),
        x("2b-1", 0, 2, 0, 0, -1),
    ]),
    eta(2, ep(U2, "2", num(2)), ep(S3, "i-5", bd(2, 0, 0, -6)), [
        x("2c", 0, 0, 2, 0, 0),
        x("2a+2b+2c-12", 2, 2, 2, 0, -12),
        x("2b-3", 0, 2, 0, 0, -3),
    ]),
    eta(3, ep(S2, "i-3", bd(2, 0, 0, -4)), ep(T3, "j-5", bd(0, 0, 2, -6)), [
        x("2a+2b+2c-11", 2, 2, 2, 0, -11),
        x("2b-1", 0, 2, 0, 0, -1),
        x("2a-2", 2, 0, 0, 0, -2),
    ]),
    eta(4, ep(U1, "k-3", bd(0, 2, 0, -4)), ep(Q3, "j-5", bd(0, 0, 2, -6)), [
        x("2a+2b+2c-12", 2, 2, 2, 0, -12),
        x("2b-3", 0, 2, 0, 0, -3),
        x("2a", 2, 0, 0, 0, 0),
    ]),
    eta(5, ep(T1, "2", num(2)), ep(U3, "k-5", bd(0, 2, 0, -6)), [
        x("2a-1", 2, 0, 0, 0, -1),
        x("2c-2", 0, 0, 2, 0, -2),
        x("2a+2b+2c-11", 2, 2, 2, 0, -11),
    ]),
    eta(6, ep(S1, "i-3", bd(2, 0, 0, -4)), ep(R3, "k-5", bd(0, 2, 0, -6)), [
        x("2a-3", 2, 0, 0, 0, -3),
        x("2c", 0, 0, 2, 0, 0),
        x("2a+2b+2c-12", 2, 2, 2, 0, -12),
    ]),
    eta(7, ep(P3, "1", num(1)), ep(R3, "1", num(1)), [
        unparsed("2b+2b-8"),
        x("2b+2c-8", 0, 2, 2, 0, -8),
        x("2a+2b-7", 2, 2, 0, 0, -7),
    ]),
    eta(8, ep(U3, "1", num(1)), ep(Q3, "1", num(1)), [
        x("2a+2b-7", 2, 2, 0, 0, -7),
        x("2b+2c-8", 0, 2, 2, 0, -8),
        x("2a+2b-6", 2, 2, 0, 0, -6),
    ]),
    eta(9, ep(S3, "1", num(1)), ep(T3, "1", num(1)), [
        x("2a+2c-6", 2, 0, 2, 0, -6),
        x("2b+2c-7", 0, 2, 2, 0, -7),
        x("2a+2b-8", 2, 2, 0, 0, -8),
    ]),
];

fn family_index(f: Family) -> usize {
    Family::ALL.iter().position(|&g| g == f).unwrap()
}

fn rung_index(r: RungFamily) -> usize {
    RungFamily::ALL.iter().position(|&s| s == r).unwrap()
}

pub fn vertex_table(f: Family) -> &'static PieceTable {
    &VERTEX_TABLES[family_index(f)]
}

pub fn path_edge_table(f: Family) -> &'static PieceTable {
    &PATH_EDGE_TABLES[family_index(f)]
}

pub fn rung_table(r: RungFamily) -> &'static PieceTable {
    &RUNG_TABLES[rung_index(r)]
}

/// The landmark triple all tables are written against: p1:1, r1:1, r2:2b-1.
pub fn primary_landmark_labels(p: FcsParams) -> [VertexLabel; 3] {
    [
        VertexLabel::new(P1, 1),
        VertexLabel::new(R1, 1),
        VertexLabel::new(R2, p.k()),
    ]
}

/// A second candidate triple that differs in the third landmark (r1:2b-1
/// instead of r2:2b-1); the certification suite tests both in edge mode.
pub fn alternate_landmark_labels(p: FcsParams) -> [VertexLabel; 3] {
    [
        VertexLabel::new(P1, 1),
        VertexLabel::new(R1, 1),
        VertexLabel::new(R1, p.k()),
    ]
}

/// Resolves a label triple to landmark ids on a concrete graph.
pub fn landmarks_for(lg: &LabeledGraph, labels: [VertexLabel; 3]) -> Landmarks {
    let ids = labels
        .iter()
        .map(|&l| lg.fcs_id(l).expect("landmark label in range"))
        .collect();
    Landmarks::new(ids).expect("landmark labels distinct")
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum FormulaError {
    #[error("label {0} is out of range for these parameters")]
    OutOfRange(VertexLabel),
    #[error("edge index d={d} is out of range for table {family}")]
    EdgeOutOfRange { family: &'static str, d: u32 },
    #[error("no piece of table {family} covers d={d}")]
    Uncovered { family: &'static str, d: u32 },
    #[error("coordinate {coord} of {family} is recorded untranscribable: {text:?}")]
    Untranscribable {
        family: &'static str,
        coord: usize,
        text: &'static str,
    },
}

fn eval_pieces(
    table: &'static PieceTable,
    p: FcsParams,
    d: u32,
) -> Result<[i64; 3], FormulaError> {
    let piece = table
        .pieces
        .iter()
        .find(|piece| piece.covers(p, d))
        .ok_or(FormulaError::Uncovered {
            family: table.name,
            d,
        })?;
    eval_coords(table.name, &piece.coords, p, d)
}

fn eval_coords(
    family: &'static str,
    coords: &[CoordExpr; 3],
    p: FcsParams,
    d: u32,
) -> Result<[i64; 3], FormulaError> {
    let mut out = [0i64; 3];
    for (t, coord) in coords.iter().enumerate() {
        match coord.expr {
            Some(e) => out[t] = e.eval(p, d),
            None => {
                return Err(FormulaError::Untranscribable {
                    family,
                    coord: t,
                    text: coord.text,
                })
            }
        }
    }
    Ok(out)
}

/// Predicted code of a vertex under the primary landmark triple.
pub fn predicted_vertex_code(p: FcsParams, label: VertexLabel) -> Result<[i64; 3], FormulaError> {
    if !label.in_range(p) {
        return Err(FormulaError::OutOfRange(label));
    }
    eval_pieces(vertex_table(label.family), p, label.d)
}

/// Predicted code of an edge, identified by its structural class.
pub fn predicted_edge_code(p: FcsParams, class: EdgeClass) -> Result<[i64; 3], FormulaError> {
    match class {
        EdgeClass::Path { family, d } => {
            let table = path_edge_table(family);
            if !(1..family.range(p)).contains(&d) {
                return Err(FormulaError::EdgeOutOfRange {
                    family: table.name,
                    d,
                });
            }
            eval_pieces(table, p, d)
        }
        EdgeClass::Rung { rung, d } => {
            let table = rung_table(rung);
            if !(1..=rung.range(p)).contains(&d) {
                return Err(FormulaError::EdgeOutOfRange {
                    family: table.name,
                    d,
                });
            }
            eval_pieces(table, p, d)
        }
        EdgeClass::Closer { index } => {
            let entry = &V1_ETAS[index as usize - 1];
            eval_coords("V1", &entry.coords, p, 0)
        }
        EdgeClass::Connector { index } => {
            let entry = &V2_ETAS[index as usize - 1];
            eval_coords("V2", &entry.coords, p, 0)
        }
    }
}

/// One predicted coordinate in a report entry: verbatim text plus its value
/// where the expression parsed.
#[derive(Clone, Copy, Debug)]
pub struct PredCoord {
    pub text: &'static str,
    pub value: Option<i64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EntryStatus {
    Match,
    Mismatch,
    Untranscribable,
    Uncovered,
}

impl EntryStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryStatus::Match => "match",
            EntryStatus::Mismatch => "mismatch",
            EntryStatus::Untranscribable => "untranscribable",
            EntryStatus::Uncovered => "uncovered",
        }
    }
}

impl fmt::Display for EntryStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Audit record for one vertex or edge.
#[derive(Clone, Debug)]
pub struct ErrataEntry {
    pub family: &'static str,
    /// Label text of the vertex, or `"x -- y"` for an edge.
    pub object: String,
    pub d: Option<u32>,
    /// Index of the matching piece within the family (for the eta groups,
    /// the zero-based entry index).
    pub piece: Option<usize>,
    /// `None` when no piece covers the object.
    pub predicted: Option<[PredCoord; 3]>,
    pub oracle: [u32; 3],
    pub status: EntryStatus,
    /// Extra finding, e.g. printed endpoints that name no edge of the graph.
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct PieceStats {
    pub piece: usize,
    pub range_text: String,
    pub objects: usize,
    pub matches: usize,
}

#[derive(Clone, Debug)]
pub struct FamilyStats {
    pub name: &'static str,
    pub objects: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub untranscribable: usize,
    pub uncovered: usize,
    pub pieces: Vec<PieceStats>,
}

impl FamilyStats {
    fn new(name: &'static str, piece_ranges: Vec<String>) -> Self {
        FamilyStats {
            name,
            objects: 0,
            matches: 0,
            mismatches: 0,
            untranscribable: 0,
            uncovered: 0,
            pieces: piece_ranges
                .into_iter()
                .enumerate()
                .map(|(piece, range_text)| PieceStats {
                    piece,
                    range_text,
                    objects: 0,
                    matches: 0,
                })
                .collect(),
        }
    }

    fn record(&mut self, piece: Option<usize>, status: EntryStatus) {
        self.objects += 1;
        match status {
            EntryStatus::Match => self.matches += 1,
            EntryStatus::Mismatch => self.mismatches += 1,
            EntryStatus::Untranscribable => self.untranscribable += 1,
            EntryStatus::Uncovered => self.uncovered += 1,
        }
        if let Some(idx) = piece {
            let stats = &mut self.pieces[idx];
            stats.objects += 1;
            if status == EntryStatus::Match {
                stats.matches += 1;
            }
        }
    }
}

/// Full audit of one mode's tables at one parameter instance. Every vertex
/// (or edge) is audited against exactly one family; `entries` keeps all
/// non-matching records plus any with endpoint notes, while matches are only
/// counted in the per-family stats.
#[derive(Clone, Debug)]
pub struct ErrataReport {
    pub params: FcsParams,
    pub mode: Mode,
    pub total_objects: usize,
    pub families: Vec<FamilyStats>,
    pub entries: Vec<ErrataEntry>,
}

impl ErrataReport {
    pub fn totals(&self) -> (usize, usize, usize, usize) {
        self.families.iter().fold((0, 0, 0, 0), |acc, f| {
            (
                acc.0 + f.matches,
                acc.1 + f.mismatches,
                acc.2 + f.untranscribable,
                acc.3 + f.uncovered,
            )
        })
    }
}

fn classify(predicted: Option<&[PredCoord; 3]>, oracle: [u32; 3]) -> EntryStatus {
    match predicted {
        None => EntryStatus::Uncovered,
        Some(coords) => {
            if coords.iter().any(|c| c.value.is_none()) {
                EntryStatus::Untranscribable
            } else if coords
                .iter()
                .zip(oracle)
                .all(|(c, o)| c.value == Some(o as i64))
            {
                EntryStatus::Match
            } else {
                EntryStatus::Mismatch
            }
        }
    }
}

fn pred_coords(coords: &[CoordExpr; 3], p: FcsParams, d: u32) -> [PredCoord; 3] {
    let mut out = [PredCoord {
        text: "",
        value: None,
    }; 3];
    for (t, coord) in coords.iter().enumerate() {
        out[t] = PredCoord {
            text: coord.text,
            value: coord.expr.map(|e| e.eval(p, d)),
        };
    }
    out
}

fn to_triple(code: Vec<u32>) -> [u32; 3] {
    <[u32; 3]>::try_from(code).expect("three landmarks")
}

/// Checks the printed endpoints of a special edge against the graph; returns
/// a note when they do not name the audited edge.
fn endpoint_note(lg: &LabeledGraph, entry: &EtaEntry, actual: Edge) -> Option<String> {
    let p = lg.params().expect("FCS graph");
    let printed_name = |pe: &PrintedEndpoint| format!("{}:{}", pe.family, pe.index.eval(p, 0));
    let printed = format!(
        "{} -- {}",
        printed_name(&entry.printed[0]),
        printed_name(&entry.printed[1])
    );
    let resolve = |pe: &PrintedEndpoint| {
        let idx = pe.index.eval(p, 0);
        if idx < 1 {
            return None;
        }
        lg.fcs_id(VertexLabel::new(pe.family, idx as u32))
    };
    let (lu, lv) = lg.endpoint_labels(actual);
    let audited = format!("{lu} -- {lv}");
    match (resolve(&entry.printed[0]), resolve(&entry.printed[1])) {
        (Some(x), Some(y)) => {
            if lg.graph().has_edge(x, y) {
                if Edge::new(x, y) == actual {
                    None
                } else {
                    Some(format!(
                        "printed endpoints {printed} name a different edge; audited {audited}"
                    ))
                }
            } else {
                Some(format!(
                    "nonexistent edge: printed endpoints {printed} are not adjacent; audited {audited}"
                ))
            }
        }
        _ => Some(format!(
            "nonexistent edge: printed endpoints {printed} include an out-of-range vertex; audited {audited}"
        )),
    }
}

/// Diffs every vertex (or edge) code against its table prediction.
///
/// Panics if `lg` is not an FCS graph. The object walk is fixed (families in
/// enumeration order, ascending d; then rungs, closers, connectors for edge
/// mode), so reports are deterministic and cover each object exactly once.
pub fn verify_formulas(lg: &LabeledGraph, mode: Mode) -> ErrataReport {
    let p = lg.params().expect("formula audit requires an FCS graph");
    let dm = all_pairs_distances(lg.graph());
    let landmarks = landmarks_for(lg, primary_landmark_labels(p));
    let mut families = Vec::new();
    let mut entries = Vec::new();
    let mut total = 0usize;

    let mut push_entry = |families: &mut Vec<FamilyStats>,
                          entry: ErrataEntry,
                          piece: Option<usize>| {
        let stats = families.last_mut().unwrap();
        stats.record(piece, entry.status);
        if entry.status != EntryStatus::Match || entry.note.is_some() {
            entries.push(entry);
        }
    };

    match mode {
        Mode::Vertex => {
            for family in Family::ALL {
                let table = vertex_table(family);
                families.push(FamilyStats::new(
                    table.name,
                    table.pieces.iter().map(|pc| pc.range_text.to_string()).collect(),
                ));
                for d in 1..=family.range(p) {
                    let label = VertexLabel::new(family, d);
                    let v = lg.fcs_id(label).unwrap();
                    let oracle = to_triple(vertex_code(&dm, &landmarks, v));
                    let piece = table.pieces.iter().position(|pc| pc.covers(p, d));
                    let predicted =
                        piece.map(|idx| pred_coords(&table.pieces[idx].coords, p, d));
                    let status = classify(predicted.as_ref(), oracle);
                    push_entry(
                        &mut families,
                        ErrataEntry {
                            family: table.name,
                            object: label.to_string(),
                            d: Some(d),
                            piece,
                            predicted,
                            oracle,
                            status,
                            note: None,
                        },
                        piece,
                    );
                    total += 1;
                }
            }
            assert_eq!(total, lg.graph().vertex_count(), "vertex tables must partition V");
        }
        Mode::Edge => {
            let by_class: BTreeMap<EdgeClass, Edge> = lg
                .graph()
                .edges()
                .iter()
                .map(|&e| (lg.edge_class(e).expect("classified edge"), e))
                .collect();
            assert_eq!(
                by_class.len(),
                lg.graph().edge_count(),
                "edge classes must be unique"
            );
            let mut audit_edge = |families: &mut Vec<FamilyStats>,
                                  family: &'static str,
                                  class: EdgeClass,
                                  d: Option<u32>,
                                  piece: Option<usize>,
                                  coords: Option<&[CoordExpr; 3]>,
                                  note_entry: Option<&EtaEntry>| {
                let e = by_class[&class];
                let oracle = to_triple(edge_code(&dm, &landmarks, e));
                let (lu, lv) = lg.endpoint_labels(e);
                let predicted = coords.map(|c| pred_coords(c, p, d.unwrap_or(0)));
                let status = classify(predicted.as_ref(), oracle);
                let note = note_entry.and_then(|entry| endpoint_note(lg, entry, e));
                push_entry(
                    families,
                    ErrataEntry {
                        family,
                        object: format!("{lu} -- {lv}"),
                        d,
                        piece,
                        predicted,
                        oracle,
                        status,
                        note,
                    },
                    piece,
                );
            };

            for family in Family::ALL {
                let table = path_edge_table(family);
                families.push(FamilyStats::new(
                    table.name,
                    table.pieces.iter().map(|pc| pc.range_text.to_string()).collect(),
                ));
                for d in 1..family.range(p) {
                    let piece = table.pieces.iter().position(|pc| pc.covers(p, d));
                    let coords = piece.map(|idx| &table.pieces[idx].coords);
                    audit_edge(
                        &mut families,
                        table.name,
                        EdgeClass::Path { family, d },
                        Some(d),
                        piece,
                        coords,
                        None,
                    );
                    total += 1;
                }
            }
            for rung in RungFamily::ALL {
                let table = rung_table(rung);
                families.push(FamilyStats::new(
                    table.name,
                    table.pieces.iter().map(|pc| pc.range_text.to_string()).collect(),
                ));
                for d in 1..=rung.range(p) {
                    let piece = table.pieces.iter().position(|pc| pc.covers(p, d));
                    let coords = piece.map(|idx| &table.pieces[idx].coords);
                    audit_edge(
                        &mut families,
                        table.name,
                        EdgeClass::Rung { rung, d },
                        Some(d),
                        piece,
                        coords,
                        None,
                    );
                    total += 1;
                }
            }
            families.push(FamilyStats::new(
                "V1",
                V1_ETAS.iter().map(|e| format!("eta {}", e.index)).collect(),
            ));
            for (idx, entry) in V1_ETAS.iter().enumerate() {
                audit_edge(
                    &mut families,
                    "V1",
                    EdgeClass::Closer {
                        index: entry.index,
                    },
                    None,
                    Some(idx),
                    Some(&entry.coords),
                    Some(entry),
                );
                total += 1;
            }
            families.push(FamilyStats::new(
                "V2",
                V2_ETAS.iter().map(|e| format!("eta {}", e.index)).collect(),
            ));
            for (idx, entry) in V2_ETAS.iter().enumerate() {
                audit_edge(
                    &mut families,
                    "V2",
                    EdgeClass::Connector {
                        index: entry.index,
                    },
                    None,
                    Some(idx),
                    Some(&entry.coords),
                    Some(entry),
                );
                total += 1;
            }
            assert_eq!(total, lg.graph().edge_count(), "edge tables must partition E");
        }
    }

    ErrataReport {
        params: p,
        mode,
        total_objects: total,
        families,
        entries,
    }
}

/// The four audit instances used for the span argument. Affine functions of
/// (a, b, c) agreeing on these four (affinely independent) points agree
/// everywhere, so a piece that is affine and matches the oracle at all four
/// is verified throughout its regime.
pub const SPAN_INSTANCES: [(u32, u32, u32); 4] = [(4, 4, 4), (5, 5, 5), (4, 5, 6), (6, 4, 5)];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpanStatus {
    /// Affine, populated and fully matching at all four span instances.
    VerifiedBySpan,
    /// Affine and matching wherever populated, but empty at some instance,
    /// so the span argument does not apply to the missing regime.
    VerifiedAtTestedSizes,
    /// At least one audited object under this piece does not match.
    HasErrata,
    /// The printed range selects no object at any tested instance.
    NeverPopulated,
}

impl SpanStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SpanStatus::VerifiedBySpan => "verified for all a,b,c >= 4 (affine span)",
            SpanStatus::VerifiedAtTestedSizes => "verified at tested sizes only",
            SpanStatus::HasErrata => "has errata",
            SpanStatus::NeverPopulated => "never populated",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpanVerdict {
    pub family: &'static str,
    pub piece: usize,
    pub range_text: String,
    pub affine: bool,
    pub status: SpanStatus,
}

/// Audits one mode at all four span instances and renders a per-piece
/// verdict.
pub fn span_audit(mode: Mode) -> Vec<SpanVerdict> {
    use crate::generators::build_fcs;
    let reports: Vec<ErrataReport> = SPAN_INSTANCES
        .iter()
        .map(|&(a, b, c)| {
            let p = FcsParams::new(a, b, c).unwrap();
            verify_formulas(&build_fcs(p), mode)
        })
        .collect();
    let affine_of = |family: &str, piece: usize| -> bool {
        let from_table = |tables: &'static [PieceTable]| {
            tables
                .iter()
                .find(|t| t.name == family)
                .map(|t| t.pieces[piece].coords.iter().all(|c| c.expr.is_some()))
        };
        match family {
            "V1" => V1_ETAS[piece].coords.iter().all(|c| c.expr.is_some()),
            "V2" => V2_ETAS[piece].coords.iter().all(|c| c.expr.is_some()),
            _ => match mode {
                Mode::Vertex => from_table(&VERTEX_TABLES).unwrap(),
                Mode::Edge => from_table(&PATH_EDGE_TABLES)
                    .or_else(|| from_table(&RUNG_TABLES))
                    .unwrap(),
            },
        }
    };
    let mut verdicts = Vec::new();
    // All four reports list identical families and pieces, in order.
    for (fidx, fam) in reports[0].families.iter().enumerate() {
        for (pidx, piece) in fam.pieces.iter().enumerate() {
            let mut populated_everywhere = true;
            let mut populated_somewhere = false;
            let mut clean = true;
            for report in &reports {
                let stats = &report.families[fidx].pieces[pidx];
                if stats.objects == 0 {
                    populated_everywhere = false;
                } else {
                    populated_somewhere = true;
                    if stats.matches != stats.objects {
                        clean = false;
                    }
                }
            }
            let affine = affine_of(fam.name, pidx);
            let status = if !populated_somewhere {
                SpanStatus::NeverPopulated
            } else if !clean {
                SpanStatus::HasErrata
            } else if affine && populated_everywhere {
                SpanStatus::VerifiedBySpan
            } else {
                SpanStatus::VerifiedAtTestedSizes
            };
            verdicts.push(SpanVerdict {
                family: fam.name,
                piece: pidx,
                range_text: piece.range_text.clone(),
                affine,
                status,
            });
        }
    }
    verdicts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::build_fcs;

    fn params(a: u32, b: u32, c: u32) -> FcsParams {
        FcsParams::new(a, b, c).unwrap()
    }

    fn label(text: &str) -> VertexLabel {
        text.parse().unwrap()
    }

    #[test]
    fn predicted_vertex_examples() {
        let p = params(4, 4, 4);
        assert_eq!(predicted_vertex_code(p, label("p1:1")), Ok([0, 14, 14]));
        assert_eq!(predicted_vertex_code(p, label("r1:1")), Ok([14, 0, 14]));
        assert_eq!(predicted_vertex_code(p, label("p3:1")), Ok([9, 11, 11]));
        assert!(matches!(
            predicted_vertex_code(p, label("p1:8")),
            Err(FormulaError::OutOfRange(_))
        ));
    }

    #[test]
    fn zero_positions_pin_landmark_order() {
        for (a, b, c) in [(4, 4, 4), (5, 6, 4)] {
            let p = params(a, b, c);
            let [l0, l1, l2] = primary_landmark_labels(p);
            assert_eq!(predicted_vertex_code(p, l0).unwrap()[0], 0);
            assert_eq!(predicted_vertex_code(p, l1).unwrap()[1], 0);
            assert_eq!(predicted_vertex_code(p, l2).unwrap()[2], 0);
        }
    }

    #[test]
    fn predicted_edge_examples() {
        let p = params(4, 4, 4);
        assert_eq!(
            predicted_edge_code(p, EdgeClass::Closer { index: 11 }),
            Ok([0, 14, 13])
        );
        assert_eq!(
            predicted_edge_code(p, EdgeClass::Closer { index: 7 }),
            Ok([14, 13, 0])
        );
        assert_eq!(
            predicted_edge_code(p, EdgeClass::Path { family: R1, d: 1 }),
            Ok([13, 0, 14])
        );
        assert!(matches!(
            predicted_edge_code(p, EdgeClass::Connector { index: 7 }),
            Err(FormulaError::Untranscribable { text: "2b+2b-8", .. })
        ));
    }

    #[test]
    fn printed_gap_surfaces_as_uncovered() {
        // The U1 edge table's second piece has an empty printed range
        // (lo 2b-3 exceeds hi 2b-4), leaving d in {2b-5, 2b-4} uncovered.
        let p = params(4, 4, 4);
        assert_eq!(
            predicted_edge_code(p, EdgeClass::Path { family: U1, d: 3 }),
            Err(FormulaError::Uncovered { family: "U1", d: 3 })
        );
        assert_eq!(
            predicted_edge_code(p, EdgeClass::Path { family: U1, d: 2 }),
            Ok([13, 3, 10])
        );
    }

    #[test]
    fn vertex_report_covers_everything_once() {
        let lg = build_fcs(params(4, 4, 4));
        let report = verify_formulas(&lg, Mode::Vertex);
        assert_eq!(report.total_objects, 90);
        assert_eq!(
            report.families.iter().map(|f| f.objects).sum::<usize>(),
            90
        );
        let (matches, mismatches, untr, uncov) = report.totals();
        assert_eq!(matches + mismatches + untr + uncov, 90);
        assert_eq!(untr, 0);
        assert_eq!(uncov, 0);
        // The core P3 row predicts (9, 11, 11) at d=1 but the oracle code is
        // (9, 11, 9), so P3 must carry at least one mismatch.
        let p3 = report.families.iter().find(|f| f.name == "P3").unwrap();
        assert!(p3.mismatches >= 1);
        assert!(report
            .entries
            .iter()
            .any(|e| e.family == "P3" && e.object == "p3:1" && e.oracle == [9, 11, 9]));
    }

    #[test]
    fn edge_report_covers_everything_once() {
        let lg = build_fcs(params(4, 4, 4));
        let report = verify_formulas(&lg, Mode::Edge);
        assert_eq!(report.total_objects, 117);
        assert_eq!(
            report.families.iter().map(|f| f.objects).sum::<usize>(),
            117
        );
        let (_, _, untr, uncov) = report.totals();
        // eta 7 of V2 is untranscribable; U1's printed gap covers d=3,4 at b=4.
        assert_eq!(untr, 1);
        assert_eq!(uncov, 2);
        let notes: Vec<_> = report
            .entries
            .iter()
            .filter(|e| e.note.as_deref().is_some_and(|n| n.contains("nonexistent")))
            .map(|e| (e.family, e.piece.unwrap() + 1))
            .collect();
        // Printed endpoints fail to name an edge for closers 4 and 12 and all
        // six core tip attachments.
        assert_eq!(
            notes,
            [
                ("V1", 4),
                ("V1", 12),
                ("V2", 1),
                ("V2", 2),
                ("V2", 3),
                ("V2", 4),
                ("V2", 5),
                ("V2", 6),
            ]
        );
    }

    #[test]
    fn reports_are_deterministic() {
        let lg = build_fcs(params(4, 5, 6));
        let r1 = verify_formulas(&lg, Mode::Edge);
        let r2 = verify_formulas(&lg, Mode::Edge);
        assert_eq!(r1.entries.len(), r2.entries.len());
        for (x, y) in r1.entries.iter().zip(&r2.entries) {
            assert_eq!(x.object, y.object);
            assert_eq!(x.status, y.status);
        }
    }
}
