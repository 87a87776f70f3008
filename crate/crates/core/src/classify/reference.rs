/// Published regularity: exact, or only a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefReg {
    Exact(usize),
    AtLeast(usize),
}

impl RefReg {
    pub fn admits(&self, reg: usize) -> bool {
        match *self {
            RefReg::Exact(r) => r == reg,
            RefReg::AtLeast(r) => reg >= r,
        }
    }
}

impl std::fmt::Display for RefReg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RefReg::Exact(r) => write!(f, "{r}"),
            RefReg::AtLeast(r) => write!(f, ">={r}"),
        }
    }
}

/// One row of the published invariant table. `projdim` and `reg` refer to
/// the ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceRow {
    pub name: &'static str,
    pub edges: usize,
    pub mindeg: usize,
    pub maxdeg: usize,
    pub projdim: usize,
    pub reg: RefReg,
    pub cm: bool,
    pub normal: bool,
    pub gorenstein: bool,
    pub ci: bool,
    pub n1: bool,
}

const fn row(
    name: &'static str,
    nums: [usize; 4],
    reg: RefReg,
    flags: [bool; 5],
) -> ReferenceRow {
    ReferenceRow {
        name,
        edges: nums[0],
        mindeg: nums[1],
        maxdeg: nums[2],
        projdim: nums[3],
        reg,
        cm: flags[0],
        normal: flags[1],
        gorenstein: flags[2],
        ci: flags[3],
        n1: flags[4],
    }
}

use RefReg::{AtLeast, Exact};
const Y: bool = true;
const N: bool = false;

#[rustfmt::skip]
static ROWS: [ReferenceRow; 31] = [
    row("P3",        [2, 2, 2, 0],  Exact(2),   [Y, Y, Y, Y, Y]),
    row("2K2",       [2, 1, 2, 4],  Exact(2),   [Y, Y, Y, Y, N]),
    row("P4",        [3, 2, 2, 3],  Exact(3),   [Y, Y, Y, N, Y]),
    row("K1_3",      [3, 2, 2, 3],  Exact(3),   [Y, Y, Y, N, Y]),
    row("K2#K1#K3",  [4, 2, 2, 2],  Exact(2),   [Y, Y, N, N, Y]),
    row("C4",        [4, 2, 2, 2],  Exact(4),   [Y, Y, Y, Y, N]),
    row("K4-e",      [5, 2, 2, 1],  Exact(3),   [Y, Y, Y, Y, N]),
    row("K4",        [6, 4, 4, 0],  Exact(4),   [Y, Y, Y, Y, N]),
    row("K2+P3",     [3, 1, 2, 11], Exact(3),   [Y, Y, Y, N, N]),
    row("K2+K3",     [4, 1, 2, 10], Exact(2),   [Y, Y, N, N, N]),
    row("P5",        [4, 2, 2, 10], Exact(4),   [Y, Y, Y, N, Y]),
    row("K1_4",      [4, 2, 2, 10], Exact(4),   [Y, Y, Y, N, Y]),
    row("G1",        [4, 2, 2, 10], Exact(4),   [Y, Y, Y, N, Y]),
    row("G2",        [5, 2, 2, 9],  Exact(3),   [Y, Y, N, N, Y]),
    row("G3",        [5, 2, 2, 9],  Exact(3),   [Y, Y, N, N, Y]),
    row("G4",        [5, 2, 2, 9],  Exact(3),   [Y, Y, N, N, Y]),
    row("K2#K1#C4",  [5, 2, 2, 9],  Exact(5),   [Y, Y, Y, N, N]),
    row("C5",        [5, 2, 2, 9],  Exact(4),   [Y, Y, N, N, N]),
    row("K3#K1#K3",  [6, 2, 2, 8],  Exact(4),   [Y, Y, Y, N, Y]),
    row("G5",        [6, 2, 2, 8],  Exact(4),   [Y, Y, N, N, N]),
    row("G6",        [6, 2, 2, 8],  Exact(4),   [Y, Y, N, N, N]),
    row("K3#K2#C4",  [6, 2, 2, 8],  Exact(5),   [Y, Y, N, N, N]),
    row("C4#P3#C4",  [6, 2, 2, 8],  Exact(6),   [Y, Y, Y, N, N]),
    row("G7",        [7, 2, 2, 7],  Exact(5),   [Y, Y, Y, N, N]),
    row("G8",        [7, 2, 2, 7],  Exact(5),   [Y, Y, Y, N, N]),
    row("K2#K1#K4",  [7, 2, 4, 7],  Exact(5),   [Y, Y, N, N, N]),
    row("G9",        [7, 2, 2, 7],  Exact(5),   [Y, Y, N, N, N]),
    row("K3#K2#K4",  [8, 2, 4, 6],  Exact(5),   [Y, Y, Y, N, N]),
    row("G10",       [8, 2, 2, 6],  Exact(6),   [Y, Y, N, N, N]),
    row("K5-e",      [9, 2, 4, 5],  Exact(7),   [Y, Y, Y, N, N]),
    row("K5",        [10, 4, 6, 14], AtLeast(6), [N, N, N, N, N]),
];

/// The published rows, in table order.
pub fn reference_rows() -> &'static [ReferenceRow] {
    &ROWS
}
