use core::fmt;

use crate::C64;

/// The first entry at which two invariants disagree.
#[derive(Clone, Debug, PartialEq)]
pub enum Mismatch {
    RankProfile,
    FrameGraph,
    Forest,
    TwoProduct { i: usize, j: usize, left: f64, right: f64 },
    CycleProduct { cycle: usize, left: C64, right: C64 },
    CanonicalEntry { row: usize, col: usize, left: f64, right: f64 },
    Branch,
    WordCount { left: usize, right: usize },
    Word { index: usize },
    PairTrace { i: usize, j: usize, left: C64, right: C64 },
    TripleTrace { key: (usize, usize, usize), left: C64, right: C64 },
    GeneratorTrace { word: usize, generator: usize, left: C64, right: C64 },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::RankProfile => write!(f, "rank profiles differ"),
            Mismatch::FrameGraph => write!(f, "frame graphs differ"),
            Mismatch::Forest => write!(f, "canonical spanning forests differ"),
            Mismatch::TwoProduct { i, j, left, right } => {
                write!(f, "2-product ({}, {}) differs: {left} vs {right}", i + 1, j + 1)
            }
            Mismatch::CycleProduct { cycle, left, right } => {
                write!(f, "cycle product #{} differs: {left} vs {right}", cycle + 1)
            }
            Mismatch::CanonicalEntry { row, col, left, right } => {
                write!(f, "canonical Gramian entry ({}, {}) differs: {left} vs {right}", row + 1, col + 1)
            }
            Mismatch::Branch => write!(f, "canonical Gramians came from different branches"),
            Mismatch::WordCount { left, right } => {
                write!(f, "algebra dimensions differ: {left} vs {right}")
            }
            Mismatch::Word { index } => write!(f, "basis word #{} differs", index + 1),
            Mismatch::PairTrace { i, j, left, right } => {
                write!(f, "tr(E{}* E{}) differs: {left} vs {right}", i + 1, j + 1)
            }
            Mismatch::TripleTrace { key, left, right } => {
                write!(f, "tr(E{}* E{} E{}) differs: {left} vs {right}", key.0 + 1, key.1 + 1, key.2 + 1)
            }
            Mismatch::GeneratorTrace { word, generator, left, right } => {
                write!(f, "tr(E{}* A{}) differs: {left} vs {right}", word + 1, generator + 1)
            }
        }
    }
}
