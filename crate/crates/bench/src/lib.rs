//! Shared fixtures for the criterion benches.

use adnil::ideals::enumerate_ideals;
use adnil::{RootSystem, UpperIdeal};

/// Types small enough to sweep exhaustively inside a bench iteration.
pub const SWEEP_TYPES: [&str; 6] = ["A4", "B3", "C3", "D4", "G2", "F4"];

/// Types whose ideal enumeration alone is the workload.
pub const ENUMERATION_TYPES: [&str; 4] = ["D5", "E6", "E7", "E8"];

pub fn system(label: &str) -> RootSystem {
    RootSystem::build(label.parse().expect("bench labels parse")).expect("bench types build")
}

pub fn ideals(label: &str) -> (RootSystem, Vec<UpperIdeal>) {
    let rs = system(label);
    let all = enumerate_ideals(&rs);
    (rs, all)
}
