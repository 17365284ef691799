//! Fixtures shared by the benchmarks.

use regwide::closedsets::enumerate_closed_subsets;
use regwide::{ClosedSubset, RootSystem, TypeLetter};

pub fn system(letter: TypeLetter, rank: usize) -> RootSystem {
    RootSystem::new(letter, rank).expect("supported root system")
}

/// Every closed subset of `rs`, paired with the system.
pub fn census(letter: TypeLetter, rank: usize) -> (RootSystem, Vec<ClosedSubset>) {
    let rs = system(letter, rank);
    let subsets = enumerate_closed_subsets(&rs).expect("enumeration fits");
    (rs, subsets)
}

/// Every `step`-th closed subset, for benchmarks too slow to run on all.
pub fn sample(subsets: &[ClosedSubset], step: usize) -> Vec<ClosedSubset> {
    subsets.iter().step_by(step.max(1)).cloned().collect()
}
