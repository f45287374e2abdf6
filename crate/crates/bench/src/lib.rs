//! Shared fixtures for the benchmarks.

use hessarr_core::lowerideal::{enumerate_lower_ideals, LowerIdeal};
use hessarr_core::rootsystem::{
    enumerate_weyl_group, Family, RootSystem, RootSystemType, WeylGroup, DEFAULT_WEYL_BOUND,
};

pub struct Fixture {
    pub rs: RootSystem,
    pub wg: WeylGroup,
    pub ideals: Vec<LowerIdeal>,
}

pub fn fixture(family: Family, rank: usize) -> Fixture {
    let rs = RootSystem::build(RootSystemType::new(family, rank)).unwrap();
    let wg = enumerate_weyl_group(&rs, DEFAULT_WEYL_BOUND).unwrap();
    let ideals = enumerate_lower_ideals(&rs, 30).unwrap();
    Fixture { rs, wg, ideals }
}
