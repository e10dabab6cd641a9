mod common;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

proptest! {
    #![proptest_config(Config { cases: 10_000, rng_seed: RngSeed::Fixed(0x5eed_0004), failure_persistence: None, ..Config::default() })]

    #[test]
    fn every_format_round_trips(case in common::format_case()) {
        common::round_trips(&case)?;
    }
}
