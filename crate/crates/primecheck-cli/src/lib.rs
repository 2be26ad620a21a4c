//! Building blocks of the `primecheck` binary: input parsing and the
//! benchmark suites with their CSV record format.

pub mod bench;
pub mod input;
