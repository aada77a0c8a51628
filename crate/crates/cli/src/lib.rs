//! Std companion to `pathpower-core`: wall-clock budgets, multi-threaded
//! exhaustive search, graph6 files, JSON/CSV reports and the `pathpower`
//! command line.

pub mod budget;
pub mod cli;
pub mod dto;
pub mod io;
pub mod parallel;
pub mod report;
pub mod verify;

pub use pathpower_core as core;
