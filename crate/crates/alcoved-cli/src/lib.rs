//! Library half of the command line frontend: matrix file parsing and the
//! versioned classification report. The binary in `main.rs` is a thin shell
//! over these modules; tests exercise the report round trip directly.

pub mod input;
pub mod report;
