//! Library half of the workbench CLI: named builtins, file formats,
//! scenario pipelines, and the acceptance suite. The binary in
//! `main.rs` is a thin argument layer over these modules, and the
//! `acceptance` integration test drives [`acceptance::run_all`]
//! directly.

pub mod acceptance;
pub mod builtins;
pub mod formats;
pub mod report;
pub mod scenario;
