pub mod algebra;
pub mod arith;
pub mod error;
pub mod keel;
pub mod report;
pub mod strata;
pub mod forget;
pub mod zeta;
pub mod getzler;
pub mod cli;
