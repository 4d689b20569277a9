//! Bioriented flag resolutions of Schubert varieties, verified point by point
//! over prime fields.

pub mod biflag;
pub mod bottsamelson;
pub mod building;
pub mod embres;
pub mod error;
pub mod exactlin;
pub mod grassfib;
pub mod permcomb;
pub mod report;
pub mod suite;
pub mod wflag;

pub use error::{Error, Result};
