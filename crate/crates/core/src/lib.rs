//! Exact computations for depth-two algebra extensions.

pub mod algebra;
pub mod bialgebroid;
pub mod characterization;
pub mod comodule;
pub mod corollaries;
pub mod corpus;
pub mod depth2;
pub mod duality;
pub mod dump;
pub mod error;
pub mod extension;
pub mod groups;
pub mod hopf;
pub mod io;
pub mod hom;
pub mod linalg;
pub mod opposite;
pub mod pipeline;
pub mod properties;
pub mod tensor;
pub mod tower;

pub use error::{Error, Result};
