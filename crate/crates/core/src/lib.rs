//! Exact construction, incidence enumeration and measurement of the
//! tesseract, the 120-cell and the 600-cell.

pub mod builder;
pub mod complexes;
pub mod error;
pub mod exactnum;
pub mod locator;
pub mod metrics;
pub mod paperdata;
pub mod projector;
pub mod symmetry;

pub use error::{Error, Result};
