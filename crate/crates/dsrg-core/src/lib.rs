//! Exact arithmetic for directed strongly regular Cayley graphs (DSRGs) over
//! finite groups: group engines, integer group rings, character-theoretic
//! spectra, nonexistence obstructions, semidirect-product constructions, and
//! dihedral constructions with exhaustive search.
//!
//! Everything is computed over the integers or over cyclotomic fields; there
//! is no floating point anywhere in this crate.

pub mod cayley;
pub mod chartab;
pub mod cyclo;
pub mod dihedral;
pub mod error;
pub mod group;
pub mod matrix;
pub mod obstruction;
pub mod params;
pub mod poly;
pub mod ring;
pub mod semidirect;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
