//! Upper bounds and exact search for transitive subtournaments of digraphs.
//!
//! * [`digraph`], [`field`] and [`io`] build, classify and read digraphs,
//!   including Paley tournaments over any `GF(q)` with `q ≡ 3 (mod 4)`.
//! * [`spectral`] computes the Seidel spectrum with main angles.
//! * [`bounds`] turns spectra into interlacing and Hoffman-type bounds, and
//!   [`bip`] adds exact polynomial bounds for doubly regular tournaments.
//! * [`search`] finds a largest transitive subtournament exactly.
//! * [`cli`] backs the `tb` binary.
//!
//! ```
//! use tournament_bounds::{bounds::best_bound, field::paley_of_order, search::max_transitive_bb};
//!
//! let g = paley_of_order(23).unwrap();
//! assert_eq!(best_bound(&g).unwrap().best, 6);
//! assert_eq!(max_transitive_bb(&g, None).max_size, 5);
//! ```

pub mod bip;
pub mod bitset;
pub mod bounds;
pub mod cli;
pub mod digraph;
pub mod field;
pub mod io;
pub mod linalg;
pub mod search;
pub mod spectral;
