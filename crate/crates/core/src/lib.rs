//! Rooted maps on orientable surfaces, their blossoming bijections, scheme
//! decompositions and exact bivariate generating series.
//!
//! Modules, bottom-up:
//! - [`map_core`]: rotation systems, faces, bicolorings, orientations, radial maps;
//! - [`oracle_enum`]: exhaustive enumeration used as ground truth;
//! - [`blossoming`]: blossoming maps, canonical labelings, closures, good maps;
//! - [`core_scheme`]: cores, schemes, labeled schemes and their statistics;
//! - [`motzkin`]: weighted Motzkin walks and typed branches;
//! - [`series_engine`]: exact series, rational functions and the rationality pipeline.

pub mod blossoming;
pub mod core_scheme;
pub mod error;
pub mod map_core;
pub mod motzkin;
pub mod oracle_enum;
pub mod perm;
pub mod series_engine;
pub(crate) mod text;

pub use error::{Error, Result};
pub use map_core::{FaceColoring, Orientation, RootedMap};
