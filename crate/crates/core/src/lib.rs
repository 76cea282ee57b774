//! Exact computations with axial algebras, Fischer spaces, 3-transposition
//! groups and their modules.

pub mod algebra;
pub mod exactlin;
pub mod geometry;
pub mod groups;
pub mod io;
pub mod modules;
pub mod universal;
