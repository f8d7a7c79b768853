pub mod algebra;
pub mod complex;
pub mod derived;
pub mod error;
pub mod io;
pub mod linalg;
pub mod resolution;
pub mod samples;
pub mod validate;
