pub mod linalg;
pub mod poset;
pub mod homalg;
pub mod analysis;
pub mod cli;
